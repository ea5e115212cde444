//! The JMMO crystal on charged bipartitions and the graphs it spans over a tower of series.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{invalid, Result};
use crate::fock::{Cell, FockSpace};
use crate::partition::{multipartition_text, multipartitions, Partition};
use crate::residue::{QuiverSpec, Residue};
use crate::weight::Weight;

/// Which tower of Harish-Chandra series a crystal describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TowerKind {
    /// Finite unitary groups: series t has 2-core Δ_t, rank t(t+1)/2 + 2|μ|.
    Unitary,
    /// Types B/C: series t has defect 2t+1, rank t(t+1) + |μ|.
    Bc,
}

/// A tower ⊕_t F(Q_t) over one quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tower {
    kind: TowerKind,
    spec: QuiverSpec,
}

impl Tower {
    pub fn unitary(spec: QuiverSpec) -> Result<Self> {
        if !spec.is_gu() || spec.kind() == crate::residue::Kind::GuCircle {
            return invalid("the unitary tower needs a unitary quiver");
        }
        Ok(Tower { kind: TowerKind::Unitary, spec })
    }

    pub fn bc(spec: QuiverSpec) -> Result<Self> {
        if !spec.is_bc() {
            return invalid("the B/C tower needs a B/C quiver");
        }
        Ok(Tower { kind: TowerKind::Bc, spec })
    }

    pub fn kind(&self) -> TowerKind {
        self.kind
    }

    pub fn spec(&self) -> &QuiverSpec {
        &self.spec
    }

    /// F(Q_t) with the charge used for its crystal.
    pub fn space(&self, t: usize) -> FockSpace {
        match self.kind {
            TowerKind::Unitary => FockSpace::gu_series(self.spec, t),
            TowerKind::Bc => FockSpace::bc_series(self.spec, t),
        }
        .expect("tower spec validated at construction")
    }

    /// Rank of (t, ∅).
    pub fn base_rank(&self, t: usize) -> usize {
        match self.kind {
            TowerKind::Unitary => t * (t + 1) / 2,
            TowerKind::Bc => t * (t + 1),
        }
    }

    /// Rank added by one box.
    pub fn box_rank(&self) -> usize {
        match self.kind {
            TowerKind::Unitary => 2,
            TowerKind::Bc => 1,
        }
    }

    pub fn rank(&self, t: usize, size: usize) -> usize {
        self.base_rank(t) + self.box_rank() * size
    }

    /// Series with base rank at most `max_rank`.
    pub fn series_up_to(&self, max_rank: usize) -> Vec<usize> {
        (0..).take_while(|&t| self.base_rank(t) <= max_rank).collect()
    }

    /// All (t, μ) of rank exactly n.
    pub fn labels(&self, n: usize) -> Vec<(usize, Vec<Partition>)> {
        let mut out = Vec::new();
        for t in self.series_up_to(n) {
            let rest = n - self.base_rank(t);
            if rest % self.box_rank() == 0 {
                for mu in multipartitions(rest / self.box_rank(), 2) {
                    out.push((t, mu));
                }
            }
        }
        out
    }
}

/// Text id "t:μ" of a crystal node.
pub fn node_id(t: usize, mu: &[Partition]) -> String {
    format!("{t}:{}", multipartition_text(mu))
}

/// Sign of a letter in a signature word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    Plus,
    Minus,
}

/// The i-signature of a charged multipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    /// All i-boxes in increasing order with + (addable) or − (removable).
    pub word: Vec<(Letter, Cell)>,
    /// Surviving letters after cancellation, still in order.
    pub reduced: Vec<(Letter, Cell)>,
    pub epsilon: usize,
    pub phi: usize,
    /// Box added by f̃_i.
    pub add: Option<Cell>,
    /// Box removed by ẽ_i.
    pub remove: Option<Cell>,
}

/// Boxes ordered by content, then by larger component index first; "+−" factors cancel.
pub fn signature(space: &FockSpace, mu: &[Partition], i: Residue) -> Signature {
    let mut word: Vec<(Letter, Cell)> = space
        .addable_boxes(mu, i)
        .into_iter()
        .map(|c| (Letter::Plus, c))
        .chain(space.removable_boxes(mu, i).into_iter().map(|c| (Letter::Minus, c)))
        .collect();
    word.sort_by_key(|&(_, c)| (space.content(c), std::cmp::Reverse(c.p)));
    let mut reduced: Vec<(Letter, Cell)> = Vec::new();
    for &(l, c) in &word {
        if l == Letter::Minus && matches!(reduced.last(), Some((Letter::Plus, _))) {
            reduced.pop();
        } else {
            reduced.push((l, c));
        }
    }
    let epsilon = reduced.iter().filter(|(l, _)| *l == Letter::Minus).count();
    let phi = reduced.len() - epsilon;
    let add = reduced.iter().find(|(l, _)| *l == Letter::Plus).map(|&(_, c)| c);
    let remove = reduced.iter().rev().find(|(l, _)| *l == Letter::Minus).map(|&(_, c)| c);
    Signature { word, reduced, epsilon, phi, add, remove }
}

pub fn f_tilde(space: &FockSpace, mu: &[Partition], i: Residue) -> Option<Vec<Partition>> {
    signature(space, mu, i).add.map(|c| space.add(mu, c))
}

pub fn e_tilde(space: &FockSpace, mu: &[Partition], i: Residue) -> Option<Vec<Partition>> {
    signature(space, mu, i).remove.map(|c| space.remove(mu, c))
}

/// Residues at which ε_i could be nonzero.
fn removable_residues(space: &FockSpace, mu: &[Partition]) -> BTreeSet<Residue> {
    space.removable(mu).into_iter().map(|c| space.residue(c)).collect()
}

/// Whether ε_i(μ) = 0 for every i.
pub fn is_highest_weight(space: &FockSpace, mu: &[Partition]) -> bool {
    removable_residues(space, mu).into_iter().all(|i| signature(space, mu, i).epsilon == 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalNode {
    pub id: String,
    pub t: usize,
    pub mu: Vec<Partition>,
    pub rank: usize,
    pub weight: Weight,
    pub highest_weight: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    pub residue: Residue,
}

/// The crystal graph on all nodes of rank ≤ max_rank; edges b → f̃_i b.
#[derive(Clone, Debug)]
pub struct CrystalGraph {
    pub tower: Tower,
    pub max_rank: usize,
    /// Sorted by (rank, id).
    pub nodes: Vec<CrystalNode>,
    pub edges: Vec<CrystalEdge>,
    index: BTreeMap<String, usize>,
}

pub fn build_graph(tower: Tower, max_rank: usize) -> CrystalGraph {
    let spaces: Vec<FockSpace> = tower.series_up_to(max_rank).into_iter().map(|t| tower.space(t)).collect();
    let mut nodes = Vec::new();
    for n in 0..=max_rank {
        let mut level: Vec<CrystalNode> = tower
            .labels(n)
            .into_iter()
            .map(|(t, mu)| {
                let sp = &spaces[t];
                CrystalNode {
                    id: node_id(t, &mu),
                    t,
                    rank: n,
                    weight: sp.weight_of(&mu),
                    highest_weight: is_highest_weight(sp, &mu),
                    mu,
                }
            })
            .collect();
        level.sort_by(|a, b| a.id.cmp(&b.id));
        nodes.extend(level);
    }
    let index: BTreeMap<String, usize> = nodes.iter().enumerate().map(|(k, n)| (n.id.clone(), k)).collect();
    let mut edges = Vec::new();
    for (k, node) in nodes.iter().enumerate() {
        if node.rank + tower.box_rank() > max_rank {
            continue;
        }
        let sp = &spaces[node.t];
        let residues: BTreeSet<Residue> = sp.addable(&node.mu).into_iter().map(|c| sp.residue(c)).collect();
        for i in residues {
            if let Some(nu) = f_tilde(sp, &node.mu, i) {
                edges.push(CrystalEdge { from: k, to: index[&node_id(node.t, &nu)], residue: i });
            }
        }
    }
    CrystalGraph { tower, max_rank, nodes, edges, index }
}

impl CrystalGraph {
    pub fn node(&self, id: &str) -> Option<&CrystalNode> {
        self.index.get(id).map(|&k| &self.nodes[k])
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn highest_weight_nodes(&self) -> Vec<&CrystalNode> {
        self.nodes.iter().filter(|n| n.highest_weight).collect()
    }

    /// Connected components as sorted lists of node positions, ordered by their first node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..self.nodes.len() {
            let r = find(&mut parent, k);
            groups.entry(r).or_default().push(k);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }
}
