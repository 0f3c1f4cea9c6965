//! Minor containment: models, counting bounds and the backtracking search.

mod search;

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::graph::Graph;

pub use search::{find_minor, find_minor_seeded, has_minor};

/// Assignment of host vertices to branch sets, one per target vertex.
/// Vertices mapped to `None` are left out of the model.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorModel {
    branch_of: Vec<Option<usize>>,
    branch_count: usize,
}

impl MinorModel {
    /// An empty model over `host_n` vertices for a target with `h` vertices.
    pub fn unassigned(host_n: usize, h: usize) -> Self {
        MinorModel {
            branch_of: vec![None; host_n],
            branch_count: h,
        }
    }

    pub fn from_assignment(branch_of: Vec<Option<usize>>, h: usize) -> Self {
        MinorModel {
            branch_of,
            branch_count: h,
        }
    }

    /// Builds a model from explicit branch sets. Vertices not listed stay
    /// unassigned; if a vertex is listed twice the later branch wins.
    pub fn from_branches(host_n: usize, branches: &[Vec<usize>]) -> Self {
        let mut branch_of = vec![None; host_n];
        for (b, set) in branches.iter().enumerate() {
            for &v in set {
                if v < host_n {
                    branch_of[v] = Some(b);
                }
            }
        }
        MinorModel {
            branch_of,
            branch_count: branches.len(),
        }
    }

    pub fn branch_of(&self, v: usize) -> Option<usize> {
        self.branch_of[v]
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.branch_of
    }

    pub fn branch_count(&self) -> usize {
        self.branch_count
    }

    pub fn host_n(&self) -> usize {
        self.branch_of.len()
    }

    /// Branch sets in branch order, each sorted ascending.
    pub fn branches(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.branch_count];
        for (v, b) in self.branch_of.iter().enumerate() {
            if let Some(b) = *b {
                if b < self.branch_count {
                    out[b].push(v);
                }
            }
        }
        out
    }

    pub fn is_spanning(&self) -> bool {
        self.branch_of.iter().all(Option::is_some)
    }
}

impl fmt::Display for MinorModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, set) in self.branches().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in set.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Why a model fails verification.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelDefect {
    #[error("model covers {found} vertices, host has {expected}")]
    WrongHostSize { expected: usize, found: usize },
    #[error("model has {found} branches, target has {expected} vertices")]
    WrongBranchCount { expected: usize, found: usize },
    #[error("vertex {vertex} assigned to branch {branch}, out of range")]
    BranchOutOfRange { vertex: usize, branch: usize },
    #[error("branch {0} is empty")]
    EmptyBranch(usize),
    #[error("branch {0} does not induce a connected subgraph")]
    DisconnectedBranch(usize),
    #[error("no host edge between branches {0} and {1}")]
    MissingAdjacency(usize, usize),
}

/// Checks the three model invariants: non-empty connected branch sets,
/// disjointness (implicit in the representation) and one host edge per
/// target edge.
pub fn verify_model(host: &Graph, target: &Graph, model: &MinorModel) -> Result<(), ModelDefect> {
    if model.host_n() != host.n() {
        return Err(ModelDefect::WrongHostSize {
            expected: host.n(),
            found: model.host_n(),
        });
    }
    let h = target.n();
    if model.branch_count != h {
        return Err(ModelDefect::WrongBranchCount {
            expected: h,
            found: model.branch_count,
        });
    }
    for (vertex, b) in model.branch_of.iter().enumerate() {
        if let Some(branch) = *b {
            if branch >= h {
                return Err(ModelDefect::BranchOutOfRange { vertex, branch });
            }
        }
    }
    for (b, set) in model.branches().iter().enumerate() {
        if set.is_empty() {
            return Err(ModelDefect::EmptyBranch(b));
        }
        let mut seen = vec![set[0]];
        let mut i = 0;
        while i < seen.len() {
            let v = seen[i];
            i += 1;
            for &w in host.neighbors(v) {
                if model.branch_of[w] == Some(b) && !seen.contains(&w) {
                    seen.push(w);
                }
            }
        }
        if seen.len() != set.len() {
            return Err(ModelDefect::DisconnectedBranch(b));
        }
    }
    let mut touching = vec![vec![false; h]; h];
    for (u, v) in host.edges() {
        if let (Some(a), Some(b)) = (model.branch_of[u], model.branch_of[v]) {
            touching[a][b] = true;
            touching[b][a] = true;
        }
    }
    for (a, b) in target.edges() {
        if !touching[a][b] {
            return Err(ModelDefect::MissingAdjacency(a, b));
        }
    }
    Ok(())
}

/// Edges a connected host needs before it can contain `target` as a minor:
/// `(n - h)` intra-branch tree edges plus one per target edge.
pub fn spanning_edge_requirement(host_n: usize, target: &Graph) -> usize {
    host_n.saturating_sub(target.n()) + target.m()
}

/// True when counting alone rules out a `target` minor.
///
/// Connected hosts: `m < (n - h) + m_target`. Disconnected hosts with a
/// connected target: the bound must fire on every component. Disconnected
/// targets on disconnected hosts: the bound is silent.
pub fn spanning_edge_bound(host: &Graph, target: &Graph) -> bool {
    let h = target.n();
    if h > host.n() {
        return true;
    }
    let comps = host.connected_components();
    if comps.len() <= 1 {
        return host.m() < spanning_edge_requirement(host.n(), target);
    }
    if !target.is_connected() {
        return false;
    }
    comps.iter().all(|c| {
        if c.len() < h {
            return true;
        }
        let sub = host.induced_subgraph(c);
        sub.m() < spanning_edge_requirement(sub.n(), target)
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MinorError {
    #[error("search budget exhausted after {nodes} node expansions")]
    BudgetExhausted { nodes: u64 },
    #[error("invalid model: {0}")]
    InvalidModel(#[from] ModelDefect),
    #[error("vertex {0} cannot reach any branch set")]
    Unreachable(usize),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
}

/// Absorbs every unassigned vertex into an adjacent branch set, breadth
/// first from the assigned vertices in ascending id order.
pub fn extend_to_spanning(host: &Graph, target: &Graph, model: &MinorModel) -> Result<MinorModel, MinorError> {
    verify_model(host, target, model)?;
    let mut branch_of = model.branch_of.clone();
    let mut queue: std::collections::VecDeque<usize> = (0..host.n()).filter(|&v| branch_of[v].is_some()).collect();
    while let Some(v) = queue.pop_front() {
        for &w in host.neighbors(v) {
            if branch_of[w].is_none() {
                branch_of[w] = branch_of[v];
                queue.push_back(w);
            }
        }
    }
    if let Some(v) = branch_of.iter().position(Option::is_none) {
        return Err(MinorError::Unreachable(v));
    }
    Ok(MinorModel {
        branch_of,
        branch_count: model.branch_count,
    })
}

/// Limits on a single search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 50_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: max_nodes.max(1),
            time_limit: None,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::nodes(Self::DEFAULT_NODES)
    }
}

/// Why no model exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoMinorReason {
    /// Target has more vertices than the host.
    TooFewVertices { host: usize, target: usize },
    /// Connected host with `host_edges < required`.
    CountingBound { host_edges: usize, required: usize },
    /// Every component is too small or too sparse for a connected target.
    ComponentCounting,
    /// The backtracking search finished without a model.
    Exhausted,
}

impl fmt::Display for NoMinorReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoMinorReason::TooFewVertices { host, target } => {
                write!(f, "too few vertices: {host} < {target}")
            }
            NoMinorReason::CountingBound { host_edges, required } => {
                write!(f, "counting bound: {host_edges} < {required}")
            }
            NoMinorReason::ComponentCounting => write!(f, "counting bound on every component"),
            NoMinorReason::Exhausted => write!(f, "exhaustive search"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorOutcome {
    Model(MinorModel),
    NoMinor(NoMinorReason),
    BudgetExhausted,
}

/// Result of [`find_minor`] with the number of search nodes expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSearch {
    pub outcome: MinorOutcome,
    pub nodes: u64,
}

impl MinorSearch {
    pub fn model(&self) -> Option<&MinorModel> {
        match &self.outcome {
            MinorOutcome::Model(m) => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for MinorSearch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            MinorOutcome::Model(m) => write!(f, "Model {m}"),
            MinorOutcome::NoMinor(NoMinorReason::Exhausted) => {
                write!(f, "NoMinor (exhaustive search, {} nodes)", self.nodes)
            }
            MinorOutcome::NoMinor(r) => write!(f, "NoMinor ({r})"),
            MinorOutcome::BudgetExhausted => write!(f, "BudgetExhausted ({} nodes)", self.nodes),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, generalized_petersen, path, wagner};

    #[test]
    fn verify_model_examples() {
        let k3 = complete(3).unwrap();
        let id = MinorModel::from_branches(3, &[vec![0], vec![1], vec![2]]);
        assert_eq!(verify_model(&k3, &k3, &id), Ok(()));

        let c4 = cycle(4).unwrap();
        let m = MinorModel::from_branches(4, &[vec![0, 1], vec![2], vec![3]]);
        assert_eq!(verify_model(&c4, &k3, &m), Ok(()));

        let p4 = path(4).unwrap();
        let m = MinorModel::from_branches(4, &[vec![0, 1], vec![2], vec![3]]);
        assert_eq!(verify_model(&p4, &k3, &m), Err(ModelDefect::MissingAdjacency(0, 2)));
    }

    #[test]
    fn verify_model_reason_codes() {
        let k3 = complete(3).unwrap();
        let c4 = cycle(4).unwrap();
        let gap = MinorModel::from_branches(4, &[vec![0, 2], vec![1], vec![3]]);
        assert_eq!(verify_model(&c4, &k3, &gap), Err(ModelDefect::DisconnectedBranch(0)));
        let empty = MinorModel::from_branches(4, &[vec![0], vec![], vec![3]]);
        assert_eq!(verify_model(&c4, &k3, &empty), Err(ModelDefect::EmptyBranch(1)));
        let wrong = MinorModel::from_branches(3, &[vec![0], vec![1], vec![2]]);
        assert!(matches!(
            verify_model(&c4, &k3, &wrong),
            Err(ModelDefect::WrongHostSize { .. })
        ));
        let range = MinorModel::from_assignment(vec![Some(0), Some(1), Some(5), None], 3);
        assert!(matches!(
            verify_model(&c4, &k3, &range),
            Err(ModelDefect::BranchOutOfRange { vertex: 2, branch: 5 })
        ));
    }

    #[test]
    fn counting_bound_examples() {
        let gp = generalized_petersen(8, 3).unwrap();
        assert!(spanning_edge_bound(&gp, &complete(6).unwrap()));
        assert_eq!(spanning_edge_requirement(16, &complete(6).unwrap()), 25);
        let gp13 = generalized_petersen(13, 5).unwrap();
        assert!(spanning_edge_bound(&gp13, &complete(7).unwrap()));
        assert_eq!(spanning_edge_requirement(26, &complete(7).unwrap()), 40);
        let k6 = complete(6).unwrap();
        assert!(!spanning_edge_bound(&k6, &k6));
        assert!(spanning_edge_bound(&wagner(), &complete(5).unwrap()));
        assert!(spanning_edge_bound(&complete(3).unwrap(), &complete(4).unwrap()));
    }

    #[test]
    fn extend_examples() {
        let k3 = complete(3).unwrap();
        let c4 = cycle(4).unwrap();
        let m = MinorModel::from_branches(4, &[vec![0, 1], vec![2], vec![3]]);
        assert_eq!(extend_to_spanning(&c4, &k3, &m).unwrap(), m);

        // K4 plus pendant vertex 4 on vertex 0
        let host = Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap();
        let k4 = complete(4).unwrap();
        let m = MinorModel::from_branches(5, &[vec![0], vec![1], vec![2], vec![3]]);
        let ext = extend_to_spanning(&host, &k4, &m).unwrap();
        assert_eq!(ext.branch_of(4), Some(0));
        assert!(ext.is_spanning());
        assert_eq!(verify_model(&host, &k4, &ext), Ok(()));

        let split = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let m = MinorModel::from_branches(4, &[vec![0], vec![1], vec![2]]);
        assert_eq!(extend_to_spanning(&split, &k3, &m), Err(MinorError::Unreachable(3)));
    }

    #[test]
    fn model_display() {
        let m = MinorModel::from_branches(4, &[vec![0, 1], vec![2], vec![3]]);
        assert_eq!(m.to_string(), "[[0,1],[2],[3]]");
    }
}
