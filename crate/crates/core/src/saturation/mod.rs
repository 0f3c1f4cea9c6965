//! `M(H)`-saturation: a graph has no `H` minor, but adding any missing edge
//! creates one.

mod census;
mod lower_bound;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{edge, nonedge_orbits, Edge, Graph, GraphError, VertexPermutation};
use crate::minor::{find_minor, MinorModel, MinorOutcome, MinorSearch, SearchBudget};

pub use census::{exact_sat, CensusError, CensusLimits, CensusResult};
pub use lower_bound::{
    check_lower_bound_invariants, check_lower_bound_invariants_strict, BoundCheck, LowerBoundReport, DEGREE_TWO,
    EDGES_2N, EDGES_3N_2, ISOLATED,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// One model of `H` in `G + e` for every non-edge checked.
    Saturated { witnesses: Vec<(Edge, MinorModel)> },
    /// `G` itself already contains `H`.
    HasMinor(MinorModel),
    /// `G + e` has no `H` minor.
    MissingEdge(Edge),
    /// A sub-search ran out of budget; `edge` is `None` for the base graph.
    Inconclusive { edge: Option<Edge> },
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Saturated { .. } => "Saturated",
            Verdict::HasMinor(_) => "HasMinor",
            Verdict::MissingEdge(_) => "MissingEdge",
            Verdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    pub fn is_saturated(&self) -> bool {
        matches!(self, Verdict::Saturated { .. })
    }
}

/// A verdict with search statistics.
#[derive(Clone, Debug)]
pub struct SaturationCheck {
    pub verdict: Verdict,
    /// Non-edges (or orbit representatives) whose search completed.
    pub edges_checked: usize,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl SaturationCheck {
    /// Line-oriented record; `verbose` adds models and wall time.
    pub fn render(&self, verbose: bool) -> String {
        let mut out = format!("status: {}\n", self.verdict.status());
        match &self.verdict {
            Verdict::Saturated { witnesses } => {
                out += &format!("non-edges checked: {}\n", witnesses.len());
                if verbose {
                    for ((u, v), m) in witnesses {
                        out += &format!("witness {u} {v}: {m}\n");
                    }
                }
            }
            Verdict::HasMinor(m) => out += &format!("witness: {m}\n"),
            Verdict::MissingEdge((u, v)) => out += &format!("witness: {u} {v}\n"),
            Verdict::Inconclusive { edge: Some((u, v)) } => out += &format!("budget exhausted on: {u} {v}\n"),
            Verdict::Inconclusive { edge: None } => out += "budget exhausted on: base graph\n",
        }
        out += &format!("nodes: {}\n", self.nodes);
        if verbose {
            out += &format!("time_ms: {}\n", self.elapsed.as_millis());
        }
        out
    }
}

impl fmt::Display for SaturationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

#[derive(Debug, Error)]
pub enum SatError {
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Checks every non-edge of `g`, in parallel.
pub fn is_saturated(g: &Graph, target: &Graph, budget: SearchBudget) -> SaturationCheck {
    let edges: Vec<Edge> = g.non_edges().collect();
    check_edges(g, target, &edges, budget, true)
}

/// Checks one representative per orbit of non-edges under `group`.
/// Every element of `group` must be an automorphism of `g`.
pub fn is_saturated_symmetric(
    g: &Graph,
    target: &Graph,
    group: &[VertexPermutation],
    budget: SearchBudget,
) -> Result<SaturationCheck, SatError> {
    let reps: Vec<Edge> = nonedge_orbits(g, group)?
        .into_iter()
        .map(|o| o.representative)
        .collect();
    Ok(check_edges(g, target, &reps, budget, true))
}

pub(crate) fn is_saturated_sequential(g: &Graph, target: &Graph, budget: SearchBudget) -> SaturationCheck {
    let edges: Vec<Edge> = g.non_edges().collect();
    check_edges(g, target, &edges, budget, false)
}

fn check_edges(g: &Graph, target: &Graph, edges: &[Edge], budget: SearchBudget, parallel: bool) -> SaturationCheck {
    let start = Instant::now();
    let base = find_minor(g, target, budget);
    let mut nodes = base.nodes;
    match base.outcome {
        MinorOutcome::Model(m) => {
            return SaturationCheck {
                verdict: Verdict::HasMinor(m),
                edges_checked: 0,
                nodes,
                elapsed: start.elapsed(),
            }
        }
        MinorOutcome::BudgetExhausted => {
            return SaturationCheck {
                verdict: Verdict::Inconclusive { edge: None },
                edges_checked: 0,
                nodes,
                elapsed: start.elapsed(),
            }
        }
        MinorOutcome::NoMinor(_) => {}
    }

    let probe = |&(u, v): &Edge| find_minor(&g.add_edge(u, v).expect("non-edge"), target, budget);
    let results: Vec<Option<MinorSearch>> = if parallel {
        // Indices past the first failure seen so far are skipped; every
        // index below it is still evaluated, so the reported failure is the
        // first one in order regardless of scheduling.
        let first_fail = AtomicUsize::new(usize::MAX);
        edges
            .par_iter()
            .enumerate()
            .map(|(i, e)| {
                if i > first_fail.load(Ordering::Relaxed) {
                    return None;
                }
                let r = probe(e);
                if r.model().is_none() {
                    first_fail.fetch_min(i, Ordering::Relaxed);
                }
                Some(r)
            })
            .collect()
    } else {
        let mut out = Vec::with_capacity(edges.len());
        for e in edges {
            let r = probe(e);
            let failed = r.model().is_none();
            out.push(Some(r));
            if failed {
                break;
            }
        }
        out
    };

    let mut witnesses = Vec::with_capacity(edges.len());
    for (i, r) in results.into_iter().enumerate() {
        let Some(r) = r else { break };
        nodes += r.nodes;
        let e = edges[i];
        let verdict = match r.outcome {
            MinorOutcome::Model(m) => {
                witnesses.push((e, m));
                continue;
            }
            MinorOutcome::BudgetExhausted => Verdict::Inconclusive { edge: Some(e) },
            MinorOutcome::NoMinor(_) => {
                recheck_missing_edge(g, target, e, budget);
                Verdict::MissingEdge(e)
            }
        };
        return SaturationCheck {
            verdict,
            edges_checked: i,
            nodes,
            elapsed: start.elapsed(),
        };
    }
    SaturationCheck {
        edges_checked: witnesses.len(),
        verdict: Verdict::Saturated { witnesses },
        nodes,
        elapsed: start.elapsed(),
    }
}

/// Re-runs the search for `G + e` under reversed vertex labels, which
/// changes every branching order, and insists it agrees.
fn recheck_missing_edge(g: &Graph, target: &Graph, (u, v): Edge, budget: SearchBudget) {
    let n = g.n();
    let rev: Vec<usize> = (0..n).map(|x| n - 1 - x).collect();
    let plus = g.relabel(&rev);
    let e = edge(rev[u], rev[v]);
    let plus = plus.add_edge(e.0, e.1).expect("non-edge");
    let again = find_minor(&plus, target, budget);
    assert!(
        again.model().is_none(),
        "minor search disagrees with itself on G + {u}{v}"
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, generalized_petersen, gp_dihedral_group, path, wagner};
    use crate::minor::verify_model;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn tree_is_k3_saturated() {
        let c = is_saturated(&path(5).unwrap(), &complete(3).unwrap(), budget());
        assert!(c.verdict.is_saturated(), "{c}");
        assert_eq!(c.edges_checked, 6);
    }

    #[test]
    fn k5_minus_edge() {
        let g = Graph::new(5, complete(5).unwrap().edges().filter(|&e| e != (0, 1))).unwrap();
        let c = is_saturated(&g, &complete(5).unwrap(), budget());
        assert!(c.verdict.is_saturated());
    }

    #[test]
    fn c5_is_not_k4_saturated() {
        let c5 = cycle(5).unwrap();
        let k4 = complete(4).unwrap();
        let c = is_saturated(&c5, &k4, budget());
        let Verdict::MissingEdge((u, v)) = c.verdict else {
            panic!("expected MissingEdge, got {c}");
        };
        assert_eq!((u, v), (0, 2));
        assert!(find_minor(&c5.add_edge(u, v).unwrap(), &k4, budget()).model().is_none());
    }

    #[test]
    fn has_minor_verdict() {
        let k4 = complete(4).unwrap();
        let c = is_saturated(&k4, &complete(3).unwrap(), budget());
        let Verdict::HasMinor(m) = &c.verdict else { panic!() };
        assert_eq!(verify_model(&k4, &complete(3).unwrap(), m), Ok(()));
    }

    #[test]
    fn inconclusive_on_tiny_budget() {
        let c = is_saturated(&wagner(), &complete(5).unwrap(), SearchBudget::nodes(1));
        assert_eq!(c.verdict, Verdict::Inconclusive { edge: Some((0, 2)) });
    }

    #[test]
    fn symmetric_matches_plain() {
        let gp = generalized_petersen(8, 3).unwrap();
        let k6 = complete(6).unwrap();
        let sym = is_saturated_symmetric(&gp, &k6, &gp_dihedral_group(8), budget()).unwrap();
        assert!(sym.verdict.is_saturated());
        assert_eq!(sym.edges_checked, 10);

        let c5 = cycle(5).unwrap();
        let rot = VertexPermutation::new(vec![1, 2, 3, 4, 0]).unwrap();
        let k4 = complete(4).unwrap();
        let a = is_saturated_symmetric(&c5, &k4, &[rot], budget()).unwrap();
        let b = is_saturated(&c5, &k4, budget());
        assert_eq!(a.verdict, b.verdict);
        let id = [VertexPermutation::identity(5)];
        let c = is_saturated_symmetric(&c5, &k4, &id, budget()).unwrap();
        assert_eq!(c.verdict, b.verdict);
    }

    #[test]
    fn symmetric_rejects_non_automorphism() {
        let p = VertexPermutation::new(vec![1, 0, 2, 3, 4]).unwrap();
        let r = is_saturated_symmetric(&path(5).unwrap(), &complete(3).unwrap(), &[p], budget());
        assert!(matches!(
            r,
            Err(SatError::Graph(GraphError::NotAutomorphism { index: 0 }))
        ));
    }

    #[test]
    fn render_is_line_oriented() {
        let c = is_saturated(&cycle(5).unwrap(), &complete(4).unwrap(), budget());
        let text = c.render(false);
        assert!(text.starts_with("status: MissingEdge\nwitness: 0 2\nnodes: "));
    }
}
