//! Exact saturation numbers for small `n` by exhaustive enumeration.

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::minor::SearchBudget;

use super::{is_saturated_sequential, Verdict};

#[derive(Clone, Copy, Debug)]
pub struct CensusLimits {
    /// Largest `n` accepted.
    pub max_n: usize,
    pub budget: SearchBudget,
    /// Only visit labelings whose degree sequence is non-increasing in
    /// vertex order. Every isomorphism class keeps at least one labeling.
    pub degree_filter: bool,
    /// Enumerate with the vertex-pair list reversed.
    pub reverse_order: bool,
    /// Count every saturated labeled graph at the minimum edge count.
    pub count: bool,
}

impl Default for CensusLimits {
    fn default() -> Self {
        CensusLimits {
            max_n: 7,
            budget: SearchBudget::default(),
            degree_filter: false,
            reverse_order: false,
            count: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub n: usize,
    pub target: Graph,
    /// `sat(n, M(target))`.
    pub sat: usize,
    /// First saturated graph with `sat` edges in enumeration order.
    pub witness: Graph,
    /// Saturated labeled graphs with `sat` edges, when counted.
    pub saturated_count: Option<usize>,
    pub graphs_checked: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("n = {n} exceeds the census cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("target has {h} vertices, more than n = {n}")]
    TargetTooLarge { h: usize, n: usize },
    #[error("budget exhausted while checking {0:?}")]
    Inconclusive(Graph),
    #[error("no saturated graph on {0} vertices")]
    NoneFound(usize),
}

/// Sweeps `m = 0, 1, ..` and returns the first edge count admitting an
/// `M(target)`-saturated graph on `n` vertices.
pub fn exact_sat(n: usize, target: &Graph, limits: &CensusLimits) -> Result<CensusResult, CensusError> {
    if n > limits.max_n {
        return Err(CensusError::CapExceeded { n, cap: limits.max_n });
    }
    if target.n() > n {
        return Err(CensusError::TargetTooLarge { h: target.n(), n });
    }
    let mut pairs: Vec<Edge> = (0..n).tuple_combinations().collect();
    if limits.reverse_order {
        pairs.reverse();
    }
    let mut graphs_checked = 0u64;
    for m in 0..=pairs.len() {
        let candidates: Vec<Graph> = (0..pairs.len())
            .combinations(m)
            .map(|idx| Graph::new(n, idx.iter().map(|&i| pairs[i])).expect("pairs are valid"))
            .filter(|g| !limits.degree_filter || g.degrees().windows(2).all(|w| w[0] >= w[1]))
            .collect();
        graphs_checked += candidates.len() as u64;

        let classify = |g: &Graph| match is_saturated_sequential(g, target, limits.budget).verdict {
            Verdict::Saturated { .. } => Ok(true),
            Verdict::Inconclusive { .. } => Err(CensusError::Inconclusive(g.clone())),
            _ => Ok(false),
        };
        let first = candidates
            .par_iter()
            .enumerate()
            .find_map_first(|(i, g)| match classify(g) {
                Ok(true) => Some(Ok(i)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?;
        let Some(first) = first else { continue };
        let saturated_count = if limits.count {
            let flags: Vec<bool> = candidates[first..].par_iter().map(classify).collect::<Result<_, _>>()?;
            Some(flags.into_iter().filter(|&f| f).count())
        } else {
            None
        };
        return Ok(CensusResult {
            n,
            target: target.clone(),
            sat: m,
            witness: candidates[first].clone(),
            saturated_count,
            graphs_checked,
        });
    }
    Err(CensusError::NoneFound(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, star};

    #[test]
    fn small_clique_targets() {
        let limits = CensusLimits::default();
        let k3 = complete(3).unwrap();
        assert_eq!(exact_sat(5, &k3, &limits).unwrap().sat, 4);
        let k4 = complete(4).unwrap();
        let r = exact_sat(4, &k4, &limits).unwrap();
        assert_eq!(r.sat, 5);
        // the only 5-edge graph on 4 vertices is K4 minus an edge
        assert_eq!(r.witness.m(), 5);
        assert_eq!(exact_sat(5, &k4, &limits).unwrap().sat, 7);
    }

    #[test]
    fn counts_labeled_witnesses() {
        let limits = CensusLimits {
            count: true,
            ..CensusLimits::default()
        };
        // labeled spanning trees of K4: 4^2 = 16
        let r = exact_sat(4, &complete(3).unwrap(), &limits).unwrap();
        assert_eq!((r.sat, r.saturated_count), (3, Some(16)));
        let r = exact_sat(4, &complete(4).unwrap(), &limits).unwrap();
        assert_eq!(r.saturated_count, Some(6));
    }

    #[test]
    fn order_and_filter_do_not_change_value() {
        let k4 = complete(4).unwrap();
        for (degree_filter, reverse_order) in [(true, false), (false, true), (true, true)] {
            let limits = CensusLimits {
                degree_filter,
                reverse_order,
                ..CensusLimits::default()
            };
            assert_eq!(exact_sat(5, &k4, &limits).unwrap().sat, 7);
        }
    }

    #[test]
    fn errors() {
        let limits = CensusLimits::default();
        assert_eq!(
            exact_sat(8, &complete(3).unwrap(), &limits),
            Err(CensusError::CapExceeded { n: 8, cap: 7 })
        );
        assert!(matches!(
            exact_sat(3, &star(3).unwrap(), &limits),
            Err(CensusError::TargetTooLarge { .. })
        ));
    }
}
