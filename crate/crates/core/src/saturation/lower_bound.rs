//! Structural facts every `M(H)`-saturated graph is claimed to satisfy,
//! depending on the minimum degree and shape of `H`.

use std::fmt;

use crate::graph::Graph;
use crate::minor::SearchBudget;

use super::{is_saturated, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    /// Whether the hypotheses on `H` and `n` hold.
    pub applies: bool,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub checks: Vec<BoundCheck>,
}

impl LowerBoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.applies && !c.holds)
    }

    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for LowerBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match (c.applies, c.holds) {
                (false, _) => "n/a",
                (true, true) => "ok",
                (true, false) => "VIOLATED",
            };
            writeln!(f, "{}: {status} ({})", c.name, c.detail)?;
        }
        Ok(())
    }
}

pub const EDGES_3N_2: &str = "m >= 3n/2";
pub const EDGES_2N: &str = "m >= 2n";
pub const DEGREE_TWO: &str = "degree-2 neighbours adjacent";
pub const ISOLATED: &str = "at most one isolated vertex";

/// Evaluates the invariants on a graph the caller has verified to be
/// `M(target)`-saturated:
///
/// * `δ(H) >= 3`, `n >= 4`: `m >= 3n/2`;
/// * `δ(H) >= 4`, `H` triangle-free, `n >= 5`: `m >= 2n`;
/// * `δ(H) >= 3`: both neighbours of every degree-2 vertex are adjacent;
/// * `H` connected with at least 3 vertices: at most one isolated vertex.
pub fn check_lower_bound_invariants(g: &Graph, target: &Graph) -> LowerBoundReport {
    let (n, m) = (g.n(), g.m());
    let dmin = target.min_degree();
    let mut checks = Vec::with_capacity(4);

    checks.push(BoundCheck {
        name: EDGES_3N_2,
        applies: dmin >= 3 && n >= 4,
        holds: 2 * m >= 3 * n,
        detail: format!("2m = {} vs 3n = {}", 2 * m, 3 * n),
    });

    let tri_free = target.is_triangle_free();
    checks.push(BoundCheck {
        name: EDGES_2N,
        applies: dmin >= 4 && tri_free && n >= 5,
        holds: m >= 2 * n,
        detail: format!("m = {m} vs 2n = {}", 2 * n),
    });

    let bad_deg2: Vec<usize> = (0..n)
        .filter(|&v| g.degree(v) == 2)
        .filter(|&v| {
            let nb = g.neighbors(v);
            !g.has_edge(nb[0], nb[1])
        })
        .collect();
    checks.push(BoundCheck {
        name: DEGREE_TWO,
        applies: dmin >= 3,
        holds: bad_deg2.is_empty(),
        detail: if bad_deg2.is_empty() {
            "no offending vertex".into()
        } else {
            format!("offending vertices {bad_deg2:?}")
        },
    });

    let isolated = (0..n).filter(|&v| g.degree(v) == 0).count();
    checks.push(BoundCheck {
        name: ISOLATED,
        applies: target.is_connected() && target.n() >= 3,
        holds: isolated <= 1,
        detail: format!("{isolated} isolated"),
    });

    LowerBoundReport { checks }
}

/// Re-verifies saturation first; returns the verdict if it is not
/// `Saturated`.
pub fn check_lower_bound_invariants_strict(
    g: &Graph,
    target: &Graph,
    budget: SearchBudget,
) -> Result<LowerBoundReport, Verdict> {
    let check = is_saturated(g, target, budget);
    if !check.verdict.is_saturated() {
        return Err(check.verdict);
    }
    Ok(check_lower_bound_invariants(g, target))
}
