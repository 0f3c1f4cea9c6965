//! Generalized Petersen graphs `GP(n, k)`.
//!
//! Vertices are numbered `x_i -> i` and `y_i -> n + i`. Outer edges are
//! `x_i x_{i+1}`, spokes `x_i y_i` and inner edges `y_i y_{i+k}`, all indices
//! taken modulo `n`.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, VertexPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GpKind {
    Outer,
    Inner,
}

/// A human-facing vertex name such as `x3` or `y12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GpLabel {
    pub kind: GpKind,
    pub index: usize,
}

impl GpLabel {
    pub fn x(index: usize) -> Self {
        GpLabel {
            kind: GpKind::Outer,
            index,
        }
    }

    pub fn y(index: usize) -> Self {
        GpLabel {
            kind: GpKind::Inner,
            index,
        }
    }

    pub fn to_vertex(self, n: usize) -> Result<usize, GraphError> {
        if self.index >= n {
            return Err(GraphError::InvalidParameter(format!(
                "label {self} out of range for GP({n}, _)"
            )));
        }
        Ok(match self.kind {
            GpKind::Outer => self.index,
            GpKind::Inner => n + self.index,
        })
    }

    pub fn from_vertex(v: usize, n: usize) -> Self {
        assert!(v < 2 * n, "vertex {v} out of range for GP({n}, _)");
        if v < n {
            GpLabel::x(v)
        } else {
            GpLabel::y(v - n)
        }
    }
}

impl fmt::Display for GpLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            GpKind::Outer => 'x',
            GpKind::Inner => 'y',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for GpLabel {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidParameter(format!("bad vertex label {s:?}"));
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('x') => GpKind::Outer,
            Some('y') => GpKind::Inner,
            _ => return Err(bad()),
        };
        let index = chars.as_str().parse().map_err(|_| bad())?;
        Ok(GpLabel { kind, index })
    }
}

/// Builds `GP(n, k)`; requires `n >= 3` and `1 <= k < n/2`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(GraphError::InvalidParameter(format!(
            "GP(n, k) needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}"
        )));
    }
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
    Graph::new(2 * n, edges)
}

/// The `2n` rotations and reflections of the `GP(n, _)` labeling:
/// rotations `x_i -> x_{i+a}` first, then reflections `x_i -> x_{a-i}`.
pub fn gp_dihedral_group(n: usize) -> Vec<VertexPermutation> {
    let build = |f: &dyn Fn(usize) -> usize| {
        let image = (0..2 * n).map(|v| if v < n { f(v) } else { n + f(v - n) }).collect();
        VertexPermutation::new(image).expect("dihedral map is a bijection")
    };
    let mut out = Vec::with_capacity(2 * n);
    for a in 0..n {
        out.push(build(&|i| (i + a) % n));
    }
    for a in 0..n {
        out.push(build(&|i| (a + n - i) % n));
    }
    out
}
