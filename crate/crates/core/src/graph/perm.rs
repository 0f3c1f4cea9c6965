use std::collections::BTreeSet;

use super::{edge, Edge, Graph, GraphError};

/// A bijection on `0..n`, `image[v]` being the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPermutation(Vec<usize>);

impl VertexPermutation {
    pub fn new(image: Vec<usize>) -> Result<Self, GraphError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(GraphError::NotAPermutation(format!("{image:?}")));
            }
            seen[v] = true;
        }
        Ok(VertexPermutation(image))
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn apply_edge(&self, (u, v): Edge) -> Edge {
        edge(self.0[u], self.0[v])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        VertexPermutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        VertexPermutation(inv)
    }

    /// True iff `{u,v} ∈ E ⇔ {p(u),p(v)} ∈ E`.
    pub fn is_automorphism(&self, g: &Graph) -> Result<bool, GraphError> {
        if self.0.len() != g.n() {
            return Err(GraphError::LengthMismatch {
                expected: g.n(),
                found: self.0.len(),
            });
        }
        // a bijection mapping every edge to an edge is an automorphism
        Ok(g.edges().all(|(u, v)| g.has_edge(self.0[u], self.0[v])))
    }
}

/// One orbit of non-edges under a permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrbit {
    /// Lexicographically least member.
    pub representative: Edge,
    /// All members, sorted.
    pub members: Vec<Edge>,
}

/// Partitions the non-edges of `g` into orbits under the group generated by
/// `group`. Orbits are returned in order of their representatives.
pub fn nonedge_orbits(g: &Graph, group: &[VertexPermutation]) -> Result<Vec<EdgeOrbit>, GraphError> {
    for (index, p) in group.iter().enumerate() {
        if !p.is_automorphism(g)? {
            return Err(GraphError::NotAutomorphism { index });
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in g.non_edges() {
        if seen.contains(&e) {
            continue;
        }
        let mut members = BTreeSet::from([e]);
        let mut stack = vec![e];
        while let Some(f) = stack.pop() {
            for p in group {
                let img = p.apply_edge(f);
                if members.insert(img) {
                    stack.push(img);
                }
            }
        }
        seen.extend(members.iter().copied());
        out.push(EdgeOrbit {
            representative: e,
            members: members.into_iter().collect(),
        });
    }
    Ok(out)
}
