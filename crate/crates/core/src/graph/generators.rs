use super::{Graph, GraphError};

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), GraphError> {
    if cond {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(msg()))
    }
}

/// `K^r` on vertices `0..r`.
pub fn complete(r: usize) -> Result<Graph, GraphError> {
    require(r >= 1, || "complete graph needs r >= 1".into())?;
    Graph::new(r, (0..r).flat_map(|u| (u + 1..r).map(move |v| (u, v))))
}

/// `K_{a,b}`: sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    require(a >= 1 && b >= 1, || {
        format!("complete bipartite needs a, b >= 1, got {a},{b}")
    })?;
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `K_{1,r}` with center 0.
pub fn star(r: usize) -> Result<Graph, GraphError> {
    require(r >= 1, || "star needs r >= 1".into())?;
    Graph::new(r + 1, (1..=r).map(|v| (0, v)))
}

/// Path on `r` vertices `0 - 1 - .. - r-1`.
pub fn path(r: usize) -> Result<Graph, GraphError> {
    require(r >= 1, || "path needs r >= 1".into())?;
    Graph::new(r, (1..r).map(|v| (v - 1, v)))
}

/// Cycle on `r >= 3` vertices.
pub fn cycle(r: usize) -> Result<Graph, GraphError> {
    require(r >= 3, || format!("cycle needs r >= 3, got {r}"))?;
    Graph::new(r, (0..r).map(|v| (v, (v + 1) % r)))
}

/// Wagner graph: the 8-cycle plus chords `{i, i+4}`.
pub fn wagner() -> Graph {
    Graph::new(8, (0..8).map(|v| (v, (v + 1) % 8)).chain((0..4).map(|v| (v, v + 4)))).expect("wagner graph is simple")
}
