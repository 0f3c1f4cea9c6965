//! Families of minor-saturated graphs and clique gluing.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_rational::Ratio;

use crate::graph::{complete, generalized_petersen, wagner, Graph, GraphError};

fn invalid(msg: String) -> GraphError {
    GraphError::InvalidParameter(msg)
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_sd(s: usize, d: usize) -> Result<(), GraphError> {
    if d < 3 || d >= s {
        return Err(invalid(format!("need 3 <= d < s, got s={s}, d={d}")));
    }
    Ok(())
}

/// `K^{s-1}` on `0..s-1` plus one new vertex joined to each
/// `(d-1)`-subset of the clique except the first one, `{0, .., d-2}`.
/// New vertices follow the lexicographic order of their subsets.
/// Returns the graph and the omitted subset.
pub fn thm22_core(s: usize, d: usize) -> Result<(Graph, Vec<usize>), GraphError> {
    check_sd(s, d)?;
    let k = s - 1;
    let mut edges: Vec<(usize, usize)> = (0..k).tuple_combinations().collect();
    let mut subsets = (0..k).combinations(d - 1);
    let omitted = subsets.next().expect("d - 1 <= s - 1");
    let mut next = k;
    for subset in subsets {
        edges.extend(subset.iter().map(|&c| (c, next)));
        next += 1;
    }
    Ok((Graph::new(next, edges)?, omitted))
}

/// Parameters of a glued family of [`thm22_core`] blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thm22Params {
    /// Order of the target.
    pub s: usize,
    /// Minimum degree of the target.
    pub d: usize,
    /// Vertex connectivity of the target.
    pub kappa: usize,
    pub copies: usize,
}

impl Thm22Params {
    pub fn validate(&self) -> Result<(), GraphError> {
        check_sd(self.s, self.d)?;
        if self.kappa == 0 || self.kappa > self.d {
            return Err(invalid(format!("need 1 <= kappa <= d, got kappa={}", self.kappa)));
        }
        if self.copies == 0 {
            return Err(invalid("copies must be at least 1".into()));
        }
        Ok(())
    }

    /// Vertices shared by all copies.
    pub fn shared(&self) -> Result<Vec<usize>, GraphError> {
        self.validate()?;
        Ok(if self.kappa == self.d {
            thm22_core(self.s, self.d)?.1
        } else {
            (0..self.kappa - 1).collect()
        })
    }
}

/// Copies of [`thm22_core`]: disjoint for `kappa = 1`, glued on the clique
/// vertices `{0, .., kappa-2}` for `2 <= kappa <= d-1`, glued on the omitted
/// subset for `kappa = d`.
pub fn thm22_family(p: &Thm22Params) -> Result<Graph, GraphError> {
    let shared = p.shared()?;
    let (block, _) = thm22_core(p.s, p.d)?;
    glue_on_clique(&GlueSpec {
        block,
        shared,
        copies: p.copies,
    })
}

/// Edge density of the glued family as the number of copies grows:
/// `(d-1) + (C(s-1,2) + C(d,2) - (d-1)(s-1)) / (C(s-1,d-1) + (s-1) - d)`.
pub fn thm22_density(s: usize, d: usize) -> Result<Ratio<i64>, GraphError> {
    check_sd(s, d)?;
    let (s, d) = (s as i64, d as i64);
    let num = binomial(s - 1, 2) + binomial(d, 2) - (d - 1) * (s - 1);
    let den = binomial(s - 1, d - 1) + (s - 1) - d;
    Ok(Ratio::from_integer(d - 1) + Ratio::new(num, den))
}

/// Edges added per vertex when a block is glued repeatedly on `shared`
/// vertices: `(m - C(k,2)) / (n - k)`.
pub fn block_density(block: &Graph, shared: usize) -> Result<Ratio<i64>, GraphError> {
    if shared >= block.n() {
        return Err(invalid(format!(
            "shared set of {shared} vertices leaves nothing of a {}-vertex block",
            block.n()
        )));
    }
    let k = shared as i64;
    Ok(Ratio::new(block.m() as i64 - binomial(k, 2), block.n() as i64 - k))
}

/// `K^r` on `0..r` with the edge `{0, 1}` replaced by a path through
/// `path_len` new vertices `r, .., r+path_len-1`.
pub fn star_saturated(r: usize, path_len: usize) -> Result<Graph, GraphError> {
    if r < 3 || path_len == 0 {
        return Err(invalid(format!(
            "need r >= 3 and path_len >= 1, got r={r}, path_len={path_len}"
        )));
    }
    let n = r + path_len;
    let mut edges: Vec<(usize, usize)> = complete(r)?.edges().filter(|&e| e != (0, 1)).collect();
    let mut prev = 0;
    for v in r..n {
        edges.push((prev, v));
        prev = v;
    }
    edges.push((prev, 1));
    Graph::new(n, edges)
}

/// Copies of `block` identified along the clique `shared`.
#[derive(Clone, Debug)]
pub struct GlueSpec {
    pub block: Graph,
    pub shared: Vec<usize>,
    pub copies: usize,
}

/// Copy 0 keeps the block numbering. Copy `c >= 1` maps shared vertices to
/// their copy-0 ids and its remaining vertices, in ascending order, to
/// `n_b + (c-1)(n_b - k) ..`.
pub fn glue_on_clique(spec: &GlueSpec) -> Result<Graph, GraphError> {
    let GlueSpec { block, shared, copies } = spec;
    let nb = block.n();
    if *copies == 0 {
        return Err(invalid("copies must be at least 1".into()));
    }
    if let Some(&v) = shared.iter().find(|&&v| v >= nb) {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: nb });
    }
    if shared.iter().duplicates().next().is_some() {
        return Err(invalid(format!("shared set {shared:?} repeats a vertex")));
    }
    if let Some((u, v)) = shared
        .iter()
        .tuple_combinations()
        .find(|(&u, &v)| !block.has_edge(u, v))
    {
        return Err(invalid(format!("shared vertices {u} and {v} are not adjacent")));
    }
    let k = shared.len();
    let rest: Vec<usize> = (0..nb).filter(|v| !shared.contains(v)).collect();
    let n = copies * nb - (copies - 1) * k;
    let mut edges = Vec::with_capacity(copies * block.m());
    for c in 0..*copies {
        let mut map: Vec<usize> = (0..nb).collect();
        if c > 0 {
            let offset = nb + (c - 1) * (nb - k);
            for (i, &v) in rest.iter().enumerate() {
                map[v] = offset + i;
            }
        }
        edges.extend(block.edges().map(|(u, v)| (map[u], map[v])));
    }
    Graph::new(n, edges)
}

/// Edge-glued chains of the saturated blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainFamily {
    /// `GP(8,3)` blocks, `K^6`-saturated.
    Gp6,
    /// `GP(13,5)` blocks, `K^7`-saturated.
    Gp7,
    /// `GP(19,7)` blocks, `K^8`-saturated.
    Gp8,
    /// Wagner graph blocks, `K^5`-saturated.
    Wagner,
}

impl ChainFamily {
    pub const ALL: [ChainFamily; 4] = [
        ChainFamily::Gp6,
        ChainFamily::Gp7,
        ChainFamily::Gp8,
        ChainFamily::Wagner,
    ];

    pub fn block(self) -> Graph {
        let gp = |n, k| generalized_petersen(n, k).expect("valid GP parameters");
        match self {
            ChainFamily::Gp6 => gp(8, 3),
            ChainFamily::Gp7 => gp(13, 5),
            ChainFamily::Gp8 => gp(19, 7),
            ChainFamily::Wagner => wagner(),
        }
    }

    /// Order of the complete target the block is saturated for.
    pub fn target_order(self) -> usize {
        match self {
            ChainFamily::Gp6 => 6,
            ChainFamily::Gp7 => 7,
            ChainFamily::Gp8 => 8,
            ChainFamily::Wagner => 5,
        }
    }

    /// The shared edge: `{x0, x1}` for GP blocks, `{0, 1}` for Wagner.
    pub fn shared_edge(self) -> [usize; 2] {
        [0, 1]
    }

    pub fn chain(self, copies: usize) -> Result<Graph, GraphError> {
        glue_on_clique(&GlueSpec {
            block: self.block(),
            shared: self.shared_edge().to_vec(),
            copies,
        })
    }

    pub fn density(self) -> Ratio<i64> {
        block_density(&self.block(), 2).expect("blocks have more than two vertices")
    }
}

impl fmt::Display for ChainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainFamily::Gp6 => "gp6",
            ChainFamily::Gp7 => "gp7",
            ChainFamily::Gp8 => "gp8",
            ChainFamily::Wagner => "wagner",
        })
    }
}

impl FromStr for ChainFamily {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gp6" => Ok(ChainFamily::Gp6),
            "gp7" => Ok(ChainFamily::Gp7),
            "gp8" => Ok(ChainFamily::Gp8),
            "wagner" => Ok(ChainFamily::Wagner),
            _ => Err(invalid(format!("unknown chain family {s:?}"))),
        }
    }
}
