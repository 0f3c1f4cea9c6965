//! Partition certificates for minor-saturation of Generalized Petersen
//! graphs.
//!
//! A certificate splits `V(G)` into `r` connected groups so that every pair
//! of groups is joined by an edge, except one *missing* pair. Adding any
//! edge between the two missing groups completes a `K^r` model with the
//! groups as branch sets. A bundle holds one base certificate, a few
//! single-vertex moves that shift the missing pair, and a coverage table
//! assigning every non-edge orbit (under the dihedral group) to a
//! certificate together with a concrete orbit member it covers.
//!
//! Verification never runs the minor search: minor-freeness comes from the
//! edge counting bound and each `G + e` model is checked directly.

mod bundle;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{
    complete, edge, generalized_petersen, gp_dihedral_group, nonedge_orbits, Edge, GpLabel, Graph, GraphError,
    VertexPermutation,
};
use crate::minor::{spanning_edge_bound, spanning_edge_requirement, verify_model, MinorModel};
use crate::saturation::{check_lower_bound_invariants, EDGES_3N_2};

pub use bundle::{parse_bundle, write_bundle, BundleParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCert {
    pub groups: Vec<Vec<usize>>,
    /// The one group pair without a cross edge, smaller index first.
    pub missing: (usize, usize),
}

impl PartitionCert {
    fn owners(&self, n: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; n];
        for (i, g) in self.groups.iter().enumerate() {
            for &v in g {
                if v < n {
                    owner[v] = Some(i);
                }
            }
        }
        owner
    }
}

/// Move `vertex` from group `from` to group `to`; afterwards the missing
/// pair is `missing`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveRule {
    pub vertex: GpLabel,
    pub from: usize,
    pub to: usize,
    pub missing: (usize, usize),
}

impl MoveRule {
    /// `x0 A4 -> A6`
    pub fn describe(&self) -> String {
        format!("{} A{} -> A{}", self.vertex, self.from + 1, self.to + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertId {
    Base,
    Move(usize),
}

impl fmt::Display for CertId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertId::Base => f.write_str("base"),
            CertId::Move(i) => write!(f, "M{}", i + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageEntry {
    /// Orbit representative (lexicographically least member).
    pub canonical: Edge,
    /// The orbit member whose endpoints straddle the missing pair.
    pub instance: Edge,
    pub cert: CertId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationBundle {
    pub n: usize,
    pub k: usize,
    /// Target clique order.
    pub r: usize,
    pub base: PartitionCert,
    pub moves: Vec<MoveRule>,
    pub coverage: Vec<CoverageEntry>,
}

impl SaturationBundle {
    pub fn graph(&self) -> Result<Graph, GraphError> {
        generalized_petersen(self.n, self.k)
    }

    pub fn target(&self) -> Graph {
        complete(self.r).expect("r >= 1")
    }

    pub fn label(&self, v: usize) -> GpLabel {
        GpLabel::from_vertex(v, self.n)
    }

    pub fn edge_label(&self, (u, v): Edge) -> String {
        format!("{}{}", self.label(u), self.label(v))
    }

    /// The base certificate, or the base with one move applied.
    pub fn cert(&self, g: &Graph, id: CertId) -> Result<PartitionCert, CertError> {
        match id {
            CertId::Base => Ok(self.base.clone()),
            CertId::Move(i) => {
                let mv = self.moves.get(i).ok_or(CertError::UnknownCert(id))?;
                apply_move(g, &self.base, mv)
            }
        }
    }

    pub fn coverage_row(&self, c: &CoverageEntry) -> String {
        format!(
            "{} -> {} @ {}",
            self.edge_label(c.canonical),
            self.edge_label(c.instance),
            c.cert
        )
    }
}

/// Loads one of the bundled certificate files: `r = 6, 7, 8` for
/// `GP(8,3)`, `GP(13,5)` and `GP(19,7)`.
pub fn paper_bundle(r: usize) -> Option<SaturationBundle> {
    let text = match r {
        6 => include_str!("../../data/gp8_3_k6.cert"),
        7 => include_str!("../../data/gp13_5_k7.cert"),
        8 => include_str!("../../data/gp19_7_k8.cert"),
        _ => return None,
    };
    Some(parse_bundle(text).expect("bundled certificate files parse"))
}

/// First violated certificate invariant. Groups are shown 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertDefect {
    #[error("vertex {vertex} in A{} is out of range", .group + 1)]
    VertexOutOfRange { group: usize, vertex: usize },
    #[error("vertex {vertex} appears in A{} and A{}", .first + 1, .second + 1)]
    DuplicateVertex { vertex: usize, first: usize, second: usize },
    #[error("vertex {0} is in no group")]
    UncoveredVertex(usize),
    #[error("A{} is empty", .0 + 1)]
    EmptyGroup(usize),
    #[error("A{} does not induce a connected subgraph", .0 + 1)]
    DisconnectedGroup(usize),
    #[error("missing pair (A{}, A{}) is not two distinct groups", .0 + 1, .1 + 1)]
    BadMissingPair(usize, usize),
    #[error("missing pair A{} and A{} are joined by an edge", .0 + 1, .1 + 1)]
    MissingPairAdjacent(usize, usize),
    #[error("no edge between A{} and A{}", .0 + 1, .1 + 1)]
    ExtraMissingPair(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertError {
    #[error("{vertex} is not in A{}", .group + 1)]
    VertexNotInGroup { vertex: GpLabel, group: usize },
    #[error("group A{} does not exist", .0 + 1)]
    GroupOutOfRange(usize),
    #[error("after moving {vertex}: {defect}")]
    InvalidAfterMove { vertex: GpLabel, defect: CertDefect },
    #[error("invalid certificate: {0}")]
    Invalid(CertDefect),
    #[error("edge {u} {v} does not join A{} and A{}", .missing.0 + 1, .missing.1 + 1)]
    EndpointsNotInMissingPair {
        u: usize,
        v: usize,
        missing: (usize, usize),
    },
    #[error("no certificate {0}")]
    UnknownCert(CertId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Checks that the groups partition `V(g)` into connected sets with a
/// cross edge between every pair except exactly `cert.missing`.
pub fn verify_partition_cert(g: &Graph, cert: &PartitionCert) -> Result<(), CertDefect> {
    let n = g.n();
    let h = cert.groups.len();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, group) in cert.groups.iter().enumerate() {
        if group.is_empty() {
            return Err(CertDefect::EmptyGroup(i));
        }
        for &v in group {
            if v >= n {
                return Err(CertDefect::VertexOutOfRange { group: i, vertex: v });
            }
            if let Some(first) = owner[v] {
                return Err(CertDefect::DuplicateVertex {
                    vertex: v,
                    first,
                    second: i,
                });
            }
            owner[v] = Some(i);
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return Err(CertDefect::UncoveredVertex(v));
    }
    let owner: Vec<usize> = owner.into_iter().map(|o| o.unwrap()).collect();

    for (i, group) in cert.groups.iter().enumerate() {
        let mut seen = vec![group[0]];
        let mut stack = vec![group[0]];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if owner[w] == i && !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        if seen.len() != group.len() {
            return Err(CertDefect::DisconnectedGroup(i));
        }
    }

    let (a, b) = cert.missing;
    if a == b || a >= h || b >= h {
        return Err(CertDefect::BadMissingPair(a, b));
    }
    let mut joined = vec![vec![false; h]; h];
    for (u, v) in g.edges() {
        joined[owner[u]][owner[v]] = true;
        joined[owner[v]][owner[u]] = true;
    }
    for (i, row) in joined.iter().enumerate() {
        for (j, &adjacent) in row.iter().enumerate().skip(i + 1) {
            let is_missing = (i, j) == (a.min(b), a.max(b));
            match (adjacent, is_missing) {
                (true, true) => return Err(CertDefect::MissingPairAdjacent(i, j)),
                (false, false) => return Err(CertDefect::ExtraMissingPair(i, j)),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Applies a move to `cert` (a GP graph's certificate) and re-verifies.
pub fn apply_move(g: &Graph, cert: &PartitionCert, mv: &MoveRule) -> Result<PartitionCert, CertError> {
    let h = cert.groups.len();
    for idx in [mv.from, mv.to] {
        if idx >= h {
            return Err(CertError::GroupOutOfRange(idx));
        }
    }
    let v = mv.vertex.to_vertex(g.n() / 2)?;
    let not_in = CertError::VertexNotInGroup {
        vertex: mv.vertex,
        group: mv.from,
    };
    let pos = cert.groups[mv.from].iter().position(|&w| w == v).ok_or(not_in)?;
    let mut out = cert.clone();
    out.groups[mv.from].remove(pos);
    out.groups[mv.to].push(v);
    out.missing = (mv.missing.0.min(mv.missing.1), mv.missing.0.max(mv.missing.1));
    verify_partition_cert(g, &out).map_err(|defect| CertError::InvalidAfterMove {
        vertex: mv.vertex,
        defect,
    })?;
    Ok(out)
}

/// The groups of a valid certificate as a `K^r` model in `g + added`.
pub fn cert_to_model(g: &Graph, cert: &PartitionCert, added: Edge) -> Result<MinorModel, CertError> {
    verify_partition_cert(g, cert).map_err(CertError::Invalid)?;
    let (u, v) = added;
    if u >= g.n() || v >= g.n() {
        return Err(CertError::Graph(GraphError::VertexOutOfRange {
            vertex: u.max(v),
            n: g.n(),
        }));
    }
    let owner = cert.owners(g.n());
    let (a, b) = cert.missing;
    let ends = (owner[u].unwrap(), owner[v].unwrap());
    if ends != (a, b) && ends != (b, a) {
        return Err(CertError::EndpointsNotInMissingPair {
            u,
            v,
            missing: cert.missing,
        });
    }
    Ok(MinorModel::from_branches(g.n(), &cert.groups))
}

/// One verified certificate and how many orbits it covers.
#[derive(Clone, Debug)]
pub struct CertSummary {
    pub id: CertId,
    pub cert: PartitionCert,
    /// `None` for the base certificate.
    pub rule: Option<MoveRule>,
    pub covered: usize,
}

/// A verified coverage row.
#[derive(Clone, Debug)]
pub struct CoverageEvidence {
    pub entry: CoverageEntry,
    /// Dihedral element mapping `canonical` to `instance`.
    pub symmetry: VertexPermutation,
    pub model: MinorModel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertFailure {
    /// The bundle row that failed, in file syntax.
    pub row: String,
    pub reason: String,
}

impl fmt::Display for CertFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.row, self.reason)
    }
}

/// Evidence chain for one bundle, filled up to the first failure.
#[derive(Clone, Debug)]
pub struct CertReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub vertices: usize,
    pub edges: usize,
    /// Edges a connected host needs for a spanning `K^r` model.
    pub required_edges: usize,
    pub minor_free: bool,
    pub certs: Vec<CertSummary>,
    pub orbits: usize,
    pub group_order: usize,
    pub coverage: Vec<CoverageEvidence>,
    pub failure: Option<CertFailure>,
}

impl CertReport {
    pub fn is_saturated(&self) -> bool {
        self.failure.is_none()
    }

    fn label(&self, v: usize) -> GpLabel {
        GpLabel::from_vertex(v, self.n)
    }

    /// Line-oriented summary; `verbose` adds the certificates and models.
    pub fn render(&self, verbose: bool) -> String {
        let mut out = format!("graph: GP({},{}) target: K{}\n", self.n, self.k, self.r);
        out += &format!("vertices: {} edges: {}\n", self.vertices, self.edges);
        out += &format!(
            "minor-free: {} (counting bound: {} < {})\n",
            if self.minor_free { "yes" } else { "no" },
            self.edges,
            self.required_edges
        );
        for c in &self.certs {
            let (a, b) = c.cert.missing;
            let name = match &c.rule {
                None => "base".to_string(),
                Some(rule) => format!("{} ({})", c.id, rule.describe()),
            };
            out += &format!("certificate {name}: valid, missing pair A{} A{}\n", a + 1, b + 1);
            if verbose {
                for (i, g) in c.cert.groups.iter().enumerate() {
                    let names: Vec<String> = g.iter().map(|&v| self.label(v).to_string()).collect();
                    out += &format!("  A{}: {}\n", i + 1, names.join(" "));
                }
            }
        }
        if self.orbits > 0 {
            out += &format!(
                "non-edge orbits: {} (dihedral group of order {})\n",
                self.orbits, self.group_order
            );
        }
        if verbose {
            for ev in &self.coverage {
                let (c, i) = (ev.entry.canonical, ev.entry.instance);
                out += &format!(
                    "  {}{} ~ {}{} @ {}: {}\n",
                    self.label(c.0),
                    self.label(c.1),
                    self.label(i.0),
                    self.label(i.1),
                    ev.entry.cert,
                    ev.model
                );
            }
        }
        if self.failure.is_none() {
            let split: Vec<String> = self.certs.iter().map(|c| format!("{} {}", c.id, c.covered)).collect();
            out += &format!(
                "coverage: {}/{} orbits covered ({})\n",
                self.coverage.len(),
                self.orbits,
                split.join(", ")
            );
        }
        match &self.failure {
            None => out += "status: Saturated\n",
            Some(f) => out += &format!("status: Failed\nfailure: {f}\n"),
        }
        out
    }
}

impl fmt::Display for CertReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Verifies saturation of the bundled `GP` graph for `K^r`.
pub fn verify_saturation_by_certs(r: usize) -> Option<CertReport> {
    paper_bundle(r).map(|b| verify_bundle(&b))
}

/// Checks, stopping at the first failure:
/// minor-freeness by the edge counting bound, validity of the base and
/// every moved certificate, that the coverage canonicals are exactly the
/// non-edge orbit representatives, and for each row that the instance is
/// in the canonical's orbit and the certificate yields a `K^r` model of
/// `G + instance`.
pub fn verify_bundle(b: &SaturationBundle) -> CertReport {
    let mut report = CertReport {
        n: b.n,
        k: b.k,
        r: b.r,
        vertices: 0,
        edges: 0,
        required_edges: 0,
        minor_free: false,
        certs: Vec::new(),
        orbits: 0,
        group_order: 0,
        coverage: Vec::new(),
        failure: None,
    };
    let fail = |report: &mut CertReport, row: String, reason: String| {
        report.failure = Some(CertFailure { row, reason });
    };

    let g = match b.graph() {
        Ok(g) => g,
        Err(e) => {
            fail(&mut report, "[meta]".into(), e.to_string());
            return report;
        }
    };
    let target = b.target();
    report.vertices = g.n();
    report.edges = g.m();
    report.required_edges = spanning_edge_requirement(g.n(), &target);
    report.minor_free = g.is_connected() && spanning_edge_bound(&g, &target);
    if !report.minor_free {
        let reason = format!(
            "counting bound does not apply: {} edges, {} required",
            g.m(),
            report.required_edges
        );
        fail(&mut report, "[meta]".into(), reason);
        return report;
    }

    if b.base.groups.len() != b.r {
        let reason = format!("{} groups for target K{}", b.base.groups.len(), b.r);
        fail(&mut report, "[groups]".into(), reason);
        return report;
    }
    if let Err(d) = verify_partition_cert(&g, &b.base) {
        fail(&mut report, "[groups] base".into(), d.to_string());
        return report;
    }
    report.certs.push(CertSummary {
        id: CertId::Base,
        cert: b.base.clone(),
        rule: None,
        covered: 0,
    });
    for (i, mv) in b.moves.iter().enumerate() {
        let id = CertId::Move(i);
        match apply_move(&g, &b.base, mv) {
            Ok(cert) => report.certs.push(CertSummary {
                id,
                cert,
                rule: Some(mv.clone()),
                covered: 0,
            }),
            Err(e) => {
                fail(&mut report, format!("[moves] {id}: {}", mv.describe()), e.to_string());
                return report;
            }
        }
    }

    let group = gp_dihedral_group(b.n);
    report.group_order = group.len();
    let orbits = match nonedge_orbits(&g, &group) {
        Ok(o) => o,
        Err(e) => {
            fail(&mut report, "[meta]".into(), e.to_string());
            return report;
        }
    };
    report.orbits = orbits.len();

    let mut rows: BTreeMap<Edge, &CoverageEntry> = BTreeMap::new();
    for c in &b.coverage {
        if rows.insert(c.canonical, c).is_some() {
            let reason = "orbit covered twice".to_string();
            fail(&mut report, format!("[coverage] {}", b.coverage_row(c)), reason);
            return report;
        }
    }
    for o in &orbits {
        if !rows.contains_key(&o.representative) {
            let reason = format!("orbit of {} has no coverage row", b.edge_label(o.representative));
            fail(&mut report, "[coverage]".into(), reason);
            return report;
        }
    }
    for c in &b.coverage {
        if !orbits.iter().any(|o| o.representative == c.canonical) {
            let reason = format!("{} is not a non-edge orbit representative", b.edge_label(c.canonical));
            fail(&mut report, format!("[coverage] {}", b.coverage_row(c)), reason);
            return report;
        }
    }

    for o in &orbits {
        let c = rows[&o.representative];
        let row = format!("[coverage] {}", b.coverage_row(c));
        let (u, v) = c.instance;
        if g.has_edge(u, v) {
            fail(&mut report, row, "instance is already an edge".into());
            return report;
        }
        let Some(symmetry) = group.iter().find(|p| p.apply_edge(c.canonical) == edge(u, v)) else {
            fail(
                &mut report,
                row,
                "instance is not in the orbit of the canonical pair".into(),
            );
            return report;
        };
        let Some(slot) = report.certs.iter().position(|s| s.id == c.cert) else {
            fail(&mut report, row, format!("no certificate {}", c.cert));
            return report;
        };
        let model = match cert_to_model(&g, &report.certs[slot].cert, c.instance) {
            Ok(m) => m,
            Err(e) => {
                fail(&mut report, row, e.to_string());
                return report;
            }
        };
        let plus = g.add_edge(u, v).expect("checked non-edge");
        if let Err(d) = verify_model(&plus, &target, &model) {
            fail(&mut report, row, d.to_string());
            return report;
        }
        report.certs[slot].covered += 1;
        report.coverage.push(CoverageEvidence {
            entry: c.clone(),
            symmetry: symmetry.clone(),
            model,
        });
    }
    report
}

/// Bounds on `sat(n, M(K^r))` for the graph of a verified bundle: the
/// `3n/2` lower bound for targets of minimum degree at least 3, and the
/// exhibited graph's edge count above.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatValue {
    pub n: usize,
    pub r: usize,
    pub lower: usize,
    pub upper: usize,
}

impl SatValue {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

impl fmt::Display for SatValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(
                f,
                "sat({}, M(K{})) = {}: lower bound 3n/2, upper bound by exhibit",
                self.n, self.r, self.upper
            )
        } else {
            write!(f, "{} <= sat({}, M(K{})) <= {}", self.lower, self.n, self.r, self.upper)
        }
    }
}

/// `None` unless the report verified saturation.
pub fn sat_value(report: &CertReport) -> Option<SatValue> {
    if !report.is_saturated() {
        return None;
    }
    let g = generalized_petersen(report.n, report.k).ok()?;
    let lb = check_lower_bound_invariants(&g, &complete(report.r).ok()?);
    let c = lb.check(EDGES_3N_2)?;
    let lower = if c.applies { (3 * g.n()).div_ceil(2) } else { 0 };
    Some(SatValue {
        n: g.n(),
        r: report.r,
        lower,
        upper: g.m(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str, n: usize) -> usize {
        s.parse::<GpLabel>().unwrap().to_vertex(n).unwrap()
    }

    #[test]
    fn bundle_shapes() {
        for (r, sizes, missing, rows, total) in [
            (6, vec![3, 3, 3, 3, 2, 2], (4, 5), 10, 16),
            (7, vec![4, 4, 4, 4, 4, 3, 3], (5, 6), 16, 26),
            (8, vec![5, 5, 5, 5, 5, 5, 4, 4], (6, 7), 25, 38),
        ] {
            let b = paper_bundle(r).unwrap();
            let got: Vec<usize> = b.base.groups.iter().map(Vec::len).collect();
            assert_eq!(got, sizes);
            assert_eq!(got.iter().sum::<usize>(), total);
            assert_eq!(b.base.missing, missing);
            assert_eq!(b.moves.len(), 3 - usize::from(r == 6));
            assert_eq!(b.coverage.len(), rows);
        }
        assert!(paper_bundle(5).is_none());
    }

    #[test]
    fn base_certificates_valid() {
        for r in 6..=8 {
            let b = paper_bundle(r).unwrap();
            assert_eq!(verify_partition_cert(&b.graph().unwrap(), &b.base), Ok(()));
        }
    }

    #[test]
    fn perturbed_certificate_rejected() {
        let b = paper_bundle(6).unwrap();
        let g = b.graph().unwrap();
        let mut cert = b.base.clone();
        let x3 = v("x3", 8);
        cert.groups[0].retain(|&w| w != x3);
        cert.groups[1].push(x3);
        let err = verify_partition_cert(&g, &cert).unwrap_err();
        assert!(
            matches!(err, CertDefect::DisconnectedGroup(_) | CertDefect::ExtraMissingPair(..)),
            "{err}"
        );

        let mut dup = b.base.clone();
        let first = dup.groups[0][0];
        dup.groups[1].push(first);
        assert!(matches!(
            verify_partition_cert(&g, &dup),
            Err(CertDefect::DuplicateVertex { .. })
        ));
        let mut wrong = b.base.clone();
        wrong.missing = (0, 1);
        assert_eq!(
            verify_partition_cert(&g, &wrong),
            Err(CertDefect::MissingPairAdjacent(0, 1))
        );
    }

    #[test]
    fn moves_shift_missing_pair() {
        let b = paper_bundle(6).unwrap();
        let g = b.graph().unwrap();
        assert_eq!(apply_move(&g, &b.base, &b.moves[0]).unwrap().missing, (3, 4));
        assert_eq!(apply_move(&g, &b.base, &b.moves[1]).unwrap().missing, (2, 5));
        let b = paper_bundle(8).unwrap();
        let g = b.graph().unwrap();
        assert_eq!(b.moves[2].vertex, GpLabel::x(10));
        assert_eq!(apply_move(&g, &b.base, &b.moves[2]).unwrap().missing, (3, 7));
    }

    #[test]
    fn y4_into_a7_leaves_two_missing_pairs() {
        let b = paper_bundle(7).unwrap();
        let g = b.graph().unwrap();
        let mut mv = b.moves[2].clone();
        assert_eq!((mv.vertex, mv.to), (GpLabel::y(4), 5));
        mv.to = 6;
        let err = apply_move(&g, &b.base, &mv).unwrap_err();
        assert_eq!(
            err,
            CertError::InvalidAfterMove {
                vertex: GpLabel::y(4),
                defect: CertDefect::ExtraMissingPair(1, 5)
            }
        );
    }

    #[test]
    fn bad_moves_rejected() {
        let b = paper_bundle(6).unwrap();
        let g = b.graph().unwrap();
        let mut mv = b.moves[0].clone();
        mv.from = 0;
        assert!(matches!(
            apply_move(&g, &b.base, &mv),
            Err(CertError::VertexNotInGroup { .. })
        ));
        let mut mv = b.moves[0].clone();
        mv.missing = (0, 1);
        assert!(matches!(
            apply_move(&g, &b.base, &mv),
            Err(CertError::InvalidAfterMove { .. })
        ));
    }

    #[test]
    fn certificate_models() {
        let b = paper_bundle(6).unwrap();
        let g = b.graph().unwrap();
        let e = edge(v("x1", 8), v("y0", 8));
        let m = cert_to_model(&g, &b.base, e).unwrap();
        assert_eq!(
            verify_model(&g.add_edge(e.0, e.1).unwrap(), &complete(6).unwrap(), &m),
            Ok(())
        );
        let e = edge(v("x3", 8), v("x6", 8));
        assert!(matches!(
            cert_to_model(&g, &b.base, e),
            Err(CertError::EndpointsNotInMissingPair { .. })
        ));

        let b = paper_bundle(7).unwrap();
        let g = b.graph().unwrap();
        let e = edge(v("x5", 13), v("x7", 13));
        let m = cert_to_model(&g, &b.base, e).unwrap();
        assert_eq!(
            verify_model(&g.add_edge(e.0, e.1).unwrap(), &complete(7).unwrap(), &m),
            Ok(())
        );
    }

    #[test]
    fn full_verification() {
        for (r, orbits, split) in [
            (6, 10, vec![4, 3, 3]),
            (7, 16, vec![8, 4, 2, 2]),
            (8, 25, vec![12, 5, 6, 2]),
        ] {
            let report = verify_saturation_by_certs(r).unwrap();
            assert!(report.is_saturated(), "{report}");
            assert_eq!((report.orbits, report.coverage.len()), (orbits, orbits));
            let got: Vec<usize> = report.certs.iter().map(|c| c.covered).collect();
            assert_eq!(got, split);
        }
    }

    #[test]
    fn sat_values() {
        for (r, n, m) in [(6, 16, 24), (7, 26, 39), (8, 38, 57)] {
            let s = sat_value(&verify_saturation_by_certs(r).unwrap()).unwrap();
            assert_eq!((s.n, s.lower, s.upper), (n, m, m));
        }
        let s = sat_value(&verify_saturation_by_certs(6).unwrap()).unwrap();
        assert_eq!(
            s.to_string(),
            "sat(16, M(K6)) = 24: lower bound 3n/2, upper bound by exhibit"
        );
    }

    #[test]
    fn coverage_gaps_and_duplicates_reported() {
        let mut b = paper_bundle(6).unwrap();
        let dropped = b.coverage.pop().unwrap();
        let r = verify_bundle(&b);
        assert!(r.failure.unwrap().reason.contains("no coverage row"));

        b.coverage.push(dropped.clone());
        b.coverage.push(dropped);
        let r = verify_bundle(&b);
        assert!(r.failure.unwrap().reason.contains("twice"));

        let mut b = paper_bundle(6).unwrap();
        b.coverage[0].cert = CertId::Move(0);
        let f = verify_bundle(&b).failure.unwrap();
        assert_eq!(f.row, "[coverage] x0y1 -> x1y0 @ M1");
        assert!(f.reason.contains("does not join"));

        let mut b = paper_bundle(6).unwrap();
        b.coverage[0].instance = edge(v("x1", 8), v("y1", 8));
        let f = verify_bundle(&b).failure.unwrap();
        assert!(f.reason.contains("already an edge"));
    }
}
