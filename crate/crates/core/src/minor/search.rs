//! Backtracking search for minor models.
//!
//! Branch sets are grown one vertex at a time from a root, so every branch
//! set stays connected. Each decision is binary: a vertex joins a branch,
//! or it is barred from that branch for the rest of the subtree. Target
//! vertices are handled in descending-degree order and every tie is broken
//! by ascending vertex id, so a search is fully deterministic.
//!
//! Pruning at every node:
//! * each unsatisfied target edge `{a, b}` needs a host edge between the
//!   regions that branches `a` and `b` can still grow into;
//! * the remaining free vertices must be able to seed every empty branch;
//! * for connected targets, contracting each branch set gives a residual
//!   graph that must still pass the spanning edge count.
//!
//! Interchangeable target vertices (twins) are ordered by the smallest
//! host vertex of their branch set.

use std::time::Instant;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::graph::Graph;

use super::{
    spanning_edge_bound, spanning_edge_requirement, verify_model, MinorError, MinorModel, MinorOutcome, MinorSearch,
    NoMinorReason, SearchBudget,
};

/// Decides whether `host` contains `target` as a minor.
///
/// Targets may have at most 64 vertices, and each host region searched
/// (a component for connected targets, the whole host otherwise) at most
/// 256 vertices.
pub fn find_minor(host: &Graph, target: &Graph, budget: SearchBudget) -> MinorSearch {
    run(host, target, budget, None)
}

/// Like [`find_minor`] but only searches completions of `seed`. Each
/// non-empty seeded branch must already induce a connected subgraph.
pub fn find_minor_seeded(
    host: &Graph,
    target: &Graph,
    budget: SearchBudget,
    seed: &MinorModel,
) -> Result<MinorSearch, MinorError> {
    if seed.host_n() != host.n() || seed.branch_count() != target.n() {
        return Err(MinorError::InvalidSeed(format!(
            "seed covers {} vertices with {} branches, expected {} and {}",
            seed.host_n(),
            seed.branch_count(),
            host.n(),
            target.n()
        )));
    }
    for (b, set) in seed.branches().iter().enumerate() {
        if set.is_empty() {
            continue;
        }
        let sub = host.induced_subgraph(set);
        if !sub.is_connected() {
            return Err(MinorError::InvalidSeed(format!("seeded branch {b} is disconnected")));
        }
    }
    if let Some((v, b)) = seed
        .assignment()
        .iter()
        .enumerate()
        .find_map(|(v, b)| b.filter(|&b| b >= target.n()).map(|b| (v, b)))
    {
        return Err(MinorError::InvalidSeed(format!("vertex {v} seeded into branch {b}")));
    }
    Ok(run(host, target, budget, Some(seed)))
}

/// `find_minor` as a boolean; budget exhaustion is an error.
pub fn has_minor(host: &Graph, target: &Graph, budget: SearchBudget) -> Result<bool, MinorError> {
    let res = find_minor(host, target, budget);
    match res.outcome {
        MinorOutcome::Model(_) => Ok(true),
        MinorOutcome::NoMinor(_) => Ok(false),
        MinorOutcome::BudgetExhausted => Err(MinorError::BudgetExhausted { nodes: res.nodes }),
    }
}

fn run(host: &Graph, target: &Graph, budget: SearchBudget, seed: Option<&MinorModel>) -> MinorSearch {
    let result = run_inner(host, target, budget, seed);
    if let MinorOutcome::Model(m) = &result.outcome {
        debug_assert_eq!(
            verify_model(host, target, m),
            Ok(()),
            "search returned an invalid model"
        );
        debug_assert!(
            !spanning_edge_bound(host, target),
            "search found a model the counting bound rules out"
        );
    }
    result
}

fn run_inner(host: &Graph, target: &Graph, budget: SearchBudget, seed: Option<&MinorModel>) -> MinorSearch {
    let h = target.n();
    let n = host.n();
    let done = |outcome| MinorSearch { outcome, nodes: 0 };
    if h == 0 {
        return done(MinorOutcome::Model(MinorModel::unassigned(n, 0)));
    }
    if h > n {
        return done(MinorOutcome::NoMinor(NoMinorReason::TooFewVertices {
            host: n,
            target: h,
        }));
    }
    assert!(h <= 64, "targets with more than 64 vertices are not supported");

    let comps = host.connected_components();
    let required = spanning_edge_requirement(n, target);
    if comps.len() == 1 && host.m() < required {
        return done(MinorOutcome::NoMinor(NoMinorReason::CountingBound {
            host_edges: host.m(),
            required,
        }));
    }

    let target_connected = target.is_connected();
    let regions = if target_connected {
        comps
    } else {
        vec![(0..n).collect()]
    };
    let seeded: Vec<usize> = seed
        .map(|s| (0..n).filter(|&v| s.branch_of(v).is_some()).collect())
        .unwrap_or_default();

    let deadline = budget.time_limit.map(|t| Instant::now() + t);
    let mut nodes = 0u64;
    let mut all_counting = true;
    for region in &regions {
        if !seeded.iter().all(|v| region.binary_search(v).is_ok()) {
            all_counting = false;
            continue;
        }
        let sub = host.induced_subgraph(region);
        if target_connected && (sub.n() < h || sub.m() < spanning_edge_requirement(sub.n(), target)) {
            continue;
        }
        all_counting = false;
        assert!(
            sub.n() <= MAX_VERTICES,
            "host regions above {MAX_VERTICES} vertices are not supported"
        );
        let local_seed: Option<Vec<Option<usize>>> = seed.map(|s| region.iter().map(|&v| s.branch_of(v)).collect());
        let mut engine = Engine::new(
            &sub,
            target,
            budget.max_nodes.saturating_sub(nodes),
            deadline,
            target_connected,
            seed.is_none(),
        );
        let found = engine.run(local_seed.as_deref());
        nodes += engine.nodes;
        match found {
            Err(Exhausted) => {
                return MinorSearch {
                    outcome: MinorOutcome::BudgetExhausted,
                    nodes,
                }
            }
            Ok(Some(local)) => {
                let mut branch_of = vec![None; n];
                for (i, &v) in region.iter().enumerate() {
                    branch_of[v] = local[i];
                }
                return MinorSearch {
                    outcome: MinorOutcome::Model(MinorModel::from_assignment(branch_of, h)),
                    nodes,
                };
            }
            Ok(None) => {}
        }
    }
    let reason = if all_counting {
        NoMinorReason::ComponentCounting
    } else {
        NoMinorReason::Exhausted
    };
    MinorSearch {
        outcome: MinorOutcome::NoMinor(reason),
        nodes,
    }
}

struct Exhausted;

#[derive(Clone)]
struct State {
    sets: Vec<VertexSet>,
    /// Union of host neighborhoods of each branch set.
    nset: Vec<VertexSet>,
    /// Vertices that may still join each branch.
    allow: Vec<VertexSet>,
    unassigned: VertexSet,
}

impl State {
    fn assign(&mut self, branch: usize, v: usize, nbr: &[VertexSet]) {
        self.sets[branch].insert(v);
        self.nset[branch] = self.nset[branch].union(&nbr[v]);
        self.unassigned.remove(v);
        for a in &mut self.allow {
            a.remove(v);
        }
    }
}

enum Step {
    Found,
    Dead,
    Grow { branch: usize, vertex: usize },
    Root { branch: usize, vertex: usize },
}

struct Engine {
    n: usize,
    h: usize,
    nbr: Vec<VertexSet>,
    /// Target vertex handled as branch `i`.
    order: Vec<usize>,
    /// Required branch pairs `(i, j)`, `i < j`.
    req: Vec<(usize, usize)>,
    req_mask: Vec<u64>,
    twins_after: Vec<Vec<usize>>,
    m_target: usize,
    q_bound: bool,
    break_twins: bool,
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Engine {
    fn new(
        host: &Graph,
        target: &Graph,
        max_nodes: u64,
        deadline: Option<Instant>,
        q_bound: bool,
        break_twins: bool,
    ) -> Self {
        let h = target.n();
        let mut order: Vec<usize> = (0..h).collect();
        order.sort_by_key(|&t| (std::cmp::Reverse(target.degree(t)), t));
        let mut pos = vec![0; h];
        for (i, &t) in order.iter().enumerate() {
            pos[t] = i;
        }
        let mut req = Vec::new();
        let mut req_mask = vec![0u64; h];
        for (a, b) in target.edges() {
            let (i, j) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
            req.push((i, j));
            req_mask[i] |= 1 << j;
            req_mask[j] |= 1 << i;
        }
        req.sort_unstable();
        let twins = |a: usize, b: usize| {
            let na: Vec<usize> = target.neighbors(a).iter().copied().filter(|&x| x != b).collect();
            let nb: Vec<usize> = target.neighbors(b).iter().copied().filter(|&x| x != a).collect();
            na == nb
        };
        let twins_after = (0..h)
            .map(|i| (i + 1..h).filter(|&j| twins(order[i], order[j])).collect())
            .collect();
        Engine {
            n: host.n(),
            h,
            nbr: host.neighbor_sets(),
            order,
            req,
            req_mask,
            twins_after,
            m_target: target.m(),
            q_bound,
            break_twins,
            nodes: 0,
            max_nodes,
            deadline,
        }
    }

    /// Returns the assignment (target vertex per host vertex) of a model.
    fn run(&mut self, seed: Option<&[Option<usize>]>) -> Result<Option<Vec<Option<usize>>>, Exhausted> {
        let all = VertexSet::full(self.n);
        let mut st = State {
            sets: vec![VertexSet::EMPTY; self.h],
            nset: vec![VertexSet::EMPTY; self.h],
            allow: vec![all; self.h],
            unassigned: all,
        };
        if let Some(seed) = seed {
            let mut pos = vec![0; self.h];
            for (i, &t) in self.order.iter().enumerate() {
                pos[t] = i;
            }
            for (v, t) in seed.iter().enumerate() {
                if let Some(t) = *t {
                    st.assign(pos[t], v, &self.nbr);
                }
            }
        }
        Ok(self.search(st)?.map(|st| {
            let mut out = vec![None; self.n];
            for (i, set) in st.sets.iter().enumerate() {
                for v in set.iter() {
                    out[v] = Some(self.order[i]);
                }
            }
            out
        }))
    }

    fn tick(&mut self) -> Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Exhausted);
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Exhausted);
                }
            }
        }
        Ok(())
    }

    fn search(&mut self, mut st: State) -> Result<Option<State>, Exhausted> {
        loop {
            self.tick()?;
            match self.examine(&st) {
                Step::Found => return Ok(Some(st)),
                Step::Dead => return Ok(None),
                Step::Grow { branch, vertex } => {
                    let mut child = st.clone();
                    child.assign(branch, vertex, &self.nbr);
                    if let Some(found) = self.search(child)? {
                        return Ok(Some(found));
                    }
                    st.allow[branch].remove(vertex);
                }
                Step::Root { branch, vertex } => {
                    let mut child = st.clone();
                    child.assign(branch, vertex, &self.nbr);
                    if self.break_twins {
                        for &t in &self.twins_after[branch] {
                            child.allow[t] = child.allow[t].above(vertex);
                        }
                    }
                    if let Some(found) = self.search(child)? {
                        return Ok(Some(found));
                    }
                    st.allow[branch].remove(vertex);
                }
            }
        }
    }

    fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(&self.nbr[v]))
    }

    fn satisfied(&self, st: &State, i: usize, j: usize) -> bool {
        !st.sets[i].is_empty() && !st.sets[j].is_empty() && st.nset[i].intersects(&st.sets[j])
    }

    fn examine(&self, st: &State) -> Step {
        let h = self.h;
        let mut first_unsat = None;
        let mut any_unsat = false;
        for &(i, j) in &self.req {
            if !self.satisfied(st, i, j) {
                any_unsat = true;
                if first_unsat.is_none() && !st.sets[i].is_empty() && !st.sets[j].is_empty() {
                    first_unsat = Some((i, j));
                }
            }
        }
        let first_empty = (0..h).find(|&i| st.sets[i].is_empty());
        if !any_unsat && first_empty.is_none() {
            return Step::Found;
        }

        // Regions each branch can still grow into, and their neighborhoods.
        let mut reach = Vec::with_capacity(h);
        let mut nreach = Vec::with_capacity(h);
        for i in 0..h {
            if st.sets[i].is_empty() {
                if st.allow[i].is_empty() {
                    return Step::Dead;
                }
                reach.push(st.allow[i]);
                nreach.push(self.neighborhood(&st.allow[i]));
            } else {
                let mut r = st.sets[i];
                let mut nb = st.nset[i];
                loop {
                    let add = nb.intersection(&st.allow[i]).difference(&r);
                    if add.is_empty() {
                        break;
                    }
                    nb = nb.union(&self.neighborhood(&add));
                    r = r.union(&add);
                }
                reach.push(r);
                nreach.push(nb);
            }
        }
        for &(i, j) in &self.req {
            if !self.satisfied(st, i, j) && !nreach[i].intersects(&reach[j]) {
                return Step::Dead;
            }
        }
        let empties: Vec<usize> = (0..h).filter(|&i| st.sets[i].is_empty()).collect();
        if !empties.is_empty() {
            let pool = empties.iter().fold(VertexSet::EMPTY, |acc, &i| acc.union(&st.allow[i]));
            if pool.len() < empties.len() {
                return Step::Dead;
            }
        }
        if self.q_bound && empties.len() < h && !self.residual_count_ok(st, &reach, &empties) {
            return Step::Dead;
        }

        if let Some((i, j)) = first_unsat {
            return self.grow_step(st, i, j);
        }
        let branch = first_empty.expect("unsatisfied pair implies an empty branch");
        let vertex = st.allow[branch].first().expect("checked non-empty above");
        Step::Root { branch, vertex }
    }

    /// Spanning edge count on the graph obtained by contracting every
    /// non-empty branch set and dropping vertices no branch can reach.
    fn residual_count_ok(&self, st: &State, reach: &[VertexSet], empties: &[usize]) -> bool {
        let h = self.h;
        let assigned = st.sets.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(s));
        let live = reach
            .iter()
            .fold(VertexSet::EMPTY, |acc, r| acc.union(r))
            .difference(&assigned);
        let nonempty: Vec<usize> = (0..h).filter(|&i| !st.sets[i].is_empty()).collect();

        // Component of the residual graph containing the first branch.
        // Branch-branch edges count only for required pairs.
        let mut comp_b = 0u64;
        let mut comp_l = VertexSet::EMPTY;
        let mut acc = VertexSet::EMPTY;
        let mut queue = vec![nonempty[0]];
        comp_b |= 1 << nonempty[0];
        loop {
            while let Some(b) = queue.pop() {
                acc = acc.union(&st.nset[b]);
                for &c in &nonempty {
                    if comp_b >> c & 1 == 0 && self.req_mask[b] >> c & 1 == 1 && st.nset[b].intersects(&st.sets[c]) {
                        comp_b |= 1 << c;
                        queue.push(c);
                    }
                }
            }
            let new_l = acc.intersection(&live).difference(&comp_l);
            if new_l.is_empty() {
                break;
            }
            acc = acc.union(&self.neighborhood(&new_l));
            comp_l = comp_l.union(&new_l);
            for &c in &nonempty {
                if comp_b >> c & 1 == 0 && st.nset[c].intersects(&comp_l) {
                    comp_b |= 1 << c;
                    queue.push(c);
                }
            }
        }
        if comp_b.count_ones() as usize != nonempty.len() {
            return false;
        }
        if !empties.is_empty() {
            let pool = empties
                .iter()
                .fold(VertexSet::EMPTY, |acc, &i| acc.union(&st.allow[i]))
                .intersection(&comp_l);
            if pool.len() < empties.len() || empties.iter().any(|&i| !st.allow[i].intersects(&comp_l)) {
                return false;
            }
        }
        let n_q = nonempty.len() + comp_l.len();
        if n_q < h {
            return false;
        }
        let e_ll: usize = comp_l
            .iter()
            .map(|v| self.nbr[v].intersection(&comp_l).len())
            .sum::<usize>()
            / 2;
        let e_bl: usize = nonempty.iter().map(|&b| st.nset[b].intersection(&comp_l).len()).sum();
        let e_bb = self.req.iter().filter(|&&(i, j)| self.satisfied(st, i, j)).count();
        e_ll + e_bl + e_bb >= n_q - h + self.m_target
    }

    /// Picks a frontier vertex of branch `i` or `j` closest to the other
    /// branch.
    fn grow_step(&self, st: &State, i: usize, j: usize) -> Step {
        let fi = st.nset[i].intersection(&st.allow[i]);
        let fj = st.nset[j].intersection(&st.allow[j]);
        let hit_i = self.first_hit(st.sets[j], fi, st.unassigned);
        let hit_j = self.first_hit(st.sets[i], fj, st.unassigned);
        let pick = match (hit_i, hit_j) {
            (Some((di, vi)), Some((dj, vj))) => {
                if dj < di {
                    (j, vj)
                } else {
                    (i, vi)
                }
            }
            (Some((_, vi)), None) => (i, vi),
            (None, Some((_, vj))) => (j, vj),
            (None, None) => match (fi.first(), fj.first()) {
                (Some(v), _) => (i, v),
                (None, Some(v)) => (j, v),
                (None, None) => return Step::Dead,
            },
        };
        Step::Grow {
            branch: pick.0,
            vertex: pick.1,
        }
    }

    /// Breadth-first layers from `from` through `through`; returns the depth
    /// and smallest vertex of the first layer meeting `targets`.
    fn first_hit(&self, from: VertexSet, targets: VertexSet, through: VertexSet) -> Option<(usize, usize)> {
        if targets.is_empty() {
            return None;
        }
        let mut seen = from;
        let mut layer = from;
        let mut depth = 0;
        loop {
            let next = self.neighborhood(&layer).intersection(&through).difference(&seen);
            depth += 1;
            let hits = next.intersection(&targets);
            if let Some(v) = hits.first() {
                return Some((depth, v));
            }
            if next.is_empty() {
                return None;
            }
            seen = seen.union(&next);
            layer = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, generalized_petersen, path, star, wagner, GpLabel};

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn small_examples() {
        let k3 = complete(3).unwrap();
        assert_eq!(has_minor(&cycle(4).unwrap(), &k3, budget()), Ok(true));
        assert_eq!(has_minor(&wagner(), &complete(5).unwrap(), budget()), Ok(false));
        let k6 = complete(6).unwrap();
        assert_eq!(has_minor(&k6, &k6, budget()), Ok(true));
        let r = find_minor(&path(5).unwrap(), &star(3).unwrap(), budget());
        assert!(matches!(r.outcome, MinorOutcome::NoMinor(_)), "{r}");
        assert_eq!(has_minor(&path(4).unwrap(), &k3, budget()), Ok(false));
    }

    #[test]
    fn gp83_counting_and_model() {
        let gp = generalized_petersen(8, 3).unwrap();
        let k6 = complete(6).unwrap();
        let r = find_minor(&gp, &k6, budget());
        assert_eq!(
            r.outcome,
            MinorOutcome::NoMinor(NoMinorReason::CountingBound {
                host_edges: 24,
                required: 25
            })
        );
        let x0 = GpLabel::x(0).to_vertex(8).unwrap();
        let y2 = GpLabel::y(2).to_vertex(8).unwrap();
        let plus = gp.add_edge(x0, y2).unwrap();
        let r = find_minor(&plus, &k6, budget());
        let m = r.model().expect("GP(8,3) + x0y2 has a K6 minor");
        assert_eq!(verify_model(&plus, &k6, m), Ok(()));
    }

    #[test]
    fn disconnected_host_and_target() {
        // two disjoint triangles contain 2K2 and K3, but not K4
        let host = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(has_minor(&host, &two_k2, budget()), Ok(true));
        assert_eq!(has_minor(&host, &complete(3).unwrap(), budget()), Ok(true));
        let r = find_minor(&host, &complete(4).unwrap(), budget());
        assert_eq!(r.outcome, MinorOutcome::NoMinor(NoMinorReason::ComponentCounting));
        // a single edge contains two isolated vertices but not 2K2
        let k2 = complete(2).unwrap();
        assert_eq!(has_minor(&k2, &Graph::empty(2), budget()), Ok(true));
        assert_eq!(has_minor(&path(3).unwrap(), &two_k2, budget()), Ok(false));
        assert_eq!(has_minor(&path(4).unwrap(), &two_k2, budget()), Ok(true));
    }

    #[test]
    fn seeded_search_respects_seed() {
        let c4 = cycle(4).unwrap();
        let k3 = complete(3).unwrap();
        let seed = MinorModel::from_branches(4, &[vec![0, 1], vec![], vec![]]);
        let r = find_minor_seeded(&c4, &k3, budget(), &seed).unwrap();
        let m = r.model().unwrap();
        assert_eq!(m.branch_of(0), Some(0));
        assert_eq!(m.branch_of(1), Some(0));
        // seeding a branch with both neighbours of a vertex leaves no K3
        let seed = MinorModel::from_branches(4, &[vec![0, 1, 2], vec![], vec![]]);
        let r = find_minor_seeded(&c4, &k3, budget(), &seed).unwrap();
        assert!(r.model().is_none());
        let bad = MinorModel::from_branches(4, &[vec![0, 2], vec![], vec![]]);
        assert!(find_minor_seeded(&c4, &k3, budget(), &bad).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let host = complete(7).unwrap();
        let r = find_minor(&host, &complete(8).unwrap(), SearchBudget::nodes(1));
        assert!(matches!(r.outcome, MinorOutcome::NoMinor(_)));
        let wag = wagner();
        let r = find_minor(
            &wag.add_edge(0, 2).unwrap(),
            &complete(5).unwrap(),
            SearchBudget::nodes(1),
        );
        assert_eq!(r.outcome, MinorOutcome::BudgetExhausted);
        assert!(matches!(
            has_minor(
                &wag.add_edge(0, 2).unwrap(),
                &complete(5).unwrap(),
                SearchBudget::nodes(1)
            ),
            Err(MinorError::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn deterministic_witness() {
        let plus = wagner().add_edge(0, 2).unwrap();
        let k5 = complete(5).unwrap();
        let a = find_minor(&plus, &k5, budget());
        let b = find_minor(&plus, &k5, budget());
        assert_eq!(a, b);
        assert!(a.model().is_some());
    }
}
