#![allow(dead_code)]

use minorsat::graph::Graph;
use minorsat::minor::{verify_model, MinorModel};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Tries every map from host vertices to `{unassigned, 0..h}`.
pub fn oracle_has_minor(host: &Graph, target: &Graph) -> bool {
    let n = host.n();
    let h = target.n();
    let base = h + 1;
    let total = base.pow(n as u32);
    let mut assign = vec![None; n];
    for code in 0..total {
        let mut c = code;
        for slot in assign.iter_mut() {
            let d = c % base;
            c /= base;
            *slot = if d == 0 { None } else { Some(d - 1) };
        }
        let model = MinorModel::from_assignment(assign.clone(), h);
        if verify_model(host, target, &model).is_ok() {
            return true;
        }
    }
    false
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Vertex connectivity by trying every vertex subset as a cut.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n - 1;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best || n - size < 2 {
            continue;
        }
        let keep: Vec<usize> = (0..n).filter(|v| mask & (1 << v) == 0).collect();
        if !g.induced_subgraph(&keep).is_connected() {
            best = size;
        }
    }
    best
}
