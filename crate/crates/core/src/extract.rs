use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::Rng;

use crate::graph::{Graph, Vertex};
use crate::view::SubgraphView;

/// Candidate set with lazily updated candidate-restricted degrees.
struct Candidates {
    member: Vec<bool>,
    degree: Vec<usize>,
    heap: BinaryHeap<(usize, Reverse<Vertex>)>,
}

impl Candidates {
    fn remove(&mut self, base: &Graph, w: Vertex) {
        self.member[w] = false;
        for &x in base.neighbors(w) {
            if self.member[x] {
                self.degree[x] -= 1;
                self.heap.push((self.degree[x], Reverse(x)));
            }
        }
    }
}

/// Skip probability used in a given round: `(round mod 25) / 100`.
pub fn skip_probability(round: u64) -> f64 {
    (round % 25) as f64 / 100.0
}

/// Greedy independent set that always considers the candidate of largest
/// degree within the candidate set (ties: smaller id) and skips it with the
/// round's skip probability. Never returns an empty set.
pub fn find_independent_set<R: Rng + ?Sized>(
    view: &SubgraphView<'_>,
    round: u64,
    rng: &mut R,
) -> Vec<Vertex> {
    assert!(
        !view.is_empty(),
        "independent set requested from an empty kernel"
    );
    let p = skip_probability(round);
    let base = view.base();

    let mut cand = Candidates {
        member: vec![false; base.num_vertices()],
        degree: vec![0; base.num_vertices()],
        heap: BinaryHeap::with_capacity(view.alive_count()),
    };
    for &v in view.alive() {
        cand.member[v] = true;
        cand.degree[v] = view.live_degree(v);
        cand.heap.push((cand.degree[v], Reverse(v)));
    }

    let mut set = Vec::new();
    let mut first = None;
    while let Some((d, Reverse(v))) = cand.heap.pop() {
        if !cand.member[v] || d != cand.degree[v] {
            continue;
        }
        first.get_or_insert(v);
        cand.remove(base, v);
        if rng.gen_bool(1.0 - p) {
            set.push(v);
            for &w in base.neighbors(v) {
                if cand.member[w] {
                    cand.remove(base, w);
                }
            }
        }
    }
    if set.is_empty() {
        set.extend(first);
    }
    set.sort_unstable();
    set
}
