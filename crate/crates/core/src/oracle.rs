//! Exact reference routines for tiny graphs, plus the properness check.
//!
//! Nothing here shares code with the solver: adjacency is re-encoded as
//! bitmasks and the searches are plain exhaustive backtracking.

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;

/// Largest graph the brute-force routines accept.
pub const ORACLE_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} vertices; brute force is limited to {ORACLE_MAX_VERTICES}")]
    TooLarge(usize),
}

/// True iff `coloring` colors every vertex of `g` and every edge is bichromatic.
pub fn verify_coloring(g: &Graph, coloring: &Coloring) -> bool {
    coloring.len() == g.num_vertices()
        && coloring.is_total()
        && g.edges()
            .all(|(u, v)| coloring.color(u) != coloring.color(v))
}

fn adjacency_masks(g: &Graph) -> Result<Vec<u32>, OracleError> {
    let n = g.num_vertices();
    if n > ORACLE_MAX_VERTICES {
        return Err(OracleError::TooLarge(n));
    }
    Ok((0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | 1 << v))
        .collect())
}

fn grow_clique(adj: &[u32], current: u32, mut candidates: u32, best: &mut u32) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    while candidates != 0 {
        if current.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= !(1 << v);
        grow_clique(adj, current | 1 << v, candidates & adj[v], best);
    }
    if current.count_ones() > best.count_ones() {
        *best = current;
    }
}

fn max_clique_mask(adj: &[u32]) -> u32 {
    let all = if adj.is_empty() {
        0
    } else {
        u32::MAX >> (32 - adj.len())
    };
    let mut best = 0;
    grow_clique(adj, 0, all, &mut best);
    best
}

/// Exact clique number ω(G).
pub fn brute_force_max_clique(g: &Graph) -> Result<usize, OracleError> {
    let adj = adjacency_masks(g)?;
    Ok(max_clique_mask(&adj).count_ones() as usize)
}

/// Exact chromatic number χ(G).
pub fn brute_force_chromatic(g: &Graph) -> Result<usize, OracleError> {
    brute_force_coloring(g).map(|c| c.num_colors())
}

/// An optimal coloring, found by trying k = ω, ω+1, … with a maximum clique
/// precolored.
pub fn brute_force_coloring(g: &Graph) -> Result<Coloring, OracleError> {
    let adj = adjacency_masks(g)?;
    let n = adj.len();
    if n == 0 {
        return Ok(Coloring::uncolored(0));
    }
    let clique = max_clique_mask(&adj);
    let mut colors = vec![usize::MAX; n];
    let mut next = 0;
    for (v, c) in colors.iter_mut().enumerate() {
        if clique & 1 << v != 0 {
            *c = next;
            next += 1;
        }
    }
    let mut rest: Vec<usize> = (0..n).filter(|&v| clique & 1 << v == 0).collect();
    rest.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));

    for k in next.max(1)..=n {
        let mut attempt = colors.clone();
        if try_color(&adj, &rest, 0, k, next, &mut attempt) {
            let assignment: Vec<Option<usize>> = attempt.into_iter().map(Some).collect();
            return Ok(Coloring::from_assignment(&assignment));
        }
    }
    unreachable!("n colors always suffice")
}

fn try_color(
    adj: &[u32],
    order: &[usize],
    at: usize,
    k: usize,
    opened: usize,
    colors: &mut [usize],
) -> bool {
    let Some(&v) = order.get(at) else {
        return true;
    };
    // only one fresh color is worth trying: fresh colors are interchangeable
    for c in 0..k.min(opened + 1) {
        let clash = (0..adj.len()).any(|w| adj[v] & 1 << w != 0 && colors[w] == c);
        if clash {
            continue;
        }
        colors[v] = c;
        if try_color(adj, order, at + 1, k, opened.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}
