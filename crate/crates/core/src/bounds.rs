//! Cheap bounds on the chromatic number of the current kernel.
//!
//! The lower bound grows random maximal cliques from a small fraction of
//! seed vertices. Upper bounds come from smallest-last greedy coloring
//! (linear time, used while the graph is still large) and a randomized
//! DSatur. All three take `usedcol`, the number of color classes already
//! committed in this round, and report bounds that include it.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use rand::seq::index;
use rand::Rng;

use crate::coloring::Coloring;
use crate::deadline::{Deadline, Ticker};
use crate::graph::Vertex;
use crate::view::SubgraphView;

const UNCOLORED: u32 = u32::MAX;
const NO_INDEX: u32 = u32::MAX;

/// Round-local bound bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundState {
    pub lb: usize,
    pub ub: usize,
    pub usedcol: usize,
}

impl BoundState {
    pub fn new(n: usize) -> Self {
        BoundState {
            lb: 0,
            ub: n,
            usedcol: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CliqueSearchParams {
    /// Fraction of alive vertices used as seeds.
    pub seed_fraction: f64,
    /// Candidates sampled per growth step.
    pub sample_size: usize,
}

impl Default for CliqueSearchParams {
    fn default() -> Self {
        CliqueSearchParams {
            seed_fraction: 0.01,
            sample_size: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueBound {
    /// `max(lb, |witness| + usedcol)`.
    pub lb: usize,
    /// Largest clique grown, pairwise adjacent.
    pub witness: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringBound {
    pub ub: usize,
    /// Proper coloring of the alive vertices, present only when it beat the
    /// incoming `ub`.
    pub coloring: Option<Coloring>,
}

impl ColoringBound {
    fn unchanged(ub: usize) -> Self {
        ColoringBound { ub, coloring: None }
    }
}

/// Randomized clique growth. Seeds whose clique plus remaining candidates
/// cannot beat the running bound are abandoned early.
pub fn find_clique<R: Rng + ?Sized>(
    view: &SubgraphView<'_>,
    lb: usize,
    usedcol: usize,
    params: &CliqueSearchParams,
    rng: &mut R,
    deadline: Deadline,
) -> CliqueBound {
    let mut lb = lb;
    let alive = view.alive();
    if alive.is_empty() {
        return CliqueBound {
            lb: lb.max(usedcol),
            witness: Vec::new(),
        };
    }
    let base = view.base();
    let seeds =
        ((params.seed_fraction * alive.len() as f64).floor() as usize).clamp(1, alive.len());
    let seeds: Vec<Vertex> = index::sample(rng, alive.len(), seeds)
        .into_iter()
        .map(|i| alive[i])
        .collect();
    let sample_size = params.sample_size.max(1);

    let mut mark = vec![0u32; base.num_vertices()];
    let mut stamp = 0u32;
    let mut best: Vec<Vertex> = Vec::new();

    for seed in seeds {
        if deadline.expired() {
            break;
        }
        let mut clique = vec![seed];
        let mut cand: Vec<Vertex> = view.live_neighbors(seed).collect();
        while !cand.is_empty() && clique.len() + cand.len() + usedcol > lb {
            stamp += 1;
            for &w in &cand {
                mark[w] = stamp;
            }
            let overlap = |v: Vertex| -> usize {
                let nv = base.neighbors(v);
                if nv.len() <= cand.len() {
                    nv.iter().filter(|&&w| mark[w] == stamp).count()
                } else {
                    cand.iter()
                        .filter(|&&w| nv.binary_search(&w).is_ok())
                        .count()
                }
            };
            let pick = |v: Vertex, best: Option<(usize, Vertex)>| {
                let score = overlap(v);
                match best {
                    Some((s, b)) if s > score || (s == score && b < v) => Some((s, b)),
                    _ => Some((score, v)),
                }
            };
            let chosen = if cand.len() <= sample_size {
                cand.iter().fold(None, |acc, &v| pick(v, acc))
            } else {
                index::sample(rng, cand.len(), sample_size)
                    .into_iter()
                    .fold(None, |acc, i| pick(cand[i], acc))
            };
            let (_, v) = chosen.expect("candidate set is non-empty");
            clique.push(v);
            cand.retain(|&w| w != v && base.has_edge(v, w));
        }
        if clique.len() + usedcol > lb {
            lb = clique.len() + usedcol;
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    CliqueBound { lb, witness: best }
}

/// Local (compact) indexing of the alive vertices, ascending by id.
struct LocalIndex {
    verts: Vec<Vertex>,
    index: Vec<u32>,
}

impl LocalIndex {
    fn new(view: &SubgraphView<'_>) -> Self {
        let verts = view.alive_sorted();
        let mut index = vec![NO_INDEX; view.base().num_vertices()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i as u32;
        }
        LocalIndex { verts, index }
    }

    fn neighbors<'a>(
        &'a self,
        view: &'a SubgraphView<'_>,
        i: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        view.base()
            .neighbors(self.verts[i])
            .iter()
            .filter_map(|&w| match self.index[w] {
                NO_INDEX => None,
                j => Some(j as usize),
            })
    }

    fn into_coloring(self, n: usize, local_colors: &[u32], num_colors: usize) -> Coloring {
        let mut colors = vec![UNCOLORED; n];
        for (i, &v) in self.verts.iter().enumerate() {
            colors[v] = local_colors[i];
        }
        Coloring::from_dense(colors, num_colors)
    }
}

fn empty_kernel_bound(view: &SubgraphView<'_>, ub: usize, usedcol: usize) -> ColoringBound {
    if usedcol >= ub {
        ColoringBound::unchanged(ub)
    } else {
        ColoringBound {
            ub: usedcol,
            coloring: Some(Coloring::uncolored(view.base().num_vertices())),
        }
    }
}

/// Smallest-last greedy coloring. Vertices are peeled in order of fewest
/// remaining neighbors with a bucket queue, then colored in reverse peel
/// order, so at most `degeneracy + 1` colors are used. Stops as soon as
/// `usedcol + colors ≥ ub`.
pub fn degeneracy_color(
    view: &SubgraphView<'_>,
    ub: usize,
    usedcol: usize,
    deadline: Deadline,
) -> ColoringBound {
    if view.is_empty() {
        return empty_kernel_bound(view, ub, usedcol);
    }
    let local = LocalIndex::new(view);
    let k = local.verts.len();
    let mut ticker = Ticker::new(deadline);

    // Batagelj–Zaversnik bucket peeling.
    let mut deg: Vec<usize> = local.verts.iter().map(|&v| view.live_degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    let mut bin_start = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin_start[d + 1] += 1;
    }
    for d in 0..=max_deg {
        bin_start[d + 1] += bin_start[d];
    }
    let mut order = vec![0usize; k];
    let mut pos = vec![0usize; k];
    {
        let mut next = bin_start.clone();
        for i in 0..k {
            pos[i] = next[deg[i]];
            order[pos[i]] = i;
            next[deg[i]] += 1;
        }
    }
    let mut removed = vec![false; k];
    for idx in 0..k {
        let v = order[idx];
        removed[v] = true;
        for w in local.neighbors(view, v) {
            if removed[w] || deg[w] <= deg[v] {
                continue;
            }
            let dw = deg[w];
            let first = bin_start[dw].max(idx + 1);
            let u = order[first];
            if u != w {
                order.swap(pos[w], first);
                pos[u] = pos[w];
                pos[w] = first;
            }
            bin_start[dw] = first + 1;
            deg[w] -= 1;
        }
        if ticker.tick() {
            return ColoringBound::unchanged(ub);
        }
    }

    let mut colors = vec![UNCOLORED; k];
    let mut seen: Vec<usize> = Vec::new();
    let mut num_colors = 0usize;
    for (step, &v) in order.iter().rev().enumerate() {
        seen.resize(num_colors + 1, usize::MAX);
        for w in local.neighbors(view, v) {
            if colors[w] != UNCOLORED {
                seen[colors[w] as usize] = step;
            }
        }
        let c = (0..num_colors)
            .find(|&c| seen[c] != step)
            .unwrap_or(num_colors);
        if c == num_colors {
            num_colors += 1;
            if usedcol + num_colors >= ub {
                return ColoringBound::unchanged(ub);
            }
        }
        colors[v] = c as u32;
        if ticker.tick() {
            return ColoringBound::unchanged(ub);
        }
    }
    let n = view.base().num_vertices();
    ColoringBound {
        ub: usedcol + num_colors,
        coloring: Some(local.into_coloring(n, &colors, num_colors)),
    }
}

/// Randomized DSatur: picks the uncolored vertex of maximum saturation
/// (ties: larger live degree, then smaller id) and gives it a uniformly
/// random already-open feasible color, opening a new color only when none
/// is feasible. Stops as soon as `usedcol + colors ≥ ub`.
pub fn dsatur_color<R: Rng + ?Sized>(
    view: &SubgraphView<'_>,
    ub: usize,
    usedcol: usize,
    rng: &mut R,
    deadline: Deadline,
) -> ColoringBound {
    if view.is_empty() {
        return empty_kernel_bound(view, ub, usedcol);
    }
    let local = LocalIndex::new(view);
    let k = local.verts.len();
    let mut ticker = Ticker::new(deadline);

    let degree: Vec<usize> = local.verts.iter().map(|&v| view.live_degree(v)).collect();
    // sorted distinct neighbor colors per vertex
    let mut saturation: Vec<Vec<u32>> = vec![Vec::new(); k];
    let key = |sat: usize, i: usize| (Reverse(sat), Reverse(degree[i]), i);
    let mut queue: BTreeSet<(Reverse<usize>, Reverse<usize>, usize)> =
        (0..k).map(|i| key(0, i)).collect();

    let mut colors = vec![UNCOLORED; k];
    let mut num_colors = 0usize;
    let mut feasible: Vec<u32> = Vec::new();
    while let Some((_, _, v)) = queue.pop_first() {
        feasible.clear();
        let mut taken = saturation[v].iter().peekable();
        for c in 0..num_colors as u32 {
            if taken.next_if_eq(&&c).is_none() {
                feasible.push(c);
            }
        }
        let c = if feasible.is_empty() {
            num_colors += 1;
            if usedcol + num_colors >= ub {
                return ColoringBound::unchanged(ub);
            }
            (num_colors - 1) as u32
        } else {
            feasible[rng.gen_range(0..feasible.len())]
        };
        colors[v] = c;
        for w in local.neighbors(view, v) {
            if colors[w] != UNCOLORED {
                continue;
            }
            if let Err(at) = saturation[w].binary_search(&c) {
                queue.remove(&key(saturation[w].len(), w));
                saturation[w].insert(at, c);
                queue.insert(key(saturation[w].len(), w));
            }
        }
        if ticker.tick() {
            return ColoringBound::unchanged(ub);
        }
    }
    let n = view.base().num_vertices();
    ColoringBound {
        ub: usedcol + num_colors,
        coloring: Some(local.into_coloring(n, &colors, num_colors)),
    }
}
