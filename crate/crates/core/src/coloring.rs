use crate::graph::{Graph, Vertex};

const UNCOLORED: u32 = u32::MAX;

/// A (possibly partial) vertex coloring over base vertex ids.
///
/// Color ids are always contiguous in `0..num_colors()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    num_colors: usize,
}

impl Coloring {
    /// Builds a coloring from an arbitrary assignment, relabelling the
    /// distinct color values to `0..k` while preserving their order.
    pub fn from_assignment(assignment: &[Option<usize>]) -> Self {
        let mut used: Vec<usize> = assignment.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        let colors = assignment
            .iter()
            .map(|c| match c {
                Some(c) => used.binary_search(c).unwrap() as u32,
                None => UNCOLORED,
            })
            .collect();
        Coloring {
            colors,
            num_colors: used.len(),
        }
    }

    /// Total coloring from a dense color vector already in `0..k`.
    pub(crate) fn from_dense(colors: Vec<u32>, num_colors: usize) -> Self {
        debug_assert!(colors
            .iter()
            .all(|&c| c == UNCOLORED || (c as usize) < num_colors));
        Coloring { colors, num_colors }
    }

    /// Coloring where every vertex is uncolored.
    pub fn uncolored(n: usize) -> Self {
        Coloring {
            colors: vec![UNCOLORED; n],
            num_colors: 0,
        }
    }

    /// Every vertex in its own class.
    pub fn singletons(n: usize) -> Self {
        Coloring {
            colors: (0..n as u32).collect(),
            num_colors: n,
        }
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> Option<usize> {
        match self.colors[v] {
            UNCOLORED => None,
            c => Some(c as usize),
        }
    }

    /// Number of distinct colors in use.
    #[inline]
    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Size of the vertex domain (colored or not).
    #[inline]
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c != UNCOLORED).count()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != UNCOLORED)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Option<usize>)> + '_ {
        (0..self.colors.len()).map(|v| (v, self.color(v)))
    }

    /// Color classes, indexed by color id; members ascending.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            if c != UNCOLORED {
                classes[c as usize].push(v);
            }
        }
        classes
    }

    /// True when no edge of `g` joins two vertices of the same color.
    /// Uncolored endpoints are ignored.
    pub fn is_proper_on(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| {
            let (a, b) = (self.colors[u], self.colors[v]);
            a == UNCOLORED || a != b
        })
    }
}
