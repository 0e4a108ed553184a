use crate::graph::{Graph, Vertex};

const NOT_ALIVE: usize = usize::MAX;

/// Induced subgraph of a base [`Graph`] given by an alive mask.
///
/// Deleting a vertex is O(deg) and keeps the live degree of every alive
/// vertex current. Alive vertices are also kept in a dense list (swap
/// removal) so passes can iterate the kernel without touching dead ids.
#[derive(Debug, Clone)]
pub struct SubgraphView<'g> {
    base: &'g Graph,
    live_degree: Vec<usize>,
    alive_list: Vec<Vertex>,
    // position in `alive_list`, or NOT_ALIVE
    position: Vec<usize>,
}

impl<'g> SubgraphView<'g> {
    pub fn new(base: &'g Graph) -> Self {
        let n = base.num_vertices();
        let mut view = SubgraphView {
            base,
            live_degree: vec![0; n],
            alive_list: Vec::with_capacity(n),
            position: vec![NOT_ALIVE; n],
        };
        view.reset();
        view
    }

    /// Marks every base vertex alive again.
    pub fn reset(&mut self) {
        let n = self.base.num_vertices();
        self.alive_list.clear();
        self.alive_list.extend(0..n);
        for u in 0..n {
            self.position[u] = u;
            self.live_degree[u] = self.base.degree(u);
        }
    }

    #[inline]
    pub fn base(&self) -> &'g Graph {
        self.base
    }

    #[inline]
    pub fn is_alive(&self, u: Vertex) -> bool {
        self.position[u] != NOT_ALIVE
    }

    #[inline]
    pub fn alive_count(&self) -> usize {
        self.alive_list.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.alive_list.is_empty()
    }

    /// Alive vertices in internal (deterministic, unsorted) order.
    #[inline]
    pub fn alive(&self) -> &[Vertex] {
        &self.alive_list
    }

    pub fn alive_sorted(&self) -> Vec<Vertex> {
        let mut v = self.alive_list.clone();
        v.sort_unstable();
        v
    }

    #[inline]
    pub fn live_degree(&self, u: Vertex) -> usize {
        debug_assert!(self.is_alive(u));
        self.live_degree[u]
    }

    pub fn live_neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.base
            .neighbors(u)
            .iter()
            .copied()
            .filter(move |&v| self.is_alive(v))
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.base.has_edge(u, v)
    }

    /// |N̄(u)| within the alive subgraph, in O(1).
    #[inline]
    pub fn non_neighbor_count(&self, u: Vertex) -> usize {
        assert!(self.is_alive(u), "vertex {u} is not alive");
        self.alive_count() - 1 - self.live_degree[u]
    }

    /// N̄[u] within the alive subgraph, sorted. Costs O(alive · log deg);
    /// gate on [`non_neighbor_count`](Self::non_neighbor_count) first.
    pub fn complement_closed_neighborhood(&self, u: Vertex) -> Vec<Vertex> {
        assert!(self.is_alive(u), "vertex {u} is not alive");
        let mut out: Vec<Vertex> = self
            .alive_list
            .iter()
            .copied()
            .filter(|&v| v == u || !self.base.has_edge(u, v))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn delete_vertex(&mut self, u: Vertex) {
        let pos = self.position[u];
        assert!(pos != NOT_ALIVE, "vertex {u} deleted twice");
        let last = *self.alive_list.last().expect("alive list non-empty");
        self.alive_list.swap_remove(pos);
        if last != u {
            self.position[last] = pos;
        }
        self.position[u] = NOT_ALIVE;
        for &v in self.base.neighbors(u) {
            if self.position[v] != NOT_ALIVE {
                self.live_degree[v] -= 1;
            }
        }
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            debug_assert!(self.is_alive(u));
            set[i + 1..].iter().all(|&v| !self.base.has_edge(u, v))
        })
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            debug_assert!(self.is_alive(u));
            set[i + 1..]
                .iter()
                .all(|&v| u != v && self.base.has_edge(u, v))
        })
    }

    /// Materializes the alive subgraph with compacted ids. Returns the graph
    /// and the map from compact id to base id (ascending).
    pub fn to_induced_graph(&self) -> (Graph, Vec<Vertex>) {
        let order = self.alive_sorted();
        let mut local = vec![usize::MAX; self.base.num_vertices()];
        for (i, &u) in order.iter().enumerate() {
            local[u] = i;
        }
        let edges = order.iter().flat_map(|&u| {
            let local = &local;
            self.base
                .neighbors(u)
                .iter()
                .filter(move |&&v| v > u && local[v] != usize::MAX)
                .map(move |&v| (local[u], local[v]))
        });
        let g = Graph::from_edges(order.len(), edges).expect("ids are compact");
        (g, order)
    }
}
