//! Minimal simple undirected graph used by the embedding code.

use std::collections::VecDeque;

/// Simple undirected graph on nodes `0..n` with sorted neighbour lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn new(node_count: usize) -> Self {
        SimpleGraph { adj: vec![Vec::new(); node_count], edge_count: 0 }
    }

    /// Builds a graph from an edge list, dropping loops and repeated edges.
    pub fn from_edges(node_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); node_count];
        for (u, v) in edges {
            assert!(u < node_count && v < node_count, "edge ({u}, {v}) out of range");
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        SimpleGraph { adj, edge_count: edge_count / 2 }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `K_{m,n}` with parts `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        Self::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let Ok(a) = self.adj[u].binary_search(&v) else {
            return false;
        };
        self.adj[u].remove(a);
        let b = self.adj[v].binary_search(&u).expect("adjacency is symmetric");
        self.adj[v].remove(b);
        self.edge_count -= 1;
        true
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let Err(a) = self.adj[u].binary_search(&v) else {
            return false;
        };
        self.adj[u].insert(a, v);
        let b = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(b, u);
        self.edge_count += 1;
        true
    }

    /// Component label per node, labels assigned in order of smallest member.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.adj.len()];
        let mut count = 0;
        for s in 0..self.adj.len() {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// BFS distances from `s` (`None` when unreachable).
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, or `None` for a forest. Stops early once a
    /// cycle of length `floor` is seen, since nothing shorter can exist.
    pub fn girth_with_floor(&self, floor: usize) -> Option<usize> {
        let (comps, _) = self.components();
        if self.edge_count + comps == self.node_count() {
            return None;
        }
        let mut best: Option<usize> = None;
        let n = self.adj.len();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            let mut touched = vec![s];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        touched.push(v);
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                            if len <= floor {
                                break 'bfs;
                            }
                        }
                    }
                }
            }
            for t in touched {
                dist[t] = usize::MAX;
                parent[t] = usize::MAX;
            }
            if best.is_some_and(|b| b <= floor) {
                break;
            }
        }
        best
    }

    pub fn girth(&self) -> Option<usize> {
        self.girth_with_floor(3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_dedups() {
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 0), (1, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edit_edges() {
        let mut g = SimpleGraph::complete(4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.remove_edge(0, 1));
        assert!(!g.remove_edge(0, 1));
        assert!(!g.has_edge(1, 0));
        assert!(g.add_edge(1, 0));
        assert!(!g.add_edge(1, 0));
        assert_eq!(g, SimpleGraph::complete(4));
    }

    #[test]
    fn girths() {
        assert_eq!(SimpleGraph::complete(4).girth(), Some(3));
        assert_eq!(SimpleGraph::complete_bipartite(3, 3).girth(), Some(4));
        assert_eq!(SimpleGraph::cycle(7).girth(), Some(7));
        assert_eq!(SimpleGraph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).girth(), None);
        // Petersen graph has girth 5.
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let petersen = SimpleGraph::from_edges(10, outer.chain(spokes).chain(inner));
        assert_eq!(petersen.girth(), Some(5));
    }

    #[test]
    fn components_and_bfs() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (3, 4)]);
        let (c, label) = g.components();
        assert_eq!(c, 3);
        assert_eq!(label, vec![0, 0, 1, 2, 2]);
        assert_eq!(g.bfs(0), vec![Some(0), Some(1), None, None, None]);
    }
}
