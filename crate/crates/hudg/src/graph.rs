//! Undirected graphs with stable per-vertex port numbering.
//!
//! Neighbor lists are kept sorted by vertex id and the port of a neighbor is
//! its 1-based position in that list, so ports are a bijection
//! `N(v) -> {1, ..., deg(v)}` and identical for a vertex in every subgraph
//! that preserves the numbering.

use std::collections::VecDeque;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Distance marker for unreachable vertices in BFS results.
pub const UNREACHABLE: u32 = u32::MAX;

/// An undirected graph without self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Self-loops and
    /// duplicate edges are dropped; endpoints must be `< n`.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) references a vertex >= {n}"
                )));
            }
            if u == v {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    pub(crate) fn from_adjacency(adj: Vec<Vec<u32>>) -> Self {
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Self { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// The 1-based port of neighbor `u` at vertex `v`.
    pub fn port_of(&self, v: u32, u: u32) -> Option<u32> {
        self.adj[v as usize]
            .binary_search(&u)
            .ok()
            .map(|i| i as u32 + 1)
    }

    /// The neighbor of `v` behind `port`.
    pub fn port_to_neighbor(&self, v: u32, port: u32) -> Option<u32> {
        if port == 0 {
            return None;
        }
        self.adj[v as usize].get(port as usize - 1).copied()
    }

    /// BFS distances from `src`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, src: u32) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.adj.len()];
        let mut queue = VecDeque::new();
        dist[src as usize] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == UNREACHABLE {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Component id per vertex; ids are assigned in order of the smallest
    /// vertex of each component.
    pub fn connected_components(&self) -> Vec<u32> {
        let n = self.adj.len();
        let mut comp = vec![u32::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != u32::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s as u32);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u as usize] {
                    if comp[w as usize] == u32::MAX {
                        comp[w as usize] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// The largest finite eccentricity over all vertices, i.e. the longest
    /// shortest path within any component. Returns 0 for edgeless graphs.
    pub fn max_component_diameter(&self) -> u32 {
        let mut diam = 0;
        for s in 0..self.adj.len() {
            for d in self.bfs_distances(s as u32) {
                if d != UNREACHABLE && d > diam {
                    diam = d;
                }
            }
        }
        diam
    }
}

/// Reads a whitespace-separated edge list. Lines starting with `#` or `%`
/// and blank lines are ignored. Vertex ids are arbitrary non-negative
/// integers and are remapped to `0..n` in order of first appearance;
/// self-loops and duplicate edges are dropped.
///
/// Returns the graph together with the original id of each remapped vertex.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<(Graph, Vec<u64>)> {
    let mut ids: Vec<u64> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut intern = |raw: u64, ids: &mut Vec<u64>| -> u32 {
        *index.entry(raw).or_insert_with(|| {
            ids.push(raw);
            (ids.len() - 1) as u32
        })
    };
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<u64> {
            tok.ok_or_else(|| Error::Format {
                line: lineno + 1,
                message: "expected two vertex ids".into(),
            })?
            .parse::<u64>()
            .map_err(|e| Error::Format {
                line: lineno + 1,
                message: format!("bad vertex id: {e}"),
            })
        };
        let u = parse(parts.next())?;
        let v = parse(parts.next())?;
        if parts.next().is_some() {
            return Err(Error::Format {
                line: lineno + 1,
                message: "expected exactly two vertex ids".into(),
            });
        }
        let ui = intern(u, &mut ids);
        let vi = intern(v, &mut ids);
        edges.push((ui, vi));
    }
    let graph = Graph::from_edges(ids.len(), &edges)?;
    Ok((graph, ids))
}

/// Writes a graph as an edge list with internal ids, one `u v` pair per line.
pub fn write_edge_list<W: Write>(graph: &Graph, mut writer: W) -> Result<()> {
    for u in 0..graph.vertex_count() as u32 {
        for &v in graph.neighbors(u) {
            if u < v {
                writeln!(writer, "{u} {v}")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ports_are_sorted_positions() {
        let g = Graph::from_edges(4, &[(0, 2), (0, 1), (0, 3), (2, 3)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.port_of(0, 1), Some(1));
        assert_eq!(g.port_of(0, 3), Some(3));
        assert_eq!(g.port_to_neighbor(0, 2), Some(2));
        assert_eq!(g.port_to_neighbor(0, 0), None);
        assert_eq!(g.port_to_neighbor(0, 4), None);
        assert_eq!(g.port_of(1, 3), None);
    }

    #[test]
    fn from_edges_drops_loops_and_duplicates() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn bfs_on_path() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.bfs_distances(0), vec![0, 1, 2, 3, 4]);
        assert_eq!(g.max_component_diameter(), 4);
    }

    #[test]
    fn edge_list_parsing_remaps_by_first_appearance() {
        let text = "# comment\n% other comment\n10 20\n\n20 30\n10 10\n20 10\n";
        let (g, ids) = read_edge_list(text.as_bytes()).unwrap();
        assert_eq!(ids, vec![10, 20, 30]);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn edge_list_reports_bad_lines() {
        let err = read_edge_list("1 2\n3 x\n".as_bytes()).unwrap_err();
        match err {
            Error::Format { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn components_in_min_vertex_order() {
        let g = Graph::from_edges(5, &[(1, 3), (0, 4)]).unwrap();
        assert_eq!(g.connected_components(), vec![0, 1, 2, 1, 0]);
    }
}
