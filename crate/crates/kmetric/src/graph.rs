//! Immutable simple undirected graph on vertices `0..n`, plus the edge-list
//! text format used by the CLI.
//!
//! The format is plain ASCII: the first line holds the vertex count `n`,
//! every following non-empty line holds one edge `u v`, and lines starting
//! with `#` are comments. Writing then reading yields an identical graph.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite simple undirected graph. Adjacency lists are sorted and
/// symmetric; the structure is immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::OutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::OutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.adj.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.components().len() == 1)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_with(|_| true, |_, _| true)
    }

    /// Components of the induced subgraph on `V \ removed`. Removed vertices
    /// belong to no component.
    pub fn components_after_vertex_removal(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut gone = vec![false; self.adj.len()];
        for &v in removed {
            gone[v] = true;
        }
        self.components_with(|v| !gone[v], |_, _| true)
    }

    /// Components of the graph with the listed edges deleted. All vertices
    /// are retained, so isolated vertices form singleton components.
    pub fn components_after_edge_removal(
        &self,
        removed: &[(usize, usize)],
    ) -> Result<Vec<Vec<usize>>> {
        let mut cut: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(u, v) in removed {
            if u == v || u >= self.adj.len() || v >= self.adj.len() || !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            cut.insert((u.min(v), u.max(v)));
        }
        Ok(self.components_with(|_| true, |u, v| !cut.contains(&(u.min(v), u.max(v)))))
    }

    fn components_with<V, E>(&self, keep_vertex: V, keep_edge: E) -> Vec<Vec<usize>>
    where
        V: Fn(usize) -> bool,
        E: Fn(usize, usize) -> bool,
    {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut queue = Vec::new();
        for start in 0..n {
            if seen[start] || !keep_vertex(start) {
                continue;
            }
            let mut comp = Vec::new();
            seen[start] = true;
            queue.push(start);
            while let Some(v) = queue.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] && keep_vertex(w) && keep_edge(v, w) {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        !self.adj.is_empty()
            && self.edge_count() + 1 == self.vertex_count()
            && self.components().len() == 1
    }

    /// A path graph: a tree with maximum degree at most 2.
    pub fn is_path_graph(&self) -> bool {
        self.is_tree() && self.vertices().all(|v| self.degree(v) <= 2)
    }

    /// Every pair of distinct vertices adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.adj.len();
        n > 0 && self.adj.iter().all(|a| a.len() == n - 1)
    }

    /// Parse the edge-list text format.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let parse = |tok: &str| -> Result<usize> {
                tok.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("expected a non-negative integer, got {tok:?}"),
                })
            };
            match n {
                None => {
                    n = Some(parse(content)?);
                }
                Some(n) => {
                    let mut toks = content.split_whitespace();
                    let (u, v) = match (toks.next(), toks.next(), toks.next()) {
                        (Some(u), Some(v), None) => (parse(u)?, parse(v)?),
                        _ => {
                            return Err(Error::Parse {
                                line,
                                msg: format!("expected \"u v\", got {content:?}"),
                            })
                        }
                    };
                    if u >= n || v >= n {
                        return Err(Error::Parse {
                            line,
                            msg: format!("vertex out of range [0, {n})"),
                        });
                    }
                    if u == v {
                        return Err(Error::Parse {
                            line,
                            msg: format!("self-loop at vertex {u}"),
                        });
                    }
                    edges.push((u, v));
                }
            }
        }
        match n {
            Some(n) => Graph::new(n, &edges),
            None => Err(Error::Parse {
                line: 1,
                msg: "missing vertex count".into(),
            }),
        }
    }

    /// Serialize to the edge-list text format. Byte-stable: edges come out
    /// sorted with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::OutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn connectivity() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(k3.is_connected().unwrap());
        let iso = Graph::new(2, &[]).unwrap();
        assert!(!iso.is_connected().unwrap());
        assert!(matches!(
            Graph::new(0, &[]).unwrap().is_connected(),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn vertex_removal_components() {
        // star K_{1,3}, center 0
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let comps = star.components_after_vertex_removal(&[0]);
        assert_eq!(comps, vec![vec![1], vec![2], vec![3]]);
        // P_5, remove middle
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(
            p5.components_after_vertex_removal(&[2]),
            vec![vec![0, 1], vec![3, 4]]
        );
    }

    #[test]
    fn edge_removal_components() {
        let tri = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let comps = tri
            .components_after_edge_removal(&[(0, 1), (1, 2), (0, 2)])
            .unwrap();
        assert_eq!(comps, vec![vec![0], vec![1], vec![2]]);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            p3.components_after_edge_removal(&[(0, 1)]).unwrap(),
            vec![vec![0], vec![1, 2]]
        );
        assert!(matches!(
            p3.components_after_edge_removal(&[(0, 2)]),
            Err(Error::NotAnEdge(0, 2))
        ));
    }

    #[test]
    fn classifiers() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_tree() && p4.is_path_graph() && !p4.is_complete());
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.is_complete() && !k4.is_tree());
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_tree() && !star.is_path_graph());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(5, &[(0, 1), (3, 1), (2, 4), (0, 4)]).unwrap();
        let text = g.to_edge_list();
        let back = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(text, back.to_edge_list());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Graph::parse_edge_list("3\n0 1\n0 9\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = Graph::parse_edge_list("# header\n\nnope\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let g = Graph::parse_edge_list("# a graph\n3\n\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }
}
