//! All-pairs hop distances via one BFS per source. Sources are independent,
//! so the sweep parallelizes over them; the table is deterministic either way.

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;

/// Sentinel for unreachable pairs; larger than any real distance.
pub const INFINITY: u32 = u32::MAX;

/// Dense n-by-n table of hop distances.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    connected: bool,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance in hops, or [`INFINITY`] if unreachable.
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn finite(&self, u: usize, v: usize) -> Option<usize> {
        match self.get(u, v) {
            INFINITY => None,
            d => Some(d as usize),
        }
    }

    /// True when every pair is at finite distance.
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Row of distances from `v`.
    pub fn row(&self, v: usize) -> &[u32] {
        &self.d[v * self.n..(v + 1) * self.n]
    }
}

/// BFS-exact distances for all pairs. Disconnected graphs yield
/// [`INFINITY`] entries rather than an error.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let rows = exec::map_indexed(n, |s| bfs_row(g, s));
    let mut d = Vec::with_capacity(n * n);
    let mut connected = n > 0;
    for row in rows {
        connected &= row.iter().all(|&x| x != INFINITY);
        d.extend_from_slice(&row);
    }
    DistanceMatrix { n, d, connected }
}

fn bfs_row(g: &Graph, source: usize) -> Vec<u32> {
    let n = g.vertex_count();
    let mut dist = vec![INFINITY; n];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v];
        for &w in g.neighbors(v) {
            if dist[w] == INFINITY {
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Maximum distance over all pairs. Requires a connected graph.
pub fn diameter(g: &Graph, dm: &DistanceMatrix) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(dm.d.iter().copied().max().unwrap_or(0) as usize)
}
