//! Biconnected components (blocks) and cut vertices via the lowpoint
//! decomposition, iterative to stay safe on long paths.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Blocks, cut vertices and the block index of every edge.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    /// Maximal biconnected components as sorted vertex sets, ordered by
    /// smallest vertex then lexicographically.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted cut vertices; exactly the vertices lying in two or more blocks.
    pub cut_vertices: Vec<usize>,
    /// Edge `(u, v)` with `u < v` to its unique block index.
    pub block_of_edge: HashMap<(usize, usize), usize>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Decompose a connected graph into blocks.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();

    // frames: (vertex, parent, next neighbor index)
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;

    while let Some(&mut (v, parent, ref mut idx)) = frames.last_mut() {
        if *idx < g.degree(v) {
            let w = g.neighbors(v)[*idx];
            *idx += 1;
            if disc[w] == usize::MAX {
                edge_stack.push((v, w));
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                frames.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if let Some(&mut (p, _, _)) = frames.last_mut() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    // pop one finished block rooted at the tree edge (p, v)
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == (p, v) {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }

    let mut blocks: Vec<Vec<usize>> = raw_blocks
        .iter()
        .map(|edges| {
            let mut vs: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();

    // deterministic order, independent of DFS traversal
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by(|&a, &b| blocks[a].cmp(&blocks[b]));
    let mut block_of_edge = HashMap::new();
    for (new_idx, &old_idx) in order.iter().enumerate() {
        for &(u, v) in &raw_blocks[old_idx] {
            block_of_edge.insert((u.min(v), u.max(v)), new_idx);
        }
    }
    blocks.sort();

    let mut membership = vec![0usize; n];
    for block in &blocks {
        for &v in block {
            membership[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();

    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        block_of_edge,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn path_blocks_are_edges() {
        let p4 = generate::path(4).unwrap();
        let dec = block_decomposition(&p4).unwrap();
        assert_eq!(dec.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(dec.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn cycle_is_one_block() {
        let c4 = generate::cycle(4).unwrap();
        let dec = block_decomposition(&c4).unwrap();
        assert_eq!(dec.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(dec.cut_vertices.is_empty());
    }

    #[test]
    fn fig2_blocks() {
        // a..g = 0..6
        let g = generate::fixture(generate::Fixture::Fig2);
        let dec = block_decomposition(&g).unwrap();
        assert_eq!(
            dec.blocks,
            vec![vec![0, 1], vec![1, 2, 3], vec![3, 4, 5], vec![5, 6]]
        );
        assert_eq!(dec.cut_vertices, vec![1, 3, 5]);
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        let g = generate::random_block(12, 2, 5, 3).unwrap();
        let dec = block_decomposition(&g).unwrap();
        assert_eq!(dec.block_of_edge.len(), g.edge_count());
        for (u, v) in g.edges() {
            let idx = dec.block_of_edge[&(u, v)];
            assert!(dec.blocks[idx].contains(&u) && dec.blocks[idx].contains(&v));
        }
    }

    #[test]
    fn cut_vertex_removal_disconnects() {
        let g = generate::random_block(8, 2, 4, 11).unwrap();
        let dec = block_decomposition(&g).unwrap();
        for &c in &dec.cut_vertices {
            assert!(g.components_after_vertex_removal(&[c]).len() >= 2);
        }
        for v in g.vertices() {
            if !dec.is_cut_vertex(v) && g.vertex_count() >= 3 {
                assert_eq!(g.components_after_vertex_removal(&[v]).len(), 1);
            }
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(block_decomposition(&g), Err(Error::Disconnected)));
    }
}
