//! Seeded graph generators and the two reference fixtures.
//!
//! `random_block` follows the clique-gluing construction: start from a
//! complete graph on at least two vertices and repeatedly attach another
//! complete graph by identifying one of its vertices with a uniformly chosen
//! existing vertex. Every output is a block graph by construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParams("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams("cycle needs n >= 3".into()));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParams("complete needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Star on `n` vertices: center 0 with `n - 1` leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("star needs n >= 2".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, &edges)
}

/// Uniform attachment: vertex `i` joins a uniformly random vertex `< i`.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParams("random_tree needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        edges.push((rng.gen_range(0..i), i));
    }
    Graph::new(n, &edges)
}

/// Glue `t` complete graphs, each of a uniform size in
/// `[block_min, block_max]`, the first standing alone and every later one
/// identified with a uniformly chosen existing vertex.
pub fn random_block(t: usize, block_min: usize, block_max: usize, seed: u64) -> Result<Graph> {
    if t < 1 || block_min < 2 || block_min > block_max {
        return Err(Error::InvalidParams(
            "random_block needs t >= 1 and 2 <= block_min <= block_max".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut n = 0usize;
    for i in 0..t {
        let size = rng.gen_range(block_min..=block_max);
        let anchor = if i == 0 {
            let v = n;
            n += 1;
            v
        } else {
            rng.gen_range(0..n)
        };
        let mut clique = vec![anchor];
        for _ in 1..size {
            clique.push(n);
            n += 1;
        }
        for a in 0..clique.len() {
            for b in a + 1..clique.len() {
                edges.push((clique[a], clique[b]));
            }
        }
    }
    Graph::new(n, &edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// 12-vertex graph with two major vertices and four pendant legs;
    /// A = Dim = mu = eta = 2 while sigma = 4.
    /// Vertices: u1=0, v1=1, u2=2, v2=3, w=4, a=5, b=6, w'=7, v3=8, u3=9,
    /// v4=10, u4=11.
    Fig1,
    /// 7-vertex block graph that is 3-metric dimensional despite having two
    /// extreme vertices adjacent to a common cut vertex.
    /// Vertices: a=0, b=1, c=2, d=3, e=4, f=5, g=6.
    Fig2,
}

pub fn fixture(which: Fixture) -> Graph {
    match which {
        Fixture::Fig1 => Graph::new(
            12,
            &[
                (0, 1),   // u1-v1
                (1, 4),   // v1-w
                (2, 3),   // u2-v2
                (3, 4),   // v2-w
                (4, 5),   // w-a
                (4, 6),   // w-b
                (5, 7),   // a-w'
                (6, 7),   // b-w'
                (7, 8),   // w'-v3
                (8, 9),   // v3-u3
                (7, 10),  // w'-v4
                (10, 11), // v4-u4
            ],
        )
        .expect("fixture fig1 is well-formed"),
        Fixture::Fig2 => Graph::new(
            7,
            &[
                (0, 1), // a-b
                (1, 2), // b-c
                (1, 3), // b-d
                (2, 3), // c-d
                (3, 4), // d-e
                (3, 5), // d-f
                (4, 5), // e-f
                (5, 6), // f-g
            ],
        )
        .expect("fixture fig2 is well-formed"),
    }
}

pub fn fixture_by_name(name: &str) -> Result<Graph> {
    match name {
        "fig1" => Ok(fixture(Fixture::Fig1)),
        "fig2" => Ok(fixture(Fixture::Fig2)),
        other => Err(Error::UnknownFixture(other.into())),
    }
}
