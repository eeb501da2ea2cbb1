//! m-balls, m-spheres, boundaries, equal m-boundary pairs and the eta upper
//! bound.

use std::collections::{BTreeMap, HashMap};

use crate::distance::{diameter, DistanceMatrix};
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;

/// Ball, sphere and boundary of one vertex at one radius.
#[derive(Debug, Clone)]
pub struct BoundaryProfile {
    pub v: usize,
    pub m: usize,
    /// N(v,m) = vertices within distance m.
    pub ball: Vec<usize>,
    /// S(v,m) = vertices at distance exactly m.
    pub sphere: Vec<usize>,
    /// Sphere vertices with a neighbor strictly outside the ball.
    pub boundary: Vec<usize>,
}

fn boundary_of(g: &Graph, dm: &DistanceMatrix, v: usize, m: usize) -> Vec<usize> {
    let m = m as u32;
    g.vertices()
        .filter(|&w| {
            dm.get(v, w) == m && g.neighbors(w).iter().any(|&x| dm.get(v, x) > m)
        })
        .collect()
}

pub fn boundary_profile(g: &Graph, dm: &DistanceMatrix, v: usize, m: usize) -> Result<BoundaryProfile> {
    let diam = diameter(g, dm)?;
    if m > diam {
        return Err(Error::RadiusOutOfRange { m, min: 0, max: diam });
    }
    let ball = g.vertices().filter(|&w| dm.get(v, w) as usize <= m).collect();
    let sphere = g.vertices().filter(|&w| dm.get(v, w) as usize == m).collect();
    let boundary = boundary_of(g, dm, v, m);
    Ok(BoundaryProfile { v, m, ball, sphere, boundary })
}

/// All unordered pairs with equal non-empty m-boundary.
pub fn equal_boundary_pairs(g: &Graph, dm: &DistanceMatrix, m: usize) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let boundaries = exec::map_indexed(n, |v| boundary_of(g, dm, v, m));
    let mut groups: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for (v, b) in boundaries.iter().enumerate() {
        if !b.is_empty() {
            groups.entry(b).or_default().push(v);
        }
    }
    let mut pairs = Vec::new();
    for members in groups.values() {
        for (i, &v) in members.iter().enumerate() {
            for &v2 in &members[i + 1..] {
                pairs.push((v.min(v2), v.max(v2)));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// eta(G) with its witness and the full map of equal m-boundary pairs.
#[derive(Debug, Clone)]
pub struct EtaReport {
    /// `None` when no pair has an equal m-boundary for any m.
    pub eta: Option<usize>,
    /// Lexicographically least (m, pair) among minimizers.
    pub witness: Option<EtaWitness>,
    /// m -> pairs with equal non-empty m-boundary, for every m with some.
    pub equal_boundary_pairs: BTreeMap<usize, Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EtaWitness {
    pub m: usize,
    pub pair: (usize, usize),
}

/// Count of distinguishing vertices inside the union of the two m-balls.
pub fn eta_m(dm: &DistanceMatrix, v: usize, v2: usize, m: usize) -> usize {
    let m = m as u32;
    (0..dm.n())
        .filter(|&w| {
            (dm.get(v, w) <= m || dm.get(v2, w) <= m) && dm.get(v, w) != dm.get(v2, w)
        })
        .count()
}

/// Sweep m over 0..=diam(G). Assumes a connected graph.
pub fn eta(g: &Graph, dm: &DistanceMatrix) -> EtaReport {
    let diam = dm_diameter(dm);
    let radii: Vec<usize> = (0..=diam).collect();
    let per_m = exec::map_indexed(radii.len(), |i| {
        let m = radii[i];
        let pairs = equal_boundary_pairs(g, dm, m);
        let best = pairs
            .iter()
            .map(|&(v, v2)| (eta_m(dm, v, v2, m), m, (v, v2)))
            .min();
        (m, pairs, best)
    });
    let mut map = BTreeMap::new();
    let mut best = None;
    for (m, pairs, local) in per_m {
        if !pairs.is_empty() {
            map.insert(m, pairs);
        }
        best = match (best, local) {
            (None, b) => b,
            (a, None) => a,
            (Some(a), Some(b)) => Some(a.min(b)),
        };
    }
    EtaReport {
        eta: best.map(|(e, _, _)| e),
        witness: best.map(|(_, m, pair)| EtaWitness { m, pair }),
        equal_boundary_pairs: map,
    }
}

fn dm_diameter(dm: &DistanceMatrix) -> usize {
    (0..dm.n())
        .flat_map(|u| (0..dm.n()).map(move |v| dm.get(u, v)))
        .filter(|&d| d != crate::distance::INFINITY)
        .max()
        .unwrap_or(0) as usize
}

/// Every vertex outside both m-balls of an equal m-boundary pair must be
/// equidistant from the two. A `false` return is a bug detector.
pub fn lemma_boundary_check(
    g: &Graph,
    dm: &DistanceMatrix,
    v: usize,
    v2: usize,
    m: usize,
) -> Result<bool> {
    let bv = boundary_of(g, dm, v, m);
    let bv2 = boundary_of(g, dm, v2, m);
    if v == v2 || bv.is_empty() || bv != bv2 {
        return Err(Error::NotEqualBoundary(m));
    }
    let m = m as u32;
    Ok(g.vertices()
        .filter(|&w| dm.get(v, w) > m && dm.get(v2, w) > m)
        .all(|w| dm.get(v, w) == dm.get(v2, w)))
}
