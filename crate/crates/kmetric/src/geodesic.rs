//! Terminal-vertex machinery and the sigma upper bound; shortest maximal
//! geodesics and the A lower bound; the diameter lower bound.

use std::collections::BTreeMap;

use crate::distance::{diameter, DistanceMatrix};
use crate::dimension::DimensionReport;
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;

/// Major vertices (degree >= 3), their terminal vertices, and the sigma
/// values derived from terminal-to-terminal path lengths through each major
/// vertex with at least two terminals.
#[derive(Debug, Clone)]
pub struct LandmarkStructure {
    pub major_vertices: Vec<usize>,
    /// major vertex -> its terminal vertices (degree-1 vertices strictly
    /// closer to it than to any other major vertex)
    pub terminal_map: BTreeMap<usize, Vec<usize>>,
    /// Major vertices with terminal degree greater than one.
    pub m_set: Vec<usize>,
    /// For each member of `m_set`: min over terminal pairs of
    /// d(u, w) + d(w, u').
    pub sigma_of: BTreeMap<usize, usize>,
    /// `None` when `m_set` is empty.
    pub sigma: Option<usize>,
}

pub fn landmark_structure(g: &Graph, dm: &DistanceMatrix) -> Result<LandmarkStructure> {
    if g.vertex_count() < 2 {
        return Err(Error::TooSmall { need: 2 });
    }
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let major_vertices: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut terminal_map: BTreeMap<usize, Vec<usize>> =
        major_vertices.iter().map(|&w| (w, Vec::new())).collect();
    for u in g.vertices().filter(|&u| g.degree(u) == 1) {
        // terminal of w iff strictly closer to w than to every other major
        let mut best: Option<(u32, usize)> = None;
        let mut strict = true;
        for &w in &major_vertices {
            let d = dm.get(u, w);
            match best {
                None => best = Some((d, w)),
                Some((bd, _)) if d < bd => {
                    best = Some((d, w));
                    strict = true;
                }
                Some((bd, _)) if d == bd => strict = false,
                _ => {}
            }
        }
        if let (Some((_, w)), true) = (best, strict) {
            terminal_map.get_mut(&w).unwrap().push(u);
        }
    }
    let m_set: Vec<usize> = major_vertices
        .iter()
        .copied()
        .filter(|w| terminal_map[w].len() > 1)
        .collect();
    let mut sigma_of = BTreeMap::new();
    for &w in &m_set {
        let terms = &terminal_map[&w];
        let mut best = usize::MAX;
        for (i, &u) in terms.iter().enumerate() {
            for &r in &terms[i + 1..] {
                best = best.min(dm.get(u, w) as usize + dm.get(w, r) as usize);
            }
        }
        sigma_of.insert(w, best);
    }
    let sigma = sigma_of.values().copied().min();
    Ok(LandmarkStructure {
        major_vertices,
        terminal_map,
        m_set,
        sigma_of,
        sigma,
    })
}

/// `Dim(G) <= sigma(G)` checked on computed values. A `false` return is a
/// bug detector, not an expected outcome.
pub fn sigma_upper_bound_holds(
    landmark: &LandmarkStructure,
    dim_report: &DimensionReport,
) -> Result<bool> {
    match landmark.sigma {
        Some(sigma) => Ok(dim_report.k <= sigma),
        None => Err(Error::EmptyM),
    }
}

/// Length and endpoints of a shortest maximal geodesic.
#[derive(Debug, Clone)]
pub struct MaximalGeodesicReport {
    pub a: usize,
    pub witness_endpoints: (usize, usize),
}

/// A geodesic between `u` and `v` extends past `u` iff some neighbor `x` of
/// `u` has `d(x, v) = d(u, v) + 1`; a pair is endpoint-maximal when neither
/// end extends. `A(G)` is the minimum distance over endpoint-maximal pairs.
pub fn shortest_maximal_geodesic(g: &Graph, dm: &DistanceMatrix) -> Result<MaximalGeodesicReport> {
    if g.vertex_count() < 2 {
        return Err(Error::TooSmall { need: 2 });
    }
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let extends = |from: usize, other: usize| {
        let d = dm.get(from, other);
        g.neighbors(from).iter().any(|&x| dm.get(x, other) == d + 1)
    };
    let pairs = exec::vertex_pairs(g.vertex_count());
    let (a, witness) = exec::min_over(&pairs, |&(u, v)| {
        if extends(u, v) || extends(v, u) {
            None
        } else {
            Some((dm.get(u, v) as usize, (u, v)))
        }
    })
    .expect("a diametral pair is always endpoint-maximal");
    Ok(MaximalGeodesicReport {
        a,
        witness_endpoints: witness,
    })
}

/// `floor((diam - 2) / 4)`, clamped at zero. Only a valid lower bound on
/// `Dim(G)` when no pair has an equal m-boundary for any m; the caller
/// combines it with the boundary sweep.
pub fn diameter_lower_bound(g: &Graph, dm: &DistanceMatrix) -> Result<usize> {
    let diam = diameter(g, dm)?;
    Ok(diam.saturating_sub(2) / 4)
}
