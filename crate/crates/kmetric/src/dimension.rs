//! Distinctive sets and the exact dimensionality `Dim(G)`: the largest `k`
//! for which a k-metric generator exists, which equals the minimum size of a
//! distinctive set over all vertex pairs.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;

/// The vertices distinguishing a pair: `{z : d(x,z) != d(y,z)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctiveSet {
    pub pair: (usize, usize),
    /// Sorted; always contains both endpoints of the pair.
    pub members: Vec<usize>,
}

/// `Dim(G)` together with a witness pair realizing the minimum.
#[derive(Debug, Clone)]
pub struct DimensionReport {
    pub k: usize,
    /// Lexicographically smallest pair among the minimizers.
    pub witness_pair: (usize, usize),
    pub witness_set: DistinctiveSet,
}

pub fn distinctive_set(
    g: &Graph,
    dm: &DistanceMatrix,
    x: usize,
    y: usize,
) -> Result<DistinctiveSet> {
    if x == y {
        return Err(Error::SamePair);
    }
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let members = g
        .vertices()
        .filter(|&z| dm.get(x, z) != dm.get(y, z))
        .collect();
    Ok(DistinctiveSet {
        pair: (x.min(y), x.max(y)),
        members,
    })
}

fn distinctive_count(dm: &DistanceMatrix, x: usize, y: usize) -> usize {
    let (rx, ry) = (dm.row(x), dm.row(y));
    rx.iter().zip(ry).filter(|(a, b)| a != b).count()
}

/// Exact `Dim(G)` as the minimum over unordered pairs of the distinctive-set
/// size. The pair sweep runs in parallel with a lexicographic min-reduction,
/// so the witness is schedule-independent.
pub fn metric_dimensionality(g: &Graph, dm: &DistanceMatrix) -> Result<DimensionReport> {
    if g.vertex_count() < 2 {
        return Err(Error::TooSmall { need: 2 });
    }
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let pairs = exec::vertex_pairs(g.vertex_count());
    let (k, (x, y)) = exec::min_over(&pairs, |&(x, y)| {
        Some((distinctive_count(dm, x, y), (x, y)))
    })
    .expect("n >= 2 guarantees at least one pair");
    Ok(DimensionReport {
        k,
        witness_pair: (x, y),
        witness_set: distinctive_set(g, dm, x, y)?,
    })
}

/// True when every pair of distinct vertices is distinguished by at least
/// `k` members of `s`.
pub fn is_k_metric_generator(
    g: &Graph,
    dm: &DistanceMatrix,
    s: &[usize],
    k: usize,
) -> Result<bool> {
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let pairs = exec::vertex_pairs(g.vertex_count());
    // min over pairs of the number of distinguishing members of s
    let worst = exec::min_over(&pairs, |&(x, y)| {
        Some(s.iter().filter(|&&z| dm.get(x, z) != dm.get(y, z)).count())
    });
    Ok(worst.is_none_or(|w| w >= k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;
    use crate::generate::{self, Fixture};

    fn fig2() -> (Graph, DistanceMatrix) {
        let g = generate::fixture(Fixture::Fig2);
        let dm = all_pairs_distances(&g);
        (g, dm)
    }

    #[test]
    fn triangle_pair() {
        let g = generate::complete(3).unwrap();
        let dm = all_pairs_distances(&g);
        let ds = distinctive_set(&g, &dm, 0, 1).unwrap();
        assert_eq!(ds.members, vec![0, 1]);
    }

    #[test]
    fn fig2_table_rows() {
        let (g, dm) = fig2();
        // (b,c) distinguishes only {a} beyond the pair itself
        let ds = distinctive_set(&g, &dm, 1, 2).unwrap();
        assert_eq!(ds.members, vec![0, 1, 2]);
        // (f,g) distinguishes everything
        let ds = distinctive_set(&g, &dm, 5, 6).unwrap();
        assert_eq!(ds.members, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn fig2_dimension_is_three() {
        let (g, dm) = fig2();
        let rep = metric_dimensionality(&g, &dm).unwrap();
        assert_eq!(rep.k, 3);
        assert_eq!(rep.witness_set.members.len(), 3);
    }

    #[test]
    fn fig1_dimension_is_two() {
        let g = generate::fixture(Fixture::Fig1);
        let dm = all_pairs_distances(&g);
        assert_eq!(metric_dimensionality(&g, &dm).unwrap().k, 2);
    }

    #[test]
    fn elementary_families() {
        for n in 3..=8 {
            let g = generate::complete(n).unwrap();
            let dm = all_pairs_distances(&g);
            assert_eq!(metric_dimensionality(&g, &dm).unwrap().k, 2, "K_{n}");
        }
        for n in 3..=10 {
            let g = generate::path(n).unwrap();
            let dm = all_pairs_distances(&g);
            assert_eq!(metric_dimensionality(&g, &dm).unwrap().k, n - 1, "P_{n}");
        }
    }

    #[test]
    fn two_vertex_graph() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let dm = all_pairs_distances(&g);
        assert_eq!(metric_dimensionality(&g, &dm).unwrap().k, 2);
    }

    #[test]
    fn generator_checks() {
        let (g, dm) = fig2();
        let all: Vec<usize> = g.vertices().collect();
        assert!(is_k_metric_generator(&g, &dm, &all, 2).unwrap());
        assert!(is_k_metric_generator(&g, &dm, &all, 3).unwrap());
        assert!(!is_k_metric_generator(&g, &dm, &all, 4).unwrap());
        // path endpoints resolve every pair once
        let p3 = generate::path(3).unwrap();
        let dm3 = all_pairs_distances(&p3);
        assert!(is_k_metric_generator(&p3, &dm3, &[0, 2], 1).unwrap());
    }

    #[test]
    fn same_pair_rejected() {
        let (g, dm) = fig2();
        assert!(matches!(
            distinctive_set(&g, &dm, 2, 2),
            Err(Error::SamePair)
        ));
    }
}
