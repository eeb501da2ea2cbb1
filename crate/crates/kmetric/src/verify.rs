//! Theorem-verification harness: runs every result against a corpus of
//! graphs and reports, per theorem, whether the premise ever held and
//! whether the conclusion held each time it did. Any violation carries the
//! offending graph serialized in edge-list form.
//!
//! The dimension oracle here is deliberately independent of the main
//! pipeline: it recomputes distances with its own frontier-swap BFS and
//! takes the minimum distinctive-set size directly from the definition.

use crate::blockgraph::{self, three_cut_structure, BlockGraphReport, ThreeCutStructure};
use crate::blocks::{block_decomposition, BlockDecomposition};
use crate::boundary::{self, EtaReport};
use crate::dimension::{distinctive_set, metric_dimensionality, DimensionReport};
use crate::distance::{all_pairs_distances, diameter, DistanceMatrix};
use crate::error::Result;
use crate::exec;
use crate::geodesic::{self, LandmarkStructure};
use crate::graph::Graph;
use crate::separator::{self, common_separator, subset_oracle_separators, MuReport};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub premise_held: bool,
    pub conclusion_held: bool,
    /// Edge-list serialization of the first violating graph.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.conclusion_held)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let status = if c.conclusion_held { "pass" } else { "FAIL" };
            let premise = if c.premise_held { "premise held" } else { "vacuous" };
            s.push_str(&format!("{status:4}  {:24}  {premise}\n", c.id));
            if let Some(g) = &c.counterexample {
                s.push_str("      counterexample:\n");
                for line in g.lines() {
                    s.push_str(&format!("        {line}\n"));
                }
            }
        }
        s
    }
}

/// Everything the checks need about one graph, computed once.
struct Ctx {
    g: Graph,
    dm: DistanceMatrix,
    dim: DimensionReport,
    a: usize,
    landmark: LandmarkStructure,
    eta: EtaReport,
    mu: MuReport,
    diam: usize,
    decomposition: BlockDecomposition,
    block: Option<BlockGraphReport>,
    three_cut: Option<ThreeCutStructure>,
}

impl Ctx {
    fn build(g: Graph) -> Result<Self> {
        let dm = all_pairs_distances(&g);
        let dim = metric_dimensionality(&g, &dm)?;
        let a = geodesic::shortest_maximal_geodesic(&g, &dm)?.a;
        let landmark = geodesic::landmark_structure(&g, &dm)?;
        let eta = boundary::eta(&g, &dm);
        let mu = separator::mu(&g, &dm);
        let diam = diameter(&g, &dm)?;
        let decomposition = block_decomposition(&g)?;
        let block = if blockgraph::is_block_graph(&g, &decomposition)? {
            Some(blockgraph::classify(&g, &dm, &decomposition)?)
        } else {
            None
        };
        let three_cut = match &block {
            Some(b) if !b.is_elementary => {
                Some(three_cut_structure(&g, &dm, &decomposition)?)
            }
            _ => None,
        };
        Ok(Ctx {
            g,
            dm,
            dim,
            a,
            landmark,
            eta,
            mu,
            diam,
            decomposition,
            block,
            three_cut,
        })
    }

    fn diam_bound(&self) -> usize {
        self.diam.saturating_sub(2) / 4
    }

    /// All critical separator certificates: per pair, the smallest m with
    /// mu_m(pair) equal to the global mu.
    fn critical_certificates(&self) -> Vec<separator::SeparatorCertificate> {
        let mu = match self.mu.mu {
            Some(mu) => mu,
            None => return Vec::new(),
        };
        let mut certs = Vec::new();
        for (v, v2) in exec::vertex_pairs(self.g.vertex_count()) {
            for m in 1..=self.diam {
                if let Ok(Some(cert)) = common_separator(&self.g, &self.dm, v, v2, m) {
                    if cert.mu_m == mu {
                        certs.push(cert);
                        break;
                    }
                }
            }
        }
        certs
    }
}

/// Independent BFS (frontier-swap style, distinct from the pipeline's
/// queue-based one).
fn oracle_distances(g: &Graph, source: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[source] = 0;
    let mut frontier = vec![source];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = depth;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Brute-force Dim straight from the definition.
pub fn oracle_dimension(g: &Graph) -> usize {
    let n = g.vertex_count();
    let rows: Vec<Vec<usize>> = (0..n).map(|v| oracle_distances(g, v)).collect();
    let mut best = usize::MAX;
    for x in 0..n {
        for y in x + 1..n {
            let count = (0..n).filter(|&z| rows[x][z] != rows[y][z]).count();
            best = best.min(count);
        }
    }
    best
}

/// Run every theorem check over the corpus. `oracle_max` caps the graph
/// size for the exponential subset-enumeration checks.
pub fn run_verify(graphs: &[Graph], oracle_max: usize) -> Result<VerifyReport> {
    let ctxs: Vec<Ctx> = graphs
        .iter()
        .cloned()
        .map(Ctx::build)
        .collect::<Result<_>>()?;

    // Each check maps a context to Option<(premise, conclusion)>; None means
    // the check does not apply to that graph at all.
    let mut checks = Vec::new();
    let mut run = |id: &'static str, f: &dyn Fn(&Ctx) -> Option<(bool, bool)>| {
        let mut premise_held = false;
        let mut conclusion_held = true;
        let mut counterexample = None;
        for ctx in &ctxs {
            if let Some((premise, conclusion)) = f(ctx) {
                if premise {
                    premise_held = true;
                    if !conclusion && counterexample.is_none() {
                        conclusion_held = false;
                        counterexample = Some(ctx.g.to_edge_list());
                    }
                }
            }
        }
        checks.push(CheckResult {
            id,
            premise_held,
            conclusion_held,
            counterexample,
        });
    };

    run("dim_oracle_equality", &|ctx| {
        Some((true, ctx.dim.k == oracle_dimension(&ctx.g)))
    });
    run("generator_maximality", &|ctx| {
        let all: Vec<usize> = ctx.g.vertices().collect();
        let at_k =
            crate::dimension::is_k_metric_generator(&ctx.g, &ctx.dm, &all, ctx.dim.k).ok()?;
        let above =
            crate::dimension::is_k_metric_generator(&ctx.g, &ctx.dm, &all, ctx.dim.k + 1).ok()?;
        Some((true, at_k && !above))
    });
    run("dim_le_sigma", &|ctx| {
        Some((
            ctx.landmark.sigma.is_some(),
            ctx.landmark.sigma.is_none_or(|s| ctx.dim.k <= s),
        ))
    });
    run("diam_lower_bound", &|ctx| {
        Some((ctx.eta.eta.is_none(), ctx.dim.k >= ctx.diam_bound()))
    });
    run("dim_le_eta", &|ctx| {
        Some((
            ctx.eta.eta.is_some(),
            ctx.eta.eta.is_none_or(|e| ctx.dim.k <= e),
        ))
    });
    run("eta_equality_when_tight", &|ctx| {
        let premise = ctx.eta.eta.is_some_and(|e| e <= ctx.diam_bound());
        Some((premise, !premise || ctx.eta.eta == Some(ctx.dim.k)))
    });
    run("dim_le_mu", &|ctx| {
        Some((
            ctx.mu.mu.is_some(),
            ctx.mu.mu.is_none_or(|m| ctx.dim.k <= m),
        ))
    });
    run("a_le_dim", &|ctx| Some((true, ctx.a <= ctx.dim.k)));
    run("eta_ge_mu", &|ctx| {
        let rel = separator::relations_check(&ctx.g, &ctx.dm, &ctx.dim, &ctx.eta, &ctx.landmark);
        Some((rel.eta_ge_mu.premise, rel.eta_ge_mu.holds))
    });
    run("mu_le_sigma", &|ctx| {
        let premise = ctx.landmark.sigma.is_some();
        let holds = !premise
            || (ctx.mu.mu.is_some()
                && ctx.mu.mu.unwrap() <= ctx.landmark.sigma.unwrap());
        Some((premise, holds))
    });
    run("boundary_outside_equidistant", &|ctx| {
        let mut premise = false;
        for (&m, pairs) in &ctx.eta.equal_boundary_pairs {
            for &(v, v2) in pairs {
                premise = true;
                if !boundary::lemma_boundary_check(&ctx.g, &ctx.dm, v, v2, m).ok()? {
                    return Some((true, false));
                }
            }
        }
        Some((premise, true))
    });
    run("far_components_equidistant", &|ctx| {
        let mut premise = false;
        for m in 1..=ctx.diam.max(1) {
            if m > ctx.diam {
                break;
            }
            for (v, v2) in exec::vertex_pairs(ctx.g.vertex_count()) {
                if let Some(cert) = common_separator(&ctx.g, &ctx.dm, v, v2, m).ok()? {
                    premise = true;
                    let ok = cert.far_components.iter().flatten().all(|&w| {
                        ctx.dm.get(v, w) == ctx.dm.get(v2, w)
                    });
                    if !ok {
                        return Some((true, false));
                    }
                }
            }
        }
        Some((premise, true))
    });
    run("separator_subset_oracle", &|ctx| {
        if ctx.g.vertex_count() > oracle_max {
            return None;
        }
        let mut premise = false;
        for m in 1..=ctx.diam {
            for (v, v2) in exec::vertex_pairs(ctx.g.vertex_count()) {
                let cert = common_separator(&ctx.g, &ctx.dm, v, v2, m).ok()?;
                let subsets = subset_oracle_separators(&ctx.g, &ctx.dm, v, v2, m).ok()?;
                match cert {
                    None => {
                        if !subsets.is_empty() {
                            return Some((true, false));
                        }
                    }
                    Some(cert) => {
                        premise = true;
                        let mut union: Vec<usize> =
                            subsets.iter().flatten().copied().collect();
                        union.sort_unstable();
                        union.dedup();
                        if union != cert.separator {
                            return Some((true, false));
                        }
                    }
                }
            }
        }
        Some((premise, true))
    });
    run("critical_separator_clique", &|ctx| {
        ctx.block.as_ref()?;
        let certs = ctx.critical_certificates();
        let premise = !certs.is_empty();
        let all_cliques = certs.iter().all(|c| {
            c.separator.iter().enumerate().all(|(i, &u)| {
                c.separator[i + 1..].iter().all(|&v| ctx.g.has_edge(u, v))
            })
        });
        Some((premise, all_cliques))
    });
    run("enclosing_clique_size", &|ctx| {
        ctx.block.as_ref()?;
        let mut premise = false;
        for cert in ctx.critical_certificates() {
            if cert.separator.len() <= 1 {
                continue;
            }
            // the enclosing maximal clique is the block containing any
            // separator edge
            let (s0, s1) = (cert.separator[0], cert.separator[1]);
            let key = (s0.min(s1), s0.max(s1));
            let block_idx = *ctx.decomposition.block_of_edge.get(&key)?;
            let block = &ctx.decomposition.blocks[block_idx];
            let (v, v2) = cert.pair;
            if block.binary_search(&v).is_ok() || block.binary_search(&v2).is_ok() {
                continue;
            }
            premise = true;
            let comps = ctx.g.components_after_vertex_removal(block);
            let cv = comps.iter().position(|c| c.binary_search(&v).is_ok());
            let cv2 = comps.iter().position(|c| c.binary_search(&v2).is_ok());
            let separated = cv.is_some() && cv2.is_some() && cv != cv2;
            if !separated || block.len() != cert.separator.len() + 2 {
                return Some((true, false));
            }
        }
        Some((premise, true))
    });
    run("two_dimensional_classification", &|ctx| {
        let block = ctx.block.as_ref()?;
        if block.is_elementary {
            return None;
        }
        Some((
            true,
            blockgraph::is_two_dimensional(block) == (ctx.dim.k == 2),
        ))
    });
    run("tagged_mu_two", &|ctx| {
        let block = ctx.block.as_ref()?;
        let premise = !block.is_elementary && block.is_tagged;
        Some((premise, !premise || ctx.mu.mu == Some(2)))
    });
    run("non_tagged_pair_dichotomy", &|ctx| {
        let block = ctx.block.as_ref()?;
        if block.is_elementary || block.is_tagged {
            return None;
        }
        let n = ctx.g.vertex_count();
        for (x, y) in exec::vertex_pairs(n) {
            let in_p = (1..=ctx.diam).any(|m| {
                common_separator(&ctx.g, &ctx.dm, x, y, m)
                    .is_ok_and(|c| c.is_some())
            });
            if !in_p {
                let d = distinctive_set(&ctx.g, &ctx.dm, x, y).ok()?;
                if d.members.len() < n - 1 {
                    return Some((true, false));
                }
            }
        }
        Some((true, true))
    });
    run("mu_radius_one", &|ctx| {
        let block = ctx.block.as_ref()?;
        if block.is_elementary {
            return None;
        }
        let mu1 = separator::mu_sweep(&ctx.g, &ctx.dm, 1..=1).mu;
        Some((true, ctx.mu.mu == mu1 && ctx.mu.mu.is_some()))
    });
    run("block_dim_eq_mu", &|ctx| {
        let block = ctx.block.as_ref()?;
        if block.is_elementary {
            return None;
        }
        Some((true, ctx.mu.mu == Some(ctx.dim.k)))
    });
    run("extremal_pair_mu", &|ctx| {
        let three_cut = ctx.three_cut.as_ref()?;
        let fast = blockgraph::fast_mu(&ctx.g, &ctx.dm, three_cut).ok()?;
        Some((true, fast.mu == ctx.mu.mu))
    });
    run("fast_dim_agrees", &|ctx| {
        ctx.block.as_ref()?;
        let fast = blockgraph::block_dimension(&ctx.g, &ctx.dm).ok()?;
        Some((true, fast.k == ctx.dim.k))
    });
    run("tree_dim_eq_sigma", &|ctx| {
        let premise = ctx.g.is_tree() && !ctx.g.is_path_graph();
        let holds = !premise || ctx.landmark.sigma == Some(ctx.dim.k);
        Some((premise, holds))
    });
    run("block_geodesics_unique", &|ctx| {
        let block = ctx.block.as_ref()?;
        let _ = block;
        let n = ctx.g.vertex_count();
        for (u, v) in exec::vertex_pairs(n) {
            let d = ctx.dm.get(u, v);
            let preds: Vec<usize> = ctx
                .g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&p| ctx.dm.get(p, v) + 1 == d)
                .collect();
            if preds.len() > 1 {
                return Some((true, false));
            }
        }
        Some((true, true))
    });
    Ok(VerifyReport { checks })
}
