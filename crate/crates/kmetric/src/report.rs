//! Assembles the full analysis of one graph: every invariant, the block
//! classification, and per-invariant timings. This is what the CLI renders
//! as text or JSON.

use std::time::Instant;

use serde::Serialize;

use crate::blockgraph::{self, three_cut_structure};
use crate::blocks::block_decomposition;
use crate::boundary;
use crate::dimension::metric_dimensionality;
use crate::distance::{all_pairs_distances, diameter};
use crate::error::{Error, Result};
use crate::geodesic::{self, landmark_structure};
use crate::graph::Graph;
use crate::separator;

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub elementary: bool,
    pub tagged: bool,
    pub v_graph: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timing {
    pub distances_ms: f64,
    pub dim_ms: f64,
    pub a_ms: f64,
    pub sigma_ms: f64,
    pub eta_ms: f64,
    pub mu_ms: f64,
    pub block_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub dim: usize,
    pub witness_pair: (usize, usize),
    #[serde(rename = "A")]
    pub a: usize,
    pub sigma: Option<usize>,
    pub eta: Option<usize>,
    pub mu: Option<usize>,
    pub diam: usize,
    pub diam_lower_bound: usize,
    pub block_graph: bool,
    pub classification: Classification,
    pub timing: Timing,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    /// Skip the generic radius sweep for mu and take Dim and mu from the
    /// block-graph candidate pairs. Errors on non-block graphs.
    pub fast_block_only: bool,
}

fn timed<T>(out: &mut f64, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let value = f();
    *out = start.elapsed().as_secs_f64() * 1e3;
    value
}

pub fn analyze(g: &Graph, opts: AnalyzeOptions) -> Result<AnalysisReport> {
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let mut timing = Timing::default();
    let dm = timed(&mut timing.distances_ms, || all_pairs_distances(g));
    let diam = diameter(g, &dm)?;

    let start_block = Instant::now();
    let decomposition = block_decomposition(g)?;
    let block_graph = blockgraph::is_block_graph(g, &decomposition)?;
    let classification = if block_graph {
        let report = blockgraph::classify(g, &dm, &decomposition)?;
        Classification {
            elementary: report.is_elementary,
            tagged: report.is_tagged,
            v_graph: report.is_v_graph,
        }
    } else {
        Classification {
            elementary: false,
            tagged: false,
            v_graph: false,
        }
    };
    timing.block_ms = start_block.elapsed().as_secs_f64() * 1e3;

    let (dim, mu) = if opts.fast_block_only {
        if !block_graph {
            return Err(Error::NotBlockGraph);
        }
        let dim = timed(&mut timing.dim_ms, || blockgraph::block_dimension(g, &dm))?;
        let mu = timed(&mut timing.mu_ms, || -> Result<Option<usize>> {
            if classification.elementary {
                Ok(None) // elementary block graphs have no separating pairs
            } else {
                let s = three_cut_structure(g, &dm, &decomposition)?;
                Ok(blockgraph::fast_mu(g, &dm, &s)?.mu)
            }
        })?;
        (dim, mu)
    } else {
        let dim = timed(&mut timing.dim_ms, || metric_dimensionality(g, &dm))?;
        let mu = timed(&mut timing.mu_ms, || separator::mu(g, &dm).mu);
        (dim, mu)
    };

    let a = timed(&mut timing.a_ms, || geodesic::shortest_maximal_geodesic(g, &dm))?.a;
    let sigma = timed(&mut timing.sigma_ms, || landmark_structure(g, &dm))?.sigma;
    let eta = timed(&mut timing.eta_ms, || boundary::eta(g, &dm)).eta;

    Ok(AnalysisReport {
        n: g.vertex_count(),
        edge_count: g.edge_count(),
        connected: true,
        dim: dim.k,
        witness_pair: dim.witness_pair,
        a,
        sigma,
        eta,
        mu,
        diam,
        diam_lower_bound: diam.saturating_sub(2) / 4,
        block_graph,
        classification,
        timing,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        fn opt(v: Option<usize>) -> String {
            v.map_or_else(|| "NONE".into(), |x| x.to_string())
        }
        let mut s = String::new();
        s.push_str(&format!("n                {}\n", self.n));
        s.push_str(&format!("edges            {}\n", self.edge_count));
        s.push_str(&format!("connected        {}\n", self.connected));
        s.push_str(&format!(
            "dim              {}  (witness pair {:?})\n",
            self.dim, self.witness_pair
        ));
        s.push_str(&format!("A                {}\n", self.a));
        s.push_str(&format!("sigma            {}\n", opt(self.sigma)));
        s.push_str(&format!("eta              {}\n", opt(self.eta)));
        s.push_str(&format!("mu               {}\n", opt(self.mu)));
        s.push_str(&format!("diam             {}\n", self.diam));
        s.push_str(&format!("diam_lower_bound {}\n", self.diam_lower_bound));
        s.push_str(&format!("block_graph      {}\n", self.block_graph));
        s.push_str(&format!(
            "classification   elementary={} tagged={} v_graph={}\n",
            self.classification.elementary, self.classification.tagged, self.classification.v_graph
        ));
        s.push_str(&format!(
            "timing_ms        dist={:.2} dim={:.2} A={:.2} sigma={:.2} eta={:.2} mu={:.2} block={:.2}\n",
            self.timing.distances_ms,
            self.timing.dim_ms,
            self.timing.a_ms,
            self.timing.sigma_ms,
            self.timing.eta_ms,
            self.timing.mu_ms,
            self.timing.block_ms
        ));
        s
    }
}
