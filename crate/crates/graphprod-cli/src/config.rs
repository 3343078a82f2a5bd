//! The workbench config file: graph declaration, window, scan parameters
//! and output settings, in TOML. The loader is strict and the format
//! round-trips (parse → serialize → parse is the identity).

use anyhow::{Context, Result, bail};
use graphprod::enumeration::BallSpec;
use graphprod::{CayleyTable, PresentationGraph, VertexGroup};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkbenchConfig {
    pub graph: GraphConfig,
    pub ball: BallConfig,
    #[serde(default)]
    pub rd: RdConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphConfig {
    pub vertices: Vec<VertexConfig>,
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum VertexConfig {
    Cyclic {
        order: u32,
    },
    Integers,
    CayleyTable {
        mult: Vec<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        length: Option<Vec<u64>>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallConfig {
    pub lambda_max: usize,
    /// Required when any vertex group is infinite; defaults to a cap that
    /// cannot exclude anything when all vertex groups are finite.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ell_max: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RdConfig {
    pub k_max: u64,
    pub l_max: u64,
    pub restarts: usize,
    pub max_iters: usize,
    pub tol: f64,
    /// Random (φ, ψ) sample pairs per scan row.
    pub samples: usize,
    /// Random (φ, ψ) pairs for the vanishing check.
    pub trials: usize,
    /// Pair length cap for the exhaustive decomposition check.
    pub p2_max: usize,
    pub seed: u64,
    pub r_grid: Vec<f64>,
}

impl Default for RdConfig {
    fn default() -> Self {
        RdConfig {
            k_max: 4,
            l_max: 4,
            restarts: 16,
            max_iters: 200,
            tol: 1e-10,
            samples: 8,
            trials: 1000,
            p2_max: 4,
            seed: 7,
            r_grid: vec![0.0, 0.5, 1.0, 1.5, 2.0],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    pub dir: PathBuf,
    pub format: OutputFormat,
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig {
            dir: PathBuf::from("out"),
            format: OutputFormat::Csv,
        }
    }
}

impl WorkbenchConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: WorkbenchConfig = toml::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.graph.vertices.is_empty() {
            bail!("config declares no vertices");
        }
        if self.rd.r_grid.is_empty() {
            bail!("rd.r_grid must contain at least one Sobolev order");
        }
        if self.rd.r_grid.iter().any(|r| *r < 0.0) {
            bail!("rd.r_grid entries must be nonnegative");
        }
        let infinite = self
            .graph
            .vertices
            .iter()
            .any(|v| matches!(v, VertexConfig::Integers));
        if infinite && self.ball.ell_max.is_none() {
            bail!(
                "ball.ell_max is required when a vertex group is infinite \
                 (the window must stay finite)"
            );
        }
        Ok(())
    }

    /// Builds and fully validates the presentation graph.
    pub fn build_graph(&self) -> Result<PresentationGraph> {
        let groups = self
            .graph
            .vertices
            .iter()
            .map(|v| -> Result<VertexGroup> {
                Ok(match v {
                    VertexConfig::Cyclic { order } => VertexGroup::cyclic(*order)?,
                    VertexConfig::Integers => VertexGroup::Integers,
                    VertexConfig::CayleyTable { mult, length } => {
                        VertexGroup::Table(CayleyTable::new(mult.clone(), length.clone())?)
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PresentationGraph::new(groups, &self.graph.edges)?)
    }

    /// The window spec; a saturating ℓ cap is derived for all-finite graphs
    /// when none is given.
    pub fn ball_spec(&self, graph: &PresentationGraph) -> Result<BallSpec> {
        match self.ball.ell_max {
            Some(ell_max) => Ok(BallSpec::new(self.ball.lambda_max, ell_max)),
            None => Ok(BallSpec::saturating(graph, self.ball.lambda_max)?),
        }
    }
}
