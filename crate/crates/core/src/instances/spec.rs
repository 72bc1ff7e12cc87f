use std::fmt;

use super::generators::*;
use super::random::RandomSpec;
use crate::error::Result;
use crate::game::{CostWeights, Instance};
use crate::rational::{format_rational, Rational};

/// A generator tag plus its parameters; rebuilding is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceSpec {
    BwcMultipartite { m: usize },
    BwfCliques { m: usize },
    BwcfLower { m: usize, weights: CostWeights },
    Path4,
    SwcPos { m: usize, eps: Rational },
    SwfNoStrong { eps: Rational },
    MaxCutEdge,
    Random(RandomSpec),
}

impl InstanceSpec {
    pub fn build(&self) -> Result<Instance> {
        match self {
            InstanceSpec::BwcMultipartite { m } => gen_bwc_multipartite(*m),
            InstanceSpec::BwfCliques { m } => gen_bwf_cliques(*m),
            InstanceSpec::BwcfLower { m, weights } => gen_bwcf_lower(*m, weights.clone()),
            InstanceSpec::Path4 => gen_path4(),
            InstanceSpec::SwcPos { m, eps } => gen_swc_pos(*m, eps),
            InstanceSpec::SwfNoStrong { eps } => gen_swf_nostrong(eps),
            InstanceSpec::MaxCutEdge => gen_maxcut_edge(),
            InstanceSpec::Random(r) => r.build(),
        }
    }

    pub fn generator_name(&self) -> &'static str {
        match self {
            InstanceSpec::BwcMultipartite { .. } => "bwc_multipartite",
            InstanceSpec::BwfCliques { .. } => "bwf_cliques",
            InstanceSpec::BwcfLower { .. } => "bwcf_lower",
            InstanceSpec::Path4 => "path4",
            InstanceSpec::SwcPos { .. } => "swc_pos",
            InstanceSpec::SwfNoStrong { .. } => "swf_nostrong",
            InstanceSpec::MaxCutEdge => "maxcut_edge",
            InstanceSpec::Random(_) => "random",
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.generator_name();
        match self {
            InstanceSpec::BwcMultipartite { m } | InstanceSpec::BwfCliques { m } => {
                write!(f, "{name}(m={m})")
            }
            InstanceSpec::BwcfLower { m, weights } => write!(
                f,
                "{name}(m={m};alpha={};beta={};gamma={})",
                format_rational(&weights.alpha),
                format_rational(&weights.beta),
                format_rational(&weights.gamma)
            ),
            InstanceSpec::SwcPos { m, eps } => {
                write!(f, "{name}(m={m};eps={})", format_rational(eps))
            }
            InstanceSpec::SwfNoStrong { eps } => write!(f, "{name}(eps={})", format_rational(eps)),
            InstanceSpec::Path4 | InstanceSpec::MaxCutEdge => f.write_str(name),
            InstanceSpec::Random(r) => {
                write!(
                    f,
                    "{name}(kind={};n={};m={};p={};seed={}",
                    r.kind,
                    r.n,
                    r.m,
                    format_rational(&r.edge_prob),
                    r.seed
                )?;
                if let Some(w) = &r.weights {
                    write!(
                        f,
                        ";alpha={};beta={};gamma={}",
                        format_rational(&w.alpha),
                        format_rational(&w.beta),
                        format_rational(&w.gamma)
                    )?;
                }
                if r.weighted_edges {
                    f.write_str(";weighted")?;
                }
                f.write_str(")")
            }
        }
    }
}
