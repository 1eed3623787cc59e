//! Solve configuration: JSON file contents merged with command-line flags.

use std::path::{Path, PathBuf};

use qpb_core::bundle_calculus::Qpc;
use qpb_core::field_theory::Potential;
use qpb_core::group_hopf::CorepKind;
use qpb_core::solver::SolverOptions;
use qpb_core::{ApproxC, ExactC, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    Ym,
    Ymsm,
}

/// A number given either exactly (`"p/q+r/s i"`, `{re, im}`, integer) or as
/// a `[re, im]` float pair.
#[derive(Clone, Debug, PartialEq)]
pub struct Num {
    pub exact: Option<ExactC>,
    pub approx: ApproxC,
}

impl Num {
    pub fn exact(z: ExactC) -> Self {
        Num { approx: z.to_approx(), exact: Some(z) }
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Pair([f64; 2]),
            Exact(ExactC),
        }
        Ok(match Raw::deserialize(d)? {
            Raw::Pair([re, im]) => {
                let approx = ApproxC::new(re, im);
                let exact = ExactC::from_approx(approx, qpb_core::scalar::DEFAULT_SNAP_TOL, qpb_core::scalar::max_denom_from_env()).ok();
                Num { exact, approx }
            }
            Raw::Exact(z) => Num::exact(z),
        })
    }
}

impl std::str::FromStr for Num {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse::<ExactC>().map(Num::exact).map_err(|e| e.to_string())
    }
}

/// Optional overrides of [`SolverOptions`].
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverConfig {
    pub max_iter: Option<usize>,
    pub tikhonov: Option<f64>,
    pub step_tol: Option<f64>,
    pub residual_tol: Option<f64>,
    pub fd_step: Option<f64>,
    pub snap_tol: Option<f64>,
    pub max_denom: Option<i64>,
    pub certify_radius: Option<f64>,
}

impl SolverConfig {
    pub fn options(&self) -> SolverOptions {
        let d = SolverOptions::default();
        SolverOptions {
            max_iter: self.max_iter.unwrap_or(d.max_iter),
            tikhonov: self.tikhonov.unwrap_or(d.tikhonov),
            step_tol: self.step_tol.unwrap_or(d.step_tol),
            residual_tol: self.residual_tol.unwrap_or(d.residual_tol),
            fd_step: self.fd_step.unwrap_or(d.fd_step),
            snap_tol: self.snap_tol.unwrap_or(d.snap_tol),
            max_denom: self.max_denom.unwrap_or(d.max_denom),
            certify_radius: self.certify_radius.unwrap_or(d.certify_radius),
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<Problem>,
    pub seed: Option<u64>,
    pub seeds: Option<usize>,
    pub radius: Option<f64>,
    pub corep: Option<CorepKind>,
    pub potential: Option<Potential<ExactC>>,
    pub omega: Option<[Num; 2]>,
    pub t1: Option<[Num; 2]>,
    pub t2: Option<[Num; 2]>,
    #[serde(default)]
    pub freeze_omega: bool,
    #[serde(default)]
    pub freeze_sections: bool,
    #[serde(default)]
    pub solver: SolverConfig,
    pub out: Option<PathBuf>,
}

/// Reads a config file; errors carry the JSON path of the offending field.
pub fn load(path: &Path) -> Result<RunConfig, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let p = e.path().to_string();
        format!("{}: at `{p}`: {}", path.display(), e.into_inner())
    })
}

/// `paper:x,y`, `poly:c0,c1,...` or `zero`.
pub fn parse_potential(s: &str) -> Result<Potential<ExactC>, String> {
    let nums = |t: &str| -> Result<Vec<ExactC>, String> {
        t.split(',').map(|c| c.parse::<ExactC>().map_err(|e| e.to_string())).collect()
    };
    let v = match s.split_once(':') {
        Some(("paper", rest)) => match nums(rest)?.as_slice() {
            [x, y] => Potential::PaperExample { x: x.clone(), y: y.clone() },
            _ => return Err(format!("'{s}': paper:x,y takes two values")),
        },
        Some(("poly", rest)) => Potential::Polynomial { coeffs: nums(rest)? },
        None if s == "zero" => Potential::zero(),
        _ => return Err(format!("'{s}': expected paper:x,y, poly:c0,c1,... or zero")),
    };
    v.validate().map_err(|e| e.to_string())?;
    Ok(v)
}

/// `a,b` as a pair of exact values.
pub fn parse_pair(s: &str) -> Result<[Num; 2], String> {
    match s.split(',').collect::<Vec<_>>().as_slice() {
        [a, b] => Ok([a.parse()?, b.parse()?]),
        _ => Err(format!("'{s}': expected two comma-separated values")),
    }
}

pub fn exact_pair(p: &[Num; 2], what: &str) -> Result<[ExactC; 2], String> {
    match (&p[0].exact, &p[1].exact) {
        (Some(a), Some(b)) => Ok([a.clone(), b.clone()]),
        _ => Err(format!("{what} must be exact to be frozen")),
    }
}

pub fn approx_pair(p: &[Num; 2]) -> [ApproxC; 2] {
    [p[0].approx, p[1].approx]
}

pub fn qpc_of(p: [ExactC; 2]) -> Qpc<ExactC> {
    let [a, b] = p;
    Qpc::new(a, b)
}
