//! Flat connections, numerical critical-point search and exact certification.
//!
//! The search minimizes `½‖r‖²` over the real parameters, where `r` stacks the
//! real and imaginary parts of the field-equation residuals. Converged points
//! are snapped to Gaussian rationals and re-checked with exact arithmetic.

use rayon::prelude::*;
use serde::Serialize;

use crate::associated_qvb::Section;
use crate::bundle_calculus::Qpc;
use crate::calibration::Calibration;
use crate::error::{Error, Result};
use crate::field_theory::{self as ft, Potential, Residual};
use crate::gauge_group::{gauge_action_qpc, GaugeMap};
use crate::group_hopf::CorepKind;
use crate::linalg::Matrix;
use crate::sample;
use crate::scalar::{self, ApproxC, ExactC, Scalar};

/// `λ₁ = −λ₀/(1+2iλ₀)`, the unique partner making `u = 0`.
pub fn flat_partner(lambda0: &ExactC) -> Result<ExactC> {
    let den = ExactC::one() + ExactC::gauss(0, 2) * lambda0.clone();
    let inv = den.inv().ok_or_else(|| Error::NoFlatCompletion(lambda0.to_string()))?;
    Ok(-(lambda0.clone() * inv))
}

pub fn enumerate_flat(samples: &[ExactC]) -> Vec<Result<Qpc<ExactC>>> {
    samples
        .iter()
        .map(|l0| flat_partner(l0).map(|l1| Qpc::new(l0.clone(), l1)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolverOptions {
    pub max_iter: usize,
    /// Lower bound of the Levenberg–Marquardt damping.
    pub tikhonov: f64,
    pub step_tol: f64,
    /// Largest residual component accepted as converged.
    pub residual_tol: f64,
    pub fd_step: f64,
    pub snap_tol: f64,
    pub max_denom: i64,
    /// Largest parameter shift allowed between a float point and its exact
    /// replacement.
    pub certify_radius: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_iter: 200,
            tikhonov: 1e-8,
            step_tol: 1e-12,
            residual_tol: 1e-9,
            fd_step: 1e-6,
            snap_tol: scalar::DEFAULT_SNAP_TOL,
            max_denom: scalar::max_denom_from_env(),
            certify_radius: 1e-6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LmOutcome {
    pub x: Vec<f64>,
    pub iterations: usize,
    /// `½‖r‖²` at `x`.
    pub objective: f64,
    /// Objective after every accepted step; never increasing.
    pub trace: Vec<f64>,
}

fn half_norm_sq(r: &[f64]) -> f64 {
    0.5 * r.iter().map(|v| v * v).sum::<f64>()
}

fn solve_real(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let n = b.len();
    let m = Matrix::from_fn(n, n, |i, j| ApproxC::new(a[i][j], 0.0));
    let rhs = Matrix::from_fn(n, 1, |i, _| ApproxC::new(b[i], 0.0));
    let x = m.solve(&rhs).ok()?;
    Some((0..n).map(|i| x.column(0)[i].re).collect())
}

/// Damped Gauss–Newton with a central-difference Jacobian. Steps that raise
/// the objective are rejected and the damping is increased.
pub fn levenberg_marquardt(f: impl Fn(&[f64]) -> Vec<f64>, x0: &[f64], opts: &SolverOptions) -> LmOutcome {
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut r = f(&x);
    let mut obj = half_norm_sq(&r);
    let mut trace = vec![obj];
    let mut mu = opts.tikhonov;
    let mut iterations = 0;
    if n == 0 {
        return LmOutcome { x, iterations, objective: obj, trace };
    }
    while iterations < opts.max_iter && obj > 0.0 {
        iterations += 1;
        let h = opts.fd_step;
        let cols: Vec<Vec<f64>> = (0..n)
            .map(|j| {
                let mut xp = x.clone();
                let mut xm = x.clone();
                xp[j] += h;
                xm[j] -= h;
                let (rp, rm) = (f(&xp), f(&xm));
                rp.iter().zip(&rm).map(|(p, m)| (p - m) / (2.0 * h)).collect()
            })
            .collect();
        let jtj: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| cols[i].iter().zip(&cols[j]).map(|(a, b)| a * b).sum()).collect())
            .collect();
        let jtr: Vec<f64> = (0..n).map(|i| -cols[i].iter().zip(&r).map(|(a, b)| a * b).sum::<f64>()).collect();

        let mut accepted = None;
        for _ in 0..40 {
            let mut a = jtj.clone();
            for (i, row) in a.iter_mut().enumerate() {
                row[i] += mu;
            }
            if let Some(step) = solve_real(&a, &jtr) {
                let xn: Vec<f64> = x.iter().zip(&step).map(|(a, b)| a + b).collect();
                let rn = f(&xn);
                let on = half_norm_sq(&rn);
                if on.is_finite() && on <= obj {
                    accepted = Some((xn, rn, on, step));
                    break;
                }
            }
            mu *= 10.0;
        }
        let Some((xn, rn, on, step)) = accepted else { break };
        x = xn;
        r = rn;
        obj = on;
        trace.push(obj);
        mu = (mu / 10.0).max(opts.tikhonov);
        let step_norm = step.iter().map(|v| v * v).sum::<f64>().sqrt();
        if step_norm < opts.step_tol {
            break;
        }
    }
    LmOutcome { x, iterations, objective: obj, trace }
}

fn to_c(x: &[f64]) -> Vec<ApproxC> {
    x.chunks(2).map(|p| ApproxC::new(p[0], p[1])).collect()
}

fn from_c(z: &[ApproxC]) -> Vec<f64> {
    z.iter().flat_map(|c| [c.re, c.im]).collect()
}

fn split<S: Scalar>(r: &Residual<S>) -> Vec<f64> {
    r.values()
        .iter()
        .flat_map(|v| {
            let a = v.to_approx();
            [a.re, a.im]
        })
        .collect()
}

fn approx_qpc(q: &Qpc<ExactC>) -> Qpc<ApproxC> {
    Qpc::new(q.lambda0.to_approx(), q.lambda1.to_approx())
}

fn approx_section(t: &Section<ExactC>) -> Section<ApproxC> {
    Section::new(t.corep, t.p[0].to_approx(), t.p[1].to_approx())
}

fn dist(a: &[ApproxC], b: &[ApproxC]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (*x - *y).abs_sq_f64())
        .sum::<f64>()
        .sqrt()
}

/// First-order distance from `ω` to the flat locus `u = 0`.
pub fn flat_distance(omega: &Qpc<ApproxC>) -> f64 {
    let two_i = ApproxC::new(0.0, 2.0);
    let d0 = ApproxC::new(1.0, 0.0) + two_i * omega.lambda1;
    let d1 = ApproxC::new(1.0, 0.0) + two_i * omega.lambda0;
    let g = (d0.abs_sq_f64() + d1.abs_sq_f64()).sqrt();
    omega.u().abs() / g.max(f64::MIN_POSITIVE)
}

pub fn ym_distance(omega: &Qpc<ApproxC>) -> f64 {
    dist(&omega.to_vec(), &approx_qpc(&Qpc::ym()).to_vec())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    Flat,
    YmNonflat,
    Matter,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub kind: PointKind,
    pub flat: bool,
    pub action: Option<ExactC>,
    pub action_approx: f64,
    /// Whether `𝟙ε` and `f_σ` fix the connection; needs an exact point.
    pub orbit_fixed: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalPoint {
    pub seed: Vec<ApproxC>,
    pub approx_omega: Qpc<ApproxC>,
    pub approx_sections: Option<(Section<ApproxC>, Section<ApproxC>)>,
    pub omega: Option<Qpc<ExactC>>,
    pub sections: Option<(Section<ExactC>, Section<ExactC>)>,
    pub exactified: bool,
    pub certified: bool,
    /// Exact residuals at the snapped point, when snapping succeeded.
    pub certificate: Vec<Residual<ExactC>>,
    /// Largest float residual component at the converged point.
    pub residual_max: f64,
    pub iterations: usize,
    pub objective: f64,
    pub flat_distance: f64,
    pub ym_distance: f64,
    pub classification: Classification,
}

/// Exact flat point near `omega`: the better-conditioned `λ` is rounded to a
/// nearby rational and its partner is solved for.
pub fn exactify_flat(omega: &Qpc<ApproxC>, opts: &SolverOptions) -> Result<Qpc<ExactC>> {
    let cond = |l: &ApproxC| (ApproxC::new(1.0, 0.0) + ApproxC::new(0.0, 2.0) * *l).abs();
    let swap = cond(&omega.lambda1) > cond(&omega.lambda0);
    let free = if swap { omega.lambda1 } else { omega.lambda0 };
    // the free coordinate is arbitrary on the locus, so a finer
    // denominator is allowed when the bounded one lands too far away
    let candidates = [
        ExactC::from_approx(free, opts.snap_tol, opts.max_denom),
        ExactC::nearest(free, opts.max_denom),
        ExactC::nearest(free, FLAT_FALLBACK_DENOM.max(opts.max_denom)),
    ];
    for snapped in candidates.into_iter().flatten() {
        let Ok(partner) = flat_partner(&snapped) else { continue };
        let q = if swap { Qpc::new(partner, snapped) } else { Qpc::new(snapped, partner) };
        if dist(&approx_qpc(&q).to_vec(), &omega.to_vec()) <= opts.certify_radius {
            return Ok(q);
        }
    }
    Err(Error::NotSnappable(free.abs()))
}

/// Denominator bound for the free coordinate of a flat point when the
/// configured bound is too coarse.
const FLAT_FALLBACK_DENOM: i64 = 1_000_000_000;

fn snap_all(z: &[ApproxC], opts: &SolverOptions) -> Result<Vec<ExactC>> {
    z.iter()
        .map(|c| ExactC::from_approx(*c, opts.snap_tol, opts.max_denom))
        .collect()
}

/// Exact candidates for a float connection: direct snapping, then the flat
/// completion when the point is close to the flat locus.
fn omega_candidates(omega: &Qpc<ApproxC>, opts: &SolverOptions) -> Vec<Qpc<ExactC>> {
    let mut out = Vec::new();
    if let Ok(v) = snap_all(&omega.to_vec(), opts) {
        out.push(Qpc::new(v[0].clone(), v[1].clone()));
    }
    if flat_distance(omega) < opts.certify_radius {
        if let Ok(q) = exactify_flat(omega, opts) {
            if !out.contains(&q) {
                out.push(q);
            }
        }
    }
    out
}

pub fn classify(
    omega: &Qpc<ApproxC>,
    exact: Option<&Qpc<ExactC>>,
    with_matter: bool,
    action: Option<ExactC>,
    action_approx: f64,
    cal: &Calibration,
) -> Classification {
    let flat = match exact {
        Some(q) => q.u().is_zero(),
        None => flat_distance(omega) < 1e-9,
    };
    let kind = if with_matter {
        PointKind::Matter
    } else if flat {
        PointKind::Flat
    } else {
        PointKind::YmNonflat
    };
    let orbit_fixed = exact.map(|q| {
        [GaugeMap::unit(), GaugeMap::sigma()]
            .iter()
            .all(|f| gauge_action_qpc(f, q, cal).as_ref() == Ok(q))
    });
    Classification { kind, flat, action, action_approx, orbit_fixed }
}

/// Critical point of the Yang–Mills action from a float seed `(λ₀, λ₁)`.
pub fn find_critical_ym(seed: [ApproxC; 2], opts: &SolverOptions, cal: &Calibration) -> Result<CriticalPoint> {
    if !seed.iter().all(ApproxC::is_finite) {
        return Err(Error::Invalid("seed is not finite".into()));
    }
    let f = |x: &[f64]| {
        let z = to_c(x);
        split(&ft::ym_residual(&Qpc::new(z[0], z[1]), cal))
    };
    let out = levenberg_marquardt(f, &from_c(&seed), opts);
    let z = to_c(&out.x);
    let omega = Qpc::new(z[0], z[1]);
    let residual_max = ft::ym_residual(&omega, cal).max_abs();
    if residual_max > opts.residual_tol || !residual_max.is_finite() {
        return Err(Error::NoConvergence { iterations: out.iterations, objective: out.objective });
    }

    let mut certificate = Vec::new();
    let mut exact = None;
    for cand in omega_candidates(&omega, opts) {
        let r = ft::ym_residual(&cand, cal);
        let ok = r.is_zero();
        certificate = vec![r];
        if ok {
            exact = Some(cand);
            break;
        }
    }
    let certified = exact.is_some();
    let action = exact.as_ref().map(|q| ft::action_ym(q, cal));
    let classification = classify(
        &omega,
        exact.as_ref(),
        false,
        action,
        ft::action_ym(&omega, cal).re,
        cal,
    );
    Ok(CriticalPoint {
        seed: seed.to_vec(),
        flat_distance: flat_distance(&omega),
        ym_distance: ym_distance(&omega),
        approx_omega: omega,
        approx_sections: None,
        exactified: !certificate.is_empty(),
        omega: exact,
        sections: None,
        certified,
        certificate,
        residual_max,
        iterations: out.iterations,
        objective: out.objective,
        classification,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct YmsmSeed {
    pub omega: [ApproxC; 2],
    pub t1: [ApproxC; 2],
    pub t2: [ApproxC; 2],
}

impl YmsmSeed {
    fn flat(&self) -> Vec<ApproxC> {
        [self.omega, self.t1, self.t2].concat()
    }
}

/// Parameters held fixed during a matter search.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Freeze {
    pub omega: Option<Qpc<ExactC>>,
    pub sections: Option<(Section<ExactC>, Section<ExactC>)>,
}

struct MatterProblem<'a> {
    corep: CorepKind,
    freeze: &'a Freeze,
    seed: &'a YmsmSeed,
}

impl MatterProblem<'_> {
    fn free_start(&self) -> Vec<f64> {
        let mut z = Vec::new();
        if self.freeze.omega.is_none() {
            z.extend(self.seed.omega);
        }
        if self.freeze.sections.is_none() {
            z.extend(self.seed.t1);
            z.extend(self.seed.t2);
        }
        from_c(&z)
    }

    fn unpack(&self, x: &[f64]) -> (Qpc<ApproxC>, Section<ApproxC>, Section<ApproxC>) {
        let z = to_c(x);
        let mut it = z.into_iter();
        let omega = match &self.freeze.omega {
            Some(q) => approx_qpc(q),
            None => Qpc::new(it.next().unwrap(), it.next().unwrap()),
        };
        let (t1, t2) = match &self.freeze.sections {
            Some((a, b)) => (approx_section(a), approx_section(b)),
            None => {
                let p: Vec<ApproxC> = it.collect();
                (
                    Section::new(self.corep, p[0], p[1]),
                    Section::new(self.corep, p[2], p[3]),
                )
            }
        };
        (omega, t1, t2)
    }
}

fn residual_vector<S: Scalar>(r: &ft::YmsmResiduals<S>) -> Vec<f64> {
    r.all().iter().flat_map(|x| split(x)).collect()
}

/// Exact sections near `p` solving the part of the matter equation that is
/// linear in the section (constant `V′`): the float point is projected onto
/// the exact kernel before rounding.
fn section_candidates(
    omega: &Qpc<ExactC>,
    t: &Section<ApproxC>,
    side: crate::base_calculus::Side,
    v: &Potential<ExactC>,
    opts: &SolverOptions,
    cal: &Calibration,
) -> Vec<Section<ExactC>> {
    let mut out = Vec::new();
    if let Ok(p) = snap_all(&t.p, opts) {
        out.push(Section::new(t.corep, p[0].clone(), p[1].clone()));
    }
    let constant_slope = match v {
        Potential::PaperExample { .. } => true,
        Potential::Polynomial { coeffs } => coeffs.len() <= 2,
    };
    if !constant_slope {
        return out;
    }
    let zero = Section::zero(t.corep);
    let vp = v.derivative(&crate::base_calculus::BaseForm::zero(0)).map(|z| z.conj());
    // columns of p ↦ ∇^⋆∇p − V′*p
    let cols: Vec<Vec<ExactC>> = (0..2)
        .map(|j| {
            let mut e = zero.clone();
            e.p[j] = ExactC::one();
            let lap = crate::associated_qvb::laplacian(omega, &e, side, cal);
            (0..2).map(|i| lap.p[i].clone() - vp.c[i].clone() * e.p[i].clone()).collect()
        })
        .collect();
    let m = Matrix::from_columns(2, &cols);
    let kernel: Option<[ExactC; 2]> = if m.is_zero() {
        None
    } else {
        let row = (0..2).find(|&r| !(m[(r, 0)].is_zero() && m[(r, 1)].is_zero())).unwrap();
        Some([-m[(row, 1)].clone(), m[(row, 0)].clone()])
    };
    let cand = match kernel {
        None => ExactC::nearest(t.p[0], opts.max_denom)
            .and_then(|a| Ok([a, ExactC::nearest(t.p[1], opts.max_denom)?]))
            .ok(),
        Some(k) => {
            let is_kernel = m.apply(&k).iter().all(|x| x.is_zero());
            if !is_kernel {
                Some([ExactC::zero(), ExactC::zero()])
            } else {
                let ka = [k[0].to_approx(), k[1].to_approx()];
                let num = ka[0].conj() * t.p[0] + ka[1].conj() * t.p[1];
                let den = ka[0].abs_sq_f64() + ka[1].abs_sq_f64();
                let c = ApproxC::new(num.re / den, num.im / den);
                ExactC::from_approx(c, opts.snap_tol, opts.max_denom)
                    .or_else(|_| ExactC::nearest(c, opts.max_denom))
                    .ok()
                    .map(|c| [c.clone() * k[0].clone(), c * k[1].clone()])
            }
        }
    };
    if let Some([a, b]) = cand {
        let s = Section::new(t.corep, a, b);
        if dist(&[s.p[0].to_approx(), s.p[1].to_approx()], &t.p) <= opts.certify_radius && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Critical triplet `(ω, T₁, T₂)` of the matter action from a float seed.
pub fn find_critical_ymsm(
    corep: CorepKind,
    v: &Potential<ExactC>,
    seed: &YmsmSeed,
    freeze: &Freeze,
    opts: &SolverOptions,
    cal: &Calibration,
) -> Result<CriticalPoint> {
    v.validate()?;
    if !seed.flat().iter().all(ApproxC::is_finite) {
        return Err(Error::Invalid("seed is not finite".into()));
    }
    if let Some((a, b)) = &freeze.sections {
        if a.corep != corep || b.corep != corep {
            return Err(Error::CorepMismatch(corep.to_string(), a.corep.to_string()));
        }
    }
    let va: Potential<ApproxC> = v.map(|z| z.to_approx());
    let problem = MatterProblem { corep, freeze, seed };
    let f = |x: &[f64]| {
        let (w, t1, t2) = problem.unpack(x);
        residual_vector(&ft::ymsm_residuals(&w, &t1, &t2, &va, cal).expect("validated"))
    };
    let out = levenberg_marquardt(f, &problem.free_start(), opts);
    let (omega, t1, t2) = problem.unpack(&out.x);
    let approx_res = ft::ymsm_residuals(&omega, &t1, &t2, &va, cal)?;
    let residual_max = approx_res.max_abs();
    if residual_max > opts.residual_tol || !residual_max.is_finite() {
        return Err(Error::NoConvergence { iterations: out.iterations, objective: out.objective });
    }

    let omegas = match &freeze.omega {
        Some(q) => vec![q.clone()],
        None => omega_candidates(&omega, opts),
    };
    let mut certificate = Vec::new();
    let mut exact = None;
    'search: for w in &omegas {
        let pairs: Vec<(Section<ExactC>, Section<ExactC>)> = match &freeze.sections {
            Some(p) => vec![p.clone()],
            None => {
                let c1 = section_candidates(w, &t1, crate::base_calculus::Side::Left, v, opts, cal);
                let c2 = section_candidates(w, &t2, crate::base_calculus::Side::Right, v, opts, cal);
                c1.iter()
                    .flat_map(|a| c2.iter().map(move |b| (a.clone(), b.clone())))
                    .collect()
            }
        };
        for (a, b) in pairs {
            let r = ft::ymsm_residuals(w, &a, &b, v, cal)?;
            let ok = r.is_zero();
            certificate = vec![r.connection, r.matter_left, r.matter_right];
            if ok {
                exact = Some((w.clone(), a, b));
                break 'search;
            }
        }
    }
    let certified = exact.is_some();
    let action = match &exact {
        Some((w, a, b)) => Some(ft::action_ymsm(w, a, b, v, cal)?),
        None => None,
    };
    let action_approx = ft::action_ymsm(&omega, &t1, &t2, &va, cal)?.re;
    let with_matter = !(t1.p.iter().chain(&t2.p).all(|z| z.abs() < opts.residual_tol));
    let classification = classify(
        &omega,
        exact.as_ref().map(|e| &e.0),
        with_matter,
        action,
        action_approx,
        cal,
    );
    Ok(CriticalPoint {
        seed: seed.flat(),
        flat_distance: flat_distance(&omega),
        ym_distance: ym_distance(&omega),
        approx_omega: omega,
        approx_sections: Some((t1, t2)),
        exactified: !certificate.is_empty(),
        omega: exact.as_ref().map(|e| e.0.clone()),
        sections: exact.map(|e| (e.1, e.2)),
        certified,
        certificate,
        residual_max,
        iterations: out.iterations,
        objective: out.objective,
        classification,
    })
}

/// Uniform float in the disc `|z| ≤ r`.
fn disc_point(rng: &mut impl rand::Rng, r: f64) -> ApproxC {
    let rad = r * rng.gen::<f64>().sqrt();
    let t = rng.gen::<f64>() * std::f64::consts::TAU;
    ApproxC::new(rad * t.cos(), rad * t.sin())
}

/// `n` seeds `(λ₀, λ₁)` with `‖λ‖ ≤ radius`.
pub fn ym_seeds(n: usize, seed: u64, radius: f64) -> Vec<[ApproxC; 2]> {
    let mut rng = sample::rng(seed);
    (0..n)
        .map(|_| {
            // uniform direction in ℂ², radius scaled for the 4-ball
            let a = disc_point(&mut rng, 1.0);
            let b = disc_point(&mut rng, 1.0);
            let norm = (a.abs_sq_f64() + b.abs_sq_f64()).sqrt().max(1e-300);
            let rad = radius * rand::Rng::gen::<f64>(&mut rng).powf(0.25) / norm;
            [ApproxC::new(a.re * rad, a.im * rad), ApproxC::new(b.re * rad, b.im * rad)]
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Converged(Box<CriticalPoint>),
    Failed { seed: Vec<ApproxC>, error: String },
}

impl Outcome {
    pub fn point(&self) -> Option<&CriticalPoint> {
        match self {
            Outcome::Converged(p) => Some(p),
            Outcome::Failed { .. } => None,
        }
    }

    fn sort_key(&self) -> (u8, Vec<f64>) {
        match self {
            Outcome::Converged(p) => {
                let mut k = p.classification.kind as u8;
                if !p.certified {
                    k += 10;
                }
                (k, from_c(&p.approx_omega.to_vec()))
            }
            Outcome::Failed { seed, .. } => (100, from_c(seed)),
        }
    }
}

fn sort_outcomes(v: &mut [Outcome]) {
    v.sort_by(|a, b| a.sort_key().partial_cmp(&b.sort_key()).unwrap_or(std::cmp::Ordering::Equal));
}

fn outcome(seed: Vec<ApproxC>, r: Result<CriticalPoint>) -> Outcome {
    match r {
        Ok(p) => Outcome::Converged(Box::new(p)),
        Err(e) => Outcome::Failed { seed, error: e.to_string() },
    }
}

/// Runs [`find_critical_ym`] over a batch in parallel; output is sorted.
pub fn solve_ym_batch(seeds: &[[ApproxC; 2]], opts: &SolverOptions, cal: &Calibration) -> Vec<Outcome> {
    let mut v: Vec<Outcome> = seeds
        .par_iter()
        .map(|s| outcome(s.to_vec(), find_critical_ym(*s, opts, cal)))
        .collect();
    sort_outcomes(&mut v);
    v
}

pub fn solve_ymsm_batch(
    corep: CorepKind,
    v: &Potential<ExactC>,
    seeds: &[YmsmSeed],
    freeze: &Freeze,
    opts: &SolverOptions,
    cal: &Calibration,
) -> Vec<Outcome> {
    let mut out: Vec<Outcome> = seeds
        .par_iter()
        .map(|s| outcome(s.flat(), find_critical_ymsm(corep, v, s, freeze, opts, cal)))
        .collect();
    sort_outcomes(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAL: Calibration = Calibration::SELECTED;

    fn q(s: &str) -> ExactC {
        s.parse().unwrap()
    }

    fn c(re: f64, im: f64) -> ApproxC {
        ApproxC::new(re, im)
    }

    #[test]
    fn flat_enumeration() {
        let out = enumerate_flat(&[q("0"), q("1"), q("1/2i")]);
        assert_eq!(out[0].as_ref().unwrap(), &Qpc::triv());
        assert_eq!(out[1].as_ref().unwrap(), &Qpc::new(q("1"), q("-1/5+2/5i")));
        assert!(matches!(out[2], Err(Error::NoFlatCompletion(_))));
        for w in out.into_iter().flatten() {
            assert!(w.u().is_zero());
        }
    }

    #[test]
    fn lm_is_monotone_on_a_quadratic() {
        let out = levenberg_marquardt(|x| vec![x[0] - 1.0, 2.0 * (x[1] + 3.0)], &[5.0, 5.0], &SolverOptions::default());
        assert!((out.x[0] - 1.0).abs() < 1e-10 && (out.x[1] + 3.0).abs() < 1e-10);
        assert!(out.trace.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn ym_seed_examples() {
        let o = SolverOptions::default();
        let p = find_critical_ym([c(0.0, 0.4), c(0.0, 0.6)], &o, &CAL).unwrap();
        assert_eq!(p.omega, Some(Qpc::ym()));
        assert_eq!(p.classification.kind, PointKind::YmNonflat);
        assert_eq!(p.classification.action, Some(q("-1/8")));
        assert_eq!(p.classification.orbit_fixed, Some(true));

        let p = find_critical_ym([c(0.0, 0.0), c(0.0, 0.0)], &o, &CAL).unwrap();
        assert_eq!(p.omega, Some(Qpc::triv()));
        assert_eq!(p.classification.kind, PointKind::Flat);

        let p = find_critical_ym([c(2.0, 0.0), c(2.0, 0.0)], &o, &CAL).unwrap();
        assert!(p.certified);
        assert!(p.approx_omega.u().abs() < 1e-12);
        assert!(p.omega.unwrap().u().is_zero());
        assert_eq!(p.classification.action, Some(q("0")));
    }

    #[test]
    fn trivial_matter_triplet() {
        let v = Potential::PaperExample { x: q("2"), y: q("1") };
        let seed = YmsmSeed {
            omega: [c(0.01, -0.02), c(0.0, 0.01)],
            t1: [c(2.01, 0.0), c(1.0, 0.01)],
            t2: [c(1.98, 0.0), c(1.0, 0.0)],
        };
        let p = find_critical_ymsm(CorepKind::Trivial, &v, &seed, &Freeze::default(), &SolverOptions::default(), &CAL)
            .unwrap();
        assert!(p.certified, "{p:?}");
        let (t1, t2) = p.sections.unwrap();
        assert!(p.omega.unwrap().u().is_zero());
        // the kernel of ∇^⋆∇ − V′ is spanned by (2,1)
        for t in [t1, t2] {
            assert_eq!(t.p[0], q("2") * t.p[1].clone());
        }
    }

    #[test]
    fn alternating_at_ym_with_frozen_connection() {
        let v = Potential::Polynomial { coeffs: vec![q("0"), q("1")] };
        let freeze = Freeze { omega: Some(Qpc::ym()), sections: None };
        let one = c(1.0, 0.0);
        let seed = YmsmSeed { omega: [one, one], t1: [one, one], t2: [one, one] };
        let p = find_critical_ymsm(CorepKind::Alternating, &v, &seed, &freeze, &SolverOptions::default(), &CAL)
            .unwrap();
        assert!(p.certified);
        let (t1, t2) = p.sections.unwrap();
        assert_eq!(t1.p[0].clone() * t1.p[1].conj(), t2.p[0].conj() * t2.p[1].clone());

        let bad = Freeze {
            omega: Some(Qpc::ym()),
            sections: Some((
                Section::new(CorepKind::Alternating, q("1"), q("1")),
                Section::new(CorepKind::Alternating, q("1"), q("2")),
            )),
        };
        let err = find_critical_ymsm(CorepKind::Alternating, &v, &seed, &bad, &SolverOptions::default(), &CAL)
            .unwrap_err();
        assert!(matches!(err, Error::NoConvergence { objective, .. } if objective > 0.0));
    }

    #[test]
    fn batch_is_sorted_and_deterministic() {
        let seeds = ym_seeds(6, 7, 2.0);
        assert!(seeds.iter().all(|s| (s[0].abs_sq_f64() + s[1].abs_sq_f64()).sqrt() <= 2.0));
        let a = solve_ym_batch(&seeds, &SolverOptions::default(), &CAL);
        let b = solve_ym_batch(&seeds, &SolverOptions::default(), &CAL);
        assert_eq!(a, b);
        let keys: Vec<_> = a.iter().map(|o| o.sort_key()).collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    }
}
