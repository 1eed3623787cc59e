//! Acceptance suite. One line per criterion; the process exits nonzero if
//! any criterion fails.

use std::time::{Duration, Instant};

use qpb_core::associated_qvb::{self as qvb, Section};
use qpb_core::base_calculus::{self as base, BaseForm, Side};
use qpb_core::bundle_calculus::{self as bundle, Qpc};
use qpb_core::calibration::Flag;
use qpb_core::field_theory::{self as ft, Potential};
use qpb_core::gauge_group::{self as gg, GaugeMap};
use qpb_core::group_hopf::CorepKind;
use qpb_core::solver::{self, SolverOptions};
use qpb_core::{replicate, sample, verify};
use qpb_core::{ApproxC, Calibration, ExactC, Scalar};

type E = ExactC;

const CAL: Calibration = Calibration::SELECTED;

const CALCULUS_BUDGET: Duration = Duration::from_secs(1);
const FD_STEP: f64 = 1e-5;
const FD_SWEEP: [f64; 4] = [1e-4, 1e-5, 1e-6, 1e-7];
const FD_REL_TOL: f64 = 1e-6;
const SOLVER_SEEDS: usize = 100;
const SOLVER_RADIUS: f64 = 2.0;
const SOLVER_MAX_ITER: usize = 200;
const LOCUS_TOL: f64 = 1e-9;

fn q(s: &str) -> E {
    s.parse().expect("literal")
}

fn approx(w: &Qpc<E>) -> Qpc<ApproxC> {
    Qpc::new(w.lambda0.to_approx(), w.lambda1.to_approx())
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn c1_calculus() -> Outcome {
    let t = Instant::now();
    let laws = verify::calculus(&CAL);
    let el = t.elapsed();
    let failed: Vec<_> = laws.iter().filter(|r| !r.passed).map(|r| r.name.clone()).collect();
    outcome(
        failed.is_empty() && el < CALCULUS_BUDGET,
        format!("{} laws, {} failed {:?}, {:.0} ms (budget 1000 ms)", laws.len(), failed.len(), failed, el.as_secs_f64() * 1e3),
    )
}

fn c2_printed_values() -> Outcome {
    let dvol = base::dvol::<E>(&CAL);
    let ok = verify::printed_base_values(&CAL);
    outcome(ok, format!("dvol = {dvol}, integral and both displayed codifferentials exact"))
}

fn c3_curvature() -> Outcome {
    let mut rng = sample::rng(3);
    let qs: Vec<Qpc<E>> = (0..20).map(|_| sample::qpc(&mut rng)).collect();
    let bad = qs.iter().filter(|w| bundle::curvature(w, &CAL) != bundle::curvature_closed_form(w)).count();
    let ym = bundle::curvature(&Qpc::<E>::ym(), &CAL);
    let ym_ok = ym == BaseForm::new(2, q("-1/2i"), q("-1/2i"));
    outcome(bad == 0 && ym_ok, format!("20 random qpcs, {bad} mismatches; R(ω_YM) = {ym}"))
}

/// Central difference of `S_YM` along each λ-basis direction against
/// `−½ Re` of the exact residual component.
fn variational_error(w: &Qpc<E>, h: f64) -> f64 {
    let r = ft::ym_residual(w, &CAL);
    let a = approx(w);
    let dirs = [
        (ApproxC::new(1.0, 0.0), ApproxC::new(0.0, 0.0)),
        (ApproxC::new(0.0, 0.0), ApproxC::new(1.0, 0.0)),
        (ApproxC::new(0.0, 1.0), ApproxC::new(0.0, 0.0)),
        (ApproxC::new(0.0, 0.0), ApproxC::new(0.0, 1.0)),
    ];
    let mut worst: f64 = 0.0;
    for ((da, db), want) in dirs.iter().zip(r.values()) {
        let shift = |s: f64| {
            let hs = ApproxC::new(s, 0.0);
            Qpc::new(a.lambda0 + *da * hs, a.lambda1 + *db * hs)
        };
        let up = ft::action_ym(&shift(h), &CAL).re;
        let dn = ft::action_ym(&shift(-h), &CAL).re;
        let fd = (up - dn) / (2.0 * h);
        let want = -0.5 * want.to_approx().re;
        let scale = want.abs().max(1e-12);
        worst = worst.max((fd - want).abs() / scale);
    }
    worst
}

fn c4_yang_mills() -> Outcome {
    let zeros: Vec<Qpc<E>> = [Qpc::triv(), Qpc::ym()].into_iter().chain(verify::sample_flat_points()).collect();
    let zero_ok = zeros.iter().all(|w| ft::ym_residual(w, &CAL).is_zero());
    let nonzero_ok = [Qpc::new(q("1"), q("0")), Qpc::new(q("i"), q("0"))]
        .iter()
        .all(|w| !ft::ym_residual(w, &CAL).is_zero());
    let action = ft::action_ym(&Qpc::<E>::ym(), &CAL);
    let mut rng = sample::rng(4);
    let qs: Vec<Qpc<E>> = (0..10).map(|_| sample::qpc(&mut rng)).collect();
    let worst = qs.iter().map(|w| variational_error(w, FD_STEP)).fold(0.0, f64::max);
    let sweep: Vec<String> = FD_SWEEP
        .iter()
        .map(|&h| format!("{h:.0e}:{:.1e}", qs.iter().map(|w| variational_error(w, h)).fold(0.0, f64::max)))
        .collect();
    outcome(
        zero_ok && nonzero_ok && action == q("-1/8") && worst <= FD_REL_TOL,
        format!(
            "zeros at triv, YM, 10 flat: {zero_ok}; nonzero at (1,0),(i,0): {nonzero_ok}; S(ω_YM) = {action}; \
             FD rel err {worst:.1e} at h = {FD_STEP:.0e} (tol {FD_REL_TOL:.0e}; sweep {})",
            sweep.join(" ")
        ),
    )
}

fn c5_solver() -> Outcome {
    let seeds = solver::ym_seeds(SOLVER_SEEDS, 0, SOLVER_RADIUS);
    let in_ball = seeds
        .iter()
        .all(|s| (s[0].abs_sq_f64() + s[1].abs_sq_f64()).sqrt() <= SOLVER_RADIUS);
    let opts = SolverOptions { max_iter: SOLVER_MAX_ITER, ..SolverOptions::default() };
    let out = solver::solve_ym_batch(&seeds, &opts, &CAL);
    let pts: Vec<_> = out.iter().filter_map(|o| o.point()).collect();
    let converged = pts.len();
    let fast = pts.iter().filter(|p| p.iterations < SOLVER_MAX_ITER).count();
    let near = pts
        .iter()
        .filter(|p| p.flat_distance.min(p.ym_distance) < LOCUS_TOL)
        .count();
    let certified = pts.iter().filter(|p| p.exactified && p.certified).count();
    let ym = pts.iter().filter(|p| p.omega.as_ref() == Some(&Qpc::ym())).count();
    let max_iter = pts.iter().map(|p| p.iterations).max().unwrap_or(0);
    let n = seeds.len();
    outcome(
        in_ball && converged == n && fast == n && near == n && certified == n,
        format!(
            "{n} seeds in ‖λ‖ ≤ {SOLVER_RADIUS}: {converged} converged (max {max_iter} iterations), \
             {near} within {LOCUS_TOL:.0e} of flat locus or ω_YM, {certified} certified exactly, {ym} at ω_YM"
        ),
    )
}

fn c6_trivial_matter() -> Outcome {
    let flats = verify::sample_flat_points();
    let mut n = 0;
    let mut bad = Vec::new();
    for (x, y) in [("2", "1"), ("3", "2"), ("1", "1")] {
        let t = Section::new(CorepKind::Trivial, q(x), q(y));
        let v = Potential::PaperExample { x: q(x), y: q(y) };
        for w in [Qpc::triv(), flats[0].clone(), Qpc::ym()] {
            n += 1;
            if !ft::ymsm_residuals(&w, &t, &t, &v, &CAL).map(|r| r.is_zero()).unwrap_or(false) {
                bad.push(format!("({x},{y}) at {w:?}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{n} triplets, failures {bad:?}"))
}

fn c7_alternating() -> Outcome {
    let ym = Qpc::<E>::ym();
    let v = Potential::Polynomial { coeffs: vec![E::zero(), E::one()] };
    let samples = verify::alt_condition_samples();
    let nu = BaseForm::new(1, E::one(), E::zero());
    let good = samples.iter().all(|(t1, t2)| {
        let cond = t1.p[0].clone() * t1.p[1].conj() == t2.p[0].conj() * t2.p[1].clone();
        let reduced = ft::matter_pairing(&ym, &nu, t1, t2, &CAL).is_zero();
        let lap = Side::BOTH
            .iter()
            .all(|&s| qvb::laplacian(&ym, t1, s, &CAL) == *t1 && qvb::laplacian(&ym, t2, s, &CAL) == *t2);
        let solves = ft::ymsm_residuals(&ym, t1, t2, &v, &CAL).map(|r| r.is_zero()).unwrap_or(false);
        cond && reduced && lap && solves
    });
    let t1 = Section::new(CorepKind::Alternating, q("1"), q("2"));
    let t2 = Section::new(CorepKind::Alternating, q("1"), q("1"));
    let violating_fails = !ft::ymsm_residuals(&ym, &t1, &t2, &v, &CAL).map(|r| r.is_zero()).unwrap_or(true);
    outcome(
        good && violating_fails,
        format!("{} samples satisfy reduction, Laplacians and equations: {good}; violating sample fails: {violating_fails}", samples.len()),
    )
}

fn c8_continuity() -> Outcome {
    let mut rng = sample::rng(8);
    let qs: Vec<Qpc<E>> = [Qpc::triv(), Qpc::ym()]
        .into_iter()
        .chain((0..10).map(|_| sample::qpc(&mut rng)))
        .collect();
    let bad = qs.iter().filter(|w| !ft::continuity_check(w, &CAL)).count();
    outcome(bad == 0, format!("{} connections, both sides, {bad} failures", qs.len()))
}

fn c9_gauge() -> Outcome {
    let sigma = GaugeMap::<E>::sigma();
    let in_gg = gg::in_gg_ym(&sigma, &CAL);
    let crit: Vec<Qpc<E>> = [Qpc::ym()].into_iter().chain(verify::sample_flat_points()).collect();
    let fixed = crit.iter().all(|w| {
        [GaugeMap::unit(), sigma.clone()]
            .iter()
            .all(|f| gg::gauge_action_qpc(f, w, &CAL).as_ref() == Ok(w))
    });
    let cases = verify::phase_invariance_cases(2);
    let phase = cases.iter().all(|(case, c)| verify::phase_invariant(case, c, &CAL));
    outcome(
        in_gg && fixed && phase,
        format!("f_σ ∈ GG_YM: {in_gg}; orbits of ω_YM and 10 flat points trivial: {fixed}; L_YMSM invariant on {} cases: {phase}", cases.len()),
    )
}

fn c10_calibration() -> Outcome {
    let passing: Vec<Calibration> = verify::select_calibration()
        .into_iter()
        .filter(|r| r.passed)
        .map(|r| r.calibration)
        .collect();
    let unique = passing == vec![CAL];
    let base_ok = replicate::replicate(&CAL).passed;
    let broken: Vec<String> = Flag::ALL
        .iter()
        .filter(|&&f| {
            let r = replicate::replicate(&CAL.flip(f));
            !r.passed
        })
        .map(|f| f.to_string())
        .collect();
    let curv = !replicate::replicate(&CAL.flip(Flag::ProductFactor))
        .claims
        .iter()
        .any(|c| c.id == "curvature-ym" && c.passed);
    outcome(
        unique && base_ok && broken.len() == Flag::ALL.len() && curv,
        format!(
            "{} of {} combinations pass the gate; replicate passes when selected: {base_ok}; flips breaking a claim: {broken:?}",
            passing.len(),
            Calibration::all().len()
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("calculus laws", c1_calculus),
        ("printed base values", c2_printed_values),
        ("curvature", c3_curvature),
        ("Yang-Mills solutions", c4_yang_mills),
        ("solver", c5_solver),
        ("trivial corep matter", c6_trivial_matter),
        ("alternating corep at ω_YM", c7_alternating),
        ("continuity", c8_continuity),
        ("gauge", c9_gauge),
        ("calibration uniqueness", c10_calibration),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2}. {name}: {} ({:.2} s)", i + 1, o.detail, t.elapsed().as_secs_f64());
        if !o.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
