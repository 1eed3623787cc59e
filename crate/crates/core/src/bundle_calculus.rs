//! The trivial bundle `M⊗G` over the two-point space, its calculus
//! `Ω•(M)⊗̂Γ^∧`, connections, curvature and the covariant derivative.
//!
//! Total forms are [`Tensor`]s of shape `[Base, Group]`. Horizontal forms
//! are those whose group leg has degree 0.

use serde::{Deserialize, Serialize};

use crate::algebra::{Basis, Factor, Kind, Tensor};
use crate::base_calculus::{self as base, BaseForm};
use crate::calibration::{Calibration, ConnectionSide};
use crate::error::{Error, Result};
use crate::group_hopf::{self as grp, GroupForm, GrpElt};
use crate::scalar::Scalar;

pub type TotalForm<S> = Tensor<S>;

pub fn total_kinds() -> Vec<Kind> {
    vec![Kind::Base, Kind::Group]
}

pub fn total<S: Scalar>(a: &BaseForm<S>, theta: &GroupForm<S>) -> TotalForm<S> {
    Tensor::from_factors(&[Factor::Base(a.clone()), Factor::Group(theta.clone())])
}

/// `a⊗g` with `g ∈ G`.
pub fn horizontal<S: Scalar>(a: &BaseForm<S>, g: &GrpElt<S>) -> TotalForm<S> {
    total(a, &g.to_form())
}

/// `𝟙⊗θ`.
pub fn vertical<S: Scalar>(theta: &GroupForm<S>) -> TotalForm<S> {
    total(&BaseForm::one(), theta)
}

pub fn is_horizontal<S: Scalar>(t: &TotalForm<S>) -> bool {
    let noise = S::ROUNDOFF * (1.0 + t.max_abs());
    t.terms()
        .all(|(k, v)| k[1].degree == 0 || v.abs_sq_f64().sqrt() <= noise)
}

/// Recover `η` from `t = η⊗g`, where `η` has degree `degree`.
pub fn strip<S: Scalar>(t: &TotalForm<S>, g: &GrpElt<S>, degree: u8) -> Result<BaseForm<S>> {
    if !is_horizontal(t) {
        return Err(Error::NonHorizontal);
    }
    if degree > 2 {
        return if t.is_zero() {
            Ok(BaseForm::zero(degree))
        } else {
            Err(Error::DegreeOverflow(degree))
        };
    }
    let x = (0..2)
        .find(|&x| !g.c[x].is_zero())
        .ok_or_else(|| Error::NotAlongBasis("zero group element".into()))?;
    let inv = g.c[x].inv().ok_or(Error::DivisionByZero)?;
    let mut eta = BaseForm::zero(degree);
    for idx in 0..2 {
        let key = [Basis::new(degree, idx as u8), Basis::new(0, x as u8)];
        eta.c[idx] = t.coefficient(&key) * inv.clone();
    }
    let back = horizontal(&eta, g);
    if back != *t && back.sub(t).max_abs() > S::ROUNDOFF * (1.0 + t.max_abs()) {
        return Err(Error::NotAlongBasis(format!("{t:?}")));
    }
    Ok(eta)
}

/// `Ψ = id⊗φ̂`, shape `[Base, Group, Group]`.
pub fn psi<S: Scalar>(t: &TotalForm<S>, cal: &Calibration) -> Tensor<S> {
    t.map_slot(1, |b| {
        grp::coproduct_hat(&GroupForm::basis(b.degree, b.idx as usize), cal)
    })
}

/// Quantum principal connection, `ω(ς) = μ⊗𝟙 + 𝟙⊗ς` with `μ = [λ₀, λ₁]₁`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Qpc<S> {
    pub lambda0: S,
    pub lambda1: S,
}

impl<S: Scalar> Qpc<S> {
    pub fn new(lambda0: S, lambda1: S) -> Self {
        Qpc { lambda0, lambda1 }
    }

    pub fn triv() -> Self {
        Self::new(S::zero(), S::zero())
    }

    /// `μ = [i/2, i/2]₁`.
    pub fn ym() -> Self {
        let h = S::ratio(1, 2) * S::i();
        Self::new(h.clone(), h)
    }

    pub fn from_mu(mu: &BaseForm<S>) -> Self {
        assert_eq!(mu.degree, 1);
        Self::new(mu.c[0].clone(), mu.c[1].clone())
    }

    pub fn mu(&self) -> BaseForm<S> {
        BaseForm::new(1, self.lambda0.clone(), self.lambda1.clone())
    }

    /// `u = −(λ₀+λ₁) − 2iλ₀λ₁`.
    pub fn u(&self) -> S {
        let two_i = S::i().scale_int(2);
        -(self.lambda0.clone() + self.lambda1.clone())
            - two_i * self.lambda0.clone() * self.lambda1.clone()
    }

    /// `μ* = −μ`, i.e. `λ₀* = −λ₁`.
    pub fn is_hermitian(&self) -> bool {
        self.lambda0.conj() == -self.lambda1.clone()
    }

    pub fn to_vec(&self) -> Vec<S> {
        vec![self.lambda0.clone(), self.lambda1.clone()]
    }
}

/// `ω(ς)`.
pub fn connection_form<S: Scalar>(omega: &Qpc<S>) -> TotalForm<S> {
    horizontal(&omega.mu(), &GrpElt::unit()).add(&vertical(&grp::sigma()))
}

/// `ω(θ)` for `θ ∈ span{ς}`.
pub fn connection_on<S: Scalar>(omega: &Qpc<S>, theta: &GroupForm<S>) -> Result<TotalForm<S>> {
    let c = grp::sigma_coefficient(theta)
        .ok_or_else(|| Error::Invalid("connection evaluated off span{ς}".into()))?;
    Ok(connection_form(omega).scale(&c))
}

/// `R^ω(ς) = dμ − 2μμ`.
pub fn curvature<S: Scalar>(omega: &Qpc<S>, cal: &Calibration) -> BaseForm<S> {
    let mu = omega.mu();
    base::d(&mu) - base::mul(&mu, &mu, cal).scale(&S::ratio(2, 1))
}

/// `[u, u]₂`.
pub fn curvature_closed_form<S: Scalar>(omega: &Qpc<S>) -> BaseForm<S> {
    let u = omega.u();
    BaseForm::new(2, u.clone(), u)
}

fn sign<S: Scalar>(odd: bool) -> S {
    if odd {
        -S::one()
    } else {
        S::one()
    }
}

/// Covariant derivative on horizontal forms. With the right reading,
/// `D(η⊗g) = d(η⊗g) − (−1)^{|η|}(η⊗g⁽¹⁾)·ω(π(g⁽²⁾))`.
pub fn cov_deriv<S: Scalar>(omega: &Qpc<S>, h: &TotalForm<S>, cal: &Calibration) -> Result<TotalForm<S>> {
    if h.kinds() != total_kinds().as_slice() || !is_horizontal(h) {
        return Err(Error::NonHorizontal);
    }
    let w = connection_form(omega);
    let mut out = h.d();
    for (key, coeff) in h.terms() {
        let eta = BaseForm::basis(key[0].degree, key[0].idx as usize).scale(coeff);
        let x = key[1].idx as usize;
        for a in 0..2 {
            // φ(Δ_x) = Σ_{a+b ≡ x} Δ_a⊗Δ_b
            let b = (x + a) % 2;
            let c = grp::sigma_coefficient(&grp::germs(&GrpElt::<S>::delta(b)))
                .expect("germs lie in span{ς}");
            let leg = horizontal(&eta, &GrpElt::delta(a));
            let term = match cal.connection_side {
                ConnectionSide::Right => leg
                    .mul(&w, cal)
                    .scale(&(-sign::<S>(eta.degree % 2 == 1) * c)),
                ConnectionSide::Left => w.mul(&leg, cal).scale(&c),
            };
            out = out.add(&term);
        }
    }
    assert!(is_horizontal(&out), "vertical legs of D^ω failed to cancel");
    Ok(out)
}

/// `S^ω(τ)(ς) = 2(ω(ς)τ(ς) − (−1)^k τ(ς)ω(ς))` for `τ(ς) = ν⊗𝟙`,
/// returned as the base component.
pub fn s_operator<S: Scalar>(omega: &Qpc<S>, nu: &BaseForm<S>, cal: &Calibration) -> BaseForm<S> {
    let w = connection_form(omega);
    let tau = horizontal(nu, &GrpElt::unit());
    let k = nu.degree;
    let out = w
        .mul(&tau, cal)
        .sub(&tau.mul(&w, cal).scale(&sign(k % 2 == 1)))
        .scale(&S::ratio(2, 1));
    assert!(is_horizontal(&out), "ς-legs of S^ω failed to cancel");
    strip(&out, &GrpElt::unit(), k + 1).expect("S^ω output lies along 𝟙")
}

/// `2(μν − (−1)^k νμ)`.
pub fn s_operator_closed_form<S: Scalar>(omega: &Qpc<S>, nu: &BaseForm<S>, cal: &Calibration) -> BaseForm<S> {
    let mu = omega.mu();
    let k = nu.degree;
    if k + 1 > 2 {
        return BaseForm::zero(k + 1);
    }
    (base::mul(&mu, nu, cal) - base::mul(nu, &mu, cal).scale(&sign(k % 2 == 1))).scale(&S::ratio(2, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactC;

    type E = ExactC;
    const CAL: Calibration = Calibration::SELECTED;

    fn q(s: &str) -> E {
        s.parse().unwrap()
    }

    fn f(deg: u8, a: &str, b: &str) -> BaseForm<E> {
        BaseForm::new(deg, q(a), q(b))
    }

    #[test]
    fn curvature_values() {
        assert!(curvature(&Qpc::<E>::triv(), &CAL).is_zero());
        assert_eq!(curvature(&Qpc::<E>::ym(), &CAL), f(2, "-1/2i", "-1/2i"));
        assert_eq!(curvature(&Qpc::new(q("1"), q("0")), &CAL), f(2, "-1", "-1"));
        let w = Qpc::new(q("2/3-i"), q("1/5+3i"));
        assert_eq!(curvature(&w, &CAL), curvature_closed_form(&w));
    }

    #[test]
    fn graded_sign_between_legs() {
        let nu = f(1, "1", "2");
        let lhs = vertical(&grp::sigma()).mul(&horizontal(&nu, &GrpElt::unit()), &CAL);
        assert_eq!(lhs, total(&nu, &grp::sigma()).scale(&q("-1")));
    }

    #[test]
    fn psi_on_horizontal_is_id_tensor_phi() {
        let eta = f(1, "1", "-3");
        let t = horizontal(&eta, &GrpElt::delta(1));
        let expect = Tensor::from_factors(&[
            Factor::Base(eta.clone()),
            Factor::Group(GrpElt::delta(0).to_form()),
            Factor::Group(GrpElt::delta(1).to_form()),
        ])
        .add(&Tensor::from_factors(&[
            Factor::Base(eta),
            Factor::Group(GrpElt::delta(1).to_form()),
            Factor::Group(GrpElt::delta(0).to_form()),
        ]));
        assert_eq!(psi(&t, &CAL), expect);
    }

    #[test]
    fn psi_of_vertical_part_is_equivariant() {
        // Ψ(𝟙⊗ς) − (𝟙⊗ς)⊗𝟙 = 𝟙⊗𝟙⊗ς
        let v = vertical(&grp::sigma::<E>());
        let diff = psi(&v, &CAL).sub(&v.tensor(&Tensor::from_factors(&[Factor::Group(
            GrpElt::unit().to_form(),
        )])));
        assert!(diff.terms().all(|(k, _)| k[1].degree == 0));
        assert_eq!(diff, vertical(&GrpElt::unit().to_form()).tensor(&Tensor::from_factors(&[Factor::Group(grp::sigma())])));
    }

    #[test]
    fn covariant_derivative_on_alternating_elements() {
        let w = Qpc::new(q("1/2-i"), q("3"));
        let mu = w.mu();
        let p = f(0, "2", "-1/3");
        let got = cov_deriv(&w, &horizontal(&p, &GrpElt::alt()), &CAL).unwrap();
        let want = base::d(&p) + base::mul(&p, &mu, &CAL).scale(&q("2"));
        assert_eq!(got, horizontal(&want, &GrpElt::alt()));

        let eta = f(1, "i", "1");
        let got = cov_deriv(&w, &horizontal(&eta, &GrpElt::alt()), &CAL).unwrap();
        let want = base::d(&eta) - base::mul(&eta, &mu, &CAL).scale(&q("2"));
        assert_eq!(got, horizontal(&want, &GrpElt::alt()));
    }

    #[test]
    fn covariant_derivative_is_d_on_trivial_elements() {
        let w = Qpc::new(q("1+i"), q("-2"));
        let p = f(0, "5", "7");
        let got = cov_deriv(&w, &horizontal(&p, &GrpElt::unit()), &CAL).unwrap();
        assert_eq!(got, horizontal(&base::d(&p), &GrpElt::unit()));
    }

    #[test]
    fn covariant_derivative_rejects_vertical_input() {
        let v = vertical(&grp::sigma::<E>());
        assert_eq!(cov_deriv(&Qpc::ym(), &v, &CAL).unwrap_err(), Error::NonHorizontal);
    }

    #[test]
    fn s_operator_values() {
        let w = Qpc::<E>::ym();
        let mu = w.mu();
        assert_eq!(s_operator(&w, &mu, &CAL), f(2, "-i", "-i"));
        assert!(s_operator(&w, &BaseForm::one(), &CAL).is_zero());
        let v = f(2, "1", "2");
        let out = s_operator(&w, &v, &CAL);
        assert!(out.is_zero() && out.degree == 3);
        let w = Qpc::new(q("1/3"), q("2-i"));
        for nu in [f(0, "1", "i"), f(1, "2", "-1"), f(1, "i", "0")] {
            assert_eq!(s_operator(&w, &nu, &CAL), s_operator_closed_form(&w, &nu, &CAL));
        }
    }

    #[test]
    fn strip_detects_misaligned_elements() {
        let t = horizontal(&f(0, "1", "2"), &GrpElt::delta(1));
        assert!(strip(&t, &GrpElt::unit(), 0).is_err());
        assert_eq!(strip(&t, &GrpElt::delta(1), 0).unwrap(), f(0, "1", "2"));
    }

    #[test]
    fn qpc_serializes_by_field_name() {
        let w = Qpc::<E>::ym();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"lambda0":"1/2 i","lambda1":"1/2 i"}"#);
        let back: Qpc<E> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }
}
