//! Associated line bundles `Mor(α,Φ)` for the two one-dimensional
//! corepresentations of `S₂`.
//!
//! A section is `T = p·T_basis` with `T_basis(1) = 𝟙⊗v₁₁`; since the basis
//! section is central, left and right sections share this representation.
//! Bundle-valued forms are stored as their base component against
//! `T_basis`. Left forms live in `Ω^k(M)⊗_M Mor`, right forms in
//! `Mor⊗_M Ω^k(M)`.

use serde::{Deserialize, Serialize};

use crate::algebra::Tensor;
use crate::base_calculus::{self as base, BaseForm, Side};
use crate::bundle_calculus::{self as bundle, Qpc, TotalForm};
use crate::calibration::Calibration;
use crate::error::{Error, Result};
use crate::group_hopf::{self as grp, Corep, CorepKind, GrpElt};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `T = p·T_basis`; serializes as `{"corep": name, "p": [p0, p1]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section<S> {
    pub corep: CorepKind,
    pub p: [S; 2],
}

impl<S: Scalar> Section<S> {
    pub fn new(corep: CorepKind, p0: S, p1: S) -> Self {
        Section { corep, p: [p0, p1] }
    }

    pub fn from_form(corep: CorepKind, p: &BaseForm<S>) -> Self {
        assert_eq!(p.degree, 0, "section components are functions");
        Section {
            corep,
            p: p.c.clone(),
        }
    }

    pub fn basis(corep: CorepKind) -> Self {
        Self::new(corep, S::one(), S::one())
    }

    pub fn zero(corep: CorepKind) -> Self {
        Self::new(corep, S::zero(), S::zero())
    }

    pub fn form(&self) -> BaseForm<S> {
        BaseForm::new(0, self.p[0].clone(), self.p[1].clone())
    }

    /// `T(1) ∈ M⊗G`.
    pub fn element(&self) -> TotalForm<S> {
        bundle::horizontal(&self.form(), &self.corep.coefficient())
    }

    pub fn is_zero(&self) -> bool {
        self.p.iter().all(|x| x.is_zero())
    }
}

/// Bundle-valued `k`-form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VForm<S> {
    pub corep: CorepKind,
    pub side: Side,
    pub comp: BaseForm<S>,
}

impl<S: Scalar> VForm<S> {
    pub fn new(corep: CorepKind, side: Side, comp: BaseForm<S>) -> Self {
        VForm { corep, side, comp }
    }

    pub fn degree(&self) -> u8 {
        self.comp.degree
    }

    pub fn element(&self) -> TotalForm<S> {
        bundle::horizontal(&self.comp, &self.corep.coefficient())
    }
}

/// `ad`-valued forms: `τ(ς) = comp⊗𝟙`.
pub type AdForm<S> = BaseForm<S>;

/// `(∗∘τ∘∗)(ς) = (τ(ς*))*`. Since `ς* = −ς`, this is `−comp*`.
pub fn hat_ad<S: Scalar>(tau: &AdForm<S>) -> AdForm<S> {
    let c = grp::sigma_coefficient(&grp::star_group(&grp::sigma::<S>()))
        .expect("ς* ∈ span{ς}");
    base::star(tau).scale(&c.conj())
}

/// `Φ(T(e_k)) = Σ_j T(e_j)⊗v_jk` on a basis of `V^α`.
pub fn mor_check<S: Scalar>(images: &[TotalForm<S>], alpha: &Corep<S>, cal: &Calibration) -> Result<bool> {
    if images.len() != alpha.dim() {
        return Err(Error::Invalid(format!(
            "morphism has {} images, corepresentation has dimension {}",
            images.len(),
            alpha.dim()
        )));
    }
    for (k, img) in images.iter().enumerate() {
        if !bundle::is_horizontal(img) || img.degree().is_some_and(|d| d != 0) {
            return Ok(false);
        }
        let lhs = bundle::psi(img, cal);
        let mut rhs = Tensor::zero(lhs.kinds().to_vec());
        for (j, img_j) in images.iter().enumerate() {
            let v = Tensor::from_factors(&[crate::algebra::Factor::Group(alpha.matrix[j][k].to_form())]);
            rhs = rhs.add(&img_j.tensor(&v));
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_same(a: CorepKind, b: CorepKind) -> Result<()> {
    if a != b {
        return Err(Error::CorepMismatch(a.to_string(), b.to_string()));
    }
    Ok(())
}

/// `⟨T1,T2⟩_l = T1(1)T2(1)*` and `⟨T1,T2⟩_r = T1(1)*T2(1)`.
pub fn section_herm<S: Scalar>(t1: &Section<S>, t2: &Section<S>, side: Side, cal: &Calibration) -> Result<BaseForm<S>> {
    check_same(t1.corep, t2.corep)?;
    let (a, b) = (t1.element(), t2.element());
    let prod = match side {
        Side::Left => a.mul(&b.star(cal), cal),
        Side::Right => a.star(cal).mul(&b, cal),
    };
    bundle::strip(&prod, &GrpElt::unit(), 0)
}

/// `⟨η⊗T, η'⊗T'⟩ := ⟨η·⟨T,T'⟩, η'⟩` integrated against `dvol`.
pub fn vform_inner<S: Scalar>(a: &VForm<S>, b: &VForm<S>, cal: &Calibration) -> Result<S> {
    check_same(a.corep, b.corep)?;
    if a.side != b.side {
        return Err(Error::Invalid("pairing a left form with a right form".into()));
    }
    let basis = Section::<S>::basis(a.corep);
    let h = section_herm(&basis, &basis, a.side, cal)?;
    let weighted = match a.side {
        Side::Left => base::mul(&a.comp, &h, cal),
        Side::Right => base::mul(&h, &a.comp, cal),
    };
    base::inner(&weighted, &b.comp, a.side, cal)
}

fn strip_along<S: Scalar>(t: &TotalForm<S>, corep: CorepKind, degree: u8) -> BaseForm<S> {
    bundle::strip(t, &corep.coefficient(), degree).expect("covariant derivative stays in the line bundle")
}

/// `∇^ω T = Υ∘D^ω(T)`.
pub fn nabla<S: Scalar>(omega: &Qpc<S>, t: &Section<S>, cal: &Calibration) -> VForm<S> {
    let dt = bundle::cov_deriv(omega, &t.element(), cal).expect("sections are horizontal");
    VForm::new(t.corep, Side::Left, strip_along(&dt, t.corep, 1))
}

/// `∇̂^ω T = Υ̂∘∗∘D^ω∘∗(T)`.
pub fn nabla_hat<S: Scalar>(omega: &Qpc<S>, t: &Section<S>, cal: &Calibration) -> VForm<S> {
    let x = t.element().star(cal);
    let dt = bundle::cov_deriv(omega, &x, cal).expect("sections are horizontal").star(cal);
    VForm::new(t.corep, Side::Right, strip_along(&dt, t.corep, 1))
}

/// Exterior covariant derivative on the side of `psi`.
pub fn ext_cov_deriv<S: Scalar>(omega: &Qpc<S>, psi: &VForm<S>, cal: &Calibration) -> Result<VForm<S>> {
    let k = psi.degree();
    if k >= 2 {
        return Err(Error::DegreeOverflow(k + 1));
    }
    let out = match psi.side {
        Side::Left => bundle::cov_deriv(omega, &psi.element(), cal)?,
        Side::Right => bundle::cov_deriv(omega, &psi.element().star(cal), cal)?.star(cal),
    };
    Ok(VForm::new(psi.corep, psi.side, strip_along(&out, psi.corep, k + 1)))
}

/// Gram matrix of [`vform_inner`] on the component basis of degree `k`.
pub fn vform_gram<S: Scalar>(corep: CorepKind, side: Side, k: u8, cal: &Calibration) -> Matrix<S> {
    let basis = BaseForm::<S>::basis_of_degree(k);
    Matrix::from_fn(2, 2, |a, b| {
        let x = VForm::new(corep, side, basis[a].clone());
        let y = VForm::new(corep, side, basis[b].clone());
        vform_inner(&x, &y, cal).expect("same corep and side")
    })
}

/// Matrix of `d^∇` from degree `k` to `k+1`.
pub fn ext_cov_matrix<S: Scalar>(omega: &Qpc<S>, corep: CorepKind, side: Side, k: u8, cal: &Calibration) -> Matrix<S> {
    base::operator_matrix(k, |e| {
        ext_cov_deriv(omega, &VForm::new(corep, side, e.clone()), cal)
            .expect("k ≤ 1")
            .comp
    })
}

/// Adjoint of `d^∇` with respect to the extended inner products, computed
/// from Gram matrices.
pub fn adjoint_ext_cov<S: Scalar>(omega: &Qpc<S>, psi: &VForm<S>, cal: &Calibration) -> Result<VForm<S>> {
    let k = psi.degree();
    if k == 0 || k > 2 {
        return Err(Error::NoAdjoint(k));
    }
    let a = ext_cov_matrix(omega, psi.corep, psi.side, k - 1, cal);
    let g_src = vform_gram(psi.corep, psi.side, k - 1, cal);
    let g_tgt = vform_gram(psi.corep, psi.side, k, cal);
    let b = base::adjoint_matrix(&a, &g_src, &g_tgt, psi.side)?;
    let comp = BaseForm::from_slice(k - 1, &b.apply(&psi.comp.to_vec()));
    Ok(VForm::new(psi.corep, psi.side, comp))
}

/// The Hodge composite `(−1)^{k+1} ⋆⁻¹∘d^∇∘⋆` on the side of `psi`.
pub fn hodge_adjoint_ext_cov<S: Scalar>(omega: &Qpc<S>, psi: &VForm<S>, cal: &Calibration) -> Result<VForm<S>> {
    let k = psi.degree();
    if k == 0 || k > 2 {
        return Err(Error::NoAdjoint(k));
    }
    let starred = VForm::new(psi.corep, psi.side, base::hodge(&psi.comp, psi.side, cal));
    let d = ext_cov_deriv(omega, &starred, cal)?;
    let sign = if (k + 1) % 2 == 1 { -S::one() } else { S::one() };
    let comp = base::hodge_inv(&d.comp, psi.side, cal).scale(&sign);
    Ok(VForm::new(psi.corep, psi.side, comp))
}

fn first_order<S: Scalar>(omega: &Qpc<S>, t: &Section<S>, side: Side, cal: &Calibration) -> VForm<S> {
    match side {
        Side::Left => nabla(omega, t, cal),
        Side::Right => nabla_hat(omega, t, cal),
    }
}

/// `∇^⋆∇T` (left) or `∇̂^⋆∇̂T` (right), adjoint taken via Gram matrices.
pub fn laplacian<S: Scalar>(omega: &Qpc<S>, t: &Section<S>, side: Side, cal: &Calibration) -> Section<S> {
    let grad = first_order(omega, t, side, cal);
    let out = adjoint_ext_cov(omega, &grad, cal).expect("degree 1");
    Section::from_form(t.corep, &out.comp)
}

/// Same as [`laplacian`] with the Hodge composite as adjoint.
pub fn laplacian_hodge<S: Scalar>(omega: &Qpc<S>, t: &Section<S>, side: Side, cal: &Calibration) -> Section<S> {
    let grad = first_order(omega, t, side, cal);
    let out = hodge_adjoint_ext_cov(omega, &grad, cal).expect("degree 1");
    Section::from_form(t.corep, &out.comp)
}

/// `K^λ(T) = −T⁽⁰⁾λ(π(T⁽¹⁾))` with `λ(ς) = ν⊗𝟙`. For a 1-dimensional
/// corepresentation `Φ(T(1)) = T(1)⊗v₁₁`, so `T⁽¹⁾ = v₁₁`. The right
/// version is `∗∘K^λ∘∗`.
pub fn k_lambda<S: Scalar>(nu: &AdForm<S>, t: &Section<S>, side: Side, cal: &Calibration) -> VForm<S> {
    let v = t.corep.coefficient::<S>();
    let c = grp::sigma_coefficient(&grp::germs(&v)).expect("germs lie in span{ς}");
    let lam = bundle::horizontal(nu, &GrpElt::unit()).scale(&c);
    let k = |x: &TotalForm<S>| x.mul(&lam, cal).scale(&-S::one());
    let out = match side {
        Side::Left => k(&t.element()),
        Side::Right => k(&t.element().star(cal)).star(cal),
    };
    VForm::new(t.corep, side, strip_along(&out, t.corep, nu.degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_hopf::corep_catalog;
    use crate::scalar::ExactC;

    type E = ExactC;
    const CAL: Calibration = Calibration::SELECTED;
    const ALT: CorepKind = CorepKind::Alternating;
    const TRIV: CorepKind = CorepKind::Trivial;

    fn q(s: &str) -> E {
        s.parse().unwrap()
    }

    fn f(deg: u8, a: &str, b: &str) -> BaseForm<E> {
        BaseForm::new(deg, q(a), q(b))
    }

    fn sec(kind: CorepKind, a: &str, b: &str) -> Section<E> {
        Section::new(kind, q(a), q(b))
    }

    #[test]
    fn morphism_check() {
        let triv = corep_catalog::<E>("trivial").unwrap();
        let alt = corep_catalog::<E>("alternating").unwrap();
        let diag = bundle::horizontal(&f(0, "2", "1"), &GrpElt::unit());
        assert!(mor_check(&[diag], &triv, &CAL).unwrap());
        let t_alt = bundle::horizontal(&BaseForm::one(), &GrpElt::alt());
        assert!(mor_check(&[t_alt], &alt, &CAL).unwrap());
        let bad = bundle::horizontal(&BaseForm::one(), &GrpElt::delta(1));
        assert!(!mor_check(std::slice::from_ref(&bad), &triv, &CAL).unwrap());
        assert!(mor_check(&[bad.clone(), bad], &triv, &CAL).is_err());
    }

    #[test]
    fn hermitian_structure_of_sections() {
        let t = sec(TRIV, "2+i", "-3");
        assert_eq!(section_herm(&t, &t, Side::Left, &CAL).unwrap(), f(0, "5", "9"));
        let b = Section::<E>::basis(ALT);
        assert_eq!(section_herm(&b, &b, Side::Left, &CAL).unwrap(), BaseForm::one());
        assert_eq!(section_herm(&b, &b, Side::Right, &CAL).unwrap(), BaseForm::one());
        assert!(section_herm(&Section::zero(TRIV), &t, Side::Left, &CAL).unwrap().is_zero());
        assert!(section_herm(&b, &t, Side::Left, &CAL).is_err());
    }

    #[test]
    fn induced_connections() {
        let w = Qpc::new(q("1-i"), q("1/2"));
        let mu = w.mu();
        let t = sec(TRIV, "3", "5");
        assert_eq!(nabla(&Qpc::triv(), &t, &CAL).comp, base::d(&t.form()));
        assert_eq!(nabla(&w, &t, &CAL).comp, base::d(&t.form()));
        let t = sec(ALT, "2i", "-1");
        let p = t.form();
        assert_eq!(nabla(&w, &t, &CAL).comp, base::d(&p) + base::mul(&p, &mu, &CAL).scale(&q("2")));
        let hat = base::mul(&base::star(&mu), &p, &CAL).scale(&q("2"));
        assert_eq!(nabla_hat(&w, &t, &CAL).comp, base::d(&p) + hat);
        assert!(nabla(&w, &Section::zero(ALT), &CAL).comp.is_zero());
    }

    #[test]
    fn exterior_derivative_on_one_forms() {
        let w = Qpc::new(q("i"), q("2"));
        let eta = f(1, "1", "i");
        let psi = VForm::new(ALT, Side::Left, eta.clone());
        let want = base::d(&eta) - base::mul(&eta, &w.mu(), &CAL).scale(&q("2"));
        assert_eq!(ext_cov_deriv(&w, &psi, &CAL).unwrap().comp, want);
        let psi = VForm::new(ALT, Side::Right, eta.clone());
        let want = base::d(&eta) + base::mul(&base::star(&w.mu()), &eta, &CAL).scale(&q("2"));
        assert_eq!(ext_cov_deriv(&w, &psi, &CAL).unwrap().comp, want);
        let two = VForm::new(ALT, Side::Left, f(2, "1", "1"));
        assert_eq!(ext_cov_deriv(&w, &two, &CAL).unwrap_err(), Error::DegreeOverflow(3));
    }

    #[test]
    fn trivial_laplacian() {
        let w = Qpc::new(q("1/3"), q("-i"));
        let t = sec(TRIV, "3", "1/2");
        let want = sec(TRIV, "5", "-5");
        for side in Side::BOTH {
            assert_eq!(laplacian(&w, &t, side, &CAL), want);
            assert_eq!(laplacian_hodge(&w, &t, side, &CAL), want);
        }
        assert!(laplacian(&w, &sec(TRIV, "7", "7"), Side::Left, &CAL).is_zero());
    }

    #[test]
    fn alternating_laplacian_at_the_ym_connection_is_the_identity() {
        let w = Qpc::<E>::ym();
        for t in [sec(ALT, "1", "0"), sec(ALT, "0", "1"), sec(ALT, "2-i", "1/3")] {
            for side in Side::BOTH {
                assert_eq!(laplacian(&w, &t, side, &CAL), t);
                assert_eq!(laplacian_hodge(&w, &t, side, &CAL), t);
            }
        }
        let t = sec(ALT, "1", "-1");
        assert_eq!(laplacian(&Qpc::triv(), &t, Side::Left, &CAL), sec(ALT, "4", "-4"));
    }

    #[test]
    fn k_lambda_values() {
        let nu = f(1, "1", "-2i");
        assert!(k_lambda(&nu, &sec(TRIV, "1", "2"), Side::Left, &CAL).comp.is_zero());
        let b = Section::<E>::basis(ALT);
        assert_eq!(k_lambda(&nu, &b, Side::Left, &CAL).comp, nu.scale(&q("2")));
        let t = sec(ALT, "i", "3");
        let want = base::mul(&base::star(&nu), &t.form(), &CAL).scale(&q("2"));
        assert_eq!(k_lambda(&nu, &t, Side::Right, &CAL).comp, want);
        assert!(k_lambda(&BaseForm::zero(1), &t, Side::Left, &CAL).comp.is_zero());
    }

    #[test]
    fn hat_ad_is_minus_star() {
        let x = f(2, "1+i", "2");
        assert_eq!(hat_ad(&x), -base::star(&x));
        assert_eq!(hat_ad(&hat_ad(&x)), x);
    }

    #[test]
    fn section_json_shape() {
        let t = sec(ALT, "1/2", "i");
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"corep":"alternating","p":["1/2","1 i"]}"#);
        assert_eq!(serde_json::from_str::<Section<E>>(&s).unwrap(), t);
    }
}
