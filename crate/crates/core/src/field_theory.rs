//! Yang–Mills and Yang–Mills–scalar-matter Lagrangians, actions and field
//! equations.
//!
//! `ad`-valued forms are handled through their base component (`τ(ς) = ν⊗𝟙`,
//! with `⟨ς,ς⟩ = 1`). Adjoint operators are finite matrices obtained from Gram
//! matrices of the inner products.

use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};
use serde::Deserialize;

use crate::associated_qvb::{self as qvb, hat_ad, AdForm, Section, VForm};
use crate::base_calculus::{self as base, BaseForm, Side};
use crate::bundle_calculus::{self as bundle, Qpc};
use crate::calibration::Calibration;
use crate::error::{Error, Result};
use crate::group_hopf::CorepKind;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Potential `V: M → M`, acting componentwise on functions.
#[derive(Clone, Debug, PartialEq, serde::Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Potential<S> {
    /// `V(p) = Σ c_k p^k`.
    Polynomial { coeffs: Vec<S> },
    /// Linear potential with constant `V′ = diag(2 − 2y/x, 2 − 2x/y)`.
    PaperExample { x: S, y: S },
}

impl<S: Scalar> Potential<S> {
    pub fn zero() -> Self {
        Potential::Polynomial { coeffs: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Potential::PaperExample { x, y } if x.is_zero() || y.is_zero() => {
                Err(Error::Invalid("paper potential needs x·y ≠ 0".into()))
            }
            _ => Ok(()),
        }
    }

    fn slope(&self) -> [S; 2] {
        match self {
            Potential::PaperExample { x, y } => {
                let two = S::ratio(2, 1);
                let yx = y.clone() * x.inv().expect("validated potential");
                let xy = x.clone() * y.inv().expect("validated potential");
                [two.clone() - two.clone() * yx, two.clone() - two * xy]
            }
            Potential::Polynomial { .. } => unreachable!(),
        }
    }

    pub fn value(&self, p: &BaseForm<S>) -> BaseForm<S> {
        match self {
            Potential::Polynomial { coeffs } => p.map(|z| horner(coeffs, z)),
            Potential::PaperExample { .. } => {
                let [a, b] = self.slope();
                BaseForm::new(0, a * p.c[0].clone(), b * p.c[1].clone())
            }
        }
    }

    pub fn derivative(&self, p: &BaseForm<S>) -> BaseForm<S> {
        match self {
            Potential::Polynomial { coeffs } => {
                let der: Vec<S> = coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| c.scale_int(k as i64))
                    .collect();
                p.map(|z| horner(&der, z))
            }
            Potential::PaperExample { .. } => {
                let [a, b] = self.slope();
                BaseForm::new(0, a, b)
            }
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Potential<T> {
        match self {
            Potential::Polynomial { coeffs } => Potential::Polynomial {
                coeffs: coeffs.iter().map(&f).collect(),
            },
            Potential::PaperExample { x, y } => Potential::PaperExample { x: f(x), y: f(y) },
        }
    }
}

fn horner<S: Scalar>(coeffs: &[S], z: &S) -> S {
    coeffs
        .iter()
        .rev()
        .fold(S::zero(), |acc, c| acc * z.clone() + c.clone())
}

/// Named list of residual components.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual<S> {
    pub components: Vec<(String, S)>,
}

impl<S: Scalar> Residual<S> {
    pub fn new() -> Self {
        Residual { components: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, value: S) {
        self.components.push((name.into(), value));
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|(_, v)| v.is_zero())
    }

    pub fn max_abs(&self) -> f64 {
        self.components
            .iter()
            .map(|(_, v)| v.abs_sq_f64().sqrt())
            .fold(0.0, f64::max)
    }

    pub fn values(&self) -> Vec<S> {
        self.components.iter().map(|(_, v)| v.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&S> {
        self.components.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

impl<S: Scalar> Default for Residual<S> {
    fn default() -> Self {
        Self::new()
    }
}

struct Components<'a, S>(&'a [(String, S)]);

impl<S: Serialize> Serialize for Components<'_, S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl<S: Scalar + Serialize> Serialize for Residual<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let mut st = s.serialize_struct("Residual", 2)?;
        st.serialize_field("components", &Components(&self.components))?;
        st.serialize_field("is_zero", &self.is_zero())?;
        st.end()
    }
}

/// Test directions `λ(ς) = ν⊗𝟙`: the two basis 1-forms and their
/// `i`-multiples.
pub fn lambda_basis<S: Scalar>() -> Vec<(String, AdForm<S>)> {
    let (o, z, i) = (S::one(), S::zero(), S::i());
    vec![
        ("nu=[1,0]".into(), BaseForm::new(1, o.clone(), z.clone())),
        ("nu=[0,1]".into(), BaseForm::new(1, z.clone(), o)),
        ("nu=[i,0]".into(), BaseForm::new(1, i.clone(), z.clone())),
        ("nu=[0,i]".into(), BaseForm::new(1, z, i)),
    ]
}

/// `Ŝ^ω = ∗∘S^ω∘∗` on `ad`-valued forms.
pub fn s_hat<S: Scalar>(omega: &Qpc<S>, x: &AdForm<S>, cal: &Calibration) -> AdForm<S> {
    hat_ad(&bundle::s_operator(omega, &hat_ad(x), cal))
}

/// `d^∇ − S^ω` (left) or `d^∇̂ − Ŝ^ω` (right) on an `ad`-valued form.
pub fn ad_operator<S: Scalar>(omega: &Qpc<S>, x: &AdForm<S>, side: Side, cal: &Calibration) -> AdForm<S> {
    if x.degree >= 2 {
        return BaseForm::zero(x.degree + 1);
    }
    // ad(ς) = ς⊗𝟙 makes the ad bundle trivial, so its d^∇ is the trivial-corep one
    let dx = qvb::ext_cov_deriv(omega, &VForm::new(CorepKind::Trivial, side, x.clone()), cal)
        .expect("degree ≤ 1")
        .comp;
    let s = match side {
        Side::Left => bundle::s_operator(omega, x, cal),
        Side::Right => s_hat(omega, x, cal),
    };
    dx - s
}

/// Matrix of [`ad_operator`] from degree `k` to `k+1`.
pub fn ad_operator_matrix<S: Scalar>(omega: &Qpc<S>, side: Side, k: u8, cal: &Calibration) -> Matrix<S> {
    base::operator_matrix(k, |e| ad_operator(omega, e, side, cal))
}

/// `d^{∇⋆} − d^{S⋆}` from degree `k+1` to `k`.
pub fn ad_adjoint_matrix<S: Scalar>(omega: &Qpc<S>, side: Side, k: u8, cal: &Calibration) -> Matrix<S> {
    let a = ad_operator_matrix(omega, side, k, cal);
    base::adjoint_matrix(&a, &base::gram(k, side, cal), &base::gram(k + 1, side, cal), side)
        .expect("Gram matrices are invertible")
}

fn apply_matrix<S: Scalar>(m: &Matrix<S>, x: &BaseForm<S>, degree: u8) -> BaseForm<S> {
    BaseForm::from_slice(degree, &m.apply(&x.to_vec()))
}

pub fn curvature_hat<S: Scalar>(omega: &Qpc<S>, cal: &Calibration) -> AdForm<S> {
    hat_ad(&bundle::curvature(omega, cal))
}

/// Pointwise `−¼(⟨R,R⟩_l + ⟨R̂,R̂⟩_r)`.
pub fn lagrangian_ym<S: Scalar>(omega: &Qpc<S>, cal: &Calibration) -> BaseForm<S> {
    let r = bundle::curvature(omega, cal);
    let rh = curvature_hat(omega, cal);
    let l = base::herm(&r, &r, Side::Left, cal).expect("same degree");
    let rr = base::herm(&rh, &rh, Side::Right, cal).expect("same degree");
    (l + rr).scale(&S::ratio(-1, 4))
}

/// `−¼(⟨R|R⟩_l + ⟨R̂|R̂⟩_r)`.
pub fn action_ym<S: Scalar>(omega: &Qpc<S>, cal: &Calibration) -> S {
    let r = bundle::curvature(omega, cal);
    let rh = curvature_hat(omega, cal);
    let l = base::inner(&r, &r, Side::Left, cal).expect("same degree");
    let rr = base::inner(&rh, &rh, Side::Right, cal).expect("same degree");
    S::ratio(-1, 4) * (l + rr)
}

/// `∫ f·dvol` for a function `f`.
pub fn integrate_function<S: Scalar>(f: &BaseForm<S>, cal: &Calibration) -> S {
    base::integral(&base::mul(f, &base::dvol(cal), cal), cal).expect("degree 2")
}

/// The Yang–Mills pairing
/// `⟨λ|(d^{∇⋆_l} − d^{S⋆_l})R⟩_l + ⟨∗λ∗|(d^{∇̂⋆_r} − d^{Ŝ⋆_r})R̂⟩_r`
/// over [`lambda_basis`].
pub fn ym_residual<S: Scalar>(omega: &Qpc<S>, cal: &Calibration) -> Residual<S> {
    let r = bundle::curvature(omega, cal);
    let rh = hat_ad(&r);
    let left = apply_matrix(&ad_adjoint_matrix(omega, Side::Left, 1, cal), &r, 1);
    let right = apply_matrix(&ad_adjoint_matrix(omega, Side::Right, 1, cal), &rh, 1);
    let mut out = Residual::new();
    for (name, nu) in lambda_basis::<S>() {
        let a = base::inner(&nu, &left, Side::Left, cal).expect("degree 1");
        let b = base::inner(&hat_ad(&nu), &right, Side::Right, cal).expect("degree 1");
        out.push(name, a + b);
    }
    out
}

fn check_pair<S: Scalar>(t1: &Section<S>, t2: &Section<S>) -> Result<()> {
    // both catalog corepresentations are self-conjugate
    if t1.corep != t2.corep {
        return Err(Error::CorepMismatch(t1.corep.to_string(), t2.corep.to_string()));
    }
    Ok(())
}

fn vform_herm<S: Scalar>(a: &VForm<S>, b: &VForm<S>, cal: &Calibration) -> BaseForm<S> {
    let basis = Section::<S>::basis(a.corep);
    let h = qvb::section_herm(&basis, &basis, a.side, cal).expect("same corep");
    let weighted = match a.side {
        Side::Left => base::mul(&a.comp, &h, cal),
        Side::Right => base::mul(&h, &a.comp, cal),
    };
    base::herm(&weighted, &b.comp, a.side, cal).expect("same degree")
}

/// Pointwise Yang–Mills–scalar-matter Lagrangian. `t1` is a left section of
/// `α`, `t2` a right section of the conjugate corepresentation.
pub fn lagrangian_ymsm<S: Scalar>(
    omega: &Qpc<S>,
    t1: &Section<S>,
    t2: &Section<S>,
    v: &Potential<S>,
    cal: &Calibration,
) -> Result<BaseForm<S>> {
    check_pair(t1, t2)?;
    v.validate()?;
    let g1 = qvb::nabla(omega, t1, cal);
    let g2 = qvb::nabla_hat(omega, t2, cal);
    let kin1 = vform_herm(&g1, &g1, cal);
    let kin2 = vform_herm(&g2, &g2, cal);
    let v1 = v.value(&qvb::section_herm(t1, t1, Side::Left, cal)?);
    let v2 = v.value(&qvb::section_herm(t2, t2, Side::Right, cal)?);
    let matter = (kin1 - v1 - kin2 + v2).scale(&S::ratio(1, 4));
    Ok(lagrangian_ym(omega, cal) + matter)
}

pub fn action_ymsm<S: Scalar>(
    omega: &Qpc<S>,
    t1: &Section<S>,
    t2: &Section<S>,
    v: &Potential<S>,
    cal: &Calibration,
) -> Result<S> {
    Ok(integrate_function(&lagrangian_ymsm(omega, t1, t2, v, cal)?, cal))
}

#[derive(Clone, Debug, PartialEq)]
pub struct YmsmResiduals<S> {
    /// Left side minus right side of the connection equation, over the λ-basis.
    pub connection: Residual<S>,
    /// Real parts of `connection`.
    pub connection_real: Residual<S>,
    /// `∇^⋆∇T₁ − V′_l(T₁)*T₁`.
    pub matter_left: Residual<S>,
    /// `∇̂^⋆∇̂T₂ − T₂V′_r(T₂)*`.
    pub matter_right: Residual<S>,
}

impl<S: Scalar> YmsmResiduals<S> {
    /// Residuals entering the critical-point condition.
    pub fn all(&self) -> [&Residual<S>; 3] {
        [&self.connection, &self.matter_left, &self.matter_right]
    }

    pub fn is_zero(&self) -> bool {
        self.all().iter().all(|r| r.is_zero())
    }

    pub fn max_abs(&self) -> f64 {
        self.all().iter().map(|r| r.max_abs()).fold(0.0, f64::max)
    }
}

impl<S: Scalar + Serialize> Serialize for YmsmResiduals<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let mut st = s.serialize_struct("YmsmResiduals", 4)?;
        st.serialize_field("connection", &self.connection)?;
        st.serialize_field("connection_real", &self.connection_real)?;
        st.serialize_field("matter_left", &self.matter_left)?;
        st.serialize_field("matter_right", &self.matter_right)?;
        st.end()
    }
}

fn real_part<S: Scalar>(z: &S) -> S {
    (z.clone() + z.conj()) * S::ratio(1, 2)
}

/// Left side of the connection equation for one test direction:
/// `⟨K^λ(T₁)|∇T₁⟩_l − ⟨(∗K^λ∗)(T₂)|∇̂T₂⟩_r`.
pub fn matter_pairing<S: Scalar>(
    omega: &Qpc<S>,
    nu: &AdForm<S>,
    t1: &Section<S>,
    t2: &Section<S>,
    cal: &Calibration,
) -> S {
    let k1 = qvb::k_lambda(nu, t1, Side::Left, cal);
    let k2 = qvb::k_lambda(nu, t2, Side::Right, cal);
    let a = qvb::vform_inner(&k1, &qvb::nabla(omega, t1, cal), cal).expect("same corep");
    let b = qvb::vform_inner(&k2, &qvb::nabla_hat(omega, t2, cal), cal).expect("same corep");
    a - b
}

pub fn ymsm_residuals<S: Scalar>(
    omega: &Qpc<S>,
    t1: &Section<S>,
    t2: &Section<S>,
    v: &Potential<S>,
    cal: &Calibration,
) -> Result<YmsmResiduals<S>> {
    check_pair(t1, t2)?;
    v.validate()?;
    let ym = ym_residual(omega, cal);
    let mut connection = Residual::new();
    let mut connection_real = Residual::new();
    for ((name, nu), (_, rhs)) in lambda_basis::<S>().into_iter().zip(ym.components) {
        let lhs = matter_pairing(omega, &nu, t1, t2, cal);
        let diff = lhs - rhs;
        connection_real.push(name.clone(), real_part(&diff));
        connection.push(name, diff);
    }

    let lap1 = qvb::laplacian(omega, t1, Side::Left, cal).form();
    let vp1 = base::star(&v.derivative(&qvb::section_herm(t1, t1, Side::Left, cal)?));
    let r9 = lap1 - base::mul(&vp1, &t1.form(), cal);
    let lap2 = qvb::laplacian(omega, t2, Side::Right, cal).form();
    let vp2 = base::star(&v.derivative(&qvb::section_herm(t2, t2, Side::Right, cal)?));
    let r10 = lap2 - base::mul(&t2.form(), &vp2, cal);
    let named = |tag: &str, f: BaseForm<S>| {
        let mut r = Residual::new();
        r.push(format!("{tag}[0]"), f.c[0].clone());
        r.push(format!("{tag}[1]"), f.c[1].clone());
        r
    };
    Ok(YmsmResiduals {
        connection,
        connection_real,
        matter_left: named("T1", r9),
        matter_right: named("T2", r10),
    })
}

/// Component formulas for the alternating corepresentation, transcribed
/// as printed.
#[derive(Clone, Debug, PartialEq)]
pub struct AltComponentEquations<S> {
    /// Left side minus right side of the two scalar connection equations.
    pub rows: Residual<S>,
    /// `(ũ₀, ũ₁)`: the printed value of `∇^⋆∇T₁`.
    pub u_tilde: [S; 2],
    /// `(û₀, û₁)`: the printed value of `∇̂^⋆∇̂T₂`.
    pub u_hat: [S; 2],
}

pub fn alt_component_equations<S: Scalar>(
    omega: &Qpc<S>,
    t1: &Section<S>,
    t2: &Section<S>,
) -> Result<AltComponentEquations<S>> {
    for t in [t1, t2] {
        if t.corep != CorepKind::Alternating {
            return Err(Error::CorepMismatch("alternating".into(), t.corep.to_string()));
        }
    }
    let (l0, l1) = (omega.lambda0.clone(), omega.lambda1.clone());
    let [a0, a1] = t1.p.clone();
    let [b0, b1] = t2.p.clone();
    let i = S::i();
    let two = S::ratio(2, 1);
    let four = S::ratio(4, 1);
    let u = omega.u();
    let one = S::one();

    let abs = |z: &S| z.abs_sq();
    let row0 = i.clone()
        * (abs(&a0) - a0.clone() * a1.conj() + b0.conj() * b1.clone() - abs(&b0))
        + two.clone() * (abs(&a0) - abs(&b0)) * l0.conj()
        - u.conj() * (one.clone() + two.clone() * i.clone() * l1.clone());
    let row1 = i.clone()
        * (abs(&a1) - a0.conj() * a1.clone() + b0.clone() * b1.conj() - abs(&b1))
        + two.clone() * (abs(&a1) - abs(&b1)) * l1.conj()
        - u.conj() * (one + two.clone() * i.clone() * l0.clone());
    let mut rows = Residual::new();
    rows.push("row0", row0);
    rows.push("row1", row1);

    let s = l0.clone() + l1.clone();
    let ll = l0.clone() * l1.clone();
    let comp = |p0: &S, p1: &S, lx: &S| {
        two.clone() * (p0.clone() - p1.clone())
            + two.clone() * i.clone() * p0.clone() * s.clone()
            - four.clone() * i.clone() * p1.clone() * lx.clone()
            - four.clone() * p0.clone() * ll.clone()
    };
    // the index-1 formulas are the index-0 ones with p₀ ↔ p₁ swapped
    let u_tilde = [comp(&a0, &a1, &l1), comp(&a1, &a0, &l0)];
    let u_hat = [comp(&b0, &b1, &l0), comp(&b1, &b0, &l1)];
    Ok(AltComponentEquations { rows, u_tilde, u_hat })
}

/// Whether `(d^{∇⋆} − d^{S⋆})² = 0` on both sides, from degree 2 to degree 0.
pub fn continuity_check<S: Scalar>(omega: &Qpc<S>, cal: &Calibration) -> bool {
    Side::BOTH.iter().all(|&side| {
        let top = ad_adjoint_matrix(omega, side, 1, cal);
        let bottom = ad_adjoint_matrix(omega, side, 0, cal);
        bottom.mul(&top).is_zero()
    })
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

    fn qpc(a: &str, b: &str) -> Qpc<E> {
        Qpc::new(q(a), q(b))
    }

    #[test]
    fn action_values() {
        assert_eq!(action_ym(&Qpc::<E>::triv(), &CAL), q("0"));
        assert_eq!(action_ym(&Qpc::<E>::ym(), &CAL), q("-1/8"));
        assert_eq!(action_ym(&qpc("1", "0"), &CAL), q("-1/2"));
        let w = qpc("2/3+i", "-1/2");
        assert_eq!(integrate_function(&lagrangian_ym(&w, &CAL), &CAL), action_ym(&w, &CAL));
        let u = w.u();
        assert_eq!(action_ym(&w, &CAL), u.abs_sq() * q("-1/2"));
    }

    #[test]
    fn ym_residual_zero_set() {
        assert!(ym_residual(&Qpc::<E>::triv(), &CAL).is_zero());
        assert!(ym_residual(&Qpc::<E>::ym(), &CAL).is_zero());
        assert!(!ym_residual(&qpc("1", "0"), &CAL).is_zero());
        // flat: λ₁ = −λ₀/(1+2iλ₀)
        let l0 = q("1");
        let l1 = -(l0.clone() * (q("1") + q("2i") * l0.clone()).inv().unwrap());
        assert_eq!(l1, q("-1/5+2/5i"));
        assert!(ym_residual(&Qpc::new(l0, l1), &CAL).is_zero());
    }

    #[test]
    fn ym_residual_closed_form() {
        // 2(a∂₀u + b∂₁u)ū for ν = [a,b]
        let w = qpc("1/2-i", "3");
        let u = w.u();
        let d0 = -(q("1") + q("2i") * w.lambda1.clone());
        let d1 = -(q("1") + q("2i") * w.lambda0.clone());
        let r = ym_residual(&w, &CAL);
        let want = [d0.clone(), d1.clone(), q("i") * d0, q("i") * d1];
        for ((_, got), want) in r.components.iter().zip(want) {
            assert_eq!(*got, q("2") * want * u.conj());
        }
    }

    #[test]
    fn continuity() {
        for w in [Qpc::<E>::triv(), Qpc::ym(), qpc("1-2i", "1/3"), qpc("5", "-i")] {
            assert!(continuity_check(&w, &CAL));
        }
    }

    #[test]
    fn potentials() {
        let v = Potential::Polynomial { coeffs: vec![q("1"), q("0"), q("3")] };
        let p = BaseForm::new(0, q("2"), q("i"));
        assert_eq!(v.value(&p), BaseForm::new(0, q("13"), q("-2")));
        assert_eq!(v.derivative(&p), BaseForm::new(0, q("12"), q("6i")));
        let v = Potential::PaperExample { x: q("2"), y: q("1") };
        assert_eq!(v.derivative(&p), BaseForm::new(0, q("1"), q("-2")));
        assert!(Potential::PaperExample { x: q("0"), y: q("1") }.validate().is_err());
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"kind":"paper_example","x":"2","y":"1"}"#);
    }

    #[test]
    fn ymsm_reduces_to_ym_without_matter() {
        let z = Section::<E>::zero(CorepKind::Trivial);
        let v = Potential::zero();
        assert_eq!(action_ymsm(&Qpc::ym(), &z, &z, &v, &CAL).unwrap(), q("-1/8"));
        assert_eq!(action_ymsm(&Qpc::triv(), &z, &z, &v, &CAL).unwrap(), q("0"));
        let t = Section::new(CorepKind::Trivial, q("2"), q("1"));
        let g = qvb::nabla(&Qpc::triv(), &t, &CAL);
        assert_eq!(vform_herm(&g, &g, &CAL), BaseForm::one());
    }

    #[test]
    fn trivial_corep_triplets() {
        for (x, y) in [("2", "1"), ("3", "2"), ("1", "1")] {
            let v = Potential::PaperExample { x: q(x), y: q(y) };
            let t = Section::new(CorepKind::Trivial, q(x), q(y));
            for w in [Qpc::triv(), Qpc::ym()] {
                let r = ymsm_residuals(&w, &t, &t, &v, &CAL).unwrap();
                assert!(r.is_zero(), "{r:?}");
            }
        }
    }

    #[test]
    fn perturbed_potential_leaves_a_residual() {
        // V′ = diag(1,−2) + diag(1,0): only the first component moves
        let t = Section::new(CorepKind::Trivial, q("2"), q("1"));
        let v = Potential::PaperExample { x: q("2"), y: q("1") };
        let base_r = ymsm_residuals(&Qpc::triv(), &t, &t, &v, &CAL).unwrap();
        assert!(base_r.matter_left.is_zero());
        let lap = qvb::laplacian(&Qpc::triv(), &t, Side::Left, &CAL).form();
        let vp = BaseForm::new(0, q("2"), q("-2"));
        let r = lap - base::mul(&vp, &t.form(), &CAL);
        assert_eq!(r, BaseForm::new(0, q("-2"), q("0")));
    }

    #[test]
    fn alt_components_at_the_ym_connection() {
        let w = Qpc::<E>::ym();
        let t1 = Section::new(CorepKind::Alternating, q("1+i"), q("2"));
        let t2 = Section::new(CorepKind::Alternating, q("3"), q("1/2-i"));
        let alt = alt_component_equations(&w, &t1, &t2).unwrap();
        let want0 = q("i") * (t2.p[0].conj() * t2.p[1].clone() - t1.p[0].clone() * t1.p[1].conj());
        assert_eq!(alt.rows.components[0].1, want0);
        assert_eq!(alt.u_tilde, t1.p);
        assert_eq!(alt.u_hat, t2.p);
        let flat = alt_component_equations(&Qpc::triv(), &Section::basis(CorepKind::Alternating), &t2)
            .unwrap();
        assert_eq!(flat.u_tilde, [q("0"), q("0")]);
    }

    #[test]
    fn residual_json() {
        let r = ym_residual(&Qpc::<E>::ym(), &CAL);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["is_zero"], true);
        assert_eq!(v["components"]["nu=[1,0]"], "0");
    }
}
