//! Differential forms on the two-point space.
//!
//! Every form is a 2×2 matrix with two nonzero entries:
//! `[z0,z1]₀ = diag(z0,z1)`, `[w01,w10]₁` off-diagonal (top-right `w01`),
//! `[v0,v1]₂ = diag(v0,v1)`. Products of total degree above 2 vanish.
//! Degree 3 only ever appears as the zero form produced by truncation.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::calibration::{Calibration, HodgeEvenSign, ProductFactor};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Left or right variant of a hermitian structure, Hodge operator, etc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BaseForm<S> {
    pub degree: u8,
    pub c: [S; 2],
}

impl<S: Scalar> BaseForm<S> {
    pub fn new(degree: u8, c0: S, c1: S) -> Self {
        assert!(degree <= 2, "base forms live in degrees 0..=2");
        BaseForm { degree, c: [c0, c1] }
    }

    pub fn zero(degree: u8) -> Self {
        assert!(degree <= 3);
        BaseForm {
            degree,
            c: [S::zero(), S::zero()],
        }
    }

    /// Basis element `idx ∈ {0,1}` of degree `degree`.
    pub fn basis(degree: u8, idx: usize) -> Self {
        let mut f = Self::zero(degree);
        f.c[idx] = S::one();
        f
    }

    pub fn basis_of_degree(degree: u8) -> [Self; 2] {
        [Self::basis(degree, 0), Self::basis(degree, 1)]
    }

    pub fn one() -> Self {
        Self::new(0, S::one(), S::one())
    }

    pub fn p0() -> Self {
        Self::basis(0, 0)
    }

    pub fn p1() -> Self {
        Self::basis(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, s: &S) -> Self {
        BaseForm {
            degree: self.degree,
            c: [s.clone() * self.c[0].clone(), s.clone() * self.c[1].clone()],
        }
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        BaseForm {
            degree: self.degree,
            c: [f(&self.c[0]), f(&self.c[1])],
        }
    }

    pub fn to_vec(&self) -> Vec<S> {
        self.c.to_vec()
    }

    pub fn from_slice(degree: u8, v: &[S]) -> Self {
        Self::new(degree, v[0].clone(), v[1].clone())
    }

    /// Nonzero basis components as `(idx, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &S)> {
        self.c.iter().enumerate().filter(|(_, x)| !x.is_zero())
    }
}

fn checked_same_degree<S: Scalar>(a: &BaseForm<S>, b: &BaseForm<S>) {
    assert_eq!(
        a.degree, b.degree,
        "adding base forms of different degrees"
    );
}

impl<S: Scalar> Add for BaseForm<S> {
    type Output = BaseForm<S>;
    fn add(self, rhs: BaseForm<S>) -> BaseForm<S> {
        checked_same_degree(&self, &rhs);
        let [a0, a1] = self.c;
        let [b0, b1] = rhs.c;
        BaseForm {
            degree: self.degree,
            c: [a0 + b0, a1 + b1],
        }
    }
}

impl<S: Scalar> Sub for BaseForm<S> {
    type Output = BaseForm<S>;
    fn sub(self, rhs: BaseForm<S>) -> BaseForm<S> {
        self + (-rhs)
    }
}

/// `[c0, c1]_k` for a `k`-form.
impl<S: fmt::Display> fmt::Display for BaseForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_{}", self.c[0], self.c[1], self.degree)
    }
}

impl<S: Scalar> Neg for BaseForm<S> {
    type Output = BaseForm<S>;
    fn neg(self) -> BaseForm<S> {
        let [a0, a1] = self.c;
        BaseForm {
            degree: self.degree,
            c: [-a0, -a1],
        }
    }
}

fn product_factor<S: Scalar>(cal: &Calibration) -> S {
    match cal.product_factor {
        ProductFactor::I => S::i(),
        ProductFactor::One => S::one(),
    }
}

fn even_sign<S: Scalar>(cal: &Calibration) -> S {
    match cal.hodge_even_sign {
        HodgeEvenSign::Plus => S::one(),
        HodgeEvenSign::Minus => -S::one(),
    }
}

pub fn mul<S: Scalar>(a: &BaseForm<S>, b: &BaseForm<S>, cal: &Calibration) -> BaseForm<S> {
    let [a0, a1] = a.c.clone();
    let [b0, b1] = b.c.clone();
    let deg = a.degree + b.degree;
    match (a.degree, b.degree) {
        _ if deg > 2 => BaseForm::zero(3),
        (0, _) | (2, 0) => BaseForm {
            degree: deg,
            c: [a0 * b0, a1 * b1],
        },
        (1, 0) => BaseForm {
            degree: 1,
            c: [a0 * b1, a1 * b0],
        },
        (1, 1) => {
            let f: S = product_factor(cal);
            BaseForm {
                degree: 2,
                c: [f.clone() * a0 * b1, f * a1 * b0],
            }
        }
        _ => unreachable!(),
    }
}

pub fn d<S: Scalar>(a: &BaseForm<S>) -> BaseForm<S> {
    let [z0, z1] = a.c.clone();
    match a.degree {
        0 => BaseForm::new(1, S::i() * (z1.clone() - z0.clone()), S::i() * (z0 - z1)),
        1 => {
            let s = -(z0 + z1);
            BaseForm::new(2, s.clone(), s)
        }
        _ => BaseForm::zero(3),
    }
}

pub fn star<S: Scalar>(a: &BaseForm<S>) -> BaseForm<S> {
    match a.degree {
        1 => BaseForm::new(1, a.c[1].conj(), a.c[0].conj()),
        _ => a.map(|x| x.conj()),
    }
}

/// `p₀dp₁dp₀ + p₁dp₁dp₁`.
pub fn dvol<S: Scalar>(cal: &Calibration) -> BaseForm<S> {
    let p0 = BaseForm::p0();
    let p1 = BaseForm::p1();
    let a = mul(&mul(&p0, &d(&p1), cal), &d(&p0), cal);
    let b = mul(&mul(&p1, &d(&p1), cal), &d(&p1), cal);
    a + b
}

/// Quantum integral, normalised by `∫p₀dp₁dp₀ = 1/2 = ∫p₁dp₁dp₁`.
pub fn integral<S: Scalar>(a: &BaseForm<S>, cal: &Calibration) -> Result<S> {
    if a.degree != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            found: a.degree,
        });
    }
    let vol = dvol::<S>(cal);
    let half = S::ratio(1, 2);
    let mut total = S::zero();
    for k in 0..2 {
        let inv = vol.c[k].inv().ok_or(Error::DivisionByZero)?;
        total = total + half.clone() * a.c[k].clone() * inv;
    }
    Ok(total)
}

/// Coefficient function `p` with `v = p·dvol`.
fn over_dvol<S: Scalar>(v: &BaseForm<S>, cal: &Calibration) -> BaseForm<S> {
    let vol = dvol::<S>(cal);
    BaseForm::new(
        0,
        v.c[0].clone() * vol.c[0].inv().expect("dvol has no zero component"),
        v.c[1].clone() * vol.c[1].inv().expect("dvol has no zero component"),
    )
}

/// Left or right hermitian structure, valued in degree-0 forms.
pub fn herm<S: Scalar>(
    a: &BaseForm<S>,
    b: &BaseForm<S>,
    side: Side,
    cal: &Calibration,
) -> Result<BaseForm<S>> {
    if a.degree != b.degree {
        return Err(Error::DegreeMismatch(a.degree, b.degree));
    }
    match side {
        Side::Right => herm(&star(a), &star(b), Side::Left, cal),
        Side::Left => {
            let (x, y) = match a.degree {
                0 | 1 => (a.clone(), b.clone()),
                2 => (over_dvol(a, cal), over_dvol(b, cal)),
                k => return Err(Error::WrongDegree { expected: 2, found: k }),
            };
            Ok(BaseForm::new(
                0,
                x.c[0].clone() * y.c[0].conj(),
                x.c[1].clone() * y.c[1].conj(),
            ))
        }
    }
}

/// `∫ ⟨a,b⟩·dvol`.
pub fn inner<S: Scalar>(a: &BaseForm<S>, b: &BaseForm<S>, side: Side, cal: &Calibration) -> Result<S> {
    let h = herm(a, b, side, cal)?;
    integral(&mul(&h, &dvol(cal), cal), cal)
}

/// Hodge operator. On the left: `f ↦ f·dvol`, `[w01,w10] ↦ [−w01,w10]`,
/// `v ↦ v/dvol`; even degrees carry the calibrated global sign. The
/// right operator is `∗∘⋆_l∘∗`.
pub fn hodge<S: Scalar>(a: &BaseForm<S>, side: Side, cal: &Calibration) -> BaseForm<S> {
    match side {
        Side::Right => star(&hodge(&star(a), Side::Left, cal)),
        Side::Left => {
            let s: S = even_sign(cal);
            match a.degree {
                0 => mul(a, &dvol(cal), cal).scale(&s),
                1 => BaseForm::new(1, -a.c[0].clone(), a.c[1].clone()),
                2 => over_dvol(a, cal).scale(&s),
                _ => BaseForm::zero(3),
            }
        }
    }
}

/// Inverse Hodge operator (on the left `⋆_l` is an involution).
pub fn hodge_inv<S: Scalar>(a: &BaseForm<S>, side: Side, cal: &Calibration) -> BaseForm<S> {
    match side {
        Side::Right => star(&hodge_inv(&star(a), Side::Left, cal)),
        Side::Left => {
            let s: S = even_sign(cal);
            match a.degree {
                0 => mul(a, &dvol(cal), cal).scale(&s),
                1 => BaseForm::new(1, -a.c[0].clone(), a.c[1].clone()),
                2 => over_dvol(a, cal).scale(&s),
                _ => BaseForm::zero(3),
            }
        }
    }
}

/// Codifferential given by its closed matrix formulas; on 0-forms it is zero
/// (returned as the degree-0 zero form).
pub fn codiff<S: Scalar>(a: &BaseForm<S>, side: Side) -> BaseForm<S> {
    match side {
        Side::Right => star(&codiff(&star(a), Side::Left)),
        Side::Left => {
            let [z0, z1] = a.c.clone();
            match a.degree {
                1 => {
                    let diff = z0 - z1;
                    BaseForm::new(0, S::i() * diff.clone(), -(S::i() * diff))
                }
                2 => {
                    let s = -(z0 + z1);
                    BaseForm::new(1, s.clone(), s)
                }
                _ => BaseForm::zero(0),
            }
        }
    }
}

/// `⋆∘d∘⋆`, which must coincide with [`codiff`] on degrees 1 and 2.
pub fn codiff_via_hodge<S: Scalar>(a: &BaseForm<S>, side: Side, cal: &Calibration) -> BaseForm<S> {
    hodge(&d(&hodge(a, side, cal)), side, cal)
}

/// Matrix of a linear operator between two degrees, in the component bases.
pub fn operator_matrix<S: Scalar>(
    from_degree: u8,
    op: impl Fn(&BaseForm<S>) -> BaseForm<S>,
) -> Matrix<S> {
    let cols: Vec<Vec<S>> = BaseForm::basis_of_degree(from_degree)
        .iter()
        .map(|e| op(e).to_vec())
        .collect();
    Matrix::from_columns(2, &cols)
}

/// Gram matrix `G[a][b] = ⟨e_a|e_b⟩` of the inner product on `degree`-forms.
pub fn gram<S: Scalar>(degree: u8, side: Side, cal: &Calibration) -> Matrix<S> {
    let basis = BaseForm::<S>::basis_of_degree(degree);
    Matrix::from_fn(2, 2, |a, b| {
        inner(&basis[a], &basis[b], side, cal).expect("equal degrees")
    })
}

/// Adjoint of `a: V → W` for sesquilinear products with Gram matrices
/// `g_src` on V and `g_tgt` on W. The left product is linear in its first
/// slot, the right one in its second.
pub fn adjoint_matrix<S: Scalar>(
    a: &Matrix<S>,
    g_src: &Matrix<S>,
    g_tgt: &Matrix<S>,
    side: Side,
) -> Result<Matrix<S>> {
    match side {
        // B = G_src^{-T} A^H G_tgt^T
        Side::Left => {
            let rhs = a.adjoint().mul(&g_tgt.transpose());
            g_src.transpose().solve(&rhs)
        }
        // B = G_src^{-H} A^H G_tgt^H
        Side::Right => {
            let rhs = a.adjoint().mul(&g_tgt.adjoint());
            g_src.adjoint().solve(&rhs)
        }
    }
}

/// Inhomogeneous form with components in degrees 0, 1, 2.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixedForm<S> {
    pub parts: [BaseForm<S>; 3],
}

impl<S: Scalar> MixedForm<S> {
    pub fn zero() -> Self {
        MixedForm {
            parts: [BaseForm::zero(0), BaseForm::zero(1), BaseForm::zero(2)],
        }
    }

    pub fn from_form(f: &BaseForm<S>) -> Self {
        let mut m = Self::zero();
        if f.degree <= 2 {
            m.parts[f.degree as usize] = f.clone();
        }
        m
    }

    pub fn component(&self, degree: u8) -> &BaseForm<S> {
        &self.parts[degree as usize]
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for k in 0..3 {
            m.parts[k] = m.parts[k].clone() + other.parts[k].clone();
        }
        m
    }

    pub fn mul(&self, other: &Self, cal: &Calibration) -> Self {
        let mut m = Self::zero();
        for a in &self.parts {
            for b in &other.parts {
                let p = mul(a, b, cal);
                let k = p.degree as usize;
                if k <= 2 {
                    m.parts[k] = m.parts[k].clone() + p;
                }
            }
        }
        m
    }

    pub fn d(&self) -> Self {
        let mut m = Self::zero();
        for a in &self.parts[..2] {
            let da = d(a);
            let k = da.degree as usize;
            m.parts[k] = m.parts[k].clone() + da;
        }
        m
    }

    pub fn star(&self) -> Self {
        MixedForm {
            parts: [star(&self.parts[0]), star(&self.parts[1]), star(&self.parts[2])],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactC;

    type F = BaseForm<ExactC>;
    const CAL: Calibration = Calibration::SELECTED;

    fn q(s: &str) -> ExactC {
        s.parse().unwrap()
    }
    fn f(deg: u8, a: &str, b: &str) -> F {
        F::new(deg, q(a), q(b))
    }

    #[test]
    fn products() {
        assert_eq!(mul(&f(0, "1", "0"), &f(1, "i", "-i"), &CAL), f(1, "i", "0"));
        assert_eq!(
            mul(&f(1, "1/2 i", "1/2 i"), &f(1, "1/2 i", "1/2 i"), &CAL),
            f(2, "-1/4 i", "-1/4 i")
        );
        let top = mul(&f(2, "3", "4"), &f(1, "1", "2"), &CAL);
        assert!(top.is_zero() && top.degree == 3);
    }

    #[test]
    fn differential() {
        assert_eq!(d(&F::p1()), f(1, "i", "-i"));
        assert_eq!(d(&f(1, "1/2 i", "1/2 i")), f(2, "-i", "-i"));
        assert!(d(&d(&f(0, "3", "-2/7"))).is_zero());
    }

    #[test]
    fn involution() {
        let vol = dvol::<ExactC>(&CAL);
        assert_eq!(vol, f(2, "-i", "i"));
        assert_eq!(star(&vol), -vol);
        assert_eq!(star(&f(1, "1+i", "2")), f(1, "2", "1-i"));
        assert_eq!(star(&F::one()), F::one());
    }

    #[test]
    fn hermitian_structures() {
        assert_eq!(herm(&F::p0(), &F::p0(), Side::Left, &CAL).unwrap(), F::p0());
        let vol = dvol::<ExactC>(&CAL);
        assert_eq!(herm(&vol, &vol, Side::Left, &CAL).unwrap(), F::one());
        let w = f(1, "1+i", "2");
        assert_eq!(herm(&w, &w, Side::Right, &CAL).unwrap(), f(0, "4", "2"));
        assert_eq!(
            herm(&F::p0(), &w, Side::Left, &CAL).unwrap_err(),
            Error::DegreeMismatch(0, 1)
        );
    }

    #[test]
    fn integrals() {
        let a = mul(&mul(&F::p0(), &d(&F::p1()), &CAL), &d(&F::p0()), &CAL);
        assert_eq!(a, f(2, "-i", "0"));
        assert_eq!(integral(&a, &CAL).unwrap(), q("1/2"));
        assert_eq!(integral(&dvol::<ExactC>(&CAL), &CAL).unwrap(), q("1"));
        assert_eq!(integral(&F::zero(2), &CAL).unwrap(), q("0"));
        assert!(integral(&F::p0(), &CAL).is_err());
    }

    #[test]
    fn hodge_values() {
        assert_eq!(hodge(&F::one(), Side::Left, &CAL), f(2, "-i", "i"));
        assert_eq!(hodge(&f(1, "3", "5"), Side::Left, &CAL), f(1, "-3", "5"));
        assert_eq!(hodge(&dvol(&CAL), Side::Left, &CAL), F::one());
        for side in Side::BOTH {
            for deg in 0..3 {
                for e in F::basis_of_degree(deg) {
                    assert_eq!(hodge_inv(&hodge(&e, side, &CAL), side, &CAL), e);
                }
            }
        }
    }

    #[test]
    fn codifferential_values() {
        let (z0, z1) = (q("2+i"), q("-1/3"));
        let w = F::new(1, z0.clone(), z1.clone());
        let diff = z0.clone() - z1.clone();
        assert_eq!(
            codiff(&w, Side::Left),
            F::new(0, ExactC::i() * diff.clone(), -(ExactC::i() * diff))
        );
        let v = F::new(2, z0.clone(), z1.clone());
        let s = -(z0 + z1);
        assert_eq!(codiff(&v, Side::Left), F::new(1, s.clone(), s));
        assert!(codiff(&f(0, "1", "2"), Side::Left).is_zero());
    }

    #[test]
    fn inner_products() {
        assert_eq!(inner(&F::p0(), &F::p0(), Side::Left, &CAL).unwrap(), q("1/2"));
        let vol = dvol::<ExactC>(&CAL);
        assert_eq!(inner(&vol, &vol, Side::Left, &CAL).unwrap(), q("1"));
        let w = f(1, "1+i", "3");
        assert_eq!(inner(&w, &w, Side::Left, &CAL).unwrap(), q("11/2"));
        for side in Side::BOTH {
            for deg in 0..3 {
                assert_eq!(gram::<ExactC>(deg, side, &CAL), Matrix::identity(2).scale(&q("1/2")));
            }
        }
    }

    #[test]
    fn mixed_forms_multiply_degreewise() {
        let a = MixedForm::from_form(&F::one()).add(&MixedForm::from_form(&f(1, "1", "0")));
        let sq = a.mul(&a, &CAL);
        assert_eq!(sq.component(0), &F::one());
        assert_eq!(sq.component(1), &f(1, "2", "0"));
        // E01·E01 = 0
        assert!(sq.component(2).is_zero());
        assert!(a.d().d().component(2).is_zero());
        assert_eq!(a.star().star(), a);
    }
}
