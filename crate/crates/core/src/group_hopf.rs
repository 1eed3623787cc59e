//! The Hopf ∗-algebra `G = C(S₂)` and its universal calculus `Γ^∧`.
//!
//! Forms on the group are written in path components: `(g0,g1)₀ = g0Δ₀ + g1Δ₁`,
//! `(θ01,θ10)₁ = θ01 e01 + θ10 e10` with `e_xy = Δ_x dΔ_y`, and
//! `(θ010,θ101)₂` on `e010 = e01e10`, `e101 = e10e01`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::algebra::{Factor, Kind, Tensor};
use crate::calibration::Calibration;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Element `c0Δ₀ + c1Δ₁` of `C(S₂)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrpElt<S> {
    pub c: [S; 2],
}

impl<S: Scalar> GrpElt<S> {
    pub fn new(c0: S, c1: S) -> Self {
        GrpElt { c: [c0, c1] }
    }

    pub fn delta(x: usize) -> Self {
        let mut c = [S::zero(), S::zero()];
        c[x] = S::one();
        GrpElt { c }
    }

    pub fn unit() -> Self {
        Self::new(S::one(), S::one())
    }

    /// `𝟙^alt = Δ₀ − Δ₁`.
    pub fn alt() -> Self {
        Self::new(S::one(), -S::one())
    }

    pub fn to_form(&self) -> GroupForm<S> {
        GroupForm {
            degree: 0,
            c: self.c.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.c[0].clone() * other.c[0].clone(),
            self.c[1].clone() * other.c[1].clone(),
        )
    }

    pub fn star(&self) -> Self {
        Self::new(self.c[0].conj(), self.c[1].conj())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

/// `φ(g)` as the coefficient matrix `m[a][b]` of `Δ_a⊗Δ_b`.
pub fn coproduct<S: Scalar>(g: &GrpElt<S>) -> [[S; 2]; 2] {
    // φ(Δ_x) = Σ_{a+b ≡ x} Δ_a⊗Δ_b
    let mut m = [[S::zero(), S::zero()], [S::zero(), S::zero()]];
    for (a, row) in m.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            *entry = g.c[(a + b) % 2].clone();
        }
    }
    m
}

pub fn counit<S: Scalar>(g: &GrpElt<S>) -> S {
    g.c[0].clone()
}

pub fn antipode<S: Scalar>(g: &GrpElt<S>) -> GrpElt<S> {
    // every element of S₂ is its own inverse
    g.clone()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupForm<S> {
    pub degree: u8,
    pub c: [S; 2],
}

impl<S: Scalar> GroupForm<S> {
    pub fn new(degree: u8, c0: S, c1: S) -> Self {
        assert!(degree <= 2, "group forms live in degrees 0..=2");
        GroupForm { degree, c: [c0, c1] }
    }

    pub fn zero(degree: u8) -> Self {
        assert!(degree <= 3);
        GroupForm {
            degree,
            c: [S::zero(), S::zero()],
        }
    }

    pub fn basis(degree: u8, idx: usize) -> Self {
        let mut f = Self::zero(degree);
        f.c[idx] = S::one();
        f
    }

    pub fn basis_of_degree(degree: u8) -> [Self; 2] {
        [Self::basis(degree, 0), Self::basis(degree, 1)]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, s: &S) -> Self {
        GroupForm {
            degree: self.degree,
            c: [s.clone() * self.c[0].clone(), s.clone() * self.c[1].clone()],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding group forms of different degrees");
        GroupForm {
            degree: self.degree,
            c: [
                self.c[0].clone() + other.c[0].clone(),
                self.c[1].clone() + other.c[1].clone(),
            ],
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }
}

/// Path concatenation.
pub fn mul_group<S: Scalar>(a: &GroupForm<S>, b: &GroupForm<S>) -> GroupForm<S> {
    let [a0, a1] = a.c.clone();
    let [b0, b1] = b.c.clone();
    let deg = a.degree + b.degree;
    match (a.degree, b.degree) {
        _ if deg > 2 => GroupForm::zero(3),
        (0, _) | (2, 0) => GroupForm {
            degree: deg,
            c: [a0 * b0, a1 * b1],
        },
        // e01Δ1 = e01, e10Δ0 = e10, e01e10 = e010, e10e01 = e101
        (1, _) => GroupForm {
            degree: deg,
            c: [a0 * b1, a1 * b0],
        },
        _ => unreachable!(),
    }
}

pub fn d_group<S: Scalar>(a: &GroupForm<S>) -> GroupForm<S> {
    let [t0, t1] = a.c.clone();
    match a.degree {
        0 => GroupForm::new(1, t1.clone() - t0.clone(), t0 - t1),
        1 => {
            let s = t0 + t1;
            GroupForm::new(2, s.clone(), s)
        }
        _ => GroupForm::zero(3),
    }
}

pub fn star_group<S: Scalar>(a: &GroupForm<S>) -> GroupForm<S> {
    match a.degree {
        1 => GroupForm::new(1, -a.c[1].conj(), -a.c[0].conj()),
        2 => GroupForm::new(2, -a.c[0].conj(), -a.c[1].conj()),
        _ => GroupForm {
            degree: a.degree,
            c: [a.c[0].conj(), a.c[1].conj()],
        },
    }
}

/// `ς = (Δ₀ − Δ₁)dΔ₁`.
pub fn sigma<S: Scalar>() -> GroupForm<S> {
    mul_group(&GrpElt::alt().to_form(), &d_group(&GrpElt::delta(1).to_form()))
}

/// Quantum germs map `π(g) = κ(g⁽¹⁾)dg⁽²⁾`.
pub fn germs<S: Scalar>(g: &GrpElt<S>) -> GroupForm<S> {
    let m = coproduct(g);
    let mut out = GroupForm::zero(1);
    for (a, row) in m.iter().enumerate() {
        for (b, coeff) in row.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let left = antipode(&GrpElt::delta(a)).to_form();
            let right = d_group(&GrpElt::delta(b).to_form());
            out = out.add(&mul_group(&left, &right).scale(coeff));
        }
    }
    out
}

/// Coefficient `c` with `form = c·ς`, if the form lies in `span{ς}`.
pub fn sigma_coefficient<S: Scalar>(form: &GroupForm<S>) -> Option<S> {
    if form.degree != 1 || form.c[0] != form.c[1] {
        return None;
    }
    Some(form.c[0].clone())
}

fn group_tensor<S: Scalar>(a: &GrpElt<S>, b: &GrpElt<S>) -> Tensor<S> {
    Tensor::from_factors(&[Factor::Group(a.to_form()), Factor::Group(b.to_form())])
}

fn extend_differentially<S: Scalar>(
    on_delta: impl Fn(usize) -> Tensor<S>,
    theta: &GroupForm<S>,
    cal: &Calibration,
) -> Tensor<S> {
    // Γ^∧ is generated by the Δ's: e_xy = Δ_x dΔ_y, e_xyx = e_xy e_yx.
    let edge = |x: usize| on_delta(x).mul(&on_delta(1 - x).d(), cal);
    let mut out = Tensor::zero(vec![Kind::Group, Kind::Group]);
    for (idx, coeff) in theta.c.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let image = match theta.degree {
            0 => on_delta(idx),
            1 => edge(idx),
            2 => edge(idx).mul(&edge(1 - idx), cal),
            _ => continue,
        };
        out = out.add(&image.scale(coeff));
    }
    out
}

/// The extension `φ̂: Γ^∧ → Γ^∧⊗Γ^∧` of the coproduct as a morphism of
/// graded differential algebras.
pub fn coproduct_hat<S: Scalar>(theta: &GroupForm<S>, cal: &Calibration) -> Tensor<S> {
    let on_delta = |x: usize| {
        let m = coproduct(&GrpElt::<S>::delta(x));
        let mut t = Tensor::zero(vec![Kind::Group, Kind::Group]);
        for (a, row) in m.iter().enumerate() {
            for (b, coeff) in row.iter().enumerate() {
                if !coeff.is_zero() {
                    t = t.add(&group_tensor(&GrpElt::delta(a), &GrpElt::delta(b)).scale(coeff));
                }
            }
        }
        t
    };
    extend_differentially(on_delta, theta, cal)
}

/// Right adjoint coaction `Ad(g) = g⁽²⁾⊗κ(g⁽¹⁾)g⁽³⁾`, extended to `Γ^∧`.
pub fn ad_coaction<S: Scalar>(theta: &GroupForm<S>, cal: &Calibration) -> Tensor<S> {
    let on_delta = |x: usize| {
        let mut t = Tensor::zero(vec![Kind::Group, Kind::Group]);
        for a in 0..2 {
            for b in 0..2 {
                let c = (x + 4 - a - b) % 2;
                let right = antipode(&GrpElt::<S>::delta(a)).mul(&GrpElt::delta(c));
                t = t.add(&group_tensor(&GrpElt::delta(b), &right));
            }
        }
        t
    };
    extend_differentially(on_delta, theta, cal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorepKind {
    Trivial,
    Alternating,
}

impl CorepKind {
    pub fn name(self) -> &'static str {
        match self {
            CorepKind::Trivial => "trivial",
            CorepKind::Alternating => "alternating",
        }
    }

    /// Matrix coefficient `v₁₁` of the one-dimensional corepresentation.
    pub fn coefficient<S: Scalar>(self) -> GrpElt<S> {
        match self {
            CorepKind::Trivial => GrpElt::unit(),
            CorepKind::Alternating => GrpElt::alt(),
        }
    }
}

impl fmt::Display for CorepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(CorepKind::Trivial),
            "alternating" | "alt" => Ok(CorepKind::Alternating),
            other => Err(Error::UnknownCorep(other.to_string())),
        }
    }
}

/// A finite-dimensional corepresentation `v_jk ∈ G`.
#[derive(Clone, Debug, PartialEq)]
pub struct Corep<S> {
    pub name: String,
    pub matrix: Vec<Vec<GrpElt<S>>>,
}

impl<S: Scalar> Corep<S> {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// Direct sum, block diagonal.
    pub fn direct_sum(&self, other: &Corep<S>) -> Corep<S> {
        let n = self.dim() + other.dim();
        let matrix = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| match (j < self.dim(), k < self.dim()) {
                        (true, true) => self.matrix[j][k].clone(),
                        (false, false) => other.matrix[j - self.dim()][k - self.dim()].clone(),
                        _ => GrpElt::new(S::zero(), S::zero()),
                    })
                    .collect()
            })
            .collect();
        Corep {
            name: format!("{}+{}", self.name, other.name),
            matrix,
        }
    }

    /// `φ(v_jk) = Σ_m v_jm⊗v_mk` and `ε(v_jk) = δ_jk`.
    pub fn satisfies_corep_laws(&self) -> bool {
        let n = self.dim();
        for j in 0..n {
            for k in 0..n {
                let lhs = coproduct(&self.matrix[j][k]);
                for a in 0..2 {
                    for b in 0..2 {
                        let rhs = (0..n).fold(S::zero(), |acc, m| {
                            acc + self.matrix[j][m].c[a].clone() * self.matrix[m][k].c[b].clone()
                        });
                        if lhs[a][b] != rhs {
                            return false;
                        }
                    }
                }
                let want = if j == k { S::one() } else { S::zero() };
                if counit(&self.matrix[j][k]) != want {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_m v_jm v_km* = δ_jk 𝟙`.
    pub fn is_unitary(&self) -> bool {
        let n = self.dim();
        (0..n).all(|j| {
            (0..n).all(|k| {
                let mut acc = GrpElt::new(S::zero(), S::zero());
                for m in 0..n {
                    let p = self.matrix[j][m].mul(&self.matrix[k][m].star());
                    acc = GrpElt::new(acc.c[0].clone() + p.c[0].clone(), acc.c[1].clone() + p.c[1].clone());
                }
                let want = if j == k { GrpElt::unit() } else { GrpElt::new(S::zero(), S::zero()) };
                acc == want
            })
        })
    }
}

pub fn corep_catalog<S: Scalar>(name: &str) -> Result<Corep<S>> {
    let kind: CorepKind = name.parse()?;
    Ok(Corep {
        name: kind.name().to_string(),
        matrix: vec![vec![kind.coefficient()]],
    })
}

/// Conjugate corepresentation, entrywise `∗`.
pub fn conjugate<S: Scalar>(alpha: &Corep<S>) -> Corep<S> {
    Corep {
        name: alpha.name.clone(),
        matrix: alpha
            .matrix
            .iter()
            .map(|row| row.iter().map(|v| v.star()).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ExactC;

    type E = ExactC;
    const CAL: Calibration = Calibration::SELECTED;

    fn g(a: i64, b: i64) -> GrpElt<E> {
        GrpElt::new(E::gauss(a, 0), E::gauss(b, 0))
    }

    #[test]
    fn hopf_structure_on_basis() {
        let m = coproduct(&g(0, 1));
        assert_eq!(m[0][1], E::one());
        assert_eq!(m[1][0], E::one());
        assert!(m[0][0].is_zero() && m[1][1].is_zero());
        assert_eq!(counit(&g(1, 1)), E::one());
        assert_eq!(antipode(&g(0, 1)), g(0, 1));
    }

    #[test]
    fn sigma_and_germs() {
        let s = sigma::<E>();
        assert_eq!(s, GroupForm::new(1, E::one(), E::one()));
        assert_eq!(d_group(&s), GroupForm::new(2, E::gauss(2, 0), E::gauss(2, 0)));
        assert_eq!(d_group(&s), mul_group(&s, &s).scale(&E::gauss(2, 0)));
        assert_eq!(star_group(&s), s.neg());
        assert_eq!(germs(&g(0, 1)), s);
        assert_eq!(germs(&g(1, 0)), s.neg());
        assert!(germs(&g(1, 1)).is_zero());
        assert_eq!(germs(&GrpElt::alt()), s.scale(&E::gauss(-2, 0)));
    }

    #[test]
    fn alt_times_sigma_is_d_delta1() {
        let lhs = mul_group(&GrpElt::<E>::alt().to_form(), &sigma());
        assert_eq!(lhs, d_group(&GrpElt::delta(1).to_form()));
    }

    #[test]
    fn coproduct_extension_on_d_delta1() {
        let dd1 = d_group(&GrpElt::<E>::delta(1).to_form());
        let lhs = coproduct_hat(&dd1, &CAL);
        // dΔ₀⊗Δ₁ + Δ₀⊗dΔ₁ + dΔ₁⊗Δ₀ + Δ₁⊗dΔ₀
        let dg = |x: usize| Factor::Group(d_group(&GrpElt::<E>::delta(x).to_form()));
        let dl = |x: usize| Factor::Group(GrpElt::<E>::delta(x).to_form());
        let rhs = Tensor::from_factors(&[dg(0), dl(1)])
            .add(&Tensor::from_factors(&[dl(0), dg(1)]))
            .add(&Tensor::from_factors(&[dg(1), dl(0)]))
            .add(&Tensor::from_factors(&[dl(1), dg(0)]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjoint_coaction_is_trivial_on_the_right() {
        let unit = Factor::Group(GrpElt::<E>::unit().to_form());
        for deg in 0..3 {
            for b in GroupForm::<E>::basis_of_degree(deg) {
                let want = Tensor::from_factors(&[Factor::Group(b.clone()), unit.clone()]);
                assert_eq!(ad_coaction(&b, &CAL), want, "Ad on {b:?}");
            }
        }
        let s = sigma::<E>();
        let s2 = mul_group(&s, &s);
        assert_eq!(
            ad_coaction(&s2, &CAL),
            Tensor::from_factors(&[Factor::Group(s2), unit])
        );
    }

    #[test]
    fn catalog() {
        for name in ["trivial", "alternating"] {
            let c = corep_catalog::<E>(name).unwrap();
            assert!(c.satisfies_corep_laws() && c.is_unitary());
            assert_eq!(conjugate(&c), c);
        }
        let alt = corep_catalog::<E>("alternating").unwrap();
        let m = coproduct(&alt.matrix[0][0]);
        assert_eq!(m[0][0], E::one());
        assert_eq!(m[1][1], E::one());
        assert_eq!(m[0][1], -E::one());
        let sum = alt.direct_sum(&corep_catalog("trivial").unwrap());
        assert!(sum.satisfies_corep_laws() && sum.is_unitary());
        assert!(corep_catalog::<E>("spin").is_err());
        let bad = Corep {
            name: "bad".into(),
            matrix: vec![vec![g(0, 1)]],
        };
        assert!(!bad.satisfies_corep_laws());
    }
}
