//! The convolution gauge group: grade-preserving, Ad-covariant,
//! convolution-invertible maps `𝔣: Γ^∧ → Ω•(M⊗G)`, and their action
//! `F_𝔣 = m∘(id⊗𝔣)∘Ψ` on connections and sections.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::algebra::{keys_of_degree, Basis, Kind, Tensor};
use crate::associated_qvb::Section;
use crate::base_calculus::{BaseForm, Side};
use crate::bundle_calculus::{self as bundle, Qpc, TotalForm};
use crate::calibration::Calibration;
use crate::error::{Error, Result};
use crate::group_hopf::{self as grp, GroupForm, GrpElt};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Images of the six basis forms of `Γ^∧`, in [`Basis::all`] order.
#[derive(Clone, PartialEq)]
pub struct GaugeMap<S> {
    images: Vec<TotalForm<S>>,
}

impl<S: Scalar> std::fmt::Debug for GaugeMap<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.images).finish()
    }
}

fn slot(b: Basis) -> usize {
    (2 * b.degree + b.idx) as usize
}

fn total_one<S: Scalar>() -> TotalForm<S> {
    bundle::horizontal(&BaseForm::one(), &GrpElt::unit())
}

impl<S: Scalar> GaugeMap<S> {
    /// Checks `𝔣(𝟙) = 𝟙`, grading and Ad-covariance.
    pub fn from_images(images: Vec<TotalForm<S>>, cal: &Calibration) -> Result<Self> {
        let f = Self::unchecked(images)?;
        f.validate(cal)?;
        Ok(f)
    }

    fn unchecked(images: Vec<TotalForm<S>>) -> Result<Self> {
        if images.len() != 6 {
            return Err(Error::NotGauge(format!("expected 6 images, got {}", images.len())));
        }
        for (b, img) in Basis::all().zip(&images) {
            if img.kinds() != bundle::total_kinds().as_slice() {
                return Err(Error::NotGauge("images must be total forms".into()));
            }
            if img.degree().is_some_and(|d| d != b.degree) {
                return Err(Error::NotGauge(format!("image of degree-{} form is not homogeneous", b.degree)));
            }
        }
        Ok(GaugeMap { images })
    }

    /// `θ ↦ comp(θ)⊗𝟙`, given the base components per degree.
    pub fn from_base_forms(forms: [[BaseForm<S>; 2]; 3], cal: &Calibration) -> Result<Self> {
        let images = forms
            .iter()
            .flat_map(|deg| deg.iter().map(|b| bundle::horizontal(b, &GrpElt::unit())))
            .collect();
        Self::from_images(images, cal)
    }

    fn from_scalars(c0: S, c1: S) -> Self {
        let one = total_one::<S>();
        let zero = |d: u8| BaseForm::<S>::zero(d);
        let h = |b: BaseForm<S>| bundle::horizontal(&b, &GrpElt::unit());
        GaugeMap {
            images: vec![
                one.scale(&c0),
                one.scale(&c1),
                h(zero(1)),
                h(zero(1)),
                h(zero(2)),
                h(zero(2)),
            ],
        }
    }

    /// Convolution unit `𝟙ε`.
    pub fn unit() -> Self {
        Self::from_scalars(S::one(), S::zero())
    }

    /// The group element `σ`: `Δ₀ ↦ 0`, `Δ₁ ↦ 𝟙`.
    pub fn sigma() -> Self {
        Self::from_scalars(S::zero(), S::one())
    }

    /// `𝔣(𝟙^alt) = c·𝟙`, `𝔣(𝟙) = 𝟙`; for `|c| = 1` this is the `e^{it}` family.
    pub fn phase(c: S) -> Self {
        let half = S::ratio(1, 2);
        Self::from_scalars(
            half.clone() * (S::one() + c.clone()),
            half * (S::one() - c),
        )
    }

    pub fn image(&self, b: Basis) -> &TotalForm<S> {
        &self.images[slot(b)]
    }

    /// `𝔣(θ)` for a dense group form.
    pub fn apply(&self, theta: &GroupForm<S>) -> TotalForm<S> {
        let mut out = Tensor::zero(bundle::total_kinds());
        if theta.degree > 2 {
            return out;
        }
        for (idx, c) in theta.c.iter().enumerate() {
            out = out.add(&self.image(Basis::new(theta.degree, idx as u8)).scale(c));
        }
        out
    }

    pub fn validate(&self, cal: &Calibration) -> Result<()> {
        if self.apply(&GrpElt::unit().to_form()) != total_one() {
            return Err(Error::NotGauge("𝔣(𝟙) ≠ 𝟙".into()));
        }
        for b in Basis::all() {
            let theta = GroupForm::basis(b.degree, b.idx as usize);
            let lhs = bundle::psi(self.image(b), cal);
            let ad = grp::ad_coaction(&theta, cal);
            let rhs = ad.map_slot(0, |x| self.image(x).clone());
            if lhs != rhs {
                return Err(Error::NotGauge(format!("Ad-covariance fails on {b:?}")));
            }
        }
        Ok(())
    }

    /// Coefficient matrix of degree `k`: one row per basis form, columns in
    /// [`keys_of_degree`] order.
    pub fn coefficient_matrix(&self, k: u8) -> Vec<Vec<S>> {
        let keys = keys_of_degree(&bundle::total_kinds(), k);
        (0..2u8)
            .map(|idx| {
                let img = self.image(Basis::new(k, idx));
                keys.iter().map(|key| img.coefficient(key)).collect()
            })
            .collect()
    }
}

impl<S: Scalar + Serialize> Serialize for GaugeMap<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        let mut st = s.serialize_struct("GaugeMap", 3)?;
        st.serialize_field("degree0", &self.coefficient_matrix(0))?;
        st.serialize_field("degree1", &self.coefficient_matrix(1))?;
        st.serialize_field("degree2", &self.coefficient_matrix(2))?;
        st.end()
    }
}

/// `(𝔣₁∗𝔣₂)(θ) = 𝔣₁(θ⁽¹⁾)𝔣₂(θ⁽²⁾)` over `φ̂(θ)`.
pub fn convolve<S: Scalar>(f1: &GaugeMap<S>, f2: &GaugeMap<S>, cal: &Calibration) -> GaugeMap<S> {
    let images = Basis::all()
        .map(|b| {
            let phi = grp::coproduct_hat(&GroupForm::basis(b.degree, b.idx as usize), cal);
            let mut out = Tensor::zero(bundle::total_kinds());
            for (key, c) in phi.terms() {
                let term = f1.image(key[0]).mul(f2.image(key[1]), cal).scale(c);
                out = out.add(&term);
            }
            out
        })
        .collect();
    GaugeMap { images }
}

fn counit_image<S: Scalar>(b: Basis) -> TotalForm<S> {
    if b == Basis::new(0, 0) {
        total_one()
    } else {
        Tensor::zero(bundle::total_kinds())
    }
}

/// Solve `𝔣∗𝔤 = 𝟙ε` for the 48 coefficients of `𝔤`, then confirm
/// `𝔤∗𝔣 = 𝟙ε`.
pub fn conv_inverse<S: Scalar>(f: &GaugeMap<S>, cal: &Calibration) -> Result<GaugeMap<S>> {
    let kinds = bundle::total_kinds();
    // unknowns: coefficient of key in g(b), for every basis b
    let mut unknowns: Vec<(Basis, Vec<Basis>)> = Vec::new();
    for b in Basis::all() {
        for key in keys_of_degree(&kinds, b.degree) {
            unknowns.push((b, key));
        }
    }
    let n = unknowns.len();
    let index = |b: Basis, key: &[Basis]| {
        unknowns
            .iter()
            .position(|(ub, uk)| *ub == b && uk.as_slice() == key)
            .expect("key of matching degree")
    };
    let mut a = Matrix::<S>::zeros(n, n);
    let mut rhs = Matrix::<S>::zeros(n, 1);
    for b in Basis::all() {
        let phi = grp::coproduct_hat(&GroupForm::<S>::basis(b.degree, b.idx as usize), cal);
        for (key, c) in phi.terms() {
            let left = f.image(key[0]);
            // f(g1)·g(g2), linear in the unknown coefficients of g(g2)
            for k2 in keys_of_degree(&kinds, key[1].degree) {
                let col = index(key[1], &k2);
                let unit = Tensor::term(kinds.clone(), k2.clone(), S::one());
                for (row_key, v) in left.mul(&unit, cal).terms() {
                    let row = index(b, row_key);
                    a[(row, col)] = a[(row, col)].clone() + c.clone() * v.clone();
                }
            }
        }
        for (key, v) in counit_image::<S>(b).terms() {
            let row = index(b, key);
            rhs[(row, 0)] = v.clone();
        }
    }
    let x = a.solve(&rhs).map_err(|e| match e {
        Error::Singular => Error::NotConvolutionInvertible,
        other => other,
    })?;
    let images = Basis::all()
        .map(|b| {
            let mut t = Tensor::zero(kinds.clone());
            for key in keys_of_degree(&kinds, b.degree) {
                t.add_term(key.clone(), x[(index(b, &key), 0)].clone());
            }
            t
        })
        .collect();
    let g = GaugeMap { images };
    let unit = GaugeMap::unit();
    if convolve(f, &g, cal) != unit || convolve(&g, f, cal) != unit {
        return Err(Error::NotConvolutionInvertible);
    }
    g.validate(cal)?;
    Ok(g)
}

/// `F_𝔣(x) = Σ x⁽⁰⁾𝔣(x⁽¹⁾)` over `Ψ(x)`.
pub fn f_action<S: Scalar>(f: &GaugeMap<S>, x: &TotalForm<S>, cal: &Calibration) -> TotalForm<S> {
    let kinds = bundle::total_kinds();
    let mut out = Tensor::zero(kinds.clone());
    for (key, c) in bundle::psi(x, cal).terms() {
        let head = Tensor::term(kinds.clone(), key[..2].to_vec(), c.clone());
        out = out.add(&head.mul(f.image(key[2]), cal));
    }
    out
}

/// The connection `F_𝔣∘ω`.
pub fn gauge_action_qpc<S: Scalar>(f: &GaugeMap<S>, omega: &Qpc<S>, cal: &Calibration) -> Result<Qpc<S>> {
    let image = f_action(f, &bundle::connection_form(omega), cal);
    let mu_part = image.sub(&bundle::vertical(&grp::sigma()));
    let mu = bundle::strip(&mu_part, &GrpElt::unit(), 1).map_err(|_| Error::NotConnection)?;
    Ok(Qpc::from_mu(&mu))
}

/// `F_𝔣∘T` on left sections, `∗∘F_𝔣∘∗∘T` on right ones.
pub fn gauge_action_section<S: Scalar>(f: &GaugeMap<S>, t: &Section<S>, side: Side, cal: &Calibration) -> Result<Section<S>> {
    let x = t.element();
    let out = match side {
        Side::Left => f_action(f, &x, cal),
        Side::Right => f_action(f, &x.star(cal), cal).star(cal),
    };
    let p = bundle::strip(&out, &t.corep.coefficient(), 0)?;
    Ok(Section::from_form(t.corep, &p))
}

/// `F_𝔣∘ω^triv = ω^triv`.
pub fn in_gg_ym<S: Scalar>(f: &GaugeMap<S>, cal: &Calibration) -> bool {
    matches!(gauge_action_qpc(f, &Qpc::triv(), cal), Ok(w) if w == Qpc::triv())
}

/// All total-form keys of a shape, as used by the coefficient matrices.
pub fn key_count(degree: u8) -> usize {
    keys_of_degree(&[Kind::Base, Kind::Group], degree).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_hopf::CorepKind;
    use crate::scalar::ExactC;

    type E = ExactC;
    const CAL: Calibration = Calibration::SELECTED;

    fn q(s: &str) -> E {
        s.parse().unwrap()
    }

    #[test]
    fn key_counts() {
        assert_eq!([key_count(0), key_count(1), key_count(2)], [4, 8, 12]);
    }

    #[test]
    fn named_elements_are_gauge_maps() {
        for f in [GaugeMap::<E>::unit(), GaugeMap::sigma(), GaugeMap::phase(q("3/5+4/5i"))] {
            f.validate(&CAL).unwrap();
        }
    }

    #[test]
    fn non_covariant_map_is_rejected() {
        let mut images: Vec<_> = GaugeMap::<E>::unit().images;
        images[2] = bundle::vertical(&grp::sigma());
        assert!(GaugeMap::from_images(images, &CAL).is_err());
    }

    #[test]
    fn sigma_squares_to_the_unit() {
        let s = GaugeMap::<E>::sigma();
        assert_eq!(convolve(&s, &s, &CAL), GaugeMap::unit());
        assert_eq!(convolve(&GaugeMap::unit(), &s, &CAL), s);
        assert_eq!(conv_inverse(&s, &CAL).unwrap(), s);
        assert_eq!(conv_inverse(&GaugeMap::<E>::unit(), &CAL).unwrap(), GaugeMap::unit());
    }

    #[test]
    fn degenerate_map_is_not_invertible() {
        let half = GaugeMap::<E>::from_scalars(q("1/2"), q("1/2"));
        assert_eq!(conv_inverse(&half, &CAL).unwrap_err(), Error::NotConvolutionInvertible);
    }

    #[test]
    fn phase_inverse_is_the_conjugate_phase() {
        let c = q("3/5+4/5i");
        let f = GaugeMap::phase(c.clone());
        assert_eq!(conv_inverse(&f, &CAL).unwrap(), GaugeMap::phase(c.conj()));
    }

    #[test]
    fn shift_by_a_one_form() {
        let nu = BaseForm::new(1, q("1"), q("-i"));
        let z = |d| BaseForm::<E>::zero(d);
        let f = GaugeMap::from_base_forms(
            [[BaseForm::one(), z(0)], [nu.clone(), z(1)], [z(2), z(2)]],
            &CAL,
        )
        .unwrap();
        assert!(f.validate(&CAL).is_ok());
        let w = Qpc::new(q("2"), q("i"));
        let moved = gauge_action_qpc(&f, &w, &CAL).unwrap();
        assert_eq!(moved.mu(), w.mu() + nu);
        assert!(!in_gg_ym(&f, &CAL));
    }

    #[test]
    fn gauge_actions() {
        let w = Qpc::new(q("1/2"), q("i"));
        assert_eq!(gauge_action_qpc(&GaugeMap::unit(), &w, &CAL).unwrap(), w);
        assert_eq!(gauge_action_qpc(&GaugeMap::<E>::sigma(), &Qpc::triv(), &CAL).unwrap(), Qpc::triv());
        assert!(in_gg_ym(&GaugeMap::<E>::sigma(), &CAL));
        assert!(in_gg_ym(&GaugeMap::<E>::unit(), &CAL));

        let c = q("i");
        let t = Section::new(CorepKind::Alternating, q("2"), q("1-i"));
        let f = GaugeMap::phase(c.clone());
        let left = gauge_action_section(&f, &t, Side::Left, &CAL).unwrap();
        assert_eq!(left.form(), t.form().scale(&c));
        let right = gauge_action_section(&f, &t, Side::Right, &CAL).unwrap();
        assert_eq!(right.form(), t.form().scale(&c.conj()));
        let triv = Section::new(CorepKind::Trivial, q("2"), q("1"));
        assert_eq!(gauge_action_section(&f, &triv, Side::Left, &CAL).unwrap(), triv);
    }

    #[test]
    fn serializes_as_three_matrices() {
        let v = serde_json::to_value(GaugeMap::<E>::sigma()).unwrap();
        assert_eq!(v["degree0"].as_array().unwrap().len(), 2);
        assert_eq!(v["degree0"][0].as_array().unwrap().len(), 4);
        assert_eq!(v["degree1"][0].as_array().unwrap().len(), 8);
        assert_eq!(v["degree2"][1].as_array().unwrap().len(), 12);
    }
}
