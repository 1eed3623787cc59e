//! Graded tensor products of the base and group calculi, truncated at
//! total degree 2.
//!
//! An element is a sparse sum of pure tensors of basis forms. The product
//! carries the Koszul sign `(a₁⊗…⊗a_n)(b₁⊗…⊗b_n) = ±(a₁b₁⊗…⊗a_nb_n)` with
//! exponent `Σ_{i>j} |a_i||b_j|`, and `d` acts as a graded derivation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::base_calculus::{self as base, BaseForm};
use crate::calibration::{Calibration, TensorStar};
use crate::group_hopf::{self as grp, GroupForm};
use crate::scalar::Scalar;

/// Which calculus a tensor leg belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Base,
    Group,
}

/// Basis form of a single leg: component `idx` in degree `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Basis {
    pub degree: u8,
    pub idx: u8,
}

impl Basis {
    pub const fn new(degree: u8, idx: u8) -> Self {
        Basis { degree, idx }
    }

    /// All six basis forms of degree ≤ 2.
    pub fn all() -> impl Iterator<Item = Basis> {
        (0..3u8).flat_map(|d| (0..2u8).map(move |i| Basis::new(d, i)))
    }
}

/// A dense form of either calculus.
#[derive(Clone, Debug, PartialEq)]
pub enum Factor<S> {
    Base(BaseForm<S>),
    Group(GroupForm<S>),
}

impl<S: Scalar> Factor<S> {
    pub fn kind(&self) -> Kind {
        match self {
            Factor::Base(_) => Kind::Base,
            Factor::Group(_) => Kind::Group,
        }
    }

    pub fn basis(kind: Kind, b: Basis) -> Self {
        match kind {
            Kind::Base => Factor::Base(BaseForm::basis(b.degree, b.idx as usize)),
            Kind::Group => Factor::Group(GroupForm::basis(b.degree, b.idx as usize)),
        }
    }

    fn degree_and_components(&self) -> (u8, &[S; 2]) {
        match self {
            Factor::Base(f) => (f.degree, &f.c),
            Factor::Group(f) => (f.degree, &f.c),
        }
    }

    pub fn terms(&self) -> Vec<(Basis, S)> {
        let (deg, c) = self.degree_and_components();
        if deg > 2 {
            return Vec::new();
        }
        c.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (Basis::new(deg, i as u8), x.clone()))
            .collect()
    }
}

fn leg_mul<S: Scalar>(kind: Kind, x: Basis, y: Basis, cal: &Calibration) -> Vec<(Basis, S)> {
    match kind {
        Kind::Base => Factor::Base(base::mul(
            &BaseForm::basis(x.degree, x.idx as usize),
            &BaseForm::basis(y.degree, y.idx as usize),
            cal,
        ))
        .terms(),
        Kind::Group => Factor::Group(grp::mul_group(
            &GroupForm::basis(x.degree, x.idx as usize),
            &GroupForm::basis(y.degree, y.idx as usize),
        ))
        .terms(),
    }
}

fn leg_d<S: Scalar>(kind: Kind, x: Basis) -> Vec<(Basis, S)> {
    match kind {
        Kind::Base => Factor::Base(base::d(&BaseForm::basis(x.degree, x.idx as usize))).terms(),
        Kind::Group => {
            Factor::Group(grp::d_group(&GroupForm::basis(x.degree, x.idx as usize))).terms()
        }
    }
}

fn leg_star<S: Scalar>(kind: Kind, x: Basis) -> Vec<(Basis, S)> {
    match kind {
        Kind::Base => Factor::Base(base::star(&BaseForm::basis(x.degree, x.idx as usize))).terms(),
        Kind::Group => {
            Factor::Group(grp::star_group(&GroupForm::basis(x.degree, x.idx as usize))).terms()
        }
    }
}

fn sign<S: Scalar>(odd: bool) -> S {
    if odd {
        -S::one()
    } else {
        S::one()
    }
}

pub const MAX_DEGREE: u8 = 2;

#[derive(Clone, PartialEq)]
pub struct Tensor<S> {
    kinds: Vec<Kind>,
    terms: BTreeMap<Vec<Basis>, S>,
}

impl<S: Scalar> Tensor<S> {
    pub fn zero(kinds: Vec<Kind>) -> Self {
        Tensor {
            kinds,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(kinds: Vec<Kind>, key: Vec<Basis>, coeff: S) -> Self {
        assert_eq!(kinds.len(), key.len());
        let mut t = Self::zero(kinds);
        t.add_term(key, coeff);
        t
    }

    /// Pure tensor `f₁⊗…⊗f_n` of dense forms.
    pub fn from_factors(factors: &[Factor<S>]) -> Self {
        let kinds = factors.iter().map(Factor::kind).collect();
        let mut out = Self::zero(kinds);
        let mut partial: Vec<(Vec<Basis>, S)> = vec![(Vec::new(), S::one())];
        for f in factors {
            let legs = f.terms();
            partial = partial
                .into_iter()
                .flat_map(|(key, c)| {
                    legs.iter().map(move |(b, x)| {
                        let mut k = key.clone();
                        k.push(*b);
                        (k, c.clone() * x.clone())
                    })
                })
                .collect();
        }
        for (key, c) in partial {
            out.add_term(key, c);
        }
        out
    }

    pub fn kinds(&self) -> &[Kind] {
        &self.kinds
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Basis>, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &[Basis]) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<Basis>, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        if key.iter().map(|b| b.degree).sum::<u8>() > MAX_DEGREE {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(S::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.kinds, other.kinds, "adding tensors of different shapes");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.kinds.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), s.clone() * v.clone());
        }
        out
    }

    /// Total degree of every term, if homogeneous.
    pub fn degree(&self) -> Option<u8> {
        let mut degs = self.terms.keys().map(|k| k.iter().map(|b| b.degree).sum::<u8>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn mul(&self, other: &Self, cal: &Calibration) -> Self {
        assert_eq!(self.kinds, other.kinds, "multiplying tensors of different shapes");
        let mut out = Self::zero(self.kinds.clone());
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut exponent = 0u32;
                for i in 0..ka.len() {
                    for kb_j in kb.iter().take(i) {
                        exponent += (ka[i].degree * kb_j.degree) as u32;
                    }
                }
                let mut partial: Vec<(Vec<Basis>, S)> =
                    vec![(Vec::new(), sign::<S>(exponent % 2 == 1) * va.clone() * vb.clone())];
                for (slot, kind) in self.kinds.iter().enumerate() {
                    let prods = leg_mul::<S>(*kind, ka[slot], kb[slot], cal);
                    partial = partial
                        .into_iter()
                        .flat_map(|(key, c)| {
                            prods.iter().map(move |(b, x)| {
                                let mut k = key.clone();
                                k.push(*b);
                                (k, c.clone() * x.clone())
                            })
                        })
                        .collect();
                }
                for (key, c) in partial {
                    out.add_term(key, c);
                }
            }
        }
        out
    }

    pub fn d(&self) -> Self {
        let mut out = Self::zero(self.kinds.clone());
        for (key, v) in &self.terms {
            let mut before = 0u32;
            for (slot, kind) in self.kinds.iter().enumerate() {
                let s = sign::<S>(before % 2 == 1);
                for (b, x) in leg_d::<S>(*kind, key[slot]) {
                    let mut k = key.clone();
                    k[slot] = b;
                    out.add_term(k, s.clone() * v.clone() * x);
                }
                before += key[slot].degree as u32;
            }
        }
        out
    }

    pub fn star(&self, cal: &Calibration) -> Self {
        let mut out = Self::zero(self.kinds.clone());
        for (key, v) in &self.terms {
            let mut partial: Vec<(Vec<Basis>, S)> = vec![(Vec::new(), v.conj())];
            for (slot, kind) in self.kinds.iter().enumerate() {
                let legs = leg_star::<S>(*kind, key[slot]);
                partial = partial
                    .into_iter()
                    .flat_map(|(k0, c)| {
                        legs.iter().map(move |(b, x)| {
                            let mut k = k0.clone();
                            k.push(*b);
                            (k, c.clone() * x.clone())
                        })
                    })
                    .collect();
            }
            let koszul = match cal.tensor_star {
                TensorStar::Plain => 0,
                TensorStar::Koszul => {
                    let mut e = 0u32;
                    for i in 0..key.len() {
                        for j in (i + 1)..key.len() {
                            e += (key[i].degree * key[j].degree) as u32;
                        }
                    }
                    e
                }
            };
            let s = sign::<S>(koszul % 2 == 1);
            for (k, c) in partial {
                out.add_term(k, s.clone() * c);
            }
        }
        out
    }

    /// Juxtaposition `self ⊗ other` (no sign: nothing is moved past anything).
    pub fn tensor(&self, other: &Self) -> Self {
        let mut kinds = self.kinds.clone();
        kinds.extend_from_slice(&other.kinds);
        let mut out = Self::zero(kinds);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                out.add_term(k, va.clone() * vb.clone());
            }
        }
        out
    }

    /// Apply a degree-preserving linear map to the leg at `slot`, splicing its
    /// output legs in place.
    pub fn map_slot(&self, slot: usize, f: impl Fn(Basis) -> Tensor<S>) -> Self {
        let mut cache: BTreeMap<Basis, Tensor<S>> = BTreeMap::new();
        let mut kinds_out: Option<Vec<Kind>> = None;
        let mut pieces = Vec::new();
        for (key, v) in &self.terms {
            let image = cache.entry(key[slot]).or_insert_with(|| f(key[slot])).clone();
            let mut kinds = self.kinds[..slot].to_vec();
            kinds.extend_from_slice(image.kinds());
            kinds.extend_from_slice(&self.kinds[slot + 1..]);
            kinds_out.get_or_insert_with(|| kinds.clone());
            for (ik, iv) in image.terms() {
                let mut k = key[..slot].to_vec();
                k.extend_from_slice(ik);
                k.extend_from_slice(&key[slot + 1..]);
                pieces.push((k, v.clone() * iv.clone()));
            }
        }
        let kinds = kinds_out.unwrap_or_else(|| {
            let image = f(Basis::new(0, 0));
            let mut kinds = self.kinds[..slot].to_vec();
            kinds.extend_from_slice(image.kinds());
            kinds.extend_from_slice(&self.kinds[slot + 1..]);
            kinds
        });
        let mut out = Self::zero(kinds);
        for (k, v) in pieces {
            out.add_term(k, v);
        }
        out
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.terms
            .values()
            .map(|v| v.abs_sq_f64().sqrt())
            .fold(0.0, f64::max)
    }
}

impl<S: Scalar> fmt::Debug for Tensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| {
                let legs: Vec<String> = k
                    .iter()
                    .zip(&self.kinds)
                    .map(|(b, kind)| {
                        let tag = match kind {
                            Kind::Base => 'm',
                            Kind::Group => 'g',
                        };
                        format!("{tag}{}.{}", b.degree, b.idx)
                    })
                    .collect();
                format!("({v:?}){}", legs.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Enumerate all keys of the given shape with total degree `degree`.
pub fn keys_of_degree(kinds: &[Kind], degree: u8) -> Vec<Vec<Basis>> {
    let mut out = vec![Vec::new()];
    for _ in kinds {
        out = out
            .into_iter()
            .flat_map(|k: Vec<Basis>| {
                Basis::all().map(move |b| {
                    let mut k2 = k.clone();
                    k2.push(b);
                    k2
                })
            })
            .collect();
    }
    out.retain(|k| k.iter().map(|b| b.degree).sum::<u8>() == degree);
    out
}
