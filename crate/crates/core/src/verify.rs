//! Invariant suites and the calibration gate.
//!
//! Every law is checked with exact arithmetic, exhaustively over basis
//! elements where the space is finite and on seeded random samples otherwise.

use serde::Serialize;

use crate::algebra::{keys_of_degree, Kind, Tensor};
use crate::associated_qvb::{self as qvb, Section, VForm};
use crate::base_calculus::{self as base, BaseForm, Side};
use crate::bundle_calculus::{self as bundle, Qpc, TotalForm};
use crate::calibration::Calibration;
use crate::field_theory::{self as ft, Potential};
use crate::gauge_group::{self as gg, GaugeMap};
use crate::group_hopf::{self as grp, CorepKind, GroupForm, GrpElt};
use crate::sample;
use crate::scalar::{ExactC, Scalar};
use crate::solver;

type E = ExactC;

pub const SUITES: [&str; 6] = ["calculus", "hopf", "bundle", "qvb", "gauge", "field"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    /// Number of instances checked, or the first counterexample.
    pub detail: String,
}

struct Laws {
    suite: &'static str,
    out: Vec<LawResult>,
}

impl Laws {
    fn new(suite: &'static str) -> Self {
        Laws { suite, out: Vec::new() }
    }

    /// Records a law checked over `cases`; the first failing case is kept.
    fn all<T>(&mut self, name: &str, cases: impl IntoIterator<Item = T>, check: impl Fn(&T) -> bool)
    where
        T: std::fmt::Debug,
    {
        let mut n = 0;
        for c in cases {
            n += 1;
            if !check(&c) {
                self.push(name, false, format!("counterexample: {c:?}"));
                return;
            }
        }
        self.push(name, true, format!("{n} cases"));
    }

    fn one(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.push(name, passed, detail.into());
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.out.push(LawResult {
            suite: self.suite.into(),
            name: name.into(),
            passed,
            detail,
        });
    }
}

fn q(s: &str) -> E {
    s.parse().expect("literal")
}

fn sign(odd: bool) -> E {
    if odd {
        -E::one()
    } else {
        E::one()
    }
}

fn base_basis() -> Vec<BaseForm<E>> {
    (0..=2).flat_map(BaseForm::basis_of_degree).collect()
}

fn group_basis() -> Vec<GroupForm<E>> {
    (0..=2).flat_map(GroupForm::basis_of_degree).collect()
}

fn total_basis() -> Vec<TotalForm<E>> {
    let kinds = bundle::total_kinds();
    // forms are tracked up to total degree MAX_DEGREE
    (0..=crate::algebra::MAX_DEGREE)
        .flat_map(|d| keys_of_degree(&kinds, d))
        .map(|k| Tensor::term(kinds.clone(), k, E::one()))
        .collect()
}

fn pairs<T: Clone>(v: &[T]) -> Vec<(T, T)> {
    v.iter().flat_map(|a| v.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

fn random_qpcs(seed: u64, n: usize) -> Vec<Qpc<E>> {
    let mut rng = sample::rng(seed);
    (0..n).map(|_| sample::qpc(&mut rng)).collect()
}

fn hermitian_qpcs(seed: u64, n: usize) -> Vec<Qpc<E>> {
    let mut rng = sample::rng(seed);
    (0..n)
        .map(|_| {
            let l = sample::scalar(&mut rng);
            Qpc::new(l.clone(), -l.conj())
        })
        .collect()
}

fn random_sections(seed: u64, n: usize, corep: CorepKind) -> Vec<Section<E>> {
    let mut rng = sample::rng(seed);
    (0..n)
        .map(|_| Section::new(corep, sample::scalar(&mut rng), sample::scalar(&mut rng)))
        .collect()
}

/// Flat points `(λ₀, −λ₀/(1+2iλ₀))` for ten fixed `λ₀`.
pub fn sample_flat_points() -> Vec<Qpc<E>> {
    let l0 = ["1", "-1", "2", "1/2", "i", "-i", "1+i", "3-2i", "-1/3+1/4i", "5/2"];
    solver::enumerate_flat(&l0.map(q))
        .into_iter()
        .map(|r| r.expect("no degenerate samples"))
        .collect()
}

pub fn calculus(cal: &Calibration) -> Vec<LawResult> {
    let mut l = Laws::new("calculus");
    let basis = base_basis();
    let bp = pairs(&basis);
    l.all("d∘d = 0", basis.clone(), |a| base::d(&base::d(a)).is_zero());
    l.all("graded Leibniz", bp.clone(), |(a, b)| {
        let lhs = base::d(&base::mul(a, b, cal));
        let rhs = base::mul(&base::d(a), b, cal) + base::mul(a, &base::d(b), cal).scale(&sign(a.degree % 2 == 1));
        lhs.is_zero() && rhs.is_zero() || lhs == rhs
    });
    l.all("(ab)* = (-1)^{|a||b|} b*a*", bp.clone(), |(a, b)| {
        let lhs = base::star(&base::mul(a, b, cal));
        let rhs = base::mul(&base::star(b), &base::star(a), cal).scale(&sign(a.degree * b.degree % 2 == 1));
        lhs.is_zero() && rhs.is_zero() || lhs == rhs
    });
    l.all("(da)* = d(a*)", basis.clone(), |a| base::star(&base::d(a)) == base::d(&base::star(a)));
    l.all("a** = a", basis.clone(), |a| base::star(&base::star(a)) == *a);
    let mut adj_cases: Vec<(Side, BaseForm<E>, BaseForm<E>)> = Vec::new();
    for s in Side::BOTH {
        for k in 0..2u8 {
            for e in BaseForm::<E>::basis_of_degree(k) {
                for h in BaseForm::<E>::basis_of_degree(k + 1) {
                    adj_cases.push((s, h, e.clone()));
                }
            }
            // complex coefficients catch conjugate-linear slips
            adj_cases.push((s, BaseForm::new(k + 1, q("2-i"), q("1/2i")), BaseForm::new(k, q("1+2i"), q("-1/3+i"))));
        }
    }
    l.all("<h|d e> = <d* h|e>", adj_cases, |(s, h, e)| {
        base::inner(h, &base::d(e), *s, cal).unwrap() == base::inner(&base::codiff(h, *s), e, *s, cal).unwrap()
    });
    let cd: Vec<(Side, BaseForm<E>)> = Side::BOTH
        .iter()
        .flat_map(|&s| (1..=2u8).flat_map(move |k| BaseForm::basis_of_degree(k).map(|e| (s, e))))
        .collect();
    l.all("codiff = ⋆d⋆", cd.clone(), |(s, e)| base::codiff(e, *s) == base::codiff_via_hodge(e, *s, cal));
    l.all("⋆⁻¹∘⋆ = id", basis.iter().flat_map(|e| Side::BOTH.map(|s| (s, e.clone()))), |(s, e)| {
        base::hodge_inv(&base::hodge(e, *s, cal), *s, cal) == *e
    });
    l.all("d* = Gram adjoint of d", (0..2u8).flat_map(|k| Side::BOTH.map(|s| (s, k))), |(s, k)| {
        let a = base::operator_matrix(*k, base::d::<E>);
        let b = base::adjoint_matrix(&a, &base::gram(*k, *s, cal), &base::gram(k + 1, *s, cal), *s).unwrap();
        b == base::operator_matrix(k + 1, |x| base::codiff(x, *s))
    });
    l.out
}

pub fn hopf(cal: &Calibration) -> Vec<LawResult> {
    let mut l = Laws::new("hopf");
    let deltas = [GrpElt::<E>::delta(0), GrpElt::delta(1)];
    let apply = |m: &[[E; 2]; 2], f: &dyn Fn(usize, usize) -> GrpElt<E>| {
        let mut out = GrpElt::new(E::zero(), E::zero());
        for a in 0..2 {
            for b in 0..2 {
                let t = f(a, b);
                out = GrpElt::new(
                    out.c[0].clone() + m[a][b].clone() * t.c[0].clone(),
                    out.c[1].clone() + m[a][b].clone() * t.c[1].clone(),
                );
            }
        }
        out
    };
    l.all("m(κ⊗id)φ = ε·1 = m(id⊗κ)φ", deltas.clone(), |g| {
        let m = grp::coproduct(g);
        let unit = GrpElt::<E>::unit();
        let eps = grp::counit(g);
        let want = GrpElt::new(eps.clone() * unit.c[0].clone(), eps * unit.c[1].clone());
        let left = apply(&m, &|a, b| grp::antipode(&GrpElt::delta(a)).mul(&GrpElt::delta(b)));
        let right = apply(&m, &|a, b| GrpElt::delta(a).mul(&grp::antipode(&GrpElt::delta(b))));
        left == want && right == want
    });
    l.all("(ε⊗id)φ = id = (id⊗ε)φ", deltas.clone(), |g| {
        let m = grp::coproduct(g);
        let left = apply(&m, &|a, b| {
            let e = grp::counit(&GrpElt::<E>::delta(a));
            GrpElt::new(e.clone() * GrpElt::<E>::delta(b).c[0].clone(), e * GrpElt::<E>::delta(b).c[1].clone())
        });
        let right = apply(&m, &|a, b| {
            let e = grp::counit(&GrpElt::<E>::delta(b));
            GrpElt::new(e.clone() * GrpElt::<E>::delta(a).c[0].clone(), e * GrpElt::<E>::delta(a).c[1].clone())
        });
        left == *g && right == *g
    });
    l.all("(φ⊗id)φ = (id⊗φ)φ", deltas.clone(), |g| {
        let m = grp::coproduct(g);
        let z = || [[E::zero(), E::zero()], [E::zero(), E::zero()]];
        let mut lhs: [[[E; 2]; 2]; 2] = [z(), z()];
        let mut rhs = lhs.clone();
        for a in 0..2 {
            for b in 0..2 {
                let ma = grp::coproduct(&GrpElt::<E>::delta(a));
                let mb = grp::coproduct(&GrpElt::<E>::delta(b));
                for x in 0..2 {
                    for y in 0..2 {
                        lhs[x][y][b] = lhs[x][y][b].clone() + m[a][b].clone() * ma[x][y].clone();
                        rhs[a][x][y] = rhs[a][x][y].clone() + m[a][b].clone() * mb[x][y].clone();
                    }
                }
            }
        }
        lhs == rhs
    });
    let gb = group_basis();
    let gp = pairs(&gb);
    l.all("Γ^∧: d∘d = 0", gb.clone(), |a| grp::d_group(&grp::d_group(a)).is_zero());
    l.all("Γ^∧: graded Leibniz", gp.clone(), |(a, b)| {
        let lhs = grp::d_group(&grp::mul_group(a, b));
        let rhs_a = grp::mul_group(&grp::d_group(a), b);
        let rhs_b = grp::mul_group(a, &grp::d_group(b)).scale(&sign(a.degree % 2 == 1));
        if lhs.degree > 2 {
            return true;
        }
        lhs == rhs_a.add(&rhs_b)
    });
    l.all("Γ^∧: (ab)* = (-1)^{|a||b|} b*a*", gp.clone(), |(a, b)| {
        let lhs = grp::star_group(&grp::mul_group(a, b));
        let rhs = grp::mul_group(&grp::star_group(b), &grp::star_group(a)).scale(&sign(a.degree * b.degree % 2 == 1));
        lhs == rhs
    });
    l.all("Γ^∧: (dθ)* = d(θ*)", gb.clone(), |a| grp::star_group(&grp::d_group(a)) == grp::d_group(&grp::star_group(a)));
    l.all("φ̂ is multiplicative", gp.clone(), |(a, b)| {
        let ab = grp::mul_group(a, b);
        if ab.degree > 2 {
            return true;
        }
        grp::coproduct_hat(&ab, cal) == grp::coproduct_hat(a, cal).mul(&grp::coproduct_hat(b, cal), cal)
    });
    l.all("φ̂ commutes with d", gb.clone(), |a| {
        let da = grp::d_group(a);
        let lhs = if da.degree > 2 {
            Tensor::zero(vec![Kind::Group, Kind::Group])
        } else {
            grp::coproduct_hat(&da, cal)
        };
        lhs == grp::coproduct_hat(a, cal).d()
    });
    l.all("φ̂(ς) = 𝟙⊗ς + ς⊗𝟙", [grp::sigma::<E>()], |s| {
        let one = GrpElt::<E>::unit().to_form();
        let want = Tensor::from_factors(&[crate::algebra::Factor::Group(one.clone()), crate::algebra::Factor::Group(s.clone())])
            .add(&Tensor::from_factors(&[crate::algebra::Factor::Group(s.clone()), crate::algebra::Factor::Group(one)]));
        grp::coproduct_hat(s, cal) == want
    });
    l.all("π lands in span{ς}", deltas.clone().into_iter().chain([GrpElt::alt()]), |g| {
        grp::sigma_coefficient(&grp::germs(g)).is_some()
    });
    l.one(
        "π(Δ₁) = ς, π(Δ₀) = −ς",
        grp::germs(&GrpElt::<E>::delta(1)) == grp::sigma() && grp::germs(&GrpElt::<E>::delta(0)) == grp::sigma().neg(),
        "exact",
    );
    l.all("catalog coreps satisfy the corep laws and are unitary", ["trivial", "alternating"], |n| {
        let c = grp::corep_catalog::<E>(n).unwrap();
        c.satisfies_corep_laws() && c.is_unitary() && grp::conjugate(&c) == c
    });
    l.out
}

/// `(D^ω⊗id)` on a form of shape `[Base, Group, Group]` with a degree-0
/// middle leg.
fn cov_deriv_tensor_id(omega: &Qpc<E>, t: &Tensor<E>, cal: &Calibration) -> Tensor<E> {
    let kinds = bundle::total_kinds();
    let mut out = Tensor::zero(vec![Kind::Base, Kind::Group, Kind::Group]);
    for (key, c) in t.terms() {
        let head = Tensor::term(kinds.clone(), key[..2].to_vec(), c.clone());
        let tail = Tensor::term(vec![Kind::Group], vec![key[2]], E::one());
        let dh = bundle::cov_deriv(omega, &head, cal).expect("horizontal head");
        out = out.add(&dh.tensor(&tail));
    }
    out
}

fn horizontal_basis() -> Vec<TotalForm<E>> {
    (0..=2u8)
        .flat_map(|k| {
            BaseForm::<E>::basis_of_degree(k)
                .into_iter()
                .flat_map(|e| [GrpElt::delta(0), GrpElt::delta(1)].map(|g| bundle::horizontal(&e, &g)))
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn bundle(cal: &Calibration) -> Vec<LawResult> {
    let mut l = Laws::new("bundle");
    let tb = total_basis();
    let tp = pairs(&tb);
    l.all("d∘d = 0", tb.clone(), |a| a.d().d().is_zero());
    l.all("graded Leibniz", tp.clone(), |(a, b)| {
        let s = sign(a.degree().unwrap() % 2 == 1);
        a.mul(b, cal).d() == a.d().mul(b, cal).add(&a.mul(&b.d(), cal).scale(&s))
    });
    l.all("(xy)* = (-1)^{|x||y|} y*x*", tp.clone(), |(a, b)| {
        let s = sign(a.degree().unwrap() * b.degree().unwrap() % 2 == 1);
        a.mul(b, cal).star(cal) == b.star(cal).mul(&a.star(cal), cal).scale(&s)
    });
    l.all("(dx)* = d(x*)", tb.clone(), |a| a.d().star(cal) == a.star(cal).d());
    l.all("Ψ is multiplicative", tp.clone(), |(a, b)| {
        bundle::psi(&a.mul(b, cal), cal) == bundle::psi(a, cal).mul(&bundle::psi(b, cal), cal)
    });
    l.all("Ψ commutes with d", tb.clone(), |a| bundle::psi(&a.d(), cal) == bundle::psi(a, cal).d());
    let samples = random_qpcs(11, 20);
    l.all("curvature: pipeline = [u,u]", samples.clone(), |w| {
        bundle::curvature(w, cal) == bundle::curvature_closed_form(w)
    });
    l.one(
        "R at ω_YM = [-i/2,-i/2]",
        bundle::curvature(&Qpc::<E>::ym(), cal) == BaseForm::new(2, q("-1/2i"), q("-1/2i")),
        "exact",
    );
    let hb = horizontal_basis();
    let cases: Vec<(Qpc<E>, TotalForm<E>)> = samples
        .iter()
        .take(4)
        .chain([Qpc::ym()].iter())
        .flat_map(|w| hb.iter().map(move |h| (w.clone(), h.clone())))
        .collect();
    l.all("D^ω maps horizontal forms to horizontal forms", cases.clone(), |(w, h)| {
        bundle::cov_deriv(w, h, cal).map(|x| bundle::is_horizontal(&x)).unwrap_or(false)
    });
    l.all("Ψ∘D^ω = (D^ω⊗id)∘Ψ", cases, |(w, h)| {
        let lhs = bundle::psi(&bundle::cov_deriv(w, h, cal).unwrap(), cal);
        lhs == cov_deriv_tensor_id(w, &bundle::psi(h, cal), cal)
    });
    let s_cases: Vec<(Qpc<E>, BaseForm<E>)> = samples
        .iter()
        .take(5)
        .flat_map(|w| base_basis().into_iter().map(move |e| (w.clone(), e)))
        .collect();
    l.all("S^ω: pipeline = 2(μν - (-1)^k νμ)", s_cases, |(w, e)| {
        bundle::s_operator(w, e, cal) == bundle::s_operator_closed_form(w, e, cal)
    });
    l.all("D^{ω_triv} = horizontal part of d", hb, |h| {
        let mut hor = Tensor::zero(bundle::total_kinds());
        for (k, c) in h.d().terms().filter(|(k, _)| k[1].degree == 0) {
            hor.add_term(k.clone(), c.clone());
        }
        bundle::cov_deriv(&Qpc::triv(), h, cal).unwrap() == hor
    });
    l.out
}

pub fn qvb_suite(cal: &Calibration) -> Vec<LawResult> {
    let mut l = Laws::new("qvb");
    let coreps = [CorepKind::Trivial, CorepKind::Alternating];
    l.all("basis sections are morphisms", coreps, |c| {
        let alpha = grp::corep_catalog::<E>(c.name()).unwrap();
        qvb::mor_check(&[Section::<E>::basis(*c).element()], &alpha, cal).unwrap_or(false)
    });
    l.all("⟨T,T⟩ = 1 for the basis section", coreps.iter().flat_map(|c| Side::BOTH.map(|s| (*c, s))), |(c, s)| {
        let b = Section::<E>::basis(*c);
        qvb::section_herm(&b, &b, *s, cal).unwrap() == BaseForm::one()
    });
    let qs = random_qpcs(21, 6);
    let fs = base_basis().into_iter().filter(|e| e.degree == 0).collect::<Vec<_>>();
    let mut leib: Vec<(Qpc<E>, CorepKind, BaseForm<E>, Section<E>)> = Vec::new();
    for w in &qs {
        for c in coreps {
            for t in random_sections(3, 2, c) {
                for f in &fs {
                    leib.push((w.clone(), c, f.clone(), t.clone()));
                }
            }
        }
    }
    l.all("∇(fT) = df⊗T + f∇T", leib.clone(), |(w, c, f, t)| {
        let ft_ = Section::from_form(*c, &base::mul(f, &t.form(), cal));
        let lhs = qvb::nabla(w, &ft_, cal).comp;
        let rhs = base::mul(&base::d(f), &t.form(), cal) + base::mul(f, &qvb::nabla(w, t, cal).comp, cal);
        lhs == rhs
    });
    l.all("∇̂(Tf) = T⊗df + (∇̂T)f", leib, |(w, c, f, t)| {
        let tf = Section::from_form(*c, &base::mul(&t.form(), f, cal));
        let lhs = qvb::nabla_hat(w, &tf, cal).comp;
        let rhs = base::mul(&t.form(), &base::d(f), cal) + base::mul(&qvb::nabla_hat(w, t, cal).comp, f, cal);
        lhs == rhs
    });
    let adj: Vec<(Qpc<E>, CorepKind, Side, u8, BaseForm<E>, BaseForm<E>)> = qs
        .iter()
        .take(3)
        .flat_map(|w| {
            coreps.iter().flat_map(move |c| {
                Side::BOTH.iter().flat_map(move |s| {
                    (0..2u8).flat_map(move |k| {
                        [(BaseForm::new(k, q("1+i"), q("-2/3")), BaseForm::new(k + 1, q("1/2"), q("3i")))]
                            .into_iter()
                            .chain(BaseForm::<E>::basis_of_degree(k).into_iter().zip(BaseForm::basis_of_degree(k + 1)))
                            .map(move |(x, y)| (w.clone(), *c, *s, k, x, y))
                    })
                })
            })
        })
        .collect();
    l.all("<ψ̂|d^∇ψ> = <d^{∇⋆}ψ̂|ψ>", adj, |(w, c, s, _k, x, y)| {
        let psi = VForm::new(*c, *s, x.clone());
        let hat = VForm::new(*c, *s, y.clone());
        let a = qvb::vform_inner(&hat, &qvb::ext_cov_deriv(w, &psi, cal).unwrap(), cal).unwrap();
        let b = qvb::vform_inner(&qvb::adjoint_ext_cov(w, &hat, cal).unwrap(), &psi, cal).unwrap();
        a == b
    });
    let alt = random_sections(5, 5, CorepKind::Alternating);
    l.all("alternating: ∇^⋆∇ = id at ω_YM, both sides", alt.iter().flat_map(|t| Side::BOTH.map(|s| (s, t.clone()))), |(s, t)| {
        qvb::laplacian(&Qpc::ym(), t, *s, cal) == *t && qvb::laplacian_hodge(&Qpc::ym(), t, *s, cal) == *t
    });
    let triv = random_sections(6, 5, CorepKind::Trivial);
    l.all("trivial: ∇^⋆∇T = [2(x-y), 2(y-x)]", qs.iter().flat_map(|w| triv.iter().map(move |t| (w.clone(), t.clone()))), |(w, t)| {
        let [x, y] = t.p.clone();
        let want = Section::new(CorepKind::Trivial, q("2") * (x.clone() - y.clone()), q("2") * (y - x));
        Side::BOTH.iter().all(|&s| qvb::laplacian(w, t, s, cal) == want)
    });
    let herm = hermitian_qpcs(31, 5);
    let cases: Vec<(Qpc<E>, Section<E>)> = herm
        .iter()
        .flat_map(|w| alt.iter().map(move |t| (w.clone(), t.clone())))
        .collect();
    l.all("alternating, hermitian ω: Gram Laplacian = printed ũ, û", cases.clone(), |(w, t)| {
        let comp = ft::alt_component_equations(w, t, t).unwrap();
        qvb::laplacian(w, t, Side::Left, cal).p == comp.u_tilde && qvb::laplacian(w, t, Side::Right, cal).p == comp.u_hat
    });
    l.all("alternating, hermitian ω: Hodge Laplacian = Gram Laplacian", cases, |(w, t)| {
        Side::BOTH.iter().all(|&s| qvb::laplacian(w, t, s, cal) == qvb::laplacian_hodge(w, t, s, cal))
    });
    let any: Vec<(Qpc<E>, Section<E>)> = qs
        .iter()
        .flat_map(|w| alt.iter().map(move |t| (w.clone(), t.clone())))
        .collect();
    l.all("alternating: left Hodge Laplacian = printed ũ", any, |(w, t)| {
        qvb::laplacian_hodge(w, t, Side::Left, cal).p == ft::alt_component_equations(w, t, t).unwrap().u_tilde
    });
    let nus = ft::lambda_basis::<E>();
    l.all("K^λ(T) = 2pν (left), 2ν*p (right), 0 for trivial", nus.iter().flat_map(|(_, nu)| alt.iter().map(move |t| (nu.clone(), t.clone()))), |(nu, t)| {
        let left = qvb::k_lambda(nu, t, Side::Left, cal).comp;
        let right = qvb::k_lambda(nu, t, Side::Right, cal).comp;
        let triv = Section::new(CorepKind::Trivial, t.p[0].clone(), t.p[1].clone());
        left == base::mul(&t.form(), nu, cal).scale(&q("2"))
            && right == base::mul(&base::star(nu), &t.form(), cal).scale(&q("2"))
            && qvb::k_lambda(nu, &triv, Side::Left, cal).comp.is_zero()
    });
    l.out
}

pub fn gauge(cal: &Calibration) -> Vec<LawResult> {
    let mut l = Laws::new("gauge");
    let mut rng = sample::rng(41);
    let phases: Vec<E> = (0..3).map(|_| sample::unit_modulus(&mut rng)).collect();
    let maps: Vec<(String, GaugeMap<E>)> = [("unit".to_string(), GaugeMap::unit()), ("sigma".to_string(), GaugeMap::sigma())]
        .into_iter()
        .chain(phases.iter().map(|c| (format!("phase({c})"), GaugeMap::phase(c.clone()))))
        .collect();
    l.all("gauge maps are graded, unital and Ad-covariant", maps.clone(), |(_, f)| f.validate(cal).is_ok());
    l.all("𝟙ε, f_σ and the phases lie in GG_YM", maps.clone(), |(_, f)| gg::in_gg_ym(f, cal));
    let names: Vec<String> = maps.iter().map(|m| m.0.clone()).collect();
    let mut triples = Vec::new();
    for a in &names[..3] {
        for b in &names {
            for c in &names[2..] {
                triples.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    let get = |n: &str| maps.iter().find(|m| m.0 == n).unwrap().1.clone();
    l.all("convolution is associative", triples, |(a, b, c)| {
        let (a, b, c) = (get(a), get(b), get(c));
        gg::convolve(&gg::convolve(&a, &b, cal), &c, cal) == gg::convolve(&a, &gg::convolve(&b, &c, cal), cal)
    });
    l.all("𝟙ε is the convolution unit", maps.clone(), |(_, f)| {
        gg::convolve(f, &GaugeMap::unit(), cal) == *f && gg::convolve(&GaugeMap::unit(), f, cal) == *f
    });
    l.all("convolution inverses", maps.clone(), |(_, f)| match gg::conv_inverse(f, cal) {
        Ok(g) => gg::convolve(f, &g, cal) == GaugeMap::unit() && gg::convolve(&g, f, cal) == GaugeMap::unit(),
        Err(_) => false,
    });
    l.one(
        "f_σ∗f_σ = 𝟙ε",
        gg::convolve(&GaugeMap::<E>::sigma(), &GaugeMap::sigma(), cal) == GaugeMap::unit(),
        "exact",
    );
    l.all("phase(a)∗phase(b) = phase(ab)", pairs(&phases), |(a, b)| {
        gg::convolve(&GaugeMap::phase(a.clone()), &GaugeMap::phase(b.clone()), cal) == GaugeMap::phase(a.clone() * b.clone())
    });
    let qs = random_qpcs(43, 6);
    l.all("L_YM(F_f∘ω) = L_YM(ω) for 𝟙ε, f_σ", qs.iter().flat_map(|w| [GaugeMap::unit(), GaugeMap::sigma()].map(|f| (w.clone(), f))), |(w, f)| {
        let g = gg::gauge_action_qpc(f, w, cal).unwrap();
        ft::lagrangian_ym(&g, cal) == ft::lagrangian_ym(w, cal)
    });
    let crit: Vec<Qpc<E>> = [Qpc::ym(), Qpc::triv()].into_iter().chain(sample_flat_points()).collect();
    l.all("GG_YM fixes the critical points", crit.iter().flat_map(|w| [GaugeMap::unit(), GaugeMap::sigma()].map(|f| (w.clone(), f))), |(w, f)| {
        gg::gauge_action_qpc(f, w, cal).as_ref() == Ok(w)
    });
    l.all("L_YMSM invariant under the e^{it} family", phase_invariance_cases(4), |(case, c)| {
        phase_invariant(case, c, cal)
    });
    l.out
}

pub fn field(cal: &Calibration) -> Vec<LawResult> {
    let mut l = Laws::new("field");
    let qs = random_qpcs(51, 10);
    l.all("S_YM = -|u|²/2", qs.clone(), |w| ft::action_ym(w, cal) == w.u().abs_sq() * q("-1/2"));
    l.one("S_YM(ω_YM) = -1/8", ft::action_ym(&Qpc::<E>::ym(), cal) == q("-1/8"), "exact");
    let zeros: Vec<Qpc<E>> = [Qpc::triv(), Qpc::ym()].into_iter().chain(sample_flat_points()).collect();
    l.all("YM residual vanishes at ω_triv, ω_YM and flat points", zeros.clone(), |w| ft::ym_residual(w, cal).is_zero());
    l.all("YM residual is nonzero at (1,0), (i,0)", [Qpc::new(q("1"), q("0")), Qpc::new(q("i"), q("0"))], |w| {
        !ft::ym_residual(w, cal).is_zero()
    });
    l.all("YM residual = 2(a∂₀u + b∂₁u)ū", qs.clone(), |w| {
        let u = w.u();
        let d0 = -(E::one() + q("2i") * w.lambda1.clone());
        let d1 = -(E::one() + q("2i") * w.lambda0.clone());
        let r = ft::ym_residual(w, cal);
        let want = [d0.clone(), d1.clone(), q("i") * d0, q("i") * d1];
        r.values().into_iter().zip(want).all(|(got, d)| got == q("2") * d * u.conj())
    });
    l.all("continuity: (d^{∇⋆} - d^{S⋆})² = 0", [Qpc::triv(), Qpc::ym()].into_iter().chain(qs.clone()), |w| {
        ft::continuity_check(w, cal)
    });
    let trip: Vec<_> = [("2", "1"), ("3", "2"), ("1", "1")]
        .into_iter()
        .flat_map(|(x, y)| [Qpc::triv(), sample_flat_points()[0].clone(), Qpc::ym()].map(|w| (q(x), q(y), w)))
        .collect();
    l.all("trivial corep: (ω, diag(x,y), diag(x,y)) solves the matter equations", trip, |(x, y, w)| {
        let t = Section::new(CorepKind::Trivial, x.clone(), y.clone());
        let v = Potential::PaperExample { x: x.clone(), y: y.clone() };
        ft::ymsm_residuals(w, &t, &t, &v, cal).unwrap().is_zero()
    });
    let alt = alt_condition_samples();
    let v1 = Potential::Polynomial { coeffs: vec![E::zero(), E::one()] };
    l.all("alternating at ω_YM: p̃₀p̃₁* = p̂₀*p̂₁ gives a solution", alt.clone(), |(t1, t2)| {
        ft::ymsm_residuals(&Qpc::ym(), t1, t2, &v1, cal).unwrap().is_zero()
    });
    l.all("alternating at ω_YM: matter pairing = i(p̂₀*p̂₁ - p̃₀p̃₁*)", random_sections(53, 4, CorepKind::Alternating).into_iter().zip(random_sections(54, 4, CorepKind::Alternating)), |(t1, t2)| {
        let nu = BaseForm::new(1, E::one(), E::zero());
        ft::matter_pairing(&Qpc::ym(), &nu, t1, t2, cal)
            == q("i") * (t2.p[0].conj() * t2.p[1].clone() - t1.p[0].clone() * t1.p[1].conj())
    });
    let mut rng = sample::rng(55);
    let aqs: Vec<_> = (0..6)
        .map(|_| {
            let w = sample::qpc(&mut rng);
            let p = |r: &mut _| Section::new(CorepKind::Alternating, sample::scalar(r), sample::scalar(r));
            (w, p(&mut rng), p(&mut rng))
        })
        .collect();
    l.all("alternating: pipeline left side of the λ₀/λ₁ rows = printed left side", aqs.clone(), |(w, t1, t2)| {
        let printed = ft::alt_component_equations(w, t1, t2).unwrap();
        let u = w.u().conj();
        let rhs = [
            u.clone() * (E::one() + q("2i") * w.lambda1.clone()),
            u * (E::one() + q("2i") * w.lambda0.clone()),
        ];
        (0..2).all(|j| {
            let nu = BaseForm::basis(1, j);
            ft::matter_pairing(w, &nu, t1, t2, cal) == printed.rows.components[j].1.clone() + rhs[j].clone()
        })
    });
    l.all("alternating: pipeline right side of the λ₀/λ₁ rows = -2 × printed right side", qs, |w| {
        let r = ft::ym_residual(w, cal);
        let u = w.u().conj();
        let printed = [
            u.clone() * (E::one() + q("2i") * w.lambda1.clone()),
            u * (E::one() + q("2i") * w.lambda0.clone()),
        ];
        (0..2).all(|j| r.components[j].1 == q("-2") * printed[j].clone())
    });
    l.out
}

/// Five exact section pairs with `p̃₀p̃₁* = p̂₀*p̂₁`.
pub fn alt_condition_samples() -> Vec<(Section<E>, Section<E>)> {
    let alt = CorepKind::Alternating;
    let mut rng = sample::rng(57);
    let mut out = vec![(
        Section::new(alt, E::one(), E::one()),
        Section::new(alt, E::one(), E::one()),
    )];
    while out.len() < 5 {
        let (a0, a1, b0) = (sample::scalar(&mut rng), sample::scalar(&mut rng), sample::scalar(&mut rng));
        let Some(inv) = b0.conj().inv() else { continue };
        let b1 = a0.clone() * a1.conj() * inv;
        out.push((Section::new(alt, a0, a1), Section::new(alt, b0, b1)));
    }
    out
}

pub fn run_suite(name: &str, cal: &Calibration) -> Option<Vec<LawResult>> {
    Some(match name {
        "calculus" => calculus(cal),
        "hopf" => hopf(cal),
        "bundle" => bundle(cal),
        "qvb" => qvb_suite(cal),
        "gauge" => gauge(cal),
        "field" => field(cal),
        "all" => SUITES.iter().flat_map(|s| run_suite(s, cal).unwrap()).collect(),
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GateReport {
    pub calibration: Calibration,
    pub checks: Vec<(String, bool)>,
    pub passed: bool,
}

/// Calculus laws, printed base values, curvature, YM solutions, the bundle
/// ∗-law, both Laplacian routes at `ω_YM`, the Leibniz rule of `∇` and `∇̂`,
/// and the alternating-corep solutions at `ω_YM`.
pub fn calibration_gate(cal: &Calibration) -> GateReport {
    let mut checks = Vec::new();
    checks.push(("calculus laws".to_string(), calculus(cal).iter().all(|r| r.passed)));
    checks.push(("printed base values".to_string(), printed_base_values(cal)));
    let qs = random_qpcs(61, 20);
    let curv = qs.iter().all(|w| bundle::curvature(w, cal) == bundle::curvature_closed_form(w))
        && bundle::curvature(&Qpc::<E>::ym(), cal) == BaseForm::new(2, q("-1/2i"), q("-1/2i"));
    checks.push(("curvature".to_string(), curv));
    let zeros: Vec<Qpc<E>> = [Qpc::triv(), Qpc::ym()].into_iter().chain(sample_flat_points()).collect();
    let ym = zeros.iter().all(|w| ft::ym_residual(w, cal).is_zero())
        && !ft::ym_residual(&Qpc::new(q("1"), q("0")), cal).is_zero()
        && !ft::ym_residual(&Qpc::new(q("i"), q("0")), cal).is_zero()
        && ft::action_ym(&Qpc::<E>::ym(), cal) == q("-1/8");
    checks.push(("Yang-Mills solutions".to_string(), ym));
    checks.push(("bundle *-law".to_string(), bundle_star_law(cal)));
    let lap = random_sections(63, 3, CorepKind::Alternating).iter().all(|t| {
        Side::BOTH.iter().all(|&s| {
            qvb::laplacian(&Qpc::ym(), t, s, cal) == *t && qvb::laplacian_hodge(&Qpc::ym(), t, s, cal) == *t
        })
    });
    checks.push(("Laplacian at ω_YM".to_string(), lap));
    let leibniz = random_qpcs(65, 2).iter().all(|w| {
        random_sections(67, 1, CorepKind::Alternating).iter().all(|t| {
            let f = BaseForm::new(0, E::one(), E::zero());
            let ft_ = Section::from_form(t.corep, &base::mul(&f, &t.form(), cal));
            let tf = Section::from_form(t.corep, &base::mul(&t.form(), &f, cal));
            qvb::nabla(w, &ft_, cal).comp
                == base::mul(&base::d(&f), &t.form(), cal) + base::mul(&f, &qvb::nabla(w, t, cal).comp, cal)
                && qvb::nabla_hat(w, &tf, cal).comp
                    == base::mul(&t.form(), &base::d(&f), cal) + base::mul(&qvb::nabla_hat(w, t, cal).comp, &f, cal)
        })
    });
    checks.push(("Leibniz rule of the induced connections".to_string(), leibniz));
    let v1 = Potential::Polynomial { coeffs: vec![E::zero(), E::one()] };
    let alt = alt_condition_samples()
        .iter()
        .all(|(t1, t2)| ft::ymsm_residuals(&Qpc::ym(), t1, t2, &v1, cal).map(|r| r.is_zero()).unwrap_or(false));
    checks.push(("alternating solutions at ω_YM".to_string(), alt));
    let passed = checks.iter().all(|c| c.1);
    GateReport { calibration: *cal, checks, passed }
}

/// `dvol = [-i,i]₂`, `∫p₀dp₁dp₀ = 1/2` and the displayed codifferentials
/// as adjoints of `d`.
pub fn printed_base_values(cal: &Calibration) -> bool {
    let dvol_ok = base::dvol::<E>(cal) == BaseForm::new(2, q("-i"), q("i"));
    let p0 = BaseForm::<E>::p0();
    let form = base::mul(&base::mul(&p0, &base::d(&BaseForm::p1()), cal), &base::d(&p0), cal);
    let int_ok = base::integral(&form, cal).ok() == Some(q("1/2"));
    let display = |x: &BaseForm<E>| -> BaseForm<E> {
        let [z0, z1] = x.c.clone();
        match x.degree {
            1 => BaseForm::new(0, q("i") * (z0.clone() - z1.clone()), q("-i") * (z0 - z1)),
            _ => BaseForm::new(1, -(z0.clone() + z1.clone()), -(z0 + z1)),
        }
    };
    let codiff_ok = (0..2u8).all(|k| {
        let a = base::operator_matrix(k, base::d::<E>);
        let adj = base::adjoint_matrix(&a, &base::gram(k, Side::Left, cal), &base::gram(k + 1, Side::Left, cal), Side::Left);
        adj.map(|m| m == base::operator_matrix(k + 1, display)).unwrap_or(false)
    });
    dvol_ok && int_ok && codiff_ok
}

/// `(xy)* = (−1)^{|x||y|}y*x*` and `(dx)* = d(x*)` on all pairs of total
/// basis forms.
pub fn bundle_star_law(cal: &Calibration) -> bool {
    let tb = total_basis();
    tb.iter().all(|a| a.d().star(cal) == a.star(cal).d())
        && pairs(&tb).iter().all(|(a, b)| {
            let s = sign(a.degree().unwrap() * b.degree().unwrap() % 2 == 1);
            a.mul(b, cal).star(cal) == b.star(cal).mul(&a.star(cal), cal).scale(&s)
        })
}

/// Random `(ω, T₁, T₂, V)` with polynomial `V`, paired with exact
/// unit-modulus phases.
pub fn phase_invariance_cases(n: usize) -> Vec<((Qpc<E>, Section<E>, Section<E>, Potential<E>), E)> {
    let mut rng = sample::rng(41);
    let phases: Vec<E> = (0..3).map(|_| sample::unit_modulus(&mut rng)).collect();
    let mut rng = sample::rng(47);
    (0..n)
        .map(|_| {
            let w = sample::qpc(&mut rng);
            let t1 = Section::new(CorepKind::Alternating, sample::scalar(&mut rng), sample::scalar(&mut rng));
            let t2 = Section::new(CorepKind::Alternating, sample::scalar(&mut rng), sample::scalar(&mut rng));
            let v = Potential::Polynomial { coeffs: vec![sample::scalar(&mut rng), sample::scalar(&mut rng), sample::scalar(&mut rng)] };
            (w, t1, t2, v)
        })
        .flat_map(|c| phases.clone().into_iter().map(move |p| (c.clone(), p)))
        .collect()
}

/// `F_𝔣` fixes `ω` and `L_YMSM(F_𝔣∘ω, F_𝔣∘T₁, ∗F_𝔣∗T₂) = L_YMSM(ω, T₁, T₂)`
/// for `𝔣` in the `e^{it}` family.
pub fn phase_invariant(case: &(Qpc<E>, Section<E>, Section<E>, Potential<E>), c: &E, cal: &Calibration) -> bool {
    let (w, t1, t2, v) = case;
    let f = GaugeMap::phase(c.clone());
    let (Ok(w2), Ok(s1), Ok(s2)) = (
        gg::gauge_action_qpc(&f, w, cal),
        gg::gauge_action_section(&f, t1, Side::Left, cal),
        gg::gauge_action_section(&f, t2, Side::Right, cal),
    ) else {
        return false;
    };
    w2 == *w
        && ft::lagrangian_ymsm(&w2, &s1, &s2, v, cal).ok() == ft::lagrangian_ymsm(w, t1, t2, v, cal).ok()
}

/// Combinations passing [`calibration_gate`].
pub fn select_calibration() -> Vec<GateReport> {
    use rayon::prelude::*;
    Calibration::all().par_iter().map(calibration_gate).collect()
}
