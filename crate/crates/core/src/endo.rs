//! Endomorphisms of `L` built from truncated exponentials.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::dsl::eval::Env;
use crate::dsl::value::Value;
use crate::error::{Error, Result};
use crate::jordan::CubicElement;
use crate::lie::bracket::bracket;
use crate::lie::roothom::root_of;
use crate::lie::{lie_root_hom, LieElement, TwistTable};
use crate::ring::{with_render_style, Context, Indet, RenderStyle, ScalarPoly};
use crate::roots::{roots_f4, RootF4};

/// `exp(ℓ)` for a homogeneous `ℓ` of root `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exp {
    pub generator: LieElement,
    pub root: RootF4,
}

/// Composite of exponentials; `factors[0]` is applied last.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Endomorphism {
    factors: Vec<Exp>,
}

impl Endomorphism {
    pub fn identity() -> Endomorphism {
        Endomorphism::default()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[Exp] {
        &self.factors
    }

    pub fn exp(l: &LieElement, ctx: &Context) -> Result<Endomorphism> {
        let g = l.simplify(ctx)?;
        if g.is_zero() {
            return Ok(Endomorphism::identity());
        }
        let root = root_of(&g)?;
        Ok(Endomorphism {
            factors: vec![Exp { generator: g, root }],
        })
    }

    /// `x_α(b) = exp(ρ_α(b))`.
    pub fn grp_root_hom(alpha: RootF4, payload: Value, env: &Env) -> Result<Endomorphism> {
        Endomorphism::exp(&lie_root_hom(alpha, payload, &env.tables.twist)?, env.ctx)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Endomorphism { factors }
    }

    pub fn inverse(&self) -> Endomorphism {
        let factors = self
            .factors
            .iter()
            .rev()
            .map(|f| Exp {
                generator: f.generator.neg(),
                root: f.root,
            })
            .collect();
        Endomorphism { factors }
    }

    pub fn apply(&self, m: &LieElement, env: &Env) -> Result<LieElement> {
        let mut out = m.simplify(env.ctx)?;
        for f in self.factors.iter().rev() {
            out = exp_apply(&f.generator, &out, env)?;
        }
        Ok(out)
    }

    /// Indices of conic generators occurring in the defining payloads.
    pub fn used_generators(&self) -> BTreeSet<u16> {
        let mut out = BTreeSet::new();
        for f in &self.factors {
            lie_generators(&f.generator, &mut out);
        }
        out
    }
}

/// `Σ_{i≤4} ad_g^i(m) / i!`, simplified, with the integrality check.
pub fn exp_apply(g: &LieElement, m: &LieElement, env: &Env) -> Result<LieElement> {
    let mut acc = m.clone();
    let mut term = m.clone();
    for i in 1..=4i64 {
        let inv = ScalarPoly::from_rational(BigRational::new(BigInt::from(1), BigInt::from(i)));
        term = bracket(g, &term, env)?.scale(&inv).simplify(env.ctx)?;
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    let acc = acc.simplify(env.ctx)?;
    if let Some(bad) = acc.scalars().into_iter().find(|s| !s.is_gamma_integral()) {
        return Err(Error::IntegralityViolation {
            coefficient: bad.to_string(),
        });
    }
    Ok(acc)
}

fn scalar_generators(s: &ScalarPoly, out: &mut BTreeSet<u16>) {
    for i in s.indets() {
        match i {
            Indet::Norm(k) => {
                out.insert(*k);
            }
            Indet::Trace(w) => out.extend(w.letters().iter().map(|l| l.index())),
            _ => {}
        }
    }
}

fn cubic_generators(c: &CubicElement, out: &mut BTreeSet<u16>) {
    for s in &c.xi {
        scalar_generators(s, out);
    }
    for u in &c.u {
        for (w, s) in u.terms() {
            out.extend(w.letters().iter().map(|l| l.index()));
            scalar_generators(s, out);
        }
    }
}

fn lie_generators(l: &LieElement, out: &mut BTreeSet<u16>) {
    for s in l.scalars() {
        scalar_generators(&s, out);
    }
    for c in [
        &l.brown_minus.c,
        &l.brown_minus.cprime,
        &l.brown_plus.c,
        &l.brown_plus.cprime,
        &l.ad_minus,
        &l.ad_plus,
    ] {
        cubic_generators(c, out);
    }
    for t in &l.l00.dd {
        cubic_generators(&t.c, out);
        cubic_generators(&t.cprime, out);
    }
}

/// `S(a)`: `ρ_α(a)` for short and `ρ_α(1)` for long `α` with first coordinate −2 or 1.
pub fn generator_set(fresh: u16, twists: &TwistTable) -> Result<Vec<(RootF4, LieElement)>> {
    let a = Value::Conic(crate::conic::ConicElement::generator(fresh));
    roots_f4()
        .into_iter()
        .filter(|r| matches!(r.grading_component(), -2 | 1))
        .map(|r| {
            let payload = if r.is_long() {
                Value::Scalar(ScalarPoly::one())
            } else {
                a.clone()
            };
            Ok((r, lie_root_hom(r, payload, twists)?))
        })
        .collect()
}

/// A generator on which two endomorphisms differ, with `φ(ℓ) − ψ(ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub root: RootF4,
    pub generator: LieElement,
    pub difference: LieElement,
}

/// Compare `φ` and `ψ` on `S(a_fresh)`; an empty list means equal.
pub fn test_equality(
    phi: &Endomorphism,
    psi: &Endomorphism,
    fresh: u16,
    env: &Env,
) -> Result<Vec<Residue>> {
    env.ctx.check_generator(fresh as usize)?;
    if phi.used_generators().contains(&fresh) || psi.used_generators().contains(&fresh) {
        return Err(Error::FreshIndexCollision(fresh as usize));
    }
    let gens = generator_set(fresh, &env.tables.twist)?;
    let results: Vec<Result<Option<Residue>>> = gens
        .par_iter()
        .map(|(root, g)| {
            let d = phi
                .apply(g, env)?
                .sub(&psi.apply(g, env)?)
                .simplify(env.ctx)?;
            Ok((!d.is_zero()).then(|| Residue {
                root: *root,
                generator: g.clone(),
                difference: d,
            }))
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        if let Some(res) = r? {
            out.push(res);
        }
    }
    Ok(out)
}

/// `true`, or the residue list `[ [ ℓ, φ(ℓ)−ψ(ℓ) ], … ]` with fractional γ-powers.
pub fn render_residues(rs: &[Residue]) -> String {
    if rs.is_empty() {
        return "true".into();
    }
    with_render_style(RenderStyle::Fraction, || {
        let items: Vec<String> = rs
            .iter()
            .map(|r| format!("[ {}, {} ]", r.generator, r.difference))
            .collect();
        format!("[ {} ]", items.join(", "))
    })
}

/// `w_δ = x_{−δ}(−1) x_δ(1) x_{−δ}(−1)`.
pub fn weyl_element(delta: RootF4, env: &Env) -> Result<Endomorphism> {
    let one = Value::Scalar(ScalarPoly::one());
    let minus = Value::Scalar(ScalarPoly::from_int(-1));
    let a = Endomorphism::grp_root_hom(-delta, minus.clone(), env)?;
    let b = Endomorphism::grp_root_hom(delta, one, env)?;
    Ok(a.compose(&b).compose(&a.clone()))
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|e| format!("exp({})", e.generator))
            .collect();
        f.write_str(&parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::eval::Tables;

    fn with_env<T>(f: impl FnOnce(&Env) -> T) -> T {
        let ctx = Context::new(6, 3, 4).unwrap();
        let tables = Tables::shipped();
        let env = Env::new(&ctx, &tables);
        f(&env)
    }

    #[test]
    fn exp_x_on_y() {
        with_env(|env| {
            let phi = Endomorphism::exp(&LieElement::x(), env.ctx).unwrap();
            let r = phi.apply(&LieElement::y(), env).unwrap();
            assert_eq!(r.to_string(), "(1)*x + xi + (1)*y");
        });
    }

    #[test]
    fn grp_root_hom_anchor() {
        with_env(|env| {
            let phi = Endomorphism::grp_root_hom(
                RootF4([-2, 0, 0, 0]),
                Value::Scalar(ScalarPoly::one()),
                env,
            )
            .unwrap();
            assert_eq!(
                phi.apply(&LieElement::y(), env).unwrap().to_string(),
                "(1)*x + xi + (1)*y"
            );
        });
    }

    #[test]
    fn exp_of_zero_is_identity() {
        with_env(|env| {
            let phi = Endomorphism::exp(&LieElement::zero(), env.ctx).unwrap();
            assert!(phi.is_identity());
            assert_eq!(phi.apply(&LieElement::y(), env).unwrap(), LieElement::y());
            assert!(Endomorphism::identity().inverse().is_identity());
        });
    }

    #[test]
    fn composition_order() {
        with_env(|env| {
            let phi = Endomorphism::exp(&LieElement::x(), env.ctx).unwrap();
            let psi =
                Endomorphism::exp(&LieElement::x().scale(&ScalarPoly::t(1)), env.ctx).unwrap();
            let y = LieElement::y();
            let lhs = psi.compose(&phi).apply(&y, env).unwrap();
            let rhs = psi.apply(&phi.apply(&y, env).unwrap(), env).unwrap();
            assert_eq!(lhs, rhs);
        });
    }

    #[test]
    fn inverse_undoes_on_y() {
        with_env(|env| {
            let phi =
                Endomorphism::exp(&LieElement::x().scale(&ScalarPoly::t(2)), env.ctx).unwrap();
            let r = phi
                .compose(&phi.inverse())
                .apply(&LieElement::y(), env)
                .unwrap();
            assert_eq!(r, LieElement::y());
        });
    }

    #[test]
    fn generator_set_shape() {
        let s = generator_set(3, &TwistTable::shipped()).unwrap();
        assert_eq!(s.len(), 15);
        assert_eq!(s.iter().filter(|(r, _)| !r.is_long()).count(), 6);
        assert!(s
            .iter()
            .any(|(r, g)| *r == RootF4([-2, 0, 0, 0]) && *g == LieElement::x()));
        for (r, g) in &s {
            assert_eq!(root_of(g).unwrap(), *r);
        }
    }

    #[test]
    fn fresh_index_is_checked() {
        with_env(|env| {
            let a1 = Value::Conic(crate::conic::ConicElement::generator(1));
            let phi = Endomorphism::grp_root_hom(RootF4([1, 0, 0, 1]), a1, env).unwrap();
            assert_eq!(phi.used_generators(), BTreeSet::from([1]));
            let err = test_equality(&phi, &phi, 1, env).unwrap_err();
            assert_eq!(err, Error::FreshIndexCollision(1));
        });
    }

    #[test]
    fn integrality_violation_is_reported() {
        with_env(|env| {
            let half = ScalarPoly::from_rational(BigRational::new(1.into(), 2.into()));
            let phi = Endomorphism::exp(&LieElement::x().scale(&half), env.ctx).unwrap();
            let err = phi.apply(&LieElement::y(), env).unwrap_err();
            assert!(matches!(err, Error::IntegralityViolation { .. }), "{err}");
        });
    }

    #[test]
    fn residue_rendering_uses_fractions() {
        let d = LieElement::x()
            .scale(&(&ScalarPoly::norm_indet(2) * &ScalarPoly::gamma_inverse(3)).scale_int(-1));
        let r = Residue {
            root: RootF4([-2, 0, 0, 0]),
            generator: LieElement::x(),
            difference: d,
        };
        assert_eq!(render_residues(&[r]), "[ [ (1)*x, (-n(a2)/g3)*x ] ]");
        assert_eq!(render_residues(&[]), "true");
    }
}
