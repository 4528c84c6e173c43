//! The F4-graded Lie algebra `L`.

pub mod bracket;
pub mod l00;
pub mod roothom;

use std::fmt;

use crate::error::Result;
use crate::jordan::CubicElement;
use crate::ring::{Context, ScalarPoly};

pub use bracket::{check_table, Atom, BracketTable, CheckStatus, TableCheck, Tag};
pub use l00::{DdTerm, L00};
pub use roothom::{lie_root_hom, TwistTable};

/// `[λ, c, c', μ]_±`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Brown {
    pub lambda: ScalarPoly,
    pub c: CubicElement,
    pub cprime: CubicElement,
    pub mu: ScalarPoly,
}

impl Brown {
    pub fn new(lambda: ScalarPoly, c: CubicElement, cprime: CubicElement, mu: ScalarPoly) -> Brown {
        Brown {
            lambda,
            c,
            cprime,
            mu,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero() && self.c.is_zero() && self.cprime.is_zero() && self.mu.is_zero()
    }

    fn add(&self, o: &Brown) -> Brown {
        Brown {
            lambda: &self.lambda + &o.lambda,
            c: &self.c + &o.c,
            cprime: &self.cprime + &o.cprime,
            mu: &self.mu + &o.mu,
        }
    }

    fn scale(&self, s: &ScalarPoly) -> Brown {
        Brown {
            lambda: &self.lambda * s,
            c: self.c.scale(s),
            cprime: self.cprime.scale(s),
            mu: &self.mu * s,
        }
    }

    fn simplify(&self, ctx: &Context) -> Result<Brown> {
        Ok(Brown {
            lambda: ctx.simplify_scalar(&self.lambda),
            c: self.c.simplify(ctx)?,
            cprime: self.cprime.simplify(ctx)?,
            mu: ctx.simplify_scalar(&self.mu),
        })
    }

    fn render(&self, sign: char) -> String {
        format!(
            "[ {}, {}, {}, {} ]_{sign}",
            self.lambda, self.c, self.cprime, self.mu
        )
    }
}

/// An element of `L`, stored by 5-grading layer.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LieElement {
    pub x: ScalarPoly,
    pub brown_minus: Brown,
    pub ad_minus: CubicElement,
    pub l00: L00,
    pub ad_plus: CubicElement,
    pub brown_plus: Brown,
    pub y: ScalarPoly,
}

impl LieElement {
    pub fn zero() -> LieElement {
        LieElement::default()
    }

    pub fn x() -> LieElement {
        LieElement {
            x: ScalarPoly::one(),
            ..Default::default()
        }
    }

    pub fn y() -> LieElement {
        LieElement {
            y: ScalarPoly::one(),
            ..Default::default()
        }
    }

    pub fn xi() -> LieElement {
        LieElement {
            l00: L00 {
                xi: ScalarPoly::one(),
                ..Default::default()
            },
            ..Default::default()
        }
    }

    pub fn zeta() -> LieElement {
        LieElement {
            l00: L00 {
                zeta: ScalarPoly::one(),
                ..Default::default()
            },
            ..Default::default()
        }
    }

    pub fn ad_pos(c: CubicElement) -> LieElement {
        LieElement {
            ad_plus: c,
            ..Default::default()
        }
    }

    pub fn ad_neg(c: CubicElement) -> LieElement {
        LieElement {
            ad_minus: c,
            ..Default::default()
        }
    }

    pub fn dd(c: CubicElement, cprime: CubicElement) -> LieElement {
        LieElement {
            l00: L00::dd(ScalarPoly::one(), c, cprime),
            ..Default::default()
        }
    }

    pub fn brown_pos(b: Brown) -> LieElement {
        LieElement {
            brown_plus: b,
            ..Default::default()
        }
    }

    pub fn brown_neg(b: Brown) -> LieElement {
        LieElement {
            brown_minus: b,
            ..Default::default()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero()
            && self.y.is_zero()
            && self.brown_minus.is_zero()
            && self.brown_plus.is_zero()
            && self.ad_minus.is_zero()
            && self.ad_plus.is_zero()
            && self.l00.is_zero()
    }

    pub fn add(&self, o: &LieElement) -> LieElement {
        LieElement {
            x: &self.x + &o.x,
            brown_minus: self.brown_minus.add(&o.brown_minus),
            ad_minus: &self.ad_minus + &o.ad_minus,
            l00: self.l00.add(&o.l00),
            ad_plus: &self.ad_plus + &o.ad_plus,
            brown_plus: self.brown_plus.add(&o.brown_plus),
            y: &self.y + &o.y,
        }
    }

    pub fn scale(&self, s: &ScalarPoly) -> LieElement {
        LieElement {
            x: &self.x * s,
            brown_minus: self.brown_minus.scale(s),
            ad_minus: self.ad_minus.scale(s),
            l00: self.l00.scale(s),
            ad_plus: self.ad_plus.scale(s),
            brown_plus: self.brown_plus.scale(s),
            y: &self.y * s,
        }
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&ScalarPoly::from_int(-1))
    }

    pub fn sub(&self, o: &LieElement) -> LieElement {
        self.add(&o.neg())
    }

    /// Componentwise simplification, with the dedicated rules on `L00`.
    pub fn simplify(&self, ctx: &Context) -> Result<LieElement> {
        Ok(LieElement {
            x: ctx.simplify_scalar(&self.x),
            brown_minus: self.brown_minus.simplify(ctx)?,
            ad_minus: self.ad_minus.simplify(ctx)?,
            l00: self.l00.simplify(ctx)?,
            ad_plus: self.ad_plus.simplify(ctx)?,
            brown_plus: self.brown_plus.simplify(ctx)?,
            y: ctx.simplify_scalar(&self.y),
        })
    }

    /// Every scalar occurring anywhere in the element.
    pub fn scalars(&self) -> Vec<ScalarPoly> {
        let mut out = vec![self.x.clone(), self.y.clone()];
        for b in [&self.brown_minus, &self.brown_plus] {
            out.push(b.lambda.clone());
            out.push(b.mu.clone());
            push_cubic_scalars(&b.c, &mut out);
            push_cubic_scalars(&b.cprime, &mut out);
        }
        push_cubic_scalars(&self.ad_minus, &mut out);
        push_cubic_scalars(&self.ad_plus, &mut out);
        out.push(self.l00.xi.clone());
        out.push(self.l00.zeta.clone());
        for t in &self.l00.dd {
            out.push(t.coef.clone());
            push_cubic_scalars(&t.c, &mut out);
            push_cubic_scalars(&t.cprime, &mut out);
        }
        out
    }
}

fn push_cubic_scalars(c: &CubicElement, out: &mut Vec<ScalarPoly>) {
    out.extend(c.xi.iter().cloned());
    for u in &c.u {
        out.extend(u.terms().map(|(_, s)| s.clone()));
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.x.is_zero() {
            parts.push(format!("({})*x", self.x));
        }
        if !self.brown_minus.is_zero() {
            parts.push(self.brown_minus.render('-'));
        }
        let mut l0 = Vec::new();
        if !self.ad_plus.is_zero() {
            l0.push(format!("ad^+_{{{}}}", self.ad_plus));
        }
        if !self.ad_minus.is_zero() {
            l0.push(format!("ad^-_{{{}}}", self.ad_minus));
        }
        l0.extend(self.l00.render_parts());
        if !l0.is_empty() {
            parts.push(l0.join("+"));
        }
        if !self.brown_plus.is_zero() {
            parts.push(self.brown_plus.render('+'));
        }
        if !self.y.is_zero() {
            parts.push(format!("({})*y", self.y));
        }
        if parts.is_empty() {
            f.write_str("0_L")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::ConicElement;

    fn cub() -> CubicElement {
        CubicElement::off_diagonal(1, 2, ConicElement::generator(1))
    }

    #[test]
    fn constructor_renderings() {
        let t1 = ScalarPoly::t(1);
        assert_eq!(LieElement::x().scale(&t1).to_string(), "(t1)*x");
        let e = LieElement::xi()
            .add(&LieElement::zeta().scale(&ScalarPoly::from_int(2)))
            .add(&LieElement::ad_pos(cub()));
        assert_eq!(e.to_string(), "ad^+_{((1)*a1)[12]}+xi+(2)*zeta");
        assert_eq!(
            LieElement::dd(cub(), cub().scale(&t1)).to_string(),
            "dd_{((1)*a1)[12],((t1)*a1)[12]}"
        );
        let b = Brown::new(
            ScalarPoly::zero(),
            CubicElement::zero(),
            cub(),
            &t1 + &ScalarPoly::t(2),
        );
        assert_eq!(
            LieElement::brown_neg(b).to_string(),
            "[ 0, 0_J, ((1)*a1)[12], t1+t2 ]_-"
        );
    }

    #[test]
    fn additive_inverse() {
        assert!(LieElement::x().add(&LieElement::x().neg()).is_zero());
        assert_eq!(LieElement::zero().to_string(), "0_L");
    }

    #[test]
    fn layers_are_joined_with_spaced_plus() {
        let e = LieElement::x().add(&LieElement::xi()).add(&LieElement::y());
        assert_eq!(e.to_string(), "(1)*x + xi + (1)*y");
    }
}
