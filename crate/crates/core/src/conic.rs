//! The free conic algebra `C`: k-linear combinations of nonassociative words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::ring::{Context, ScalarPoly, Word};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ConicElement {
    terms: BTreeMap<Word, ScalarPoly>,
}

impl ConicElement {
    pub fn zero() -> ConicElement {
        ConicElement::default()
    }

    pub fn one() -> ConicElement {
        ConicElement::word(Word::unit())
    }

    pub fn word(w: Word) -> ConicElement {
        ConicElement::term(ScalarPoly::one(), w)
    }

    pub fn generator(i: u16) -> ConicElement {
        ConicElement::word(Word::generator(i))
    }

    pub fn scalar(s: ScalarPoly) -> ConicElement {
        ConicElement::term(s, Word::unit())
    }

    pub fn term(c: ScalarPoly, w: Word) -> ConicElement {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        ConicElement { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ScalarPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&ScalarPoly> {
        self.terms.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Longest word occurring with nonzero coefficient.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    fn add_term(&mut self, w: Word, c: ScalarPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn scale(&self, s: &ScalarPoly) -> ConicElement {
        let mut out = ConicElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn map_coefficients<F: FnMut(&ScalarPoly) -> ScalarPoly>(&self, mut f: F) -> ConicElement {
        let mut out = ConicElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Free bilinear product.
    pub fn mul(&self, other: &ConicElement) -> ConicElement {
        let mut out = ConicElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(Word::mul(w1, w2), c1 * c2);
            }
        }
        out
    }

    pub fn conj(&self) -> ConicElement {
        let mut out = ConicElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.conj(), c.clone());
        }
        out
    }

    pub fn trace(&self, ctx: &Context) -> Result<ScalarPoly> {
        let mut out = ScalarPoly::zero();
        for (w, c) in &self.terms {
            out += &(c * &ctx.trace_of_word(w)?);
        }
        Ok(out)
    }

    pub fn norm(&self, ctx: &Context) -> Result<ScalarPoly> {
        let items: Vec<(&Word, &ScalarPoly)> = self.terms.iter().collect();
        let mut out = ScalarPoly::zero();
        for (i, (wi, ci)) in items.iter().enumerate() {
            out += &(&ci.pow(2) * &ctx.norm_of_word(wi)?);
            for (wj, cj) in &items[i + 1..] {
                let cross = ctx.trace_of_word(&Word::mul(wi, &wj.conj()))?;
                out += &(&(*ci * *cj) * &cross);
            }
        }
        Ok(out)
    }

    /// Bilinear norm `n(x, y) = tr(x conj(y))`.
    pub fn norm_bilinear(&self, other: &ConicElement, ctx: &Context) -> Result<ScalarPoly> {
        self.mul(&other.conj()).trace(ctx)
    }

    /// Replace pairs of words differing by a conjugated subtree using
    /// `s + conj(s) = tr(s) 1`, then simplify every coefficient.
    pub fn simplify(&self, ctx: &Context) -> Result<ConicElement> {
        let mut cur = self.clone();
        while let Some((w1, w2, p)) = cur.find_conjugate_pair() {
            let l1 = cur.terms.remove(&w1).expect("pair member present");
            let l2 = cur.terms.remove(&w2).expect("pair member present");
            let s = w1.subtree(p);
            let tr_s = ctx.trace_of_word(&s)?;
            cur.add_term(w1.clone(), &l1 - &l2);
            cur.add_term(w1.replace(p, &Word::unit()), &l2 * &tr_s);
        }
        Ok(cur.map_coefficients(|c| ctx.simplify_scalar(c)))
    }

    fn find_conjugate_pair(&self) -> Option<(Word, Word, usize)> {
        let words: Vec<&Word> = self.terms.keys().collect();
        for (i, w1) in words.iter().enumerate() {
            for w2 in &words[i + 1..] {
                if w2.len() != w1.len() {
                    break;
                }
                if w1.node_count() != w2.node_count() {
                    continue;
                }
                for p in 0..w1.node_count() {
                    let s = w1.subtree(p);
                    let c = s.conj();
                    if c != s && w1.replace(p, &c) == **w2 {
                        return Some(((*w1).clone(), (*w2).clone(), p));
                    }
                }
            }
        }
        None
    }
}

impl fmt::Display for ConicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0_C");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "({c})*{w}")?;
        }
        Ok(())
    }
}

impl Add<&ConicElement> for &ConicElement {
    type Output = ConicElement;
    fn add(self, rhs: &ConicElement) -> ConicElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&ConicElement> for &ConicElement {
    type Output = ConicElement;
    fn sub(self, rhs: &ConicElement) -> ConicElement {
        self + &(-rhs)
    }
}

impl Neg for &ConicElement {
    type Output = ConicElement;
    fn neg(self) -> ConicElement {
        self.map_coefficients(|c| -c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u16) -> ConicElement {
        ConicElement::generator(i)
    }

    fn ctx() -> Context {
        Context::new(1, 2, 3).unwrap()
    }

    #[test]
    fn unit_law_and_bilinearity() {
        assert_eq!(a(1).mul(&ConicElement::one()), a(1));
        let lhs = (&a(1) + &a(2)).mul(&a(1));
        assert_eq!(lhs, &a(1).mul(&a(1)) + &a(2).mul(&a(1)));
    }

    #[test]
    fn transcript_renderings() {
        let ctx = ctx();
        let x = &a(1) + &a(1).mul(&a(2));
        assert_eq!(x.conj().to_string(), "(1)*a1'+(1)*(a2'*a1')");
        assert_eq!(x.trace(&ctx).unwrap().to_string(), "tr(a1)+tr(a1a2)");
        assert_eq!(
            a(1).mul(&a(2)).norm(&ctx).unwrap().to_string(),
            "n(a1)*n(a2)"
        );
        assert_eq!(
            (&a(1) + &a(2)).norm(&ctx).unwrap().to_string(),
            "n(a1)+n(a2)+tr(a1a2')"
        );
    }

    #[test]
    fn make_traces_cancels() {
        let ctx = ctx();
        let tr2 = a(2).trace(&ctx).unwrap();
        let x = &(&a(1).mul(&a(2)) + &a(1).mul(&a(2).conj())) - &a(1).scale(&tr2);
        assert_eq!(x.to_string(), "(-tr(a2))*a1+(1)*(a1*a2)+(1)*(a1*a2')");
        assert!(x.simplify(&ctx).unwrap().is_zero());
    }

    #[test]
    fn element_plus_conjugate_is_trace() {
        let ctx = ctx();
        let s = (&a(1) + &a(1).conj()).simplify(&ctx).unwrap();
        assert_eq!(s.to_string(), "(tr(a1))*1_C");
    }

    #[test]
    fn unit_trace_and_norm() {
        let ctx = ctx();
        assert_eq!(ConicElement::one().trace(&ctx).unwrap().to_string(), "2");
        assert!(ConicElement::one().norm(&ctx).unwrap().is_one());
    }

    #[test]
    fn unequal_coefficients_split() {
        let ctx = ctx();
        let t1 = ScalarPoly::t(1);
        let x = &a(1).scale(&t1) + &a(1).conj();
        // t1 a1 + a1' = (t1 - 1) a1 + tr(a1) 1
        let s = x.simplify(&ctx).unwrap();
        assert_eq!(s.to_string(), "(tr(a1))*1_C+(t1-1)*a1");
    }
}
