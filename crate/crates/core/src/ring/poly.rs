//! Laurent-in-γ multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::word::Word;

/// Indeterminates of the coefficient ring `k`.
///
/// The derived order is the display order inside monomials:
/// `g1 < g2 < g3 < t1 < … < n(a1) < … < tr(…)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Indet {
    /// Structure constant γ_i, i ∈ {1,2,3}; may carry negative exponents.
    Gamma(u8),
    Scalar(u16),
    Norm(u16),
    /// Trace of a canonical trace word.
    Trace(Word),
}

impl Indet {
    pub fn is_gamma(&self) -> bool {
        matches!(self, Indet::Gamma(_))
    }
}

impl fmt::Display for Indet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indet::Gamma(i) => write!(f, "g{i}"),
            Indet::Scalar(i) => write!(f, "t{i}"),
            Indet::Norm(i) => write!(f, "n(a{i})"),
            Indet::Trace(w) => write!(f, "tr({})", w.trace_name()),
        }
    }
}

/// Power product of indeterminates, sorted by indeterminate, no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Indet, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(indet: Indet, exp: i32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(indet, exp)])
        }
    }

    pub fn factors(&self) -> &[(Indet, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.0[i].1 + other.0[j].1;
                    if e != 0 {
                        out.push((self.0[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    fn render(&self, out: &mut String) {
        for (k, (indet, e)) in self.0.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            out.push_str(&indet.to_string());
            if *e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

impl Ord for Monomial {
    /// Higher total degree first; then lexicographic by indeterminate, a
    /// higher power of the same indeterminate first.
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(other.0.iter()) {
                let c = a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1));
                if c != Ordering::Equal {
                    return c;
                }
            }
            other.0.len().cmp(&self.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact element of `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ScalarPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

/// How negative γ-exponents are printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    /// `g1^-1*t1`
    Laurent,
    /// `t1/g1`: numerator over the common γ-denominator.
    Fraction,
}

impl ScalarPoly {
    pub fn zero() -> ScalarPoly {
        ScalarPoly::default()
    }

    pub fn one() -> ScalarPoly {
        ScalarPoly::from_int(1)
    }

    pub fn from_int(c: i64) -> ScalarPoly {
        ScalarPoly::from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(c: BigRational) -> ScalarPoly {
        ScalarPoly::term(c, Monomial::one())
    }

    pub fn term(c: BigRational, m: Monomial) -> ScalarPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ScalarPoly { terms }
    }

    pub fn indet(indet: Indet) -> ScalarPoly {
        ScalarPoly::term(BigRational::one(), Monomial::var(indet, 1))
    }

    pub fn gamma(i: u8) -> ScalarPoly {
        ScalarPoly::indet(Indet::Gamma(i))
    }

    /// γ_i^{-1}
    pub fn gamma_inverse(i: u8) -> ScalarPoly {
        ScalarPoly::term(BigRational::one(), Monomial::var(Indet::Gamma(i), -1))
    }

    pub fn gamma_pow(i: u8, e: i32) -> ScalarPoly {
        ScalarPoly::term(BigRational::one(), Monomial::var(Indet::Gamma(i), e))
    }

    pub fn t(i: u16) -> ScalarPoly {
        ScalarPoly::indet(Indet::Scalar(i))
    }

    pub fn norm_indet(i: u16) -> ScalarPoly {
        ScalarPoly::indet(Indet::Norm(i))
    }

    pub fn trace_indet(w: Word) -> ScalarPoly {
        ScalarPoly::indet(Indet::Trace(w))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The value if this is a constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// True iff every coefficient is an integer.
    pub fn is_gamma_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &BigRational) -> ScalarPoly {
        if c.is_zero() {
            return ScalarPoly::zero();
        }
        ScalarPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> ScalarPoly {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> ScalarPoly {
        let mut acc = ScalarPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a single term whose indeterminates are all γ's.
    pub fn inverse(&self) -> Option<ScalarPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if !m.0.iter().all(|(i, _)| i.is_gamma()) {
            return None;
        }
        let inv = Monomial(m.0.iter().map(|(i, e)| (i.clone(), -e)).collect());
        Some(ScalarPoly::term(c.recip(), inv))
    }

    /// Raise to an integer power; negative powers need [`ScalarPoly::inverse`].
    pub fn pow_signed(&self, e: i64) -> Option<ScalarPoly> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            Some(self.inverse()?.pow((-e) as u32))
        }
    }

    pub fn indets(&self) -> impl Iterator<Item = &Indet> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(i, _)| i))
    }

    /// Substitute indeterminates; `f` returns `None` to keep one as is.
    /// Substituted indeterminates must carry nonnegative exponents.
    pub fn substitute<F>(&self, mut f: F) -> (ScalarPoly, bool)
    where
        F: FnMut(&Indet) -> Option<ScalarPoly>,
    {
        let mut changed = false;
        let mut out = ScalarPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = ScalarPoly::from_rational(c.clone());
            for (indet, e) in &m.0 {
                match f(indet) {
                    Some(q) if *e > 0 => {
                        changed = true;
                        factor = &factor * &q.pow(*e as u32);
                    }
                    _ => kept.push((indet.clone(), *e)),
                }
            }
            let kept = ScalarPoly::term(BigRational::one(), Monomial(kept));
            out += &(&factor * &kept);
        }
        (out, changed)
    }

    /// Evaluate with a valuation of the indeterminates.
    pub fn evaluate<F>(&self, mut value: F) -> BigRational
    where
        F: FnMut(&Indet) -> BigRational,
    {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (indet, e) in &m.0 {
                let v = value(indet);
                let p = if *e >= 0 {
                    num_traits::pow(v, *e as usize)
                } else {
                    num_traits::pow(v.recip(), (-*e) as usize)
                };
                t *= p;
            }
            total += t;
        }
        total
    }

    pub fn render(&self, style: RenderStyle) -> String {
        match style {
            RenderStyle::Laurent => render_terms(self),
            RenderStyle::Fraction => render_fraction(self),
        }
    }
}

fn render_coefficient_term(c: &BigRational, m: &Monomial) -> String {
    let mut s = String::new();
    if m.is_one() {
        s.push_str(&c.to_string());
        return s;
    }
    if c.is_one() {
    } else if (-c).is_one() {
        s.push('-');
    } else {
        s.push_str(&c.to_string());
        s.push('*');
    }
    m.render(&mut s);
    s
}

fn render_terms(p: &ScalarPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms.iter().enumerate() {
        let t = render_coefficient_term(c, m);
        if k > 0 && !t.starts_with('-') {
            out.push('+');
        }
        out.push_str(&t);
    }
    out
}

fn render_fraction(p: &ScalarPoly) -> String {
    let mut den = [0i32; 3];
    for m in p.terms.keys() {
        for (i, e) in &m.0 {
            if let Indet::Gamma(g) = i {
                let slot = &mut den[(*g - 1) as usize];
                *slot = (*slot).max(-e);
            }
        }
    }
    if den.iter().all(|&d| d == 0) {
        return render_terms(p);
    }
    let mut d = Monomial::one();
    for (g, &e) in den.iter().enumerate() {
        if e > 0 {
            d = d.mul(&Monomial::var(Indet::Gamma(g as u8 + 1), e));
        }
    }
    let num = p * &ScalarPoly::term(BigRational::one(), d.clone());
    let mut num_s = render_terms(&num);
    if num.num_terms() > 1 {
        num_s = format!("({num_s})");
    }
    let mut den_s = String::new();
    d.render(&mut den_s);
    if d.0.len() > 1 {
        den_s = format!("({den_s})");
    }
    format!("{num_s}/{den_s}")
}

thread_local! {
    static STYLE: std::cell::Cell<RenderStyle> = const { std::cell::Cell::new(RenderStyle::Laurent) };
}

/// Run `f` with `Display` for scalars switched to `style` on this thread.
pub fn with_render_style<T>(style: RenderStyle, f: impl FnOnce() -> T) -> T {
    let old = STYLE.with(|s| s.replace(style));
    let out = f();
    STYLE.with(|s| s.set(old));
    out
}

impl fmt::Display for ScalarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(STYLE.with(|s| s.get())))
    }
}

impl AddAssign<&ScalarPoly> for ScalarPoly {
    fn add_assign(&mut self, rhs: &ScalarPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add<&ScalarPoly> for &ScalarPoly {
    type Output = ScalarPoly;
    fn add(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ScalarPoly {
    type Output = ScalarPoly;
    fn add(mut self, rhs: ScalarPoly) -> ScalarPoly {
        self += &rhs;
        self
    }
}

impl Neg for &ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        ScalarPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for ScalarPoly {
    type Output = ScalarPoly;
    fn neg(self) -> ScalarPoly {
        -&self
    }
}

impl Sub<&ScalarPoly> for &ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for ScalarPoly {
    type Output = ScalarPoly;
    fn sub(self, rhs: ScalarPoly) -> ScalarPoly {
        &self - &rhs
    }
}

impl Mul<&ScalarPoly> for &ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: &ScalarPoly) -> ScalarPoly {
        let mut out = ScalarPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for ScalarPoly {
    type Output = ScalarPoly;
    fn mul(self, rhs: ScalarPoly) -> ScalarPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_inverse_cancels() {
        let t1 = ScalarPoly::t(1);
        assert!((&t1 + &(-&t1)).is_zero());
    }

    #[test]
    fn laurent_cancellation() {
        let p = &ScalarPoly::gamma(3) * &ScalarPoly::gamma_inverse(3);
        assert!(p.is_one());
    }

    #[test]
    fn binomial_square() {
        let s = &ScalarPoly::t(1) + &ScalarPoly::t(2);
        let sq = s.pow(2);
        assert_eq!(sq.to_string(), "t1^2+2*t1*t2+t2^2");
    }

    #[test]
    fn renders_negative_exponents_both_ways() {
        let p = &ScalarPoly::norm_indet(2) * &ScalarPoly::gamma_inverse(3);
        let p = -p;
        assert_eq!(p.render(RenderStyle::Laurent), "-g3^-1*n(a2)");
        assert_eq!(p.render(RenderStyle::Fraction), "-n(a2)/g3");
        assert_eq!(
            ScalarPoly::gamma_inverse(3).render(RenderStyle::Fraction),
            "1/g3"
        );
        assert_eq!(ScalarPoly::gamma_inverse(1).to_string(), "g1^-1");
    }

    #[test]
    fn integrality_flag() {
        let half = ScalarPoly::from_rational(BigRational::new(1.into(), 2.into()));
        assert!(!(&half * &ScalarPoly::t(1)).is_gamma_integral());
        assert!((&ScalarPoly::gamma_inverse(1) * &ScalarPoly::t(1)).is_gamma_integral());
    }

    #[test]
    fn substitution_replaces_powers() {
        let p = ScalarPoly::t(1).pow(2);
        let (q, changed) = p.substitute(|i| match i {
            Indet::Scalar(1) => Some(&ScalarPoly::t(2) + &ScalarPoly::one()),
            _ => None,
        });
        assert!(changed);
        assert_eq!(q.to_string(), "t2^2+2*t2+1");
    }
}
