//! The cubic Jordan matrix algebra `Her3(C, k, Γ)`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::conic::ConicElement;
use crate::error::{Error, Result};
use crate::ring::{Context, ScalarPoly, Word};

/// Cyclic permutations `(i, j, l)` of `(1, 2, 3)`, zero-based.
pub const CYCLIC: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

/// A Peirce position `(i, j)`, 1-based. `(i, j)` and `(j, i)` name the same component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeirceIndex {
    pub i: u8,
    pub j: u8,
}

impl PeirceIndex {
    pub fn new(i: u8, j: u8) -> Result<PeirceIndex> {
        if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
            return Err(Error::IndexOutOfBounds {
                what: "Peirce index ",
                index: i.max(j) as usize,
                max: 3,
            });
        }
        Ok(PeirceIndex { i, j })
    }

    pub fn is_diagonal(self) -> bool {
        self.i == self.j
    }

    /// Storage slot: 0..3 diagonal, 3..6 for `u1 = [23]`, `u2 = [31]`, `u3 = [12]`.
    pub fn slot(self) -> usize {
        if self.i == self.j {
            return (self.i - 1) as usize;
        }
        3 + (6 - self.i - self.j - 1) as usize
    }

    /// True if `(i, j)` is the stored orientation of its off-diagonal slot.
    pub fn is_stored_orientation(self) -> bool {
        matches!((self.i, self.j), (2, 3) | (3, 1) | (1, 2))
    }

    pub fn normalized(self) -> PeirceIndex {
        if self.is_diagonal() || self.is_stored_orientation() {
            self
        } else {
            PeirceIndex {
                i: self.j,
                j: self.i,
            }
        }
    }

    pub fn from_slot(slot: usize) -> PeirceIndex {
        match slot {
            0 => PeirceIndex { i: 1, j: 1 },
            1 => PeirceIndex { i: 2, j: 2 },
            2 => PeirceIndex { i: 3, j: 3 },
            3 => PeirceIndex { i: 2, j: 3 },
            4 => PeirceIndex { i: 3, j: 1 },
            5 => PeirceIndex { i: 1, j: 2 },
            _ => panic!("slot out of range"),
        }
    }

    pub fn all() -> Vec<PeirceIndex> {
        let mut out = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                out.push(PeirceIndex { i, j });
            }
        }
        out
    }
}

impl fmt::Display for PeirceIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}{}]", self.i, self.j)
    }
}

/// Payload for [`CubicElement::cubic_el`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Scalar(ScalarPoly),
    Conic(ConicElement),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CubicElement {
    pub xi: [ScalarPoly; 3],
    pub u: [ConicElement; 3],
}

fn g(i: usize) -> ScalarPoly {
    ScalarPoly::gamma(i as u8 + 1)
}

impl CubicElement {
    pub fn zero() -> CubicElement {
        CubicElement::default()
    }

    /// `e1 + e2 + e3`.
    pub fn identity() -> CubicElement {
        let mut x = CubicElement::zero();
        for i in 0..3 {
            x.xi[i] = ScalarPoly::one();
        }
        x
    }

    /// `e_i`, 1-based.
    pub fn e(i: u8) -> CubicElement {
        CubicElement::diagonal(i, ScalarPoly::one())
    }

    pub fn diagonal(i: u8, t: ScalarPoly) -> CubicElement {
        let mut x = CubicElement::zero();
        x.xi[(i - 1) as usize] = t;
        x
    }

    /// `[a]_{ij}` with `i != j`; stores `conj(a)` for the reversed orientation.
    pub fn off_diagonal(i: u8, j: u8, a: ConicElement) -> CubicElement {
        let p = PeirceIndex { i, j };
        let mut x = CubicElement::zero();
        x.u[p.slot() - 3] = if p.is_stored_orientation() {
            a
        } else {
            a.conj()
        };
        x
    }

    pub fn cubic_el(v: Entry, i: u8, j: u8) -> Result<CubicElement> {
        let p = PeirceIndex::new(i, j)?;
        match (p.is_diagonal(), v) {
            (true, Entry::Scalar(t)) => Ok(CubicElement::diagonal(i, t)),
            (true, Entry::Conic(_)) => Err(Error::Kind(format!(
                "diagonal position [{i}{j}] needs a scalar, found a conic element"
            ))),
            (false, Entry::Conic(a)) => Ok(CubicElement::off_diagonal(i, j, a)),
            (false, Entry::Scalar(t)) => {
                Ok(CubicElement::off_diagonal(i, j, ConicElement::scalar(t)))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(ScalarPoly::is_zero) && self.u.iter().all(ConicElement::is_zero)
    }

    pub fn scale(&self, s: &ScalarPoly) -> CubicElement {
        CubicElement {
            xi: std::array::from_fn(|i| &self.xi[i] * s),
            u: std::array::from_fn(|i| self.u[i].scale(s)),
        }
    }

    pub fn simplify(&self, ctx: &Context) -> Result<CubicElement> {
        let mut u = [
            ConicElement::zero(),
            ConicElement::zero(),
            ConicElement::zero(),
        ];
        for i in 0..3 {
            u[i] = self.u[i].simplify(ctx)?;
        }
        Ok(CubicElement {
            xi: std::array::from_fn(|i| ctx.simplify_scalar(&self.xi[i])),
            u,
        })
    }

    pub fn project(&self, p: PeirceIndex) -> CubicElement {
        let mut out = CubicElement::zero();
        let s = p.slot();
        if s < 3 {
            out.xi[s] = self.xi[s].clone();
        } else {
            out.u[s - 3] = self.u[s - 3].clone();
        }
        out
    }

    /// Normalized positions with nonzero content after simplification.
    pub fn peirce_memberships(&self, ctx: &Context) -> Result<BTreeSet<PeirceIndex>> {
        let s = self.simplify(ctx)?;
        let mut out = BTreeSet::new();
        for slot in 0..6 {
            let nonzero = if slot < 3 {
                !s.xi[slot].is_zero()
            } else {
                !s.u[slot - 3].is_zero()
            };
            if nonzero {
                out.insert(PeirceIndex::from_slot(slot));
            }
        }
        Ok(out)
    }

    /// Split into single-position, single-word pieces `(coef, position, word)`;
    /// diagonal pieces carry the unit word.
    pub fn basis_pieces(&self) -> Vec<(ScalarPoly, PeirceIndex, Word)> {
        let mut out = Vec::new();
        for slot in 0..6 {
            let p = PeirceIndex::from_slot(slot);
            if slot < 3 {
                if !self.xi[slot].is_zero() {
                    out.push((self.xi[slot].clone(), p, Word::unit()));
                }
            } else {
                for (w, c) in self.u[slot - 3].terms() {
                    out.push((c.clone(), p, w.clone()));
                }
            }
        }
        out
    }

    pub fn norm(&self, ctx: &Context) -> Result<ScalarPoly> {
        let g123 = &(&g(0) * &g(1)) * &g(2);
        let mut out = &(&self.xi[0] * &self.xi[1]) * &self.xi[2];
        let u123 = self.u[0].mul(&self.u[1]).mul(&self.u[2]);
        out += &(&g123 * &u123.trace(ctx)?);
        for (i, j, l) in CYCLIC {
            let t = &(&(&g(j) * &g(l)) * &self.xi[i]) * &self.u[i].norm(ctx)?;
            out = &out - &t;
        }
        Ok(out)
    }

    pub fn sharp(&self, ctx: &Context) -> Result<CubicElement> {
        let mut out = CubicElement::zero();
        for (i, j, l) in CYCLIC {
            let gjl = &g(j) * &g(l);
            out.xi[i] = &(&self.xi[j] * &self.xi[l]) - &(&gjl * &self.u[i].norm(ctx)?);
            out.u[i] =
                &self.u[i].scale(&-&self.xi[i]) + &self.u[j].mul(&self.u[l]).conj().scale(&g(i));
        }
        Ok(out)
    }

    pub fn cross(&self, y: &CubicElement, ctx: &Context) -> Result<CubicElement> {
        let mut out = CubicElement::zero();
        for (i, j, l) in CYCLIC {
            let gjl = &g(j) * &g(l);
            let d = &(&self.xi[j] * &y.xi[l]) + &(&y.xi[j] * &self.xi[l]);
            out.xi[i] = &d - &(&gjl * &self.u[i].norm_bilinear(&y.u[i], ctx)?);
            let lin = &self.u[j].mul(&y.u[l]) + &y.u[j].mul(&self.u[l]);
            out.u[i] = &(&y.u[i].scale(&-&self.xi[i]) - &self.u[i].scale(&y.xi[i]))
                + &lin.conj().scale(&g(i));
        }
        Ok(out)
    }

    pub fn trace_t(&self, y: &CubicElement, ctx: &Context) -> Result<ScalarPoly> {
        let mut out = ScalarPoly::zero();
        for (i, j, l) in CYCLIC {
            out += &(&self.xi[i] * &y.xi[i]);
            out += &(&(&g(j) * &g(l)) * &self.u[i].norm_bilinear(&y.u[i], ctx)?);
        }
        Ok(out)
    }

    /// `U_x y = T(x, y) x - x♯ × y`.
    pub fn u_op(&self, y: &CubicElement, ctx: &Context) -> Result<CubicElement> {
        let t = self.trace_t(y, ctx)?;
        Ok(&self.scale(&t) - &self.sharp(ctx)?.cross(y, ctx)?)
    }

    /// `{x y z} = T(x, y) z + T(y, z) x - (z × x) × y`.
    pub fn triple_d(
        x: &CubicElement,
        y: &CubicElement,
        z: &CubicElement,
        ctx: &Context,
    ) -> Result<CubicElement> {
        let a = z.scale(&x.trace_t(y, ctx)?);
        let b = x.scale(&y.trace_t(z, ctx)?);
        let c = z.cross(x, ctx)?.cross(y, ctx)?;
        Ok(&(&a + &b) - &c)
    }
}

impl fmt::Display for CubicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0_J");
        }
        let mut first = true;
        for slot in 0..6 {
            let p = PeirceIndex::from_slot(slot);
            let body = if slot < 3 {
                if self.xi[slot].is_zero() {
                    continue;
                }
                self.xi[slot].to_string()
            } else {
                if self.u[slot - 3].is_zero() {
                    continue;
                }
                self.u[slot - 3].to_string()
            };
            if !first {
                f.write_str("+")?;
            }
            first = false;
            write!(f, "({body}){p}")?;
        }
        Ok(())
    }
}

impl Add<&CubicElement> for &CubicElement {
    type Output = CubicElement;
    fn add(self, rhs: &CubicElement) -> CubicElement {
        CubicElement {
            xi: std::array::from_fn(|i| &self.xi[i] + &rhs.xi[i]),
            u: std::array::from_fn(|i| &self.u[i] + &rhs.u[i]),
        }
    }
}

impl Sub<&CubicElement> for &CubicElement {
    type Output = CubicElement;
    fn sub(self, rhs: &CubicElement) -> CubicElement {
        self + &(-rhs)
    }
}

impl Neg for &CubicElement {
    type Output = CubicElement;
    fn neg(self) -> CubicElement {
        CubicElement {
            xi: std::array::from_fn(|i| -&self.xi[i]),
            u: std::array::from_fn(|i| -&self.u[i]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u16) -> ConicElement {
        ConicElement::generator(i)
    }

    fn ctx() -> Context {
        Context::new(6, 3, 4).unwrap()
    }

    #[test]
    fn constructor_renderings() {
        let x = CubicElement::cubic_el(Entry::Scalar(ScalarPoly::t(1)), 2, 2).unwrap();
        assert_eq!(x.to_string(), "(t1)[22]");
        let y = CubicElement::cubic_el(Entry::Conic(a(2)), 2, 1).unwrap();
        assert_eq!(y.to_string(), "((1)*a2')[12]");
        let z = CubicElement::cubic_el(Entry::Scalar(ScalarPoly::zero()), 1, 2).unwrap();
        assert_eq!(z.to_string(), "0_J");
        assert!(CubicElement::cubic_el(Entry::Conic(a(1)), 1, 1).is_err());
    }

    #[test]
    fn jordan_d_transcripts() {
        let ctx = ctx();
        let x = CubicElement::diagonal(2, ScalarPoly::t(1));
        let y = CubicElement::off_diagonal(2, 1, a(2));
        let z = CubicElement::off_diagonal(1, 2, a(3));
        let d = CubicElement::triple_d(&x, &y, &z, &ctx).unwrap();
        assert_eq!(d.to_string(), "(g1*g2*t1*tr(a2a3))[22]");

        let x = CubicElement::off_diagonal(2, 3, a(1));
        let y = CubicElement::off_diagonal(3, 1, a(2));
        let z = CubicElement::off_diagonal(1, 3, a(3));
        let d = CubicElement::triple_d(&x, &y, &z, &ctx).unwrap();
        assert_eq!(
            d.to_string(),
            "((g1*g3*tr(a2a3))*a1+(-g1*g3)*((a1*a3')*a2'))[23]"
        );
    }

    #[test]
    fn norm_and_sharp_of_idempotents() {
        let ctx = ctx();
        assert!(CubicElement::identity().norm(&ctx).unwrap().is_one());
        assert!(CubicElement::e(1).norm(&ctx).unwrap().is_zero());
        assert!(CubicElement::e(1).sharp(&ctx).unwrap().is_zero());
        let e12 = &CubicElement::e(1) + &CubicElement::e(2);
        assert_eq!(e12.sharp(&ctx).unwrap(), CubicElement::e(3));
        assert_eq!(
            CubicElement::e(1).cross(&CubicElement::e(2), &ctx).unwrap(),
            CubicElement::e(3)
        );
        assert!(CubicElement::off_diagonal(2, 3, a(1))
            .norm(&ctx)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn bilinear_trace_examples() {
        let ctx = ctx();
        assert!(CubicElement::e(1)
            .trace_t(&CubicElement::e(1), &ctx)
            .unwrap()
            .is_one());
        assert!(CubicElement::e(1)
            .trace_t(&CubicElement::e(2), &ctx)
            .unwrap()
            .is_zero());
        let t = CubicElement::off_diagonal(1, 2, a(1))
            .trace_t(&CubicElement::off_diagonal(1, 2, a(2)), &ctx)
            .unwrap();
        assert_eq!(
            ctx.simplify_scalar(&t).to_string(),
            "g1*g2*tr(a1)*tr(a2)-g1*g2*tr(a1a2)"
        );
    }

    #[test]
    fn u_operator_examples() {
        let ctx = ctx();
        let e1 = CubicElement::e(1);
        assert_eq!(e1.u_op(&e1, &ctx).unwrap(), e1);
        let y = CubicElement::off_diagonal(1, 2, a(1));
        assert!(CubicElement::zero().u_op(&y, &ctx).unwrap().is_zero());
    }

    #[test]
    fn peirce_projection() {
        let x =
            &CubicElement::diagonal(2, ScalarPoly::t(1)) + &CubicElement::off_diagonal(1, 2, a(1));
        let p22 = PeirceIndex::new(2, 2).unwrap();
        assert_eq!(x.project(p22), CubicElement::diagonal(2, ScalarPoly::t(1)));
        assert_eq!(
            x.project(PeirceIndex::new(2, 1).unwrap()),
            x.project(PeirceIndex::new(1, 2).unwrap())
        );
    }
}
