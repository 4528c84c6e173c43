//! The summand `L00`: `dd`-terms plus the elements `ξ` and `ζ`.

use std::collections::BTreeMap;

use crate::conic::ConicElement;
use crate::error::Result;
use crate::jordan::{CubicElement, PeirceIndex};
use crate::ring::{Context, ScalarPoly, Word};

/// `coef * dd(c, c')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdTerm {
    pub coef: ScalarPoly,
    pub c: CubicElement,
    pub cprime: CubicElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct L00 {
    pub dd: Vec<DdTerm>,
    pub xi: ScalarPoly,
    pub zeta: ScalarPoly,
}

/// One side of a sanitized `dd`-term.
#[derive(Clone, Debug)]
enum Side {
    Diag(u8),
    /// `[w]_{ij}` in the stored orientation of its slot.
    Off(u8, u8, Word),
}

impl Side {
    fn of(p: PeirceIndex, w: &Word) -> Side {
        if p.is_diagonal() {
            Side::Diag(p.i)
        } else {
            Side::Off(p.i, p.j, w.clone())
        }
    }

    fn indices(&self) -> (u8, u8) {
        match self {
            Side::Diag(i) => (*i, *i),
            Side::Off(i, j, _) => (*i, *j),
        }
    }

    /// `(other, a)` with this side equal to `[a]_{k, other}`.
    fn starting_at(&self, k: u8) -> (u8, ConicElement) {
        let Side::Off(i, j, w) = self else {
            unreachable!("diagonal side")
        };
        if *i == k {
            (*j, ConicElement::word(w.clone()))
        } else {
            (*i, ConicElement::word(w.conj()))
        }
    }

    /// `(other, a)` with this side equal to `[a]_{other, k}`.
    fn ending_at(&self, k: u8) -> (u8, ConicElement) {
        let Side::Off(i, j, w) = self else {
            unreachable!("diagonal side")
        };
        if *j == k {
            (*i, ConicElement::word(w.clone()))
        } else {
            (*j, ConicElement::word(w.conj()))
        }
    }
}

fn basis(p: PeirceIndex, w: &Word) -> CubicElement {
    if p.is_diagonal() {
        CubicElement::e(p.i)
    } else {
        CubicElement::off_diagonal(p.i, p.j, ConicElement::word(w.clone()))
    }
}

fn gamma(i: u8) -> ScalarPoly {
    ScalarPoly::gamma(i)
}

impl L00 {
    pub fn dd(coef: ScalarPoly, c: CubicElement, cprime: CubicElement) -> L00 {
        let mut out = L00::default();
        out.push(DdTerm { coef, c, cprime });
        out
    }

    fn push(&mut self, t: DdTerm) {
        if t.coef.is_zero() || t.c.is_zero() || t.cprime.is_zero() {
            return;
        }
        if let Some(k) = self
            .dd
            .iter()
            .position(|o| o.c == t.c && o.cprime == t.cprime)
        {
            let sum = &self.dd[k].coef + &t.coef;
            if sum.is_zero() {
                self.dd.remove(k);
            } else {
                self.dd[k].coef = sum;
            }
        } else {
            self.dd.push(t);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dd.is_empty() && self.xi.is_zero() && self.zeta.is_zero()
    }

    pub fn add(&self, o: &L00) -> L00 {
        let mut out = self.clone();
        for t in &o.dd {
            out.push(t.clone());
        }
        out.xi += &o.xi;
        out.zeta += &o.zeta;
        out
    }

    pub fn scale(&self, s: &ScalarPoly) -> L00 {
        let mut out = L00 {
            dd: Vec::new(),
            xi: &self.xi * s,
            zeta: &self.zeta * s,
        };
        for t in &self.dd {
            out.push(DdTerm {
                coef: &t.coef * s,
                c: t.c.clone(),
                cprime: t.cprime.clone(),
            });
        }
        out
    }

    pub fn render_parts(&self) -> Vec<String> {
        let mut parts = Vec::new();
        for t in &self.dd {
            let body = format!("dd_{{{},{}}}", t.c, t.cprime);
            parts.push(with_coefficient(&t.coef, &body));
        }
        if !self.xi.is_zero() {
            parts.push(with_coefficient(&self.xi, "xi"));
        }
        if !self.zeta.is_zero() {
            parts.push(with_coefficient(&self.zeta, "zeta"));
        }
        parts
    }

    /// Expand every term into single-position, single-word arguments with the
    /// scalars pulled into the coefficient, then merge equal keys.
    pub fn sanitize(&self) -> L00 {
        let mut out = L00 {
            dd: Vec::new(),
            xi: self.xi.clone(),
            zeta: self.zeta.clone(),
        };
        for t in &self.dd {
            for (s1, p, w1) in t.c.basis_pieces() {
                for (s2, q, w2) in t.cprime.basis_pieces() {
                    out.push(DdTerm {
                        coef: &(&t.coef * &s1) * &s2,
                        c: basis(p, &w1),
                        cprime: basis(q, &w2),
                    });
                }
            }
        }
        out
    }

    /// Normal form under the `L00` relations: Peirce vanishing, the
    /// `Z_{i→j}` normal form `dd([1]_ii, [a]_ij)`, diagonal collection,
    /// elimination of `dd([1]_33, [1]_33)`, and recombination of conjugate pairs.
    pub fn simplify(&self, ctx: &Context) -> Result<L00> {
        let clean = self.sanitize();
        let mut zmap: BTreeMap<(u8, u8), ConicElement> = BTreeMap::new();
        let mut zdiag: [ScalarPoly; 3] = Default::default();
        let mut zpair: BTreeMap<(u8, u8, Word, Word), ScalarPoly> = BTreeMap::new();
        let mut xi = clean.xi.clone();
        let mut zeta = clean.zeta.clone();

        let mut add_z = |i: u8, j: u8, a: ConicElement| {
            let slot = zmap.entry((i, j)).or_default();
            *slot = &*slot + &a;
        };

        for t in &clean.dd {
            let (sc, wc) = single_piece(&t.c);
            let (sp, wp) = single_piece(&t.cprime);
            let left = Side::of(sc, &wc);
            let right = Side::of(sp, &wp);
            let (li, lj) = left.indices();
            let (ri, rj) = right.indices();
            match (&left, &right) {
                (Side::Diag(k), Side::Diag(m)) => {
                    if k == m {
                        zdiag[(*k - 1) as usize] += &t.coef;
                    }
                }
                (Side::Diag(k), Side::Off(..)) => {
                    if *k == ri || *k == rj {
                        let (other, a) = right.starting_at(*k);
                        add_z(*k, other, a.scale(&t.coef));
                    }
                }
                (Side::Off(..), Side::Diag(k)) => {
                    if *k == li || *k == lj {
                        let (other, a) = left.ending_at(*k);
                        add_z(other, *k, a.scale(&t.coef));
                    }
                }
                (Side::Off(i, j, u), Side::Off(p, q, v)) => {
                    if (i, j) == (p, q) {
                        let e = zpair.entry((*i, *j, u.clone(), v.clone())).or_default();
                        *e += &t.coef;
                    } else {
                        let l = if *i == *p || *i == *q { *i } else { *j };
                        let (jj, a) = left.ending_at(l);
                        let (ii, b) = right.starting_at(l);
                        add_z(jj, ii, a.mul(&b).scale(&(&t.coef * &gamma(l))));
                    }
                }
            }
        }

        let mut pairs_out: Vec<DdTerm> = Vec::new();
        let keys: Vec<_> = zpair.keys().cloned().collect();
        let mut done = std::collections::BTreeSet::new();
        for key in keys {
            if done.contains(&key) {
                continue;
            }
            let (i, j, u, v) = key.clone();
            let l1 = zpair[&key].clone();
            let partner = (i, j, v.clone(), u.clone());
            let gij = &gamma(i) * &gamma(j);
            done.insert(key.clone());
            if u == v {
                let n = &(&gij * &ctx.norm_of_word(&u)?) * &l1;
                zdiag[(i - 1) as usize] += &n;
                zdiag[(j - 1) as usize] += &n;
                continue;
            }
            let l2 = zpair.get(&partner).cloned().unwrap_or_default();
            done.insert(partner);
            if !l2.is_zero() {
                let tr = ctx.trace_of_word(&Word::mul(&u, &v.conj()))?;
                let n = &(&gij * &tr) * &l2;
                zdiag[(i - 1) as usize] += &n;
                zdiag[(j - 1) as usize] += &n;
            }
            let rest = ctx.simplify_scalar(&(&l1 - &l2));
            if !rest.is_zero() {
                let c = CubicElement::off_diagonal(i, j, ConicElement::word(u.clone()));
                let cp = CubicElement::off_diagonal(i, j, ConicElement::word(v.clone()));
                pairs_out.push(DdTerm {
                    coef: rest,
                    c,
                    cprime: cp,
                });
            }
        }

        let t3 = std::mem::take(&mut zdiag[2]);
        if !t3.is_zero() {
            zeta += &t3.scale_int(2);
            xi = &xi - &t3;
            zdiag[0] = &zdiag[0] - &t3;
            zdiag[1] = &zdiag[1] - &t3;
        }

        let mut ordered: BTreeMap<(u8, u8), DdTerm> = BTreeMap::new();
        for (k, t) in zdiag.iter().enumerate() {
            let t = ctx.simplify_scalar(t);
            if !t.is_zero() {
                let i = k as u8 + 1;
                ordered.insert(
                    (i, i),
                    DdTerm {
                        coef: ScalarPoly::one(),
                        c: CubicElement::e(i),
                        cprime: CubicElement::diagonal(i, t),
                    },
                );
            }
        }
        for ((i, j), a) in zmap {
            let a = a.simplify(ctx)?;
            if !a.is_zero() {
                ordered.insert(
                    (i, j),
                    DdTerm {
                        coef: ScalarPoly::one(),
                        c: CubicElement::e(i),
                        cprime: CubicElement::off_diagonal(i, j, a),
                    },
                );
            }
        }
        let mut out = L00 {
            dd: Vec::new(),
            xi: ctx.simplify_scalar(&xi),
            zeta: ctx.simplify_scalar(&zeta),
        };
        for t in ordered.into_values().chain(pairs_out) {
            out.push(t);
        }
        Ok(out)
    }
}

/// Position and word of a sanitized single-piece argument.
fn single_piece(c: &CubicElement) -> (PeirceIndex, Word) {
    let pieces = c.basis_pieces();
    debug_assert_eq!(pieces.len(), 1);
    let (_, p, w) = pieces.into_iter().next().expect("sanitized dd argument");
    (p, w)
}

fn with_coefficient(c: &ScalarPoly, body: &str) -> String {
    if c.is_one() {
        body.to_string()
    } else {
        format!("({c})*{body}")
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

    fn render(l: &L00) -> String {
        let p = l.render_parts();
        if p.is_empty() {
            "0".into()
        } else {
            p.join("+")
        }
    }

    #[test]
    fn sanitize_merges_coefficients() {
        let c = CubicElement::off_diagonal(1, 2, a(1));
        let d = CubicElement::off_diagonal(2, 3, a(2));
        let l = L00::dd(ScalarPoly::t(1), c.clone(), d.clone()).add(&L00::dd(
            ScalarPoly::t(2),
            c.clone(),
            d.clone(),
        ));
        let s = l.sanitize();
        assert_eq!(s.dd.len(), 1);
        assert_eq!(s.dd[0].coef.to_string(), "t1+t2");
        assert!(L00::dd(ScalarPoly::one(), c, CubicElement::zero())
            .sanitize()
            .is_zero());
    }

    #[test]
    fn sanitize_splits_by_bilinearity() {
        let c =
            &CubicElement::off_diagonal(1, 2, a(1)) + &CubicElement::diagonal(1, ScalarPoly::t(1));
        let d = CubicElement::off_diagonal(2, 3, a(2));
        let s = L00::dd(ScalarPoly::one(), c, d).sanitize();
        assert_eq!(s.dd.len(), 2);
    }

    #[test]
    fn chain_rewrites_to_normal_form() {
        let l = L00::dd(
            ScalarPoly::one(),
            CubicElement::off_diagonal(1, 2, a(1)),
            CubicElement::off_diagonal(2, 3, a(2)),
        );
        assert_eq!(
            render(&l.simplify(&ctx()).unwrap()),
            "dd_{(1)[11],((g2)*(a2'*a1'))[31]}"
        );
    }

    #[test]
    fn disjoint_positions_vanish() {
        let l = L00::dd(
            ScalarPoly::one(),
            CubicElement::off_diagonal(1, 2, a(1)),
            CubicElement::diagonal(3, ScalarPoly::t(1)),
        );
        assert!(l.simplify(&ctx()).unwrap().is_zero());
    }

    #[test]
    fn third_diagonal_is_eliminated() {
        let l = L00::dd(ScalarPoly::one(), CubicElement::e(3), CubicElement::e(3));
        assert_eq!(
            render(&l.simplify(&ctx()).unwrap()),
            "dd_{(1)[11],(-1)[11]}+dd_{(1)[22],(-1)[22]}+(-1)*xi+(2)*zeta"
        );
    }

    #[test]
    fn conjugate_pair_collapses_to_diagonals() {
        let c = CubicElement::off_diagonal(1, 2, a(1));
        let l = L00::dd(ScalarPoly::one(), c.clone(), c);
        assert_eq!(
            render(&l.simplify(&ctx()).unwrap()),
            "dd_{(1)[11],(g1*g2*n(a1))[11]}+dd_{(1)[22],(g1*g2*n(a1))[22]}"
        );
    }

    #[test]
    fn linearized_pair_splits() {
        let u = CubicElement::off_diagonal(1, 2, a(1));
        let v = CubicElement::off_diagonal(1, 2, a(2));
        let l =
            L00::dd(ScalarPoly::t(1), u.clone(), v.clone()).add(&L00::dd(ScalarPoly::t(2), v, u));
        let s = l.simplify(&ctx()).unwrap();
        let r = render(&s);
        assert!(r.contains("(t1-t2)*dd_{((1)*a1)[12],((1)*a2)[12]}"), "{r}");
        assert_eq!(s.simplify(&ctx()).unwrap(), s);
    }

    #[test]
    fn simplification_is_idempotent_on_mixed_input() {
        let ctx = ctx();
        let terms = [
            (
                CubicElement::off_diagonal(2, 1, a(1)),
                CubicElement::diagonal(1, ScalarPoly::t(2)),
            ),
            (CubicElement::e(2), CubicElement::off_diagonal(3, 2, a(3))),
            (
                CubicElement::off_diagonal(3, 1, a(2)),
                CubicElement::off_diagonal(1, 2, a(1)),
            ),
            (
                CubicElement::diagonal(3, ScalarPoly::t(1)),
                CubicElement::e(3),
            ),
        ];
        let mut l = L00::default();
        for (c, d) in terms {
            l = l.add(&L00::dd(ScalarPoly::one(), c, d));
        }
        let s = l.simplify(&ctx).unwrap();
        assert_eq!(s.simplify(&ctx).unwrap(), s);
    }
}
