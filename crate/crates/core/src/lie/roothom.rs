//! Twisted root homomorphisms `ρ_α` and the twist data `(ε_α, τ(α))`.

use std::collections::BTreeMap;

use super::{LieElement, L00};
use crate::dsl::value::{mismatch, Kind, Value};
use crate::error::{Error, Result};
use crate::jordan::{CubicElement, PeirceIndex};
use crate::ring::ScalarPoly;
use crate::roots::{slot_of, zero_fiber_pair, RootF4, Slot};

/// Sign and γ-exponents of one root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Twist {
    pub epsilon: i8,
    pub tau: [i8; 3],
}

impl Default for Twist {
    fn default() -> Twist {
        Twist {
            epsilon: 1,
            tau: [0; 3],
        }
    }
}

impl Twist {
    pub fn factor(&self) -> ScalarPoly {
        let mut f = ScalarPoly::from_int(self.epsilon as i64);
        for (k, &e) in self.tau.iter().enumerate() {
            f = &f * &ScalarPoly::gamma_pow(k as u8 + 1, e as i32);
        }
        f
    }
}

/// Per-root twists; roots without a record use `ε = 1, τ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistTable {
    entries: BTreeMap<RootF4, Twist>,
}

/// Twists fixed by the worked examples.
pub fn anchors() -> Vec<(RootF4, Twist)> {
    vec![
        (
            RootF4([2, 0, 0, 0]),
            Twist {
                epsilon: -1,
                tau: [0, 0, 0],
            },
        ),
        (
            RootF4([1, 0, 0, 1]),
            Twist {
                epsilon: 1,
                tau: [-1, 0, 0],
            },
        ),
    ]
}

const SHIPPED: &str = include_str!("../../data/twist_shipped.tbl");

impl TwistTable {
    pub fn shipped() -> TwistTable {
        TwistTable::parse(SHIPPED).expect("shipped twist table parses")
    }

    pub fn shipped_source() -> &'static str {
        SHIPPED
    }

    /// Parse records `r1 r2 r3 r4 : eps t1 t2 t3`. The anchors are always
    /// present; a record contradicting one is an error.
    pub fn parse(src: &str) -> Result<TwistTable> {
        let mut entries: BTreeMap<RootF4, Twist> = anchors().into_iter().collect();
        let mut seen = std::collections::BTreeSet::new();
        for (k, raw) in src.lines().enumerate() {
            let line = k + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fail = |msg: String| Error::TableFormat { line, msg };
            let (lhs, rhs) = body
                .split_once(':')
                .ok_or_else(|| fail("expected 'r1 r2 r3 r4 : eps t1 t2 t3'".into()))?;
            let ints = |s: &str| -> Result<Vec<i64>> {
                s.split_whitespace()
                    .map(|w| {
                        w.parse::<i64>()
                            .map_err(|_| fail(format!("not an integer: '{w}'")))
                    })
                    .collect()
            };
            let r = ints(lhs)?;
            let v = ints(rhs)?;
            if r.len() != 4 || v.len() != 4 {
                return Err(fail(
                    "expected four root coordinates and four twist values".into(),
                ));
            }
            let root = RootF4([r[0], r[1], r[2], r[3]])
                .checked()
                .map_err(|e| fail(e.to_string()))?;
            if v[0].abs() != 1 || v[1..].iter().any(|t| t.abs() > 1) {
                return Err(fail("epsilon must be ±1 and each tau in {-1,0,1}".into()));
            }
            let tw = Twist {
                epsilon: v[0] as i8,
                tau: [v[1] as i8, v[2] as i8, v[3] as i8],
            };
            if !seen.insert(root) {
                return Err(fail(format!("duplicate record for {root}")));
            }
            if let Some((_, a)) = anchors().into_iter().find(|(r, _)| *r == root) {
                if a != tw {
                    return Err(fail(format!(
                        "record for {root} contradicts the anchored twist"
                    )));
                }
            }
            entries.insert(root, tw);
        }
        Ok(TwistTable { entries })
    }

    pub fn get(&self, alpha: RootF4) -> Twist {
        self.entries.get(&alpha).copied().unwrap_or_default()
    }

    /// Number of roots with an explicit record.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn cubic_in_slot(slot: Slot, payload: &Value) -> Result<CubicElement> {
    Ok(match slot {
        Slot::Diagonal(i) => match payload {
            Value::Scalar(s) => CubicElement::diagonal(i, s.clone()),
            v => return Err(mismatch(Kind::Scalar, v.kind())),
        },
        Slot::OffDiagonal(i, j) => CubicElement::off_diagonal(i, j, payload.clone().into_conic()?),
    })
}

/// `ρ_α(b)`: the untwisted placement of `ε_α γ^τ(α) b`.
pub fn lie_root_hom(alpha: RootF4, payload: Value, twists: &TwistTable) -> Result<LieElement> {
    let alpha = alpha.checked()?;
    let f = twists.get(alpha).factor();
    let b = match payload {
        Value::Scalar(s) if alpha.is_long() => Value::Scalar(&s * &f),
        Value::Conic(_) if alpha.is_long() => {
            return Err(Error::Kind(format!(
                "the long root {alpha} takes a scalar parameter, found conic"
            )))
        }
        Value::Scalar(_) | Value::Conic(_) => Value::Conic(payload.into_conic()?.scale(&f)),
        v => {
            return Err(Error::Kind(format!(
                "root homomorphisms take a scalar or conic parameter, found {}",
                v.kind()
            )))
        }
    };
    let scalar = || b.clone().into_scalar();
    let beta = alpha.pi().0;
    let mut out = LieElement::zero();
    match beta {
        [-2, -1] => out.x = scalar()?,
        [2, 1] => out.y = scalar()?,
        [-1, -2] => out.brown_minus.lambda = scalar()?,
        [-1, 1] => out.brown_minus.mu = scalar()?,
        [1, -1] => out.brown_plus.lambda = scalar()?,
        [1, 2] => out.brown_plus.mu = scalar()?,
        [0, 0] => {
            let (i, j) = zero_fiber_pair(alpha).expect("short root over 0");
            out.l00 = L00::dd(
                ScalarPoly::one(),
                CubicElement::e(i),
                CubicElement::off_diagonal(i, j, b.into_conic()?),
            );
        }
        _ => {
            let c = cubic_in_slot(slot_of(alpha)?, &b)?;
            match beta {
                [-1, -1] => out.brown_minus.c = c,
                [-1, 0] => out.brown_minus.cprime = c,
                [0, -1] => out.ad_minus = c,
                [0, 1] => out.ad_plus = c,
                [1, 0] => out.brown_plus.c = c,
                [1, 1] => out.brown_plus.cprime = c,
                _ => unreachable!("G2 root {beta:?}"),
            }
        }
    }
    Ok(out)
}

fn g2_fiber_root(beta: [i64; 2]) -> RootF4 {
    crate::roots::roots_f4()
        .into_iter()
        .find(|r| r.pi().0 == beta)
        .expect("long G2 fiber")
}

fn cubic_roots(beta: [i64; 2], c: &CubicElement, out: &mut Vec<RootF4>) {
    let table = crate::roots::slot_table();
    for p in PeirceIndex::all() {
        if p.is_stored_orientation() || p.is_diagonal() {
            if !c.project(p).is_zero() {
                let slot = if p.is_diagonal() {
                    Slot::Diagonal(p.i)
                } else {
                    stored_to_upper(p)
                };
                let r = table
                    .iter()
                    .find(|(_, g, s)| g.0 == beta && *s == slot)
                    .expect("slot")
                    .0;
                out.push(r);
            }
        }
    }
}

fn stored_to_upper(p: PeirceIndex) -> Slot {
    let (i, j) = if p.i < p.j { (p.i, p.j) } else { (p.j, p.i) };
    Slot::OffDiagonal(i, j)
}

/// The F4 roots of the nonzero components of a (simplified) element. Parts of
/// `L00` outside the `Z_{i→j}` summands contribute the zero vector.
pub fn f4_support(l: &LieElement) -> Vec<RootF4> {
    let mut out = Vec::new();
    for (s, beta) in [
        (&l.x, [-2, -1]),
        (&l.y, [2, 1]),
        (&l.brown_minus.lambda, [-1, -2]),
        (&l.brown_minus.mu, [-1, 1]),
        (&l.brown_plus.lambda, [1, -1]),
        (&l.brown_plus.mu, [1, 2]),
    ] {
        if !s.is_zero() {
            out.push(g2_fiber_root(beta));
        }
    }
    for (c, beta) in [
        (&l.brown_minus.c, [-1, -1]),
        (&l.brown_minus.cprime, [-1, 0]),
        (&l.ad_minus, [0, -1]),
        (&l.ad_plus, [0, 1]),
        (&l.brown_plus.c, [1, 0]),
        (&l.brown_plus.cprime, [1, 1]),
    ] {
        cubic_roots(beta, c, &mut out);
    }
    if !l.l00.xi.is_zero() || !l.l00.zeta.is_zero() {
        out.push(RootF4::zero());
    }
    for t in &l.l00.dd {
        out.push(zmap_root(t).unwrap_or_else(RootF4::zero));
    }
    out.sort();
    out.dedup();
    out
}

/// Root of a term `dd([1]_ii, [a]_ij)`, `i ≠ j`.
fn zmap_root(t: &super::DdTerm) -> Option<RootF4> {
    if t.c != CubicElement::e(first_diagonal(&t.c)?) {
        return None;
    }
    let i = first_diagonal(&t.c)?;
    let pieces = t.cprime.basis_pieces();
    let p = pieces.first()?.1;
    if p.is_diagonal()
        || pieces
            .iter()
            .any(|(_, q, _)| q.normalized() != p.normalized())
    {
        return None;
    }
    let j = if p.i == i {
        p.j
    } else if p.j == i {
        p.i
    } else {
        return None;
    };
    let mut v = [0i64; 4];
    v[i as usize] = 1;
    v[j as usize] = -1;
    Some(RootF4(v))
}

fn first_diagonal(c: &CubicElement) -> Option<u8> {
    (1..=3).find(|&i| !c.xi[(i - 1) as usize].is_zero())
}

/// The unique F4 root of a homogeneous nonzero element.
pub fn root_of(l: &LieElement) -> Result<RootF4> {
    let s = f4_support(l);
    match s.as_slice() {
        [r] if *r != RootF4::zero() => Ok(*r),
        _ => Err(Error::NotHomogeneous(l.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::ConicElement;
    use crate::roots::roots_f4;

    fn a(i: u16) -> Value {
        Value::Conic(ConicElement::generator(i))
    }

    #[test]
    fn anchored_examples() {
        let tw = TwistTable::shipped();
        let r = lie_root_hom(RootF4([1, 0, 0, 1]), a(1), &tw).unwrap();
        assert_eq!(r.to_string(), "[ 0, 0_J, ((g1^-1)*a1)[12], 0 ]_+");
        let r = lie_root_hom(RootF4([2, 0, 0, 0]), Value::Scalar(ScalarPoly::t(1)), &tw).unwrap();
        assert_eq!(r.to_string(), "(-t1)*y");
        let r = lie_root_hom(
            RootF4([-2, 0, 0, 0]),
            Value::Scalar(ScalarPoly::zero()),
            &tw,
        )
        .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn payload_kinds() {
        let tw = TwistTable::shipped();
        assert!(lie_root_hom(RootF4([2, 0, 0, 0]), a(1), &tw).is_err());
        let r = lie_root_hom(RootF4([1, 0, -1, 0]), Value::Scalar(ScalarPoly::t(1)), &tw).unwrap();
        assert_eq!(r.to_string(), "[ 0, ((t1)*1_C)[31], 0_J, 0 ]_+");
    }

    #[test]
    fn every_root_places_homogeneously() {
        let tw = TwistTable::shipped();
        for r in roots_f4() {
            let payload = if r.is_long() {
                Value::Scalar(ScalarPoly::t(1))
            } else {
                a(1)
            };
            let l = lie_root_hom(r, payload, &tw).unwrap();
            assert_eq!(root_of(&l).unwrap(), r, "{r} -> {l}");
        }
    }

    #[test]
    fn twist_records() {
        let t = TwistTable::parse("# comment\n1 1 1 1 : -1 0 1 -1\n").unwrap();
        assert_eq!(
            t.get(RootF4([1, 1, 1, 1])).factor().to_string(),
            "-g2*g3^-1"
        );
        assert_eq!(t.get(RootF4([1, 0, 0, 1])).tau, [-1, 0, 0]);
        assert!(TwistTable::parse("2 0 0 0 : 1 0 0 0").is_err());
        assert!(TwistTable::parse("1 1 0 : 1 0 0 0").is_err());
        assert!(TwistTable::parse("1 1 1 1 : 2 0 0 0").is_err());
    }

    #[test]
    fn mixed_elements_are_not_homogeneous() {
        let l = LieElement::x().add(&LieElement::y());
        assert!(matches!(root_of(&l), Err(Error::NotHomogeneous(_))));
        assert!(root_of(&LieElement::xi()).is_err());
    }
}
