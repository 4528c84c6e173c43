//! Integer models of the F4 and G2 root systems, the projection `π`, and the
//! placement of F4 roots inside the matrix-shaped G2 fibers.

use std::fmt;

use crate::error::{Error, Result};
use crate::jordan::PeirceIndex;

/// Vector in the F4 lattice (not necessarily a root).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootF4(pub [i64; 4]);

/// Vector in the G2 lattice `Z^2`, Gram matrix `[[2, -1], [-1, 2]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootG2(pub [i64; 2]);

impl RootF4 {
    pub fn zero() -> RootF4 {
        RootF4([0; 4])
    }

    pub fn dot(self, other: RootF4) -> i64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(self) -> i64 {
        self.dot(self)
    }

    pub fn is_root(self) -> bool {
        let n = self.norm2();
        let entries_ok = match n {
            4 => {
                self.0.iter().filter(|&&c| c != 0).count() == 1
                    && self.0.iter().all(|c| c.abs() <= 2)
                    || self.0.iter().all(|c| c.abs() == 1)
            }
            2 => {
                self.0.iter().filter(|&&c| c != 0).count() == 2
                    && self.0.iter().all(|c| c.abs() <= 1)
            }
            _ => false,
        };
        entries_ok
    }

    pub fn checked(self) -> Result<RootF4> {
        if self.is_root() {
            Ok(self)
        } else {
            Err(Error::NotARoot(self.0.to_vec()))
        }
    }

    pub fn is_long(self) -> bool {
        self.norm2() == 4
    }

    /// First coordinate: the 5-grading layer.
    pub fn grading_component(self) -> i64 {
        self.0[0]
    }

    pub fn scale(self, k: i64) -> RootF4 {
        RootF4(self.0.map(|c| c * k))
    }

    pub fn reflect(self, alpha: RootF4) -> RootF4 {
        let k = 2 * self.dot(alpha) / alpha.norm2();
        self - alpha.scale(k)
    }

    pub fn pi(self) -> RootG2 {
        let [p, i, j, l] = self.0;
        debug_assert!((p + i + j + l) % 2 == 0);
        RootG2([p, (p + i + j + l) / 2])
    }
}

impl std::ops::Add for RootF4 {
    type Output = RootF4;
    fn add(self, o: RootF4) -> RootF4 {
        RootF4(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl std::ops::Sub for RootF4 {
    type Output = RootF4;
    fn sub(self, o: RootF4) -> RootF4 {
        RootF4(std::array::from_fn(|k| self.0[k] - o.0[k]))
    }
}

impl std::ops::Neg for RootF4 {
    type Output = RootF4;
    fn neg(self) -> RootF4 {
        self.scale(-1)
    }
}

impl fmt::Display for RootF4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "[{a},{b},{c},{d}]")
    }
}

impl RootG2 {
    pub fn gram(self, other: RootG2) -> i64 {
        let [p, q] = self.0;
        let [r, s] = other.0;
        2 * p * r - p * s - q * r + 2 * q * s
    }

    pub fn norm2(self) -> i64 {
        self.gram(self)
    }

    pub fn is_long(self) -> bool {
        self.norm2() == 6
    }

    pub fn is_short(self) -> bool {
        self.norm2() == 2
    }

    pub fn reflect(self, alpha: RootG2) -> RootG2 {
        let k = 2 * self.gram(alpha) / alpha.norm2();
        RootG2([self.0[0] - k * alpha.0[0], self.0[1] - k * alpha.0[1]])
    }
}

impl fmt::Display for RootG2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0[0], self.0[1])
    }
}

/// The 48 roots of F4 in lexicographic order.
pub fn roots_f4() -> Vec<RootF4> {
    let mut out = Vec::with_capacity(48);
    for a in -2..=2 {
        for b in -2..=2 {
            for c in -2..=2 {
                for d in -2..=2 {
                    let r = RootF4([a, b, c, d]);
                    if r.is_root() {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

/// The 12 roots of G2 in lexicographic order.
pub fn roots_g2() -> Vec<RootG2> {
    let mut out = Vec::new();
    for p in -2..=2 {
        for q in -2..=2 {
            let r = RootG2([p, q]);
            if r.is_short() || r.is_long() {
                out.push(r);
            }
        }
    }
    out
}

/// Position of an F4 root inside the J-shaped fiber of its short G2 image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Diagonal(u8),
    OffDiagonal(u8, u8),
}

impl Slot {
    pub fn peirce(self) -> PeirceIndex {
        match self {
            Slot::Diagonal(i) => PeirceIndex { i, j: i },
            Slot::OffDiagonal(i, j) => PeirceIndex { i, j },
        }
    }
}

type Box3 = [[[i64; 4]; 3]; 3];

const Z: [i64; 4] = [0, 0, 0, 0];

/// Matrix-shaped boxes for the six short G2 roots; only the upper triangle is used.
const BOXES: [([i64; 2], Box3); 6] = [
    (
        [-1, 0],
        [
            [[-1, -1, 1, 1], [-1, 0, 0, 1], [-1, 0, 1, 0]],
            [Z, [-1, 1, -1, 1], [-1, 1, 0, 0]],
            [Z, Z, [-1, 1, 1, -1]],
        ],
    ),
    (
        [-1, -1],
        [
            [[-1, 1, -1, -1], [-1, 0, 0, -1], [-1, 0, -1, 0]],
            [Z, [-1, -1, 1, -1], [-1, -1, 0, 0]],
            [Z, Z, [-1, -1, -1, 1]],
        ],
    ),
    (
        [0, 1],
        [
            [[0, 2, 0, 0], [0, 1, 1, 0], [0, 1, 0, 1]],
            [Z, [0, 0, 2, 0], [0, 0, 1, 1]],
            [Z, Z, [0, 0, 0, 2]],
        ],
    ),
    (
        [0, -1],
        [
            [[0, -2, 0, 0], [0, -1, -1, 0], [0, -1, 0, -1]],
            [Z, [0, 0, -2, 0], [0, 0, -1, -1]],
            [Z, Z, [0, 0, 0, -2]],
        ],
    ),
    (
        [1, 1],
        [
            [[1, -1, 1, 1], [1, 0, 0, 1], [1, 0, 1, 0]],
            [Z, [1, 1, -1, 1], [1, 1, 0, 0]],
            [Z, Z, [1, 1, 1, -1]],
        ],
    ),
    (
        [1, 0],
        [
            [[1, 1, -1, -1], [1, 0, 0, -1], [1, 0, -1, 0]],
            [Z, [1, -1, 1, -1], [1, -1, 0, 0]],
            [Z, Z, [1, -1, -1, 1]],
        ],
    ),
];

/// The 36 placements `(root, G2 box, slot)`.
pub fn slot_table() -> Vec<(RootF4, RootG2, Slot)> {
    let mut out = Vec::with_capacity(36);
    for (g, b) in BOXES.iter() {
        for r in 0..3 {
            for c in r..3 {
                let slot = if r == c {
                    Slot::Diagonal(r as u8 + 1)
                } else {
                    Slot::OffDiagonal(r as u8 + 1, c as u8 + 1)
                };
                out.push((RootF4(b[r][c]), RootG2(*g), slot));
            }
        }
    }
    out
}

pub fn slot_of(alpha: RootF4) -> Result<Slot> {
    slot_table()
        .into_iter()
        .find(|(r, _, _)| *r == alpha)
        .map(|(_, _, s)| s)
        .ok_or_else(|| Error::NotARoot(alpha.0.to_vec()))
}

/// For the six roots with `π(α) = 0`: `(i, j)` such that `L_α = Z_{i→j}`.
pub fn zero_fiber_pair(alpha: RootF4) -> Option<(u8, u8)> {
    let [p, b, c, d] = alpha.0;
    if p != 0 || b + c + d != 0 || alpha.norm2() != 2 {
        return None;
    }
    let v = [b, c, d];
    let i = v.iter().position(|&x| x == 1)? as u8 + 1;
    let j = v.iter().position(|&x| x == -1)? as u8 + 1;
    Some((i, j))
}

/// The root base `(δ1, δ2, δ3, δ4)`.
pub fn root_base() -> [RootF4; 4] {
    [
        RootF4([1, 1, -1, -1]),
        RootF4([-2, 0, 0, 0]),
        RootF4([1, -1, 0, 0]),
        RootF4([0, 1, 1, 0]),
    ]
}

/// Coordinates of `v` in the root base (exact, via Cramer's rule), if integral.
pub fn base_coordinates(v: RootF4) -> Option<[i64; 4]> {
    let base = root_base();
    let m: [[i64; 4]; 4] = std::array::from_fn(|r| std::array::from_fn(|c| base[c].0[r]));
    let det = det4(&m);
    let mut out = [0i64; 4];
    for (c, slot) in out.iter_mut().enumerate() {
        let mut mc = m;
        for (r, row) in mc.iter_mut().enumerate() {
            row[c] = v.0[r];
        }
        let num = det4(&mc);
        if num % det != 0 {
            return None;
        }
        *slot = num / det;
    }
    Some(out)
}

fn det4(m: &[[i64; 4]; 4]) -> i64 {
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        let mut total = 0;
        for c in 0..m.len() {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != c)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            total += sign * m[0][c] * det(&minor);
        }
        total
    }
    let rows: Vec<Vec<i64>> = m.iter().map(|r| r.to_vec()).collect();
    det(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn counts() {
        assert_eq!(roots_f4().len(), 48);
        assert_eq!(roots_g2().len(), 12);
        let mut layers = BTreeMap::new();
        for r in roots_f4() {
            *layers.entry(r.grading_component()).or_insert(0) += 1;
        }
        assert_eq!(
            layers.into_values().collect::<Vec<_>>(),
            vec![1, 14, 18, 14, 1]
        );
    }

    #[test]
    fn long_roots() {
        assert!(RootF4([1, 1, 1, 1]).is_long());
        assert!(!RootF4([1, 0, 0, 1]).is_long());
        assert!(RootG2([-2, -1]).is_long());
    }

    #[test]
    fn reflections() {
        assert_eq!(
            RootF4([1, 1, 0, 0]).reflect(RootF4([-2, 0, 0, 0])),
            RootF4([-1, 1, 0, 0])
        );
        let a = RootF4([1, -1, 0, 0]);
        assert_eq!(a.reflect(a), -a);
        for b in roots_f4() {
            assert!(b.reflect(a).is_root());
        }
    }

    #[test]
    fn projection_anchors() {
        assert_eq!(RootF4([1, 0, 0, 1]).pi(), RootG2([1, 1]));
        assert_eq!(RootF4::zero().pi(), RootG2([0, 0]));
    }

    #[test]
    fn slot_anchors() {
        assert_eq!(slot_of(RootF4([1, -1, 1, 1])).unwrap(), Slot::Diagonal(1));
        assert_eq!(
            slot_of(RootF4([1, 0, -1, 0])).unwrap(),
            Slot::OffDiagonal(1, 3)
        );
        assert_eq!(
            slot_of(RootF4([1, 0, 0, 1])).unwrap(),
            Slot::OffDiagonal(1, 2)
        );
    }

    #[test]
    fn slot_table_is_consistent() {
        let table = slot_table();
        assert_eq!(table.len(), 36);
        for (r, g, s) in &table {
            assert!(r.is_root(), "{r}");
            assert_eq!(r.pi(), *g, "{r}");
            assert_eq!(r.is_long(), matches!(s, Slot::Diagonal(_)), "{r}");
        }
        let mut roots: Vec<_> = table.iter().map(|t| t.0).collect();
        roots.sort();
        roots.dedup();
        assert_eq!(roots.len(), 36);
    }

    #[test]
    fn zero_fiber() {
        assert_eq!(zero_fiber_pair(RootF4([0, 1, -1, 0])), Some((1, 2)));
        assert_eq!(zero_fiber_pair(RootF4([0, 0, -1, 1])), Some((3, 2)));
        assert_eq!(zero_fiber_pair(RootF4([0, 1, 1, 0])), None);
    }

    #[test]
    fn base_is_positive() {
        assert_eq!(base_coordinates(RootF4([1, 1, -1, -1])), Some([1, 0, 0, 0]));
        let [_, d2, d3, _] = root_base();
        assert_eq!(d2 + d3.scale(2), RootF4([0, -2, 0, 0]));
        for r in roots_f4() {
            let c = base_coordinates(r).unwrap();
            assert!(
                c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0),
                "{r}"
            );
        }
    }
}
