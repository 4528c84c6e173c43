//! Numeric model for cross-checking symbolic results: the conic algebra of
//! 2×2 rational matrices (norm = determinant, conjugation = adjugate) and
//! `Her3` over it as 3×3 block matrices with `Γ = (1, 1, 1)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::conic::ConicElement;
use crate::jordan::CubicElement;
use crate::ring::{Indet, Letter, ScalarPoly, View, Word};

pub type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Small random rational `n/d` with `|n| ≤ 6`, `1 ≤ d ≤ 3`.
pub fn random_q<R: Rng>(rng: &mut R) -> Q {
    Q::new(
        BigInt::from(rng.gen_range(-6i64..=6)),
        BigInt::from(rng.gen_range(1i64..=3)),
    )
}

fn random_nonzero_q<R: Rng>(rng: &mut R) -> Q {
    loop {
        let v = random_q(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[Q; 2]; 2]);

impl Mat2 {
    pub fn zero() -> Mat2 {
        Mat2::scalar(Q::zero())
    }

    pub fn identity() -> Mat2 {
        Mat2::scalar(Q::one())
    }

    pub fn scalar(s: Q) -> Mat2 {
        Mat2([[s.clone(), Q::zero()], [Q::zero(), s]])
    }

    pub fn random<R: Rng>(rng: &mut R) -> Mat2 {
        Mat2([
            [random_q(rng), random_q(rng)],
            [random_q(rng), random_q(rng)],
        ])
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        Mat2(std::array::from_fn(|r| {
            std::array::from_fn(|c| &self.0[r][c] + &o.0[r][c])
        }))
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        self.add(&o.scale(&q(-1)))
    }

    pub fn scale(&self, s: &Q) -> Mat2 {
        Mat2(std::array::from_fn(|r| {
            std::array::from_fn(|c| &self.0[r][c] * s)
        }))
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2(std::array::from_fn(|r| {
            std::array::from_fn(|c| &self.0[r][0] * &o.0[0][c] + &self.0[r][1] * &o.0[1][c])
        }))
    }

    pub fn det(&self) -> Q {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    pub fn trace(&self) -> Q {
        &self.0[0][0] + &self.0[1][1]
    }

    /// Adjugate, the conjugation of the conic algebra.
    pub fn adj(&self) -> Mat2 {
        let m = &self.0;
        Mat2([[m[1][1].clone(), -&m[0][1]], [-&m[1][0], m[0][0].clone()]])
    }

    /// `Some(s)` if this is `s·1`.
    pub fn as_scalar(&self) -> Option<Q> {
        let m = &self.0;
        (m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1]).then(|| m[0][0].clone())
    }
}

/// Values for all indeterminates.
#[derive(Clone, Debug)]
pub struct Valuation {
    pub gamma: [Q; 3],
    pub t: Vec<Q>,
    pub a: Vec<Mat2>,
}

impl Valuation {
    /// Random values for `t1..t_m1`, `a1..a_m2`; `γ = 1` when `unit_gamma`.
    pub fn random<R: Rng>(rng: &mut R, m1: usize, m2: usize, unit_gamma: bool) -> Valuation {
        let gamma = std::array::from_fn(|_| {
            if unit_gamma {
                Q::one()
            } else {
                random_nonzero_q(rng)
            }
        });
        Valuation {
            gamma,
            t: (0..m1).map(|_| random_q(rng)).collect(),
            a: (0..m2).map(|_| Mat2::random(rng)).collect(),
        }
    }

    pub fn letter(&self, l: Letter) -> Mat2 {
        match l {
            Letter::Gen(i) => self.a[i as usize - 1].clone(),
            Letter::Conj(i) => self.a[i as usize - 1].adj(),
        }
    }

    pub fn word(&self, w: &Word) -> Mat2 {
        match w.view() {
            View::Unit => Mat2::identity(),
            View::Leaf(l) => self.letter(l),
            View::Mul(l, r) => self.word(&l).mul(&self.word(&r)),
        }
    }

    pub fn scalar(&self, p: &ScalarPoly) -> Q {
        p.evaluate(|i| match i {
            Indet::Gamma(k) => self.gamma[*k as usize - 1].clone(),
            Indet::Scalar(k) => self.t[*k as usize - 1].clone(),
            Indet::Norm(k) => self.a[*k as usize - 1].det(),
            Indet::Trace(w) => self.word(w).trace(),
        })
    }

    pub fn conic(&self, c: &ConicElement) -> Mat2 {
        c.terms().fold(Mat2::zero(), |acc, (w, s)| {
            acc.add(&self.word(w).scale(&self.scalar(s)))
        })
    }

    pub fn cubic(&self, c: &CubicElement) -> Block3 {
        let xi: [Q; 3] = std::array::from_fn(|k| self.scalar(&c.xi[k]));
        let u: [Mat2; 3] = std::array::from_fn(|k| self.conic(&c.u[k]));
        Block3::hermitian(&xi, &u)
    }
}

/// 3×3 matrix with 2×2 matrix entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block3(pub [[Mat2; 3]; 3]);

impl Block3 {
    pub fn scalar(s: &Q) -> Block3 {
        Block3(std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                if r == c {
                    Mat2::scalar(s.clone())
                } else {
                    Mat2::zero()
                }
            })
        }))
    }

    /// The matrix `[[ξ1, u3, ū2], [ū3, ξ2, u1], [u2, ū1, ξ3]]`.
    pub fn hermitian(xi: &[Q; 3], u: &[Mat2; 3]) -> Block3 {
        let s = |k: usize| Mat2::scalar(xi[k].clone());
        Block3([
            [s(0), u[2].clone(), u[1].adj()],
            [u[2].adj(), s(1), u[0].clone()],
            [u[1].clone(), u[0].adj(), s(2)],
        ])
    }

    pub fn add(&self, o: &Block3) -> Block3 {
        Block3(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.0[r][c].add(&o.0[r][c]))
        }))
    }

    pub fn scale(&self, s: &Q) -> Block3 {
        Block3(std::array::from_fn(|r| {
            std::array::from_fn(|c| self.0[r][c].scale(s))
        }))
    }

    pub fn mul(&self, o: &Block3) -> Block3 {
        Block3(std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                (0..3).fold(Mat2::zero(), |acc, k| {
                    acc.add(&self.0[r][k].mul(&o.0[k][c]))
                })
            })
        }))
    }

    /// Sum of the scalar diagonal entries.
    pub fn trace(&self) -> Q {
        (0..3).fold(Q::zero(), |acc, k| acc + self.0[k][k].trace() / q(2))
    }

    /// `Some(s)` if this is `s` times the identity.
    pub fn as_scalar(&self) -> Option<Q> {
        let s = self.0[0][0].as_scalar()?;
        (*self == Block3::scalar(&s)).then_some(s)
    }
}

/// `S(x) = (T(x)² − T(x²)) / 2`.
fn quadratic_trace(x: &Block3) -> Q {
    let t = x.trace();
    (&t * &t - x.mul(x).trace()) / q(2)
}

/// Norm from the generic minimal polynomial `x³ − T x² + S x − N = 0`.
pub fn matrix_norm(x: &Block3) -> Option<Q> {
    let x2 = x.mul(x);
    let x3 = x2.mul(x);
    x3.add(&x2.scale(&-x.trace()))
        .add(&x.scale(&quadratic_trace(x)))
        .as_scalar()
}

/// `x♯ = x² − T(x) x + S(x) 1`.
pub fn matrix_sharp(x: &Block3) -> Block3 {
    x.mul(x)
        .add(&x.scale(&-x.trace()))
        .add(&Block3::scalar(&quadratic_trace(x)))
}

pub fn matrix_cross(x: &Block3, y: &Block3) -> Block3 {
    let m = |b: &Block3| b.scale(&q(-1));
    matrix_sharp(&x.add(y))
        .add(&m(&matrix_sharp(x)))
        .add(&m(&matrix_sharp(y)))
}

/// `T(x, y) = T(x ∘ y)`.
pub fn matrix_bilinear_trace(x: &Block3, y: &Block3) -> Q {
    (x.mul(y).trace() + y.mul(x).trace()) / q(2)
}

/// `U_x y = x y x`.
pub fn matrix_u(x: &Block3, y: &Block3) -> Block3 {
    x.mul(y).mul(x)
}

/// `{x y z} = x y z + z y x`.
pub fn matrix_triple(x: &Block3, y: &Block3, z: &Block3) -> Block3 {
    x.mul(y).mul(z).add(&z.mul(y).mul(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matrix_conic_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let a = Mat2::random(&mut rng);
            let b = Mat2::random(&mut rng);
            assert_eq!(a.mul(&b).det(), a.det() * b.det());
            assert_eq!(a.add(&a.adj()), Mat2::scalar(a.trace()));
            assert_eq!(a.mul(&a.adj()), Mat2::scalar(a.det()));
        }
    }

    #[test]
    fn identity_matrix_has_norm_one() {
        let one = Block3::scalar(&Q::one());
        assert_eq!(matrix_norm(&one), Some(Q::one()));
        assert_eq!(matrix_bilinear_trace(&one, &one), q(3));
    }
}
