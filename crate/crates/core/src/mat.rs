//! 3×3 matrices over an exact scalar type, and the named constant matrices
//! used by the orbit catalog.
//!
//! Entries are indexed `(row, col)` with rows and columns `1..=3` in the
//! public API and documentation; storage is 0-based.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Cyclotomic, Field};
use crate::Error;

/// 3×3 matrix with entries of type `F`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mat3<F> {
    pub e: [[F; 3]; 3],
}

impl<F: Clone + Zero> Mat3<F> {
    pub fn zero() -> Self {
        Mat3 {
            e: std::array::from_fn(|_| std::array::from_fn(|_| F::zero())),
        }
    }

    /// Matrix unit `e_ij` (1-based indices).
    pub fn unit(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m.e[i - 1][j - 1] = F::zero() + F::one();
        m
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(Zero::is_zero)
    }

    /// Entry at 1-based `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.e[i - 1][j - 1]
    }

    pub fn transpose(&self) -> Self {
        Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| self.e[j][i].clone())),
        }
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> Mat3<G> {
        Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| f(&self.e[i][j]))),
        }
    }

    /// Entries flattened in row-major order `e11, e12, …, e33`; this fixed
    /// order is used for all coordinate vectors and canonical forms.
    pub fn to_vec9(&self) -> Vec<F> {
        self.e.iter().flatten().cloned().collect()
    }

    pub fn from_vec9(v: &[F]) -> Self {
        assert_eq!(v.len(), 9);
        Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| v[3 * i + j].clone())),
        }
    }

    /// First nonzero entry in row-major order, if any.
    pub fn leading(&self) -> Option<&F> {
        self.e.iter().flatten().find(|x| !x.is_zero())
    }
}

impl<F: Clone + Zero + One> Mat3<F>
where
    F: Mul<Output = F>,
{
    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.e[i][i] = F::one();
        }
        m
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| c.clone() * x.clone())
    }
}

impl<F: Clone + Zero + Mul<Output = F>> Mul for &Mat3<F> {
    type Output = Mat3<F>;
    fn mul(self, rhs: &Mat3<F>) -> Mat3<F> {
        let mut out = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = F::zero();
                for (k, rhs_row) in rhs.e.iter().enumerate() {
                    acc = acc + self.e[i][k].clone() * rhs_row[j].clone();
                }
                out.e[i][j] = acc;
            }
        }
        out
    }
}

impl<F: Clone + Zero> Add for &Mat3<F> {
    type Output = Mat3<F>;
    fn add(self, rhs: &Mat3<F>) -> Mat3<F> {
        Mat3 {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.e[i][j].clone() + rhs.e[i][j].clone())
            }),
        }
    }
}

impl<F: Clone + Zero + Sub<Output = F>> Sub for &Mat3<F> {
    type Output = Mat3<F>;
    fn sub(self, rhs: &Mat3<F>) -> Mat3<F> {
        Mat3 {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.e[i][j].clone() - rhs.e[i][j].clone())
            }),
        }
    }
}

impl<F: Clone + Zero + Neg<Output = F>> Neg for &Mat3<F> {
    type Output = Mat3<F>;
    fn neg(self) -> Mat3<F> {
        self.map(|x| -x.clone())
    }
}

impl<F: Field> Mat3<F> {
    pub fn det(&self) -> F {
        let e = &self.e;
        let m = |i: usize, j: usize| e[i][j].clone();
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    }

    /// Exact inverse via the adjugate; errors on a singular matrix.
    pub fn inverse(&self) -> Result<Self, Error> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let dinv = d.inv()?;
        let e = &self.e;
        let m = |i: usize, j: usize| e[i][j].clone();
        let cof = |i: usize, j: usize| {
            let (r1, r2) = match i {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let (c1, c2) = match j {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let minor = m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
            if (i + j) % 2 == 0 {
                minor
            } else {
                F::zero() - minor
            }
        };
        // adjugate = transpose of the cofactor matrix
        Ok(Mat3 {
            e: std::array::from_fn(|i| std::array::from_fn(|j| dinv.clone() * cof(j, i))),
        })
    }

    /// Conjugation `a · m · a⁻¹`; errors if `a` is singular.
    pub fn conj_by(a: &Self, m: &Self) -> Result<Self, Error> {
        let ainv = a.inverse()?;
        Ok(&(a * m) * &ainv)
    }
}

impl<F: Field + fmt::Display> fmt::Display for Mat3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..3 {
            for j in 0..3 {
                if self.e[i][j].is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if self.e[i][j].is_one() {
                    write!(f, "e{}{}", i + 1, j + 1)?;
                } else {
                    write!(f, "({})e{}{}", self.e[i][j], i + 1, j + 1)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// ---- named constant matrices over the concrete cyclotomic field ----

pub type CMat = Mat3<Cyclotomic>;

/// `δ = e11 + e22 + e33`.
pub fn delta() -> CMat {
    CMat::identity()
}

/// `ϰ = Σ_{i≠j} e_ij`, the all-off-diagonal-ones matrix.
pub fn kappa() -> CMat {
    let mut m = CMat::zero();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                m.e[i][j] = Cyclotomic::one();
            }
        }
    }
    m
}

/// `η = e11 + ζ e22 + ζ̄ e33`.
pub fn eta() -> CMat {
    let mut m = CMat::zero();
    m.e[0][0] = Cyclotomic::one();
    m.e[1][1] = Cyclotomic::zeta();
    m.e[2][2] = Cyclotomic::zeta_bar();
    m
}

/// `η̄ = e11 + ζ̄ e22 + ζ e33` (the entrywise conjugate of `η`).
pub fn eta_bar() -> CMat {
    let mut m = CMat::zero();
    m.e[0][0] = Cyclotomic::one();
    m.e[1][1] = Cyclotomic::zeta_bar();
    m.e[2][2] = Cyclotomic::zeta();
    m
}

/// `τ = e12 + e23 + e31 − e21 − e32 − e13`, antisymmetric.
pub fn tau() -> CMat {
    let one = Cyclotomic::one();
    let mut m = CMat::zero();
    m.e[0][1] = one.clone();
    m.e[1][2] = one.clone();
    m.e[2][0] = one.clone();
    m.e[1][0] = -one.clone();
    m.e[2][1] = -one.clone();
    m.e[0][2] = -one;
    m
}

/// Matrix unit `e_ij` over the cyclotomic field (1-based).
pub fn eu(i: usize, j: usize) -> CMat {
    CMat::unit(i, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    #[test]
    fn transpose_examples() {
        assert_eq!(eu(1, 2).transpose(), eu(2, 1));
        assert_eq!(delta().transpose(), delta());
        assert_eq!(tau().transpose(), -&tau());
    }

    #[test]
    fn named_constants() {
        // entrywise conjugation sends η to η̄
        assert_eq!(eta().map(|x| x.conj()), eta_bar());
        // δ + ϰ is the all-ones matrix
        let all_ones = delta() + &kappa();
        assert!(all_ones.e.iter().flatten().all(|x| x == &Scalar::one()));
        // η entrywise-multiplied with η̄ gives the identity diagonal
        let prod = Mat3 {
            e: std::array::from_fn(|i| {
                std::array::from_fn(|j| eta().e[i][j].clone() * eta_bar().e[i][j].clone())
            }),
        };
        assert_eq!(prod, delta());
    }

    #[test]
    fn inverse_and_conj_by() {
        let id = CMat::identity();
        let m = eta();
        assert_eq!(CMat::conj_by(&id, &m).unwrap(), m);
        assert_eq!(CMat::conj_by(&eu(1, 2), &m), Err(Error::SingularMatrix));
        // conjugation by e12 − e21 + e33 sends e13 to −e23
        let a = &(eu(1, 2) - &eu(2, 1)) + &eu(3, 3);
        assert_eq!(CMat::conj_by(&a, &eu(1, 3)).unwrap(), -&eu(2, 3));
        let ainv = a.inverse().unwrap();
        assert_eq!(&a * &ainv, CMat::identity());
    }

    impl Add<&CMat> for CMat {
        type Output = CMat;
        fn add(self, rhs: &CMat) -> CMat {
            &self + rhs
        }
    }
}
