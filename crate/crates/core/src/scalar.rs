//! Exact scalars: arbitrary-precision rationals and the cyclotomic field
//! `Q(ω)` where `ω` is a primitive 12th root of unity.
//!
//! `ω` satisfies `ω⁴ − ω² + 1 = 0`, so `Q(ω)` has degree 4 over `Q` with
//! power basis `{1, ω, ω², ω³}`. This is the smallest field containing every
//! scalar used in the orbit catalog:
//!
//! * `i = ω³` (so `i² = ω⁶ = −1`),
//! * `ζ = ω⁴ = ω² − 1`, a primitive cube root of unity, with `ζ̄ = ζ² = −ω²`.
//!
//! Elements are kept in reduced basis coordinates, so equality is structural
//! and values are hashable; this is what makes orbit sets and canonical forms
//! exact downstream.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational};

/// An exact field, as needed by the generic linear algebra: structural
/// equality, total order (for canonical sorting, not magnitude), and an
/// inverse that fails only on zero.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    fn inv(&self) -> Result<Self, Error>;

    fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.clone() * other.inv()?)
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }
}

/// Parse a rational from the wire form `"p/q"` (a bare `"p"` is accepted and
/// read as `p/1`).
pub fn rational_from_str(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Format a rational in the wire form `"p/q"`, always including the
/// denominator (`1/2 → "1/2"`, `3 → "3/1"`, `−ζ` coordinates use `"-1/1"`).
pub fn rational_to_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Element of `Q(ω)` in the power basis `{1, ω, ω², ω³}`, `ω⁴ = ω² − 1`.
///
/// Coordinates are always reduced rationals, so `==`, `Ord` and `Hash` are
/// structural. `Ord` is the lexicographic order on coordinates; it is used
/// for canonical sorting only and has no numeric meaning.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclotomic {
    pub c: [Rational; 4],
}

impl Cyclotomic {
    pub fn new(c: [Rational; 4]) -> Self {
        Cyclotomic { c }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic::new([r, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as a field element.
    pub fn from_frac(p: i64, q: i64) -> Self {
        Cyclotomic::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The generator `ω` (a primitive 12th root of unity).
    pub fn omega() -> Self {
        let mut c = Self::zero();
        c.c[1] = Rational::one();
        c
    }

    /// `i = ω³`.
    pub fn i() -> Self {
        let mut c = Self::zero();
        c.c[3] = Rational::one();
        c
    }

    /// `ζ = ω⁴ = ω² − 1`, a primitive cube root of unity.
    pub fn zeta() -> Self {
        let mut c = Self::zero();
        c.c[0] = -Rational::one();
        c.c[2] = Rational::one();
        c
    }

    /// `ζ̄ = ζ² = −ω²`.
    pub fn zeta_bar() -> Self {
        let mut c = Self::zero();
        c.c[2] = -Rational::one();
        c
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// Complex conjugation: the automorphism sending `ω ↦ ω⁻¹ = ω − ω³`.
    ///
    /// In coordinates `(c0, c1, c2, c3) ↦ (c0 + c2, c1, −c2, −c1 − c3)`,
    /// using `conj(ω²) = 1 − ω²` and `conj(ω³) = −ω³`. It fixes rationals,
    /// sends `i ↦ −i` and `ζ ↦ ζ̄`.
    pub fn conj(&self) -> Self {
        Cyclotomic::new([
            &self.c[0] + &self.c[2],
            self.c[1].clone(),
            -self.c[2].clone(),
            -(&self.c[1] + &self.c[3]),
        ])
    }

    /// Multiplication by `self` as a 4×4 rational matrix in the power basis
    /// (columns are `self · ωʲ`).
    fn mul_matrix(&self) -> [[Rational; 4]; 4] {
        let mut cols: [[Rational; 4]; 4] = Default::default();
        let mut pow = self.clone();
        for col in 0..4 {
            for row in 0..4 {
                cols[col][row] = pow.c[row].clone();
            }
            if col < 3 {
                pow = pow * Cyclotomic::omega();
            }
        }
        let mut m: [[Rational; 4]; 4] = Default::default();
        for (col, colv) in cols.iter().enumerate() {
            for row in 0..4 {
                m[row][col] = colv[row].clone();
            }
        }
        m
    }

    /// Exact inverse via a 4×4 linear solve in the power basis.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.mul_matrix();
        // Solve m · x = (1, 0, 0, 0).
        let mut rhs = [
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        let mut a = m;
        // Gaussian elimination with exact pivots on a fixed 4×4 system.
        for col in 0..4 {
            let piv = (col..4)
                .find(|&r| !a[r][col].is_zero())
                .expect("multiplication by a nonzero field element is invertible");
            a.swap(col, piv);
            rhs.swap(col, piv);
            let p = a[col][col].clone();
            for j in 0..4 {
                a[col][j] = &a[col][j] / &p;
            }
            rhs[col] = &rhs[col] / &p;
            for r in 0..4 {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..4 {
                        a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    }
                    rhs[r] = &rhs[r] - &(&f * &rhs[col]);
                }
            }
        }
        Ok(Cyclotomic::new(rhs))
    }

    /// Wire encoding: the four coordinates as `"p/q"` strings.
    pub fn encode(&self) -> [String; 4] {
        [
            rational_to_str(&self.c[0]),
            rational_to_str(&self.c[1]),
            rational_to_str(&self.c[2]),
            rational_to_str(&self.c[3]),
        ]
    }

    pub fn decode(parts: &[String]) -> Result<Self, Error> {
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "scalar needs 4 coordinates, got {}",
                parts.len()
            )));
        }
        Ok(Cyclotomic::new([
            rational_from_str(&parts[0])?,
            rational_from_str(&parts[1])?,
            rational_from_str(&parts[2])?,
            rational_from_str(&parts[3])?,
        ]))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "w", "w^2", "w^3"];
        let mut first = true;
        for (k, coef) in self.c.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            if first {
                first = false;
                if coef.is_negative() {
                    write!(f, "-")?;
                }
            } else if coef.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = coef.abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", names[k])?;
            } else {
                write!(f, "{a}*{}", names[k])?;
            }
        }
        Ok(())
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        Cyclotomic::new([
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
            &self.c[3] + &rhs.c[3],
        ])
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        Cyclotomic::new([
            &self.c[0] - &rhs.c[0],
            &self.c[1] - &rhs.c[1],
            &self.c[2] - &rhs.c[2],
            &self.c[3] - &rhs.c[3],
        ])
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::new([
            -self.c[0].clone(),
            -self.c[1].clone(),
            -self.c[2].clone(),
            -self.c[3].clone(),
        ])
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;

    /// Product with reduction modulo `ω⁴ = ω² − 1` (hence `ω⁵ = ω³ − ω`,
    /// `ω⁶ = −1`).
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        let mut raw: [Rational; 7] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] = &raw[i + j] + &(a * b);
            }
        }
        let [r0, r1, r2, r3, r4, r5, r6] = raw;
        Cyclotomic::new([r0 - &r4 - r6, r1 - &r5, r2 + r4, r3 + r5])
    }
}

impl Div for Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: Cyclotomic) -> Cyclotomic {
        self * rhs.inv().expect("division by zero")
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::new(Default::default())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }
}

impl Field for Cyclotomic {
    fn inv(&self) -> Result<Self, Error> {
        Cyclotomic::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }

    #[test]
    fn defining_relations() {
        let w = Cyclotomic::omega();
        // ω⁴ − ω² + 1 = 0
        let lhs = w.clone() * w.clone() * w.clone() * w.clone() - w.clone() * w.clone()
            + Cyclotomic::one();
        assert!(lhs.is_zero());
        let i = Cyclotomic::i();
        assert_eq!(i.clone() * i, s(-1));
        let z = Cyclotomic::zeta();
        assert_eq!(z.clone() * z.clone() * z.clone(), s(1));
        assert_ne!(Cyclotomic::zeta(), s(1));
        assert_eq!(Cyclotomic::zeta() * Cyclotomic::zeta(), Cyclotomic::zeta_bar());
    }

    #[test]
    fn add_examples() {
        let x = Cyclotomic::zeta() + s(3);
        assert_eq!(Cyclotomic::zero() + x.clone(), x);
        assert_eq!(Cyclotomic::zeta() + Cyclotomic::zeta_bar(), s(-1));
        assert_eq!(Cyclotomic::i() + (-Cyclotomic::i()), Cyclotomic::zero());
    }

    #[test]
    fn mul_reduction() {
        // ω · ω³ = ω⁴ = ω² − 1
        let w = Cyclotomic::omega();
        let w3 = Cyclotomic::i();
        let got = w.clone() * w3;
        assert_eq!(got, w.clone() * w - Cyclotomic::one());
    }

    #[test]
    fn inverses() {
        assert_eq!(Cyclotomic::one().inv().unwrap(), Cyclotomic::one());
        assert_eq!(Cyclotomic::zeta().inv().unwrap(), Cyclotomic::zeta_bar());
        assert_eq!(s(2).inv().unwrap(), Cyclotomic::from_frac(1, 2));
        assert_eq!(Cyclotomic::zero().inv(), Err(Error::DivisionByZero));
        for a in [
            s(1),
            s(-1),
            Cyclotomic::i(),
            Cyclotomic::zeta(),
            Cyclotomic::zeta_bar(),
            Cyclotomic::omega(),
            Cyclotomic::from_frac(2, 3),
        ] {
            assert_eq!(a.clone() * a.inv().unwrap(), Cyclotomic::one());
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(Cyclotomic::i().conj(), -Cyclotomic::i());
        assert_eq!(Cyclotomic::zeta().conj(), Cyclotomic::zeta_bar());
        let r = Cyclotomic::from_frac(3, 5);
        assert_eq!(r.conj(), r);
        // conj ∘ conj = id on a non-real element
        let x = Cyclotomic::omega() + Cyclotomic::from_frac(1, 2);
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn wire_encoding() {
        // The documented reduced coordinates of ζ and i.
        assert_eq!(
            Cyclotomic::zeta().encode(),
            ["-1/1".to_string(), "0/1".into(), "1/1".into(), "0/1".into()]
        );
        assert_eq!(
            Cyclotomic::i().encode(),
            ["0/1".to_string(), "0/1".into(), "0/1".into(), "1/1".into()]
        );
        let x = Cyclotomic::from_frac(-7, 3) + Cyclotomic::omega();
        let rt = Cyclotomic::decode(&x.encode()).unwrap();
        assert_eq!(rt, x);
    }

    prop_compose! {
        fn small_rational()(n in -12i64..=12, d in 1i64..=6) -> Rational {
            Rational::new(BigInt::from(n), BigInt::from(d))
        }
    }

    prop_compose! {
        fn cyclotomic()(c0 in small_rational(), c1 in small_rational(),
                        c2 in small_rational(), c3 in small_rational()) -> Cyclotomic {
            Cyclotomic::new([c0, c1, c2, c3])
        }
    }

    proptest! {
        #[test]
        fn field_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
            // associativity and commutativity
            prop_assert_eq!(
                (a.clone() + b.clone()) + c.clone(),
                a.clone() + (b.clone() + c.clone())
            );
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!(
                (a.clone() * b.clone()) * c.clone(),
                a.clone() * (b.clone() * c.clone())
            );
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            // distributivity
            prop_assert_eq!(
                a.clone() * (b.clone() + c.clone()),
                a.clone() * b.clone() + a.clone() * c.clone()
            );
        }

        #[test]
        fn conj_is_multiplicative(a in cyclotomic(), b in cyclotomic()) {
            prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        }

        #[test]
        fn nonzero_elements_invert(a in cyclotomic()) {
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inv().unwrap(), Cyclotomic::one());
            }
        }
    }
}
