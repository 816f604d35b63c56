//! Exact scalars: the eighth cyclotomic field `Q(z)`, `z = e^{2 pi i / 8}`.
//!
//! Elements are stored as `c0 + c1 z + c2 z^2 + c3 z^3` with `z^4 = -1`,
//! which is a canonical form: two values are equal iff their four
//! coefficients are. `i = z^2` and `sqrt(2)/2 = (z - z^3)/2` both live here.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A commutative field with exact equality.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.mul_ref(&inv))
    }
}

/// A field that the text syntax can produce: rationals plus named atoms.
pub trait Scalar: Field {
    fn from_big(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Named scalar constants (`i`, `w`, `z` for the cyclotomic field).
    fn atom(_name: char) -> Option<Self> {
        None
    }

    fn from_int(n: i64) -> Self {
        Self::from_big(&BigInt::from(n), &BigInt::one()).expect("integer literal")
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_big(&BigInt::from(num), &BigInt::from(den)).expect("nonzero denominator")
    }
}

/// Fields containing a primitive eighth root of unity.
pub trait CyclotomicField: Scalar {
    /// `z^k`, `z` a fixed primitive eighth root of unity.
    fn zeta(k: i64) -> Self;

    /// `i = z^2`.
    fn imag() -> Self {
        Self::zeta(2)
    }

    /// Short label for roots of unity (`1`, `-i`, `w^3`, ...), falling back to
    /// the text syntax for anything else.
    fn unit_label(&self) -> String {
        for k in 0..8 {
            if *self == Self::zeta(k) {
                return match k {
                    0 => "1".into(),
                    1 => "w".into(),
                    2 => "i".into(),
                    3 => "w^3".into(),
                    4 => "-1".into(),
                    5 => "-w".into(),
                    6 => "-i".into(),
                    _ => "-w^3".into(),
                };
            }
        }
        format!("({self})")
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for BigRational {
    fn from_big(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }
}

/// Coefficient type for [`Cyc8`]: an exact rational number type.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Signed
    + Send
    + Sync
    + 'static
{
    fn from_big(num: &BigInt, den: &BigInt) -> Option<Self>;
}

impl Coeff for BigRational {
    fn from_big(num: &BigInt, den: &BigInt) -> Option<Self> {
        <BigRational as Scalar>::from_big(num, den)
    }
}

/// Machine-word rationals. Arithmetic overflow panics (debug) or wraps
/// (release); only suitable for small, well-conditioned computations.
impl Coeff for Ratio<i64> {
    fn from_big(num: &BigInt, den: &BigInt) -> Option<Self> {
        let (n, d) = (num.to_i64()?, den.to_i64()?);
        if d == 0 {
            None
        } else {
            Some(Ratio::new(n, d))
        }
    }
}

/// An element `c0 + c1 z + c2 z^2 + c3 z^3` of `Q(z)`, `z^4 = -1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc8<Q> {
    c: [Q; 4],
}

impl<Q: Coeff> Cyc8<Q> {
    pub fn new(c0: Q, c1: Q, c2: Q, c3: Q) -> Self {
        Cyc8 { c: [c0, c1, c2, c3] }
    }

    pub fn from_rational(q: Q) -> Self {
        Cyc8::new(q, Q::zero(), Q::zero(), Q::zero())
    }

    pub fn coeffs(&self) -> &[Q; 4] {
        &self.c
    }

    /// `z^k`, `k` taken mod 8 with the sign folded through `z^4 = -1`.
    pub fn root(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [Q::zero(), Q::zero(), Q::zero(), Q::zero()];
        c[k % 4] = if k >= 4 { -Q::one() } else { Q::one() };
        Cyc8 { c }
    }

    /// Galois conjugate `z -> z^j`, `j` odd.
    pub fn conj(&self, j: usize) -> Self {
        let mut out = [Q::zero(), Q::zero(), Q::zero(), Q::zero()];
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let e = (k * j) % 8;
            if e >= 4 {
                out[e - 4] = out[e - 4].clone() - ck.clone();
            } else {
                out[e] = out[e].clone() + ck.clone();
            }
        }
        Cyc8 { c: out }
    }

    /// Complex conjugate (`z -> z^7`).
    pub fn conjugate(&self) -> Self {
        self.conj(7)
    }

    /// The rational part, if the element is rational.
    pub fn as_rational(&self) -> Option<&Q> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let mut out = [Q::zero(), Q::zero(), Q::zero(), Q::zero()];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = a.clone() * b.clone();
                let k = i + j;
                if k >= 4 {
                    out[k - 4] = out[k - 4].clone() - p;
                } else {
                    out[k] = out[k].clone() + p;
                }
            }
        }
        Cyc8 { c: out }
    }
}

impl<Q: Coeff> Zero for Cyc8<Q> {
    fn zero() -> Self {
        Cyc8::from_rational(Q::zero())
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl<Q: Coeff> One for Cyc8<Q> {
    fn one() -> Self {
        Cyc8::from_rational(Q::one())
    }
}

impl<Q: Coeff> Add for Cyc8<Q> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = rhs.c;
        Cyc8::new(a0 + b0, a1 + b1, a2 + b2, a3 + b3)
    }
}

impl<Q: Coeff> Sub for Cyc8<Q> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = rhs.c;
        Cyc8::new(a0 - b0, a1 - b1, a2 - b2, a3 - b3)
    }
}

impl<Q: Coeff> Mul for Cyc8<Q> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<Q: Coeff> Neg for Cyc8<Q> {
    type Output = Self;
    fn neg(self) -> Self {
        let [a0, a1, a2, a3] = self.c;
        Cyc8::new(-a0, -a1, -a2, -a3)
    }
}

impl<Q: Coeff> Field for Cyc8<Q> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x * conj3 * conj5 * conj7 is the (rational) norm.
        let others = self.conj(3).mul_impl(&self.conj(5)).mul_impl(&self.conj(7));
        let norm = self.mul_impl(&others);
        let n = norm.as_rational().expect("norm is rational").clone();
        let ninv = Q::one() / n;
        Some(others.mul_impl(&Cyc8::from_rational(ninv)))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        Cyc8 {
            c: std::array::from_fn(|k| self.c[k].clone() + rhs.c[k].clone()),
        }
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        Cyc8 {
            c: std::array::from_fn(|k| self.c[k].clone() - rhs.c[k].clone()),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
}

impl<Q: Coeff> Scalar for Cyc8<Q> {
    fn from_big(num: &BigInt, den: &BigInt) -> Option<Self> {
        Q::from_big(num, den).map(Cyc8::from_rational)
    }

    fn atom(name: char) -> Option<Self> {
        match name {
            'i' => Some(Cyc8::root(2)),
            'w' | 'z' => Some(Cyc8::root(1)),
            _ => None,
        }
    }
}

impl<Q: Coeff> CyclotomicField for Cyc8<Q> {
    fn zeta(k: i64) -> Self {
        Cyc8::root(k)
    }
}

impl<Q: Coeff> fmt::Display for Cyc8<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let term = if k == 0 {
                ck.to_string()
            } else if ck.is_one() {
                power
            } else if (-ck.clone()).is_one() {
                format!("-{power}")
            } else {
                format!("{ck}*{power}")
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        write!(f, "{out}")
    }
}

impl<Q: Coeff> fmt::Debug for Cyc8<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc8({self})")
    }
}

impl<Q: Coeff> FromStr for Cyc8<Q> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::poly::parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Cyc;

    fn c(s: &str) -> Cyc {
        s.parse().unwrap()
    }

    #[test]
    fn root_reduction() {
        assert_eq!(Cyc::root(0), Cyc::one());
        assert_eq!(Cyc::root(2), c("i"));
        assert_eq!(Cyc::root(5), -Cyc::root(1));
        assert_eq!(Cyc::root(-1), Cyc::root(7));
        assert_eq!(Cyc::root(2) * Cyc::root(2), -Cyc::one());
    }

    #[test]
    fn sqrt_two() {
        let s = Cyc::root(1) + Cyc::root(7);
        assert_eq!(s.clone() * s, Cyc::from_int(2));
        let t = Cyc::root(1) - Cyc::root(3);
        assert_eq!(t.clone() * t, Cyc::from_int(2));
    }

    #[test]
    fn inverse_of_zeta() {
        assert_eq!(Cyc::root(1).inv().unwrap(), -Cyc::root(3));
        assert!(Cyc::zero().inv().is_none());
        assert!(matches!(Cyc::one().checked_div(&Cyc::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_roundtrip() {
        let x = Cyc::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::zero(),
            BigRational::new((-1).into(), 4.into()),
            BigRational::from_integer(3.into()),
        );
        assert_eq!(x.to_string(), "1/2 - 1/4*z^2 + 3*z^3");
        assert_eq!(c(&x.to_string()), x);
        assert_eq!(Cyc::zero().to_string(), "0");
        assert_eq!(c("-z^2").to_string(), "-z^2");
        assert_eq!(c("(1+i)/2"), c("1/2 + 1/2*z^2"));
        assert_eq!(c("w"), Cyc::root(1));
    }

    #[test]
    fn unit_labels() {
        assert_eq!(Cyc::root(6).unit_label(), "-i");
        assert_eq!(Cyc::root(3).unit_label(), "w^3");
        assert_eq!(Cyc::from_int(2).unit_label(), "(2)");
    }

    #[test]
    fn small_coefficients_agree() {
        type Small = Cyc8<Ratio<i64>>;
        let a = Small::root(1) + Small::from_ratio(1, 3);
        let b = a.inv().unwrap();
        assert_eq!(a * b, Small::one());
    }

    #[test]
    fn gaussian_subring_closed() {
        // (1 + 2i)(3 - i) = 5 + 5i
        assert_eq!(c("1 + 2*i") * c("3 - i"), c("5 + 5*i"));
        let g = c("2/3 - i").inv().unwrap();
        assert!(g.coeffs()[1].is_zero() && g.coeffs()[3].is_zero());
    }
}
