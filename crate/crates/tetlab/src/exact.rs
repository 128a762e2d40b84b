//! Checked 64-bit integer arithmetic and exact reduced rationals.
//!
//! Everything downstream is built on these primitives. Arithmetic either
//! returns a correct value or surfaces `Error::Overflow`; silent wraparound
//! never happens.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) fn cadd(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

pub(crate) fn csub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

pub(crate) fn cmul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

/// Greatest common divisor, always nonnegative; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    i64::try_from(x).expect("gcd overflow")
}

pub fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    gcd(gcd(a, b), c)
}

/// Extended Euclidean algorithm: returns `(g, x, y)` with `a*x + b*y = g`
/// and `g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i64, 0i64);
    let (mut y0, mut y1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Multiplicative inverse of `a` modulo `n >= 2`, in `[1, n-1]`.
pub fn mod_inverse(a: i64, n: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("modulus must be >= 2, got {n}")));
    }
    let r = a.rem_euclid(n);
    let (g, x, _) = ext_gcd(r, n);
    if g != 1 {
        return Err(Error::NotInvertible { value: a, modulus: n });
    }
    Ok(x.rem_euclid(n))
}

/// Exact rational number, always stored reduced with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg().ok_or(Error::Overflow("negation"))?;
            den = den.checked_neg().ok_or(Error::Overflow("negation"))?;
        }
        Ok(Rational { num, den })
    }

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn add(&self, other: &Rational) -> Result<Rational> {
        let num = cadd(cmul(self.num, other.den)?, cmul(other.num, self.den)?)?;
        Rational::new(num, cmul(self.den, other.den)?)
    }

    pub fn sub(&self, other: &Rational) -> Result<Rational> {
        self.add(&other.neg()?)
    }

    pub fn mul(&self, other: &Rational) -> Result<Rational> {
        Rational::new(cmul(self.num, other.num)?, cmul(self.den, other.den)?)
    }

    pub fn neg(&self) -> Result<Rational> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(Error::Overflow("negation"))?,
            den: self.den,
        })
    }

    pub fn floor(&self) -> i64 {
        self.num.div_euclid(self.den)
    }

    /// Fractional part `{q} in [0, 1)` with `q - {q}` an integer.
    pub fn frac(&self) -> Rational {
        Rational {
            num: self.num.rem_euclid(self.den),
            den: self.den,
        }
        .reduced()
    }

    fn reduced(self) -> Rational {
        let g = gcd(self.num, self.den);
        if g <= 1 {
            self
        } else {
            Rational { num: self.num / g, den: self.den / g }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive; compare via exact wide products.
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("malformed rational {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let num = n.trim().parse().map_err(|_| bad())?;
                let den = d.trim().parse().map_err(|_| bad())?;
                Rational::new(num, den)
            }
            None => Ok(Rational::integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_values() {
        assert_eq!(gcd(12, 20), 4);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(-9, 20), 1);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(-12, -18), 6);
    }

    #[test]
    fn mod_inverse_values() {
        assert_eq!(mod_inverse(3, 20).unwrap(), 7);
        assert_eq!(mod_inverse(1, 5).unwrap(), 1);
        assert_eq!(
            mod_inverse(4, 20),
            Err(Error::NotInvertible { value: 4, modulus: 20 })
        );
    }

    #[test]
    fn mod_inverse_matches_brute_scan() {
        for n in 2..=200i64 {
            for a in 1..n {
                let brute = (1..n).find(|x| (a * x) % n == 1);
                match mod_inverse(a, n) {
                    Ok(x) => {
                        assert_eq!(Some(x), brute, "a={a} n={n}");
                        assert_eq!((a * x).rem_euclid(n), 1);
                    }
                    Err(_) => assert_eq!(brute, None, "a={a} n={n}"),
                }
            }
        }
    }

    #[test]
    fn frac_part_values() {
        assert_eq!(Rational::new(9, 4).unwrap().frac(), Rational::new(1, 4).unwrap());
        assert_eq!(Rational::new(-3, 4).unwrap().frac(), Rational::new(1, 4).unwrap());
        assert_eq!(Rational::integer(3).frac(), Rational::ZERO);
    }

    #[test]
    fn frac_complement_identity() {
        // {x} + {-x} = 1 for non-integer x
        for num in -40..40i64 {
            for den in 1..12i64 {
                let q = Rational::new(num, den).unwrap();
                if q.is_integer() {
                    assert_eq!(q.frac(), Rational::ZERO);
                } else {
                    let sum = q.frac().add(&q.neg().unwrap().frac()).unwrap();
                    assert_eq!(sum, Rational::ONE);
                }
                // q - {q} is an integer and {q} in [0,1)
                assert!(q.sub(&q.frac()).unwrap().is_integer());
                assert!(q.frac() >= Rational::ZERO && q.frac() < Rational::ONE);
            }
        }
    }

    #[test]
    fn rational_parse_roundtrip() {
        let q: Rational = "-3/9".parse().unwrap();
        assert_eq!(q, Rational::new(-1, 3).unwrap());
        assert_eq!(q.to_string(), "-1/3");
        assert_eq!("5".parse::<Rational>().unwrap(), Rational::integer(5));
    }

    #[test]
    fn overflow_is_detected() {
        let big = Rational::integer(i64::MAX);
        assert_eq!(big.add(&Rational::ONE), Err(Error::Overflow("addition")));
    }
}
