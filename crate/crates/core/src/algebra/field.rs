use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::colour::ColorKey;
use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; these twelve bases cover all of `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// An element of a [`Field`]; residues are kept in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElem {
    Rational(BigRational),
    Residue(u64),
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => write!(f, "{q}"),
            FieldElem::Residue(r) => write!(f, "{r}"),
        }
    }
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime_u64(p) {
            return Err(Error::Parameter(format!("field order {p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rational(BigRational::zero()),
            Field::Prime(_) => FieldElem::Residue(0),
        }
    }

    pub fn one(&self) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rational(BigRational::one()),
            Field::Prime(p) => FieldElem::Residue(1 % p),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElem {
        match self {
            Field::Rationals => FieldElem::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                FieldElem::Residue(r.to_u64().expect("residue below p"))
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElem {
        self.from_bigint(&BigInt::from(v))
    }

    /// Parses `"a"` or `"a/b"`; over GF(p) the fraction means `a · b⁻¹`.
    pub fn parse(&self, s: &str) -> Result<FieldElem> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (crate::colour::parse_bigint(n)?, crate::colour::parse_bigint(d)?),
            None => (crate::colour::parse_bigint(s)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::Parameter(format!("zero denominator in {s:?}")));
        }
        match self {
            Field::Rationals => Ok(FieldElem::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let FieldElem::Residue(d) = self.from_bigint(&den) else { unreachable!() };
                if d == 0 {
                    return Err(Error::Parameter(format!("denominator of {s:?} vanishes mod {p}")));
                }
                let inv = pow_mod(d, p - 2, *p);
                let FieldElem::Residue(n) = self.from_bigint(&num) else { unreachable!() };
                Ok(FieldElem::Residue(mul_mod(n, inv, *p)))
            }
        }
    }

    fn check(&self, a: &FieldElem) {
        debug_assert!(matches!(
            (self, a),
            (Field::Rationals, FieldElem::Rational(_)) | (Field::Prime(_), FieldElem::Residue(_))
        ));
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        match (self, a, b) {
            (Field::Rationals, FieldElem::Rational(x), FieldElem::Rational(y)) => FieldElem::Rational(x + y),
            (Field::Prime(p), FieldElem::Residue(x), FieldElem::Residue(y)) => {
                FieldElem::Residue(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("mixed field elements"),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        match (self, a, b) {
            (Field::Rationals, FieldElem::Rational(x), FieldElem::Rational(y)) => FieldElem::Rational(x * y),
            (Field::Prime(p), FieldElem::Residue(x), FieldElem::Residue(y)) => FieldElem::Residue(mul_mod(*x, *y, *p)),
            _ => panic!("mixed field elements"),
        }
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        match a {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Residue(r) => *r == 0,
        }
    }

    pub fn key(&self, a: &FieldElem) -> ColorKey {
        match (self, a) {
            (_, FieldElem::Rational(q)) => ColorKey::from_rational(q),
            (Field::Prime(p), FieldElem::Residue(r)) => ColorKey::from_residue(*p, *r),
            (Field::Rationals, FieldElem::Residue(r)) => ColorKey::from_residue(0, *r),
        }
    }

    /// `1, a, a², …, a^d`.
    pub fn powers(&self, a: &FieldElem, d: usize) -> Vec<FieldElem> {
        let mut out = Vec::with_capacity(d + 1);
        out.push(self.one());
        for i in 0..d {
            let next = self.mul(&out[i], a);
            out.push(next);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_against_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..5000 {
            assert_eq!(is_prime_u64(n), trial(n), "{n}");
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.mul(&f.from_i64(2), &f.from_i64(4)), FieldElem::Residue(3));
        assert_eq!(f.add(&f.from_i64(3), &f.from_i64(4)), FieldElem::Residue(2));
        assert_eq!(f.from_i64(-1), FieldElem::Residue(4));
        assert_eq!(f.parse("1/2").unwrap(), FieldElem::Residue(3));
        assert!(f.parse("1/5").is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(91).is_err());
    }

    #[test]
    fn rational_parse() {
        let q = Field::Rationals;
        assert_eq!(q.parse("-2/4").unwrap(), FieldElem::Rational(BigRational::new((-1).into(), 2.into())));
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }
}
