//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! Every computation in this crate runs over one of two coefficient fields,
//! chosen at runtime: the rationals (the default) or a prime field `GF(p)`.
//! Rationals are kept in lowest terms with positive denominator by
//! `num::BigRational`; prime-field residues are kept in `[0, p)`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    /// The rational numbers with arbitrary-precision integer parts.
    Rational,
    /// The prime field with `p` elements.
    Prime(u64),
}

impl FieldKind {
    pub fn zero(&self) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Q(BigRational::zero()),
            FieldKind::Prime(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Q(BigRational::one()),
            FieldKind::Prime(p) => Scalar::Fp { v: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldKind::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldKind::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { v: m % *p, p: *p }
            }
        }
    }

    /// Ratio `n/d`; panics if `d` maps to zero in the field.
    pub fn from_ratio(&self, n: i64, d: i64) -> Scalar {
        let num = self.from_i64(n);
        let den = self.from_i64(d);
        assert!(!den.is_zero(), "denominator is zero in {self:?}");
        num.div(&den)
    }

    pub fn is_char_zero(&self) -> bool {
        matches!(self, FieldKind::Rational)
    }

    /// Parses `q` or `gf:<p>` (`p` must be prime).
    pub fn parse(text: &str) -> Result<FieldKind, String> {
        if text == "q" || text == "Q" {
            return Ok(FieldKind::Rational);
        }
        if let Some(p) = text.strip_prefix("gf:") {
            let p: u64 = p.parse().map_err(|_| format!("bad prime `{p}`"))?;
            if !is_prime(p) {
                return Err(format!("{p} is not prime"));
            }
            return Ok(FieldKind::Prime(p));
        }
        Err(format!("unknown field `{text}` (expected `q` or `gf:<p>`)"))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar in the chosen field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldKind {
        match self {
            Scalar::Q(_) => FieldKind::Rational,
            Scalar::Fp { p, .. } => FieldKind::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { v: (a + b) % p, p: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p: *p },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { v: mulmod(*a, *b, *p), p: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { v, p } => Scalar::Fp { v: invmod(*v, *p), p: *p },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "not invertible mod p");
    s0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

/// Parses an integer or `p/q` fraction into the given field.
pub fn parse_scalar(field: FieldKind, text: &str) -> Result<Scalar, String> {
    let parse_int = |s: &str| -> Result<i64, String> {
        s.parse::<i64>().map_err(|_| format!("bad coefficient `{s}`"))
    };
    if let Some((n, d)) = text.split_once('/') {
        let n = parse_int(n)?;
        let d = parse_int(d)?;
        if field.from_i64(d).is_zero() {
            return Err(format!("denominator of `{text}` is zero in the field"));
        }
        Ok(field.from_ratio(n, d))
    } else {
        Ok(field.from_i64(parse_int(text)?))
    }
}

impl Scalar {
    /// True sign test usable for rationals; prime-field elements have no sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let f = FieldKind::Rational;
        let x = f.from_ratio(2, 4);
        assert_eq!(x.to_string(), "1/2");
        let y = f.from_ratio(-1, -2);
        assert_eq!(y.to_string(), "1/2");
        assert_eq!(x, y);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldKind::Prime(7);
        let x = f.from_i64(5);
        let y = f.from_i64(4);
        assert_eq!(x.mul(&y).to_string(), "6");
        assert_eq!(x.add(&y).to_string(), "2");
        assert!(x.mul(&x.inv()).is_one());
        assert_eq!(f.from_i64(-1).to_string(), "6");
    }

    #[test]
    fn field_parse() {
        assert_eq!(FieldKind::parse("q").unwrap(), FieldKind::Rational);
        assert_eq!(FieldKind::parse("gf:5").unwrap(), FieldKind::Prime(5));
        assert!(FieldKind::parse("gf:6").is_err());
        assert!(FieldKind::parse("r").is_err());
    }

    #[test]
    fn scalar_parse() {
        let f = FieldKind::Rational;
        assert_eq!(parse_scalar(f, "3/4").unwrap(), f.from_ratio(3, 4));
        assert_eq!(parse_scalar(f, "-2").unwrap(), f.from_i64(-2));
        assert!(parse_scalar(f, "x").is_err());
    }
}
