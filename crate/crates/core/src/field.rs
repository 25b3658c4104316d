//! Exact scalars: arbitrary-precision rationals and prime-field residues.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use rand::Rng;
use std::fmt;

/// Ground field of a linear backend. Fixed per workspace.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Field {
    Q,
    Fp(u64),
}

/// An exact scalar. Rationals are kept reduced with positive denominator
/// (the `BigRational` constructor guarantees this); residues live in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
}

impl Field {
    pub fn parse(s: &str) -> Option<Field> {
        if s == "Q" {
            return Some(Field::Q);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p.parse().ok()?;
            if p >= 2 && is_prime(p) {
                return Some(Field::Fp(p));
            }
        }
        None
    }

    pub fn name(&self) -> String {
        match self {
            Field::Q => "Q".to_string(),
            Field::Fp(p) => format!("Fp:{p}"),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Fp(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(v))),
            Field::Fp(p) => Scalar::Fp((v.rem_euclid(*p as i64)) as u64),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Field::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x - y),
            (Field::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Field::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Q, Scalar::Q(x)) => Scalar::Q(-x),
            (Field::Fp(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Field::Q, Scalar::Q(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Q(x.recip()))
                }
            }
            (Field::Fp(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    None
                } else {
                    Some(Scalar::Fp(pow_mod(*x, p - 2, *p)))
                }
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let bi = self.inv(b).expect("division by zero");
        self.mul(a, &bi)
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    /// Parses `"a/b"` or a decimal integer; residues are reduced mod p.
    pub fn parse_scalar(&self, s: &str) -> Option<Scalar> {
        let s = s.trim();
        match self {
            Field::Q => {
                if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n.trim().parse().ok()?;
                    let d: BigInt = d.trim().parse().ok()?;
                    if d.is_zero() {
                        return None;
                    }
                    Some(Scalar::Q(BigRational::new(n, d)))
                } else {
                    let n: BigInt = s.parse().ok()?;
                    Some(Scalar::Q(BigRational::from_integer(n)))
                }
            }
            Field::Fp(p) => {
                let n: i64 = s.parse().ok()?;
                Some(Scalar::Fp(n.rem_euclid(*p as i64) as u64))
            }
        }
    }

    pub fn render(&self, a: &Scalar) -> String {
        match a {
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    format!("{}", x.numer())
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => format!("{x}"),
        }
    }

    /// Small random scalar for sampled law checks.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Q => self.from_i64(rng.gen_range(-3..=3)),
            Field::Fp(p) => Scalar::Fp(rng.gen_range(0..*p)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => write!(f, "{x}"),
        }
    }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    acc as u64
}

fn is_prime(n: u64) -> bool {
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

impl Scalar {
    /// Signum-based helper for rendering positivity in reports.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_negative(),
            Scalar::Fp(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let f = Field::Q;
        let a = f.parse_scalar("2/4").unwrap();
        assert_eq!(f.render(&a), "1/2");
        let b = f.parse_scalar("3/-6").unwrap();
        assert_eq!(f.render(&b), "-1/2");
        let s = f.add(&a, &b);
        assert!(f.is_zero(&s));
    }

    #[test]
    fn fp_arithmetic() {
        let f = Field::Fp(5);
        let a = f.from_i64(7);
        assert_eq!(a, Scalar::Fp(2));
        let inv = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &inv), f.one());
        assert!(f.inv(&f.zero()).is_none());
        let b = f.from_i64(-1);
        assert_eq!(b, Scalar::Fp(4));
    }

    #[test]
    fn field_parse() {
        assert_eq!(Field::parse("Q"), Some(Field::Q));
        assert_eq!(Field::parse("Fp:3"), Some(Field::Fp(3)));
        assert_eq!(Field::parse("Fp:4"), None);
        assert_eq!(Field::parse("R"), None);
    }
}
