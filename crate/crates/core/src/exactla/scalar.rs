use super::rational::Rational;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The ground field: the rationals or a prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime { p: u64 },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// GF(p); `None` unless `p` is a prime below 2^32 (products must fit in a u64).
    pub fn prime(p: u64) -> Option<Field> {
        (p < (1 << 32) && is_prime(p)).then_some(Field::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::zero()),
            Field::Prime { p } => Scalar::F(0, *p),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::one()),
            Field::Prime { p } => Scalar::F(1, *p),
        }
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::from_int(n)),
            Field::Prime { p } => Scalar::F(n.rem_euclid(*p as i64) as u64, *p),
        }
    }

    pub fn rational(&self, r: &Rational) -> Option<Scalar> {
        match self {
            Field::Rational => Some(Scalar::Q(r.clone())),
            Field::Prime { p } => {
                let m = num_bigint::BigInt::from(*p);
                let n = ((r.numer() % &m) + &m) % &m;
                let d = ((r.denom() % &m) + &m) % &m;
                let n: u64 = n.try_into().ok()?;
                let d: u64 = d.try_into().ok()?;
                if d == 0 {
                    return None;
                }
                Some(Scalar::F(n, *p).mul(&Scalar::F(d, *p).inv()))
            }
        }
    }

    /// Parses a scalar written as `"n"`, `"n/d"` (rationals) or a decimal integer (prime field).
    pub fn parse(&self, s: &str) -> Option<Scalar> {
        self.rational(&Rational::parse(s)?)
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Q(_)) => true,
            (Field::Prime { p }, Scalar::F(v, q)) => p == q && v < p,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime { p } => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element. Prime-field elements carry their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    F(u64, u64),
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::F(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::F(v, _) => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::F(_, p) => Field::Prime { p: *p },
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::F(a, p), Scalar::F(b, q)) if p == q => Scalar::F((a + b) % p, *p),
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.sub(b)),
            (Scalar::F(a, p), Scalar::F(b, q)) if p == q => Scalar::F((a + p - b) % p, *p),
            _ => panic!("mixed fields"),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::F(a, p), Scalar::F(b, q)) if p == q => Scalar::F(a * b % p, *p),
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::F(a, p) => Scalar::F((p - a) % p, *p),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.inv()),
            Scalar::F(a, p) => {
                assert!(*a != 0, "inverse of zero");
                Scalar::F(pow_mod(*a, p - 2, *p), *p)
            }
        }
    }

    pub fn div(&self, o: &Scalar) -> Scalar {
        self.mul(&o.inv())
    }

    /// `self - f * y`, the elimination step.
    pub fn sub_mul(&self, f: &Scalar, y: &Scalar) -> Scalar {
        if y.is_zero() {
            return self.clone();
        }
        self.sub(&f.mul(y))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Q(r) => Some(r),
            Scalar::F(..) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::F(v, _) => write!(f, "{v}"),
        }
    }
}
