use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Arbitrary-precision rational number kept in lowest terms.
///
/// Values whose numerator and denominator fit in an `i64` are stored inline;
/// everything else falls back to big integers. The representation is
/// canonical, so derived equality and hashing are value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(i64, i64),
    Big(Box<(BigInt, BigInt)>),
}

fn fits(n: i128, d: i128) -> bool {
    n > i64::MIN as i128 && n <= i64::MAX as i128 && d > 0 && d <= i64::MAX as i128
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small(0, 1)
    }

    pub fn one() -> Self {
        Rational::Small(1, 1)
    }

    pub fn from_int(n: i64) -> Self {
        if n == i64::MIN {
            Self::from_big(BigInt::from(n), BigInt::one())
        } else {
            Rational::Small(n, 1)
        }
    }

    /// Builds `n/d`; panics when `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_i128(n as i128, d as i128)
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            return Rational::Small(0, 1);
        }
        if fits(n, d) {
            Rational::Small(n as i64, d as i64)
        } else {
            Rational::Big(Box::new((BigInt::from(n), BigInt::from(d))))
        }
    }

    pub fn from_big(mut n: BigInt, mut d: BigInt) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if !g.is_one() {
            n /= &g;
            d /= &g;
        }
        if n.is_zero() {
            return Rational::Small(0, 1);
        }
        match (n.to_i128(), d.to_i128()) {
            (Some(a), Some(b)) if fits(a, b) => Rational::Small(a as i64, b as i64),
            _ => Rational::Big(Box::new((n, d))),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Big(b) => b.0.clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Big(b) => b.1.clone(),
        }
    }

    fn parts(&self) -> (BigInt, BigInt) {
        (self.numer(), self.denom())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(b) => b.1.is_one(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rational::Small(n, _) => n.signum() as i32,
            Rational::Big(b) => {
                if b.0.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn add(&self, other: &Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, other) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Self::from_i128(a + c, b);
            }
            if let (Some(x), Some(y)) = (a.checked_mul(d), c.checked_mul(b)) {
                if let (Some(n), Some(den)) = (x.checked_add(y), b.checked_mul(d)) {
                    return Self::from_i128(n, den);
                }
            }
        }
        let (a, b) = self.parts();
        let (c, d) = other.parts();
        Self::from_big(a * &d + c * &b, b * d)
    }

    pub fn neg(&self) -> Rational {
        match self {
            Rational::Small(n, d) => Rational::Small(-n, *d),
            Rational::Big(b) => Self::from_big(-b.0.clone(), b.1.clone()),
        }
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        if self.is_zero() || other.is_zero() {
            return Rational::zero();
        }
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, other) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            let g1 = a.gcd(&d);
            let g2 = c.gcd(&b);
            let n = (a / g1) * (c / g2);
            let den = (b / g2) * (d / g1);
            if fits(n, den) {
                return Rational::Small(n as i64, den as i64);
            }
            return Self::from_big(BigInt::from(n), BigInt::from(den));
        }
        let (a, b) = self.parts();
        let (c, d) = other.parts();
        Self::from_big(a * c, b * d)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Rational {
        match self {
            Rational::Small(n, d) => {
                assert!(*n != 0, "inverse of zero");
                Self::from_i128(*d as i128, *n as i128)
            }
            Rational::Big(b) => Self::from_big(b.1.clone(), b.0.clone()),
        }
    }

    pub fn div(&self, other: &Rational) -> Rational {
        self.mul(&other.inv())
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Rational::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    /// Parses `"n"` or `"n/d"` with optional sign and surrounding whitespace.
    pub fn parse(s: &str) -> Option<Rational> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Self::from_big(n, d))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.sub(other);
        diff.signum().cmp(&0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) if b.1.is_one() => write!(f, "{}", b.0),
            Rational::Big(b) => write!(f, "{}/{}", b.0, b.1),
        }
    }
}
