use super::rational::Rational;
use super::scalar::{Field, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1 << 20;
const MAX_CANDIDATES: usize = 20_000;

/// Distinct roots in the ground field of a polynomial (coefficients low to high).
///
/// Over the rationals this is the rational-root test; divisor enumeration is
/// bounded, so roots whose numerator or denominator has a huge prime factor
/// may be missed. Over GF(p) small fields are searched exhaustively.
pub fn field_roots(field: Field, coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut c: Vec<Scalar> = coeffs.to_vec();
    while c.last().is_some_and(Scalar::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    match field {
        Field::Rational => rational_roots(&c),
        Field::Prime { p } => {
            let limit = p.min(4096);
            (0..limit)
                .map(|v| Scalar::F(v, p))
                .filter(|x| eval(field, &c, x).is_zero())
                .collect()
        }
    }
}

pub fn eval(field: Field, c: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = field.zero();
    for a in c.iter().rev() {
        acc = acc.mul(x).add(a);
    }
    acc
}

fn rational_roots(c: &[Scalar]) -> Vec<Scalar> {
    let rs: Vec<&Rational> = c.iter().map(|s| s.as_rational().expect("rational coefficients")).collect();
    let mut lcm = BigInt::one();
    for r in &rs {
        lcm = lcm.lcm(&r.denom());
    }
    let mut ints: Vec<BigInt> = rs.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let mut roots = Vec::new();
    let lead = ints.iter().position(|x| !x.is_zero()).unwrap_or(0);
    if lead > 0 {
        roots.push(Scalar::Q(Rational::zero()));
        ints.drain(..lead);
    }
    if ints.len() <= 1 {
        return roots;
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let (Some(ps), Some(qs)) = (divisors(&a0), divisors(&an)) else {
        return roots;
    };
    if ps.len() * qs.len() > MAX_CANDIDATES {
        return roots;
    }
    let mut seen = std::collections::BTreeSet::new();
    for p in &ps {
        for q in &qs {
            if !p.gcd(q).is_one() {
                continue;
            }
            for num in [p.clone(), -p.clone()] {
                let x = Rational::from_big(num, q.clone());
                let mut v = Rational::zero();
                for a in ints.iter().rev() {
                    v = v.mul(&x).add(&Rational::from_big(a.clone(), BigInt::one()));
                }
                if v.is_zero() && seen.insert(x.to_string()) {
                    roots.push(Scalar::Q(x));
                }
            }
        }
    }
    roots
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n == 0 {
        return None;
    }
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m && d <= TRIAL_LIMIT {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut divs = vec![1u64];
    for (p, e) in primes {
        let mut next = Vec::new();
        for &x in &divs {
            let mut pk = 1u64;
            for _ in 0..=e {
                next.push(x * pk);
                pk = pk.saturating_mul(p);
            }
        }
        divs = next;
        if divs.len() > MAX_CANDIDATES {
            return None;
        }
    }
    Some(divs.into_iter().map(BigInt::from).collect())
}
