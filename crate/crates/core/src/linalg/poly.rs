//! Dense univariate polynomials over Q, just enough for characteristic
//! polynomials and the irreducibility questions asked by the indecomposability
//! oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::RatMatrix;
use super::rational::Rational;

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Unknown,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![Rational::one()],
        }
    }

    /// `x - r`.
    pub fn linear(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let d = divisor.degree();
        let lead = divisor.leading();
        if self.is_zero() || self.degree() < d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] / &lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::one();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Primitive integer polynomial proportional to `self`.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return ints;
        }
        let sign = if ints.last().is_some_and(Signed::is_negative) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// All rational roots, or `None` when the candidate set could not be enumerated.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        if self.is_zero() {
            return None;
        }
        let mut roots = Vec::new();
        let mut ints = self.primitive_integer();
        if ints.first().is_some_and(Zero::is_zero) {
            roots.push(Rational::zero());
            while ints.first().is_some_and(Zero::is_zero) {
                ints.remove(0);
            }
        }
        if ints.len() <= 1 {
            return Some(roots);
        }
        let a0 = ints[0].abs().to_u64()?;
        let ad = ints[ints.len() - 1].abs().to_u64()?;
        let (num_divs, den_divs) = (divisors(a0)?, divisors(ad)?);
        for p in &num_divs {
            for qd in &den_divs {
                for s in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(*p) * s, BigInt::from(*qd));
                    if !roots.contains(&cand) && self.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }

    /// Irreducibility over Q of a squarefree polynomial.
    pub fn irreducibility(&self) -> Irreducibility {
        let d = self.degree();
        if self.is_zero() || d == 0 {
            return Irreducibility::Reducible;
        }
        if d == 1 {
            return Irreducibility::Irreducible;
        }
        match self.rational_roots() {
            Some(roots) if !roots.is_empty() => return Irreducibility::Reducible,
            Some(_) if d <= 3 => return Irreducibility::Irreducible,
            _ => {}
        }
        let ints = self.primitive_integer();
        for p in SMALL_PRIMES {
            if irreducible_mod_p(&ints, p) == Some(true) {
                return Irreducibility::Irreducible;
            }
        }
        Irreducibility::Unknown
    }
}

const SMALL_PRIMES: [u64; 21] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
];

fn divisors(n: u64) -> Option<Vec<u64>> {
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}

/// Ben-Or test on the reduction mod `p`. `None` when the leading coefficient
/// vanishes mod `p` (degree drops, so the reduction says nothing).
fn irreducible_mod_p(ints: &[BigInt], p: u64) -> Option<bool> {
    let pb = BigInt::from(p);
    let coeffs: Vec<u64> = ints
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap_or(0))
        .collect();
    let lead = *coeffs.last()?;
    if lead == 0 {
        return None;
    }
    let inv = pow_mod(lead, p - 2, p);
    let f: Vec<u64> = coeffs.iter().map(|c| c * inv % p).collect();
    let d = f.len() - 1;
    let mut h = vec![0, 1];
    for _ in 0..d / 2 {
        h = poly_pow_mod(&h, p, &f, p);
        let mut g = h.clone();
        if g.len() < 2 {
            g.resize(2, 0);
        }
        g[1] = (g[1] + p - 1) % p;
        trim(&mut g);
        if poly_gcd_mod(g, f.clone(), p).len() > 1 {
            return Some(false);
        }
    }
    Some(true)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem_mod(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    trim(&mut a);
    let db = b.len() - 1;
    let inv = pow_mod(b[db], p - 2, p);
    while a.len() > db {
        let k = a.len() - 1 - db;
        let c = a[a.len() - 1] * inv % p;
        for (j, &bj) in b.iter().enumerate() {
            a[k + j] = (a[k + j] + p - c * bj % p) % p;
        }
        trim(&mut a);
    }
    a
}

fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_rem_mod(out, f, p)
}

fn poly_pow_mod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem_mod(base.to_vec(), f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, f, p);
        }
        b = poly_mul_mod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn poly_gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem_mod(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Characteristic polynomial `det(x I - A)` by the Faddeev-LeVerrier recursion.
pub fn charpoly(a: &RatMatrix) -> Poly {
    assert!(
        a.is_square(),
        "characteristic polynomial of a non-square matrix"
    );
    let n = a.nrows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = RatMatrix::zeros(n, n);
    for k in 1..=n {
        let prev = coeffs[n - k + 1].clone();
        m = a.mul(&m).add(&RatMatrix::scalar(n, &prev));
        coeffs[n - k] = -a.mul(&m).trace() / Rational::from_integer(BigInt::from(k));
    }
    Poly::new(coeffs)
}
