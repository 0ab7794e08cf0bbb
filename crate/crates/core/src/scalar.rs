//! Arithmetic in a word-sized prime field.
//!
//! The prime lives in an [`Fp`] context value that is threaded through every
//! operation; [`Scalar`] is a bare residue in `[0, p)`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const MAX_PRIME: u64 = 1 << 62;

/// An odd prime `3 <= p < 2^62`, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin; these bases are exact for all n < 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
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

/// A residue modulo the ambient prime.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(u64);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(1);

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Fp {
            p: Prime::new(p)?.get(),
        })
    }

    pub fn from_prime(p: Prime) -> Self {
        Fp { p: p.get() }
    }

    pub fn prime(self) -> u64 {
        self.p
    }

    /// Reduce an unsigned integer.
    pub fn elem(self, v: u64) -> Scalar {
        Scalar(v % self.p)
    }

    /// Reduce a signed integer.
    pub fn from_i64(self, v: i64) -> Scalar {
        self.from_i128(v as i128)
    }

    pub fn from_i128(self, v: i128) -> Scalar {
        Scalar(v.rem_euclid(self.p as i128) as u64)
    }

    pub fn zero(self) -> Scalar {
        Scalar(0)
    }

    pub fn one(self) -> Scalar {
        Scalar(1)
    }

    #[inline]
    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        let s = a.0 + b.0;
        Scalar(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    #[inline]
    pub fn neg(self, a: Scalar) -> Scalar {
        Scalar(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        Scalar(mul_mod(a.0, b.0, self.p))
    }

    pub fn pow(self, a: Scalar, e: u64) -> Scalar {
        Scalar(pow_mod(a.0, e, self.p))
    }

    /// Inverse via the extended Euclidean algorithm.
    pub fn inv(self, a: Scalar) -> Result<Scalar> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let (mut r0, mut r1) = (self.p as i128, a.0 as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.from_i128(s0))
    }

    pub fn div(self, a: Scalar, b: Scalar) -> Result<Scalar> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `num / den` reduced into the field.
    pub fn reduce_rational(self, num: i128, den: i128) -> Result<Scalar> {
        let d = self.from_i128(den);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        self.div(self.from_i128(num), d)
    }

    /// Reduce an arbitrarily long decimal integer literal (optional sign).
    pub fn reduce_decimal(self, s: &str) -> Option<Scalar> {
        let s = s.trim();
        let (neg, digits) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        if digits.is_empty() {
            return None;
        }
        let mut acc = 0u64;
        for ch in digits.chars() {
            let d = ch.to_digit(10)? as u64;
            acc = (mul_mod(acc, 10, self.p) + d) % self.p;
        }
        let v = Scalar(acc);
        Some(if neg { self.neg(v) } else { v })
    }

    /// Reduce a decimal fraction `a/b`, or a plain integer.
    pub fn reduce_fraction(self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse {
            line: 0,
            column: 0,
            message: format!("bad number {s:?}"),
        };
        match s.split_once('/') {
            Some((a, b)) => {
                let a = self.reduce_decimal(a).ok_or_else(bad)?;
                let b = self.reduce_decimal(b).ok_or_else(bad)?;
                if b.is_zero() {
                    return Err(Error::DenominatorVanishes);
                }
                self.div(a, b)
            }
            None => self.reduce_decimal(s).ok_or_else(bad),
        }
    }

    /// Symmetric representative in `(-p/2, p/2]`, handy for display.
    pub fn signed(self, a: Scalar) -> i64 {
        if a.0 > self.p / 2 {
            a.0 as i64 - self.p as i64
        } else {
            a.0 as i64
        }
    }
}

/// Seeded deterministic generator threaded through every randomized step.
#[derive(Clone, Debug)]
pub struct Sampler {
    seed: u64,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// An independent generator for task `index`, derived from this seed only.
    pub fn derive(&self, index: u64) -> Sampler {
        let mixed = self
            .seed
            .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
            .rotate_left(17)
            ^ 0xD1B5_4A32_D192_ED03;
        Sampler::new(mixed)
    }

    pub fn scalar(&mut self, fp: Fp, nonzero: bool) -> Scalar {
        if nonzero {
            Scalar(self.rng.gen_range(1..fp.prime()))
        } else {
            Scalar(self.rng.gen_range(0..fp.prime()))
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }

    pub fn below(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        let f = Fp::new(65521).unwrap();
        assert_eq!(f.add(f.elem(65520), f.elem(2)), f.elem(1));
        assert_eq!(f.mul(f.elem(2), f.elem(32761)), f.one());
        let f7 = Fp::new(7).unwrap();
        assert_eq!(f7.mul(f7.elem(3), f7.elem(5)), f7.one());
    }

    #[test]
    fn inverse_examples() {
        let f = Fp::new(65521).unwrap();
        assert_eq!(f.inv(f.elem(2)).unwrap(), f.elem(32761));
        let f7 = Fp::new(7).unwrap();
        assert_eq!(f7.inv(f7.elem(3)).unwrap(), f7.elem(5));
        assert_eq!(f.inv(f.zero()), Err(Error::ZeroInverse));
        let mut s = Sampler::new(3);
        for _ in 0..100 {
            let x = s.scalar(f, true);
            assert_eq!(f.inv(f.inv(x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn rational_reduction() {
        let f = Fp::new(65521).unwrap();
        assert_eq!(f.reduce_rational(-140, 1).unwrap(), f.elem(65381));
        assert_eq!(f.reduce_rational(1, 2).unwrap(), f.elem(32761));
        // checked by multiplying back: 88 v = -95
        let v = f.reduce_rational(-95, 88).unwrap();
        assert_eq!((88 * v.value() as i128 + 95).rem_euclid(65521), 0);
        assert_eq!(f.reduce_rational(3, 65521), Err(Error::DenominatorVanishes));
        assert_eq!(
            f.reduce_decimal("205138445880446701").unwrap(),
            f.elem(205138445880446701 % 65521)
        );
        assert_eq!(f.reduce_fraction("-95/88").unwrap(), v);
    }

    #[test]
    fn primes() {
        assert!(Prime::new(65521).is_ok());
        assert!(Prime::new(65523).is_err());
        assert!(Prime::new(2).is_err());
        assert!(Prime::new(4611686018427387847).is_ok()); // largest prime below 2^62
        assert!(Prime::new(1 << 62).is_err());
        let brute = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..5000 {
            assert_eq!(is_prime(n), brute(n), "{n}");
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let f = Fp::new(101).unwrap();
        let a: Vec<_> = (0..20).map({
            let mut s = Sampler::new(42);
            move |_| s.scalar(f, false)
        }).collect();
        let b: Vec<_> = (0..20).map({
            let mut s = Sampler::new(42);
            move |_| s.scalar(f, false)
        }).collect();
        assert_eq!(a, b);
        let mut s = Sampler::new(7);
        assert!((0..10_000).all(|_| !s.scalar(f, true).is_zero()));
    }

    #[test]
    fn sampler_is_uniform() {
        // chi-square over 101 cells, 10^5 draws: mean 100, sd sqrt(200)
        let f = Fp::new(101).unwrap();
        let mut s = Sampler::new(2024);
        let mut counts = [0u64; 101];
        let draws = 100_000u64;
        for _ in 0..draws {
            counts[s.scalar(f, false).value() as usize] += 1;
        }
        let expected = draws as f64 / 101.0;
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        let dof = 100.0f64;
        assert!((chi2 - dof).abs() < 5.0 * (2.0 * dof).sqrt(), "chi2 = {chi2}");
    }
}
