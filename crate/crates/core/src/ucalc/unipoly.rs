use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Fp, Scalar};

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![Scalar::ONE],
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `y`.
    pub fn y() -> Self {
        UniPoly {
            coeffs: vec![Scalar::ZERO, Scalar::ONE],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(fp: Fp, coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| fp.from_i64(c)).collect())
    }

    /// `prod (y - r)`.
    pub fn from_roots(fp: Fp, roots: &[Scalar]) -> Self {
        roots.iter().fold(UniPoly::one(), |acc, &r| {
            acc.mul(&UniPoly::from_coeffs(vec![fp.neg(r), fp.one()]), fp)
        })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with zero mapped to 0, for bounds that do not care.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Scalar::ONE
    }

    pub fn add(&self, other: &UniPoly, fp: Fp) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs(
            (0..n)
                .map(|i| fp.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly, fp: Fp) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::from_coeffs(
            (0..n)
                .map(|i| fp.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: Scalar, fp: Fp) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|&a| fp.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &UniPoly, fp: Fp) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = fp.add(out[i + j], fp.mul(a, b));
            }
        }
        UniPoly::from_coeffs(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly, fp: Fp) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv_lead = fp.inv(divisor.lead()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = fp.mul(rem[k + dd], inv_lead);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = fp.sub(rem[k + j], fp.mul(c, d));
            }
        }
        rem.truncate(dd);
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &UniPoly, fp: Fp) -> UniPoly {
        self.div_rem(divisor, fp).1
    }

    /// Exact quotient, if `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &UniPoly, fp: Fp) -> Option<UniPoly> {
        let (q, r) = self.div_rem(divisor, fp);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, fp: Fp) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(fp.inv(self.lead()).expect("nonzero"), fp)
    }

    pub fn derivative(&self, fp: Fp) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| fp.mul(c, fp.elem(i as u64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: Scalar, fp: Fp) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::ZERO, |acc, &c| fp.add(fp.mul(acc, x), c))
    }

    /// `self(other)` reduced modulo `modulus`.
    pub fn compose_mod(&self, other: &UniPoly, modulus: &UniPoly, fp: Fp) -> UniPoly {
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, &c| {
            acc.mul(other, fp)
                .add(&UniPoly::constant(c), fp)
                .rem(modulus, fp)
        })
    }

    /// Inverse modulo `modulus`, if it exists.
    pub fn inv_mod(&self, modulus: &UniPoly, fp: Fp) -> Option<UniPoly> {
        let (g, u, _) = xgcd(&self.rem(modulus, fp), modulus, fp);
        (g.degree() == Some(0)).then(|| u.rem(modulus, fp))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "y")?,
                (1, v) => write!(f, "{v}*y")?,
                (_, 1) => write!(f, "y^{i}")?,
                (_, v) => write!(f, "{v}*y^{i}")?,
            }
        }
        Ok(())
    }
}

/// Extended gcd: `(g, u, v)` with `g` monic, `g = u a + v b`.
///
/// Both inputs zero is a precondition violation; it returns `(0, 0, 0)`.
pub fn xgcd(a: &UniPoly, b: &UniPoly, fp: Fp) -> (UniPoly, UniPoly, UniPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut u0, mut u1) = (UniPoly::one(), UniPoly::zero());
    let (mut v0, mut v1) = (UniPoly::zero(), UniPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1, fp);
        let u = u0.sub(&q.mul(&u1, fp), fp);
        let v = v0.sub(&q.mul(&v1, fp), fp);
        (r0, r1) = (r1, r);
        (u0, u1) = (u1, u);
        (v0, v1) = (v1, v);
    }
    if r0.is_zero() {
        return (UniPoly::zero(), UniPoly::zero(), UniPoly::zero());
    }
    let inv = fp.inv(r0.lead()).expect("nonzero");
    (r0.scale(inv, fp), u0.scale(inv, fp), v0.scale(inv, fp))
}

pub fn gcd(a: &UniPoly, b: &UniPoly, fp: Fp) -> UniPoly {
    xgcd(a, b, fp).0
}

/// Monic product of the distinct irreducible factors of `w`.
///
/// Computed as `w / gcd(w, w')`, valid while `deg w < p`.
pub fn squarefree_part(w: &UniPoly, fp: Fp) -> Result<UniPoly> {
    let deg = w.degree().ok_or(Error::ZeroInput)?;
    if deg as u64 >= fp.prime() {
        return Err(Error::DegreeTooLargeForChar {
            degree: deg,
            prime: fp.prime(),
        });
    }
    let g = gcd(w, &w.derivative(fp), fp);
    Ok(w.exact_div(&g, fp).expect("gcd divides").monic(fp))
}

pub fn is_squarefree(w: &UniPoly, fp: Fp) -> bool {
    !w.is_zero() && gcd(w, &w.derivative(fp), fp).degree() == Some(0)
}

/// The unique `v` with `v = residue_i mod modulus_i` and `deg v < sum deg modulus_i`.
pub fn crt(residues: &[UniPoly], moduli: &[UniPoly], fp: Fp) -> Result<UniPoly> {
    if residues.len() != moduli.len() {
        return Err(Error::ShapeError("residue/modulus count mismatch".into()));
    }
    let mut acc = UniPoly::zero();
    let mut prod = UniPoly::one();
    for (r, m) in residues.iter().zip(moduli) {
        if m.is_zero() {
            return Err(Error::ModuliNotCoprime);
        }
        // acc + prod * ((r - acc) * prod^{-1} mod m)
        let inv = prod.inv_mod(m, fp).ok_or(Error::ModuliNotCoprime)?;
        let delta = r.sub(&acc, fp).rem(m, fp).mul(&inv, fp).rem(m, fp);
        acc = acc.add(&prod.mul(&delta, fp), fp);
        prod = prod.mul(m, fp);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Sampler;

    fn f101() -> Fp {
        Fp::new(101).unwrap()
    }

    fn random(fp: Fp, s: &mut Sampler, deg: usize) -> UniPoly {
        UniPoly::from_coeffs((0..=deg).map(|_| s.scalar(fp, false)).collect())
    }

    #[test]
    fn gcd_examples() {
        let fp = f101();
        let a = UniPoly::from_i64(fp, &[-1, 0, 1]);
        let b = UniPoly::from_i64(fp, &[-1, 1]);
        assert_eq!(gcd(&a, &b, fp), b);
        let f = UniPoly::from_i64(fp, &[3, 0, 2]);
        assert_eq!(gcd(&f, &UniPoly::zero(), fp), f.monic(fp));
    }

    #[test]
    fn bezout_identity_on_random_pairs() {
        let fp = f101();
        let mut s = Sampler::new(1);
        for _ in 0..50 {
            let da = 1 + s.below(6);
            let a = random(fp, &mut s, da);
            let db = s.below(6);
            let b = random(fp, &mut s, db);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let (g, u, v) = xgcd(&a, &b, fp);
            assert!(g.is_monic());
            assert_eq!(u.mul(&a, fp).add(&v.mul(&b, fp), fp), g);
            assert!(a.rem(&g, fp).is_zero());
            assert!(b.rem(&g, fp).is_zero());
        }
    }

    #[test]
    fn squarefree_examples() {
        let fp = f101();
        let y2 = UniPoly::from_i64(fp, &[0, 0, 1]);
        assert_eq!(squarefree_part(&y2, fp).unwrap(), UniPoly::y());
        let r = |v: i64| fp.from_i64(v);
        let w = UniPoly::from_roots(fp, &[r(1), r(1), r(2)]);
        assert_eq!(
            squarefree_part(&w, fp).unwrap(),
            UniPoly::from_roots(fp, &[r(1), r(2)])
        );
        let f7 = Fp::new(7).unwrap();
        let big = UniPoly::from_coeffs(vec![f7.one(); 9]);
        assert!(matches!(
            squarefree_part(&big, f7),
            Err(Error::DegreeTooLargeForChar { .. })
        ));
        let mut s = Sampler::new(2);
        for _ in 0..30 {
            let da = 1 + s.below(5);
            let a = random(fp, &mut s, da);
            let db = 1 + s.below(3);
            let b = random(fp, &mut s, db);
            let w = a.mul(&b, fp).mul(&b, fp);
            if w.is_zero() {
                continue;
            }
            let sq = squarefree_part(&w, fp).unwrap();
            assert!(is_squarefree(&sq, fp));
            assert!(w.rem(&sq, fp).is_zero());
        }
    }

    #[test]
    fn crt_examples() {
        let fp = f101();
        let r = |v: i64| UniPoly::from_i64(fp, &[v]);
        let m1 = UniPoly::from_i64(fp, &[-1, 1]);
        let m2 = UniPoly::from_i64(fp, &[-2, 1]);
        // Lagrange oracle: v(1) = 3, v(2) = 5 gives 2y + 1
        let v = crt(&[r(3), r(5)], &[m1.clone(), m2.clone()], fp).unwrap();
        assert_eq!(v, UniPoly::from_i64(fp, &[1, 2]));
        assert_eq!(crt(&[r(7)], &[m1.clone()], fp).unwrap(), r(7));
        let y = UniPoly::y();
        let m3 = UniPoly::from_i64(fp, &[-3, 1]);
        assert_eq!(
            crt(
                &[y.rem(&m1, fp), y.rem(&m2, fp), y.rem(&m3, fp)],
                &[m1.clone(), m2.clone(), m3],
                fp
            )
            .unwrap(),
            y
        );
        assert_eq!(
            crt(&[r(1), r(2)], &[m1.clone(), m1], fp),
            Err(Error::ModuliNotCoprime)
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = UniPoly> {
            prop::collection::vec(0u64..101, 0..8)
                .prop_map(|c| UniPoly::from_coeffs(c.into_iter().map(|x| f101().elem(x)).collect()))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]

            #[test]
            fn xgcd_bezout(a in poly(), b in poly()) {
                prop_assume!(!a.is_zero() || !b.is_zero());
                let fp = f101();
                let (g, u, v) = xgcd(&a, &b, fp);
                prop_assert!(g.is_monic());
                prop_assert_eq!(u.mul(&a, fp).add(&v.mul(&b, fp), fp), g.clone());
                prop_assert!(a.rem(&g, fp).is_zero() && b.rem(&g, fp).is_zero());
            }

            #[test]
            fn division_identity(a in poly(), b in poly()) {
                prop_assume!(!b.is_zero());
                let fp = f101();
                let (q, r) = a.div_rem(&b, fp);
                prop_assert_eq!(q.mul(&b, fp).add(&r, fp), a);
                prop_assert!(r.degree().map_or(true, |d| d < b.deg0()));
            }

            #[test]
            fn crt_recovers_residues(x in poly(), m1 in poly(), m2 in poly()) {
                let fp = f101();
                prop_assume!(m1.deg0() > 0 && m2.deg0() > 0);
                prop_assume!(gcd(&m1, &m2, fp).deg0() == 0);
                let rs = [x.rem(&m1, fp), x.rem(&m2, fp)];
                let v = crt(&rs, &[m1.clone(), m2.clone()], fp).unwrap();
                prop_assert_eq!(v.rem(&m1, fp), rs[0].clone());
                prop_assert_eq!(v.rem(&m2, fp), rs[1].clone());
                prop_assert!(v.deg0() < m1.deg0() + m2.deg0());
            }
        }
    }
}
