use crate::error::{Error, Result};
use crate::scalar::{Fp, Scalar};
use crate::ucalc::ring::Ring;
use crate::ucalc::unipoly::UniPoly;

/// An element of `F_p[t]/(t^k)`, stored as exactly `k` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Scalar>,
}

impl Series {
    pub fn zero(prec: usize) -> Self {
        Series {
            coeffs: vec![Scalar::ZERO; prec],
        }
    }

    pub fn constant(c: Scalar, prec: usize) -> Self {
        let mut s = Series::zero(prec);
        if prec > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// Truncate or zero-pad `coeffs` to `prec` terms.
    pub fn from_coeffs(mut coeffs: Vec<Scalar>, prec: usize) -> Self {
        coeffs.resize(prec, Scalar::ZERO);
        Series { coeffs }
    }

    pub fn from_poly(p: &UniPoly, prec: usize) -> Self {
        Series::from_coeffs(p.coeffs().to_vec(), prec)
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when the series does not depend on `t`.
    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn with_prec(&self, prec: usize) -> Series {
        Series::from_coeffs(self.coeffs.clone(), prec)
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    /// Multiply by `t^k`, truncating.
    pub fn shift(&self, k: usize) -> Series {
        let prec = self.prec();
        let mut out = Series::zero(prec);
        for i in 0..prec.saturating_sub(k) {
            out.coeffs[i + k] = self.coeffs[i];
        }
        out
    }
}

/// The truncated power series ring `F_p[t]/(t^prec)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesRing {
    pub fp: Fp,
    pub prec: usize,
}

impl SeriesRing {
    pub fn new(fp: Fp, prec: usize) -> Self {
        SeriesRing { fp, prec }
    }

    pub fn constant(&self, c: Scalar) -> Series {
        Series::constant(c, self.prec)
    }

    pub fn scale(&self, a: &Series, c: Scalar) -> Series {
        Series {
            coeffs: a.coeffs.iter().map(|&x| self.fp.mul(x, c)).collect(),
        }
    }

    /// `acc += a * b`, truncated.
    pub fn mul_add_assign(&self, acc: &mut Series, a: &Series, b: &Series) {
        let fp = self.fp;
        let n = self.prec;
        for (i, &x) in a.coeffs.iter().enumerate().take(n) {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate().take(n - i) {
                acc.coeffs[i + j] = fp.add(acc.coeffs[i + j], fp.mul(x, y));
            }
        }
    }

    pub fn is_unit(&self, a: &Series) -> bool {
        !a.constant_term().is_zero()
    }

    /// Inverse of a unit by the usual recurrence.
    pub fn inv(&self, a: &Series) -> Result<Series> {
        let fp = self.fp;
        let c0 = fp.inv(a.constant_term()).map_err(|_| Error::ZeroInverse)?;
        let mut out = Series::zero(self.prec);
        for k in 0..self.prec {
            let mut s = if k == 0 { fp.one() } else { Scalar::ZERO };
            for i in 1..=k {
                s = fp.sub(s, fp.mul(a.coeff(i), out.coeffs[k - i]));
            }
            out.coeffs[k] = fp.mul(s, c0);
        }
        Ok(out)
    }

    pub fn eval_at(&self, a: &Series, t: Scalar) -> Scalar {
        a.to_poly().eval(t, self.fp)
    }
}

impl Ring for SeriesRing {
    type Elem = Series;

    fn zero(&self) -> Series {
        Series::zero(self.prec)
    }

    fn one(&self) -> Series {
        Series::constant(self.fp.one(), self.prec)
    }

    fn add(&self, a: &Series, b: &Series) -> Series {
        Series {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.fp.add(x, y))
                .collect(),
        }
    }

    fn sub(&self, a: &Series, b: &Series) -> Series {
        Series {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.fp.sub(x, y))
                .collect(),
        }
    }

    fn neg(&self, a: &Series) -> Series {
        Series {
            coeffs: a.coeffs.iter().map(|&x| self.fp.neg(x)).collect(),
        }
    }

    fn mul(&self, a: &Series, b: &Series) -> Series {
        let mut out = Series::zero(self.prec);
        self.mul_add_assign(&mut out, a, b);
        out
    }

    fn is_zero(&self, a: &Series) -> bool {
        a.is_zero()
    }
}
