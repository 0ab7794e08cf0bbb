use crate::error::{Error, Result};
use crate::scalar::{Fp, Scalar};
use crate::ucalc::ring::Ring;
use crate::ucalc::series::{Series, SeriesRing};
use crate::ucalc::unipoly::{gcd, UniPoly};

/// Element of [`QuotRing`]: `sum_i coeffs[i] y^i` with `deg < deg modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotElem {
    pub coeffs: Vec<Series>,
}

/// `(F_p[t]/(t^prec))[y] / (w(t, y))` for a monic `w`.
///
/// With a `t`-free modulus `w0` this is `F_p[y]/(w0) (x) F_p[t]/(t^prec)`.
/// The modulus is squarefree at `t = 0` in every use here, but it is usually
/// reducible, so the ring has zero divisors and elimination never pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotRing {
    series: SeriesRing,
    modulus: Vec<Series>,
}

impl QuotRing {
    /// Ring for a constant-in-`t` monic modulus.
    pub fn with_constant_modulus(fp: Fp, w0: &UniPoly, prec: usize) -> Result<Self> {
        if !w0.is_monic() {
            return Err(Error::DegreeBound("modulus must be monic".into()));
        }
        let modulus = w0
            .coeffs()
            .iter()
            .map(|&c| Series::constant(c, prec))
            .collect();
        Ok(QuotRing {
            series: SeriesRing::new(fp, prec),
            modulus,
        })
    }

    /// Ring for a monic modulus with series coefficients, lowest degree first.
    pub fn new(fp: Fp, modulus: Vec<Series>, prec: usize) -> Result<Self> {
        let ring = SeriesRing::new(fp, prec);
        let lead = modulus
            .last()
            .ok_or_else(|| Error::DegreeBound("empty modulus".into()))?;
        if lead.with_prec(prec) != ring.one() {
            return Err(Error::DegreeBound("modulus must be monic".into()));
        }
        Ok(QuotRing {
            series: ring,
            modulus: modulus.into_iter().map(|s| s.with_prec(prec)).collect(),
        })
    }

    pub fn fp(&self) -> Fp {
        self.series.fp
    }

    pub fn prec(&self) -> usize {
        self.series.prec
    }

    pub fn series_ring(&self) -> &SeriesRing {
        &self.series
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Series] {
        &self.modulus
    }

    /// `w(0, y)`.
    pub fn modulus_at_zero(&self) -> UniPoly {
        UniPoly::from_coeffs(self.modulus.iter().map(Series::constant_term).collect())
    }

    /// Same modulus, different precision (padding with zero terms).
    pub fn with_prec(&self, prec: usize) -> QuotRing {
        QuotRing {
            series: SeriesRing::new(self.fp(), prec),
            modulus: self.modulus.iter().map(|s| s.with_prec(prec)).collect(),
        }
    }

    pub fn convert(&self, a: &QuotElem) -> QuotElem {
        QuotElem {
            coeffs: a.coeffs.iter().map(|s| s.with_prec(self.prec())).collect(),
        }
    }

    /// Reduce a polynomial in `y` with series coefficients.
    pub fn reduce(&self, mut c: Vec<Series>) -> QuotElem {
        let d = self.degree();
        let sr = &self.series;
        for s in c.iter_mut() {
            if s.prec() != sr.prec {
                *s = s.with_prec(sr.prec);
            }
        }
        while c.len() > d {
            let top = c.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let base = c.len() - d;
            for (l, m) in self.modulus[..d].iter().enumerate() {
                let prod = sr.mul(&top, m);
                c[base + l] = sr.sub(&c[base + l], &prod);
            }
        }
        c.resize(d, sr.zero());
        QuotElem { coeffs: c }
    }

    pub fn from_unipoly(&self, p: &UniPoly) -> QuotElem {
        self.reduce(
            p.coeffs()
                .iter()
                .map(|&c| Series::constant(c, self.prec()))
                .collect(),
        )
    }

    pub fn from_scalar(&self, c: Scalar) -> QuotElem {
        self.from_series(&Series::constant(c, self.prec()))
    }

    pub fn from_series(&self, s: &Series) -> QuotElem {
        self.reduce(vec![s.with_prec(self.prec())])
    }

    /// The class of `y`.
    pub fn y(&self) -> QuotElem {
        self.from_unipoly(&UniPoly::y())
    }

    /// `t^k` as an element.
    pub fn t_pow(&self, k: usize) -> QuotElem {
        let mut s = Series::zero(self.prec());
        if k < self.prec() {
            s = Series::from_coeffs(
                (0..=k)
                    .map(|i| if i == k { Scalar::ONE } else { Scalar::ZERO })
                    .collect(),
                self.prec(),
            );
        }
        self.from_series(&s)
    }

    pub fn scale(&self, a: &QuotElem, c: Scalar) -> QuotElem {
        QuotElem {
            coeffs: a.coeffs.iter().map(|s| self.series.scale(s, c)).collect(),
        }
    }

    pub fn mul_series(&self, a: &QuotElem, s: &Series) -> QuotElem {
        QuotElem {
            coeffs: a.coeffs.iter().map(|x| self.series.mul(x, s)).collect(),
        }
    }

    /// Constant-in-`t` part as a polynomial in `y`.
    pub fn at_t_zero(&self, a: &QuotElem) -> UniPoly {
        UniPoly::from_coeffs(a.coeffs.iter().map(Series::constant_term).collect())
    }

    pub fn is_unit(&self, a: &QuotElem) -> bool {
        let fp = self.fp();
        let w0 = self.modulus_at_zero();
        let a0 = self.at_t_zero(a);
        !a0.is_zero() && gcd(&a0, &w0, fp).degree() == Some(0)
    }

    /// Inverse of a unit: invert modulo `(w, t)`, then Newton-lift in `t`.
    pub fn inv(&self, a: &QuotElem) -> Result<QuotElem> {
        let fp = self.fp();
        let w0 = self.modulus_at_zero();
        let a0 = self.at_t_zero(a);
        let b0 = a0.inv_mod(&w0, fp).ok_or(Error::ZeroInverse)?;
        let mut b = self.from_unipoly(&b0);
        let two = self.from_scalar(fp.elem(2));
        let mut correct = 1;
        while correct < self.prec() {
            let ab = self.mul(a, &b);
            b = self.mul(&b, &self.sub(&two, &ab));
            correct *= 2;
        }
        Ok(b)
    }

    /// `sum_k c_k x^k` for a polynomial with series coefficients.
    pub fn eval_poly(&self, coeffs: &[Series], x: &QuotElem) -> QuotElem {
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.from_series(c));
        }
        acc
    }
}

impl Ring for QuotRing {
    type Elem = QuotElem;

    fn zero(&self) -> QuotElem {
        QuotElem {
            coeffs: vec![self.series.zero(); self.degree()],
        }
    }

    fn one(&self) -> QuotElem {
        self.from_scalar(Scalar::ONE)
    }

    fn add(&self, a: &QuotElem, b: &QuotElem) -> QuotElem {
        QuotElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| self.series.add(x, y))
                .collect(),
        }
    }

    fn sub(&self, a: &QuotElem, b: &QuotElem) -> QuotElem {
        QuotElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| self.series.sub(x, y))
                .collect(),
        }
    }

    fn neg(&self, a: &QuotElem) -> QuotElem {
        QuotElem {
            coeffs: a.coeffs.iter().map(|x| self.series.neg(x)).collect(),
        }
    }

    fn mul(&self, a: &QuotElem, b: &QuotElem) -> QuotElem {
        let d = self.degree();
        if d == 0 {
            return self.zero();
        }
        let mut prod = vec![self.series.zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                self.series.mul_add_assign(&mut prod[i + j], x, y);
            }
        }
        self.reduce(prod)
    }

    fn is_zero(&self, a: &QuotElem) -> bool {
        a.coeffs.iter().all(Series::is_zero)
    }
}
