use crate::error::{Error, Result};
use crate::scalar::Fp;
use crate::ucalc::series::Series;
use crate::ucalc::unipoly::UniPoly;

/// Rational reconstruction of a truncated series.
///
/// Returns `(num, den)` with `den(0) = 1`, `deg num <= num_bound`,
/// `deg den <= den_bound` and `num = den * series mod t^k`, where `k` is the
/// series precision and must be at least `num_bound + den_bound + 1`. The
/// result is checked against that congruence before it is returned.
pub fn pade(series: &Series, num_bound: usize, den_bound: usize, fp: Fp) -> Result<(UniPoly, UniPoly)> {
    let k = series.prec();
    if k < num_bound + den_bound + 1 {
        return Err(Error::ReconstructionFailed(format!(
            "precision {k} below {} needed for bounds ({num_bound}, {den_bound})",
            num_bound + den_bound + 1
        )));
    }
    let mut tk = vec![fp.zero(); k + 1];
    tk[k] = fp.one();
    let (mut r0, mut r1) = (UniPoly::from_coeffs(tk), series.to_poly());
    let (mut s0, mut s1) = (UniPoly::zero(), UniPoly::one());
    while r1.degree().is_some_and(|d| d > num_bound) {
        let (q, r) = r0.div_rem(&r1, fp);
        let s = s0.sub(&q.mul(&s1, fp), fp);
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
    }
    let (num, den) = (r1, s1);
    if den.degree().is_none_or(|d| d > den_bound) {
        return Err(Error::ReconstructionFailed(format!(
            "denominator degree {:?} exceeds {den_bound}",
            den.degree()
        )));
    }
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::ReconstructionFailed(
            "denominator vanishes at t = 0".into(),
        ));
    }
    let inv = fp.inv(d0)?;
    let (num, den) = (num.scale(inv, fp), den.scale(inv, fp));
    let check = Series::from_poly(&den.mul(&series.to_poly(), fp), k);
    if check != Series::from_poly(&num, k) {
        return Err(Error::ReconstructionFailed("congruence check failed".into()));
    }
    Ok((num, den))
}
