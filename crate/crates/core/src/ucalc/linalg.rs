//! Division-free linear algebra over commutative rings, plus the two
//! eliminations that are safe to pivot: over a field, and over a local ring
//! of power series with unit pivots.

use crate::error::{Error, Result};
use crate::scalar::{Fp, Scalar};
use crate::ucalc::quot::{QuotElem, QuotRing};
use crate::ucalc::ring::Ring;
use crate::ucalc::series::{Series, SeriesRing};

pub type Matrix<E> = Vec<Vec<E>>;

fn check_square<E>(m: &Matrix<E>) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::ShapeError("matrix is not square".into()));
    }
    Ok(n)
}

/// Characteristic polynomial `det(y I - M)`, lowest degree first, monic.
///
/// Berkowitz's algorithm: no divisions, so it is valid over any commutative
/// ring, zero divisors included.
pub fn charpoly<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<Vec<R::Elem>> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(vec![ring.one()]);
    }
    // descending coefficients of the leading principal minor's charpoly
    let mut poly = vec![ring.one(), ring.neg(&m[0][0])];
    for k in 1..n {
        // partition the leading (k+1)x(k+1) block as [[A, C], [R, a]]
        let a = &m[k][k];
        let row: Vec<R::Elem> = (0..k).map(|j| m[k][j].clone()).collect();
        let mut col: Vec<R::Elem> = (0..k).map(|i| m[i][k].clone()).collect();
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(ring.one());
        toeplitz.push(ring.neg(a));
        for _ in 0..k {
            let dot = row
                .iter()
                .zip(&col)
                .fold(ring.zero(), |acc, (r, c)| ring.add(&acc, &ring.mul(r, c)));
            toeplitz.push(ring.neg(&dot));
            col = (0..k)
                .map(|i| {
                    (0..k).fold(ring.zero(), |acc, j| {
                        ring.add(&acc, &ring.mul(&m[i][j], &col[j]))
                    })
                })
                .collect();
        }
        let mut next = Vec::with_capacity(k + 2);
        for i in 0..k + 2 {
            let mut s = ring.zero();
            for (j, p) in poly.iter().enumerate().take(i.min(k) + 1) {
                s = ring.add(&s, &ring.mul(&toeplitz[i - j], p));
            }
            next.push(s);
        }
        poly = next;
    }
    poly.reverse();
    Ok(poly)
}

pub fn det<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<R::Elem> {
    let n = check_square(m)?;
    let cp = charpoly(ring, m)?;
    Ok(if n % 2 == 0 {
        cp[0].clone()
    } else {
        ring.neg(&cp[0])
    })
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(ring.zero(), |acc, k| {
                        ring.add(&acc, &ring.mul(&row[k], &b[k][j]))
                    })
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<R: Ring>(ring: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)))
        })
        .collect()
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { ring.one() } else { ring.zero() })
                .collect()
        })
        .collect()
}

/// `(adj(M), det(M))` from Cayley-Hamilton, division-free.
pub fn adjugate<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<(Matrix<R::Elem>, R::Elem)> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok((Vec::new(), ring.one()));
    }
    let cp = charpoly(ring, m)?; // cp[n] = 1
    // adj = (-1)^(n-1) (M^(n-1) + c_{n-1} M^(n-2) + ... + c_1 I) with cp = sum c_i y^i
    let mut acc = identity(ring, n);
    for i in (1..n).rev() {
        // Horner: acc <- acc * M + c_i I
        let mut next = mat_mul(ring, &acc, m);
        for (d, row) in next.iter_mut().enumerate() {
            row[d] = ring.add(&row[d], &cp[i]);
        }
        acc = next;
    }
    if (n - 1) % 2 == 1 {
        acc = acc
            .iter()
            .map(|row| row.iter().map(|x| ring.neg(x)).collect())
            .collect();
    }
    let det = if n % 2 == 0 {
        cp[0].clone()
    } else {
        ring.neg(&cp[0])
    };
    Ok((acc, det))
}

/// Solve `J x = rhs` over `(F_p[y]/(w0)) (x) F_p[t]/(t^k)`.
///
/// The determinant must be a unit, i.e. coprime to `w0` at `t = 0`;
/// otherwise [`Error::SingularJacobian`].
pub fn ring_solve(ring: &QuotRing, j: &Matrix<QuotElem>, rhs: &[QuotElem]) -> Result<Vec<QuotElem>> {
    let n = check_square(j)?;
    if rhs.len() != n {
        return Err(Error::ShapeError("rhs length".into()));
    }
    let (adj, d) = adjugate(ring, j)?;
    if !ring.is_unit(&d) {
        return Err(Error::SingularJacobian);
    }
    let dinv = ring.inv(&d)?;
    Ok(mat_vec(ring, &adj, rhs)
        .iter()
        .map(|x| ring.mul(x, &dinv))
        .collect())
}

/// Gaussian elimination over `F_p[t]/(t^k)`, pivoting on units only.
pub fn solve_local(ring: &SeriesRing, m: &Matrix<Series>, rhs: &Matrix<Series>) -> Result<Matrix<Series>> {
    let n = check_square(m)?;
    let mut a = m.clone();
    let mut b = rhs.clone();
    for c in 0..n {
        let piv = (c..n)
            .find(|&r| ring.is_unit(&a[r][c]))
            .ok_or(Error::SingularJacobian)?;
        a.swap(c, piv);
        b.swap(c, piv);
        let inv = ring.inv(&a[c][c])?;
        for x in a[c].iter_mut() {
            *x = ring.mul(x, &inv);
        }
        for x in b[c].iter_mut() {
            *x = ring.mul(x, &inv);
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for k in 0..n {
                let d = ring.mul(&f, &a[c][k]);
                a[r][k] = ring.sub(&a[r][k], &d);
            }
            for k in 0..b[r].len() {
                let d = ring.mul(&f, &b[c][k]);
                b[r][k] = ring.sub(&b[r][k], &d);
            }
        }
    }
    Ok(b)
}

/// Solve `A X = B` over `F_p`; `None` if `A` is singular.
pub fn solve_field(fp: Fp, a: &Matrix<Scalar>, b: &Matrix<Scalar>) -> Option<Matrix<Scalar>> {
    let n = a.len();
    let mut a = a.clone();
    let mut b = b.clone();
    for c in 0..n {
        let piv = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, piv);
        b.swap(c, piv);
        let inv = fp.inv(a[c][c]).ok()?;
        for x in a[c].iter_mut() {
            *x = fp.mul(*x, inv);
        }
        for x in b[c].iter_mut() {
            *x = fp.mul(*x, inv);
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c];
            for k in 0..n {
                a[r][k] = fp.sub(a[r][k], fp.mul(f, a[c][k]));
            }
            for k in 0..b[r].len() {
                b[r][k] = fp.sub(b[r][k], fp.mul(f, b[c][k]));
            }
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Sampler;
    use crate::ucalc::unipoly::UniPoly;

    fn f101() -> Fp {
        Fp::new(101).unwrap()
    }

    fn random_matrix(fp: Fp, s: &mut Sampler, n: usize) -> Matrix<Scalar> {
        (0..n)
            .map(|_| (0..n).map(|_| s.scalar(fp, false)).collect())
            .collect()
    }

    /// Cofactor expansion over polynomials in y, the oracle for charpoly.
    fn cofactor_det(fp: Fp, m: &[Vec<UniPoly>]) -> UniPoly {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = UniPoly::zero();
        for j in 0..n {
            let minor: Vec<Vec<UniPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = m[0][j].mul(&cofactor_det(fp, &minor), fp);
            acc = if j % 2 == 0 {
                acc.add(&term, fp)
            } else {
                acc.sub(&term, fp)
            };
        }
        acc
    }

    #[test]
    fn charpoly_examples() {
        let fp = f101();
        let n = vec![vec![fp.zero(), fp.one()], vec![fp.zero(), fp.zero()]];
        assert_eq!(
            charpoly(&fp, &n).unwrap(),
            vec![fp.zero(), fp.zero(), fp.one()]
        );
        let (a, b) = (fp.elem(3), fp.elem(7));
        let d = vec![vec![a, fp.zero()], vec![fp.zero(), b]];
        let expected = UniPoly::from_roots(fp, &[a, b]);
        assert_eq!(
            UniPoly::from_coeffs(charpoly(&fp, &d).unwrap()),
            expected
        );
    }

    #[test]
    fn charpoly_matches_cofactor_oracle() {
        let fp = f101();
        let mut s = Sampler::new(31);
        for _ in 0..20 {
            let m = random_matrix(fp, &mut s, 3);
            let y_minus: Vec<Vec<UniPoly>> = (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| {
                            let c = fp.neg(m[i][j]);
                            if i == j {
                                UniPoly::from_coeffs(vec![c, fp.one()])
                            } else {
                                UniPoly::constant(c)
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(
                UniPoly::from_coeffs(charpoly(&fp, &m).unwrap()),
                cofactor_det(fp, &y_minus)
            );
        }
    }

    #[test]
    fn cayley_hamilton() {
        let fp = f101();
        let mut s = Sampler::new(32);
        for n in 1..6 {
            let m = random_matrix(fp, &mut s, n);
            let cp = charpoly(&fp, &m).unwrap();
            let mut acc: Matrix<Scalar> = vec![vec![fp.zero(); n]; n];
            for c in cp.iter().rev() {
                acc = mat_mul(&fp, &acc, &m);
                for (i, row) in acc.iter_mut().enumerate() {
                    row[i] = fp.add(row[i], *c);
                }
            }
            assert!(acc.iter().flatten().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn adjugate_times_matrix_is_det() {
        let fp = f101();
        let mut s = Sampler::new(33);
        for n in 1..6 {
            let m = random_matrix(fp, &mut s, n);
            let (adj, d) = adjugate(&fp, &m).unwrap();
            let prod = mat_mul(&fp, &m, &adj);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(prod[i][j], if i == j { d } else { fp.zero() });
                }
            }
        }
    }

    fn random_quot(ring: &QuotRing, s: &mut Sampler) -> QuotElem {
        let fp = ring.fp();
        QuotElem {
            coeffs: (0..ring.degree())
                .map(|_| {
                    Series::from_coeffs(
                        (0..ring.prec()).map(|_| s.scalar(fp, false)).collect(),
                        ring.prec(),
                    )
                })
                .collect(),
        }
    }

    #[test]
    fn ring_solve_examples() {
        let fp = f101();
        let w0 = UniPoly::from_i64(fp, &[1, 0, 1]);
        let ring = QuotRing::with_constant_modulus(fp, &w0, 4).unwrap();
        let mut s = Sampler::new(34);
        let rhs = vec![random_quot(&ring, &mut s), random_quot(&ring, &mut s)];
        let id = identity(&ring, 2);
        assert_eq!(ring_solve(&ring, &id, &rhs).unwrap(), rhs);

        let mut u = random_quot(&ring, &mut s);
        while !ring.is_unit(&u) {
            u = random_quot(&ring, &mut s);
        }
        let x = ring_solve(&ring, &vec![vec![u.clone()]], &rhs[..1]).unwrap();
        assert_eq!(x[0], ring.mul(&ring.inv(&u).unwrap(), &rhs[0]));

        let mut checked = 0;
        while checked < 10 {
            let j: Matrix<QuotElem> = (0..2)
                .map(|_| (0..2).map(|_| random_quot(&ring, &mut s)).collect())
                .collect();
            match ring_solve(&ring, &j, &rhs) {
                Ok(x) => {
                    assert_eq!(mat_vec(&ring, &j, &x), rhs);
                    checked += 1;
                }
                Err(e) => assert_eq!(e, Error::SingularJacobian),
            }
        }
        let singular = vec![vec![ring.zero(), ring.zero()], vec![ring.zero(), ring.one()]];
        assert_eq!(
            ring_solve(&ring, &singular, &rhs),
            Err(Error::SingularJacobian)
        );
    }

    #[test]
    fn local_solve_multiplies_back() {
        let fp = f101();
        let ring = SeriesRing::new(fp, 5);
        let mut s = Sampler::new(35);
        let rand_series = |s: &mut Sampler| {
            Series::from_coeffs((0..5).map(|_| s.scalar(fp, false)).collect(), 5)
        };
        for _ in 0..10 {
            let m: Matrix<Series> = (0..3)
                .map(|_| (0..3).map(|_| rand_series(&mut s)).collect())
                .collect();
            let b: Matrix<Series> = (0..3).map(|_| vec![rand_series(&mut s)]).collect();
            if let Ok(x) = solve_local(&ring, &m, &b) {
                assert_eq!(mat_mul(&ring, &m, &x), b);
            }
        }
    }
}
