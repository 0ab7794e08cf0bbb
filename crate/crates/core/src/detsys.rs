//! Determinantal systems `rank F(x) < p, g(x) = 0` and their root-count bounds.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{minkowski_sum, mixed_volume, Polytope};
use crate::mpoly::{column_support, Monomial, SparsePoly, Support};
use crate::scalar::Fp;

pub const MAX_COUNT_VARS: usize = 8;
pub const MAX_COUNT_DEGREE: u64 = 10_000;

/// `p x q` polynomial matrix `F` and side equations `g` in `n = q - p + s + 1`
/// unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetSystem {
    pub fp: Fp,
    pub p: usize,
    pub q: usize,
    pub s: usize,
    pub n: usize,
    pub f: Vec<Vec<SparsePoly>>,
    pub g: Vec<SparsePoly>,
}

impl DetSystem {
    pub fn new(fp: Fp, f: Vec<Vec<SparsePoly>>, g: Vec<SparsePoly>) -> Result<Self> {
        let p = f.len();
        let q = f.first().map_or(0, Vec::len);
        if p == 0 || q == 0 || f.iter().any(|row| row.len() != q) {
            return Err(Error::ShapeError("F must be a nonempty rectangular matrix".into()));
        }
        if p > q {
            return Err(Error::ShapeError(format!("p = {p} exceeds q = {q}")));
        }
        let s = g.len();
        let n = f[0][0].nvars();
        if n != q - p + s + 1 {
            return Err(Error::DimensionConstraint(format!(
                "{n} variables but q - p + s + 1 = {}",
                q - p + s + 1
            )));
        }
        for poly in f.iter().flatten().chain(&g) {
            if poly.nvars() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    got: poly.nvars(),
                });
            }
        }
        Ok(DetSystem { fp, p, q, s, n, f, g })
    }

    pub fn column(&self, j: usize) -> Vec<SparsePoly> {
        self.f.iter().map(|row| row[j].clone()).collect()
    }

    /// Largest total degree among the entries of `F` and `g`.
    pub fn max_degree(&self) -> u64 {
        self.f
            .iter()
            .flatten()
            .chain(&self.g)
            .filter_map(SparsePoly::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// `A_i`: support of `g_i` with the origin.
    pub fn a_supports(&self) -> Vec<Support> {
        self.g.iter().map(|g| g.support(true)).collect()
    }

    /// `B_j`: union of the supports in column `j` with the origin.
    pub fn b_supports(&self) -> Vec<Support> {
        (0..self.q)
            .map(|j| column_support(&self.column(j)).expect("nonempty column"))
            .collect()
    }

    /// `g` followed by the `p`-minors of `F`.
    pub fn equations(&self) -> Result<Vec<SparsePoly>> {
        let mut eqs = self.g.clone();
        eqs.extend(minors(&self.f, self.fp)?);
        Ok(eqs)
    }

    /// The `(n - s)`-subsets of columns, each a square subsystem of the start.
    pub fn column_subsets(&self) -> Vec<Vec<usize>> {
        subsets(self.q, self.n - self.s)
    }
}

/// `k`-subsets of `0..q` in lexicographic order.
pub fn subsets(q: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, q: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..q {
            cur.push(i);
            go(i + 1, q, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= q {
        go(0, q, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All maximal minors, by column subset in lexicographic order.
pub fn minors(m: &[Vec<SparsePoly>], fp: Fp) -> Result<Vec<SparsePoly>> {
    let p = m.len();
    let q = m.first().map_or(0, Vec::len);
    if p == 0 || p > q || m.iter().any(|r| r.len() != q) {
        return Err(Error::ShapeError(format!("cannot take {p}-minors of this matrix")));
    }
    subsets(q, p)
        .iter()
        .map(|cols| laplace(m, 0, cols, fp))
        .collect()
}

/// Determinant of rows `row..` restricted to `cols`, expanding along `row`.
fn laplace(m: &[Vec<SparsePoly>], row: usize, cols: &[usize], fp: Fp) -> Result<SparsePoly> {
    let nvars = m[0][0].nvars();
    if cols.len() == 1 {
        return Ok(m[row][cols[0]].clone());
    }
    let mut acc = SparsePoly::zero(nvars);
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = m[row][c].mul(&laplace(m, row + 1, &rest, fp)?, fp)?;
        acc = if k % 2 == 0 {
            acc.add(&term, fp)?
        } else {
            acc.sub(&term, fp)?
        };
    }
    Ok(acc)
}

/// Root-count bounds of a determinantal system. Column indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub a_supports: Vec<Vec<Vec<u32>>>,
    pub b_supports: Vec<Vec<Vec<u32>>>,
    pub a_card: Vec<usize>,
    pub b_card: Vec<usize>,
    pub gamma: usize,
    pub subsets: Vec<SubsetBound>,
    pub chi: u64,
    pub rho: u64,
    pub dense: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetBound {
    pub columns: Vec<usize>,
    pub chi: u64,
    pub rho: u64,
}

fn support_list(s: &Support) -> Vec<Vec<u32>> {
    s.iter().map(|m| m.exps().to_vec()).collect()
}

/// Mixed volume of each square subsystem `(C_1..C_s, D_j..)`.
fn subset_mixed_volumes(sys: &DetSystem, a: &[Polytope], b: &[Polytope]) -> Result<Vec<u64>> {
    sys.column_subsets()
        .iter()
        .map(|cols| {
            let mut ps: Vec<Polytope> = a.to_vec();
            ps.extend(cols.iter().map(|&j| b[j].clone()));
            mixed_volume(&ps)
        })
        .collect()
}

fn polytopes(supports: &[Support]) -> Result<Vec<Polytope>> {
    supports.iter().map(Polytope::from_support).collect()
}

/// Per-subset mixed volumes and their sum `chi`.
pub fn chi_bound(sys: &DetSystem) -> Result<(Vec<u64>, u64)> {
    let per = subset_mixed_volumes(sys, &polytopes(&sys.a_supports())?, &polytopes(&sys.b_supports())?)?;
    let total = per.iter().sum();
    Ok((per, total))
}

/// Same count with every support enlarged by the standard simplex.
pub fn rho_bound(sys: &DetSystem) -> Result<(Vec<u64>, u64)> {
    let n = sys.n;
    let mut delta = vec![vec![0i64; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        delta.push(e);
    }
    let delta = crate::geom::convex_hull(n, &delta)?;
    let grow = |ps: Vec<Polytope>| -> Result<Vec<Polytope>> {
        ps.iter().map(|p| minkowski_sum(p, &delta)).collect()
    };
    let a = grow(polytopes(&sys.a_supports())?)?;
    let b = grow(polytopes(&sys.b_supports())?)?;
    let per = subset_mixed_volumes(sys, &a, &b)?;
    let total = per.iter().sum();
    Ok((per, total))
}

/// Elementary symmetric polynomial `e_k` of `xs`.
pub fn elementary_symmetric(xs: &[u128], k: usize) -> u128 {
    let mut e = vec![0u128; k + 1];
    e[0] = 1;
    for &x in xs {
        for j in (1..=k).rev() {
            e[j] += e[j - 1] * x;
        }
    }
    e[k]
}

/// Total-degree bound: product of `deg g_i` times `e_{n-s}` of the column
/// degrees.
pub fn dense_bound(sys: &DetSystem) -> u128 {
    let gdeg: u128 = sys
        .g
        .iter()
        .map(|g| g.total_degree().unwrap_or(0) as u128)
        .product();
    let cols: Vec<u128> = (0..sys.q)
        .map(|j| {
            sys.column(j)
                .iter()
                .filter_map(SparsePoly::total_degree)
                .max()
                .unwrap_or(0) as u128
        })
        .collect();
    gdeg * elementary_symmetric(&cols, sys.n - sys.s)
}

pub fn bounds_report(sys: &DetSystem) -> Result<BoundsReport> {
    let a = sys.a_supports();
    let b = sys.b_supports();
    let (chis, chi) = chi_bound(sys)?;
    let (rhos, rho) = rho_bound(sys)?;
    let a_card: Vec<usize> = a.iter().map(|s| s.len()).collect();
    let b_card: Vec<usize> = b.iter().map(|s| s.len()).collect();
    let gamma = a_card.iter().sum::<usize>() + sys.p * b_card.iter().sum::<usize>();
    let subsets = sys
        .column_subsets()
        .into_iter()
        .zip(chis.into_iter().zip(rhos))
        .map(|(cols, (chi, rho))| SubsetBound {
            columns: cols.iter().map(|j| j + 1).collect(),
            chi,
            rho,
        })
        .collect();
    Ok(BoundsReport {
        a_supports: a.iter().map(support_list).collect(),
        b_supports: b.iter().map(support_list).collect(),
        a_card,
        b_card,
        gamma,
        subsets,
        chi,
        rho,
        dense: dense_bound(sys),
    })
}

/// Weighted-degree bounds. Weights are reported sorted; `permutation[k]` is
/// the original index of the `k`-th smallest weight. Column indices are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedBounds {
    pub weights: Vec<u64>,
    pub permutation: Vec<usize>,
    pub gamma: Vec<u64>,
    pub delta: Vec<u64>,
    pub subsets: Vec<WeightedSubset>,
    pub c: u128,
    pub kappa: u128,
    pub e: u128,
    pub a_count: Vec<u64>,
    pub b_count: Vec<u64>,
}

/// One square start subsystem: `c` is its weighted Bézout number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedSubset {
    pub columns: Vec<usize>,
    pub c: u128,
    pub kappa: u128,
}

/// `d_1 ... d_n / (w_1 ... w_n)`.
pub fn weighted_bezout(degrees: &[u64], weights: &[u64]) -> Result<Ratio<u128>> {
    if degrees.len() != weights.len() {
        return Err(Error::ArityMismatch {
            expected: weights.len(),
            got: degrees.len(),
        });
    }
    if weights.contains(&0) {
        return Err(Error::ShapeError("weights must be positive".into()));
    }
    let num: u128 = degrees.iter().map(|&d| d as u128).product();
    let den: u128 = weights.iter().map(|&w| w as u128).product();
    Ok(Ratio::new(num, den))
}

/// `max_k d_1..d_k w_{k+1}..w_n` for degrees and weights both sorted
/// non-decreasing.
pub fn kappa(degrees_sorted: &[u64], weights_sorted: &[u64]) -> u128 {
    let n = degrees_sorted.len();
    (1..=n)
        .map(|k| {
            let d: u128 = degrees_sorted[..k].iter().map(|&x| x as u128).product();
            let w: u128 = weights_sorted[k..].iter().map(|&x| x as u128).product();
            d * w
        })
        .max()
        .unwrap_or(1)
}

fn exact(num: u128, den: u128, what: &str) -> Result<u128> {
    if num % den != 0 {
        return Err(Error::NonIntegralBound(format!("{what} = {num}/{den}")));
    }
    Ok(num / den)
}

pub fn weighted_bounds(sys: &DetSystem, weights: &[u64]) -> Result<WeightedBounds> {
    let n = sys.n;
    if weights.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: weights.len(),
        });
    }
    if weights.contains(&0) {
        return Err(Error::ShapeError("weights must be positive".into()));
    }
    let mut permutation: Vec<usize> = (0..n).collect();
    permutation.sort_by_key(|&i| (weights[i], i));
    let sorted: Vec<u64> = permutation.iter().map(|&i| weights[i]).collect();
    let gamma = sys
        .g
        .iter()
        .map(|g| g.weighted_degree(weights))
        .collect::<Result<Vec<_>>>()?;
    let delta = (0..sys.q)
        .map(|j| {
            sys.column(j)
                .iter()
                .filter(|f| !f.is_zero())
                .map(|f| f.weighted_degree(weights))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .max()
                .ok_or_else(|| Error::ShapeError(format!("column {} of F is zero", j + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let wprod: u128 = sorted.iter().map(|&w| w as u128).product();
    let mut subsets_out = Vec::new();
    for cols in sys.column_subsets() {
        let mut degs: Vec<u64> = gamma.clone();
        degs.extend(cols.iter().map(|&j| delta[j]));
        let num: u128 = degs.iter().map(|&d| d as u128).product();
        let c = exact(num, wprod, &format!("c for columns {:?}", cols))?;
        degs.sort_unstable();
        subsets_out.push(WeightedSubset {
            columns: cols.iter().map(|j| j + 1).collect(),
            c,
            kappa: kappa(&degs, &sorted),
        });
    }
    let c = subsets_out.iter().map(|s| s.c).sum();
    let kappa_total = subsets_out.iter().map(|s| s.kappa).sum();
    let shifted_g: u128 = gamma.iter().map(|&g| g as u128 + 1).product();
    let shifted_d: Vec<u128> = delta.iter().map(|&d| d as u128 + 1).collect();
    let e_den: u128 = sorted[..n - 1].iter().map(|&w| w as u128).product();
    let e = exact(
        shifted_g * elementary_symmetric(&shifted_d, n - sys.s),
        e_den,
        "e",
    )?;
    let a_count = gamma
        .iter()
        .map(|&d| count_weighted_monomials(n, weights, d))
        .collect::<Result<Vec<_>>>()?;
    let b_count = delta
        .iter()
        .map(|&d| count_weighted_monomials(n, weights, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightedBounds {
        weights: sorted,
        permutation,
        gamma,
        delta,
        subsets: subsets_out,
        c,
        kappa: kappa_total,
        e,
        a_count,
        b_count,
    })
}

/// `#{a in N^n : sum w_i a_i <= d}`.
pub fn count_weighted_monomials(n: usize, weights: &[u64], d: u64) -> Result<u64> {
    if weights.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: weights.len(),
        });
    }
    if n > MAX_COUNT_VARS || d > MAX_COUNT_DEGREE {
        return Err(Error::ResourceBudgetExceeded(format!(
            "monomial count needs n <= {MAX_COUNT_VARS} and d <= {MAX_COUNT_DEGREE}"
        )));
    }
    if weights.contains(&0) {
        return Err(Error::ShapeError("weights must be positive".into()));
    }
    // ways[k]: exponent vectors of weighted degree exactly k
    let d = d as usize;
    let mut ways = vec![0u64; d + 1];
    ways[0] = 1;
    for &w in weights {
        let w = w as usize;
        for k in w..=d {
            ways[k] += ways[k - w];
        }
    }
    Ok(ways.iter().sum())
}

/// Monomials `x_i` and `1`, i.e. the vertices of the standard simplex.
pub fn simplex_support(n: usize) -> Support {
    let mut s: Support = (0..n).map(|i| Monomial::var(n, i)).collect();
    s.insert(Monomial::one(n));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gbsolve::{groebner, quotient};
    use crate::scalar::Sampler;

    pub(crate) fn worked_example() -> DetSystem {
        let fp = Fp::new(65521).unwrap();
        let p = |s: &str| SparsePoly::parse(s, 3, fp).unwrap();
        let f = vec![
            vec![
                p("9*x1^2+65471*x1+59*x2+42308*x3+65504"),
                p("86*x1^2+65460*x1+65414*x2+12381*x3+44"),
                p("65477*x1+59898*x3+76"),
            ],
            vec![
                p("65501*x1^2+51*x1+65466*x2+57496*x3+35"),
                p("16*x1^2+99*x1+65503*x2+17950*x3+31"),
                p("65454*x1+41178*x3+65453"),
            ],
        ];
        let g = vec![p("99*x1^3+92*x1^2-228*x1*x2+67*x1-140*x2+98*x3+25")];
        DetSystem::new(fp, f, g).unwrap()
    }

    #[test]
    fn shape_checks() {
        let sys = worked_example();
        assert_eq!((sys.p, sys.q, sys.s, sys.n), (2, 3, 1, 3));
        assert_eq!(sys.column_subsets(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let mut g2 = sys.g.clone();
        g2.push(sys.g[0].clone());
        assert!(matches!(
            DetSystem::new(sys.fp, sys.f.clone(), g2),
            Err(Error::DimensionConstraint(_))
        ));
    }

    #[test]
    fn start_matrix_minors() {
        let fp = Fp::new(65521).unwrap();
        let p = |s: &str| SparsePoly::parse(s, 3, fp).unwrap();
        let m = [
            p("-78*x1^2-4*x1+5*x2-91*x3-44"),
            p("63*x1^2+10*x1-61*x2-26*x3-20"),
            p("88*x1+95*x3+9"),
        ];
        let c = [[-62, 26, 10], [-83, -3, -44]];
        let mat: Vec<Vec<SparsePoly>> = c
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&m)
                    .map(|(&k, mj)| mj.scale(fp.from_i64(k), fp))
                    .collect()
            })
            .collect();
        let got = minors(&mat, fp).unwrap();
        let prod = |a: usize, b: usize, k: i64| m[a].mul(&m[b], fp).unwrap().scale(fp.from_i64(k), fp);
        assert_eq!(got, vec![prod(0, 1, 2344), prod(0, 2, 3558), prod(1, 2, -1114)]);
    }

    #[test]
    fn zero_column_kills_its_minors() {
        let fp = Fp::new(101).unwrap();
        let p = |s: &str| SparsePoly::parse(s, 2, fp).unwrap();
        let z = SparsePoly::zero(2);
        let mat = vec![vec![p("x1"), z.clone(), p("x2+1")], vec![p("x2"), z, p("x1*x2")]];
        let got = minors(&mat, fp).unwrap();
        assert!(got[0].is_zero() && got[2].is_zero());
        assert!(!got[1].is_zero());
    }

    #[test]
    fn worked_example_bounds() {
        let sys = worked_example();
        let (per, chi) = chi_bound(&sys).unwrap();
        assert_eq!(per, vec![3, 3, 3]);
        assert_eq!(chi, 9);
        assert_eq!(dense_bound(&sys), 24);
        let r = bounds_report(&sys).unwrap();
        assert_eq!(r.a_card, vec![7]);
        assert_eq!(r.b_card, vec![5, 5, 3]);
        assert_eq!(r.gamma, 7 + 2 * 13);
    }

    /// Generic square system on the given supports; its quotient dimension
    /// is the affine root count, which equals the mixed volume.
    fn algebraic_count(supports: &[Support], n: usize, seed: u64) -> u64 {
        let fp = Fp::new(65521).unwrap();
        let mut s = Sampler::new(seed);
        let polys: Vec<SparsePoly> = supports
            .iter()
            .map(|sup| {
                SparsePoly::from_terms(
                    fp,
                    n,
                    sup.iter().map(|m| (m.exps().to_vec(), s.scalar(fp, true))),
                )
                .unwrap()
            })
            .collect();
        quotient(&groebner(&polys, fp).unwrap()).unwrap().dimension() as u64
    }

    fn enlarge(s: &Support, n: usize) -> Support {
        let mut out = Support::new();
        for a in s {
            for d in &simplex_support(n) {
                out.insert(a.checked_mul(d).unwrap());
            }
        }
        out
    }

    #[test]
    fn worked_example_rho_against_algebraic_oracle() {
        let sys = worked_example();
        let (per, rho) = rho_bound(&sys).unwrap();
        let a: Vec<Support> = sys.a_supports().iter().map(|s| enlarge(s, 3)).collect();
        let b: Vec<Support> = sys.b_supports().iter().map(|s| enlarge(s, 3)).collect();
        for (k, cols) in sys.column_subsets().iter().enumerate() {
            let mut sup = a.clone();
            sup.extend(cols.iter().map(|&j| b[j].clone()));
            assert_eq!(per[k], algebraic_count(&sup, 3, k as u64), "subset {cols:?}");
        }
        assert_eq!(per, vec![19, 18, 18]);
        assert_eq!(rho, 55);
    }

    #[test]
    fn univariate_bounds() {
        // n = 1, s = 0, p = q = 1: the single entry of F
        let fp = Fp::new(101).unwrap();
        let f = SparsePoly::parse("x1^4+3*x1+1", 1, fp).unwrap();
        let sys = DetSystem::new(fp, vec![vec![f]], vec![]).unwrap();
        assert_eq!(chi_bound(&sys).unwrap().1, 4);
        assert_eq!(rho_bound(&sys).unwrap().1, 5);
    }

    #[test]
    fn unit_simplex_system() {
        let fp = Fp::new(101).unwrap();
        let p = |s: &str| SparsePoly::parse(s, 2, fp).unwrap();
        // p = q = 2, s = 1, n = 2: two single-column subsets
        let sys = DetSystem::new(
            fp,
            vec![vec![p("x1+1"), p("x2+2")], vec![p("x1-x2"), p("3*x2+1")]],
            vec![p("x1+x2+5")],
        )
        .unwrap();
        assert_eq!(sys.column_subsets().len(), 2);
        assert_eq!(chi_bound(&sys).unwrap(), (vec![1, 1], 2));
        assert_eq!(rho_bound(&sys).unwrap(), (vec![4, 4], 8));
    }

    #[test]
    fn chi_invariant_under_column_permutation() {
        let sys = worked_example();
        let perm = [2, 0, 1];
        let f: Vec<Vec<SparsePoly>> = sys
            .f
            .iter()
            .map(|row| perm.iter().map(|&j| row[j].clone()).collect())
            .collect();
        let permuted = DetSystem::new(sys.fp, f, sys.g.clone()).unwrap();
        assert_eq!(chi_bound(&permuted).unwrap().1, chi_bound(&sys).unwrap().1);
        assert_eq!(rho_bound(&permuted).unwrap().1, rho_bound(&sys).unwrap().1);
    }

    #[test]
    fn weighted_with_unit_weights() {
        let sys = worked_example();
        let wb = weighted_bounds(&sys, &[1, 1, 1]).unwrap();
        assert_eq!(wb.gamma, vec![3]);
        assert_eq!(wb.delta, vec![2, 2, 1]);
        assert_eq!(wb.c, 24);
        assert_eq!(wb.c, dense_bound(&sys));
        assert_eq!(wb.e, 84);
        // all weights 1: kappa of a subset is the full degree product
        let kappas: Vec<u128> = wb.subsets.iter().map(|s| s.kappa).collect();
        assert_eq!(kappas, vec![12, 6, 6]);
        let cs: Vec<u128> = wb.subsets.iter().map(|s| s.c).collect();
        assert_eq!(cs, kappas);
        assert_eq!(wb.a_count, vec![count_weighted_monomials(3, &[1, 1, 1], 3).unwrap()]);
    }

    #[test]
    fn kappa_and_bezout_examples() {
        assert_eq!(kappa(&[2, 3], &[1, 2]), 6);
        assert_eq!(weighted_bezout(&[2, 3], &[1, 2]).unwrap(), Ratio::new(3, 1));
        assert_eq!(weighted_bezout(&[3, 3], &[2, 3]).unwrap(), Ratio::new(3, 2));
    }

    #[test]
    fn non_integral_bounds_are_reported() {
        let sys = worked_example();
        // gamma = 9, deltas (6, 6, 3): 9*6*3/12 is not an integer
        assert!(matches!(
            weighted_bounds(&sys, &[3, 2, 2]),
            Err(Error::NonIntegralBound(_))
        ));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(count_weighted_monomials(3, &[5, 3, 2], 10).unwrap(), 20);
        assert_eq!(count_weighted_monomials(3, &[1, 1, 1], 10).unwrap(), 286);
        assert_eq!(count_weighted_monomials(3, &[5, 3, 2], 0).unwrap(), 1);
        for w in 1..6u64 {
            for d in 0..30u64 {
                assert_eq!(count_weighted_monomials(1, &[w], d).unwrap(), d / w + 1);
            }
        }
        let mut prev = 0;
        for d in 0..40 {
            let c = count_weighted_monomials(3, &[5, 3, 2], d).unwrap();
            assert!(c >= prev);
            prev = c;
        }
        assert!(matches!(
            count_weighted_monomials(9, &[1; 9], 3),
            Err(Error::ResourceBudgetExceeded(_))
        ));
    }

    #[test]
    fn monomial_count_matches_enumeration() {
        let w = [5u64, 3, 2];
        for d in 0..25u64 {
            let mut n = 0;
            for a in 0..=d {
                for b in 0..=d {
                    for c in 0..=d {
                        if w[0] * a + w[1] * b + w[2] * c <= d {
                            n += 1;
                        }
                    }
                }
            }
            assert_eq!(count_weighted_monomials(3, &w, d).unwrap(), n);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn binom(n: u64, k: u64) -> u64 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn count_matches_enumeration(w in prop::collection::vec(1u64..6, 3), d in 0u64..20) {
                let mut n = 0;
                for a in 0..=d {
                    for b in 0..=d {
                        for c in 0..=d {
                            if w[0] * a + w[1] * b + w[2] * c <= d {
                                n += 1;
                            }
                        }
                    }
                }
                prop_assert_eq!(count_weighted_monomials(3, &w, d).unwrap(), n);
            }

            #[test]
            fn unit_weights_give_binomials(n in 1usize..6, d in 0u64..30) {
                let c = count_weighted_monomials(n, &vec![1; n], d).unwrap();
                prop_assert_eq!(c, binom(d + n as u64, n as u64));
            }

            #[test]
            fn elementary_symmetric_sums_subsets(xs in prop::collection::vec(0u128..20, 0..7), k in 0usize..7) {
                let sum: u128 = subsets(xs.len(), k)
                    .iter()
                    .map(|s| s.iter().map(|&i| xs[i]).product::<u128>())
                    .sum();
                let expect = if k > xs.len() { 0 } else { sum };
                prop_assert_eq!(elementary_symmetric(&xs, k), expect);
            }
        }
    }
}
