//! Column-support homotopy: start systems, power-series lifting of the
//! solution curve, and the endgame at `t = 1`.

use std::collections::HashMap;

use serde::Serialize;

use crate::detsys::{chi_bound, minors, rho_bound, DetSystem};
use crate::error::{Error, Result};
use crate::gbsolve::{groebner, quotient, shape_param};
use crate::mpoly::SparsePoly;
use crate::scalar::{Fp, Sampler, Scalar};
use crate::ucalc::{
    charpoly, det, gcd, pade, ring_solve, solve_local, QuotElem, QuotRing, Ring, Series,
    SeriesRing, UniPoly,
};
use crate::zdp::{union, ZeroDimParam};

pub const RETRIES: usize = 8;

/// Random start data: `r_i` on `A_i`, `m_j` on `B_j`, multipliers `c_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StartData {
    pub r: Vec<SparsePoly>,
    pub m: Vec<SparsePoly>,
    pub c: Vec<Vec<Scalar>>,
}

impl StartData {
    pub fn random(sys: &DetSystem, sampler: &mut Sampler) -> Self {
        let fp = sys.fp;
        let n = sys.n;
        let mut on = |support: &crate::mpoly::Support| {
            SparsePoly::from_terms(
                fp,
                n,
                support
                    .iter()
                    .map(|m| (m.exps().to_vec(), sampler.scalar(fp, true)))
                    .collect::<Vec<_>>(),
            )
            .expect("support has the right arity")
        };
        let r = sys.a_supports().iter().map(&mut on).collect();
        let m = sys.b_supports().iter().map(&mut on).collect();
        let c = (0..sys.p)
            .map(|_| (0..sys.q).map(|_| sampler.scalar(fp, true)).collect())
            .collect();
        StartData { r, m, c }
    }

    /// Explicit start data, e.g. replayed from a file.
    pub fn from_parts(
        sys: &DetSystem,
        r: Vec<SparsePoly>,
        m: Vec<SparsePoly>,
        c: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        if r.len() != sys.s || m.len() != sys.q {
            return Err(Error::ShapeError(format!(
                "start data needs {} r and {} m polynomials",
                sys.s, sys.q
            )));
        }
        if c.len() != sys.p || c.iter().any(|row| row.len() != sys.q) {
            return Err(Error::ShapeError(format!(
                "start multipliers must be {} x {}",
                sys.p, sys.q
            )));
        }
        if c.iter().flatten().any(|x| x.is_zero()) {
            return Err(Error::ShapeError("start multipliers must be nonzero".into()));
        }
        for poly in r.iter().chain(&m) {
            if poly.nvars() != sys.n {
                return Err(Error::ArityMismatch {
                    expected: sys.n,
                    got: poly.nvars(),
                });
            }
        }
        Ok(StartData { r, m, c })
    }

    /// `M` with entries `c_ij m_j`.
    pub fn matrix(&self, fp: Fp) -> Vec<Vec<SparsePoly>> {
        self.c
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.m)
                    .map(|(&c, m)| m.scale(c, fp))
                    .collect()
            })
            .collect()
    }

    /// The start system `(M, r)` as a determinantal system.
    pub fn as_system(&self, fp: Fp) -> Result<DetSystem> {
        DetSystem::new(fp, self.matrix(fp), self.r.clone())
    }

    /// The realized random vector: multipliers, then coefficients of `r`, then of `m`.
    pub fn coefficients(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = self.c.iter().flatten().copied().collect();
        for poly in self.r.iter().chain(&self.m) {
            out.extend(poly.terms().map(|(_, c)| c));
        }
        out
    }
}

pub fn build_start(sys: &DetSystem, seed: u64) -> StartData {
    StartData::random(sys, &mut Sampler::new(seed))
}

/// Solutions of the start system, one parametrization per column subset.
#[derive(Clone, Debug)]
pub struct StartSolution {
    pub param: ZeroDimParam,
    pub parts: Vec<(Vec<usize>, ZeroDimParam)>,
}

/// Solve `r = m_{j_1} = ... = m_{j_{n-s}} = 0` for every column subset with
/// the same linear form, then take the union.
pub fn solve_start(sys: &DetSystem, start: &StartData, lambda: &[Scalar]) -> Result<StartSolution> {
    let fp = sys.fp;
    let mut parts = Vec::new();
    for cols in sys.column_subsets() {
        let mut eqs = start.r.clone();
        eqs.extend(cols.iter().map(|&j| start.m[j].clone()));
        let algebra = quotient(&groebner(&eqs, fp)?)?;
        parts.push((cols, shape_param(&algebra, lambda)?));
    }
    let nonempty: Vec<ZeroDimParam> = parts
        .iter()
        .filter(|(_, p)| !p.is_empty())
        .map(|(_, p)| p.clone())
        .collect();
    let param = if nonempty.is_empty() {
        ZeroDimParam::empty(fp, lambda.to_vec())
    } else {
        union(&nonempty)?
    };
    Ok(StartSolution { param, parts })
}

/// The homotopy equations in `(t, x_1, ..., x_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopySystem {
    pub fp: Fp,
    pub s: usize,
    pub polys: Vec<SparsePoly>,
}

impl HomotopySystem {
    pub fn nvars(&self) -> usize {
        self.polys[0].nvars() - 1
    }

    /// The equations with `t` fixed.
    pub fn at(&self, t: Scalar) -> Vec<SparsePoly> {
        self.polys.iter().map(|f| f.specialize(0, t, self.fp)).collect()
    }
}

/// `u = (1 - t) r + t g` and the minors of `(1 - t) M + t F`.
pub fn assemble(sys: &DetSystem, start: &StartData) -> Result<HomotopySystem> {
    let fp = sys.fp;
    let nv = sys.n + 1;
    let t = SparsePoly::var(nv, 0);
    let one_minus_t = SparsePoly::constant(nv, Scalar::ONE).sub(&t, fp)?;
    let blend = |a: &SparsePoly, b: &SparsePoly| -> Result<SparsePoly> {
        one_minus_t
            .mul(&a.prepend_vars(1), fp)?
            .add(&t.mul(&b.prepend_vars(1), fp)?, fp)
    };
    let mut polys = start
        .r
        .iter()
        .zip(&sys.g)
        .map(|(r, g)| blend(r, g))
        .collect::<Result<Vec<_>>>()?;
    let m = start.matrix(fp);
    let v = m
        .iter()
        .zip(&sys.f)
        .map(|(mrow, frow)| mrow.iter().zip(frow).map(|(a, b)| blend(a, b)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    polys.extend(minors(&v, fp)?);
    Ok(HomotopySystem { fp, s: sys.s, polys })
}

/// Values of polynomials in `(t, x)` at `x = xs`, sharing monomial powers.
struct Evaluator<'a> {
    ring: &'a QuotRing,
    xs: &'a [QuotElem],
    cache: HashMap<Vec<u32>, QuotElem>,
}

impl<'a> Evaluator<'a> {
    fn new(ring: &'a QuotRing, xs: &'a [QuotElem]) -> Self {
        Evaluator {
            ring,
            xs,
            cache: HashMap::new(),
        }
    }

    fn monomial(&mut self, e: &[u32]) -> QuotElem {
        if let Some(v) = self.cache.get(e) {
            return v.clone();
        }
        let v = match e.iter().position(|&k| k > 0) {
            None => self.ring.one(),
            Some(i) => {
                let mut lower = e.to_vec();
                lower[i] -= 1;
                let base = self.monomial(&lower);
                self.ring.mul(&base, &self.xs[i])
            }
        };
        self.cache.insert(e.to_vec(), v.clone());
        v
    }

    fn eval(&mut self, f: &SparsePoly) -> QuotElem {
        let ring = self.ring;
        let mut acc = ring.zero();
        for (m, c) in f.terms() {
            let (a, rest) = m.exps().split_first().expect("t variable");
            let x = self.monomial(rest);
            let term = QuotElem {
                coeffs: x.coeffs.iter().map(|s| s.shift(*a as usize)).collect(),
            };
            acc = ring.add(&acc, &ring.scale(&term, c));
        }
        acc
    }
}

/// Jacobian of `polys` with respect to `x` (not `t`).
fn jacobian(polys: &[SparsePoly], fp: Fp) -> Vec<Vec<SparsePoly>> {
    let n = polys[0].nvars() - 1;
    polys
        .iter()
        .map(|f| (0..n).map(|j| f.derivative(j + 1, fp)).collect())
        .collect()
}

/// Reduce the homotopy to `n` equations whose Jacobian at `t = 0` is
/// invertible on the start points.
pub fn square_combine(
    h: &HomotopySystem,
    start: &ZeroDimParam,
    sampler: &mut Sampler,
) -> Result<Vec<SparsePoly>> {
    let fp = h.fp;
    let n = h.nvars();
    let m = h.polys.len();
    let attempts = if m == n { 1 } else { RETRIES };
    for _ in 0..attempts {
        let square = if m == n {
            h.polys.clone()
        } else {
            (0..n)
                .map(|_| {
                    h.polys.iter().try_fold(SparsePoly::zero(n + 1), |acc, b| {
                        acc.add(&b.scale(sampler.scalar(fp, true), fp), fp)
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        if start.is_empty() || jacobian_is_unit(&square, start)? {
            return Ok(square);
        }
    }
    Err(Error::SingularJacobian)
}

fn jacobian_is_unit(square: &[SparsePoly], start: &ZeroDimParam) -> Result<bool> {
    let ring = QuotRing::with_constant_modulus(start.fp, &start.w, 1)?;
    let xs: Vec<QuotElem> = start.v.iter().map(|v| ring.from_unipoly(v)).collect();
    let mut ev = Evaluator::new(&ring, &xs);
    let j: Vec<Vec<QuotElem>> = jacobian(square, start.fp)
        .iter()
        .map(|row| row.iter().map(|f| ev.eval(f)).collect())
        .collect();
    Ok(ring.is_unit(&det(&ring, &j)?))
}

/// A parametrization over `F_p[t]/(t^prec)`: `w` monic in `y` with series
/// coefficients, `v_i` of degree below `deg w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesParam {
    pub fp: Fp,
    pub lambda: Vec<Scalar>,
    pub prec: usize,
    pub w: Vec<Series>,
    pub v: Vec<Vec<Series>>,
}

impl SeriesParam {
    /// The `t`-free parametrization at precision 1.
    pub fn from_start(p: &ZeroDimParam) -> Self {
        let d = p.degree();
        let lift = |u: &UniPoly, len: usize| -> Vec<Series> {
            (0..len).map(|k| Series::constant(u.coeff(k), 1)).collect()
        };
        SeriesParam {
            fp: p.fp,
            lambda: p.lambda.clone(),
            prec: 1,
            w: lift(&p.w, d + 1),
            v: p.v.iter().map(|v| lift(v, d)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.w.len() - 1
    }

    pub fn truncate(&self, prec: usize) -> SeriesParam {
        let cut = |xs: &[Series]| xs.iter().map(|s| s.with_prec(prec)).collect();
        SeriesParam {
            fp: self.fp,
            lambda: self.lambda.clone(),
            prec,
            w: cut(&self.w),
            v: self.v.iter().map(|v| cut(v)).collect(),
        }
    }

    /// The ring `F_p[t]/(t^prec)[y]/(w)` at the given precision.
    pub fn ring(&self, prec: usize) -> Result<QuotRing> {
        QuotRing::new(self.fp, self.w.clone(), prec)
    }

    fn points(&self, ring: &QuotRing) -> Vec<QuotElem> {
        self.v.iter().map(|v| ring.reduce(v.clone())).collect()
    }

    /// First equation not vanishing on the points, if any.
    pub fn residual(&self, square: &[SparsePoly]) -> Result<Option<usize>> {
        let ring = self.ring(self.prec)?;
        let xs = self.points(&ring);
        let mut ev = Evaluator::new(&ring, &xs);
        Ok(square.iter().position(|f| ev.eval(f) != ring.zero()))
    }
}

/// One Newton step: precision `prec` to `2 prec`.
pub fn newton_lift(p: &SeriesParam, square: &[SparsePoly]) -> Result<SeriesParam> {
    let fp = p.fp;
    let prec = 2 * p.prec;
    let d = p.degree();
    if d == 0 {
        return Ok(p.truncate(prec));
    }
    let ring = p.ring(prec)?;
    let mut xs = p.points(&ring);
    let (h, j) = {
        let mut ev = Evaluator::new(&ring, &xs);
        let h: Vec<QuotElem> = square.iter().map(|f| ev.eval(f)).collect();
        let j: Vec<Vec<QuotElem>> = jacobian(square, fp)
            .iter()
            .map(|row| row.iter().map(|f| ev.eval(f)).collect())
            .collect();
        (h, j)
    };
    let delta = ring_solve(&ring, &j, &h)?;
    for (x, dx) in xs.iter_mut().zip(&delta) {
        *x = ring.sub(x, dx);
    }
    // re-center y on theta = lambda(x)
    let theta = xs
        .iter()
        .zip(&p.lambda)
        .fold(ring.zero(), |acc, (x, &l)| ring.add(&acc, &ring.scale(x, l)));
    let mut mult = vec![Vec::with_capacity(d); d];
    let mut powers = vec![Vec::with_capacity(d); d];
    let mut yk = ring.one();
    let mut tk = ring.one();
    for _ in 0..d {
        let col = ring.mul(&theta, &yk);
        for r in 0..d {
            mult[r].push(col.coeffs[r].clone());
            powers[r].push(tk.coeffs[r].clone());
        }
        yk = ring.mul(&yk, &ring.y());
        tk = ring.mul(&tk, &theta);
    }
    let sr = SeriesRing::new(fp, prec);
    let w = charpoly(&sr, &mult)?;
    let rhs: Vec<Vec<Series>> = (0..d)
        .map(|r| xs.iter().map(|x| x.coeffs[r].clone()).collect())
        .collect();
    let sol = solve_local(&sr, &powers, &rhs)?;
    let v = (0..xs.len())
        .map(|i| (0..d).map(|r| sol[r][i].clone()).collect())
        .collect();
    let out = SeriesParam {
        fp,
        lambda: p.lambda.clone(),
        prec,
        w,
        v,
    };
    if let Some(i) = out.residual(square)? {
        return Err(Error::ResidualNonzero(i));
    }
    Ok(out)
}

/// Lift the start parametrization until its precision reaches `target`.
pub fn lift(start: &ZeroDimParam, square: &[SparsePoly], target: usize) -> Result<SeriesParam> {
    let mut p = SeriesParam::from_start(start);
    if p.degree() > 0 {
        if let Some(i) = p.residual(square)? {
            return Err(Error::ResidualNonzero(i));
        }
    }
    while p.prec < target {
        p = newton_lift(&p, square)?;
    }
    Ok(p)
}

/// Result of the endgame. `degree_at_one` counts bounded branches with
/// multiplicity; `diverged` counts branches escaping to infinity.
#[derive(Clone, Debug)]
pub struct Specialized {
    pub param: ZeroDimParam,
    pub degree_at_one: usize,
    pub diverged: usize,
}

/// `(k, p / (t - 1)^k)` with `k` maximal.
fn split_at_one(p: &UniPoly, fp: Fp) -> (usize, UniPoly) {
    let lin = UniPoly::from_i64(fp, &[-1, 1]);
    let mut p = p.clone();
    let mut k = 0;
    while !p.is_zero() && p.eval(Scalar::ONE, fp).is_zero() {
        p = p.div_rem(&lin, fp).0;
        k += 1;
    }
    (k, p)
}

/// A rational function of `t` as `(t - 1)^order * unit`; `None` for zero.
struct Germ {
    order: i64,
    value: Scalar,
}

fn germ(s: &Series, bound: usize, fp: Fp) -> Result<Option<Germ>> {
    let (num, den) = pade(s, bound, bound, fp)?;
    if num.is_zero() {
        return Ok(None);
    }
    let (a, num) = split_at_one(&num, fp);
    let (b, den) = split_at_one(&den, fp);
    Ok(Some(Germ {
        order: a as i64 - b as i64,
        value: fp.div(num.eval(Scalar::ONE, fp), den.eval(Scalar::ONE, fp))?,
    }))
}

/// Rebuild every coefficient as a rational function of `t` with degrees at
/// most `bound` and take the limit at `t = 1` of the curve, scaled so that
/// branches escaping to infinity drop out. Keeps one copy of each point.
pub fn reconstruct_and_specialize(p: &SeriesParam, bound: usize) -> Result<Specialized> {
    let fp = p.fp;
    let d = p.degree();
    if p.prec < 2 * bound + 1 {
        return Err(Error::ReconstructionFailed(format!(
            "precision {} is below 2*{bound}+1",
            p.prec
        )));
    }
    let empty = |diverged| Specialized {
        param: ZeroDimParam::empty(fp, p.lambda.clone()),
        degree_at_one: 0,
        diverged,
    };
    if d == 0 {
        return Ok(empty(0));
    }
    let ring = p.ring(p.prec)?;
    let sr = ring.series_ring();
    let dw: Vec<Series> = (1..=d)
        .map(|k| sr.scale(&p.w[k], fp.elem(k as u64)))
        .collect();
    let dw = ring.reduce(dw);
    let xs = p.points(&ring);
    let kronecker: Vec<QuotElem> = xs.iter().map(|x| ring.mul(x, &dw)).collect();

    let w_germs = p
        .w
        .iter()
        .map(|s| germ(s, bound, fp))
        .collect::<Result<Vec<_>>>()?;
    let scale = w_germs.iter().flatten().map(|g| g.order).min().unwrap_or(0);
    let mut index = 0;
    let mut limit = |g: &Option<Germ>| -> Result<Scalar> {
        index += 1;
        match g {
            None => Ok(Scalar::ZERO),
            Some(g) if g.order > scale => Ok(Scalar::ZERO),
            Some(g) if g.order == scale => Ok(g.value),
            Some(_) => Err(Error::DenominatorVanishesAtOne { index: index - 1 }),
        }
    };
    let w1 = UniPoly::from_coeffs(w_germs.iter().map(&mut limit).collect::<Result<_>>()?);
    let mut k1 = Vec::with_capacity(kronecker.len());
    for k in &kronecker {
        let germs = k
            .coeffs
            .iter()
            .map(|s| germ(s, bound, fp))
            .collect::<Result<Vec<_>>>()?;
        k1.push(UniPoly::from_coeffs(germs.iter().map(&mut limit).collect::<Result<_>>()?));
    }
    let bounded = w1.deg0();
    if bounded == 0 {
        return Ok(empty(d));
    }

    let dw1 = w1.derivative(fp);
    let g = gcd(&w1, &dw1, fp);
    let fail = |what: &str| Error::ReconstructionFailed(format!("{what} at t = 1"));
    let wt = w1.exact_div(&g, fp).ok_or_else(|| fail("gcd does not divide w"))?.monic(fp);
    let dwt = dw1.exact_div(&g, fp).ok_or_else(|| fail("gcd does not divide w'"))?;
    let inv = dwt.inv_mod(&wt, fp).ok_or_else(|| fail("multiplicity divisible by p"))?;
    let v = k1
        .iter()
        .map(|k| {
            let q = k.exact_div(&g, fp).ok_or_else(|| fail("colliding branches"))?;
            Ok(q.mul(&inv, fp).rem(&wt, fp))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Specialized {
        param: ZeroDimParam::new(fp, p.lambda.clone(), wt, v)?,
        degree_at_one: bounded,
        diverged: d - bounded,
    })
}

/// How the linear form `lambda` is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaChoice {
    /// `x_n`, falling back to random forms on retry.
    LastVariable,
    Random,
    Fixed(Vec<Scalar>),
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub seed: u64,
    pub lambda: LambdaChoice,
    /// Lifting precision; `2 rho + 2` when absent.
    pub precision: Option<usize>,
    /// Replay this start data instead of sampling it.
    pub start: Option<StartData>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            seed: 0,
            lambda: LambdaChoice::LastVariable,
            precision: None,
            start: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetReport {
    pub columns: Vec<usize>,
    pub chi: u64,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub chi: u64,
    pub rho: Option<u64>,
    pub precision: usize,
    pub subsets: Vec<SubsetReport>,
    pub start_degree: usize,
    pub degree_at_one: usize,
    pub diverged: usize,
    pub degree: usize,
    pub retries: usize,
    pub failures: Vec<String>,
    pub seed: u64,
    pub flags: Vec<String>,
}

fn retryable(e: &Error) -> bool {
    e.is_degeneracy()
        || matches!(
            e,
            Error::ResidualNonzero(_)
                | Error::ReconstructionFailed(_)
                | Error::DenominatorVanishesAtOne { .. }
                | Error::ZeroInverse
                | Error::ModuliNotCoprime
                | Error::RetriesExhausted { .. }
        )
}

/// Solve `rank F < p, g = 0` by the column-support homotopy.
pub fn solve(sys: &DetSystem, opts: &SolveOptions) -> Result<(ZeroDimParam, SolveReport)> {
    let fp = sys.fp;
    let n = sys.n;
    let (chis, chi) = chi_bound(sys)?;
    let (rho, precision, bound) = match opts.precision {
        Some(k) => (None, k, k.saturating_sub(1) / 2),
        None => {
            let rho = rho_bound(sys)?.1;
            (Some(rho), 2 * rho as usize + 2, rho as usize)
        }
    };
    let equations = sys.equations()?;
    let master = Sampler::new(opts.seed);
    let can_retry = opts.start.is_none() || !matches!(opts.lambda, LambdaChoice::Fixed(_));
    let mut failures = Vec::new();
    let mut last = None;
    for attempt in 0..=RETRIES {
        let mut sampler = master.derive(attempt as u64);
        let start = match &opts.start {
            Some(s) => s.clone(),
            None => StartData::random(sys, &mut sampler),
        };
        let lambda = match &opts.lambda {
            LambdaChoice::Fixed(l) => l.clone(),
            LambdaChoice::LastVariable if attempt == 0 => {
                let mut l = vec![Scalar::ZERO; n];
                l[n - 1] = Scalar::ONE;
                l
            }
            _ => (0..n).map(|i| sampler.scalar(fp, i == n - 1)).collect(),
        };
        let run = || -> Result<(ZeroDimParam, StartSolution, Specialized)> {
            let sol = solve_start(sys, &start, &lambda)?;
            let h = assemble(sys, &start)?;
            let square = square_combine(&h, &sol.param, &mut sampler.derive(1))?;
            let lifted = lift(&sol.param, &square, precision)?;
            let spec = reconstruct_and_specialize(&lifted, bound)?;
            spec.param.verify_against(&equations)?;
            Ok((spec.param.clone(), sol, spec))
        };
        match run() {
            Ok((param, sol, spec)) => {
                let mut flags = Vec::new();
                if opts.start.is_some() {
                    flags.push("replayed-start".to_string());
                }
                if opts.precision.is_some() {
                    flags.push("precision-override".to_string());
                }
                if spec.diverged > 0 {
                    flags.push("diverging-branches-dropped".to_string());
                }
                if spec.degree_at_one > param.degree() {
                    flags.push("multiplicities-collapsed".to_string());
                }
                let report = SolveReport {
                    chi,
                    rho,
                    precision,
                    subsets: sol
                        .parts
                        .iter()
                        .zip(&chis)
                        .map(|((cols, p), &c)| SubsetReport {
                            columns: cols.iter().map(|j| j + 1).collect(),
                            chi: c,
                            degree: p.degree(),
                        })
                        .collect(),
                    start_degree: sol.param.degree(),
                    degree_at_one: spec.degree_at_one,
                    diverged: spec.diverged,
                    degree: param.degree(),
                    retries: attempt,
                    failures,
                    seed: opts.seed,
                    flags,
                };
                return Ok((param, report));
            }
            Err(e) if can_retry && retryable(&e) => {
                failures.push(e.kind().to_string());
                last = Some(e);
            }
            Err(e) if retryable(&e) && attempt == 0 => {
                return Err(Error::RetriesExhausted {
                    cause: Box::new(e),
                    attempts: 1,
                })
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted {
        cause: Box::new(last.expect("at least one failure")),
        attempts: RETRIES + 1,
    })
}
