//! Exact solving of small zero-dimensional systems over `F_p`.
//!
//! Buchberger's algorithm under graded reverse lexicographic order, the
//! standard-monomial basis of the quotient algebra, and extraction of a
//! shape-lemma parametrization for a linear form.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::mpoly::{Monomial, SparsePoly};
use crate::scalar::{Fp, Sampler, Scalar};
use crate::ucalc::linalg::solve_field;
use crate::ucalc::unipoly::{is_squarefree, UniPoly};
use crate::zdp::ZeroDimParam;

pub const DEFAULT_PAIR_LIMIT: usize = 50_000;
pub const MAX_BRUTE_FORCE: u64 = 10_000_000;
pub const LAMBDA_RETRIES: usize = 8;

/// Exponent vector ordered by graded reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Grev(Vec<u32>);

impl Ord for Grev {
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, db): (u64, u64) = (
            self.0.iter().map(|&e| e as u64).sum(),
            other.0.iter().map(|&e| e as u64).sum(),
        );
        da.cmp(&db).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Grev {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Grev {
    fn divides(&self, o: &Grev) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    fn div(&self, o: &Grev) -> Grev {
        Grev(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    fn mul(&self, o: &Grev) -> Grev {
        Grev(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn lcm(&self, o: &Grev) -> Grev {
        Grev(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    fn coprime(&self, o: &Grev) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// Terms in decreasing order, nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GPoly(Vec<(Grev, Scalar)>);

impl GPoly {
    fn from_sparse(f: &SparsePoly) -> GPoly {
        let mut t: Vec<(Grev, Scalar)> = f
            .terms()
            .map(|(m, c)| (Grev(m.exps().to_vec()), c))
            .collect();
        t.sort_by(|a, b| b.0.cmp(&a.0));
        GPoly(t)
    }

    fn from_map(m: BTreeMap<Grev, Scalar>) -> GPoly {
        GPoly(m.into_iter().rev().collect())
    }

    fn to_sparse(&self, nvars: usize, fp: Fp) -> SparsePoly {
        SparsePoly::from_terms(
            fp,
            nvars,
            self.0.iter().map(|(m, c)| (m.0.clone(), *c)),
        )
        .expect("consistent arity")
    }

    fn lead(&self) -> &Grev {
        &self.0[0].0
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn monic(mut self, fp: Fp) -> GPoly {
        if let Some(&(_, c)) = self.0.first() {
            let inv = fp.inv(c).expect("nonzero lead");
            for t in &mut self.0 {
                t.1 = fp.mul(t.1, inv);
            }
        }
        self
    }
}

fn add_scaled(map: &mut BTreeMap<Grev, Scalar>, g: &GPoly, skip: usize, m: &Grev, c: Scalar, fp: Fp) {
    for (gm, gc) in &g.0[skip..] {
        let key = gm.mul(m);
        let add = fp.mul(*gc, c);
        let e = map.entry(key).or_insert(Scalar::ZERO);
        *e = fp.add(*e, add);
        if e.is_zero() {
            let key = gm.mul(m);
            map.remove(&key);
        }
    }
}

/// Full reduction of `f` by monic `basis`.
fn normal_form(f: BTreeMap<Grev, Scalar>, basis: &[GPoly], fp: Fp) -> GPoly {
    let mut work = f;
    let mut done: BTreeMap<Grev, Scalar> = BTreeMap::new();
    while let Some((m, c)) = work.pop_last() {
        match basis.iter().find(|g| g.lead().divides(&m)) {
            Some(g) => {
                let q = m.div(g.lead());
                add_scaled(&mut work, g, 1, &q, fp.neg(c), fp);
            }
            None => {
                done.insert(m, c);
            }
        }
    }
    GPoly::from_map(done)
}

fn to_map(g: &GPoly) -> BTreeMap<Grev, Scalar> {
    g.0.iter().cloned().collect()
}

fn s_poly(f: &GPoly, g: &GPoly, fp: Fp) -> BTreeMap<Grev, Scalar> {
    let l = f.lead().lcm(g.lead());
    let mut map = BTreeMap::new();
    add_scaled(&mut map, f, 1, &l.div(f.lead()), Scalar::ONE, fp);
    add_scaled(&mut map, g, 1, &l.div(g.lead()), fp.neg(Scalar::ONE), fp);
    map
}

/// A reduced Gröbner basis together with the system it was computed from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    fp: Fp,
    nvars: usize,
    gens: Vec<GPoly>,
    system: Vec<SparsePoly>,
}

impl GroebnerBasis {
    pub fn fp(&self) -> Fp {
        self.fp
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Generators, monic, sorted by increasing leading monomial.
    pub fn generators(&self) -> Vec<SparsePoly> {
        self.gens.iter().map(|g| g.to_sparse(self.nvars, self.fp)).collect()
    }

    pub fn system(&self) -> &[SparsePoly] {
        &self.system
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].lead().is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| Monomial::new(g.lead().0.clone())).collect()
    }

    pub fn reduce(&self, f: &SparsePoly) -> SparsePoly {
        normal_form(to_map(&GPoly::from_sparse(f)), &self.gens, self.fp).to_sparse(self.nvars, self.fp)
    }
}

pub fn groebner(system: &[SparsePoly], fp: Fp) -> Result<GroebnerBasis> {
    groebner_with_limit(system, fp, DEFAULT_PAIR_LIMIT)
}

/// Buchberger with the coprime and chain criteria; fails after `pair_limit`
/// S-polynomial reductions.
pub fn groebner_with_limit(system: &[SparsePoly], fp: Fp, pair_limit: usize) -> Result<GroebnerBasis> {
    let nvars = system
        .first()
        .ok_or_else(|| Error::ShapeError("empty system".into()))?
        .nvars();
    if let Some(f) = system.iter().find(|f| f.nvars() != nvars) {
        return Err(Error::ArityMismatch {
            expected: nvars,
            got: f.nvars(),
        });
    }
    let unit = || GroebnerBasis {
        fp,
        nvars,
        gens: vec![GPoly(vec![(Grev(vec![0; nvars]), Scalar::ONE)])],
        system: system.to_vec(),
    };
    let mut gens: Vec<GPoly> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push = |g: GPoly, gens: &mut Vec<GPoly>, pairs: &mut BTreeSet<(usize, usize)>| {
        let k = gens.len();
        for i in 0..k {
            pairs.insert((i, k));
        }
        gens.push(g);
    };
    for f in system {
        let r = normal_form(to_map(&GPoly::from_sparse(f)), &gens, fp);
        if r.is_zero() {
            continue;
        }
        if r.lead().is_one() {
            return Ok(unit());
        }
        push(r.monic(fp), &mut gens, &mut pairs);
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        let &(i, j) = pairs
            .iter()
            .min_by(|a, b| {
                let la = gens[a.0].lead().lcm(gens[a.1].lead());
                let lb = gens[b.0].lead().lcm(gens[b.1].lead());
                la.cmp(&lb).then(a.cmp(b))
            })
            .expect("nonempty");
        pairs.remove(&(i, j));
        let (li, lj) = (gens[i].lead(), gens[j].lead());
        if li.coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..gens.len()).any(|k| {
            k != i
                && k != j
                && gens[k].lead().divides(&l)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > pair_limit {
            return Err(Error::ResourceBudgetExceeded(format!(
                "more than {pair_limit} S-polynomial reductions"
            )));
        }
        let r = normal_form(s_poly(&gens[i], &gens[j], fp), &gens, fp);
        if r.is_zero() {
            continue;
        }
        if r.lead().is_one() {
            return Ok(unit());
        }
        push(r.monic(fp), &mut gens, &mut pairs);
    }
    // minimal basis, then reduced tails
    let mut minimal: Vec<GPoly> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(k, h)| {
            k != i && h.lead().divides(g.lead()) && (h.lead() != g.lead() || k < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| a.lead().cmp(b.lead()));
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<GPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, h)| h.clone())
            .collect();
        let tail: BTreeMap<Grev, Scalar> = g.0[1..].iter().cloned().collect();
        let mut t = normal_form(tail, &others, fp);
        t.0.insert(0, g.0[0].clone());
        reduced.push(t);
    }
    Ok(GroebnerBasis {
        fp,
        nvars,
        gens: reduced,
        system: system.to_vec(),
    })
}

/// `F_p[x]/I` for a zero-dimensional ideal, with its standard monomials.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    basis: GroebnerBasis,
    monomials: Vec<Grev>,
    index: BTreeMap<Grev, usize>,
}

impl QuotientAlgebra {
    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    /// Standard monomials in increasing order.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        self.monomials.iter().map(|m| Monomial::new(m.0.clone())).collect()
    }

    /// Coordinates of the class of `f` in the standard-monomial basis.
    pub fn coordinates(&self, f: &SparsePoly) -> Vec<Scalar> {
        let nf = normal_form(to_map(&GPoly::from_sparse(f)), &self.basis.gens, self.basis.fp);
        self.coords_of(&nf)
    }

    fn coords_of(&self, nf: &GPoly) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; self.dimension()];
        for (m, c) in &nf.0 {
            v[self.index[m]] = *c;
        }
        v
    }
}

pub fn quotient(basis: &GroebnerBasis) -> Result<QuotientAlgebra> {
    let n = basis.nvars;
    if basis.is_unit_ideal() {
        return Ok(QuotientAlgebra {
            basis: basis.clone(),
            monomials: Vec::new(),
            index: BTreeMap::new(),
        });
    }
    for i in 0..n {
        let pure = basis.gens.iter().any(|g| {
            let e = &g.lead().0;
            e[i] > 0 && e.iter().enumerate().all(|(k, &x)| k == i || x == 0)
        });
        if !pure {
            return Err(Error::PositiveDimension);
        }
    }
    let standard = |m: &Grev| !basis.gens.iter().any(|g| g.lead().divides(m));
    let one = Grev(vec![0; n]);
    let mut seen: BTreeSet<Grev> = BTreeSet::from([one.clone()]);
    let mut queue = VecDeque::from([one]);
    while let Some(m) = queue.pop_front() {
        for i in 0..n {
            let mut e = m.0.clone();
            e[i] += 1;
            let next = Grev(e);
            if standard(&next) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let monomials: Vec<Grev> = seen.into_iter().collect();
    let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(QuotientAlgebra {
        basis: basis.clone(),
        monomials,
        index,
    })
}

/// Shape-lemma parametrization for `lambda`, checked against the original
/// system before it is returned.
pub fn shape_param(algebra: &QuotientAlgebra, lambda: &[Scalar]) -> Result<ZeroDimParam> {
    let basis = &algebra.basis;
    let (fp, n) = (basis.fp, basis.nvars);
    if lambda.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    let d = algebra.dimension();
    if d == 0 {
        return Ok(ZeroDimParam::empty(fp, lambda.to_vec()));
    }
    let lin: GPoly = GPoly::from_sparse(&SparsePoly::from_terms(
        fp,
        n,
        (0..n).map(|i| (Monomial::var(n, i).exps().to_vec(), lambda[i])),
    )?);
    // powers of lambda in normal form
    let mut krylov: Vec<Vec<Scalar>> = Vec::with_capacity(d + 1);
    let mut cur = normal_form(
        BTreeMap::from([(Grev(vec![0; n]), Scalar::ONE)]),
        &basis.gens,
        fp,
    );
    let mut echelon: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for k in 0..=d {
        let coords = algebra.coords_of(&cur);
        if k < d {
            let mut r = coords.clone();
            for (p, row) in &echelon {
                if !r[*p].is_zero() {
                    let f = r[*p];
                    for (x, y) in r.iter_mut().zip(row) {
                        *x = fp.sub(*x, fp.mul(f, *y));
                    }
                }
            }
            match r.iter().position(|c| !c.is_zero()) {
                Some(p) => {
                    let inv = fp.inv(r[p])?;
                    let row: Vec<Scalar> = r.iter().map(|&x| fp.mul(x, inv)).collect();
                    echelon.push((p, row));
                }
                None => {
                    return Err(Error::NotSeparating {
                        degree: k,
                        dimension: d,
                    })
                }
            }
        }
        krylov.push(coords);
        if k < d {
            let mut prod = BTreeMap::new();
            for (m, c) in &cur.0 {
                add_scaled(&mut prod, &lin, 0, m, *c, fp);
            }
            cur = normal_form(prod, &basis.gens, fp);
        }
    }
    // columns are the powers 0..d-1
    let a: Vec<Vec<Scalar>> = (0..d).map(|r| (0..d).map(|k| krylov[k][r]).collect()).collect();
    let mut rhs_cols: Vec<Vec<Scalar>> = vec![krylov[d].clone()];
    for i in 0..n {
        rhs_cols.push(algebra.coordinates(&SparsePoly::var(n, i)));
    }
    let b: Vec<Vec<Scalar>> = (0..d)
        .map(|r| rhs_cols.iter().map(|c| c[r]).collect())
        .collect();
    let x = solve_field(fp, &a, &b).ok_or(Error::NotSeparating {
        degree: d - 1,
        dimension: d,
    })?;
    let mut w: Vec<Scalar> = (0..d).map(|k| fp.neg(x[k][0])).collect();
    w.push(Scalar::ONE);
    let w = UniPoly::from_coeffs(w);
    if !is_squarefree(&w, fp) {
        return Err(Error::NotRadical);
    }
    let v = (0..n)
        .map(|i| UniPoly::from_coeffs((0..d).map(|k| x[k][i + 1]).collect()))
        .collect();
    let r = ZeroDimParam::new(fp, lambda.to_vec(), w, v)?;
    r.verify_against(&basis.system)?;
    Ok(r)
}

/// Parametrize a zero-dimensional radical system, trying `lambda = x_n`
/// first and then random forms with nonzero last coefficient.
pub fn solve_system(system: &[SparsePoly], fp: Fp, sampler: &mut Sampler) -> Result<ZeroDimParam> {
    let gb = groebner(system, fp)?;
    let algebra = quotient(&gb)?;
    let n = gb.nvars;
    let mut lambda = vec![Scalar::ZERO; n];
    lambda[n - 1] = Scalar::ONE;
    let mut last = None;
    for attempt in 0..=LAMBDA_RETRIES {
        if attempt > 0 {
            lambda = (0..n).map(|i| sampler.scalar(fp, i == n - 1)).collect();
        }
        match shape_param(&algebra, &lambda) {
            Err(e @ Error::NotSeparating { .. }) => last = Some(e),
            other => return other,
        }
    }
    Err(Error::RetriesExhausted {
        cause: Box::new(last.expect("at least one attempt")),
        attempts: LAMBDA_RETRIES + 1,
    })
}

/// All solutions in `F_p^n` by enumeration; test oracle for small fields.
pub fn brute_force_solve(system: &[SparsePoly], fp: Fp) -> Result<Vec<Vec<Scalar>>> {
    let n = system
        .first()
        .ok_or_else(|| Error::ShapeError("empty system".into()))?
        .nvars();
    let total = (fp.prime() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > MAX_BRUTE_FORCE as u128 {
        return Err(Error::FieldTooLarge);
    }
    let mut out = Vec::new();
    let mut point = vec![Scalar::ZERO; n];
    for idx in 0..total as u64 {
        let mut r = idx;
        for c in point.iter_mut() {
            *c = fp.elem(r % fp.prime());
            r /= fp.prime();
        }
        let mut ok = true;
        for f in system {
            if !f.eval(&point, fp)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(point.clone());
        }
    }
    Ok(out)
}
