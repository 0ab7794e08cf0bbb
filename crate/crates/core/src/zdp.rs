//! Zero-dimensional parametrizations `((w, v_1..v_n), lambda)`.
//!
//! A parametrization describes the finite set
//! `{ (v_1(a), ..., v_n(a)) : w(a) = 0 }` over the algebraic closure, with
//! `lambda_1 v_1 + ... + lambda_n v_n = y` modulo `w`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mpoly::{parse_poly, SparsePoly};
use crate::scalar::{Fp, Scalar};
use crate::ucalc::unipoly::{crt, gcd, is_squarefree, UniPoly};

/// Fields at or below this size allow an exhaustive root scan.
pub const ROOT_SCAN_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimParam {
    pub fp: Fp,
    pub lambda: Vec<Scalar>,
    pub w: UniPoly,
    pub v: Vec<UniPoly>,
}

impl ZeroDimParam {
    /// Makes `w` monic, reduces each `v_i` modulo `w`, then validates.
    pub fn new(fp: Fp, lambda: Vec<Scalar>, w: UniPoly, v: Vec<UniPoly>) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::ZeroInput);
        }
        let w = w.monic(fp);
        let v = v.iter().map(|p| p.rem(&w, fp)).collect();
        let r = ZeroDimParam { fp, lambda, w, v };
        r.validate()?;
        Ok(r)
    }

    /// The parametrization of the empty set.
    pub fn empty(fp: Fp, lambda: Vec<Scalar>) -> Self {
        let n = lambda.len();
        ZeroDimParam {
            fp,
            lambda,
            w: UniPoly::one(),
            v: vec![UniPoly::zero(); n],
        }
    }

    pub fn nvars(&self) -> usize {
        self.lambda.len()
    }

    /// Number of points, `deg w`.
    pub fn degree(&self) -> usize {
        self.w.deg0()
    }

    pub fn is_empty(&self) -> bool {
        self.degree() == 0
    }

    pub fn validate(&self) -> Result<()> {
        let fp = self.fp;
        if self.v.len() != self.lambda.len() {
            return Err(Error::ShapeError(format!(
                "{} coordinates for a linear form in {} variables",
                self.v.len(),
                self.lambda.len()
            )));
        }
        if !self.w.is_monic() {
            return Err(Error::DegreeBound("w is not monic".into()));
        }
        if !is_squarefree(&self.w, fp) {
            return Err(Error::NotSquarefree);
        }
        let d = self.degree();
        if let Some((i, _)) = self
            .v
            .iter()
            .enumerate()
            .find(|(_, p)| p.degree().is_some_and(|k| k >= d))
        {
            return Err(Error::DegreeBound(format!(
                "deg v{} >= deg w = {d}",
                i + 1
            )));
        }
        let mut lin = UniPoly::zero();
        for (l, p) in self.lambda.iter().zip(&self.v) {
            lin = lin.add(&p.scale(*l, fp), fp);
        }
        if !lin.sub(&UniPoly::y(), fp).rem(&self.w, fp).is_zero() {
            return Err(Error::LinearFormMismatch);
        }
        Ok(())
    }

    /// `f(v_1(y), ..., v_n(y)) mod w`.
    pub fn substitute(&self, f: &SparsePoly) -> Result<UniPoly> {
        let fp = self.fp;
        if f.nvars() != self.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                got: f.nvars(),
            });
        }
        let powers: Vec<Vec<UniPoly>> = (0..self.nvars())
            .map(|i| {
                let top = f.degree_in(i) as usize;
                let mut pw = vec![UniPoly::one().rem(&self.w, fp)];
                for k in 1..=top {
                    pw.push(pw[k - 1].mul(&self.v[i], fp).rem(&self.w, fp));
                }
                pw
            })
            .collect();
        let mut acc = UniPoly::zero();
        for (m, c) in f.terms() {
            let mut t = UniPoly::constant(c);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize], fp).rem(&self.w, fp);
                }
            }
            acc = acc.add(&t, fp);
        }
        Ok(acc.rem(&self.w, fp))
    }

    /// Checks that every equation vanishes on the parametrized points.
    pub fn verify_against(&self, system: &[SparsePoly]) -> Result<()> {
        for (i, f) in system.iter().enumerate() {
            if !self.substitute(f)?.is_zero() {
                return Err(Error::ResidualNonzero(i));
            }
        }
        Ok(())
    }

    /// Points whose coordinates all lie in `F_p`, ordered by root of `w`.
    pub fn roots_in_base_field(&self) -> Result<Vec<Vec<Scalar>>> {
        let fp = self.fp;
        if fp.prime() > ROOT_SCAN_LIMIT {
            return Err(Error::FieldTooLarge);
        }
        let mut out = Vec::new();
        if self.is_empty() {
            return Ok(out);
        }
        for a in 0..fp.prime() {
            let a = fp.elem(a);
            if self.w.eval(a, fp).is_zero() {
                out.push(self.v.iter().map(|p| p.eval(a, fp)).collect());
                if out.len() == self.degree() {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Reads the line format `lambda ...`, `w <poly>`, `v <poly>` (one per
    /// coordinate), with `#` comments. Coefficients may be fractions.
    pub fn parse_text(text: &str, fp: Fp) -> Result<Self> {
        let names = vec!["y".to_string()];
        let mut lambda = None;
        let mut w = None;
        let mut v = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: Error| match e {
                Error::Parse { column, message, .. } => Error::Parse {
                    line: ln + 1,
                    column,
                    message,
                },
                other => other,
            };
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match key {
                "lambda" => {
                    lambda = Some(
                        rest.split_whitespace()
                            .map(|s| fp.reduce_fraction(s).map_err(at))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "w" => w = Some(univariate(&parse_poly(rest, &names, fp).map_err(at)?)),
                "v" => v.push(univariate(&parse_poly(rest, &names, fp).map_err(at)?)),
                other => {
                    return Err(Error::Parse {
                        line: ln + 1,
                        column: 1,
                        message: format!("unknown key {other:?}"),
                    })
                }
            }
        }
        let missing = |what: &str| Error::Parse {
            line: 0,
            column: 0,
            message: format!("missing {what}"),
        };
        ZeroDimParam::new(
            fp,
            lambda.ok_or_else(|| missing("lambda"))?,
            w.ok_or_else(|| missing("w"))?,
            v,
        )
    }

    pub fn to_json(&self) -> ParamJson {
        let strs = |p: &UniPoly| p.coeffs().iter().map(|c| c.value().to_string()).collect();
        ParamJson {
            prime: self.fp.prime(),
            lambda: self.lambda.iter().map(|c| c.value()).collect(),
            w: strs(&self.w),
            v: self.v.iter().map(strs).collect(),
        }
    }

    pub fn from_json(j: &ParamJson) -> Result<Self> {
        let fp = Fp::new(j.prime)?;
        let poly = |cs: &[String]| -> Result<UniPoly> {
            cs.iter()
                .map(|s| fp.reduce_fraction(s))
                .collect::<Result<Vec<_>>>()
                .map(UniPoly::from_coeffs)
        };
        ZeroDimParam::new(
            fp,
            j.lambda.iter().map(|&l| fp.elem(l)).collect(),
            poly(&j.w)?,
            j.v.iter().map(|c| poly(c)).collect::<Result<_>>()?,
        )
    }
}

/// Serialized form: coefficients lowest degree first, as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamJson {
    pub prime: u64,
    pub lambda: Vec<u64>,
    pub w: Vec<String>,
    pub v: Vec<Vec<String>>,
}

fn univariate(p: &SparsePoly) -> UniPoly {
    let top = p.degree_in(0) as usize;
    let mut c = vec![Scalar::ZERO; top + 1];
    for (m, x) in p.terms() {
        c[m.exps()[0] as usize] = x;
    }
    UniPoly::from_coeffs(c)
}

/// Union of parametrizations with disjoint zero sets and a common linear form.
pub fn union(params: &[ZeroDimParam]) -> Result<ZeroDimParam> {
    let first = params
        .first()
        .ok_or_else(|| Error::ShapeError("union of no parametrizations".into()))?;
    let fp = first.fp;
    for p in &params[1..] {
        if p.fp != fp || p.lambda != first.lambda {
            return Err(Error::ShapeError(
                "parametrizations differ in field or linear form".into(),
            ));
        }
    }
    for (i, a) in params.iter().enumerate() {
        for b in &params[i + 1..] {
            if gcd(&a.w, &b.w, fp).degree() != Some(0) {
                return Err(Error::SharedRoots);
            }
        }
    }
    let moduli: Vec<UniPoly> = params.iter().map(|p| p.w.clone()).collect();
    let w = moduli.iter().fold(UniPoly::one(), |acc, m| acc.mul(m, fp));
    let v = (0..first.nvars())
        .map(|j| {
            let res: Vec<UniPoly> = params.iter().map(|p| p.v[j].clone()).collect();
            crt(&res, &moduli, fp)
        })
        .collect::<Result<Vec<_>>>()?;
    ZeroDimParam::new(fp, first.lambda.clone(), w, v)
}
