//! Sparse multivariate polynomials over `F_p`.
//!
//! Terms are kept in a map keyed by [`Monomial`], whose ordering is graded
//! lexicographic, so iteration and serialization are canonical. The zero
//! polynomial has no terms and no stored coefficient is ever zero.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Fp, Scalar};

/// An exponent vector `(a_1, ..., a_n)`, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| b.checked_sub(*a))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite set of exponent vectors.
pub type Support = BTreeSet<Monomial>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Scalar::ONE)
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { nvars, terms }
    }

    /// Build from `(exponents, coefficient)` pairs, combining duplicates.
    pub fn from_terms<I>(fp: Fp, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Scalar)>,
    {
        let mut p = SparsePoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: e.len(),
                });
            }
            p.add_term(fp, Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, Scalar)> + '_ {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).copied().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn add_term(&mut self, fp: Fp, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = fp.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_arity(&self, other: &SparsePoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePoly, fp: Fp) -> Result<SparsePoly> {
        self.check_arity(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(fp, m.clone(), *c);
        }
        Ok(r)
    }

    pub fn sub(&self, other: &SparsePoly, fp: Fp) -> Result<SparsePoly> {
        self.check_arity(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(fp, m.clone(), fp.neg(*c));
        }
        Ok(r)
    }

    pub fn neg(&self, fp: Fp) -> SparsePoly {
        self.scale(fp.neg(fp.one()), fp)
    }

    pub fn scale(&self, c: Scalar, fp: Fp) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), fp.mul(*a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly, fp: Fp) -> Result<SparsePoly> {
        self.check_arity(other)?;
        let mut r = SparsePoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                r.add_term(fp, ma.checked_mul(mb)?, fp.mul(*ca, *cb));
            }
        }
        Ok(r)
    }

    pub fn pow(&self, e: u32, fp: Fp) -> Result<SparsePoly> {
        let mut r = SparsePoly::constant(self.nvars, fp.one());
        for _ in 0..e {
            r = r.mul(self, fp)?;
        }
        Ok(r)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[Scalar], fp: Fp) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        // cache powers per variable up to the largest exponent used
        let powers: Vec<Vec<Scalar>> = (0..self.nvars)
            .map(|i| {
                let top = self.degree_in(i) as usize;
                let mut v = Vec::with_capacity(top + 1);
                v.push(fp.one());
                for k in 1..=top {
                    v.push(fp.mul(v[k - 1], point[i]));
                }
                v
            })
            .collect();
        let mut acc = fp.zero();
        for (m, c) in &self.terms {
            let mut t = *c;
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = fp.mul(t, powers[i][e as usize]);
                }
            }
            acc = fp.add(acc, t);
        }
        Ok(acc)
    }

    pub fn support(&self, add_origin: bool) -> Support {
        let mut s: Support = self.terms.keys().cloned().collect();
        if add_origin {
            s.insert(Monomial::one(self.nvars));
        }
        s
    }

    pub fn derivative(&self, var: usize, fp: Fp) -> SparsePoly {
        let mut r = SparsePoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut d = m.0.clone();
            d[var] -= 1;
            r.add_term(fp, Monomial(d), fp.mul(*c, fp.elem(e as u64)));
        }
        r
    }

    /// Sum of the terms minimizing `<e, alpha>` over the support.
    pub fn initial_form(&self, direction: &[Rational64]) -> Result<SparsePoly> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if direction.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: direction.len(),
            });
        }
        if direction.iter().all(Zero::is_zero) {
            return Err(Error::ZeroDirection);
        }
        let dot = |m: &Monomial| -> Rational64 {
            m.0.iter()
                .zip(direction)
                .map(|(&a, e)| *e * Rational64::from_integer(a as i64))
                .sum()
        };
        let min = self.terms.keys().map(dot).min().expect("nonzero");
        Ok(SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| dot(m) == min)
                .map(|(m, c)| (m.clone(), *c))
                .collect(),
        })
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> Result<u64> {
        if weights.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: weights.len(),
            });
        }
        self.terms
            .keys()
            .map(|m| m.weighted_degree(weights))
            .max()
            .ok_or(Error::ZeroInput)
    }

    /// Embed into `extra + nvars` variables, the new ones placed first.
    pub fn prepend_vars(&self, extra: usize) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; extra];
                    e.extend_from_slice(&m.0);
                    (Monomial(e), *c)
                })
                .collect(),
        }
    }

    /// Substitute `x_var = value` and drop that variable.
    pub fn specialize(&self, var: usize, value: Scalar, fp: Fp) -> SparsePoly {
        let mut r = SparsePoly::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e.remove(var);
            r.add_term(fp, Monomial(e), fp.mul(*c, fp.pow(value, k as u64)));
        }
        r
    }

    /// Render with residues in `[0, p)` using the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }

    /// Parse the textual syntax, variables named `x1..xn`.
    pub fn parse(text: &str, nvars: usize, fp: Fp) -> Result<SparsePoly> {
        let names = default_var_names(nvars);
        parse_poly(text, &names, fp)
    }
}

pub fn default_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

struct PolyDisplay<'a> {
    poly: &'a SparsePoly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.poly.terms.iter().rev() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let mut factors = Vec::new();
            if c.value() != 1 || m.is_one() {
                factors.push(c.value().to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_var_names(self.nvars);
        let shown = PolyDisplay { poly: self, names: &names };
        write!(f, "{shown}")
    }
}

/// Union of the supports of a matrix column, origin adjoined.
pub fn column_support(column: &[SparsePoly]) -> Result<Support> {
    let first = column
        .first()
        .ok_or_else(|| Error::ShapeError("empty column".into()))?;
    let mut s = Support::new();
    for f in column {
        first.check_arity(f)?;
        s.extend(f.terms.keys().cloned());
    }
    s.insert(Monomial::one(first.nvars));
    Ok(s)
}

/// Parse `99*x1^3+92*x1^2-228*x1*x2+...` over the named variables.
///
/// Coefficients are decimal integers of any length, optionally written as a
/// fraction `a/b`; whitespace is ignored.
pub fn parse_poly(text: &str, names: &[String], fp: Fp) -> Result<SparsePoly> {
    let nvars = names.len();
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let err = |pos: usize, msg: &str| Error::Parse {
        line: 1,
        column: pos + 1,
        message: msg.to_string(),
    };
    if chars.is_empty() {
        return Err(err(0, "empty polynomial"));
    }
    let mut poly = SparsePoly::zero(nvars);
    let mut i = 0;
    while i < chars.len() {
        let mut negative = false;
        let mut saw_sign = false;
        while i < chars.len() && (chars[i].1 == '+' || chars[i].1 == '-') {
            if chars[i].1 == '-' {
                negative = !negative;
            }
            saw_sign = true;
            i += 1;
        }
        if i > 0 && !saw_sign {
            return Err(err(chars[i].0, "expected '+' or '-'"));
        }
        if i >= chars.len() {
            return Err(err(text.len(), "dangling sign"));
        }
        let mut coeff = fp.one();
        let mut exps = vec![0u32; nvars];
        let mut expect_factor = true;
        while expect_factor {
            expect_factor = false;
            let start = i;
            let (pos, ch) = chars[i];
            if ch.is_ascii_digit() {
                let mut s = String::new();
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '/') {
                    s.push(chars[i].1);
                    i += 1;
                }
                let c = fp.reduce_fraction(&s).map_err(|e| match e {
                    Error::Parse { message, .. } => err(pos, &message),
                    other => other,
                })?;
                coeff = fp.mul(coeff, c);
            } else if ch.is_alphabetic() || ch == '_' {
                let mut s = String::new();
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    s.push(chars[i].1);
                    i += 1;
                }
                let var = names
                    .iter()
                    .position(|n| *n == s)
                    .ok_or_else(|| err(pos, &format!("unknown variable {s:?}")))?;
                let mut e = 1u32;
                if i < chars.len() && chars[i].1 == '^' {
                    i += 1;
                    let epos = chars.get(i).map(|c| c.0).unwrap_or(text.len());
                    let mut digits = String::new();
                    while i < chars.len() && chars[i].1.is_ascii_digit() {
                        digits.push(chars[i].1);
                        i += 1;
                    }
                    e = digits
                        .parse()
                        .map_err(|_| err(epos, "bad exponent"))?;
                }
                exps[var] = exps[var]
                    .checked_add(e)
                    .ok_or(Error::ExponentOverflow)?;
            } else {
                return Err(err(pos, &format!("unexpected {ch:?}")));
            }
            debug_assert!(i > start);
            if i < chars.len() && chars[i].1 == '*' {
                i += 1;
                if i >= chars.len() {
                    return Err(err(text.len(), "dangling '*'"));
                }
                expect_factor = true;
            }
        }
        if negative {
            coeff = fp.neg(coeff);
        }
        poly.add_term(fp, Monomial(exps), coeff);
        if i < chars.len() && chars[i].1 != '+' && chars[i].1 != '-' {
            return Err(err(chars[i].0, "expected '+' or '-'"));
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Sampler;
    use proptest::prelude::*;

    fn f7() -> Fp {
        Fp::new(7).unwrap()
    }

    fn g6(fp: Fp) -> SparsePoly {
        SparsePoly::parse("99*x1^3+92*x1^2-228*x1*x2+67*x1-140*x2+98*x3+25", 3, fp).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn random_poly(fp: Fp, s: &mut Sampler, nvars: usize, deg: u32, dense: bool) -> SparsePoly {
        let mut p = SparsePoly::zero(nvars);
        let mut rec = |p: &mut SparsePoly, e: Vec<u32>| {
            if dense || s.below(2) == 0 {
                p.add_term(fp, Monomial(e), s.scalar(fp, true));
            }
        };
        for a in 0..=deg {
            for b in 0..=(deg - a) {
                if nvars == 2 {
                    rec(&mut p, vec![a, b]);
                } else {
                    for c in 0..=(deg - a - b) {
                        rec(&mut p, vec![a, b, c]);
                    }
                }
            }
        }
        p
    }

    #[test]
    fn arithmetic_examples() {
        let fp = f7();
        let x = SparsePoly::parse("x1+1", 1, fp).unwrap();
        let y = SparsePoly::parse("x1-1", 1, fp).unwrap();
        assert_eq!(
            x.mul(&y, fp).unwrap(),
            SparsePoly::parse("x1^2-1", 1, fp).unwrap()
        );
        assert!(x.add(&x.neg(fp), fp).unwrap().is_zero());
        let z = SparsePoly::zero(2);
        assert!(x.add(&z, fp).is_err());
    }

    #[test]
    fn degree_of_product_matches_brute_force_expansion() {
        let fp = Fp::new(101).unwrap();
        let mut s = Sampler::new(11);
        for _ in 0..20 {
            let a = random_poly(fp, &mut s, 2, 3, true);
            let b = random_poly(fp, &mut s, 2, 2, true);
            // oracle: expand by nested loops over dense coefficient arrays
            let mut dense = [[0u64; 8]; 8];
            for (ma, ca) in a.terms() {
                for (mb, cb) in b.terms() {
                    let (i, j) = (ma.exps()[0] + mb.exps()[0], ma.exps()[1] + mb.exps()[1]);
                    dense[i as usize][j as usize] =
                        (dense[i as usize][j as usize] + ca.value() * cb.value()) % 101;
                }
            }
            let oracle_deg = (0..8)
                .flat_map(|i| (0..8).map(move |j| (i, j)))
                .filter(|&(i, j)| dense[i][j] != 0)
                .map(|(i, j)| (i + j) as u64)
                .max();
            let prod = a.mul(&b, fp).unwrap();
            assert_eq!(prod.total_degree(), oracle_deg);
            assert_eq!(prod.total_degree(), Some(5));
        }
    }

    #[test]
    fn evaluation_examples() {
        let fp = Fp::new(65521).unwrap();
        let g = g6(fp);
        let one = [fp.one(); 3];
        assert_eq!(g.eval(&one, fp).unwrap(), fp.elem(13));
        assert_eq!(g.eval(&[fp.zero(); 3], fp).unwrap(), fp.elem(25));
        assert!(g.eval(&[fp.one(); 2], fp).is_err());
    }

    #[test]
    fn supports() {
        let fp = Fp::new(65521).unwrap();
        let g = g6(fp);
        let expected: Support = [
            [3, 0, 0],
            [2, 0, 0],
            [1, 1, 0],
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [0, 0, 0],
        ]
        .iter()
        .map(|e| mono(e))
        .collect();
        assert_eq!(g.support(false), expected);
        assert_eq!(
            SparsePoly::zero(3).support(true),
            [mono(&[0, 0, 0])].into_iter().collect()
        );
    }

    #[test]
    fn column_supports_of_worked_example() {
        let fp = Fp::new(65521).unwrap();
        let p = |s: &str| SparsePoly::parse(s, 3, fp).unwrap();
        let col1 = [
            p("9*x1^2+65471*x1+59*x2+42308*x3+65504"),
            p("65501*x1^2+51*x1+65466*x2+57496*x3+35"),
        ];
        let col3 = [p("65477*x1+59898*x3+76"), p("65454*x1+41178*x3+65453")];
        let b1: Support = [[2, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]]
            .iter()
            .map(|e| mono(e))
            .collect();
        let b3: Support = [[1, 0, 0], [0, 0, 1], [0, 0, 0]]
            .iter()
            .map(|e| mono(e))
            .collect();
        assert_eq!(column_support(&col1).unwrap(), b1);
        assert_eq!(column_support(&col3).unwrap(), b3);
        let zeros = [SparsePoly::zero(3), SparsePoly::zero(3)];
        assert_eq!(
            column_support(&zeros).unwrap(),
            [mono(&[0, 0, 0])].into_iter().collect()
        );
        assert!(column_support(&[SparsePoly::zero(3), SparsePoly::zero(2)]).is_err());
    }

    #[test]
    fn initial_forms() {
        let fp = Fp::new(101).unwrap();
        let f = SparsePoly::parse("x1^2+x1*x2+x1+1", 2, fp).unwrap();
        let r = |a: i64| Rational64::from_integer(a);
        // dot products with (-1,0): -2, -1, -1, 0
        assert_eq!(
            f.initial_form(&[r(-1), r(0)]).unwrap(),
            SparsePoly::parse("x1^2", 2, fp).unwrap()
        );
        assert_eq!(
            f.initial_form(&[r(1), Rational64::new(1, 3)]).unwrap(),
            SparsePoly::parse("1", 2, fp).unwrap()
        );
        assert_eq!(f.initial_form(&[r(0), r(0)]), Err(Error::ZeroDirection));
        assert_eq!(
            SparsePoly::zero(2).initial_form(&[r(1), r(0)]),
            Err(Error::ZeroInput)
        );
    }

    #[test]
    fn initial_form_is_multiplicative() {
        let fp = Fp::new(101).unwrap();
        let mut s = Sampler::new(5);
        for _ in 0..30 {
            let a = random_poly(fp, &mut s, 3, 3, false);
            let b = random_poly(fp, &mut s, 3, 2, false);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let e: Vec<Rational64> = (0..3)
                .map(|_| Rational64::new(s.below(7) as i64 - 3, 1 + s.below(3) as i64))
                .collect();
            if e.iter().all(Zero::is_zero) {
                continue;
            }
            let lhs = a.mul(&b, fp).unwrap().initial_form(&e).unwrap();
            let rhs = a
                .initial_form(&e)
                .unwrap()
                .mul(&b.initial_form(&e).unwrap(), fp)
                .unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.initial_form(&e).unwrap(), lhs);
        }
    }

    #[test]
    fn weighted_degrees() {
        let fp = Fp::new(101).unwrap();
        let f = SparsePoly::parse("x1^2*x3", 3, fp).unwrap();
        assert_eq!(f.weighted_degree(&[5, 3, 2]).unwrap(), 12);
        let g = g6(fp);
        assert_eq!(g.weighted_degree(&[1, 1, 1]).unwrap(), g.total_degree().unwrap());
        assert_eq!(
            SparsePoly::zero(3).weighted_degree(&[1, 1, 1]),
            Err(Error::ZeroInput)
        );
        let mut s = Sampler::new(9);
        for _ in 0..20 {
            let a = random_poly(fp, &mut s, 3, 3, false);
            let b = random_poly(fp, &mut s, 3, 2, false);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let w = [1 + s.below(4) as u64, 1 + s.below(4) as u64, 1 + s.below(4) as u64];
            assert_eq!(
                a.mul(&b, fp).unwrap().weighted_degree(&w).unwrap(),
                a.weighted_degree(&w).unwrap() + b.weighted_degree(&w).unwrap()
            );
        }
    }

    #[test]
    fn parse_errors() {
        let fp = f7();
        assert!(matches!(
            SparsePoly::parse("x1+y", 1, fp),
            Err(Error::Parse { column: 4, .. })
        ));
        assert!(SparsePoly::parse("x1+", 1, fp).is_err());
        assert!(SparsePoly::parse("x1 x1", 1, fp).is_err());
        assert!(SparsePoly::parse("", 1, fp).is_err());
        assert!(SparsePoly::parse("2*", 1, fp).is_err());
        assert_eq!(
            SparsePoly::parse("- 3*x1 + x1*x1 + 0", 1, fp).unwrap(),
            SparsePoly::parse("x1^2+4*x1", 1, fp).unwrap()
        );
    }

    #[test]
    fn display_is_canonical() {
        let fp = Fp::new(65521).unwrap();
        assert_eq!(
            g6(fp).to_string(),
            "99*x1^3+92*x1^2+65293*x1*x2+67*x1+65381*x2+98*x3+25"
        );
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u32>, u64)>> {
        prop::collection::vec((prop::collection::vec(0u32..4, 3), 0u64..101), 0..8)
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(terms in arb_poly()) {
            let fp = Fp::new(101).unwrap();
            let p = SparsePoly::from_terms(fp, 3, terms.into_iter().map(|(e, c)| (e, fp.elem(c)))).unwrap();
            let text = p.to_string();
            prop_assert_eq!(SparsePoly::parse(&text, 3, fp).unwrap(), p);
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), pt in prop::collection::vec(0u64..101, 3)) {
            let fp = Fp::new(101).unwrap();
            let mk = |t: Vec<(Vec<u32>, u64)>| SparsePoly::from_terms(fp, 3, t.into_iter().map(|(e, c)| (e, fp.elem(c)))).unwrap();
            let (a, b) = (mk(a), mk(b));
            let pt: Vec<Scalar> = pt.into_iter().map(|v| fp.elem(v)).collect();
            let (ea, eb) = (a.eval(&pt, fp).unwrap(), b.eval(&pt, fp).unwrap());
            prop_assert_eq!(a.mul(&b, fp).unwrap().eval(&pt, fp).unwrap(), fp.mul(ea, eb));
            prop_assert_eq!(a.add(&b, fp).unwrap().eval(&pt, fp).unwrap(), fp.add(ea, eb));
        }

        #[test]
        fn support_of_sum(a in arb_poly(), b in arb_poly()) {
            let fp = Fp::new(101).unwrap();
            let mk = |t: Vec<(Vec<u32>, u64)>| SparsePoly::from_terms(fp, 3, t.into_iter().map(|(e, c)| (e, fp.elem(c)))).unwrap();
            let (a, b) = (mk(a), mk(b));
            let sum = a.add(&b, fp).unwrap();
            let union: Support = sum.support(false).union(&b.support(false)).cloned().collect();
            prop_assert!(a.support(false).is_subset(&union));
        }
    }
}
