//! Line-oriented system files.
//!
//! ```text
//! prime 65521
//! vars x1 .. x3
//! weights 1 1 1          # optional
//! g 1
//! <s polynomial lines>
//! F 2 3
//! <p*q polynomial lines, row-major>
//! start-r 1              # optional replay of explicit start data
//! start-m 3
//! start-c 2 3
//! <p lines of q integers>
//! ```

use crate::detsys::DetSystem;
use crate::error::{Error, Result};
use crate::homotopy::StartData;
use crate::mpoly::{parse_poly, SparsePoly};
use crate::scalar::{Fp, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub sys: DetSystem,
    pub names: Vec<String>,
    pub weights: Option<Vec<u64>>,
    pub start: Option<StartData>,
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { lines, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let l = self.lines.get(self.pos).copied();
        self.pos += 1;
        l
    }

    fn body(&mut self, header: usize, count: usize) -> Result<Vec<(usize, &'a str)>> {
        (0..count)
            .map(|_| {
                self.next()
                    .ok_or_else(|| perr(header, 1, "block ends before all its lines"))
            })
            .collect()
    }
}

fn perr(line: usize, column: usize, message: &str) -> Error {
    Error::Parse {
        line,
        column,
        message: message.to_string(),
    }
}

fn numbers<T: std::str::FromStr>(line: usize, words: &[&str]) -> Result<Vec<T>> {
    words
        .iter()
        .map(|w| {
            w.parse()
                .map_err(|_| perr(line, 1, &format!("expected a number, got {w:?}")))
        })
        .collect()
}

fn split_index(name: &str) -> Option<(&str, u64)> {
    let cut = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (prefix, digits) = name.split_at(cut);
    digits.parse().ok().map(|k| (prefix, k))
}

fn var_names(line: usize, words: &[&str]) -> Result<Vec<String>> {
    if words.len() == 3 && words[1] == ".." {
        let range = split_index(words[0]).zip(split_index(words[2]));
        return match range {
            Some(((a, lo), (b, hi))) if a == b && lo <= hi => {
                Ok((lo..=hi).map(|k| format!("{a}{k}")).collect())
            }
            _ => Err(perr(line, 1, "bad variable range")),
        };
    }
    if words.is_empty() {
        return Err(perr(line, 1, "no variables"));
    }
    Ok(words.iter().map(|w| w.to_string()).collect())
}

fn poly_at(line: usize, text: &str, names: &[String], fp: Fp) -> Result<SparsePoly> {
    parse_poly(text, names, fp).map_err(|e| match e {
        Error::Parse {
            column, message, ..
        } => Error::Parse {
            line,
            column,
            message,
        },
        other => other,
    })
}

/// Parse a system file; `prime` overrides the file's `prime` line.
pub fn parse(text: &str, prime: Option<u64>) -> Result<SystemFile> {
    let mut lines = Lines::new(text);
    let mut fp = prime.map(Fp::new).transpose()?;
    let mut names: Option<Vec<String>> = None;
    let mut weights = None;
    let mut g_lines = Vec::new();
    let mut f_block: Option<(usize, usize, Vec<(usize, &str)>)> = None;
    let mut r_lines = None;
    let mut m_lines = None;
    let mut c_rows: Option<Vec<Vec<i64>>> = None;
    while let Some((ln, line)) = lines.next() {
        let words: Vec<&str> = line.split_whitespace().collect();
        let args = &words[1..];
        let want = |k: usize| -> Result<Vec<usize>> {
            let v: Vec<usize> = numbers(ln, args)?;
            if v.len() != k {
                return Err(perr(ln, 1, &format!("{} takes {k} argument(s)", words[0])));
            }
            Ok(v)
        };
        match words[0] {
            "prime" => {
                let p: Vec<u64> = numbers(ln, args)?;
                if p.len() != 1 {
                    return Err(perr(ln, 1, "prime takes one argument"));
                }
                if prime.is_none() {
                    fp = Some(Fp::new(p[0])?);
                }
            }
            "vars" => names = Some(var_names(ln, args)?),
            "weights" => weights = Some(numbers::<u64>(ln, args)?),
            "g" => g_lines = lines.body(ln, want(1)?[0])?,
            "F" => {
                let v = want(2)?;
                f_block = Some((v[0], v[1], lines.body(ln, v[0] * v[1])?));
            }
            "start-r" => r_lines = Some(lines.body(ln, want(1)?[0])?),
            "start-m" => m_lines = Some(lines.body(ln, want(1)?[0])?),
            "start-c" => {
                let v = want(2)?;
                let rows = lines.body(ln, v[0])?;
                let mut parsed = Vec::new();
                for (rl, row) in rows {
                    let words: Vec<&str> = row.split_whitespace().collect();
                    let r: Vec<i64> = numbers(rl, &words)?;
                    if r.len() != v[1] {
                        return Err(perr(rl, 1, "wrong number of multipliers"));
                    }
                    parsed.push(r);
                }
                c_rows = Some(parsed);
            }
            other => return Err(perr(ln, 1, &format!("unknown directive {other:?}"))),
        }
    }
    let fp = fp.ok_or_else(|| perr(1, 1, "missing prime"))?;
    let names = names.ok_or_else(|| perr(1, 1, "missing vars"))?;
    let polys = |block: &[(usize, &str)]| -> Result<Vec<SparsePoly>> {
        block.iter().map(|(l, t)| poly_at(*l, t, &names, fp)).collect()
    };
    let (p, q, f_lines) = f_block.ok_or_else(|| perr(1, 1, "missing F block"))?;
    let flat = polys(&f_lines)?;
    let f: Vec<Vec<SparsePoly>> = flat.chunks(q.max(1)).map(|c| c.to_vec()).collect();
    if p == 0 || q == 0 {
        return Err(Error::ShapeError("F must be nonempty".into()));
    }
    let sys = DetSystem::new(fp, f, polys(&g_lines)?)?;
    if let Some(w) = &weights {
        if w.len() != sys.n {
            return Err(Error::ArityMismatch {
                expected: sys.n,
                got: w.len(),
            });
        }
    }
    let start = match (r_lines, m_lines, c_rows) {
        (None, None, None) => None,
        (r, Some(m), Some(c)) => {
            let c = c
                .iter()
                .map(|row| row.iter().map(|&x| fp.from_i64(x)).collect())
                .collect();
            Some(StartData::from_parts(
                &sys,
                polys(&r.unwrap_or_default())?,
                polys(&m)?,
                c,
            )?)
        }
        _ => {
            return Err(Error::ShapeError(
                "start data needs start-m and start-c blocks".into(),
            ))
        }
    };
    Ok(SystemFile {
        sys,
        names,
        weights,
        start,
    })
}

/// Render in the format read by [`parse`].
pub fn emit(file: &SystemFile) -> String {
    let sys = &file.sys;
    let names = &file.names;
    let mut out = format!("prime {}\nvars {}\n", sys.fp.prime(), names.join(" "));
    let poly = |f: &SparsePoly| format!("{}\n", f.display_with(names));
    if let Some(w) = &file.weights {
        let ws: Vec<String> = w.iter().map(u64::to_string).collect();
        out += &format!("weights {}\n", ws.join(" "));
    }
    out += &format!("g {}\n", sys.s);
    for g in &sys.g {
        out += &poly(g);
    }
    out += &format!("F {} {}\n", sys.p, sys.q);
    for f in sys.f.iter().flatten() {
        out += &poly(f);
    }
    if let Some(st) = &file.start {
        out += &format!("start-r {}\n", st.r.len());
        for r in &st.r {
            out += &poly(r);
        }
        out += &format!("start-m {}\n", st.m.len());
        for m in &st.m {
            out += &poly(m);
        }
        out += &format!("start-c {} {}\n", st.c.len(), sys.q);
        for row in &st.c {
            let r: Vec<String> = row.iter().map(Scalar::to_string).collect();
            out += &format!("{}\n", r.join(" "));
        }
    }
    out
}
