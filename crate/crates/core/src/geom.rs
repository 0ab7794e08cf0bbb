//! Lattice polytopes in small dimension.
//!
//! Everything is exact: orientation tests are integer determinants and
//! volumes are rationals. Hulls and volumes go through a placing
//! triangulation of the point set in coordinates where it is full-dimensional.

use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::mpoly::Support;

pub const MAX_HULL_DIM: usize = 6;
pub const MAX_MV_DIM: usize = 5;

pub type Point = Vec<i64>;

/// Convex hull of a finite lattice point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    points: Vec<Point>,
    vertices: Vec<Point>,
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The input points, deduplicated and sorted.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Hull vertices, sorted.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn from_support(support: &Support) -> Result<Polytope> {
        let pts: Vec<Point> = support
            .iter()
            .map(|m| m.exps().iter().map(|&e| e as i64).collect())
            .collect();
        let dim = pts.first().map_or(0, Vec::len);
        convex_hull(dim, &pts)
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> usize {
        affine_frame(&self.vertices).0
    }

    pub fn volume(&self) -> Ratio<i128> {
        Ratio::new(self.normalized_volume(), factorial(self.dim))
    }

    /// `n! vol`, an integer for lattice polytopes.
    pub fn normalized_volume(&self) -> i128 {
        let (k, coords) = affine_frame(&self.vertices);
        if k < self.dim {
            return 0;
        }
        let proj = project(&self.vertices, &coords);
        placing_triangulation(&proj)
            .iter()
            .map(|s| simplex_det(&proj, s).abs())
            .sum()
    }

    pub fn translate(&self, by: &[i64]) -> Polytope {
        let shift = |p: &Point| p.iter().zip(by).map(|(a, b)| a + b).collect();
        Polytope {
            dim: self.dim,
            points: self.points.iter().map(shift).collect(),
            vertices: self.vertices.iter().map(shift).collect(),
        }
    }
}

/// Hull of `points` in `Z^dim`.
pub fn convex_hull(dim: usize, points: &[Point]) -> Result<Polytope> {
    if dim > MAX_HULL_DIM {
        return Err(Error::DimensionTooLarge(dim));
    }
    if points.is_empty() {
        return Err(Error::ShapeError("empty point set".into()));
    }
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "point of length {} in dimension {dim}",
            p.len()
        )));
    }
    let set: BTreeSet<Point> = points.iter().cloned().collect();
    let points: Vec<Point> = set.into_iter().collect();
    let vertices = extreme_points(&points);
    Ok(Polytope {
        dim,
        points,
        vertices,
    })
}

pub fn volume(p: &Polytope) -> Ratio<i128> {
    p.volume()
}

pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch(format!(
            "Minkowski sum of dimensions {} and {}",
            p.dim, q.dim
        )));
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    convex_hull(p.dim, &sums)
}

/// Mixed volume normalized so that `n` standard simplices give 1.
pub fn mixed_volume(polytopes: &[Polytope]) -> Result<u64> {
    let n = polytopes.len();
    if n > MAX_MV_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    if n == 0 {
        return Err(Error::DimensionMismatch("no polytopes".into()));
    }
    if let Some(p) = polytopes.iter().find(|p| p.dim != n) {
        return Err(Error::DimensionMismatch(format!(
            "{n} polytopes but one lives in dimension {}",
            p.dim
        )));
    }
    let mut total: i128 = 0;
    for mask in 1u32..(1 << n) {
        let mut members = (0..n).filter(|i| mask & (1 << i) != 0);
        let mut sum = polytopes[members.next().expect("nonempty mask")].clone();
        for i in members {
            sum = minkowski_sum(&sum, &polytopes[i])?;
        }
        let v = sum.normalized_volume();
        if (n - mask.count_ones() as usize) % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    let mv = Ratio::new(total, factorial(n));
    if !mv.is_integer() || mv.is_negative() {
        return Err(Error::NonIntegralBound(format!("mixed volume {mv}")));
    }
    Ok(mv.to_integer() as u64)
}

fn factorial(n: usize) -> i128 {
    (1..=n as i128).product()
}

/// Affine dimension of `pts` and a coordinate subset on which the
/// projection of their affine hull is injective.
fn affine_frame(pts: &[Point]) -> (usize, Vec<usize>) {
    let Some(base) = pts.first() else {
        return (0, Vec::new());
    };
    let mut rows: Vec<Vec<i128>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| (a - b) as i128).collect())
        .collect();
    let pivots = row_reduce(&mut rows, base.len());
    (pivots.len(), pivots)
}

/// Integer row echelon form in place; returns the pivot columns.
fn row_reduce(rows: &mut [Vec<i128>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        for i in r + 1..rows.len() {
            if rows[i][c] == 0 {
                continue;
            }
            let (a, b) = (rows[r][c], rows[i][c]);
            let mut g = 0;
            for j in c..ncols {
                rows[i][j] = rows[i][j] * a - rows[r][j] * b;
                g = gcd(g, rows[i][j]);
            }
            if g > 1 {
                for x in &mut rows[i][c..] {
                    *x /= g;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn project(pts: &[Point], coords: &[usize]) -> Vec<Vec<i128>> {
    pts.iter()
        .map(|p| coords.iter().map(|&c| p[c] as i128).collect())
        .collect()
}

/// Determinant by fraction-free elimination.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// `det(v1 - v0, ..., vk - v0)` for the listed vertices.
fn orient(pts: &[Vec<i128>], idx: &[usize]) -> i128 {
    let base = &pts[idx[0]];
    det(idx[1..]
        .iter()
        .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect())
}

fn simplex_det(pts: &[Vec<i128>], s: &[usize]) -> i128 {
    orient(pts, s)
}

/// Placing triangulation of a full-dimensional point set in `Z^k`.
/// Returns simplices as index lists of length `k + 1`.
fn placing_triangulation(pts: &[Vec<i128>]) -> Vec<Vec<usize>> {
    place(pts).0
}

/// Simplices and the final boundary facets with their apexes.
fn place(pts: &[Vec<i128>]) -> (Vec<Vec<usize>>, HashMap<Vec<usize>, usize>) {
    let k = pts.first().map_or(0, Vec::len);
    if k == 0 {
        return (vec![vec![0]], HashMap::new());
    }
    // greedy affinely independent start
    let mut start = vec![0usize];
    for i in 1..pts.len() {
        if start.len() == k + 1 {
            break;
        }
        let mut trial = start.clone();
        trial.push(i);
        if rank_of(pts, &trial) == trial.len() - 1 {
            start = trial;
        }
    }
    assert_eq!(start.len(), k + 1, "point set is not full-dimensional");
    let used: BTreeSet<usize> = start.iter().copied().collect();
    let mut simplices = vec![start.clone()];
    // boundary facet (sorted vertex list) -> apex of the simplex it bounds
    let mut boundary: HashMap<Vec<usize>, usize> = HashMap::new();
    for (j, &apex) in start.iter().enumerate() {
        let mut f = start.clone();
        f.remove(j);
        f.sort_unstable();
        boundary.insert(f, apex);
    }
    for p in 0..pts.len() {
        if used.contains(&p) {
            continue;
        }
        let visible: Vec<(Vec<usize>, usize)> = boundary
            .iter()
            .filter(|(f, &apex)| {
                let mut a = f.to_vec();
                a.push(apex);
                let mut b = f.to_vec();
                b.push(p);
                let (sa, sb) = (orient(pts, &a).signum(), orient(pts, &b).signum());
                sa * sb < 0
            })
            .map(|(f, &a)| (f.clone(), a))
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut ridge_count: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
        for (f, _) in &visible {
            for j in 0..f.len() {
                let mut r = f.clone();
                let dropped = r.remove(j);
                let e = ridge_count.entry(r).or_insert((0, dropped));
                e.0 += 1;
            }
        }
        for (f, _) in &visible {
            boundary.remove(f);
            let mut s = f.clone();
            s.push(p);
            simplices.push(s);
        }
        for (r, (count, dropped)) in ridge_count {
            if count == 1 {
                let mut f = r;
                f.push(p);
                f.sort_unstable();
                boundary.insert(f, dropped);
            }
        }
    }
    (simplices, boundary)
}

fn rank_of(pts: &[Vec<i128>], idx: &[usize]) -> usize {
    let base = &pts[idx[0]];
    let mut rows: Vec<Vec<i128>> = idx[1..]
        .iter()
        .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    row_reduce(&mut rows, base.len()).len()
}

/// Outward normal `a` and offset `b` with `a.x <= b` on the hull.
fn facet_plane(pts: &[Vec<i128>], facet: &[usize], apex: usize) -> (Vec<i128>, i128) {
    let k = pts[0].len();
    let base = &pts[facet[0]];
    let diffs: Vec<Vec<i128>> = facet[1..]
        .iter()
        .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let mut normal: Vec<i128> = (0..k)
        .map(|j| {
            let minor: Vec<Vec<i128>> = diffs
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let d = if minor.is_empty() { 1 } else { det(minor) };
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    let g = normal.iter().fold(0, |g, &x| gcd(g, x));
    for x in &mut normal {
        *x /= g;
    }
    let dot = |p: &Vec<i128>| p.iter().zip(&normal).map(|(a, b)| a * b).sum::<i128>();
    let mut offset = dot(base);
    if dot(&pts[apex]) > offset {
        for x in &mut normal {
            *x = -*x;
        }
        offset = -offset;
    }
    (normal, offset)
}

/// Points at which the tight facet normals span the whole space.
fn extreme_points(points: &[Point]) -> Vec<Point> {
    if points.len() <= 2 {
        return points.to_vec();
    }
    let (k, coords) = affine_frame(points);
    if k == 0 {
        return points[..1].to_vec();
    }
    let proj = project(points, &coords);
    let (_, boundary) = place(&proj);
    let planes: BTreeSet<(Vec<i128>, i128)> = boundary
        .iter()
        .map(|(f, &apex)| facet_plane(&proj, f, apex))
        .collect();
    let mut out = Vec::new();
    for (p, q) in points.iter().zip(&proj) {
        let mut tight: Vec<Vec<i128>> = planes
            .iter()
            .filter(|(a, b)| q.iter().zip(a).map(|(x, y)| x * y).sum::<i128>() == *b)
            .map(|(a, _)| a.clone())
            .collect();
        if row_reduce(&mut tight, k).len() == k {
            out.push(p.clone());
        }
    }
    out
}
