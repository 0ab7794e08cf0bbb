// Mixed volumes of lattice polytopes, and the root count they predict.

use detsolve::gbsolve::{groebner, quotient};
use detsolve::geom::{convex_hull, mixed_volume, Polytope};
use detsolve::mpoly::SparsePoly;
use detsolve::scalar::{Fp, Sampler};

pub fn run_example() -> Result<u64, Box<dyn std::error::Error>> {
    let simplex = convex_hull(2, &[vec![0, 0], vec![1, 0], vec![0, 1]])?;
    let square = convex_hull(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])?;
    println!("vol(square) = {}", square.volume());
    let mv = mixed_volume(&[simplex.clone(), square.clone()])?;
    println!("MV(simplex, square) = {mv}");
    assert_eq!(mixed_volume(&[simplex.clone(), simplex])?, 1);

    // a generic system with these supports has exactly MV roots
    let fp = Fp::new(101)?;
    let mut s = Sampler::new(1);
    let f = SparsePoly::from_terms(
        fp,
        2,
        [vec![0, 0], vec![1, 0], vec![0, 1]].map(|e| (e, s.scalar(fp, true))),
    )?;
    let g = SparsePoly::from_terms(
        fp,
        2,
        [vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]].map(|e| (e, s.scalar(fp, true))),
    )?;
    let count = quotient(&groebner(&[f.clone(), g.clone()], fp)?)?.dimension() as u64;
    println!("roots of f = g = 0: {count}");
    let from_support = mixed_volume(&[
        Polytope::from_support(&f.support(true))?,
        Polytope::from_support(&g.support(true))?,
    ])?;
    assert_eq!(count, from_support);
    Ok(mv)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()?;
    Ok(())
}
