// Gröbner basis, quotient algebra and shape-lemma parametrization.

use detsolve::gbsolve::{brute_force_solve, groebner, quotient, solve_system};
use detsolve::mpoly::SparsePoly;
use detsolve::scalar::{Fp, Sampler};
use detsolve::zdp::ZeroDimParam;

pub fn run_example() -> Result<ZeroDimParam, Box<dyn std::error::Error>> {
    let fp = Fp::new(31)?;
    let system = vec![
        SparsePoly::parse("x1^2+x2^2-5", 2, fp)?,
        SparsePoly::parse("x1*x2-2", 2, fp)?,
    ];
    let gb = groebner(&system, fp)?;
    for g in gb.generators() {
        println!("  {g}");
    }
    let algebra = quotient(&gb)?;
    println!("dim of quotient: {}", algebra.dimension());

    let param = solve_system(&system, fp, &mut Sampler::new(0))?;
    println!("w = {}", param.w);
    for (i, v) in param.v.iter().enumerate() {
        println!("x{} = {}", i + 1, v);
    }
    let mut ours = param.roots_in_base_field()?;
    let mut all = brute_force_solve(&system, fp)?;
    ours.sort();
    all.sort();
    assert_eq!(ours, all);
    println!("{} rational points, matching enumeration", ours.len());
    Ok(param)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()?;
    Ok(())
}
