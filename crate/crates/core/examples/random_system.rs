// A random small determinantal system over F_31, solved by homotopy with
// random start data and checked against exhaustive search.

use detsolve::detsys::DetSystem;
use detsolve::gbsolve::brute_force_solve;
use detsolve::homotopy::{solve, SolveOptions};
use detsolve::mpoly::SparsePoly;
use detsolve::scalar::{Fp, Sampler};

pub fn run_example() -> Result<usize, Box<dyn std::error::Error>> {
    let fp = Fp::new(31)?;
    let mut s = Sampler::new(5);
    let mut dense = |deg: u32| {
        let terms: Vec<(Vec<u32>, _)> = (0..=deg)
            .flat_map(|a| (0..=deg - a).map(move |b| vec![a, b]))
            .map(|e| (e, s.scalar(fp, false)))
            .collect();
        SparsePoly::from_terms(fp, 2, terms)
    };
    // 2 x 2 matrix of linear forms plus one quadric, in two unknowns
    let f = vec![vec![dense(1)?, dense(1)?], vec![dense(1)?, dense(1)?]];
    let sys = DetSystem::new(fp, f, vec![dense(2)?])?;
    let (param, report) = solve(&sys, &SolveOptions { seed: 9, ..SolveOptions::default() })?;
    println!("chi = {}, output degree = {}, retries = {}", report.chi, param.degree(), report.retries);
    let mut ours = param.roots_in_base_field()?;
    let mut all = brute_force_solve(&sys.equations()?, fp)?;
    ours.sort();
    all.sort();
    for pt in &ours {
        println!("solution {:?}", pt.iter().map(|c| c.value()).collect::<Vec<_>>());
    }
    assert_eq!(ours, all);
    Ok(param.degree())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()?;
    Ok(())
}
