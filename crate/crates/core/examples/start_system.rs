// Start systems: random column-support data, and the replayed one.

use detsolve::homotopy::{build_start, solve_start};
use detsolve::scalar::Scalar;
use detsolve::sysfile;
use detsolve::zdp::ZeroDimParam;

const SYSTEM: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/worked_example/system.sys"
));

pub fn run_example() -> Result<ZeroDimParam, Box<dyn std::error::Error>> {
    let file = sysfile::parse(SYSTEM, None)?;
    let sys = &file.sys;
    let lambda = vec![Scalar::ZERO, Scalar::ZERO, Scalar::ONE];

    let random = build_start(sys, 42);
    let sol = solve_start(sys, &random, &lambda)?;
    println!("random start: {} points", sol.param.degree());

    let replay = file.start.as_ref().ok_or("fixture has start data")?;
    let sol = solve_start(sys, replay, &lambda)?;
    for (cols, p) in &sol.parts {
        let cols: Vec<usize> = cols.iter().map(|j| j + 1).collect();
        println!("columns {:?}: w = {}", cols, p.w);
    }
    println!("union: w = {}", sol.param.w);
    sol.param.verify_against(&replay.as_system(sys.fp)?.equations()?)?;
    Ok(sol.param)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()?;
    Ok(())
}
