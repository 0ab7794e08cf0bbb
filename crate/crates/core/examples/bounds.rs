// Root-count bounds for the bundled determinantal system.

use detsolve::detsys::{bounds_report, count_weighted_monomials, weighted_bounds, BoundsReport};
use detsolve::sysfile;

const SYSTEM: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/fixtures/worked_example/system.sys"
));

pub fn run_example() -> Result<BoundsReport, Box<dyn std::error::Error>> {
    let file = sysfile::parse(SYSTEM, None)?;
    let report = bounds_report(&file.sys)?;
    for s in &report.subsets {
        println!("columns {:?}: chi {} rho {}", s.columns, s.chi, s.rho);
    }
    println!("chi = {}, rho = {}, total-degree bound = {}", report.chi, report.rho, report.dense);

    let wb = weighted_bounds(&file.sys, &[1, 1, 1])?;
    println!("weighted: c = {}, kappa = {}, e = {}", wb.c, wb.kappa, wb.e);
    println!(
        "monomials of weighted degree <= 10: {} (weights 5,3,2) vs {} (unweighted)",
        count_weighted_monomials(3, &[5, 3, 2], 10)?,
        count_weighted_monomials(3, &[1, 1, 1], 10)?
    );
    Ok(report)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()?;
    Ok(())
}
