// Lift the roots of `x^2 = 1 + t` as power series, then read off `t = 1`.

use detsolve::homotopy::{lift, reconstruct_and_specialize};
use detsolve::mpoly::SparsePoly;
use detsolve::scalar::{Fp, Scalar};
use detsolve::ucalc::UniPoly;
use detsolve::zdp::ZeroDimParam;

pub fn run_example() -> Result<ZeroDimParam, Box<dyn std::error::Error>> {
    let fp = Fp::new(65521)?;
    // variables (t, x)
    let h = vec![SparsePoly::parse("x2^2-1-x1", 2, fp)?];
    let start = ZeroDimParam::new(
        fp,
        vec![Scalar::ONE],
        UniPoly::from_i64(fp, &[-1, 0, 1]),
        vec![UniPoly::y()],
    )?;
    for k in [2, 4, 8] {
        let p = lift(&start, &h, k)?;
        let w0: Vec<String> = p.w[0].coeffs().iter().map(|c| fp.signed(*c).to_string()).collect();
        println!("precision {k}: constant coefficient of w = [{}]", w0.join(", "));
    }
    let p = lift(&start, &h, 4)?;
    let at_one = reconstruct_and_specialize(&p, 1)?.param;
    println!("at t = 1: w = {}", at_one.w);
    Ok(at_one)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()?;
    Ok(())
}
