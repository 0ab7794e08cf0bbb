// Recover a rational function from its truncated power series.

use detsolve::scalar::Fp;
use detsolve::ucalc::{pade, Ring, Series, SeriesRing, UniPoly};

pub fn run_example() -> Result<(UniPoly, UniPoly), Box<dyn std::error::Error>> {
    let fp = Fp::new(65521)?;
    let num = UniPoly::from_i64(fp, &[3, -1, 4]);
    let den = UniPoly::from_i64(fp, &[1, 5, 0, 2]);
    let k = 2 + 3 + 1;
    let ring = SeriesRing::new(fp, k);
    let s = ring.mul(&Series::from_poly(&num, k), &ring.inv(&Series::from_poly(&den, k))?);
    println!("series: {:?}", s.coeffs().iter().map(|c| fp.signed(*c)).collect::<Vec<_>>());
    let (n, d) = pade(&s, 2, 3, fp)?;
    println!("num = {n}\nden = {d}");
    assert_eq!((&n, &d), (&num, &den));
    Ok((n, d))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()?;
    Ok(())
}
