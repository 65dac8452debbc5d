//! Factors x^n - 1 over F2, lists its divisors, and checks the
//! 2^i = -1 (mod m) condition for small odd m.

use dnacyclic::binpoly::{self, BinaryPoly};

fn main() -> dnacyclic::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(7), |s| s.parse()).expect("n must be a number");
    print!("{}", dnacyclic::reproduce::factor_report(n)?);
    let divisors = binpoly::divisors_of_xn_minus_1(n)?;
    println!("divisors: {}", divisors.len());
    for d in &divisors {
        let tag = if d.is_self_reciprocal() { " (self-reciprocal)" } else { "" };
        println!("  {d}{tag}");
    }
    let m: Vec<u64> = (1..40).step_by(2).filter(|&m| binpoly::two_power_condition(m).unwrap_or(false)).collect();
    println!("odd m < 40 with 2^i = -1 (mod m) for some i: {m:?}");
    let f: BinaryPoly = "x^3+x+1".parse()?;
    println!("reciprocal of {f}: {}", f.reciprocal()?);
    Ok(())
}
