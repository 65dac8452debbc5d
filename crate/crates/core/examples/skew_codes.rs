//! Skew cyclic codes over F2+vF2: monic right divisors of x^n-1, the
//! two-sided factorization, and the reverse-complement checks.

use std::time::Instant;

use dnacyclic::skew::{self, SkewCode, SkewGenerators, SkewPoly};

fn main() -> dnacyclic::Result<()> {
    for n in [2, 4, 6, 8, 10] {
        let t = Instant::now();
        let divisors = skew::monic_right_divisors(n);
        let xn1 = SkewPoly::x_n_minus_1(n);
        let two_sided = divisors.iter().filter(|(g, q)| g.mul(q) == xn1).count();
        let codes = skew::all_single_generator_codes(n)?;
        let reports: Vec<_> = codes.iter().map(|c| skew::skew_rc_checks(c, 1 << 16)).collect();
        let suff = reports.iter().filter(|r| r.sufficiency_violated).count();
        let nec = reports.iter().filter(|r| r.necessity_violated).count();
        println!(
            "n={n}: {} monic right divisors, {two_sided} two-sided, {} codes, sufficiency violations {suff}, necessity violations {nec} ({:?})",
            divisors.len(),
            codes.len(),
            t.elapsed()
        );
        for r in reports.iter().filter(|r| r.sufficiency_violated || r.necessity_violated).take(3) {
            println!("  case {} {}: rc_closed={} v*I member={} self-reciprocal={}", r.case, r.generators, r.rc_closed, r.v_indicator_member, r.self_reciprocal);
        }
    }

    let g: SkewPoly = "x^2+v*x+1".parse()?;
    let code = SkewCode::build(4, SkewGenerators::Monic(g))?;
    for w in code.enumerate(1 << 16)? {
        println!("{w}");
    }
    Ok(())
}
