//! Regenerates Tables 2, 3 and 5 and prints their reports with diffs.

use dnacyclic::reproduce;

fn main() -> dnacyclic::Result<()> {
    let t2 = reproduce::table2()?;
    print!("{}", reproduce::table2_report(&t2));

    let t3 = reproduce::table3()?;
    print!("{}", reproduce::table3_report(&t3));

    let t5 = reproduce::table5()?;
    print!("{}", reproduce::table5_report(&t5));
    Ok(())
}
