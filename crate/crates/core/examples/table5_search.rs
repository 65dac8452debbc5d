//! Checks the printed length-10 skew DNA set for reverse-complement closure
//! and searches the length-10 skew codes for one that contains it.

use dnacyclic::printed;
use dnacyclic::skew::{self, SkewWord};

fn main() -> dnacyclic::Result<()> {
    let rc = skew::verify_dna_set_rc(&printed::TABLE5)?;
    println!("printed set RC-closed: {} ({} witnesses)", rc.closed, rc.witnesses.len());
    for (w, missing) in rc.witnesses.iter().take(5) {
        println!("  {w}: {missing} missing");
    }
    let targets: Vec<SkewWord> = printed::TABLE5.iter().map(|s| SkewWord::from_dna(s)).collect::<dnacyclic::Result<_>>()?;
    let hits = skew::generator_search(10, &targets)?;
    println!("{} codes searched; best matches:", hits.len());
    for h in hits.iter().take(6) {
        println!("  case {} <{}> dim {}: {}/64 printed strings", h.case, h.generator, h.dimension, h.contained);
    }
    Ok(())
}
