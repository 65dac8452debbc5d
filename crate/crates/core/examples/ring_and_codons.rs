//! Arithmetic in F2[u]/(u^6), the repaired codon table, and its diff against
//! the printed one.

use dnacyclic::codon::CodonTable;
use dnacyclic::ring::{self, R64};

fn main() -> dnacyclic::Result<()> {
    let a = R64::parse("u^2+u")?;
    let b = R64::parse("u^2+1")?;
    println!("a = {} ({a}), b = {} ({b})", a.to_poly_string(), b.to_poly_string());
    println!("a + b = {}", (a + b).to_poly_string());
    println!("a * b = {}", (a * b).to_poly_string());
    println!("complement(a) = {}", a.complement().to_poly_string());
    println!("lee(a) = {}, gray(a) = {}", a.lee_weight(), a.gray());
    for i in [2, 3, 4] {
        let ideal: Vec<String> = ring::ideal_members(i)?.iter().map(|x| x.to_poly_string()).collect();
        println!("u^{i} R has {} elements", ideal.len());
    }

    let table = CodonTable::canonical();
    println!("\nelement -> codon");
    for (x, c) in table.entries().take(8) {
        println!("  {:<22} {c}  (complement {} -> {})", x.to_poly_string(), x.complement().to_poly_string(), table.lookup(x.complement()));
    }
    println!("\nrepaired rows of the printed table");
    for d in table.table1_diff() {
        let printed = d.printed.map_or("(not printed)".to_string(), |p| p.to_poly_string());
        println!("  {}: {printed} -> {}", d.codon, d.derived.to_poly_string());
    }
    println!("\nprinted binary images that differ from gray(lookup^-1)");
    for (c, printed, derived) in table.table4_diff() {
        println!("  {c}: {printed} -> {derived}");
    }
    let word = [R64::ONE, R64::U, R64::ALPHA];
    let dna = table.encode_word(&word);
    println!("\nencode(1, u, alpha) = {dna}, decodes back: {}", table.decode_word(&dna)? == word);
    Ok(())
}
