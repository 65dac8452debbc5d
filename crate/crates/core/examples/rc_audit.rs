//! Audits the RC theorems and the C_{u^2} lemma over every admissible tower
//! of length 3, 5 and 7 that fits under 2^16 words, and compares d_c(C) with
//! the smallest torsion edit distance for codes of at most 2^10 words.

use std::collections::HashSet;

use dnacyclic::binpoly::BinaryPoly;
use dnacyclic::codon::CodonTable;
use dnacyclic::cyclic::{self, CodeOverR, DivisorTower, Generator, RWord};
use dnacyclic::metrics::{self, EditLevel};

fn torsion_min_edit(code: &CodeOverR) -> dnacyclic::Result<Option<u64>> {
    let n = code.len();
    let xn1 = BinaryPoly::x_n_minus_1(n);
    let mut best = None;
    for g in code.torsion_profile().tor.iter().filter(|g| **g != xn1) {
        let t = CodeOverR::from_generators(n, vec![Generator::new(5, g.clone())])?;
        let words = t.enumerate(1 << 16)?;
        if words.len() >= 2 {
            let d = metrics::min_pairwise_edit(&words, EditLevel::Codon, CodonTable::canonical())?.min;
            best = Some(best.map_or(d, |b: u64| b.min(d)));
        }
    }
    Ok(best)
}

fn main() -> dnacyclic::Result<()> {
    let table = CodonTable::canonical();
    println!("n,towers,enumerated,rc_closed,sufficient,suff_violations,nec_violations,u2_lemma_equal,u2_subcode_mismatch,edit_eq_torsion,edit_lt_torsion,edit_gt_torsion");
    for n in [3, 5, 7] {
        let towers = DivisorTower::all_odd(n)?;
        let mut row = [0usize; 10];
        for tower in &towers {
            let code = CodeOverR::from_tower(n, tower)?;
            if code.size_log2() > 16 {
                continue;
            }
            row[0] += 1;
            let rc = cyclic::rc_report(&code, 1 << 16);
            row[1] += usize::from(rc.rc_closed);
            row[2] += usize::from(rc.sufficiency());
            row[3] += usize::from(rc.sufficiency_violated());
            row[4] += usize::from(rc.necessity_violated());

            let lemma = cyclic::subcode_u2_report(&code)?;
            row[5] += usize::from(lemma.equal);
            // subcode by filtering the enumeration, against the torsion construction
            let words = code.enumerate(1 << 16)?;
            let filtered: HashSet<RWord> = words
                .iter()
                .filter(|w| w.0.iter().all(|c| c.valuation().is_none_or(|v| v >= 2)))
                .cloned()
                .collect();
            let sub: HashSet<RWord> = code.subcode_u2()?.enumerate(1 << 16)?.into_iter().collect();
            row[6] += usize::from(filtered != sub);

            // quadratic scan, kept small
            if words.len() >= 2 && words.len() <= 1 << 10 {
                let d = metrics::min_pairwise_edit(&words, EditLevel::Codon, table)?.min;
                if let Some(t) = torsion_min_edit(&code)? {
                    match d.cmp(&t) {
                        std::cmp::Ordering::Equal => row[7] += 1,
                        std::cmp::Ordering::Less => row[8] += 1,
                        std::cmp::Ordering::Greater => row[9] += 1,
                    }
                }
            }
        }
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("{n},{},{}", towers.len(), cells.join(","));
    }
    Ok(())
}
