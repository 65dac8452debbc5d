//! The code <u^4 (x+1)(x^3+x+1)> of length 7: torsion tower, size, RC status,
//! distances at codon and nucleotide level, and its DNA words.

use dnacyclic::codon::CodonTable;
use dnacyclic::cyclic::{self, CodeOverR, Generator, RWord};
use dnacyclic::metrics::{self, EditLevel};

fn main() -> dnacyclic::Result<()> {
    let table = CodonTable::canonical();
    let code = CodeOverR::from_generators(7, vec![Generator::parse("u^4*(x+1)*(x^3+x+1)")?])?;
    let tp = code.torsion_profile();
    println!("code {}: 2^{} words, rank {}", code.description(), code.size_log2(), tp.rank);
    for (i, g) in tp.tor.iter().enumerate() {
        println!("  Tor_{i} = <{g}>");
    }
    let words = code.enumerate(cyclic::DEFAULT_GUARD)?;
    let rc = cyclic::rc_report(&code, cyclic::DEFAULT_GUARD);
    println!("alpha I(x) in C: {}, generators self-reciprocal: {}, RC-closed: {}", rc.alpha_member, rc.self_reciprocal, rc.rc_closed);
    if let Some(w) = &rc.witness {
        println!("  {} has no reverse-complement in C", w.to_dna(table));
    }
    println!("contains the zero word: {}", code.contains(&RWord::zero(7)));
    let ham = metrics::min_pairwise_hamming(&words)?;
    let lee = metrics::min_pairwise_lee(&words)?;
    let codon = metrics::min_pairwise_edit(&words, EditLevel::Codon, table)?;
    let nuc = metrics::min_pairwise_edit(&words, EditLevel::Nucleotide, table)?;
    println!("min Hamming {}, min Lee {}, min edit {} (codon) / {} (nucleotide), over {} pairs", ham.min, lee.min, codon.min, nuc.min, ham.pairs);
    let (i, j) = codon.argmin;
    println!("  closest codon pair: {} / {}", words[i].to_dna(table), words[j].to_dna(table));
    let class = cyclic::classify_dna_code(&code, 21, EditLevel::Nucleotide, cyclic::DEFAULT_GUARD)?;
    println!("DNA code with D = 21 at nucleotide level: {}", class.is_dna_code);
    for w in words.iter().take(8) {
        println!("{}", w.to_dna(table));
    }
    println!("... {} more", words.len() - 8);
    Ok(())
}
