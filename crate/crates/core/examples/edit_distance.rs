//! Unit and weighted edit distance on codon strings, checked against an
//! exhaustive edit-script search, and the codon-level bounds on random words.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dnacyclic::codon::{Codon, CodonTable};
use dnacyclic::cyclic::RWord;
use dnacyclic::metrics::{self, Cost, EditCostTable};
use dnacyclic::ring::R64;

fn main() -> dnacyclic::Result<()> {
    let parse = |s: &str| -> Vec<Codon> { s.split(' ').map(|c| c.parse().unwrap()).collect() };
    let x = parse("GGG CCC AAA");
    let y = parse("CCC AAA TTT");
    println!("unit edit distance: {}", metrics::edit_distance_unit(&x, &y));

    let costs = EditCostTable::parse_csv("from,to,cost\nGGG,CCC,1/2\n-,TTT,3/2\nAAA,-,5/4\n")?;
    println!("weighted edit distance: {}", metrics::edit_distance(&x, &y, &costs));

    // search over symbols 0..4 standing for the four codons above
    let symbols = parse("GGG CCC AAA TTT");
    let cost = |a: Option<u8>, b: Option<u8>| -> Cost {
        let s = |v: Option<u8>| v.map_or("-".to_string(), |i| symbols[i as usize].to_string());
        match (a, b) {
            (Some(_), Some(_)) => costs.substitute(&s(a), &s(b)),
            (Some(_), None) => costs.delete(&s(a)),
            (None, Some(_)) => costs.insert(&s(b)),
            (None, None) => Ratio::from_integer(0),
        }
    };
    let found = metrics::edit_script_search(&[0, 1, 2], 4, 4, &cost);
    let agree = found.iter().all(|(t, d)| {
        let tc: Vec<Codon> = t.iter().map(|&i| symbols[i as usize]).collect();
        metrics::edit_distance(&x, &tc, &costs) == *d
    });
    println!("script search reached {} strings; DP agrees on all: {agree}", found.len());

    let table = CodonTable::canonical();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut held = 0;
    for _ in 0..1000 {
        let mut w = || RWord((0..7).map(|_| R64::from_bits_truncate(rng.gen())).collect());
        let (a, b) = (w(), w());
        held += usize::from(metrics::edit_bounds_check(&a, &b, table)?.all_hold());
    }
    println!("d_c <= n, d_c <= d_H and complement symmetry held on {held}/1000 random pairs");
    Ok(())
}
