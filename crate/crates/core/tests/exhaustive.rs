use dnacyclic::binpoly::{self, BinaryPoly};
use dnacyclic::codon::{self, CodonTable};
use dnacyclic::cyclic::{CodeOverR, DivisorTower, Generator, RWord};
use dnacyclic::ring::R64;

#[test]
fn factorizations_re_expand_up_to_64() {
    for n in 1..=64 {
        let factors = binpoly::factor_xn_minus_1(n).unwrap();
        let product = factors.iter().fold(BinaryPoly::one(), |acc, f| {
            assert!(f.poly.is_irreducible(), "n={n}: {} reducible", f.poly);
            (0..f.multiplicity).fold(acc, |a, _| a.mul(&f.poly))
        });
        assert_eq!(product, BinaryPoly::x_n_minus_1(n), "n={n}");
        let mut polys: Vec<&BinaryPoly> = factors.iter().map(|f| &f.poly).collect();
        polys.dedup();
        assert_eq!(polys.len(), factors.len(), "n={n}: repeated factor");
    }
}

#[test]
fn divisor_counts() {
    // 2^(number of distinct factors) for odd n
    for n in [1, 3, 5, 7, 9, 15, 21, 31] {
        let k = binpoly::factor_xn_minus_1(n).unwrap().len();
        assert_eq!(binpoly::divisors_of_xn_minus_1(n).unwrap().len(), 1 << k, "n={n}");
    }
}

#[test]
fn ring_products_against_schoolbook() {
    for a in R64::all() {
        for b in R64::all() {
            let mut bits = 0u8;
            for i in 0..6 {
                for j in 0..6 - i {
                    if a.coeff(i) && b.coeff(j) {
                        bits ^= 1 << (i + j);
                    }
                }
            }
            assert_eq!((a * b).bits(), bits);
        }
    }
}

#[test]
fn sizes_match_torsion_formula_for_all_towers_n3() {
    for tower in DivisorTower::all_odd(3).unwrap() {
        let code = CodeOverR::from_tower(3, &tower).unwrap();
        let words = code.enumerate(1 << 20).unwrap();
        assert_eq!(words.len(), 1 << code.torsion_profile().size_log2(), "{tower:?}");
        for w in &words {
            assert!(code.contains_structural(w));
        }
    }
}

#[test]
fn structural_membership_agrees_with_basis() {
    let code = CodeOverR::from_generators(7, vec![Generator::parse("u^2*(x^3+x+1)").unwrap()]).unwrap();
    for v in 0..4096u64 {
        // words supported on levels 2..6 of the first two coordinates
        let w = RWord(
            (0..7)
                .map(|j| R64::from_bits_truncate(if j < 2 { ((v >> (6 * j)) & 0x3c) as u8 } else { 0 }))
                .collect(),
        );
        assert_eq!(code.contains(&w), code.contains_structural(&w), "{w}");
    }
}

#[test]
fn codon_round_trip_and_complement_over_all_words_of_length_2() {
    let table = CodonTable::canonical();
    for a in R64::all() {
        for b in R64::all() {
            let dna = table.encode_word(&[a, b]);
            assert_eq!(table.decode_word(&dna).unwrap(), vec![a, b]);
            let comp = codon::dna_complement(&dna).unwrap();
            assert_eq!(table.encode_word(&[a.complement(), b.complement()]), comp);
        }
    }
}
