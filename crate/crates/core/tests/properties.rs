use proptest::prelude::*;

use dnacyclic::binpoly::BinaryPoly;
use dnacyclic::config::{JobConfig, Metric, OutputFormat, Ring};
use dnacyclic::cyclic::RWord;
use dnacyclic::metrics::EditLevel;
use dnacyclic::ring::R64;
use dnacyclic::skew::{SkewPoly, SkewScalar};

fn binary_poly() -> impl Strategy<Value = BinaryPoly> {
    prop::collection::vec(any::<bool>(), 1..40).prop_map(BinaryPoly::from_bits)
}

fn skew_poly(max_len: usize) -> impl Strategy<Value = SkewPoly> {
    prop::collection::vec(0usize..4, 0..max_len)
        .prop_map(|c| SkewPoly::from_coeffs(c.into_iter().map(|i| SkewScalar::ALL[i]).collect()))
}

/// Monic with constant term 1, of even degree `2k+2` or odd degree `2k+1`.
fn unit_ended_skew(even: bool) -> impl Strategy<Value = SkewPoly> {
    (0usize..5, prop::collection::vec(0usize..4, 10)).prop_map(move |(k, inner)| {
        let d = if even { 2 * k + 2 } else { 2 * k + 1 };
        let mut c = vec![SkewScalar::ONE];
        c.extend(inner[..d - 1].iter().map(|&i| SkewScalar::ALL[i]));
        c.push(SkewScalar::ONE);
        SkewPoly::from_coeffs(c)
    })
}

fn r_word(n: usize) -> impl Strategy<Value = RWord> {
    prop::collection::vec(0u8..64, n).prop_map(|v| RWord(v.into_iter().map(R64::from_bits_truncate).collect()))
}

fn job_config() -> impl Strategy<Value = JobConfig> {
    (
        prop::sample::select(vec!["factor", "verify", "reproduce", "export"]),
        any::<bool>(),
        prop::option::of(1usize..40),
        prop::option::of(prop::sample::select(vec!["u^4*(x+1)*(x^3+x+1)", "v*I", "x^3+x+1; u*(x+1)"])),
        prop::option::of(prop::sample::select(vec!["x+1", "x^3+x^2+1"])),
        (0usize..3, any::<bool>(), 0usize..3, 1u64..1 << 30),
        (prop::option::of(1u8..6), prop::option::of(0u64..30), any::<bool>()),
    )
        .prop_map(|(cmd, f2v, n, gen, f3, (m, nuc, fmt, guard), (table, d, out))| JobConfig {
            command: cmd.to_string(),
            ring: if f2v { Ring::F2v } else { Ring::R64 },
            n,
            gen: gen.map(str::to_string),
            tower: [None, None, None, f3.map(str::to_string), None, None],
            metric: [Metric::Hamming, Metric::Lee, Metric::Edit][m],
            level: if nuc { EditLevel::Nucleotide } else { EditLevel::Codon },
            format: [OutputFormat::Report, OutputFormat::Fasta, OutputFormat::Csv][fmt],
            guard,
            table,
            out: out.then(|| "artifacts/run1".into()),
            d,
            costs: None,
        })
}

proptest! {
    #[test]
    fn reciprocal_is_an_involution_on_constant_term_one(f in binary_poly()) {
        // constant term 1 keeps the degree under reversal
        prop_assume!(f.coeff(0));
        prop_assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f);
    }

    #[test]
    fn reciprocal_of_product(f in binary_poly(), g in binary_poly()) {
        prop_assume!(f.coeff(0) && g.coeff(0));
        prop_assert_eq!(f.mul(&g).reciprocal().unwrap(), f.reciprocal().unwrap().mul(&g.reciprocal().unwrap()));
    }

    #[test]
    fn gray_map_is_additive(x in r_word(9), y in r_word(9)) {
        let mut s = x.gray();
        s.xor_assign(&y.gray());
        prop_assert_eq!(x.add(&y).gray(), s);
        prop_assert_eq!(RWord::from_gray(&x.gray()), x);
    }

    #[test]
    fn job_config_round_trips(c in job_config()) {
        prop_assert_eq!(JobConfig::parse(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn skew_multiplication_is_associative(f in skew_poly(8), g in skew_poly(8), h in skew_poly(8)) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn skew_reciprocal_of_product_when_left_degree_even(
        f in unit_ended_skew(true),
        g in prop_oneof![unit_ended_skew(true), unit_ended_skew(false)],
    ) {
        prop_assert_eq!(f.mul(&g).reciprocal().unwrap(), f.reciprocal().unwrap().mul(&g.reciprocal().unwrap()));
    }

    #[test]
    fn binary_divrem(f in binary_poly(), g in binary_poly()) {
        prop_assume!(!g.is_zero());
        let (q, r) = f.divrem(&g).unwrap();
        prop_assert_eq!(q.mul(&g).add(&r), f);
        prop_assert!(r.degree() < g.degree());
    }
}
