//! Tables and lists exactly as printed in the source publication.
//!
//! These are fixtures for diffing only. Nothing generated by this crate is
//! read from here; every reproduced table is recomputed and then compared.

/// Printed Table 2 row: code number, generator label, printed `(n, M, d)`.
#[derive(Debug, Clone, Copy)]
pub struct Table2Row {
    pub number: usize,
    pub label: &'static str,
    /// Which of `f0 = x+1`, `f1 = x^3+x+1`, `f2 = x^3+x^2+1` are multiplied.
    pub factors: &'static [usize],
    pub printed_u_power: usize,
    pub printed_type: (usize, u64, usize),
}

pub const TABLE2: [Table2Row; 6] = [
    Table2Row { number: 1, label: "<u^2f_0>", factors: &[0], printed_u_power: 2, printed_type: (7, 4096, 2) },
    Table2Row { number: 2, label: "<u^2f_1>", factors: &[1], printed_u_power: 2, printed_type: (7, 256, 3) },
    Table2Row { number: 3, label: "<u^2f_2>", factors: &[2], printed_u_power: 2, printed_type: (7, 256, 3) },
    Table2Row { number: 4, label: "<u^2f_1f_2>", factors: &[1, 2], printed_u_power: 2, printed_type: (7, 4, 7) },
    Table2Row { number: 5, label: "<u^2f_0f_1>", factors: &[0, 1], printed_u_power: 2, printed_type: (7, 64, 4) },
    Table2Row { number: 6, label: "<u^2f_0f_2>", factors: &[0, 2], printed_u_power: 2, printed_type: (7, 64, 4) },
];

/// The factors of `x^7 - 1` used by Table 2, lowest degree first.
pub const TABLE2_FACTORS: [&str; 3] = ["x+1", "x^3+x+1", "x^3+x^2+1"];

/// Printed codon images of `u^2 R`, `u^3 R`, `u^4 R` (duplicates kept).
pub const IDEAL_CODONS_U2: [&str; 16] = [
    "GGG", "AGT", "CGT", "TGT", "GAT", "CAG", "TAC", "ATC", "GTC", "TCC", "CTC", "ACC", "CTC", "TCC", "GGT", "CAT",
];
pub const IDEAL_CODONS_U3: [&str; 8] = ["GGG", "TGT", "CAG", "TAC", "CTC", "GCC", "AGT", "TTA"];
pub const IDEAL_CODONS_U4: [&str; 4] = ["GGG", "TAC", "CTC", "TGT"];

/// Printed skew example: `f` and its reciprocal.
pub const SKEW_RECIPROCAL_EXAMPLE: (&str, &str) = ("x^3+v*x^2+(v+1)*x+v", "v*x^3+(v+1)*x^2+v*x+1");

/// Table 1 as printed, row-major: (codon, element).
pub const TABLE1: [(&str, &str); 64] = [
    ("CCC", "u^5+u^4+u^3+u^2+u+1"), ("GGG", "0"), ("ACT", "u^3+u^2+1"), ("GTC", "u^4+u^2+u+1"),
    ("GGA", "u^5+u^4+u^3+u^2+u"), ("CCT", "1"), ("ACG", "u^3+u^2+u"), ("ACA", "u^3+u^2+u+1"),
    ("GGC", "u^5+u^4+u^3+u^2+1"), ("CCG", "u"), ("TTT", "u^4+u^2+1"), ("GAC", "u^5+u^3+u^2+1"),
    ("GGT", "u^5+u^4+u^3+u^2"), ("CCA", "u+1"), ("TTG", "u^4+u^2+u"), ("AGG", "u^5+u^3+u+1"),
    ("AGG", "u^5+u^4+u^3+u+1"), ("TCC", "u^2"), ("CTA", "u^4+u+1"), ("GAT", "u^5+u^3+u^2"),
    ("CGG", "u^5+u^4+u^2+u+1"), ("GCC", "u^3"), ("GTT", "u^4+u^3+1"), ("GTA", "u^4+u^3+u+1"),
    ("GAG", "u^5+u^3+u^2+u+1"), ("CTC", "u^4"), ("GTG", "u^4+u^3+u"), ("ATT", "u^4+u^3+u^2+1"),
    ("AGA", "u^5+u^4+u^3+u"), ("TCT", "u^2+1"), ("TCA", "u^2+u+1"), ("ATA", "u^4+u^3+u^2+u"),
    ("AGC", "u^5+u^4+u^3+1"), ("TCG", "u^2+u"), ("CAA", "u^5+u^2+u"), ("ATC", "u^4+u^3+u^2"),
    ("ATG", "u^4+u^3+u^2+u+1"), ("TAC", "u^5"), ("CAC", "u^5+u^2+u"), ("TGA", "u^5+u^4+u"),
    ("AGT", "u^5+u^4+u^3"), ("TAT", "u^5+1"), ("GCA", "u^3+u+1"), ("AAT", "u^5+u^2+u+1"),
    ("CGA", "u^5+u^4+u^2+u"), ("GCT", "u^3+1"), ("TTA", "u^4+u^3"), ("AAA", "u^5+u^3+u"),
    ("CGC", "u^5+u^4+u^2+1"), ("GCG", "u^3+u"), ("ACC", "u^3+u^2"), ("TGC", "u^5+u^4+1"),
    ("CGT", "u^5+u^4+u^2"), ("TAA", "u^5+u"), ("CAT", "u^5+u^2"), ("AAC", "u^5+u^3+1"),
    ("TGG", "u^5+u^4+u+1"), ("CTG", "u^4+u"), ("TGT", "u^5+u^4"), ("TCC", "u^4+u^2"),
    ("GAA", "u^5+u^3+u^2+u"), ("CTT", "u^4+1"), ("CAG", "u^5+u^3"), ("TAG", "u^5+u+1"),
];

/// Table 4 as printed, row-major: (codon, a0..a5).
pub const TABLE4: [(&str, &str); 64] = [
    ("GGG", "000000"), ("CCC", "111111"), ("TAT", "000001"), ("ATA", "111110"),
    ("GGA", "011111"), ("CCT", "100000"), ("TAC", "100001"), ("ATG", "011110"),
    ("GGC", "101111"), ("CCG", "010000"), ("TAA", "010001"), ("ATT", "101110"),
    ("GGT", "001111"), ("CCA", "110000"), ("TAG", "110001"), ("ATC", "001110"),
    ("AGG", "110111"), ("TCC", "001000"), ("CAT", "001001"), ("GTA", "110110"),
    ("AGA", "010111"), ("TCT", "101000"), ("CAC", "011001"), ("GTG", "100110"),
    ("AGC", "100111"), ("TCG", "011000"), ("CAA", "011001"), ("GTT", "100110"),
    ("AGT", "000111"), ("TCA", "111000"), ("CAG", "111001"), ("GTC", "000110"),
    ("CGG", "111011"), ("GCC", "000100"), ("AAT", "000101"), ("TTA", "111010"),
    ("CGA", "011011"), ("GCT", "100100"), ("AAC", "100101"), ("TTG", "011010"),
    ("CGC", "101011"), ("GCG", "010100"), ("AAA", "010101"), ("TTT", "101010"),
    ("CGT", "001011"), ("GCA", "110100"), ("AGG", "110101"), ("TCC", "001010"),
    ("TGG", "110011"), ("ACC", "001100"), ("GAT", "001101"), ("CTA", "110010"),
    ("TGA", "010011"), ("ACT", "101100"), ("GAC", "101101"), ("CTG", "010010"),
    ("TGC", "100011"), ("ACG", "011100"), ("GAA", "011101"), ("CTT", "100010"),
    ("TGT", "000011"), ("ACA", "111100"), ("GAG", "111101"), ("CTC", "000010"),
];

/// Table 3 as printed, row-major (left column, right column).
pub const TABLE3: [&str; 64] = [
    "GGGGGGGGGGGGGGGGGGGGG", "CCCCCCCCCCCCCCCCCCCCC",
    "CTCGGGCTCCTCCTCGGGGGG", "GAGCCCGAGGAGGAGCCCCCC",
    "GGGCTCGGGCTCTGTTGTTGT", "CCCGAGCCCGAGACAATAACA",
    "TGTGGGCTCGGGCTCTGTTGT", "ACACCCGAGCCCGAGACAACA",
    "TGTTGTGGGCTCGGGCTCTGT", "ACAACACCCGAGCCCGAGACA",
    "TGTTGTTGTGGGCTCGGGCTC", "ACAACAACACCCGAGCCCGAG",
    "CTCTGTTGTTGTGGGCTCGGG", "GAGACAACAACACCCGAGCCC",
    "GGGCTCTGTTGTTGTGGGCTC", "CCCGAGACAACAACACCCGAG",
    "TATGGGTATTATTATGGGGGG", "ATACCCATAATAATACCCCCC",
    "GGGTATGGGTATTATTATGGG", "CCCATACCCATAATAATACCC",
    "GGGGGGTATGGGTATTATTAT", "CCCCCCATACCCATAATAATA",
    "TATGGGGGGTATGGGTATTAT", "ATACCCCCCATACCCATAATA",
    "TATTATGGGGGGTATGGGTAT", "ATAATACCCCCCATACCCATA",
    "TATTATTATGGGGGGTATGGG", "ATAATAATACCCCCCATACCC",
    "GGGTATTATTATGGGGGGTAT", "CCCATAATAATACCCCCCATA",
    "TGTGGGTGTTGTTGTGGGGGG", "ACACCCACAACAACACCCCCC",
    "GGGTGTGGGTGTTGTTGTGGG", "CCCACACCCACAACAACACCC",
    "GGGGGGTGTGGGTGTTGTTGT", "CCCCCCACACCCACAACAACA",
    "TGTGGGGGGTGTGGGTGTTGT", "ACACCCCCCACACCCACAACA",
    "TGTTGTGGGGGGTGTGGGTGT", "ACAACACCCCCCACACCCACA",
    "TGTTGTTGTGGGGGGTGTGGG", "ACAACAACACCCCCCACACCC",
    "GGGTGTTGTTGTGGGGGGTGT", "CCCACAACAACACCCCCCACA",
    "CTCGGGCTCTGTTGTTGTGGG", "GAGCCCGAGACAACAACACCC",
    "GGGCTCGGGCTCTGTTGTTGT", "CCCGAGCCCGAGACAACAACA",
    "TGTGGGCTCGGGCTCTGTTGT", "ACACCCGAGCCCGAGACAACA",
    "TGTTGTGGGCTCGGGCTCTGT", "ACAACACCCGAGCCCGAGACA",
    "TGTTGTTGTGGGCTCGGGCTC", "ACAACAACACCCGAGCCCGAG",
    "CTCTGTTGTTGTGGGCTCGGG", "GAGACAACAACACCCGAGCCC",
    "GGGCTCTGTTGTTGTGGGCTC", "CCCGAGACAACAACACCCGAG",
    "GGGGGGCTCGGGCTCCTCCTC", "CCCCCCGAGCCCGAGGAGGAG",
    "CTCGGGGGGCTCGGGCTCCTC", "GAGCCCCCCGAGCCCGAGGAG",
    "CTCCTCGGGGGGCTCGGGCTC", "GAGGAGCCCCCCGAGCCCGAG",
];

/// Table 5 as printed, row-major.
pub const TABLE5: [&str; 64] = [
    "GGGGGGGGGG", "CCCCCCCCCC", "CCCCCGGGGG", "GGGGGCCCCC",
    "GGGGCCCCCG", "CCCCGGGGGC", "CCCCGCCCCG", "GGGGCGGGGC",
    "GGGTTTTTGG", "CCCAAAAACC", "CCCATAAACG", "GGGTATTTGC",
    "GGGTAAAACG", "CCCATTTTGC", "CCGGGCCGGG", "GGCCCGGCCC",
    "GGCCCCCGGG", "CCGGGGGCCC", "CCGGCGGCCG", "GGCCGCCGGC",
    "GGCCGGGCCG", "CCGGCCCGGC", "CCGTATTACG", "GGCATAATGC",
    "GGCAAAATCG", "CCGTTTTAGC", "CCGTTAATTG", "GGCAATTAAC",
    "GGCAAAATGG", "CCGTTTTACC", "CATTAACGGG", "GTAATTGCCC",
    "GTAAAACGGG", "CATTTTGCCC", "CAGTATGCCG", "GTCATACGGC",
    "GTAACCATTG", "CATTGGTAAC", "CAAGCGTACG", "GTTCGCATGC",
    "GTACGGTACG", "CATGCCATGC", "CAATTACCGG", "GTTAATGGCC",
    "GTACCCATGG", "CTAGGGTACC", "CAAAATGGGG", "GTTTTACCCC",
    "GATTTTGGGG", "CTAAAACCCC", "CAAATACCCG", "GTTTATGGGC",
    "GTTTAACCCG", "CAAATTGGGC", "CAACGCAACG", "GTTGCGTTGC",
    "GTTGCCAACG", "CAACGGTTGC", "CAACCGTTGG", "GTTGGCAACC",
    "GTTGGGTTGG", "CAACCCAACC", "CCACGCAACG", "GGTGCGTTGC",
];
