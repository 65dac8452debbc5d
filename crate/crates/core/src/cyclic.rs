//! Cyclic codes over `R = F2[u]/(u^6)` of length `n`.
//!
//! A code `<u^i1 h1, u^i2 h2, ..>` in `R[x]/(x^n - 1)` is held as the F2 row
//! space of its Gray image (`6n` bits, coordinate `j` in bits `6j..6j+6`),
//! spanned by the orbit of its generators under the shift and scaling by `u`.
//! Sizes, torsion codes and membership are read off that basis; the gcd
//! formula for the torsion generators is kept as a second route.

use std::collections::HashSet;
use std::fmt;

use crate::binpoly::{self, BinaryPoly};
use crate::bits::{BitRow, F2Basis};
use crate::codon::{Codon, CodonTable};
use crate::error::{Error, Result};
use crate::metrics::{self, EditLevel};
use crate::ring::{self, R64};

/// Default cap on the number of words materialised by `enumerate`.
pub const DEFAULT_GUARD: u64 = 1 << 20;

/// A word of `R^n`, coordinate 0 first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RWord(pub Vec<R64>);

impl RWord {
    pub fn zero(n: usize) -> RWord {
        RWord(vec![R64::ZERO; n])
    }

    /// `alpha(u) I(x)`: every coordinate is the complement of zero.
    pub fn alpha(n: usize) -> RWord {
        RWord(vec![R64::ALPHA; n])
    }

    /// `u^i h(x) mod x^n - 1`.
    pub fn from_poly(i: usize, h: &BinaryPoly, n: usize) -> RWord {
        let mut w = RWord::zero(n);
        for k in h.support() {
            w.0[k % n] += R64::u_pow(i);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `tau: (c0, .., c_{n-1}) -> (c_{n-1}, c0, .., c_{n-2})`.
    pub fn shift(&self) -> RWord {
        let n = self.0.len();
        RWord((0..n).map(|i| self.0[(i + n - 1) % n]).collect())
    }

    pub fn scale(&self, a: R64) -> RWord {
        RWord(self.0.iter().map(|&c| c * a).collect())
    }

    pub fn add(&self, other: &RWord) -> RWord {
        RWord(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn complement(&self) -> RWord {
        RWord(self.0.iter().map(|c| c.complement()).collect())
    }

    pub fn reverse(&self) -> RWord {
        RWord(self.0.iter().rev().copied().collect())
    }

    pub fn reverse_complement(&self) -> RWord {
        RWord(self.0.iter().rev().map(|c| c.complement()).collect())
    }

    /// Binary polynomial of the `u^k` coefficients.
    pub fn level(&self, k: usize) -> BinaryPoly {
        BinaryPoly::from_bits(self.0.iter().map(|c| c.coeff(k)))
    }

    pub fn gray(&self) -> BitRow {
        BitRow::from_bits(self.0.iter().flat_map(|c| (0..6).map(move |i| c.coeff(i))))
    }

    pub fn from_gray(row: &BitRow) -> RWord {
        RWord(
            (0..row.len() / 6)
                .map(|j| {
                    let bits = (0..6).fold(0u8, |acc, i| acc | (row.get(6 * j + i) as u8) << i);
                    R64::from_bits_truncate(bits)
                })
                .collect(),
        )
    }

    pub fn to_dna(&self, table: &CodonTable) -> String {
        table.encode_word(&self.0)
    }

    pub fn codons(&self, table: &CodonTable) -> Vec<Codon> {
        self.0.iter().map(|&c| table.lookup(c)).collect()
    }

    /// Six-bit rows joined by commas, for CSV output.
    pub fn to_csv_row(&self) -> String {
        self.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for RWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv_row())
    }
}

impl fmt::Debug for RWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RWord({self})")
    }
}

/// A generator `u^i h(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub u_power: usize,
    pub poly: BinaryPoly,
}

impl Generator {
    pub fn new(u_power: usize, poly: BinaryPoly) -> Generator {
        Generator { u_power, poly }
    }

    /// `u^4*(x+1)*(x^3+x+1)`, `u*(x+1)`, or a bare binary polynomial.
    pub fn parse(text: &str) -> Result<Generator> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (u_power, rest) = if let Some(r) = t.strip_prefix("u^") {
            let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
            let k: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad power of u in {text:?}")))?;
            (k, &r[digits.len()..])
        } else if let Some(r) = t.strip_prefix('u') {
            (1, r)
        } else {
            (0, t.as_str())
        };
        let rest = if u_power > 0 || t.starts_with('u') {
            match rest.strip_prefix('*') {
                Some(r) => r,
                None if rest.is_empty() => "1",
                None => return Err(Error::Parse(format!("expected '*' after the power of u in {text:?}"))),
            }
        } else {
            rest
        };
        if u_power > 5 {
            return Err(Error::IdealExponent(u_power));
        }
        Ok(Generator { u_power, poly: BinaryPoly::parse(rest)? })
    }

    /// Several generators separated by `;`.
    pub fn parse_list(text: &str) -> Result<Vec<Generator>> {
        text.split(';')
            .filter(|s| !s.trim().is_empty())
            .map(Generator::parse)
            .collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.u_power {
            0 => write!(f, "{}", self.poly),
            1 => write!(f, "u*({})", self.poly),
            k => write!(f, "u^{k}*({})", self.poly),
        }
    }
}

/// Six binary divisors `(f0, .., f5)` of `x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorTower {
    pub f: [BinaryPoly; 6],
}

impl DivisorTower {
    /// Checks `f5 | .. | f0 | x^n - 1` for odd `n`, `fi | f0 | x^n - 1` for even `n`.
    pub fn new(n: usize, f: [BinaryPoly; 6]) -> Result<DivisorTower> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let xn1 = BinaryPoly::x_n_minus_1(n);
        for (i, fi) in f.iter().enumerate() {
            if !fi.divides(&xn1) {
                return Err(Error::Tower(format!("f{i} = {fi} does not divide x^{n}-1")));
            }
        }
        for i in 1..6 {
            let above = if n % 2 == 1 { &f[i - 1] } else { &f[0] };
            if !f[i].divides(above) {
                let j = if n % 2 == 1 { i - 1 } else { 0 };
                return Err(Error::Tower(format!("f{i} = {} does not divide f{j} = {}", f[i], above)));
            }
        }
        Ok(DivisorTower { f })
    }

    /// `f_j = x^n - 1` except `f_i = h`; no divisibility check.
    pub fn single(n: usize, i: usize, h: BinaryPoly) -> [BinaryPoly; 6] {
        let mut f: [BinaryPoly; 6] = std::array::from_fn(|_| BinaryPoly::x_n_minus_1(n));
        f[i] = h;
        f
    }

    /// Every admissible tower for odd `n`: weakly decreasing chains in the
    /// divisor lattice, one drop level per irreducible factor.
    pub fn all_odd(n: usize) -> Result<Vec<DivisorTower>> {
        if n % 2 == 0 {
            return Err(Error::EvenModulus(n as u64));
        }
        let factors = binpoly::factor_xn_minus_1(n)?;
        let mut out = Vec::new();
        let total = 7usize.pow(factors.len() as u32);
        for code in 0..total {
            // factor k divides f_i exactly for i < level_k
            let mut f: [BinaryPoly; 6] = std::array::from_fn(|_| BinaryPoly::one());
            let mut c = code;
            for fac in &factors {
                let level = c % 7;
                c /= 7;
                for fi in f.iter_mut().take(level) {
                    *fi = fi.mul(&fac.poly);
                }
            }
            out.push(DivisorTower::new(n, f)?);
        }
        Ok(out)
    }
}

/// Torsion codes `Tor_0 .. Tor_5` as generator polynomials, plus the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionProfile {
    pub tor: [BinaryPoly; 6],
    /// Dimension of each torsion code over F2.
    pub dims: [usize; 6],
    pub rank: usize,
}

impl TorsionProfile {
    /// `log2 |C| = sum_i (n - deg Tor_i)`.
    pub fn size_log2(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// A cyclic code over `R`.
#[derive(Clone, Debug)]
pub struct CodeOverR {
    n: usize,
    generators: Vec<Generator>,
    basis: F2Basis,
}

impl CodeOverR {
    pub fn from_generators(n: usize, generators: Vec<Generator>) -> Result<CodeOverR> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let mut basis = F2Basis::new(6 * n);
        for g in &generators {
            if g.u_power > 5 {
                return Err(Error::IdealExponent(g.u_power));
            }
            let mut w = RWord::from_poly(g.u_power, &g.poly, n);
            for _ in 0..n {
                let mut scaled = w.clone();
                for _ in g.u_power..6 {
                    basis.insert(scaled.gray());
                    scaled = scaled.scale(R64::U);
                }
                w = w.shift();
            }
        }
        Ok(CodeOverR { n, generators, basis })
    }

    /// `<f0, u f1, .., u^5 f5>`; slots equal to `x^n - 1` contribute nothing.
    pub fn from_tower(n: usize, tower: &DivisorTower) -> Result<CodeOverR> {
        let xn1 = BinaryPoly::x_n_minus_1(n);
        let gens = tower
            .f
            .iter()
            .enumerate()
            .filter(|(_, f)| **f != xn1)
            .map(|(i, f)| Generator::new(i, f.clone()))
            .collect();
        CodeOverR::from_generators(n, gens)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn basis(&self) -> &F2Basis {
        &self.basis
    }

    pub fn size_log2(&self) -> usize {
        self.basis.rank()
    }

    pub fn contains(&self, w: &RWord) -> bool {
        w.len() == self.n && self.basis.contains(&w.gray())
    }

    /// All words, ascending.
    pub fn enumerate(&self, guard: u64) -> Result<Vec<RWord>> {
        let k = self.size_log2() as u32;
        if k >= 64 || 1u64 << k > guard {
            return Err(Error::GuardExceeded { size_log2: k, guard });
        }
        let mut words: Vec<RWord> = self.basis.span().map(|r| RWord::from_gray(&r)).collect();
        words.sort();
        Ok(words)
    }

    /// Torsion generators by the gcd formula `g_i = gcd(h_j : u_power_j <= i, x^n - 1)`.
    /// Exact for odd `n`, where `x^n - 1` is squarefree.
    pub fn gcd_tower(&self) -> [BinaryPoly; 6] {
        let xn1 = BinaryPoly::x_n_minus_1(self.n);
        std::array::from_fn(|i| {
            self.generators
                .iter()
                .filter(|g| g.u_power <= i)
                .fold(xn1.clone(), |acc, g| acc.gcd(&g.poly))
        })
    }

    /// Torsion codes read from the basis: `Tor_i` is the level-`i` projection
    /// of the words whose levels below `i` vanish.
    pub fn torsion_profile(&self) -> TorsionProfile {
        let n = self.n;
        // level-major layout with level 0 highest, so words vanishing on
        // levels < i are spanned by rows whose pivot lies below (6 - i) n
        let remap = |r: &BitRow| {
            let w = RWord::from_gray(r);
            let mut out = BitRow::zeros(6 * n);
            for (j, c) in w.0.iter().enumerate() {
                for lvl in 0..6 {
                    if c.coeff(lvl) {
                        out.set((5 - lvl) * n + j, true);
                    }
                }
            }
            out
        };
        let mut lm = F2Basis::new(6 * n);
        for r in self.basis.rows() {
            lm.insert(remap(r));
        }
        let xn1 = BinaryPoly::x_n_minus_1(n);
        let mut tor: [BinaryPoly; 6] = std::array::from_fn(|_| xn1.clone());
        let mut dims = [0usize; 6];
        for (i, (t, d)) in tor.iter_mut().zip(dims.iter_mut()).enumerate() {
            let lo = (5 - i) * n;
            let mut proj = F2Basis::new(n);
            for r in lm.rows().filter(|r| r.leading().is_some_and(|p| p < lo + n)) {
                let row = BitRow::from_bits((0..n).map(|j| r.get(lo + j)));
                // a cyclic code is generated by the gcd of its words with x^n - 1
                *t = t.gcd(&BinaryPoly::from_bits((0..n).map(|j| row.get(j))));
                proj.insert(row);
            }
            *d = proj.rank();
        }
        TorsionProfile { rank: dims[5], tor, dims }
    }

    /// Tower-reduction membership: peel level `k` by a binary multiple of
    /// `g_k`. Uses the gcd tower, so it is exact only for odd `n`.
    pub fn contains_structural(&self, w: &RWord) -> bool {
        if w.len() != self.n {
            return false;
        }
        let xn1 = BinaryPoly::x_n_minus_1(self.n);
        let tower = self.gcd_tower();
        let mut rest = w.clone();
        for (k, g) in tower.iter().enumerate() {
            let level = rest.level(k);
            if level.is_zero() {
                continue;
            }
            if *g == xn1 || !g.divides(&level) {
                return false;
            }
            // level = a g with a binary, so a g lives entirely in level k
            rest = rest.add(&RWord::from_poly(k, &level, self.n));
        }
        true
    }

    /// RC closure without enumeration: `w -> rev(w) + alpha I` is affine, so a
    /// linear code is closed iff it holds `alpha I` and is closed under reversal.
    pub fn rc_closed_structural(&self) -> bool {
        self.contains(&RWord::alpha(self.n))
            && self
                .basis
                .rows()
                .all(|r| self.contains(&RWord::from_gray(r).reverse()))
    }

    /// Generator polynomials reduced to divisors of `x^n - 1`.
    pub fn generator_divisors(&self) -> Vec<BinaryPoly> {
        let xn1 = BinaryPoly::x_n_minus_1(self.n);
        self.generators.iter().map(|g| g.poly.gcd(&xn1)).collect()
    }

    /// `C ∩ u^2 R^n`, rebuilt from its torsion generators `u^2 g2 .. u^5 g5`.
    pub fn subcode_u2(&self) -> Result<CodeOverR> {
        let tp = self.torsion_profile();
        let gens = (2..6)
            .map(|i| Generator::new(i, tp.tor[i].clone()))
            .collect();
        CodeOverR::from_generators(self.n, gens)
    }

    pub fn description(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!("<{}>", gens.join(", "))
    }
}

/// RC closure of an explicit word set, with a violating word on failure.
pub fn is_reverse_complement_closed(words: &[RWord]) -> (bool, Option<RWord>) {
    let set: HashSet<&RWord> = words.iter().collect();
    match words.iter().find(|w| !set.contains(&w.reverse_complement())) {
        Some(w) => (false, Some(w.clone())),
        None => (true, None),
    }
}

/// The RC theorems evaluated on one code.
#[derive(Clone, Debug)]
pub struct RcReport {
    pub code: String,
    pub size_log2: usize,
    pub alpha_member: bool,
    pub alpha_member_structural: bool,
    pub self_reciprocal: bool,
    /// Decided on the enumerated set when it fits under the guard.
    pub rc_closed: bool,
    pub enumerated: bool,
    pub witness: Option<RWord>,
}

impl RcReport {
    /// Hypotheses of the sufficiency theorem.
    pub fn sufficiency(&self) -> bool {
        self.alpha_member && self.self_reciprocal
    }

    pub fn sufficiency_violated(&self) -> bool {
        self.sufficiency() && !self.rc_closed
    }

    /// Closure without both necessary conditions.
    pub fn necessity_violated(&self) -> bool {
        self.rc_closed && !(self.alpha_member && self.self_reciprocal)
    }
}

pub fn rc_report(code: &CodeOverR, guard: u64) -> RcReport {
    let alpha = RWord::alpha(code.len());
    let (rc_closed, enumerated, witness) = match code.enumerate(guard) {
        Ok(words) => {
            let (closed, w) = is_reverse_complement_closed(&words);
            (closed, true, w)
        }
        Err(_) => (code.rc_closed_structural(), false, None),
    };
    RcReport {
        code: code.description(),
        size_log2: code.size_log2(),
        alpha_member: code.contains(&alpha),
        alpha_member_structural: code.contains_structural(&alpha),
        self_reciprocal: code.generator_divisors().iter().all(|f| f.is_self_reciprocal()),
        rc_closed,
        enumerated,
        witness,
    }
}

/// Whether the sufficiency hypotheses hold: `alpha I in C` and every
/// generator self-reciprocal.
pub fn rc_sufficiency_check(code: &CodeOverR) -> bool {
    rc_report(code, 0).sufficiency()
}

/// `{lookup(x) : x in u^i R}` in codon order.
pub fn codon_alphabet_of_ideal(i: usize, table: &CodonTable) -> Result<Vec<Codon>> {
    if !(2..=4).contains(&i) {
        return Err(Error::IdealExponent(i));
    }
    let mut out: Vec<Codon> = ring::ideal_members(i)?
        .into_iter()
        .map(|x| table.lookup(x))
        .collect();
    out.sort();
    Ok(out)
}

/// The subcode comparison for `C_{u^2}` against `<u^2 f5>`.
#[derive(Clone, Debug)]
pub struct SubcodeReport {
    pub subcode_log2: usize,
    pub lemma_code_log2: usize,
    pub subcode_in_lemma_code: bool,
    pub equal: bool,
}

/// Compares `C ∩ u^2 R^n` with `<u^2 g5>`, `g5` the last torsion generator.
pub fn subcode_u2_report(code: &CodeOverR) -> Result<SubcodeReport> {
    let sub = code.subcode_u2()?;
    let g5 = code.torsion_profile().tor[5].clone();
    let lemma = CodeOverR::from_generators(code.len(), vec![Generator::new(2, g5)])?;
    let inside = sub.basis().rows().all(|r| lemma.basis().contains(r));
    Ok(SubcodeReport {
        subcode_log2: sub.size_log2(),
        lemma_code_log2: lemma.size_log2(),
        subcode_in_lemma_code: inside,
        equal: inside && sub.size_log2() == lemma.size_log2(),
    })
}

/// Result of the DNA-code definition on an enumerated code.
#[derive(Clone, Debug)]
pub struct DnaClassification {
    pub is_dna_code: bool,
    pub rc_distinct: bool,
    pub rc_closed: bool,
    pub witness: Option<RWord>,
    pub min_edit: u64,
    pub max_edit: u64,
}

/// True iff no word is its own reverse-complement, every reverse-complement
/// is in the code, and the largest pairwise edit distance is at most `d`.
pub fn classify_dna_code(
    code: &CodeOverR,
    d: u64,
    level: EditLevel,
    guard: u64,
) -> Result<DnaClassification> {
    let words = code.enumerate(guard)?;
    let set: HashSet<&RWord> = words.iter().collect();
    let mut witness = None;
    let mut rc_distinct = true;
    let mut rc_closed = true;
    for w in &words {
        let rc = w.reverse_complement();
        if &rc == w {
            rc_distinct = false;
            witness.get_or_insert_with(|| w.clone());
        }
        if !set.contains(&rc) {
            rc_closed = false;
            witness.get_or_insert_with(|| w.clone());
        }
    }
    let table = CodonTable::canonical();
    let (min_edit, max_edit) = if words.len() >= 2 {
        let rep = metrics::min_pairwise_edit(&words, level, table)?;
        (rep.min, rep.max)
    } else {
        (0, 0)
    };
    Ok(DnaClassification {
        is_dna_code: rc_distinct && rc_closed && max_edit <= d,
        rc_distinct,
        rc_closed,
        witness,
        min_edit,
        max_edit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinaryPoly {
        s.parse().unwrap()
    }

    fn table3_code() -> CodeOverR {
        CodeOverR::from_generators(7, vec![Generator::parse("u^4*(x+1)*(x^3+x+1)").unwrap()]).unwrap()
    }

    #[test]
    fn generator_parsing() {
        let g = Generator::parse("u^4*(x+1)*(x^3+x+1)").unwrap();
        assert_eq!(g, Generator::new(4, p("x^4+x^3+x^2+1")));
        assert_eq!(Generator::parse("u*(x+1)").unwrap(), Generator::new(1, p("x+1")));
        assert_eq!(Generator::parse("x+1").unwrap(), Generator::new(0, p("x+1")));
        assert_eq!(Generator::parse("u^3").unwrap(), Generator::new(3, p("1")));
        assert!(Generator::parse("u^9*(x+1)").is_err());
        assert!(Generator::parse("u^4(x+1)").is_err());
        assert_eq!(Generator::parse_list("x+1; u^2*(x^3+x+1)").unwrap().len(), 2);
    }

    #[test]
    fn table3_code_size_and_membership() {
        let c = table3_code();
        let words = c.enumerate(DEFAULT_GUARD).unwrap();
        assert_eq!(words.len(), 64);
        assert!(words.contains(&RWord::zero(7)));
        // the code lies in u^4 R^n, so the all-alpha word is not a member
        assert!(!c.contains(&RWord::alpha(7)));
        assert!(!c.contains_structural(&RWord::alpha(7)));
        let (closed, witness) = is_reverse_complement_closed(&words);
        assert!(!closed);
        assert_eq!(witness, Some(RWord::zero(7)));
    }

    #[test]
    fn enumerate_examples() {
        let c = CodeOverR::from_generators(7, vec![Generator::new(4, p("x+1"))]).unwrap();
        assert_eq!(c.enumerate(DEFAULT_GUARD).unwrap().len(), 4096);
        let zero = CodeOverR::from_tower(7, &DivisorTower::new(7, DivisorTower::single(7, 0, BinaryPoly::x_n_minus_1(7))).unwrap()).unwrap();
        assert_eq!(zero.enumerate(1).unwrap(), vec![RWord::zero(7)]);
        assert_eq!(zero.torsion_profile().rank, 0);
        let full = CodeOverR::from_generators(7, vec![Generator::new(0, p("1"))]).unwrap();
        assert!(matches!(full.enumerate(DEFAULT_GUARD), Err(Error::GuardExceeded { size_log2: 42, .. })));
        assert_eq!(full.torsion_profile().size_log2(), 42);
    }

    #[test]
    fn single_slot_degenerates() {
        let f = DivisorTower::single(7, 2, p("x^3+x+1"));
        // not a chain for odd n, so the strict constructor refuses it
        assert!(DivisorTower::new(7, f.clone()).is_err());
        let a = CodeOverR::from_generators(7, vec![Generator::new(2, p("x^3+x+1"))]).unwrap();
        assert_eq!(a.size_log2(), 4 * 4);
    }

    #[test]
    fn tower_validation() {
        let mut f = DivisorTower::single(7, 0, p("x+1"));
        f[1] = p("x^3+x+1");
        assert!(matches!(DivisorTower::new(7, f), Err(Error::Tower(_))));
        assert_eq!(DivisorTower::all_odd(7).unwrap().len(), 343);
    }

    #[test]
    fn torsion_profile_matches_gcd_tower_for_odd_n() {
        let c = table3_code();
        let tp = c.torsion_profile();
        let gcd = c.gcd_tower();
        assert_eq!(tp.tor, gcd);
        assert_eq!(tp.size_log2(), 6);
        assert_eq!(tp.rank, 3);
        assert_eq!(tp.tor[4], p("x^4+x^3+x^2+1"));
    }

    #[test]
    fn sufficiency_examples() {
        let c = table3_code();
        assert!(!rc_sufficiency_check(&c));
        assert!(!p("x^3+x+1").is_self_reciprocal());
        // I(x) at every level gives {c I(x)}: contains alpha I, self-reciprocal
        let t = DivisorTower::new(7, std::array::from_fn(|_| BinaryPoly::indicator(7))).unwrap();
        let c = CodeOverR::from_tower(7, &t).unwrap();
        assert!(rc_sufficiency_check(&c));
        assert!(c.rc_closed_structural());
        assert_eq!(c.size_log2(), 6);
    }

    #[test]
    fn rc_closed_sets() {
        let (ok, _) = is_reverse_complement_closed(&[RWord::zero(4), RWord::alpha(4)]);
        assert!(ok);
        let (ok, w) = is_reverse_complement_closed(&[RWord::zero(4)]);
        assert!(!ok);
        assert_eq!(w, Some(RWord::zero(4)));
    }

    #[test]
    fn subcode_examples() {
        let c = CodeOverR::from_generators(7, vec![Generator::new(2, p("x^3+x+1"))]).unwrap();
        let r = subcode_u2_report(&c).unwrap();
        assert!(r.equal);
        let full = CodeOverR::from_generators(7, vec![Generator::new(0, p("1"))]).unwrap();
        assert_eq!(full.subcode_u2().unwrap().size_log2(), 4 * 7);
    }

    #[test]
    fn codon_alphabets() {
        let t = CodonTable::canonical();
        let a4 = codon_alphabet_of_ideal(4, t).unwrap();
        assert_eq!(a4.len(), 4);
        assert!(a4.contains(&"GGG".parse().unwrap()));
        assert_eq!(codon_alphabet_of_ideal(2, t).unwrap().len(), 16);
        assert_eq!(codon_alphabet_of_ideal(3, t).unwrap().len(), 8);
        assert!(codon_alphabet_of_ideal(5, t).is_err());
    }

    #[test]
    fn classification_of_table3_code() {
        let c = table3_code();
        let r = classify_dna_code(&c, 7, EditLevel::Codon, DEFAULT_GUARD).unwrap();
        assert!(!r.is_dna_code);
        assert!(!r.rc_closed);
        assert_eq!(r.min_edit, 2);
        assert!(r.max_edit <= 7);
        let r = classify_dna_code(&c, 21, EditLevel::Nucleotide, DEFAULT_GUARD).unwrap();
        assert_eq!(r.min_edit, 6);
    }

    #[test]
    fn ideal_property_of_enumeration() {
        let c = CodeOverR::from_generators(3, vec![Generator::new(1, p("x+1")), Generator::new(3, p("1"))]).unwrap();
        let words = c.enumerate(1 << 16).unwrap();
        let set: HashSet<&RWord> = words.iter().collect();
        for w in words.iter().take(200) {
            assert!(set.contains(&w.shift()));
            for a in R64::all() {
                assert!(set.contains(&w.scale(a)));
            }
        }
        for w in &words {
            assert_eq!(c.contains_structural(w), true);
        }
    }
}
