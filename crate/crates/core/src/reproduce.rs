//! Regeneration of the printed tables, with diffs against the fixtures in
//! [`crate::printed`], and the line-oriented report format shared by the CLI.

use std::collections::BTreeSet;
use std::fmt;

use crate::binpoly::{self, BinaryPoly};
use crate::bits::{self, BitRow};
use crate::codon::CodonTable;
use crate::cyclic::{self, CodeOverR, Generator, RWord};
use crate::error::Result;
use crate::metrics::{self, EditLevel};
use crate::printed::{self, Table2Row};
use crate::skew::{self, DnaSetRc, SearchHit, SkewWord};

/// `key: value` lines followed by named CSV sections.
#[derive(Clone, Debug, Default)]
pub struct Report {
    text: String,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn kv(&mut self, key: &str, value: impl fmt::Display) -> &mut Report {
        self.text.push_str(&format!("{key}: {value}\n"));
        self
    }

    pub fn csv<I: IntoIterator<Item = String>>(&mut self, name: &str, header: &str, rows: I) -> &mut Report {
        self.text.push_str(&format!("[csv {name}]\n{header}\n"));
        for r in rows {
            self.text.push_str(&r);
            self.text.push('\n');
        }
        self.text.push_str("[end]\n");
        self
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    /// `(name, header and rows)` for each CSV section.
    pub fn csv_sections(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let mut current: Option<(String, String)> = None;
        for line in self.text.lines() {
            if let Some(name) = line.strip_prefix("[csv ").and_then(|l| l.strip_suffix(']')) {
                current = Some((name.to_string(), String::new()));
            } else if line == "[end]" {
                out.extend(current.take());
            } else if let Some((_, body)) = current.as_mut() {
                body.push_str(line);
                body.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// `x^n - 1` as a product of irreducibles.
pub fn factor_report(n: usize) -> Result<Report> {
    let factors = binpoly::factor_xn_minus_1(n)?;
    let mut r = Report::new();
    r.kv("n", n);
    for f in &factors {
        if f.multiplicity == 1 {
            r.kv("factor", &f.poly);
        } else {
            r.kv("factor", format!("({})^{}", f.poly, f.multiplicity));
        }
    }
    let product: String = factors
        .iter()
        .map(|f| match f.multiplicity {
            1 => format!("({})", f.poly),
            m => format!("({})^{m}", f.poly),
        })
        .collect();
    r.kv("product", product);
    Ok(r)
}

/// Binary image linear and closed under rotation by `index` bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrayCheck {
    pub words: usize,
    pub linear: bool,
    pub quasi_cyclic: bool,
}

pub fn gray_check(image: &[BitRow], index: usize) -> GrayCheck {
    GrayCheck {
        words: image.len(),
        linear: bits::is_linear(image),
        quasi_cyclic: bits::shift_closure_witness(image, index).is_none(),
    }
}

pub fn r_gray_check(words: &[RWord]) -> GrayCheck {
    let image: Vec<BitRow> = words.iter().map(RWord::gray).collect();
    gray_check(&image, 6)
}

/// One regenerated Table 2 row.
#[derive(Clone, Debug)]
pub struct Table2Line {
    pub printed: Table2Row,
    pub poly: BinaryPoly,
    /// Words enumerated for `<u^4 f>`.
    pub size: usize,
    /// `4^(7 - deg f)` as a power of two.
    pub formula_log2: usize,
    pub torsion_log2: usize,
    /// `log2 |<u^2 f>|`, the printed reading.
    pub u2_log2: usize,
    pub min_hamming: u64,
    pub min_edit: u64,
    /// `min deg f_i + 1` over the nontrivial slots.
    pub degree_bound: u64,
    /// `n - rank + 1`.
    pub rank_bound: u64,
    /// Smallest codon-level edit distance inside any nonzero torsion code.
    pub torsion_min_edit: Option<u64>,
    pub gray: GrayCheck,
}

pub fn table2_poly(row: &Table2Row) -> BinaryPoly {
    row.factors.iter().fold(BinaryPoly::one(), |acc, &k| {
        acc.mul(&printed::TABLE2_FACTORS[k].parse().expect("fixture polynomial"))
    })
}

pub fn table2() -> Result<Vec<Table2Line>> {
    let n = 7;
    let table = CodonTable::canonical();
    printed::TABLE2
        .iter()
        .map(|row| {
            let f = table2_poly(row);
            let code = CodeOverR::from_generators(n, vec![Generator::new(4, f.clone())])?;
            let words = code.enumerate(cyclic::DEFAULT_GUARD)?;
            let u2 = CodeOverR::from_generators(n, vec![Generator::new(row.printed_u_power, f.clone())])?;
            let tp = code.torsion_profile();
            let deg = f.degree().unwrap_or(0);
            let torsion_min_edit = torsion_min_edit(&tp.tor, n)?;
            Ok(Table2Line {
                printed: *row,
                size: words.len(),
                formula_log2: 2 * (n - deg),
                torsion_log2: tp.size_log2(),
                u2_log2: u2.size_log2(),
                min_hamming: metrics::min_pairwise_hamming(&words)?.min,
                min_edit: metrics::min_pairwise_edit(&words, EditLevel::Codon, table)?.min,
                degree_bound: deg as u64 + 1,
                rank_bound: (n - tp.rank) as u64 + 1,
                torsion_min_edit,
                gray: r_gray_check(&words),
                poly: f,
            })
        })
        .collect()
}

/// Minimum pairwise edit distance over the nonzero torsion codes, each read
/// as binary strings of length `n`.
fn torsion_min_edit(tor: &[BinaryPoly; 6], n: usize) -> Result<Option<u64>> {
    let xn1 = BinaryPoly::x_n_minus_1(n);
    let mut best: Option<u64> = None;
    for g in tor.iter().filter(|g| **g != xn1) {
        let code = CodeOverR::from_generators(n, vec![Generator::new(5, g.clone())])?;
        let words: Vec<Vec<bool>> = code
            .enumerate(cyclic::DEFAULT_GUARD)?
            .iter()
            .map(|w| w.0.iter().map(|c| c.coeff(5)).collect())
            .collect();
        if words.len() >= 2 {
            let d = metrics::min_pairwise(&words, "edit", |a, b| metrics::edit_distance_unit(a, b) as u64)?.min;
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    Ok(best)
}

pub fn table2_report(lines: &[Table2Line]) -> Report {
    let mut r = Report::new();
    r.kv("table", 2);
    r.kv("reading", "generators taken as u^4 f; the printed table shows u^2 f");
    r.csv(
        "table2",
        "row,printed_generator,computed_generator,printed_type,size,formula_size,u2_reading_size,min_hamming,min_edit_codon,edit_bound,torsion_min_edit,gray_linear,gray_quasi_cyclic_6",
        lines.iter().map(|l| {
            let (pn, pm, pd) = l.printed.printed_type;
            format!(
                "{},{},u^4*({}),({pn};{pm};{pd}),{},2^{},2^{},{},{},{},{},{},{}",
                l.printed.number,
                l.printed.label,
                l.poly,
                l.size,
                l.formula_log2,
                l.u2_log2,
                l.min_hamming,
                l.min_edit,
                l.degree_bound.min(l.rank_bound),
                l.torsion_min_edit.map_or("-".to_string(), |d| d.to_string()),
                l.gray.linear,
                l.gray.quasi_cyclic,
            )
        }),
    );
    r.csv(
        "table2_diff",
        "row,field,printed_value,derived_value",
        lines.iter().flat_map(|l| {
            let (_, pm, pd) = l.printed.printed_type;
            let mut d = vec![format!(
                "{},generator,u^{}*({}),u^4*({})",
                l.printed.number, l.printed.printed_u_power, l.poly, l.poly
            )];
            if pm != l.size as u64 {
                d.push(format!("{},size,{pm},{}", l.printed.number, l.size));
            }
            if pd != l.min_hamming as usize {
                d.push(format!("{},min_hamming,{pd},{}", l.printed.number, l.min_hamming));
            }
            d
        }),
    );
    r
}

/// The Table 3 code and what was found about it.
#[derive(Clone, Debug)]
pub struct Table3Result {
    pub code: CodeOverR,
    pub words: Vec<RWord>,
    pub dna: Vec<String>,
    pub printed_distinct: usize,
    /// Printed strings not produced by the regeneration.
    pub printed_only: Vec<String>,
    /// Regenerated strings absent from the printed list.
    pub regenerated_only: Vec<String>,
    pub rc_closed: bool,
    pub rc_witness: Option<RWord>,
    pub contains_zero: bool,
    pub contains_alpha: bool,
    pub min_hamming: u64,
    pub min_edit_codon: u64,
    pub min_edit_nucleotide: u64,
    /// How many printed rows pair a word with its complement, and with its
    /// reverse-complement.
    pub printed_complement_pairs: usize,
    pub printed_rc_pairs: usize,
    pub gray: GrayCheck,
}

pub fn table3_code() -> Result<CodeOverR> {
    CodeOverR::from_generators(7, vec![Generator::parse("u^4*(x+1)*(x^3+x+1)")?])
}

pub fn table3() -> Result<Table3Result> {
    let table = CodonTable::canonical();
    let code = table3_code()?;
    let words = code.enumerate(cyclic::DEFAULT_GUARD)?;
    let dna: Vec<String> = words.iter().map(|w| w.to_dna(table)).collect();
    let regenerated: BTreeSet<&str> = dna.iter().map(String::as_str).collect();
    let printed: BTreeSet<&str> = printed::TABLE3.iter().copied().collect();
    let (rc_closed, rc_witness) = cyclic::is_reverse_complement_closed(&words);
    let pairs = printed::TABLE3.chunks(2);
    let printed_complement_pairs = pairs
        .clone()
        .filter(|p| crate::codon::dna_complement(p[0]).is_ok_and(|c| c == p[1]))
        .count();
    let printed_rc_pairs = pairs
        .filter(|p| crate::codon::reverse_complement(p[0]).is_ok_and(|c| c == p[1]))
        .count();
    Ok(Table3Result {
        printed_distinct: printed.len(),
        printed_only: printed.difference(&regenerated).map(|s| s.to_string()).collect(),
        regenerated_only: regenerated.difference(&printed).map(|s| s.to_string()).collect(),
        rc_closed,
        rc_witness,
        contains_zero: code.contains(&RWord::zero(7)),
        contains_alpha: code.contains(&RWord::alpha(7)),
        min_hamming: metrics::min_pairwise_hamming(&words)?.min,
        min_edit_codon: metrics::min_pairwise_edit(&words, EditLevel::Codon, table)?.min,
        min_edit_nucleotide: metrics::min_pairwise_edit(&words, EditLevel::Nucleotide, table)?.min,
        printed_complement_pairs,
        printed_rc_pairs,
        gray: r_gray_check(&words),
        code,
        words,
        dna,
    })
}

pub fn table3_report(t: &Table3Result) -> Report {
    let table = CodonTable::canonical();
    let mut r = Report::new();
    r.kv("table", 3)
        .kv("code", t.code.description())
        .kv("n", 7)
        .kv("words", t.words.len())
        .kv("printed_distinct_strings", t.printed_distinct)
        .kv("contains_zero_word", t.contains_zero)
        .kv("contains_alpha_word", t.contains_alpha)
        .kv("rc_closed", t.rc_closed)
        .kv(
            "rc_witness",
            t.rc_witness.as_ref().map_or("-".to_string(), |w| w.to_dna(table)),
        )
        .kv("min_hamming", t.min_hamming)
        .kv("min_edit_codon", t.min_edit_codon)
        .kv("min_edit_nucleotide", t.min_edit_nucleotide)
        .kv("printed_rows_paired_with_complement", t.printed_complement_pairs)
        .kv("printed_rows_paired_with_reverse_complement", t.printed_rc_pairs)
        .kv("gray_linear", t.gray.linear)
        .kv("gray_quasi_cyclic_6", t.gray.quasi_cyclic);
    r.csv("table3", "index,dna", t.dna.iter().enumerate().map(|(i, s)| format!("{i},{s}")));
    r.csv(
        "table3_diff",
        "dna,in_printed,in_regenerated",
        t.printed_only
            .iter()
            .map(|s| format!("{s},true,false"))
            .chain(t.regenerated_only.iter().map(|s| format!("{s},false,true"))),
    );
    r
}

pub fn table1_report() -> Report {
    let t = CodonTable::canonical();
    let mut r = Report::new();
    let diff = t.table1_diff();
    r.kv("table", 1).kv("entries", 64).kv("repaired_rows", diff.len());
    r.csv(
        "table1",
        "element_bits,element,codon",
        t.entries()
            .map(|(x, c)| format!("{x},{},{c}", x.to_poly_string())),
    );
    r.csv(
        "table1_diff",
        "codon,printed_value,derived_value",
        diff.iter().map(|d| {
            format!(
                "{},{},{}",
                d.codon,
                d.printed.map_or("-".to_string(), |p| p.to_poly_string()),
                d.derived.to_poly_string()
            )
        }),
    );
    r
}

pub fn table4_report() -> Report {
    let t = CodonTable::canonical();
    let diff = t.table4_diff();
    let mut r = Report::new();
    r.kv("table", 4).kv("entries", 64).kv("differing_rows", diff.len());
    r.csv("table4", "codon,bits", t.table4().into_iter().map(|(c, b)| format!("{c},{b}")));
    r.csv(
        "table4_diff",
        "codon,printed_value,derived_value",
        diff.into_iter().map(|(c, p, d)| format!("{c},{p},{d}")),
    );
    r
}

#[derive(Clone, Debug)]
pub struct Table5Result {
    pub distinct: usize,
    pub rc: DnaSetRc,
    pub min_hamming: u64,
    pub max_hamming: u64,
    /// Gray image of the printed set: linear, closed under 2-bit rotation.
    pub gray: GrayCheck,
    pub codes_searched: usize,
    /// Codes containing every printed string.
    pub full_hits: Vec<SearchHit>,
    pub best: Vec<SearchHit>,
}

pub fn table5() -> Result<Table5Result> {
    let words: Vec<SkewWord> = printed::TABLE5
        .iter()
        .map(|s| SkewWord::from_dna(s))
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<&SkewWord> = words.iter().collect();
    let rc = skew::verify_dna_set_rc(&printed::TABLE5)?;
    let ham = metrics::min_pairwise(&words, "hamming", |a, b| {
        a.hamming_distance(b).expect("equal lengths") as u64
    })?;
    let image = skew::skew_gray_image(&words);
    let hits = skew::generator_search(10, &words)?;
    Ok(Table5Result {
        distinct: distinct.len(),
        rc,
        min_hamming: ham.min,
        max_hamming: ham.max,
        gray: gray_check(&image, 2),
        codes_searched: hits.len(),
        full_hits: hits.iter().filter(|h| h.contained == words.len()).cloned().collect(),
        best: hits.into_iter().take(5).collect(),
    })
}

pub fn table5_report(t: &Table5Result) -> Report {
    let mut r = Report::new();
    r.kv("table", 5)
        .kv("printed_strings", printed::TABLE5.len())
        .kv("distinct_strings", t.distinct)
        .kv("rc_closed", t.rc.closed)
        .kv("rc_witnesses", t.rc.witnesses.len())
        .kv("min_hamming", t.min_hamming)
        .kv("max_hamming", t.max_hamming)
        .kv("gray_linear", t.gray.linear)
        .kv("gray_quasi_cyclic_2", t.gray.quasi_cyclic)
        .kv("codes_searched", t.codes_searched)
        .kv("codes_containing_all", t.full_hits.len());
    r.csv(
        "table5_rc_witnesses",
        "dna,missing_reverse_complement",
        t.rc.witnesses.iter().map(|(w, rc)| format!("{w},{rc}")),
    );
    r.csv(
        "table5_best_codes",
        "case,generator,dimension,printed_strings_contained",
        t.best
            .iter()
            .map(|h| format!("{},{},{},{}", h.case, h.generator, h.dimension, h.contained)),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_report_lines() {
        let r = factor_report(7).unwrap();
        let factors: Vec<&str> = r.as_str().lines().filter_map(|l| l.strip_prefix("factor: ")).collect();
        assert_eq!(factors, ["x+1", "x^3+x+1", "x^3+x^2+1"]);
        assert!(factor_report(6).unwrap().as_str().contains("factor: (x+1)^2"));
    }

    #[test]
    fn report_sections() {
        let mut r = Report::new();
        r.kv("a", 1).csv("s", "h", ["x".to_string()]);
        assert_eq!(r.as_str(), "a: 1\n[csv s]\nh\nx\n[end]\n");
        assert_eq!(r.csv_sections(), [("s".to_string(), "h\nx\n".to_string())]);
    }
}
