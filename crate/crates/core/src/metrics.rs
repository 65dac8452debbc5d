//! Hamming, Lee and edit distances, pairwise minimum scans, and the edit
//! bounds for codon images.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::codon::CodonTable;
use crate::cyclic::RWord;
use crate::error::{Error, Result};

pub type Cost = Ratio<u64>;

/// Which strings an `R`-word is compared as.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EditLevel {
    /// One codon symbol per coordinate, length `n`.
    #[default]
    Codon,
    /// Three bases per coordinate, length `3n`.
    Nucleotide,
}

impl fmt::Display for EditLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EditLevel::Codon => "codon",
            EditLevel::Nucleotide => "nucleotide",
        })
    }
}

impl FromStr for EditLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "codon" => Ok(EditLevel::Codon),
            "nucleotide" => Ok(EditLevel::Nucleotide),
            _ => Err(Error::Parse(format!("unknown edit level {s:?}"))),
        }
    }
}

pub fn hamming_distance<T: PartialEq>(x: &[T], y: &[T]) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.iter().zip(y).filter(|(a, b)| a != b).count())
}

/// `sum_i leeWeight(x_i - y_i)`.
pub fn lee_distance(x: &RWord, y: &RWord) -> Result<u32> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.0.iter().zip(&y.0).map(|(&a, &b)| (a - b).lee_weight()).sum())
}

/// Levenshtein distance with two rolling rows.
pub fn edit_distance_unit<T: PartialEq>(x: &[T], y: &[T]) -> usize {
    let mut prev: Vec<usize> = (0..=y.len()).collect();
    let mut cur = vec![0; y.len() + 1];
    for (i, a) in x.iter().enumerate() {
        cur[0] = i + 1;
        for (j, b) in y.iter().enumerate() {
            let sub = prev[j] + usize::from(a != b);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[y.len()]
}

/// Per-operation costs keyed by symbol text, `-` standing for the empty symbol.
/// Absent entries cost 1, or 0 on the diagonal.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EditCostTable {
    entries: HashMap<(String, String), Cost>,
}

impl EditCostTable {
    pub fn unit() -> EditCostTable {
        EditCostTable::default()
    }

    pub fn set(&mut self, from: &str, to: &str, cost: Ratio<i64>) -> Result<()> {
        if cost < Ratio::from_integer(0) {
            return Err(Error::NegativeCost(format!("{from} -> {to}")));
        }
        let c = Cost::new(*cost.numer() as u64, *cost.denom() as u64);
        self.entries.insert((from.to_string(), to.to_string()), c);
        Ok(())
    }

    /// `from,to,cost` lines; cost is an integer or a fraction `p/q`.
    pub fn parse_csv(text: &str) -> Result<EditCostTable> {
        let mut table = EditCostTable::unit();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let [from, to, cost] = fields.as_slice() else {
                return Err(Error::Parse(format!("cost line {}: expected 3 fields", lineno + 1)));
            };
            let cost: Ratio<i64> = match cost.parse() {
                Ok(c) => c,
                // header row
                Err(_) if lineno == 0 => continue,
                Err(_) => return Err(Error::Parse(format!("cost line {}: bad cost {cost:?}", lineno + 1))),
            };
            table.set(from, to, cost)?;
        }
        Ok(table)
    }

    fn cost(&self, from: &str, to: &str) -> Cost {
        match self.entries.get(&(from.to_string(), to.to_string())) {
            Some(&c) => c,
            None if from == to => Cost::from_integer(0),
            None => Cost::from_integer(1),
        }
    }

    pub fn substitute(&self, a: &str, b: &str) -> Cost {
        self.cost(a, b)
    }

    pub fn delete(&self, a: &str) -> Cost {
        self.cost(a, "-")
    }

    pub fn insert(&self, b: &str) -> Cost {
        self.cost("-", b)
    }
}

/// The edit recursion with an arbitrary cost table, exact in rationals.
pub fn edit_distance<T: fmt::Display>(x: &[T], y: &[T], costs: &EditCostTable) -> Cost {
    let xs: Vec<String> = x.iter().map(|s| s.to_string()).collect();
    let ys: Vec<String> = y.iter().map(|s| s.to_string()).collect();
    let mut prev = vec![Cost::from_integer(0); ys.len() + 1];
    for j in 0..ys.len() {
        prev[j + 1] = prev[j] + costs.insert(&ys[j]);
    }
    let mut cur = prev.clone();
    for a in &xs {
        cur[0] = prev[0] + costs.delete(a);
        for (j, b) in ys.iter().enumerate() {
            let sub = prev[j] + costs.substitute(a, b);
            let del = prev[j + 1] + costs.delete(a);
            let ins = cur[j] + costs.insert(b);
            cur[j + 1] = sub.min(del).min(ins);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[ys.len()]
}

/// Cheapest edit script from `x` to every string of length `<= max_len` over
/// `0..alphabet`, by Dijkstra over single substitutions, deletions and
/// insertions. `cost(a, b)` uses `None` for the empty symbol.
pub fn edit_script_search(
    x: &[u8],
    alphabet: u8,
    max_len: usize,
    cost: &dyn Fn(Option<u8>, Option<u8>) -> Cost,
) -> HashMap<Vec<u8>, Cost> {
    let mut dist: HashMap<Vec<u8>, Cost> = HashMap::new();
    let mut heap = BinaryHeap::new();
    dist.insert(x.to_vec(), Cost::from_integer(0));
    heap.push(Reverse((Cost::from_integer(0), x.to_vec())));
    while let Some(Reverse((d, s))) = heap.pop() {
        if dist.get(&s).is_some_and(|&best| best < d) {
            continue;
        }
        let mut relax = |t: Vec<u8>, step: Cost| {
            let nd = d + step;
            if dist.get(&t).is_none_or(|&old| nd < old) {
                dist.insert(t.clone(), nd);
                heap.push(Reverse((nd, t)));
            }
        };
        for i in 0..s.len() {
            for b in 0..alphabet {
                if b != s[i] {
                    let mut t = s.clone();
                    t[i] = b;
                    relax(t, cost(Some(s[i]), Some(b)));
                }
            }
            let mut t = s.clone();
            t.remove(i);
            relax(t, cost(Some(s[i]), None));
        }
        if s.len() < max_len {
            for i in 0..=s.len() {
                for b in 0..alphabet {
                    let mut t = s.clone();
                    t.insert(i, b);
                    relax(t, cost(None, Some(b)));
                }
            }
        }
    }
    dist
}

/// Minimum and maximum over all unordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub metric: String,
    pub min: u64,
    /// Lexicographically first pair attaining the minimum.
    pub argmin: (usize, usize),
    pub max: u64,
    pub pairs: u64,
}

/// Exact pairwise scan, parallel over the first index. The reduction picks
/// the smallest `(value, i, j)`, so the result does not depend on scheduling.
pub fn min_pairwise<T, F>(words: &[T], metric: &str, dist: F) -> Result<DistanceReport>
where
    T: Sync,
    F: Fn(&T, &T) -> u64 + Sync,
{
    if words.len() < 2 {
        return Err(Error::TooFewWords(words.len()));
    }
    let n = words.len();
    let ((min, i, j), max) = (0..n - 1)
        .into_par_iter()
        .map(|i| {
            let mut best = (u64::MAX, i, i);
            let mut worst = 0;
            for j in i + 1..n {
                let d = dist(&words[i], &words[j]);
                if d < best.0 {
                    best = (d, i, j);
                }
                worst = worst.max(d);
            }
            (best, worst)
        })
        .reduce(
            || ((u64::MAX, usize::MAX, usize::MAX), 0),
            |a, b| (a.0.min(b.0), a.1.max(b.1)),
        );
    Ok(DistanceReport {
        metric: metric.to_string(),
        min,
        argmin: (i, j),
        max,
        pairs: (n as u64) * (n as u64 - 1) / 2,
    })
}

/// Symbol strings for edit distance: codon indices or bases.
pub fn edit_symbols(w: &RWord, level: EditLevel, table: &CodonTable) -> Vec<u8> {
    match level {
        EditLevel::Codon => w.0.iter().map(|&c| table.lookup(c).index() as u8).collect(),
        EditLevel::Nucleotide => w
            .0
            .iter()
            .flat_map(|&c| table.lookup(c).bases())
            .map(|b| b as u8)
            .collect(),
    }
}

pub fn min_pairwise_edit(words: &[RWord], level: EditLevel, table: &CodonTable) -> Result<DistanceReport> {
    let symbols: Vec<Vec<u8>> = words.iter().map(|w| edit_symbols(w, level, table)).collect();
    min_pairwise(&symbols, &format!("edit_{level}"), |a, b| edit_distance_unit(a, b) as u64)
}

pub fn min_pairwise_hamming(words: &[RWord]) -> Result<DistanceReport> {
    min_pairwise(words, "hamming", |a, b| {
        a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count() as u64
    })
}

pub fn min_pairwise_lee(words: &[RWord]) -> Result<DistanceReport> {
    min_pairwise(words, "lee", |a, b| {
        a.0.iter().zip(&b.0).map(|(&x, &y)| (x - y).lee_weight() as u64).sum()
    })
}

/// The three codon-level edit bounds for one pair of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EditBounds {
    pub n: usize,
    pub edit: usize,
    pub hamming: usize,
    /// `d_c <= n`.
    pub within_length: bool,
    /// `d_c <= d_H`.
    pub within_hamming: bool,
    /// `d_c(phi X, phi Y^) = d_c(phi Y, phi X^)`.
    pub complement_symmetric: bool,
}

impl EditBounds {
    pub fn all_hold(&self) -> bool {
        self.within_length && self.within_hamming && self.complement_symmetric
    }
}

pub fn edit_bounds_check(x: &RWord, y: &RWord, table: &CodonTable) -> Result<EditBounds> {
    let n = x.len();
    let hamming = hamming_distance(&x.0, &y.0)?;
    let sym = |w: &RWord| edit_symbols(w, EditLevel::Codon, table);
    let edit = edit_distance_unit(&sym(x), &sym(y));
    let lhs = edit_distance_unit(&sym(x), &sym(&y.complement()));
    let rhs = edit_distance_unit(&sym(y), &sym(&x.complement()));
    Ok(EditBounds {
        n,
        edit,
        hamming,
        within_length: edit <= n,
        within_hamming: edit <= hamming,
        complement_symmetric: lhs == rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::R64;

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming_distance(&RWord::zero(7).0, &RWord::zero(7).0).unwrap(), 0);
        assert_eq!(hamming_distance(&RWord::zero(7).0, &RWord::alpha(7).0).unwrap(), 7);
        assert!(matches!(hamming_distance(&[1], &[1, 2]), Err(Error::LengthMismatch(1, 2))));
    }

    #[test]
    fn lee_examples() {
        let w = RWord(vec![R64::U, R64::ALPHA, R64::ONE]);
        assert_eq!(lee_distance(&w, &w).unwrap(), 0);
        assert_eq!(lee_distance(&RWord::zero(5), &RWord::alpha(5)).unwrap(), 30);
    }

    #[test]
    fn edit_examples() {
        let s: Vec<char> = "ACGT".chars().collect();
        let t: Vec<char> = "AGT".chars().collect();
        assert_eq!(edit_distance_unit(&s, &s), 0);
        assert_eq!(edit_distance_unit(&s, &t), 1);
        assert_eq!(edit_distance_unit::<char>(&[], &[]), 0);
        assert_eq!(edit_distance(&s, &t, &EditCostTable::unit()), Cost::from_integer(1));
    }

    #[test]
    fn weighted_edit_matches_search() {
        let mut costs = EditCostTable::unit();
        costs.set("0", "1", Ratio::new(1, 2)).unwrap();
        // no two-step detour is cheaper than a direct operation here; with
        // such detours the script minimum can undercut the recursion
        costs.set("-", "2", Ratio::new(3, 2)).unwrap();
        costs.set("1", "-", Ratio::new(5, 4)).unwrap();
        let f = |a: Option<u8>, b: Option<u8>| -> Cost {
            let s = |o: Option<u8>| o.map_or("-".to_string(), |v| v.to_string());
            match (a, b) {
                (Some(a), Some(b)) => costs.substitute(&s(Some(a)), &s(Some(b))),
                (Some(a), None) => costs.delete(&s(Some(a))),
                (None, Some(b)) => costs.insert(&s(Some(b))),
                (None, None) => Cost::from_integer(0),
            }
        };
        let x = [0u8, 1, 2];
        let all = edit_script_search(&x, 3, 4, &f);
        for (y, d) in &all {
            assert_eq!(edit_distance(&x, y, &costs), *d, "{y:?}");
        }
    }

    #[test]
    fn cost_csv() {
        let t = EditCostTable::parse_csv("from_symbol,to_symbol,cost\nA,C,1/2\nA,-,2\n").unwrap();
        assert_eq!(t.substitute("A", "C"), Cost::new(1, 2));
        assert_eq!(t.delete("A"), Cost::from_integer(2));
        assert_eq!(t.insert("A"), Cost::from_integer(1));
        assert_eq!(t.substitute("G", "G"), Cost::from_integer(0));
        assert!(matches!(EditCostTable::parse_csv("A,C,-1"), Err(Error::NegativeCost(_))));
        assert!(EditCostTable::parse_csv("A,C").is_err());
        assert!(EditCostTable::parse_csv("A,C,1\nA,G,x").is_err());
        assert_eq!(EditCostTable::parse_csv("from,to,cost\nA,C,3").unwrap().substitute("A", "C"), Cost::from_integer(3));
    }

    #[test]
    fn pairwise_examples() {
        let w = vec![RWord::zero(3), RWord::zero(3)];
        assert_eq!(min_pairwise_hamming(&w).unwrap().min, 0);
        assert!(matches!(min_pairwise_hamming(&w[..1]), Err(Error::TooFewWords(1))));
    }

    #[test]
    fn bounds_examples() {
        let t = CodonTable::canonical();
        let r = edit_bounds_check(&RWord::zero(7), &RWord::alpha(7), t).unwrap();
        assert_eq!((r.edit, r.hamming), (7, 7));
        assert!(r.all_hold());
        let x = RWord(vec![R64::U; 4]);
        assert!(edit_bounds_check(&x, &x, t).unwrap().all_hold());
    }
}
