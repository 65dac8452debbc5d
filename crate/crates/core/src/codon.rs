//! DNA bases, codons, and the codon table for `R`.
//!
//! The printed codon table is not a bijection (AGG and TCC appear twice, CAA
//! and CAC share an element), so the table used here is rebuilt from eight
//! anchors and the complement rule `phi(x^) = phi(x)^`, keeping every printed
//! row that does not conflict.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::printed;
use crate::ring::{GrayWord6, R64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    A,
    C,
    G,
    T,
}

impl Base {
    pub const ALL: [Base; 4] = [Base::A, Base::C, Base::G, Base::T];

    pub const fn complement(self) -> Base {
        match self {
            Base::A => Base::T,
            Base::T => Base::A,
            Base::C => Base::G,
            Base::G => Base::C,
        }
    }

    pub fn from_char(ch: char, pos: usize) -> Result<Base> {
        match ch {
            'A' => Ok(Base::A),
            'C' => Ok(Base::C),
            'G' => Ok(Base::G),
            'T' => Ok(Base::T),
            _ => Err(Error::InvalidBase { ch, pos }),
        }
    }

    pub const fn to_char(self) -> char {
        match self {
            Base::A => 'A',
            Base::C => 'C',
            Base::G => 'G',
            Base::T => 'T',
        }
    }

    const fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Parses an uppercase ACGT string.
pub fn parse_bases(s: &str) -> Result<Vec<Base>> {
    s.chars()
        .enumerate()
        .map(|(pos, ch)| Base::from_char(ch, pos))
        .collect()
}

pub fn bases_to_string(bases: &[Base]) -> String {
    bases.iter().map(|b| b.to_char()).collect()
}

/// Basewise Watson–Crick complement.
pub fn dna_complement(s: &str) -> Result<String> {
    Ok(parse_bases(s)?.into_iter().map(|b| b.complement().to_char()).collect())
}

pub fn reverse_complement(s: &str) -> Result<String> {
    Ok(parse_bases(s)?
        .into_iter()
        .rev()
        .map(|b| b.complement().to_char())
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codon([Base; 3]);

impl Codon {
    pub const fn new(a: Base, b: Base, c: Base) -> Codon {
        Codon([a, b, c])
    }

    /// Lexicographic rank in `A < C < G < T`, in `0..64`.
    pub const fn index(self) -> usize {
        self.0[0].index() * 16 + self.0[1].index() * 4 + self.0[2].index()
    }

    pub fn from_index(i: usize) -> Codon {
        let b = |k: usize| Base::ALL[k % 4];
        Codon([b(i / 16), b(i / 4), b(i)])
    }

    pub fn all() -> impl Iterator<Item = Codon> {
        (0..64).map(Codon::from_index)
    }

    pub fn bases(self) -> [Base; 3] {
        self.0
    }

    pub const fn complement(self) -> Codon {
        Codon([self.0[0].complement(), self.0[1].complement(), self.0[2].complement()])
    }
}

impl fmt::Display for Codon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for Codon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Codon({self})")
    }
}

impl FromStr for Codon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Codon> {
        let b = parse_bases(s)?;
        match b.as_slice() {
            [x, y, z] => Ok(Codon([*x, *y, *z])),
            _ => Err(Error::Parse(format!("a codon has three bases, got {s:?}"))),
        }
    }
}

/// The anchors `(element, codon)` that the repaired table must keep.
pub const ANCHORS: [(&str, &str); 8] = [
    ("0", "GGG"),
    ("u^5+u^4+u^3+u^2+u+1", "CCC"),
    ("1", "CCT"),
    ("u", "CCG"),
    ("u^2", "TCC"),
    ("u^3", "GCC"),
    ("u^4", "CTC"),
    ("u^5", "TAC"),
];

/// How one printed row fared during repair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowFate {
    /// Printed value kept.
    Kept,
    /// Printed value conflicted with an anchor or an earlier row.
    Dropped,
}

/// A row of the repair report; `printed` is `None` for codons the printed
/// table never lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Diff {
    pub codon: Codon,
    pub printed: Option<R64>,
    pub derived: R64,
}

/// The repaired bijection `R <-> codons`.
#[derive(Clone, Debug)]
pub struct CodonTable {
    forward: [Codon; 64],
    inverse: [R64; 64],
}

impl CodonTable {
    /// The repaired table, built once.
    pub fn canonical() -> &'static CodonTable {
        static TABLE: OnceLock<CodonTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let rows: Vec<(Codon, R64)> = printed::TABLE1
                .iter()
                .map(|(c, e)| (c.parse().expect("fixture codon"), R64::parse(e).expect("fixture element")))
                .collect();
            CodonTable::repair(&anchor_pairs(), &rows)
                .expect("printed table repairs")
                .0
        })
    }

    /// Builds a complement-compatible bijection from anchors, then printed
    /// rows in order, then a lowest-codon-to-lowest-element fill.
    pub fn repair(
        anchors: &[(R64, Codon)],
        printed_rows: &[(Codon, R64)],
    ) -> Result<(CodonTable, Vec<RowFate>)> {
        let mut slots = Slots::default();
        for &(x, c) in anchors {
            if !slots.accept(x, c) {
                return Err(Error::CodonTable(format!("anchor {c} = {} conflicts", x.to_poly_string())));
            }
        }
        let fates = printed_rows
            .iter()
            .map(|&(c, x)| if slots.accept(x, c) { RowFate::Kept } else { RowFate::Dropped })
            .collect();

        for x in R64::all() {
            if slots.by_elem[x.bits() as usize].is_some() {
                continue;
            }
            let c = Codon::all()
                .find(|c| {
                    slots.by_codon[c.index()].is_none() && slots.by_codon[c.complement().index()].is_none()
                })
                .ok_or_else(|| Error::CodonTable("ran out of complement-free codons".into()))?;
            if !slots.accept(x, c) {
                return Err(Error::CodonTable(format!("could not place {}", x.to_poly_string())));
            }
        }

        let mut forward = [Codon::from_index(0); 64];
        let mut inverse = [R64::ZERO; 64];
        for x in R64::all() {
            let c = slots.by_elem[x.bits() as usize].expect("filled");
            forward[x.bits() as usize] = c;
            inverse[c.index()] = x;
        }
        let table = CodonTable { forward, inverse };
        table.check()?;
        Ok((table, fates))
    }

    fn check(&self) -> Result<()> {
        for x in R64::all() {
            if self.element(self.lookup(x)) != x {
                return Err(Error::CodonTable("not a bijection".into()));
            }
            if self.lookup(x.complement()) != self.lookup(x).complement() {
                return Err(Error::CodonTable(format!(
                    "complement rule fails at {}",
                    x.to_poly_string()
                )));
            }
        }
        Ok(())
    }

    pub fn lookup(&self, x: R64) -> Codon {
        self.forward[x.bits() as usize]
    }

    pub fn element(&self, c: Codon) -> R64 {
        self.inverse[c.index()]
    }

    /// Gray image attached to a codon: `grayMap(table^-1(c))`.
    pub fn binary_image(&self, c: Codon) -> GrayWord6 {
        self.element(c).gray()
    }

    pub fn encode_word(&self, w: &[R64]) -> String {
        w.iter().map(|&x| self.lookup(x).to_string()).collect()
    }

    pub fn decode_word(&self, s: &str) -> Result<Vec<R64>> {
        let bases = parse_bases(s)?;
        if bases.len() % 3 != 0 {
            return Err(Error::Parse(format!("length {} is not a multiple of 3", bases.len())));
        }
        Ok(bases
            .chunks(3)
            .map(|b| self.element(Codon([b[0], b[1], b[2]])))
            .collect())
    }

    /// Entries in printed-table order for reporting: sorted by element.
    pub fn entries(&self) -> impl Iterator<Item = (R64, Codon)> + '_ {
        R64::all().map(|x| (x, self.lookup(x)))
    }

    /// Every codon whose printed element differs from the repaired one, plus
    /// every codon the printed table omits. One row per printed row.
    pub fn table1_diff(&self) -> Vec<Table1Diff> {
        let mut out = Vec::new();
        let mut seen = [false; 64];
        for (c, e) in printed::TABLE1 {
            let codon: Codon = c.parse().expect("fixture codon");
            let printed = R64::parse(e).expect("fixture element");
            seen[codon.index()] = true;
            let derived = self.element(codon);
            if derived != printed {
                out.push(Table1Diff { codon, printed: Some(printed), derived });
            }
        }
        for c in Codon::all().filter(|c| !seen[c.index()]) {
            out.push(Table1Diff { codon: c, printed: None, derived: self.element(c) });
        }
        out
    }

    /// Generated Table 4: each codon with `grayMap(table^-1(c))`, in printed order.
    pub fn table4(&self) -> Vec<(Codon, GrayWord6)> {
        printed::TABLE4
            .iter()
            .map(|(c, _)| {
                let codon: Codon = c.parse().expect("fixture codon");
                (codon, self.binary_image(codon))
            })
            .collect()
    }

    /// Printed Table 4 rows whose bits differ from the generated image.
    pub fn table4_diff(&self) -> Vec<(Codon, GrayWord6, GrayWord6)> {
        printed::TABLE4
            .iter()
            .filter_map(|(c, bits)| {
                let codon: Codon = c.parse().expect("fixture codon");
                let printed = GrayWord6::parse(bits).expect("fixture bits");
                let derived = self.binary_image(codon);
                (printed != derived).then_some((codon, printed, derived))
            })
            .collect()
    }
}

/// Partial assignment during repair.
struct Slots {
    by_elem: [Option<Codon>; 64],
    by_codon: [Option<R64>; 64],
}

impl Default for Slots {
    fn default() -> Slots {
        Slots { by_elem: [None; 64], by_codon: [None; 64] }
    }
}

impl Slots {
    /// Places `x -> c` together with `x^ -> c^`. Re-placing an identical
    /// pair is accepted; anything else already taken is refused.
    fn accept(&mut self, x: R64, c: Codon) -> bool {
        let pairs = [(x, c), (x.complement(), c.complement())];
        let free = pairs.iter().all(|&(e, k)| {
            let slot_e = self.by_elem[e.bits() as usize];
            let slot_c = self.by_codon[k.index()];
            (slot_e.is_none() && slot_c.is_none()) || slot_e == Some(k)
        });
        if free {
            for (e, k) in pairs {
                self.by_elem[e.bits() as usize] = Some(k);
                self.by_codon[k.index()] = Some(e);
            }
        }
        free
    }
}

fn anchor_pairs() -> Vec<(R64, Codon)> {
    ANCHORS
        .iter()
        .map(|(e, c)| (R64::parse(e).expect("anchor"), c.parse().expect("anchor")))
        .collect()
}
