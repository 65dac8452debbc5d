//! Packed binary vectors and incremental F2 row reduction.
//!
//! Both code families here are additive groups of characteristic two, so a
//! code is exactly the F2-span of any generating set of its Gray images. The
//! basis below keeps one row per pivot and supports membership tests and a
//! streaming walk over the whole span.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

/// Fixed-length vector over F2, little-endian within 64-bit limbs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    len: usize,
    limbs: SmallVec<[u64; 2]>,
}

impl BitRow {
    pub fn zeros(len: usize) -> BitRow {
        BitRow {
            len,
            limbs: SmallVec::from_elem(0, len.div_ceil(64).max(1)),
        }
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> BitRow {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut row = BitRow::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                row.set(i, true);
            }
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.limbs[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.limbs[i / 64] |= mask;
        } else {
            self.limbs[i / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.limbs.iter_mut().zip(other.limbs.iter()) {
            *a ^= *b;
        }
    }

    /// Index of the highest set bit.
    pub fn leading(&self) -> Option<usize> {
        self.limbs
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &l)| l != 0)
            .map(|(i, &l)| i * 64 + 63 - l.leading_zeros() as usize)
    }

    /// Cyclic rotation towards higher indices: bit `i` moves to `i + k mod len`.
    pub fn rotate(&self, k: usize) -> BitRow {
        let mut out = BitRow::zeros(self.len);
        if self.len == 0 {
            return out;
        }
        for i in self.ones() {
            out.set((i + k) % self.len, true);
        }
        out
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn hamming_distance(&self, other: &BitRow) -> u32 {
        self.limbs
            .iter()
            .zip(other.limbs.iter())
            .map(|(a, b)| (a ^ b).count_ones())
            .sum()
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow({self})")
    }
}

/// Row-echelon basis of an F2 subspace, keyed by pivot (leading bit).
#[derive(Clone, Debug)]
pub struct F2Basis {
    len: usize,
    rows: BTreeMap<usize, BitRow>,
}

impl F2Basis {
    pub fn new(len: usize) -> F2Basis {
        F2Basis {
            len,
            rows: BTreeMap::new(),
        }
    }

    pub fn from_rows<'a>(len: usize, rows: impl IntoIterator<Item = &'a BitRow>) -> F2Basis {
        let mut basis = F2Basis::new(len);
        for r in rows {
            basis.insert(r.clone());
        }
        basis
    }

    pub fn row_len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; zero iff `v` is in the span.
    pub fn reduce(&self, mut v: BitRow) -> BitRow {
        while let Some(p) = v.leading() {
            match self.rows.get(&p) {
                Some(row) => v.xor_assign(row),
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: BitRow) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            Some(p) => {
                self.rows.insert(p, r);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &BitRow) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    pub fn rows(&self) -> impl Iterator<Item = &BitRow> {
        self.rows.values()
    }

    /// Every vector of the span exactly once, in Gray-code order starting at zero.
    pub fn span(&self) -> SpanIter<'_> {
        SpanIter {
            rows: self.rows.values().collect(),
            current: BitRow::zeros(self.len),
            step: 0,
            total: 1u128 << self.rows.len(),
        }
    }
}

pub struct SpanIter<'a> {
    rows: Vec<&'a BitRow>,
    current: BitRow,
    step: u128,
    total: u128,
}

impl Iterator for SpanIter<'_> {
    type Item = BitRow;

    fn next(&mut self) -> Option<BitRow> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let flip = self.step.trailing_zeros() as usize;
            self.current.xor_assign(self.rows[flip]);
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.total - self.step).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}

/// Exact linearity test for a finite set: a set is a subspace iff its size
/// equals the size of its span.
pub fn is_linear(set: &[BitRow]) -> bool {
    let Some(first) = set.first() else {
        return false;
    };
    let mut sorted: Vec<&BitRow> = set.iter().collect();
    sorted.sort();
    sorted.dedup();
    let basis = F2Basis::from_rows(first.len(), sorted.iter().copied());
    basis.rank() < 128 && (sorted.len() as u128) == 1u128 << basis.rank()
}

/// A member whose rotation by `k` bits is not a member, if any.
pub fn shift_closure_witness(set: &[BitRow], k: usize) -> Option<BitRow> {
    let members: std::collections::HashSet<&BitRow> = set.iter().collect();
    set.iter().find(|w| !members.contains(&w.rotate(k))).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_wraps() {
        let r = BitRow::from_bits([true, false, false, true]);
        assert_eq!(r.rotate(1).to_string(), "1100");
        assert_eq!(r.rotate(4), r);
    }

    #[test]
    fn span_walk_visits_each_vector_once() {
        let rows = [
            BitRow::from_bits([true, true, false, false, false]),
            BitRow::from_bits([false, true, true, false, false]),
            BitRow::from_bits([true, false, true, false, false]),
            BitRow::from_bits([false, false, false, false, true]),
        ];
        let basis = F2Basis::from_rows(5, rows.iter());
        assert_eq!(basis.rank(), 3);
        let mut all: Vec<BitRow> = basis.span().collect();
        assert_eq!(all.len(), 8);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|v| basis.contains(v)));
        assert!(is_linear(&all));
        assert!(!is_linear(&all[1..]));
    }

    #[test]
    fn wide_rows_cross_limb_boundaries() {
        let mut a = BitRow::zeros(130);
        a.set(129, true);
        a.set(3, true);
        assert_eq!(a.leading(), Some(129));
        assert_eq!(a.rotate(1).ones().collect::<Vec<_>>(), vec![0, 4]);
        assert_eq!(a.weight(), 2);
    }
}
