//! The ring `F2 + vF2`, the skew polynomial ring over it twisted by
//! `theta: v -> v+1`, and skew cyclic codes of even length.
//!
//! For even `n`, `x^n` is central, so `x^n - 1` generates a two-sided ideal
//! and left multiplication by `x` modulo `x^n - 1` is exactly the skew shift
//! `(c0, .., c_{n-1}) -> (theta(c_{n-1}), theta(c0), .., theta(c_{n-2}))`.
//! A code is then the F2-span of `{a * x^k * g : a in {1, v}, k < n}` over its
//! generators `g`.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use rayon::prelude::*;

use crate::binpoly::{self, BinaryPoly};
use crate::bits::{BitRow, F2Basis};
use crate::codon::{self, Base};
use crate::error::{Error, Result};

/// `a + v b` packed as `a | b << 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SkewScalar(u8);

impl SkewScalar {
    pub const ZERO: SkewScalar = SkewScalar(0);
    pub const ONE: SkewScalar = SkewScalar(1);
    pub const V: SkewScalar = SkewScalar(2);
    pub const V1: SkewScalar = SkewScalar(3);
    pub const ALL: [SkewScalar; 4] = [Self::ZERO, Self::ONE, Self::V, Self::V1];

    pub const fn new(a: bool, b: bool) -> SkewScalar {
        SkewScalar(a as u8 | (b as u8) << 1)
    }

    pub const fn a(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn b(self) -> bool {
        self.0 & 2 == 2
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Fixes `F2`, swaps `v` and `v+1`.
    pub const fn theta(self) -> SkewScalar {
        SkewScalar(self.0 ^ ((self.0 >> 1) & 1))
    }

    pub fn theta_pow(self, i: usize) -> SkewScalar {
        if i % 2 == 0 {
            self
        } else {
            self.theta()
        }
    }

    /// Partner under the DNA complement: `a + v`.
    pub const fn complement(self) -> SkewScalar {
        SkewScalar(self.0 ^ 2)
    }

    /// `0 -> G, v -> C, v+1 -> T, 1 -> A`.
    pub const fn to_base(self) -> Base {
        match self.0 {
            0 => Base::G,
            1 => Base::A,
            2 => Base::C,
            _ => Base::T,
        }
    }

    pub const fn from_base(b: Base) -> SkewScalar {
        match b {
            Base::G => SkewScalar::ZERO,
            Base::A => SkewScalar::ONE,
            Base::C => SkewScalar::V,
            Base::T => SkewScalar::V1,
        }
    }

    /// Gray image `(a + b, a)`.
    pub const fn gray(self) -> (bool, bool) {
        (self.a() ^ self.b(), self.a())
    }

    pub const fn from_gray(bits: (bool, bool)) -> SkewScalar {
        let a = bits.1;
        SkewScalar::new(a, bits.0 ^ a)
    }

    pub fn parse(text: &str) -> Result<SkewScalar> {
        match text.trim() {
            "0" => Ok(SkewScalar::ZERO),
            "1" => Ok(SkewScalar::ONE),
            "v" => Ok(SkewScalar::V),
            "v+1" | "1+v" | "(v+1)" | "(1+v)" => Ok(SkewScalar::V1),
            other => Err(Error::Parse(format!("bad skew scalar {other:?}"))),
        }
    }
}

impl Add for SkewScalar {
    type Output = SkewScalar;

    fn add(self, rhs: SkewScalar) -> SkewScalar {
        SkewScalar(self.0 ^ rhs.0)
    }
}

/// `(a + vb)(c + vd) = ac + v(ad + bc + bd)` since `v^2 = v`.
impl Mul for SkewScalar {
    type Output = SkewScalar;

    fn mul(self, rhs: SkewScalar) -> SkewScalar {
        let (a, b, c, d) = (self.a(), self.b(), rhs.a(), rhs.b());
        SkewScalar::new(a & c, (a & d) ^ (b & c) ^ (b & d))
    }
}

impl fmt::Display for SkewScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "v",
            _ => "v+1",
        })
    }
}

impl fmt::Debug for SkewScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewScalar({self})")
    }
}

impl FromStr for SkewScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SkewScalar::parse(s)
    }
}

/// Polynomial in `x` over `F2 + vF2`, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SkewPoly {
    coeffs: Vec<SkewScalar>,
}

impl SkewPoly {
    pub fn zero() -> SkewPoly {
        SkewPoly::default()
    }

    pub fn one() -> SkewPoly {
        SkewPoly::monomial(SkewScalar::ONE, 0)
    }

    pub fn monomial(a: SkewScalar, k: usize) -> SkewPoly {
        let mut coeffs = vec![SkewScalar::ZERO; k + 1];
        coeffs[k] = a;
        SkewPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<SkewScalar>) -> SkewPoly {
        let mut p = SkewPoly { coeffs };
        p.normalize();
        p
    }

    /// `a * f` for a binary polynomial `f`.
    pub fn from_binary(a: SkewScalar, f: &BinaryPoly) -> SkewPoly {
        let top = f.degree().map_or(0, |d| d + 1);
        SkewPoly::from_coeffs(
            (0..top)
                .map(|i| if f.coeff(i) { a } else { SkewScalar::ZERO })
                .collect(),
        )
    }

    /// `x^n - 1`.
    pub fn x_n_minus_1(n: usize) -> SkewPoly {
        SkewPoly::from_binary(SkewScalar::ONE, &BinaryPoly::x_n_minus_1(n))
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[SkewScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> SkewScalar {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> SkewScalar {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == SkewScalar::ONE
    }

    pub fn add(&self, other: &SkewPoly) -> SkewPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        SkewPoly::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    /// Skew product: `(a x^i)(b x^j) = a theta^i(b) x^(i+j)`.
    pub fn mul(&self, other: &SkewPoly) -> SkewPoly {
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero();
        }
        let mut out = vec![SkewScalar::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b.theta_pow(i);
            }
        }
        SkewPoly::from_coeffs(out)
    }

    /// Left multiplication by a scalar.
    pub fn scale(&self, a: SkewScalar) -> SkewPoly {
        SkewPoly::from_coeffs(self.coeffs.iter().map(|&c| a * c).collect())
    }

    /// `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn right_divrem(&self, divisor: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let mut rem = self.clone();
        let mut quot = vec![SkewScalar::ZERO; self.coeffs.len().saturating_sub(d)];
        while let Some(m) = rem.degree() {
            if m < d {
                break;
            }
            let c = rem.leading();
            quot[m - d] = quot[m - d] + c;
            rem = rem.add(&SkewPoly::monomial(c, m - d).mul(divisor));
        }
        Ok((SkewPoly::from_coeffs(quot), rem))
    }

    /// `f(x^-1) * x^deg f`; since `theta^i(1) = 1` this is coefficient reversal.
    pub fn reciprocal(&self) -> Result<SkewPoly> {
        let mut c = self.coeffs.clone();
        if c.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        c.reverse();
        Ok(SkewPoly::from_coeffs(c))
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal().is_ok_and(|r| &r == self)
    }

    /// `Some((a, f1))` when every nonzero coefficient equals one scalar `a`.
    pub fn as_scaled_binary(&self) -> Option<(SkewScalar, BinaryPoly)> {
        let a = self.leading();
        if a.is_zero() || self.coeffs.iter().any(|&c| !c.is_zero() && c != a) {
            return None;
        }
        Some((a, BinaryPoly::from_bits(self.coeffs.iter().map(|c| !c.is_zero()))))
    }

    /// Coefficient vector of `self mod (x^n - 1)`, assuming `x^n` central.
    pub fn to_word(&self, n: usize) -> SkewWord {
        let mut w = vec![SkewScalar::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            w[i % n] = w[i % n] + c;
        }
        SkewWord(w)
    }

    /// Parses sums of products of scalars, `x`, `x^k` and parenthesised
    /// subexpressions, e.g. `x^3+v*x^2+(v+1)*x+v` or `v*(x^2+x+1)`.
    pub fn parse(text: &str) -> Result<SkewPoly> {
        let mut p = SkewParser {
            src: text,
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let out = p.expr()?;
        if p.pos != p.chars.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let coef = match c {
                SkewScalar::V1 => "(v+1)",
                SkewScalar::V => "v",
                _ => "",
            };
            match (i, coef) {
                (0, _) => write!(f, "{c}")?,
                (1, "") => f.write_str("x")?,
                (1, s) => write!(f, "{s}*x")?,
                (_, "") => write!(f, "x^{i}")?,
                (_, s) => write!(f, "{s}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({self})")
    }
}

impl FromStr for SkewPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SkewPoly::parse(s)
    }
}

struct SkewParser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl SkewParser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in skew polynomial {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<SkewPoly> {
        let mut acc = self.term()?;
        while matches!(self.peek(), Some('+') | Some('-')) {
            self.pos += 1;
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SkewPoly> {
        let mut acc = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<SkewPoly> {
        match self.peek() {
            Some('0') => {
                self.pos += 1;
                Ok(SkewPoly::zero())
            }
            Some('1') => {
                self.pos += 1;
                Ok(SkewPoly::one())
            }
            Some('v') => {
                self.pos += 1;
                Ok(SkewPoly::monomial(SkewScalar::V, 0))
            }
            Some('x') => {
                self.pos += 1;
                let mut k = 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let start = self.pos;
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let s: String = self.chars[start..self.pos].iter().collect();
                    k = s.parse().map_err(|_| self.err("expected an exponent"))?;
                }
                Ok(SkewPoly::monomial(SkewScalar::ONE, k))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.err("expected 0, 1, v, x or '('")),
        }
    }
}

/// A word of `(F2 + vF2)^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewWord(pub Vec<SkewScalar>);

impl SkewWord {
    pub fn zero(n: usize) -> SkewWord {
        SkewWord(vec![SkewScalar::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(c0, .., c_{n-1}) -> (theta(c_{n-1}), theta(c0), .., theta(c_{n-2}))`.
    pub fn skew_shift(&self) -> SkewWord {
        let n = self.0.len();
        SkewWord((0..n).map(|i| self.0[(i + n - 1) % n].theta()).collect())
    }

    pub fn scale(&self, a: SkewScalar) -> SkewWord {
        SkewWord(self.0.iter().map(|&c| a * c).collect())
    }

    pub fn add(&self, other: &SkewWord) -> SkewWord {
        SkewWord(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// Reverse, then add `v` to every coordinate.
    pub fn reverse_complement(&self) -> SkewWord {
        SkewWord(self.0.iter().rev().map(|c| c.complement()).collect())
    }

    /// Coordinatewise `(a + b, a)`, length `2n`.
    pub fn gray(&self) -> BitRow {
        BitRow::from_bits(self.0.iter().flat_map(|c| {
            let (p, q) = c.gray();
            [p, q]
        }))
    }

    pub fn from_gray(row: &BitRow) -> SkewWord {
        SkewWord(
            (0..row.len() / 2)
                .map(|j| SkewScalar::from_gray((row.get(2 * j), row.get(2 * j + 1))))
                .collect(),
        )
    }

    pub fn to_dna(&self) -> String {
        self.0.iter().map(|c| c.to_base().to_char()).collect()
    }

    pub fn from_dna(s: &str) -> Result<SkewWord> {
        Ok(SkewWord(
            codon::parse_bases(s)?
                .into_iter()
                .map(SkewScalar::from_base)
                .collect(),
        ))
    }

    pub fn hamming_distance(&self, other: &SkewWord) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count())
    }
}

impl fmt::Display for SkewWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dna())
    }
}

impl fmt::Debug for SkewWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewWord({})", self.to_dna())
    }
}

/// Generators by the three structural cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkewGenerators {
    /// A single monic right divisor `g` of `x^n - 1`.
    Monic(SkewPoly),
    /// `f = a f1` with `a in {v, v+1}` and `f1 | x^n - 1`, plus a monic `g`.
    Pair { f: SkewPoly, g: SkewPoly },
    /// A single non-monic `f = a f1`.
    Scaled(SkewPoly),
}

impl SkewGenerators {
    pub fn case(&self) -> u8 {
        match self {
            SkewGenerators::Monic(_) => 1,
            SkewGenerators::Pair { .. } => 2,
            SkewGenerators::Scaled(_) => 3,
        }
    }

    pub fn polys(&self) -> Vec<&SkewPoly> {
        match self {
            SkewGenerators::Monic(g) => vec![g],
            SkewGenerators::Pair { f, g } => vec![f, g],
            SkewGenerators::Scaled(f) => vec![f],
        }
    }

    /// Picks the case from the shapes: one monic, one scaled, or one of each.
    pub fn from_polys(polys: Vec<SkewPoly>) -> Result<SkewGenerators> {
        let mut monic = Vec::new();
        let mut scaled = Vec::new();
        for p in polys {
            if p.is_monic() {
                monic.push(p);
            } else {
                scaled.push(p);
            }
        }
        match (monic.len(), scaled.len()) {
            (1, 0) => Ok(SkewGenerators::Monic(monic.remove(0))),
            (0, 1) => Ok(SkewGenerators::Scaled(scaled.remove(0))),
            (1, 1) => Ok(SkewGenerators::Pair { f: scaled.remove(0), g: monic.remove(0) }),
            (m, s) => Err(Error::SkewGenerator(format!(
                "expected one monic and/or one scaled generator, got {m} monic and {s} scaled"
            ))),
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        let xn1 = SkewPoly::x_n_minus_1(n);
        let check_monic = |g: &SkewPoly| -> Result<()> {
            let (_, r) = xn1.right_divrem(g)?;
            if r.is_zero() {
                Ok(())
            } else {
                Err(Error::SkewGenerator(format!("{g} is not a right divisor of x^{n}-1")))
            }
        };
        let check_scaled = |f: &SkewPoly| -> Result<()> {
            let (a, f1) = f.as_scaled_binary().ok_or_else(|| {
                Error::SkewGenerator(format!("{f} is not v*f1 or (v+1)*f1 for a binary f1"))
            })?;
            if a != SkewScalar::V && a != SkewScalar::V1 {
                return Err(Error::SkewGenerator(format!("{f} must be scaled by v or v+1")));
            }
            if !f1.divides(&BinaryPoly::x_n_minus_1(n)) {
                return Err(Error::SkewGenerator(format!("{f1} does not divide x^{n}-1")));
            }
            Ok(())
        };
        match self {
            SkewGenerators::Monic(g) => check_monic(g),
            SkewGenerators::Scaled(f) => check_scaled(f),
            SkewGenerators::Pair { f, g } => {
                check_scaled(f)?;
                check_monic(g)
            }
        }
    }
}

/// A skew cyclic code of even length, held as the F2 row space of its Gray image.
#[derive(Clone, Debug)]
pub struct SkewCode {
    n: usize,
    generators: SkewGenerators,
    basis: F2Basis,
}

impl SkewCode {
    pub fn build(n: usize, generators: SkewGenerators) -> Result<SkewCode> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        if n % 2 == 1 {
            return Err(Error::OddLength(n));
        }
        generators.check(n)?;
        let mut basis = F2Basis::new(2 * n);
        for g in generators.polys() {
            let mut shifted = g.to_word(n);
            for _ in 0..n {
                basis.insert(shifted.gray());
                basis.insert(shifted.scale(SkewScalar::V).gray());
                shifted = shifted.skew_shift();
            }
        }
        Ok(SkewCode { n, generators, basis })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn generators(&self) -> &SkewGenerators {
        &self.generators
    }

    pub fn basis(&self) -> &F2Basis {
        &self.basis
    }

    /// `log2 |C|`.
    pub fn dimension(&self) -> usize {
        self.basis.rank()
    }

    pub fn contains(&self, w: &SkewWord) -> bool {
        w.len() == self.n && self.basis.contains(&w.gray())
    }

    /// All words in ascending order.
    pub fn enumerate(&self, guard: u64) -> Result<Vec<SkewWord>> {
        let dim = self.dimension() as u32;
        if dim >= 64 || 1u64 << dim > guard {
            return Err(Error::GuardExceeded { size_log2: dim, guard });
        }
        let mut words: Vec<SkewWord> = self.basis.span().map(|r| SkewWord::from_gray(&r)).collect();
        words.sort();
        Ok(words)
    }

    /// Exact RC closure without enumeration. The map `w -> rev(w) + v1` is
    /// affine, so a linear code is closed iff it holds `v1` and is closed
    /// under reversal, which can be tested on a basis.
    pub fn rc_closed_structural(&self) -> bool {
        let v_word = SkewWord(vec![SkewScalar::V; self.n]);
        self.contains(&v_word)
            && self.basis.rows().all(|r| {
                let mut w = SkewWord::from_gray(r);
                w.0.reverse();
                self.contains(&w)
            })
    }
}

/// Outcome of the RC theorems on one code.
#[derive(Clone, Debug)]
pub struct SkewRcReport {
    pub case: u8,
    pub generators: String,
    pub dimension: usize,
    pub v_indicator_member: bool,
    pub self_reciprocal: bool,
    pub rc_closed: bool,
    /// A word whose reverse-complement is missing.
    pub rc_witness: Option<SkewWord>,
    pub sufficiency_violated: bool,
    pub necessity_violated: bool,
}

impl SkewRcReport {
    pub fn sufficiency(&self) -> bool {
        self.v_indicator_member && self.self_reciprocal
    }
}

/// Evaluates `v I(x) in C`, self-reciprocity of each generator (of `f1` for
/// scaled ones), and RC closure. Closure is decided on the enumerated word
/// set when it fits under `guard`, structurally otherwise.
pub fn skew_rc_checks(code: &SkewCode, guard: u64) -> SkewRcReport {
    let n = code.len();
    let v_indicator_member = code.contains(&SkewWord(vec![SkewScalar::V; n]));
    let self_reciprocal = code.generators.polys().iter().all(|p| match p.as_scaled_binary() {
        Some((a, f1)) if a != SkewScalar::ONE => f1.is_self_reciprocal(),
        _ => p.is_self_reciprocal(),
    });
    let (rc_closed, rc_witness) = match code.enumerate(guard) {
        Ok(words) => {
            let set: HashSet<&SkewWord> = words.iter().collect();
            let witness = words.iter().find(|w| !set.contains(&w.reverse_complement())).cloned();
            (witness.is_none(), witness)
        }
        Err(_) => (code.rc_closed_structural(), None),
    };
    let sufficiency = v_indicator_member && self_reciprocal;
    SkewRcReport {
        case: code.generators.case(),
        generators: code
            .generators
            .polys()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("; "),
        dimension: code.dimension(),
        v_indicator_member,
        self_reciprocal,
        rc_closed,
        rc_witness,
        sufficiency_violated: sufficiency && !rc_closed,
        necessity_violated: rc_closed && !sufficiency,
    }
}

/// Monic right divisors `g` of `x^n - 1`, each with its left cofactor `q`
/// (`x^n - 1 = q * g`), by exhaustive search. A divisor must have constant
/// term 1, because `q0 g0 = 1` and 1 is the only unit.
pub fn monic_right_divisors(n: usize) -> Vec<(SkewPoly, SkewPoly)> {
    let xn1 = SkewPoly::x_n_minus_1(n);
    let mut out: Vec<(SkewPoly, SkewPoly)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|d| {
            let inner = if d == 0 { 0 } else { d - 1 };
            let xn1 = xn1.clone();
            (0..1u64 << (2 * inner)).filter_map(move |code| {
                let mut c = vec![SkewScalar::ONE];
                for k in 0..inner {
                    c.push(SkewScalar((code >> (2 * k)) as u8 & 3));
                }
                if d > 0 {
                    c.push(SkewScalar::ONE);
                }
                let g = SkewPoly::from_coeffs(c);
                let (q, r) = xn1.right_divrem(&g).ok()?;
                r.is_zero().then_some((g, q))
            })
        })
        .collect();
    // the only degree-n monic divisor is x^n - 1 itself, with cofactor 1
    out.push((xn1, SkewPoly::one()));
    out.sort();
    out
}

/// Every case-1 and case-3 code of length `n`.
pub fn all_single_generator_codes(n: usize) -> Result<Vec<SkewCode>> {
    let mut out = Vec::new();
    for (g, _) in monic_right_divisors(n) {
        out.push(SkewCode::build(n, SkewGenerators::Monic(g))?);
    }
    for f1 in binpoly::divisors_of_xn_minus_1(n)? {
        for a in [SkewScalar::V, SkewScalar::V1] {
            out.push(SkewCode::build(n, SkewGenerators::Scaled(SkewPoly::from_binary(a, &f1)))?);
        }
    }
    Ok(out)
}

/// RC status of a set of DNA strings.
#[derive(Clone, Debug)]
pub struct DnaSetRc {
    pub closed: bool,
    /// Members whose reverse-complement is absent, with that reverse-complement.
    pub witnesses: Vec<(String, String)>,
}

pub fn verify_dna_set_rc<S: AsRef<str>>(words: &[S]) -> Result<DnaSetRc> {
    let len = words.first().map(|w| w.as_ref().len());
    let mut set = HashSet::new();
    for w in words {
        let w = w.as_ref();
        codon::parse_bases(w)?;
        if Some(w.len()) != len {
            return Err(Error::LengthMismatch(len.unwrap_or(0), w.len()));
        }
        set.insert(w.to_string());
    }
    let mut witnesses = Vec::new();
    for w in words {
        let rc = codon::reverse_complement(w.as_ref())?;
        if !set.contains(&rc) {
            witnesses.push((w.as_ref().to_string(), rc));
        }
    }
    Ok(DnaSetRc { closed: witnesses.is_empty(), witnesses })
}

/// Gray images of a list of skew words.
pub fn skew_gray_image(words: &[SkewWord]) -> Vec<BitRow> {
    words.iter().map(SkewWord::gray).collect()
}

/// One code from the generator search with how much of the target it holds.
#[derive(Clone, Debug)]
pub struct SearchHit {
    pub case: u8,
    pub generator: String,
    pub dimension: usize,
    pub contained: usize,
}

/// Scans all case-1/case-3 codes of length `n`, returning for each the number
/// of `targets` it contains, best first (ties by smaller dimension).
pub fn generator_search(n: usize, targets: &[SkewWord]) -> Result<Vec<SearchHit>> {
    let codes = all_single_generator_codes(n)?;
    let mut hits: Vec<SearchHit> = codes
        .par_iter()
        .map(|c| SearchHit {
            case: c.generators().case(),
            generator: c.generators().polys()[0].to_string(),
            dimension: c.dimension(),
            contained: targets.iter().filter(|t| c.contains(t)).count(),
        })
        .collect();
    hits.sort_by(|a, b| {
        b.contained
            .cmp(&a.contained)
            .then(a.dimension.cmp(&b.dimension))
            .then_with(|| a.generator.cmp(&b.generator))
    });
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SkewPoly {
        s.parse().unwrap()
    }

    #[test]
    fn theta_is_an_involutive_automorphism() {
        for a in SkewScalar::ALL {
            assert_eq!(a.theta().theta(), a);
            for b in SkewScalar::ALL {
                assert_eq!((a + b).theta(), a.theta() + b.theta());
                assert_eq!((a * b).theta(), a.theta() * b.theta());
            }
        }
        assert_eq!(SkewScalar::V.theta(), SkewScalar::V1);
        assert_eq!(SkewScalar::V * SkewScalar::V, SkewScalar::V);
    }

    #[test]
    fn complement_identities() {
        for a in SkewScalar::ALL {
            assert_eq!(a + a.complement(), SkewScalar::V);
            assert_eq!(a.theta() + a.complement().theta(), SkewScalar::V1);
            assert_eq!(a.complement().to_base(), a.to_base().complement());
        }
        assert_eq!(SkewScalar::V.to_base(), Base::C);
        assert_eq!(SkewScalar::ONE.to_base(), Base::A);
    }

    #[test]
    fn skew_mul_examples() {
        assert_eq!(sp("x").mul(&sp("v")), sp("(v+1)*x"));
        assert_eq!(sp("v*x").mul(&sp("v*x^2")), SkewPoly::zero());
        assert_eq!(sp("x+1").mul(&sp("x+1")), sp("x^2+1"));
        for a in SkewScalar::ALL {
            let lhs = sp("x").mul(&SkewPoly::monomial(a, 0));
            assert_eq!(lhs, SkewPoly::monomial(a.theta(), 1));
        }
    }

    #[test]
    fn right_division_examples() {
        let (q, r) = sp("x^2+1").right_divrem(&sp("x+1")).unwrap();
        assert_eq!((q, r), (sp("x+1"), SkewPoly::zero()));
        let x10 = SkewPoly::x_n_minus_1(10);
        let (q, r) = x10.right_divrem(&sp("x+1")).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&sp("x+1")), x10);
        let p = sp("x^3+v*x+1");
        assert_eq!(p.right_divrem(&p).unwrap(), (SkewPoly::one(), SkewPoly::zero()));
        assert!(matches!(p.right_divrem(&sp("v*x+1")), Err(Error::NonMonicDivisor)));
    }

    #[test]
    fn reciprocal_examples() {
        let (f, fstar) = crate::printed::SKEW_RECIPROCAL_EXAMPLE;
        assert_eq!(sp(f).reciprocal().unwrap(), sp(fstar));
        assert!(sp("x+1").is_self_reciprocal());
        let g = sp("v*x^2+x+1");
        assert_eq!(g.reciprocal().unwrap().reciprocal().unwrap(), g);
        assert_eq!(sp(fstar).to_string(), "v*x^3+(v+1)*x^2+v*x+1");
    }

    #[test]
    fn build_examples() {
        assert!(SkewCode::build(10, SkewGenerators::Monic(sp("x+1"))).is_ok());
        let f = SkewPoly::from_binary(SkewScalar::V, &BinaryPoly::indicator(10));
        let c = SkewCode::build(10, SkewGenerators::Scaled(f)).unwrap();
        assert!(c.contains(&SkewWord(vec![SkewScalar::V; 10])));
        assert!(matches!(
            SkewCode::build(3, SkewGenerators::Monic(sp("x+1"))),
            Err(Error::OddLength(3))
        ));
        assert!(matches!(
            SkewCode::build(4, SkewGenerators::Monic(sp("x^3+x+1"))),
            Err(Error::SkewGenerator(_))
        ));
    }

    #[test]
    fn n2_code_by_hand() {
        let c = SkewCode::build(2, SkewGenerators::Monic(sp("x+1"))).unwrap();
        let words: Vec<String> = c.enumerate(1 << 16).unwrap().iter().map(|w| w.to_dna()).collect();
        // every left multiple of x+1 mod x^2-1 is (c, c)
        let mut expect = vec!["GG", "AA", "CC", "TT"];
        expect.sort_by_key(|s| SkewWord::from_dna(s).unwrap());
        assert_eq!(words, expect);
        let image = skew_gray_image(&c.enumerate(16).unwrap());
        assert!(crate::bits::is_linear(&image));
        assert_eq!(image.len(), 4);
        assert!(image.iter().all(|r| r.len() == 4));
    }

    #[test]
    fn gray_examples() {
        assert_eq!(SkewScalar::V.gray(), (true, false));
        assert!(SkewWord::zero(5).gray().is_zero());
        assert_eq!(SkewWord::zero(5).gray().len(), 10);
        for a in SkewScalar::ALL {
            assert_eq!(SkewScalar::from_gray(a.gray()), a);
        }
    }

    #[test]
    fn dna_set_examples() {
        assert!(verify_dna_set_rc(&["GGGGGGGGGG", "CCCCCCCCCC"]).unwrap().closed);
        let r = verify_dna_set_rc(&["AAAA"]).unwrap();
        assert!(!r.closed);
        assert_eq!(r.witnesses, vec![("AAAA".to_string(), "TTTT".to_string())]);
        assert!(verify_dna_set_rc(&["AAAA", "AAA"]).is_err());
        assert!(verify_dna_set_rc(&["AANA"]).is_err());
    }

    #[test]
    fn structural_rc_matches_enumeration() {
        for n in [2, 4, 6] {
            for code in all_single_generator_codes(n).unwrap() {
                let rep = skew_rc_checks(&code, 1 << 16);
                assert_eq!(rep.rc_closed, code.rc_closed_structural(), "{}", rep.generators);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(sp("v*(x^2+x+1)"), sp("v*x^2+v*x+v"));
        assert_eq!(sp("(v+1)*x^2+1").to_string(), "(v+1)*x^2+1");
        assert!(SkewPoly::parse("x^").is_err());
        assert!(SkewPoly::parse("w").is_err());
    }
}
