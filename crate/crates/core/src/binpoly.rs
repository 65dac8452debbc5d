//! Polynomials over F2.
//!
//! Coefficients are packed lowest degree first into 64-bit limbs, with no
//! trailing zero limbs; the zero polynomial has no limbs and no degree.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default cap on the number of divisors `divisors_of_xn_minus_1` will build.
pub const DIVISOR_GUARD: u128 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPoly {
    limbs: Vec<u64>,
}

impl BinaryPoly {
    pub fn zero() -> BinaryPoly {
        BinaryPoly { limbs: Vec::new() }
    }

    pub fn one() -> BinaryPoly {
        BinaryPoly { limbs: vec![1] }
    }

    pub fn x() -> BinaryPoly {
        BinaryPoly::monomial(1)
    }

    pub fn monomial(k: usize) -> BinaryPoly {
        let mut p = BinaryPoly::zero();
        p.flip(k);
        p
    }

    /// `x^n - 1`.
    pub fn x_n_minus_1(n: usize) -> BinaryPoly {
        let mut p = BinaryPoly::monomial(n);
        p.flip(0);
        p
    }

    /// `(x^n - 1)/(x - 1) = 1 + x + ... + x^(n-1)`.
    pub fn indicator(n: usize) -> BinaryPoly {
        BinaryPoly::from_bits((0..n).map(|_| true))
    }

    /// Coefficients lowest degree first.
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> BinaryPoly {
        let mut p = BinaryPoly::zero();
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                p.flip(i);
            }
        }
        p
    }

    /// Packs the low bits of `value`, bit `i` being the coefficient of `x^i`.
    pub fn from_u64(value: u64) -> BinaryPoly {
        let mut p = BinaryPoly { limbs: vec![value] };
        p.normalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|l| (l >> (i % 64)) & 1 == 1)
    }

    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        let top = self.degree().map_or(0, |d| d + 1);
        (0..top).filter(move |&i| self.coeff(i))
    }

    fn flip(&mut self, i: usize) {
        let limb = i / 64;
        if self.limbs.len() <= limb {
            self.limbs.resize(limb + 1, 0);
        }
        self.limbs[limb] ^= 1 << (i % 64);
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    /// `self ^= other << shift`.
    fn xor_shifted(&mut self, other: &BinaryPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let limb_shift = shift / 64;
        let bit_shift = shift % 64;
        let need = other.limbs.len() + limb_shift + 1;
        if self.limbs.len() < need {
            self.limbs.resize(need, 0);
        }
        for (i, &l) in other.limbs.iter().enumerate() {
            self.limbs[i + limb_shift] ^= l << bit_shift;
            if bit_shift != 0 {
                self.limbs[i + limb_shift + 1] ^= l >> (64 - bit_shift);
            }
        }
        self.normalize();
    }

    pub fn add(&self, other: &BinaryPoly) -> BinaryPoly {
        let mut out = self.clone();
        out.xor_shifted(other, 0);
        out
    }

    pub fn mul(&self, other: &BinaryPoly) -> BinaryPoly {
        let (small, big) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = BinaryPoly::zero();
        for i in small.support() {
            out.xor_shifted(big, i);
        }
        out
    }

    pub fn divrem(&self, divisor: &BinaryPoly) -> Result<(BinaryPoly, BinaryPoly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = BinaryPoly::zero();
        while let Some(r) = rem.degree() {
            if r < d {
                break;
            }
            quot.flip(r - d);
            rem.xor_shifted(divisor, r - d);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &BinaryPoly) -> Result<BinaryPoly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &BinaryPoly) -> Result<BinaryPoly> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Tower(format!("{divisor} does not divide {self}")))
        }
    }

    pub fn divides(&self, other: &BinaryPoly) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    pub fn gcd(&self, other: &BinaryPoly) -> BinaryPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }

    pub fn mulmod(&self, other: &BinaryPoly, modulus: &BinaryPoly) -> Result<BinaryPoly> {
        self.mul(other).rem(modulus)
    }

    /// Reciprocal `x^deg(f) f(1/x)`, i.e. coefficient reversal up to the degree.
    pub fn reciprocal(&self) -> Result<BinaryPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(BinaryPoly::from_bits((0..=d).map(|i| self.coeff(d - i))))
    }

    pub fn is_self_reciprocal(&self) -> bool {
        self.reciprocal().is_ok_and(|r| &r == self)
    }

    /// Irreducibility over F2: no factor of degree `<= deg/2`, tested via
    /// `gcd(x^(2^i) - x, f) = 1` for `i = 1..=deg/2`.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let x = BinaryPoly::x();
        let mut h = x.rem(self).expect("nonzero");
        for _ in 1..=d / 2 {
            h = h.mulmod(&h, self).expect("nonzero");
            if !self.gcd(&h.add(&x)).is_one() {
                return false;
            }
        }
        true
    }

    /// Coefficient string lowest degree first, e.g. `1101` for `x^3+x+1`.
    pub fn to_bit_string(&self) -> String {
        match self.degree() {
            None => "0".to_string(),
            Some(d) => (0..=d).map(|i| if self.coeff(i) { '1' } else { '0' }).collect(),
        }
    }

    /// Parses `x^3+x+1`, `1101` (lowest degree first), and products or powers
    /// such as `(x+1)*(x^3+x+1)` or `(x+1)^2`. A `-` is read as `+`.
    pub fn parse(text: &str) -> Result<BinaryPoly> {
        let mut p = PolyParser::new(text);
        let out = p.expr()?;
        p.finish()?;
        Ok(out)
    }
}

impl PartialOrd for BinaryPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for BinaryPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl fmt::Display for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for i in (0..=d).rev().filter(|&i| self.coeff(i)) {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryPoly({self})")
    }
}

impl FromStr for BinaryPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinaryPoly::parse(s)
    }
}

struct PolyParser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(src: &'a str) -> Self {
        PolyParser {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in polynomial {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.err("trailing input")),
        }
    }

    fn expr(&mut self) -> Result<BinaryPoly> {
        let mut acc = self.term()?;
        while matches!(self.peek(), Some('+') | Some('-')) {
            self.pos += 1;
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BinaryPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BinaryPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number()?;
            let mut out = BinaryPoly::one();
            for _ in 0..e {
                out = out.mul(&base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an exponent"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("exponent out of range"))
    }

    fn atom(&mut self) -> Result<BinaryPoly> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(BinaryPoly::x())
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
            Some(c) if c == '0' || c == '1' => {
                let start = self.pos;
                while matches!(self.peek(), Some('0') | Some('1')) {
                    self.pos += 1;
                }
                Ok(BinaryPoly::from_bits(
                    self.chars[start..self.pos].iter().map(|&c| c == '1'),
                ))
            }
            _ => Err(self.err("expected x, 0, 1, a bit string or '('")),
        }
    }
}

/// An irreducible factor with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: BinaryPoly,
    pub multiplicity: usize,
}

/// Complete factorization of `x^n - 1` over F2, sorted by degree then value.
///
/// With `n = m 2^s` and `m` odd, `x^n - 1 = (x^m - 1)^(2^s)`; `x^m - 1` is
/// squarefree and is split by distinct-degree then equal-degree factorization.
pub fn factor_xn_minus_1(n: usize) -> Result<Vec<Factor>> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let s = n.trailing_zeros();
    let m = n >> s;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_f2);
    let mut irreducibles = Vec::new();
    for (block, degree) in distinct_degree(&BinaryPoly::x_n_minus_1(m)) {
        equal_degree(&block, degree, &mut rng, &mut irreducibles);
    }
    irreducibles.sort();
    Ok(irreducibles
        .into_iter()
        .map(|poly| Factor {
            poly,
            multiplicity: 1 << s,
        })
        .collect())
}

/// Splits a squarefree polynomial into products of same-degree irreducibles.
fn distinct_degree(f: &BinaryPoly) -> Vec<(BinaryPoly, usize)> {
    let x = BinaryPoly::x();
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut h = x.rem(&rest).expect("nonzero");
    let mut d = 1;
    while rest.degree().is_some_and(|deg| deg >= 2 * d) {
        h = h.mulmod(&h, &rest).expect("nonzero");
        let g = rest.gcd(&h.add(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().is_some_and(|deg| deg > 0) {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    out
}

/// Equal-degree splitting in characteristic two using the trace map
/// `a + a^2 + ... + a^(2^(d-1))`, which is 0 or 1 modulo each factor.
fn equal_degree(f: &BinaryPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<BinaryPoly>) {
    let deg = f.degree().expect("nonzero block");
    if deg == d {
        out.push(f.clone());
        return;
    }
    loop {
        let a = BinaryPoly::from_bits((0..deg).map(|_| rng.gen::<bool>()));
        let mut term = a.rem(f).expect("nonzero");
        let mut trace = term.clone();
        for _ in 1..d {
            term = term.mulmod(&term, f).expect("nonzero");
            trace = trace.add(&term);
        }
        let g = f.gcd(&trace);
        if g.degree().is_some_and(|gd| gd > 0 && gd < deg) {
            let other = f.div_exact(&g).expect("gcd divides");
            equal_degree(&g, d, rng, out);
            equal_degree(&other, d, rng, out);
            return;
        }
    }
}

/// All monic divisors of `x^n - 1`, sorted by degree then value.
pub fn divisors_of_xn_minus_1(n: usize) -> Result<Vec<BinaryPoly>> {
    divisors_with_guard(n, DIVISOR_GUARD)
}

pub fn divisors_with_guard(n: usize, guard: u128) -> Result<Vec<BinaryPoly>> {
    let factors = factor_xn_minus_1(n)?;
    let count = factors
        .iter()
        .try_fold(1u128, |acc, f| acc.checked_mul(f.multiplicity as u128 + 1))
        .unwrap_or(u128::MAX);
    if count > guard {
        return Err(Error::DivisorGuard { count, guard });
    }
    let mut divisors = vec![BinaryPoly::one()];
    for f in &factors {
        let mut next = Vec::with_capacity(divisors.len() * (f.multiplicity + 1));
        for d in &divisors {
            let mut p = d.clone();
            next.push(p.clone());
            for _ in 0..f.multiplicity {
                p = p.mul(&f.poly);
                next.push(p.clone());
            }
        }
        divisors = next;
    }
    divisors.sort();
    Ok(divisors)
}

/// Whether `2^i = -1 (mod m)` for some `i >= 1`, `m` odd.
pub fn two_power_condition(m: u64) -> Result<bool> {
    if m % 2 == 0 {
        return Err(Error::EvenModulus(m));
    }
    if m == 1 {
        return Ok(true);
    }
    let target = m - 1;
    let mut p = 2 % m;
    // powers of 2 cycle with period ord_m(2) <= m - 1
    for _ in 0..m {
        if p == target {
            return Ok(true);
        }
        if p == 1 {
            return Ok(false);
        }
        p = p * 2 % m;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinaryPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("x+1").mul(&p("x+1")), p("x^2+1"));
        assert_eq!(p("x^3+x+1").gcd(&BinaryPoly::x_n_minus_1(7)), p("x^3+x+1"));
        assert!(BinaryPoly::x_n_minus_1(7).rem(&p("x+1")).unwrap().is_zero());
        assert!(matches!(p("x").divrem(&BinaryPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn parse_forms_agree() {
        assert_eq!(p("1101"), p("x^3+x+1"));
        assert_eq!(p("x^7-1"), BinaryPoly::x_n_minus_1(7));
        assert_eq!(p("(x+1)*(x^3+x+1)"), p("x^4+x^3+x^2+1"));
        assert_eq!(p("(x+1)^2"), p("x^2+1"));
        assert_eq!(p(" x^3 + x + 1 ").to_string(), "x^3+x+1");
        assert_eq!(p("x^3+x+1").to_bit_string(), "1101");
        assert!(BinaryPoly::parse("y+1").is_err());
        assert!(BinaryPoly::parse("(x+1").is_err());
        assert!(BinaryPoly::parse("x^").is_err());
    }

    #[test]
    fn factor_examples() {
        let f7 = factor_xn_minus_1(7).unwrap();
        let polys: Vec<String> = f7.iter().map(|f| f.poly.to_string()).collect();
        assert_eq!(polys, ["x+1", "x^3+x+1", "x^3+x^2+1"]);
        assert!(f7.iter().all(|f| f.multiplicity == 1));

        let f1 = factor_xn_minus_1(1).unwrap();
        assert_eq!(f1, vec![Factor { poly: p("x+1"), multiplicity: 1 }]);

        let f6 = factor_xn_minus_1(6).unwrap();
        assert_eq!(
            f6,
            vec![
                Factor { poly: p("x+1"), multiplicity: 2 },
                Factor { poly: p("x^2+x+1"), multiplicity: 2 },
            ]
        );
        assert!(matches!(factor_xn_minus_1(0), Err(Error::ZeroLength)));
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors_of_xn_minus_1(7).unwrap().len(), 8);
        assert_eq!(divisors_of_xn_minus_1(1).unwrap(), vec![p("1"), p("x+1")]);
        assert_eq!(divisors_of_xn_minus_1(2).unwrap(), vec![p("1"), p("x+1"), p("x^2+1")]);
        assert!(matches!(
            divisors_with_guard(7, 4),
            Err(Error::DivisorGuard { count: 8, guard: 4 })
        ));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p("x^3+x+1").reciprocal().unwrap(), p("x^3+x^2+1"));
        assert!(p("x+1").is_self_reciprocal());
        assert!(matches!(BinaryPoly::zero().reciprocal(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn two_power_examples() {
        assert!(two_power_condition(3).unwrap());
        assert!(two_power_condition(5).unwrap());
        assert!(!two_power_condition(7).unwrap());
        assert!(two_power_condition(9).unwrap());
        assert!(matches!(two_power_condition(8), Err(Error::EvenModulus(8))));
    }

    #[test]
    fn ordering_is_degree_first() {
        let mut v = vec![p("x^3+x^2+1"), p("x+1"), p("x^3+x+1"), p("1")];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["1", "x+1", "x^3+x+1", "x^3+x^2+1"]);
    }
}
