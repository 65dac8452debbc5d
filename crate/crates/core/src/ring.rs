//! The chain ring `R = F2[u]/(u^6)`.
//!
//! An element `a0 + a1 u + ... + a5 u^5` is packed into the low six bits of a
//! byte with `a0` in the least significant position. Addition is XOR and
//! multiplication is the carry-free product with every term of degree six or
//! more dropped.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

const MASK: u8 = 0x3f;

/// Element of `F2[u]/(u^6)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct R64(u8);

impl R64 {
    pub const ZERO: R64 = R64(0);
    pub const ONE: R64 = R64(1);
    pub const U: R64 = R64(2);
    /// `1 + u + u^2 + u^3 + u^4 + u^5`, the complement of zero.
    pub const ALPHA: R64 = R64(MASK);

    /// Builds an element from its packed coefficient bits, or `None` if a bit
    /// above `u^5` is set.
    pub const fn new(bits: u8) -> Option<R64> {
        if bits & !MASK == 0 {
            Some(R64(bits))
        } else {
            None
        }
    }

    pub const fn from_bits_truncate(bits: u8) -> R64 {
        R64(bits & MASK)
    }

    /// `u^i`; zero for `i >= 6`.
    pub const fn u_pow(i: usize) -> R64 {
        if i >= 6 {
            R64(0)
        } else {
            R64(1 << i)
        }
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn coeff(self, i: usize) -> bool {
        i < 6 && (self.0 >> i) & 1 == 1
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    /// Largest `i` with `self` in `u^i R`; `None` for zero.
    pub fn valuation(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    /// Watson–Crick partner: `x + x^ = alpha(u)`.
    pub const fn complement(self) -> R64 {
        R64(self.0 ^ MASK)
    }

    pub const fn lee_weight(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn gray(self) -> GrayWord6 {
        GrayWord6(self.0)
    }

    /// All 64 elements in packed order.
    pub fn all() -> impl Iterator<Item = R64> + Clone {
        (0..64u8).map(R64)
    }

    /// Human form such as `u^5+u^2+1`.
    pub fn to_poly_string(self) -> String {
        if self.0 == 0 {
            return "0".to_string();
        }
        let terms: Vec<String> = (0..6)
            .rev()
            .filter(|&i| self.coeff(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "u".to_string(),
                _ => format!("u^{i}"),
            })
            .collect();
        terms.join("+")
    }

    /// Accepts either the six-bit string `a0a1a2a3a4a5` or a polynomial in `u`.
    pub fn parse(text: &str) -> Result<R64> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.len() == 6 && t.chars().all(|c| c == '0' || c == '1') {
            let bits = t
                .bytes()
                .enumerate()
                .fold(0u8, |acc, (i, b)| acc | ((b - b'0') << i));
            return Ok(R64(bits));
        }
        if t.is_empty() {
            return Err(Error::Parse("empty ring element".into()));
        }
        let mut bits = 0u8;
        for term in t.split('+') {
            let exp = match term {
                "0" => continue,
                "1" => 0,
                "u" => 1,
                _ => term
                    .strip_prefix("u^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad ring term {term:?} in {text:?}")))?,
            };
            if exp >= 6 {
                continue;
            }
            bits ^= 1 << exp;
        }
        Ok(R64(bits))
    }
}

impl fmt::Display for R64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.gray(), f)
    }
}

impl fmt::Debug for R64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R64({})", self.to_poly_string())
    }
}

impl FromStr for R64 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        R64::parse(s)
    }
}

impl Add for R64 {
    type Output = R64;

    fn add(self, rhs: R64) -> R64 {
        R64(self.0 ^ rhs.0)
    }
}

impl AddAssign for R64 {
    fn add_assign(&mut self, rhs: R64) {
        self.0 ^= rhs.0;
    }
}

impl Sub for R64 {
    type Output = R64;

    fn sub(self, rhs: R64) -> R64 {
        R64(self.0 ^ rhs.0)
    }
}

impl Neg for R64 {
    type Output = R64;

    fn neg(self) -> R64 {
        self
    }
}

impl Mul for R64 {
    type Output = R64;

    fn mul(self, rhs: R64) -> R64 {
        let mut acc = 0u8;
        for i in 0..6 {
            if (rhs.0 >> i) & 1 == 1 {
                acc ^= self.0 << i;
            }
        }
        R64(acc & MASK)
    }
}

impl MulAssign for R64 {
    fn mul_assign(&mut self, rhs: R64) {
        *self = *self * rhs;
    }
}

/// Binary image `(a0, ..., a5)` of a ring element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrayWord6(u8);

impl GrayWord6 {
    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn bit(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    pub const fn hamming_weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Inverse of the Gray map.
    pub const fn element(self) -> R64 {
        R64(self.0)
    }

    pub fn parse(text: &str) -> Result<GrayWord6> {
        let t = text.trim();
        if t.len() != 6 || !t.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::Parse(format!("expected six bits, got {text:?}")));
        }
        Ok(R64::parse(t)?.gray())
    }
}

impl std::ops::BitXor for GrayWord6 {
    type Output = GrayWord6;

    fn bitxor(self, rhs: GrayWord6) -> GrayWord6 {
        GrayWord6(self.0 ^ rhs.0)
    }
}

impl fmt::Display for GrayWord6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..6 {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for GrayWord6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrayWord6({self})")
    }
}

/// Members of the ideal `u^i R`, in packed order. There are `2^(6-i)` of them.
pub fn ideal_members(i: usize) -> Result<Vec<R64>> {
    if i > 6 {
        return Err(Error::IdealExponent(i));
    }
    let step = R64::u_pow(i);
    let mut out: Vec<R64> = R64::all().map(|x| x * step).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> R64 {
        s.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(R64::U + R64::U, R64::ZERO);
        assert_eq!(R64::ZERO + R64::ALPHA, R64::ALPHA);
        assert_eq!(r("u^2+u") + r("u^2+1"), r("u+1"));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(R64::u_pow(3) * R64::u_pow(3), R64::ZERO);
        assert_eq!(R64::U * r("u^4+1"), r("u^5+u"));
        // u^2 * (1+u+...+u^5) = u^2+u^3+u^4+u^5+u^6+u^7, truncated
        assert_eq!(R64::u_pow(2) * R64::ALPHA, r("u^5+u^4+u^3+u^2"));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(R64::ZERO.complement(), R64::ALPHA);
        assert_eq!(R64::ALPHA.complement(), R64::ZERO);
        assert_eq!(r("u^2+u").complement(), r("u^5+u^4+u^3+1"));
    }

    #[test]
    fn lee_weight_examples() {
        assert_eq!(R64::ZERO.lee_weight(), 0);
        assert_eq!(R64::ALPHA.lee_weight(), 6);
        assert_eq!(r("u^2+u").lee_weight(), 2);
    }

    #[test]
    fn gray_map_examples() {
        assert_eq!(R64::ZERO.gray().to_string(), "000000");
        assert_eq!(R64::u_pow(5).gray().to_string(), "000001");
        assert_eq!(r("u^5+1").gray().to_string(), "100001");
    }

    #[test]
    fn ideal_examples() {
        assert_eq!(ideal_members(6).unwrap(), vec![R64::ZERO]);
        assert_eq!(ideal_members(0).unwrap().len(), 64);
        assert_eq!(
            ideal_members(4).unwrap(),
            vec![R64::ZERO, r("u^4"), r("u^5"), r("u^5+u^4")]
        );
        for i in 0..=6 {
            assert_eq!(ideal_members(i).unwrap().len(), 1 << (6 - i));
        }
        assert!(matches!(ideal_members(7), Err(Error::IdealExponent(7))));
    }

    #[test]
    fn text_forms() {
        assert_eq!(r("110000"), R64::ONE + R64::U);
        assert_eq!(r("110000").to_string(), "110000");
        assert_eq!(r("u^5+u^2+1").to_poly_string(), "u^5+u^2+1");
        assert!(R64::parse("u^x").is_err());
        assert!(R64::new(64).is_none());
    }

    #[test]
    fn valuation_tracks_the_ideal_chain() {
        assert_eq!(R64::ZERO.valuation(), None);
        assert_eq!(r("u^3+u^5").valuation(), Some(3));
        assert!(r("1+u").is_unit());
    }
}
