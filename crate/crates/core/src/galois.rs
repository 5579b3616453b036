//! Table-driven arithmetic in GF(2), GF(3) and GF(4).
//!
//! Elements are small integer codes. For GF(4) the codes `0, 1, 2, 3` stand
//! for `0, 1, ω, ω²` with `ω² = ω + 1`; read as two-bit polynomials over GF(2)
//! in `ω` this is exactly the binary encoding, so addition is XOR.
//!
//! Hot loops use the raw `u8` methods on [`Field`]; [`FieldElement`] is the
//! checked, self-describing scalar used at API boundaries.

use std::fmt;

use crate::error::{Error, Result};

/// One of the three supported fields, identified by its order `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Gf2,
    Gf3,
    Gf4,
}

struct Tables {
    add: [[u8; 4]; 4],
    mul: [[u8; 4]; 4],
    neg: [u8; 4],
    // inv[0] is a placeholder, never read.
    inv: [u8; 4],
    conj: [u8; 4],
}

static GF2: Tables = Tables {
    add: [[0, 1, 0, 0], [1, 0, 0, 0], [0; 4], [0; 4]],
    mul: [[0, 0, 0, 0], [0, 1, 0, 0], [0; 4], [0; 4]],
    neg: [0, 1, 0, 0],
    inv: [0, 1, 0, 0],
    conj: [0, 1, 0, 0],
};

static GF3: Tables = Tables {
    add: [[0, 1, 2, 0], [1, 2, 0, 0], [2, 0, 1, 0], [0; 4]],
    mul: [[0, 0, 0, 0], [0, 1, 2, 0], [0, 2, 1, 0], [0; 4]],
    neg: [0, 2, 1, 0],
    inv: [0, 1, 2, 0],
    conj: [0, 1, 2, 0],
};

// 0, 1, ω, ω²
static GF4: Tables = Tables {
    add: [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
    mul: [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]],
    neg: [0, 1, 2, 3],
    inv: [0, 1, 3, 2],
    conj: [0, 1, 3, 2],
};

impl Field {
    pub const ALL: [Field; 3] = [Field::Gf2, Field::Gf3, Field::Gf4];

    pub fn from_order(q: u32) -> Result<Field> {
        match q {
            2 => Ok(Field::Gf2),
            3 => Ok(Field::Gf3),
            4 => Ok(Field::Gf4),
            _ => Err(Error::usage(format!(
                "unsupported field order {q}; expected 2, 3 or 4"
            ))),
        }
    }

    /// The field order `q`.
    pub fn order(self) -> u8 {
        match self {
            Field::Gf2 => 2,
            Field::Gf3 => 3,
            Field::Gf4 => 4,
        }
    }

    pub fn characteristic(self) -> u8 {
        match self {
            Field::Gf2 | Field::Gf4 => 2,
            Field::Gf3 => 3,
        }
    }

    /// Weight-divisibility modulus `p`: a codeword `x` has `<x,x> = wt(x) mod p`
    /// under the natural form of the field (Euclidean for GF(2)/GF(3),
    /// Hermitian for GF(4)). The GF(2) value is the Euclidean analogue and is
    /// only used by the search harness baseline.
    pub fn weight_divisor(self) -> usize {
        match self {
            Field::Gf2 | Field::Gf4 => 2,
            Field::Gf3 => 3,
        }
    }

    #[inline(always)]
    fn tables(self) -> &'static Tables {
        match self {
            Field::Gf2 => &GF2,
            Field::Gf3 => &GF3,
            Field::Gf4 => &GF4,
        }
    }

    #[inline(always)]
    pub fn add(self, a: u8, b: u8) -> u8 {
        self.tables().add[a as usize][b as usize]
    }

    #[inline(always)]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        let t = self.tables();
        t.add[a as usize][t.neg[b as usize] as usize]
    }

    #[inline(always)]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        self.tables().mul[a as usize][b as usize]
    }

    #[inline(always)]
    pub fn neg(self, a: u8) -> u8 {
        self.tables().neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline(always)]
    pub fn inv(self, a: u8) -> Option<u8> {
        if a == 0 {
            None
        } else {
            Some(self.tables().inv[a as usize])
        }
    }

    /// Frobenius conjugation `x -> x^2` on GF(4); identity on the prime fields.
    #[inline(always)]
    pub fn conj(self, a: u8) -> u8 {
        self.tables().conj[a as usize]
    }

    /// All element codes in symbol order `0 < 1 < ... ` (`0 < 1 < ω < ω²` for GF(4)).
    pub fn elements(self) -> impl Iterator<Item = u8> + Clone {
        0..self.order()
    }

    pub fn contains(self, code: u8) -> bool {
        code < self.order()
    }

    pub fn symbol(self, code: u8) -> char {
        match (self, code) {
            (Field::Gf4, 2) => 'w',
            (Field::Gf4, 3) => 'W',
            (_, c) => char::from(b'0' + c),
        }
    }

    pub fn parse_symbol(self, c: char) -> Option<u8> {
        let code = match (self, c) {
            (_, '0') => 0,
            (_, '1') => 1,
            (Field::Gf3, '2') => 2,
            (Field::Gf4, 'w') => 2,
            (Field::Gf4, 'W') => 3,
            _ => return None,
        };
        Some(code)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

/// A field element tagged with its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    value: u8,
}

// Binary operations are fallible (mixed fields), so they stay inherent methods
// rather than `std::ops` impls.
#[allow(clippy::should_implement_trait)]
impl FieldElement {
    pub fn new(field: Field, value: u8) -> Result<Self> {
        if !field.contains(value) {
            return Err(Error::usage(format!(
                "{value} is not an element code of {field}"
            )));
        }
        Ok(FieldElement { field, value })
    }

    pub(crate) fn from_raw(field: Field, value: u8) -> Self {
        debug_assert!(field.contains(value));
        FieldElement { field, value }
    }

    pub fn zero(field: Field) -> Self {
        FieldElement { field, value: 0 }
    }

    pub fn one(field: Field) -> Self {
        FieldElement { field, value: 1 }
    }

    pub fn field(self) -> Field {
        self.field
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: FieldElement) -> Result<Field> {
        if self.field != other.field {
            return Err(Error::usage(format!(
                "mixed-field operands: {} and {}",
                self.field, other.field
            )));
        }
        Ok(self.field)
    }

    pub fn add(self, other: FieldElement) -> Result<FieldElement> {
        let f = self.same_field(other)?;
        Ok(Self::from_raw(f, f.add(self.value, other.value)))
    }

    pub fn sub(self, other: FieldElement) -> Result<FieldElement> {
        let f = self.same_field(other)?;
        Ok(Self::from_raw(f, f.sub(self.value, other.value)))
    }

    pub fn mul(self, other: FieldElement) -> Result<FieldElement> {
        let f = self.same_field(other)?;
        Ok(Self::from_raw(f, f.mul(self.value, other.value)))
    }

    pub fn neg(self) -> FieldElement {
        Self::from_raw(self.field, self.field.neg(self.value))
    }

    pub fn inv(self) -> Result<FieldElement> {
        self.field
            .inv(self.value)
            .map(|v| Self::from_raw(self.field, v))
            .ok_or_else(|| Error::domain("zero has no multiplicative inverse"))
    }

    pub fn conj(self) -> FieldElement {
        Self::from_raw(self.field, self.field.conj(self.value))
    }

    pub fn symbol(self) -> char {
        self.field.symbol(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}
