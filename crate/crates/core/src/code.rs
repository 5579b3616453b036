//! Linear codes: generator matrices in canonical form, inner products,
//! codeword enumeration, weights, duals and subcode tests.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::matrix::{axpy, GfMatrix};

/// Default cap on the dimension `k` for full codeword enumeration (`q^k` words).
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// The bilinear (Euclidean) or sesquilinear (Hermitian) form attached to a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InnerProduct {
    /// `<x,y> = sum x_i y_i`
    Euclidean,
    /// `<x,y> = sum x_i conj(y_i)`, GF(4) only.
    Hermitian,
}

impl InnerProduct {
    pub fn name(self) -> &'static str {
        match self {
            InnerProduct::Euclidean => "euclidean",
            InnerProduct::Hermitian => "hermitian",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "euclidean" => Ok(InnerProduct::Euclidean),
            "hermitian" => Ok(InnerProduct::Hermitian),
            _ => Err(Error::usage(format!(
                "unknown inner product '{s}'; expected euclidean or hermitian"
            ))),
        }
    }

    pub fn check_field(self, field: Field) -> Result<()> {
        if self == InnerProduct::Hermitian && field != Field::Gf4 {
            return Err(Error::usage(format!(
                "the hermitian form is only defined over GF(4), not {field}"
            )));
        }
        Ok(())
    }

    /// Raw form on element-code slices of equal length.
    #[inline]
    pub(crate) fn eval(self, field: Field, x: &[u8], y: &[u8]) -> u8 {
        debug_assert_eq!(x.len(), y.len());
        match self {
            InnerProduct::Euclidean => x
                .iter()
                .zip(y)
                .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b))),
            InnerProduct::Hermitian => x.iter().zip(y).fold(0, |acc, (&a, &b)| {
                field.add(acc, field.mul(a, field.conj(b)))
            }),
        }
    }
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A vector of length `n` over one field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    field: Field,
    symbols: Vec<u8>,
}

impl Codeword {
    pub fn new(field: Field, symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&v| !field.contains(v)) {
            return Err(Error::usage(format!(
                "{bad} is not an element code of {field}"
            )));
        }
        Ok(Codeword { field, symbols })
    }

    pub(crate) fn from_raw(field: Field, symbols: Vec<u8>) -> Self {
        Codeword { field, symbols }
    }

    pub fn zero(field: Field, n: usize) -> Self {
        Codeword::from_raw(field, vec![0; n])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn weight(&self) -> usize {
        weight(&self.symbols)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &v) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", self.field.symbol(v))?;
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn weight(symbols: &[u8]) -> usize {
    symbols.iter().filter(|&&v| v != 0).count()
}

/// `<x, y>` under `kind`.
pub fn inner(x: &Codeword, y: &Codeword, kind: InnerProduct) -> Result<FieldElement> {
    if x.field != y.field {
        return Err(Error::usage(format!(
            "inner product of vectors over {} and {}",
            x.field, y.field
        )));
    }
    if x.len() != y.len() {
        return Err(Error::usage(format!(
            "inner product of vectors of length {} and {}",
            x.len(),
            y.len()
        )));
    }
    kind.check_field(x.field)?;
    Ok(FieldElement::from_raw(
        x.field,
        kind.eval(x.field, &x.symbols, &y.symbols),
    ))
}

/// An `[n,k]` code. The generator is held in reduced row echelon form, so
/// two codes compare equal exactly when they are the same subspace (and
/// carry the same inner product).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    ip: InnerProduct,
    gen: GfMatrix,
}

impl LinearCode {
    /// Code generated by the rows of `gen`, which must be linearly independent.
    pub fn new(gen: &GfMatrix, ip: InnerProduct) -> Result<Self> {
        ip.check_field(gen.field())?;
        let basis = gen.row_space_basis();
        if basis.rows() != gen.rows() {
            return Err(Error::usage(format!(
                "generator has {} rows but rank {}",
                gen.rows(),
                basis.rows()
            )));
        }
        Ok(LinearCode { ip, gen: basis })
    }

    /// Code spanned by the rows of `gen`, dependent rows allowed.
    pub fn span(gen: &GfMatrix, ip: InnerProduct) -> Result<Self> {
        ip.check_field(gen.field())?;
        Ok(LinearCode {
            ip,
            gen: gen.row_space_basis(),
        })
    }

    /// Wraps a matrix that is already a full-rank RREF.
    pub(crate) fn from_rref(gen: GfMatrix, ip: InnerProduct) -> Self {
        debug_assert_eq!(gen.row_space_basis(), gen);
        LinearCode { ip, gen }
    }

    /// Wraps arbitrary rows without canonicalizing, for scans that must
    /// follow a caller's row order.
    pub(crate) fn from_rows_unchecked(gen: GfMatrix, ip: InnerProduct) -> Self {
        LinearCode { ip, gen }
    }

    pub fn zero(field: Field, ip: InnerProduct, n: usize) -> Result<Self> {
        ip.check_field(field)?;
        Ok(LinearCode {
            ip,
            gen: GfMatrix::zeros(field, 0, n),
        })
    }

    pub fn full(field: Field, ip: InnerProduct, n: usize) -> Result<Self> {
        ip.check_field(field)?;
        Ok(LinearCode {
            ip,
            gen: GfMatrix::identity(field, n),
        })
    }

    pub fn field(&self) -> Field {
        self.gen.field()
    }

    pub fn inner_product(&self) -> InnerProduct {
        self.ip
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical (RREF) generator matrix.
    pub fn generator(&self) -> &GfMatrix {
        &self.gen
    }

    pub fn generator_rows(&self) -> impl Iterator<Item = Codeword> + '_ {
        self.gen
            .row_iter()
            .map(|r| Codeword::from_raw(self.field(), r.to_vec()))
    }

    /// Codeword for the message vector `msg` (length `k`).
    pub fn encode(&self, msg: &[u8]) -> Result<Codeword> {
        if msg.len() != self.k() {
            return Err(Error::usage(format!(
                "message has length {}, code dimension is {}",
                msg.len(),
                self.k()
            )));
        }
        let f = self.field();
        if msg.iter().any(|&m| !f.contains(m)) {
            return Err(Error::usage(format!("message symbol outside {f}")));
        }
        let mut out = vec![0u8; self.n()];
        for (i, &m) in msg.iter().enumerate() {
            axpy(f, &mut out, m, self.gen.row(i));
        }
        Ok(Codeword::from_raw(f, out))
    }

    pub fn contains(&self, x: &Codeword) -> bool {
        if x.field != self.field() || x.len() != self.n() {
            return false;
        }
        let single = GfMatrix::from_raw(self.field(), 1, self.n(), x.symbols.clone());
        self.gen
            .vstack(&single)
            .map(|m| m.rank() == self.k())
            .unwrap_or(false)
    }

    fn check_enumerable(&self, limit: usize) -> Result<()> {
        if self.k() > limit {
            return Err(Error::resource(format!(
                "enumerating {}^{} codewords exceeds the limit of {limit} message digits",
                self.field().order(),
                self.k()
            )));
        }
        Ok(())
    }

    /// All `q^k` codewords, in lexicographic order of the message vector.
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        self.codewords_with_limit(DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn codewords_with_limit(&self, limit: usize) -> Result<Codewords<'_>> {
        self.check_enumerable(limit)?;
        Ok(Codewords {
            cursor: Cursor::new(self),
            started: false,
            done: false,
        })
    }

    /// Minimum weight over the nonzero codewords.
    pub fn min_weight(&self) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::domain("the zero code has no nonzero codewords"));
        }
        self.check_enumerable(DEFAULT_ENUMERATION_LIMIT)?;
        Ok(min_weight_kernel(self))
    }

    /// `A[w]` = number of codewords of weight `w`, for `w = 0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        self.check_enumerable(DEFAULT_ENUMERATION_LIMIT)?;
        let mut dist = vec![0u64; self.n() + 1];
        let mut cursor = Cursor::new(self);
        loop {
            dist[weight(cursor.word())] += 1;
            if !cursor.advance() {
                break;
            }
        }
        Ok(dist)
    }

    /// Dual code under this code's inner product. Rows `y` of the result
    /// satisfy `<y, g> = 0` for every generator row `g`.
    pub fn dual(&self) -> LinearCode {
        let system = match self.ip {
            InnerProduct::Euclidean => self.gen.clone(),
            // <y,g>_H = sum y_i conj(g_i): solve against the conjugated generator
            InnerProduct::Hermitian => self.gen.conjugate(),
        };
        LinearCode::from_rref(system.null_space(), self.ip)
    }

    /// Whether `self` is contained in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        if self.field() != other.field() || self.n() != other.n() {
            return Err(Error::usage(format!(
                "subcode test between codes over {} length {} and {} length {}",
                self.field(),
                self.n(),
                other.field(),
                other.n()
            )));
        }
        Ok(other.gen.vstack(&self.gen)?.rank() == other.k())
    }

    /// Same subspace with a different inner product attached.
    pub fn with_inner_product(&self, ip: InnerProduct) -> Result<LinearCode> {
        ip.check_field(self.field())?;
        Ok(LinearCode {
            ip,
            gen: self.gen.clone(),
        })
    }
}

/// `a ⊆ b`.
pub fn is_subcode(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    a.is_subcode_of(b)
}

/// Walks the message space in lexicographic order, updating the current
/// codeword incrementally: bumping digit `j` from `a` to `b` adds `(b - a)`
/// times generator row `j`.
pub(crate) struct Cursor<'a> {
    code: &'a LinearCode,
    msg: Vec<u8>,
    word: Vec<u8>,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(code: &'a LinearCode) -> Self {
        Cursor {
            code,
            msg: vec![0; code.k()],
            word: vec![0; code.n()],
        }
    }

    #[inline]
    pub(crate) fn word(&self) -> &[u8] {
        &self.word
    }

    pub(crate) fn message(&self) -> &[u8] {
        &self.msg
    }

    /// Moves to the next message; `false` once the space is exhausted.
    #[inline]
    pub(crate) fn advance(&mut self) -> bool {
        let f = self.code.field();
        let q = f.order();
        for j in (0..self.msg.len()).rev() {
            let old = self.msg[j];
            let new = if old + 1 == q { 0 } else { old + 1 };
            axpy(f, &mut self.word, f.sub(new, old), self.code.gen.row(j));
            self.msg[j] = new;
            if new != 0 {
                return true;
            }
        }
        false
    }
}

/// Iterator over all codewords of a code.
pub struct Codewords<'a> {
    cursor: Cursor<'a>,
    started: bool,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.cursor.advance() {
            self.done = true;
            return None;
        }
        Some(Codeword::from_raw(
            self.cursor.code.field(),
            self.cursor.word.clone(),
        ))
    }
}

/// Minimum weight, or `None` as soon as a nonzero codeword lighter than
/// `floor` shows up.
pub(crate) fn min_weight_at_least(code: &LinearCode, floor: usize) -> Option<usize> {
    let mut cursor = Cursor::new(code);
    let mut best = code.n();
    while cursor.advance() {
        let w = weight(cursor.word());
        if w < best {
            if w < floor {
                return None;
            }
            best = w;
        }
    }
    Some(best)
}

pub(crate) fn min_weight_kernel(code: &LinearCode) -> usize {
    let mut cursor = Cursor::new(code);
    let mut best = code.n();
    while cursor.advance() {
        let w = weight(cursor.word());
        if w < best {
            best = w;
            if best == 1 {
                break;
            }
        }
    }
    best
}
