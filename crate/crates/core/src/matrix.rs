//! Dense matrices over GF(2), GF(3) and GF(4).

use std::fmt;

use crate::code::InnerProduct;
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

/// Row-major dense matrix. Every transformation returns a new value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GfMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// `dst += a * src`, entrywise.
#[inline]
pub(crate) fn axpy(field: Field, dst: &mut [u8], a: u8, src: &[u8]) {
    if a == 0 {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = field.add(*d, field.mul(a, s));
    }
}

/// Reduces `data` (rows × cols, row-major) to reduced row echelon form in place.
/// Returns the pivot columns and the determinant factor accumulated from row
/// swaps and scalings: for a square input, `det = inv(factor)` when full rank.
fn rref_in_place(field: Field, rows: usize, cols: usize, data: &mut [u8]) -> (Vec<usize>, u8) {
    let mut pivots = Vec::with_capacity(rows.min(cols));
    // product of the scalings applied, times (-1)^swaps
    let mut factor = 1u8;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(p * cols + j, r * cols + j);
            }
            factor = field.neg(factor);
        }
        let lead = data[r * cols + c];
        if lead != 1 {
            let s = field.inv(lead).expect("pivot is nonzero");
            for v in &mut data[r * cols..(r + 1) * cols] {
                *v = field.mul(s, *v);
            }
            factor = field.mul(factor, s);
        }
        let (before, rest) = data.split_at_mut(r * cols);
        let (pivot_row, after) = rest.split_at_mut(cols);
        for row in before
            .chunks_exact_mut(cols)
            .chain(after.chunks_exact_mut(cols))
        {
            let a = row[c];
            if a != 0 {
                axpy(field, row, field.neg(a), pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, factor)
}

impl GfMatrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::usage(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| !field.contains(v)) {
            return Err(Error::usage(format!(
                "entry {bad} is not an element of {field}"
            )));
        }
        Ok(GfMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub(crate) fn from_raw(field: Field, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        GfMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from equal-length rows of element codes. `cols` is
    /// needed to describe a matrix with zero rows.
    pub fn from_rows<R: AsRef<[u8]>>(field: Field, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::usage(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self::from_raw(field, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Raw element code at `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        FieldElement::from_raw(self.field, self.get(i, j))
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> {
        // chunks_exact panics on a zero chunk size
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn matmul(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.field != other.field {
            return Err(Error::usage(format!(
                "matmul over different fields: {} and {}",
                self.field, other.field
            )));
        }
        if self.cols != other.rows {
            return Err(Error::usage(format!(
                "matmul shape mismatch: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = vec![0u8; self.rows * other.cols];
        for i in 0..self.rows {
            let dst = &mut out[i * other.cols..(i + 1) * other.cols];
            for t in 0..self.cols {
                axpy(f, dst, self.get(i, t), other.row(t));
            }
        }
        Ok(Self::from_raw(f, self.rows, other.cols, out))
    }

    pub fn transpose(&self) -> GfMatrix {
        let mut out = vec![0u8; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[j * self.rows + i] = self.get(i, j);
            }
        }
        Self::from_raw(self.field, self.cols, self.rows, out)
    }

    /// Entrywise conjugate (identity over the prime fields).
    pub fn conjugate(&self) -> GfMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&v| f.conj(v)).collect();
        Self::from_raw(f, self.rows, self.cols, data)
    }

    /// `G*`: the transpose for the Euclidean form, the conjugate transpose for
    /// the Hermitian form.
    pub fn star(&self, kind: InnerProduct) -> Result<GfMatrix> {
        kind.check_field(self.field)?;
        Ok(match kind {
            InnerProduct::Euclidean => self.transpose(),
            InnerProduct::Hermitian => self.transpose().conjugate(),
        })
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (GfMatrix, Vec<usize>) {
        let mut data = self.data.clone();
        let (pivots, _) = rref_in_place(self.field, self.rows, self.cols, &mut data);
        (
            Self::from_raw(self.field, self.rows, self.cols, data),
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::usage(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Determinant, computed from the elimination multipliers.
    pub fn det(&self) -> Result<FieldElement> {
        self.require_square("det")?;
        let mut data = self.data.clone();
        let (pivots, factor) = rref_in_place(self.field, self.rows, self.cols, &mut data);
        let value = if pivots.len() < self.rows {
            0
        } else {
            // RREF of a nonsingular matrix is I, and det(I) = factor * det(A).
            self.field
                .inv(factor)
                .expect("factor is a product of units")
        };
        Ok(FieldElement::from_raw(self.field, value))
    }

    pub fn is_nonsingular(&self) -> Result<bool> {
        self.require_square("is_nonsingular")?;
        Ok(self.rank() == self.rows)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::usage(format!(
                "cannot stack {}x{} over {} on {}x{} over {}",
                self.rows, self.cols, self.field, other.rows, other.cols, other.field
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self::from_raw(
            self.field,
            self.rows + other.rows,
            self.cols,
            data,
        ))
    }

    /// Keeps the nonzero rows of the RREF, a basis of the row space in canonical form.
    pub fn row_space_basis(&self) -> GfMatrix {
        let (r, pivots) = self.rref();
        let k = pivots.len();
        Self::from_raw(self.field, k, self.cols, r.data[..k * self.cols].to_vec())
    }

    /// Basis of `{ y : M y^T = 0 }` as rows, returned in RREF.
    pub fn null_space(&self) -> GfMatrix {
        let f = self.field;
        let n = self.cols;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity((n - pivots.len()) * n);
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u8; n];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.extend_from_slice(&v);
        }
        let rows = basis.len() / n.max(1);
        Self::from_raw(f, rows, n, basis).row_space_basis()
    }
}

impl fmt::Display for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let symbols: Vec<String> = row
                .iter()
                .map(|&v| self.field.symbol(v).to_string())
                .collect();
            write!(f, "{}", symbols.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: u8 = 2;
    const W2: u8 = 3;

    fn m3(rows: &[&[u8]]) -> GfMatrix {
        GfMatrix::from_rows(Field::Gf3, rows[0].len(), rows).unwrap()
    }

    #[test]
    fn matmul_examples() {
        let m = m3(&[&[1, 2], &[0, 1]]);
        let i2 = GfMatrix::identity(Field::Gf3, 2);
        assert_eq!(i2.matmul(&m).unwrap(), m);

        let row = m3(&[&[1, 2]]);
        let col = m3(&[&[1], &[2]]);
        assert_eq!(row.matmul(&col).unwrap().get(0, 0), 2);

        let row4 = GfMatrix::from_rows(Field::Gf4, 2, &[[1, W]]).unwrap();
        let col4 = row4.transpose();
        assert_eq!(row4.matmul(&col4).unwrap().get(0, 0), W);
    }

    #[test]
    fn matmul_errors() {
        let a = m3(&[&[1, 2]]);
        assert!(matches!(a.matmul(&a), Err(Error::Usage(_))));
        let b = GfMatrix::from_rows(Field::Gf4, 1, &[[1], [1]]).unwrap();
        assert!(matches!(a.matmul(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn star_examples() {
        let m = m3(&[&[1, 2], &[0, 1]]);
        let s = m.star(InnerProduct::Euclidean).unwrap();
        assert_eq!(s, m3(&[&[1, 0], &[2, 1]]));
        assert_eq!(s.star(InnerProduct::Euclidean).unwrap(), m);

        let h = GfMatrix::from_rows(Field::Gf4, 2, &[[1, W]]).unwrap();
        let hs = h.star(InnerProduct::Hermitian).unwrap();
        assert_eq!(
            hs,
            GfMatrix::from_rows(Field::Gf4, 1, &[[1], [W2]]).unwrap()
        );
        assert_eq!(hs.star(InnerProduct::Hermitian).unwrap(), h);

        assert!(matches!(
            m.star(InnerProduct::Hermitian),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn rref_examples() {
        let z = GfMatrix::zeros(Field::Gf3, 2, 3);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());

        let (r, p) = m3(&[&[2, 1], &[0, 0]]).rref();
        assert_eq!(r, m3(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);

        let (r, p) = m3(&[&[2, 1], &[1, 0]]).rref();
        assert_eq!(r, GfMatrix::identity(Field::Gf3, 2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn det_examples() {
        for n in 0..4 {
            assert_eq!(GfMatrix::identity(Field::Gf3, n).det().unwrap().value(), 1);
        }
        let a = m3(&[&[2, 1], &[1, 2]]);
        assert_eq!(a.det().unwrap().value(), 0);
        assert!(!a.is_nonsingular().unwrap());
        let b = m3(&[&[1, 0], &[0, 2]]);
        assert_eq!(b.det().unwrap().value(), 2);
        assert!(b.is_nonsingular().unwrap());
        // a row swap flips the sign
        assert_eq!(m3(&[&[0, 1], &[1, 0]]).det().unwrap().value(), 2);

        let rect = m3(&[&[1, 0, 0]]);
        assert!(matches!(rect.det(), Err(Error::Usage(_))));
        assert!(matches!(rect.is_nonsingular(), Err(Error::Usage(_))));
    }

    // Cofactor expansion, independent of the elimination path.
    fn det_cofactor(m: &GfMatrix) -> u8 {
        let f = m.field();
        let n = m.rows();
        if n == 0 {
            return 1;
        }
        let mut acc = 0;
        for j in 0..n {
            let minor_rows: Vec<Vec<u8>> = (1..n)
                .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c)).collect())
                .collect();
            let minor = GfMatrix::from_rows(f, n - 1, &minor_rows).unwrap();
            let mut term = f.mul(m.get(0, j), det_cofactor(&minor));
            if j % 2 == 1 {
                term = f.neg(term);
            }
            acc = f.add(acc, term);
        }
        acc
    }

    #[test]
    fn det_matches_cofactor_exhaustive_2x2_and_3x3_gf4_sampled() {
        for f in Field::ALL {
            let q = f.order() as u32;
            for idx in 0..q.pow(4) {
                let data: Vec<u8> = (0..4).map(|i| ((idx / q.pow(i)) % q) as u8).collect();
                let m = GfMatrix::new(f, 2, 2, data).unwrap();
                assert_eq!(m.det().unwrap().value(), det_cofactor(&m), "{m}");
            }
        }
        for idx in 0..3u32.pow(9) {
            let data: Vec<u8> = (0..9).map(|i| ((idx / 3u32.pow(i)) % 3) as u8).collect();
            let m = GfMatrix::new(Field::Gf3, 3, 3, data).unwrap();
            assert_eq!(m.det().unwrap().value(), det_cofactor(&m));
        }
    }

    #[test]
    fn null_space_is_orthogonal() {
        let m = m3(&[&[1, 1, 1, 0], &[0, 1, 2, 1]]);
        let ns = m.null_space();
        assert_eq!(ns.rows(), 2);
        let prod = m.matmul(&ns.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn row_space_basis_drops_zero_rows() {
        let m = m3(&[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1]]);
        let b = m.row_space_basis();
        assert_eq!(b, m3(&[&[1, 2, 0], &[0, 0, 1]]));
    }
}
