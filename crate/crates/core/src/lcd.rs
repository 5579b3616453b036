//! LCD and self-orthogonality predicates, and the subcode (descent) and
//! supercode (ascent) constructions.
//!
//! A code is LCD when it meets its dual only in zero; with `G` a generator
//! matrix and `G*` its transpose (Euclidean) or conjugate transpose
//! (Hermitian) this is equivalent to the Gram matrix `G G*` being
//! nonsingular. Both constructions rest on one observation: if `x` is a
//! codeword with `<x,x> != 0` and every other generator row is orthogonal to
//! `x`, the Gram matrix splits as `diag(<x,x>, G0 G0*)`, so `G0` generates an
//! LCD code exactly when the whole generator does.
//!
//! The constructions are implemented for ternary Euclidean and quaternary
//! Hermitian codes, where `<x,x> = wt(x) mod p` (`p = 3`, resp. `p = 2`) and a
//! non-self-orthogonal code therefore always contains such an `x`.

use crate::code::{Codeword, Cursor, InnerProduct, LinearCode};
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::matrix::{axpy, GfMatrix};

/// Gram matrix `G G*` of an arbitrary generator under `kind`.
pub fn gram_of(gen: &GfMatrix, kind: InnerProduct) -> Result<GfMatrix> {
    gen.matmul(&gen.star(kind)?)
}

/// Gram matrix of the canonical generator.
pub fn gram(c: &LinearCode) -> GfMatrix {
    gram_of(c.generator(), c.inner_product()).expect("code invariants fix field and form")
}

/// Nonsingularity of the Gram matrix. Undefined for the zero code.
pub fn is_lcd(c: &LinearCode) -> Result<bool> {
    if c.k() == 0 {
        return Err(Error::domain("LCD is not defined for the zero code"));
    }
    gram(c).is_nonsingular()
}

/// Definitional check: `dim(C ∩ C*) = k + (n - k) - rank([G; H]) = 0`, with
/// `H` a generator of the dual.
pub fn is_lcd_by_intersection(c: &LinearCode) -> bool {
    let d = c.dual();
    let stacked = c
        .generator()
        .vstack(d.generator())
        .expect("dual shares field and length");
    c.k() + d.k() - stacked.rank() == 0
}

pub fn is_self_orthogonal(c: &LinearCode) -> bool {
    gram(c).is_zero()
}

/// The weight-divisibility modulus for the field/form pairs the
/// constructions support: 3 for GF(3) Euclidean, 2 for GF(4) Hermitian.
pub fn construction_divisor(field: Field, kind: InnerProduct) -> Result<usize> {
    match (field, kind) {
        (Field::Gf3, InnerProduct::Euclidean) => Ok(3),
        (Field::Gf4, InnerProduct::Hermitian) => Ok(2),
        _ => Err(Error::usage(format!(
            "only ternary euclidean and quaternary hermitian codes are supported, got {field} {kind}"
        ))),
    }
}

/// Self-orthogonality via codeword weights: every weight divisible by `p`.
pub fn is_self_orthogonal_by_weights(c: &LinearCode) -> Result<bool> {
    let p = construction_divisor(c.field(), c.inner_product())?;
    let dist = c.weight_distribution()?;
    Ok(dist
        .iter()
        .enumerate()
        .all(|(w, &count)| count == 0 || w.is_multiple_of(p)))
}

/// First vector with `<x,x> != 0`: generator rows in order, then all
/// combinations in message order. Returns the vector and its message.
fn scan_anisotropic(c: &LinearCode) -> Option<(Vec<u8>, Vec<u8>)> {
    let f = c.field();
    let kind = c.inner_product();
    let gen = c.generator();
    for i in 0..gen.rows() {
        let r = gen.row(i);
        if kind.eval(f, r, r) != 0 {
            let mut msg = vec![0u8; gen.rows()];
            msg[i] = 1;
            return Some((r.to_vec(), msg));
        }
    }
    let mut cursor = Cursor::new(c);
    while cursor.advance() {
        let w = cursor.word();
        if kind.eval(f, w, w) != 0 {
            return Some((w.to_vec(), cursor.message().to_vec()));
        }
    }
    None
}

fn scan_in(gen: &GfMatrix, kind: InnerProduct) -> Result<Option<(Vec<u8>, Vec<u8>)>> {
    construction_divisor(gen.field(), kind)?;
    // Cursor walks a code; wrap the rows as given, without canonicalizing.
    let raw = LinearCode::from_rows_unchecked(gen.clone(), kind);
    Ok(scan_anisotropic(&raw))
}

/// A codeword `x` with `<x,x> != 0` (equivalently `wt(x) != 0 mod p`),
/// searched over the rows of the canonical generator first.
pub fn find_descent_vector(c: &LinearCode) -> Result<Codeword> {
    find_descent_vector_in(c.generator(), c.inner_product())
}

/// As [`find_descent_vector`], but scanning the rows of `gen` exactly as
/// given and then its message space.
pub fn find_descent_vector_in(gen: &GfMatrix, kind: InnerProduct) -> Result<Codeword> {
    scan_in(gen, kind)?
        .map(|(x, _)| Codeword::from_raw(gen.field(), x))
        .ok_or_else(|| Error::domain("no descent vector exists: the code is self-orthogonal"))
}

/// One descent: an LCD `[n,k]` code, the split-off vector `x`, the generator
/// `[x; G0]` with every `G0` row orthogonal to `x`, and the LCD `[n,k-1]`
/// code generated by `G0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentStep {
    parent: LinearCode,
    chosen_x: Codeword,
    transformed_gen: GfMatrix,
    child: LinearCode,
}

impl DescentStep {
    pub fn parent(&self) -> &LinearCode {
        &self.parent
    }

    pub fn chosen_x(&self) -> &Codeword {
        &self.chosen_x
    }

    /// `[x; G0]` before the child is canonicalized.
    pub fn transformed_gen(&self) -> &GfMatrix {
        &self.transformed_gen
    }

    pub fn child(&self) -> &LinearCode {
        &self.child
    }

    pub fn into_child(self) -> LinearCode {
        self.child
    }

    /// Re-checks every property the construction promises.
    pub fn check_invariants(&self) -> Result<()> {
        let kind = self.parent.inner_product();
        let f = self.parent.field();
        let p = construction_divisor(f, kind)?;
        let fail = |what: &str| Err(Error::Invariant(format!("descent step: {what}")));
        let x = self.chosen_x.symbols();
        if !self.parent.contains(&self.chosen_x) {
            return fail("x is not a codeword of the parent");
        }
        if kind.eval(f, x, x) == 0 {
            return fail("<x,x> = 0");
        }
        if self.chosen_x.weight().is_multiple_of(p) {
            return fail("wt(x) = 0 mod p");
        }
        if self.child.k() + 1 != self.parent.k() {
            return fail("child dimension is not k - 1");
        }
        if !self.child.is_subcode_of(&self.parent)? {
            return fail("child is not a subcode");
        }
        if self.child.k() > 0 && !is_lcd(&self.child)? {
            return fail("child is not LCD");
        }
        if self.transformed_gen.row(0) != x {
            return fail("transformed generator does not start with x");
        }
        if LinearCode::new(&self.transformed_gen, kind)? != self.parent {
            return fail("transformed generator does not generate the parent");
        }
        let g = gram_of(&self.transformed_gen, kind)?;
        if g.get(0, 0) == 0 {
            return fail("Gram entry (0,0) is zero");
        }
        let k = g.rows();
        if (1..k).any(|j| g.get(0, j) != 0 || g.get(j, 0) != 0) {
            return fail("Gram matrix is not block diagonal");
        }
        Ok(())
    }
}

/// Splits an LCD `[n,k]` code (`k >= 2`) into `x` and an LCD `[n,k-1]` subcode.
///
/// `x` is the first vector found by [`find_descent_vector`]. If `x` has
/// message `m`, the generator row at the first index with `m_j != 0` is
/// dropped and every remaining row `r` is replaced by `r - λ x`, with
/// `λ = <x,r>/<x,x>` (Euclidean) or `λ = conj(<x,r>)/<x,x>` (Hermitian), so
/// that `<x, r - λx> = 0` with `x` in the first slot.
pub fn descend(c: &LinearCode) -> Result<DescentStep> {
    let kind = c.inner_product();
    let f = c.field();
    construction_divisor(f, kind)?;
    if c.k() < 2 {
        return Err(Error::domain(format!(
            "descent needs dimension at least 2, got k = {}",
            c.k()
        )));
    }
    if !is_lcd(c)? {
        return Err(Error::domain("code is not LCD"));
    }
    let (x, msg) = scan_anisotropic(c)
        .ok_or_else(|| Error::Invariant("LCD code without an anisotropic vector".into()))?;
    let xx_inv = f
        .inv(kind.eval(f, &x, &x))
        .expect("scan guarantees <x,x> != 0");
    let dropped = msg.iter().position(|&m| m != 0).expect("x is nonzero");

    let n = c.n();
    let gen = c.generator();
    let mut rows = Vec::with_capacity(c.k() * n);
    rows.extend_from_slice(&x);
    for i in (0..c.k()).filter(|&i| i != dropped) {
        let mut r = gen.row(i).to_vec();
        let xr = kind.eval(f, &x, &r);
        let lambda = match kind {
            InnerProduct::Euclidean => f.mul(xr, xx_inv),
            InnerProduct::Hermitian => f.mul(f.conj(xr), xx_inv),
        };
        axpy(f, &mut r, f.neg(lambda), &x);
        rows.extend_from_slice(&r);
    }
    let transformed_gen = GfMatrix::from_raw(f, c.k(), n, rows);
    let g0 = GfMatrix::from_raw(f, c.k() - 1, n, transformed_gen.as_slice()[n..].to_vec());
    if !gram_of(&g0, kind)?.is_nonsingular()? {
        return Err(Error::Invariant("det(G0 G0*) = 0 after descent".into()));
    }
    let child = LinearCode::new(&g0, kind)?;
    Ok(DescentStep {
        parent: c.clone(),
        chosen_x: Codeword::from_raw(f, x),
        transformed_gen,
        child,
    })
}

/// Nested LCD codes of dimensions `k, k-1, ..., 1` obtained by repeated descent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    steps: Vec<DescentStep>,
    codes: Vec<LinearCode>,
}

impl Chain {
    pub fn steps(&self) -> &[DescentStep] {
        &self.steps
    }

    pub fn codes(&self) -> &[LinearCode] {
        &self.codes
    }

    pub fn check_invariants(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Invariant(format!("chain: {what}")));
        for step in &self.steps {
            step.check_invariants()?;
        }
        for (i, w) in self.codes.windows(2).enumerate() {
            if !w[1].is_subcode_of(&w[0])? {
                return fail(format!("code {} is not a subcode of code {i}", i + 1));
            }
            if w[1].min_weight()? < w[0].min_weight()? {
                return fail(format!("min weight drops at position {}", i + 1));
            }
        }
        for c in &self.codes {
            if !is_lcd(c)? {
                return fail(format!("[{}, {}] member is not LCD", c.n(), c.k()));
            }
        }
        Ok(())
    }
}

pub fn descent_chain(c: &LinearCode) -> Result<Chain> {
    construction_divisor(c.field(), c.inner_product())?;
    if !is_lcd(c)? {
        return Err(Error::domain("code is not LCD"));
    }
    let mut codes = vec![c.clone()];
    let mut steps = Vec::with_capacity(c.k().saturating_sub(1));
    let mut current = c.clone();
    while current.k() > 1 {
        let step = descend(&current)?;
        current = step.child().clone();
        codes.push(current.clone());
        steps.push(step);
    }
    Ok(Chain { steps, codes })
}

/// One ascent: the vector `x` taken from the dual and the LCD `[n,k+1]` code
/// generated by `[x; G]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AscentStep {
    parent: LinearCode,
    adjoined_x: Codeword,
    extended_gen: GfMatrix,
    supercode: LinearCode,
}

impl AscentStep {
    pub fn parent(&self) -> &LinearCode {
        &self.parent
    }

    pub fn adjoined_x(&self) -> &Codeword {
        &self.adjoined_x
    }

    pub fn extended_gen(&self) -> &GfMatrix {
        &self.extended_gen
    }

    pub fn supercode(&self) -> &LinearCode {
        &self.supercode
    }

    pub fn into_supercode(self) -> LinearCode {
        self.supercode
    }
}

fn check_ascent_input(c: &LinearCode) -> Result<()> {
    construction_divisor(c.field(), c.inner_product())?;
    if c.k() == c.n() {
        return Err(Error::domain("the full space has no proper supercode"));
    }
    if !is_lcd(c)? {
        return Err(Error::domain("code is not LCD"));
    }
    Ok(())
}

/// Adjoins to an LCD `[n,k]` code (`1 <= k <= n-1`) the first vector `x` of
/// its dual with `<x,x> != 0`. Since `x` is orthogonal to the code, the new
/// Gram matrix is `diag(<x,x>, G G*)`.
pub fn ascend_step(c: &LinearCode) -> Result<AscentStep> {
    check_ascent_input(c)?;
    let kind = c.inner_product();
    let dual = c.dual();
    let (x, _) = scan_anisotropic(&dual)
        .ok_or_else(|| Error::Invariant("dual of an LCD code is self-orthogonal".into()))?;
    let f = c.field();
    let xm = GfMatrix::from_raw(f, 1, c.n(), x.clone());
    let extended_gen = xm.vstack(c.generator())?;
    if !gram_of(&extended_gen, kind)?.is_nonsingular()? {
        return Err(Error::Invariant("det(G' G'*) = 0 after ascent".into()));
    }
    let supercode = LinearCode::new(&extended_gen, kind)?;
    Ok(AscentStep {
        parent: c.clone(),
        adjoined_x: Codeword::from_raw(f, x),
        extended_gen,
        supercode,
    })
}

pub fn ascend(c: &LinearCode) -> Result<LinearCode> {
    ascend_step(c).map(AscentStep::into_supercode)
}

/// Supercode through the dual: descend from `C*` to an LCD `E ⊂ C*` of
/// dimension `n-k-1` and return `E*`. When `C*` is one-dimensional, `E` is
/// the zero code and `E*` the full space.
pub fn ascend_via_duality(c: &LinearCode) -> Result<LinearCode> {
    check_ascent_input(c)?;
    let dual = c.dual();
    let result = if dual.k() == 1 {
        LinearCode::full(c.field(), c.inner_product(), c.n())?
    } else {
        descend(&dual)?.into_child().dual()
    };
    if result.k() != c.k() + 1 || !is_lcd(&result)? || !c.is_subcode_of(&result)? {
        return Err(Error::Invariant(
            "dual of the descended dual is not an LCD supercode".into(),
        ));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: u8 = 2;

    fn code(field: Field, ip: InnerProduct, rows: &[&[u8]]) -> LinearCode {
        let n = rows[0].len();
        LinearCode::new(&GfMatrix::from_rows(field, n, rows).unwrap(), ip).unwrap()
    }

    fn e3(rows: &[&[u8]]) -> LinearCode {
        code(Field::Gf3, InnerProduct::Euclidean, rows)
    }

    fn h4(rows: &[&[u8]]) -> LinearCode {
        code(Field::Gf4, InnerProduct::Hermitian, rows)
    }

    #[test]
    fn gram_examples() {
        let c = e3(&[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(
            gram(&c),
            GfMatrix::from_rows(Field::Gf3, 2, &[[1, 0], [0, 2]]).unwrap()
        );
        assert_eq!(gram(&h4(&[&[1, W]])), GfMatrix::zeros(Field::Gf4, 1, 1));
        for f in [Field::Gf3, Field::Gf4] {
            let full = LinearCode::full(f, InnerProduct::Euclidean, 4).unwrap();
            assert_eq!(gram(&full), GfMatrix::identity(f, 4));
        }
        let full = LinearCode::full(Field::Gf4, InnerProduct::Hermitian, 3).unwrap();
        assert_eq!(gram(&full), GfMatrix::identity(Field::Gf4, 3));
    }

    #[test]
    fn is_lcd_examples() {
        assert!(is_lcd(&e3(&[&[1, 0, 0], &[0, 1, 1]])).unwrap());
        assert!(!is_lcd(&e3(&[&[1, 0, 1], &[0, 1, 1]])).unwrap());
        assert!(!is_lcd(&h4(&[&[1, W]])).unwrap());
        let z = LinearCode::zero(Field::Gf3, InnerProduct::Euclidean, 3).unwrap();
        assert!(matches!(is_lcd(&z), Err(Error::Domain(_))));
    }

    #[test]
    fn intersection_oracle_examples() {
        assert!(is_lcd_by_intersection(&e3(&[&[1, 0, 0], &[0, 1, 1]])));
        assert!(!is_lcd_by_intersection(&e3(&[&[1, 1, 1]])));
        let full = LinearCode::full(Field::Gf3, InnerProduct::Euclidean, 2).unwrap();
        assert!(is_lcd_by_intersection(&full));
    }

    #[test]
    fn self_orthogonal_examples() {
        assert!(is_self_orthogonal(&e3(&[&[1, 1, 1]])));
        assert!(is_self_orthogonal(&h4(&[&[1, W]])));
        assert!(!is_self_orthogonal(&e3(&[&[1, 0, 0], &[0, 1, 1]])));

        assert!(is_self_orthogonal_by_weights(&e3(&[&[1, 1, 1]])).unwrap());
        assert!(!is_self_orthogonal_by_weights(&e3(&[&[1, 0, 0]])).unwrap());
        assert!(is_self_orthogonal_by_weights(&h4(&[&[1, 1]])).unwrap());
        let binary = code(Field::Gf2, InnerProduct::Euclidean, &[&[1, 1]]);
        assert!(matches!(
            is_self_orthogonal_by_weights(&binary),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn descent_vector_examples() {
        let x = find_descent_vector(&e3(&[&[1, 0, 0], &[0, 1, 1]])).unwrap();
        assert_eq!(x.symbols(), &[1, 0, 0]);

        // rows scanned as given: <r1,r1> = 0, <r2,r2> = 2
        let g = GfMatrix::from_rows(Field::Gf3, 3, &[[1, 1, 1], [0, 1, 2]]).unwrap();
        let x = find_descent_vector_in(&g, InnerProduct::Euclidean).unwrap();
        assert_eq!(x.symbols(), &[0, 1, 2]);
        // the canonical generator of the same code is [(1,0,2), (0,1,2)]
        let c = LinearCode::new(&g, InnerProduct::Euclidean).unwrap();
        assert_eq!(find_descent_vector(&c).unwrap().symbols(), &[1, 0, 2]);

        assert!(matches!(
            find_descent_vector(&h4(&[&[1, W]])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn descent_vector_beyond_rows() {
        // both canonical rows have weight 3, so the scan falls through to
        // message order: (0,1), (0,2), (1,0) are isotropic, (1,1) is not
        let c = e3(&[&[1, 0, 1, 1], &[0, 1, 2, 2]]);
        assert!(is_lcd(&c).unwrap());
        let x = find_descent_vector(&c).unwrap();
        assert_eq!(x.symbols(), &[1, 1, 0, 0]);

        let step = descend(&c).unwrap();
        assert_eq!(step.transformed_gen().row(0), &[1, 1, 0, 0]);
        assert_eq!(step.transformed_gen().row(1), &[1, 2, 2, 2]);
        step.check_invariants().unwrap();
    }

    #[test]
    fn descend_examples() {
        let c = e3(&[&[1, 0, 0], &[0, 1, 1]]);
        let step = descend(&c).unwrap();
        assert_eq!(step.child(), &e3(&[&[0, 1, 1]]));
        assert!(is_lcd(step.child()).unwrap());
        step.check_invariants().unwrap();

        let c = e3(&[&[1, 0, 0], &[1, 1, 0]]);
        let step = descend(&c).unwrap();
        assert_eq!(step.chosen_x().symbols(), &[1, 0, 0]);
        assert_eq!(step.transformed_gen().row(1), &[0, 1, 0]);
        assert_eq!(step.child(), &e3(&[&[0, 1, 0]]));
        step.check_invariants().unwrap();

        let c = LinearCode::full(Field::Gf4, InnerProduct::Hermitian, 2).unwrap();
        let step = descend(&c).unwrap();
        assert_eq!(step.child(), &h4(&[&[0, 1]]));
        step.check_invariants().unwrap();
    }

    #[test]
    fn descend_hermitian_uses_conjugated_coefficient() {
        // x = (1,0,1,1), r = (0,1,w,0): <x,r>_H = conj(w) = w^2, so the
        // projection subtracts conj(w^2) x = w x. Using w^2 instead would
        // leave <x,r'> = 1.
        let c = h4(&[&[1, 0, 1, 1], &[0, 1, W, 0]]);
        let step = descend(&c).unwrap();
        assert_eq!(step.chosen_x().symbols(), &[1, 0, 1, 1]);
        assert_eq!(step.transformed_gen().row(1), &[W, 1, 0, W]);
        step.check_invariants().unwrap();
    }

    #[test]
    fn descend_errors() {
        let z = e3(&[&[1, 0, 0]]);
        assert!(matches!(descend(&z), Err(Error::Domain(_))));
        assert!(matches!(
            descend(&e3(&[&[1, 0, 1], &[0, 1, 1]])),
            Err(Error::Domain(_))
        ));
        let e4 = LinearCode::full(Field::Gf4, InnerProduct::Euclidean, 2).unwrap();
        assert!(matches!(descend(&e4), Err(Error::Usage(_))));
        let b = LinearCode::full(Field::Gf2, InnerProduct::Euclidean, 3).unwrap();
        assert!(matches!(descend(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn chain_examples() {
        let one = e3(&[&[1, 1, 0]]);
        let chain = descent_chain(&one).unwrap();
        assert_eq!(chain.codes().len(), 1);
        assert!(chain.steps().is_empty());

        let full = LinearCode::full(Field::Gf3, InnerProduct::Euclidean, 3).unwrap();
        let chain = descent_chain(&full).unwrap();
        let dims: Vec<usize> = chain.codes().iter().map(LinearCode::k).collect();
        assert_eq!(dims, vec![3, 2, 1]);
        assert_eq!(chain.steps().len(), 2);
        chain.check_invariants().unwrap();
    }

    #[test]
    fn ascend_examples() {
        let c = e3(&[&[1, 0, 0]]);
        let step = ascend_step(&c).unwrap();
        assert_eq!(step.adjoined_x().symbols(), &[0, 1, 0]);
        assert_eq!(step.supercode(), &e3(&[&[1, 0, 0], &[0, 1, 0]]));
        assert!(is_lcd(step.supercode()).unwrap());

        let c = h4(&[&[1, 0]]);
        let up = ascend(&c).unwrap();
        assert_eq!(
            up,
            LinearCode::full(Field::Gf4, InnerProduct::Hermitian, 2).unwrap()
        );

        let up2 = ascend_via_duality(&e3(&[&[1, 0, 0]])).unwrap();
        assert_eq!(up2.k(), 2);
        assert!(is_lcd(&up2).unwrap());
        assert!(e3(&[&[1, 0, 0]]).is_subcode_of(&up2).unwrap());
    }

    #[test]
    fn ascend_errors() {
        let full = LinearCode::full(Field::Gf3, InnerProduct::Euclidean, 3).unwrap();
        assert!(matches!(ascend(&full), Err(Error::Domain(_))));
        assert!(matches!(ascend_via_duality(&full), Err(Error::Domain(_))));
        assert!(matches!(ascend(&e3(&[&[1, 1, 1]])), Err(Error::Domain(_))));
        let e4 = code(Field::Gf4, InnerProduct::Euclidean, &[&[1, 0]]);
        assert!(matches!(ascend(&e4), Err(Error::Usage(_))));
    }

    #[test]
    fn ascend_then_descend_nest() {
        let c = e3(&[&[1, 1, 0, 0]]);
        let up = ascend(&c).unwrap();
        let down = descend(&up).unwrap();
        assert!(c.is_subcode_of(&up).unwrap());
        assert!(down.child().is_subcode_of(&up).unwrap());
        assert!(is_lcd(down.child()).unwrap());
    }
}
