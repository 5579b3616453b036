//! Exhaustive enumeration of `[n,k]` codes and largest-minimum-weight tables
//! for LCD codes.
//!
//! Every `k`-dimensional subspace of `GF(q)^n` has exactly one RREF
//! generator, so walking all pivot-column subsets and all fillings of the
//! free entries visits each code once. The number of codes is the Gaussian
//! binomial `[n k]_q`, which every exhaustive scan checks against.
//!
//! Scans are partitioned by pivot subset. With more than one worker the
//! subsets are spread over a rayon pool and the per-subset results are merged
//! with an associative, commutative reduction (largest `d`, then the
//! lexicographically smallest RREF witness), so the output does not depend
//! on scheduling.

use std::cmp::Ordering;
use std::fmt::Write as _;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{InnerProduct, LinearCode};
use crate::error::{Error, Result};
use crate::format::symbol_rows;
use crate::galois::Field;
use crate::lcd;
use crate::matrix::GfMatrix;

/// `[n k]_q = prod_{i<k} (q^(n-i) - 1) / (q^(k-i) - 1)`; `None` on overflow.
pub fn gaussian_binomial(q: u64, n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    // Multiply and divide alternately; each partial product is itself a
    // Gaussian binomial, so the division is exact.
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = (q as u128).checked_pow((n - i) as u32)? - 1;
        let den = (q as u128).checked_pow((i + 1) as u32)? - 1;
        acc = acc.checked_mul(num)? / den;
    }
    u64::try_from(acc).ok()
}

/// Limits on exhaustive work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest length searched without `override_budget`; `None` picks the
    /// per-field default (10 for GF(2), 7 for GF(3), 6 for GF(4)).
    pub max_n: Option<usize>,
    /// Largest dimension searched without `override_budget`; `None` means no cap.
    pub max_k: Option<usize>,
    /// Largest number of codes one exhaustive cell may visit.
    pub max_codes: u64,
    /// 1 runs serially; 0 uses every available core.
    pub workers: usize,
    /// Random generators drawn for cells over `max_codes` (lower bounds only).
    pub sample_size: Option<usize>,
    pub seed: u64,
    pub override_budget: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_n: None,
            max_k: None,
            max_codes: 2_000_000,
            workers: 1,
            sample_size: None,
            seed: 0,
            override_budget: false,
        }
    }
}

pub fn default_max_n(field: Field) -> usize {
    match field {
        Field::Gf2 => 10,
        Field::Gf3 => 7,
        Field::Gf4 => 6,
    }
}

impl SearchBudget {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    fn max_n_for(&self, field: Field) -> usize {
        self.max_n.unwrap_or_else(|| default_max_n(field))
    }

    fn check_length(&self, field: Field, n: usize) -> Result<()> {
        let max = self.max_n_for(field);
        if n > max && !self.override_budget {
            return Err(Error::resource(format!(
                "length {n} over {field} exceeds the exhaustive budget (n <= {max}); pass the override flag"
            )));
        }
        Ok(())
    }

    fn check_dimension(&self, k: usize) -> Result<()> {
        if let Some(max) = self.max_k {
            if k > max && !self.override_budget {
                return Err(Error::resource(format!(
                    "dimension {k} exceeds the budget (k <= {max})"
                )));
            }
        }
        Ok(())
    }

    /// Number of codes in the cell if it may be scanned exhaustively.
    fn exhaustive_count(&self, field: Field, n: usize, k: usize) -> Option<u64> {
        gaussian_binomial(field.order() as u64, n, k).filter(|&c| c <= self.max_codes)
    }

    fn require_exhaustive(&self, field: Field, n: usize, k: usize) -> Result<u64> {
        self.check_length(field, n)?;
        self.check_dimension(k)?;
        self.exhaustive_count(field, n, k).ok_or_else(|| {
            Error::resource(format!(
                "the [{n},{k}] cell over {field} has more than {} codes",
                self.max_codes
            ))
        })
    }
}

fn check_cell(n: usize, k: usize) -> Result<()> {
    if n == 0 || k > n {
        return Err(Error::usage(format!(
            "no [{n},{k}] codes: need 1 <= n and k <= n"
        )));
    }
    Ok(())
}

/// RREF template for one pivot subset: pivots set to 1, plus the flat
/// positions of the free entries in row-major order.
fn template(n: usize, pivots: &[usize]) -> (Vec<u8>, Vec<usize>) {
    let k = pivots.len();
    let mut data = vec![0u8; k * n];
    let mut free = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        data[r * n + p] = 1;
        for c in p + 1..n {
            if !pivots.contains(&c) {
                free.push(r * n + c);
            }
        }
    }
    (data, free)
}

/// Next filling of the free entries in lexicographic order; `false` after the last.
#[inline]
fn next_fill(data: &mut [u8], free: &[usize], q: u8) -> bool {
    for &pos in free.iter().rev() {
        let v = data[pos] + 1;
        if v == q {
            data[pos] = 0;
        } else {
            data[pos] = v;
            return true;
        }
    }
    false
}

/// Iterator over every `[n,k]` code, in pivot-subset then free-entry order.
pub struct CodeIter {
    field: Field,
    ip: InnerProduct,
    n: usize,
    k: usize,
    subsets: itertools::Combinations<std::ops::Range<usize>>,
    current: Option<(Vec<u8>, Vec<usize>)>,
}

impl Iterator for CodeIter {
    type Item = LinearCode;

    fn next(&mut self) -> Option<LinearCode> {
        let q = self.field.order();
        let advanced = match &mut self.current {
            Some((data, free)) => next_fill(data, free, q),
            None => false,
        };
        if !advanced {
            let pivots = self.subsets.next()?;
            self.current = Some(template(self.n, &pivots));
        }
        let (data, _) = self.current.as_ref().expect("set above");
        let gen = GfMatrix::from_raw(self.field, self.k, self.n, data.clone());
        Some(LinearCode::from_rref(gen, self.ip))
    }
}

/// Every `[n,k]` code over `field`, each exactly once.
pub fn enumerate_codes(
    field: Field,
    ip: InnerProduct,
    n: usize,
    k: usize,
    budget: &SearchBudget,
) -> Result<CodeIter> {
    ip.check_field(field)?;
    check_cell(n, k)?;
    budget.require_exhaustive(field, n, k)?;
    Ok(CodeIter {
        field,
        ip,
        n,
        k,
        subsets: (0..n).combinations(k),
        current: None,
    })
}

/// Folds `visit` over every `[n,k]` code, one accumulator per pivot subset,
/// then merges the accumulators in subset order. `visit` receives the code
/// and the index of its pivot subset.
#[allow(clippy::too_many_arguments)]
fn fold_codes<A, I, V, M>(
    field: Field,
    ip: InnerProduct,
    n: usize,
    k: usize,
    workers: usize,
    identity: I,
    visit: V,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &LinearCode, usize) + Sync,
    M: Fn(A, A) -> A + Sync + Send,
{
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let q = field.order();
    let scan = |idx: usize, pivots: &Vec<usize>| -> A {
        let mut acc = identity();
        let (mut data, free) = template(n, pivots);
        loop {
            let gen = GfMatrix::from_raw(field, k, n, data.clone());
            visit(&mut acc, &LinearCode::from_rref(gen, ip), idx);
            if !next_fill(&mut data, &free, q) {
                break;
            }
        }
        acc
    };
    if workers == 1 {
        return Ok(subsets
            .iter()
            .enumerate()
            .map(|(i, s)| scan(i, s))
            .fold(identity(), &merge));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::resource(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| {
        subsets
            .par_iter()
            .enumerate()
            .map(|(i, s)| scan(i, s))
            .reduce(&identity, &merge)
    }))
}

/// Best LCD code of one cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellResult {
    pub k: usize,
    /// Largest minimum weight among LCD codes; `None` when no code is LCD.
    pub d: Option<usize>,
    /// Lexicographically smallest RREF attaining `d`.
    pub witness: Option<LinearCode>,
    pub visited: u64,
    pub lcd_codes: u64,
    /// Set when the cell was sampled rather than enumerated; `d` is then only
    /// a lower bound.
    pub lower_bound: bool,
}

#[derive(Debug, Clone, Default)]
struct CellAcc {
    best: Option<(usize, Vec<u8>)>,
    visited: u64,
    lcd: u64,
}

/// Larger `d` wins; among equal `d` the smaller witness wins.
fn better(a: &(usize, Vec<u8>), b: &(usize, Vec<u8>)) -> bool {
    match a.0.cmp(&b.0) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.1 < b.1,
    }
}

impl CellAcc {
    fn offer(&mut self, d: usize, witness: &[u8]) {
        let replace = match &self.best {
            None => true,
            Some((bd, bw)) => d > *bd || (d == *bd && witness < bw.as_slice()),
        };
        if replace {
            self.best = Some((d, witness.to_vec()));
        }
    }

    fn visit(&mut self, c: &LinearCode) {
        self.visited += 1;
        if lcd::is_lcd(c).unwrap_or(false) {
            self.lcd += 1;
            // a code can only win with d >= the current best
            let floor = self.best.as_ref().map_or(1, |(d, _)| *d);
            if let Some(d) = crate::code::min_weight_at_least(c, floor) {
                self.offer(d, c.generator().as_slice());
            }
        }
    }

    fn merge(self, other: CellAcc) -> CellAcc {
        let best = match (self.best, other.best) {
            (None, b) | (b, None) => b,
            (Some(a), Some(b)) => Some(if better(&b, &a) { b } else { a }),
        };
        CellAcc {
            best,
            visited: self.visited + other.visited,
            lcd: self.lcd + other.lcd,
        }
    }

    fn into_result(
        self,
        field: Field,
        ip: InnerProduct,
        n: usize,
        k: usize,
        lower_bound: bool,
    ) -> CellResult {
        let (d, witness) = match self.best {
            Some((d, w)) => (
                Some(d),
                Some(LinearCode::from_rref(
                    GfMatrix::from_raw(field, k, n, w),
                    ip,
                )),
            ),
            None => (None, None),
        };
        CellResult {
            k,
            d,
            witness,
            visited: self.visited,
            lcd_codes: self.lcd,
            lower_bound,
        }
    }
}

fn exhaustive_cell(
    field: Field,
    ip: InnerProduct,
    n: usize,
    k: usize,
    expected: u64,
    workers: usize,
) -> Result<CellResult> {
    let acc = fold_codes(
        field,
        ip,
        n,
        k,
        workers,
        CellAcc::default,
        |acc, c, _| acc.visit(c),
        CellAcc::merge,
    )?;
    if acc.visited != expected {
        return Err(Error::Invariant(format!(
            "[{n},{k}] over {field}: enumerated {} codes, Gaussian binomial is {expected}",
            acc.visited
        )));
    }
    Ok(acc.into_result(field, ip, n, k, false))
}

fn sampled_cell(
    field: Field,
    ip: InnerProduct,
    n: usize,
    k: usize,
    samples: usize,
    seed: u64,
) -> CellResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32 | k as u64));
    let q = field.order();
    let mut acc = CellAcc::default();
    for _ in 0..samples {
        let data: Vec<u8> = (0..n * k).map(|_| rng.random_range(0..q)).collect();
        let gen = GfMatrix::from_raw(field, k, n, data);
        if let Ok(c) = LinearCode::new(&gen, ip) {
            acc.visit(&c);
        }
    }
    acc.into_result(field, ip, n, k, true)
}

/// `d(n,k)`: the largest minimum weight over all LCD `[n,k]` codes, with the
/// lexicographically smallest RREF witness. Requires an exhaustive budget.
pub fn largest_lcd_min_weight(
    field: Field,
    ip: InnerProduct,
    n: usize,
    k: usize,
    budget: &SearchBudget,
) -> Result<CellResult> {
    ip.check_field(field)?;
    check_cell(n, k)?;
    if k == 0 {
        return Err(Error::domain("LCD is not defined for the zero code"));
    }
    let expected = budget.require_exhaustive(field, n, k)?;
    exhaustive_cell(field, ip, n, k, expected, budget.workers)
}

/// One adjacent pair of a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub k: usize,
    pub d_prev: Option<usize>,
    pub d: Option<usize>,
    /// `d(n,k) <= d(n,k-1)`; `None` when either cell is empty or sampled.
    pub holds: Option<bool>,
}

/// `d(n,k)` for `k = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DTable {
    pub field: Field,
    pub ip: InnerProduct,
    pub n: usize,
    pub entries: Vec<CellResult>,
}

impl DTable {
    pub fn monotonicity_report(&self) -> Vec<PairCheck> {
        self.entries
            .windows(2)
            .map(|w| {
                let holds = match (w[0].d, w[1].d) {
                    (Some(a), Some(b)) if !w[0].lower_bound && !w[1].lower_bound => Some(b <= a),
                    _ => None,
                };
                PairCheck {
                    k: w[1].k,
                    d_prev: w[0].d,
                    d: w[1].d,
                    holds,
                }
            })
            .collect()
    }

    pub fn is_monotone(&self) -> bool {
        self.monotonicity_report()
            .iter()
            .all(|p| p.holds != Some(false))
    }

    /// Every cell was enumerated exhaustively.
    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|e| !e.lower_bound)
    }

    pub fn d(&self, k: usize) -> Option<usize> {
        self.entries.iter().find(|e| e.k == k).and_then(|e| e.d)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry {
            k: usize,
            d: Option<usize>,
            witness_rows: Option<Vec<String>>,
            lower_bound: bool,
        }
        #[derive(Serialize)]
        struct CellCount {
            k: usize,
            visited: u64,
            lcd: u64,
        }
        #[derive(Serialize)]
        struct Counts {
            codes_visited: u64,
            lcd_codes: u64,
            per_k: Vec<CellCount>,
        }
        #[derive(Serialize)]
        struct Out {
            field: u8,
            inner: &'static str,
            n: usize,
            entries: Vec<Entry>,
            monotone: bool,
            complete: bool,
            monotonicity: Vec<PairCheck>,
            counts: Counts,
        }
        let out = Out {
            field: self.field.order(),
            inner: self.ip.name(),
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|e| Entry {
                    k: e.k,
                    d: e.d,
                    witness_rows: e.witness.as_ref().map(|w| symbol_rows(w.generator())),
                    lower_bound: e.lower_bound,
                })
                .collect(),
            monotone: self.is_monotone(),
            complete: self.is_complete(),
            monotonicity: self.monotonicity_report(),
            counts: Counts {
                codes_visited: self.entries.iter().map(|e| e.visited).sum(),
                lcd_codes: self.entries.iter().map(|e| e.lcd_codes).sum(),
                per_k: self
                    .entries
                    .iter()
                    .map(|e| CellCount {
                        k: e.k,
                        visited: e.visited,
                        lcd: e.lcd_codes,
                    })
                    .collect(),
            },
        };
        serde_json::to_string_pretty(&out).expect("table serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{} {} n={}", self.field, self.ip, self.n).unwrap();
        writeln!(
            s,
            "{:>3} {:>4} {:>10} {:>10}  witness",
            "k", "d", "LCD", "codes"
        )
        .unwrap();
        for e in &self.entries {
            let d = match (e.d, e.lower_bound) {
                (Some(d), false) => d.to_string(),
                (Some(d), true) => format!(">={d}"),
                (None, _) => "none".to_string(),
            };
            let w = e
                .witness
                .as_ref()
                .map(|w| symbol_rows(w.generator()).join(" | "))
                .unwrap_or_default();
            writeln!(
                s,
                "{:>3} {:>4} {:>10} {:>10}  {}",
                e.k, d, e.lcd_codes, e.visited, w
            )
            .unwrap();
        }
        for p in self.monotonicity_report() {
            let verdict = match p.holds {
                Some(true) => "ok",
                Some(false) => "VIOLATED",
                None => "unchecked",
            };
            writeln!(
                s,
                "d({},{}) <= d({},{}): {verdict}",
                self.n,
                p.k,
                self.n,
                p.k - 1
            )
            .unwrap();
        }
        writeln!(
            s,
            "monotone: {}",
            if self.is_monotone() { "yes" } else { "no" }
        )
        .unwrap();
        if !self.is_complete() {
            writeln!(s, "note: sampled cells are lower bounds").unwrap();
        }
        s
    }
}

/// Computes `d(n,k)` for every `k`. Cells over the exhaustive budget are
/// sampled when `budget.sample_size` is set and rejected otherwise.
pub fn build_dtable(
    field: Field,
    ip: InnerProduct,
    n: usize,
    budget: &SearchBudget,
) -> Result<DTable> {
    ip.check_field(field)?;
    check_cell(n, 1)?;
    budget.check_length(field, n)?;
    let mut entries = Vec::with_capacity(n);
    for k in 1..=n {
        budget.check_dimension(k)?;
        let cell = match (budget.exhaustive_count(field, n, k), budget.sample_size) {
            (Some(expected), _) => exhaustive_cell(field, ip, n, k, expected, budget.workers)?,
            (None, Some(samples)) => sampled_cell(field, ip, n, k, samples, budget.seed),
            (None, None) => {
                return Err(Error::resource(format!(
                    "the [{n},{k}] cell over {field} has more than {} codes and no sample size was given",
                    budget.max_codes
                )))
            }
        };
        entries.push(cell);
    }
    Ok(DTable {
        field,
        ip,
        n,
        entries,
    })
}

/// Options for the exhaustive verification harness.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Inverts the first check of the scan so the harness must report a failure.
    pub inject_fault: bool,
}

const MAX_EXAMPLES: usize = 10;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub checks: u64,
    pub failures: u64,
    pub examples: Vec<String>,
}

impl CheckTally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(what());
            }
        }
    }

    fn merge(mut self, other: CheckTally) -> CheckTally {
        self.checks += other.checks;
        self.failures += other.failures;
        self.examples.extend(other.examples);
        self.examples.truncate(MAX_EXAMPLES);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CellCount {
    pub n: usize,
    pub k: usize,
    pub codes: u64,
    pub lcd: u64,
    pub expected: u64,
}

/// Exhaustive check of the descent and ascent constructions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    pub field: u8,
    pub inner: &'static str,
    pub n_max: usize,
    pub codes_visited: u64,
    pub lcd_codes: u64,
    pub descent: CheckTally,
    pub ascent: CheckTally,
    pub ascent_via_duality: CheckTally,
    pub cells: Vec<CellCount>,
}

impl ConstructionReport {
    pub fn failures(&self) -> u64 {
        self.descent.failures + self.ascent.failures + self.ascent_via_duality.failures
    }
}

#[derive(Default)]
struct ConstructionAcc {
    visited: u64,
    fault_used: bool,
    lcd: u64,
    descent: CheckTally,
    ascent: CheckTally,
    via_duality: CheckTally,
}

impl ConstructionAcc {
    fn merge(self, o: ConstructionAcc) -> ConstructionAcc {
        ConstructionAcc {
            visited: self.visited + o.visited,
            fault_used: self.fault_used || o.fault_used,
            lcd: self.lcd + o.lcd,
            descent: self.descent.merge(o.descent),
            ascent: self.ascent.merge(o.ascent),
            via_duality: self.via_duality.merge(o.via_duality),
        }
    }
}

/// The injected fault lands on the first check made in the first pivot
/// subset of the armed cell.
fn take_fault(used: &mut bool, inject: bool, subset: usize) -> bool {
    let fire = inject && subset == 0 && !*used;
    *used |= fire;
    fire
}

fn describe(c: &LinearCode) -> String {
    format!(
        "[{},{}] {}",
        c.n(),
        c.k(),
        symbol_rows(c.generator()).join(" | ")
    )
}

fn check_ascent(c: &LinearCode, up: Result<LinearCode>) -> std::result::Result<(), String> {
    let up = up.map_err(|e| e.to_string())?;
    let ok = up.k() == c.k() + 1
        && lcd::is_lcd(&up).unwrap_or(false)
        && c.is_subcode_of(&up).unwrap_or(false)
        && up != *c;
    if ok {
        Ok(())
    } else {
        Err(format!("result {} is not an LCD supercode", describe(&up)))
    }
}

fn construction_scan(
    field: Field,
    ip: InnerProduct,
    n_max: usize,
    budget: &SearchBudget,
    opts: VerifyOptions,
    descent: bool,
    ascent: bool,
) -> Result<ConstructionReport> {
    lcd::construction_divisor(field, ip)?;
    budget.check_length(field, n_max)?;
    let mut total = ConstructionAcc::default();
    let mut cells = Vec::new();
    let mut fault_pending = opts.inject_fault;
    for n in 1..=n_max {
        for k in 1..=n {
            let expected = budget.require_exhaustive(field, n, k)?;
            let inject = std::mem::take(&mut fault_pending);
            let acc = fold_codes(
                field,
                ip,
                n,
                k,
                budget.workers,
                ConstructionAcc::default,
                |acc, c, subset| {
                    acc.visited += 1;
                    if !lcd::is_lcd(c).unwrap_or(false) {
                        return;
                    }
                    acc.lcd += 1;
                    if descent && k >= 2 {
                        let flip = take_fault(&mut acc.fault_used, inject, subset);
                        let res = lcd::descend(c).and_then(|s| s.check_invariants());
                        acc.descent.record(res.is_ok() != flip, || match res {
                            Err(e) => format!("descend {}: {e}", describe(c)),
                            Ok(()) => format!("descend {}: injected fault", describe(c)),
                        });
                    }
                    if ascent && k < n {
                        let flip = take_fault(&mut acc.fault_used, inject, subset);
                        let res = check_ascent(c, lcd::ascend(c));
                        acc.ascent.record(res.is_ok() != flip, || match res {
                            Err(e) => format!("ascend {}: {e}", describe(c)),
                            Ok(()) => format!("ascend {}: injected fault", describe(c)),
                        });
                        let res = check_ascent(c, lcd::ascend_via_duality(c));
                        acc.via_duality.record(res.is_ok(), || {
                            format!("ascend via duality {}: {}", describe(c), res.unwrap_err())
                        });
                    }
                },
                ConstructionAcc::merge,
            )?;
            if acc.visited != expected {
                return Err(Error::Invariant(format!(
                    "[{n},{k}] over {field}: enumerated {} codes, Gaussian binomial is {expected}",
                    acc.visited
                )));
            }
            fault_pending |= inject && !acc.fault_used;
            cells.push(CellCount {
                n,
                k,
                codes: acc.visited,
                lcd: acc.lcd,
                expected,
            });
            total = total.merge(acc);
        }
    }
    Ok(ConstructionReport {
        field: field.order(),
        inner: ip.name(),
        n_max,
        codes_visited: total.visited,
        lcd_codes: total.lcd,
        descent: total.descent,
        ascent: total.ascent,
        ascent_via_duality: total.via_duality,
        cells,
    })
}

/// Runs `descend` on every LCD code with `n <= n_max`, `k >= 2` and checks
/// every descent invariant.
pub fn verify_descent_exhaustive(
    field: Field,
    ip: InnerProduct,
    n_max: usize,
    budget: &SearchBudget,
    opts: VerifyOptions,
) -> Result<ConstructionReport> {
    construction_scan(field, ip, n_max, budget, opts, true, false)
}

/// Runs `ascend` and `ascend_via_duality` on every LCD code with
/// `n <= n_max`, `k <= n - 1`.
pub fn verify_ascent_exhaustive(
    field: Field,
    ip: InnerProduct,
    n_max: usize,
    budget: &SearchBudget,
    opts: VerifyOptions,
) -> Result<ConstructionReport> {
    construction_scan(field, ip, n_max, budget, opts, false, true)
}

/// Both constructions in one pass.
pub fn verify_constructions_exhaustive(
    field: Field,
    ip: InnerProduct,
    n_max: usize,
    budget: &SearchBudget,
    opts: VerifyOptions,
) -> Result<ConstructionReport> {
    construction_scan(field, ip, n_max, budget, opts, true, true)
}

/// Exhaustive cross-check of the LCD and self-orthogonality characterizations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub field: u8,
    pub inner: &'static str,
    pub n_max: usize,
    pub codes_visited: u64,
    /// Gram nonsingularity against the intersection definition.
    pub lcd_vs_intersection: CheckTally,
    /// LCD-ness of a code against LCD-ness of its dual.
    pub lcd_vs_dual: CheckTally,
    /// Zero Gram matrix against weight divisibility; `None` when the
    /// field/form pair has no weight characterization.
    pub self_orthogonal_vs_weights: Option<CheckTally>,
    pub cells: Vec<CellCount>,
}

impl LemmaReport {
    pub fn failures(&self) -> u64 {
        self.lcd_vs_intersection.failures
            + self.lcd_vs_dual.failures
            + self
                .self_orthogonal_vs_weights
                .as_ref()
                .map_or(0, |t| t.failures)
    }
}

#[derive(Default)]
struct LemmaAcc {
    visited: u64,
    fault_used: bool,
    lcd: u64,
    intersection: CheckTally,
    dual: CheckTally,
    weights: CheckTally,
}

impl LemmaAcc {
    fn merge(self, o: LemmaAcc) -> LemmaAcc {
        LemmaAcc {
            visited: self.visited + o.visited,
            fault_used: self.fault_used || o.fault_used,
            lcd: self.lcd + o.lcd,
            intersection: self.intersection.merge(o.intersection),
            dual: self.dual.merge(o.dual),
            weights: self.weights.merge(o.weights),
        }
    }
}

/// Over every code with `n <= n_max` (all `k`, the zero and full codes
/// included where the predicates are defined).
pub fn verify_lemma_equivalences(
    field: Field,
    ip: InnerProduct,
    n_max: usize,
    budget: &SearchBudget,
    opts: VerifyOptions,
) -> Result<LemmaReport> {
    ip.check_field(field)?;
    budget.check_length(field, n_max)?;
    let weights_apply = lcd::construction_divisor(field, ip).is_ok();
    let mut total = LemmaAcc::default();
    let mut cells = Vec::new();
    let mut fault_pending = opts.inject_fault;
    for n in 1..=n_max {
        for k in 0..=n {
            let expected = budget.require_exhaustive(field, n, k)?;
            let inject = std::mem::take(&mut fault_pending);
            let acc = fold_codes(
                field,
                ip,
                n,
                k,
                budget.workers,
                LemmaAcc::default,
                |acc, c, subset| {
                    acc.visited += 1;
                    if k >= 1 {
                        let flip = take_fault(&mut acc.fault_used, inject, subset);
                        let by_gram = lcd::is_lcd(c).expect("k >= 1") != flip;
                        let by_def = lcd::is_lcd_by_intersection(c);
                        acc.lcd += u64::from(by_gram);
                        acc.intersection.record(by_gram == by_def, || {
                            format!(
                                "{}: gram says {by_gram}, intersection says {by_def}",
                                describe(c)
                            )
                        });
                        if k < n {
                            let dual = lcd::is_lcd(&c.dual()).expect("dual has k >= 1");
                            acc.dual.record(by_def == dual, || {
                                format!("{}: LCD {by_def}, dual LCD {dual}", describe(c))
                            });
                        }
                    }
                    if weights_apply {
                        let so = lcd::is_self_orthogonal(c);
                        match lcd::is_self_orthogonal_by_weights(c) {
                            Ok(w) => acc.weights.record(so == w, || {
                                format!("{}: gram zero {so}, weights divisible {w}", describe(c))
                            }),
                            Err(e) => acc
                                .weights
                                .record(false, || format!("{}: {e}", describe(c))),
                        }
                    }
                },
                LemmaAcc::merge,
            )?;
            if acc.visited != expected {
                return Err(Error::Invariant(format!(
                    "[{n},{k}] over {field}: enumerated {} codes, Gaussian binomial is {expected}",
                    acc.visited
                )));
            }
            fault_pending |= inject && !acc.fault_used;
            cells.push(CellCount {
                n,
                k,
                codes: acc.visited,
                lcd: acc.lcd,
                expected,
            });
            total = total.merge(acc);
        }
    }
    Ok(LemmaReport {
        field: field.order(),
        inner: ip.name(),
        n_max,
        codes_visited: total.visited,
        lcd_vs_intersection: total.intersection,
        lcd_vs_dual: total.dual,
        self_orthogonal_vs_weights: weights_apply.then_some(total.weights),
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(3, 2, 1), Some(4));
        assert_eq!(gaussian_binomial(4, 2, 1), Some(5));
        assert_eq!(gaussian_binomial(3, 3, 1), Some(13));
        assert_eq!(gaussian_binomial(2, 4, 2), Some(35));
        assert_eq!(gaussian_binomial(3, 7, 3), Some(925_771));
        for q in [2, 3, 4] {
            for n in 0..8 {
                assert_eq!(gaussian_binomial(q, n, n), Some(1));
                assert_eq!(gaussian_binomial(q, n, 0), Some(1));
            }
        }
        assert_eq!(gaussian_binomial(4, 200, 100), None);
    }

    #[test]
    fn enumeration_counts_small() {
        let b = SearchBudget::default();
        let e = InnerProduct::Euclidean;
        assert_eq!(enumerate_codes(Field::Gf3, e, 2, 1, &b).unwrap().count(), 4);
        assert_eq!(enumerate_codes(Field::Gf4, e, 2, 1, &b).unwrap().count(), 5);
        for f in Field::ALL {
            assert_eq!(enumerate_codes(f, e, 4, 4, &b).unwrap().count(), 1);
        }
    }

    #[test]
    fn enumeration_has_no_duplicates_and_is_rref() {
        let b = SearchBudget::default();
        let codes: Vec<_> = enumerate_codes(Field::Gf3, InnerProduct::Euclidean, 4, 2, &b)
            .unwrap()
            .collect();
        let set: HashSet<_> = codes.iter().cloned().collect();
        assert_eq!(set.len(), codes.len());
        for c in &codes {
            assert_eq!(c.generator().row_space_basis(), *c.generator());
        }
    }

    #[test]
    fn budget_errors() {
        let b = SearchBudget::default();
        let e = InnerProduct::Euclidean;
        assert!(matches!(
            build_dtable(Field::Gf3, e, 12, &b),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            enumerate_codes(Field::Gf3, e, 3, 4, &b),
            Err(Error::Usage(_))
        ));
        let tight = SearchBudget {
            max_codes: 10,
            ..SearchBudget::default()
        };
        assert!(matches!(
            largest_lcd_min_weight(Field::Gf3, e, 3, 1, &tight),
            Err(Error::Resource(_))
        ));
        let capped = SearchBudget {
            max_k: Some(1),
            ..SearchBudget::default()
        };
        assert!(matches!(
            build_dtable(Field::Gf3, e, 3, &capped),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn cell_examples() {
        let b = SearchBudget::default();
        let e = InnerProduct::Euclidean;
        let cell = largest_lcd_min_weight(Field::Gf3, e, 3, 1, &b).unwrap();
        assert_eq!(cell.d, Some(2));
        assert_eq!(cell.visited, 13);
        for n in 1..=5 {
            assert_eq!(
                largest_lcd_min_weight(Field::Gf3, e, n, n, &b).unwrap().d,
                Some(1)
            );
        }
    }

    #[test]
    fn hermitian_n2_table() {
        let t = build_dtable(
            Field::Gf4,
            InnerProduct::Hermitian,
            2,
            &SearchBudget::default(),
        )
        .unwrap();
        assert_eq!(t.d(1), Some(1));
        assert_eq!(t.d(2), Some(1));
        assert_eq!(t.entries[0].visited, 5);
        assert!(t.is_monotone());
    }

    #[test]
    fn witness_is_smallest_rref() {
        let b = SearchBudget::default();
        let cell = largest_lcd_min_weight(Field::Gf3, InnerProduct::Euclidean, 3, 1, &b).unwrap();
        // weight-2 LCD lines in RREF: (0,1,1),(0,1,2),(1,0,1),... smallest is (0,1,1)
        assert_eq!(cell.witness.unwrap().generator().as_slice(), &[0, 1, 1]);
    }

    #[test]
    fn sampled_cells_are_lower_bounds() {
        let b = SearchBudget {
            max_codes: 5,
            sample_size: Some(200),
            seed: 7,
            ..SearchBudget::default()
        };
        let t = build_dtable(Field::Gf3, InnerProduct::Euclidean, 3, &b).unwrap();
        assert!(t.entries[0].lower_bound);
        assert!(!t.is_complete());
        let again = build_dtable(Field::Gf3, InnerProduct::Euclidean, 3, &b).unwrap();
        assert_eq!(t, again);
    }

    #[test]
    fn fault_injection_is_reported() {
        let b = SearchBudget::default();
        let opts = VerifyOptions { inject_fault: true };
        let r =
            verify_lemma_equivalences(Field::Gf3, InnerProduct::Euclidean, 2, &b, opts).unwrap();
        assert!(r.failures() > 0);
        let r =
            verify_descent_exhaustive(Field::Gf3, InnerProduct::Euclidean, 3, &b, opts).unwrap();
        assert_eq!(r.descent.failures, 1);
        let r = verify_ascent_exhaustive(Field::Gf3, InnerProduct::Euclidean, 3, &b, opts).unwrap();
        assert_eq!(r.ascent.failures, 1);
    }
}
