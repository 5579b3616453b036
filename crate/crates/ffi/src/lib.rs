//! C ABI over `lcd_core`.
//!
//! Codes cross the boundary as opaque `LcdCode` handles owned by the caller
//! and released with `lcd_code_free`. Every function returns an
//! `LcdStatus`; on failure the message is available from
//! `lcd_last_error_message` on the same thread. Strings returned by the
//! library are released with `lcd_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lcd_core::search::SearchBudget;
use lcd_core::{Error, Field, GfMatrix, InnerProduct, LinearCode};

/// Opaque code handle.
pub struct LcdCode {
    inner: LinearCode,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// Checked negative result (not LCD, nothing to descend, ...).
    Domain = 4,
    Resource = 5,
    /// Internal invariant failure or a caught panic.
    Internal = 6,
    /// Caller buffer too small; the required size is reported where possible.
    BufferTooSmall = 7,
}

/// Inner product selector: 0 = Euclidean, 1 = Hermitian.
pub const LCD_INNER_EUCLIDEAN: u32 = 0;
pub const LCD_INNER_HERMITIAN: u32 = 1;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    let c = CString::new(msg).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(LcdStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Usage(_) => LcdStatus::InvalidArgument,
            Error::Domain(_) => LcdStatus::Domain,
            Error::Resource(_) => LcdStatus::Resource,
            Error::Parse { .. } => LcdStatus::Parse,
            Error::Invariant(_) => LcdStatus::Internal,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(LcdStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> LcdStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => LcdStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_error(format!("panic: {msg}"));
            LcdStatus::Internal
        }
    }
}

unsafe fn code_ref<'a>(code: *const LcdCode) -> Result<&'a LinearCode, Fail> {
    code.as_ref().map(|c| &c.inner).ok_or_else(|| null("code"))
}

unsafe fn out_mut<'a, T>(out: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    out.as_mut().ok_or_else(|| null(what))
}

fn boxed(c: LinearCode) -> *mut LcdCode {
    Box::into_raw(Box::new(LcdCode { inner: c }))
}

fn inner_from(raw: u32) -> Result<InnerProduct, Fail> {
    match raw {
        LCD_INNER_EUCLIDEAN => Ok(InnerProduct::Euclidean),
        LCD_INNER_HERMITIAN => Ok(InnerProduct::Hermitian),
        other => Err(Fail(
            LcdStatus::InvalidArgument,
            format!("unknown inner product selector {other}"),
        )),
    }
}

fn inner_to(ip: InnerProduct) -> u32 {
    match ip {
        InnerProduct::Euclidean => LCD_INNER_EUCLIDEAN,
        InnerProduct::Hermitian => LCD_INNER_HERMITIAN,
    }
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn lcd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a code file held in a NUL-terminated UTF-8 string.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_parse(text: *const c_char, out: *mut *mut LcdCode) -> LcdStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(LcdStatus::Parse, "input is not UTF-8".into()))?;
        *out = boxed(lcd_core::parse_code(text)?);
        Ok(())
    })
}

/// Builds a code from a row-major `k x n` matrix of field codes
/// (GF(4): 0, 1, 2 = w, 3 = w^2).
///
/// # Safety
/// `data` must point to `k * n` readable bytes (may be null when that is 0).
#[no_mangle]
pub unsafe extern "C" fn lcd_code_from_rows(
    q: u32,
    inner: u32,
    k: usize,
    n: usize,
    data: *const u8,
    out: *mut *mut LcdCode,
) -> LcdStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        let field = Field::from_order(q)?;
        let ip = inner_from(inner)?;
        let len = k
            .checked_mul(n)
            .ok_or_else(|| Fail(LcdStatus::InvalidArgument, "k * n overflows".into()))?;
        let entries = if len == 0 {
            Vec::new()
        } else if data.is_null() {
            return Err(null("data"));
        } else {
            std::slice::from_raw_parts(data, len).to_vec()
        };
        let gen = GfMatrix::new(field, k, n, entries)?;
        *out = boxed(LinearCode::new(&gen, ip)?);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `code` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_free(code: *mut LcdCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_n(code: *const LcdCode, out: *mut usize) -> LcdStatus {
    guard(|| {
        *out_mut(out, "out")? = code_ref(code)?.n();
        Ok(())
    })
}

/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_k(code: *const LcdCode, out: *mut usize) -> LcdStatus {
    guard(|| {
        *out_mut(out, "out")? = code_ref(code)?.k();
        Ok(())
    })
}

/// Field order q (2, 3 or 4).
///
/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_field(code: *const LcdCode, out: *mut u32) -> LcdStatus {
    guard(|| {
        *out_mut(out, "out")? = u32::from(code_ref(code)?.field().order());
        Ok(())
    })
}

/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_inner(code: *const LcdCode, out: *mut u32) -> LcdStatus {
    guard(|| {
        *out_mut(out, "out")? = inner_to(code_ref(code)?.inner_product());
        Ok(())
    })
}

/// Copies the canonical generator (row-major, `k * n` bytes) into `buf`.
/// `needed`, if non-null, receives `k * n` even when the buffer is too small.
///
/// # Safety
/// `buf` must have room for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_generator(
    code: *const LcdCode,
    buf: *mut u8,
    len: usize,
    needed: *mut usize,
) -> LcdStatus {
    guard(|| {
        let c = code_ref(code)?;
        let data = c.generator().as_slice();
        if let Some(needed) = needed.as_mut() {
            *needed = data.len();
        }
        if len < data.len() {
            return Err(Fail(
                LcdStatus::BufferTooSmall,
                format!("generator needs {} bytes, got {len}", data.len()),
            ));
        }
        if !data.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            ptr::copy_nonoverlapping(data.as_ptr(), buf, data.len());
        }
        Ok(())
    })
}

/// Gram-matrix LCD test. The zero code yields `Domain`.
///
/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_is_lcd(code: *const LcdCode, out: *mut bool) -> LcdStatus {
    guard(|| {
        *out_mut(out, "out")? = lcd_core::is_lcd(code_ref(code)?)?;
        Ok(())
    })
}

/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_is_self_orthogonal(
    code: *const LcdCode,
    out: *mut bool,
) -> LcdStatus {
    guard(|| {
        *out_mut(out, "out")? = lcd_core::is_self_orthogonal(code_ref(code)?);
        Ok(())
    })
}

/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_min_weight(code: *const LcdCode, out: *mut usize) -> LcdStatus {
    guard(|| {
        *out_mut(out, "out")? = code_ref(code)?.min_weight()?;
        Ok(())
    })
}

/// Dual code in the handle's own inner product.
///
/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_dual(code: *const LcdCode, out: *mut *mut LcdCode) -> LcdStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        *out = boxed(code_ref(code)?.dual());
        Ok(())
    })
}

/// One descent step. The child handle goes to `out`; if `x` is non-null the
/// split-off vector (`n` bytes) is copied there, `x_len` must be at least `n`.
///
/// # Safety
/// `code` and `out` must be valid; `x` must have room for `x_len` bytes.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_descend(
    code: *const LcdCode,
    out: *mut *mut LcdCode,
    x: *mut u8,
    x_len: usize,
) -> LcdStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        let c = code_ref(code)?;
        if !x.is_null() && x_len < c.n() {
            return Err(Fail(
                LcdStatus::BufferTooSmall,
                format!("x needs {} bytes, got {x_len}", c.n()),
            ));
        }
        let step = lcd_core::descend(c)?;
        if !x.is_null() {
            let sym = step.chosen_x().symbols();
            ptr::copy_nonoverlapping(sym.as_ptr(), x, sym.len());
        }
        *out = boxed(step.into_child());
        Ok(())
    })
}

/// LCD `[n, k+1]` supercode obtained by adjoining a dual vector.
///
/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_ascend(
    code: *const LcdCode,
    out: *mut *mut LcdCode,
) -> LcdStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        *out = boxed(lcd_core::ascend(code_ref(code)?)?);
        Ok(())
    })
}

/// Code file text for the handle; release with `lcd_string_free`.
///
/// # Safety
/// `code` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_code_to_string(
    code: *const LcdCode,
    out: *mut *mut c_char,
) -> LcdStatus {
    guard(|| {
        let out = out_mut(out, "out")?;
        let text = lcd_core::write_code(code_ref(code)?);
        *out = CString::new(text)
            .map_err(|_| Fail(LcdStatus::Internal, "code text contains NUL".into()))?
            .into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library (or be null) and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lcd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Largest minimum weight over all LCD `[n,k]` codes, by exhaustive search
/// under the default budget. `found` is false when no such code is LCD.
///
/// # Safety
/// `d` and `found` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lcd_largest_min_weight(
    q: u32,
    inner: u32,
    n: usize,
    k: usize,
    workers: usize,
    d: *mut usize,
    found: *mut bool,
) -> LcdStatus {
    guard(|| {
        let d = out_mut(d, "d")?;
        let found = out_mut(found, "found")?;
        let field = Field::from_order(q)?;
        let ip = inner_from(inner)?;
        let budget = SearchBudget {
            workers,
            ..SearchBudget::default()
        };
        let cell = lcd_core::largest_lcd_min_weight(field, ip, n, k, &budget)?;
        *found = cell.d.is_some();
        *d = cell.d.unwrap_or(0);
        Ok(())
    })
}
