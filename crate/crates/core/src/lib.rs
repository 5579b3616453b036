//! Linear codes over GF(2), GF(3) and GF(4) with a focus on linear
//! complementary dual (LCD) codes: Gram-matrix and definitional LCD tests,
//! constructive LCD subcodes and supercodes, and exhaustive tables of the
//! largest minimum weight of LCD `[n,k]` codes.

pub mod cli;
pub mod code;
pub mod error;
pub mod format;
pub mod galois;
pub mod lcd;
pub mod matrix;
pub mod search;

pub use code::{inner, is_subcode, Codeword, InnerProduct, LinearCode};
pub use error::{Error, Result};
pub use format::{parse_code, write_code};
pub use galois::{Field, FieldElement};
pub use lcd::{
    ascend, ascend_step, ascend_via_duality, descend, descent_chain, gram, is_lcd,
    is_lcd_by_intersection, is_self_orthogonal, is_self_orthogonal_by_weights, AscentStep, Chain,
    DescentStep,
};
pub use matrix::GfMatrix;
pub use search::{build_dtable, enumerate_codes, largest_lcd_min_weight, DTable, SearchBudget};
