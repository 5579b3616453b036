//! Line-oriented text format for codes.
//!
//! ```text
//! field 4
//! inner hermitian
//! size 3 2
//! row 1 0 w
//! row 0 1 W
//! ```
//!
//! `#` starts a comment; blank lines are ignored. The writer emits the
//! canonical generator with no comments, so `write(parse(write(c)))` is
//! byte-identical to `write(c)`.

use std::fmt::Write as _;

use crate::code::{InnerProduct, LinearCode};
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::matrix::GfMatrix;

pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut header = |key: &str| -> Result<(usize, Vec<&str>)> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("missing '{key}' line")))?;
        let mut words = line.split_whitespace();
        if words.next() != Some(key) {
            return Err(Error::parse(no, format!("expected '{key}' line")));
        }
        Ok((no, words.collect()))
    };

    let (no, args) = header("field")?;
    let field = match args.as_slice() {
        [q] => q
            .parse::<u32>()
            .map_err(|_| Error::parse(no, format!("bad field order '{q}'")))
            .and_then(|q| Field::from_order(q).map_err(|e| Error::parse(no, e.to_string())))?,
        _ => return Err(Error::parse(no, "expected 'field <q>'")),
    };

    let (no, args) = header("inner")?;
    let ip = match args.as_slice() {
        [name] => InnerProduct::from_name(name).map_err(|e| Error::parse(no, e.to_string()))?,
        _ => return Err(Error::parse(no, "expected 'inner <euclidean|hermitian>'")),
    };
    ip.check_field(field)
        .map_err(|e| Error::parse(no, e.to_string()))?;

    let (no, args) = header("size")?;
    let (n, k) = match args.as_slice() {
        [n, k] => {
            let n: usize = n
                .parse()
                .map_err(|_| Error::parse(no, format!("bad length '{n}'")))?;
            let k: usize = k
                .parse()
                .map_err(|_| Error::parse(no, format!("bad dimension '{k}'")))?;
            (n, k)
        }
        _ => return Err(Error::parse(no, "expected 'size <n> <k>'")),
    };
    if n == 0 {
        return Err(Error::parse(no, "length must be at least 1"));
    }
    if k > n {
        return Err(Error::parse(
            no,
            format!("dimension {k} exceeds length {n}"),
        ));
    }

    let mut data = Vec::with_capacity(n * k);
    let mut last = no;
    for row in 0..k {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(last, format!("expected {k} rows, found {row}")))?;
        last = no;
        let mut words = line.split_whitespace();
        if words.next() != Some("row") {
            return Err(Error::parse(no, "expected 'row' line"));
        }
        let before = data.len();
        for w in words {
            let mut chars = w.chars();
            let sym = match (chars.next(), chars.next()) {
                (Some(c), None) => field.parse_symbol(c),
                _ => None,
            };
            let v =
                sym.ok_or_else(|| Error::parse(no, format!("'{w}' is not a symbol of {field}")))?;
            data.push(v);
        }
        if data.len() - before != n {
            return Err(Error::parse(
                no,
                format!("row has {} symbols, expected {n}", data.len() - before),
            ));
        }
    }
    if let Some((no, _)) = lines.next() {
        return Err(Error::parse(no, format!("more than {k} rows")));
    }

    let gen = GfMatrix::new(field, k, n, data)?;
    let rank = gen.rank();
    if rank < k {
        return Err(Error::parse(
            last,
            format!("generator rows have rank {rank} < {k}"),
        ));
    }
    LinearCode::new(&gen, ip)
}

pub fn write_code(c: &LinearCode) -> String {
    let mut out = String::new();
    let f = c.field();
    writeln!(out, "field {}", f.order()).unwrap();
    writeln!(out, "inner {}", c.inner_product()).unwrap();
    writeln!(out, "size {} {}", c.n(), c.k()).unwrap();
    for row in c.generator().row_iter() {
        out.push_str("row");
        for &v in row {
            out.push(' ');
            out.push(f.symbol(v));
        }
        out.push('\n');
    }
    out
}

/// Generator rows in the file alphabet, one string per row (`"1 0 w"`).
pub fn symbol_rows(m: &GfMatrix) -> Vec<String> {
    let f = m.field();
    m.row_iter()
        .map(|r| {
            r.iter()
                .map(|&v| f.symbol(v).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

impl std::str::FromStr for LinearCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_code(s)
    }
}
