//! The three worked examples that ship with the crate, as matrix files.

use crate::code::LinearCode;
use crate::text::parse_matrix;

/// The binary [8,4] extended Hamming code, `(Id | J - I)`.
pub const HAMMING8: &str = include_str!("../corpus/hamming8.code");
/// Two copies of [`HAMMING8`] on disjoint coordinates.
pub const HAMMING8_DOUBLED: &str = include_str!("../corpus/hamming8_doubled.code");
/// A binary self-dual [14,7] code with two blocks and a repeated column.
pub const LEN14: &str = include_str!("../corpus/len14.code");

pub const ALL: [(&str, &str); 3] = [
    ("hamming8.code", HAMMING8),
    ("hamming8_doubled.code", HAMMING8_DOUBLED),
    ("len14.code", LEN14),
];

fn load(text: &str) -> LinearCode {
    LinearCode::new(parse_matrix(text).expect("corpus parses")).expect("corpus has full rank")
}

pub fn hamming8() -> LinearCode {
    load(HAMMING8)
}

pub fn hamming8_doubled() -> LinearCode {
    load(HAMMING8_DOUBLED)
}

pub fn len14() -> LinearCode {
    load(LEN14)
}
