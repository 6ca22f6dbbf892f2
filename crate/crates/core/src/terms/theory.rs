//! Named identities and quasi-identities, stored as source text so every
//! entry is produced by the parser.

use super::{parse_statement, Identity, Statement};

pub const NAMED: [(&str, &str); 17] = [
    ("AOL1", "(x~ v y~) ^ (<>x v z~) = ((x~ v y) ^ (<>x v z))~"),
    ("AOL2", "x = (x ^ y~) v (x ^ <>y)"),
    ("AOL3", "x = (x v y~) ^ (x v <>y)"),
    ("DIST", "x ^ (y v z) = (x ^ y) v (x ^ z)"),
    ("SDM", "(x ^ y)~ = x~ v y~"),
    ("SK", "x ^ <>y <= []x v y"),
    ("STAR", "(x ^ x')~ <= x~ v x'~"),
    ("DIAMOND_OM", "(x~ v (<>x ^ <>y)) ^ <>x <= <>y"),
    ("J", "x v y = ((x v y) ^ y~) v ((x v y) ^ <>y)"),
    ("PK", "x ^ x' <= y v y'"),
    ("BZ1", "x ^ x~ = 0"),
    ("BZ2", "x <= x~~"),
    ("BZ3", "x <= y => y~ <= x~"),
    ("BZ4", "x~' = x~~"),
    ("OM", "x <= y => y = (y ^ x') v x"),
    ("POM", "x <= y & x' ^ y = 0 => x = y"),
    ("ORTHO", "x ^ x' = 0"),
];

/// Five consequences of AOL1–3, SK and SDM used to derive distributivity.
/// The third is usually quoted with a trailing `=` and no right-hand side;
/// it is read here as the two-sided equation it abbreviates.
pub const FRECCIA: [(&str, &str); 5] = [
    ("freccia(i)", "a v []b = (a v b) ^ (<>a v []b)"),
    ("freccia(ii)", "a v (b ^ c) = a v ((<>b v []a) ^ (a v b) ^ c)"),
    ("freccia(iii)", "a v (b ^ c) = a v ((a v b) ^ c)"),
    ("freccia(iv)", "a ^ (b v c) = a ^ (b v (a ^ c))"),
    ("freccia(v)", "a ^ (b v c) = (a ^ b) v (a ^ c)"),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    NAMED.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    NAMED.iter().chain(FRECCIA.iter()).find(|(n, _)| n.eq_ignore_ascii_case(name)).map(|(_, s)| *s)
}

/// Looks up a named statement, case-insensitively.
pub fn get(name: &str) -> Option<Statement> {
    source(name).map(|s| parse_statement(s).expect("named statements parse"))
}

/// Looks up a named plain identity; `None` for quasi-identities.
pub fn identity(name: &str) -> Option<Identity> {
    get(name).and_then(|s| s.as_identity().cloned())
}
