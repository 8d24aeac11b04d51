//! Named fixture structures shipped in `fixtures/`.

use crate::format::{parse_document, StructureDocument};

pub const T1: &str = include_str!("../../../fixtures/t1.osg");
pub const SL2: &str = include_str!("../../../fixtures/sl2.osg");
pub const LZ2: &str = include_str!("../../../fixtures/lz2.osg");
pub const RZ2: &str = include_str!("../../../fixtures/rz2.osg");
pub const N2: &str = include_str!("../../../fixtures/n2.osg");
pub const C2: &str = include_str!("../../../fixtures/c2.osg");
pub const PX3: &str = include_str!("../../../fixtures/px3.osg");

/// `(name, file contents)` for every fixture.
pub const ALL: [(&str, &str); 7] =
    [("t1", T1), ("sl2", SL2), ("lz2", LZ2), ("rz2", RZ2), ("n2", N2), ("c2", C2), ("px3", PX3)];

/// Parses a fixture by name (`t1`, `sl2`, `lz2`, `rz2`, `n2`, `c2`, `px3`).
pub fn load(name: &str) -> Option<StructureDocument> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, text)| parse_document(text).expect("shipped fixtures parse"))
}
