//! Quiver and groupoid files shipped with the binary. A name that is not an
//! existing path resolves to the bundled file of that name.

use std::path::Path;

use crate::error::{Error, Result};

pub const FILES: [(&str, &str); 6] = [
    ("a2.json", include_str!("../../data/a2.json")),
    ("a3-linear.json", include_str!("../../data/a3-linear.json")),
    ("a3-source.json", include_str!("../../data/a3-source.json")),
    ("d4.json", include_str!("../../data/d4.json")),
    ("finite-sets-5.json", include_str!("../../data/finite-sets-5.json")),
    ("discrete-3.json", include_str!("../../data/discrete-3.json")),
];

pub fn bundled(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Reads `name` from disk when it exists, otherwise from the bundle.
pub fn read(name: &str) -> Result<String> {
    if Path::new(name).exists() {
        return Ok(std::fs::read_to_string(name)?);
    }
    bundled(name)
        .map(str::to_string)
        .ok_or_else(|| Error::Input(format!("{name}: no such file and no bundled file of that name")))
}
