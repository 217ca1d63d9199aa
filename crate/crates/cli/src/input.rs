use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use baxter::planar::parse_map;
use baxter::{BipolarOrientation, Permutation};

pub enum Object {
    Perm(Permutation),
    Map(BipolarOrientation),
}

/// Joins the words of a permutation given either quoted or unquoted.
pub fn perm(words: &[String]) -> Result<Permutation> {
    let text = words.join(" ");
    text.parse().with_context(|| format!("cannot read `{text}` as a permutation"))
}

pub fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Reads and validates an orientation file.
pub fn map(path: &Path) -> Result<BipolarOrientation> {
    let o = parse_map(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))?;
    let violations = o.validate();
    if let Some(v) = violations.first() {
        anyhow::bail!("{} is not a plane bipolar orientation: {v}", path.display());
    }
    Ok(o)
}

/// A single argument naming an existing file (or `-`) is a map; anything
/// else is a permutation.
pub fn object(words: &[String]) -> Result<Object> {
    if let [one] = words {
        let path = Path::new(one);
        if one == "-" || path.is_file() {
            return map(path).map(Object::Map);
        }
    }
    perm(words).map(Object::Perm)
}
