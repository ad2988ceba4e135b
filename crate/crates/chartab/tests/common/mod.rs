use std::path::PathBuf;

use chartab::{parse_table, CharacterTable};

pub fn data_file(name: &str) -> PathBuf {
    let dir = std::env::var_os("GG_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data"));
    dir.join(name)
}

/// `None` when the file is not present.
pub fn table(name: &str) -> Option<CharacterTable> {
    let text = std::fs::read_to_string(data_file(name)).ok()?;
    Some(parse_table(&text).unwrap_or_else(|e| panic!("{name}: {e}")))
}
