//! Locating and reading group and table files.

use std::path::{Path, PathBuf};

use chartab::{parse_table, CharacterTable};
use classops::ClassList;
use permcore::{builtin, parse_grp, GroupFile, PermGroup};

use crate::error::CliError;

pub const DATA_DIR_VAR: &str = "GG_DATA_DIR";

/// `GG_DATA_DIR` when set, `data` otherwise.
pub fn default_data_dir() -> PathBuf {
    std::env::var_os(DATA_DIR_VAR)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("data"))
}

/// The path as given if it exists, else relative to `dir`, also trying
/// the extension `ext`.
pub fn resolve(spec: &str, dir: &Path, ext: &str) -> Option<PathBuf> {
    let direct = PathBuf::from(spec);
    let candidates = [
        direct.clone(),
        dir.join(spec),
        dir.join(format!("{spec}.{ext}")),
    ];
    candidates.into_iter().find(|p| p.is_file())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Clone, Debug)]
pub struct LoadedGroup {
    pub name: String,
    pub file: Option<GroupFile>,
    pub group: PermGroup,
}

impl LoadedGroup {
    pub fn label_of(&self, fingerprint: &str) -> Option<String> {
        self.file.as_ref()?.label_of(fingerprint).map(str::to_string)
    }

    /// Class index for a fingerprint or, when the file has a class map, a
    /// label.
    pub fn select(&self, list: &ClassList, selector: &str) -> Result<usize, CliError> {
        let by_label = || {
            let fp = self.file.as_ref()?.fingerprint_of(selector)?;
            list.by_fingerprint(fp)
        };
        list.by_fingerprint(selector)
            .or_else(by_label)
            .ok_or_else(|| CliError::UnknownClass {
                selector: selector.to_string(),
                p: list.p,
            })
    }
}

/// A `.grp` file (declared order enforced) or a built-in name such as
/// `Alt(7)` or `L2(8)`.
pub fn load_group(spec: &str, dir: &Path, seed: Option<u64>) -> Result<LoadedGroup, CliError> {
    let loaded = match resolve(spec, dir, "grp") {
        Some(path) => {
            let file = parse_grp(&read(&path)?)?;
            let group = file.to_group()?;
            let name = file.name.clone().unwrap_or_else(|| {
                path.file_stem().map_or_else(|| spec.to_string(), |s| s.to_string_lossy().into_owned())
            });
            LoadedGroup {
                name,
                file: Some(file),
                group,
            }
        }
        None => LoadedGroup {
            name: spec.to_string(),
            file: None,
            group: builtin::by_name(spec).ok_or_else(|| CliError::UnknownGroup(spec.to_string()))?,
        },
    };
    Ok(match seed {
        Some(s) => LoadedGroup {
            group: loaded.group.clone().with_seed(s),
            ..loaded
        },
        None => loaded,
    })
}

pub fn load_table(spec: &str, dir: &Path) -> Result<CharacterTable, CliError> {
    let path = resolve(spec, dir, "ctbl").ok_or_else(|| CliError::Io {
        path: PathBuf::from(spec),
        source: std::io::Error::from(std::io::ErrorKind::NotFound),
    })?;
    Ok(parse_table(&read(&path)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names_and_missing_files() {
        let dir = Path::new("/nonexistent");
        let g = load_group("Alt(6)", dir, Some(5)).unwrap();
        assert_eq!(g.group.order(), 360);
        assert_eq!(g.group.seed(), 5);
        assert!(g.file.is_none());
        assert!(matches!(load_group("nothing", dir, None), Err(CliError::UnknownGroup(_))));
        assert!(load_table("nothing.ctbl", dir).is_err());
    }
}
