//! The `.grp` text format: `degree N`, optional `order M` and `name S`,
//! one `gen` line per generator in 1-based cycle notation, optional
//! `classmap FINGERPRINT LABEL` lines. `#` starts a comment.

use crate::error::PermError;
use crate::group::PermGroup;
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub name: Option<String>,
    pub degree: usize,
    pub order: Option<u128>,
    pub gens: Vec<Perm>,
    /// `(fingerprint, label)` pairs.
    pub classmap: Vec<(String, String)>,
}

fn err(line: usize, msg: impl Into<String>) -> PermError {
    PermError::GroupFile {
        line,
        msg: msg.into(),
    }
}

pub fn parse_grp(text: &str) -> Result<GroupFile, PermError> {
    let mut name = None;
    let mut degree: Option<usize> = None;
    let mut order = None;
    let mut gen_lines: Vec<(usize, &str)> = Vec::new();
    let mut classmap = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "name" => {
                if rest.is_empty() {
                    return Err(err(ln, "empty name"));
                }
                name = Some(rest.to_string());
            }
            "degree" => {
                let d: usize = rest.parse().map_err(|_| err(ln, format!("bad degree {rest:?}")))?;
                if d == 0 {
                    return Err(err(ln, "degree must be positive"));
                }
                if degree.replace(d).is_some() {
                    return Err(err(ln, "degree given twice"));
                }
            }
            "order" => {
                let o: u128 = rest.parse().map_err(|_| err(ln, format!("bad order {rest:?}")))?;
                if o == 0 {
                    return Err(err(ln, "order must be positive"));
                }
                order = Some(o);
            }
            "gen" => gen_lines.push((ln, rest)),
            "classmap" => {
                let mut parts = rest.split_whitespace();
                match (parts.next(), parts.next(), parts.next()) {
                    (Some(fp), Some(label), None) => classmap.push((fp.to_string(), label.to_string())),
                    _ => return Err(err(ln, "classmap needs a fingerprint and a label")),
                }
            }
            other => return Err(err(ln, format!("unknown keyword {other:?}"))),
        }
    }
    let degree = degree.ok_or_else(|| err(0, "missing degree line"))?;
    let mut gens = Vec::with_capacity(gen_lines.len());
    for (ln, s) in gen_lines {
        gens.push(Perm::parse_cycles(degree, s).map_err(|e| err(ln, e.to_string()))?);
    }
    Ok(GroupFile {
        name,
        degree,
        order,
        gens,
        classmap,
    })
}

impl GroupFile {
    /// The group, rejected when a declared order disagrees with the order
    /// computed from the generators.
    pub fn to_group(&self) -> Result<PermGroup, PermError> {
        let g = PermGroup::new(self.degree, self.gens.clone())?;
        let computed = g.order();
        match self.order {
            Some(declared) if declared != computed => Err(PermError::OrderMismatch { declared, computed }),
            _ => Ok(g),
        }
    }

    pub fn label_of(&self, fingerprint: &str) -> Option<&str> {
        self.classmap
            .iter()
            .find(|(f, _)| f == fingerprint)
            .map(|(_, l)| l.as_str())
    }

    pub fn fingerprint_of(&self, label: &str) -> Option<&str> {
        self.classmap
            .iter()
            .find(|(_, l)| l == label)
            .map(|(f, _)| f.as_str())
    }

    /// Serializes back to the text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            out.push_str(&format!("name {n}\n"));
        }
        out.push_str(&format!("degree {}\n", self.degree));
        if let Some(o) = self.order {
            out.push_str(&format!("order {o}\n"));
        }
        for g in &self.gens {
            out.push_str(&format!("gen {g}\n"));
        }
        for (f, l) in &self.classmap {
            out.push_str(&format!("classmap {f} {l}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S4: &str = "# symmetric group on 4 points\nname S4\ndegree 4\norder 24\ngen (1 2 3 4)\ngen (1 2)\nclassmap o2s6a 2B\n";

    #[test]
    fn parse_and_gate() {
        let f = parse_grp(S4).unwrap();
        assert_eq!(f.degree, 4);
        assert_eq!(f.gens.len(), 2);
        assert_eq!(f.to_group().unwrap().order(), 24);
        assert_eq!(f.label_of("o2s6a"), Some("2B"));
        assert_eq!(f.fingerprint_of("2B"), Some("o2s6a"));
        let bad = parse_grp(&S4.replace("order 24", "order 12")).unwrap();
        assert!(matches!(bad.to_group(), Err(PermError::OrderMismatch { .. })));
    }

    #[test]
    fn roundtrip() {
        let f = parse_grp(S4).unwrap();
        assert_eq!(parse_grp(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn errors() {
        assert!(parse_grp("gen (1 2)").is_err());
        assert!(parse_grp("degree 3\ngen (1 4)").is_err());
        assert!(parse_grp("degree 3\nfoo 1").is_err());
        assert!(parse_grp("degree x").is_err());
        assert!(parse_grp("degree 3\nclassmap a").is_err());
    }
}
