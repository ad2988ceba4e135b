//! Character tables: the `.ctbl` text format and its validation.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{Accumulator, Cyclotomic};
use crate::error::TableError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub label: String,
    pub size: BigInt,
    pub elt_order: u64,
    /// `(p, j)`: the `p`-th power of this class is class `j`.
    pub power_maps: Vec<(u64, usize)>,
    /// Column of the inverse class.
    pub inverse: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub order: BigInt,
    /// `z` in the literals of the source file is a primitive root of unity
    /// of this order.
    pub conductor: u64,
    pub classes: Vec<ClassInfo>,
    /// Rows are irreducible characters, columns follow `classes`.
    pub irr: Vec<Vec<Cyclotomic>>,
}

fn syntax(line: usize, msg: impl Into<String>) -> TableError {
    TableError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn invalid(msg: impl Into<String>) -> TableError {
    TableError::Invalid(msg.into())
}

struct RawClass {
    line: usize,
    label: String,
    size: BigInt,
    elt_order: u64,
    power_maps: Vec<(u64, String)>,
    inverse: Option<String>,
}

/// Parses and validates a table. Both orthogonality relations are checked
/// exactly.
pub fn parse_table(text: &str) -> Result<CharacterTable, TableError> {
    let t = parse_unchecked(text)?;
    t.validate()?;
    Ok(t)
}

/// Parses without the validation step. Structural problems such as unknown
/// labels are still errors.
pub fn parse_unchecked(text: &str) -> Result<CharacterTable, TableError> {
    let mut name = None;
    let mut order: Option<BigInt> = None;
    let mut conductor: Option<u64> = None;
    let mut raw: Vec<RawClass> = Vec::new();
    let mut rows: Vec<(usize, Vec<Cyclotomic>)> = Vec::new();
    for (i, full) in text.lines().enumerate() {
        let ln = i + 1;
        let line = full.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let key = words.next().expect("nonempty line");
        match key {
            "name" => {
                let rest = line[4..].trim();
                if rest.is_empty() {
                    return Err(syntax(ln, "empty name"));
                }
                name = Some(rest.to_string());
            }
            "order" => {
                let w = words.next().ok_or_else(|| syntax(ln, "missing order"))?;
                let o: BigInt = w.parse().map_err(|_| syntax(ln, format!("bad order {w:?}")))?;
                if !o.is_positive() || words.next().is_some() {
                    return Err(syntax(ln, "order must be one positive integer"));
                }
                order = Some(o);
            }
            "conductor" => {
                let w = words.next().ok_or_else(|| syntax(ln, "missing conductor"))?;
                let n: u64 = w.parse().map_err(|_| syntax(ln, format!("bad conductor {w:?}")))?;
                if n == 0 || n > u64::MAX / 2 || words.next().is_some() {
                    return Err(syntax(ln, "conductor out of range"));
                }
                conductor = Some(n);
            }
            "class" => {
                let label = words.next().ok_or_else(|| syntax(ln, "missing label"))?.to_string();
                let size: BigInt = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .filter(|s: &BigInt| s.is_positive())
                    .ok_or_else(|| syntax(ln, "bad class size"))?;
                let elt_order: u64 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .filter(|&o| o > 0)
                    .ok_or_else(|| syntax(ln, "bad element order"))?;
                let mut power_maps = Vec::new();
                let mut inverse = None;
                for w in words {
                    let (k, v) = w.split_once(':').ok_or_else(|| syntax(ln, format!("unknown token {w:?}")))?;
                    if v.is_empty() {
                        return Err(syntax(ln, format!("empty label in {w:?}")));
                    }
                    if k == "inv" {
                        inverse = Some(v.to_string());
                    } else {
                        let p: u64 = k
                            .parse()
                            .ok()
                            .filter(|&p| p > 1)
                            .ok_or_else(|| syntax(ln, format!("unknown token {w:?}")))?;
                        power_maps.push((p, v.to_string()));
                    }
                }
                raw.push(RawClass {
                    line: ln,
                    label,
                    size,
                    elt_order,
                    power_maps,
                    inverse,
                });
            }
            "char" => {
                let n = conductor.ok_or_else(|| syntax(ln, "conductor must precede characters"))?;
                let row = words
                    .map(|w| Cyclotomic::parse(w, n))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| syntax(ln, e.to_string()))?;
                rows.push((ln, row));
            }
            other => return Err(syntax(ln, format!("unknown keyword {other:?}"))),
        }
    }
    let name = name.ok_or_else(|| syntax(0, "missing name"))?;
    let order = order.ok_or_else(|| syntax(0, "missing order"))?;
    let conductor = conductor.ok_or_else(|| syntax(0, "missing conductor"))?;
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (j, c) in raw.iter().enumerate() {
        if index.insert(c.label.as_str(), j).is_some() {
            return Err(syntax(c.line, format!("duplicate label {:?}", c.label)));
        }
    }
    let lookup = |line: usize, l: &str| index.get(l).copied().ok_or_else(|| syntax(line, format!("unknown class {l:?}")));
    let mut classes = Vec::with_capacity(raw.len());
    let mut given_inverse = Vec::with_capacity(raw.len());
    for c in &raw {
        let power_maps = c
            .power_maps
            .iter()
            .map(|(p, l)| Ok((*p, lookup(c.line, l)?)))
            .collect::<Result<Vec<_>, TableError>>()?;
        given_inverse.push(match &c.inverse {
            Some(l) => Some(lookup(c.line, l)?),
            None => None,
        });
        classes.push(ClassInfo {
            label: c.label.clone(),
            size: c.size.clone(),
            elt_order: c.elt_order,
            power_maps,
            inverse: usize::MAX,
        });
    }
    for (ln, row) in &rows {
        if row.len() != classes.len() {
            return Err(syntax(*ln, format!("{} values for {} classes", row.len(), classes.len())));
        }
    }
    let irr: Vec<Vec<Cyclotomic>> = rows.into_iter().map(|(_, r)| r).collect();
    let mut t = CharacterTable {
        name,
        order,
        conductor,
        classes,
        irr,
    };
    t.resolve_inverses(&given_inverse)?;
    Ok(t)
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_index(&self, label: &str) -> Result<usize, TableError> {
        self.classes
            .iter()
            .position(|c| c.label == label)
            .ok_or_else(|| TableError::NoSuchClass(label.to_string()))
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.irr[chi][class]
    }

    /// A class is rational when every character is rational on it.
    pub fn is_rational_class(&self, j: usize) -> bool {
        self.irr.iter().all(|row| row[j].is_rational())
    }

    /// Column of `g^-1` is the one holding the complex conjugates; a
    /// declared inverse must agree with it.
    fn resolve_inverses(&mut self, given: &[Option<usize>]) -> Result<(), TableError> {
        let n = self.classes.len();
        if self.irr.is_empty() {
            for (j, c) in self.classes.iter_mut().enumerate() {
                c.inverse = given[j].unwrap_or(j);
            }
            return Ok(());
        }
        let mut by_column: HashMap<Vec<&Cyclotomic>, Vec<usize>> = HashMap::new();
        for j in 0..n {
            by_column.entry(self.irr.iter().map(|r| &r[j]).collect()).or_default().push(j);
        }
        for j in 0..n {
            let conj: Vec<Cyclotomic> = self.irr.iter().map(|r| r[j].conj()).collect();
            let key: Vec<&Cyclotomic> = conj.iter().collect();
            let inv = match by_column.get(&key).map(Vec::as_slice) {
                Some([i]) => *i,
                Some(_) => {
                    return Err(invalid(format!(
                        "inverse of class {} is ambiguous",
                        self.classes[j].label
                    )))
                }
                None => {
                    return Err(invalid(format!(
                        "no column conjugate to class {}",
                        self.classes[j].label
                    )))
                }
            };
            if let Some(g) = given[j] {
                if g != inv {
                    return Err(invalid(format!(
                        "declared inverse of {} disagrees with the character values",
                        self.classes[j].label
                    )));
                }
            }
            self.classes[j].inverse = inv;
        }
        Ok(())
    }

    /// Checks the table invariants: square, identity column first, class
    /// sizes, degrees, values in the right fields, power maps compatible
    /// with element orders, and both orthogonality relations.
    pub fn validate(&self) -> Result<(), TableError> {
        let n = self.classes.len();
        if n == 0 {
            return Err(invalid("no classes"));
        }
        if self.irr.len() != n {
            return Err(invalid(format!("{} characters for {} classes", self.irr.len(), n)));
        }
        let id = &self.classes[0];
        if !id.size.is_one() || id.elt_order != 1 {
            return Err(invalid("the first class must be the identity"));
        }
        let mut total = BigInt::zero();
        for c in &self.classes {
            if !self.order.is_multiple_of(&c.size) {
                return Err(invalid(format!("size of class {} does not divide the order", c.label)));
            }
            total += &c.size;
            for &(p, j) in &c.power_maps {
                let want = c.elt_order / c.elt_order.gcd(&p);
                if self.classes[j].elt_order != want {
                    return Err(invalid(format!("power map {p} of class {} has the wrong order", c.label)));
                }
            }
        }
        if total != self.order {
            return Err(invalid("class sizes do not add up to the group order"));
        }
        let mut degrees = BigInt::zero();
        for row in &self.irr {
            let d = row[0]
                .to_integer()
                .filter(|d| d.is_positive())
                .ok_or_else(|| invalid(format!("degree {} is not a positive integer", row[0])))?;
            degrees += &d * &d;
            for (j, v) in row.iter().enumerate() {
                if !self.classes[j].elt_order.is_multiple_of(v.conductor()) {
                    return Err(invalid(format!(
                        "value {v} on class {} lies outside Q(z_{})",
                        self.classes[j].label, self.classes[j].elt_order
                    )));
                }
            }
        }
        if degrees != self.order {
            return Err(invalid("sum of squared degrees differs from the group order"));
        }
        self.check_columns()?;
        self.check_rows()
    }

    fn check_columns(&self) -> Result<(), TableError> {
        let n = self.classes.len();
        let conj: Vec<Vec<Cyclotomic>> = self.irr.iter().map(|r| r.iter().map(Cyclotomic::conj).collect()).collect();
        let one = BigRational::one();
        for i in 0..n {
            let oi = self.classes[i].elt_order;
            for j in i..n {
                let oj = self.classes[j].elt_order;
                let mut acc = Accumulator::new(oi / oi.gcd(&oj) * oj);
                for (row, crow) in self.irr.iter().zip(&conj) {
                    acc.add_product(&row[i], &crow[j], &one);
                }
                let want = if i == j {
                    BigRational::new(self.order.clone(), self.classes[i].size.clone())
                } else {
                    BigRational::zero()
                };
                if acc.finish() != Cyclotomic::from_rational(want) {
                    return Err(TableError::Orthogonality {
                        kind: "columns",
                        a: self.classes[i].label.clone(),
                        b: self.classes[j].label.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Row sums split by element order: each part is stable under the
    /// Galois group, hence rational, and is computed in `Q(z_o)`.
    fn check_rows(&self) -> Result<(), TableError> {
        let mut by_order: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (j, c) in self.classes.iter().enumerate() {
            by_order.entry(c.elt_order).or_default().push(j);
        }
        let sizes: Vec<BigRational> = self.classes.iter().map(|c| BigRational::from_integer(c.size.clone())).collect();
        let conj: Vec<Vec<Cyclotomic>> = self.irr.iter().map(|r| r.iter().map(Cyclotomic::conj).collect()).collect();
        let name = |a: usize| format!("character {}", a + 1);
        for a in 0..self.irr.len() {
            for (b, conj_b) in conj.iter().enumerate().skip(a) {
                let mut total = BigRational::zero();
                for (&o, cols) in &by_order {
                    let mut acc = Accumulator::new(o);
                    for &j in cols {
                        acc.add_product(&self.irr[a][j], &conj_b[j], &sizes[j]);
                    }
                    match acc.finish().to_rational() {
                        Some(r) => total += r,
                        None => {
                            return Err(TableError::Orthogonality {
                                kind: "rows",
                                a: name(a),
                                b: name(b),
                            })
                        }
                    }
                }
                let want = if a == b {
                    BigRational::from_integer(self.order.clone())
                } else {
                    BigRational::zero()
                };
                if total != want {
                    return Err(TableError::Orthogonality {
                        kind: "rows",
                        a: name(a),
                        b: name(b),
                    });
                }
            }
        }
        Ok(())
    }

    /// Serializes in the `.ctbl` format with `z` of order `self.conductor`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "name {}", self.name);
        let _ = writeln!(out, "order {}", self.order);
        let _ = writeln!(out, "conductor {}", self.conductor);
        for c in &self.classes {
            let _ = write!(out, "class {} {} {}", c.label, c.size, c.elt_order);
            for (p, j) in &c.power_maps {
                let _ = write!(out, " {p}:{}", self.classes[*j].label);
            }
            let _ = writeln!(out, " inv:{}", self.classes[c.inverse].label);
        }
        for row in &self.irr {
            out.push_str("char");
            for v in row {
                let _ = write!(out, " {}", v.to_literal(self.conductor));
            }
            out.push('\n');
        }
        out
    }
}
