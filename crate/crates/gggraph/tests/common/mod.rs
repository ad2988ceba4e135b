#![allow(dead_code)]

use classops::{classes_of_order_p, ClassList};
use gggraph::ClassUnion;
use permcore::{parse_grp, GroupFile, PermGroup};

pub fn data_file(name: &str) -> GroupFile {
    let path = format!("{}/../../data/{name}.grp", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_grp(&text).unwrap()
}

pub fn data_group(name: &str) -> (GroupFile, PermGroup) {
    let f = data_file(name);
    let g = f.to_group().unwrap();
    (f, g)
}

/// Class list and index of the class with the given label.
pub fn labelled(name: &str, p: u64, label: &str) -> (ClassList, usize) {
    let (f, g) = data_group(name);
    let list = classes_of_order_p(&g, p).unwrap();
    let fp = f.fingerprint_of(label).unwrap_or_else(|| panic!("no label {label}"));
    let i = list.by_fingerprint(fp).unwrap_or_else(|| panic!("no class {fp}"));
    (list, i)
}

pub fn single(name: &str, p: u64, label: &str) -> ClassUnion {
    let (list, i) = labelled(name, p, label);
    ClassUnion::single(list, i).unwrap()
}

pub fn rational(name: &str, p: u64, label: &str) -> ClassUnion {
    let (list, i) = labelled(name, p, label);
    ClassUnion::rational(list, i).unwrap()
}
