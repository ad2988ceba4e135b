//! Standard groups by generators. Orders are attached up front so chain
//! construction can stop early; the chain builder still checks them.

use crate::field::SmallField;
use crate::group::PermGroup;
use crate::perm::Perm;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Perm {
    let c: Vec<usize> = points.into_iter().collect();
    Perm::from_cycles(degree, &[c]).expect("valid cycle")
}

pub fn symmetric(n: usize) -> PermGroup {
    assert!(n >= 1);
    let gens = if n == 1 {
        vec![]
    } else {
        vec![cycle(n, 0..n), cycle(n, [0, 1])]
    };
    PermGroup::new(n, gens)
        .expect("generators of degree n")
        .with_known_order(factorial(n))
}

pub fn alternating(n: usize) -> PermGroup {
    assert!(n >= 1);
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(cycle(n, [0, 1, 2]));
    }
    if n >= 4 {
        if n % 2 == 1 {
            gens.push(cycle(n, 0..n));
        } else {
            gens.push(cycle(n, 1..n));
        }
    }
    let order = if n < 2 { 1 } else { factorial(n) / 2 };
    PermGroup::new(n, gens)
        .expect("generators of degree n")
        .with_known_order(order)
}

pub fn cyclic(n: usize) -> PermGroup {
    assert!(n >= 1);
    let gens = if n == 1 { vec![] } else { vec![cycle(n, 0..n)] };
    PermGroup::new(n, gens)
        .expect("generators of degree n")
        .with_known_order(n as u128)
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let n = a.degree() + b.degree();
    let shift = a.degree() as u32;
    let mut gens = Vec::new();
    for g in a.gens() {
        let mut img = g.images().to_vec();
        img.extend((0..b.degree() as u32).map(|i| i + shift));
        gens.push(Perm::from_images(img).expect("bijection"));
    }
    for g in b.gens() {
        let mut img: Vec<u32> = (0..shift).collect();
        img.extend(g.images().iter().map(|&i| i + shift));
        gens.push(Perm::from_images(img).expect("bijection"));
    }
    PermGroup::new(n, gens)
        .expect("same degree")
        .with_known_order(a.order() * b.order())
}

/// Signed permutations of `n` letters acting on `2n` points; point `i` and
/// point `i + n` form the pair `{+i, -i}`.
pub fn hyperoctahedral(n: usize) -> PermGroup {
    assert!(n >= 1);
    let d = 2 * n;
    let mut gens = vec![cycle(d, [0, n])];
    if n >= 2 {
        gens.push(Perm::from_cycles(d, &[(0..n).collect(), (n..d).collect()]).unwrap());
        gens.push(Perm::from_cycles(d, &[vec![0, 1], vec![n, n + 1]]).unwrap());
    }
    PermGroup::new(d, gens)
        .expect("degree 2n")
        .with_known_order((1u128 << n) * factorial(n))
}

/// Quaternion group of order 8 in its regular representation. Point
/// `4*s + u` stands for `(-1)^s` times the unit `u` of `1, i, j, k`.
pub fn quaternion8() -> PermGroup {
    // unit products: (sign, unit) of e_a * e_b
    const T: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let right_mult = |u: u32| {
        let img: Vec<u32> = (0..8u32)
            .map(|x| {
                let (s, a) = (x / 4, x % 4);
                let (t, c) = T[a as usize][u as usize];
                4 * ((s + t) % 2) + c
            })
            .collect();
        Perm::from_images(img).expect("regular action")
    };
    PermGroup::new(8, vec![right_mult(1), right_mult(2)])
        .expect("degree 8")
        .with_known_order(8)
}

/// Point index of the row vector `(x, y)` on the projective line: `x/y` for
/// finite points, `q` for infinity.
fn proj_point(f: &SmallField, x: usize, y: usize) -> usize {
    if y == 0 {
        f.order()
    } else {
        f.mul(x, f.inv(y))
    }
}

/// Generators of SL(2,q): lower and upper unitriangular matrices with entries
/// running over an additive basis `1, w, .., w^(k-1)`.
fn sl2_matrices(f: &SmallField) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for i in 0..f.degree() {
        let a = f.power_of_primitive(i);
        out.push([1, a, 0, 1]);
        out.push([1, 0, a, 1]);
    }
    out
}

fn row_times(f: &SmallField, x: usize, y: usize, m: &[usize; 4]) -> (usize, usize) {
    (
        f.add(f.mul(x, m[0]), f.mul(y, m[2])),
        f.add(f.mul(x, m[1]), f.mul(y, m[3])),
    )
}

/// PSL(2,q) on the `q + 1` points of the projective line. `None` when `q`
/// is not a prime power.
pub fn psl2(q: usize) -> Option<PermGroup> {
    let f = SmallField::new(q)?;
    let n = q + 1;
    let mut gens = Vec::new();
    for m in sl2_matrices(&f) {
        let img: Vec<u32> = (0..n)
            .map(|pt| {
                let (x, y) = if pt == q { (1, 0) } else { (pt, 1) };
                let (a, b) = row_times(&f, x, y, &m);
                proj_point(&f, a, b) as u32
            })
            .collect();
        gens.push(Perm::from_images(img).expect("projective action"));
    }
    let q = q as u128;
    let order = q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 };
    Some(
        PermGroup::new(n, gens)
            .expect("degree q+1")
            .with_known_order(order),
    )
}

/// SL(2,q) on the `q^2 - 1` nonzero row vectors; `(x, y)` is point `x*q + y - 1`.
pub fn sl2(q: usize) -> Option<PermGroup> {
    let f = SmallField::new(q)?;
    let n = q * q - 1;
    let mut gens = Vec::new();
    for m in sl2_matrices(&f) {
        let img: Vec<u32> = (1..=n)
            .map(|v| {
                let (a, b) = row_times(&f, v / q, v % q, &m);
                (a * q + b - 1) as u32
            })
            .collect();
        gens.push(Perm::from_images(img).expect("linear action"));
    }
    let q = q as u128;
    Some(
        PermGroup::new(n, gens)
            .expect("degree q^2-1")
            .with_known_order(q * (q * q - 1)),
    )
}

/// Looks up a builtin group by name: `Sym(n)`, `Alt(n)`, `C(n)`, `PSL(2,q)`,
/// `SL(2,q)`, `W(B,n)`, `Q8`. Names are case-insensitive, `L2(q)` is accepted
/// for `PSL(2,q)`.
pub fn by_name(name: &str) -> Option<PermGroup> {
    let s: String = name
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_lowercase();
    if s == "q8" {
        return Some(quaternion8());
    }
    let open = s.find('(')?;
    let inner = s.strip_suffix(')')?.get(open + 1..)?;
    let head = &s[..open];
    let args: Vec<&str> = inner.split(',').collect();
    let num = |t: &str| t.parse::<usize>().ok().filter(|&n| (1..=4096).contains(&n));
    match (head, args.as_slice()) {
        ("sym" | "s", [n]) => Some(symmetric(num(n).filter(|&n| n <= 34)?)),
        ("alt" | "a", [n]) => Some(alternating(num(n).filter(|&n| n <= 34)?)),
        ("c" | "cyclic", [n]) => Some(cyclic(num(n)?)),
        ("psl" | "l", ["2", q]) => psl2(num(q)?),
        ("l2", [q]) => psl2(num(q)?),
        ("sl", ["2", q]) => sl2(num(q).filter(|&q| q <= 64)?),
        ("w", ["b", n]) => Some(hyperoctahedral(num(n).filter(|&n| n <= 30)?)),
        _ => None,
    }
}
