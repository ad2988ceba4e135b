//! One line per acceptance criterion. Clauses whose stated value disagrees
//! with the mathematics print FAIL with the computed value; the run then
//! checks the value that was verified independently instead, so the binary
//! still fails on any regression.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chartab::brute::BRUTE_BOUND;
use chartab::{all_classes, brute_force_coeff, class_mult_coeff, class_mult_coeff_idx, edge_exists, match_table_to_group, parse_table, Cyclotomic};
use classops::{centralizer, classes_of_order_p, prime_divisors, ClassList};
use gggraph::{
    analyze, analyze_with, compare_with_oracle, lex_product_check, strongly_p_embedded, ClassUnion, ComponentReport,
    LexOutcome, SpeVerdict, Strategy, Verdict, ORACLE_BOUND,
};
use num_bigint::BigInt;
use permcore::builtin::{alternating, hyperoctahedral, psl2, sl2, symmetric};
use permcore::{parse_grp, GroupFile, Perm, PermGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

#[derive(Default)]
struct Tally {
    failed_hard: Vec<String>,
}

impl Tally {
    /// `ok` decides the printed status; `hard` failures make the run fail.
    fn line(&mut self, id: &str, ok: bool, hard: bool, text: &str) {
        println!("{} criterion {id}: {text}", if ok { "PASS" } else { "FAIL" });
        if !ok && hard {
            self.failed_hard.push(id.to_string());
        }
    }

    fn check(&mut self, id: &str, ok: bool, text: &str) {
        self.line(id, ok, true, text);
    }

    /// A clause whose stated value is known to be wrong: printed against
    /// the stated value, enforced against the verified one.
    fn conflict(&mut self, id: &str, stated_ok: bool, verified_ok: bool, text: &str) {
        self.line(id, stated_ok, false, text);
        if !verified_ok {
            self.failed_hard.push(format!("{id} (verified value)"));
        }
    }

    fn skip(&mut self, id: &str, text: &str) {
        println!("SKIP criterion {id}: {text} (data unavailable)");
    }
}

fn load(name: &str) -> Option<(GroupFile, PermGroup)> {
    let text = std::fs::read_to_string(data(name)).ok()?;
    let f = parse_grp(&text).expect("shipped group file parses");
    let g = f.to_group().expect("declared order holds");
    Some((f, g))
}

fn class(f: &GroupFile, g: &PermGroup, p: u64, label: &str) -> (ClassList, usize) {
    let list = classes_of_order_p(g, p).unwrap();
    let fp = f.fingerprint_of(label).unwrap();
    let i = list.by_fingerprint(fp).unwrap();
    (list, i)
}

fn single(name: &str, p: u64, label: &str) -> Option<ComponentReport> {
    let (f, g) = load(name)?;
    let (list, i) = class(&f, &g, p, label);
    Some(analyze(&ClassUnion::single(list, i).unwrap()).unwrap())
}

fn triple(r: &ComponentReport) -> (u128, u128, u128) {
    (r.lambda_size, r.delta.order, r.stabilizer_order)
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn criterion_1(t: &mut Tally) {
    let start = Instant::now();
    let Some(r) = single("m11.grp", 3, "3A") else {
        return t.skip("1", "M11 3A");
    };
    let el = start.elapsed();
    t.conflict(
        "1",
        r.lambda_size == 6,
        r.lambda_size == 8,
        &format!(
            "M11 3A lambda_size = {} (stated 6; the C_p x C_p classification gives p^2 - 1 = 8 for M11 3A, confirmed by explicit enumeration)",
            r.lambda_size
        ),
    );
    t.check(
        "1",
        r.delta.order == 9 && r.delta.is_elementary_abelian && r.stabilizer_order == 144 && r.connected == Verdict::Disconnected && el < Duration::from_secs(10),
        &format!("M11 3A delta 3^2, stabilizer {}, disconnected, {}", r.stabilizer_order, secs(el)),
    );
}

fn criterion_2(t: &mut Tally) {
    let start = Instant::now();
    let Some((f, g)) = load("j2.grp") else {
        return t.skip("2", "J2 5C");
    };
    let (list, i) = class(&f, &g, 5, "5C");
    let r = analyze(&ClassUnion::single(list.clone(), i).unwrap()).unwrap();
    let rr = analyze(&ClassUnion::rational(list, i).unwrap()).unwrap();
    let el = start.elapsed();
    t.check(
        "2",
        triple(&r) == (6, 25, 300) && r.delta.is_elementary_abelian && rr.lambda_size == 12 && el < Duration::from_secs(120),
        &format!(
            "J2 5C (lambda, delta, stabilizer) = {:?}, rational closure component {}, {}",
            triple(&r),
            rr.lambda_size,
            secs(el)
        ),
    );
}

fn criterion_3(t: &mut Tally) {
    let start = Instant::now();
    let (Some(a), Some(c)) = (single("hs.grp", 5, "5A"), single("hs.grp", 5, "5C")) else {
        return t.skip("3", "HS");
    };
    let el = start.elapsed();
    t.check(
        "3",
        a.lambda_size == 4 && a.delta.order == 5 && triple(&c) == (20, 25, 500) && el < Duration::from_secs(300),
        &format!("HS 5A lambda {} delta {}; 5C {:?}; {}", a.lambda_size, a.delta.order, triple(&c), secs(el)),
    );
}

fn criterion_4(t: &mut Tally) {
    let Some(r) = single("j2.grp", 3, "3A") else {
        return t.skip("4", "J2 3A");
    };
    t.check(
        "4",
        r.lambda_size == 2 && r.delta.order == 3,
        &format!("J2 3A lambda {} delta {}", r.lambda_size, r.delta.order),
    );
}

fn criterion_5(t: &mut Tally) {
    let spe = |g: &PermGroup, p| strongly_p_embedded(classes_of_order_p(g, p).unwrap()).unwrap();
    let m11 = load("m11.grp").map(|(_, g)| spe(&g, 3));
    let got = [
        m11,
        Some(spe(&alternating(5), 2)),
        Some(spe(&alternating(6), 3)),
        Some(spe(&alternating(7), 3)),
    ];
    let want = [SpeVerdict::True, SpeVerdict::True, SpeVerdict::True, SpeVerdict::False];
    let shown: Vec<&str> = got.iter().map(|v| v.map_or("skipped", SpeVerdict::as_str)).collect();
    t.check(
        "5",
        got.iter().zip(want).all(|(g, w)| *g == Some(w)),
        &format!("strongly p-embedded (M11,3) (Alt5,2) (Alt6,3) (Alt7,3) = {shown:?}"),
    );
}

fn criterion_6(t: &mut Tally) {
    let start = Instant::now();
    let (Some(c6), Some(d6)) = (single("3a6.grp", 3, "3c"), single("3a6.grp", 3, "3d")) else {
        return t.skip("6", "3.Alt(6)");
    };
    t.check(
        "6",
        triple(&c6) == (6, 9, 54) && triple(&d6) == (6, 9, 54),
        &format!("3.Alt(6) 3c {:?}, 3d {:?}", triple(&c6), triple(&d6)),
    );
    let (Some(c7), Some(d7)) = (single("3a7.grp", 3, "3c"), single("3a7.grp", 3, "3d")) else {
        return t.skip("6", "3.Alt(7)");
    };
    let el = start.elapsed();
    t.check(
        "6",
        triple(&c7) == (6, 9, 216) && el < Duration::from_secs(120),
        &format!("3.Alt(7) 3c {:?}, {}", triple(&c7), secs(el)),
    );
    t.conflict(
        "6",
        d7.stabilizer_order == 216,
        triple(&d7) == (6, 9, 54),
        &format!(
            "3.Alt(7) 3d stabilizer {} (stated 216 for both classes; 3d has centralizer order 9 and its stabilizer is 3^2.Sym(3), confirmed by explicit enumeration)",
            d7.stabilizer_order
        ),
    );
}

fn criterion_7(t: &mut Tally) {
    let start = Instant::now();
    match single("22l34.grp", 2, "2d") {
        Some(r) => t.check(
            "7",
            triple(&r) == (3, 4, 768),
            &format!("2^2.L3(4) 2d {:?}", triple(&r)),
        ),
        None => t.skip("7", "2^2.L3(4)"),
    }
    match single("2s62.grp", 2, "2c") {
        Some(r) => t.check(
            "7",
            triple(&r) == (56, 128, 21504) && start.elapsed() < Duration::from_secs(600),
            &format!("2.S6(2) 2c {:?}, {}", triple(&r), secs(start.elapsed())),
        ),
        None => t.skip("7", "2.S6(2)"),
    }
}

fn criterion_8(t: &mut Tally) {
    let table = |name: &str| std::fs::read_to_string(data(name)).ok().map(|s| parse_table(&s).unwrap());
    for (file, class, want) in [
        ("2m12.ctbl", "2b", 24u64),
        ("2m12.ctbl", "2c", 6),
        ("2j2.ctbl", "2b", 10),
        ("2hs.ctbl", "2b", 80),
        ("2hs.ctbl", "2c", 30),
        ("j4.ctbl", "2A", 112266),
    ] {
        match table(file) {
            Some(tb) => {
                let n = class_mult_coeff(&tb, class, class, class).unwrap();
                t.check("8", n == BigInt::from(want), &format!("{} n({class}) = {n}", tb.name));
            }
            None => t.skip("8", file),
        }
    }
    match table("bm.ctbl") {
        Some(tb) => {
            let e = edge_exists(&tb, "2A").unwrap();
            t.check("8", !e, &format!("BM 2A edge_exists = {e}"));
        }
        None => t.skip("8", "bm.ctbl"),
    }
}

fn oracle_corpus() -> Vec<(String, PermGroup)> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push((format!("Alt({n})"), alternating(n)));
        out.push((format!("Sym({n})"), symmetric(n)));
    }
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13] {
        out.push((format!("L2({q})"), psl2(q).unwrap()));
    }
    out.push(("SL(2,5)".into(), sl2(5).unwrap()));
    if let Some((_, g)) = load("m11.grp") {
        out.push(("M11".into(), g));
    }
    out
}

fn criterion_9(t: &mut Tally) {
    let start = Instant::now();
    let (mut checked, mut mismatches) = (0, Vec::new());
    for (name, g) in oracle_corpus() {
        for p in prime_divisors(g.order()) {
            let list = classes_of_order_p(&g, p).unwrap();
            let mut unions = Vec::new();
            for i in 0..list.len() {
                unions.push(ClassUnion::single(list.clone(), i).unwrap());
                unions.push(ClassUnion::rational(list.clone(), i).unwrap());
            }
            unions.push(ClassUnion::all(list.clone()).unwrap());
            for cu in unions.iter().filter(|cu| cu.size() <= ORACLE_BOUND) {
                checked += 1;
                if !compare_with_oracle(cu, ORACLE_BOUND).unwrap().agrees() {
                    mismatches.push(format!("{name} p={p} {:?}", cu.seed_indices()));
                }
            }
        }
    }
    let el = start.elapsed();
    t.check(
        "9",
        mismatches.is_empty() && el < Duration::from_secs(900),
        &format!("{checked} class unions against explicit graphs, mismatches {mismatches:?}, {}", secs(el)),
    );
}

fn criterion_10(t: &mut Tally) {
    let (mut checked, mut mismatches) = (0, 0);
    for (file, g) in [
        ("sym3.ctbl", symmetric(3)),
        ("a5.ctbl", alternating(5)),
        ("s5.ctbl", symmetric(5)),
        ("l27.ctbl", psl2(7).unwrap()),
    ] {
        let tb = parse_table(&std::fs::read_to_string(data(file)).unwrap()).unwrap();
        let classes = all_classes(&g).unwrap();
        let m = match_table_to_group(&tb, &classes).unwrap();
        let n = tb.num_classes();
        for a in (0..n).filter(|&a| classes[m[a]].size() <= 500) {
            for b in 0..n {
                for c in 0..n {
                    let want = brute_force_coeff(&g, &classes[m[a]].rep, &classes[m[b]].rep, &classes[m[c]].rep, BRUTE_BOUND).unwrap();
                    checked += 1;
                    if class_mult_coeff_idx(&tb, a, b, c).unwrap() != BigInt::from(want) {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    t.check(
        "10",
        mismatches == 0 && checked > 0,
        &format!("{checked} coefficient triples against direct counts, mismatches {mismatches}"),
    );
}

fn criterion_11(t: &mut Tally) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    // chain order against the number of elements reached by closure
    let orders_ok = [alternating(6), symmetric(5), psl2(8).unwrap(), sl2(5).unwrap(), hyperoctahedral(4)]
        .iter()
        .all(|g| g.elements().len() as u128 == g.order());
    t.check("11", orders_ok, "group orders from the stabilizer chain match element counts");

    let mut cent_ok = true;
    for g in [symmetric(6), psl2(11).unwrap(), alternating(7)] {
        let elements = g.elements();
        for _ in 0..10 {
            let x = g.random_element(&mut rng);
            let count = elements.iter().filter(|y| y.commutes_with(&x)).count() as u128;
            cent_ok &= centralizer(&g, &x).unwrap().order() == count;
        }
    }
    t.check("11", cent_ok, "centralizer orders match commuting-element counts");

    let mut shortcut_ok = true;
    let mut compared = 0;
    for g in [psl2(7).unwrap(), psl2(11).unwrap(), psl2(13).unwrap(), alternating(7), sl2(5).unwrap(), symmetric(6)] {
        for p in prime_divisors(g.order()) {
            let list = classes_of_order_p(&g, p).unwrap();
            for i in 0..list.len() {
                let cu = ClassUnion::single(list.clone(), i).unwrap();
                let a = analyze(&cu).unwrap();
                if a.method != gggraph::Method::CyclicSylowShortcut {
                    continue;
                }
                let b = analyze_with(&cu, Strategy::Stabilizer).unwrap();
                compared += 1;
                shortcut_ok &= (a.lambda_size, a.stabilizer_order, a.connected) == (b.lambda_size, b.stabilizer_order, b.connected);
            }
        }
    }
    t.check(
        "11",
        shortcut_ok && compared > 0,
        &format!("cyclic Sylow shortcut agrees with the stabilizer search on {compared} classes"),
    );

    let mut holds = 0;
    let mut fails = 0;
    for n in 2..=5 {
        let g = hyperoctahedral(n);
        let minus = Perm::from_cycles(2 * n, &(0..n).map(|i| vec![i, i + n]).collect::<Vec<_>>()).unwrap();
        let z = g.subgroup(vec![minus.clone()]);
        for c in classes_of_order_p(&g, 2).unwrap().classes {
            if c.rep == minus {
                continue;
            }
            match lex_product_check(&g, &z, &c.rep).unwrap() {
                LexOutcome::Holds => holds += 1,
                LexOutcome::Fails => fails += 1,
                LexOutcome::HypothesisFailed => {}
            }
        }
    }
    t.check(
        "11",
        fails == 0 && holds > 0,
        &format!("lexicographic product structure over signed permutation groups: {holds} hold, {fails} fail"),
    );

    let mut cyc_ok = true;
    for p in [2u64, 3, 5, 7, 11, 13] {
        let mut s = Cyclotomic::zero();
        for k in 1..p {
            s = &s + &Cyclotomic::zeta(p, k as i64);
        }
        cyc_ok &= s == Cyclotomic::from_int(-1);
    }
    for n in [5u64, 8, 12, 15, 21] {
        cyc_ok &= Cyclotomic::zeta(n, n as i64) == Cyclotomic::one();
        for k in 0..n as i64 {
            let x = &Cyclotomic::zeta(n, k) + &Cyclotomic::from_int(k);
            let y = &Cyclotomic::zeta(n, 2 * k + 1) - &Cyclotomic::zeta(n, 3);
            cyc_ok &= (&x * &y).conj() == &x.conj() * &y.conj();
        }
    }
    t.check("11", cyc_ok, "cyclotomic identities: conj(xy) = conj(x)conj(y), z_n^n = 1, prime root sums");
}

fn main() -> ExitCode {
    let mut t = Tally::default();
    criterion_1(&mut t);
    criterion_2(&mut t);
    criterion_3(&mut t);
    criterion_4(&mut t);
    criterion_5(&mut t);
    criterion_6(&mut t);
    criterion_7(&mut t);
    criterion_8(&mut t);
    criterion_9(&mut t);
    criterion_10(&mut t);
    criterion_11(&mut t);
    if t.failed_hard.is_empty() {
        println!("acceptance: all verified values hold");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failures in {:?}", t.failed_hard);
        ExitCode::FAILURE
    }
}
