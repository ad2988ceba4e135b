use std::time::Instant;

fn main() {
    for path in std::env::args().skip(1) {
        let text = std::fs::read_to_string(&path).unwrap();
        let t0 = Instant::now();
        match chartab::parse_table(&text) {
            Ok(t) => println!("{path}: {} classes ok in {:?}", t.num_classes(), t0.elapsed()),
            Err(e) => println!("{path}: {e} after {:?}", t0.elapsed()),
        }
    }
}
