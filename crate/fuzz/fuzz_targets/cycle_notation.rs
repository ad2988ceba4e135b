#![no_main]

use libfuzzer_sys::fuzz_target;
use permcore::Perm;

fuzz_target!(|data: &[u8]| {
    let Some((&d, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let degree = usize::from(d) + 1;
    if let Ok(p) = Perm::parse_cycles(degree, text) {
        let again = Perm::parse_cycles(degree, &p.to_string()).expect("printed form parses");
        assert_eq!(again, p);
    }
});
