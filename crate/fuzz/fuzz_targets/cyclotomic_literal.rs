#![no_main]

use chartab::Cyclotomic;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let n = u64::from(n) + 1;
    if let Ok(x) = Cyclotomic::parse(text, n) {
        assert_eq!(n % x.conductor(), 0);
        assert_eq!(Cyclotomic::parse(&x.to_literal(n), n).unwrap(), x);
        assert_eq!(x.conj().conj(), x);
    }
});
