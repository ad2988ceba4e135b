#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = permcore::parse_grp(text) {
        let again = permcore::parse_grp(&f.to_text()).expect("serialized file parses");
        assert_eq!(again, f);
        // keep the order gate cheap
        if f.degree <= 16 {
            let _ = f.to_group();
        }
    }
});
