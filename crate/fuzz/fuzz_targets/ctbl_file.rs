#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = chartab::parse_unchecked(text) {
        if t.num_classes() <= 12 && t.validate().is_ok() {
            let again = chartab::parse_table(&t.to_text()).expect("serialized table parses");
            assert_eq!(again, t);
            for i in 0..t.num_classes() {
                chartab::class_mult_coeff_idx(&t, i, i, i).expect("validated tables give integer coefficients");
            }
        }
    }
});
