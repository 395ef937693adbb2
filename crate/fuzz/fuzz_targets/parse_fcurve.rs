#![no_main]

use hurwitz_hodge::m0b::FCurve;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = FCurve::parse(s) {
        assert_eq!(FCurve::parse(&f.to_string()).unwrap(), f);
    }
});
