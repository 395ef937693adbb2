#![no_main]

use hurwitz_hodge::m0b::DivisorClass;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(c) = DivisorClass::from_json(s) {
        let text = c.to_json();
        let back = DivisorClass::from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), text);
    }
});
