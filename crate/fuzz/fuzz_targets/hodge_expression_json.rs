#![no_main]

use hurwitz_hodge::HodgeExpression;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(e) = HodgeExpression::from_json(s) {
        let text = e.to_json();
        let back = HodgeExpression::from_json(&text).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.to_json(), text);
    }
});
