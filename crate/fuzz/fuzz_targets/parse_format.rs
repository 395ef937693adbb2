#![no_main]

use hurwitz_hodge::RamificationFormat;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(mu) = s.parse::<RamificationFormat>() {
        let text = mu.to_string();
        let inner = text.trim_start_matches('(').trim_end_matches(')');
        assert_eq!(inner.parse::<RamificationFormat>().unwrap(), mu);
        let _ = mu.branch_count();
    }
});
