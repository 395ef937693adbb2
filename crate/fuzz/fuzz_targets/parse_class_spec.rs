#![no_main]

use hurwitz_hodge::m0b::ClassSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&b, rest)) = data.split_first() else {
        return;
    };
    let Ok(s) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(spec) = s.parse::<ClassSpec>() {
        assert_eq!(spec.to_string().parse::<ClassSpec>().unwrap(), spec);
        // small b keeps the closed forms cheap
        let _ = spec.build(u32::from(b % 12));
    }
});
