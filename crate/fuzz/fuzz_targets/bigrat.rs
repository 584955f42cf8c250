#![no_main]

use libfuzzer_sys::fuzz_target;
use stablemap::qfield::{format_bigrat, parse_bigrat};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_bigrat(text) {
        assert_eq!(parse_bigrat(&format_bigrat(&r)).unwrap(), r);
    }
});
