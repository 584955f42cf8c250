#![no_main]

use libfuzzer_sys::fuzz_target;
use stablemap::target::parse_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Loading must reject bad data with an error, never a panic.
    let _ = parse_target(text);
});
