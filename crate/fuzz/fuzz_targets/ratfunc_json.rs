#![no_main]

use libfuzzer_sys::fuzz_target;
use stablemap::qfield::{RatFunc, UPoly};

fuzz_target!(|data: &[u8]| {
    if let Ok(f) = serde_json::from_slice::<RatFunc>(data) {
        // Decoded values are in normal form, so they re-encode stably.
        let again: RatFunc = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(f, again);
    }
    if let Ok(p) = serde_json::from_slice::<UPoly>(data) {
        let again: UPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(p, again);
    }
});
