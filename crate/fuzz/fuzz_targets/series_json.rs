#![no_main]

use libfuzzer_sys::fuzz_target;
use stablemap::series::MultiSeries;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = MultiSeries::from_json(text) {
        let encoded = s.to_json();
        let again = MultiSeries::from_json(&encoded).unwrap();
        assert_eq!(again.to_json(), encoded);
    }
});
