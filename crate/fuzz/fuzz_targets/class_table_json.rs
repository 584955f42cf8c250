#![no_main]

use libfuzzer_sys::fuzz_target;
use stablemap::solver::ClassTable;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = ClassTable::from_json(text) {
        let encoded = t.to_json();
        assert_eq!(ClassTable::from_json(&encoded).unwrap(), t);
        let _ = t.to_csv();
    }
});
