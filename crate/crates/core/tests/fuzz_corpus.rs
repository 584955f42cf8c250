//! Replays the checked-in fuzz seeds through the decoders on the stable
//! toolchain, with the same round-trip assertions as the fuzz targets.

use std::fs;
use std::path::PathBuf;

use stablemap::qfield::{format_bigrat, parse_bigrat, RatFunc, UPoly};
use stablemap::series::MultiSeries;
use stablemap::solver::ClassTable;
use stablemap::target::{parse_target, TargetSpec};

/// Seeds that are deliberately malformed.
const REJECTED: [&str; 2] = ["bad", "zero_den"];

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            let name = path.file_stem().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn expect<T, E: std::fmt::Debug>(name: &str, r: Result<T, E>) -> Option<T> {
    if REJECTED.contains(&name) {
        assert!(r.is_err(), "{name} should be rejected");
        None
    } else {
        Some(r.unwrap_or_else(|e| panic!("{name}: {e:?}")))
    }
}

#[test]
fn target_json() {
    for (name, text) in seeds("target_json") {
        expect(&name, parse_target(&text));
    }
}

#[test]
fn ratfunc_json() {
    for (name, text) in seeds("ratfunc_json") {
        let f = serde_json::from_str::<RatFunc>(&text);
        let p = serde_json::from_str::<UPoly>(&text);
        assert!(f.is_ok() || p.is_ok(), "{name} decodes as neither");
        if let Ok(f) = f {
            let again: RatFunc = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
            assert_eq!(again, f);
        }
    }
}

#[test]
fn series_json() {
    for (name, text) in seeds("series_json") {
        let s = expect(&name, MultiSeries::from_json(&text)).unwrap();
        assert_eq!(s.to_json(), text.trim_end(), "{name}");
    }
}

#[test]
fn class_table_json() {
    for (name, text) in seeds("class_table_json") {
        let t = expect(&name, ClassTable::from_json(&text)).unwrap();
        assert_eq!(t.to_json(), text, "{name}");
    }
}

#[test]
fn target_spec() {
    for (name, text) in seeds("target_spec") {
        if let Some(spec) = expect(&name, text.parse::<TargetSpec>()) {
            assert_eq!(spec.to_string().parse::<TargetSpec>().unwrap(), spec);
        }
    }
}

#[test]
fn bigrat() {
    for (name, text) in seeds("bigrat") {
        if let Some(r) = expect(&name, parse_bigrat(&text)) {
            assert_eq!(parse_bigrat(&format_bigrat(&r)).unwrap(), r);
        }
    }
}
