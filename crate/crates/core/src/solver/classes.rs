use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qfield::{factorial, format_bigrat, rat, BigRat, UPoly};
use crate::series::MultiSeries;
use crate::target::TargetSpace;

/// One class `[M̄_{0,k}(W, β)]` as a polynomial in `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    pub k: usize,
    pub beta: Vec<usize>,
    pub class: UPoly,
}

impl ClassEntry {
    /// Value at `u = 1`, the Euler characteristic.
    pub fn chi(&self) -> BigRat {
        self.class.eval(&rat(1))
    }
}

/// Every class in a truncation box, ordered by `β` (lexicographic) and then
/// by `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable {
    pub target: String,
    pub kmax: usize,
    pub dmax: Vec<usize>,
    pub entries: Vec<ClassEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryRepr {
    k: usize,
    beta: Vec<usize>,
    coeffs: UPoly,
    u: String,
    q: String,
    chi: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableRepr {
    target: String,
    kmax: usize,
    dmax: Vec<usize>,
    entries: Vec<EntryRepr>,
}

/// Upper bound on the number of entries accepted when decoding a table.
const MAX_DECODED_ENTRIES: usize = 1 << 20;

impl ClassTable {
    /// `entry(k, β) = k! · [t^k z^β] Φ_W`, each required to be a polynomial.
    pub fn extract(w: &TargetSpace, pot: &MultiSeries) -> Result<Self> {
        let mut cells: Vec<(usize, Vec<usize>)> = pot.cells().map(|(k, d, _)| (k, d)).collect();
        cells.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
        let mut entries = Vec::with_capacity(cells.len());
        for (k, beta) in cells {
            let c = pot.coeff(k, &beta)?.scale(&BigRat::from_integer(factorial(k)));
            let class = c.as_polynomial().cloned().ok_or_else(|| Error::NonPolynomialClass {
                k,
                beta: beta.clone(),
                value: c.to_string(),
            })?;
            entries.push(ClassEntry { k, beta, class });
        }
        Ok(ClassTable {
            target: w.name().to_string(),
            kmax: pot.kmax(),
            dmax: pot.dmax().to_vec(),
            entries,
        })
    }

    pub fn get(&self, k: usize, beta: &[usize]) -> Option<&UPoly> {
        self.entries
            .iter()
            .find(|e| e.k == k && e.beta == beta)
            .map(|e| &e.class)
    }

    fn to_repr(&self) -> TableRepr {
        TableRepr {
            target: self.target.clone(),
            kmax: self.kmax,
            dmax: self.dmax.clone(),
            entries: self
                .entries
                .iter()
                .map(|e| EntryRepr {
                    k: e.k,
                    beta: e.beta.clone(),
                    coeffs: e.class.clone(),
                    u: e.class.to_string_in("u", 1),
                    q: e.class.to_string_in("q", 2),
                    chi: format_bigrat(&e.chi()),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_repr()).expect("table serialization");
        s.push('\n');
        s
    }

    /// Parses a table written by [`ClassTable::to_json`]. The derived
    /// columns (`u`, `q`, `chi`) must agree with the coefficient list.
    pub fn from_json(s: &str) -> Result<Self> {
        let repr: TableRepr = serde_json::from_str(s)?;
        if repr.entries.len() > MAX_DECODED_ENTRIES {
            return Err(Error::Parse("too many entries".into()));
        }
        let mut entries: Vec<ClassEntry> = Vec::with_capacity(repr.entries.len());
        for e in repr.entries {
            if e.beta.len() != repr.dmax.len() {
                return Err(Error::Parse(format!("beta {:?} has the wrong rank", e.beta)));
            }
            if e.k > repr.kmax || e.beta.iter().zip(&repr.dmax).any(|(b, m)| b > m) {
                return Err(Error::Parse(format!("entry ({}, {:?}) outside the box", e.k, e.beta)));
            }
            let entry = ClassEntry {
                k: e.k,
                beta: e.beta,
                class: e.coeffs,
            };
            if e.u != entry.class.to_string_in("u", 1)
                || e.q != entry.class.to_string_in("q", 2)
                || e.chi != format_bigrat(&entry.chi())
            {
                return Err(Error::Parse(format!(
                    "derived columns disagree with coefficients at ({}, {:?})",
                    entry.k, entry.beta
                )));
            }
            if let Some(prev) = entries.last() {
                let order = prev.beta.cmp(&entry.beta).then(prev.k.cmp(&entry.k));
                if order != std::cmp::Ordering::Less {
                    return Err(Error::Parse("entries out of order or duplicated".into()));
                }
            }
            entries.push(entry);
        }
        Ok(ClassTable {
            target: repr.target,
            kmax: repr.kmax,
            dmax: repr.dmax,
            entries,
        })
    }

    /// One row per `(k, β)`: `k, beta, coeffs, u, q, chi`, with `β` written
    /// as `d1;d2;...` and the coefficients lowest degree first.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["k", "beta", "coeffs", "u", "q", "chi"])
            .expect("in-memory csv");
        for e in &self.entries {
            let beta: Vec<String> = e.beta.iter().map(usize::to_string).collect();
            let coeffs: Vec<String> = e.class.coeffs().iter().map(format_bigrat).collect();
            w.write_record([
                e.k.to_string(),
                beta.join(";"),
                format!("[{}]", coeffs.join(",")),
                e.class.to_string_in("u", 1),
                e.class.to_string_in("q", 2),
                format_bigrat(&e.chi()),
            ])
            .expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let w = TargetSpace::projective_space(2).unwrap();
        let table = solve(&w, 2, &[1]).unwrap().classes().unwrap();
        let js = table.to_json();
        let back = ClassTable::from_json(&js).unwrap();
        assert_eq!(back, table);
        assert_eq!(back.to_json(), js);
    }

    #[test]
    fn tampered_json_rejected() {
        let w = TargetSpace::point();
        let js = solve(&w, 4, &[0]).unwrap().classes().unwrap().to_json();
        let bad = js.replacen("\"chi\": \"2\"", "\"chi\": \"3\"", 1);
        assert_ne!(bad, js);
        assert!(ClassTable::from_json(&bad).is_err());
    }

    #[test]
    fn csv_rows() {
        let w = TargetSpace::point();
        let csv = solve(&w, 5, &[0]).unwrap().classes().unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "k,beta,coeffs,u,q,chi");
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[6], "5,0,\"[1,5,1]\",u^2 + 5*u + 1,q^4 + 5*q^2 + 1,7");
    }
}
