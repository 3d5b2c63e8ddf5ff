use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::enumerate::{classify, enumeration_feasible};
use super::formulas::{count_indecomposable_partition, decimal_ratio, indecomposable_table, mass_formula_as_written};
use super::CensusError;
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Formula,
    Recursion,
    Partition,
    Enumeration,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Formula => "formula",
            Provenance::Recursion => "recursion",
            Provenance::Partition => "partition",
            Provenance::Enumeration => "enumeration",
        }
    }
}

fn big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn big_opt<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationCheck {
    pub total: u64,
    pub indecomposable: u64,
    pub agrees: bool,
}

/// One even length. Counts serialize as decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    #[serde(rename = "G", serialize_with = "big")]
    pub g: BigUint,
    #[serde(rename = "C", serialize_with = "big")]
    pub c: BigUint,
    /// `C/G` in lowest terms, `"0/0"` when there are no self-dual codes.
    pub ratio: String,
    pub ratio_decimal: Option<String>,
    pub provenance: Provenance,
    /// Set when the product formula, taken literally, gives a different G.
    #[serde(serialize_with = "big_opt", skip_serializing_if = "Option::is_none")]
    pub formula_as_written: Option<BigUint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition_agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<EnumerationCheck>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusTable {
    pub q: u64,
    pub rows: Vec<CensusRow>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CensusOptions {
    /// Enumerate every length within the enumeration bound.
    pub verify_enumeration: bool,
    /// Recompute C with the partition sum.
    pub verify_partition: bool,
}

fn exact_ratio(c: &BigUint, g: &BigUint) -> String {
    if g.is_zero() {
        return "0/0".to_string();
    }
    let d = c.gcd(g);
    format!("{}/{}", c / &d, g / &d)
}

/// Census of lengths `2, 4, ..., n_max` over GF(q). C comes from the block
/// recursion; the options attach independent checks.
pub fn census_report(n_max: usize, q: u64, options: CensusOptions) -> Result<CensusTable, CensusError> {
    let table = indecomposable_table(n_max, q)?;
    let field = if options.verify_enumeration {
        Some(Field::with_order(q)?)
    } else {
        None
    };
    let mut rows = Vec::new();
    for (n, g, c) in table.into_iter().skip(1) {
        let written = mass_formula_as_written(n, q)?;
        let partition_agrees = if options.verify_partition {
            Some(count_indecomposable_partition(n, q)? == c)
        } else {
            None
        };
        let enumeration = match &field {
            Some(f) if enumeration_feasible(n, q) => {
                let s = classify(n, f)?;
                let agrees = BigUint::from(s.total) == g && BigUint::from(s.indecomposable) == c;
                Some(EnumerationCheck {
                    total: s.total,
                    indecomposable: s.indecomposable,
                    agrees,
                })
            }
            _ => None,
        };
        rows.push(CensusRow {
            n,
            ratio: exact_ratio(&c, &g),
            ratio_decimal: decimal_ratio(&c, &g, 6),
            provenance: Provenance::Recursion,
            formula_as_written: (written != g).then_some(written),
            partition_agrees,
            enumeration,
            g,
            c,
        });
    }
    Ok(CensusTable { q, rows })
}

impl CensusTable {
    /// `n,G,C,ratio,provenance`, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,G,C,ratio,provenance\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{}", r.n, r.g, r.c, r.ratio, r.provenance.as_str());
        }
        out
    }

    pub fn row(&self, n: usize) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// False if any attached check disagrees with the recursion.
    pub fn consistent(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.c <= r.g && r.partition_agrees != Some(false) && r.enumeration.as_ref().is_none_or(|e| e.agrees))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_to_ten() {
        let t = census_report(10, 2, CensusOptions::default()).unwrap();
        let got: Vec<(usize, String, String)> =
            t.rows.iter().map(|r| (r.n, r.g.to_string(), r.c.to_string())).collect();
        let want = [
            (2, "1", "1"),
            (4, "3", "0"),
            (6, "15", "0"),
            (8, "135", "30"),
            (10, "2295", "0"),
        ];
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert_eq!((g.0, g.1.as_str(), g.2.as_str()), w);
        }
        assert_eq!(t.row(2).unwrap().ratio, "1/1");
        assert_eq!(t.row(8).unwrap().ratio, "2/9");
        assert_eq!(t.row(8).unwrap().ratio_decimal.as_deref(), Some("0.222222"));
        assert!(t.rows.iter().all(|r| r.formula_as_written.is_none()));
        assert_eq!(
            t.to_csv().lines().take(3).collect::<Vec<_>>(),
            ["n,G,C,ratio,provenance", "2,1,1,1/1,recursion", "4,3,0,0/1,recursion"]
        );
    }

    #[test]
    fn ternary_flags_formula() {
        let t = census_report(
            8,
            3,
            CensusOptions {
                verify_enumeration: true,
                verify_partition: true,
            },
        )
        .unwrap();
        let r2 = t.row(2).unwrap();
        assert!(r2.g.is_zero());
        assert_eq!(r2.ratio, "0/0");
        assert_eq!(r2.formula_as_written, Some(BigUint::from(2u32)));
        assert_eq!(r2.enumeration.as_ref().unwrap().total, 0);
        assert_eq!(t.row(4).unwrap().c, BigUint::from(8u32));
        assert!(t.row(8).unwrap().enumeration.is_none());
        assert!(t.consistent());
    }

    #[test]
    fn json_uses_strings() {
        let t = census_report(4, 5, CensusOptions::default()).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["rows"][1]["G"], "12");
        assert_eq!(v["rows"][0]["provenance"], "recursion");
    }
}
