//! Cardinality tables computed from the closed-form counters.
//!
//! Tables 1-4 are fixed-length codes over `Z_3 .. Z_6` for `n = 3..=16`:
//! Construction I maximised over `k`, Construction I' maximised over `k` and
//! `|I|`. Tables 5-6 are Construction II' over `Z_3` and `Z_4` for
//! `n = 8..=23`, `k = 3..=10` with `2k + 2 <= n`, maximised over `|I|`.

use std::ops::RangeInclusive;

use noc_core::count::{s_count, vcal_count};
use noc_core::PartSizes;
use num_bigint::BigUint;
use serde_json::{json, Value};

pub const FIXED_N: RangeInclusive<usize> = 3..=16;
pub const VARIABLE_N: RangeInclusive<usize> = 8..=23;
pub const VARIABLE_K: RangeInclusive<usize> = 3..=10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Fixed,
    Variable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableSpec {
    pub id: u8,
    pub q: u32,
    pub kind: TableKind,
}

impl TableSpec {
    pub fn new(id: u8) -> Option<Self> {
        match id {
            1..=4 => Some(TableSpec { id, q: id as u32 + 2, kind: TableKind::Fixed }),
            5 | 6 => Some(TableSpec { id, q: id as u32 - 2, kind: TableKind::Variable }),
            _ => None,
        }
    }

    pub fn all() -> impl Iterator<Item = TableSpec> {
        (1..=6).filter_map(TableSpec::new)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedRow {
    pub n: usize,
    pub construction_i: BigUint,
    pub construction_i_prime: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableRow {
    pub n: usize,
    pub k: usize,
    pub cardinality: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Table {
    Fixed(Vec<FixedRow>),
    Variable(Vec<VariableRow>),
}

fn max_s(sizes: &[PartSizes], n: usize) -> BigUint {
    (1..n).flat_map(|k| sizes.iter().map(move |&s| s_count(s, k, n).expect("k >= 1"))).max().unwrap_or_default()
}

pub fn compute(spec: TableSpec) -> Table {
    let q = spec.q;
    match spec.kind {
        TableKind::Fixed => Table::Fixed(
            FIXED_N
                .map(|n| FixedRow {
                    n,
                    construction_i: max_s(&[PartSizes::split(q, 1).expect("q >= 2")], n),
                    construction_i_prime: max_s(&PartSizes::all_for(q).collect::<Vec<_>>(), n),
                })
                .collect(),
        ),
        TableKind::Variable => Table::Variable(
            VARIABLE_N
                .flat_map(|n| VARIABLE_K.filter(move |&k| 2 * k + 2 <= n).map(move |k| (n, k)))
                .map(|(n, k)| VariableRow {
                    n,
                    k,
                    cardinality: PartSizes::all_for(q)
                        .map(|s| vcal_count(s, k, n).expect("k >= 3 and 2k+2 <= n"))
                        .max()
                        .unwrap_or_default(),
                })
                .collect(),
        ),
    }
}

impl Table {
    pub fn header(&self) -> [&'static str; 3] {
        match self {
            Table::Fixed(_) => ["n", "construction_I", "construction_I_prime"],
            Table::Variable(_) => ["n", "k", "cardinality"],
        }
    }

    fn records(&self) -> Vec<[String; 3]> {
        match self {
            Table::Fixed(rows) => rows
                .iter()
                .map(|r| [r.n.to_string(), r.construction_i.to_string(), r.construction_i_prime.to_string()])
                .collect(),
            Table::Variable(rows) => {
                rows.iter().map(|r| [r.n.to_string(), r.k.to_string(), r.cardinality.to_string()]).collect()
            }
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.header()).expect("in-memory write");
        for r in self.records() {
            w.write_record(&r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }

    /// Rows as objects keyed like the CSV header; `n` and `k` are numbers,
    /// cardinalities are decimal strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = match self {
            Table::Fixed(rows) => rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "construction_I": r.construction_i.to_string(),
                        "construction_I_prime": r.construction_i_prime.to_string(),
                    })
                })
                .collect(),
            Table::Variable(rows) => {
                rows.iter().map(|r| json!({ "n": r.n, "k": r.k, "cardinality": r.cardinality.to_string() })).collect()
            }
        };
        Value::Array(rows)
    }
}
