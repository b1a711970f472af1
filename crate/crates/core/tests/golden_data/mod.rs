//! Reader for `golden/decompositions.txt`.

#![allow(dead_code)]

use gpcoh::schur::exterior_power_sum;
use gpcoh::{parse_bundle, BundleSum};

const GOLDEN: &str = include_str!("../golden/decompositions.txt");

pub struct Row {
    pub bundle: &'static str,
    /// Alternative form of the same bundle, if one is recorded.
    pub displayed: Option<&'static str>,
    pub summands: &'static str,
}

/// Parses `Λ^j(bundle)` or a plain bundle expression on Gr(4,7).
pub fn bundle(expr: &str) -> BundleSum {
    if let Some(rest) = expr.strip_prefix("Λ^") {
        let (j, inner) = rest.split_once('(').expect("Λ^j(...)");
        let inner = inner.strip_suffix(')').expect("closing paren");
        return exterior_power_sum(&bundle(inner), j.parse().unwrap()).unwrap();
    }
    parse_bundle(expr, 4, 7).unwrap_or_else(|e| panic!("{expr}: {e}"))
}

pub fn rows() -> Vec<Row> {
    GOLDEN
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let cols: Vec<&str> = l.split('|').map(str::trim).collect();
            assert_eq!(cols.len(), 3, "{l}");
            Row {
                bundle: cols[0],
                displayed: (cols[1] != "-").then_some(cols[1]),
                summands: cols[2],
            }
        })
        .collect()
}

/// Every row whose computed summands differ from the recorded ones.
pub fn mismatches() -> Vec<String> {
    let mut out = Vec::new();
    for row in rows() {
        for expr in std::iter::once(row.bundle).chain(row.displayed) {
            let got = bundle(expr).e_labels().unwrap();
            if got != row.summands {
                out.push(format!("{expr}: got {got}, recorded {}", row.summands));
            }
        }
    }
    out
}
