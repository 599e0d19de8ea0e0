use std::str::FromStr;

use serde_json::{json, Value};

use crate::numbers::{bernoulli, bernoulli_two_index, format_rational, gauge_k, stirling2};
use crate::{Error, Result};

/// Largest index accepted by [`emit_tables`].
pub const TABLE_BOUND: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Bernoulli,
    Bernoulli2d,
    GaugeK,
    Stirling,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Bernoulli => "bernoulli",
            TableKind::Bernoulli2d => "bernoulli2d",
            TableKind::GaugeK => "gaugeK",
            TableKind::Stirling => "stirling",
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "bernoulli" => TableKind::Bernoulli,
            "bernoulli2d" => TableKind::Bernoulli2d,
            "gaugeK" => TableKind::GaugeK,
            "stirling" => TableKind::Stirling,
            other => return Err(Error::Unsupported(format!("unknown table {other:?}"))),
        })
    }
}

/// Rows of exact values as strings.
///
/// * `bernoulli`: one row `B_0 .. B_max`;
/// * `bernoulli2d`: the square `B(i,j)`, `0 <= i,j <= max`;
/// * `gaugeK`: one row `K_1 .. K_max`;
/// * `stirling`: rows `S(n,1) .. S(n,n)` for `n = 1 ..= max`.
pub fn table_rows(kind: TableKind, max: usize) -> Result<Vec<Vec<String>>> {
    if max > TABLE_BOUND {
        return Err(Error::Unsupported(format!(
            "table bound is {TABLE_BOUND}, requested {max}"
        )));
    }
    Ok(match kind {
        TableKind::Bernoulli => vec![(0..=max).map(|n| format_rational(&bernoulli(n))).collect()],
        TableKind::Bernoulli2d => (0..=max)
            .map(|i| {
                (0..=max)
                    .map(|j| format_rational(&bernoulli_two_index(i, j)))
                    .collect()
            })
            .collect(),
        TableKind::GaugeK => vec![(1..=max).map(|n| format_rational(&gauge_k(n))).collect()],
        TableKind::Stirling => (1..=max)
            .map(|n| (1..=n).map(|k| stirling2(n, k).to_string()).collect())
            .collect(),
    })
}

/// `{"table": name, "max": max, "rows": [[..], ..]}`.
pub fn emit_tables(kind: TableKind, max: usize) -> Result<Value> {
    Ok(json!({
        "table": kind.name(),
        "max": max,
        "rows": table_rows(kind, max)?,
    }))
}

/// Right-aligned plain text, one row per line.
pub fn render_table_text(kind: TableKind, max: usize) -> Result<String> {
    let rows = table_rows(kind, max)?;
    let width = rows.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    Ok(out)
}
