//! Human-readable tables and JSON fragments. All rational values render as
//! `a/b` strings, never decimals.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use quasiper_core::quasipoly::{PeriodProfile, QuasiPolynomial, QuasiPolynomialJson};
use quasiper_core::RationalGF;

/// Coefficient functions as rows (j ascending) with residues as columns.
pub fn qp_table(q: &QuasiPolynomial) -> String {
    if q.is_zero() {
        return "quasi-polynomial: 0 (degree -1, period 1)\n".to_string();
    }
    let period = q.period() as usize;
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["j".to_string()];
    header.extend((0..period).map(|r| format!("r={r}")));
    grid.push(header);
    for (j, row) in q.coefficient_rows().iter().enumerate() {
        let mut line = vec![j.to_string()];
        line.extend(row.iter().map(|c| c.to_string()));
        grid.push(line);
    }
    let widths: Vec<usize> = (0..=period)
        .map(|col| grid.iter().map(|row| row[col].len()).max().unwrap_or(1))
        .collect();
    let mut out = format!(
        "quasi-polynomial: period {}, degree {}\n",
        q.period(),
        q.degree()
    );
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(col, cell)| format!("{cell:>width$}", width = widths[col]))
            .collect();
        out.push_str("  ");
        out.push_str(&cells.join("  "));
        out.push('\n');
    }
    out
}

pub fn profile_line(label: &str, profile: &PeriodProfile) -> String {
    format!(
        "{label}: {:?} (lcm {})",
        profile.coefficient_periods, profile.minimum_period
    )
}

pub fn pole_orders_line(orders: &BTreeMap<u64, u32>) -> String {
    if orders.is_empty() {
        return "pole orders: none".to_string();
    }
    let parts: Vec<String> = orders.iter().map(|(n, e)| format!("{n}: {e}")).collect();
    format!("pole orders: {{{}}}", parts.join(", "))
}

pub fn qp_json(q: &QuasiPolynomial) -> Value {
    serde_json::to_value(QuasiPolynomialJson::from(q)).expect("serializable")
}

pub fn pole_orders_json(orders: &BTreeMap<u64, u32>) -> Value {
    Value::Array(
        orders
            .iter()
            .map(|(&n, &e)| json!([n, e]))
            .collect(),
    )
}

/// Reduced form: numerator coefficient list plus cyclotomic (n, e) pairs.
pub fn gf_json(gf: &RationalGF) -> Value {
    json!({
        "numerator": gf
            .reduced_numerator()
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>(),
        "den_factors": pole_orders_json(&gf.pole_orders()),
    })
}

pub fn gf_line(gf: &RationalGF) -> String {
    format!("generating function (reduced): {gf}")
}
