//! Report document and its table, CSV and JSON renderings.
//!
//! Every number is rounded to 15 significant digits before it is stored,
//! so all three formats print the same decimal strings.

use serde::{Deserialize, Serialize};

/// Rounds to 15 significant digits; non-finite values pass through.
pub fn round15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// Shortest decimal that reads back as `x`, as JSON prints it.
pub fn fmt_num(x: f64) -> String {
    serde_json::to_string(&x).unwrap_or_else(|_| "null".into())
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompositeRow {
    pub n: usize,
    pub value: f64,
    pub error: Option<f64>,
    pub order: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Baselines {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mercer: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub classical: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub id: String,
    pub value: Option<f64>,
    pub rigorous: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub rule: f64,
    pub composite: Vec<CompositeRow>,
    pub baselines: Baselines,
    pub oracle: Option<f64>,
    pub error: Option<f64>,
    pub bounds: Vec<BoundRow>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut row = |fields: [&str; 7]| w.write_record(fields).expect("in-memory write");
        row([
            "section", "key", "value", "error", "order", "rigorous", "note",
        ]);
        row(["rule", "gl2_rs", &fmt_num(self.rule), "", "", "", ""]);
        if let Some(v) = self.baselines.mercer {
            row(["baseline", "mercer", &fmt_num(v), "", "", "", ""]);
        }
        if let Some(v) = self.baselines.classical {
            row(["baseline", "classical", &fmt_num(v), "", "", "", ""]);
        }
        if let Some(v) = self.oracle {
            row(["oracle", "reference", &fmt_num(v), "", "", "", ""]);
        }
        if let Some(v) = self.error {
            row(["error", "actual", &fmt_num(v), "", "", "", ""]);
        }
        for c in &self.composite {
            row([
                "composite",
                &c.n.to_string(),
                &fmt_num(c.value),
                &fmt_opt(c.error),
                &fmt_opt(c.order),
                "",
                "",
            ]);
        }
        for b in &self.bounds {
            row([
                "bound",
                &b.id,
                &fmt_opt(b.value),
                "",
                "",
                &b.rigorous.to_string(),
                &b.note,
            ]);
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k:<10} {v}\n"));
        line("rule", fmt_num(self.rule));
        if let Some(v) = self.oracle {
            line("oracle", fmt_num(v));
        }
        if let Some(v) = self.error {
            line("error", fmt_num(v));
        }
        if let Some(v) = self.baselines.mercer {
            line("mercer", fmt_num(v));
        }
        if let Some(v) = self.baselines.classical {
            line("classical", fmt_num(v));
        }
        if !self.composite.is_empty() {
            out.push_str(&format!(
                "\n{:>8}  {:<22} {:<22} {}\n",
                "n", "composite", "|error|", "order"
            ));
            for c in &self.composite {
                out.push_str(&format!(
                    "{:>8}  {:<22} {:<22} {}\n",
                    c.n,
                    fmt_num(c.value),
                    fmt_opt(c.error),
                    fmt_opt(c.order)
                ));
            }
        }
        if !self.bounds.is_empty() {
            out.push_str(&format!(
                "\n{:<9} {:<22} {:<9} {}\n",
                "bound", "value", "rigorous", "note"
            ));
            for b in &self.bounds {
                let value = b.value.map(fmt_num).unwrap_or_else(|| "-".into());
                out.push_str(&format!(
                    "{:<9} {:<22} {:<9} {}\n",
                    b.id, value, b.rigorous, b.note
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_fifteen_digits() {
        assert_eq!(fmt_num(round15(2.0 / 3.0)), "0.666666666666667");
        assert_eq!(fmt_num(round15(1.2000000000000002)), "1.2");
        assert_eq!(fmt_num(round15(8.0 / 15.0)), "0.533333333333333");
        assert_eq!(fmt_num(round15(2.0 * 1f64.sin())), "1.68294196961579");
        assert_eq!(round15(0.0), 0.0);
        assert!(round15(f64::NAN).is_nan());
    }

    #[test]
    fn csv_quotes_notes_with_commas() {
        let r = Report {
            rule: 1.0,
            composite: vec![],
            baselines: Baselines::default(),
            oracle: None,
            error: None,
            bounds: vec![BoundRow {
                id: "thm2.3".into(),
                value: Some(2.0),
                rigorous: false,
                note: "a, b".into(),
            }],
        };
        assert!(r.to_csv().contains("bound,thm2.3,2.0,,,false,\"a, b\""));
    }
}
