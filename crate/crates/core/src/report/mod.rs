//! Verdict rows for the named examples and the price-of-total-anarchy
//! table, with CSV and plain-text rendering.

mod battery;
mod experiments;
mod table;
mod verdict;

use std::io::Write;

use crate::error::Result;
use crate::game::Instance;
use crate::rational::format_ratio_form;

pub use battery::{reproduce_named_examples, NAMED_MAX_STATES};
pub use experiments::{large_n_experiment, strong_nash_search};
pub use table::{reproduce_table1, TableConfig, EPS_SWEEP};
pub use verdict::{BoundSense, VerdictReport};

/// Short description used when no generator spec is at hand.
pub fn instance_label(inst: &Instance) -> String {
    format!("{}(n={};m={})", inst.kind(), inst.n(), inst.m())
}

pub fn write_csv<W: Write>(rows: &[VerdictReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["claim_id", "instance", "bound", "measured", "verdict", "slack"])?;
    for r in rows {
        w.write_record([
            r.claim_id.as_str(),
            r.instance.as_str(),
            &format_ratio_form(&r.bound),
            &format_ratio_form(&r.measured),
            r.verdict_label(),
            &format_ratio_form(&r.slack),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Aligned plain-text table followed by a pass/fail tally.
pub fn render_text(rows: &[VerdictReport]) -> String {
    use crate::rational::format_rational;
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.claim_id.clone(),
                r.instance.clone(),
                format_rational(&r.bound),
                format_rational(&r.measured),
                r.verdict_label().to_string(),
                format_rational(&r.slack),
            ]
        })
        .collect();
    let header = ["claim", "instance", "bound", "measured", "verdict", "slack"];
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |cols: Vec<&str>, out: &mut String| {
        let parts: Vec<String> = cols
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec(), &mut out);
    for row in &cells {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    let failed = rows.iter().filter(|r| r.failed()).count();
    let soft = rows.iter().filter(|r| !r.passed && r.soft).count();
    out.push_str(&format!(
        "{} rows, {} failed, {} soft misses\n",
        rows.len(),
        failed,
        soft
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn verdict_orientation_and_slack() {
        let r = VerdictReport::new("c", "i", frac(3, 2), frac(5, 4), BoundSense::AtMost);
        assert!(r.passed);
        assert_eq!(r.slack, frac(1, 4));
        let r = VerdictReport::new("c", "i", int(2), int(3), BoundSense::AtMost);
        assert!(r.failed());
        assert!(!r.clone().soft().failed());
        let r = VerdictReport::new("c", "i", int(0), int(0), BoundSense::Equal);
        assert!(r.passed);
    }

    #[test]
    fn csv_shape() {
        let rows = vec![VerdictReport::new("c", "i", frac(3, 2), int(1), BoundSense::AtMost)];
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "claim_id,instance,bound,measured,verdict,slack\nc,i,3/2,1/1,pass,1/2\n"
        );
        assert!(render_text(&rows).ends_with("1 rows, 0 failed, 0 soft misses\n"));
    }
}
