use std::fmt::Write as _;

use super::{final_corollary_consistent, VerificationReport};

/// Aligned-column text rendering of a report.
pub fn render_text(report: &VerificationReport) -> String {
    let header = [
        "group", "cyclic", "|E|", "|E->|", "|E<->|", "verdict", "directed", "ineq", "corollary",
        "bijection",
    ];
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let ok = |b: bool| if b { "ok" } else { "FAIL" };
    let rows: Vec<[String; 10]> = report
        .entries
        .iter()
        .map(|e| {
            [
                e.descriptor.clone(),
                yes_no(e.is_cyclic).into(),
                e.counts.undirected.to_string(),
                e.counts.directed.to_string(),
                e.counts.bidirectional.to_string(),
                e.verdict.as_str().into(),
                e.directed_verdict.as_str().into(),
                ok(e.inequalities.all_consistent()).into(),
                ok(final_corollary_consistent(&e.final_corollary, e.is_cyclic)).into(),
                yes_no(e.bijection_exists).into(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }

    let mut out = String::new();
    let c = &report.cyclic_counts;
    writeln!(out, "order {}: {} group(s)", report.n, report.entries.len()).unwrap();
    writeln!(
        out,
        "Z{} counts: |E| = {}, |E->| = {}, |E<->| = {}",
        report.n, c.undirected, c.directed, c.bidirectional
    )
    .unwrap();
    out.push('\n');
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
    };
    line(header.to_vec());
    for row in &rows {
        line(row.iter().map(String::as_str).collect());
    }
    out.push('\n');
    writeln!(out, "max |E| = {} ({})", report.max_undirected, report.argmax).unwrap();
    writeln!(out, "main theorem: {}", ok(report.all_pass)).unwrap();
    writeln!(out, "directed analogue: {}", ok(report.directed_all_pass)).unwrap();
    writeln!(out, "all checks: {}", ok(report.suite_pass)).unwrap();
    out
}
