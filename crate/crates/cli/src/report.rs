//! Text renderings of an evaluation report: a flat key=value report (one
//! pair per line) and the same pairs as a single machine-readable line.

use wfdkit::model::EvalReport;

fn pairs(report: &EvalReport) -> Vec<(String, String)> {
    let mut out = vec![
        ("total".to_string(), report.total.to_string()),
        ("predicted".to_string(), report.predicted.to_string()),
        ("correct".to_string(), report.correct.to_string()),
        ("P".to_string(), format!("{:.4}", report.precision)),
        ("R".to_string(), format!("{:.4}", report.recall)),
        ("F1".to_string(), format!("{:.4}", report.f1)),
    ];
    for (category, count) in &report.error_counts {
        out.push((category.clone(), count.to_string()));
    }
    out
}

/// One `key=value` per line.
pub fn render_report(report: &EvalReport) -> String {
    pairs(report)
        .into_iter()
        .map(|(k, v)| format!("{k}={v}\n"))
        .collect()
}

/// All `key=value` pairs on a single space-separated line.
pub fn render_summary(report: &EvalReport) -> String {
    pairs(report)
        .into_iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}
