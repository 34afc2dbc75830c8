use std::fmt::Write;

use degbound_core::{CheckReport, Status};
use serde::Serialize;

use crate::config::Format;

const STATUSES: [Status; 6] = [
    Status::Pass,
    Status::Fail,
    Status::ExpectedFail,
    Status::Skipped,
    Status::AwaitingGenerators,
    Status::Undecided,
];

pub fn count(reports: &[CheckReport], status: Status) -> usize {
    reports.iter().filter(|r| r.status == status).count()
}

pub fn summary_line(reports: &[CheckReport], exit_code: i32) -> String {
    let parts: Vec<String> = STATUSES
        .iter()
        .map(|&s| format!("{} {}", count(reports, s), s))
        .collect();
    format!("{} checks: {}; exit {exit_code}", reports.len(), parts.join(", "))
}

pub fn render(reports: &[CheckReport], format: Format, exit_code: i32, timings: bool) -> String {
    match format {
        Format::Table => table(reports, exit_code, timings),
        Format::Json => json(reports, exit_code, timings),
    }
}

pub fn table(reports: &[CheckReport], exit_code: i32, timings: bool) -> String {
    let id_width = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = String::new();
    let _ = writeln!(out, "{:<19} {:<id_width$} VALUES", "STATUS", "ID");
    for r in reports {
        let values: Vec<String> = r.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(
            out,
            "{:<19} {:<id_width$} {}",
            r.status.as_str(),
            r.id,
            values.join(" ")
        );
        let _ = writeln!(out, "{:19} {:id_width$}   claim: {}", "", "", r.claim);
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "{:19} {:id_width$}   witness: {w}", "", "");
        }
        if let Some(reason) = &r.reason {
            let _ = writeln!(out, "{:19} {:id_width$}   reason: {reason}", "", "");
        }
        if let (true, Some(us)) = (timings, r.runtime_micros) {
            let _ = writeln!(out, "{:19} {:id_width$}   runtime: {us} us", "", "");
        }
    }
    let _ = writeln!(out, "{}", summary_line(reports, exit_code));
    out
}

#[derive(Serialize)]
struct JsonRun {
    exit_code: i32,
    counts: Vec<(&'static str, usize)>,
    reports: Vec<CheckReport>,
}

pub fn json(reports: &[CheckReport], exit_code: i32, timings: bool) -> String {
    let reports: Vec<CheckReport> = reports
        .iter()
        .cloned()
        .map(|mut r| {
            if !timings {
                r.runtime_micros = None;
            }
            r
        })
        .collect();
    let run = JsonRun {
        exit_code,
        counts: STATUSES.iter().map(|&s| (s.as_str(), count(&reports, s))).collect(),
        reports,
    };
    let mut s = serde_json::to_string_pretty(&run).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use degbound_core::report::kv;

    fn sample() -> Vec<CheckReport> {
        vec![
            CheckReport::decided("a/x", "x holds", true, vec![kv("n", 5)]),
            CheckReport::skipped("a/y", "y holds", "not applicable"),
        ]
    }

    #[test]
    fn table_lists_every_report_and_a_summary() {
        let t = table(&sample(), 0, false);
        assert!(t.contains("pass"));
        assert!(t.contains("a/x"));
        assert!(t.contains("n=5"));
        assert!(t.contains("reason: not applicable"));
        assert!(t.trim_end().ends_with(
            "2 checks: 1 pass, 0 fail, 0 expected-fail, 1 skipped, 0 awaiting-generators, 0 undecided; exit 0"
        ));
    }

    #[test]
    fn json_round_trips_and_hides_timings() {
        let mut reports = sample();
        reports[0].runtime_micros = Some(12);
        let s = json(&reports, 1, false);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["exit_code"], 1);
        assert_eq!(v["reports"][0]["status"], "pass");
        assert!(v["reports"][0]["runtime_micros"].is_null());
        let back: Vec<CheckReport> = serde_json::from_value(v["reports"].clone()).unwrap();
        assert_eq!(back[1], reports[1]);
        assert_eq!(json(&reports, 1, false), s);
    }
}
