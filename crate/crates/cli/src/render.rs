//! Plain-text rendering.

use std::fmt::Write;

use charval_core::analysis::{ValueProfile, Verdict};
use charval_core::chartab::{CharacterTable, OrthogonalityReport, TableRecord};
use charval_core::cyclotomic::Cyclotomic;
use charval_core::fleet::{FleetReport, GroupStatus};

fn approx(v: &Cyclotomic) -> String {
    let (re, im) = v.to_complex();
    if im.abs() < 1e-9 {
        format!("{re:.4}")
    } else {
        format!("{re:.4}{:+.4}i", im)
    }
}

fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            let pad = width[c] - cell.chars().count();
            if c == 0 {
                let _ = write!(line, "{cell}{}", " ".repeat(pad));
            } else {
                let _ = write!(line, "  {}{cell}", " ".repeat(pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Classes as columns, characters as rows. Irrational entries are listed
/// again below with a decimal approximation.
pub fn table(t: &CharacterTable) -> String {
    let mut out = format!(
        "{}: order {}, {} classes, exponent {}\n\n",
        t.group_name(),
        t.group_order(),
        t.num_classes(),
        t.exponent()
    );
    let sizes = t.classes().class_sizes();
    let mut rows = vec![
        std::iter::once(String::new()).chain(t.class_labels().iter().cloned()).collect(),
        std::iter::once("|C(g)|".to_string())
            .chain(sizes.iter().map(|h| (t.group_order() / h).to_string()))
            .collect(),
        std::iter::once("size".to_string())
            .chain(sizes.iter().map(usize::to_string))
            .collect::<Vec<_>>(),
    ];
    let mut irrational: Vec<&Cyclotomic> = Vec::new();
    for (i, row) in t.values().iter().enumerate() {
        let mut cells = vec![format!("X.{}", i + 1)];
        for v in row {
            cells.push(v.pretty());
            if !v.is_rational() && !irrational.contains(&v) {
                irrational.push(v);
            }
        }
        rows.push(cells);
    }
    out.push_str(&grid(&rows));
    if !irrational.is_empty() {
        out.push('\n');
        let mut legend = vec![vec!["value".to_string(), "approx".to_string()]];
        legend.extend(irrational.iter().map(|v| vec![v.pretty(), approx(v)]));
        out.push_str(&grid(&legend));
    }
    out
}

/// Rational integers ascending, then the rest in canonical order.
fn sorted_values(p: &ValueProfile) -> Vec<String> {
    let mut ints: Vec<i64> = p.cv.iter().filter_map(Cyclotomic::as_i64).collect();
    ints.sort();
    ints.iter()
        .map(i64::to_string)
        .chain(p.cv.iter().filter(|v| v.as_i64().is_none()).map(Cyclotomic::pretty))
        .collect()
}

pub fn profile(name: &str, order: usize, p: &ValueProfile) -> String {
    let cd: Vec<String> = p.cd.iter().map(u64::to_string).collect();
    let mut out = String::new();
    for (key, value) in [
        ("group", name.to_string()),
        ("order", order.to_string()),
        ("cv_size", p.cv_size.to_string()),
        ("cv", format!("{{{}}}", sorted_values(p).join(", "))),
        ("cd", format!("{{{}}}", cd.join(", "))),
        ("b", p.b.to_string()),
    ] {
        let _ = writeln!(out, "{key:<8} {value}");
    }
    out
}

pub fn orthogonality(record: &TableRecord, r: &OrthogonalityReport) -> String {
    let mut out = String::new();
    if let Some(m) = &r.malformed {
        let _ = writeln!(out, "{}: malformed table: {m}", record.group);
        return out;
    }
    for (i, j) in &r.row_violations {
        let _ = writeln!(out, "row relation fails for characters {} and {}", i + 1, j + 1);
    }
    for (k, l) in &r.column_violations {
        let label = |c: usize| record.classes.get(c).map_or(c.to_string(), |x| x.label.clone());
        let _ = writeln!(out, "column relation fails for classes {} and {}", label(*k), label(*l));
    }
    let verdict = if r.is_ok() { "orthogonality PASS" } else { "orthogonality FAIL" };
    let _ = writeln!(out, "{}: {verdict}", record.group);
    out
}

pub fn fleet(report: &FleetReport) -> String {
    let mut out = String::new();
    let names: Vec<&str> = report.predicates.iter().map(|p| p.name()).collect();
    let _ = writeln!(out, "predicates: {}\n", names.join(", "));

    let mut rows = vec![["order", "group", "classes", "|cv|", "status"].map(String::from).to_vec()];
    for g in &report.groups {
        let status = match g.status {
            GroupStatus::Ok => {
                let fails = g.verdicts.values().filter(|v| v.is_fail()).count();
                let warns = g.verdicts.values().filter(|v| v.is_warn()).count();
                match (fails, warns) {
                    (0, 0) => "ok".to_string(),
                    (0, w) => format!("{w} warn"),
                    (f, _) => format!("{f} FAIL"),
                }
            }
            GroupStatus::Skipped => "skipped".to_string(),
            GroupStatus::Error => "ERROR".to_string(),
        };
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        rows.push(vec![
            g.order.to_string(),
            g.name.clone(),
            opt(g.num_classes),
            opt(g.cv_size),
            status,
        ]);
    }
    out.push_str(&grid(&rows));

    let mut notes = String::new();
    for g in &report.groups {
        if let Some(e) = &g.error {
            let word = if g.status == GroupStatus::Skipped { "skipped" } else { "ERROR" };
            let _ = writeln!(notes, "{word} {} ({}): {e}", g.name, g.source);
        }
        for (p, v) in &g.verdicts {
            if v.is_fail() || v.is_warn() {
                let _ = writeln!(notes, "{} {p}: {v}", g.name);
            }
        }
    }
    for (p, v) in &report.fleet {
        if !matches!(v, Verdict::NotApplicable { .. }) {
            let _ = writeln!(notes, "fleet {p}: {v}");
        }
    }
    if !notes.is_empty() {
        out.push('\n');
        out.push_str(&notes);
    }

    let s = &report.summary;
    let hist: Vec<String> = s
        .cv_size_histogram
        .iter()
        .map(|(k, n)| format!("{k}:{n}"))
        .collect();
    let _ = write!(
        out,
        "\ngroups {}, skipped {}, errors {}, failures {}, warnings {}\n\
         four-value groups: {}\n\
         structural matches: {}\n\
         five-value 2-groups: {}\n\
         |cv| histogram: {}\n",
        s.groups,
        s.skipped,
        s.errors,
        s.failures,
        s.warnings,
        list(&s.four_value_groups),
        list(&s.structural_matches),
        list(&s.five_value_two_groups),
        hist.join(" ")
    );
    let _ = writeln!(out, "result: {}", if report.is_success() { "PASS" } else { "FAIL" });
    out
}

fn list(v: &[String]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.join(", ")
    }
}
