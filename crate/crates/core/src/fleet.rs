//! Scans over many groups with a deterministic, machine-readable report.

use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    analyze, check_remark_five, evaluate, ClassificationReport, Predicate, StructureFlags,
    Verdict,
};
use crate::catalog::{load_group, parse_path, GroupRecord};
use crate::chartab::{dixon_schneider_with_seed, CharacterTable, DEFAULT_SEED};
use crate::constructions::Builder;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Settings shared by every command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub order_cap: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order_cap: DEFAULT_ORDER_CAP,
            seed: DEFAULT_SEED,
            jobs: 1,
        }
    }
}

impl RunConfig {
    pub fn new(order_cap: usize, seed: u64, jobs: usize) -> Result<Self> {
        if order_cap == 0 {
            return Err(Error::Spec("order cap must be at least 1".into()));
        }
        if jobs == 0 {
            return Err(Error::Spec("jobs must be at least 1".into()));
        }
        Ok(RunConfig {
            order_cap,
            seed,
            jobs,
        })
    }
}

/// One group to scan.
#[derive(Clone, Debug)]
pub enum GroupSource {
    Family(FamilySpec),
    Record { file: String, record: GroupRecord },
}

impl GroupSource {
    pub fn describe(&self) -> String {
        match self {
            GroupSource::Family(spec) => format!("family:{spec}"),
            GroupSource::Record { file, record } => format!("file:{file}#{}", record.name),
        }
    }

    pub fn load(&self, cap: usize) -> Result<FiniteGroup> {
        match self {
            GroupSource::Family(spec) => {
                let g = spec.build(&Builder::new(cap))?;
                Ok(g.with_name(spec.to_string()))
            }
            GroupSource::Record { file, record } => load_group(record, file, cap),
        }
    }
}

fn families(specs: &[&str]) -> Vec<FamilySpec> {
    specs
        .iter()
        .map(|s| s.parse().expect("built-in family specs parse"))
        .collect()
}

/// Constructed groups that join every fleet scan.
pub fn default_families() -> Vec<FamilySpec> {
    families(&[
        "cyclic(1)",
        "cyclic(4)",
        "cyclic(5)",
        "cyclic(6)",
        "abelian(2x4)",
        "elem(2^3)",
        "elem(3^3)",
        "sym(3)",
        "sym(4)",
        "sym(5)",
        "alt(5)",
        "dihedral(8)",
        "quaternion8",
        "product(cyclic(2),gendihedral(3))",
        "gendihedral(3)",
        "gendihedral(3^2)",
        "gendihedral(3^3)",
        "gendihedral(3^4)",
        "gendihedral(9)",
        "gendihedral(3x9)",
    ])
}

/// The groups named as having exactly five values.
pub fn remark_five_families() -> Vec<FamilySpec> {
    families(&[
        "cyclic(5)",
        "product(cyclic(2),gendihedral(3))",
        "sym(4)",
        "dihedral(8)",
        "quaternion8",
    ])
}

/// Every record of every catalog file under `paths`, in path order.
pub fn catalog_sources(paths: &[PathBuf]) -> Result<Vec<GroupSource>> {
    let mut out = Vec::new();
    for path in paths {
        for catalog in parse_path(path)? {
            let file = catalog
                .source
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_default();
            out.extend(catalog.records.into_iter().map(|record| GroupSource::Record {
                file: file.clone(),
                record,
            }));
        }
    }
    Ok(out)
}

/// Table and report of one group.
pub fn analyze_group(
    group: &FiniteGroup,
    seed: u64,
) -> Result<(CharacterTable, ClassificationReport)> {
    let table = dixon_schneider_with_seed(group, seed)?;
    let report = analyze(group, &table)?;
    Ok((table, report))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupStatus {
    Ok,
    /// Over the order cap; not counted as a failure.
    Skipped,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupOutcome {
    pub name: String,
    pub source: String,
    pub order: usize,
    pub status: GroupStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub num_classes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cv_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cv: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cd: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags: Option<StructureFlags>,
    pub verdicts: BTreeMap<Predicate, Verdict>,
    #[serde(skip)]
    pub report: Option<ClassificationReport>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FleetSummary {
    pub groups: usize,
    pub skipped: usize,
    pub errors: usize,
    pub failures: usize,
    pub warnings: usize,
    /// Non-abelian groups with exactly four values.
    pub four_value_groups: Vec<String>,
    /// Groups passing the structural test for `Dih C₃^r`.
    pub structural_matches: Vec<String>,
    /// 2-groups with exactly five values.
    pub five_value_two_groups: Vec<String>,
    pub cv_size_histogram: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FleetReport {
    pub schema_version: u32,
    pub config: RunConfig,
    pub predicates: Vec<Predicate>,
    pub groups: Vec<GroupOutcome>,
    /// Verdicts decided over the whole fleet.
    pub fleet: BTreeMap<Predicate, Verdict>,
    pub summary: FleetSummary,
}

impl FleetReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// No errors and no failing predicate. Warnings do not count.
    pub fn is_success(&self) -> bool {
        self.summary.errors == 0 && self.summary.failures == 0
    }

    pub fn reports(&self) -> impl Iterator<Item = &ClassificationReport> {
        self.groups.iter().filter_map(|g| g.report.as_ref())
    }
}

fn scan_one(source: &GroupSource, predicates: &[Predicate], config: &RunConfig) -> GroupOutcome {
    let mut outcome = GroupOutcome {
        name: match source {
            GroupSource::Family(spec) => spec.to_string(),
            GroupSource::Record { record, .. } => record.name.clone(),
        },
        source: source.describe(),
        order: 0,
        status: GroupStatus::Ok,
        error: None,
        num_classes: None,
        cv_size: None,
        cv: None,
        cd: None,
        flags: None,
        verdicts: BTreeMap::new(),
        report: None,
    };
    let result = source
        .load(config.order_cap)
        .and_then(|g| analyze_group(&g, config.seed).map(|(_, r)| r));
    match result {
        Ok(report) => {
            outcome.order = report.order;
            outcome.num_classes = Some(report.num_classes);
            outcome.cv_size = Some(report.profile.cv_size);
            outcome.cv = Some(report.profile.cv_pretty());
            outcome.cd = Some(report.profile.cd.iter().copied().collect());
            outcome.flags = Some(report.flags.clone());
            for &p in predicates.iter().filter(|p| p.is_per_group()) {
                outcome.verdicts.insert(p, evaluate(p, &report));
            }
            outcome.report = Some(report);
        }
        Err(e) => {
            if let GroupSource::Record { record, .. } = source {
                outcome.order = record.expected_order.unwrap_or(0);
            }
            outcome.status = match e {
                Error::ClosureExceedsCap { .. } | Error::OrderCapExceeded { .. } => {
                    GroupStatus::Skipped
                }
                _ => GroupStatus::Error,
            };
            outcome.error = Some(e.to_string());
        }
    }
    outcome
}

/// Analyzes every source on `config.jobs` worker threads and evaluates
/// `predicates`. Output order is (order, name, source) regardless of
/// scheduling.
pub fn scan(sources: &[GroupSource], predicates: &[Predicate], config: &RunConfig) -> FleetReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .expect("thread pool");
    let mut groups: Vec<GroupOutcome> = pool.install(|| {
        sources
            .par_iter()
            .map(|s| scan_one(s, predicates, config))
            .collect()
    });
    groups.sort_by(|a, b| (a.order, &a.name, &a.source).cmp(&(b.order, &b.name, &b.source)));

    let mut fleet = BTreeMap::new();
    if predicates.contains(&Predicate::RemarkFive) {
        let named: Vec<GroupSource> = remark_five_families()
            .into_iter()
            .map(GroupSource::Family)
            .collect();
        let outcomes: Vec<GroupOutcome> = pool.install(|| {
            named
                .par_iter()
                .map(|s| scan_one(s, &[], config))
                .collect()
        });
        let verdict = match outcomes.iter().find(|o| o.status != GroupStatus::Ok) {
            Some(bad) => Verdict::Fail {
                witness: format!(
                    "{}: {}",
                    bad.name,
                    bad.error.as_deref().unwrap_or("not analyzed")
                ),
            },
            None => {
                let reports: Vec<ClassificationReport> =
                    outcomes.into_iter().filter_map(|o| o.report).collect();
                check_remark_five(&reports)
            }
        };
        fleet.insert(Predicate::RemarkFive, verdict);
    }
    if predicates.contains(&Predicate::RemarkSolvable) {
        let warned: Vec<String> = groups
            .iter()
            .filter(|g| g.verdicts.get(&Predicate::RemarkSolvable).is_some_and(Verdict::is_warn))
            .map(|g| g.name.clone())
            .collect();
        let verdict = if warned.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Warn {
                witness: format!("not solvable with fewer than eight values: {}", warned.join(", ")),
            }
        };
        fleet.insert(Predicate::RemarkSolvable, verdict);
    }

    let mut summary = FleetSummary {
        groups: groups.len(),
        ..FleetSummary::default()
    };
    for g in &groups {
        match g.status {
            GroupStatus::Skipped => summary.skipped += 1,
            GroupStatus::Error => summary.errors += 1,
            GroupStatus::Ok => {}
        }
        summary.failures += g.verdicts.values().filter(|v| v.is_fail()).count();
        summary.warnings += g.verdicts.values().filter(|v| v.is_warn()).count();
        if let Some(r) = &g.report {
            *summary.cv_size_histogram.entry(r.profile.cv_size).or_default() += 1;
            if !r.flags.is_abelian && r.profile.cv_size == 4 {
                summary.four_value_groups.push(g.name.clone());
            }
            if r.flags.is_gendihedral_elem_abelian_3 {
                summary.structural_matches.push(g.name.clone());
            }
            if r.flags.is_two_group && r.profile.cv_size == 5 {
                summary.five_value_two_groups.push(g.name.clone());
            }
        }
    }
    summary.failures += fleet.values().filter(|v| v.is_fail()).count();

    FleetReport {
        schema_version: REPORT_SCHEMA_VERSION,
        config: config.clone(),
        predicates: predicates.to_vec(),
        groups,
        fleet,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_scan() {
        let sources: Vec<GroupSource> = families(&["sym(3)", "cyclic(4)", "quaternion8"])
            .into_iter()
            .map(GroupSource::Family)
            .collect();
        let report = scan(&sources, &Predicate::ALL, &RunConfig::default());
        assert!(report.is_success(), "{}", report.to_json());
        let names: Vec<&str> = report.groups.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["cyclic(4)", "sym(3)", "quaternion8"]);
        assert_eq!(report.summary.four_value_groups, ["sym(3)"]);
        assert!(report.fleet[&Predicate::RemarkFive].is_pass());
    }

    #[test]
    fn cap_skips() {
        let sources = vec![GroupSource::Family(FamilySpec::Sym(5))];
        let config = RunConfig::new(100, 1, 2).unwrap();
        let report = scan(&sources, &[Predicate::Theorem], &config);
        assert_eq!(report.groups[0].status, GroupStatus::Skipped);
        assert!(report.is_success());
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::new(0, 1, 1).is_err());
        assert!(RunConfig::new(1, 1, 0).is_err());
    }
}
