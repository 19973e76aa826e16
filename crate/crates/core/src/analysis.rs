//! Character value sets and the structural statements tested against them.
//!
//! [`analyze`] turns a group and its table into a [`ClassificationReport`];
//! the `check_*` functions read a report and return a [`Verdict`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chartab::{verify_orthogonality, CharacterTable, OrthogonalityReport};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Origin, Subgroup};

/// `cv(G)`, `cd(G)` and `b(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueProfile {
    /// Conductor every value lives under, the group exponent.
    pub conductor: usize,
    pub cv: BTreeSet<Cyclotomic>,
    pub cv_size: usize,
    pub cd: BTreeSet<u64>,
    pub b: u64,
    pub has_zero: bool,
}

impl ValueProfile {
    /// Values in display form, in the same order as `cv`.
    pub fn cv_pretty(&self) -> Vec<String> {
        self.cv.iter().map(Cyclotomic::pretty).collect()
    }

    /// Whether `cv` is exactly the given set of rational integers.
    pub fn cv_is_integers(&self, values: &[i64]) -> bool {
        let want: BTreeSet<Cyclotomic> = values.iter().map(|&v| Cyclotomic::from_int(v)).collect();
        self.cv == want
    }
}

pub fn value_profile(table: &CharacterTable) -> ValueProfile {
    let cv: BTreeSet<Cyclotomic> = table.values().iter().flatten().cloned().collect();
    let cd: BTreeSet<u64> = table.degrees().iter().copied().collect();
    ValueProfile {
        conductor: table.exponent(),
        cv_size: cv.len(),
        has_zero: cv.iter().any(Cyclotomic::is_zero),
        b: cd.iter().copied().max().unwrap_or(1),
        cd,
        cv,
    }
}

/// Facts about one involution class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionClass {
    pub class: usize,
    pub label: String,
    /// `|C_G(t)|` counted in the group.
    pub centralizer_order: usize,
    /// `Σ_χ |χ(t)|²` read from the table.
    pub table_centralizer_order: Option<i64>,
    /// Non-linear characters with `χ(t) ≠ 0`.
    pub nonlinear_nonzero: Vec<usize>,
}

/// Structural data of a group, independent of its character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub is_trivial: bool,
    pub is_abelian: bool,
    pub exponent: usize,
    pub is_elem_abelian_2: bool,
    pub is_elem_abelian_3: bool,
    pub is_two_group: bool,
    pub is_solvable: bool,
    pub derived_order: usize,
    pub odd_core_order: usize,
    pub derived_equals_odd_core: bool,
    pub sylow2_order: usize,
    /// Common `|C_G(t)|` over all involutions, if there are involutions and
    /// they all agree.
    pub all_involution_centralizers_order: Option<usize>,
    pub involution_centralizers_are_2_groups: bool,
    pub involutions_invert_odd_core: bool,
    pub abelianization_is_elem_abelian_2: bool,
    pub quotient_by_odd_core_is_2group: bool,
    pub odd_core_is_elem_abelian_3: bool,
    pub is_gendihedral_elem_abelian_3: bool,
}

/// Everything the predicates need about one group.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub name: String,
    pub order: usize,
    pub origin: Origin,
    pub num_classes: usize,
    pub profile: ValueProfile,
    pub flags: StructureFlags,
    pub involution_classes: Vec<InvolutionClass>,
    /// `|C_G(g_k)|` per class, counted in the group.
    pub class_centralizers: Vec<usize>,
    pub orthogonality: OrthogonalityReport,
}

/// Outcome of one predicate on one group or on the fleet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    Warn { witness: String },
    NotApplicable { reason: String },
}

impl Verdict {
    fn check(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail { witness: witness() }
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn is_warn(&self) -> bool {
        matches!(self, Verdict::Warn { .. })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail { witness } => write!(f, "FAIL ({witness})"),
            Verdict::Warn { witness } => write!(f, "WARN ({witness})"),
            Verdict::NotApplicable { reason } => write!(f, "n/a ({reason})"),
        }
    }
}

/// Named predicates accepted by scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    LemmaZero,
    LemmaCvAbelian,
    PropVeryFew,
    FourValueLemmas,
    Theorem,
    RemarkFive,
    RemarkSolvable,
    Orthogonality,
}

impl Predicate {
    pub const ALL: [Predicate; 8] = [
        Predicate::LemmaZero,
        Predicate::LemmaCvAbelian,
        Predicate::PropVeryFew,
        Predicate::FourValueLemmas,
        Predicate::Theorem,
        Predicate::RemarkFive,
        Predicate::RemarkSolvable,
        Predicate::Orthogonality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::LemmaZero => "lemma-zero",
            Predicate::LemmaCvAbelian => "lemma-cv-abelian",
            Predicate::PropVeryFew => "prop-very-few",
            Predicate::FourValueLemmas => "four-value-lemmas",
            Predicate::Theorem => "theorem",
            Predicate::RemarkFive => "remark-five",
            Predicate::RemarkSolvable => "remark-solvable",
            Predicate::Orthogonality => "orthogonality",
        }
    }

    /// Whether the predicate is decided per group (as opposed to once for
    /// the whole fleet).
    pub fn is_per_group(self) -> bool {
        self != Predicate::RemarkFive
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| Error::Spec(format!("unknown predicate {s:?}")))
    }
}

/// Parses a comma separated predicate list; `all` selects every predicate.
pub fn parse_predicates(list: &str) -> Result<Vec<Predicate>> {
    if list.trim() == "all" {
        return Ok(Predicate::ALL.to_vec());
    }
    let mut out: Vec<Predicate> = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// `G/N` on canonical coset representatives (the smallest index in each
/// coset), numbered in increasing order of representative.
pub fn quotient(group: &FiniteGroup, n: &Subgroup) -> Result<FiniteGroup> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let order = group.order();
    let mut coset_rep = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset_rep[x] != usize::MAX {
            continue;
        }
        reps.push(x);
        for &m in n.members() {
            coset_rep[group.mul(x, m)] = x;
        }
    }
    let index_of: BTreeMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let k = reps.len();
    let mut table = vec![0u32; k * k];
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            table[i * k + j] = index_of[&coset_rep[group.mul(x, y)]] as u32;
        }
    }
    let mut generators: Vec<usize> = group
        .generators()
        .iter()
        .map(|&g| index_of[&coset_rep[g]])
        .filter(|&g| g != 0)
        .collect();
    generators.sort_unstable();
    generators.dedup();
    let labels = reps.iter().map(|&r| format!("{}N", group.label(r))).collect();
    FiniteGroup::from_table(
        format!("{}/N{}", group.name(), n.order()),
        table,
        generators,
        labels,
        Origin::Quotient {
            parent: group.name().to_string(),
        },
    )
}

/// The test for `G ≅ Dih C₃^r`: `|G| = 2·3^r` with `r ≥ 1`, a Sylow
/// 2-subgroup of order 2, `O(G) = G′` elementary abelian of order `3^r`, and
/// every involution inverting `O(G)`.
fn structural_test(
    group: &FiniteGroup,
    odd_core: &Subgroup,
    derived: &Subgroup,
    sylow2_order: usize,
    inverts: bool,
    odd_core_elem_3: bool,
) -> bool {
    let n = group.order();
    n.is_multiple_of(2)
        && n > 2
        && is_power_of(n / 2, 3)
        && sylow2_order == 2
        && odd_core.members() == derived.members()
        && odd_core.order() == n / 2
        && odd_core_elem_3
        && inverts
}

fn structure_flags(group: &FiniteGroup) -> Result<StructureFlags> {
    let n = group.order();
    let is_abelian = group.is_abelian();
    let derived = group.derived_subgroup();
    let odd_core = group.odd_core();
    let sylow2_order = 1usize << n.trailing_zeros();
    let involutions = group.involutions();
    let centralizers: BTreeSet<usize> = involutions
        .iter()
        .map(|&t| group.centralizer(t).order())
        .collect();
    let mut inverts = true;
    for &t in &involutions {
        if !group.inverts_subgroup(t, &odd_core)? {
            inverts = false;
            break;
        }
    }
    let odd_core_elem_3 = odd_core.order() > 1
        && odd_core.members()[1..]
            .iter()
            .all(|&x| group.element_order(x) == 3)
        && odd_core.members().iter().all(|&x| {
            odd_core
                .generators()
                .iter()
                .all(|&y| group.mul(x, y) == group.mul(y, x))
        });
    let abelianization = quotient(group, &derived)?;
    let sylow2_order_found = if sylow2_order == 1 {
        1
    } else {
        group.sylow_two().order()
    };
    Ok(StructureFlags {
        is_trivial: n == 1,
        is_abelian,
        exponent: group.exponent(),
        is_elem_abelian_2: n > 1 && group.is_elementary_abelian(2),
        is_elem_abelian_3: n > 1 && group.is_elementary_abelian(3),
        is_two_group: is_power_of(n, 2),
        is_solvable: group.is_solvable(),
        derived_order: derived.order(),
        odd_core_order: odd_core.order(),
        derived_equals_odd_core: derived.members() == odd_core.members(),
        sylow2_order: sylow2_order_found,
        all_involution_centralizers_order: if centralizers.len() == 1 {
            centralizers.first().copied()
        } else {
            None
        },
        involution_centralizers_are_2_groups: centralizers.iter().all(|&c| is_power_of(c, 2)),
        involutions_invert_odd_core: inverts,
        abelianization_is_elem_abelian_2: abelianization.order() > 1
            && abelianization.is_elementary_abelian(2),
        quotient_by_odd_core_is_2group: is_power_of(n / odd_core.order(), 2),
        odd_core_is_elem_abelian_3: odd_core_elem_3,
        is_gendihedral_elem_abelian_3: structural_test(
            group,
            &odd_core,
            &derived,
            sylow2_order_found,
            inverts,
            odd_core_elem_3,
        ),
    })
}

/// Full report for `group` and its character table.
pub fn analyze(group: &FiniteGroup, table: &CharacterTable) -> Result<ClassificationReport> {
    let profile = value_profile(table);
    let flags = structure_flags(group)?;
    let classes = table.classes();
    let class_centralizers: Vec<usize> = classes
        .representatives()
        .iter()
        .map(|&g| group.centralizer(g).order())
        .collect();
    let orthogonality = verify_orthogonality(table);
    let involution_classes = (0..classes.len())
        .filter(|&k| classes.element_orders()[k] == 2)
        .map(|k| InvolutionClass {
            class: k,
            label: table.class_labels()[k].clone(),
            centralizer_order: class_centralizers[k],
            table_centralizer_order: orthogonality.centralizer_orders.get(k).copied().flatten(),
            nonlinear_nonzero: (0..table.num_classes())
                .filter(|&i| table.degrees()[i] > 1 && !table.value(i, k).is_zero())
                .collect(),
        })
        .collect();
    Ok(ClassificationReport {
        name: group.name().to_string(),
        order: group.order(),
        origin: group.origin().clone(),
        num_classes: table.num_classes(),
        profile,
        flags,
        involution_classes,
        class_centralizers,
        orthogonality,
    })
}

/// `0 ∈ cv(G)` exactly when `G` is non-abelian.
pub fn check_lemma_zero(report: &ClassificationReport) -> Verdict {
    let p = &report.profile;
    Verdict::check(p.has_zero != report.flags.is_abelian, || {
        format!(
            "abelian={} but 0 in cv is {}",
            report.flags.is_abelian, p.has_zero
        )
    })
}

/// For abelian `G`, `|cv(G)|` equals the exponent.
pub fn check_lemma_cv_count_abelian(report: &ClassificationReport) -> Result<Verdict> {
    if !report.flags.is_abelian {
        return Err(Error::NotAbelian);
    }
    let (size, exp) = (report.profile.cv_size, report.flags.exponent);
    Ok(Verdict::check(size == exp, || {
        format!("|cv| = {size} but exponent = {exp}")
    }))
}

/// `|cv| = 1, 2, 3` exactly for the trivial, elementary abelian 2 and
/// elementary abelian 3 groups; for abelian groups `|cv| = 4` exactly at
/// exponent 4.
pub fn check_prop_very_few(report: &ClassificationReport) -> Verdict {
    let f = &report.flags;
    let size = report.profile.cv_size;
    let mut broken = Vec::new();
    if (size == 1) != f.is_trivial {
        broken.push("|cv| = 1 iff trivial");
    }
    if (size == 2) != f.is_elem_abelian_2 {
        broken.push("|cv| = 2 iff elementary abelian 2-group");
    }
    if (size == 3) != f.is_elem_abelian_3 {
        broken.push("|cv| = 3 iff elementary abelian 3-group");
    }
    if f.is_abelian && (size == 4) != (f.exponent == 4) {
        broken.push("abelian: |cv| = 4 iff exponent 4");
    }
    Verdict::check(broken.is_empty(), || {
        format!("|cv| = {size}: {}", broken.join("; "))
    })
}

/// Consequences for a non-abelian group with exactly four values.
pub fn check_four_value_lemmas(report: &ClassificationReport) -> Result<Verdict> {
    let f = &report.flags;
    let p = &report.profile;
    if f.is_abelian || p.cv_size != 4 {
        return Err(Error::Precondition(format!(
            "needs a non-abelian group with |cv| = 4, got abelian={} |cv|={}",
            f.is_abelian, p.cv_size
        )));
    }
    let index = report.order / f.derived_order;
    let b = p.b;
    let mut broken: Vec<String> = Vec::new();
    if p.cd != BTreeSet::from([1, b]) {
        broken.push(format!("cd = {:?}", p.cd));
    }
    if !(index as u64).is_multiple_of(b) {
        broken.push(format!("b = {b} does not divide |G:G'| = {index}"));
    }
    if !p.cv_is_integers(&[-1, 0, 1, b as i64]) {
        broken.push(format!("cv = {{{}}}", p.cv_pretty().join(", ")));
    }
    if !f.abelianization_is_elem_abelian_2 {
        broken.push("G/G' is not a non-trivial elementary abelian 2-group".into());
    }
    for inv in &report.involution_classes {
        if !is_power_of(inv.centralizer_order, 2) || inv.centralizer_order != index {
            broken.push(format!(
                "|C_G({})| = {} but |G:G'| = {index}",
                inv.label, inv.centralizer_order
            ));
        }
        if let Some(&i) = inv.nonlinear_nonzero.first() {
            broken.push(format!("character {i} is nonzero at involution {}", inv.label));
        }
    }
    if report.involution_classes.is_empty() {
        broken.push("no involutions".into());
    }
    if !f.quotient_by_odd_core_is_2group {
        broken.push("G/O(G) is not a 2-group".into());
    }
    if !f.derived_equals_odd_core {
        broken.push(format!(
            "|G'| = {} but |O(G)| = {}",
            f.derived_order, f.odd_core_order
        ));
    }
    if !f.involutions_invert_odd_core {
        broken.push("an involution does not invert O(G)".into());
    }
    Ok(Verdict::check(broken.is_empty(), || broken.join("; ")))
}

/// Non-abelian with `|cv| = 4` exactly when the structural test for
/// `Dih C₃^r` holds.
pub fn check_theorem(report: &ClassificationReport) -> Verdict {
    let four = !report.flags.is_abelian && report.profile.cv_size == 4;
    let structural = report.flags.is_gendihedral_elem_abelian_3;
    Verdict::check(four == structural, || {
        format!(
            "non-abelian with four values = {four}, structural test = {structural} (|cv| = {})",
            report.profile.cv_size
        )
    })
}

/// The named five-value groups have exactly five values.
pub fn check_remark_five(reports: &[ClassificationReport]) -> Verdict {
    let off: Vec<String> = reports
        .iter()
        .filter(|r| r.profile.cv_size != 5)
        .map(|r| format!("{} has |cv| = {}", r.name, r.profile.cv_size))
        .collect();
    if reports.is_empty() {
        return Verdict::NotApplicable {
            reason: "no groups given".into(),
        };
    }
    Verdict::check(off.is_empty(), || off.join("; "))
}

/// Groups with fewer than eight values should be solvable. A
/// counterexample is reported as a warning.
pub fn check_remark_solvable(reports: &[ClassificationReport]) -> Verdict {
    let off: Vec<String> = reports
        .iter()
        .filter(|r| r.profile.cv_size < 8 && !r.flags.is_solvable)
        .map(|r| format!("{} is not solvable with |cv| = {}", r.name, r.profile.cv_size))
        .collect();
    if off.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Warn {
            witness: off.join("; "),
        }
    }
}

/// Table orthogonality, with each column norm matching the centralizer
/// order counted in the group.
pub fn check_orthogonality(report: &ClassificationReport) -> Verdict {
    let o = &report.orthogonality;
    if !o.is_ok() {
        return Verdict::Fail {
            witness: format!(
                "row violations {:?}, column violations {:?}{}",
                o.row_violations,
                o.column_violations,
                o.malformed.as_deref().map(|m| format!(", {m}")).unwrap_or_default()
            ),
        };
    }
    let off: Vec<String> = report
        .class_centralizers
        .iter()
        .zip(&o.centralizer_orders)
        .enumerate()
        .filter(|(_, (&c, t))| **t != Some(c as i64))
        .map(|(k, (c, t))| format!("class {k}: |C_G| = {c}, table gives {t:?}"))
        .collect();
    Verdict::check(off.is_empty(), || off.join("; "))
}

/// Runs a per-group predicate. Predicates whose hypotheses fail are
/// reported as not applicable.
pub fn evaluate(predicate: Predicate, report: &ClassificationReport) -> Verdict {
    let na = |e: Error| Verdict::NotApplicable {
        reason: e.to_string(),
    };
    match predicate {
        Predicate::LemmaZero => check_lemma_zero(report),
        Predicate::LemmaCvAbelian => check_lemma_cv_count_abelian(report).unwrap_or_else(na),
        Predicate::PropVeryFew => check_prop_very_few(report),
        Predicate::FourValueLemmas => check_four_value_lemmas(report).unwrap_or_else(na),
        Predicate::Theorem => check_theorem(report),
        Predicate::RemarkSolvable => check_remark_solvable(std::slice::from_ref(report)),
        Predicate::Orthogonality => check_orthogonality(report),
        Predicate::RemarkFive => Verdict::NotApplicable {
            reason: "decided over the named groups".into(),
        },
    }
}
