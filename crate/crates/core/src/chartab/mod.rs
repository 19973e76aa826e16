//! Exact character tables.
//!
//! [`dixon_schneider`] computes the table of any enumerated group;
//! [`closed_form_dihedral_table`] writes down the table of `Dih A` for odd
//! abelian `A` directly. Both produce a [`CharacterTable`] in the same
//! canonical row and column order, and both are certified by
//! [`verify_orthogonality`].

mod class_matrices;
mod closed_form;
mod dixon;
mod orthogonality;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::group::ConjugacyData;

pub use class_matrices::{class_matrices, ClassMatrixData};
pub use closed_form::closed_form_dihedral_table;
pub use dixon::{dixon_schneider, dixon_schneider_with_seed, find_prime, DEFAULT_SEED};
pub use orthogonality::{verify_orthogonality, verify_orthogonality_raw, OrthogonalityReport};

/// Version tag of the machine-readable table record.
pub const TABLE_SCHEMA_VERSION: u32 = 1;

/// How a table was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum TableSource {
    DixonSchneider { prime: u64, seed: u64 },
    ClosedFormDihedral,
}

/// Irreducible characters (rows) by conjugacy classes (columns).
///
/// Rows are sorted by degree, with the principal character first among the
/// linear characters and ties broken by the serialized row. Columns follow
/// the canonical class order of [`ConjugacyData`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group_name: String,
    group_order: usize,
    exponent: usize,
    classes: ConjugacyData,
    class_labels: Vec<String>,
    values: Vec<Vec<Cyclotomic>>,
    degrees: Vec<u64>,
    source: TableSource,
}

impl CharacterTable {
    /// Assembles a table and puts the rows in canonical order. Each row's
    /// first entry must be its degree.
    pub(crate) fn new(
        group_name: String,
        group_order: usize,
        exponent: usize,
        classes: ConjugacyData,
        class_labels: Vec<String>,
        rows: Vec<Vec<Cyclotomic>>,
        source: TableSource,
    ) -> Self {
        let mut keyed: Vec<(u64, bool, Vec<String>, Vec<Cyclotomic>)> = rows
            .into_iter()
            .map(|row| {
                let degree = row[0].as_i64().and_then(|d| u64::try_from(d).ok()).unwrap_or(0);
                let principal = row.iter().all(|v| v.as_i64() == Some(1));
                let key = row
                    .iter()
                    .map(|v| serde_json::to_string(v).expect("cyclotomic serializes"))
                    .collect();
                (degree, !principal, key, row)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        let degrees = keyed.iter().map(|k| k.0).collect();
        let values = keyed.into_iter().map(|k| k.3).collect();
        CharacterTable {
            group_name,
            group_order,
            exponent,
            classes,
            class_labels,
            values,
            degrees,
            source,
        }
    }

    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn classes(&self) -> &ConjugacyData {
        &self.classes
    }

    pub fn class_labels(&self) -> &[String] {
        &self.class_labels
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.values[i]
    }

    pub fn value(&self, character: usize, class: usize) -> &Cyclotomic {
        &self.values[character][class]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn source(&self) -> &TableSource {
        &self.source
    }

    /// Number of linear characters, `|G : G′|`.
    pub fn linear_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    /// Machine-readable form.
    pub fn to_record(&self) -> TableRecord {
        TableRecord {
            schema_version: TABLE_SCHEMA_VERSION,
            group: self.group_name.clone(),
            order: self.group_order,
            exponent: self.exponent,
            source: Some(self.source.clone()),
            classes: (0..self.num_classes())
                .map(|k| ClassRecord {
                    label: self.class_labels[k].clone(),
                    size: self.classes.class_sizes()[k],
                    element_order: self.classes.element_orders()[k],
                })
                .collect(),
            degrees: self.degrees.clone(),
            characters: self.values.clone(),
        }
    }
}

/// Whether two tables agree up to a permutation of rows and columns.
///
/// When both tables describe the same enumerated group (identical class
/// partitions) the columns are matched class by class; otherwise columns
/// are matched greedily by their (class size, element order, sorted
/// values) signature. Rows are then compared as multisets.
pub fn tables_equivalent(a: &CharacterTable, b: &CharacterTable) -> bool {
    if a.group_order != b.group_order || a.num_classes() != b.num_classes() {
        return false;
    }
    let r = a.num_classes();
    let same_partition = a.classes.class_of.len() == b.classes.class_of.len()
        && (0..r).all(|k| {
            let members = a.classes.members(k);
            !members.is_empty() && {
                let kb = b.classes.class_of(members[0]);
                b.classes.members(kb) == members
            }
        });
    let column_map: Vec<usize> = if same_partition {
        (0..r)
            .map(|k| b.classes.class_of(a.classes.members(k)[0]))
            .collect()
    } else {
        let signature = |t: &CharacterTable, k: usize| {
            let mut col: Vec<Cyclotomic> = t.values.iter().map(|row| row[k].clone()).collect();
            col.sort();
            (t.classes.class_sizes()[k], t.classes.element_orders()[k], col)
        };
        let mut pool: HashMap<_, Vec<usize>> = HashMap::new();
        for k in 0..r {
            pool.entry(signature(b, k)).or_default().push(k);
        }
        let mut map = Vec::with_capacity(r);
        for k in 0..r {
            match pool.get_mut(&signature(a, k)).and_then(Vec::pop) {
                Some(kb) => map.push(kb),
                None => return false,
            }
        }
        map
    };
    let mut rows_a: Vec<Vec<Cyclotomic>> = a.values.clone();
    let mut rows_b: Vec<Vec<Cyclotomic>> = b
        .values
        .iter()
        .map(|row| column_map.iter().map(|&kb| row[kb].clone()).collect())
        .collect();
    rows_a.sort();
    rows_b.sort();
    rows_a == rows_b
}

/// Multiset of per-row `(degree, sorted values)` signatures.
pub fn row_signatures(t: &CharacterTable) -> Vec<(u64, Vec<Cyclotomic>)> {
    let mut sigs: Vec<(u64, Vec<Cyclotomic>)> = t
        .values
        .iter()
        .zip(&t.degrees)
        .map(|(row, &d)| {
            let mut v = row.clone();
            v.sort();
            (d, v)
        })
        .collect();
    sigs.sort();
    sigs
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub label: String,
    pub size: usize,
    pub element_order: usize,
}

/// Serialized character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub schema_version: u32,
    pub group: String,
    pub order: usize,
    pub exponent: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<TableSource>,
    pub classes: Vec<ClassRecord>,
    pub degrees: Vec<u64>,
    pub characters: Vec<Vec<Cyclotomic>>,
}

impl TableRecord {
    /// Exact orthogonality check of a possibly externally supplied table.
    pub fn verify(&self) -> OrthogonalityReport {
        let sizes: Vec<usize> = self.classes.iter().map(|c| c.size).collect();
        verify_orthogonality_raw(self.order, &sizes, &self.characters)
    }
}
