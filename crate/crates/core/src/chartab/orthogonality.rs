use num_integer::Integer;
use serde::Serialize;

use super::CharacterTable;
use crate::cyclotomic::{Accumulator, Cyclotomic};

/// Outcome of the exact row and column orthogonality checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    /// Character pairs `(i, j)`, `i ≤ j`, with `⟨χ_i, χ_j⟩ ≠ δ_ij`.
    pub row_violations: Vec<(usize, usize)>,
    /// Class pairs `(k, l)`, `k ≤ l`, violating the column relations.
    pub column_violations: Vec<(usize, usize)>,
    /// `Σ_χ |χ(g_k)|²` per class when it is a rational integer; equals
    /// `|C_G(g_k)|` on a correct table.
    pub centralizer_orders: Vec<Option<i64>>,
    /// Set when the table is not square or a class size does not divide
    /// the group order.
    pub malformed: Option<String>,
}

impl OrthogonalityReport {
    pub fn is_ok(&self) -> bool {
        self.row_violations.is_empty()
            && self.column_violations.is_empty()
            && self.malformed.is_none()
    }
}

pub fn verify_orthogonality(table: &CharacterTable) -> OrthogonalityReport {
    verify_orthogonality_raw(
        table.group_order(),
        table.classes().class_sizes(),
        table.values(),
    )
}

/// Checks `Σ_k h_k χ_i(g_k) χ_j(g_k)‾ = |G| δ_ij` and
/// `Σ_χ χ(g_k) χ(g_l)‾ = (|G| / h_k) δ_kl` in exact arithmetic.
pub fn verify_orthogonality_raw(
    order: usize,
    class_sizes: &[usize],
    values: &[Vec<Cyclotomic>],
) -> OrthogonalityReport {
    let mut report = OrthogonalityReport::default();
    let r = class_sizes.len();
    if values.len() != r || values.iter().any(|row| row.len() != r) {
        report.malformed = Some(format!(
            "expected a {r}x{r} table, found {} rows",
            values.len()
        ));
        return report;
    }
    if let Some(&h) = class_sizes.iter().find(|&&h| h == 0 || !order.is_multiple_of(h)) {
        report.malformed = Some(format!("class size {h} does not divide {order}"));
        return report;
    }
    if class_sizes.iter().sum::<usize>() != order {
        report.malformed = Some("class sizes do not sum to the group order".into());
        return report;
    }
    let e = values
        .iter()
        .flatten()
        .fold(1u32, |acc, v| acc.lcm(&v.conductor()));
    let conj: Vec<Vec<Cyclotomic>> = values
        .iter()
        .map(|row| row.iter().map(Cyclotomic::conjugate).collect())
        .collect();

    for i in 0..r {
        for j in i..r {
            let mut acc = Accumulator::new(e);
            for k in 0..r {
                acc.add_product(class_sizes[k] as i64, &values[i][k], &conj[j][k]);
            }
            let expected = if i == j { order as i64 } else { 0 };
            if acc.finish().as_i64() != Some(expected) {
                report.row_violations.push((i, j));
            }
        }
    }
    for k in 0..r {
        for l in k..r {
            let mut acc = Accumulator::new(e);
            for i in 0..r {
                acc.add_product(1, &values[i][k], &conj[i][l]);
            }
            let sum = acc.finish();
            if k == l {
                report.centralizer_orders.push(sum.as_i64());
            }
            let expected = if k == l { (order / class_sizes[k]) as i64 } else { 0 };
            if sum.as_i64() != Some(expected) {
                report.column_violations.push((k, l));
            }
        }
    }
    report
}
