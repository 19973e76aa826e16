use rayon::prelude::*;

use crate::group::{ConjugacyData, FiniteGroup};

/// Class multiplication coefficients `a_ijk`: the number of pairs
/// `(x, y) ∈ K_i × K_j` with `xy` equal to the fixed representative of
/// `K_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMatrixData {
    r: usize,
    coeffs: Vec<u32>,
}

impl ClassMatrixData {
    pub fn num_classes(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.coeffs[(i * self.r + j) * self.r + k]
    }

    /// Matrix of multiplication by the class sum `K_j`:
    /// `M_j[i][k] = a_jik`, so `M_j ω = ω(K_j) ω` for every central
    /// character `ω`.
    pub fn class_matrix(&self, j: usize) -> Vec<Vec<u32>> {
        (0..self.r)
            .map(|i| (0..self.r).map(|k| self.get(j, i, k)).collect())
            .collect()
    }
}

/// For each target class `k` and each `x ∈ K_i`, the partner
/// `y = x⁻¹·rep_k` lands in exactly one class `j`; one pass over the group
/// per target class fills every coefficient.
pub fn class_matrices(group: &FiniteGroup, classes: &ConjugacyData) -> ClassMatrixData {
    let r = classes.len();
    let slices: Vec<Vec<u32>> = (0..r)
        .into_par_iter()
        .map(|k| {
            let rep = classes.representatives()[k];
            let mut slice = vec![0u32; r * r];
            for i in 0..r {
                for &x in classes.members(i) {
                    let y = group.mul(group.inv(x), rep);
                    slice[i * r + classes.class_of(y)] += 1;
                }
            }
            slice
        })
        .collect();
    let mut coeffs = vec![0u32; r * r * r];
    for (k, slice) in slices.iter().enumerate() {
        for ij in 0..r * r {
            coeffs[ij * r + k] = slice[ij];
        }
    }
    ClassMatrixData { r, coeffs }
}
