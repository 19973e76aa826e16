mod common;

use charval_core::analysis::value_profile;
use charval_core::chartab::{
    closed_form_dihedral_table, dixon_schneider, dixon_schneider_with_seed, row_signatures,
    tables_equivalent, verify_orthogonality, TableRecord,
};
use charval_core::constructions::{abelian, generalized_dihedral, AbelianSpec, Builder};
use charval_core::cyclotomic::Cyclotomic;
use charval_core::family::FamilySpec;
use charval_core::group::{close_permutations, FiniteGroup};
use proptest::prelude::*;

use common::catalog_groups;

/// Invariant factor lists `d1 | d2 | ... ` with product `n`, all `≥ 2`.
fn invariant_factors(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(acc.clone());
            return;
        }
        for d in min.max(2)..=rest {
            if rest.is_multiple_of(d) && acc.last().is_none_or(|&l| d % l == 0) {
                acc.push(d);
                go(rest / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out
}

#[test]
fn engine_tables_are_certified() {
    let mut groups = catalog_groups(63);
    for s in ["sym(5)", "gendihedral(3^4)", "product(sym(3),sym(3))", "alt(5)"] {
        groups.push(s.parse::<FamilySpec>().unwrap().build(&Builder::default()).unwrap());
    }
    for g in &groups {
        let t = dixon_schneider(g).unwrap();
        assert!(verify_orthogonality(&t).is_ok(), "{}", g.name());
        let n = g.order() as u64;
        assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), n);
        assert!(t.degrees().iter().all(|d| n.is_multiple_of(*d)));
        assert_eq!(t.linear_count(), g.order() / g.derived_subgroup().order(), "{}", g.name());
        assert!(t.row(0).iter().all(|v| v.as_i64() == Some(1)));
        for (row, &d) in t.values().iter().zip(t.degrees()) {
            assert_eq!(row[0].as_i64(), Some(d as i64));
            assert!(row.iter().all(|v| (t.exponent() as u32).is_multiple_of(v.conductor())));
        }
    }
}

#[test]
fn closed_form_matches_general_algorithm() {
    let mut count = 0;
    for n in (3..=81).step_by(2) {
        for factors in invariant_factors(n) {
            let a = abelian(&AbelianSpec::new(factors.clone()).unwrap()).unwrap();
            let closed = closed_form_dihedral_table(&a).unwrap();
            let ds = dixon_schneider(&generalized_dihedral(&a).unwrap()).unwrap();
            assert!(tables_equivalent(&closed, &ds), "{factors:?}");
            assert_eq!(row_signatures(&closed), row_signatures(&ds));
            assert_eq!(closed.num_classes(), (n + 3) / 2);
            assert!(verify_orthogonality(&closed).is_ok());
            count += 1;
        }
    }
    // 40 odd orders, with extra types at 9, 25, 27, 45, 49, 63, 75 and 81.
    assert!(count > 40);
}

#[test]
fn closed_form_examples() {
    let c3_2 = abelian(&AbelianSpec::new(vec![3, 3]).unwrap()).unwrap();
    let t = closed_form_dihedral_table(&c3_2).unwrap();
    assert_eq!(t.degrees(), &[1, 1, 2, 2, 2, 2]);
    for row in &t.values()[2..] {
        assert!(row.iter().all(|v| [2, -1, 0].contains(&v.as_i64().unwrap_or(99))));
    }
    let c9 = abelian(&AbelianSpec::new(vec![9]).unwrap()).unwrap();
    let t = closed_form_dihedral_table(&c9).unwrap();
    let z = Cyclotomic::from_exponents(9, [(1, 1), (8, 1)]);
    assert!(!z.is_rational());
    assert!(t.values().iter().flatten().any(|v| *v == z));
    assert_eq!(z.pretty(), "ζ9 + ζ9^8");
}

#[test]
fn s3_column_norms() {
    let g = "sym(3)".parse::<FamilySpec>().unwrap().build(&Builder::default()).unwrap();
    let t = dixon_schneider(&g).unwrap();
    let rep = verify_orthogonality(&t);
    assert_eq!(rep.centralizer_orders, vec![Some(6), Some(2), Some(3)]);
}

#[test]
fn mutated_record_fails_verification() {
    let g = "gendihedral(3^2)".parse::<FamilySpec>().unwrap().build(&Builder::default()).unwrap();
    let mut record = dixon_schneider(&g).unwrap().to_record();
    assert!(record.verify().is_ok());
    let json = serde_json::to_string(&record).unwrap();
    let back: TableRecord = serde_json::from_str(&json).unwrap();
    assert_eq!(back, record);
    record.characters[3][2] = Cyclotomic::from_int(5);
    assert!(!record.verify().is_ok());
}

fn relabel(g_gens: &[Vec<usize>], sigma: &[usize]) -> Vec<Vec<usize>> {
    // σ⁻¹ g σ acting on relabeled points.
    let n = sigma.len();
    let mut inv = vec![0; n];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    g_gens
        .iter()
        .map(|g| (0..n).map(|i| sigma[g[inv[i]]]).collect())
        .collect()
}

fn profile_of(g: &FiniteGroup, seed: u64) -> charval_core::analysis::ValueProfile {
    value_profile(&dixon_schneider_with_seed(g, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The same abstract group from relabeled and padded generator sets
    /// has the same value profile, and the seed does not matter.
    #[test]
    fn profile_is_invariant_under_relabeling(
        sigma in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
        extra in 0usize..3,
        seed in any::<u64>(),
    ) {
        // S4 x C2
        let base = vec![vec![1, 0, 2, 3, 4, 5], vec![1, 2, 3, 0, 4, 5], vec![0, 1, 2, 3, 5, 4]];
        let g1 = close_permutations(6, &base, 1000).unwrap();
        let mut gens = relabel(&base, &sigma);
        // Redundant generators: products of the existing ones.
        for k in 0..extra {
            let a = &gens[k % gens.len()];
            let b = &gens[(k + 1) % gens.len()];
            let ab: Vec<usize> = (0..6).map(|i| b[a[i]]).collect();
            gens.push(ab);
        }
        let g2 = close_permutations(6, &gens, 1000).unwrap();
        prop_assert_eq!(g1.order(), 48);
        prop_assert_eq!(profile_of(&g1, 7), profile_of(&g2, seed));
    }
}
