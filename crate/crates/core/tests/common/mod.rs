//! Shared fixtures and brute-force oracles. The oracles deliberately avoid
//! the library's subgroup and class routines: they recompute classes,
//! subgroups and products by exhaustive scans over the Cayley table.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};
use std::path::PathBuf;

use charval_core::catalog::{load_group, parse_path};
use charval_core::fleet::{catalog_sources, default_families, GroupSource};
use charval_core::group::{ConjugacyData, FiniteGroup, DEFAULT_ORDER_CAP};

pub fn catalog_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog")
}

/// Catalog records plus the built-in families.
pub fn fleet_sources() -> Vec<GroupSource> {
    let mut sources = catalog_sources(&[catalog_dir()]).expect("bundled catalog parses");
    sources.extend(default_families().into_iter().map(GroupSource::Family));
    sources
}

/// Every bundled catalog group with order at most `max`.
pub fn catalog_groups(max: usize) -> Vec<FiniteGroup> {
    let mut out = Vec::new();
    for catalog in parse_path(catalog_dir()).unwrap() {
        let file = catalog.source.as_ref().unwrap().display().to_string();
        for r in &catalog.records {
            if r.expected_order.is_some_and(|n| n <= max) {
                out.push(load_group(r, &file, DEFAULT_ORDER_CAP).unwrap());
            }
        }
    }
    out
}

/// `a_ijk` by a triple loop over `K_i × K_j`, indexed like the library.
pub fn naive_structure_constants(g: &FiniteGroup, c: &ConjugacyData) -> Vec<u32> {
    let r = c.len();
    let mut out = vec![0u32; r * r * r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let rep = c.representatives()[k];
                let mut count = 0;
                for &x in c.members(i) {
                    for &y in c.members(j) {
                        if g.mul(x, y) == rep {
                            count += 1;
                        }
                    }
                }
                out[(i * r + j) * r + k] = count;
            }
        }
    }
    out
}

fn oracle_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut done = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if done[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|h| g.mul(g.mul(g.inv(h), x), h)).collect();
        for &y in &class {
            done[y] = true;
        }
        out.push(class.into_iter().collect());
    }
    out
}

/// Smallest subset containing `seed` closed under multiplication.
fn oracle_closure(g: &FiniteGroup, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    set.insert(0);
    let mut queue: VecDeque<usize> = set.iter().copied().collect();
    let gens: Vec<usize> = seed.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                queue.push_back(y);
            }
        }
    }
    set
}

/// All normal subgroups: start from the trivial group and repeatedly join
/// a conjugacy class, collecting every distinct result.
pub fn all_normal_subgroups(g: &FiniteGroup) -> Vec<BTreeSet<usize>> {
    let classes = oracle_classes(g);
    let trivial = BTreeSet::from([0usize]);
    let mut seen = BTreeSet::from([trivial.clone()]);
    let mut queue = VecDeque::from([trivial]);
    while let Some(n) = queue.pop_front() {
        for c in &classes {
            if n.contains(&c[0]) {
                continue;
            }
            let mut seed = n.clone();
            seed.extend(c.iter().copied());
            let m = oracle_closure(g, &seed);
            if seen.insert(m.clone()) {
                queue.push_back(m);
            }
        }
    }
    seen.into_iter().collect()
}

/// The largest odd-order normal subgroup, checked to contain all others.
pub fn oracle_odd_core(g: &FiniteGroup) -> BTreeSet<usize> {
    let odd: Vec<BTreeSet<usize>> = all_normal_subgroups(g)
        .into_iter()
        .filter(|n| n.len() % 2 == 1)
        .collect();
    let best = odd.iter().max_by_key(|n| n.len()).unwrap().clone();
    assert!(odd.iter().all(|n| n.is_subset(&best)), "{}: odd normal subgroups not nested", g.name());
    best
}

/// Normality by conjugating every member by every element.
pub fn oracle_is_normal(g: &FiniteGroup, members: &[usize]) -> bool {
    let set: BTreeSet<usize> = members.iter().copied().collect();
    (0..g.order()).all(|h| members.iter().all(|&x| set.contains(&g.mul(g.mul(g.inv(h), x), h))))
}
