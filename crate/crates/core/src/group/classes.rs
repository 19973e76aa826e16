use std::collections::VecDeque;

use serde::Serialize;

use super::FiniteGroup;

/// Conjugacy classes in canonical order.
///
/// Classes are sorted by (representative order, class size, representative
/// index), where the representative is the smallest index in the class. The
/// identity class is therefore always class 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyData {
    pub(crate) class_of: Vec<usize>,
    pub(crate) representatives: Vec<usize>,
    pub(crate) class_sizes: Vec<usize>,
    pub(crate) inverse_class: Vec<usize>,
    pub(crate) element_orders: Vec<usize>,
    #[serde(skip)]
    pub(crate) members: Vec<Vec<usize>>,
}

impl ConjugacyData {
    /// Builds class data from an explicit partition of `0..n` into classes,
    /// re-sorting into canonical order. `inverse` maps each element to its
    /// inverse and `order` to its element order.
    pub fn from_partition(
        mut classes: Vec<Vec<usize>>,
        inverse: impl Fn(usize) -> usize,
        order: impl Fn(usize) -> usize,
    ) -> Self {
        for c in classes.iter_mut() {
            c.sort_unstable();
        }
        classes.sort_by_key(|c| (order(c[0]), c.len(), c[0]));
        let n: usize = classes.iter().map(Vec::len).sum();
        let mut class_of = vec![usize::MAX; n];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = k;
            }
        }
        let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let inverse_class = representatives
            .iter()
            .map(|&r| class_of[inverse(r)])
            .collect();
        ConjugacyData {
            class_sizes: classes.iter().map(Vec::len).collect(),
            element_orders: representatives.iter().map(|&r| order(r)).collect(),
            class_of,
            representatives,
            inverse_class,
            members: classes,
        }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn inverse_class(&self) -> &[usize] {
        &self.inverse_class
    }

    /// Element order of each class representative.
    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    pub fn members(&self, class: usize) -> &[usize] {
        &self.members[class]
    }

    /// Class of `rep(c)^k` for every class `c`.
    pub fn power_map(&self, group: &FiniteGroup, k: u64) -> Vec<usize> {
        self.representatives
            .iter()
            .map(|&r| self.class_of[group.pow(r, k)])
            .collect()
    }

    /// `|C_G(rep(c))| = |G| / |class c|`.
    pub fn centralizer_order(&self, class: usize) -> usize {
        self.class_of.len() / self.class_sizes[class]
    }
}

/// Partitions the group into conjugation orbits, walking each orbit with
/// conjugation by the generators.
pub fn conjugacy_classes(group: &FiniteGroup) -> ConjugacyData {
    let n = group.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        assigned[start] = true;
        let mut class = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &g in group.generators() {
                let y = group.conj(x, g);
                if !assigned[y] {
                    assigned[y] = true;
                    class.push(y);
                    queue.push_back(y);
                }
            }
        }
        classes.push(class);
    }
    ConjugacyData::from_partition(classes, |x| group.inv(x), |x| group.element_order(x))
}
