//! Fully enumerated finite groups.
//!
//! A [`FiniteGroup`] stores its complete Cayley table over canonical element
//! indices, with index 0 the identity. Every subgroup computation works on
//! sorted index sets, so all results are exact and deterministic.

mod classes;
mod perm;

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

pub use classes::{conjugacy_classes, ConjugacyData};
pub use perm::{close_permutations, cycle_notation, is_bijection};

/// Largest group order enumerated unless configured otherwise.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Where a group came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    /// Built by one of the programmatic constructors.
    Family { spec: String },
    /// Loaded from a catalog record.
    Catalog { file: String, record: String },
    /// Closure of user supplied permutations.
    PermutationClosure,
    /// Coset group of a parent group.
    Quotient { parent: String },
}

/// A finite group with a full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    labels: Vec<String>,
    origin: Origin,
    orders: Vec<u32>,
}

impl FiniteGroup {
    /// Builds a group from a row-major Cayley table and validates the group
    /// axioms: identity at index 0, Latin-square rows and columns,
    /// associativity, and that `generators` generate every index.
    ///
    /// Associativity is decided exactly with Light's test against the
    /// generators, which costs `order² · |generators|` lookups.
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<u32>,
        generators: Vec<usize>,
        labels: Vec<String>,
        origin: Origin,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 || table.len() != n * n {
            return Err(Error::InvalidGroup(format!(
                "table of length {} does not match {} labels",
                table.len(),
                n
            )));
        }
        if table.iter().any(|&v| v as usize >= n) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        if generators.iter().any(|&g| g >= n) {
            return Err(Error::InvalidGroup("generator index out of range".into()));
        }
        for x in 0..n {
            if table[x] as usize != x || table[x * n] as usize != x {
                return Err(Error::InvalidGroup("index 0 is not the identity".into()));
            }
        }
        let mut inv = vec![u32::MAX; n];
        for x in 0..n {
            let mut seen = vec![false; n];
            for y in 0..n {
                let v = table[x * n + y] as usize;
                if seen[v] {
                    return Err(Error::InvalidGroup(format!("row {x} repeats an entry")));
                }
                seen[v] = true;
                if v == 0 {
                    inv[x] = y as u32;
                }
            }
        }
        for x in 0..n {
            if table[inv[x] as usize * n + x] != 0 {
                return Err(Error::InvalidGroup(format!("{x} has no two-sided inverse")));
            }
        }
        let group = FiniteGroup {
            name: name.into(),
            order: n,
            table,
            inv,
            generators,
            labels,
            origin,
            orders: Vec::new(),
        };
        let generated = group.generate(&group.generators);
        if generated.len() != n {
            return Err(Error::InvalidGroup(format!(
                "generators span {} of {} elements",
                generated.len(),
                n
            )));
        }
        for &g in &group.generators {
            for x in 0..n {
                for y in 0..n {
                    if group.mul(group.mul(x, y), g) != group.mul(x, group.mul(y, g)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({x}, {y}, {g})"
                        )));
                    }
                }
            }
        }
        let mut group = group;
        group.orders = (0..n).map(|x| group.compute_order(x)).collect();
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = origin;
        self
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.inv(g), self.mul(x, g))
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = 0;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn compute_order(&self, x: usize) -> u32 {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x] as usize
    }

    /// Multiset of element orders as `order -> count`.
    pub fn element_orders(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &o in &self.orders {
            *out.entry(o as usize).or_insert(0) += 1;
        }
        out
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1usize, |acc, &o| acc.lcm(&(o as usize)))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Abelian and every non-identity element has order `p`.
    pub fn is_elementary_abelian(&self, p: usize) -> bool {
        self.is_abelian() && self.orders[1..].iter().all(|&o| o as usize == p)
    }

    pub fn involutions(&self) -> Vec<usize> {
        (0..self.order).filter(|&x| self.orders[x] == 2).collect()
    }

    /// Sorted index set of the subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut members = vec![0usize];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    fn is_normal_set(&self, members: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &m in members {
            inside[m] = true;
        }
        members
            .iter()
            .all(|&h| self.generators.iter().all(|&g| inside[self.conj(h, g)]))
    }

    /// Subgroup generated by `gens`, with its normality decided.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        let members = self.generate(gens);
        let is_normal = self.is_normal_set(&members);
        Subgroup {
            members,
            generators: gens.to_vec(),
            is_normal,
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order).collect(),
            generators: self.generators.clone(),
            is_normal: true,
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: vec![0],
            generators: Vec::new(),
            is_normal: true,
        }
    }

    /// Closes `seeds` under conjugation by the elements in `by`.
    fn conjugation_closure(&self, seeds: &[usize], by: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for &s in seeds {
            if !seen[s] {
                seen[s] = true;
                out.push(s);
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &g in by {
                let y = self.conj(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[usize]) -> Subgroup {
        let conjugates = self.conjugation_closure(seeds, &self.generators);
        let members = self.generate(&conjugates);
        Subgroup {
            members,
            generators: conjugates,
            is_normal: true,
        }
    }

    /// Join of normal subgroups is normal; the flag is recomputed anyway.
    pub fn join(&self, parts: &[&Subgroup]) -> Subgroup {
        let gens: Vec<usize> = parts
            .iter()
            .flat_map(|s| s.generators.iter().copied())
            .collect();
        self.subgroup(&gens)
    }

    /// `C_G(x)`.
    pub fn centralizer(&self, x: usize) -> Subgroup {
        let members: Vec<usize> = (0..self.order)
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect();
        let is_normal = self.is_normal_set(&members);
        Subgroup {
            generators: members.clone(),
            members,
            is_normal,
        }
    }

    /// `Z(G)`.
    pub fn center(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.order)
            .filter(|&z| {
                self.generators
                    .iter()
                    .all(|&g| self.mul(g, z) == self.mul(z, g))
            })
            .collect();
        Subgroup {
            generators: members.clone(),
            members,
            is_normal: true,
        }
    }

    /// Derived subgroup of `h`: normal closure in `h` of the commutators of
    /// its generators.
    pub fn derived_subgroup_of(&self, h: &Subgroup) -> Subgroup {
        let gens = &h.generators;
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        comms.sort_unstable();
        comms.dedup();
        let conjugates = self.conjugation_closure(&comms, gens);
        let members = self.generate(&conjugates);
        let is_normal = self.is_normal_set(&members);
        Subgroup {
            members,
            generators: conjugates,
            is_normal,
        }
    }

    /// `G′`.
    pub fn derived_subgroup(&self) -> Subgroup {
        self.derived_subgroup_of(&self.whole())
    }

    /// Derived series reaches the trivial subgroup.
    pub fn is_solvable(&self) -> bool {
        let mut h = self.whole();
        loop {
            if h.order() == 1 {
                return true;
            }
            let d = self.derived_subgroup_of(&h);
            if d.order() == h.order() {
                return false;
            }
            h = d;
        }
    }

    /// `O(G)`, the largest normal subgroup of odd order: the join of the
    /// normal closures of odd-order elements whose closure has odd order.
    pub fn odd_core(&self) -> Subgroup {
        let classes = conjugacy_classes(self);
        let seeds: Vec<usize> = classes
            .representatives()
            .iter()
            .copied()
            .filter(|&rep| rep != 0 && self.orders[rep] % 2 == 1)
            .filter(|&rep| self.normal_closure(&[rep]).order() % 2 == 1)
            .collect();
        if seeds.is_empty() {
            return self.trivial_subgroup();
        }
        let core = self.normal_closure(&seeds);
        debug_assert!(core.order() % 2 == 1);
        core
    }

    /// A Sylow 2-subgroup, grown greedily one 2-element at a time.
    pub fn sylow_two(&self) -> Subgroup {
        let target = 1usize << self.order.trailing_zeros();
        let mut current = self.trivial_subgroup();
        while current.order() < target {
            let mut grown = None;
            for x in 0..self.order {
                if !self.orders[x].is_power_of_two() || current.contains(x) {
                    continue;
                }
                let mut gens = current.generators.clone();
                gens.push(x);
                let members = self.generate(&gens);
                if members.len().is_power_of_two() {
                    grown = Some(Subgroup {
                        is_normal: false,
                        members,
                        generators: gens,
                    });
                    break;
                }
            }
            match grown {
                Some(s) => current = s,
                None => unreachable!("a proper 2-subgroup always extends"),
            }
        }
        current.is_normal = self.is_normal_set(&current.members);
        current
    }

    /// Whether `x^t = x⁻¹` for every `x` in `n`. `t` must be an
    /// involution; the identity is accepted only when `n` has exponent
    /// dividing 2.
    pub fn inverts_subgroup(&self, t: usize, n: &Subgroup) -> Result<bool> {
        if self.mul(t, t) != 0 {
            return Err(Error::NotAnInvolution(t));
        }
        if t == 0 && n.members.iter().any(|&x| self.orders[x] > 2) {
            return Err(Error::NotAnInvolution(t));
        }
        Ok(n.members.iter().all(|&x| self.conj(x, t) == self.inv(x)))
    }

    /// Index lookup table from element label to index.
    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }
}

/// A subgroup as a sorted set of element indices of its parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
    generators: Vec<usize>,
    is_normal: bool,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}
