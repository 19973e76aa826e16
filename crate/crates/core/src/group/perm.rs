use std::collections::HashMap;

use super::{FiniteGroup, Origin};
use crate::error::{Error, Result};

/// Whether `images` is a permutation of `0..images.len()`.
pub fn is_bijection(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    for &i in images {
        if i >= images.len() || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

/// Disjoint cycle notation on `0..n`, fixed points omitted; `()` for the
/// identity.
pub fn cycle_notation(images: &[u32]) -> String {
    let mut seen = vec![false; images.len()];
    let mut out = String::new();
    for start in 0..images.len() {
        if seen[start] || images[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i.to_string());
            i = images[i] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Enumerates the permutation group on `0..degree` generated by
/// `generators`.
///
/// Products compose left to right: `i^(xy) = (i^x)^y`. Elements are indexed
/// in lexicographic order of their image tuples, so the identity is index
/// 0. The Cayley table is filled along a breadth-first spanning tree of the
/// right Cayley graph, which avoids hashing all `n²` products.
pub fn close_permutations(
    degree: usize,
    generators: &[Vec<usize>],
    cap: usize,
) -> Result<FiniteGroup> {
    if degree == 0 {
        return Err(Error::InvalidPermutation("degree must be positive".into()));
    }
    for g in generators {
        if g.len() != degree || !is_bijection(g) {
            return Err(Error::InvalidPermutation(format!(
                "{g:?} is not a bijection on 0..{degree}"
            )));
        }
    }
    let gens: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| g.iter().map(|&i| i as u32).collect())
        .collect();

    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(identity, 0)]);
    // parent[y] = (x, k) with y = x * gens[k]
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            let x = &elements[head];
            let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
            let idx = match index.get(&y) {
                Some(&idx) => idx,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::ClosureExceedsCap { cap });
                    }
                    let idx = elements.len();
                    index.insert(y.clone(), idx);
                    elements.push(y);
                    parent.push(Some((head, k)));
                    idx
                }
            };
            row.push(idx);
        }
        right.push(row);
        head += 1;
    }

    let n = elements.len();
    // Table in discovery order; parents always precede children.
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        table[x * n] = x as u32;
    }
    for y in 1..n {
        let (p, k) = parent[y].expect("non-identity has a parent");
        for x in 0..n {
            let xp = table[x * n + p] as usize;
            table[x * n + y] = right[xp][k] as u32;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| elements[a].cmp(&elements[b]));
    let mut rank = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut sorted = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            sorted[rank[x] * n + rank[y]] = rank[table[x * n + y] as usize] as u32;
        }
    }
    let labels = order.iter().map(|&old| cycle_notation(&elements[old])).collect();
    let gen_indices = gens.iter().map(|g| rank[index[g]]).collect();
    FiniteGroup::from_table(
        format!("perm_closure_deg{degree}"),
        sorted,
        gen_indices,
        labels,
        Origin::PermutationClosure,
    )
}
