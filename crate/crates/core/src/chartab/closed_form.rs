//! The table of `Dih A = A ⋊ ⟨t⟩`, `A` abelian of odd order, written down
//! from the linear characters of `A`.
//!
//! Classes: `{1}`, `{a, a⁻¹}` for `a ≠ 1`, and the `|A|` involutions `at`.
//! Characters: the trivial and sign characters, and `θ^G` for each pair
//! `{θ, θ̄}` of nontrivial `θ ∈ Lin(A)`, equal to `θ(a) + θ(a)⁻¹` on `a`
//! and `0` on the involutions.

use super::{CharacterTable, TableSource};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{ConjugacyData, FiniteGroup};

/// Element indices match [`crate::constructions::generalized_dihedral`]:
/// `(a, ε)` is `ε·|A| + a`.
pub fn closed_form_dihedral_table(a: &FiniteGroup) -> Result<CharacterTable> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let m = a.order();
    if m.is_multiple_of(2) {
        return Err(Error::EvenOrder);
    }
    if m == 1 {
        return Err(Error::Precondition("A must be nontrivial".into()));
    }
    let e = a.exponent();

    let mut partition = vec![vec![0]];
    for x in 1..m {
        let y = a.inv(x);
        if x < y {
            partition.push(vec![x, y]);
        }
    }
    partition.push((m..2 * m).collect());
    let classes = ConjugacyData::from_partition(
        partition,
        |x| if x < m { a.inv(x) } else { x },
        |x| if x < m { a.element_order(x) } else { 2 },
    );

    let lin = linear_characters(a)?;
    let neg = |v: &[u32]| -> Vec<u32> { v.iter().map(|&k| (e as u32 - k) % e as u32).collect() };

    let r = classes.len();
    let reps = classes.representatives().to_vec();
    let mut rows = vec![vec![Cyclotomic::one(); r]];
    rows.push(
        reps.iter()
            .map(|&x| Cyclotomic::from_int(if x < m { 1 } else { -1 }))
            .collect(),
    );
    for (i, theta) in lin.iter().enumerate().skip(1) {
        let bar = neg(theta);
        let j = lin.iter().position(|t| *t == bar).expect("Lin(A) is closed under conjugation");
        if j < i {
            continue;
        }
        rows.push(
            reps.iter()
                .map(|&x| {
                    if x < m {
                        let k = theta[x] as i64;
                        Cyclotomic::from_exponents(e as u32, [(k, 1i64), (-k, 1i64)])
                    } else {
                        Cyclotomic::zero()
                    }
                })
                .collect(),
        );
    }
    if rows.len() != r {
        return Err(Error::LiftInconsistent(format!(
            "{} characters for {} classes",
            rows.len(),
            r
        )));
    }

    let labels = reps
        .iter()
        .map(|&x| format!("({},{})", a.label(x % m), x / m))
        .collect();
    Ok(CharacterTable::new(
        format!("Dih({})", a.name()),
        2 * m,
        num_integer::lcm(2, e),
        classes,
        labels,
        rows,
        TableSource::ClosedFormDihedral,
    ))
}

/// `Lin(A)` as exponent vectors: `θ(x) = ζ_e^{v[x]}`. Homomorphisms are
/// found by assigning exponents to the generators and propagating along a
/// spanning tree of the Cayley graph, keeping only consistent assignments.
/// The trivial character comes first.
fn linear_characters(a: &FiniteGroup) -> Result<Vec<Vec<u32>>> {
    let m = a.order();
    let e = a.exponent() as u32;
    let gens = a.generators();
    // Spanning tree: parent element and generator index for each element.
    let mut tree = vec![None; m];
    let mut order = vec![0usize];
    let mut seen = vec![false; m];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for (k, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                tree[y] = Some((x, k));
                order.push(y);
            }
        }
    }
    if order.len() != m {
        return Err(Error::InvalidGroup("generators do not generate A".into()));
    }

    let mut out = Vec::new();
    let mut images = vec![0u32; gens.len()];
    loop {
        let mut v = vec![0u32; m];
        for &x in &order[1..] {
            let (parent, k) = tree[x].expect("non-identity elements have a parent");
            v[x] = (v[parent] + images[k]) % e;
        }
        let consistent = (0..m).all(|x| {
            gens.iter()
                .enumerate()
                .all(|(k, &g)| v[a.mul(x, g)] == (v[x] + images[k]) % e)
        });
        if consistent {
            out.push(v);
        }
        // Next assignment in lexicographic order.
        let mut pos = gens.len();
        loop {
            if pos == 0 {
                if out.len() != m {
                    return Err(Error::LiftInconsistent(format!(
                        "found {} linear characters of a group of order {m}",
                        out.len()
                    )));
                }
                return Ok(out);
            }
            pos -= 1;
            images[pos] += 1;
            if images[pos] < e {
                break;
            }
            images[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{dixon_schneider, tables_equivalent, verify_orthogonality};
    use crate::constructions::{cyclic, elementary_abelian, generalized_dihedral, symmetric};

    #[test]
    fn preconditions() {
        assert_eq!(
            closed_form_dihedral_table(&symmetric(3).unwrap()).unwrap_err(),
            Error::NotAbelian
        );
        assert_eq!(
            closed_form_dihedral_table(&cyclic(4).unwrap()).unwrap_err(),
            Error::EvenOrder
        );
    }

    #[test]
    fn dih_c3_is_s3() {
        let t = closed_form_dihedral_table(&cyclic(3).unwrap()).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert!(verify_orthogonality(&t).is_ok());
        let s3 = dixon_schneider(&symmetric(3).unwrap()).unwrap();
        assert!(tables_equivalent(&t, &s3));
    }

    #[test]
    fn agrees_with_dixon_schneider() {
        for a in [cyclic(5).unwrap(), cyclic(9).unwrap(), elementary_abelian(3, 2).unwrap()] {
            let closed = closed_form_dihedral_table(&a).unwrap();
            let g = generalized_dihedral(&a).unwrap();
            let ds = dixon_schneider(&g).unwrap();
            assert_eq!(closed.classes(), ds.classes());
            assert_eq!(closed.values(), ds.values(), "{}", a.name());
        }
    }
}
