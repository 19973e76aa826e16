//! Dixon–Schneider over `F_p` with an exact lift to `Z[ζ_e]`.
//!
//! Common eigenvectors of the class matrices are the central characters
//! `ω_χ(K_j) = |K_j| χ(g_j) / χ(1)`. They are separated over `F_p` with
//! `p ≡ 1 (mod e)` and `p > 2⌈√|G|⌉`, the degree is read off the
//! normalization `Σ_j ω_j ω_j' / |K_j| = |G| / χ(1)²`, and each value is
//! lifted through the eigenvalue multiplicities of `g`, recovered by a
//! discrete Fourier transform over the powers of `g`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{class_matrices, verify_orthogonality, CharacterTable, TableSource};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, FiniteGroup};
use crate::modp::{ceil_sqrt, floor_sqrt, is_prime, PrimeField};

pub const DEFAULT_SEED: u64 = 0x5eed;

const RANDOM_ROUNDS: usize = 6;
const PRIME_CAP: u64 = 1 << 31;

/// Smallest prime `p ≡ 1 (mod e)` with `p ≥ max(e + 1, 2⌈√n⌉ + 1)`.
pub fn find_prime(exponent: usize, order: usize) -> Result<u64> {
    let e = exponent as u64;
    let start = (e + 1).max(2 * ceil_sqrt(order as u64) + 1);
    // First member of 1 + e·Z at or above start.
    let mut p = start + (e - (start - 1) % e) % e;
    while p < PRIME_CAP {
        if is_prime(p) {
            return Ok(p);
        }
        p += e;
    }
    Err(Error::NoSuitablePrime { exponent })
}

pub fn dixon_schneider(group: &FiniteGroup) -> Result<CharacterTable> {
    dixon_schneider_with_seed(group, DEFAULT_SEED)
}

/// Character table of `group`. `seed` drives the random class-matrix
/// combinations used to split eigenspaces; the result does not depend on
/// it, only the amount of work does.
pub fn dixon_schneider_with_seed(group: &FiniteGroup, seed: u64) -> Result<CharacterTable> {
    let classes = conjugacy_classes(group);
    let n = group.order();
    let r = classes.len();
    let e = group.exponent();
    let p = find_prime(e, n)?;
    let field = PrimeField::new(p);

    let data = class_matrices(group, &classes);
    let matrices: Vec<Vec<Vec<u64>>> = (0..r)
        .map(|j| {
            data.class_matrix(j)
                .into_iter()
                .map(|row| row.into_iter().map(|x| x as u64 % p).collect())
                .collect()
        })
        .collect();

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ROUNDS {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let coeffs: Vec<u64> = (0..r).map(|_| rng.random_range(0..p)).collect();
        let mut combo = vec![vec![0u64; r]; r];
        for (j, m) in matrices.iter().enumerate().skip(1) {
            let c = coeffs[j];
            if c == 0 {
                continue;
            }
            for (row, mrow) in combo.iter_mut().zip(m) {
                for (x, &y) in row.iter_mut().zip(mrow) {
                    *x = (*x + c * y) % p;
                }
            }
        }
        spaces = split_all(&field, spaces, &combo)?;
    }
    for m in matrices.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        spaces = split_all(&field, spaces, m)?;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::LiftInconsistent(
            "class matrices do not separate all characters".into(),
        ));
    }
    if spaces.len() != r {
        return Err(Error::LiftInconsistent(format!(
            "found {} characters for {} classes",
            spaces.len(),
            r
        )));
    }

    let sizes = classes.class_sizes();
    let inverse = classes.inverse_class();
    let size_inv: Vec<u64> = sizes.iter().map(|&h| field.inv(h as u64 % p)).collect();
    let order_mod = n as u64 % p;
    let z = field.root_of_unity(e as u64);
    // power_classes[j][l] = class of rep_j^l, l < order(rep_j)
    let power_classes: Vec<Vec<usize>> = classes
        .representatives()
        .iter()
        .map(|&g| {
            let o = group.element_order(g);
            let mut out = Vec::with_capacity(o);
            let mut x = 0;
            for _ in 0..o {
                out.push(classes.class_of(x));
                x = group.mul(x, g);
            }
            out
        })
        .collect();

    let mut rows = Vec::with_capacity(r);
    for space in spaces {
        let mut w = space.into_iter().next().expect("one-dimensional");
        if w[0] == 0 {
            return Err(Error::LiftInconsistent(
                "central character vanishes on the identity class".into(),
            ));
        }
        let scale = field.inv(w[0]);
        for x in w.iter_mut() {
            *x = field.mul(*x, scale);
        }
        let norm = (0..r).fold(0, |acc, j| {
            field.add(acc, field.mul(field.mul(w[j], w[inverse[j]]), size_inv[j]))
        });
        if norm == 0 {
            return Err(Error::LiftInconsistent("zero degree normalization".into()));
        }
        let degree_sq = field.mul(order_mod, field.inv(norm));
        let degree = (1..=floor_sqrt(n as u64))
            .find(|&d| d * d % p == degree_sq)
            .ok_or_else(|| Error::LiftInconsistent("no degree below sqrt |G|".into()))?;
        if !(n as u64).is_multiple_of(degree) {
            return Err(Error::LiftInconsistent(format!(
                "degree {degree} does not divide {n}"
            )));
        }
        let chi_mod: Vec<u64> = (0..r)
            .map(|j| field.mul(field.mul(w[j], degree), size_inv[j]))
            .collect();

        let mut row = Vec::with_capacity(r);
        for (j, powers) in power_classes.iter().enumerate() {
            let o = powers.len();
            let zo_inv = field.inv(field.pow(z, (e / o) as u64));
            let o_inv = field.inv(o as u64 % p);
            let mut multiplicities = Vec::with_capacity(o);
            let mut total = 0u64;
            for k in 0..o {
                let step = field.pow(zo_inv, k as u64);
                let mut acc = 0;
                let mut twist = 1;
                for &c in powers {
                    acc = field.add(acc, field.mul(chi_mod[c], twist));
                    twist = field.mul(twist, step);
                }
                let m = field.mul(acc, o_inv);
                if m > degree {
                    return Err(Error::LiftInconsistent(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree} on class {j}"
                    )));
                }
                total += m;
                multiplicities.push((k as i64, m as i64));
            }
            if total != degree {
                return Err(Error::LiftInconsistent(format!(
                    "multiplicities on class {j} sum to {total}, not {degree}"
                )));
            }
            row.push(Cyclotomic::from_exponents(o as u32, multiplicities));
        }
        rows.push(row);
    }

    let labels = classes
        .representatives()
        .iter()
        .map(|&g| group.label(g).to_string())
        .collect();
    let table = CharacterTable::new(
        group.name().to_string(),
        n,
        e,
        classes,
        labels,
        rows,
        TableSource::DixonSchneider { prime: p, seed },
    );
    let degree_sum: u64 = table.degrees().iter().map(|d| d * d).sum();
    if degree_sum != n as u64 {
        return Err(Error::LiftInconsistent(format!(
            "sum of squared degrees is {degree_sum}, not {n}"
        )));
    }
    let report = verify_orthogonality(&table);
    if !report.is_ok() {
        return Err(Error::LiftInconsistent(format!(
            "orthogonality fails: {} row and {} column violations",
            report.row_violations.len(),
            report.column_violations.len()
        )));
    }
    Ok(table)
}

fn split_all(
    field: &PrimeField,
    spaces: Vec<Vec<Vec<u64>>>,
    m: &[Vec<u64>],
) -> Result<Vec<Vec<Vec<u64>>>> {
    let mut out = Vec::with_capacity(spaces.len());
    for space in spaces {
        if space.len() == 1 {
            out.push(space);
        } else {
            out.extend(split(field, space, m)?);
        }
    }
    Ok(out)
}

/// Splits an `m`-invariant subspace (basis in reduced echelon form) into
/// the eigenspaces of `m` restricted to it.
fn split(field: &PrimeField, basis: Vec<Vec<u64>>, m: &[Vec<u64>]) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).expect("basis vectors are nonzero"))
        .collect();
    // restricted[t][i] = coordinate t of m·b_i
    let images: Vec<Vec<u64>> = basis.iter().map(|b| field.mat_vec(m, b)).collect();
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|t| (0..d).map(|i| images[i][pivots[t]]).collect())
        .collect();
    let poly = field.char_poly(&restricted);
    let roots = field.roots(&poly);
    if roots.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut pieces = Vec::with_capacity(roots.len());
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(t, row)| {
                row.iter()
                    .enumerate()
                    .map(|(i, &x)| if i == t { field.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let coords = field.null_space(&shifted);
        let mut vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|u| {
                let mut v = vec![0; basis[0].len()];
                for (ui, b) in u.iter().zip(&basis) {
                    if *ui == 0 {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = field.add(*x, field.mul(*ui, y));
                    }
                }
                v
            })
            .collect();
        field.rref(&mut vectors);
        total += vectors.len();
        pieces.push(vectors);
    }
    if total != d {
        return Err(Error::LiftInconsistent(format!(
            "eigenspaces of dimension {total} inside a space of dimension {d}"
        )));
    }
    Ok(pieces)
}
