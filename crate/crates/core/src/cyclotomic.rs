//! Exact arithmetic in the cyclotomic integers `Z[ζ_e]`.
//!
//! A value is stored at its minimal conductor as a sparse integer
//! combination of basis roots of unity. The basis of `Q(ζ_e)` is the tensor
//! product over the prime powers `q = p^a ∥ e` of a basis of `Q(ζ_q)`,
//! selected through the CRT component `c` of an exponent `k`:
//!
//! * odd `p`: `c = i + m·p^(a−1)` with `m ≥ 1`, reduced by
//!   `Σ_{m=0}^{p−1} ζ_q^(i + m·p^(a−1)) = 0`;
//! * `p = 2`: `c < 2^(a−1)`, reduced by `ζ_q^(c + 2^(a−1)) = −ζ_q^c`.
//!
//! Subfields `Q(ζ_(e/p))` are spanned by basis subsets (or, for `p ∥ e`
//! odd, by constant blocks), so the minimal conductor is found by direct
//! inspection of the support. Two values are equal iff their stored forms
//! are equal, so the derived `Eq`, `Ord` and `Hash` are sound.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u32,
    /// Sorted by exponent, no zero coefficients.
    terms: Vec<(u32, BigInt)>,
}

#[derive(Clone, Copy, Debug)]
struct PrimePart {
    p: u32,
    a: u32,
    q: u32,
    /// `p^(a−1)`
    s: u32,
    /// `e / q`
    cof: u32,
    /// inverse of `cof` modulo `q`
    cof_inv: u32,
}

impl PrimePart {
    #[inline]
    fn component(&self, k: u32) -> u32 {
        ((k % self.q) as u64 * self.cof_inv as u64 % self.q as u64) as u32
    }

    #[inline]
    fn in_basis(&self, c: u32) -> bool {
        if self.p == 2 {
            c < self.s
        } else {
            c >= self.s
        }
    }
}

fn factorize(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inverse(a: u32, m: u32) -> u32 {
    if m == 1 {
        return 0;
    }
    let g = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m as i64) as u32
}

fn prime_parts(e: u32) -> Vec<PrimePart> {
    factorize(e)
        .into_iter()
        .map(|(p, a)| {
            let q = p.pow(a);
            let cof = e / q;
            PrimePart {
                p,
                a,
                q,
                s: q / p,
                cof,
                cof_inv: mod_inverse(cof % q, q),
            }
        })
        .collect()
}

/// Rewrites a dense coefficient vector over `ζ_e^0..ζ_e^(e−1)` in the
/// basis, in place.
fn reduce_dense(e: u32, v: &mut [BigInt]) {
    debug_assert_eq!(v.len(), e as usize);
    for part in prime_parts(e) {
        let shift = (part.s as u64 * part.cof as u64) as usize;
        let e = e as usize;
        for k in 0..e {
            if v[k].is_zero() || part.in_basis(part.component(k as u32)) {
                continue;
            }
            let x = std::mem::take(&mut v[k]);
            if part.p == 2 {
                v[(k + shift) % e] -= x;
            } else {
                for m in 1..part.p as usize {
                    v[(k + m * shift) % e] -= &x;
                }
            }
        }
    }
}

/// Lowers the conductor while the value lies in a proper cyclotomic
/// subfield.
fn reduce_conductor(mut e: u32, mut terms: Vec<(u32, BigInt)>) -> (u32, Vec<(u32, BigInt)>) {
    'outer: loop {
        if e == 1 {
            break;
        }
        for part in prime_parts(e) {
            let p = part.p;
            if part.a >= 2 || p == 2 {
                if terms.iter().all(|(k, _)| k % p == 0) {
                    for t in terms.iter_mut() {
                        t.0 /= p;
                    }
                    e /= p;
                    continue 'outer;
                }
                continue;
            }
            // p odd, p ∥ e: blocks over components 1..p−1 must be constant.
            let mut blocks: Vec<(u32, u32, &BigInt)> = terms
                .iter()
                .map(|(k, c)| {
                    let comp = part.component(*k);
                    let base = ((*k as u64 + e as u64 - comp as u64 * part.cof as u64) % e as u64) as u32;
                    (base, comp, c)
                })
                .collect();
            blocks.sort();
            let mut ok = blocks.len().is_multiple_of(p as usize - 1);
            if ok {
                for chunk in blocks.chunks(p as usize - 1) {
                    let base = chunk[0].0;
                    let coef = chunk[0].2;
                    if chunk
                        .iter()
                        .enumerate()
                        .any(|(i, &(b, comp, c))| b != base || comp != i as u32 + 1 || c != coef)
                    {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let new_terms: Vec<(u32, BigInt)> = blocks
                    .chunks(p as usize - 1)
                    .map(|chunk| (chunk[0].0 / p, -chunk[0].2.clone()))
                    .collect();
                terms = new_terms;
                e /= p;
                continue 'outer;
            }
        }
        break;
    }
    terms.sort_by_key(|t| t.0);
    (e, terms)
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            terms: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        if n.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: 1,
            terms: vec![(0, n)],
        }
    }

    /// The integer `n` viewed in `Z[ζ_e]`. Rational integers always carry
    /// conductor 1.
    pub fn embed_int(n: impl Into<BigInt>, _e: u32) -> Self {
        Self::from_int(n)
    }

    /// `ζ_e^k` for any integer `k`.
    pub fn root_of_unity(e: u32, k: i64) -> Self {
        assert!(e > 0, "conductor must be positive");
        let k = k.rem_euclid(e as i64) as u32;
        Self::from_dense(e, {
            let mut v = vec![BigInt::zero(); e as usize];
            v[k as usize] = BigInt::one();
            v
        })
    }

    /// `Σ c_k ζ_e^k` over an arbitrary list of exponents (reduced mod `e`).
    pub fn from_exponents<I, C>(e: u32, coeffs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        assert!(e > 0, "conductor must be positive");
        let mut v = vec![BigInt::zero(); e as usize];
        for (k, c) in coeffs {
            v[k.rem_euclid(e as i64) as usize] += c.into();
        }
        Self::from_dense(e, v)
    }

    /// Canonical form of a dense vector over `ζ_e^0..ζ_e^(e−1)`.
    pub fn from_dense(e: u32, mut v: Vec<BigInt>) -> Self {
        reduce_dense(e, &mut v);
        let terms = v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        let (conductor, terms) = reduce_conductor(e, terms);
        Cyclotomic { conductor, terms }
    }

    /// Minimal conductor.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Basis exponents and coefficients at the minimal conductor.
    pub fn terms(&self) -> &[(u32, BigInt)] {
        &self.terms
    }

    /// Coefficients in the basis of conductor `e`, which must be a multiple
    /// of this value's conductor.
    pub fn to_common_conductor(&self, e: u32) -> Result<Vec<(u32, BigInt)>> {
        if e == 0 || !e.is_multiple_of(self.conductor) {
            return Err(Error::IncompatibleConductor {
                from: self.conductor,
                to: e,
            });
        }
        let mut v = self.lift_dense(e);
        reduce_dense(e, &mut v);
        Ok(v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect())
    }

    fn lift_dense(&self, e: u32) -> Vec<BigInt> {
        let f = e / self.conductor;
        let mut v = vec![BigInt::zero(); e as usize];
        for (k, c) in &self.terms {
            v[(k * f) as usize] += c;
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(n)` iff the value is the rational integer `n`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.conductor != 1 {
            return None;
        }
        Some(self.terms.first().map_or_else(BigInt::zero, |t| t.1.clone()))
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// Image under `ζ ↦ ζ^k`; `k` must be coprime to the conductor.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let e = self.conductor;
        if (k.rem_euclid(e as i64)).gcd(&(e as i64)) != 1 && e != 1 {
            return Err(Error::NotCoprime(k));
        }
        Ok(self.galois_unchecked(k))
    }

    fn galois_unchecked(&self, k: i64) -> Self {
        let e = self.conductor as i64;
        Self::from_exponents(
            self.conductor,
            self.terms.iter().map(|(j, c)| (*j as i64 * k % e, c.clone())),
        )
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹`.
    pub fn conjugate(&self) -> Self {
        self.galois_unchecked(-1)
    }

    /// `x + x̄`, twice the real part.
    pub fn real_double_part(&self) -> Self {
        self + &self.conjugate()
    }

    /// Floating point approximation `(re, im)`, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = TAU * *k as f64 / e;
            (re + c * angle.cos(), im + c * angle.sin())
        })
    }

    fn binary(&self, other: &Self, op: impl Fn(&mut [BigInt], &[BigInt])) -> Self {
        let e = self.conductor.lcm(&other.conductor);
        let mut a = self.lift_dense(e);
        let b = other.lift_dense(e);
        op(&mut a, &b);
        Self::from_dense(e, a)
    }

    /// Short human-readable form: tries `±ζ^a` and `±(ζ^a + ζ^b)` before
    /// falling back to the basis expansion.
    pub fn pretty(&self) -> String {
        if let Some(n) = self.as_integer() {
            return n.to_string();
        }
        let e = self.conductor;
        let root = |k: u32| Cyclotomic::root_of_unity(e, k as i64);
        let roots: Vec<Cyclotomic> = (0..e).map(root).collect();
        for sign in [1, -1] {
            let signed = |x: &Cyclotomic| if sign == 1 { x.clone() } else { -x };
            let prefix = if sign == 1 { "" } else { "-" };
            for a in 0..e {
                if *self == signed(&roots[a as usize]) {
                    return format!("{prefix}{}", zeta(e, a));
                }
            }
            for a in 0..e {
                for b in a..e {
                    if *self == signed(&(&roots[a as usize] + &roots[b as usize])) {
                        return match sign {
                            1 => format!("{} + {}", zeta(e, a), zeta(e, b)),
                            _ => format!("-{} - {}", zeta(e, a), zeta(e, b)),
                        };
                    }
                }
            }
        }
        self.to_string()
    }
}

fn zeta(e: u32, k: u32) -> String {
    match k {
        0 => "1".into(),
        1 => format!("ζ{e}"),
        _ => format!("ζ{e}^{k}"),
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let z = zeta(self.conductor, *k);
            let mag = c.abs();
            let body = if mag.is_one() && *k != 0 {
                z
            } else if *k == 0 {
                mag.to_string()
            } else {
                format!("{mag}{z}")
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary(rhs, |a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        })
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary(rhs, |a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x -= y;
            }
        })
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let e = self.conductor.lcm(&rhs.conductor);
        let (fa, fb) = (e / self.conductor, e / rhs.conductor);
        let mut v = vec![BigInt::zero(); e as usize];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                v[((ka * fa + kb * fb) % e) as usize] += ca * cb;
            }
        }
        Cyclotomic::from_dense(e, v)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

/// Accumulates `Σ w · x · y` over values whose conductors divide a fixed
/// `e`, reducing to canonical form once at the end. Runs on `i128` until a
/// term overflows, then switches to big integers.
pub struct Accumulator {
    e: u32,
    small: Vec<i128>,
    big: Option<Vec<BigInt>>,
}

impl Accumulator {
    pub fn new(e: u32) -> Self {
        Accumulator {
            e,
            small: vec![0; e as usize],
            big: None,
        }
    }

    fn promote(&mut self) -> &mut Vec<BigInt> {
        if self.big.is_none() {
            self.big = Some(self.small.iter().map(|&x| BigInt::from(x)).collect());
            self.small.iter_mut().for_each(|x| *x = 0);
        }
        self.big.as_mut().expect("just promoted")
    }

    /// Adds `w · x · y`. Panics if a conductor does not divide `e`.
    pub fn add_product(&mut self, w: i64, x: &Cyclotomic, y: &Cyclotomic) {
        let e = self.e;
        assert!(
            e.is_multiple_of(x.conductor) && e.is_multiple_of(y.conductor),
            "accumulator conductor {e} is not a multiple of {} and {}",
            x.conductor,
            y.conductor
        );
        let (fx, fy) = (e / x.conductor, e / y.conductor);
        for (kx, cx) in &x.terms {
            for (ky, cy) in &y.terms {
                let idx = ((kx * fx + ky * fy) % e) as usize;
                let small = match (cx.to_i64(), cy.to_i64()) {
                    (Some(a), Some(b)) => (a as i128)
                        .checked_mul(b as i128)
                        .and_then(|ab| ab.checked_mul(w as i128))
                        .filter(|_| self.big.is_none())
                        .and_then(|t| self.small[idx].checked_add(t)),
                    _ => None,
                };
                match small {
                    Some(s) => self.small[idx] = s,
                    None => {
                        let big = self.promote();
                        big[idx] += BigInt::from(w) * cx * cy;
                    }
                }
            }
        }
    }

    pub fn finish(self) -> Cyclotomic {
        let dense = match self.big {
            Some(big) => big,
            None => self.small.into_iter().map(BigInt::from).collect(),
        };
        Cyclotomic::from_dense(self.e, dense)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for WireInt {
    fn from(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => WireInt::Small(v),
            None => WireInt::Big(n.to_string()),
        }
    }
}

impl WireInt {
    fn into_bigint(self) -> std::result::Result<BigInt, String> {
        match self {
            WireInt::Small(v) => Ok(BigInt::from(v)),
            WireInt::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Wire {
    Int(WireInt),
    Full {
        conductor: u32,
        coeffs: Vec<(i64, WireInt)>,
    },
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = match self.as_integer() {
            Some(n) => Wire::Int(WireInt::from(&n)),
            None => Wire::Full {
                conductor: self.conductor,
                coeffs: self
                    .terms
                    .iter()
                    .map(|(k, c)| (*k as i64, WireInt::from(c)))
                    .collect(),
            },
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match Wire::deserialize(d)? {
            Wire::Int(n) => Ok(Cyclotomic::from_int(n.into_bigint().map_err(D::Error::custom)?)),
            Wire::Full { conductor, coeffs } => {
                if conductor == 0 {
                    return Err(D::Error::custom("conductor must be positive"));
                }
                let coeffs = coeffs
                    .into_iter()
                    .map(|(k, c)| c.into_bigint().map(|c| (k, c)))
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(D::Error::custom)?;
                Ok(Cyclotomic::from_exponents(conductor, coeffs))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(e: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(e, k)
    }

    #[test]
    fn cube_roots_sum_to_minus_one() {
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_int(-1));
    }

    #[test]
    fn imaginary_unit_cancels() {
        assert!((&z(4, 1) + &z(4, 3)).is_zero());
    }

    #[test]
    fn conjugate_of_fifth_root() {
        assert_eq!(z(5, 2).conjugate(), z(5, 3));
    }

    #[test]
    fn real_double_part_of_zeta3() {
        assert_eq!(z(3, 1).real_double_part().as_i64(), Some(-1));
    }

    #[test]
    fn integer_extraction() {
        let two = &Cyclotomic::from_int(2) * &z(6, 0);
        assert_eq!(two.as_i64(), Some(2));
        assert_eq!(two.conductor(), 1);
        assert_eq!(z(6, 1).as_integer(), None);
    }

    #[test]
    fn minimal_conductor() {
        // ζ6 = −ζ3²
        assert_eq!(z(6, 1), -&z(3, 2));
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(12, 3).conductor(), 4);
        assert_eq!(z(2, 1).as_i64(), Some(-1));
        // √5 = ζ5 − ζ5² − ζ5³ + ζ5⁴ stays at conductor 5
        let s5 = Cyclotomic::from_exponents(5, [(1, 1), (2, -1), (3, -1), (4, 1)]);
        assert_eq!(s5.conductor(), 5);
        assert_eq!((&s5 * &s5).as_i64(), Some(5));
        // i·√5-style lift to 20 and back
        let lifted = Cyclotomic::from_exponents(20, [(4, 1), (8, -1), (12, -1), (16, 1)]);
        assert_eq!(lifted, s5);
    }

    #[test]
    fn zeta9_plus_inverse_is_irrational() {
        let x = &z(9, 1) + &z(9, 8);
        assert!(!x.is_rational());
        assert_eq!(x.conductor(), 9);
        assert_eq!(x.pretty(), "ζ9 + ζ9^8");
    }

    #[test]
    fn geometric_sums_vanish() {
        for e in 2..=60u32 {
            let s = Cyclotomic::from_exponents(e, (0..e as i64).map(|k| (k, 1)));
            assert!(s.is_zero(), "e = {e}");
        }
    }

    #[test]
    fn galois_requires_coprime() {
        assert!(z(4, 1).galois(2).is_err());
        // ζ6 lives at conductor 3, where 2 is a unit.
        assert_eq!(z(6, 1).galois(2).unwrap(), z(6, 5));
        assert_eq!(z(5, 1).galois(2).unwrap(), z(5, 2));
        assert_eq!(z(7, 3).galois(1).unwrap(), z(7, 3));
    }

    #[test]
    fn common_conductor() {
        let x = z(3, 1);
        let lifted = x.to_common_conductor(6).unwrap();
        assert_eq!(Cyclotomic::from_exponents(6, lifted.iter().map(|(k, c)| (*k as i64, c.clone()))), x);
        assert_eq!(
            x.to_common_conductor(4),
            Err(Error::IncompatibleConductor { from: 3, to: 4 })
        );
    }

    #[test]
    fn accumulator_matches_ring_ops() {
        let xs = [z(12, 1), z(4, 1), &z(3, 1) + &Cyclotomic::from_int(2)];
        let mut acc = Accumulator::new(12);
        let mut direct = Cyclotomic::zero();
        for (i, x) in xs.iter().enumerate() {
            for y in &xs {
                acc.add_product(i as i64 + 1, x, &y.conjugate());
                let w = Cyclotomic::from_int(i as i64 + 1);
                direct = &direct + &(&w * &(x * &y.conjugate()));
            }
        }
        assert_eq!(acc.finish(), direct);
    }

    #[test]
    fn accumulator_overflows_into_bigints() {
        let big = Cyclotomic::from_int(i64::MAX);
        let mut acc = Accumulator::new(1);
        for _ in 0..4 {
            acc.add_product(i64::MAX, &big, &big);
        }
        let expected = BigInt::from(i64::MAX).pow(3) * 4;
        assert_eq!(acc.finish().as_integer(), Some(expected));
    }

    #[test]
    fn serialization_shapes() {
        assert_eq!(serde_json::to_string(&Cyclotomic::from_int(-3)).unwrap(), "-3");
        let x = &z(9, 1) + &z(9, 8);
        let json = serde_json::to_string(&x).unwrap();
        assert!(json.starts_with("{\"conductor\":9,\"coeffs\":["));
        let back: Cyclotomic = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        let huge = Cyclotomic::from_int(BigInt::from(i64::MAX) * 10);
        let back: Cyclotomic = serde_json::from_str(&serde_json::to_string(&huge).unwrap()).unwrap();
        assert_eq!(back, huge);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Cyclotomic::from_int(-2).to_string(), "-2");
        assert_eq!(z(4, 1).to_string(), "ζ4");
        assert_eq!(z(4, 3).pretty(), "ζ4^3");
        assert_eq!((-&z(5, 1)).pretty(), "-ζ5");
        let (re, im) = (&z(9, 1) + &z(9, 8)).to_complex();
        assert!((re - 2.0 * (TAU / 9.0).cos()).abs() < 1e-12 && im.abs() < 1e-12);
    }
}
