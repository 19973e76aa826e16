use charval_core::cyclotomic::Cyclotomic;
use num_integer::Integer;
use proptest::prelude::*;

fn element(e: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((0..e as i64, -20i64..=20), 0..6)
        .prop_map(move |terms| Cyclotomic::from_exponents(e, terms))
}

fn triple() -> impl Strategy<Value = (u32, Cyclotomic, Cyclotomic, Cyclotomic)> {
    (1u32..=60).prop_flat_map(|e| (Just(e), element(e), element(e), element(e)))
}

proptest! {
    #[test]
    fn ring_axioms((_e, x, y, z) in triple()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &Cyclotomic::one(), x.clone());
    }

    #[test]
    fn conjugation_and_galois((e, x, y, _z) in triple(), k in 1i64..60) {
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert_eq!(x.galois(1).unwrap(), x.clone());
        prop_assert_eq!(x.galois(-1).unwrap(), x.conjugate());
        if k.gcd(&(e as i64)) == 1 {
            let s = |v: &Cyclotomic| v.galois(k).unwrap();
            prop_assert_eq!(s(&(&x * &y)), &s(&x) * &s(&y));
            prop_assert_eq!(s(&(&x + &y)), &s(&x) + &s(&y));
        }
        prop_assert!(x.real_double_part().conjugate() == x.real_double_part());
    }

    /// The same value written at conductor `e` and at `e·m` (with every
    /// exponent scaled by `m`) is the same canonical element.
    #[test]
    fn canonical_across_conductors(
        e in 1u32..=30,
        m in 1u32..=4,
        terms in prop::collection::vec((0i64..30, -9i64..=9), 0..6),
    ) {
        let low = Cyclotomic::from_exponents(e, terms.iter().copied());
        let high = Cyclotomic::from_exponents(e * m, terms.iter().map(|&(k, c)| (k * m as i64, c)));
        prop_assert_eq!(&low, &high);
        prop_assert_eq!(low.conductor(), high.conductor());
        prop_assert!((e * m) % low.conductor() == 0);
    }

    /// Adding a vanishing sum `Σ_j ζ_p^j` (rotated, at a prime divisor p
    /// of e) does not change the value.
    #[test]
    fn vanishing_sums_are_absorbed((e, x, _y, _z) in triple(), shift in 0i64..60) {
        for p in (2..=e).filter(|p| e % p == 0 && (2..*p).all(|d| p % d != 0)) {
            let step = (e / p) as i64;
            let zero = Cyclotomic::from_exponents(e, (0..p as i64).map(|j| (shift + j * step, 1)));
            prop_assert!(zero.is_zero());
            prop_assert_eq!(&x + &zero, x.clone());
        }
    }

    #[test]
    fn serde_round_trip((_e, x, _y, _z) in triple()) {
        let s = serde_json::to_string(&x).unwrap();
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, x);
    }
}

#[test]
fn geometric_sums_vanish() {
    for e in 2..=60u32 {
        let sum = (0..e as i64).fold(Cyclotomic::zero(), |acc, k| &acc + &Cyclotomic::root_of_unity(e, k));
        assert!(sum.is_zero(), "e = {e}");
    }
}

#[test]
fn spot_values() {
    let z3 = Cyclotomic::root_of_unity(3, 1);
    let z3_2 = Cyclotomic::root_of_unity(3, 2);
    assert_eq!((&z3 + &z3_2).as_i64(), Some(-1));
    assert_eq!(Cyclotomic::root_of_unity(5, 2).conjugate(), Cyclotomic::root_of_unity(5, 3));
    let i = Cyclotomic::root_of_unity(4, 1);
    assert!((&i + &Cyclotomic::root_of_unity(4, 3)).is_zero());
    assert_eq!(z3.real_double_part().as_i64(), Some(-1));
    assert_eq!(Cyclotomic::from_exponents(6, [(0, 2)]).as_i64(), Some(2));
    assert_eq!(serde_json::to_string(&Cyclotomic::from_int(-3)).unwrap(), "-3");
}
