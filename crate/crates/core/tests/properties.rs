use std::collections::BTreeMap;

use cyclofactor::factorizer::{
    factor_binomial, factor_binomial_with_choices, serret_irreducible, unity_shortcut, PlanChoices,
};
use cyclofactor::field::{
    dth_root, element_order, order_dividing, primitive_root_of_unity, FieldCtx, FieldElem,
};
use cyclofactor::numtheory::{coset_table, gcd, mod_inverse, ord_mod, radical};
use cyclofactor::oracle::{self, OracleConfig};
use cyclofactor::{Factorization, Poly};
use num_bigint::BigUint;
use proptest::prelude::*;

const FIELDS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

fn counts(fz: &Factorization) -> BTreeMap<String, u64> {
    let mut out = BTreeMap::new();
    for f in &fz.factors {
        *out.entry(f.poly.to_string()).or_default() += f.multiplicity;
    }
    out
}

fn ord(a: &FieldElem) -> u64 {
    let q = a.ctx().size_u64().unwrap();
    order_dividing(a, q - 1).unwrap()
}

/// A field from the grid and a nonzero element, drawn by index.
fn field_and_element() -> impl Strategy<Value = (FieldCtx, FieldElem)> {
    (
        prop::sample::select(FIELDS.to_vec()),
        any::<prop::sample::Index>(),
    )
        .prop_map(|(q, idx)| {
            let ctx = FieldCtx::from_prime_power(q).unwrap();
            let a = ctx.element_at(1 + idx.index(q as usize - 1) as u64);
            (ctx, a)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn factors_do_not_depend_on_root_choices(
        (_ctx, a) in field_and_element(),
        n in 1u64..=40,
        zeta_d1_exp in 1u64..12,
        zeta_d2_exp in 1u64..12,
        b_twist in 0u64..12,
    ) {
        let choices = PlanChoices { zeta_d1_exp, zeta_d2_exp, b_twist };
        let default = factor_binomial(&a, n).unwrap();
        let other = factor_binomial_with_choices(&a, n, &choices).unwrap();
        prop_assert_eq!(counts(&default), counts(&other));
        let orders = |fz: &Factorization| {
            let mut v: Vec<_> = fz.factors.iter().map(|f| (f.poly.to_string(), f.order)).collect();
            v.sort();
            v
        };
        prop_assert_eq!(orders(&default), orders(&other));
    }

    #[test]
    fn shortcut_matches_formula((_ctx, a) in field_and_element(), n in 1u64..=48) {
        if let Some(short) = unity_shortcut(&a, n).unwrap() {
            prop_assert_eq!(counts(&short), counts(&factor_binomial(&a, n).unwrap()));
            prop_assert_eq!(short.product(), Poly::binomial(n as usize, &a));
        }
    }

    #[test]
    fn twisting_by_roots_of_unity_raises_the_order(
        (ctx, a) in field_and_element(),
        j in 1u64..13,
    ) {
        let q = ctx.size_u64().unwrap();
        let o = ord(&a);
        for p in (2..q).filter(|&p| cyclofactor::numtheory::is_prime(p) && (q - 1) % p == 0 && !o.is_multiple_of(p)) {
            let r = mod_inverse(p % o, o).unwrap_or(1);
            let ar = a.pow_u64(r);
            prop_assert_eq!(ord(&ar), o);
            let zeta = primitive_root_of_unity(&ctx, p).unwrap();
            let twisted = zeta.pow_u64(1 + (j - 1) % (p - 1)).mul(&ar);
            prop_assert_eq!(ord(&twisted), p * o);
        }
    }

    #[test]
    fn one_step_splits_into_irreducible_binomials(
        (ctx, a) in field_and_element(),
        t in 1u64..=6,
    ) {
        let q = ctx.size_u64().unwrap();
        if !serret_irreducible(&a, t).unwrap() {
            return Ok(());
        }
        let o = ord(&a);
        for p in (2..q).filter(|&p| cyclofactor::numtheory::is_prime(p) && (q - 1) % (p * o) == 0) {
            let b = dth_root(&a, p).unwrap();
            let zeta = primitive_root_of_unity(&ctx, p).unwrap();
            let mut expected = BTreeMap::new();
            for j in 0..p {
                let root = zeta.pow_u64(j).mul(&b);
                prop_assert!(serret_irreducible(&root, t).unwrap());
                *expected.entry(Poly::binomial(t as usize, &root).to_string()).or_insert(0) += 1;
            }
            prop_assert_eq!(counts(&factor_binomial(&a, t * p).unwrap()), expected);
        }
    }

    #[test]
    fn radical_dividing_the_order_fixes_degrees((ctx, a) in field_and_element(), n in 1u64..=60) {
        let q = ctx.size_u64().unwrap();
        let o = ord(&a);
        if n % ctx.p() == 0 || !o.is_multiple_of(radical(n)) {
            return Ok(());
        }
        let d = |s: u32| gcd(n, (q.pow(s) - 1) / o);
        let k = if n % 4 != 0 || q % 4 == 1 { n / d(1) } else { 2 * n / d(2) };
        let fz = factor_binomial(&a, n).unwrap();
        for f in &fz.factors {
            prop_assert_eq!(f.degree as u64, k);
            prop_assert_eq!(f.order, Some(o * n));
        }
    }

    #[test]
    fn root_extraction_inverts_powering((ctx, a) in field_and_element(), d in 1u64..=30) {
        let q = ctx.size_u64().unwrap();
        let solvable = a.pow_u64((q - 1) / gcd(d, q - 1)).is_one();
        match dth_root(&a, d) {
            Ok(b) => {
                prop_assert!(solvable);
                prop_assert_eq!(b.pow_u64(d), a);
            }
            Err(_) => prop_assert!(!solvable),
        }
    }

    #[test]
    fn element_order_is_minimal((_ctx, a) in field_and_element()) {
        let o = u64::try_from(element_order(&a).unwrap()).unwrap();
        prop_assert!(a.pow_u64(o).is_one());
        for t in 1..o {
            prop_assert!(!a.pow_u64(t).is_one());
        }
    }

    #[test]
    fn cosets_partition_residues(q in prop::sample::select(FIELDS.to_vec()), d in 1u64..=80) {
        if gcd(q, d) != 1 {
            return Ok(());
        }
        let table = coset_table(q, d).unwrap();
        let mut all: Vec<u64> = table.cosets.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..d).collect::<Vec<_>>());
        for coset in &table.cosets {
            let i = coset[0];
            prop_assert_eq!(coset.len() as u64, ord_mod(q, d / gcd(i, d)).unwrap());
        }
    }

    #[test]
    fn polynomial_order_divides_the_group_order(
        q in prop::sample::select(vec![2u64, 3, 4, 5, 7]),
        coeffs in prop::collection::vec(any::<u64>(), 1..=4),
    ) {
        let ctx = FieldCtx::from_prime_power(q).unwrap();
        let mut c: Vec<FieldElem> = coeffs.iter().map(|&x| ctx.element_at(x % q)).collect();
        c.push(ctx.one());
        let f = Poly::from_coeffs(&ctx, c);
        if f.coeff(0).is_zero() || !oracle::is_irreducible(&f).unwrap() {
            return Ok(());
        }
        let e = f.poly_order().unwrap();
        let deg = f.degree().unwrap() as u32;
        prop_assert_eq!((q.pow(deg) - 1) % e, 0);
        let x = Poly::x(&ctx);
        prop_assert_eq!(x.pow_mod(&BigUint::from(e), &f).unwrap(), Poly::one(&ctx));
    }

    #[test]
    fn oracle_factors_reconstruct(
        q in prop::sample::select(vec![2u64, 3, 4, 5, 9]),
        coeffs in prop::collection::vec(any::<u64>(), 2..=14),
        seed in any::<u64>(),
    ) {
        let ctx = FieldCtx::from_prime_power(q).unwrap();
        let f = Poly::from_coeffs(&ctx, coeffs.iter().map(|&x| ctx.element_at(x % q)).collect());
        if f.degree().unwrap_or(0) == 0 {
            return Ok(());
        }
        let cfg = OracleConfig { rng_seed: seed, ..OracleConfig::default() };
        let fz = oracle::brute_factor(&f, &cfg).unwrap();
        prop_assert_eq!(&fz.product(), &f);
        for factor in &fz.factors {
            prop_assert!(factor.poly.is_monic());
            prop_assert!(oracle::is_irreducible(&factor.poly).unwrap());
            prop_assert!(factor.poly.is_irreducible());
        }
        let again = oracle::brute_factor(&f, &OracleConfig { rng_seed: seed ^ 1, ..cfg }).unwrap();
        prop_assert_eq!(fz.multiset(), again.multiset());
    }
}

#[test]
fn oracle_multiplicities() {
    let f5 = FieldCtx::prime(5).unwrap();
    let square = Poly::from_ints(&f5, &[1, 3, 1]);
    let fz = oracle::brute_factor(&square, &OracleConfig::default()).unwrap();
    assert_eq!(fz.multiset(), vec![(Poly::from_ints(&f5, &[4, 1]), 2)]);

    let f9 = FieldCtx::from_prime_power(9).unwrap();
    for a in f9.elements().skip(1) {
        let fz = oracle::brute_factor(&Poly::binomial(3, &a), &OracleConfig::default()).unwrap();
        assert_eq!(fz.factors.len(), 1);
        assert_eq!(fz.factors[0].multiplicity, 3);
        assert_eq!(fz.factors[0].degree, 1);
        assert_eq!(counts(&fz), counts(&factor_binomial(&a, 3).unwrap()));
    }
}

#[test]
fn x_to_the_p_power_minus_a_matches_the_oracle_in_every_characteristic() {
    for q in [2u64, 3, 4, 8, 9] {
        let ctx = FieldCtx::from_prime_power(q).unwrap();
        let p = ctx.p();
        for a in ctx.elements().skip(1) {
            for n in [p, 2 * p, p * p, 3 * p * p] {
                let fz = factor_binomial(&a, n).unwrap();
                let reference = oracle::brute_factor(&fz.base, &OracleConfig::default()).unwrap();
                assert_eq!(counts(&fz), counts(&reference), "q={q} a={a} n={n}");
            }
        }
    }
}
