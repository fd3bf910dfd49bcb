//! The multiplicative group: orders, generators, roots of unity, discrete
//! logarithms and d-th roots.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{FieldCtx, FieldElem, FieldError};
use crate::numtheory::{BigFactorization, IntFactorization};

/// Group orders up to this many bits are handled through a generator;
/// larger groups use generator-free methods.
const SMALL_GROUP_BITS: u64 = 64;
/// Largest prime subgroup order solved by baby-step giant-step when taking
/// d-th roots through a full discrete logarithm.
const DLOG_PRIME_LIMIT: u64 = 1 << 24;

fn reduce_order(x: &FieldElem, mut order: BigUint, fac: &BigFactorization) -> BigUint {
    for l in fac.primes() {
        while (&order % l).is_zero() && x.pow(&(&order / l)).is_one() {
            order /= l;
        }
    }
    order
}

/// Multiplicative order of a nonzero element, by dividing primes out of the
/// group order.
pub fn element_order(x: &FieldElem) -> Result<BigUint, FieldError> {
    if x.is_zero() {
        return Err(FieldError::ZeroElement);
    }
    let ctx = x.ctx();
    let fac = ctx.group_factorization()?;
    Ok(reduce_order(x, ctx.group_order().clone(), fac))
}

/// Order of `x` given a known multiple of it.
pub fn order_dividing(x: &FieldElem, multiple: u64) -> Result<u64, FieldError> {
    if x.is_zero() {
        return Err(FieldError::ZeroElement);
    }
    if !x.pow_u64(multiple).is_one() {
        return Err(FieldError::OrderNotDividing {
            d: multiple.to_string(),
            order: "the element order".into(),
        });
    }
    let fac = IntFactorization::of(multiple);
    let mut order = multiple;
    for l in fac.primes() {
        while order.is_multiple_of(l) && x.pow_u64(order / l).is_one() {
            order /= l;
        }
    }
    Ok(order)
}

impl FieldCtx {
    /// Smallest element in coordinate-lex order of order `p^m - 1`.
    pub fn generator(&self) -> Result<FieldElem, FieldError> {
        let fac = self.group_factorization()?;
        let coords = self
            .inner()
            .generator
            .get_or_init(|| {
                let n = self.group_order();
                let cofactors: Vec<BigUint> = fac.primes().map(|l| n / l).collect();
                (1u64..).find_map(|i| {
                    let x = self.element_at(i);
                    cofactors
                        .iter()
                        .all(|c| !x.pow(c).is_one())
                        .then(|| x.coords().to_vec())
                })
            })
            .clone()
            .expect("cyclic group has a generator");
        self.from_coords(&coords)
    }

    fn is_small_group(&self) -> bool {
        self.group_order().bits() <= SMALL_GROUP_BITS
    }

    fn full_log_feasible(&self) -> bool {
        self.is_small_group()
            && self.group_factorization().is_ok_and(|f| {
                f.primes()
                    .all(|l| l.to_u64().is_some_and(|l| l <= DLOG_PRIME_LIMIT))
            })
    }
}

fn check_divides(ctx: &FieldCtx, d: u64) -> Result<(), FieldError> {
    if d == 0 || !(ctx.group_order() % d).is_zero() {
        return Err(FieldError::OrderNotDividing {
            d: d.to_string(),
            order: ctx.group_order().to_string(),
        });
    }
    Ok(())
}

/// An element of order exactly `d`.
///
/// For groups whose order fits a machine word this is `g^((p^m-1)/d)` with
/// `g` the context generator. For larger groups it is `x^((p^m-1)/d)` for the
/// coordinate-lex smallest `x` making that power have order `d`, which avoids
/// factoring the full group order.
pub fn primitive_root_of_unity(ctx: &FieldCtx, d: u64) -> Result<FieldElem, FieldError> {
    check_divides(ctx, d)?;
    if d == 1 {
        return Ok(ctx.one());
    }
    let cache = &ctx.inner().unity_roots;
    if let Some(coords) = cache.lock().expect("poisoned").get(&d) {
        return ctx.from_coords(coords);
    }
    let cof = ctx.group_order() / d;
    let root = if ctx.is_small_group() {
        ctx.generator()?.pow(&cof)
    } else {
        let primes: Vec<u64> = IntFactorization::of(d).primes().collect();
        (1u64..)
            .map(|i| ctx.element_at(i).pow(&cof))
            .find(|y| primes.iter().all(|&l| !y.pow_u64(d / l).is_one()))
            .expect("the cyclic group contains elements of every dividing order")
    };
    cache
        .lock()
        .expect("poisoned")
        .insert(d, root.coords().to_vec());
    Ok(root)
}

fn small_log(gamma: &FieldElem, h: &FieldElem, l: u64) -> Option<u64> {
    if l <= 64 {
        let mut cur = gamma.ctx().one();
        for x in 0..l {
            if &cur == h {
                return Some(x);
            }
            cur = &cur * gamma;
        }
        return None;
    }
    // baby-step giant-step
    let m = (l as f64).sqrt().ceil() as u64;
    let mut table = HashMap::with_capacity(m as usize);
    let mut cur = gamma.ctx().one();
    for j in 0..m {
        table.entry(cur.coords().to_vec()).or_insert(j);
        cur = &cur * gamma;
    }
    let giant = gamma.pow_u64(m).inv()?;
    let mut y = h.clone();
    for i in 0..m {
        if let Some(&j) = table.get(y.coords()) {
            return Some(i * m + j);
        }
        y = &y * &giant;
    }
    None
}

/// Discrete logarithm `x` in `[0, order)` with `base^x = target`, where
/// `order` is the order of `base` with the given factorization
/// (Pohlig-Hellman over the prime powers, BSGS for each prime).
pub fn discrete_log(
    base: &FieldElem,
    target: &FieldElem,
    order: &BigUint,
    factors: &BigFactorization,
) -> Option<BigUint> {
    let mut acc = BigUint::zero();
    let mut modulus = BigUint::one();
    for (l, k) in factors.iter() {
        let l_small = l.to_u64()?;
        let lk = l.pow(k);
        let cof = order / &lk;
        let g = base.pow(&cof);
        let h = target.pow(&cof);
        let gamma = g.pow(&l.pow(k - 1));
        let g_inv = g.inv()?;
        let mut x = BigUint::zero();
        let mut lpow = BigUint::one();
        for i in 0..k {
            let hi = (&h * &g_inv.pow(&x)).pow(&l.pow(k - 1 - i));
            let digit = small_log(&gamma, &hi, l_small)?;
            x += &lpow * digit;
            lpow *= l;
        }
        (acc, modulus) = crt_pair(&acc, &modulus, &x, &lk);
    }
    if base.pow(&acc) == *target {
        Some(acc)
    } else {
        None
    }
}

fn crt_pair(a: &BigUint, m: &BigUint, b: &BigUint, n: &BigUint) -> (BigUint, BigUint) {
    let (ai, mi, bi, ni) = (
        BigInt::from(a.clone()),
        BigInt::from(m.clone()),
        BigInt::from(b.clone()),
        BigInt::from(n.clone()),
    );
    let eg = mi.extended_gcd(&ni);
    debug_assert!(eg.gcd.is_one());
    let mn = &mi * &ni;
    let t = ((&bi - &ai) * eg.x).mod_floor(&ni);
    let x = (ai + mi * t).mod_floor(&mn);
    (x.to_biguint().unwrap(), mn.to_biguint().unwrap())
}

fn inverse_mod_big(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let eg = BigInt::from(a.clone()).extended_gcd(&BigInt::from(m.clone()));
    if !eg.gcd.is_one() {
        return None;
    }
    eg.x.mod_floor(&BigInt::from(m.clone())).to_biguint()
}

/// Some `b` with `b^d = a` in `a`'s field.
///
/// When the group order is small with small prime factors: `a = g^e` by
/// discrete log, then `g^e'` for the smallest nonnegative `e'` with
/// `d*e' = e (mod p^m - 1)`. Otherwise the root is assembled from the Sylow
/// part of the group belonging to the primes of `d`.
pub fn dth_root(a: &FieldElem, d: u64) -> Result<FieldElem, FieldError> {
    if a.is_zero() {
        return Err(FieldError::ZeroElement);
    }
    if d == 0 {
        return Err(FieldError::NoRoot { d });
    }
    let ctx = a.ctx();
    let n = ctx.group_order();
    let g0 = n.gcd(&BigUint::from(d));
    if !a.pow(&(n / &g0)).is_one() {
        return Err(FieldError::NoRoot { d });
    }
    if d == 1 {
        return Ok(a.clone());
    }
    if ctx.full_log_feasible() {
        dth_root_by_log(a, d)
    } else {
        dth_root_sylow(a, d)
    }
}

fn dth_root_by_log(a: &FieldElem, d: u64) -> Result<FieldElem, FieldError> {
    let ctx = a.ctx();
    let n = ctx.group_order();
    let g = ctx.generator()?;
    let fac = ctx.group_factorization()?;
    let e = discrete_log(&g, a, n, fac).expect("a generator reaches every unit");
    let d = BigUint::from(d);
    let g0 = n.gcd(&d);
    if !(&e % &g0).is_zero() {
        return Err(FieldError::NoRoot {
            d: d.to_u64().unwrap_or(0),
        });
    }
    let reduced = n / &g0;
    let inv = inverse_mod_big(&((&d / &g0) % &reduced), &reduced).expect("coprime after reduction");
    let exp = ((&e / &g0) * inv) % &reduced;
    Ok(g.pow(&exp))
}

fn dth_root_sylow(a: &FieldElem, d: u64) -> Result<FieldElem, FieldError> {
    let ctx = a.ctx();
    let n = ctx.group_order();
    // Sylow part of the group for the primes of d
    let mut sylow = BigUint::one();
    let mut pairs = Vec::new();
    for l in IntFactorization::of(d).primes() {
        let bl = BigUint::from(l);
        let mut v = 0u32;
        let mut rest = n.clone();
        while (&rest % &bl).is_zero() {
            rest /= &bl;
            v += 1;
        }
        if v > 0 {
            sylow *= bl.pow(v);
            pairs.push((bl, v));
        }
    }
    let u = n / &sylow;
    let fac = BigFactorization::from_pairs(pairs);
    let h = a.pow(&u);
    let beta = if sylow.is_one() {
        ctx.one()
    } else {
        let cofactors: Vec<BigUint> = fac.primes().map(|l| n / l).collect();
        let z = (1u64..)
            .map(|i| ctx.element_at(i))
            .find(|c| cofactors.iter().all(|cf| !c.pow(cf).is_one()))
            .expect("Sylow subgroup is cyclic")
            .pow(&u);
        let e = discrete_log(&z, &h, &sylow, &fac).ok_or(FieldError::NoRoot { d })?;
        let bd = BigUint::from(d);
        let g0 = sylow.gcd(&bd);
        if !(&e % &g0).is_zero() {
            return Err(FieldError::NoRoot { d });
        }
        let reduced = &sylow / &g0;
        let inv = inverse_mod_big(&((&bd / &g0) % &reduced), &reduced).expect("coprime");
        z.pow(&(((&e / &g0) * inv) % &reduced))
    };
    // x*u = 1 + t*d, then (beta^x * a^(-t))^d = a
    let bd = BigUint::from(d);
    let x = inverse_mod_big(&(&u % &bd), &bd).expect("u is coprime to d");
    let t = (&x * &u - 1u32) / &bd;
    let a_inv = a.inv().ok_or(FieldError::ZeroElement)?;
    Ok(beta.pow(&x) * a_inv.pow(&t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldCtx {
        FieldCtx::prime(p).unwrap()
    }

    #[test]
    fn element_order_examples() {
        assert_eq!(element_order(&fp(7).one()).unwrap(), BigUint::one());
        assert_eq!(
            element_order(&fp(7).from_int(3)).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            element_order(&fp(5).from_int(4)).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(element_order(&fp(5).zero()), Err(FieldError::ZeroElement));
    }

    #[test]
    fn roots_of_unity_examples() {
        assert!(primitive_root_of_unity(&fp(5), 1).unwrap().is_one());
        assert_eq!(
            primitive_root_of_unity(&fp(5), 4).unwrap(),
            fp(5).from_int(2)
        );
        assert!(matches!(
            primitive_root_of_unity(&fp(3), 4),
            Err(FieldError::OrderNotDividing { .. })
        ));
    }

    #[test]
    fn generator_examples() {
        assert_eq!(fp(7).generator().unwrap(), fp(7).from_int(3));
        assert_eq!(fp(5).generator().unwrap(), fp(5).from_int(2));
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        let g = f9.generator().unwrap();
        assert_eq!(element_order(&g).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn dth_root_examples() {
        assert!(dth_root(&fp(5).one(), 2).unwrap().is_one());
        assert_eq!(dth_root(&fp(7).from_int(4), 2).unwrap(), fp(7).from_int(2));
        assert_eq!(
            dth_root(&fp(5).from_int(2), 2),
            Err(FieldError::NoRoot { d: 2 })
        );
    }

    #[test]
    fn dth_root_criterion_exhaustive_small() {
        for q in [4u64, 5, 7, 8, 9, 13, 16, 25] {
            let ctx = FieldCtx::from_prime_power(q).unwrap();
            for d in 1..=12u64 {
                let g0 = num_integer::gcd(d, q - 1);
                for a in ctx.elements().skip(1) {
                    let exists = a.pow_u64((q - 1) / g0).is_one();
                    match dth_root(&a, d) {
                        Ok(b) => {
                            assert!(exists);
                            assert_eq!(b.pow_u64(d), a);
                        }
                        Err(FieldError::NoRoot { .. }) => assert!(!exists),
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn large_group_routes() {
        let ctx = FieldCtx::new(13, 29, None).unwrap();
        assert!(!ctx.is_small_group());
        for d in [2u64, 3, 4, 6, 7, 12, 14] {
            if !(ctx.group_order() % d).is_zero() {
                continue;
            }
            let z = primitive_root_of_unity(&ctx, d).unwrap();
            assert!(z.pow_u64(d).is_one());
            for l in IntFactorization::of(d).primes() {
                assert!(!z.pow_u64(d / l).is_one());
            }
        }
        for i in 2..30u64 {
            let a = ctx.element_at(i * 977);
            let sq = a.square();
            let b = dth_root(&sq, 2).unwrap();
            assert_eq!(b.square(), sq);
            let a12 = a.pow_u64(12);
            assert_eq!(dth_root(&a12, 12).unwrap().pow_u64(12), a12);
        }
    }

    #[test]
    fn discrete_log_round_trip() {
        let ctx = FieldCtx::new(2, 20, None).unwrap();
        let g = ctx.generator().unwrap();
        let fac = ctx.group_factorization().unwrap();
        for e in [0u64, 1, 12345, 1048574] {
            let h = g.pow_u64(e);
            assert_eq!(
                discrete_log(&g, &h, ctx.group_order(), fac).unwrap(),
                BigUint::from(e)
            );
        }
    }

    #[test]
    fn order_dividing_checks_multiple() {
        let f = fp(13);
        assert_eq!(order_dividing(&f.from_int(5), 12).unwrap(), 4);
        assert!(order_dividing(&f.from_int(2), 6).is_err());
    }
}
