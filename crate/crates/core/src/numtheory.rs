//! Integer-side machinery: factorization, radicals, valuations, multiplicative
//! orders, the order split `n = n1 * n2` and q-cyclotomic cosets.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumTheoryError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{a} and {n} are not coprime")]
    NotCoprime { a: u64, n: u64 },
    #[error("prime {p} does not divide {value}")]
    PNotDividing { p: u64, value: u64 },
    #[error("argument must be positive")]
    NonPositive,
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization of a machine-word integer.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntFactorization {
    factors: BTreeMap<u64, u32>,
}

impl IntFactorization {
    pub fn of(n: u64) -> Self {
        assert!(n > 0, "cannot factor zero");
        let mut factors = BTreeMap::new();
        factor_into(n, &mut factors);
        IntFactorization { factors }
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|(&p, &e)| p.pow(e)).product()
    }

    pub fn radical(&self) -> u64 {
        self.factors.keys().product()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Prime factorization of an arbitrary-precision integer (group orders of
/// large extension fields).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigFactorization {
    factors: BTreeMap<BigUint, u32>,
}

impl BigFactorization {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (BigUint, u32)>) -> Self {
        let mut out = BigFactorization::default();
        for (p, e) in pairs {
            if e > 0 {
                out.insert(p, e);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BigUint, u32)> + '_ {
        self.factors.iter().map(|(p, &e)| (p, e))
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> + '_ {
        self.factors.keys()
    }

    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .map(|(p, &e)| p.pow(e))
            .fold(BigUint::one(), |acc, x| acc * x)
    }

    fn insert(&mut self, p: BigUint, e: u32) {
        *self.factors.entry(p).or_insert(0) += e;
    }
}

impl From<&IntFactorization> for BigFactorization {
    fn from(f: &IntFactorization) -> Self {
        BigFactorization {
            factors: f.iter().map(|(p, e)| (BigUint::from(p), e)).collect(),
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists. `mod_inverse(_, 1) == Some(0)`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let egcd = BigInt::from(a % m).extended_gcd(&BigInt::from(m));
    if !egcd.gcd.is_one() {
        return None;
    }
    let x = egcd.x.mod_floor(&BigInt::from(m));
    x.to_u64()
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn factor_into(mut n: u64, out: &mut BTreeMap<u64, u32>) {
    for p in [2u64, 3, 5] {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    // wheel 30
    let mut d = 7u64;
    let steps = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut k = 0;
    while d <= TRIAL_LIMIT && d.saturating_mul(d) <= n {
        while n.is_multiple_of(d) {
            *out.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += steps[k];
        k = (k + 1) % steps.len();
    }
    if n > 1 {
        split_large(n, out);
    }
}

fn split_large(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Brent's variant of Pollard rho; `n` must be composite and odd.
fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut r = 1u64;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(128.min(r - k)) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

pub fn radical(n: u64) -> u64 {
    assert!(n > 0, "radical of zero");
    IntFactorization::of(n).radical()
}

/// Exact exponent of the prime `p` in `n`.
pub fn p_adic(n: u64, p: u64) -> Result<u32, NumTheoryError> {
    if !is_prime(p) {
        return Err(NumTheoryError::NotPrime(p));
    }
    if n == 0 {
        return Err(NumTheoryError::NonPositive);
    }
    Ok(valuation(n, p))
}

pub(crate) fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Multiplicative order of `m` modulo `n`.
pub fn ord_mod(m: u64, n: u64) -> Result<u64, NumTheoryError> {
    if n == 0 {
        return Err(NumTheoryError::NonPositive);
    }
    if n == 1 {
        return Ok(1);
    }
    if gcd(m % n, n) != 1 {
        return Err(NumTheoryError::NotCoprime { a: m, n });
    }
    // exponent of (Z/nZ)^*: start from phi(n) and divide out
    let mut order = euler_phi(n);
    for (p, _) in IntFactorization::of(order).iter() {
        while order.is_multiple_of(p) && pow_mod(m, order / p, n) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// Splits `n = n1 * n2` where `n1` collects the prime powers of `n` whose
/// primes divide `e`, so that `rad(n1) | e` and `gcd(n2, e) = 1`.
pub fn split_by_order(n: u64, e: u64) -> (u64, u64) {
    assert!(n > 0 && e > 0);
    let mut n1 = 1;
    for (p, k) in IntFactorization::of(n).iter() {
        if e.is_multiple_of(p) {
            n1 *= p.pow(k);
        }
    }
    (n1, n / n1)
}

pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0);
    IntFactorization::of(n)
        .iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0);
    let mut divs = vec![1u64];
    for (p, e) in IntFactorization::of(n).iter() {
        let current = divs.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// `nu_p(q^m - 1)` for a prime `p | q - 1`, by the odd/even case split.
pub fn beyl_valuation(q: u64, p: u64, m: u64) -> Result<u32, NumTheoryError> {
    if !is_prime(p) {
        return Err(NumTheoryError::NotPrime(p));
    }
    if q < 2 || m == 0 {
        return Err(NumTheoryError::NonPositive);
    }
    if !(q - 1).is_multiple_of(p) {
        return Err(NumTheoryError::PNotDividing { p, value: q - 1 });
    }
    let base = valuation(q - 1, p);
    if p != 2 {
        return Ok(base + valuation(m, p));
    }
    if m % 2 == 1 {
        Ok(base)
    } else {
        Ok(base + valuation(m, 2) + valuation(q + 1, 2) - 1)
    }
}

/// Partition of `{0, .., d-1}` into orbits under `i -> i*q mod d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    pub q: u64,
    pub d: u64,
    /// Each coset sorted ascending; cosets ordered by their smallest member.
    pub cosets: Vec<Vec<u64>>,
    /// Smallest member of each coset, aligned with `cosets`.
    pub reps: Vec<u64>,
}

impl CosetTable {
    pub fn coset_of(&self, i: u64) -> &[u64] {
        let i = i % self.d;
        self.cosets
            .iter()
            .find(|c| c.binary_search(&i).is_ok())
            .expect("cosets partition the residues")
    }
}

pub fn coset_table(q: u64, d: u64) -> Result<CosetTable, NumTheoryError> {
    if d == 0 {
        return Err(NumTheoryError::NonPositive);
    }
    if gcd(q % d, d) != 1 && d != 1 {
        return Err(NumTheoryError::NotCoprime { a: q, n: d });
    }
    let mut seen = vec![false; d as usize];
    let mut cosets = Vec::new();
    let qm = q % d;
    for start in 0..d {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i as usize] {
            seen[i as usize] = true;
            coset.push(i);
            i = mul_mod(i, qm, d);
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    let reps = cosets.iter().map(|c| c[0]).collect();
    Ok(CosetTable { q, d, cosets, reps })
}

/// `(q^t - 1) mod m` without overflow.
pub(crate) fn prime_power_minus_one_mod(q: u64, t: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    (pow_mod(q, t, m) + m - 1) % m
}

/// `gcd(n, (q^t - 1) / e)` for `e | q^t - 1`.
pub(crate) fn gcd_with_quotient(n: u64, q: u64, t: u64, e: u64) -> u64 {
    let modulus = n as u128 * e as u128;
    assert!(modulus < u64::MAX as u128, "modulus overflow");
    let r = prime_power_minus_one_mod(q, t, modulus as u64);
    debug_assert_eq!(r % e, 0);
    gcd(n, r / e)
}

// ---------------------------------------------------------------------------
// Arbitrary-precision factorization (desk scale, with an effort budget)

const RHO_BUDGET: u64 = 1 << 22;

fn big_is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let a = BigUint::from(a);
        if &a % n == BigUint::zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn big_rho(n: &BigUint) -> Option<BigUint> {
    let one = BigUint::one();
    for c in 1u64..16 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut steps = 0u64;
        let mut acc = BigUint::one();
        let mut batch = Vec::new();
        loop {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            acc = (acc * &diff) % n;
            batch.push((x.clone(), y.clone()));
            steps += 1;
            if batch.len() == 64 || steps > RHO_BUDGET {
                let g = acc.gcd(n);
                if g == *n {
                    // backtrack inside the batch
                    for (bx, by) in batch.drain(..) {
                        let d = if bx > by { &bx - &by } else { &by - &bx };
                        let g = d.gcd(n);
                        if g != one && g != *n {
                            return Some(g);
                        }
                    }
                    break;
                } else if g != one {
                    return Some(g);
                }
                batch.clear();
                if steps > RHO_BUDGET {
                    return None;
                }
            }
        }
    }
    None
}

fn big_split(n: BigUint, out: &mut BigFactorization) -> bool {
    if n.is_one() {
        return true;
    }
    if let Some(small) = n.to_u64() {
        for (p, e) in IntFactorization::of(small).iter() {
            out.insert(BigUint::from(p), e);
        }
        return true;
    }
    if big_is_probable_prime(&n) {
        out.insert(n, 1);
        return true;
    }
    match big_rho(&n) {
        Some(d) => {
            let rest = &n / &d;
            big_split(d, out) && big_split(rest, out)
        }
        None => false,
    }
}

/// Factors an arbitrary-precision integer by trial division up to 10^6 and
/// Pollard rho; `None` when the rho budget is exhausted.
pub fn factor_big(n: &BigUint) -> Option<BigFactorization> {
    assert!(!n.is_zero());
    let mut out = BigFactorization::default();
    let mut rest = n.clone();
    if let Some(small) = rest.to_u64() {
        return Some((&IntFactorization::of(small)).into());
    }
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigUint::from(d);
        if &bd * &bd > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            out.insert(bd, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if big_split(rest, &mut out) {
        Some(out)
    } else {
        None
    }
}

/// `Phi_d(x)` evaluated at an integer.
pub fn cyclotomic_value(d: u64, x: u64) -> BigUint {
    let x = BigInt::from(x);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for e in divisors(d) {
        let term = x.pow(e as u32) - 1u32;
        match mobius(d / e) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    (num / den)
        .to_biguint()
        .expect("cyclotomic values are positive")
}

fn mobius(n: u64) -> i32 {
    let f = IntFactorization::of(n);
    if f.iter().any(|(_, e)| e > 1) {
        0
    } else if f.iter().count().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Factorization of `Phi_d(p)`, memoized across calls.
fn factor_cyclotomic_value(d: u64, p: u64) -> Option<BigFactorization> {
    type Cache = Mutex<HashMap<(u64, u64), Option<BigFactorization>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("poisoned").get(&(d, p)) {
        return hit.clone();
    }
    let value = cyclotomic_value(d, p);
    let f = if value.is_one() {
        Some(BigFactorization::default())
    } else {
        factor_big(&value)
    };
    cache.lock().expect("poisoned").insert((d, p), f.clone());
    f
}

/// Factors `p^m - 1` through its cyclotomic decomposition `prod_{d|m} Phi_d(p)`.
pub fn factor_prime_power_minus_one(p: u64, m: u64) -> Option<BigFactorization> {
    let mut out = BigFactorization::default();
    for d in divisors(m) {
        for (q, e) in factor_cyclotomic_value(d, p)?.iter() {
            out.insert(q.clone(), e);
        }
    }
    Some(out)
}
