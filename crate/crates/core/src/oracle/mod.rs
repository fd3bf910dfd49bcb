//! Brute-force reference factorization used to check the closed formulas.
//!
//! Arithmetic runs on log/antilog tables built independently from the field
//! modulus (see [`gf`]); the algorithms are the textbook ones: squarefree
//! decomposition, distinct-degree and seeded Cantor-Zassenhaus equal-degree
//! splitting, Rabin's irreducibility test and exhaustive root search.

mod gf;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::factorization::{Factor, Factorization};
use crate::field::{FieldCtx, FieldElem};
use crate::numtheory::IntFactorization;
use crate::poly::Poly;
use gf::{small_field, Ring, SmallField, UPoly};

pub use gf::MAX_ORACLE_FIELD;

pub const DEFAULT_MAX_DEGREE: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("degree {degree} exceeds the oracle guard {max}")]
    DegreeGuard { degree: usize, max: usize },
    #[error("field {0} is too large for the oracle")]
    FieldTooLarge(String),
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub rng_seed: u64,
    pub max_total_degree: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            rng_seed: 0,
            max_total_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

struct Ctx {
    field: FieldCtx,
    tables: std::sync::Arc<SmallField>,
}

impl Ctx {
    fn new(field: &FieldCtx) -> Result<Ctx, OracleError> {
        match field.size_u64() {
            Some(q) if q <= MAX_ORACLE_FIELD => Ok(Ctx {
                field: field.clone(),
                tables: small_field(field.p(), field.modulus()),
            }),
            _ => Err(OracleError::FieldTooLarge(field.to_string())),
        }
    }

    fn ring(&self) -> Ring<'_> {
        Ring { f: &self.tables }
    }

    fn to_upoly(&self, f: &Poly) -> UPoly {
        f.coeffs()
            .iter()
            .map(|c| c.index().expect("small field") as u32)
            .collect()
    }

    fn to_poly(&self, u: &UPoly) -> Poly {
        Poly::from_coeffs(
            &self.field,
            u.iter().map(|&c| self.field.element_at(c as u64)).collect(),
        )
    }

    fn q(&self) -> u64 {
        self.tables.q as u64
    }
}

fn guard(f: &Poly, max: usize) -> Result<usize, OracleError> {
    let degree = f.degree().ok_or(OracleError::ZeroPolynomial)?;
    if degree > max {
        return Err(OracleError::DegreeGuard { degree, max });
    }
    Ok(degree)
}

/// Rabin's test: `f | X^(q^k) - X` and `gcd(f, X^(q^(k/t)) - X) = 1` for
/// every prime `t | k`.
pub fn is_irreducible(f: &Poly) -> Result<bool, OracleError> {
    let k = guard(f, DEFAULT_MAX_DEGREE)?;
    if k == 0 {
        return Ok(false);
    }
    if k == 1 {
        return Ok(true);
    }
    let cx = Ctx::new(f.ctx())?;
    let r = cx.ring();
    let g = r.monic(&cx.to_upoly(f));
    // X^(q^i) mod g for i = 0..=k
    let q = BigUint::from(cx.q());
    let mut frob = vec![r.rem(&r.x(), &g)];
    for i in 1..=k {
        let next = r.powmod(&frob[i - 1], &q, &g);
        frob.push(next);
    }
    if r.sub(&frob[k], &frob[0]).iter().any(|&c| c != 0) {
        return Ok(false);
    }
    for t in IntFactorization::of(k as u64).primes() {
        let d = r.sub(&frob[k / t as usize], &frob[0]);
        if r.deg(&r.gcd(&g, &d)) > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All roots in the coefficient field by evaluating at every element.
pub fn roots(f: &Poly) -> Result<Vec<FieldElem>, OracleError> {
    guard(f, DEFAULT_MAX_DEGREE)?;
    let cx = Ctx::new(f.ctx())?;
    let r = cx.ring();
    let u = cx.to_upoly(f);
    let out = (0..cx.tables.q)
        .filter(|&x| {
            u.iter()
                .rev()
                .fold(0u32, |acc, &c| r.f.add(r.f.mul(acc, x), c))
                == 0
        })
        .map(|x| cx.field.element_at(x as u64))
        .collect();
    Ok(out)
}

/// Complete factorization into monic irreducibles with multiplicities.
pub fn brute_factor(f: &Poly, cfg: &OracleConfig) -> Result<Factorization, OracleError> {
    guard(f, cfg.max_total_degree)?;
    let cx = Ctx::new(f.ctx())?;
    let r = cx.ring();
    let (unit, monic) = f.monic_parts().ok_or(OracleError::ZeroPolynomial)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let mut pieces: Vec<(UPoly, u64)> = Vec::new();
    for (part, mult) in squarefree(&r, &cx.to_upoly(&monic)) {
        for (block, deg) in distinct_degree(&r, &part) {
            let mut found = Vec::new();
            equal_degree(&r, &block, deg, &mut rng, &mut found);
            pieces.extend(found.into_iter().map(|g| (g, mult)));
        }
    }
    let factors = pieces
        .into_iter()
        .map(|(g, mult)| Factor::new(cx.to_poly(&g), mult, None))
        .collect();
    Ok(Factorization::new(f.clone(), unit, factors, None))
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, i)` with the
/// `g` squarefree, pairwise coprime, and `f = prod g^i`.
fn squarefree(r: &Ring<'_>, f: &UPoly) -> Vec<(UPoly, u64)> {
    let mut out = Vec::new();
    if r.deg(f) < 1 {
        return out;
    }
    let p = r.f.p as u64;
    let d = r.derivative(f);
    let mut c = r.gcd(f, &d);
    let mut w = r.divrem(f, &c).0;
    let mut i = 1u64;
    while r.deg(&w) > 0 {
        let y = r.gcd(&w, &c);
        let z = r.divrem(&w, &y).0;
        if r.deg(&z) > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = r.divrem(&c, &y).0;
    }
    if r.deg(&c) > 0 {
        // c is a p-th power: take the p-th root coefficientwise
        let root: UPoly = c
            .iter()
            .step_by(p as usize)
            .map(|&x| r.f.pth_root(x))
            .collect();
        for (g, k) in squarefree(r, &r.trim(root)) {
            out.push((g, k * p));
        }
    }
    out
}

/// Groups the irreducible factors of a squarefree monic `f` by degree.
fn distinct_degree(r: &Ring<'_>, f: &UPoly) -> Vec<(UPoly, usize)> {
    let q = BigUint::from(r.f.q);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = r.rem(&r.x(), &g);
    let mut i = 1usize;
    while r.deg(&g) >= 2 * i as isize {
        h = r.powmod(&h, &q, &g);
        let d = r.gcd(&g, &r.sub(&h, &r.x()));
        if r.deg(&d) > 0 {
            g = r.divrem(&g, &d).0;
            h = r.rem(&h, &g);
            out.push((d, i));
        }
        i += 1;
    }
    if r.deg(&g) > 0 {
        let deg = r.deg(&g) as usize;
        out.push((g, deg));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `deg`.
fn equal_degree(r: &Ring<'_>, f: &UPoly, deg: usize, rng: &mut ChaCha8Rng, out: &mut Vec<UPoly>) {
    let n = r.deg(f) as usize;
    if n == deg {
        out.push(f.clone());
        return;
    }
    let q = r.f.q as u64;
    loop {
        let a: UPoly = r.trim((0..n).map(|_| rng.gen_range(0..q) as u32).collect());
        if r.deg(&a) < 1 {
            continue;
        }
        let b = if r.f.p == 2 {
            // trace map onto F_2: sum of a^(2^j), j < deg * log2(q)
            let bits = deg * r.f.m;
            let mut cur = r.rem(&a, f);
            let mut acc = cur.clone();
            for _ in 1..bits {
                cur = r.mulmod(&cur, &cur, f);
                acc = r.add(&acc, &cur);
            }
            acc
        } else {
            let e = (BigUint::from(q).pow(deg as u32) - 1u32) / 2u32;
            r.sub(&r.powmod(&a, &e, f), &vec![1])
        };
        let g = r.gcd(f, &b);
        let dg = r.deg(&g);
        if dg > 0 && (dg as usize) < n {
            let other = r.divrem(f, &g).0;
            equal_degree(r, &g, deg, rng, out);
            equal_degree(r, &other, deg, rng, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldCtx {
        FieldCtx::prime(p).unwrap()
    }

    fn texts(fz: &Factorization) -> Vec<(String, u64)> {
        fz.multiset()
            .into_iter()
            .map(|(p, m)| (p.to_string(), m))
            .collect()
    }

    #[test]
    fn irreducibility_examples() {
        let f3 = fp(3);
        assert!(is_irreducible(&Poly::from_ints(&f3, &[1, 0, 1])).unwrap());
        assert!(!is_irreducible(&Poly::from_ints(&f3, &[2, 0, 1])).unwrap());
        assert!(is_irreducible(&Poly::x(&f3)).unwrap());
        assert_eq!(
            is_irreducible(&Poly::zero(&f3)),
            Err(OracleError::ZeroPolynomial)
        );
    }

    #[test]
    fn factor_examples() {
        let f3 = fp(3);
        let cfg = OracleConfig::default();
        let fz = brute_factor(&Poly::from_ints(&f3, &[2, 0, 1]), &cfg).unwrap();
        assert_eq!(texts(&fz), vec![("x + 1".into(), 1), ("x + 2".into(), 1)]);

        let x8 = Poly::parse(&f3, "x^8 - 1").unwrap();
        let fz = brute_factor(&x8, &cfg).unwrap();
        assert_eq!(
            texts(&fz),
            vec![
                ("x + 1".into(), 1),
                ("x + 2".into(), 1),
                ("x^2 + 1".into(), 1),
                ("x^2 + x + 2".into(), 1),
                ("x^2 + 2*x + 2".into(), 1),
            ]
        );

        let x4 = Poly::parse(&f3, "x^4 + 1").unwrap();
        let fz = brute_factor(&x4, &cfg).unwrap();
        assert_eq!(
            texts(&fz),
            vec![("x^2 + x + 2".into(), 1), ("x^2 + 2*x + 2".into(), 1)]
        );
    }

    #[test]
    fn multiplicities() {
        let cfg = OracleConfig::default();
        let f5 = fp(5);
        let sq = Poly::parse(&f5, "x^2 - 2*x + 1").unwrap();
        assert_eq!(
            texts(&brute_factor(&sq, &cfg).unwrap()),
            vec![("x + 4".into(), 2)]
        );
        // X^p - a = (X - a)^p in characteristic p
        for (q, a) in [(5u64, "3"), (9, "[1,2]"), (8, "[1,0,1]")] {
            let ctx = FieldCtx::from_prime_power(q).unwrap();
            let a = FieldElem::parse(&ctx, a).unwrap();
            let p = ctx.p() as usize;
            let fz = brute_factor(&Poly::binomial(p, &a), &cfg).unwrap();
            assert_eq!(fz.factors.len(), 1);
            assert_eq!(fz.factors[0].multiplicity, p as u64);
            assert_eq!(fz.product(), Poly::binomial(p, &a));
        }
    }

    #[test]
    fn reconstruction_and_irreducibility_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for q in [2u64, 3, 4, 7, 8, 9, 16, 25] {
            let ctx = FieldCtx::from_prime_power(q).unwrap();
            for _ in 0..20 {
                let deg = rng.gen_range(1..24);
                let coeffs = (0..=deg)
                    .map(|_| ctx.element_at(rng.gen_range(0..q)))
                    .collect();
                let f = Poly::from_coeffs(&ctx, coeffs);
                if f.is_zero() {
                    continue;
                }
                let fz = brute_factor(&f, &OracleConfig::default()).unwrap();
                assert_eq!(fz.product(), f);
                for fac in &fz.factors {
                    assert!(fac.poly.is_monic());
                    assert!(is_irreducible(&fac.poly).unwrap());
                }
            }
        }
    }

    #[test]
    fn seed_determinism() {
        let f7 = fp(7);
        let f = Poly::parse(&f7, "x^24 - 1").unwrap();
        let a = brute_factor(
            &f,
            &OracleConfig {
                rng_seed: 11,
                ..Default::default()
            },
        )
        .unwrap();
        let b = brute_factor(
            &f,
            &OracleConfig {
                rng_seed: 11,
                ..Default::default()
            },
        )
        .unwrap();
        let c = brute_factor(
            &f,
            &OracleConfig {
                rng_seed: 12,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(texts(&a), texts(&b));
        assert_eq!(texts(&a), texts(&c));
    }

    #[test]
    fn exhaustive_roots() {
        let f5 = fp(5);
        let r = roots(&Poly::parse(&f5, "x^4 - 1").unwrap()).unwrap();
        assert_eq!(r.len(), 4);
        assert!(roots(&Poly::parse(&f5, "x^2 - 2").unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn guards() {
        let f2 = fp(2);
        let big = Poly::parse(&f2, "x^600 + 1").unwrap();
        assert!(matches!(
            brute_factor(&big, &OracleConfig::default()),
            Err(OracleError::DegreeGuard { .. })
        ));
        let huge = FieldCtx::new(2, 40, None).unwrap();
        assert!(matches!(
            is_irreducible(&Poly::x(&huge).pow(2)),
            Err(OracleError::FieldTooLarge(_))
        ));
    }
}
