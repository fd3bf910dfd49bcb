//! Dense univariate polynomials over a [`FieldCtx`].

mod spin;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{FieldCtx, FieldElem, FieldError};
use crate::numtheory;

pub(crate) use spin::spin_binomial;
pub use spin::spin_of_conjugates;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different fields")]
    CtxMismatch,
    #[error("division by the zero polynomial")]
    DivByZero,
    #[error("F_{0} is not a subfield of the coefficient field")]
    BaseNotSubfield(u64),
    #[error("coefficients do not descend to the base field")]
    ImproperCoefficients,
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("polynomial vanishes at zero")]
    RootAtZero,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("{0}")]
    Field(#[from] FieldError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Oracle(String),
}

/// Polynomial with coefficients in `ctx`, little-endian, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ctx: FieldCtx,
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn zero(ctx: &FieldCtx) -> Poly {
        Poly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly::constant(ctx.one())
    }

    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly::monomial(ctx.one(), 1)
    }

    pub fn constant(c: FieldElem) -> Poly {
        let ctx = c.ctx().clone();
        Poly::from_coeffs(&ctx, vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: FieldElem, k: usize) -> Poly {
        let ctx = c.ctx().clone();
        let mut coeffs = vec![ctx.zero(); k];
        coeffs.push(c);
        Poly::from_coeffs(&ctx, coeffs)
    }

    /// `X^n - a`.
    pub fn binomial(n: usize, a: &FieldElem) -> Poly {
        Poly::monomial(a.ctx().one(), n) - Poly::constant(a.clone())
    }

    /// From little-endian coefficients; trailing zeros are dropped.
    pub fn from_coeffs(ctx: &FieldCtx, mut coeffs: Vec<FieldElem>) -> Poly {
        for c in &coeffs {
            assert_eq!(c.ctx(), ctx, "coefficient from a different field");
        }
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        Poly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    /// From little-endian prime-field integers.
    pub fn from_ints(ctx: &FieldCtx, coeffs: &[u64]) -> Poly {
        Poly::from_coeffs(ctx, coeffs.iter().map(|&c| ctx.from_int(c)).collect())
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldElem::is_one)
    }

    /// `(leading coefficient, monic associate)`; `None` for zero.
    pub fn monic_parts(&self) -> Option<(FieldElem, Poly)> {
        let lead = self.leading()?.clone();
        let inv = lead.inv().expect("nonzero leading coefficient");
        Some((lead, self.scale(&inv)))
    }

    pub fn monic(&self) -> Poly {
        self.monic_parts().map_or_else(|| self.clone(), |(_, m)| m)
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        Poly::from_coeffs(&self.ctx, self.coeffs.iter().map(|x| x * c).collect())
    }

    fn same_ctx(&self, other: &Poly) -> Result<(), PolyError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(PolyError::CtxMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_ctx(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Poly::from_coeffs(&self.ctx, coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_ctx(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Poly::from_coeffs(&self.ctx, coeffs))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ctx));
        }
        let mut out = vec![self.ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Poly::from_coeffs(&self.ctx, out))
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.same_ctx(divisor)?;
        let dd = divisor.degree().ok_or(PolyError::DivByZero)?;
        let lead_inv = divisor.coeffs[dd].inv().expect("nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(&self.ctx), self.clone()));
        }
        let mut quot = vec![self.ctx.zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = &rem[top] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = &rem[shift + j] - &(&c * dj);
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((
            Poly::from_coeffs(&self.ctx, quot),
            Poly::from_coeffs(&self.ctx, rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_ctx(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly, PolyError> {
        self.checked_mul(other)?.rem(modulus)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Poly) -> Result<Poly, PolyError> {
        self.same_ctx(modulus)?;
        let base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.ctx).rem(modulus)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, modulus)?;
            if e.bit(i) {
                acc = acc.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, mut k: u64) -> Poly {
        let mut acc = Poly::one(&self.ctx);
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.ctx.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(i as u64))
            .collect();
        Poly::from_coeffs(&self.ctx, coeffs)
    }

    /// `f(X^n)`.
    pub fn compose_xn(&self, n: usize) -> Poly {
        assert!(n >= 1);
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ctx.zero(); (self.coeffs.len() - 1) * n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * n] = c.clone();
        }
        Poly::from_coeffs(&self.ctx, coeffs)
    }

    /// Applies a field map to every coefficient.
    pub fn map_coeffs(&self, ctx: &FieldCtx, f: impl Fn(&FieldElem) -> FieldElem) -> Poly {
        Poly::from_coeffs(ctx, self.coeffs.iter().map(f).collect())
    }

    /// Exponent `e` with `q = p^e` and `e | m`.
    fn base_exponent(&self, base_q: u64) -> Result<usize, PolyError> {
        let (p, e) =
            crate::field::prime_power_parts(base_q).ok_or(PolyError::BaseNotSubfield(base_q))?;
        if p != self.ctx.p() || !self.ctx.m().is_multiple_of(e as usize) {
            return Err(PolyError::BaseNotSubfield(base_q));
        }
        Ok(e as usize)
    }

    /// Raises every coefficient to the power `q^j`.
    pub fn coeff_frobenius(&self, j: usize, base_q: u64) -> Result<Poly, PolyError> {
        let e = self.base_exponent(base_q)?;
        Ok(self.map_coeffs(&self.ctx, |c| c.frobenius(e * j)))
    }

    /// Degree over `F_q` of the field generated by the coefficients.
    pub fn coeff_degree(&self, base_q: u64) -> Result<usize, PolyError> {
        let e = self.base_exponent(base_q)?;
        let top = self.ctx.m() / e;
        let d = numtheory::divisors(top as u64)
            .into_iter()
            .map(|d| d as usize)
            .find(|&d| self.coeffs.iter().all(|c| &c.frobenius(e * d) == c))
            .expect("the full degree always fixes the coefficients");
        Ok(d)
    }

    /// The product of the distinct coefficient-Frobenius images of a monic
    /// `self`, re-expressed over `base`.
    pub fn q_spin(&self, base: &FieldCtx) -> Result<Poly, PolyError> {
        if !self.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let q = base.size_u64().ok_or(PolyError::BaseNotSubfield(0))?;
        let d = self.coeff_degree(q)?;
        let emb =
            crate::field::embed(base, &self.ctx).map_err(|_| PolyError::BaseNotSubfield(q))?;
        spin_of_conjugates(self, d, &emb)
    }

    /// Roots in the coefficient field, ascending in coordinate-lex order.
    pub fn roots(&self) -> Vec<FieldElem> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let x = Poly::x(&self.ctx);
        let xq = x.pow_mod(&self.ctx.size(), &f).expect("same field");
        let g = f.gcd(&(&xq - &x)).expect("same field");
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut out = Vec::new();
        split_linear(&g, &mut rng, &mut out);
        out.sort();
        out
    }

    /// Rabin's test over the coefficient field.
    pub fn is_irreducible(&self) -> bool {
        let k = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(k) => k,
        };
        let f = self.monic();
        let x = Poly::x(&self.ctx);
        let q = self.ctx.size();
        // X^(q^i) mod f for i = 0..=k
        let mut frob = vec![x.rem(&f).expect("nonzero")];
        for i in 1..=k {
            let next = frob[i - 1].pow_mod(&q, &f).expect("same field");
            frob.push(next);
        }
        if frob[k] != frob[0] {
            return false;
        }
        numtheory::IntFactorization::of(k as u64).primes().all(|t| {
            let d = &frob[k / t as usize] - &x;
            f.gcd(&d).expect("same field").degree() == Some(0)
        })
    }

    /// Order of `X` modulo a monic irreducible `self` with nonzero constant
    /// term: the least `e` with `self | X^e - 1`.
    pub fn poly_order(&self) -> Result<u64, PolyError> {
        let deg = self.order_preconditions()?;
        if !self.is_irreducible() {
            return Err(PolyError::NotIrreducible);
        }
        let (p, m) = (self.ctx.p(), self.ctx.m() as u64);
        let fac = numtheory::factor_prime_power_minus_one(p, m * deg as u64)
            .ok_or_else(|| PolyError::Oracle("could not factor the group order".into()))?;
        let x = Poly::x(&self.ctx);
        let mut order = fac.value();
        for l in fac.primes() {
            while (&order % l) == BigUint::default()
                && x.pow_mod(&(&order / l), self)?.is_one_poly()
            {
                order /= l;
            }
        }
        u64::try_from(order).map_err(|_| PolyError::Oracle("order exceeds 64 bits".into()))
    }

    /// Order of `X` modulo `self` given a known multiple of it; fails when the
    /// multiple is not one.
    pub fn order_dividing(&self, multiple: u64) -> Result<u64, PolyError> {
        self.order_preconditions()?;
        let x = Poly::x(&self.ctx);
        if !x.pow_mod(&BigUint::from(multiple), self)?.is_one_poly() {
            return Err(PolyError::Field(FieldError::OrderNotDividing {
                d: multiple.to_string(),
                order: "the polynomial order".into(),
            }));
        }
        let mut order = multiple;
        for l in numtheory::IntFactorization::of(multiple).primes() {
            while order.is_multiple_of(l)
                && x.pow_mod(&BigUint::from(order / l), self)?.is_one_poly()
            {
                order /= l;
            }
        }
        Ok(order)
    }

    fn order_preconditions(&self) -> Result<usize, PolyError> {
        let deg = self
            .degree()
            .filter(|&d| d > 0)
            .ok_or(PolyError::NotIrreducible)?;
        if !self.is_monic() {
            return Err(PolyError::NotMonic);
        }
        if self.coeffs[0].is_zero() {
            return Err(PolyError::RootAtZero);
        }
        Ok(deg)
    }

    fn is_one_poly(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `h^n * f(g/h)` with `n = deg f`.
    pub fn q_transform(&self, g: &Poly, h: &Poly) -> Result<Poly, PolyError> {
        self.same_ctx(g)?;
        self.same_ctx(h)?;
        if h.is_zero() {
            return Err(PolyError::DivByZero);
        }
        let Some(n) = self.degree() else {
            return Ok(Poly::zero(&self.ctx));
        };
        let mut acc = Poly::zero(&self.ctx);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = (&g.pow(i as u64) * &h.pow((n - i) as u64)).scale(c);
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Coefficients from the leading one down, for ordering.
    pub fn coeffs_high_first(&self) -> impl Iterator<Item = &FieldElem> {
        self.coeffs.iter().rev()
    }
}

/// Splits a squarefree product of distinct linear factors into its roots.
fn split_linear(g: &Poly, rng: &mut ChaCha8Rng, out: &mut Vec<FieldElem>) {
    let Some(deg) = g.degree() else { return };
    match deg {
        0 => {}
        1 => out.push(-(&g.coeffs[0] * &g.coeffs[1].inv().expect("nonzero"))),
        _ => {
            let ctx = g.ctx().clone();
            loop {
                let delta = random_element(&ctx, rng);
                let h = if ctx.p() == 2 {
                    trace_poly(&Poly::monomial(delta, 1), g)
                } else {
                    let probe = Poly::from_coeffs(&ctx, vec![delta, ctx.one()]);
                    let e = ctx.group_order() / 2u32;
                    &probe.pow_mod(&e, g).expect("same field") - &Poly::one(&ctx)
                };
                let d = g.gcd(&h).expect("same field");
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < deg {
                    let (other, _) = g.div_rem(&d).expect("nonzero divisor");
                    split_linear(&d, rng, out);
                    split_linear(&other, rng, out);
                    return;
                }
            }
        }
    }
}

/// `Tr(y) = y + y^2 + ... + y^(2^(m-1)) mod g` over `F_{2^m}`.
fn trace_poly(y: &Poly, g: &Poly) -> Poly {
    let m = y.ctx().m();
    let mut cur = y.rem(g).expect("nonzero");
    let mut acc = cur.clone();
    for _ in 1..m {
        cur = cur.mul_mod(&cur, g).expect("same field");
        acc = &acc + &cur;
    }
    acc
}

fn random_element(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> FieldElem {
    let coords: Vec<u64> = (0..ctx.m()).map(|_| rng.gen_range(0..ctx.p())).collect();
    ctx.from_coords(&coords).expect("reduced coordinates")
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomial context mismatch")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$checked(&rhs).expect("polynomial context mismatch")
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.map_coeffs(&self.ctx, |c| -c)
    }
}
