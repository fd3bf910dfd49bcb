//! Closed-formula factorizations of `X^n - a`, `X^n - 1`, cyclotomic
//! polynomials and `f(X^n)` over a finite field.

mod butler;
mod engine;
mod plan;
mod predicates;
mod radq1;
mod verify;

use thiserror::Error;

use crate::factorization::{Factor, Factorization};
use crate::field::{self, FieldCtx, FieldElem, FieldError};
use crate::numtheory;
use crate::oracle::OracleError;
use crate::poly::{Poly, PolyError};
use engine::Alpha;

pub use butler::{butler_profile, ButlerRow};
pub use plan::{BinomialPlan, CompositionPlan, CosetClass, FactorIndex, Params, Plan, PlanChoices};
pub use predicates::{serret_irreducible, step_irreducible_tp};
pub use radq1::factor_radq1;
pub use verify::{verify, verify_with, CheckOutcome, CheckResult, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("the constant term must be nonzero")]
    ZeroElement,
    #[error("n = {n} is not coprime to the characteristic {p}")]
    NotCoprimeToChar { n: u64, p: u64 },
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("rad({n}) does not divide q - 1 = {q_minus_one}")]
    RadicalNotDividing { n: u64, q_minus_one: u64 },
    #[error("4 divides n = {n} but q = {q} is not 1 mod 4")]
    FourDividesConflict { n: u64, q: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// `n = p^l * rest` with `p` not dividing `rest`; returns `(l, p^l, rest)`.
fn strip_characteristic(n: u64, p: u64) -> (u32, u64, u64) {
    let mut l = 0;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        l += 1;
    }
    (l, n / rest, rest)
}

/// Undoes `x -> x^(p^l)` on the base field, which has degree `e` over `F_p`.
fn frobenius_inverse(x: &FieldElem, l: u32) -> FieldElem {
    let e = x.ctx().m();
    x.frobenius((e - l as usize % e) % e)
}

fn check_n(n: u64) -> Result<usize, FactorError> {
    if n == 0 {
        return Err(FactorError::InvalidArgument("n must be positive".into()));
    }
    usize::try_from(n).map_err(|_| FactorError::InvalidArgument(format!("n = {n} is too large")))
}

/// Factors `X^n - a` into monic irreducibles over the field of `a`.
pub fn factor_binomial(a: &FieldElem, n: u64) -> Result<Factorization, FactorError> {
    factor_binomial_with_choices(a, n, &PlanChoices::default())
}

/// [`factor_binomial`] with alternative roots of unity and `d`-th root.
pub fn factor_binomial_with_choices(
    a: &FieldElem,
    n: u64,
    choices: &PlanChoices,
) -> Result<Factorization, FactorError> {
    let n_usize = check_n(n)?;
    if a.is_zero() {
        return Err(FactorError::ZeroElement);
    }
    let base = a.ctx();
    let (l, char_power, reduced) = strip_characteristic(n, base.p());
    let b0 = frobenius_inverse(a, l);
    let out = engine::run(base, 1, Alpha::Element(&b0), reduced, choices, false)?;
    let mut plan = out.plan;
    plan.char_power = char_power;
    let factors = out
        .factors
        .into_iter()
        .map(|f| Factor::new(f.poly, char_power, f.order))
        .collect();
    Ok(Factorization::new(
        Poly::binomial(n_usize, a),
        base.one(),
        factors,
        Some(Plan::Binomial(plan)),
    ))
}

/// Factors `X^n - 1`.
pub fn factor_unity(ctx: &FieldCtx, n: u64) -> Result<Factorization, FactorError> {
    factor_binomial(&ctx.one(), n)
}

/// The `n`-th cyclotomic polynomial over `ctx`, by exact division.
pub fn cyclotomic_poly(ctx: &FieldCtx, n: u64) -> Result<Poly, FactorError> {
    check_n(n)?;
    let mut num = Poly::one(ctx);
    let mut den = Poly::one(ctx);
    for d in numtheory::divisors(n) {
        let term = Poly::binomial(d as usize, &ctx.one());
        match mobius(n / d) {
            1 => num = &num * &term,
            -1 => den = &den * &term,
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den)?;
    debug_assert!(rem.is_zero() && quot.degree() == Some(numtheory::euler_phi(n) as usize));
    Ok(quot)
}

fn mobius(n: u64) -> i8 {
    let f = numtheory::IntFactorization::of(n);
    if f.iter().any(|(_, e)| e > 1) {
        0
    } else if f.iter().count().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Factors the `n`-th cyclotomic polynomial; needs `gcd(n, q) = 1`.
pub fn factor_cyclotomic(ctx: &FieldCtx, n: u64) -> Result<Factorization, FactorError> {
    check_n(n)?;
    if n.is_multiple_of(ctx.p()) {
        return Err(FactorError::NotCoprimeToChar { n, p: ctx.p() });
    }
    let one = ctx.one();
    let out = engine::run(
        ctx,
        1,
        Alpha::Element(&one),
        n,
        &PlanChoices::default(),
        true,
    )?;
    let total: usize = out.factors.iter().map(|f| f.degree).sum();
    if total as u64 != numtheory::euler_phi(n) {
        return Err(FactorError::Inconsistent(format!(
            "cyclotomic factors have total degree {total}, expected {}",
            numtheory::euler_phi(n)
        )));
    }
    Ok(Factorization::new(
        cyclotomic_poly(ctx, n)?,
        one,
        out.factors,
        Some(Plan::Binomial(out.plan)),
    ))
}

/// Factors `f(X^n)` for an irreducible `f`.
pub fn factor_composition(f: &Poly, n: u64) -> Result<Factorization, FactorError> {
    factor_composition_with_choices(f, n, &PlanChoices::default())
}

/// [`factor_composition`] with alternative roots of unity and `d`-th root.
pub fn factor_composition_with_choices(
    f: &Poly,
    n: u64,
    choices: &PlanChoices,
) -> Result<Factorization, FactorError> {
    let n_usize = check_n(n)?;
    let base = f.ctx();
    let (scale, monic) = f.monic_parts().ok_or(FactorError::NotIrreducible)?;
    let composed = f.compose_xn(n_usize);
    let k = monic.degree().unwrap_or(0);
    if k == 1 && monic.coeff(0).is_zero() {
        let x = Factor::new(Poly::x(base), n, None);
        return Ok(Factorization::new(composed, scale, vec![x], None));
    }
    if !monic.is_irreducible() {
        return Err(FactorError::NotIrreducible);
    }
    let (l, char_power, reduced) = strip_characteristic(n, base.p());
    let inner_f = monic.map_coeffs(base, |c| frobenius_inverse(c, l));
    let out = engine::run(base, k, Alpha::RootOf(&inner_f), reduced, choices, false)?;
    let mut inner = out.plan;
    inner.char_power = char_power;
    let factors = out
        .factors
        .into_iter()
        .map(|fac| Factor::new(fac.poly, char_power, fac.order))
        .collect();
    let plan = CompositionPlan {
        f: f.clone(),
        k,
        scale: scale.clone(),
        inner,
    };
    Ok(Factorization::new(
        composed,
        scale,
        factors,
        Some(Plan::Composition(plan)),
    ))
}

/// When `a` has an `n`-th root `beta` in its field, factors `X^n - a` by
/// substituting `X / beta` into the factors of `X^n - 1`; `None` otherwise.
pub fn unity_shortcut(a: &FieldElem, n: u64) -> Result<Option<Factorization>, FactorError> {
    let n_usize = check_n(n)?;
    if a.is_zero() {
        return Err(FactorError::ZeroElement);
    }
    let ctx = a.ctx();
    let beta = match field::dth_root(a, n) {
        Ok(beta) => beta,
        Err(FieldError::NoRoot { .. }) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let q_minus_one = ctx
        .size_u64()
        .map(|q| q - 1)
        .ok_or_else(|| FactorError::Unsupported(format!("{ctx} is too large")))?;
    let ord_beta = field::order_dividing(&beta, q_minus_one)?;
    let unity = factor_unity(ctx, n)?;
    let x = Poly::x(ctx);
    let h = Poly::constant(beta);
    let mut factors = Vec::with_capacity(unity.factors.len());
    for fac in unity.factors {
        let moved = fac.poly.q_transform(&x, &h)?;
        let order = match fac.order {
            Some(o) => Some(moved.order_dividing(numtheory::lcm(o, ord_beta))?),
            None => None,
        };
        factors.push(Factor::new(moved, fac.multiplicity, order));
    }
    Ok(Some(Factorization::new(
        Poly::binomial(n_usize, a),
        ctx.one(),
        factors,
        None,
    )))
}
