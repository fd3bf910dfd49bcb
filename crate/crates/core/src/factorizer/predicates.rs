//! Irreducibility criteria for binomials `X^t - a`.

use super::FactorError;
use crate::field::{self, FieldElem};
use crate::numtheory;

fn group_order(a: &FieldElem) -> Result<(u64, u64), FactorError> {
    if a.is_zero() {
        return Err(FactorError::ZeroElement);
    }
    let q = a
        .ctx()
        .size_u64()
        .ok_or_else(|| FactorError::Unsupported(format!("{} is too large", a.ctx())))?;
    Ok((q, field::order_dividing(a, q - 1)?))
}

/// Whether `X^t - a` is irreducible over the field of `a`.
pub fn serret_irreducible(a: &FieldElem, t: u64) -> Result<bool, FactorError> {
    if t == 0 {
        return Err(FactorError::InvalidArgument("t must be positive".into()));
    }
    let (q, ord) = group_order(a)?;
    if t == 1 {
        return Ok(true);
    }
    Ok(ord % numtheory::radical(t) == 0
        && numtheory::gcd(t, (q - 1) / ord) == 1
        && (!t.is_multiple_of(4) || q % 4 == 1))
}

/// Given an irreducible `X^t - a` and a prime `p | q - 1`, whether
/// `X^(t*p) - a` is irreducible as well.
pub fn step_irreducible_tp(a: &FieldElem, t: u64, p: u64) -> Result<bool, FactorError> {
    let (q, ord) = group_order(a)?;
    if !serret_irreducible(a, t)? {
        return Err(FactorError::PreconditionViolated(format!(
            "X^{t} - {a} is not irreducible"
        )));
    }
    if !numtheory::is_prime(p) || (q - 1) % p != 0 {
        return Err(FactorError::PreconditionViolated(format!(
            "{p} is not a prime divisor of q - 1 = {}",
            q - 1
        )));
    }
    if (t * p).is_multiple_of(4) && q % 4 != 1 {
        return Err(FactorError::PreconditionViolated(format!(
            "4 divides {} and q = {q} is not 1 mod 4",
            t * p
        )));
    }
    if t.is_multiple_of(p) {
        return Ok(true);
    }
    Ok((q - 1) % (p * ord) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    #[test]
    fn serret_examples() {
        let f5 = FieldCtx::prime(5).unwrap();
        let f7 = FieldCtx::prime(7).unwrap();
        assert!(serret_irreducible(&f5.from_int(2), 2).unwrap());
        assert!(!serret_irreducible(&f7.from_int(3), 4).unwrap());
        assert!(serret_irreducible(&f7.from_int(1), 1).unwrap());
        assert_eq!(
            serret_irreducible(&f7.zero(), 2),
            Err(FactorError::ZeroElement)
        );
    }

    #[test]
    fn step_examples() {
        let f5 = FieldCtx::prime(5).unwrap();
        assert!(step_irreducible_tp(&f5.from_int(2), 2, 2).unwrap());
        assert!(!step_irreducible_tp(&f5.from_int(4), 1, 2).unwrap());
        let f13 = FieldCtx::prime(13).unwrap();
        let g = f13.generator().unwrap();
        assert!(step_irreducible_tp(&g, 3, 3).unwrap());
        assert!(matches!(
            step_irreducible_tp(&f5.from_int(4), 2, 2),
            Err(FactorError::PreconditionViolated(_))
        ));
    }
}
