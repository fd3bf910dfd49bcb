//! `X^n - a` when every prime of `n` divides `q - 1`: all factors are
//! binomials over the base field itself.

use super::{check_n, FactorError};
use crate::factorization::{Factor, Factorization};
use crate::field::{self, FieldElem};
use crate::numtheory;
use crate::poly::Poly;

/// Factors `X^n - a` into binomials, assuming `rad(n) | q - 1` and
/// (`4 ∤ n` or `q ≡ 1 mod 4`). The declared order of each factor is the order
/// of the binomial as a polynomial.
pub fn factor_radq1(a: &FieldElem, n: u64) -> Result<Factorization, FactorError> {
    let n_usize = check_n(n)?;
    if a.is_zero() {
        return Err(FactorError::ZeroElement);
    }
    let ctx = a.ctx();
    let q = ctx
        .size_u64()
        .ok_or_else(|| FactorError::Unsupported(format!("{ctx} is too large")))?;
    if (q - 1) % numtheory::radical(n) != 0 {
        return Err(FactorError::RadicalNotDividing {
            n,
            q_minus_one: q - 1,
        });
    }
    if n.is_multiple_of(4) && q % 4 != 1 {
        return Err(FactorError::FourDividesConflict { n, q });
    }
    let ord_a = field::order_dividing(a, q - 1)?;
    let (n1, n2) = numtheory::split_by_order(n, ord_a);
    let d1 = numtheory::gcd(n1, (q - 1) / ord_a);
    let d2 = numtheory::gcd(n2, q - 1);
    let r = if a.is_one() {
        1
    } else {
        let modulus = ord_a * d1;
        match numtheory::mod_inverse(n2 % modulus, modulus) {
            Some(0) | None => 1,
            Some(r) => r,
        }
    };
    let b = field::dth_root(a, d1)?;
    let zeta_d1 = field::primitive_root_of_unity(ctx, d1)?;
    let zeta_d2 = field::primitive_root_of_unity(ctx, d2)?;

    let mut factors = Vec::new();
    let mut root = b;
    for _ in 0..d1 {
        for v in numtheory::divisors(n2 / d2) {
            let lifted = root.pow_u64(r * v);
            let t = (n1 / d1 * v) as usize;
            let mut zeta_i = ctx.one();
            for i in 0..d2 {
                if numtheory::gcd(i, v) == 1 {
                    let gamma = &zeta_i * &lifted;
                    let order = ord_a * n1 * v * d2 / numtheory::gcd(i, d2);
                    factors.push(Factor::new(Poly::binomial(t, &gamma), 1, Some(order)));
                }
                zeta_i = &zeta_i * &zeta_d2;
            }
        }
        root = &root * &zeta_d1;
    }
    Ok(Factorization::new(
        Poly::binomial(n_usize, a),
        ctx.one(),
        factors,
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn strings(fz: &Factorization) -> Vec<String> {
        fz.factors.iter().map(|f| f.poly.to_string()).collect()
    }

    #[test]
    fn examples() {
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(
            strings(&factor_radq1(&f5.one(), 4).unwrap()),
            ["x + 4", "x + 1", "x + 2", "x + 3"]
        );
        assert_eq!(
            strings(&factor_radq1(&f5.from_int(4), 4).unwrap()),
            ["x^2 + 2", "x^2 + 3"]
        );
        assert_eq!(
            strings(&factor_radq1(&f5.from_int(3), 1).unwrap()),
            ["x + 2"]
        );
    }

    #[test]
    fn preconditions() {
        let f7 = FieldCtx::prime(7).unwrap();
        assert!(matches!(
            factor_radq1(&f7.one(), 5),
            Err(FactorError::RadicalNotDividing { .. })
        ));
        assert!(matches!(
            factor_radq1(&f7.one(), 4),
            Err(FactorError::FourDividesConflict { .. })
        ));
    }

    #[test]
    fn agrees_with_the_general_formula() {
        for q in [5u64, 7, 9, 13, 16, 25] {
            let ctx = FieldCtx::from_prime_power(q).unwrap();
            for n in 1..=40u64 {
                if (q - 1) % numtheory::radical(n) != 0 || (n % 4 == 0 && q % 4 != 1) {
                    continue;
                }
                for a in ctx.elements().skip(1) {
                    let direct = factor_radq1(&a, n).unwrap();
                    let general = super::super::factor_binomial(&a, n).unwrap();
                    assert_eq!(direct.multiset(), general.multiset(), "q={q} n={n} a={a}");
                    assert_eq!(direct.product(), direct.base);
                }
            }
        }
    }
}
