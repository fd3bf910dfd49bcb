//! Census of the irreducible factors of `f(X^n)` by order.

use super::{check_n, FactorError};
use crate::numtheory;
use crate::poly::{Poly, PolyError};

/// The factors of `f(X^n)` whose roots have order `order = d * n1 * e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ButlerRow {
    pub d: u64,
    pub count: u64,
    pub degree: u64,
    pub order: u64,
}

/// One row per divisor `d` of `n2`, where `n = n1 * n2` splits off the
/// primes of `e = ord(f)`; requires `gcd(n, q) = 1` and `f` irreducible.
pub fn butler_profile(f: &Poly, n: u64) -> Result<Vec<ButlerRow>, FactorError> {
    check_n(n)?;
    let ctx = f.ctx();
    if n.is_multiple_of(ctx.p()) {
        return Err(FactorError::NotCoprimeToChar { n, p: ctx.p() });
    }
    let q = ctx
        .size_u64()
        .ok_or_else(|| FactorError::Unsupported(format!("{ctx} is too large")))?;
    let monic = f.monic();
    let k = monic.degree().unwrap_or(0) as u64;
    let e = match monic.poly_order() {
        Ok(e) => e,
        Err(PolyError::NotIrreducible) => return Err(FactorError::NotIrreducible),
        Err(PolyError::RootAtZero) => {
            return Err(FactorError::InvalidArgument("f = X has no order".into()))
        }
        Err(err) => return Err(err.into()),
    };
    let (n1, n2) = numtheory::split_by_order(n, e);
    numtheory::divisors(n2)
        .into_iter()
        .map(|d| {
            let order = d * n1 * e;
            let degree = numtheory::ord_mod(q, order).expect("order is coprime to q");
            Ok(ButlerRow {
                d,
                count: k * n1 * numtheory::euler_phi(d) / degree,
                degree,
                order,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn rows(f: &Poly, n: u64) -> Vec<(u64, u64, u64, u64)> {
        butler_profile(f, n)
            .unwrap()
            .iter()
            .map(|r| (r.d, r.count, r.degree, r.order))
            .collect()
    }

    #[test]
    fn examples() {
        let f3 = FieldCtx::prime(3).unwrap();
        let x_minus_one = Poly::from_ints(&f3, &[2, 1]);
        assert_eq!(
            rows(&x_minus_one, 8),
            [(1, 1, 1, 1), (2, 1, 1, 2), (4, 1, 2, 4), (8, 2, 2, 8)]
        );
        let g = Poly::from_ints(&f3, &[1, 0, 1]);
        assert_eq!(rows(&g, 2), [(1, 2, 2, 8)]);
        assert_eq!(rows(&g, 1), [(1, 1, 2, 4)]);
    }

    #[test]
    fn errors() {
        let f3 = FieldCtx::prime(3).unwrap();
        let g = Poly::from_ints(&f3, &[1, 0, 1]);
        assert_eq!(
            butler_profile(&g, 3),
            Err(FactorError::NotCoprimeToChar { n: 3, p: 3 })
        );
        let reducible = Poly::from_ints(&f3, &[2, 0, 1]);
        assert_eq!(
            butler_profile(&reducible, 2),
            Err(FactorError::NotIrreducible)
        );
    }
}
