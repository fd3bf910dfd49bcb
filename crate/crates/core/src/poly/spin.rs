//! Products of coefficient-Frobenius conjugates.

use super::{Poly, PolyError};
use crate::field::{EmbeddingMap, FieldElem};

/// `prod_{u < count} h^(u)` with the Frobenius taken over `emb.sub()`, pulled
/// back to `emb.sub()`. Fails when the product does not descend.
pub fn spin_of_conjugates(h: &Poly, count: usize, emb: &EmbeddingMap) -> Result<Poly, PolyError> {
    assert_eq!(
        h.ctx(),
        emb.sup(),
        "polynomial is not over the embedding target"
    );
    let step = emb.sub().m();
    let mut acc = Poly::one(h.ctx());
    let mut conj = h.clone();
    for _ in 0..count {
        acc = &acc * &conj;
        conj = conj.map_coeffs(h.ctx(), |c| c.frobenius(step));
    }
    descend(&acc, emb)
}

/// Spin of `X^t - gamma`: the spin of `Y - gamma` evaluated at `Y = X^t`.
pub(crate) fn spin_binomial(
    t: usize,
    gamma: &FieldElem,
    count: usize,
    emb: &EmbeddingMap,
) -> Result<Poly, PolyError> {
    let step = emb.sub().m();
    let sup = emb.sup();
    // coefficients of prod (Y - gamma^(q^u)), built one linear factor at a time
    let mut coeffs = vec![sup.one()];
    let mut root = gamma.clone();
    for _ in 0..count {
        let mut next = vec![sup.zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * &root);
        }
        coeffs = next;
        root = root.frobenius(step);
    }
    let product = Poly::from_coeffs(sup, coeffs);
    Ok(descend(&product, emb)?.compose_xn(t))
}

fn descend(p: &Poly, emb: &EmbeddingMap) -> Result<Poly, PolyError> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            emb.pull_back(c)
                .map_err(|_| PolyError::ImproperCoefficients)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_coeffs(emb.sub(), coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{embed, FieldCtx};

    #[test]
    fn binomial_spin_matches_general_spin() {
        let f3 = FieldCtx::prime(3).unwrap();
        let f81 = FieldCtx::new(3, 4, None).unwrap();
        let emb = embed(&f3, &f81).unwrap();
        let g = f81.generator().unwrap();
        for t in 1..4 {
            let h = Poly::binomial(t, &g);
            let general = spin_of_conjugates(&h, 4, &emb).unwrap();
            assert_eq!(spin_binomial(t, &g, 4, &emb).unwrap(), general);
            assert_eq!(general.degree(), Some(4 * t));
        }
    }

    #[test]
    fn too_few_conjugates_do_not_descend() {
        let f2 = FieldCtx::prime(2).unwrap();
        let f16 = FieldCtx::new(2, 4, None).unwrap();
        let emb = embed(&f2, &f16).unwrap();
        let g = f16.generator().unwrap();
        assert_eq!(
            spin_binomial(1, &g, 2, &emb),
            Err(PolyError::ImproperCoefficients)
        );
    }
}
