//! Subfield embeddings `F_{p^a} -> F_{p^b}` for `a | b`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{fp, FieldCtx, FieldElem, FieldError};
use crate::poly::Poly;

/// Field homomorphism sending the class of `X` in `sub` to `root`, a root of
/// `sub`'s modulus inside `sup`.
#[derive(Clone, Debug)]
pub struct EmbeddingMap {
    sub: FieldCtx,
    sup: FieldCtx,
    root: FieldElem,
    /// `powers[i]` = coordinates of `root^i` in `sup`.
    powers: Vec<Vec<u64>>,
    /// Rows of the coordinate matrix that determine a preimage, and the
    /// inverse of that square block.
    pivot_rows: Vec<usize>,
    block_inverse: Vec<Vec<u64>>,
}

/// Embeds `sub` into `sup`, choosing the coordinate-lex smallest root of
/// `sub`'s modulus.
pub fn embed(sub: &FieldCtx, sup: &FieldCtx) -> Result<EmbeddingMap, FieldError> {
    type Cache = Mutex<HashMap<(FieldCtx, FieldCtx), EmbeddingMap>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (sub.clone(), sup.clone());
    if let Some(map) = cache.lock().expect("poisoned").get(&key) {
        return Ok(map.clone());
    }
    let map = EmbeddingMap::new(sub, sup)?;
    cache.lock().expect("poisoned").insert(key, map.clone());
    Ok(map)
}

pub fn apply_embedding(map: &EmbeddingMap, x: &FieldElem) -> FieldElem {
    map.apply(x)
}

impl EmbeddingMap {
    pub fn new(sub: &FieldCtx, sup: &FieldCtx) -> Result<EmbeddingMap, FieldError> {
        if sub.p() != sup.p() || !sup.m().is_multiple_of(sub.m()) {
            return Err(FieldError::NotASubfield {
                sub: sub.to_string(),
                sup: sup.to_string(),
            });
        }
        let root = if sub.m() == 1 {
            sup.zero()
        } else {
            let modulus = Poly::from_coeffs(
                sup,
                sub.modulus().iter().map(|&c| sup.from_int(c)).collect(),
            );
            modulus
                .roots()
                .into_iter()
                .min()
                .expect("a subfield modulus splits in the extension")
        };
        let p = sup.p();
        let mut powers = Vec::with_capacity(sub.m());
        let mut cur = sup.one();
        for _ in 0..sub.m() {
            powers.push(cur.coords().to_vec());
            cur = &cur * &root;
        }
        let (pivot_rows, block_inverse) = invert_block(&powers, sup.m(), p);
        Ok(EmbeddingMap {
            sub: sub.clone(),
            sup: sup.clone(),
            root,
            powers,
            pivot_rows,
            block_inverse,
        })
    }

    pub fn sub(&self) -> &FieldCtx {
        &self.sub
    }

    pub fn sup(&self) -> &FieldCtx {
        &self.sup
    }

    /// Image of the class of `X` of `sub`.
    pub fn root(&self) -> &FieldElem {
        &self.root
    }

    pub fn apply(&self, x: &FieldElem) -> FieldElem {
        assert_eq!(
            x.ctx(),
            &self.sub,
            "element is not in the embedding's source"
        );
        let p = self.sup.p();
        let mut acc = vec![0u64; self.sup.m()];
        for (c, pw) in x.coords().iter().zip(&self.powers) {
            if *c == 0 {
                continue;
            }
            for (a, &b) in acc.iter_mut().zip(pw) {
                *a = fp::add_mod(*a, fp::mul_mod(*c, b, p), p);
            }
        }
        self.sup.from_coords(&acc).expect("coordinates are reduced")
    }

    /// Preimage of an element of `sup` lying in the image of `sub`.
    pub fn pull_back(&self, y: &FieldElem) -> Result<FieldElem, FieldError> {
        assert_eq!(
            y.ctx(),
            &self.sup,
            "element is not in the embedding's target"
        );
        let p = self.sup.p();
        let rhs: Vec<u64> = self.pivot_rows.iter().map(|&r| y.coords()[r]).collect();
        let coeffs: Vec<u64> = self
            .block_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&rhs)
                    .fold(0, |acc, (&a, &b)| fp::add_mod(acc, fp::mul_mod(a, b, p), p))
            })
            .collect();
        let x = self.sub.from_coords(&coeffs)?;
        if &self.apply(&x) == y {
            Ok(x)
        } else {
            Err(FieldError::NotInSubfield)
        }
    }
}

/// Given column vectors `cols` (each of length `rows`), picks independent rows
/// forming a square block and returns them with the block's inverse.
fn invert_block(cols: &[Vec<u64>], rows: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>) {
    let k = cols.len();
    let mut pivots = Vec::with_capacity(k);
    let mut basis: Vec<(Vec<u64>, usize)> = Vec::new();
    for r in 0..rows {
        let mut v: Vec<u64> = cols.iter().map(|c| c[r]).collect();
        for (b, _) in &basis {
            let lead = b.iter().position(|&x| x != 0).unwrap();
            if v[lead] != 0 {
                let f = v[lead];
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = fp::sub_mod(*x, fp::mul_mod(f, y, p), p);
                }
            }
        }
        if let Some(lead) = v.iter().position(|&x| x != 0) {
            let inv = fp::inv_mod(v[lead], p);
            for x in v.iter_mut() {
                *x = fp::mul_mod(*x, inv, p);
            }
            basis.push((v, r));
            pivots.push(r);
            if pivots.len() == k {
                break;
            }
        }
    }
    assert_eq!(pivots.len(), k, "powers of a subfield root are independent");
    // invert the k x k block by Gauss-Jordan
    let mut m: Vec<Vec<u64>> = pivots
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let mut row: Vec<u64> = cols.iter().map(|c| c[r]).collect();
            row.extend((0..k).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    for col in 0..k {
        let piv = (col..k)
            .find(|&r| m[r][col] != 0)
            .expect("block is invertible");
        m.swap(col, piv);
        let inv = fp::inv_mod(m[col][col], p);
        for x in m[col].iter_mut() {
            *x = fp::mul_mod(*x, inv, p);
        }
        for r in 0..k {
            if r != col && m[r][col] != 0 {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x = fp::sub_mod(*x, fp::mul_mod(f, y, p), p);
                }
            }
        }
    }
    let inverse = m.into_iter().map(|row| row[k..].to_vec()).collect();
    (pivots, inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_subfield_is_fixed() {
        let f3 = FieldCtx::prime(3).unwrap();
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        let e = embed(&f3, &f9).unwrap();
        assert_eq!(e.apply(&f3.from_int(2)), f9.from_int(2));
        let f2 = FieldCtx::prime(2).unwrap();
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        assert!(embed(&f2, &f4).unwrap().apply(&f2.one()).is_one());
    }

    #[test]
    fn rejects_non_subfields() {
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        let f8 = FieldCtx::new(2, 3, None).unwrap();
        assert!(matches!(
            embed(&f4, &f8),
            Err(FieldError::NotASubfield { .. })
        ));
        let f9 = FieldCtx::new(3, 2, None).unwrap();
        assert!(matches!(
            embed(&f4, &f9),
            Err(FieldError::NotASubfield { .. })
        ));
    }

    #[test]
    fn homomorphism_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, a, b) in [(2u64, 2usize, 6usize), (3, 2, 4), (5, 3, 6), (2, 3, 12)] {
            let sub = FieldCtx::new(p, a, None).unwrap();
            let sup = FieldCtx::new(p, b, None).unwrap();
            let e = embed(&sub, &sup).unwrap();
            let size = sub.size_u64().unwrap();
            for _ in 0..100 {
                let x = sub.element_at(rng.gen_range(0..size));
                let y = sub.element_at(rng.gen_range(0..size));
                assert_eq!(e.apply(&(&x * &y)), e.apply(&x) * e.apply(&y));
                assert_eq!(e.apply(&(&x + &y)), e.apply(&x) + e.apply(&y));
                assert_eq!(e.pull_back(&e.apply(&x)).unwrap(), x);
            }
        }
    }

    #[test]
    fn pull_back_rejects_outside_elements() {
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        let f16 = FieldCtx::new(2, 4, None).unwrap();
        let e = embed(&f4, &f16).unwrap();
        let outside = f16.modulus_root();
        assert_eq!(e.pull_back(&outside), Err(FieldError::NotInSubfield));
    }

    #[test]
    fn towers_agree_up_to_conjugation() {
        let f4 = FieldCtx::new(2, 2, None).unwrap();
        let f16 = FieldCtx::new(2, 4, None).unwrap();
        let f256 = FieldCtx::new(2, 8, None).unwrap();
        let direct = embed(&f4, &f256).unwrap();
        let step = embed(&f16, &f256).unwrap();
        let inner = embed(&f4, &f16).unwrap();
        let g = f4.modulus_root();
        let composed = step.apply(&inner.apply(&g));
        let image = direct.apply(&g);
        assert!(composed == image || composed == image.frobenius(2));
    }
}
