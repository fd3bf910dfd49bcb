//! Evaluation of the product formula for `X^n - alpha`, `gcd(n, q) = 1`,
//! inside one concrete field `F_{q^(k*s)}`.

use std::collections::HashMap;

use super::plan::{unit_at_or_after, BinomialPlan, FactorIndex, Params, PlanChoices};
use super::FactorError;
use crate::factorization::Factor;
use crate::field::{self, FieldCtx, FieldElem};
use crate::numtheory;
use crate::poly::{spin_binomial, Poly};

/// Where `alpha` comes from.
pub(crate) enum Alpha<'a> {
    /// An element of the base field.
    Element(&'a FieldElem),
    /// The smallest root of a monic irreducible polynomial over the base.
    RootOf(&'a Poly),
}

pub(crate) struct EngineOutput {
    pub factors: Vec<Factor>,
    pub plan: BinomialPlan,
}

/// `q^k`, kept below the supported field size.
fn field_size(base: &FieldCtx, k: usize) -> Result<u64, FactorError> {
    base.size_u64()
        .and_then(|q| q.checked_pow(k as u32))
        .filter(|&qk| qk < (1 << 31))
        .ok_or_else(|| FactorError::Unsupported(format!("{base} with k = {k} is too large")))
}

pub(crate) fn run(
    base: &FieldCtx,
    k: usize,
    alpha: Alpha<'_>,
    n: u64,
    choices: &PlanChoices,
    primitive_only: bool,
) -> Result<EngineOutput, FactorError> {
    let p = base.p();
    let e = base.m();
    let q0 = field_size(base, k)?;
    debug_assert_eq!(numtheory::gcd(n, p), 1);

    // s depends only on q0 and n, so the root field is known before alpha
    let w = numtheory::ord_mod(q0, numtheory::radical(n)).expect("coprime");
    let s = if !n.is_multiple_of(4) || numtheory::pow_mod(q0, w, 4) == 1 {
        w
    } else {
        2 * w
    };
    let big = FieldCtx::new(p, e * k * s as usize, None)?;
    let emb = field::embed(base, &big)?;
    let alpha =
        match alpha {
            Alpha::Element(a) => emb.apply(a),
            Alpha::RootOf(f) => {
                let lifted = f.map_coeffs(&big, |c| emb.apply(c));
                lifted.roots().into_iter().min().ok_or_else(|| {
                    FactorError::Inconsistent("no root of f in the root field".into())
                })?
            }
        };
    let ord_alpha = field::order_dividing(&alpha, q0 - 1)?;
    let params = Params::compute(q0, n, ord_alpha, alpha.is_one());
    debug_assert_eq!(params.s, s);

    let (d1_s, d2_s) = (params.d1_s(), params.d2_s());
    let zeta_d1 = field::primitive_root_of_unity(&big, d1_s)?
        .pow_u64(unit_at_or_after(choices.zeta_d1_exp, d1_s));
    let zeta_d2 = field::primitive_root_of_unity(&big, d2_s)?
        .pow_u64(unit_at_or_after(choices.zeta_d2_exp, d2_s));
    let b = field::dth_root(&alpha, d1_s)? * zeta_d1.pow_u64(choices.b_twist);

    // roots zeta_d1^j * b of X^(d1_s) - alpha, and their Frobenius orbits
    let frob_step = e * k;
    let roots: Vec<FieldElem> = {
        let mut cur = b.clone();
        (0..d1_s)
            .map(|_| {
                let r = cur.clone();
                cur = &cur * &zeta_d1;
                r
            })
            .collect()
    };
    let position: HashMap<&[u64], u64> = roots
        .iter()
        .enumerate()
        .map(|(j, r)| (r.coords(), j as u64))
        .collect();
    let mut seen = vec![false; d1_s as usize];
    let mut j_classes = Vec::new();
    for start in 0..d1_s {
        if seen[start as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut j = start;
        while !seen[j as usize] {
            seen[j as usize] = true;
            orbit.push(j);
            let image = roots[j as usize].frobenius(frob_step);
            j = *position
                .get(image.coords())
                .ok_or_else(|| FactorError::Inconsistent("root set not Frobenius-stable".into()))?;
        }
        orbit.sort_unstable();
        j_classes.push(orbit);
    }

    let t_unit = params.n1 / d1_s;
    let mut factors = Vec::new();
    let mut indices = Vec::new();
    for class in &j_classes {
        let j = class[0];
        for v in numtheory::divisors(params.n2 / d2_s) {
            let root_power = roots[j as usize].pow_u64(params.r * v);
            for cc in &params.classes {
                if numtheory::gcd(cc.rep, v) != 1 {
                    continue;
                }
                let order = ord_alpha * params.n1 * v * d2_s / numtheory::gcd(cc.rep, d2_s);
                if primitive_only && order != ord_alpha * n {
                    continue;
                }
                let t = (t_unit * v) as usize;
                let count = k * cc.c as usize;
                for m in 0..numtheory::gcd(cc.t, params.s1) {
                    let i_m = numtheory::mul_mod(cc.rep, numtheory::pow_mod(q0, m, d2_s), d2_s);
                    let gamma = zeta_d2.pow_u64(i_m) * &root_power;
                    let poly = spin_binomial(t, &gamma, count, &emb).map_err(|_| {
                        FactorError::Inconsistent(format!(
                            "spin of index (j={j}, v={v}, i={}, m={m}) does not descend",
                            cc.rep
                        ))
                    })?;
                    let degree = t * count;
                    indices.push(FactorIndex {
                        j,
                        v,
                        i: cc.rep,
                        m,
                        degree,
                        order,
                    });
                    factors.push(Factor::new(poly, 1, Some(order)));
                }
            }
        }
    }
    let total: usize = factors.iter().map(|f| f.degree).sum();
    if !primitive_only && total as u64 != k as u64 * n {
        return Err(FactorError::Inconsistent(format!(
            "factor degrees sum to {total}, expected {}",
            k as u64 * n
        )));
    }
    Ok(EngineOutput {
        factors,
        plan: BinomialPlan {
            params,
            root_field: big,
            alpha,
            b,
            zeta_d1,
            zeta_d2,
            j_classes,
            indices,
            char_power: 1,
        },
    })
}
