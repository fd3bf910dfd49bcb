//! Parameters of the closed formula and the audit records kept with each
//! factorization.

use crate::field::{FieldCtx, FieldElem};
use crate::numtheory::{self, CosetTable};
use crate::poly::Poly;

/// Integer parameters for `X^n - alpha` over a base field of size `q`
/// (`q` is `q^k` for compositions), where `alpha` has order `ord_alpha` and
/// `gcd(n, q) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    pub q: u64,
    pub n: u64,
    pub ord_alpha: u64,
    pub n1: u64,
    pub n2: u64,
    pub w: u64,
    pub s: u64,
    /// `gcd(n1, (q^t - 1)/ord_alpha)` for `t = 1, 2, s`.
    pub d1: [u64; 3],
    /// `gcd(n2, q^t - 1)` for `t = 1, 2, s`.
    pub d2: [u64; 3],
    pub s1: u64,
    pub r: u64,
    pub cosets: CosetTable,
    pub classes: Vec<CosetClass>,
}

/// A coset representative `i` modulo `d2_s` with its `t_i` and `c_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosetClass {
    pub rep: u64,
    pub t: u64,
    pub c: u64,
}

impl Params {
    pub fn d1_s(&self) -> u64 {
        self.d1[2]
    }

    pub fn d2_s(&self) -> u64 {
        self.d2[2]
    }

    pub fn compute(q: u64, n: u64, ord_alpha: u64, is_one: bool) -> Params {
        assert!(
            n >= 1 && numtheory::gcd(n, q) == 1,
            "n must be coprime to q"
        );
        assert_eq!((q - 1) % ord_alpha, 0, "ord(alpha) divides q - 1");
        let (n1, n2) = numtheory::split_by_order(n, ord_alpha);
        let w = numtheory::ord_mod(q, numtheory::radical(n)).expect("coprime");
        let s = if !n.is_multiple_of(4) || numtheory::pow_mod(q, w, 4) == 1 {
            w
        } else {
            2 * w
        };
        let d1_at = |t: u64| numtheory::gcd_with_quotient(n1, q, t, ord_alpha);
        let d2_at = |t: u64| numtheory::gcd(n2, numtheory::prime_power_minus_one_mod(q, t, n2));
        let d1 = [d1_at(1), d1_at(2), d1_at(s)];
        let d2 = [d2_at(1), d2_at(2), d2_at(s)];
        let s1 = if d1[2] % 4 != 0 || q % 4 == 1 {
            d1[2] / d1[0]
        } else {
            2 * d1[2] / d1[1]
        };
        let modulus = ord_alpha * d1[2];
        let r = if is_one {
            1
        } else {
            let inv = numtheory::mod_inverse(n2 % modulus, modulus).expect("n2 is coprime");
            if inv == 0 {
                1
            } else {
                inv
            }
        };
        let d2_s = d2[2];
        let cosets = numtheory::coset_table(q, d2_s).expect("q is coprime to d2_s");
        let classes = cosets
            .reps
            .iter()
            .map(|&rep| {
                let t = (1..=s)
                    .find(|&t| {
                        let d2_t = d2_at(t);
                        d2_s % d2_t == 0 && rep % (d2_s / d2_t) == 0
                    })
                    .expect("t = s always qualifies");
                CosetClass {
                    rep,
                    t,
                    c: numtheory::lcm(t, s1),
                }
            })
            .collect();
        Params {
            q,
            n,
            ord_alpha,
            n1,
            n2,
            w,
            s,
            d1,
            d2,
            s1,
            r,
            cosets,
            classes,
        }
    }
}

/// One index `(j, v, i, m)` of the product formula with the data of the
/// factor it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorIndex {
    pub j: u64,
    pub v: u64,
    pub i: u64,
    pub m: u64,
    pub degree: usize,
    pub order: u64,
}

/// Audit record of one run of the binomial formula.
#[derive(Debug, Clone)]
pub struct BinomialPlan {
    pub params: Params,
    /// Field `F_{q^s}` (over the composition base) where the roots live.
    pub root_field: FieldCtx,
    pub alpha: FieldElem,
    /// `b` with `b^(d1_s) = alpha`.
    pub b: FieldElem,
    pub zeta_d1: FieldElem,
    pub zeta_d2: FieldElem,
    /// Orbits of `j` in `0..d1_s` under the Frobenius of the base field,
    /// each sorted with its smallest member first.
    pub j_classes: Vec<Vec<u64>>,
    pub indices: Vec<FactorIndex>,
    /// `p^l` stripped from `n` before the formula ran.
    pub char_power: u64,
}

/// Audit record for `f(X^n)`.
#[derive(Debug, Clone)]
pub struct CompositionPlan {
    pub f: Poly,
    pub k: usize,
    /// Leading coefficient of the input, attached as a unit.
    pub scale: FieldElem,
    pub inner: BinomialPlan,
}

#[derive(Debug, Clone)]
pub enum Plan {
    Binomial(BinomialPlan),
    Composition(CompositionPlan),
}

impl Plan {
    pub fn binomial(&self) -> &BinomialPlan {
        match self {
            Plan::Binomial(b) => b,
            Plan::Composition(c) => &c.inner,
        }
    }
}

/// Alternative (equally valid) choices of roots of unity and of `b`, used to
/// check that the factor set does not depend on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanChoices {
    /// Replaces `zeta_d1` by `zeta_d1^e`, `e` moved up to the next unit mod `d1_s`.
    pub zeta_d1_exp: u64,
    /// Same for `zeta_d2`.
    pub zeta_d2_exp: u64,
    /// Replaces `b` by `zeta_d1^twist * b`.
    pub b_twist: u64,
}

impl Default for PlanChoices {
    fn default() -> Self {
        PlanChoices {
            zeta_d1_exp: 1,
            zeta_d2_exp: 1,
            b_twist: 0,
        }
    }
}

pub(crate) fn unit_at_or_after(e: u64, d: u64) -> u64 {
    (e.max(1)..)
        .find(|&u| numtheory::gcd(u, d) == 1)
        .expect("1 is a unit")
}
