//! Text and JSON renderings of a factorization.

use std::fmt::Write as _;

use serde::Serialize;

use crate::factorization::{Factor, Factorization};
use crate::factorizer::{BinomialPlan, Plan};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorRecord {
    pub poly: String,
    pub mult: u64,
    pub degree: usize,
    pub order: Option<u64>,
}

impl From<&Factor> for FactorRecord {
    fn from(f: &Factor) -> Self {
        FactorRecord {
            poly: f.poly.to_string(),
            mult: f.multiplicity,
            degree: f.degree,
            order: f.order,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanRecord {
    /// Degree of `f` for compositions, 1 for binomials.
    pub k: usize,
    pub n1: u64,
    pub n2: u64,
    pub w: u64,
    pub s: u64,
    pub d1_s: u64,
    pub d2_s: u64,
    pub s1: u64,
    pub r: u64,
    pub coset_reps: Vec<u64>,
    pub t: Vec<u64>,
    pub c: Vec<u64>,
    pub j_reps: Vec<u64>,
    pub char_power: u64,
}

impl PlanRecord {
    fn new(plan: &BinomialPlan, k: usize) -> PlanRecord {
        let p = &plan.params;
        PlanRecord {
            k,
            n1: p.n1,
            n2: p.n2,
            w: p.w,
            s: p.s,
            d1_s: p.d1_s(),
            d2_s: p.d2_s(),
            s1: p.s1,
            r: p.r,
            coset_reps: p.classes.iter().map(|c| c.rep).collect(),
            t: p.classes.iter().map(|c| c.t).collect(),
            c: p.classes.iter().map(|c| c.c).collect(),
            j_reps: plan.j_classes.iter().map(|c| c[0]).collect(),
            char_power: plan.char_power,
        }
    }
}

impl From<&Plan> for PlanRecord {
    fn from(plan: &Plan) -> Self {
        match plan {
            Plan::Binomial(b) => PlanRecord::new(b, 1),
            Plan::Composition(c) => PlanRecord::new(&c.inner, c.k),
        }
    }
}

/// Serialized factorization; keys appear in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationRecord {
    pub field: String,
    pub input: String,
    /// Leading coefficient of the input, when it is not 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    pub factors: Vec<FactorRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plan: Option<PlanRecord>,
}

impl FactorizationRecord {
    pub fn new(fz: &Factorization, with_plan: bool) -> FactorizationRecord {
        FactorizationRecord {
            field: fz.base.ctx().spec(),
            input: fz.base.to_string(),
            unit: (!fz.unit.is_one()).then(|| fz.unit.to_string()),
            factors: fz.factors.iter().map(FactorRecord::from).collect(),
            plan: if with_plan {
                fz.plan.as_ref().map(PlanRecord::from)
            } else {
                None
            },
        }
    }
}

pub fn to_json(fz: &Factorization, with_plan: bool) -> String {
    serde_json::to_string_pretty(&FactorizationRecord::new(fz, with_plan))
        .expect("records serialize")
}

/// One line per factor, e.g. `x^2 + 1  (degree 2, order 4)`.
pub fn to_text(fz: &Factorization, with_plan: bool) -> String {
    let mut out = String::new();
    if !fz.unit.is_one() {
        writeln!(out, "unit {}", fz.unit).unwrap();
    }
    for f in &fz.factors {
        write!(out, "{}  (degree {}", f.poly, f.degree).unwrap();
        if let Some(order) = f.order {
            write!(out, ", order {order}").unwrap();
        }
        if f.multiplicity > 1 {
            write!(out, ", multiplicity {}", f.multiplicity).unwrap();
        }
        out.push_str(")\n");
    }
    if let (true, Some(plan)) = (with_plan, fz.plan.as_ref()) {
        let r = PlanRecord::from(plan);
        writeln!(out, "plan:").unwrap();
        writeln!(out, "  k = {}, n1 = {}, n2 = {}", r.k, r.n1, r.n2).unwrap();
        writeln!(
            out,
            "  w = {}, s = {}, s1 = {}, r = {}",
            r.w, r.s, r.s1, r.r
        )
        .unwrap();
        writeln!(out, "  d1_s = {}, d2_s = {}", r.d1_s, r.d2_s).unwrap();
        writeln!(out, "  coset reps = {:?}", r.coset_reps).unwrap();
        writeln!(out, "  t = {:?}, c = {:?}", r.t, r.c).unwrap();
        writeln!(out, "  j reps = {:?}", r.j_reps).unwrap();
        if r.char_power > 1 {
            writeln!(out, "  char power = {}", r.char_power).unwrap();
        }
    }
    out
}
