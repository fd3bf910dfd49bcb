//! Independent checks of a finished factorization.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{butler_profile, Plan};
use crate::factorization::Factorization;
use crate::oracle::{self, OracleConfig, OracleError};
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: CheckOutcome,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    /// True when no check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != CheckOutcome::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks
            .iter()
            .filter(|c| c.outcome == CheckOutcome::Fail)
    }
}

fn result(name: &'static str, failures: Vec<String>, skipped: Vec<String>) -> CheckResult {
    let (outcome, detail) = if !failures.is_empty() {
        (CheckOutcome::Fail, failures.join("; "))
    } else if !skipped.is_empty() {
        (CheckOutcome::Skipped, skipped.join("; "))
    } else {
        (CheckOutcome::Pass, String::new())
    };
    CheckResult {
        name,
        outcome,
        detail,
    }
}

/// Runs every check with the default oracle configuration.
pub fn verify(fz: &Factorization) -> VerifyReport {
    verify_with(fz, &OracleConfig::default())
}

/// Checks that the factors multiply back to the input, are monic
/// irreducible with the declared degree and order, match the closed-form census
/// when the input is some `f(X^n)`, and agree with the brute-force oracle.
pub fn verify_with(fz: &Factorization, cfg: &OracleConfig) -> VerifyReport {
    VerifyReport {
        checks: vec![
            check_product(fz),
            check_irreducible(fz),
            check_degree(fz),
            check_order(fz),
            check_butler(fz),
            check_oracle(fz, cfg),
        ],
    }
}

fn check_product(fz: &Factorization) -> CheckResult {
    let product = fz.product();
    let failures = if product == fz.base {
        Vec::new()
    } else {
        vec![format!("product is {product}, expected {}", fz.base)]
    };
    result("product", failures, Vec::new())
}

fn check_irreducible(fz: &Factorization) -> CheckResult {
    let (mut failures, mut skipped) = (Vec::new(), Vec::new());
    for f in &fz.factors {
        if !f.poly.is_monic() {
            failures.push(format!("{} is not monic", f.poly));
            continue;
        }
        match oracle::is_irreducible(&f.poly) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("{} is reducible", f.poly)),
            Err(e) => skipped.push(format!("{}: {e}", f.poly)),
        }
    }
    result("irreducible", failures, skipped)
}

fn check_degree(fz: &Factorization) -> CheckResult {
    let failures = fz
        .factors
        .iter()
        .filter(|f| f.poly.degree() != Some(f.degree))
        .map(|f| format!("{} declared with degree {}", f.poly, f.degree))
        .collect();
    result("degree", failures, Vec::new())
}

fn check_order(fz: &Factorization) -> CheckResult {
    let (mut failures, mut skipped) = (Vec::new(), Vec::new());
    for f in &fz.factors {
        let Some(declared) = f.order else {
            if f.poly != Poly::x(f.poly.ctx()) {
                skipped.push(format!("{} has no declared order", f.poly));
            }
            continue;
        };
        match f.poly.order_dividing(declared) {
            Ok(actual) if actual == declared => {}
            Ok(actual) => failures.push(format!(
                "{} declared with order {declared}, actual {actual}",
                f.poly
            )),
            Err(e) => failures.push(format!("{} declared with order {declared}: {e}", f.poly)),
        }
    }
    result("order", failures, skipped)
}

/// `(f, n)` with `base = unit * f(X^n)`, when the plan records one.
fn composition_input(fz: &Factorization) -> Option<(Poly, u64)> {
    let (f, inner) = match fz.plan.as_ref()? {
        Plan::Composition(c) => (c.f.monic(), &c.inner),
        Plan::Binomial(b) => {
            let ctx = fz.base.ctx();
            (Poly::x(ctx) + Poly::constant(fz.base.coeff(0)), b)
        }
    };
    if inner.char_power != 1 {
        return None;
    }
    let n = inner.params.n;
    (f.compose_xn(n as usize).scale(&fz.unit) == fz.base).then_some((f, n))
}

fn check_butler(fz: &Factorization) -> CheckResult {
    let Some((f, n)) = composition_input(fz) else {
        return result(
            "butler",
            Vec::new(),
            vec!["input is not f(X^n) with gcd(n, q) = 1".into()],
        );
    };
    let rows = match butler_profile(&f, n) {
        Ok(rows) => rows,
        Err(e) => return result("butler", Vec::new(), vec![e.to_string()]),
    };
    let expected: BTreeMap<(u64, u64), u64> = rows
        .iter()
        .map(|r| ((r.degree, r.order), r.count))
        .collect();
    let mut actual: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for fac in &fz.factors {
        let key = (fac.degree as u64, fac.order.unwrap_or(0));
        *actual.entry(key).or_default() += fac.multiplicity;
    }
    let failures = if actual == expected {
        Vec::new()
    } else {
        vec![format!(
            "(degree, order) -> count is {actual:?}, expected {expected:?}"
        )]
    };
    result("butler", failures, Vec::new())
}

fn check_oracle(fz: &Factorization, cfg: &OracleConfig) -> CheckResult {
    match oracle::brute_factor(&fz.base, cfg) {
        Ok(reference) => {
            let mut failures = Vec::new();
            if reference.multiset() != fz.multiset() {
                failures.push("factor multiset differs from the brute-force factorization".into());
            }
            if reference.unit != fz.unit {
                failures.push(format!("unit is {}, expected {}", fz.unit, reference.unit));
            }
            result("oracle", failures, Vec::new())
        }
        Err(e @ (OracleError::DegreeGuard { .. } | OracleError::FieldTooLarge(_))) => {
            result("oracle", Vec::new(), vec![e.to_string()])
        }
        Err(e) => result("oracle", vec![e.to_string()], Vec::new()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorizer::{factor_composition, factor_unity};
    use crate::field::FieldCtx;

    #[test]
    fn unity_output_passes() {
        let fz = factor_unity(&FieldCtx::prime(3).unwrap(), 8).unwrap();
        let report = verify(&fz);
        assert!(report.passed(), "{report:?}");
        for c in &report.checks {
            assert_eq!(c.outcome, CheckOutcome::Pass, "{c:?}");
        }
    }

    #[test]
    fn perturbed_coefficient_fails_product() {
        let f3 = FieldCtx::prime(3).unwrap();
        let mut fz = factor_unity(&f3, 8).unwrap();
        let last = fz.factors.last_mut().unwrap();
        last.poly = &last.poly + &Poly::one(&f3);
        let report = verify(&fz);
        assert_eq!(report.check("product").unwrap().outcome, CheckOutcome::Fail);
    }

    #[test]
    fn altered_order_fails() {
        let mut fz = factor_unity(&FieldCtx::prime(3).unwrap(), 8).unwrap();
        fz.factors[2].order = Some(8);
        let report = verify(&fz);
        assert_eq!(report.check("order").unwrap().outcome, CheckOutcome::Fail);
        assert_eq!(report.check("product").unwrap().outcome, CheckOutcome::Pass);
    }

    #[test]
    fn composition_passes_butler() {
        let f5 = FieldCtx::prime(5).unwrap();
        let g = Poly::from_ints(&f5, &[2, 0, 1]);
        let fz = factor_composition(&g, 6).unwrap();
        let report = verify(&fz);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.check("butler").unwrap().outcome, CheckOutcome::Pass);
    }
}
