//! Seeded grid of `X^n - a` instances, each factored and verified.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::factorizer::{self, verify_with, CheckOutcome};
use crate::field::{FieldCtx, FieldElem};
use crate::oracle::OracleConfig;
use crate::report::FactorRecord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    /// Field sizes `q`, each with its default modulus.
    pub fields: Vec<u64>,
    pub max_n: u64,
    /// Fields up to this size use every nonzero `a`.
    pub exhaustive_up_to: u64,
    /// Number of random nonzero `a` for larger fields.
    pub random_elements: usize,
    pub seed: u64,
    /// Instances above this degree skip the oracle comparison.
    pub oracle_max_degree: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            fields: vec![2, 3, 4, 5, 7, 8, 9, 11, 13],
            max_n: 60,
            exhaustive_up_to: 9,
            random_elements: 10,
            seed: 0,
            oracle_max_degree: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepInstance {
    pub field: String,
    pub n: u64,
    pub a: String,
    pub factors: Vec<FactorRecord>,
    /// `(check name, outcome)`, including the shortcut comparison.
    pub checks: Vec<(String, CheckOutcome)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SweepInstance {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|(_, o)| *o != CheckOutcome::Fail)
    }

    pub fn outcome(&self, name: &str) -> Option<CheckOutcome> {
        self.checks.iter().find(|(n, _)| n == name).map(|(_, o)| *o)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub instances: Vec<SweepInstance>,
}

/// The values of `a` used for one field: all of them for small fields, a
/// seeded sample otherwise, in ascending coordinate order.
pub fn elements_for(ctx: &FieldCtx, cfg: &SweepConfig) -> Vec<FieldElem> {
    let q = ctx.size_u64().expect("sweep fields are small");
    if q <= cfg.exhaustive_up_to {
        return ctx.elements().skip(1).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ q.rotate_left(32));
    let amount = cfg.random_elements.min(q as usize - 1);
    let mut picks: Vec<u64> = index::sample(&mut rng, q as usize - 1, amount)
        .into_iter()
        .map(|i| i as u64 + 1)
        .collect();
    picks.sort_unstable();
    picks.into_iter().map(|i| ctx.element_at(i)).collect()
}

/// Every `(q, n, a)` instance of the grid, in output order.
pub fn grid(cfg: &SweepConfig) -> Vec<(FieldCtx, u64, FieldElem)> {
    let mut out = Vec::new();
    for &q in &cfg.fields {
        let ctx = FieldCtx::from_prime_power(q).expect("sweep fields are prime powers");
        let elems = elements_for(&ctx, cfg);
        for n in 1..=cfg.max_n {
            for a in &elems {
                out.push((ctx.clone(), n, a.clone()));
            }
        }
    }
    out
}

/// Factors and verifies one instance.
pub fn run_instance(a: &FieldElem, n: u64, oracle: &OracleConfig) -> SweepInstance {
    let mut inst = SweepInstance {
        field: a.ctx().spec(),
        n,
        a: a.to_string(),
        factors: Vec::new(),
        checks: Vec::new(),
        error: None,
    };
    let fz = match factorizer::factor_binomial(a, n) {
        Ok(fz) => fz,
        Err(e) => {
            inst.error = Some(e.to_string());
            return inst;
        }
    };
    inst.factors = fz.factors.iter().map(FactorRecord::from).collect();
    let report = verify_with(&fz, oracle);
    inst.checks = report
        .checks
        .iter()
        .map(|c| (c.name.to_string(), c.outcome))
        .collect();
    let shortcut = match factorizer::unity_shortcut(a, n) {
        Ok(Some(other)) if other.multiset() == fz.multiset() => CheckOutcome::Pass,
        Ok(Some(_)) | Err(_) => CheckOutcome::Fail,
        Ok(None) => CheckOutcome::Skipped,
    };
    inst.checks.push(("shortcut".into(), shortcut));
    inst
}

/// Runs the grid on all available cores; the report does not depend on the
/// thread count.
pub fn run_sweep(cfg: &SweepConfig) -> SweepReport {
    let instances = grid(cfg);
    let oracle = OracleConfig {
        rng_seed: cfg.seed,
        max_total_degree: cfg.oracle_max_degree,
    };
    let results: Vec<Mutex<Option<SweepInstance>>> =
        instances.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((_, n, a)) = instances.get(i) else {
                    break;
                };
                *results[i].lock().expect("poisoned") = Some(run_instance(a, *n, &oracle));
            });
        }
    });
    let instances: Vec<SweepInstance> = results
        .into_iter()
        .map(|m| {
            m.into_inner()
                .expect("poisoned")
                .expect("every instance ran")
        })
        .collect();
    let passed = instances.iter().filter(|i| i.passed()).count();
    SweepReport {
        config: cfg.clone(),
        total: instances.len(),
        passed,
        failed: instances.len() - passed,
        instances,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes_and_is_deterministic() {
        let cfg = SweepConfig {
            fields: vec![2, 5, 11],
            max_n: 8,
            random_elements: 3,
            seed: 42,
            ..SweepConfig::default()
        };
        let a = run_sweep(&cfg);
        assert_eq!(
            a.failed,
            0,
            "{:?}",
            a.instances.iter().find(|i| !i.passed())
        );
        assert_eq!(a.total, 8 * (1 + 4 + 3));
        let b = run_sweep(&cfg);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn random_elements_depend_on_the_seed() {
        let ctx = FieldCtx::prime(13).unwrap();
        let cfg = SweepConfig {
            random_elements: 4,
            ..SweepConfig::default()
        };
        let a = elements_for(&ctx, &cfg);
        assert_eq!(a.len(), 4);
        assert_eq!(a, elements_for(&ctx, &cfg));
        assert!(a.iter().all(|x| !x.is_zero()));
    }
}
