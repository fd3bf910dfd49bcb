//! Factorization results shared by the closed formulas and the oracle.

use std::cmp::Ordering;

use crate::factorizer::Plan;
use crate::field::FieldElem;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: Poly,
    pub multiplicity: u64,
    pub degree: usize,
    /// Declared order of the factor; absent for `X` and for oracle output.
    pub order: Option<u64>,
}

impl Factor {
    pub fn new(poly: Poly, multiplicity: u64, order: Option<u64>) -> Factor {
        let degree = poly.degree().expect("factors are nonzero");
        Factor {
            poly,
            multiplicity,
            degree,
            order,
        }
    }
}

/// `base = unit * prod factor^multiplicity` with monic irreducible factors.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub base: Poly,
    pub unit: FieldElem,
    pub factors: Vec<Factor>,
    pub plan: Option<Plan>,
}

/// Coefficient-lex comparison, leading coefficient first.
pub fn cmp_coeffs(a: &Poly, b: &Poly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs_high_first().cmp(b.coeffs_high_first()))
}

impl Factorization {
    pub fn new(base: Poly, unit: FieldElem, factors: Vec<Factor>, plan: Option<Plan>) -> Self {
        let mut fz = Factorization {
            base,
            unit,
            factors,
            plan,
        };
        fz.sort();
        fz
    }

    /// Canonical order: degree, then declared order, then coefficients.
    pub fn sort(&mut self) {
        self.factors.sort_by(|a, b| {
            a.degree
                .cmp(&b.degree)
                .then_with(|| a.order.cmp(&b.order))
                .then_with(|| cmp_coeffs(&a.poly, &b.poly))
        });
    }

    /// `unit * prod factor^multiplicity`.
    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, f| {
                &acc * &f.poly.pow(f.multiplicity)
            })
    }

    /// Factors with multiplicities, sorted by coefficients; ignores metadata.
    pub fn multiset(&self) -> Vec<(Poly, u64)> {
        let mut v: Vec<(Poly, u64)> = self
            .factors
            .iter()
            .map(|f| (f.poly.clone(), f.multiplicity))
            .collect();
        v.sort_by(|a, b| cmp_coeffs(&a.0, &b.0).then(a.1.cmp(&b.1)));
        v
    }

    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.degree * f.multiplicity as usize)
            .sum()
    }
}
