//! Prime fields and their extensions, realized as `F_p[X]/(modulus)`.
//!
//! Contexts are interned: asking twice for the same field returns handles to
//! the same shared context, so element operations usually compare contexts by
//! pointer.

mod embed;
pub(crate) mod fp;
mod group;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::numtheory::{self, BigFactorization};

pub use embed::{apply_embedding, embed, EmbeddingMap};
pub use group::{discrete_log, dth_root, element_order, order_dividing, primitive_root_of_unity};

/// Largest supported characteristic; keeps coefficient products inside `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;
/// Largest supported extension degree over the prime field.
pub const MAX_DEGREE: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u64),
    #[error("modulus has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("field F_{p}^{m} is outside the supported range")]
    TooLarge { p: u64, m: usize },
    #[error("element is zero")]
    ZeroElement,
    #[error("{d} does not divide the group order {order}")]
    OrderNotDividing { d: String, order: String },
    #[error("no {d}-th root exists")]
    NoRoot { d: u64 },
    #[error("{sub} is not a subfield of {sup}")]
    NotASubfield { sub: String, sup: String },
    #[error("element does not lie in the subfield")]
    NotInSubfield,
    #[error("could not factor the group order of {0}")]
    Unfactorable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub(crate) struct FieldInner {
    p: u64,
    m: usize,
    /// Monic, little-endian, length `m + 1`.
    modulus: Vec<u64>,
    group_order: BigUint,
    group_factors: OnceLock<Option<BigFactorization>>,
    generator: OnceLock<Option<Vec<u64>>>,
    /// Row `i` holds the coordinates of `X^(i*p)`.
    frobenius: OnceLock<Vec<Vec<u64>>>,
    /// Roots of unity by order, as handed out by `primitive_root_of_unity`.
    unity_roots: Mutex<HashMap<u64, Vec<u64>>>,
}

/// Handle to an interned finite field `F_{p^m}`.
#[derive(Clone)]
pub struct FieldCtx(Arc<FieldInner>);

type Registry = Mutex<HashMap<(u64, Vec<u64>), FieldCtx>>;

fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(Default::default)
}

type ModulusCache = Mutex<HashMap<(u64, usize), Vec<u64>>>;

fn default_moduli() -> &'static ModulusCache {
    static REG: OnceLock<ModulusCache> = OnceLock::new();
    REG.get_or_init(Default::default)
}

/// Builds (or fetches) `F_{p^m}`. `modulus`, when given, lists the monic
/// modulus coefficients from the leading one down to the constant term.
pub fn make_extension(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<FieldCtx, FieldError> {
    FieldCtx::new(p, m, modulus)
}

impl FieldCtx {
    pub fn new(p: u64, m: usize, modulus: Option<&[u64]>) -> Result<FieldCtx, FieldError> {
        if !numtheory::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= MAX_CHARACTERISTIC || m == 0 || m > MAX_DEGREE {
            return Err(FieldError::TooLarge { p, m });
        }
        let little = match modulus {
            Some(high_first) => {
                if high_first.len() != m + 1 {
                    return Err(FieldError::DegreeMismatch {
                        expected: m,
                        found: high_first.len().saturating_sub(1),
                    });
                }
                if high_first[0] != 1 {
                    return Err(FieldError::Parse("modulus must be monic".into()));
                }
                if high_first.iter().any(|&c| c >= p) {
                    return Err(FieldError::Parse(format!(
                        "coefficient out of range for p = {p}"
                    )));
                }
                let mut v: Vec<u64> = high_first.iter().rev().copied().collect();
                if m == 1 {
                    // every degree-one modulus gives the same prime field
                    v = vec![0, 1];
                }
                if !fp::is_irreducible(&v, p) {
                    return Err(FieldError::ReducibleModulus(p));
                }
                v
            }
            None => default_modulus(p, m),
        };
        Ok(intern(p, little))
    }

    pub fn prime(p: u64) -> Result<FieldCtx, FieldError> {
        FieldCtx::new(p, 1, None)
    }

    /// `F_{p^m}` with `q = p^e` given as a prime power, returned with `e`.
    pub fn from_prime_power(q: u64) -> Result<FieldCtx, FieldError> {
        let (p, e) = prime_power_parts(q).ok_or(FieldError::NotPrime(q))?;
        FieldCtx::new(p, e as usize, None)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    /// Monic modulus, little-endian.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Number of elements, `p^m`.
    pub fn size(&self) -> BigUint {
        &self.0.group_order + 1u32
    }

    /// Number of elements when it fits a machine word.
    pub fn size_u64(&self) -> Option<u64> {
        self.size().to_u64()
    }

    /// `p^m - 1`.
    pub fn group_order(&self) -> &BigUint {
        &self.0.group_order
    }

    /// Prime factorization of `p^m - 1`, computed once.
    pub fn group_factorization(&self) -> Result<&BigFactorization, FieldError> {
        self.0
            .group_factors
            .get_or_init(|| numtheory::factor_prime_power_minus_one(self.p(), self.m() as u64))
            .as_ref()
            .ok_or_else(|| FieldError::Unfactorable(self.to_string()))
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            ctx: self.clone(),
            coords: vec![0; self.m()],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, c: u64) -> FieldElem {
        let mut e = self.zero();
        e.coords[0] = c % self.p();
        e
    }

    /// Element from little-endian coordinates (missing high coordinates are 0).
    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElem, FieldError> {
        if coords.len() > self.m() {
            return Err(FieldError::Parse(format!(
                "{} coordinates for a degree-{} field",
                coords.len(),
                self.m()
            )));
        }
        if let Some(&c) = coords.iter().find(|&&c| c >= self.p()) {
            return Err(FieldError::Parse(format!(
                "coordinate {c} not below p = {}",
                self.p()
            )));
        }
        let mut v = coords.to_vec();
        v.resize(self.m(), 0);
        Ok(FieldElem {
            ctx: self.clone(),
            coords: v,
        })
    }

    /// The element whose coordinates are the base-p digits of `index`
    /// (constant coordinate least significant). Increasing indices walk the
    /// field in coordinate-lex order.
    pub fn element_at(&self, mut index: u64) -> FieldElem {
        let mut e = self.zero();
        for c in e.coords.iter_mut() {
            *c = index % self.p();
            index /= self.p();
        }
        e
    }

    /// The variable `X`, i.e. the class of `X` modulo the field's modulus.
    pub fn modulus_root(&self) -> FieldElem {
        if self.m() == 1 {
            return self.zero();
        }
        let mut e = self.zero();
        e.coords[1] = 1;
        e
    }

    /// All elements in coordinate-lex order. Only sensible for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let size = self.size_u64().expect("field too large to enumerate");
        (0..size).map(move |i| self.element_at(i))
    }

    /// Textual form `p^m/c_m,...,c_0`.
    pub fn spec(&self) -> String {
        let coeffs: Vec<String> = self.0.modulus.iter().rev().map(u64::to_string).collect();
        format!("{}^{}/{}", self.p(), self.m(), coeffs.join(","))
    }

    /// Parses `p^m`, `p^m/c_m,...,c_0`, or a bare prime power `q`.
    pub fn parse_spec(s: &str) -> Result<FieldCtx, FieldError> {
        let s = s.trim();
        let (head, modulus) = match s.split_once('/') {
            Some((h, m)) => (h, Some(m)),
            None => (s, None),
        };
        let parse_u64 = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| FieldError::Parse(format!("invalid integer '{t}'")))
        };
        let (p, m) = match head.split_once('^') {
            Some((p, m)) => (parse_u64(p)?, parse_u64(m)? as usize),
            None => {
                let q = parse_u64(head)?;
                match prime_power_parts(q) {
                    Some((p, e)) => (p, e as usize),
                    None => return Err(FieldError::NotPrime(q)),
                }
            }
        };
        let coeffs = modulus
            .map(|m| m.split(',').map(parse_u64).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        FieldCtx::new(p, m, coeffs.as_deref())
    }

    fn same(&self, other: &FieldCtx) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }

    pub(crate) fn inner(&self) -> &FieldInner {
        &self.0
    }

    fn frobenius_matrix(&self) -> &Vec<Vec<u64>> {
        self.0.frobenius.get_or_init(|| {
            let (p, f) = (self.p(), &self.0.modulus);
            let m = self.m();
            let x = if m == 1 { vec![0] } else { vec![0, 1] };
            let mut xp = x.clone();
            for _ in 1..p {
                xp = fp::mul_mod_poly(&xp, &x, f, p);
            }
            let mut rows = Vec::with_capacity(m);
            let mut cur = vec![1u64];
            for _ in 0..m {
                let mut row = cur.clone();
                row.resize(m, 0);
                rows.push(row);
                cur = fp::mul_mod_poly(&cur, &xp, f, p);
            }
            rows
        })
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for FieldCtx {}

impl Hash for FieldCtx {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({})", self.spec())
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "F_{}", self.p())
        } else {
            write!(f, "F_{}^{}", self.p(), self.m())
        }
    }
}

fn intern(p: u64, modulus: Vec<u64>) -> FieldCtx {
    let key = (p, modulus);
    let mut reg = registry().lock().expect("field registry poisoned");
    if let Some(ctx) = reg.get(&key) {
        return ctx.clone();
    }
    let m = key.1.len() - 1;
    let group_order = BigUint::from(p).pow(m as u32) - 1u32;
    let ctx = FieldCtx(Arc::new(FieldInner {
        p,
        m,
        modulus: key.1.clone(),
        group_order,
        group_factors: OnceLock::new(),
        generator: OnceLock::new(),
        frobenius: OnceLock::new(),
        unity_roots: Mutex::new(HashMap::new()),
    }));
    reg.insert(key, ctx.clone());
    ctx
}

/// Lexicographically smallest monic irreducible of degree `m`, comparing
/// `(a_{m-1}, ..., a_0)`; the prime field uses the modulus `X`.
fn default_modulus(p: u64, m: usize) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1];
    }
    if let Some(v) = default_moduli().lock().expect("poisoned").get(&(p, m)) {
        return v.clone();
    }
    // digits[i] is a_i; increment with a_0 as the least significant digit
    let mut digits = vec![0u64; m];
    let found = loop {
        let mut cand = digits.clone();
        cand.push(1);
        if fp::is_irreducible(&cand, p) {
            break cand;
        }
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(i < m, "irreducible polynomials exist in every degree");
        }
    };
    default_moduli()
        .lock()
        .expect("poisoned")
        .insert((p, m), found.clone());
    found
}

/// `q = p^e` with `p` prime, if `q` is a prime power.
pub fn prime_power_parts(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = numtheory::IntFactorization::of(q);
    let mut it = f.iter();
    let (p, e) = it.next()?;
    if it.next().is_some() {
        None
    } else {
        Some((p, e))
    }
}

/// An element of a [`FieldCtx`], stored as coordinates over `F_p`.
#[derive(Clone)]
pub struct FieldElem {
    ctx: FieldCtx,
    coords: Vec<u64>,
}

impl FieldElem {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    /// Little-endian coordinates `(c_0, ..., c_{m-1})`.
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0] == 1 && self.coords[1..].iter().all(|&c| c == 0)
    }

    /// Position in coordinate-lex order, when it fits a machine word.
    pub fn index(&self) -> Option<u64> {
        let mut acc: u64 = 0;
        for &c in self.coords.iter().rev() {
            acc = acc.checked_mul(self.ctx.p())?.checked_add(c)?;
        }
        Some(acc)
    }

    /// The prime-field value if the element lies in `F_p`.
    pub fn as_prime(&self) -> Option<u64> {
        self.coords[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.coords[0])
    }

    fn check(&self, other: &FieldElem) {
        assert!(
            self.ctx.same(&other.ctx),
            "field context mismatch: {} vs {}",
            self.ctx,
            other.ctx
        );
    }

    fn with_coords(&self, coords: Vec<u64>) -> FieldElem {
        FieldElem {
            ctx: self.ctx.clone(),
            coords,
        }
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        self.check(other);
        let p = self.ctx.p();
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| fp::add_mod(a, b, p))
            .collect();
        self.with_coords(coords)
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.check(other);
        let p = self.ctx.p();
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| fp::sub_mod(a, b, p))
            .collect();
        self.with_coords(coords)
    }

    pub fn neg(&self) -> FieldElem {
        let p = self.ctx.p();
        let coords = self.coords.iter().map(|&a| fp::sub_mod(0, a, p)).collect();
        self.with_coords(coords)
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        self.check(other);
        let p = self.ctx.p();
        if self.ctx.m() == 1 {
            return self.with_coords(vec![fp::mul_mod(self.coords[0], other.coords[0], p)]);
        }
        let mut prod = fp::mul(&self.coords, &other.coords, p);
        fp::rem_monic(&mut prod, self.ctx.modulus(), p);
        prod.resize(self.ctx.m(), 0);
        self.with_coords(prod)
    }

    pub fn scale(&self, c: u64) -> FieldElem {
        let p = self.ctx.p();
        let c = c % p;
        self.with_coords(self.coords.iter().map(|&a| fp::mul_mod(a, c, p)).collect())
    }

    pub fn square(&self) -> FieldElem {
        self.mul(self)
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        let p = self.ctx.p();
        if self.ctx.m() == 1 {
            return Some(self.with_coords(vec![fp::inv_mod(self.coords[0], p)]));
        }
        let mut v = fp::inverse_mod_poly(&self.coords, self.ctx.modulus(), p)?;
        v.resize(self.ctx.m(), 0);
        Some(self.with_coords(v))
    }

    pub fn pow(&self, e: &BigUint) -> FieldElem {
        let mut acc = self.ctx.one();
        for i in (0..e.bits()).rev() {
            acc = acc.square();
            if e.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }

    pub fn pow_u64(&self, mut e: u64) -> FieldElem {
        let mut acc = self.ctx.one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.square();
            }
        }
        acc
    }

    /// `x^(p^k)`, via the cached Frobenius matrix.
    pub fn frobenius(&self, k: usize) -> FieldElem {
        let m = self.ctx.m();
        if m == 1 {
            return self.clone();
        }
        let k = k % m;
        let rows = self.ctx.frobenius_matrix();
        let p = self.ctx.p();
        let mut cur = self.coords.clone();
        for _ in 0..k {
            let mut acc = vec![0u128; m];
            for (i, &c) in cur.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (a, &r) in acc.iter_mut().zip(&rows[i]) {
                    *a += (c * r) as u128;
                }
            }
            cur = acc.into_iter().map(|a| (a % p as u128) as u64).collect();
        }
        self.with_coords(cur)
    }

    /// `x^(q^k)` for `q = p^e`.
    pub fn frobenius_q(&self, e: usize, k: usize) -> FieldElem {
        self.frobenius(e * k)
    }

    /// Parses a decimal prime-field value or a coordinate list `[c_{m-1},...,c_0]`.
    pub fn parse(ctx: &FieldCtx, s: &str) -> Result<FieldElem, FieldError> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let mut coords = inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|_| FieldError::Parse(format!("invalid coordinate '{t}'")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != ctx.m() {
                return Err(FieldError::Parse(format!(
                    "expected {} coordinates, found {}",
                    ctx.m(),
                    coords.len()
                )));
            }
            coords.reverse();
            return ctx.from_coords(&coords);
        }
        let v: i64 = s
            .parse()
            .map_err(|_| FieldError::Parse(format!("invalid element '{s}'")))?;
        let p = ctx.p() as i64;
        Ok(ctx.from_int(v.rem_euclid(p) as u64))
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.ctx.same(&other.ctx)
    }
}

impl Eq for FieldElem {}

impl Hash for FieldElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Coordinate-lex order, highest coordinate first.
impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coords.iter().rev().cmp(other.coords.iter().rev())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.m() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        let parts: Vec<String> = self.coords.iter().rev().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                FieldElem::$method(self, rhs)
            }
        }
        impl $trait<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                FieldElem::$method(&self, &rhs)
            }
        }
        impl $trait<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                FieldElem::$method(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_are_lex_smallest() {
        assert_eq!(FieldCtx::new(2, 1, None).unwrap().modulus(), &[0, 1]);
        assert_eq!(FieldCtx::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldCtx::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldCtx::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FieldCtx::new(5, 2, None).unwrap().modulus(), &[2, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FieldCtx::new(4, 1, None).unwrap_err(),
            FieldError::NotPrime(4)
        );
        assert_eq!(
            FieldCtx::new(3, 2, Some(&[1, 0, 2])).unwrap_err(),
            FieldError::ReducibleModulus(3)
        );
        assert!(matches!(
            FieldCtx::new(3, 2, Some(&[1, 1])).unwrap_err(),
            FieldError::DegreeMismatch { .. }
        ));
    }

    #[test]
    fn contexts_are_interned() {
        let a = FieldCtx::new(3, 2, None).unwrap();
        let b = FieldCtx::parse_spec("3^2/1,0,1").unwrap();
        let c = FieldCtx::parse_spec("9").unwrap();
        assert!(Arc::ptr_eq(&a.0, &b.0));
        assert!(Arc::ptr_eq(&a.0, &c.0));
        assert_eq!(a.spec(), "3^2/1,0,1");
    }

    #[test]
    fn arithmetic_in_f9() {
        let f = FieldCtx::new(3, 2, None).unwrap();
        let i = f.modulus_root(); // i^2 = -1
        assert_eq!(i.square(), f.from_int(2));
        let x = FieldElem::parse(&f, "[1,2]").unwrap(); // X + 2
        assert_eq!(x.coords(), &[2, 1]);
        assert_eq!(x.to_string(), "[1,2]");
        let inv = x.inv().unwrap();
        assert!((&x * &inv).is_one());
        assert_eq!(x.frobenius(1), x.pow_u64(3));
        assert_eq!(x.frobenius(2), x);
    }

    #[test]
    fn frobenius_matches_power_in_bigger_fields() {
        let f = FieldCtx::new(5, 7, None).unwrap();
        let x = f.element_at(123456);
        assert_eq!(x.frobenius(1), x.pow_u64(5));
        assert_eq!(x.frobenius(3), x.pow_u64(125));
        assert_eq!(x.pow(f.group_order()), f.one());
    }

    #[test]
    fn ordering_is_coordinate_lex() {
        let f = FieldCtx::new(3, 2, None).unwrap();
        let elems: Vec<_> = f.elements().collect();
        let mut sorted = elems.clone();
        sorted.sort();
        assert_eq!(elems, sorted);
        assert_eq!(elems[4].index(), Some(4));
    }

    #[test]
    #[should_panic(expected = "field context mismatch")]
    fn mixing_contexts_panics() {
        let a = FieldCtx::prime(3).unwrap().one();
        let b = FieldCtx::prime(5).unwrap().one();
        let _ = &a + &b;
    }

    #[test]
    fn large_default_modulus() {
        let f = FieldCtx::new(2, 58, None).unwrap();
        assert_eq!(f.modulus().len(), 59);
        let g = f.element_at(7);
        assert_eq!(g.pow(f.group_order()), f.one());
    }
}
