//! Both sides of the product formulas, Segre-class relations and Bertini
//! statements, evaluated exactly in `A_*P^n`.
//!
//! Every identity is evaluated in `trials` independent prime fields: trial 0
//! uses the field of the inputs and the configured seed, trial `k ≥ 1` reduces
//! the inputs (through symmetric representatives) modulo a prime drawn from
//! `derive_seed(seed, k)`. Any disagreement between trials marks the report
//! inconclusive. Splayedness is never decided here; it is the caller's
//! hypothesis.

use std::fmt;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::charclasses::{chern_fulton, csm, csm_constructible, csm_hypersurface, ConstructibleFunction, DEFAULT_MAX_GENS};
use crate::chowring::cartier_segre;
use crate::error::{Error, Result};
use crate::groebner::{
    dim_degree, groebner_basis, ideal_contains, ideal_product, ideal_sum, ideals_equal, saturate, GroebnerBasis,
    MonomialOrder,
};
use crate::polyring::{derive_seed, jacobian_ideal, random_prime, HomogeneousIdeal, PrimeField, SparsePolynomial};
use crate::segre::{monomials_of_degree, segre_class, MAX_ATTEMPTS};
use crate::Class;

/// Version tag carried by serialized reports.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_gens: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 3,
            max_gens: DEFAULT_MAX_GENS,
        }
    }
}

impl VerifyConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    /// `(field, seed)` for each trial.
    pub fn trial_fields(&self, base: PrimeField) -> Vec<(PrimeField, u64)> {
        (0..self.trials.max(1))
            .map(|k| {
                if k == 0 {
                    (base, self.seed)
                } else {
                    let s = derive_seed(self.seed, k as u64);
                    (PrimeField::new(random_prime(s)).expect("random_prime returns a prime"), s)
                }
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub lhs: Class,
    pub rhs: Class,
    pub pass: bool,
    /// `rhs - lhs`.
    pub discrepancy: Class,
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub trial_primes: Vec<u64>,
    pub notes: Vec<String>,
    pub inconclusive: bool,
}

impl VerificationReport {
    pub fn outcome(&self) -> Outcome {
        if self.inconclusive {
            Outcome::Inconclusive
        } else if self.pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "format_version": FORMAT_VERSION,
            "identity": self.identity,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "pass": self.pass,
            "discrepancy": self.discrepancy.to_json(),
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials,
            "trial_primes": self.trial_primes,
            "inconclusive": self.inconclusive,
            "notes": self.notes,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let result = match self.outcome() {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inconclusive => "inconclusive",
        };
        writeln!(f, "identity: {}", self.identity)?;
        writeln!(f, "lhs: {}", self.lhs)?;
        writeln!(f, "rhs: {}", self.rhs)?;
        writeln!(f, "discrepancy: {}", self.discrepancy)?;
        writeln!(f, "result: {result}")?;
        write!(f, "prime: {}, seed: {}, trials: {}", self.prime, self.seed, self.trials)?;
        for note in &self.notes {
            write!(f, "\nnote: {note}")?;
        }
        Ok(())
    }
}

/// One evaluated identity within a single trial.
struct Side {
    identity: &'static str,
    lhs: Class,
    rhs: Class,
    notes: Vec<String>,
}

impl Side {
    fn new(identity: &'static str, lhs: Class, rhs: Class) -> Self {
        Self {
            identity,
            lhs,
            rhs,
            notes: Vec::new(),
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

fn run_trials<F>(base: PrimeField, cfg: &VerifyConfig, eval: F) -> Result<Vec<VerificationReport>>
where
    F: Fn(PrimeField, u64) -> Result<Vec<Side>> + Sync,
{
    let fields = cfg.trial_fields(base);
    let results = fields
        .par_iter()
        .map(|&(field, seed)| eval(field, seed))
        .collect::<Result<Vec<_>>>()?;
    let trial_primes: Vec<u64> = fields.iter().map(|(f, _)| f.modulus()).collect();
    let (first, rest) = results.split_first().expect("at least one trial");
    let mut reports = Vec::with_capacity(first.len());
    for (idx, side) in first.iter().enumerate() {
        let pass = side.lhs == side.rhs;
        let mut notes = side.notes.clone();
        let mut inconclusive = false;
        for (k, other) in rest.iter().enumerate() {
            match other.get(idx) {
                Some(o) if o.lhs == side.lhs && o.rhs == side.rhs => {}
                Some(o) => {
                    inconclusive = true;
                    notes.push(format!(
                        "trial {} (p = {}) disagrees: lhs {}, rhs {}",
                        k + 1,
                        trial_primes[k + 1],
                        o.lhs,
                        o.rhs
                    ));
                }
                None => {
                    inconclusive = true;
                    notes.push(format!("trial {} (p = {}) produced no such identity", k + 1, trial_primes[k + 1]));
                }
            }
        }
        reports.push(VerificationReport {
            identity: side.identity.to_string(),
            discrepancy: &side.rhs - &side.lhs,
            lhs: side.lhs.clone(),
            rhs: side.rhs.clone(),
            pass,
            prime: base.modulus(),
            seed: cfg.seed,
            trials: fields.len(),
            trial_primes: trial_primes.clone(),
            notes,
            inconclusive,
        });
    }
    Ok(reports)
}

fn single(reports: Vec<VerificationReport>) -> VerificationReport {
    reports.into_iter().next().expect("one identity per trial")
}

const SPLAYED_HYPOTHESIS: &str = "splayedness is the caller's hypothesis and is not checked";

/// `c_SM(X)·c_SM(Y)` against `c(TP^n) ∩ c_SM(X∩Y)`.
pub fn verify_csm_product(x: &HomogeneousIdeal, y: &HomogeneousIdeal, cfg: &VerifyConfig) -> Result<VerificationReport> {
    x.same_ring(y)?;
    run_trials(x.field(), cfg, |field, seed| {
        let x = x.to_field(field)?;
        let y = y.to_field(field)?;
        let cx = csm(&x, derive_seed(seed, 1), cfg.max_gens)?;
        let cy = csm(&y, derive_seed(seed, 2), cfg.max_gens)?;
        let cxy = csm(&ideal_sum(&x, &y)?, derive_seed(seed, 3), cfg.max_gens)?;
        Ok(vec![Side::new("csm-product", cx.intersect(&cy)?, cxy.cap_tangent()).note(SPLAYED_HYPOTHESIS)])
    })
    .map(single)
}

/// `c_SM(φ)·c_SM(ψ)` against `c(TP^n) ∩ c_SM(φ·ψ)`, with
/// `1_{V(F)}·1_{V(G)} = 1_{V(F,G)}`.
pub fn verify_constructible_product(
    phi: &ConstructibleFunction,
    psi: &ConstructibleFunction,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    if phi.num_vars() != psi.num_vars() || phi.field() != psi.field() {
        return Err(Error::RingMismatch {
            left_vars: phi.num_vars(),
            left_prime: phi.field().modulus(),
            right_vars: psi.num_vars(),
            right_prime: psi.field().modulus(),
        });
    }
    run_trials(phi.field(), cfg, |field, seed| {
        let phi = phi.to_field(field)?;
        let psi = psi.to_field(field)?;
        let n = phi.num_vars() - 1;
        let a = csm_constructible(&phi, derive_seed(seed, 1))?;
        let b = csm_constructible(&psi, derive_seed(seed, 2))?;
        let mut prod = Class::zero(n);
        for (i, (ai, f)) in phi.terms().iter().enumerate() {
            for (j, (bj, g)) in psi.terms().iter().enumerate() {
                let both = HomogeneousIdeal::new(phi.num_vars(), field, vec![f.clone(), g.clone()])?;
                let tag = derive_seed(derive_seed(seed, 3), ((i as u64) << 32) | j as u64);
                let c = csm(&both, tag, cfg.max_gens)?;
                prod = prod + c.scale(&BigInt::from(ai * bj));
            }
        }
        Ok(vec![Side::new("constructible-product", a.intersect(&b)?, prod.cap_tangent()).note(SPLAYED_HYPOTHESIS)])
    })
    .map(single)
}

/// `c_F(X)·c_F(Y)` against `c(TP^n) ∩ c_F(X∩Y)`.
pub fn verify_fulton_product(x: &HomogeneousIdeal, y: &HomogeneousIdeal, cfg: &VerifyConfig) -> Result<VerificationReport> {
    x.same_ring(y)?;
    run_trials(x.field(), cfg, |field, seed| {
        let x = x.to_field(field)?;
        let y = y.to_field(field)?;
        let cx = chern_fulton(&x, derive_seed(seed, 1))?;
        let cy = chern_fulton(&y, derive_seed(seed, 2))?;
        let cxy = chern_fulton(&ideal_sum(&x, &y)?, derive_seed(seed, 3))?;
        Ok(vec![Side::new("fulton-product", cx.intersect(&cy)?, cxy.cap_tangent()).note(SPLAYED_HYPOTHESIS)])
    })
    .map(single)
}

/// An empty `Z` may be given as the unit ideal or as the zero ideal.
fn empty_as_unit(z: &HomogeneousIdeal) -> HomogeneousIdeal {
    if z.is_zero() {
        HomogeneousIdeal::unit(z.num_vars(), z.field())
    } else {
        z.clone()
    }
}

fn shat_over(z: &HomogeneousIdeal, d: i64, seed: u64) -> Result<Class> {
    Ok(segre_class(z, seed)?.s_hat().twist(d).line_series(d, -1))
}

/// `ŝ(W)⊗O(D₁+D₂)/(1+D₁+D₂)` against the product of `ŝ(Z_i)⊗O(D_i)/(1+D_i)`,
/// where `I_W = I_{D₁}·I_{Z₂} + I_{D₂}·I_{Z₁}`.
pub fn verify_segre_relation(
    d1: &SparsePolynomial,
    z1: &HomogeneousIdeal,
    d2: &SparsePolynomial,
    z2: &HomogeneousIdeal,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let z1 = empty_as_unit(z1);
    let z2 = empty_as_unit(z2);
    let h1 = HomogeneousIdeal::principal(d1.clone())?;
    let h2 = HomogeneousIdeal::principal(d2.clone())?;
    h1.same_ring(&z1)?;
    h1.same_ring(&h2)?;
    h1.same_ring(&z2)?;
    if h1.is_zero() || h2.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !ideal_contains(&z1, &h1)? {
        return Err(Error::Containment(format!("Z1 = {z1} does not lie in V({d1})")));
    }
    if !ideal_contains(&z2, &h2)? {
        return Err(Error::Containment(format!("Z2 = {z2} does not lie in V({d2})")));
    }
    let deg1 = d1.degree().unwrap() as i64;
    let deg2 = d2.degree().unwrap() as i64;
    run_trials(z1.field(), cfg, |field, seed| {
        let (h1, h2) = (h1.to_field(field)?, h2.to_field(field)?);
        let (z1, z2) = (z1.to_field(field)?, z2.to_field(field)?);
        let w = ideal_sum(&ideal_product(&h1, &z2)?, &ideal_product(&h2, &z1)?)?;
        let lhs = shat_over(&w, deg1 + deg2, derive_seed(seed, 1))?;
        let a = shat_over(&z1, deg1, derive_seed(seed, 2))?;
        let b = shat_over(&z2, deg2, derive_seed(seed, 3))?;
        Ok(vec![Side::new("segre-relation", lhs, a.intersect(&b)?).note(format!("W = {w}"))])
    })
    .map(single)
}

/// `s(Z₁∩Z₂)` against `s(Z₁)·s(Z₂)`, both pushed forward to `A_*P^n`.
pub fn verify_segre_multiplicativity(
    i1: &HomogeneousIdeal,
    i2: &HomogeneousIdeal,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    i1.same_ring(i2)?;
    run_trials(i1.field(), cfg, |field, seed| {
        let i1 = i1.to_field(field)?;
        let i2 = i2.to_field(field)?;
        let lhs = segre_class(&ideal_sum(&i1, &i2)?, derive_seed(seed, 1))?;
        let a = segre_class(&i1, derive_seed(seed, 2))?;
        let b = segre_class(&i2, derive_seed(seed, 3))?;
        Ok(vec![Side::new("segre-multiplicativity", lhs, a.intersect(&b)?)
            .note("compared after pushforward to the Chow group of P^n")
            .note(SPLAYED_HYPOTHESIS)])
    })
    .map(single)
}

/// Total Chern class of a smooth degree-`e` hypersurface, pushed to `P^n`.
pub fn smooth_hypersurface_class(n: usize, e: i64) -> Result<Class> {
    if e < 1 {
        return Err(Error::NonPositiveDegree(e));
    }
    if n == 0 {
        return Ok(Class::zero(0));
    }
    let x = Class::linear(n, n - 1).scale(&BigInt::from(e));
    Ok(x.line_series(1, n as i64 + 1).line_series(e, -1))
}

fn random_form(num_vars: usize, field: PrimeField, degree: u32, seed: u64) -> SparsePolynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms = monomials_of_degree(num_vars, degree)
        .into_iter()
        .map(|m| (m, field.random(&mut rng)));
    SparsePolynomial::from_terms(num_vars, field, terms)
}

/// A random smooth degree-`e` form meeting `Y` properly.
fn general_section(y: &HomogeneousIdeal, e: u32, seed: u64) -> Result<SparsePolynomial> {
    let dim_y = dim_degree(y)?.dim;
    for attempt in 0..MAX_ATTEMPTS {
        let x = random_form(y.num_vars(), y.field(), e, derive_seed(seed, attempt as u64));
        if x.is_zero() || dim_degree(&jacobian_ideal(&x)?)?.dim.is_some() {
            continue;
        }
        let cut = ideal_sum(y, &HomogeneousIdeal::principal(x.clone())?)?;
        if dim_degree(&cut)?.dim == dim_y.and_then(|d| d.checked_sub(1)) {
            return Ok(x);
        }
    }
    Err(Error::Degenerate {
        attempts: MAX_ATTEMPTS,
        what: format!("degree-{e} section singular or not meeting Y properly"),
    })
}

/// Bertini-type identities for a general degree-`e` hypersurface `X`:
/// `c(X)·c_SM(Y) = c(TP^n) ∩ c_SM(X∩Y)`, the same with `c_F`, and for
/// `e = 1` also `c_SM(X∩Y) = H/(1+H)·c_SM(Y)`.
pub fn verify_bertini(e: u32, y: &HomogeneousIdeal, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>> {
    if e < 1 {
        return Err(Error::NonPositiveDegree(e as i64));
    }
    if y.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = y.ambient_dim();
    let c_x = smooth_hypersurface_class(n, e as i64)?;
    run_trials(y.field(), cfg, |field, seed| {
        let y = y.to_field(field)?;
        let x = general_section(&y, e, derive_seed(seed, 0))?;
        let cut = ideal_sum(&y, &HomogeneousIdeal::principal(x.clone())?)?;
        let csm_y = csm(&y, derive_seed(seed, 1), cfg.max_gens)?;
        let csm_cut = csm(&cut, derive_seed(seed, 2), cfg.max_gens)?;
        let cf_y = chern_fulton(&y, derive_seed(seed, 3))?;
        let cf_cut = chern_fulton(&cut, derive_seed(seed, 4))?;
        let mut sides = vec![
            Side::new("bertini-csm", c_x.intersect(&csm_y)?, csm_cut.cap_tangent()),
            Side::new("bertini-fulton", c_x.intersect(&cf_y)?, cf_cut.cap_tangent()),
        ];
        if e == 1 {
            let h: Class = cartier_segre(n, 1)?;
            sides.push(Side::new("hyperplane-section", csm_cut, h.intersect(&csm_y)?));
        }
        Ok(sides)
    })
}

/// `c_SM(P^n∖D₁)·c_SM(P^n∖D₂)` against `c(TP^n) ∩ c_SM(P^n∖D)` with
/// `D = V(F₁F₂)`.
pub fn verify_complement(f1: &SparsePolynomial, f2: &SparsePolynomial, cfg: &VerifyConfig) -> Result<VerificationReport> {
    f1.same_ring(f2)?;
    for f in [f1, f2] {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
    }
    let n = f1.num_vars() - 1;
    run_trials(f1.field(), cfg, |field, seed| {
        let (g1, g2) = (f1.to_field(field), f2.to_field(field));
        let whole = Class::fundamental(n).cap_tangent();
        let u1 = &whole - &csm_hypersurface(&g1, derive_seed(seed, 1))?;
        let u2 = &whole - &csm_hypersurface(&g2, derive_seed(seed, 2))?;
        let u = &whole - &csm_hypersurface(&g1.mul(&g2), derive_seed(seed, 3))?;
        Ok(vec![Side::new("complement", u1.intersect(&u2)?, u.cap_tangent()).note(SPLAYED_HYPOTHESIS)])
    })
    .map(single)
}

/// Outcome of [`jacobian_splayed_test`].
#[derive(Clone, Debug)]
pub struct SplayedTest {
    /// Whether the two ideals agree after irrelevant saturation.
    pub equal: bool,
    /// Saturated `J(F₁F₂)`.
    pub jacobian: GroebnerBasis,
    /// Saturated `(F₁)·J(F₂) + (F₂)·J(F₁)`.
    pub leibniz: GroebnerBasis,
}

impl SplayedTest {
    pub const NOTE: &'static str =
        "algebraic proxy: equality of saturated ideals is not known to be equivalent to splayedness";
}

/// Compares `J(F₁F₂)` with `(F₁)·J(F₂) + (F₂)·J(F₁)` after saturation by
/// the irrelevant ideal. The first always lies in the second.
pub fn jacobian_splayed_test(f1: &SparsePolynomial, f2: &SparsePolynomial) -> Result<SplayedTest> {
    f1.same_ring(f2)?;
    let nv = f1.num_vars();
    let field = f1.field();
    let both = HomogeneousIdeal::new(nv, field, vec![f1.clone(), f2.clone()])?;
    if both.gens().len() < 2 {
        return Err(Error::ZeroPolynomial);
    }
    if dim_degree(&both)?.dim == Some(nv - 2) {
        return Err(Error::CommonFactor);
    }
    let left = jacobian_ideal(&f1.mul(f2))?;
    let p1 = HomogeneousIdeal::principal(f1.clone())?;
    let p2 = HomogeneousIdeal::principal(f2.clone())?;
    let right = ideal_sum(
        &ideal_product(&p1, &jacobian_ideal(f2)?)?,
        &ideal_product(&p2, &jacobian_ideal(f1)?)?,
    )?;
    if !ideal_contains(&right, &left)? {
        return Err(Error::Containment("J(F1*F2) is not inside the Leibniz ideal".into()));
    }
    let m = HomogeneousIdeal::irrelevant(nv, field);
    let left = saturate(&left, &m)?;
    let right = saturate(&right, &m)?;
    Ok(SplayedTest {
        equal: ideals_equal(&left, &right)?,
        jacobian: groebner_basis(&left, MonomialOrder::DegRevLex),
        leibniz: groebner_basis(&right, MonomialOrder::DegRevLex),
    })
}

/// For surfaces `V(F)`, `V(G)` in `P^3` of degrees `d`, `e`: compares
/// `χ(V(F,G))` with `e·a + d·b − 2de`, where `a`, `b` are the Euler
/// characteristics of general hyperplane sections of `V(F)`, `V(G)`.
/// Both sides are reported as multiples of `[P^0]`.
pub fn euler_surface_identity(f: &SparsePolynomial, g: &SparsePolynomial, cfg: &VerifyConfig) -> Result<VerificationReport> {
    f.same_ring(g)?;
    if f.num_vars() != 4 {
        return Err(Error::DimensionMismatch {
            left: f.num_vars() - 1,
            right: 3,
        });
    }
    for p in [f, g] {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        if p.is_constant() {
            return Err(Error::NonPositiveDegree(0));
        }
    }
    let d = f.degree().unwrap() as i64;
    let e = g.degree().unwrap() as i64;
    run_trials(f.field(), cfg, |field, seed| {
        let (f, g) = (f.to_field(field), g.to_field(field));
        let h: Class = cartier_segre(3, 1)?;
        let a = h.intersect(&csm_hypersurface(&f, derive_seed(seed, 1))?)?.euler_char();
        let b = h.intersect(&csm_hypersurface(&g, derive_seed(seed, 2))?)?.euler_char();
        let both = HomogeneousIdeal::new(4, field, vec![f, g])?;
        let chi = csm(&both, derive_seed(seed, 3), cfg.max_gens)?.euler_char();
        let formula = BigInt::from(e) * &a + BigInt::from(d) * &b - BigInt::from(2 * d * e);
        let point = |v: BigInt| Class::new(3, vec![v, 0.into(), 0.into(), 0.into()]);
        Ok(vec![Side::new("euler", point(chi)?, point(formula)?)
            .note(format!("d = {d}, e = {e}, a = {a}, b = {b}"))
            .note(SPLAYED_HYPOTHESIS)])
    })
    .map(single)
}
