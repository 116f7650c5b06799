//! Chern–Schwartz–MacPherson, Chern–Fulton and Milnor classes in `A_*P^n`.
//!
//! The CSM class of a hypersurface `D = V(F)` of degree `d` is
//!
//! ```text
//! c_SM(D) = c(TP^n) ∩ ( s(D) + (1 + dH)^{-1} ∩ (s(JD)^∨ ⊗ O(d)) )
//! ```
//!
//! with `JD` the singularity subscheme; a general `V(f_1, …, f_k)` is handled
//! by inclusion–exclusion over the unions `V(Π_{j∈S} f_j)`.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::chowring::cartier_segre;
use crate::error::{Error, Result};
use crate::polyring::{derive_seed, jacobian_ideal, HomogeneousIdeal, PrimeField, SparsePolynomial};
use crate::segre::segre_class;
use crate::Class;

/// Default guard on the number of generators fed to inclusion–exclusion.
pub const DEFAULT_MAX_GENS: usize = 12;

/// `φ = Σ a_i · 1_{V(F_i)}` for hypersurfaces `V(F_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructibleFunction {
    num_vars: usize,
    field: PrimeField,
    terms: Vec<(i64, SparsePolynomial)>,
}

impl ConstructibleFunction {
    pub fn new(num_vars: usize, field: PrimeField, terms: Vec<(i64, SparsePolynomial)>) -> Result<Self> {
        let probe = SparsePolynomial::zero(num_vars, field);
        for (_, f) in &terms {
            probe.same_ring(f)?;
            if f.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if !f.is_homogeneous() {
                return Err(Error::Inhomogeneous);
            }
        }
        Ok(Self {
            num_vars,
            field,
            terms,
        })
    }

    /// The indicator function of `V(f)`.
    pub fn indicator(f: SparsePolynomial) -> Result<Self> {
        Self::new(f.num_vars(), f.field(), vec![(1, f)])
    }

    pub fn zero(num_vars: usize, field: PrimeField) -> Self {
        Self {
            num_vars,
            field,
            terms: Vec::new(),
        }
    }

    pub fn terms(&self) -> &[(i64, SparsePolynomial)] {
        &self.terms
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Hypersurface equations reduced into another prime field.
    pub fn to_field(&self, field: PrimeField) -> Result<Self> {
        let terms = self.terms.iter().map(|(a, f)| (*a, f.to_field(field))).collect();
        Self::new(self.num_vars, field, terms)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(a, f)| (a * k, f.clone())).collect(),
            ..self.clone()
        }
    }
}

/// The singularity subscheme `JD = (∂_0 F, …, ∂_n F, F)`.
pub fn singularity_subscheme(f: &SparsePolynomial) -> Result<HomogeneousIdeal> {
    jacobian_ideal(f)
}

/// Drops `F` from `JD` when `d·F` lies in the span of the partials.
fn euler_reduced(jd: &HomogeneousIdeal, d: i64) -> Result<HomogeneousIdeal> {
    if d as u64 % jd.field().modulus() == 0 {
        return Ok(jd.clone());
    }
    let partials = &jd.gens()[..jd.gens().len() - 1];
    if partials.is_empty() {
        return Ok(jd.clone());
    }
    HomogeneousIdeal::new(jd.num_vars(), jd.field(), partials.to_vec())
}

/// CSM class of the hypersurface `V(F)`.
pub fn csm_hypersurface(f: &SparsePolynomial, seed: u64) -> Result<Class> {
    let jd = singularity_subscheme(f)?;
    let n = jd.ambient_dim();
    let d = f.degree().unwrap() as i64;
    if d == 0 {
        // nonzero constant: V(F) is empty
        return Ok(Class::zero(n));
    }
    let s_d: Class = cartier_segre(n, d)?;
    let s_jd = segre_class(&euler_reduced(&jd, d)?, seed)?;
    let correction = s_jd.dual().twist(d).line_series(d, -1);
    Ok((s_d + correction).cap_tangent())
}

/// CSM class of `V(I)` (its support) by inclusion–exclusion over the
/// literal generator list.
pub fn csm(ideal: &HomogeneousIdeal, seed: u64, max_gens: usize) -> Result<Class> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ambient_dim();
    if ideal.has_unit_generator() {
        return Ok(Class::zero(n));
    }
    let gens = ideal.gens();
    let k = gens.len();
    if k > max_gens {
        return Err(Error::TooManyGenerators { got: k, max: max_gens });
    }
    let parts = (1u64..(1 << k))
        .into_par_iter()
        .map(|mask| {
            let mut prod = SparsePolynomial::constant(ideal.num_vars(), ideal.field(), 1);
            for (j, g) in gens.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    prod = prod.mul(g);
                }
            }
            let c = csm_hypersurface(&prod, derive_seed(seed, mask))?;
            Ok(if mask.count_ones() % 2 == 1 { c } else { -c })
        })
        .collect::<Result<Vec<Class>>>()?;
    Ok(parts.into_iter().fold(Class::zero(n), |acc, c| acc + c))
}

/// `Σ a_i c_SM(V(F_i))`.
pub fn csm_constructible(phi: &ConstructibleFunction, seed: u64) -> Result<Class> {
    let n = phi.num_vars - 1;
    let mut acc = Class::zero(n);
    for (k, (a, f)) in phi.terms.iter().enumerate() {
        let c = csm_hypersurface(f, derive_seed(seed, k as u64))?;
        acc = acc + c.scale(&BigInt::from(*a));
    }
    Ok(acc)
}

/// `c_F(X) = c(TP^n) ∩ s(X, P^n)`.
pub fn chern_fulton(ideal: &HomogeneousIdeal, seed: u64) -> Result<Class> {
    Ok(segre_class(ideal, seed)?.cap_tangent())
}

/// `c_SM(X) - c_F(X)`.
pub fn milnor(ideal: &HomogeneousIdeal, seed: u64, max_gens: usize) -> Result<Class> {
    let a = csm(ideal, seed, max_gens)?;
    let b = chern_fulton(ideal, derive_seed(seed, u64::MAX))?;
    Ok(a - b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::dim_degree;
    use crate::polyring::parse_polynomial;

    fn fp() -> PrimeField {
        PrimeField::new(1_000_003).unwrap()
    }

    fn poly(s: &str, n: usize) -> SparsePolynomial {
        parse_polynomial(s, n, fp()).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> HomogeneousIdeal {
        HomogeneousIdeal::new(n + 1, fp(), gens.iter().map(|g| poly(g, n)).collect()).unwrap()
    }

    fn class(n: usize, v: &[i64]) -> Class {
        Class::from_i64s(n, v).unwrap()
    }

    #[test]
    fn singularity_subschemes() {
        let node = singularity_subscheme(&poly("x0*x1", 2)).unwrap();
        assert_eq!(dim_degree(&node).unwrap().dim, Some(0));
        assert_eq!(dim_degree(&node).unwrap().degree, 1);
        let smooth = singularity_subscheme(&poly("x0*x3-x1*x2", 3)).unwrap();
        assert_eq!(dim_degree(&smooth).unwrap().dim, None);
        let nodal = singularity_subscheme(&poly("x1^2*x2-x0^2*(x0+x2)", 2)).unwrap();
        let dd = dim_degree(&nodal).unwrap();
        assert_eq!((dd.dim, dd.degree), (Some(0), 1));
    }

    #[test]
    fn csm_of_hypersurfaces() {
        assert_eq!(csm_hypersurface(&poly("x0*x3-x1*x2", 3), 1).unwrap(), class(3, &[4, 4, 2, 0]));
        assert_eq!(csm_hypersurface(&poly("x3", 3), 1).unwrap(), class(3, &[3, 3, 1, 0]));
        assert_eq!(
            csm_hypersurface(&poly("x1^2+x2^2+x3^2", 3), 1).unwrap(),
            class(3, &[3, 4, 2, 0])
        );
        assert_eq!(
            csm_hypersurface(&poly("x1^2*x2-x0^2*(x0+x2)", 2), 1).unwrap(),
            class(2, &[1, 3, 0])
        );
    }

    #[test]
    fn csm_by_inclusion_exclusion() {
        assert_eq!(csm(&ideal(&["x0", "x1"], 2), 1, 12).unwrap(), class(2, &[1, 0, 0]));
        assert_eq!(csm(&ideal(&["x0", "x1"], 3), 1, 12).unwrap(), class(3, &[2, 1, 0, 0]));
        assert_eq!(
            csm(&ideal(&["x0", "x1"], 2), 1, 1),
            Err(Error::TooManyGenerators { got: 2, max: 1 })
        );
        assert_eq!(csm(&ideal(&[], 2), 1, 12), Err(Error::ZeroIdeal));
    }

    #[test]
    fn constructible_linearity() {
        let q = ConstructibleFunction::indicator(poly("x0*x3-x1*x2", 3)).unwrap();
        assert_eq!(csm_constructible(&q, 1).unwrap(), class(3, &[4, 4, 2, 0]));
        assert!(csm_constructible(&ConstructibleFunction::zero(3, fp()), 1).unwrap().is_zero());
        let phi = ConstructibleFunction::new(3, fp(), vec![(2, poly("x0", 2)), (-1, poly("x0*x1", 2))]).unwrap();
        assert_eq!(csm_constructible(&phi, 1).unwrap(), class(2, &[1, 0, 0]));
    }

    #[test]
    fn fulton_and_milnor() {
        let q = ideal(&["x0*x3-x1*x2"], 3);
        assert_eq!(chern_fulton(&q, 1).unwrap(), class(3, &[4, 4, 2, 0]));
        assert!(milnor(&q, 1, 12).unwrap().is_zero());
        let nodal = ideal(&["x1^2*x2-x0^2*(x0+x2)"], 2);
        assert_eq!(milnor(&nodal, 1, 12).unwrap(), class(2, &[1, 0, 0]));
        let cone = ideal(&["x1^2+x2^2+x3^2"], 3);
        assert_eq!(milnor(&cone, 1, 12).unwrap(), class(3, &[-1, 0, 0, 0]));
    }

    #[test]
    fn support_dependence_and_scheme_sensitivity() {
        let f = ideal(&["x0*x1 - x2^2"], 2);
        let f2 = ideal(&["(x0*x1 - x2^2)^2"], 2);
        assert_eq!(csm(&f, 3, 12).unwrap(), csm(&f2, 3, 12).unwrap());
        assert_ne!(
            chern_fulton(&ideal(&["x0"], 2), 1).unwrap(),
            chern_fulton(&ideal(&["x0^2"], 2), 1).unwrap()
        );
    }
}
