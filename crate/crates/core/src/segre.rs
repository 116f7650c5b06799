//! Segre classes `ι_* s(Z, P^n)` from projective degrees.
//!
//! For an ideal generated in a single degree `d`, let `g_i` be the degree of
//! the preimage of a general codimension-`i` linear space under the rational
//! map given by the generators, cut with a general `P^i`. Resolving the map
//! and writing the exceptional divisor as `E = dH - L` gives
//!
//! ```text
//! s(Z, P^n) = [P^n] - Σ_i g_i H^i (1 + dH)^{-(i+1)} ∩ [P^n]
//! ```
//!
//! since `1/(1+E) = Σ_i L^i / (1+dH)^{i+1}` and `L^i` pushes forward to
//! `g_i H^i`.
//!
//! Each `g_i` is computed on a random `P^i ⊂ P^n` in an affine chart: `i`
//! random combinations of the generators, plus `1 - t·f` for a random
//! element `f` of the ideal, whose solutions are exactly the points off the
//! base locus. The count of standard monomials of that zero-dimensional
//! system is `g_i`. [`projective_degrees_by_saturation`] computes the same
//! numbers the long way (explicit saturation and Hilbert polynomial) and is
//! used to cross-check.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{
    dim_degree, groebner_basis_of, saturate, standard_monomial_count, MonomialOrder,
};
use crate::polyring::{
    derive_seed, random_linear_forms, random_matrix, HomogeneousIdeal, Monomial, PrimeField,
    SparsePolynomial,
};
use crate::Class;

/// Maximum number of random re-draws per projective degree.
pub const MAX_ATTEMPTS: usize = 5;

/// `g_0 … g_n` for an equal-degree generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveDegrees {
    pub g: Vec<u64>,
    pub d: u32,
    pub seed: u64,
    pub prime: u64,
}

/// All monomials of degree `k` in `num_vars` variables.
pub fn monomials_of_degree(num_vars: usize, k: u32) -> Vec<Monomial> {
    fn rec(var: usize, num_vars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == num_vars {
            cur.push(left);
            out.push(Monomial::from_exponents(cur).unwrap());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(var + 1, num_vars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars > 0 {
        rec(0, num_vars, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Replaces each generator `f` by the products `f·x_j^{d - deg f}`, where `d`
/// is the largest generator degree. The result generates an ideal with the
/// same saturation, hence the same subscheme.
pub fn equalize(ideal: &HomogeneousIdeal) -> Result<(Vec<SparsePolynomial>, u32)> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let d = ideal.gens().iter().filter_map(|g| g.degree()).max().unwrap();
    let mut out = Vec::new();
    for g in ideal.gens() {
        let k = d - g.degree().unwrap();
        if k == 0 {
            out.push(g.clone());
            continue;
        }
        for j in 0..ideal.num_vars() {
            let mut e = vec![0u32; ideal.num_vars()];
            e[j] = k;
            out.push(g.mul_term(&Monomial::from_exponents(&e)?, 1));
        }
    }
    Ok((out, d))
}

fn random_combination(gens: &[SparsePolynomial], field: PrimeField, rng: &mut ChaCha8Rng) -> SparsePolynomial {
    let coeffs = random_matrix(1, gens.len(), field, rng).remove(0);
    let mut acc = SparsePolynomial::zero(gens[0].num_vars(), field);
    for (g, c) in gens.iter().zip(coeffs) {
        acc = acc.add(&g.scale(c));
    }
    acc
}

/// `g_i` on a random `P^i`; `Ok(None)` signals a degenerate draw.
fn projective_degree_once(gens: &[SparsePolynomial], i: usize, seed: u64) -> Option<u64> {
    let field = gens[0].field();
    let nvars = gens[0].num_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut system: Vec<SparsePolynomial> = (0..i).map(|_| random_combination(gens, field, &mut rng)).collect();
    let f = random_combination(gens, field, &mut rng);

    // Affine chart y0 = 1 of a random P^i: x_k = A[k][0] + Σ_{j≥1} A[k][j] y_j,
    // with y_1..y_i stored as variables 0..i-1 and t as variable i.
    let ring = i + 1;
    let a = random_matrix(nvars, i + 1, field, &mut rng);
    let images: Vec<SparsePolynomial> = a
        .iter()
        .map(|row| {
            let mut terms = vec![(Monomial::one(), row[0])];
            terms.extend((1..=i).map(|j| (Monomial::var(j - 1), row[j])));
            SparsePolynomial::from_terms(ring, field, terms)
        })
        .collect();
    for p in system.iter_mut() {
        *p = p.substitute(&images);
    }
    let f = f.substitute(&images);
    let t = SparsePolynomial::var(ring, field, i);
    system.push(SparsePolynomial::constant(ring, field, 1).sub(&t.mul(&f)));
    let basis = groebner_basis_of(ring, field, &system, MonomialOrder::DegRevLex);
    standard_monomial_count(basis.leading_monomials(), ring)
}

/// Projective degrees of the map given by equal-degree generators.
///
/// The `n+1` degrees are independent and computed in parallel; degree `i`
/// uses the sub-seed `derive_seed(seed, i)` and, on its `a`-th re-draw,
/// `derive_seed(derive_seed(seed, i), a)`.
pub fn projective_degrees(gens: &[SparsePolynomial], d: u32, seed: u64) -> Result<ProjectiveDegrees> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroIdeal);
    };
    if gens.iter().any(|g| !g.is_homogeneous() || g.degree() != Some(d)) {
        return Err(Error::Inhomogeneous);
    }
    let n = first.num_vars() - 1;
    let g = (0..=n)
        .into_par_iter()
        .map(|i| {
            let base = derive_seed(seed, i as u64);
            for attempt in 0..MAX_ATTEMPTS {
                if let Some(v) = projective_degree_once(gens, i, derive_seed(base, attempt as u64)) {
                    return Ok(v);
                }
            }
            Err(Error::Degenerate {
                attempts: MAX_ATTEMPTS,
                what: format!("projective degree g_{i} stayed positive-dimensional"),
            })
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(ProjectiveDegrees {
        g,
        d,
        seed,
        prime: first.prime(),
    })
}

/// The same degrees computed literally: `J_i` = `i` random combinations
/// plus `n - i` random linear forms, `g_i = deg (J_i : I^∞)`.
pub fn projective_degrees_by_saturation(
    ideal: &HomogeneousIdeal,
    gens: &[SparsePolynomial],
    d: u32,
    seed: u64,
) -> Result<ProjectiveDegrees> {
    let field = ideal.field();
    let nvars = ideal.num_vars();
    let n = nvars - 1;
    let mut g = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let base = derive_seed(seed, i as u64);
        let mut value = None;
        for attempt in 0..MAX_ATTEMPTS {
            let s = derive_seed(base, attempt as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let mut j: Vec<SparsePolynomial> = (0..i).map(|_| random_combination(gens, field, &mut rng)).collect();
            j.extend(random_linear_forms(n - i, n, field, s));
            let ji = HomogeneousIdeal::new(nvars, field, j)?;
            let sat = saturate(&ji, ideal)?;
            let dd = dim_degree(&sat)?;
            match dd.dim {
                None => {
                    value = Some(0);
                    break;
                }
                Some(0) => {
                    value = Some(dd.degree);
                    break;
                }
                Some(_) => continue,
            }
        }
        g.push(value.ok_or_else(|| Error::Degenerate {
            attempts: MAX_ATTEMPTS,
            what: format!("saturated J_{i} stayed positive-dimensional"),
        })?);
    }
    Ok(ProjectiveDegrees {
        g,
        d,
        seed,
        prime: field.modulus(),
    })
}

/// `[P^n] - Σ g_i H^i (1 + dH)^{-(i+1)}`.
pub fn segre_from_projective_degrees(n: usize, pd: &ProjectiveDegrees) -> Class {
    let mut acc = Class::fundamental(n);
    for (i, &gi) in pd.g.iter().enumerate() {
        if gi == 0 {
            continue;
        }
        let term = Class::linear(n, n - i)
            .scale(&gi.into())
            .line_series(pd.d as i64, -(i as i64 + 1));
        acc = acc - term;
    }
    acc
}

/// `ι_* s(Z, P^n)` for the subscheme `Z` defined by `ideal`; the zero class
/// when `Z` is empty.
pub fn segre_class(ideal: &HomogeneousIdeal, seed: u64) -> Result<Class> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ambient_dim();
    if dim_degree(ideal)?.dim.is_none() {
        return Ok(Class::zero(n));
    }
    let (gens, d) = equalize(ideal)?;
    let pd = projective_degrees(&gens, d, seed)?;
    Ok(segre_from_projective_degrees(n, &pd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn fp() -> PrimeField {
        PrimeField::new(1_000_003).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> HomogeneousIdeal {
        HomogeneousIdeal::new(
            n + 1,
            fp(),
            gens.iter().map(|g| parse_polynomial(g, n, fp()).unwrap()).collect(),
        )
        .unwrap()
    }

    fn class(n: usize, v: &[i64]) -> Class {
        Class::from_i64s(n, v).unwrap()
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(6, 6).len(), 462);
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
    }

    #[test]
    fn equalize_examples() {
        let (g, d) = equalize(&ideal(&["x0", "x1^2"], 2)).unwrap();
        assert_eq!(d, 2);
        let mut s: Vec<String> = g.iter().map(|p| p.to_string()).collect();
        s.sort();
        assert_eq!(s, vec!["x0*x1", "x0*x2", "x0^2", "x1^2"]);
        let q = ideal(&["x3^2+x4^2+x5^2"], 5);
        assert_eq!(equalize(&q).unwrap(), (q.gens().to_vec(), 2));
        let l = ideal(&["x0", "x1"], 2);
        assert_eq!(equalize(&l).unwrap(), (l.gens().to_vec(), 1));
        assert_eq!(equalize(&ideal(&[], 2)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn projective_degrees_examples() {
        let i = ideal(&["x0", "x1"], 2);
        assert_eq!(projective_degrees(i.gens(), 1, 3).unwrap().g, vec![1, 1, 0]);
        let i = ideal(&["x0", "x1"], 3);
        assert_eq!(projective_degrees(i.gens(), 1, 3).unwrap().g, vec![1, 1, 0, 0]);
        let f = ideal(&["x0^3 + x1*x2*x3 - x2^3"], 3);
        assert_eq!(projective_degrees(f.gens(), 3, 3).unwrap().g, vec![1, 0, 0, 0]);
    }

    #[test]
    fn segre_examples() {
        assert_eq!(segre_class(&ideal(&["x0"], 2), 1).unwrap(), class(2, &[-1, 1, 0]));
        assert_eq!(segre_class(&ideal(&["x0", "x1"], 2), 1).unwrap(), class(2, &[1, 0, 0]));
        assert_eq!(
            segre_class(&ideal(&["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"], 3), 1).unwrap(),
            class(3, &[-10, 3, 0, 0])
        );
        assert_eq!(
            segre_class(&ideal(&["x1^2+x2^2+x3^2"], 3), 1).unwrap(),
            class(3, &[8, -4, 2, 0])
        );
    }

    #[test]
    fn empty_scheme_has_zero_class() {
        assert!(segre_class(&ideal(&["x0", "x1", "x2"], 2), 1).unwrap().is_zero());
        let unit = HomogeneousIdeal::unit(4, fp());
        assert!(segre_class(&unit, 1).unwrap().is_zero());
        assert_eq!(segre_class(&ideal(&[], 2), 1), Err(Error::ZeroIdeal));
    }

    #[test]
    fn fast_route_matches_saturation_route() {
        for (gens, n) in [
            (vec!["x0", "x1"], 2),
            (vec!["x0*x1", "x0*x2"], 3),
            (vec!["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"], 3),
            (vec!["x0^2", "x0*x1"], 2),
        ] {
            let i = ideal(&gens, n);
            let (g, d) = equalize(&i).unwrap();
            let fast = projective_degrees(&g, d, 11).unwrap();
            let slow = projective_degrees_by_saturation(&i, &g, d, 11).unwrap();
            assert_eq!(fast.g, slow.g, "ideal {i}");
        }
    }
}
