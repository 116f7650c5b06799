//! The Chow group of projective space, `A_*P^n = Z[H]/(H^{n+1})`.
//!
//! A class is stored by dimension: `coeffs[i]` is the coefficient of the
//! class `[P^i]` of an `i`-dimensional linear subspace. Multiplying by the
//! hyperplane class `H` lowers dimension by one, so `H^k ∩ [P^i] = [P^{i-k}]`.
//!
//! Coefficients are generic over [`ClassScalar`]; the crate root exposes
//! [`crate::Class`] (arbitrary precision) as the type used by the pipeline.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, Signed};

use crate::error::{Error, Result};

/// Integer scalar usable as a Chow-class coefficient.
pub trait ClassScalar:
    Clone + Num + Signed + FromPrimitive + fmt::Display + fmt::Debug + Send + Sync
{
}

impl<T> ClassScalar for T where
    T: Clone + Num + Signed + FromPrimitive + fmt::Display + fmt::Debug + Send + Sync
{
}

fn scalar<T: ClassScalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent an i64")
}

/// Element of `A_*P^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChowClass<T = BigInt> {
    ambient_dim: usize,
    coeffs: Vec<T>,
}

impl<T: ClassScalar> ChowClass<T> {
    pub fn new(ambient_dim: usize, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != ambient_dim + 1 {
            return Err(Error::CoefficientCount {
                ambient: ambient_dim,
                expected: ambient_dim + 1,
                got: coeffs.len(),
            });
        }
        Ok(Self {
            ambient_dim,
            coeffs,
        })
    }

    /// Builds a class from machine integers, `coeffs[i]` multiplying `[P^i]`.
    pub fn from_i64s(ambient_dim: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(ambient_dim, coeffs.iter().map(|&c| scalar(c)).collect())
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            coeffs: vec![T::zero(); ambient_dim + 1],
        }
    }

    /// `[P^dim]`.
    pub fn linear(ambient_dim: usize, dim: usize) -> Self {
        assert!(dim <= ambient_dim, "[P^{dim}] does not live in P^{ambient_dim}");
        let mut c = Self::zero(ambient_dim);
        c.coeffs[dim] = T::one();
        c
    }

    /// The fundamental class `[P^n]`, unit of the intersection product.
    pub fn fundamental(ambient_dim: usize) -> Self {
        Self::linear(ambient_dim, ambient_dim)
    }

    pub fn point(ambient_dim: usize) -> Self {
        Self::linear(ambient_dim, 0)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `[P^dim]`.
    pub fn coeff(&self, dim: usize) -> &T {
        &self.coeffs[dim]
    }

    /// Coefficient of the codimension-`k` part, i.e. of `H^k ∩ [P^n]`.
    pub fn codim_coeff(&self, k: usize) -> &T {
        &self.coeffs[self.ambient_dim - k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Intersection product: `[P^i]·[P^j] = [P^{i+j-n}]`, zero when `i + j < n`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.ambient_dim;
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= n && !b.is_zero() {
                    let k = i + j - n;
                    out.coeffs[k] = out.coeffs[k].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    /// Caps with the polynomial `Σ_j series[j] H^j`.
    fn cap_series(&self, series: &[T]) -> Self {
        let n = self.ambient_dim;
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, s) in series.iter().enumerate().take(i + 1) {
                out.coeffs[i - j] = out.coeffs[i - j].clone() + a.clone() * s.clone();
            }
        }
        out
    }

    /// `A · (1 + dH)^k`, truncated at `H^{n+1}`. Negative `k` uses the
    /// binomial series, which has integer coefficients.
    pub fn line_series(&self, d: i64, k: i64) -> Self {
        self.cap_series(&power_series(self.ambient_dim, d, k))
    }

    /// `c(TP^n) ∩ A = (1 + H)^{n+1} ∩ A`.
    pub fn cap_tangent(&self) -> Self {
        self.line_series(1, self.ambient_dim as i64 + 1)
    }

    /// `A ⊗ O(d)`: the codimension-`i` part is divided by `(1 + dH)^i`.
    pub fn twist(&self, d: i64) -> Self {
        let n = self.ambient_dim;
        let mut out = Self::zero(n);
        for codim in 0..=n {
            let a = self.codim_coeff(codim);
            if a.is_zero() {
                continue;
            }
            let part = Self::linear(n, n - codim).scale(a);
            out += &part.line_series(d, -(codim as i64));
        }
        out
    }

    /// Flips the sign of every odd-codimension component.
    pub fn dual(&self) -> Self {
        let n = self.ambient_dim;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (n - i) % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        Self {
            ambient_dim: n,
            coeffs,
        }
    }

    /// `[P^n] - S^∨`.
    pub fn s_hat(&self) -> Self {
        Self::fundamental(self.ambient_dim) - self.dual()
    }

    /// Degree-zero coefficient; for a CSM class this is the Euler characteristic.
    pub fn euler_char(&self) -> T {
        self.coeffs[0].clone()
    }

    pub fn scale(&self, k: &T) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.clone() + other.clone())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.clone() - other.clone())
    }
}

/// Coefficients of `(1 + dH)^k` up to `H^n`.
fn power_series<T: ClassScalar>(n: usize, d: i64, k: i64) -> Vec<T> {
    let d: T = scalar(d);
    let k: T = scalar(k);
    let mut out = Vec::with_capacity(n + 1);
    let mut c = T::one();
    out.push(c.clone());
    for j in 0..n {
        let jj: T = scalar(j as i64);
        let num = c * (k.clone() - jj.clone());
        let den = jj + T::one();
        assert!(
            (num.clone() % den.clone()).is_zero(),
            "binomial series left the integers"
        );
        c = num / den * d.clone();
        out.push(c.clone());
    }
    out
}

/// Segre class of a degree-`d` hypersurface: `dH/(1 + dH) ∩ [P^n]`.
pub fn cartier_segre<T: ClassScalar>(n: usize, d: i64) -> Result<ChowClass<T>> {
    if d <= 0 {
        return Err(Error::NonPositiveDegree(d));
    }
    let mut out = ChowClass::zero(n);
    let mut pow: T = T::one();
    for k in 1..=n {
        pow = pow * scalar(d);
        out.coeffs[n - k] = if k % 2 == 1 { pow.clone() } else { -pow.clone() };
    }
    Ok(out)
}

impl<T: ClassScalar> Add for ChowClass<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<T: ClassScalar> AddAssign<&ChowClass<T>> for ChowClass<T> {
    fn add_assign(&mut self, rhs: &Self) {
        assert_eq!(self.ambient_dim, rhs.ambient_dim, "ambient dimension mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b.clone();
        }
    }
}

impl<T: ClassScalar> Sub for ChowClass<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: ClassScalar> Sub for &ChowClass<T> {
    type Output = ChowClass<T>;
    fn sub(self, rhs: Self) -> ChowClass<T> {
        self.clone() - rhs.clone()
    }
}

impl<T: ClassScalar> Neg for ChowClass<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: ClassScalar> Mul for &ChowClass<T> {
    type Output = ChowClass<T>;
    fn mul(self, rhs: Self) -> ChowClass<T> {
        self.intersect(rhs).expect("ambient dimension mismatch")
    }
}

impl<T: ClassScalar> fmt::Display for ChowClass<T> {
    /// Renders `a[P^i] + b[P^j] - …` in descending dimension; the zero class is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..=self.ambient_dim).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}[P^{}]", c.abs(), i)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: ClassScalar> fmt::Debug for ChowClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChowClass(n={}, {})", self.ambient_dim, self)
    }
}

impl<T: ClassScalar> ChowClass<T> {
    /// `{"n":…,"coeffs":[…]}` with `coeffs[i]` multiplying `[P^i]`.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let num: serde_json::Number = c.to_string().parse().expect("integer literal");
                serde_json::Value::Number(num)
            })
            .collect();
        serde_json::json!({ "n": self.ambient_dim, "coeffs": serde_json::Value::Array(coeffs) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = ChowClass<i64>;

    fn c(n: usize, v: &[i64]) -> C {
        C::from_i64s(n, v).unwrap()
    }

    #[test]
    fn intersect_quadric_with_plane() {
        let q = c(3, &[4, 4, 2, 0]);
        let p = c(3, &[3, 3, 1, 0]);
        assert_eq!(q.intersect(&p).unwrap(), c(3, &[10, 2, 0, 0]));
    }

    #[test]
    fn intersect_truncates() {
        assert_eq!(
            C::linear(3, 2).intersect(&C::linear(3, 2)).unwrap(),
            C::linear(3, 1)
        );
        assert!(C::point(3).intersect(&C::linear(3, 2)).unwrap().is_zero());
    }

    #[test]
    fn intersect_rejects_mixed_ambient() {
        assert_eq!(
            C::point(2).intersect(&C::point(3)),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn new_checks_length() {
        assert!(C::new(3, vec![1, 2]).is_err());
    }

    #[test]
    fn line_series_examples() {
        assert_eq!(C::fundamental(3).line_series(1, 4), c(3, &[4, 6, 4, 1]));
        assert_eq!(C::fundamental(2).line_series(2, -1), c(2, &[4, -2, 1]));
        let a = c(4, &[3, -1, 7, 0, 2]);
        assert_eq!(a.line_series(5, 0), a);
        assert_eq!(a.line_series(3, 4).line_series(3, -4), a);
    }

    #[test]
    fn cap_tangent_examples() {
        assert_eq!(c(3, &[3, 2, 0, 0]).cap_tangent(), c(3, &[11, 2, 0, 0]));
        assert_eq!(C::point(2).cap_tangent(), C::point(2));
        assert_eq!(C::fundamental(1).cap_tangent(), c(1, &[2, 1]));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(c(3, &[3, 2, 0, 0]).twist(1), c(3, &[-1, 2, 0, 0]));
        let a = c(3, &[5, -2, 7, 1]);
        assert_eq!(a.twist(0), a);
        // [P^1] has codimension 2: 1/(1+H)^2 then 1/(1+2H)^2 against 1/(1+3H)^2.
        assert_eq!(C::linear(3, 1).twist(1).twist(2), c(3, &[-6, 1, 0, 0]));
        assert_eq!(C::linear(3, 1).twist(3), c(3, &[-6, 1, 0, 0]));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(c(3, &[3, 2, 0, 0]).dual(), c(3, &[-3, 2, 0, 0]));
        assert_eq!(C::fundamental(2).dual(), C::fundamental(2));
        let a = c(3, &[-7, 0, 5, 0]);
        assert_eq!(a.dual().dual(), a);
    }

    #[test]
    fn cartier_segre_examples() {
        assert_eq!(cartier_segre::<i64>(2, 1).unwrap(), c(2, &[-1, 1, 0]));
        assert_eq!(cartier_segre::<i64>(3, 2).unwrap(), c(3, &[8, -4, 2, 0]));
        assert_eq!(cartier_segre::<i64>(3, 3).unwrap(), c(3, &[27, -9, 3, 0]));
        assert_eq!(
            cartier_segre::<i64>(3, 0),
            Err(Error::NonPositiveDegree(0))
        );
    }

    #[test]
    fn cartier_segre_is_geometric_series() {
        for n in 1..6 {
            for d in 1..4 {
                let hyper = C::linear(n, n - 1).scale(&d);
                assert_eq!(
                    cartier_segre::<i64>(n, d).unwrap(),
                    hyper.line_series(d, -1)
                );
            }
        }
    }

    #[test]
    fn s_hat_examples() {
        assert_eq!(C::zero(4).s_hat(), C::fundamental(4));
        assert_eq!(C::point(2).s_hat(), c(2, &[-1, 0, 1]));
        assert_eq!(c(3, &[-6, 2, 0, 0]).s_hat(), c(3, &[-6, -2, 0, 1]));
    }

    #[test]
    fn euler_char_reads_degree_zero() {
        assert_eq!(c(5, &[5, 9, 8, 2, 0, 0]).euler_char(), 5);
        assert_eq!(C::point(3).euler_char(), 1);
        assert_eq!(c(3, &[3, 2, 0, 0]).euler_char(), 3);
    }

    #[test]
    fn display_and_json() {
        let a = c(3, &[219, 87, 20, 2]);
        assert_eq!(a.to_string(), "2[P^3] + 20[P^2] + 87[P^1] + 219[P^0]");
        assert_eq!(c(3, &[-6, 2, 0, 0]).to_string(), "2[P^1] - 6[P^0]");
        assert_eq!(c(2, &[-1, 0, 0]).to_string(), "-1[P^0]");
        assert_eq!(C::zero(2).to_string(), "0");
        assert_eq!(
            C::point(3).to_json().to_string(),
            r#"{"n":3,"coeffs":[1,0,0,0]}"#
        );
    }

    #[test]
    fn bigint_matches_i64() {
        let a = ChowClass::<BigInt>::from_i64s(4, &[1, -2, 3, 0, 1]).unwrap();
        let b = c(4, &[1, -2, 3, 0, 1]);
        assert_eq!(a.twist(2).to_string(), b.twist(2).to_string());
        assert_eq!(a.cap_tangent().to_string(), b.cap_tangent().to_string());
    }
}
