//! Sparse multivariate polynomials over a prime field `F_p`.
//!
//! Terms are kept sorted in descending graded reverse lexicographic order,
//! which is the canonical form used for equality and printing. Term orders
//! used by Gröbner computations live in [`crate::groebner`].

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest supported number of variables (including auxiliary ones).
pub const MAX_VARS: usize = 16;

/// Exponent vector with a cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Self {
            deg: 0,
            exps: [0; MAX_VARS],
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            m.deg += e;
        }
        Ok(m)
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    /// Product; panics on exponent overflow.
    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .ok_or(Error::ExponentOverflow)?;
        }
        out.deg = self.deg + other.deg;
        Ok(out)
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Self) -> Self {
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        out
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = Self::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut out = Self::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            out.deg += out.exps[i] as u32;
        }
        out
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Degree restricted to the variables `vars`.
    pub fn partial_degree(&self, vars: std::ops::Range<usize>) -> u32 {
        self.exps[vars].iter().map(|&e| e as u32).sum()
    }

    /// Graded reverse lexicographic comparison.
    #[inline]
    pub fn cmp_grevlex(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => {}
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    fn fmt_vars(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return write!(f, "1");
        }
        self.fmt_vars(f)
    }
}

/// Arithmetic in `Z/pZ`; elements are canonical representatives in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric representative, for printing.
    pub fn to_signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn random(&self, rng: &mut impl Rng) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    'outer: for &w in &WITNESSES {
        let mut x = powmod(w, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// A prime drawn uniformly from `[2^30, 2^31)`, deterministic in `seed`.
pub fn random_prime(seed: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 0x5052_494d_45));
    loop {
        let c = rng.gen_range((1u64 << 30)..(1u64 << 31)) | 1;
        if is_prime(c) {
            return c;
        }
    }
}

/// SplitMix64 finalizer applied to `seed ^ rotl(tag)`; the fixed rule used
/// everywhere a sub-seed is derived.
pub fn derive_seed(seed: u64, tag: u64) -> u64 {
    let mut z = seed ^ tag.rotate_left(29) ^ 0x9e37_79b9_7f4a_7c15;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Polynomial in `num_vars` variables over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    num_vars: usize,
    field: PrimeField,
    /// Nonzero terms, strictly descending in grevlex.
    terms: Vec<(Monomial, u64)>,
}

impl SparsePolynomial {
    pub fn zero(num_vars: usize, field: PrimeField) -> Self {
        assert!(num_vars <= MAX_VARS, "too many variables");
        Self {
            num_vars,
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(num_vars: usize, field: PrimeField, c: i64) -> Self {
        let mut p = Self::zero(num_vars, field);
        let c = field.from_i64(c);
        if c != 0 {
            p.terms.push((Monomial::one(), c));
        }
        p
    }

    pub fn var(num_vars: usize, field: PrimeField, i: usize) -> Self {
        assert!(i < num_vars, "variable x{i} out of range");
        let mut p = Self::zero(num_vars, field);
        p.terms.push((Monomial::var(i), 1));
        p
    }

    /// Builds a polynomial from arbitrary `(monomial, coefficient)` pairs,
    /// combining duplicates and dropping zeros.
    pub fn from_terms(
        num_vars: usize,
        field: PrimeField,
        terms: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Self {
        let mut v: Vec<(Monomial, u64)> = terms
            .into_iter()
            .map(|(m, c)| (m, c % field.modulus()))
            .collect();
        v.sort_by(|a, b| b.0.cmp_grevlex(&a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Self {
            num_vars,
            field,
            terms: out,
        }
    }

    /// Terms already strictly descending in grevlex with nonzero coefficients.
    pub(crate) fn from_sorted_terms(
        num_vars: usize,
        field: PrimeField,
        terms: Vec<(Monomial, u64)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.cmp_grevlex(&w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Self {
            num_vars,
            field,
            terms,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn same_ring(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars || self.field != other.field {
            return Err(Error::RingMismatch {
                left_vars: self.num_vars,
                left_prime: self.prime(),
                right_vars: other.num_vars,
                right_prime: other.prime(),
            });
        }
        Ok(())
    }

    fn assert_same_ring(&self, other: &Self) {
        if let Err(e) = self.same_ring(other) {
            panic!("{e}");
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp_grevlex(&b.0) {
                Ordering::Greater => {
                    out.push(*a);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(*b);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a.1, b.1);
                    if c != 0 {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Self::from_sorted_terms(self.num_vars, f, out)
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        Self {
            terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        let c = c % f.modulus();
        if c == 0 {
            return Self::zero(self.num_vars, f);
        }
        Self {
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
            ..self.clone()
        }
    }

    /// Multiplies by the term `c·m`; grevlex is a monomial order so sorting is preserved.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Self {
        let f = self.field;
        if c % f.modulus() == 0 {
            return Self::zero(self.num_vars, f);
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
            ..self.clone()
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut acc = Self::zero(self.num_vars, self.field);
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m, c) in &small.terms {
            acc = acc.add(&big.mul_term(m, *c));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::constant(self.num_vars, self.field, 1);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Formal partial derivative with respect to `x_var`.
    pub fn derivative(&self, var: usize) -> Self {
        let f = self.field;
        let terms = self.terms.iter().filter_map(|&(m, c)| {
            let e = m.exp(var);
            if e == 0 {
                return None;
            }
            let mut q = m;
            q.exps[var] -= 1;
            q.deg -= 1;
            Some((q, f.mul(c, e as u64 % f.modulus())))
        });
        Self::from_terms(self.num_vars, f, terms)
    }

    /// Substitutes `x_i ↦ images[i]`.
    pub fn substitute(&self, images: &[SparsePolynomial]) -> Self {
        assert_eq!(images.len(), self.num_vars, "one image per variable");
        let target = &images[0];
        let mut acc = Self::zero(target.num_vars, target.field);
        // powers[i][e] = images[i]^e, built lazily
        let mut powers: Vec<Vec<SparsePolynomial>> = images
            .iter()
            .map(|p| vec![Self::constant(p.num_vars, p.field, 1)])
            .collect();
        for (m, c) in &self.terms {
            let mut t = Self::constant(target.num_vars, target.field, 1).scale(*c);
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().mul(&images[i]);
                    pw.push(next);
                }
                if e > 0 {
                    t = t.mul(&pw[e]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Same polynomial viewed in a ring with `num_vars` variables (the
    /// extra variables unused).
    pub fn with_num_vars(&self, num_vars: usize) -> Self {
        assert!(num_vars <= MAX_VARS);
        assert!(
            self.terms
                .iter()
                .all(|(m, _)| (num_vars..MAX_VARS).all(|i| m.exp(i) == 0)),
            "polynomial uses variables beyond the target ring"
        );
        Self {
            num_vars,
            ..self.clone()
        }
    }

    /// Reduction into another prime field through symmetric representatives,
    /// so small integer coefficients survive unchanged.
    pub fn to_field(&self, field: PrimeField) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, field.from_i64(self.field.to_signed(*c))))
            .filter(|&(_, c)| c != 0)
            .collect();
        Self::from_sorted_terms(self.num_vars, field, terms)
    }

    /// Makes the leading grevlex coefficient one.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, c)) => self.scale(self.field.inv(c)),
        }
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let c = self.field.to_signed(*c);
            let (neg, a) = (c < 0, c.unsigned_abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else {
                if a != 1 {
                    write!(f, "{a}*")?;
                }
                m.fmt_vars(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses an expression in `x0..x{n}` with `+ - * ^`, integer literals and
/// parentheses.
pub fn parse_polynomial(text: &str, n: usize, field: PrimeField) -> Result<SparsePolynomial> {
    let nvars = n + 1;
    if nvars > MAX_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        nvars,
        field,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
    field: PrimeField,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<SparsePolynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePolynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<SparsePolynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            if e > u16::MAX as u32 {
                return Err(Error::ExponentOverflow);
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::Parse {
                column: start + 1,
                message: "integer literal too large".into(),
            })
    }

    fn atom(&mut self) -> Result<SparsePolynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            Some(b'x') => {
                let start = self.pos;
                self.pos += 1;
                let idx = self.integer().map_err(|_| Error::Parse {
                    column: start + 1,
                    message: "expected variable index after 'x'".into(),
                })?;
                if idx as usize >= self.nvars {
                    return Err(Error::Parse {
                        column: start + 1,
                        message: format!("unknown variable x{idx}"),
                    });
                }
                Ok(SparsePolynomial::var(self.nvars, self.field, idx as usize))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let v = (v % self.field.modulus()) as i64;
                Ok(SparsePolynomial::constant(self.nvars, self.field, v))
            }
            Some(c) => Err(self.err(&format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Ideal generated by homogeneous polynomials in `x0..xn`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousIdeal {
    num_vars: usize,
    field: PrimeField,
    gens: Vec<SparsePolynomial>,
}

impl HomogeneousIdeal {
    /// Validates homogeneity and ring agreement; zero generators are dropped.
    pub fn new(num_vars: usize, field: PrimeField, gens: Vec<SparsePolynomial>) -> Result<Self> {
        if num_vars > MAX_VARS {
            return Err(Error::TooManyVariables(num_vars));
        }
        let probe = SparsePolynomial::zero(num_vars, field);
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            probe.same_ring(&g)?;
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous);
            }
            kept.push(g);
        }
        Ok(Self {
            num_vars,
            field,
            gens: kept,
        })
    }

    /// The unit ideal `(1)`, defining the empty subscheme.
    pub fn unit(num_vars: usize, field: PrimeField) -> Self {
        Self {
            num_vars,
            field,
            gens: vec![SparsePolynomial::constant(num_vars, field, 1)],
        }
    }

    /// The irrelevant ideal `(x0, …, xn)`.
    pub fn irrelevant(num_vars: usize, field: PrimeField) -> Self {
        Self {
            num_vars,
            field,
            gens: (0..num_vars)
                .map(|i| SparsePolynomial::var(num_vars, field, i))
                .collect(),
        }
    }

    /// Generators reduced into `field` by [`SparsePolynomial::to_field`].
    pub fn to_field(&self, field: PrimeField) -> Result<Self> {
        let gens = self.gens.iter().map(|g| g.to_field(field)).collect();
        Self::new(self.num_vars, field, gens)
    }

    pub fn principal(f: SparsePolynomial) -> Result<Self> {
        Self::new(f.num_vars(), f.field(), vec![f])
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Projective dimension `n` of the ambient `P^n`.
    pub fn ambient_dim(&self) -> usize {
        self.num_vars - 1
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }

    pub fn gens(&self) -> &[SparsePolynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when some generator is a nonzero constant.
    pub fn has_unit_generator(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == Some(0))
    }

    pub fn same_ring(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars || self.field != other.field {
            return Err(Error::RingMismatch {
                left_vars: self.num_vars,
                left_prime: self.prime(),
                right_vars: other.num_vars,
                right_prime: other.prime(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for HomogeneousIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for HomogeneousIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(∂F/∂x0, …, ∂F/∂xn, F)`.
pub fn jacobian_ideal(f: &SparsePolynomial) -> Result<HomogeneousIdeal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    let mut gens: Vec<SparsePolynomial> = (0..f.num_vars()).map(|i| f.derivative(i)).collect();
    gens.push(f.clone());
    HomogeneousIdeal::new(f.num_vars(), f.field(), gens)
}

/// Square matrix over `F_p`, row-major.
pub type Matrix = Vec<Vec<u64>>;

/// Rank by Gaussian elimination.
pub fn matrix_rank(m: &Matrix, field: PrimeField) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = field.inv(a[rank][col]);
        for c in col..cols {
            a[rank][c] = field.mul(a[rank][c], inv);
        }
        for r in 0..rows {
            if r != rank && a[r][col] != 0 {
                let factor = a[r][col];
                for c in col..cols {
                    let v = field.mul(factor, a[rank][c]);
                    a[r][c] = field.sub(a[r][c], v);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Inverse by Gauss–Jordan elimination.
pub fn matrix_inverse(m: &Matrix, field: PrimeField) -> Result<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| a[r][col] != 0)
            .ok_or(Error::SingularMatrix)?;
        a.swap(col, piv);
        let inv = field.inv(a[col][col]);
        for c in 0..2 * n {
            a[col][c] = field.mul(a[col][c], inv);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let factor = a[r][col];
                for c in 0..2 * n {
                    let v = field.mul(factor, a[col][c]);
                    a[r][c] = field.sub(a[r][c], v);
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn random_matrix(rows: usize, cols: usize, field: PrimeField, rng: &mut impl Rng) -> Matrix {
    (0..rows)
        .map(|_| (0..cols).map(|_| field.random(rng)).collect())
        .collect()
}

/// Random invertible `(n+1)×(n+1)` matrix.
pub fn random_invertible_matrix(size: usize, field: PrimeField, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = random_matrix(size, size, field, &mut rng);
        if matrix_rank(&m, field) == size {
            return m;
        }
    }
}

fn linear_form(coeffs: &[u64], field: PrimeField) -> SparsePolynomial {
    let nvars = coeffs.len();
    SparsePolynomial::from_terms(
        nvars,
        field,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (Monomial::var(i), c)),
    )
}

/// `count` random linear forms in `x0..xn`; any `n+1` consecutive leading
/// forms are linearly independent (re-drawn otherwise).
pub fn random_linear_forms(
    count: usize,
    n: usize,
    field: PrimeField,
    seed: u64,
) -> Vec<SparsePolynomial> {
    let nvars = n + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, field.modulus()));
    loop {
        let rows = random_matrix(count, nvars, field, &mut rng);
        let head: Matrix = rows.iter().take(nvars).cloned().collect();
        if matrix_rank(&head, field) == head.len() {
            return rows.iter().map(|r| linear_form(r, field)).collect();
        }
    }
}

/// Images `x_i ↦ Σ_j M[i][j] x_j` of the coordinate functions.
pub fn linear_substitution(m: &Matrix, field: PrimeField) -> Vec<SparsePolynomial> {
    m.iter().map(|row| linear_form(row, field)).collect()
}

/// Applies the coordinate change `x_i ↦ Σ_j M[i][j] x_j` to every generator.
pub fn apply_linear_change(ideal: &HomogeneousIdeal, m: &Matrix) -> Result<HomogeneousIdeal> {
    let field = ideal.field();
    let nvars = ideal.num_vars();
    if m.len() != nvars || m.iter().any(|r| r.len() != nvars) {
        return Err(Error::SingularMatrix);
    }
    if matrix_rank(m, field) != nvars {
        return Err(Error::SingularMatrix);
    }
    let images = linear_substitution(m, field);
    let gens = ideal.gens().iter().map(|g| g.substitute(&images)).collect();
    HomogeneousIdeal::new(nvars, field, gens)
}
