//! Buchberger's algorithm over `F_p` and the ideal operations built on it.
//!
//! Pairs are pruned with the Gebauer–Möller installation of Buchberger's
//! coprimality and chain criteria and selected by the sugar strategy, so
//! inhomogeneous inputs (saturation and intersection tricks) behave well.
//! An F4-style linear-algebra reduction would be the next step if inputs
//! outgrow desk scale.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::polyring::{HomogeneousIdeal, Monomial, PrimeField, SparsePolynomial, MAX_VARS};

/// Term order used by a Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    DegRevLex,
    /// Two-block order: total degree in the variables `start..end` first
    /// (the eliminated block), ties broken by grevlex.
    Elimination { start: usize, end: usize },
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => a.cmp_grevlex(b),
            MonomialOrder::Elimination { start, end } => a
                .partial_degree(start..end)
                .cmp(&b.partial_degree(start..end))
                .then_with(|| a.cmp_grevlex(b)),
        }
    }
}

type Terms = Vec<(Monomial, u64)>;

/// Reduced, monic Gröbner basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    num_vars: usize,
    field: PrimeField,
    order: MonomialOrder,
    /// Each generator stored in canonical (grevlex) form; sorted by
    /// ascending leading monomial under `order`.
    gens: Vec<SparsePolynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn gens(&self) -> &[SparsePolynomial] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// Basis `{1}`.
    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(|m| m.degree() == 0)
    }

    pub fn contains(&self, f: &SparsePolynomial) -> bool {
        normal_form(f, self).is_zero()
    }
}

fn sorted_by(order: MonomialOrder, p: &SparsePolynomial) -> Terms {
    let mut t = p.terms().to_vec();
    if order != MonomialOrder::DegRevLex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

fn to_canonical(num_vars: usize, field: PrimeField, order: MonomialOrder, t: Terms) -> SparsePolynomial {
    if order == MonomialOrder::DegRevLex {
        SparsePolynomial::from_sorted_terms(num_vars, field, t)
    } else {
        SparsePolynomial::from_terms(num_vars, field, t)
    }
}

/// Bit signature for fast non-divisibility: bit `4v + k` is set when the
/// exponent of variable `v` is at least `2^k`.
#[inline]
fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for v in 0..MAX_VARS {
        let e = m.exp(v);
        for k in 0..4 {
            if e >= 1 << k {
                mask |= 1 << (4 * v + k);
            }
        }
    }
    mask
}

struct Reducer {
    terms: Terms,
    lm: Monomial,
    mask: u64,
    sugar: u32,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    field: PrimeField,
    order: MonomialOrder,
    polys: Vec<Reducer>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn new(field: PrimeField, order: MonomialOrder) -> Self {
        Self {
            field,
            order,
            polys: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn find_reducer(&self, m: &Monomial) -> Option<usize> {
        let mask = divmask(m);
        self.polys
            .iter()
            .position(|r| r.active && r.mask & !mask == 0 && r.lm.divides(m))
    }

    /// `p - c·q·g` as a sorted merge.
    fn sub_multiple(&self, p: &[(Monomial, u64)], g: &[(Monomial, u64)], q: &Monomial, c: u64) -> Terms {
        let f = self.field;
        let negc = f.neg(c);
        let mut out = Vec::with_capacity(p.len() + g.len());
        let (mut i, mut j) = (0, 0);
        while i < p.len() && j < g.len() {
            let gm = g[j].0.mul(q);
            match self.order.cmp(&p[i].0, &gm) {
                Ordering::Greater => {
                    out.push(p[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, f.mul(g[j].1, negc)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.add(p[i].1, f.mul(g[j].1, negc));
                    if v != 0 {
                        out.push((gm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&p[i..]);
        for &(m, a) in &g[j..] {
            out.push((m.mul(q), f.mul(a, negc)));
        }
        out
    }

    /// Full reduction of `p` by the active reducers.
    fn reduce(&self, mut p: Terms) -> Terms {
        let mut result = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let (m, c) = p[start];
            match self.find_reducer(&m) {
                Some(k) => {
                    let r = &self.polys[k];
                    let q = r.lm.quotient_of(&m);
                    p = self.sub_multiple(&p[start..], &r.terms, &q, c);
                    start = 0;
                }
                None => {
                    result.push((m, c));
                    start += 1;
                }
            }
        }
        result
    }

    fn make_monic(&self, mut t: Terms) -> Terms {
        if let Some(&(_, c)) = t.first() {
            if c != 1 {
                let inv = self.field.inv(c);
                for term in &mut t {
                    term.1 = self.field.mul(term.1, inv);
                }
            }
        }
        t
    }

    fn spoly(&self, pair: &Pair) -> Terms {
        let (a, b) = (&self.polys[pair.i], &self.polys[pair.j]);
        let qa = a.lm.quotient_of(&pair.lcm);
        let qb = b.lm.quotient_of(&pair.lcm);
        let shifted: Terms = a.terms[1..].iter().map(|&(m, c)| (m.mul(&qa), c)).collect();
        self.sub_multiple(&shifted, &b.terms[1..], &qb, 1)
    }

    /// Gebauer–Möller update with the new element at index `h`.
    fn update(&mut self, h: usize) {
        let hlm = self.polys[h].lm;
        let hsugar = self.polys[h].sugar;
        let mut candidates: std::collections::VecDeque<Pair> = (0..h)
            .filter(|&g| self.polys[g].active)
            .map(|g| {
                let lcm = self.polys[g].lm.lcm(&hlm);
                let sg = self.polys[g].sugar + lcm.degree() - self.polys[g].lm.degree();
                let sh = hsugar + lcm.degree() - hlm.degree();
                Pair {
                    i: g,
                    j: h,
                    lcm,
                    sugar: sg.max(sh),
                }
            })
            .collect();

        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop_front() {
            let coprime = self.polys[p.i].lm.is_coprime(&hlm);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        let polys = &self.polys;
        kept.retain(|p| !polys[p.i].lm.is_coprime(&hlm));

        self.pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].lm.lcm(&hlm);
            let lj = polys[p.j].lm.lcm(&hlm);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(kept);

        for g in 0..h {
            if self.polys[g].active && hlm.divides(&self.polys[g].lm) {
                self.polys[g].active = false;
            }
        }
    }

    fn insert(&mut self, terms: Terms, sugar: u32) {
        let terms = self.make_monic(terms);
        let lm = terms[0].0;
        self.polys.push(Reducer {
            mask: divmask(&lm),
            lm,
            terms,
            sugar,
            active: true,
        });
        let h = self.polys.len() - 1;
        self.update(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self, input: Vec<Terms>) {
        let mut input: Vec<Terms> = input.into_iter().filter(|t| !t.is_empty()).collect();
        input.sort_by(|a, b| {
            a[0].0
                .degree()
                .cmp(&b[0].0.degree())
                .then_with(|| self.order.cmp(&a[0].0, &b[0].0))
        });
        for t in input {
            let sugar = t.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
            let r = self.reduce(t);
            if !r.is_empty() {
                self.insert(r, sugar);
                if self.polys.last().unwrap().lm.degree() == 0 {
                    return;
                }
            }
        }
        while let Some(pair) = self.next_pair() {
            let s = self.spoly(&pair);
            let r = self.reduce(s);
            if !r.is_empty() {
                let unit = r[0].0.degree() == 0;
                self.insert(r, pair.sugar);
                if unit {
                    return;
                }
            }
        }
    }

    /// Minimal, tail-reduced, monic basis sorted by ascending leading monomial.
    fn finish(mut self) -> Vec<Terms> {
        if let Some(u) = self.polys.iter().position(|r| r.active && r.lm.degree() == 0) {
            return vec![self.polys.swap_remove(u).terms];
        }
        let idx: Vec<usize> = (0..self.polys.len()).filter(|&k| self.polys[k].active).collect();
        let mut out = Vec::with_capacity(idx.len());
        for &k in &idx {
            self.polys[k].active = false;
            let terms = std::mem::take(&mut self.polys[k].terms);
            let lead = terms[0];
            let tail = self.reduce(terms[1..].to_vec());
            let mut full = vec![lead];
            full.extend(tail);
            self.polys[k].terms = full.clone();
            self.polys[k].active = true;
            out.push(full);
        }
        let order = self.order;
        out.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
        out
    }

}

fn compute(num_vars: usize, field: PrimeField, order: MonomialOrder, polys: &[SparsePolynomial]) -> GroebnerBasis {
    let mut engine = Engine::new(field, order);
    engine.run(polys.iter().map(|p| sorted_by(order, p)).collect());
    let bases = engine.finish();
    let leading = bases.iter().map(|t| t[0].0).collect();
    let gens = bases
        .into_iter()
        .map(|t| to_canonical(num_vars, field, order, t))
        .collect();
    GroebnerBasis {
        num_vars,
        field,
        order,
        gens,
        leading,
    }
}

/// Reduced Gröbner basis of an ideal.
pub fn groebner_basis(ideal: &HomogeneousIdeal, order: MonomialOrder) -> GroebnerBasis {
    compute(ideal.num_vars(), ideal.field(), order, ideal.gens())
}

/// Reduced Gröbner basis of arbitrary (possibly inhomogeneous) polynomials.
pub fn groebner_basis_of(
    num_vars: usize,
    field: PrimeField,
    polys: &[SparsePolynomial],
    order: MonomialOrder,
) -> GroebnerBasis {
    compute(num_vars, field, order, polys)
}

/// Remainder of `f` on division by `basis`; zero iff `f` lies in the ideal.
pub fn normal_form(f: &SparsePolynomial, basis: &GroebnerBasis) -> SparsePolynomial {
    let mut engine = Engine::new(basis.field, basis.order);
    for g in &basis.gens {
        let terms = sorted_by(basis.order, g);
        let lm = terms[0].0;
        engine.polys.push(Reducer {
            mask: divmask(&lm),
            lm,
            terms,
            sugar: 0,
            active: true,
        });
    }
    let r = engine.reduce(sorted_by(basis.order, f));
    to_canonical(f.num_vars(), f.field(), basis.order, r)
}

pub fn ideal_sum(i: &HomogeneousIdeal, j: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    i.same_ring(j)?;
    let gens = i.gens().iter().chain(j.gens()).cloned().collect();
    HomogeneousIdeal::new(i.num_vars(), i.field(), gens)
}

pub fn ideal_product(i: &HomogeneousIdeal, j: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    i.same_ring(j)?;
    let gens = i
        .gens()
        .iter()
        .flat_map(|a| j.gens().iter().map(move |b| a.mul(b)))
        .collect();
    HomogeneousIdeal::new(i.num_vars(), i.field(), gens)
}

/// `true` iff every generator of `big` reduces to zero modulo `small`,
/// i.e. `big ⊆ small`, i.e. the subscheme of `small` lies in that of `big`.
pub fn ideal_contains(small: &HomogeneousIdeal, big: &HomogeneousIdeal) -> Result<bool> {
    small.same_ring(big)?;
    let g = groebner_basis(small, MonomialOrder::DegRevLex);
    Ok(big.gens().iter().all(|f| g.contains(f)))
}

/// Same ideal (compared through reduced Gröbner bases).
pub fn ideals_equal(i: &HomogeneousIdeal, j: &HomogeneousIdeal) -> Result<bool> {
    i.same_ring(j)?;
    let a = groebner_basis(i, MonomialOrder::DegRevLex);
    let b = groebner_basis(j, MonomialOrder::DegRevLex);
    Ok(a.gens == b.gens)
}

fn lift(p: &SparsePolynomial, num_vars: usize) -> SparsePolynomial {
    p.with_num_vars(num_vars)
}

/// Generators of a homogeneous elimination ideal found in `basis`:
/// elements that do not involve the eliminated variable `aux`.
fn eliminated(basis: &GroebnerBasis, aux: usize, num_vars: usize, field: PrimeField) -> Result<HomogeneousIdeal> {
    let gens = basis
        .gens()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exp(aux) == 0))
        .map(|g| g.with_num_vars(num_vars))
        .collect();
    HomogeneousIdeal::new(num_vars, field, gens)
}

fn check_aux_room(num_vars: usize) -> Result<()> {
    if num_vars + 1 > MAX_VARS {
        return Err(Error::TooManyVariables(num_vars + 1));
    }
    Ok(())
}

/// `(I : f^∞)` by adjoining `t` with `1 - t·f` and eliminating `t`.
pub fn saturate_by(i: &HomogeneousIdeal, f: &SparsePolynomial) -> Result<HomogeneousIdeal> {
    let nv = i.num_vars();
    check_aux_room(nv)?;
    let field = i.field();
    if f.is_zero() {
        return Ok(HomogeneousIdeal::unit(nv, field));
    }
    let ext = nv + 1;
    let t = SparsePolynomial::var(ext, field, nv);
    let mut polys: Vec<SparsePolynomial> = i.gens().iter().map(|g| lift(g, ext)).collect();
    let one = SparsePolynomial::constant(ext, field, 1);
    polys.push(one.sub(&t.mul(&lift(f, ext))));
    let order = MonomialOrder::Elimination { start: nv, end: ext };
    let basis = compute(ext, field, order, &polys);
    eliminated(&basis, nv, nv, field)
}

/// `I ∩ J` via `t·I + (1-t)·J` with `t` eliminated.
pub fn ideal_intersection(i: &HomogeneousIdeal, j: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    i.same_ring(j)?;
    let nv = i.num_vars();
    check_aux_room(nv)?;
    let field = i.field();
    let ext = nv + 1;
    let t = SparsePolynomial::var(ext, field, nv);
    let one_minus_t = SparsePolynomial::constant(ext, field, 1).sub(&t);
    let mut polys: Vec<SparsePolynomial> = i.gens().iter().map(|g| t.mul(&lift(g, ext))).collect();
    polys.extend(j.gens().iter().map(|g| one_minus_t.mul(&lift(g, ext))));
    let order = MonomialOrder::Elimination { start: nv, end: ext };
    let basis = compute(ext, field, order, &polys);
    eliminated(&basis, nv, nv, field)
}

/// `(I : J^∞)`, the intersection over generators `f` of `J` of `(I : f^∞)`.
pub fn saturate(i: &HomogeneousIdeal, j: &HomogeneousIdeal) -> Result<HomogeneousIdeal> {
    i.same_ring(j)?;
    let mut acc: Option<HomogeneousIdeal> = None;
    for f in j.gens() {
        let s = saturate_by(i, f)?;
        acc = Some(match acc {
            None => s,
            Some(a) => ideal_intersection(&a, &s)?,
        });
    }
    Ok(acc.unwrap_or_else(|| HomogeneousIdeal::unit(i.num_vars(), i.field())))
}

/// Projective dimension (`None` for the empty subscheme) and degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimDegree {
    pub dim: Option<usize>,
    pub degree: u64,
}

/// Dimension and degree of the subscheme of `P^n` cut out by `ideal`, read
/// off the Hilbert series of its leading-term ideal.
///
/// The Hilbert polynomial of `S/I` equals that of `S/I^sat`, so the answer
/// is the one for the saturation by the irrelevant ideal.
pub fn dim_degree(ideal: &HomogeneousIdeal) -> Result<DimDegree> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let basis = groebner_basis(ideal, MonomialOrder::DegRevLex);
    Ok(hilbert_dim_degree(basis.leading_monomials(), ideal.num_vars()))
}

/// Dimension/degree data of `S/M` for a monomial ideal `M`.
pub fn hilbert_dim_degree(monomials: &[Monomial], num_vars: usize) -> DimDegree {
    let mut memo = HashMap::new();
    let mut num = hilbert_numerator(minimalize(monomials.to_vec()), &mut memo);
    if num.iter().all(|&c| c == 0) {
        return DimDegree { dim: None, degree: 0 };
    }
    let mut divisions = 0;
    while num.iter().sum::<i128>() == 0 {
        num = divide_by_one_minus_t(&num);
        divisions += 1;
    }
    let krull = num_vars - divisions;
    let degree = num.iter().sum::<i128>();
    if krull == 0 {
        DimDegree { dim: None, degree: 0 }
    } else {
        DimDegree {
            dim: Some(krull - 1),
            degree: degree as u64,
        }
    }
}

fn divide_by_one_minus_t(p: &[i128]) -> Vec<i128> {
    // p = (1 - t) q  ⇒  q_k = Σ_{j≤k} p_j
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    q
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.cmp_grevlex(b));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_add(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] += c;
    }
}

/// Numerator `N(t)` of `HS(S/M) = N(t)/(1-t)^{num_vars}` by pivoting:
/// `N(M) = N(M + p) + t^{deg p} N(M : p)`.
fn hilbert_numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, Vec<i128>>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.degree() == 0) {
        return vec![0];
    }
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    // Pure powers of distinct variables (or coprime monomials in general):
    // N = Π (1 - t^{deg g}).
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(a, g)| gens[a + 1..].iter().all(|h| g.is_coprime(h)));
    let out = if pairwise_coprime {
        let mut acc = vec![1i128];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (k, &c) in acc.iter().enumerate() {
                next[k + d] -= c;
            }
            acc = next;
        }
        acc
    } else {
        // Pivot on the variable occurring in the most generators, with the
        // smallest positive exponent it takes there.
        let mut best = (0usize, 0usize);
        for v in 0..MAX_VARS {
            let count = gens.iter().filter(|g| g.exp(v) > 0).count();
            if count > best.1 {
                best = (v, count);
            }
        }
        let v = best.0;
        let e = gens
            .iter()
            .map(|g| g.exp(v))
            .filter(|&e| e > 0)
            .min()
            .unwrap();
        let mut exps = [0u32; MAX_VARS];
        exps[v] = e;
        let pivot = Monomial::from_exponents(&exps).unwrap();
        let mut plus = gens.clone();
        plus.push(pivot);
        let plus = minimalize(plus);
        let colon = minimalize(
            gens.iter()
                .map(|g| {
                    let gd = g.gcd(&pivot);
                    gd.quotient_of(g)
                })
                .collect(),
        );
        let mut a = hilbert_numerator(plus, memo);
        let b = hilbert_numerator(colon, memo);
        poly_add(&mut a, &b, e as usize);
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
        a
    };
    memo.insert(gens, out.clone());
    out
}

/// Number of standard monomials of a zero-dimensional leading-term ideal;
/// `None` when the ideal is not zero-dimensional (infinitely many).
pub fn standard_monomial_count(leading: &[Monomial], num_vars: usize) -> Option<u64> {
    if leading.iter().any(|m| m.degree() == 0) {
        return Some(0);
    }
    let mut bound = [0u32; MAX_VARS];
    for v in 0..num_vars {
        let pure = leading
            .iter()
            .filter(|m| m.degree() == m.exp(v))
            .map(|m| m.exp(v))
            .min()?;
        bound[v] = pure;
    }
    // Depth-first enumeration of exponent vectors below the pure-power
    // bounds that avoid the leading ideal (an order ideal).
    let mut count = 0u64;
    let mut stack = vec![Monomial::one()];
    let mut seen = std::collections::HashSet::new();
    seen.insert(Monomial::one());
    while let Some(m) = stack.pop() {
        count += 1;
        for v in 0..num_vars {
            if m.exp(v) + 1 >= bound[v] {
                continue;
            }
            let next = m.mul(&Monomial::var(v));
            if leading.iter().any(|l| l.divides(&next)) {
                continue;
            }
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    Some(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn poly(s: &str, n: usize) -> SparsePolynomial {
        parse_polynomial(s, n, fp()).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> HomogeneousIdeal {
        HomogeneousIdeal::new(n + 1, fp(), gens.iter().map(|g| poly(g, n)).collect()).unwrap()
    }

    #[test]
    fn linear_basis() {
        let g = groebner_basis(&ideal(&["x0", "x0+x1"], 2), MonomialOrder::DegRevLex);
        assert_eq!(g.gens(), &[poly("x1", 2), poly("x0", 2)]);
    }

    #[test]
    fn one_reduction_step() {
        let g = groebner_basis(&ideal(&["x0^2+x1^2", "x1^2"], 2), MonomialOrder::DegRevLex);
        assert_eq!(g.gens(), &[poly("x1^2", 2), poly("x0^2", 2)]);
    }

    #[test]
    fn unit_ideal() {
        let g = groebner_basis(&ideal(&["x0", "x1", "x0 + x1 - x1"], 1), MonomialOrder::DegRevLex);
        assert!(!g.is_unit());
        let f = fp();
        let g = groebner_basis_of(2, f, &[poly("x0", 1), poly("x0 - 1", 1)], MonomialOrder::DegRevLex);
        assert!(g.is_unit());
        assert_eq!(g.gens().len(), 1);
    }

    #[test]
    fn twisted_cubic_basis_is_its_generators() {
        let i = ideal(&["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"], 3);
        let g = groebner_basis(&i, MonomialOrder::DegRevLex);
        assert_eq!(g.gens().len(), 3);
        assert!(g.leading_monomials().iter().all(|m| m.degree() == 2));
        let mut lms: Vec<String> = g.leading_monomials().iter().map(|m| format!("{m:?}")).collect();
        lms.sort();
        assert_eq!(lms, vec!["x1*x2", "x1^2", "x2^2"]);
    }

    #[test]
    fn normal_form_examples() {
        let g = groebner_basis(&ideal(&["x0"], 2), MonomialOrder::DegRevLex);
        assert!(normal_form(&poly("x0^2", 2), &g).is_zero());
        assert_eq!(normal_form(&poly("x1", 2), &g), poly("x1", 2));
        assert_eq!(normal_form(&poly("x0*x1+x1^2", 2), &g), poly("x1^2", 2));
    }

    #[test]
    fn sum_and_product() {
        let a = ideal(&["x0"], 2);
        let b = ideal(&["x1", "x2"], 2);
        assert_eq!(ideal_sum(&a, &ideal(&["x1"], 2)).unwrap(), ideal(&["x0", "x1"], 2));
        assert_eq!(ideal_product(&a, &b).unwrap(), ideal(&["x0*x1", "x0*x2"], 2));
        let unit = HomogeneousIdeal::unit(3, fp());
        assert_eq!(ideal_product(&a, &unit).unwrap(), a);
    }

    #[test]
    fn saturation_examples() {
        let s = saturate(&ideal(&["x0^2", "x0*x1"], 2), &ideal(&["x1"], 2)).unwrap();
        assert!(ideals_equal(&s, &ideal(&["x0"], 2)).unwrap());
        let s = saturate(&ideal(&["x0"], 2), &ideal(&["x0"], 2)).unwrap();
        assert!(groebner_basis(&s, MonomialOrder::DegRevLex).is_unit());
        let i = ideal(&["x0", "x1"], 2);
        let s = saturate(&i, &i).unwrap();
        assert!(groebner_basis(&s, MonomialOrder::DegRevLex).is_unit());
    }

    #[test]
    fn saturation_removes_irrelevant_component() {
        // (x0^2, x0*x1, x0*x2) = (x0) ∩ (x0^2, x1, x2)
        let i = ideal(&["x0^2", "x0*x1", "x0*x2"], 2);
        let s = saturate(&i, &HomogeneousIdeal::irrelevant(3, fp())).unwrap();
        assert!(ideals_equal(&s, &ideal(&["x0"], 2)).unwrap());
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let i = ideal_intersection(&ideal(&["x0"], 2), &ideal(&["x1"], 2)).unwrap();
        assert!(ideals_equal(&i, &ideal(&["x0*x1"], 2)).unwrap());
    }

    #[test]
    fn dim_degree_examples() {
        assert_eq!(
            dim_degree(&ideal(&["x0", "x1"], 2)).unwrap(),
            DimDegree { dim: Some(0), degree: 1 }
        );
        assert_eq!(
            dim_degree(&ideal(&["x0*x1"], 2)).unwrap(),
            DimDegree { dim: Some(1), degree: 2 }
        );
        assert_eq!(
            dim_degree(&ideal(&["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"], 3)).unwrap(),
            DimDegree { dim: Some(1), degree: 3 }
        );
        assert_eq!(
            dim_degree(&ideal(&["x0", "x1", "x2"], 2)).unwrap(),
            DimDegree { dim: None, degree: 0 }
        );
        assert_eq!(dim_degree(&ideal(&[], 2)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn containment_examples() {
        assert!(ideal_contains(&ideal(&["x0", "x1"], 3), &ideal(&["x1"], 3)).unwrap());
        assert!(!ideal_contains(&ideal(&["x0"], 3), &ideal(&["x1"], 3)).unwrap());
        assert!(!ideal_contains(&ideal(&["x0^2"], 3), &ideal(&["x0"], 3)).unwrap());
    }

    #[test]
    fn standard_monomials_of_zero_dim_ideal() {
        let lm = |s: &str| {
            groebner_basis(&ideal(&[s], 1), MonomialOrder::DegRevLex).leading_monomials()[0]
        };
        // (x0^2, x1^3): 6 standard monomials
        assert_eq!(standard_monomial_count(&[lm("x0^2"), lm("x1^3")], 2), Some(6));
        assert_eq!(standard_monomial_count(&[lm("x0^2")], 2), None);
    }
}
