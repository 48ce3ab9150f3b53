//! Sparse multivariate polynomials over a [`Field`].
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic with the *last* variable most significant (x < y < z). Printing
//! walks the map in descending order, which fixes the canonical text form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::field::{Elem, Field};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Elem>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

impl MultiPoly {
    pub fn zero(field: &Field, vars: &[&str]) -> Self {
        MultiPoly {
            field: field.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect::<Vec<_>>().into(),
            terms: BTreeMap::new(),
        }
    }

    fn zero_like(&self) -> Self {
        MultiPoly { field: self.field.clone(), vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(field: &Field, vars: &[&str], c: Elem) -> Self {
        let mut p = MultiPoly::zero(field, vars);
        p.push_term(Monomial(vec![0; vars.len()]), c);
        p
    }

    pub fn constant_like(&self, c: Elem) -> Self {
        let mut p = self.zero_like();
        p.push_term(Monomial(vec![0; self.nvars()]), c);
        p
    }

    pub fn one_like(&self) -> Self {
        self.constant_like(self.field.one())
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(field: &Field, vars: &[&str], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = MultiPoly::zero(field, vars);
        p.push_term(Monomial(e), field.one());
        p
    }

    pub fn var_like(&self, i: usize) -> Self {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial_like(&e, self.field.one())
    }

    pub fn monomial_like(&self, exps: &[u32], c: Elem) -> Self {
        let mut p = self.zero_like();
        p.push_term(Monomial(exps.to_vec()), c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms(field: &Field, vars: &[&str], terms: Vec<(Vec<u32>, Elem)>) -> Self {
        let mut p = MultiPoly::zero(field, vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.push_term(Monomial(e), c);
        }
        p
    }

    fn push_term(&mut self, m: Monomial, c: Elem) {
        let f = self.field.clone();
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = f.add(old, &c);
                if f.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                if !f.is_zero(&c) {
                    self.terms.insert(m, c);
                }
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Elem {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> Elem {
        self.coeff(&vec![0; self.nvars()])
    }

    /// Value at the origin is zero.
    pub fn vanishes_at_origin(&self) -> bool {
        self.field.is_zero(&self.constant_term())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Elem)> {
        self.terms.iter().next_back()
    }

    pub fn same_ring(&self, other: &MultiPoly) -> bool {
        self.field == other.field && self.vars == other.vars
    }

    fn assert_same_ring(&self, other: &MultiPoly) {
        assert!(
            self.same_ring(other),
            "ring mismatch: {:?} over {} vs {:?} over {}",
            self.vars,
            self.field,
            other.vars,
            other.field
        );
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.push_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> MultiPoly {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = self.field.neg(c);
        }
        r
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Elem) -> MultiPoly {
        if self.field.is_zero(c) {
            return self.zero_like();
        }
        let mut r = self.clone();
        for v in r.terms.values_mut() {
            *v = self.field.mul(v, c);
        }
        r
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut r = self.zero_like();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                r.push_term(Monomial(e), self.field.mul(c1, c2));
            }
        }
        r
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Maximal total degree (0 for constants and for zero).
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Minimal total degree over the support: the order at the origin.
    pub fn order_at_origin(&self) -> Result<u32> {
        self.terms.keys().map(|m| m.degree()).min().ok_or(Error::ZeroPolynomial)
    }

    /// Largest power of variable `var` dividing the polynomial.
    pub fn order_in(&self, var: usize) -> Result<u32> {
        self.terms.keys().map(|m| m.0[var]).min().ok_or(Error::ZeroPolynomial)
    }

    pub fn homogeneous_part(&self, m: u32) -> MultiPoly {
        let mut r = self.zero_like();
        for (mon, c) in &self.terms {
            if mon.degree() == m {
                r.terms.insert(mon.clone(), c.clone());
            }
        }
        r
    }

    /// Lowest-degree homogeneous part; `m` must be the order at the origin.
    pub fn initial_form(&self, m: u32) -> Result<MultiPoly> {
        let ord = self.order_at_origin()?;
        if ord != m {
            return Err(Error::WrongOrder { expected: ord, given: m });
        }
        Ok(self.homogeneous_part(m))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn eval(&self, point: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = f.mul(&t, &f.pow(x, e as u64));
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Composition: replaces variable `i` by `images[i]`. All images share a ring,
    /// which becomes the ring of the result.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars());
        let target = &images[0];
        let mut cache: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![p.one_like()]).collect();
        let mut r = target.zero_like();
        for (m, c) in &self.terms {
            let mut t = target.constant_like(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap().mul(&images[i]);
                    cache[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&cache[i][e as usize]);
                }
            }
            r = r.add(&t);
        }
        r
    }

    /// `p(x_1 + a_1, ..., x_n + a_n)`.
    pub fn translate(&self, shift: &[Elem]) -> MultiPoly {
        if shift.iter().all(|a| self.field.is_zero(a)) {
            return self.clone();
        }
        let images: Vec<MultiPoly> = (0..self.nvars())
            .map(|i| self.var_like(i).add(&self.constant_like(shift[i].clone())))
            .collect();
        self.substitute(&images)
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut r = self.zero_like();
        for (m, c) in &self.terms {
            if m.0[var] == 0 {
                continue;
            }
            let mut e = m.0.clone();
            let k = self.field.from_i64(e[var] as i64);
            e[var] -= 1;
            r.push_term(Monomial(e), self.field.mul(c, &k));
        }
        r
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.assert_same_ring(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let lc_inv = self.field.inv(lc).unwrap();
        let mut rem = self.clone();
        let mut quot = self.zero_like();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let e: Vec<u32> = m.0.iter().zip(&lm.0).map(|(a, b)| a - b).collect();
            let q = self.field.mul(c, &lc_inv);
            let t = self.monomial_like(&e, q);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Divides out `var^k`; panics if not divisible.
    pub fn divide_by_var_power(&self, var: usize, k: u32) -> MultiPoly {
        let mut r = self.zero_like();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            assert!(e[var] >= k, "not divisible by variable power");
            e[var] -= k;
            r.terms.insert(Monomial(e), c.clone());
        }
        r
    }

    /// Scales so that the leading coefficient (grlex) is one.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field.inv(c).unwrap()),
        }
    }

    /// Coefficients with respect to `var`: entry `k` is the coefficient of
    /// `var^k`, a polynomial in the same ring that does not involve `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![self.zero_like(); d + 1];
        if self.is_zero() {
            return vec![];
        }
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[var] as usize;
            e[var] = 0;
            out[k].terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Reassembles from coefficients in `var` (inverse of `coefficients_in`).
    pub fn from_coefficients_in(template: &MultiPoly, var: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut r = template.zero_like();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut e = m.0.clone();
                e[var] += k as u32;
                r.push_term(Monomial(e), v.clone());
            }
        }
        r
    }

    /// Indices of variables that occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    /// Univariate view when only `var` occurs.
    pub fn to_uni(&self, var: usize) -> Option<UniPoly> {
        let mut coeffs = vec![self.field.zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            coeffs[m.0[var] as usize] = c.clone();
        }
        Some(UniPoly::new(&self.field, &self.vars[var], coeffs))
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_uni(template: &MultiPoly, var: usize, u: &UniPoly) -> MultiPoly {
        let mut r = template.zero_like();
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; template.nvars()];
            e[var] = k as u32;
            r.push_term(Monomial(e), c.clone());
        }
        r
    }

    /// Sets variable `var` to the value `a`, keeping the ring.
    pub fn specialize(&self, var: usize, a: &Elem) -> MultiPoly {
        let f = &self.field;
        let mut r = self.zero_like();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[var];
            e[var] = 0;
            r.push_term(Monomial(e), f.mul(c, &f.pow(a, k as u64)));
        }
        r
    }

    /// Same terms, renamed variables.
    pub fn with_vars(&self, vars: &[&str]) -> MultiPoly {
        assert_eq!(vars.len(), self.nvars());
        MultiPoly {
            field: self.field.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect::<Vec<_>>().into(),
            terms: self.terms.clone(),
        }
    }

    /// Re-expresses the polynomial over another field; coefficients must lie in
    /// the common prime subfield.
    pub fn change_field(&self, field: &Field) -> Result<MultiPoly> {
        if field == &self.field {
            return Ok(self.clone());
        }
        let mut r = MultiPoly::zero(field, &self.var_names());
        for (m, c) in &self.terms {
            r.push_term(m.clone(), field.embed_prime(&self.field, c)?);
        }
        Ok(r)
    }

    /// Maps the exponent vectors into a ring with other variables: variable `i`
    /// of `self` becomes variable `positions[i]` of `target`.
    pub fn relabel(&self, target: &MultiPoly, positions: &[usize]) -> MultiPoly {
        let mut r = target.zero_like();
        for (m, c) in &self.terms {
            let mut e = vec![0; target.nvars()];
            for (i, &k) in m.0.iter().enumerate() {
                e[positions[i]] += k;
            }
            r.push_term(Monomial(e), c.clone());
        }
        r
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let k = &self.field;
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = k.is_negative(c);
            let abs = if negative { k.neg(c) } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = vec![];
            if m.degree() == 0 || !k.is_one(&abs) {
                factors.push(k.format(&abs));
            }
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    fn q(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals(), &["x", "y"]).unwrap()
    }

    #[test]
    fn grlex_order_last_variable_most_significant() {
        assert!(Monomial(vec![0, 1]) > Monomial(vec![1, 0]));
        assert!(Monomial(vec![2, 0]) > Monomial(vec![0, 1]));
        assert!(Monomial(vec![1, 1]) > Monomial(vec![2, 0]));
        assert_eq!(q("x^2 - y^3").to_string(), "-y^3 + x^2");
    }

    #[test]
    fn orders_and_initial_forms() {
        assert_eq!(q("x^2 + y^3").order_at_origin().unwrap(), 2);
        assert_eq!(q("x*y").order_at_origin().unwrap(), 2);
        assert_eq!(q("1 + x").order_at_origin().unwrap(), 0);
        assert_eq!(q("0").order_at_origin(), Err(Error::ZeroPolynomial));
        assert_eq!(q("x^2 + y^3").initial_form(2).unwrap(), q("x^2"));
        assert_eq!(q("x^2 + x*y + y^3").initial_form(2).unwrap(), q("x^2 + x*y"));
        assert_eq!(q("x").initial_form(1).unwrap(), q("x"));
        assert!(matches!(q("x^2").initial_form(1), Err(Error::WrongOrder { .. })));
    }

    #[test]
    fn exact_division() {
        let a = q("x^2 - y^2");
        assert_eq!(a.div_exact(&q("x - y")).unwrap(), q("x + y"));
        assert!(a.div_exact(&q("x + 2*y")).is_none());
    }

    #[test]
    fn translate_round_trip() {
        let k = Field::rationals();
        let p = q("y^2 - x^3 + 2*x*y");
        let a = [k.from_i64(3), k.from_i64(-2)];
        let back = [k.from_i64(-3), k.from_i64(2)];
        assert_eq!(p.translate(&a).translate(&back), p);
    }
}
