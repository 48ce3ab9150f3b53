//! Dense univariate polynomials.

use std::fmt;

use super::field::{Elem, Field};

/// Dense univariate polynomial, coefficients ascending. Never stores a zero
/// leading coefficient; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    var: String,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl UniPoly {
    pub fn new(field: &Field, var: &str, coeffs: Vec<Elem>) -> Self {
        let mut p = UniPoly { field: field.clone(), var: var.to_string(), coeffs };
        p.trim();
        p
    }

    pub fn from_i64(field: &Field, var: &str, coeffs: &[i64]) -> Self {
        UniPoly::new(field, var, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field, var: &str) -> Self {
        UniPoly::new(field, var, vec![])
    }

    pub fn constant(field: &Field, var: &str, c: Elem) -> Self {
        UniPoly::new(field, var, vec![c])
    }

    /// The monic linear polynomial `t - a`.
    pub fn linear_root(field: &Field, var: &str, a: &Elem) -> Self {
        UniPoly::new(field, var, vec![field.neg(a), field.one()])
    }

    fn like(&self, coeffs: Vec<Elem>) -> Self {
        UniPoly::new(&self.field, &self.var, coeffs)
    }

    fn trim(&mut self) {
        while let Some(c) = self.coeffs.last() {
            if self.field.is_zero(c) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(&self, var: &str) -> UniPoly {
        UniPoly { var: var.to_string(), ..self.clone() }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial counted as degree 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        self.like((0..n).map(|i| self.field.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn neg(&self) -> UniPoly {
        self.like(self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Elem) -> UniPoly {
        self.like(self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return self.like(vec![]);
        }
        let k = &self.field;
        let mut r = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                r[i + j] = k.add(&r[i + j], &k.mul(a, b));
            }
        }
        self.like(r)
    }

    pub fn pow(&self, mut e: u64) -> UniPoly {
        let mut base = self.clone();
        let mut acc = self.like(vec![self.field.one()]);
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

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let k = &self.field;
        let mut r = self.coeffs.clone();
        let dn = d.coeffs.len();
        if r.len() < dn {
            return (self.like(vec![]), self.clone());
        }
        let lc_inv = k.inv(&d.lc()).unwrap();
        let mut q = vec![k.zero(); r.len() - dn + 1];
        for shift in (0..q.len()).rev() {
            let c = k.mul(&r[shift + dn - 1], &lc_inv);
            if k.is_zero(&c) {
                continue;
            }
            for (i, b) in d.coeffs.iter().enumerate() {
                r[shift + i] = k.sub(&r[shift + i], &k.mul(&c, b));
            }
            q[shift] = c;
        }
        r.truncate(dn - 1);
        (self.like(q), self.like(r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.field.inv(&self.lc()).unwrap())
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        let k = &self.field;
        self.like(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| k.mul(c, &k.from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, a: &Elem) -> Elem {
        let k = &self.field;
        self.coeffs.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, a), c))
    }

    /// `p(t + a)`.
    pub fn taylor_shift(&self, a: &Elem) -> UniPoly {
        let lin = self.like(vec![a.clone(), self.field.one()]);
        let mut acc = self.like(vec![]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&self.like(vec![c.clone()]));
        }
        acc
    }

    /// Reversed coefficient list: `t^deg · p(1/t)`.
    pub fn reversed(&self) -> UniPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        self.like(c)
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: &Elem) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = UniPoly::linear_root(&self.field, &self.var, a);
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.div_exact(&lin) {
            p = q;
            m += 1;
        }
        m
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut base = self.rem(m);
        let mut acc = self.like(vec![self.field.one()]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// In characteristic `p`, a polynomial with zero derivative is `q(t^p)`;
    /// returns the `p`-th root `q^{1/p}`.
    fn pth_root(&self) -> UniPoly {
        let k = &self.field;
        let p = k.characteristic() as usize;
        let coeffs = self.coeffs.iter().step_by(p).map(|c| k.pth_root(c)).collect();
        self.like(coeffs)
    }

    /// Squarefree decomposition `self = lc · Π f_i^{m_i}` with monic, pairwise
    /// coprime, squarefree `f_i`. Handles positive characteristic.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = vec![];
        if self.is_constant() {
            return out;
        }
        self.sqf_into(1, &mut out);
        out.sort_by_key(|(_, m)| *m);
        out
    }

    fn sqf_into(&self, scale: usize, out: &mut Vec<(UniPoly, usize)>) {
        let f = self.monic();
        if f.is_constant() {
            return;
        }
        let d = f.derivative();
        if d.is_zero() {
            let p = self.field.characteristic() as usize;
            f.pth_root().sqf_into(scale * p, out);
            return;
        }
        let mut c = f.gcd(&d);
        let mut w = f.div_exact(&c).unwrap();
        let mut i = 1;
        while !w.is_constant() {
            let y = w.gcd(&c);
            let z = w.div_exact(&y).unwrap();
            if !z.is_constant() {
                out.push((z, i * scale));
            }
            i += 1;
            w = y;
            c = c.div_exact(&w).unwrap();
        }
        if !c.is_constant() {
            let p = self.field.characteristic() as usize;
            c.pth_root().sqf_into(scale * p, out);
        }
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> UniPoly {
        let one = self.like(vec![self.field.one()]);
        self.squarefree_decomposition().into_iter().fold(one, |acc, (f, _)| acc.mul(&f))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.field;
        let terms: Vec<(Vec<u32>, Elem)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![i as u32], c.clone()))
            .collect();
        let m = super::multipoly::MultiPoly::from_terms(k, &[self.var.as_str()], terms);
        write!(f, "{m}")
    }
}
