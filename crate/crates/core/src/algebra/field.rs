//! Exact scalar fields: the rationals, prime fields and their finite extensions.
//!
//! Elements carry no reference to their field; every operation goes through a
//! [`Field`] handle, which is a cheap clone of a shared descriptor.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Which field a computation lives in.
///
/// `ExtField` stores the monic modulus in ascending coefficient order; the
/// extension is `F_p[a] / (modulus)` with generator printed as `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u64),
    ExtField { p: u64, modulus: Vec<u64> },
}

/// A field element in canonical form. Equality is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Rat(BigRational),
    /// Residue modulo `p` (length 1) or coefficients of a residue modulo the
    /// extension modulus (length `k`, ascending).
    Fq(Vec<u64>),
}

/// Shared handle on a [`FieldDescriptor`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Field(Arc<FieldDescriptor>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "F{p}"),
            FieldDescriptor::ExtField { p, modulus } => {
                write!(f, "F{p}^{}[{}]", modulus.len() - 1, fp::to_string(modulus, "a"))
            }
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldDescriptor::Rationals))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field(Arc::new(FieldDescriptor::PrimeField(p))))
    }

    /// `F_p[a]/(modulus)`; the modulus (ascending coefficients) is made monic and
    /// must be irreducible of degree at least 1.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Self> {
        Field::prime(p)?;
        let mut m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        fp::trim(&mut m);
        if m.len() < 2 {
            return Err(Error::InvalidField("modulus must have positive degree".into()));
        }
        let lc_inv = fp::inv(*m.last().unwrap(), p);
        for c in m.iter_mut() {
            *c = *c * lc_inv % p;
        }
        if !fp::is_irreducible(&m, p) {
            return Err(Error::InvalidField(format!(
                "{} is reducible over F{p}",
                fp::to_string(&m, "a")
            )));
        }
        if m.len() == 2 {
            return Field::prime(p);
        }
        Ok(Field(Arc::new(FieldDescriptor::ExtField { p, modulus: m })))
    }

    /// The field with `p^k` elements, using the first irreducible modulus in a
    /// fixed enumeration order.
    pub fn finite(p: u64, k: usize) -> Result<Self> {
        Field::prime(p)?;
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        if k == 1 {
            return Field::prime(p);
        }
        let mut index: u64 = 1;
        loop {
            let mut m = vec![0u64; k + 1];
            m[k] = 1;
            let mut rest = index;
            for c in m.iter_mut().take(k) {
                *c = rest % p;
                rest /= p;
            }
            if m[0] != 0 && fp::is_irreducible(&m, p) {
                return Field::extension(p, &m);
            }
            index += 1;
        }
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.0
    }

    /// Characteristic (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => *p,
            FieldDescriptor::ExtField { p, .. } => *p,
        }
    }

    /// Degree over the prime field (1 for the rationals).
    pub fn degree(&self) -> usize {
        match &*self.0 {
            FieldDescriptor::ExtField { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    /// Number of elements, if finite and representable.
    pub fn order(&self) -> Option<u128> {
        let p = self.characteristic();
        if p == 0 {
            return None;
        }
        (p as u128).checked_pow(self.degree() as u32)
    }

    fn width(&self) -> usize {
        self.degree()
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            FieldDescriptor::Rationals => Elem::Rat(BigRational::zero()),
            _ => Elem::Fq(vec![0; self.width()]),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        match &*self.0 {
            FieldDescriptor::Rationals => Elem::Rat(BigRational::from_integer(n.into())),
            _ => {
                let p = self.characteristic() as i64;
                let mut v = vec![0; self.width()];
                v[0] = n.rem_euclid(p) as u64;
                Elem::Fq(v)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &*self.0 {
            FieldDescriptor::Rationals => Elem::Rat(BigRational::from_integer(n.clone())),
            _ => {
                let p = BigInt::from(self.characteristic());
                let r = n.mod_floor(&p).to_u64().unwrap();
                let mut v = vec![0; self.width()];
                v[0] = r;
                Elem::Fq(v)
            }
        }
    }

    /// Image of a rational number; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Elem> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        self.div(&num, &den).ok_or_else(|| {
            Error::InvalidField(format!("denominator {} vanishes in {self}", q.denom()))
        })
    }

    /// The extension generator `a` (only for extension fields).
    pub fn generator(&self) -> Option<Elem> {
        match &*self.0 {
            FieldDescriptor::ExtField { .. } => {
                let mut v = vec![0; self.width()];
                v[1] = 1;
                Some(Elem::Fq(v))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Rat(r) => r.is_zero(),
            Elem::Fq(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Elem::Fq(x), Elem::Fq(y)) => {
                let p = self.characteristic();
                Elem::Fq(x.iter().zip(y).map(|(s, t)| (s + t) % p).collect())
            }
            _ => panic!("mixed field elements"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Rat(x) => Elem::Rat(-x),
            Elem::Fq(x) => {
                let p = self.characteristic();
                Elem::Fq(x.iter().map(|&s| (p - s) % p).collect())
            }
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Elem::Fq(x), Elem::Fq(y)) => {
                let p = self.characteristic();
                match &*self.0 {
                    FieldDescriptor::ExtField { modulus, .. } => {
                        let prod = fp::mul(x, y, p);
                        let (_, mut r) = fp::divrem(&prod, modulus, p);
                        r.resize(self.width(), 0);
                        Elem::Fq(r)
                    }
                    _ => Elem::Fq(vec![x[0] * y[0] % p]),
                }
            }
            _ => panic!("mixed field elements"),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        if self.is_zero(a) {
            return None;
        }
        match a {
            Elem::Rat(x) => Some(Elem::Rat(x.recip())),
            Elem::Fq(x) => {
                let p = self.characteristic();
                match &*self.0 {
                    FieldDescriptor::ExtField { modulus, .. } => {
                        let mut r = fp::inv_mod(x, modulus, p);
                        r.resize(self.width(), 0);
                        Some(Elem::Fq(r))
                    }
                    _ => Some(Elem::Fq(vec![fp::inv(x[0], p)])),
                }
            }
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Enumerates the elements of a finite field by index (`0 .. q`); over
    /// the rationals enumerates the integers `0, 1, -1, 2, -2, ...`.
    pub fn element_at(&self, mut index: u128) -> Elem {
        let p = self.characteristic() as u128;
        if p == 0 {
            let n = index.div_ceil(2) as i64;
            return self.from_i64(if index % 2 == 1 { n } else { -n });
        }
        let mut v = vec![0u64; self.width()];
        for c in v.iter_mut() {
            *c = (index % p) as u64;
            index /= p;
        }
        Elem::Fq(v)
    }

    /// Uniformly random element (finite fields) or a small random rational.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        match &*self.0 {
            FieldDescriptor::Rationals => {
                let n: i64 = rng.gen_range(-50..=50);
                let d: i64 = rng.gen_range(1..=12);
                Elem::Rat(BigRational::new(n.into(), d.into()))
            }
            _ => {
                let p = self.characteristic();
                Elem::Fq((0..self.width()).map(|_| rng.gen_range(0..p)).collect())
            }
        }
    }

    /// Whether the element lies in the prime subfield (or is rational).
    pub fn is_in_prime_field(&self, a: &Elem) -> bool {
        match a {
            Elem::Rat(_) => true,
            Elem::Fq(v) => v.iter().skip(1).all(|&c| c == 0),
        }
    }

    /// Maps an element of the prime subfield of `from` into `self`.
    pub fn embed_prime(&self, from: &Field, a: &Elem) -> Result<Elem> {
        if self.characteristic() != from.characteristic() || !from.is_in_prime_field(a) {
            return Err(Error::Mismatch(format!("cannot embed element of {from} into {self}")));
        }
        Ok(match a {
            Elem::Rat(r) => Elem::Rat(r.clone()),
            Elem::Fq(v) => {
                let mut w = vec![0; self.width()];
                w[0] = v[0];
                Elem::Fq(w)
            }
        })
    }

    /// Canonical text of an element. Extension elements print as a
    /// parenthesized polynomial in `a` when they have more than one term.
    pub fn format(&self, a: &Elem) -> String {
        match a {
            Elem::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Elem::Fq(v) => {
                let s = fp::to_string(v, "a");
                if v.iter().filter(|&&c| c != 0).count() > 1 {
                    format!("({s})")
                } else {
                    s
                }
            }
        }
    }

    /// Whether `a` is a negative rational (used by the printer for signs).
    pub(crate) fn is_negative(&self, a: &Elem) -> bool {
        matches!(a, Elem::Rat(r) if r.is_negative())
    }

    /// p-th root in a finite field (Frobenius inverse): `a^(q/p)`.
    pub fn pth_root(&self, a: &Elem) -> Elem {
        let p = self.characteristic();
        assert!(p != 0);
        let mut r = a.clone();
        for _ in 0..self.degree().saturating_sub(1) {
            r = self.pow(&r, p);
        }
        r
    }
}

/// Dense polynomials over a prime field, coefficients ascending. Used to build
/// and validate extension moduli.
pub(crate) mod fp {
    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        let (mut t, mut newt) = (0i64, 1i64);
        let (mut r, mut newr) = (p as i64, a as i64);
        while newr != 0 {
            let q = r / newr;
            (t, newt) = (newt, t - q * newt);
            (r, newr) = (newr, r - q * newr);
        }
        assert_eq!(r, 1, "{a} not invertible mod {p}");
        t.rem_euclid(p as i64) as u64
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut r: Vec<u64> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut r);
        r
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut r = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % p;
            }
        }
        trim(&mut r);
        r
    }

    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let mut b = b.to_vec();
        trim(&mut b);
        assert!(!b.is_empty(), "division by zero polynomial");
        if r.len() < b.len() {
            return (vec![], r);
        }
        let lc_inv = inv(*b.last().unwrap(), p);
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() * lc_inv % p;
            q[shift] = c;
            for (i, &y) in b.iter().enumerate() {
                r[i + shift] = (r[i + shift] + p - c * y % p) % p;
            }
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let (_, r) = divrem(&a, &b, p);
            a = b;
            b = r;
        }
        if let Some(&lc) = a.last() {
            let li = inv(lc, p);
            for c in a.iter_mut() {
                *c = *c * li % p;
            }
        }
        a
    }

    /// Inverse of `a` modulo the irreducible `m`.
    pub fn inv_mod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r1);
        let (mut s0, mut s1) = (vec![], vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant
        let c = inv(r0[0], p);
        let mut out: Vec<u64> = s0.iter().map(|&x| x * c % p).collect();
        let (_, rem) = divrem(&out, m, p);
        out = rem;
        out
    }

    /// `a^e mod m`.
    pub fn powmod(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut base = divrem(a, m, p).1;
        let mut acc = vec![1u64];
        while e > 0 {
            if e & 1 == 1 {
                acc = divrem(&mul(&acc, &base, p), m, p).1;
            }
            e >>= 1;
            if e > 0 {
                base = divrem(&mul(&base, &base, p), m, p).1;
            }
        }
        acc
    }

    fn prime_factors(mut n: usize) -> Vec<usize> {
        let mut out = vec![];
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                out.push(d);
                while n.is_multiple_of(d) {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(m: &[u64], p: u64) -> bool {
        let n = m.len() - 1;
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        // x^(p^i) mod m for i = 0..=n
        let mut frob = vec![divrem(&x, m, p).1];
        for i in 0..n {
            let next = powmod(&frob[i], p, m, p);
            frob.push(next);
        }
        if !sub(&frob[n], &x, p).is_empty() {
            return false;
        }
        for r in prime_factors(n) {
            let h = sub(&frob[n / r], &x, p);
            if gcd(&h, m, p).len() != 1 {
                return false;
            }
        }
        true
    }

    pub fn to_string(v: &[u64], var: &str) -> String {
        let mut parts = vec![];
        for (i, &c) in v.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, _) => c.to_string(),
                (1, 1) => var.to_string(),
                (1, _) => format!("{c}*{var}"),
                (_, 1) => format!("{var}^{i}"),
                _ => format!("{c}*{var}^{i}"),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}
