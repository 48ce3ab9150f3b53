//! Roots of univariate polynomials lying in the base field.
//!
//! Finite fields: the distinct roots are the linear part `gcd(u, t^q - t)`,
//! split by equal-degree (Cantor–Zassenhaus) splitting with a fixed-seed RNG;
//! multiplicities come from repeated division. Rationals: candidate roots
//! `±d/e` with `d` dividing the trailing and `e` the leading coefficient of the
//! primitive integer multiple.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Elem, Field};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Roots in the field, plus what is left over.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    /// Distinct roots with multiplicities, sorted.
    pub roots: Vec<(Elem, usize)>,
    /// The cofactor without roots in the field, when nonconstant.
    pub residual: Option<UniPoly>,
    /// Smallest degree of an irreducible factor of the residual: exact over
    /// finite fields; over the rationals exact up to degree 3, otherwise the
    /// residual degree.
    pub extension_degree: Option<usize>,
}

impl RootReport {
    pub fn has_residual(&self) -> bool {
        self.residual.is_some()
    }
}

pub fn univariate_roots(u: &UniPoly) -> Result<RootReport> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let k = u.field().clone();
    let distinct = if k.is_finite() { finite_field_roots(u) } else { rational_roots(u) };
    let mut rest = u.clone();
    let mut roots = vec![];
    for r in distinct {
        let m = rest.root_multiplicity(&r);
        let lin = UniPoly::linear_root(&k, u.var(), &r);
        rest = rest.div_exact(&lin.pow(m as u64)).unwrap();
        roots.push((r, m));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let (residual, extension_degree) = if rest.is_constant() {
        (None, None)
    } else {
        let d = if k.is_finite() {
            smallest_factor_degree(&rest)
        } else {
            rest.deg()
        };
        (Some(rest.monic()), Some(d))
    };
    Ok(RootReport { roots, residual, extension_degree })
}

fn field_size(k: &Field) -> BigUint {
    BigUint::from(k.characteristic()).pow(k.degree() as u32)
}

fn pow_mod_big(base: &UniPoly, e: &BigUint, m: &UniPoly) -> UniPoly {
    let mut acc = UniPoly::constant(base.field(), base.var(), base.field().one()).rem(m);
    let b = base.rem(m);
    for i in (0..e.bits()).rev() {
        acc = acc.mul(&acc).rem(m);
        if e.bit(i) {
            acc = acc.mul(&b).rem(m);
        }
    }
    acc
}

/// `h^q mod m` via `k` successive `p`-th powers.
fn frobenius_mod(h: &UniPoly, m: &UniPoly) -> UniPoly {
    let k = h.field();
    let mut r = h.rem(m);
    for _ in 0..k.degree() {
        r = r.pow_mod(k.characteristic(), m);
    }
    r
}

fn t_var(u: &UniPoly) -> UniPoly {
    UniPoly::new(u.field(), u.var(), vec![u.field().zero(), u.field().one()])
}

fn finite_field_roots(u: &UniPoly) -> Vec<Elem> {
    let rad = u.radical();
    if rad.is_constant() {
        return vec![];
    }
    let t = t_var(&rad);
    let tq = frobenius_mod(&t, &rad);
    let lin = rad.gcd(&tq.sub(&t));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = vec![];
    split_linear(&lin, &mut rng, &mut out);
    out
}

/// Splits a monic product of distinct linear factors.
fn split_linear(g: &UniPoly, rng: &mut ChaCha8Rng, out: &mut Vec<Elem>) {
    let k = g.field().clone();
    match g.degree() {
        None | Some(0) => return,
        Some(1) => {
            out.push(k.neg(&g.monic().coeff(0)));
            return;
        }
        _ => {}
    }
    let p = k.characteristic();
    loop {
        let a = k.random(rng);
        let h = if p == 2 {
            // trace of a*t: sum of its 2^i-th powers, i < degree
            let mut acc = UniPoly::zero(&k, g.var());
            let mut pw = UniPoly::new(&k, g.var(), vec![k.zero(), a.clone()]).rem(g);
            for _ in 0..k.degree() {
                acc = acc.add(&pw);
                pw = pw.mul(&pw).rem(g);
            }
            acc
        } else {
            let shifted = UniPoly::new(&k, g.var(), vec![a.clone(), k.one()]);
            let e = (field_size(&k) - 1u32) / 2u32;
            pow_mod_big(&shifted, &e, g).sub(&UniPoly::constant(&k, g.var(), k.one()))
        };
        let d = g.gcd(&h);
        if !d.is_constant() && d.deg() < g.deg() {
            let other = g.div_exact(&d).unwrap();
            split_linear(&d, rng, out);
            split_linear(&other, rng, out);
            return;
        }
    }
}

fn smallest_factor_degree(u: &UniPoly) -> usize {
    let rad = u.radical();
    let t = t_var(&rad);
    let mut h = t.clone();
    for j in 1..=rad.deg() {
        h = frobenius_mod(&h, &rad);
        if !rad.gcd(&h.sub(&t)).is_constant() {
            return j;
        }
    }
    rad.deg()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = vec![];
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1_000_000u32);
    while &d * &d <= n && d < bound {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        // either prime or a product of primes above the trial bound
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = vec![];
        for x in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(x * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

fn rational_roots(u: &UniPoly) -> Vec<Elem> {
    let k = u.field().clone();
    let coeffs: Vec<BigRational> = u
        .coeffs()
        .iter()
        .map(|c| match c {
            Elem::Rat(r) => r.clone(),
            _ => unreachable!(),
        })
        .collect();
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
    let mut out = vec![];
    let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        out.push(k.zero());
        ints.drain(..lead_zeros);
    }
    if ints.len() <= 1 {
        return out;
    }
    let trailing = ints[0].clone();
    let leading = ints.last().unwrap().clone();
    let eval = |num: &BigInt, den: &BigInt| -> bool {
        // homogeneous Horner: sum c_i num^i den^(n-i)
        let n = ints.len() - 1;
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        let mut terms = vec![];
        for _ in 0..=n {
            terms.push(den_pow.clone());
            den_pow *= den;
        }
        let mut num_pow = BigInt::one();
        for (i, c) in ints.iter().enumerate() {
            acc += c * &num_pow * &terms[n - i];
            num_pow *= num;
        }
        acc.is_zero()
    };
    let mut seen = std::collections::BTreeSet::new();
    for d in divisors(&trailing) {
        for e in divisors(&leading) {
            if !d.gcd(&e).is_one() {
                continue;
            }
            for num in [d.clone(), -d.clone()] {
                if eval(&num, &e) {
                    let r = BigRational::new(num, e.clone());
                    if seen.insert(r.clone()) {
                        out.push(Elem::Rat(r));
                    }
                }
            }
        }
    }
    out
}
