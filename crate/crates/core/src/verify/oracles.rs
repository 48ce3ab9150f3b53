//! Independent oracles: two computations of the local intersection number and
//! the balance vector of a monomial pencil.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{coprime, resultant, Elem, MultiPoly};
use crate::blowup::resolve_local;
use crate::error::{Error, Result};

/// Number of shears tried before giving up.
pub const SHEAR_ATTEMPTS: usize = 16;

/// `Σ s_f · s_g` over all blowups, strict orders at each center.
pub fn noether_intersection(f: &MultiPoly, g: &MultiPoly) -> Result<u32> {
    let tree = resolve_local(f, g, f.field(), 64)?;
    Ok(tree.nodes.iter().map(|n| n.s_f * n.s_g).sum())
}

fn shear(p: &MultiPoly, lambda: &Elem) -> MultiPoly {
    let x = p.var_like(0);
    let y = p.var_like(1);
    p.substitute(&[x.add(&y.scale(lambda)), y])
}

/// Order at `x = 0` of `Res_y` after a seeded shear `x -> x + λy` making the
/// `y`-leading coefficient of one generator constant and the origin the only
/// common zero on the line `x = 0`.
pub fn resultant_intersection(f: &MultiPoly, g: &MultiPoly, seed: u64) -> Result<u32> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.vanishes_at_origin() || !g.vanishes_at_origin() {
        return Err(Error::NotABasePoint);
    }
    if !coprime(f, g)? {
        return Err(Error::NotCoprime(crate::algebra::gcd_poly(f, g)?.to_string()));
    }
    let k = f.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..SHEAR_ATTEMPTS {
        let lambda = if attempt == 0 {
            k.zero()
        } else if k.is_finite() {
            k.random(&mut rng)
        } else {
            k.from_i64(rng.gen_range(-20..=20))
        };
        let (fs, gs) = (shear(f, &lambda), shear(g, &lambda));
        let monic_in_y = |p: &MultiPoly| p.degree_in(1) == p.total_degree();
        if !monic_in_y(&fs) && !monic_in_y(&gs) {
            continue;
        }
        let on_axis = |p: &MultiPoly| p.specialize(0, &k.zero()).to_uni(1).expect("univariate in y");
        let common = on_axis(&fs).gcd(&on_axis(&gs));
        // the only common root on x = 0 must be y = 0
        let only_origin = !common.is_zero() && common.coeffs()[..common.deg()].iter().all(|c| k.is_zero(c));
        if !only_origin {
            continue;
        }
        let r = resultant(&fs, &gs, 1)?;
        return Ok(r.coeffs().iter().take_while(|c| k.is_zero(c)).count() as u32);
    }
    Err(Error::ShearExhausted(SHEAR_ATTEMPTS))
}

/// The primitive positive `(p, q)` with `p·a + q·b = p·c + q·d`, the monomial
/// valuation balancing `x^a y^b` against `x^c y^d`.
pub fn monomial_dicritical_oracle(a: u32, b: u32, c: u32, d: u32) -> Result<Vec<(u32, u32)>> {
    if (a > 0 && c > 0) || (b > 0 && d > 0) {
        return Err(Error::NotCoprime(format!("x^{a}*y^{b} and x^{c}*y^{d} share a variable")));
    }
    if a + b == 0 || c + d == 0 {
        return Err(Error::NotABasePoint);
    }
    // p (a - c) = q (d - b)
    let lhs = a as i64 - c as i64;
    let rhs = d as i64 - b as i64;
    if lhs == 0 || rhs == 0 || lhs.signum() != rhs.signum() {
        return Ok(vec![]);
    }
    let (p, q) = (rhs.abs(), lhs.abs());
    let g = p.gcd(&q);
    Ok(vec![((p / g) as u32, (q / g) as u32)])
}

/// Same oracle on two single-term polynomials in `x, y`.
pub fn monomial_dicritical_oracle_poly(f: &MultiPoly, g: &MultiPoly) -> Result<Vec<(u32, u32)>> {
    let exps = |p: &MultiPoly| -> Result<(u32, u32)> {
        if p.num_terms() != 1 || p.nvars() != 2 {
            return Err(Error::NotMonomial(p.to_string()));
        }
        let (m, _) = p.leading_term().unwrap();
        Ok((m.0[0], m.0[1]))
    };
    let (a, b) = exps(f)?;
    let (c, d) = exps(g)?;
    monomial_dicritical_oracle(a, b, c, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Field};

    fn q(s: &str) -> MultiPoly {
        parse_poly(s, &Field::rationals(), &["x", "y"]).unwrap()
    }

    #[test]
    fn intersection_examples() {
        for (f, g, n) in [("x", "y", 1), ("x^2", "y", 2), ("y^2", "x^3", 6)] {
            assert_eq!(noether_intersection(&q(f), &q(g)).unwrap(), n);
            assert_eq!(resultant_intersection(&q(f), &q(g), 0).unwrap(), n);
        }
    }

    #[test]
    fn shears_avoid_other_zeros_on_the_axis() {
        // common zeros (0, 0) and (0, 1): the unsheared axis sees both
        let f = q("x + y^2 - y");
        let g = q("x*y + x^2 + y^3 - y^2");
        // g = x^2 + y·f, so the number is i(f, x^2) = 2
        assert_eq!(noether_intersection(&f, &g).unwrap(), 2);
        assert_eq!(resultant_intersection(&f, &g, 3).unwrap(), 2);
    }

    #[test]
    fn monomial_balance() {
        assert_eq!(monomial_dicritical_oracle(1, 0, 0, 1).unwrap(), vec![(1, 1)]);
        assert_eq!(monomial_dicritical_oracle(0, 2, 3, 0).unwrap(), vec![(2, 3)]);
        assert_eq!(monomial_dicritical_oracle(2, 0, 0, 2).unwrap(), vec![(1, 1)]);
        assert!(matches!(monomial_dicritical_oracle(1, 1, 1, 0), Err(Error::NotCoprime(_))));
        assert!(matches!(monomial_dicritical_oracle_poly(&q("x + y"), &q("y")), Err(Error::NotMonomial(_))));
        assert_eq!(monomial_dicritical_oracle_poly(&q("y^2"), &q("x^3")).unwrap(), vec![(2, 3)]);
    }
}
