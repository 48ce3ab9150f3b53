//! Restriction of the pencil to a freshly created exceptional curve.

use super::state::PairState;
use crate::algebra::{univariate_roots, Elem, UniPoly};
use crate::error::Result;

/// The map `E -> P^1` induced by `f / g`, in the affine coordinate `t = v/u`
/// of chart A. Numerator and denominator are coprime; the denominator is monic.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualMap {
    pub numerator: UniPoly,
    pub denominator: UniPoly,
    pub degree: usize,
}

impl ResidualMap {
    /// Number of distinct geometric points of `E` mapped to infinity.
    pub fn pole_count(&self) -> usize {
        let finite = self.denominator.radical().deg();
        finite + usize::from(self.numerator.deg() > self.denominator.deg())
    }

    /// Poles of the map lying over the base field; `None` stands for `t = ∞`.
    pub fn rational_poles(&self) -> Result<Vec<Option<Elem>>> {
        let mut out: Vec<Option<Elem>> = univariate_roots(&self.denominator)?
            .roots
            .into_iter()
            .map(|(r, _)| Some(r))
            .collect();
        if self.numerator.deg() > self.denominator.deg() {
            out.push(None);
        }
        Ok(out)
    }

    /// With a single pole, a coordinate `s` on `E` minus that pole in which the
    /// map is a polynomial `P(s)`. Returns `(pole, P)`.
    pub fn polynomial_form(&self) -> Result<Option<(Option<Elem>, UniPoly)>> {
        if self.pole_count() != 1 {
            return Ok(None);
        }
        let k = self.numerator.field().clone();
        if self.denominator.is_constant() {
            // s = t; the denominator is monic, hence 1
            return Ok(Some((None, self.numerator.with_var("s"))));
        }
        let poles = self.rational_poles()?;
        let Some(Some(r)) = poles.first().cloned() else {
            return Ok(None);
        };
        // t = r + 1/s, denominator (t - r)^e = s^-e,
        // numerator N(r + 1/s) = s^-n · rev(N(t + r))(s)
        let e = self.denominator.deg();
        let n = self.numerator.deg();
        let shifted = self.numerator.taylor_shift(&r).with_var("s");
        let rev = pad_reverse(&shifted, n);
        let mut coeffs = vec![k.zero(); e - n];
        coeffs.extend(rev.coeffs().iter().cloned());
        Ok(Some((Some(r), UniPoly::new(&k, "s", coeffs))))
    }

    pub fn eval(&self, t: &Elem) -> Option<Elem> {
        let k = self.numerator.field();
        k.div(&self.numerator.eval(t), &self.denominator.eval(t))
    }
}

/// `s^n · p(1/s)` for `deg p <= n`.
fn pad_reverse(p: &UniPoly, n: usize) -> UniPoly {
    let k = p.field();
    let coeffs = (0..=n).map(|i| p.coeff(n - i)).collect();
    UniPoly::new(k, p.var(), coeffs)
}

/// The residual map when the exceptional curve created by blowing up the
/// origin of `state` is dicritical: equal orders and non-proportional initial forms.
pub fn detect_dicritical(state: &PairState) -> Option<ResidualMap> {
    let m = state.m_f();
    if m == 0 || m != state.m_g() {
        return None;
    }
    let on_chart = |p: &crate::algebra::MultiPoly| {
        let k = p.field().clone();
        p.initial_form(m)
            .expect("order is m")
            .specialize(0, &k.one())
            .to_uni(1)
            .expect("only v remains")
            .with_var("t")
    };
    let nf = on_chart(&state.f_weak);
    let ng = on_chart(&state.g_weak);
    let h = nf.gcd(&ng);
    let num = nf.div_exact(&h).unwrap();
    let den = ng.div_exact(&h).unwrap();
    let degree = num.deg().max(den.deg());
    if degree == 0 {
        return None;
    }
    let lc = den.lc();
    let k = den.field().clone();
    let inv = k.inv(&lc).unwrap();
    Some(ResidualMap { numerator: num.scale(&inv), denominator: den.scale(&inv), degree })
}
