//! Single-pole and connected-fiber diagnostics for pencils whose reduced
//! curve `{G = 0}` is smooth at every base point.

use super::graph::fiber_over_o;
use super::PencilReport;
use crate::algebra::{squarefree_part, UniPoly};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct DicriticalPoles {
    /// Index into the report's dicritical records.
    pub record: usize,
    pub poles: usize,
    /// The pole sent to infinity (`None` when it already is `t = ∞`) and the
    /// map as a polynomial in the new coordinate.
    pub polynomial: Option<(Option<String>, UniPoly)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlReport {
    /// Smoothness of the reduced `{G = 0}` at each base point.
    pub smooth_at: Vec<bool>,
    pub hypothesis: bool,
    /// Filled only when the hypothesis holds.
    pub dicriticals: Vec<DicriticalPoles>,
    pub fiber_connected: Option<bool>,
}

impl AlReport {
    /// `None` when the hypothesis fails and the checks do not apply.
    pub fn verdict(&self) -> Option<bool> {
        if !self.hypothesis {
            return None;
        }
        let single = self.dicriticals.iter().all(|d| d.poles == 1 && d.polynomial.is_some());
        Some(single && self.fiber_connected == Some(true))
    }
}

pub fn check_abhyankar_luengo(report: &PencilReport) -> Result<AlReport> {
    let k = report.field();
    let c_red = squarefree_part(&report.pencil.big_g)?;
    let grad: Vec<_> = (0..3).map(|i| c_red.derivative(i)).collect();
    let smooth_at: Vec<bool> = report
        .base_points
        .iter()
        .map(|b| grad.iter().any(|d| !k.is_zero(&d.eval(&b.coords))))
        .collect();
    let hypothesis = smooth_at.iter().all(|&s| s);
    if !hypothesis {
        return Ok(AlReport { smooth_at, hypothesis, dicriticals: vec![], fiber_connected: None });
    }
    let mut dicriticals = vec![];
    for (i, d) in report.dicriticals.iter().enumerate() {
        let polynomial = d
            .residual
            .polynomial_form()?
            .map(|(pole, p)| (pole.map(|r| k.format(&r)), p));
        dicriticals.push(DicriticalPoles { record: i, poles: d.poles, polynomial });
    }
    let fiber = fiber_over_o(report)?;
    Ok(AlReport { smooth_at, hypothesis, dicriticals, fiber_connected: Some(fiber.connected) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::blowup::ResidualMap;
    use crate::pencil::{analyze, parse_pencil};

    fn al(f: &str, g: &str) -> AlReport {
        let r = analyze(&parse_pencil(f, g, &Field::rationals()).unwrap(), 64).unwrap();
        check_abhyankar_luengo(&r).unwrap()
    }

    #[test]
    fn smooth_reduced_curve() {
        for (f, g) in [("y - x^2", "1"), ("x", "y")] {
            let a = al(f, g);
            assert!(a.hypothesis);
            assert!(a.dicriticals.iter().all(|d| d.poles == 1));
            assert_eq!(a.verdict(), Some(true), "{f}, {g}");
        }
    }

    #[test]
    fn nodal_reduced_curve_skips_checks() {
        // G = YZ has a node at (1:0:0), a base point of the pencil
        let a = al("x*y + 1", "y");
        assert!(!a.hypothesis);
        assert_eq!(a.verdict(), None);
        assert!(a.dicriticals.is_empty());
    }

    #[test]
    fn pole_at_zero_becomes_polynomial() {
        let q = Field::rationals();
        let r = ResidualMap {
            numerator: UniPoly::from_i64(&q, "t", &[1, 0, 1]),
            denominator: UniPoly::from_i64(&q, "t", &[0, 0, 1]),
            degree: 2,
        };
        let (pole, p) = r.polynomial_form().unwrap().unwrap();
        assert_eq!(pole, Some(q.zero()));
        assert_eq!(p, UniPoly::from_i64(&q, "s", &[1, 0, 1]));
    }
}
