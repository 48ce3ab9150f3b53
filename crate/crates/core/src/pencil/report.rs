//! Versioned JSON form of an analysis.
//!
//! Every polynomial is stored in canonical text form and every field element
//! through the field's printer, so the document is plain data and two runs on
//! the same input serialize byte-identically.

use serde::{Deserialize, Serialize};

use super::al::AlReport;
use super::PencilReport;
use crate::blowup::ResolutionTree;
use crate::verify::Check;

pub const REPORT_SCHEMA: &str = "dicritique-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub schema: String,
    pub field: String,
    pub pencil: PencilDoc,
    pub base_points: Vec<BasePointDoc>,
    pub dicriticals: Vec<DicriticalDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub abhyankar_luengo: Option<AlDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<Vec<Check>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilDoc {
    pub f: String,
    pub g: String,
    #[serde(rename = "F")]
    pub big_f: String,
    #[serde(rename = "G")]
    pub big_g: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasePointDoc {
    pub label: String,
    pub coords: Vec<String>,
    pub chart: String,
    pub local_vars: Vec<String>,
    pub f_local: String,
    pub g_local: String,
    pub tree: TreeDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDoc {
    pub nodes: Vec<NodeDoc>,
    /// Incidences between exceptional curves on the resolved surface.
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub id: usize,
    pub parent: Option<usize>,
    pub position: Option<String>,
    pub depth: usize,
    /// Root-chart coordinates in terms of the local coordinates `u, v`.
    pub substitution: [String; 2],
    pub m_f: u32,
    pub m_g: u32,
    pub s_f: u32,
    pub s_g: u32,
    pub divisor: DivisorDoc,
    pub residual: Option<ResidualDoc>,
    pub children: Vec<usize>,
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub extra: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorDoc {
    pub id: usize,
    pub v_x: u32,
    pub v_y: u32,
    pub v_f: u32,
    pub v_g: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualDoc {
    pub numerator: String,
    pub denominator: String,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DicriticalDoc {
    pub base_point: usize,
    pub divisor: usize,
    pub v_x: u32,
    pub v_y: u32,
    pub v_f: u32,
    pub v_g: u32,
    pub residual: ResidualDoc,
    pub poles: usize,
    pub center_path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlDoc {
    pub smooth_at: Vec<bool>,
    pub hypothesis: bool,
    pub dicriticals: Vec<PoleDoc>,
    pub fiber_connected: Option<bool>,
    pub verdict: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleDoc {
    pub record: usize,
    pub poles: usize,
    /// `"inf"` when the single pole is already at infinity.
    pub pole: Option<String>,
    pub polynomial: Option<String>,
}

fn tree_doc(t: &ResolutionTree) -> TreeDoc {
    let nodes = t
        .nodes
        .iter()
        .map(|n| {
            let d = t.divisor(n.divisor);
            NodeDoc {
                id: n.id,
                parent: n.parent,
                position: n.position.as_ref().map(|p| p.format(&t.field)),
                depth: n.depth,
                substitution: [n.state.to_root[0].to_string(), n.state.to_root[1].to_string()],
                m_f: n.m_f,
                m_g: n.m_g,
                s_f: n.s_f,
                s_g: n.s_g,
                divisor: DivisorDoc { id: d.id, v_x: d.v_x, v_y: d.v_y, v_f: d.v_f, v_g: d.v_g },
                residual: n.dicritical.as_ref().map(|r| ResidualDoc {
                    numerator: r.numerator.to_string(),
                    denominator: r.denominator.to_string(),
                    degree: r.degree,
                }),
                children: n.children.clone(),
                extra: n.forced,
            }
        })
        .collect();
    TreeDoc { nodes, edges: t.exceptional_edges().into_iter().map(|(a, b)| [a, b]).collect() }
}

fn al_doc(a: &AlReport) -> AlDoc {
    AlDoc {
        smooth_at: a.smooth_at.clone(),
        hypothesis: a.hypothesis,
        dicriticals: a
            .dicriticals
            .iter()
            .map(|d| PoleDoc {
                record: d.record,
                poles: d.poles,
                pole: d.polynomial.as_ref().map(|(p, _)| p.clone().unwrap_or_else(|| "inf".into())),
                polynomial: d.polynomial.as_ref().map(|(_, p)| p.to_string()),
            })
            .collect(),
        fiber_connected: a.fiber_connected,
        verdict: a.verdict(),
    }
}

impl ReportDoc {
    pub fn new(r: &PencilReport, al: Option<&AlReport>, verification: Option<Vec<Check>>) -> ReportDoc {
        let k = r.field();
        let p = &r.pencil;
        ReportDoc {
            schema: REPORT_SCHEMA.into(),
            field: k.to_string(),
            pencil: PencilDoc {
                f: p.f.to_string(),
                g: p.g.to_string(),
                big_f: p.big_f.to_string(),
                big_g: p.big_g.to_string(),
                degree: p.degree,
            },
            base_points: r
                .base_points
                .iter()
                .zip(&r.trees)
                .map(|(b, t)| BasePointDoc {
                    label: b.label(k),
                    coords: b.coords.iter().map(|c| k.format(c)).collect(),
                    chart: b.chart.to_string(),
                    local_vars: b.chart.coordinates().iter().map(|s| s.to_string()).collect(),
                    f_local: b.f_local.to_string(),
                    g_local: b.g_local.to_string(),
                    tree: tree_doc(t),
                })
                .collect(),
            dicriticals: r
                .dicriticals
                .iter()
                .map(|d| DicriticalDoc {
                    base_point: d.base_point,
                    divisor: d.divisor,
                    v_x: d.v_x,
                    v_y: d.v_y,
                    v_f: d.v_f,
                    v_g: d.v_g,
                    residual: ResidualDoc {
                        numerator: d.residual.numerator.to_string(),
                        denominator: d.residual.denominator.to_string(),
                        degree: d.degree,
                    },
                    poles: d.poles,
                    center_path: d.center_path.clone(),
                })
                .collect(),
            abhyankar_luengo: al.map(al_doc),
            verification,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// Pretty JSON for an analysis, with the Abhyankar–Luengo diagnostics.
pub fn report_json(r: &PencilReport, al: Option<&AlReport>) -> String {
    ReportDoc::new(r, al, None).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::pencil::{analyze, check_abhyankar_luengo, parse_pencil};

    #[test]
    fn json_round_trip() {
        let r = analyze(&parse_pencil("y^2", "x^3", &Field::rationals()).unwrap(), 64).unwrap();
        let al = check_abhyankar_luengo(&r).unwrap();
        let doc = ReportDoc::new(&r, Some(&al), None);
        let text = doc.to_json();
        let back: ReportDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.schema, REPORT_SCHEMA);
        assert_eq!(back.base_points[0].tree.nodes[2].divisor.v_f, 6);
        assert_eq!(text, report_json(&r, Some(&al)));
    }
}
