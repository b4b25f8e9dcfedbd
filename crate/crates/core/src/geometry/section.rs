use num_traits::Zero;
use serde::Serialize;

use super::{GeometryError, IgusaModel, ProjPoint};
use crate::algebra::{int, LinearForm, Matrix, Rational};
use crate::config::PairPartition;
use crate::poly::{local_quadratic_part, LinearParam, SparsePoly};

/// A basis of `{s₁ = ℓ = 0}`: two pivot coordinates (chosen as far right as
/// possible) are solved for, the remaining four are the chart coordinates.
pub fn hyperplane_chart(form: &LinearForm<Rational>) -> Result<(LinearParam, Vec<String>), GeometryError> {
    let n = form.nvars();
    let l = form.coeffs();
    let pivots = (0..n)
        .rev()
        .flat_map(|p1| (0..p1).rev().map(move |p2| (p1, p2)))
        .find(|&(p1, p2)| !(l[p1].clone() - l[p2].clone()).is_zero())
        .ok_or(GeometryError::DegenerateHyperplane)?;
    let (p1, p2) = pivots;
    let free: Vec<usize> = (0..n).filter(|&i| i != p1 && i != p2).collect();
    let block = Matrix::from_rows(vec![vec![l[p1].clone(), l[p2].clone()], vec![int(1), int(1)]], 2)
        .expect("2 x 2");
    let columns: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let sol = block.solve(&[-l[f].clone(), int(-1)]).expect("nonzero minor");
            let mut col = vec![int(0); n];
            col[f] = int(1);
            col[p1] = sol[0].clone();
            col[p2] = sol[1].clone();
            col
        })
        .collect();
    let names = free.iter().map(|i| format!("x{}", i + 1)).collect();
    Ok((LinearParam::from_columns(&columns)?, names))
}

#[derive(Clone, Debug, Serialize)]
pub struct Node {
    pub label: PairPartition,
    pub point: ProjPoint,
    /// The same point in chart coordinates.
    pub chart_point: ProjPoint,
}

/// The quartic surface cut on `{s₁ = ℓ = 0} ≅ P³` with its nodes.
#[derive(Clone, Debug, Serialize)]
pub struct SectionModel {
    pub form: LinearForm<Rational>,
    #[serde(skip)]
    pub chart: LinearParam,
    pub chart_names: Vec<String>,
    pub surface: SparsePoly,
    pub nodes: Vec<Node>,
}

impl SectionModel {
    pub fn node(&self, label: &PairPartition) -> Option<&Node> {
        self.nodes.iter().find(|n| n.label == *label)
    }

    pub fn has_node_at(&self, p: &ProjPoint) -> bool {
        self.nodes.iter().any(|n| n.point == *p)
    }
}

/// Intersects each singular line with `ker ℓ`.
pub fn hyperplane_section(m: &IgusaModel, form: &LinearForm<Rational>) -> Result<SectionModel, GeometryError> {
    let (chart, chart_names) = hyperplane_chart(form)?;
    let surface = m.f.restrict(&chart)?;
    let mut nodes: Vec<Node> = Vec::with_capacity(m.lines.len());
    for (alpha, phi) in &m.lines {
        let a = form.eval(&phi.matrix().column(0));
        let b = form.eval(&phi.matrix().column(1));
        if a.is_zero() && b.is_zero() {
            return Err(GeometryError::LineContained(*alpha));
        }
        let x = phi.apply(&[b, -a])?;
        let y = chart.preimage(&x).expect("point lies in the chart");
        let point = ProjPoint::from_rationals(&x).expect("nonzero");
        if let Some(other) = nodes.iter().find(|n| n.point == point) {
            return Err(GeometryError::NodeCollision(other.label, *alpha));
        }
        let chart_point = ProjPoint::from_rationals(&y).expect("nonzero");
        nodes.push(Node { label: *alpha, point, chart_point });
    }
    Ok(SectionModel { form: form.clone(), chart, chart_names, surface, nodes })
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeCheck {
    pub label: PairPartition,
    pub on_surface: bool,
    pub gradient_vanishes: bool,
    pub hessian_rank: usize,
    pub passed: bool,
}

/// Ordinary double point test: singular with a rank-3 quadratic part.
pub fn verify_node(s: &SectionModel, node: &Node) -> NodeCheck {
    let p = node.chart_point.to_rationals();
    let on_surface = s.surface.evaluate(&p).map(|v| v.is_zero()).unwrap_or(false);
    let gradient_vanishes = s
        .surface
        .gradient()
        .iter()
        .all(|g| g.evaluate(&p).map(|v| v.is_zero()).unwrap_or(false));
    let hessian_rank = local_quadratic_part(&s.surface, &p).map(|h| h.rank()).unwrap_or(0);
    NodeCheck {
        label: node.label,
        on_surface,
        gradient_vanishes,
        hessian_rank,
        passed: on_surface && gradient_vanishes && hessian_rank == 3,
    }
}

/// `y² = S` in `P(2,1,1,1,1)`.
#[derive(Clone, Debug, Serialize)]
pub struct CobleSection {
    pub weights: Vec<u32>,
    pub variables: Vec<String>,
    pub branch: SparsePoly,
    pub equation: String,
}

pub fn coble_section_equation(s: &SectionModel) -> CobleSection {
    let names: Vec<&str> = s.chart_names.iter().map(String::as_str).collect();
    let mut variables = vec!["y".to_string()];
    variables.extend(s.chart_names.iter().cloned());
    CobleSection {
        weights: vec![2, 1, 1, 1, 1],
        variables,
        branch: s.surface.clone(),
        equation: format!("y^2 = {}", s.surface.display_with(&names)),
    }
}

/// `4Σ₁⁵xᵢ⁴ − (Σ₁⁵xᵢ²)²` on `Σ₁⁵xᵢ = 0`, written in `x₁..x₄`.
pub fn coble_x6_reference() -> SparsePoly {
    let p2 = SparsePoly::power_sum(5, 2);
    let q = &SparsePoly::power_sum(5, 4).scale(&int(4)) - &p2.pow(2);
    let x5 = SparsePoly::linear(&[int(-1), int(-1), int(-1), int(-1), int(0)]);
    q.substitute(4, &x5).expect("5 variables").remap(4, &[0, 1, 2, 3, 0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_igusa;

    fn form(c: &[i64]) -> LinearForm<Rational> {
        LinearForm::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn chart_choice() {
        let (chart, names) = hyperplane_chart(&form(&[0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(names, ["x1", "x2", "x3", "x4"]);
        assert_eq!(
            chart.apply(&[int(1), int(2), int(3), int(4)]).unwrap(),
            vec![int(1), int(2), int(3), int(4), int(-10), int(0)]
        );
        let (_, names) = hyperplane_chart(&form(&[1, 2, 0, 0, 0, 0])).unwrap();
        assert_eq!(names, ["x1", "x3", "x4", "x5"]);
        assert!(hyperplane_chart(&form(&[2; 6])).is_err());
    }

    #[test]
    fn x6_section() {
        let m = build_igusa();
        let s = hyperplane_section(&m, &form(&[0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(s.nodes.len(), 15);
        let n = s.node(&"16|23|45".parse().unwrap()).unwrap();
        assert_eq!(n.point.to_string(), "(0:1:1:-1:-1:0)");
        let check = verify_node(&s, n);
        assert!(check.passed, "{check:?}");
        assert!(s.nodes.iter().all(|n| verify_node(&s, n).passed));
        assert_eq!(coble_section_equation(&s).branch, coble_x6_reference());
    }

    #[test]
    fn generic_a_section() {
        let m = build_igusa();
        let s = hyperplane_section(&m, &form(&[1, 3, 0, 0, 0, 0])).unwrap();
        assert!(s.nodes.iter().all(|n| verify_node(&s, n).passed));
        for p in [[0, 0, 1, 1, -1, -1], [0, 0, 1, -1, 1, -1], [0, 0, 1, -1, -1, 1]] {
            assert!(s.has_node_at(&ProjPoint::from_ints(&p).unwrap()));
        }
    }

    #[test]
    fn a_equal_2_meets_triple_points() {
        // l_{13|24|56}, l_{13|25|46}, l_{13|26|45} all pass through (2:-1:2:-1:-1:-1)
        let m = build_igusa();
        for c in [[1, 2, 0, 0, 0, 0], [2, 1, 0, 0, 0, 0]] {
            assert!(matches!(
                hyperplane_section(&m, &form(&c)),
                Err(GeometryError::NodeCollision(_, _))
            ));
        }
    }

    #[test]
    fn degenerate_sections() {
        let m = build_igusa();
        assert!(matches!(
            hyperplane_section(&m, &form(&[1, -1, 0, 0, 0, 0])),
            Err(GeometryError::LineContained(_))
        ));
        assert_eq!(
            hyperplane_section(&m, &form(&[1, 1, 1, 1, 1, 1])).unwrap_err(),
            GeometryError::DegenerateHyperplane
        );
    }
}
