use serde::Serialize;

use super::{hyperplane_chart, GeometryError};
use crate::algebra::{int, LinearForm, Matrix, Rational};
use crate::config::{PairPartition, TriplePartition};
use crate::par;
use crate::poly::{perfect_square_root, quadratic_rank, LinearParam, SparsePoly};

/// `F = 4s₄ − s₂²` on `P⁴ = {s₁ = 0}` with its 15 singular lines.
#[derive(Clone, Debug)]
pub struct IgusaModel {
    pub f: SparsePoly,
    pub s1: SparsePoly,
    pub lines: Vec<(PairPartition, LinearParam)>,
}

impl IgusaModel {
    pub fn line(&self, alpha: &PairPartition) -> &LinearParam {
        &self.lines.iter().find(|(a, _)| a == alpha).expect("all 15 lines stored").1
    }
}

pub fn build_igusa() -> IgusaModel {
    let s2 = SparsePoly::power_sum(6, 2);
    let f = &SparsePoly::power_sum(6, 4).scale(&int(4)) - &s2.pow(2);
    let s1 = SparsePoly::power_sum(6, 1);
    let lines = PairPartition::all()
        .into_iter()
        .map(|alpha| {
            // x_a = x_b, x_c = x_d, x_e = x_f, s₁ = 0
            let mut rows = Vec::new();
            for [a, b] in alpha.pairs() {
                let mut r = vec![int(0); 6];
                r[a as usize - 1] = int(1);
                r[b as usize - 1] = int(-1);
                rows.push(r);
            }
            rows.push(vec![int(1); 6]);
            let system = Matrix::from_rows(rows, 6).expect("4 x 6");
            let kernel = system.kernel_basis();
            assert_eq!(kernel.len(), 2, "line system for {alpha} has a 2-dimensional solution space");
            let param = alpha.line_param();
            let mut span = kernel.clone();
            span.extend(param.matrix().transpose().to_rows());
            assert_eq!(Matrix::from_rows(span, 6).expect("rows").rank(), 2);
            (alpha, param)
        })
        .collect();
    IgusaModel { f, s1, lines }
}

/// `∇F − (Σ∂F/n)·(1,…,1)`: the part of the gradient tangent to `{s₁ = 0}`.
pub fn tangential_gradient(f: &SparsePoly) -> Vec<SparsePoly> {
    let n = f.nvars();
    let grad = f.gradient();
    let mut mean = SparsePoly::zero(n);
    for g in &grad {
        mean = &mean + g;
    }
    let mean = mean.scale(&Rational::new(1.into(), (n as i64).into()));
    grad.iter().map(|g| g - &mean).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct LineIdentity {
    pub line: PairPartition,
    /// The six ambient partials restricted to the line; on the singular
    /// lines they coincide, so the gradient is normal to `{s₁ = 0}`.
    pub ambient_partials: Vec<SparsePoly>,
    pub ambient_partials_equal: bool,
    pub tangential_vanishes: Vec<bool>,
    pub on_quartic: bool,
    pub in_ambient: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularLineReport {
    pub lines: Vec<LineIdentity>,
    pub identities_checked: usize,
    pub identities_holding: usize,
    pub all_hold: bool,
}

/// Checks one parametrized line; exposed for negative controls.
pub fn line_identity(m: &IgusaModel, line: PairPartition, phi: &LinearParam) -> LineIdentity {
    let restrict = |p: &SparsePoly| p.restrict(phi).expect("6 variables");
    let ambient_partials: Vec<SparsePoly> = m.f.gradient().iter().map(restrict).collect();
    let tangential_vanishes = tangential_gradient(&m.f).iter().map(|g| restrict(g).is_zero()).collect();
    LineIdentity {
        line,
        ambient_partials_equal: ambient_partials.windows(2).all(|w| w[0] == w[1]),
        ambient_partials,
        tangential_vanishes,
        on_quartic: restrict(&m.f).is_zero(),
        in_ambient: restrict(&m.s1).is_zero(),
    }
}

/// The 90 identities "tangential partial of F vanishes along l_α".
pub fn verify_singular_lines(m: &IgusaModel) -> SingularLineReport {
    let lines: Vec<LineIdentity> = par::map(&m.lines, |(a, phi)| line_identity(m, *a, phi));
    let identities_checked = lines.iter().map(|l| l.tangential_vanishes.len()).sum();
    let identities_holding = lines.iter().flat_map(|l| &l.tangential_vanishes).filter(|&&b| b).count();
    let all_hold = identities_holding == identities_checked
        && lines.iter().all(|l| l.on_quartic && l.in_ambient);
    SingularLineReport { lines, identities_checked, identities_holding, all_hold }
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleQuadric {
    pub beta: TriplePartition,
    pub chart: Vec<String>,
    /// `F|H_β = scale · quadric²`.
    pub quadric: SparsePoly,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub scale: Rational,
    pub rank: usize,
}

pub fn double_quadric(m: &IgusaModel, beta: TriplePartition) -> Result<DoubleQuadric, GeometryError> {
    let form = LinearForm::new(beta.hyperplane_coeffs());
    let (chart, names) = hyperplane_chart(&form)?;
    let restricted = m.f.restrict(&chart)?;
    let sq = perfect_square_root(&restricted)?.ok_or(GeometryError::NotASquare(beta))?;
    let rank = quadratic_rank(&sq.root)?;
    Ok(DoubleQuadric { beta, chart: names, quadric: sq.root, scale: sq.scale, rank })
}

#[derive(Clone, Debug, Serialize)]
pub struct RulingSplit {
    pub beta: TriplePartition,
    pub families: [Vec<PairPartition>; 2],
    /// Rank of the 6×4 matrix of both lines' spanning vectors, per pair of
    /// the six lines in order: 4 means disjoint, 3 means meeting.
    pub pair_ranks: Vec<(PairPartition, PairPartition, usize)>,
}

fn joint_rank(a: &LinearParam, b: &LinearParam) -> usize {
    let mut cols = a.matrix().transpose().to_rows();
    cols.extend(b.matrix().transpose().to_rows());
    Matrix::from_rows(cols, 6).expect("rows").rank()
}

/// Splits the six lines on `H_β` into two pairwise-disjoint triples.
pub fn ruling_split(m: &IgusaModel, beta: TriplePartition) -> Result<RulingSplit, GeometryError> {
    let h = SparsePoly::linear(&beta.hyperplane_coeffs());
    let on: Vec<&(PairPartition, LinearParam)> =
        m.lines.iter().filter(|(_, phi)| h.restrict(phi).expect("6 variables").is_zero()).collect();
    let fail = |why: String| GeometryError::NoBipartition(beta, why);
    if on.len() != 6 {
        return Err(fail(format!("{} lines on the hyperplane", on.len())));
    }
    let mut meets = vec![vec![false; 6]; 6];
    let mut pair_ranks = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let r = joint_rank(&on[i].1, &on[j].1);
            meets[i][j] = r < 4;
            meets[j][i] = r < 4;
            pair_ranks.push((on[i].0, on[j].0, r));
        }
    }
    let first: Vec<usize> = (0..6).filter(|&j| j == 0 || !meets[0][j]).collect();
    let second: Vec<usize> = (0..6).filter(|j| !first.contains(j)).collect();
    if first.len() != 3 {
        return Err(fail(format!("family of l_{} has {} lines", on[0].0, first.len())));
    }
    let within = |fam: &[usize]| fam.iter().all(|&i| fam.iter().all(|&j| i == j || !meets[i][j]));
    if !within(&first) || !within(&second) {
        return Err(fail("two lines of one family meet".into()));
    }
    if !first.iter().all(|&i| second.iter().all(|&j| meets[i][j])) {
        return Err(fail("two lines of different families are disjoint".into()));
    }
    let names = |fam: &[usize]| fam.iter().map(|&i| on[i].0).collect::<Vec<_>>();
    Ok(RulingSplit { beta, families: [names(&first), names(&second)], pair_ranks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::groups::symmetric_group;

    #[test]
    fn model_basics() {
        let m = build_igusa();
        assert_eq!(m.lines.len(), 15);
        let f_at = m
            .f
            .evaluate(&[int(1), int(-1), int(0), int(0), int(0), int(0)])
            .unwrap();
        assert_eq!(f_at, int(4));
        let x = m.line(&"12|34|56".parse().unwrap()).apply(&[int(1), int(2)]).unwrap();
        assert_eq!(x, vec![int(1), int(1), int(2), int(2), int(-3), int(-3)]);
    }

    #[test]
    fn f_is_symmetric() {
        let m = build_igusa();
        for s in symmetric_group(6).elements() {
            let mapping = s.images();
            assert_eq!(m.f.remap(6, &mapping), m.f);
        }
    }

    #[test]
    fn singular_lines() {
        let m = build_igusa();
        let r = verify_singular_lines(&m);
        assert_eq!(r.identities_checked, 90);
        assert!(r.all_hold);
        // ambient partials agree but do not vanish: -16tu(t+u)
        let l = &r.lines[0];
        assert!(l.ambient_partials_equal);
        let t = SparsePoly::var(2, 0);
        let u = SparsePoly::var(2, 1);
        let expected = (&(&t * &u) * &(&t + &u)).scale(&int(-16));
        assert_eq!(l.ambient_partials[0], expected);
    }

    #[test]
    fn non_singular_line_fails() {
        let m = build_igusa();
        // x₁ = x₂ = t, x₃ = x₄ = −t, x₅ = −x₆ = v
        let phi = LinearParam::from_columns(&[
            vec![int(1), int(1), int(-1), int(-1), int(0), int(0)],
            vec![int(0), int(0), int(0), int(0), int(1), int(-1)],
        ])
        .unwrap();
        let li = line_identity(&m, "12|34|56".parse().unwrap(), &phi);
        assert!(li.in_ambient);
        assert!(li.tangential_vanishes.iter().any(|&b| !b));
    }

    #[test]
    fn double_quadrics_have_rank_4() {
        let m = build_igusa();
        for beta in TriplePartition::all() {
            let dq = double_quadric(&m, beta).unwrap();
            assert_eq!(dq.rank, 4, "{beta}");
            assert!(dq.scale > rat(0, 1));
        }
    }

    #[test]
    fn generic_hyperplane_is_not_a_square() {
        let m = build_igusa();
        let form = LinearForm::new(vec![int(1), int(2), int(3), int(0), int(0), int(0)]);
        let (chart, _) = hyperplane_chart(&form).unwrap();
        let r = m.f.restrict(&chart).unwrap();
        assert!(perfect_square_root(&r).unwrap().is_none());
    }

    #[test]
    fn rulings_split_three_three() {
        let m = build_igusa();
        for beta in TriplePartition::all() {
            let s = ruling_split(&m, beta).unwrap();
            assert_eq!(s.families[0].len(), 3);
            assert_eq!(s.families[1].len(), 3);
            let mut ranks: Vec<usize> = s.pair_ranks.iter().map(|p| p.2).collect();
            ranks.sort();
            assert_eq!(ranks, [vec![3; 9], vec![4; 6]].concat());
        }
    }
}
