use num_traits::{One, Signed, Zero};

use super::{PolyError, SparsePoly};
use crate::algebra::{int, MatrixQ, Rational};

/// `root² = scale · f`, with `root` normalized to lex-leading coefficient 1
/// and `scale > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectSquare {
    pub root: SparsePoly,
    pub scale: Rational,
}

/// Square root of a homogeneous form up to a positive scalar.
///
/// Works term by term in lex order: the leading term of `q²` is the square of
/// the leading term of `q`, and each further term of `q` is read off from the
/// leading term of the current remainder. The answer is confirmed by
/// re-squaring.
pub fn perfect_square_root(f: &SparsePoly) -> Result<Option<PerfectSquare>, PolyError> {
    let Some(deg) = f.homogeneous_degree()? else {
        return Ok(Some(PerfectSquare { root: SparsePoly::zero(f.nvars()), scale: Rational::one() }));
    };
    if deg % 2 == 1 {
        return Ok(None);
    }
    let (lead_e, lead_c) = f.leading_term().expect("nonzero");
    if lead_e.iter().any(|k| k % 2 == 1) || lead_c.is_negative() {
        return Ok(None);
    }
    let scale = lead_c.recip();
    let target = f.scale(&scale);
    let half: Vec<u32> = lead_e.iter().map(|k| k / 2).collect();
    let lead_root = half.clone();
    let mut root = SparsePoly::monomial(half, Rational::one());
    // Each step removes the current leading term of the remainder, so the
    // number of steps is bounded by the number of monomials of degree `deg`.
    loop {
        let rem = &target - &(&root * &root);
        let Some((re, rc)) = rem.leading_term() else {
            break;
        };
        if re.as_slice() >= lead_e.as_slice() {
            return Ok(None);
        }
        let mut te = Vec::with_capacity(re.len());
        for (a, b) in re.iter().zip(&lead_root) {
            if a < b {
                return Ok(None);
            }
            te.push(a - b);
        }
        if te.iter().sum::<u32>() != deg / 2 || te >= lead_root {
            return Ok(None);
        }
        root = &root + &SparsePoly::monomial(te, rc / int(2));
    }
    debug_assert_eq!(&root * &root, target);
    Ok(Some(PerfectSquare { root, scale }))
}

/// Symmetric Gram matrix of a quadratic form.
pub fn gram_matrix(q: &SparsePoly) -> Result<MatrixQ, PolyError> {
    match q.homogeneous_degree()? {
        None | Some(2) => {}
        Some(d) => return Err(PolyError::WrongDegree { expected: 2, got: d }),
    }
    let n = q.nvars();
    let mut g = vec![Rational::zero(); n * n];
    for (e, c) in q.terms() {
        let idx: Vec<usize> = e
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat(i).take(k as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            g[i * n + i] = c.clone();
        } else {
            let half = c / int(2);
            g[i * n + j] = half.clone();
            g[j * n + i] = half;
        }
    }
    Ok(MatrixQ::new(n, n, g)?)
}

/// Rank of the Gram matrix of a quadratic form.
pub fn quadratic_rank(q: &SparsePoly) -> Result<usize, PolyError> {
    Ok(gram_matrix(q)?.rank())
}

/// Hessian of the affine equation of `f` at a singular point, in the chart
/// where the coordinate of largest absolute value is set to 1.
pub fn local_quadratic_part(f: &SparsePoly, point: &[Rational]) -> Result<MatrixQ, PolyError> {
    if point.len() != f.nvars() {
        return Err(PolyError::Dimension { expected: f.nvars(), got: point.len() });
    }
    let (k, pivot) = point
        .iter()
        .enumerate()
        .fold(None::<(usize, &Rational)>, |best, (i, x)| match best {
            Some((_, b)) if b.abs() >= x.abs() => best,
            _ => Some((i, x)),
        })
        .ok_or(PolyError::ZeroPoint)?;
    if pivot.is_zero() {
        return Err(PolyError::ZeroPoint);
    }
    let inv = pivot.recip();
    let p: Vec<Rational> = point.iter().map(|x| x * &inv).collect();
    if !f.evaluate(&p)?.is_zero() {
        return Err(PolyError::NotOnHypersurface);
    }
    let grad = f.gradient();
    for g in &grad {
        if !g.evaluate(&p)?.is_zero() {
            return Err(PolyError::NotSingular);
        }
    }
    let chart: Vec<usize> = (0..f.nvars()).filter(|&i| i != k).collect();
    let m = chart.len();
    let mut h = Vec::with_capacity(m * m);
    for &i in &chart {
        let gi = &grad[i];
        for &j in &chart {
            h.push(gi.partial(j).evaluate(&p)?);
        }
    }
    Ok(MatrixQ::new(m, m, h)?)
}
