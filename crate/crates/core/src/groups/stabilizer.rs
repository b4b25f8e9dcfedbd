use super::{symmetric_group, CharacterVector, FiniteGroup, GroupError};
use crate::algebra::{proportional_mod, Field, LinearForm, Matrix, QOmega};
use crate::par;

fn check_hyperplane<K: Field>(form: &LinearForm<K>) -> Result<LinearForm<K>, GroupError> {
    let n = form.nvars();
    let s1 = LinearForm::sum_form(n);
    let m = Matrix::from_rows(vec![form.coeffs().to_vec(), s1.coeffs().to_vec()], n)
        .map_err(|e| GroupError::Dimension(e.to_string()))?;
    if m.rank() < 2 {
        return Err(GroupError::DegenerateHyperplane);
    }
    Ok(s1)
}

/// `{σ ∈ Sₙ : ℓ∘σ = c·ℓ + d·s₁, c ≠ 0}` for a form on `n` coordinates.
pub fn hyperplane_stabilizer(form: &LinearForm<QOmega>) -> Result<FiniteGroup, GroupError> {
    let s1 = check_hyperplane(form)?;
    let sn = symmetric_group(form.nvars());
    let kept = par::filter(sn.elements(), |g| proportional_mod(&g.act_on_form(form), form, &s1).is_some());
    FiniteGroup::from_element_set(form.nvars(), &kept)
}

/// The degree-one character `g ↦ c` with `ℓ∘g = c·ℓ + d·s₁`.
pub fn scaling_character(g: &FiniteGroup, form: &LinearForm<QOmega>) -> Result<CharacterVector, GroupError> {
    let s1 = check_hyperplane(form)?;
    if form.nvars() != g.degree() {
        return Err(GroupError::Dimension(format!(
            "form in {} variables, group on {} points",
            form.nvars(),
            g.degree()
        )));
    }
    if let Some(bad) = g
        .elements()
        .iter()
        .find(|x| proportional_mod(&x.act_on_form(form), form, &s1).is_none())
    {
        return Err(GroupError::NotStabilized(format!("{form} (moved by {bad})")));
    }
    Ok(CharacterVector::from_fn(g, |x| {
        proportional_mod(&x.act_on_form(form), form, &s1).expect("checked above").0
    }))
}
