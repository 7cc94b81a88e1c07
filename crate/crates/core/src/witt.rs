//! Witt classes of nondegenerate quadratic forms: direct sums, isotropic
//! reduction to anisotropic kernels and isometry.

use crate::abgroup::{enumerate_subgroups_where, FinAbGroup, Hom, Subgroup};
use crate::algmod::local_category_of_form;
use crate::arith::lcm;
use crate::braided::{is_nondegenerate, quadratic_check, QuadraticForm};
use crate::error::{Error, Result};

/// `q(g₁, g₂) = q₁(g₁) + q₂(g₂)` on `G₁ × G₂`.
pub fn direct_sum(a: &QuadraticForm, b: &QuadraticForm) -> Result<QuadraticForm> {
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.modulus(),
            right: b.modulus(),
        });
    }
    let ra = a.group().rank();
    let g = a.group().direct_product(b.group());
    QuadraticForm::from_fn(&g, a.modulus(), |x| a.at(&x[..ra]) as i64 + b.at(&x[ra..]) as i64)
}

/// Both forms read in the least common modulus.
pub fn common_modulus(a: &QuadraticForm, b: &QuadraticForm) -> Result<(QuadraticForm, QuadraticForm)> {
    let m = lcm(a.modulus() as u64, b.modulus() as u64);
    let m = u32::try_from(m).map_err(|_| Error::InvalidModulus(0))?;
    Ok((a.lift(m)?, b.lift(m)?))
}

/// All subgroups on which `q` vanishes.
pub fn isotropic_subgroups(q: &QuadraticForm, bound: usize) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_where(q.group(), bound, |s, x| {
        q.at(x) == 0 && s.canonical_basis().iter().all(|y| q.polar(x, y) == 0)
    })
}

fn has_isotropic_element(q: &QuadraticForm) -> bool {
    q.group().elements().iter().any(|x| !q.group().is_zero(x) && q.at(x) == 0)
}

/// No nontrivial isotropic subgroup. Decided from the subgroup lattice and
/// from isotropic elements (`q(kx) = k²q(x)`), which must agree.
pub fn is_anisotropic(q: &QuadraticForm, bound: usize) -> Result<bool> {
    if let Some(w) = quadratic_check(q).witness {
        return Err(Error::Precondition(format!("not a quadratic form: {} fails at {:?}", w.condition, w.args)));
    }
    let by_subgroups = isotropic_subgroups(q, bound)?.len() == 1;
    let by_elements = !has_isotropic_element(q);
    if by_subgroups != by_elements {
        return Err(Error::Precondition("isotropy tests disagree".into()));
    }
    Ok(by_subgroups)
}

#[derive(Debug, Clone)]
pub struct ReductionStep {
    /// Isotropic subgroup of the form being reduced at this step.
    pub subgroup: Subgroup,
    pub quotient: FinAbGroup,
}

#[derive(Debug, Clone)]
pub struct WittClassWitness {
    pub representative: QuadraticForm,
    pub kernel: QuadraticForm,
    pub trace: Vec<ReductionStep>,
}

/// `(H⊥/H, q̄)`.
pub fn reduce_by(q: &QuadraticForm, h: &Subgroup) -> Result<QuadraticForm> {
    Ok(local_category_of_form(q, h)?.form)
}

fn require_nondegenerate(q: &QuadraticForm) -> Result<()> {
    if !is_nondegenerate(q)? {
        return Err(Error::Precondition(
            "form is degenerate; split off the radical before reducing".into(),
        ));
    }
    Ok(())
}

/// Reduces by a largest isotropic subgroup (least canonical basis among
/// those) until no isotropic subgroup is left.
pub fn anisotropic_kernel(q: &QuadraticForm, bound: usize) -> Result<WittClassWitness> {
    require_nondegenerate(q)?;
    let mut current = q.clone();
    let mut trace = Vec::new();
    loop {
        let subs = isotropic_subgroups(&current, bound)?;
        let top = subs.last().expect("trivial subgroup").order();
        if top == 1 {
            break;
        }
        let h = subs.into_iter().find(|s| s.order() == top).expect("maximal order present");
        let next = reduce_by(&current, &h)?;
        trace.push(ReductionStep {
            subgroup: h,
            quotient: next.group().clone(),
        });
        current = next;
    }
    Ok(WittClassWitness {
        representative: q.clone(),
        kernel: current,
        trace,
    })
}

/// Kernels reached by every sequence of reductions by nontrivial isotropic
/// subgroups.
pub fn all_reduction_kernels(q: &QuadraticForm, bound: usize) -> Result<Vec<QuadraticForm>> {
    require_nondegenerate(q)?;
    let mut out = Vec::new();
    let mut stack = vec![q.clone()];
    while let Some(f) = stack.pop() {
        let subs = isotropic_subgroups(&f, bound)?;
        if subs.len() == 1 {
            out.push(f);
            continue;
        }
        for h in subs.iter().skip(1) {
            stack.push(reduce_by(&f, h)?);
        }
    }
    Ok(out)
}

/// An isomorphism `φ` with `b ∘ φ = a`, in a common modulus.
pub fn isometry(a: &QuadraticForm, b: &QuadraticForm, bound: usize) -> Result<Option<Hom>> {
    a.group().check_bound(bound)?;
    b.group().check_bound(bound)?;
    let (a, b) = common_modulus(a, b)?;
    Ok(Hom::isomorphisms(a.group(), b.group())
        .into_iter()
        .find(|phi| a.group().elements().iter().all(|x| b.at(&phi.apply(x)) == a.at(x))))
}

#[derive(Debug, Clone)]
pub struct WittComparison {
    pub equal: bool,
    pub left: WittClassWitness,
    pub right: WittClassWitness,
    pub isometry: Option<Hom>,
}

/// Equal Witt classes iff the anisotropic kernels are isometric.
pub fn witt_equal(a: &QuadraticForm, b: &QuadraticForm, bound: usize) -> Result<WittComparison> {
    let left = anisotropic_kernel(a, bound)?;
    let right = anisotropic_kernel(b, bound)?;
    let iso = isometry(&left.kernel, &right.kernel, bound)?;
    Ok(WittComparison {
        equal: iso.is_some(),
        left,
        right,
        isometry: iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::groups_up_to_order;
    use crate::braided::{bilinear_form, parametric_forms, radical};

    fn g(f: &[u32]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    fn semion() -> QuadraticForm {
        QuadraticForm::new(&g(&[2]), 4, vec![0, 1]).unwrap()
    }

    fn hyperbolic(p: u32) -> QuadraticForm {
        QuadraticForm::from_fn(&g(&[p, p]), p, |x| (x[0] * x[1]) as i64).unwrap()
    }

    #[test]
    fn direct_sum_examples() {
        let s = semion();
        let e = QuadraticForm::zero(&FinAbGroup::trivial(), 4).unwrap();
        assert_eq!(direct_sum(&s, &e).unwrap(), s);
        let ss = direct_sum(&s, &s).unwrap();
        assert_eq!(ss.at(&[1, 1]), 2);
        assert!(direct_sum(&s, &hyperbolic(3)).is_err());
        let (a, b) = common_modulus(&s, &hyperbolic(3)).unwrap();
        assert_eq!(a.modulus(), 12);
        assert_eq!(direct_sum(&a, &b).unwrap().group().order(), 18);
    }

    #[test]
    fn direct_sum_radical_is_product() {
        let forms: Vec<QuadraticForm> = groups_up_to_order(4)
            .iter()
            .flat_map(|grp| parametric_forms(grp, 8, 64).unwrap())
            .filter(|q| 8 % q.group().exponent() == 0)
            .collect();
        for a in forms.iter().step_by(2) {
            for b in forms.iter().step_by(3) {
                let s = direct_sum(a, b).unwrap();
                let ra = radical(&bilinear_form(a).unwrap()).order();
                let rb = radical(&bilinear_form(b).unwrap()).order();
                assert_eq!(radical(&bilinear_form(&s).unwrap()).order(), ra * rb);
                assert_eq!(
                    is_nondegenerate(&s).unwrap(),
                    is_nondegenerate(a).unwrap() && is_nondegenerate(b).unwrap()
                );
            }
        }
    }

    #[test]
    fn anisotropy_examples() {
        assert!(is_anisotropic(&semion(), 64).unwrap());
        for p in [2, 3, 5] {
            assert!(!is_anisotropic(&hyperbolic(p), 64).unwrap());
            let w = anisotropic_kernel(&hyperbolic(p), 64).unwrap();
            assert!(w.kernel.group().is_trivial());
            assert_eq!(w.trace.len(), 1);
        }
        assert!(is_anisotropic(&QuadraticForm::zero(&FinAbGroup::trivial(), 2).unwrap(), 64).unwrap());
        let w = anisotropic_kernel(&semion(), 64).unwrap();
        assert_eq!(w.kernel, semion());
        assert!(w.trace.is_empty());
        assert!(anisotropic_kernel(&QuadraticForm::zero(&g(&[2]), 2).unwrap(), 64).is_err());
    }

    #[test]
    fn witt_equality_examples() {
        let s = semion();
        let conj = s.neg();
        assert!(witt_equal(&s, &s, 64).unwrap().equal);
        assert!(!witt_equal(&s, &conj, 64).unwrap().equal);
        let (s12, h12) = common_modulus(&s, &hyperbolic(3)).unwrap();
        let sum = direct_sum(&s12, &h12).unwrap();
        let cmp = witt_equal(&s, &sum, 64).unwrap();
        assert!(cmp.equal);
        assert!(cmp.isometry.is_some());
        let sc = direct_sum(&s, &conj).unwrap();
        let w = anisotropic_kernel(&sc, 64).unwrap();
        assert!(w.kernel.group().is_trivial());
    }

    fn nondegenerate_forms(max_order: usize) -> Vec<QuadraticForm> {
        groups_up_to_order(max_order)
            .iter()
            .flat_map(|grp| parametric_forms(grp, grp.default_modulus(), 64).unwrap())
            .filter(|q| is_nondegenerate(q).unwrap())
            .collect()
    }

    #[test]
    fn reduction_order_does_not_matter_small() {
        for q in nondegenerate_forms(9) {
            let kernels = all_reduction_kernels(&q, 64).unwrap();
            let w = anisotropic_kernel(&q, 64).unwrap();
            for k in &kernels {
                assert!(isometry(k, &w.kernel, 64).unwrap().is_some(), "{:?}", q);
                assert!(is_anisotropic(k, 64).unwrap());
            }
        }
    }

    #[test]
    fn inverse_law_small() {
        for q in nondegenerate_forms(4) {
            let sum = direct_sum(&q, &q.neg()).unwrap();
            assert!(anisotropic_kernel(&sum, 64).unwrap().kernel.group().is_trivial());
        }
    }

    #[test]
    fn witt_equal_is_an_equivalence() {
        let forms = nondegenerate_forms(4);
        let classes: Vec<Vec<bool>> = forms
            .iter()
            .map(|a| forms.iter().map(|b| witt_equal(a, b, 64).unwrap().equal).collect())
            .collect();
        for i in 0..forms.len() {
            assert!(classes[i][i]);
            for j in 0..forms.len() {
                assert_eq!(classes[i][j], classes[j][i]);
                for k in 0..forms.len() {
                    if classes[i][j] && classes[j][k] {
                        assert!(classes[i][k]);
                    }
                }
            }
        }
    }
}
