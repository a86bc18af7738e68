//! Normal forms of twisting maps on three-dimensional Heisenberg algebras.

use serde::Serialize;

use super::HeisenbergAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NormalFormTag {
    /// `[[1,0,0],[1,1,0],[0,a,1]]`, lambda = 1.
    #[serde(rename = "i")]
    I,
    /// `[[1,0,0],[0,lambda,0],[0,a,lambda]]`.
    #[serde(rename = "ii")]
    II,
    /// `[[mu,1,0],[0,mu,0],[0,0,mu^2]]`.
    #[serde(rename = "iii")]
    III,
    /// `diag(mu, lambda/mu, lambda)`.
    #[serde(rename = "iv")]
    IV,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalForm {
    pub form: NormalFormTag,
    pub lambda: Scalar,
    pub mu: Option<Scalar>,
    pub a: Option<Scalar>,
    pub canonical: Matrix,
    /// Columns are the new basis `(X, Y, Z)` in old coordinates, with
    /// `[X, Y] = Z`; `transition^-1 alpha transition = canonical`.
    pub transition: Matrix,
}

fn canonical(tag: NormalFormTag, lambda: &Scalar, mu: Option<&Scalar>, a: Option<&Scalar>) -> Matrix {
    let z = Scalar::zero;
    let one = Scalar::one;
    let rows = match tag {
        NormalFormTag::I => vec![
            vec![one(), z(), z()],
            vec![one(), one(), z()],
            vec![z(), a.cloned().unwrap_or_default(), one()],
        ],
        NormalFormTag::II => vec![
            vec![one(), z(), z()],
            vec![z(), lambda.clone(), z()],
            vec![z(), a.cloned().unwrap_or_default(), lambda.clone()],
        ],
        NormalFormTag::III => {
            let mu = mu.expect("mu").clone();
            vec![
                vec![mu.clone(), one(), z()],
                vec![z(), mu.clone(), z()],
                vec![z(), z(), &mu * &mu],
            ]
        }
        NormalFormTag::IV => {
            let mu = mu.expect("mu");
            vec![
                vec![mu.clone(), z(), z()],
                vec![z(), lambda / mu, z()],
                vec![z(), z(), lambda.clone()],
            ]
        }
    };
    Matrix::from_rows(rows).expect("3x3")
}

/// Find `s` with `(lambda I - tA') s = c phi' - phi Q`, i.e. the z-shifts
/// making `q_j + s_j z` transform with bottom row `phi'`.
fn z_shifts(
    lambda: &Scalar,
    a_canon: &Matrix,
    c: &Scalar,
    phi_target: &[Scalar],
    phi_q: &[Scalar],
) -> Option<Vec<Scalar>> {
    let lhs = &Matrix::scalar(2, lambda) - &a_canon.transpose();
    let rhs: Vec<Scalar> = phi_target
        .iter()
        .zip(phi_q)
        .map(|(t, p)| &(c * t) - p)
        .collect();
    lhs.solve(&rhs)
}

/// First standard basis vector not annihilated by `m`.
fn first_not_killed(m: &Matrix) -> Vec<Scalar> {
    (0..m.cols())
        .map(|j| crate::exactla::unit_vec(m.cols(), j))
        .find(|e| m.mul_vec(e).iter().any(|x| !x.is_zero()))
        .expect("matrix is nonzero")
}

/// Bring the twist of a three-dimensional Heisenberg algebra to one of the
/// four normal forms, with an explicit basis change.
pub fn normal_form_dim3(alpha: &Matrix) -> Result<NormalForm> {
    if alpha.shape() != (3, 3) {
        return Err(Error::Shape("normal forms need a 3x3 twisting map".into()));
    }
    let lambda = alpha[(2, 2)].clone();
    HeisenbergAlgebra::build(1, lambda.clone(), alpha.clone())?;

    let a = alpha.block(0, 0, 2, 2);
    let phi = alpha.row(2)[..2].to_vec();
    let phi_of = |v: &[Scalar]| crate::exactla::dot(&phi, v);
    let tr = a.trace();
    let disc = &(&tr * &tr) - &(Scalar::from(4) * &lambda);
    let root = disc.sqrt_exact().ok_or(Error::EigenvaluesOutsideField { found: 0, needed: 2 })?;
    let half = Scalar::frac(1, 2);
    let e1 = &(&tr - &root) * &half;
    let e2 = &(&tr + &root) * &half;

    // (tag, mu, a, q1, q2, phi_target); s computed afterwards.
    let (tag, mu, q1, q2, phi_target): (NormalFormTag, Option<Scalar>, Vec<Scalar>, Vec<Scalar>, Vec<Scalar>);
    let zero2 = vec![Scalar::zero(), Scalar::zero()];

    if e1 != e2 {
        let mut cands = [e1, e2];
        cands.sort_by(|x, y| y.is_real().cmp(&x.is_real()).then_with(|| x.lex_cmp(y)));
        let eigvec = |v: &Scalar| (&a - &Matrix::scalar(2, v)).kernel_basis().vectors[0].clone();
        let mu0 = cands[0].clone();
        let other = cands[1].clone();
        let (v1, v2) = (eigvec(&mu0), eigvec(&other));
        let qm = Matrix::from_columns(2, &[v1.clone(), v2.clone()]);
        let a_canon = Matrix::diag(&[mu0.clone(), other.clone()]);
        let c = qm.det()?;
        let phi_q = vec![phi_of(&v1), phi_of(&v2)];
        if z_shifts(&lambda, &a_canon, &c, &zero2, &phi_q).is_some() {
            tag = NormalFormTag::IV;
            mu = Some(mu0);
            q1 = v1;
            q2 = v2;
            phi_target = zero2;
        } else {
            // Eigenvalues {1, lambda} and phi does not vanish on the
            // lambda-eigenvector: the z-row cannot be cleared.
            let one = Scalar::one();
            let (u1, u2) = if mu0 == one { (v1, v2) } else { (v2, v1) };
            let c = Matrix::from_columns(2, &[u1.clone(), u2.clone()]).det()?;
            let a_par = &phi_of(&u2) / &c;
            tag = NormalFormTag::II;
            mu = None;
            q1 = u1;
            q2 = u2;
            phi_target = vec![Scalar::zero(), a_par];
        }
    } else {
        let mu0 = e1;
        let shifted = &a - &Matrix::scalar(2, &mu0);
        if shifted.is_zero() {
            if !mu0.is_one() || phi.iter().all(Scalar::is_zero) {
                tag = NormalFormTag::IV;
                mu = Some(mu0);
                q1 = crate::exactla::unit_vec(2, 0);
                q2 = crate::exactla::unit_vec(2, 1);
                phi_target = zero2;
            } else {
                let phi_m = Matrix::from_rows(vec![phi.clone()])?;
                let u1 = phi_m.kernel_basis().vectors[0].clone();
                let u2 = first_not_killed(&phi_m);
                let c = Matrix::from_columns(2, &[u1.clone(), u2.clone()]).det()?;
                tag = NormalFormTag::II;
                mu = None;
                phi_target = vec![Scalar::zero(), &phi_of(&u2) / &c];
                q1 = u1;
                q2 = u2;
            }
        } else if !mu0.is_one() {
            let u2 = first_not_killed(&shifted);
            let u1 = shifted.mul_vec(&u2);
            tag = NormalFormTag::III;
            mu = Some(mu0);
            q1 = u1;
            q2 = u2;
            phi_target = zero2;
        } else {
            let u1 = first_not_killed(&shifted);
            let u2 = shifted.mul_vec(&u1);
            let c = Matrix::from_columns(2, &[u1.clone(), u2.clone()]).det()?;
            tag = NormalFormTag::I;
            mu = None;
            phi_target = vec![Scalar::zero(), &phi_of(&u2) / &c];
            q1 = u1;
            q2 = u2;
        }
    }

    let a_par = match tag {
        NormalFormTag::I | NormalFormTag::II => Some(phi_target[1].clone()),
        _ => None,
    };
    let canon = canonical(tag, &lambda, mu.as_ref(), a_par.as_ref());
    let a_canon = canon.block(0, 0, 2, 2);
    let qm = Matrix::from_columns(2, &[q1.clone(), q2.clone()]);
    let c = qm.det()?;
    let phi_q = vec![phi_of(&q1), phi_of(&q2)];
    let s = z_shifts(&lambda, &a_canon, &c, &phi_target, &phi_q)
        .ok_or_else(|| Error::Internal("normal form z-shift system is inconsistent".into()))?;
    let mut p0 = Matrix::zeros(3, 3);
    p0.set_block(0, 0, &qm);
    p0[(2, 0)] = s[0].clone();
    p0[(2, 1)] = s[1].clone();
    p0[(2, 2)] = c;
    let check = &(&p0.inverse()? * alpha) * &p0;
    if check != canon {
        return Err(Error::Internal(format!(
            "normal form transition gives {check:?}, expected {canon:?}"
        )));
    }
    Ok(NormalForm {
        form: tag,
        lambda,
        mu,
        a: a_par,
        canonical: canon,
        transition: p0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homlie::HomLieAlgebra;
    use proptest::prelude::*;

    #[test]
    fn documented_examples_have_identity_transition() {
        let nf = normal_form_dim3(&Matrix::diag_ints(&[2, 3, 6])).unwrap();
        assert_eq!((nf.form, nf.mu.clone()), (NormalFormTag::IV, Some(Scalar::from(2))));
        assert_eq!(nf.transition, Matrix::identity(3));

        let j = Matrix::ints(&[[2, 1, 0], [0, 2, 0], [0, 0, 4]]);
        let nf = normal_form_dim3(&j).unwrap();
        assert_eq!((nf.form, nf.mu.clone()), (NormalFormTag::III, Some(Scalar::from(2))));
        assert_eq!(nf.transition, Matrix::identity(3));

        let u = Matrix::ints(&[[1, 0, 0], [1, 1, 0], [0, 5, 1]]);
        let nf = normal_form_dim3(&u).unwrap();
        assert_eq!((nf.form, nf.a.clone()), (NormalFormTag::I, Some(Scalar::from(5))));
        assert_eq!(nf.transition, Matrix::identity(3));
    }

    #[test]
    fn uncleared_z_row_gives_form_ii() {
        let m = Matrix::ints(&[[1, 0, 0], [0, 6, 0], [0, 4, 6]]);
        let nf = normal_form_dim3(&m).unwrap();
        assert_eq!(nf.form, NormalFormTag::II);
        assert_eq!(nf.a, Some(Scalar::from(4)));
        let id = Matrix::ints(&[[1, 0, 0], [0, 1, 0], [2, 3, 1]]);
        assert_eq!(normal_form_dim3(&id).unwrap().form, NormalFormTag::II);
    }

    #[test]
    fn irrational_spectrum_is_rejected() {
        let m = Matrix::ints(&[[0, 2, 0], [-1, 1, 0], [0, 0, 2]]);
        // trace 1, det 2: discriminant -7 has no square root in Q(i).
        assert!(matches!(normal_form_dim3(&m), Err(Error::EigenvaluesOutsideField { .. })));
        let rot = Matrix::ints(&[[0, -1, 0], [1, 0, 0], [0, 0, 1]]);
        let nf = normal_form_dim3(&rot).unwrap();
        assert_eq!(nf.form, NormalFormTag::IV);
        assert_eq!(nf.mu, Some(-Scalar::i()));
    }

    proptest! {
        #[test]
        fn transition_conjugates_to_canonical(
            e in prop_oneof![Just((1i64, 1i64)), Just((2, 2)), Just((2, 3)), Just((1, 5)), Just((-1, -1))],
            jordan in any::<bool>(),
            c in proptest::collection::vec(-2i64..3, 4),
            phi in proptest::collection::vec(-3i64..4, 2),
        ) {
            let (p, q) = e;
            let mut a = Matrix::diag_ints(&[p, q]);
            if jordan && p == q { a[(0, 1)] = Scalar::one(); }
            let g = Matrix::ints(&[[1, c[0]], [c[1], 1 + c[0] * c[1]]]);
            let a = &(&g * &a) * &g.inverse().unwrap();
            let lambda = Scalar::from(p * q);
            let mut alpha = Matrix::zeros(3, 3);
            alpha.set_block(0, 0, &a);
            alpha[(2, 0)] = Scalar::from(phi[0]);
            alpha[(2, 1)] = Scalar::from(phi[1]);
            alpha[(2, 2)] = lambda;
            let nf = normal_form_dim3(&alpha).unwrap();
            prop_assert_eq!(&(&nf.transition.inverse().unwrap() * &alpha) * &nf.transition, nf.canonical.clone());
            // The new basis is again a Heisenberg basis.
            let l = HomLieAlgebra::from_entries(
                super::super::heisenberg_labels(1), &super::super::heisenberg_entries(1), alpha).unwrap();
            let moved = l.change_basis(&nf.transition, super::super::heisenberg_labels(1)).unwrap();
            prop_assert_eq!(moved.structure_constants(), l.structure_constants());
        }
    }
}
