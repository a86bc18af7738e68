//! Closed-form dimension statements for the trivial and minimal faithful
//! modules, compared against the kernel computations.

use serde::Serialize;

use super::{coboundary, coboundary_matrix, cohomology_report, Cochain, CochainLayout, CohomologyReport, Comparison};
use crate::error::{Error, Result};
use crate::exactla::{eigenvalues, Matrix, Scalar, SubspaceBasis};
use crate::heisenberg::HeisenbergAlgebra;
use crate::representations::{minimal_faithful, trivial_rep};

/// Degree-2 cohomology with values in a trivial module of dimension
/// `dim_t`, against `Z = (2m^2 - m) dim T`, `B = dim T`,
/// `H = (2m^2 - m - 1) dim T`.
pub fn trivial_cohomology_report(h: &HeisenbergAlgebra, dim_t: usize, r: i64) -> Result<CohomologyReport> {
    let rep = trivial_rep(h.algebra(), dim_t)?;
    let mut rep_out = cohomology_report(h.algebra(), &rep, 2, r, false)?;
    let m = h.m();
    let zc = (2 * m * m - m) * dim_t;
    rep_out.comparisons = vec![
        Comparison::new("dim Z2 = (2m^2-m) dim T", zc, rep_out.dims.z),
        Comparison::new("dim B2 = dim T", dim_t, rep_out.dims.b),
        Comparison::new("dim H2 = (2m^2-m-1) dim T", zc - dim_t, rep_out.dims.h),
    ];
    Ok(rep_out)
}

/// Unrestricted `H^1` with values in the minimal faithful module, against
/// `m(m+3)/2`.
pub fn faithful_h1_report(h: &HeisenbergAlgebra, r: i64) -> Result<CohomologyReport> {
    let rep = minimal_faithful(h)?;
    let mut out = cohomology_report(h.algebra(), &rep, 1, r, false)?;
    let m = h.m();
    out.comparisons = vec![Comparison::new("dim H1 = m(m+3)/2", m * (m + 3) / 2, out.dims.h)];
    Ok(out)
}

/// `E(mu) = {u in E : X u = mu u}`.
fn e_dim(x: &Matrix, mu: &Scalar) -> usize {
    (x - &Matrix::scalar(x.rows(), mu)).kernel_basis().dim()
}

/// Hom-restricted `H^1` with values in the minimal faithful module, against
/// `dim B1 = dim E(1) + 1` and
/// `dim H1 = dim E(1) + sum dim E(l_i) dim E(lambda/l_i)` over unordered
/// pairs `{l_i, lambda/l_i}` of distinct eigenvalues of `X`.
pub fn faithful_h1_hom_report(h: &HeisenbergAlgebra, r: i64) -> Result<CohomologyReport> {
    let rep = minimal_faithful(h)?;
    let mut out = cohomology_report(h.algebra(), &rep, 1, r, true)?;
    let x = h.x_block();
    let lambda = h.lambda();
    let spec = eigenvalues(&x, &[])?;
    let e1 = e_dim(&x, &Scalar::one());
    let pairing: usize = spec
        .iter()
        .filter_map(|(li, _)| {
            let partner = lambda / li;
            let is_eig = spec.iter().any(|(s, _)| *s == partner);
            (is_eig && li.lex_cmp(&partner) == std::cmp::Ordering::Less)
                .then(|| e_dim(&x, li) * e_dim(&x, &partner))
        })
        .sum();
    out.comparisons = vec![
        Comparison::new("dim B1 = dim E(1) + 1", e1 + 1, out.dims.b),
        Comparison::new("dim H1 = dim E(1) + sum dim E(l_i) dim E(lambda/l_i)", e1 + pairing, out.dims.h),
    ];
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Z2Classification {
    /// `delta^2 f = 0`.
    pub is_cocycle: bool,
    /// `f(z, u) = 0` for all `u`.
    pub vanishes_on_z: bool,
    /// `f` in the span of the `f_k` with `f_k(x_i, y_j) = delta_ij v_k`.
    pub in_fk_span: bool,
    /// `f` in the image of `delta^1`.
    pub is_coboundary: bool,
    /// For a cocycle that is not a coboundary: which of the conditions
    /// hold. Empty otherwise.
    pub nontrivial_reasons: Vec<String>,
}

/// Classify a 2-cochain with values in a trivial module (`r = 1`).
pub fn trivial_z2_classifier(h: &HeisenbergAlgebra, f: &Cochain) -> Result<Z2Classification> {
    let l = h.algebra();
    let n = h.dim();
    if f.degree != 2 || f.algebra_dim != n {
        return Err(Error::Shape(format!("expected a 2-cochain on an algebra of dimension {n}")));
    }
    let dt = f.module_dim;
    let rep = trivial_rep(l, dt)?;
    let lay = CochainLayout::new(n, dt, 2);
    let m = h.m();
    let zi = 2 * m;
    let val = |a: usize, b: usize| f.on_basis(&lay, &[a, b]);
    let nonzero = |v: &[Scalar]| v.iter().any(|c| !c.is_zero());

    let is_cocycle = coboundary(l, &rep, f, 1)?.is_zero();
    let vanishes_on_z = (0..n).all(|u| !nonzero(&val(zi, u)));

    let fks: Vec<Vec<Scalar>> = (0..dt)
        .map(|k| {
            let mut g = Cochain::zero(n, dt, 2);
            for i in 0..m {
                g.set(&lay, &[i, m + i], &crate::exactla::unit_vec(dt, k));
            }
            g.values
        })
        .collect();
    let in_fk_span = SubspaceBasis::span_of(lay.dim(), &fks).contains(&f.values);
    let image = coboundary_matrix(l, &rep, 1, 1)?.column_space();
    let is_coboundary = image.contains(&f.values);

    let mut reasons = Vec::new();
    if is_cocycle && !is_coboundary {
        let diag: Vec<Vec<Scalar>> = (0..m).map(|i| val(i, m + i)).collect();
        if diag.windows(2).any(|w| w[0] != w[1]) {
            reasons.push("(i) f(x_i, y_i) != f(x_j, y_j) for some i, j".to_string());
        }
        if (0..m).any(|i| (i + 1..m).any(|j| nonzero(&val(i, j)))) {
            reasons.push("(ii) f(E, E) != 0".to_string());
        }
        if (0..m).any(|i| (i + 1..m).any(|j| nonzero(&val(m + i, m + j)))) {
            reasons.push("(iii) f(E*, E*) != 0".to_string());
        }
        if (0..m).any(|i| (0..m).any(|j| i != j && nonzero(&val(i, m + j)))) {
            reasons.push("f(x_i, y_j) != 0 for some i != j".to_string());
        }
        if !vanishes_on_z {
            reasons.push("f(z, u) != 0 for some u".to_string());
        }
    }
    Ok(Z2Classification {
        is_cocycle,
        vanishes_on_z,
        in_fk_span,
        is_coboundary,
        nontrivial_reasons: reasons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::svec;

    fn bd(lambda: i64, x: &[i64]) -> HeisenbergAlgebra {
        HeisenbergAlgebra::block_diagonal(Scalar::from(lambda), &Matrix::diag_ints(x)).unwrap()
    }

    #[test]
    fn trivial_m2() {
        let r = trivial_cohomology_report(&bd(6, &[2, 3]), 1, 1).unwrap();
        assert_eq!((r.dims.z, r.dims.b, r.dims.h), (6, 1, 5));
        assert!(r.all_match());
    }

    #[test]
    fn faithful_unrestricted_h1() {
        assert_eq!(faithful_h1_report(&bd(6, &[2]), 1).unwrap().dims.h, 2);
        let r = faithful_h1_report(&bd(6, &[2, 3]), 1).unwrap();
        assert_eq!(r.dims.h, 5);
        assert!(r.all_match());
    }

    #[test]
    fn faithful_hom_restricted() {
        let r = faithful_h1_hom_report(&bd(6, &[2]), 1).unwrap();
        assert_eq!(r.dims.h, 0);
        assert!(r.all_match());
        let r = faithful_h1_hom_report(&bd(6, &[2, 3]), 1).unwrap();
        assert_eq!(r.dims.h, 1);
        assert_eq!(r.comparisons[1].predicted, 1);
    }

    #[test]
    fn z2_classification() {
        let h = bd(6, &[2, 3]);
        let n = h.dim();
        let lay = CochainLayout::new(n, 1, 2);
        // the coboundary generator f_1
        let mut f1 = Cochain::zero(n, 1, 2);
        f1.set(&lay, &[0, 2], &svec(&[1]));
        f1.set(&lay, &[1, 3], &svec(&[1]));
        let c = trivial_z2_classifier(&h, &f1).unwrap();
        assert!(c.is_cocycle && c.is_coboundary && c.in_fk_span && c.vanishes_on_z);

        let mut g = Cochain::zero(n, 1, 2);
        g.set(&lay, &[4, 0], &svec(&[1]));
        let c = trivial_z2_classifier(&h, &g).unwrap();
        assert!(!c.vanishes_on_z && !c.is_cocycle);

        let mut u = Cochain::zero(n, 1, 2);
        u.set(&lay, &[0, 2], &svec(&[1]));
        let c = trivial_z2_classifier(&h, &u).unwrap();
        assert!(c.is_cocycle && !c.is_coboundary);
        assert_eq!(c.nontrivial_reasons, vec!["(i) f(x_i, y_i) != f(x_j, y_j) for some i, j".to_string()]);
    }
}
