//! One-dimensional extensions by derivations, the meta-Heisenberg algebra,
//! and bilinear-form predicates.

use serde::Serialize;

use super::{alpha_power, is_derivation};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, RowReducer, Scalar, SubspaceBasis};
use crate::heisenberg::HeisenbergAlgebra;
use crate::homlie::{BracketEntry, HomLieAlgebra, ValidationReport};

/// `L + C d_1 + ... + C d_r` with `[x, d_i] = -d_i(x)`, `[d_i, d_j] = 0`,
/// and the twist extended by the identity.
fn extend_by(l: &HomLieAlgebra, ders: &[&Matrix], names: &[&str]) -> Result<HomLieAlgebra> {
    let n = l.dim();
    let total = n + ders.len();
    let mut entries: Vec<BracketEntry> = l
        .entries()
        .into_iter()
        .collect();
    for (r, d) in ders.iter().enumerate() {
        for u in 0..n {
            let coeffs: Vec<(usize, Scalar)> = d
                .col(u)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, -c))
                .collect();
            if !coeffs.is_empty() {
                entries.push(BracketEntry { i: u, j: n + r, coeffs });
            }
        }
    }
    let mut alpha = Matrix::identity(total);
    alpha.set_block(0, 0, l.alpha());
    let mut labels = l.labels().to_vec();
    labels.extend(names.iter().map(|s| s.to_string()));
    HomLieAlgebra::from_entries(labels, &entries, alpha)
}

/// `L(D) = L + C D` with `[x + aD, y + bD] = [x, y] + a D(y) - b D(x)` and
/// twist `alpha + id`.
pub fn algebra_with_derivation(l: &HomLieAlgebra, d: &Matrix) -> Result<HomLieAlgebra> {
    if !is_derivation(l, d, 1)? {
        return Err(Error::NotADerivation { k: 1 });
    }
    extend_by(l, &[d], &["D"])
}

/// Whether `D' = (1/a)(phi D phi^{-1} - ad_v)`, with `phi` an automorphism.
pub fn check_hd_iso_witness(
    l: &HomLieAlgebra,
    d: &Matrix,
    d_prime: &Matrix,
    a: &Scalar,
    phi: &Matrix,
    v: &[Scalar],
) -> Result<bool> {
    let n = l.dim();
    if d.shape() != (n, n) || d_prime.shape() != (n, n) || v.len() != n {
        return Err(Error::Shape(format!("D, D' must be {n}x{n} and v of length {n}")));
    }
    let inv_a = a.inv().ok_or(Error::ZeroScale)?;
    if phi.shape() != (n, n) || !phi.is_invertible() {
        return Err(Error::NotAnAutomorphism("phi is not invertible".into()));
    }
    if !l.is_morphism(phi) {
        return Err(Error::NotAnAutomorphism(
            "phi does not preserve the bracket or commute with alpha".into(),
        ));
    }
    let conj = &(phi * d) * &phi.inverse()?;
    let rhs = (&conj - &l.ad_vec(v)).scale(&inv_a);
    Ok(&rhs == d_prime)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetaHeisenberg {
    /// Basis `(x, y, z, I, I*)`.
    pub algebra: HomLieAlgebra,
    pub i_k: Matrix,
    pub i_k_star: Matrix,
    pub i_k_is_derivation: bool,
    pub i_k_star_is_derivation: bool,
    pub validation: ValidationReport,
}

/// `H + C I_k + C I_k*` with `I_k(v + f + t z) = alpha^k(v) + lambda^k t z`
/// and `I_k*(v + f + t z) = alpha^k(f) + lambda^k t z`.
///
/// `E` and `E*` must both be invariant, so `alpha` has to be block-diagonal.
pub fn meta_heisenberg(h: &HeisenbergAlgebra, k: i64) -> Result<MetaHeisenberg> {
    if !h.is_block_diagonal() {
        return Err(Error::NotBlockDiagonal(
            "I_k and I_k* commute with alpha only when E and E* are invariant".into(),
        ));
    }
    let m = h.m();
    let n = h.dim();
    let pk = alpha_power(h.p(), k)?;
    let mut pe = Matrix::zeros(n, n);
    let mut pf = Matrix::zeros(n, n);
    for i in 0..m {
        pe[(i, i)] = Scalar::one();
        pf[(m + i, m + i)] = Scalar::one();
    }
    pe[(2 * m, 2 * m)] = Scalar::one();
    pf[(2 * m, 2 * m)] = Scalar::one();
    let i_k = &pk * &pe;
    let i_k_star = &pk * &pf;
    let algebra = extend_by(h.algebra(), &[&i_k, &i_k_star], &["I", "I*"])?;
    Ok(MetaHeisenberg {
        i_k_is_derivation: is_derivation(h.algebra(), &i_k, k)?,
        i_k_star_is_derivation: is_derivation(h.algebra(), &i_k_star, k)?,
        validation: algebra.validate(),
        algebra,
        i_k,
        i_k_star,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormProperties {
    pub symmetric: bool,
    pub gamma_symmetric: bool,
    pub gamma_skew_symmetric: bool,
    pub invariant: bool,
    pub gamma_invariant: bool,
    pub nondegenerate: bool,
}

/// Predicates of `b(u, v) = tu b v`: `b(gamma x, y) = +-b(x, gamma y)`,
/// `b([x, y], z) = b(x, [y, z])` and
/// `b([x, y], gamma z) = b(gamma x, [y, z])`.
pub fn bilinear_form_properties(l: &HomLieAlgebra, b: &Matrix, gamma: &Matrix) -> Result<FormProperties> {
    let n = l.dim();
    if b.shape() != (n, n) || gamma.shape() != (n, n) {
        return Err(Error::Shape(format!("b and gamma must be {n}x{n}")));
    }
    let gtb = &gamma.transpose() * b;
    let bg = b * gamma;
    let form = |u: &[Scalar], v: &[Scalar]| -> Scalar { crate::exactla::dot(u, &b.mul_vec(v)) };
    let gc = gamma.columns();
    let mut invariant = true;
    let mut gamma_invariant = true;
    for i in 0..n {
        let ei = l.basis_vector(i);
        for j in 0..n {
            let xy = l.basis_bracket(i, j);
            for k in 0..n {
                let yz = l.basis_bracket(j, k);
                let ek = l.basis_vector(k);
                if invariant && form(xy, &ek) != form(&ei, yz) {
                    invariant = false;
                }
                if gamma_invariant && form(xy, &gc[k]) != form(&gc[i], yz) {
                    gamma_invariant = false;
                }
            }
        }
    }
    Ok(FormProperties {
        symmetric: b.is_symmetric(),
        gamma_symmetric: gtb == bg,
        gamma_skew_symmetric: gtb == -&bg,
        invariant,
        gamma_invariant,
        nondegenerate: b.is_invertible(),
    })
}

/// All invariant forms, `b([x, y], z) = b(x, [y, z])`, or with
/// `gamma = Some(g)` the `g`-invariant ones. Coordinates are `b[i][j]`
/// row-major.
pub fn invariant_forms(l: &HomLieAlgebra, gamma: Option<&Matrix>) -> SubspaceBasis {
    let n = l.dim();
    let c = l.structure_constants();
    let id = Matrix::identity(n);
    let g = gamma.unwrap_or(&id);
    let idx = |i: usize, j: usize| i * n + j;
    let mut rr = RowReducer::new(n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for t in 0..n {
                    if !c[i][j][t].is_zero() {
                        for s in 0..n {
                            if !g[(s, k)].is_zero() {
                                row[idx(t, s)] += &(&c[i][j][t] * &g[(s, k)]);
                            }
                        }
                    }
                    if !c[j][k][t].is_zero() {
                        for s in 0..n {
                            if !g[(s, i)].is_zero() {
                                row[idx(s, t)] -= &(&g[(s, i)] * &c[j][k][t]);
                            }
                        }
                    }
                }
                rr.push(row);
            }
        }
    }
    rr.kernel()
}
