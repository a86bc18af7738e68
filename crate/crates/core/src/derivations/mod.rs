//! alpha^k-derivations and the algebras built from them.

mod blocks;
mod extensions;
mod table;

pub use blocks::{
    der_block_check, der_dim_compare, der_dim_predict, der_dim_predict_with, BlockCheck, DerDimComparison,
    DerDimPrediction,
};
pub use table::{der_table, TableRow};
pub use extensions::{
    algebra_with_derivation, bilinear_form_properties, check_hd_iso_witness, invariant_forms, meta_heisenberg,
    FormProperties, MetaHeisenberg,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, RowReducer, Scalar, SubspaceBasis};
use crate::heisenberg::HeisenbergAlgebra;
use crate::homlie::HomLieAlgebra;

/// The blocks of `D = [[D1, D3, 0], [D2, D4, 0], [U, V, mu]]` in a
/// symplectic basis `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerBlocks {
    pub d1: Matrix,
    pub d2: Matrix,
    pub d3: Matrix,
    pub d4: Matrix,
    pub u: Matrix,
    pub v: Matrix,
    pub mu: Scalar,
    /// Entries of `D(z)` outside `z`; zero for every derivation.
    pub dz_off: Matrix,
}

impl DerBlocks {
    pub fn of(d: &Matrix, m: usize) -> DerBlocks {
        DerBlocks {
            d1: d.block(0, 0, m, m),
            d3: d.block(0, m, m, m),
            d2: d.block(m, 0, m, m),
            d4: d.block(m, m, m, m),
            u: d.block(2 * m, 0, 1, m),
            v: d.block(2 * m, m, 1, m),
            mu: d[(2 * m, 2 * m)].clone(),
            dz_off: d.block(0, 2 * m, 2 * m, 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivationSpace {
    pub k: i64,
    pub dim: usize,
    /// Kernel basis over `End(L)`, coordinates `D[i][j]` row-major.
    pub basis: SubspaceBasis,
    pub generators: Vec<Matrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_decompositions: Option<Vec<DerBlocks>>,
}

/// `alpha^k`, with `k = -1` meaning the inverse.
pub(crate) fn alpha_power(alpha: &Matrix, k: i64) -> Result<Matrix> {
    if k < -1 {
        return Err(Error::BadDegree(k));
    }
    alpha.pow(k).map_err(|_| Error::SingularPower(k))
}

/// All `D` with `alpha D = D alpha` and
/// `D[x, y] = [D x, alpha^k y] + [alpha^k x, D y]`, as the kernel of one
/// linear system over the `n^2` entries of `D`.
pub fn der_space(l: &HomLieAlgebra, k: i64) -> Result<DerivationSpace> {
    let n = l.dim();
    let alpha = l.alpha();
    let ak = alpha_power(alpha, k)?;
    let c = l.structure_constants();
    let idx = |i: usize, j: usize| i * n + j;
    let mut rr = RowReducer::new(n * n);

    for i in 0..n {
        for j in 0..n {
            // (alpha D - D alpha)[i][j]
            let mut row = vec![Scalar::zero(); n * n];
            for t in 0..n {
                row[idx(t, j)] += &alpha[(i, t)];
                row[idx(i, t)] -= &alpha[(t, j)];
            }
            rr.push(row);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for out in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                // D([e_a, e_b])_out
                for (t, coef) in c[a][b].iter().enumerate() {
                    if !coef.is_zero() {
                        row[idx(out, t)] += coef;
                    }
                }
                // - [D e_a, alpha^k e_b]_out - [alpha^k e_a, D e_b]_out
                for s in 0..n {
                    for u in 0..n {
                        let cs = &c[s][u][out];
                        if cs.is_zero() {
                            continue;
                        }
                        if !ak[(u, b)].is_zero() {
                            row[idx(s, a)] -= &(&ak[(u, b)] * cs);
                        }
                        if !ak[(s, a)].is_zero() {
                            row[idx(u, b)] -= &(&ak[(s, a)] * cs);
                        }
                    }
                }
                rr.push(row);
            }
        }
    }
    let basis = rr.kernel();
    let generators = basis
        .vectors
        .iter()
        .map(|v| Matrix::from_vec(n, n, v.clone()).expect("n^2 entries"))
        .collect();
    Ok(DerivationSpace {
        k,
        dim: basis.dim(),
        basis,
        generators,
        block_decompositions: None,
    })
}

/// [`der_space`] for a Heisenberg algebra, with the block form of every
/// generator.
pub fn heisenberg_der_space(h: &HeisenbergAlgebra, k: i64) -> Result<DerivationSpace> {
    let mut s = der_space(h.algebra(), k)?;
    s.block_decompositions = Some(s.generators.iter().map(|d| DerBlocks::of(d, h.m())).collect());
    Ok(s)
}

/// Direct check of the two defining identities on all basis pairs.
pub fn is_derivation(l: &HomLieAlgebra, d: &Matrix, k: i64) -> Result<bool> {
    let n = l.dim();
    if d.shape() != (n, n) {
        return Err(Error::Shape(format!("D must be {n}x{n}")));
    }
    let ak = alpha_power(l.alpha(), k)?;
    if l.alpha() * d != d * l.alpha() {
        return Ok(false);
    }
    let dc = d.columns();
    let akc = ak.columns();
    for a in 0..n {
        for b in a + 1..n {
            let lhs = d.mul_vec(l.basis_bracket(a, b));
            let r1 = l.bracket(&dc[a], &akc[b]);
            let r2 = l.bracket(&akc[a], &dc[b]);
            let rhs: Vec<Scalar> = r1.iter().zip(&r2).map(|(x, y)| x + y).collect();
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hd(entries: &[i64]) -> HeisenbergAlgebra {
        let lambda = *entries.last().unwrap();
        let m = (entries.len() - 1) / 2;
        HeisenbergAlgebra::build(m, Scalar::from(lambda), Matrix::diag_ints(entries)).unwrap()
    }

    #[test]
    fn diagonal_rows() {
        assert_eq!(der_space(hd(&[2, 3, 6]).algebra(), 1).unwrap().dim, 2);
        assert_eq!(der_space(hd(&[2, 2, 4]).algebra(), 1).unwrap().dim, 4);
    }

    #[test]
    fn generators_satisfy_identities() {
        let h = HeisenbergAlgebra::build(1, Scalar::from(4), Matrix::ints(&[[2, 1, 0], [0, 2, 0], [0, 0, 4]])).unwrap();
        for k in [-1, 0, 1, 2] {
            let s = der_space(h.algebra(), k).unwrap();
            for g in &s.generators {
                assert!(is_derivation(h.algebra(), g, k).unwrap(), "k = {k}");
            }
        }
    }

    #[test]
    fn table_row_one_shape() {
        // D = diag(d1, d4, d4 a^k + d1 (lambda/a)^k) with a = 2, lambda = 6.
        let h = hd(&[2, 3, 6]);
        for k in 0..3i64 {
            let s = heisenberg_der_space(&h, k).unwrap();
            let a = Scalar::from(2);
            let la = Scalar::from(3);
            for d in &s.generators {
                assert!(d.block(0, 0, 2, 2).is_diagonal() && d.block(2, 0, 1, 2).is_zero());
                let want = &(&d[(1, 1)] * &a.pow(k).unwrap()) + &(&d[(0, 0)] * &la.pow(k).unwrap());
                assert_eq!(d[(2, 2)], want);
            }
        }
    }

    #[test]
    fn degree_minus_one_needs_invertible_alpha() {
        let l = HomLieAlgebra::abelian(Matrix::diag_ints(&[1, 0])).unwrap();
        assert_eq!(der_space(&l, -1).unwrap_err(), Error::SingularPower(-1));
        assert_eq!(der_space(&l, -2).unwrap_err(), Error::BadDegree(-2));
        // Abelian: every endomorphism commuting with alpha.
        assert_eq!(der_space(&l, 0).unwrap().dim, 2);
    }

    #[test]
    fn blocks_are_read_off() {
        let d = Matrix::ints(&[[1, 2, 0], [3, 4, 0], [5, 6, 7]]);
        let b = DerBlocks::of(&d, 1);
        assert_eq!((b.d1[(0, 0)].clone(), b.d3[(0, 0)].clone(), b.d2[(0, 0)].clone()), (1.into(), 2.into(), 3.into()));
        assert_eq!(b.mu, Scalar::from(7));
        assert!(b.dz_off.is_zero());
    }
}
