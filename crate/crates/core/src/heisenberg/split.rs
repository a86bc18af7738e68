//! Splitting off an abelian summand from an algebra of Heisenberg type.

use serde::Serialize;

use super::{heisenberg_labels, HeisenbergAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, SubspaceBasis};
use crate::homlie::HomLieAlgebra;
use crate::symplectic::{darboux_basis, SkewForm};

#[derive(Clone, Debug, PartialEq)]
pub struct Split {
    pub heisenberg: HeisenbergAlgebra,
    /// Columns `(x_1..x_m, y_1..y_m, z)` in coordinates of the input.
    pub heisenberg_basis: Matrix,
    pub abelian: SubspaceBasis,
}

#[derive(Serialize)]
pub struct SplitSummary {
    pub m: usize,
    pub lambda: Scalar,
    pub heisenberg_basis: Matrix,
    pub restricted_alpha: Matrix,
    pub abelian_dim: usize,
    pub abelian: SubspaceBasis,
}

impl From<&Split> for SplitSummary {
    fn from(s: &Split) -> Self {
        SplitSummary {
            m: s.heisenberg.m(),
            lambda: s.heisenberg.lambda().clone(),
            heisenberg_basis: s.heisenberg_basis.clone(),
            restricted_alpha: s.heisenberg.p().clone(),
            abelian_dim: s.abelian.dim(),
            abelian: s.abelian.clone(),
        }
    }
}

/// Write `L = H + a` with `H` Heisenberg and `a` an abelian summand, both
/// alpha-invariant.
pub fn split_heisenberg_abelian(l: &HomLieAlgebra) -> Result<Split> {
    let n = l.dim();
    let derived = l.derived_ideal();
    if derived.dim() != 1 {
        return Err(Error::NotHeisenbergType(format!(
            "derived ideal has dimension {}",
            derived.dim()
        )));
    }
    let center = l.center();
    if !derived.is_subspace_of(&center) {
        return Err(Error::NotHeisenbergType("derived ideal is not central".into()));
    }
    if !l.is_multiplicative() {
        return Err(Error::NotMultiplicative);
    }
    let z = derived.vectors[0].clone();
    let az = l.alpha().mul_vec(&z);
    let zi = z.iter().position(|c| !c.is_zero()).expect("nonzero");
    let lambda = &az[zi] / &z[zi];

    // The radical of B is the center. Find f on it with f o alpha = lambda f
    // and f(z) = 1; its kernel is the abelian part.
    let r = center;
    let rc = r.as_columns();
    let alpha_r = {
        let mut m = Matrix::zeros(r.dim(), r.dim());
        for (j, v) in r.vectors.iter().enumerate() {
            let c = r
                .coordinates(&l.alpha().mul_vec(v))
                .ok_or_else(|| Error::NoInvariantComplement("center is not alpha-invariant".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    };
    let zc = r.coordinates(&z).expect("z is central");
    let k = r.dim();
    let mut sys = &alpha_r.transpose() - &Matrix::scalar(k, &lambda);
    sys = sys.vstack(&Matrix::from_rows(vec![zc.clone()])?)?;
    let mut rhs = vec![Scalar::zero(); k];
    rhs.push(Scalar::one());
    let f = sys
        .solve(&rhs)
        .ok_or_else(|| Error::NoInvariantComplement("z has no alpha-invariant complement in the center".into()))?;
    let a_coords = Matrix::from_rows(vec![f])?.kernel_basis();
    let abelian = SubspaceBasis::new(n, a_coords.vectors.iter().map(|c| rc.mul_vec(c)).collect())?;

    // A projection g: L -> a with g|a = id, g(z) = 0, g alpha = alpha_a g.
    let p = abelian.dim();
    let alpha_a = {
        let mut m = Matrix::zeros(p, p);
        for (j, v) in abelian.vectors.iter().enumerate() {
            let c = abelian
                .coordinates(&l.alpha().mul_vec(v))
                .ok_or_else(|| Error::Internal("abelian part is not invariant".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    };
    // Unknown g is p x n, flattened row-major.
    let idx = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<(Vec<Scalar>, Scalar)> = Vec::new();
    for i in 0..p {
        for j in 0..n {
            // (g alpha)[i][j] - (alpha_a g)[i][j] = 0
            let mut row = vec![Scalar::zero(); p * n];
            for t in 0..n {
                row[idx(i, t)] += &l.alpha()[(t, j)];
            }
            for t in 0..p {
                row[idx(t, j)] -= &alpha_a[(i, t)];
            }
            rows.push((row, Scalar::zero()));
        }
        for (q, v) in abelian.vectors.iter().enumerate() {
            let mut row = vec![Scalar::zero(); p * n];
            for j in 0..n {
                row[idx(i, j)] = v[j].clone();
            }
            rows.push((row, if i == q { Scalar::one() } else { Scalar::zero() }));
        }
        let mut row = vec![Scalar::zero(); p * n];
        for j in 0..n {
            row[idx(i, j)] = z[j].clone();
        }
        rows.push((row, Scalar::zero()));
    }
    let g = if p == 0 {
        Matrix::zeros(0, n)
    } else {
        let sysm = Matrix::from_rows(rows.iter().map(|(r, _)| r.clone()).collect())?;
        let rhs: Vec<Scalar> = rows.iter().map(|(_, b)| b.clone()).collect();
        let sol = sysm
            .solve(&rhs)
            .ok_or_else(|| Error::NoInvariantComplement("no alpha-equivariant projection onto the abelian part".into()))?;
        Matrix::from_vec(p, n, sol)?
    };
    let hspace = if p == 0 { SubspaceBasis::whole(n) } else { g.kernel_basis() };

    // Darboux basis of B on a complement of z inside H.
    let mut with_z = vec![z.clone()];
    with_z.extend(hspace.vectors.iter().cloned());
    let comp: Vec<Vec<Scalar>> = SubspaceBasis::span_of(n, &with_z).vectors.into_iter().skip(1).collect();
    let two_m = comp.len();
    let mut gram = Matrix::zeros(two_m, two_m);
    for a in 0..two_m {
        for b in 0..two_m {
            let br = l.bracket(&comp[a], &comp[b]);
            gram[(a, b)] = &br[zi] / &z[zi];
        }
    }
    let pd = darboux_basis(&SkewForm::new(gram)?)?;
    let cm = Matrix::from_columns(n, &comp);
    let mut cols: Vec<Vec<Scalar>> = (&cm * &pd).columns();
    cols.push(z);
    let basis = Matrix::from_columns(n, &cols);
    let m = two_m / 2;
    let mut restricted = Matrix::zeros(two_m + 1, two_m + 1);
    for (j, c) in cols.iter().enumerate() {
        let coords = basis
            .solve(&l.alpha().mul_vec(c))
            .ok_or_else(|| Error::Internal("Heisenberg part is not invariant".into()))?;
        for (i, x) in coords.into_iter().enumerate() {
            restricted[(i, j)] = x;
        }
    }
    let heisenberg = HeisenbergAlgebra::build(m, lambda, restricted)?;
    debug_assert_eq!(heisenberg.algebra().labels(), heisenberg_labels(m).as_slice());
    Ok(Split {
        heisenberg,
        heisenberg_basis: basis,
        abelian,
    })
}
