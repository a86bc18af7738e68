//! Heisenberg Hom-Lie algebras `H^m_lambda` in a symplectic basis
//! `(x_1..x_m, y_1..y_m, z)` with `[x_k, y_k] = z`.

mod decompose;
mod normal_form;
mod split;

pub use decompose::{decompose, DecomposeCase, Decomposition, Piece};
pub use normal_form::{normal_form_dim3, NormalForm, NormalFormTag};
pub use split::{split_heisenberg_abelian, Split, SplitSummary};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, SubspaceBasis};
use crate::homlie::{BracketEntry, HomLieAlgebra};
use crate::symplectic::{lambda_symplectic_report, SkewForm};

/// A Heisenberg Hom-Lie algebra with twist
/// `P = [[X, T, 0], [Z, Y, 0], [L, M, lambda]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeisenbergAlgebra {
    m: usize,
    lambda: Scalar,
    p: Matrix,
    algebra: HomLieAlgebra,
}

pub fn heisenberg_labels(m: usize) -> Vec<String> {
    (1..=m)
        .map(|i| format!("x{i}"))
        .chain((1..=m).map(|i| format!("y{i}")))
        .chain(std::iter::once("z".to_string()))
        .collect()
}

/// The bracket `[x_k, y_k] = z` on `2m + 1` basis vectors.
pub fn heisenberg_entries(m: usize) -> Vec<BracketEntry> {
    (0..m)
        .map(|k| BracketEntry {
            i: k,
            j: m + k,
            coeffs: vec![(2 * m, Scalar::one())],
        })
        .collect()
}

impl HeisenbergAlgebra {
    /// Validate `P` against every defining condition and build the algebra.
    /// All failing conditions are reported together.
    pub fn build(m: usize, lambda: Scalar, p: Matrix) -> Result<Self> {
        let n = 2 * m + 1;
        if p.shape() != (n, n) {
            return Err(Error::Shape(format!(
                "P is {}x{}, expected {n}x{n} for m = {m}",
                p.rows(),
                p.cols()
            )));
        }
        let mut problems = Vec::new();
        if lambda.is_zero() {
            problems.push("lambda must be nonzero".to_string());
        }
        let col_ok = (0..2 * m).all(|i| p[(i, 2 * m)].is_zero()) && p[(2 * m, 2 * m)] == lambda;
        if !col_ok {
            problems.push(format!(
                "last column of P must be (0, ..., 0, {lambda}), found ({})",
                p.col(2 * m).iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            ));
        }
        let s = p.block(0, 0, 2 * m, 2 * m);
        if !lambda_symplectic_report(&s, &lambda)?.symplectic {
            problems.push(format!("symplectic block is not {lambda}-symplectic"));
        }
        let algebra = HomLieAlgebra::from_entries(heisenberg_labels(m), &heisenberg_entries(m), p.clone())?;
        let report = algebra.validate();
        if !report.multiplicative_ok {
            let detail = report
                .witnesses
                .iter()
                .find(|w| w.class == "multiplicative")
                .map(|w| w.detail.clone())
                .unwrap_or_default();
            problems.push(format!("twisting map is not multiplicative: {detail}"));
        }
        if !report.skew_ok || !report.jacobi_ok {
            problems.push("Hom-Lie axioms fail".to_string());
        }
        if !problems.is_empty() {
            return Err(Error::InvalidHeisenberg(problems));
        }
        Ok(HeisenbergAlgebra {
            m,
            lambda,
            p,
            algebra,
        })
    }

    /// `alpha = diag(X, lambda tX^{-1}, lambda)`.
    pub fn block_diagonal(lambda: Scalar, x: &Matrix) -> Result<Self> {
        let m = x.require_square()?;
        if lambda.is_zero() {
            return Err(Error::InvalidHeisenberg(vec!["lambda must be nonzero".into()]));
        }
        let y = x.transpose().inverse()?.scale(&lambda);
        let mut p = Matrix::zeros(2 * m + 1, 2 * m + 1);
        p.set_block(0, 0, x);
        p.set_block(m, m, &y);
        p[(2 * m, 2 * m)] = lambda.clone();
        HeisenbergAlgebra::build(m, lambda, p)
    }

    /// The algebra on `E + E* + C` with
    /// `alpha(x + f + t) = gamma(x) + beta(f) + mu(f) + eta(f) + t lambda`,
    /// valid iff `beta tgamma = lambda I` and `tmu beta = tbeta mu`.
    /// `eta` enters no condition and is stored as the `M` row.
    pub fn from_extension_data(
        gamma: &Matrix,
        beta: &Matrix,
        mu: &Matrix,
        eta: &Matrix,
        lambda: Scalar,
    ) -> Result<Self> {
        let m = gamma.require_square()?;
        if beta.shape() != (m, m) || mu.shape() != (m, m) || eta.shape() != (1, m) {
            return Err(Error::Shape(format!(
                "extension data must be {m}x{m} (beta, mu) and 1x{m} (eta)"
            )));
        }
        if !gamma.is_invertible() {
            return Err(Error::InvalidExtension("gamma is not invertible".into()));
        }
        if beta * &gamma.transpose() != Matrix::scalar(m, &lambda) {
            return Err(Error::InvalidExtension(format!("beta tgamma != {lambda} I")));
        }
        if &mu.transpose() * beta != &beta.transpose() * mu {
            return Err(Error::InvalidExtension("tmu beta != tbeta mu".into()));
        }
        let n = 2 * m + 1;
        let mut p = Matrix::zeros(n, n);
        p.set_block(0, 0, gamma);
        p.set_block(0, m, mu);
        p.set_block(m, m, beta);
        p.set_block(2 * m, m, eta);
        p[(2 * m, 2 * m)] = lambda.clone();
        HeisenbergAlgebra::build(m, lambda, p)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        2 * self.m + 1
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn p(&self) -> &Matrix {
        &self.p
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.algebra
    }

    pub fn x_block(&self) -> Matrix {
        self.p.block(0, 0, self.m, self.m)
    }

    pub fn t_block(&self) -> Matrix {
        self.p.block(0, self.m, self.m, self.m)
    }

    pub fn z_block(&self) -> Matrix {
        self.p.block(self.m, 0, self.m, self.m)
    }

    pub fn y_block(&self) -> Matrix {
        self.p.block(self.m, self.m, self.m, self.m)
    }

    pub fn l_row(&self) -> Matrix {
        self.p.block(2 * self.m, 0, 1, self.m)
    }

    pub fn m_row(&self) -> Matrix {
        self.p.block(2 * self.m, self.m, 1, self.m)
    }

    /// The symplectic block `[[X, T], [Z, Y]]`.
    pub fn symplectic_block(&self) -> Matrix {
        self.p.block(0, 0, 2 * self.m, 2 * self.m)
    }

    /// `T = Z = 0` and `L = M = 0`.
    pub fn is_block_diagonal(&self) -> bool {
        [self.t_block(), self.z_block(), self.l_row(), self.m_row()]
            .iter()
            .all(Matrix::is_zero)
    }

    /// The form `B` with `[u, v] = B(u, v) z`, as a Gram matrix on all
    /// `2m + 1` coordinates (`z` spans its radical).
    pub fn bracket_form(&self) -> SkewForm {
        let n = self.dim();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.algebra.basis_bracket(i, j)[2 * self.m].clone();
            }
        }
        SkewForm::new(g).expect("bracket is skew")
    }

    /// `E = span{x_i}` is isotropic for `B` and of dimension `m`, hence
    /// Lagrangian in `E + E*`.
    pub fn e_is_lagrangian(&self) -> bool {
        let form = self.bracket_form();
        let e = SubspaceBasis::new(self.dim(), (0..self.m).map(|i| crate::exactla::unit_vec(self.dim(), i)).collect())
            .expect("standard vectors are independent");
        let restricted = form.gram().block(0, 0, 2 * self.m, 2 * self.m);
        let e2 = SubspaceBasis::new(
            2 * self.m,
            e.vectors.iter().map(|v| v[..2 * self.m].to_vec()).collect(),
        )
        .expect("independent");
        SkewForm::new(restricted).is_ok_and(|f| f.is_lagrangian(&e2)) && form.is_isotropic(&e)
    }

    /// `P` invertible with `det` of the symplectic block equal to `lambda^m`.
    pub fn is_regular(&self) -> bool {
        let d = self.symplectic_block().det().expect("square");
        self.p.is_invertible() && Some(d) == self.lambda.pow(self.m as i64)
    }
}

/// JSON view of a Heisenberg algebra.
#[derive(Serialize)]
pub struct HeisenbergSummary {
    pub m: usize,
    pub lambda: Scalar,
    #[serde(rename = "P")]
    pub p: Matrix,
}

impl From<&HeisenbergAlgebra> for HeisenbergSummary {
    fn from(h: &HeisenbergAlgebra) -> Self {
        HeisenbergSummary {
            m: h.m,
            lambda: h.lambda.clone(),
            p: h.p.clone(),
        }
    }
}
