//! The block description of alpha^k-derivations of a Heisenberg algebra with
//! `alpha = diag(X, lambda tX^{-1}, lambda)`, and the closed-form dimension.

use serde::Serialize;

use super::{der_space, DerBlocks};
use crate::error::{Error, Result};
use crate::exactla::{char_poly, eigenvalues, Matrix, Scalar};
use crate::heisenberg::HeisenbergAlgebra;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockCheck {
    pub pass: bool,
    /// `(identity, holds)` in a fixed order.
    pub conditions: Vec<(String, bool)>,
    pub mu: Scalar,
}

fn require_block_diagonal(h: &HeisenbergAlgebra) -> Result<()> {
    if h.is_block_diagonal() {
        Ok(())
    } else {
        Err(Error::NotBlockDiagonal("the block theorem needs alpha = diag(X, Y, lambda)".into()))
    }
}

/// Evaluate each block identity separately.
pub fn der_block_check(h: &HeisenbergAlgebra, d: &Matrix, k: i64) -> Result<BlockCheck> {
    require_block_diagonal(h)?;
    let n = h.dim();
    if d.shape() != (n, n) {
        return Err(Error::Shape(format!("D must be {n}x{n}")));
    }
    if k < -1 {
        return Err(Error::BadDegree(k));
    }
    let m = h.m();
    let b = DerBlocks::of(d, m);
    let lambda = h.lambda();
    let x = h.x_block();
    let xt = x.transpose();
    let xk = x.pow(k)?;
    let xkt = xk.transpose();
    let lk = lambda.pow(k).ok_or(Error::SingularPower(k))?;
    let d4_want = &xt.pow(-k)?.scale(&b.mu) - &(&b.d1 * &x.pow(-2 * k)?).transpose().scale(&lk);
    let (ut, vt) = (b.u.transpose(), b.v.transpose());

    let conditions = vec![
        ("D(z) in Cz", b.dz_off.is_zero()),
        ("D1 X = X D1", &b.d1 * &x == &x * &b.d1),
        ("tX D2 X = lambda D2", &(&xt * &b.d2) * &x == b.d2.scale(lambda)),
        ("tX^k D2 = tD2 X^k", &xkt * &b.d2 == &b.d2.transpose() * &xk),
        ("X D3 tX = lambda D3", &(&x * &b.d3) * &xt == b.d3.scale(lambda)),
        ("X^k tD3 = D3 tX^k", &xk * &b.d3.transpose() == &b.d3 * &xkt),
        ("D4 = mu tX^-k - lambda^k t(D1 X^-2k)", b.d4 == d4_want),
        ("tX tU = lambda tU", &xt * &ut == ut.scale(lambda)),
        ("X tV = tV", &x * &vt == vt),
    ];
    Ok(BlockCheck {
        pass: conditions.iter().all(|(_, ok)| *ok),
        conditions: conditions.into_iter().map(|(s, ok)| (s.to_string(), ok)).collect(),
        mu: b.mu,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerDimPrediction {
    pub case_tag: String,
    pub chi_one_zero: bool,
    pub chi_lambda_zero: bool,
    /// Distinct eigenvalues `l_i` of `X` with `chi(lambda / l_i) = 0`.
    pub card_i: usize,
    /// `sum m_i dim E_{l_i}`.
    pub commutant_dim: usize,
    pub dim_e1: usize,
    pub dim_elambda: usize,
    pub predicted_dim: usize,
}

/// The closed-form dimension of `Der_{alpha^k}`, from the spectrum of `X`.
pub fn der_dim_predict(h: &HeisenbergAlgebra, k: i64) -> Result<DerDimPrediction> {
    der_dim_predict_with(h, k, &[])
}

/// As [`der_dim_predict`], with Gaussian eigenvalues of `X` supplied.
pub fn der_dim_predict_with(h: &HeisenbergAlgebra, k: i64, supplied: &[Scalar]) -> Result<DerDimPrediction> {
    require_block_diagonal(h)?;
    if k < -1 {
        return Err(Error::BadDegree(k));
    }
    let x = h.x_block();
    let m = h.m();
    let lambda = h.lambda();
    let chi = char_poly(&x)?;
    let spec = eigenvalues(&x, supplied)?;
    let eig_dim = |mu: &Scalar| (&x - &Matrix::scalar(m, mu)).kernel_basis().dim();

    let card_i = spec
        .iter()
        .filter(|(li, _)| chi.eval(&(lambda / li)).is_zero())
        .count();
    let commutant_dim = spec.iter().map(|(li, mi)| mi * eig_dim(li)).sum();
    let chi_one_zero = chi.eval(&Scalar::one()).is_zero();
    let chi_lambda_zero = chi.eval(lambda).is_zero();
    let dim_e1 = eig_dim(&Scalar::one());
    let dim_elambda = eig_dim(lambda);
    let mut predicted_dim = card_i + commutant_dim + 1;
    if chi_one_zero {
        predicted_dim += dim_e1;
    }
    if chi_lambda_zero {
        predicted_dim += dim_elambda;
    }
    let case_tag = format!(
        "chi(1){}0,chi(lambda){}0",
        if chi_one_zero { "=" } else { "!=" },
        if chi_lambda_zero { "=" } else { "!=" }
    );
    Ok(DerDimPrediction {
        case_tag,
        chi_one_zero,
        chi_lambda_zero,
        card_i,
        commutant_dim,
        dim_e1,
        dim_elambda,
        predicted_dim,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerDimComparison {
    pub prediction: DerDimPrediction,
    pub predicted: usize,
    pub computed: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Prediction against the kernel computation. Disagreement is reported, not
/// raised.
pub fn der_dim_compare(h: &HeisenbergAlgebra, k: i64) -> Result<DerDimComparison> {
    let prediction = der_dim_predict(h, k)?;
    let computed = der_space(h.algebra(), k)?.dim;
    Ok(DerDimComparison {
        predicted: prediction.predicted_dim,
        computed,
        matches: prediction.predicted_dim == computed,
        prediction,
    })
}
