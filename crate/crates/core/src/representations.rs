//! Representations (Hom-modules) of Hom-Lie algebras.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::heisenberg::HeisenbergAlgebra;
use crate::homlie::{HomLieAlgebra, Witness};

/// A module `V` of dimension `module_dim` with twist `beta` and action
/// matrices `action[i] = rho(e_i)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Representation {
    pub module_dim: usize,
    pub beta: Matrix,
    pub action: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub ok: bool,
    pub rep1_ok: bool,
    pub rep2_ok: bool,
    pub witnesses: Vec<Witness>,
}

impl Representation {
    pub fn new(beta: Matrix, action: Vec<Matrix>) -> Result<Self> {
        let d = beta.rows();
        if !beta.is_square() {
            return Err(Error::RepresentationShape("beta is not square".into()));
        }
        if let Some(i) = action.iter().position(|a| a.shape() != (d, d)) {
            return Err(Error::RepresentationShape(format!(
                "action matrix {i} is not {d}x{d}"
            )));
        }
        Ok(Representation {
            module_dim: d,
            beta,
            action,
        })
    }

    pub fn algebra_dim(&self) -> usize {
        self.action.len()
    }

    /// `rho(x)` for a coordinate vector `x` of the algebra.
    pub fn rho(&self, x: &[Scalar]) -> Matrix {
        let d = self.module_dim;
        x.iter()
            .zip(&self.action)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(d, d), |acc, (c, a)| &acc + &a.scale(c))
    }

    fn check_shape(&self, l: &HomLieAlgebra) -> Result<()> {
        if self.action.len() != l.dim() {
            return Err(Error::RepresentationShape(format!(
                "{} action matrices for an algebra of dimension {}",
                self.action.len(),
                l.dim()
            )));
        }
        if self.beta.shape() != (self.module_dim, self.module_dim) {
            return Err(Error::RepresentationShape("beta does not match module_dim".into()));
        }
        Ok(())
    }
}

/// Check `rho(alpha x) beta = beta rho(x)` and
/// `rho([x, y]) beta = rho(alpha x) rho(y) - rho(alpha y) rho(x)` on basis
/// elements.
pub fn check_representation(l: &HomLieAlgebra, r: &Representation) -> Result<RepresentationReport> {
    r.check_shape(l)?;
    let n = l.dim();
    let alpha_cols = l.alpha().columns();
    let rho_alpha: Vec<Matrix> = alpha_cols.iter().map(|c| r.rho(c)).collect();
    let mut w1 = Vec::new();
    let mut w2 = Vec::new();
    for i in 0..n {
        if &rho_alpha[i] * &r.beta != &r.beta * &r.action[i] {
            w1.push(Witness {
                class: "rep1".into(),
                indices: vec![i],
                labels: vec![l.labels()[i].clone()],
                detail: format!("rho(alpha({0})) beta != beta rho({0})", l.labels()[i]),
            });
        }
        for j in i + 1..n {
            let lhs = &r.rho(l.basis_bracket(i, j)) * &r.beta;
            let rhs = &(&rho_alpha[i] * &r.action[j]) - &(&rho_alpha[j] * &r.action[i]);
            if lhs != rhs {
                w2.push(Witness {
                    class: "rep2".into(),
                    indices: vec![i, j],
                    labels: vec![l.labels()[i].clone(), l.labels()[j].clone()],
                    detail: format!(
                        "rho([{a},{b}]) beta != rho(alpha({a})) rho({b}) - rho(alpha({b})) rho({a})",
                        a = l.labels()[i],
                        b = l.labels()[j]
                    ),
                });
            }
        }
    }
    let (rep1_ok, rep2_ok) = (w1.is_empty(), w2.is_empty());
    Ok(RepresentationReport {
        ok: rep1_ok && rep2_ok,
        rep1_ok,
        rep2_ok,
        witnesses: w1.into_iter().take(10).chain(w2.into_iter().take(10)).collect(),
    })
}

/// `beta` invertible and `x -> rho(x)` injective.
pub fn is_faithful(r: &Representation) -> bool {
    if !r.beta.is_invertible() {
        return false;
    }
    let d2 = r.module_dim * r.module_dim;
    let cols: Vec<Vec<Scalar>> = r.action.iter().map(|a| a.entries().to_vec()).collect();
    Matrix::from_columns(d2, &cols).rank() == r.action.len()
}

/// Zero action on a `d`-dimensional module with `beta = I`.
pub fn trivial_rep(l: &HomLieAlgebra, d: usize) -> Result<Representation> {
    if d == 0 {
        return Err(Error::RepresentationShape("module dimension must be at least 1".into()));
    }
    Representation::new(Matrix::identity(d), vec![Matrix::zeros(d, d); l.dim()])
}

/// The `(m+2)`-dimensional faithful module of a Heisenberg algebra whose
/// twist is `diag(X, Y, lambda)`: `beta = diag(Y, lambda, 1)`,
/// `x_i . v_j = delta_ij v_{m+1}`, `y_i . v_{m+2} = beta(v_i)`,
/// `z . v_{m+2} = lambda v_{m+1}` (1-based module indices).
pub fn minimal_faithful(h: &HeisenbergAlgebra) -> Result<Representation> {
    if !h.is_block_diagonal() {
        return Err(Error::NotBlockDiagonal(
            "minimal faithful module needs alpha = diag(X, Y, lambda)".into(),
        ));
    }
    let m = h.m();
    let d = m + 2;
    let y = h.y_block();
    let lambda = h.lambda();
    let mut beta = Matrix::zeros(d, d);
    beta.set_block(0, 0, &y);
    beta[(m, m)] = lambda.clone();
    beta[(m + 1, m + 1)] = Scalar::one();

    let mut action = Vec::with_capacity(2 * m + 1);
    for i in 0..m {
        action.push(Matrix::unit(d, d, m, i));
    }
    for i in 0..m {
        let mut a = Matrix::zeros(d, d);
        for k in 0..m {
            a[(k, m + 1)] = y[(k, i)].clone();
        }
        action.push(a);
    }
    let mut rz = Matrix::zeros(d, d);
    rz[(m, m + 1)] = lambda.clone();
    action.push(rz);
    Representation::new(beta, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Matrix;

    fn h(diag: &[i64], lambda: i64) -> HeisenbergAlgebra {
        let m = (diag.len() - 1) / 2;
        HeisenbergAlgebra::build(m, Scalar::from(lambda), Matrix::diag_ints(diag)).unwrap()
    }

    #[test]
    fn adjoint_and_trivial_pass() {
        let h1 = h(&[2, 3, 6], 6);
        let adj = h1.algebra().adjoint_rep().unwrap();
        assert!(check_representation(h1.algebra(), &adj).unwrap().ok);
        assert!(!is_faithful(&adj));
        let t = trivial_rep(h1.algebra(), 2).unwrap();
        assert!(check_representation(h1.algebra(), &t).unwrap().ok);
        assert!(!is_faithful(&t));
        assert!(trivial_rep(h1.algebra(), 0).is_err());
    }

    #[test]
    fn minimal_faithful_m1() {
        let h1 = h(&[2, 3, 6], 6);
        let r = minimal_faithful(&h1).unwrap();
        assert_eq!(r.module_dim, 3);
        assert_eq!(r.beta, Matrix::diag_ints(&[3, 6, 1]));
        assert_eq!(r.action[0], Matrix::unit(3, 3, 1, 0));
        assert_eq!(r.action[1], Matrix::unit(3, 3, 0, 2).scale(&Scalar::from(3)));
        assert_eq!(r.action[2], Matrix::unit(3, 3, 1, 2).scale(&Scalar::from(6)));
        assert!(check_representation(h1.algebra(), &r).unwrap().ok);
        assert!(is_faithful(&r));
    }

    #[test]
    fn corrupted_beta_breaks_rep1() {
        let h1 = h(&[2, 3, 6], 6);
        let mut r = minimal_faithful(&h1).unwrap();
        r.beta[(1, 1)] = Scalar::from(7);
        let rep = check_representation(h1.algebra(), &r).unwrap();
        assert!(!rep.rep1_ok);
        assert!(rep.witnesses.iter().any(|w| w.class == "rep1"));
    }

    #[test]
    fn minimal_faithful_m2_and_shape_errors() {
        let h2 = h(&[2, -2, 3, -3, 6], 6);
        let r = minimal_faithful(&h2).unwrap();
        assert_eq!(r.module_dim, 4);
        assert!(check_representation(h2.algebra(), &r).unwrap().ok && is_faithful(&r));
        let short = Representation::new(Matrix::identity(2), vec![Matrix::zeros(2, 2)]).unwrap();
        assert!(matches!(
            check_representation(h2.algebra(), &short),
            Err(Error::RepresentationShape(_))
        ));
    }

    #[test]
    fn json_shape() {
        let r = trivial_rep(h(&[2, 3, 6], 6).algebra(), 1).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["module_dim"], 1);
        assert_eq!(v["beta"], serde_json::json!([["1"]]));
        let back: Representation = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
