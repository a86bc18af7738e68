//! Exact arithmetic over Q(i) and the dense linear algebra built on it.

mod matrix;
mod poly;
mod rowspace;
mod scalar;

pub use matrix::{Matrix, SubspaceBasis};
pub use poly::{char_poly, eigenvalues, generalized_eigenspaces, Polynomial};
pub use rowspace::RowReducer;
pub use scalar::Scalar;

/// Convert integers into scalars.
pub fn svec(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from(x)).collect()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_vec(s: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| s * x).collect()
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}
