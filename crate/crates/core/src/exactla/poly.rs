//! Characteristic polynomials and exact eigenvalue bookkeeping.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Matrix, Scalar, SubspaceBasis};
use crate::error::{Error, Result};

/// A polynomial with coefficients in ascending degree order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial(Vec<Scalar>);

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    /// Ascending coefficients; the zero polynomial has none.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.0
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Substitute a square matrix for the variable.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        self.0.iter().rev().fold(Matrix::zeros(n, n), |acc, c| {
            &(&acc * m) + &Matrix::scalar(n, c)
        })
    }

    /// Divide by `x - root`, returning quotient and remainder.
    pub fn div_linear(&self, root: &Scalar) -> (Polynomial, Scalar) {
        if self.0.is_empty() {
            return (Polynomial(vec![]), Scalar::zero());
        }
        let mut q = vec![Scalar::zero(); self.0.len() - 1];
        let mut carry = Scalar::zero();
        for (i, c) in self.0.iter().enumerate().rev() {
            let v = c + &(&carry * root);
            if i == 0 {
                return (Polynomial::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Multiplicity of `root` (0 when it is not a root).
    pub fn multiplicity(&self, root: &Scalar) -> usize {
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, r) = p.div_linear(root);
            if !r.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    /// All rational roots, ascending, with multiplicities.
    pub fn rational_roots(&self) -> Result<Vec<(BigRational, usize)>> {
        if self.is_zero() {
            return Err(Error::Internal("zero polynomial has every root".into()));
        }
        // A rational root of p is a common root of Re p and Im p.
        let re: Vec<BigRational> = self.0.iter().map(|c| c.re().clone()).collect();
        let im: Vec<BigRational> = self.0.iter().map(|c| c.im().clone()).collect();
        let base = if re.iter().any(|c| !c.is_zero()) { re } else { im };
        let mut found = Vec::new();
        for cand in rational_root_candidates(&base)? {
            let k = self.multiplicity(&Scalar::from_rational(cand.clone()));
            if k > 0 {
                found.push((cand, k));
            }
        }
        found.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(found)
    }
}

/// Candidates `±p/q` from the rational root theorem, plus 0 when it is a root.
fn rational_root_candidates(coeffs: &[BigRational]) -> Result<Vec<BigRational>> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut out = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        out.push(BigRational::zero());
    }
    let ints = &ints[low..];
    if ints.len() <= 1 {
        return Ok(out);
    }
    let ps = divisors(&ints[0].abs())?;
    let qs = divisors(&ints[ints.len() - 1].abs())?;
    let mut seen = std::collections::BTreeSet::new();
    for p in &ps {
        for q in &qs {
            for s in [1i32, -1] {
                let c = BigRational::new(BigInt::from(s) * p, q.clone());
                seen.insert(c);
            }
        }
    }
    out.extend(seen);
    Ok(out)
}

const DIVISOR_SEARCH_LIMIT: u128 = 10_000_000_000_000_000;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let v = n
        .to_u128()
        .filter(|&v| v <= DIVISOR_SEARCH_LIMIT)
        .ok_or_else(|| {
            Error::Internal(format!(
                "coefficient {n} too large for the rational-root search; supply eigenvalues explicitly"
            ))
        })?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u128 = 1;
    while d * d <= v {
        if v % d == 0 {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small.into_iter().map(BigInt::from).collect())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_real() && c.re().is_negative();
            let mag = if neg { -c } else { c.clone() };
            let coeff = if c.is_real() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coeff}*x")?,
                (_, true) => write!(f, "x^{d}")?,
                (_, false) => write!(f, "{coeff}*x^{d}")?,
            }
        }
        Ok(())
    }
}

/// `det(xI - M)` by the Faddeev-LeVerrier recurrence.
pub fn char_poly(m: &Matrix) -> Result<Polynomial> {
    let n = m.require_square()?;
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        mk = &(m * &mk) + &Matrix::scalar(n, &coeffs[n + 1 - k]);
        let tr = (m * &mk).trace();
        coeffs[n - k] = -(tr / Scalar::from(k as i64));
    }
    Ok(Polynomial::new(coeffs))
}

/// Eigenvalues of `m` with algebraic multiplicities, sorted lexicographically.
///
/// Rational eigenvalues are discovered automatically. Each value in `supplied`
/// must be a root; for a characteristic polynomial with rational coefficients
/// the conjugate of a supplied Gaussian value is added as well. Fails when the
/// multiplicities found do not account for the full degree.
pub fn eigenvalues(m: &Matrix, supplied: &[Scalar]) -> Result<Vec<(Scalar, usize)>> {
    let chi = char_poly(m)?;
    let n = m.rows();
    let mut found: Vec<(Scalar, usize)> = chi
        .rational_roots()?
        .into_iter()
        .map(|(r, k)| (Scalar::from_rational(r), k))
        .collect();
    let real_poly = chi.coeffs().iter().all(Scalar::is_real);
    for v in supplied {
        let k = chi.multiplicity(v);
        if k == 0 {
            return Err(Error::NotAnEigenvalue { value: v.clone() });
        }
        let mut vals = vec![v.clone()];
        if real_poly && !v.is_real() {
            vals.push(v.conj());
        }
        for w in vals {
            if !found.iter().any(|(f, _)| *f == w) {
                let k = chi.multiplicity(&w);
                found.push((w, k));
            }
        }
    }
    found.sort_by(|a, b| a.0.lex_cmp(&b.0));
    let total: usize = found.iter().map(|(_, k)| k).sum();
    if total != n {
        return Err(Error::EigenvaluesOutsideField { found: total, needed: n });
    }
    Ok(found)
}

/// Generalized eigenspaces `ker (M - l I)^k` for the supplied `(l, k)` pairs,
/// where `k` must be the algebraic multiplicity of `l`.
pub fn generalized_eigenspaces(
    m: &Matrix,
    eigs: &[(Scalar, usize)],
) -> Result<Vec<(Scalar, SubspaceBasis)>> {
    let n = m.require_square()?;
    let chi = char_poly(m)?;
    let total: usize = eigs.iter().map(|(_, k)| k).sum();
    if total > n {
        return Err(Error::Shape(format!(
            "multiplicities sum to {total} > {n}"
        )));
    }
    eigs.iter()
        .map(|(l, k)| {
            let actual = chi.multiplicity(l);
            if actual == 0 {
                return Err(Error::NotAnEigenvalue { value: l.clone() });
            }
            if actual != *k {
                return Err(Error::MultiplicityMismatch {
                    value: l.clone(),
                    claimed: *k,
                    actual,
                });
            }
            let shifted = m - &Matrix::scalar(n, l);
            let space = shifted.pow(*k as i64)?.kernel_basis();
            Ok((l.clone(), space))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from(x)).collect()
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            char_poly(&Matrix::diag_ints(&[2, 3])).unwrap().coeffs(),
            ints(&[6, -5, 1]).as_slice()
        );
        assert_eq!(
            char_poly(&Matrix::ints(&[[0, 1], [0, 0]])).unwrap().coeffs(),
            ints(&[0, 0, 1]).as_slice()
        );
        let p = char_poly(&Matrix::ints(&[[2, 1], [0, 2]])).unwrap();
        assert_eq!(p.coeffs(), ints(&[4, -4, 1]).as_slice());
        assert_eq!(p.to_string(), "x^2 - 4*x + 4");
        assert!(char_poly(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn generalized_eigenspace_examples() {
        let w = generalized_eigenspaces(
            &Matrix::diag_ints(&[2, 3]),
            &[(Scalar::from(2), 1), (Scalar::from(3), 1)],
        )
        .unwrap();
        assert_eq!(w[0].1.vectors, vec![ints(&[1, 0])]);
        assert_eq!(w[1].1.vectors, vec![ints(&[0, 1])]);

        let w = generalized_eigenspaces(&Matrix::ints(&[[1, 1], [0, 1]]), &[(Scalar::from(1), 2)])
            .unwrap();
        assert_eq!(w[0].1.dim(), 2);

        let w = generalized_eigenspaces(
            &Matrix::diag_ints(&[2, 2, 3]),
            &[(Scalar::from(2), 2), (Scalar::from(3), 1)],
        )
        .unwrap();
        assert_eq!((w[0].1.dim(), w[1].1.dim()), (2, 1));
    }

    #[test]
    fn generalized_eigenspace_errors() {
        let m = Matrix::diag_ints(&[2, 2, 3]);
        assert!(matches!(
            generalized_eigenspaces(&m, &[(Scalar::from(5), 1)]),
            Err(Error::NotAnEigenvalue { .. })
        ));
        assert!(matches!(
            generalized_eigenspaces(&m, &[(Scalar::from(2), 1)]),
            Err(Error::MultiplicityMismatch { actual: 2, .. })
        ));
    }

    #[test]
    fn eigenvalue_discovery() {
        let m = Matrix::ints(&[[0, -1], [1, 0]]);
        assert!(matches!(
            eigenvalues(&m, &[]),
            Err(Error::EigenvaluesOutsideField { found: 0, needed: 2 })
        ));
        let e = eigenvalues(&m, &[Scalar::i()]).unwrap();
        assert_eq!(e, vec![(-Scalar::i(), 1), (Scalar::i(), 1)]);
        let e = eigenvalues(&Matrix::ints(&[[3, 0, 0], [1, 3, 0], [0, 0, 0]]), &[]).unwrap();
        assert_eq!(e, vec![(Scalar::zero(), 1), (Scalar::from(3), 2)]);
        let half = Matrix::diag(&[Scalar::frac(1, 2), Scalar::frac(-2, 3)]);
        let e = eigenvalues(&half, &[]).unwrap();
        assert_eq!(e[0].0, Scalar::frac(-2, 3));
        assert!(eigenvalues(&Matrix::ints(&[[0, 2], [1, 0]]), &[]).is_err());
    }

    fn arb_square(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-4i64..5, n * n).prop_map(move |v| {
            Matrix::from_vec(n, n, v.into_iter().map(Scalar::from).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn cayley_hamilton(m in (1usize..7).prop_flat_map(arb_square)) {
            let p = char_poly(&m).unwrap();
            prop_assert!(p.eval_matrix(&m).is_zero());
        }

        #[test]
        fn char_poly_constant_term_is_signed_det(m in (1usize..5).prop_flat_map(arb_square)) {
            let p = char_poly(&m).unwrap();
            let n = m.rows() as i64;
            let sign = if n % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            prop_assert_eq!(p.eval(&Scalar::zero()), sign * m.det().unwrap());
        }

        #[test]
        fn eigenspace_dims_sum_to_n(d in proptest::collection::vec(-3i64..4, 1..6)) {
            // Conjugating a diagonal by a unipotent matrix hides the spectrum.
            let n = d.len();
            let mut u = Matrix::identity(n);
            for i in 0..n { for j in i + 1..n { u[(i, j)] = Scalar::from(((i + 2 * j) % 3) as i64 - 1); } }
            let m = &(&u * &Matrix::diag_ints(&d)) * &u.inverse().unwrap();
            let eigs = eigenvalues(&m, &[]).unwrap();
            let spaces = generalized_eigenspaces(&m, &eigs).unwrap();
            prop_assert_eq!(spaces.iter().map(|(_, s)| s.dim()).sum::<usize>(), n);
        }
    }
}
