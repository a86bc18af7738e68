//! lambda-symplectic matrices, Darboux bases and the twisted algebras sp_k.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{dot, Matrix, Scalar, SubspaceBasis};

/// The standard form `B = [[0, I], [-I, 0]]` of size `2m`.
pub fn standard_form(m: usize) -> Matrix {
    let mut b = Matrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        b[(i, m + i)] = Scalar::one();
        b[(m + i, i)] = -Scalar::one();
    }
    b
}

/// Outcome of the lambda-symplectic test.
///
/// The block identities use `S = [[X, Z], [T, Y]]` (X top-left, Z top-right,
/// T bottom-left, Y bottom-right): `tX T = tT X`, `tZ Y = tY Z` and
/// `tX Y - tT Z = lambda I`. Together they are equivalent to
/// `tS B S = lambda B`; `consistent` records that both evaluations agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymplecticReport {
    pub symplectic: bool,
    pub xt_symmetric: bool,
    pub zy_symmetric: bool,
    pub xy_minus_tz_scalar: bool,
    pub consistent: bool,
}

pub fn lambda_symplectic_report(s: &Matrix, lambda: &Scalar) -> Result<SymplecticReport> {
    let n = s.require_square()?;
    if n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    let m = n / 2;
    let b = standard_form(m);
    let symplectic = &(&s.transpose() * &b) * s == b.scale(lambda);
    let x = s.block(0, 0, m, m);
    let z = s.block(0, m, m, m);
    let t = s.block(m, 0, m, m);
    let y = s.block(m, m, m, m);
    let (xt, zt) = (x.transpose(), z.transpose());
    let (tt, yt) = (t.transpose(), y.transpose());
    let c1 = &xt * &t == &tt * &x;
    let c2 = &zt * &y == &yt * &z;
    let c3 = &(&xt * &y) - &(&tt * &z) == Matrix::scalar(m, lambda);
    Ok(SymplecticReport {
        symplectic,
        xt_symmetric: c1,
        zy_symmetric: c2,
        xy_minus_tz_scalar: c3,
        consistent: symplectic == (c1 && c2 && c3),
    })
}

/// `tS B S = lambda B`.
pub fn is_lambda_symplectic(s: &Matrix, lambda: &Scalar) -> Result<bool> {
    Ok(lambda_symplectic_report(s, lambda)?.symplectic)
}

/// The multiplier `lambda` with `tS B S = lambda B`, if there is one.
pub fn symplectic_multiplier(s: &Matrix) -> Result<Option<Scalar>> {
    let n = s.require_square()?;
    if n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    if n == 0 {
        return Ok(Some(Scalar::one()));
    }
    let m = n / 2;
    let g = &(&s.transpose() * &standard_form(m)) * s;
    let lambda = g[(0, m)].clone();
    Ok((g == standard_form(m).scale(&lambda)).then_some(lambda))
}

/// A skew-symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewForm {
    gram: Matrix,
}

impl SkewForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        gram.require_square()?;
        if !gram.is_skew_symmetric() {
            return Err(Error::Shape("Gram matrix is not skew-symmetric".into()));
        }
        Ok(SkewForm { gram })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        dot(u, &self.gram.mul_vec(v))
    }

    /// `{v : w(u, v) = 0 for all u in U}`.
    pub fn orthogonal(&self, u: &SubspaceBasis) -> SubspaceBasis {
        if u.dim() == 0 {
            return SubspaceBasis::whole(self.dim());
        }
        (&u.as_columns().transpose() * &self.gram).kernel_basis()
    }

    pub fn is_isotropic(&self, u: &SubspaceBasis) -> bool {
        u.is_subspace_of(&self.orthogonal(u))
    }

    pub fn is_lagrangian(&self, u: &SubspaceBasis) -> bool {
        self.is_isotropic(u) && 2 * u.dim() == self.dim()
    }

    /// For isotropic `U`, an isotropic `W` with `w(u_i, w_j) = delta_ij`,
    /// so that `U + W` is symplectic and `U ∩ W = 0`.
    pub fn isotropic_complement(&self, u: &SubspaceBasis) -> Result<SubspaceBasis> {
        if !self.is_isotropic(u) {
            return Err(Error::Shape("subspace is not isotropic".into()));
        }
        let k = u.dim();
        if k == 0 {
            return Ok(SubspaceBasis::zero(self.dim()));
        }
        let rows = &u.as_columns().transpose() * &self.gram;
        let mut v = Vec::with_capacity(k);
        for i in 0..k {
            let rhs: Vec<Scalar> = (0..k).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect();
            v.push(rows.solve(&rhs).ok_or(Error::DegenerateForm)?);
        }
        // w_i = v_i - 1/2 sum_j w(v_i, v_j) u_j is isotropic.
        let half = Scalar::frac(1, 2);
        let w: Vec<Vec<Scalar>> = (0..k)
            .map(|i| {
                let mut wi = v[i].clone();
                for (j, vj) in v.iter().enumerate() {
                    let a = &self.eval(&v[i], vj) * &half;
                    for (x, uj) in wi.iter_mut().zip(&u.vectors[j]) {
                        *x -= &(&a * uj);
                    }
                }
                wi
            })
            .collect();
        SubspaceBasis::new(self.dim(), w)
    }
}

/// A change of basis `P` with `tP gram P = B`: greedy skew Gram-Schmidt.
pub fn darboux_basis(form: &SkewForm) -> Result<Matrix> {
    let n = form.dim();
    if n % 2 != 0 {
        return Err(Error::OddDimension(n));
    }
    if form.gram.det()?.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let mut rest: Vec<Vec<Scalar>> = Matrix::identity(n).columns();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    while !rest.is_empty() {
        let pair = (0..rest.len()).find_map(|a| {
            (0..rest.len()).find_map(|b| {
                let w = form.eval(&rest[a], &rest[b]);
                (!w.is_zero()).then_some((a, b, w))
            })
        });
        let (a, b, w) = pair.ok_or(Error::DegenerateForm)?;
        let x = rest[a].clone();
        let winv = w.inv().expect("nonzero");
        let y: Vec<Scalar> = rest[b].iter().map(|c| c * &winv).collect();
        rest = rest
            .into_iter()
            .enumerate()
            .filter(|(i, _)| *i != a && *i != b)
            .map(|(_, r)| {
                let ry = form.eval(&r, &y);
                let rx = form.eval(&r, &x);
                r.iter()
                    .zip(&x)
                    .zip(&y)
                    .map(|((ri, xi), yi)| &(ri - &(&ry * xi)) + &(&rx * yi))
                    .collect::<Vec<_>>()
            })
            .filter(|r| r.iter().any(|c| !c.is_zero()))
            .collect();
        xs.push(x);
        ys.push(y);
    }
    xs.extend(ys);
    let p = Matrix::from_columns(n, &xs);
    debug_assert_eq!(&(&p.transpose() * &form.gram) * &p, standard_form(n / 2));
    Ok(p)
}

/// `w(f x, S^k y) + w(S^k x, f y) = 0` for all `x, y`, i.e.
/// `tf B S^k + t(S^k) B f = 0`. `S` must be lambda-symplectic for some lambda.
pub fn sp_k_membership(f: &Matrix, s: &Matrix, k: u32) -> Result<bool> {
    if symplectic_multiplier(s)?.is_none() {
        return Err(Error::NotLambdaSymplectic);
    }
    if f.shape() != s.shape() {
        return Err(Error::Shape("f and S must have the same size".into()));
    }
    let b = standard_form(s.rows() / 2);
    let sk = s.pow(k as i64)?;
    let lhs = &(&(&f.transpose() * &b) * &sk) + &(&(&sk.transpose() * &b) * f);
    Ok(lhs.is_zero())
}

/// `A = S^k M` with `M = [[U, W], [V, -tU]]`, `V` and `W` symmetric.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpFactor {
    pub m: Matrix,
    pub u: Matrix,
    pub v: Matrix,
    pub w: Matrix,
}

impl SpFactor {
    pub fn reassemble(&self, s: &Matrix, k: u32) -> Result<Matrix> {
        Ok(&s.pow(k as i64)? * &self.m)
    }
}

pub fn sp_k_factor(a: &Matrix, s: &Matrix, k: u32) -> Result<SpFactor> {
    if symplectic_multiplier(s)?.is_none() {
        return Err(Error::NotLambdaSymplectic);
    }
    let m = s.rows() / 2;
    if !s.block(0, m, m, m).is_zero() || !s.block(m, 0, m, m).is_zero() {
        return Err(Error::NotBlockDiagonal("S must be diag(X, lambda tX^-1)".into()));
    }
    if !sp_k_membership(a, s, k)? {
        return Err(Error::NotInSymplecticAlgebra(format!("{a:?}")));
    }
    let mm = &s.pow(-(k as i64))? * a;
    let u = mm.block(0, 0, m, m);
    let w = mm.block(0, m, m, m);
    let v = mm.block(m, 0, m, m);
    if !w.is_symmetric() || !v.is_symmetric() || mm.block(m, m, m, m) != -u.transpose() {
        return Err(Error::Internal("member of sp_k without the expected factor shape".into()));
    }
    Ok(SpFactor { m: mm, u, v, w })
}

/// Membership in `Z(s) = {m : m s = s m}`.
pub fn commutes_with(m: &Matrix, s: &Matrix) -> bool {
    m.shape() == s.shape() && m * s == s * m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lambda_symplectic_examples() {
        assert!(is_lambda_symplectic(&Matrix::identity(2), &Scalar::one()).unwrap());
        let s = Matrix::diag_ints(&[2, 3]);
        let r = lambda_symplectic_report(&s, &Scalar::from(6)).unwrap();
        assert!(r.symplectic && r.consistent);
        let r = lambda_symplectic_report(&s, &Scalar::from(5)).unwrap();
        assert!(!r.symplectic && !r.xy_minus_tz_scalar && r.consistent);
        assert_eq!(is_lambda_symplectic(&Matrix::identity(3), &Scalar::one()), Err(Error::OddDimension(3)));
    }

    #[test]
    fn block_conditions_track_each_block() {
        // [[X, Z], [T, Y]] with Z = 1 and X = Y = 1, T = 0: lambda = 1.
        let s = Matrix::ints(&[[1, 1], [0, 1]]);
        let r = lambda_symplectic_report(&s, &Scalar::one()).unwrap();
        assert!(r.symplectic && r.consistent);
        let s4 = Matrix::ints(&[[1, 0, 1, 2], [0, 1, 3, 1], [0, 0, 1, 0], [0, 0, 0, 1]]);
        let r = lambda_symplectic_report(&s4, &Scalar::one()).unwrap();
        assert!(!r.symplectic && !r.zy_symmetric && r.consistent);
    }

    #[test]
    fn darboux_examples() {
        let b = SkewForm::new(standard_form(2)).unwrap();
        assert_eq!(darboux_basis(&b).unwrap(), Matrix::identity(4));
        let g = SkewForm::new(Matrix::ints(&[[0, 2], [-2, 0]])).unwrap();
        assert_eq!(darboux_basis(&g).unwrap(), Matrix::diag(&[Scalar::one(), Scalar::frac(1, 2)]));
        let d = SkewForm::new(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(darboux_basis(&d), Err(Error::DegenerateForm));
        assert!(SkewForm::new(Matrix::identity(2)).is_err());
    }

    #[test]
    fn sp_k_examples() {
        let s = Matrix::diag_ints(&[2, 3]);
        assert!(sp_k_membership(&Matrix::zeros(2, 2), &s, 1).unwrap());
        let f = sp_k_factor(&Matrix::zeros(2, 2), &s, 1).unwrap();
        assert!(f.m.is_zero());

        let a = Matrix::diag_ints(&[2, -3]);
        assert!(sp_k_membership(&a, &s, 1).unwrap());
        let f = sp_k_factor(&a, &s, 1).unwrap();
        assert_eq!(f.m, Matrix::diag_ints(&[1, -1]));
        assert_eq!(f.u, Matrix::diag_ints(&[1]));
        assert_eq!(f.reassemble(&s, 1).unwrap(), a);

        assert!(!sp_k_membership(&Matrix::identity(2), &s, 1).unwrap());
        assert!(matches!(
            sp_k_factor(&Matrix::identity(2), &s, 1),
            Err(Error::NotInSymplecticAlgebra(_))
        ));
        assert_eq!(
            sp_k_membership(&Matrix::zeros(4, 4), &Matrix::diag_ints(&[1, 1, 1, 2]), 1),
            Err(Error::NotLambdaSymplectic)
        );
        assert!(matches!(
            sp_k_factor(&Matrix::zeros(2, 2), &Matrix::ints(&[[1, 1], [0, 1]]), 1),
            Err(Error::NotBlockDiagonal(_))
        ));
    }

    #[test]
    fn isotropic_complement_is_dual() {
        let form = SkewForm::new(standard_form(2)).unwrap();
        let u = SubspaceBasis::new(4, vec![crate::exactla::svec(&[1, 1, 0, 0])]).unwrap();
        let w = form.isotropic_complement(&u).unwrap();
        assert!(form.is_isotropic(&w));
        assert!(form.eval(&u.vectors[0], &w.vectors[0]).is_one());
        assert_eq!(u.intersection(&w).dim(), 0);
        let lag = SubspaceBasis::new(4, Matrix::identity(4).columns()[..2].to_vec()).unwrap();
        assert!(form.is_lagrangian(&lag));
    }

    fn arb_skew(m: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..4, 2 * m * 2 * m).prop_map(move |v| {
            let n = 2 * m;
            let mut g = Matrix::zeros(n, n);
            for i in 0..n {
                for j in i + 1..n {
                    g[(i, j)] = Scalar::from(v[i * n + j]);
                    g[(j, i)] = -Scalar::from(v[i * n + j]);
                }
            }
            g
        })
    }

    proptest! {
        #[test]
        fn darboux_normalizes(g in (1usize..4).prop_flat_map(arb_skew)) {
            let form = SkewForm::new(g.clone()).unwrap();
            match darboux_basis(&form) {
                Ok(p) => prop_assert_eq!(&(&p.transpose() * &g) * &p, standard_form(g.rows() / 2)),
                Err(e) => { prop_assert_eq!(e, Error::DegenerateForm); prop_assert!(g.det().unwrap().is_zero()); }
            }
        }

        #[test]
        fn sp_k_closed_under_conjugation(
            a in proptest::collection::vec(-3i64..4, 3),
            x in prop_oneof![Just(1i64), Just(2), Just(-3)],
            k in 0u32..3,
        ) {
            // S = diag(x, lambda/x) with lambda = 6; members are S^k M, M in sp_2.
            let s = Matrix::diag(&[Scalar::from(x), Scalar::frac(6, x)]);
            let m = Matrix::ints(&[[a[0], a[1]], [a[2], -a[0]]]);
            let member = &s.pow(k as i64).unwrap() * &m;
            prop_assert!(sp_k_membership(&member, &s, k).unwrap());
            let conj = &(&s * &member) * &s.inverse().unwrap();
            prop_assert!(sp_k_membership(&conj, &s, k).unwrap());
            let f = sp_k_factor(&member, &s, k).unwrap();
            prop_assert_eq!(f.reassemble(&s, k).unwrap(), member);
        }
    }
}
