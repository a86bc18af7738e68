//! Alternating cochains with values in a representation, the twisted
//! coboundary `delta^k_r`, and cocycle/coboundary/cohomology spaces.

mod adjoint;
mod formulas;

pub use adjoint::{adjoint_b2_verify, AdjointB2Report, GeneratorCheck};
pub use formulas::{
    faithful_h1_hom_report, faithful_h1_report, trivial_cohomology_report, trivial_z2_classifier, Z2Classification,
};

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, SubspaceBasis};
use crate::homlie::HomLieAlgebra;
use crate::representations::Representation;

/// Strictly increasing `k`-tuples of `0..n`, in lexicographic order.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Coordinates of `C^k(G, V)`: the value on tuple number `t` occupies
/// entries `t*d .. (t+1)*d`.
#[derive(Clone, Debug)]
pub struct CochainLayout {
    pub algebra_dim: usize,
    pub module_dim: usize,
    pub degree: usize,
    pub tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl CochainLayout {
    pub fn new(algebra_dim: usize, module_dim: usize, degree: usize) -> Self {
        let tuples = tuples(algebra_dim, degree);
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        CochainLayout {
            algebra_dim,
            module_dim,
            degree,
            tuples,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.tuples.len() * self.module_dim
    }

    /// Position of an arbitrary index tuple after sorting, with the sign of
    /// the sorting permutation; `None` if an index repeats.
    pub fn locate(&self, idx: &[usize]) -> Option<(usize, bool)> {
        let mut v = idx.to_vec();
        let mut negative = false;
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                negative = !negative;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        self.index.get(&v).map(|&t| (t, negative))
    }
}

/// A `k`-cochain, stored on increasing basis tuples.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cochain {
    pub degree: usize,
    pub algebra_dim: usize,
    pub module_dim: usize,
    pub values: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(algebra_dim: usize, module_dim: usize, degree: usize) -> Self {
        let dim = CochainLayout::new(algebra_dim, module_dim, degree).dim();
        Cochain {
            degree,
            algebra_dim,
            module_dim,
            values: vec![Scalar::zero(); dim],
        }
    }

    pub fn from_vec(algebra_dim: usize, module_dim: usize, degree: usize, values: Vec<Scalar>) -> Result<Self> {
        let want = CochainLayout::new(algebra_dim, module_dim, degree).dim();
        if values.len() != want {
            return Err(Error::Shape(format!("{degree}-cochain needs {want} coordinates, got {}", values.len())));
        }
        Ok(Cochain {
            degree,
            algebra_dim,
            module_dim,
            values,
        })
    }

    pub fn layout(&self) -> CochainLayout {
        CochainLayout::new(self.algebra_dim, self.module_dim, self.degree)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// Set `f(e_idx) = v` (and the alternating completion). Returns `false`
    /// if an index repeats, in which case nothing is written.
    pub fn set(&mut self, layout: &CochainLayout, idx: &[usize], v: &[Scalar]) -> bool {
        let Some((t, neg)) = layout.locate(idx) else {
            return false;
        };
        let d = self.module_dim;
        for (a, x) in v.iter().enumerate() {
            self.values[t * d + a] = if neg { -x } else { x.clone() };
        }
        true
    }

    /// `f(e_idx)` on an arbitrary index tuple.
    pub fn on_basis(&self, layout: &CochainLayout, idx: &[usize]) -> Vec<Scalar> {
        let d = self.module_dim;
        match layout.locate(idx) {
            None => vec![Scalar::zero(); d],
            Some((t, neg)) => self.values[t * d..(t + 1) * d]
                .iter()
                .map(|x| if neg { -x } else { x.clone() })
                .collect(),
        }
    }

    /// `f(u_1, ..., u_k)` by multilinear expansion.
    pub fn eval(&self, layout: &CochainLayout, args: &[Vec<Scalar>]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.degree, "wrong number of arguments");
        let d = self.module_dim;
        let mut out = vec![Scalar::zero(); d];
        let mut idx = Vec::with_capacity(self.degree);
        self.expand(layout, args, &mut idx, Scalar::one(), &mut out);
        out
    }

    fn expand(&self, layout: &CochainLayout, args: &[Vec<Scalar>], idx: &mut Vec<usize>, coef: Scalar, out: &mut [Scalar]) {
        let p = idx.len();
        if p == args.len() {
            if let Some((t, neg)) = layout.locate(idx) {
                let d = self.module_dim;
                let c = if neg { -&coef } else { coef };
                for (o, x) in out.iter_mut().zip(&self.values[t * d..(t + 1) * d]) {
                    if !x.is_zero() {
                        *o += &(&c * x);
                    }
                }
            }
            return;
        }
        for (i, a) in args[p].iter().enumerate() {
            if a.is_zero() || idx.contains(&i) {
                continue;
            }
            idx.push(i);
            self.expand(layout, args, idx, &coef * a, out);
            idx.pop();
        }
    }
}

fn check_rep(l: &HomLieAlgebra, rep: &Representation) -> Result<()> {
    if rep.action.len() != l.dim() {
        return Err(Error::RepresentationShape(format!(
            "{} action matrices for an algebra of dimension {}",
            rep.action.len(),
            l.dim()
        )));
    }
    Ok(())
}

/// `delta^k_r f`:
///
/// `sum_{s<t} (-1)^t f(alpha x_0, .., [x_s, x_t], .., ^x_t, .., alpha x_k)
///  + sum_s (-1)^s rho(alpha^{k+r-1} x_s) f(x_0, .., ^x_s, .., x_k)`.
///
/// For `k = 0` this is `delta^0_r(v)(x) = rho(alpha^{r-1} x) v`.
pub fn coboundary(l: &HomLieAlgebra, rep: &Representation, f: &Cochain, r: i64) -> Result<Cochain> {
    check_rep(l, rep)?;
    let n = l.dim();
    let d = rep.module_dim;
    if f.algebra_dim != n || f.module_dim != d {
        return Err(Error::Shape("cochain does not match the algebra and module".into()));
    }
    let k = f.degree;
    let exp = k as i64 + r - 1;
    let ae = l.alpha().pow(exp).map_err(|_| Error::SingularPower(exp))?;
    let rho_ae: Vec<Matrix> = ae.columns().iter().map(|c| rep.rho(c)).collect();
    let alpha_cols = l.alpha().columns();
    let src = f.layout();
    let dst = CochainLayout::new(n, d, k + 1);
    let mut out = Cochain::zero(n, d, k + 1);

    for (ti, jt) in dst.tuples.iter().enumerate() {
        let mut val = vec![Scalar::zero(); d];
        for s in 0..=k {
            for t in s + 1..=k {
                let br = l.basis_bracket(jt[s], jt[t]);
                if br.iter().all(Scalar::is_zero) {
                    continue;
                }
                let args: Vec<Vec<Scalar>> = (0..=k)
                    .filter(|&p| p != t)
                    .map(|p| if p == s { br.to_vec() } else { alpha_cols[jt[p]].clone() })
                    .collect();
                let v = f.eval(&src, &args);
                let odd = t % 2 == 1;
                for (o, x) in val.iter_mut().zip(&v) {
                    if odd {
                        *o -= x;
                    } else {
                        *o += x;
                    }
                }
            }
        }
        for s in 0..=k {
            let rest: Vec<usize> = jt.iter().enumerate().filter(|(p, _)| *p != s).map(|(_, &j)| j).collect();
            let fv = f.on_basis(&src, &rest);
            if fv.iter().all(Scalar::is_zero) {
                continue;
            }
            let v = rho_ae[jt[s]].mul_vec(&fv);
            let odd = s % 2 == 1;
            for (o, x) in val.iter_mut().zip(&v) {
                if odd {
                    *o -= x;
                } else {
                    *o += x;
                }
            }
        }
        out.values[ti * d..(ti + 1) * d].clone_from_slice(&val);
    }
    Ok(out)
}

/// Matrix of `delta^k_r` on the standard basis of `C^k`.
pub fn coboundary_matrix(l: &HomLieAlgebra, rep: &Representation, k: usize, r: i64) -> Result<Matrix> {
    let n = l.dim();
    let d = rep.module_dim;
    let src = CochainLayout::new(n, d, k);
    let rows = CochainLayout::new(n, d, k + 1).dim();
    let mut cols = Vec::with_capacity(src.dim());
    for c in 0..src.dim() {
        let mut f = Cochain::zero(n, d, k);
        f.values[c] = Scalar::one();
        cols.push(coboundary(l, rep, &f, r)?.values);
    }
    Ok(Matrix::from_columns(rows, &cols))
}

/// `C^k_{alpha,beta}`: cochains with `f(alpha x_1, .., alpha x_k) = beta f(x_1, .., x_k)`.
pub fn hom_cochain_space(l: &HomLieAlgebra, rep: &Representation, k: usize) -> Result<SubspaceBasis> {
    check_rep(l, rep)?;
    let n = l.dim();
    let d = rep.module_dim;
    let lay = CochainLayout::new(n, d, k);
    let alpha_cols = l.alpha().columns();
    let mut cols = Vec::with_capacity(lay.dim());
    for c in 0..lay.dim() {
        let mut f = Cochain::zero(n, d, k);
        f.values[c] = Scalar::one();
        let mut col = Vec::with_capacity(lay.dim());
        for t in &lay.tuples {
            let args: Vec<Vec<Scalar>> = t.iter().map(|&i| alpha_cols[i].clone()).collect();
            let lhs = f.eval(&lay, &args);
            let rhs = rep.beta.mul_vec(&f.on_basis(&lay, t));
            col.extend(lhs.iter().zip(&rhs).map(|(a, b)| a - b));
        }
        cols.push(col);
    }
    Ok(Matrix::from_columns(lay.dim(), &cols).kernel_basis())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    #[serde(rename = "C")]
    pub c: usize,
    #[serde(rename = "Z")]
    pub z: usize,
    #[serde(rename = "B")]
    pub b: usize,
    #[serde(rename = "H")]
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub formula: String,
    pub predicted: usize,
    pub computed: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl Comparison {
    pub fn new(formula: impl Into<String>, predicted: usize, computed: usize) -> Self {
        Comparison {
            formula: formula.into(),
            predicted,
            computed,
            matches: predicted == computed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Generators {
    #[serde(rename = "Z")]
    pub z: SubspaceBasis,
    #[serde(rename = "B")]
    pub b: SubspaceBasis,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CohomologyReport {
    pub degree: usize,
    pub r: i64,
    pub hom_restricted: bool,
    pub dims: Dims,
    pub generators: Generators,
    pub comparisons: Vec<Comparison>,
}

impl CohomologyReport {
    pub fn all_match(&self) -> bool {
        self.comparisons.iter().all(|c| c.matches)
    }
}

/// The cochain space used in degree `k`.
pub fn cochain_space(l: &HomLieAlgebra, rep: &Representation, k: usize, hom_restricted: bool) -> Result<SubspaceBasis> {
    if hom_restricted {
        hom_cochain_space(l, rep, k)
    } else {
        check_rep(l, rep)?;
        Ok(SubspaceBasis::whole(CochainLayout::new(l.dim(), rep.module_dim, k).dim()))
    }
}

/// Image of `delta^k_r` restricted to `space`.
fn image_on(delta: &Matrix, space: &SubspaceBasis) -> SubspaceBasis {
    if space.dim() == 0 {
        return SubspaceBasis::zero(delta.rows());
    }
    (delta * &space.as_columns()).column_space()
}

/// `Z^k = ker delta^k_r` on the chosen cochain space, `B^k = im delta^{k-1}_r`
/// of the chosen space in degree `k - 1`. Fails with `NotAComplex` unless
/// `B^k` lies in `Z^k`.
pub fn cohomology_report(
    l: &HomLieAlgebra,
    rep: &Representation,
    k: usize,
    r: i64,
    hom_restricted: bool,
) -> Result<CohomologyReport> {
    let ck = cochain_space(l, rep, k, hom_restricted)?;
    let dk = coboundary_matrix(l, rep, k, r)?;
    let z = if ck.dim() == 0 {
        SubspaceBasis::zero(ck.ambient_dim)
    } else {
        let cols = ck.as_columns();
        let ker = (&dk * &cols).kernel_basis();
        SubspaceBasis::new(ck.ambient_dim, ker.vectors.iter().map(|v| cols.mul_vec(v)).collect())?
    };
    let b = if k == 0 {
        SubspaceBasis::zero(ck.ambient_dim)
    } else {
        let prev = cochain_space(l, rep, k - 1, hom_restricted)?;
        image_on(&coboundary_matrix(l, rep, k - 1, r)?, &prev)
    };
    if !b.is_subspace_of(&z) {
        return Err(Error::NotAComplex { degree: k });
    }
    let dims = Dims {
        c: ck.dim(),
        z: z.dim(),
        b: b.dim(),
        h: z.dim() - b.dim(),
    };
    Ok(CohomologyReport {
        degree: k,
        r,
        hom_restricted,
        dims,
        generators: Generators { z, b },
        comparisons: Vec::new(),
    })
}

/// Whether `delta^k_r o delta^{k-1}_r` vanishes on the chosen space in
/// degree `k - 1`.
pub fn squares_to_zero(l: &HomLieAlgebra, rep: &Representation, k: usize, r: i64, hom_restricted: bool) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    let prev = cochain_space(l, rep, k - 1, hom_restricted)?;
    if prev.dim() == 0 {
        return Ok(true);
    }
    let composite = &(&coboundary_matrix(l, rep, k, r)? * &coboundary_matrix(l, rep, k - 1, r)?) * &prev.as_columns();
    Ok(composite.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::svec;
    use crate::heisenberg::HeisenbergAlgebra;
    use crate::representations::{minimal_faithful, trivial_rep};

    fn h236() -> HeisenbergAlgebra {
        HeisenbergAlgebra::build(1, Scalar::from(6), Matrix::diag_ints(&[2, 3, 6])).unwrap()
    }

    #[test]
    fn tuple_enumeration() {
        assert_eq!(tuples(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(tuples(3, 0), vec![Vec::<usize>::new()]);
        assert!(tuples(2, 3).is_empty());
        let lay = CochainLayout::new(4, 1, 3);
        assert_eq!(lay.locate(&[2, 0, 1]), Some((lay.locate(&[0, 1, 2]).unwrap().0, false)));
        assert_eq!(lay.locate(&[1, 0, 2]).unwrap().1, true);
        assert_eq!(lay.locate(&[1, 1, 2]), None);
    }

    #[test]
    fn eval_is_alternating_and_multilinear() {
        let lay = CochainLayout::new(3, 1, 2);
        let mut f = Cochain::zero(3, 1, 2);
        f.set(&lay, &[1, 0], &svec(&[5]));
        assert_eq!(f.on_basis(&lay, &[0, 1]), svec(&[-5]));
        // f(e0 + 2 e1, 3 e1) = 3 f(e0, e1) = -15
        assert_eq!(f.eval(&lay, &[svec(&[1, 2, 0]), svec(&[0, 3, 0])]), svec(&[-15]));
        assert!(!f.clone().set(&lay, &[2, 2], &svec(&[1])));
    }

    #[test]
    fn zero_coboundary_of_faithful_module() {
        let h = h236();
        let rep = minimal_faithful(&h).unwrap();
        let l = h.algebra();
        for r in 1..=2 {
            for a in 0..3 {
                let v = Cochain::from_vec(3, 3, 0, crate::exactla::unit_vec(3, a)).unwrap();
                let d0 = coboundary(l, &rep, &v, r).unwrap();
                // delta^0_r(v)(x) = rho(alpha^{r-1} x) v
                let lay = d0.layout();
                for j in 0..3 {
                    let want = rep.rho(&l.alpha().pow(r - 1).unwrap().col(j)).mul_vec(&v.values);
                    assert_eq!(d0.on_basis(&lay, &[j]), want);
                }
                assert!(coboundary(l, &rep, &d0, r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn square_is_nonzero_off_hom_cochains() {
        // f(z) = v3 only. delta^1 f: (x,y) -> -v3, (x,z) -> 0, (y,z) -> 9 v1;
        // delta^2 delta^1 f (x,y,z) = 4 x.(9 v1) + 36 z.(-v3) = -180 v2.
        let h = h236();
        let rep = minimal_faithful(&h).unwrap();
        let l = h.algebra();
        let mut f = Cochain::zero(3, 3, 1);
        f.set(&f.layout(), &[2], &svec(&[0, 0, 1]));
        let ddf = coboundary(l, &rep, &coboundary(l, &rep, &f, 1).unwrap(), 1).unwrap();
        assert_eq!(ddf.on_basis(&ddf.layout(), &[0, 1, 2]), svec(&[0, -180, 0]));
        assert!(!squares_to_zero(l, &rep, 2, 1, false).unwrap());
        assert!(squares_to_zero(l, &rep, 2, 1, true).unwrap());
    }

    #[test]
    fn trivial_rep_operator_is_bracket_only() {
        // delta^1 f (x1, y1) = -f([x1, y1]) = -f(z)
        let h = h236();
        let rep = trivial_rep(h.algebra(), 1).unwrap();
        let f = Cochain::from_vec(3, 1, 1, svec(&[2, 5, 7])).unwrap();
        let df = coboundary(h.algebra(), &rep, &f, 1).unwrap();
        let lay = df.layout();
        assert_eq!(df.on_basis(&lay, &[0, 1]), svec(&[-7]));
        assert_eq!(df.on_basis(&lay, &[0, 2]), svec(&[0]));
    }

    #[test]
    fn hom_cochains() {
        let h = h236();
        let rep = minimal_faithful(&h).unwrap();
        // beta = diag(3, 6, 1): fixed points are span{v3}.
        let c0 = hom_cochain_space(h.algebra(), &rep, 0).unwrap();
        assert_eq!(c0.vectors, vec![svec(&[0, 0, 1])]);
        let triv = trivial_rep(h.algebra(), 2).unwrap();
        assert_eq!(hom_cochain_space(h.algebra(), &triv, 0).unwrap().dim(), 2);
        for k in 0..3 {
            assert!(hom_cochain_space(h.algebra(), &rep, k).unwrap().dim() <= CochainLayout::new(3, 3, k).dim());
        }
    }

    #[test]
    fn faithful_h1_unrestricted() {
        let h = h236();
        let rep = minimal_faithful(&h).unwrap();
        let rep_h1 = cohomology_report(h.algebra(), &rep, 1, 1, false).unwrap();
        assert_eq!(rep_h1.dims.h, 2);
        assert!(rep_h1.generators.b.is_subspace_of(&rep_h1.generators.z));
    }

    #[test]
    fn report_json_shape() {
        let h = h236();
        let rep = trivial_rep(h.algebra(), 1).unwrap();
        let r = cohomology_report(h.algebra(), &rep, 1, 1, false).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in ["degree", "r", "hom_restricted", "dims", "comparisons"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert!(v["dims"].get("H").is_some());
    }
}
