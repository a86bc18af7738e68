//! Hom-Lie algebras given by structure constants and a twisting map.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{add_vec, is_zero_vec, scale_vec, unit_vec, Matrix, Scalar, SubspaceBasis};
use crate::representations::Representation;

const MAX_WITNESSES: usize = 10;

/// A Hom-Lie algebra `(G, [.,.], alpha)` on the basis `e_0..e_{n-1}`.
///
/// `bracket[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomLieAlgebra {
    labels: Vec<String>,
    bracket: Vec<Vec<Vec<Scalar>>>,
    alpha: Matrix,
}

/// One bracket entry `[e_i, e_j] = sum_k c_k e_k`, for `i < j`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub class: String,
    pub indices: Vec<usize>,
    pub labels: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub skew_ok: bool,
    pub jacobi_ok: bool,
    pub multiplicative_ok: bool,
    pub witnesses: Vec<Witness>,
}

impl ValidationReport {
    pub fn all_ok(&self) -> bool {
        self.skew_ok && self.jacobi_ok && self.multiplicative_ok
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralSeries {
    pub terms: Vec<SubspaceBasis>,
    pub nilpotent: bool,
}

impl CentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(SubspaceBasis::dim).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeisenbergTypeReport {
    pub heisenberg_type: bool,
    pub nilpotent: bool,
    pub derived_ideal: SubspaceBasis,
    pub derived_in_center: bool,
    pub derived_equals_center: bool,
}

impl HomLieAlgebra {
    /// Build from a dense tensor. Only shapes are checked here; use
    /// [`HomLieAlgebra::validate`] for the axioms.
    pub fn new(labels: Vec<String>, bracket: Vec<Vec<Vec<Scalar>>>, alpha: Matrix) -> Result<Self> {
        let n = labels.len();
        if alpha.shape() != (n, n) {
            return Err(Error::Shape(format!(
                "alpha is {}x{}, algebra has dimension {n}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        let ok = bracket.len() == n
            && bracket
                .iter()
                .all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
        if !ok {
            return Err(Error::Shape(format!("bracket tensor is not {n}x{n}x{n}")));
        }
        Ok(HomLieAlgebra {
            labels,
            bracket,
            alpha,
        })
    }

    /// Build from brackets listed for `i < j`; `[e_j, e_i]` is filled in by
    /// skew-symmetry.
    pub fn from_entries(labels: Vec<String>, entries: &[BracketEntry], alpha: Matrix) -> Result<Self> {
        let n = labels.len();
        let mut bracket = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for e in entries {
            if e.i >= e.j || e.j >= n {
                return Err(Error::Shape(format!(
                    "bracket entry ({}, {}) must satisfy i < j < {n}",
                    e.i, e.j
                )));
            }
            for (k, c) in &e.coeffs {
                if *k >= n {
                    return Err(Error::Shape(format!("basis index {k} out of range")));
                }
                bracket[e.i][e.j][*k] += c;
                bracket[e.j][e.i][*k] -= c;
            }
        }
        HomLieAlgebra::new(labels, bracket, alpha)
    }

    /// The abelian algebra of dimension `n` with the given twist.
    pub fn abelian(alpha: Matrix) -> Result<Self> {
        let n = alpha.rows();
        HomLieAlgebra::from_entries(default_labels(n), &[], alpha)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn structure_constants(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.bracket
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.bracket[i][j]
    }

    /// Nonzero brackets with `i < j`, in order.
    pub fn entries(&self) -> Vec<BracketEntry> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: Vec<(usize, Scalar)> = self.bracket[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !coeffs.is_empty() {
                    out.push(BracketEntry { i, j, coeffs });
                }
            }
        }
        out
    }

    pub fn with_alpha(&self, alpha: Matrix) -> Result<Self> {
        HomLieAlgebra::new(self.labels.clone(), self.bracket.clone(), alpha)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::Shape("label count differs from dimension".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i) = [e_i, .]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for k in 0..n {
                m[(k, j)] = self.bracket[i][j][k].clone();
            }
        }
        m
    }

    /// Matrix of `ad(x)` for a coordinate vector `x`.
    pub fn ad_vec(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                m = &m + &self.ad(i).scale(a);
            }
        }
        m
    }

    /// Human-readable form of a vector, e.g. `5*z` or `x1 + -2*y1`.
    pub fn format_vec(&self, v: &[Scalar]) -> String {
        format_vec(&self.labels, v)
    }

    pub fn is_multiplicative(&self) -> bool {
        self.validate().multiplicative_ok
    }

    /// Check skew-symmetry, the Hom-Jacobi identity and multiplicativity on
    /// basis elements, keeping at most ten witnesses per failure class.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut skew = Vec::new();
        let mut jacobi = Vec::new();
        let mut mult = Vec::new();
        let lbl = |idx: &[usize]| idx.iter().map(|&i| self.labels[i].clone()).collect::<Vec<_>>();

        for i in 0..n {
            for j in i..n {
                let sum = add_vec(&self.bracket[i][j], &self.bracket[j][i]);
                if !is_zero_vec(&sum) {
                    skew.push(Witness {
                        class: "skew".into(),
                        indices: vec![i, j],
                        labels: lbl(&[i, j]),
                        detail: format!(
                            "[{a},{b}] + [{b},{a}] = {} != 0",
                            self.format_vec(&sum),
                            a = self.labels[i],
                            b = self.labels[j]
                        ),
                    });
                }
            }
        }
        let skew_ok = skew.is_empty();

        let ae: Vec<Vec<Scalar>> = self.alpha.columns();
        let triples: Vec<[usize; 3]> = if skew_ok {
            (0..n)
                .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k])))
                .collect()
        } else {
            (0..n)
                .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| [i, j, k])))
                .collect()
        };
        for [i, j, k] in triples {
            let mut sum = vec![Scalar::zero(); n];
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                sum = add_vec(&sum, &self.bracket(&ae[a], &self.bracket[b][c]));
            }
            if !is_zero_vec(&sum) {
                jacobi.push(Witness {
                    class: "jacobi".into(),
                    indices: vec![i, j, k],
                    labels: lbl(&[i, j, k]),
                    detail: format!("cyclic sum = {} != 0", self.format_vec(&sum)),
                });
            }
        }

        for i in 0..n {
            let start = if skew_ok { i + 1 } else { 0 };
            for j in start..n {
                let lhs = self.alpha.mul_vec(&self.bracket[i][j]);
                let rhs = self.bracket(&ae[i], &ae[j]);
                if lhs != rhs {
                    mult.push(Witness {
                        class: "multiplicative".into(),
                        indices: vec![i, j],
                        labels: lbl(&[i, j]),
                        detail: format!(
                            "alpha([{a},{b}]) = {} != {} = [alpha({a}),alpha({b})]",
                            self.format_vec(&lhs),
                            self.format_vec(&rhs),
                            a = self.labels[i],
                            b = self.labels[j]
                        ),
                    });
                }
            }
        }

        let report = ValidationReport {
            skew_ok,
            jacobi_ok: jacobi.is_empty(),
            multiplicative_ok: mult.is_empty(),
            witnesses: [skew, jacobi, mult]
                .into_iter()
                .flat_map(|w| w.into_iter().take(MAX_WITNESSES))
                .collect(),
        };
        debug_assert_eq!(report.witnesses.is_empty(), report.all_ok());
        report
    }

    /// `{v : [v, e_j] = 0 for all j}`, the kernel of the stacked maps
    /// `v -> [v, e_j]`.
    pub fn center(&self) -> SubspaceBasis {
        let n = self.dim();
        let mut stacked = Matrix::zeros(n * n, n);
        for j in 0..n {
            for i in 0..n {
                for k in 0..n {
                    stacked[(j * n + k, i)] = self.bracket[i][j][k].clone();
                }
            }
        }
        stacked.kernel_basis()
    }

    /// Span of `[a, b]` for `a`, `b` running over the two bases.
    pub fn bracket_span(&self, a: &SubspaceBasis, b: &SubspaceBasis) -> SubspaceBasis {
        let mut vecs = Vec::new();
        for x in &a.vectors {
            for y in &b.vectors {
                vecs.push(self.bracket(x, y));
            }
        }
        SubspaceBasis::span_of(self.dim(), &vecs)
    }

    pub fn derived_ideal(&self) -> SubspaceBasis {
        let all = SubspaceBasis::whole(self.dim());
        self.bracket_span(&all, &all)
    }

    /// `G_0 = G`, `G_{i+1} = [G, G_i]`, stopping once the dimension stops
    /// dropping (the repeated term is kept) or reaches zero.
    pub fn lower_central_series(&self) -> CentralSeries {
        let all = SubspaceBasis::whole(self.dim());
        let mut terms = vec![all.clone()];
        loop {
            let last = terms.last().expect("series is nonempty");
            if last.dim() == 0 {
                break;
            }
            let next = self.bracket_span(&all, last);
            let stable = next.dim() == last.dim();
            terms.push(next);
            if stable {
                break;
            }
        }
        let nilpotent = terms.last().map_or(true, |t| t.dim() == 0);
        CentralSeries { terms, nilpotent }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().nilpotent
    }

    /// Nilpotent with a one-dimensional derived ideal; also reports how the
    /// derived ideal sits relative to the center.
    pub fn heisenberg_type(&self) -> HeisenbergTypeReport {
        let nilpotent = self.is_nilpotent();
        let derived = self.derived_ideal();
        let center = self.center();
        let inside = derived.is_subspace_of(&center);
        HeisenbergTypeReport {
            heisenberg_type: nilpotent && derived.dim() == 1,
            nilpotent,
            derived_in_center: inside,
            derived_equals_center: inside && derived.dim() == center.dim(),
            derived_ideal: derived,
        }
    }

    /// The adjoint representation: `V = G`, `beta = alpha`, `rho(e_i) = ad(e_i)`.
    pub fn adjoint_rep(&self) -> Result<Representation> {
        if !self.is_multiplicative() {
            return Err(Error::NotMultiplicative);
        }
        Representation::new(
            self.alpha.clone(),
            (0..self.dim()).map(|i| self.ad(i)).collect(),
        )
    }

    /// Direct sum with another algebra; the basis is this one followed by the
    /// other, labels of the second part are kept.
    pub fn direct_sum(&self, other: &HomLieAlgebra) -> Result<HomLieAlgebra> {
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut bracket = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for i in 0..n1 {
            for j in 0..n1 {
                bracket[i][j][..n1].clone_from_slice(&self.bracket[i][j]);
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                bracket[n1 + i][n1 + j][n1..].clone_from_slice(&other.bracket[i][j]);
            }
        }
        let mut alpha = Matrix::zeros(n, n);
        alpha.set_block(0, 0, &self.alpha);
        alpha.set_block(n1, n1, &other.alpha);
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        HomLieAlgebra::new(labels, bracket, alpha)
    }

    /// Re-express the algebra in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix, labels: Vec<String>) -> Result<HomLieAlgebra> {
        let n = self.dim();
        if p.shape() != (n, n) || labels.len() != n {
            return Err(Error::Shape("basis change must be n x n with n labels".into()));
        }
        let pinv = p.inverse()?;
        let cols = p.columns();
        let mut bracket = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                bracket[i][j] = pinv.mul_vec(&self.bracket(&cols[i], &cols[j]));
            }
        }
        let alpha = &(&pinv * &self.alpha) * p;
        HomLieAlgebra::new(labels, bracket, alpha)
    }

    /// Whether `phi` preserves the bracket and commutes with alpha.
    pub fn is_morphism(&self, phi: &Matrix) -> bool {
        let n = self.dim();
        if phi.shape() != (n, n) || phi * &self.alpha != &self.alpha * phi {
            return false;
        }
        let cols = phi.columns();
        (0..n).all(|i| {
            (i + 1..n).all(|j| phi.mul_vec(&self.bracket[i][j]) == self.bracket(&cols[i], &cols[j]))
        })
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vec(self.dim(), i)
    }
}

/// `e1, e2, ...`
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

pub fn format_vec(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| {
            if c.is_one() {
                l.clone()
            } else {
                format!("{c}*{l}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// `sum_k c_k v_k` over a list of coordinate vectors.
pub fn combine(coeffs: &[Scalar], vectors: &[Vec<Scalar>], n: usize) -> Vec<Scalar> {
    coeffs
        .iter()
        .zip(vectors)
        .fold(vec![Scalar::zero(); n], |acc, (c, v)| add_vec(&acc, &scale_vec(c, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::svec;

    fn labels(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn h1(alpha: &[i64]) -> HomLieAlgebra {
        HomLieAlgebra::from_entries(
            labels(&["x1", "y1", "z"]),
            &[BracketEntry {
                i: 0,
                j: 1,
                coeffs: vec![(2, Scalar::one())],
            }],
            Matrix::diag_ints(alpha),
        )
        .unwrap()
    }

    /// Independent oracle: evaluate every axiom on every ordered basis tuple.
    fn brute_force_ok(l: &HomLieAlgebra) -> (bool, bool, bool) {
        let n = l.dim();
        let e = |i| unit_vec(n, i);
        let a = |v: &[Scalar]| l.alpha().mul_vec(v);
        let mut skew = true;
        let mut jac = true;
        let mut mult = true;
        for i in 0..n {
            for j in 0..n {
                if !is_zero_vec(&add_vec(&l.bracket(&e(i), &e(j)), &l.bracket(&e(j), &e(i)))) {
                    skew = false;
                }
                if a(&l.bracket(&e(i), &e(j))) != l.bracket(&a(&e(i)), &a(&e(j))) {
                    mult = false;
                }
                for k in 0..n {
                    let s1 = l.bracket(&a(&e(i)), &l.bracket(&e(j), &e(k)));
                    let s2 = l.bracket(&a(&e(j)), &l.bracket(&e(k), &e(i)));
                    let s3 = l.bracket(&a(&e(k)), &l.bracket(&e(i), &e(j)));
                    if !is_zero_vec(&add_vec(&add_vec(&s1, &s2), &s3)) {
                        jac = false;
                    }
                }
            }
        }
        (skew, jac, mult)
    }

    #[test]
    fn validate_examples() {
        let good = h1(&[2, 3, 6]);
        let r = good.validate();
        assert!(r.all_ok() && r.witnesses.is_empty());
        assert_eq!(brute_force_ok(&good), (true, true, true));

        let bad = h1(&[2, 3, 5]);
        let r = bad.validate();
        assert!(r.skew_ok && r.jacobi_ok && !r.multiplicative_ok);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].labels, labels(&["x1", "y1"]));
        assert!(r.witnesses[0].detail.contains("5*z != 6*z"));

        let mut c = vec![vec![vec![Scalar::zero(); 3]; 3]; 3];
        c[0][1][2] = Scalar::one();
        c[1][0][2] = Scalar::one();
        let nonskew = HomLieAlgebra::new(labels(&["a", "b", "c"]), c, Matrix::identity(3)).unwrap();
        let r = nonskew.validate();
        assert!(!r.skew_ok);
        assert_eq!(brute_force_ok(&nonskew).0, false);
    }

    #[test]
    fn witnesses_are_capped() {
        // alpha = 0 on a non-abelian algebra makes multiplicativity fail on
        // every nonzero bracket; build one with many of them.
        let n = 8;
        let entries: Vec<BracketEntry> = (0..n - 1)
            .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
            .map(|(i, j)| BracketEntry {
                i,
                j,
                coeffs: vec![(n - 1, Scalar::one())],
            })
            .collect();
        let l = HomLieAlgebra::from_entries(default_labels(n), &entries, Matrix::diag_ints(&[2; 8])).unwrap();
        let r = l.validate();
        assert!(!r.multiplicative_ok);
        assert_eq!(r.witnesses.len(), MAX_WITNESSES);
    }

    #[test]
    fn center_examples() {
        assert_eq!(h1(&[2, 3, 6]).center().vectors, vec![svec(&[0, 0, 1])]);
        assert_eq!(HomLieAlgebra::abelian(Matrix::identity(2)).unwrap().center().dim(), 2);
    }

    #[test]
    fn central_series_examples() {
        assert_eq!(h1(&[2, 3, 6]).lower_central_series().dims(), vec![3, 1, 0]);
        let ab = HomLieAlgebra::abelian(Matrix::identity(2)).unwrap().lower_central_series();
        assert_eq!((ab.dims(), ab.nilpotent), (vec![2, 0], true));
        let solv = HomLieAlgebra::from_entries(
            labels(&["x", "y"]),
            &[BracketEntry { i: 0, j: 1, coeffs: vec![(1, Scalar::one())] }],
            Matrix::identity(2),
        )
        .unwrap();
        assert!(solv.validate().all_ok());
        let s = solv.lower_central_series();
        assert_eq!((s.dims(), s.nilpotent), (vec![2, 1, 1], false));
    }

    #[test]
    fn heisenberg_type_examples() {
        let r = h1(&[2, 3, 6]).heisenberg_type();
        assert!(r.heisenberg_type && r.derived_equals_center);
        assert_eq!(r.derived_ideal.vectors, vec![svec(&[0, 0, 1])]);

        assert!(!HomLieAlgebra::abelian(Matrix::identity(3)).unwrap().heisenberg_type().heisenberg_type);

        let plus = h1(&[2, 3, 6])
            .direct_sum(&HomLieAlgebra::abelian(Matrix::diag_ints(&[5])).unwrap())
            .unwrap();
        let r = plus.heisenberg_type();
        assert!(r.heisenberg_type && r.derived_in_center && !r.derived_equals_center);
        assert_eq!(plus.center().dim(), 2);
    }

    #[test]
    fn adjoint_examples() {
        let l = h1(&[2, 3, 6]);
        let rep = l.adjoint_rep().unwrap();
        assert_eq!(rep.action[0], Matrix::unit(3, 3, 2, 1));
        assert!(crate::representations::check_representation(&l, &rep).unwrap().ok);
        let ab = HomLieAlgebra::abelian(Matrix::identity(2)).unwrap().adjoint_rep().unwrap();
        assert!(ab.action.iter().all(Matrix::is_zero));
        assert_eq!(h1(&[2, 3, 5]).adjoint_rep(), Err(Error::NotMultiplicative));
    }

    #[test]
    fn change_basis_preserves_axioms() {
        let l = h1(&[2, 3, 6]);
        let p = Matrix::ints(&[[1, 1, 0], [0, 1, 0], [1, 0, 2]]);
        let m = l.change_basis(&p, labels(&["a", "b", "c"])).unwrap();
        assert!(m.validate().all_ok());
        assert_eq!(m.center().dim(), 1);
    }
}
