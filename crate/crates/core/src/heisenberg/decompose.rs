//! Splitting a Heisenberg algebra along the generalized eigenspaces of its
//! twisting map.

use serde::Serialize;

use super::HeisenbergAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{dot, eigenvalues, generalized_eigenspaces, Matrix, Scalar, SubspaceBasis};
use crate::symplectic::lambda_symplectic_report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DecomposeCase {
    /// `W(l_i) + W(lambda/l_i) + Cz` with `l_i^2 != lambda`, `l_i != lambda, 1`.
    #[serde(rename = "i")]
    I,
    /// `W(l_i) + Cz` with `l_i^2 = lambda != 1`.
    #[serde(rename = "ii")]
    II,
    /// `W(1) + W(lambda)` with `lambda != 1`.
    #[serde(rename = "iii")]
    III,
    /// `W(lambda)` with `lambda = 1`.
    #[serde(rename = "iv")]
    IV,
    /// `W(-1) + Cz` with `lambda = 1`.
    #[serde(rename = "v")]
    V,
}

/// One summand, expressed in a basis `(x_1..x_k, y_1..y_k, z)` of its own
/// with `[x_i, y_j] = delta_ij z`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Piece {
    pub case: DecomposeCase,
    pub eigenvalues: Vec<Scalar>,
    pub k: usize,
    /// Columns are the piece basis in coordinates of the whole algebra.
    pub basis: Matrix,
    /// The twisting map restricted to the piece, in the piece basis.
    pub restricted_alpha: Matrix,
    pub shape_conforms: bool,
    pub shape_notes: Vec<String>,
    pub heisenberg_type: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Decomposition {
    pub lambda: Scalar,
    pub pieces: Vec<Piece>,
    /// `B(u, v) = 0` for `u`, `v` in different pieces.
    pub cross_brackets_vanish: bool,
}

fn first_support(s: &SubspaceBasis) -> usize {
    s.vectors
        .iter()
        .filter_map(|v| v.iter().position(|c| !c.is_zero()))
        .min()
        .unwrap_or(usize::MAX)
}

struct Ctx<'a> {
    h: &'a HeisenbergAlgebra,
    gram: Matrix,
    z: Vec<Scalar>,
}

impl Ctx<'_> {
    fn form(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        dot(u, &self.gram.mul_vec(v))
    }

    fn alpha(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.h.p().mul_vec(v)
    }

    /// Vectors `y_j` in `space` with `B(x_i, y_j) = delta_ij`, made isotropic.
    fn dual_isotropic(&self, xs: &[Vec<Scalar>], space: &SubspaceBasis) -> Result<Vec<Vec<Scalar>>> {
        let k = xs.len();
        let mut sys = Matrix::zeros(k, space.dim());
        for (i, x) in xs.iter().enumerate() {
            for (j, w) in space.vectors.iter().enumerate() {
                sys[(i, j)] = self.form(x, w);
            }
        }
        let cols = space.as_columns();
        let mut vs = Vec::with_capacity(k);
        for j in 0..k {
            let rhs = crate::exactla::unit_vec(k, j);
            let c = sys
                .solve(&rhs)
                .ok_or_else(|| Error::Internal("bracket form degenerate on a piece".into()))?;
            vs.push(cols.mul_vec(&c));
        }
        let half = Scalar::frac(1, 2);
        Ok((0..k)
            .map(|j| {
                let mut y = vs[j].clone();
                for (l, vl) in vs.iter().enumerate() {
                    let a = &self.form(&vs[j], vl) * &half;
                    for (yi, xi) in y.iter_mut().zip(&xs[l]) {
                        *yi -= &(&a * xi);
                    }
                }
                y
            })
            .collect())
    }

    /// An alpha-invariant Lagrangian (modulo `z`) inside `space`, built one
    /// eigenvector of the induced map on `U^perp / U` at a time.
    fn invariant_lagrangian(&self, space: &SubspaceBasis, nu: &Scalar, with_z: bool) -> Result<Vec<Vec<Scalar>>> {
        let n = self.h.dim();
        let half_dim = (space.dim() - usize::from(with_z)) / 2;
        let mut u: Vec<Vec<Scalar>> = if with_z { vec![self.z.clone()] } else { vec![] };
        let mut xs = Vec::new();
        let shift = &(self.h.p().clone()) - &Matrix::scalar(n, nu);
        while xs.len() < half_dim {
            // v in space with B(u, v) = 0 for all u in U and (alpha - nu) v in U.
            let sb = space.as_columns();
            let mut perp = Matrix::zeros(u.len(), space.dim());
            for (i, ui) in u.iter().enumerate() {
                for j in 0..space.dim() {
                    perp[(i, j)] = self.form(ui, &space.vectors[j]);
                }
            }
            let cand = if u.is_empty() {
                SubspaceBasis::whole(space.dim())
            } else {
                perp.kernel_basis()
            };
            let cand_vecs: Vec<Vec<Scalar>> = cand.vectors.iter().map(|c| sb.mul_vec(c)).collect();
            // Unknowns: coefficients a on cand_vecs and d on U with
            // (alpha - nu) sum a_i c_i - sum d_l u_l = 0.
            let mut sys = Matrix::zeros(n, cand_vecs.len() + u.len());
            for (j, c) in cand_vecs.iter().enumerate() {
                let img = shift.mul_vec(c);
                for r in 0..n {
                    sys[(r, j)] = img[r].clone();
                }
            }
            for (l, ul) in u.iter().enumerate() {
                for r in 0..n {
                    sys[(r, cand_vecs.len() + l)] = -&ul[r];
                }
            }
            let u_span = SubspaceBasis::span_of(n, &u);
            let v = sys
                .kernel_basis()
                .vectors
                .iter()
                .map(|sol| crate::homlie::combine(&sol[..cand_vecs.len()], &cand_vecs, n))
                .find(|v| !u_span.contains(v))
                .ok_or_else(|| Error::Internal("no invariant isotropic extension found".into()))?;
            u.push(v.clone());
            xs.push(v);
        }
        Ok(xs)
    }

    /// Express the restricted twist in the piece basis and check its shape.
    fn make_piece(
        &self,
        case: DecomposeCase,
        eigs: Vec<Scalar>,
        xs: Vec<Vec<Scalar>>,
        ys: Vec<Vec<Scalar>>,
    ) -> Result<Piece> {
        let n = self.h.dim();
        let k = xs.len();
        let mut cols = xs;
        cols.extend(ys);
        cols.push(self.z.clone());
        let basis = Matrix::from_columns(n, &cols);
        let mut restricted = Matrix::zeros(2 * k + 1, 2 * k + 1);
        for (j, c) in cols.iter().enumerate() {
            let coords = basis
                .solve(&self.alpha(c))
                .ok_or_else(|| Error::Internal("piece is not alpha-invariant".into()))?;
            for (i, v) in coords.into_iter().enumerate() {
                restricted[(i, j)] = v;
            }
        }
        let lambda = self.h.lambda();
        let blk = |r, c| restricted.block(r, c, k, k);
        let (x, t, zb, y) = (blk(0, 0), blk(0, k), blk(k, 0), blk(k, k));
        let l = restricted.block(2 * k, 0, 1, k);
        let m = restricted.block(2 * k, k, 1, k);
        let mut notes = Vec::new();
        let mut need = |ok: bool, what: &str| {
            if !ok {
                notes.push(what.to_string());
            }
        };
        let sym = lambda_symplectic_report(&restricted.block(0, 0, 2 * k, 2 * k), lambda)?.symplectic;
        need(sym, "symplectic block is not lambda-symplectic");
        need(zb.is_zero(), "lower-left block is nonzero");
        let t_rows_ok = (0..k.saturating_sub(1)).all(|p| (0..k).all(|q| t[(p, q)].is_zero()));
        let m_cols_ok = (0..k.saturating_sub(1)).all(|q| m[(0, q)].is_zero());
        match case {
            DecomposeCase::I => {
                need(t.is_zero(), "T block is nonzero");
                need(l.is_zero() && m.is_zero(), "z-row is nonzero");
                need(&x.transpose() * &y == Matrix::scalar(k, lambda), "tX Y != lambda I");
            }
            DecomposeCase::II | DecomposeCase::V => {
                need(l.is_zero() && m.is_zero(), "z-row is nonzero");
                need(t_rows_ok, "T has entries outside its last row");
            }
            DecomposeCase::III => {
                need(t.is_zero(), "T block is nonzero");
                need(l.is_zero(), "z-row has entries under the x-block");
                need(m_cols_ok, "z-row has entries outside its last position");
            }
            DecomposeCase::IV => {
                need(m.is_zero(), "z-row has entries under the y-block");
                need(t_rows_ok, "T has entries outside its last row");
            }
        }
        let heisenberg_type = HeisenbergAlgebra::build(k, lambda.clone(), restricted.clone())
            .map(|p| p.algebra().heisenberg_type().heisenberg_type)
            .unwrap_or(false);
        Ok(Piece {
            case,
            eigenvalues: eigs,
            k,
            basis,
            restricted_alpha: restricted,
            shape_conforms: notes.is_empty(),
            shape_notes: notes,
            heisenberg_type,
        })
    }
}

/// Decompose along generalized eigenspaces; `supplied` lists eigenvalues
/// outside Q that cannot be found automatically.
pub fn decompose(h: &HeisenbergAlgebra, supplied: &[Scalar]) -> Result<Decomposition> {
    if !h.algebra().is_multiplicative() {
        return Err(Error::NotMultiplicative);
    }
    let n = h.dim();
    let lambda = h.lambda().clone();
    let one = Scalar::one();
    let eigs = eigenvalues(h.p(), supplied)?;
    let mut spaces = generalized_eigenspaces(h.p(), &eigs)?;
    spaces.sort_by_key(|(_, s)| first_support(s));
    let ctx = Ctx {
        h,
        gram: h.bracket_form().gram().clone(),
        z: crate::exactla::unit_vec(n, n - 1),
    };
    let find = |v: &Scalar| spaces.iter().find(|(e, _)| e == v).map(|(_, s)| s.clone());
    let mut used: Vec<Scalar> = Vec::new();
    let mut pieces = Vec::new();

    for (nu, space) in &spaces {
        if used.contains(nu) {
            continue;
        }
        used.push(nu.clone());
        if lambda.is_one() {
            if nu.is_one() {
                if space.dim() <= 1 {
                    continue;
                }
                let xs = ctx.invariant_lagrangian(space, nu, true)?;
                let ys = ctx.dual_isotropic(&xs, space)?;
                pieces.push(ctx.make_piece(DecomposeCase::IV, vec![nu.clone()], xs, ys)?);
            } else if *nu == -&one {
                let xs = ctx.invariant_lagrangian(space, nu, false)?;
                let ys = ctx.dual_isotropic(&xs, space)?;
                pieces.push(ctx.make_piece(DecomposeCase::V, vec![nu.clone()], xs, ys)?);
            } else {
                let partner = &lambda / nu;
                let other = find(&partner)
                    .ok_or_else(|| Error::Internal(format!("eigenvalue {nu} has no partner {partner}")))?;
                used.push(partner.clone());
                let xs = space.vectors.clone();
                let ys = ctx.dual_isotropic(&xs, &other)?;
                pieces.push(ctx.make_piece(DecomposeCase::I, vec![nu.clone(), partner], xs, ys)?);
            }
        } else if nu.is_one() || *nu == lambda {
            let (w1, wl) = match (find(&one), find(&lambda)) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            if w1.dim() == 0 {
                continue;
            }
            used.push(one.clone());
            used.push(lambda.clone());
            let xs = w1.vectors.clone();
            let ys = ctx.dual_isotropic(&xs, &wl)?;
            pieces.push(ctx.make_piece(DecomposeCase::III, vec![one.clone(), lambda.clone()], xs, ys)?);
        } else if &(nu * nu) == &lambda {
            let xs = ctx.invariant_lagrangian(space, nu, false)?;
            let ys = ctx.dual_isotropic(&xs, space)?;
            pieces.push(ctx.make_piece(DecomposeCase::II, vec![nu.clone()], xs, ys)?);
        } else {
            let partner = &lambda / nu;
            let other = find(&partner)
                .ok_or_else(|| Error::Internal(format!("eigenvalue {nu} has no partner {partner}")))?;
            used.push(partner.clone());
            let xs = space.vectors.clone();
            let ys = ctx.dual_isotropic(&xs, &other)?;
            pieces.push(ctx.make_piece(DecomposeCase::I, vec![nu.clone(), partner], xs, ys)?);
        }
    }

    let total: usize = pieces.iter().map(|p| 2 * p.k).sum();
    if total != 2 * h.m() {
        return Err(Error::Internal(format!(
            "pieces cover {total} of {} symplectic dimensions",
            2 * h.m()
        )));
    }
    let mut cross = true;
    for (a, pa) in pieces.iter().enumerate() {
        for pb in pieces.iter().skip(a + 1) {
            for u in pa.basis.columns().iter().take(2 * pa.k) {
                for v in pb.basis.columns().iter().take(2 * pb.k) {
                    if !ctx.form(u, v).is_zero() {
                        cross = false;
                    }
                }
            }
        }
    }
    Ok(Decomposition {
        lambda,
        pieces,
        cross_brackets_vanish: cross,
    })
}
