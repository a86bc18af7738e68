//! Explicit 2-cochains with values in the adjoint module, checked against
//! the computed coboundaries and cocycles.
//!
//! Index conventions: `x_i = e_{i-1}`, `y_i = e_{m+i-1}`, `z = e_{2m}`;
//! the coefficients `x_{p,j}` and `y_{p,j}` are read as entry `(p, j)` of the
//! `X` and `Y` blocks of `alpha`.

use serde::Serialize;

use super::{coboundary, coboundary_matrix, Cochain, CochainLayout};
use crate::error::Result;
use crate::exactla::{scale_vec, Matrix, Scalar, SubspaceBasis};
use crate::heisenberg::HeisenbergAlgebra;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorCheck {
    pub name: String,
    pub is_zero: bool,
    pub in_image: bool,
    pub is_cocycle: bool,
    /// Instantiation problems: values on repeated arguments, conflicting
    /// assignments.
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdjointB2Report {
    pub m: usize,
    pub r: i64,
    pub b2_dim: usize,
    pub z2_dim: usize,
    pub b2_list_rank: usize,
    pub b2_list_spans_b2: bool,
    pub b2_generators: Vec<GeneratorCheck>,
    pub z2_generators: Vec<GeneratorCheck>,
    /// Listed cocycles failing `delta^2 = 0` under the index reading above.
    pub flagged: Vec<String>,
}

impl AdjointB2Report {
    /// Every listed coboundary lies in the image of `delta^1`.
    pub fn b2_ok(&self) -> bool {
        self.b2_generators.iter().all(|g| g.in_image)
    }
}

struct Builder<'a> {
    h: &'a HeisenbergAlgebra,
    lay: CochainLayout,
    ar: Matrix,
    ar1: Matrix,
}

impl Builder<'_> {
    fn x(&self, i: usize) -> usize {
        i
    }
    fn y(&self, i: usize) -> usize {
        self.h.m() + i
    }
    fn z(&self) -> usize {
        2 * self.h.m()
    }
    fn ar(&self, e: usize) -> Vec<Scalar> {
        self.ar.col(e)
    }
    fn ar1(&self, e: usize) -> Vec<Scalar> {
        self.ar1.col(e)
    }

    fn build(&self, name: String, assigns: Vec<(usize, usize, Vec<Scalar>)>) -> (String, Cochain, Vec<String>) {
        let n = self.h.dim();
        let labels = self.h.algebra().labels();
        let mut f = Cochain::zero(n, n, 2);
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let mut notes = Vec::new();
        for (a, b, v) in assigns {
            if a == b {
                notes.push(format!("value assigned on repeated argument ({0}, {0}), dropped", labels[a]));
                continue;
            }
            let key = (a.min(b), a.max(b));
            if seen.contains(&key) {
                let prev = f.on_basis(&self.lay, &[a, b]);
                if prev != v {
                    notes.push(format!(
                        "conflicting values on ({}, {}), first kept",
                        labels[a], labels[b]
                    ));
                }
                continue;
            }
            seen.push(key);
            f.set(&self.lay, &[a, b], &v);
        }
        (name, f, notes)
    }
}

fn b2_list(b: &Builder) -> Vec<(String, Cochain, Vec<String>)> {
    let m = b.h.m();
    let z = b.z();
    let arz = b.ar(z);
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let (i1, j1) = (i + 1, j + 1);
            out.push(b.build(format!("f_{{{i1},{j1}}}"), vec![(b.x(j), b.y(i), arz.clone())]));
            out.push(b.build(format!("g_{{{i1},{j1}}}"), vec![(b.x(i), b.x(j), arz.clone())]));
            out.push(b.build(format!("h_{{{i1},{j1}}}"), vec![(b.y(i), b.y(j), arz.clone())]));
            out.push(b.build(format!("k_{{{i1},{j1}}}"), vec![(b.x(i), b.y(j), arz.clone())]));
        }
    }
    let neg = |v: Vec<Scalar>| scale_vec(&-Scalar::one(), &v);
    for i in 0..m {
        let mut l = vec![(b.y(i), z, neg(arz.clone()))];
        let mut t = vec![(b.x(i), z, arz.clone())];
        for p in 0..m {
            l.push((b.x(p), b.y(p), neg(b.ar(b.x(i)))));
            t.push((b.x(p), b.y(p), neg(b.ar(b.y(i)))));
        }
        out.push(b.build(format!("l_{}", i + 1), l));
        out.push(b.build(format!("t_{}", i + 1), t));
    }
    let zvec = b.h.algebra().basis_vector(z);
    out.push(b.build("m".into(), (0..m).map(|p| (b.x(p), b.y(p), neg(zvec.clone()))).collect()));
    out
}

fn z2_list(b: &Builder) -> Vec<(String, Cochain, Vec<String>)> {
    let m = b.h.m();
    let z = b.z();
    let x = b.h.x_block();
    let y = b.h.y_block();
    let arz = b.ar(z);
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                if i == j || i == l || j == l {
                    continue;
                }
                let (i1, j1, l1) = (i + 1, j + 1, l + 1);
                let (xi, xj, xl, yi, yj, yl) = (b.x(i), b.x(j), b.x(l), b.y(i), b.y(j), b.y(l));
                out.push(b.build(
                    format!("f_{{{j1},({i1},{l1})}}"),
                    vec![(xi, xj, b.ar1(yl)), (xi, xl, b.ar1(yj))],
                ));
                out.push(b.build(
                    format!("g_{{{i1},({l1},{j1})}}"),
                    vec![(xi, xj, b.ar1(yl)), (xl, xj, b.ar1(yi))],
                ));
                out.push(b.build(
                    format!("h_{{{j1},({i1},{l1})}}"),
                    vec![(xi, xj, b.ar1(xl)), (xj, yl, b.ar1(yi))],
                ));
                out.push(b.build(
                    format!("k_{{{i1},({j1},{l1})}}"),
                    vec![(xi, yl, b.ar1(yj)), (xj, yl, b.ar1(yi))],
                ));
                out.push(b.build(
                    format!("u_{{{i1},({j1},{l1})}}"),
                    vec![(yj, yl, b.ar1(yi)), (xi, yj, b.ar1(xl))],
                ));
                out.push(b.build(
                    format!("a_{{{l1},({i1},{j1})}}"),
                    vec![(yi, yl, b.ar1(xj)), (yi, yj, b.ar1(xl))],
                ));
                out.push(b.build(
                    format!("b_{{{i1},({j1},{l1})}}"),
                    vec![(yj, yl, b.ar1(xi)), (yi, yl, b.ar1(xj))],
                ));
                out.push(b.build(
                    format!("c_{{{j1},({i1},{l1})}}"),
                    vec![(xi, yl, b.ar1(xj)), (xi, yj, b.ar1(xl))],
                ));
            }
        }
    }
    for j in 0..m {
        let j1 = j + 1;
        let yz = |p: usize| scale_vec(&y[(p, j)], &arz);
        let xz = |p: usize| scale_vec(&x[(p, j)], &arz);
        let mut f = Vec::new();
        let mut g = Vec::new();
        let mut hh = Vec::new();
        let mut k = Vec::new();
        let mut w = Vec::new();
        let mut a = Vec::new();
        let mut bb = Vec::new();
        let mut c = Vec::new();
        for p in 0..m {
            f.push((b.x(j), b.y(p), b.ar1(b.y(p))));
            f.push((b.x(p), z, yz(p)));
            g.push((b.x(p), b.y(p), b.ar1(b.y(j))));
            g.push((b.x(p), z, yz(p)));
            hh.push((b.x(p), b.x(j), b.ar1(b.x(p))));
            hh.push((b.x(p), z, yz(p)));
            k.push((b.x(p), b.y(j), b.ar1(b.x(p))));
            k.push((z, b.y(p), xz(p)));
            w.push((b.x(p), b.y(p), b.ar1(b.x(j))));
            w.push((z, b.y(p), xz(p)));
            a.push((b.y(j), b.y(p), b.ar1(b.y(p))));
            a.push((b.y(p), z, xz(p)));
            bb.push((b.x(p), b.y(p), b.ar1(b.x(j))));
            bb.push((z, b.y(p), xz(p)));
            c.push((b.y(j), b.y(p), b.ar1(b.y(p))));
            c.push((b.y(p), z, xz(p)));
        }
        for (name, v) in [("f", f), ("g", g), ("h", hh), ("k", k), ("w", w), ("a", a), ("b", bb), ("c", c)] {
            out.push(b.build(format!("{name}_{j1}"), v));
        }
    }
    let zvec = b.h.algebra().basis_vector(z);
    for i in 0..m {
        for j in 0..m {
            let (i1, j1) = (i + 1, j + 1);
            if i < j {
                out.push(b.build(format!("d_{{{i1},{j1}}}"), vec![(b.x(i), b.x(j), zvec.clone())]));
            }
            out.push(b.build(format!("e_{{{i1},{j1}}}"), vec![(b.x(i), b.y(j), zvec.clone())]));
            if i < j {
                out.push(b.build(format!("f_{{{i1},{j1}}}"), vec![(b.y(i), b.y(j), zvec.clone())]));
            }
        }
    }
    out
}

/// Instantiate both generator lists for the adjoint module and test each
/// against `im delta^1_r` and `ker delta^2_r` on all cochains.
pub fn adjoint_b2_verify(h: &HeisenbergAlgebra, r: i64) -> Result<AdjointB2Report> {
    let l = h.algebra();
    let rep = l.adjoint_rep()?;
    let n = h.dim();
    let b = Builder {
        h,
        lay: CochainLayout::new(n, n, 2),
        ar: h.p().pow(r)?,
        ar1: h.p().pow(r + 1)?,
    };
    let image = coboundary_matrix(l, &rep, 1, r)?.column_space();
    let d2 = coboundary_matrix(l, &rep, 2, r)?;
    let z2_dim = d2.kernel_basis().dim();

    let check = |(name, f, notes): (String, Cochain, Vec<String>)| -> Result<(GeneratorCheck, Vec<Scalar>)> {
        let is_cocycle = coboundary(l, &rep, &f, r)?.is_zero();
        Ok((
            GeneratorCheck {
                name,
                is_zero: f.is_zero(),
                in_image: image.contains(&f.values),
                is_cocycle,
                notes,
            },
            f.values,
        ))
    };
    let mut b2_generators = Vec::new();
    let mut b2_vectors = Vec::new();
    for g in b2_list(&b) {
        let (c, v) = check(g)?;
        b2_generators.push(c);
        b2_vectors.push(v);
    }
    let span = SubspaceBasis::span_of(b.lay.dim(), &b2_vectors);
    let mut z2_generators = Vec::new();
    for g in z2_list(&b) {
        z2_generators.push(check(g)?.0);
    }
    let flagged = z2_generators
        .iter()
        .filter(|g| !g.is_cocycle)
        .map(|g| format!("{} is not a cocycle", g.name))
        .collect();
    Ok(AdjointB2Report {
        m: h.m(),
        r,
        b2_dim: image.dim(),
        z2_dim,
        b2_list_rank: span.dim(),
        b2_list_spans_b2: span.same_span(&image),
        b2_generators,
        z2_generators,
        flagged,
    })
}
