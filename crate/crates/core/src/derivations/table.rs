//! Claimed derivation spaces of the three-dimensional Heisenberg Hom-Lie
//! algebras, one instance per family, checked against the kernel
//! computation.

use serde::Serialize;

use super::{der_space, DerBlocks};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::heisenberg::HeisenbergAlgebra;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub label: String,
    pub lambda: Scalar,
    pub alpha: Matrix,
    pub k: i64,
    pub claimed_dim: usize,
    pub computed_dim: usize,
    pub dim_match: bool,
    /// The claimed form of the `z`-entry of `D`.
    pub claimed_mu: String,
    /// Whether every computed generator satisfies the claimed `mu`.
    pub mu_match: bool,
    pub generators: Vec<Matrix>,
    pub flags: Vec<String>,
}

impl TableRow {
    pub fn consistent(&self) -> bool {
        self.flags.is_empty()
    }
}

type MuRule = fn(&DerBlocks, i64) -> Option<Scalar>;

struct Spec {
    label: &'static str,
    lambda: i64,
    alpha: [[i64; 3]; 3],
    claimed_dim: usize,
    claimed_mu: &'static str,
    mu: MuRule,
}

fn pw(a: i64, k: i64) -> Option<Scalar> {
    Scalar::from(a).pow(k)
}

fn specs() -> Vec<Spec> {
    vec![
        Spec {
            label: "diag(a, lambda/a, lambda), a^2 != lambda, a != lambda",
            lambda: 6,
            alpha: [[2, 0, 0], [0, 3, 0], [0, 0, 6]],
            claimed_dim: 2,
            claimed_mu: "d4 a^k + d1 (lambda/a)^k",
            mu: |b, k| Some(&(&b.d4[(0, 0)] * &pw(2, k)?) + &(&b.d1[(0, 0)] * &pw(3, k)?)),
        },
        Spec {
            label: "diag(a, a, lambda), a^2 = lambda, a != lambda",
            lambda: 4,
            alpha: [[2, 0, 0], [0, 2, 0], [0, 0, 4]],
            claimed_dim: 4,
            claimed_mu: "a^k (d4 + d1)",
            mu: |b, k| Some(&pw(2, k)? * &(&b.d4[(0, 0)] + &b.d1[(0, 0)])),
        },
        Spec {
            label: "identity",
            lambda: 1,
            alpha: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            claimed_dim: 2,
            claimed_mu: "2 d1",
            mu: |b, _| Some(&Scalar::from(2) * &b.d1[(0, 0)]),
        },
        Spec {
            label: "Jordan block (a, 1; 0, a), a^2 = lambda, a != 1",
            lambda: 4,
            alpha: [[2, 1, 0], [0, 2, 0], [0, 0, 4]],
            claimed_dim: 2,
            claimed_mu: "2 a^4 d1",
            mu: |b, _| Some(&(&Scalar::from(2) * &pw(2, 4)?) * &b.d1[(0, 0)]),
        },
        Spec {
            label: "unipotent (1, 1; 0, 1), lambda = 1",
            lambda: 1,
            alpha: [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
            claimed_dim: 6,
            claimed_mu: "d1 + d4 - k d2",
            mu: |b, k| Some(&(&b.d1[(0, 0)] + &b.d4[(0, 0)]) - &(&Scalar::from(k) * &b.d2[(0, 0)])),
        },
    ]
}

/// Every row of the table at degree `k`, with mismatches recorded as flags.
pub fn der_table(k: i64) -> Result<Vec<TableRow>> {
    specs()
        .into_iter()
        .map(|s| {
            let lambda = Scalar::from(s.lambda);
            let alpha = Matrix::ints(&s.alpha);
            let h = HeisenbergAlgebra::build(1, lambda.clone(), alpha.clone())?;
            let space = der_space(h.algebra(), k)?;
            let mut flags = Vec::new();
            if space.dim != s.claimed_dim {
                flags.push(format!("dimension: claimed {}, computed {}", s.claimed_dim, space.dim));
            }
            let mut mu_match = true;
            for (i, g) in space.generators.iter().enumerate() {
                let b = DerBlocks::of(g, 1);
                let want = (s.mu)(&b, k).ok_or(Error::SingularPower(k))?;
                if want != b.mu {
                    mu_match = false;
                    flags.push(format!(
                        "mu: claimed {} gives {want} on generator {i}, computed {}",
                        s.claimed_mu, b.mu
                    ));
                }
            }
            Ok(TableRow {
                label: s.label.to_string(),
                lambda,
                alpha,
                k,
                claimed_dim: s.claimed_dim,
                computed_dim: space.dim,
                dim_match: space.dim == s.claimed_dim,
                claimed_mu: s.claimed_mu.to_string(),
                mu_match,
                generators: space.generators,
                flags,
            })
        })
        .collect()
}
