//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria in `KNOWN_FAILING` do not hold for this implementation; the
//! run fails if one of them starts passing or if any other criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};

use homlie::cohomology::{
    adjoint_b2_verify, faithful_h1_hom_report, faithful_h1_report, squares_to_zero, trivial_cohomology_report,
};
use homlie::derivations::{der_block_check, der_dim_compare, der_space, der_table, is_derivation};
use homlie::heisenberg::{decompose, DecomposeCase};
use homlie::representations::{check_representation, is_faithful, minimal_faithful, trivial_rep};
use homlie::symplectic::{darboux_basis, is_lambda_symplectic, standard_form, SkewForm};
use homlie::{HeisenbergAlgebra, HomLieAlgebra, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// 2: the unipotent row has a 3-dimensional derivation space, not 6.
/// 5: at m = 1 the trivial-coefficient H^2 has dimension 2, not 0.
/// 8: for X = (1), lambda = 6 the Hom-restricted B^1 has dimension 1, not 2.
/// 9: with the faithful module, delta^2 delta^1 != 0 on the full cochain
///    space (it vanishes on Hom-cochains).
const KNOWN_FAILING: &[usize] = &[2, 5, 8, 9];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn s(v: i64) -> Scalar {
    Scalar::from(v)
}

fn rand_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let den = [1, 1, 1, 2, 3][rng.gen_range(0..5)];
    Scalar::frac(rng.gen_range(-4..=4), den)
}

fn rand_nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let v = rand_rational(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

fn rand_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols).map(|_| s(rng.gen_range(-bound..=bound))).collect();
    Matrix::from_vec(rows, cols, data).unwrap()
}

fn rand_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let q = rand_matrix(rng, n, n, 2);
        if q.is_invertible() {
            return q;
        }
    }
}

fn rand_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let a = rand_matrix(rng, n, n, 2);
    &a + &a.transpose()
}

/// A product of random symplectic generators, then `diag(I, lambda I)`.
fn rand_lambda_symplectic(rng: &mut ChaCha8Rng, m: usize, lambda: &Scalar) -> Matrix {
    let id = Matrix::identity(m);
    let zero = Matrix::zeros(m, m);
    let mut acc = Matrix::identity(2 * m);
    for _ in 0..3 {
        let g = match rng.gen_range(0..3) {
            0 => Matrix::from_blocks(&[vec![&id, &rand_symmetric(rng, m)], vec![&zero, &id]]),
            1 => Matrix::from_blocks(&[vec![&id, &zero], vec![&rand_symmetric(rng, m), &id]]),
            _ => {
                let g = rand_invertible(rng, m);
                let gi = g.transpose().inverse().unwrap();
                Matrix::from_blocks(&[vec![&g, &zero], vec![&zero, &gi]])
            }
        }
        .unwrap();
        acc = &acc * &g;
    }
    let scale = Matrix::from_blocks(&[vec![&id, &zero], vec![&zero, &Matrix::scalar(m, lambda)]]).unwrap();
    &acc * &scale
}

fn rand_heisenberg(rng: &mut ChaCha8Rng, m: usize) -> HeisenbergAlgebra {
    let lambda = rand_nonzero(rng);
    let sm = rand_lambda_symplectic(rng, m, &lambda);
    let n = 2 * m + 1;
    let mut p = Matrix::zeros(n, n);
    p.set_block(0, 0, &sm);
    p.set_block(2 * m, 0, &rand_matrix(rng, 1, 2 * m, 2));
    p[(2 * m, 2 * m)] = lambda.clone();
    HeisenbergAlgebra::build(m, lambda, p).expect("random instance is valid")
}

/// `alpha = diag(X, lambda tX^{-1}, lambda)` with `X = Q J Q^{-1}`, the
/// eigenvalues of `J` drawn so that the special cases of the block theorem
/// occur.
fn rand_block_diagonal(rng: &mut ChaCha8Rng, m: usize) -> HeisenbergAlgebra {
    let lambda = [s(1), s(4), s(6), s(-2), Scalar::frac(9, 4)][rng.gen_range(0..5)].clone();
    let pool = [
        s(1),
        lambda.clone(),
        s(2),
        &lambda / &s(2),
        s(-1),
        s(3),
        &lambda / &s(3),
    ];
    let mut j = Matrix::diag(&(0..m).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect::<Vec<_>>());
    if m >= 2 && rng.gen_bool(0.3) {
        j[(1, 1)] = j[(0, 0)].clone();
        j[(0, 1)] = Scalar::one();
    }
    let q = if rng.gen_bool(0.5) {
        Matrix::identity(m)
    } else {
        rand_invertible(rng, m)
    };
    let x = &(&q * &j) * &q.inverse().unwrap();
    HeisenbergAlgebra::block_diagonal(lambda, &x).expect("invertible X")
}

fn criterion_1() -> Outcome {
    let mut rng = rng(1);
    let (mut valid, mut caught) = (0, 0);
    for t in 0..50 {
        let h = rand_heisenberg(&mut rng, 1 + t % 3);
        let l = h.algebra();
        if l.validate().all_ok() {
            valid += 1;
        }
        let n = l.dim();
        let mut tensor = l.structure_constants().clone();
        let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        tensor[i][j][k] += &rand_nonzero(&mut rng);
        let mutated = HomLieAlgebra::new(l.labels().to_vec(), tensor, l.alpha().clone()).unwrap();
        let report = mutated.validate();
        if !report.all_ok() && !report.witnesses.is_empty() {
            caught += 1;
        }
    }
    outcome(
        valid == 50 && caught == 50,
        format!("{valid}/50 random H^m_lambda valid, {caught}/50 single-constant mutations rejected with a witness"),
    )
}

fn criterion_2() -> Outcome {
    let rows = der_table(1).unwrap();
    let dims: Vec<String> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| format!("row {}: {} (claimed {})", i + 1, r.computed_dim, r.claimed_dim))
        .collect();
    let exact = rows[0].computed_dim == 2 && rows[1].computed_dim == 4 && rows[3].computed_dim == 2;
    let unipotent = rows[4].computed_dim == 6;
    let identity_flag = !rows[2].dim_match && !rows[2].consistent();
    let jordan_flag = !rows[3].mu_match;
    outcome(
        exact && unipotent && identity_flag && jordan_flag,
        format!(
            "{}; identity-row flag {}, Jordan mu flag {}",
            dims.join(", "),
            if identity_flag { "fired" } else { "silent" },
            if jordan_flag { "fired" } else { "silent" }
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = rng(3);
    let (mut agree, mut total, mut members) = (0, 0, 0);
    for t in 0..20 {
        let h = rand_block_diagonal(&mut rng, 1 + t % 3);
        let n = h.dim();
        for k in 0..3 {
            let space = der_space(h.algebra(), k).unwrap();
            let mut candidates: Vec<(Matrix, bool)> = space.generators.iter().map(|g| (g.clone(), true)).collect();
            for _ in 0..20 {
                let mut d = rand_matrix(&mut rng, n, n, 2);
                if rng.gen_bool(0.5) && !space.generators.is_empty() {
                    d = space.generators[rng.gen_range(0..space.generators.len())].clone();
                    let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    d[(i, j)] += &Scalar::one();
                }
                let member = space.basis.contains(d.entries());
                candidates.push((d, member));
            }
            for (d, member) in candidates {
                let block = der_block_check(&h, &d, k).unwrap().pass;
                let direct = is_derivation(h.algebra(), &d, k).unwrap();
                total += 1;
                members += usize::from(member);
                if block == member && member == direct {
                    agree += 1;
                }
            }
        }
    }
    outcome(
        agree == total,
        format!("{agree}/{total} candidates agree (block identities vs kernel membership vs direct check; {members} members)"),
    )
}

fn criterion_4() -> Outcome {
    let mut rng = rng(4);
    let mut matched = 0;
    let mut total = 0;
    let mut t = 0;
    while t < 20 {
        let m = 1 + t % 3;
        let lambda = rand_nonzero(&mut rng);
        let mut eig: Vec<Scalar> = Vec::new();
        while eig.len() < m {
            let d = rand_nonzero(&mut rng);
            let bad = d == Scalar::one()
                || d == lambda
                || eig.contains(&d)
                || eig.iter().chain(std::iter::once(&d)).any(|e| &(e * &d) == &lambda);
            if !bad {
                eig.push(d);
            }
        }
        let q = rand_invertible(&mut rng, m);
        let x = &(&q * &Matrix::diag(&eig)) * &q.inverse().unwrap();
        let h = HeisenbergAlgebra::block_diagonal(lambda, &x).unwrap();
        for k in 0..3 {
            total += 1;
            if der_dim_compare(&h, k).unwrap().matches {
                matched += 1;
            }
        }
        t += 1;
    }
    let sq = der_dim_compare(&HeisenbergAlgebra::block_diagonal(s(4), &Matrix::diag_ints(&[2])).unwrap(), 1).unwrap();
    let reproduced = sq.predicted == 3 && sq.computed == 4;
    outcome(
        matched == total && reproduced,
        format!(
            "{matched}/{total} generic predictions match (k = 0, 1, 2); X = (2), lambda = 4: predicted {}, computed {}",
            sq.predicted, sq.computed
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for m in 1..=3 {
        let h = HeisenbergAlgebra::block_diagonal(s(6), &Matrix::diag(&(0..m).map(|i| s(i as i64 + 2)).collect::<Vec<_>>()))
            .unwrap();
        for dt in 1..=2 {
            let r = trivial_cohomology_report(&h, dt, 1).unwrap();
            ok &= r.all_match();
            let want = |i: usize| r.comparisons[i].predicted;
            lines.push(format!(
                "m={m},T={dt}: {}/{}/{} (want {}/{}/{})",
                r.dims.z,
                r.dims.b,
                r.dims.h,
                want(0),
                want(1),
                want(2)
            ));
        }
    }
    outcome(ok, lines.join("; "))
}

fn criterion_6() -> Outcome {
    let mut rng = rng(6);
    let mut lines = Vec::new();
    let mut ok = true;
    for m in 1..=3 {
        let h = rand_block_diagonal(&mut rng, m);
        let r = minimal_faithful(&h).unwrap();
        let axioms = check_representation(h.algebra(), &r).unwrap().ok;
        let faithful = is_faithful(&r);
        ok &= r.module_dim == m + 2 && axioms && faithful;
        lines.push(format!("m={m}: dim {}, axioms {axioms}, faithful {faithful}", r.module_dim));
    }
    outcome(ok, lines.join("; "))
}

fn criterion_7() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (m, x, want) in [(1, vec![2], 2), (2, vec![2, 3], 5)] {
        let h = HeisenbergAlgebra::block_diagonal(s(6), &Matrix::diag_ints(&x)).unwrap();
        let r = faithful_h1_report(&h, 1).unwrap();
        ok &= r.dims.h == want && r.all_match();
        lines.push(format!("m={m}: H1 = {} (want {want})", r.dims.h));
    }
    outcome(ok, lines.join("; "))
}

fn criterion_8() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for x in [vec![2], vec![1], vec![2, 3]] {
        let h = HeisenbergAlgebra::block_diagonal(s(6), &Matrix::diag_ints(&x)).unwrap();
        let r = faithful_h1_hom_report(&h, 1).unwrap();
        ok &= r.all_match();
        lines.push(format!(
            "X={x:?}: B1 {} (formula {}), H1 {} (formula {})",
            r.comparisons[0].computed, r.comparisons[0].predicted, r.comparisons[1].computed, r.comparisons[1].predicted
        ));
    }
    outcome(ok, lines.join("; "))
}

fn criterion_9() -> Outcome {
    let mut full_fail = Vec::new();
    let mut hom_fail = Vec::new();
    for x in [vec![2], vec![2, 3]] {
        let h = HeisenbergAlgebra::block_diagonal(s(6), &Matrix::diag_ints(&x)).unwrap();
        let l = h.algebra();
        let reps = [
            ("trivial", trivial_rep(l, 2).unwrap()),
            ("adjoint", l.adjoint_rep().unwrap()),
            ("faithful", minimal_faithful(&h).unwrap()),
        ];
        for (name, rep) in &reps {
            for r in [1, 2] {
                for k in [1, 2] {
                    let tag = format!("{name} m={} r={r} k={k}", x.len());
                    if !squares_to_zero(l, rep, k, r, false).unwrap() {
                        full_fail.push(tag.clone());
                    }
                    if !squares_to_zero(l, rep, k, r, true).unwrap() {
                        hom_fail.push(tag);
                    }
                }
            }
        }
    }
    outcome(
        full_fail.is_empty(),
        format!(
            "full cochains: {}; Hom-cochains (informational): {}",
            if full_fail.is_empty() { "all zero".to_string() } else { format!("nonzero for {}", full_fail.join(", ")) },
            if hom_fail.is_empty() { "all zero".to_string() } else { format!("nonzero for {}", hom_fail.join(", ")) },
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut rng = rng(10);
    let mut darboux_ok = 0;
    for t in 0..30 {
        let n = 2 * (1 + t % 4);
        let gram = loop {
            let a = rand_matrix(&mut rng, n, n, 3);
            let g = &a - &a.transpose();
            if g.is_invertible() {
                break g;
            }
        };
        let p = darboux_basis(&SkewForm::new(gram.clone()).unwrap()).unwrap();
        if &(&p.transpose() * &gram) * &p == standard_form(n / 2) {
            darboux_ok += 1;
        }
    }
    let mut mult_ok = 0;
    for t in 0..30 {
        let m = 1 + t % 3;
        let (l1, l2) = (rand_nonzero(&mut rng), rand_nonzero(&mut rng));
        let (s1, s2) = (rand_lambda_symplectic(&mut rng, m, &l1), rand_lambda_symplectic(&mut rng, m, &l2));
        if is_lambda_symplectic(&s1, &l1).unwrap()
            && is_lambda_symplectic(&s2, &l2).unwrap()
            && is_lambda_symplectic(&(&s1 * &s2), &(&l1 * &l2)).unwrap()
        {
            mult_ok += 1;
        }
    }
    outcome(
        darboux_ok == 30 && mult_ok == 30,
        format!("Darboux {darboux_ok}/30, multiplicativity {mult_ok}/30"),
    )
}

fn criterion_11() -> Outcome {
    let h = HeisenbergAlgebra::build(2, s(6), Matrix::diag_ints(&[2, -2, 3, -3, 6])).unwrap();
    let d = decompose(&h, &[]).unwrap();
    let shapes_ok = d.pieces.len() == 2
        && d.pieces.iter().all(|p| p.case == DecomposeCase::I && p.shape_conforms)
        && d.pieces[0].restricted_alpha == Matrix::diag_ints(&[2, 3, 6])
        && d.pieces[1].restricted_alpha == Matrix::diag_ints(&[-2, -3, 6]);
    let h2 = HeisenbergAlgebra::build(1, s(4), Matrix::diag_ints(&[2, 2, 4])).unwrap();
    let d2 = decompose(&h2, &[]).unwrap();
    let case_ii = d2.pieces.len() == 1 && d2.pieces[0].case == DecomposeCase::II;
    outcome(
        shapes_ok && case_ii && d.cross_brackets_vanish && d2.cross_brackets_vanish,
        format!(
            "diag(2,-2,3,-3,6): {} pieces {:?}, cross brackets vanish {}; diag(2,2,4): {} piece {:?}",
            d.pieces.len(),
            d.pieces.iter().map(|p| p.case).collect::<Vec<_>>(),
            d.cross_brackets_vanish,
            d2.pieces.len(),
            d2.pieces.iter().map(|p| p.case).collect::<Vec<_>>()
        ),
    )
}

fn criterion_12() -> Outcome {
    let mut rng = rng(12);
    let mut ok = true;
    let mut b2 = (0, 0);
    let mut z2 = (0, 0);
    let mut flagged = std::collections::BTreeSet::new();
    for t in 0..6 {
        let m = 1 + t % 2;
        let h = rand_block_diagonal(&mut rng, m);
        for r in [1, 2] {
            let rep = adjoint_b2_verify(&h, r).unwrap();
            b2.0 += rep.b2_generators.iter().filter(|g| g.in_image).count();
            b2.1 += rep.b2_generators.len();
            z2.0 += rep.z2_generators.iter().filter(|g| g.is_cocycle).count();
            z2.1 += rep.z2_generators.len();
            // every listed coboundary is verified; every listed cocycle
            // either passes or is recorded
            ok &= rep.b2_ok();
            ok &= rep
                .z2_generators
                .iter()
                .all(|g| g.is_cocycle || rep.flagged.contains(&format!("{} is not a cocycle", g.name)));
            flagged.extend(rep.flagged.iter().map(|f| f.split(' ').next().unwrap().to_string()));
        }
    }
    outcome(
        ok,
        format!(
            "B2 generators in im delta1: {}/{}; Z2 generators with delta2 = 0: {}/{}; flagged: {}",
            b2.0,
            b2.1,
            z2.0,
            z2.1,
            flagged.into_iter().collect::<Vec<_>>().join(" ")
        ),
    )
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome); 12] = [
        (1, "axiom suite", criterion_1),
        (2, "derivation table", criterion_2),
        (3, "block-theorem equivalence", criterion_3),
        (4, "derivation dimension formula", criterion_4),
        (5, "trivial-module cohomology", criterion_5),
        (6, "minimal faithful module", criterion_6),
        (7, "faithful H1, all cochains", criterion_7),
        (8, "faithful H1, Hom-cochains", criterion_8),
        (9, "complex property", criterion_9),
        (10, "symplectic suite", criterion_10),
        (11, "decomposition", criterion_11),
        (12, "adjoint generator lists", criterion_12),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (n, name, run) in criteria {
        let o = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        let known = KNOWN_FAILING.contains(&n);
        passed += usize::from(o.pass);
        println!(
            "criterion {n:>2} {}{}: {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            if known && !o.pass { " (known)" } else { "" },
            o.detail
        );
        if o.pass == known {
            unexpected.push(n);
        }
    }
    println!("{passed}/12 criteria pass");
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
