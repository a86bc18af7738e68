//! Dispatch and output.

use std::fmt;
use std::path::Path;

use homlie::cohomology::{cohomology_report, faithful_h1_hom_report, faithful_h1_report, trivial_cohomology_report};
use homlie::derivations::{der_block_check, der_dim_compare, der_space};
use homlie::heisenberg::{decompose, normal_form_dim3, split_heisenberg_abelian, SplitSummary};
use homlie::json::{canonical, parse_algebra, parse_algebra_json, AlgebraJson, ParsedAlgebra};
use homlie::representations::{check_representation, is_faithful, minimal_faithful, trivial_rep};
use homlie::{Error, HeisenbergAlgebra, HomLieAlgebra, Matrix, Representation, Scalar};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Cli, Command, RepKind};

const DEFAULT_MAX_DIM: usize = 25;

#[derive(Debug)]
pub enum Failure {
    /// Bad files, flags or algebras: exit 2.
    Input(String),
    /// A violated internal invariant: exit 1.
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(s) | Failure::Internal(s) => f.write_str(s),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

fn max_dim() -> Outcome<usize> {
    match std::env::var("HOMLIE_MAX_DIM") {
        Err(_) => Ok(DEFAULT_MAX_DIM),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("HOMLIE_MAX_DIM must be a non-negative integer, got {s:?}"))),
    }
}

fn read(path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: homlie::Result<T>) -> Outcome<T> {
    r.map_err(|e| match Failure::from(e) {
        Failure::Input(s) => Failure::Input(format!("{}: {s}", path.display())),
        f => f,
    })
}

pub fn load(path: &Path) -> Outcome<ParsedAlgebra> {
    let text = read(path)?;
    in_file(path, parse_algebra(&text, max_dim()?))
}

fn load_heisenberg(path: &Path) -> Outcome<HeisenbergAlgebra> {
    match load(path)? {
        ParsedAlgebra::Heisenberg(h) => Ok(h),
        ParsedAlgebra::Plain(_) => Err(Failure::Input(format!(
            "{}: a Heisenberg algebra (with \"m\", \"lambda\", \"P\") is required",
            path.display()
        ))),
    }
}

pub fn to_value<T: Serialize>(v: &T) -> Outcome<Value> {
    serde_json::to_value(v).map_err(|e| Failure::Internal(e.to_string()))
}

fn parse_scalar(s: &str) -> Outcome<Scalar> {
    s.parse::<Scalar>().map_err(|e| Failure::Input(e.to_string()))
}

pub fn build_rep(l: &HomLieAlgebra, h: Option<&HeisenbergAlgebra>, kind: RepKind, dim_t: Option<usize>) -> Outcome<Representation> {
    if dim_t.is_some() && kind != RepKind::Trivial {
        return Err(Failure::Input("--dimT only applies to --rep trivial".into()));
    }
    Ok(match kind {
        RepKind::Trivial => trivial_rep(l, dim_t.unwrap_or(1))?,
        RepKind::Adjoint => l.adjoint_rep()?,
        RepKind::Faithful => {
            let h = h.ok_or_else(|| Failure::Input("--rep faithful needs a Heisenberg algebra".into()))?;
            minimal_faithful(h)?
        }
    })
}

fn check(path: &Path) -> Outcome<Value> {
    let text = read(path)?;
    let raw = in_file(path, parse_algebra_json(&text, max_dim()?))?;
    let l = in_file(path, raw.to_algebra())?;
    let mut out = to_value(&l.validate())?;
    let series = l.lower_central_series();
    let ht = l.heisenberg_type();
    out["dim"] = json!(l.dim());
    out["labels"] = json!(l.labels());
    out["nilpotent"] = json!(series.nilpotent);
    out["lower_central_dims"] = json!(series.dims());
    out["heisenberg_type"] = json!(ht.heisenberg_type);
    out["center_dim"] = json!(l.center().dim());
    if raw.is_heisenberg() {
        out["heisenberg"] = match raw.validate() {
            Ok(_) => json!({"ok": true, "problems": []}),
            Err(Error::InvalidHeisenberg(p)) => json!({"ok": false, "problems": p}),
            Err(e) if e.is_input_error() => json!({"ok": false, "problems": [e.to_string()]}),
            Err(e) => return Err(e.into()),
        };
    }
    Ok(out)
}

fn heisenberg(file: Option<&Path>, m: Option<usize>, lambda: Option<&str>) -> Outcome<Value> {
    if let Some(path) = file {
        let l = load(path)?.algebra().clone();
        let split = in_file(path, split_heisenberg_abelian(&l))?;
        let mut out = to_value(&SplitSummary::from(&split))?;
        out["algebra"] = to_value(&AlgebraJson::from_heisenberg(&split.heisenberg))?;
        return Ok(out);
    }
    let (Some(m), Some(lambda)) = (m, lambda) else {
        return Err(Failure::Input("give a file, or both --m and --lambda".into()));
    };
    if m == 0 {
        return Err(Failure::Input("--m must be positive".into()));
    }
    let lambda = parse_scalar(lambda)?;
    if 2 * m + 1 > max_dim()? {
        return Err(Error::TooLarge { dim: 2 * m + 1, max: max_dim()? }.into());
    }
    let h = HeisenbergAlgebra::block_diagonal(lambda, &Matrix::identity(m))?;
    to_value(&AlgebraJson::from_heisenberg(&h))
}

fn der(path: &Path, k: i64) -> Outcome<Value> {
    let parsed = load(path)?;
    let space = der_space(parsed.algebra(), k)?;
    let mut out = to_value(&space)?;
    if let Some(h) = parsed.heisenberg().filter(|h| h.is_block_diagonal()) {
        out["comparison"] = to_value(&der_dim_compare(h, k)?)?;
        let checks = space
            .generators
            .iter()
            .map(|g| der_block_check(h, g, k).map(|c| c.pass))
            .collect::<homlie::Result<Vec<bool>>>()?;
        out["block_check"] = json!(checks);
    }
    Ok(out)
}

fn rep(path: &Path, kind: RepKind, dim_t: Option<usize>) -> Outcome<Value> {
    let parsed = load(path)?;
    let r = build_rep(parsed.algebra(), parsed.heisenberg(), kind, dim_t)?;
    Ok(json!({
        "kind": to_value(&kind_name(kind))?,
        "representation": to_value(&r)?,
        "check": to_value(&check_representation(parsed.algebra(), &r)?)?,
        "faithful": is_faithful(&r),
    }))
}

pub fn kind_name(kind: RepKind) -> &'static str {
    match kind {
        RepKind::Trivial => "trivial",
        RepKind::Adjoint => "adjoint",
        RepKind::Faithful => "faithful",
    }
}

fn cohomology(path: &Path, kind: RepKind, degree: usize, r: i64, hom: bool, dim_t: Option<usize>) -> Outcome<Value> {
    if degree > 2 {
        return Err(Failure::Input(format!("--degree {degree}: only degrees 0, 1 and 2 are supported")));
    }
    let parsed = load(path)?;
    let l = parsed.algebra();
    let rep = build_rep(l, parsed.heisenberg(), kind, dim_t)?;
    let report = match (parsed.heisenberg(), kind, degree, hom) {
        (Some(h), RepKind::Trivial, 2, false) => trivial_cohomology_report(h, dim_t.unwrap_or(1), r)?,
        (Some(h), RepKind::Faithful, 1, false) => faithful_h1_report(h, r)?,
        (Some(h), RepKind::Faithful, 1, true) => faithful_h1_hom_report(h, r)?,
        _ => cohomology_report(l, &rep, degree, r, hom)?,
    };
    let mut out = to_value(&report)?;
    out["rep"] = json!(kind_name(kind));
    Ok(out)
}

fn emit(cli: &Cli, value: &Value) -> Outcome<()> {
    let mut text = canonical(value)?;
    text.push('\n');
    match &cli.output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn run(cli: &Cli) -> Outcome<()> {
    let value = match &cli.command {
        Command::Check(i) => check(&i.file)?,
        Command::Heisenberg { file, m, lambda } => heisenberg(file.as_deref(), *m, lambda.as_deref())?,
        Command::NormalForm(i) => {
            let h = load_heisenberg(&i.file)?;
            if h.m() != 1 {
                return Err(Failure::Input("normal-form needs a three-dimensional algebra (m = 1)".into()));
            }
            to_value(&normal_form_dim3(h.p())?)?
        }
        Command::Decompose { input, eig } => {
            let h = load_heisenberg(&input.file)?;
            let supplied = eig.iter().map(|s| parse_scalar(s)).collect::<Outcome<Vec<_>>>()?;
            to_value(&decompose(&h, &supplied)?)?
        }
        Command::Der { input, k } => der(&input.file, *k)?,
        Command::Rep { input, rep: kind, dim_t } => rep(&input.file, *kind, *dim_t)?,
        Command::Cohomology {
            input,
            rep: kind,
            degree,
            r,
            hom_restricted,
            dim_t,
        } => cohomology(&input.file, *kind, *degree, *r, *hom_restricted, *dim_t)?,
        Command::VerifyPaper { input, k, r } => {
            let h = load_heisenberg(&input.file)?;
            crate::verify::verify(&h, *k, *r)?
        }
    };
    emit(cli, &value)
}
