//! Command-line front end. Every command prints one JSON document with a
//! `status` of `pass`, `fail` or `error`; exit codes are 0, 1 and 2.

use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::abgroup::{enumerate_subgroups, FinAbGroup, Subgroup};
use crate::algmod::{dims_report, internal_end, local_category_of_form, module_constraint_check, TranscriptStep};
use crate::braided::{
    bilinear_form, braided_functor_check, centre_simples, hexagon_check, is_nondegenerate, orthogonal_complement,
    parametric_forms, quadratic_check, standard_cocycle, trace_quadratic, AbelianCocycle,
};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::json;
use crate::monoidal::{
    characters, functor_check, is_spherical, pentagon_check, pivotal_enumerate, quantum_dimension, PointedCategory,
};
use crate::witt::{anisotropic_kernel, isotropic_subgroups, witt_equal};

/// Enumeration bound on group orders unless `PCAT_BOUND` is set.
pub const DEFAULT_BOUND: usize = 256;

#[derive(Debug, Parser)]
#[command(name = "pcat", version, about = "Exact checks for pointed braided fusion category data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pentagon equation for an associator.
    Pentagon {
        #[command(subcommand)]
        action: VerifyOnly,
    },
    /// Hexagon equations for an abelian cocycle.
    Hexagon {
        #[command(subcommand)]
        action: VerifyOnly,
    },
    /// Monoidal or braided functor coherence.
    Functor {
        #[command(subcommand)]
        action: FunctorAction,
    },
    /// Quadratic forms.
    Quadratic {
        #[command(subcommand)]
        action: QuadraticAction,
    },
    /// Subgroups of a group, or isotropic subgroups of a form.
    Subgroups {
        #[arg(long, value_name = "FACTORS")]
        group: Option<String>,
        #[arg(long, value_name = "FORM")]
        isotropic: Option<String>,
    },
    /// Orthogonal complement of a subgroup under a form.
    Complement {
        #[arg(long)]
        subgroup: String,
        form: String,
    },
    /// `H⊥/H` with the induced form.
    LocalCategory {
        form: String,
        #[arg(long)]
        subgroup: String,
    },
    /// Module category constraint over a G-set.
    ModuleConstraint {
        #[command(subcommand)]
        action: VerifyOnly,
    },
    /// Internal end of a simple object of a module category.
    InternalEnd {
        input: String,
        #[arg(long)]
        point: usize,
    },
    /// Drinfeld centre of a pointed category with trivial associator.
    Centre {
        #[command(subcommand)]
        action: CentreAction,
    },
    /// Dimensions of the category, algebra, module and local module categories.
    Dims {
        form: String,
        #[arg(long)]
        subgroup: String,
    },
    /// Witt classes of nondegenerate forms.
    Witt {
        #[command(subcommand)]
        action: WittAction,
    },
    /// Pivotal structures.
    Pivotal {
        #[command(subcommand)]
        action: PivotalAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyOnly {
    Verify { input: String },
}

#[derive(Debug, Subcommand)]
pub enum FunctorAction {
    /// Input: `{"source", "target", "hom", "constraint"}`.
    Verify {
        input: String,
        /// Source and target are abelian cocycles; also check the braidings.
        #[arg(long)]
        braided: bool,
    },
}

#[derive(Debug, Args)]
pub struct GroupModulus {
    /// Cyclic factor orders, comma separated.
    #[arg(long, value_name = "FACTORS")]
    pub group: String,
    #[arg(long)]
    pub modulus: u32,
}

#[derive(Debug, Subcommand)]
pub enum QuadraticAction {
    /// Trace form of an abelian cocycle.
    FromCocycle { input: String },
    /// Quadratic axioms and nondegeneracy of a form.
    Check { form: String },
    /// Every quadratic form on the group.
    Classify(GroupModulus),
}

#[derive(Debug, Subcommand)]
pub enum CentreAction {
    /// Simple objects of the centre and its quadratic form.
    Simples(GroupModulus),
}

#[derive(Debug, Subcommand)]
pub enum WittAction {
    /// Anisotropic kernel with the reduction trace.
    Reduce { form: String },
    /// Whether two forms have the same Witt class.
    Equal { left: String, right: String },
}

#[derive(Debug, Subcommand)]
pub enum PivotalAction {
    /// Pivotal structures, with their dimensions.
    Enumerate { category: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

/// A command's result: status, payload fields and, on failure, a witness.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub payload: Map<String, Value>,
    pub witness: Option<Value>,
}

impl Outcome {
    fn pass(payload: Value) -> Self {
        Outcome {
            status: Status::Pass,
            payload: into_map(payload),
            witness: None,
        }
    }

    fn fail(payload: Value, witness: Value) -> Self {
        Outcome {
            status: Status::Fail,
            payload: into_map(payload),
            witness: Some(witness),
        }
    }

    fn from_check(c: &Check, payload: Value) -> Self {
        match &c.witness {
            None => Outcome::pass(payload),
            Some(w) => Outcome::fail(payload, serde_json::to_value(w).expect("serializable")),
        }
    }

    fn from_transcript(steps: &[TranscriptStep], payload: Value) -> Self {
        match steps.iter().find(|s| !s.pass) {
            None => Outcome::pass(payload),
            Some(s) => Outcome::fail(payload, json!({ "condition": s.name })),
        }
    }

    pub fn error(e: &Error) -> Self {
        Self::error_with("error", e.kind(), &e.to_string())
    }

    fn error_with(key: &str, kind: &str, message: &str) -> Self {
        let mut payload = Map::new();
        payload.insert(key.into(), json!({ "kind": kind, "message": message }));
        Outcome {
            status: Status::Error,
            payload,
            witness: None,
        }
    }

    pub fn code(&self) -> i32 {
        self.status.code()
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("status".into(), json!(self.status.name()));
        out.extend(self.payload.clone());
        if let Some(w) = &self.witness {
            out.insert("witness".into(), w.clone());
        }
        Value::Object(out)
    }
}

fn into_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        Value::Null => Map::new(),
        other => {
            let mut m = Map::new();
            m.insert("result".into(), other);
            m
        }
    }
}

/// Parses arguments (program name first) and runs the command. Help and
/// version requests come back as a pass carrying the rendered text.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                Outcome::pass(json!({ "help": e.render().to_string() }))
            }
            _ => Outcome::error_with("error", "usage", &e.render().to_string()),
        },
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let run = || -> Result<Outcome> {
        let bound = bound_from_env()?;
        dispatch(&cli.command, bound)
    };
    run().unwrap_or_else(|e| Outcome::error(&e))
}

/// `PCAT_BOUND`, if set, replaces [`DEFAULT_BOUND`].
pub fn bound_from_env() -> Result<usize> {
    match std::env::var("PCAT_BOUND") {
        Err(_) => Ok(DEFAULT_BOUND),
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&b| b > 0)
            .ok_or_else(|| Error::Parse(format!("PCAT_BOUND must be a positive integer, got {s:?}"))),
    }
}

/// Inline JSON if the argument starts with `{` or `[`, a file path otherwise.
pub fn load(arg: &str) -> Result<Value> {
    let t = arg.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?
    };
    Ok(serde_json::from_str(&text)?)
}

/// `n1,n2,...`; `trivial` or an empty list is the trivial group.
pub fn parse_group(s: &str) -> Result<FinAbGroup> {
    let s = s.trim();
    if s.is_empty() || s == "trivial" || s == "1" {
        return Ok(FinAbGroup::trivial());
    }
    let factors = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad factor {p:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    FinAbGroup::from_factors_lenient(&factors)
}

/// `trivial`, `whole`, or a subgroup document (inline or file).
pub fn parse_subgroup(g: &FinAbGroup, s: &str) -> Result<Subgroup> {
    match s.trim() {
        "trivial" => Ok(Subgroup::trivial(g)),
        "whole" => Ok(Subgroup::whole(g)),
        _ => json::subgroup_from_json(g, &load(s)?),
    }
}

fn subgroup_summary(h: &Subgroup) -> Value {
    let mut v = json::subgroup_to_json(h);
    v["order"] = json!(h.order());
    v
}

/// A category document, or the category of an abelian cocycle document.
fn category_of(v: &Value) -> Result<PointedCategory> {
    match v.get("category") {
        Some(c) => json::category_from_json(c),
        None => json::category_from_json(v),
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing key \"{key}\"")))
}

fn dispatch(cmd: &Command, bound: usize) -> Result<Outcome> {
    match cmd {
        Command::Pentagon {
            action: VerifyOnly::Verify { input },
        } => {
            let alpha = json::associator_from_json(&load(input)?)?;
            Ok(Outcome::from_check(&pentagon_check(&alpha)?, Value::Null))
        }
        Command::Hexagon {
            action: VerifyOnly::Verify { input },
        } => {
            let (alpha, gamma) = json::abelian_parts_from_json(&load(input)?)?;
            let pentagon = pentagon_check(&alpha)?;
            if !pentagon.pass {
                return Ok(Outcome::from_check(&pentagon, Value::Null));
            }
            Ok(Outcome::from_check(&hexagon_check(&alpha, &gamma)?, Value::Null))
        }
        Command::Functor {
            action: FunctorAction::Verify { input, braided },
        } => {
            let doc = load(input)?;
            if *braided {
                let source = json::abelian_from_json(field(&doc, "source")?)?;
                let target = json::abelian_from_json(field(&doc, "target")?)?;
                let f = json::functor_from_json(source.category(), target.category(), &doc)?;
                Ok(Outcome::from_check(&braided_functor_check(&f, &source, &target)?, Value::Null))
            } else {
                let source = category_of(field(&doc, "source")?)?;
                let target = category_of(field(&doc, "target")?)?;
                let f = json::functor_from_json(&source, &target, &doc)?;
                Ok(Outcome::from_check(&functor_check(&f)?, Value::Null))
            }
        }
        Command::Quadratic { action } => quadratic(action, bound),
        Command::Subgroups { group, isotropic } => {
            let subs = match (group, isotropic) {
                (_, Some(form)) => {
                    let q = json::form_from_json(&load(form)?)?;
                    if let Some(g) = group {
                        if &parse_group(g)? != q.group() {
                            return Err(Error::Precondition("--group differs from the form's group".into()));
                        }
                    }
                    isotropic_subgroups(&q, bound)?
                }
                (Some(g), None) => enumerate_subgroups(&parse_group(g)?, bound)?,
                (None, None) => return Err(Error::Precondition("give --group or --isotropic".into())),
            };
            let list: Vec<Value> = subs.iter().map(subgroup_summary).collect();
            Ok(Outcome::pass(json!({ "count": list.len(), "subgroups": list })))
        }
        Command::Complement { subgroup, form } => {
            let q = json::form_from_json(&load(form)?)?;
            let h = parse_subgroup(q.group(), subgroup)?;
            let perp = orthogonal_complement(&q, &h)?;
            Ok(Outcome::pass(json!({
                "subgroup": subgroup_summary(&h),
                "complement": subgroup_summary(&perp),
            })))
        }
        Command::LocalCategory { form, subgroup } => {
            let q = json::form_from_json(&load(form)?)?;
            let h = parse_subgroup(q.group(), subgroup)?;
            let lc = local_category_of_form(&q, &h)?;
            let payload = json!({
                "subgroup": subgroup_summary(&lc.subgroup),
                "complement": subgroup_summary(&lc.complement),
                "quotient": json::group_to_json(lc.quotient.group()),
                "form": json::form_to_json(&lc.form),
                "transcript": lc.transcript,
            });
            Ok(Outcome::from_transcript(&lc.transcript, payload))
        }
        Command::ModuleConstraint {
            action: VerifyOnly::Verify { input },
        } => {
            let m = json::module_category_from_json(&load(input)?)?;
            Ok(Outcome::from_check(&module_constraint_check(&m)?, Value::Null))
        }
        Command::InternalEnd { input, point } => {
            let m = json::module_category_from_json(&load(input)?)?;
            if *point >= m.gset().len() {
                return Err(Error::InvalidGSet(format!("point {point} out of range")));
            }
            let a = internal_end(&m, *point)?;
            Ok(Outcome::pass(json!({
                "point": point,
                "dimension": a.dimension(),
                "algebra": json::algebra_to_json(&a),
            })))
        }
        Command::Centre {
            action: CentreAction::Simples(gm),
        } => {
            let g = parse_group(&gm.group)?;
            g.check_bound(bound)?;
            let z = centre_simples(&PointedCategory::trivial(&g, gm.modulus)?)?;
            Ok(Outcome::pass(json!({
                "count": z.simples.len(),
                "group": json::group_to_json(&z.centre_group),
                "simples": z.simples,
                "form": json::form_to_json(&z.form),
            })))
        }
        Command::Dims { form, subgroup } => {
            let q = json::form_from_json(&load(form)?)?;
            let h = parse_subgroup(q.group(), subgroup)?;
            let ac = standard_cocycle(&q)?;
            let report = dims_report(&ac, &h)?;
            Ok(Outcome::from_transcript(&report.identities, json::report_to_json(&report)))
        }
        Command::Witt { action } => witt(action, bound),
        Command::Pivotal {
            action: PivotalAction::Enumerate { category },
        } => {
            let c = category_of(&load(category)?)?;
            let all = pivotal_enumerate(&c, bound)?;
            let elements = c.group().elements();
            let structures = all
                .iter()
                .map(|t| {
                    let mut v = json::pivotal_to_json(t);
                    let dims = elements
                        .iter()
                        .map(|x| Ok((json::element_key(x), json!(quantum_dimension(&c, t, x)?))))
                        .collect::<Result<Map<String, Value>>>()?;
                    v["dimensions"] = Value::Object(dims);
                    v["spherical"] = json!(is_spherical(&c, t)?);
                    Ok(v)
                })
                .collect::<Result<Vec<Value>>>()?;
            Ok(Outcome::pass(json!({
                "count": structures.len(),
                "characters": characters(c.group(), c.modulus())?.len(),
                "structures": structures,
            })))
        }
    }
}

fn quadratic(action: &QuadraticAction, bound: usize) -> Result<Outcome> {
    match action {
        QuadraticAction::FromCocycle { input } => {
            let ac: AbelianCocycle = json::abelian_from_json(&load(input)?)?;
            let q = trace_quadratic(&ac);
            Ok(Outcome::from_check(&quadratic_check(&q), json!({ "form": json::form_to_json(&q) })))
        }
        QuadraticAction::Check { form } => {
            let q = json::form_from_json(&load(form)?)?;
            let check = quadratic_check(&q);
            if !check.pass {
                return Ok(Outcome::from_check(&check, Value::Null));
            }
            bilinear_form(&q)?;
            Ok(Outcome::pass(json!({ "nondegenerate": is_nondegenerate(&q)? })))
        }
        QuadraticAction::Classify(gm) => {
            let g = parse_group(&gm.group)?;
            let forms = parametric_forms(&g, gm.modulus, bound)?;
            let list: Vec<Value> = forms.iter().map(json::form_to_json).collect();
            Ok(Outcome::pass(json!({ "count": list.len(), "forms": list })))
        }
    }
}

fn witt(action: &WittAction, bound: usize) -> Result<Outcome> {
    match action {
        WittAction::Reduce { form } => {
            let q = json::form_from_json(&load(form)?)?;
            let w = anisotropic_kernel(&q, bound)?;
            let mut payload = json::witt_witness_to_json(&w);
            payload["anisotropic"] = json!(w.trace.is_empty());
            Ok(Outcome::pass(payload))
        }
        WittAction::Equal { left, right } => {
            let a = json::form_from_json(&load(left)?)?;
            let b = json::form_from_json(&load(right)?)?;
            let cmp = witt_equal(&a, &b, bound)?;
            let payload = json!({
                "equal": cmp.equal,
                "left": json::witt_witness_to_json(&cmp.left),
                "right": json::witt_witness_to_json(&cmp.right),
                "isometry": cmp.isometry.as_ref().map(json::hom_to_json),
            });
            if cmp.equal {
                Ok(Outcome::pass(payload))
            } else {
                let witness = json!({
                    "condition": "anisotropic kernels are not isometric",
                    "left_kernel": json::form_to_json(&cmp.left.kernel),
                    "right_kernel": json::form_to_json(&cmp.right.kernel),
                });
                Ok(Outcome::fail(payload, witness))
            }
        }
    }
}
