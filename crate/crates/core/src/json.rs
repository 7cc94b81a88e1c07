//! JSON wire formats.
//!
//! Elements are integer arrays. Cochains list their nonzero values as
//! `{"args": [...], "exp": e}`; omitted tuples are zero. Maps keyed by
//! elements use the compact array text as key, e.g. `"[1,0]"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::abgroup::{FinAbGroup, GSet, GroupElement, Hom, Subgroup};
use crate::algmod::{DimensionReport, ModuleCategoryData, ModuleData, TwistedGroupAlgebra};
use crate::braided::{AbelianCocycle, QuadraticForm};
use crate::cochain::{Cochain, Domain, GSetCochain};
use crate::error::{Error, Result};
use crate::monoidal::{FunctorData, PivotalData, PointedCategory};
use crate::witt::WittClassWitness;

fn parse_err(what: &str, e: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{what}: {e}"))
}

fn from_value<T: for<'de> Deserialize<'de>>(what: &str, v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| parse_err(what, e))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing key \"{key}\"")))
}

/// Map key for an element: `"[1,0]"`.
pub fn element_key(x: &[u32]) -> String {
    serde_json::to_string(x).expect("integer array")
}

fn parse_element(g: &FinAbGroup, coords: &[i64]) -> Result<GroupElement> {
    g.element(coords)
}

fn parse_key(g: &FinAbGroup, key: &str) -> Result<GroupElement> {
    let coords: Vec<i64> = serde_json::from_str(key.trim()).map_err(|e| parse_err(&format!("key {key:?}"), e))?;
    parse_element(g, &coords)
}

fn reduce_exp(e: i64, modulus: u32) -> u32 {
    e.rem_euclid(modulus as i64) as u32
}

pub fn group_to_json(g: &FinAbGroup) -> Value {
    serde_json::to_value(g).expect("serializable")
}

pub fn group_from_json(v: &Value) -> Result<FinAbGroup> {
    from_value("group", v)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SubgroupWire {
    Object { generators: Vec<Vec<i64>> },
    Bare(Vec<Vec<i64>>),
}

pub fn subgroup_to_json(h: &Subgroup) -> Value {
    json!({ "generators": h.canonical_basis() })
}

/// Accepts `{"generators": [...]}` or a bare list of generators.
pub fn subgroup_from_json(g: &FinAbGroup, v: &Value) -> Result<Subgroup> {
    let gens = match from_value::<SubgroupWire>("subgroup", v)? {
        SubgroupWire::Object { generators } | SubgroupWire::Bare(generators) => generators,
    };
    let gens = gens.iter().map(|x| parse_element(g, x)).collect::<Result<Vec<_>>>()?;
    Subgroup::generated(g, &gens)
}

#[derive(Serialize, Deserialize)]
struct GSetWire {
    points: usize,
    action: Vec<Vec<u32>>,
}

pub fn gset_to_json(x: &GSet) -> Value {
    json!({ "points": x.len(), "action": x.generator_actions() })
}

pub fn gset_from_json(g: &FinAbGroup, v: &Value) -> Result<GSet> {
    let w: GSetWire = from_value("gset", v)?;
    GSet::new(g, w.points, w.action)
}

pub fn hom_to_json(h: &Hom) -> Value {
    json!(h.images())
}

pub fn hom_from_json(source: &FinAbGroup, target: &FinAbGroup, v: &Value) -> Result<Hom> {
    let images: Vec<Vec<i64>> = from_value("hom", v)?;
    let images = images.iter().map(|x| parse_element(target, x)).collect::<Result<Vec<_>>>()?;
    Hom::new(source, target, images)
}

#[derive(Deserialize)]
struct EntryWire {
    args: Vec<Vec<i64>>,
    exp: i64,
    #[serde(default)]
    point: Option<usize>,
}

#[derive(Deserialize)]
struct CochainWire {
    group: FinAbGroup,
    #[serde(default)]
    subgroup: Option<Value>,
    degree: usize,
    modulus: u32,
    #[serde(default)]
    entries: Vec<EntryWire>,
    #[serde(default)]
    gset: Option<Value>,
}

fn entry_args(d: &Domain, degree: usize, e: &EntryWire) -> Result<Vec<usize>> {
    if e.args.len() != degree {
        return Err(Error::Parse(format!("{} arguments in an entry of degree {degree}", e.args.len())));
    }
    e.args
        .iter()
        .map(|a| {
            let x = parse_element(d.ambient(), a)?;
            d.index_of(&x)
                .ok_or_else(|| Error::NotSubgroup(format!("{x:?} is outside the cochain's domain")))
        })
        .collect()
}

fn check_normalized_entry(t: &[usize], exp: u32, args: &[Vec<i64>]) -> Result<()> {
    if exp != 0 && t.contains(&0) {
        return Err(Error::NotNormalized(format!("{args:?}")));
    }
    Ok(())
}

fn duplicate(args: &[Vec<i64>]) -> Error {
    Error::Parse(format!("duplicate entry for {args:?}"))
}

pub fn cochain_to_json(c: &Cochain) -> Value {
    let entries: Vec<Value> = c
        .nonzero_entries()
        .into_iter()
        .map(|(args, exp)| json!({ "args": args, "exp": exp }))
        .collect();
    let mut v = json!({
        "group": group_to_json(c.group()),
        "degree": c.degree(),
        "modulus": c.modulus(),
        "entries": entries,
    });
    if !c.domain().is_full() {
        v["subgroup"] = subgroup_to_json(c.domain().subgroup());
    }
    v
}

pub fn cochain_from_json(v: &Value) -> Result<Cochain> {
    let w: CochainWire = from_value("cochain", v)?;
    if w.gset.is_some() {
        return Err(Error::Parse("expected a cochain without G-set coefficients".into()));
    }
    let domain = match &w.subgroup {
        None => Domain::full(&w.group),
        Some(h) => Domain::of_subgroup(&subgroup_from_json(&w.group, h)?),
    };
    let mut c = Cochain::zero(&domain, w.degree, w.modulus)?;
    let mut seen = vec![false; c.entries().len()];
    for e in &w.entries {
        if e.point.is_some() {
            return Err(Error::Parse("\"point\" in an entry of a cochain without G-set".into()));
        }
        let t = entry_args(&domain, w.degree, e)?;
        let exp = reduce_exp(e.exp, w.modulus);
        check_normalized_entry(&t, exp, &e.args)?;
        let i = domain.tuple_index(&t);
        if std::mem::replace(&mut seen[i], true) {
            return Err(duplicate(&e.args));
        }
        if exp != 0 {
            c.set(&t, exp as i64)?;
        }
    }
    Ok(c)
}

pub fn gset_cochain_to_json(c: &GSetCochain) -> Value {
    let d = c.domain();
    let pts = c.gset().len();
    let mut entries = Vec::new();
    for (i, &e) in c.entries().iter().enumerate() {
        if e != 0 {
            let t = d.tuple_at(i / pts, c.degree());
            let args: Vec<&GroupElement> = t.iter().map(|&x| d.member(x)).collect();
            entries.push(json!({ "args": args, "point": i % pts, "exp": e }));
        }
    }
    json!({
        "group": group_to_json(c.group()),
        "gset": gset_to_json(c.gset()),
        "degree": c.degree(),
        "modulus": c.modulus(),
        "entries": entries,
    })
}

pub fn gset_cochain_from_json(v: &Value) -> Result<GSetCochain> {
    let w: CochainWire = from_value("cochain", v)?;
    if w.subgroup.is_some() {
        return Err(Error::Parse("G-set cochains live on the whole group".into()));
    }
    let gset = gset_from_json(&w.group, w.gset.as_ref().ok_or_else(|| Error::Parse("missing key \"gset\"".into()))?)?;
    let mut c = GSetCochain::zero(&gset, w.degree, w.modulus)?;
    let domain = c.domain().clone();
    let mut seen = vec![false; c.entries().len()];
    for e in &w.entries {
        let x = e.point.ok_or_else(|| Error::Parse("entry without \"point\"".into()))?;
        if x >= gset.len() {
            return Err(Error::InvalidGSet(format!("point {x} out of range")));
        }
        let t = entry_args(&domain, w.degree, e)?;
        let exp = reduce_exp(e.exp, w.modulus);
        check_normalized_entry(&t, exp, &e.args)?;
        let i = domain.tuple_index(&t) * gset.len() + x;
        if std::mem::replace(&mut seen[i], true) {
            return Err(duplicate(&e.args));
        }
        if exp != 0 {
            c.set(&t, x, exp as i64)?;
        }
    }
    Ok(c)
}

/// Checks a cochain read from a nested document against its container.
fn expect_shape(c: &Cochain, g: &FinAbGroup, modulus: u32, degree: usize, what: &str) -> Result<()> {
    if c.group() != g || !c.domain().is_full() {
        return Err(Error::Parse(format!("{what} is over a different group")));
    }
    if c.modulus() != modulus {
        return Err(Error::ModulusMismatch {
            left: modulus,
            right: c.modulus(),
        });
    }
    if c.degree() != degree {
        return Err(Error::Parse(format!("{what} must have degree {degree}, not {}", c.degree())));
    }
    Ok(())
}

/// Reads a cochain that may omit `group`, `modulus` and `degree`, which are
/// then taken from the enclosing document.
fn nested_cochain(v: &Value, g: &FinAbGroup, modulus: u32, degree: usize, what: &str) -> Result<Cochain> {
    let mut v = v.clone();
    if let Some(obj) = v.as_object_mut() {
        obj.entry("group").or_insert_with(|| group_to_json(g));
        obj.entry("modulus").or_insert_with(|| json!(modulus));
        obj.entry("degree").or_insert_with(|| json!(degree));
    }
    let c = cochain_from_json(&v)?;
    expect_shape(&c, g, modulus, degree, what)?;
    Ok(c)
}

pub fn category_to_json(c: &PointedCategory) -> Value {
    json!({
        "group": group_to_json(c.group()),
        "modulus": c.modulus(),
        "associator": cochain_to_json(c.associator()),
    })
}

/// A missing associator means the trivial one.
pub fn category_from_json(v: &Value) -> Result<PointedCategory> {
    let g = group_from_json(field(v, "group")?)?;
    let modulus: u32 = from_value("modulus", field(v, "modulus")?)?;
    match v.get("associator") {
        None => PointedCategory::trivial(&g, modulus),
        Some(a) => PointedCategory::new(nested_cochain(a, &g, modulus, 3, "associator")?),
    }
}

/// The associator of a category document, or a bare 3-cochain, without
/// checking the pentagon.
pub fn associator_from_json(v: &Value) -> Result<Cochain> {
    if v.get("associator").is_none() && v.get("degree").is_some() {
        let c = cochain_from_json(v)?;
        return match c.degree() {
            3 if c.domain().is_full() => Ok(c),
            d => Err(Error::Parse(format!("an associator has degree 3, not {d}"))),
        };
    }
    let g = group_from_json(field(v, "group")?)?;
    let modulus: u32 = from_value("modulus", field(v, "modulus")?)?;
    match v.get("associator") {
        None => Cochain::zero_on(&g, 3, modulus),
        Some(a) => nested_cochain(a, &g, modulus, 3, "associator"),
    }
}

/// Associator and braiding of an abelian cocycle document, unchecked.
pub fn abelian_parts_from_json(v: &Value) -> Result<(Cochain, Cochain)> {
    let alpha = associator_from_json(field(v, "category")?)?;
    let gamma = match v.get("braiding") {
        None => Cochain::zero(alpha.domain(), 2, alpha.modulus())?,
        Some(b) => nested_cochain(b, alpha.group(), alpha.modulus(), 2, "braiding")?,
    };
    Ok((alpha, gamma))
}

pub fn functor_to_json(f: &FunctorData) -> Value {
    json!({
        "hom": hom_to_json(&f.hom),
        "constraint": cochain_to_json(&f.constraint),
    })
}

/// A missing constraint means zero.
pub fn functor_from_json(source: &PointedCategory, target: &PointedCategory, v: &Value) -> Result<FunctorData> {
    let hom = hom_from_json(source.group(), target.group(), field(v, "hom")?)?;
    let constraint = match v.get("constraint") {
        None => Cochain::zero(source.domain(), 2, target.modulus())?,
        Some(c) => nested_cochain(c, source.group(), target.modulus(), 2, "functor constraint")?,
    };
    FunctorData::new(source.clone(), target.clone(), hom, constraint)
}

pub fn pivotal_to_json(t: &PivotalData) -> Value {
    let g = t.values.group();
    let values: BTreeMap<String, u32> = g
        .elements()
        .iter()
        .enumerate()
        .filter(|&(i, _)| t.values.get_index(i) != 0)
        .map(|(i, x)| (element_key(x), t.values.get_index(i)))
        .collect();
    json!({ "values": values })
}

pub fn pivotal_from_json(c: &PointedCategory, v: &Value) -> Result<PivotalData> {
    let values: BTreeMap<String, i64> = from_value("pivotal values", field(v, "values")?)?;
    let mut t = Cochain::zero(c.domain(), 1, c.modulus())?;
    for (k, e) in values {
        let x = parse_key(c.group(), &k)?;
        let i = c.group().index_of(&x);
        let exp = reduce_exp(e, c.modulus());
        check_normalized_entry(&[i], exp, &[])?;
        if exp != 0 {
            t.set(&[i], exp as i64)?;
        }
    }
    Ok(PivotalData { values: t })
}

pub fn abelian_to_json(ac: &AbelianCocycle) -> Value {
    json!({
        "category": category_to_json(ac.category()),
        "braiding": cochain_to_json(ac.braiding()),
    })
}

pub fn abelian_from_json(v: &Value) -> Result<AbelianCocycle> {
    let c = category_from_json(field(v, "category")?)?;
    let gamma = match v.get("braiding") {
        None => Cochain::zero(c.domain(), 2, c.modulus())?,
        Some(b) => nested_cochain(b, c.group(), c.modulus(), 2, "braiding")?.with_domain(c.domain())?,
    };
    AbelianCocycle::new(c, gamma)
}

pub fn form_to_json(q: &QuadraticForm) -> Value {
    let values: BTreeMap<String, u32> = q
        .group()
        .elements()
        .iter()
        .zip(q.values())
        .filter(|&(_, &e)| e != 0)
        .map(|(x, &e)| (element_key(x), e))
        .collect();
    json!({
        "group": group_to_json(q.group()),
        "modulus": q.modulus(),
        "values": values,
    })
}

/// Unlisted values are zero. The form axioms are not checked here.
pub fn form_from_json(v: &Value) -> Result<QuadraticForm> {
    let g = group_from_json(field(v, "group")?)?;
    let modulus: u32 = from_value("modulus", field(v, "modulus")?)?;
    let values: BTreeMap<String, i64> = match v.get("values") {
        None => BTreeMap::new(),
        Some(x) => from_value("form values", x)?,
    };
    let mut table = vec![0u32; g.order()];
    let mut seen = vec![false; g.order()];
    for (k, e) in values {
        let i = g.index_of(&parse_key(&g, &k)?);
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::Parse(format!("duplicate value for {k}")));
        }
        table[i] = reduce_exp(e, modulus.max(1));
    }
    QuadraticForm::new(&g, modulus, table)
}

pub fn algebra_to_json(a: &TwistedGroupAlgebra) -> Value {
    json!({
        "subgroup": subgroup_to_json(a.subgroup()),
        "cocycle": cochain_to_json(a.cocycle()),
    })
}

pub fn algebra_from_json(v: &Value) -> Result<TwistedGroupAlgebra> {
    let cocycle = cochain_from_json(field(v, "cocycle")?)?;
    let h = subgroup_from_json(cocycle.group(), field(v, "subgroup")?)?;
    let cocycle = if cocycle.domain().is_full() && !h.is_whole() {
        return Err(Error::Parse("algebra cocycle must carry the algebra's subgroup".into()));
    } else if cocycle.domain().is_full() {
        cocycle.with_domain(&Domain::of_subgroup(&h))?
    } else {
        cocycle
    };
    TwistedGroupAlgebra::new(h, cocycle)
}

fn action_key(s: &[u32], h: &[u32]) -> String {
    format!("{}|{}", element_key(s), element_key(h))
}

pub fn module_to_json(m: &ModuleData) -> Value {
    let action: BTreeMap<String, u32> = m
        .action_table()
        .into_iter()
        .filter(|&(_, e)| e != 0)
        .map(|((s, h), e)| (action_key(&s, &h), e))
        .collect();
    json!({ "support": m.support(), "action": action })
}

pub fn module_from_json(algebra: &TwistedGroupAlgebra, v: &Value) -> Result<ModuleData> {
    let g = algebra.subgroup().parent().clone();
    let support: Vec<Vec<i64>> = from_value("support", field(v, "support")?)?;
    let support = support.iter().map(|x| parse_element(&g, x)).collect::<Result<Vec<_>>>()?;
    let raw: BTreeMap<String, i64> = match v.get("action") {
        None => BTreeMap::new(),
        Some(x) => from_value("module action", x)?,
    };
    let mut action = BTreeMap::new();
    for (k, e) in raw {
        let (s, h) = k
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("action key {k:?} is not \"[s]|[h]\"")))?;
        let key = (parse_key(&g, s)?, parse_key(&g, h)?);
        if action.insert(key, reduce_exp(e, algebra.modulus())).is_some() {
            return Err(Error::Parse(format!("duplicate action entry {k}")));
        }
    }
    ModuleData::new(algebra.clone(), support, &action)
}

pub fn module_category_to_json(m: &ModuleCategoryData) -> Value {
    json!({
        "category": category_to_json(m.category()),
        "constraint": gset_cochain_to_json(m.constraint()),
    })
}

pub fn module_category_from_json(v: &Value) -> Result<ModuleCategoryData> {
    let c = category_from_json(field(v, "category")?)?;
    let xi = gset_cochain_from_json(field(v, "constraint")?)?;
    ModuleCategoryData::new(c, xi)
}

pub fn report_to_json(r: &DimensionReport) -> Value {
    serde_json::to_value(r).expect("serializable")
}

pub fn witt_witness_to_json(w: &WittClassWitness) -> Value {
    let trace: Vec<Value> = w
        .trace
        .iter()
        .map(|s| json!({ "H": subgroup_to_json(&s.subgroup), "quotient": group_to_json(&s.quotient) }))
        .collect();
    json!({ "kernel": form_to_json(&w.kernel), "trace": trace })
}
