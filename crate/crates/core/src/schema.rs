//! JSON documents: `hopf-sc/1`, `lie-sc/1`, `turaev/1` and `group/1`.
//!
//! Structure maps are written as sparse lists `[i, j, k, coeff]`:
//!
//! * `mult`, `bracket`, graded multiplications: `e_i · e_j` has `coeff` on `e_k`;
//! * `comult`, `cobracket`, graded comultiplications: `Δ(e_i)` has `coeff` on `e_j ⊗ e_k`.
//!
//! Rational coefficients are strings (`"-1/2"`, `"3"`), prime-field coefficients are
//! integer residues. Output is canonical: sorted keys, sorted triples, reduced
//! coefficients and zero entries omitted, so loading and saving a canonical file is
//! byte-identical.

use serde_json::{json, Map, Value};

use crate::error::HopfError;
use crate::group::FiniteGroup;
use crate::hopf::{AlgebraSC, BialgebraSC, Carrier, CoalgebraSC, HopfAlgebraSC};
use crate::lie::{LieAlgebraSC, LieCoalgebraSC};
use crate::linalg::{FieldSpec, Matrix, Parity, ParityVector, Scalar};
use crate::turaev::{HopfGroupAlgebra, HopfGroupCoalgebra};

pub const HOPF_SCHEMA: &str = "hopf-sc/1";
pub const LIE_SCHEMA: &str = "lie-sc/1";
pub const TURAEV_SCHEMA: &str = "turaev/1";
pub const GROUP_SCHEMA: &str = "group/1";

/// Any structure map may be absent; which ones are present decides the kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfDoc {
    pub carrier: Carrier,
    pub mult: Option<Matrix>,
    pub unit: Option<Matrix>,
    pub comult: Option<Matrix>,
    pub counit: Option<Matrix>,
    pub antipode: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieDoc {
    pub carrier: Carrier,
    pub bracket: Option<Matrix>,
    pub cobracket: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Hopf(HopfDoc),
    Lie(LieDoc),
    GroupAlgebra(HopfGroupAlgebra),
    GroupCoalgebra(HopfGroupCoalgebra),
    Group(FiniteGroup),
}

impl Document {
    /// `algebra`, `coalgebra`, `bialgebra`, `hopf`, `lie`, `liecoalg`, `group`,
    /// `turaev-alg` or `turaev-coalg`.
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Hopf(d) => d.kind(),
            Document::Lie(d) => {
                if d.bracket.is_some() {
                    "lie"
                } else {
                    "liecoalg"
                }
            }
            Document::GroupAlgebra(_) => "turaev-alg",
            Document::GroupCoalgebra(_) => "turaev-coalg",
            Document::Group(_) => "group",
        }
    }
}

impl From<&HopfAlgebraSC> for HopfDoc {
    fn from(h: &HopfAlgebraSC) -> Self {
        HopfDoc {
            carrier: h.carrier.clone(),
            mult: Some(h.mult.clone()),
            unit: Some(h.unit.clone()),
            comult: Some(h.comult.clone()),
            counit: Some(h.counit.clone()),
            antipode: Some(h.antipode.clone()),
        }
    }
}

impl From<&BialgebraSC> for HopfDoc {
    fn from(b: &BialgebraSC) -> Self {
        HopfDoc {
            carrier: b.carrier.clone(),
            mult: Some(b.mult.clone()),
            unit: Some(b.unit.clone()),
            comult: Some(b.comult.clone()),
            counit: Some(b.counit.clone()),
            antipode: None,
        }
    }
}

impl From<&AlgebraSC> for HopfDoc {
    fn from(a: &AlgebraSC) -> Self {
        HopfDoc {
            carrier: a.carrier.clone(),
            mult: Some(a.mult.clone()),
            unit: Some(a.unit.clone()),
            comult: None,
            counit: None,
            antipode: None,
        }
    }
}

impl From<&CoalgebraSC> for HopfDoc {
    fn from(c: &CoalgebraSC) -> Self {
        HopfDoc {
            carrier: c.carrier.clone(),
            mult: None,
            unit: None,
            comult: Some(c.comult.clone()),
            counit: Some(c.counit.clone()),
            antipode: None,
        }
    }
}

fn missing(what: &str, kind: &str) -> HopfError {
    HopfError::Parse(format!("`{what}` is required for a {kind}"))
}

impl HopfDoc {
    pub fn kind(&self) -> &'static str {
        let alg = self.mult.is_some() && self.unit.is_some();
        let coalg = self.comult.is_some() && self.counit.is_some();
        match (alg, coalg, self.antipode.is_some()) {
            (true, true, true) => "hopf",
            (true, true, false) => "bialgebra",
            (true, false, _) => "algebra",
            _ => "coalgebra",
        }
    }

    fn take(&self, m: &Option<Matrix>, what: &str, kind: &str) -> Result<Matrix, HopfError> {
        m.clone().ok_or_else(|| missing(what, kind))
    }

    pub fn to_algebra(&self) -> Result<AlgebraSC, HopfError> {
        AlgebraSC::new(
            self.carrier.clone(),
            self.take(&self.mult, "mult", "algebra")?,
            self.take(&self.unit, "unit", "algebra")?,
        )
    }

    pub fn to_coalgebra(&self) -> Result<CoalgebraSC, HopfError> {
        CoalgebraSC::new(
            self.carrier.clone(),
            self.take(&self.comult, "comult", "coalgebra")?,
            self.take(&self.counit, "counit", "coalgebra")?,
        )
    }

    pub fn to_bialgebra(&self) -> Result<BialgebraSC, HopfError> {
        let a = self.to_algebra()?;
        let c = self.to_coalgebra()?;
        BialgebraSC::new(a.carrier, a.mult, a.unit, c.comult, c.counit)
    }

    pub fn to_hopf(&self) -> Result<HopfAlgebraSC, HopfError> {
        let s = self.take(&self.antipode, "antipode", "Hopf algebra")?;
        self.to_bialgebra()?.with_antipode(s)
    }

    /// Transposes whatever maps are present (the dual of an algebra is a coalgebra).
    pub fn dual(&self) -> HopfDoc {
        let t = |m: &Option<Matrix>| m.as_ref().map(Matrix::transpose);
        HopfDoc {
            carrier: self.carrier.dual(),
            mult: t(&self.comult),
            unit: t(&self.counit),
            comult: t(&self.mult),
            counit: t(&self.unit),
            antipode: t(&self.antipode),
        }
    }
}

// ---------------------------------------------------------------------------
// reading

fn perr(msg: impl Into<String>) -> HopfError {
    HopfError::Parse(msg.into())
}

fn obj<'a>(v: &'a Value, ctx: &str) -> Result<&'a Map<String, Value>, HopfError> {
    v.as_object().ok_or_else(|| perr(format!("{ctx} must be an object")))
}

fn get<'a>(o: &'a Map<String, Value>, key: &str) -> Result<&'a Value, HopfError> {
    o.get(key).ok_or_else(|| perr(format!("missing `{key}`")))
}

fn as_usize(v: &Value, ctx: &str) -> Result<usize, HopfError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| perr(format!("{ctx} must be a nonnegative integer")))
}

fn as_array<'a>(v: &'a Value, ctx: &str) -> Result<&'a Vec<Value>, HopfError> {
    v.as_array().ok_or_else(|| perr(format!("{ctx} must be an array")))
}

fn parse_field(v: &Value) -> Result<FieldSpec, HopfError> {
    let o = obj(v, "field")?;
    match get(o, "kind")?.as_str() {
        Some("Q") => Ok(FieldSpec::Rationals),
        Some("Fp") => FieldSpec::prime(
            get(o, "p")?
                .as_u64()
                .ok_or_else(|| perr("field.p must be an integer"))?,
        ),
        _ => Err(perr("field.kind must be \"Q\" or \"Fp\"")),
    }
}

fn parse_scalar(field: FieldSpec, v: &Value) -> Result<Scalar, HopfError> {
    match v {
        Value::String(s) => field.parse_scalar(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.from_i64(i)),
            None => field.parse_scalar(&n.to_string()),
        },
        _ => Err(perr(format!("coefficient {v} is neither a string nor an integer"))),
    }
}

fn parse_vector(field: FieldSpec, v: &Value, len: usize, ctx: &str) -> Result<Vec<Scalar>, HopfError> {
    let items = as_array(v, ctx)?;
    if items.len() != len {
        return Err(perr(format!("{ctx} has {} entries, expected {len}", items.len())));
    }
    items.iter().map(|x| parse_scalar(field, x)).collect()
}

fn parse_matrix(field: FieldSpec, v: &Value, ctx: &str) -> Result<Matrix, HopfError> {
    let o = obj(v, ctx)?;
    let rows = as_usize(get(o, "rows")?, "rows")?;
    let cols = as_usize(get(o, "cols")?, "cols")?;
    let entries = parse_vector(field, get(o, "entries")?, rows * cols, ctx)?;
    Matrix::from_entries(field, rows, cols, entries)
}

/// Which way a triple list is laid out.
#[derive(Clone, Copy)]
enum TripleKind {
    /// `[i, j, k, c]`: `(i, j) ↦ k`, from `a⊗b` to `out`.
    Product { a: usize, b: usize, out: usize },
    /// `[i, j, k, c]`: `i ↦ (j, k)`, from `src` to `a⊗b`.
    Coproduct { src: usize, a: usize, b: usize },
}

fn parse_triples(field: FieldSpec, v: &Value, kind: TripleKind, ctx: &str) -> Result<Matrix, HopfError> {
    let (rows, cols, bounds) = match kind {
        TripleKind::Product { a, b, out } => (out, a * b, [a, b, out]),
        TripleKind::Coproduct { src, a, b } => (a * b, src, [src, a, b]),
    };
    let mut m = Matrix::zeros(field, rows, cols);
    let mut seen = std::collections::BTreeSet::new();
    for t in as_array(v, ctx)? {
        let t = as_array(t, ctx)?;
        if t.len() != 4 {
            return Err(perr(format!("{ctx}: entries are [i, j, k, coeff]")));
        }
        let mut idx = [0usize; 3];
        for (slot, (x, bound)) in idx.iter_mut().zip(t.iter().zip(bounds)) {
            *slot = as_usize(x, ctx)?;
            if *slot >= bound {
                return Err(perr(format!("{ctx}: index {slot} out of range {bound}")));
            }
        }
        if !seen.insert(idx) {
            return Err(perr(format!("{ctx}: duplicate entry {idx:?}")));
        }
        let c = parse_scalar(field, &t[3])?;
        let [i, j, k] = idx;
        match kind {
            TripleKind::Product { b, .. } => m.set(k, i * b + j, c),
            TripleKind::Coproduct { b, .. } => m.set(j * b + k, i, c),
        }
    }
    Ok(m)
}

fn parse_parity(v: Option<&Value>, dim: usize) -> Result<Option<ParityVector>, HopfError> {
    let Some(v) = v else { return Ok(None) };
    let items = as_array(v, "parity")?;
    let parities = items
        .iter()
        .map(|p| match p.as_str() {
            Some("even") => Ok(Parity::Even),
            Some("odd") => Ok(Parity::Odd),
            _ => Err(perr("parity entries are \"even\" or \"odd\"")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if parities.len() != dim {
        return Err(perr(format!(
            "parity has {} entries for dimension {dim}",
            parities.len()
        )));
    }
    Ok(Some(ParityVector(parities)))
}

fn parse_carrier(field: FieldSpec, o: &Map<String, Value>) -> Result<Carrier, HopfError> {
    let dim = as_usize(get(o, "dim")?, "dim")?;
    let names = match o.get("basis_names") {
        None => (0..dim).map(|i| format!("e{i}")).collect(),
        Some(v) => as_array(v, "basis_names")?
            .iter()
            .map(|n| {
                n.as_str()
                    .map(String::from)
                    .ok_or_else(|| perr("basis names must be strings"))
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    if names.len() != dim {
        return Err(perr(format!("{} basis names for dimension {dim}", names.len())));
    }
    Carrier::new(field, names, parse_parity(o.get("parity"), dim)?)
}

fn parse_hopf_body(field: FieldSpec, o: &Map<String, Value>) -> Result<HopfDoc, HopfError> {
    let carrier = parse_carrier(field, o)?;
    let n = carrier.dim;
    let opt = |key: &str| o.get(key).filter(|v| !v.is_null());
    let mult = opt("mult")
        .map(|v| parse_triples(field, v, TripleKind::Product { a: n, b: n, out: n }, "mult"))
        .transpose()?;
    let comult = opt("comult")
        .map(|v| parse_triples(field, v, TripleKind::Coproduct { src: n, a: n, b: n }, "comult"))
        .transpose()?;
    let unit = opt("unit")
        .map(|v| Matrix::column(field, &parse_vector(field, v, n, "unit")?))
        .transpose()?;
    let counit = opt("counit")
        .map(|v| Matrix::row_vector(field, &parse_vector(field, v, n, "counit")?))
        .transpose()?;
    let antipode = opt("antipode")
        .map(|v| parse_matrix(field, v, "antipode"))
        .transpose()?;
    if let Some(s) = &antipode {
        if s.shape() != (n, n) {
            return Err(HopfError::Shape(format!(
                "antipode is {}x{}, expected {n}x{n}",
                s.rows(),
                s.cols()
            )));
        }
    }
    Ok(HopfDoc {
        carrier,
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
}

fn parse_group(v: &Value) -> Result<FiniteGroup, HopfError> {
    let o = obj(v, "group")?;
    if let Some(kind) = o.get("kind") {
        if kind.as_str() != Some("finite") {
            return Err(HopfError::Unsupported(format!("group kind {kind}")));
        }
    }
    let order = as_usize(get(o, "order")?, "order")?;
    let table = as_array(get(o, "table")?, "table")?
        .iter()
        .map(|row| {
            as_array(row, "table row")?
                .iter()
                .map(|x| as_usize(x, "table entry"))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if table.len() != order {
        return Err(perr(format!("table has {} rows for order {order}", table.len())));
    }
    let identity = as_usize(get(o, "identity")?, "identity")?;
    let names = match o.get("names") {
        None => (0..order).map(|i| i.to_string()).collect(),
        Some(v) => as_array(v, "names")?
            .iter()
            .map(|n| {
                n.as_str()
                    .map(String::from)
                    .ok_or_else(|| perr("names must be strings"))
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    FiniteGroup::from_table_unchecked(table, identity, names)
}

fn pair_key(g: usize, h: usize) -> String {
    format!("{g},{h}")
}

fn parse_turaev(field: FieldSpec, o: &Map<String, Value>) -> Result<Document, HopfError> {
    let group = parse_group(get(o, "group")?)?;
    crate::group::check_group(&group).into_result()?;
    let n = group.order;
    let comps = as_array(get(o, "components")?, "components")?;
    if comps.len() != n {
        return Err(perr(format!("{} components for a group of order {n}", comps.len())));
    }
    let bodies = comps
        .iter()
        .map(|c| parse_hopf_body(field, obj(c, "component")?))
        .collect::<Result<Vec<_>, _>>()?;
    let d: Vec<usize> = bodies.iter().map(|b| b.carrier.dim).collect();
    let graded = |key: &str, product: bool| -> Result<Vec<Matrix>, HopfError> {
        let map = obj(get(o, key)?, key)?;
        for k in map.keys() {
            let ok = k
                .split_once(',')
                .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                .is_some_and(|(a, b)| a < n && b < n);
            if !ok {
                return Err(perr(format!("{key}: bad key `{k}` (expected \"g,h\" with indices)")));
            }
        }
        let mut out = Vec::with_capacity(n * n);
        for g in 0..n {
            for h in 0..n {
                let gh = group.mul(g, h);
                let kind = if product {
                    TripleKind::Product {
                        a: d[g],
                        b: d[h],
                        out: d[gh],
                    }
                } else {
                    TripleKind::Coproduct {
                        src: d[gh],
                        a: d[g],
                        b: d[h],
                    }
                };
                let ctx = format!("{key}[{}]", pair_key(g, h));
                out.push(match map.get(&pair_key(g, h)) {
                    Some(v) => parse_triples(field, v, kind, &ctx)?,
                    None => parse_triples(field, &json!([]), kind, &ctx)?,
                });
            }
        }
        Ok(out)
    };
    let antipodes = {
        let map = obj(get(o, "antipodes")?, "antipodes")?;
        (0..n)
            .map(|g| parse_matrix(field, get(map, &g.to_string())?, &format!("antipodes[{g}]")))
            .collect::<Result<Vec<_>, _>>()?
    };
    let e = group.identity;
    if o.contains_key("graded_mult") {
        let components = bodies
            .iter()
            .map(HopfDoc::to_coalgebra)
            .collect::<Result<Vec<_>, _>>()?;
        let unit = Matrix::column(field, &parse_vector(field, get(o, "unit")?, d[e], "unit")?)?;
        let mult = graded("graded_mult", true)?;
        Ok(Document::GroupAlgebra(HopfGroupAlgebra::new(
            group, components, mult, unit, antipodes,
        )?))
    } else if o.contains_key("graded_comult") {
        let components = bodies.iter().map(HopfDoc::to_algebra).collect::<Result<Vec<_>, _>>()?;
        let counit = Matrix::row_vector(field, &parse_vector(field, get(o, "counit")?, d[e], "counit")?)?;
        let comult = graded("graded_comult", false)?;
        Ok(Document::GroupCoalgebra(HopfGroupCoalgebra::new(
            group, components, comult, counit, antipodes,
        )?))
    } else {
        Err(perr("turaev/1 needs `graded_mult` or `graded_comult`"))
    }
}

/// Parses any supported document, dispatching on its `schema` field.
pub fn parse_document(text: &str) -> Result<Document, HopfError> {
    let v: Value = serde_json::from_str(text).map_err(|e| perr(e.to_string()))?;
    let o = obj(&v, "document")?;
    let schema = get(o, "schema")?
        .as_str()
        .ok_or_else(|| perr("schema must be a string"))?;
    if schema == GROUP_SCHEMA {
        return Ok(Document::Group(parse_group(get(o, "group")?)?));
    }
    let field = parse_field(get(o, "field")?)?;
    match schema {
        HOPF_SCHEMA => Ok(Document::Hopf(parse_hopf_body(field, o)?)),
        LIE_SCHEMA => {
            let carrier = parse_carrier(field, o)?;
            let n = carrier.dim;
            let bracket = o
                .get("bracket")
                .map(|v| parse_triples(field, v, TripleKind::Product { a: n, b: n, out: n }, "bracket"))
                .transpose()?;
            let cobracket = o
                .get("cobracket")
                .map(|v| parse_triples(field, v, TripleKind::Coproduct { src: n, a: n, b: n }, "cobracket"))
                .transpose()?;
            if bracket.is_some() == cobracket.is_some() {
                return Err(perr("lie-sc/1 needs exactly one of `bracket` and `cobracket`"));
            }
            Ok(Document::Lie(LieDoc {
                carrier,
                bracket,
                cobracket,
            }))
        }
        TURAEV_SCHEMA => parse_turaev(field, o),
        other => Err(perr(format!("unknown schema `{other}`"))),
    }
}

// ---------------------------------------------------------------------------
// writing

fn scalar_value(s: &Scalar) -> Value {
    serde_json::to_value(s).expect("scalars serialize")
}

fn field_value(f: FieldSpec) -> Value {
    serde_json::to_value(f).expect("fields serialize")
}

fn vector_value(m: &Matrix) -> Value {
    Value::Array(m.entries().iter().map(scalar_value).collect())
}

fn matrix_value(m: &Matrix) -> Value {
    serde_json::to_value(m).expect("matrices serialize")
}

fn triples_value(m: &Matrix, kind: TripleKind) -> Value {
    let mut out = Vec::new();
    match kind {
        TripleKind::Product { a, b, out: o } => {
            for i in 0..a {
                for j in 0..b {
                    for k in 0..o {
                        let c = m.get(k, i * b + j);
                        if !c.is_zero() {
                            out.push(json!([i, j, k, scalar_value(c)]));
                        }
                    }
                }
            }
        }
        TripleKind::Coproduct { src, a, b } => {
            for i in 0..src {
                for j in 0..a {
                    for k in 0..b {
                        let c = m.get(j * b + k, i);
                        if !c.is_zero() {
                            out.push(json!([i, j, k, scalar_value(c)]));
                        }
                    }
                }
            }
        }
    }
    Value::Array(out)
}

fn carrier_fields(c: &Carrier, o: &mut Map<String, Value>) {
    o.insert("dim".into(), json!(c.dim));
    o.insert("basis_names".into(), json!(c.basis_names));
    if c.is_super() {
        o.insert(
            "parity".into(),
            serde_json::to_value(&c.parity).expect("parity serializes"),
        );
    }
}

fn hopf_body(d: &HopfDoc) -> Map<String, Value> {
    let n = d.carrier.dim;
    let mut o = Map::new();
    carrier_fields(&d.carrier, &mut o);
    if let Some(m) = &d.mult {
        o.insert(
            "mult".into(),
            triples_value(m, TripleKind::Product { a: n, b: n, out: n }),
        );
    }
    if let Some(u) = &d.unit {
        o.insert("unit".into(), vector_value(u));
    }
    if let Some(c) = &d.comult {
        o.insert(
            "comult".into(),
            triples_value(c, TripleKind::Coproduct { src: n, a: n, b: n }),
        );
    }
    if let Some(e) = &d.counit {
        o.insert("counit".into(), vector_value(e));
    }
    if let Some(s) = &d.antipode {
        o.insert("antipode".into(), matrix_value(s));
    }
    o
}

fn group_value(g: &FiniteGroup) -> Value {
    json!({
        "kind": "finite",
        "order": g.order,
        "identity": g.identity,
        "table": g.table,
        "names": g.element_names,
    })
}

fn graded_value(group: &FiniteGroup, maps: &[Matrix], dims: &[usize], product: bool) -> Value {
    let n = group.order;
    let mut o = Map::new();
    for g in 0..n {
        for h in 0..n {
            let gh = group.mul(g, h);
            let kind = if product {
                TripleKind::Product {
                    a: dims[g],
                    b: dims[h],
                    out: dims[gh],
                }
            } else {
                TripleKind::Coproduct {
                    src: dims[gh],
                    a: dims[g],
                    b: dims[h],
                }
            };
            let t = triples_value(&maps[g * n + h], kind);
            if t.as_array().is_some_and(|a| !a.is_empty()) {
                o.insert(pair_key(g, h), t);
            }
        }
    }
    Value::Object(o)
}

fn antipodes_value(antipodes: &[Matrix]) -> Value {
    Value::Object(
        antipodes
            .iter()
            .enumerate()
            .map(|(g, s)| (g.to_string(), matrix_value(s)))
            .collect(),
    )
}

/// The canonical JSON value of a document.
pub fn document_value(doc: &Document) -> Value {
    let mut o = Map::new();
    match doc {
        Document::Hopf(d) => {
            o = hopf_body(d);
            o.insert("schema".into(), json!(HOPF_SCHEMA));
            o.insert("field".into(), field_value(d.carrier.field));
        }
        Document::Lie(d) => {
            let n = d.carrier.dim;
            carrier_fields(&d.carrier, &mut o);
            o.insert("schema".into(), json!(LIE_SCHEMA));
            o.insert("field".into(), field_value(d.carrier.field));
            if let Some(b) = &d.bracket {
                o.insert(
                    "bracket".into(),
                    triples_value(b, TripleKind::Product { a: n, b: n, out: n }),
                );
            }
            if let Some(c) = &d.cobracket {
                o.insert(
                    "cobracket".into(),
                    triples_value(c, TripleKind::Coproduct { src: n, a: n, b: n }),
                );
            }
        }
        Document::GroupAlgebra(h) => {
            o.insert("schema".into(), json!(TURAEV_SCHEMA));
            o.insert("field".into(), field_value(h.field()));
            o.insert("group".into(), group_value(&h.group));
            let comps = h
                .components
                .iter()
                .map(|c| Value::Object(hopf_body(&HopfDoc::from(c))))
                .collect();
            o.insert("components".into(), Value::Array(comps));
            o.insert(
                "graded_mult".into(),
                graded_value(&h.group, &h.graded_mult, &h.dims(), true),
            );
            o.insert("unit".into(), vector_value(&h.unit));
            o.insert("antipodes".into(), antipodes_value(&h.antipodes));
        }
        Document::GroupCoalgebra(h) => {
            o.insert("schema".into(), json!(TURAEV_SCHEMA));
            o.insert("field".into(), field_value(h.field()));
            o.insert("group".into(), group_value(&h.group));
            let comps = h
                .components
                .iter()
                .map(|c| Value::Object(hopf_body(&HopfDoc::from(c))))
                .collect();
            o.insert("components".into(), Value::Array(comps));
            o.insert(
                "graded_comult".into(),
                graded_value(&h.group, &h.graded_comult, &h.dims(), false),
            );
            o.insert("counit".into(), vector_value(&h.counit));
            o.insert("antipodes".into(), antipodes_value(&h.antipodes));
        }
        Document::Group(g) => {
            o.insert("schema".into(), json!(GROUP_SCHEMA));
            o.insert("group".into(), group_value(g));
        }
    }
    Value::Object(o)
}

/// Pretty-printed canonical JSON with a trailing newline.
pub fn to_canonical_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

pub fn write_document(doc: &Document) -> String {
    to_canonical_string(&document_value(doc))
}

pub fn hopf_document(h: &HopfAlgebraSC) -> Document {
    Document::Hopf(HopfDoc::from(h))
}

pub fn lie_document(l: &LieAlgebraSC) -> Document {
    Document::Lie(LieDoc {
        carrier: l.carrier.clone(),
        bracket: Some(l.bracket.clone()),
        cobracket: None,
    })
}

pub fn lie_co_document(c: &LieCoalgebraSC) -> Document {
    Document::Lie(LieDoc {
        carrier: c.carrier.clone(),
        bracket: None,
        cobracket: Some(c.cobracket.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn round_trip(doc: &Document) {
        let text = write_document(doc);
        let back = parse_document(&text).unwrap();
        assert_eq!(&back, doc);
        assert_eq!(write_document(&back), text);
    }

    #[test]
    fn hopf_round_trips() {
        round_trip(&hopf_document(&zoo::sweedler4(FieldSpec::Rationals).unwrap()));
        round_trip(&hopf_document(&zoo::truncated_poly(5).unwrap()));
        round_trip(&hopf_document(&zoo::exterior_super(2)));
        round_trip(&Document::Hopf(HopfDoc::from(&zoo::matrix_algebra(
            2,
            FieldSpec::Rationals,
        ))));
    }

    #[test]
    fn turaev_round_trips() {
        let h = zoo::diagonal_group_algebra(&FiniteGroup::symmetric(3), FieldSpec::Rationals);
        round_trip(&Document::GroupAlgebra(h.clone()));
        round_trip(&Document::GroupCoalgebra(crate::turaev::dagger(&h).unwrap()));
        round_trip(&Document::Group(FiniteGroup::cyclic(4)));
    }

    #[test]
    fn rational_coefficients_are_strings() {
        let f = FieldSpec::Rationals;
        let mut a = zoo::matrix_algebra(1, f);
        a.mult = a.mult.scale(&f.from_fraction(-1, 2).unwrap());
        let v = document_value(&Document::Hopf(HopfDoc::from(&a)));
        assert_eq!(v["mult"], json!([[0, 0, 0, "-1/2"]]));
        let v = document_value(&hopf_document(&zoo::truncated_poly(3).unwrap()));
        assert_eq!(v["field"], json!({"kind": "Fp", "p": 3}));
        assert_eq!(v["antipode"]["entries"][4], json!(2));
    }

    #[test]
    fn duplicates_and_bad_indices_are_rejected() {
        let base =
            r#"{"schema":"hopf-sc/1","field":{"kind":"Q"},"dim":1,"basis_names":["1"],"unit":["1"],"mult":MULT}"#;
        assert!(parse_document(&base.replace("MULT", r#"[[0,0,0,"1"],[0,0,0,"1"]]"#)).is_err());
        assert!(parse_document(&base.replace("MULT", r#"[[0,1,0,"1"]]"#)).is_err());
        let ok = parse_document(&base.replace("MULT", r#"[[0,0,0,"2/4"]]"#)).unwrap();
        assert_eq!(ok.kind(), "algebra");
    }

    #[test]
    fn truncated_input_is_a_parse_error() {
        let text = write_document(&hopf_document(&zoo::trivial(FieldSpec::Rationals)));
        assert!(matches!(
            parse_document(&text[..text.len() / 2]),
            Err(HopfError::Parse(_))
        ));
    }

    #[test]
    fn unknown_schema() {
        assert!(parse_document(r#"{"schema":"nope/9","field":{"kind":"Q"}}"#).is_err());
    }
}
