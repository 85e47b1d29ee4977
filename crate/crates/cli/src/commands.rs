use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use hopflab::primitives::combination_name;
use hopflab::schema::{self, Document, HopfDoc, LieDoc};
use hopflab::{
    check_algebra, check_bialgebra, check_coalgebra, check_group, check_hopf, check_hopf_group_algebra,
    check_hopf_group_coalgebra, check_lie, check_lie_coalgebra, dagger_of_coalgebra, dual_lie, g_indecomposables,
    group_michaelis_verify, lie::dual_lie_coalgebra, mich_tur1_verify, michaelis_verify, zoo, FieldSpec, FiniteGroup,
    HopfAlgebraSC, HopfError, HopfGroupCoalgebra, LieAlgebraSC, LieCoalgebraSC, Subspace, VerificationReport,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{Kind, Output, ZooArgs};

/// Exit 1: the object or certificate fails mathematically. Exit 2: bad input.
enum CliError {
    Failed(String),
    Input(String),
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::InvalidInput(_) | HopfError::Invariant(_) => CliError::Failed(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Input(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Failed(m) | CliError::Input(m) => m,
        }
    }
}

/// What a command produced: JSON for `--json`, text otherwise.
struct Emit {
    json: Value,
    human: String,
    ok: bool,
}

fn finish(result: Result<Emit, CliError>, started: Instant, out: &Output) -> u8 {
    match result {
        Ok(emit) => {
            let text = if out.json {
                schema::to_canonical_string(&emit.json)
            } else {
                format!("{}time: {}\n", emit.human, fmt_duration(started.elapsed()))
            };
            if let Err(e) = write_out(out.output.as_deref(), &text) {
                eprintln!("error: {e}");
                return 2;
            }
            if emit.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn fmt_duration(d: Duration) -> String {
    format!("{:.3} ms", d.as_secs_f64() * 1e3)
}

fn write_out(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Documents are written verbatim regardless of `--json`.
fn emit_document(doc: &Document, out: &Output) -> u8 {
    let text = schema::write_document(doc);
    match write_out(out.output.as_deref(), &text) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn load(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(schema::parse_document(&text)?)
}

fn kind_error(expected: &str, doc: &Document) -> CliError {
    CliError::Input(format!("expected a {expected}, found a {}", doc.kind()))
}

fn expect_hopf(doc: Document) -> Result<HopfAlgebraSC, CliError> {
    match &doc {
        Document::Hopf(d) if d.kind() == "hopf" => Ok(d.to_hopf()?),
        _ => Err(kind_error("hopf", &doc)),
    }
}

fn report_emit(report: VerificationReport, kind: &str) -> Emit {
    let ok = report.passed();
    let verdict = if ok { "all axioms hold" } else { "axiom failure" };
    Emit {
        human: format!("{report}{kind}: {verdict}\n"),
        json: json!({ "kind": kind, "passed": ok, "report": report }),
        ok,
    }
}

fn hopf_doc_matches(d: &HopfDoc, kind: Kind) -> bool {
    let alg = d.mult.is_some() && d.unit.is_some();
    let coalg = d.comult.is_some() && d.counit.is_some();
    match kind {
        Kind::Algebra => alg,
        Kind::Coalgebra => coalg,
        Kind::Bialgebra => alg && coalg,
        Kind::Hopf => alg && coalg && d.antipode.is_some(),
        _ => false,
    }
}

fn detected_kind(doc: &Document) -> Kind {
    match doc.kind() {
        "algebra" => Kind::Algebra,
        "coalgebra" => Kind::Coalgebra,
        "bialgebra" => Kind::Bialgebra,
        "hopf" => Kind::Hopf,
        "lie" => Kind::Lie,
        "liecoalg" => Kind::Liecoalg,
        "group" => Kind::Group,
        "turaev-alg" => Kind::TuraevAlg,
        _ => Kind::TuraevCoalg,
    }
}

fn check_document(doc: &Document, kind: Option<Kind>) -> Result<Emit, CliError> {
    let kind = kind.unwrap_or_else(|| detected_kind(doc));
    let report = match (doc, kind) {
        (Document::Hopf(d), k) if hopf_doc_matches(d, k) => match k {
            Kind::Algebra => check_algebra(&d.to_algebra()?),
            Kind::Coalgebra => check_coalgebra(&d.to_coalgebra()?),
            Kind::Bialgebra => check_bialgebra(&d.to_bialgebra()?),
            _ => check_hopf(&d.to_hopf()?),
        },
        (Document::Lie(d), Kind::Lie) if d.bracket.is_some() => check_lie(&lie_algebra(d)?),
        (Document::Lie(d), Kind::Liecoalg) if d.cobracket.is_some() => check_lie_coalgebra(&lie_coalgebra(d)?),
        (Document::Group(g), Kind::Group) => check_group(g),
        (Document::GroupAlgebra(h), Kind::TuraevAlg) => check_hopf_group_algebra(h),
        (Document::GroupCoalgebra(h), Kind::TuraevCoalg) => check_hopf_group_coalgebra(h),
        _ => return Err(kind_error(kind.name(), doc)),
    };
    Ok(report_emit(report, kind.name()))
}

fn lie_algebra(d: &LieDoc) -> Result<LieAlgebraSC, CliError> {
    let bracket = d
        .bracket
        .clone()
        .ok_or_else(|| CliError::Input("missing `bracket`".into()))?;
    Ok(LieAlgebraSC::new(d.carrier.clone(), bracket)?)
}

fn lie_coalgebra(d: &LieDoc) -> Result<LieCoalgebraSC, CliError> {
    let cobracket = d
        .cobracket
        .clone()
        .ok_or_else(|| CliError::Input("missing `cobracket`".into()))?;
    Ok(LieCoalgebraSC::new(d.carrier.clone(), cobracket)?)
}

pub fn check(path: &Path, kind: Option<Kind>, out: &Output) -> u8 {
    let started = Instant::now();
    finish(load(path).and_then(|doc| check_document(&doc, kind)), started, out)
}

fn invalid(report: VerificationReport) -> CliError {
    CliError::Failed(format!(
        "input is not a valid {}: {}",
        report.object_kind,
        report.summary()
    ))
}

fn require(report: VerificationReport) -> Result<(), CliError> {
    if report.passed() {
        Ok(())
    } else {
        Err(invalid(report))
    }
}

fn dual_document(doc: &Document) -> Result<Document, CliError> {
    match doc {
        Document::Hopf(d) => {
            match d.kind() {
                "algebra" => require(check_algebra(&d.to_algebra()?))?,
                "coalgebra" => require(check_coalgebra(&d.to_coalgebra()?))?,
                "bialgebra" => require(check_bialgebra(&d.to_bialgebra()?))?,
                _ => require(check_hopf(&d.to_hopf()?))?,
            }
            Ok(Document::Hopf(d.dual()))
        }
        Document::Lie(d) if d.bracket.is_some() => Ok(schema::lie_co_document(&dual_lie_coalgebra(&lie_algebra(d)?)?)),
        Document::Lie(d) => Ok(schema::lie_document(&dual_lie(&lie_coalgebra(d)?)?)),
        Document::GroupAlgebra(_) | Document::GroupCoalgebra(_) => dagger_document(doc),
        Document::Group(_) => Err(kind_error("linear object", doc)),
    }
}

fn dagger_document(doc: &Document) -> Result<Document, CliError> {
    match doc {
        Document::GroupAlgebra(h) => Ok(Document::GroupCoalgebra(hopflab::dagger(h)?)),
        Document::GroupCoalgebra(h) => Ok(Document::GroupAlgebra(dagger_of_coalgebra(h)?)),
        _ => Err(kind_error("turaev-alg or turaev-coalg", doc)),
    }
}

fn transform(path: &Path, out: &Output, f: fn(&Document) -> Result<Document, CliError>) -> u8 {
    match load(path).and_then(|d| f(&d)) {
        Ok(doc) => emit_document(&doc, out),
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

pub fn dual(path: &Path, out: &Output) -> u8 {
    transform(path, out, dual_document)
}

pub fn dagger(path: &Path, out: &Output) -> u8 {
    transform(path, out, dagger_document)
}

fn basis_lines(space: &Subspace, names: &[String]) -> String {
    let mut s = String::new();
    for i in 0..space.dim() {
        let _ = writeln!(s, "  {}", combination_name(space.basis_vector(i), names));
    }
    s
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

pub fn primitives(path: &Path, out: &Output) -> u8 {
    let started = Instant::now();
    let run = || -> Result<Emit, CliError> {
        let h = expect_hopf(load(path)?)?;
        let p = hopflab::primitives(&h)?;
        let mut human = format!("dim P(H) = {}\n", p.space.dim());
        human += &basis_lines(&p.space, &h.carrier.basis_names);
        if p.space.dim() > 0 {
            human += &format!(
                "bracket: {}\n",
                if p.lie.is_abelian() { "abelian" } else { "nonabelian" }
            );
        }
        Ok(Emit {
            json: to_json(&p),
            human,
            ok: true,
        })
    };
    finish(run(), started, out)
}

pub fn indecomposables(path: &Path, out: &Output) -> u8 {
    let started = Instant::now();
    let run = || -> Result<Emit, CliError> {
        let h = expect_hopf(load(path)?)?;
        let q = hopflab::indecomposables(&h)?;
        let mut human = format!(
            "dim ker ε = {}, dim (ker ε)² = {}, dim Q(H) = {}\n",
            q.ker_eps.dim(),
            q.ker_eps_sq.dim(),
            q.dim()
        );
        for name in &q.lie_co.carrier.basis_names {
            let _ = writeln!(human, "  {name}");
        }
        Ok(Emit {
            json: to_json(&q),
            human,
            ok: true,
        })
    };
    finish(run(), started, out)
}

fn clause_lines(clauses: &[(&str, bool)]) -> String {
    let mut s = String::new();
    for (name, ok) in clauses {
        let _ = writeln!(s, "  {} {name}", if *ok { "ok  " } else { "FAIL" });
    }
    s
}

pub fn michaelis(path: &Path, out: &Output) -> u8 {
    let started = Instant::now();
    let run = || -> Result<Emit, CliError> {
        let h = expect_hopf(load(path)?)?;
        let c = michaelis_verify(&h)?;
        let mut human = format!(
            "dim P(H*) = {}, dim Q(H) = {}\n",
            c.dim_primitives_of_dual, c.dim_indecomposables
        );
        human += &clause_lines(&[
            ("α maps into P(H*)", c.image_in_primitives),
            ("α is injective", c.injective),
            ("dimensions agree", c.dims_equal),
            ("α is a Lie morphism", c.lie_morphism),
        ]);
        human += &verdict(c.passed, c.counterexample.as_deref());
        Ok(Emit {
            json: to_json(&c),
            human,
            ok: c.passed,
        })
    };
    finish(run(), started, out)
}

fn verdict(passed: bool, counterexample: Option<&str>) -> String {
    match (passed, counterexample) {
        (true, _) => "certificate verified\n".into(),
        (false, Some(c)) => format!("certificate FAILED: {c}\n"),
        (false, None) => "certificate FAILED\n".into(),
    }
}

fn resolve_element(group: &FiniteGroup, g: &str) -> Result<usize, CliError> {
    group
        .index_of(g)
        .or_else(|| g.parse::<usize>().ok().filter(|&i| i < group.order))
        .ok_or_else(|| {
            CliError::Input(format!(
                "`{g}` is not an element of the group {:?}",
                group.element_names
            ))
        })
}

pub fn gprimitives(path: &Path, g: &str, out: &Output) -> u8 {
    let started = Instant::now();
    let run = || -> Result<Emit, CliError> {
        let doc = load(path)?;
        let hc: HopfGroupCoalgebra = match doc {
            Document::GroupCoalgebra(h) => h,
            Document::GroupAlgebra(h) => hopflab::dagger(&h)?,
            other => return Err(kind_error("turaev-coalg", &other)),
        };
        let gi = resolve_element(&hc.group, g)?;
        let p = hopflab::g_primitives(&hc, gi)?;
        let names = &hc.components[gi].carrier.basis_names;
        let mut human = format!("dim P_{}(H) = {}\n", hc.group.element_names[gi], p.space.dim());
        human += &basis_lines(&p.space, names);
        human += &p.checks.to_string();
        let ok = p.checks.passed();
        Ok(Emit {
            json: to_json(&p),
            human,
            ok,
        })
    };
    finish(run(), started, out)
}

fn expect_group_algebra(doc: Document) -> Result<hopflab::HopfGroupAlgebra, CliError> {
    match doc {
        Document::GroupAlgebra(h) => Ok(h),
        other => Err(kind_error("turaev-alg", &other)),
    }
}

pub fn gindecomposables(path: &Path, out: &Output) -> u8 {
    let started = Instant::now();
    let run = || -> Result<Emit, CliError> {
        let h = expect_group_algebra(load(path)?)?;
        let gi = g_indecomposables(&h)?;
        let mut human = format!("dim Q(total) = {}\n", gi.q.dim());
        for (g, w) in gi.per_g.iter().enumerate() {
            let _ = writeln!(human, "dim Q_{} = {}", h.group.element_names[g], w.dim());
            human += &basis_lines(w, &gi.q.lie_co.carrier.basis_names);
        }
        human += &gi.derivation_check.to_string();
        let ok = gi.derivation_check.passed();
        Ok(Emit {
            json: to_json(&gi),
            human,
            ok,
        })
    };
    finish(run(), started, out)
}

pub fn group_michaelis(path: &Path, out: &Output) -> u8 {
    let started = Instant::now();
    let run = || -> Result<Emit, CliError> {
        let h = expect_group_algebra(load(path)?)?;
        let c = group_michaelis_verify(&h)?;
        let mut human = format!("dims Q_g: {:?}\ndims P_g: {:?}\n", c.dims_q, c.dims_p);
        for e in &c.entries {
            let _ = writeln!(human, "g = {}:", e.name);
            human += &clause_lines(&[
                ("α_g maps into P_g(H†)", e.image_in_primitives),
                ("α_g is injective", e.injective),
                ("dimensions agree", e.dims_equal),
                ("α_g is a Lie morphism", e.lie_morphism),
                ("β_g is well defined", e.beta_well_defined),
                ("β_g ∘ α_g = id", e.beta_alpha_identity),
                ("family equations", e.family_checks.passed()),
            ]);
        }
        human += &clause_lines(&[("π is a graded derivation", c.derivation_check.passed())]);
        human += &verdict(c.passed, c.counterexample.as_deref());
        Ok(Emit {
            json: to_json(&c),
            human,
            ok: c.passed,
        })
    };
    finish(run(), started, out)
}

pub fn michtur1(path: &Path, out: &Output) -> u8 {
    let started = Instant::now();
    let run = || -> Result<Emit, CliError> {
        let h = expect_group_algebra(load(path)?)?;
        let c = mich_tur1_verify(&h)?;
        let mut human = format!(
            "dim P(total) = {}, dim P(H_e) = {}\n",
            c.total_primitives.dim(),
            c.identity_component_primitives.dim()
        );
        human += &clause_lines(&[
            ("P(total) lies in the identity block", c.contained_in_identity_block),
            ("P(total) equals P(H_e)", c.equal),
        ]);
        human += &verdict(c.passed, None);
        Ok(Emit {
            json: to_json(&c),
            human,
            ok: c.passed,
        })
    };
    finish(run(), started, out)
}

pub fn integrals(path: &Path, out: &Output) -> u8 {
    let started = Instant::now();
    let run = || -> Result<Emit, CliError> {
        let h = expect_hopf(load(path)?)?;
        let ints = hopflab::left_integrals(&h)?;
        let dual_names = h.carrier.dual().basis_names;
        let mut human = format!("dim of left integrals = {}\n", ints.dim());
        human += &basis_lines(&ints, &dual_names);
        Ok(Emit {
            json: json!({ "dim": ints.dim(), "space": ints }),
            human,
            ok: true,
        })
    };
    finish(run(), started, out)
}

fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t
        .strip_prefix("Fp:")
        .or_else(|| t.strip_prefix("fp:"))
        .or_else(|| t.strip_prefix('F'))
        .or_else(|| t.strip_prefix('f'))
        .ok_or_else(|| CliError::Input(format!("bad field `{text}` (use Q, Fp:<p> or F<p>)")))?;
    let p = digits
        .parse::<u64>()
        .map_err(|_| CliError::Input(format!("bad field `{text}`")))?;
    Ok(FieldSpec::prime(p)?)
}

fn zoo_document(args: &ZooArgs) -> Result<Document, CliError> {
    let field = parse_field(&args.field)?;
    let group =
        || -> Result<FiniteGroup, CliError> { Ok(FiniteGroup::from_shorthand(args.group.as_deref().unwrap_or("z2"))?) };
    let name = args.name.to_ascii_lowercase().replace('_', "-");
    let doc = match name.as_str() {
        "trivial" => schema::hopf_document(&zoo::trivial(field)),
        "group-algebra" => schema::hopf_document(&zoo::group_algebra(&group()?, field)),
        "function-hopf" => schema::hopf_document(&zoo::function_hopf(&group()?, field)),
        "sweedler4" => schema::hopf_document(&zoo::sweedler4(field)?),
        "truncated-poly" => {
            let p = match (args.p, field) {
                (Some(p), _) => p,
                (None, FieldSpec::Prime(p)) => p,
                (None, FieldSpec::Rationals) => {
                    return Err(CliError::Input("truncated-poly needs --p or a prime field".into()))
                }
            };
            schema::hopf_document(&zoo::truncated_poly(p)?)
        }
        "exterior-super" => {
            let n = args.n.unwrap_or(1);
            if n > 6 {
                return Err(CliError::Input(format!("exterior-super supports n <= 6, got {n}")));
            }
            schema::hopf_document(&zoo::exterior_super(n))
        }
        "diagonal-group-algebra" => Document::GroupAlgebra(zoo::diagonal_group_algebra(&group()?, field)),
        "matrix-algebra" => Document::Hopf(HopfDoc::from(&zoo::matrix_algebra(args.n.unwrap_or(2), field))),
        other => return Err(CliError::Input(format!("unknown zoo object `{other}`"))),
    };
    Ok(doc)
}

pub fn zoo(args: &ZooArgs, out: &Output) -> u8 {
    match zoo_document(args) {
        Ok(doc) => emit_document(&doc, out),
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

pub fn verify_suite(paths: &[PathBuf], out: &Output) -> u8 {
    let started = Instant::now();
    let results: Vec<(u8, Value, String)> = paths
        .par_iter()
        .map(|p| {
            let shown = p.display().to_string();
            match load(p).and_then(|doc| check_document(&doc, None)) {
                Ok(e) => {
                    let code = if e.ok { 0 } else { 1 };
                    let line = format!(
                        "{} {shown} ({})",
                        if e.ok { "ok  " } else { "FAIL" },
                        e.json["kind"].as_str().unwrap_or("?")
                    );
                    let mut j = e.json;
                    j["path"] = json!(shown);
                    j["exit"] = json!(code);
                    (code, j, line)
                }
                Err(err) => {
                    let code = err.code();
                    let line = format!("ERR  {shown}: {}", err.message());
                    (
                        code,
                        json!({ "path": shown, "exit": code, "error": err.message() }),
                        line,
                    )
                }
            }
        })
        .collect();
    let code = results.iter().map(|r| r.0).max().unwrap_or(0);
    let passed = results.iter().filter(|r| r.0 == 0).count();
    let mut human: String = results.iter().map(|r| format!("{}\n", r.2)).collect();
    let _ = writeln!(human, "{passed} of {} files verified", results.len());
    let emit = Emit {
        json: json!({ "results": results.into_iter().map(|r| r.1).collect::<Vec<_>>(), "passed": passed }),
        human,
        ok: true,
    };
    let written = finish(Ok(emit), started, out);
    written.max(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_flags() {
        assert_eq!(parse_field("Q").ok(), Some(FieldSpec::Rationals));
        assert_eq!(parse_field("Fp:5").ok(), Some(FieldSpec::Prime(5)));
        assert_eq!(parse_field("F3").ok(), Some(FieldSpec::Prime(3)));
        assert!(matches!(parse_field("F4"), Err(CliError::Input(_))));
        assert!(matches!(parse_field("R"), Err(CliError::Input(_))));
    }

    #[test]
    fn elements_by_name_or_index() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(resolve_element(&s3, "213").ok(), Some(2));
        assert_eq!(resolve_element(&s3, "5").ok(), Some(5));
        assert!(resolve_element(&s3, "6").is_err());
    }

    #[test]
    fn hopf_documents_serve_weaker_kinds() {
        let doc = HopfDoc::from(&zoo::sweedler4(FieldSpec::Rationals).unwrap());
        for k in [Kind::Algebra, Kind::Coalgebra, Kind::Bialgebra, Kind::Hopf] {
            assert!(hopf_doc_matches(&doc, k));
        }
        assert!(!hopf_doc_matches(&doc, Kind::Lie));
        let alg = HopfDoc::from(&zoo::matrix_algebra(2, FieldSpec::Rationals));
        assert!(!hopf_doc_matches(&alg, Kind::Bialgebra));
    }
}
