//! Command dispatch: each command computes a result, collects witnesses
//! and records the theorem checks it performed as verdicts.

use std::collections::BTreeMap;
use std::time::Instant;

use locdual::complexes::{homology_presentation, minimize, schreyer_resolution};
use locdual::duality::{
    certified, ci_ext_isomorphism, coh_equal, equidimensional_hull, find_regular_sequence, hull_at_level,
    pairing_eval, pairing_left_kernel, pairing_matrix, pairing_report, purity_test, right_injectivity_check,
    roos_map, sk_test, transformation_check, CodimRow, CompleteIntersection, ExtClass, PresentedModule,
};
use locdual::groebner::Submodule;
use locdual::oracle::{mono_codimension, mono_primary_decomposition, mono_top_part, MonomialIdeal};
use locdual::ring::RingVector;
use locdual::Error;
use serde_json::{json, Value};

use crate::report::{
    error_value, matrix_json, poly_json, polys_json, sorted_polys_json, submodule_json, vector_json, Report,
};
use crate::session::{ideal_row, Session, SessionError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Resolve { module: String, min: bool },
    Ext { module: String, k: usize },
    Hull { module: String, p: usize },
    Pair { module: String, p: usize, g: Option<String> },
    Kernel { module: String, p: usize },
    Inject { module: String, p: usize },
    S2 { module: String, p: usize, k: usize },
    Purity { module: String, p: usize },
    Roos { module: String, p: usize },
    Transform { ideal: String, matrix: String },
    Check { module: String, p: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Resolve { .. } => "resolve",
            Command::Ext { .. } => "ext",
            Command::Hull { .. } => "hull",
            Command::Pair { .. } => "pair",
            Command::Kernel { .. } => "kernel",
            Command::Inject { .. } => "inject",
            Command::S2 { .. } => "s2",
            Command::Purity { .. } => "purity",
            Command::Roos { .. } => "roos",
            Command::Transform { .. } => "transform",
            Command::Check { .. } => "check",
        }
    }

    fn inputs(&self) -> BTreeMap<String, Value> {
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: Value| {
            m.insert(k.to_string(), v);
        };
        match self {
            Command::Resolve { module, min } => {
                put("module", json!(module));
                put("min", json!(min));
            }
            Command::Ext { module, k } => {
                put("module", json!(module));
                put("k", json!(k));
            }
            Command::Hull { module, p }
            | Command::Kernel { module, p }
            | Command::Inject { module, p }
            | Command::Purity { module, p }
            | Command::Roos { module, p }
            | Command::Check { module, p } => {
                put("module", json!(module));
                put("p", json!(p));
            }
            Command::Pair { module, p, g } => {
                put("module", json!(module));
                put("p", json!(p));
                put("g", json!(g));
            }
            Command::S2 { module, p, k } => {
                put("module", json!(module));
                put("p", json!(p));
                put("k", json!(k));
            }
            Command::Transform { ideal, matrix } => {
                put("ideal", json!(ideal));
                put("matrix", json!(matrix));
            }
        }
        m
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    /// Name of a declared ideal, or a comma-separated list of polynomials,
    /// used as the complete-intersection level instead of a searched one.
    pub fine_ci: Option<String>,
}

#[derive(Debug)]
enum Failure {
    Session(SessionError),
    Core(Error),
}

impl From<SessionError> for Failure {
    fn from(e: SessionError) -> Self {
        Failure::Session(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

#[derive(Default)]
struct Out {
    result: serde_json::Map<String, Value>,
    witnesses: Vec<Value>,
    verdicts: BTreeMap<String, bool>,
    certified: bool,
}

impl Out {
    fn set(&mut self, k: &str, v: Value) {
        self.result.insert(k.to_string(), v);
    }

    fn verdict(&mut self, k: &str, v: bool) {
        self.verdicts.insert(k.to_string(), v);
    }
}

/// Runs a command against a session. Never panics on bad input: errors
/// become reports whose result carries `error`.
pub fn run(cmd: &Command, session: &Session, opts: &Options) -> Report {
    let start = Instant::now();
    let mut out = Out::default();
    let outcome = dispatch(cmd, session, opts, &mut out);
    let mut inputs = cmd.inputs();
    if let Some(ci) = &opts.fine_ci {
        inputs.insert("fine_ci".to_string(), json!(ci));
    }
    for name in inputs.values().filter_map(Value::as_str).map(str::to_string).collect::<Vec<_>>() {
        if let Some(obj) = session.get(&name) {
            inputs.insert(format!("{name}:{}", obj.kind()), object_json(obj));
        }
    }
    let (result, witnesses, verdicts) = match outcome {
        Ok(()) => (Value::Object(out.result), out.witnesses, out.verdicts),
        Err(f) => {
            let (kind, message, witness) = describe(f);
            (error_value(kind, &message), witness.into_iter().map(Value::String).collect(), BTreeMap::new())
        }
    };
    let mut timings = BTreeMap::new();
    timings.insert("total".to_string(), start.elapsed().as_secs_f64() * 1000.0);
    Report {
        command: cmd.name().to_string(),
        ring: session.ring().to_string(),
        inputs,
        seed: opts.seed,
        certified: out.certified,
        result,
        witnesses,
        verdicts,
        timings_ms: timings,
    }
}

/// An error report for input that did not even parse.
pub fn input_error_report(command: &str, seed: u64, err: &SessionError) -> Report {
    let (kind, message, witness) = describe(Failure::Session(err.clone()));
    let mut result = error_value(kind, &message);
    if let SessionError::Syntax { line, column, .. } = err {
        result["line"] = json!(line);
        result["column"] = json!(column);
    }
    Report {
        command: command.to_string(),
        ring: String::new(),
        inputs: BTreeMap::new(),
        seed,
        certified: false,
        result,
        witnesses: witness.into_iter().map(Value::String).collect(),
        verdicts: BTreeMap::new(),
        timings_ms: BTreeMap::new(),
    }
}

fn describe(f: Failure) -> (&'static str, String, Option<String>) {
    match f {
        Failure::Session(SessionError::Core(e)) | Failure::Core(e) => {
            let kind = match &e {
                Error::Precondition { .. } => "precondition",
                Error::SearchExhausted { .. } => "search_exhausted",
                Error::Parse { .. } => "syntax",
                _ => "invalid_input",
            };
            let witness = match &e {
                Error::Precondition { witness, .. } => witness.clone(),
                _ => None,
            };
            (kind, e.to_string(), witness)
        }
        Failure::Session(e @ SessionError::Syntax { .. }) => ("syntax", e.to_string(), None),
        Failure::Session(e) => ("unknown_object", e.to_string(), None),
    }
}

fn object_json(obj: &crate::session::Object) -> Value {
    use crate::session::Object;
    match obj {
        Object::Ideal(g) => polys_json(g),
        Object::Module(m) => Value::Array(m.columns().iter().map(vector_json).collect()),
        Object::Matrix(m) => matrix_json(m),
    }
}

fn level_for(
    g: &PresentedModule,
    p: usize,
    session: &Session,
    opts: &Options,
) -> Result<Option<CompleteIntersection>, Failure> {
    if let Some(given) = &opts.fine_ci {
        let gens = match session.ideal(given) {
            Ok(gens) => gens.to_vec(),
            Err(_) => session.parse_polynomials(given)?,
        };
        let ci = CompleteIntersection::new(session.ring(), gens)?;
        if ci.len() != p {
            return Err(Error::precondition(format!("--fine-ci has length {}, expected {p}", ci.len())).into());
        }
        if let Some(f) = g.is_killed_by(&ci)? {
            return Err(Error::precondition_with("--fine-ci does not annihilate the module", f.to_string()).into());
        }
        return Ok(Some(ci));
    }
    if g.is_zero()? {
        return Ok(None);
    }
    Ok(Some(find_regular_sequence(g.annihilator()?, p, opts.seed)?))
}

fn require_codim(g: &PresentedModule, p: usize) -> Result<(), Failure> {
    if let Some(c) = g.codimension()? {
        if c < p {
            return Err(Error::precondition_with(
                format!("module has codimension {c} < {p}"),
                format!("codim = {c}"),
            )
            .into());
        }
    }
    Ok(())
}

fn ci_json(ci: &Option<CompleteIntersection>) -> Value {
    ci.as_ref().map_or(Value::Null, |c| polys_json(c.generators()))
}

fn rows_json(rows: &[CodimRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| json!({ "ell": r.ell, "codim": r.codim, "required": r.required, "ok": r.ok }))
            .collect(),
    )
}

/// Oracle decomposition when the input is a monomial ideal.
fn oracle(session: &Session, name: &str, p: usize, out: &mut Out, computed: &Submodule) -> Result<(), Failure> {
    let Ok(gens) = session.ideal(name) else {
        return Ok(());
    };
    let ring = session.ring();
    let Ok(mono) = MonomialIdeal::from_polynomials(ring, gens) else {
        return Ok(());
    };
    if mono.is_unit() || mono_codimension(&mono) != Some(p) {
        return Ok(());
    }
    let comps = mono_primary_decomposition(&mono)?;
    let top = mono_top_part(&mono, p)?;
    out.set(
        "oracle",
        json!({
            "components": comps.iter().map(|c| sorted_polys_json(&c.to_polynomials(ring))).collect::<Vec<_>>(),
            "top_part": sorted_polys_json(&top.to_polynomials(ring)),
        }),
    );
    out.verdict("oracle_agrees", computed.same_as(&top.to_submodule(ring))?);
    Ok(())
}

fn dispatch(cmd: &Command, session: &Session, opts: &Options, out: &mut Out) -> Result<(), Failure> {
    let ring = session.ring();
    let module = |name: &str| -> Result<PresentedModule, Failure> {
        Ok(PresentedModule::new(&session.presentation(name)?)?)
    };
    match cmd {
        Command::Resolve { module: name, min } => {
            let p = session.presentation(name)?;
            out.certified = certified(&p);
            let res = schreyer_resolution(&p, ring.nvars())?;
            let (res, minimized) = if *min {
                let m = minimize(&res);
                (m.complex, m.minimized)
            } else {
                (res, false)
            };
            out.set("ranks", json!(res.ranks()));
            out.set("differentials", Value::Array(res.maps().iter().map(matrix_json).collect()));
            out.set("minimized", json!(minimized));
            let mut exact = true;
            for k in 1..=res.length() {
                exact &= homology_presentation(&res, k)?.is_zero();
            }
            out.verdict("exact", exact);
            let presents = if res.length() == 0 {
                Submodule::new(p.clone()).is_zero()
            } else {
                res.image(0).same_as(&Submodule::new(p.clone()))?
            };
            out.verdict("presents_input", presents);
        }
        Command::Ext { module: name, k } => {
            let g = module(name)?;
            out.certified = g.certified();
            let ext = g.ext_or_zero(*k)?;
            out.set("zero", json!(ext.is_zero()));
            out.set("generators", Value::Array(ext.generators().columns().iter().map(vector_json).collect()));
            out.set("relations", matrix_json(ext.relations()));
            out.verdict("presentation_verified", ext.verify()?);
        }
        Command::Hull { module: name, p } => {
            let g = module(name)?;
            out.certified = g.certified();
            require_codim(&g, *p)?;
            let j = g.relations();
            let forced = match opts.fine_ci {
                Some(_) => level_for(&g, *p, session, opts)?,
                None => None,
            };
            let hull = match forced {
                Some(ci) => {
                    out.set("level", polys_json(ci.generators()));
                    hull_at_level(&j, &ci)?
                }
                None => equidimensional_hull(&j, *p, opts.seed)?,
            };
            out.set("hull", submodule_json(&hull));
            out.verdict("contains_input", hull.contains_module(&j)?);
            oracle(session, name, *p, out, &hull)?;
        }
        Command::Pair { module: name, p, g: gtext } => {
            let g = module(name)?;
            out.certified = g.certified();
            require_codim(&g, *p)?;
            let level = level_for(&g, *p, session, opts)?;
            out.set("level", ci_json(&level));
            let Some(level) = level else {
                out.set("values", json!([]));
                return Ok(());
            };
            let ext = g.ext_or_zero(*p)?;
            out.set("ext_generators", Value::Array(ext.generators().columns().iter().map(vector_json).collect()));
            match gtext {
                Some(text) => {
                    let v = session.parse_vector(text)?;
                    let other = find_regular_sequence(g.annihilator()?, *p, opts.seed.wrapping_add(1))?;
                    let mut values = Vec::new();
                    let mut agree = true;
                    for j in 0..ext.num_generators() {
                        let xi = ExtClass::generator(&g, *p, j)?;
                        let a = pairing_eval(&g, &v, &xi, &level)?;
                        let b = pairing_eval(&g, &v, &xi, &other)?;
                        agree &= coh_equal(&a, &b, opts.seed)?;
                        values.push(poly_json(a.value()));
                    }
                    out.set("values", Value::Array(values));
                    out.verdict("level_independent", agree);
                }
                None => out.set("pairing_matrix", matrix_json(&pairing_matrix(&g, &level)?)),
            }
        }
        Command::Kernel { module: name, p } => {
            let g = module(name)?;
            out.certified = g.certified();
            require_codim(&g, *p)?;
            let level = level_for(&g, *p, session, opts)?;
            out.set("level", ci_json(&level));
            let j = g.relations();
            let (kernel, hull) = match &level {
                Some(ci) => (pairing_left_kernel(&g, ci)?, hull_at_level(&j, ci)?),
                None => (Submodule::free(ring, g.rank()), Submodule::free(ring, g.rank())),
            };
            let other = equidimensional_hull(&j, *p, opts.seed.wrapping_add(1))?;
            out.set("kernel", submodule_json(&kernel));
            out.set("hull", submodule_json(&hull));
            let nondegenerate = kernel.same_as(&hull)?;
            out.set("nondegenerate", json!(nondegenerate));
            out.verdict("kernel_equals_hull", nondegenerate);
            out.verdict("hull_seed_independent", hull.same_as(&other)?);
            oracle(session, name, *p, out, &kernel)?;
        }
        Command::Inject { module: name, p } => {
            let g = module(name)?;
            out.certified = g.certified();
            require_codim(&g, *p)?;
            let level = level_for(&g, *p, session, opts)?;
            out.set("level", ci_json(&level));
            let Some(level) = level else {
                out.set("injective", json!(true));
                out.verdict("injective", true);
                return Ok(());
            };
            let rep = right_injectivity_check(&g, &level)?;
            out.set("injective", json!(rep.injective));
            out.set("kernel", submodule_json(&rep.kernel));
            out.witnesses.extend(rep.witnesses.iter().map(vector_json));
            out.verdict("injective", rep.injective);
        }
        Command::S2 { module: name, p, k } => {
            let g = module(name)?;
            out.certified = g.certified();
            require_codim(&g, *p)?;
            let rep = sk_test(&g, *p, *k)?;
            out.set("passes", json!(rep.passes));
            out.set("codim_table", rows_json(&rep.rows));
            if let Some(f) = rep.first_failure() {
                out.set("first_failure", json!({ "ell": f.ell, "codim": f.codim, "required": f.required }));
            }
        }
        Command::Purity { module: name, p } => {
            let g = module(name)?;
            out.certified = g.certified();
            let rep = purity_test(&g, *p, opts.seed)?;
            out.set("pure", json!(rep.pure));
            out.set("hull_equal", json!(rep.hull_equal));
            out.set("codim_table", rows_json(&rep.rows));
            out.verdict("criteria_agree", rep.consistent);
        }
        Command::Roos { module: name, p } => {
            let g = module(name)?;
            out.certified = g.certified();
            let rep = roos_map(&g, *p, opts.seed)?;
            out.set("level", polys_json(rep.level.generators()));
            out.set("map", matrix_json(&rep.map));
            out.set("double_dual", submodule_json(&rep.double_dual));
            out.set("injective", json!(rep.injective));
            out.set("surjective", json!(rep.surjective));
            out.set("cokernel_length", json!(rep.cokernel_length));
            out.set("hull_s2", json!(rep.hull_s2));
            out.witnesses.extend(rep.cokernel_witnesses.iter().map(vector_json));
            out.verdict("injective", rep.injective);
            out.verdict("surjective_iff_s2", rep.surjective == rep.hull_s2);
            out.verdict("double_dual_consistent", rep.resolved_agrees);
        }
        Command::Transform { ideal, matrix } => {
            let gens = session.ideal(ideal)?.to_vec();
            let a = session.matrix(matrix)?;
            let gvec = RingVector::new(ring, gens.clone())?;
            let f = a.try_mul_vector(&gvec)?;
            out.certified = certified(&ideal_row(ring, &gens));
            let gci = CompleteIntersection::new(ring, gens)?;
            let fci = CompleteIntersection::new(ring, f.entries().to_vec())?;
            let rep = transformation_check(&gci, &fci, a)?;
            out.set("f", vector_json(&f));
            out.set("det", poly_json(&rep.det));
            out.set("direct", poly_json(rep.direct.value()));
            out.set("mapped", poly_json(rep.mapped.value()));
            out.set("from_wedges", poly_json(rep.from_wedges.value()));
            out.verdict("wedge_powers_chain_map", rep.wedge_chain_map);
            out.verdict("transforms_by_det", rep.holds);
        }
        Command::Check { module: name, p } => check(name, *p, session, opts, out)?,
    }
    Ok(())
}

/// The full battery on one input.
fn check(name: &str, p: usize, session: &Session, opts: &Options, out: &mut Out) -> Result<(), Failure> {
    let ring = session.ring();
    let g = PresentedModule::new(&session.presentation(name)?)?;
    out.certified = g.certified();
    require_codim(&g, p)?;
    let rep = pairing_report(&g, p, opts.seed)?;
    out.set("codim", json!(rep.codim));
    out.set("level", ci_json(&rep.level));
    out.set("left_kernel", submodule_json(&rep.left_kernel));
    out.set("hull", submodule_json(&rep.hull));
    out.verdict("left_nondegenerate", rep.left_nondegenerate);
    out.verdict("right_nondegenerate", rep.right_nondegenerate());
    out.verdict("hull_seed_independent", rep.hull_seed_independent);
    if let Some(r) = &rep.right {
        out.witnesses.extend(r.witnesses.iter().map(vector_json));
    }
    oracle(session, name, p, out, &rep.left_kernel)?;
    let Some(level) = rep.level.clone() else {
        return Ok(());
    };
    out.verdict("ci_ext_isomorphism", ci_ext_isomorphism(&level)?);

    let ext = g.ext_or_zero(p)?;
    let other = find_regular_sequence(g.annihilator()?, p, opts.seed.wrapping_add(1))?;
    let mut agree = true;
    for i in 0..g.rank() {
        let v = RingVector::unit(ring, g.rank(), i);
        for j in 0..ext.num_generators() {
            let xi = ExtClass::generator(&g, p, j)?;
            let a = pairing_eval(&g, &v, &xi, &level)?;
            let b = pairing_eval(&g, &v, &xi, &other)?;
            agree &= coh_equal(&a, &b, opts.seed)?;
        }
    }
    out.verdict("pairing_level_independent", agree);

    if !ext.is_zero() && rep.codim == Some(p) {
        let x = PresentedModule::new(ext.relations())?;
        let purity = purity_test(&x, p, opts.seed)?;
        let s2 = sk_test(&x, p, 2)?;
        out.set("ext_pure", json!(purity.pure));
        out.set("ext_s2", json!(s2.passes));
        out.verdict("ext_pure", purity.pure && purity.consistent);
        out.verdict("ext_s2", s2.passes);
    }

    if rep.codim == Some(p) {
        let roos = roos_map(&g, p, opts.seed)?;
        out.set("roos_surjective", json!(roos.surjective));
        out.set("roos_cokernel_length", json!(roos.cokernel_length));
        out.verdict("roos_injective", roos.injective);
        out.verdict("roos_surjective_iff_s2", roos.surjective == roos.hull_s2);
        out.verdict("roos_double_dual_consistent", roos.resolved_agrees);
    }
    Ok(())
}
