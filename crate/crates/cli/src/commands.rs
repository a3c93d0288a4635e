use serde_json::{json, Map, Value};

use gvdkit_core::bruhat::{bruhat_witness, reduced_words};
use gvdkit_core::classes::root_symbols;
use gvdkit_core::gvd::{
    family_fiber, family_ideal, gluing_check, gvd_split, initial_y_ideal, normality_probe, rll_certificate, GvdReport,
    RllCertificate, Verdict,
};
use gvdkit_core::polyalg::{parse_ideal, Grading, Ideal, Ring, TermOrder};
use gvdkit_core::roots::{RootSystem, WeylElement, Word};
use gvdkit_core::schubert::{degeneration_chain, gvd_step_schubert, ChainReport, Coordinates, PatchChart, StepReport};
use gvdkit_core::simplicial::{SimplicialComplex, VdTree};
use gvdkit_core::subword::{
    billey_restriction, ktheory_restriction_direct, ktheory_restriction_recursive, restriction_recursive, subword_complex,
    StepCase,
};

use crate::args::*;
use crate::input::{format_complex, parse_complex, parse_order, parse_permutation, parse_word, resolve};
use crate::{suite, CliError};

/// What a command produced, before rendering.
#[derive(Debug, Clone)]
pub struct Output {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub certificates: Vec<Value>,
    /// `Some(false)` when a certificate or check reports a failed hypothesis.
    pub certified: Option<bool>,
    pub text: String,
}

impl Output {
    fn new(command: &str, inputs: Value, result: Value, text: String) -> Self {
        let inputs = match inputs {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        Output { command: command.to_string(), inputs, result, certificates: Vec::new(), certified: None, text }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "certificates": self.certificates,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }
}

pub fn execute(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Roots { cartan } => roots(cartan),
        Command::Bruhat(c) => bruhat(c),
        Command::Subword(SubwordCmd::Complex { cartan, q, w }) => subword(cartan, q, w),
        Command::Localize(a) => localize(a),
        Command::Ideal(c) => ideal_cmd(c),
        Command::Gvd(c) => gvd_cmd(c),
        Command::Patch(c) => patch_cmd(c),
        Command::Simplicial(c) => simplicial_cmd(c),
        Command::Suite { only } => run_suite(only),
    }
}

fn system(label: &str) -> Result<RootSystem, CliError> {
    Ok(RootSystem::from_label(label.trim())?)
}

fn word_text(w: &Word) -> String {
    w.to_one_based().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

fn word_json(w: &Word) -> Value {
    json!(w.to_one_based())
}

fn element(rs: &RootSystem, arg: &str) -> Result<WeylElement, CliError> {
    Ok(rs.element(&parse_word(arg)?)?)
}

fn roots(cartan: &str) -> Result<Output, CliError> {
    let rs = system(cartan)?;
    let r = rs.rank();
    let matrix: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| rs.cartan(i, j)).collect()).collect();
    let positive: Vec<String> = rs.positive_roots().iter().map(|a| a.to_string()).collect();
    let w0 = rs.longest_element();
    let mut text = format!("rank {}\ncartan:\n", r);
    for row in &matrix {
        text.push_str(&format!("  {}\n", row.iter().map(|x| format!("{:>2}", x)).collect::<Vec<_>>().join(" ")));
    }
    text.push_str(&format!("positive roots ({}):\n", positive.len()));
    for p in &positive {
        text.push_str(&format!("  {}\n", p));
    }
    text.push_str(&format!("longest element: {}\n", word_text(&w0.reduced_word())));
    let result = json!({
        "rank": r,
        "cartan": matrix,
        "positive_roots": positive,
        "longest_word": word_json(&w0.reduced_word()),
        "longest_length": w0.length(),
    });
    Ok(Output::new("roots", json!({ "type": cartan }), result, text))
}

fn bruhat(c: &BruhatCmd) -> Result<Output, CliError> {
    match c {
        BruhatCmd::Leq { cartan, u, w } => {
            let rs = system(cartan)?;
            let (ue, we) = (element(&rs, u)?, element(&rs, w)?);
            let witness = bruhat_witness(&ue, &we)?;
            let mut text = format!("{}\n", witness.is_some());
            let wj = match &witness {
                Some(wit) => {
                    let pos: Vec<usize> = wit.positions.iter().map(|p| p + 1).collect();
                    text.push_str(&format!("witness: positions {:?} of {}\n", pos, word_text(&wit.word)));
                    json!({ "word": word_json(&wit.word), "positions": pos })
                }
                None => Value::Null,
            };
            let result = json!({ "result": witness.is_some(), "witnesses": wj });
            Ok(Output::new("bruhat leq", json!({ "type": cartan, "u": u, "w": w }), result, text))
        }
        BruhatCmd::Words { cartan, w } => {
            let rs = system(cartan)?;
            let words = reduced_words(&element(&rs, w)?);
            let text: String = words.iter().map(|q| format!("{}\n", word_text(q))).collect();
            let result = json!({ "result": words.iter().map(word_json).collect::<Vec<_>>() });
            Ok(Output::new("bruhat words", json!({ "type": cartan, "w": w }), result, text))
        }
    }
}

fn complex_summary(c: &SimplicialComplex) -> Value {
    json!({
        "vertices": c.labels(),
        "facets": c.facets().iter().map(|f| f.iter().map(|&v| c.labels()[v].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "dim": c.dim(),
        "f_vector": c.f_vector(),
        "pure": c.is_pure(),
    })
}

fn subword(cartan: &str, q: &str, w: &str) -> Result<Output, CliError> {
    let rs = system(cartan)?;
    let qw = parse_word(q)?;
    let s = subword_complex(&rs, &qw, &element(&rs, w)?)?;
    let labels: Vec<String> = (1..=qw.len()).map(|i| i.to_string()).collect();
    let c = SimplicialComplex::with_labels(labels, s.complex.facets())?;
    let mut result = complex_summary(&c);
    result["void"] = json!(s.is_void());
    Ok(Output::new("subword complex", json!({ "type": cartan, "Q": q, "w": w }), result, format_complex(&c)))
}

fn localize(a: &LocalizeArgs) -> Result<Output, CliError> {
    let rs = system(&a.cartan)?;
    let w = element(&rs, &a.w)?;
    let q = parse_word(&a.v)?;
    let value = match (a.ring, a.method) {
        (RingKind::H, Method::Direct) => billey_restriction(&rs, &q, &w)?.to_string(),
        (RingKind::H, Method::Recursive) => restriction_recursive(&rs, &w, &rs.element(&q)?)?.to_string(),
        (RingKind::K, Method::Direct) => {
            if !rs.word_eval(&q)?.is_reduced {
                return Err(gvdkit_core::Error::NotReduced(q.to_string()).into());
            }
            ktheory_restriction_direct(&rs, &q, &w)?.to_string()
        }
        (RingKind::K, Method::Recursive) => ktheory_restriction_recursive(&rs, &w, &rs.element(&q)?)?.to_string(),
    };
    let ring = if a.ring == RingKind::H { "H" } else { "K" };
    let method = if a.method == Method::Direct { "direct" } else { "recursive" };
    let inputs = json!({ "type": a.cartan, "w": a.w, "v": a.v, "ring": ring, "method": method });
    Ok(Output::new("localize", inputs, json!({ "value": value }), format!("{}\n", value)))
}

fn load_ideal(input: &IdealInput) -> Result<Ideal, CliError> {
    let ring = Ring::parse(&resolve(&input.ring)?)?;
    Ok(parse_ideal(&resolve(&input.gens)?, &ring)?)
}

fn ideal_inputs(input: &IdealInput) -> Value {
    json!({ "ring": input.ring, "gens": input.gens })
}

/// Generators of the reduced grevlex basis.
pub fn show(i: &Ideal) -> Result<Vec<String>, CliError> {
    Ok(i.reduced(&TermOrder::GrevLex)?.show_gens())
}

fn lines(gens: &[String]) -> String {
    if gens.is_empty() {
        return "0\n".to_string();
    }
    gens.iter().map(|g| format!("{}\n", g)).collect()
}

fn ideal_cmd(c: &IdealCmd) -> Result<Output, CliError> {
    match c {
        IdealCmd::Gb { input, order } => {
            let i = load_ideal(input)?;
            let o = parse_order(order)?;
            let basis = i.reduced(&o)?.show_gens();
            let mut inputs = ideal_inputs(input);
            inputs["order"] = json!(order);
            Ok(Output::new("ideal gb", inputs, json!({ "basis": basis }), lines(&basis)))
        }
        IdealCmd::Dim { input } => {
            let i = load_ideal(input)?;
            let (d, c) = (i.dimension()?, i.codim()?);
            let text = match d {
                Some(d) => format!("dimension {}\ncodimension {}\n", d, c.unwrap_or(0)),
                None => "empty (unit ideal)\n".to_string(),
            };
            Ok(Output::new("ideal dim", ideal_inputs(input), json!({ "dimension": d, "codimension": c }), text))
        }
        IdealCmd::Kpoly { input, order, grading } => {
            let i = load_ideal(input)?;
            let o = parse_order(order)?;
            let g = match grading {
                GradingKind::Natural => Grading::natural(&i)?,
                GradingKind::Standard => Grading::new(vec![vec![1]; i.nvars()])?,
                GradingKind::Fine => Grading::fine(i.nvars()),
            };
            let symbols: Vec<String> =
                if g.rank() == 1 { vec!["t".to_string()] } else { (1..=g.rank()).map(|k| format!("t{}", k)).collect() };
            let k = i.kpoly(&o, &g)?.to_string_with(&symbols);
            let mut inputs = ideal_inputs(input);
            inputs["order"] = json!(order);
            let result = json!({ "grading": g.degrees(), "symbols": symbols, "kpoly": k });
            let text = format!("grading {:?}\n{}\n", g.degrees(), k);
            Ok(Output::new("ideal kpoly", inputs, result, text))
        }
    }
}

fn gvd_json(r: &GvdReport) -> Result<Value, CliError> {
    Ok(json!({
        "y": r.i_prime.ring().names()[r.y],
        "I_prime": show(&r.i_prime)?,
        "C": show(&r.c)?,
        "P": show(&r.p)?,
        "decomposition_holds": r.decomposition_holds,
        "containment_holds": r.containment_holds,
        "lambda_empty": r.lambda_empty,
        "notes": r.notes,
    }))
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Certified => json!("certified"),
        Verdict::HypothesisFailed { hypothesis, witness } => json!({ "hypothesis_failed": hypothesis, "witness": witness }),
    }
}

pub fn certificate_json(c: &RllCertificate, names: &[String]) -> Value {
    let comps: Vec<Vec<&str>> = c.components.iter().map(|p| p.iter().map(|&v| names[v].as_str()).collect()).collect();
    json!({
        "components": comps,
        "shelling_order": c.shelling_order,
        "generically_reduced": c.generically_reduced,
        "gluing_reduced": c.gluing_reduced,
        "verdict": verdict_json(&c.verdict),
    })
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Certified => "certified".to_string(),
        Verdict::HypothesisFailed { hypothesis, witness } => format!("hypothesis failed: {} ({})", hypothesis, witness),
    }
}

fn gvd_cmd(c: &GvdCmd) -> Result<Output, CliError> {
    match c {
        GvdCmd::Split { input, y } => {
            let i = load_ideal(input)?;
            let yi = i.ring().index(y)?;
            let r = gvd_split(&i, yi)?;
            let result = gvd_json(&r)?;
            let text = format!(
                "I' = <{}>\nC  = <{}>\nP  = <{}>\ndecomposition holds: {}\n",
                show(&r.i_prime)?.join(", "),
                show(&r.c)?.join(", "),
                show(&r.p)?.join(", "),
                r.decomposition_holds
            );
            let mut inputs = ideal_inputs(input);
            inputs["y"] = json!(y);
            Ok(Output::new("gvd split", inputs, result, text))
        }
        GvdCmd::Family { input, y, z } => {
            let i = load_ideal(input)?;
            let yi = i.ring().index(y)?;
            let fam = family_ideal(&i, yi, z)?;
            let (f0, f1) = (family_fiber(&fam, 0)?, family_fiber(&fam, 1)?);
            let special = f0.equals(&initial_y_ideal(&i, yi)?)?;
            let general = f1.equals(&i)?;
            let result = json!({
                "ring": fam.ring().names(),
                "family": show(&fam)?,
                "fiber_0": show(&f0)?,
                "fiber_1": show(&f1)?,
                "fiber_0_is_initial_y_ideal": special,
                "fiber_1_is_input": general,
            });
            let text = format!(
                "family: <{}>\nz = 0: <{}>\nz = 1: <{}>\n",
                show(&fam)?.join(", "),
                show(&f0)?.join(", "),
                show(&f1)?.join(", ")
            );
            let mut inputs = ideal_inputs(input);
            inputs["y"] = json!(y);
            inputs["z"] = json!(z);
            let mut out = Output::new("gvd family", inputs, result, text);
            out.certified = Some(special && general);
            Ok(out)
        }
        GvdCmd::Rll { input } => {
            let i = load_ideal(input)?;
            let cert = rll_certificate(&i)?;
            let cj = certificate_json(&cert, i.ring().names());
            let mut out = Output::new("gvd rll", ideal_inputs(input), cj.clone(), format!("{}\n", verdict_text(&cert.verdict)));
            out.certificates.push(cj);
            out.certified = Some(cert.verdict.is_certified());
            Ok(out)
        }
        GvdCmd::Probe { input, y, ci } => {
            let i = load_ideal(input)?;
            let yi = y.as_deref().map(|y| i.ring().index(y)).transpose()?;
            let r = normality_probe(&i, yi, *ci)?;
            let result = json!({
                "dim": r.dim,
                "singular_ideal": show(&r.singular_ideal)?,
                "singular_dim": r.singular_dim,
                "singular_codim": r.singular_codim,
                "R1": r.r1,
                "complete_intersection": r.complete_intersection,
                "normal": r.normal,
                "singular_y_free": r.singular_y_free,
            });
            let normal = match r.normal {
                Some(b) => b.to_string(),
                None => "unknown (S2 not available)".to_string(),
            };
            let codim = r.singular_codim.map_or("none (smooth)".to_string(), |c| c.to_string());
            let text = format!(
                "singular locus: <{}>\nsingular codimension: {}\nR1: {}\nnormal: {}\n",
                show(&r.singular_ideal)?.join(", "),
                codim,
                r.r1,
                normal
            );
            let mut inputs = ideal_inputs(input);
            inputs["y"] = json!(y);
            inputs["ci"] = json!(ci);
            Ok(Output::new("gvd probe", inputs, result, text))
        }
        GvdCmd::Glue { ring, a, b, x } => {
            let ring_v = Ring::parse(&resolve(ring)?)?;
            let load = |s: &str| -> Result<Ideal, CliError> { Ok(parse_ideal(&resolve(s)?, &ring_v)?) };
            let r = gluing_check(&load(a)?, &load(b)?, &load(x)?)?;
            let result = json!({ "holds": r.holds, "glue": show(&r.glue)? });
            let text = format!("I_X = I_A ∩ I_B: {}\ngluing ideal: <{}>\n", r.holds, show(&r.glue)?.join(", "));
            let mut out = Output::new("gvd glue", json!({ "ring": ring, "a": a, "b": b, "x": x }), result, text);
            out.certified = Some(r.holds);
            Ok(out)
        }
    }
}

fn perm_element(rs: &RootSystem, arg: &str) -> Result<WeylElement, CliError> {
    Ok(rs.from_permutation(&parse_permutation(arg)?)?)
}

fn type_a(n: usize) -> Result<RootSystem, CliError> {
    if n < 2 {
        return Err(CliError::Usage("--n must be at least 2".to_string()));
    }
    system(&format!("A{}", n - 1))
}

fn simple_index(alpha: usize, n: usize) -> Result<usize, CliError> {
    if alpha == 0 || alpha >= n {
        return Err(CliError::Usage(format!("--alpha must lie in 1..={}", n - 1)));
    }
    Ok(alpha - 1)
}

fn case_name(c: StepCase) -> &'static str {
    match c {
        StepCase::A => "A",
        StepCase::B => "B",
        StepCase::C => "C",
    }
}

fn step_json(r: &StepReport) -> Result<Value, CliError> {
    Ok(json!({
        "w": r.w.to_permutation(),
        "v": r.v.to_permutation(),
        "alpha": r.alpha + 1,
        "case": case_name(r.case),
        "y": r.y,
        "y_weight": r.y_weight.to_string(),
        "empty": r.empty,
        "split": r.split.as_ref().map(gvd_json).transpose()?,
        "bundle_matches": r.bundle_matches,
        "P_matches": r.p_matches,
        "C_matches": r.c_matches,
        "verified": r.verified(),
    }))
}

fn chain_json(c: &ChainReport) -> Result<Value, CliError> {
    let names = c.ring.names();
    let mut trace = Vec::new();
    for s in &c.steps {
        let limit = Ideal::from_monomial(c.ring.clone(), &s.limit);
        trace.push(json!({
            "w": s.w.to_permutation(),
            "prefix": s.prefix,
            "v": s.v.to_permutation(),
            "case": s.case.map(case_name),
            "limit": show(&limit)?,
            "step": s.step.as_ref().map(step_json).transpose()?,
            "certificate": s.certificate.as_ref().map(|cert| certificate_json(cert, names)),
        }));
    }
    Ok(json!({
        "Q": word_json(&c.q),
        "w": c.w.to_permutation(),
        "v": c.v.to_permutation(),
        "variables": names,
        "limit": show(&c.limit)?,
        "sr_ideal": show(&c.sr_ideal)?,
        "matches": c.matches,
        "certificates_ok": c.certificates_ok,
        "trace": trace,
    }))
}

fn patch_cmd(c: &PatchCmd) -> Result<Output, CliError> {
    match c {
        PatchCmd::Ideal { n, w, v, coords, alpha } => {
            let rs = type_a(*n)?;
            let (we, ve) = (perm_element(&rs, w)?, perm_element(&rs, v)?);
            let chart = PatchChart::new(&rs, &ve)?;
            let mode = match (coords, alpha) {
                (CoordsKind::Standard, _) => Coordinates::Standard,
                (CoordsKind::Right, Some(a)) => Coordinates::RightAdapted(simple_index(*a, *n)?),
                (CoordsKind::Left, Some(a)) => Coordinates::LeftAdapted(simple_index(*a, *n)?),
                _ => return Err(CliError::Usage("adapted coordinates need --alpha".to_string())),
            };
            let i = chart.ideal(&we, mode)?;
            let proper = !i.is_unit()?;
            let weights: Vec<String> = chart.weights().iter().map(|r| r.to_string()).collect();
            let (codim, mdeg) = if proper {
                let md = chart.multidegree(&i)?.to_string_with(&root_symbols(rs.rank()));
                (i.codim()?, Some(md))
            } else {
                (None, None)
            };
            let gens = show(&i)?;
            let mut text = String::new();
            for (name, wt) in chart.ring().names().iter().zip(&weights) {
                text.push_str(&format!("# {} : {}\n", name, wt));
            }
            text.push_str(&lines(&gens));
            if let Some(md) = &mdeg {
                text.push_str(&format!("# multidegree {}\n", md));
            }
            let result = json!({
                "variables": chart.ring().names(),
                "weights": weights,
                "gens": gens,
                "proper": proper,
                "codim": codim,
                "multidegree": mdeg,
            });
            let inputs = json!({ "n": n, "w": w, "v": v, "coords": format!("{:?}", coords).to_lowercase(), "alpha": alpha });
            Ok(Output::new("patch ideal", inputs, result, text))
        }
        PatchCmd::Step { n, w, v, alpha } => {
            let rs = type_a(*n)?;
            let (we, ve) = (perm_element(&rs, w)?, perm_element(&rs, v)?);
            let r = gvd_step_schubert(&rs, &we, &ve, simple_index(*alpha, *n)?)?;
            let result = step_json(&r)?;
            let mut text = format!("case {}; line variable {} of weight {}\n", case_name(r.case), r.y, r.y_weight);
            if let Some(s) = &r.split {
                text.push_str(&format!(
                    "I' = <{}>\nC  = <{}>\nP  = <{}>\n",
                    show(&s.i_prime)?.join(", "),
                    show(&s.c)?.join(", "),
                    show(&s.p)?.join(", ")
                ));
            }
            text.push_str(&format!("verified: {}\n", r.verified()));
            let mut out = Output::new("patch step", json!({ "n": n, "w": w, "v": v, "alpha": alpha }), result, text);
            out.certified = Some(r.verified());
            Ok(out)
        }
        PatchCmd::Degenerate { n, w, q, no_verify } => {
            let rs = type_a(*n)?;
            let we = perm_element(&rs, w)?;
            let chain = degeneration_chain(&rs, &we, &parse_word(q)?, !no_verify)?;
            let result = chain_json(&chain)?;
            let mut out = Output::new("patch degenerate", json!({ "n": n, "w": w, "Q": q, "verify": !no_verify }), result, String::new());
            let mut text = String::new();
            for s in &chain.steps {
                let limit = show(&Ideal::from_monomial(chain.ring.clone(), &s.limit))?;
                let verdict = s.certificate.as_ref().map_or("-".to_string(), |c| verdict_text(&c.verdict));
                text.push_str(&format!(
                    "w {:?} prefix {} case {}: <{}> [{}]\n",
                    s.w.to_permutation(),
                    s.prefix,
                    s.case.map_or("-", case_name),
                    limit.join(", "),
                    verdict
                ));
                if let Some(c) = &s.certificate {
                    out.certificates.push(certificate_json(c, chain.ring.names()));
                }
            }
            text.push_str(&format!("limit: <{}>\nStanley–Reisner ideal: <{}>\nmatches: {}\n", show(&chain.limit)?.join(", "), show(&chain.sr_ideal)?.join(", "), chain.matches));
            out.text = text;
            out.certified = Some(chain.matches && chain.certificates_ok);
            Ok(out)
        }
    }
}

fn vd_json(t: &VdTree, labels: &[String]) -> Value {
    match t {
        VdTree::Simplex(vs) => json!({ "simplex": vs.iter().map(|&v| labels[v].clone()).collect::<Vec<_>>() }),
        VdTree::Shed { vertex, deletion, link } => json!({
            "shed": labels[*vertex],
            "deletion": vd_json(deletion, labels),
            "link": vd_json(link, labels),
        }),
    }
}

fn vd_text(t: &VdTree, labels: &[String], depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match t {
        VdTree::Simplex(vs) => {
            let names: Vec<&str> = vs.iter().map(|&v| labels[v].as_str()).collect();
            out.push_str(&format!("{}simplex {{{}}}\n", pad, names.join(",")));
        }
        VdTree::Shed { vertex, deletion, link } => {
            out.push_str(&format!("{}shed {}\n", pad, labels[*vertex]));
            vd_text(deletion, labels, depth + 1, out);
            vd_text(link, labels, depth + 1, out);
        }
    }
}

fn simplicial_cmd(c: &SimplicialCmd) -> Result<Output, CliError> {
    let (name, input) = match c {
        SimplicialCmd::Cm(i) => ("simplicial cm", i),
        SimplicialCmd::Shell(i) => ("simplicial shell", i),
        SimplicialCmd::Homology(i) => ("simplicial homology", i),
        SimplicialCmd::Vd(i) => ("simplicial vd", i),
        SimplicialCmd::Sr(i) => ("simplicial sr", i),
    };
    let path = input.input.strip_prefix('@').unwrap_or(&input.input);
    let text_in = resolve(&format!("@{}", path))?;
    let cx = parse_complex(&text_in)?;
    let labels = cx.labels().to_vec();
    let inputs = json!({ "in": input.input });
    let mut result = complex_summary(&cx);
    let text = match c {
        SimplicialCmd::Cm(_) => {
            let r = cx.is_cm_reisner();
            let witness = r.witness.as_ref().map(|w| w.iter().map(|&v| labels[v].clone()).collect::<Vec<_>>());
            result["cm"] = json!(r.cm);
            result["impure"] = json!(r.impure);
            result["witness"] = json!(witness);
            let mut t = format!("cohen-macaulay: {}\n", r.cm);
            if r.impure {
                t.push_str("complex is not pure\n");
            }
            if let Some(w) = witness {
                t.push_str(&format!("link of {{{}}} has homology below its dimension\n", w.join(",")));
            }
            t
        }
        SimplicialCmd::Shell(_) => {
            let order = cx.find_shelling();
            let facets = cx.facets();
            let shown = order.as_ref().map(|o| {
                o.iter().map(|&k| facets[k].iter().map(|&v| labels[v].clone()).collect::<Vec<_>>()).collect::<Vec<_>>()
            });
            result["shellable"] = json!(order.is_some());
            result["shelling"] = json!(shown);
            let t = match &shown {
                Some(fs) => {
                    let mut t = "shellable:\n".to_string();
                    for f in fs {
                        t.push_str(&format!("  {}\n", if f.is_empty() { "{}".to_string() } else { f.join(",") }));
                    }
                    t
                }
                None => "not shellable\n".to_string(),
            };
            t
        }
        SimplicialCmd::Homology(_) => {
            let h = cx.reduced_homology();
            result["reduced_betti"] = json!(h);
            let t: String = h.iter().enumerate().map(|(k, b)| format!("H~_{} = Q^{}\n", k as i64 - 1, b)).collect();
            if t.is_empty() { "void complex\n".to_string() } else { t }
        }
        SimplicialCmd::Vd(_) => {
            let tree = cx.vertex_decomposition();
            result["vertex_decomposable"] = json!(tree.is_some());
            result["decomposition"] = tree.as_ref().map_or(Value::Null, |t| vd_json(t, &labels));
            let mut t = format!("vertex decomposable: {}\n", tree.is_some());
            if let Some(tree) = &tree {
                vd_text(tree, &labels, 0, &mut t);
            }
            t
        }
        SimplicialCmd::Sr(_) => {
            let names: Vec<String> = labels.iter().map(|l| if l.parse::<u64>().is_ok() { format!("x{}", l) } else { l.clone() }).collect();
            let sr = cx.sr_ideal(&names)?;
            let gens = sr.show_gens();
            result["sr_ideal"] = json!(gens);
            lines(&gens)
        }
    };
    Ok(Output::new(name, inputs, result, text))
}

fn run_suite(only: &[u32]) -> Result<Output, CliError> {
    let results = suite::run(only);
    let text: String = results.iter().map(|c| format!("{}\n", suite::render(c))).collect();
    let rows: Vec<Value> =
        results.iter().map(|c| json!({ "id": c.id, "title": c.title, "passed": c.passed, "detail": c.detail })).collect();
    let all = results.iter().all(|c| c.passed);
    let mut out = Output::new("suite", json!({ "only": only }), json!({ "criteria": rows, "all_passed": all }), text);
    out.certified = Some(all);
    Ok(out)
}
