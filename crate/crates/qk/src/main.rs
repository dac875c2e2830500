//! The `qk` command line.
//!
//! Every subcommand reads a `.qk` document, elaborates it, and runs
//! one operation of the calculus over the declared structures. Exit
//! codes: 0 when the operation succeeds or the property holds, 1 when
//! a property fails or a requested object does not exist (with a
//! certificate on stdout), 2 on parse or validation errors (details
//! on stderr), 3 when an enumeration cap is exceeded.

use clap::{Parser, Subcommand};
use qk::ast::Severity;
use qk::loader::{load, Model};
use qk::parser::parse;
use qk::report::{self, Outcome};
use quantakit::cauchy::{cauchy_completion, is_cauchy_complete, morita_equivalent};
use quantakit::completion::{
    is_cocomplete, kan_ext_bruteforce_left, kan_ext_bruteforce_right, kan_ext_pointwise_left,
    kan_ext_pointwise_right, presheaf_category, weighted_colim, weighted_lim, yoneda,
};
use quantakit::corpus::{random_category, Corpus, CorpusBase};
use quantakit::enriched::{
    dist_compose, dist_ext, dist_lift, functor_compose, Caps, QCategory,
};
use quantakit::laws::{run_all, run_suite, suites, SuiteCtx};
use quantakit::matrixcalc::{
    bimodule_of_dist, default_apexes, direct_sum, lax_colimit_in_dist, split_monad,
    verify_lax_universality, ConeSide, MatrQ, MatrixCalcError,
};
use serde_json::json;
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "qk", version, about = "operations over .qk documents")]
struct Cli {
    /// Emit a machine-readable JSON envelope on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Cap for enumerations (presheaves per category; other search
    /// caps scale with it).
    #[arg(long, global = true, default_value_t = 64)]
    cap: usize,

    /// Seed for randomized law instances.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and elaborate a document, reporting what it declares.
    Validate { file: PathBuf },
    /// Compose two functors or two distributors: G after F.
    Compose { file: PathBuf, g: String, f: String },
    /// Lift H through G (distributors with a common codomain).
    Lift { file: PathBuf, g: String, h: String },
    /// Extend H along F (distributors with a common domain).
    Ext { file: PathBuf, f: String, h: String },
    /// Colimit of functor F weighted by distributor THETA.
    Colim { file: PathBuf, theta: String, f: String },
    /// Limit of functor F weighted by distributor PHI.
    Lim { file: PathBuf, phi: String, f: String },
    /// Enumerate the presheaf category of CAT.
    Presheaves { file: PathBuf, cat: String },
    /// Check the Yoneda identity on every presheaf of CAT.
    YonedaCheck { file: PathBuf, cat: String },
    /// Pointwise Kan extension of F along G (left by default).
    Kan {
        file: PathBuf,
        f: String,
        g: String,
        /// Cross-check against the brute-force search.
        #[arg(long)]
        bruteforce: bool,
        /// Compute the right Kan extension instead of the left.
        #[arg(long)]
        right: bool,
    },
    /// Does every presheaf on CAT admit a weighted colimit?
    Cocomplete { file: PathBuf, cat: String },
    /// Build the Cauchy completion of CAT.
    CauchyComplete { file: PathBuf, cat: String },
    /// Is CAT Cauchy complete?
    CauchyTest { file: PathBuf, cat: String },
    /// Are A and B Morita equivalent? Emits the witness when so.
    Morita { file: PathBuf, a: String, b: String },
    /// Run the matrix-quantaloid law suite over the document's bases.
    Matr { file: PathBuf, base: Option<String> },
    /// Run the bimodule-quantaloid law suite over the document's bases.
    Bim { file: PathBuf, base: Option<String> },
    /// Direct sum of the object families of one or more categories.
    Dsum {
        file: PathBuf,
        #[arg(required = true, num_args = 1..)]
        cats: Vec<String>,
    },
    /// Split a monad given as an endo-distributor containing its category.
    Split { file: PathBuf, phi: String },
    /// Lax colimit of a lax functor in the distributor quantaloid.
    LaxColim { file: PathBuf, f: String },
    /// Run law suites over the document's structures.
    Laws {
        file: PathBuf,
        /// Run a single suite instead of all of them.
        #[arg(long)]
        suite: Option<String>,
    },
}

enum Failure {
    /// Bad arguments or references: exit 2.
    Usage(String),
    /// Rendered source diagnostics: exit 2.
    Source(String),
    /// An enumeration refused to run at the configured cap: exit 3.
    Cap(String),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn cap_failure<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Cap(e.to_string())
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let caps = caps_of(cli.cap);
    match dispatch(&cli, &caps) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else if !out.text.is_empty() {
                print!("{}", out.text);
            }
            out.exit
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Source(rendered)) => {
            eprint!("{rendered}");
            2
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("cap exceeded: {msg}");
            3
        }
    }
}

/// Scale the soft limits from the single `--cap` knob so that the
/// default matches the library default.
fn caps_of(cap: usize) -> Caps {
    Caps {
        presheaves: cap,
        functors: cap.saturating_mul(64),
        distributors: cap.saturating_mul(64),
        raw: (1usize << 20).max(cap.saturating_mul(1 << 14)),
    }
}

fn load_model(path: &PathBuf) -> Result<Model, Failure> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let (doc, mut diags) = parse(&src);
    let (model, more) = load(&doc);
    diags.extend(more);
    let shown = report::render_diagnostics(&path.display().to_string(), &diags);
    if diags.iter().any(|d| d.severity == Severity::Error) {
        return Err(Failure::Source(shown));
    }
    if !diags.is_empty() {
        eprint!("{shown}");
    }
    Ok(model)
}

fn names_or_none<'a, I: Iterator<Item = &'a String>>(names: I) -> String {
    let v: Vec<&str> = names.map(|s| s.as_str()).collect();
    if v.is_empty() {
        "none declared".into()
    } else {
        v.join(", ")
    }
}

fn want_cat<'m>(m: &'m Model, n: &str) -> Result<&'m Arc<QCategory>, Failure> {
    m.cat(n).ok_or_else(|| {
        usage(format!(
            "unknown category `{n}` (declared: {})",
            names_or_none(m.cats.iter().map(|(n, _, _)| n))
        ))
    })
}

fn want_functor<'m>(m: &'m Model, n: &str) -> Result<&'m quantakit::enriched::QFunctor, Failure> {
    m.functor(n).ok_or_else(|| {
        usage(format!(
            "unknown functor `{n}` (declared: {})",
            names_or_none(m.functors.iter().map(|(n, _)| n))
        ))
    })
}

fn want_dist<'m>(m: &'m Model, n: &str) -> Result<&'m quantakit::enriched::Distributor, Failure> {
    m.dist(n).ok_or_else(|| {
        usage(format!(
            "unknown distributor `{n}` (declared: {})",
            names_or_none(m.dists.iter().map(|(n, _)| n))
        ))
    })
}

fn want_lax<'m>(m: &'m Model, n: &str) -> Result<&'m quantakit::matrixcalc::LaxFunctor, Failure> {
    m.lax(n).ok_or_else(|| {
        usage(format!(
            "unknown lax functor `{n}` (declared: {})",
            names_or_none(m.laxes.iter().map(|(n, _, _)| n))
        ))
    })
}

/// The law-suite corpus of a document: every declared quantaloid as a
/// base, carrying its declared categories plus two seeded random
/// ones.
fn corpus_of_model(m: &Model, seed: u64, only: Option<&str>) -> Corpus {
    let mut bases = Vec::new();
    for (bname, q) in &m.bases {
        if only.is_some_and(|o| o != bname) {
            continue;
        }
        let mut cats: Vec<(String, Arc<QCategory>)> = m
            .cats
            .iter()
            .filter(|(_, b, _)| b == bname)
            .map(|(n, _, c)| (n.clone(), c.clone()))
            .collect();
        for k in 0u64..2 {
            let s = seed ^ fnv(bname) ^ 0x9e37_79b9_7f4a_7c15u64.wrapping_mul(k + 1);
            cats.push((format!("seeded{k}"), random_category(q, s, 2)));
        }
        bases.push(CorpusBase { name: bname.clone(), base: q.clone(), cats });
    }
    Corpus { bases }
}

fn fnv(s: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in s.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

fn dispatch(cli: &Cli, caps: &Caps) -> Result<Outcome, Failure> {
    match &cli.cmd {
        Cmd::Validate { file } => {
            let m = load_model(file)?;
            Ok(cmd_validate(&m))
        }
        Cmd::Compose { file, g, f } => cmd_compose(&load_model(file)?, g, f),
        Cmd::Lift { file, g, h } => cmd_lift(&load_model(file)?, g, h),
        Cmd::Ext { file, f, h } => cmd_ext(&load_model(file)?, f, h),
        Cmd::Colim { file, theta, f } => cmd_colim(&load_model(file)?, theta, f),
        Cmd::Lim { file, phi, f } => cmd_lim(&load_model(file)?, phi, f),
        Cmd::Presheaves { file, cat } => cmd_presheaves(&load_model(file)?, cat, caps),
        Cmd::YonedaCheck { file, cat } => cmd_yoneda_check(&load_model(file)?, cat, caps),
        Cmd::Kan { file, f, g, bruteforce, right } => {
            cmd_kan(&load_model(file)?, f, g, *bruteforce, *right, caps)
        }
        Cmd::Cocomplete { file, cat } => cmd_cocomplete(&load_model(file)?, cat, caps),
        Cmd::CauchyComplete { file, cat } => cmd_cauchy_complete(&load_model(file)?, cat, caps),
        Cmd::CauchyTest { file, cat } => cmd_cauchy_test(&load_model(file)?, cat, caps),
        Cmd::Morita { file, a, b } => cmd_morita(&load_model(file)?, a, b, caps),
        Cmd::Matr { file, base } => {
            cmd_base_suite(&load_model(file)?, "matr", base.as_deref(), caps, cli.seed)
        }
        Cmd::Bim { file, base } => {
            cmd_base_suite(&load_model(file)?, "bim", base.as_deref(), caps, cli.seed)
        }
        Cmd::Dsum { file, cats } => cmd_dsum(&load_model(file)?, cats),
        Cmd::Split { file, phi } => cmd_split(&load_model(file)?, phi),
        Cmd::LaxColim { file, f } => cmd_lax_colim(&load_model(file)?, f, caps),
        Cmd::Laws { file, suite } => {
            cmd_laws(&load_model(file)?, suite.as_deref(), caps, cli.seed)
        }
    }
}

fn cmd_validate(m: &Model) -> Outcome {
    let text = format!(
        "ok: {} lattices, {} quantaloids, {} categories, {} functors, {} distributors, {} shapes, {} lax functors\n",
        m.lattices.len(),
        m.bases.len(),
        m.cats.len(),
        m.functors.len(),
        m.dists.len(),
        m.shapes.len(),
        m.laxes.len(),
    );
    Outcome::new(
        0,
        "validate",
        text,
        json!({
            "lattices": m.lattices.iter().map(|(n, _)| n).collect::<Vec<_>>(),
            "quantaloids": m.bases.iter().map(|(n, _)| n).collect::<Vec<_>>(),
            "categories": m.cats.iter().map(|(n, _, _)| n).collect::<Vec<_>>(),
            "functors": m.functors.iter().map(|(n, _)| n).collect::<Vec<_>>(),
            "distributors": m.dists.iter().map(|(n, _)| n).collect::<Vec<_>>(),
            "shapes": m.shapes.iter().map(|(n, _)| n).collect::<Vec<_>>(),
            "laxfunctors": m.laxes.iter().map(|(n, _, _)| n).collect::<Vec<_>>(),
        }),
    )
}

fn cmd_compose(m: &Model, g: &str, f: &str) -> Result<Outcome, Failure> {
    match (m.functor(g), m.functor(f)) {
        (Some(gf), Some(ff)) => {
            if **gf.dom() != **ff.cod() {
                return Err(usage(format!(
                    "`{g}` does not follow `{f}`: the domain of `{g}` must be the codomain of `{f}`"
                )));
            }
            let out = functor_compose(gf, ff);
            Ok(Outcome::new(
                0,
                "compose",
                format!("functor {g} . {f}:\n{}", report::functor_text(&out)),
                json!({"kind": "functor", "result": report::functor_value(&out)}),
            ))
        }
        (None, None) => {
            let gd = want_dist(m, g).map_err(|_| kind_error(m, g))?;
            let fd = want_dist(m, f).map_err(|_| kind_error(m, f))?;
            if **gd.dom() != **fd.cod() {
                return Err(usage(format!(
                    "`{g}` does not follow `{f}`: the domain of `{g}` must be the codomain of `{f}`"
                )));
            }
            let out = dist_compose(gd, fd);
            Ok(Outcome::new(
                0,
                "compose",
                format!("distributor {g} (x) {f}:\n{}", report::dist_text(&out)),
                json!({"kind": "distributor", "result": report::dist_value(&out)}),
            ))
        }
        _ => Err(usage(format!(
            "`{g}` and `{f}` must both be functors or both be distributors"
        ))),
    }
}

fn kind_error(m: &Model, n: &str) -> Failure {
    usage(format!(
        "`{n}` is neither a functor nor a distributor (functors: {}; distributors: {})",
        names_or_none(m.functors.iter().map(|(n, _)| n)),
        names_or_none(m.dists.iter().map(|(n, _)| n)),
    ))
}

fn cmd_lift(m: &Model, g: &str, h: &str) -> Result<Outcome, Failure> {
    let gd = want_dist(m, g)?;
    let hd = want_dist(m, h)?;
    if **gd.cod() != **hd.cod() {
        return Err(usage(format!("lifting needs `{g}` and `{h}` to share their codomain")));
    }
    let out = dist_lift(gd, hd);
    Ok(Outcome::new(
        0,
        "lift",
        format!("[{g}, {h}]:\n{}", report::dist_text(&out)),
        json!({"result": report::dist_value(&out)}),
    ))
}

fn cmd_ext(m: &Model, f: &str, h: &str) -> Result<Outcome, Failure> {
    let fd = want_dist(m, f)?;
    let hd = want_dist(m, h)?;
    if **fd.dom() != **hd.dom() {
        return Err(usage(format!("extension needs `{f}` and `{h}` to share their domain")));
    }
    let out = dist_ext(fd, hd);
    Ok(Outcome::new(
        0,
        "ext",
        format!("{{{f}, {h}}}:\n{}", report::dist_text(&out)),
        json!({"result": report::dist_value(&out)}),
    ))
}

fn cmd_colim(m: &Model, theta: &str, f: &str) -> Result<Outcome, Failure> {
    let th = want_dist(m, theta)?;
    let ff = want_functor(m, f)?;
    if **th.cod() != **ff.dom() {
        return Err(usage(format!(
            "the weight `{theta}` must land in the domain of `{f}`"
        )));
    }
    match weighted_colim(th, ff) {
        Ok(g) => Ok(Outcome::new(
            0,
            "colim",
            format!("colim({theta}, {f}):\n{}", report::functor_text(&g)),
            json!({"exists": true, "result": report::functor_value(&g)}),
        )),
        Err(e) => {
            let at = th.dom().name(e.at).to_string();
            Ok(Outcome::new(
                1,
                "colim",
                format!("no colimit: not representable at {at}\n"),
                json!({"exists": false, "at": at}),
            ))
        }
    }
}

fn cmd_lim(m: &Model, phi: &str, f: &str) -> Result<Outcome, Failure> {
    let ph = want_dist(m, phi)?;
    let ff = want_functor(m, f)?;
    if **ph.dom() != **ff.dom() {
        return Err(usage(format!(
            "the weight `{phi}` must start at the domain of `{f}`"
        )));
    }
    match weighted_lim(ph, ff) {
        Ok(g) => Ok(Outcome::new(
            0,
            "lim",
            format!("lim({phi}, {f}):\n{}", report::functor_text(&g)),
            json!({"exists": true, "result": report::functor_value(&g)}),
        )),
        Err(e) => {
            let at = ph.cod().name(e.at).to_string();
            Ok(Outcome::new(
                1,
                "lim",
                format!("no limit: not representable at {at}\n"),
                json!({"exists": false, "at": at}),
            ))
        }
    }
}

fn cmd_presheaves(m: &Model, cat: &str, caps: &Caps) -> Result<Outcome, Failure> {
    let c = want_cat(m, cat)?;
    let pa = presheaf_category(c, caps).map_err(cap_failure)?;
    let q = c.base();
    let mut text = format!("{} presheaves on `{cat}`\n", pa.presheaves.len());
    let mut rows = Vec::new();
    for (i, phi) in pa.presheaves.iter().enumerate() {
        let t = q.object_name(pa.cat.type_of(i));
        let entries: Vec<(String, String)> = (0..c.object_count())
            .map(|b| (c.name(b).to_string(), q.arrow_label(phi.entry(b, 0)).to_string()))
            .collect();
        let shown =
            entries.iter().map(|(n, l)| format!("{n} -> {l}")).collect::<Vec<_>>().join(", ");
        text.push_str(&format!("  {} (type {t}): {shown}\n", pa.cat.name(i)));
        rows.push(json!({
            "name": pa.cat.name(i),
            "type": t,
            "entries": entries.iter().map(|(n, l)| json!([n, l])).collect::<Vec<_>>(),
        }));
    }
    Ok(Outcome::new(
        0,
        "presheaves",
        text,
        json!({"count": pa.presheaves.len(), "presheaves": rows}),
    ))
}

fn cmd_yoneda_check(m: &Model, cat: &str, caps: &Caps) -> Result<Outcome, Failure> {
    let c = want_cat(m, cat)?;
    let pa = presheaf_category(c, caps).map_err(cap_failure)?;
    let y = yoneda(&pa);
    for a in 0..c.object_count() {
        for (i, phi) in pa.presheaves.iter().enumerate() {
            let lhs = pa.cat.hom_arrow(y.apply(a), i).elt;
            let rhs = phi.entry(a, 0).elt;
            if lhs != rhs {
                let text = format!(
                    "yoneda fails on `{cat}` at ({}, {})\n",
                    c.name(a),
                    pa.cat.name(i)
                );
                return Ok(Outcome::new(
                    1,
                    "yoneda-check",
                    text,
                    json!({"holds": false, "at": [c.name(a), pa.cat.name(i)]}),
                ));
            }
        }
    }
    Ok(Outcome::new(
        0,
        "yoneda-check",
        format!(
            "yoneda holds on `{cat}`: {} objects, {} presheaves\n",
            c.object_count(),
            pa.presheaves.len()
        ),
        json!({"holds": true, "objects": c.object_count(), "presheaves": pa.presheaves.len()}),
    ))
}

fn cmd_kan(
    m: &Model,
    f: &str,
    g: &str,
    bruteforce: bool,
    right: bool,
    caps: &Caps,
) -> Result<Outcome, Failure> {
    let ff = want_functor(m, f)?;
    let gf = want_functor(m, g)?;
    if **ff.dom() != **gf.dom() {
        return Err(usage(format!("`{f}` and `{g}` must share their domain")));
    }
    let verbword = if right { "right" } else { "left" };
    let point = if right {
        kan_ext_pointwise_right(ff, gf)
    } else {
        kan_ext_pointwise_left(ff, gf)
    };
    let mut agree = None;
    if bruteforce {
        let brute = if right {
            kan_ext_bruteforce_right(ff, gf, caps)
        } else {
            kan_ext_bruteforce_left(ff, gf, caps)
        }
        .map_err(cap_failure)?;
        agree = Some(match (&point, &brute) {
            (Ok(p), Some(b)) => p == b,
            (Err(_), None) => true,
            _ => false,
        });
    }
    let disagreement = agree == Some(false);
    match point {
        Ok(k) => {
            let exit = if disagreement { 1 } else { 0 };
            let mut text =
                format!("{verbword} kan extension of {f} along {g}:\n{}", report::functor_text(&k));
            if let Some(a) = agree {
                text.push_str(&format!("bruteforce agrees: {}\n", if a { "yes" } else { "NO" }));
            }
            Ok(Outcome::new(
                exit,
                "kan",
                text,
                json!({
                    "exists": true,
                    "side": verbword,
                    "result": report::functor_value(&k),
                    "bruteforce_agrees": agree,
                }),
            ))
        }
        Err(e) => {
            let at = gf.cod().name(e.at).to_string();
            let mut text = format!("no {verbword} kan extension: not representable at {at}\n");
            if let Some(a) = agree {
                text.push_str(&format!("bruteforce agrees: {}\n", if a { "yes" } else { "NO" }));
            }
            Ok(Outcome::new(
                1,
                "kan",
                text,
                json!({"exists": false, "side": verbword, "at": at, "bruteforce_agrees": agree}),
            ))
        }
    }
}

fn cmd_cocomplete(m: &Model, cat: &str, caps: &Caps) -> Result<Outcome, Failure> {
    let c = want_cat(m, cat)?;
    let cert = is_cocomplete(c, caps).map_err(cap_failure)?;
    if cert.holds {
        Ok(Outcome::new(
            0,
            "cocomplete",
            format!("`{cat}` is cocomplete\n"),
            json!({"cocomplete": true}),
        ))
    } else {
        let failing = cert.failing.expect("a failing weight accompanies a negative answer");
        Ok(Outcome::new(
            1,
            "cocomplete",
            format!(
                "`{cat}` is not cocomplete; a weight with no colimit:\n{}",
                report::dist_text(&failing)
            ),
            json!({"cocomplete": false, "failing": report::dist_value(&failing)}),
        ))
    }
}

fn cmd_cauchy_complete(m: &Model, cat: &str, caps: &Caps) -> Result<Outcome, Failure> {
    let c = want_cat(m, cat)?;
    let cc = cauchy_completion(c, caps).map_err(cap_failure)?;
    let text = format!(
        "cauchy completion of `{cat}`: {} objects\n{}inclusion:\n{}",
        cc.cat.object_count(),
        report::category_text(&cc.cat),
        report::functor_text(&cc.i),
    );
    Ok(Outcome::new(
        0,
        "cauchy-complete",
        text,
        json!({
            "objects": cc.cat.object_count(),
            "category": report::category_value(&cc.cat),
            "inclusion": report::functor_value(&cc.i),
        }),
    ))
}

fn cmd_cauchy_test(m: &Model, cat: &str, caps: &Caps) -> Result<Outcome, Failure> {
    let c = want_cat(m, cat)?;
    let cert = is_cauchy_complete(c, caps).map_err(cap_failure)?;
    if cert.holds {
        Ok(Outcome::new(
            0,
            "cauchy-test",
            format!("`{cat}` is cauchy complete\n"),
            json!({"cauchy_complete": true}),
        ))
    } else {
        let failing = cert.failing.expect("a failing weight accompanies a negative answer");
        Ok(Outcome::new(
            1,
            "cauchy-test",
            format!(
                "`{cat}` is not cauchy complete; an unrepresented weight:\n{}",
                report::dist_text(&failing)
            ),
            json!({"cauchy_complete": false, "failing": report::dist_value(&failing)}),
        ))
    }
}

fn cmd_morita(m: &Model, a: &str, b: &str, caps: &Caps) -> Result<Outcome, Failure> {
    let ca = want_cat(m, a)?;
    let cb = want_cat(m, b)?;
    if **ca.base() != **cb.base() {
        return Err(usage(format!("`{a}` and `{b}` must live over the same quantaloid")));
    }
    let compl_a = cauchy_completion(ca, caps).map_err(cap_failure)?;
    let compl_b = cauchy_completion(cb, caps).map_err(cap_failure)?;
    let cert = morita_equivalent(ca, cb, caps).map_err(cap_failure)?;
    if cert.equivalent {
        let map = cert.object_map.expect("an equivalence carries its bijection");
        let pairs: Vec<(String, String)> = map
            .iter()
            .enumerate()
            .map(|(i, &j)| (compl_a.cat.name(i).to_string(), compl_b.cat.name(j).to_string()))
            .collect();
        let phi = cert.phi.expect("an equivalence carries its witness");
        let psi = cert.psi.expect("an equivalence carries its witness");
        let mut text = format!("`{a}` and `{b}` are Morita equivalent\n");
        for (x, y) in &pairs {
            text.push_str(&format!("  {x} <-> {y}\n"));
        }
        Ok(Outcome::new(
            0,
            "morita",
            text,
            json!({
                "equivalent": true,
                "object_map": pairs.iter().map(|(x, y)| json!([x, y])).collect::<Vec<_>>(),
                "phi": report::dist_value(&phi),
                "psi": report::dist_value(&psi),
            }),
        ))
    } else {
        Ok(Outcome::new(
            1,
            "morita",
            format!(
                "`{a}` and `{b}` are not Morita equivalent (completions have {} and {} objects)\n",
                compl_a.cat.object_count(),
                compl_b.cat.object_count()
            ),
            json!({
                "equivalent": false,
                "completion_sizes": [compl_a.cat.object_count(), compl_b.cat.object_count()],
            }),
        ))
    }
}

fn cmd_base_suite(
    m: &Model,
    suite: &str,
    base: Option<&str>,
    caps: &Caps,
    seed: u64,
) -> Result<Outcome, Failure> {
    if let Some(b) = base {
        if m.base(b).is_none() {
            return Err(usage(format!(
                "unknown quantaloid `{b}` (declared: {})",
                names_or_none(m.bases.iter().map(|(n, _)| n))
            )));
        }
    }
    let corpus = corpus_of_model(m, seed, base);
    let ctx = SuiteCtx { corpus: &corpus, caps: caps.clone(), seed };
    let rep = run_suite(suite, &ctx).expect("the matrix suites are registered");
    let exit = if rep.all_pass() { 0 } else { 1 };
    Ok(Outcome::new(exit, suite, report::laws_text(&rep), report::laws_value(&rep)))
}

fn cmd_dsum(m: &Model, cats: &[String]) -> Result<Outcome, Failure> {
    let mut sets = Vec::with_capacity(cats.len());
    let mut base: Option<Arc<quantakit::quantaloid::Quantaloid>> = None;
    for n in cats {
        let c = want_cat(m, n)?;
        match &base {
            None => base = Some(c.base().clone()),
            Some(q) => {
                if **q != **c.base() {
                    return Err(usage("all summands must live over the same quantaloid".to_string()));
                }
            }
        }
        sets.push(c.objects().clone());
    }
    let q = base.expect("at least one summand");
    let ds = direct_sum(&q, &sets);
    let mut text = format!("direct sum of {} families: {} objects\n", sets.len(), ds.obj.len());
    for i in 0..ds.obj.len() {
        text.push_str(&format!(
            "  {} : {}\n",
            ds.obj.names[i],
            q.object_name(ds.obj.types[i])
        ));
    }
    Ok(Outcome::new(
        0,
        "dsum",
        text,
        json!({
            "objects": (0..ds.obj.len())
                .map(|i| json!([ds.obj.names[i], q.object_name(ds.obj.types[i])]))
                .collect::<Vec<_>>(),
            "p": ds.p.iter().map(report::matrix_value).collect::<Vec<_>>(),
            "s": ds.s.iter().map(report::matrix_value).collect::<Vec<_>>(),
        }),
    ))
}

fn cmd_split(m: &Model, phi: &str) -> Result<Outcome, Failure> {
    let ph = want_dist(m, phi)?;
    if **ph.dom() != **ph.cod() {
        return Err(usage(format!("`{phi}` must be an endo-distributor on one category")));
    }
    let w = MatrQ(ph.base().clone());
    let bim = bimodule_of_dist(ph)
        .map_err(|e| usage(format!("`{phi}` does not carry a bimodule: {e}")))?;
    match split_monad(&w, &bim) {
        Ok(sp) => {
            let text = format!(
                "split of `{phi}`: new object carried by the monad itself\nmonad:\n{}",
                report::matrix_text(&sp.obj.t)
            );
            Ok(Outcome::new(
                0,
                "split",
                text,
                json!({
                    "object": report::matrix_value(&sp.obj.t),
                    "p": report::matrix_value(&sp.p.b),
                    "s": report::matrix_value(&sp.s.b),
                }),
            ))
        }
        Err(e) => Err(usage(format!(
            "`{phi}` is not a monad on its category: {e}; it needs the category below it and to absorb itself"
        ))),
    }
}

fn cmd_lax_colim(m: &Model, f: &str, caps: &Caps) -> Result<Outcome, Failure> {
    let lf = want_lax(m, f)?;
    let colim = lax_colimit_in_dist(lf);
    let apexes = default_apexes(lf.base());
    let ok = verify_lax_universality(lf, &colim, ConeSide::Colimit, &apexes, caps).map_err(
        |e| match e {
            MatrixCalcError::Cap(c) => Failure::Cap(c.to_string()),
            other => usage(other.to_string()),
        },
    )?;
    let note = format!(
        "universality checked over {} sampled apexes (the one-object categories of the base), not over every object of the distributor quantaloid",
        apexes.len()
    );
    let text = format!(
        "lax colimit of `{f}`:\n{}{}\nnote: {note}\n",
        report::category_text(&colim.cat),
        if ok { "universality: holds on the sampled apexes" } else { "universality: FAILS" },
    );
    Ok(Outcome::new(
        if ok { 0 } else { 1 },
        "lax-colim",
        text,
        json!({
            "category": report::category_value(&colim.cat),
            "s": colim.s.iter().map(report::dist_value).collect::<Vec<_>>(),
            "p": colim.p.iter().map(report::dist_value).collect::<Vec<_>>(),
            "universality": {"holds": ok, "sampled_apexes": apexes.len(), "note": note},
        }),
    ))
}

fn cmd_laws(m: &Model, suite: Option<&str>, caps: &Caps, seed: u64) -> Result<Outcome, Failure> {
    let corpus = corpus_of_model(m, seed, None);
    let ctx = SuiteCtx { corpus: &corpus, caps: caps.clone(), seed };
    let rep = match suite {
        Some(name) => run_suite(name, &ctx).ok_or_else(|| {
            usage(format!(
                "unknown suite `{name}` (available: {})",
                suites().iter().map(|s| s.name).collect::<Vec<_>>().join(", ")
            ))
        })?,
        None => run_all(&ctx),
    };
    let exit = if rep.all_pass() { 0 } else { 1 };
    Ok(Outcome::new(exit, "laws", report::laws_text(&rep), report::laws_value(&rep)))
}
