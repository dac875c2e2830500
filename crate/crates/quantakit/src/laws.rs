//! Executable law suites.
//!
//! Every suite checks one proposition of the calculus against a corpus
//! of finite instances: exhaustively where enumeration fits under the
//! configured caps, on seeded deterministic samples otherwise. A suite
//! produces [`LawRow`]s — one per sub-law and instance, each carrying a
//! human-readable anchor formula and, on failure, a concrete
//! counterexample description. Checks that cannot run on an instance
//! (an enumeration would exceed the caps) are recorded as warnings,
//! never as passes.
//!
//! All equalities are exact: lattice elements are compared by index,
//! distributors and functors entrywise, with no tolerances anywhere.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cauchy::{
    cauchy_colim_check, cauchy_completion, check_self_equivalence_in_dist, converges_to,
    is_cauchy_complete, is_cauchy_copresheaf, is_cauchy_distributor, is_cauchy_presheaf,
    morita_equivalent,
};
use crate::completion::{
    copresheaf_category, enumerate_copresheaves, enumerate_presheaves, free_cocompletion_factor,
    is_cocomplete, is_complete, kan_ext_bruteforce_left, kan_ext_bruteforce_right,
    kan_ext_pointwise_left, left_adjoint_via_kan, presheaf_category, right_adjoint_via_kan,
    sup_of_functors, weighted_colim, weighted_lim, yoneda, yoneda_cov, CapExceeded, Caps,
    PresheafCategory,
};
use crate::corpus::{Corpus, CorpusBase};
use crate::enriched::{
    check_dist_adjunction, dist_bottom, dist_compose, dist_ext, dist_leq, dist_lift, dist_sup,
    dist_sup_all, enumerate_distributors, enumerate_functors, essentially_surjective,
    fully_faithful, functor_adjoint_pair, functor_compose, functor_iso, functor_leq, graph_left,
    graph_right, identity_dist, identity_functor, is_equivalence, opposite_category,
    opposite_distributor, opposite_functor, skeletal_quotient, unit_category, Distributor,
    QCategory, QFunctor, TypedSet,
};
use crate::lattice::Elt;
use crate::matrixcalc::{
    bim_compose, bim_identity, default_apexes, direct_sum, dist_equals_bim_matr,
    enumerate_bim_monads_over, enumerate_lax_transfos, enumerate_matrices, enumerate_monads,
    enumerate_oplax_transfos, identity_transfo, is_lax_transfo, is_oplax_transfo,
    lax_colimit_in_dist, matr_bottom, matr_compose, matr_identity, matr_leq, matr_sup,
    matrix_of_category, monad_of_category, opposite_lax_functor, split_monad, transfo_compose,
    transfo_sup, verify_lax_universality, BaseQ, Bimod, BimQ, ConeSide, FinCat, LaxFunctor, MatrQ,
    Monad, QMatrix, Quantaloidal,
};
use crate::quantaloid::{QArrow, Quantaloid};

/// One checked sub-law on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawRow {
    /// Stable row id, `"<suite>.<n>"` or just `"<suite>"`.
    pub law: String,
    /// The formula the row checks, for display.
    pub anchor: &'static str,
    /// Corpus instance the row ran on, e.g. `"bool2/chain2"`.
    pub instance: String,
    pub pass: bool,
    /// First counterexample found, or a note on how the row sampled.
    pub detail: Option<String>,
}

/// The outcome of running one or more suites.
#[derive(Debug, Clone, Default)]
pub struct LawReport {
    /// Rows in canonical order: sorted by `(law, instance)`.
    pub rows: Vec<LawRow>,
    /// Checks that could not run (cap exceeded, missing data).
    pub warnings: Vec<String>,
}

impl LawReport {
    pub fn new() -> LawReport {
        LawReport::default()
    }

    pub fn row(
        &mut self,
        law: &str,
        anchor: &'static str,
        instance: &str,
        pass: bool,
        detail: Option<String>,
    ) {
        self.rows.push(LawRow {
            law: law.to_string(),
            anchor,
            instance: instance.to_string(),
            pass,
            detail,
        });
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        self.warnings.push(msg.into());
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    fn finish(&mut self) {
        self.rows
            .sort_by(|x, y| (x.law.as_str(), x.instance.as_str()).cmp(&(y.law.as_str(), y.instance.as_str())));
        self.warnings.sort();
        self.warnings.dedup();
    }
}

/// Shared inputs for a suite run.
pub struct SuiteCtx<'a> {
    pub corpus: &'a Corpus,
    pub caps: Caps,
    /// Seed for all sampled checks; same seed, same report.
    pub seed: u64,
}

/// A registered law suite.
pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    run: fn(&SuiteCtx<'_>, &mut LawReport),
}

/// All registered suites, in dependency order.
pub fn suites() -> &'static [Suite] {
    SUITES
}

/// Run one suite by name; `None` if the name is not registered.
pub fn run_suite(name: &str, ctx: &SuiteCtx<'_>) -> Option<LawReport> {
    let suite = SUITES.iter().find(|s| s.name == name)?;
    let mut rep = LawReport::new();
    if ctx.corpus.bases.is_empty() {
        rep.warn("empty corpus: nothing to check");
    }
    (suite.run)(ctx, &mut rep);
    rep.finish();
    Some(rep)
}

/// Run every registered suite into one report.
pub fn run_all(ctx: &SuiteCtx<'_>) -> LawReport {
    let mut rep = LawReport::new();
    if ctx.corpus.bases.is_empty() {
        rep.warn("empty corpus: nothing to check");
    }
    for s in SUITES {
        (s.run)(ctx, &mut rep);
    }
    rep.finish();
    rep
}

const SUITES: &[Suite] = &[
    Suite { name: "lemma04", about: "residuation calculus in the base quantaloid", run: lemma04 },
    Suite { name: "def3", about: "distributors are matrices closed under both hom actions", run: def3 },
    Suite { name: "prop4", about: "Dist(Q) is a quantaloid", run: prop4 },
    Suite { name: "prop6", about: "graph adjunctions F* ⊣ F^* in Dist", run: prop6 },
    Suite { name: "prop8", about: "graphs are functorial order embeddings", run: prop8 },
    Suite { name: "prop10", about: "adjunctions and equivalences through graphs", run: prop10 },
    Suite { name: "prop92", about: "equivalences are the invertible-up-to-iso functors", run: prop92 },
    Suite { name: "prop95", about: "skeletal quotients", run: prop95 },
    Suite { name: "prop337", about: "opposites of categories, functors and distributors", run: prop337 },
    Suite { name: "prop482", about: "fully faithful adjoints", run: prop482 },
    Suite { name: "prop102", about: "presheaf categories and transposes", run: prop102 },
    Suite { name: "prop104", about: "the Yoneda lemma", run: prop104 },
    Suite { name: "prop107", about: "presheaf categories are cocomplete", run: prop107 },
    Suite { name: "prop109", about: "presheaves are colimits of representables", run: prop109 },
    Suite { name: "lemma110", about: "weighted colimit calculus", run: lemma110 },
    Suite { name: "cor111", about: "colimits along identities; pointwise sups of functors", run: cor111 },
    Suite { name: "prop114", about: "graph weights are absolute", run: prop114 },
    Suite { name: "prop116", about: "adjoints, cocontinuity, transfer of cocompleteness", run: prop116 },
    Suite { name: "prop122", about: "free cocompletion: factorization through PA", run: prop122 },
    Suite { name: "prop127", about: "adjoint functor theorem via Kan extensions", run: prop127 },
    Suite { name: "prop129", about: "cocomplete iff Yoneda has a left adjoint", run: prop129 },
    Suite { name: "prop132", about: "Dist(A,B) as cocontinuous functors PA → PB", run: prop132 },
    Suite { name: "prop1004", about: "limits from colimits by conjugation", run: prop1004 },
    Suite { name: "prop1005", about: "complete iff cocomplete", run: prop1005 },
    Suite { name: "prop134", about: "Cauchy distributors and convergence", run: prop134 },
    Suite { name: "prop139", about: "the Cauchy completion and its embeddings", run: prop139 },
    Suite { name: "prop146", about: "the Cauchy completion is Cauchy complete", run: prop146 },
    Suite { name: "prop147", about: "Cauchy completeness via colimits and limits", run: prop147 },
    Suite { name: "prop148", about: "extension along the completion embedding", run: prop148 },
    Suite { name: "prop150", about: "A ≃ A_cc in Dist; equivalence iff Cauchy complete", run: prop150 },
    Suite { name: "prop155", about: "Morita equivalence", run: prop155 },
    Suite { name: "matr", about: "the quantaloid of matrices", run: matr },
    Suite { name: "prop25", about: "direct sums in Matr(Q)", run: prop25 },
    Suite { name: "bim", about: "monads and bimodules", run: bim },
    Suite { name: "prop38", about: "monads split in Bim(Q)", run: prop38 },
    Suite { name: "def9", about: "lax functors and their transformations", run: def9 },
    Suite { name: "prop19", about: "lax cones as fixed points of a monad", run: prop19 },
    Suite { name: "prop40", about: "lax (co)limits of lax functors in Dist", run: prop40 },
];

// ---------------------------------------------------------------------------
// Row bookkeeping and sampling helpers.

/// Accumulates one row's verdict, keeping the first counterexample.
struct Check {
    pass: bool,
    detail: Option<String>,
}

impl Check {
    fn new() -> Check {
        Check { pass: true, detail: None }
    }

    fn require(&mut self, cond: bool, detail: impl FnOnce() -> String) {
        if self.pass && !cond {
            self.pass = false;
            self.detail = Some(detail());
        }
    }

    fn done(self, rep: &mut LawReport, law: &str, anchor: &'static str, instance: &str) {
        rep.row(law, anchor, instance, self.pass, self.detail);
    }
}

fn warn_cap(rep: &mut LawReport, law: &str, instance: &str, e: &CapExceeded) {
    rep.warn(format!("{law} skipped on {instance}: {e}"));
}

fn salt(tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn suite_rng(ctx: &SuiteCtx<'_>, tag: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.seed ^ salt(tag))
}

/// At most `max` entries, spread evenly across the input order.
fn evenly<T: Clone>(v: &[T], max: usize) -> Vec<T> {
    if v.len() <= max {
        return v.to_vec();
    }
    (0..max).map(|i| v[i * v.len() / max].clone()).collect()
}

fn partner<'c>(cb: &'c CorpusBase, i: usize, step: usize) -> (&'c str, &'c Arc<QCategory>) {
    let (n, c) = &cb.cats[(i + step) % cb.cats.len()];
    (n.as_str(), c)
}

/// Close an arbitrary in-range matrix under both hom actions:
/// `closed(b, a) = ⋁ B(b,b′) ∘ raw(b′,a′) ∘ A(a′,a)`. The result always
/// contains `raw` and is the least distributor above it.
fn close_mat(a: &Arc<QCategory>, b: &Arc<QCategory>, raw: &[Elt]) -> Vec<Elt> {
    let q = a.base();
    let (na, nb) = (a.object_count(), b.object_count());
    let mut out = Vec::with_capacity(na * nb);
    for b1 in 0..nb {
        for a0 in 0..na {
            let terms = (0..nb).flat_map(|bp| (0..na).map(move |ap| (bp, ap))).map(|(bp, ap)| {
                let mid = QArrow { src: a.type_of(ap), tgt: b.type_of(bp), elt: raw[bp * na + ap] };
                q.compose(q.compose(b.hom_arrow(b1, bp), mid), a.hom_arrow(ap, a0))
            });
            out.push(q.join_arrows(a.type_of(a0), b.type_of(b1), terms).elt);
        }
    }
    out
}

/// A seeded random distributor `A ⇸ B`: a random in-range matrix,
/// closed under the hom actions.
fn random_dist(a: &Arc<QCategory>, b: &Arc<QCategory>, r: &mut ChaCha8Rng) -> Distributor {
    let q = a.base();
    let (na, nb) = (a.object_count(), b.object_count());
    let raw: Vec<Elt> = (0..na * nb)
        .map(|i| {
            let (b1, a0) = (i / na, i % na);
            r.gen_range(0..q.hom(a.type_of(a0), b.type_of(b1)).len())
        })
        .collect();
    Distributor::new(Arc::clone(a), Arc::clone(b), close_mat(a, b, &raw))
        .expect("closing an in-range matrix yields a distributor")
}

/// All distributors `A ⇸ B` when enumeration fits the caps, otherwise
/// `max_random` seeded closures.
fn dists_or_sample(
    ctx: &SuiteCtx<'_>,
    dom: &Arc<QCategory>,
    cod: &Arc<QCategory>,
    max_random: usize,
    r: &mut ChaCha8Rng,
) -> Vec<Distributor> {
    match enumerate_distributors(dom, cod, &ctx.caps) {
        Ok(v) => v,
        Err(_) => (0..max_random).map(|_| random_dist(dom, cod, r)).collect(),
    }
}

/// All functors `A → B` when enumeration fits, otherwise up to
/// `max_random` distinct seeded ones found by rejection.
fn functors_or_sample(
    ctx: &SuiteCtx<'_>,
    dom: &Arc<QCategory>,
    cod: &Arc<QCategory>,
    max_random: usize,
    r: &mut ChaCha8Rng,
) -> Vec<QFunctor> {
    match enumerate_functors(dom, cod, &ctx.caps) {
        Ok(v) => v,
        Err(_) => {
            let (nd, nc) = (dom.object_count(), cod.object_count());
            let mut out: Vec<QFunctor> = Vec::new();
            for _ in 0..max_random.saturating_mul(40) {
                if out.len() >= max_random {
                    break;
                }
                let map: Vec<usize> = (0..nd).map(|_| r.gen_range(0..nc)).collect();
                if let Ok(f) = QFunctor::new(Arc::clone(dom), Arc::clone(cod), map) {
                    if !out.contains(&f) {
                        out.push(f);
                    }
                }
            }
            out
        }
    }
}

/// Presheaves on `cat` over every base type: enumerated when possible,
/// else seeded closures of random columns.
fn sample_presheaves(
    ctx: &SuiteCtx<'_>,
    cat: &Arc<QCategory>,
    max: usize,
    r: &mut ChaCha8Rng,
) -> Vec<Distributor> {
    let q = cat.base();
    let mut out = Vec::new();
    for t in 0..q.object_count() {
        match enumerate_presheaves(cat, t, &ctx.caps) {
            Ok(v) => out.extend(v),
            Err(_) => {
                for _ in 0..max {
                    let col: Vec<Elt> = (0..cat.object_count())
                        .map(|a1| r.gen_range(0..q.hom(t, cat.type_of(a1)).len()))
                        .collect();
                    out.push(crate::completion::close_presheaf(cat, t, &col));
                }
            }
        }
    }
    evenly(&out, max)
}

/// Copresheaves on `cat`, dual to [`sample_presheaves`].
fn sample_copresheaves(
    ctx: &SuiteCtx<'_>,
    cat: &Arc<QCategory>,
    max: usize,
    r: &mut ChaCha8Rng,
) -> Vec<Distributor> {
    let q = cat.base();
    let mut out = Vec::new();
    for t in 0..q.object_count() {
        match enumerate_copresheaves(cat, t, &ctx.caps) {
            Ok(v) => out.extend(v),
            Err(_) => {
                for _ in 0..max {
                    let row: Vec<Elt> = (0..cat.object_count())
                        .map(|a0| r.gen_range(0..q.hom(cat.type_of(a0), t).len()))
                        .collect();
                    out.push(crate::completion::close_copresheaf(cat, t, &row));
                }
            }
        }
    }
    evenly(&out, max)
}

/// The representable presheaf `A(−, a)` as a distributor from the unit
/// category of `a`'s type.
fn representable(cat: &Arc<QCategory>, a: usize) -> Distributor {
    let unit = unit_category(cat.base(), cat.type_of(a));
    let mat = (0..cat.object_count()).map(|a1| cat.hom_arrow(a1, a).elt).collect();
    Distributor::new(unit, Arc::clone(cat), mat).expect("representable columns are presheaves")
}

/// The corepresentable copresheaf `A(a, −)`.
fn corepresentable(cat: &Arc<QCategory>, a: usize) -> Distributor {
    let unit = unit_category(cat.base(), cat.type_of(a));
    let mat = (0..cat.object_count()).map(|a0| cat.hom_arrow(a, a0).elt).collect();
    Distributor::new(Arc::clone(cat), unit, mat).expect("corepresentable rows are copresheaves")
}

/// One column of a distributor, as a presheaf on its codomain.
fn dist_column(phi: &Distributor, c: usize) -> Distributor {
    let cod = phi.cod();
    let unit = unit_category(phi.base(), phi.dom().type_of(c));
    let mat = (0..cod.object_count()).map(|b1| phi.entry(b1, c).elt).collect();
    Distributor::new(unit, Arc::clone(cod), mat).expect("columns of a distributor are presheaves")
}

fn set_eq(xs: &[Vec<Elt>], ys: &[Vec<Elt>]) -> bool {
    let mut a = xs.to_vec();
    let mut b = ys.to_vec();
    a.sort();
    b.sort();
    a == b
}

/// A random matrix between typed sets whose element types are given
/// alongside (the sets themselves do not expose them).
fn random_matrix(
    q: &Arc<Quantaloid>,
    dom: &TypedSet,
    dom_t: &[usize],
    cod: &TypedSet,
    cod_t: &[usize],
    r: &mut ChaCha8Rng,
) -> QMatrix {
    let mat: Vec<Elt> = (0..dom.len() * cod.len())
        .map(|i| {
            let (y, x) = (i / dom.len(), i % dom.len());
            r.gen_range(0..q.hom(dom_t[x], cod_t[y]).len())
        })
        .collect();
    QMatrix::new(Arc::clone(q), dom.clone(), cod.clone(), mat)
        .expect("in-range matrices are valid")
}

/// Deterministic lax functors into `base`, cycling through the stock
/// shapes. Rejection-sampled; falls back to a constant-identity
/// assignment, which is always lax.
pub fn seeded_lax_functors(base: &Arc<Quantaloid>, seed: u64, count: usize) -> Vec<LaxFunctor> {
    let shapes = [
        FinCat::point(),
        FinCat::walking_arrow(),
        FinCat::parallel_pair(),
        FinCat::discrete(2),
    ];
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let shape = &shapes[i % shapes.len()];
        let mut found = None;
        for _ in 0..400 {
            let ob: Vec<usize> =
                (0..shape.object_count()).map(|_| r.gen_range(0..base.object_count())).collect();
            let ar: Vec<Elt> = (0..shape.arrow_count())
                .map(|ai| {
                    let arr = shape.arrow(ai);
                    r.gen_range(0..base.hom(ob[arr.src], ob[arr.tgt]).len())
                })
                .collect();
            if let Ok(f) = LaxFunctor::new(shape.clone(), Arc::clone(base), ob, ar) {
                found = Some(f);
                break;
            }
        }
        out.push(found.unwrap_or_else(|| {
            let x = r.gen_range(0..base.object_count());
            let ob = vec![x; shape.object_count()];
            let ar = vec![base.id(x).elt; shape.arrow_count()];
            LaxFunctor::new(shape.clone(), Arc::clone(base), ob, ar)
                .expect("the constant identity assignment is lax")
        }));
    }
    out
}

/// How cocompleteness of a presheaf category was certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PaCocompleteness {
    /// The certificate ran directly on `PA` within the caps.
    Direct(bool),
    /// `PA` was too large to certify directly; the colimit formula was
    /// checked on this many seeded weighted diagrams instead.
    Sampled { samples: usize, pass: bool },
}

impl PaCocompleteness {
    pub fn holds(&self) -> bool {
        match self {
            PaCocompleteness::Direct(b) => *b,
            PaCocompleteness::Sampled { pass, .. } => *pass,
        }
    }
}

/// Certify that `PA` is cocomplete: directly when `P(PA)` fits under
/// the caps, otherwise by checking `colim(Θ, F) = Θ-composite of
/// transposes` on seeded weights and diagrams.
pub fn presheaf_cocompleteness(
    cat: &Arc<QCategory>,
    caps: &Caps,
    seed: u64,
    samples: usize,
) -> Result<PaCocompleteness, CapExceeded> {
    let pa = presheaf_category(cat, caps)?;
    if let Ok(cert) = is_cocomplete(&pa.cat, caps) {
        return Ok(PaCocompleteness::Direct(cert.holds));
    }
    let mut r = ChaCha8Rng::seed_from_u64(seed ^ salt("presheaf cocompleteness"));
    let base = cat.base();
    let mut pass = true;
    let mut done = 0;
    while done < samples && pass {
        let c: Arc<QCategory> = if done % 2 == 0 {
            unit_category(base, (done / 2) % base.object_count())
        } else {
            Arc::clone(cat)
        };
        let d: Arc<QCategory> = if done % 4 < 2 {
            unit_category(base, (done / 4) % base.object_count())
        } else {
            Arc::clone(cat)
        };
        let theta = random_dist(&d, &c, &mut r);
        let f = pa.functor_from_dist(&random_dist(&c, cat, &mut r));
        pass &= weighted_colim(&theta, &f).ok().as_ref() == Some(&pa.pa_weighted_colim(&theta, &f));
        done += 1;
    }
    Ok(PaCocompleteness::Sampled { samples: done, pass })
}

// ---------------------------------------------------------------------------
// Base-level suites.

fn lemma04(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let q = cb.base.as_ref();
        let inst = cb.name.as_str();
        let n = q.object_count();
        let at = |f: QArrow, h: QArrow| format!("at ({}, {})", q.format_arrow(f), q.format_arrow(h));

        let mut c = Check::new();
        for a in 0..n {
            for b in 0..n {
                for z in 0..n {
                    for g in q.arrows(b, z) {
                        for h in q.arrows(a, z) {
                            let l = q.lift(g, h);
                            let sup = q.join_arrows(
                                a,
                                b,
                                q.arrows(a, b).filter(|&x| q.leq_arrow(q.compose(g, x), h)),
                            );
                            c.require(l == sup, || at(g, h));
                            c.require(
                                q.arrows(a, b)
                                    .all(|x| q.leq_arrow(q.compose(g, x), h) == q.leq_arrow(x, l)),
                                || at(g, h),
                            );
                        }
                    }
                    for f in q.arrows(a, b) {
                        for h in q.arrows(a, z) {
                            let e = q.ext(f, h);
                            let sup = q.join_arrows(
                                b,
                                z,
                                q.arrows(b, z).filter(|&y| q.leq_arrow(q.compose(y, f), h)),
                            );
                            c.require(e == sup, || at(f, h));
                            c.require(
                                q.arrows(b, z)
                                    .all(|y| q.leq_arrow(q.compose(y, f), h) == q.leq_arrow(y, e)),
                                || at(f, h),
                            );
                        }
                    }
                }
            }
        }
        c.done(rep, "lemma04.1", "[g,h] = ⋁{x : g∘x ≤ h} and {f,h} = ⋁{y : y∘f ≤ h}", inst);

        let mut c = Check::new();
        for a in 0..n {
            for b in 0..n {
                for f in q.arrows(a, b) {
                    for g in q.arrows(b, a) {
                        let adj = q.is_adjoint_pair(f, g);
                        let via_lift =
                            (0..n).all(|z| q.arrows(z, b).all(|x| q.compose(g, x) == q.lift(f, x)));
                        let via_ext =
                            (0..n).all(|z| q.arrows(b, z).all(|y| q.compose(y, f) == q.ext(g, y)));
                        c.require(adj == via_lift && adj == via_ext, || at(f, g));
                    }
                }
            }
        }
        c.done(rep, "lemma04.2", "f ⊣ g ⟺ g∘(−) = [f,−] ⟺ (−)∘f = {g,−}", inst);

        let mut c = Check::new();
        for a in 0..n {
            for b in 0..n {
                for f in q.arrows(a, b) {
                    let searched = q.arrows(b, a).find(|&g| q.is_adjoint_pair(f, g));
                    let candidate = q.lift(f, q.id(b));
                    c.require(q.right_adjoint_of(f) == searched, || at(f, candidate));
                    c.require(searched.is_some() == q.is_adjoint_pair(f, candidate), || {
                        at(f, candidate)
                    });
                    if let Some(g) = searched {
                        c.require(g == candidate, || at(f, g));
                    }
                }
                for g in q.arrows(b, a) {
                    let searched = q.arrows(a, b).find(|&f| q.is_adjoint_pair(f, g));
                    let candidate = q.ext(g, q.id(b));
                    c.require(q.left_adjoint_of(g) == searched, || at(g, candidate));
                    c.require(searched.is_some() == q.is_adjoint_pair(candidate, g), || {
                        at(g, candidate)
                    });
                    if let Some(f) = searched {
                        c.require(f == candidate, || at(g, f));
                    }
                }
            }
        }
        c.done(
            rep,
            "lemma04.3",
            "f ⊣ g exists iff [f,1] (resp. {g,1}) works, and adjoints are unique",
            inst,
        );

        let mut c = Check::new();
        for a in 0..n {
            for b in 0..n {
                let pairs: Vec<(QArrow, QArrow)> = q
                    .arrows(a, b)
                    .filter_map(|f| q.right_adjoint_of(f).map(|g| (f, g)))
                    .collect();
                for &(f1, g1) in &pairs {
                    for &(f2, g2) in &pairs {
                        c.require(q.leq_arrow(f1, f2) == q.leq_arrow(g2, g1), || at(f1, f2));
                    }
                }
            }
        }
        c.done(rep, "lemma04.4", "taking adjoints is antitone: f ≤ f′ ⟺ g′ ≤ g", inst);

        let mut c = Check::new();
        for a in 0..n {
            for b in 0..n {
                for z in 0..n {
                    for x in q.arrows(b, z) {
                        for y in q.arrows(a, b) {
                            for h in q.arrows(a, z) {
                                let mid = q.leq_arrow(q.compose(x, y), h);
                                c.require(q.leq_arrow(y, q.lift(x, h)) == mid, || at(x, y));
                                c.require(q.leq_arrow(x, q.ext(y, h)) == mid, || at(x, y));
                            }
                        }
                    }
                }
            }
        }
        c.done(rep, "lemma04.5", "y ≤ [x,h] ⟺ x∘y ≤ h ⟺ x ≤ {y,h}", inst);

        let mut c = Check::new();
        for a in 0..n {
            for b in 0..n {
                for z in 0..n {
                    for d in 0..n {
                        for f in q.arrows(d, b) {
                            for g in q.arrows(b, z) {
                                for h in q.arrows(a, z) {
                                    c.require(
                                        q.lift(f, q.lift(g, h)) == q.lift(q.compose(g, f), h),
                                        || at(f, h),
                                    );
                                }
                            }
                        }
                        for m in q.arrows(a, b) {
                            for nn in q.arrows(a, z) {
                                for k in q.arrows(b, d) {
                                    c.require(
                                        q.ext(k, q.ext(m, nn)) == q.ext(q.compose(k, m), nn),
                                        || at(k, nn),
                                    );
                                }
                            }
                        }
                        for y in q.arrows(a, b) {
                            for zz in q.arrows(a, z) {
                                for x in q.arrows(d, z) {
                                    c.require(
                                        q.lift(x, q.ext(y, zz)) == q.ext(y, q.lift(x, zz)),
                                        || at(x, y),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        c.done(rep, "lemma04.6", "[f,[g,h]] = [g∘f,h], {k,{m,n}} = {k∘m,n}, [x,{y,z}] = {y,[x,z]}", inst);

        let mut c = Check::new();
        for a in 0..n {
            for b in 0..n {
                for f in q.arrows(a, b) {
                    c.require(q.leq_arrow(q.id(a), q.lift(f, f)), || at(f, f));
                    c.require(q.leq_arrow(q.id(b), q.ext(f, f)), || at(f, f));
                }
            }
        }
        for t in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        for f in q.arrows(z, t) {
                            for g in q.arrows(y, t) {
                                for h in q.arrows(x, t) {
                                    c.require(
                                        q.leq_arrow(
                                            q.compose(q.lift(h, g), q.lift(g, f)),
                                            q.lift(h, f),
                                        ),
                                        || at(g, f),
                                    );
                                }
                            }
                        }
                        for k in q.arrows(t, x) {
                            for l in q.arrows(t, y) {
                                for m in q.arrows(t, z) {
                                    c.require(
                                        q.leq_arrow(
                                            q.compose(q.ext(l, m), q.ext(k, l)),
                                            q.ext(k, m),
                                        ),
                                        || at(l, m),
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        c.done(rep, "lemma04.7", "[h,g]∘[g,f] ≤ [h,f], {l,m}∘{k,l} ≤ {k,m}, 1 ≤ [f,f], 1 ≤ {f,f}", inst);
    }
}

// ---------------------------------------------------------------------------
// Distributor-calculus suites.

fn def3(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (bname, b) = partner(cb, ci, 1);
            let inst = format!("{}/{}⇸{}", cb.name, cname, bname);
            let q = a.base();
            let (na, nb) = (a.object_count(), b.object_count());
            let mut r = suite_rng(ctx, &format!("def3 {inst}"));

            let mut c = Check::new();
            for _ in 0..40 {
                let raw: Vec<Elt> = (0..na * nb)
                    .map(|i| {
                        let (b1, a0) = (i / na, i % na);
                        r.gen_range(0..q.hom(a.type_of(a0), b.type_of(b1)).len())
                    })
                    .collect();
                let closed = close_mat(a, b, &raw);
                let valid = Distributor::new(Arc::clone(a), Arc::clone(b), raw.clone()).is_ok();
                c.require(valid == (closed == raw), || format!("matrix {raw:?}"));
                c.require(close_mat(a, b, &closed) == closed, || format!("closure of {raw:?} not idempotent"));
                c.require(
                    Distributor::new(Arc::clone(a), Arc::clone(b), closed.clone()).is_ok(),
                    || format!("closure of {raw:?} rejected"),
                );
                c.require(
                    raw.iter().zip(&closed).enumerate().all(|(i, (x, y))| {
                        let (b1, a0) = (i / na, i % na);
                        q.hom(a.type_of(a0), b.type_of(b1)).leq(*x, *y)
                    }),
                    || format!("closure of {raw:?} does not contain it"),
                );
            }
            c.done(
                rep,
                "def3.1",
                "Φ is a distributor ⟺ B∘Φ∘A = Φ; ⋁ B∘Φ∘A is the least distributor above Φ",
                &inst,
            );

            let idd = identity_dist(a);
            let mut c = Check::new();
            for a1 in 0..na {
                for a0 in 0..na {
                    c.require(idd.entry(a1, a0) == a.hom_arrow(a1, a0), || {
                        format!("at ({}, {})", a.name(a1), a.name(a0))
                    });
                }
            }
            c.done(rep, "def3.2", "the hom table A(−,−) is itself a distributor A ⇸ A", &format!("{}/{}", cb.name, cname));
        }
    }
}

fn prop4(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, b) = partner(cb, ci, 1);
            let (_, z) = partner(cb, ci, 2);
            let (_, d) = partner(cb, ci, 3);
            let inst = format!("{}/{}", cb.name, cname);
            let mut r = suite_rng(ctx, &format!("prop4 {inst}"));

            let ab_all = dists_or_sample(ctx, a, b, 10, &mut r);
            let ab = evenly(&ab_all, 10);
            let bc = evenly(&dists_or_sample(ctx, b, z, 6, &mut r), 6);
            let cd = evenly(&dists_or_sample(ctx, z, d, 6, &mut r), 6);
            let ac = evenly(&dists_or_sample(ctx, a, z, 6, &mut r), 6);

            let ida = identity_dist(a);
            let idb = identity_dist(b);
            let mut c = Check::new();
            for phi in &ab_all {
                c.require(&dist_compose(phi, &ida) == phi, || "Φ⊗1_A ≠ Φ".to_string());
                c.require(&dist_compose(&idb, phi) == phi, || "1_B⊗Φ ≠ Φ".to_string());
            }
            c.done(rep, "prop4.1", "Φ⊗1 = Φ = 1⊗Φ", &inst);

            let mut c = Check::new();
            for (i, phi) in ab.iter().enumerate() {
                let psi = &bc[i % bc.len()];
                let chi = &cd[i % cd.len()];
                c.require(
                    dist_compose(chi, &dist_compose(psi, phi))
                        == dist_compose(&dist_compose(chi, psi), phi),
                    || format!("associativity fails at sample {i}"),
                );
            }
            c.done(rep, "prop4.2", "Χ⊗(Ψ⊗Φ) = (Χ⊗Ψ)⊗Φ", &inst);

            let mut c = Check::new();
            for (i, psi) in bc.iter().enumerate() {
                let p1 = &ab[i % ab.len()];
                let p2 = &ab[(i + 1) % ab.len()];
                c.require(
                    dist_compose(psi, &dist_sup(p1, p2))
                        == dist_sup(&dist_compose(psi, p1), &dist_compose(psi, p2)),
                    || format!("Ψ⊗(Φ∨Φ′) fails at sample {i}"),
                );
                let q1 = &bc[(i + 1) % bc.len()];
                c.require(
                    dist_compose(&dist_sup(psi, q1), p1)
                        == dist_sup(&dist_compose(psi, p1), &dist_compose(q1, p1)),
                    || format!("(Ψ∨Ψ′)⊗Φ fails at sample {i}"),
                );
            }
            c.require(
                dist_compose(&bc[0], &dist_bottom(a, b)) == dist_bottom(a, z),
                || "⊥ not absorbed on the right".to_string(),
            );
            c.require(
                dist_compose(&dist_bottom(b, z), &ab[0]) == dist_bottom(a, z),
                || "⊥ not absorbed on the left".to_string(),
            );
            c.done(rep, "prop4.3", "⊗ preserves ⋁ and ⊥ in each variable", &inst);

            let mut c = Check::new();
            for (i, h) in ac.iter().enumerate() {
                let g = &bc[i % bc.len()];
                let f = &ab[i % ab.len()];
                let lifted = dist_lift(g, h);
                let extended = dist_ext(f, h);
                for (j, x) in ab.iter().enumerate() {
                    c.require(
                        dist_leq(&dist_compose(g, x), h) == dist_leq(x, &lifted),
                        || format!("lift adjunction fails at sample ({i},{j})"),
                    );
                }
                for (j, y) in bc.iter().enumerate() {
                    c.require(
                        dist_leq(&dist_compose(y, f), h) == dist_leq(y, &extended),
                        || format!("ext adjunction fails at sample ({i},{j})"),
                    );
                }
            }
            c.done(rep, "prop4.4", "Ψ⊗Φ ≤ Χ ⟺ Φ ≤ [Ψ,Χ] ⟺ Ψ ≤ {Φ,Χ}", &inst);
        }
    }
}

fn prop6(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            for (dname, d) in &cb.cats {
                let inst = format!("{}/{}→{}", cb.name, cname, dname);
                let mut r = suite_rng(ctx, &format!("prop6 {inst}"));
                let fs = functors_or_sample(ctx, a, d, 24, &mut r);
                let mut c = Check::new();
                for f in &fs {
                    c.require(check_dist_adjunction(&graph_left(f), &graph_right(f)), || {
                        format!("fails for functor {:?}", f.map())
                    });
                }
                c.done(rep, "prop6", "F* ⊣ F^*: B(−,F−) is left adjoint to B(F−,−) in Dist", &inst);
            }
        }
    }
}

fn prop8(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, b) = partner(cb, ci, 1);
            let (_, z) = partner(cb, ci, 2);
            let inst = format!("{}/{}", cb.name, cname);
            let mut r = suite_rng(ctx, &format!("prop8 {inst}"));
            let fs = evenly(&functors_or_sample(ctx, a, b, 12, &mut r), 12);
            let gs = evenly(&functors_or_sample(ctx, b, z, 12, &mut r), 12);

            let mut c = Check::new();
            c.require(graph_left(&identity_functor(a)) == identity_dist(a), || "1* ≠ A".to_string());
            c.require(graph_right(&identity_functor(a)) == identity_dist(a), || "1^* ≠ A".to_string());
            for (i, f) in fs.iter().enumerate() {
                if gs.is_empty() {
                    break;
                }
                let g = &gs[i % gs.len()];
                let gf = functor_compose(g, f);
                c.require(
                    graph_left(&gf) == dist_compose(&graph_left(g), &graph_left(f)),
                    || "(G∘F)* ≠ G*⊗F*".to_string(),
                );
                c.require(
                    graph_right(&gf) == dist_compose(&graph_right(f), &graph_right(g)),
                    || "(G∘F)^* ≠ F^*⊗G^*".to_string(),
                );
            }
            c.done(rep, "prop8.1", "(G∘F)* = G*⊗F*, (G∘F)^* = F^*⊗G^*, 1* = A = 1^*", &inst);

            let mut c = Check::new();
            for f in &fs {
                for g in &fs {
                    let le = functor_leq(f, g);
                    c.require(le == dist_leq(&graph_left(f), &graph_left(g)), || {
                        format!("{:?} vs {:?}", f.map(), g.map())
                    });
                    c.require(le == dist_leq(&graph_right(g), &graph_right(f)), || {
                        format!("{:?} vs {:?}", f.map(), g.map())
                    });
                }
            }
            c.done(rep, "prop8.2", "F ≤ G ⟺ F* ≤ G* ⟺ G^* ≤ F^*", &inst);
        }
    }
}

fn prop10(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            for step in [0, 1] {
                let (dname, d) = partner(cb, ci, step);
                let inst = format!("{}/{}⇄{}", cb.name, cname, dname);
                let mut r = suite_rng(ctx, &format!("prop10 {inst}"));
                let fs = evenly(&functors_or_sample(ctx, a, d, 16, &mut r), 48);
                let gs = evenly(&functors_or_sample(ctx, d, a, 16, &mut r), 48);
                let mut c1 = Check::new();
                let mut c2 = Check::new();
                for f in &fs {
                    for g in &gs {
                        let adj = functor_adjoint_pair(f, g);
                        c1.require(
                            adj == check_dist_adjunction(&graph_left(f), &graph_left(g)),
                            || format!("{:?} ⊣ {:?}", f.map(), g.map()),
                        );
                        let inv = functor_iso(&functor_compose(g, f), &identity_functor(a))
                            && functor_iso(&functor_compose(f, g), &identity_functor(d));
                        let dist_inv = dist_compose(&graph_left(g), &graph_left(f))
                            == identity_dist(a)
                            && dist_compose(&graph_left(f), &graph_left(g)) == identity_dist(d);
                        c2.require(inv == dist_inv, || format!("{:?} / {:?}", f.map(), g.map()));
                    }
                }
                c1.done(rep, "prop10.1", "F ⊣ G in Cat ⟺ F* ⊣ G* in Dist", &inst);
                c2.done(rep, "prop10.2", "G∘F ≅ 1, F∘G ≅ 1 ⟺ G*⊗F* = A and F*⊗G* = B", &inst);
            }
        }
    }
}

fn prop92(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            for step in [0, 1, 2] {
                let (dname, d) = partner(cb, ci, step);
                let inst = format!("{}/{}→{}", cb.name, cname, dname);
                let fs = match enumerate_functors(a, d, &ctx.caps) {
                    Ok(v) => v,
                    Err(e) => {
                        warn_cap(rep, "prop92", &inst, &e);
                        continue;
                    }
                };
                let gs = match enumerate_functors(d, a, &ctx.caps) {
                    Ok(v) => v,
                    Err(e) => {
                        warn_cap(rep, "prop92", &inst, &e);
                        continue;
                    }
                };
                let mut c = Check::new();
                for f in evenly(&fs, 48) {
                    let witness = gs.iter().any(|g| {
                        functor_iso(&functor_compose(g, &f), &identity_functor(a))
                            && functor_iso(&functor_compose(&f, g), &identity_functor(d))
                    });
                    c.require(is_equivalence(&f) == witness, || format!("functor {:?}", f.map()));
                }
                c.done(
                    rep,
                    "prop92",
                    "F an equivalence (ff + essentially surjective) ⟺ F invertible up to iso",
                    &inst,
                );
            }
        }
    }
}

fn prop95(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            let (skel, proj) = skeletal_quotient(a);
            let mut c = Check::new();
            c.require(skel.is_skeletal(), || "quotient not skeletal".to_string());
            c.require(fully_faithful(&proj), || "projection not fully faithful".to_string());
            c.require(is_equivalence(&proj), || "projection not an equivalence".to_string());
            c.done(rep, "prop95", "A → A/≅ is a fully faithful equivalence onto a skeleton", &inst);
        }
    }
}

fn prop337(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, b) = partner(cb, ci, 1);
            let (_, z) = partner(cb, ci, 2);
            let inst = format!("{}/{}", cb.name, cname);
            let mut r = suite_rng(ctx, &format!("prop337 {inst}"));
            let ds = evenly(&dists_or_sample(ctx, a, b, 8, &mut r), 8);
            let fs = evenly(&functors_or_sample(ctx, a, b, 8, &mut r), 8);
            let bc = evenly(&dists_or_sample(ctx, b, z, 6, &mut r), 6);

            let mut c = Check::new();
            let aop = Arc::new(opposite_category(a));
            c.require(opposite_category(&aop) == **a, || "(A^op)^op ≠ A".to_string());
            for phi in &ds {
                c.require(
                    &opposite_distributor(&opposite_distributor(phi)) == phi,
                    || "(Φ^op)^op ≠ Φ".to_string(),
                );
            }
            for f in &fs {
                c.require(
                    &opposite_functor(&opposite_functor(f)) == f,
                    || "(F^op)^op ≠ F".to_string(),
                );
            }
            c.done(rep, "prop337.1", "(−)^op is an involution on categories, functors, distributors", &inst);

            let mut c = Check::new();
            for x in &ds {
                for y in &ds {
                    c.require(
                        dist_leq(x, y) == dist_leq(&opposite_distributor(x), &opposite_distributor(y)),
                        || "Φ ≤ Ψ ⟺ Φ^op ≤ Ψ^op fails".to_string(),
                    );
                }
            }
            for x in &fs {
                for y in &fs {
                    c.require(
                        functor_leq(x, y) == functor_leq(&opposite_functor(y), &opposite_functor(x)),
                        || "F ≤ G ⟺ G^op ≤ F^op fails".to_string(),
                    );
                }
            }
            c.done(rep, "prop337.2", "Φ ≤ Ψ ⟺ Φ^op ≤ Ψ^op and F ≤ G ⟺ G^op ≤ F^op", &inst);

            let mut c = Check::new();
            for (i, psi) in bc.iter().enumerate() {
                let phi = &ds[i % ds.len()];
                c.require(
                    opposite_distributor(&dist_compose(psi, phi))
                        == dist_compose(&opposite_distributor(phi), &opposite_distributor(psi)),
                    || "(Ψ⊗Φ)^op ≠ Φ^op⊗Ψ^op".to_string(),
                );
            }
            for f in &fs {
                c.require(
                    opposite_distributor(&graph_left(f)) == graph_right(&opposite_functor(f)),
                    || "(F*)^op ≠ (F^op)^*".to_string(),
                );
                c.require(
                    opposite_distributor(&graph_right(f)) == graph_left(&opposite_functor(f)),
                    || "(F^*)^op ≠ (F^op)*".to_string(),
                );
            }
            c.done(rep, "prop337.3", "(Ψ⊗Φ)^op = Φ^op⊗Ψ^op and graphs swap under (−)^op", &inst);
        }
    }
}

fn prop482(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            for step in [0, 1] {
                let (dname, d) = partner(cb, ci, step);
                let inst = format!("{}/{}⇄{}", cb.name, cname, dname);
                let fs = match enumerate_functors(a, d, &ctx.caps) {
                    Ok(v) => v,
                    Err(e) => {
                        warn_cap(rep, "prop482", &inst, &e);
                        continue;
                    }
                };
                let gs = match enumerate_functors(d, a, &ctx.caps) {
                    Ok(v) => v,
                    Err(e) => {
                        warn_cap(rep, "prop482", &inst, &e);
                        continue;
                    }
                };
                let pairs: Vec<(&QFunctor, &QFunctor)> = fs
                    .iter()
                    .flat_map(|f| gs.iter().map(move |g| (f, g)))
                    .filter(|(f, g)| functor_adjoint_pair(f, g))
                    .collect();
                let mut c1 = Check::new();
                let mut c2 = Check::new();
                for (f, g) in &pairs {
                    c1.require(
                        fully_faithful(f)
                            == functor_iso(&functor_compose(g, f), &identity_functor(a)),
                        || format!("F = {:?}", f.map()),
                    );
                    c1.require(
                        fully_faithful(g)
                            == functor_iso(&functor_compose(f, g), &identity_functor(d)),
                        || format!("G = {:?}", g.map()),
                    );
                    for h in &fs {
                        if functor_adjoint_pair(g, h) {
                            c2.require(fully_faithful(f) == fully_faithful(h), || {
                                format!("string {:?} ⊣ {:?} ⊣ {:?}", f.map(), g.map(), h.map())
                            });
                        }
                    }
                }
                c1.done(
                    rep,
                    "prop482.1",
                    "for F ⊣ G: F fully faithful ⟺ G∘F ≅ 1, and G fully faithful ⟺ F∘G ≅ 1",
                    &inst,
                );
                c2.done(rep, "prop482.2", "in F ⊣ G ⊣ H, F is fully faithful ⟺ H is", &inst);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Presheaf and colimit suites.

fn prop102(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let inst = format!("{}/{}", cb.name, cname);
            let pa = match presheaf_category(a, &ctx.caps) {
                Ok(pa) => pa,
                Err(e) => {
                    warn_cap(rep, "prop102", &inst, &e);
                    continue;
                }
            };
            let y = yoneda(&pa);
            let mut c = Check::new();
            c.require(pa.cat.is_skeletal(), || "PA not skeletal".to_string());
            c.require(
                pa.functor_from_dist(&identity_dist(a)) == y,
                || "transpose of A(−,−) ≠ Yoneda".to_string(),
            );
            c.done(rep, "prop102.1", "PA is skeletal; the transpose of A(−,−) is Yoneda", &inst);

            let mut r = suite_rng(ctx, &format!("prop102 {inst}"));
            let mut c = Check::new();
            for step in [0, 1] {
                let (_, ccat) = partner(cb, ci, step);
                for phi in evenly(&dists_or_sample(ctx, ccat, a, 6, &mut r), 6) {
                    let f = pa.functor_from_dist(&phi);
                    c.require(pa.dist_from_functor(&f) == phi, || "Φ ↦ F_Φ ↦ Φ fails".to_string());
                }
            }
            c.require(
                pa.functor_from_dist(&pa.dist_from_functor(&y)) == y,
                || "F ↦ Φ_F ↦ F fails on Yoneda".to_string(),
            );
            c.done(rep, "prop102.2", "Dist(C,A) ≅ Cat(C,PA): the transposes are mutually inverse", &inst);
        }
    }
}

fn prop104(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            let pa = match presheaf_category(a, &ctx.caps) {
                Ok(pa) => pa,
                Err(e) => {
                    warn_cap(rep, "prop104", &inst, &e);
                    continue;
                }
            };
            let y = yoneda(&pa);
            let mut c = Check::new();
            for (i, phi) in pa.presheaves.iter().enumerate() {
                for a0 in 0..a.object_count() {
                    c.require(
                        pa.cat.hom_arrow(y.apply(a0), i).elt == phi.entry(a0, 0).elt,
                        || format!("at presheaf {} and object {}", i, a.name(a0)),
                    );
                }
            }
            c.done(rep, "prop104.1", "PA(Ya, φ) = φ(a)", &inst);

            let mut c = Check::new();
            c.require(fully_faithful(&y), || "Yoneda not fully faithful".to_string());
            for a1 in 0..a.object_count() {
                c.require(&pa.presheaves[y.apply(a1)] == &representable(a, a1), || {
                    format!("Y{} is not A(−,{})", a.name(a1), a.name(a1))
                });
            }
            c.done(rep, "prop104.2", "Y is fully faithful and Ya = A(−,a)", &inst);
        }
    }
}

fn prop107(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            match presheaf_cocompleteness(a, &ctx.caps, ctx.seed, 40) {
                Err(e) => warn_cap(rep, "prop107", &inst, &e),
                Ok(PaCocompleteness::Direct(b)) => {
                    rep.row("prop107", "PA is cocomplete", &inst, b, None);
                }
                Ok(PaCocompleteness::Sampled { samples, pass }) => {
                    rep.row(
                        "prop107",
                        "PA is cocomplete",
                        &inst,
                        pass,
                        Some(format!("checked on {samples} sampled weighted diagrams")),
                    );
                }
            }
        }
    }
}

fn prop109(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            let pa = match presheaf_category(a, &ctx.caps) {
                Ok(pa) => pa,
                Err(e) => {
                    warn_cap(rep, "prop109", &inst, &e);
                    continue;
                }
            };
            let y = yoneda(&pa);
            let mut c = Check::new();
            for (i, phi) in pa.presheaves.iter().enumerate() {
                match weighted_colim(phi, &y) {
                    Ok(g) => c.require(g.apply(0) == i, || {
                        format!("colim(φ_{i}, Y) lands at {} instead", g.apply(0))
                    }),
                    Err(e) => c.require(false, || {
                        format!("colim(φ_{i}, Y) missing (not representable at {})", e.at)
                    }),
                }
            }
            c.done(rep, "prop109.1", "colim(φ, Y) = φ: presheaves are colimits of representables", &inst);

            let mut r = suite_rng(ctx, &format!("prop109 {inst}"));
            let mut c = Check::new();
            for psi in sample_copresheaves(ctx, a, 8, &mut r) {
                if let Ok(g) = weighted_lim(&psi, &identity_functor(a)) {
                    match weighted_lim(&psi, &y) {
                        Ok(h) => c.require(functor_iso(&h, &functor_compose(&y, &g)), || {
                            "Y(lim ψ) ≇ lim(ψ, Y)".to_string()
                        }),
                        Err(_) => c.require(false, || "a limit is lost under Yoneda".to_string()),
                    }
                }
            }
            c.done(rep, "prop109.2", "Y preserves weighted limits: Y(lim(ψ,1)) ≅ lim(ψ,Y)", &inst);
        }
    }
}

fn lemma110(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, bcat) = partner(cb, ci, 1);
            let (_, ccat) = partner(cb, ci, 2);
            let (_, dcat) = partner(cb, ci, 3);
            let inst = format!("{}/{}", cb.name, cname);
            let mut r = suite_rng(ctx, &format!("lemma110 {inst}"));

            let weights = evenly(&dists_or_sample(ctx, ccat, a, 8, &mut r), 8);
            let mut fs = evenly(&functors_or_sample(ctx, a, bcat, 5, &mut r), 5);
            fs.push(identity_functor(a));
            let colims: Vec<Vec<Option<QFunctor>>> = fs
                .iter()
                .map(|f| weights.iter().map(|t| weighted_colim(t, f).ok()).collect())
                .collect();

            let mut c = Check::new();
            for (fi, _) in fs.iter().enumerate() {
                for (i, t1) in weights.iter().enumerate() {
                    for (j, t2) in weights.iter().enumerate() {
                        if dist_leq(t1, t2) {
                            if let (Some(g1), Some(g2)) = (&colims[fi][i], &colims[fi][j]) {
                                c.require(functor_leq(g1, g2), || {
                                    format!("not monotone at weight pair ({i},{j})")
                                });
                            }
                        }
                    }
                }
            }
            c.done(rep, "lemma110.1", "Θ ≤ Θ′ ⟹ colim(Θ,F) ≤ colim(Θ′,F)", &inst);

            let mut c = Check::new();
            for (fi, f) in fs.iter().enumerate() {
                for (i, t1) in weights.iter().enumerate() {
                    let j = (i + 1) % weights.len();
                    if let (Some(g1), Some(g2)) = (&colims[fi][i], &colims[fi][j]) {
                        c.require(
                            sup_of_functors(&[g1.clone(), g2.clone()])
                                == weighted_colim(&dist_sup(t1, &weights[j]), f).ok(),
                            || "colim(Θ∨Θ′,F) ≠ colim(Θ,F) ∨ colim(Θ′,F)".to_string(),
                        );
                    }
                }
            }
            c.done(rep, "lemma110.2", "colim(Θ∨Θ′,F) = colim(Θ,F) ∨ colim(Θ′,F), existing together", &inst);

            let mut c = Check::new();
            for f in &fs {
                match weighted_colim(&identity_dist(a), f) {
                    Ok(g) => c.require(functor_iso(&g, f), || "colim(A,F) ≇ F".to_string()),
                    Err(_) => c.require(false, || "colim(A,F) missing".to_string()),
                }
            }
            c.done(rep, "lemma110.3", "colim(A(−,−), F) ≅ F", &inst);

            let mut c = Check::new();
            let thetas = evenly(&dists_or_sample(ctx, dcat, ccat, 5, &mut r), 5);
            for (fi, f) in fs.iter().enumerate() {
                for (i, psi) in weights.iter().enumerate() {
                    if let Some(g) = &colims[fi][i] {
                        let th = &thetas[i % thetas.len()];
                        c.require(
                            weighted_colim(th, g).ok()
                                == weighted_colim(&dist_compose(psi, th), f).ok(),
                            || "iterated and composite-weight colimits disagree".to_string(),
                        );
                    }
                }
            }
            c.done(rep, "lemma110.4", "colim(Θ, colim(Ψ,F)) = colim(Ψ⊗Θ, F), existing together", &inst);
        }
    }
}

fn cor111(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, bcat) = partner(cb, ci, 1);
            let (_, ccat) = partner(cb, ci, 2);
            let inst = format!("{}/{}", cb.name, cname);
            let mut r = suite_rng(ctx, &format!("cor111 {inst}"));
            let weights = evenly(&dists_or_sample(ctx, ccat, a, 6, &mut r), 6);
            let fs = evenly(&functors_or_sample(ctx, a, bcat, 5, &mut r), 5);

            let mut c = Check::new();
            for f in &fs {
                for theta in &weights {
                    let w2 = dist_compose(&graph_left(f), theta);
                    c.require(
                        weighted_colim(theta, f).ok()
                            == weighted_colim(&w2, &identity_functor(bcat)).ok(),
                        || "colim(Θ,F) ≠ colim(F*⊗Θ, 1)".to_string(),
                    );
                }
            }
            c.done(rep, "cor111.1", "colim(Θ,F) = colim(F*⊗Θ, 1_B)", &inst);

            let mut c = Check::new();
            let cocert = is_cocomplete(bcat, &ctx.caps).ok();
            for (i, f) in fs.iter().enumerate() {
                let family = vec![f.clone(), fs[(i + 1) % fs.len()].clone()];
                match sup_of_functors(&family) {
                    Some(s) => {
                        c.require(family.iter().all(|x| functor_leq(x, &s)), || {
                            "claimed sup is not an upper bound".to_string()
                        });
                        for g in &fs {
                            if family.iter().all(|x| functor_leq(x, g)) {
                                c.require(functor_leq(&s, g), || {
                                    "claimed sup is not least".to_string()
                                });
                            }
                        }
                    }
                    None => {
                        if let Some(cert) = &cocert {
                            if cert.holds {
                                c.require(false, || {
                                    "sup missing though the codomain is cocomplete".to_string()
                                });
                            }
                        }
                    }
                }
            }
            c.done(rep, "cor111.2", "⋁F_i exists pointwise when representable, always on cocomplete codomain", &inst);
        }
    }
}

fn prop114(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, ccat) = partner(cb, ci, 1);
            let (_, bcat) = partner(cb, ci, 2);
            let (_, b2cat) = partner(cb, ci, 3);
            let inst = format!("{}/{}", cb.name, cname);
            let mut r = suite_rng(ctx, &format!("prop114 {inst}"));
            let us = evenly(&functors_or_sample(ctx, ccat, a, 5, &mut r), 5);
            let fs = evenly(&functors_or_sample(ctx, a, bcat, 4, &mut r), 4);
            let hs = evenly(&functors_or_sample(ctx, bcat, b2cat, 3, &mut r), 3);

            let mut c = Check::new();
            for u in &us {
                let theta = graph_left(u);
                for f in &fs {
                    match weighted_colim(&theta, f) {
                        Ok(g) => {
                            c.require(functor_iso(&g, &functor_compose(f, u)), || {
                                "colim(U*, F) ≇ F∘U".to_string()
                            });
                            for h in &hs {
                                match weighted_colim(&theta, &functor_compose(h, f)) {
                                    Ok(k) => c.require(
                                        functor_iso(&k, &functor_compose(h, &g)),
                                        || "H does not preserve the absolute colimit".to_string(),
                                    ),
                                    Err(_) => c.require(false, || {
                                        "absolute colimit lost under post-composition".to_string()
                                    }),
                                }
                            }
                        }
                        Err(e) => c.require(false, || {
                            format!("colim along a graph weight missing at {}", e.at)
                        }),
                    }
                }
            }
            c.done(rep, "prop114", "graph weights are absolute: colim(U*,F) ≅ F∘U, preserved by every functor", &inst);
        }
    }
}

fn prop116(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let cocomplete: Vec<Option<bool>> = cb
            .cats
            .iter()
            .map(|(_, cat)| is_cocomplete(cat, &ctx.caps).ok().map(|c| c.holds))
            .collect();

        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, bcat) = partner(cb, ci, 1);
            let inst = format!("{}/{}", cb.name, cname);
            let mut r = suite_rng(ctx, &format!("prop116 {inst}"));

            let fs = evenly(&functors_or_sample(ctx, a, bcat, 16, &mut r), 64);
            let gs = evenly(&functors_or_sample(ctx, bcat, a, 16, &mut r), 64);
            let phis = sample_presheaves(ctx, a, 6, &mut r);
            let mut diagrams = vec![identity_functor(a)];
            diagrams.extend(evenly(&functors_or_sample(ctx, a, a, 2, &mut r), 2));

            let mut c = Check::new();
            for f in &fs {
                for g in &gs {
                    if !functor_adjoint_pair(f, g) {
                        continue;
                    }
                    for phi in &phis {
                        for d in &diagrams {
                            if let Ok(h) = weighted_colim(phi, d) {
                                match weighted_colim(phi, &functor_compose(f, d)) {
                                    Ok(k) => c.require(
                                        functor_iso(&k, &functor_compose(f, &h)),
                                        || "left adjoint moved the colimit".to_string(),
                                    ),
                                    Err(_) => c.require(false, || {
                                        "left adjoint lost the colimit".to_string()
                                    }),
                                }
                            }
                        }
                    }
                }
            }
            c.done(rep, "prop116.1", "left adjoints preserve weighted colimits", &inst);

            if cocomplete[ci] == Some(true) {
                if let Ok(pa) = presheaf_category(a, &ctx.caps) {
                    let id_a = identity_functor(a);
                    let mut c = Check::new();
                    let mut all = Vec::new();
                    let mut broke = false;
                    for phi in &pa.presheaves {
                        match weighted_colim(phi, &id_a) {
                            Ok(g) => all.push(g),
                            Err(_) => broke = true,
                        }
                    }
                    if broke {
                        c.require(false, || {
                            "certificate disagrees with colimit computation".to_string()
                        });
                    } else {
                        for f in evenly(&fs, 10) {
                            let preserves = pa.presheaves.iter().zip(&all).all(|(phi, g)| {
                                match weighted_colim(phi, &f) {
                                    Ok(h) => functor_iso(&h, &functor_compose(&f, g)),
                                    Err(_) => false,
                                }
                            });
                            c.require(preserves == left_adjoint_via_kan(&f).is_some(), || {
                                format!("functor {:?}", f.map())
                            });
                        }
                    }
                    c.done(rep, "prop116.2", "on cocomplete A: F cocontinuous ⟺ F is a left adjoint", &inst);
                }
            }

            let mut c = Check::new();
            for (dj, (_, dcat)) in cb.cats.iter().enumerate() {
                let into = match enumerate_functors(dcat, a, &ctx.caps) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                let outof = match enumerate_functors(a, dcat, &ctx.caps) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                for g in into.iter().filter(|g| fully_faithful(g)) {
                    for f in &outof {
                        if functor_adjoint_pair(f, g)
                            && cocomplete[ci] == Some(true)
                            && cocomplete[dj].is_some()
                        {
                            c.require(cocomplete[dj] == Some(true), || {
                                "reflective subcategory of a cocomplete category not cocomplete"
                                    .to_string()
                            });
                        }
                    }
                }
            }
            c.done(rep, "prop116.3", "F ⊣ G, G fully faithful, cod G cocomplete ⟹ dom G cocomplete", &inst);
        }

        let mut c = Check::new();
        let mut instances = Vec::new();
        for ci in 0..cb.cats.len() {
            for cj in ci + 1..cb.cats.len() {
                let (n1, c1) = &cb.cats[ci];
                let (n2, c2) = &cb.cats[cj];
                let fs = match enumerate_functors(c1, c2, &ctx.caps) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                if fs.iter().any(is_equivalence)
                    && cocomplete[ci].is_some()
                    && cocomplete[cj].is_some()
                {
                    instances.push(format!("{n1}≃{n2}"));
                    c.require(cocomplete[ci] == cocomplete[cj], || {
                        format!("{n1} and {n2} are equivalent but disagree")
                    });
                }
            }
        }
        c.done(
            rep,
            "prop116.4",
            "equivalent categories are cocomplete together",
            &format!("{} [{}]", cb.name, instances.join(", ")),
        );
    }
}

fn prop122(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let inst = format!("{}/{}", cb.name, cname);
            let pa = match presheaf_category(a, &ctx.caps) {
                Ok(pa) => pa,
                Err(e) => {
                    warn_cap(rep, "prop122", &inst, &e);
                    continue;
                }
            };
            let y = yoneda(&pa);
            let mut r = suite_rng(ctx, &format!("prop122 {inst}"));
            let mut targets = vec![y.clone()];
            for phi in evenly(&dists_or_sample(ctx, a, a, 3, &mut r), 3) {
                targets.push(pa.functor_from_dist(&phi));
            }

            let mut c1 = Check::new();
            let mut c2 = Check::new();
            for f in &targets {
                match free_cocompletion_factor(&pa, f) {
                    Ok(l) => {
                        c1.require(functor_iso(&functor_compose(&l, &y), f), || {
                            "⟨F,Y⟩∘Y ≇ F".to_string()
                        });
                        for (i, phi) in pa.presheaves.iter().enumerate().take(16) {
                            match weighted_colim(phi, f) {
                                Ok(g) => c1.require(l.apply(i) == g.apply(0), || {
                                    format!("⟨F,Y⟩(φ_{i}) ≠ colim(φ_{i},F)")
                                }),
                                Err(_) => c1.require(false, || {
                                    format!("colim(φ_{i},F) missing in a cocomplete codomain")
                                }),
                            }
                        }
                        match kan_ext_pointwise_left(&y, f) {
                            Ok(rr) => c2.require(functor_adjoint_pair(&l, &rr), || {
                                "⟨F,Y⟩ not left adjoint to ⟨Y,F⟩".to_string()
                            }),
                            Err(_) => c2.require(false, || "⟨Y,F⟩ missing".to_string()),
                        }
                    }
                    Err(_) => c1.require(false, || "factorization through PA missing".to_string()),
                }
            }
            c1.done(rep, "prop122.1", "F: A → K cocomplete factors as F ≅ ⟨F,Y⟩∘Y, ⟨F,Y⟩(φ) = colim(φ,F)", &inst);
            c2.done(rep, "prop122.2", "⟨F,Y⟩ ⊣ ⟨Y,F⟩", &inst);

            let mut c = Check::new();
            for step in [1, 2] {
                let (_, ccat) = partner(cb, ci, step);
                let gs = match enumerate_functors(a, ccat, &ctx.caps) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                for g in gs.iter().filter(|g| fully_faithful(g)).take(4) {
                    for f2 in &targets {
                        if let Ok(k) = kan_ext_pointwise_left(f2, g) {
                            c.require(functor_iso(&functor_compose(&k, g), f2), || {
                                "Lan_G F ∘ G ≇ F for fully faithful G".to_string()
                            });
                        }
                    }
                }
            }
            c.done(rep, "prop122.3", "G fully faithful ⟹ (Lan_G F)∘G ≅ F when the pointwise Lan exists", &inst);
        }
    }
}

fn prop127(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            for step in [0, 1] {
                let (dname, d) = partner(cb, ci, step);
                let inst = format!("{}/{}→{}", cb.name, cname, dname);
                let fs = match enumerate_functors(a, d, &ctx.caps) {
                    Ok(v) => evenly(&v, 24),
                    Err(e) => {
                        warn_cap(rep, "prop127", &inst, &e);
                        continue;
                    }
                };
                let gs = match enumerate_functors(d, a, &ctx.caps) {
                    Ok(v) => v,
                    Err(e) => {
                        warn_cap(rep, "prop127", &inst, &e);
                        continue;
                    }
                };
                let id_a = identity_functor(a);
                let mut c1 = Check::new();
                let mut c2 = Check::new();
                let mut capped = false;
                for f in &fs {
                    let (lan1, lanf, ran1, ranf) = match (
                        kan_ext_bruteforce_left(&id_a, f, &ctx.caps),
                        kan_ext_bruteforce_left(f, f, &ctx.caps),
                        kan_ext_bruteforce_right(&id_a, f, &ctx.caps),
                        kan_ext_bruteforce_right(f, f, &ctx.caps),
                    ) {
                        (Ok(a1), Ok(a2), Ok(a3), Ok(a4)) => (a1, a2, a3, a4),
                        _ => {
                            capped = true;
                            break;
                        }
                    };

                    let searched_r = gs.iter().find(|g| functor_adjoint_pair(f, g));
                    let preserved_r = match (&lan1, &lanf) {
                        (Some(k), Some(ff)) => functor_iso(&functor_compose(f, k), ff),
                        _ => false,
                    };
                    c1.require(searched_r.is_some() == preserved_r, || {
                        format!("functor {:?}", f.map())
                    });
                    if let (Some(g), Some(k)) = (searched_r, &lan1) {
                        c1.require(functor_iso(g, k), || "right adjoint ≇ Lan_F 1".to_string());
                    }
                    c1.require(left_adjoint_via_kan(f).is_some() == searched_r.is_some(), || {
                        "pointwise certificate disagrees with the search".to_string()
                    });

                    let searched_l = gs.iter().find(|g| functor_adjoint_pair(g, f));
                    let preserved_l = match (&ran1, &ranf) {
                        (Some(k), Some(ff)) => functor_iso(&functor_compose(f, k), ff),
                        _ => false,
                    };
                    c2.require(searched_l.is_some() == preserved_l, || {
                        format!("functor {:?}", f.map())
                    });
                    if let (Some(g), Some(k)) = (searched_l, &ran1) {
                        c2.require(functor_iso(g, k), || "left adjoint ≇ Ran_F 1".to_string());
                    }
                    c2.require(right_adjoint_via_kan(f).is_some() == searched_l.is_some(), || {
                        "pointwise certificate disagrees with the search".to_string()
                    });
                }
                if capped {
                    rep.warn(format!("prop127 skipped on {inst}: Kan search exceeded caps"));
                    continue;
                }
                c1.done(rep, "prop127.1", "F ⊣ (some G) ⟺ Lan_F 1 exists and F preserves it; then G = Lan_F 1", &inst);
                c2.done(rep, "prop127.2", "(some G) ⊣ F ⟺ Ran_F 1 exists and F preserves it; then G = Ran_F 1", &inst);
            }
        }
    }
}

fn prop129(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            let pa = match presheaf_category(a, &ctx.caps) {
                Ok(pa) => pa,
                Err(e) => {
                    warn_cap(rep, "prop129", &inst, &e);
                    continue;
                }
            };
            let cert = match is_cocomplete(a, &ctx.caps) {
                Ok(c) => c,
                Err(e) => {
                    warn_cap(rep, "prop129", &inst, &e);
                    continue;
                }
            };
            let y = yoneda(&pa);
            let l = right_adjoint_via_kan(&y);
            let mut c = Check::new();
            c.require(cert.holds == l.is_some(), || {
                format!("certificate says {}, Yoneda left adjoint: {}", cert.holds, l.is_some())
            });
            if let Some(l) = &l {
                c.require(functor_adjoint_pair(l, &y), || "L ⊣ Y fails".to_string());
                let id_a = identity_functor(a);
                for (i, phi) in pa.presheaves.iter().enumerate() {
                    match weighted_colim(phi, &id_a) {
                        Ok(g) => c.require(a.obj_iso(l.apply(i), g.apply(0)), || {
                            format!("Lφ_{i} ≇ colim(φ_{i},1)")
                        }),
                        Err(_) => c.require(false, || format!("colim(φ_{i},1) missing")),
                    }
                }
            }
            if !cert.holds {
                match &cert.failing {
                    Some(w) => c.require(
                        weighted_colim(w, &identity_functor(a)).is_err(),
                        || "the failing witness actually has a colimit".to_string(),
                    ),
                    None => c.require(false, || "negative certificate lacks a witness".to_string()),
                }
            }
            c.done(rep, "prop129", "A cocomplete ⟺ Y has a left adjoint L; then Lφ = colim(φ,1)", &inst);
        }
    }
}

fn prop132(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (bn, bcat) = partner(cb, ci, 1);
            let (zn, zcat) = partner(cb, ci, 2);
            let inst = format!("{}/{}⇸{}⇸{}", cb.name, cname, bn, zn);
            let (pa, pb, pc) = match (
                presheaf_category(a, &ctx.caps),
                presheaf_category(bcat, &ctx.caps),
                presheaf_category(zcat, &ctx.caps),
            ) {
                (Ok(x), Ok(y), Ok(z)) => (x, y, z),
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                    warn_cap(rep, "prop132", &inst, &e);
                    continue;
                }
            };
            let lift_dist = |phi: &Distributor,
                             from: &PresheafCategory,
                             to: &PresheafCategory|
             -> Option<QFunctor> {
                free_cocompletion_factor(from, &to.functor_from_dist(phi)).ok()
            };
            let mut r = suite_rng(ctx, &format!("prop132 {inst}"));
            let phis = evenly(&dists_or_sample(ctx, a, bcat, 4, &mut r), 4);
            let psis = evenly(&dists_or_sample(ctx, bcat, zcat, 4, &mut r), 4);
            let ls: Vec<Option<QFunctor>> = phis.iter().map(|p| lift_dist(p, &pa, &pb)).collect();

            let mut c = Check::new();
            match lift_dist(&identity_dist(a), &pa, &pa) {
                Some(l) => c.require(l == identity_functor(&pa.cat), || "L_A ≠ 1_PA".to_string()),
                None => c.require(false, || "L_A missing".to_string()),
            }
            c.done(rep, "prop132.1", "L_{A(−,−)} = 1_PA", &inst);

            let mut c = Check::new();
            for (i, phi) in phis.iter().enumerate() {
                let psi = &psis[i % psis.len()];
                match (&ls[i], lift_dist(psi, &pb, &pc), lift_dist(&dist_compose(psi, phi), &pa, &pc)) {
                    (Some(x), Some(y), Some(z)) => {
                        c.require(functor_compose(&y, x) == z, || "L_{Ψ⊗Φ} ≠ L_Ψ∘L_Φ".to_string())
                    }
                    _ => c.require(false, || "a lifting failed to exist".to_string()),
                }
            }
            c.done(rep, "prop132.2", "L_{Ψ⊗Φ} = L_Ψ∘L_Φ", &inst);

            let mut c = Check::new();
            for (i, x) in phis.iter().enumerate() {
                for (j, y) in phis.iter().enumerate() {
                    if let (Some(lx), Some(ly)) = (&ls[i], &ls[j]) {
                        c.require(dist_leq(x, y) == functor_leq(lx, ly), || {
                            format!("order fails at sample pair ({i},{j})")
                        });
                    }
                }
            }
            c.done(rep, "prop132.3", "Φ ≤ Ψ ⟺ L_Φ ≤ L_Ψ", &inst);

            let mut c = Check::new();
            for i in 0..phis.len() {
                let j = (i + 1) % phis.len();
                if let (Some(x), Some(y)) = (&ls[i], &ls[j]) {
                    match (
                        lift_dist(&dist_sup(&phis[i], &phis[j]), &pa, &pb),
                        sup_of_functors(&[x.clone(), y.clone()]),
                    ) {
                        (Some(lsup), Some(s)) => {
                            c.require(lsup == s, || "L_{Φ∨Ψ} ≠ L_Φ ∨ L_Ψ".to_string())
                        }
                        _ => c.require(false, || "a sup failed to exist".to_string()),
                    }
                }
            }
            c.done(rep, "prop132.4", "L_{Φ∨Ψ} = L_Φ ∨ L_Ψ", &inst);
        }
    }
}

fn prop1004(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            let pa = match presheaf_category(a, &ctx.caps) {
                Ok(v) => v,
                Err(e) => {
                    warn_cap(rep, "prop1004", &inst, &e);
                    continue;
                }
            };
            let pda = match copresheaf_category(a, &ctx.caps) {
                Ok(v) => v,
                Err(e) => {
                    warn_cap(rep, "prop1004", &inst, &e);
                    continue;
                }
            };
            let idd = identity_dist(a);
            let id_a = identity_functor(a);

            let mut c = Check::new();
            for psi in &pda.copresheaves {
                let conj = dist_ext(psi, &idd);
                let l = weighted_lim(psi, &id_a).ok();
                let co = weighted_colim(&conj, &id_a).ok();
                match (&l, &co) {
                    (Some(x), Some(y)) => c.require(a.obj_iso(x.apply(0), y.apply(0)), || {
                        "lim(ψ,1) ≇ colim({ψ,A},1)".to_string()
                    }),
                    (None, None) => {}
                    _ => c.require(false, || "lim(ψ,1) and colim({ψ,A},1) do not exist together".to_string()),
                }
            }
            c.done(rep, "prop1004.1", "lim(ψ,1) ≅ colim({ψ,A},1), existing together", &inst);

            let mut c = Check::new();
            for phi in &pa.presheaves {
                let conj = dist_lift(phi, &idd);
                let co = weighted_colim(phi, &id_a).ok();
                let l = weighted_lim(&conj, &id_a).ok();
                match (&co, &l) {
                    (Some(x), Some(y)) => c.require(a.obj_iso(x.apply(0), y.apply(0)), || {
                        "colim(φ,1) ≇ lim([φ,A],1)".to_string()
                    }),
                    (None, None) => {}
                    _ => c.require(false, || "colim(φ,1) and lim([φ,A],1) do not exist together".to_string()),
                }
            }
            c.done(rep, "prop1004.2", "colim(φ,1) ≅ lim([φ,A],1), existing together", &inst);

            let lmap: Option<Vec<usize>> = pa
                .presheaves
                .iter()
                .map(|phi| pda.index_of_copresheaf(&dist_lift(phi, &idd)))
                .collect();
            let rmap: Option<Vec<usize>> = pda
                .copresheaves
                .iter()
                .map(|psi| pa.index_of_presheaf(&dist_ext(psi, &idd)))
                .collect();
            let mut c = Check::new();
            let mut conj_pair = None;
            match (lmap, rmap) {
                (Some(lm), Some(rm)) => {
                    let lf = QFunctor::new(Arc::clone(&pa.cat), Arc::clone(&pda.cat), lm);
                    let rf = QFunctor::new(Arc::clone(&pda.cat), Arc::clone(&pa.cat), rm);
                    match (lf, rf) {
                        (Ok(lf), Ok(rf)) => {
                            c.require(functor_adjoint_pair(&lf, &rf), || {
                                "[−,A] ⊣ {−,A} fails".to_string()
                            });
                            conj_pair = Some((lf, rf));
                        }
                        _ => c.require(false, || "a conjugation map is not functorial".to_string()),
                    }
                }
                _ => c.require(false, || "a conjugate escapes the (co)presheaf category".to_string()),
            }
            c.done(rep, "prop1004.3", "[−,A] ⊣ {−,A} between PA and P†A", &inst);

            let certs = (is_cocomplete(a, &ctx.caps), is_complete(a, &ctx.caps));
            if let (Ok(cc), Ok(cl)) = certs {
                if cc.holds && cl.holds {
                    let mut c = Check::new();
                    let ly = right_adjoint_via_kan(&yoneda(&pa));
                    let ry = left_adjoint_via_kan(&yoneda_cov(&pda));
                    c.require(ly.is_some() && ry.is_some(), || {
                        "colim/lim functors missing on a (co)complete instance".to_string()
                    });
                    if let (Some(l), Some(r2), Some((lf, rf))) = (&ly, &ry, &conj_pair) {
                        c.require(functor_iso(r2, &functor_compose(l, rf)), || {
                            "lim(−,1) ≇ colim(−,1)∘{−,A}".to_string()
                        });
                        c.require(functor_iso(l, &functor_compose(r2, lf)), || {
                            "colim(−,1) ≇ lim(−,1)∘[−,A]".to_string()
                        });
                    }
                    c.done(rep, "prop1004.4", "on (co)complete A: lim(−,1) = colim(−,1)∘{−,A} and dually", &inst);
                }
            }
        }
    }
}

fn prop1005(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            match (is_cocomplete(a, &ctx.caps), is_complete(a, &ctx.caps)) {
                (Ok(x), Ok(y)) => {
                    let detail = (x.holds != y.holds)
                        .then(|| format!("cocomplete: {}, complete: {}", x.holds, y.holds));
                    rep.row("prop1005", "A is cocomplete ⟺ A is complete", &inst, x.holds == y.holds, detail);
                }
                (Err(e), _) | (_, Err(e)) => warn_cap(rep, "prop1005", &inst, &e),
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Cauchy suites.

fn prop134(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, ccat) = partner(cb, ci, 1);
            let (_, bcat) = partner(cb, ci, 2);
            let inst = format!("{}/{}", cb.name, cname);
            let mut r = suite_rng(ctx, &format!("prop134 {inst}"));

            let mut pool: Vec<Distributor> = Vec::new();
            for u in evenly(&functors_or_sample(ctx, ccat, a, 4, &mut r), 4) {
                pool.push(graph_left(&u));
            }
            pool.extend(evenly(&dists_or_sample(ctx, ccat, a, 4, &mut r), 4));

            let mut c = Check::new();
            for phi in &pool {
                let whole = is_cauchy_distributor(phi).is_some();
                let cols = (0..phi.dom().object_count())
                    .all(|cix| is_cauchy_presheaf(&dist_column(phi, cix)).is_some());
                c.require(whole == cols, || "column criterion fails".to_string());
            }
            c.done(rep, "prop134.1", "Φ is Cauchy ⟺ every column Φ(−,c) is a Cauchy presheaf", &inst);

            let mut c = Check::new();
            let us = evenly(&functors_or_sample(ctx, ccat, a, 3, &mut r), 3);
            let vs = evenly(&functors_or_sample(ctx, a, bcat, 3, &mut r), 3);
            for u in &us {
                for v in &vs {
                    let phi = graph_left(u);
                    let psi = graph_left(v);
                    let comp = dist_compose(&psi, &phi);
                    let (w1, w2, wc) = (
                        is_cauchy_distributor(&phi),
                        is_cauchy_distributor(&psi),
                        is_cauchy_distributor(&comp),
                    );
                    c.require(w1.is_some() && w2.is_some() && wc.is_some(), || {
                        "graphs or their composite not Cauchy".to_string()
                    });
                    if let (Some(a1), Some(a2), Some(ac)) = (w1, w2, wc) {
                        c.require(
                            ac.right_adjoint
                                == dist_compose(&a1.right_adjoint, &a2.right_adjoint),
                            || "(Ψ⊗Φ)* ≠ Φ*⊗Ψ*".to_string(),
                        );
                    }
                }
            }
            c.done(rep, "prop134.2", "Cauchy distributors compose, with (Ψ⊗Φ)* = Φ*⊗Ψ*", &inst);

            let mut c = Check::new();
            for phi in sample_presheaves(ctx, a, 10, &mut r) {
                let t = phi.dom().type_of(0);
                let found = (0..a.object_count()).find(|&b0| {
                    a.type_of(b0) == t
                        && (0..a.object_count())
                            .all(|b1| a.hom_arrow(b1, b0).elt == phi.entry(b1, 0).elt)
                });
                c.require(converges_to(&phi).ok().map(|g| g.apply(0)) == found, || {
                    "convergence disagrees with the representability scan".to_string()
                });
                if let Some(w) = is_cauchy_presheaf(&phi) {
                    c.require(check_dist_adjunction(&phi, &w.right_adjoint), || {
                        "Cauchy witness fails the adjunction".to_string()
                    });
                }
            }
            c.done(rep, "prop134.3", "φ converges to a ⟺ φ = A(−,a); Cauchy witnesses are adjoints", &inst);
        }
    }
}

fn prop139(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            let cc = match cauchy_completion(a, &ctx.caps) {
                Ok(v) => v,
                Err(e) => {
                    warn_cap(rep, "prop139", &inst, &e);
                    continue;
                }
            };

            let mut c = Check::new();
            for (p, phi) in cc.presheaves.iter().enumerate() {
                c.require(is_cauchy_presheaf(phi).is_some(), || {
                    format!("selected presheaf {p} is not Cauchy")
                });
                c.require(cc.pa.index_of_presheaf(phi) == Some(cc.pa_indices[p]), || {
                    format!("index bookkeeping broken at {p}")
                });
            }
            for (i, phi) in cc.pa.presheaves.iter().enumerate() {
                c.require(cc.pa_indices.contains(&i) == is_cauchy_presheaf(phi).is_some(), || {
                    format!("presheaf {i} misclassified")
                });
            }
            c.done(rep, "prop139.1", "A_cc selects exactly the Cauchy presheaves of PA", &inst);

            let mut c = Check::new();
            c.require(cc.cat.is_skeletal(), || "A_cc not skeletal".to_string());
            c.require(fully_faithful(&cc.i), || "i: A → A_cc not fully faithful".to_string());
            c.require(fully_faithful(&cc.j), || "j: A_cc → PA not fully faithful".to_string());
            c.require(functor_compose(&cc.j, &cc.i) == yoneda(&cc.pa), || {
                "j∘i ≠ Yoneda".to_string()
            });
            c.done(rep, "prop139.2", "A ↪ A_cc ↪ PA, both fully faithful, with j∘i = Y", &inst);

            let mut c = Check::new();
            for (p, phi) in cc.presheaves.iter().enumerate() {
                let star = is_cauchy_presheaf(phi).map(|w| w.right_adjoint);
                for a0 in 0..a.object_count() {
                    c.require(cc.cat.hom_arrow(cc.i.apply(a0), p) == phi.entry(a0, 0), || {
                        format!("A_cc(i{}, φ_{p}) ≠ φ_{p}({})", a.name(a0), a.name(a0))
                    });
                    if let Some(star) = &star {
                        c.require(cc.cat.hom_arrow(p, cc.i.apply(a0)) == star.entry(0, a0), || {
                            format!("A_cc(φ_{p}, i{}) ≠ φ*({})", a.name(a0), a.name(a0))
                        });
                    }
                }
            }
            c.done(rep, "prop139.3", "A_cc(ia, φ) = φ(a) and A_cc(φ, ia) = φ*(a)", &inst);

            let mut c = Check::new();
            for (p, phi) in cc.presheaves.iter().enumerate() {
                match weighted_colim(phi, &cc.i) {
                    Ok(g) => c.require(g.apply(0) == p, || {
                        format!("colim(φ_{p}, i) lands at {}", g.apply(0))
                    }),
                    Err(e) => c.require(false, || {
                        format!("colim(φ_{p}, i) missing (at {})", e.at)
                    }),
                }
            }
            c.done(rep, "prop139.4", "colim(φ, i) = φ for every φ in A_cc", &inst);
        }
    }
}

fn prop146(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            let cc = match cauchy_completion(a, &ctx.caps) {
                Ok(v) => v,
                Err(e) => {
                    warn_cap(rep, "prop146", &inst, &e);
                    continue;
                }
            };
            let mut c = Check::new();
            match is_cauchy_complete(&cc.cat, &ctx.caps) {
                Ok(cert) => c.require(cert.holds, || "A_cc not Cauchy complete".to_string()),
                Err(e) => {
                    warn_cap(rep, "prop146", &inst, &e);
                    continue;
                }
            }
            if cc.cat.object_count() <= 8 {
                let q = a.base();
                for t in 0..q.object_count() {
                    let phis = match enumerate_presheaves(&cc.cat, t, &ctx.caps) {
                        Ok(v) => v,
                        Err(e) => {
                            warn_cap(rep, "prop146", &inst, &e);
                            continue;
                        }
                    };
                    for phi in phis.iter().filter(|p| is_cauchy_presheaf(p).is_some()) {
                        let restricted = dist_compose(&graph_right(&cc.i), phi);
                        let obj = cc
                            .pa
                            .index_of_presheaf(&restricted)
                            .and_then(|pi| cc.pa_indices.iter().position(|&x| x == pi));
                        match obj {
                            Some(p0) => {
                                for p in 0..cc.cat.object_count() {
                                    c.require(cc.cat.hom_arrow(p, p0) == phi.entry(p, 0), || {
                                        "Cauchy presheaf on A_cc not representable at its restriction"
                                            .to_string()
                                    });
                                }
                            }
                            None => c.require(false, || {
                                "restriction of a Cauchy presheaf escapes A_cc".to_string()
                            }),
                        }
                    }
                }
            }
            c.done(rep, "prop146", "A_cc is Cauchy complete: Cauchy presheaves on it are representable", &inst);
        }
    }
}

fn prop147(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, ccat) = partner(cb, ci, 1);
            let (_, bcat) = partner(cb, ci, 2);
            let inst = format!("{}/{}", cb.name, cname);
            let mut r = suite_rng(ctx, &format!("prop147 {inst}"));

            let mut c = Check::new();
            match (is_cauchy_complete(a, &ctx.caps), cauchy_colim_check(a, &ctx.caps)) {
                (Ok(x), Ok(y)) => c.require(x.holds == y.holds, || {
                    "presheaf and colimit certificates disagree".to_string()
                }),
                (Err(e), _) | (_, Err(e)) => {
                    warn_cap(rep, "prop147.1", &inst, &e);
                }
            }
            for u in evenly(&functors_or_sample(ctx, ccat, a, 3, &mut r), 3) {
                let theta = graph_left(&u);
                if let Some(w) = is_cauchy_distributor(&theta) {
                    for f in evenly(&functors_or_sample(ctx, a, bcat, 3, &mut r), 3) {
                        match weighted_colim(&theta, &f) {
                            Ok(k) => c.require(
                                graph_right(&k)
                                    == dist_compose(&w.right_adjoint, &graph_right(&f)),
                                || "(colim)^* ≠ Θ*⊗F^*".to_string(),
                            ),
                            Err(_) => c.require(false, || {
                                "colimit along a Cauchy weight missing".to_string()
                            }),
                        }
                    }
                }
            }
            c.done(rep, "prop147.1", "Cauchy colimits always exist, with (colim(Θ,F))^* = Θ*⊗F^*", &inst);

            let mut c = Check::new();
            let mut copool: Vec<Distributor> =
                (0..a.object_count()).map(|a0| corepresentable(a, a0)).collect();
            copool.extend(sample_copresheaves(ctx, a, 6, &mut r));
            for psi in &copool {
                if is_cauchy_copresheaf(psi).is_none() {
                    continue;
                }
                let g = weighted_lim(psi, &identity_functor(a)).ok().map(|x| x.apply(0));
                let h = converges_to(&opposite_distributor(psi)).ok().map(|x| x.apply(0));
                c.require(g == h, || "lim(ψ,1) disagrees with representability of ψ".to_string());
            }
            c.done(rep, "prop147.2", "for Cauchy ψ: lim(ψ,1) exists iff ψ is representable, same witness", &inst);

            let mut c = Check::new();
            let aop = Arc::new(opposite_category(a));
            match (is_cauchy_complete(a, &ctx.caps), is_cauchy_complete(&aop, &ctx.caps)) {
                (Ok(x), Ok(y)) => c.require(x.holds == y.holds, || {
                    format!("A: {}, A^op: {}", x.holds, y.holds)
                }),
                (Err(e), _) | (_, Err(e)) => {
                    warn_cap(rep, "prop147.3", &inst, &e);
                }
            }
            c.done(rep, "prop147.3", "A Cauchy complete ⟺ A^op Cauchy complete", &inst);
        }
    }
}

fn prop148(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let (_, bcat) = partner(cb, ci, 1);
            let inst = format!("{}/{}", cb.name, cname);
            let cc = match cauchy_completion(a, &ctx.caps) {
                Ok(v) => v,
                Err(e) => {
                    warn_cap(rep, "prop148", &inst, &e);
                    continue;
                }
            };
            let mut r = suite_rng(ctx, &format!("prop148 {inst}"));
            let mut c = Check::new();
            for f in evenly(&functors_or_sample(ctx, a, bcat, 6, &mut r), 6) {
                let lan = kan_ext_pointwise_left(&f, &cc.i);
                let colims: Vec<Option<QFunctor>> =
                    cc.presheaves.iter().map(|phi| weighted_colim(phi, &f).ok()).collect();
                c.require(lan.is_ok() == colims.iter().all(|o| o.is_some()), || {
                    "extension exists ⟺ all Cauchy colimits exist fails".to_string()
                });
                if let Ok(k) = &lan {
                    c.require(functor_iso(&functor_compose(k, &cc.i), &f), || {
                        "the extension does not restrict to F".to_string()
                    });
                    for (p, o) in colims.iter().enumerate() {
                        if let Some(g) = o {
                            c.require(bcat.obj_iso(k.apply(p), g.apply(0)), || {
                                format!("extension value at φ_{p} is not colim(φ_{p},F)")
                            });
                        }
                    }
                }
            }
            c.done(rep, "prop148", "F extends along i ⟺ colim(φ,F) exists for all Cauchy φ; then Lan(φ) = colim(φ,F)", &inst);
        }
    }
}

fn prop150(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        for (cname, a) in &cb.cats {
            let inst = format!("{}/{}", cb.name, cname);
            let mut c = Check::new();
            match check_self_equivalence_in_dist(a, &ctx.caps) {
                Ok(b) => c.require(b, || "i*⊗i_* and i_*⊗i* are not the identities".to_string()),
                Err(e) => {
                    warn_cap(rep, "prop150.1", &inst, &e);
                }
            }
            c.done(rep, "prop150.1", "i*⊗i_* = A_cc(−,−) and i_*⊗i* = A(−,−): A ≃ A_cc in Dist", &inst);

            let cc = match cauchy_completion(a, &ctx.caps) {
                Ok(v) => v,
                Err(e) => {
                    warn_cap(rep, "prop150.2", &inst, &e);
                    continue;
                }
            };
            let mut c = Check::new();
            match is_cauchy_complete(a, &ctx.caps) {
                Ok(cert) => {
                    c.require(cert.holds == essentially_surjective(&cc.i), || {
                        "essential surjectivity of i disagrees".to_string()
                    });
                    c.require(cert.holds == is_equivalence(&cc.i), || {
                        "equivalence of i disagrees".to_string()
                    });
                }
                Err(e) => {
                    warn_cap(rep, "prop150.2", &inst, &e);
                }
            }
            c.done(rep, "prop150.2", "A Cauchy complete ⟺ i: A → A_cc is an equivalence", &inst);
        }
    }
}

fn prop155(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let completions: Vec<Option<crate::cauchy::CauchyCompletion>> =
            cb.cats.iter().map(|(_, cat)| cauchy_completion(cat, &ctx.caps).ok()).collect();

        for (ci, (cname, a)) in cb.cats.iter().enumerate() {
            let inst = format!("{}/{}", cb.name, cname);
            let mut c = Check::new();
            let (skel, _) = skeletal_quotient(a);
            match morita_equivalent(a, &skel, &ctx.caps) {
                Ok(cert) => {
                    c.require(cert.equivalent, || "A not Morita equivalent to its skeleton".to_string());
                    c.require(cert.phi.is_some() && cert.psi.is_some(), || {
                        "missing invertible witnesses".to_string()
                    });
                }
                Err(e) => warn_cap(rep, "prop155.1", &inst, &e),
            }
            if let Some(cc) = &completions[ci] {
                match morita_equivalent(a, &cc.cat, &ctx.caps) {
                    Ok(cert) => c.require(cert.equivalent, || {
                        "A not Morita equivalent to A_cc".to_string()
                    }),
                    Err(e) => warn_cap(rep, "prop155.1", &inst, &e),
                }
            }
            c.done(rep, "prop155.1", "A ∼ skel A and A ∼ A_cc", &inst);
        }

        for ci in 0..cb.cats.len() {
            for cj in ci + 1..cb.cats.len() {
                let (n1, c1cat) = &cb.cats[ci];
                let (n2, c2cat) = &cb.cats[cj];
                let inst = format!("{}/{}∼{}", cb.name, n1, n2);
                let cert = match morita_equivalent(c1cat, c2cat, &ctx.caps) {
                    Ok(v) => v,
                    Err(e) => {
                        warn_cap(rep, "prop155.2", &inst, &e);
                        continue;
                    }
                };
                let (cc1, cc2) = match (&completions[ci], &completions[cj]) {
                    (Some(x), Some(y)) => (x, y),
                    _ => continue,
                };
                let mut c = Check::new();
                match enumerate_functors(&cc1.cat, &cc2.cat, &ctx.caps) {
                    Ok(fs) => c.require(cert.equivalent == fs.iter().any(is_equivalence), || {
                        "Morita verdict disagrees with equivalence of completions".to_string()
                    }),
                    Err(e) => warn_cap(rep, "prop155.2", &inst, &e),
                }
                if cert.equivalent {
                    match (&cert.phi, &cert.psi) {
                        (Some(phi), Some(psi)) => {
                            c.require(dist_compose(psi, phi) == identity_dist(c1cat), || {
                                "Ψ⊗Φ ≠ A".to_string()
                            });
                            c.require(dist_compose(phi, psi) == identity_dist(c2cat), || {
                                "Φ⊗Ψ ≠ B".to_string()
                            });
                        }
                        _ => c.require(false, || "equivalent but no witnesses".to_string()),
                    }
                }
                c.done(rep, "prop155.2", "A ∼ B ⟺ A_cc ≃ B_cc, witnessed by an invertible pair of distributors", &inst);

                let (pa, pb) = match (
                    presheaf_category(c1cat, &ctx.caps),
                    presheaf_category(c2cat, &ctx.caps),
                ) {
                    (Ok(x), Ok(y)) => (x, y),
                    _ => continue,
                };
                if pa.cat.object_count() <= 8 && pb.cat.object_count() <= 8 {
                    match enumerate_functors(&pa.cat, &pb.cat, &ctx.caps) {
                        Ok(fs) => {
                            let mut c = Check::new();
                            c.require(cert.equivalent == fs.iter().any(is_equivalence), || {
                                "Morita verdict disagrees with PA ≃ PB".to_string()
                            });
                            c.done(rep, "prop155.3", "A ∼ B ⟺ PA ≃ PB", &inst);
                        }
                        Err(e) => warn_cap(rep, "prop155.3", &inst, &e),
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Matrix-calculus suites.

fn matr(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let q = &cb.base;
        let inst = cb.name.as_str();
        let mut r = suite_rng(ctx, &format!("matr {inst}"));
        let t = |i: usize| i % q.object_count();
        let mk = |names: &[&str], types: Vec<usize>| {
            (TypedSet::new(names.iter().map(|s| s.to_string()).collect(), types.clone()), types)
        };
        let (xs, xt) = mk(&["x0"], vec![t(0)]);
        let (ys, yt) = mk(&["y0", "y1"], vec![t(0), t(1)]);
        let (zs, zt) = mk(&["z0", "z1"], vec![t(1), t(0)]);
        let (ws, wt) = mk(&["w0"], vec![t(1)]);

        let mut c = Check::new();
        for _ in 0..12 {
            let m = random_matrix(q, &xs, &xt, &ys, &yt, &mut r);
            let n = random_matrix(q, &ys, &yt, &zs, &zt, &mut r);
            let p = random_matrix(q, &zs, &zt, &ws, &wt, &mut r);
            c.require(matr_compose(&m, &matr_identity(q, &xs)) == m, || "M∘1 ≠ M".to_string());
            c.require(matr_compose(&matr_identity(q, &ys), &m) == m, || "1∘M ≠ M".to_string());
            c.require(
                matr_compose(&p, &matr_compose(&n, &m)) == matr_compose(&matr_compose(&p, &n), &m),
                || "associativity fails".to_string(),
            );
        }
        c.done(rep, "matr.1", "Matr(Q) is a category: identities and associativity", inst);

        let mut c = Check::new();
        for _ in 0..10 {
            let m1 = random_matrix(q, &xs, &xt, &ys, &yt, &mut r);
            let m2 = random_matrix(q, &xs, &xt, &ys, &yt, &mut r);
            let n = random_matrix(q, &ys, &yt, &zs, &zt, &mut r);
            let sup = matr_sup(q, &xs, &ys, &[m1.clone(), m2.clone()]);
            c.require(matr_leq(&m1, &sup) && matr_leq(&m2, &sup), || {
                "join is not an upper bound".to_string()
            });
            c.require(
                matr_compose(&n, &sup)
                    == matr_sup(q, &xs, &zs, &[matr_compose(&n, &m1), matr_compose(&n, &m2)]),
                || "N∘(M∨M′) ≠ N∘M ∨ N∘M′".to_string(),
            );
            let n2 = random_matrix(q, &ys, &yt, &zs, &zt, &mut r);
            c.require(
                matr_compose(&matr_sup(q, &ys, &zs, &[n.clone(), n2.clone()]), &m1)
                    == matr_sup(q, &xs, &zs, &[matr_compose(&n, &m1), matr_compose(&n2, &m1)]),
                || "(N∨N′)∘M ≠ N∘M ∨ N′∘M".to_string(),
            );
            c.require(
                matr_compose(&n, &matr_bottom(q, &xs, &ys)) == matr_bottom(q, &xs, &zs),
                || "⊥ not absorbed".to_string(),
            );
        }
        c.done(rep, "matr.2", "hom posets are complete lattices; ∘ preserves ⋁ and ⊥", inst);

        let mut c = Check::new();
        for a in 0..q.object_count() {
            for b in 0..q.object_count() {
                for z in 0..q.object_count() {
                    let (sa, _) = mk(&["s"], vec![a]);
                    let (sb, _) = mk(&["s"], vec![b]);
                    let (sz, _) = mk(&["s"], vec![z]);
                    for f in q.arrows(a, b) {
                        for g in q.arrows(b, z) {
                            let mf = QMatrix::new(Arc::clone(q), sa.clone(), sb.clone(), vec![f.elt])
                                .expect("singleton");
                            let mg = QMatrix::new(Arc::clone(q), sb.clone(), sz.clone(), vec![g.elt])
                                .expect("singleton");
                            c.require(
                                matr_compose(&mg, &mf).mat() == [q.compose(g, f).elt],
                                || format!("at ({}, {})", q.format_arrow(f), q.format_arrow(g)),
                            );
                        }
                    }
                }
            }
        }
        c.done(rep, "matr.3", "one-element matrices compose exactly as base arrows", inst);

        let mut c = Check::new();
        match enumerate_matrices(q, &xs, &ws, &ctx.caps) {
            Ok(v) => c.require(v.len() == q.hom(xt[0], wt[0]).len(), || {
                format!("{} matrices, {} arrows", v.len(), q.hom(xt[0], wt[0]).len())
            }),
            Err(e) => warn_cap(rep, "matr.4", inst, &e),
        }
        c.done(rep, "matr.4", "matrices over one-point sets are the hom lattice", inst);
    }
}

fn prop25(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let q = &cb.base;
        let inst = cb.name.as_str();
        let mut r = suite_rng(ctx, &format!("prop25 {inst}"));
        let t = |i: usize| i % q.object_count();
        let xs = TypedSet::new(vec!["x0".into(), "x1".into()], vec![t(0), t(1)]);
        let xt = vec![t(0), t(1)];
        let ys = TypedSet::new(vec!["y0".into()], vec![t(1)]);
        let yt = vec![t(1)];
        let zs = TypedSet::new(vec!["z0".into(), "z1".into()], vec![t(0), t(0)]);
        let zt = vec![t(0), t(0)];
        let parts = [(xs.clone(), xt.clone()), (ys.clone(), yt.clone())];
        let ds = direct_sum(q, &[xs.clone(), ys.clone()]);
        let sum_t: Vec<usize> = xt.iter().chain(yt.iter()).copied().collect();

        let mut c = Check::new();
        for i in 0..2 {
            for j in 0..2 {
                let comp = matr_compose(&ds.p[j], &ds.s[i]);
                let expect = if i == j {
                    matr_identity(q, &parts[i].0)
                } else {
                    matr_bottom(q, &parts[i].0, &parts[j].0)
                };
                c.require(comp == expect, || format!("p_{j}∘s_{i} wrong"));
            }
            c.require(
                matr_leq(&matr_compose(&ds.s[i], &ds.p[i]), &matr_identity(q, &ds.obj)),
                || format!("counit fails for summand {i}"),
            );
        }
        let inj: Vec<QMatrix> = (0..2).map(|i| matr_compose(&ds.s[i], &ds.p[i])).collect();
        c.require(matr_sup(q, &ds.obj, &ds.obj, &inj) == matr_identity(q, &ds.obj), || {
            "⋁ s_i∘p_i ≠ 1".to_string()
        });
        c.done(rep, "prop25.1", "X⊕Y: s_i ⊣ p_i, p_j∘s_i = δ_ij, ⋁ s_i∘p_i = 1", inst);

        let mut c = Check::new();
        for _ in 0..8 {
            let m = random_matrix(q, &ds.obj, &sum_t, &zs, &zt, &mut r);
            let comps: Vec<QMatrix> =
                (0..2).map(|i| matr_compose(&matr_compose(&m, &ds.s[i]), &ds.p[i])).collect();
            c.require(matr_sup(q, &ds.obj, &zs, &comps) == m, || {
                "M ≠ ⋁ (M∘s_i)∘p_i".to_string()
            });
            let m2 = random_matrix(q, &zs, &zt, &ds.obj, &sum_t, &mut r);
            let comps2: Vec<QMatrix> =
                (0..2).map(|i| matr_compose(&ds.s[i], &matr_compose(&ds.p[i], &m2))).collect();
            c.require(matr_sup(q, &zs, &ds.obj, &comps2) == m2, || {
                "M ≠ ⋁ s_i∘(p_i∘M)".to_string()
            });
        }
        c.done(rep, "prop25.2", "matrices out of and into a sum are recovered from their components", inst);
    }
}

fn bim(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let q = &cb.base;
        let inst = cb.name.as_str();
        let w = BaseQ(Arc::clone(q));
        let bq = BimQ(BaseQ(Arc::clone(q)));
        let n = q.object_count();

        let mut c = Check::new();
        for x in 0..n {
            let listed = enumerate_monads(q, x);
            let manual: Vec<QArrow> = q
                .arrows(x, x)
                .filter(|&t| q.leq_arrow(q.id(x), t) && q.leq_arrow(q.compose(t, t), t))
                .collect();
            c.require(listed == manual, || format!("monad list differs at object {x}"));
            for &t in &manual {
                c.require(q.compose(t, t) == t, || {
                    format!("monad {} not idempotent", q.format_arrow(t))
                });
            }
            for t in q.arrows(x, x) {
                c.require(
                    Monad::new(&w, t).is_ok()
                        == (q.leq_arrow(q.id(x), t) && q.leq_arrow(q.compose(t, t), t)),
                    || format!("validation differs at {}", q.format_arrow(t)),
                );
            }
        }
        c.done(rep, "bim.1", "monads are the arrows with 1 ≤ t and t∘t ≤ t; such t are idempotent", inst);

        let mons: Vec<Monad<BaseQ>> = (0..n)
            .flat_map(|x| {
                evenly(&enumerate_monads(q, x), 2)
                    .into_iter()
                    .map(|t| Monad::new(&w, t).expect("enumerated monads validate"))
                    .collect::<Vec<_>>()
            })
            .collect();

        let mut c = Check::new();
        for (i, s) in mons.iter().enumerate() {
            let t2 = &mons[(i + 1) % mons.len()];
            let u = &mons[(i + 2) % mons.len()];
            for b_ar in q.arrows(s.carrier, t2.carrier) {
                c.require(
                    Bimod::new(&w, s.clone(), t2.clone(), b_ar).is_ok()
                        == (q.leq_arrow(q.compose(t2.t, b_ar), b_ar)
                            && q.leq_arrow(q.compose(b_ar, s.t), b_ar)),
                    || format!("bimodule validation differs at {}", q.format_arrow(b_ar)),
                );
            }
            let bs: Vec<Bimod<BaseQ>> = q
                .arrows(s.carrier, t2.carrier)
                .filter_map(|b_ar| Bimod::new(&w, s.clone(), t2.clone(), b_ar).ok())
                .collect();
            let cs: Vec<Bimod<BaseQ>> = q
                .arrows(t2.carrier, u.carrier)
                .filter_map(|b_ar| Bimod::new(&w, t2.clone(), u.clone(), b_ar).ok())
                .collect();
            for b in evenly(&bs, 4) {
                c.require(bim_compose(&w, &b, &bim_identity(s)) == b, || "b⊗1 ≠ b".to_string());
                c.require(bim_compose(&w, &bim_identity(t2), &b) == b, || "1⊗b ≠ b".to_string());
                for cc2 in evenly(&cs, 3) {
                    let left = bim_compose(&w, &cc2, &b);
                    c.require(
                        q.leq_arrow(q.compose(u.t, left.b), left.b)
                            && q.leq_arrow(q.compose(left.b, s.t), left.b),
                        || "composite is not a bimodule".to_string(),
                    );
                }
            }
        }
        c.done(rep, "bim.2", "Bim(Q): bimodules compose, with the monads as identities", inst);

        let mut c = Check::new();
        for (i, s) in mons.iter().enumerate() {
            let t2 = &mons[(i + 1) % mons.len()];
            let bs: Vec<Bimod<BaseQ>> = q
                .arrows(s.carrier, t2.carrier)
                .filter_map(|b_ar| Bimod::new(&w, s.clone(), t2.clone(), b_ar).ok())
                .collect();
            for b1 in evenly(&bs, 3) {
                for b2 in evenly(&bs, 3) {
                    let j = bq.join(&b1, &b2);
                    c.require(bq.leq(&b1, &j) && bq.leq(&b2, &j), || {
                        "join is not an upper bound".to_string()
                    });
                    for ub in &bs {
                        if bq.leq(&b1, ub) && bq.leq(&b2, ub) {
                            c.require(bq.leq(&j, ub), || "join is not least".to_string());
                        }
                    }
                }
            }
        }
        c.done(rep, "bim.3", "hom posets of Bim(Q) have sups computed as in Q", inst);

        let mut c = Check::new();
        let cats: Vec<Arc<QCategory>> = cb.cats.iter().map(|(_, c)| Arc::clone(c)).collect();
        let mut r = suite_rng(ctx, &format!("bim {inst}"));
        let mut dists = Vec::new();
        for i in 0..cats.len() {
            let j = (i + 1) % cats.len();
            dists.push(random_dist(&cats[i], &cats[j], &mut r));
            dists.push(identity_dist(&cats[i]));
        }
        let report = dist_equals_bim_matr(&cats, &dists);
        c.require(report.agrees, || "distributor and bimodule calculus disagree".to_string());
        c.require(
            report.categories_checked == cats.len() && report.distributors_checked == dists.len(),
            || "coverage mismatch".to_string(),
        );
        c.require(report.composites_checked > 0, || "no composites checked".to_string());
        for cat in &cats {
            match monad_of_category(cat) {
                Ok(m) => c.require(m.t == matrix_of_category(cat), || {
                    "monad carrier differs from the hom matrix".to_string()
                }),
                Err(_) => c.require(false, || "a category failed to be a monad".to_string()),
            }
        }
        c.done(rep, "bim.4", "categories are monads and distributors bimodules in Matr(Q)", inst);
    }
}

fn prop38(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let q = &cb.base;
        let inst = cb.name.as_str();
        let w = BaseQ(Arc::clone(q));

        let mut c = Check::new();
        for x in 0..q.object_count() {
            for t_ar in evenly(&enumerate_monads(q, x), 3) {
                let t_mon = Monad::new(&w, t_ar).expect("enumerated monads validate");
                for s_ar in evenly(&enumerate_bim_monads_over(q, t_ar), 4) {
                    let m = Bimod::new(&w, t_mon.clone(), t_mon.clone(), s_ar)
                        .expect("monads over t are bimodules");
                    match split_monad(&w, &m) {
                        Ok(sp) => {
                            c.require(bim_compose(&w, &sp.p, &sp.s) == m, || {
                                "p⊗s ≠ m".to_string()
                            });
                            c.require(
                                bim_compose(&w, &sp.s, &sp.p) == bim_identity(&sp.obj),
                                || "s⊗p ≠ 1".to_string(),
                            );
                            c.require(
                                q.leq_arrow(t_mon.t, q.compose(sp.p.b, sp.s.b)),
                                || "unit of s ⊣ p fails".to_string(),
                            );
                            c.require(
                                q.leq_arrow(q.compose(sp.s.b, sp.p.b), sp.obj.t),
                                || "counit of s ⊣ p fails".to_string(),
                            );
                        }
                        Err(_) => c.require(false, || {
                            format!("monad {} did not split", q.format_arrow(s_ar))
                        }),
                    }
                }
            }
        }
        c.done(rep, "prop38.1", "every monad in Bim(Q) splits: m = p⊗s with s⊗p = 1 and s ⊣ p", inst);

        let mw = MatrQ(Arc::clone(q));
        let mut c = Check::new();
        for (_, cat) in &cb.cats {
            let amat = matrix_of_category(cat);
            let id_mon = Monad::new(&mw, matr_identity(q, cat.objects()))
                .expect("the identity matrix is a monad");
            let m = Bimod::new(&mw, id_mon.clone(), id_mon.clone(), amat.clone())
                .expect("hom matrices are bimodules over the identity");
            match split_monad(&mw, &m) {
                Ok(sp) => {
                    c.require(bim_compose(&mw, &sp.p, &sp.s) == m, || "p⊗s ≠ A".to_string());
                    c.require(
                        bim_compose(&mw, &sp.s, &sp.p) == bim_identity(&sp.obj),
                        || "s⊗p ≠ 1".to_string(),
                    );
                    c.require(
                        monad_of_category(cat).map(|mm| mm.t == amat).unwrap_or(false),
                        || "monad of the category is not its hom matrix".to_string(),
                    );
                }
                Err(_) => c.require(false, || "a hom-matrix monad did not split".to_string()),
            }
        }
        c.done(rep, "prop38.2", "splitting the hom-matrix monad over a discrete carrier recovers the category", inst);
    }
}

fn def9(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let q = &cb.base;
        let inst = cb.name.as_str();
        let lf = seeded_lax_functors(q, ctx.seed ^ salt(&format!("def9 {inst}")), 8);
        let opq = Arc::new(q.opposite());

        let mut c = Check::new();
        for f in &lf {
            let g = opposite_lax_functor(f, &opq);
            let qq = Arc::new(opq.opposite());
            let gg = opposite_lax_functor(&g, &qq);
            c.require(
                gg.shape() == f.shape()
                    && (0..f.shape().object_count()).all(|d| gg.ob_image(d) == f.ob_image(d))
                    && (0..f.shape().arrow_count())
                        .all(|ai| gg.arrow_image(ai).elt == f.arrow_image(ai).elt),
                || "(F^op)^op ≠ F".to_string(),
            );
        }
        c.done(rep, "def9.1", "lax functors dualize: (F^op)^op = F", inst);

        let mut c2 = Check::new();
        let mut c3 = Check::new();
        let shape_count = 4;
        for i in 0..shape_count.min(lf.len()) {
            let (f, g) = (&lf[i], &lf[(i + shape_count) % lf.len()]);
            if f.shape() != g.shape() {
                continue;
            }
            let lax = match enumerate_lax_transfos(f, g, &ctx.caps) {
                Ok(v) => v,
                Err(e) => {
                    warn_cap(rep, "def9.2", inst, &e);
                    continue;
                }
            };
            let fop = opposite_lax_functor(f, &opq);
            let gop = opposite_lax_functor(g, &opq);
            match enumerate_oplax_transfos(&gop, &fop, &ctx.caps) {
                Ok(dual) => c2.require(set_eq(&lax, &dual), || {
                    "lax F⇒G and oplax G^op⇒F^op differ".to_string()
                }),
                Err(e) => warn_cap(rep, "def9.2", inst, &e),
            }

            c3.require(
                is_lax_transfo(f, f, &identity_transfo(f))
                    && is_oplax_transfo(f, f, &identity_transfo(f)),
                || "identity transformation not (op)lax".to_string(),
            );
            if let Ok(endo) = enumerate_lax_transfos(g, g, &ctx.caps) {
                for theta in lax.iter().take(4) {
                    for psi in endo.iter().take(4) {
                        let comp = transfo_compose(f, g, g, psi, theta);
                        c3.require(is_lax_transfo(f, g, &comp), || {
                            "composite of lax transfos not lax".to_string()
                        });
                    }
                }
            }
            if lax.len() >= 2 {
                let fam = [lax[0].clone(), lax[lax.len() - 1].clone()];
                c3.require(is_lax_transfo(f, g, &transfo_sup(f, g, &fam)), || {
                    "sup of lax transfos not lax".to_string()
                });
            }
        }
        c2.done(rep, "def9.2", "lax transformations F⇒G = oplax transformations G^op⇒F^op", inst);
        c3.done(rep, "def9.3", "identities are (op)lax; lax transfos compose and are ⋁-closed", inst);
    }
}

fn prop19(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let q = &cb.base;
        let inst = cb.name.as_str();
        let point = FinCat::point();
        let pp = FinCat::parallel_pair();

        let mut c1 = Check::new();
        let mut c2 = Check::new();
        for cobj in 0..q.object_count() {
            for t in evenly(&enumerate_monads(q, cobj), 3) {
                let f_t = LaxFunctor::new(point.clone(), Arc::clone(q), vec![cobj], vec![t.elt])
                    .expect("a monad is a lax functor from the point");
                let p_f = LaxFunctor::new(
                    pp.clone(),
                    Arc::clone(q),
                    vec![cobj, cobj],
                    vec![t.elt, q.id(cobj).elt, q.id(cobj).elt, q.id(cobj).elt],
                )
                .expect("the parallel-pair presentation is lax");
                for x in 0..q.object_count() {
                    let d_pt =
                        LaxFunctor::new(point.clone(), Arc::clone(q), vec![x], vec![q.id(x).elt])
                            .expect("constant functor");
                    let d_pp = LaxFunctor::new(
                        pp.clone(),
                        Arc::clone(q),
                        vec![x, x],
                        vec![q.id(x).elt; 4],
                    )
                    .expect("constant functor");

                    let fixed: Vec<Vec<Elt>> = q
                        .arrows(x, cobj)
                        .filter(|&e| q.compose(t, e) == e)
                        .map(|e| vec![e.elt])
                        .collect();
                    match enumerate_lax_transfos(&d_pt, &f_t, &ctx.caps) {
                        Ok(s1) => c1.require(set_eq(&s1, &fixed), || {
                            format!("lax cones ≠ t-fixed arrows at apex {x}")
                        }),
                        Err(e) => warn_cap(rep, "prop19.1", inst, &e),
                    }
                    match enumerate_lax_transfos(&d_pp, &p_f, &ctx.caps) {
                        Ok(lax2) => {
                            let both: Vec<Vec<Elt>> = lax2
                                .into_iter()
                                .filter(|th| is_oplax_transfo(&d_pp, &p_f, th))
                                .collect();
                            c1.require(both.iter().all(|th| th[0] == th[1]), || {
                                "a strict cone has unequal legs".to_string()
                            });
                            let projected: Vec<Vec<Elt>> =
                                both.iter().map(|th| vec![th[0]]).collect();
                            c1.require(set_eq(&projected, &fixed), || {
                                format!("strict cones ≠ t-fixed arrows at apex {x}")
                            });
                        }
                        Err(e) => warn_cap(rep, "prop19.1", inst, &e),
                    }
                    if !fixed.is_empty() {
                        let joined =
                            q.join_arrows(x, cobj, fixed.iter().map(|v| q.arrow(x, cobj, v[0])));
                        c1.require(q.compose(t, joined) == joined, || {
                            "t-fixed arrows not closed under ⋁".to_string()
                        });
                    }

                    let cofixed: Vec<Vec<Elt>> = q
                        .arrows(cobj, x)
                        .filter(|&e| q.compose(e, t) == e)
                        .map(|e| vec![e.elt])
                        .collect();
                    match enumerate_oplax_transfos(&f_t, &d_pt, &ctx.caps) {
                        Ok(o1) => c2.require(set_eq(&o1, &cofixed), || {
                            format!("oplax cocones ≠ fixed arrows at apex {x}")
                        }),
                        Err(e) => warn_cap(rep, "prop19.2", inst, &e),
                    }
                    match enumerate_lax_transfos(&p_f, &d_pp, &ctx.caps) {
                        Ok(lax3) => {
                            let both: Vec<Vec<Elt>> = lax3
                                .into_iter()
                                .filter(|th| is_oplax_transfo(&p_f, &d_pp, th))
                                .collect();
                            c2.require(both.iter().all(|th| th[0] == th[1]), || {
                                "a strict cocone has unequal legs".to_string()
                            });
                            let projected: Vec<Vec<Elt>> =
                                both.iter().map(|th| vec![th[0]]).collect();
                            c2.require(set_eq(&projected, &cofixed), || {
                                format!("strict cocones ≠ fixed arrows at apex {x}")
                            });
                        }
                        Err(e) => warn_cap(rep, "prop19.2", inst, &e),
                    }
                }
            }
        }
        c1.done(rep, "prop19.1", "lax cones Δ ⇒ t from the point = {θ : t∘θ = θ} = strict cones over (t, 1)", inst);
        c2.done(rep, "prop19.2", "lax cocones t ⇒ Δ = {σ : σ∘t = σ} = strict cocones under (t, 1)", inst);
    }
}

fn prop40(ctx: &SuiteCtx<'_>, rep: &mut LawReport) {
    for cb in &ctx.corpus.bases {
        let q = &cb.base;
        let lf = seeded_lax_functors(q, ctx.seed ^ salt(&format!("prop40 {}", cb.name)), 5);
        let mut apexes = default_apexes(q);
        for (_, cat) in &cb.cats {
            if cat.object_count() <= 2 {
                apexes.push(Arc::clone(cat));
            }
        }
        for (k, f) in lf.iter().enumerate() {
            let inst = format!("{}#lax{}", cb.name, k);
            let l = lax_colimit_in_dist(f);
            let n = f.shape().object_count();

            let mut c = Check::new();
            for d1 in 0..n {
                for d in 0..n {
                    let expect = q.join_arrows(
                        f.ob_image(d),
                        f.ob_image(d1),
                        f.shape().hom_between(d, d1).into_iter().map(|ai| f.arrow_image(ai)),
                    );
                    c.require(l.cat.hom_arrow(d1, d).elt == expect.elt, || {
                        format!("hom ({d1},{d}) is not the arrow join")
                    });
                }
            }
            for d in 0..n {
                c.require(check_dist_adjunction(&l.s[d], &l.p[d]), || {
                    format!("s_{d} ⊣ p_{d} fails")
                });
            }
            let composites: Vec<Distributor> =
                (0..n).map(|d| dist_compose(&l.s[d], &l.p[d])).collect();
            c.require(
                dist_sup_all(&l.cat, &l.cat, &composites) == identity_dist(&l.cat),
                || "⋁ s_d⊗p_d ≠ 1".to_string(),
            );
            c.done(rep, "prop40.1", "L(d′,d) = ⋁{Fa : a → }, s_d ⊣ p_d, ⋁ s_d⊗p_d = 1", &inst);

            let sampled = Some(format!(
                "universality checked over {} sampled apexes, not all of the base",
                apexes.len()
            ));
            match verify_lax_universality(f, &l, ConeSide::Colimit, &apexes, &ctx.caps) {
                Ok(b) => rep.row(
                    "prop40.2",
                    "lax cocones out of F ↔ distributors out of L, preserving ⋁ and ⊥",
                    &inst,
                    b,
                    sampled.clone(),
                ),
                Err(e) => rep.warn(format!("prop40.2 skipped on {inst}: {e}")),
            }
            match verify_lax_universality(f, &l, ConeSide::Limit, &apexes, &ctx.caps) {
                Ok(b) => rep.row(
                    "prop40.3",
                    "lax cones into F ↔ distributors into L: the lax colimit is also the lax limit",
                    &inst,
                    b,
                    sampled,
                ),
                Err(e) => rep.warn(format!("prop40.3 skipped on {inst}: {e}")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx_for(corpus: &Corpus) -> SuiteCtx<'_> {
        SuiteCtx { corpus, caps: Caps::default(), seed: 7 }
    }

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<_> = suites().iter().map(|s| s.name).collect();
        let before = names.len();
        names.sort();
        names.dedup();
        assert_eq!(before, names.len());
    }

    #[test]
    fn unknown_suite_is_none() {
        let corpus = Corpus::standard();
        assert!(run_suite("no-such-suite", &ctx_for(&corpus)).is_none());
    }

    #[test]
    fn lemma04_passes_on_the_standard_corpus() {
        let corpus = Corpus::standard();
        let rep = run_suite("lemma04", &ctx_for(&corpus)).unwrap();
        assert!(!rep.rows.is_empty());
        assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn matr_and_bim_pass_on_the_standard_corpus() {
        let corpus = Corpus::standard();
        for name in ["matr", "bim", "prop25", "prop38"] {
            let rep = run_suite(name, &ctx_for(&corpus)).unwrap();
            assert!(rep.all_pass(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn rows_are_canonically_sorted() {
        let corpus = Corpus::standard();
        let rep = run_suite("def3", &ctx_for(&corpus)).unwrap();
        let keys: Vec<_> = rep.rows.iter().map(|r| (r.law.clone(), r.instance.clone())).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn same_seed_same_verdicts() {
        let corpus = Corpus::standard();
        let a = run_suite("prop4", &ctx_for(&corpus)).unwrap();
        let b = run_suite("prop4", &ctx_for(&corpus)).unwrap();
        assert_eq!(a.rows.len(), b.rows.len());
        for (x, y) in a.rows.iter().zip(&b.rows) {
            assert_eq!((&x.law, &x.instance, x.pass), (&y.law, &y.instance, y.pass));
        }
    }

    #[test]
    fn tiny_caps_produce_warnings_not_failures() {
        let corpus = Corpus::standard();
        let ctx = SuiteCtx {
            corpus: &corpus,
            caps: Caps { presheaves: 1, functors: 1, distributors: 1, raw: 1 },
            seed: 7,
        };
        let rep = run_suite("prop139", &ctx).unwrap();
        assert!(rep.all_pass());
        assert!(!rep.warnings.is_empty());
    }
}
