//! From syntax to live structures.
//!
//! `load` walks a parsed document in order and elaborates every
//! declaration into its `quantakit` value, checking names and laws as
//! it goes. Loading is total: it returns whatever elaborated cleanly
//! plus diagnostics for everything that did not. Declarations share
//! one namespace (so a name picks out its kind unambiguously) and may
//! refer only to earlier declarations.
//!
//! Law failures come back with repair hints. A category whose hom
//! entries do not compose is never silently completed; instead the
//! smallest closure is computed and the entries that would have to
//! grow are listed, and likewise for distributors that fail an action
//! inequality.

use crate::ast::*;
use quantakit::enriched::{Distributor, EnrichedError, QCategory, QFunctor, TypedSet};
use quantakit::lattice::{Elt, Lattice, LatticeError};
use quantakit::matrixcalc::{FinArrow, FinCat, FinCatError, LaxFunctor, MatrixCalcError};
use quantakit::quantaloid::{self, Quantaloid, QuantaloidError};
use std::collections::HashMap;
use std::sync::Arc;

/// Everything a document declares, by kind. Categories and lax
/// functors also remember the *name* of their base, which groups them
/// for corpus-wide law runs.
#[derive(Default)]
pub struct Model {
    pub lattices: Vec<(String, Lattice)>,
    pub bases: Vec<(String, Arc<Quantaloid>)>,
    pub cats: Vec<(String, String, Arc<QCategory>)>,
    pub functors: Vec<(String, QFunctor)>,
    pub dists: Vec<(String, Distributor)>,
    pub shapes: Vec<(String, FinCat)>,
    pub laxes: Vec<(String, String, LaxFunctor)>,
}

impl Model {
    pub fn lattice(&self, name: &str) -> Option<&Lattice> {
        self.lattices.iter().find(|(n, _)| n == name).map(|(_, l)| l)
    }

    pub fn base(&self, name: &str) -> Option<&Arc<Quantaloid>> {
        self.bases.iter().find(|(n, _)| n == name).map(|(_, q)| q)
    }

    pub fn cat(&self, name: &str) -> Option<&Arc<QCategory>> {
        self.cats.iter().find(|(n, _, _)| n == name).map(|(_, _, c)| c)
    }

    pub fn cat_base(&self, name: &str) -> Option<&str> {
        self.cats.iter().find(|(n, _, _)| n == name).map(|(_, b, _)| b.as_str())
    }

    pub fn functor(&self, name: &str) -> Option<&QFunctor> {
        self.functors.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn dist(&self, name: &str) -> Option<&Distributor> {
        self.dists.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    pub fn shape(&self, name: &str) -> Option<&FinCat> {
        self.shapes.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn lax(&self, name: &str) -> Option<&LaxFunctor> {
        self.laxes.iter().find(|(n, _, _)| n == name).map(|(_, _, f)| f)
    }
}

pub fn load(doc: &QkDocument) -> (Model, Vec<Diagnostic>) {
    let mut loader =
        Loader { model: Model::default(), diags: Vec::new(), seen: HashMap::new() };
    for decl in &doc.decls {
        match decl {
            Decl::Lattice(d) => loader.lattice_decl(d),
            Decl::Quantaloid(d) => loader.quantaloid_decl(d),
            Decl::Category(d) => loader.category_decl(d),
            Decl::Functor(d) => loader.functor_decl(d),
            Decl::Distributor(d) => loader.distributor_decl(d),
            Decl::Shape(d) => loader.shape_decl(d),
            Decl::LaxFunctor(d) => loader.laxfunctor_decl(d),
        }
    }
    (loader.model, loader.diags)
}

fn listing<I: IntoIterator<Item = S>, S: AsRef<str>>(items: I) -> String {
    let mut names: Vec<String> =
        items.into_iter().map(|s| format!("`{}`", s.as_ref())).collect();
    if names.is_empty() {
        return "none declared yet".into();
    }
    if names.len() > 12 {
        let extra = names.len() - 12;
        names.truncate(12);
        names.push(format!("... {extra} more"));
    }
    names.join(", ")
}

struct Loader {
    model: Model,
    diags: Vec<Diagnostic>,
    seen: HashMap<String, (&'static str, Span)>,
}

impl Loader {
    fn error(&mut self, span: Span, msg: impl Into<String>) {
        self.diags.push(Diagnostic::error(span, msg));
    }

    fn error_hint(&mut self, span: Span, msg: impl Into<String>, hint: impl Into<String>) {
        self.diags.push(Diagnostic::error(span, msg).with_hint(hint));
    }

    /// Enter a declared name into the single global namespace.
    fn claim(&mut self, name: &Name, kind: &'static str) -> bool {
        if let Some(&(other, span)) = self.seen.get(&name.node) {
            let msg = format!(
                "the name `{}` is already used by a {} declared at line {}",
                name.node, other, span.line
            );
            self.error_hint(name.span, msg, "every declaration needs a distinct name");
            return false;
        }
        self.seen.insert(name.node.clone(), (kind, name.span));
        true
    }

    fn lattice_ref(&mut self, n: &Name) -> Option<Lattice> {
        match self.model.lattice(&n.node) {
            Some(l) => Some(l.clone()),
            None => {
                let have = listing(self.model.lattices.iter().map(|(n, _)| n));
                self.error_hint(
                    n.span,
                    format!("unknown lattice `{}`", n.node),
                    format!("declared lattices: {have}"),
                );
                None
            }
        }
    }

    fn base_ref(&mut self, n: &Name) -> Option<Arc<Quantaloid>> {
        match self.model.base(&n.node) {
            Some(q) => Some(q.clone()),
            None => {
                let have = listing(self.model.bases.iter().map(|(n, _)| n));
                self.error_hint(
                    n.span,
                    format!("unknown quantaloid `{}`", n.node),
                    format!("declared quantaloids: {have}"),
                );
                None
            }
        }
    }

    fn cat_ref(&mut self, n: &Name) -> Option<(String, Arc<QCategory>)> {
        match self.model.cats.iter().find(|(name, _, _)| *name == n.node) {
            Some((_, b, c)) => Some((b.clone(), c.clone())),
            None => {
                let have = listing(self.model.cats.iter().map(|(n, _, _)| n));
                self.error_hint(
                    n.span,
                    format!("unknown category `{}`", n.node),
                    format!("declared categories: {have}"),
                );
                None
            }
        }
    }

    fn base_obj(&mut self, q: &Quantaloid, n: &Name) -> Option<usize> {
        match q.object_index(&n.node) {
            Some(i) => Some(i),
            None => {
                let have = listing(q.objects());
                self.error_hint(
                    n.span,
                    format!("the base has no object `{}`", n.node),
                    format!("base objects: {have}"),
                );
                None
            }
        }
    }

    fn elt_in(&mut self, lat: &Lattice, n: &Name, which: &str) -> Option<Elt> {
        match lat.index_of(&n.node) {
            Some(e) => Some(e),
            None => {
                let have = listing(lat.labels());
                self.error_hint(
                    n.span,
                    format!("`{}` is not an element of {which}", n.node),
                    format!("elements: {have}"),
                );
                None
            }
        }
    }

    fn lattice_decl(&mut self, d: &LatticeDecl) {
        if !self.claim(&d.name, "lattice") {
            return;
        }
        for (i, e) in d.elements.iter().enumerate() {
            if d.elements[..i].iter().any(|p| p.node == e.node) {
                self.error(e.span, format!("duplicate element `{}`", e.node));
                return;
            }
        }
        for (a, b) in &d.order {
            for n in [a, b] {
                if !d.elements.iter().any(|e| e.node == n.node) {
                    let have = listing(d.elements.iter().map(|e| &e.node));
                    self.error_hint(
                        n.span,
                        format!("`{}` is not an element of `{}`", n.node, d.name.node),
                        format!("elements: {have}"),
                    );
                    return;
                }
            }
        }
        let labels: Vec<String> = d.elements.iter().map(|e| e.node.clone()).collect();
        let pairs: Vec<(&str, &str)> =
            d.order.iter().map(|(a, b)| (a.node.as_str(), b.node.as_str())).collect();
        match Lattice::from_pairs(labels, &pairs) {
            Ok(l) => self.model.lattices.push((d.name.node.clone(), l)),
            Err(e) => {
                let pick = |e: &Elt| d.elements[*e].node.clone();
                let msg = match &e {
                    LatticeError::NotAntisymmetric(a, b) => format!(
                        "the order is not antisymmetric: `{}` <= `{}` and back, but they are distinct elements",
                        pick(a), pick(b)
                    ),
                    LatticeError::NoJoin(s) => format!(
                        "the subset {{{}}} has no least upper bound",
                        s.iter().map(pick).collect::<Vec<_>>().join(", ")
                    ),
                    LatticeError::NoMeet(s) => format!(
                        "the subset {{{}}} has no greatest lower bound",
                        s.iter().map(pick).collect::<Vec<_>>().join(", ")
                    ),
                    other => other.to_string(),
                };
                self.error_hint(
                    d.name.span,
                    msg,
                    "a complete lattice needs a join and a meet for every subset",
                );
            }
        }
    }

    fn quantaloid_decl(&mut self, d: &QuantaloidDecl) {
        if !self.claim(&d.name, "quantaloid") {
            return;
        }
        let q = match &d.body {
            QuantaloidBody::Bool2 => Some(quantaloid::bool2()),
            QuantaloidBody::RelLocale(l) => {
                let Some(lat) = self.lattice_ref(l) else { return };
                match quantaloid::rel_locale(&lat) {
                    Ok(q) => Some(q),
                    Err(QuantaloidError::BaseNotDistributive { x, y, z }) => {
                        let (lx, ly, lz) = (lat.label(x), lat.label(y), lat.label(z));
                        self.error_hint(
                            l.span,
                            format!(
                                "`{}` is not distributive: ({lx} join {ly}) meet {lz} differs from ({lx} meet {lz}) join ({ly} meet {lz})",
                                l.node
                            ),
                            "rel_locale needs a distributive lattice",
                        );
                        None
                    }
                    Err(e) => {
                        self.error(l.span, e.to_string());
                        None
                    }
                }
            }
            QuantaloidBody::Tropical(n) => match n.node.parse::<usize>() {
                Ok(v) if v <= 128 => Some(quantaloid::tropical_trunc(v)),
                Ok(_) => {
                    self.error_hint(
                        n.span,
                        "tropical ceiling too large",
                        "the ceiling must be at most 128",
                    );
                    None
                }
                Err(_) => {
                    self.error_hint(
                        n.span,
                        format!("`{}` is not a number", n.node),
                        "write tropical(N) with a ceiling N, e.g. tropical(3)",
                    );
                    None
                }
            },
            QuantaloidBody::Table(t) => self.quantaloid_table(d, t),
        };
        if let Some(q) = q {
            self.model.bases.push((d.name.node.clone(), Arc::new(q)));
        }
    }

    fn quantaloid_table(&mut self, d: &QuantaloidDecl, t: &QuantaloidTable) -> Option<Quantaloid> {
        if t.objects.is_empty() {
            self.error(d.name.span, "a quantaloid needs at least one object");
            return None;
        }
        for (i, o) in t.objects.iter().enumerate() {
            if t.objects[..i].iter().any(|p| p.node == o.node) {
                self.error(o.span, format!("duplicate object `{}`", o.node));
                return None;
            }
        }
        let n = t.objects.len();
        let names: Vec<String> = t.objects.iter().map(|o| o.node.clone()).collect();
        let obj = |this: &mut Self, nm: &Name| -> Option<usize> {
            match names.iter().position(|o| *o == nm.node) {
                Some(i) => Some(i),
                None => {
                    let have = listing(&names);
                    this.error_hint(
                        nm.span,
                        format!("`{}` is not an object of `{}`", nm.node, d.name.node),
                        format!("objects: {have}"),
                    );
                    None
                }
            }
        };

        let mut homs: Vec<Option<Lattice>> = vec![None; n * n];
        for (x, y, l) in &t.homs {
            let xi = obj(self, x)?;
            let yi = obj(self, y)?;
            let lat = self.lattice_ref(l)?;
            if homs[xi * n + yi].is_some() {
                self.error(x.span, format!("hom {} {} is given twice", x.node, y.node));
                return None;
            }
            homs[xi * n + yi] = Some(lat);
        }
        let missing: Vec<String> = (0..n * n)
            .filter(|i| homs[*i].is_none())
            .map(|i| format!("hom {} {}", names[i / n], names[i % n]))
            .collect();
        if !missing.is_empty() {
            self.error_hint(
                d.name.span,
                format!("missing hom-lattices: {}", missing.join(", ")),
                "declare `hom X Y: LATTICE;` for every ordered pair of objects",
            );
            return None;
        }
        let homs: Vec<Lattice> = homs.into_iter().map(|h| h.unwrap()).collect();

        let mode = t.generate.as_ref().map(|g| g.node).unwrap_or(Generate::Table);
        if mode == Generate::PlusCap {
            for (i, h) in homs.iter().enumerate() {
                if h.labels().iter().enumerate().any(|(k, l)| *l != k.to_string()) {
                    let span = t.generate.as_ref().map(|g| g.span).unwrap_or(d.name.span);
                    self.error_hint(
                        span,
                        format!(
                            "generate: plus-cap needs elements named 0, 1, ... in declaration order, but hom {} {} has {}",
                            names[i / n],
                            names[i % n],
                            listing(h.labels())
                        ),
                        "declare the cost lattice as elements: 0, 1, ..., N with N <= ... <= 1 <= 0",
                    );
                    return None;
                }
            }
        }

        // Fill each table from the generate mode, then let explicit
        // entries override.
        let mut comp: Vec<Vec<Option<Elt>>> = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let szf = homs[a * n + b].len();
                    let szg = homs[b * n + c].len();
                    let table: Vec<Option<Elt>> = match mode {
                        Generate::Table => vec![None; szg * szf],
                        Generate::Meet => {
                            if homs[a * n + b] != homs[a * n + c] || homs[b * n + c] != homs[a * n + c] {
                                let span =
                                    t.generate.as_ref().map(|g| g.span).unwrap_or(d.name.span);
                                self.error_hint(
                                    span,
                                    format!(
                                        "generate: meet needs hom {0} {1}, hom {1} {2} and hom {0} {2} to be the same lattice",
                                        names[a], names[b], names[c]
                                    ),
                                    "meet-generated composition only makes sense when all homs agree",
                                );
                                return None;
                            }
                            (0..szg * szf)
                                .map(|i| Some(homs[a * n + c].meet(i / szf, i % szf)))
                                .collect()
                        }
                        Generate::PlusCap => {
                            let cap = homs[a * n + c].len() - 1;
                            (0..szg * szf).map(|i| Some((i / szf + i % szf).min(cap))).collect()
                        }
                    };
                    comp.push(table);
                }
            }
        }

        for block in &t.compose {
            let xi = obj(self, &block.x)?;
            let yi = obj(self, &block.y)?;
            let zi = obj(self, &block.z)?;
            let szf = homs[xi * n + yi].len();
            for (g, f, h) in &block.entries {
                let gl = homs[yi * n + zi].clone();
                let fl = homs[xi * n + yi].clone();
                let hl = homs[xi * n + zi].clone();
                let ge = self.elt_in(&gl, g, &format!("hom {} {}", block.y.node, block.z.node))?;
                let fe = self.elt_in(&fl, f, &format!("hom {} {}", block.x.node, block.y.node))?;
                let he = self.elt_in(&hl, h, &format!("hom {} {}", block.x.node, block.z.node))?;
                comp[(xi * n + yi) * n + zi][ge * szf + fe] = Some(he);
            }
        }

        let mut final_comp: Vec<Vec<Elt>> = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let szf = homs[a * n + b].len();
                    let target = &homs[a * n + c];
                    let tbl = &comp[(a * n + b) * n + c];
                    let mut out = Vec::with_capacity(tbl.len());
                    for (i, cell) in tbl.iter().enumerate() {
                        match cell {
                            Some(e) => out.push(*e),
                            // A one-element target leaves no choice.
                            None if target.len() == 1 => out.push(0),
                            None => {
                                self.error_hint(
                                    d.name.span,
                                    format!(
                                        "no composite given for ({}, {}) in compose {} {} {}",
                                        homs[b * n + c].label(i / szf),
                                        homs[a * n + b].label(i % szf),
                                        names[a],
                                        names[b],
                                        names[c]
                                    ),
                                    "list every pair in a compose block, or use generate: meet / plus-cap",
                                );
                                return None;
                            }
                        }
                    }
                    final_comp.push(out);
                }
            }
        }

        let mut ids: Vec<Option<Elt>> = vec![None; n];
        for (x, e) in &t.ids {
            let xi = obj(self, x)?;
            let lat = homs[xi * n + xi].clone();
            let el = self.elt_in(&lat, e, &format!("hom {0} {0}", x.node))?;
            if ids[xi].is_some() {
                self.error(x.span, format!("id {} is given twice", x.node));
                return None;
            }
            ids[xi] = Some(el);
        }
        let mut final_ids = Vec::with_capacity(n);
        for a in 0..n {
            let lat = &homs[a * n + a];
            let e = match (ids[a], mode) {
                (Some(e), _) => e,
                (None, Generate::Meet) => lat.top(),
                (None, Generate::PlusCap) => 0,
                (None, Generate::Table) if lat.len() == 1 => 0,
                (None, Generate::Table) => {
                    self.error_hint(
                        d.name.span,
                        format!("no identity given for object {}", names[a]),
                        format!("add `id {}: ELEMENT;`", names[a]),
                    );
                    return None;
                }
            };
            final_ids.push(e);
        }

        match Quantaloid::new(names.clone(), homs.clone(), final_comp, final_ids) {
            Ok(q) => Some(q),
            Err(e) => {
                let (msg, hint) = quantaloid_law_message(&names, &homs, n, &e);
                match hint {
                    Some(h) => self.error_hint(d.name.span, msg, h),
                    None => self.error(d.name.span, msg),
                }
                None
            }
        }
    }

    fn category_decl(&mut self, d: &CategoryDecl) {
        if !self.claim(&d.name, "category") {
            return;
        }
        let Some(base) = self.base_ref(&d.base) else { return };
        for (i, (o, _)) in d.objects.iter().enumerate() {
            if d.objects[..i].iter().any(|(p, _)| p.node == o.node) {
                self.error(o.span, format!("duplicate object `{}`", o.node));
                return;
            }
        }
        let n = d.objects.len();
        let mut names = Vec::with_capacity(n);
        let mut types = Vec::with_capacity(n);
        for (o, ty) in &d.objects {
            let Some(ti) = self.base_obj(&base, ty) else { return };
            names.push(o.node.clone());
            types.push(ti);
        }
        let obj = |this: &mut Self, nm: &Name| -> Option<usize> {
            match names.iter().position(|o| *o == nm.node) {
                Some(i) => Some(i),
                None => {
                    let have = listing(&names);
                    this.error_hint(
                        nm.span,
                        format!("`{}` is not an object of `{}`", nm.node, d.name.node),
                        format!("objects: {have}"),
                    );
                    None
                }
            }
        };

        // Unwritten homs default to the identity on the diagonal and
        // to bottom elsewhere.
        let mut mat: Vec<Elt> = Vec::with_capacity(n * n);
        for a1 in 0..n {
            for a0 in 0..n {
                if a1 == a0 {
                    mat.push(base.id(types[a1]).elt);
                } else {
                    mat.push(base.hom(types[a0], types[a1]).bottom());
                }
            }
        }
        let mut given: Vec<bool> = vec![false; n * n];
        for (a, b, e) in &d.homs {
            let ai = match obj(self, a) {
                Some(i) => i,
                None => return,
            };
            let bi = match obj(self, b) {
                Some(i) => i,
                None => return,
            };
            if given[ai * n + bi] {
                self.error(a.span, format!("hom {} {} is given twice", a.node, b.node));
                return;
            }
            given[ai * n + bi] = true;
            let lat = base.hom(types[bi], types[ai]).clone();
            let Some(el) = self.elt_in(&lat, e, &format!("hom {} {}", a.node, b.node)) else {
                return;
            };
            mat[ai * n + bi] = el;
        }

        let objects = TypedSet::new(names.clone(), types.clone());
        match QCategory::new(base.clone(), objects, mat.clone()) {
            Ok(c) => {
                self.model.cats.push((d.name.node.clone(), d.base.node.clone(), Arc::new(c)));
            }
            Err(e) => {
                let msg = match &e {
                    EnrichedError::CompositionIneq { a2, a1, a0 } => format!(
                        "hom entries do not compose: the composite {} -> {} -> {} exceeds hom {} {}",
                        names[*a0], names[*a1], names[*a2], names[*a2], names[*a0]
                    ),
                    EnrichedError::IdentityIneq { a } => format!(
                        "the identity inequality fails at `{}`: its hom entry sits below the unit",
                        names[*a]
                    ),
                    other => other.to_string(),
                };
                let repairs = category_closure(&base, &types, &mat, n)
                    .into_iter()
                    .enumerate()
                    .filter(|(i, e)| *e != mat[*i])
                    .map(|(i, e)| {
                        format!(
                            "hom {} {} = {}",
                            names[i / n],
                            names[i % n],
                            base.hom(types[i % n], types[i / n]).label(e)
                        )
                    })
                    .collect::<Vec<_>>();
                self.error_hint(
                    d.name.span,
                    msg,
                    format!(
                        "the smallest category containing these entries has: {}",
                        repairs.join("; ")
                    ),
                );
            }
        }
    }

    fn functor_decl(&mut self, d: &FunctorDecl) {
        if !self.claim(&d.name, "functor") {
            return;
        }
        let Some((_, dom)) = self.cat_ref(&d.dom) else { return };
        let Some((_, cod)) = self.cat_ref(&d.cod) else { return };
        let mut map: Vec<Option<usize>> = vec![None; dom.object_count()];
        for (a, b) in &d.maps {
            let Some(ai) = dom.index_of(&a.node) else {
                let have = listing(&dom.objects().names);
                self.error_hint(
                    a.span,
                    format!("`{}` is not an object of `{}`", a.node, d.dom.node),
                    format!("objects: {have}"),
                );
                return;
            };
            let Some(bi) = cod.index_of(&b.node) else {
                let have = listing(&cod.objects().names);
                self.error_hint(
                    b.span,
                    format!("`{}` is not an object of `{}`", b.node, d.cod.node),
                    format!("objects: {have}"),
                );
                return;
            };
            if map[ai].is_some() {
                self.error(a.span, format!("object `{}` is mapped twice", a.node));
                return;
            }
            map[ai] = Some(bi);
        }
        let unmapped: Vec<&str> = (0..dom.object_count())
            .filter(|a| map[*a].is_none())
            .map(|a| dom.name(a))
            .collect();
        if !unmapped.is_empty() {
            self.error_hint(
                d.name.span,
                format!("objects without an image: {}", unmapped.join(", ")),
                "every object of the domain needs a line `OBJECT -> OBJECT;`",
            );
            return;
        }
        let map: Vec<usize> = map.into_iter().map(|m| m.unwrap()).collect();
        match QFunctor::new(dom.clone(), cod.clone(), map.clone()) {
            Ok(f) => self.model.functors.push((d.name.node.clone(), f)),
            Err(e) => {
                let span_of = |name: &str| {
                    d.maps
                        .iter()
                        .find(|(a, _)| a.node == name)
                        .map(|(a, _)| a.span)
                        .unwrap_or(d.name.span)
                };
                match e {
                    EnrichedError::BaseMismatch => self.error(
                        d.name.span,
                        format!(
                            "`{}` and `{}` live over different base quantaloids",
                            d.dom.node, d.cod.node
                        ),
                    ),
                    EnrichedError::MapType { a } => {
                        let q = dom.base();
                        self.error_hint(
                            span_of(dom.name(a)),
                            format!(
                                "the image of `{}` must keep its type: `{}` has type {} but `{}` has type {}",
                                dom.name(a),
                                dom.name(a),
                                q.object_name(dom.type_of(a)),
                                cod.name(map[a]),
                                q.object_name(cod.type_of(map[a])),
                            ),
                            "send each object to one of the same type",
                        );
                    }
                    EnrichedError::MapAction { a1, a0 } => {
                        let q = dom.base();
                        let from = dom.hom_arrow(a1, a0);
                        let to = cod.hom_arrow(map[a1], map[a0]);
                        self.error_hint(
                            span_of(dom.name(a1)),
                            format!(
                                "the hom inequality fails: hom {} {} = {} is not below hom {} {} = {}",
                                dom.name(a1),
                                dom.name(a0),
                                q.arrow_label(from),
                                cod.name(map[a1]),
                                cod.name(map[a0]),
                                q.arrow_label(to),
                            ),
                            "a functor may only increase hom entries",
                        );
                    }
                    other => self.error(d.name.span, other.to_string()),
                }
            }
        }
    }

    fn distributor_decl(&mut self, d: &DistributorDecl) {
        if !self.claim(&d.name, "distributor") {
            return;
        }
        let Some((dom_base, dom)) = self.cat_ref(&d.dom) else { return };
        let Some((cod_base, cod)) = self.cat_ref(&d.cod) else { return };
        if dom_base != cod_base {
            self.error_hint(
                d.name.span,
                format!(
                    "`{}` is over `{}` but `{}` is over `{}`",
                    d.dom.node, dom_base, d.cod.node, cod_base
                ),
                "a distributor needs both categories over the same quantaloid",
            );
            return;
        }
        let q = dom.base().clone();
        let (na, nb) = (dom.object_count(), cod.object_count());
        // Unwritten entries default to bottom.
        let mut mat: Vec<Elt> = Vec::with_capacity(nb * na);
        for b in 0..nb {
            for a in 0..na {
                mat.push(q.hom(dom.type_of(a), cod.type_of(b)).bottom());
            }
        }
        let mut given = vec![false; nb * na];
        for (b, a, e) in &d.entries {
            let Some(bi) = cod.index_of(&b.node) else {
                let have = listing(&cod.objects().names);
                self.error_hint(
                    b.span,
                    format!("`{}` is not an object of `{}`", b.node, d.cod.node),
                    format!("objects: {have}"),
                );
                return;
            };
            let Some(ai) = dom.index_of(&a.node) else {
                let have = listing(&dom.objects().names);
                self.error_hint(
                    a.span,
                    format!("`{}` is not an object of `{}`", a.node, d.dom.node),
                    format!("objects: {have}"),
                );
                return;
            };
            if given[bi * na + ai] {
                self.error(b.span, format!("the entry ({}, {}) is given twice", b.node, a.node));
                return;
            }
            given[bi * na + ai] = true;
            let lat = q.hom(dom.type_of(ai), cod.type_of(bi)).clone();
            let Some(el) =
                self.elt_in(&lat, e, &format!("the entry ({}, {})", b.node, a.node))
            else {
                return;
            };
            mat[bi * na + ai] = el;
        }

        match Distributor::new(dom.clone(), cod.clone(), mat.clone()) {
            Ok(phi) => self.model.dists.push((d.name.node.clone(), phi)),
            Err(e) => {
                let msg = match &e {
                    EnrichedError::ActionCod { b1, b, a } => format!(
                        "the codomain action fails: hom {} {} applied to the entry ({}, {}) exceeds the entry ({}, {})",
                        cod.name(*b1), cod.name(*b), cod.name(*b), dom.name(*a),
                        cod.name(*b1), dom.name(*a)
                    ),
                    EnrichedError::ActionDom { b, a, a1 } => format!(
                        "the domain action fails: the entry ({}, {}) applied to hom {} {} exceeds the entry ({}, {})",
                        cod.name(*b), dom.name(*a), dom.name(*a), dom.name(*a1),
                        cod.name(*b), dom.name(*a1)
                    ),
                    other => other.to_string(),
                };
                let closed = distributor_closure(&q, &dom, &cod, &mat);
                let repairs = closed
                    .iter()
                    .enumerate()
                    .filter(|(i, e)| **e != mat[*i])
                    .map(|(i, e)| {
                        let (b, a) = (i / na, i % na);
                        format!(
                            "({}, {}) -> {}",
                            cod.name(b),
                            dom.name(a),
                            q.hom(dom.type_of(a), cod.type_of(b)).label(*e)
                        )
                    })
                    .collect::<Vec<_>>();
                self.error_hint(
                    d.name.span,
                    msg,
                    format!(
                        "the smallest distributor containing these entries has: {}",
                        repairs.join("; ")
                    ),
                );
            }
        }
    }

    fn shape_decl(&mut self, d: &ShapeDecl) {
        if !self.claim(&d.name, "shape") {
            return;
        }
        let cat = match &d.body {
            ShapeBody::Point => Some(FinCat::point()),
            ShapeBody::WalkingArrow => Some(FinCat::walking_arrow()),
            ShapeBody::ParallelPair => Some(FinCat::parallel_pair()),
            ShapeBody::Discrete(n) => match n.node.parse::<usize>() {
                Ok(v) if v >= 1 && v <= 32 => Some(FinCat::discrete(v)),
                _ => {
                    self.error_hint(
                        n.span,
                        format!("`{}` is not a usable object count", n.node),
                        "write discrete(N) with 1 <= N <= 32",
                    );
                    None
                }
            },
            ShapeBody::Table(t) => self.shape_table(d, t),
        };
        if let Some(c) = cat {
            self.model.shapes.push((d.name.node.clone(), c));
        }
    }

    fn shape_table(&mut self, d: &ShapeDecl, t: &ShapeTable) -> Option<FinCat> {
        if t.objects.is_empty() {
            self.error(d.name.span, "a shape needs at least one object");
            return None;
        }
        let names: Vec<String> = t.objects.iter().map(|o| o.node.clone()).collect();
        let obj = |this: &mut Self, nm: &Name| -> Option<usize> {
            match names.iter().position(|o| *o == nm.node) {
                Some(i) => Some(i),
                None => {
                    let have = listing(&names);
                    this.error_hint(
                        nm.span,
                        format!("`{}` is not an object of `{}`", nm.node, d.name.node),
                        format!("objects: {have}"),
                    );
                    None
                }
            }
        };
        let mut gens = Vec::with_capacity(t.arrows.len());
        for (f, s, tg) in &t.arrows {
            let si = obj(self, s)?;
            let ti = obj(self, tg)?;
            gens.push(FinArrow { name: f.node.clone(), src: si, tgt: ti });
        }
        // Arrow names in compose entries may also be the automatic
        // identities `1_OBJECT`.
        let arrow_names: Vec<String> = gens
            .iter()
            .map(|g| g.name.clone())
            .chain(names.iter().map(|o| format!("1_{o}")))
            .collect();
        let arrow = |this: &mut Self, nm: &Name| -> Option<usize> {
            match arrow_names.iter().position(|a| *a == nm.node) {
                Some(i) => Some(i),
                None => {
                    let have = listing(&arrow_names);
                    this.error_hint(
                        nm.span,
                        format!("`{}` is not an arrow of `{}`", nm.node, d.name.node),
                        format!("arrows: {have}"),
                    );
                    None
                }
            }
        };
        let mut extra = Vec::with_capacity(t.compose.len());
        for (g, f, h) in &t.compose {
            let gi = arrow(self, g)?;
            let fi = arrow(self, f)?;
            let hi = arrow(self, h)?;
            extra.push((gi, fi, hi));
        }
        match FinCat::from_generators(names.clone(), gens, &extra) {
            Ok(c) => Some(c),
            Err(e) => {
                let an = |i: &usize| arrow_names.get(*i).cloned().unwrap_or_else(|| i.to_string());
                let (msg, hint) = match &e {
                    FinCatError::CompUndefined { g, f } => (
                        format!("no composite given for {}.{}", an(g), an(f)),
                        Some(format!("add `compose: {}.{} = ARROW;`", an(g), an(f))),
                    ),
                    FinCatError::CompSpurious { g, f } => (
                        format!("{}.{} is not composable", an(g), an(f)),
                        Some("g.f needs the target of f to be the source of g".into()),
                    ),
                    FinCatError::CompShape { g, f } => (
                        format!("the composite {}.{} has the wrong endpoints", an(g), an(f)),
                        None,
                    ),
                    FinCatError::NotAssociative { h, g, f } => (
                        format!(
                            "composition is not associative at {}.{}.{}",
                            an(h), an(g), an(f)
                        ),
                        None,
                    ),
                    FinCatError::LeftUnit { f } | FinCatError::RightUnit { f } => (
                        format!("an identity law fails at {}", an(f)),
                        Some("identity composites are filled in automatically; a compose entry overrode one".into()),
                    ),
                    other => (other.to_string(), None),
                };
                match hint {
                    Some(h) => self.error_hint(d.name.span, msg, h),
                    None => self.error(d.name.span, msg),
                }
                None
            }
        }
    }

    fn laxfunctor_decl(&mut self, d: &LaxFunctorDecl) {
        if !self.claim(&d.name, "laxfunctor") {
            return;
        }
        let Some(shape) = self.model.shape(&d.shape.node).cloned() else {
            let have = listing(self.model.shapes.iter().map(|(n, _)| n));
            self.error_hint(
                d.shape.span,
                format!("unknown shape `{}`", d.shape.node),
                format!("declared shapes: {have}"),
            );
            return;
        };
        let Some(base) = self.base_ref(&d.base) else { return };
        let nd = shape.object_count();
        let mut ob: Vec<Option<usize>> = vec![None; nd];
        for (s, x) in &d.objects {
            let Some(si) = (0..nd).find(|&i| shape.object_name(i) == s.node) else {
                let have = listing((0..nd).map(|i| shape.object_name(i).to_string()));
                self.error_hint(
                    s.span,
                    format!("`{}` is not an object of `{}`", s.node, d.shape.node),
                    format!("objects: {have}"),
                );
                return;
            };
            let Some(xi) = self.base_obj(&base, x) else { return };
            if ob[si].is_some() {
                self.error(s.span, format!("object `{}` is mapped twice", s.node));
                return;
            }
            ob[si] = Some(xi);
        }
        let unmapped: Vec<&str> = (0..nd)
            .filter(|i| ob[*i].is_none())
            .map(|i| shape.object_name(i))
            .collect();
        if !unmapped.is_empty() {
            self.error_hint(
                d.name.span,
                format!("shape objects without an image: {}", unmapped.join(", ")),
                "every shape object needs a line `OBJECT -> BASEOBJECT`",
            );
            return;
        }
        let ob: Vec<usize> = ob.into_iter().map(|o| o.unwrap()).collect();

        let narr = shape.arrow_count();
        let mut ar: Vec<Option<Elt>> = vec![None; narr];
        for (f, e) in &d.arrows {
            let Some(fi) = (0..narr).find(|&i| shape.arrow(i).name == f.node) else {
                let have = listing((0..narr).map(|i| shape.arrow(i).name.clone()));
                self.error_hint(
                    f.span,
                    format!("`{}` is not an arrow of `{}`", f.node, d.shape.node),
                    format!("arrows: {have}"),
                );
                return;
            };
            if ar[fi].is_some() {
                self.error(f.span, format!("arrow `{}` is mapped twice", f.node));
                return;
            }
            let a = shape.arrow(fi);
            let lat = base.hom(ob[a.src], ob[a.tgt]).clone();
            let Some(el) = self.elt_in(&lat, e, &format!("the image of `{}`", f.node)) else {
                return;
            };
            ar[fi] = Some(el);
        }
        // Unwritten identity arrows default to the identity of the
        // image object; other arrows must be given.
        let mut final_ar = Vec::with_capacity(narr);
        for i in 0..narr {
            match ar[i] {
                Some(e) => final_ar.push(e),
                None => {
                    let a = shape.arrow(i);
                    if a.src == a.tgt && shape.id_of(a.src) == i {
                        final_ar.push(base.id(ob[a.src]).elt);
                    } else {
                        self.error_hint(
                            d.name.span,
                            format!("arrow `{}` has no image", a.name),
                            format!("add `{} -> ELEMENT` to the arrows line", a.name),
                        );
                        return;
                    }
                }
            }
        }

        match LaxFunctor::new(shape.clone(), base.clone(), ob.clone(), final_ar.clone()) {
            Ok(f) => self.model.laxes.push((d.name.node.clone(), d.base.node.clone(), f)),
            Err(e) => {
                let (msg, hint) = match &e {
                    MatrixCalcError::LaxUnit { at } => (
                        format!(
                            "the lax unit fails at `{}`: the identity of `{}` is not below the image of `{}`",
                            shape.object_name(*at),
                            base.object_name(ob[*at]),
                            shape.arrow(shape.id_of(*at)).name,
                        ),
                        format!(
                            "raise the image of `{}` to at least `{}`",
                            shape.arrow(shape.id_of(*at)).name,
                            base.arrow_label(base.id(ob[*at])),
                        ),
                    ),
                    MatrixCalcError::LaxComposite { g, f } => {
                        let gf = shape.compose(*g, *f);
                        let lhs = base.compose(
                            base.arrow(
                                ob[shape.arrow(*g).src],
                                ob[shape.arrow(*g).tgt],
                                final_ar[*g],
                            ),
                            base.arrow(
                                ob[shape.arrow(*f).src],
                                ob[shape.arrow(*f).tgt],
                                final_ar[*f],
                            ),
                        );
                        (
                            format!(
                                "the lax composition fails at {}.{}: the composite of the images is not below the image of `{}`",
                                shape.arrow(*g).name,
                                shape.arrow(*f).name,
                                shape.arrow(gf).name,
                            ),
                            format!(
                                "raise the image of `{}` to at least `{}`",
                                shape.arrow(gf).name,
                                base.arrow_label(lhs),
                            ),
                        )
                    }
                    other => (other.to_string(), String::new()),
                };
                if hint.is_empty() {
                    self.error(d.name.span, msg);
                } else {
                    self.error_hint(d.name.span, msg, hint);
                }
            }
        }
    }
}

/// The least hom-matrix above `mat` that satisfies the composition
/// and identity inequalities; used only for repair hints.
fn category_closure(base: &Quantaloid, types: &[usize], mat: &[Elt], n: usize) -> Vec<Elt> {
    let mut m = mat.to_vec();
    for a in 0..n {
        let t = types[a];
        m[a * n + a] = base.hom(t, t).join(m[a * n + a], base.id(t).elt);
    }
    loop {
        let mut changed = false;
        for a2 in 0..n {
            for a1 in 0..n {
                for a0 in 0..n {
                    let g = base.arrow(types[a1], types[a2], m[a2 * n + a1]);
                    let f = base.arrow(types[a0], types[a1], m[a1 * n + a0]);
                    let gf = base.compose(g, f);
                    let j = base.hom(types[a0], types[a2]).join(m[a2 * n + a0], gf.elt);
                    if j != m[a2 * n + a0] {
                        m[a2 * n + a0] = j;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return m;
        }
    }
}

/// The least matrix above `mat` closed under both category actions;
/// used only for repair hints.
fn distributor_closure(
    base: &Quantaloid,
    dom: &QCategory,
    cod: &QCategory,
    mat: &[Elt],
) -> Vec<Elt> {
    let (na, nb) = (dom.object_count(), cod.object_count());
    let mut out = Vec::with_capacity(nb * na);
    for b1 in 0..nb {
        for a1 in 0..na {
            let mut acc = base.bottom_arrow(dom.type_of(a1), cod.type_of(b1));
            for b in 0..nb {
                for a in 0..na {
                    let phi =
                        base.arrow(dom.type_of(a), cod.type_of(b), mat[b * na + a]);
                    let step = base.compose(
                        base.compose(cod.hom_arrow(b1, b), phi),
                        dom.hom_arrow(a, a1),
                    );
                    acc = base.join_arrow(acc, step);
                }
            }
            out.push(acc.elt);
        }
    }
    out
}

fn quantaloid_law_message(
    names: &[String],
    homs: &[Lattice],
    n: usize,
    e: &QuantaloidError,
) -> (String, Option<String>) {
    let hom = |a: usize, b: usize| &homs[a * n + b];
    match e {
        QuantaloidError::NotAssociative { a, b, c, d, f, g, h } => (
            format!(
                "associativity fails for f = {}: {} -> {}, g = {}: {} -> {}, h = {}: {} -> {}",
                hom(*a, *b).label(*f), names[*a], names[*b],
                hom(*b, *c).label(*g), names[*b], names[*c],
                hom(*c, *d).label(*h), names[*c], names[*d],
            ),
            Some("(h . g) . f and h . (g . f) disagree; adjust the compose tables".into()),
        ),
        QuantaloidError::LeftIdentity { a, b, f } => (
            format!(
                "the left identity law fails on {}: {} -> {}",
                hom(*a, *b).label(*f), names[*a], names[*b]
            ),
            Some(format!("check `id {}`", names[*b])),
        ),
        QuantaloidError::RightIdentity { a, b, f } => (
            format!(
                "the right identity law fails on {}: {} -> {}",
                hom(*a, *b).label(*f), names[*a], names[*b]
            ),
            Some(format!("check `id {}`", names[*a])),
        ),
        QuantaloidError::JoinRight { a, b, c, g, f1, f2 } => (
            format!(
                "composition does not distribute over joins: g . (f1 join f2) with g = {}, f1 = {}, f2 = {} between {} -> {} -> {}",
                hom(*b, *c).label(*g), hom(*a, *b).label(*f1), hom(*a, *b).label(*f2),
                names[*a], names[*b], names[*c],
            ),
            Some("g . (f1 join f2) must equal (g . f1) join (g . f2)".into()),
        ),
        QuantaloidError::JoinLeft { a, b, c, g1, g2, f } => (
            format!(
                "composition does not distribute over joins: (g1 join g2) . f with g1 = {}, g2 = {}, f = {} between {} -> {} -> {}",
                hom(*b, *c).label(*g1), hom(*b, *c).label(*g2), hom(*a, *b).label(*f),
                names[*a], names[*b], names[*c],
            ),
            Some("(g1 join g2) . f must equal (g1 . f) join (g2 . f)".into()),
        ),
        QuantaloidError::BottomRight { a, b, c, g } => (
            format!(
                "composition does not preserve bottom: g . bottom with g = {} between {} -> {} -> {}",
                hom(*b, *c).label(*g), names[*a], names[*b], names[*c],
            ),
            Some("composing with the empty join must give the empty join".into()),
        ),
        QuantaloidError::BottomLeft { a, b, c, f } => (
            format!(
                "composition does not preserve bottom: bottom . f with f = {} between {} -> {} -> {}",
                hom(*a, *b).label(*f), names[*a], names[*b], names[*c],
            ),
            Some("composing with the empty join must give the empty join".into()),
        ),
        other => (other.to_string(), None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn try_load(src: &str) -> (Model, Vec<Diagnostic>) {
        let (doc, diags) = parse(src);
        assert!(diags.is_empty(), "sample does not parse: {diags:?}");
        load(&doc)
    }

    fn load_ok(src: &str) -> Model {
        let (model, diags) = try_load(src);
        assert!(diags.is_empty(), "unexpected diagnostics: {diags:?}");
        model
    }

    #[test]
    fn loads_every_declaration_kind() {
        let m = load_ok("
            lattice two { elements: o, i; order: o <= i; }
            quantaloid Q = bool2
            quantaloid R = rel_locale(two)
            quantaloid T = tropical(3)
            category A over Q { objects: x:*, y:*; hom x y = 1; }
            functor f: A -> A { x -> x; y -> y; }
            distributor phi: A -|-> A { (x, x) -> 1; (x, y) -> 1; }
            shape W = walking-arrow
            laxfunctor F: W -> T { objects: s -> *, t -> *; arrows: a -> 2; }
        ");
        assert_eq!(m.lattices.len(), 1);
        assert_eq!(m.bases.len(), 3);
        let a = m.cat("A").unwrap();
        assert_eq!(a.object_count(), 2);
        // hom x y = 1 puts x below y.
        assert!(a.obj_leq(0, 1) && !a.obj_leq(1, 0));
        let phi = m.dist("phi").unwrap();
        assert_eq!(phi.entry(0, 0).elt, 1);
        assert_eq!(phi.entry(1, 0).elt, 0);
        assert!(m.lax("F").is_some());
    }

    #[test]
    fn names_share_one_namespace() {
        let (_, diags) = try_load("
            quantaloid Q = bool2
            category Q over Q { objects: x:*; }
        ");
        assert!(diags.iter().any(|d| d.message.contains("already used by a quantaloid")));
    }

    #[test]
    fn unknown_references_list_what_exists() {
        let (_, diags) = try_load("category A over Missing { objects: x:*; }");
        assert!(diags[0].message.contains("unknown quantaloid `Missing`"));
        assert_eq!(diags[0].span.line, 1);
    }

    #[test]
    fn unknown_hom_elements_list_the_lattice() {
        let (_, diags) = try_load("
            quantaloid Q = bool2
            category A over Q { objects: x:*, y:*; hom x y = 7; }
        ");
        assert!(diags[0].message.contains("`7` is not an element"));
        assert!(diags[0].hint.as_deref().unwrap().contains("`0`, `1`"));
    }

    #[test]
    fn composition_failures_come_with_the_closure() {
        let (_, diags) = try_load("
            quantaloid Q = bool2
            category A over Q {
              objects: x:*, y:*, z:*;
              hom x y = 1; hom y z = 1;
            }
        ");
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains("do not compose"));
        assert!(diags[0].hint.as_deref().unwrap().contains("hom x z = 1"));
    }

    #[test]
    fn distributor_failures_come_with_the_closure() {
        let (_, diags) = try_load("
            quantaloid Q = bool2
            category A over Q { objects: x:*, y:*; hom x y = 1; }
            distributor phi: A -|-> A { (y, x) -> 1; }
        ");
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains("action fails"));
        assert!(diags[0].hint.as_deref().unwrap().contains("(y, y) -> 1"));
    }

    #[test]
    fn generate_meet_defaults_the_identities_to_top() {
        let m = load_ok("
            lattice two { elements: o, i; order: o <= i; }
            quantaloid H {
              objects: W;
              hom W W: two;
              generate: meet;
            }
        ");
        let q = m.base("H").unwrap();
        assert_eq!(q.arrow_label(q.id(0)), "i");
        let joined = q.compose(q.arrow(0, 0, 1), q.arrow(0, 0, 0));
        assert_eq!(joined.elt, 0);
    }

    #[test]
    fn generate_plus_cap_matches_the_builtin() {
        let m = load_ok("
            lattice four { elements: 0, 1, 2, 3; order: 3 <= 2, 2 <= 1, 1 <= 0; }
            quantaloid H {
              objects: W;
              hom W W: four;
              generate: plus-cap;
            }
        ");
        let q = m.base("H").unwrap();
        let t = quantakit::quantaloid::tropical_trunc(3);
        for g in 0..4 {
            for f in 0..4 {
                assert_eq!(
                    q.compose(q.arrow(0, 0, g), q.arrow(0, 0, f)).elt,
                    t.compose(t.arrow(0, 0, g), t.arrow(0, 0, f)).elt,
                );
            }
        }
        assert_eq!(q.id(0).elt, t.id(0).elt);
    }

    #[test]
    fn table_mode_requires_tables_unless_forced() {
        let m = load_ok("
            lattice one { elements: u; }
            quantaloid H { objects: W; hom W W: one; }
        ");
        assert_eq!(m.base("H").unwrap().hom(0, 0).len(), 1);
        let (_, diags) = try_load("
            lattice two { elements: o, i; order: o <= i; }
            quantaloid H { objects: W; hom W W: two; }
        ");
        assert!(diags[0].message.contains("no composite given"));
    }

    #[test]
    fn longhand_shapes_compose_by_name() {
        let m = load_ok("
            shape S {
              objects: u, v, w;
              arrows: a: u -> v, b: v -> w, c: u -> w;
              compose: b.a = c;
            }
        ");
        let s = m.shape("S").unwrap();
        assert_eq!(s.object_count(), 3);
        assert_eq!(s.arrow_count(), 6);
        assert_eq!(s.arrow(s.compose(1, 0)).name, "c");
    }

    #[test]
    fn lax_identity_images_default_to_identities() {
        let m = load_ok("
            quantaloid T = tropical(3)
            shape W = walking-arrow
            laxfunctor F: W -> T { objects: s -> *, t -> *; arrows: a -> 2; }
        ");
        let f = m.lax("F").unwrap();
        let s = f.shape();
        assert_eq!(s.arrow(s.id_of(0)).name, "1_s");
    }

    #[test]
    fn lax_law_failures_name_the_repair() {
        let (_, diags) = try_load("
            quantaloid T = tropical(3)
            shape S {
              objects: u;
              arrows: a: u -> u, b: u -> u;
              compose: a.a = b, a.b = b, b.a = b, b.b = b;
            }
            laxfunctor F: S -> T { objects: u -> *; arrows: a -> 1, b -> 3; }
        ");
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains("lax composition fails"));
        assert!(diags[0].hint.as_deref().unwrap().contains("at least `2`"));
    }

    #[test]
    fn forward_references_are_rejected() {
        let (_, diags) = try_load("
            category A over Q { objects: x:*; }
            quantaloid Q = bool2
        ");
        assert!(diags[0].message.contains("unknown quantaloid"));
    }
}
