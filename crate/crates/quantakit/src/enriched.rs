//! Categories, functors and distributors enriched in a quantaloid.
//!
//! Fix a quantaloid `Q`. A `Q`-category `A` is a set of objects, each
//! typed by an object of `Q`, together with hom-arrows
//! `A(a', a) : t(a) -> t(a')` in `Q` satisfying
//! `A(a'', a') ∘ A(a', a) <= A(a'', a)` and `1 <= A(a, a)`. A functor
//! `F : A -> B` is a type-preserving object map with
//! `A(a', a) <= B(Fa', Fa)`. A distributor `Φ : A -|-> B` is a matrix
//! of arrows `Φ(b, a) : t(a) -> t(b)` stable under the actions of
//! both categories.
//!
//! Distributors compose by matrix multiplication over `Q` (join of
//! composites), ordered pointwise; this makes them a quantaloid in
//! their own right, with liftings and extensions computed pointwise
//! from those of `Q`. Functors embed into distributors through their
//! graphs, and all the order-theoretic notions (adjunctions,
//! equivalences, the underlying order of a category) are decided by
//! finite checks against these matrices.

use crate::lattice::Elt;
use crate::quantaloid::{QArrow, Quantaloid};
use std::sync::Arc;
use thiserror::Error;

/// Soft limits for the enumerative operations. All enumerations are
/// deterministic and lexicographic; the caps only bound how far they
/// are allowed to go.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of presheaves kept per presheaf category.
    pub presheaves: usize,
    /// Maximum raw candidate count for functor enumeration.
    pub functors: usize,
    /// Maximum raw candidate count for distributor enumeration.
    pub distributors: usize,
    /// Guard on raw intermediate search spaces.
    pub raw: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { presheaves: 64, functors: 4096, distributors: 4096, raw: 1 << 20 }
    }
}

/// An enumeration or search gave up because its (pre-filter) search
/// space exceeded the configured cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: search space of size {estimate} exceeds cap {cap}")]
pub struct CapExceeded {
    pub what: String,
    pub estimate: u128,
    pub cap: usize,
}

/// A defect in enriched data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnrichedError {
    #[error("object {obj} has type {got}, but the base has {count} objects")]
    TypeRange { obj: usize, got: usize, count: usize },
    #[error("duplicate object name `{0}`")]
    DuplicateObject(String),
    #[error("hom matrix has {got} entries, expected {want}")]
    HomLen { got: usize, want: usize },
    #[error("hom entry at ({a1}, {a0}) is out of range for its hom-lattice")]
    HomRange { a1: usize, a0: usize },
    #[error("composition inequality fails at objects ({a2}, {a1}, {a0})")]
    CompositionIneq { a2: usize, a1: usize, a0: usize },
    #[error("identity inequality fails at object {a}")]
    IdentityIneq { a: usize },
    #[error("categories live over different base quantaloids")]
    BaseMismatch,
    #[error("distributor matrix has {got} entries, expected {want}")]
    MatLen { got: usize, want: usize },
    #[error("distributor entry at ({b}, {a}) is out of range for its hom-lattice")]
    MatRange { b: usize, a: usize },
    #[error("codomain action fails at (b'={b1}, b={b}, a={a})")]
    ActionCod { b1: usize, b: usize, a: usize },
    #[error("domain action fails at (b={b}, a={a}, a'={a1})")]
    ActionDom { b: usize, a: usize, a1: usize },
    #[error("functor map has {got} entries, expected {want}")]
    MapLen { got: usize, want: usize },
    #[error("functor image of object {a} is out of range")]
    MapRange { a: usize },
    #[error("functor does not preserve types at object {a}")]
    MapType { a: usize },
    #[error("functor action inequality fails at ({a1}, {a0})")]
    MapAction { a1: usize, a0: usize },
    #[error("expected {ctx} to agree, got different categories")]
    CatMismatch { ctx: &'static str },
}

/// Objects of an enriched category: names plus their types (object
/// indices of the base quantaloid).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedSet {
    pub names: Vec<String>,
    pub types: Vec<usize>,
}

impl TypedSet {
    pub fn new(names: Vec<String>, types: Vec<usize>) -> TypedSet {
        assert_eq!(names.len(), types.len());
        TypedSet { names, types }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A category enriched in a quantaloid.
#[derive(Debug, Clone)]
pub struct QCategory {
    base: Arc<Quantaloid>,
    objects: TypedSet,
    /// `hom[a1 * n + a0]` is the element of `hom(t(a0), t(a1))`
    /// carrying `A(a1, a0) : t(a0) -> t(a1)`.
    hom: Vec<Elt>,
}

impl PartialEq for QCategory {
    fn eq(&self, other: &Self) -> bool {
        same_base(&self.base, &other.base) && self.objects == other.objects && self.hom == other.hom
    }
}

impl Eq for QCategory {}

/// Do two handles denote the same quantaloid? Pointer equality is the
/// fast path; otherwise compare structurally, so independently built
/// copies of the same base interoperate.
pub fn same_base(x: &Arc<Quantaloid>, y: &Arc<Quantaloid>) -> bool {
    Arc::ptr_eq(x, y) || **x == **y
}

/// Do two handles denote the same category (same base, objects, homs)?
pub fn same_cat(x: &Arc<QCategory>, y: &Arc<QCategory>) -> bool {
    Arc::ptr_eq(x, y) || **x == **y
}

impl QCategory {
    pub fn new(base: Arc<Quantaloid>, objects: TypedSet, hom: Vec<Elt>) -> Result<QCategory, EnrichedError> {
        let n = objects.len();
        for (i, name) in objects.names.iter().enumerate() {
            if objects.names[..i].contains(name) {
                return Err(EnrichedError::DuplicateObject(name.clone()));
            }
        }
        for (obj, &t) in objects.types.iter().enumerate() {
            if t >= base.object_count() {
                return Err(EnrichedError::TypeRange { obj, got: t, count: base.object_count() });
            }
        }
        if hom.len() != n * n {
            return Err(EnrichedError::HomLen { got: hom.len(), want: n * n });
        }
        for a1 in 0..n {
            for a0 in 0..n {
                let l = base.hom(objects.types[a0], objects.types[a1]);
                if hom[a1 * n + a0] >= l.len() {
                    return Err(EnrichedError::HomRange { a1, a0 });
                }
            }
        }
        let cat = QCategory { base, objects, hom };
        for a2 in 0..n {
            for a1 in 0..n {
                for a0 in 0..n {
                    let gf = cat.base.compose(cat.hom_arrow(a2, a1), cat.hom_arrow(a1, a0));
                    if !cat.base.leq_arrow(gf, cat.hom_arrow(a2, a0)) {
                        return Err(EnrichedError::CompositionIneq { a2, a1, a0 });
                    }
                }
            }
        }
        for a in 0..n {
            let t = cat.objects.types[a];
            if !cat.base.leq_arrow(cat.base.id(t), cat.hom_arrow(a, a)) {
                return Err(EnrichedError::IdentityIneq { a });
            }
        }
        Ok(cat)
    }

    pub fn base(&self) -> &Arc<Quantaloid> {
        &self.base
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &TypedSet {
        &self.objects
    }

    pub fn name(&self, a: usize) -> &str {
        &self.objects.names[a]
    }

    pub fn type_of(&self, a: usize) -> usize {
        self.objects.types[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.objects.index_of(name)
    }

    /// `A(a1, a0) : t(a0) -> t(a1)` as an arrow of the base.
    pub fn hom_arrow(&self, a1: usize, a0: usize) -> QArrow {
        let n = self.object_count();
        QArrow {
            src: self.objects.types[a0],
            tgt: self.objects.types[a1],
            elt: self.hom[a1 * n + a0],
        }
    }

    /// The underlying order: `a' <= a` iff the types agree and
    /// `1 <= A(a', a)`.
    pub fn obj_leq(&self, a1: usize, a0: usize) -> bool {
        self.type_of(a1) == self.type_of(a0)
            && self.base.leq_arrow(self.base.id(self.type_of(a0)), self.hom_arrow(a1, a0))
    }

    /// Isomorphy in the underlying order.
    pub fn obj_iso(&self, a: usize, b: usize) -> bool {
        self.obj_leq(a, b) && self.obj_leq(b, a)
    }

    /// Is no pair of distinct objects isomorphic?
    pub fn is_skeletal(&self) -> bool {
        let n = self.object_count();
        (0..n).all(|a| (a + 1..n).all(|b| !self.obj_iso(a, b)))
    }
}

/// The underlying order of a category as a dense matrix:
/// `ord[a1 * n + a0]` holds iff `a1 <= a0`.
pub fn underlying_order(cat: &QCategory) -> Vec<bool> {
    let n = cat.object_count();
    let mut ord = vec![false; n * n];
    for a1 in 0..n {
        for a0 in 0..n {
            ord[a1 * n + a0] = cat.obj_leq(a1, a0);
        }
    }
    ord
}

/// The one-object category `*_X` on a base object `X`, with hom the
/// identity. Presheaves and copresheaves are distributors into and
/// out of these.
pub fn unit_category(base: &Arc<Quantaloid>, obj: usize) -> Arc<QCategory> {
    let objects = TypedSet::new(vec!["*".to_string()], vec![obj]);
    let hom = vec![base.id(obj).elt];
    Arc::new(QCategory::new(Arc::clone(base), objects, hom).expect("unit category is valid"))
}

/// The opposite category, enriched in the opposite base:
/// `A^op(a', a) = A(a, a')`.
pub fn opposite_category(cat: &QCategory) -> QCategory {
    let n = cat.object_count();
    let mut hom = vec![0; n * n];
    for a1 in 0..n {
        for a0 in 0..n {
            hom[a1 * n + a0] = cat.hom_arrow(a0, a1).elt;
        }
    }
    QCategory {
        base: Arc::new(cat.base.opposite()),
        objects: cat.objects.clone(),
        hom,
    }
}

/// A functor between categories over the same base.
#[derive(Debug, Clone)]
pub struct QFunctor {
    dom: Arc<QCategory>,
    cod: Arc<QCategory>,
    map: Vec<usize>,
}

impl PartialEq for QFunctor {
    fn eq(&self, other: &Self) -> bool {
        same_cat(&self.dom, &other.dom) && same_cat(&self.cod, &other.cod) && self.map == other.map
    }
}

impl Eq for QFunctor {}

impl QFunctor {
    pub fn new(dom: Arc<QCategory>, cod: Arc<QCategory>, map: Vec<usize>) -> Result<QFunctor, EnrichedError> {
        if !same_base(&dom.base, &cod.base) {
            return Err(EnrichedError::BaseMismatch);
        }
        let n = dom.object_count();
        if map.len() != n {
            return Err(EnrichedError::MapLen { got: map.len(), want: n });
        }
        for (a, &fa) in map.iter().enumerate() {
            if fa >= cod.object_count() {
                return Err(EnrichedError::MapRange { a });
            }
            if cod.type_of(fa) != dom.type_of(a) {
                return Err(EnrichedError::MapType { a });
            }
        }
        for a1 in 0..n {
            for a0 in 0..n {
                let lhs = dom.hom_arrow(a1, a0);
                let rhs = cod.hom_arrow(map[a1], map[a0]);
                if !dom.base.leq_arrow(lhs, rhs) {
                    return Err(EnrichedError::MapAction { a1, a0 });
                }
            }
        }
        Ok(QFunctor { dom, cod, map })
    }

    pub fn dom(&self) -> &Arc<QCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<QCategory> {
        &self.cod
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

pub fn identity_functor(cat: &Arc<QCategory>) -> QFunctor {
    QFunctor {
        dom: Arc::clone(cat),
        cod: Arc::clone(cat),
        map: (0..cat.object_count()).collect(),
    }
}

/// `g ∘ f` for functors, `f` first.
pub fn functor_compose(g: &QFunctor, f: &QFunctor) -> QFunctor {
    assert!(same_cat(&f.cod, &g.dom), "functors do not compose");
    QFunctor {
        dom: Arc::clone(&f.dom),
        cod: Arc::clone(&g.cod),
        map: f.map.iter().map(|&a| g.map[a]).collect(),
    }
}

/// The pointwise order on parallel functors: `F <= G` iff
/// `1 <= B(Fa, Ga)` for every object `a`.
pub fn functor_leq(f: &QFunctor, g: &QFunctor) -> bool {
    assert!(same_cat(&f.dom, &g.dom) && same_cat(&f.cod, &g.cod), "functors are not parallel");
    (0..f.dom.object_count()).all(|a| f.cod.obj_leq(f.apply(a), g.apply(a)))
}

/// Pointwise isomorphy of parallel functors.
pub fn functor_iso(f: &QFunctor, g: &QFunctor) -> bool {
    functor_leq(f, g) && functor_leq(g, f)
}

/// The same object map, read between the opposite categories.
pub fn opposite_functor(f: &QFunctor) -> QFunctor {
    QFunctor {
        dom: Arc::new(opposite_category(&f.dom)),
        cod: Arc::new(opposite_category(&f.cod)),
        map: f.map.clone(),
    }
}

/// A distributor `Φ : A -|-> B` between categories over one base.
#[derive(Debug, Clone)]
pub struct Distributor {
    dom: Arc<QCategory>,
    cod: Arc<QCategory>,
    /// `mat[b * |A| + a]` carries `Φ(b, a) : t(a) -> t(b)`.
    mat: Vec<Elt>,
}

impl PartialEq for Distributor {
    fn eq(&self, other: &Self) -> bool {
        same_cat(&self.dom, &other.dom) && same_cat(&self.cod, &other.cod) && self.mat == other.mat
    }
}

impl Eq for Distributor {}

impl Distributor {
    pub fn new(dom: Arc<QCategory>, cod: Arc<QCategory>, mat: Vec<Elt>) -> Result<Distributor, EnrichedError> {
        if !same_base(&dom.base, &cod.base) {
            return Err(EnrichedError::BaseMismatch);
        }
        let (na, nb) = (dom.object_count(), cod.object_count());
        if mat.len() != nb * na {
            return Err(EnrichedError::MatLen { got: mat.len(), want: nb * na });
        }
        let phi = Distributor { dom, cod, mat };
        let q = phi.base();
        for b in 0..nb {
            for a in 0..na {
                let l = q.hom(phi.dom.type_of(a), phi.cod.type_of(b));
                if phi.mat[b * na + a] >= l.len() {
                    return Err(EnrichedError::MatRange { b, a });
                }
            }
        }
        for b1 in 0..nb {
            for b in 0..nb {
                for a in 0..na {
                    let lhs = q.compose(phi.cod.hom_arrow(b1, b), phi.entry(b, a));
                    if !q.leq_arrow(lhs, phi.entry(b1, a)) {
                        return Err(EnrichedError::ActionCod { b1, b, a });
                    }
                }
            }
        }
        for b in 0..nb {
            for a in 0..na {
                for a1 in 0..na {
                    let lhs = q.compose(phi.entry(b, a), phi.dom.hom_arrow(a, a1));
                    if !q.leq_arrow(lhs, phi.entry(b, a1)) {
                        return Err(EnrichedError::ActionDom { b, a, a1 });
                    }
                }
            }
        }
        Ok(phi)
    }

    /// Assemble without re-checking the action inequalities; for
    /// internal use on matrices that carry them by construction.
    pub(crate) fn unchecked(dom: Arc<QCategory>, cod: Arc<QCategory>, mat: Vec<Elt>) -> Distributor {
        debug_assert_eq!(mat.len(), cod.object_count() * dom.object_count());
        Distributor { dom, cod, mat }
    }

    pub fn dom(&self) -> &Arc<QCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<QCategory> {
        &self.cod
    }

    pub fn base(&self) -> &Arc<Quantaloid> {
        &self.dom.base
    }

    /// `Φ(b, a) : t(a) -> t(b)`.
    pub fn entry(&self, b: usize, a: usize) -> QArrow {
        QArrow {
            src: self.dom.type_of(a),
            tgt: self.cod.type_of(b),
            elt: self.mat[b * self.dom.object_count() + a],
        }
    }

    pub fn mat(&self) -> &[Elt] {
        &self.mat
    }
}

/// The identity distributor of `A`: its own hom matrix.
pub fn identity_dist(cat: &Arc<QCategory>) -> Distributor {
    let n = cat.object_count();
    let mut mat = vec![0; n * n];
    for b in 0..n {
        for a in 0..n {
            mat[b * n + a] = cat.hom_arrow(b, a).elt;
        }
    }
    Distributor::unchecked(Arc::clone(cat), Arc::clone(cat), mat)
}

/// Matrix composition `Ψ ⊗ Φ` for `Φ : A -|-> B`, `Ψ : B -|-> C`:
/// `(Ψ ⊗ Φ)(c, a) = ⋁_b Ψ(c, b) ∘ Φ(b, a)`.
pub fn dist_compose(psi: &Distributor, phi: &Distributor) -> Distributor {
    assert!(same_cat(&phi.cod, &psi.dom), "distributors do not compose");
    let q = phi.base();
    let (na, nb, nc) = (phi.dom.object_count(), phi.cod.object_count(), psi.cod.object_count());
    let mut mat = vec![0; nc * na];
    for c in 0..nc {
        for a in 0..na {
            let join = q.join_arrows(
                phi.dom.type_of(a),
                psi.cod.type_of(c),
                (0..nb).map(|b| q.compose(psi.entry(c, b), phi.entry(b, a))),
            );
            mat[c * na + a] = join.elt;
        }
    }
    Distributor::unchecked(Arc::clone(&phi.dom), Arc::clone(&psi.cod), mat)
}

/// Pointwise order of parallel distributors.
pub fn dist_leq(phi: &Distributor, psi: &Distributor) -> bool {
    assert!(same_cat(&phi.dom, &psi.dom) && same_cat(&phi.cod, &psi.cod), "distributors are not parallel");
    let q = phi.base();
    let (na, nb) = (phi.dom.object_count(), phi.cod.object_count());
    (0..nb).all(|b| (0..na).all(|a| q.leq_arrow(phi.entry(b, a), psi.entry(b, a))))
}

/// Pointwise join of parallel distributors.
pub fn dist_sup(phi: &Distributor, psi: &Distributor) -> Distributor {
    assert!(same_cat(&phi.dom, &psi.dom) && same_cat(&phi.cod, &psi.cod), "distributors are not parallel");
    let q = phi.base();
    let na = phi.dom.object_count();
    let mat = (0..phi.cod.object_count() * na)
        .map(|i| {
            let (b, a) = (i / na, i % na);
            q.join_arrow(phi.entry(b, a), psi.entry(b, a)).elt
        })
        .collect();
    Distributor::unchecked(Arc::clone(&phi.dom), Arc::clone(&phi.cod), mat)
}

/// The bottom distributor `A -|-> B` (all entries bottom).
pub fn dist_bottom(dom: &Arc<QCategory>, cod: &Arc<QCategory>) -> Distributor {
    let (na, nb) = (dom.object_count(), cod.object_count());
    let mat = (0..nb * na)
        .map(|i| dom.base.hom(dom.type_of(i % na), cod.type_of(i / na)).bottom())
        .collect();
    Distributor::unchecked(Arc::clone(dom), Arc::clone(cod), mat)
}

/// Join of arbitrarily many parallel distributors; empty join is the
/// bottom distributor. The join of distributors is again a
/// distributor, because the actions distribute over joins.
pub fn dist_sup_all<'a, I: IntoIterator<Item = &'a Distributor>>(
    dom: &Arc<QCategory>,
    cod: &Arc<QCategory>,
    items: I,
) -> Distributor {
    items.into_iter().fold(dist_bottom(dom, cod), |acc, x| dist_sup(&acc, x))
}

/// The pointwise lifting `[g, h] : A -|-> B` of `h : A -|-> C`
/// through `g : B -|-> C`: entry `(b, a)` is `⋀_c [g(c, b), h(c, a)]`
/// in the base. It is the largest `x` with `g ⊗ x <= h`.
pub fn dist_lift(g: &Distributor, h: &Distributor) -> Distributor {
    assert!(same_cat(&g.cod, &h.cod), "lifting needs a common codomain");
    let q = g.base();
    let (na, nb, nc) = (h.dom.object_count(), g.dom.object_count(), g.cod.object_count());
    let mut mat = vec![0; nb * na];
    for b in 0..nb {
        for a in 0..na {
            let mut acc = q.top_arrow(h.dom.type_of(a), g.dom.type_of(b));
            for c in 0..nc {
                acc = q.meet_arrow(acc, q.lift(g.entry(c, b), h.entry(c, a)));
            }
            mat[b * na + a] = acc.elt;
        }
    }
    Distributor::unchecked(Arc::clone(&h.dom), Arc::clone(&g.dom), mat)
}

/// The pointwise extension `{f, h} : B -|-> C` of `h : A -|-> C`
/// along `f : A -|-> B`: entry `(c, b)` is `⋀_a {f(b, a), h(c, a)}`.
/// It is the largest `y` with `y ⊗ f <= h`.
pub fn dist_ext(f: &Distributor, h: &Distributor) -> Distributor {
    assert!(same_cat(&f.dom, &h.dom), "extension needs a common domain");
    let q = f.base();
    let (na, nb, nc) = (f.dom.object_count(), f.cod.object_count(), h.cod.object_count());
    let mut mat = vec![0; nc * nb];
    for c in 0..nc {
        for b in 0..nb {
            let mut acc = q.top_arrow(f.cod.type_of(b), h.cod.type_of(c));
            for a in 0..na {
                acc = q.meet_arrow(acc, q.ext(f.entry(b, a), h.entry(c, a)));
            }
            mat[c * nb + b] = acc.elt;
        }
    }
    Distributor::unchecked(Arc::clone(&f.cod), Arc::clone(&h.cod), mat)
}

/// Is `Φ ⊣ Ψ` in the quantaloid of distributors?
/// (`Φ : A -|-> B`, `Ψ : B -|-> A`, unit `A <= Ψ ⊗ Φ`, counit
/// `Φ ⊗ Ψ <= B`.)
pub fn check_dist_adjunction(phi: &Distributor, psi: &Distributor) -> bool {
    same_cat(&phi.cod, &psi.dom)
        && same_cat(&phi.dom, &psi.cod)
        && dist_leq(&identity_dist(&phi.dom), &dist_compose(psi, phi))
        && dist_leq(&dist_compose(phi, psi), &identity_dist(&phi.cod))
}

/// The graph `B(-, F-) : A -|-> B` of a functor: entry
/// `(b, a) = B(b, Fa)`.
pub fn graph_left(f: &QFunctor) -> Distributor {
    let (na, nb) = (f.dom.object_count(), f.cod.object_count());
    let mut mat = vec![0; nb * na];
    for b in 0..nb {
        for a in 0..na {
            mat[b * na + a] = f.cod.hom_arrow(b, f.apply(a)).elt;
        }
    }
    Distributor::unchecked(Arc::clone(&f.dom), Arc::clone(&f.cod), mat)
}

/// The cograph `B(F-, -) : B -|-> A` of a functor: entry
/// `(a, b) = B(Fa, b)`.
pub fn graph_right(f: &QFunctor) -> Distributor {
    let (na, nb) = (f.dom.object_count(), f.cod.object_count());
    let mut mat = vec![0; na * nb];
    for a in 0..na {
        for b in 0..nb {
            mat[a * nb + b] = f.cod.hom_arrow(f.apply(a), b).elt;
        }
    }
    Distributor::unchecked(Arc::clone(&f.cod), Arc::clone(&f.dom), mat)
}

/// Is `F ⊣ G` for functors? Decided on graphs: `B(F-, -) = A(-, G-)`.
pub fn functor_adjoint_pair(f: &QFunctor, g: &QFunctor) -> bool {
    same_cat(&f.dom, &g.cod)
        && same_cat(&f.cod, &g.dom)
        && graph_right(f) == graph_left(g)
}

/// `Φ^op : B^op -|-> A^op` with `Φ^op(a, b) = Φ(b, a)`.
pub fn opposite_distributor(phi: &Distributor) -> Distributor {
    let (na, nb) = (phi.dom.object_count(), phi.cod.object_count());
    let mut mat = vec![0; na * nb];
    for a in 0..na {
        for b in 0..nb {
            mat[a * nb + b] = phi.mat[b * na + a];
        }
    }
    Distributor {
        dom: Arc::new(opposite_category(&phi.cod)),
        cod: Arc::new(opposite_category(&phi.dom)),
        mat,
    }
}

/// Is `F` fully faithful: `A(a', a) = B(Fa', Fa)` for all pairs?
pub fn fully_faithful(f: &QFunctor) -> bool {
    let n = f.dom.object_count();
    (0..n).all(|a1| {
        (0..n).all(|a0| f.dom.hom_arrow(a1, a0).elt == f.cod.hom_arrow(f.apply(a1), f.apply(a0)).elt)
    })
}

/// Is `F` essentially surjective: every object of the codomain
/// isomorphic to some image?
pub fn essentially_surjective(f: &QFunctor) -> bool {
    (0..f.cod.object_count())
        .all(|b| (0..f.dom.object_count()).any(|a| f.cod.obj_iso(f.apply(a), b)))
}

/// Is `F` an equivalence? Decided as fully faithful plus essentially
/// surjective.
pub fn is_equivalence(f: &QFunctor) -> bool {
    fully_faithful(f) && essentially_surjective(f)
}

/// Least-index representative of each isomorphism class.
pub fn iso_representatives(cat: &QCategory) -> Vec<usize> {
    let n = cat.object_count();
    let mut rep = vec![0; n];
    for a in 0..n {
        rep[a] = (0..=a).find(|&r| cat.obj_iso(r, a)).expect("a is isomorphic to itself");
    }
    rep
}

/// The skeletal quotient: the full subcategory on least-index
/// representatives of isomorphism classes, and the projection onto
/// it, which is an equivalence.
pub fn skeletal_quotient(cat: &Arc<QCategory>) -> (Arc<QCategory>, QFunctor) {
    let rep = iso_representatives(cat);
    let mut keep: Vec<usize> = rep.clone();
    keep.sort_unstable();
    keep.dedup();
    let names = keep.iter().map(|&a| cat.name(a).to_string()).collect();
    let types = keep.iter().map(|&a| cat.type_of(a)).collect();
    let m = keep.len();
    let mut hom = vec![0; m * m];
    for (i, &a1) in keep.iter().enumerate() {
        for (j, &a0) in keep.iter().enumerate() {
            hom[i * m + j] = cat.hom_arrow(a1, a0).elt;
        }
    }
    let skel = Arc::new(QCategory {
        base: Arc::clone(&cat.base),
        objects: TypedSet::new(names, types),
        hom,
    });
    let map = rep
        .iter()
        .map(|&r| keep.iter().position(|&k| k == r).expect("representative kept"))
        .collect();
    let proj = QFunctor { dom: Arc::clone(cat), cod: Arc::clone(&skel), map };
    (skel, proj)
}

/// All functors `dom -> cod`, lexicographically by image tuple. The
/// cap bounds the raw product of type-fiber sizes.
pub fn enumerate_functors(
    dom: &Arc<QCategory>,
    cod: &Arc<QCategory>,
    caps: &Caps,
) -> Result<Vec<QFunctor>, CapExceeded> {
    let n = dom.object_count();
    let fibers: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..cod.object_count())
                .filter(|&b| cod.type_of(b) == dom.type_of(a))
                .collect()
        })
        .collect();
    let estimate = fibers.iter().fold(1u128, |acc, f| acc.saturating_mul(f.len() as u128));
    if estimate > caps.functors as u128 {
        return Err(CapExceeded { what: "functor enumeration".into(), estimate, cap: caps.functors });
    }
    if fibers.iter().any(|f| f.is_empty()) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    'odometer: loop {
        let map: Vec<usize> = (0..n).map(|a| fibers[a][idx[a]]).collect();
        let ok = (0..n).all(|a1| {
            (0..n).all(|a0| {
                dom.base
                    .leq_arrow(dom.hom_arrow(a1, a0), cod.hom_arrow(map[a1], map[a0]))
            })
        });
        if ok {
            out.push(QFunctor { dom: Arc::clone(dom), cod: Arc::clone(cod), map });
        }
        // Advance with the last object fastest, so output is
        // lexicographic in the image tuple read left to right.
        let mut i = n;
        loop {
            if i == 0 {
                break 'odometer;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < fibers[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
    Ok(out)
}

/// All distributors `dom -|-> cod`, by backtracking over entries in
/// row-major order with incremental action checks. The cap bounds the
/// raw product of hom-lattice sizes.
pub fn enumerate_distributors(
    dom: &Arc<QCategory>,
    cod: &Arc<QCategory>,
    caps: &Caps,
) -> Result<Vec<Distributor>, CapExceeded> {
    let q = &dom.base;
    let (na, nb) = (dom.object_count(), cod.object_count());
    let sizes: Vec<usize> = (0..nb * na)
        .map(|i| q.hom(dom.type_of(i % na), cod.type_of(i / na)).len())
        .collect();
    let estimate = sizes.iter().fold(1u128, |acc, &s| acc.saturating_mul(s as u128));
    if estimate > caps.distributors as u128 {
        return Err(CapExceeded {
            what: "distributor enumeration".into(),
            estimate,
            cap: caps.distributors,
        });
    }
    let total = nb * na;
    let mut out = Vec::new();
    let mut mat: Vec<Elt> = Vec::with_capacity(total);
    let entry = |mat: &Vec<Elt>, b: usize, a: usize| -> QArrow {
        QArrow { src: dom.type_of(a), tgt: cod.type_of(b), elt: mat[b * na + a] }
    };
    // Placing position p = b * na + a; check every action inequality
    // whose participants are all placed, with (b, a) involved.
    let consistent = |mat: &Vec<Elt>| -> bool {
        let p = mat.len() - 1;
        let (b, a) = (p / na, p % na);
        let v = entry(mat, b, a);
        for b1 in 0..=b {
            // B(b1, b) ∘ Φ(b, a) <= Φ(b1, a)
            if !q.leq_arrow(q.compose(cod.hom_arrow(b1, b), v), entry(mat, b1, a)) {
                return false;
            }
            // B(b, b1) ∘ Φ(b1, a) <= Φ(b, a)
            if !q.leq_arrow(q.compose(cod.hom_arrow(b, b1), entry(mat, b1, a)), v) {
                return false;
            }
        }
        for a1 in 0..=a {
            // Φ(b, a) ∘ A(a, a1) <= Φ(b, a1)
            if !q.leq_arrow(q.compose(v, dom.hom_arrow(a, a1)), entry(mat, b, a1)) {
                return false;
            }
            // Φ(b, a1) ∘ A(a1, a) <= Φ(b, a)
            if !q.leq_arrow(q.compose(entry(mat, b, a1), dom.hom_arrow(a1, a)), v) {
                return false;
            }
        }
        true
    };
    // Depth-first, ascending element at each position: lexicographic.
    let mut stack: Vec<Elt> = vec![0];
    if total == 0 {
        return Ok(vec![Distributor::unchecked(Arc::clone(dom), Arc::clone(cod), Vec::new())]);
    }
    while let Some(v) = stack.pop() {
        let p = mat.len();
        if v >= sizes[p] {
            if mat.pop().is_none() {
                break;
            }
            continue;
        }
        stack.push(v + 1);
        mat.push(v);
        if consistent(&mat) {
            if mat.len() == total {
                out.push(Distributor::unchecked(Arc::clone(dom), Arc::clone(cod), mat.clone()));
                mat.pop();
            } else {
                stack.push(0);
            }
        } else {
            mat.pop();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantaloid::bool2;

    /// The chain `x <= y` as a category over the two-element base.
    fn chain2(base: &Arc<Quantaloid>) -> Arc<QCategory> {
        let objects = TypedSet::new(vec!["x".into(), "y".into()], vec![0, 0]);
        // hom[a1 * 2 + a0] = A(a1, a0) = 1 iff a1 <= a0.
        let hom = vec![1, 1, 0, 1];
        Arc::new(QCategory::new(Arc::clone(base), objects, hom).unwrap())
    }

    fn antichain2(base: &Arc<Quantaloid>) -> Arc<QCategory> {
        let objects = TypedSet::new(vec!["x".into(), "y".into()], vec![0, 0]);
        let hom = vec![1, 0, 0, 1];
        Arc::new(QCategory::new(Arc::clone(base), objects, hom).unwrap())
    }

    #[test]
    fn ordered_sets_are_categories_over_the_two_element_base() {
        let base = Arc::new(bool2());
        let c = chain2(&base);
        assert!(c.obj_leq(0, 1) && !c.obj_leq(1, 0));
        // A broken identity is rejected.
        let objects = TypedSet::new(vec!["x".into()], vec![0]);
        let err = QCategory::new(Arc::clone(&base), objects, vec![0]).unwrap_err();
        assert_eq!(err, EnrichedError::IdentityIneq { a: 0 });
        // A non-transitive "order" is rejected by the composition law.
        let objects = TypedSet::new(vec!["x".into(), "y".into(), "z".into()], vec![0, 0, 0]);
        // x <= y, y <= z, but not x <= z: A(y,x)=... encode hom[a1*3+a0]=1 iff a1 <= a0.
        let mut hom = vec![0; 9];
        for (a1, a0) in [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)] {
            hom[a1 * 3 + a0] = 1;
        }
        let err = QCategory::new(Arc::clone(&base), objects, hom).unwrap_err();
        assert!(matches!(err, EnrichedError::CompositionIneq { .. }));
    }

    #[test]
    fn functors_over_bool2_are_monotone_maps() {
        let base = Arc::new(bool2());
        let c = chain2(&base);
        let fs = enumerate_functors(&c, &c, &Caps::default()).unwrap();
        // Monotone self-maps of the 2-chain: constants and identity.
        assert_eq!(fs.len(), 3);
        let maps: Vec<&[usize]> = fs.iter().map(|f| f.map()).collect();
        assert_eq!(maps, vec![&[0, 0][..], &[0, 1][..], &[1, 1][..]]);
        // The non-monotone swap is rejected.
        assert!(QFunctor::new(Arc::clone(&c), Arc::clone(&c), vec![1, 0]).is_err());
        // On the antichain the swap is fine.
        let a = antichain2(&base);
        assert!(QFunctor::new(Arc::clone(&a), Arc::clone(&a), vec![1, 0]).is_ok());
    }

    #[test]
    fn distributors_over_bool2_are_stable_relations() {
        let base = Arc::new(bool2());
        let c = chain2(&base);
        let ds = enumerate_distributors(&c, &c, &Caps::default()).unwrap();
        // Down-closed in the first slot, up-closed in the second:
        // exactly the monotone 0/1 matrices on the product order.
        assert_eq!(ds.len(), 6);
        for d in &ds {
            assert!(Distributor::new(d.dom().clone(), d.cod().clone(), d.mat().to_vec()).is_ok());
        }
        // The identity distributor is among them.
        assert!(ds.contains(&identity_dist(&c)));
    }

    #[test]
    fn graphs_of_functors_are_adjoint_distributors() {
        let base = Arc::new(bool2());
        let c = chain2(&base);
        let a = antichain2(&base);
        for (dom, cod) in [(&c, &c), (&a, &c), (&c, &a), (&a, &a)] {
            for f in enumerate_functors(dom, cod, &Caps::default()).unwrap() {
                assert!(check_dist_adjunction(&graph_left(&f), &graph_right(&f)));
            }
        }
    }

    #[test]
    fn composition_identity_and_order_on_distributors() {
        let base = Arc::new(bool2());
        let c = chain2(&base);
        let ds = enumerate_distributors(&c, &c, &Caps::default()).unwrap();
        let id = identity_dist(&c);
        for d in &ds {
            assert_eq!(&dist_compose(d, &id), d);
            assert_eq!(&dist_compose(&id, d), d);
            assert!(dist_leq(d, &dist_sup(d, &id)));
        }
        // Lifting is right adjoint to composition: x <= [g, h] iff g ⊗ x <= h.
        for g in &ds {
            for h in &ds {
                let l = dist_lift(g, h);
                for x in &ds {
                    assert_eq!(dist_leq(x, &l), dist_leq(&dist_compose(g, x), h));
                }
                let e = dist_ext(g, h);
                for y in &ds {
                    assert_eq!(dist_leq(y, &e), dist_leq(&dist_compose(y, g), h));
                }
            }
        }
    }

    #[test]
    fn opposites_reverse_everything_and_are_involutive() {
        let base = Arc::new(bool2());
        let c = chain2(&base);
        let oc = opposite_category(&c);
        assert!(oc.obj_leq(1, 0) && !oc.obj_leq(0, 1), "the chain flips");
        assert_eq!(&opposite_category(&oc), c.as_ref());
        let ds = enumerate_distributors(&c, &c, &Caps::default()).unwrap();
        for phi in &ds {
            for psi in &ds {
                assert_eq!(dist_leq(phi, psi), dist_leq(&opposite_distributor(phi), &opposite_distributor(psi)));
            }
            let back = opposite_distributor(&opposite_distributor(phi));
            assert_eq!(&back, phi);
        }
    }

    #[test]
    fn skeletal_quotient_collapses_isomorphic_objects() {
        let base = Arc::new(bool2());
        // Two isomorphic copies of one point plus a strictly larger point.
        let objects = TypedSet::new(vec!["p".into(), "q".into(), "z".into()], vec![0, 0, 0]);
        // p ~ q <= z.
        let mut hom = vec![0; 9];
        for (a1, a0) in [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (0, 2), (1, 2)] {
            hom[a1 * 3 + a0] = 1;
        }
        let cat = Arc::new(QCategory::new(Arc::clone(&base), objects, hom).unwrap());
        assert!(!cat.is_skeletal());
        let (skel, proj) = skeletal_quotient(&cat);
        assert_eq!(skel.object_count(), 2);
        assert!(skel.is_skeletal());
        assert!(is_equivalence(&proj));
        assert!(fully_faithful(&proj) && essentially_surjective(&proj));
    }

    #[test]
    fn unit_category_is_a_single_identity() {
        let base = Arc::new(bool2());
        let u = unit_category(&base, 0);
        assert_eq!(u.object_count(), 1);
        assert_eq!(u.hom_arrow(0, 0), base.id(0));
    }
}
