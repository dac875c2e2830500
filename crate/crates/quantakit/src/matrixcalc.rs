//! The matrix and bimodule view of the distributor calculus.
//!
//! Over a quantaloid `Q` one can form `Matr(Q)` — typed sets and
//! matrices of arrows — and over any such structure `Bim(-)` — monads
//! and bimodules between them. Categories enriched in `Q` are exactly
//! the monads in `Matr(Q)`, distributors exactly the bimodules, so
//! `Dist(Q) = Bim(Matr(Q))`; this module makes that identity
//! executable. It also provides direct sums of typed sets, splittings
//! of monads, lax functors from finite shape categories, lax and
//! oplax transformations, and the lax colimit of a lax functor built
//! inside the distributor quantaloid, with a brute-force universality
//! checker for its cone and cocone.
//!
//! Monads, bimodules and splittings are written once, generically,
//! against the small [`Quantaloidal`] interface; instantiating it at
//! the base quantaloid, at `Matr(Q)`, or at `Bim(-)` itself then
//! yields `Bim(Q)`, `Bim(Matr(Q))`, and the fact that taking
//! bimodules is idempotent, without duplicated code.

use crate::completion::{CapExceeded, Caps};
use crate::enriched::{
    dist_bottom, dist_compose, dist_leq, dist_sup, dist_sup_all, enumerate_distributors,
    identity_dist, same_base, unit_category, Distributor, QCategory, TypedSet,
};
use crate::lattice::Elt;
use crate::quantaloid::{QArrow, Quantaloid};
use std::sync::Arc;
use thiserror::Error;

/// A defect in matrix, monad, bimodule or lax-functor data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixCalcError {
    #[error("matrix has {got} entries, expected {want}")]
    MatrixLen { got: usize, want: usize },
    #[error("matrix entry at ({y}, {x}) is out of range for its hom-lattice")]
    MatrixEntry { y: usize, x: usize },
    #[error("matrix shapes do not match")]
    MatrixShape,
    #[error("not a monad: need an endo-arrow t with t.t <= t and 1 <= t")]
    NotMonad,
    #[error("not a bimodule: need s.b <= b and b.t <= b over the given monads")]
    NotBimodule,
    #[error("object map has {got} entries, expected {want}")]
    ObMapLen { got: usize, want: usize },
    #[error("object image of shape object {at} is out of range")]
    ObMapRange { at: usize },
    #[error("arrow map has {got} entries, expected {want}")]
    ArMapLen { got: usize, want: usize },
    #[error("arrow image of shape arrow {at} is out of range")]
    ArMapRange { at: usize },
    #[error("lax unit inequality 1 <= F1 fails at shape object {at}")]
    LaxUnit { at: usize },
    #[error("lax composition inequality Fg.Ff <= F(g.f) fails at pair (g={g}, f={f})")]
    LaxComposite { g: usize, f: usize },
    #[error("empty apex set: a vacuous universality check is refused")]
    EmptyApexSet,
    #[error(transparent)]
    Shape(#[from] FinCatError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
}

/// A matrix of arrows between two typed sets: `M(y, x) : tx -> ty`,
/// stored row-major as `mat[y * |dom| + x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    base: Arc<Quantaloid>,
    dom: TypedSet,
    cod: TypedSet,
    mat: Vec<Elt>,
}

impl QMatrix {
    pub fn new(
        base: Arc<Quantaloid>,
        dom: TypedSet,
        cod: TypedSet,
        mat: Vec<Elt>,
    ) -> Result<QMatrix, MatrixCalcError> {
        let (nx, ny) = (dom.len(), cod.len());
        if mat.len() != nx * ny {
            return Err(MatrixCalcError::MatrixLen { got: mat.len(), want: nx * ny });
        }
        for y in 0..ny {
            for x in 0..nx {
                if mat[y * nx + x] >= base.hom(dom.types[x], cod.types[y]).len() {
                    return Err(MatrixCalcError::MatrixEntry { y, x });
                }
            }
        }
        Ok(QMatrix { base, dom, cod, mat })
    }

    pub fn base(&self) -> &Arc<Quantaloid> {
        &self.base
    }

    pub fn dom(&self) -> &TypedSet {
        &self.dom
    }

    pub fn cod(&self) -> &TypedSet {
        &self.cod
    }

    pub fn entry(&self, y: usize, x: usize) -> QArrow {
        QArrow {
            src: self.dom.types[x],
            tgt: self.cod.types[y],
            elt: self.mat[y * self.dom.len() + x],
        }
    }

    pub fn mat(&self) -> &[Elt] {
        &self.mat
    }
}

/// Matrix composition: `(N.M)(z, x) = V_y N(z, y).M(y, x)`.
pub fn matr_compose(n: &QMatrix, m: &QMatrix) -> QMatrix {
    assert!(same_base(&n.base, &m.base) && n.dom == m.cod, "matrices do not compose");
    let q = &n.base;
    let (nx, ny, nz) = (m.dom.len(), m.cod.len(), n.cod.len());
    let mat = (0..nz * nx)
        .map(|i| {
            let (z, x) = (i / nx, i % nx);
            q.join_arrows(
                m.dom.types[x],
                n.cod.types[z],
                (0..ny).map(|y| q.compose(n.entry(z, y), m.entry(y, x))),
            )
            .elt
        })
        .collect();
    QMatrix { base: Arc::clone(&n.base), dom: m.dom.clone(), cod: n.cod.clone(), mat }
}

/// The identity matrix on a typed set: the identity arrow on the
/// diagonal — Kronecker delta by element, not merely by type — and
/// bottom elsewhere.
pub fn matr_identity(base: &Arc<Quantaloid>, x: &TypedSet) -> QMatrix {
    let n = x.len();
    let mat = (0..n * n)
        .map(|i| {
            let (y, x0) = (i / n, i % n);
            if y == x0 { base.id(x.types[x0]).elt } else { base.hom(x.types[x0], x.types[y]).bottom() }
        })
        .collect();
    QMatrix { base: Arc::clone(base), dom: x.clone(), cod: x.clone(), mat }
}

/// The everywhere-bottom matrix between two typed sets.
pub fn matr_bottom(base: &Arc<Quantaloid>, dom: &TypedSet, cod: &TypedSet) -> QMatrix {
    let n = dom.len();
    let mat = (0..n * cod.len())
        .map(|i| base.hom(dom.types[i % n], cod.types[i / n]).bottom())
        .collect();
    QMatrix { base: Arc::clone(base), dom: dom.clone(), cod: cod.clone(), mat }
}

/// Entrywise supremum of a family of parallel matrices; the empty
/// family gives the bottom matrix.
pub fn matr_sup(base: &Arc<Quantaloid>, dom: &TypedSet, cod: &TypedSet, family: &[QMatrix]) -> QMatrix {
    family.iter().fold(matr_bottom(base, dom, cod), |acc, m| {
        assert!(acc.dom == m.dom && acc.cod == m.cod, "matrices are not parallel");
        let mat = acc
            .mat
            .iter()
            .zip(&m.mat)
            .enumerate()
            .map(|(i, (&a, &b))| {
                let (y, x) = (i / acc.dom.len(), i % acc.dom.len());
                base.hom(acc.dom.types[x], acc.cod.types[y]).join(a, b)
            })
            .collect();
        QMatrix { mat, ..acc }
    })
}

/// Entrywise order on parallel matrices.
pub fn matr_leq(m: &QMatrix, n: &QMatrix) -> bool {
    assert!(m.dom == n.dom && m.cod == n.cod, "matrices are not parallel");
    let nx = m.dom.len();
    (0..m.mat.len()).all(|i| m.base.leq_arrow(m.entry(i / nx, i % nx), n.entry(i / nx, i % nx)))
}

/// All matrices between two typed sets, lexicographic in the entry
/// elements; the full product space counts against `caps.raw`.
pub fn enumerate_matrices(
    base: &Arc<Quantaloid>,
    dom: &TypedSet,
    cod: &TypedSet,
    caps: &Caps,
) -> Result<Vec<QMatrix>, CapExceeded> {
    let sizes: Vec<usize> = (0..cod.len() * dom.len())
        .map(|i| base.hom(dom.types[i % dom.len()], cod.types[i / dom.len()]).len())
        .collect();
    let estimate = sizes.iter().try_fold(1u128, |acc, &s| {
        let next = acc.checked_mul(s as u128)?;
        (next <= caps.raw as u128).then_some(next)
    });
    let Some(_) = estimate else {
        return Err(CapExceeded {
            what: "matrix enumeration".into(),
            estimate: sizes.iter().map(|&s| s as u128).product(),
            cap: caps.raw,
        });
    };
    let mut out = Vec::new();
    let mut odo = vec![0usize; sizes.len()];
    loop {
        out.push(QMatrix {
            base: Arc::clone(base),
            dom: dom.clone(),
            cod: cod.clone(),
            mat: odo.clone(),
        });
        let mut k = sizes.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            odo[k] += 1;
            if odo[k] < sizes[k] {
                break;
            }
            odo[k] = 0;
        }
    }
}

/// The minimal interface shared by a quantaloid, `Matr(Q)` and
/// `Bim(W)`: enough structure to state and check what monads,
/// bimodules, adjunctions and splittings are.
pub trait Quantaloidal: Clone + std::fmt::Debug + PartialEq {
    type Ob: Clone + std::fmt::Debug + PartialEq;
    type Ar: Clone + std::fmt::Debug + PartialEq;

    fn src(&self, f: &Self::Ar) -> Self::Ob;
    fn tgt(&self, f: &Self::Ar) -> Self::Ob;
    fn identity(&self, x: &Self::Ob) -> Self::Ar;
    fn compose(&self, g: &Self::Ar, f: &Self::Ar) -> Self::Ar;
    fn leq(&self, f: &Self::Ar, g: &Self::Ar) -> bool;
    fn bottom(&self, x: &Self::Ob, y: &Self::Ob) -> Self::Ar;
    fn join(&self, f: &Self::Ar, g: &Self::Ar) -> Self::Ar;
}

/// A quantaloid seen through the [`Quantaloidal`] interface.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseQ(pub Arc<Quantaloid>);

impl Quantaloidal for BaseQ {
    type Ob = usize;
    type Ar = QArrow;

    fn src(&self, f: &QArrow) -> usize {
        f.src
    }

    fn tgt(&self, f: &QArrow) -> usize {
        f.tgt
    }

    fn identity(&self, x: &usize) -> QArrow {
        self.0.id(*x)
    }

    fn compose(&self, g: &QArrow, f: &QArrow) -> QArrow {
        self.0.compose(*g, *f)
    }

    fn leq(&self, f: &QArrow, g: &QArrow) -> bool {
        self.0.leq_arrow(*f, *g)
    }

    fn bottom(&self, x: &usize, y: &usize) -> QArrow {
        self.0.bottom_arrow(*x, *y)
    }

    fn join(&self, f: &QArrow, g: &QArrow) -> QArrow {
        self.0.join_arrow(*f, *g)
    }
}

/// `Matr(Q)` seen through the [`Quantaloidal`] interface.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrQ(pub Arc<Quantaloid>);

impl Quantaloidal for MatrQ {
    type Ob = TypedSet;
    type Ar = QMatrix;

    fn src(&self, f: &QMatrix) -> TypedSet {
        f.dom.clone()
    }

    fn tgt(&self, f: &QMatrix) -> TypedSet {
        f.cod.clone()
    }

    fn identity(&self, x: &TypedSet) -> QMatrix {
        matr_identity(&self.0, x)
    }

    fn compose(&self, g: &QMatrix, f: &QMatrix) -> QMatrix {
        matr_compose(g, f)
    }

    fn leq(&self, f: &QMatrix, g: &QMatrix) -> bool {
        matr_leq(f, g)
    }

    fn bottom(&self, x: &TypedSet, y: &TypedSet) -> QMatrix {
        matr_bottom(&self.0, x, y)
    }

    fn join(&self, f: &QMatrix, g: &QMatrix) -> QMatrix {
        matr_sup(&self.0, &f.dom, &f.cod, &[f.clone(), g.clone()])
    }
}

/// A monad in `W`: an endo-arrow with `t.t <= t` and `1 <= t`. Such
/// an arrow is automatically idempotent.
#[derive(Debug, Clone, PartialEq)]
pub struct Monad<W: Quantaloidal> {
    pub carrier: W::Ob,
    pub t: W::Ar,
}

impl<W: Quantaloidal> Monad<W> {
    pub fn new(w: &W, t: W::Ar) -> Result<Monad<W>, MatrixCalcError> {
        let carrier = w.src(&t);
        if w.tgt(&t) != carrier
            || !w.leq(&w.identity(&carrier), &t)
            || !w.leq(&w.compose(&t, &t), &t)
        {
            return Err(MatrixCalcError::NotMonad);
        }
        Ok(Monad { carrier, t })
    }
}

/// A bimodule `b : t -|-> s` between monads: an arrow between the
/// carriers with `s.b <= b` and `b.t <= b`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bimod<W: Quantaloidal> {
    pub src: Monad<W>,
    pub tgt: Monad<W>,
    pub b: W::Ar,
}

impl<W: Quantaloidal> Bimod<W> {
    pub fn new(w: &W, src: Monad<W>, tgt: Monad<W>, b: W::Ar) -> Result<Bimod<W>, MatrixCalcError> {
        if w.src(&b) != src.carrier
            || w.tgt(&b) != tgt.carrier
            || !w.leq(&w.compose(&tgt.t, &b), &b)
            || !w.leq(&w.compose(&b, &src.t), &b)
        {
            return Err(MatrixCalcError::NotBimodule);
        }
        Ok(Bimod { src, tgt, b })
    }
}

/// The identity bimodule on a monad is the monad itself, not the
/// identity on its carrier.
pub fn bim_identity<W: Quantaloidal>(t: &Monad<W>) -> Bimod<W> {
    Bimod { src: t.clone(), tgt: t.clone(), b: t.t.clone() }
}

/// Bimodule composition is plain composition of the carriers.
pub fn bim_compose<W: Quantaloidal>(w: &W, c: &Bimod<W>, b: &Bimod<W>) -> Bimod<W> {
    assert_eq!(b.tgt, c.src, "bimodules do not compose");
    Bimod { src: b.src.clone(), tgt: c.tgt.clone(), b: w.compose(&c.b, &b.b) }
}

/// `Bim(W)` seen through the [`Quantaloidal`] interface, so that
/// bimodule constructions iterate.
#[derive(Debug, Clone, PartialEq)]
pub struct BimQ<W: Quantaloidal>(pub W);

impl<W: Quantaloidal> Quantaloidal for BimQ<W> {
    type Ob = Monad<W>;
    type Ar = Bimod<W>;

    fn src(&self, f: &Bimod<W>) -> Monad<W> {
        f.src.clone()
    }

    fn tgt(&self, f: &Bimod<W>) -> Monad<W> {
        f.tgt.clone()
    }

    fn identity(&self, x: &Monad<W>) -> Bimod<W> {
        bim_identity(x)
    }

    fn compose(&self, g: &Bimod<W>, f: &Bimod<W>) -> Bimod<W> {
        bim_compose(&self.0, g, f)
    }

    fn leq(&self, f: &Bimod<W>, g: &Bimod<W>) -> bool {
        assert!(f.src == g.src && f.tgt == g.tgt, "bimodules are not parallel");
        self.0.leq(&f.b, &g.b)
    }

    fn bottom(&self, x: &Monad<W>, y: &Monad<W>) -> Bimod<W> {
        Bimod { src: x.clone(), tgt: y.clone(), b: self.0.bottom(&x.carrier, &y.carrier) }
    }

    fn join(&self, f: &Bimod<W>, g: &Bimod<W>) -> Bimod<W> {
        assert!(f.src == g.src && f.tgt == g.tgt, "bimodules are not parallel");
        Bimod { src: f.src.clone(), tgt: f.tgt.clone(), b: self.0.join(&f.b, &g.b) }
    }
}

/// A splitting of a monad-over-a-monad: the new object together with
/// the projection and coprojection bimodules.
#[derive(Debug, Clone, PartialEq)]
pub struct Splitting<W: Quantaloidal> {
    /// The new object: the split monad regarded as a monad in `W`.
    pub obj: Monad<W>,
    /// `p : obj -> t` with `p (x) s = the monad`.
    pub p: Bimod<W>,
    /// `s : t -> obj` with `s (x) p = identity on obj`; left adjoint
    /// to `p`.
    pub s: Bimod<W>,
}

/// Split a monad in `Bim(W)`: `m` must be an endo-bimodule on some
/// monad `t` with `t <= m` and `m (x) m <= m`. The new object is `m`
/// itself as a monad in `W`, and both structure maps are carried by
/// `m`; the splitting equations and the adjunction `s -| p` are
/// checked exactly before returning.
pub fn split_monad<W: Quantaloidal>(w: &W, m: &Bimod<W>) -> Result<Splitting<W>, MatrixCalcError> {
    if m.src != m.tgt || !w.leq(&m.src.t, &m.b) || !w.leq(&w.compose(&m.b, &m.b), &m.b) {
        return Err(MatrixCalcError::NotMonad);
    }
    let t = m.src.clone();
    let obj = Monad::new(w, m.b.clone()).expect("1 <= t <= m makes m a monad");
    let p = Bimod::new(w, obj.clone(), t.clone(), m.b.clone()).expect("m carries obj -> t");
    let s = Bimod::new(w, t.clone(), obj.clone(), m.b.clone()).expect("m carries t -> obj");
    let bim = BimQ(w.clone());
    assert_eq!(bim.compose(&p, &s), *m, "p (x) s recovers the monad");
    assert_eq!(bim.compose(&s, &p), bim.identity(&obj), "s (x) p is the identity on the new object");
    assert!(bim.leq(&bim.identity(&t), &bim.compose(&p, &s)), "unit of s -| p");
    assert!(bim.leq(&bim.compose(&s, &p), &bim.identity(&obj)), "counit of s -| p");
    Ok(Splitting { obj, p, s })
}

/// All monads on one object of the base: endo-arrows with
/// `t.t <= t` and `1 <= t`.
pub fn enumerate_monads(base: &Arc<Quantaloid>, obj: usize) -> Vec<QArrow> {
    let l = base.hom(obj, obj);
    (0..l.len())
        .map(|e| base.arrow(obj, obj, e))
        .filter(|&t| base.leq_arrow(base.id(obj), t) && base.leq_arrow(base.compose(t, t), t))
        .collect()
}

/// All monads in `Bim(Q)` over a given base monad `t`: arrows `s`
/// with `t <= s` and `s.s <= s` (the bimodule actions follow).
pub fn enumerate_bim_monads_over(base: &Arc<Quantaloid>, t: QArrow) -> Vec<QArrow> {
    let l = base.hom(t.src, t.src);
    (0..l.len())
        .map(|e| base.arrow(t.src, t.src, e))
        .filter(|&s| base.leq_arrow(t, s) && base.leq_arrow(base.compose(s, s), s))
        .collect()
}

/// A direct sum of typed sets: the disjoint-union object with its
/// projection and coprojection matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectSum {
    pub obj: TypedSet,
    /// `p[i] : obj -> family[i]`, restriction.
    pub p: Vec<QMatrix>,
    /// `s[i] : family[i] -> obj`, inclusion; left adjoint to `p[i]`.
    pub s: Vec<QMatrix>,
}

/// Build the direct sum of a family of typed sets. Labels are
/// canonicalized as `"{family index}.{element name}"`. The two
/// characterizing equations — `p_j . s_i` is the identity of the
/// summand when `i = j` and bottom otherwise, and `V_i s_i . p_i` is
/// the identity of the sum — are verified exactly, as are the
/// adjunctions `s_i -| p_i`.
pub fn direct_sum(base: &Arc<Quantaloid>, family: &[TypedSet]) -> DirectSum {
    let mut names = Vec::new();
    let mut types = Vec::new();
    let mut offsets = Vec::with_capacity(family.len());
    for (i, x) in family.iter().enumerate() {
        offsets.push(names.len());
        names.extend(x.names.iter().map(|n| format!("{i}.{n}")));
        types.extend(x.types.iter().copied());
    }
    let obj = TypedSet::new(names, types);
    let n = obj.len();
    let mut p = Vec::with_capacity(family.len());
    let mut s = Vec::with_capacity(family.len());
    for (i, x) in family.iter().enumerate() {
        let k = x.len();
        let mut pm = matr_bottom(base, &obj, x);
        let mut sm = matr_bottom(base, x, &obj);
        for e in 0..k {
            pm.mat[e * n + offsets[i] + e] = base.id(x.types[e]).elt;
            sm.mat[(offsets[i] + e) * k + e] = base.id(x.types[e]).elt;
        }
        p.push(pm);
        s.push(sm);
    }
    for (i, si) in s.iter().enumerate() {
        for (j, pj) in p.iter().enumerate() {
            let both = matr_compose(pj, si);
            let delta = if i == j {
                matr_identity(base, &family[i])
            } else {
                matr_bottom(base, &family[i], &family[j])
            };
            assert_eq!(both, delta, "p_j . s_i is a Kronecker delta");
        }
        assert!(matr_leq(&matr_identity(base, &family[i]), &matr_compose(&p[i], si)), "unit of s_i -| p_i");
        assert!(matr_leq(&matr_compose(si, &p[i]), &matr_identity(base, &obj)), "counit of s_i -| p_i");
    }
    let glued: Vec<QMatrix> = s.iter().zip(&p).map(|(si, pi)| matr_compose(si, pi)).collect();
    assert_eq!(
        matr_sup(base, &obj, &obj, &glued),
        matr_identity(base, &obj),
        "V_i s_i . p_i is the identity of the sum"
    );
    DirectSum { obj, p, s }
}

/// The hom matrix of a category, an endo-matrix on its typed set.
pub fn matrix_of_category(cat: &QCategory) -> QMatrix {
    let n = cat.object_count();
    let mat = (0..n * n).map(|i| cat.hom_arrow(i / n, i % n).elt).collect();
    QMatrix {
        base: Arc::clone(cat.base()),
        dom: cat.objects().clone(),
        cod: cat.objects().clone(),
        mat,
    }
}

/// The matrix of a distributor.
pub fn matrix_of_dist(phi: &Distributor) -> QMatrix {
    let na = phi.dom().object_count();
    let mat = (0..phi.cod().object_count() * na)
        .map(|i| phi.entry(i / na, i % na).elt)
        .collect();
    QMatrix {
        base: Arc::clone(phi.dom().base()),
        dom: phi.dom().objects().clone(),
        cod: phi.cod().objects().clone(),
        mat,
    }
}

/// A category *is* a monad in `Matr(Q)`.
pub fn monad_of_category(cat: &QCategory) -> Result<Monad<MatrQ>, MatrixCalcError> {
    Monad::new(&MatrQ(Arc::clone(cat.base())), matrix_of_category(cat))
}

/// A distributor *is* a bimodule between the hom monads.
pub fn bimodule_of_dist(phi: &Distributor) -> Result<Bimod<MatrQ>, MatrixCalcError> {
    let w = MatrQ(Arc::clone(phi.dom().base()));
    Bimod::new(&w, monad_of_category(phi.dom())?, monad_of_category(phi.cod())?, matrix_of_dist(phi))
}

/// Exact-agreement summary for the identity `Dist(Q) = Bim(Matr(Q))`
/// over a supplied corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimMatrReport {
    pub categories_checked: usize,
    pub distributors_checked: usize,
    pub composites_checked: usize,
    pub agrees: bool,
}

/// Check, over the given categories and distributors, that every
/// category is a monad in `Matr(Q)`, every distributor a bimodule
/// between the corresponding monads with the identity distributor
/// matching the identity bimodule, and that distributor composition
/// agrees entrywise with bimodule composition.
pub fn dist_equals_bim_matr(cats: &[Arc<QCategory>], dists: &[Distributor]) -> BimMatrReport {
    let mut agrees = true;
    for cat in cats {
        match monad_of_category(cat) {
            Ok(m) => agrees &= bim_identity(&m).b == matrix_of_dist(&identity_dist(cat)),
            Err(_) => agrees = false,
        }
    }
    let mut composites = 0;
    for phi in dists {
        agrees &= bimodule_of_dist(phi).is_ok();
    }
    let w = MatrQ(match (cats.first(), dists.first()) {
        (Some(c), _) => Arc::clone(c.base()),
        (None, Some(d)) => Arc::clone(d.dom().base()),
        (None, None) => return BimMatrReport {
            categories_checked: 0,
            distributors_checked: 0,
            composites_checked: 0,
            agrees,
        },
    });
    for phi in dists {
        for psi in dists {
            if !crate::enriched::same_cat(phi.cod(), psi.dom()) {
                continue;
            }
            composites += 1;
            let via_dist = matrix_of_dist(&dist_compose(psi, phi));
            match (bimodule_of_dist(phi), bimodule_of_dist(psi)) {
                (Ok(b), Ok(c)) => agrees &= bim_compose(&w, &c, &b).b == via_dist,
                _ => agrees = false,
            }
        }
    }
    BimMatrReport {
        categories_checked: cats.len(),
        distributors_checked: dists.len(),
        composites_checked: composites,
        agrees,
    }
}

/// The embedding of the base into the distributor quantaloid: an
/// arrow `f : A -> B` becomes the one-element distributor
/// `*_A -|-> *_B`. It is fully faithful and preserves composition,
/// identities and suprema on each hom.
pub fn embed_arrow(base: &Arc<Quantaloid>, f: QArrow) -> Distributor {
    Distributor::new(unit_category(base, f.src), unit_category(base, f.tgt), vec![f.elt])
        .expect("a one-element matrix between unit categories is a distributor")
}

/// A defect in finite shape-category data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinCatError {
    #[error("duplicate object name `{0}`")]
    DuplicateObject(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("arrow {arrow} has an endpoint out of range")]
    ArrowRange { arrow: usize },
    #[error("expected one identity per object")]
    IdCount,
    #[error("identity of object {object} is not an endo-arrow on it")]
    IdShape { object: usize },
    #[error("composition table has the wrong size")]
    CompSize,
    #[error("composite of (g={g}, f={f}) is undefined though the arrows compose")]
    CompUndefined { g: usize, f: usize },
    #[error("composite of (g={g}, f={f}) is defined though the arrows do not compose")]
    CompSpurious { g: usize, f: usize },
    #[error("composite of (g={g}, f={f}) has the wrong endpoints")]
    CompShape { g: usize, f: usize },
    #[error("left unit law fails at arrow {f}")]
    LeftUnit { f: usize },
    #[error("right unit law fails at arrow {f}")]
    RightUnit { f: usize },
    #[error("composition is not associative at (h={h}, g={g}, f={f})")]
    NotAssociative { h: usize, g: usize, f: usize },
}

/// An arrow of a finite shape category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinArrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite ordinary category, given by an explicit composition
/// table; the shape of a lax functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<String>,
    arrows: Vec<FinArrow>,
    ids: Vec<usize>,
    /// `comp[g * |arrows| + f]` is `g . f`, present iff `f.tgt == g.src`.
    comp: Vec<Option<usize>>,
}

impl FinCat {
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<FinArrow>,
        ids: Vec<usize>,
        comp: Vec<Option<usize>>,
    ) -> Result<FinCat, FinCatError> {
        for (i, o) in objects.iter().enumerate() {
            if objects[..i].contains(o) {
                return Err(FinCatError::DuplicateObject(o.clone()));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(FinCatError::DuplicateArrow(a.name.clone()));
            }
            if a.src >= objects.len() || a.tgt >= objects.len() {
                return Err(FinCatError::ArrowRange { arrow: i });
            }
        }
        if ids.len() != objects.len() {
            return Err(FinCatError::IdCount);
        }
        for (object, &e) in ids.iter().enumerate() {
            if e >= arrows.len() || arrows[e].src != object || arrows[e].tgt != object {
                return Err(FinCatError::IdShape { object });
            }
        }
        let n = arrows.len();
        if comp.len() != n * n {
            return Err(FinCatError::CompSize);
        }
        let cat = FinCat { objects, arrows, ids, comp };
        for g in 0..n {
            for f in 0..n {
                let composable = cat.arrows[f].tgt == cat.arrows[g].src;
                match cat.comp[g * n + f] {
                    None if composable => return Err(FinCatError::CompUndefined { g, f }),
                    Some(_) if !composable => return Err(FinCatError::CompSpurious { g, f }),
                    Some(gf) => {
                        if gf >= n
                            || cat.arrows[gf].src != cat.arrows[f].src
                            || cat.arrows[gf].tgt != cat.arrows[g].tgt
                        {
                            return Err(FinCatError::CompShape { g, f });
                        }
                    }
                    None => {}
                }
            }
        }
        for (f, a) in cat.arrows.iter().enumerate() {
            if cat.comp[cat.ids[a.tgt] * n + f] != Some(f) {
                return Err(FinCatError::LeftUnit { f });
            }
            if cat.comp[f * n + cat.ids[a.src]] != Some(f) {
                return Err(FinCatError::RightUnit { f });
            }
        }
        for h in 0..n {
            for g in 0..n {
                for f in 0..n {
                    if cat.arrows[f].tgt != cat.arrows[g].src || cat.arrows[g].tgt != cat.arrows[h].src {
                        continue;
                    }
                    let left = cat.comp[h * n + cat.comp[g * n + f].unwrap()];
                    let right = cat.comp[cat.comp[h * n + g].unwrap() * n + f];
                    if left != right {
                        return Err(FinCatError::NotAssociative { h, g, f });
                    }
                }
            }
        }
        Ok(cat)
    }

    /// Build a shape from objects and non-identity generators:
    /// identities and their composites are supplied automatically,
    /// remaining composites are read from `extra` as
    /// `(g, f, g . f)` triples of non-identity arrow indices.
    pub fn from_generators(
        objects: Vec<String>,
        generators: Vec<FinArrow>,
        extra: &[(usize, usize, usize)],
    ) -> Result<FinCat, FinCatError> {
        let mut arrows = generators;
        let mut ids = Vec::with_capacity(objects.len());
        for (o, name) in objects.iter().enumerate() {
            ids.push(arrows.len());
            arrows.push(FinArrow { name: format!("1_{name}"), src: o, tgt: o });
        }
        let n = arrows.len();
        let mut comp = vec![None; n * n];
        for f in 0..n {
            comp[ids[arrows[f].tgt] * n + f] = Some(f);
            comp[f * n + ids[arrows[f].src]] = Some(f);
        }
        for &(g, f, gf) in extra {
            comp[g * n + f] = Some(gf);
        }
        FinCat::new(objects, arrows, ids, comp)
    }

    /// The discrete shape on `n` objects.
    pub fn discrete(n: usize) -> FinCat {
        FinCat::from_generators((0..n).map(|i| format!("d{i}")).collect(), Vec::new(), &[])
            .expect("discrete shapes are categories")
    }

    /// The one-object shape whose lax functors are exactly monads.
    pub fn point() -> FinCat {
        FinCat::discrete(1)
    }

    /// Two objects and one non-identity arrow between them.
    pub fn walking_arrow() -> FinCat {
        FinCat::from_generators(
            vec!["s".into(), "t".into()],
            vec![FinArrow { name: "a".into(), src: 0, tgt: 1 }],
            &[],
        )
        .expect("the walking arrow is a category")
    }

    /// Two objects and two parallel non-identity arrows.
    pub fn parallel_pair() -> FinCat {
        FinCat::from_generators(
            vec!["s".into(), "t".into()],
            vec![
                FinArrow { name: "a1".into(), src: 0, tgt: 1 },
                FinArrow { name: "a2".into(), src: 0, tgt: 1 },
            ],
            &[],
        )
        .expect("the parallel pair is a category")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn arrow(&self, a: usize) -> &FinArrow {
        &self.arrows[a]
    }

    pub fn id_of(&self, o: usize) -> usize {
        self.ids[o]
    }

    pub fn compose(&self, g: usize, f: usize) -> usize {
        self.comp[g * self.arrows.len() + f].expect("composable arrows")
    }

    pub fn composable(&self, g: usize, f: usize) -> bool {
        self.arrows[f].tgt == self.arrows[g].src
    }

    /// Indices of all arrows `d -> d'`.
    pub fn hom_between(&self, d: usize, d1: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&a| self.arrows[a].src == d && self.arrows[a].tgt == d1)
            .collect()
    }

    /// The opposite shape: same arrows with endpoints swapped and the
    /// composition table transposed.
    pub fn opposite(&self) -> FinCat {
        let n = self.arrows.len();
        let arrows = self
            .arrows
            .iter()
            .map(|a| FinArrow { name: a.name.clone(), src: a.tgt, tgt: a.src })
            .collect();
        let mut comp = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                comp[g * n + f] = self.comp[f * n + g];
            }
        }
        FinCat::new(self.objects.clone(), arrows, self.ids.clone(), comp)
            .expect("the opposite of a category is a category")
    }
}

/// A lax functor from a finite shape into the base quantaloid:
/// `1_{FD} <= F1_D` and `Fg . Ff <= F(g.f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaxFunctor {
    shape: FinCat,
    base: Arc<Quantaloid>,
    ob: Vec<usize>,
    ar: Vec<Elt>,
}

impl LaxFunctor {
    pub fn new(
        shape: FinCat,
        base: Arc<Quantaloid>,
        ob: Vec<usize>,
        ar: Vec<Elt>,
    ) -> Result<LaxFunctor, MatrixCalcError> {
        if ob.len() != shape.object_count() {
            return Err(MatrixCalcError::ObMapLen { got: ob.len(), want: shape.object_count() });
        }
        if let Some(at) = ob.iter().position(|&x| x >= base.object_count()) {
            return Err(MatrixCalcError::ObMapRange { at });
        }
        if ar.len() != shape.arrow_count() {
            return Err(MatrixCalcError::ArMapLen { got: ar.len(), want: shape.arrow_count() });
        }
        for (at, a) in shape.arrows.iter().enumerate() {
            if ar[at] >= base.hom(ob[a.src], ob[a.tgt]).len() {
                return Err(MatrixCalcError::ArMapRange { at });
            }
        }
        let f = LaxFunctor { shape, base, ob, ar };
        for d in 0..f.shape.object_count() {
            if !f.base.leq_arrow(f.base.id(f.ob[d]), f.arrow_image(f.shape.id_of(d))) {
                return Err(MatrixCalcError::LaxUnit { at: d });
            }
        }
        for g in 0..f.shape.arrow_count() {
            for ff in 0..f.shape.arrow_count() {
                if !f.shape.composable(g, ff) {
                    continue;
                }
                let lhs = f.base.compose(f.arrow_image(g), f.arrow_image(ff));
                if !f.base.leq_arrow(lhs, f.arrow_image(f.shape.compose(g, ff))) {
                    return Err(MatrixCalcError::LaxComposite { g, f: ff });
                }
            }
        }
        Ok(f)
    }

    pub fn shape(&self) -> &FinCat {
        &self.shape
    }

    pub fn base(&self) -> &Arc<Quantaloid> {
        &self.base
    }

    pub fn ob_image(&self, d: usize) -> usize {
        self.ob[d]
    }

    pub fn arrow_image(&self, a: usize) -> QArrow {
        let fa = &self.shape.arrows[a];
        self.base.arrow(self.ob[fa.src], self.ob[fa.tgt], self.ar[a])
    }
}

/// The same data read as a lax functor `shape^op -> base^op`. The
/// opposite base must be supplied (so that callers can share one
/// handle); its hom-lattices carry the same elements, so the arrow
/// images transfer unchanged.
pub fn opposite_lax_functor(f: &LaxFunctor, op_base: &Arc<Quantaloid>) -> LaxFunctor {
    debug_assert_eq!(**op_base, crate::quantaloid::opposite_quantaloid(&f.base));
    LaxFunctor::new(f.shape.opposite(), Arc::clone(op_base), f.ob.clone(), f.ar.clone())
        .expect("the opposite of a lax functor is lax")
}

/// Is `theta` a lax transformation `f => g`? Components
/// `theta[D] : FD -> GD` must satisfy `theta_{D'} . Ff >= Gf . theta_D`.
pub fn is_lax_transfo(f: &LaxFunctor, g: &LaxFunctor, theta: &[Elt]) -> bool {
    transfo_wf(f, g, theta)
        && (0..f.shape.arrow_count()).all(|a| {
            let fa = &f.shape.arrows[a];
            let left = f.base.compose(component(f, g, theta, fa.tgt), f.arrow_image(a));
            let right = f.base.compose(g.arrow_image(a), component(f, g, theta, fa.src));
            f.base.leq_arrow(right, left)
        })
}

/// Is `theta` an oplax transformation `f => g`? The reversed
/// inequality `theta_{D'} . Ff <= Gf . theta_D`.
pub fn is_oplax_transfo(f: &LaxFunctor, g: &LaxFunctor, theta: &[Elt]) -> bool {
    transfo_wf(f, g, theta)
        && (0..f.shape.arrow_count()).all(|a| {
            let fa = &f.shape.arrows[a];
            let left = f.base.compose(component(f, g, theta, fa.tgt), f.arrow_image(a));
            let right = f.base.compose(g.arrow_image(a), component(f, g, theta, fa.src));
            f.base.leq_arrow(left, right)
        })
}

fn transfo_wf(f: &LaxFunctor, g: &LaxFunctor, theta: &[Elt]) -> bool {
    assert_eq!(f.shape, g.shape, "transformations need one shape");
    assert!(same_base(&f.base, &g.base), "transformations need one base");
    theta.len() == f.shape.object_count()
        && (0..theta.len()).all(|d| theta[d] < f.base.hom(f.ob[d], g.ob[d]).len())
}

fn component(f: &LaxFunctor, g: &LaxFunctor, theta: &[Elt], d: usize) -> QArrow {
    f.base.arrow(f.ob[d], g.ob[d], theta[d])
}

/// The identity transformation on a lax functor.
pub fn identity_transfo(f: &LaxFunctor) -> Vec<Elt> {
    (0..f.shape.object_count()).map(|d| f.base.id(f.ob[d]).elt).collect()
}

/// Componentwise composition of transformations
/// `psi : g => h` after `theta : f => g`.
pub fn transfo_compose(
    f: &LaxFunctor,
    g: &LaxFunctor,
    h: &LaxFunctor,
    psi: &[Elt],
    theta: &[Elt],
) -> Vec<Elt> {
    (0..f.shape.object_count())
        .map(|d| f.base.compose(component(g, h, psi, d), component(f, g, theta, d)).elt)
        .collect()
}

/// Componentwise supremum of a family of transformations `f => g`;
/// the empty family gives the bottom components.
pub fn transfo_sup(f: &LaxFunctor, g: &LaxFunctor, family: &[Vec<Elt>]) -> Vec<Elt> {
    (0..f.shape.object_count())
        .map(|d| {
            f.base
                .join_arrows(
                    f.ob[d],
                    g.ob[d],
                    family.iter().map(|theta| component(f, g, theta, d)),
                )
                .elt
        })
        .collect()
}

/// All lax transformations `f => g`, lexicographic in components;
/// the raw component space counts against `caps.raw`, the filtered
/// result against `caps.functors`.
pub fn enumerate_lax_transfos(
    f: &LaxFunctor,
    g: &LaxFunctor,
    caps: &Caps,
) -> Result<Vec<Vec<Elt>>, CapExceeded> {
    enumerate_transfos(f, g, caps, &is_lax_transfo)
}

/// All oplax transformations `f => g`, dual to
/// [`enumerate_lax_transfos`].
pub fn enumerate_oplax_transfos(
    f: &LaxFunctor,
    g: &LaxFunctor,
    caps: &Caps,
) -> Result<Vec<Vec<Elt>>, CapExceeded> {
    enumerate_transfos(f, g, caps, &is_oplax_transfo)
}

fn enumerate_transfos(
    f: &LaxFunctor,
    g: &LaxFunctor,
    caps: &Caps,
    keep: &dyn Fn(&LaxFunctor, &LaxFunctor, &[Elt]) -> bool,
) -> Result<Vec<Vec<Elt>>, CapExceeded> {
    let sizes: Vec<usize> =
        (0..f.shape.object_count()).map(|d| f.base.hom(f.ob[d], g.ob[d]).len()).collect();
    let estimate: u128 = sizes.iter().map(|&s| s as u128).product();
    if estimate > caps.raw as u128 {
        return Err(CapExceeded { what: "transformation enumeration (raw guard)".into(), estimate, cap: caps.raw });
    }
    let mut out = Vec::new();
    let mut odo = vec![0usize; sizes.len()];
    loop {
        if keep(f, g, &odo) {
            if out.len() == caps.functors {
                return Err(CapExceeded {
                    what: "transformation enumeration".into(),
                    estimate,
                    cap: caps.functors,
                });
            }
            out.push(odo.clone());
        }
        let mut k = sizes.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            odo[k] += 1;
            if odo[k] < sizes[k] {
                break;
            }
            odo[k] = 0;
        }
    }
}

/// The lax colimit of a lax functor, constructed inside the
/// distributor quantaloid.
#[derive(Debug, Clone)]
pub struct LaxColimit {
    /// The category `D` with the shape's objects, types `FD`, and
    /// homs `D(D', D) = V { Fd | d : D -> D' }`.
    pub cat: Arc<QCategory>,
    /// Coprojections `s[D] : *_{FD} -|-> D`, the columns of the hom.
    pub s: Vec<Distributor>,
    /// Projections `p[D] : D -|-> *_{FD}`, the rows; each `s[D]` is
    /// left adjoint to `p[D]`.
    pub p: Vec<Distributor>,
}

/// Build the lax colimit of `f` in the distributor quantaloid and
/// verify its two characterizing equations exactly:
/// `V_D s_D (x) p_D` is the identity distributor, and
/// `p_{D'} (x) s_D` is the single arrow `V { Fd | d : D -> D' }`.
pub fn lax_colimit_in_dist(f: &LaxFunctor) -> LaxColimit {
    let shape = f.shape();
    let q = f.base();
    let n = shape.object_count();
    let names = (0..n).map(|d| shape.object_name(d).to_string()).collect();
    let types: Vec<usize> = (0..n).map(|d| f.ob_image(d)).collect();
    let mut hom = vec![0; n * n];
    for d1 in 0..n {
        for d in 0..n {
            hom[d1 * n + d] = q
                .join_arrows(
                    types[d],
                    types[d1],
                    shape.hom_between(d, d1).into_iter().map(|a| f.arrow_image(a)),
                )
                .elt;
        }
    }
    let cat = Arc::new(
        QCategory::new(Arc::clone(q), TypedSet::new(names, types.clone()), hom)
            .expect("the joined homs form a category precisely because the functor is lax"),
    );
    let mut s = Vec::with_capacity(n);
    let mut p = Vec::with_capacity(n);
    for d in 0..n {
        let unit = unit_category(q, types[d]);
        let col = (0..n).map(|d1| cat.hom_arrow(d1, d).elt).collect();
        let row = (0..n).map(|d1| cat.hom_arrow(d, d1).elt).collect();
        s.push(Distributor::new(unit.clone(), Arc::clone(&cat), col).expect("hom columns are distributors"));
        p.push(Distributor::new(Arc::clone(&cat), unit, row).expect("hom rows are distributors"));
    }
    let glued: Vec<Distributor> = (0..n).map(|d| dist_compose(&s[d], &p[d])).collect();
    assert_eq!(
        dist_sup_all(&cat, &cat, glued.iter()),
        identity_dist(&cat),
        "V_D s_D (x) p_D is the identity"
    );
    for d in 0..n {
        for d1 in 0..n {
            assert_eq!(
                dist_compose(&p[d1], &s[d]).entry(0, 0),
                cat.hom_arrow(d1, d),
                "p_D' (x) s_D is the join of the arrow images"
            );
        }
        assert!(
            crate::enriched::check_dist_adjunction(&s[d], &p[d]),
            "each coprojection is left adjoint to its projection"
        );
    }
    LaxColimit { cat, s, p }
}

/// Which universal property of a candidate lax (co)limit to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeSide {
    /// Cones: `Dist(A, L) = Lax(Delta_A, F)` via `k |-> (p_D (x) k)_D`.
    Limit,
    /// Cocones: `Dist(L, A) = OpLax(F, Delta_A)` via `k |-> (k (x) s_D)_D`.
    Colimit,
}

/// Verify the universal property of a candidate lax (co)limit against
/// a finite set of apex categories: for each apex, enumerate the
/// distributors into (out of) the candidate and all lax cones (oplax
/// cocones) with that apex, and check that composition with the
/// candidate's projections (coprojections) is a bijection, with the
/// explicit inverse `(theta_D) |-> V_D s_D (x) theta_D` (dually
/// `V_D theta_D (x) p_D`). Sup-preservation of the comparison map is
/// asserted on top of bijectivity. An empty apex set is refused.
pub fn verify_lax_universality(
    f: &LaxFunctor,
    cand: &LaxColimit,
    side: ConeSide,
    apexes: &[Arc<QCategory>],
    caps: &Caps,
) -> Result<bool, MatrixCalcError> {
    if apexes.is_empty() {
        return Err(MatrixCalcError::EmptyApexSet);
    }
    let q = f.base();
    let n = f.shape().object_count();
    let units: Vec<Arc<QCategory>> = (0..n).map(|d| unit_category(q, f.ob_image(d))).collect();
    for apex in apexes {
        let ks = match side {
            ConeSide::Limit => enumerate_distributors(apex, &cand.cat, caps)?,
            ConeSide::Colimit => enumerate_distributors(&cand.cat, apex, caps)?,
        };
        let mut per_obj = Vec::with_capacity(n);
        for unit in &units {
            per_obj.push(match side {
                ConeSide::Limit => enumerate_distributors(apex, unit, caps)?,
                ConeSide::Colimit => enumerate_distributors(unit, apex, caps)?,
            });
        }
        let families = enumerate_families(f, &per_obj, side, caps)?;
        let map = |k: &Distributor| -> Vec<Distributor> {
            (0..n)
                .map(|d| match side {
                    ConeSide::Limit => dist_compose(&cand.p[d], k),
                    ConeSide::Colimit => dist_compose(k, &cand.s[d]),
                })
                .collect()
        };
        let inv = |family: &[Distributor]| -> Distributor {
            let parts: Vec<Distributor> = (0..n)
                .map(|d| match side {
                    ConeSide::Limit => dist_compose(&cand.s[d], &family[d]),
                    ConeSide::Colimit => dist_compose(&family[d], &cand.p[d]),
                })
                .collect();
            match side {
                ConeSide::Limit => dist_sup_all(apex, &cand.cat, parts.iter()),
                ConeSide::Colimit => dist_sup_all(&cand.cat, apex, parts.iter()),
            }
        };
        for k in &ks {
            let family = map(k);
            if !family_is_cone(f, &family, side) || inv(&family) != *k {
                return Ok(false);
            }
        }
        for family in &families {
            if &map(&inv(family)) != family {
                return Ok(false);
            }
        }
        // Sup-preservation of the comparison map, asserted on a
        // bounded prefix; it already follows from composition
        // preserving suprema.
        let bound = ks.len().min(64);
        for k1 in &ks[..bound] {
            for k2 in &ks[..bound] {
                let joined = map(&dist_sup(k1, k2));
                let pointwise: Vec<Distributor> = map(k1)
                    .iter()
                    .zip(map(k2).iter())
                    .map(|(x, y)| dist_sup(x, y))
                    .collect();
                if joined != pointwise {
                    return Ok(false);
                }
            }
        }
        let bottom = match side {
            ConeSide::Limit => dist_bottom(apex, &cand.cat),
            ConeSide::Colimit => dist_bottom(&cand.cat, apex),
        };
        let bottom_family: Vec<Distributor> = (0..n)
            .map(|d| match side {
                ConeSide::Limit => dist_bottom(apex, &units[d]),
                ConeSide::Colimit => dist_bottom(&units[d], apex),
            })
            .collect();
        if map(&bottom) != bottom_family {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does the family satisfy the lax-cone (oplax-cocone) inequality for
/// every shape arrow? Cones: `theta_{D'} >= Fd (x) theta_D`; cocones:
/// `theta_{D'} (x) Fd <= theta_D`.
fn family_is_cone(f: &LaxFunctor, family: &[Distributor], side: ConeSide) -> bool {
    (0..f.shape().arrow_count()).all(|a| {
        let (d, d1) = (f.shape().arrow(a).src, f.shape().arrow(a).tgt);
        let fd = embed_arrow(f.base(), f.arrow_image(a));
        match side {
            ConeSide::Limit => dist_leq(&dist_compose(&fd, &family[d]), &family[d1]),
            ConeSide::Colimit => dist_leq(&dist_compose(&family[d1], &fd), &family[d]),
        }
    })
}

fn enumerate_families(
    f: &LaxFunctor,
    per_obj: &[Vec<Distributor>],
    side: ConeSide,
    caps: &Caps,
) -> Result<Vec<Vec<Distributor>>, CapExceeded> {
    let estimate: u128 = per_obj.iter().map(|v| v.len() as u128).product();
    if estimate > caps.raw as u128 {
        return Err(CapExceeded { what: "cone enumeration (raw guard)".into(), estimate, cap: caps.raw });
    }
    let mut out = Vec::new();
    let mut odo = vec![0usize; per_obj.len()];
    if per_obj.iter().any(|v| v.is_empty()) {
        return Ok(out);
    }
    loop {
        let family: Vec<Distributor> =
            odo.iter().enumerate().map(|(d, &i)| per_obj[d][i].clone()).collect();
        if family_is_cone(f, &family, side) {
            out.push(family);
        }
        let mut k = odo.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            odo[k] += 1;
            if odo[k] < per_obj[k].len() {
                break;
            }
            odo[k] = 0;
        }
    }
}

/// The default apex set for universality checks: every one-object
/// category of the base. The distributor quantaloid has more objects
/// than any finite set, so this is an honest sample, not a proof over
/// all apexes.
pub fn default_apexes(base: &Arc<Quantaloid>) -> Vec<Arc<QCategory>> {
    (0..base.object_count()).map(|x| unit_category(base, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::QFunctor;
    use crate::lattice::Lattice;
    use crate::quantaloid::{bool2, opposite_quantaloid, rel_locale, tropical_trunc};

    fn set(base: &Arc<Quantaloid>, spec: &[(&str, usize)]) -> TypedSet {
        for &(_, t) in spec {
            assert!(t < base.object_count());
        }
        TypedSet::new(
            spec.iter().map(|&(n, _)| n.to_string()).collect(),
            spec.iter().map(|&(_, t)| t).collect(),
        )
    }

    #[test]
    fn bool2_matrices_multiply_like_boolean_matrices() {
        let base = Arc::new(bool2());
        let x = set(&base, &[("x0", 0), ("x1", 0)]);
        let y = set(&base, &[("y0", 0), ("y1", 0), ("y2", 0)]);
        let z = set(&base, &[("z0", 0), ("z1", 0)]);
        let caps = Caps { raw: 1 << 20, ..Caps::default() };
        let ms = enumerate_matrices(&base, &x, &y, &caps).unwrap();
        let ns = enumerate_matrices(&base, &y, &z, &caps).unwrap();
        for m in ms.iter().step_by(7) {
            for n in ns.iter().step_by(5) {
                let prod = matr_compose(n, m);
                for zi in 0..2 {
                    for xi in 0..2 {
                        let oracle =
                            (0..3).any(|yi| n.entry(zi, yi).elt == 1 && m.entry(yi, xi).elt == 1);
                        assert_eq!(prod.entry(zi, xi).elt == 1, oracle);
                    }
                }
                // Identity laws.
                assert_eq!(matr_compose(&matr_identity(&base, &y), m), *m);
                assert_eq!(matr_compose(m, &matr_identity(&base, &x)), *m);
            }
        }
    }

    #[test]
    fn tropical_matrices_multiply_min_plus_with_cap() {
        let base = Arc::new(tropical_trunc(3));
        let x = set(&base, &[("a", 0), ("b", 0)]);
        let m = QMatrix::new(Arc::clone(&base), x.clone(), x.clone(), vec![0, 2, 1, 3]).unwrap();
        let n = QMatrix::new(Arc::clone(&base), x.clone(), x.clone(), vec![1, 0, 2, 2]).unwrap();
        let prod = matr_compose(&n, &m);
        for z in 0..2 {
            for xi in 0..2 {
                let oracle = (0..2)
                    .map(|y| (n.entry(z, y).elt + m.entry(y, xi).elt).min(3))
                    .min()
                    .unwrap();
                assert_eq!(prod.entry(z, xi).elt, oracle);
            }
        }
    }

    #[test]
    fn matr_is_a_quantaloid_on_small_instances() {
        let base = Arc::new(bool2());
        let x = set(&base, &[("x0", 0)]);
        let y = set(&base, &[("y0", 0), ("y1", 0)]);
        let caps = Caps::default();
        let ms = enumerate_matrices(&base, &x, &y, &caps).unwrap();
        let ns = enumerate_matrices(&base, &y, &y, &caps).unwrap();
        let ks = enumerate_matrices(&base, &y, &x, &caps).unwrap();
        for m in &ms {
            for nn in &ns {
                for k in &ks {
                    assert_eq!(
                        matr_compose(k, &matr_compose(nn, m)),
                        matr_compose(&matr_compose(k, nn), m)
                    );
                }
                // Composition distributes over binary sups in each variable.
                for m2 in &ms {
                    let lhs = matr_compose(nn, &matr_sup(&base, &x, &y, &[m.clone(), m2.clone()]));
                    let rhs = matr_sup(
                        &base,
                        &x,
                        &y,
                        &[matr_compose(nn, m), matr_compose(nn, m2)],
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn direct_sums_satisfy_the_characterizing_equations() {
        let base = Arc::new(bool2());
        let a = set(&base, &[("a", 0)]);
        let b = set(&base, &[("b", 0)]);
        let two = direct_sum(&base, &[a.clone(), b.clone()]);
        assert_eq!(two.obj.names, vec!["0.a", "1.b"]);
        assert_eq!(matr_compose(&two.p[0], &two.s[0]), matr_identity(&base, &a));
        assert_eq!(matr_compose(&two.p[1], &two.s[0]), matr_bottom(&base, &a, &b));

        let empty = direct_sum(&base, &[]);
        assert!(empty.obj.is_empty());

        let rel = Arc::new(rel_locale(&Lattice::chain(3)).unwrap());
        let fam = [
            set(&rel, &[("u", 0), ("v", 2)]),
            set(&rel, &[("w", 1)]),
            set(&rel, &[("x", 2), ("y", 1), ("z", 0)]),
        ];
        let sum = direct_sum(&rel, &fam);
        assert_eq!(sum.obj.len(), 6);
        for (i, si) in sum.s.iter().enumerate() {
            for (j, pj) in sum.p.iter().enumerate() {
                let expect = if i == j {
                    matr_identity(&rel, &fam[i])
                } else {
                    matr_bottom(&rel, &fam[i], &fam[j])
                };
                assert_eq!(matr_compose(pj, si), expect);
            }
        }
    }

    #[test]
    fn monads_over_bool2_are_preorders_and_bimodules_compose_like_relations() {
        let base = Arc::new(bool2());
        let w = MatrQ(Arc::clone(&base));
        let x = set(&base, &[("x0", 0), ("x1", 0)]);
        let caps = Caps::default();
        let endos = enumerate_matrices(&base, &x, &x, &caps).unwrap();
        let monads: Vec<Monad<MatrQ>> =
            endos.iter().filter_map(|m| Monad::new(&w, m.clone()).ok()).collect();
        // Reflexive-transitive boolean matrices on two points: the
        // four preorders on a two-element set.
        assert_eq!(monads.len(), 4);
        for t in &monads {
            for s in &monads {
                let bims: Vec<Bimod<MatrQ>> = endos
                    .iter()
                    .filter_map(|b| Bimod::new(&w, t.clone(), s.clone(), b.clone()).ok())
                    .collect();
                for bim in &bims {
                    // The identity absorbs on both sides.
                    assert_eq!(bim_compose(&w, &bim_identity(s), bim), *bim);
                    assert_eq!(bim_compose(&w, bim, &bim_identity(t)), *bim);
                }
                // Composition associates through a third monad.
                for r in &monads {
                    for c in endos
                        .iter()
                        .filter_map(|c| Bimod::new(&w, s.clone(), r.clone(), c.clone()).ok())
                        .take(3)
                    {
                        for bim in bims.iter().take(3) {
                            let direct = bim_compose(&w, &c, bim).b;
                            let oracle = matr_compose(&c.b, &bim.b);
                            assert_eq!(direct, oracle);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn monads_split_and_the_trivial_splitting_is_the_monad() {
        let base = Arc::new(bool2());
        let w = BaseQ(Arc::clone(&base));
        for t in enumerate_monads(&base, 0) {
            let tm = Monad::new(&w, t).unwrap();
            for s in enumerate_bim_monads_over(&base, t) {
                let sm = Bimod::new(&w, tm.clone(), tm.clone(), s).unwrap();
                let split = split_monad(&w, &sm).unwrap();
                assert_eq!(split.obj.t, s);
                assert_eq!(base.compose(s, s), s);
            }
        }
        // A two-point base: splitting a coarser preorder over a finer
        // one lands on the coarser preorder, one level up in Matr.
        let wm = MatrQ(Arc::clone(&base));
        let x = set(&base, &[("x0", 0), ("x1", 0)]);
        let discrete = matr_identity(&base, &x);
        let chain = QMatrix::new(Arc::clone(&base), x.clone(), x.clone(), vec![1, 1, 0, 1]).unwrap();
        let t = Monad::new(&wm, discrete).unwrap();
        let coarser = Bimod::new(&wm, t.clone(), t.clone(), chain.clone()).unwrap();
        let split = split_monad(&wm, &coarser).unwrap();
        assert_eq!(split.obj.t, chain);
        // And bimodule-land iterates: the splitting exists inside
        // Bim(Matr(Q)) as well.
        let wb = BimQ(wm.clone());
        let obj2 = Monad::new(&wb, bim_identity(&split.obj)).unwrap();
        let over = Bimod::new(&wb, obj2.clone(), obj2, bim_identity(&split.obj)).unwrap();
        assert!(split_monad(&wb, &over).is_ok());
    }

    #[test]
    fn categories_are_monads_and_distributors_bimodules() {
        let base = Arc::new(bool2());
        let objects = TypedSet::new(vec!["x".into(), "y".into()], vec![0, 0]);
        let chain = Arc::new(QCategory::new(Arc::clone(&base), objects.clone(), vec![1, 1, 0, 1]).unwrap());
        let anti = Arc::new(QCategory::new(Arc::clone(&base), objects, vec![1, 0, 0, 1]).unwrap());
        let caps = Caps::default();
        let mut dists = enumerate_distributors(&chain, &anti, &caps).unwrap();
        dists.extend(enumerate_distributors(&anti, &chain, &caps).unwrap());
        dists.push(identity_dist(&chain));
        dists.push(identity_dist(&anti));
        let report = dist_equals_bim_matr(&[chain, anti], &dists);
        assert!(report.agrees);
        assert!(report.composites_checked > 0);

        let rel = Arc::new(rel_locale(&Lattice::chain(3)).unwrap());
        let ts = TypedSet::new(vec!["u".into(), "v".into()], vec![1, 2]);
        let hom = vec![rel.id(1).elt, rel.hom(2, 1).top(), rel.hom(1, 2).bottom(), rel.id(2).elt];
        let cat = Arc::new(QCategory::new(Arc::clone(&rel), ts, hom).unwrap());
        let dists = enumerate_distributors(&cat, &cat, &caps).unwrap();
        assert!(dist_equals_bim_matr(&[cat], &dists).agrees);
    }

    #[test]
    fn embedding_arrows_is_a_fully_faithful_homomorphism() {
        let rel = Arc::new(rel_locale(&Lattice::chain(3)).unwrap());
        for a in 0..3 {
            assert_eq!(embed_arrow(&rel, rel.id(a)), identity_dist(&unit_category(&rel, a)));
            for b in 0..3 {
                let l = rel.hom(a, b);
                for e1 in 0..l.len() {
                    for e2 in 0..l.len() {
                        let (f, g) = (rel.arrow(a, b, e1), rel.arrow(a, b, e2));
                        assert_eq!(
                            dist_leq(&embed_arrow(&rel, f), &embed_arrow(&rel, g)),
                            rel.leq_arrow(f, g)
                        );
                        assert_eq!(
                            dist_sup(&embed_arrow(&rel, f), &embed_arrow(&rel, g)),
                            embed_arrow(&rel, rel.join_arrow(f, g))
                        );
                    }
                }
                for c in 0..3 {
                    for e1 in 0..l.len() {
                        for e2 in 0..rel.hom(b, c).len() {
                            let (f, g) = (rel.arrow(a, b, e1), rel.arrow(b, c, e2));
                            assert_eq!(
                                dist_compose(&embed_arrow(&rel, g), &embed_arrow(&rel, f)),
                                embed_arrow(&rel, rel.compose(g, f))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shape_validation_catches_broken_tables() {
        let objects = vec!["s".to_string(), "t".to_string()];
        let arrows = vec![
            FinArrow { name: "a".into(), src: 0, tgt: 1 },
            FinArrow { name: "1_s".into(), src: 0, tgt: 0 },
            FinArrow { name: "1_t".into(), src: 1, tgt: 1 },
        ];
        let ids = vec![1, 2];
        let mut comp = vec![None; 9];
        comp[0 * 3 + 1] = Some(0);
        comp[2 * 3 + 0] = Some(0);
        comp[1 * 3 + 1] = Some(1);
        comp[2 * 3 + 2] = Some(2);
        assert!(FinCat::new(objects.clone(), arrows.clone(), ids.clone(), comp.clone()).is_ok());
        comp[2 * 3 + 0] = None;
        assert_eq!(
            FinCat::new(objects.clone(), arrows.clone(), ids.clone(), comp.clone()),
            Err(FinCatError::CompUndefined { g: 2, f: 0 })
        );
        comp[2 * 3 + 0] = Some(2);
        assert_eq!(
            FinCat::new(objects, arrows, ids, comp),
            Err(FinCatError::CompShape { g: 2, f: 0 })
        );
    }

    #[test]
    fn lax_functors_are_validated_and_monads_are_point_shaped_lax_functors() {
        let base = Arc::new(tropical_trunc(3));
        let shape = FinCat::point();
        // On the point shape, the identity must go to a monad:
        // images 0 (the unit) work, a positive distance does not.
        assert!(LaxFunctor::new(shape.clone(), Arc::clone(&base), vec![0], vec![0]).is_ok());
        assert_eq!(
            LaxFunctor::new(shape, Arc::clone(&base), vec![0], vec![2]).unwrap_err(),
            MatrixCalcError::LaxUnit { at: 0 }
        );
        // On the walking arrow over bool2 every arrow assignment with
        // identity images on identities is lax.
        let b2 = Arc::new(bool2());
        let wa = FinCat::walking_arrow();
        for e in 0..2 {
            assert!(LaxFunctor::new(wa.clone(), Arc::clone(&b2), vec![0, 0], vec![e, 1, 1]).is_ok());
        }
        // Breaking a composite is caught: send the composite
        // a2 . a1 of a two-step chain strictly below Fa2 . Fa1.
        let chain3 = FinCat::from_generators(
            vec!["x".into(), "y".into(), "z".into()],
            vec![
                FinArrow { name: "a1".into(), src: 0, tgt: 1 },
                FinArrow { name: "a2".into(), src: 1, tgt: 2 },
                FinArrow { name: "a21".into(), src: 0, tgt: 2 },
            ],
            &[(1, 0, 2)],
        )
        .unwrap();
        let trop = Arc::new(tropical_trunc(3));
        // F(a1) = 1, F(a2) = 1, F(a21) = 3 > 1 + 1: not lax.
        assert_eq!(
            LaxFunctor::new(chain3, Arc::clone(&trop), vec![0, 0, 0], vec![1, 1, 3, 0, 0, 0])
                .unwrap_err(),
            MatrixCalcError::LaxComposite { g: 1, f: 0 }
        );
    }

    #[test]
    fn lax_colimit_of_a_discrete_shape_has_kronecker_homs() {
        let rel = Arc::new(rel_locale(&Lattice::chain(3)).unwrap());
        let f = LaxFunctor::new(
            FinCat::discrete(3),
            Arc::clone(&rel),
            vec![0, 2, 2],
            vec![rel.id(0).elt, rel.id(2).elt, rel.id(2).elt],
        )
        .unwrap();
        let colim = lax_colimit_in_dist(&f);
        for d1 in 0..3 {
            for d in 0..3 {
                let expect = if d == d1 {
                    rel.id(f.ob_image(d))
                } else {
                    rel.bottom_arrow(f.ob_image(d), f.ob_image(d1))
                };
                assert_eq!(colim.cat.hom_arrow(d1, d), expect);
            }
        }
    }

    #[test]
    fn lax_colimit_of_a_monad_is_the_one_object_collapse() {
        let base = Arc::new(bool2());
        let f = LaxFunctor::new(FinCat::point(), Arc::clone(&base), vec![0], vec![1]).unwrap();
        let colim = lax_colimit_in_dist(&f);
        assert_eq!(colim.cat.object_count(), 1);
        assert_eq!(colim.cat.hom_arrow(0, 0).elt, 1);
        assert!(verify_lax_universality(&f, &colim, ConeSide::Limit, &default_apexes(&base), &Caps::default()).unwrap());
        assert!(verify_lax_universality(&f, &colim, ConeSide::Colimit, &default_apexes(&base), &Caps::default()).unwrap());
    }

    #[test]
    fn lax_colimit_of_the_walking_arrow_is_universal_and_breaks_when_lowered() {
        let base = Arc::new(bool2());
        let f =
            LaxFunctor::new(FinCat::walking_arrow(), Arc::clone(&base), vec![0, 0], vec![1, 1, 1])
                .unwrap();
        let colim = lax_colimit_in_dist(&f);
        let apexes = default_apexes(&base);
        let caps = Caps::default();
        assert!(verify_lax_universality(&f, &colim, ConeSide::Limit, &apexes, &caps).unwrap());
        assert!(verify_lax_universality(&f, &colim, ConeSide::Colimit, &apexes, &caps).unwrap());
        assert_eq!(
            verify_lax_universality(&f, &colim, ConeSide::Limit, &[], &caps),
            Err(MatrixCalcError::EmptyApexSet)
        );
        // Lower one projection to bottom: universality must fail.
        let mut broken = colim.clone();
        broken.p[1] = dist_bottom(&colim.cat, &unit_category(&base, f.ob_image(1)));
        assert!(!verify_lax_universality(&f, &broken, ConeSide::Limit, &apexes, &caps).unwrap());
    }

    #[test]
    fn lax_and_oplax_transfos_dualize_and_form_sup_lattices() {
        let base = Arc::new(rel_locale(&Lattice::chain(3)).unwrap());
        let op = Arc::new(opposite_quantaloid(&base));
        let shape = FinCat::walking_arrow();
        let f = LaxFunctor::new(shape.clone(), Arc::clone(&base), vec![2, 1], vec![1, base.id(2).elt, base.id(1).elt]).unwrap();
        let g = LaxFunctor::new(shape.clone(), Arc::clone(&base), vec![2, 2], vec![1, base.id(2).elt, base.id(2).elt]).unwrap();
        let caps = Caps::default();
        let lax = enumerate_lax_transfos(&f, &g, &caps).unwrap();
        assert!(!lax.is_empty());
        // Identity transfo on each functor is lax and oplax.
        assert!(is_lax_transfo(&f, &f, &identity_transfo(&f)));
        assert!(is_oplax_transfo(&f, &f, &identity_transfo(&f)));
        // Componentwise sups of lax transfos are lax; sup with itself
        // is itself.
        let all = transfo_sup(&f, &g, &lax);
        assert!(is_lax_transfo(&f, &g, &all));
        for theta in &lax {
            assert_eq!(transfo_sup(&f, &g, &[theta.clone(), theta.clone()]), *theta);
        }
        // Lax(F, G) = OpLax(G^op, F^op), componentwise.
        let fo = opposite_lax_functor(&f, &op);
        let go = opposite_lax_functor(&g, &op);
        let oplax_dual = enumerate_oplax_transfos(&go, &fo, &caps).unwrap();
        let mut lhs = lax.clone();
        let mut rhs = oplax_dual.clone();
        lhs.sort();
        rhs.sort();
        assert_eq!(lhs, rhs);
        // Composition is associative, spot-checked through a third
        // functor.
        let h = g.clone();
        for theta in lax.iter().take(4) {
            let psi = identity_transfo(&g);
            let chi = identity_transfo(&h);
            let left = transfo_compose(&f, &g, &h, &transfo_compose(&g, &g, &h, &chi, &psi), theta);
            let right = transfo_compose(&f, &g, &h, &chi, &transfo_compose(&f, &g, &g, &psi, theta));
            assert_eq!(left, right);
        }
    }

    #[test]
    fn walking_arrow_colimit_matches_graph_collapse() {
        // Over bool2 the lax colimit of the walking arrow with both
        // endpoints at the base point and Fa = true is the 2-chain.
        let base = Arc::new(bool2());
        let f =
            LaxFunctor::new(FinCat::walking_arrow(), Arc::clone(&base), vec![0, 0], vec![1, 1, 1])
                .unwrap();
        let colim = lax_colimit_in_dist(&f);
        let objects = TypedSet::new(vec!["s".into(), "t".into()], vec![0, 0]);
        let chain = QCategory::new(Arc::clone(&base), objects, vec![1, 0, 1, 1]).unwrap();
        assert_eq!(*colim.cat, chain);
        let _ = QFunctor::new(
            Arc::new(chain),
            Arc::clone(&colim.cat),
            vec![0, 1],
        )
        .unwrap();
    }
}
