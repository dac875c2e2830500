//! Syntax tree for `.qk` documents, with source spans on every name.
//!
//! Equality of syntax trees deliberately ignores spans: two documents
//! are equal when they declare the same things, wherever the text
//! happened to sit. This is what the pretty-print round-trip property
//! compares.

/// A half-open slice of the source text, reported as 1-based line and
/// column plus a length in characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
    pub len: usize,
}

/// A node together with where it was written.
#[derive(Debug, Clone)]
pub struct Spanned<T> {
    pub node: T,
    pub span: Span,
}

impl<T> Spanned<T> {
    pub fn new(node: T, span: Span) -> Spanned<T> {
        Spanned { node, span }
    }
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl<T: Eq> Eq for Spanned<T> {}

pub type Name = Spanned<String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// A problem in the source text: parse errors, unresolved names,
/// failed validation. Never a crash — the parser and loader collect
/// these and keep going where they can.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub span: Span,
    pub message: String,
    pub hint: Option<String>,
}

impl Diagnostic {
    pub fn error(span: Span, message: impl Into<String>) -> Diagnostic {
        Diagnostic { severity: Severity::Error, span, message: message.into(), hint: None }
    }

    pub fn with_hint(mut self, hint: impl Into<String>) -> Diagnostic {
        self.hint = Some(hint.into());
        self
    }
}

/// An entire `.qk` file: an ordered list of named declarations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QkDocument {
    pub decls: Vec<Decl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Lattice(LatticeDecl),
    Quantaloid(QuantaloidDecl),
    Category(CategoryDecl),
    Functor(FunctorDecl),
    Distributor(DistributorDecl),
    Shape(ShapeDecl),
    LaxFunctor(LaxFunctorDecl),
}

impl Decl {
    pub fn name(&self) -> &Name {
        match self {
            Decl::Lattice(d) => &d.name,
            Decl::Quantaloid(d) => &d.name,
            Decl::Category(d) => &d.name,
            Decl::Functor(d) => &d.name,
            Decl::Distributor(d) => &d.name,
            Decl::Shape(d) => &d.name,
            Decl::LaxFunctor(d) => &d.name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Decl::Lattice(_) => "lattice",
            Decl::Quantaloid(_) => "quantaloid",
            Decl::Category(_) => "category",
            Decl::Functor(_) => "functor",
            Decl::Distributor(_) => "distributor",
            Decl::Shape(_) => "shape",
            Decl::LaxFunctor(_) => "laxfunctor",
        }
    }
}

/// `lattice NAME { elements: a, b; order: a <= b; }`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeDecl {
    pub name: Name,
    pub elements: Vec<Name>,
    pub order: Vec<(Name, Name)>,
}

/// `quantaloid NAME = bool2` or a full table declaration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantaloidDecl {
    pub name: Name,
    pub body: QuantaloidBody,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuantaloidBody {
    Bool2,
    RelLocale(Name),
    Tropical(Name),
    Table(QuantaloidTable),
}

/// How unwritten composition entries of a table quantaloid are filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generate {
    /// All entries must be written out.
    Table,
    /// `g ∘ f = g ∧ f`; all homs must be one shared lattice.
    Meet,
    /// `g ∘ f = min(g + f, cap)` on integer-labelled reversed chains.
    PlusCap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantaloidTable {
    pub objects: Vec<Name>,
    /// `hom X Y: LATTICE;`
    pub homs: Vec<(Name, Name, Name)>,
    pub generate: Option<Spanned<Generate>>,
    /// `compose X Y Z: { (g, f) -> h, ... };`
    pub compose: Vec<ComposeBlock>,
    /// `id X: e;`
    pub ids: Vec<(Name, Name)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposeBlock {
    pub x: Name,
    pub y: Name,
    pub z: Name,
    /// `(g, f) -> h` with `f : X -> Y`, `g : Y -> Z`, `h : X -> Z`.
    pub entries: Vec<(Name, Name, Name)>,
}

/// `category NAME over Q { objects: a:X, b:Y; hom a b = e; }`
///
/// `hom a b` is the hom-arrow `A(a, b) : t(b) -> t(a)`; its unit
/// reading is "`a` lies below `b`". Unwritten diagonal entries default
/// to the identity, off-diagonal ones to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryDecl {
    pub name: Name,
    pub base: Name,
    pub objects: Vec<(Name, Name)>,
    pub homs: Vec<(Name, Name, Name)>,
}

/// `functor NAME: A -> B { a -> b, ...; }`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorDecl {
    pub name: Name,
    pub dom: Name,
    pub cod: Name,
    pub maps: Vec<(Name, Name)>,
}

/// `distributor NAME: A -|-> B { (b, a) -> e, ...; }` — entry
/// `(b, a)` is `Φ(b, a) : t(a) -> t(b)`; unwritten entries are bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributorDecl {
    pub name: Name,
    pub dom: Name,
    pub cod: Name,
    pub entries: Vec<(Name, Name, Name)>,
}

/// `shape NAME = point | walking-arrow | parallel-pair | discrete(N)`
/// or a table of objects, generating arrows and composites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeDecl {
    pub name: Name,
    pub body: ShapeBody,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeBody {
    Point,
    WalkingArrow,
    ParallelPair,
    Discrete(Name),
    Table(ShapeTable),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeTable {
    pub objects: Vec<Name>,
    /// `arrows: f: a -> b, ...;` — non-identity generators only;
    /// identities and their composites are implicit.
    pub arrows: Vec<(Name, Name, Name)>,
    /// `compose: g.f = h, ...;`
    pub compose: Vec<(Name, Name, Name)>,
}

/// `laxfunctor NAME: SHAPE -> Q { objects: d -> X, ...; arrows: f -> e, ...; }`
///
/// Unwritten identity arrows default to the identity of the image;
/// all other arrows must be given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxFunctorDecl {
    pub name: Name,
    pub shape: Name,
    pub base: Name,
    pub objects: Vec<(Name, Name)>,
    pub arrows: Vec<(Name, Name)>,
}
