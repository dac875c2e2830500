//! Recursive-descent parser for `.qk` documents.
//!
//! Parsing is total: any text yields a document plus a (possibly
//! empty) list of diagnostics, and a document is usable only when no
//! error-severity diagnostic was produced. On a syntax error the
//! parser records the problem and resynchronizes — to the next `;`
//! inside a block, or to the next top-level keyword outside one — so
//! a single typo does not drown the rest of the file.
//!
//! There are no reserved words: `objects`, `hom` and friends are
//! keywords only in the positions where the grammar expects them.

use crate::ast::*;
use crate::lexer::{lex, Tok, Token};

pub fn parse(src: &str) -> (QkDocument, Vec<Diagnostic>) {
    let mut p = Parser { toks: lex(src), pos: 0, diags: Vec::new() };
    let doc = p.document();
    (doc, p.diags)
}

const DECL_KEYWORDS: &[&str] =
    &["lattice", "quantaloid", "category", "functor", "distributor", "shape", "laxfunctor"];

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    diags: Vec<Diagnostic>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> Span {
        self.peek().map(|t| t.span).unwrap_or_else(|| {
            self.toks.last().map(|t| t.span).unwrap_or_default()
        })
    }

    fn error_here(&mut self, msg: impl Into<String>) {
        let span = self.here();
        self.diags.push(Diagnostic::error(span, msg));
    }

    fn at(&self, tok: &Tok) -> bool {
        self.peek().map(|t| &t.tok == tok).unwrap_or(false)
    }

    fn at_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Name(n), .. }) if n == kw)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.at(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> bool {
        if self.eat(&tok) {
            true
        } else {
            let found = self.peek().map(|t| t.tok.show()).unwrap_or_else(|| "end of file".into());
            self.error_here(format!("expected {}, found {}", tok.show(), found));
            false
        }
    }

    fn expect_kw(&mut self, kw: &str) -> bool {
        if self.at_kw(kw) {
            self.pos += 1;
            true
        } else {
            let found = self.peek().map(|t| t.tok.show()).unwrap_or_else(|| "end of file".into());
            self.error_here(format!("expected `{kw}`, found {found}"));
            false
        }
    }

    fn name(&mut self, what: &str) -> Option<Name> {
        match self.peek() {
            Some(Token { tok: Tok::Name(n), span }) => {
                let out = Spanned::new(n.clone(), *span);
                self.pos += 1;
                Some(out)
            }
            other => {
                let found = other.map(|t| t.tok.show()).unwrap_or_else(|| "end of file".into());
                self.error_here(format!("expected {what}, found {found}"));
                None
            }
        }
    }

    /// A name, or `*` standing for the single object of a one-object
    /// base.
    fn name_or_star(&mut self, what: &str) -> Option<Name> {
        if let Some(Token { tok: Tok::Star, span }) = self.peek() {
            let out = Spanned::new("*".to_string(), *span);
            self.pos += 1;
            return Some(out);
        }
        self.name(what)
    }

    /// Skip to the next top-level declaration keyword, balancing
    /// braces so that keywords used inside blocks do not end the skip.
    fn sync_decl(&mut self) {
        let mut depth = 0usize;
        while let Some(t) = self.peek() {
            match &t.tok {
                Tok::LBrace => depth += 1,
                Tok::RBrace => depth = depth.saturating_sub(1),
                Tok::Name(n) if depth == 0 && DECL_KEYWORDS.contains(&n.as_str()) => return,
                _ => {}
            }
            self.pos += 1;
        }
    }

    /// Skip to just past the next `;`, or stop before `}`/end.
    fn sync_item(&mut self) {
        while let Some(t) = self.peek() {
            match t.tok {
                Tok::Semi => {
                    self.pos += 1;
                    return;
                }
                Tok::RBrace => return,
                _ => self.pos += 1,
            }
        }
    }

    fn document(&mut self) -> QkDocument {
        let mut decls = Vec::new();
        while let Some(t) = self.peek() {
            let kw = match &t.tok {
                Tok::Name(n) if DECL_KEYWORDS.contains(&n.as_str()) => n.clone(),
                Tok::Bad(c) => {
                    let c = *c;
                    self.error_here(format!("unexpected character {c:?}"));
                    self.pos += 1;
                    continue;
                }
                _ => {
                    self.error_here(format!(
                        "expected a declaration ({}), found {}",
                        DECL_KEYWORDS.join(", "),
                        t.tok.show()
                    ));
                    self.pos += 1;
                    self.sync_decl();
                    continue;
                }
            };
            self.pos += 1;
            let decl = match kw.as_str() {
                "lattice" => self.lattice_decl().map(Decl::Lattice),
                "quantaloid" => self.quantaloid_decl().map(Decl::Quantaloid),
                "category" => self.category_decl().map(Decl::Category),
                "functor" => self.functor_decl().map(Decl::Functor),
                "distributor" => self.distributor_decl().map(Decl::Distributor),
                "shape" => self.shape_decl().map(Decl::Shape),
                "laxfunctor" => self.laxfunctor_decl().map(Decl::LaxFunctor),
                _ => unreachable!(),
            };
            match decl {
                Some(d) => decls.push(d),
                None => self.sync_decl(),
            }
        }
        QkDocument { decls }
    }

    /// `a, b, c` — at least one entry.
    fn name_list(&mut self, what: &str) -> Option<Vec<Name>> {
        let mut out = vec![self.name(what)?];
        while self.eat(&Tok::Comma) {
            out.push(self.name(what)?);
        }
        Some(out)
    }

    fn lattice_decl(&mut self) -> Option<LatticeDecl> {
        let name = self.name("a lattice name")?;
        self.expect(Tok::LBrace);
        let mut elements = Vec::new();
        let mut order = Vec::new();
        while !self.at(&Tok::RBrace) && self.peek().is_some() {
            if self.at_kw("elements") {
                self.pos += 1;
                if self.expect(Tok::Colon) {
                    match self.name_list("an element name") {
                        Some(es) => elements.extend(es),
                        None => {
                            self.sync_item();
                            continue;
                        }
                    }
                }
                self.expect(Tok::Semi);
            } else if self.at_kw("order") {
                self.pos += 1;
                if !self.expect(Tok::Colon) {
                    self.sync_item();
                    continue;
                }
                loop {
                    let Some(a) = self.name("an element name") else {
                        self.sync_item();
                        break;
                    };
                    if !self.expect(Tok::Leq) {
                        self.sync_item();
                        break;
                    }
                    let Some(b) = self.name("an element name") else {
                        self.sync_item();
                        break;
                    };
                    order.push((a, b));
                    if !self.eat(&Tok::Comma) {
                        self.expect(Tok::Semi);
                        break;
                    }
                }
            } else {
                self.error_here("expected `elements` or `order`");
                self.sync_item();
            }
        }
        self.expect(Tok::RBrace);
        Some(LatticeDecl { name, elements, order })
    }

    fn quantaloid_decl(&mut self) -> Option<QuantaloidDecl> {
        let name = self.name("a quantaloid name")?;
        if self.eat(&Tok::Eq) {
            let which = self.name("a builtin (`bool2`, `rel_locale`, `tropical`)")?;
            let body = match which.node.as_str() {
                "bool2" => QuantaloidBody::Bool2,
                "rel_locale" => {
                    self.expect(Tok::LParen);
                    let l = self.name("a lattice name")?;
                    self.expect(Tok::RParen);
                    QuantaloidBody::RelLocale(l)
                }
                "tropical" => {
                    self.expect(Tok::LParen);
                    let n = self.name("a cost ceiling")?;
                    self.expect(Tok::RParen);
                    QuantaloidBody::Tropical(n)
                }
                other => {
                    self.diags.push(Diagnostic::error(
                        which.span,
                        format!("unknown builtin quantaloid `{other}`"),
                    ).with_hint("available: bool2, rel_locale(LATTICE), tropical(N)"));
                    return None;
                }
            };
            return Some(QuantaloidDecl { name, body });
        }
        self.expect(Tok::LBrace);
        let mut table = QuantaloidTable {
            objects: Vec::new(),
            homs: Vec::new(),
            generate: None,
            compose: Vec::new(),
            ids: Vec::new(),
        };
        while !self.at(&Tok::RBrace) && self.peek().is_some() {
            if self.at_kw("objects") {
                self.pos += 1;
                if self.expect(Tok::Colon) {
                    match self.name_list("an object name") {
                        Some(os) => table.objects.extend(os),
                        None => {
                            self.sync_item();
                            continue;
                        }
                    }
                }
                self.expect(Tok::Semi);
            } else if self.at_kw("hom") {
                self.pos += 1;
                let item = (|| {
                    let x = self.name_or_star("a source object")?;
                    let y = self.name_or_star("a target object")?;
                    self.expect(Tok::Colon);
                    let l = self.name("a lattice name")?;
                    Some((x, y, l))
                })();
                match item {
                    Some(h) => {
                        table.homs.push(h);
                        self.expect(Tok::Semi);
                    }
                    None => self.sync_item(),
                }
            } else if self.at_kw("generate") {
                self.pos += 1;
                if !self.expect(Tok::Colon) {
                    self.sync_item();
                    continue;
                }
                let Some(g) = self.name("`meet`, `plus-cap` or `table`") else {
                    self.sync_item();
                    continue;
                };
                let which = match g.node.as_str() {
                    "meet" => Some(Generate::Meet),
                    "plus-cap" => Some(Generate::PlusCap),
                    "table" => Some(Generate::Table),
                    other => {
                        self.diags.push(Diagnostic::error(
                            g.span,
                            format!("unknown generate mode `{other}`"),
                        ).with_hint("available: meet, plus-cap, table"));
                        None
                    }
                };
                if let Some(w) = which {
                    table.generate = Some(Spanned::new(w, g.span));
                }
                self.expect(Tok::Semi);
            } else if self.at_kw("compose") {
                self.pos += 1;
                let header = (|| {
                    let x = self.name_or_star("a source object")?;
                    let y = self.name_or_star("a middle object")?;
                    let z = self.name_or_star("a target object")?;
                    self.expect(Tok::Colon);
                    Some((x, y, z))
                })();
                let Some((x, y, z)) = header else {
                    self.sync_item();
                    continue;
                };
                self.expect(Tok::LBrace);
                let mut entries = Vec::new();
                while !self.at(&Tok::RBrace) && self.peek().is_some() {
                    if self.eat(&Tok::Comma) || self.eat(&Tok::Semi) {
                        continue;
                    }
                    let entry = (|| {
                        self.expect(Tok::LParen);
                        let g = self.name("an arrow element")?;
                        self.expect(Tok::Comma);
                        let f = self.name("an arrow element")?;
                        self.expect(Tok::RParen);
                        self.expect(Tok::Arrow);
                        let h = self.name("an arrow element")?;
                        Some((g, f, h))
                    })();
                    match entry {
                        Some(e) => entries.push(e),
                        None => self.sync_item(),
                    }
                }
                self.expect(Tok::RBrace);
                self.eat(&Tok::Semi);
                table.compose.push(ComposeBlock { x, y, z, entries });
            } else if self.at_kw("id") {
                self.pos += 1;
                let item = (|| {
                    let x = self.name_or_star("an object name")?;
                    self.expect(Tok::Colon);
                    let e = self.name("an element name")?;
                    Some((x, e))
                })();
                match item {
                    Some(i) => {
                        table.ids.push(i);
                        self.expect(Tok::Semi);
                    }
                    None => self.sync_item(),
                }
            } else {
                self.error_here("expected `objects`, `hom`, `generate`, `compose` or `id`");
                self.sync_item();
            }
        }
        self.expect(Tok::RBrace);
        Some(QuantaloidDecl { name, body: QuantaloidBody::Table(table) })
    }

    fn category_decl(&mut self) -> Option<CategoryDecl> {
        let name = self.name("a category name")?;
        self.expect_kw("over");
        let base = self.name("a quantaloid name")?;
        self.expect(Tok::LBrace);
        let mut objects = Vec::new();
        let mut homs = Vec::new();
        while !self.at(&Tok::RBrace) && self.peek().is_some() {
            if self.at_kw("objects") {
                self.pos += 1;
                if !self.expect(Tok::Colon) {
                    self.sync_item();
                    continue;
                }
                loop {
                    let item = (|| {
                        let o = self.name("an object name")?;
                        self.expect(Tok::Colon);
                        let t = self.name_or_star("a base object")?;
                        Some((o, t))
                    })();
                    match item {
                        Some(ot) => objects.push(ot),
                        None => {
                            self.sync_item();
                            break;
                        }
                    }
                    if !self.eat(&Tok::Comma) {
                        self.expect(Tok::Semi);
                        break;
                    }
                }
            } else if self.at_kw("hom") {
                self.pos += 1;
                let item = (|| {
                    let a = self.name("an object name")?;
                    let b = self.name("an object name")?;
                    self.expect(Tok::Eq);
                    let e = self.name("an element name")?;
                    Some((a, b, e))
                })();
                match item {
                    Some(h) => {
                        homs.push(h);
                        self.expect(Tok::Semi);
                    }
                    None => self.sync_item(),
                }
            } else {
                self.error_here("expected `objects` or `hom`");
                self.sync_item();
            }
        }
        self.expect(Tok::RBrace);
        Some(CategoryDecl { name, base, objects, homs })
    }

    /// `a -> b` pairs separated by commas or semicolons.
    fn mapping_block(&mut self, what: &str) -> Vec<(Name, Name)> {
        let mut maps = Vec::new();
        self.expect(Tok::LBrace);
        while !self.at(&Tok::RBrace) && self.peek().is_some() {
            if self.eat(&Tok::Comma) || self.eat(&Tok::Semi) {
                continue;
            }
            let item = (|| {
                let a = self.name(what)?;
                self.expect(Tok::Arrow);
                let b = self.name_or_star(what)?;
                Some((a, b))
            })();
            match item {
                Some(m) => maps.push(m),
                None => self.sync_item(),
            }
        }
        self.expect(Tok::RBrace);
        maps
    }

    fn functor_decl(&mut self) -> Option<FunctorDecl> {
        let name = self.name("a functor name")?;
        self.expect(Tok::Colon);
        let dom = self.name("a category name")?;
        self.expect(Tok::Arrow);
        let cod = self.name("a category name")?;
        let maps = self.mapping_block("an object name");
        Some(FunctorDecl { name, dom, cod, maps })
    }

    fn distributor_decl(&mut self) -> Option<DistributorDecl> {
        let name = self.name("a distributor name")?;
        self.expect(Tok::Colon);
        let dom = self.name("a category name")?;
        self.expect(Tok::ProArrow);
        let cod = self.name("a category name")?;
        self.expect(Tok::LBrace);
        let mut entries = Vec::new();
        while !self.at(&Tok::RBrace) && self.peek().is_some() {
            if self.eat(&Tok::Comma) || self.eat(&Tok::Semi) {
                continue;
            }
            let entry = (|| {
                self.expect(Tok::LParen);
                let b = self.name("a codomain object")?;
                self.expect(Tok::Comma);
                let a = self.name("a domain object")?;
                self.expect(Tok::RParen);
                self.expect(Tok::Arrow);
                let e = self.name("an element name")?;
                Some((b, a, e))
            })();
            match entry {
                Some(e) => entries.push(e),
                None => self.sync_item(),
            }
        }
        self.expect(Tok::RBrace);
        Some(DistributorDecl { name, dom, cod, entries })
    }

    fn shape_decl(&mut self) -> Option<ShapeDecl> {
        let name = self.name("a shape name")?;
        if self.eat(&Tok::Eq) {
            let which = self.name("a builtin shape")?;
            let body = match which.node.as_str() {
                "point" => ShapeBody::Point,
                "walking-arrow" => ShapeBody::WalkingArrow,
                "parallel-pair" => ShapeBody::ParallelPair,
                "discrete" => {
                    self.expect(Tok::LParen);
                    let n = self.name("an object count")?;
                    self.expect(Tok::RParen);
                    ShapeBody::Discrete(n)
                }
                other => {
                    self.diags.push(Diagnostic::error(
                        which.span,
                        format!("unknown builtin shape `{other}`"),
                    ).with_hint("available: point, walking-arrow, parallel-pair, discrete(N)"));
                    return None;
                }
            };
            return Some(ShapeDecl { name, body });
        }
        self.expect(Tok::LBrace);
        let mut table =
            ShapeTable { objects: Vec::new(), arrows: Vec::new(), compose: Vec::new() };
        while !self.at(&Tok::RBrace) && self.peek().is_some() {
            if self.at_kw("objects") {
                self.pos += 1;
                if self.expect(Tok::Colon) {
                    match self.name_list("an object name") {
                        Some(os) => table.objects.extend(os),
                        None => {
                            self.sync_item();
                            continue;
                        }
                    }
                }
                self.expect(Tok::Semi);
            } else if self.at_kw("arrows") {
                self.pos += 1;
                if !self.expect(Tok::Colon) {
                    self.sync_item();
                    continue;
                }
                loop {
                    let item = (|| {
                        let f = self.name("an arrow name")?;
                        self.expect(Tok::Colon);
                        let s = self.name("an object name")?;
                        self.expect(Tok::Arrow);
                        let t = self.name("an object name")?;
                        Some((f, s, t))
                    })();
                    match item {
                        Some(a) => table.arrows.push(a),
                        None => {
                            self.sync_item();
                            break;
                        }
                    }
                    if !self.eat(&Tok::Comma) {
                        self.expect(Tok::Semi);
                        break;
                    }
                }
            } else if self.at_kw("compose") {
                self.pos += 1;
                if !self.expect(Tok::Colon) {
                    self.sync_item();
                    continue;
                }
                loop {
                    let item = (|| {
                        let g = self.name("an arrow name")?;
                        self.expect(Tok::Dot);
                        let f = self.name("an arrow name")?;
                        self.expect(Tok::Eq);
                        let h = self.name("an arrow name")?;
                        Some((g, f, h))
                    })();
                    match item {
                        Some(c) => table.compose.push(c),
                        None => {
                            self.sync_item();
                            break;
                        }
                    }
                    if !self.eat(&Tok::Comma) {
                        self.expect(Tok::Semi);
                        break;
                    }
                }
            } else {
                self.error_here("expected `objects`, `arrows` or `compose`");
                self.sync_item();
            }
        }
        self.expect(Tok::RBrace);
        Some(ShapeDecl { name, body: ShapeBody::Table(table) })
    }

    fn laxfunctor_decl(&mut self) -> Option<LaxFunctorDecl> {
        let name = self.name("a lax functor name")?;
        self.expect(Tok::Colon);
        let shape = self.name("a shape name")?;
        self.expect(Tok::Arrow);
        let base = self.name("a quantaloid name")?;
        self.expect(Tok::LBrace);
        let mut objects = Vec::new();
        let mut arrows = Vec::new();
        while !self.at(&Tok::RBrace) && self.peek().is_some() {
            if self.at_kw("objects") {
                self.pos += 1;
                if !self.expect(Tok::Colon) {
                    self.sync_item();
                    continue;
                }
                loop {
                    let item = (|| {
                        let d = self.name("a shape object")?;
                        self.expect(Tok::Arrow);
                        let x = self.name_or_star("a base object")?;
                        Some((d, x))
                    })();
                    match item {
                        Some(m) => objects.push(m),
                        None => {
                            self.sync_item();
                            break;
                        }
                    }
                    if !self.eat(&Tok::Comma) {
                        self.expect(Tok::Semi);
                        break;
                    }
                }
            } else if self.at_kw("arrows") {
                self.pos += 1;
                if !self.expect(Tok::Colon) {
                    self.sync_item();
                    continue;
                }
                loop {
                    let item = (|| {
                        let f = self.name("a shape arrow")?;
                        self.expect(Tok::Arrow);
                        let e = self.name("an element name")?;
                        Some((f, e))
                    })();
                    match item {
                        Some(m) => arrows.push(m),
                        None => {
                            self.sync_item();
                            break;
                        }
                    }
                    if !self.eat(&Tok::Comma) {
                        self.expect(Tok::Semi);
                        break;
                    }
                }
            } else {
                self.error_here("expected `objects` or `arrows`");
                self.sync_item();
            }
        }
        self.expect(Tok::RBrace);
        Some(LaxFunctorDecl { name, shape, base, objects, arrows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(src: &str) -> QkDocument {
        let (doc, diags) = parse(src);
        assert!(diags.is_empty(), "unexpected diagnostics: {diags:?}");
        doc
    }

    #[test]
    fn parses_the_sketch_grammar() {
        let doc = ok("
            lattice two { elements: o, i; order: o <= i; }
            quantaloid Q = bool2
            quantaloid R = rel_locale(two)
            quantaloid T = tropical(3)
            category A over Q { objects: x:*, y:*; hom x y = 1; }
            functor f: A -> A { x -> x, y -> y; }
            distributor phi: A -|-> A { (x, y) -> 1; }
            shape W = walking-arrow
            laxfunctor F: W -> T { objects: s -> *, t -> *; arrows: a -> 2; }
        ");
        assert_eq!(doc.decls.len(), 9);
        assert_eq!(doc.decls[0].kind(), "lattice");
        assert_eq!(doc.decls[8].kind(), "laxfunctor");
    }

    #[test]
    fn longhand_quantaloid_with_generate() {
        let doc = ok("
            lattice two { elements: o, i; order: o <= i; }
            quantaloid H {
              objects: W;
              hom W W: two;
              generate: meet;
              compose W W W: { (i, i) -> i; };
              id W: i;
            }
        ");
        let Decl::Quantaloid(q) = &doc.decls[1] else { panic!("not a quantaloid") };
        let QuantaloidBody::Table(t) = &q.body else { panic!("not a table") };
        assert_eq!(t.generate.as_ref().unwrap().node, Generate::Meet);
        assert_eq!(t.compose[0].entries.len(), 1);
    }

    #[test]
    fn bad_input_yields_spanned_diagnostics_not_panics() {
        let (_, diags) = parse("category A over { }");
        assert!(!diags.is_empty());
        let (_, diags) = parse("lattice L { elements: }");
        assert!(!diags.is_empty());
        let (_, diags) = parse("@@@@");
        assert!(!diags.is_empty());
        assert!(diags[0].span.line == 1 && diags[0].span.col == 1);
    }

    #[test]
    fn recovery_keeps_later_declarations() {
        let (doc, diags) = parse("
            functor : A -> B { }
            category B over Q { objects: u:*; }
        ");
        assert!(!diags.is_empty());
        assert_eq!(doc.decls.len(), 1);
        assert_eq!(doc.decls[0].name().node, "B");
    }
}
