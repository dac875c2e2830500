//! Canonical printing of `.qk` documents.
//!
//! `pretty` lays a parsed document out in one fixed style; feeding the
//! result back through the parser yields the same document again (up
//! to source positions), so the printer can be used to normalize
//! hand-written files.

use crate::ast::*;
use std::fmt::Write as _;

pub fn pretty(doc: &QkDocument) -> String {
    let mut out = String::new();
    for (i, decl) in doc.decls.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match decl {
            Decl::Lattice(d) => lattice(&mut out, d),
            Decl::Quantaloid(d) => quantaloid(&mut out, d),
            Decl::Category(d) => category(&mut out, d),
            Decl::Functor(d) => functor(&mut out, d),
            Decl::Distributor(d) => distributor(&mut out, d),
            Decl::Shape(d) => shape(&mut out, d),
            Decl::LaxFunctor(d) => laxfunctor(&mut out, d),
        }
    }
    out
}

fn comma_list(names: &[Name]) -> String {
    names.iter().map(|n| n.node.as_str()).collect::<Vec<_>>().join(", ")
}

fn lattice(out: &mut String, d: &LatticeDecl) {
    let _ = writeln!(out, "lattice {} {{", d.name.node);
    if !d.elements.is_empty() {
        let _ = writeln!(out, "  elements: {};", comma_list(&d.elements));
    }
    if !d.order.is_empty() {
        let pairs = d
            .order
            .iter()
            .map(|(a, b)| format!("{} <= {}", a.node, b.node))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "  order: {pairs};");
    }
    out.push_str("}\n");
}

fn quantaloid(out: &mut String, d: &QuantaloidDecl) {
    match &d.body {
        QuantaloidBody::Bool2 => {
            let _ = writeln!(out, "quantaloid {} = bool2", d.name.node);
        }
        QuantaloidBody::RelLocale(l) => {
            let _ = writeln!(out, "quantaloid {} = rel_locale({})", d.name.node, l.node);
        }
        QuantaloidBody::Tropical(n) => {
            let _ = writeln!(out, "quantaloid {} = tropical({})", d.name.node, n.node);
        }
        QuantaloidBody::Table(t) => {
            let _ = writeln!(out, "quantaloid {} {{", d.name.node);
            if !t.objects.is_empty() {
                let _ = writeln!(out, "  objects: {};", comma_list(&t.objects));
            }
            for (x, y, l) in &t.homs {
                let _ = writeln!(out, "  hom {} {}: {};", x.node, y.node, l.node);
            }
            if let Some(g) = &t.generate {
                let word = match g.node {
                    Generate::Table => "table",
                    Generate::Meet => "meet",
                    Generate::PlusCap => "plus-cap",
                };
                let _ = writeln!(out, "  generate: {word};");
            }
            for block in &t.compose {
                let _ = writeln!(
                    out,
                    "  compose {} {} {}: {{",
                    block.x.node, block.y.node, block.z.node
                );
                for (g, f, h) in &block.entries {
                    let _ = writeln!(out, "    ({}, {}) -> {};", g.node, f.node, h.node);
                }
                out.push_str("  };\n");
            }
            for (x, e) in &t.ids {
                let _ = writeln!(out, "  id {}: {};", x.node, e.node);
            }
            out.push_str("}\n");
        }
    }
}

fn category(out: &mut String, d: &CategoryDecl) {
    let _ = writeln!(out, "category {} over {} {{", d.name.node, d.base.node);
    if !d.objects.is_empty() {
        let typed = d
            .objects
            .iter()
            .map(|(o, t)| format!("{}:{}", o.node, t.node))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "  objects: {typed};");
    }
    for (a, b, e) in &d.homs {
        let _ = writeln!(out, "  hom {} {} = {};", a.node, b.node, e.node);
    }
    out.push_str("}\n");
}

fn functor(out: &mut String, d: &FunctorDecl) {
    let _ = writeln!(out, "functor {}: {} -> {} {{", d.name.node, d.dom.node, d.cod.node);
    for (a, b) in &d.maps {
        let _ = writeln!(out, "  {} -> {};", a.node, b.node);
    }
    out.push_str("}\n");
}

fn distributor(out: &mut String, d: &DistributorDecl) {
    let _ = writeln!(out, "distributor {}: {} -|-> {} {{", d.name.node, d.dom.node, d.cod.node);
    for (b, a, e) in &d.entries {
        let _ = writeln!(out, "  ({}, {}) -> {};", b.node, a.node, e.node);
    }
    out.push_str("}\n");
}

fn shape(out: &mut String, d: &ShapeDecl) {
    match &d.body {
        ShapeBody::Point => {
            let _ = writeln!(out, "shape {} = point", d.name.node);
        }
        ShapeBody::WalkingArrow => {
            let _ = writeln!(out, "shape {} = walking-arrow", d.name.node);
        }
        ShapeBody::ParallelPair => {
            let _ = writeln!(out, "shape {} = parallel-pair", d.name.node);
        }
        ShapeBody::Discrete(n) => {
            let _ = writeln!(out, "shape {} = discrete({})", d.name.node, n.node);
        }
        ShapeBody::Table(t) => {
            let _ = writeln!(out, "shape {} {{", d.name.node);
            if !t.objects.is_empty() {
                let _ = writeln!(out, "  objects: {};", comma_list(&t.objects));
            }
            if !t.arrows.is_empty() {
                let arrows = t
                    .arrows
                    .iter()
                    .map(|(f, s, tg)| format!("{}: {} -> {}", f.node, s.node, tg.node))
                    .collect::<Vec<_>>()
                    .join(", ");
                let _ = writeln!(out, "  arrows: {arrows};");
            }
            if !t.compose.is_empty() {
                let comp = t
                    .compose
                    .iter()
                    .map(|(g, f, h)| format!("{}.{} = {}", g.node, f.node, h.node))
                    .collect::<Vec<_>>()
                    .join(", ");
                let _ = writeln!(out, "  compose: {comp};");
            }
            out.push_str("}\n");
        }
    }
}

fn laxfunctor(out: &mut String, d: &LaxFunctorDecl) {
    let _ = writeln!(
        out,
        "laxfunctor {}: {} -> {} {{",
        d.name.node, d.shape.node, d.base.node
    );
    if !d.objects.is_empty() {
        let objs = d
            .objects
            .iter()
            .map(|(a, b)| format!("{} -> {}", a.node, b.node))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "  objects: {objs};");
    }
    if !d.arrows.is_empty() {
        let arrs = d
            .arrows
            .iter()
            .map(|(a, b)| format!("{} -> {}", a.node, b.node))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "  arrows: {arrs};");
    }
    out.push_str("}\n");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn round_trip(src: &str) {
        let (doc, diags) = parse(src);
        assert!(diags.is_empty(), "sample does not parse cleanly: {diags:?}");
        let printed = pretty(&doc);
        let (again, diags2) = parse(&printed);
        assert!(diags2.is_empty(), "printed text does not parse: {diags2:?}\n{printed}");
        assert_eq!(doc, again, "round trip changed the document:\n{printed}");
        assert_eq!(printed, pretty(&again), "printing is not idempotent");
    }

    #[test]
    fn round_trips_every_declaration_kind() {
        round_trip("
            lattice two { elements: o, i; order: o <= i; }
            quantaloid Q = bool2
            quantaloid R = rel_locale(two)
            quantaloid T = tropical(3)
            quantaloid H {
              objects: W, V;
              hom W W: two; hom W V: two; hom V W: two; hom V V: two;
              generate: meet;
              compose W W W: { (i, i) -> i; };
              id W: i; id V: i;
            }
            category A over Q { objects: x:*, y:*; hom x y = 1; }
            functor f: A -> A { x -> x; y -> y; }
            distributor phi: A -|-> A { (x, y) -> 1; (y, y) -> 1; }
            shape P = point
            shape W2 = walking-arrow
            shape PP = parallel-pair
            shape D = discrete(2)
            shape S { objects: u, v, w; arrows: a: u -> v, b: v -> w, c: u -> w; compose: b.a = c; }
            laxfunctor F: W2 -> T { objects: s -> *, t -> *; arrows: a -> 2; }
        ");
    }

    #[test]
    fn star_typed_objects_survive() {
        round_trip("category A over Q { objects: p:*; }");
    }

    #[test]
    fn comments_are_dropped_but_content_is_kept() {
        let (doc, _) = parse("# heading\nquantaloid Q = bool2 # trailing\n");
        let printed = pretty(&doc);
        assert_eq!(printed, "quantaloid Q = bool2\n");
    }
}
