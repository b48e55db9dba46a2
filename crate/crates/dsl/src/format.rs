use std::fmt::Write;

use crate::ast::*;

fn join(names: &[Name]) -> String {
    names.iter().map(|n| n.text.as_str()).collect::<Vec<_>>().join(", ")
}

fn block(out: &mut String, header: String, bindings: &[Binding]) {
    if bindings.is_empty() {
        let _ = writeln!(out, "{header} {{}}");
        return;
    }
    let _ = writeln!(out, "{header} {{");
    for b in bindings {
        let _ = writeln!(out, "  {} -> {};", b.source.text, b.image.text);
    }
    out.push_str("}\n");
}

/// Canonical text: one declaration per block, two-space indentation, one
/// item per line, blank lines between declarations. Item order is kept.
pub fn format_spec(doc: &SpecDocument) -> String {
    let mut out = String::new();
    for (i, decl) in doc.decls.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match decl {
            Decl::Category(c) => {
                if c.items.is_empty() {
                    let _ = writeln!(out, "category {} {{}}", c.name.text);
                    continue;
                }
                let _ = writeln!(out, "category {} {{", c.name.text);
                for item in &c.items {
                    let _ = match item {
                        CategoryItem::Objects { names } => writeln!(out, "  object {};", join(names)),
                        CategoryItem::Arrow { name, dom, cod } => {
                            writeln!(out, "  arrow {} : {} -> {};", name.text, dom.text, cod.text)
                        }
                        CategoryItem::Compose { g, f, h } => {
                            writeln!(out, "  compose {} . {} = {};", g.text, f.text, h.text)
                        }
                    };
                }
                out.push_str("}\n");
            }
            Decl::Finset(f) => {
                if f.elements.is_empty() {
                    let _ = writeln!(out, "finset {} = {{}}", f.name.text);
                } else {
                    let _ = writeln!(out, "finset {} = {{ {} }}", f.name.text, join(&f.elements));
                }
            }
            Decl::Map(m) => block(
                &mut out,
                format!("map {} : {} -> {}", m.name.text, m.dom.text, m.cod.text),
                &m.entries,
            ),
            Decl::Diagram(d) => block(
                &mut out,
                format!("diagram {} : {} -> {}", d.name.text, d.shape.text, d.target.text),
                &d.bindings,
            ),
            Decl::Functor(f) => block(
                &mut out,
                format!("functor {} : {} -> {}", f.name.text, f.source.text, f.target.text),
                &f.bindings,
            ),
            Decl::Nattrans(t) => block(
                &mut out,
                format!("nattrans {} : {} => {}", t.name.text, t.from.text, t.to.text),
                &t.components,
            ),
        }
    }
    out
}
