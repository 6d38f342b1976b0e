use std::fmt::Write as _;

use super::universe::BuiltUniverse;
use crate::error::{Error, Result};
use crate::posets::FinPoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn hasse(name: &str, p: &FinPoset) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for (i, n) in p.names().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quote(n));
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// DOT for one object's order (Hasse diagram), or for the whole category
/// when `object` is `None`. Identity loops are drawn only on request.
pub fn export_dot(u: &BuiltUniverse, object: Option<&str>, identities: bool) -> Result<String> {
    let c = u.category();
    let Some(name) = object else {
        let mut out = String::from("digraph category {\n");
        for x in c.objects() {
            let _ = writeln!(out, "  o{x} [label={}];", quote(c.object_name(x)));
        }
        for f in c.arrow_ids() {
            if identities || !c.is_identity(f) {
                let _ = writeln!(out, "  o{} -> o{} [label={}];", c.src(f), c.tgt(f), quote(c.arrow_name(f)));
            }
        }
        out.push_str("}\n");
        return Ok(out);
    };
    let x = c.find_object(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let order = u.orders[x]
        .as_ref()
        .ok_or_else(|| Error::Precondition(format!("`{name}` carries no order to draw")))?;
    Ok(hasse(name, order))
}
