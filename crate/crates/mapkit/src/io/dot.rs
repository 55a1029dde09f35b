//! Deterministic DOT export. Nodes are printed in canonical order with
//! 1-based labels; a semi-edge of colour `c` at vertex `v` becomes an edge
//! to an auxiliary point-shaped node `h_<v>_<c>`.

use std::fmt::Write as _;

use crate::canon::canonical_form;
use crate::system::ColoredSystem;

pub fn export_dot(sys: &ColoredSystem) -> String {
    let (form, _) = canonical_form(sys);
    let n = form.size();
    let mut out = String::from("graph {\n");
    out.push_str("  node [shape=circle];\n");
    for x in 0..n {
        let _ = writeln!(out, "  {};", x + 1);
    }
    for c in 0..3 {
        for x in 0..n {
            let y = form.apply(c, x);
            if y == x {
                let _ = writeln!(
                    out,
                    "  h_{v}_{c} [shape=point]; {v} -- h_{v}_{c} [label={c}];",
                    v = x + 1
                );
            } else if y > x {
                let _ = writeln!(out, "  {} -- {} [label={c}];", x + 1, y + 1);
            }
        }
    }
    out.push_str("}\n");
    out
}
