//! Graphviz output of Hasse diagrams.

use std::fmt::Write;

use crate::latspec::Side;
use crate::lattice::Lattice;
use crate::module::InstanceBundle;

/// The Hasse diagram of `L` or `M` as a DOT digraph. Nodes are listed by
/// name and every edge runs from the lower element of a cover to the upper
/// one, so the output depends only on the instance.
pub fn emit_dot(bundle: &InstanceBundle, side: Side) -> String {
    let lat = match side {
        Side::Lattice => bundle.module().scalars().lattice(),
        Side::Module => bundle.module().carrier(),
    };
    hasse(lat, &side.to_string())
}

fn hasse(lat: &Lattice, graph: &str) -> String {
    let mut out = format!("digraph {graph} {{\n  rankdir=BT;\n");
    for x in lat.elements() {
        writeln!(out, "  {};", quote(lat.name(x))).unwrap();
    }
    let mut edges: Vec<(&str, &str)> = lat
        .covers()
        .into_iter()
        .map(|(a, b)| (lat.name(a), lat.name(b)))
        .collect();
    edges.sort();
    for (a, b) in edges {
        writeln!(out, "  {} -> {};", quote(a), quote(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_frame, gen_zn, FrameShape};

    #[test]
    fn two_chain_has_one_edge() {
        let dot = emit_dot(&gen_frame(FrameShape::Chain(1)).unwrap(), Side::Lattice);
        assert_eq!(
            dot,
            "digraph lattice {\n  rankdir=BT;\n  \"c0\";\n  \"c1\";\n  \"c0\" -> \"c1\";\n}\n"
        );
    }

    #[test]
    fn z12_nodes_and_edges() {
        let dot = emit_dot(&gen_zn(12).unwrap(), Side::Module);
        assert_eq!(dot.matches("->").count(), 7);
        assert_eq!(
            dot.lines()
                .filter(|l| l.ends_with(';') && !l.contains("->") && l.contains('"'))
                .count(),
            6
        );
        assert!(dot.contains("\"(0)\" -> \"(4)\";"));
        assert!(dot.contains("\"(2)\" -> \"(1)\";"));
    }

    #[test]
    fn singleton_has_no_edges() {
        let l = Lattice::build(&["x"], &[]).unwrap();
        assert_eq!(
            hasse(&l, "lattice"),
            "digraph lattice {\n  rankdir=BT;\n  \"x\";\n}\n"
        );
    }
}
