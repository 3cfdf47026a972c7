//! DOT export, including a two-colour mode that draws a graph and its
//! complement over the same vertex set (solid green edges, dashed red
//! non-edges). Handy when reasoning about a graph together with its
//! complement.

use crate::graph::SmallGraph;
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeColorMode {
    Plain,
    GreenRed,
}

pub fn emit_dot(g: &SmallGraph, mode: EdgeColorMode) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    match mode {
        EdgeColorMode::Plain => {
            for e in g.edges() {
                writeln!(out, "  {} -- {};", e.u(), e.v()).unwrap();
            }
        }
        EdgeColorMode::GreenRed => {
            for e in g.edges() {
                writeln!(out, "  {} -- {} [color=green];", e.u(), e.v()).unwrap();
            }
            for e in g.complement().edges() {
                writeln!(out, "  {} -- {} [color=red, style=dashed];", e.u(), e.v()).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn plain_k2() {
        let dot = emit_dot(&families::complete(2), EdgeColorMode::Plain);
        assert_eq!(dot, "graph {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn green_red_k2_has_no_dashed_edge() {
        let dot = emit_dot(&families::complete(2), EdgeColorMode::GreenRed);
        assert!(dot.contains("0 -- 1 [color=green];"));
        assert!(!dot.contains("dashed"));
    }

    #[test]
    fn green_red_edgeless_pair_is_all_dashed() {
        let dot = emit_dot(&families::empty(2), EdgeColorMode::GreenRed);
        assert!(!dot.contains("green"));
        assert!(dot.contains("0 -- 1 [color=red, style=dashed];"));
    }
}
