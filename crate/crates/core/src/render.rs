//! Text renderings of a labeling document: TikZ pictures for `d = 2, 3`,
//! Graphviz DOT, and CSV. All of them use caller axis order.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::document::LabelingDocument;
use crate::error::{Error, Result};
use crate::labeling::Label;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    Tikz2d,
    Tikz3d,
    Dot,
    Csv,
}

impl FromStr for RenderStyle {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "tikz2d" => Ok(RenderStyle::Tikz2d),
            "tikz3d" => Ok(RenderStyle::Tikz3d),
            "dot" => Ok(RenderStyle::Dot),
            "csv" => Ok(RenderStyle::Csv),
            other => Err(format!("unknown render style {other:?}")),
        }
    }
}

pub fn render(doc: &LabelingDocument, style: RenderStyle) -> Result<String> {
    match style {
        RenderStyle::Tikz2d => tikz(doc, 2),
        RenderStyle::Tikz3d => tikz(doc, 3),
        RenderStyle::Dot => Ok(dot(doc)),
        RenderStyle::Csv => Ok(doc.to_csv()),
    }
}

/// Vertex and edge labels in caller coordinates, canonical enumeration order.
struct Elements {
    vertices: Vec<(Vec<usize>, Option<Label>)>,
    edges: Vec<(Vec<usize>, Vec<usize>, Option<Label>)>,
}

fn elements(doc: &LabelingDocument) -> Elements {
    let perm = doc.permutation();
    let spec = doc.spec();
    let vertices = spec
        .vertices()
        .enumerate()
        .map(|(i, x)| (perm.to_caller(&x), doc.vertex_labels().map(|l| l[i])))
        .collect();
    let edges = spec
        .enumerate_edges()
        .enumerate()
        .map(|(i, e)| {
            (
                perm.to_caller(&e.base.0),
                perm.to_caller(&e.tip().0),
                doc.edge_labels().map(|l| l[i]),
            )
        })
        .collect();
    Elements { vertices, edges }
}

fn node_name(x: &[usize]) -> String {
    let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
    format!("v-{}", parts.join("-"))
}

fn hundredths(v: i64) -> String {
    let sign = if v < 0 { "-" } else { "" };
    let v = v.abs();
    if v % 100 == 0 {
        format!("{sign}{}", v / 100)
    } else {
        format!("{sign}{}.{:02}", v / 100, v % 100)
    }
}

// Figure layout: first axis runs left to right, the last axis top to bottom,
// and in 3D the middle axis recedes obliquely.
fn position(dims: &[usize], x: &[usize]) -> (i64, i64) {
    let c = |i: usize| x[i] as i64 - 1;
    match dims.len() {
        2 => (300 * c(0), 300 * (dims[1] as i64 - x[1] as i64)),
        _ => (
            300 * c(0) + 190 * c(1),
            300 * (dims[2] as i64 - x[2] as i64) + 115 * c(1),
        ),
    }
}

fn tikz(doc: &LabelingDocument, d: usize) -> Result<String> {
    let found = doc.dims().len();
    if found != d {
        return Err(Error::UnsupportedDimension {
            style: if d == 2 { "tikz2d" } else { "tikz3d" },
            required: d,
            found,
        });
    }
    let els = elements(doc);
    let mut out = String::new();
    let (scale, size) = if d == 2 { (".7", ".7cm") } else { ("1", ".6cm") };
    writeln!(
        out,
        "\\begin{{tikzpicture}}[scale={scale},every node/.style={{draw,shape=circle,outer sep=2pt,inner sep=1pt,minimum size={size}}}]"
    )
    .unwrap();
    for (x, label) in &els.vertices {
        let (px, py) = position(doc.dims(), x);
        let (style, text) = match label {
            Some(l) => (String::new(), l.to_string()),
            None => ("[fill=black,minimum size=.2cm]".to_string(), String::new()),
        };
        writeln!(
            out,
            "  \\node{style} ({}) at ({},{}) {{{text}}};",
            node_name(x),
            hundredths(px),
            hundredths(py)
        )
        .unwrap();
    }
    for (a, b, label) in &els.edges {
        match label {
            Some(l) => writeln!(
                out,
                "  \\draw[thick] ({}) to node[draw=none,midway,fill=white,inner sep=0pt] {{{l}}} ({});",
                node_name(a),
                node_name(b)
            ),
            None => writeln!(out, "  \\draw[thick] ({}) -- ({});", node_name(a), node_name(b)),
        }
        .unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    Ok(out)
}

fn dot_id(x: &[usize]) -> String {
    let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
    format!("\"{}\"", parts.join(","))
}

fn dot(doc: &LabelingDocument) -> String {
    let els = elements(doc);
    let mut out = String::from("graph grid {\n  node [shape=circle];\n");
    for (x, label) in &els.vertices {
        let text = label.map(|l| l.to_string()).unwrap_or_default();
        writeln!(out, "  {} [label=\"{text}\"];", dot_id(x)).unwrap();
    }
    for (a, b, label) in &els.edges {
        match label {
            Some(l) => writeln!(out, "  {} -- {} [label=\"{l}\"];", dot_id(a), dot_id(b)),
            None => writeln!(out, "  {} -- {};", dot_id(a), dot_id(b)),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}
