use std::fmt::Write;

use serde::Serialize;

use crate::graph::Vertex;

use super::{MdTree, ModuleKind, NodeId, Quotient};

fn set(vs: &[Vertex]) -> String {
    let items: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn quotient_labels(q: &Quotient) -> Vec<u64> {
    q.graph.labels().to_vec()
}

/// Quotient edges as `[i, j, label]` over quotient vertex indices.
fn quotient_edges(q: &Quotient) -> Vec<[u64; 3]> {
    q.graph.pairs().map(|(a, b, c)| [a as u64, b as u64, q.graph.label_of(c)]).collect()
}

#[derive(Serialize)]
struct NodeView<'a> {
    id: NodeId,
    members: &'a [Vertex],
    kind: ModuleKind,
    parent: Option<NodeId>,
    children: &'a [NodeId],
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient: Option<QuotientView>,
}

#[derive(Serialize)]
struct QuotientView {
    representatives: Vec<Vertex>,
    colors: Vec<u64>,
    edges: Vec<[u64; 3]>,
}

#[derive(Serialize)]
struct TreeView<'a> {
    n: usize,
    root: NodeId,
    nodes: Vec<NodeView<'a>>,
}

impl MdTree {
    /// One line per node, indented by depth: vertex set, kind and the colors
    /// of the quotient (original labels).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(self.root(), 0)];
        while let Some((id, depth)) = stack.pop() {
            let _ = write!(out, "{:indent$}{} {}", "", set(self.members(id)), self.kind(id), indent = 2 * depth);
            if let Some(q) = self.quotient(id) {
                let colors: Vec<String> = quotient_labels(q).iter().map(|c| c.to_string()).collect();
                let _ = write!(out, " colors={}", colors.join(","));
            }
            out.push('\n');
            for &c in self.children(id).iter().rev() {
                stack.push((c, depth + 1));
            }
        }
        out
    }

    /// Graphviz rendering of the tree; quotient edges go in node tooltips.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph md {\n  node [shape=box, fontname=\"monospace\"];\n");
        for id in self.ids() {
            let label = format!("{}\\n{}", set(self.members(id)), self.kind(id));
            let tooltip = match self.quotient(id) {
                Some(q) => {
                    let edges: Vec<String> = quotient_edges(q)
                        .iter()
                        .map(|[a, b, c]| {
                            format!("{}-{}:{}", q.representatives[*a as usize], q.representatives[*b as usize], c)
                        })
                        .collect();
                    edges.join(" ")
                }
                None => String::new(),
            };
            let _ = writeln!(out, "  n{} [label=\"{}\", tooltip=\"{}\"];", id.0, label, tooltip);
        }
        for id in self.ids() {
            for c in self.children(id) {
                let _ = writeln!(out, "  n{} -> n{};", id.0, c.0);
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes = self
            .ids()
            .map(|id| NodeView {
                id,
                members: self.members(id),
                kind: self.kind(id),
                parent: self.parent(id),
                children: self.children(id),
                quotient: self.quotient(id).map(|q| QuotientView {
                    representatives: q.representatives.clone(),
                    colors: quotient_labels(q),
                    edges: quotient_edges(q),
                }),
            })
            .collect();
        serde_json::to_value(TreeView { n: self.n, root: self.root(), nodes }).expect("tree serializes")
    }
}
