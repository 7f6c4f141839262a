use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::gyt::{SharpElement, SharpJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    E,
    F,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphArc {
    pub from: usize,
    pub i: usize,
    pub dir: Direction,
    pub to: usize,
}

/// The ball of radius `r` around a root of the crystal graph of `B♯`, with
/// every `ẽ_i`, `f̃_i` arc between its nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSlice {
    pub root: SharpElement,
    pub radius: usize,
    /// Sorted; arcs refer to positions in this list.
    pub nodes: Vec<SharpElement>,
    pub arcs: Vec<GraphArc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub root: SharpJson,
    pub radius: usize,
    pub nodes: Vec<SharpJson>,
    pub arcs: Vec<GraphArc>,
}

fn neighbours(v: &SharpElement) -> Result<Vec<(usize, Direction, SharpElement)>, HarnessError> {
    let mut out = Vec::new();
    for i in 1..=v.n() {
        out.push((i, Direction::E, v.etilde(i)?));
        out.push((i, Direction::F, v.ftilde(i)?));
    }
    Ok(out)
}

pub fn cmd_graph(root: &SharpElement, radius: usize, max_radius: usize) -> Result<GraphSlice, HarnessError> {
    if radius > max_radius {
        return Err(HarnessError::RadiusAboveCap {
            radius,
            cap: max_radius,
        });
    }
    let mut seen = BTreeSet::from([root.clone()]);
    let mut frontier = vec![root.clone()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for v in &frontier {
            for (_, _, w) in neighbours(v)? {
                if seen.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    let nodes: Vec<SharpElement> = seen.into_iter().collect();
    let index: BTreeMap<&SharpElement, usize> = nodes.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let mut arcs = Vec::new();
    for (from, v) in nodes.iter().enumerate() {
        for (i, dir, w) in neighbours(v)? {
            if let Some(&to) = index.get(&w) {
                arcs.push(GraphArc { from, i, dir, to });
            }
        }
    }
    Ok(GraphSlice {
        root: root.clone(),
        radius,
        nodes,
        arcs,
    })
}

impl GraphSlice {
    /// DOT digraph; `f̃` arcs blue, `ẽ` arcs red, labelled by `i`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n  node [shape=box];\n");
        for (k, v) in self.nodes.iter().enumerate() {
            let style = if *v == self.root { ", style=bold" } else { "" };
            let _ = writeln!(s, "  v{k} [label=\"{v}\"{style}];");
        }
        for a in &self.arcs {
            let color = match a.dir {
                Direction::E => "red",
                Direction::F => "blue",
            };
            let _ = writeln!(s, "  v{} -> v{} [label=\"{}\", color={color}];", a.from, a.to, a.i);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            root: self.root.to_json(),
            radius: self.radius,
            nodes: self.nodes.iter().map(SharpElement::to_json).collect(),
            arcs: self.arcs.clone(),
        }
    }
}
