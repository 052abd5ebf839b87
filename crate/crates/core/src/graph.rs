//! Weak-order graphs on symmetric clans and their lift to split orbits.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use petgraph::algo::toposort;
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::visit::{Dfs, Reversed};
use serde::Serialize;

use crate::action::act_simple;
use crate::clan::{enumerate_symmetric_clans, Clan};
use crate::error::{Error, Result};
use crate::richardson::target_clan;
use crate::weyl::LieType;

/// Clans with an edge `c ->_i c'` whenever `s_i` raises `c` to `c'`.
#[derive(Debug, Clone)]
pub struct KOrbitGraph {
    pub lie_type: LieType,
    pub rank: usize,
    pub graph: DiGraph<Clan, usize>,
    index: BTreeMap<Clan, NodeIndex>,
}

impl KOrbitGraph {
    pub fn node(&self, clan: &Clan) -> Option<NodeIndex> {
        self.index.get(clan).copied()
    }

    pub fn is_acyclic(&self) -> bool {
        toposort(&self.graph, None).is_ok()
    }

    /// Nodes with no path to the dense orbit.
    pub fn nodes_missing_target(&self) -> Vec<&Clan> {
        let target = self.index[&target_clan(self.rank, self.lie_type)];
        let reversed = Reversed(&self.graph);
        let mut reached = vec![false; self.graph.node_count()];
        let mut dfs = Dfs::new(reversed, target);
        while let Some(n) = dfs.next(reversed) {
            reached[n.index()] = true;
        }
        self.graph
            .node_indices()
            .filter(|n| !reached[n.index()])
            .map(|n| &self.graph[n])
            .collect()
    }
}

pub fn k_orbit_graph(rank: usize, lie_type: LieType) -> Result<KOrbitGraph> {
    lie_type.check_rank(rank)?;
    let mut graph = DiGraph::new();
    let mut index = BTreeMap::new();
    let clans = enumerate_symmetric_clans(rank, lie_type);
    for c in &clans {
        index.insert(c.clone(), graph.add_node(c.clone()));
    }
    for c in &clans {
        for i in 1..=rank {
            let out = act_simple(i, c, lie_type)?;
            if out.result != *c {
                let target = *index
                    .get(&out.result)
                    .expect("action stays among symmetric clans");
                graph.add_edge(index[c], target, i);
            }
        }
    }
    Ok(KOrbitGraph {
        lie_type,
        rank,
        graph,
        index,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Component {
    Whole,
    Half1,
    Half2,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrbitNode {
    #[serde(serialize_with = "crate::serialize_display")]
    pub clan: Clan,
    pub component: Component,
}

impl fmt::Display for OrbitNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.component {
            Component::Whole => write!(f, "{}", self.clan),
            Component::Half1 => write!(f, "{}#1", self.clan),
            Component::Half2 => write!(f, "{}#2", self.clan),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeStyle {
    Single,
    Double,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitEdge {
    pub label: usize,
    pub style: EdgeStyle,
}

/// The lift of [`KOrbitGraph`]: disconnected clans become two nodes.
///
/// Half `k` of a split source always maps to half `k` of a split target.
/// This naming is a convention; every count and check here is invariant
/// under swapping the halves of any node.
#[derive(Debug, Clone)]
pub struct LOrbitGraph {
    pub lie_type: LieType,
    pub rank: usize,
    pub graph: DiGraph<OrbitNode, OrbitEdge>,
}

pub fn l_orbit_graph(rank: usize, lie_type: LieType) -> Result<LOrbitGraph> {
    let k = k_orbit_graph(rank, lie_type)?;
    let mut graph = DiGraph::new();
    let mut lifted: Vec<Vec<NodeIndex>> = Vec::with_capacity(k.graph.node_count());
    for n in k.graph.node_indices() {
        let clan = &k.graph[n];
        let parts: &[Component] = if clan.is_disconnected() {
            &[Component::Half1, Component::Half2]
        } else {
            &[Component::Whole]
        };
        lifted.push(
            parts
                .iter()
                .map(|&component| {
                    graph.add_node(OrbitNode {
                        clan: clan.clone(),
                        component,
                    })
                })
                .collect(),
        );
    }
    for e in k.graph.edge_indices() {
        let (s, t) = k.graph.edge_endpoints(e).expect("edge exists");
        let label = k.graph[e];
        let (src, dst) = (&lifted[s.index()], &lifted[t.index()]);
        match (src.len(), dst.len()) {
            (2, 2) => {
                for (&a, &b) in src.iter().zip(dst) {
                    graph.add_edge(a, b, OrbitEdge { label, style: EdgeStyle::Single });
                }
            }
            (2, 1) => {
                for &a in src {
                    graph.add_edge(a, dst[0], OrbitEdge { label, style: EdgeStyle::Double });
                }
            }
            (1, 1) => {
                graph.add_edge(src[0], dst[0], OrbitEdge { label, style: EdgeStyle::Single });
            }
            _ => {
                return Err(Error::ForbiddenSplitPattern {
                    source_clan: k.graph[s].to_string(),
                    target: k.graph[t].to_string(),
                    letter: label,
                });
            }
        }
    }
    Ok(LOrbitGraph { lie_type, rank, graph })
}

pub const HALF_LABEL_NOTE: &str = "half labels #1/#2 are a convention: half k of a split source maps to half k of a split target";

fn dot_header(out: &mut String, name: &str) {
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
}

impl KOrbitGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        dot_header(&mut out, &format!("K_{}{}", self.lie_type, self.rank));
        for n in self.graph.node_indices() {
            writeln!(out, "  n{} [label=\"{}\"];", n.index(), self.graph[n]).unwrap();
        }
        for e in self.graph.edge_indices() {
            let (s, t) = self.graph.edge_endpoints(e).unwrap();
            writeln!(out, "  n{} -> n{} [label=\"s{}\"];", s.index(), t.index(), self.graph[e]).unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in self.graph.edge_indices() {
            let (s, t) = self.graph.edge_endpoints(e).unwrap();
            writeln!(out, "{} -s{}-> {}", self.graph[s], self.graph[e], self.graph[t]).unwrap();
        }
        out
    }
}

impl LOrbitGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "// {HALF_LABEL_NOTE}").unwrap();
        dot_header(&mut out, &format!("L_{}{}", self.lie_type, self.rank));
        for n in self.graph.node_indices() {
            writeln!(out, "  n{} [label=\"{}\"];", n.index(), self.graph[n]).unwrap();
        }
        for e in self.graph.edge_indices() {
            let (s, t) = self.graph.edge_endpoints(e).unwrap();
            let edge = self.graph[e];
            let style = match edge.style {
                EdgeStyle::Single => String::new(),
                EdgeStyle::Double => ", color=\"black:black\"".to_string(),
            };
            writeln!(out, "  n{} -> n{} [label=\"s{}\"{style}];", s.index(), t.index(), edge.label).unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {HALF_LABEL_NOTE}\n");
        for e in self.graph.edge_indices() {
            let (s, t) = self.graph.edge_endpoints(e).unwrap();
            let edge = self.graph[e];
            let arrow = match edge.style {
                EdgeStyle::Single => format!("-s{}->", edge.label),
                EdgeStyle::Double => format!("=s{}=>", edge.label),
            };
            writeln!(out, "{} {arrow} {}", self.graph[s], self.graph[t]).unwrap();
        }
        out
    }
}
