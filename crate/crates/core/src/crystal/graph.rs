use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Display;

use serde::Serialize;

use super::elem::{Dir, Elem};
use super::tensor::{Tensor, TruncatedPath};
use crate::error::{Error, Result};

/// Default node cap for closures.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// Anything the Kashiwara operators act on.
pub trait CrystalNode: Clone + Ord + Display {
    fn rank(&self) -> usize;
    fn step(&self, i: usize, dir: Dir) -> Result<Option<Self>>;
}

impl CrystalNode for Elem {
    fn rank(&self) -> usize {
        Elem::rank(self)
    }

    fn step(&self, i: usize, dir: Dir) -> Result<Option<Self>> {
        Ok(self.apply(i, dir))
    }
}

impl CrystalNode for Tensor {
    fn rank(&self) -> usize {
        self.0.first().map_or(0, Elem::rank)
    }

    fn step(&self, i: usize, dir: Dir) -> Result<Option<Self>> {
        Ok(self.apply(i, dir))
    }
}

impl CrystalNode for TruncatedPath {
    fn rank(&self) -> usize {
        TruncatedPath::rank(self)
    }

    fn step(&self, i: usize, dir: Dir) -> Result<Option<Self>> {
        self.apply(i, dir)
    }
}

/// Finite edge-colored graph; an edge `(a, b, i)` means `b = f~_i a`.
/// Nodes are kept sorted so output is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph<T> {
    nodes: Vec<T>,
    edges: Vec<(usize, usize, usize)>,
}

#[derive(Serialize)]
struct JsonGraph {
    nodes: Vec<String>,
    edges: Vec<JsonEdge>,
}

#[derive(Serialize)]
struct JsonEdge {
    from: usize,
    to: usize,
    label: usize,
}

impl<T: CrystalNode> CrystalGraph<T> {
    fn from_parts(nodes: BTreeSet<T>, edges: BTreeSet<(T, T, usize)>) -> Self {
        let index: BTreeMap<&T, usize> = nodes.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let mut idx_edges: Vec<(usize, usize, usize)> = edges
            .iter()
            .map(|(a, b, i)| (index[a], index[b], *i))
            .collect();
        idx_edges.sort_unstable();
        let nodes = nodes.into_iter().collect();
        CrystalGraph {
            nodes,
            edges: idx_edges,
        }
    }

    /// All f~_i edges (every `i` in `Z/nZ`) between members of `nodes`.
    pub fn induced(nodes: impl IntoIterator<Item = T>) -> Self {
        let nodes: BTreeSet<T> = nodes.into_iter().collect();
        let mut edges = BTreeSet::new();
        for a in &nodes {
            for i in 0..a.rank() {
                if let Ok(Some(b)) = a.step(i, Dir::Lower) {
                    if nodes.contains(&b) {
                        edges.insert((a.clone(), b, i));
                    }
                }
            }
        }
        CrystalGraph::from_parts(nodes, edges)
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, node: &T) -> bool {
        self.nodes.binary_search(node).is_ok()
    }

    /// Edges as node triples, for comparison across graphs.
    pub fn edge_set(&self) -> BTreeSet<(T, T, usize)> {
        self.edges
            .iter()
            .map(|&(a, b, i)| (self.nodes[a].clone(), self.nodes[b].clone(), i))
            .collect()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n");
        for (k, v) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{k} [label=\"{v}\"];\n"));
        }
        for &(a, b, i) in &self.edges {
            out.push_str(&format!("  n{a} -> n{b} [label=\"{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let graph = JsonGraph {
            nodes: self.nodes.iter().map(T::to_string).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(from, to, label)| JsonEdge { from, to, label })
                .collect(),
        };
        serde_json::to_value(graph).expect("graph serializes")
    }
}

/// Breadth-first closure of `seeds` under the listed operators, recording the
/// traversed edges. Fails once more than `cap` nodes are reached.
pub fn crystal_closure<T: CrystalNode>(
    seeds: impl IntoIterator<Item = T>,
    ops: &[(usize, Dir)],
    cap: usize,
) -> Result<CrystalGraph<T>> {
    let mut nodes: BTreeSet<T> = BTreeSet::new();
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if nodes.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(i, dir) in ops {
            let Some(y) = x.step(i, dir)? else { continue };
            match dir {
                Dir::Lower => edges.insert((x.clone(), y.clone(), i)),
                Dir::Raise => edges.insert((y.clone(), x.clone(), i)),
            };
            if nodes.insert(y.clone()) {
                if nodes.len() > cap {
                    return Err(Error::CapExceeded(cap));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(CrystalGraph::from_parts(nodes, edges))
}
