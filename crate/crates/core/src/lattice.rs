//! Finite lattices of element sets (intermediate algebras, submodules):
//! enumeration by adjunction, Hasse diagrams, chains, irreducible
//! decompositions, JSON and DOT output.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::extension::Extension;
use crate::limits::Limits;

/// Default cap on the number of maximal chains listed.
pub const DEFAULT_CHAIN_CAP: usize = 10_000;

/// Nodes in canonical order (cardinality, then lexicographic), so node `0`
/// is the bottom and the last node is the top.
#[derive(Clone, Debug)]
pub struct LatticeReport {
    nodes: Vec<ElemSet>,
    index: HashMap<ElemSet, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    length: usize,
    maximal_chain: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chains {
    pub chains: Vec<Vec<usize>>,
    pub truncated: bool,
    /// All listed maximal chains have the same length.
    pub graded: bool,
    /// Listed maximal chains strictly shorter than the longest one.
    pub short_chains: usize,
}

/// A node written as an intersection of ∩-irreducible nodes and as a join
/// of join-irreducible nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub node: usize,
    pub meet_irreducibles: Vec<usize>,
    pub join_irreducibles: Vec<usize>,
}

impl LatticeReport {
    pub fn from_nodes(mut nodes: Vec<ElemSet>) -> LatticeReport {
        nodes.sort_by(|a, b| a.canonical_cmp(b));
        nodes.dedup();
        let n = nodes.len();
        let index = nodes
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        // above[i] = nodes strictly containing node i
        let mut above: Vec<ElemSet> = Vec::with_capacity(n);
        for i in 0..n {
            above.push(ElemSet::from_indices(
                n,
                (i + 1..n).filter(|&j| nodes[i].len() < nodes[j].len() && nodes[i].is_subset(&nodes[j])),
            ));
        }
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for i in 0..n {
            let mut covered = ElemSet::empty(n);
            for j in above[i].iter() {
                covered = covered.union(&above[j]);
            }
            for j in above[i].iter() {
                if !covered.contains(j) {
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        // longest chain from the bottom, in topological (canonical) order
        let mut depth = vec![0usize; n];
        let mut prev = vec![usize::MAX; n];
        for j in 0..n {
            for &i in &lower[j] {
                if prev[j] == usize::MAX || depth[i] + 1 > depth[j] {
                    depth[j] = depth[i] + 1;
                    prev[j] = i;
                }
            }
        }
        let mut maximal_chain = Vec::new();
        if n > 0 {
            let mut c = n - 1;
            maximal_chain.push(c);
            while prev[c] != usize::MAX {
                c = prev[c];
                maximal_chain.push(c);
            }
            maximal_chain.reverse();
        }
        let length = if n > 0 { depth[n - 1] } else { 0 };
        LatticeReport {
            nodes,
            index,
            upper,
            lower,
            length,
            maximal_chain,
        }
    }

    pub fn nodes(&self) -> &[ElemSet] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &ElemSet {
        &self.nodes[i]
    }

    pub fn count(&self) -> usize {
        self.nodes.len()
    }

    pub fn index_of(&self, set: &ElemSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn contains(&self, set: &ElemSet) -> bool {
        self.index.contains_key(set)
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Covering pairs `(lower, upper)`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .upper
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn covers(&self, lower: usize, upper: usize) -> bool {
        self.upper[lower].contains(&upper)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.nodes[i].is_subset(&self.nodes[j])
    }

    /// Longest chain from bottom to top.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn maximal_chain(&self) -> &[usize] {
        &self.maximal_chain
    }

    /// Whether the nodes are totally ordered.
    pub fn is_chain(&self) -> bool {
        self.upper.iter().all(|u| u.len() <= 1)
    }

    /// All maximal chains bottom to top, up to `cap` of them.
    pub fn maximal_chains(&self, cap: usize) -> Chains {
        let mut chains = Vec::new();
        let mut truncated = false;
        let mut stack = vec![vec![self.bottom()]];
        while let Some(path) = stack.pop() {
            let last = *path.last().unwrap();
            if self.upper[last].is_empty() {
                if chains.len() == cap {
                    truncated = true;
                    break;
                }
                chains.push(path);
                continue;
            }
            for &j in self.upper[last].iter().rev() {
                let mut p = path.clone();
                p.push(j);
                stack.push(p);
            }
        }
        let short_chains = chains
            .iter()
            .filter(|c| c.len() - 1 < self.length)
            .count();
        Chains {
            graded: short_chains == 0,
            chains,
            truncated,
            short_chains,
        }
    }

    /// Greatest node contained in both.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let inter = self.nodes[i].intersection(&self.nodes[j]);
        if let Some(k) = self.index_of(&inter) {
            return k;
        }
        (0..self.nodes.len())
            .rev()
            .find(|&k| self.nodes[k].is_subset(&inter))
            .expect("bottom lies below every node")
    }

    /// Least node containing both.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let uni = self.nodes[i].union(&self.nodes[j]);
        (0..self.nodes.len())
            .find(|&k| uni.is_subset(&self.nodes[k]))
            .expect("top lies above every node")
    }

    pub fn meet_all(&self, list: &[usize]) -> usize {
        list.iter().fold(self.top(), |acc, &k| self.meet(acc, k))
    }

    pub fn join_all(&self, list: &[usize]) -> usize {
        list.iter().fold(self.bottom(), |acc, &k| self.join(acc, k))
    }

    /// The top, or a node with exactly one upper cover.
    pub fn is_meet_irreducible(&self, i: usize) -> bool {
        i == self.top() || self.upper[i].len() == 1
    }

    /// The bottom, or a node with exactly one lower cover.
    pub fn is_join_irreducible(&self, i: usize) -> bool {
        i == self.bottom() || self.lower[i].len() == 1
    }

    /// Writes node `i` as a meet of ∩-irreducibles and a join of
    /// join-irreducibles by descending through covers, then drops redundant
    /// members. Returns `None` if either recomposition fails.
    pub fn irreducible_decomposition(&self, i: usize) -> Option<Decomposition> {
        let meets = self.collect(i, true);
        let joins = self.collect(i, false);
        let meets = prune(meets, |l| self.meet_all(l) == i);
        let joins = prune(joins, |l| self.join_all(l) == i);
        if self.meet_all(&meets) != i || self.join_all(&joins) != i {
            return None;
        }
        Some(Decomposition {
            node: i,
            meet_irreducibles: meets,
            join_irreducibles: joins,
        })
    }

    fn collect(&self, i: usize, up: bool) -> Vec<usize> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut stack = vec![i];
        while let Some(k) = stack.pop() {
            if !seen.insert(k) {
                continue;
            }
            let irreducible = if up {
                self.is_meet_irreducible(k)
            } else {
                self.is_join_irreducible(k)
            };
            if irreducible {
                out.push(k);
            } else if up {
                stack.extend(&self.upper[k]);
            } else {
                stack.extend(&self.lower[k]);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "count": self.count(),
            "length": self.length,
            "nodes": self.nodes.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            "edges": self.hasse_edges(),
            "maximal_chain": self.maximal_chain,
        })
    }

    /// Hasse diagram, bottom at the bottom.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", name.replace('"', "'"));
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box];");
        for (i, s) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"#{i} |{}|\"];", s.len());
        }
        for (a, b) in self.hasse_edges() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn prune(mut list: Vec<usize>, ok: impl Fn(&[usize]) -> bool) -> Vec<usize> {
    let mut k = 0;
    while k < list.len() && list.len() > 1 {
        let mut trial = list.clone();
        trial.remove(k);
        if ok(&trial) {
            list = trial;
        } else {
            k += 1;
        }
    }
    list
}

/// Largest number of nodes an adjunction enumeration may produce.
pub const NODE_CAP: usize = 1_000_000;

/// Closes `start` under `step(node, x)` for every candidate `x` outside the
/// node, processing nodes first-in first-out.
pub(crate) fn adjunction_closure(
    start: ElemSet,
    candidates: &[usize],
    step: impl Fn(&ElemSet, usize) -> ElemSet,
    cap: usize,
) -> Result<Vec<ElemSet>> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    seen.insert(start.clone());
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for &x in candidates {
            if t.contains(x) {
                continue;
            }
            let u = step(&t, x);
            if seen.insert(u.clone()) {
                if out.len() == cap {
                    return Err(Error::Bound(format!("more than {cap} lattice nodes")));
                }
                out.push(u.clone());
                queue.push_back(u);
            }
        }
    }
    Ok(out)
}

/// Every intermediate algebra of `R ⊆ S`, by single-element adjunction from
/// the image of `R`.
pub fn intermediate_algebras(ext: &Extension) -> Result<LatticeReport> {
    let order: Vec<usize> = ext.top().elements().collect();
    intermediate_algebras_in_order(ext, &order)
}

/// Same enumeration with the candidate elements visited in a given order.
pub fn intermediate_algebras_in_order(ext: &Extension, order: &[usize]) -> Result<LatticeReport> {
    Limits::check_lattice("intermediate algebra enumeration", ext.top().order())?;
    let nodes = adjunction_closure(ext.image().clone(), order, |t, s| ext.adjoin(t, s), NODE_CAP)?;
    Ok(LatticeReport::from_nodes(nodes))
}
