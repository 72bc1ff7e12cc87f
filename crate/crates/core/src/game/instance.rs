use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::kind::{CostWeights, GameKind};
use crate::error::{GameError, Result};
use crate::rational::{one, Rational};

/// Unordered player pair, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    /// Normalizes endpoint order; self-loops are rejected by instance validation.
    pub fn new(a: usize, b: usize) -> Self {
        Edge {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Neighbor {
    pub other: usize,
    pub weight: Rational,
}

/// A game instance. Players are `0..n` and machines `0..m` in the API;
/// documents and reports print them 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    kind: GameKind,
    n: usize,
    m: usize,
    conflict_edges: Vec<Edge>,
    friendship_edges: Vec<Edge>,
    edge_weights: BTreeMap<Edge, Rational>,
    machine_values: Option<Vec<Rational>>,
    weights: CostWeights,
    conflict_adj: Vec<Vec<Neighbor>>,
    friend_adj: Vec<Vec<Neighbor>>,
    conflict_degree: Vec<Rational>,
    friend_degree: Vec<Rational>,
}

impl Instance {
    pub fn builder(kind: GameKind, n: usize, m: usize) -> InstanceBuilder {
        InstanceBuilder {
            kind,
            n,
            m,
            conflict_edges: Vec::new(),
            friendship_edges: Vec::new(),
            edge_weights: BTreeMap::new(),
            machine_values: None,
            weights: None,
        }
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn conflict_edges(&self) -> &[Edge] {
        &self.conflict_edges
    }

    pub fn friendship_edges(&self) -> &[Edge] {
        &self.friendship_edges
    }

    /// Explicit weights; edges absent from the map weigh 1.
    pub fn edge_weights(&self) -> &BTreeMap<Edge, Rational> {
        &self.edge_weights
    }

    pub fn edge_weight(&self, e: Edge) -> Rational {
        self.edge_weights.get(&e).cloned().unwrap_or_else(one)
    }

    pub fn machine_values(&self) -> Option<&[Rational]> {
        self.machine_values.as_deref()
    }

    pub(crate) fn machine_value(&self, k: usize) -> Rational {
        self.machine_values
            .as_ref()
            .map(|p| p[k].clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Cost weights in effect: the stored triple for BwCF, the canonical
    /// (1,1,0) / (1,0,1) for BwC / BwF.
    pub fn weights(&self) -> &CostWeights {
        &self.weights
    }

    pub fn total_conflict_weight(&self) -> Rational {
        self.conflict_edges.iter().map(|&e| self.edge_weight(e)).sum()
    }

    pub fn total_friendship_weight(&self) -> Rational {
        self.friendship_edges.iter().map(|&e| self.edge_weight(e)).sum()
    }

    pub(crate) fn conflict_neighbors(&self, i: usize) -> &[Neighbor] {
        &self.conflict_adj[i]
    }

    pub(crate) fn friend_neighbors(&self, i: usize) -> &[Neighbor] {
        &self.friend_adj[i]
    }

    pub(crate) fn conflict_degree(&self, i: usize) -> &Rational {
        &self.conflict_degree[i]
    }

    pub(crate) fn friend_degree(&self, i: usize) -> &Rational {
        &self.friend_degree[i]
    }

    /// Same graph and values re-tagged as another kind (used for
    /// cross-kind consistency checks).
    pub fn with_kind(&self, kind: GameKind) -> Result<Instance> {
        let mut b = Instance::builder(kind, self.n, self.m)
            .conflicts(self.conflict_edges.iter().map(|e| e.endpoints()))
            .friendships(self.friendship_edges.iter().map(|e| e.endpoints()));
        if kind == GameKind::BwCF {
            b = b.weights(self.weights.clone());
        }
        if kind.is_sharing() {
            if let Some(p) = &self.machine_values {
                b = b.machine_values(p.clone());
            }
            for (e, w) in &self.edge_weights {
                let (a, c) = e.endpoints();
                b = b.edge_weight(a, c, w.clone());
            }
        }
        b.build()
    }
}

pub struct InstanceBuilder {
    kind: GameKind,
    n: usize,
    m: usize,
    conflict_edges: Vec<(usize, usize)>,
    friendship_edges: Vec<(usize, usize)>,
    edge_weights: BTreeMap<(usize, usize), Rational>,
    machine_values: Option<Vec<Rational>>,
    weights: Option<CostWeights>,
}

impl InstanceBuilder {
    pub fn conflict(mut self, a: usize, b: usize) -> Self {
        self.conflict_edges.push((a, b));
        self
    }

    pub fn conflicts(mut self, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        self.conflict_edges.extend(edges);
        self
    }

    pub fn friendship(mut self, a: usize, b: usize) -> Self {
        self.friendship_edges.push((a, b));
        self
    }

    pub fn friendships(mut self, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        self.friendship_edges.extend(edges);
        self
    }

    pub fn edge_weight(mut self, a: usize, b: usize, w: Rational) -> Self {
        self.edge_weights.insert((a.min(b), a.max(b)), w);
        self
    }

    pub fn machine_values(mut self, p: Vec<Rational>) -> Self {
        self.machine_values = Some(p);
        self
    }

    pub fn weights(mut self, w: CostWeights) -> Self {
        self.weights = Some(w);
        self
    }

    pub fn build(self) -> Result<Instance> {
        let bad = |field: &str, reason: String| GameError::InvalidInstance {
            field: field.into(),
            reason,
        };
        let InstanceBuilder {
            kind,
            n,
            m,
            conflict_edges,
            friendship_edges,
            edge_weights,
            machine_values,
            weights,
        } = self;
        if n == 0 {
            return Err(bad("n", "player count must be >= 1".into()));
        }
        if m == 0 {
            return Err(bad("m", "machine count must be >= 1".into()));
        }

        let normalize = |field: &str, raw: Vec<(usize, usize)>| -> Result<Vec<Edge>> {
            let mut set = BTreeSet::new();
            for (a, b) in raw {
                if a >= n || b >= n {
                    return Err(bad(
                        field,
                        format!("endpoint out of range in edge ({}, {})", a + 1, b + 1),
                    ));
                }
                if a == b {
                    return Err(bad(field, format!("self-loop on player {}", a + 1)));
                }
                if !set.insert(Edge::new(a, b)) {
                    return Err(bad(
                        field,
                        format!("duplicate edge ({}, {})", a.min(b) + 1, a.max(b) + 1),
                    ));
                }
            }
            Ok(set.into_iter().collect())
        };
        let conflict_edges = normalize("conflict_edges", conflict_edges)?;
        let friendship_edges = normalize("friendship_edges", friendship_edges)?;

        if !kind.uses_conflicts() && !conflict_edges.is_empty() {
            return Err(bad("conflict_edges", format!("{kind} has no conflict edges")));
        }
        if !kind.uses_friendships() && !friendship_edges.is_empty() {
            return Err(bad(
                "friendship_edges",
                format!("{kind} has no friendship edges"),
            ));
        }
        let conflict_set: BTreeSet<Edge> = conflict_edges.iter().copied().collect();
        if let Some(e) = friendship_edges.iter().find(|e| conflict_set.contains(e)) {
            let (a, b) = e.endpoints();
            return Err(bad(
                "friendship_edges",
                format!("edge ({}, {}) is also a conflict edge", a + 1, b + 1),
            ));
        }

        let mut weight_map = BTreeMap::new();
        if !edge_weights.is_empty() && !kind.is_sharing() {
            return Err(bad(
                "edge_weights",
                format!("edge weights are only supported for sharing games, not {kind}"),
            ));
        }
        let friend_set: BTreeSet<Edge> = friendship_edges.iter().copied().collect();
        for ((a, b), w) in edge_weights {
            let e = Edge::new(a, b);
            if !conflict_set.contains(&e) && !friend_set.contains(&e) {
                return Err(bad(
                    "edge_weights",
                    format!("weight given for missing edge ({}, {})", a + 1, b + 1),
                ));
            }
            if w <= Rational::zero() {
                return Err(bad(
                    "edge_weights",
                    format!("weight of edge ({}, {}) must be > 0", a + 1, b + 1),
                ));
            }
            weight_map.insert(e, w);
        }

        match (&machine_values, kind.is_sharing()) {
            (None, true) => {
                return Err(bad(
                    "machine_values",
                    format!("required for {kind} instances"),
                ))
            }
            (Some(_), false) => {
                return Err(bad(
                    "machine_values",
                    format!("only sharing games carry machine values, not {kind}"),
                ))
            }
            (Some(p), true) => {
                if p.len() != m {
                    return Err(bad(
                        "machine_values",
                        format!("expected {m} values, got {}", p.len()),
                    ));
                }
                if let Some(k) = p.iter().position(|v| *v < Rational::zero()) {
                    return Err(bad(
                        "machine_values",
                        format!("value of machine {} is negative", k + 1),
                    ));
                }
            }
            (None, false) => {}
        }

        let weights = match (kind, weights) {
            (GameKind::BwCF, Some(w)) => {
                w.validate()?;
                w
            }
            (GameKind::BwCF, None) => {
                return Err(bad("alpha", "BwCF instances need alpha, beta, gamma".into()))
            }
            (GameKind::BwC, None) => CostWeights::conflicts_only(),
            (GameKind::BwF, None) => CostWeights::friendship_only(),
            (_, None) => CostWeights::conflicts_only(),
            (k, Some(w)) => {
                let canonical = match k {
                    GameKind::BwC => CostWeights::conflicts_only(),
                    GameKind::BwF => CostWeights::friendship_only(),
                    _ => {
                        return Err(bad(
                            "alpha",
                            format!("{k} does not take alpha, beta, gamma"),
                        ))
                    }
                };
                if w != canonical {
                    return Err(bad(
                        "alpha",
                        format!("{k} has fixed weights; use BwCF for custom ones"),
                    ));
                }
                w
            }
        };

        let mut conflict_adj = vec![Vec::new(); n];
        let mut friend_adj = vec![Vec::new(); n];
        let weight_of = |e: &Edge| weight_map.get(e).cloned().unwrap_or_else(one);
        for e in &conflict_edges {
            let (a, b) = e.endpoints();
            let w = weight_of(e);
            conflict_adj[a].push(Neighbor { other: b, weight: w.clone() });
            conflict_adj[b].push(Neighbor { other: a, weight: w });
        }
        for e in &friendship_edges {
            let (a, b) = e.endpoints();
            let w = weight_of(e);
            friend_adj[a].push(Neighbor { other: b, weight: w.clone() });
            friend_adj[b].push(Neighbor { other: a, weight: w });
        }
        let degree = |adj: &Vec<Vec<Neighbor>>| -> Vec<Rational> {
            adj.iter()
                .map(|ns| ns.iter().map(|nb| nb.weight.clone()).sum())
                .collect()
        };
        let conflict_degree = degree(&conflict_adj);
        let friend_degree = degree(&friend_adj);

        Ok(Instance {
            kind,
            n,
            m,
            conflict_edges,
            friendship_edges,
            edge_weights: weight_map,
            machine_values,
            weights,
            conflict_adj,
            friend_adj,
            conflict_degree,
            friend_degree,
        })
    }
}
