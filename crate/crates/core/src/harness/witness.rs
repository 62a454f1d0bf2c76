//! Counterexample witnesses and their replay against raw definitions.
//!
//! A witness is a list of facts about named submodules, ideals and graphs.
//! Replay resolves every name back to its element set and re-decides each
//! fact by brute force over ring elements and module elements, without
//! reading any flag cached on the lattice.

use std::collections::BTreeSet;

use serde::Serialize;

use super::instance::Instance;
use crate::algebra::{module_properties, FiniteModule, Ideal};
use crate::graph::{metrics_of, Adjacency, Extended, GraphKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Prime,
    Second,
    Minimal,
    Maximal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    /// Two vertices (labels) are adjacent or not.
    Edge {
        graph: GraphKind,
        a: String,
        b: String,
        present: bool,
    },
    Flag {
        submodule: String,
        flag: Flag,
        value: bool,
    },
    /// Number of submodules of `M` carrying the flag.
    Count {
        flag: Flag,
        value: usize,
    },
    Meet {
        a: String,
        b: String,
        result: String,
    },
    Join {
        a: String,
        b: String,
        result: String,
    },
    SecondSocle {
        result: String,
    },
    PrimeRadical {
        result: String,
    },
    Universal {
        graph: GraphKind,
        vertex: String,
        value: bool,
    },
    Isolated {
        graph: GraphKind,
        vertex: String,
        value: bool,
    },
    Connected {
        graph: GraphKind,
        value: bool,
    },
    Complete {
        graph: GraphKind,
        value: bool,
    },
    Diameter {
        graph: GraphKind,
        value: Extended,
    },
    Girth {
        graph: GraphKind,
        value: Extended,
    },
    DominationNumber {
        graph: GraphKind,
        value: usize,
    },
    Dominates {
        graph: GraphKind,
        set: Vec<String>,
        value: bool,
    },
    Property {
        property: String,
        value: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub note: String,
    pub facts: Vec<Fact>,
}

impl Witness {
    pub fn new(note: impl Into<String>, facts: Vec<Fact>) -> Self {
        Witness {
            note: note.into(),
            facts,
        }
    }
}

type Set = BTreeSet<u32>;

/// Brute-force view of an instance, built only from element sets.
struct Raw<'a> {
    module: &'a FiniteModule,
    labels: Vec<String>,
    sets: Vec<Set>,
}

impl<'a> Raw<'a> {
    fn new(instance: &'a Instance) -> Self {
        let lattice = &instance.lattice;
        Raw {
            module: &instance.module,
            labels: (0..lattice.len()).map(|i| lattice.label(i)).collect(),
            sets: lattice
                .all()
                .iter()
                .map(|s| s.elements().iter().copied().collect())
                .collect(),
        }
    }

    fn set(&self, label: &str) -> Result<&Set, String> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.sets[i])
            .ok_or_else(|| format!("unknown submodule `{label}`"))
    }

    fn label_of(&self, set: &Set) -> Result<&str, String> {
        self.sets
            .iter()
            .position(|s| s == set)
            .map(|i| self.labels[i].as_str())
            .ok_or_else(|| "set is not a submodule".to_string())
    }

    fn n(&self) -> u32 {
        self.module.ring().modulus()
    }

    fn order(&self) -> usize {
        self.module.order() as usize
    }

    fn is_vertex(&self, s: &Set) -> bool {
        s.len() > 1 && s.len() < self.order()
    }

    fn scaled(&self, r: u32, s: &Set) -> Set {
        s.iter().map(|&x| self.module.scale(r, x)).collect()
    }

    fn is_second(&self, s: &Set) -> bool {
        s.len() > 1
            && (0..self.n()).all(|r| {
                let image = self.scaled(r, s);
                image.len() == 1 || image == *s
            })
    }

    fn is_prime(&self, s: &Set) -> bool {
        if s.len() == self.order() {
            return false;
        }
        let colon: Vec<bool> = (0..self.n())
            .map(|r| {
                self.module
                    .elements()
                    .all(|m| s.contains(&self.module.scale(r, m)))
            })
            .collect();
        (0..self.n()).all(|r| {
            colon[r as usize]
                || self
                    .module
                    .elements()
                    .all(|m| s.contains(&m) || !s.contains(&self.module.scale(r, m)))
        })
    }

    fn meet(&self, a: &Set, b: &Set) -> Set {
        a.intersection(b).copied().collect()
    }

    fn join(&self, a: &Set, b: &Set) -> Set {
        a.iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.module.add(x, y))
            .collect()
    }

    fn is_minimal(&self, s: &Set) -> bool {
        self.is_vertex(s)
            && !self
                .sets
                .iter()
                .any(|k| self.is_vertex(k) && k.len() < s.len() && k.is_subset(s))
    }

    fn is_maximal(&self, s: &Set) -> bool {
        self.is_vertex(s)
            && !self
                .sets
                .iter()
                .any(|k| self.is_vertex(k) && k.len() > s.len() && s.is_subset(k))
    }

    fn flag(&self, s: &Set, flag: Flag) -> bool {
        match flag {
            Flag::Prime => self.is_prime(s),
            Flag::Second => self.is_second(s),
            Flag::Minimal => self.is_minimal(s),
            Flag::Maximal => self.is_maximal(s),
        }
    }

    fn ideal_is_prime(&self, ideal: &Ideal) -> bool {
        let n = u64::from(self.n());
        !ideal.is_whole()
            && (0..n).all(|a| {
                (0..n).all(|b| !ideal.contains(a * b) || ideal.contains(a) || ideal.contains(b))
            })
    }
}

/// Vertex names and adjacency of a graph, rebuilt from raw definitions.
fn raw_graph(raw: &Raw, instance: &Instance, kind: GraphKind) -> (Vec<String>, Adjacency) {
    match kind {
        GraphKind::Ssi | GraphKind::Pss => {
            let members: Vec<usize> = (0..raw.sets.len())
                .filter(|&i| raw.is_vertex(&raw.sets[i]))
                .collect();
            let mut adj = Adjacency::empty(members.len());
            for (x, &a) in members.iter().enumerate() {
                for (y, &b) in members.iter().enumerate().skip(x + 1) {
                    let (sa, sb) = (&raw.sets[a], &raw.sets[b]);
                    let on = if kind == GraphKind::Ssi {
                        raw.is_second(&raw.meet(sa, sb))
                    } else {
                        raw.is_prime(&raw.join(sa, sb))
                    };
                    if on {
                        adj.add_edge(x, y);
                    }
                }
            }
            (
                members.iter().map(|&i| raw.labels[i].clone()).collect(),
                adj,
            )
        }
        _ => {
            let g = &instance.graph(kind).graph;
            let ideals: Vec<Ideal> = g
                .vertices
                .iter()
                .map(|v| match v.reference {
                    crate::graph::VertexRef::Ideal(i) => i,
                    crate::graph::VertexRef::Submodule(_) => unreachable!("ideal graph"),
                })
                .collect();
            let regular = FiniteModule::regular(instance.ring);
            let ring_raw = Raw {
                module: &regular,
                labels: Vec::new(),
                sets: Vec::new(),
            };
            let mut adj = Adjacency::empty(ideals.len());
            for a in 0..ideals.len() {
                for b in a + 1..ideals.len() {
                    let on = if kind == GraphKind::Sii {
                        let meet: Set = ideals[a]
                            .elements()
                            .into_iter()
                            .filter(|&x| ideals[b].contains(u64::from(x)))
                            .collect();
                        ring_raw.is_second(&meet)
                    } else {
                        raw.ideal_is_prime(&ideals[a].sum(&ideals[b]))
                    };
                    if on {
                        adj.add_edge(a, b);
                    }
                }
            }
            (g.vertices.iter().map(|v| v.label.clone()).collect(), adj)
        }
    }
}

fn position(names: &[String], label: &str) -> Result<usize, String> {
    names
        .iter()
        .position(|n| n == label)
        .ok_or_else(|| format!("`{label}` is not a vertex"))
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, claimed: T, actual: T) -> Result<(), String> {
    if claimed == actual {
        Ok(())
    } else {
        Err(format!(
            "{what}: witness says {claimed:?}, replay gives {actual:?}"
        ))
    }
}

/// Re-decides every fact of a witness from raw definitions.
pub fn replay(witness: &Witness, instance: &Instance) -> Result<(), String> {
    let raw = Raw::new(instance);
    for fact in &witness.facts {
        replay_fact(&raw, instance, fact)?;
    }
    Ok(())
}

fn replay_fact(raw: &Raw, instance: &Instance, fact: &Fact) -> Result<(), String> {
    match fact {
        Fact::Edge {
            graph,
            a,
            b,
            present,
        } => {
            let (names, adj) = raw_graph(raw, instance, *graph);
            let (x, y) = (position(&names, a)?, position(&names, b)?);
            expect(
                &format!("{graph} edge {a}-{b}"),
                *present,
                adj.has_edge(x, y),
            )
        }
        Fact::Flag {
            submodule,
            flag,
            value,
        } => expect(
            &format!("{flag:?} flag of {submodule}"),
            *value,
            raw.flag(raw.set(submodule)?, *flag),
        ),
        Fact::Count { flag, value } => expect(
            &format!("number of {flag:?} submodules"),
            *value,
            raw.sets.iter().filter(|s| raw.flag(s, *flag)).count(),
        ),
        Fact::Meet { a, b, result } => {
            let meet = raw.meet(raw.set(a)?, raw.set(b)?);
            expect(&format!("{a} ∩ {b}"), result.as_str(), raw.label_of(&meet)?)
        }
        Fact::Join { a, b, result } => {
            let join = raw.join(raw.set(a)?, raw.set(b)?);
            expect(&format!("{a} + {b}"), result.as_str(), raw.label_of(&join)?)
        }
        Fact::SecondSocle { result } => {
            let mut acc: Set = BTreeSet::from([0]);
            for s in raw.sets.iter().filter(|s| raw.is_second(s)) {
                acc = raw.join(&acc, s);
            }
            expect("sec(M)", result.as_str(), raw.label_of(&acc)?)
        }
        Fact::PrimeRadical { result } => {
            let mut acc: Set = raw.module.elements().collect();
            for s in raw.sets.iter().filter(|s| raw.is_prime(s)) {
                acc = raw.meet(&acc, s);
            }
            expect("rad(M)", result.as_str(), raw.label_of(&acc)?)
        }
        Fact::Universal {
            graph,
            vertex,
            value,
        } => {
            let (names, adj) = raw_graph(raw, instance, *graph);
            let v = position(&names, vertex)?;
            expect(
                &format!("{vertex} universal in {graph}"),
                *value,
                adj.degree(v) + 1 == adj.len(),
            )
        }
        Fact::Isolated {
            graph,
            vertex,
            value,
        } => {
            let (names, adj) = raw_graph(raw, instance, *graph);
            let v = position(&names, vertex)?;
            expect(
                &format!("{vertex} isolated in {graph}"),
                *value,
                adj.degree(v) == 0,
            )
        }
        Fact::Connected { graph, value } => {
            let (_, adj) = raw_graph(raw, instance, *graph);
            expect(
                &format!("{graph} connected"),
                *value,
                metrics_of(&adj).is_connected,
            )
        }
        Fact::Complete { graph, value } => {
            let (_, adj) = raw_graph(raw, instance, *graph);
            expect(
                &format!("{graph} complete"),
                *value,
                metrics_of(&adj).is_complete,
            )
        }
        Fact::Diameter { graph, value } => {
            let (_, adj) = raw_graph(raw, instance, *graph);
            expect(&format!("diam({graph})"), *value, metrics_of(&adj).diameter)
        }
        Fact::Girth { graph, value } => {
            let (_, adj) = raw_graph(raw, instance, *graph);
            expect(&format!("girth({graph})"), *value, metrics_of(&adj).girth)
        }
        Fact::DominationNumber { graph, value } => {
            let (_, adj) = raw_graph(raw, instance, *graph);
            expect(
                &format!("γ({graph})"),
                *value,
                metrics_of(&adj).domination_number,
            )
        }
        Fact::Dominates { graph, set, value } => {
            let (names, adj) = raw_graph(raw, instance, *graph);
            let chosen = set
                .iter()
                .map(|l| position(&names, l))
                .collect::<Result<Vec<_>, _>>()?;
            let dominated = !chosen.is_empty()
                && (0..adj.len())
                    .all(|v| chosen.contains(&v) || chosen.iter().any(|&c| adj.has_edge(v, c)));
            expect(&format!("{set:?} dominates {graph}"), *value, dominated)
        }
        Fact::Property { property, value } => {
            let p = module_properties(&instance.lattice);
            let actual = match property.as_str() {
                "coreduced" => p.coreduced,
                "reduced" => p.reduced,
                "multiplication" => p.multiplication,
                "comultiplication" => p.comultiplication,
                "dac" => p.dac,
                "strong_comultiplication" => p.strong_comultiplication,
                "faithful" => p.faithful,
                "hollow" => p.hollow,
                "uniform" => p.uniform,
                other => return Err(format!("unknown property `{other}`")),
            };
            expect(property, *value, actual)
        }
    }
}
