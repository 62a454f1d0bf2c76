//! The registry of executable statements about SSI and PSS.
//!
//! `C*` checks concern the intersection side (SSI, minimal and second
//! submodules, the second socle); `D*` checks are their duals on the sum
//! side (PSS, maximal and prime submodules, the prime radical). Most pairs
//! share one implementation parameterized by [`Side`].

use serde::Serialize;

use super::instance::Instance;
use super::witness::{Fact, Flag, Witness};
use crate::graph::{Extended, GraphKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Expected to hold on every applicable instance.
    Strict,
    /// May legitimately produce counterexamples, recorded as findings.
    Report,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

/// Result of evaluating one check on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub detail: Option<String>,
}

impl Outcome {
    fn not_applicable() -> Self {
        Outcome {
            verdict: Verdict::NotApplicable,
            witness: None,
            detail: None,
        }
    }

    fn pass() -> Self {
        Outcome {
            verdict: Verdict::Pass,
            witness: None,
            detail: None,
        }
    }

    fn fail(note: impl Into<String>, facts: Vec<Fact>) -> Self {
        Outcome {
            verdict: Verdict::Fail,
            witness: Some(Witness::new(note, facts)),
            detail: None,
        }
    }

    fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

/// A named executable statement.
#[derive(Clone, Copy)]
pub struct Check {
    pub id: &'static str,
    pub name: &'static str,
    pub mode: Mode,
    eval: fn(&Instance) -> Outcome,
}

impl Check {
    pub fn evaluate(&self, instance: &Instance) -> Outcome {
        (self.eval)(instance)
    }
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check")
            .field("id", &self.id)
            .field("name", &self.name)
            .field("mode", &self.mode)
            .finish()
    }
}

macro_rules! check {
    ($id:literal, $mode:ident, $name:literal, $eval:expr) => {
        Check {
            id: $id,
            name: $name,
            mode: Mode::$mode,
            eval: $eval,
        }
    };
}

static REGISTRY: [Check; 30] = [
    check!("C1", Strict, "SSI has a universal vertex iff M has one minimal submodule or two minimals with a maximal sum over which every nonzero submodule is second", |i| universal_characterization(Side::Intersection, i)),
    check!("C2", Strict, "sec(M) is adjacent in SSI to every second submodule when M is not coreduced", |i| core_adjacent(Side::Intersection, i)),
    check!("C3", Strict, "sec(M) is the only minimal submodule iff sec(M) is universal in SSI when M is not coreduced", |i| core_universal(Side::Intersection, i)),
    check!("C4", Strict, "isolated vertices of SSI are exactly the submodules that are both minimal and maximal", |i| isolated_vertices(Side::Intersection, i)),
    check!("C5", Strict, "complete SSI forces one minimal submodule and every nonzero proper non-second submodule maximal", |i| complete_consequences(Side::Intersection, i)),
    check!("C6", Report, "one minimal submodule makes SSI complete", |i| unique_extremal_complete(Side::Intersection, i)),
    check!("C7", Strict, "for comultiplication modules SSI adjacency matches PIS adjacency of annihilators when Ann(N∩K) = Ann(N) + Ann(K)", annihilator_transfer),
    check!("C8", Strict, "SSI is connected iff M is not the direct sum of two minimal submodules, and then has diameter at most 2", |i| connectivity(Side::Intersection, i)),
    check!("C9", Strict, "connected SSI forces any two maximal submodules to meet nontrivially", maximals_meet),
    check!("C10", Strict, "two non-comparable adjacent vertices give SSI girth 3; otherwise every edge is comparable with a second endpoint", |i| noncomparable_girth(Side::Intersection, i)),
    check!("C11", Strict, "SSI girth g forces at least floor(g/2) second submodules", |i| girth_lower_bound(Side::Intersection, i)),
    check!("C12", Strict, "with k second submodules SSI is acyclic or has girth at most 2k", |i| girth_upper_bound(Side::Intersection, i)),
    check!("C13", Strict, "a uniform module whose nonzero submodules are all second has complete SSI", uniform_all_second),
    check!("C14", Strict, "a strong comultiplication module with complete SSI has complete PSS_TILDE", strong_comultiplication_transfer),
    check!("C15", Strict, "minimal submodules form a minimal dominating set of SSI, with the domination number characterized by the minimal submodules", |i| domination(Side::Intersection, i)),
    check!("D1", Strict, "PSS has a universal vertex iff M has one maximal submodule or two maximals with a minimal intersection under which every proper submodule is prime", |i| universal_characterization(Side::Sum, i)),
    check!("D2", Strict, "rad(M) is adjacent in PSS to every prime submodule when M is not reduced", |i| core_adjacent(Side::Sum, i)),
    check!("D3", Strict, "rad(M) is the only maximal submodule iff rad(M) is universal in PSS when M is not reduced", |i| core_universal(Side::Sum, i)),
    check!("D4", Strict, "isolated vertices of PSS are exactly the submodules that are both maximal and minimal", |i| isolated_vertices(Side::Sum, i)),
    check!("D5", Strict, "complete PSS forces one maximal submodule and every nonzero proper non-prime submodule minimal", |i| complete_consequences(Side::Sum, i)),
    check!("D6", Report, "one maximal submodule makes PSS complete", |i| unique_extremal_complete(Side::Sum, i)),
    check!("D7", Strict, "for multiplication modules PSS adjacency matches PIS adjacency of colon ideals", colon_transfer),
    check!("D8", Strict, "PSS is connected iff M is not the direct sum of two maximal submodules, and then has diameter at most 2", |i| connectivity(Side::Sum, i)),
    check!("D9", Report, "connected PSS forces any two minimal submodules to sum to M", minimals_sum),
    check!("D10", Strict, "two non-comparable adjacent vertices give PSS girth 3; otherwise every edge is comparable with a prime endpoint", |i| noncomparable_girth(Side::Sum, i)),
    check!("D11", Strict, "PSS girth g forces at least floor(g/2) prime submodules", |i| girth_lower_bound(Side::Sum, i)),
    check!("D12", Strict, "with k prime submodules PSS is acyclic or has girth at most 2k", |i| girth_upper_bound(Side::Sum, i)),
    check!("D13", Strict, "a hollow module whose proper submodules are all prime has complete PSS", hollow_all_prime),
    check!("D14", Strict, "a faithful multiplication module with complete PSS has complete SSI_TILDE", faithful_multiplication_transfer),
    check!("D15", Strict, "maximal submodules form a minimal dominating set of PSS, with the domination number characterized by the maximal submodules", |i| domination(Side::Sum, i)),
];

/// All checks in registry order.
pub fn list_checks() -> &'static [Check] {
    &REGISTRY
}

pub fn find_check(id: &str) -> Option<&'static Check> {
    REGISTRY
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id.trim()))
}

/// Which of the two graphs a statement is about, with everything that
/// dualizes along with it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    /// SSI: minimal, second, sec(M), meets.
    Intersection,
    /// PSS: maximal, prime, rad(M), sums.
    Sum,
}

impl Side {
    fn graph(self) -> GraphKind {
        match self {
            Side::Intersection => GraphKind::Ssi,
            Side::Sum => GraphKind::Pss,
        }
    }

    fn extremal_flag(self) -> Flag {
        match self {
            Side::Intersection => Flag::Minimal,
            Side::Sum => Flag::Maximal,
        }
    }

    fn opposite_flag(self) -> Flag {
        match self {
            Side::Intersection => Flag::Maximal,
            Side::Sum => Flag::Minimal,
        }
    }

    fn special_flag(self) -> Flag {
        match self {
            Side::Intersection => Flag::Second,
            Side::Sum => Flag::Prime,
        }
    }

    fn extremals(self, inst: &Instance) -> Vec<usize> {
        match self {
            Side::Intersection => inst.minimals(),
            Side::Sum => inst.maximals(),
        }
    }

    fn opposite(self) -> Side {
        match self {
            Side::Intersection => Side::Sum,
            Side::Sum => Side::Intersection,
        }
    }

    fn is_special(self, inst: &Instance, i: usize) -> bool {
        let f = inst.lattice.flags(i);
        match self {
            Side::Intersection => f.is_second,
            Side::Sum => f.is_prime,
        }
    }

    fn is_opposite(self, inst: &Instance, i: usize) -> bool {
        let f = inst.lattice.flags(i);
        match self {
            Side::Intersection => f.is_maximal,
            Side::Sum => f.is_minimal,
        }
    }

    /// The operation deciding adjacency: meet for SSI, join for PSS.
    fn op(self, inst: &Instance, a: usize, b: usize) -> usize {
        match self {
            Side::Intersection => inst.lattice.meet(a, b),
            Side::Sum => inst.lattice.join(a, b),
        }
    }

    fn op_fact(self, inst: &Instance, a: usize, b: usize) -> Fact {
        let result = self.op(inst, a, b);
        lattice_fact(self, inst, a, b, result)
    }

    fn co_op_fact(self, inst: &Instance, a: usize, b: usize) -> Fact {
        let result = self.opposite().op(inst, a, b);
        lattice_fact(self.opposite(), inst, a, b, result)
    }

    /// `i` lies strictly on the graph-operation side of `s`: strictly
    /// inside for SSI, strictly above for PSS.
    fn strictly_beyond(self, inst: &Instance, i: usize, s: usize) -> bool {
        i != s && self.op(inst, i, s) == i
    }

    /// Nonzero for SSI, proper for PSS: the submodules the dual
    /// statements quantify over.
    fn relevant(self, inst: &Instance, i: usize) -> bool {
        match self {
            Side::Intersection => inst.lattice.is_nonzero(i),
            Side::Sum => inst.lattice.is_proper(i),
        }
    }

    /// sec(M) or rad(M).
    fn core(self, inst: &Instance) -> usize {
        match self {
            Side::Intersection => inst.second_socle,
            Side::Sum => inst.prime_radical,
        }
    }

    fn core_fact(self, inst: &Instance) -> Fact {
        let result = inst.label(self.core(inst));
        match self {
            Side::Intersection => Fact::SecondSocle { result },
            Side::Sum => Fact::PrimeRadical { result },
        }
    }

    /// Not coreduced (SSI) or not reduced (PSS).
    fn core_hypothesis(self, inst: &Instance) -> (bool, Fact) {
        let (name, value) = match self {
            Side::Intersection => ("coreduced", inst.properties.coreduced),
            Side::Sum => ("reduced", inst.properties.reduced),
        };
        (
            !value,
            Fact::Property {
                property: name.to_string(),
                value,
            },
        )
    }
}

fn lattice_fact(side: Side, inst: &Instance, a: usize, b: usize, result: usize) -> Fact {
    let (a, b, result) = (inst.label(a), inst.label(b), inst.label(result));
    match side {
        Side::Intersection => Fact::Meet { a, b, result },
        Side::Sum => Fact::Join { a, b, result },
    }
}

fn flag_fact(inst: &Instance, i: usize, flag: Flag, value: bool) -> Fact {
    Fact::Flag {
        submodule: inst.label(i),
        flag,
        value,
    }
}

fn edge_fact(inst: &Instance, kind: GraphKind, a: usize, b: usize, present: bool) -> Fact {
    Fact::Edge {
        graph: kind,
        a: inst.label(a),
        b: inst.label(b),
        present,
    }
}

fn count_fact(flag: Flag, value: usize) -> Fact {
    Fact::Count { flag, value }
}

fn vertex_count(inst: &Instance, side: Side) -> usize {
    inst.graph(side.graph()).graph.vertex_count()
}

/// Whether the graph has a universal vertex, with facts establishing it.
fn universal_facts(side: Side, inst: &Instance) -> (bool, Vec<Fact>) {
    let g = inst.graph(side.graph());
    let vertex = |p: usize| inst.label(g.submodule_at(p));
    match g.metrics.universal_vertices.first() {
        Some(&p) => (
            true,
            vec![Fact::Universal {
                graph: side.graph(),
                vertex: vertex(p),
                value: true,
            }],
        ),
        None => (
            false,
            (0..g.graph.vertex_count())
                .map(|p| Fact::Universal {
                    graph: side.graph(),
                    vertex: vertex(p),
                    value: false,
                })
                .collect(),
        ),
    }
}

/// Two extremals whose co-operation is an opposite extremal, with no
/// relevant non-special submodule strictly beyond it. For SSI: two minimals
/// with a maximal sum containing no nonzero non-second proper submodule.
fn two_extremal_condition(side: Side, inst: &Instance) -> (bool, Vec<Fact>) {
    let ext = side.extremals(inst);
    if ext.len() != 2 {
        return (false, vec![count_fact(side.extremal_flag(), ext.len())]);
    }
    let (a, b) = (ext[0], ext[1]);
    let s = side.opposite().op(inst, a, b);
    let mut facts = vec![
        count_fact(side.extremal_flag(), 2),
        side.co_op_fact(inst, a, b),
    ];
    let s_opposite = side.is_opposite(inst, s);
    facts.push(flag_fact(inst, s, side.opposite_flag(), s_opposite));
    if !s_opposite {
        return (false, facts);
    }
    let offender = (0..inst.lattice.len()).find(|&i| {
        side.relevant(inst, i) && side.strictly_beyond(inst, i, s) && !side.is_special(inst, i)
    });
    match offender {
        Some(i) => {
            facts.push(side.op_fact(inst, i, s));
            facts.push(flag_fact(inst, i, side.special_flag(), false));
            (false, facts)
        }
        None => (true, facts),
    }
}

fn universal_characterization(side: Side, inst: &Instance) -> Outcome {
    if vertex_count(inst, side) < 2 {
        return Outcome::not_applicable();
    }
    let (universal, mut facts) = universal_facts(side, inst);
    let unique = side.extremals(inst).len() == 1;
    let (pair, pair_facts) = two_extremal_condition(side, inst);
    if universal == (unique || pair) {
        return Outcome::pass();
    }
    facts.extend(pair_facts);
    let note = if universal {
        "universal vertex without the extremal-submodule condition"
    } else {
        "extremal-submodule condition holds without a universal vertex"
    };
    Outcome::fail(note, facts)
}

fn core_adjacent(side: Side, inst: &Instance) -> Outcome {
    let core = side.core(inst);
    let (hypothesis, _) = side.core_hypothesis(inst);
    if !hypothesis || inst.graph(side.graph()).position(core).is_none() {
        return Outcome::not_applicable();
    }
    let g = inst.graph(side.graph());
    for v in inst.vertices() {
        if v != core && side.is_special(inst, v) && !g.adjacent(core, v) {
            return Outcome::fail(
                "core submodule not adjacent to a special vertex",
                vec![
                    side.core_hypothesis(inst).1,
                    side.core_fact(inst),
                    flag_fact(inst, v, side.special_flag(), true),
                    edge_fact(inst, side.graph(), core, v, false),
                ],
            );
        }
    }
    Outcome::pass()
}

fn core_universal(side: Side, inst: &Instance) -> Outcome {
    let core = side.core(inst);
    let (hypothesis, hypothesis_fact) = side.core_hypothesis(inst);
    let g = inst.graph(side.graph());
    if !hypothesis || g.position(core).is_none() || g.graph.vertex_count() < 2 {
        return Outcome::not_applicable();
    }
    let ext = side.extremals(inst);
    let only = ext == [core];
    let universal = g.is_universal(core);
    if only == universal {
        return Outcome::pass();
    }
    Outcome::fail(
        if universal {
            "core submodule is universal but not the only extremal submodule"
        } else {
            "core submodule is the only extremal submodule but not universal"
        },
        vec![
            hypothesis_fact,
            side.core_fact(inst),
            count_fact(side.extremal_flag(), ext.len()),
            flag_fact(inst, core, side.extremal_flag(), ext.contains(&core)),
            Fact::Universal {
                graph: side.graph(),
                vertex: inst.label(core),
                value: universal,
            },
        ],
    )
}

fn isolated_vertices(side: Side, inst: &Instance) -> Outcome {
    if vertex_count(inst, side) < 2 {
        return Outcome::not_applicable();
    }
    let g = inst.graph(side.graph());
    for v in inst.vertices() {
        let f = inst.lattice.flags(v);
        let both = f.is_minimal && f.is_maximal;
        let isolated = g.is_isolated(v);
        if both != isolated {
            return Outcome::fail(
                "isolation disagrees with being minimal and maximal",
                vec![
                    Fact::Isolated {
                        graph: side.graph(),
                        vertex: inst.label(v),
                        value: isolated,
                    },
                    flag_fact(inst, v, Flag::Minimal, f.is_minimal),
                    flag_fact(inst, v, Flag::Maximal, f.is_maximal),
                ],
            );
        }
    }
    Outcome::pass()
}

fn complete_consequences(side: Side, inst: &Instance) -> Outcome {
    let g = inst.graph(side.graph());
    if g.graph.vertex_count() < 2 || !g.metrics.is_complete {
        return Outcome::not_applicable();
    }
    let complete = Fact::Complete {
        graph: side.graph(),
        value: true,
    };
    let ext = side.extremals(inst);
    if ext.len() != 1 {
        return Outcome::fail(
            "complete graph with several extremal submodules",
            vec![complete, count_fact(side.extremal_flag(), ext.len())],
        );
    }
    let offender = inst
        .vertices()
        .into_iter()
        .find(|&v| !side.is_special(inst, v) && !side.is_opposite(inst, v));
    match offender {
        Some(v) => Outcome::fail(
            "complete graph with a non-special vertex that is not opposite-extremal",
            vec![
                complete,
                flag_fact(inst, v, side.special_flag(), false),
                flag_fact(inst, v, side.opposite_flag(), false),
            ],
        ),
        None => Outcome::pass(),
    }
}

fn unique_extremal_complete(side: Side, inst: &Instance) -> Outcome {
    let g = inst.graph(side.graph());
    let ext = side.extremals(inst);
    if g.graph.vertex_count() < 2 || ext.len() != 1 {
        return Outcome::not_applicable();
    }
    let adjacency = &g.graph.adjacency;
    let n = adjacency.len();
    let missing = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| !adjacency.has_edge(a, b));
    match missing {
        None => Outcome::pass(),
        Some((a, b)) => {
            let (a, b) = (g.submodule_at(a), g.submodule_at(b));
            let result = side.op(inst, a, b);
            Outcome::fail(
                "unique extremal submodule but the graph is not complete",
                vec![
                    count_fact(side.extremal_flag(), 1),
                    flag_fact(inst, ext[0], side.extremal_flag(), true),
                    edge_fact(inst, side.graph(), a, b, false),
                    side.op_fact(inst, a, b),
                    flag_fact(inst, result, side.special_flag(), false),
                ],
            )
        }
    }
}

/// Pairs of distinct vertices in canonical order.
fn vertex_pairs(inst: &Instance) -> Vec<(usize, usize)> {
    let v = inst.vertices();
    let mut pairs = Vec::new();
    for (x, &a) in v.iter().enumerate() {
        for &b in &v[x + 1..] {
            pairs.push((a, b));
        }
    }
    pairs
}

fn pis_adjacent(inst: &Instance, a: &crate::algebra::Ideal, b: &crate::algebra::Ideal) -> bool {
    let g = &inst.pis.graph;
    match (g.position_of_ideal(a), g.position_of_ideal(b)) {
        (Some(x), Some(y)) => g.has_edge(x, y),
        _ => false,
    }
}

fn pis_edge_fact(a: &crate::algebra::Ideal, b: &crate::algebra::Ideal, present: bool) -> Fact {
    Fact::Edge {
        graph: GraphKind::Pis,
        a: a.label(),
        b: b.label(),
        present,
    }
}

fn annihilator_transfer(inst: &Instance) -> Outcome {
    if !inst.properties.comultiplication {
        return Outcome::not_applicable();
    }
    let lattice = &inst.lattice;
    let mut examined = 0;
    for (n, k) in vertex_pairs(inst) {
        let (ann_n, ann_k) = (lattice.annihilator(n), lattice.annihilator(k));
        if lattice.annihilator(lattice.meet(n, k)) != ann_n.sum(&ann_k) {
            continue;
        }
        examined += 1;
        let in_ssi = inst.ssi.adjacent(n, k);
        let in_pis = pis_adjacent(inst, &ann_n, &ann_k);
        if in_ssi != in_pis {
            let mut facts = vec![
                Fact::Property {
                    property: "comultiplication".into(),
                    value: true,
                },
                edge_fact(inst, GraphKind::Ssi, n, k, in_ssi),
            ];
            let pis = &inst.pis.graph;
            if pis.position_of_ideal(&ann_n).is_some() && pis.position_of_ideal(&ann_k).is_some() {
                facts.push(pis_edge_fact(&ann_n, &ann_k, in_pis));
            }
            return Outcome::fail(
                format!(
                    "Ann({}) = {} and Ann({}) = {} disagree with SSI adjacency",
                    inst.label(n),
                    ann_n.label(),
                    inst.label(k),
                    ann_k.label()
                ),
                facts,
            );
        }
    }
    if examined == 0 {
        Outcome::not_applicable()
    } else {
        Outcome::pass()
    }
}

fn colon_transfer(inst: &Instance) -> Outcome {
    if !inst.properties.multiplication {
        return Outcome::not_applicable();
    }
    let lattice = &inst.lattice;
    let mut examined = 0;
    for (n, k) in vertex_pairs(inst) {
        let (col_n, col_k) = (lattice.colon(n), lattice.colon(k));
        if col_n == col_k || !col_n.is_nontrivial() || !col_k.is_nontrivial() {
            continue;
        }
        examined += 1;
        let in_pss = inst.pss.adjacent(n, k);
        let in_pis = pis_adjacent(inst, &col_n, &col_k);
        if in_pss != in_pis {
            return Outcome::fail(
                format!(
                    "({} : M) = {} and ({} : M) = {} disagree with PSS adjacency",
                    inst.label(n),
                    col_n.label(),
                    inst.label(k),
                    col_k.label()
                ),
                vec![
                    Fact::Property {
                        property: "multiplication".into(),
                        value: true,
                    },
                    edge_fact(inst, GraphKind::Pss, n, k, in_pss),
                    pis_edge_fact(&col_n, &col_k, in_pis),
                ],
            );
        }
    }
    if examined == 0 {
        Outcome::not_applicable()
    } else {
        Outcome::pass()
    }
}

/// Two distinct extremals forming a direct sum decomposition of `M`.
fn direct_sum_pair(side: Side, inst: &Instance) -> Option<(usize, usize)> {
    let ext = side.extremals(inst);
    let lattice = &inst.lattice;
    for (x, &a) in ext.iter().enumerate() {
        for &b in &ext[x + 1..] {
            if lattice.join(a, b) == lattice.top() && lattice.meet(a, b) == lattice.zero() {
                return Some((a, b));
            }
        }
    }
    None
}

fn connectivity(side: Side, inst: &Instance) -> Outcome {
    let g = inst.graph(side.graph());
    if g.graph.vertex_count() < 2 {
        return Outcome::not_applicable();
    }
    let connected = g.metrics.is_connected;
    let connected_fact = Fact::Connected {
        graph: side.graph(),
        value: connected,
    };
    match direct_sum_pair(side, inst) {
        Some((a, b)) if connected => {
            return Outcome::fail(
                "connected although M is a direct sum of two extremal submodules",
                vec![
                    connected_fact,
                    flag_fact(inst, a, side.extremal_flag(), true),
                    flag_fact(inst, b, side.extremal_flag(), true),
                    lattice_fact(Side::Sum, inst, a, b, inst.lattice.top()),
                    lattice_fact(Side::Intersection, inst, a, b, inst.lattice.zero()),
                ],
            );
        }
        None if !connected => {
            let ext = side.extremals(inst);
            let mut facts = vec![connected_fact, count_fact(side.extremal_flag(), ext.len())];
            for (x, &a) in ext.iter().enumerate() {
                for &b in &ext[x + 1..] {
                    let (join, meet) = (inst.lattice.join(a, b), inst.lattice.meet(a, b));
                    facts.push(lattice_fact(Side::Sum, inst, a, b, join));
                    facts.push(lattice_fact(Side::Intersection, inst, a, b, meet));
                }
            }
            return Outcome::fail(
                "disconnected although M is not a direct sum of two extremal submodules",
                facts,
            );
        }
        _ => {}
    }
    if connected && g.metrics.diameter > Extended::Finite(2) {
        return Outcome::fail(
            "connected with diameter above 2",
            vec![
                connected_fact,
                Fact::Diameter {
                    graph: side.graph(),
                    value: g.metrics.diameter,
                },
            ],
        );
    }
    Outcome::pass()
}

fn maximals_meet(inst: &Instance) -> Outcome {
    let maxs = inst.maximals();
    if inst.ssi.graph.vertex_count() < 2 || !inst.ssi.metrics.is_connected || maxs.len() < 2 {
        return Outcome::not_applicable();
    }
    for (x, &a) in maxs.iter().enumerate() {
        for &b in &maxs[x + 1..] {
            if inst.lattice.meet(a, b) == inst.lattice.zero() {
                return Outcome::fail(
                    "two maximal submodules meet in zero although SSI is connected",
                    vec![
                        Fact::Connected {
                            graph: GraphKind::Ssi,
                            value: true,
                        },
                        flag_fact(inst, a, Flag::Maximal, true),
                        flag_fact(inst, b, Flag::Maximal, true),
                        lattice_fact(Side::Intersection, inst, a, b, inst.lattice.zero()),
                    ],
                );
            }
        }
    }
    Outcome::pass()
}

fn minimals_sum(inst: &Instance) -> Outcome {
    let mins = inst.minimals();
    if inst.pss.graph.vertex_count() < 2 || !inst.pss.metrics.is_connected {
        return Outcome::not_applicable();
    }
    let top = inst.lattice.top();
    let mut literal_breaker = None;
    let mut proof_breaker = None;
    for (x, &a) in mins.iter().enumerate() {
        for &b in &mins[x + 1..] {
            let full = inst.lattice.join(a, b) == top;
            if !full && literal_breaker.is_none() {
                literal_breaker = Some((a, b));
            }
            if full && proof_breaker.is_none() {
                proof_breaker = Some((a, b));
            }
        }
    }
    let detail = format!(
        "literal={}, proof_consistent={}",
        literal_breaker.is_none(),
        proof_breaker.is_none()
    );
    let outcome = match literal_breaker {
        None => Outcome::pass(),
        Some((a, b)) => Outcome::fail(
            "two minimal submodules with sum different from M although PSS is connected",
            vec![
                Fact::Connected {
                    graph: GraphKind::Pss,
                    value: true,
                },
                flag_fact(inst, a, Flag::Minimal, true),
                flag_fact(inst, b, Flag::Minimal, true),
                lattice_fact(Side::Sum, inst, a, b, inst.lattice.join(a, b)),
            ],
        ),
    };
    outcome.with_detail(detail)
}

fn noncomparable_girth(side: Side, inst: &Instance) -> Outcome {
    let g = inst.graph(side.graph());
    if g.metrics.edge_count == 0 {
        return Outcome::not_applicable();
    }
    let lattice = &inst.lattice;
    let girth = g.metrics.girth;
    let girth_fact = Fact::Girth {
        graph: side.graph(),
        value: girth,
    };
    for (a, b) in g.graph.edges() {
        let (n, k) = (g.submodule_at(a), g.submodule_at(b));
        let comparable = lattice.contains(n, k) || lattice.contains(k, n);
        if !comparable && girth != Extended::Finite(3) {
            return Outcome::fail(
                "non-comparable adjacent vertices without a triangle",
                vec![
                    edge_fact(inst, side.graph(), n, k, true),
                    side.op_fact(inst, n, k),
                    girth_fact,
                ],
            );
        }
        let special = side.is_special(inst, n) || side.is_special(inst, k);
        if girth > Extended::Finite(3) && !special {
            return Outcome::fail(
                "edge without a special endpoint in a graph of girth above 3",
                vec![
                    edge_fact(inst, side.graph(), n, k, true),
                    girth_fact,
                    flag_fact(inst, n, side.special_flag(), false),
                    flag_fact(inst, k, side.special_flag(), false),
                ],
            );
        }
    }
    Outcome::pass()
}

fn special_count(side: Side, inst: &Instance) -> usize {
    match side {
        Side::Intersection => inst.lattice.seconds().len(),
        Side::Sum => inst.lattice.primes().len(),
    }
}

fn girth_lower_bound(side: Side, inst: &Instance) -> Outcome {
    let g = inst.graph(side.graph());
    let Extended::Finite(girth) = g.metrics.girth else {
        return Outcome::not_applicable();
    };
    let count = special_count(side, inst);
    if count >= girth / 2 {
        return Outcome::pass();
    }
    Outcome::fail(
        "too few special submodules for the girth",
        vec![
            Fact::Girth {
                graph: side.graph(),
                value: g.metrics.girth,
            },
            count_fact(side.special_flag(), count),
        ],
    )
}

fn girth_upper_bound(side: Side, inst: &Instance) -> Outcome {
    let g = inst.graph(side.graph());
    let Extended::Finite(girth) = g.metrics.girth else {
        return Outcome::not_applicable();
    };
    let count = special_count(side, inst);
    if girth <= 2 * count {
        return Outcome::pass();
    }
    Outcome::fail(
        "girth exceeds twice the number of special submodules",
        vec![
            Fact::Girth {
                graph: side.graph(),
                value: g.metrics.girth,
            },
            count_fact(side.special_flag(), count),
        ],
    )
}

fn complete_or_witness(inst: &Instance, kind: GraphKind, hypotheses: Vec<Fact>) -> Outcome {
    let g = inst.graph(kind);
    if g.metrics.is_complete {
        return Outcome::pass();
    }
    let mut facts = hypotheses;
    facts.push(Fact::Complete {
        graph: kind,
        value: false,
    });
    Outcome::fail(format!("{kind} is not complete"), facts)
}

fn uniform_all_second(inst: &Instance) -> Outcome {
    let lattice = &inst.lattice;
    let all_second = (0..lattice.len())
        .filter(|&i| lattice.is_nonzero(i))
        .all(|i| lattice.flags(i).is_second);
    if !inst.properties.uniform || !all_second || inst.ssi.graph.vertex_count() < 2 {
        return Outcome::not_applicable();
    }
    complete_or_witness(
        inst,
        GraphKind::Ssi,
        vec![Fact::Property {
            property: "uniform".into(),
            value: true,
        }],
    )
}

fn hollow_all_prime(inst: &Instance) -> Outcome {
    let lattice = &inst.lattice;
    let all_prime = (0..lattice.len())
        .filter(|&i| lattice.is_proper(i))
        .all(|i| lattice.flags(i).is_prime);
    if !inst.properties.hollow || !all_prime || inst.pss.graph.vertex_count() < 2 {
        return Outcome::not_applicable();
    }
    complete_or_witness(
        inst,
        GraphKind::Pss,
        vec![Fact::Property {
            property: "hollow".into(),
            value: true,
        }],
    )
}

fn strong_comultiplication_transfer(inst: &Instance) -> Outcome {
    let applies = inst.properties.strong_comultiplication
        && inst.ssi.graph.vertex_count() >= 2
        && inst.ssi.metrics.is_complete
        && inst.pss_tilde.graph.vertex_count() >= 2;
    if !applies {
        return Outcome::not_applicable();
    }
    complete_or_witness(
        inst,
        GraphKind::PssTilde,
        vec![
            Fact::Property {
                property: "strong_comultiplication".into(),
                value: true,
            },
            Fact::Complete {
                graph: GraphKind::Ssi,
                value: true,
            },
        ],
    )
}

fn faithful_multiplication_transfer(inst: &Instance) -> Outcome {
    let applies = inst.properties.faithful
        && inst.properties.multiplication
        && inst.pss.graph.vertex_count() >= 2
        && inst.pss.metrics.is_complete
        && inst.ssi_tilde.graph.vertex_count() >= 2;
    if !applies {
        return Outcome::not_applicable();
    }
    complete_or_witness(
        inst,
        GraphKind::SsiTilde,
        vec![
            Fact::Property {
                property: "faithful".into(),
                value: true,
            },
            Fact::Property {
                property: "multiplication".into(),
                value: true,
            },
            Fact::Complete {
                graph: GraphKind::Pss,
                value: true,
            },
        ],
    )
}

fn domination(side: Side, inst: &Instance) -> Outcome {
    let g = inst.graph(side.graph());
    if g.graph.vertex_count() < 2 {
        return Outcome::not_applicable();
    }
    let kind = side.graph();
    let ext = side.extremals(inst);
    let labels: Vec<String> = ext.iter().map(|&i| inst.label(i)).collect();
    let adjacency = &g.graph.adjacency;
    let positions: Vec<usize> = ext.iter().filter_map(|&i| g.position(i)).collect();
    let dominates = |set: &[usize]| {
        !set.is_empty()
            && (0..adjacency.len())
                .all(|v| set.contains(&v) || set.iter().any(|&c| adjacency.has_edge(v, c)))
    };

    if !dominates(&positions) {
        return Outcome::fail(
            "extremal submodules do not dominate",
            vec![Fact::Dominates {
                graph: kind,
                set: labels,
                value: false,
            }],
        );
    }
    for skip in 0..positions.len() {
        let mut smaller = positions.clone();
        smaller.remove(skip);
        if dominates(&smaller) {
            let mut smaller_labels = labels.clone();
            smaller_labels.remove(skip);
            return Outcome::fail(
                "extremal submodules are not a minimal dominating set",
                vec![Fact::Dominates {
                    graph: kind,
                    set: smaller_labels,
                    value: true,
                }],
            );
        }
    }

    let gamma = g.metrics.domination_number;
    let gamma_fact = Fact::DominationNumber {
        graph: kind,
        value: gamma,
    };
    if gamma > ext.len() {
        return Outcome::fail(
            "domination number exceeds the number of extremal submodules",
            vec![gamma_fact, count_fact(side.extremal_flag(), ext.len())],
        );
    }
    let (pair, pair_facts) = two_extremal_condition(side, inst);
    let characterized = ext.len() == 1 || pair;
    if (gamma == 1) != characterized {
        let mut facts = vec![gamma_fact];
        facts.extend(pair_facts);
        if ext.len() != 2 {
            facts.push(count_fact(side.extremal_flag(), ext.len()));
        }
        return Outcome::fail(
            if gamma == 1 {
                "domination number 1 without the extremal-submodule condition"
            } else {
                "extremal-submodule condition holds but domination number exceeds 1"
            },
            facts,
        );
    }
    if ext.len() == 2 && !pair && gamma != 2 {
        let mut facts = vec![gamma_fact];
        facts.extend(pair_facts);
        return Outcome::fail(
            "two extremal submodules failing the condition but domination number is not 2",
            facts,
        );
    }
    Outcome::pass()
}
