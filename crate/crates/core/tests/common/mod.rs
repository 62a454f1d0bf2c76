//! Brute-force references for the integration tests.
//!
//! Element arithmetic is rebuilt here from the invariant factors, and every
//! predicate is decided straight from its definition on plain element sets.
//! Element ids follow the mixed-radix convention (first coordinate most
//! significant); if the library ever changed it, set comparisons would fail.

#![allow(dead_code)]

use std::collections::BTreeSet;

use modgraph::graph::Adjacency;
use modgraph::{FiniteModule, SubmoduleLattice};

pub const ACCEPTANCE_FAMILY: &str = "cyclic:2..60;product:ab<=64;vector:2^3;vector:3^3";

pub type Set = BTreeSet<u32>;

/// A module given only by its invariant factors and ring modulus.
#[derive(Clone, Debug)]
pub struct RawModule {
    pub factors: Vec<u32>,
    pub n: u32,
    pub order: u32,
}

impl RawModule {
    pub fn new(factors: &[u32], n: u32) -> Self {
        RawModule {
            factors: factors.to_vec(),
            n,
            order: factors.iter().product(),
        }
    }

    pub fn of(module: &FiniteModule) -> Self {
        RawModule::new(module.factors(), module.ring().modulus())
    }

    pub fn coords(&self, mut x: u32) -> Vec<u32> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = x % d;
            x /= d;
        }
        out
    }

    pub fn id(&self, coords: &[u32]) -> u32 {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&a, &d)| acc * d + a % d)
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        let (a, b) = (self.coords(x), self.coords(y));
        let sum: Vec<u32> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
        self.id(&sum)
    }

    pub fn scale(&self, r: u32, x: u32) -> u32 {
        let a = self.coords(x);
        let scaled: Vec<u32> = a
            .iter()
            .zip(&self.factors)
            .map(|(&c, &d)| ((u64::from(r) * u64::from(c)) % u64::from(d)) as u32)
            .collect();
        self.id(&scaled)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order
    }

    pub fn full(&self) -> Set {
        self.elements().collect()
    }

    /// Smallest set containing `seed` and 0 that is closed under addition
    /// and the ring action, by naive fixpoint iteration.
    pub fn closure(&self, seed: &Set) -> Set {
        let mut set = seed.clone();
        set.insert(0);
        loop {
            let mut grown = set.clone();
            for &x in &set {
                for &y in &set {
                    grown.insert(self.add(x, y));
                }
                for r in 0..self.n {
                    grown.insert(self.scale(r, x));
                }
            }
            if grown.len() == set.len() {
                return set;
            }
            set = grown;
        }
    }

    pub fn is_closed(&self, set: &Set) -> bool {
        set.contains(&0)
            && set
                .iter()
                .all(|&x| set.iter().all(|&y| set.contains(&self.add(x, y))))
            && set
                .iter()
                .all(|&x| (0..self.n).all(|r| set.contains(&self.scale(r, x))))
    }

    pub fn scaled(&self, r: u32, set: &Set) -> Set {
        set.iter().map(|&x| self.scale(r, x)).collect()
    }

    pub fn sum(&self, a: &Set, b: &Set) -> Set {
        a.iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.add(x, y))
            .collect()
    }

    pub fn meet(&self, a: &Set, b: &Set) -> Set {
        a.intersection(b).copied().collect()
    }

    /// Nonzero `S` with `rS ∈ {0, S}` for every ring element `r`.
    pub fn is_second(&self, s: &Set) -> bool {
        s.len() > 1
            && (0..self.n).all(|r| {
                let image = self.scaled(r, s);
                image.len() == 1 || image == *s
            })
    }

    /// Ring elements carrying all of `M` into `s`.
    pub fn colon(&self, s: &Set) -> Set {
        (0..self.n)
            .filter(|&r| self.elements().all(|m| s.contains(&self.scale(r, m))))
            .collect()
    }

    /// Ring elements killing `s`.
    pub fn annihilator(&self, s: &Set) -> Set {
        (0..self.n)
            .filter(|&r| s.iter().all(|&m| self.scale(r, m) == 0))
            .collect()
    }

    /// Proper `P` with `rm ∈ P ⇒ m ∈ P or r ∈ (P : M)`.
    pub fn is_prime(&self, p: &Set) -> bool {
        if p.len() == self.order as usize {
            return false;
        }
        let colon = self.colon(p);
        (0..self.n).all(|r| {
            colon.contains(&r)
                || self
                    .elements()
                    .all(|m| p.contains(&m) || !p.contains(&self.scale(r, m)))
        })
    }

    /// The ideal `dZ_n` with `d` the least positive element (or `n`).
    pub fn ideal_divisor(&self, ideal: &Set) -> u32 {
        ideal.iter().copied().find(|&r| r > 0).unwrap_or(self.n)
    }
}

/// Ideal arithmetic on raw element sets of `Z_n`.
pub fn ideal_sum(n: u32, a: &Set, b: &Set) -> Set {
    let ring = RawModule::new(&[n], n);
    ring.closure(&ring.sum(a, b))
}

pub fn ideal_is_prime(n: u32, ideal: &Set) -> bool {
    ideal.len() < n as usize
        && (0..n).all(|a| {
            (0..n).all(|b| {
                !ideal.contains(&((u64::from(a) * u64::from(b) % u64::from(n)) as u32))
                    || ideal.contains(&a)
                    || ideal.contains(&b)
            })
        })
}

/// Proper nonzero ideal.
pub fn ideal_is_nontrivial(n: u32, ideal: &Set) -> bool {
    ideal.len() > 1 && ideal.len() < n as usize
}

/// Element sets of the lattice members, in lattice order.
pub fn lattice_sets(lattice: &SubmoduleLattice) -> Vec<Set> {
    lattice
        .all()
        .iter()
        .map(|s| s.elements().iter().copied().collect())
        .collect()
}

// ---- subgroup enumeration oracles on u64 bitmasks (|M| ≤ 64) ----

fn mask_closure(raw: &RawModule, add: &[Vec<u32>], mask: u64) -> u64 {
    let mut set = mask | 1;
    loop {
        let mut grown = set;
        for x in 0..raw.order {
            if set >> x & 1 == 0 {
                continue;
            }
            for y in 0..raw.order {
                if set >> y & 1 == 1 {
                    grown |= 1 << add[x as usize][y as usize];
                }
            }
        }
        if grown == set {
            return set;
        }
        set = grown;
    }
}

fn add_table(raw: &RawModule) -> Vec<Vec<u32>> {
    (0..raw.order)
        .map(|x| (0..raw.order).map(|y| raw.add(x, y)).collect())
        .collect()
}

fn mask_to_set(mask: u64) -> Set {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn closed_under_action(raw: &RawModule, mask: u64) -> bool {
    (0..raw.order)
        .filter(|&x| mask >> x & 1 == 1)
        .all(|x| (0..raw.n).all(|r| mask >> raw.scale(r, x) & 1 == 1))
}

/// Every subset containing 0, tested for closure. Only for `|M| ≤ 16`.
pub fn power_set_submodules(raw: &RawModule) -> BTreeSet<Set> {
    assert!(raw.order <= 16);
    let add = add_table(raw);
    let mut out = BTreeSet::new();
    for rest in 0u64..(1 << (raw.order - 1)) {
        let mask = (rest << 1) | 1;
        let closed = (0..raw.order).all(|x| {
            mask >> x & 1 == 0
                || (0..raw.order)
                    .all(|y| mask >> y & 1 == 0 || mask >> add[x as usize][y as usize] & 1 == 1)
        });
        if closed && closed_under_action(raw, mask) {
            out.insert(mask_to_set(mask));
        }
    }
    out
}

/// All closed subsets in lectic order by Ganter's NextClosure, using the
/// naive closure above. Visits exactly the closed sets, so it scales to
/// `|M| = 64` where the power set does not.
pub fn next_closure_submodules(raw: &RawModule) -> BTreeSet<Set> {
    assert!(raw.order <= 64);
    let add = add_table(raw);
    let n = raw.order;
    let cl = |mask: u64| {
        let c = mask_closure(raw, &add, mask);
        assert!(
            closed_under_action(raw, c),
            "additive closure is a submodule"
        );
        c
    };
    let below = |i: u32| if i == 0 { 0 } else { u64::MAX >> (64 - i) };
    let mut out = BTreeSet::new();
    let mut current = cl(0);
    'outer: loop {
        out.insert(mask_to_set(current));
        for i in (0..n).rev() {
            if current >> i & 1 == 1 {
                continue;
            }
            let candidate = cl((current & below(i)) | 1 << i);
            if candidate & below(i) == current & below(i) {
                current = candidate;
                continue 'outer;
            }
        }
        return out;
    }
}

// ---- graph oracles ----

/// Distances from matrix powers: `d(a, b)` is the least `k` for which a
/// walk of length `k` exists.
pub fn walk_distances(adj: &Adjacency) -> Vec<Vec<Option<usize>>> {
    let n = adj.len();
    let mut dist = vec![vec![None; n]; n];
    let mut reach: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for k in 1..n.max(1) {
        let next: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).any(|m| reach[i][m] && adj.has_edge(m, j)))
                    .collect()
            })
            .collect();
        for i in 0..n {
            for j in 0..n {
                if next[i][j] && dist[i][j].is_none() {
                    dist[i][j] = Some(k);
                }
            }
        }
        reach = next;
    }
    dist
}

/// `(connected, diameter)` with `None` for an infinite diameter.
pub fn oracle_diameter(adj: &Adjacency) -> Option<usize> {
    let dist = walk_distances(adj);
    let mut best = 0;
    for row in &dist {
        for d in row {
            best = best.max((*d)?);
        }
    }
    Some(best)
}

/// Shortest simple cycle by depth-first enumeration of simple paths that
/// start at their smallest vertex.
pub fn oracle_girth(adj: &Adjacency) -> Option<usize> {
    fn extend(
        adj: &Adjacency,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        best: &mut Option<usize>,
    ) {
        let last = *path.last().unwrap();
        if best.is_some_and(|b| path.len() >= b) {
            return;
        }
        for w in 0..adj.len() {
            if !adj.has_edge(last, w) {
                continue;
            }
            if w == start && path.len() >= 3 {
                *best = Some(best.map_or(path.len(), |b| b.min(path.len())));
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(adj, start, path, on_path, best);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    let mut best = None;
    for start in 0..adj.len() {
        let mut on_path = vec![false; adj.len()];
        on_path[start] = true;
        extend(adj, start, &mut vec![start], &mut on_path, &mut best);
    }
    best
}

pub fn dominates(adj: &Adjacency, set: &[usize]) -> bool {
    (0..adj.len()).all(|v| set.contains(&v) || set.iter().any(|&c| adj.has_edge(v, c)))
}

/// Minimum dominating set size by trying every subset (≤ 15 vertices).
pub fn oracle_domination(adj: &Adjacency) -> usize {
    let n = adj.len();
    assert!(n <= 15);
    if n == 0 {
        return 0;
    }
    (1u32..1 << n)
        .filter(|mask| {
            let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            dominates(adj, &set)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}
