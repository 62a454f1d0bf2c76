use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::module::FiniteModule;
use super::ring::Ideal;
use super::submodule::{annihilator, colon_ideal, cyclic_members, extend_by, Submodule};
use crate::error::{Error, Result};

/// Limits that keep enumeration and the all-pairs graph work tractable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_order: u64,
    pub max_lattice: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_order: 4096,
            max_lattice: 20_000,
        }
    }
}

impl SizeGuard {
    pub fn check_order(&self, module: &FiniteModule) -> Result<()> {
        let order = u64::from(module.order());
        if order > self.max_order {
            return Err(Error::OrderGuard {
                order,
                limit: self.max_order,
            });
        }
        Ok(())
    }
}

/// Classification of one submodule inside its lattice.
///
/// `is_prime` is false for `M` and `is_second` is false for `0`; minimal and
/// maximal are taken among the nonzero proper submodules only.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SubmoduleFlags {
    pub is_prime: bool,
    pub is_second: bool,
    pub is_minimal: bool,
    pub is_maximal: bool,
    pub is_large: bool,
    pub is_small: bool,
}

/// Every submodule of a finite module, sorted by canonical key, with the
/// classification flags, colon ideals and annihilators precomputed.
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    module: Arc<FiniteModule>,
    all: Vec<Submodule>,
    flags: Vec<SubmoduleFlags>,
    colons: Vec<Ideal>,
    annihilators: Vec<Ideal>,
    index: HashMap<FixedBitSet, usize>,
    top: usize,
}

pub fn enumerate_submodules(module: &FiniteModule) -> Result<SubmoduleLattice> {
    enumerate_submodules_with(module, SizeGuard::default())
}

/// Seeds with every cyclic submodule, then joins each member with each
/// cyclic seed until no new submodule appears.
///
/// Every join of lattice members is a join of cyclic submodules, so this
/// reaches the same fixpoint as closing under all pairwise joins.
pub fn enumerate_submodules_with(
    module: &FiniteModule,
    guard: SizeGuard,
) -> Result<SubmoduleLattice> {
    guard.check_order(module)?;
    let module = Arc::new(module.clone());

    let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
    let mut found: Vec<FixedBitSet> = Vec::new();
    let mut seeds: Vec<u32> = Vec::new();
    for x in module.elements() {
        let members = cyclic_members(&module, x);
        if seen.insert(members.clone(), ()).is_none() {
            found.push(members);
            seeds.push(x);
        }
    }
    if found.len() > guard.max_lattice {
        return Err(Error::LatticeGuard {
            limit: guard.max_lattice,
        });
    }

    let mut queue: VecDeque<usize> = (0..found.len()).collect();
    while let Some(i) = queue.pop_front() {
        for &g in &seeds {
            if found[i].contains(g as usize) {
                continue;
            }
            let mut joined = found[i].clone();
            extend_by(&module, &mut joined, g);
            if seen.insert(joined.clone(), ()).is_none() {
                found.push(joined);
                queue.push_back(found.len() - 1);
                if found.len() > guard.max_lattice {
                    return Err(Error::LatticeGuard {
                        limit: guard.max_lattice,
                    });
                }
            }
        }
    }

    let all: Vec<Submodule> = found
        .into_iter()
        .map(|members| Submodule::from_closed_set(&module, members))
        .collect();
    Ok(SubmoduleLattice::from_submodules(module, all))
}

impl SubmoduleLattice {
    fn from_submodules(module: Arc<FiniteModule>, mut all: Vec<Submodule>) -> Self {
        all.sort();
        let index = all
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        let colons = all.iter().map(colon_ideal).collect();
        let annihilators = all.iter().map(annihilator).collect();
        let top = all
            .iter()
            .position(Submodule::is_whole)
            .expect("M is always enumerated");
        let mut lattice = SubmoduleLattice {
            module,
            all,
            flags: Vec::new(),
            colons,
            annihilators,
            index,
            top,
        };
        lattice.flags = (0..lattice.all.len())
            .map(|i| classify_at(&lattice, i))
            .collect();
        lattice
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn all(&self) -> &[Submodule] {
        &self.all
    }

    pub fn get(&self, i: usize) -> &Submodule {
        &self.all[i]
    }

    pub fn flags(&self, i: usize) -> SubmoduleFlags {
        self.flags[i]
    }

    pub fn colon(&self, i: usize) -> Ideal {
        self.colons[i]
    }

    pub fn annihilator(&self, i: usize) -> Ideal {
        self.annihilators[i]
    }

    pub fn index_of_members(&self, members: &FixedBitSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn index_of(&self, n: &Submodule) -> Option<usize> {
        if !Arc::ptr_eq(n.module(), &self.module) && **n.module() != *self.module {
            return None;
        }
        self.index_of_members(n.members())
    }

    /// Index of the zero submodule (always first in canonical order).
    pub fn zero(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn order(&self, i: usize) -> usize {
        self.all[i].order()
    }

    pub fn is_proper(&self, i: usize) -> bool {
        !self.all[i].is_whole()
    }

    pub fn is_nonzero(&self, i: usize) -> bool {
        !self.all[i].is_zero()
    }

    /// Nonzero proper submodules, in canonical order.
    pub fn vertices(&self) -> Vec<usize> {
        (0..self.all.len())
            .filter(|&i| self.is_nonzero(i) && self.is_proper(i))
            .collect()
    }

    pub fn contains(&self, outer: usize, inner: usize) -> bool {
        self.all[inner].is_subset(&self.all[outer])
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let mut set = self.all[a].members().clone();
        set.intersect_with(self.all[b].members());
        self.index[&set]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        let mut set = self.all[a].members().clone();
        for &g in self.all[b].generators() {
            extend_by(&self.module, &mut set, g);
        }
        self.index[&set]
    }

    /// Order of `a + b`, from `|a||b| / |a ∩ b|`.
    pub fn join_order(&self, a: usize, b: usize) -> usize {
        let common = self.all[a]
            .members()
            .intersection_count(self.all[b].members());
        self.order(a) * self.order(b) / common
    }

    pub fn indices_where(&self, pred: impl Fn(SubmoduleFlags) -> bool) -> Vec<usize> {
        (0..self.all.len())
            .filter(|&i| pred(self.flags[i]))
            .collect()
    }

    pub fn minimals(&self) -> Vec<usize> {
        self.indices_where(|f| f.is_minimal)
    }

    pub fn maximals(&self) -> Vec<usize> {
        self.indices_where(|f| f.is_maximal)
    }

    pub fn seconds(&self) -> Vec<usize> {
        self.indices_where(|f| f.is_second)
    }

    pub fn primes(&self) -> Vec<usize> {
        self.indices_where(|f| f.is_prime)
    }

    /// Display label: `0`, `M`, `dM` when the submodule is a multiple of `M`,
    /// otherwise `<g1,g2,...>` from its generators.
    pub fn label(&self, i: usize) -> String {
        let s = &self.all[i];
        if s.is_zero() {
            return "0".into();
        }
        if s.is_whole() {
            return "M".into();
        }
        let ring = self.module.ring();
        for d in ring.divisors().into_iter().skip(1) {
            let matches = s.order() == multiple_order(&self.module, d)
                && self
                    .module
                    .elements()
                    .all(|x| s.contains(self.module.scale(d, x)));
            if matches {
                return format!("{d}M");
            }
        }
        format!("<{}>", s.format_generators().join(","))
    }

    /// Label followed by the element set, e.g. `2M={0,2,4,6,8,10}`.
    pub fn long_label(&self, i: usize) -> String {
        format!(
            "{}={{{}}}",
            self.label(i),
            self.all[i].format_elements().join(",")
        )
    }
}

fn multiple_order(module: &FiniteModule, d: u32) -> usize {
    module
        .factors()
        .iter()
        .map(|&f| (f / num_integer::gcd(f, d)) as usize)
        .product()
}

/// Classifies a member of `lattice` from the definitions.
pub fn classify_submodule(n: &Submodule, lattice: &SubmoduleLattice) -> Option<SubmoduleFlags> {
    lattice.index_of(n).map(|i| classify_at(lattice, i))
}

fn classify_at(lattice: &SubmoduleLattice, i: usize) -> SubmoduleFlags {
    let module = &lattice.module;
    let n = &lattice.all[i];
    let nonzero = !n.is_zero();
    let proper = !n.is_whole();
    let vertices =
        || (0..lattice.all.len()).filter(|&k| lattice.is_nonzero(k) && lattice.is_proper(k));

    let is_prime = proper && {
        let colon = lattice.colons[i];
        (0..module.ring().modulus()).all(|r| {
            colon.contains(u64::from(r))
                || module
                    .elements()
                    .all(|m| n.contains(m) || !n.contains(module.scale(r, m)))
        })
    };

    let is_second = nonzero && {
        let zero = &lattice.all[lattice.zero()];
        (0..module.ring().modulus()).all(|r| {
            let image = n.scaled_by(r);
            image == *zero.members() || image == *n.members()
        })
    };

    let vertex = nonzero && proper;
    let is_minimal = vertex
        && !vertices().any(|k| k != i && lattice.order(k) < n.order() && lattice.contains(i, k));
    let is_maximal = vertex
        && !vertices().any(|k| k != i && lattice.order(k) > n.order() && lattice.contains(k, i));

    let is_large = (0..lattice.all.len())
        .filter(|&k| lattice.is_nonzero(k))
        .all(|k| n.members().intersection_count(lattice.all[k].members()) > 1);
    let top = module.order() as usize;
    let is_small = (0..lattice.all.len())
        .filter(|&k| lattice.is_proper(k))
        .all(|k| lattice.join_order(i, k) != top);

    SubmoduleFlags {
        is_prime,
        is_second,
        is_minimal,
        is_maximal,
        is_large,
        is_small,
    }
}

/// `sec(N)`: the sum of all second submodules inside `N`, or `0` if none.
pub fn second_socle(lattice: &SubmoduleLattice, n: usize) -> usize {
    lattice
        .seconds()
        .into_iter()
        .filter(|&s| lattice.contains(n, s))
        .fold(lattice.zero(), |acc, s| lattice.join(acc, s))
}

/// `rad(M)`: the intersection of all prime submodules, or `M` if none.
pub fn prime_radical(lattice: &SubmoduleLattice) -> usize {
    lattice
        .primes()
        .into_iter()
        .fold(lattice.top(), |acc, p| lattice.meet(acc, p))
}

/// Module-level properties, each decided by exhaustion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ModuleProperties {
    pub coreduced: bool,
    pub reduced: bool,
    pub multiplication: bool,
    pub comultiplication: bool,
    pub dac: bool,
    pub strong_comultiplication: bool,
    pub faithful: bool,
    pub hollow: bool,
    pub uniform: bool,
}

pub fn module_properties(lattice: &SubmoduleLattice) -> ModuleProperties {
    let module = &lattice.module;
    let ring = module.ring();
    let n = ring.modulus();
    let whole = Submodule::whole(module);

    let coreduced = (0..n).all(|r| {
        let r_sq = ((u64::from(r) * u64::from(r)) % u64::from(n)) as u32;
        whole.scaled_by(r) == whole.scaled_by(r_sq)
    });

    // rM and { m : rm = 0 } depend only on gcd(r, n), so the divisors of n
    // cover every r.
    let cyclic: Vec<FixedBitSet> = module
        .elements()
        .map(|m| cyclic_members(module, m))
        .collect();
    let reduced = ring.divisors().into_iter().all(|d| {
        let r_m = whole.scaled_by(d);
        module
            .elements()
            .filter(|&m| module.scale(d, m) == 0)
            .all(|m| r_m.intersection_count(&cyclic[m as usize]) == 1)
    });

    let multiplication = (0..lattice.len()).all(|i| {
        let im = super::submodule::ideal_times_module(module, &lattice.colons[i]);
        im.members() == lattice.all[i].members()
    });
    let comultiplication = (0..lattice.len()).all(|i| {
        let killed = super::submodule::annihilated_by(module, &lattice.annihilators[i]);
        killed.members() == lattice.all[i].members()
    });
    let dac = ring.ideals().into_iter().all(|ideal| {
        let killed = super::submodule::annihilated_by(module, &ideal);
        annihilator(&killed) == ideal
    });
    let faithful = lattice.annihilators[lattice.top()].is_zero();
    let hollow = (0..lattice.len())
        .filter(|&i| lattice.is_proper(i))
        .all(|i| lattice.flags[i].is_small);
    let uniform = (0..lattice.len())
        .filter(|&i| lattice.is_nonzero(i))
        .all(|i| lattice.flags[i].is_large);

    ModuleProperties {
        coreduced,
        reduced,
        multiplication,
        comultiplication,
        dac,
        strong_comultiplication: comultiplication && dac,
        faithful,
        hollow,
        uniform,
    }
}
