use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::module::FiniteModule;
use super::ring::Ideal;
use crate::error::{Error, Result};

/// A submodule, held as its sorted element list plus a membership bitset.
///
/// Identity and ordering use the sorted element list (the canonical key), so
/// two equal submodules always compare equal regardless of how they were built.
#[derive(Clone, Debug)]
pub struct Submodule {
    module: Arc<FiniteModule>,
    elements: Vec<u32>,
    members: FixedBitSet,
    generators: Vec<u32>,
}

impl Submodule {
    pub fn zero(module: &Arc<FiniteModule>) -> Self {
        let mut members = FixedBitSet::with_capacity(module.order() as usize);
        members.insert(0);
        Submodule {
            module: Arc::clone(module),
            elements: vec![0],
            members,
            generators: Vec::new(),
        }
    }

    pub fn whole(module: &Arc<FiniteModule>) -> Self {
        let mut members = FixedBitSet::with_capacity(module.order() as usize);
        members.insert_range(..);
        Submodule::from_closed_set(module, members)
    }

    /// Wraps a set already known to be closed, computing canonical generators.
    ///
    /// Generators are chosen greedily in ascending element order, keeping each
    /// element that is not already in the span of the earlier ones.
    pub(crate) fn from_closed_set(module: &Arc<FiniteModule>, members: FixedBitSet) -> Self {
        debug_assert!(members.contains(0));
        let mut span = FixedBitSet::with_capacity(members.len());
        span.insert(0);
        let mut generators = Vec::new();
        for x in members.ones() {
            if !span.contains(x) {
                extend_by(module, &mut span, x as u32);
                generators.push(x as u32);
            }
        }
        debug_assert_eq!(span, members);
        let elements = members.ones().map(|x| x as u32).collect();
        Submodule {
            module: Arc::clone(module),
            elements,
            members,
            generators,
        }
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    /// Sorted element indices; this is the canonical key.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.contains(x as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.module.order() as usize
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn same_ambient(&self, other: &Submodule) -> bool {
        Arc::ptr_eq(&self.module, &other.module) || self.module == other.module
    }

    /// `rN = { r x : x in N }`.
    pub fn scaled_by(&self, r: u32) -> FixedBitSet {
        let mut image = FixedBitSet::with_capacity(self.members.len());
        for &x in &self.elements {
            image.insert(self.module.scale(r, x) as usize);
        }
        image
    }

    pub fn format_elements(&self) -> Vec<String> {
        self.elements
            .iter()
            .map(|&x| self.module.format_element(x))
            .collect()
    }

    pub fn format_generators(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|&x| self.module.format_element(x))
            .collect()
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.members == other.members
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements.cmp(&other.elements)
    }
}

/// Adds the cyclic subgroup generated by `g` to an already closed set.
///
/// Walks the multiples `g, 2g, ...` until one lands in the set, adding the
/// coset of the original set at each step. For `Z_n`-modules the scalar action
/// is repeated addition, so the result is again a submodule.
pub(crate) fn extend_by(module: &FiniteModule, set: &mut FixedBitSet, g: u32) {
    let base: Vec<u32> = set.ones().map(|x| x as u32).collect();
    let mut shift = g;
    while !set.contains(shift as usize) {
        for &b in &base {
            set.insert(module.add(b, shift) as usize);
        }
        shift = module.add(shift, g);
    }
}

pub(crate) fn cyclic_members(module: &FiniteModule, g: u32) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(module.order() as usize);
    set.insert(0);
    extend_by(module, &mut set, g);
    set
}

/// Smallest submodule containing `gens`.
pub fn span(module: &Arc<FiniteModule>, gens: &[u32]) -> Result<Submodule> {
    let mut set = FixedBitSet::with_capacity(module.order() as usize);
    set.insert(0);
    for &g in gens {
        if g >= module.order() {
            return Err(Error::ElementOutOfRange(vec![g]));
        }
        extend_by(module, &mut set, g);
    }
    Ok(Submodule::from_closed_set(module, set))
}

/// Like [`span`] but takes residue tuples.
pub fn span_tuples(module: &Arc<FiniteModule>, gens: &[Vec<u32>]) -> Result<Submodule> {
    let encoded = gens
        .iter()
        .map(|t| module.encode(t))
        .collect::<Result<Vec<_>>>()?;
    span(module, &encoded)
}

pub fn submodule_sum(n: &Submodule, k: &Submodule) -> Result<Submodule> {
    if !n.same_ambient(k) {
        return Err(Error::MixedAmbient);
    }
    let mut set = n.members.clone();
    for &g in &k.generators {
        extend_by(&n.module, &mut set, g);
    }
    Ok(Submodule::from_closed_set(&n.module, set))
}

pub fn submodule_intersection(n: &Submodule, k: &Submodule) -> Result<Submodule> {
    if !n.same_ambient(k) {
        return Err(Error::MixedAmbient);
    }
    let mut set = n.members.clone();
    set.intersect_with(&k.members);
    Ok(Submodule::from_closed_set(&n.module, set))
}

/// `(N :_R M) = { r : rM ⊆ N }`.
///
/// Tested on the unit vectors of `M`, which generate it.
pub fn colon_ideal(n: &Submodule) -> Ideal {
    let module = &n.module;
    let ring = module.ring();
    let gens = module.standard_generators();
    Ideal::generated_by_all(
        ring,
        (0..ring.modulus())
            .filter(|&r| gens.iter().all(|&e| n.contains(module.scale(r, e))))
            .map(u64::from),
    )
}

/// `Ann_R(N) = { r : rN = 0 }`, tested on the generators of `N`.
pub fn annihilator(n: &Submodule) -> Ideal {
    let module = &n.module;
    let ring = module.ring();
    Ideal::generated_by_all(
        ring,
        (0..ring.modulus())
            .filter(|&r| n.generators.iter().all(|&g| module.scale(r, g) == 0))
            .map(u64::from),
    )
}

/// `(0 :_M I) = { m : Im = 0 }`.
pub fn annihilated_by(module: &Arc<FiniteModule>, ideal: &Ideal) -> Submodule {
    let mut set = FixedBitSet::with_capacity(module.order() as usize);
    let d = ideal.divisor();
    for x in module.elements() {
        if module.scale(d, x) == 0 {
            set.insert(x as usize);
        }
    }
    Submodule::from_closed_set(module, set)
}

/// `IM`; for a principal ideal `dZ_n` this is `dM`.
pub fn ideal_times_module(module: &Arc<FiniteModule>, ideal: &Ideal) -> Submodule {
    let mut set = FixedBitSet::with_capacity(module.order() as usize);
    let d = ideal.divisor();
    for x in module.elements() {
        set.insert(module.scale(d, x) as usize);
    }
    Submodule::from_closed_set(module, set)
}
