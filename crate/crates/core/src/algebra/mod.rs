//! Rings `Z_n`, finite modules over them, and their submodule lattices.

mod lattice;
mod module;
mod ring;
mod submodule;

pub use lattice::{
    classify_submodule, enumerate_submodules, enumerate_submodules_with, module_properties,
    prime_radical, second_socle, ModuleProperties, SizeGuard, SubmoduleFlags, SubmoduleLattice,
};
pub use module::{parse_descriptor, FiniteModule};
pub use ring::{divisors, is_prime_number, Ideal, Ring};
pub use submodule::{
    annihilated_by, annihilator, colon_ideal, ideal_times_module, span, span_tuples,
    submodule_intersection, submodule_sum, Submodule,
};
