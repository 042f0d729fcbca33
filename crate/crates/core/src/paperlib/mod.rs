//! The explicit generator pairs in dimensions 3 and 5, the parameter
//! conditions of the generation theorems, witness searches and the
//! expected-outcome tables for the small unitary groups.

mod conditions;
mod pairs;
mod powers;
mod tables;
mod theorems;

#[cfg(test)]
mod tests;

pub use conditions::{
    dim3_irreducibility_conditions, dim5_condition_i, dim5_condition_ii, dim5_irreducibility_conditions, Condition,
    ConditionReport,
};
pub use pairs::{build, build_dim3, build_dim5, Dim3Params, Dim5Params, GeneratorPair, Params};
pub use powers::{scalar_power_bounds_dim5, scalar_power_classify_dim3, z7_e3_coefficients, Dim3PowerClass, R15};
pub use tables::{
    psu3_case_table, su3_condition_polys, su5_condition_polys, table_b_check, table_b_poly, CaseLabel,
    SU5_SMALL_WITNESSES, TABLE_B,
};
pub use theorems::{
    candidate_order, dim3_monomial_basis, search_params, special_witness, theorem_conditions, Family, SearchHit,
    Target,
};
