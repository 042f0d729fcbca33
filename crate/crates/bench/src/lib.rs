//! Fixtures shared by the benchmarks.

use twothree_core::paperlib::{build, search_params, GeneratorPair, Target};

/// The first searched generating pair for `target` over its parameter field.
pub fn searched_pair(target: Target, q: u64) -> GeneratorPair {
    let f = target.parameter_field(q).expect("valid q");
    let hit = search_params(target, &f, None).expect("search runs").expect("a parameter exists");
    build(&f, hit.params).expect("pair builds")
}
