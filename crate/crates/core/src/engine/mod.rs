//! Structure maps, the primed correspondence, the coderivation `D` and the
//! two verification routes (direct Stasheff identities and `D² = 0`).

mod coderivation;
mod multimap;
mod stasheff;
mod structure;
mod verify;

pub use coderivation::{
    coderivation_apply, coderivation_term, d_apply, d_apply_family, d_squared, d_squared_family,
    top_sum_family,
};
pub use multimap::{apply_map, prime, prime_sign, unprime, MultiMap, Side};
pub use stasheff::{stasheff_defect, stasheff_defect_family};
pub use structure::{AStructure, Family, MapGenerator, MapSource};
pub use verify::{verify_structure, CheckMode};

pub(crate) use verify::sweep;
