//! Rims of the ideals `Z(λ)`: brute force, closed-form families, and the
//! transports between them.

pub mod constructions;
pub mod ideal;
pub mod rims;
pub mod tuple;

pub use constructions::{family_diagram, rim_params, FamilyParams};
pub use ideal::{rim, rim_special, z_ideal, z_ideal_by_admissibility, z_ideal_checked, Guard, GUARD_ENV};
pub use rims::{
    brute_force_rim, closed_form_or_rotated, closed_form_rim, orderings, prefix_comparable_pairs, rim_diagrams,
    table_counts, verify_induced_rim, verify_rim_family, verify_transport, InducedReport, RimDiagrams, RimReport,
    RimRoute, TransportReport,
};
pub use tuple::{apply_column_op, determining_tuple, from_tuple, ColumnOp, DeterminingTuple, TupleEntry};
