//! Local duality made executable: complete intersections, Ext modules and
//! their classes, the Grothendieck pairing at complete-intersection level,
//! equidimensional hulls by linkage, Serre's conditions, the Roos map and
//! the transformation law.

mod criteria;
mod hull;
mod module;
mod pairing;
mod regular;
mod report;
mod transform;

pub use criteria::{purity_test, roos_map, sk_test, CodimRow, PurityReport, RoosReport, SkReport};
pub use hull::{equidimensional_hull, hull_at_level};
pub use module::{
    certified, ci_ext_generator, ci_ext_isomorphism, ext_module, CohClass, ExtClass, PresentedModule,
};
pub use pairing::{
    ci_level_map, coh_equal, coh_scale, functoriality_values, induced_ext_map, level_complex,
    pairing_eval, pairing_left_kernel, pairing_lift, pairing_matrix, pairing_value_from_lift,
    pull_back_class, right_injectivity_check, transition_matrix, InjectivityReport,
};
pub use regular::{find_regular_sequence, CompleteIntersection, MAX_BOX};
pub use report::{pairing_report, PairingReport};
pub use transform::{transformation_check, TransformationReport};
