//! Local representations: the defining equations on quadruples of words,
//! their natural symmetries, the catalog of solutions, bounded exhaustive
//! search and the graph of cores whose edge-paths are representations.

mod catalog;
mod gamma;
mod quad;
mod rep;
mod search;

pub use catalog::{catalog, identify, Decoration, Family, FamilyId};
pub use gamma::{
    build_gamma, can_extend, component_of, extensions, figure_component, incoming, outgoing,
    rep_from_path, Component, FigureComponent, GammaEdge, GammaGraph,
};
pub use quad::{
    backward_dual, canonicalize, check_pair_via_braid, check_quad, equations_hold, inverse_rep,
    swap_dual, Condition, Quad, QuadReport,
};
pub use rep::LocalRep;
pub use search::{classify_search, rank2_basis_pairs, truncated_catalog};
