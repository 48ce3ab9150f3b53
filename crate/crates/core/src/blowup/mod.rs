//! Point blowups, weak and strict transforms, and resolution trees.

pub mod dicritical;
pub mod state;
pub mod tree;

pub use dicritical::{detect_dicritical, ResidualMap};
pub use state::{blow_up, translate_to_origin, DivisorId, ExceptionalDivisor, PairState, LOCAL};
pub use tree::{
    next_base_points, resolve_local, resolve_with, ExtraBlowup, Position, ResolutionNode, ResolutionTree,
    ResolveOptions,
};
