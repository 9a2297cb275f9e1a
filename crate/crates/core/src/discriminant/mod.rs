//! The conic bundle obtained by projecting the cubic from the fixed line: its
//! quintic discriminant, the splitting of singular fibers, how τ acts on the
//! split lines, lines through points of the fixed line, and the cone over the
//! conic component.

mod cone;
mod fiber;
mod lines;
mod quintic;
mod sampling;

pub use cone::{cone_and_singular_member, ConeReport};
pub use fiber::{
    fiber_conic, split_conic, tau_fiber_action, verify_fiber_restriction, ConicSplit, FiberAction,
    FiberConic, Line, LinePair,
};
pub use lines::{count_lines_brute_force, lines_through_point_of_ltau, LineCount, LineThrough};
pub use quintic::{discriminant_quintic, form_det3, gram_family_det, DiscriminantData, IntersectionEntry};
pub use sampling::{check_fiber_dichotomy, random_curve_points, ComponentTally, DichotomyReport};

use crate::forms::FormError;
use crate::tau_geometry::GeometryError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiscriminantError {
    #[error("the conic part 4 l00 l11 - l01^2 is degenerate")]
    DegenerateConicPart,
    #[error("the fiber conic vanishes identically")]
    ZeroConic,
    #[error("infinitely many lines through the point")]
    InfinitelyMany,
    #[error("the conic and cubic components share a component")]
    CommonComponent,
    #[error("point {0} is not on the fixed line")]
    NotOnLine(String),
    #[error("invalid input: {0}")]
    InvalidPoint(String),
    #[error("τ does not preserve the fiber over {0}")]
    FiberNotPreserved(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Form(#[from] FormError),
}
