pub mod exactfield;
pub mod forms;
pub mod tau_geometry;
pub mod discriminant;
pub mod curve_numerics;
pub mod quotient;
pub mod harness;
