//! Fixed inputs for the benchmarks, so every run measures the same work.

use nikulin_core::exactfield::{BaseField, Scalar};
use nikulin_core::forms::{Form, ProjPoint};
use nikulin_core::tau_geometry::{Sampler, TauInstance};

pub const BENCH_PRIME: u64 = 10007;

pub fn rational_instance() -> TauInstance {
    Sampler::new(10).sample(1).expect("gated instance")
}

pub fn prime_instance(p: u64) -> TauInstance {
    Sampler::new(10).over(BaseField::Prime(p)).sample(1).expect("gated instance")
}

/// The partials of `x0^3 + ... + x4^3 + x0 x1 x2`, five quadrics in five variables.
pub fn quadric_system() -> Vec<Form> {
    Form::parse(5, "x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x0*x1*x2").expect("literal").gradient()
}

/// A point of the fixed line over F_q.
pub fn fixed_line_point(q: u64, t: i64) -> ProjPoint {
    let f = |x| Scalar::prime(x, q).expect("admitted prime");
    ProjPoint::new(vec![f(1), f(t), f(0), f(0), f(0)]).expect("nonzero point")
}
