use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::GeometryError;
use crate::exactfield::{BaseField, FieldKind, Scalar};
use crate::forms::{intersect_plane_curves, is_smooth_hypersurface, Form, FormError, SymMatrix3};

/// Coordinates (x2, x3, x4) of the plane sit at these positions of P^4.
pub const PLANE_VARS: [usize; 3] = [2, 3, 4];

/// One invariant quadric `a00 x0^2 + a11 x1^2 + a01 x0 x1 + f2(x2, x3, x4)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TauQuadric {
    pub a00: Scalar,
    pub a11: Scalar,
    pub a01: Scalar,
    pub f2: Form,
}

/// An invariant cubic `l00 x0^2 + l11 x1^2 + l01 x0 x1 + f3` together with one
/// or more invariant quadrics. The plane forms `l_ij`, `f2`, `f3` are stored in
/// three variables standing for (x2, x3, x4).
#[derive(Clone, Debug, PartialEq)]
pub struct TauInstance {
    pub l00: Form,
    pub l11: Form,
    pub l01: Form,
    pub f3: Form,
    pub quadrics: Vec<TauQuadric>,
}

fn lift(f: &Form) -> Form {
    f.embed(5, &PLANE_VARS)
}

fn x01(e0: u32, e1: u32) -> Form {
    Form::monomial(&[e0, e1, 0, 0, 0], Scalar::one())
}

impl TauQuadric {
    pub fn form(&self) -> Form {
        x01(2, 0)
            .scale(&self.a00)
            .add(&x01(0, 2).scale(&self.a11))
            .add(&x01(1, 1).scale(&self.a01))
            .add(&lift(&self.f2))
    }

    /// The binary quadratic cut out on the fixed line.
    pub fn line_part(&self) -> Form {
        Form::new(2, 2, vec![self.a00.clone(), self.a01.clone(), self.a11.clone()])
            .expect("three coefficients")
    }
}

impl TauInstance {
    pub fn new(
        l00: Form,
        l11: Form,
        l01: Form,
        f3: Form,
        quadrics: Vec<TauQuadric>,
    ) -> Result<Self, GeometryError> {
        let inst = TauInstance { l00, l11, l01, f3, quadrics };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<(), GeometryError> {
        let shape = |f: &Form, d: u32, name: &str| {
            if f.nvars() != 3 || f.degree() != d {
                Err(GeometryError::InvalidInstance(format!(
                    "{name} must be a degree-{d} form in (x2, x3, x4)"
                )))
            } else {
                Ok(())
            }
        };
        shape(&self.l00, 1, "l00")?;
        shape(&self.l11, 1, "l11")?;
        shape(&self.l01, 1, "l01")?;
        shape(&self.f3, 3, "f3")?;
        for (i, q) in self.quadrics.iter().enumerate() {
            shape(&q.f2, 2, &format!("quadrics[{i}].f2"))?;
        }
        self.field()?;
        Ok(())
    }

    /// `x2 x0^2 + x3 x1^2 + x4 x0 x1 + x2^3 + x3^3 + x4^3` with the quadric `sum x_i^2`.
    pub fn canonical() -> Self {
        let p = |s: &str| Form::parse(3, s).expect("literal form");
        TauInstance {
            l00: p("x0"),
            l11: p("x1"),
            l01: p("x2"),
            f3: p("x0^3 + x1^3 + x2^3"),
            quadrics: vec![TauQuadric {
                a00: Scalar::one(),
                a11: Scalar::one(),
                a01: Scalar::zero(),
                f2: p("x0^2 + x1^2 + x2^2"),
            }],
        }
    }

    pub fn cubic(&self) -> Form {
        x01(2, 0)
            .mul(&lift(&self.l00))
            .add(&x01(0, 2).mul(&lift(&self.l11)))
            .add(&x01(1, 1).mul(&lift(&self.l01)))
            .add(&lift(&self.f3))
    }

    pub fn quadric(&self, i: usize) -> Result<Form, GeometryError> {
        self.quadrics
            .get(i)
            .map(TauQuadric::form)
            .ok_or_else(|| GeometryError::InvalidInstance(format!("no quadric {i}")))
    }

    /// `4 l00 l11 - l01^2`, four times the determinant of the fiber conic's
    /// binary part.
    pub fn conic_part(&self) -> Form {
        self.l00
            .mul(&self.l11)
            .scale(&Scalar::from(4))
            .sub(&self.l01.mul(&self.l01))
    }

    pub fn field(&self) -> Result<FieldKind, GeometryError> {
        let mut k = FieldKind::Rationals;
        for f in [&self.l00, &self.l11, &self.l01, &self.f3] {
            k = k.join(&f.field()?).map_err(FormError::from)?;
        }
        for q in &self.quadrics {
            for c in [&q.a00, &q.a11, &q.a01] {
                k = k.join(&c.field()).map_err(FormError::from)?;
            }
            k = k.join(&q.f2.field()?).map_err(FormError::from)?;
        }
        Ok(k)
    }

    pub fn reduce_mod(&self, p: u64) -> Result<TauInstance, GeometryError> {
        let quadrics = self
            .quadrics
            .iter()
            .map(|q| {
                Ok(TauQuadric {
                    a00: q.a00.reduce_mod(p).map_err(FormError::from)?,
                    a11: q.a11.reduce_mod(p).map_err(FormError::from)?,
                    a01: q.a01.reduce_mod(p).map_err(FormError::from)?,
                    f2: q.f2.reduce_mod(p)?,
                })
            })
            .collect::<Result<Vec<_>, GeometryError>>()?;
        Ok(TauInstance {
            l00: self.l00.reduce_mod(p)?,
            l11: self.l11.reduce_mod(p)?,
            l01: self.l01.reduce_mod(p)?,
            f3: self.f3.reduce_mod(p)?,
            quadrics,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct QuadricRepr {
    a00: Scalar,
    a11: Scalar,
    a01: Scalar,
    f2: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
struct InstanceRepr {
    l00: Vec<Scalar>,
    l11: Vec<Scalar>,
    l01: Vec<Scalar>,
    f3: Vec<Scalar>,
    quadrics: Vec<QuadricRepr>,
}

impl Serialize for TauInstance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        InstanceRepr {
            l00: self.l00.coeffs().to_vec(),
            l11: self.l11.coeffs().to_vec(),
            l01: self.l01.coeffs().to_vec(),
            f3: self.f3.coeffs().to_vec(),
            quadrics: self
                .quadrics
                .iter()
                .map(|q| QuadricRepr {
                    a00: q.a00.clone(),
                    a11: q.a11.clone(),
                    a01: q.a01.clone(),
                    f2: q.f2.coeffs().to_vec(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TauInstance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = InstanceRepr::deserialize(d)?;
        let form = |name: &str, deg: u32, c: Vec<Scalar>| {
            Form::new(3, deg, c).map_err(|e| D::Error::custom(format!("field \"{name}\": {e}")))
        };
        let quadrics = r
            .quadrics
            .into_iter()
            .enumerate()
            .map(|(i, q)| {
                Ok(TauQuadric {
                    a00: q.a00,
                    a11: q.a11,
                    a01: q.a01,
                    f2: form(&format!("quadrics[{i}].f2"), 2, q.f2)?,
                })
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        TauInstance::new(
            form("l00", 1, r.l00)?,
            form("l11", 1, r.l11)?,
            form("l01", 1, r.l01)?,
            form("f3", 3, r.f3)?,
            quadrics,
        )
        .map_err(D::Error::custom)
    }
}

/// The individual general-position requirements checked on a sampled instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gate {
    ConicPartRank,
    CubicPartSmooth,
    ConicMeetsCubic,
    QuadricPlanePart,
    LinePartDistinct,
    CubicSmooth,
}

/// Checks the genericity gate for every quadric of `inst`; returns the first
/// failing requirement.
pub fn genericity_gate(inst: &TauInstance, primes: &[u64]) -> Result<(), Gate> {
    let conic = inst.conic_part();
    let rank = SymMatrix3::from_quadratic(&conic).map(|g| g.rank()).unwrap_or(0);
    if rank != 3 {
        return Err(Gate::ConicPartRank);
    }
    if !is_smooth_hypersurface(&inst.f3, primes).is_ok_and(|v| v.is_smooth()) {
        return Err(Gate::CubicPartSmooth);
    }
    if !intersect_plane_curves(&conic, &inst.f3).is_ok_and(|r| r.transversal) {
        return Err(Gate::ConicMeetsCubic);
    }
    for q in &inst.quadrics {
        let smooth = SymMatrix3::from_quadratic(&q.f2).is_ok_and(|g| g.rank() == 3);
        if !smooth || !intersect_plane_curves(&q.f2, &inst.f3).is_ok_and(|r| r.transversal) {
            return Err(Gate::QuadricPlanePart);
        }
        let disc = &(&q.a01 * &q.a01) - &(&Scalar::from(4) * &(&q.a00 * &q.a11));
        if disc.is_zero() {
            return Err(Gate::LinePartDistinct);
        }
    }
    if !is_smooth_hypersurface(&inst.cubic(), primes).is_ok_and(|v| v.is_smooth()) {
        return Err(Gate::CubicSmooth);
    }
    Ok(())
}

pub const DEFAULT_PRIMES: [u64; 2] = [10007, 10009];
pub const SAMPLER_RETRY_CAP: usize = 64;

/// Seeded generator of instances passing the genericity gate.
#[derive(Clone, Debug)]
pub struct Sampler {
    pub bound: i64,
    pub field: BaseField,
    pub num_quadrics: usize,
    /// Primes used by the smoothness certificates over Q.
    pub primes: Vec<u64>,
    /// Forces `l00 = l11 = l01 = 0` (a deliberately degenerate family).
    pub zero_binary_part: bool,
    pub retry_cap: usize,
}

impl Sampler {
    pub fn new(bound: i64) -> Self {
        Sampler {
            bound,
            field: BaseField::Rationals,
            num_quadrics: 1,
            primes: DEFAULT_PRIMES.to_vec(),
            zero_binary_part: false,
            retry_cap: SAMPLER_RETRY_CAP,
        }
    }

    pub fn over(mut self, field: BaseField) -> Self {
        self.field = field;
        self
    }

    pub fn quadrics(mut self, n: usize) -> Self {
        self.num_quadrics = n;
        self
    }

    pub fn primes(mut self, primes: &[u64]) -> Self {
        self.primes = primes.to_vec();
        self
    }

    pub fn zero_binary_part(mut self) -> Self {
        self.zero_binary_part = true;
        self
    }

    fn draw(&self, rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.field.from_i64(rng.gen_range(-self.bound..=self.bound))).collect()
    }

    fn draw_form(&self, rng: &mut ChaCha8Rng, deg: u32) -> Form {
        let n = crate::forms::monomial::monomial_count(3, deg);
        Form::new(3, deg, self.draw(rng, n)).expect("sized coefficient vector")
    }

    /// Draws candidates from a seed-determined stream until one passes the gate.
    pub fn sample(&self, seed: u64) -> Result<TauInstance, GeometryError> {
        if self.bound < 2 {
            return Err(GeometryError::InvalidInstance("coefficient bound must be at least 2".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut last = None;
        for _ in 0..self.retry_cap {
            let (l00, l11, l01) = if self.zero_binary_part {
                (Form::zero(3, 1), Form::zero(3, 1), Form::zero(3, 1))
            } else {
                (self.draw_form(&mut rng, 1), self.draw_form(&mut rng, 1), self.draw_form(&mut rng, 1))
            };
            let f3 = self.draw_form(&mut rng, 3);
            let quadrics = (0..self.num_quadrics)
                .map(|_| {
                    let c = self.draw(&mut rng, 3);
                    TauQuadric {
                        a00: c[0].clone(),
                        a11: c[1].clone(),
                        a01: c[2].clone(),
                        f2: self.draw_form(&mut rng, 2),
                    }
                })
                .collect();
            let inst = TauInstance { l00, l11, l01, f3, quadrics };
            match genericity_gate(&inst, &self.primes) {
                Ok(()) => return Ok(inst),
                Err(g) => last = Some(g),
            }
        }
        Err(GeometryError::GenericityExhausted {
            attempts: self.retry_cap,
            last_gate: format!("{:?}", last.expect("at least one attempt")),
        })
    }
}

/// A gated instance over Q with integer coefficients in `[-bound, bound]`.
pub fn sample_instance(seed: u64, bound: i64) -> Result<TauInstance, GeometryError> {
    Sampler::new(bound).sample(seed)
}
