use nikulin_core::exactfield::{quad_sqrt, BaseField, Scalar};
use nikulin_core::forms::{is_smooth_hypersurface, Form, ProjPoint, SmoothnessVerdict};
use nikulin_core::tau_geometry::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn invariant_series_dimensions() {
    let b2 = invariant_basis(2).unwrap();
    let b3 = invariant_basis(3).unwrap();
    assert_eq!(b2.len(), 9);
    assert_eq!(b3.len(), 19);
    for f in b2.iter().chain(&b3) {
        assert_eq!(&apply_tau(f), f);
    }
    assert_eq!(invariant_basis(4), Err(GeometryError::UnsupportedDegree(4)));
}

#[test]
fn tau_is_an_involution_on_forms() {
    let f = Form::parse(5, "x0^2*x2 + 3*x0*x3*x4 - x1^3 + 2*x4^3").unwrap();
    assert_eq!(apply_tau(&apply_tau(&f)), f);
    assert_ne!(apply_tau(&f), f);
}

#[test]
fn fixed_locus_membership() {
    let loci = FixedLoci::default();
    let on_plane = ProjPoint::from_i64(&[0, 0, 1, 2, 3]).unwrap();
    let on_line = ProjPoint::from_i64(&[1, 5, 0, 0, 0]).unwrap();
    let off = ProjPoint::from_i64(&[1, 1, 1, 1, 1]).unwrap();
    assert!(loci.contains(&on_plane) && is_fixed(&on_plane));
    assert!(loci.contains(&on_line) && is_fixed(&on_line));
    assert!(!loci.contains(&off) && !is_fixed(&off));
}

#[test]
fn canonical_instance_is_invariant() {
    let inst = TauInstance::canonical();
    let phi = inst.cubic();
    assert_eq!(
        phi,
        Form::parse(5, "x2*x0^2 + x3*x1^2 + x4*x0*x1 + x2^3 + x3^3 + x4^3").unwrap()
    );
    assert_eq!(apply_tau(&phi), phi);
    let f = inst.quadric(0).unwrap();
    assert_eq!(f, Form::parse(5, "x0^2 + x1^2 + x2^2 + x3^2 + x4^2").unwrap());
    assert_eq!(apply_tau(&f), f);
}

#[test]
fn base_locus_contains_the_fixed_line() {
    let basis = invariant_basis(3).unwrap();
    let witnesses = [
        ProjPoint::from_i64(&[0, 0, 1, 0, 0]).unwrap(),
        ProjPoint::from_i64(&[1, 1, 1, 1, 1]).unwrap(),
        ProjPoint::from_i64(&[2, -1, 0, 3, 1]).unwrap(),
    ];
    let v = verify_base_locus(&basis, &witnesses);
    assert!(v.vanishes_on_line);
    assert!(v.holds);
    assert_eq!(v.witnesses_checked, 3);
}

#[test]
fn sampler_is_deterministic_and_gated() {
    let a = sample_instance(0, 5).unwrap();
    let b = sample_instance(0, 5).unwrap();
    assert_eq!(a, b);
    assert_eq!(apply_tau(&a.cubic()), a.cubic());
    assert_eq!(genericity_gate(&a, &DEFAULT_PRIMES), Ok(()));
    assert_ne!(sample_instance(1, 5).unwrap(), a);
}

#[test]
fn degenerate_sampler_exhausts() {
    let err = Sampler::new(5).zero_binary_part().sample(3).unwrap_err();
    assert!(matches!(err, GeometryError::GenericityExhausted { .. }));
}

#[test]
fn sampler_over_a_prime_field() {
    let inst = Sampler::new(50).over(BaseField::Prime(10007)).sample(7).unwrap();
    assert_eq!(inst.field().unwrap(), nikulin_core::exactfield::FieldKind::Prime(10007));
}

#[test]
fn instance_json_roundtrip() {
    let inst = sample_instance(4, 5).unwrap();
    let text = serde_json::to_string(&inst).unwrap();
    let back: TauInstance = serde_json::from_str(&text).unwrap();
    assert_eq!(back, inst);
}

#[test]
fn canonical_fixed_points() {
    let inst = TauInstance::canonical();
    let fx = fixed_points_on_s(&inst, 0).unwrap();
    assert_eq!(fx.on_line.len(), 2);
    let i = quad_sqrt(&Scalar::from(-1)).unwrap();
    let z = Scalar::zero();
    let expect_plus = ProjPoint::new(vec![Scalar::one(), i.clone(), z.clone(), z.clone(), z.clone()]).unwrap();
    let expect_minus = ProjPoint::new(vec![Scalar::one(), -&i, z.clone(), z.clone(), z]).unwrap();
    let got: Vec<&ProjPoint> = fx.on_line.iter().map(|p| &p.point).collect();
    assert!(got.contains(&&expect_plus) && got.contains(&&expect_minus));
    assert_eq!(fx.on_line[0].point.field_label(), "Q(sqrt -1)");
    assert_eq!(fx.on_plane.total, 6);
    assert_eq!(fx.total, 8);
}

#[test]
fn degenerate_line_part_is_an_error() {
    let mut inst = TauInstance::canonical();
    inst.quadrics[0].a00 = Scalar::zero();
    inst.quadrics[0].a11 = Scalar::zero();
    assert_eq!(fixed_points_on_s(&inst, 0), Err(GeometryError::DegenerateOnLine));
}

#[test]
fn sym2_split_counts() {
    let s = sym2_eigensplit();
    assert_eq!((s.sym2_minus, s.mixed, s.sym2_plus), (3, 6, 6));
    assert_eq!((s.invariant_total, s.anti_invariant_total, s.total), (9, 6, 15));
}

#[test]
fn cubic_through_two_points_over_fp() {
    let p = 10007;
    let inst = sample_instance(2, 5).unwrap().reduce_mod(p).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let a = random_point_on_surface(&inst, 0, p, &mut rng, 500).unwrap().unwrap();
    let b = random_point_on_surface(&inst, 0, p, &mut rng, 500).unwrap().unwrap();
    assert_ne!(a, b);
    let c = cubic_through_points(&inst, 0, &a, &b).unwrap();
    assert_eq!(c.w_dim, 4);
    assert_eq!(c.quotient_dim, 15);
    assert!(c.solution_proj_dim >= 12);
    assert!(a.lies_on(&c.cubic).unwrap() && b.lies_on(&c.cubic).unwrap());
    assert_eq!(apply_tau(&c.cubic), c.cubic);
    let same = cubic_through_points(&inst, 0, &a, &a).unwrap();
    assert!(same.solution_dim >= 14);
}

#[test]
fn pencil_condition_sides_agree() {
    let g = Form::parse(3, "x0^2 + x1^2 - x2^2").unwrap();
    let h = Form::parse(3, "x0^2 - x1^2 + x2^2").unwrap();
    let v = check_pencil_condition(&g, &h, &[10007]).unwrap();
    assert!(v.agree);
    let same = check_pencil_condition(&g, &g, &[]).unwrap();
    assert!(!same.rhs_holds && same.agree);
    let rank2 = Form::parse(3, "x0^2 - x1^2").unwrap();
    let d = check_pencil_condition(&rank2, &h, &[]).unwrap();
    assert!(!d.rhs_holds && d.agree);
    let good_h = Form::parse(3, "x0^2 + 2*x1^2 + 3*x2^2").unwrap();
    let good_g = Form::parse(3, "x0^2 - x1^2 + 5*x2^2").unwrap();
    let ok = check_pencil_condition(&good_g, &good_h, &[10007]).unwrap();
    assert!(ok.rhs_holds && ok.lhs_holds && ok.misses_line);
}

#[test]
fn canonical_cubic_smoothness_fixture() {
    let phi = TauInstance::canonical().cubic();
    let v = is_smooth_hypersurface(&phi, &[5, 7, 11]).unwrap();
    println!("canonical cubic: {v:?}");
    assert!(!matches!(v, SmoothnessVerdict::Inconclusive { .. }));
}
