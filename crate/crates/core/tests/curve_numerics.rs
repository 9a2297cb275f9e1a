use nikulin_core::curve_numerics::*;
use nikulin_core::exactfield::BaseField;
use nikulin_core::forms::monomial::monomial_count;
use nikulin_core::forms::Form;
use nikulin_core::tau_geometry::Sampler;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn hurwitz_and_plane_genera() {
    assert_eq!(hurwitz_double_cover(0, 6), Ok(2));
    assert_eq!(hurwitz_double_cover(1, 6), Ok(4));
    assert_eq!(hurwitz_double_cover(1, 0), Ok(1));
    assert_eq!(plane_curve_genus(1), Ok(0));
    assert_eq!(plane_curve_genus(2), Ok(0));
    assert_eq!(plane_curve_genus(3), Ok(1));
    assert_eq!(plane_curve_genus(4), Ok(3));
    assert_eq!(hurwitz_double_cover(plane_curve_genus(2).unwrap(), 6), Ok(2));
    assert_eq!(hurwitz_double_cover(plane_curve_genus(3).unwrap(), 6), Ok(4));
}

#[test]
fn complete_intersection_genera() {
    assert_eq!(ci_curve_genus(&[3, 2, 2], 4), Ok(13));
    assert_eq!(ci_curve_genus(&[1, 1, 1], 4), Ok(0));
    assert_eq!(ci_curve_genus(&[2, 3], 3), Ok(4));
    // a plane curve is a complete intersection in P^2
    for d in 1..8 {
        assert_eq!(ci_curve_genus(&[d], 2), plane_curve_genus(d));
    }
    assert!(ci_curve_genus(&[2, 2], 4).is_err());
}

#[test]
fn ideal_sections() {
    assert_eq!(ideal_section_dimension(&[2, 2, 3], 2, 4), Ok(2));
    assert_eq!(ideal_section_dimension(&[2, 3], 3, 4), Ok(6));
    assert_eq!(ideal_section_dimension(&[2, 3], 2, 4), Ok(1));
    assert_eq!(ideal_section_dimension(&[2, 3], 1, 4), Ok(0));
    // h0(O_Z(d)) = d·deg + 1 − g for d large: Z of degree 12, genus 13, d = 3
    let h0_oz3 = h0_projective(4, 3) - ideal_section_dimension(&[2, 2, 3], 3, 4).unwrap();
    assert_eq!(h0_oz3, 3 * 12 + 1 - 13);
}

#[test]
fn koszul_ledger() {
    let k = koszul_h01_ledger();
    assert_eq!((k.h0_quadrics, k.h0_ideal_quadrics, k.h01), (15, 2, 13));
    assert!(k.consistent);
    assert_eq!(k.h01, ci_curve_genus(&[3, 2, 2], 4).unwrap() as u64);
}

#[test]
fn eigen_splits() {
    let s = jacobian_tau_split();
    assert_eq!((s.plus, s.minus), (7, 6));
    assert_eq!(s.total(), 13);
    // a non-invariant quadric would take from both sides
    let mixed = Form::parse(5, "x0*x2 + x3^2").unwrap();
    let t = jacobian_tau_split_for(&[mixed]);
    assert_eq!((t.plus, t.minus), (8, 5));
}

#[test]
fn prym_ledger() {
    let l = prym_dimension_ledger();
    assert_eq!((l.g_c2, l.g_c3, l.r), (0, 1, 6));
    assert_eq!((l.g_c2_cover, l.g_c3_cover), (2, 4));
    assert_eq!((l.dim_p2, l.dim_p3, l.dim_p), (2, 3, 5));
    assert_eq!(l.h21_cubic, 5);
    assert_eq!((l.isogeny_degree_log_bound, l.isogeny_degree_bound), (6, 64));
    assert_eq!((l.g_z, l.h01_z_plus, l.h01_z_minus), (13, 7, 6));
    assert!(l.holds(), "{:?}", l.invariants());

    let json = serde_json::to_value(&l).unwrap();
    for key in ["g_C2", "g_C3", "r", "g_C2cover", "g_C3cover", "dim_P2", "dim_P3", "h21_cubic",
        "isogeny_degree_log_bound", "g_Z", "h01_Z_plus", "h01_Z_minus"] {
        assert!(json.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn jacobian_ring_of_fermat_cubic() {
    // the Fermat cubic threefold: S/(x_i^2) has Hilbert function 1, 5, 10, 10, 5, 1
    let f = Form::parse(5, "x0^3 + x1^3 + x2^3 + x3^3 + x4^3").unwrap();
    let dims: Vec<usize> = (0..6).map(|k| jacobian_ring_dimension(&f, k)).collect();
    assert_eq!(dims, vec![1, 5, 10, 10, 5, 1]);
}

#[test]
fn surface_evaluation_crosscheck_over_f101() {
    let p = 101;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for seed in 0..3 {
        let inst = Sampler::new(50).over(BaseField::Prime(p)).sample(seed).unwrap();
        let need = 3 * monomial_count(5, 3);
        let pts = points_on_surface(&inst, 0, p, need, &mut rng).unwrap();
        assert_eq!(pts.len(), need);
        for d in 1..=3 {
            let sampled = evaluation_rank_deficiency(&pts, d) as u64;
            assert_eq!(sampled, ideal_section_dimension(&[2, 3], d, 4).unwrap(), "d = {d}");
        }
    }
}

#[test]
fn curve_evaluation_crosscheck() {
    let p = 1009;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let inst = Sampler::new(50).over(BaseField::Prime(p)).quadrics(2).sample(1).unwrap();
    let need = 3 * monomial_count(5, 3);
    let pts = points_on_curve_z(&inst, p, need, &mut rng).unwrap();
    assert_eq!(pts.len(), need);
    for d in 1..=3 {
        let sampled = evaluation_rank_deficiency(&pts, d) as u64;
        assert_eq!(sampled, ideal_section_dimension(&[2, 2, 3], d, 4).unwrap(), "d = {d}");
    }
}
