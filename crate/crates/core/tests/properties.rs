mod common;

use common::*;
use nikulin_core::forms::{macaulay_resultant, Form};
use nikulin_core::tau_geometry::{apply_tau, sample_instance};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rational_field_axioms(x in rational(), y in rational(), z in rational()) {
        field_axioms_rational(x, y, z)?;
    }

    #[test]
    fn prime_field_axioms(pi in 0usize..5, a in -50_000i64..50_000, b in -50_000i64..50_000, c in -50_000i64..50_000) {
        field_axioms_prime(pi, a, b, c)?;
    }

    #[test]
    fn quadratic_field_axioms(kind in 0usize..3, v in proptest::array::uniform6(-30i64..30)) {
        field_axioms_quadratic(kind, v)?;
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(pi in 0usize..5, x in rational(), y in rational()) {
        reduction_homomorphism(pi, x, y)?;
    }

    #[test]
    fn square_roots_square_back(pi in 0usize..5, x in rational(), over_prime in any::<bool>()) {
        sqrt_squares(pi, x, over_prime)?;
    }

    #[test]
    fn resultant_is_multiplicative(seed in any::<u64>()) {
        resultant_multiplicativity(seed)?;
    }

    #[test]
    fn euler_identity_holds(seed in any::<u64>()) {
        euler_identity(seed)?;
    }

    #[test]
    fn reduction_commutes_with_operations(seed in any::<u64>()) {
        reduction_commutes(seed)?;
    }

    #[test]
    fn macaulay_matches_enumeration(seed in any::<u64>()) {
        macaulay_vs_brute_force(seed)?;
    }

    #[test]
    fn tau_is_an_involution(seed in any::<u64>(), d in 1u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form(&mut rng, 5, d, 5);
        prop_assert_eq!(apply_tau(&apply_tau(&f)), f);
    }
}

#[test]
fn sampled_instances_are_invariant() {
    for seed in 0..8 {
        let inst = sample_instance(seed, 10).unwrap();
        let phi = inst.cubic();
        assert_eq!(apply_tau(&phi), phi);
        let f = inst.quadric(0).unwrap();
        assert_eq!(apply_tau(&f), f);
    }
}

#[test]
fn oracle_sanity() {
    // x^2 + y^2 over F_7 has its zeros in F_49 only
    let q = 7;
    let f = Form::parse(2, "x0^2 + x1^2").unwrap().reduce_mod(q).unwrap();
    let g = Form::parse(2, "x0^2 + x1^2 + x0*x1").unwrap().reduce_mod(q).unwrap();
    assert!(common_zero_brute_force(&[f.clone(), f.clone()], q));
    assert!(!common_zero_brute_force(&[f.clone(), Form::parse(2, "x0").unwrap().reduce_mod(q).unwrap()], q));
    assert!(!macaulay_resultant(&[f.clone(), g.clone()]).unwrap().is_zero() || common_zero_brute_force(&[f, g], q));
    // an irreducible cubic factor needs F_{q^3}
    let gf = Gf::new(q, 3);
    assert_eq!(gf.elements().count(), 343);
    let a = gf.elements().nth(100).unwrap();
    let inv = gf.elements().find(|b| gf.mul(&a, b) == gf.constant(1));
    assert!(inv.is_some());
}

#[test]
fn macaulay_oracle_sees_both_outcomes() {
    let mut outcomes = [0usize; 2];
    for seed in 0..300 {
        if let Some(common) = macaulay_vs_brute_force(seed).unwrap() {
            outcomes[common as usize] += 1;
        }
    }
    assert!(outcomes[0] > 50 && outcomes[1] > 50, "{outcomes:?}");
}
