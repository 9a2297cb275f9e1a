//! One function per suite. Each pushes checks as it goes, so an error midway
//! keeps the checks already made.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::report::{Check, Status};
use crate::curve_numerics::{
    ci_curve_genus, evaluation_rank_deficiency, hurwitz_double_cover, ideal_section_dimension,
    jacobian_tau_split, koszul_h01_ledger, plane_curve_genus, points_on_curve_z, points_on_surface,
    prym_dimension_ledger,
};
use crate::discriminant::{
    check_fiber_dichotomy, cone_and_singular_member, count_lines_brute_force, discriminant_quintic,
    fiber_conic, gram_family_det, lines_through_point_of_ltau, verify_fiber_restriction,
    DiscriminantError,
};
use crate::exactfield::{BaseField, FieldKind, Scalar};
use crate::forms::monomial::monomial_count;
use crate::forms::{Matrix, ProjPoint};
use crate::quotient::{branch_sextic, pullback_check, quotient_equation, sextic_vs_quintic, SquarefreeVerdict};
use crate::tau_geometry::{
    apply_tau, cubic_through_points, fixed_points_on_s, invariant_basis, invariant_cubic_quotient,
    random_point_on_surface, sym2_eigensplit, verify_base_locus, Sampler, TauInstance,
};

pub(crate) type SuiteResult = Result<(), Box<dyn std::error::Error + Send + Sync>>;

/// Everything a suite may draw on besides its instance.
pub(crate) struct Job<'a> {
    /// Prime for F_p probes: the instance's own characteristic, else the first configured prime.
    pub prime: u64,
    pub bound: i64,
    pub primes: &'a [u64],
    pub seed: u64,
    pub loaded: bool,
}

fn local(inst: &TauInstance, p: u64) -> Result<TauInstance, crate::tau_geometry::GeometryError> {
    match inst.field()? {
        FieldKind::Prime(q) if q == p => Ok(inst.clone()),
        _ => inst.reduce_mod(p),
    }
}

fn field_of(inst: &TauInstance) -> BaseField {
    match inst.field() {
        Ok(FieldKind::Prime(p)) => BaseField::Prime(p),
        _ => BaseField::Rationals,
    }
}

/// Passed when true, inconclusive otherwise: for general-position facts that a
/// particular sample may miss without contradicting anything.
fn generic(name: &str, computed: bool, provenance: &str) -> Check {
    let status = if computed { Status::Passed } else { Status::Inconclusive };
    Check::with_status(name, json!(true), json!(computed), status, provenance)
}

pub(crate) fn series(inst: &TauInstance, out: &mut Vec<Check>) -> SuiteResult {
    out.push(Check::eq("invariant quadrics", 9, invariant_basis(2)?.len(), "monomials of even degree in x0, x1"));
    out.push(Check::eq("invariant cubics", 19, invariant_basis(3)?.len(), "monomials of even degree in x0, x1"));
    let phi = inst.cubic();
    out.push(Check::holds("cubic is invariant", apply_tau(&phi) == phi, "Φ is built from invariant monomials"));
    let f = inst.quadric(0)?;
    out.push(Check::holds("quadric is invariant", apply_tau(&f) == f, "F is built from invariant monomials"));
    let (w, q) = invariant_cubic_quotient(inst, 0)?;
    out.push(Check::eq("dim W", 4, w, "span of Φ and F·x2, F·x3, F·x4"));
    out.push(Check::eq("quotient dimension", 15, q, "19 − 4"));
    out.push(Check::eq("quotient projective dimension", 14, q.saturating_sub(1), "19 − 4 − 1"));
    Ok(())
}

pub(crate) fn base_locus(inst: &TauInstance, job: &Job, rng: &mut ChaCha8Rng, out: &mut Vec<Check>) -> SuiteResult {
    let field = field_of(inst);
    let basis = invariant_basis(3)?;
    let mut witnesses = vec![ProjPoint::from_i64(&[0, 0, 1, 0, 0])?, ProjPoint::from_i64(&[1, 1, 1, 1, 1])?];
    let b = job.bound;
    while witnesses.len() < 12 {
        let plane_only = witnesses.len() < 7;
        let c: Vec<Scalar> = (0..5)
            .map(|i| if plane_only && i < 2 { field.from_i64(0) } else { field.from_i64(rng.gen_range(-b..=b)) })
            .collect();
        if c[2..].iter().all(Scalar::is_zero) {
            continue;
        }
        witnesses.push(ProjPoint::new(c)?);
    }
    let v = verify_base_locus(&basis, &witnesses);
    out.push(Check::holds("cubics vanish on the fixed line", v.vanishes_on_line, "every invariant cubic monomial contains x2, x3 or x4"));
    out.push(Check::eq("witnesses checked", witnesses.len(), v.witnesses_checked, "all witnesses lie off the fixed line"));
    out.push(Check::eq("witnesses in the base locus", 0, v.witnesses_in_base_locus.len(), "x_j^3 is nonzero wherever x_j is, j ≥ 2"));
    Ok(())
}

pub(crate) fn two_points(inst: &TauInstance, job: &Job, rng: &mut ChaCha8Rng, out: &mut Vec<Check>) -> SuiteResult {
    let p = job.prime;
    let s = local(inst, p)?;
    let mut draw = || -> Result<ProjPoint, Box<dyn std::error::Error + Send + Sync>> {
        random_point_on_surface(&s, 0, p, rng, 256)?.ok_or_else(|| format!("no point on the surface found over F{p}").into())
    };
    let (a, b) = (draw()?, draw()?);
    let r = cubic_through_points(&s, 0, &a, &b)?;
    out.push(Check::eq("dim W", 4, r.w_dim, "span of Φ and F·x2, F·x3, F·x4"));
    out.push(Check::eq("quotient dimension", 15, r.quotient_dim, "19 − 4"));
    out.push(Check::holds("two conditions leave projective dimension ≥ 12", r.solution_proj_dim >= 12, "14 − 2"));
    let vanish = r.cubic.evaluate(a.coords())?.is_zero() && r.cubic.evaluate(b.coords())?.is_zero();
    out.push(Check::holds("cubic vanishes at both points", vanish, "solution of the linear system"));
    out.push(Check::holds("cubic is invariant", apply_tau(&r.cubic) == r.cubic, "combination of invariant monomials"));
    let f = s.quadric(0)?;
    let mut rows = vec![s.cubic().coeffs().to_vec()];
    for v in 2..5 {
        rows.push(f.mul(&crate::forms::Form::var(5, v)).coeffs().to_vec());
    }
    rows.push(r.cubic.coeffs().to_vec());
    out.push(Check::eq("cubic independent of W", 5, Matrix::from_rows(rows).rank(), "rank of W plus the cubic"));
    let single = cubic_through_points(&s, 0, &a, &a)?;
    out.push(Check::holds("one point leaves projective dimension ≥ 13", single.solution_proj_dim >= 13, "14 − 1"));
    Ok(())
}

pub(crate) fn discriminant(inst: &TauInstance, job: &Job, rng: &mut ChaCha8Rng, out: &mut Vec<Check>) -> SuiteResult {
    let d = discriminant_quintic(inst)?;
    out.push(Check::holds("quintic = conic · cubic", d.factorization_verified, "exact division leaves no remainder"));
    out.push(Check::eq("quintic degree", 5, d.quintic.degree(), "conic plus cubic"));
    out.push(Check::eq("conic ∩ cubic with multiplicity", 6, d.total, "Bézout, 2 · 3"));
    out.push(generic("six distinct transversal points", d.transversal, "general position"));
    out.push(Check::holds("det of the Gram family equals the quintic", gram_family_det(inst) == d.quintic, "δ(αβ − γ²/4) as a form"));
    let field = field_of(inst);
    let b = job.bound;
    let mut ok = true;
    let mut tried = 0;
    while tried < 3 {
        let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-b..=b)).collect();
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        tried += 1;
        let pt = ProjPoint::new(c.iter().map(|&x| field.from_i64(x)).collect())?;
        let Ok(fc) = fiber_conic(inst, &pt) else { continue };
        ok &= verify_fiber_restriction(inst, &fc)?;
    }
    out.push(Check::holds("Φ restricts to s · (fiber conic)", ok, "the projecting plane contains the fixed line"));
    Ok(())
}

pub(crate) fn fiber_action(inst: &TauInstance, job: &Job, rng: &mut ChaCha8Rng, out: &mut Vec<Check>) -> SuiteResult {
    let r = check_fiber_dichotomy(inst, job.prime, 100, rng)?;
    for (name, t, prov) in [
        ("cubic component: τ swaps the lines", &r.cubic_component, "δ = 0 exactly on the cubic"),
        ("conic component: τ fixes each line", &r.conic_component, "binary part degenerates on the conic"),
        ("intersection: double line", &r.intersection, "both degenerations at once"),
    ] {
        let status = if t.matched == t.sampled && t.exceptions.is_empty() { Status::Passed } else { Status::Failed };
        out.push(Check::with_status(
            name,
            json!({ "matched": t.sampled, "exceptions": 0 }),
            json!({ "matched": t.matched, "exceptions": t.exceptions.len(), "distinct": t.distinct }),
            status,
            prov,
        ));
    }
    Ok(())
}

/// Small primes for the line count: the configured ones up to 31, else 11 and 13.
pub(crate) fn line_primes(primes: &[u64]) -> Vec<u64> {
    let small: Vec<u64> = primes.iter().copied().filter(|&p| (7..=31).contains(&p)).collect();
    if small.is_empty() {
        vec![11, 13]
    } else {
        small
    }
}

pub(crate) fn lines(inst: Option<&TauInstance>, job: &Job, rng: &mut ChaCha8Rng, out: &mut Vec<Check>) -> SuiteResult {
    const POINTS: usize = 5;
    for q in line_primes(job.primes) {
        let s = match inst {
            Some(i) if job.loaded => match local(i, q) {
                Ok(s) => s,
                Err(e) => {
                    out.push(Check::with_status(
                        &format!("F{q}: instance"),
                        json!("reducible"),
                        json!(e.to_string()),
                        Status::Inconclusive,
                        "loaded instance must reduce to F_q",
                    ));
                    continue;
                }
            },
            _ => Sampler::new(job.bound).over(BaseField::Prime(q)).sample(job.seed ^ q)?,
        };
        let fq = |x: u64| Scalar::prime(x as i64, q).expect("admitted prime");
        let mut ts: Vec<u64> = (0..=q).collect();
        ts.shuffle(rng);
        let mut found = 0;
        for t in ts {
            if found == POINTS {
                break;
            }
            // t = q stands for the point (0 : 1 : 0 : 0 : 0)
            let c = if t == q { [0, 1] } else { [1, t] };
            let tp = ProjPoint::new(vec![fq(c[0]), fq(c[1]), fq(0), fq(0), fq(0)])?;
            let count = match lines_through_point_of_ltau(&s, &tp, q) {
                Ok(c) => c,
                Err(DiscriminantError::InfinitelyMany) => continue,
                Err(e) => return Err(e.into()),
            };
            found += 1;
            out.push(Check::eq(&format!("F{q}, T = {tp}: lines with multiplicity"), 6, count.total, "Bézout on the line-direction system, 1 · 2 · 3"));
            out.push(Check::holds(&format!("F{q}, T = {tp}: fixed line counted"), count.rational.iter().any(|l| l.is_fixed_line), "the fixed line passes through T"));
            let brute = count_lines_brute_force(&s, &tp, q)?;
            out.push(Check::eq(&format!("F{q}, T = {tp}: rational lines vs enumeration"), brute, count.rational_distinct(), "enumeration of P^3(F_q)"));
        }
        if found < POINTS {
            out.push(Check::with_status(
                &format!("F{q}: generic points"),
                json!(POINTS),
                json!(found),
                Status::Inconclusive,
                "points of the fixed line with finitely many lines",
            ));
        }
    }
    Ok(())
}

pub(crate) fn cone(inst: &TauInstance, job: &Job, rng: &mut ChaCha8Rng, out: &mut Vec<Check>) -> SuiteResult {
    let r = cone_and_singular_member(inst, 0, job.prime, 50, rng)?;
    out.push(Check::holds("Sing K is the fixed line", r.singular_locus_is_fixed_line, "K involves only x2, x3, x4 and is a smooth conic there"));
    out.push(Check::eq("Y ∩ l_τ", 2, r.y_on_fixed_line.len(), "roots of the quadric's binary part"));
    out.push(Check::eq("singular points of Y", 2, r.singular_points.len(), "Y meets the vertex line of K"));
    out.push(Check::eq("singular probes off the fixed line", 0, r.singular_probes.len(), "Y is smooth away from the fixed line"));
    Ok(())
}

pub(crate) fn genus(out: &mut Vec<Check>) -> SuiteResult {
    let r = 2 * 3;
    out.push(Check::eq("g_C2", 0, plane_curve_genus(2)?, "smooth plane conic"));
    out.push(Check::eq("g_C3", 1, plane_curve_genus(3)?, "smooth plane cubic"));
    out.push(Check::eq("g_C2cover", 2, hurwitz_double_cover(0, r)?, "Hurwitz, conic branched at 6 points"));
    out.push(Check::eq("g_C3cover", 4, hurwitz_double_cover(1, r)?, "Hurwitz, cubic branched at 6 points"));
    out.push(Check::eq("g_Z", 13, ci_curve_genus(&[3, 2, 2], 4)?, "complete intersection (3, 2, 2) in P^4"));
    let l = prym_dimension_ledger();
    for (name, ok) in l.invariants() {
        out.push(Check::holds(name, ok, "genus ledger identity"));
    }
    Ok(())
}

pub(crate) fn koszul(job: &Job, rng: &mut ChaCha8Rng, out: &mut Vec<Check>) -> SuiteResult {
    let k = koszul_h01_ledger();
    out.push(Check::eq("(h0 O(2), h0 I_Z(2), h01)", (15, 2, 13), (k.h0_quadrics, k.h0_ideal_quadrics, k.h01), "Koszul resolution of (3, 2, 2)"));
    out.push(Check::holds("h01 equals the genus formula", k.consistent, "ω_Z = O_Z(2)"));
    out.push(Check::eq("h0 I_S(2)", 1, ideal_section_dimension(&[2, 3], 2, 4)?, "only the quadric"));
    let i3 = ideal_section_dimension(&[2, 3], 3, 4)?;
    out.push(Check::eq("h0 I_S(3)", 6, i3, "the cubic and the quadric times linear forms"));
    out.push(Check::eq("P(H0 I_S(3))", 5, i3 - 1, "projectivization"));

    let p = 101;
    let inst = Sampler::new(job.bound).over(BaseField::Prime(p)).sample(job.seed)?;
    let need = 3 * monomial_count(5, 3);
    let pts = points_on_surface(&inst, 0, p, need, rng)?;
    for d in 1..=3 {
        out.push(Check::eq(
            &format!("F{p} evaluation rank, S, d = {d}"),
            ideal_section_dimension(&[2, 3], d, 4)?,
            evaluation_rank_deficiency(&pts, d) as u64,
            "forms of degree d vanishing on sampled points",
        ));
    }
    let p = 1009;
    let inst = Sampler::new(job.bound).over(BaseField::Prime(p)).quadrics(2).sample(job.seed)?;
    let pts = points_on_curve_z(&inst, p, need, rng)?;
    for d in 1..=3 {
        out.push(Check::eq(
            &format!("F{p} evaluation rank, Z, d = {d}"),
            ideal_section_dimension(&[2, 2, 3], d, 4)?,
            evaluation_rank_deficiency(&pts, d) as u64,
            "forms of degree d vanishing on sampled points",
        ));
    }
    Ok(())
}

pub(crate) fn split(out: &mut Vec<Check>) -> SuiteResult {
    let s = sym2_eigensplit();
    out.push(Check::eq("Sym2 V−, V−⊗V+, Sym2 V+", (3, 6, 6), (s.sym2_minus, s.mixed, s.sym2_plus), "dimensions of the τ-graded pieces"));
    out.push(Check::eq("invariant / anti-invariant quadrics", (9, 6), (s.invariant_total, s.anti_invariant_total), "3 + 6 and 6"));
    out.push(Check::eq("quadrics on P^4", 15, s.total, "Sym2 of a 5-dimensional space"));
    let j = jacobian_tau_split();
    out.push(Check::eq("H01(Z) split (+, −)", (7, 6), (j.plus, j.minus), "eigenspaces of H0(O_Z(2))"));
    out.push(Check::eq("H01(Z) total", 13, j.total(), "g_Z"));
    let l = prym_dimension_ledger();
    out.push(Check::eq("(dim P2, dim P3)", (2, 3), (l.dim_p2, l.dim_p3), "g(cover) − g(base)"));
    out.push(Check::eq("dim P2 + dim P3 = h21", l.h21_cubic, l.dim_p, "Jacobian ring of the cubic threefold in degree 1"));
    out.push(Check::eq("isogeny degree bound", 64, l.isogeny_degree_bound, "2^r with r = 6 branch points"));
    Ok(())
}

pub(crate) fn fixed_points(inst: &TauInstance, out: &mut Vec<Check>) -> SuiteResult {
    let f = fixed_points_on_s(inst, 0)?;
    let line: u32 = f.on_line.iter().map(|p| p.multiplicity).sum();
    out.push(Check::eq("on the fixed line", 2, line as usize, "roots of a binary quadratic"));
    out.push(Check::eq("in the fixed plane", 6, f.on_plane.total, "Bézout, 2 · 3"));
    out.push(Check::eq("total", 8, f.total, "2 + 6"));
    out.push(generic("all distinct", f.all_distinct, "general position"));
    Ok(())
}

pub(crate) fn quotient(inst: &TauInstance, job: &Job, rng: &mut ChaCha8Rng, out: &mut Vec<Check>) -> SuiteResult {
    let t = quotient_equation(inst, 0)?;
    out.push(Check::eq("bidegree", [2, 3], t.bideg, "Φ f2 − F f3 is quadratic in (x0, x1)"));
    out.push(Check::holds("invariant in (x0, x1)", t.is_tau_invariant(), "only even degrees in x0, x1"));
    let b = branch_sextic(inst, 0, job.prime, rng)?;
    out.push(Check::eq("branch discriminant degree", 6, b.degree, "B² − 4AC with A, B, C cubics"));
    let status = match b.squarefree {
        SquarefreeVerdict::Squarefree { .. } => Status::Passed,
        _ => Status::Inconclusive,
    };
    out.push(Check::with_status("branch sextic squarefree", json!("squarefree"), serde_json::to_value(&b.squarefree)?, status, "random lines over F_p"));
    let c = sextic_vs_quintic(inst, 0, job.prime, 50, rng)?;
    out.push(Check::eq("sextic = −f2² · conic on the cubic", c.sampled, c.agree, "A, B, C evaluated where f3 = 0"));
    let pb = pullback_check(inst, 0, job.prime, 20, rng)?;
    out.push(Check::eq("surface points satisfy the equation", pb.forward, pb.forward_ok, "Φ f2 − F f3 lies in the ideal"));
    out.push(Check::eq("zeros lift to the surface", pb.backward, pb.backward_ok, "F = 0 solved for the scale"));
    Ok(())
}
