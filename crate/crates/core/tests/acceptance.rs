//! The ten acceptance criteria, each printed as one PASS/FAIL line.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use hhkit_core::algebra::{
    center, corner_modules, ideal_generated_by, ideal_square, idempotent_ideal, make_incidence, make_monogenic,
    make_path_algebra_quotient, quotient_algebra, Bimodule, FinDimAlgebra,
};
use hhkit_core::cochain::{
    cup, differential_squares_to_zero, gerstenhaber_bracket, hh_dims, onesided_ext, tor_via_relative_bar, Cochain,
    Cohomology, HochschildComplex,
};
use hhkit_core::combinat::{homological_ideal_report, order_complex, simplicial_cohomology};
use hhkit_core::les::{crown_check, five_term_regular, happel_report_at_vertex, pair_report, ExactSequenceReport};
use hhkit_core::monogenic::{verify_presentation_in_oracle, OracleReport, Orientation};
use hhkit_core::{FieldSpec, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn column(r: &ExactSequenceReport, k: usize, width: usize) -> Vec<usize> {
    r.term_dims.iter().skip(k).step_by(width).copied().collect()
}

/// All monic polynomials of degree `1..=max_deg` with lower coefficients drawn from `coeffs`.
fn monic_family(field: FieldSpec, max_deg: usize, coeffs: &[i64]) -> Vec<Poly> {
    let mut out = Vec::new();
    for n in 1..=max_deg {
        let mut lower = vec![vec![]];
        for _ in 0..n {
            lower = lower.iter().flat_map(|l: &Vec<i64>| coeffs.iter().map(move |&c| [l.clone(), vec![c]].concat())).collect();
        }
        for mut l in lower {
            l.push(1);
            out.push(Poly::from_i64s(field, &l));
        }
    }
    out
}

fn oracle_sample() -> Vec<Poly> {
    let mut fs = monic_family(FieldSpec::Rationals, 4, &[-1, 0, 1]);
    fs.extend(monic_family(FieldSpec::Prime(2), 3, &[0, 1]));
    fs.extend(monic_family(FieldSpec::Prime(3), 3, &[0, 1, 2]));
    fs
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let pres = triangle(FieldSpec::Rationals);
    let a = make_path_algebra_quotient(&pres).unwrap();
    let hh_a = hh_dims(&a, 4).unwrap();
    ensure(hh_a == [2, 1, 0, 0, 0], || format!("HH(A) = {hh_a:?}"))?;
    let e = a.basis_vector(0);
    let ideal = idempotent_ideal(&a, &e).unwrap();
    let hh_b = hh_dims(&quotient_algebra(&a, &ideal).unwrap().0, 4).unwrap();
    ensure(hh_b == [1, 0, 0, 0, 0], || format!("HH(B) = {hh_b:?}"))?;
    let corners = corner_modules(&a, &e).unwrap();
    let ext = onesided_ext(&a, &corners.d_ea, &corners.ae, 4).unwrap();
    ensure(ext[..4] == [1, 1, 0, 0], || format!("Ext(D(e₁A), Ae₁) = {ext:?}"))?;
    let z = center(&a).intersect(&ideal).dim();
    ensure(z == 1, || format!("dim Z(A)∩I = {z}"))?;
    let report = happel_report_at_vertex(&pres, "1", 4, 4).unwrap();
    ensure(report.is_exact() && report.passed(), || format!("Happel report not exact:\n{report}"))?;
    ensure(column(&report, 1, 3) == hh_a, || "report HH(A) column differs".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("HH(A) = {hh_a:?}, HH(B) = {hh_b:?}, Ext = {:?}, Z∩I = {z}, {elapsed:.2?}", &ext[..4]))
}

fn criteria_2_and_3(reports: &[(Poly, OracleReport)]) -> (Check, Check) {
    let mut two = Ok(());
    let mut three = Ok(());
    for (f, r) in reports {
        if two.is_ok() && !r.dims_agree {
            two = Err(format!(
                "f = {f} over {}: closed {:?}, oracle {:?}, periodic {:?}",
                f.field(),
                r.closed_form,
                r.oracle,
                r.periodic
            ));
        }
        if three.is_ok() && (!r.ring_relation || r.u_vanishes == Some(false)) {
            three = Err(format!("f = {f} over {}: ring relation {}, u = {}", f.field(), r.ring_relation, r.presentation.u));
        }
    }
    let n = reports.len();
    let odd = reports.iter().filter(|(f, _)| f.field().characteristic() != 2).count();
    (
        two.map(|_| format!("{n} polynomials, degrees 0..6")),
        three.map(|_| format!("{n} polynomials; u ≡ 0 mod d checked on {odd} away from characteristic two")),
    )
}

fn criterion_4() -> Check {
    let mut orientations = Vec::new();
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
        for c in [&[0, 0, 1][..], &[0, 0, 0, 1], &[0, 0, -1, 1], &[-1, 0, 0, 1]] {
            let f = Poly::from_i64s(field, c);
            let r = verify_presentation_in_oracle(&f, 3).unwrap();
            ensure(r.zeta_tau.holds(), || format!("[z, t] ∓ w z is not a coboundary for {f} over {field}"))?;
            ensure(r.zeta_zeta_vanishes && r.tau_tau_vanishes, || format!("[z,z] or [t,t] nonzero for {f} over {field}"))?;
            orientations.push(r.zeta_tau);
        }
    }
    let opposite = orientations.contains(&Orientation::Opposite);
    let as_stated = orientations.contains(&Orientation::AsStated);
    ensure(!(opposite && as_stated), || format!("orientations disagree: {orientations:?}"))?;
    let sign = if opposite { "opposite" } else { "as stated" };
    Ok(format!("12 cases, orientation {sign}"))
}

fn criterion_5() -> Check {
    let catalogue = all_posets(5);
    ensure(catalogue.len() >= 20, || format!("only {} posets", catalogue.len()))?;
    let field = FieldSpec::Rationals;
    let mut posets: Vec<_> = catalogue.iter().map(|(n, rel)| poset_of(*n, rel)).collect();
    posets.push(circle());
    for x in &posets {
        let hh = hh_dims(&make_incidence(x, field), 3).unwrap();
        let top = simplicial_cohomology(&order_complex(x), None, 3, field).unwrap();
        ensure(hh == top, || format!("{:?}: HH(kX) = {hh:?}, H(|X|) = {top:?}", x.covers()))?;
        let ch = hh_dims(&make_incidence(&x.chain_poset(), field), 3).unwrap();
        ensure(ch == hh, || format!("{:?}: HH(k Ch(X)) = {ch:?}, HH(kX) = {hh:?}", x.covers()))?;
    }
    Ok(format!("{} posets: every isomorphism class with at most five elements, and the circle", posets.len()))
}

fn criterion_6() -> Check {
    let x = circle();
    let field = FieldSpec::Rationals;
    let r = pair_report(&x, &labels(&["a", "b"]), 3, field).unwrap();
    let rel = column(&r, 0, 3);
    ensure(rel[..3] == [0, 2, 0], || format!("relative dims {rel:?}"))?;
    ensure(r.passed(), || format!("pair report failed:\n{r}"))?;
    let all = pair_report(&x, &labels(&["a", "b", "c", "d"]), 3, field).unwrap();
    ensure(all.passed() && column(&all, 0, 3).iter().all(|&d| d == 0), || format!("Y = X:\n{all}"))?;
    let none = pair_report(&x, &[], 3, field).unwrap();
    ensure(none.passed() && column(&none, 0, 3) == column(&none, 1, 3), || format!("Y = ∅:\n{none}"))?;
    Ok(format!("relative dims {rel:?}, status {:?}", r.status))
}

fn criterion_7() -> Check {
    let field = FieldSpec::Rationals;
    let catalogue = quiver_catalogue(field);
    ensure(catalogue.len() >= 10, || "catalogue too small".into())?;
    let (mut certified, mut non_idempotent) = (0, 0);
    for (name, pres) in &catalogue {
        for v in pres.quiver().vertices() {
            let r = homological_ideal_report(pres, v, 4).unwrap();
            ensure(r.dim_i_mod_i2 == 0, || format!("{name}, vertex {v}: AeA is not idempotent"))?;
            if r.internal_vertex || r.projective {
                certified += 1;
                ensure(r.tor[1..=4].iter().all(|&t| t == 0), || format!("{name}, vertex {v}: Tor = {:?}", r.tor))?;
            }
        }
        let alg = make_path_algebra_quotient(pres).unwrap();
        for a in pres.quiver().arrows() {
            let i = alg.index_of(&a.name).unwrap();
            let ideal = ideal_generated_by(&alg, &[alg.basis_vector(i)]);
            let quotient = ideal.dim() - ideal_square(&alg, &ideal).dim();
            if quotient > 0 {
                non_idempotent += 1;
                let tor = tor_via_relative_bar(&alg, &ideal, 1).unwrap();
                ensure(tor[1] == quotient, || format!("{name}, ideal ({}): Tor₁ = {}, dim I/I² = {quotient}", a.name, tor[1]))?;
            }
        }
    }
    ensure(certified > 0 && non_idempotent > 0, || "no cases exercised".into())?;
    Ok(format!(
        "{} presentations; {certified} certified vertex ideals with Tor vanishing, {non_idempotent} arrow ideals with Tor₁ = dim I/I² > 0",
        catalogue.len()
    ))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (n, m) in [(2, 2), (3, 1), (3, 2)] {
        let r = crown_check(n, m, 5, FieldSpec::Rationals).unwrap();
        if let Some(f) = r.first_failure() {
            return Err(format!("(n, m) = ({n}, {m}): {f}"));
        }
        parts.push(format!("({n},{m}) l = {} dims {:?}", r.l, r.dims));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{}; relations of length nm", parts.join(", ")))
}

fn criterion_9() -> Check {
    let field = FieldSpec::Rationals;
    let x4 = make_monogenic(&Poly::from_i64s(field, &[0, 0, 0, 0, 1])).unwrap();
    let x2 = ideal_generated_by(&x4, &[x4.basis_vector(2)]);
    let tri = make_path_algebra_quotient(&triangle(field)).unwrap();
    let e1 = idempotent_ideal(&tri, &tri.basis_vector(0)).unwrap();
    let mut out = Vec::new();
    for (name, alg, ideal) in [("k[X]/X⁴ → k[X]/X²", &x4, &x2), ("triangle → triangle/Ae₁A", &tri, &e1)] {
        let r = five_term_regular(alg, ideal).unwrap();
        ensure(r.maps.iter().all(Option::is_some), || format!("{name}: a map is missing"))?;
        ensure(r.exact_at[1..4].iter().all(|e| *e == Some(true)), || format!("{name}:\n{r}"))?;
        ensure(r.passed(), || format!("{name}:\n{r}"))?;
        out.push(format!("{name} dims {:?}", r.term_dims));
    }
    Ok(out.join(", "))
}

fn random_cocycle(rng: &mut impl Rng, h: &Cohomology, cx: &HochschildComplex, p: usize) -> Cochain {
    let field = cx.field();
    let mut c = Cochain::zero(field, p, cx.dim(p));
    for rep in h.space(p).representatives() {
        c = c.add(&rep.scale(&field.from_i64(rng.gen_range(-2..=2))));
    }
    if p > 0 {
        let values = (0..cx.dim(p - 1)).map(|_| field.from_i64(if rng.gen_bool(0.2) { rng.gen_range(-2..=2) } else { 0 })).collect();
        c = c.add(&cx.apply_differential(&Cochain { degree: p - 1, values }));
    }
    c
}

fn sign(field: FieldSpec, odd: bool) -> hhkit_core::Scalar {
    field.from_i64(if odd { -1 } else { 1 })
}

/// Graded commutativity of cup, antisymmetry of the bracket and the Poisson
/// rule, each up to coboundary on random cocycles of degree at most one.
fn product_identities(rng: &mut impl Rng, alg: &FinDimAlgebra, name: &str) -> Result<usize, String> {
    let h = Cohomology::new(alg, &Bimodule::regular(alg), 3).unwrap();
    let cx = h.complex();
    let field = alg.field();
    let cob = |c: &Cochain| cx.is_coboundary(c).unwrap();
    let mut checks = 0;
    for _ in 0..3 {
        let p = rng.gen_range(0..=1);
        let q = rng.gen_range(0..=1);
        let r = rng.gen_range(0..=1);
        let (f, g, k) = (random_cocycle(rng, &h, cx, p), random_cocycle(rng, &h, cx, q), random_cocycle(rng, &h, cx, r));
        let comm = cup(alg, cx, &f, &g).sub(&cup(alg, cx, &g, &f).scale(&sign(field, p * q % 2 == 1)));
        ensure(cob(&comm), || format!("{name}: cup not graded commutative in degrees {p}, {q}"))?;
        if p + q >= 1 {
            let anti = gerstenhaber_bracket(cx, &f, &g)
                .add(&gerstenhaber_bracket(cx, &g, &f).scale(&sign(field, (p + 1) * (q + 1) % 2 == 1)));
            ensure(cob(&anti), || format!("{name}: bracket not antisymmetric in degrees {p}, {q}"))?;
        }
        if p == 1 {
            let lhs = gerstenhaber_bracket(cx, &f, &cup(alg, cx, &g, &k));
            let rhs = cup(alg, cx, &gerstenhaber_bracket(cx, &f, &g), &k).add(
                &cup(alg, cx, &g, &gerstenhaber_bracket(cx, &f, &k)).scale(&sign(field, (p + 1) * q % 2 == 1)),
            );
            ensure(cob(&lhs.sub(&rhs)), || format!("{name}: Poisson rule fails in degrees {p}, {q}, {r}"))?;
        }
        checks += 1;
    }
    Ok(checks)
}

fn criterion_10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20_241);
    let mut complexes = 0;
    let mut dd = |alg: &FinDimAlgebra, m: &Bimodule, name: &str| -> Result<(), String> {
        complexes += 1;
        let cx = HochschildComplex::new(alg, m, 4).unwrap();
        ensure(differential_squares_to_zero(&cx), || format!("d∘d ≠ 0 for {name}"))
    };

    let mut algebras: Vec<(String, FinDimAlgebra)> = Vec::new();
    for field in [FieldSpec::Rationals, FieldSpec::Prime(3)] {
        for (name, pres) in quiver_catalogue(field) {
            algebras.push((format!("{name} over {field}"), make_path_algebra_quotient(&pres).unwrap()));
        }
    }
    for f in [&[0, 0, 1][..], &[0, 0, -1, 1], &[1, 0, 0, 1]] {
        algebras.push((format!("monogenic {f:?}"), make_monogenic(&Poly::from_i64s(FieldSpec::Rationals, f)).unwrap()));
    }
    for k in 0..6 {
        let pres = random_presentation(&mut rng, FieldSpec::Prime(5));
        algebras.push((format!("random quiver {k}"), make_path_algebra_quotient(&pres).unwrap()));
    }
    for (name, alg) in &algebras {
        dd(alg, &Bimodule::regular(alg), name)?;
        dd(alg, &Bimodule::regular(alg).dual(), &format!("{name} with dual coefficients"))?;
    }

    let mut identity_checks = 0;
    for (name, alg) in algebras.iter().step_by(3) {
        identity_checks += product_identities(&mut rng, alg, name)?;
    }

    let mut harness = 0;
    for _ in 0..12 {
        let field = [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(5)][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=5);
        let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).chain([1]).collect();
        let f = Poly::from_i64s(field, &coeffs);
        let r = verify_presentation_in_oracle(&f, 4).unwrap();
        ensure(r.passed(), || format!("monogenic {f} over {field}: {r:?}"))?;
        harness += 1;
    }
    for _ in 0..10 {
        let n = rng.gen_range(2..=6);
        let x = random_poset(&mut rng, n, 0.4);
        let field = FieldSpec::Prime(rng.gen_range(0..2) * 4 + 3);
        let hh = hh_dims(&make_incidence(&x, field), 3).unwrap();
        let top = simplicial_cohomology(&order_complex(&x), None, 3, field).unwrap();
        ensure(hh == top, || format!("random poset {:?}: {hh:?} vs {top:?}", x.covers()))?;
        let ideal: Vec<String> = x.elements().iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        if x.is_order_ideal(&ideal).unwrap() {
            let r = pair_report(&x, &ideal, 3, field).unwrap();
            ensure(r.passed(), || format!("pair report for {:?} rel {ideal:?}:\n{r}", x.covers()))?;
        }
        harness += 1;
    }
    for _ in 0..8 {
        let pres = random_presentation(&mut rng, FieldSpec::Rationals);
        let alg = make_path_algebra_quotient(&pres).unwrap();
        for v in pres.quiver().vertices() {
            let verdict = homological_ideal_report(&pres, v, 3).unwrap();
            if (verdict.internal_vertex || verdict.projective) && verdict.dim_ideal < alg.dim() {
                let r = happel_report_at_vertex(&pres, v, 3, 3).unwrap();
                ensure(r.passed(), || format!("Happel at {v} for {:?}:\n{r}", pres.relations()))?;
            }
        }
        if let Some(a) = pres.quiver().arrows().first() {
            let i = alg.index_of(&a.name).unwrap();
            let ideal = ideal_generated_by(&alg, &[alg.basis_vector(i)]);
            if ideal.dim() < alg.dim() {
                let r = five_term_regular(&alg, &ideal).unwrap();
                ensure(r.passed(), || format!("five-term for ({}) in {:?}:\n{r}", a.name, pres.relations()))?;
            }
        }
        harness += 1;
    }
    Ok(format!("d∘d = 0 on {complexes} complexes; {identity_checks} product identity rounds; {harness} randomized cases (seed 20241)"))
}

#[test]
fn acceptance_criteria() {
    let mut results: Vec<(usize, Check)> = Vec::new();
    results.push((1, criterion_1()));
    let sample: Vec<(Poly, OracleReport)> =
        oracle_sample().into_iter().map(|f| { let r = verify_presentation_in_oracle(&f, 6).unwrap(); (f, r) }).collect();
    let (two, three) = criteria_2_and_3(&sample);
    results.push((2, two));
    results.push((3, three));
    results.push((4, criterion_4()));
    results.push((5, criterion_5()));
    results.push((6, criterion_6()));
    results.push((7, criterion_7()));
    results.push((8, criterion_8()));
    results.push((9, criterion_9()));
    results.push((10, criterion_10()));

    let mut err = std::io::stderr().lock();
    let mut failed = Vec::new();
    for (k, r) in &results {
        match r {
            Ok(detail) => writeln!(err, "criterion {k:>2}: PASS  {detail}").unwrap(),
            Err(why) => {
                writeln!(err, "criterion {k:>2}: FAIL  {why}").unwrap();
                failed.push(*k);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
