//! Acceptance suite: one pass/fail line per criterion, with wall-clock limits.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use exq::cli::report::{run_example_sl4, sl4_inertial, sl4_points, sl4_series};
use exq::clifford::{OrbitStatus, SemidirectDatum};
use exq::exquo::{base_change, extended_quotient_first, fiber_cardinality, first_kind_fiber, piece_count, SecondKindPoint};
use exq::fingrp::{conjugacy_classes, GroupElement, Perm, DEFAULT_BOUND};
use exq::intlat::{smith_normal_form, IntMatrix};
use exq::langlands::{partitions, springer_a, Partition, PrincipalSeries};
use exq::torus::{act, Scalar, TorusPoint};
use exq::weyl::{compute_ws, levi_decompose, weyl_group, CartanType, InertialDatum, RootDatum, WsMode};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn criterion_1() -> Outcome {
    let ps = sl4_series(DEFAULT_BOUND).map_err(err)?;
    let ws = ps.group();
    ensure(ws.order() == 4 && ws.is_abelian(), || format!("W^s of order {}", ws.order()))?;
    ensure(ws.elements().iter().all(|w| w.compose(w).is_identity()), || "W^s has an element of order 4".into())?;
    let eq = extended_quotient_first(ws).map_err(err)?;
    let extra: usize = eq.iter().filter(|c| !c.class_rep.is_identity()).map(|c| c.quotient_component_count).sum();
    ensure(eq.len() == 4 && extra == 6 && piece_count(&eq) == 7, || format!("{} classes, {extra} extra pieces", eq.len()))?;
    for c in eq.iter().filter(|c| !c.class_rep.is_identity()) {
        ensure(c.fixed_locus.component_count == 2, || format!("class {} has {} components", c.class_index, c.fixed_locus.component_count))?;
    }
    for ((name, t), expected) in sl4_points().into_iter().zip([1, 2, 4]) {
        let f = fiber_cardinality(ws, &t).map_err(err)?;
        let first = first_kind_fiber(ws, &eq, &t).map_err(err)?;
        ensure(f.class_count == expected && f.irr_count == expected && first.len() == expected, || format!("{name}: {f:?}"))?;
    }
    let report = run_example_sl4(DEFAULT_BOUND).map_err(err)?;
    ensure(report.all_pass(), || "example report has failing facts".into())
}

fn criterion_2() -> Outcome {
    for (n, p) in [(2, 2), (3, 3), (4, 5), (5, 7), (6, 11)] {
        let rd = RootDatum::general_linear(n).map_err(err)?;
        let w = weyl_group(&rd, DEFAULT_BOUND).map_err(err)?;
        let eq = extended_quotient_first(&w).map_err(err)?;
        ensure(piece_count(&eq) == p, || format!("GL{n}: {} pieces", piece_count(&eq)))?;
        let min_dim = eq.iter().map(|c| c.fixed_locus.dimension).min().unwrap();
        let steinberg: Vec<_> = eq.iter().filter(|c| c.fixed_locus.dimension == min_dim).collect();
        ensure(min_dim == 1 && steinberg.len() == 1 && steinberg[0].quotient_component_count == 1, || format!("GL{n}: Steinberg dimension {min_dim}"))?;
        for f in 1..=3 {
            let bc = base_change(&w, &eq, f).map_err(err)?;
            ensure(bc.well_defined, || format!("GL{n}: base change f = {f} not well defined"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let suite: [(&str, SemidirectDatum<Perm, Perm>); 4] =
        [("S3", common::s3()), ("D4", common::d4()), ("S4", common::s4()), ("B3", common::hyperoctahedral3())];
    for (name, d) in suite {
        let labels = d.clifford_irr_list().map_err(err)?;
        let classes = conjugacy_classes(&d.product).len();
        let order = d.product.order() as u64;
        let sum: u64 = labels.iter().map(|l| l.dim * l.dim).sum();
        ensure(labels.len() == classes && sum == order, || format!("{name}: {} labels, {classes} classes, sum {sum} vs {order}", labels.len()))?;
        let status = d.validate_clifford().map_err(err)?;
        ensure(status.per_orbit.iter().all(|s| *s == OrbitStatus::ProvedTrivial), || format!("{name}: {:?}", status.per_orbit))?;
    }
    Ok(())
}

/// Point with coordinates drawn from a small pool, so that stabilizers are often nontrivial.
fn random_point(rng: &mut ChaCha8Rng, rank: usize) -> TorusPoint {
    let pool: Vec<Scalar> = (0..3)
        .map(|_| {
            let den = [1, 2, 3, 4, 6][rng.gen_range(0..5)];
            let mag = if rng.gen_bool(0.6) { (1, 1) } else { (rng.gen_range(1..6), rng.gen_range(1..6)) };
            Scalar::from_parts(mag, (rng.gen_range(0..den), den)).unwrap()
        })
        .collect();
    TorusPoint::new((0..rank).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let data = ["PGL3", "PGL4", "B2", "G2"];
    for k in 0..200 {
        let rd = RootDatum::builtin(data[k % data.len()]).map_err(err)?;
        let w = weyl_group(&rd, DEFAULT_BOUND).map_err(err)?;
        let t = random_point(&mut rng, rd.rank);
        let dec = levi_decompose(&rd, &w, &t).map_err(err)?;
        ensure(dec.is_normal() && dec.trivial_intersection() && dec.product_matches(), || format!("{}: decomposition fails at {t:?}", rd.name))?;
        let f = fiber_cardinality(&w, &t).map_err(err)?;
        ensure(f.class_count == f.irr_count && f.stabilizer_order == dec.w_t.order(), || format!("{}: {f:?}", rd.name))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let mut names: Vec<String> = ["GL", "SL", "PGL"].iter().flat_map(|p| (2..=7).map(move |n| format!("{p}{n}"))).collect();
    names.extend(["B2", "C2", "G2"].map(String::from));
    for name in names {
        let rd = RootDatum::builtin(&name).map_err(err)?;
        let w = weyl_group(&rd, DEFAULT_BOUND).map_err(err)?;
        for mode in [WsMode::Roots, WsMode::Stabilizer] {
            let ws = compute_ws(&rd, &w, &InertialDatum::trivial(rd.rank), mode, DEFAULT_BOUND).map_err(err)?;
            ensure(ws.group.order() == w.order() && ws.roots.len() == rd.num_roots(), || format!("{name}: |W^s| = {}", ws.group.order()))?;
        }
    }
    let rd = RootDatum::builtin("G2").map_err(err)?;
    let w = weyl_group(&rd, DEFAULT_BOUND).map_err(err)?;
    let inert = InertialDatum::new(vec![TorusPoint::from_angles(&[(1, 2), (1, 2)])]).map_err(err)?;
    let ws = compute_ws(&rd, &w, &inert, WsMode::Roots, DEFAULT_BOUND).map_err(err)?;
    let types: Vec<CartanType> = rd.subsystem(&ws.roots).components.iter().map(|c| c.cartan_type.clone()).collect();
    ensure(types == [CartanType::A(1), CartanType::A(1)] && ws.group.order() == 4, || format!("G2: {types:?}, |W^s| = {}", ws.group.order()))
}

fn series(name: &str, inert: Option<InertialDatum>) -> Result<PrincipalSeries, String> {
    let rd = RootDatum::builtin(name).map_err(err)?;
    let inert = inert.unwrap_or_else(|| InertialDatum::trivial(rd.rank));
    PrincipalSeries::new(rd, inert, WsMode::Stabilizer, DEFAULT_BOUND).map_err(err)
}

fn criterion_6() -> Outcome {
    let blocks = [
        series("PGL4", Some(sl4_inertial()))?,
        series("GL2", None)?,
        series("GL3", None)?,
        series("B2", None)?,
        series("C2", None)?,
        series("G2", None)?,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let alphas: Vec<Scalar> = [((1, 1), (0, 1)), ((2, 1), (0, 1)), ((3, 2), (1, 3)), ((1, 5), (3, 4)), ((7, 3), (1, 6))]
        .iter()
        .map(|&(m, a)| Scalar::from_parts(m, a).unwrap())
        .collect();
    let mut checked = 0;
    let mut round = 0;
    while checked < 100 {
        let ps = &blocks[round % blocks.len()];
        round += 1;
        let t = if round <= blocks.len() { TorusPoint::identity(ps.rd.rank) } else { random_point(&mut rng, ps.rd.rank) };
        for p in ps.springer_fiber(&t).map_err(err)? {
            let d = p.springer.as_ref().unwrap();
            let rp = ps.mu_assemble(&t, &d.orbits(), &d.rhos(), d.psi).map_err(err)?;
            for a in &alphas {
                let lhs = ps.i_alpha(&rp, a).map_err(err)?;
                let rhs = ps.pi_alpha(&p, a).map_err(err)?;
                ensure(lhs == rhs, || format!("{}: {lhs:?} vs {rhs:?}", ps.rd.name))?;
            }
            checked += 1;
        }
    }
    Ok(())
}

/// Fiber points together with their images under every element of `W^s`.
fn inventory(ps: &PrincipalSeries, points: &[TorusPoint]) -> Result<Vec<SecondKindPoint>, String> {
    let mut out: Vec<SecondKindPoint> = Vec::new();
    for t in points {
        for p in ps.springer_fiber(t).map_err(err)? {
            for w in ps.group().elements() {
                let mut q = p.clone();
                q.t = act(w, &p.t).map_err(err)?;
                let d = q.springer.as_mut().unwrap();
                d.h = w.on_cocharacter(&d.h);
                if !out.iter().any(|r| r.t == q.t && r.tau == q.tau && r.springer == q.springer) {
                    out.push(q);
                }
            }
        }
    }
    Ok(out)
}

fn check_equivalence(ps: &PrincipalSeries, inv: &[SecondKindPoint]) -> Outcome {
    let n = inv.len();
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            rel[i][j] = ps.lpacket_equiv(&inv[i], &inv[j]).map_err(err)?;
        }
    }
    let cells: Vec<_> = inv.iter().map(|p| ps.cell_of(p)).collect::<Result<_, _>>().map_err(err)?;
    for i in 0..n {
        ensure(rel[i][i], || format!("{}: not reflexive at {i}", ps.rd.name))?;
        for j in 0..n {
            ensure(rel[i][j] == rel[j][i], || format!("{}: not symmetric at {i}, {j}", ps.rd.name))?;
            if rel[i][j] {
                ensure(cells[i] == cells[j], || format!("{}: distinct cells merge", ps.rd.name))?;
                let transitive = (0..n).all(|k| !rel[j][k] || rel[i][k]);
                ensure(transitive, || format!("{}: not transitive through {i}, {j}", ps.rd.name))?;
            }
        }
    }
    for class in ps.lpackets(inv).map_err(err)? {
        let h = ps.canonical_h(&inv[class[0]].springer.as_ref().unwrap().h);
        for &i in &class {
            ensure(ps.canonical_h(&inv[i].springer.as_ref().unwrap().h) == h, || format!("{}: class without a shared h", ps.rd.name))?;
            ensure(class.iter().all(|&j| rel[i][j]), || format!("{}: packet is not an equivalence class", ps.rd.name))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let sl4 = sl4_series(DEFAULT_BOUND).map_err(err)?;
    let points: Vec<TorusPoint> = sl4_points().into_iter().map(|(_, t)| t).collect();
    let inv = inventory(&sl4, &points)?;
    check_equivalence(&sl4, &inv)?;
    let gl3 = series("GL3", None)?;
    let s = |m: (i64, i64), a: (i64, i64)| Scalar::from_parts(m, a).unwrap();
    let z = s((2, 1), (1, 3));
    let points = vec![
        TorusPoint::identity(3),
        TorusPoint::new(vec![z.clone(), z.clone(), z.clone()]),
        TorusPoint::new(vec![Scalar::one(), Scalar::one(), z.clone()]),
        TorusPoint::new(vec![s((1, 1), (1, 2)), Scalar::one(), s((1, 1), (1, 2))]),
        TorusPoint::new(vec![s((2, 1), (0, 1)), s((3, 1), (1, 5)), s((5, 1), (0, 1))]),
    ];
    let inv = inventory(&gl3, &points)?;
    check_equivalence(&gl3, &inv)
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let entries: Vec<i64> = (0..r * c).map(|_| rng.gen_range(-5..=5)).collect();
        let a = IntMatrix::from_i64(r, c, &entries).map_err(err)?;
        let snf = smith_normal_form(&a);
        let uav = snf.u.mul(&a).and_then(|x| x.mul(&snf.v)).map_err(err)?;
        ensure(uav == snf.d, || format!("U A V != D for {a:?}"))?;
        ensure(snf.u.det().map_err(err)?.abs().is_one() && snf.v.det().map_err(err)?.abs().is_one(), || format!("non-unimodular transform for {a:?}"))?;
        let off_diagonal_zero = (0..r).all(|i| (0..c).all(|j| i == j || snf.d.get(i, j).is_zero()));
        let diag = snf.diagonal();
        let chain = diag.windows(2).all(|w| w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        ensure(off_diagonal_zero && chain && diag.iter().all(|d| !d.is_negative()), || format!("not in Smith form: {:?}", snf.d))?;
        let g = entries.iter().fold(BigInt::zero(), |g, &x| g.gcd(&BigInt::from(x)));
        ensure(diag[0] == g, || format!("first invariant factor {} != gcd {g}", diag[0]))?;
    }
    for n in 1..=7 {
        let ps = partitions(n);
        let mut images: Vec<Partition> = ps.iter().map(springer_a).collect();
        images.sort();
        let mut sorted = ps.clone();
        sorted.sort();
        ensure(images == sorted, || format!("springer_A is not a bijection for n = {n}"))?;
        ensure(springer_a(&Partition::zero(n)) == Partition::regular(n), || format!("(1^{n}) does not go to the trivial character"))?;
        ensure(springer_a(&Partition::regular(n)) == Partition::zero(n), || format!("({n}) does not go to the sign character"))?;
    }
    for n in 1..=8 {
        for lambda in partitions(n) {
            let e = lambda.jm_exponents();
            let negated: Vec<i64> = e.iter().rev().map(|x| -x).collect();
            ensure(e.len() == n && e.iter().sum::<i64>() == 0 && negated == e, || format!("JM exponents of {lambda:?}: {e:?}"))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(fn() -> Outcome, u64); 8] = [
        (criterion_1, 1),
        (criterion_2, 5),
        (criterion_3, 5),
        (criterion_4, 30),
        (criterion_5, 1),
        (criterion_6, 10),
        (criterion_7, 10),
        (criterion_8, 30),
    ];
    let mut failures = Vec::new();
    for (k, (run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| ensure(elapsed < Duration::from_secs(*limit), || format!("took {elapsed:?}, limit {limit} s")));
        match &outcome {
            Ok(()) => println!("criterion {}: PASS ({} ms)", k + 1, elapsed.as_millis()),
            Err(e) => {
                println!("criterion {}: FAIL ({} ms): {e}", k + 1, elapsed.as_millis());
                failures.push(k + 1);
            }
        }
    }
    if !failures.is_empty() {
        eprintln!("failing criteria: {failures:?}");
        std::process::exit(1);
    }
}
