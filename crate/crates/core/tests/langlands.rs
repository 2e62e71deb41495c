use exq::langlands::{
    build_phi, component_pairs, dominance_leq, eval_phi, murnaghan_nakayama, partitions, springer_a, Cocharacter, OrbitLabel, Partition, PrincipalSeries, B2Orbit,
    G2Orbit,
};
use exq::fingrp::DEFAULT_BOUND;
use exq::torus::{Scalar, TorusPoint};
use exq::weyl::{InertialDatum, RootDatum, WsMode};

type Mat = Vec<Vec<i64>>;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn bracket(a: &Mat, b: &Mat) -> Mat {
    let (ab, ba) = (mat_mul(a, b), mat_mul(b, a));
    ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

fn scale(a: &Mat, c: i64) -> Mat {
    a.iter().map(|r| r.iter().map(|x| c * x).collect()).collect()
}

/// Explicit sl2-triple on a Jordan block of size `m`; returns the diagonal of `h`.
fn block_h(m: usize) -> Vec<i64> {
    let mut e = vec![vec![0; m]; m];
    let mut f = vec![vec![0; m]; m];
    let mut h = vec![vec![0; m]; m];
    for i in 0..m {
        h[i][i] = m as i64 - 1 - 2 * i as i64;
        if i + 1 < m {
            e[i][i + 1] = 1;
            f[i + 1][i] = ((i + 1) * (m - i - 1)) as i64;
        }
    }
    assert_eq!(bracket(&h, &e), scale(&e, 2));
    assert_eq!(bracket(&h, &f), scale(&f, -2));
    assert_eq!(bracket(&e, &f), h);
    (0..m).map(|i| h[i][i]).collect()
}

fn scalar(mag: (i64, i64), angle: (i64, i64)) -> Scalar {
    Scalar::from_parts(mag, angle).unwrap()
}

fn series(name: &str) -> PrincipalSeries {
    let rd = RootDatum::builtin(name).unwrap();
    let inert = InertialDatum::trivial(rd.rank);
    PrincipalSeries::new(rd, inert, WsMode::Stabilizer, DEFAULT_BOUND).unwrap()
}

#[test]
fn jm_exponents_match_explicit_triples() {
    for n in 1..=8 {
        for lambda in partitions(n) {
            let mut oracle: Vec<i64> = lambda.parts().iter().flat_map(|&m| block_h(m)).collect();
            oracle.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(lambda.jm_exponents(), oracle, "{lambda:?}");
            assert_eq!(Partition::from_jm_exponents(&oracle), Some(lambda));
        }
    }
}

#[test]
fn springer_a_endpoints() {
    for n in 1..=7 {
        assert_eq!(springer_a(&Partition::zero(n)), Partition::regular(n));
        assert_eq!(springer_a(&Partition::regular(n)), Partition::zero(n));
    }
}

#[test]
fn springer_a_reverses_dominance() {
    for n in 1..=6 {
        let ps = partitions(n);
        for a in &ps {
            for b in &ps {
                assert_eq!(dominance_leq(a, b).unwrap(), dominance_leq(&springer_a(b), &springer_a(a)).unwrap());
            }
        }
    }
}

#[test]
fn dominance_examples() {
    let p = |v: &[usize]| Partition::new(v.to_vec());
    assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
    assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
    assert!(!dominance_leq(&p(&[3, 3]), &p(&[4, 1, 1])).unwrap());
    assert!(!dominance_leq(&p(&[4, 1, 1]), &p(&[3, 3])).unwrap());
    assert!(dominance_leq(&p(&[1, 1, 1]), &p(&[3])).unwrap());
    assert!(dominance_leq(&p(&[2]), &p(&[1, 1, 1])).is_err());
}

#[test]
fn character_degrees_square_sum_to_factorial() {
    for n in 1..=7 {
        let order: i64 = (1..=n as i64).product();
        let id = Partition::zero(n);
        let total: i64 = partitions(n).iter().map(|l| murnaghan_nakayama(l, &id).pow(2)).sum();
        assert_eq!(total, order);
    }
}

#[test]
fn gl2_parameter_at_a_central_point() {
    let z = scalar((3, 1), (1, 3));
    let t = TorusPoint::new(vec![z.clone(), z.clone()]);
    let phi = build_phi(&InertialDatum::trivial(2), &t, &Partition::regular(2)).unwrap();
    assert_eq!(phi.h, Cocharacter::new(vec![1, -1]));
    let alpha = scalar((5, 1), (0, 1));
    let x = eval_phi(&phi, &[], 1, &alpha).unwrap();
    assert_eq!(x.coords(), &[z.mul(&alpha), z.mul(&alpha.inv())]);
    assert!(build_phi(&InertialDatum::trivial(2), &t, &Partition::regular(3)).is_err());
}

#[test]
fn eval_phi_is_a_homomorphism_in_frobenius() {
    let chi = InertialDatum::new(vec![TorusPoint::from_angles(&[(1, 2), (0, 1), (1, 2)])]).unwrap();
    let t = TorusPoint::new(vec![scalar((2, 1), (1, 5)), scalar((1, 3), (0, 1)), scalar((7, 2), (3, 4))]);
    let phi = build_phi(&chi, &t, &Partition::new(vec![2, 1])).unwrap();
    let one = Scalar::one();
    let a = eval_phi(&phi, &[1], 2, &one).unwrap();
    let b = eval_phi(&phi, &[1], 1, &one).unwrap().mul(&eval_phi(&phi, &[], 1, &one).unwrap()).unwrap();
    assert_eq!(a, b);
    assert_eq!(eval_phi(&phi, &[2], 0, &one).unwrap(), TorusPoint::identity(3));
}

#[test]
fn unipotent_fibers_are_springer_correspondences() {
    for n in 2..=5 {
        let ps = series(&format!("GL{n}"));
        let fiber = ps.springer_fiber(&TorusPoint::identity(n)).unwrap();
        assert_eq!(fiber.len(), partitions(n).len());
        let mut orbits: Vec<OrbitLabel> = fiber.iter().map(|p| p.springer.as_ref().unwrap().orbits()[0].clone()).collect();
        orbits.sort();
        orbits.dedup();
        assert_eq!(orbits.len(), fiber.len());
    }
    let b2 = series("B2").springer_fiber(&TorusPoint::identity(2)).unwrap();
    assert_eq!(b2.len(), 5);
    let g2 = series("G2").springer_fiber(&TorusPoint::identity(2)).unwrap();
    assert_eq!(g2.len(), 6);
}

#[test]
fn cells_of_the_unipotent_fiber() {
    for (name, zero, regular) in [
        ("GL3", OrbitLabel::Partition(Partition::zero(3)), OrbitLabel::Partition(Partition::regular(3))),
        ("B2", OrbitLabel::B2(B2Orbit::Zero), OrbitLabel::B2(B2Orbit::Regular)),
        ("G2", OrbitLabel::G2(G2Orbit::Zero), OrbitLabel::G2(G2Orbit::Regular)),
    ] {
        let ps = series(name);
        for p in ps.springer_fiber(&TorusPoint::identity(ps.rd.rank)).unwrap() {
            let orbit = p.springer.as_ref().unwrap().orbits()[0].clone();
            let cell = ps.cell_of(&p).unwrap();
            assert_eq!(cell.nilpotent.as_ref(), Some(&orbit), "{name}");
            assert_eq!(cell.is_lowest, orbit == zero);
            if orbit == regular {
                assert!(cell.h.iter().any(|&k| k != 0));
            }
        }
    }
}

#[test]
fn component_pairs_have_distinct_characters() {
    for name in ["GL4", "B2", "C2", "G2"] {
        let rd = RootDatum::builtin(name).unwrap();
        let all: Vec<usize> = rd.positive_roots();
        let sub = rd.subsystem(&all);
        for comp in &sub.components {
            let pairs = component_pairs(&rd, comp).unwrap();
            for (i, a) in pairs.iter().enumerate() {
                for b in &pairs[i + 1..] {
                    assert_ne!(a.character, b.character);
                }
            }
        }
    }
}

#[test]
fn diagram_commutes_on_gl3() {
    let ps = series("GL3");
    let points = [
        TorusPoint::identity(3),
        TorusPoint::new(vec![scalar((2, 1), (0, 1)), scalar((2, 1), (0, 1)), scalar((1, 3), (1, 2))]),
        TorusPoint::new(vec![scalar((2, 1), (1, 7)), scalar((3, 1), (0, 1)), scalar((5, 1), (2, 3))]),
    ];
    let alphas = [Scalar::one(), scalar((2, 1), (0, 1)), scalar((1, 3), (1, 4))];
    for t in &points {
        for p in ps.springer_fiber(t).unwrap() {
            let rp = ps.mu_of_point(&p).unwrap();
            for a in &alphas {
                assert_eq!(ps.i_alpha(&rp, a).unwrap(), ps.pi_alpha(&p, a).unwrap());
            }
        }
    }
}

#[test]
fn mu_assemble_finds_fiber_labels() {
    let ps = series("B2");
    let t = TorusPoint::identity(2);
    for p in ps.springer_fiber(&t).unwrap() {
        let d = p.springer.as_ref().unwrap();
        let rp = ps.mu_assemble(&t, &d.orbits(), &d.rhos(), d.psi).unwrap();
        assert_eq!(rp.tau, p.tau);
    }
    assert!(ps.mu_assemble(&t, &[OrbitLabel::G2(G2Orbit::A1)], &[], 0).is_err());
}

#[test]
fn lpackets_at_the_sl4_vertex_form_one_packet() {
    let rd = RootDatum::builtin("PGL4").unwrap();
    let ps = PrincipalSeries::new(rd, exq::cli::report::sl4_inertial(), WsMode::Stabilizer, DEFAULT_BOUND).unwrap();
    let [_, _, (_, vertex)] = exq::cli::report::sl4_points();
    let fiber = ps.springer_fiber(&vertex).unwrap();
    assert_eq!(fiber.len(), 4);
    assert_eq!(ps.lpackets(&fiber).unwrap(), vec![vec![0, 1, 2, 3]]);
}

#[test]
fn lpackets_separate_cells_on_gl2() {
    let ps = series("GL2");
    let fiber = ps.springer_fiber(&TorusPoint::identity(2)).unwrap();
    assert_eq!(ps.lpackets(&fiber).unwrap().len(), 2);
    assert!(ps.lpacket_equiv(&fiber[0], &fiber[0]).unwrap());
}
