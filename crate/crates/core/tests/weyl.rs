use exq::fingrp::{close_group, conjugacy_classes, GroupElement, DEFAULT_BOUND};
use exq::torus::{act, MonomialAction, Scalar, TorusPoint};
use exq::weyl::{compute_ws, levi_decompose, stabilizer_of_point, weyl_group, CartanType, InertialDatum, RootDatum, WsMode};

fn sl4_inertial() -> InertialDatum {
    InertialDatum::new(vec![TorusPoint::from_angles(&[(1, 2), (1, 2), (1, 2)]), TorusPoint::from_angles(&[(0, 1), (1, 2), (0, 1)])]).unwrap()
}

#[test]
fn weyl_group_orders() {
    for (name, order) in [("PGL2", 2), ("PGL4", 24), ("G2", 12), ("B2", 8), ("GL5", 120)] {
        let rd = RootDatum::builtin(name).unwrap();
        assert_eq!(weyl_group(&rd, DEFAULT_BOUND).unwrap().order(), order);
    }
}

#[test]
fn trivial_character_gives_whole_weyl_group() {
    let rd = RootDatum::builtin("PGL4").unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    for mode in [WsMode::Roots, WsMode::Stabilizer] {
        let ws = compute_ws(&rd, &w, &InertialDatum::trivial(3), mode, DEFAULT_BOUND).unwrap();
        assert_eq!(ws.roots.len(), 12);
        assert_eq!(ws.group.order(), 24);
    }
}

#[test]
fn sl4_klein_four() {
    let rd = RootDatum::builtin("PGL4").unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let ws = compute_ws(&rd, &w, &sl4_inertial(), WsMode::Stabilizer, DEFAULT_BOUND).unwrap();
    assert_eq!(ws.group.order(), 4);
    assert!(ws.group.is_abelian());
    assert!(ws.group.elements().iter().all(|x| x.compose(x).is_identity()));
    assert!(ws.roots.is_empty());
    // Non-identity elements are double transpositions: fixed lattice of rank 1 on X_*.
    let classes = conjugacy_classes(&w);
    let dt: Vec<usize> = ws.group.elements().iter().skip(1).map(|x| classes.class_of(w.index_of(x).unwrap())).collect();
    assert!(dt.iter().all(|&c| c == dt[0] && classes.classes[c].len() == 3));
}

#[test]
fn g2_square_of_quadratic() {
    let rd = RootDatum::builtin("G2").unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let inert = InertialDatum::new(vec![TorusPoint::from_angles(&[(1, 2), (1, 2)])]).unwrap();
    let ws = compute_ws(&rd, &w, &inert, WsMode::Roots, DEFAULT_BOUND).unwrap();
    assert_eq!(ws.roots.len(), 4);
    assert_eq!(ws.group.order(), 4);
    let sub = rd.subsystem(&ws.roots);
    assert_eq!(sub.components.iter().map(|c| c.cartan_type.clone()).collect::<Vec<_>>(), vec![CartanType::A(1), CartanType::A(1)]);
    // One long and one short component.
    let lens: Vec<i64> = sub.simple.iter().map(|&k| rd.root_length(k)).collect();
    assert_ne!(lens[0], lens[1]);
}

#[test]
fn stabilizers() {
    let rd = RootDatum::builtin("PGL4").unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let ws = compute_ws(&rd, &w, &sl4_inertial(), WsMode::Stabilizer, DEFAULT_BOUND).unwrap().group;
    assert_eq!(stabilizer_of_point(&ws, &TorusPoint::identity(3)).unwrap().order(), 4);
    let edge = TorusPoint::from_angles(&[(0, 1), (4, 5), (0, 1)]);
    assert_eq!(stabilizer_of_point(&ws, &edge).unwrap().order(), 2);
    let generic = TorusPoint::new(vec![Scalar::positive(2, 1), Scalar::positive(3, 1), Scalar::positive(5, 1)]);
    assert_eq!(stabilizer_of_point(&w, &generic).unwrap().order(), 1);
    // Conjugation equivariance.
    for x in w.elements() {
        let moved = act(x, &edge).unwrap();
        let a = stabilizer_of_point(&w, &moved).unwrap();
        let b = stabilizer_of_point(&w, &edge).unwrap();
        let conj: Vec<MonomialAction> = b.elements().iter().map(|s| x.compose(s).compose(&x.inverse())).collect();
        assert!(conj.iter().all(|c| a.contains(c)));
    }
}

#[test]
fn levi_examples() {
    let rd = RootDatum::builtin("PGL2").unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let d = levi_decompose(&rd, &w, &TorusPoint::from_angles(&[(1, 2)])).unwrap();
    assert_eq!((d.w_t.order(), d.w_m0.order(), d.pi0.order()), (2, 1, 2));
    assert!(d.verify());

    let rd = RootDatum::builtin("GL2").unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let z = Scalar::from_parts((7, 3), (2, 11)).unwrap();
    let d = levi_decompose(&rd, &w, &TorusPoint::new(vec![z.clone(), z])).unwrap();
    assert_eq!((d.w_t.order(), d.w_m0.order(), d.pi0.order()), (2, 2, 1));

    let rd = RootDatum::builtin("G2").unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let d = levi_decompose(&rd, &w, &TorusPoint::identity(2)).unwrap();
    assert_eq!((d.w_t.order(), d.w_m0.order(), d.pi0.order()), (12, 12, 1));
    assert!(d.verify());
    let _ = close_group(&[MonomialAction::identity(1)], 2).unwrap();
}
