use exq::cli::report::{sl4_inertial, sl4_points};
use exq::cyclotomic::Cyclotomic;
use exq::exquo::{base_change, build_c_irr_system, extended_quotient_first, fiber_cardinality, first_kind_fiber, isotropy_groups, piece_count, second_kind_fiber};
use exq::fingrp::{FinGroup, TabulatedGroup, DEFAULT_BOUND};
use exq::torus::{MonomialAction, TorusPoint};
use exq::weyl::{compute_ws, weyl_group, RootDatum, WsMode};

fn sl4_ws() -> FinGroup<MonomialAction> {
    let rd = RootDatum::builtin("PGL4").unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    compute_ws(&rd, &w, &sl4_inertial(), WsMode::Stabilizer, DEFAULT_BOUND).unwrap().group
}

/// Partition numbers by the pentagonal-number recurrence.
fn partition_number(n: usize) -> usize {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p[n] as usize
}

#[test]
fn sl4_has_six_extra_pieces() {
    let eq = extended_quotient_first(&sl4_ws()).unwrap();
    assert_eq!(eq.len(), 4);
    assert_eq!(piece_count(&eq), 7);
    for c in eq.iter().filter(|c| !c.class_rep.is_identity()) {
        assert_eq!((c.fixed_locus.dimension, c.fixed_locus.component_count, c.quotient_component_count), (1, 2, 2));
    }
}

#[test]
fn sl4_fibers() {
    let ws = sl4_ws();
    let expected = [1, 2, 4];
    for ((_, t), e) in sl4_points().into_iter().zip(expected) {
        let f = fiber_cardinality(&ws, &t).unwrap();
        assert_eq!(f.class_count, e);
        assert_eq!(f.irr_count, e);
        assert_eq!(second_kind_fiber(&ws, &t).unwrap().len(), e);
        let eq = extended_quotient_first(&ws).unwrap();
        let pieces = first_kind_fiber(&ws, &eq, &t).unwrap();
        let mut distinct = pieces.clone();
        distinct.sort_unstable();
        distinct.dedup();
        assert_eq!(distinct.len(), e, "pieces {pieces:?}");
    }
}

#[test]
fn general_linear_component_counts() {
    for n in 1..=6 {
        let rd = RootDatum::general_linear(n).unwrap();
        let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
        let eq = extended_quotient_first(&w).unwrap();
        assert_eq!(piece_count(&eq), partition_number(n), "n = {n}");
        // Fixed loci of permutation matrices are connected, of dimension the number of cycles.
        assert!(eq.iter().all(|c| c.fixed_locus.component_count == 1));
    }
}

#[test]
fn base_change_on_gl2() {
    let rd = RootDatum::general_linear(2).unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let eq = extended_quotient_first(&w).unwrap();
    for f in 1..=3 {
        let bc = base_change(&w, &eq, f).unwrap();
        assert!(bc.well_defined);
        assert!(bc.maps.iter().all(|m| m == &vec![0]));
    }
    assert!(base_change(&w, &eq, 0).is_err());
}

#[test]
fn base_change_moves_components_of_disconnected_loci() {
    let rd = RootDatum::builtin("PGL2").unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let eq = extended_quotient_first(&w).unwrap();
    let refl = eq.iter().find(|c| !c.class_rep.is_identity()).unwrap();
    assert_eq!(refl.fixed_locus.component_count, 2);
    let bc = base_change(&w, &eq, 2).unwrap();
    // Squaring sends both fixed points {1, -1} to 1.
    assert_eq!(bc.maps[refl.class_index], vec![0, 0]);
    assert!(bc.well_defined);
}

#[test]
fn isotropy_groups_of_s3() {
    let rd = RootDatum::general_linear(3).unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let orders: Vec<usize> = isotropy_groups(&w).unwrap().iter().map(|h| h.order()).collect();
    assert_eq!(orders, vec![1, 2, 6]);
}

#[test]
fn c_irr_pairs_long_cycles_with_trivial() {
    let rd = RootDatum::general_linear(3).unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let sys = build_c_irr_system(&rd, &w).unwrap();
    assert!(sys.entries.iter().all(|e| e.canonical));
    for (entry, h) in sys.entries.iter().zip(isotropy_groups(&w).unwrap()) {
        let tab = TabulatedGroup::new(h).unwrap();
        for &(class, row) in &entry.pairing {
            let x = tab.group.element(tab.classes.representatives[class]);
            let values = tab.table.row(row);
            let trivial = values.iter().all(|v| *v == Cyclotomic::one());
            // The class fixing the fewest coordinates pairs with the trivial character.
            let fixed_dim = exq::torus::fixed_locus(x).dimension;
            let min_dim = tab.classes.representatives.iter().map(|&r| exq::torus::fixed_locus(tab.group.element(r)).dimension).min().unwrap();
            assert_eq!(trivial, fixed_dim == min_dim, "order {} class {class}", entry.order);
        }
    }
}

#[test]
fn c_irr_on_s2_pairs_identity_with_sign() {
    let rd = RootDatum::general_linear(2).unwrap();
    let w = weyl_group(&rd, DEFAULT_BOUND).unwrap();
    let sys = build_c_irr_system(&rd, &w).unwrap();
    let s2 = sys.entries.iter().find(|e| e.order == 2).unwrap();
    let tab = TabulatedGroup::new(w).unwrap();
    for &(class, row) in &s2.pairing {
        let is_identity = tab.group.element(tab.classes.representatives[class]).is_identity();
        let is_sign = tab.table.row(row).iter().any(|v| *v == Cyclotomic::from_integer(-1));
        assert_eq!(is_identity, is_sign);
    }
    let trivial_group = sys.entries.iter().find(|e| e.order == 1).unwrap();
    assert_eq!(trivial_group.pairing, vec![(0, 0)]);
}

#[test]
fn points_off_the_torus_rank_are_rejected() {
    assert!(fiber_cardinality(&sl4_ws(), &TorusPoint::identity(2)).is_err());
}
