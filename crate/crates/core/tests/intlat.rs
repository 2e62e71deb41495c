use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use exq::intlat::{cokernel_structure, kernel_basis, smith_normal_form, IntMatrix};

/// Determinant by cofactor expansion; only used on tiny matrices.
fn det(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors `D_k = gcd of k x k minors`.
fn determinantal_factors(a: &[Vec<i64>]) -> Vec<i64> {
    let (r, c) = (a.len(), a[0].len());
    let mut prev = 1i64;
    let mut out = Vec::new();
    for k in 1..=r.min(c) {
        let mut g = 0i64;
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let minor: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| a[i][j]).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn diag_i64(a: &IntMatrix) -> Vec<i64> {
    let d = smith_normal_form(a).diagonal();
    d.iter().filter(|x| !x.is_zero()).map(|x| i64::try_from(x.clone()).unwrap()).collect()
}

#[test]
fn diagonal_matches_determinantal_divisors() {
    let cases: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
        vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]],
        vec![vec![6, 0], vec![0, 4], vec![3, 9]],
        vec![vec![0, 0], vec![0, 0]],
        vec![vec![4]],
    ];
    for a in cases {
        let m = IntMatrix::from_rows(&a);
        assert_eq!(diag_i64(&m), determinantal_factors(&a), "{a:?}");
    }
}

#[test]
fn published_style_example() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    assert_eq!(diag_i64(&a), vec![2, 6, 12]);
    let s = smith_normal_form(&a);
    assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d);
    assert!(s.u.is_unimodular() && s.v.is_unimodular());
}

#[test]
fn cokernel_order_is_absolute_determinant() {
    let a = vec![vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 4]];
    let m = IntMatrix::from_rows(&a);
    let c = cokernel_structure(&m);
    assert_eq!(c.free_rank, 0);
    assert_eq!(c.torsion_order(), BigInt::from(det(&a).abs()));
}

#[test]
fn cokernel_of_reflection_minus_identity() {
    // `s - 1` for the swap on Z^2 has cokernel Z.
    let m = IntMatrix::from_rows(&[vec![-1, 1], vec![1, -1]]);
    let c = cokernel_structure(&m);
    assert_eq!((c.free_rank, c.invariant_factors.len()), (1, 0));
    // `-1 - 1 = -2` on Z^2: (Z/2)^2.
    let m = IntMatrix::from_rows(&[vec![-2, 0], vec![0, -2]]);
    let c = cokernel_structure(&m);
    assert_eq!(c.invariant_factors, vec![BigInt::from(2), BigInt::from(2)]);
}

#[test]
fn kernel_is_saturated_and_annihilated() {
    let a = vec![vec![2, 4, 6], vec![1, 2, 3]];
    let m = IntMatrix::from_rows(&a);
    let k = kernel_basis(&m);
    assert_eq!(k.len(), 2);
    for v in &k {
        assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        assert_eq!(g, BigInt::from(1));
    }
    // Saturation: the 2x2 minors of the basis have gcd 1.
    let b: Vec<Vec<i64>> = k.iter().map(|v| v.iter().map(|x| i64::try_from(x.clone()).unwrap()).collect()).collect();
    let t: Vec<Vec<i64>> = (0..3).map(|j| b.iter().map(|r| r[j]).collect()).collect();
    assert_eq!(determinantal_factors(&t).iter().product::<i64>().abs(), 1);
    assert!(b.iter().all(|r| r.iter().find(|x| **x != 0).map(|x| x.is_positive()).unwrap_or(false)));
}

#[test]
fn snf_json_shape() {
    let a = IntMatrix::from_rows(&[vec![4, 6]]);
    let v = serde_json::to_value(smith_normal_form(&a)).unwrap();
    assert_eq!(v["D"]["entries"], serde_json::json!([[2, 0]]));
    assert_eq!(v["U"]["rows"], 1);
    assert_eq!(v["V"]["cols"], 2);
}
