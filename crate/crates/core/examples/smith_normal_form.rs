//! Smith normal form, cokernel structure and kernel of an integer matrix.
//!
//! ```text
//! cargo run --example smith_normal_form
//! ```

use exq::intlat::{cokernel_structure, kernel_basis, smith_normal_form, IntMatrix};

fn main() -> exq::Result<()> {
    let a = IntMatrix::from_i64(3, 4, &[2, 4, 4, 6, -6, 6, 12, 0, 10, -4, -16, 8])?;
    let snf = smith_normal_form(&a);
    println!("A = {a:?}");
    println!("U = {:?}", snf.u);
    println!("D = {:?}", snf.d);
    println!("V = {:?}", snf.v);
    assert_eq!(snf.u.mul(&a)?.mul(&snf.v)?, snf.d);

    let coker = cokernel_structure(&a);
    println!("Z^3 / A Z^4: free rank {}, invariant factors {:?}", coker.free_rank, coker.invariant_factors);

    for v in kernel_basis(&a) {
        println!("kernel vector {v:?}");
    }
    Ok(())
}
