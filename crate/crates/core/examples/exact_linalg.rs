//! Exact rational linear algebra: ranks, kernels, solving and quotients.

use cyclic_sayd::linalg::{Matrix, QuotientPresentation, Scalar, SparseVec, Subspace};

fn main() {
    let third = Scalar::ratio(1, 3);
    println!("1/3 + 1/6 = {}", third.clone() + Scalar::ratio(1, 6));
    // huge products fall back to big rationals without losing exactness
    let big = Scalar::int(i64::MAX) * Scalar::int(i64::MAX);
    println!("(2^63 - 1)^2 = {big}");

    let m = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
    println!("rank = {}", m.rank());
    let ker = Subspace::kernel(&m);
    println!("kernel dim = {}, basis = {:?}", ker.dim(), ker.basis()[0].to_dense(3));

    let b = SparseVec::from_dense(&[Scalar::int(6), Scalar::int(12), Scalar::int(2)]);
    let x = m.solve(&b).expect("b lies in the image");
    println!("solution of m x = b: {:?}", x.to_dense(3));
    assert_eq!(m.mul_vec(&x), b);

    let q = QuotientPresentation::new(&ker);
    println!("ℚ^3 / ker has dimension {} on free coordinates {:?}", q.dim(), q.free_coordinates());
}
