//! Exact linear algebra over the cyclotomic field: reduction, kernels,
//! eigenspaces, and affine solving with no rounding anywhere.

use tetracert::field::CycNum;
use tetracert::linalg::ExactMatrix;

fn main() {
    let m = ExactMatrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
    println!("matrix:\n{}", m);
    println!("rank {}, determinant {}", m.rank(), m.det());

    let kernel = m.kernel();
    println!("kernel dimension {}", kernel.dim());
    for v in kernel.basis_vectors() {
        let coords: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        println!("  kernel vector: [{}]", coords.join(", "));
    }

    // Eigenspace for an exact irrational eigenvalue.
    let r = ExactMatrix::from_fn(2, 2, |i, j| {
        if i == j { CycNum::zero() } else { CycNum::one() }
    });
    let plus = r.eigenspace(&CycNum::one());
    let minus = r.eigenspace(&CycNum::from_int(-1));
    println!("swap matrix eigenspaces: dim {} and dim {}", plus.dim(), minus.dim());

    let s = ExactMatrix::from_fn(2, 2, |i, j| {
        if i == j { CycNum::sqrt2() } else { CycNum::zero() }
    });
    println!("sqrt2 eigenspace dim: {}", s.eigenspace(&CycNum::sqrt2()).dim());

    // Solve A x = b exactly.
    let a = ExactMatrix::from_i64_rows(&[&[2, 1], &[1, 3]]);
    let b = vec![CycNum::from_int(5), CycNum::from_int(10)];
    let x = a.solve_unique(&b).expect("invertible system");
    let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
    println!("solution of the 2x2 system: [{}]", parts.join(", "));
}
