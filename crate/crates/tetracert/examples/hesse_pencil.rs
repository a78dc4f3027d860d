//! The plane cubic pencil symmetry group: fixed loci of its projectivities
//! and a point of the member at parameter two that nothing fixes.

use tetracert::field::CycNum;
use tetracert::groups::{extended_heisenberg_group, projective_canonical, projective_classes};
use tetracert::linalg::ExactMatrix;

fn main() {
    let group = extended_heisenberg_group();
    let classes = projective_classes(group.elements());
    println!("projectivities: {}", classes.len());

    // Eigenvalues of every class are twelfth roots of unity, so scanning
    // those candidates finds each full eigenspace decomposition.
    let candidates: Vec<CycNum> = (0..12).map(|k| CycNum::zeta_pow(2 * k)).collect();
    for g in &classes {
        if g.is_identity() {
            continue;
        }
        let mut dims = Vec::new();
        for mu in &candidates {
            let d = g.eigenspace(mu).dim();
            if d > 0 {
                dims.push(d);
            }
        }
        let locus: Vec<&str> =
            dims.iter().map(|d| if *d == 1 { "point" } else { "line" }).collect();
        println!("  trace {:>8}: fixed locus = {}", g.trace().to_string(), locus.join(" + "));
    }

    // The point [1:2:3] sits on the pencil member with parameter two and is
    // moved by every nontrivial projectivity.
    let a = [CycNum::from_int(1), CycNum::from_int(2), CycNum::from_int(3)];
    let cubes = &(&a[0].pow(3) + &a[1].pow(3)) + &a[2].pow(3);
    let product = &(&a[0] * &a[1]) * &a[2];
    let lambda = &cubes * &(&product * &CycNum::from_int(3)).inv().unwrap();
    println!("pencil parameter at [1:2:3]: {}", lambda);
    println!("parameter cubed is one:      {}", lambda.pow(3).is_one());

    let column = |v: &[CycNum]| ExactMatrix::from_fn(3, 1, |r, _| v[r].clone());
    let home = projective_canonical(&column(&a));
    let moved = classes
        .iter()
        .filter(|g| !g.is_identity())
        .filter(|g| projective_canonical(&column(&g.apply(&a))) != home)
        .count();
    println!("nontrivial classes moving it: {} of {}", moved, classes.len() - 1);
}
