//! The sixteen-element stabilizer of a generic coupled point, and the
//! one-dimensional Lie stabilizer next to it.

use tetracert::certificates::coupled_point;
use tetracert::field::CycNum;
use tetracert::groups::stabilizer_group_h;
use tetracert::linalg::ExactMatrix;
use tetracert::reps::{graded_piece, lie_gr_basis};

fn main() {
    let lambda = [CycNum::from_int(2), CycNum::from_int(3), CycNum::from_int(5)];
    let p = coupled_point(&lambda);
    println!("coupled point lives in dimension {}", p.len());

    let rep = graded_piece(2);
    let family = stabilizer_group_h();
    let fixed = family
        .elements()
        .iter()
        .filter(|h| rep.act(h).apply(&p) == p)
        .count();
    println!("group elements fixing it: {} of {}", fixed, family.order());

    // Columns are the infinitesimal directions applied to the point; the
    // kernel is the Lie stabilizer.
    let basis = lie_gr_basis();
    let columns: Vec<Vec<CycNum>> = basis.iter().map(|x| rep.inf_act(x).apply(&p)).collect();
    let m = ExactMatrix::from_fn(p.len(), basis.len(), |r, c| columns[c][r].clone());
    let kernel = m.kernel();
    println!("Lie stabilizer dimension: {}", kernel.dim());
    for v in kernel.basis_vectors() {
        let coords: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        println!("  direction: [{}]", coords.join(", "));
    }
}
