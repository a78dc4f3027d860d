//! Split the grade-one piece into its two natural invariant summands and
//! extract the three-dimensional invariants of the stabilizer family.

use tetracert::groups::{stabilizer_group_h, BinaryS4};
use tetracert::linalg::ExactMatrix;
use tetracert::reps::{
    character_values, check_invariant_splitting, class_actions, graded_piece, invariant_subspace,
    restrict_action, S4CharacterTable,
};

fn main() {
    let split = check_invariant_splitting().expect("both kernels are invariant");
    println!("small summand dimension: {}", split.small.dim());
    println!("large summand dimension: {}", split.large.dim());

    // Invariants of the stabilizer family inside the grade-two piece.
    let rep = graded_piece(2);
    let family = stabilizer_group_h();
    let actions: Vec<ExactMatrix> = family.elements().iter().map(|h| rep.act(h)).collect();
    let inv = invariant_subspace(&actions);
    println!("family invariants in grade two: dimension {}", inv.dim());

    // The quotient group still acts there; decompose that action.
    let cover = BinaryS4::new();
    let class_acts = class_actions(&rep, &cover).expect("descends to classes");
    let restricted: Vec<ExactMatrix> = class_acts
        .iter()
        .map(|m| restrict_action(m, &inv).expect("invariant"))
        .collect();
    let ch = character_values(&restricted);
    let mults = S4CharacterTable::standard().decompose(&ch).expect("integral");
    println!("character of the invariants: {:?}", mults);
}
