//! The kernel of the action on the thirty-two-dimensional module is the
//! order-four scalar family, while the Lie algebra acts faithfully.

use tetracert::field::CycNum;
use tetracert::groups::{GElement, GroupOps, TripleElement};
use tetracert::linalg::ExactMatrix;
use tetracert::reps::{lie_g_basis, RepR};

fn main() {
    let rep = RepR::new();
    println!("module dimension: {}", rep.dim());

    // The generator of the kernel: i times the identity in every slot.
    let i = CycNum::i();
    let g = TripleElement::scalars(&i, &i, &i);
    let action = rep.act(&GElement::from_reductive(g.clone()));
    println!("(iI, iI, iI) acts trivially: {}", action.is_identity());

    let mut power = g.clone();
    let mut order = 1;
    while power != g.identity_like() {
        power = power.compose(&g);
        order += 1;
    }
    println!("its order in the group:      {}", order);

    // Stack the fifteen basis actions into one matrix; full rank means the
    // Lie algebra injects.
    let basis = lie_g_basis();
    let stacked: Vec<ExactMatrix> = basis.iter().map(|x| rep.inf_act(x)).collect();
    let dim = rep.dim() * rep.dim();
    let m = ExactMatrix::from_fn(basis.len(), dim, |r, c| {
        stacked[r].get(c / rep.dim(), c % rep.dim()).clone()
    });
    println!("Lie algebra dimension:       {}", basis.len());
    println!("rank of the stacked actions: {}", m.rank());
}
