//! The component group of the normalizer: 384 elements, 96 classes modulo
//! the torus.

use tetracert::groups::{
    a_matrix, b_matrix, sigma_matrix, tau_matrix, torus_equivalent, FiniteGroup, TripleElement,
};

fn main() {
    let generators = [
        TripleElement::diagonal(&tau_matrix()),
        TripleElement::diagonal(&sigma_matrix()),
        TripleElement::slot2(&a_matrix()),
        TripleElement::slot2(&b_matrix()),
    ];
    let group = FiniteGroup::generate(&generators, 10_000).expect("closes");
    println!("component group order: {}", group.order());

    let mut classes: Vec<TripleElement> = Vec::new();
    for g in group.elements() {
        if !classes.iter().any(|c| torus_equivalent(g, c)) {
            classes.push(g.clone());
        }
    }
    println!("classes modulo torus:  {}", classes.len());

    let tau = TripleElement::diagonal(&tau_matrix());
    let sigma = TripleElement::diagonal(&sigma_matrix());
    println!("tau has order 8:   {}", order_of(&tau) == 8);
    println!("sigma has order 3: {}", order_of(&sigma) == 3);
}

fn order_of(t: &TripleElement) -> usize {
    use tetracert::groups::GroupOps;
    let mut x = t.clone();
    let mut n = 1;
    while x != t.identity_like() {
        x = x.compose(t);
        n += 1;
    }
    n
}
