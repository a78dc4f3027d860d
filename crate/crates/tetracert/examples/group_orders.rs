//! Generate the finite matrix groups in the story and count them.

use std::collections::BTreeSet;
use tetracert::groups::{
    binary_octahedral_group, extended_heisenberg_group, projective_classes, quaternion_group,
    BinaryS4,
};

fn main() {
    let q = quaternion_group();
    println!("quaternion group:       order {}", q.order());
    println!("  axioms verified:      {}", q.verify_axioms());

    let bo = binary_octahedral_group();
    println!("binary octahedral:      order {}", bo.order());

    let cover = BinaryS4::new();
    let mut image = BTreeSet::new();
    for g in cover.group().elements() {
        image.insert(cover.quotient_to_s4(g).unwrap());
    }
    println!("quotient by +-1:        order {}", image.len());
    for (class, rep) in cover.lifted_class_representatives() {
        println!("  class {:?} lifts to trace {}", class, rep.trace());
    }

    let h = extended_heisenberg_group();
    let classes = projective_classes(h.elements());
    println!("extended Heisenberg:    order {} as matrices", h.order());
    println!("                        order {} as projectivities", classes.len());
}
