//! The numerical bookkeeping: parameter counts, genus formulas, and the
//! degree bound for maps between curves.

use tetracert::certificates::{castelnuovo_severi_bound, clebsch_genus};

fn main() {
    println!("family minus group:   28 - 11 = {}", 28 - 11);
    println!("split family:         15 - 6 + 8 = {}", 15 - 6 + 8);
    for n in 1..=3 {
        println!("pencil count (n = {n}): 25 + {n} - 8 = {}", 25 + n - 8);
    }

    let sextic = clebsch_genus(6, &[2, 2, 2]).unwrap();
    println!("plane sextic with three nodes:    genus {}", sextic);
    let septic = clebsch_genus(7, &[2; 8]).unwrap();
    println!("plane septic with eight nodes:    genus {}", septic);

    let bound = castelnuovo_severi_bound(4, 0, 3, 0);
    println!("degree bound for a genus-4 curve: {}", bound);
}
