//! Decompose the graded pieces of the big module against the character
//! table of the symmetric group on four letters.

use tetracert::groups::BinaryS4;
use tetracert::reps::{character, graded_piece, S4CharacterTable};

fn main() {
    let cover = BinaryS4::new();
    let table = S4CharacterTable::standard();
    println!("table is orthonormal: {}", table.is_orthonormal());
    println!("irreducibles: {:?}", table.names());
    println!();

    for grade in [3usize, 2, 1] {
        let rep = graded_piece(grade);
        let ch = character(&rep, &cover).expect("character is defined");
        let values: Vec<String> = ch.iter().map(|v| v.to_string()).collect();
        println!("grade {} (dimension {:>2}): character ({})", grade, rep.dim(), values.join(", "));
        match table.decompose(&ch) {
            Ok(mults) => println!("  multiplicities: {:?}", mults),
            Err(e) => println!("  not a character of the quotient: {}", e),
        }
    }
}
