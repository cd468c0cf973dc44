//! Enumerate planar binary trees and labeled Fine trees.
//!
//! ```text
//! cargo run --example enumerate_trees
//! ```

use magfine::trees::{catalan, enumerate_binary, enumerate_fine, fine_number};

fn main() {
    println!("planar binary trees with n leaves (Catalan numbers):");
    for n in 1..=6 {
        let trees = enumerate_binary(n).unwrap();
        println!("  n = {n}: {} trees (C({}) = {})", trees.len(), n - 1, catalan(n - 1));
    }

    println!("\nall 5 trees with 4 leaves, in canonical code order:");
    for t in enumerate_binary(4).unwrap() {
        println!("  {t}");
    }

    println!("\nlabeled trees with no unary or binary vertices (Fine numbers):");
    for n in 1..=9 {
        let trees = enumerate_fine(n).unwrap();
        println!("  n = {n}: {} trees (F({}) = {})", trees.len(), n - 1, fine_number(n - 1));
    }

    println!("\nthe 6 Fine trees with 5 leaves — '(i...)' is a vertex labeled i:");
    for t in enumerate_fine(5).unwrap() {
        println!("  {t}");
    }

    println!("\ncounts keep going without materializing the listings:");
    for n in [16, 24, 32] {
        println!("  n = {n}: C = {}, F = {}", catalan(n - 1), fine_number(n - 1));
    }
}
