//! Exact kernel computations: the dimensions of the multilinear
//! primitives are the Fine numbers, and the expanded Fine-tree monomials
//! span them.
//!
//! ```text
//! cargo run --release --example primitive_basis
//! ```

use magfine::primitives::{delta_matrix, fine_image_basis, prim_basis};
use magfine::trees::{catalan, fine_number};

fn main() {
    println!("degree | C(n-1) | dim ker delta | F(n-1) | image rank");
    println!("-------+--------+---------------+--------+-----------");
    for n in 1..=7usize {
        let matrix = delta_matrix(n).unwrap();
        let kernel_dim = matrix.ncols() - matrix.rank();
        let (_, rank) = fine_image_basis(n).unwrap();
        println!(
            "{:>6} | {:>6} | {:>13} | {:>6} | {:>10}",
            n,
            catalan(n - 1),
            kernel_dim,
            fine_number(n - 1),
            rank,
        );
    }

    // The canonical kernel basis in degree 4: two elements, echelon over
    // the 5 trees with 4 leaves.
    println!("\ncanonical primitive basis in degree 4:");
    for e in prim_basis(4).unwrap() {
        println!("  {e}");
    }

    println!("\nand in degree 3, the associator alone:");
    for e in prim_basis(3).unwrap() {
        println!("  {e}");
    }
}
