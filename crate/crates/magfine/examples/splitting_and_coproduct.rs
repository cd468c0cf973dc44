//! Split trees between leaves and watch the splitting become a
//! coassociative coproduct on the free magmatic algebra.
//!
//! ```text
//! cargo run --example splitting_and_coproduct
//! ```

use magfine::coalgebra::{delta, delta_power, full_coproduct, TensorElement};
use magfine::magma::{left_comb, MagElement};
use magfine::trees::BinaryTree;

fn main() {
    // Splitting a tree between leaves i and i+1 keeps the part left of the
    // path from leaf i to the root and the part right of the path from
    // leaf i+1.
    let t = BinaryTree::decode("((*(**))*)").unwrap();
    println!("splits of t = {t} ({} leaves):", t.leaf_count());
    for i in 1..t.leaf_count() {
        let (a, b) = t.split(i).unwrap();
        println!("  cut {i}: {a} | {b}");
    }

    // The coproduct splits every basis term at every position. Generators
    // are primitive, so delta of a single generator vanishes.
    let g = MagElement::generators(4);
    println!("\ndelta(x1) = {}", delta(&g[0]));

    let w3 = left_comb(&g[..3]).unwrap();
    println!("delta(w3) = {}", delta(&w3));

    // The full coproduct adds the primitive part x⊗1 + 1⊗x.
    println!("Delta(x1) = {}", full_coproduct(&g[0]));

    // Unital infinitesimal compatibility, the law that pins the coproduct
    // down: delta(x·y) = delta(x)·(1⊗y) + (x⊗1)·delta(y) + x⊗y.
    let x = g[0].product(&g[1]);
    let y = g[2].clone();
    let one = MagElement::unit();
    let lhs = delta(&x.product(&y));
    let rhs = &(&delta(&x).factorwise_product(&TensorElement::tensor(&[one.clone(), y.clone()]))
        + &TensorElement::tensor(&[x.clone(), one]).factorwise_product(&delta(&y)))
        + &TensorElement::tensor(&[x.clone(), y.clone()]);
    println!("\ncompatibility on (x1·x2)·x3:");
    println!("  delta(x·y) = {lhs}");
    println!("  law agrees: {}", lhs == rhs);

    // Iterating delta on a left comb of n primitives peels it into the
    // full tensor of its arguments after n-1 steps, and to zero after n.
    let w4 = left_comb(&g).unwrap();
    println!("\ndelta^3 of the 4-comb = {}", delta_power(3, &w4));
    println!("delta^4 of the 4-comb = {}", delta_power(4, &w4));
}
