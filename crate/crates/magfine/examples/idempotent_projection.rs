//! The idempotent projection onto primitives and the reconstruction of
//! every element from right combs of primitive pieces.
//!
//! ```text
//! cargo run --example idempotent_projection
//! ```

use magfine::coalgebra::{
    alpha, decomposition_check, delta, filtration_degree, idempotent_e,
};
use magfine::magma::{associator, left_comb, right_comb, MagElement};

fn main() {
    let g = MagElement::generators(4);

    // e = id + sum of (-1)^n (left combs of the iterated coproduct); it
    // fixes primitives and kills products.
    let a = associator(&g[0], &g[1], &g[2]);
    println!("e(as)      = {}", idempotent_e(&a).unwrap());
    println!("e(x1·x2)   = {}", idempotent_e(&g[0].product(&g[1])).unwrap());

    let w3 = left_comb(&g[..3]).unwrap();
    let e3 = idempotent_e(&w3).unwrap();
    println!("e(w3)      = {e3}");
    println!("delta(e(w3)) = {}", delta(&e3));

    // Right combs of primitives are the complement that e kills.
    let combed = right_comb(&[a.clone(), g[3].clone()]).unwrap();
    println!("\ne(as·x4)   = {}", idempotent_e(&combed).unwrap());

    // Coradical filtration: how many coproducts it takes to reach zero.
    println!("\nfiltration degrees:");
    println!("  unit:       {}", filtration_degree(&MagElement::unit()));
    println!("  generator:  {}", filtration_degree(&g[0]));
    println!("  w3:         {}", filtration_degree(&w3));
    println!("  as·x4:      {}", filtration_degree(&combed));

    // alpha lays an element out inside the tensor coalgebra of the
    // primitives; right-comb multiplication folds it back.
    let x = &w3 + &a.scaled(&magfine::ratio(1, 2));
    println!("\nalpha of x = w3 + (1/2)·as:");
    for (k, part) in alpha(&x).unwrap().iter().enumerate() {
        println!("  rank {}: {}", k + 1, part);
    }
    println!("reconstruction holds: {}", decomposition_check(&x).unwrap());
}
