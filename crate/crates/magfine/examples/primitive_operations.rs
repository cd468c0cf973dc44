//! The associator and the higher operations mu(n, i), all of which land
//! in the primitive part.
//!
//! ```text
//! cargo run --example primitive_operations
//! ```

use magfine::coalgebra::{delta, is_primitive};
use magfine::magma::{associator, expand_fine_monomial, mu, MagElement};
use magfine::trees::{enumerate_fine, FineTree};

fn main() {
    let g = MagElement::generators(5);

    // The associator measures the failure of associativity; it is the
    // first primitive operation.
    let a = associator(&g[0], &g[1], &g[2]);
    println!("as(x1,x2,x3) = {a}");
    println!("delta(as)    = {}", delta(&a));

    // A product of primitives is never primitive ...
    let p = g[0].product(&g[1]);
    println!("\ndelta(x1·x2) = {}", delta(&p));

    // ... but the mu operations always are: n-2 of them in arity n.
    println!("\nprimitivity of mu(n, i) on generators:");
    for n in 3..=5usize {
        for i in 1..=n - 2 {
            let m = mu(n, i, &g[..n]).unwrap();
            println!(
                "  mu({n},{i}): {} terms, primitive = {}",
                m.num_terms(),
                is_primitive(&m)
            );
        }
    }

    println!("\nmu(4,2) written out:\n  {}", mu(4, 2, &g[..4]).unwrap());

    // Fine trees are recipes for composing the mu operations; expanding
    // the single 3-corolla gives back the associator.
    let corolla = FineTree::node(1, vec![FineTree::Leaf; 3]).unwrap();
    let e = expand_fine_monomial(&corolla, &g[..3]).unwrap();
    println!("\nexpand({corolla}) = {e}");
    println!("equals as(x1,x2,x3): {}", e == a);

    // All 6 Fine trees with 5 leaves expand to primitive elements.
    println!("\nexpansions of the 5-leaf Fine trees:");
    for m in enumerate_fine(5).unwrap() {
        let e = expand_fine_monomial(&m, &g).unwrap();
        println!(
            "  {m} -> {} terms, primitive = {}",
            e.num_terms(),
            is_primitive(&e)
        );
    }
}
