//! Generating-function identities: the Fine series, its functional
//! equation, the composition with the all-ones series, and the dimension
//! sequences for the pre-Lie quotient and the Sabinin primitives.
//!
//! ```text
//! cargo run --example series_identities
//! ```

use magfine::series::{
    as_series, fine_series, mag_series, prelie_quotient_dims, sabinin_dims, vallette_check,
};
use magfine::trees::enumerate_fine;

fn main() {
    let order = 12;

    let fine = fine_series(order);
    println!("Fine series (1 + 2x - sqrt(1-4x)) / (2(2+x)):");
    println!("  {fine}");

    println!("\ncoefficients against brute-force enumeration:");
    for n in 1..=9 {
        let coeff = fine.coeff(n);
        let count = enumerate_fine(n).unwrap().len();
        println!("  [x^{n}] = {coeff}, trees enumerated = {count}");
    }

    println!("\nfunctional equation F(x - x^3/(1-x)^2) = x to order {order}: {}",
        vallette_check(order));

    let composed = as_series(order).compose(&fine_series(order)).unwrap();
    println!(
        "composition x/(1-x) . F = Catalan series to order {order}: {}",
        composed == mag_series(order)
    );

    println!("\npre-Lie quotient dimensions (from n^(n-1) and g = f/(1+f)):");
    let dims = prelie_quotient_dims(8).unwrap();
    println!("  {:?}", dims.iter().map(ToString::to_string).collect::<Vec<_>>());

    println!("\nlog-Catalan sequence (from g = log(1 + Catalan series)):");
    let dims = sabinin_dims(10).unwrap();
    println!("  {:?}", dims.iter().map(ToString::to_string).collect::<Vec<_>>());
}
