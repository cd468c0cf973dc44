//! Seeded random elements for the property suites.
//!
//! All randomized checks in this crate draw from a ChaCha8 stream seeded
//! explicitly (the CLI default is 42), so every run is reproducible.

use crate::coalgebra;
use crate::magma::{MagElement, Term};
use crate::trees::BinaryTree;
use num::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The named generator behind every randomized suite.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random planar binary tree with `leaves` leaves.
///
/// The split position at each vertex is uniform, so the distribution over
/// trees is not uniform; for property tests that is irrelevant.
pub fn random_tree(rng: &mut impl Rng, leaves: usize) -> BinaryTree {
    assert!(leaves >= 1);
    if leaves == 1 {
        return BinaryTree::Leaf;
    }
    let k = rng.gen_range(1..leaves);
    random_tree(rng, k).graft(random_tree(rng, leaves - k))
}

fn random_coeff(rng: &mut impl Rng) -> BigRational {
    let mut numer: i64 = 0;
    while numer == 0 {
        numer = rng.gen_range(-6..=6);
    }
    let denom: i64 = rng.gen_range(1..=3);
    BigRational::new(numer.into(), denom.into())
}

fn random_term(rng: &mut impl Rng, degree: usize, generators: u32) -> Term {
    let tree = random_tree(rng, degree);
    let word = (0..degree).map(|_| rng.gen_range(1..=generators)).collect();
    Term::tree_unchecked(tree, word)
}

/// A random element with up to `terms` terms of degree `1..=max_degree`.
pub fn random_element(
    rng: &mut impl Rng,
    max_degree: usize,
    terms: usize,
    generators: u32,
) -> MagElement {
    let mut e = MagElement::zero();
    for _ in 0..terms {
        let d = rng.gen_range(1..=max_degree);
        e.add_term(random_term(rng, d, generators), random_coeff(rng));
    }
    e
}

/// A random homogeneous element of the given degree.
pub fn random_homogeneous(
    rng: &mut impl Rng,
    degree: usize,
    terms: usize,
    generators: u32,
) -> MagElement {
    let mut e = MagElement::zero();
    for _ in 0..terms {
        e.add_term(random_term(rng, degree, generators), random_coeff(rng));
    }
    e
}

/// A random primitive element: the idempotent projection of a random
/// element, with a generator as fallback if the projection vanishes.
pub fn random_primitive(rng: &mut impl Rng, max_degree: usize, generators: u32) -> MagElement {
    let x = random_element(rng, max_degree, 3, generators);
    let p = coalgebra::idempotent_e(&x).expect("sampled element has no unit component");
    if p.is_zero() {
        MagElement::generator(rng.gen_range(1..=generators))
    } else {
        p
    }
}
