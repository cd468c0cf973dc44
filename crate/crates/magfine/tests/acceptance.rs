//! Acceptance suite: one test and one printed pass/fail line per
//! criterion. Run with `cargo test --test acceptance -- --nocapture` to
//! see the lines.

use magfine::coalgebra::is_primitive;
use magfine::primitives::{
    comb_decomposition_dims, delta_matrix, fine_image_basis, ExactMatrix, MultilinearBasis,
};
use magfine::report::{verify_suites, Suite};
use magfine::series::{as_series, fine_series, mag_series, prelie_quotient_dims, sabinin_dims,
    vallette_check};
use magfine::trees::enumerate_fine;
use num::BigInt;
use std::time::Instant;

fn criterion(id: u32, name: &str, passed: bool, start: Instant) {
    let status = if passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {id} ({name}): {status} [{} ms]",
        start.elapsed().as_millis()
    );
    assert!(passed, "criterion {id} ({name}) failed");
}

#[test]
fn criterion_1_primitive_dimensions() {
    let start = Instant::now();
    let expected: [usize; 8] = [1, 0, 1, 2, 6, 18, 57, 186];
    let mut passed = true;
    for (k, e) in expected.iter().enumerate() {
        let n = k + 1;
        let matrix = delta_matrix(n).unwrap();
        let kernel_dim = matrix.ncols() - matrix.rank();
        if kernel_dim != *e {
            eprintln!("n = {n}: kernel dimension {kernel_dim}, expected {e}");
            passed = false;
        }
    }
    criterion(1, "dim ker delta = 1,0,1,2,6,18,57,186 for n = 1..8", passed, start);
}

#[test]
fn criterion_2_fine_tree_enumeration() {
    let start = Instant::now();
    let expected: [usize; 12] = [1, 0, 1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724];
    let mut passed = true;
    for (k, e) in expected.iter().enumerate() {
        let n = k + 1;
        let count = enumerate_fine(n).unwrap().len();
        if count != *e {
            eprintln!("n = {n}: enumerated {count} trees, expected {e}");
            passed = false;
        }
    }
    criterion(2, "fine tree counts for n = 1..12", passed, start);
}

#[test]
fn criterion_3_vallette_functional_equation() {
    let start = Instant::now();
    criterion(
        3,
        "F(x - x^3/(1-x)^2) = x to order 12",
        vallette_check(12),
        start,
    );
}

#[test]
fn criterion_4_structure_series_shadow() {
    let start = Instant::now();
    let composed = as_series(12).compose(&fine_series(12)).unwrap();
    let series_ok = composed == mag_series(12);
    let rows = comb_decomposition_dims(12);
    let table_ok = rows.len() == 12 && rows.iter().all(|r| r.matches);
    criterion(
        4,
        "f_As(F) = f_Mag and C(n-1) = sum of Fine products, n <= 12",
        series_ok && table_ok,
        start,
    );
}

#[test]
fn criterion_5_fine_to_primitives_isomorphism() {
    let start = Instant::now();
    let mut passed = true;
    for n in 1..=7usize {
        let fine = magfine::trees::fine_number(n - 1);
        let (elements, rank) = fine_image_basis(n).unwrap();

        // (a) every expanded monomial is primitive
        if !elements.iter().all(is_primitive) {
            eprintln!("n = {n}: non-primitive expansion");
            passed = false;
        }
        // (b) linear independence: rank equals the Fine number
        if BigInt::from(rank) != fine {
            eprintln!("n = {n}: rank {rank}, expected {fine}");
            passed = false;
        }
        // (c) spanning: stacking the kernel basis on top of the expansions
        // must not raise the rank
        let basis = MultilinearBasis::new(n).unwrap();
        let mut stacked = ExactMatrix::new(basis.len());
        for v in delta_matrix(n).unwrap().kernel_basis() {
            stacked.push_rational_row(&v);
        }
        for e in &elements {
            stacked.push_rational_row(&basis.coordinates(e).unwrap());
        }
        if BigInt::from(stacked.rank()) != fine {
            eprintln!(
                "n = {n}: stacked rank {}, expected {fine}",
                stacked.rank()
            );
            passed = false;
        }
    }
    criterion(
        5,
        "fine monomials are primitive, independent, and span ker delta, n <= 7",
        passed,
        start,
    );
}

#[test]
fn criterion_6_prelie_quotient_dimensions() {
    let start = Instant::now();
    let dims = prelie_quotient_dims(5).unwrap();
    let expected: Vec<BigInt> = [1i64, 0, 3, 16, 165].iter().map(|&v| v.into()).collect();
    criterion(6, "pre-Lie quotient dims 1,0,3,16,165", dims == expected, start);
}

#[test]
fn criterion_7_log_catalan_sequence() {
    let start = Instant::now();
    let dims = sabinin_dims(8).unwrap();
    let expected: Vec<BigInt> = [1i64, 1, 4, 13, 46, 166, 610, 2269]
        .iter()
        .map(|&v| v.into())
        .collect();
    criterion(
        7,
        "log-Catalan sequence 1,1,4,13,46,166,610,2269",
        dims == expected,
        start,
    );
}

#[test]
fn criterion_8_property_suites() {
    let start = Instant::now();
    let checks = verify_suites(Suite::All, 42, 100);
    let mut passed = true;
    for c in &checks {
        if !c.passed {
            eprintln!("{}: observed {}, expected {}", c.name, c.observed, c.expected);
            passed = false;
        }
    }
    criterion(
        8,
        "all property suites with seed 42 and 100 cases",
        passed,
        start,
    );
}
