//! Exact linear algebra on multilinear components.
//!
//! The degree-`n` multilinear component has the `C(n-1)` planar binary
//! trees with the identity word `1..n` as its basis. Restricting the
//! reduced coproduct to it gives an integer matrix whose kernel is the
//! space of multilinear primitives; its dimension is the Fine number
//! `F(n-1)`, matched exactly by the span of the expanded Fine-tree
//! monomials.
//!
//! The identity-word component suffices for all primitive computations:
//! splitting preserves the left-to-right order of the generator letters,
//! so the two factors of every cut of `(t; 1..n)` carry the words `1..i`
//! and `i+1..n` (see `delta_preserves_letter_order` in the tests).

use crate::magma::{expand_fine_monomial, MagElement, Term};
use crate::trees::{catalan, enumerate_binary, enumerate_fine, fine_number, BinaryTree};
use crate::Error;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

type IntRow = Vec<(usize, BigInt)>;
type RatRow = Vec<(usize, BigRational)>;

/// A sparse matrix over the rationals with exact rank, reduced echelon
/// form, and kernel computations.
///
/// Rows are stored as integer vectors (denominators are cleared on
/// insertion); elimination is fraction-free with gcd normalization, and
/// only the final reduced echelon form reintroduces rationals.
#[derive(Clone, Debug)]
pub struct ExactMatrix {
    ncols: usize,
    rows: Vec<IntRow>,
}

fn normalize_content(row: &mut IntRow) {
    let mut content = BigInt::zero();
    for (_, v) in row.iter() {
        content = content.gcd(v);
    }
    if content.is_zero() {
        return;
    }
    if row[0].1.is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &content;
        }
    }
}

/// `ca * a + cb * b` as a sorted sparse merge.
fn combine_int(ca: &BigInt, a: &IntRow, cb: &BigInt, b: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some((ac, av)), Some((bc, bv))) if ac == bc => {
                i += 1;
                j += 1;
                (*ac, ca * av + cb * bv)
            }
            (Some((ac, av)), Some((bc, _))) if ac < bc => {
                i += 1;
                (*ac, ca * av)
            }
            (Some(_), Some((bc, bv))) => {
                j += 1;
                (*bc, cb * bv)
            }
            (Some((ac, av)), None) => {
                i += 1;
                (*ac, ca * av)
            }
            (None, Some((bc, bv))) => {
                j += 1;
                (*bc, cb * bv)
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

/// `a - factor * b` over the rationals.
fn sub_scaled_rat(a: &RatRow, factor: &BigRational, b: &RatRow) -> RatRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some((ac, av)), Some((bc, bv))) if ac == bc => {
                i += 1;
                j += 1;
                (*ac, av - factor * bv)
            }
            (Some((ac, av)), Some((bc, _))) if ac < bc => {
                i += 1;
                (*ac, av.clone())
            }
            (Some(_), Some((bc, bv))) => {
                j += 1;
                (*bc, -factor * bv)
            }
            (Some((ac, av)), None) => {
                i += 1;
                (*ac, av.clone())
            }
            (None, Some((bc, bv))) => {
                j += 1;
                (*bc, -factor * bv)
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

impl ExactMatrix {
    pub fn new(ncols: usize) -> ExactMatrix {
        ExactMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Adds a row given as (column, value) pairs; entries are sorted,
    /// merged and content-normalized.
    pub fn push_integer_pairs(&mut self, pairs: Vec<(usize, BigInt)>) {
        let mut pairs = pairs;
        pairs.sort_by_key(|(c, _)| *c);
        let mut row: IntRow = Vec::with_capacity(pairs.len());
        for (c, v) in pairs {
            assert!(c < self.ncols, "column {c} out of range");
            if v.is_zero() {
                continue;
            }
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => {
                    *lv += v;
                    if lv.is_zero() {
                        row.pop();
                    }
                }
                _ => row.push((c, v)),
            }
        }
        if !row.is_empty() {
            normalize_content(&mut row);
            self.rows.push(row);
        }
    }

    /// Adds a dense rational row, clearing denominators first.
    pub fn push_rational_row(&mut self, row: &[BigRational]) {
        assert_eq!(row.len(), self.ncols, "row length must match column count");
        let pairs: Vec<(usize, BigRational)> = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c, v.clone()))
            .collect();
        self.push_rational_pairs(pairs);
    }

    /// Adds a sparse rational row, clearing denominators first.
    pub fn push_rational_pairs(&mut self, pairs: Vec<(usize, BigRational)>) {
        let mut scale = BigInt::one();
        for (_, v) in &pairs {
            scale = scale.lcm(v.denom());
        }
        let int_pairs = pairs
            .into_iter()
            .map(|(c, v)| {
                let scaled = v * BigRational::from_integer(scale.clone());
                debug_assert!(scaled.denom().is_one());
                (c, scaled.numer().clone())
            })
            .collect();
        self.push_integer_pairs(int_pairs);
    }

    /// Fraction-free forward elimination; returns rows with strictly
    /// increasing leading columns.
    fn echelon_rows(&self) -> Vec<IntRow> {
        let mut pending: Vec<IntRow> = self.rows.clone();
        let mut done: Vec<IntRow> = Vec::new();
        while !pending.is_empty() {
            let lead = pending.iter().map(|r| r[0].0).min().expect("nonempty");
            let (mut bucket, mut rest): (Vec<IntRow>, Vec<IntRow>) =
                pending.into_iter().partition(|r| r[0].0 == lead);
            let pivot_idx = bucket
                .iter()
                .enumerate()
                .min_by_key(|(i, r)| (r.len(), *i))
                .expect("bucket nonempty")
                .0;
            let pivot = bucket.remove(pivot_idx);
            let p0 = pivot[0].1.clone();
            for row in bucket {
                let r0 = row[0].1.clone();
                let g = p0.gcd(&r0);
                let ca = &p0 / &g;
                let cb = -(&r0 / &g);
                let mut reduced = combine_int(&ca, &row, &cb, &pivot);
                if !reduced.is_empty() {
                    normalize_content(&mut reduced);
                    rest.push(reduced);
                }
            }
            done.push(pivot);
            pending = rest;
        }
        done
    }

    pub fn rank(&self) -> usize {
        self.echelon_rows().len()
    }

    /// The unique reduced row echelon form, as sparse rational rows with
    /// leading coefficient 1 and zeros above every pivot.
    pub fn reduced_echelon(&self) -> Vec<RatRow> {
        let mut rows: Vec<RatRow> = self
            .echelon_rows()
            .iter()
            .map(|r| {
                let lead = BigRational::from_integer(r[0].1.clone());
                r.iter()
                    .map(|(c, v)| (*c, BigRational::from_integer(v.clone()) / &lead))
                    .collect()
            })
            .collect();
        for j in (0..rows.len()).rev() {
            let pivot_col = rows[j][0].0;
            for i in 0..j {
                if let Some(pos) = rows[i].iter().position(|(c, _)| *c == pivot_col) {
                    let factor = rows[i][pos].1.clone();
                    rows[i] = sub_scaled_rat(&rows[i], &factor, &rows[j]);
                }
            }
        }
        rows
    }

    /// A canonical basis of the null space `{v : M v = 0}`: the reduced
    /// echelon form of the kernel, as dense rational vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let rref = self.reduced_echelon();
        let pivots: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
        let mut is_pivot = vec![false; self.ncols];
        for p in &pivots {
            is_pivot[*p] = true;
        }
        let mut raw = ExactMatrix::new(self.ncols);
        for (f, _) in is_pivot.iter().enumerate().filter(|(_, p)| !**p) {
            let mut v: Vec<(usize, BigRational)> = vec![(f, BigRational::one())];
            for (row, pc) in rref.iter().zip(&pivots) {
                if let Some(pos) = row.iter().position(|(c, _)| *c == f) {
                    v.push((*pc, -row[pos].1.clone()));
                }
            }
            raw.push_rational_pairs(v);
        }
        raw.reduced_echelon()
            .into_iter()
            .map(|r| {
                let mut dense = vec![BigRational::zero(); self.ncols];
                for (c, v) in r {
                    dense[c] = v;
                }
                dense
            })
            .collect()
    }
}

/// The canonical basis of the degree-`n` multilinear component: all
/// trees with `n` leaves, each carrying the identity word `1..n`.
#[derive(Clone, Debug)]
pub struct MultilinearBasis {
    degree: usize,
    trees: Vec<BinaryTree>,
}

impl MultilinearBasis {
    pub fn new(n: usize) -> Result<MultilinearBasis, Error> {
        Ok(MultilinearBasis {
            degree: n,
            trees: enumerate_binary(n)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn tree(&self, i: usize) -> &BinaryTree {
        &self.trees[i]
    }

    fn identity_word(&self) -> Vec<u32> {
        (1..=self.degree as u32).collect()
    }

    pub fn term(&self, i: usize) -> Term {
        Term::tree_unchecked(self.trees[i].clone(), self.identity_word())
    }

    pub fn element(&self, i: usize) -> MagElement {
        MagElement::from_term(self.term(i), BigRational::one())
    }

    /// Index of a tree in canonical order.
    pub fn position(&self, tree: &BinaryTree) -> Option<usize> {
        self.trees.binary_search(tree).ok()
    }

    /// Coordinates of a multilinear element over this basis; `None` if
    /// any term is not a degree-`n` tree with the identity word.
    pub fn coordinates(&self, x: &MagElement) -> Option<Vec<BigRational>> {
        let word = self.identity_word();
        let mut v = vec![BigRational::zero(); self.len()];
        for (term, c) in x.iter() {
            match term {
                Term::Tree(t, w) if *w == word => {
                    let pos = self.position(t)?;
                    v[pos] = c.clone();
                }
                _ => return None,
            }
        }
        Some(v)
    }

    /// Rebuilds an element from coordinates.
    pub fn from_coordinates(&self, v: &[BigRational]) -> MagElement {
        assert_eq!(v.len(), self.len());
        let mut e = MagElement::zero();
        for (i, c) in v.iter().enumerate() {
            e.add_term(self.term(i), c.clone());
        }
        e
    }
}

/// The matrix of the reduced coproduct on the degree-`n` multilinear
/// component. Columns follow the canonical basis; rows are indexed by
/// pairs of trees of degrees `(i, n-i)` for `i = 1..n-1`, blocks in order
/// of `i` and pairs in lexicographic canonical order within a block.
pub fn delta_matrix(n: usize) -> Result<ExactMatrix, Error> {
    if n == 0 {
        return Err(Error::ZeroLeaves);
    }
    let levels: Vec<Vec<BinaryTree>> = (0..=n)
        .map(|k| {
            if k == 0 {
                Ok(Vec::new())
            } else {
                enumerate_binary(k)
            }
        })
        .collect::<Result<_, _>>()?;
    let mut offsets = vec![0usize; n.max(1)];
    for i in 1..n {
        let block = levels[i].len() * levels[n - i].len();
        if i + 1 < offsets.len() {
            offsets[i + 1] = offsets[i] + block;
        }
    }
    let total_rows = if n >= 2 {
        offsets[n - 1] + levels[n - 1].len() * levels[1].len()
    } else {
        0
    };
    let mut row_entries: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); total_rows];
    for (col, tree) in levels[n].iter().enumerate() {
        for i in 1..n {
            let (a, b) = tree.split(i).expect("cut within range");
            let ai = levels[i].binary_search(&a).expect("split part is in its level");
            let bi = levels[n - i]
                .binary_search(&b)
                .expect("split part is in its level");
            let row = offsets[i] + ai * levels[n - i].len() + bi;
            row_entries[row].push((col, BigInt::one()));
        }
    }
    let mut m = ExactMatrix::new(levels[n].len());
    for entries in row_entries {
        m.push_integer_pairs(entries);
    }
    Ok(m)
}

/// A canonical basis of the multilinear primitives in degree `n`: the
/// kernel of [`delta_matrix`] in reduced echelon form, as elements.
pub fn prim_basis(n: usize) -> Result<Vec<MagElement>, Error> {
    let basis = MultilinearBasis::new(n)?;
    let kernel = delta_matrix(n)?.kernel_basis();
    Ok(kernel.iter().map(|v| basis.from_coordinates(v)).collect())
}

/// Expands every Fine-tree monomial with `n` leaves on the generators
/// `1..n` and returns the resulting elements with their exact rank.
pub fn fine_image_basis(n: usize) -> Result<(Vec<MagElement>, usize), Error> {
    let basis = MultilinearBasis::new(n)?;
    let generators = MagElement::generators(n as u32);
    let mut matrix = ExactMatrix::new(basis.len());
    let mut elements = Vec::new();
    for monomial in enumerate_fine(n)? {
        let expansion = expand_fine_monomial(&monomial, &generators)?;
        let coords = basis
            .coordinates(&expansion)
            .expect("expansions of Fine monomials are multilinear");
        matrix.push_rational_row(&coords);
        elements.push(expansion);
    }
    let rank = matrix.rank();
    Ok((elements, rank))
}

/// One row of the composition table behind `C(n-1) = Σ Π F(n_j - 1)`.
#[derive(Clone, Debug)]
pub struct CombDecompositionRow {
    pub n: usize,
    pub catalan: BigInt,
    pub composed: BigInt,
    pub matches: bool,
}

/// For each `n <= n_max`, sums `Π F(n_j - 1)` over all compositions
/// `(n_1, ..., n_k)` of `n` and compares with `C(n-1)`.
pub fn comb_decomposition_dims(n_max: usize) -> Vec<CombDecompositionRow> {
    let fine: Vec<BigInt> = (0..n_max).map(fine_number).collect();
    let mut composed = vec![BigInt::zero(); n_max + 1];
    for n in 1..=n_max {
        let mut s = fine[n - 1].clone();
        for j in 1..n {
            s += &fine[j - 1] * &composed[n - j];
        }
        composed[n] = s;
    }
    (1..=n_max)
        .map(|n| {
            let cat = catalan(n - 1);
            let matches = cat == composed[n];
            CombDecompositionRow {
                n,
                catalan: cat,
                composed: composed[n].clone(),
                matches,
            }
        })
        .collect()
}
