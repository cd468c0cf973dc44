//! Elements of the free magmatic algebra.
//!
//! A basis term is a planar binary tree together with a word of generator
//! indices, one letter per leaf; the empty word together with the formal
//! unit completes the basis. The product grafts the trees and concatenates
//! the words. On top of the product sit the associator and the family of
//! higher operations `mu(n, i)` that generate the primitive part.

use crate::trees::{BinaryTree, FineTree};
use crate::Error;
use num::{BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A basis term: the unit, or a tree with one generator letter per leaf.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Unit,
    Tree(BinaryTree, Vec<u32>),
}

impl Term {
    /// Builds a tree term, checking that the word has one letter per leaf.
    pub fn tree(tree: BinaryTree, word: Vec<u32>) -> Result<Term, Error> {
        if word.len() != tree.leaf_count() {
            return Err(Error::WordLength {
                word: word.len(),
                leaves: tree.leaf_count(),
            });
        }
        Ok(Term::Tree(tree, word))
    }

    pub(crate) fn tree_unchecked(tree: BinaryTree, word: Vec<u32>) -> Term {
        debug_assert_eq!(word.len(), tree.leaf_count());
        Term::Tree(tree, word)
    }

    /// Word length; the unit has degree 0.
    pub fn degree(&self) -> usize {
        match self {
            Term::Unit => 0,
            Term::Tree(_, word) => word.len(),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Term::Unit)
    }

    /// Product of basis terms: graft the trees, concatenate the words.
    pub fn product(&self, rhs: &Term) -> Term {
        match (self, rhs) {
            (Term::Unit, t) | (t, Term::Unit) => t.clone(),
            (Term::Tree(t, v), Term::Tree(s, w)) => {
                let mut word = v.clone();
                word.extend_from_slice(w);
                Term::Tree(t.clone().graft(s.clone()), word)
            }
        }
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Term {
    // Degree first, then canonical tree order, then the word.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Term::Unit, Term::Unit) => Ordering::Equal,
            (Term::Unit, Term::Tree(..)) => Ordering::Less,
            (Term::Tree(..), Term::Unit) => Ordering::Greater,
            (Term::Tree(t, v), Term::Tree(s, w)) => v
                .len()
                .cmp(&w.len())
                .then_with(|| t.cmp(s))
                .then_with(|| v.cmp(w)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Unit => f.write_str("1"),
            Term::Tree(t, w) => {
                let letters: Vec<String> = w.iter().map(u32::to_string).collect();
                write!(f, "({}; {})", t.encode(), letters.join(","))
            }
        }
    }
}

/// A finite rational linear combination of basis terms.
///
/// Zero coefficients are never stored, so equality of elements is equality
/// of the underlying maps.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MagElement {
    terms: BTreeMap<Term, BigRational>,
}

impl MagElement {
    pub fn zero() -> MagElement {
        MagElement::default()
    }

    pub fn unit() -> MagElement {
        MagElement::from_term(Term::Unit, BigRational::one())
    }

    /// The generator with index `i`, i.e. the term `(leaf; [i])`.
    pub fn generator(i: u32) -> MagElement {
        MagElement::from_term(
            Term::tree_unchecked(BinaryTree::Leaf, vec![i]),
            BigRational::one(),
        )
    }

    /// The generators `1..=n`.
    pub fn generators(n: u32) -> Vec<MagElement> {
        (1..=n).map(MagElement::generator).collect()
    }

    pub fn from_term(term: Term, coeff: BigRational) -> MagElement {
        let mut e = MagElement::zero();
        e.add_term(term, coeff);
        e
    }

    /// Adds `coeff * term`, dropping the entry if it cancels.
    pub fn add_term(&mut self, term: Term, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(term);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Term, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, term: &Term) -> BigRational {
        self.terms.get(term).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the unit.
    pub fn unit_coeff(&self) -> BigRational {
        self.coeff(&Term::Unit)
    }

    /// The positive-degree part (unit component dropped).
    pub fn augmentation(&self) -> MagElement {
        let mut e = self.clone();
        e.terms.remove(&Term::Unit);
        e
    }

    /// Largest degree of a term; 0 for zero or for multiples of the unit.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Term::degree).max().unwrap_or(0)
    }

    /// The part of the element in degree `d`.
    pub fn homogeneous_component(&self, d: usize) -> MagElement {
        MagElement {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.degree() == d)
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scaled(&self, c: &BigRational) -> MagElement {
        if c.is_zero() {
            return MagElement::zero();
        }
        MagElement {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.clone(), a * c))
                .collect(),
        }
    }

    /// The magmatic product, extended bilinearly from the basis.
    pub fn product(&self, rhs: &MagElement) -> MagElement {
        let mut out = MagElement::zero();
        for (t, a) in &self.terms {
            for (s, b) in &rhs.terms {
                out.add_term(t.product(s), a * b);
            }
        }
        out
    }
}

impl Add for &MagElement {
    type Output = MagElement;
    fn add(self, rhs: &MagElement) -> MagElement {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MagElement {
    type Output = MagElement;
    fn sub(self, rhs: &MagElement) -> MagElement {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MagElement {
    type Output = MagElement;
    fn neg(self) -> MagElement {
        MagElement {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MagElement {
    type Output = MagElement;
    fn mul(self, rhs: &MagElement) -> MagElement {
        self.product(rhs)
    }
}

impl fmt::Display for MagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{a}·{t}")?;
            }
        }
        Ok(())
    }
}

/// Left-nested product `((..(x1·x2)·x3)..)·xn`; identity on one argument.
pub fn left_comb(args: &[MagElement]) -> Result<MagElement, Error> {
    let (first, rest) = args.split_first().ok_or(Error::EmptyArguments)?;
    let mut acc = first.clone();
    for x in rest {
        acc = acc.product(x);
    }
    Ok(acc)
}

/// Right-nested product `x1·(x2·(..·xn))`; identity on one argument.
pub fn right_comb(args: &[MagElement]) -> Result<MagElement, Error> {
    let (last, init) = args.split_last().ok_or(Error::EmptyArguments)?;
    let mut acc = last.clone();
    for x in init.iter().rev() {
        acc = x.product(&acc);
    }
    Ok(acc)
}

/// The associator `(a·b)·c - a·(b·c)`.
pub fn associator(a: &MagElement, b: &MagElement, c: &MagElement) -> MagElement {
    &a.product(b).product(c) - &a.product(&b.product(c))
}

/// The `i`-th primitive operation of arity `n`.
///
/// `mu(3, 1)` is the associator; `mu(n, 1)` wraps the middle arguments in
/// a left comb, and for `i >= 2` the operation is the arity-4 pattern
/// `as(a, b, c·d) - as(a, b, c)·d` applied to left combs of the arguments.
pub fn mu(arity: usize, slot: usize, args: &[MagElement]) -> Result<MagElement, Error> {
    if arity < 3 || slot == 0 || slot > arity - 2 {
        return Err(Error::MuOutOfRange { arity, slot });
    }
    if args.len() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            got: args.len(),
        });
    }
    let n = arity;
    if slot == 1 {
        let middle = left_comb(&args[1..n - 1])?;
        return Ok(associator(&args[0], &middle, &args[n - 1]));
    }
    let b = left_comb(&args[1..n - slot])?;
    let c = left_comb(&args[n - slot..n - 1])?;
    let d = &args[n - 1];
    Ok(&associator(&args[0], &b, &c.product(d)) - &associator(&args[0], &b, &c).product(d))
}

/// Evaluates a Fine-tree monomial: leaves consume the arguments from left
/// to right, and a vertex of arity `k` with label `i` applies `mu(k, i)`
/// to the values of its children.
pub fn expand_fine_monomial(m: &FineTree, args: &[MagElement]) -> Result<MagElement, Error> {
    if args.len() != m.leaf_count() {
        return Err(Error::ArityMismatch {
            expected: m.leaf_count(),
            got: args.len(),
        });
    }
    match m {
        FineTree::Leaf => Ok(args[0].clone()),
        FineTree::Node { label, children } => {
            let mut parts = Vec::with_capacity(children.len());
            let mut offset = 0;
            for child in children {
                let w = child.leaf_count();
                parts.push(expand_fine_monomial(child, &args[offset..offset + w])?);
                offset += w;
            }
            mu(children.len(), *label, &parts)
        }
    }
}
