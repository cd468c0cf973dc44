//! The coassociative coproduct on the free magmatic algebra.
//!
//! The reduced coproduct `delta` splits each basis term between
//! consecutive leaves; the full coproduct adds the primitive part
//! `x⊗1 + 1⊗x`. Iterating `delta` yields the coradical filtration, the
//! idempotent projection `e` onto primitives, and the map `alpha` into
//! the tensor coalgebra on the primitives, which reconstructs every
//! element out of right combs of primitive pieces.

use crate::magma::{MagElement, Term};
use crate::Error;
use num::{BigRational, One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A rational linear combination of `rank`-tuples of basis terms.
///
/// Tuples of the reduced coproducts contain positive-degree terms only;
/// the full coproduct also stores tuples with unit slots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    rank: usize,
    terms: BTreeMap<Vec<Term>, BigRational>,
}

impl TensorElement {
    pub fn zero(rank: usize) -> TensorElement {
        assert!(rank >= 1, "tensor rank must be positive");
        TensorElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// Embeds the positive-degree part of an element as a rank-1 tensor.
    pub fn from_element(x: &MagElement) -> TensorElement {
        let mut out = TensorElement::zero(1);
        for (t, c) in x.iter() {
            if !t.is_unit() {
                out.add_tuple(vec![t.clone()], c.clone());
            }
        }
        out
    }

    /// The outer product `parts[0] ⊗ ... ⊗ parts[k-1]`, unit terms kept.
    pub fn tensor(parts: &[MagElement]) -> TensorElement {
        assert!(!parts.is_empty(), "tensor of no factors");
        let mut out = TensorElement::zero(parts.len());
        let mut stack: Vec<(Vec<Term>, BigRational)> = vec![(Vec::new(), BigRational::one())];
        for part in parts {
            let mut next = Vec::with_capacity(stack.len() * part.num_terms());
            for (prefix, coeff) in &stack {
                for (t, c) in part.iter() {
                    let mut tuple = prefix.clone();
                    tuple.push(t.clone());
                    next.push((tuple, coeff * c));
                }
            }
            stack = next;
        }
        for (tuple, coeff) in stack {
            out.add_tuple(tuple, coeff);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_tuples(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Term>, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_tuple(&mut self, tuple: Vec<Term>, coeff: BigRational) {
        assert_eq!(tuple.len(), self.rank, "tuple length must match rank");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(tuple) {
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

    pub fn scaled(&self, c: &BigRational) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero(self.rank);
        }
        TensorElement {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.clone(), a * c))
                .collect(),
        }
    }

    /// Concatenation of tensors: a rank-`j` and a rank-`k` element give a
    /// rank-`j+k` element with concatenated tuples.
    pub fn outer_product(&self, rhs: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.rank + rhs.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut tuple = a.clone();
                tuple.extend_from_slice(b);
                out.add_tuple(tuple, ca * cb);
            }
        }
        out
    }

    /// Factorwise product: `(x1⊗..⊗xk)·(y1⊗..⊗yk) = (x1·y1)⊗..⊗(xk·yk)`,
    /// extended bilinearly.
    pub fn factorwise_product(&self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.rank, rhs.rank, "factorwise product needs equal ranks");
        let mut out = TensorElement::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let tuple: Vec<Term> = a.iter().zip(b).map(|(x, y)| x.product(y)).collect();
                out.add_tuple(tuple, ca * cb);
            }
        }
        out
    }

    /// Applies a linear map to every slot and expands multilinearly.
    pub fn map_factors(&self, mut f: impl FnMut(&Term) -> MagElement) -> TensorElement {
        let mut out = TensorElement::zero(self.rank);
        for (tuple, coeff) in &self.terms {
            let images: Vec<MagElement> = tuple.iter().map(&mut f).collect();
            if images.iter().any(MagElement::is_zero) {
                continue;
            }
            let expanded = TensorElement::tensor(&images).scaled(coeff);
            for (t, c) in expanded.terms {
                out.add_tuple(t, c);
            }
        }
        out
    }

    /// Applies the reduced coproduct in one slot, raising the rank by one.
    pub fn apply_delta_at(&self, slot: usize) -> TensorElement {
        assert!(slot < self.rank, "slot out of range");
        let mut out = TensorElement::zero(self.rank + 1);
        for (tuple, coeff) in &self.terms {
            if let Term::Tree(tree, word) = &tuple[slot] {
                let n = word.len();
                for i in 1..n {
                    let (a, b) = tree.split(i).expect("cut position within range");
                    let mut next = Vec::with_capacity(self.rank + 1);
                    next.extend_from_slice(&tuple[..slot]);
                    next.push(Term::tree_unchecked(a, word[..i].to_vec()));
                    next.push(Term::tree_unchecked(b, word[i..].to_vec()));
                    next.extend_from_slice(&tuple[slot + 1..]);
                    out.add_tuple(next, coeff.clone());
                }
            }
        }
        out
    }

    /// Multiplies the factors of every tuple into a left comb.
    pub fn contract_left_comb(&self) -> MagElement {
        let mut out = MagElement::zero();
        for (tuple, coeff) in &self.terms {
            let mut prod = tuple[0].clone();
            for t in &tuple[1..] {
                prod = prod.product(t);
            }
            out.add_term(prod, coeff.clone());
        }
        out
    }

    /// Multiplies the factors of every tuple into a right comb.
    pub fn contract_right_comb(&self) -> MagElement {
        let mut out = MagElement::zero();
        for (tuple, coeff) in &self.terms {
            let mut prod = tuple[self.rank - 1].clone();
            for t in tuple[..self.rank - 1].iter().rev() {
                prod = t.product(&prod);
            }
            out.add_term(prod, coeff.clone());
        }
        out
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_tuple(t.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_tuple(t.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.scaled(&-BigRational::one())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (tuple, c)) in self.terms.iter().enumerate() {
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
            if !a.is_one() {
                write!(f, "{a}·")?;
            }
            let slots: Vec<String> = tuple.iter().map(Term::to_string).collect();
            f.write_str(&slots.join(" ⊗ "))?;
        }
        Ok(())
    }
}

/// The reduced coproduct: every basis term is split at each of its
/// `degree - 1` cut positions, the word following the leaves. Unit terms
/// are mapped to zero.
pub fn delta(x: &MagElement) -> TensorElement {
    TensorElement::from_element(x).apply_delta_at(0)
}

/// The iterated reduced coproduct `delta^k`, of rank `k + 1`; `delta^0`
/// embeds the element as a rank-1 tensor. Vanishes once `k` reaches the
/// degree of every term.
pub fn delta_power(k: usize, x: &MagElement) -> TensorElement {
    let mut t = TensorElement::from_element(x);
    for _ in 0..k {
        t = t.apply_delta_at(0);
    }
    t
}

/// The full coproduct: `Δ(x) = δ(x) + x⊗1 + 1⊗x` on the augmentation
/// ideal, with `Δ(1) = 1⊗1`.
pub fn full_coproduct(x: &MagElement) -> TensorElement {
    let bar = x.augmentation();
    let mut out = delta(&bar);
    for (t, c) in bar.iter() {
        out.add_tuple(vec![t.clone(), Term::Unit], c.clone());
        out.add_tuple(vec![Term::Unit, t.clone()], c.clone());
    }
    out.add_tuple(vec![Term::Unit, Term::Unit], x.unit_coeff());
    out
}

/// An element is primitive when it has no unit component and its reduced
/// coproduct vanishes.
pub fn is_primitive(x: &MagElement) -> bool {
    x.unit_coeff().is_zero() && delta(x).is_zero()
}

/// The least `r` with `x` in the `r`-th stage of the coradical
/// filtration: 0 for multiples of the unit, otherwise the smallest `r`
/// whose iterated coproduct `delta^r` kills the positive-degree part.
pub fn filtration_degree(x: &MagElement) -> usize {
    let mut t = TensorElement::from_element(&x.augmentation());
    let mut r = 0;
    while !t.is_zero() {
        t = t.apply_delta_at(0);
        r += 1;
    }
    r
}

/// The projection idempotent onto primitives:
/// `e = id + Σ_{n>=1} (-1)^n ω^{n+1} ∘ δ^n`,
/// where `ω^k` multiplies a rank-`k` tensor into a left comb. The series
/// stops by itself once the iterated coproduct vanishes.
pub fn idempotent_e(x: &MagElement) -> Result<MagElement, Error> {
    if !x.unit_coeff().is_zero() {
        return Err(Error::UnitComponent);
    }
    let mut acc = x.clone();
    let mut t = TensorElement::from_element(x);
    let mut n = 0usize;
    loop {
        t = t.apply_delta_at(0);
        n += 1;
        if t.is_zero() {
            break;
        }
        let comb = t.contract_left_comb();
        if n % 2 == 1 {
            acc = &acc - &comb;
        } else {
            acc = &acc + &comb;
        }
    }
    Ok(acc)
}

fn e_of_term(term: &Term, cache: &mut HashMap<Term, MagElement>) -> MagElement {
    if let Some(hit) = cache.get(term) {
        return hit.clone();
    }
    let single = MagElement::from_term(term.clone(), BigRational::one());
    let image = idempotent_e(&single).expect("tensor slots never hold the unit");
    cache.insert(term.clone(), image.clone());
    image
}

/// The coalgebra isomorphism onto the tensor coalgebra of the primitives:
/// component `n` is `e^{⊗n}` applied to `delta^{n-1}(x)`. The returned
/// list stops at the filtration degree of `x`; inner components may be
/// zero.
pub fn alpha(x: &MagElement) -> Result<Vec<TensorElement>, Error> {
    if !x.unit_coeff().is_zero() {
        return Err(Error::UnitComponent);
    }
    let mut cache = HashMap::new();
    let mut parts = Vec::new();
    let mut t = TensorElement::from_element(x);
    while !t.is_zero() {
        parts.push(t.map_factors(|term| e_of_term(term, &mut cache)));
        t = t.apply_delta_at(0);
    }
    Ok(parts)
}

/// Checks the reconstruction of `x` from its primitive pieces:
/// `x = e(x) + Σ_{n>=1} right_comb(e^{⊗n+1}(delta^n(x)))`.
pub fn decomposition_check(x: &MagElement) -> Result<bool, Error> {
    if !x.unit_coeff().is_zero() {
        return Err(Error::UnitComponent);
    }
    let mut cache = HashMap::new();
    let mut recon = MagElement::zero();
    let mut t = TensorElement::from_element(x);
    while !t.is_zero() {
        recon = &recon + &t.map_factors(|term| e_of_term(term, &mut cache)).contract_right_comb();
        t = t.apply_delta_at(0);
    }
    Ok(recon == *x)
}
