//! Planar binary trees and labeled Fine trees.
//!
//! Planar binary trees with `n` leaves (counted by the Catalan number
//! `C(n-1)`) index the basis of the free magmatic algebra. The labeled
//! trees of [`FineTree`] — every vertex of arity `k >= 3`, labeled by
//! `1..=k-2` — index the monomials of the primitive operad; trees with
//! `n` leaves are counted by the Fine number `F(n-1)`.

use crate::Error;
use num::{BigInt, One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A planar binary rooted tree: a leaf, or the grafting of two subtrees.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BinaryTree {
    Leaf,
    Vee(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    /// Grafts `self` and `rhs` onto a new root.
    pub fn graft(self, rhs: BinaryTree) -> BinaryTree {
        BinaryTree::Vee(Box::new(self), Box::new(rhs))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Vee(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// The fully left-nested tree with `n` leaves: `((..(1 2) 3)..) n`.
    pub fn left_comb(n: usize) -> Result<BinaryTree, Error> {
        if n == 0 {
            return Err(Error::ZeroLeaves);
        }
        let mut t = BinaryTree::Leaf;
        for _ in 1..n {
            t = t.graft(BinaryTree::Leaf);
        }
        Ok(t)
    }

    /// The fully right-nested tree with `n` leaves.
    pub fn right_comb(n: usize) -> Result<BinaryTree, Error> {
        if n == 0 {
            return Err(Error::ZeroLeaves);
        }
        let mut t = BinaryTree::Leaf;
        for _ in 1..n {
            t = BinaryTree::Leaf.graft(t);
        }
        Ok(t)
    }

    /// Splits the tree between leaves `i` and `i+1` (leaves are numbered
    /// `1..=n` from the left).
    ///
    /// The left part keeps leaves `1..=i`, the right part the rest. For
    /// `t = l ∨ r` with `k` leaves on the left this is the three-case
    /// recursion: cut inside `l`, cut at the root, or cut inside `r`.
    pub fn split(&self, i: usize) -> Result<(BinaryTree, BinaryTree), Error> {
        let n = self.leaf_count();
        if i == 0 || i >= n {
            return Err(Error::SplitOutOfRange {
                position: i,
                leaves: n,
            });
        }
        Ok(self.split_unchecked(i))
    }

    fn split_unchecked(&self, i: usize) -> (BinaryTree, BinaryTree) {
        match self {
            BinaryTree::Leaf => unreachable!("split position validated against leaf count"),
            BinaryTree::Vee(l, r) => {
                let k = l.leaf_count();
                match i.cmp(&k) {
                    Ordering::Less => {
                        let (a, b) = l.split_unchecked(i);
                        (a, b.graft((**r).clone()))
                    }
                    Ordering::Equal => ((**l).clone(), (**r).clone()),
                    Ordering::Greater => {
                        let (a, b) = r.split_unchecked(i - k);
                        ((**l).clone().graft(a), b)
                    }
                }
            }
        }
    }

    /// Canonical code: `*` for a leaf, `(LR)` for a grafting.
    pub fn encode(&self) -> String {
        let mut out = String::new();
        self.write_code(&mut out);
        out
    }

    fn write_code(&self, out: &mut String) {
        match self {
            BinaryTree::Leaf => out.push('*'),
            BinaryTree::Vee(l, r) => {
                out.push('(');
                l.write_code(out);
                r.write_code(out);
                out.push(')');
            }
        }
    }

    /// Parses a canonical code, reporting the byte position of any defect.
    pub fn decode(code: &str) -> Result<BinaryTree, Error> {
        let bytes = code.as_bytes();
        let mut pos = 0;
        let t = Self::parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::MalformedCode {
                position: pos,
                reason: "trailing input after a complete tree".into(),
            });
        }
        Ok(t)
    }

    fn parse(bytes: &[u8], pos: &mut usize) -> Result<BinaryTree, Error> {
        match bytes.get(*pos) {
            Some(b'*') => {
                *pos += 1;
                Ok(BinaryTree::Leaf)
            }
            Some(b'(') => {
                *pos += 1;
                let l = Self::parse(bytes, pos)?;
                let r = Self::parse(bytes, pos)?;
                match bytes.get(*pos) {
                    Some(b')') => {
                        *pos += 1;
                        Ok(l.graft(r))
                    }
                    _ => Err(Error::MalformedCode {
                        position: *pos,
                        reason: "expected ')'".into(),
                    }),
                }
            }
            Some(c) => Err(Error::MalformedCode {
                position: *pos,
                reason: format!("expected '*' or '(', found {:?}", *c as char),
            }),
            None => Err(Error::MalformedCode {
                position: *pos,
                reason: "unexpected end of input".into(),
            }),
        }
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinaryTree {
    // Coincides with the lexicographic order of canonical codes: '(' sorts
    // before the leaf token '*', so a grafted tree precedes a bare leaf,
    // and codes are prefix-free so the comparison recurses left-to-right.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BinaryTree::Leaf, BinaryTree::Leaf) => Ordering::Equal,
            (BinaryTree::Leaf, BinaryTree::Vee(..)) => Ordering::Greater,
            (BinaryTree::Vee(..), BinaryTree::Leaf) => Ordering::Less,
            (BinaryTree::Vee(l1, r1), BinaryTree::Vee(l2, r2)) => {
                l1.cmp(l2).then_with(|| r1.cmp(r2))
            }
        }
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for BinaryTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        BinaryTree::decode(s)
    }
}

/// All planar binary trees with `n` leaves, in canonical (code) order.
pub fn enumerate_binary(n: usize) -> Result<Vec<BinaryTree>, Error> {
    if n == 0 {
        return Err(Error::ZeroLeaves);
    }
    let mut table: Vec<Vec<BinaryTree>> = vec![Vec::new(), vec![BinaryTree::Leaf]];
    for m in 2..=n {
        let mut trees = Vec::new();
        for k in 1..m {
            for l in &table[k] {
                for r in &table[m - k] {
                    trees.push(l.clone().graft(r.clone()));
                }
            }
        }
        trees.sort();
        table.push(trees);
    }
    Ok(table.pop().expect("table has an entry for n"))
}

/// A planar rooted tree with no unary or binary vertices, each vertex of
/// arity `k` labeled by an integer in `1..=k-2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FineTree {
    Leaf,
    Node { label: usize, children: Vec<FineTree> },
}

impl FineTree {
    /// A labeled vertex; rejects arities below 3 and labels outside
    /// `1..=arity-2`.
    pub fn node(label: usize, children: Vec<FineTree>) -> Result<FineTree, Error> {
        let arity = children.len();
        if arity < 3 || label == 0 || label > arity - 2 {
            return Err(Error::BadVertex { arity, label });
        }
        Ok(FineTree::Node { label, children })
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            FineTree::Leaf => 1,
            FineTree::Node { children, .. } => children.iter().map(FineTree::leaf_count).sum(),
        }
    }

    /// Checks the arity/label constraint at every vertex.
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            FineTree::Leaf => Ok(()),
            FineTree::Node { label, children } => {
                let arity = children.len();
                if arity < 3 || *label == 0 || *label > arity - 2 {
                    return Err(Error::BadVertex {
                        arity,
                        label: *label,
                    });
                }
                children.iter().try_for_each(FineTree::validate)
            }
        }
    }

    /// Canonical code: `*` for a leaf, `(<label><children>)` for a vertex.
    pub fn encode(&self) -> String {
        let mut out = String::new();
        self.write_code(&mut out);
        out
    }

    fn write_code(&self, out: &mut String) {
        match self {
            FineTree::Leaf => out.push('*'),
            FineTree::Node { label, children } => {
                out.push('(');
                out.push_str(&label.to_string());
                for c in children {
                    c.write_code(out);
                }
                out.push(')');
            }
        }
    }

    pub fn decode(code: &str) -> Result<FineTree, Error> {
        let bytes = code.as_bytes();
        let mut pos = 0;
        let t = Self::parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::MalformedCode {
                position: pos,
                reason: "trailing input after a complete tree".into(),
            });
        }
        Ok(t)
    }

    fn parse(bytes: &[u8], pos: &mut usize) -> Result<FineTree, Error> {
        match bytes.get(*pos) {
            Some(b'*') => {
                *pos += 1;
                Ok(FineTree::Leaf)
            }
            Some(b'(') => {
                let open = *pos;
                *pos += 1;
                let digits_start = *pos;
                while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
                    *pos += 1;
                }
                if *pos == digits_start {
                    return Err(Error::MalformedCode {
                        position: *pos,
                        reason: "expected a vertex label".into(),
                    });
                }
                let digits = std::str::from_utf8(&bytes[digits_start..*pos]).expect("ascii digits");
                if digits.len() > 1 && digits.starts_with('0') {
                    return Err(Error::MalformedCode {
                        position: digits_start,
                        reason: "vertex label has a leading zero".into(),
                    });
                }
                let label: usize = digits.parse().map_err(|_| Error::MalformedCode {
                    position: digits_start,
                    reason: "vertex label out of range".into(),
                })?;
                let mut children = Vec::new();
                loop {
                    match bytes.get(*pos) {
                        Some(b')') => {
                            *pos += 1;
                            break;
                        }
                        Some(_) => children.push(Self::parse(bytes, pos)?),
                        None => {
                            return Err(Error::MalformedCode {
                                position: *pos,
                                reason: "unexpected end of input".into(),
                            })
                        }
                    }
                }
                let arity = children.len();
                if arity < 3 || label == 0 || label > arity - 2 {
                    return Err(Error::MalformedCode {
                        position: open,
                        reason: format!("vertex of arity {arity} cannot carry label {label}"),
                    });
                }
                Ok(FineTree::Node { label, children })
            }
            Some(c) => Err(Error::MalformedCode {
                position: *pos,
                reason: format!("expected '*' or '(', found {:?}", *c as char),
            }),
            None => Err(Error::MalformedCode {
                position: *pos,
                reason: "unexpected end of input".into(),
            }),
        }
    }
}

impl PartialOrd for FineTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FineTree {
    // Lexicographic order of canonical codes.
    fn cmp(&self, other: &Self) -> Ordering {
        self.encode().cmp(&other.encode())
    }
}

impl fmt::Display for FineTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for FineTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        FineTree::decode(s)
    }
}

/// Unlabeled shape of a Fine tree: every vertex has arity >= 3.
#[derive(Clone)]
enum Shape {
    Leaf,
    Node(Vec<Shape>),
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fill_compositions(total, parts, &mut cur, &mut out);
    out
}

fn fill_compositions(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for first in 1..=(total - (parts - 1)) {
        cur.push(first);
        fill_compositions(total - first, parts - 1, cur, out);
        cur.pop();
    }
}

fn cross_children(
    table: &[Vec<Shape>],
    comp: &[usize],
    idx: usize,
    acc: &mut Vec<Shape>,
    out: &mut Vec<Shape>,
) {
    if idx == comp.len() {
        out.push(Shape::Node(acc.clone()));
        return;
    }
    for child in &table[comp[idx]] {
        acc.push(child.clone());
        cross_children(table, comp, idx + 1, acc, out);
        acc.pop();
    }
}

fn shape_table(n: usize) -> Vec<Vec<Shape>> {
    let mut table: Vec<Vec<Shape>> = vec![Vec::new(); n + 1];
    if n >= 1 {
        table[1].push(Shape::Leaf);
    }
    for m in 2..=n {
        let mut shapes = Vec::new();
        for k in 3..=m {
            for comp in compositions(m, k) {
                cross_children(&table, &comp, 0, &mut Vec::new(), &mut shapes);
            }
        }
        table[m] = shapes;
    }
    table
}

fn labelings(shape: &Shape) -> Vec<FineTree> {
    match shape {
        Shape::Leaf => vec![FineTree::Leaf],
        Shape::Node(children) => {
            let k = children.len();
            let mut combos: Vec<Vec<FineTree>> = vec![Vec::new()];
            for child in children {
                let options = labelings(child);
                let mut next = Vec::with_capacity(combos.len() * options.len());
                for partial in &combos {
                    for option in &options {
                        let mut extended = partial.clone();
                        extended.push(option.clone());
                        next.push(extended);
                    }
                }
                combos = next;
            }
            let mut out = Vec::new();
            for combo in combos {
                for label in 1..=k - 2 {
                    out.push(FineTree::Node {
                        label,
                        children: combo.clone(),
                    });
                }
            }
            out
        }
    }
}

/// All Fine trees with `n` leaves, in canonical (code) order.
///
/// Enumeration walks the unlabeled shapes first and then assigns the
/// `1..=k-2` labels vertex by vertex.
pub fn enumerate_fine(n: usize) -> Result<Vec<FineTree>, Error> {
    if n == 0 {
        return Err(Error::ZeroLeaves);
    }
    let table = shape_table(n);
    let mut trees: Vec<FineTree> = table[n].iter().flat_map(labelings).collect();
    trees.sort_by_cached_key(FineTree::encode);
    Ok(trees)
}

/// The Catalan number `C(n)`, by the standard recurrence.
pub fn catalan(n: usize) -> BigInt {
    let mut c = vec![BigInt::one()];
    for m in 1..=n {
        let mut s = BigInt::zero();
        for i in 0..m {
            s += &c[i] * &c[m - 1 - i];
        }
        c.push(s);
    }
    c[n].clone()
}

/// The Fine number `F(n)`: the number of labeled trees with `n+1` leaves.
///
/// Computed from the combinatorial recursion `g = x + g^3/(1-g)^2` by
/// fixpoint iteration on truncated integer series, so no closed form is
/// involved.
pub fn fine_number(n: usize) -> BigInt {
    let top = n + 1;
    let mut g = vec![BigInt::zero(); top + 1];
    g[1] = BigInt::one();
    for _ in 0..top {
        let cube = conv(&conv(&g, &g, top), &g, top);
        // cube * sum_{j>=0} (j+1) g^j, truncated at top
        let mut rhs = vec![BigInt::zero(); top + 1];
        let mut power = cube;
        let mut j = 0usize;
        while power.iter().any(|c| !c.is_zero()) {
            for (i, c) in power.iter().enumerate() {
                rhs[i] += c * BigInt::from(j + 1);
            }
            power = conv(&power, &g, top);
            j += 1;
        }
        rhs[1] += BigInt::one();
        if rhs == g {
            break;
        }
        g = rhs;
    }
    g[top].clone()
}

fn conv(a: &[BigInt], b: &[BigInt], top: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); top + 1];
    for (i, ai) in a.iter().enumerate().take(top + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(top + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn leaf() -> BinaryTree {
        BinaryTree::Leaf
    }

    /// Independent split oracle: restrict the tree to a contiguous leaf
    /// interval by deleting the other leaves and contracting what is left.
    fn restrict(t: &BinaryTree, lo: usize, hi: usize, offset: usize) -> Option<BinaryTree> {
        match t {
            BinaryTree::Leaf => {
                let idx = offset + 1;
                (lo <= idx && idx <= hi).then_some(BinaryTree::Leaf)
            }
            BinaryTree::Vee(l, r) => {
                let k = l.leaf_count();
                let a = restrict(l, lo, hi, offset);
                let b = restrict(r, lo, hi, offset + k);
                match (a, b) {
                    (Some(a), Some(b)) => Some(a.graft(b)),
                    (Some(a), None) => Some(a),
                    (None, Some(b)) => Some(b),
                    (None, None) => None,
                }
            }
        }
    }

    fn split_oracle(t: &BinaryTree, i: usize) -> (BinaryTree, BinaryTree) {
        let n = t.leaf_count();
        (
            restrict(t, 1, i, 0).expect("left part nonempty"),
            restrict(t, i + 1, n, 0).expect("right part nonempty"),
        )
    }

    #[test]
    fn binary_counts_match_catalan_recurrence() {
        for n in 1..=12 {
            let trees = enumerate_binary(n).unwrap();
            assert_eq!(BigInt::from(trees.len()), catalan(n - 1), "n = {n}");
        }
    }

    #[test]
    fn binary_enumeration_frozen_counts() {
        assert_eq!(enumerate_binary(1).unwrap(), vec![leaf()]);
        assert_eq!(enumerate_binary(3).unwrap().len(), 2);
        assert_eq!(enumerate_binary(5).unwrap().len(), 14);
    }

    #[test]
    fn binary_enumeration_is_duplicate_free_and_sorted() {
        for n in 1..=8 {
            let trees = enumerate_binary(n).unwrap();
            let codes: Vec<String> = trees.iter().map(BinaryTree::encode).collect();
            let set: HashSet<&String> = codes.iter().collect();
            assert_eq!(set.len(), trees.len());
            let mut sorted = codes.clone();
            sorted.sort();
            assert_eq!(codes, sorted, "canonical order is code order");
        }
    }

    #[test]
    fn enumerate_rejects_zero() {
        assert_eq!(enumerate_binary(0), Err(Error::ZeroLeaves));
        assert_eq!(enumerate_fine(0), Err(Error::ZeroLeaves));
        assert_eq!(BinaryTree::left_comb(0), Err(Error::ZeroLeaves));
        assert_eq!(BinaryTree::right_comb(0), Err(Error::ZeroLeaves));
    }

    #[test]
    fn graft_examples() {
        assert_eq!(leaf().graft(leaf()), BinaryTree::decode("(**)").unwrap());
        assert_eq!(
            leaf().graft(leaf()).graft(leaf()),
            BinaryTree::left_comb(3).unwrap()
        );
        for t in enumerate_binary(4).unwrap() {
            for s in enumerate_binary(3).unwrap() {
                assert_eq!(t.clone().graft(s.clone()).leaf_count(), 7);
            }
        }
    }

    #[test]
    fn comb_trees() {
        assert_eq!(BinaryTree::left_comb(1).unwrap(), leaf());
        assert_eq!(BinaryTree::right_comb(1).unwrap(), leaf());
        assert_eq!(
            BinaryTree::left_comb(2).unwrap(),
            BinaryTree::right_comb(2).unwrap()
        );
        let l3 = BinaryTree::left_comb(3).unwrap();
        let r3 = BinaryTree::right_comb(3).unwrap();
        assert_ne!(l3, r3);
        assert_eq!(l3.leaf_count(), 3);
        assert_eq!(r3.leaf_count(), 3);
    }

    #[test]
    fn split_examples() {
        let cherry = leaf().graft(leaf());
        assert_eq!(cherry.split(1).unwrap(), (leaf(), leaf()));

        // Cutting a left comb peels prefix combs off the front.
        let l3 = BinaryTree::left_comb(3).unwrap();
        assert_eq!(l3.split(1).unwrap(), (leaf(), leaf().graft(leaf())));
        assert_eq!(l3.split(2).unwrap(), (leaf().graft(leaf()), leaf()));

        assert!(matches!(
            l3.split(0),
            Err(Error::SplitOutOfRange { position: 0, .. })
        ));
        assert!(matches!(
            l3.split(3),
            Err(Error::SplitOutOfRange { position: 3, .. })
        ));
        assert!(leaf().split(1).is_err());
    }

    #[test]
    fn split_agrees_with_path_cutting_oracle() {
        for n in 2..=8 {
            for t in enumerate_binary(n).unwrap() {
                for i in 1..n {
                    let (a, b) = t.split(i).unwrap();
                    assert_eq!(a.leaf_count(), i);
                    assert_eq!(b.leaf_count(), n - i);
                    assert_eq!((a, b), split_oracle(&t, i), "t = {t}, i = {i}");
                }
            }
        }
    }

    #[test]
    fn split_inverts_graft() {
        for t in enumerate_binary(4).unwrap() {
            for s in enumerate_binary(3).unwrap() {
                let g = t.clone().graft(s.clone());
                assert_eq!(g.split(t.leaf_count()).unwrap(), (t.clone(), s.clone()));
            }
        }
    }

    #[test]
    fn codes_round_trip_exhaustively() {
        for n in 1..=8 {
            for t in enumerate_binary(n).unwrap() {
                assert_eq!(BinaryTree::decode(&t.encode()).unwrap(), t);
            }
        }
        for n in 1..=8 {
            for t in enumerate_fine(n).unwrap() {
                assert_eq!(FineTree::decode(&t.encode()).unwrap(), t);
            }
        }
    }

    #[test]
    fn decode_reports_positions() {
        assert_eq!(BinaryTree::encode(&leaf()), "*");
        match BinaryTree::decode("((") {
            Err(Error::MalformedCode { position: 2, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        assert!(BinaryTree::decode("").is_err());
        assert!(BinaryTree::decode("**").is_err());
        assert!(BinaryTree::decode("(*)").is_err());
        assert!(BinaryTree::decode("x").is_err());
        assert!(FineTree::decode("(0***)").is_err());
        assert!(FineTree::decode("(2***)").is_err());
        assert!(FineTree::decode("(1**)").is_err());
        assert!(FineTree::decode("(***)").is_err());
        assert!(FineTree::decode("(01***)").is_err(), "leading zero");
    }

    #[test]
    fn fine_counts_match_counting_function() {
        let expected: [u64; 10] = [1, 0, 1, 2, 6, 18, 57, 186, 622, 2120];
        for (k, e) in expected.iter().enumerate() {
            let n = k + 1;
            let trees = enumerate_fine(n).unwrap();
            assert_eq!(trees.len() as u64, *e, "n = {n}");
            assert_eq!(fine_number(n - 1), BigInt::from(*e));
            let set: HashSet<String> = trees.iter().map(FineTree::encode).collect();
            assert_eq!(set.len(), trees.len());
            for t in &trees {
                t.validate().unwrap();
                assert_eq!(t.leaf_count(), n);
            }
        }
    }

    #[test]
    fn fine_small_cases() {
        assert_eq!(enumerate_fine(1).unwrap(), vec![FineTree::Leaf]);
        assert!(enumerate_fine(2).unwrap().is_empty());
        let x3 = enumerate_fine(3).unwrap();
        assert_eq!(x3.len(), 1);
        assert_eq!(x3[0].encode(), "(1***)");
        assert_eq!(enumerate_fine(7).unwrap().len(), 57);
    }

    #[test]
    fn fine_node_constructor_validates() {
        let leaves = vec![FineTree::Leaf, FineTree::Leaf, FineTree::Leaf];
        assert!(FineTree::node(1, leaves.clone()).is_ok());
        assert!(FineTree::node(2, leaves.clone()).is_err());
        assert!(FineTree::node(0, leaves).is_err());
        assert!(FineTree::node(1, vec![FineTree::Leaf, FineTree::Leaf]).is_err());
    }

    #[test]
    fn catalan_frozen_values() {
        let expected: [u64; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(catalan(n), BigInt::from(*e));
        }
    }

    fn arb_tree() -> impl Strategy<Value = BinaryTree> {
        let leaf = Just(BinaryTree::Leaf);
        leaf.prop_recursive(5, 32, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| l.graft(r))
        })
    }

    proptest! {
        #[test]
        fn prop_code_round_trip(t in arb_tree()) {
            prop_assert_eq!(BinaryTree::decode(&t.encode()).unwrap(), t);
        }

        #[test]
        fn prop_order_matches_code_order(a in arb_tree(), b in arb_tree()) {
            prop_assert_eq!(a.cmp(&b), a.encode().cmp(&b.encode()));
        }

        #[test]
        fn prop_graft_adds_leaf_counts(a in arb_tree(), b in arb_tree()) {
            let (p, q) = (a.leaf_count(), b.leaf_count());
            let g = a.graft(b);
            prop_assert_eq!(g.leaf_count(), p + q);
            let (l, r) = g.split(p).unwrap();
            prop_assert_eq!(l.leaf_count(), p);
            prop_assert_eq!(r.leaf_count(), q);
        }
    }
}
