//! Rooted trees and the two directions of the Matula bijection.
//!
//! `decode(n)` builds the tree whose Matula number is `n`: the 1-vertex tree
//! for `n = 1`, otherwise a root with one child subtree `decode(m)` for every
//! prime factor `p_m` of `n` (with multiplicity). `encode` is the inverse,
//! multiplying `p_{encode(child)}` over the root's children.
//!
//! Trees produced here are canonical: children are sorted ascending by their
//! own Matula numbers. Three text formats are supported:
//!
//! * paren strings, `tree := "(" tree* ")"`, e.g. `(()())` for `decode(4)`;
//! * JSON, `{"matula": "<decimal>", "children": [...]}`;
//! * Graphviz DOT, edges parent to child, each node labelled with the Matula
//!   number of the subtree it roots.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, ParseError, Result};
use crate::primes::PrimeTable;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RootedTree {
    children: Vec<RootedTree>,
}

/// A tree with every vertex annotated by the Matula number of its subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledTree {
    pub matula: u64,
    pub children: Vec<LabelledTree>,
}

impl RootedTree {
    /// The 1-vertex tree.
    pub fn single_vertex() -> Self {
        RootedTree::default()
    }

    /// A root whose children are the given subtrees, kept in the given order.
    pub fn with_children(children: Vec<RootedTree>) -> Self {
        RootedTree { children }
    }

    /// A path on `vertices` vertices rooted at one end.
    pub fn path(vertices: usize) -> Self {
        assert!(vertices >= 1, "a tree has at least one vertex");
        (1..vertices).fold(RootedTree::single_vertex(), |t, _| {
            RootedTree::with_children(vec![t])
        })
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn into_children(self) -> Vec<RootedTree> {
        self.children
    }

    pub fn root_degree(&self) -> usize {
        self.children.len()
    }

    pub fn vertex_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(RootedTree::vertex_count)
            .sum::<usize>()
    }

    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| 1 + c.height())
            .max()
            .unwrap_or(0)
    }

    /// Matula number of this tree using the global prime table.
    pub fn encode(&self) -> Result<u64> {
        self.encode_with(&PrimeTable::global())
    }

    pub fn encode_with(&self, primes: &PrimeTable) -> Result<u64> {
        let mut n: u64 = 1;
        for child in &self.children {
            let p = primes.nth_prime(child.encode_with(primes)?)?;
            n = n.checked_mul(p).ok_or_else(|| {
                Error::CapacityExceeded("Matula number does not fit in 64 bits".into())
            })?;
        }
        Ok(n)
    }

    pub fn label_with(&self, primes: &PrimeTable) -> Result<LabelledTree> {
        let children = self
            .children
            .iter()
            .map(|c| c.label_with(primes))
            .collect::<Result<Vec<_>>>()?;
        let mut matula: u64 = 1;
        for child in &children {
            let p = primes.nth_prime(child.matula)?;
            matula = matula.checked_mul(p).ok_or_else(|| {
                Error::CapacityExceeded("Matula number does not fit in 64 bits".into())
            })?;
        }
        Ok(LabelledTree { matula, children })
    }

    /// Same tree with children ordered ascending by Matula number, at every level.
    pub fn canonicalize(&self) -> Result<RootedTree> {
        Ok(self.label_with(&PrimeTable::global())?.into_tree())
    }

    pub fn is_canonical(&self) -> Result<bool> {
        Ok(self.canonicalize()? == *self)
    }

    /// Paren string with children in stored order; canonical whenever the
    /// tree is (every tree returned by [`decode`] is).
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::with_capacity(2 * self.vertex_count());
        self.write_parens(&mut out);
        out
    }

    fn write_parens(&self, out: &mut String) {
        out.push('(');
        for c in &self.children {
            c.write_parens(out);
        }
        out.push(')');
    }

    pub fn parse_canonical_string(s: &str) -> Result<RootedTree, ParseError> {
        // open vertices, innermost last; each holds the children seen so far
        let mut stack: Vec<Vec<RootedTree>> = Vec::new();
        let mut root = None;
        for (offset, byte) in s.bytes().enumerate() {
            if root.is_some() {
                return Err(ParseError::new(offset, "trailing input after the root"));
            }
            match byte {
                b'(' => stack.push(Vec::new()),
                b')' => {
                    let children = stack
                        .pop()
                        .ok_or_else(|| ParseError::new(offset, "unbalanced ')'"))?;
                    let t = RootedTree::with_children(children);
                    match stack.last_mut() {
                        Some(parent) => parent.push(t),
                        None => root = Some(t),
                    }
                }
                _ => {
                    return Err(ParseError::new(
                        offset,
                        format!("unexpected character {:?}", byte as char),
                    ))
                }
            }
        }
        root.ok_or_else(|| {
            if s.is_empty() {
                ParseError::new(0, "empty input")
            } else {
                ParseError::new(s.len(), "unclosed '('")
            }
        })
    }

    /// JSON with the Matula number of each subtree as a decimal string.
    pub fn to_json(&self) -> Result<String> {
        Ok(self
            .label_with(&PrimeTable::global())?
            .to_json()
            .to_string())
    }

    pub fn to_dot(&self) -> Result<String> {
        Ok(self.label_with(&PrimeTable::global())?.to_dot())
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl FromStr for RootedTree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        RootedTree::parse_canonical_string(s)
    }
}

impl LabelledTree {
    /// Drops the labels, sorting children by them.
    pub fn into_tree(mut self) -> RootedTree {
        self.children.sort_by_key(|c| c.matula);
        RootedTree::with_children(self.children.into_iter().map(Self::into_tree).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "matula": self.matula.to_string(),
            "children": self.children.iter().map(Self::to_json).collect::<Vec<_>>(),
        })
    }

    /// Nodes are numbered in depth-first preorder, `v0` being the root.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph matula {\n");
        let mut next_id = 0;
        self.write_dot(&mut out, &mut next_id);
        out.push_str("}\n");
        out
    }

    fn write_dot(&self, out: &mut String, next_id: &mut usize) -> usize {
        let id = *next_id;
        *next_id += 1;
        writeln!(out, "  v{id} [label=\"{}\"];", self.matula).unwrap();
        for child in &self.children {
            let child_id = child.write_dot(out, next_id);
            writeln!(out, "  v{id} -> v{child_id};").unwrap();
        }
        id
    }
}

/// The rooted tree with Matula number `n`, using the global prime table.
pub fn decode(n: u64) -> Result<RootedTree> {
    decode_with(&PrimeTable::global(), n)
}

pub fn decode_with(primes: &PrimeTable, n: u64) -> Result<RootedTree> {
    if n == 0 {
        return Err(Error::InvalidInput("Matula numbers start at 1".into()));
    }
    // factors come out ascending and prime order is monotone, so the
    // children are already in canonical order
    let children = primes
        .factorize(n)?
        .prime_factors()
        .map(|p| decode_with(primes, primes.prime_index(p)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(RootedTree::with_children(children))
}

/// Matula number of `t`, using the global prime table.
pub fn encode(t: &RootedTree) -> Result<u64> {
    t.encode()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_vertex() {
        let t = decode(1).unwrap();
        assert_eq!(t, RootedTree::single_vertex());
        assert_eq!(t.to_canonical_string(), "()");
        assert_eq!(t.encode().unwrap(), 1);
    }

    #[test]
    fn small_trees() {
        assert_eq!(RootedTree::path(2).encode().unwrap(), 2);
        let four = decode(4).unwrap();
        assert_eq!(four.to_canonical_string(), "(()())");
        assert_eq!(four.vertex_count(), 3);
        assert_eq!(four.root_degree(), 2);
        let parsed: RootedTree = "(()())".parse().unwrap();
        assert_eq!(parsed.encode().unwrap(), 4);
        // 9 = p_2^2 and 3 = p_2 is the 2-vertex path, so 9 is the 5-vertex path
        // rooted at its middle vertex
        assert_eq!(decode(9).unwrap().to_canonical_string(), "((())(()))");
    }

    #[test]
    fn worked_example() {
        let t = decode(987654321).unwrap();
        assert_eq!(t.root_degree(), 5);
        let labels: Vec<u64> = t.children().iter().map(|c| c.encode().unwrap()).collect();
        assert_eq!(labels, vec![2, 2, 7, 7, 32277]);
        let big = &t.children()[4];
        let sub: Vec<u64> = big.children().iter().map(|c| c.encode().unwrap()).collect();
        assert_eq!(sub, vec![2, 4, 10, 16]);
        assert_eq!(t.vertex_count(), 29);
        assert_eq!(t.encode().unwrap(), 987654321);
    }

    #[test]
    fn decode_zero() {
        assert!(matches!(decode(0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let cases = [
            ("", 0),
            ("(", 1),
            ("(()", 3),
            (")", 0),
            ("()()", 2),
            ("(x)", 1),
            ("(() )", 3),
        ];
        for (input, offset) in cases {
            let err = RootedTree::parse_canonical_string(input).unwrap_err();
            assert_eq!(err.offset, offset, "input {input:?}: {err}");
        }
    }

    #[test]
    fn non_canonical_order() {
        let t: RootedTree = "((())())".parse().unwrap();
        assert!(!t.is_canonical().unwrap());
        assert_eq!(t.encode().unwrap(), 6);
        let c = t.canonicalize().unwrap();
        assert_eq!(c.to_canonical_string(), "(()(()))");
        assert_eq!(c, decode(6).unwrap());
    }

    #[test]
    fn json_export() {
        assert_eq!(
            decode(4).unwrap().to_json().unwrap(),
            r#"{"matula":"4","children":[{"matula":"1","children":[]},{"matula":"1","children":[]}]}"#
        );
    }

    #[test]
    fn dot_export() {
        assert_eq!(
            decode(6).unwrap().to_dot().unwrap(),
            "digraph matula {\n  v0 [label=\"6\"];\n  v1 [label=\"1\"];\n  v0 -> v1;\n  \
             v2 [label=\"2\"];\n  v3 [label=\"1\"];\n  v2 -> v3;\n  v0 -> v2;\n}\n"
        );
    }

    #[test]
    fn encode_overflow() {
        // 65 leaves under one root: 2^65
        let star = RootedTree::with_children(vec![RootedTree::single_vertex(); 65]);
        assert!(matches!(star.encode(), Err(Error::CapacityExceeded(_))));
    }

    proptest! {
        #[test]
        fn bijection(n in 1u64..200_000) {
            let t = decode(n).unwrap();
            prop_assert_eq!(t.encode().unwrap(), n);
            prop_assert!(t.is_canonical().unwrap());
            let s = t.to_canonical_string();
            prop_assert_eq!(RootedTree::parse_canonical_string(&s).unwrap(), t);
        }

        #[test]
        fn root_degree_is_omega(n in 2u64..200_000) {
            let omega = crate::primes::factorize(n).unwrap().omega() as usize;
            prop_assert_eq!(decode(n).unwrap().root_degree(), omega);
        }

        #[test]
        fn children_order_is_irrelevant(n in 1u64..100_000, seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let t = decode(n).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut children = t.into_children();
            children.shuffle(&mut rng);
            prop_assert_eq!(RootedTree::with_children(children).encode().unwrap(), n);
        }
    }
}
