//! Ground truth for the recursive statistics.
//!
//! Everything here works on the explicit tree: vertices are laid out in
//! depth-first preorder, distances come from a breadth-first search out of
//! every vertex, exit distances from the leaf-upward labelling, and each
//! statistic is evaluated straight from its definition. Nothing in this
//! module calls into the recursions of [`crate::stats`]; the split checks at
//! the bottom are the one place where both meet.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::stats::{default_alpha, Exponent, StatName, StatParams, StatValue, StatsEngine};
use crate::tree::RootedTree;

pub const DEFAULT_VERTEX_BUDGET: usize = 10_000;

/// Subtrees are counted by brute-force subset enumeration up to this many
/// vertices, by a per-vertex product formula beyond.
pub const ENUMERATION_LIMIT: usize = 16;

/// Relative tolerance for statistics evaluated in floating point.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexInfo {
    pub level: usize,
    pub degree: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// Childless, except that the root of the 1-vertex tree is no leaf.
    pub is_leaf: bool,
    /// Distance to the nearest descendant leaf; 0 for the 1-vertex tree.
    pub exit_distance: usize,
}

#[derive(Debug, Clone)]
pub struct TreeAnalysis {
    vertices: Vec<VertexInfo>,
    distances: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

pub fn analyze(tree: &RootedTree) -> Result<TreeAnalysis> {
    analyze_with_budget(tree, DEFAULT_VERTEX_BUDGET)
}

pub fn analyze_with_budget(tree: &RootedTree, budget: usize) -> Result<TreeAnalysis> {
    let count = tree.vertex_count();
    if count > budget {
        return Err(Error::BudgetExceeded {
            vertices: count,
            budget,
        });
    }

    let mut vertices: Vec<VertexInfo> = Vec::with_capacity(count);
    let mut edges = Vec::with_capacity(count - 1);
    let mut stack = vec![(tree, None::<usize>, 0usize)];
    while let Some((node, parent, level)) = stack.pop() {
        let id = vertices.len();
        vertices.push(VertexInfo {
            level,
            degree: node.root_degree() + usize::from(parent.is_some()),
            parent,
            children: Vec::new(),
            is_leaf: node.children().is_empty() && count > 1,
            exit_distance: 0,
        });
        if let Some(p) = parent {
            vertices[p].children.push(id);
            edges.push((p, id));
        }
        for child in node.children().iter().rev() {
            stack.push((child, Some(id), level + 1));
        }
    }

    let mut adjacency = vec![Vec::new(); count];
    for &(a, b) in &edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let distances = (0..count)
        .map(|source| {
            let mut dist = vec![usize::MAX; count];
            dist[source] = 0;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                for &v in &adjacency[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect();

    // label the leaves 0, then every still unlabelled parent of a vertex
    // labelled k - 1 gets k
    let mut label: Vec<Option<usize>> = vertices.iter().map(|v| v.is_leaf.then_some(0)).collect();
    if count == 1 {
        label[0] = Some(0);
    }
    let mut k = 0;
    while label.iter().any(Option::is_none) {
        let newly: Vec<usize> = (0..count)
            .filter(|&v| label[v] == Some(k))
            .filter_map(|v| vertices[v].parent)
            .filter(|&p| label[p].is_none())
            .collect();
        k += 1;
        for p in newly {
            label[p] = Some(k);
        }
    }
    for (v, l) in vertices.iter_mut().zip(label) {
        v.exit_distance = l.unwrap();
    }

    Ok(TreeAnalysis {
        vertices,
        distances,
        edges,
    })
}

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

fn exact_power(base: usize, alpha: i32) -> BigRational {
    Pow::pow(BigRational::from(big(base)), alpha)
}

impl TreeAnalysis {
    /// Vertices in depth-first preorder; vertex 0 is the root.
    pub fn vertices(&self) -> &[VertexInfo] {
        &self.vertices
    }

    pub fn distances(&self) -> &[Vec<usize>] {
        &self.distances
    }

    /// `(parent, child)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Distances of all unordered pairs of distinct vertices.
    fn pair_distances(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| self.distances[i][j]))
    }

    fn leaves(&self) -> impl Iterator<Item = &VertexInfo> {
        self.vertices.iter().filter(|v| v.is_leaf)
    }

    fn pendant(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.vertices[v].degree == 1)
            .collect()
    }

    fn degree_product(&self, exponent: impl Fn(usize) -> usize) -> BigInt {
        self.vertices
            .iter()
            .map(|v| Pow::pow(big(v.degree), exponent(v.degree) as u32))
            .product()
    }

    fn edge_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .map(|&(a, b)| self.vertices[a].degree * self.vertices[b].degree)
    }

    fn level1_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices
            .iter()
            .filter(|v| v.level == 1)
            .map(|v| v.degree)
    }

    fn generating_poly(exponents: impl Iterator<Item = usize>) -> IntPolynomial {
        let mut counts: Vec<i64> = Vec::new();
        for e in exponents {
            if counts.len() <= e {
                counts.resize(e + 1, 0);
            }
            counts[e] += 1;
        }
        IntPolynomial::from_coeffs(counts)
    }

    /// Number of connected vertex subsets: `(all, containing the root)`.
    pub fn subtree_counts(&self) -> (BigInt, BigInt) {
        if self.vertex_count() <= ENUMERATION_LIMIT {
            self.subtree_counts_by_enumeration()
        } else {
            self.subtree_counts_by_product()
        }
    }

    /// Tries every nonempty vertex subset; a subset of a tree is connected
    /// exactly when it spans one edge fewer than it has vertices.
    pub fn subtree_counts_by_enumeration(&self) -> (BigInt, BigInt) {
        let n = self.vertex_count();
        assert!(n <= 24, "subset enumeration over {n} vertices");
        let (mut all, mut rooted) = (0u64, 0u64);
        for mask in 1u32..(1 << n) {
            let inside = self
                .edges
                .iter()
                .filter(|&&(a, b)| mask >> a & 1 == 1 && mask >> b & 1 == 1)
                .count();
            if inside + 1 == mask.count_ones() as usize {
                all += 1;
                rooted += u64::from(mask & 1);
            }
        }
        (all.into(), rooted.into())
    }

    /// A subtree is fixed by its topmost vertex `v` and a choice, for every
    /// child, of nothing or a subtree hanging from that child, so the number
    /// topped at `v` is the product of `1 + (number topped at child)`.
    pub fn subtree_counts_by_product(&self) -> (BigInt, BigInt) {
        let mut topped = vec![BigInt::one(); self.vertex_count()];
        // preorder: children come after parents
        for v in (0..self.vertex_count()).rev() {
            for &c in &self.vertices[v].children {
                topped[v] = &topped[v] * (BigInt::one() + &topped[c]);
            }
        }
        let rooted = topped[0].clone();
        (topped.into_iter().sum(), rooted)
    }

    fn alpha_sum(&self, terms: impl Iterator<Item = usize>, alpha: Exponent) -> StatValue {
        match alpha {
            Exponent::Integer(a) => {
                StatValue::from_rational(terms.map(|b| exact_power(b, a)).sum())
            }
            Exponent::Real(a) => StatValue::Float(terms.map(|b| (b as f64).powf(a)).sum()),
        }
    }

    /// Value of `name` evaluated from its definition.
    pub fn stat(&self, name: StatName, params: &StatParams) -> Result<StatValue> {
        use StatName::*;
        let int = |v: usize| Ok(StatValue::Integer(big(v)));
        let n = self.vertex_count();
        match name {
            V => int(n),
            E => int(self.edges.len()),
            H => int(self.vertices.iter().map(|v| v.level).max().unwrap()),
            Lll => int(self.leaves().map(|v| v.level).min().unwrap_or(0)),
            Lv => int(self.leaves().count()),
            Md => int(self.vertices.iter().map(|v| v.degree).max().unwrap()),
            Dm => int(self.pair_distances().max().unwrap_or(0)),
            Pl => int(self.vertices.iter().map(|v| v.level).sum()),
            Epl => int(self.leaves().map(|v| v.level).sum()),
            Bv => int(self.vertices.iter().filter(|v| v.degree >= 3).count()),
            Pv => int(self.pendant().len()),
            Sp => int(self
                .vertices
                .iter()
                .map(|v| v.children.len() * v.children.len().saturating_sub(1) / 2)
                .sum()),
            Vl => int(n + self.vertices.iter().map(|v| v.level).sum::<usize>()),
            Rst => Ok(StatValue::Integer(self.subtree_counts().1)),
            St => Ok(StatValue::Integer(self.subtree_counts().0)),
            W => int(self.pair_distances().sum()),
            Tw => {
                let pendant = self.pendant();
                let mut sum = 0;
                for (i, &a) in pendant.iter().enumerate() {
                    for &b in &pendant[i + 1..] {
                        sum += self.distances[a][b];
                    }
                }
                int(sum)
            }
            Z1 => int(self.vertices.iter().map(|v| v.degree * v.degree).sum()),
            Z2 => int(self.edge_degrees().sum()),
            Nk => Ok(StatValue::Integer(self.degree_product(|_| 1))),
            Mz1 => Ok(StatValue::Integer(self.degree_product(|_| 2))),
            // vertex form ∏ deg^deg; an isolated root contributes 0, as it
            // does for NK and MZ1
            Mz2 => Ok(StatValue::Integer(if n == 1 {
                BigInt::zero()
            } else {
                self.degree_product(|d| d)
            })),
            AAlpha => Ok(self.alpha_sum(
                self.level1_degrees(),
                params.alpha.unwrap_or(default_alpha(name)),
            )),
            RAlpha => Ok(self.alpha_sum(
                self.edge_degrees(),
                params.alpha.unwrap_or(default_alpha(name)),
            )),
            Pwp => Ok(StatValue::Polynomial(Self::generating_poly(
                self.vertices.iter().skip(1).map(|v| v.level),
            ))),
            Wp => Ok(StatValue::Polynomial(Self::generating_poly(
                self.pair_distances(),
            ))),
            Dsp => Ok(StatValue::Polynomial(Self::generating_poly(
                self.vertices.iter().map(|v| v.degree),
            ))),
            Edp => Ok(StatValue::Polynomial(Self::generating_poly(
                self.vertices.iter().map(|v| v.exit_distance),
            ))),
            HyperW => int(self.pair_distances().map(|d| d * d + d).sum::<usize>() / 2),
            MultW => Ok(StatValue::Integer(self.pair_distances().map(big).product())),
            Polarity => {
                let k = params.k.unwrap_or(3) as usize;
                int(self.pair_distances().filter(|&d| d == k).count())
            }
            SumEven => int(self.pair_distances().filter(|d| d % 2 == 0).sum()),
            SumOdd => int(self.pair_distances().filter(|d| d % 2 == 1).sum()),
            ExitSum => int(self.vertices.iter().map(|v| v.exit_distance).sum()),
            ExitMax => int(self.max_exit()),
            ExitMaxCount => {
                let max = self.max_exit();
                int(self
                    .vertices
                    .iter()
                    .filter(|v| v.exit_distance == max)
                    .count())
            }
            LevelCount => match params.k {
                Some(k) if k >= 1 => int(self
                    .vertices
                    .iter()
                    .filter(|v| v.level == k as usize)
                    .count()),
                _ => Err(Error::InvalidInput(
                    "LEVEL_COUNT needs a level k >= 1".into(),
                )),
            },
        }
    }

    fn max_exit(&self) -> usize {
        self.vertices.iter().map(|v| v.exit_distance).max().unwrap()
    }
}

/// [`TreeAnalysis::stat`] on a freshly analyzed tree.
pub fn oracle_stat(name: StatName, tree: &RootedTree, params: &StatParams) -> Result<StatValue> {
    analyze(tree)?.stat(name, params)
}

/// Every statistic, with a spread of exponents and distance/level
/// parameters, as compared by the self-test.
pub fn standard_checks() -> Vec<(StatName, StatParams)> {
    let mut checks = Vec::new();
    for &name in StatName::ALL {
        match name {
            StatName::AAlpha | StatName::RAlpha => {
                for a in -2..=3 {
                    checks.push((name, StatParams::alpha(Exponent::Integer(a))));
                }
                for a in [-0.5, 0.5, 1.5] {
                    checks.push((name, StatParams::alpha(Exponent::Real(a))));
                }
            }
            StatName::Polarity => {
                checks.push((name, StatParams::default()));
                for k in [0, 1, 2, 4, 5] {
                    checks.push((name, StatParams::k(k)));
                }
            }
            StatName::LevelCount => {
                for k in 1..=5 {
                    checks.push((name, StatParams::k(k)));
                }
            }
            _ => checks.push((name, StatParams::default())),
        }
    }
    checks
}

/// A statistic where the recursion and the oracle disagree.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub n: u64,
    pub name: StatName,
    pub params: StatParams,
    pub recursive: StatValue,
    pub oracle: StatValue,
}

/// Compares every check in [`standard_checks`] for `τ(n)`.
pub fn compare_all(engine: &mut StatsEngine, n: u64, tree: &RootedTree) -> Result<Vec<Mismatch>> {
    let analysis = analyze(tree)?;
    let mut mismatches = Vec::new();
    for (name, params) in standard_checks() {
        let recursive = engine.stat(name, n, &params)?;
        let oracle = analysis.stat(name, &params)?;
        if !recursive.agrees_with(&oracle, FLOAT_TOLERANCE) {
            mismatches.push(Mismatch {
                n,
                name,
                params,
                recursive,
                oracle,
            });
        }
    }
    Ok(mismatches)
}

/// Whether assembling `τ(n)` from the split `n = r * (n / r)` reproduces the
/// canonical (smallest prime factor) computation for every statistic.
pub fn check_split(engine: &mut StatsEngine, n: u64, r: u64) -> Result<bool> {
    if r < 2 || r >= n || !n.is_multiple_of(r) {
        return Err(Error::InvalidInput(format!(
            "{r} is not a nontrivial divisor of {n}"
        )));
    }
    let s = n / r;
    if engine.profile_via_split(r, s)? != *engine.profile(n)? {
        return Ok(false);
    }
    for alpha in [
        Exponent::Integer(-1),
        Exponent::Integer(1),
        Exponent::Integer(2),
        Exponent::Real(-0.5),
    ] {
        let (a, randic) = engine.alpha_via_split(r, s, alpha)?;
        if !a.agrees_with(&engine.a_alpha(n, alpha)?, FLOAT_TOLERANCE)
            || !randic.agrees_with(&engine.randic(n, alpha)?, FLOAT_TOLERANCE)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`check_split`] with `r` drawn uniformly from the nontrivial divisors of
/// the composite `n`.
pub fn random_split_check(engine: &mut StatsEngine, n: u64, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_split_check_with(engine, n, &mut rng)
}

pub fn random_split_check_with(
    engine: &mut StatsEngine,
    n: u64,
    rng: &mut impl rand::Rng,
) -> Result<bool> {
    let divisors = engine.primes().factorize(n)?.proper_divisors();
    let &r = divisors
        .choose(rng)
        .ok_or_else(|| Error::InvalidInput(format!("{n} is not composite")))?;
    check_split(engine, n, r)
}
