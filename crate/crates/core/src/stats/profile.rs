//! Every parameter-free statistic of one tree, built from its branches.
//!
//! A Matula number `n > 1` is either a prime `p_t`, whose tree is `τ(t)` hung
//! below a new root ([`TreeProfile::graft`]), or a product `r * s`, whose tree
//! is `τ(r)` and `τ(s)` glued at their roots ([`TreeProfile::join`]). Each
//! statistic of the result is a closed formula in the statistics of the
//! branches. Several formulas need auxiliary statistics of the branches (the
//! root degree `Ω`, the level-1 degree sum, the lowest leaf level), which is
//! why the whole record is carried together.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::stats::name::{StatKind, StatName};
use crate::stats::value::StatValue;

/// Scalar statistics of trees with a 64-bit Matula number have at most a few
/// dozen vertices and at most `2^E` root subtrees, so `i128` never overflows.
pub type Count = i128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeProfile {
    /// Degree of the root, equal to `Ω(n)`.
    pub omega: u32,
    pub vertices: Count,
    pub edges: Count,
    pub height: Count,
    /// 0 for the 1-vertex tree, which has no leaves.
    pub lowest_leaf_level: Count,
    pub leaves: Count,
    pub max_degree: Count,
    pub diameter: Count,
    pub path_length: Count,
    pub external_path_length: Count,
    pub branching_vertices: Count,
    pub pendant_vertices: Count,
    pub sibling_pairs: Count,
    pub visitation_length: Count,
    pub root_subtrees: Count,
    pub subtrees: Count,
    pub wiener: Count,
    pub terminal_wiener: Count,
    pub zagreb1: Count,
    /// Sum of the degrees of the level-1 vertices.
    pub level1_degree_sum: Count,
    pub zagreb2: Count,
    pub narumi_katayama: BigInt,
    pub mult_zagreb1: BigInt,
    pub mult_zagreb2: BigInt,
    pub partial_wiener_poly: IntPolynomial,
    pub wiener_poly: IntPolynomial,
    pub degree_seq_poly: IntPolynomial,
    pub exit_distance_poly: IntPolynomial,
}

fn x_pow(k: impl ToPrimitive) -> IntPolynomial {
    IntPolynomial::x_pow(k.to_usize().expect("exponent fits in usize"))
}

fn ratio(n: u32, d: u32) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn pow_self(k: u32) -> BigInt {
    Pow::pow(BigInt::from(k), k)
}

fn integral(q: BigRational, what: &str) -> Result<BigInt> {
    if q.denom().is_one() {
        Ok(q.to_integer())
    } else {
        Err(Error::InternalIntegrity(format!(
            "{what} recursion produced the non-integer {q}"
        )))
    }
}

impl TreeProfile {
    /// `τ(1)`.
    pub fn single_vertex() -> Self {
        TreeProfile {
            omega: 0,
            vertices: 1,
            edges: 0,
            height: 0,
            lowest_leaf_level: 0,
            leaves: 0,
            max_degree: 0,
            diameter: 0,
            path_length: 0,
            external_path_length: 0,
            branching_vertices: 0,
            pendant_vertices: 0,
            sibling_pairs: 0,
            visitation_length: 1,
            root_subtrees: 1,
            subtrees: 1,
            wiener: 0,
            terminal_wiener: 0,
            zagreb1: 0,
            level1_degree_sum: 0,
            zagreb2: 0,
            narumi_katayama: BigInt::zero(),
            mult_zagreb1: BigInt::zero(),
            mult_zagreb2: BigInt::zero(),
            partial_wiener_poly: IntPolynomial::zero(),
            wiener_poly: IntPolynomial::zero(),
            degree_seq_poly: IntPolynomial::one(),
            exit_distance_poly: IntPolynomial::one(),
        }
    }

    pub fn is_single_vertex(&self) -> bool {
        self.vertices == 1
    }

    /// `τ(p_t)` from `τ(t)`.
    pub fn graft(t: &TreeProfile) -> Result<Self> {
        let w = t.omega;
        let wc = Count::from(w);
        // n = 2 is a base case for the leaf-based statistics and the
        // multiplicative indices
        let n_is_2 = t.is_single_vertex();

        let leaves = if n_is_2 { 1 } else { t.leaves };
        let external_path_length = if n_is_2 {
            1
        } else {
            t.external_path_length + t.leaves
        };
        let pendant_vertices = if n_is_2 { 2 } else { 1 + t.leaves };
        let terminal_wiener = if n_is_2 {
            1
        } else if w == 1 {
            // the root of τ(t) stops being pendant, the new root becomes one
            t.terminal_wiener + t.leaves
        } else {
            t.terminal_wiener + t.external_path_length + t.leaves
        };

        let (narumi_katayama, mult_zagreb1, mult_zagreb2) = if n_is_2 {
            (BigInt::one(), BigInt::one(), BigInt::one())
        } else {
            let grow = BigRational::one() + ratio(1, w);
            let nk = BigRational::from(t.narumi_katayama.clone()) * &grow;
            let mz1 = BigRational::from(t.mult_zagreb1.clone()) * &grow * &grow;
            let mz2 = BigRational::new(t.mult_zagreb2.clone() * pow_self(w + 1), pow_self(w));
            (
                integral(nk, "Narumi-Katayama")?,
                integral(mz1, "first multiplicative Zagreb")?,
                integral(mz2, "second multiplicative Zagreb")?,
            )
        };

        let partial_wiener_poly = &x_pow(1) + &t.partial_wiener_poly.scale_by_x();
        let wiener_poly = &(&t.wiener_poly + &t.partial_wiener_poly.scale_by_x()) + &x_pow(1);
        // the root of τ(t) goes from degree w to w + 1; the new root has degree 1
        let degree_seq_poly = &(&(&t.degree_seq_poly - &x_pow(w)) + &x_pow(w + 1)) + &x_pow(1);
        let exit_distance_poly = &t.exit_distance_poly + &x_pow(1 + t.lowest_leaf_level);

        Ok(TreeProfile {
            omega: 1,
            vertices: 1 + t.vertices,
            edges: 1 + t.edges,
            height: 1 + t.height,
            lowest_leaf_level: 1 + t.lowest_leaf_level,
            leaves,
            max_degree: t.max_degree.max(1 + wc),
            diameter: t.diameter.max(1 + t.height),
            path_length: t.path_length + t.vertices,
            external_path_length,
            branching_vertices: t.branching_vertices + Count::from(w == 2),
            pendant_vertices,
            sibling_pairs: t.sibling_pairs,
            visitation_length: t.visitation_length + t.vertices + 1,
            root_subtrees: 1 + t.root_subtrees,
            subtrees: 1 + t.subtrees + t.root_subtrees,
            wiener: t.wiener + t.path_length + t.edges + 1,
            terminal_wiener,
            zagreb1: t.zagreb1 + 2 + 2 * wc,
            level1_degree_sum: 1 + wc,
            zagreb2: t.zagreb2 + t.level1_degree_sum + wc + 1,
            narumi_katayama,
            mult_zagreb1,
            mult_zagreb2,
            partial_wiener_poly,
            wiener_poly,
            degree_seq_poly,
            exit_distance_poly,
        })
    }

    /// `τ(r * s)` from `τ(r)` and `τ(s)`, both with at least one edge.
    ///
    /// The branching-vertex and terminal Wiener formulas are stated for a
    /// prime `r`; if only `s` is prime the operands are swapped. The canonical
    /// split always has `r` prime, so the fallback for two composite factors
    /// (which corrects for the root degree of each branch directly) is only
    /// reached when checking alternative splits.
    pub fn join(r: &TreeProfile, s: &TreeProfile) -> Result<Self> {
        if r.is_single_vertex() || s.is_single_vertex() {
            return Err(Error::InvalidInput(
                "both factors of a composite split must exceed 1".into(),
            ));
        }
        let (r, s) = if r.omega != 1 && s.omega == 1 {
            (s, r)
        } else {
            (r, s)
        };
        let (wr, ws) = (r.omega, s.omega);
        let w = wr + ws;
        let (wrc, wsc, wc) = (Count::from(wr), Count::from(ws), Count::from(w));

        let branching_vertices = if wr == 1 {
            r.branching_vertices + s.branching_vertices + Count::from(ws == 2)
        } else {
            r.branching_vertices + s.branching_vertices
                - Count::from(wr >= 3)
                - Count::from(ws >= 3)
                + Count::from(w >= 3)
        };

        let cross = r.external_path_length * s.leaves + s.external_path_length * r.leaves;
        let terminal_wiener = match (wr == 1, ws == 1) {
            (true, true) => {
                r.terminal_wiener - r.external_path_length + s.terminal_wiener
                    - s.external_path_length
                    + cross
            }
            (true, false) => r.terminal_wiener - r.external_path_length + s.terminal_wiener + cross,
            _ => r.terminal_wiener + s.terminal_wiener + cross,
        };

        let split = ratio(1, wr) + ratio(1, ws);
        let nk = BigRational::from(&r.narumi_katayama * &s.narumi_katayama) * &split;
        let mz1 = BigRational::from(&r.mult_zagreb1 * &s.mult_zagreb1) * &split * &split;
        let mz2 = BigRational::new(
            &r.mult_zagreb2 * &s.mult_zagreb2 * pow_self(w),
            pow_self(wr) * pow_self(ws),
        );

        let partial_wiener_poly = &r.partial_wiener_poly + &s.partial_wiener_poly;
        let wiener_poly =
            &(&r.wiener_poly + &s.wiener_poly) + &(&r.partial_wiener_poly * &s.partial_wiener_poly);
        let degree_seq_poly =
            &(&(&(&r.degree_seq_poly + &s.degree_seq_poly) - &x_pow(wr)) - &x_pow(ws)) + &x_pow(w);
        let exit_distance_poly = &(&r.exit_distance_poly + &s.exit_distance_poly)
            - &x_pow(r.lowest_leaf_level.max(s.lowest_leaf_level));

        Ok(TreeProfile {
            omega: w,
            vertices: r.vertices + s.vertices - 1,
            edges: r.edges + s.edges,
            height: r.height.max(s.height),
            lowest_leaf_level: r.lowest_leaf_level.min(s.lowest_leaf_level),
            leaves: r.leaves + s.leaves,
            max_degree: r.max_degree.max(s.max_degree).max(wc),
            diameter: r.diameter.max(s.diameter).max(r.height + s.height),
            path_length: r.path_length + s.path_length,
            external_path_length: r.external_path_length + s.external_path_length,
            branching_vertices,
            pendant_vertices: r.leaves + s.leaves,
            sibling_pairs: r.sibling_pairs + s.sibling_pairs + wrc * wsc,
            visitation_length: r.visitation_length + s.visitation_length - 1,
            root_subtrees: r.root_subtrees * s.root_subtrees,
            subtrees: r.subtrees + s.subtrees + (r.root_subtrees - 1) * (s.root_subtrees - 1) - 1,
            wiener: r.wiener + s.wiener + r.path_length * s.edges + s.path_length * r.edges,
            terminal_wiener,
            zagreb1: r.zagreb1 + s.zagreb1 - wrc * wrc - wsc * wsc + wc * wc,
            level1_degree_sum: r.level1_degree_sum + s.level1_degree_sum,
            zagreb2: r.zagreb2 + s.zagreb2 + r.level1_degree_sum * wsc + s.level1_degree_sum * wrc,
            narumi_katayama: integral(nk, "Narumi-Katayama")?,
            mult_zagreb1: integral(mz1, "first multiplicative Zagreb")?,
            mult_zagreb2: integral(mz2, "second multiplicative Zagreb")?,
            partial_wiener_poly,
            wiener_poly,
            degree_seq_poly,
            exit_distance_poly,
        })
    }

    /// Value of a scalar statistic.
    pub fn scalar(&self, name: StatName) -> Option<Count> {
        use StatName::*;
        Some(match name {
            V => self.vertices,
            E => self.edges,
            H => self.height,
            Lll => self.lowest_leaf_level,
            Lv => self.leaves,
            Md => self.max_degree,
            Dm => self.diameter,
            Pl => self.path_length,
            Epl => self.external_path_length,
            Bv => self.branching_vertices,
            Pv => self.pendant_vertices,
            Sp => self.sibling_pairs,
            Vl => self.visitation_length,
            Rst => self.root_subtrees,
            St => self.subtrees,
            W => self.wiener,
            Tw => self.terminal_wiener,
            Z1 => self.zagreb1,
            Z2 => self.zagreb2,
            _ => return None,
        })
    }

    pub fn multiplicative(&self, name: StatName) -> Option<&BigInt> {
        match name {
            StatName::Nk => Some(&self.narumi_katayama),
            StatName::Mz1 => Some(&self.mult_zagreb1),
            StatName::Mz2 => Some(&self.mult_zagreb2),
            _ => None,
        }
    }

    pub fn polynomial(&self, name: StatName) -> Option<&IntPolynomial> {
        match name {
            StatName::Pwp => Some(&self.partial_wiener_poly),
            StatName::Wp => Some(&self.wiener_poly),
            StatName::Dsp => Some(&self.degree_seq_poly),
            StatName::Edp => Some(&self.exit_distance_poly),
            _ => None,
        }
    }

    /// Statistics read off the polynomials. `k` is the distance for
    /// `POLARITY` (default 3) and the level for `LEVEL_COUNT` (required, >= 1).
    pub fn derived(&self, name: StatName, k: Option<u32>) -> Result<BigInt> {
        let wp = &self.wiener_poly;
        let edp = &self.exit_distance_poly;
        Ok(match name {
            StatName::HyperW => {
                let d1 = wp.derivative();
                let twice_d2 = d1.derivative().eval_at_one();
                let (half, odd) = twice_d2.div_rem(&BigInt::from(2));
                if !odd.is_zero() {
                    return Err(Error::InternalIntegrity(format!(
                        "hyper-Wiener: second derivative {twice_d2} is odd"
                    )));
                }
                d1.eval_at_one() + half
            }
            StatName::MultW => wp
                .coeffs()
                .iter()
                .enumerate()
                .skip(2)
                .map(|(d, count)| {
                    let count = count.to_u32().expect("pair count fits in u32");
                    Pow::pow(BigInt::from(d), count)
                })
                .product(),
            StatName::Polarity => wp.coefficient(k.unwrap_or(3) as usize),
            StatName::SumEven => wp.even_part().derivative().eval_at_one(),
            StatName::SumOdd => wp.odd_part().derivative().eval_at_one(),
            StatName::ExitSum => edp.derivative().eval_at_one(),
            StatName::ExitMax => BigInt::from(edp.degree().unwrap_or(0)),
            StatName::ExitMaxCount => edp.leading_coefficient(),
            StatName::LevelCount => match k {
                Some(k) if k >= 1 => self.partial_wiener_poly.coefficient(k as usize),
                Some(_) => {
                    return Err(Error::InvalidInput(
                        "LEVEL_COUNT counts levels k >= 1".into(),
                    ))
                }
                None => return Err(Error::InvalidInput("LEVEL_COUNT needs a level k".into())),
            },
            _ => {
                return Err(Error::InvalidInput(format!(
                    "{name} is not a derived statistic"
                )))
            }
        })
    }

    /// Any statistic except the alpha-parameterized ones.
    pub fn value(&self, name: StatName, k: Option<u32>) -> Result<StatValue> {
        match name.kind() {
            StatKind::Scalar => Ok(StatValue::Integer(self.scalar(name).unwrap().into())),
            StatKind::Multiplicative => Ok(StatValue::Integer(
                self.multiplicative(name).unwrap().clone(),
            )),
            StatKind::Polynomial => Ok(StatValue::Polynomial(
                self.polynomial(name).unwrap().clone(),
            )),
            StatKind::Derived => self.derived(name, k).map(StatValue::Integer),
            StatKind::Alpha => Err(Error::InvalidInput(format!(
                "{name} needs an exponent and is not part of the profile"
            ))),
        }
    }
}
