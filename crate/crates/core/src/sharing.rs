//! Threshold secret sharing with graphs as shares.
//!
//! The dealer picks a monic polynomial f of degree t with f(0) = s and hands
//! participant i a graph whose maximal join decomposition has exactly f(i)
//! factors. Any t participants count their factors and interpolate
//! g(x) = f(x) − x^t, a polynomial of degree < t, at 0.
//!
//! In the bit variant participant i only learns whether its graph is a
//! nontrivial join (bit 0) or not (bit 1), and f interpolates those bits.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{parse_graph, GraphError, SimplicialGraph};
use crate::join::{factor_count, JoinError};
use crate::urns::Urns;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShareError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("participant {participant} needs {value} join factors, above the limit of {limit} vertices")]
    TooLarge {
        participant: u64,
        value: BigUint,
        limit: usize,
    },
    #[error("no monic polynomial of degree {threshold} with f(0) = {secret} takes only values 0 and 1 at 1..={participants}")]
    InfeasibleBits {
        secret: u64,
        threshold: usize,
        participants: usize,
    },
    #[error("participant index 0 is reserved for the secret")]
    ZeroIndex,
    #[error("duplicate participant index {0}")]
    DuplicateIndex(u64),
    #[error("expected exactly {expected} shares, got {got}")]
    WrongShareCount { expected: usize, got: usize },
    #[error("corrupt shares: interpolated secret {0} is not a nonnegative integer")]
    Corrupt(String),
    #[error("dealt graph for participant {participant} has {found} factors instead of {expected}")]
    VerificationFailed {
        participant: u64,
        expected: usize,
        found: usize,
    },
    #[error("share file: {0}")]
    Format(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Join(#[from] JoinError),
}

/// x^t + c_{t−1} x^{t−1} + … + c_0 with nonnegative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicPolynomial {
    coefficients: Vec<u64>,
}

impl MonicPolynomial {
    /// `coefficients[j]` is c_j; the degree is their number.
    pub fn new(coefficients: Vec<u64>) -> Result<Self, ShareError> {
        if coefficients.is_empty() {
            return Err(ShareError::InvalidParams("degree must be at least 1".into()));
        }
        Ok(MonicPolynomial { coefficients })
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn evaluate(&self, x: u64) -> BigUint {
        let x = BigUint::from(x);
        let mut acc = BigUint::one();
        for &c in self.coefficients.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

impl fmt::Display for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}", self.degree())?;
        for (j, &c) in self.coefficients.iter().enumerate().rev().filter(|(_, &c)| c != 0) {
            match j {
                0 => write!(f, " + {c}")?,
                1 => write!(f, " + {c}x")?,
                _ => write!(f, " + {c}x^{j}")?,
            }
        }
        Ok(())
    }
}

/// Join-indecomposable building blocks for share graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece {
    Vertex,
    P4,
    C5,
    /// Random graph on 4 to `max_piece_size` vertices with connected complement.
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obfuscation {
    pub pieces: Vec<Piece>,
    pub max_piece_size: usize,
    /// How many pieces are drawn from `pieces`; the remaining factors are
    /// single vertices. Keeps huge shares linear in size.
    pub decorated: usize,
}

impl Default for Obfuscation {
    fn default() -> Self {
        Obfuscation {
            pieces: vec![Piece::Vertex, Piece::P4, Piece::C5, Piece::Random],
            max_piece_size: 7,
            decorated: 16,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeParams {
    pub participants: usize,
    pub threshold: usize,
    pub secret: u64,
    /// Non-constant coefficients are drawn from `0..=coefficient_bound`.
    pub coefficient_bound: u64,
    /// Largest factor count a single share may carry.
    pub max_vertices: usize,
    pub obfuscation: Obfuscation,
    pub seed: u64,
}

pub const DEFAULT_COEFFICIENT_BOUND: u64 = 1 << 16;
pub const DEFAULT_MAX_VERTICES: usize = 50_000_000;

impl SchemeParams {
    /// Threshold equal to the number of participants, default bounds, seed 0.
    pub fn new(participants: usize, secret: u64) -> Self {
        SchemeParams {
            participants,
            threshold: participants,
            secret,
            coefficient_bound: DEFAULT_COEFFICIENT_BOUND,
            max_vertices: DEFAULT_MAX_VERTICES,
            obfuscation: Obfuscation::default(),
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), ShareError> {
        let bad = |m: &str| Err(ShareError::InvalidParams(m.into()));
        if self.threshold < 1 || self.threshold > self.participants {
            return bad("threshold must satisfy 1 <= t <= n");
        }
        if self.obfuscation.pieces.is_empty() {
            return bad("piece catalog is empty");
        }
        if self.obfuscation.pieces.contains(&Piece::Random) && self.obfuscation.max_piece_size < 4 {
            return bad("random pieces need max_piece_size >= 4");
        }
        if self.max_vertices > u32::MAX as usize / 2 {
            return bad("max_vertices too large");
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Share {
    pub participant: u64,
    pub graph: SimplicialGraph,
}

impl Share {
    /// m_i, the number of maximal join factors.
    pub fn value(&self) -> Result<usize, ShareError> {
        extract_share_value(self)
    }

    /// Bit variant: 0 for a nontrivial join, 1 otherwise.
    pub fn bit(&self) -> Result<u8, ShareError> {
        extract_share_bit(self)
    }

    pub fn to_text(&self) -> String {
        format!("participant {}\n{}", self.participant, self.graph.to_text())
    }
}

impl FromStr for Share {
    type Err = ShareError;

    fn from_str(text: &str) -> Result<Self, ShareError> {
        let (head, rest) = text.split_once('\n').unwrap_or((text, ""));
        let participant = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["participant", i] => i
                .parse::<u64>()
                .map_err(|_| ShareError::Format(format!("bad participant index `{i}`")))?,
            _ => return Err(ShareError::Format("first line must be `participant <i>`".into())),
        };
        if participant == 0 {
            return Err(ShareError::ZeroIndex);
        }
        let graph = parse_graph(rest)?;
        if graph.is_empty() {
            return Err(ShareError::Join(JoinError::EmptyGraph));
        }
        Ok(Share { participant, graph })
    }
}

/// The polynomial `deal` uses for these parameters: c_0 = s, the rest uniform.
pub fn dealer_polynomial(params: &SchemeParams) -> Result<MonicPolynomial, ShareError> {
    params.validate()?;
    sample_polynomial(params, &mut params.rng())
}

fn sample_polynomial(params: &SchemeParams, rng: &mut impl Rng) -> Result<MonicPolynomial, ShareError> {
    let mut c = vec![params.secret];
    c.extend((1..params.threshold).map(|_| rng.gen_range(0..=params.coefficient_bound)));
    MonicPolynomial::new(c)
}

pub fn deal(params: &SchemeParams) -> Result<Vec<Share>, ShareError> {
    params.validate()?;
    let mut rng = params.rng();
    let f = sample_polynomial(params, &mut rng)?;
    deal_values(params, &mut rng, |i| f.evaluate(i))
}

/// Deals f(1), …, f(n) for a caller-chosen `f` of degree `params.threshold`.
pub fn deal_with_polynomial(params: &SchemeParams, f: &MonicPolynomial) -> Result<Vec<Share>, ShareError> {
    params.validate()?;
    if f.degree() != params.threshold {
        return Err(ShareError::InvalidParams("polynomial degree must equal the threshold".into()));
    }
    let mut rng = params.rng();
    deal_values(params, &mut rng, |i| f.evaluate(i))
}

fn deal_values(
    params: &SchemeParams,
    rng: &mut impl Rng,
    value: impl Fn(u64) -> BigUint,
) -> Result<Vec<Share>, ShareError> {
    let counts = (1..=params.participants as u64)
        .map(|i| {
            let v = value(i);
            v.to_usize()
                .filter(|&m| m <= params.max_vertices)
                .ok_or(ShareError::TooLarge {
                    participant: i,
                    value: v,
                    limit: params.max_vertices,
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    counts
        .into_iter()
        .zip(1u64..)
        .map(|(m, i)| {
            let graph = build_graph_with_factor_count(m, &params.obfuscation, rng);
            let found = factor_count(&graph)?;
            if found != m {
                return Err(ShareError::VerificationFailed {
                    participant: i,
                    expected: m,
                    found,
                });
            }
            Ok(Share { participant: i, graph })
        })
        .collect()
}

/// A graph with exactly `m ≥ 1` maximal join factors.
///
/// Up to `decorated` factors are drawn from the piece catalog, the rest are
/// single vertices; vertices are placed at random positions. The graph is
/// stored by its non-edges, which only occur inside pieces.
pub fn build_graph_with_factor_count(m: usize, obf: &Obfuscation, rng: &mut impl Rng) -> SimplicialGraph {
    assert!(m >= 1, "a graph needs at least one join factor");
    let k = m.min(obf.decorated);
    let pieces: Vec<(usize, Vec<(usize, usize)>)> = (0..k)
        .map(|_| piece_non_edges(*obf.pieces.choose(rng).expect("nonempty catalog"), obf.max_piece_size, rng))
        .collect();
    let decorated_vertices: usize = pieces.iter().map(|p| p.0).sum();
    let n = m - k + decorated_vertices;
    let positions = sample(rng, n, decorated_vertices).into_vec();
    let mut non_edges = Vec::new();
    let mut offset = 0;
    for (size, pairs) in &pieces {
        non_edges.extend(pairs.iter().map(|&(a, b)| (positions[offset + a], positions[offset + b])));
        offset += size;
    }
    SimplicialGraph::generated("v", n, &non_edges, true).expect("pairs are in range")
}

/// Vertex count and non-edges of one piece.
fn piece_non_edges(piece: Piece, max_size: usize, rng: &mut impl Rng) -> (usize, Vec<(usize, usize)>) {
    match piece {
        Piece::Vertex => (1, vec![]),
        // Complement of P4 is P4; complement of C5 is C5.
        Piece::P4 => (4, vec![(0, 2), (0, 3), (1, 3)]),
        Piece::C5 => (5, vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]),
        Piece::Random => loop {
            let size = rng.gen_range(4..=max_size);
            let pairs: Vec<(usize, usize)> = (0..size)
                .flat_map(|u| (u + 1..size).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let mut urns = Urns::new(size);
            let merges = pairs.iter().filter(|&&(u, v)| urns.merge(u, v)).count();
            if merges == size - 1 {
                break (size, pairs);
            }
        },
    }
}

pub fn extract_share_value(share: &Share) -> Result<usize, ShareError> {
    Ok(factor_count(&share.graph)?)
}

pub fn extract_share_bit(share: &Share) -> Result<u8, ShareError> {
    Ok(if factor_count(&share.graph)? >= 2 { 0 } else { 1 })
}

/// f(0) from exactly `t` points (i, f(i)) of a monic polynomial of degree t.
pub fn reconstruct(shares: &[(u64, u64)], t: usize) -> Result<BigUint, ShareError> {
    let points: Vec<(u64, BigInt)> = shares.iter().map(|&(i, m)| (i, BigInt::from(m))).collect();
    reconstruct_points(&points, t)
}

/// Bit variant of [`reconstruct`]: the points are (i, b_i).
pub fn reconstruct_bits(shares: &[(u64, u8)], t: usize) -> Result<BigUint, ShareError> {
    let points: Vec<(u64, BigInt)> = shares.iter().map(|&(i, b)| (i, BigInt::from(b))).collect();
    reconstruct_points(&points, t)
}

fn reconstruct_points(points: &[(u64, BigInt)], t: usize) -> Result<BigUint, ShareError> {
    if points.len() != t {
        return Err(ShareError::WrongShareCount {
            expected: t,
            got: points.len(),
        });
    }
    let mut seen = std::collections::HashSet::new();
    for &(i, _) in points {
        if i == 0 {
            return Err(ShareError::ZeroIndex);
        }
        if !seen.insert(i) {
            return Err(ShareError::DuplicateIndex(i));
        }
    }
    let shifted: Vec<(BigInt, BigInt)> = points
        .iter()
        .map(|(i, m)| {
            let x = BigInt::from(*i);
            let y = m - x.pow(t as u32);
            (x, y)
        })
        .collect();
    let s = lagrange(&shifted, &BigInt::zero());
    if !s.is_integer() || s.is_negative() {
        return Err(ShareError::Corrupt(s.to_string()));
    }
    Ok(s.to_integer().to_biguint().expect("nonnegative"))
}

/// Value at `x` of the polynomial of least degree through `points`.
fn lagrange(points: &[(BigInt, BigInt)], x: &BigInt) -> BigRational {
    let mut total = BigRational::zero();
    for (j, (xj, yj)) in points.iter().enumerate() {
        let mut num = yj.clone();
        let mut den = BigInt::one();
        for (k, (xk, _)) in points.iter().enumerate() {
            if k != j {
                num *= x - xk;
                den *= xj - xk;
            }
        }
        total += BigRational::new(num, den);
    }
    total
}

/// Bit vectors (b_1, …, b_n) for which some monic f of degree t with
/// rational coefficients has f(0) = s and f(i) = b_i, in lexicographic order.
pub fn feasible_bit_vectors(secret: u64, t: usize, n: usize) -> Result<Vec<Vec<u8>>, ShareError> {
    if t < 1 || t > n {
        return Err(ShareError::InvalidParams("threshold must satisfy 1 <= t <= n".into()));
    }
    if n > 16 {
        return Err(ShareError::InvalidParams("bit variant enumerates 2^n vectors; n <= 16".into()));
    }
    let shift = |i: u64, b: u8| BigInt::from(b) - BigInt::from(i).pow(t as u32);
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let bits: Vec<u8> = (0..n).map(|k| (mask >> (n - 1 - k) & 1) as u8).collect();
        // g = f − x^t has degree < t: fixed by (0, s) and the first t − 1 bits.
        let mut basis = vec![(BigInt::zero(), BigInt::from(secret))];
        basis.extend((1..t as u64).map(|i| (BigInt::from(i), shift(i, bits[i as usize - 1]))));
        let consistent = (t as u64..=n as u64).all(|i| {
            let y = shift(i, bits[i as usize - 1]);
            lagrange(&basis, &BigInt::from(i)) == BigRational::from_integer(y)
        });
        if consistent {
            out.push(bits);
        }
    }
    Ok(out)
}

/// Bit variant dealing. Picks a feasible bit vector at random and hands out
/// nontrivial joins for 0 and indecomposable graphs for 1.
pub fn deal_bits(params: &SchemeParams) -> Result<Vec<Share>, ShareError> {
    params.validate()?;
    let candidates = feasible_bit_vectors(params.secret, params.threshold, params.participants)?;
    let mut rng = params.rng();
    let bits = candidates.choose(&mut rng).ok_or(ShareError::InfeasibleBits {
        secret: params.secret,
        threshold: params.threshold,
        participants: params.participants,
    })?;
    bits.iter()
        .zip(1u64..)
        .map(|(&b, i)| {
            let m = if b == 0 { rng.gen_range(2..=3) } else { 1 };
            let graph = build_graph_with_factor_count(m, &params.obfuscation, &mut rng);
            let share = Share { participant: i, graph };
            let found = share.bit()?;
            if found != b {
                return Err(ShareError::VerificationFailed {
                    participant: i,
                    expected: b as usize,
                    found: found as usize,
                });
            }
            Ok(share)
        })
        .collect()
}
