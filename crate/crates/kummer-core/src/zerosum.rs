//! Congruence-based criteria for monomial Kummer spaces.
//!
//! A monomial `x^a y^b` is described, up to central scalars, by its exponent
//! vector `(a, b) ∈ (Z/p)²`. A set of such vectors spans a Kummer space
//! exactly when no nonempty multiset of them with total size below `p` sums
//! to zero — see [`min_zero_sum`] and [`is_kummer_monomial`]. The remaining
//! operations are small residue scans that witness the failure of that
//! condition for specific families of three- and four-dimensional spaces.
//!
//! Everything here is plain modular arithmetic; the bridge to the symbolic
//! trace criterion lives in the test suites, which check the two agree.

use crate::cyclotomic::PrimeCtx;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors raised by the zero-sum criteria.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZeroSumError {
    /// An input vector was `(0,0)`; central monomials are excluded. The
    /// index is 0-based into the input sequence.
    #[error("vector at index {index} is zero; central monomials are not allowed")]
    ZeroVector { index: usize },
    /// Two input vectors were equal (0-based indices).
    #[error("vectors at indices {first} and {second} are equal")]
    DuplicateVector { first: usize, second: usize },
    /// An input vector was built for a different prime (0-based index).
    #[error("vector at index {index} belongs to a different prime context")]
    ContextMismatch { index: usize },
    /// A named scalar parameter was zero mod p where a nonzero value is
    /// required.
    #[error("parameter `{name}` must be nonzero modulo p")]
    ZeroResidue { name: &'static str },
    /// A hand-built witness failed validation.
    #[error("invalid zero-sum witness: {reason}")]
    InvalidWitness { reason: &'static str },
}

/// An exponent vector `(a, b) ∈ (Z/p)²`, standing for the monomial
/// `x^a y^b` up to central scalars.
///
/// Ordering is lexicographic on `(a, b)`, which fixes the canonical order
/// of vector sets and the tie-breaking of witnesses.
///
/// ```
/// use kummer_core::{PrimeCtx, Vec2p};
/// let ctx = PrimeCtx::new(5).unwrap();
/// let v = Vec2p::new(ctx, 7, -1);
/// assert_eq!((v.a(), v.b()), (2, 4));
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vec2p {
    a: u32,
    b: u32,
    ctx: PrimeCtx,
}

impl Vec2p {
    /// Builds a vector, reducing both entries mod p.
    pub fn new(ctx: PrimeCtx, a: i64, b: i64) -> Self {
        Vec2p {
            a: ctx.res(a),
            b: ctx.res(b),
            ctx,
        }
    }

    /// The x-exponent in `[0, p)`.
    pub fn a(&self) -> u32 {
        self.a
    }

    /// The y-exponent in `[0, p)`.
    pub fn b(&self) -> u32 {
        self.b
    }

    /// The context this vector lives in.
    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }

    /// Whether this is the zero vector.
    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Componentwise sum mod p.
    pub fn add(&self, other: &Vec2p) -> Vec2p {
        self.ctx.check_same(&other.ctx);
        Vec2p::new(
            self.ctx,
            i64::from(self.a) + i64::from(other.a),
            i64::from(self.b) + i64::from(other.b),
        )
    }

    /// Componentwise difference mod p.
    pub fn sub(&self, other: &Vec2p) -> Vec2p {
        self.ctx.check_same(&other.ctx);
        Vec2p::new(
            self.ctx,
            i64::from(self.a) - i64::from(other.a),
            i64::from(self.b) - i64::from(other.b),
        )
    }

    /// Scalar multiple mod p.
    pub fn scale(&self, k: i64) -> Vec2p {
        let k = i64::from(self.ctx.res(k));
        Vec2p::new(self.ctx, i64::from(self.a) * k, i64::from(self.b) * k)
    }

    /// The cross product `a·b' − b·a' mod p`; zero iff the vectors lie on
    /// one line through the origin (for nonzero vectors).
    pub fn cross(&self, other: &Vec2p) -> u32 {
        self.ctx.check_same(&other.ctx);
        self.ctx
            .res(i64::from(self.a) * i64::from(other.b) - i64::from(self.b) * i64::from(other.a))
    }

    /// Whether two nonzero vectors span the same line through the origin.
    pub fn collinear(&self, other: &Vec2p) -> bool {
        self.cross(other) == 0
    }
}

impl fmt::Display for Vec2p {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A nonempty multiset of vectors with total size below `p` whose weighted
/// sum vanishes in `(Z/p)²` — the obstruction to a monomial space being
/// Kummer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroSumWitness {
    multiplicities: BTreeMap<Vec2p, u32>,
    weight: u32,
}

impl ZeroSumWitness {
    /// Validates and builds a witness: all multiplicities positive, total
    /// weight in `(0, p)`, weighted sum zero, one context throughout.
    pub fn new(ctx: PrimeCtx, multiplicities: BTreeMap<Vec2p, u32>) -> Result<Self, ZeroSumError> {
        let mut weight: u32 = 0;
        let mut sum_a: i64 = 0;
        let mut sum_b: i64 = 0;
        for (v, &m) in &multiplicities {
            if v.ctx() != ctx {
                return Err(ZeroSumError::InvalidWitness {
                    reason: "vector from a different prime context",
                });
            }
            if m == 0 {
                return Err(ZeroSumError::InvalidWitness {
                    reason: "zero multiplicity stored",
                });
            }
            weight += m;
            sum_a += i64::from(v.a()) * i64::from(m);
            sum_b += i64::from(v.b()) * i64::from(m);
        }
        if weight == 0 {
            return Err(ZeroSumError::InvalidWitness {
                reason: "empty multiset",
            });
        }
        if weight >= ctx.p() {
            return Err(ZeroSumError::InvalidWitness {
                reason: "weight must be below p",
            });
        }
        if ctx.res(sum_a) != 0 || ctx.res(sum_b) != 0 {
            return Err(ZeroSumError::InvalidWitness {
                reason: "weighted sum does not vanish",
            });
        }
        Ok(ZeroSumWitness {
            multiplicities,
            weight,
        })
    }

    /// The multiset, as vector → positive multiplicity.
    pub fn multiplicities(&self) -> &BTreeMap<Vec2p, u32> {
        &self.multiplicities
    }

    /// Total number of copies, in `(0, p)`.
    pub fn weight(&self) -> u32 {
        self.weight
    }
}

impl fmt::Display for ZeroSumWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weight {}:", self.weight)?;
        let mut first = true;
        for (v, m) in &self.multiplicities {
            if first {
                write!(f, " {m}x{v}")?;
                first = false;
            } else {
                write!(f, " + {m}x{v}")?;
            }
        }
        Ok(())
    }
}

/// Verdict of the zero-sum Kummer check for a set of monomial vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialVerdict {
    /// No obstruction: the monomial span is a Kummer space.
    Kummer,
    /// The minimal obstruction found.
    NotKummer { witness: ZeroSumWitness },
}

impl MonomialVerdict {
    /// Whether the verdict is Kummer.
    pub fn is_kummer(&self) -> bool {
        matches!(self, MonomialVerdict::Kummer)
    }

    /// The witness, when the verdict is not Kummer.
    pub fn witness(&self) -> Option<&ZeroSumWitness> {
        match self {
            MonomialVerdict::Kummer => None,
            MonomialVerdict::NotKummer { witness } => Some(witness),
        }
    }
}

fn validate_vectors(ctx: PrimeCtx, vectors: &[Vec2p]) -> Result<(), ZeroSumError> {
    for (index, v) in vectors.iter().enumerate() {
        if v.ctx() != ctx {
            return Err(ZeroSumError::ContextMismatch { index });
        }
        if v.is_zero() {
            return Err(ZeroSumError::ZeroVector { index });
        }
    }
    for i in 0..vectors.len() {
        for j in (i + 1)..vectors.len() {
            if vectors[i] == vectors[j] {
                return Err(ZeroSumError::DuplicateVector {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(())
}

/// Finds a minimal-weight nonempty multiset of the given vectors, with total
/// size below `p`, summing to `(0,0)` — or `None` when no such multiset
/// exists.
///
/// The search is a layered breadth-first sweep over the `p²` partial sums:
/// layer `w` holds every sum reachable with exactly `w` copies, and for each
/// sum the lexicographically least multiplicity vector (over the input
/// vectors in sorted order) is kept. The first layer that reaches `(0,0)`
/// yields the witness, so the result is minimal in weight and, among
/// minimal-weight witnesses, lexicographically least — deterministic
/// regardless of input order or thread count.
///
/// ```
/// use kummer_core::{min_zero_sum, PrimeCtx, Vec2p};
/// let ctx = PrimeCtx::new(5).unwrap();
/// let vs = [Vec2p::new(ctx, 2, 3), Vec2p::new(ctx, 3, 2)];
/// let w = min_zero_sum(ctx, &vs).unwrap().unwrap();
/// assert_eq!(w.weight(), 2);
/// ```
pub fn min_zero_sum(
    ctx: PrimeCtx,
    vectors: &[Vec2p],
) -> Result<Option<ZeroSumWitness>, ZeroSumError> {
    validate_vectors(ctx, vectors)?;
    let mut sorted: Vec<Vec2p> = vectors.to_vec();
    sorted.sort();
    let p = ctx.p() as usize;
    let n = sorted.len();
    let states = p * p;
    let step = |s: usize, v: &Vec2p| -> usize {
        let a = (s / p + v.a() as usize) % p;
        let b = (s % p + v.b() as usize) % p;
        a * p + b
    };
    // layer[s] = lexicographically least multiplicity vector reaching sum s
    // with exactly the current number of copies.
    let mut layer: Vec<Option<Vec<u32>>> = vec![None; states];
    layer[0] = Some(vec![0; n]);
    for weight in 1..ctx.p() {
        let mut next: Vec<Option<Vec<u32>>> = vec![None; states];
        for (s, entry) in layer.iter().enumerate() {
            let Some(mults) = entry else { continue };
            for (j, v) in sorted.iter().enumerate() {
                let t = step(s, v);
                let mut cand = mults.clone();
                cand[j] += 1;
                match &next[t] {
                    Some(best) if *best <= cand => {}
                    _ => next[t] = Some(cand),
                }
            }
        }
        if let Some(mults) = &next[0] {
            let multiplicities: BTreeMap<Vec2p, u32> = sorted
                .iter()
                .zip(mults)
                .filter(|(_, &m)| m > 0)
                .map(|(v, &m)| (*v, m))
                .collect();
            let witness = ZeroSumWitness::new(ctx, multiplicities)
                .expect("the search only produces valid witnesses");
            debug_assert_eq!(witness.weight(), weight);
            return Ok(Some(witness));
        }
        layer = next;
    }
    Ok(None)
}

/// Decides whether the monomial span of the given exponent vectors is a
/// Kummer space: it is exactly when [`min_zero_sum`] finds no obstruction.
///
/// Every symmetric product of the monomials with total size `w < p` is a
/// single monomial with a coefficient whose residue is the (nonzero)
/// multinomial number of arrangements; its trace vanishes precisely when
/// the exponent sum is not `(0,0)`. So the trace criterion for monomial
/// spans reduces to the absence of short zero-sum multisets.
///
/// Collinear vectors are accepted here (a collinear pair simply produces a
/// short witness); stricter set validation lives in
/// [`crate::classify::MonomialSpace`].
pub fn is_kummer_monomial(
    ctx: PrimeCtx,
    vectors: &[Vec2p],
) -> Result<MonomialVerdict, ZeroSumError> {
    Ok(match min_zero_sum(ctx, vectors)? {
        None => MonomialVerdict::Kummer,
        Some(witness) => MonomialVerdict::NotKummer { witness },
    })
}

/// Residue witness for the three-dimensional space spanned by `x`, `y`,
/// and `x^a y^b`: the least `k ∈ [1, p)` with
/// `res(ka) + res(kb) + res(−k) < p`, or `None`.
///
/// Such a `k` exists exactly when the space is not Kummer (checked
/// exhaustively against [`is_kummer_monomial`] in the test suites). Both
/// `a` and `b` must be nonzero mod p; otherwise the triple contains a
/// collinear pair and the question is trivial.
pub fn dim3_residue_witness(ctx: PrimeCtx, a: i64, b: i64) -> Result<Option<u32>, ZeroSumError> {
    let a = ctx.res(a);
    let b = ctx.res(b);
    if a == 0 {
        return Err(ZeroSumError::ZeroResidue { name: "a" });
    }
    if b == 0 {
        return Err(ZeroSumError::ZeroResidue { name: "b" });
    }
    let p = ctx.p();
    for k in 1..p {
        let sum = ctx.res(i64::from(k) * i64::from(a))
            + ctx.res(i64::from(k) * i64::from(b))
            + ctx.res(-i64::from(k));
        if sum < p {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Residue witness for the four-dimensional space spanned by `x`, `y`,
/// `x^a y^b`, and `x^c y^d` with `v1 = (a,b)`, `v2 = (c,d)`: the first pair
/// `(m, ℓ)` in row-major order over `[0,p)²` with
/// `0 < res(am+cℓ) + res(bm+dℓ) + res(−m) + res(−ℓ) < p`, or `None`.
///
/// Whenever a witness is returned the four-element monomial space is not
/// Kummer (cross-checked in the test suites).
///
/// # Panics
///
/// Panics when either vector is zero — the ambient four-dimensional space
/// is only defined for genuine monomials.
pub fn dim4_witness(ctx: PrimeCtx, v1: &Vec2p, v2: &Vec2p) -> Option<(u32, u32)> {
    ctx.check_same(&v1.ctx());
    ctx.check_same(&v2.ctx());
    assert!(
        !v1.is_zero() && !v2.is_zero(),
        "dim4 witness vectors must be nonzero"
    );
    let p = ctx.p();
    let (a, b) = (i64::from(v1.a()), i64::from(v1.b()));
    let (c, d) = (i64::from(v2.a()), i64::from(v2.b()));
    for m in 0..p {
        for l in 0..p {
            let (mi, li) = (i64::from(m), i64::from(l));
            let sum =
                ctx.res(a * mi + c * li) + ctx.res(b * mi + d * li) + ctx.res(-mi) + ctx.res(-li);
            if 0 < sum && sum < p {
                return Some((m, l));
            }
        }
    }
    None
}

/// The number-theoretic index witness: the least `k ∈ [1, p)` with
/// `res(ka) + res(kb) + res(kc) < p`, or `None`.
pub fn index_witness(ctx: PrimeCtx, a: i64, b: i64, c: i64) -> Option<u32> {
    let p = ctx.p();
    for k in 1..p {
        let ki = i64::from(k);
        let sum = ctx.res(ki * a) + ctx.res(ki * b) + ctx.res(ki * c);
        if sum < p {
            return Some(k);
        }
    }
    None
}

/// The hypothesis set of the index-witness statement: all entries nonzero,
/// all pairwise sums nonzero, and the total sum nonzero, mod p.
pub fn admissible_triple(ctx: PrimeCtx, a: i64, b: i64, c: i64) -> bool {
    let entries = [a, b, c];
    if entries.iter().any(|&e| ctx.res(e) == 0) {
        return false;
    }
    if ctx.res(a + b) == 0 || ctx.res(a + c) == 0 || ctx.res(b + c) == 0 {
        return false;
    }
    ctx.res(a + b + c) != 0
}
