//! Exact arithmetic in the ring obtained by adjoining a primitive `p`-th
//! root of unity to the integers, plus the residue map onto `Z/p`.
//!
//! Throughout the crate the root is written `ρ` (rendered `r` in display
//! output). Values are stored on the free basis `1, ρ, ρ², …, ρ^{p-2}`, so
//! equality is plain coordinate equality and there is no normal-form
//! ambiguity. The remaining power is eliminated by the minimal-polynomial
//! relation
//!
//! ```text
//! ρ^{p-1} = −(1 + ρ + ρ² + … + ρ^{p-2}),
//! ```
//!
//! and `ρ^p = 1` handles everything above it. Coordinates are unbounded
//! integers: the symmetrized products and fraction-free eliminations built
//! on top of this ring overflow machine words already for moderate primes.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Largest prime accepted by [`PrimeCtx::new`].
///
/// Everything in this crate is exact and mostly exhaustive; the cap keeps
/// the documented operations at desk scale (the searches grow at least
/// quadratically, and some exponentially, in `p`).
pub const MAX_PRIME: u32 = 31;

/// Error raised when a [`PrimeCtx`] is constructed from an invalid modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PrimeCtxError {
    /// The requested modulus lies outside `3..=MAX_PRIME`.
    #[error("modulus {0} is out of range (need 3 <= p <= {MAX_PRIME})")]
    OutOfRange(u32),
    /// The requested modulus is composite.
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
}

/// The ambient odd prime `p`.
///
/// Every value type in this crate carries its context, and binary
/// operations panic when the contexts differ; mixing two primes is always a
/// programming error, never data-dependent.
///
/// `p = 3` is accepted. The arithmetic is exact for it like for every other
/// prime, but the classification helpers in [`crate::classify`] are mainly
/// meaningful from `p = 5` on; treat `p = 3` results there as smoke-level.
///
/// ```
/// use kummer_core::PrimeCtx;
/// let ctx = PrimeCtx::new(5).unwrap();
/// assert_eq!(ctx.p(), 5);
/// assert_eq!(ctx.res(-3), 2);
/// assert!(PrimeCtx::new(9).is_err());
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeCtx {
    p: u32,
}

impl PrimeCtx {
    /// Creates a context for the prime `p`, rejecting out-of-range and
    /// composite moduli.
    pub fn new(p: u32) -> Result<Self, PrimeCtxError> {
        if !(3..=MAX_PRIME).contains(&p) {
            return Err(PrimeCtxError::OutOfRange(p));
        }
        let mut d = 2;
        while d * d <= p {
            if p % d == 0 {
                return Err(PrimeCtxError::NotPrime(p));
            }
            d += 1;
        }
        Ok(PrimeCtx { p })
    }

    /// The prime modulus.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// The representative of `i mod p` in `0..p`.
    pub fn res(&self, i: i64) -> u32 {
        let p = i64::from(self.p);
        (((i % p) + p) % p) as u32
    }

    /// The multiplicative inverse of `a mod p` for `a` not divisible by `p`.
    ///
    /// # Panics
    ///
    /// Panics when `a ≡ 0 (mod p)`.
    pub fn inv(&self, a: i64) -> u32 {
        let a = self.res(a);
        assert!(a != 0, "zero has no inverse modulo {}", self.p);
        // p is tiny; a linear scan is clearer than an extended gcd.
        (1..self.p)
            .find(|&k| (a * k) % self.p == 1)
            .expect("every nonzero residue modulo a prime is invertible")
    }

    #[track_caller]
    pub(crate) fn check_same(&self, other: &PrimeCtx) {
        assert!(
            self == other,
            "context mismatch: cannot combine values for p = {} and p = {}",
            self.p,
            other.p
        );
    }
}

/// An element of the ring of integers extended by the root of unity `ρ`.
///
/// Stored as `p − 1` integer coordinates on the basis `1, ρ, …, ρ^{p-2}`.
/// The representation is canonical, so `==` decides ring equality.
///
/// Arithmetic is provided through the standard operator traits on
/// references (and on owned values); all binary operators panic when the
/// two operands carry different [`PrimeCtx`] values.
///
/// ```
/// use kummer_core::{CycInt, PrimeCtx};
/// let ctx = PrimeCtx::new(5).unwrap();
/// let r = CycInt::rho_power(ctx, 1);
/// // ρ·ρ³ = ρ⁴ = −1 − ρ − ρ² − ρ³
/// assert_eq!(&r * &CycInt::rho_power(ctx, 3), CycInt::rho_power(ctx, 4));
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    ctx: PrimeCtx,
    coords: Vec<BigInt>,
}

impl CycInt {
    /// The additive identity.
    pub fn zero(ctx: PrimeCtx) -> Self {
        CycInt {
            ctx,
            coords: vec![BigInt::zero(); (ctx.p - 1) as usize],
        }
    }

    /// The multiplicative identity.
    pub fn one(ctx: PrimeCtx) -> Self {
        Self::from_int(ctx, 1)
    }

    /// The ordinary integer `n` embedded into the ring.
    pub fn from_int(ctx: PrimeCtx, n: i64) -> Self {
        let mut v = Self::zero(ctx);
        v.coords[0] = BigInt::from(n);
        v
    }

    /// Builds a value from explicit coordinates on `1, ρ, …, ρ^{p-2}`.
    ///
    /// # Panics
    ///
    /// Panics when `coords.len() != p − 1`.
    pub fn from_coords(ctx: PrimeCtx, coords: Vec<BigInt>) -> Self {
        assert_eq!(
            coords.len(),
            (ctx.p - 1) as usize,
            "need exactly p − 1 coordinates"
        );
        CycInt { ctx, coords }
    }

    /// `ρ^e` for an arbitrary (possibly negative) exponent, reduced to the
    /// canonical basis.
    ///
    /// ```
    /// use kummer_core::{CycInt, PrimeCtx};
    /// let ctx = PrimeCtx::new(5).unwrap();
    /// assert_eq!(CycInt::rho_power(ctx, 7), CycInt::rho_power(ctx, 2));
    /// ```
    pub fn rho_power(ctx: PrimeCtx, e: i64) -> Self {
        let r = ctx.res(e) as usize;
        let mut v = Self::zero(ctx);
        if r < v.coords.len() {
            v.coords[r] = BigInt::from(1);
        } else {
            // ρ^{p-1} = −(1 + ρ + … + ρ^{p-2})
            for c in &mut v.coords {
                *c = BigInt::from(-1);
            }
        }
        v
    }

    /// The context this value lives in.
    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }

    /// The coordinates on the basis `1, ρ, …, ρ^{p-2}`.
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The image in `Z/p` under the ring map sending `ρ ↦ 1`; returned as a
    /// representative in `0..p`.
    ///
    /// This map is well defined because the minimal-polynomial relation
    /// maps to `p ≡ 0`, and it is multiplicative and additive.
    ///
    /// ```
    /// use kummer_core::{CycInt, PrimeCtx};
    /// let ctx = PrimeCtx::new(5).unwrap();
    /// let v = &CycInt::rho_power(ctx, 1) - &CycInt::one(ctx); // ρ − 1
    /// assert_eq!(v.residue(), 0);
    /// ```
    pub fn residue(&self) -> u32 {
        let sum: BigInt = self.coords.iter().sum();
        let p = BigInt::from(self.ctx.p);
        let mut r = sum % &p;
        if r.is_negative() {
            r += &p;
        }
        u32::try_from(r).expect("residue fits in u32 after reduction")
    }

    /// Applies the ring automorphism `σ_k : ρ ↦ ρ^k` for `1 ≤ k ≤ p − 1`.
    ///
    /// # Panics
    ///
    /// Panics when `k` is not in `1..p`.
    pub fn galois_conjugate(&self, k: u32) -> Self {
        assert!(
            k >= 1 && k < self.ctx.p,
            "conjugation exponent must lie in 1..p"
        );
        let p = self.ctx.p as usize;
        let mut out = Self::zero(self.ctx);
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (j * k as usize) % p;
            if e < p - 1 {
                out.coords[e] += c;
            } else {
                for slot in &mut out.coords {
                    *slot -= c;
                }
            }
        }
        out
    }

    /// Multiplies every coordinate by the integer `n`.
    pub fn scale_int(&self, n: i64) -> Self {
        let n = BigInt::from(n);
        CycInt {
            ctx: self.ctx,
            coords: self.coords.iter().map(|c| c * &n).collect(),
        }
    }

    /// Exact division: returns `q` with `q·d == self` when such a ring
    /// element exists, and `None` otherwise.
    ///
    /// The quotient is found by multiplying with all nontrivial conjugates
    /// of `d`, which turns the divisor into its integer norm; the division
    /// is then coordinatewise. The ring has no zero divisors, so when the
    /// coordinatewise division is exact the result is automatically the
    /// unique quotient.
    ///
    /// # Panics
    ///
    /// Panics when `d` is zero — dividing by zero is a caller bug, not a
    /// data condition.
    pub fn exact_div(&self, d: &CycInt) -> Option<CycInt> {
        self.ctx.check_same(&d.ctx);
        assert!(!d.is_zero(), "exact division by zero");
        let mut cofactor = CycInt::one(self.ctx);
        for k in 2..self.ctx.p {
            cofactor = &cofactor * &d.galois_conjugate(k);
        }
        let norm_elt = d * &cofactor;
        assert!(
            norm_elt.coords[1..].iter().all(|c| c.is_zero()),
            "the product of all conjugates must be a rational integer"
        );
        let norm = norm_elt.coords.into_iter().next().expect("p >= 3");
        assert!(!norm.is_zero(), "a nonzero element has a nonzero norm");
        let scaled = self * &cofactor;
        let mut coords = Vec::with_capacity(scaled.coords.len());
        for c in &scaled.coords {
            if !(c % &norm).is_zero() {
                return None;
            }
            coords.push(c / &norm);
        }
        Some(CycInt {
            ctx: self.ctx,
            coords,
        })
    }
}

fn add_impl(a: &CycInt, b: &CycInt) -> CycInt {
    a.ctx.check_same(&b.ctx);
    CycInt {
        ctx: a.ctx,
        coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
    }
}

fn sub_impl(a: &CycInt, b: &CycInt) -> CycInt {
    a.ctx.check_same(&b.ctx);
    CycInt {
        ctx: a.ctx,
        coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect(),
    }
}

fn mul_impl(a: &CycInt, b: &CycInt) -> CycInt {
    a.ctx.check_same(&b.ctx);
    let n = a.coords.len(); // p − 1
    let mut conv = vec![BigInt::zero(); 2 * n - 1];
    for (i, x) in a.coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coords.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            conv[i + j] += x * y;
        }
    }
    let mut out = vec![BigInt::zero(); n];
    for (e, c) in conv.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if e < n {
            out[e] += c;
        } else if e == n {
            // ρ^{p-1}: subtract from every coordinate.
            for slot in &mut out {
                *slot -= &c;
            }
        } else {
            // ρ^e = ρ^{e-p} for e ≥ p.
            out[e - (n + 1)] += c;
        }
    }
    CycInt {
        ctx: a.ctx,
        coords: out,
    }
}

fn neg_impl(a: &CycInt) -> CycInt {
    CycInt {
        ctx: a.ctx,
        coords: a.coords.iter().map(|c| -c).collect(),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&CycInt> for &CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                $impl_fn(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        neg_impl(self)
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        neg_impl(&self)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if wrote {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            let coeff_is_one = mag == BigInt::from(1);
            match (j, coeff_is_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "r")?,
                (1, false) => write!(f, "{mag}*r")?,
                (_, true) => write!(f, "r^{j}")?,
                (_, false) => write!(f, "{mag}*r^{j}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt(p={}, {})", self.ctx.p, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx5() -> PrimeCtx {
        PrimeCtx::new(5).unwrap()
    }

    fn all_primes() -> Vec<u32> {
        (3..=MAX_PRIME)
            .filter(|&p| PrimeCtx::new(p).is_ok())
            .collect()
    }

    #[test]
    fn context_accepts_exactly_the_primes_in_range() {
        let good: Vec<u32> = all_primes();
        assert_eq!(good, vec![3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
        assert_eq!(PrimeCtx::new(2), Err(PrimeCtxError::OutOfRange(2)));
        assert_eq!(PrimeCtx::new(33), Err(PrimeCtxError::OutOfRange(33)));
        assert_eq!(PrimeCtx::new(9), Err(PrimeCtxError::NotPrime(9)));
        assert_eq!(PrimeCtx::new(15), Err(PrimeCtxError::NotPrime(15)));
    }

    #[test]
    fn residue_representatives() {
        let ctx = ctx5();
        assert_eq!(ctx.res(7), 2);
        assert_eq!(ctx.res(-1), 4);
        assert_eq!(ctx.res(0), 0);
        assert_eq!(ctx.res(-10), 0);
    }

    #[test]
    fn modular_inverse() {
        let ctx = PrimeCtx::new(11).unwrap();
        for a in 1..11 {
            assert_eq!((a * ctx.inv(a as i64)) % 11, 1);
        }
    }

    #[test]
    fn rho_product_folds_into_the_canonical_basis() {
        let ctx = ctx5();
        let got = &CycInt::rho_power(ctx, 1) * &CycInt::rho_power(ctx, 3);
        let expected = CycInt::from_coords(
            ctx,
            vec![(-1).into(), (-1).into(), (-1).into(), (-1).into()],
        );
        assert_eq!(got, expected);
        assert_eq!(got, CycInt::rho_power(ctx, 4));
    }

    #[test]
    fn product_of_two_binomials() {
        let ctx = ctx5();
        let a = &CycInt::one(ctx) + &CycInt::rho_power(ctx, 1);
        let b = &CycInt::one(ctx) + &CycInt::rho_power(ctx, 2);
        let expected = CycInt::from_coords(ctx, vec![1.into(), 1.into(), 1.into(), 1.into()]);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn rho_power_wraps_and_reduces() {
        let ctx = ctx5();
        assert_eq!(CycInt::rho_power(ctx, 7), CycInt::rho_power(ctx, 2));
        let top = CycInt::from_coords(
            ctx,
            vec![(-1).into(), (-1).into(), (-1).into(), (-1).into()],
        );
        assert_eq!(CycInt::rho_power(ctx, 4), top);
        assert_eq!(CycInt::rho_power(ctx, -1), CycInt::rho_power(ctx, 4));
    }

    #[test]
    fn residue_examples() {
        let ctx = ctx5();
        let v = &(&CycInt::one(ctx) + &CycInt::rho_power(ctx, 1)) + &CycInt::rho_power(ctx, 2);
        assert_eq!(v.residue(), 3);
        let w = &CycInt::rho_power(ctx, 1) - &CycInt::one(ctx);
        assert_eq!(w.residue(), 0);
        assert_eq!(CycInt::rho_power(ctx, 4).residue(), 1);
    }

    #[test]
    fn all_powers_of_rho_sum_to_zero() {
        for p in all_primes() {
            let ctx = PrimeCtx::new(p).unwrap();
            let mut sum = CycInt::zero(ctx);
            for e in 0..p {
                sum = &sum + &CycInt::rho_power(ctx, e as i64);
            }
            assert!(sum.is_zero(), "sum of all ρ-powers must vanish for p={p}");
        }
    }

    #[test]
    fn residue_is_a_ring_map() {
        let ctx = PrimeCtx::new(7).unwrap();
        let a = CycInt::from_coords(
            ctx,
            vec![
                3.into(),
                (-2).into(),
                0.into(),
                9.into(),
                1.into(),
                (-5).into(),
            ],
        );
        let b = CycInt::from_coords(
            ctx,
            vec![
                1.into(),
                4.into(),
                (-1).into(),
                0.into(),
                2.into(),
                8.into(),
            ],
        );
        let p = ctx.p();
        assert_eq!((&a + &b).residue(), (a.residue() + b.residue()) % p);
        assert_eq!((&a * &b).residue(), (a.residue() * b.residue()) % p);
    }

    #[test]
    fn torsion_free() {
        let ctx = ctx5();
        let a = CycInt::from_coords(ctx, vec![2.into(), 0.into(), (-1).into(), 5.into()]);
        assert!(!a.scale_int(3).is_zero());
        assert!(CycInt::zero(ctx).scale_int(17).is_zero());
    }

    #[test]
    fn galois_conjugation_is_multiplicative() {
        let ctx = ctx5();
        let a = &CycInt::rho_power(ctx, 1) + &CycInt::from_int(ctx, 2);
        let b = &CycInt::rho_power(ctx, 3) - &CycInt::one(ctx);
        for k in 1..5 {
            let lhs = (&a * &b).galois_conjugate(k);
            let rhs = &a.galois_conjugate(k) * &b.galois_conjugate(k);
            assert_eq!(lhs, rhs);
        }
        assert_eq!(a.galois_conjugate(1), a);
    }

    #[test]
    fn exact_division_round_trips() {
        let ctx = ctx5();
        let a = CycInt::from_coords(ctx, vec![3.into(), (-1).into(), 4.into(), 1.into()]);
        let d = &CycInt::rho_power(ctx, 2) + &CycInt::from_int(ctx, 2);
        let prod = &a * &d;
        assert_eq!(prod.exact_div(&d), Some(a.clone()));
        // 1 is not divisible by 1 + ρ + ρ² + ρ³ + ... shifted example: ρ − 1
        // divides p but not 1.
        let rho_minus_one = &CycInt::rho_power(ctx, 1) - &CycInt::one(ctx);
        assert_eq!(CycInt::one(ctx).exact_div(&rho_minus_one), None);
        assert!(CycInt::from_int(ctx, 5).exact_div(&rho_minus_one).is_some());
    }
}
