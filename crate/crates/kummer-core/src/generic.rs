//! The graded side of the toolkit: polynomials in `X`, `Y` with
//! `Y·X = ρ·X·Y` and *no* exponent reduction, their lexicographic leading
//! terms, normalization of reduced bases to pairwise distinct leading
//! monomial classes, and the degeneration of a symbolic space to a
//! monomial one.
//!
//! The two representations are linked by a pair of maps: [`embed`] sends a
//! reduced element into the graded ring via `α ↦ X^p`, `β ↦ Y^p` (no phase
//! appears, because `p`-th powers commute with everything modulo `ρ^p = 1`),
//! and [`reduce_to_algebra`] folds exponent overflow back into `α`, `β`.
//! Degeneration replaces every basis element by the mod-`p` class of its
//! graded leading term; after [`normalize_basis`] those classes are
//! pairwise distinct, so the degenerate space has the same dimension.

use crate::classify::{MonomialSpace, SpaceError};
use crate::cyclotomic::{CycInt, PrimeCtx};
use crate::symbol_algebra::{
    is_kummer_space_trace, AlgElement, CenterPoly, Monomial, SpaceVerdict, SymbolError,
};
use crate::zerosum::{is_kummer_monomial, MonomialVerdict, Vec2p};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Errors from normalization and degeneration. Indices are 0-based
/// positions in the input basis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenericError {
    /// A basis element was zero.
    #[error("basis element at index {index} is zero")]
    ZeroElement { index: usize },
    /// The basis is dependent over `K`: the element at the reported index
    /// vanished after eliminating the leading classes of its predecessors.
    #[error("basis is dependent over K: element {index} vanished during normalization")]
    DependentElement { index: usize },
    /// A normalized element's leading monomial class is `(0,0)`, which
    /// cannot serve as a monomial-space direction.
    #[error("element at index {index} degenerates to the central monomial class")]
    CentralLeadingClass { index: usize },
    /// The degenerate class vectors do not form a valid monomial space
    /// (collinear leading classes).
    #[error(transparent)]
    Space(#[from] SpaceError),
    /// A symbolic check on the input basis failed validation.
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

/// A degree in the graded ring: actual exponents of `X` and `Y`, ordered
/// lexicographically (`i` first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedDegree {
    i: u64,
    j: u64,
}

impl GradedDegree {
    /// Builds a degree from explicit exponents.
    pub fn new(i: u64, j: u64) -> Self {
        GradedDegree { i, j }
    }

    /// The `X`-exponent.
    pub fn i(&self) -> u64 {
        self.i
    }

    /// The `Y`-exponent.
    pub fn j(&self) -> u64 {
        self.j
    }
}

impl fmt::Display for GradedDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// A polynomial in the graded ring `F[X, Y : Y·X = ρ·X·Y]` — exponents are
/// never reduced, so degrees grow under multiplication and the
/// lexicographic leading term is multiplicative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TElement {
    ctx: PrimeCtx,
    terms: BTreeMap<(u64, u64), CycInt>,
}

impl TElement {
    /// The zero polynomial.
    pub fn zero(ctx: PrimeCtx) -> Self {
        TElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The single term `c·X^i Y^j` (zero when `c` is zero).
    pub fn term(ctx: PrimeCtx, i: u64, j: u64, c: CycInt) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term((i, j), c);
        out
    }

    /// The context this polynomial lives in.
    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The terms keyed by `(X-exponent, Y-exponent)`; coefficients are
    /// always nonzero.
    pub fn terms(&self) -> &BTreeMap<(u64, u64), CycInt> {
        &self.terms
    }

    /// The lexicographically maximal degree and its coefficient, or `None`
    /// for the zero polynomial.
    pub fn top(&self) -> Option<(GradedDegree, &CycInt)> {
        self.terms
            .last_key_value()
            .map(|(&(i, j), c)| (GradedDegree { i, j }, c))
    }

    fn add_term(&mut self, e: (u64, u64), c: CycInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }
}

fn t_add(a: &TElement, b: &TElement) -> TElement {
    a.ctx.check_same(&b.ctx);
    let mut out = a.clone();
    for (&e, c) in &b.terms {
        out.add_term(e, c.clone());
    }
    out
}

fn t_sub(a: &TElement, b: &TElement) -> TElement {
    a.ctx.check_same(&b.ctx);
    let mut out = a.clone();
    for (&e, c) in &b.terms {
        out.add_term(e, -c);
    }
    out
}

fn t_mul(a: &TElement, b: &TElement) -> TElement {
    a.ctx.check_same(&b.ctx);
    let ctx = a.ctx;
    let p = u64::from(ctx.p());
    let mut out = TElement::zero(ctx);
    for (&(i1, j1), c1) in &a.terms {
        for (&(i2, j2), c2) in &b.terms {
            // Y^{j1}·X^{i2} = ρ^{j1·i2}·X^{i2}·Y^{j1}
            let phase = ((j1 % p) * (i2 % p) % p) as i64;
            let coeff = &(c1 * c2) * &CycInt::rho_power(ctx, phase);
            out.add_term((i1 + i2, j1 + j2), coeff);
        }
    }
    out
}

fn t_neg(a: &TElement) -> TElement {
    TElement {
        ctx: a.ctx,
        terms: a.terms.iter().map(|(&e, c)| (e, -c)).collect(),
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $impl_fn(&self, &rhs)
            }
        }
    };
}

forward_binop!(TElement, Add, add, t_add);
forward_binop!(TElement, Sub, sub, t_sub);
forward_binop!(TElement, Mul, mul, t_mul);

impl Neg for &TElement {
    type Output = TElement;
    fn neg(self) -> TElement {
        t_neg(self)
    }
}

impl Neg for TElement {
    type Output = TElement;
    fn neg(self) -> TElement {
        t_neg(&self)
    }
}

impl fmt::Display for TElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if i > 0 {
                write!(f, "*X^{i}")?;
            }
            if j > 0 {
                write!(f, "*Y^{j}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Embeds a reduced element into the graded ring: the term
/// `c·α^s β^t·x^a y^b` becomes `c·X^{a+ps} Y^{b+pt}`. No phase appears,
/// because moving `Y^{pt}` past `X^a` contributes `ρ^{p·t·a} = 1`.
pub fn embed(v: &AlgElement) -> TElement {
    let ctx = v.ctx();
    let p = u64::from(ctx.p());
    let mut out = TElement::zero(ctx);
    for (class, poly) in v.terms() {
        for (&(s, t), c) in poly.terms() {
            let i = u64::from(class.a()) + p * u64::from(s);
            let j = u64::from(class.b()) + p * u64::from(t);
            out.add_term((i, j), c.clone());
        }
    }
    out
}

/// Folds a graded polynomial back into reduced form: `X^i Y^j` maps to the
/// monomial class `(i mod p, j mod p)` with the coefficient carrying
/// `α^{⌊i/p⌋} β^{⌊j/p⌋}`. Inverse to [`embed`].
pub fn reduce_to_algebra(t: &TElement) -> AlgElement {
    let ctx = t.ctx();
    let p = u64::from(ctx.p());
    let mut out = AlgElement::zero(ctx);
    for (&(i, j), c) in t.terms() {
        let x = (i % p) as u32;
        let y = (j % p) as u32;
        let alpha = u32::try_from(i / p).expect("X-exponent carry exceeds u32");
        let beta = u32::try_from(j / p).expect("Y-exponent carry exceeds u32");
        out.add_raw_term(x, y, alpha, beta, c.clone());
    }
    out
}

/// The mod-`p` class of the graded leading term of a reduced element:
/// embed, take the lexicographically maximal degree (`α`, `β` carries
/// included), reduce it mod `p`. `None` for the zero element.
pub fn leading_class(v: &AlgElement) -> Option<Monomial> {
    let ctx = v.ctx();
    let p = u64::from(ctx.p());
    embed(v)
        .top()
        .map(|(deg, _)| Monomial::reduced(ctx, (deg.i() % p) as i64, (deg.j() % p) as i64))
}

/// Divides out the greatest common integer divisor of all cyclotomic
/// coordinates of `v`.
///
/// Scaling by a nonzero integer is invertible over `K`, so this changes
/// neither the span, the support, nor any leading class — but without it
/// the cross-scaling steps of the elimination compound their multipliers
/// and coefficient sizes grow exponentially in the basis length.
fn primitive_part(v: &AlgElement) -> AlgElement {
    let ctx = v.ctx();
    let one = BigInt::one();
    let mut content = BigInt::zero();
    'scan: for poly in v.terms().values() {
        for coeff in poly.terms().values() {
            for coord in coeff.coords() {
                content = content.gcd(coord);
                if content == one {
                    break 'scan;
                }
            }
        }
    }
    if content <= one {
        return v.clone();
    }
    let mut out = AlgElement::zero(ctx);
    for (class, poly) in v.terms() {
        for (&(s, t), coeff) in poly.terms() {
            let coords = coeff.coords().iter().map(|c| c / &content).collect();
            out.add_raw_term(class.a(), class.b(), s, t, CycInt::from_coords(ctx, coords));
        }
    }
    out
}

/// Divides every class coefficient of `v` exactly by the central
/// polynomial `d`.
///
/// Used by the fraction-free elimination, where Sylvester's determinant
/// identity guarantees that every entry produced by a cross-scaling step
/// is divisible by the previous pivot.
fn exact_div_center(v: &AlgElement, d: &CenterPoly) -> AlgElement {
    let ctx = v.ctx();
    let mut out = AlgElement::zero(ctx);
    for (class, poly) in v.terms() {
        let quotient = poly
            .exact_div(d)
            .expect("fraction-free elimination divides exactly");
        out = &out + &AlgElement::monomial(ctx, class.a(), class.b()).scale_center(&quotient);
    }
    out
}

/// Rewrites an independent basis so that the graded leading classes of its
/// elements are pairwise distinct, preserving the `K`-span and the
/// correspondence of positions.
///
/// Elements are processed in order by fraction-free Gauss–Jordan
/// elimination over the class coordinates: when an element's turn comes,
/// earlier steps have already removed every *claimed* class (a leading
/// class owned by an earlier element) from its support, so its own leading
/// class is new; that class is then cleared from every other row via the
/// cross-scaling `c_r·v_s − c_s·v_r` on leading coefficients, followed by
/// an exact division by the previous step's pivot — the standard
/// fraction-free refinement, exact by Sylvester's determinant identity,
/// which keeps every entry a minor of the input instead of letting the
/// multipliers compound exponentially. An element that vanishes at its
/// turn is exactly a `K`-dependence and is reported with its index.
///
/// Clearing a later element's class never disturbs an earlier leading
/// class: in the graded ring the subtracted multiple tops out strictly
/// below the scaled owner (lexicographic degrees add, and the cleared
/// class sits strictly below the owner's top), and central scalings never
/// change a top's mod-`p` class.
///
/// All replacement steps are invertible over `K`, so the output spans the
/// same space; with distinct leading classes, the degenerate space below
/// has one direction per element. Rows are reduced to their primitive
/// parts on entry and exit.
pub fn normalize_basis(basis: &[AlgElement]) -> Result<Vec<AlgElement>, GenericError> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let ctx = basis[0].ctx();
    for (index, v) in basis.iter().enumerate() {
        ctx.check_same(&v.ctx());
        if v.is_zero() {
            return Err(GenericError::ZeroElement { index });
        }
    }
    let mut rows: Vec<AlgElement> = basis.iter().map(primitive_part).collect();
    let mut claimed: Vec<Monomial> = Vec::with_capacity(rows.len());
    let one = CenterPoly::one(ctx);
    let mut previous_pivot = one.clone();
    for index in 0..rows.len() {
        if rows[index].is_zero() {
            return Err(GenericError::DependentElement { index });
        }
        let class = leading_class(&rows[index]).expect("nonzero element has a leading class");
        debug_assert!(
            !claimed.contains(&class),
            "every claimed class was eliminated from this row in earlier steps"
        );
        let pivot_row = rows[index].clone();
        let pivot = pivot_row.class_coefficient(&class);
        for (pos, row) in rows.iter_mut().enumerate() {
            if pos == index || row.is_zero() {
                continue;
            }
            let coeff = row.class_coefficient(&class);
            let scaled = &row.scale_center(&pivot) - &pivot_row.scale_center(&coeff);
            *row = if previous_pivot == one {
                scaled
            } else {
                exact_div_center(&scaled, &previous_pivot)
            };
            debug_assert!(row.class_coefficient(&class).is_zero());
            if pos < index {
                debug_assert_eq!(
                    leading_class(row),
                    Some(claimed[pos]),
                    "clearing a new class must preserve earlier leading classes"
                );
            }
        }
        claimed.push(class);
        previous_pivot = pivot;
    }
    Ok(rows.iter().map(primitive_part).collect())
}

/// Degenerates an independent basis to a monomial space: normalize, then
/// replace each element by the mod-`p` class of its graded leading term.
///
/// The classes are pairwise distinct by normalization; a central class
/// `(0,0)` is rejected with the element's index, and collinear classes are
/// rejected by [`MonomialSpace`] validation (a monomial space holds at
/// most one direction per line).
pub fn degenerate(ctx: PrimeCtx, basis: &[AlgElement]) -> Result<MonomialSpace, GenericError> {
    for v in basis {
        ctx.check_same(&v.ctx());
    }
    let vectors = degenerate_vectors(ctx, basis)?;
    Ok(MonomialSpace::new(ctx, &vectors)?)
}

fn degenerate_vectors(ctx: PrimeCtx, basis: &[AlgElement]) -> Result<Vec<Vec2p>, GenericError> {
    let normalized = normalize_basis(basis)?;
    let mut vectors = Vec::with_capacity(normalized.len());
    for (index, w) in normalized.iter().enumerate() {
        let class = leading_class(w).expect("normalized elements are nonzero");
        if class.is_identity() {
            return Err(GenericError::CentralLeadingClass { index });
        }
        vectors.push(Vec2p::new(ctx, i64::from(class.a()), i64::from(class.b())));
    }
    Ok(vectors)
}

/// The outcome of running the full degeneration pipeline on a basis,
/// together with the facts the pipeline is expected to certify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerationReport {
    dimension: usize,
    bound: usize,
    degeneration: Vec<Vec2p>,
    degeneration_verdict: MonomialVerdict,
    input_verdict: SpaceVerdict,
}

impl DegenerationReport {
    /// The dimension of the input space (the basis length).
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The dimension bound `p + 1` that a Kummer space must respect.
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// The degenerate class vectors, sorted ascending.
    pub fn degeneration(&self) -> &[Vec2p] {
        &self.degeneration
    }

    /// The zero-sum verdict on the degenerate vectors.
    pub fn degeneration_verdict(&self) -> &MonomialVerdict {
        &self.degeneration_verdict
    }

    /// The symbolic trace-criterion verdict on the input basis.
    pub fn input_verdict(&self) -> &SpaceVerdict {
        &self.input_verdict
    }

    /// Whether the dimension respects the `p + 1` bound.
    pub fn within_bound(&self) -> bool {
        self.dimension <= self.bound
    }

    /// True when the report *contradicts* the degeneration principle: the
    /// input is Kummer but its degeneration is not, or the dimension
    /// exceeds the bound. Always false unless something is wrong with the
    /// implementation — this flag exists so a contradiction cannot pass
    /// silently.
    pub fn mp_defect(&self) -> bool {
        self.input_verdict.is_kummer()
            && (!self.degeneration_verdict.is_kummer() || !self.within_bound())
    }
}

/// Runs the degeneration pipeline and reports the facts it certifies: the
/// degenerate vectors (collinear classes are tolerated here, unlike
/// [`degenerate`]), their zero-sum verdict, the input's symbolic verdict,
/// the dimension, and the `p + 1` bound.
pub fn degeneration_report(
    ctx: PrimeCtx,
    basis: &[AlgElement],
) -> Result<DegenerationReport, GenericError> {
    for v in basis {
        ctx.check_same(&v.ctx());
    }
    let mut vectors = degenerate_vectors(ctx, basis)?;
    vectors.sort();
    let degeneration_verdict = is_kummer_monomial(ctx, &vectors)
        .expect("distinct nonzero classes are valid zero-sum input");
    let input_verdict = is_kummer_space_trace(basis)?;
    Ok(DegenerationReport {
        dimension: basis.len(),
        bound: (ctx.p() + 1) as usize,
        degeneration: vectors,
        degeneration_verdict,
        input_verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx5() -> PrimeCtx {
        PrimeCtx::new(5).unwrap()
    }

    /// Builds an element from `(x, y, alpha, beta, integer coefficient)`
    /// raw terms.
    fn el(ctx: PrimeCtx, terms: &[(u32, u32, u32, u32, i64)]) -> AlgElement {
        let mut out = AlgElement::zero(ctx);
        for &(x, y, alpha, beta, c) in terms {
            out.add_raw_term(x, y, alpha, beta, CycInt::from_int(ctx, c));
        }
        out
    }

    fn tx(ctx: PrimeCtx, i: u64, j: u64) -> TElement {
        TElement::term(ctx, i, j, CycInt::one(ctx))
    }

    #[test]
    fn graded_multiplication_examples() {
        let c = ctx5();
        let rho = CycInt::rho_power(c, 1);
        // Y·X = ρ·XY
        assert_eq!(
            &tx(c, 0, 1) * &tx(c, 1, 0),
            TElement::term(c, 1, 1, rho.clone())
        );
        // X²·X³ = X⁵, no reduction
        assert_eq!(&tx(c, 2, 0) * &tx(c, 3, 0), tx(c, 5, 0));
        // (X + Y)·X = X² + ρ·XY
        let sum = &tx(c, 1, 0) + &tx(c, 0, 1);
        let expected = &tx(c, 2, 0) + &TElement::term(c, 1, 1, rho);
        assert_eq!(&sum * &tx(c, 1, 0), expected);
    }

    #[test]
    fn top_examples() {
        let c = ctx5();
        let t = &tx(c, 2, 1) + &tx(c, 1, 3);
        let (deg, coeff) = t.top().unwrap();
        assert_eq!(deg, GradedDegree::new(2, 1));
        assert_eq!(coeff, &CycInt::one(c));

        let t = TElement::term(c, 1, 0, CycInt::rho_power(c, 1));
        let (deg, coeff) = t.top().unwrap();
        assert_eq!(deg, GradedDegree::new(1, 0));
        assert_eq!(coeff, &CycInt::rho_power(c, 1));

        assert_eq!(TElement::zero(c).top(), None);
    }

    #[test]
    fn top_is_multiplicative_on_samples() {
        let c = ctx5();
        let s = &TElement::term(c, 2, 1, CycInt::from_int(c, 3)) + &tx(c, 0, 4);
        let t = &tx(c, 1, 1) + &TElement::term(c, 1, 0, CycInt::rho_power(c, 2));
        let (ds, cs) = s.top().map(|(d, c)| (d, c.clone())).unwrap();
        let (dt, ct) = t.top().map(|(d, c)| (d, c.clone())).unwrap();
        let (dp, cp) = (&s * &t).top().map(|(d, c)| (d, c.clone())).unwrap();
        assert_eq!(dp, GradedDegree::new(ds.i() + dt.i(), ds.j() + dt.j()));
        let phase = CycInt::rho_power(c, (ds.j() * dt.i()) as i64);
        assert_eq!(cp, &(&cs * &ct) * &phase);
    }

    #[test]
    fn reduction_examples() {
        let c = ctx5();
        // X⁷Y² → α·x²y²
        assert_eq!(reduce_to_algebra(&tx(c, 7, 2)), el(c, &[(2, 2, 1, 0, 1)]));
        // X⁵ → α
        assert_eq!(reduce_to_algebra(&tx(c, 5, 0)), el(c, &[(0, 0, 1, 0, 1)]));
        // X²Y + XY³ → x²y + xy³, no carries
        assert_eq!(
            reduce_to_algebra(&(&tx(c, 2, 1) + &tx(c, 1, 3))),
            el(c, &[(2, 1, 0, 0, 1), (1, 3, 0, 0, 1)])
        );
    }

    #[test]
    fn embedding_round_trips() {
        let c = ctx5();
        // x + α·y embeds as X + X⁵Y.
        let v = el(c, &[(1, 0, 0, 0, 1), (0, 1, 1, 0, 1)]);
        let embedded = embed(&v);
        assert_eq!(embedded, &tx(c, 1, 0) + &tx(c, 5, 1));
        assert_eq!(reduce_to_algebra(&embedded), v);

        let w = el(c, &[(3, 4, 2, 1, -7), (0, 0, 0, 3, 2)]);
        assert_eq!(reduce_to_algebra(&embed(&w)), w);
    }

    #[test]
    fn leading_class_follows_the_carries() {
        let c = ctx5();
        // α·y has graded degree (5,1): class (0,1).
        let v = el(c, &[(1, 0, 0, 0, 1), (0, 1, 1, 0, 1)]);
        assert_eq!(leading_class(&v), Some(Monomial::reduced(c, 0, 1)));
        assert_eq!(leading_class(&AlgElement::zero(c)), None);
    }

    #[test]
    fn normalization_splits_a_shared_class() {
        let c = ctx5();
        let x = el(c, &[(1, 0, 0, 0, 1)]);
        let x_plus_y = el(c, &[(1, 0, 0, 0, 1), (0, 1, 0, 0, 1)]);
        let out = normalize_basis(&[x.clone(), x_plus_y]).unwrap();
        assert_eq!(out, vec![x, el(c, &[(0, 1, 0, 0, 1)])]);
    }

    #[test]
    fn normalization_detects_dependence() {
        let c = ctx5();
        let x = el(c, &[(1, 0, 0, 0, 1)]);
        let alpha_x = el(c, &[(1, 0, 1, 0, 1)]);
        assert_eq!(
            normalize_basis(&[x, alpha_x]).unwrap_err(),
            GenericError::DependentElement { index: 1 }
        );
    }

    #[test]
    fn normalization_rejects_zero_elements() {
        let c = ctx5();
        assert_eq!(
            normalize_basis(&[AlgElement::zero(c)]).unwrap_err(),
            GenericError::ZeroElement { index: 0 }
        );
    }

    #[test]
    fn normalization_clears_lower_collisions() {
        let c = ctx5();
        let x = el(c, &[(1, 0, 0, 0, 1)]);
        let y = el(c, &[(0, 1, 0, 0, 1)]);
        let xy_plus_x = el(c, &[(1, 1, 0, 0, 1), (1, 0, 0, 0, 1)]);
        let out = normalize_basis(&[x.clone(), y.clone(), xy_plus_x]).unwrap();
        assert_eq!(out, vec![x, y, el(c, &[(1, 1, 0, 0, 1)])]);
        let classes: Vec<_> = out.iter().map(|w| leading_class(w).unwrap()).collect();
        assert_eq!(
            classes,
            vec![
                Monomial::reduced(c, 1, 0),
                Monomial::reduced(c, 0, 1),
                Monomial::reduced(c, 1, 1)
            ]
        );
    }

    #[test]
    fn normalization_back_substitutes_earlier_elements() {
        let c = ctx5();
        // x + α·y leads with class (0,1) because α·y embeds above x; the
        // plain y that follows collides there and forces both rows to move.
        let first = el(c, &[(1, 0, 0, 0, 1), (0, 1, 1, 0, 1)]);
        let y = el(c, &[(0, 1, 0, 0, 1)]);
        let out = normalize_basis(&[first, y]).unwrap();
        let minus_y = el(c, &[(0, 1, 0, 0, -1)]);
        let minus_x = el(c, &[(1, 0, 0, 0, -1)]);
        assert_eq!(out, vec![minus_y, minus_x]);
        let classes: Vec<_> = out.iter().map(|w| leading_class(w).unwrap()).collect();
        assert_eq!(
            classes,
            vec![Monomial::reduced(c, 0, 1), Monomial::reduced(c, 1, 0)]
        );
    }

    #[test]
    fn degeneration_examples() {
        let c = ctx5();
        let basis: Vec<AlgElement> = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]
            .into_iter()
            .map(|(a, b)| el(c, &[(a, b, 0, 0, 1)]))
            .collect();
        let space = degenerate(c, &basis).unwrap();
        let expected: Vec<Vec2p> = [(0, 1), (1, 0), (1, 1), (2, 1), (3, 1), (4, 1)]
            .into_iter()
            .map(|(a, b)| Vec2p::new(c, a, b))
            .collect();
        assert_eq!(space.vectors(), &expected[..]);

        let x = el(c, &[(1, 0, 0, 0, 1)]);
        let x_plus_y = el(c, &[(1, 0, 0, 0, 1), (0, 1, 0, 0, 1)]);
        let space = degenerate(c, &[x, x_plus_y]).unwrap();
        assert_eq!(space.vectors(), &[Vec2p::new(c, 0, 1), Vec2p::new(c, 1, 0)]);

        let first = el(c, &[(1, 0, 0, 0, 1), (0, 1, 1, 0, 1)]);
        let y = el(c, &[(0, 1, 0, 0, 1)]);
        let space = degenerate(c, &[first, y]).unwrap();
        assert_eq!(space.vectors(), &[Vec2p::new(c, 0, 1), Vec2p::new(c, 1, 0)]);
    }

    #[test]
    fn degeneration_rejects_central_and_collinear_classes() {
        let c = ctx5();
        // α + x leads with the central class (0,0).
        let central = el(c, &[(0, 0, 1, 0, 1), (1, 0, 0, 0, 1)]);
        assert_eq!(
            degenerate(c, &[central]).unwrap_err(),
            GenericError::CentralLeadingClass { index: 0 }
        );
        // x and α·x² lead with the collinear classes (1,0) and (2,0).
        let x = el(c, &[(1, 0, 0, 0, 1)]);
        let alpha_x2 = el(c, &[(2, 0, 1, 0, 1)]);
        assert!(matches!(
            degenerate(c, &[x, alpha_x2]).unwrap_err(),
            GenericError::Space(SpaceError::CollinearVectors { .. })
        ));
    }

    #[test]
    fn report_on_a_full_standard_basis() {
        let c = ctx5();
        let basis: Vec<AlgElement> = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]
            .into_iter()
            .map(|(a, b)| el(c, &[(a, b, 0, 0, 1)]))
            .collect();
        let report = degeneration_report(c, &basis).unwrap();
        assert_eq!(report.dimension(), 6);
        assert_eq!(report.bound(), 6);
        assert!(report.within_bound());
        assert!(report.degeneration_verdict().is_kummer());
        assert!(report.input_verdict().is_kummer());
        assert!(!report.mp_defect());
    }

    #[test]
    fn report_on_a_non_kummer_basis_is_not_a_defect() {
        let c = ctx5();
        let basis = vec![
            el(c, &[(1, 0, 0, 0, 1)]),
            el(c, &[(0, 1, 0, 0, 1)]),
            el(c, &[(2, 2, 0, 0, 1)]),
        ];
        let report = degeneration_report(c, &basis).unwrap();
        assert!(!report.degeneration_verdict().is_kummer());
        assert!(!report.input_verdict().is_kummer());
        assert!(!report.mp_defect());
        assert!(report.within_bound());
    }

    #[test]
    fn report_on_a_small_kummer_basis() {
        let c = ctx5();
        let basis = vec![
            el(c, &[(1, 0, 0, 0, 1)]),
            el(c, &[(1, 0, 0, 0, 1), (0, 1, 0, 0, 1)]),
        ];
        let report = degeneration_report(c, &basis).unwrap();
        assert_eq!(report.dimension(), 2);
        assert!(report.degeneration_verdict().is_kummer());
        assert!(report.input_verdict().is_kummer());
        assert!(!report.mp_defect());
        assert_eq!(
            report.degeneration(),
            &[Vec2p::new(c, 0, 1), Vec2p::new(c, 1, 0)]
        );
    }
}
