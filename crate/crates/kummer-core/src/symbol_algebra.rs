//! Exact arithmetic in the generic symbol algebra
//! `D = K[x, y : x^p = α, y^p = β, yx = ρxy]`, plus the two symbolic
//! Kummer criteria and fraction-free linear algebra over the center.
//!
//! Elements are kept in reduced form: a map from monomial classes
//! `(a, b) ∈ [0,p)²` to central polynomial coefficients in `Z[ρ][α, β]`.
//! Coefficients stay integral throughout — denominators are cleared at the
//! API boundary — so every computation here is exact and every zero test
//! is decisive.
//!
//! A *Kummer element* is one whose powers `v, v², …, v^{p−1}` all have zero
//! reduced trace; a *Kummer space* is a subspace all of whose nonzero
//! elements are Kummer. Verdicts returned by this module are statements
//! about the generic algebra `D` (with `α`, `β` independent indeterminates)
//! and do not promise anything about specializations of `α` and `β`.

use crate::cyclotomic::{CycInt, PrimeCtx};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Errors raised by symbolic Kummer checks and their input validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    /// A basis element was the zero element (0-based index).
    #[error("basis element at index {index} is zero")]
    ZeroBasisElement { index: usize },
    /// The basis is dependent over the center's fraction field: the element
    /// at the reported 0-based index lies in the span of its predecessors.
    #[error("basis is dependent over K: element {index} lies in the span of its predecessors")]
    DependentBasis { index: usize },
    /// An operation that needs a nonzero element received zero.
    #[error("element is zero")]
    ZeroElement,
    /// A tuple's total weight exceeded the prime.
    #[error("tuple weight {weight} exceeds the prime {p}")]
    WeightAbovePrime { weight: u32, p: u32 },
    /// A tuple's length did not match the number of elements supplied.
    #[error("tuple has {tuple} entries but {elements} elements were supplied")]
    TupleLengthMismatch { elements: usize, tuple: usize },
}

/// A monomial class `x^a y^b` with both exponents reduced to `[0, p)`.
///
/// Ordering is lexicographic on `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    a: u32,
    b: u32,
}

impl Monomial {
    /// Builds a class from arbitrary integers, reducing mod p.
    pub fn reduced(ctx: PrimeCtx, a: i64, b: i64) -> Self {
        Monomial {
            a: ctx.res(a),
            b: ctx.res(b),
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

    /// Whether this is the identity class `(0, 0)`.
    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "1"),
            (a, 0) => write!(f, "x^{a}"),
            (0, b) => write!(f, "y^{b}"),
            (a, b) => write!(f, "x^{a} y^{b}"),
        }
    }
}

/// A polynomial in the central generators `α`, `β` with coefficients in the
/// cyclotomic integer ring: the coefficient domain of reduced elements.
///
/// Keys are `(α-exponent, β-exponent)`; zero coefficients are never stored,
/// so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterPoly {
    ctx: PrimeCtx,
    terms: BTreeMap<(u32, u32), CycInt>,
}

impl CenterPoly {
    /// The zero polynomial.
    pub fn zero(ctx: PrimeCtx) -> Self {
        CenterPoly {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(ctx: PrimeCtx) -> Self {
        Self::from_cyc(ctx, CycInt::one(ctx))
    }

    /// A constant polynomial.
    pub fn from_cyc(ctx: PrimeCtx, c: CycInt) -> Self {
        Self::term(ctx, 0, 0, c)
    }

    /// The single term `c·α^s β^t` (the zero polynomial when `c` is zero).
    pub fn term(ctx: PrimeCtx, s: u32, t: u32, c: CycInt) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term((s, t), c);
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

    /// The terms, keyed by `(α-exponent, β-exponent)`; coefficients are
    /// always nonzero.
    pub fn terms(&self) -> &BTreeMap<(u32, u32), CycInt> {
        &self.terms
    }

    /// The lexicographically largest term, or `None` for zero.
    pub fn leading(&self) -> Option<((u32, u32), &CycInt)> {
        self.terms.last_key_value().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, e: (u32, u32), c: CycInt) {
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

    /// Multiplies by the single term `c·α^s β^t`.
    pub fn mul_term(&self, s: u32, t: u32, c: &CycInt) -> CenterPoly {
        let mut out = Self::zero(self.ctx);
        if c.is_zero() {
            return out;
        }
        for (&(es, et), coeff) in &self.terms {
            out.add_term((es + s, et + t), coeff * c);
        }
        out
    }

    /// Multiplies every coefficient by a cyclotomic scalar.
    pub fn scale_cyc(&self, c: &CycInt) -> CenterPoly {
        self.mul_term(0, 0, c)
    }

    /// Multiplies every coefficient by an ordinary integer.
    pub fn scale_int(&self, n: i64) -> CenterPoly {
        self.scale_cyc(&CycInt::from_int(self.ctx, n))
    }

    /// Exact division: `Some(q)` with `q·d == self` when the quotient
    /// exists in the polynomial ring, `None` otherwise.
    ///
    /// Works by repeatedly dividing leading terms, which is decisive
    /// because the coefficient ring has no zero divisors and the
    /// lexicographic order on exponents is multiplicative.
    ///
    /// # Panics
    ///
    /// Panics when `d` is zero.
    pub fn exact_div(&self, d: &CenterPoly) -> Option<CenterPoly> {
        self.ctx.check_same(&d.ctx);
        let (de, dc) = d.leading().expect("exact division by the zero polynomial");
        let mut quot = Self::zero(self.ctx);
        let mut rem = self.clone();
        while let Some((re, rc)) = rem.leading() {
            if re.0 < de.0 || re.1 < de.1 {
                return None;
            }
            let qc = rc.exact_div(dc)?;
            let qe = (re.0 - de.0, re.1 - de.1);
            rem = &rem - &d.mul_term(qe.0, qe.1, &qc);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }
}

fn cp_add(a: &CenterPoly, b: &CenterPoly) -> CenterPoly {
    a.ctx.check_same(&b.ctx);
    let mut out = a.clone();
    for (&e, c) in &b.terms {
        out.add_term(e, c.clone());
    }
    out
}

fn cp_sub(a: &CenterPoly, b: &CenterPoly) -> CenterPoly {
    a.ctx.check_same(&b.ctx);
    let mut out = a.clone();
    for (&e, c) in &b.terms {
        out.add_term(e, -c);
    }
    out
}

fn cp_mul(a: &CenterPoly, b: &CenterPoly) -> CenterPoly {
    a.ctx.check_same(&b.ctx);
    let mut out = CenterPoly::zero(a.ctx);
    for (&(s1, t1), c1) in &a.terms {
        for (&(s2, t2), c2) in &b.terms {
            out.add_term((s1 + s2, t1 + t2), c1 * c2);
        }
    }
    out
}

fn cp_neg(a: &CenterPoly) -> CenterPoly {
    CenterPoly {
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

forward_binop!(CenterPoly, Add, add, cp_add);
forward_binop!(CenterPoly, Sub, sub, cp_sub);
forward_binop!(CenterPoly, Mul, mul, cp_mul);

impl Neg for &CenterPoly {
    type Output = CenterPoly;
    fn neg(self) -> CenterPoly {
        cp_neg(self)
    }
}

impl Neg for CenterPoly {
    type Output = CenterPoly;
    fn neg(self) -> CenterPoly {
        cp_neg(&self)
    }
}

impl fmt::Display for CenterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(s, t), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if s > 0 {
                write!(f, "*al^{s}")?;
            }
            if t > 0 {
                write!(f, "*be^{t}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// An element of the generic symbol algebra in reduced form: a map from
/// monomial classes to nonzero central-polynomial coefficients.
///
/// The zero element is the empty map. Exponent overflow (`x^p`, `y^p`) is
/// absorbed into `α`, `β` powers on construction and multiplication, so the
/// representation is canonical and `==` decides equality in the algebra.
///
/// ```
/// use kummer_core::{AlgElement, PrimeCtx};
/// let ctx = PrimeCtx::new(5).unwrap();
/// let x = AlgElement::monomial(ctx, 1, 0);
/// let y = AlgElement::monomial(ctx, 0, 1);
/// // yx = ρ·xy
/// assert_eq!(&y * &x, (&x * &y).scale_cyc(&kummer_core::CycInt::rho_power(ctx, 1)));
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElement {
    ctx: PrimeCtx,
    terms: BTreeMap<Monomial, CenterPoly>,
}

impl AlgElement {
    /// The zero element.
    pub fn zero(ctx: PrimeCtx) -> Self {
        AlgElement {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The identity element.
    pub fn one(ctx: PrimeCtx) -> Self {
        Self::monomial(ctx, 0, 0)
    }

    /// The monomial `x^a y^b` for arbitrary nonnegative exponents; powers
    /// of `p` are absorbed as `x^p = α`, `y^p = β`.
    pub fn monomial(ctx: PrimeCtx, a: u32, b: u32) -> Self {
        let mut out = Self::zero(ctx);
        out.add_raw_term(a, b, 0, 0, CycInt::one(ctx));
        out
    }

    /// The generator `x`.
    pub fn gen_x(ctx: PrimeCtx) -> Self {
        Self::monomial(ctx, 1, 0)
    }

    /// The generator `y`.
    pub fn gen_y(ctx: PrimeCtx) -> Self {
        Self::monomial(ctx, 0, 1)
    }

    /// Adds `coeff·α^alpha β^beta · x^x y^y` to this element, reducing the
    /// monomial exponents and absorbing their overflow into `α`, `β`.
    ///
    /// This is the raw ingestion path used by file parsers and bindings.
    pub fn add_raw_term(&mut self, x: u32, y: u32, alpha: u32, beta: u32, coeff: CycInt) {
        self.ctx.check_same(&coeff.ctx());
        let p = self.ctx.p();
        let class = Monomial { a: x % p, b: y % p };
        let poly = CenterPoly::term(self.ctx, alpha + x / p, beta + y / p, coeff);
        self.add_class(class, poly);
    }

    fn add_class(&mut self, class: Monomial, poly: CenterPoly) {
        if poly.is_zero() {
            return;
        }
        match self.terms.entry(class) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(poly);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &poly;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// The context this element lives in.
    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The monomial classes present, in sorted order.
    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().copied().collect()
    }

    /// The terms, keyed by monomial class; coefficients are always nonzero.
    pub fn terms(&self) -> &BTreeMap<Monomial, CenterPoly> {
        &self.terms
    }

    /// The coefficient of a monomial class (zero when absent).
    pub fn class_coefficient(&self, class: &Monomial) -> CenterPoly {
        self.terms
            .get(class)
            .cloned()
            .unwrap_or_else(|| CenterPoly::zero(self.ctx))
    }

    /// The reduced trace: `p` times the coefficient of the identity class.
    /// Non-central monomial classes contribute nothing.
    pub fn trace(&self) -> CenterPoly {
        self.class_coefficient(&Monomial { a: 0, b: 0 })
            .scale_int(i64::from(self.ctx.p()))
    }

    /// Whether the element lies in the center (only the identity class is
    /// present; zero counts as central).
    pub fn is_central(&self) -> bool {
        self.terms.keys().all(Monomial::is_identity)
    }

    /// Multiplies by a central polynomial.
    pub fn scale_center(&self, f: &CenterPoly) -> AlgElement {
        self.ctx.check_same(&f.ctx());
        let mut out = Self::zero(self.ctx);
        for (&class, poly) in &self.terms {
            out.add_class(class, poly * f);
        }
        out
    }

    /// Multiplies by a cyclotomic scalar.
    pub fn scale_cyc(&self, c: &CycInt) -> AlgElement {
        self.scale_center(&CenterPoly::from_cyc(self.ctx, c.clone()))
    }

    /// The `n`-th power (`n = 0` gives the identity).
    pub fn pow(&self, n: u32) -> AlgElement {
        let mut out = Self::one(self.ctx);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

fn alg_add(a: &AlgElement, b: &AlgElement) -> AlgElement {
    a.ctx.check_same(&b.ctx);
    let mut out = a.clone();
    for (&class, poly) in &b.terms {
        out.add_class(class, poly.clone());
    }
    out
}

fn alg_sub(a: &AlgElement, b: &AlgElement) -> AlgElement {
    a.ctx.check_same(&b.ctx);
    let mut out = a.clone();
    for (&class, poly) in &b.terms {
        out.add_class(class, -poly);
    }
    out
}

fn alg_mul(a: &AlgElement, b: &AlgElement) -> AlgElement {
    a.ctx.check_same(&b.ctx);
    let ctx = a.ctx;
    let p = ctx.p();
    let mut out = AlgElement::zero(ctx);
    for (m1, f1) in &a.terms {
        for (m2, f2) in &b.terms {
            // y^{b1} x^{a2} = ρ^{b1·a2} x^{a2} y^{b1}
            let phase = i64::from(m1.b) * i64::from(m2.a);
            let a_tot = m1.a + m2.a;
            let b_tot = m1.b + m2.b;
            let class = Monomial {
                a: a_tot % p,
                b: b_tot % p,
            };
            let coeff = (f1 * f2).mul_term(a_tot / p, b_tot / p, &CycInt::rho_power(ctx, phase));
            out.add_class(class, coeff);
        }
    }
    out
}

fn alg_neg(a: &AlgElement) -> AlgElement {
    AlgElement {
        ctx: a.ctx,
        terms: a.terms.iter().map(|(&m, f)| (m, -f)).collect(),
    }
}

forward_binop!(AlgElement, Add, add, alg_add);
forward_binop!(AlgElement, Sub, sub, alg_sub);
forward_binop!(AlgElement, Mul, mul, alg_mul);

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        alg_neg(self)
    }
}

impl Neg for AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        alg_neg(&self)
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, poly) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "[{poly}]·{m}")?;
            first = false;
        }
        Ok(())
    }
}

/// Multiplicities of a symmetric product: entry `k` is how many copies of
/// the `k`-th element participate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymTuple {
    counts: Vec<u32>,
}

impl SymTuple {
    /// Wraps a dense multiplicity vector aligned with the element sequence.
    pub fn new(counts: Vec<u32>) -> Self {
        SymTuple { counts }
    }

    /// The multiplicity vector.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Total number of copies.
    pub fn weight(&self) -> u32 {
        self.counts.iter().sum()
    }
}

impl fmt::Display for SymTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// All multiplicity vectors of the given length with the given total
/// weight, in ascending lexicographic order.
fn compositions(weight: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if weight == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=weight {
        for mut rest in compositions(weight - first, parts - 1) {
            let mut v = Vec::with_capacity(parts);
            v.push(first);
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

/// The symmetric product of `tuple.counts()[k]` copies of each
/// `elements[k]`: the sum of the products over all distinct arrangements
/// of the combined multiset.
///
/// Computed by the recurrence `S(i) = Σ_j S(i − δ_j)·v_j` over sub-tuples,
/// memoized on a mixed-radix table of `Π (i_k + 1)` entries (the memory
/// bound). The empty tuple gives the identity.
///
/// ```
/// use kummer_core::{sym_product, AlgElement, CycInt, PrimeCtx, SymTuple};
/// let ctx = PrimeCtx::new(5).unwrap();
/// let x = AlgElement::gen_x(ctx);
/// let y = AlgElement::gen_y(ctx);
/// // x * y = xy + yx = (1 + ρ)·xy
/// let s = sym_product(ctx, &[x.clone(), y.clone()], &SymTuple::new(vec![1, 1])).unwrap();
/// let xy = &x * &y;
/// assert_eq!(s, xy.scale_cyc(&(&CycInt::one(ctx) + &CycInt::rho_power(ctx, 1))));
/// ```
pub fn sym_product(
    ctx: PrimeCtx,
    elements: &[AlgElement],
    tuple: &SymTuple,
) -> Result<AlgElement, SymbolError> {
    if elements.len() != tuple.counts().len() {
        return Err(SymbolError::TupleLengthMismatch {
            elements: elements.len(),
            tuple: tuple.counts().len(),
        });
    }
    for e in elements {
        ctx.check_same(&e.ctx());
    }
    let counts = tuple.counts();
    let mut strides = vec![1usize; counts.len()];
    let mut total = 1usize;
    for (j, &c) in counts.iter().enumerate() {
        strides[j] = total;
        total *= c as usize + 1;
    }
    let mut table: Vec<AlgElement> = Vec::with_capacity(total);
    table.push(AlgElement::one(ctx));
    for idx in 1..total {
        let mut acc = AlgElement::zero(ctx);
        for (j, &c) in counts.iter().enumerate() {
            let digit = (idx / strides[j]) % (c as usize + 1);
            if digit > 0 {
                acc = &acc + &(&table[idx - strides[j]] * &elements[j]);
            }
        }
        table.push(acc);
    }
    Ok(table.pop().expect("table is nonempty"))
}

/// The scalar `c` with
/// `sym_product(monomials, tuple) = c · m_1^{i_1}·…·m_t^{i_t}` (the ordered
/// product), for monomials `m_k = x^{a_k} y^{b_k}`.
///
/// All arrangements of a monomial multiset reduce to the same monomial up
/// to a power of `ρ`, so the symmetric product is a cyclotomic multiple of
/// the ordered product. The scalar follows the recurrence
/// `c(i) = Σ_j ρ^{Σ_{k>j} i_k·e_{kj}}·c(i − δ_j)` where
/// `e_{kj} = b_k a_j − b_j a_k` is the commutation exponent
/// (`m_k m_j = ρ^{e_{kj}} m_j m_k`).
///
/// Weights above `p` are rejected: the criteria only ever need weight ≤ p,
/// and the companion residue facts hold below `p`.
pub fn monomial_sym_coeff(
    ctx: PrimeCtx,
    monomials: &[Monomial],
    tuple: &SymTuple,
) -> Result<CycInt, SymbolError> {
    if monomials.len() != tuple.counts().len() {
        return Err(SymbolError::TupleLengthMismatch {
            elements: monomials.len(),
            tuple: tuple.counts().len(),
        });
    }
    let weight = tuple.weight();
    if weight > ctx.p() {
        return Err(SymbolError::WeightAbovePrime { weight, p: ctx.p() });
    }
    let t = monomials.len();
    let comm_exp = |k: usize, j: usize| -> i64 {
        let (ak, bk) = (i64::from(monomials[k].a), i64::from(monomials[k].b));
        let (aj, bj) = (i64::from(monomials[j].a), i64::from(monomials[j].b));
        i64::from(ctx.res(bk * aj - bj * ak))
    };
    let counts = tuple.counts();
    let mut strides = vec![1usize; t];
    let mut total = 1usize;
    for (j, &c) in counts.iter().enumerate() {
        strides[j] = total;
        total *= c as usize + 1;
    }
    let digit = |idx: usize, j: usize| (idx / strides[j]) % (counts[j] as usize + 1);
    let mut table: Vec<CycInt> = Vec::with_capacity(total);
    table.push(CycInt::one(ctx));
    for idx in 1..total {
        let mut acc = CycInt::zero(ctx);
        for j in 0..t {
            if digit(idx, j) > 0 {
                let mut phase: i64 = 0;
                for k in (j + 1)..t {
                    phase += digit(idx, k) as i64 * comm_exp(k, j);
                }
                acc = &acc + &(&CycInt::rho_power(ctx, phase) * &table[idx - strides[j]]);
            }
        }
        table.push(acc);
    }
    Ok(table.pop().expect("table is nonempty"))
}

/// Whether a nonzero element is Kummer in the generic algebra: the reduced
/// traces of `v, v², …, v^{p−1}` all vanish.
pub fn is_kummer_element(v: &AlgElement) -> Result<bool, SymbolError> {
    if v.is_zero() {
        return Err(SymbolError::ZeroElement);
    }
    let mut power = v.clone();
    for i in 1..v.ctx().p() {
        if i > 1 {
            power = &power * v;
        }
        if !power.trace().is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verdict of a symbolic Kummer-space check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceVerdict {
    /// Every probed combination passed.
    Kummer,
    /// The lexicographically least minimal-weight violating tuple.
    NotKummer { witness: SymTuple },
}

impl SpaceVerdict {
    /// Whether the verdict is Kummer.
    pub fn is_kummer(&self) -> bool {
        matches!(self, SpaceVerdict::Kummer)
    }

    /// The violating tuple, when the verdict is not Kummer.
    pub fn witness(&self) -> Option<&SymTuple> {
        match self {
            SpaceVerdict::Kummer => None,
            SpaceVerdict::NotKummer { witness } => Some(witness),
        }
    }
}

fn validate_basis(basis: &[AlgElement]) -> Result<(), SymbolError> {
    for (index, v) in basis.iter().enumerate() {
        if v.is_zero() {
            return Err(SymbolError::ZeroBasisElement { index });
        }
        if index > 0 {
            basis[0].ctx().check_same(&v.ctx());
        }
    }
    for index in 0..basis.len() {
        if rank_over_k(&basis[..=index]) != index + 1 {
            return Err(SymbolError::DependentBasis { index });
        }
    }
    Ok(())
}

/// The trace criterion: a basis spans a Kummer space iff
/// `trace(sym_product(tuple))` vanishes for every tuple with weight in
/// `(0, p)`.
///
/// Tuples are probed by ascending weight and, within a weight, in ascending
/// lexicographic order, so a failure reports the lexicographically least
/// minimal-weight witness — deterministic across runs.
///
/// The basis must consist of nonzero elements and be independent over `K`;
/// violations are errors carrying the offending 0-based index, not
/// verdicts.
pub fn is_kummer_space_trace(basis: &[AlgElement]) -> Result<SpaceVerdict, SymbolError> {
    validate_basis(basis)?;
    if basis.is_empty() {
        return Ok(SpaceVerdict::Kummer);
    }
    let ctx = basis[0].ctx();
    for weight in 1..ctx.p() {
        for counts in compositions(weight, basis.len()) {
            let tuple = SymTuple::new(counts);
            let s = sym_product(ctx, basis, &tuple)?;
            if !s.trace().is_zero() {
                return Ok(SpaceVerdict::NotKummer { witness: tuple });
            }
        }
    }
    Ok(SpaceVerdict::Kummer)
}

/// The power criterion: a basis spans a Kummer space iff
/// `sym_product(tuple)` is central for every tuple of weight exactly `p`.
///
/// Witness selection and validation match [`is_kummer_space_trace`]; the
/// two criteria agree on every basis (checked extensively in the test
/// suites).
pub fn is_kummer_space_power(basis: &[AlgElement]) -> Result<SpaceVerdict, SymbolError> {
    validate_basis(basis)?;
    if basis.is_empty() {
        return Ok(SpaceVerdict::Kummer);
    }
    let ctx = basis[0].ctx();
    for counts in compositions(ctx.p(), basis.len()) {
        let tuple = SymTuple::new(counts);
        let s = sym_product(ctx, basis, &tuple)?;
        if !s.is_central() {
            return Ok(SpaceVerdict::NotKummer { witness: tuple });
        }
    }
    Ok(SpaceVerdict::Kummer)
}

/// The rank over `K` of the coefficient matrix of the given elements (rows
/// indexed by elements, columns by monomial classes).
///
/// Uses fraction-free Bareiss-style elimination: every intermediate entry
/// is a minor of the original matrix, and each step divides exactly by the
/// previous pivot, so all arithmetic stays in `Z[ρ][α, β]`.
pub fn rank_over_k(rows: &[AlgElement]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ctx = rows[0].ctx();
    for r in rows {
        ctx.check_same(&r.ctx());
    }
    let columns: Vec<Monomial> = rows
        .iter()
        .flat_map(|r| r.support())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if columns.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<CenterPoly>> = rows
        .iter()
        .map(|r| columns.iter().map(|c| r.class_coefficient(c)).collect())
        .collect();
    let (nrows, ncols) = (m.len(), columns.len());
    let mut rank = 0;
    let mut prev = CenterPoly::one(ctx);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in (rank + 1)..nrows {
            for c in 0..ncols {
                if c == col {
                    continue;
                }
                let num = &(&pivot * &m[r][c]) - &(&m[r][col] * &m[rank][c]);
                m[r][c] = num
                    .exact_div(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
            m[r][col] = CenterPoly::zero(ctx);
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// The candidate monomial description of the span: the set `M` of all
/// monomial classes appearing across the basis, returned exactly when
/// `|M|` equals the basis length (then the span is `K`-spanned by those
/// monomials). Returns `None` when the class count differs.
///
/// Input validation matches the space checks: nonzero, independent.
pub fn monomial_spanning_set(basis: &[AlgElement]) -> Result<Option<Vec<Monomial>>, SymbolError> {
    validate_basis(basis)?;
    let classes: BTreeSet<Monomial> = basis.iter().flat_map(|v| v.support()).collect();
    if classes.len() == basis.len() {
        Ok(Some(classes.into_iter().collect()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx5() -> PrimeCtx {
        PrimeCtx::new(5).unwrap()
    }

    fn x(ctx: PrimeCtx) -> AlgElement {
        AlgElement::gen_x(ctx)
    }

    fn y(ctx: PrimeCtx) -> AlgElement {
        AlgElement::gen_y(ctx)
    }

    fn rho(ctx: PrimeCtx, e: i64) -> CycInt {
        CycInt::rho_power(ctx, e)
    }

    #[test]
    fn commutation_relation() {
        let ctx = ctx5();
        let lhs = &y(ctx) * &x(ctx);
        let rhs = (&x(ctx) * &y(ctx)).scale_cyc(&rho(ctx, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn x_to_the_p_becomes_alpha() {
        let ctx = ctx5();
        let prod = &x(ctx).pow(4) * &x(ctx);
        let mut expected = AlgElement::zero(ctx);
        expected.add_raw_term(0, 0, 1, 0, CycInt::one(ctx));
        assert_eq!(prod, expected);
        assert!(prod.is_central());
    }

    #[test]
    fn xy_squared_picks_up_one_phase() {
        let ctx = ctx5();
        let xy = &x(ctx) * &y(ctx);
        let sq = &xy * &xy;
        let expected = AlgElement::monomial(ctx, 2, 2).scale_cyc(&rho(ctx, 1));
        assert_eq!(sq, expected);
    }

    #[test]
    fn trace_examples() {
        let ctx = ctx5();
        assert!(x(ctx).trace().is_zero());
        assert_eq!(
            AlgElement::one(ctx).trace(),
            CenterPoly::from_cyc(ctx, CycInt::from_int(ctx, 5))
        );
        let x5 = AlgElement::monomial(ctx, 5, 0);
        assert_eq!(
            x5.trace(),
            CenterPoly::term(ctx, 1, 0, CycInt::from_int(ctx, 5))
        );
    }

    #[test]
    fn sym_product_examples() {
        let ctx = ctx5();
        let elems = [x(ctx), y(ctx)];
        let s = sym_product(ctx, &elems, &SymTuple::new(vec![1, 1])).unwrap();
        let one_plus_rho = &CycInt::one(ctx) + &rho(ctx, 1);
        assert_eq!(s, (&x(ctx) * &y(ctx)).scale_cyc(&one_plus_rho));

        let s = sym_product(ctx, &elems, &SymTuple::new(vec![1, 2])).unwrap();
        let c = &one_plus_rho + &rho(ctx, 2);
        assert_eq!(s, (&x(ctx) * &y(ctx).pow(2)).scale_cyc(&c));

        let v = &x(ctx) + &y(ctx);
        let s = sym_product(ctx, std::slice::from_ref(&v), &SymTuple::new(vec![3])).unwrap();
        assert_eq!(s, v.pow(3));

        // Σ_{j<p} ρ^j = 0 makes x^{p−1} * y vanish.
        let s = sym_product(ctx, &elems, &SymTuple::new(vec![4, 1])).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn sym_product_rejects_length_mismatch() {
        let ctx = ctx5();
        assert_eq!(
            sym_product(ctx, &[x(ctx)], &SymTuple::new(vec![1, 1])).unwrap_err(),
            SymbolError::TupleLengthMismatch {
                elements: 1,
                tuple: 2
            }
        );
    }

    #[test]
    fn monomial_coefficient_examples() {
        let ctx = ctx5();
        let ms = [Monomial::reduced(ctx, 1, 0), Monomial::reduced(ctx, 0, 1)];
        let c = monomial_sym_coeff(ctx, &ms, &SymTuple::new(vec![1, 1])).unwrap();
        assert_eq!(c, &CycInt::one(ctx) + &rho(ctx, 1));

        let c = monomial_sym_coeff(ctx, &ms, &SymTuple::new(vec![1, 2])).unwrap();
        let expected = &(&CycInt::one(ctx) + &rho(ctx, 1)) + &rho(ctx, 2);
        assert_eq!(c, expected);
        assert_eq!(c.residue(), 3);

        let c = monomial_sym_coeff(ctx, &ms[..1], &SymTuple::new(vec![4])).unwrap();
        assert_eq!(c, CycInt::one(ctx));

        assert_eq!(
            monomial_sym_coeff(ctx, &ms, &SymTuple::new(vec![4, 2])).unwrap_err(),
            SymbolError::WeightAbovePrime { weight: 6, p: 5 }
        );
    }

    #[test]
    fn coefficient_matches_symmetric_product() {
        let ctx = ctx5();
        let ms = [Monomial::reduced(ctx, 2, 1), Monomial::reduced(ctx, 1, 3)];
        let elems = [
            AlgElement::monomial(ctx, 2, 1),
            AlgElement::monomial(ctx, 1, 3),
        ];
        for counts in [vec![1, 1], vec![2, 1], vec![1, 3], vec![2, 2]] {
            let tuple = SymTuple::new(counts);
            let s = sym_product(ctx, &elems, &tuple).unwrap();
            let c = monomial_sym_coeff(ctx, &ms, &tuple).unwrap();
            let mut ordered = AlgElement::one(ctx);
            for (e, &n) in elems.iter().zip(tuple.counts()) {
                ordered = &ordered * &e.pow(n);
            }
            assert_eq!(s, ordered.scale_cyc(&c));
        }
    }

    #[test]
    fn kummer_element_examples() {
        let ctx = ctx5();
        assert!(is_kummer_element(&x(ctx)).unwrap());
        assert!(!is_kummer_element(&AlgElement::one(ctx)).unwrap());
        let v = &x(ctx) + &y(ctx);
        assert!(is_kummer_element(&v).unwrap());
        // The p-th power of x + y collapses to the central element α + β.
        let mut alpha_plus_beta = AlgElement::zero(ctx);
        alpha_plus_beta.add_raw_term(0, 0, 1, 0, CycInt::one(ctx));
        alpha_plus_beta.add_raw_term(0, 0, 0, 1, CycInt::one(ctx));
        assert_eq!(v.pow(5), alpha_plus_beta);
        assert_eq!(
            is_kummer_element(&AlgElement::zero(ctx)).unwrap_err(),
            SymbolError::ZeroElement
        );
    }

    #[test]
    fn trace_criterion_examples() {
        let ctx = ctx5();
        assert!(is_kummer_space_trace(&[x(ctx), y(ctx)])
            .unwrap()
            .is_kummer());

        let verdict = is_kummer_space_trace(&[x(ctx), x(ctx).pow(2)]).unwrap();
        assert_eq!(verdict.witness().unwrap(), &SymTuple::new(vec![1, 2]));

        let verdict =
            is_kummer_space_trace(&[x(ctx), y(ctx), AlgElement::monomial(ctx, 2, 2)]).unwrap();
        assert_eq!(verdict.witness().unwrap(), &SymTuple::new(vec![1, 1, 2]));
    }

    #[test]
    fn power_criterion_examples() {
        let ctx = ctx5();
        assert!(is_kummer_space_power(&[x(ctx), y(ctx)])
            .unwrap()
            .is_kummer());
        assert!(is_kummer_space_power(&[x(ctx)]).unwrap().is_kummer());
        let verdict =
            is_kummer_space_power(&[x(ctx), y(ctx), AlgElement::monomial(ctx, 2, 2)]).unwrap();
        assert!(!verdict.is_kummer());
    }

    #[test]
    fn standard_monomial_basis_passes_both_criteria() {
        let ctx = ctx5();
        let basis: Vec<AlgElement> = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]
            .into_iter()
            .map(|(a, b)| AlgElement::monomial(ctx, a, b))
            .collect();
        assert!(is_kummer_space_trace(&basis).unwrap().is_kummer());
        assert!(is_kummer_space_power(&basis).unwrap().is_kummer());
    }

    #[test]
    fn basis_validation_reports_indices() {
        let ctx = ctx5();
        assert_eq!(
            is_kummer_space_trace(&[x(ctx), AlgElement::zero(ctx)]).unwrap_err(),
            SymbolError::ZeroBasisElement { index: 1 }
        );
        let mut alpha_x = AlgElement::zero(ctx);
        alpha_x.add_raw_term(1, 0, 1, 0, CycInt::one(ctx));
        assert_eq!(
            is_kummer_space_trace(&[x(ctx), alpha_x]).unwrap_err(),
            SymbolError::DependentBasis { index: 1 }
        );
    }

    #[test]
    fn rank_examples() {
        let ctx = ctx5();
        assert_eq!(rank_over_k(&[x(ctx), y(ctx)]), 2);
        let mut alpha_x = AlgElement::zero(ctx);
        alpha_x.add_raw_term(1, 0, 1, 0, CycInt::one(ctx));
        assert_eq!(rank_over_k(&[x(ctx), alpha_x]), 1);
        let rows = [&x(ctx) + &y(ctx), &x(ctx) - &y(ctx), x(ctx)];
        assert_eq!(rank_over_k(&rows), 2);
        assert_eq!(rank_over_k(&[]), 0);
        assert_eq!(rank_over_k(&[AlgElement::zero(ctx)]), 0);
    }

    #[test]
    fn spanning_set_examples() {
        let ctx = ctx5();
        let got = monomial_spanning_set(&[x(ctx), y(ctx)]).unwrap().unwrap();
        assert_eq!(
            got,
            vec![Monomial::reduced(ctx, 0, 1), Monomial::reduced(ctx, 1, 0)]
        );
        assert_eq!(monomial_spanning_set(&[&x(ctx) + &y(ctx)]).unwrap(), None);
        let got = monomial_spanning_set(&[&x(ctx) + &y(ctx), &x(ctx) - &y(ctx)])
            .unwrap()
            .unwrap();
        assert_eq!(
            got,
            vec![Monomial::reduced(ctx, 0, 1), Monomial::reduced(ctx, 1, 0)]
        );
    }

    #[test]
    fn center_poly_exact_division() {
        let ctx = ctx5();
        let a = &CenterPoly::term(ctx, 1, 0, CycInt::one(ctx))
            + &CenterPoly::from_cyc(ctx, rho(ctx, 2));
        let b = &CenterPoly::term(ctx, 2, 1, CycInt::from_int(ctx, 3))
            - &CenterPoly::term(ctx, 0, 1, rho(ctx, 1));
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        let non_divisor = &a + &CenterPoly::one(ctx);
        assert_eq!(prod.exact_div(&non_divisor), None);
    }
}
