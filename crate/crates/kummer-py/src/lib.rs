//! Python bindings for the Kummer space toolkit.
//!
//! The module exposes a plain functional surface over built-in Python
//! types so no wrapper classes are needed on either side:
//!
//! * vectors in `(Z/p)²` are `(a, b)` tuples of integers (reduced mod `p`
//!   on entry);
//! * reduced algebra elements are lists of `(x, y, alpha, beta, coeffs)`
//!   term tuples, where `coeffs` is a list of `p − 1` integers over the
//!   power basis `ρ^0, …, ρ^{p−2}` (arbitrary precision is preserved);
//! * verdicts come back as booleans, tuples, and dicts.
//!
//! Every fallible operation raises `ValueError` with the Rust error text.

use kummer_core::{
    AlgElement, CycInt, EnumerationMode, Monomial, MonomialSpace, PrimeCtx, SpaceVerdict, SymTuple,
    Vec2p, ZeroSumWitness,
};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

/// A reduced-element term `(x, y, alpha, beta, coeffs)` as passed from
/// Python; `coeffs` lists the cyclotomic coordinates over `ρ^0, …, ρ^{p−2}`.
type TermTuple = (u32, u32, u32, u32, Vec<BigInt>);

fn ctx(p: u32) -> PyResult<PrimeCtx> {
    PrimeCtx::new(p).map_err(value_err)
}

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vectors(ctx: PrimeCtx, pairs: &[(i64, i64)]) -> Vec<Vec2p> {
    pairs.iter().map(|&(a, b)| Vec2p::new(ctx, a, b)).collect()
}

fn pair(v: &Vec2p) -> (u32, u32) {
    (v.a(), v.b())
}

fn element(ctx: PrimeCtx, terms: &[TermTuple]) -> PyResult<AlgElement> {
    let width = (ctx.p() - 1) as usize;
    let mut out = AlgElement::zero(ctx);
    for &(x, y, alpha, beta, ref coeffs) in terms {
        if coeffs.len() != width {
            return Err(PyValueError::new_err(format!(
                "coefficient vector must have length {width} (p − 1), got {}",
                coeffs.len()
            )));
        }
        out.add_raw_term(x, y, alpha, beta, CycInt::from_coords(ctx, coeffs.clone()));
    }
    Ok(out)
}

fn basis(ctx: PrimeCtx, elements: &[Vec<TermTuple>]) -> PyResult<Vec<AlgElement>> {
    elements.iter().map(|terms| element(ctx, terms)).collect()
}

fn witness_dict<'py>(py: Python<'py>, w: &ZeroSumWitness) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("weight", w.weight())?;
    let items: Vec<((u32, u32), u32)> = w
        .multiplicities()
        .iter()
        .map(|(v, &m)| (pair(v), m))
        .collect();
    dict.set_item("multiplicities", items)?;
    Ok(dict)
}

/// The minimal zero-sum witness over a set of vectors, or `None` when the
/// set admits no zero-sum of weight below `p` (i.e. is Kummer).
///
/// The witness is a dict `{"weight": int, "multiplicities": [((a, b), m), …]}`.
#[pyfunction]
fn min_zero_sum(
    py: Python<'_>,
    p: u32,
    vectors_in: Vec<(i64, i64)>,
) -> PyResult<Option<Py<PyDict>>> {
    let c = ctx(p)?;
    let vs = vectors(c, &vectors_in);
    match kummer_core::min_zero_sum(c, &vs).map_err(value_err)? {
        None => Ok(None),
        Some(w) => Ok(Some(witness_dict(py, &w)?.unbind())),
    }
}

/// Whether the span of the given monomials (as vectors in `(Z/p)²`) is a
/// Kummer space. Use [`min_zero_sum`] to retrieve the witness when not.
#[pyfunction]
fn is_kummer_monomial(p: u32, vectors_in: Vec<(i64, i64)>) -> PyResult<bool> {
    let c = ctx(p)?;
    let vs = vectors(c, &vectors_in);
    Ok(kummer_core::is_kummer_monomial(c, &vs)
        .map_err(value_err)?
        .is_kummer())
}

/// The least `k ∈ [1, p)` with `res(ka) + res(kb) + res(−k) < p`, deciding
/// the three-dimensional space spanned by `x`, `y`, `x^a y^b`; `None` when
/// the space is Kummer. Both `a` and `b` must be nonzero mod `p`.
#[pyfunction]
fn dim3_residue_witness(p: u32, a: i64, b: i64) -> PyResult<Option<u32>> {
    let c = ctx(p)?;
    kummer_core::dim3_residue_witness(c, a, b).map_err(value_err)
}

/// The first `(m, ℓ)` in row-major order over `[0, p)²` witnessing that the
/// four-dimensional space spanned by `x`, `y`, and the two given monomials
/// is not Kummer, or `None`. Both vectors must be nonzero mod `p`.
#[pyfunction]
fn dim4_witness(p: u32, v1: (i64, i64), v2: (i64, i64)) -> PyResult<Option<(u32, u32)>> {
    let c = ctx(p)?;
    let w1 = Vec2p::new(c, v1.0, v1.1);
    let w2 = Vec2p::new(c, v2.0, v2.1);
    if w1.is_zero() || w2.is_zero() {
        return Err(PyValueError::new_err(
            "dim4 witness vectors must be nonzero mod p",
        ));
    }
    Ok(kummer_core::dim4_witness(c, &w1, &w2))
}

/// The least `k ∈ [1, p)` with `res(ka) + res(kb) + res(kc) < p`, or `None`.
#[pyfunction]
fn index_witness(p: u32, a: i64, b: i64, c: i64) -> PyResult<Option<u32>> {
    let cx = ctx(p)?;
    Ok(kummer_core::index_witness(cx, a, b, c))
}

/// Whether `(a, b, c)` satisfies the index-witness hypotheses: all entries,
/// all pairwise sums, and the total sum nonzero mod `p`.
#[pyfunction]
fn admissible_triple(p: u32, a: i64, b: i64, c: i64) -> PyResult<bool> {
    let cx = ctx(p)?;
    Ok(kummer_core::admissible_triple(cx, a, b, c))
}

/// The standard space of `(u, k)`: `u` together with the `p` vectors `v`
/// satisfying `comm(v, u) = k`, sorted ascending — `p + 1` vectors total.
/// Requires `u` nonzero mod `p` and `k ∈ [1, p)`.
#[pyfunction]
fn standard_space(p: u32, u: (i64, i64), k: u32) -> PyResult<Vec<(u32, u32)>> {
    let c = ctx(p)?;
    let uv = Vec2p::new(c, u.0, u.1);
    if uv.is_zero() {
        return Err(PyValueError::new_err(
            "standard space requires a vector that is nonzero mod p",
        ));
    }
    if k == 0 || k >= p {
        return Err(PyValueError::new_err(format!(
            "standard space requires k in [1, p), got {k}"
        )));
    }
    Ok(kummer_core::standard_space(&uv, k)
        .vectors()
        .iter()
        .map(pair)
        .collect())
}

/// The least `((u_a, u_b), k)` whose standard space contains the given
/// vectors, or `None` when the space is not standard.
#[pyfunction]
fn standardness_certificate(
    p: u32,
    vectors_in: Vec<(i64, i64)>,
) -> PyResult<Option<((u32, u32), u32)>> {
    let c = ctx(p)?;
    let vs = vectors(c, &vectors_in);
    let space = MonomialSpace::new(c, &vs).map_err(value_err)?;
    Ok(kummer_core::standardness_certificate(&space).map(|cert| (pair(&cert.u()), cert.k())))
}

/// Structural classification of the space spanned by three monomials:
/// `(is_kummer, condition)` where `condition` is the matched token
/// (`"difference_on_line_i_j_k"` or `"common_difference_line"`) or `None`.
#[pyfunction]
fn classify_triple(
    p: u32,
    v1: (i64, i64),
    v2: (i64, i64),
    v3: (i64, i64),
) -> PyResult<(bool, Option<String>)> {
    let c = ctx(p)?;
    let w1 = Vec2p::new(c, v1.0, v1.1);
    let w2 = Vec2p::new(c, v2.0, v2.1);
    let w3 = Vec2p::new(c, v3.0, v3.1);
    let verdict = kummer_core::classify_triple(&w1, &w2, &w3).map_err(value_err)?;
    Ok((
        verdict.is_kummer(),
        verdict.condition().map(|cond| cond.to_string()),
    ))
}

/// All maximal Kummer spaces of monomials for the given prime, each as a
/// dict `{"space": [(a, b), …], "certificate": {"u": (a, b), "k": int}}`,
/// sorted by vector set. Exhaustive search supports `p ≤ 7`; pass
/// `symmetry=True` for the orbit-expanded search supporting `p ≤ 13`.
#[pyfunction]
#[pyo3(signature = (p, symmetry = false))]
fn enumerate_maximal(py: Python<'_>, p: u32, symmetry: bool) -> PyResult<Vec<Py<PyDict>>> {
    let c = ctx(p)?;
    let mode = if symmetry {
        EnumerationMode::SymmetryReduced
    } else {
        EnumerationMode::Exhaustive
    };
    let spaces = kummer_core::enumerate_maximal(c, mode).map_err(value_err)?;
    let mut out = Vec::with_capacity(spaces.len());
    for (space, cert) in spaces {
        let entry = PyDict::new(py);
        let vecs: Vec<(u32, u32)> = space.vectors().iter().map(pair).collect();
        entry.set_item("space", vecs)?;
        let certificate = PyDict::new(py);
        certificate.set_item("u", pair(&cert.u()))?;
        certificate.set_item("k", cert.k())?;
        entry.set_item("certificate", certificate)?;
        out.push(entry.unbind());
    }
    Ok(out)
}

/// Whether a Kummer monomial space is maximal: no vector outside it can be
/// added while keeping the set Kummer. Raises when the input is not Kummer.
#[pyfunction]
fn is_maximal(p: u32, vectors_in: Vec<(i64, i64)>) -> PyResult<bool> {
    let c = ctx(p)?;
    let vs = vectors(c, &vectors_in);
    let space = MonomialSpace::new(c, &vs).map_err(value_err)?;
    kummer_core::is_maximal(&space).map_err(value_err)
}

/// Whether a single reduced element (a list of term tuples) is Kummer:
/// the reduced traces of `v, v², …, v^{p−1}` all vanish.
#[pyfunction]
fn is_kummer_element(p: u32, terms: Vec<TermTuple>) -> PyResult<bool> {
    let c = ctx(p)?;
    let v = element(c, &terms)?;
    kummer_core::is_kummer_element(&v).map_err(value_err)
}

/// Whether the span of a basis of reduced elements is a Kummer space:
/// `(is_kummer, witness)` where `witness` is the violating multiplicity
/// tuple (aligned with the basis) when the verdict is negative.
///
/// `criterion` selects the probe: `"trace"` (symmetrized traces) or
/// `"power"` (symmetrized products staying central).
#[pyfunction]
#[pyo3(signature = (p, elements, criterion = "trace"))]
fn is_kummer_space(
    p: u32,
    elements: Vec<Vec<TermTuple>>,
    criterion: &str,
) -> PyResult<(bool, Option<Vec<u32>>)> {
    let c = ctx(p)?;
    let b = basis(c, &elements)?;
    let verdict = match criterion {
        "trace" => kummer_core::is_kummer_space_trace(&b),
        "power" => kummer_core::is_kummer_space_power(&b),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown criterion {other:?}; expected \"trace\" or \"power\""
            )))
        }
    }
    .map_err(value_err)?;
    Ok(match verdict {
        SpaceVerdict::Kummer => (true, None),
        SpaceVerdict::NotKummer { witness } => (false, Some(witness.counts().to_vec())),
    })
}

/// Runs the degeneration pipeline on a basis of reduced elements and
/// returns the certified facts as a dict with keys `dimension`, `bound`,
/// `degeneration` (sorted class vectors), `degeneration_kummer`,
/// `input_kummer`, `within_bound`, and `mp_defect`.
#[pyfunction]
fn degeneration_report(
    py: Python<'_>,
    p: u32,
    elements: Vec<Vec<TermTuple>>,
) -> PyResult<Py<PyDict>> {
    let c = ctx(p)?;
    let b = basis(c, &elements)?;
    let report = kummer_core::degeneration_report(c, &b).map_err(value_err)?;
    let dict = PyDict::new(py);
    dict.set_item("dimension", report.dimension())?;
    dict.set_item("bound", report.bound())?;
    let degeneration: Vec<(u32, u32)> = report.degeneration().iter().map(pair).collect();
    dict.set_item("degeneration", degeneration)?;
    dict.set_item(
        "degeneration_kummer",
        report.degeneration_verdict().is_kummer(),
    )?;
    dict.set_item("input_kummer", report.input_verdict().is_kummer())?;
    dict.set_item("within_bound", report.within_bound())?;
    dict.set_item("mp_defect", report.mp_defect())?;
    Ok(dict.unbind())
}

/// The cyclotomic scalar `c` with `sym(m_1^{i_1}, …, m_t^{i_t}) = c · m_1^{i_1}·…·m_t^{i_t}`
/// for monomials `m_k = x^{a_k} y^{b_k}`, as its coordinate list over
/// `ρ^0, …, ρ^{p−2}`. The total weight `Σ i_k` must not exceed `p`.
#[pyfunction]
fn monomial_sym_coeff(
    p: u32,
    monomials: Vec<(i64, i64)>,
    counts: Vec<u32>,
) -> PyResult<Vec<BigInt>> {
    let c = ctx(p)?;
    let ms: Vec<Monomial> = monomials
        .iter()
        .map(|&(a, b)| Monomial::reduced(c, a, b))
        .collect();
    let coeff =
        kummer_core::monomial_sym_coeff(c, &ms, &SymTuple::new(counts)).map_err(value_err)?;
    Ok(coeff.coords().to_vec())
}

#[pymodule]
fn kummer_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("MAX_PRIME", kummer_core::MAX_PRIME)?;
    m.add_function(wrap_pyfunction!(min_zero_sum, m)?)?;
    m.add_function(wrap_pyfunction!(is_kummer_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(dim3_residue_witness, m)?)?;
    m.add_function(wrap_pyfunction!(dim4_witness, m)?)?;
    m.add_function(wrap_pyfunction!(index_witness, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_triple, m)?)?;
    m.add_function(wrap_pyfunction!(standard_space, m)?)?;
    m.add_function(wrap_pyfunction!(standardness_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(classify_triple, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_maximal, m)?)?;
    m.add_function(wrap_pyfunction!(is_maximal, m)?)?;
    m.add_function(wrap_pyfunction!(is_kummer_element, m)?)?;
    m.add_function(wrap_pyfunction!(is_kummer_space, m)?)?;
    m.add_function(wrap_pyfunction!(degeneration_report, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_sym_coeff, m)?)?;
    Ok(())
}
