//! Bounded biwords, the insertion map, and truncated verification of the
//! Cauchy identity.
//!
//! Expanding the Cauchy kernel in the differences `Y_d = y_d − y_{d+1}`
//! turns its degree-`p` part into a sum over biwords `(i_j; d_j)` with
//! `i_j ≤ d_j`. [`insert`] sends such a biword to a (compatible sequence,
//! labeled chain) pair sharing a target permutation by running one Monk
//! bijection step per letter; it is invertible step by step, which is the
//! bijective content of the identity.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::chains::{dual_schubert, LabeledChain};
use crate::error::{Error, Result};
use crate::permutation::{permutations_of_length, symmetric_group, Permutation, Transposition};
use crate::polynomial::{monomial_string, push_term, ExponentVector};
use crate::schubert::{monk_match, schubert, CompatibleSequence};

/// A biword `(i_1...i_n; d_1...d_n)` with `i_j ≤ d_j` for every `j` and no
/// ordering constraint across positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BoundedBiwordRepr", into = "BoundedBiwordRepr")]
pub struct BoundedBiword {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct BoundedBiwordRepr {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl From<BoundedBiword> for BoundedBiwordRepr {
    fn from(b: BoundedBiword) -> Self {
        BoundedBiwordRepr { top: b.top, bottom: b.bottom }
    }
}

impl TryFrom<BoundedBiwordRepr> for BoundedBiword {
    type Error = Error;
    fn try_from(r: BoundedBiwordRepr) -> Result<Self> {
        BoundedBiword::new(r.top, r.bottom)
    }
}

impl BoundedBiword {
    pub fn empty() -> Self {
        BoundedBiword { top: Vec::new(), bottom: Vec::new() }
    }

    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Input("biword rows differ in length".into()));
        }
        for (j, (&i, &d)) in top.iter().zip(&bottom).enumerate() {
            if i == 0 || d == 0 {
                return Err(Error::Input("biword entries must be positive".into()));
            }
            if i > d {
                return Err(Error::Input(format!(
                    "bounded biword requires i_j <= d_j, got ({i}, {d}) at position {j}"
                )));
            }
        }
        Ok(BoundedBiword { top, bottom })
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    /// The label row `d_1, ..., d_n`.
    pub fn labels(&self) -> &[usize] {
        &self.bottom
    }
}

/// All bounded biwords of length `n` with labels at most `m`, ordered
/// lexicographically by their pair sequence; there are `(m(m+1)/2)^n`.
pub fn enumerate_bounded_biwords(n: usize, m: usize) -> Vec<BoundedBiword> {
    let mut alphabet: Vec<(usize, usize)> = Vec::new();
    for d in 1..=m {
        for i in 1..=d {
            alphabet.push((i, d));
        }
    }
    alphabet.sort_unstable();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize)> = Vec::new();
    fn rec(
        alphabet: &[(usize, usize)],
        n: usize,
        stack: &mut Vec<(usize, usize)>,
        out: &mut Vec<BoundedBiword>,
    ) {
        if stack.len() == n {
            out.push(BoundedBiword {
                top: stack.iter().map(|p| p.0).collect(),
                bottom: stack.iter().map(|p| p.1).collect(),
            });
            return;
        }
        for &pair in alphabet {
            stack.push(pair);
            rec(alphabet, n, stack, out);
            stack.pop();
        }
    }
    rec(&alphabet, n, &mut stack, &mut out);
    out
}

/// Support bound sufficient for inserting `b`: covers every intermediate
/// permutation the chain can reach.
pub fn insert_support_bound(b: &BoundedBiword) -> usize {
    b.labels().iter().copied().max().unwrap_or(0) + b.len() + 1
}

/// Output of the insertion map: a compatible sequence (the insertion
/// object) and a labeled chain from the identity (the recording object)
/// sharing a target permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "InsertionResultRepr", into = "InsertionResultRepr")]
pub struct InsertionResult {
    target: Permutation,
    record: CompatibleSequence,
    chain: LabeledChain,
}

#[derive(Serialize, Deserialize)]
struct InsertionResultRepr {
    target: Permutation,
    record: CompatibleSequence,
    chain: LabeledChain,
}

impl From<InsertionResult> for InsertionResultRepr {
    fn from(r: InsertionResult) -> Self {
        InsertionResultRepr { target: r.target, record: r.record, chain: r.chain }
    }
}

impl TryFrom<InsertionResultRepr> for InsertionResult {
    type Error = Error;
    fn try_from(r: InsertionResultRepr) -> Result<Self> {
        let built = InsertionResult::new(r.record, r.chain)?;
        if built.target != r.target {
            return Err(Error::Input(format!(
                "target {} does not match chain endpoint {}",
                r.target, built.target
            )));
        }
        Ok(built)
    }
}

impl InsertionResult {
    pub fn new(record: CompatibleSequence, chain: LabeledChain) -> Result<Self> {
        if !chain.start().is_identity() {
            return Err(Error::Input(format!(
                "insertion chains start at the identity, got {}",
                chain.start()
            )));
        }
        let target = chain.end().clone();
        if record.target() != target {
            return Err(Error::Input(format!(
                "record is a compatible sequence for {}, chain ends at {}",
                record.target(),
                target
            )));
        }
        Ok(InsertionResult { target, record, chain })
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    pub fn record(&self) -> &CompatibleSequence {
        &self.record
    }

    pub fn chain(&self) -> &LabeledChain {
        &self.chain
    }
}

/// The transposition turning `source` into the cover `target`.
fn cover_transposition(source: &Permutation, target: &Permutation) -> Transposition {
    let n = source.support().max(target.support());
    let diff: Vec<usize> = (1..=n).filter(|&i| source.apply(i) != target.apply(i)).collect();
    debug_assert_eq!(diff.len(), 2);
    Transposition { a: diff[0], b: diff[1] }
}

/// Insert a bounded biword: one Monk-bijection step per letter, with the
/// compatible sequence carried forward and the `d_j`-labeled cover recorded.
pub fn insert(b: &BoundedBiword, n: usize) -> Result<InsertionResult> {
    let mut record = CompatibleSequence::empty();
    let mut chain = LabeledChain::trivial(Permutation::identity());
    let mut current = Permutation::identity();
    for (&i, &d) in b.top.iter().zip(&b.bottom) {
        let cert = monk_match(d, &current, n)?;
        let (target, to) = cert.image_of(i, &record).ok_or_else(|| {
            Error::Inconsistency(format!(
                "Monk bijection for (k = {d}, v = {current}) is missing ({i}, record)"
            ))
        })?;
        let t = cover_transposition(&current, target);
        let (target, to) = (target.clone(), to.clone());
        chain.push(t, d)?;
        record = to;
        current = target;
    }
    InsertionResult::new(record, chain)
}

/// Invert [`insert`] by peeling Monk-bijection steps from the end of the
/// chain. Fails with an input error when the pair is not a well-formed
/// (record, chain) couple for one permutation.
pub fn inverse_insert(r: &InsertionResult, n: usize) -> Result<BoundedBiword> {
    let mut top_rev = Vec::new();
    let mut bottom_rev = Vec::new();
    let mut record = r.record.clone();
    for step in r.chain.steps().iter().rev() {
        let d = step.label();
        let cert = monk_match(d, step.edge().source(), n)?;
        let (i, prev) = cert.preimage_of(step.edge().target(), &record).ok_or_else(|| {
            Error::NotInImage(format!(
                "({}, record) has no preimage under the Monk bijection at (k = {d}, v = {})",
                step.edge().target(),
                step.edge().source()
            ))
        })?;
        top_rev.push(i);
        bottom_rev.push(d);
        record = prev.clone();
    }
    if !record.is_empty() {
        return Err(Error::NotInImage(
            "record does not unwind to the empty sequence".into(),
        ));
    }
    top_rev.reverse();
    bottom_rev.reverse();
    BoundedBiword::new(top_rev, bottom_rev)
}

/// Bivariate term map keyed by paired (x-exponents, y-exponents).
type Bivariate = BTreeMap<(ExponentVector, ExponentVector), BigRational>;

fn render_bivariate(map: &Bivariate) -> String {
    if map.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, ((xe, ye), coeff)) in map.iter().rev().enumerate() {
        let mono = match (monomial_string(xe, 'x'), monomial_string(ye, 'y')) {
            (Some(x), Some(y)) => Some(format!("{x}*{y}")),
            (Some(x), None) => Some(x),
            (None, Some(y)) => Some(y),
            (None, None) => None,
        };
        push_term(&mut out, idx == 0, coeff, mono);
    }
    out
}

/// Degree-`p` homogeneous part of `e^{x1 y1 + ... + xm ym}`:
/// `Σ_{|β| = p} x^β y^β / β!`.
fn kernel_component(m: usize, p: usize) -> Bivariate {
    let mut out = Bivariate::new();
    let mut beta = vec![0u32; m];
    fn rec(beta: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Bivariate) {
        if pos == beta.len() {
            if remaining == 0 {
                let ev = ExponentVector::new(beta.clone());
                let coeff = BigRational::new(One::one(), ev.factorial());
                out.insert((ev.clone(), ev), coeff);
            }
            return;
        }
        for e in 0..=remaining {
            beta[pos] = e;
            rec(beta, pos + 1, remaining - e, out);
            beta[pos] = 0;
        }
    }
    rec(&mut beta, 0, p as u32, &mut out);
    out
}

/// `Σ_{l(w) = p} P_m(S_w)(x) · P_m(D_w)(y)` over `w` supported in `S_n`.
fn schubert_dual_component(m: usize, p: usize, n: usize) -> Result<Bivariate> {
    let identity = Permutation::identity();
    let mut out = Bivariate::new();
    for w in permutations_of_length(p, n)? {
        let sx = schubert(&w).project(m);
        if sx.is_zero() {
            continue;
        }
        let dy = dual_schubert(&identity, &w, n)?.project(m);
        if dy.is_zero() {
            continue;
        }
        for (xe, xc) in sx.terms() {
            for (ye, yc) in dy.terms() {
                let entry = out
                    .entry((xe.clone(), ye.clone()))
                    .or_insert_with(BigRational::zero);
                *entry += xc * yc;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Exact comparison of the degree-`p` Cauchy kernel component in `m`
/// variables against the Schubert/dual-Schubert sum.
#[derive(Debug, Clone, Serialize)]
pub struct CauchyReport {
    pub m: usize,
    pub p: usize,
    pub support: usize,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Verify the Cauchy identity at `m` variables in degree `p`. The sum over
/// permutations runs at support bound `m + p + 1` and is recomputed at
/// `m + p + 2` as a stabilization guard; disagreement there is an internal
/// error rather than a verification failure.
pub fn verify_cauchy(m: usize, p: usize) -> Result<CauchyReport> {
    if m == 0 {
        return Err(Error::Input("need at least one variable".into()));
    }
    let support = m + p + 1;
    let rhs = schubert_dual_component(m, p, support)?;
    let guard = schubert_dual_component(m, p, support + 1)?;
    if rhs != guard {
        return Err(Error::Inconsistency(format!(
            "Cauchy sum changed between support {support} and {}: {} vs {}",
            support + 1,
            render_bivariate(&rhs),
            render_bivariate(&guard)
        )));
    }
    let lhs = kernel_component(m, p);
    let pass = lhs == rhs;
    Ok(CauchyReport {
        m,
        p,
        support,
        lhs: render_bivariate(&lhs),
        rhs: render_bivariate(&rhs),
        pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityFailure {
    pub u: Permutation,
    pub w: Permutation,
    pub value: String,
}

/// The full pairing matrix `⟨S_u, D_w⟩` over `S_n`; `pass` means it is the
/// identity matrix.
#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub n: usize,
    pub pairs: u64,
    pub failures: Vec<DualityFailure>,
    pub pass: bool,
}

pub fn verify_duality(n: usize) -> Result<DualityReport> {
    if n == 0 {
        return Err(Error::Input("need n >= 1".into()));
    }
    let identity = Permutation::identity();
    let group = symmetric_group(n);
    let schuberts: Vec<_> = group.iter().map(schubert).collect();
    let duals: Vec<_> = group
        .iter()
        .map(|w| dual_schubert(&identity, w, n))
        .collect::<Result<_>>()?;

    let mut failures = Vec::new();
    let mut pairs = 0u64;
    for (u, su) in group.iter().zip(&schuberts) {
        for (w, dw) in group.iter().zip(&duals) {
            pairs += 1;
            let value = su.inner_product(dw);
            let expected = if u == w { BigRational::one() } else { BigRational::zero() };
            if value != expected {
                failures.push(DualityFailure {
                    u: u.clone(),
                    w: w.clone(),
                    value: value.to_string(),
                });
            }
        }
    }
    let pass = failures.is_empty();
    Ok(DualityReport { n, pairs, failures, pass })
}
