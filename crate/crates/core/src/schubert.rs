//! Schubert polynomials and Monk expansion.
//!
//! Two independent routes compute the same polynomial: the
//! Billey–Jockusch–Stanley sum over reduced compatible sequences
//! ([`schubert`]) and a divided-difference recursion from the longest
//! element ([`schubert_oracle`]). Monk's rule is exposed both as the cover
//! expansion ([`monk_expand`]) and as an explicit weight-preserving
//! bijection on compatible sequences ([`monk_match`]).

use std::collections::BTreeMap;

use num::{BigRational, One, Signed};
use serde::{Deserialize, Serialize};

use crate::chains::dual_schubert;
use crate::error::{Error, Result};
use crate::permutation::{k_bruhat_covers, longest_element, Permutation};
use crate::polynomial::{Alphabet, ExponentVector, Polynomial};

/// A reduced compatible sequence: the biword `(i_1...i_p; a_1...a_p)` with
/// `a` a reduced word, `i` weakly increasing, `i_j <= a_j`, and `i` strictly
/// increasing across ascents of `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CompatibleSequenceRepr", into = "CompatibleSequenceRepr")]
pub struct CompatibleSequence {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CompatibleSequenceRepr {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl From<CompatibleSequence> for CompatibleSequenceRepr {
    fn from(c: CompatibleSequence) -> Self {
        CompatibleSequenceRepr { top: c.top, bottom: c.bottom }
    }
}

impl TryFrom<CompatibleSequenceRepr> for CompatibleSequence {
    type Error = Error;
    fn try_from(r: CompatibleSequenceRepr) -> Result<Self> {
        CompatibleSequence::new(r.top, r.bottom)
    }
}

impl CompatibleSequence {
    pub fn empty() -> Self {
        CompatibleSequence { top: Vec::new(), bottom: Vec::new() }
    }

    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Input("biword rows differ in length".into()));
        }
        let w = Permutation::from_word(&bottom);
        if w.length() != bottom.len() {
            return Err(Error::Input(format!(
                "bottom row {bottom:?} is not a reduced word"
            )));
        }
        for j in 0..top.len() {
            if top[j] == 0 {
                return Err(Error::Input("top row entries must be positive".into()));
            }
            if top[j] > bottom[j] {
                return Err(Error::Input(format!(
                    "compatibility violated: i_{j} = {} > a_{j} = {}",
                    top[j], bottom[j]
                )));
            }
            if j > 0 {
                if top[j - 1] > top[j] {
                    return Err(Error::Input("top row must be weakly increasing".into()));
                }
                if bottom[j - 1] < bottom[j] && top[j - 1] >= top[j] {
                    return Err(Error::Input(
                        "top row must increase strictly across word ascents".into(),
                    ));
                }
            }
        }
        Ok(CompatibleSequence { top, bottom })
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

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// The permutation whose reduced word is the bottom row.
    pub fn target(&self) -> Permutation {
        Permutation::from_word(&self.bottom)
    }

    /// Exponent vector of `x_{i_1} ⋯ x_{i_p}`.
    pub fn weight(&self) -> ExponentVector {
        let mut exps = vec![0u32; self.top.iter().copied().max().unwrap_or(0)];
        for &i in &self.top {
            exps[i - 1] += 1;
        }
        ExponentVector::new(exps)
    }
}

/// All reduced compatible sequences for `w`, in (top, bottom) lex order.
pub fn compatible_sequences(w: &Permutation) -> Vec<CompatibleSequence> {
    let mut out = Vec::new();
    for word in w.reduced_words() {
        extend_tops(&word, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

fn extend_tops(word: &[usize], top: &mut Vec<usize>, out: &mut Vec<CompatibleSequence>) {
    let j = top.len();
    if j == word.len() {
        out.push(CompatibleSequence { top: top.clone(), bottom: word.to_vec() });
        return;
    }
    let lower = if j == 0 {
        1
    } else if word[j - 1] < word[j] {
        top[j - 1] + 1
    } else {
        top[j - 1]
    };
    for i in lower..=word[j] {
        top.push(i);
        extend_tops(word, top, out);
        top.pop();
    }
}

/// Schubert polynomial by the Billey–Jockusch–Stanley formula: the sum of
/// `x`-weights over all reduced compatible sequences.
pub fn schubert(w: &Permutation) -> Polynomial {
    Polynomial::from_terms(
        Alphabet::X,
        compatible_sequences(w)
            .into_iter()
            .map(|c| (c.weight(), BigRational::one())),
    )
}

/// Divided difference `∂_i f = (f − s_i f) / (x_i − x_{i+1})`, computed
/// term by term with the exact telescoping quotient.
pub fn divided_difference(f: &Polynomial, i: usize) -> Polynomial {
    assert!(i >= 1);
    let mut terms: Vec<(ExponentVector, BigRational)> = Vec::new();
    for (ev, c) in f.terms() {
        let a = ev.exponent(i);
        let b = ev.exponent(i + 1);
        if a == b {
            continue;
        }
        let n = ev.exponents().len().max(i + 1);
        let mut base = vec![0u32; n];
        base[..ev.exponents().len()].copy_from_slice(ev.exponents());
        if a > b {
            for j in 0..(a - b) {
                let mut exps = base.clone();
                exps[i - 1] = a - 1 - j;
                exps[i] = b + j;
                terms.push((ExponentVector::new(exps), c.clone()));
            }
        } else {
            for j in 0..(b - a) {
                let mut exps = base.clone();
                exps[i - 1] = b - 1 - j;
                exps[i] = a + j;
                terms.push((ExponentVector::new(exps), -c.clone()));
            }
        }
    }
    Polynomial::from_terms(f.alphabet(), terms)
}

/// One reduced word, built greedily from the smallest descent.
fn a_reduced_word(w: &Permutation) -> Vec<usize> {
    let mut v = w.clone();
    let mut rev = Vec::new();
    while !v.is_identity() {
        let k = v.descents()[0];
        rev.push(k);
        v = v.compose(&Permutation::simple(k));
    }
    rev.reverse();
    rev
}

/// Independent route to the Schubert polynomial: start from
/// `S_{w_0} = x_1^{n-1} x_2^{n-2} ⋯ x_{n-1}` for the longest element of the
/// smallest `S_n` containing `w` and apply divided differences along a
/// reduced word of `w^{-1} w_0`. The result does not depend on the word.
pub fn schubert_oracle(w: &Permutation) -> Polynomial {
    let n = w.support().max(1);
    let w0 = longest_element(n);
    let staircase = ExponentVector::new((0..n - 1).map(|i| (n - 1 - i) as u32).collect());
    let mut f = Polynomial::monomial(staircase, BigRational::one(), Alphabet::X);
    let word = a_reduced_word(&w.inverse().compose(&w0));
    for &i in word.iter().rev() {
        f = divided_difference(&f, i);
    }
    f
}

/// Smallest support bound guaranteed to contain every `k`-Bruhat cover
/// target of `v`.
pub fn monk_support_bound(v: &Permutation, k: usize) -> usize {
    v.support().max(k) + 1
}

/// Targets of the `k`-Bruhat covers of `v`, sorted. By Monk's rule,
/// `S_{s_k} · S_v` equals the sum of their Schubert polynomials.
///
/// The covers are found at the provably sufficient bound
/// [`monk_support_bound`]; if any target then falls outside `S_N`, the given
/// bound misses part of the expansion and is rejected.
pub fn monk_expand(k: usize, v: &Permutation, n: usize) -> Result<Vec<Permutation>> {
    if k == 0 {
        return Err(Error::Input("Monk index k must be positive".into()));
    }
    let enough = monk_support_bound(v, k).max(n);
    let mut targets = Vec::new();
    let mut required = v.support();
    for edge in k_bruhat_covers(v, k, enough)? {
        required = required.max(edge.target().support());
        targets.push(edge.target().clone());
    }
    if required > n {
        return Err(Error::SupportBound {
            required,
            given: n,
            context: format!("monk_expand(k = {k}, v = {v})"),
        });
    }
    targets.sort();
    Ok(targets)
}

/// Apply Monk expansion along the label vector `d`, accumulating
/// multiplicities: `w` ends with multiplicity `|C_d(u, w)|`.
pub fn iterated_monk(
    d: &[usize],
    u: &Permutation,
    n: usize,
) -> Result<BTreeMap<Permutation, u64>> {
    let mut current: BTreeMap<Permutation, u64> = BTreeMap::new();
    current.insert(u.clone(), 1);
    for &k in d {
        let mut next: BTreeMap<Permutation, u64> = BTreeMap::new();
        for (v, mult) in &current {
            for w in monk_expand(k, v, n)? {
                *next.entry(w).or_insert(0) += mult;
            }
        }
        current = next;
    }
    Ok(current)
}

/// One matched pair of the Monk bijection: `(j, from)` on the left maps to
/// `(target, to)` on the right with `weight(to) = x_j · weight(from)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonkPair {
    pub j: usize,
    pub from: CompatibleSequence,
    pub target: Permutation,
    pub to: CompatibleSequence,
}

/// Certificate for the bijection `[k] × RC(v) → ⋃_{v →^k w} RC(w)`.
///
/// Both sides are grouped by monomial weight and matched in lexicographic
/// order inside each weight class; a class size mismatch would contradict
/// Monk's formula and raises an internal-inconsistency error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonkCertificate {
    pub k: usize,
    pub source: Permutation,
    pub pairs: Vec<MonkPair>,
}

impl MonkCertificate {
    pub fn image_of(
        &self,
        j: usize,
        from: &CompatibleSequence,
    ) -> Option<(&Permutation, &CompatibleSequence)> {
        self.pairs
            .iter()
            .find(|p| p.j == j && &p.from == from)
            .map(|p| (&p.target, &p.to))
    }

    pub fn preimage_of(
        &self,
        target: &Permutation,
        to: &CompatibleSequence,
    ) -> Option<(usize, &CompatibleSequence)> {
        self.pairs
            .iter()
            .find(|p| &p.target == target && &p.to == to)
            .map(|p| (p.j, &p.from))
    }
}

type WeightClass = (
    Vec<(usize, CompatibleSequence)>,
    Vec<(Permutation, CompatibleSequence)>,
);

/// Construct the canonical weight-preserving bijection certifying Monk's
/// rule for `S_{s_k} · S_v`.
pub fn monk_match(k: usize, v: &Permutation, n: usize) -> Result<MonkCertificate> {
    let targets = monk_expand(k, v, n)?;

    let mut classes: BTreeMap<ExponentVector, WeightClass> = BTreeMap::new();

    for c in compatible_sequences(v) {
        let base = c.weight();
        for j in 1..=k {
            let weight = base.mul(&ExponentVector::variable(j));
            classes.entry(weight).or_default().0.push((j, c.clone()));
        }
    }
    for w in &targets {
        for c in compatible_sequences(w) {
            classes
                .entry(c.weight())
                .or_default()
                .1
                .push((w.clone(), c));
        }
    }

    let mut pairs = Vec::new();
    for (weight, (mut domain, mut codomain)) in classes {
        if domain.len() != codomain.len() {
            return Err(Error::Inconsistency(format!(
                "Monk weight class {:?} has {} left elements but {} right elements \
                 (k = {k}, v = {v})",
                weight.exponents(),
                domain.len(),
                codomain.len()
            )));
        }
        domain.sort();
        codomain.sort();
        for ((j, from), (target, to)) in domain.into_iter().zip(codomain) {
            pairs.push(MonkPair { j, from, target, to });
        }
    }
    Ok(MonkCertificate { k, source: v.clone(), pairs })
}

/// Littlewood–Richardson coefficient `c^w_{uv} = ⟨S_u · S_v, D_w⟩`, computed
/// through the inner-product adjunction and asserted to be a non-negative
/// integer.
pub fn lr_coefficient(u: &Permutation, v: &Permutation, w: &Permutation) -> Result<u64> {
    let n = w.support().max(1);
    let dual = dual_schubert(&Permutation::identity(), w, n)?;
    let product = schubert(u).checked_mul(&schubert(v))?;
    let value = product.inner_product(&dual);
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Inconsistency(format!(
            "LR coefficient c^({w})_({u},{v}) evaluated to {value}, not a natural number"
        )));
    }
    u64::try_from(value.to_integer()).map_err(|_| {
        Error::Inconsistency(format!("LR coefficient c^({w})_({u},{v}) overflows u64"))
    })
}
