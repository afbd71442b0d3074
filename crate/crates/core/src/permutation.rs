//! Permutations of the positive integers with finite support.
//!
//! A permutation is stored in one-line notation as a window `[w(1),...,w(N)]`
//! with trailing fixed points trimmed, so every element of the infinite
//! symmetric group has a unique, hashable representation. Positions beyond
//! the window are fixed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::{Alphabet, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { window: Vec::new() }
    }

    /// The simple transposition `s_k` swapping `k` and `k+1`.
    pub fn simple(k: usize) -> Self {
        assert!(k >= 1, "generator indices are 1-based");
        let mut window: Vec<usize> = (1..=k + 1).collect();
        window.swap(k - 1, k);
        Permutation { window }
    }

    /// Build from one-line notation; the window must be a rearrangement of
    /// `{1, ..., N}`.
    pub fn from_window(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &v in &window {
            if v == 0 {
                return Err(Error::Input("window entries must be positive".into()));
            }
            if v > n {
                return Err(Error::Input(format!(
                    "window entry {v} exceeds window length {n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::Input(format!("repeated window entry {v}")));
            }
            seen[v - 1] = true;
        }
        let mut p = Permutation { window };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while let Some(&last) = self.window.last() {
            if last == self.window.len() {
                self.window.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// Canonical window (trailing fixed points trimmed).
    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Number of positions before the trailing fixed points; the smallest
    /// `N` with this permutation in `S_N` (0 for the identity).
    pub fn support(&self) -> usize {
        self.window.len()
    }

    /// Image of a 1-based position.
    pub fn apply(&self, i: usize) -> usize {
        assert!(i >= 1);
        self.window.get(i - 1).copied().unwrap_or(i)
    }

    /// Group product `self ∘ other`: `r(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.support().max(other.support());
        let mut p = Permutation {
            window: (1..=n).map(|i| self.apply(other.apply(i))).collect(),
        };
        p.trim();
        p
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v - 1] = i + 1;
        }
        Permutation { window }
    }

    /// Coxeter length: the number of inversions, which equals the minimal
    /// number of generators expressing the permutation.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `k` with `w(k) > w(k+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.window.len().max(1))
            .filter(|&k| self.apply(k) > self.apply(k + 1))
            .collect()
    }

    /// Right multiplication by the transposition `(a, b)`: swaps the window
    /// entries at positions `a` and `b`.
    pub fn swap_positions(&self, t: Transposition) -> Permutation {
        let n = self.support().max(t.b);
        let mut window: Vec<usize> = (1..=n).map(|i| self.apply(i)).collect();
        window.swap(t.a - 1, t.b - 1);
        let mut p = Permutation { window };
        p.trim();
        p
    }

    /// All reduced words `(a_1, ..., a_p)` with `s_{a_1} ⋯ s_{a_p}` equal to
    /// this permutation (left-to-right group product), lexicographically
    /// sorted.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        fn rec(w: &Permutation, out: &mut Vec<Vec<usize>>, suffix: &mut Vec<usize>) {
            if w.is_identity() {
                let mut word: Vec<usize> = suffix.clone();
                word.reverse();
                out.push(word);
                return;
            }
            for k in w.descents() {
                suffix.push(k);
                rec(&w.compose(&Permutation::simple(k)), out, suffix);
                suffix.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, &mut out, &mut Vec::new());
        out.sort();
        out
    }

    /// Replay a word of generator indices into a permutation.
    pub fn from_word(word: &[usize]) -> Permutation {
        word.iter()
            .fold(Permutation::identity(), |acc, &k| {
                acc.compose(&Permutation::simple(k))
            })
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.window
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(window: Vec<usize>) -> Result<Permutation> {
        Permutation::from_window(window)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        let window = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad window entry {part:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Permutation::from_window(window).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A transposition `(a, b)` with `a < b`, acting on positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transposition {
    pub a: usize,
    pub b: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a < 1 || a >= b {
            return Err(Error::Input(format!(
                "transposition requires 1 <= a < b, got ({a}, {b})"
            )));
        }
        Ok(Transposition { a, b })
    }
}

/// A Bruhat cover `source → target` with `target = source(a,b)` and
/// `length(target) = length(source) + 1`. The admissible labels are exactly
/// `a <= d < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverEdge {
    source: Permutation,
    target: Permutation,
    t: Transposition,
}

impl CoverEdge {
    /// Build the cover `source → source(a,b)`, checking that the length
    /// goes up by exactly one.
    pub fn new(source: Permutation, t: Transposition) -> Result<CoverEdge> {
        let target = source.swap_positions(t);
        if target.length() != source.length() + 1 {
            return Err(Error::Input(format!(
                "({}, {}) does not cover {source}",
                t.a, t.b
            )));
        }
        Ok(CoverEdge { source, target, t })
    }

    pub fn source(&self) -> &Permutation {
        &self.source
    }

    pub fn target(&self) -> &Permutation {
        &self.target
    }

    pub fn transposition(&self) -> Transposition {
        self.t
    }

    /// Admissible labels `[a, b-1]`, always nonempty.
    pub fn label_range(&self) -> std::ops::RangeInclusive<usize> {
        self.t.a..=self.t.b - 1
    }

    pub fn admits(&self, d: usize) -> bool {
        self.t.a <= d && d < self.t.b
    }

    /// Chain weight `μ = x_a − x_b`.
    pub fn weight(&self) -> Polynomial {
        &Polynomial::variable(self.t.a, Alphabet::X) - &Polynomial::variable(self.t.b, Alphabet::X)
    }
}

fn check_support(p: &Permutation, n: usize, context: &str) -> Result<()> {
    if p.support() > n {
        return Err(Error::SupportBound {
            required: p.support(),
            given: n,
            context: context.to_string(),
        });
    }
    Ok(())
}

/// All Bruhat covers of `u` with target in `S_N`, sorted by transposition.
///
/// `u(a) < u(b)` with no value in between at an intermediate position is the
/// cover condition; it is equivalent to the length going up by exactly one.
pub fn bruhat_covers(u: &Permutation, n: usize) -> Result<Vec<CoverEdge>> {
    check_support(u, n, "bruhat_covers")?;
    let mut edges = Vec::new();
    for a in 1..n {
        for b in a + 1..=n {
            let va = u.apply(a);
            let vb = u.apply(b);
            if va >= vb {
                continue;
            }
            if (a + 1..b).any(|c| {
                let vc = u.apply(c);
                va < vc && vc < vb
            }) {
                continue;
            }
            let t = Transposition { a, b };
            edges.push(CoverEdge {
                source: u.clone(),
                target: u.swap_positions(t),
                t,
            });
        }
    }
    Ok(edges)
}

/// The covers of `u` whose transposition satisfies `a <= k < b`.
pub fn k_bruhat_covers(u: &Permutation, k: usize, n: usize) -> Result<Vec<CoverEdge>> {
    Ok(bruhat_covers(u, n)?
        .into_iter()
        .filter(|e| e.admits(k))
        .collect())
}

/// Bruhat order comparison via the Ehresmann tableau criterion: `u <= w` iff
/// for every prefix length `i`, the sorted values `u(1..i)` are entrywise at
/// most the sorted values `w(1..i)`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation, n: usize) -> Result<bool> {
    check_support(u, n, "bruhat_leq")?;
    check_support(w, n, "bruhat_leq")?;
    if u.length() > w.length() {
        return Ok(false);
    }
    let m = u.support().max(w.support());
    for i in 1..=m {
        let mut up: Vec<usize> = (1..=i).map(|j| u.apply(j)).collect();
        let mut wp: Vec<usize> = (1..=i).map(|j| w.apply(j)).collect();
        up.sort_unstable();
        wp.sort_unstable();
        if up.iter().zip(&wp).any(|(a, b)| a > b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every element of `S_n`, sorted by window.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    fn rec(remaining: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if remaining.is_empty() {
            out.push(Permutation::from_window(prefix.clone()).unwrap());
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            prefix.push(v);
            rec(remaining, prefix, out);
            prefix.pop();
            remaining.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// The longest element `[n, n-1, ..., 1]` of `S_n`.
pub fn longest_element(n: usize) -> Permutation {
    Permutation::from_window((1..=n).rev().collect()).unwrap()
}

/// All permutations in `S_n` of the given length, found by walking cover
/// edges rank by rank from the identity.
pub fn permutations_of_length(p: usize, n: usize) -> Result<Vec<Permutation>> {
    let mut level: BTreeSet<Permutation> = BTreeSet::new();
    level.insert(Permutation::identity());
    for _ in 0..p {
        let mut next = BTreeSet::new();
        for v in &level {
            for edge in bruhat_covers(v, n)? {
                next.insert(edge.target);
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_trimming() {
        assert_eq!(perm("2,1,3"), perm("2,1"));
        assert_eq!(perm("1,2,3"), Permutation::identity());
        assert_eq!(perm("1").support(), 0);
        assert_eq!(perm("1,3,2").window(), &[1, 3, 2]);
    }

    #[test]
    fn parse_rejects_bad_windows() {
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("2".parse::<Permutation>().is_err());
        assert!("a,b".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn compose_examples() {
        let s1 = Permutation::simple(1);
        assert!(s1.compose(&s1).is_identity());
        assert_eq!(Permutation::identity().compose(&perm("3,1,2")), perm("3,1,2"));
        let s2 = Permutation::simple(2);
        assert_eq!(s1.compose(&s2), perm("2,3,1"));
    }

    #[test]
    fn inverse_round_trip() {
        for w in symmetric_group(4) {
            assert!(w.compose(&w.inverse()).is_identity());
            assert!(w.inverse().compose(&w).is_identity());
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity().length(), 0);
        for k in 1..5 {
            assert_eq!(Permutation::simple(k).length(), 1);
        }
        assert_eq!(perm("3,2,1").length(), 3);
    }

    #[test]
    fn simple_multiplication_changes_length_by_one() {
        for u in symmetric_group(4) {
            for k in 1..=4 {
                let l = u.compose(&Permutation::simple(k)).length() as i64;
                assert_eq!((l - u.length() as i64).abs(), 1);
            }
        }
    }

    #[test]
    fn reduced_words_examples() {
        assert_eq!(Permutation::identity().reduced_words(), vec![Vec::<usize>::new()]);
        assert_eq!(Permutation::simple(2).reduced_words(), vec![vec![2]]);
        assert_eq!(
            perm("3,2,1").reduced_words(),
            vec![vec![1, 2, 1], vec![2, 1, 2]]
        );
    }

    /// Brute-force oracle: search all generator sequences of length `l(w)`.
    fn reduced_words_by_search(w: &Permutation, max_gen: usize) -> Vec<Vec<usize>> {
        let p = w.length();
        let mut out = Vec::new();
        let mut word = Vec::new();
        fn rec(
            target: &Permutation,
            max_gen: usize,
            remaining: usize,
            word: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if remaining == 0 {
                if &Permutation::from_word(word) == target {
                    out.push(word.clone());
                }
                return;
            }
            for k in 1..=max_gen {
                word.push(k);
                rec(target, max_gen, remaining - 1, word, out);
                word.pop();
            }
        }
        rec(w, max_gen, p, &mut word, &mut out);
        out.sort();
        out
    }

    #[test]
    fn reduced_words_match_search_oracle() {
        for w in symmetric_group(4) {
            assert_eq!(w.reduced_words(), reduced_words_by_search(&w, 3), "w = {w}");
        }
    }

    #[test]
    fn reduced_words_replay_and_have_minimal_length() {
        for w in symmetric_group(4) {
            for word in w.reduced_words() {
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(&word), w);
            }
        }
    }

    #[test]
    fn covers_examples() {
        let covers = bruhat_covers(&Permutation::identity(), 3).unwrap();
        let targets: Vec<_> = covers.iter().map(|e| e.target().clone()).collect();
        assert_eq!(targets, vec![perm("2,1"), perm("1,3,2")]);

        assert!(bruhat_covers(&perm("3,2,1"), 3).unwrap().is_empty());

        let covers = bruhat_covers(&perm("2,1,3"), 3).unwrap();
        let described: Vec<_> = covers
            .iter()
            .map(|e| (e.transposition().a, e.transposition().b, e.target().clone()))
            .collect();
        assert_eq!(
            described,
            vec![(1, 3, perm("3,1,2")), (2, 3, perm("2,3,1"))]
        );
    }

    #[test]
    fn covers_raise_length_by_one() {
        for u in symmetric_group(4) {
            for edge in bruhat_covers(&u, 4).unwrap() {
                assert_eq!(edge.target().length(), u.length() + 1);
                assert_eq!(&u.swap_positions(edge.transposition()), edge.target());
                assert!(!edge.label_range().is_empty());
                let t = edge.transposition();
                for d in 1..=4 {
                    assert_eq!(edge.admits(d), t.a <= d && d < t.b);
                }
            }
        }
    }

    #[test]
    fn covers_support_bound_error() {
        assert!(matches!(
            bruhat_covers(&perm("1,3,2"), 2),
            Err(Error::SupportBound { .. })
        ));
    }

    #[test]
    fn k_covers_examples() {
        let targets = |edges: Vec<CoverEdge>| -> Vec<Permutation> {
            edges.into_iter().map(|e| e.target).collect()
        };
        assert_eq!(
            targets(k_bruhat_covers(&Permutation::identity(), 1, 3).unwrap()),
            vec![perm("2,1")]
        );
        assert_eq!(
            targets(k_bruhat_covers(&perm("2,1,3"), 1, 3).unwrap()),
            vec![perm("3,1,2")]
        );
        assert_eq!(
            targets(k_bruhat_covers(&perm("2,1,3"), 2, 3).unwrap()),
            vec![perm("3,1,2"), perm("2,3,1")]
        );
    }

    #[test]
    fn k_covers_filter_property() {
        for u in symmetric_group(4) {
            let all = bruhat_covers(&u, 4).unwrap();
            for k in 1..=3 {
                let filtered: Vec<_> = all.iter().filter(|e| e.admits(k)).cloned().collect();
                assert_eq!(k_bruhat_covers(&u, k, 4).unwrap(), filtered);
            }
        }
    }

    /// Reachability oracle: breadth-first search along cover edges.
    fn bruhat_leq_by_search(u: &Permutation, w: &Permutation, n: usize) -> bool {
        let mut frontier = vec![u.clone()];
        while let Some(v) = frontier.pop() {
            if &v == w {
                return true;
            }
            if v.length() >= w.length() {
                continue;
            }
            for edge in bruhat_covers(&v, n).unwrap() {
                frontier.push(edge.target);
            }
        }
        false
    }

    #[test]
    fn bruhat_leq_examples() {
        for w in symmetric_group(3) {
            assert!(bruhat_leq(&Permutation::identity(), &w, 3).unwrap());
        }
        assert!(!bruhat_leq(&perm("3,1,2"), &perm("2,3,1"), 3).unwrap());
        assert!(bruhat_leq(&perm("2,1,3"), &perm("3,2,1"), 3).unwrap());
    }

    #[test]
    fn bruhat_leq_matches_search_oracle() {
        let group = symmetric_group(4);
        for u in &group {
            for w in &group {
                assert_eq!(
                    bruhat_leq(u, w, 4).unwrap(),
                    bruhat_leq_by_search(u, w, 4),
                    "u = {u}, w = {w}"
                );
            }
        }
    }

    #[test]
    fn permutations_of_length_matches_filter() {
        for p in 0..=6 {
            let by_walk = permutations_of_length(p, 4).unwrap();
            let by_filter: Vec<_> = symmetric_group(4)
                .into_iter()
                .filter(|w| w.length() == p)
                .collect();
            assert_eq!(by_walk, by_filter);
        }
    }

    #[test]
    fn display_round_trip() {
        for w in symmetric_group(4) {
            let s = w.to_string();
            assert_eq!(s.parse::<Permutation>().unwrap(), w);
        }
        assert_eq!(Permutation::identity().to_string(), "1");
    }
}
