//! Words, patterns, and the 12-representation relation.
//!
//! A word `w` over `{1..n}` 12-represents a labeled graph `G` when, for every
//! pair `i < j`, `ij` is an edge exactly when every copy of `j` precedes
//! every copy of `i` in `w`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// A finite sequence of positive letters. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    /// Letters must be positive.
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::LetterOutOfRange { letter: bad, n: 0 });
        }
        Ok(Self(letters))
    }

    /// `1 2 ... n`
    pub fn ascending(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// `n n-1 ... 1`
    pub fn descending(n: usize) -> Self {
        Self((1..=n).rev().collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, or 0 for the empty word.
    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Copies of `letter` in the word.
    pub fn occurrences(&self, letter: usize) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// True when every letter occurs at most once.
    pub fn is_permutation_word(&self) -> bool {
        let mut seen = vec![false; self.max_letter() + 1];
        self.0.iter().all(|&l| !std::mem::replace(&mut seen[l], true))
    }

    /// The reverse `r(w)`.
    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// The complement `c(w)` over `{1..n}`: every letter `x` becomes `n + 1 - x`.
    pub fn complement(&self, n: usize) -> Result<Self> {
        self.0
            .iter()
            .map(|&x| {
                if x > n {
                    Err(Error::LetterOutOfRange { letter: x, n })
                } else {
                    Ok(n + 1 - x)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// The subword `w_S` keeping only letters for which `keep` holds.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self(self.0.iter().copied().filter(|&l| keep(l)).collect())
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Digits without separators when every letter is below 10, otherwise the
    /// space-separated form.
    pub fn compact(&self) -> String {
        if self.0.iter().all(|&l| l < 10) {
            self.0.iter().map(|l| char::from(b'0' + *l as u8)).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Word {
    /// Space-separated letters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.compact())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts space- or comma-separated integers, or (when there is no
    /// separator at all) one letter per decimal digit: `4624153`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Word::new(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A word equal to its own reduced form: its letters are exactly `{1..k}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Word);

impl Pattern {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let w = Word::new(letters)?;
        if w.is_empty() || reduce(&w)? != w {
            return Err(Error::NotReduced(w.0));
        }
        Ok(Self(w))
    }

    /// `k (k-1) ... 1`
    pub fn decreasing(k: usize) -> Self {
        Self(Word::descending(k))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[usize] {
        &self.0 .0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of distinct letters.
    pub fn arity(&self) -> usize {
        self.0.max_letter()
    }

    /// `c(r(p))`, the pattern whose avoidance class is dual to this one.
    pub fn dual(&self) -> Self {
        let k = self.arity();
        Self(self.0.reverse().complement(k).expect("letters of a pattern are within 1..=k"))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.compact())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w: Word = s.parse()?;
        Pattern::new(w.0)
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The reduced form `red(w)`: the `i`-th smallest distinct letter becomes `i`.
pub fn reduce(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut distinct = w.0.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let letters = w
        .0
        .iter()
        .map(|l| distinct.binary_search(l).expect("letter is present") + 1)
        .collect();
    Ok(Word(letters))
}

/// Searches for an occurrence of `p` in `w`.
///
/// Returns the lexicographically smallest increasing index tuple (0-based)
/// whose subword reduces to `p`, or `None` when `w` avoids `p`.
pub fn contains_pattern(w: &Word, p: &Pattern) -> Option<Vec<usize>> {
    let mut idx = Vec::with_capacity(p.len());
    search_occurrence(&w.0, p.letters(), &mut idx, 0, None).then_some(idx)
}

pub fn avoids(w: &Word, p: &Pattern) -> bool {
    contains_pattern(w, p).is_none()
}

/// Whether `w` has an occurrence of `p` that uses its last letter.
///
/// Used to prune prefix searches: a word avoids `p` iff no prefix has an
/// occurrence ending at its last position.
pub fn has_occurrence_ending_at_last(w: &[usize], p: &Pattern) -> bool {
    let k = p.len();
    if w.len() < k {
        return false;
    }
    let mut idx = Vec::with_capacity(k);
    search_occurrence(w, p.letters(), &mut idx, 0, Some(w.len() - 1))
}

// Slot-by-slot backtracking: slot t takes an index greater than slot t-1 and
// must compare to every earlier slot exactly as the pattern letters do.
fn search_occurrence(
    w: &[usize],
    p: &[usize],
    idx: &mut Vec<usize>,
    start: usize,
    last: Option<usize>,
) -> bool {
    let t = idx.len();
    let k = p.len();
    if t == k {
        return true;
    }
    let remaining = k - t;
    if w.len() < start + remaining {
        return false;
    }
    let hi = if t + 1 == k {
        match last {
            Some(l) if l >= start => l,
            Some(_) => return false,
            None => w.len() - 1,
        }
    } else {
        match last {
            // Leave room for the remaining slots before the fixed last index.
            Some(l) => match (l + 1).checked_sub(remaining) {
                Some(h) => h,
                None => return false,
            },
            None => w.len() - remaining,
        }
    };
    let lo = if t + 1 == k { last.unwrap_or(start).max(start) } else { start };
    for i in lo..=hi {
        let ok = idx
            .iter()
            .enumerate()
            .all(|(s, &j)| p[s].cmp(&p[t]) == w[j].cmp(&w[i]));
        if ok {
            idx.push(i);
            if search_occurrence(w, p, idx, i + 1, last) {
                return true;
            }
            idx.pop();
        }
    }
    false
}

/// Reference implementation of [`contains_pattern`]: enumerates every
/// increasing index tuple in lexicographic order and reduces the subword.
pub fn contains_pattern_naive(w: &Word, p: &Pattern) -> Option<Vec<usize>> {
    let k = p.len();
    let len = w.len();
    if len < k {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let sub = Word(idx.iter().map(|&i| w.0[i]).collect());
        if reduce(&sub).expect("nonempty") == p.0 {
            return Some(idx);
        }
        // Next combination in lexicographic order.
        let mut t = k;
        loop {
            if t == 0 {
                return None;
            }
            t -= 1;
            if idx[t] < len - k + t {
                break;
            }
        }
        idx[t] += 1;
        for s in t + 1..k {
            idx[s] = idx[s - 1] + 1;
        }
    }
}

/// First and last positions of each letter `1..=n` (index 0 unused).
fn first_last(w: &Word, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut first = vec![usize::MAX; n + 1];
    let mut last = vec![0; n + 1];
    for (pos, &l) in w.0.iter().enumerate() {
        if l == 0 || l > n {
            return Err(Error::LetterOutOfRange { letter: l, n });
        }
        if first[l] == usize::MAX {
            first[l] = pos;
        }
        last[l] = pos;
    }
    if let Some(missing) = (1..=n).find(|&l| first[l] == usize::MAX) {
        return Err(Error::MissingLetter(missing));
    }
    Ok((first, last))
}

/// Whether `w` 12-represents `g`. The word must use exactly the letters `1..=n`.
pub fn twelve_represents(w: &Word, g: &LabeledGraph) -> Result<bool> {
    let n = g.n();
    let (first, last) = first_last(w, n)?;
    for i in 1..=n {
        for j in i + 1..=n {
            if g.has_edge(i, j) != (last[j] < first[i]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The unique graph on `{1..n}` that `w` 12-represents, `n` being the
/// largest letter. Every letter of `{1..n}` must occur.
pub fn graph_from_word(w: &Word) -> Result<LabeledGraph> {
    let n = w.max_letter();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let (first, last) = first_last(w, n)?;
    let mut g = LabeledGraph::empty(n)?;
    for i in 1..=n {
        for j in i + 1..=n {
            if last[j] < first[i] {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Keeps only the first and last copy of every letter.
///
/// The result is a subsequence of `w`, so it avoids every pattern `w` avoids,
/// and it still 12-represents `g`.
pub fn normalize_at_most_twice(w: &Word, g: &LabeledGraph) -> Result<Word> {
    if !twelve_represents(w, g)? {
        return Err(Error::NotRepresentant);
    }
    let (first, last) = first_last(w, g.n())?;
    Ok(Word(
        w.0.iter()
            .enumerate()
            .filter(|&(pos, &l)| pos == first[l] || pos == last[l])
            .map(|(_, &l)| l)
            .collect(),
    ))
}
