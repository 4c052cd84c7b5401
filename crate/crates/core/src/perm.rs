//! Words, permutations, the stack-sorting operator and exhaustive enumeration
//! of the symmetric group.
//!
//! A [`Word`] is a finite sequence of pairwise-distinct natural numbers; a
//! [`Permutation`] is the special case whose letters are exactly 1..=n. The
//! stack-sorting operator s maps the empty word to itself and LnR (n the
//! greatest letter) to s(L)s(R)n.

use std::collections::HashSet;
use std::fmt;

use crate::error::Error;

/// Default cap on exhaustive enumeration of S_n (12! is the practical
/// single-machine edge).
pub const DEFAULT_MAX_N: usize = 12;

/// A finite word on the natural numbers without repeated letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    letters: Vec<u64>,
}

impl Word {
    /// Build a word, rejecting repeated letters.
    pub fn new(letters: Vec<u64>) -> Result<Self, Error> {
        let mut seen = HashSet::with_capacity(letters.len());
        for &l in &letters {
            if !seen.insert(l) {
                return Err(Error::RepeatedLetter(l));
            }
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[u64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_increasing(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] < w[1])
    }

    /// One pass of the stack-sorting operator.
    pub fn stack_sort(&self) -> Word {
        let mut out = Vec::with_capacity(self.letters.len());
        sort_into(&self.letters, &mut out);
        Word { letters: out }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

// s(LnR) = s(L)s(R)n, recursing on the slices left and right of the maximum.
fn sort_into(letters: &[u64], out: &mut Vec<u64>) {
    if letters.is_empty() {
        return;
    }
    let max_at = letters
        .iter()
        .enumerate()
        .max_by_key(|&(_, &l)| l)
        .map(|(i, _)| i)
        .unwrap();
    sort_into(&letters[..max_at], out);
    sort_into(&letters[max_at + 1..], out);
    out.push(letters[max_at]);
}

/// One pass of the stack-sorting operator; free-function form of
/// [`Word::stack_sort`].
pub fn stack_sort(w: &Word) -> Word {
    w.stack_sort()
}

/// A permutation of {1, 2, ..., n}, stored as a [`Word`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    word: Word,
}

impl Permutation {
    /// Build a permutation, rejecting letter multisets other than {1..=n}.
    pub fn new(letters: Vec<u64>) -> Result<Self, Error> {
        let n = letters.len();
        let word = Word::new(letters).map_err(|_| Error::NotAPermutation(n))?;
        if word.letters.iter().any(|&l| l < 1 || l > n as u64) {
            return Err(Error::NotAPermutation(n));
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<u64>) -> Self {
        debug_assert!(Permutation::new(letters.clone()).is_ok());
        Permutation {
            word: Word { letters },
        }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: Word {
                letters: (1..=n as u64).collect(),
            },
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn letters(&self) -> &[u64] {
        self.word.letters()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_increasing()
    }

    /// Number of positions i with p(i) > p(i+1).
    pub fn descent_count(&self) -> usize {
        self.word
            .letters
            .windows(2)
            .filter(|w| w[0] > w[1])
            .count()
    }

    /// One stack-sorting pass; the result is again a permutation of 1..=n.
    pub fn stack_sort(&self) -> Permutation {
        Permutation {
            word: self.word.stack_sort(),
        }
    }

    /// Does s^t map this permutation to the identity? Sortability is monotone
    /// in t because the identity is a fixed point of s.
    pub fn is_t_stack_sortable(&self, t: usize) -> bool {
        assert!(t >= 1, "t-stack sortability requires t >= 1");
        let mut cur = self.clone();
        for _ in 0..t {
            if cur.is_identity() {
                return true;
            }
            cur = cur.stack_sort();
        }
        cur.is_identity()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// Lexicographic stream over S_n, optionally restricted to a fixed first
/// letter (the partition unit for parallel tabulation).
pub struct Permutations {
    first: Option<u64>,
    rest: Option<Vec<u64>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let rest = self.rest.as_mut()?;
        let mut letters = Vec::with_capacity(rest.len() + 1);
        if let Some(f) = self.first {
            letters.push(f);
        }
        letters.extend_from_slice(rest);
        if !next_permutation(rest) {
            self.rest = None;
        }
        Some(Permutation::from_letters_unchecked(letters))
    }
}

/// All of S_n in lexicographic order. Rejects n above `max_n`.
pub fn enumerate_permutations(n: usize, max_n: usize) -> Result<Permutations, Error> {
    if n > max_n {
        return Err(Error::EnumerationLimit { n, max_n });
    }
    Ok(Permutations {
        first: None,
        rest: Some((1..=n as u64).collect()),
    })
}

/// The permutations of 1..=n that start with `first`, in lexicographic order.
/// S_n is the disjoint union of these streams over first = 1..=n.
pub fn permutations_with_first(n: usize, first: u64) -> Permutations {
    debug_assert!(1 <= first && first <= n as u64);
    Permutations {
        first: Some(first),
        rest: Some((1..=n as u64).filter(|&l| l != first).collect()),
    }
}

// Standard in-place next lexicographic permutation; false when v was the last.
fn next_permutation(v: &mut [u64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
