//! Permutations of `S_d`, time-ordered words in simple transpositions, and
//! Bruhat order.
//!
//! Composition is functional: `(sigma.compose(&tau))(a) = sigma(tau(a))`.
//! Words store their letters in *time order* (first crossing first); the
//! permutation of a word `(a_1, .., a_k)` is `s_{a_k} o .. o s_{a_1}`, so
//! concatenating a word `w` followed by a word `v` realizes
//! `perm(v) o perm(w)`. Every sign convention downstream depends on this.

use crate::{Error, Result};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

/// A permutation of `{1, .., d}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation { one_line: (1..=d as u8).collect() }
    }

    /// The simple transposition `s_a` exchanging `a` and `a+1`; `1 <= a < d`.
    pub fn simple(d: usize, a: u8) -> Result<Self> {
        if a == 0 || usize::from(a) >= d {
            return Err(Error::LetterOutOfRange { letter: a, d });
        }
        let mut one_line: Vec<u8> = (1..=d as u8).collect();
        one_line.swap(usize::from(a) - 1, usize::from(a));
        Ok(Permutation { one_line })
    }

    pub fn from_one_line(one_line: Vec<u8>) -> Result<Self> {
        let d = one_line.len();
        let mut seen = vec![false; d + 1];
        for &v in &one_line {
            if v == 0 || usize::from(v) > d || seen[usize::from(v)] {
                return Err(Error::BadInput(format!(
                    "not a permutation of 1..{d}: {one_line:?}"
                )));
            }
            seen[usize::from(v)] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn d(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.one_line
    }

    /// `pi(a)` for `1 <= a <= d`.
    pub fn apply(&self, a: u8) -> u8 {
        self.one_line[usize::from(a) - 1]
    }

    /// Functional composition: `(self o other)(a) = self(other(a))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.d(), other.d(), "composing permutations of different degree");
        Permutation {
            one_line: other.one_line.iter().map(|&a| self.apply(a)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut one_line = vec![0u8; self.d()];
        for (a, &v) in self.one_line.iter().enumerate() {
            one_line[usize::from(v) - 1] = a as u8 + 1;
        }
        Permutation { one_line }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(a, &v)| usize::from(v) == a + 1)
    }

    /// Number of inversions `#{a < b : pi(b) < pi(a)}`; equals the length of
    /// any reduced word.
    pub fn inv_count(&self) -> usize {
        let v = &self.one_line;
        let mut count = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[b] < v[a] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The inversion set as sorted pairs `(a, b)`, `a < b`, `pi(a) > pi(b)`.
    pub fn inversion_set(&self) -> Vec<(u8, u8)> {
        let v = &self.one_line;
        let mut out = Vec::new();
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[b] < v[a] {
                    out.push((a as u8 + 1, b as u8 + 1));
                }
            }
        }
        out
    }

    pub fn longest(d: usize) -> Self {
        Permutation { one_line: (1..=d as u8).rev().collect() }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (a, v) in self.one_line.iter().enumerate() {
            if a > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Permutation {
    /// One-line digit string, e.g. `321`; only legible for `d <= 9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.one_line {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A time-ordered word in the letters `1..d`, letter `a` meaning "the strands
/// at levels `a` and `a+1` cross now".
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The concatenation `self` then `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The word with the letter at (0-based) position `t` deleted.
    pub fn delete(&self, t: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.remove(t);
        Word { letters }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, a) in self.letters.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The permutation of a wiring diagram: strand starting at level `s` ends at
/// level `word_to_perm(w, d)(s)`.
pub fn word_to_perm(w: &Word, d: usize) -> Result<Permutation> {
    let mut occ: Vec<u8> = (1..=d as u8).collect();
    for &a in w.letters() {
        if a == 0 || usize::from(a) >= d {
            return Err(Error::LetterOutOfRange { letter: a, d });
        }
        occ.swap(usize::from(a) - 1, usize::from(a));
    }
    let mut one_line = vec![0u8; d];
    for (level, &strand) in occ.iter().enumerate() {
        one_line[usize::from(strand) - 1] = level as u8 + 1;
    }
    Ok(Permutation { one_line })
}

/// `inv(pi)`. Free-function form of [`Permutation::inv_count`].
pub fn inv_count(pi: &Permutation) -> usize {
    pi.inv_count()
}

/// The sequence of strand pairs (identified by start level, smaller first)
/// realized by the crossings of `w`, in time order.
///
/// For a reduced word this sequence enumerates the inversion set of
/// `word_to_perm(w, d)` without repetition; a repeated pair means `w` is not
/// reduced and is reported as an error.
pub fn crossing_sequence(w: &Word, d: usize) -> Result<Vec<(u8, u8)>> {
    let mut occ: Vec<u8> = (1..=d as u8).collect();
    let mut seq = Vec::with_capacity(w.len());
    for &a in w.letters() {
        if a == 0 || usize::from(a) >= d {
            return Err(Error::LetterOutOfRange { letter: a, d });
        }
        let (x, y) = (occ[usize::from(a) - 1], occ[usize::from(a)]);
        let pair = (x.min(y), x.max(y));
        if seq.contains(&pair) {
            return Err(Error::NotReduced(format!(
                "strands {} and {} cross twice",
                pair.0, pair.1
            )));
        }
        seq.push(pair);
        occ.swap(usize::from(a) - 1, usize::from(a));
    }
    Ok(seq)
}

/// The lexicographically smallest reduced word of `pi`.
///
/// Peeling the earliest letter corresponds to a descent `pi(a) > pi(a+1)`;
/// choosing the smallest such `a` at every step is a depth-first search that
/// never needs to backtrack, so the greedy word is lex-minimal.
pub fn canonical_word(pi: &Permutation) -> Word {
    let mut cur = pi.one_line.clone();
    let mut letters = Vec::with_capacity(pi.inv_count());
    loop {
        let mut descent = None;
        for a in 0..cur.len().saturating_sub(1) {
            if cur[a] > cur[a + 1] {
                descent = Some(a);
                break;
            }
        }
        match descent {
            None => break,
            Some(a) => {
                letters.push(a as u8 + 1);
                cur.swap(a, a + 1);
            }
        }
    }
    Word { letters }
}

/// Every reduced word of `pi`, in lexicographic order.
pub fn all_reduced_words(pi: &Permutation) -> Vec<Word> {
    fn rec(cur: &mut Vec<u8>, prefix: &mut Vec<u8>, out: &mut Vec<Word>) {
        let mut any = false;
        for a in 0..cur.len().saturating_sub(1) {
            if cur[a] > cur[a + 1] {
                any = true;
                cur.swap(a, a + 1);
                prefix.push(a as u8 + 1);
                rec(cur, prefix, out);
                prefix.pop();
                cur.swap(a, a + 1);
            }
        }
        if !any {
            out.push(Word { letters: prefix.clone() });
        }
    }
    let mut cur = pi.one_line.clone();
    let mut out = Vec::new();
    rec(&mut cur, &mut Vec::new(), &mut out);
    out
}

/// All permutations `<=` the value of the reduced word `w` in Bruhat order:
/// the values of all reduced subwords of `w` (deletion closure).
fn subword_closure(w: &Word, d: usize) -> Vec<Permutation> {
    let mut set: Vec<Permutation> = vec![Permutation::identity(d)];
    let mut seen: HashMap<Vec<u8>, ()> = HashMap::new();
    seen.insert(Permutation::identity(d).one_line.clone(), ());
    for &a in w.letters() {
        let s = Permutation::simple(d, a).expect("validated letter");
        let mut grow = Vec::new();
        for v in &set {
            // Appending a later crossing multiplies on the left; keep only
            // length-increasing extensions so every retained subword is
            // reduced.
            let extended = s.compose(v);
            if extended.inv_count() == v.inv_count() + 1
                && !seen.contains_key(&extended.one_line)
            {
                seen.insert(extended.one_line.clone(), ());
                grow.push(extended);
            }
        }
        set.extend(grow);
    }
    set
}

/// Bruhat order via the subword criterion applied to one fixed reduced word
/// of `tau` (the canonical one).
pub fn bruhat_leq(sigma: &Permutation, tau: &Permutation) -> bool {
    assert_eq!(sigma.d(), tau.d(), "comparing permutations of different degree");
    if sigma.inv_count() > tau.inv_count() {
        return false;
    }
    subword_closure(&canonical_word(tau), tau.d())
        .iter()
        .any(|v| v == sigma)
}

/// The lower Bruhat interval `[e, top]` with its Hasse diagram.
#[derive(Clone, Debug)]
pub struct BruhatInterval {
    top: Permutation,
    /// Sorted by `(inv_count, one_line)`.
    elements: Vec<Permutation>,
    index: HashMap<Vec<u8>, usize>,
    /// `levels[m]` lists indices of the elements with `inv_count == m`.
    levels: Vec<Vec<usize>>,
    /// Hasse covers `(lower, upper)` as element indices, sorted.
    covers: Vec<(usize, usize)>,
}

impl BruhatInterval {
    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, pi: &Permutation) -> Option<usize> {
        self.index.get(pi.one_line()).copied()
    }

    /// Indices of covers incident to element `i` (as lower or upper end).
    pub fn incident_covers(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .enumerate()
            .filter(|(_, &(lo, hi))| lo == i || hi == i)
            .map(|(e, _)| e)
            .collect()
    }
}

/// The interval `[e, pi]` together with its Hasse covers.
pub fn interval(pi: &Permutation) -> BruhatInterval {
    let d = pi.d();
    let mut elements = subword_closure(&canonical_word(pi), d);
    elements.sort_by(|x, y| {
        (x.inv_count(), x.one_line()).cmp(&(y.inv_count(), y.one_line()))
    });
    let index: HashMap<Vec<u8>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, p)| (p.one_line.clone(), i))
        .collect();
    let height = pi.inv_count();
    let mut levels = vec![Vec::new(); height + 1];
    for (i, p) in elements.iter().enumerate() {
        levels[p.inv_count()].push(i);
    }
    // sigma < tau with inv difference 1 is automatically a cover.
    let mut covers = Vec::new();
    for m in 0..height {
        for &hi in &levels[m + 1] {
            let below = subword_closure(&canonical_word(&elements[hi]), d);
            for sig in below {
                if sig.inv_count() == m {
                    let lo = index[sig.one_line()];
                    covers.push((lo, hi));
                }
            }
        }
    }
    covers.sort_unstable();
    BruhatInterval { top: pi.clone(), elements, index, levels, covers }
}

/// The maximum permutation `pi` with `i_a <= j_{pi(a)}` for all `a`, or
/// `None` if `I <= J` fails.
///
/// Built by downward recursion: `pi(d)` is the smallest position `b` with
/// `i_d <= j_b`; remove `i_d` and `j_b` and recurse.
pub fn pi0(i: &crate::combinat::IndexSet, j: &crate::combinat::IndexSet) -> Option<Permutation> {
    if !i.leq(j) {
        return None;
    }
    let d = i.d();
    let iv = i.elems();
    let jv = j.elems();
    let mut taken = vec![false; d];
    let mut one_line = vec![0u8; d];
    for a in (0..d).rev() {
        let b = (0..d).find(|&b| !taken[b] && iv[a] <= jv[b])?;
        taken[b] = true;
        one_line[a] = b as u8 + 1;
    }
    Some(Permutation { one_line })
}
