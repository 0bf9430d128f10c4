//! Affine symmetric group of type `A_{n-1}^{(1)}` in window notation, and the
//! reduced words that index the Demazure crystals built elsewhere.
//!
//! A word `r_{i_1} r_{i_2} ... r_{i_m}` is stored left to right; as an operator
//! on crystals its rightmost letter acts first.

use std::fmt;

use crate::error::{Error, Result};
use crate::symfunc::Partition;

/// Sequence of simple reflection indices in `Z/nZ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if let Some(&bad) = letters.iter().find(|&&i| i >= n) {
            return Err(Error::Parse(format!(
                "letter {bad} out of range for n = {n}"
            )));
        }
        Ok(Word { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Word {
            n,
            letters: Vec::new(),
        }
    }

    /// Space-separated indices, e.g. `"0 2 1 0"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("word {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(n, letters)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in the order they act: rightmost first.
    pub fn action_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().rev().copied()
    }

    /// `r_i * self`.
    pub fn prepend(&self, i: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(i % self.n);
        letters.extend_from_slice(&self.letters);
        Word { n: self.n, letters }
    }

    /// `self * other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { n: self.n, letters }
    }

    /// Dynkin rotation `r_i -> r_{i+s}`.
    pub fn rotate(&self, s: usize) -> Word {
        Word {
            n: self.n,
            letters: self.letters.iter().map(|&i| (i + s) % self.n).collect(),
        }
    }

    pub fn is_reduced(&self) -> bool {
        AffinePerm::from_word(self).length() == self.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Affine permutation `f: Z -> Z` with `f(i + n) = f(i) + n`, stored as the
/// window `[f(1), ..., f(n)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePerm {
    window: Vec<i64>,
}

impl AffinePerm {
    pub fn identity(n: usize) -> Self {
        AffinePerm {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n < 2 {
            return Err(Error::InvalidRank(window.len()));
        }
        let mut residues: Vec<i64> = window.iter().map(|f| f.rem_euclid(n)).collect();
        residues.sort_unstable();
        if residues != (0..n).collect::<Vec<_>>() {
            return Err(Error::Parse(format!(
                "window {window:?} residues are not a permutation"
            )));
        }
        if window.iter().sum::<i64>() != n * (n + 1) / 2 {
            return Err(Error::Parse(format!(
                "window {window:?} fails the sum condition"
            )));
        }
        Ok(AffinePerm { window })
    }

    pub fn from_word(word: &Word) -> Self {
        let mut p = AffinePerm::identity(word.rank());
        for &i in word.letters() {
            p.mul_simple(i);
        }
        p
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    /// `self <- self * r_i`: swaps positions `i` and `i+1` of the periodic sequence.
    pub fn mul_simple(&mut self, i: usize) {
        let n = self.window.len();
        let i = i % n;
        if i == 0 {
            let (first, last) = (self.window[0], self.window[n - 1]);
            self.window[0] = last - n as i64;
            self.window[n - 1] = first + n as i64;
        } else {
            self.window.swap(i - 1, i);
        }
    }

    /// Coxeter length: `sum_{1 <= i < j <= n} |floor((f(j) - f(i)) / n)|`.
    pub fn length(&self) -> usize {
        let n = self.window.len() as i64;
        let mut total = 0;
        for a in 0..self.window.len() {
            for b in a + 1..self.window.len() {
                total += (self.window[b] - self.window[a])
                    .div_euclid(n)
                    .unsigned_abs() as usize;
            }
        }
        total
    }
}

/// `R^{(k)}_i`: `k` blocks of `n-k` reflections,
/// `prod_{t=k-1..0} prod_{m=n-k-1..0} r_{i-t+m}` read left to right.
pub fn word_r(k: usize, i: i64, n: usize) -> Result<Word> {
    check_height(k, n)?;
    let mut letters = Vec::with_capacity(k * (n - k));
    for t in (0..k as i64).rev() {
        for m in (0..(n - k) as i64).rev() {
            letters.push((i - t + m).rem_euclid(n as i64) as usize);
        }
    }
    Word::new(n, letters)
}

/// The same element as [`word_r`] written as `n-k` blocks of `k` reflections.
pub fn word_r_alt(k: usize, i: i64, n: usize) -> Result<Word> {
    check_height(k, n)?;
    let mut letters = Vec::with_capacity(k * (n - k));
    for m in (0..(n - k) as i64).rev() {
        for t in (0..k as i64).rev() {
            letters.push((i - t + m).rem_euclid(n as i64) as usize);
        }
    }
    Word::new(n, letters)
}

fn check_height(k: usize, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if k == 0 || k >= n {
        return Err(Error::ColumnHeight { k, n });
    }
    Ok(())
}

/// `w^{(steps)}`: starting from the identity, step `s = (j-1)d + a` prepends
/// `r_{scheme(j, a)}`.
pub fn word_wk(n: usize, d: usize, steps: usize, scheme: impl Fn(usize, usize) -> usize) -> Word {
    let mut word = Word::empty(n);
    for s in 1..=steps {
        let j = (s - 1) / d + 1;
        let a = s - (j - 1) * d;
        word = word.prepend(scheme(j, a));
    }
    word
}

/// `w_mu = R^{(mu_1)}_{mu_1} R^{(mu_2)}_{mu_1+mu_2} ... R^{(mu_m)}_{|mu|}`.
pub fn word_wmu(mu: &Partition, n: usize) -> Result<Word> {
    let mut word = Word::empty(n);
    let mut partial = 0i64;
    for &part in mu.parts() {
        partial += part as i64;
        word = word.concat(&word_r(part, partial, n)?);
    }
    Ok(word)
}

/// True when each word is the previous one with a letter prepended and the
/// length goes up by one at every step.
pub fn is_increasing_chain(words: &[Word]) -> Result<bool> {
    for pair in words.windows(2) {
        let (prev, next) = (&pair[0], &pair[1]);
        if next.len() != prev.len() + 1 || next.letters()[1..] != *prev.letters() {
            return Err(Error::MalformedChain(format!(
                "[{next}] does not extend [{prev}] by one letter"
            )));
        }
    }
    let mut last = None;
    for w in words {
        let len = AffinePerm::from_word(w).length();
        if let Some(prev) = last {
            if len != prev + 1 {
                return Ok(false);
            }
        }
        last = Some(len);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[usize]) -> Word {
        Word::new(n, letters.to_vec()).unwrap()
    }

    fn perm(word: &Word) -> AffinePerm {
        AffinePerm::from_word(word)
    }

    #[test]
    fn from_word_examples() {
        assert_eq!(perm(&Word::empty(3)), AffinePerm::identity(3));
        assert_eq!(perm(&w(2, &[0])).window(), &[0, 3]);
        assert_eq!(perm(&w(3, &[1, 0, 1])), perm(&w(3, &[0, 1, 0])));
        assert!(AffinePerm::from_window(vec![0, 3]).is_ok());
        assert!(AffinePerm::from_window(vec![1, 3]).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(AffinePerm::identity(4).length(), 0);
        assert_eq!(perm(&w(3, &[2, 2])).length(), 0);
        for n in 2..=5 {
            for steps in 0..=12 {
                let word = word_wk(n, n - 1, steps, |j, a| (a + n * j - j) % n);
                let expected: Vec<usize> = (0..steps).rev().map(|s| s % n).collect();
                assert_eq!(word.letters(), expected.as_slice());
                assert_eq!(perm(&word).length(), steps);
            }
        }
    }

    #[test]
    fn chains() {
        let chain = [Word::empty(2), w(2, &[0]), w(2, &[1, 0]), w(2, &[0, 1, 0])];
        assert!(is_increasing_chain(&chain).unwrap());
        let stalled = [Word::empty(2), w(2, &[0]), w(2, &[0, 0])];
        assert!(!is_increasing_chain(&stalled).unwrap());
        assert!(is_increasing_chain(&[Word::empty(2), w(2, &[0, 1])]).is_err());
    }

    #[test]
    fn r_blocks() {
        assert_eq!(word_r(2, 0, 4).unwrap(), w(4, &[0, 3, 1, 0]));
        assert_eq!(word_r(3, 0, 4).unwrap(), w(4, &[2, 3, 0]));
        assert_eq!(word_r(1, 0, 3).unwrap(), w(3, &[1, 0]));
        assert!(word_r(4, 0, 4).is_err());
        for n in 2..=5 {
            for k in 1..n {
                for i in 0..n as i64 {
                    let a = word_r(k, i, n).unwrap();
                    let b = word_r_alt(k, i, n).unwrap();
                    assert_eq!(a.len(), k * (n - k));
                    assert_eq!(perm(&a), perm(&b), "n={n} k={k} i={i}");
                    assert!(a.is_reduced());
                }
            }
        }
    }

    #[test]
    fn wmu_words() {
        let mu = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(
            word_wmu(&mu, 4).unwrap(),
            w(4, &[1, 2, 3, 1, 0, 2, 1, 0, 3, 2])
        );
        assert_eq!(
            word_wmu(&Partition::new(vec![1]).unwrap(), 2).unwrap(),
            w(2, &[1])
        );
        for n in 2..=4 {
            for size in 1..=6 {
                for mu in Partition::all(size, size)
                    .into_iter()
                    .filter(|m| m.part(0) < n)
                {
                    let word = word_wmu(&mu, n).unwrap();
                    assert!(word.is_reduced(), "mu={mu} n={n}");
                }
            }
        }
        assert!(word_wmu(&Partition::new(vec![2]).unwrap(), 2).is_err());
    }

    #[test]
    fn rotation_and_text() {
        assert_eq!(w(3, &[0, 2, 1, 0]).rotate(1), w(3, &[1, 0, 2, 1]));
        assert_eq!(Word::parse("0 2 1 0", 3).unwrap().to_string(), "0 2 1 0");
        assert!(Word::parse("0 3", 3).is_err());
        let word = w(3, &[2, 1, 0]);
        assert_eq!(word.action_order().collect::<Vec<_>>(), vec![0, 1, 2]);
    }
}
