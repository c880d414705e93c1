//! Braid words on a fixed number of strands.
//!
//! A positive letter `i` is the Artin generator `σ_i`, exchanging the strands
//! at positions `i` and `i+1` by a counterclockwise half turn; `-i` is its
//! inverse. Words are read in temporal order: the first letter acts first.

use std::fmt;
use std::str::FromStr;

use crate::garside::permutation_braid_lift;
use crate::{Error, Result};

/// A word in the signed Artin generators on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        for &e in &letters {
            if e == 0 || e.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter: e as i64, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// The single letter `σ_i^{±1}`.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, vec![letter])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&e| e > 0)
    }

    /// Cancels adjacent `e, -e` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &e in &self.letters {
            if out.last() == Some(&-e) {
                out.pop();
            } else {
                out.push(e);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Positive letters minus negative letters.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&e| e.signum() as i64).sum()
    }

    pub fn is_dewrithed(&self) -> bool {
        self.writhe() == 0
    }

    /// Composes the transpositions `(i, i+1)` in temporal order.
    pub fn underlying_permutation(&self) -> Permutation {
        // position[s] = current position of the strand that started at s
        let mut strand_at: Vec<usize> = (0..self.strands).collect();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize - 1;
            strand_at.swap(i, i + 1);
        }
        let mut image = vec![0; self.strands];
        for (pos, &s) in strand_at.iter().enumerate() {
            image[s] = pos;
        }
        Permutation { image }
    }

    /// Group product `self · other`: `self` acts first.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&e| -e).collect(),
        }
    }

    /// Juxtaposition: `other` is placed to the right of `self`.
    pub fn tensor(&self, other: &BraidWord) -> BraidWord {
        let shift = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&e| e.signum() * (e.abs() + shift)));
        BraidWord { strands: self.strands + other.strands, letters }
    }

    /// `β ↦ β₋`: a trivial strand added on the left.
    pub fn add_strand_left(&self) -> BraidWord {
        BraidWord::identity(1).tensor(self)
    }

    /// `β ↦ β₊`: a trivial strand added on the right.
    pub fn add_strand_right(&self) -> BraidWord {
        self.tensor(&BraidWord::identity(1))
    }

    /// Image under the involution `σ_i ↦ σ_{n-i}` (conjugation by the half twist).
    pub fn flip(&self) -> BraidWord {
        let n = self.strands as i32;
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&e| e.signum() * (n - e.abs())).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for e in &self.letters {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `B3: 1 2 -1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix('B')
            .ok_or_else(|| Error::parse(format!("expected header `Bn:` in {s:?}")))?;
        let (count, body) = rest
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("missing `:` after strand count in {s:?}")))?;
        let strands: usize = count
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad strand count {count:?}")))?;
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let e: i32 = tok.parse().map_err(|_| Error::parse(format!("bad letter {tok:?}")))?;
            if e == 0 || e.unsigned_abs() as usize >= strands {
                return Err(Error::parse(format!(
                    "letter {tok:?} out of range for {strands} strands"
                )));
            }
            letters.push(e);
        }
        Ok(BraidWord { strands, letters })
    }
}

/// `c_{n,m}`: the trivial `n`-strand block on the left passes over the
/// trivial `m`-strand block on the right.
///
/// It is the permutation braid whose strands starting in positions `1..=m`
/// end in positions `n+1..=n+m` (so `c_{2,1} = σ₁σ₂`), has writhe `nm`, and
/// satisfies `c_{n,1} · β₊ = β₋ · c_{n,1}`.
pub fn braiding_element(n: usize, m: usize) -> BraidWord {
    permutation_braid_lift(&Permutation::block_swap(m, n))
}

/// A bijection of `{0, …, n-1}`; `image[i]` is where position `i` is sent.
///
/// For braids, `image[i]` is the end position of the strand starting at `i`.
/// Printed one-based as `[π(1) π(2) … π(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || seen[x] {
                return Err(Error::InvalidPermutation(image));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    /// From one-based images.
    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        if image.contains(&0) {
            return Err(Error::InvalidPermutation(image.to_vec()));
        }
        Self::new(image.iter().map(|&x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// The order-reversing permutation.
    pub fn reversal(n: usize) -> Self {
        Permutation { image: (0..n).rev().collect() }
    }

    /// Positions `0..n` move to `m..m+n` and `n..n+m` move to `0..m`.
    pub fn block_swap(n: usize, m: usize) -> Self {
        let image = (0..n).map(|i| i + m).chain(0..m).collect();
        Permutation { image }
    }

    /// The transposition of zero-based positions `i` and `i+1`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(i, i + 1);
        p
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Standard composition `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    /// Temporal composition: `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        other.compose(self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.image[i] > self.image[j])
            .count()
    }

    /// `+1` or `-1`, from the cycle decomposition.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.len()];
        let mut even_cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.image[i];
                len += 1;
            }
            if len % 2 == 0 {
                even_cycles += 1;
            }
        }
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Disjoint union: `other` acts on the positions after `self`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        let image = self.image.iter().copied().chain(other.image.iter().map(|&x| x + n)).collect();
        Permutation { image }
    }

    pub fn matrix(&self) -> PermutationMatrix {
        PermutationMatrix::from_permutation(self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.image.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(format!("expected `[...]` permutation, got {s:?}")))?;
        let image = inner
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_based(&image)
    }
}

/// The image of a permutation in `O(n)`: `M[π(i)][i] = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl PermutationMatrix {
    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.len();
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[p.apply(i) * n + i] = 1;
        }
        PermutationMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn mul(&self, other: &PermutationMatrix) -> PermutationMatrix {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let n = self.n;
        let mut entries = vec![0i8; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    entries[r * n + c] += a * other.get(k, c);
                }
            }
        }
        PermutationMatrix { n, entries }
    }

    pub fn block_diag(&self, other: &PermutationMatrix) -> PermutationMatrix {
        let n = self.n + other.n;
        let mut entries = vec![0; n * n];
        for r in 0..self.n {
            for c in 0..self.n {
                entries[r * n + c] = self.get(r, c);
            }
        }
        for r in 0..other.n {
            for c in 0..other.n {
                entries[(r + self.n) * n + c + self.n] = other.get(r, c);
            }
        }
        PermutationMatrix { n, entries }
    }

    /// Determinant by row swaps down to the identity.
    pub fn det(&self) -> i32 {
        let n = self.n;
        let mut rows: Vec<Vec<i8>> = self.rows().map(|r| r.to_vec()).collect();
        let mut det = 1;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| rows[r][col] != 0) else {
                return 0;
            };
            if pivot != col {
                rows.swap(pivot, col);
                det = -det;
            }
            det *= rows[col][col] as i32;
        }
        det
    }
}

impl fmt::Display for PermutationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
