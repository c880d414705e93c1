//! Left-greedy Garside normal form in the braid group.
//!
//! Simple elements are permutation braids, stored as the [`Permutation`] of
//! their strands. A simple element with permutation `π` starts with `σ_i` iff
//! the strands starting at `i` and `i+1` cross (`π(i) > π(i+1)`), and ends
//! with `σ_i` iff the strands ending at `i` and `i+1` cross.

use std::fmt;
use std::str::FromStr;

use crate::braid::{BraidWord, Permutation};
use crate::{Error, Result};

/// A positive braid in which each pair of strands crosses at most once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationBraid(Permutation);

impl PermutationBraid {
    pub fn new(p: Permutation) -> Self {
        PermutationBraid(p)
    }

    pub fn identity(n: usize) -> Self {
        PermutationBraid(Permutation::identity(n))
    }

    pub fn half_twist(n: usize) -> Self {
        PermutationBraid(Permutation::reversal(n))
    }

    pub fn permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn is_half_twist(&self) -> bool {
        self.0 == Permutation::reversal(self.strands())
    }

    /// Number of crossings, equal to the writhe of the lift.
    pub fn length(&self) -> usize {
        self.0.inversions()
    }

    pub fn to_word(&self) -> BraidWord {
        permutation_braid_lift(&self.0)
    }

    /// Zero-based `i` such that `σ_{i+1}` is a left divisor.
    fn starts_with(&self, i: usize) -> bool {
        self.0.apply(i) > self.0.apply(i + 1)
    }

    /// Zero-based `i` such that `σ_{i+1}` is a right divisor.
    fn ends_with(&self, i: usize) -> bool {
        let inv = self.0.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// Conjugate by the half twist: `Δ A Δ⁻¹`.
    fn flip(&self) -> Self {
        let rev = Permutation::reversal(self.strands());
        PermutationBraid(rev.compose(&self.0).compose(&rev))
    }
}

/// The positive word `Δ_n = (σ₁…σ_{n−1})(σ₁…σ_{n−2})…(σ₁)`.
pub fn half_twist(n: usize) -> BraidWord {
    let mut letters = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for top in (1..n).rev() {
        letters.extend(1..=top as i32);
    }
    BraidWord::new(n, letters).expect("half twist letters are in range")
}

/// The positive word with underlying permutation `p` in which each pair of
/// strands crosses at most once, read off by bubble-sorting end positions.
pub fn permutation_braid_lift(p: &Permutation) -> BraidWord {
    let n = p.len();
    // targets[pos] = final position of the strand currently at pos
    let mut targets: Vec<usize> = p.image().to_vec();
    let mut letters = Vec::with_capacity(p.inversions());
    loop {
        let mut swapped = false;
        for j in 0..n.saturating_sub(1) {
            if targets[j] > targets[j + 1] {
                targets.swap(j, j + 1);
                letters.push(j as i32 + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    BraidWord::new(n, letters).expect("bubble sort letters are in range")
}

/// `Δ^infimum · A₁ · A₂ ⋯ A_r` with every `A_k` a proper simple element and
/// each consecutive pair left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<PermutationBraid>,
}

impl GarsideNormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    /// `infimum + r`.
    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn writhe(&self) -> i64 {
        let n = self.strands as i64;
        self.infimum * n * (n - 1) / 2 + self.factors.iter().map(|f| f.length() as i64).sum::<i64>()
    }

    /// Expands back to a word: `Δ^k` (or its inverse) followed by the factor lifts.
    pub fn to_word(&self) -> BraidWord {
        let delta = half_twist(self.strands);
        let power = if self.infimum >= 0 { delta } else { delta.inverse() };
        let mut letters = Vec::new();
        for _ in 0..self.infimum.unsigned_abs() {
            letters.extend_from_slice(power.letters());
        }
        for f in &self.factors {
            letters.extend_from_slice(f.to_word().letters());
        }
        BraidWord::new(self.strands, letters).expect("normal form letters are in range")
    }

    /// Checks the structural invariants: factors are proper and left-weighted.
    pub fn is_left_greedy(&self) -> bool {
        let n = self.strands;
        if self.factors.iter().any(|f| f.strands() != n || f.is_identity() || f.is_half_twist()) {
            return false;
        }
        self.factors
            .windows(2)
            .all(|w| (0..n.saturating_sub(1)).all(|i| !w[1].starts_with(i) || w[0].ends_with(i)))
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.infimum)?;
        for factor in &self.factors {
            write!(f, " | {}", factor.permutation())?;
        }
        Ok(())
    }
}

impl FromStr for GarsideNormalForm {
    type Err = Error;

    /// Parses `Δ^k | [..] | [..]`. A form without factors carries no strand
    /// count, so the parsed value is only useful when factors are present or
    /// after [`GarsideNormalForm::with_strands`].
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split('|');
        let head = parts.next().unwrap_or("").trim();
        let exp = head
            .strip_prefix("Δ^")
            .ok_or_else(|| Error::parse(format!("expected `Δ^k`, got {head:?}")))?;
        let infimum: i64 =
            exp.trim().parse().map_err(|_| Error::parse(format!("bad exponent {exp:?}")))?;
        let factors = parts
            .map(|p| p.parse::<Permutation>().map(PermutationBraid))
            .collect::<Result<Vec<_>>>()?;
        let strands = factors.first().map_or(0, |f| f.strands());
        let nf = GarsideNormalForm { strands, infimum, factors };
        if !nf.is_left_greedy() {
            return Err(Error::parse(format!("{s:?} is not a left-greedy normal form")));
        }
        Ok(nf)
    }
}

impl GarsideNormalForm {
    /// Sets the strand count of a parsed form; fails if factors disagree.
    pub fn with_strands(mut self, n: usize) -> Result<Self> {
        if let Some(f) = self.factors.first() {
            if f.strands() != n {
                return Err(Error::StrandMismatch { left: f.strands(), right: n });
            }
        }
        self.strands = n;
        if n <= 1 {
            self.infimum = 0;
        }
        Ok(self)
    }
}

/// Computes the left-greedy normal form of a word.
pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands();
    if n <= 1 {
        return GarsideNormalForm { strands: n, infimum: 0, factors: Vec::new() };
    }
    let w = w.free_reduce();

    // Rewrite as Δ^k · (positive simple factors), using
    // σ_i⁻¹ = Δ⁻¹ · (Δσ_i⁻¹) and X · Δ⁻¹ = Δ⁻¹ · flip(X).
    let mut infimum: i64 = 0;
    let mut factors: Vec<PermutationBraid> = Vec::with_capacity(w.len());
    let rev = Permutation::reversal(n);
    for &e in w.letters() {
        let i = e.unsigned_abs() as usize - 1;
        let t = Permutation::adjacent(n, i);
        if e > 0 {
            factors.push(PermutationBraid(t));
        } else {
            infimum -= 1;
            for f in factors.iter_mut() {
                *f = f.flip();
            }
            // Δ · σ_i⁻¹ as a permutation: Δ first, then the transposition.
            factors.push(PermutationBraid(rev.then(&t)));
        }
    }

    left_weight(&mut factors);

    let mut leading_deltas = 0;
    while leading_deltas < factors.len() && factors[leading_deltas].is_half_twist() {
        leading_deltas += 1;
    }
    factors.drain(..leading_deltas);
    infimum += leading_deltas as i64;
    while factors.last().is_some_and(|f| f.is_identity()) {
        factors.pop();
    }
    GarsideNormalForm { strands: n, infimum, factors }
}

/// Slides generators leftward between adjacent factors until every pair is
/// left-weighted. Half twists collect at the front, identities at the back.
fn left_weight(factors: &mut [PermutationBraid]) {
    let Some(n) = factors.first().map(|f| f.strands()) else {
        return;
    };
    loop {
        let mut changed = false;
        for k in 0..factors.len().saturating_sub(1) {
            let (left, right) = factors.split_at_mut(k + 1);
            let a = &mut left[k];
            let b = &mut right[0];
            while let Some(i) = (0..n - 1).find(|&i| b.starts_with(i) && !a.ends_with(i)) {
                let t = Permutation::adjacent(n, i);
                // a ← a·σ_i, b ← σ_i⁻¹·b
                a.0 = a.0.then(&t);
                b.0 = b.0.compose(&t);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

/// Whether two words on the same number of strands are the same braid.
pub fn braids_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch { left: u.strands(), right: v.strands() });
    }
    Ok(normal_form(u) == normal_form(v))
}

/// `c_{n,1} · β₊ = β₋ · c_{n,1}` in the braid group on `n+1` strands.
pub fn dewrithed_conjugation_check(beta: &BraidWord) -> bool {
    conjugation_check_with(beta, crate::braid::braiding_element)
}

/// [`dewrithed_conjugation_check`] with a caller-supplied braiding element.
pub fn conjugation_check_with(beta: &BraidWord, braiding: fn(usize, usize) -> BraidWord) -> bool {
    let n = beta.strands();
    let c = braiding(n, 1);
    let (Ok(lhs), Ok(rhs)) =
        (c.concat(&beta.add_strand_right()), beta.add_strand_left().concat(&c))
    else {
        return false;
    };
    braids_equal(&lhs, &rhs).unwrap_or(false)
}
