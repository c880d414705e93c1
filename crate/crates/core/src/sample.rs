//! Seeded random inputs shared by the selftest suite and the test suites.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::config::Configuration;
use crate::steenrod::AdditiveSeries;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_letter<R: Rng>(rng: &mut R, n: usize) -> i32 {
    let i = rng.gen_range(1..n as i32);
    if rng.gen() {
        i
    } else {
        -i
    }
}

/// A word of exactly `len` letters; empty when `n < 2`.
pub fn word_of_length<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let letters = (0..len).map(|_| random_letter(rng, n)).collect();
    BraidWord::new(n, letters).expect("sampled letters are in range")
}

/// A word with uniformly random length in `0..=max_len`.
pub fn word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    word_of_length(rng, n, len)
}

/// A writhe-zero word of even length at most `max_len`.
pub fn dewrithed_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let half = rng.gen_range(0..=max_len / 2);
    let mut letters: Vec<i32> = (0..2 * half)
        .map(|k| {
            let i = rng.gen_range(1..n as i32);
            if k < half {
                i
            } else {
                -i
            }
        })
        .collect();
    letters.shuffle(rng);
    BraidWord::new(n, letters).expect("sampled letters are in range")
}

/// Applies one braid-group relation somewhere in `w`, keeping the braid
/// unchanged: inserting `e, −e`, inserting a braid or commutation relator
/// (`σᵢσᵢ₊₁σᵢσᵢ₊₁⁻¹σᵢ⁻¹σᵢ₊₁⁻¹`, `σᵢσⱼσᵢ⁻¹σⱼ⁻¹`), or rewriting an occurrence of
/// `σᵢσᵢ₊₁σᵢ` or a far-commuting pair in place.
pub fn relation_mutation<R: Rng>(rng: &mut R, w: &BraidWord) -> BraidWord {
    let n = w.strands();
    if n < 2 {
        return w.clone();
    }
    let mut letters = w.letters().to_vec();
    let at = rng.gen_range(0..=letters.len());
    let splice = |letters: &mut Vec<i32>, insert: Vec<i32>| {
        letters.splice(at..at, insert);
    };
    let choice = rng.gen_range(0..5);
    match choice {
        2 if n >= 3 => {
            let i = rng.gen_range(1..n as i32 - 1);
            let mut relator = vec![i, i + 1, i, -(i + 1), -i, -(i + 1)];
            if rng.gen() {
                relator = relator.iter().rev().map(|e| -e).collect();
            }
            let rot = rng.gen_range(0..relator.len());
            relator.rotate_left(rot);
            splice(&mut letters, relator);
        }
        3 if n >= 4 => {
            let i = rng.gen_range(1..n as i32 - 2);
            let j = rng.gen_range(i + 2..n as i32);
            let (a, b) = if rng.gen() { (i, j) } else { (j, i) };
            let sa = if rng.gen() { a } else { -a };
            let sb = if rng.gen() { b } else { -b };
            splice(&mut letters, vec![sa, sb, -sa, -sb]);
        }
        4 => {
            if !rewrite_in_place(rng, &mut letters) {
                let e = random_letter(rng, n);
                splice(&mut letters, vec![e, -e]);
            }
        }
        _ => {
            let e = random_letter(rng, n);
            splice(&mut letters, vec![e, -e]);
        }
    }
    BraidWord::new(n, letters).expect("relations preserve the strand range")
}

/// Rewrites one randomly chosen site `aba → bab` (same signs, `|a−b| = 1`) or
/// `ab → ba` (`|a−b| >= 2`). Returns false if no site exists.
fn rewrite_in_place<R: Rng>(rng: &mut R, letters: &mut [i32]) -> bool {
    let mut sites = Vec::new();
    for k in 0..letters.len() {
        if k + 1 < letters.len() && (letters[k].abs() - letters[k + 1].abs()).abs() >= 2 {
            sites.push((k, 2));
        }
        if k + 2 < letters.len() {
            let (a, b, c) = (letters[k], letters[k + 1], letters[k + 2]);
            let same_sign = a.signum() == b.signum() && b.signum() == c.signum();
            if same_sign && a == c && (a.abs() - b.abs()).abs() == 1 {
                sites.push((k, 3));
            }
        }
    }
    let Some(&(k, kind)) = sites.choose(rng) else {
        return false;
    };
    if kind == 2 {
        letters.swap(k, k + 1);
    } else {
        let (a, b) = (letters[k], letters[k + 1]);
        letters[k] = b;
        letters[k + 1] = a;
        letters[k + 2] = b;
    }
    true
}

/// `n` points in `[-2, 2]²`, pairwise at least `0.05` apart.
pub fn configuration<R: Rng>(rng: &mut R, n: usize) -> Configuration {
    loop {
        let points: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
            .collect();
        let spread = points
            .iter()
            .enumerate()
            .all(|(i, a)| points[i + 1..].iter().all(|b| (a - b).norm() >= 0.05));
        if spread {
            return Configuration::new(points).expect("points are well separated");
        }
    }
}

/// A nonzero complex number with modulus in `[0.5, 2]`.
pub fn unit_scale<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
}

/// A series with uniformly random scalar coefficients.
pub fn scalar_series<R: Rng>(rng: &mut R, truncation: u32) -> AdditiveSeries {
    let bits: Vec<bool> = (1..truncation).map(|_| rng.gen()).collect();
    AdditiveSeries::scalar(truncation, &bits).expect("truncation is valid")
}
