//! Oracles that do not share code paths with the library.
#![allow(dead_code)]

use dewrithe::braid::BraidWord;
use dewrithe::steenrod::{F2Poly, Var};

/// Image of each free generator under Artin's action of the braid on the free
/// group `F_n`, as freely reduced words in `±1..=±n`. The action is faithful,
/// so two braids are equal iff their images agree.
///
/// Returns `None` if an image grows past `cap` letters.
pub fn artin_action(w: &BraidWord, cap: usize) -> Option<Vec<Vec<i32>>> {
    let n = w.strands();
    let mut img: Vec<Vec<i32>> = (1..=n as i32).map(|k| vec![k]).collect();
    for &e in w.letters() {
        let i = e.unsigned_abs() as usize - 1;
        let (a, b) = (img[i].clone(), img[i + 1].clone());
        if e > 0 {
            // x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
            img[i] = reduce([&a[..], &b[..], &invert(&a)[..]].concat());
            img[i + 1] = a;
        } else {
            // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
            img[i] = b.clone();
            img[i + 1] = reduce([&invert(&b)[..], &a[..], &b[..]].concat());
        }
        if img.iter().any(|x| x.len() > cap) {
            return None;
        }
    }
    Some(img)
}

fn invert(x: &[i32]) -> Vec<i32> {
    x.iter().rev().map(|e| -e).collect()
}

fn reduce(x: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(x.len());
    for e in x {
        if out.last() == Some(&-e) {
            out.pop();
        } else {
            out.push(e);
        }
    }
    out
}

/// Equality by the Artin action; `None` when the images are too large.
pub fn artin_equal(u: &BraidWord, v: &BraidWord) -> Option<bool> {
    const CAP: usize = 200_000;
    Some(artin_action(u, CAP)? == artin_action(v, CAP)?)
}

/// Dense polynomial in `T` with `F2Poly` coefficients, truncated below `T^bound`.
pub type Dense = Vec<F2Poly>;

pub fn dense_mul(x: &Dense, y: &Dense, bound: usize) -> Dense {
    let mut out = vec![F2Poly::zero(); bound];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if i + j < bound && !b.is_zero() {
                out[i + j].add_assign(&a.mul(b));
            }
        }
    }
    out
}

/// `T + Σ_{1≤i<k} X_i T^{2^i}` for the generators in `slot`, dense below `T^{2^k}`.
pub fn universal_dense(k: u32, slot: u8) -> Dense {
    let bound = 1usize << k;
    let mut p = vec![F2Poly::zero(); bound];
    p[1] = F2Poly::one();
    for i in 1..k {
        p[1 << i] = F2Poly::var(Var { slot, index: i });
    }
    p
}

/// `outer(inner(T))` by literal substitution: every power of `inner` is
/// built by repeated multiplication, without using additivity.
pub fn substitute_dense(outer: &Dense, inner: &Dense, bound: usize) -> Dense {
    let mut out = vec![F2Poly::zero(); bound];
    let mut power: Dense = vec![F2Poly::zero(); bound];
    power[0] = F2Poly::one();
    let top = outer.iter().rposition(|c| !c.is_zero()).map_or(0, |t| t + 1);
    for (e, c) in outer.iter().enumerate().take(top.min(bound)) {
        if e > 0 {
            power = dense_mul(&power, inner, bound);
        }
        if c.is_zero() {
            continue;
        }
        for (k, pc) in power.iter().enumerate() {
            if !pc.is_zero() {
                out[k].add_assign(&c.mul(pc));
            }
        }
    }
    out
}

/// Counts monomials in generators of the given degrees, degree by degree,
/// by enumerating exponent vectors.
pub fn enumerate_monomials(degrees: &[u64], max: u64) -> Vec<u64> {
    fn go(degrees: &[u64], max: u64, so_far: u64, counts: &mut [u64]) {
        match degrees.split_first() {
            None => counts[so_far as usize] += 1,
            Some((&d, rest)) => {
                let mut deg = so_far;
                while deg <= max {
                    go(rest, max, deg, counts);
                    deg += d;
                }
            }
        }
    }
    let mut counts = vec![0; max as usize + 1];
    go(degrees, max, 0, &mut counts);
    counts
}
