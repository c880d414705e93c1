//! The abelianized braid groupoid and the functors out of the braid groupoid.
//!
//! Objects of the abelianized groupoid are non-negative integers, every
//! endomorphism set is `ℤ`, composition and tensor product both add, and the
//! braiding `p + q → q + p` is the integer `pq`.

use crate::braid::{braiding_element, BraidWord, PermutationMatrix};
use crate::{Error, Result};

/// A morphism `source → target` of the abelianized groupoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AbMorphism {
    source: usize,
    target: usize,
    value: i64,
}

impl AbMorphism {
    /// Only endomorphisms exist.
    pub fn new(source: usize, target: usize, value: i64) -> Result<Self> {
        if source != target {
            return Err(Error::ObjectMismatch { left: source, right: target });
        }
        Ok(AbMorphism { source, target, value })
    }

    pub fn identity(object: usize) -> Self {
        AbMorphism { source: object, target: object, value: 0 }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    pub fn inverse(&self) -> Self {
        AbMorphism { value: -self.value, ..*self }
    }
}

/// The functor that takes each braid to its writhe.
pub fn abelianize(w: &BraidWord) -> AbMorphism {
    AbMorphism::identity(w.strands()).with_value(w.writhe())
}

impl AbMorphism {
    fn with_value(self, value: i64) -> Self {
        AbMorphism { value, ..self }
    }
}

/// `g ∘ f`; objects must match.
pub fn ab_compose(f: &AbMorphism, g: &AbMorphism) -> Result<AbMorphism> {
    if f.target != g.source {
        return Err(Error::ObjectMismatch { left: f.target, right: g.source });
    }
    Ok(AbMorphism { source: f.source, target: g.target, value: f.value + g.value })
}

pub fn ab_tensor(f: &AbMorphism, g: &AbMorphism) -> AbMorphism {
    AbMorphism {
        source: f.source + g.source,
        target: f.target + g.target,
        value: f.value + g.value,
    }
}

/// The braiding `p + q → q + p`, the image of `c_{p,q}`.
pub fn ab_braiding(p: usize, q: usize) -> AbMorphism {
    AbMorphism::identity(p + q).with_value((p * q) as i64)
}

/// Associators are identities.
pub fn ab_associator(p: usize, q: usize, r: usize) -> AbMorphism {
    AbMorphism::identity(p + q + r)
}

/// The two composites around one hexagon diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HexagonInstance {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub path_a: i64,
    pub path_b: i64,
}

impl HexagonInstance {
    pub fn commutes(&self) -> bool {
        self.path_a == self.path_b
    }
}

fn compose_all(first: AbMorphism, rest: &[AbMorphism]) -> Result<AbMorphism> {
    rest.iter().try_fold(first, |acc, g| ab_compose(&acc, g))
}

/// Evaluates both hexagon diagrams of the abelianized braiding at `(p, q, r)`.
///
/// First diagram, from `(p+q)+r` to `(r+q)+p`:
/// `α ; 1_p⊗c_{q,r} ; c_{p,r+q}` against `c_{p,q}⊗1_r ; c_{q+p,r} ; α`.
/// Second diagram, from `p+(q+r)` to `(r+p)+q`:
/// `1_p⊗c_{q,r} ; α ; c_{p,r}⊗1_q` against `α ; c_{p+q,r} ; α`.
pub fn hexagon_check(p: usize, q: usize, r: usize) -> (HexagonInstance, HexagonInstance) {
    let id = AbMorphism::identity;
    let first_a = compose_all(
        ab_associator(p, q, r),
        &[ab_tensor(&id(p), &ab_braiding(q, r)), ab_braiding(p, r + q)],
    );
    let first_b = compose_all(
        ab_tensor(&ab_braiding(p, q), &id(r)),
        &[ab_braiding(q + p, r), ab_associator(r, q, p)],
    );
    let second_a = compose_all(
        ab_tensor(&id(p), &ab_braiding(q, r)),
        &[ab_associator(p, r, q), ab_tensor(&ab_braiding(p, r), &id(q))],
    );
    let second_b = compose_all(
        ab_associator(p, q, r),
        &[ab_braiding(p + q, r), ab_associator(r, p, q)],
    );
    let value = |m: Result<AbMorphism>| m.expect("hexagon objects all equal p+q+r").value();
    (
        HexagonInstance { p, q, r, path_a: value(first_a), path_b: value(first_b) },
        HexagonInstance { p, q, r, path_a: value(second_a), path_b: value(second_b) },
    )
}

/// All hexagon instances with `0 <= p, q, r <= max`.
pub fn hexagon_sweep(max: usize) -> Vec<(HexagonInstance, HexagonInstance)> {
    let mut out = Vec::with_capacity((max + 1).pow(3));
    for p in 0..=max {
        for q in 0..=max {
            for r in 0..=max {
                out.push(hexagon_check(p, q, r));
            }
        }
    }
    out
}

/// Naturality of the braiding for `f: p → p`, `g: q → q`:
/// `(f ⊗ g) ; c_{p,q}` equals `c_{p,q} ; (g ⊗ f)`.
pub fn braiding_is_natural(f: &AbMorphism, g: &AbMorphism) -> bool {
    let c = ab_braiding(f.source(), g.source());
    let lhs = ab_compose(&ab_tensor(f, g), &c);
    let rhs = ab_compose(&c, &ab_tensor(g, f));
    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
}

/// `𝔹ₙ → Σₙ → O(n)`.
pub fn perm_functor(w: &BraidWord) -> PermutationMatrix {
    w.underlying_permutation().matrix()
}

/// Abelianized image of the braiding element, for checking `c_{n,m} ↦ nm`.
pub fn abelianized_braiding(n: usize, m: usize) -> AbMorphism {
    abelianize(&braiding_element(n, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(abelianize(&w(3, &[1, 2, 1])), AbMorphism::new(3, 3, 3).unwrap());
        assert_eq!(abelianized_braiding(2, 3), AbMorphism::new(5, 5, 6).unwrap());
        assert_eq!(abelianize(&BraidWord::identity(5)), AbMorphism::new(5, 5, 0).unwrap());
    }

    #[test]
    fn compose_and_tensor_examples() {
        let m = |p, v| AbMorphism::new(p, p, v).unwrap();
        assert_eq!(ab_compose(&m(3, 2), &m(3, -2)).unwrap(), m(3, 0));
        assert_eq!(ab_tensor(&m(2, 1), &m(3, 4)), m(5, 5));
        assert_eq!(ab_tensor(&m(0, 0), &m(4, 7)), m(4, 7));
        assert_eq!(ab_compose(&m(2, 1), &m(3, 1)), Err(Error::ObjectMismatch { left: 2, right: 3 }));
        assert!(AbMorphism::new(2, 3, 0).is_err());
    }

    #[test]
    fn hexagon_examples() {
        let (d1, d2) = hexagon_check(1, 1, 1);
        assert_eq!((d1.path_a, d1.path_b), (3, 3));
        assert_eq!((d2.path_a, d2.path_b), (2, 2));

        let (d1, d2) = hexagon_check(0, 4, 7);
        assert_eq!((d1.path_a, d1.path_b), (28, 28));
        assert!(d2.commutes());

        let (d1, d2) = hexagon_check(2, 3, 5);
        assert_eq!((d1.path_a, d1.path_b), (31, 31));
        assert_eq!((d2.path_a, d2.path_b), (25, 25));
    }

    #[test]
    fn naturality() {
        let f = AbMorphism::new(3, 3, -4).unwrap();
        let g = AbMorphism::new(2, 2, 9).unwrap();
        assert!(braiding_is_natural(&f, &g));
    }

    #[test]
    fn perm_functor_examples() {
        assert_eq!(perm_functor(&w(2, &[1])).to_string(), "0 1\n1 0");
        let u = w(2, &[1]);
        assert_eq!(perm_functor(&u.tensor(&u)), perm_functor(&u).block_diag(&perm_functor(&u)));
        assert_eq!(perm_functor(&w(3, &[1, 2, 1])), perm_functor(&w(3, &[2, 1, 2])));
    }

    #[test]
    fn perm_functor_reverses_temporal_products() {
        // column-vector convention: the later factor multiplies on the left
        let u = w(3, &[1]);
        let v = w(3, &[2]);
        let uv = u.concat(&v).unwrap();
        assert_eq!(perm_functor(&uv), perm_functor(&v).mul(&perm_functor(&u)));
    }
}
