//! Seeded property suite covering every module at desk scale.
//!
//! Each property draws from its own generator, derived from the run seed and
//! the property's position, so properties can run in any order or on any
//! thread without changing their inputs.

use std::fmt;
use std::thread;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::braid::{braiding_element, BraidWord, Permutation};
use crate::category::{abelianize, braiding_is_natural, hexagon_check, perm_functor, AbMorphism};
use crate::config::{braid_word_to_loop, loop_discriminant_winding, loop_to_braid, e};
use crate::garside::{braids_equal, conjugation_check_with, normal_form};
use crate::sample::{self, SampleRng};
use crate::steenrod::{
    coproduct_is_coassociative, graded_dimensions, kudo_araki_generator_degrees,
    milnor_generator_degrees, universal_coproduct, AdditiveSeries, F2Poly, Var,
};

/// Replaceable pieces of the library, so negative controls can inject faults.
#[derive(Clone, Copy)]
pub struct Fixture {
    pub braiding: fn(usize, usize) -> BraidWord,
}

impl Default for Fixture {
    fn default() -> Self {
        Fixture { braiding: braiding_element }
    }
}

type Check = fn(&mut SampleRng, &Fixture) -> Result<(), String>;

struct Property {
    name: &'static str,
    check: Check,
}

const PROPERTIES: &[Property] = &[
    Property { name: "braid-relations", check: braid_relations },
    Property { name: "dewrithed-conjugation", check: dewrithed_conjugation },
    Property { name: "dewrithed-closure", check: dewrithed_closure },
    Property { name: "abelianized-braiding", check: abelianized_braiding },
    Property { name: "abelianize-monoidal", check: abelianize_monoidal },
    Property { name: "hexagons", check: hexagons },
    Property { name: "perm-functor", check: perm_functor_laws },
    Property { name: "sign-law", check: sign_law },
    Property { name: "tensor-strict", check: tensor_strict },
    Property { name: "discriminant-scaling", check: discriminant_scaling },
    Property { name: "anomaly-exponential", check: anomaly_exponential },
    Property { name: "winding-equals-writhe", check: winding_equals_writhe },
    Property { name: "loop-round-trip", check: loop_round_trip },
    Property { name: "composition-group", check: composition_group },
    Property { name: "additivity", check: additivity },
    Property { name: "twisted-intertwining", check: twisted_intertwining },
    Property { name: "coproduct", check: coproduct },
    Property { name: "graded-shadow", check: graded_shadow },
];

#[derive(Debug, Clone)]
pub struct Outcome {
    pub name: &'static str,
    pub result: Result<(), String>,
    pub elapsed: Duration,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub seed: u64,
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(Outcome::passed)
    }

    pub fn passed_names(&self) -> Vec<&'static str> {
        self.outcomes.iter().filter(|o| o.passed()).map(|o| o.name).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "selftest seed={}", self.seed)?;
        for o in &self.outcomes {
            match &o.result {
                Ok(()) => writeln!(f, "PASS {} ({:.1?})", o.name, o.elapsed)?,
                Err(why) => writeln!(f, "FAIL {} ({:.1?}): {why}", o.name, o.elapsed)?,
            }
        }
        let passed = self.outcomes.iter().filter(|o| o.passed()).count();
        write!(f, "{passed}/{} properties passed", self.outcomes.len())
    }
}

pub fn property_names() -> Vec<&'static str> {
    PROPERTIES.iter().map(|p| p.name).collect()
}

pub fn run(seed: u64) -> Report {
    run_with(seed, &Fixture::default())
}

/// Runs every property, one thread per property, and joins before reporting.
pub fn run_with(seed: u64, fixture: &Fixture) -> Report {
    let outcomes = thread::scope(|scope| {
        let handles: Vec<_> = PROPERTIES
            .iter()
            .enumerate()
            .map(|(k, prop)| {
                scope.spawn(move || {
                    let mut rng = sample::rng(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ k as u64);
                    let start = Instant::now();
                    let result = (prop.check)(&mut rng, fixture);
                    Outcome { name: prop.name, result, elapsed: start.elapsed() }
                })
            })
            .collect();
        handles
            .into_iter()
            .zip(PROPERTIES)
            .map(|(h, prop)| {
                h.join().unwrap_or_else(|_| Outcome {
                    name: prop.name,
                    result: Err("panicked".into()),
                    elapsed: Duration::ZERO,
                })
            })
            .collect()
    });
    Report { seed, outcomes }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool, String> {
    braids_equal(u, v).map_err(|e| e.to_string())
}

fn braid_relations(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    let w = |n, l: &[i32]| BraidWord::new(n, l.to_vec()).map_err(|e| e.to_string());
    ensure(equal(&w(3, &[1, 2, 1])?, &w(3, &[2, 1, 2])?)?, || "σ1σ2σ1 != σ2σ1σ2".into())?;
    ensure(equal(&w(4, &[1, 3])?, &w(4, &[3, 1])?)?, || "σ1σ3 != σ3σ1".into())?;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=6);
        let u = sample::word(rng, n, 40);
        let v = sample::relation_mutation(rng, &u);
        ensure(normal_form(&u) == normal_form(&v), || format!("{u} and {v} differ"))?;
    }
    Ok(())
}

fn dewrithed_conjugation(rng: &mut SampleRng, fx: &Fixture) -> Result<(), String> {
    let sigma1 = BraidWord::generator(2, 1).map_err(|e| e.to_string())?;
    ensure(conjugation_check_with(&sigma1, fx.braiding), || "fails for σ1 in B2".into())?;
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let beta = sample::dewrithed_word(rng, n, 12);
        ensure(conjugation_check_with(&beta, fx.braiding), || format!("fails for {beta}"))?;
    }
    Ok(())
}

fn dewrithed_closure(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let a = sample::dewrithed_word(rng, n, 12);
        let b = sample::dewrithed_word(rng, n, 12);
        let k = rng.gen_range(0..=4);
        let c = sample::dewrithed_word(rng, k, 12);
        let results = [
            a.concat(&b).map_err(|e| e.to_string())?,
            a.inverse(),
            a.tensor(&c),
            a.add_strand_left(),
            a.add_strand_right(),
        ];
        ensure(results.iter().all(BraidWord::is_dewrithed), || format!("closure fails at {a}, {b}"))?;
    }
    Ok(())
}

fn abelianized_braiding(_: &mut SampleRng, fx: &Fixture) -> Result<(), String> {
    for n in 0..=10 {
        for m in 0..=10 {
            let c = abelianize(&(fx.braiding)(n, m));
            ensure(c.value() == (n * m) as i64 && c.source() == n + m, || {
                format!("c_{{{n},{m}}} abelianizes to {}", c.value())
            })?;
        }
    }
    Ok(())
}

fn abelianize_monoidal(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..300 {
        let n = rng.gen_range(0..=8);
        let m = rng.gen_range(0..=8);
        let u = sample::word(rng, n, 20);
        let v = sample::word(rng, n, 20);
        let x = sample::word(rng, m, 20);
        let uv = u.concat(&v).map_err(|e| e.to_string())?;
        ensure(abelianize(&uv).value() == abelianize(&u).value() + abelianize(&v).value(), || {
            format!("composition fails at {u}, {v}")
        })?;
        ensure(abelianize(&u.tensor(&x)).value() == abelianize(&u).value() + abelianize(&x).value(), || {
            format!("tensor fails at {u}, {x}")
        })?;
        let f = AbMorphism::new(n, n, abelianize(&u).value()).map_err(|e| e.to_string())?;
        let g = AbMorphism::new(m, m, abelianize(&x).value()).map_err(|e| e.to_string())?;
        ensure(braiding_is_natural(&f, &g), || format!("naturality fails at {f:?}, {g:?}"))?;
    }
    Ok(())
}

fn hexagons(_: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for p in 0..=20 {
        for q in 0..=20 {
            for r in 0..=20 {
                let (a, b) = hexagon_check(p, q, r);
                ensure(a.commutes() && b.commutes(), || format!("hexagon fails at ({p},{q},{r})"))?;
            }
        }
    }
    Ok(())
}

fn perm_functor_laws(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let u = sample::word(rng, n, 20);
        let v = sample::relation_mutation(rng, &u);
        ensure(perm_functor(&u) == perm_functor(&v), || format!("{u} and {v} disagree"))?;
        let k = rng.gen_range(0..=4);
        let x = sample::word(rng, k, 10);
        ensure(
            perm_functor(&u.tensor(&x)) == perm_functor(&u).block_diag(&perm_functor(&x)),
            || format!("block sum fails at {u}, {x}"),
        )?;
    }
    Ok(())
}

fn sign_law(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8);
        let w = sample::word(rng, n, 64);
        let expected = if w.writhe().rem_euclid(2) == 0 { 1 } else { -1 };
        ensure(w.underlying_permutation().sign() == expected, || format!("sign law fails at {w}"))?;
    }
    Ok(())
}

fn tensor_strict(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..300 {
        let words: Vec<BraidWord> =
            (0..3)
                .map(|_| {
                    let n = rng.gen_range(0..=5);
                    sample::word(rng, n, 10)
                })
                .collect();
        let (a, b, c) = (&words[0], &words[1], &words[2]);
        ensure(a.tensor(b).tensor(c) == a.tensor(&b.tensor(c)), || "associativity".into())?;
        ensure(a.tensor(&BraidWord::identity(0)) == *a, || "right unit".into())?;
        ensure(BraidWord::identity(0).tensor(a) == *a, || "left unit".into())?;
        let reduced = a.free_reduce();
        ensure(
            reduced.free_reduce() == reduced
                && reduced.writhe() == a.writhe()
                && reduced.underlying_permutation() == a.underlying_permutation(),
            || format!("free reduction of {a}"),
        )?;
    }
    for n in 0..=6 {
        for m in 0..=6 {
            let c = braiding_element(n, m);
            ensure(c.underlying_permutation() == Permutation::block_swap(m, n), || {
                format!("c_{{{n},{m}}} has the wrong permutation")
            })?;
        }
    }
    Ok(())
}

fn discriminant_scaling(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let f = sample::configuration(rng, n);
        let u = sample::unit_scale(rng);
        let scaled = f.scale(u).map_err(|e| e.to_string())?.discriminant();
        let expected = u.powi((n * (n - 1)) as i32) * f.discriminant();
        let rel = (scaled - expected).norm() / expected.norm();
        ensure(rel <= 1e-9, || format!("relative error {rel:e} for n={n}"))?;
    }
    Ok(())
}

fn anomaly_exponential(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let f = sample::configuration(rng, n);
        let d = f.discriminant();
        let a = f.anomaly();
        let rel = (e(a.delta()) - d).norm() / d.norm();
        ensure(rel <= 1e-9 && (0.0..1.0).contains(&a.delta().re), || {
            format!("anomaly mismatch, relative error {rel:e}")
        })?;
    }
    Ok(())
}

fn winding_equals_writhe(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let w = sample::word(rng, n, 12);
        let l = braid_word_to_loop(&w, 32).map_err(|e| e.to_string())?;
        let winding = loop_discriminant_winding(&l).map_err(|e| e.to_string())?;
        ensure(winding == w.writhe(), || format!("winding {winding} for {w}"))?;
    }
    Ok(())
}

fn loop_round_trip(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let w = sample::word(rng, n, 12);
        let l = braid_word_to_loop(&w, 32).map_err(|e| e.to_string())?;
        let back = loop_to_braid(&l).map_err(|e| e.to_string())?;
        ensure(equal(&back, &w)?, || format!("{w} came back as {back}"))?;
    }
    Ok(())
}

fn composition_group(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    let id = AdditiveSeries::identity(6).map_err(|e| e.to_string())?;
    for _ in 0..100 {
        let [a, b, c] = [(); 3].map(|_| sample::scalar_series(rng, 6));
        let compose = |x: &AdditiveSeries, y: &AdditiveSeries| x.compose(y).map_err(|e| e.to_string());
        ensure(compose(&compose(&a, &b)?, &c)? == compose(&a, &compose(&b, &c)?)?, || {
            format!("associativity fails at {a}, {b}, {c}")
        })?;
        ensure(compose(&a, &id)? == a && compose(&id, &a)? == a, || format!("unit fails at {a}"))?;
        let inv = a.invert();
        ensure(compose(&a, &inv)?.is_identity() && compose(&inv, &a)?.is_identity(), || {
            format!("inverse fails at {a}")
        })?;
    }
    Ok(())
}

fn additivity(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..100 {
        let a = sample::scalar_series(rng, 5);
        ensure(a.additivity_check(), || format!("additivity fails at {a}"))?;
    }
    let universal = AdditiveSeries::universal(5, 0).map_err(|e| e.to_string())?;
    ensure(universal.additivity_check(), || "additivity fails for the universal series".into())
}

fn twisted_intertwining(rng: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for _ in 0..100 {
        let a = sample::scalar_series(rng, 5);
        let b = sample::scalar_series(rng, 5);
        let lhs = a.compose(&b).map_err(|e| e.to_string())?.to_twisted();
        let rhs = a.to_twisted().mul(&b.to_twisted()).truncate(5);
        ensure(lhs == rhs, || format!("intertwining fails at {a}, {b}"))?;
    }
    Ok(())
}

fn coproduct(_: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    for n in 1..=3u32 {
        let mut expected = F2Poly::zero();
        for i in 0..=n {
            let outer = if i == 0 { F2Poly::one() } else { F2Poly::var(Var::xi_prime(i)) };
            let inner = if i == n { F2Poly::one() } else { F2Poly::xi(n - i).frobenius(i) };
            expected.add_assign(&outer.mul(&inner));
        }
        let got = universal_coproduct(n).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("ψ(ξ{n}) = {got}, expected {expected}"))?;
    }
    for n in 1..=4 {
        ensure(coproduct_is_coassociative(n), || format!("coassociativity fails at ξ{n}"))?;
    }
    Ok(())
}

fn graded_shadow(_: &mut SampleRng, _: &Fixture) -> Result<(), String> {
    let low = graded_dimensions(&milnor_generator_degrees(7), 7).map_err(|e| e.to_string())?;
    ensure(low == [1, 1, 1, 2, 2, 2, 3, 4], || format!("low degrees {low:?}"))?;
    let xi = graded_dimensions(&milnor_generator_degrees(64), 64).map_err(|e| e.to_string())?;
    let x = graded_dimensions(&kudo_araki_generator_degrees(64), 64).map_err(|e| e.to_string())?;
    ensure(xi == x, || "ξ and x presentations disagree".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::permutation_braid_lift;

    #[test]
    fn names_are_unique() {
        let mut names = property_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), PROPERTIES.len());
    }

    #[test]
    fn corrupted_braiding_fails_conjugation_only() {
        fn reversed(n: usize, m: usize) -> BraidWord {
            permutation_braid_lift(&Permutation::block_swap(n, m))
        }
        let report = run_with(0, &Fixture { braiding: reversed });
        let failed: Vec<_> =
            report.outcomes.iter().filter(|o| !o.passed()).map(|o| o.name).collect();
        assert_eq!(failed, vec!["dewrithed-conjugation"]);
    }
}
