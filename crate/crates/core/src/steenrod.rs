//! The dual Steenrod algebra at `p = 2` through its functor of points.
//!
//! Over an F₂-algebra `A`, automorphisms of the additive formal group are the
//! series `a(T) = T + Σ aᵢ T^{2ⁱ}` under composition. Composition reads
//!
//! ```text
//! (a ∘ b)ₙ = Σ_{i+j=n} aᵢ · bⱼ^{2ⁱ}        (a₀ = b₀ = 1)
//! ```
//!
//! and taking `a`, `b` to be the universal series with coefficients `ξ′ᵢ`,
//! `ξⱼ` gives the coproduct `ψ(ξₙ) = Σ ξ′ᵢ ξⱼ^{2ⁱ}`. Series are truncated
//! modulo `T^{2^K}`. Coefficients live in [`F2Poly`], which covers both the
//! scalar case (constants `0`, `1`) and the universal case.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Default truncation: exponents up to `T^{2^5} = T^32`, kept modulo `T^64`.
pub const DEFAULT_TRUNCATION: u32 = 6;

/// A polynomial generator. `slot` 0 is `ξ`, 1 is `ξ′`, 2 is `ξ″`; `index >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub slot: u8,
    pub index: u32,
}

impl Var {
    pub fn xi(index: u32) -> Self {
        Var { slot: 0, index }
    }

    pub fn xi_prime(index: u32) -> Self {
        Var { slot: 1, index }
    }

    /// Internal degree `2ⁱ − 1`.
    pub fn degree(&self) -> u64 {
        (1u64 << self.index) - 1
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi{}{}", "'".repeat(self.slot as usize), self.index)
    }
}

/// A monomial as a map from variables to positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(BTreeMap<Var, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(BTreeMap::from([(v, 1)]))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&v, &e) in &other.0 {
            *out.entry(v).or_insert(0) += e;
        }
        Monomial(out)
    }

    fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(&v, &e)| (v, e * k)).collect())
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|(v, &e)| v.degree() * e as u64).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial over F₂ stored as its set of monomials; addition is
/// symmetric difference.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Poly(BTreeSet<Monomial>);

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly(BTreeSet::new())
    }

    pub fn one() -> Self {
        F2Poly(BTreeSet::from([Monomial::one()]))
    }

    pub fn constant(bit: bool) -> Self {
        if bit {
            Self::one()
        } else {
            Self::zero()
        }
    }

    pub fn var(v: Var) -> Self {
        F2Poly(BTreeSet::from([Monomial::var(v)]))
    }

    pub fn xi(index: u32) -> Self {
        Self::var(Var::xi(index))
    }

    pub fn xi_prime(index: u32) -> Self {
        Self::var(Var::xi_prime(index))
    }

    pub fn from_monomials(monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = F2Poly::zero();
        for m in monomials {
            p.toggle(m);
        }
        p
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.iter().next().is_some_and(Monomial::is_one)
    }

    /// `Some(bit)` for the constants `0` and `1`.
    pub fn as_constant(&self) -> Option<bool> {
        match self.0.len() {
            0 => Some(false),
            1 if self.is_one() => Some(true),
            _ => None,
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        F2Poly(self.0.symmetric_difference(&other.0).cloned().collect())
    }

    pub fn add_assign(&mut self, other: &F2Poly) {
        for m in &other.0 {
            self.toggle(m.clone());
        }
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        let mut out = F2Poly::zero();
        for a in &self.0 {
            for b in &other.0 {
                out.toggle(a.mul(b));
            }
        }
        out
    }

    /// `p^{2^k}`; in characteristic 2 this raises every monomial.
    pub fn frobenius(&self, k: u32) -> F2Poly {
        let e = 1u32 << k;
        F2Poly(self.0.iter().map(|m| m.pow(e)).collect())
    }

    /// `p^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> F2Poly {
        let mut acc = F2Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Simultaneously replaces each variable `v` by `subst(v)` when it returns
    /// `Some`.
    pub fn substitute(&self, subst: &impl Fn(Var) -> Option<F2Poly>) -> F2Poly {
        let mut out = F2Poly::zero();
        for m in &self.0 {
            let mut term = F2Poly::one();
            for (v, e) in m.exponents() {
                let base = subst(v).unwrap_or_else(|| F2Poly::var(v));
                term = term.mul(&base.pow(e));
            }
            out.add_assign(&term);
        }
        out
    }
}

impl fmt::Display for F2Poly {
    /// Monomials in descending order, e.g. `xi1^2*xi2 + 1`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, m) in self.0.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

fn parse_factor(tok: &str) -> Result<Monomial> {
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => {
            (b, e.parse::<u32>().map_err(|_| Error::parse(format!("bad exponent in {tok:?}")))?)
        }
        None => (tok, 1),
    };
    if base == "1" {
        return Ok(Monomial::one());
    }
    let rest =
        base.strip_prefix("xi").ok_or_else(|| Error::parse(format!("bad variable {base:?}")))?;
    let slot = rest.chars().take_while(|&c| c == '\'').count();
    let index: u32 = rest[slot..]
        .parse()
        .ok()
        .filter(|&i| (1..64).contains(&i))
        .ok_or_else(|| Error::parse(format!("bad variable index in {base:?}")))?;
    if slot > 2 {
        return Err(Error::parse(format!("at most two primes allowed in {base:?}")));
    }
    Ok(Monomial::var(Var { slot: slot as u8, index }).pow(exp))
}

impl FromStr for F2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse("empty polynomial"));
        }
        if s == "0" {
            return Ok(F2Poly::zero());
        }
        let mut out = F2Poly::zero();
        for term in s.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            if term.is_empty() {
                return Err(Error::parse(format!("empty term in {s:?}")));
            }
            let m = term
                .split('*')
                .map(parse_factor)
                .try_fold(Monomial::one(), |acc, f| f.map(|f| acc.mul(&f)))?;
            out.toggle(m);
        }
        Ok(out)
    }
}

/// `T + Σ_{1 ≤ i < K} aᵢ T^{2ⁱ}` modulo `T^{2^K}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdditiveSeries {
    truncation: u32,
    coeffs: Vec<F2Poly>,
}

impl AdditiveSeries {
    /// `coeffs[i-1]` is `aᵢ`; missing trailing coefficients are zero.
    pub fn new(truncation: u32, mut coeffs: Vec<F2Poly>) -> Result<Self> {
        if truncation == 0 || truncation > 63 {
            return Err(Error::InvalidSeries(format!("truncation K={truncation} outside 1..=63")));
        }
        let len = truncation as usize - 1;
        if coeffs.len() > len {
            return Err(Error::InvalidSeries(format!(
                "{} coefficients do not fit below T^{}",
                coeffs.len(),
                1u64 << truncation
            )));
        }
        coeffs.resize(len, F2Poly::zero());
        Ok(AdditiveSeries { truncation, coeffs })
    }

    pub fn identity(truncation: u32) -> Result<Self> {
        Self::new(truncation, Vec::new())
    }

    /// Scalar coefficients `a₁, a₂, …` given as bits.
    pub fn scalar(truncation: u32, bits: &[bool]) -> Result<Self> {
        Self::new(truncation, bits.iter().map(|&b| F2Poly::constant(b)).collect())
    }

    /// The universal series with coefficients the generators in `slot`.
    pub fn universal(truncation: u32, slot: u8) -> Result<Self> {
        let coeffs = (1..truncation).map(|i| F2Poly::var(Var { slot, index: i })).collect();
        Self::new(truncation, coeffs)
    }

    /// From `(exponent, coefficient)` terms. The `T` term is implicit; every
    /// other exponent must be a power of two below `2^K`.
    pub fn from_terms(truncation: u32, terms: &[(u64, F2Poly)]) -> Result<Self> {
        let mut series = Self::identity(truncation)?;
        for (exp, c) in terms {
            if !exp.is_power_of_two() || *exp < 2 {
                return Err(Error::InvalidSeries(format!(
                    "T^{exp} is not of the form T^(2^i) with i >= 1"
                )));
            }
            let i = exp.trailing_zeros();
            if i >= truncation {
                return Err(Error::InvalidSeries(format!(
                    "T^{exp} is not below the truncation T^{}",
                    1u64 << truncation
                )));
            }
            series.coeffs[i as usize - 1].add_assign(c);
        }
        Ok(series)
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// `aᵢ`, with `a₀ = 1` and zero beyond the truncation.
    pub fn coeff(&self, i: u32) -> F2Poly {
        match i {
            0 => F2Poly::one(),
            i if i < self.truncation => self.coeffs[i as usize - 1].clone(),
            _ => F2Poly::zero(),
        }
    }

    pub fn coeffs(&self) -> &[F2Poly] {
        &self.coeffs
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.iter().all(F2Poly::is_zero)
    }

    pub fn is_scalar(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_constant().is_some())
    }

    /// `(exponent, coefficient)` pairs of the nonzero terms, `T` included.
    pub fn terms(&self) -> Vec<(u64, F2Poly)> {
        (0..self.truncation)
            .map(|i| (1u64 << i, self.coeff(i)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// `self ∘ other`, i.e. `self(other(T))`.
    pub fn compose(&self, other: &AdditiveSeries) -> Result<AdditiveSeries> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch {
                left: self.truncation,
                right: other.truncation,
            });
        }
        let coeffs = (1..self.truncation)
            .map(|n| {
                let mut c = F2Poly::zero();
                for i in 0..=n {
                    c.add_assign(&self.coeff(i).mul(&other.coeff(n - i).frobenius(i)));
                }
                c
            })
            .collect();
        AdditiveSeries::new(self.truncation, coeffs)
    }

    /// The compositional inverse, solving `(a ∘ b)ₙ = 0` for `bₙ` in turn:
    /// `bₙ = Σ_{1≤i≤n} aᵢ · b_{n−i}^{2ⁱ}`.
    pub fn invert(&self) -> AdditiveSeries {
        let mut b: Vec<F2Poly> = vec![F2Poly::one()];
        for n in 1..self.truncation {
            let mut c = F2Poly::zero();
            for i in 1..=n {
                c.add_assign(&self.coeff(i).mul(&b[(n - i) as usize].frobenius(i)));
            }
            b.push(c);
        }
        b.remove(0);
        AdditiveSeries { truncation: self.truncation, coeffs: b }
    }

    /// Expands `a(T₀ + T₁)` and compares it with `a(T₀) + a(T₁)`.
    pub fn additivity_check(&self) -> bool {
        polynomial_is_additive(&self.terms(), 1u64 << self.truncation)
    }

    /// `T + Σ aᵢT^{2ⁱ} ↦ 1 + Σ aᵢFⁱ`.
    pub fn to_twisted(&self) -> TwistedPolynomial {
        let mut coeffs = vec![F2Poly::one()];
        coeffs.extend(self.coeffs.iter().cloned());
        TwistedPolynomial::new(coeffs)
    }

    /// Inverse of [`AdditiveSeries::to_twisted`] on twisted polynomials with
    /// constant term `1`, truncated below `F^K`.
    pub fn from_twisted(truncation: u32, t: &TwistedPolynomial) -> Result<Self> {
        if !t.coeff(0).is_one() {
            return Err(Error::InvalidSeries("twisted polynomial has constant term != 1".into()));
        }
        let coeffs = (1..truncation as usize).map(|i| t.coeff(i)).collect();
        Self::new(truncation, coeffs)
    }
}

impl fmt::Display for AdditiveSeries {
    /// `K=6; a1=1 a2=0 …`, with non-constant coefficients in parentheses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K={};", self.truncation)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            match c.as_constant() {
                Some(bit) => write!(f, " a{}={}", k + 1, bit as u8)?,
                None => write!(f, " a{}=({c})", k + 1)?,
            }
        }
        Ok(())
    }
}

impl FromStr for AdditiveSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) =
            s.split_once(';').ok_or_else(|| Error::parse(format!("expected `K=..;` in {s:?}")))?;
        let truncation: u32 = head
            .trim()
            .strip_prefix("K=")
            .and_then(|k| k.trim().parse().ok())
            .ok_or_else(|| Error::parse(format!("bad truncation header {head:?}")))?;
        let mut series = AdditiveSeries::identity(truncation)?;
        let mut seen = BTreeSet::new();
        let mut rest = body.trim_start();
        while !rest.is_empty() {
            let eq = rest.find('=').ok_or_else(|| Error::parse(format!("expected aN= in {rest:?}")))?;
            let index: u32 = rest[..eq]
                .strip_prefix('a')
                .and_then(|i| i.parse().ok())
                .ok_or_else(|| Error::parse(format!("bad coefficient name {:?}", &rest[..eq])))?;
            let after = &rest[eq + 1..];
            let (text, tail) = if let Some(inner) = after.strip_prefix('(') {
                let close =
                    inner.find(')').ok_or_else(|| Error::parse("unclosed `(` in coefficient"))?;
                (&inner[..close], &inner[close + 1..])
            } else {
                let end = after.find(char::is_whitespace).unwrap_or(after.len());
                (&after[..end], &after[end..])
            };
            if index == 0 || index >= truncation {
                return Err(Error::parse(format!("a{index} outside a1..a{}", truncation - 1)));
            }
            if !seen.insert(index) {
                return Err(Error::parse(format!("a{index} given twice")));
            }
            series.coeffs[index as usize - 1] = text.parse()?;
            rest = tail.trim_start();
        }
        Ok(series)
    }
}

/// Polynomials in `T₀, T₁` with [`F2Poly`] coefficients.
type TwoVar = BTreeMap<(u64, u64), F2Poly>;

fn two_var_mul(x: &TwoVar, y: &TwoVar, bound: u64) -> TwoVar {
    let mut out = TwoVar::new();
    for (&(a0, a1), ca) in x {
        for (&(b0, b1), cb) in y {
            let key = (a0 + b0, a1 + b1);
            if key.0 + key.1 >= bound {
                continue;
            }
            out.entry(key).or_default().add_assign(&ca.mul(cb));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Whether `Σ cₑ Tᵉ` satisfies `f(T₀ + T₁) = f(T₀) + f(T₁)` modulo total
/// degree `bound`, by expanding every power of `T₀ + T₁` explicitly.
pub fn polynomial_is_additive(terms: &[(u64, F2Poly)], bound: u64) -> bool {
    let sum: TwoVar = TwoVar::from([((1, 0), F2Poly::one()), ((0, 1), F2Poly::one())]);
    let mut lhs = TwoVar::new();
    let mut rhs = TwoVar::new();
    for (exp, c) in terms {
        if *exp >= bound || c.is_zero() {
            continue;
        }
        let mut power = TwoVar::from([((0, 0), F2Poly::one())]);
        for _ in 0..*exp {
            power = two_var_mul(&power, &sum, bound);
        }
        for (key, pc) in power {
            lhs.entry(key).or_default().add_assign(&c.mul(&pc));
        }
        rhs.entry((*exp, 0)).or_default().add_assign(c);
        rhs.entry((0, *exp)).or_default().add_assign(c);
    }
    lhs.retain(|_, c| !c.is_zero());
    rhs.retain(|_, c| !c.is_zero());
    lhs == rhs
}

/// `Σ aₙ Fⁿ` with `F a = a² F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistedPolynomial {
    coeffs: Vec<F2Poly>,
}

impl TwistedPolynomial {
    pub fn new(mut coeffs: Vec<F2Poly>) -> Self {
        while coeffs.last().is_some_and(F2Poly::is_zero) {
            coeffs.pop();
        }
        TwistedPolynomial { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![F2Poly::one()])
    }

    /// The Frobenius `F`.
    pub fn frobenius() -> Self {
        Self::new(vec![F2Poly::zero(), F2Poly::one()])
    }

    /// `a · Fⁿ`.
    pub fn monomial(a: F2Poly, n: usize) -> Self {
        let mut coeffs = vec![F2Poly::zero(); n];
        coeffs.push(a);
        Self::new(coeffs)
    }

    pub fn coeff(&self, n: usize) -> F2Poly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[F2Poly] {
        &self.coeffs
    }

    /// Degree in `F`, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &TwistedPolynomial) -> TwistedPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|n| self.coeff(n).add(&other.coeff(n))).collect())
    }

    /// `(Σ aᵢFⁱ)(Σ bⱼFʲ) = Σ aᵢ bⱼ^{2ⁱ} F^{i+j}`.
    pub fn mul(&self, other: &TwistedPolynomial) -> TwistedPolynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![F2Poly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_assign(&a.mul(&b.frobenius(i as u32)));
            }
        }
        Self::new(out)
    }

    /// Drops every term of degree `>= n`.
    pub fn truncate(&self, n: usize) -> TwistedPolynomial {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }
}

impl fmt::Display for TwistedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| {
                let frob = match n {
                    0 => String::new(),
                    1 => "F".to_string(),
                    n => format!("F^{n}"),
                };
                match (c.is_one(), n) {
                    (true, 0) => "1".to_string(),
                    (true, _) => frob,
                    (false, 0) if c.len() == 1 => c.to_string(),
                    (false, 0) => format!("({c})"),
                    (false, _) if c.len() == 1 => format!("{c}*{frob}"),
                    (false, _) => format!("({c})*{frob}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `Σ_{i+j=n} X^{outer}ᵢ · (X^{inner}ⱼ)^{2ⁱ}` with `X₀ = 1` in both slots.
fn composite_coefficient(n: u32, outer: u8, inner: u8) -> F2Poly {
    let gen = |slot: u8, i: u32| {
        if i == 0 {
            F2Poly::one()
        } else {
            F2Poly::var(Var { slot, index: i })
        }
    };
    let mut c = F2Poly::zero();
    for i in 0..=n {
        c.add_assign(&gen(outer, i).mul(&gen(inner, n - i).frobenius(i)));
    }
    c
}

/// `ψ(ξₙ)`: the coefficient of `T^{2ⁿ}` in `a′ ∘ a`, where `a′` has
/// coefficients `ξ′ᵢ` and `a` has coefficients `ξⱼ`.
pub fn universal_coproduct(n: u32) -> Result<F2Poly> {
    if n == 0 || n > 62 {
        return Err(Error::InvalidArgument(format!("coproduct index {n} outside 1..=62")));
    }
    let outer = AdditiveSeries::universal(n + 1, 1)?;
    let inner = AdditiveSeries::universal(n + 1, 0)?;
    Ok(outer.compose(&inner)?.coeff(n))
}

/// Compares `(ψ ⊗ 1)ψ(ξₙ)` with `(1 ⊗ ψ)ψ(ξₙ)` as polynomials in three sets
/// of generators (slots 2, 1, 0 from the outside in).
pub fn coproduct_is_coassociative(n: u32) -> bool {
    let start = composite_coefficient(n, 2, 0);
    let split_outer = start.substitute(&|v: Var| {
        (v.slot == 2).then(|| composite_coefficient(v.index, 2, 1))
    });
    let split_inner = start.substitute(&|v: Var| {
        (v.slot == 0).then(|| composite_coefficient(v.index, 1, 0))
    });
    split_outer == split_inner
}

/// Dimensions over F₂ of the polynomial algebra on generators of the given
/// positive degrees, in degrees `0..=max`.
pub fn graded_dimensions(generator_degrees: &[u64], max: usize) -> Result<Vec<u64>> {
    let mut dims = vec![0u64; max + 1];
    dims[0] = 1;
    for &d in generator_degrees {
        if d == 0 {
            return Err(Error::InvalidArgument("generator degrees must be positive".into()));
        }
        let d = d as usize;
        for t in d..=max {
            dims[t] += dims[t - d];
        }
    }
    Ok(dims)
}

/// Degree of `Q̄ⁱx₁ = Q^{2^{i−1}} ∘ ⋯ ∘ Q² x₁`: each `Q^j` adds `j`.
pub fn kudo_araki_degree(i: u32) -> u64 {
    assert!(i >= 1, "Kudo-Araki iterates start at i = 1");
    (1..i).map(|k| 1u64 << k).fold(1, |d, j| d + j)
}

/// `|ξᵢ| = 2ⁱ − 1` for every `i` with `2ⁱ − 1 <= max`.
pub fn milnor_generator_degrees(max: u64) -> Vec<u64> {
    (1..64).map(|i| (1u64 << i) - 1).take_while(|&d| d <= max).collect()
}

/// `|xᵢ| = |Q̄ⁱx₁|` for every `i` with that degree at most `max`.
pub fn kudo_araki_generator_degrees(max: u64) -> Vec<u64> {
    (1..64).map(kudo_araki_degree).take_while(|&d| d <= max).collect()
}
