//! Finite configurations in the complex plane, their discriminants and
//! angular anomalies, and closed loops of configurations.
//!
//! A positive generator `σ_i` is realized as a counterclockwise half turn of
//! the points in positions `i` and `i+1` about their midpoint. With this
//! convention the argument of the discriminant winds once positively along
//! `σ_i`, so the winding number of a loop is the writhe of its braid.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::{Error, Result};

/// Minimum separation between points of a configuration.
pub const EPS_SEP: f64 = 1e-8;

/// Magnitude of the sweep-direction perturbation used by [`loop_to_braid`].
pub const DELTA_PERTURB: f64 = 1e-6;

/// Perturbation attempts before [`loop_to_braid`] gives up.
pub const PERTURB_BUDGET: usize = 16;

/// `e(w) = exp(2πi w)`.
pub fn e(w: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * w).exp()
}

/// Pairwise distinct points of `ℂ`; their order is bookkeeping only.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    points: Vec<Complex64>,
}

impl Configuration {
    pub fn new(points: Vec<Complex64>) -> Result<Self> {
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if (points[i] - points[j]).norm() <= EPS_SEP {
                    return Err(Error::Degenerate { i, j, tol: EPS_SEP });
                }
            }
        }
        Ok(Configuration { points })
    }

    pub fn from_reals(xs: &[f64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// `{1, 2, …, n}` on the real axis.
    pub fn standard(n: usize) -> Self {
        Configuration { points: (1..=n).map(|k| Complex64::new(k as f64, 0.0)).collect() }
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `uF`. Fails if `u` is small enough to merge points.
    pub fn scale(&self, u: Complex64) -> Result<Self> {
        Self::new(self.points.iter().map(|&z| u * z).collect())
    }

    /// Disjoint union with `other` translated to the right of this
    /// configuration's bounding box.
    pub fn juxtapose(&self, other: &Configuration) -> Configuration {
        let right = self.points.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
        let left = other.points.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        let shift = if self.is_empty() || other.is_empty() { 0.0 } else { right - left + 1.0 };
        let mut points = self.points.clone();
        points.extend(other.points.iter().map(|&z| z + shift));
        Configuration { points }
    }

    /// Coefficients of `∏(z − ρ)` in ascending powers; the last one is `1`.
    pub fn root_polynomial(&self) -> Vec<Complex64> {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &rho in &self.points {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= rho * c;
            }
            coeffs = next;
        }
        coeffs
    }

    /// `(−1)^{n(n−1)/2} ∏_{ρ≠ρ'} (ρ − ρ')` over ordered pairs.
    ///
    /// Points are sorted before multiplying so the result does not depend on
    /// their listed order, bit for bit.
    pub fn discriminant(&self) -> Complex64 {
        let mut pts = self.points.clone();
        pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        let n = pts.len();
        let mut prod = Complex64::new(1.0, 0.0);
        for (i, &a) in pts.iter().enumerate() {
            for (j, &b) in pts.iter().enumerate() {
                if i != j {
                    prod *= a - b;
                }
            }
        }
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            -prod
        } else {
            prod
        }
    }

    /// The principal angular anomaly: `(2πi)⁻¹ log Δ` with real part in `[0, 1)`.
    pub fn anomaly(&self) -> AnomalyPoint {
        let disc = self.discriminant();
        let turns = disc.arg() / (2.0 * PI);
        let mut re = turns.rem_euclid(1.0);
        if re >= 1.0 {
            re = 0.0;
        }
        let im = -disc.norm().ln() / (2.0 * PI);
        AnomalyPoint { config: self.clone(), delta: Complex64::new(re, im) }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, z) in self.points.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{} {}", z.re, z.im)?;
        }
        Ok(())
    }
}

fn parse_point(line: &str) -> Result<Complex64> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<f64> {
        let tok = it.next().ok_or_else(|| Error::parse(format!("missing {what} in {line:?}")))?;
        tok.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::parse(format!("bad {what} {tok:?}")))
    };
    let re = next("real part")?;
    let im = next("imaginary part")?;
    if it.next().is_some() {
        return Err(Error::parse(format!("trailing tokens in {line:?}")));
    }
    Ok(Complex64::new(re, im))
}

impl FromStr for Configuration {
    type Err = Error;

    /// One point per line, `re im`. Blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self> {
        let points = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_point)
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(points)
    }
}

/// A configuration with a chosen lift `δ` of `(2πi)⁻¹ log Δ`, so that
/// `e(δ) = Δ(F)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AnomalyPoint {
    config: Configuration,
    delta: Complex64,
}

impl AnomalyPoint {
    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn delta(&self) -> Complex64 {
        self.delta
    }

    /// The lift reduced mod `ℤ` into `[0, 1)`.
    pub fn normalized_delta(&self) -> Complex64 {
        Complex64::new(self.delta.re.rem_euclid(1.0), self.delta.im)
    }

    /// `w · (F, δ) = (e(w)F, δ + n(n−1)w)`; for integer `w` the configuration
    /// is unchanged and only the sheet moves.
    pub fn act(&self, w: Complex64) -> Result<AnomalyPoint> {
        let n = self.config.len() as f64;
        Ok(AnomalyPoint {
            config: self.config.scale(e(w))?,
            delta: self.delta + n * (n - 1.0) * w,
        })
    }
}

/// `k · (F, δ_F) = (F, δ_F + n(n−1)k)`.
pub fn covering_action(k: i64, a: &AnomalyPoint) -> AnomalyPoint {
    let n = a.config.len() as i64;
    AnomalyPoint {
        config: a.config.clone(),
        delta: a.delta + Complex64::new((n * (n - 1) * k) as f64, 0.0),
    }
}

/// A closed piecewise-linear path of configurations; the last frame joins
/// back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigLoop {
    frames: Vec<Configuration>,
}

impl ConfigLoop {
    pub fn new(frames: Vec<Configuration>) -> Result<Self> {
        let Some(first) = frames.first() else {
            return Err(Error::InvalidArgument("a loop needs at least one frame".into()));
        };
        let n = first.len();
        if let Some(bad) = frames.iter().find(|f| f.len() != n) {
            return Err(Error::StrandMismatch { left: n, right: bad.len() });
        }
        Ok(ConfigLoop { frames })
    }

    pub fn constant(config: Configuration) -> Self {
        ConfigLoop { frames: vec![config] }
    }

    pub fn frames(&self) -> &[Configuration] {
        &self.frames
    }

    pub fn strands(&self) -> usize {
        self.frames[0].len()
    }

    /// Consecutive frame pairs, including the closing one.
    fn edges(&self) -> impl Iterator<Item = (usize, &Configuration, &Configuration)> {
        let m = self.frames.len();
        (0..m).map(move |k| (k, &self.frames[k], &self.frames[(k + 1) % m]))
    }
}

impl fmt::Display for ConfigLoop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} frames={}", self.strands(), self.frames.len())?;
        for frame in &self.frames {
            write!(f, "\n\n{frame}")?;
        }
        Ok(())
    }
}

impl FromStr for ConfigLoop {
    type Err = Error;

    /// Header `n=<k> frames=<m>`, then frames of `k` lines `re im` separated
    /// by blank lines.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.starts_with('#'));
        let header = lines
            .by_ref()
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::parse("empty loop file"))?;
        let (mut n, mut m) = (None, None);
        for tok in header.split_whitespace() {
            let (key, val) =
                tok.split_once('=').ok_or_else(|| Error::parse(format!("bad header {header:?}")))?;
            let val: usize =
                val.parse().map_err(|_| Error::parse(format!("bad header value {tok:?}")))?;
            match key {
                "n" => n = Some(val),
                "frames" => m = Some(val),
                _ => return Err(Error::parse(format!("unknown header key {key:?}"))),
            }
        }
        let (n, m) = n
            .zip(m)
            .ok_or_else(|| Error::parse(format!("header {header:?} needs n= and frames=")))?;

        if n == 0 {
            return ConfigLoop::new(vec![Configuration { points: Vec::new() }; m]);
        }
        let mut frames = Vec::with_capacity(m);
        let mut current = Vec::new();
        for line in lines.chain(std::iter::once("")) {
            if !line.is_empty() {
                current.push(parse_point(line)?);
            } else if !current.is_empty() {
                if current.len() != n {
                    return Err(Error::parse(format!(
                        "frame {} has {} points, expected {n}",
                        frames.len(),
                        current.len()
                    )));
                }
                frames.push(Configuration::new(std::mem::take(&mut current))?);
            }
        }
        if frames.len() != m {
            return Err(Error::parse(format!("expected {m} frames, found {}", frames.len())));
        }
        ConfigLoop::new(frames)
    }
}

/// Realizes a braid word as a loop based at `{1, …, n}`.
///
/// Each letter `±i` contributes `steps_per_letter` frames rotating the points
/// in positions `i`, `i+1` about their midpoint, counterclockwise for `+`.
pub fn braid_word_to_loop(w: &BraidWord, steps_per_letter: usize) -> Result<ConfigLoop> {
    if steps_per_letter < 8 {
        return Err(Error::InvalidArgument(format!(
            "steps_per_letter must be at least 8, got {steps_per_letter}"
        )));
    }
    let n = w.strands();
    // slot[label] = position index currently occupied by that strand
    let mut slot: Vec<usize> = (0..n).collect();
    let mut label_at: Vec<usize> = (0..n).collect();
    let coord = |pos: usize| Complex64::new(pos as f64 + 1.0, 0.0);
    let mut frames = Vec::with_capacity(w.len() * steps_per_letter + 1);

    for &letter in w.letters() {
        let i = letter.unsigned_abs() as usize - 1;
        let (left, right) = (label_at[i], label_at[i + 1]);
        let mid = Complex64::new(i as f64 + 1.5, 0.0);
        let dir = letter.signum() as f64;
        for k in 0..steps_per_letter {
            let turn = Complex64::from_polar(1.0, dir * PI * k as f64 / steps_per_letter as f64);
            let mut points: Vec<Complex64> = slot.iter().map(|&p| coord(p)).collect();
            points[left] = mid - 0.5 * turn;
            points[right] = mid + 0.5 * turn;
            frames.push(Configuration::new(points)?);
        }
        slot.swap(left, right);
        label_at.swap(i, i + 1);
    }
    if frames.is_empty() {
        frames.push(Configuration::standard(n));
    }
    ConfigLoop::new(frames)
}

/// Winding number of `arg Δ` around the loop.
///
/// Refuses loops where `arg Δ` jumps by `π/2` or more between samples.
pub fn loop_discriminant_winding(l: &ConfigLoop) -> Result<i64> {
    let mut total = 0.0;
    for (k, a, b) in l.edges() {
        let step = (b.discriminant() / a.discriminant()).arg();
        if step.abs() >= PI / 2.0 {
            return Err(Error::ResolutionTooCoarse {
                frame: k,
                reason: format!("discriminant argument jumps by {step:.3} rad"),
            });
        }
        total += step;
    }
    let turns = total / (2.0 * PI);
    let rounded = turns.round();
    debug_assert!((turns - rounded).abs() < 1e-6, "closed loop must wind an integer number of times");
    Ok(rounded as i64)
}

/// For each point of `a`, the index of its nearest point in `b`; fails unless
/// this is a bijection.
fn match_frames(frame: usize, a: &Configuration, b: &Configuration) -> Result<Vec<usize>> {
    let mut taken = vec![false; b.len()];
    let mut out = Vec::with_capacity(a.len());
    for &z in a.points() {
        let (j, _) = b
            .points()
            .iter()
            .enumerate()
            .map(|(j, &y)| (j, (y - z).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .expect("frames have equal nonzero size");
        if taken[j] {
            return Err(Error::ResolutionTooCoarse {
                frame,
                reason: "strand correspondence between consecutive frames is ambiguous".into(),
            });
        }
        taken[j] = true;
        out.push(j);
    }
    Ok(out)
}

/// Straight-line strand motions, one `(start, end)` list per edge, indexed by
/// strand label.
fn strand_segments(l: &ConfigLoop) -> Result<Vec<Vec<(Complex64, Complex64)>>> {
    let n = l.strands();
    // pos[label] = index of that strand within the current frame
    let mut pos: Vec<usize> = (0..n).collect();
    let mut segments = Vec::with_capacity(l.frames().len());
    for (k, a, b) in l.edges() {
        let matching = match_frames(k, a, b)?;
        let seg = pos.iter().map(|&p| (a.points()[p], b.points()[matching[p]])).collect();
        segments.push(seg);
        for p in pos.iter_mut() {
            *p = matching[*p];
        }
    }
    Ok(segments)
}

#[derive(Debug)]
struct NotGeneric;

fn sweep(segments: &[Vec<(Complex64, Complex64)>], n: usize, phi: f64) -> Result<Vec<i32>, NotGeneric> {
    const TOL: f64 = 1e-12;
    let rot = Complex64::from_polar(1.0, -phi);
    let frame = |z: Complex64| {
        let r = z * rot;
        (r.re, r.im)
    };

    let mut order: Vec<usize> = (0..n).collect();
    if let Some(first) = segments.first() {
        order.sort_by(|&a, &b| frame(first[a].0).0.total_cmp(&frame(first[b].0).0));
        for w in order.windows(2) {
            if (frame(first[w[1]].0).0 - frame(first[w[0]].0).0).abs() < TOL {
                return Err(NotGeneric);
            }
        }
    }
    let mut rank: Vec<usize> = vec![0; n];
    for (r, &s) in order.iter().enumerate() {
        rank[s] = r;
    }

    let mut letters = Vec::new();
    for seg in segments {
        let mut events: Vec<(f64, usize, usize)> = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let d0 = frame(seg[a].0).0 - frame(seg[b].0).0;
                let d1 = frame(seg[a].1).0 - frame(seg[b].1).0;
                if d1.abs() < TOL {
                    return Err(NotGeneric);
                }
                if (d0 < 0.0) != (d1 < 0.0) {
                    events.push((d0 / (d0 - d1), a, b));
                }
            }
        }
        events.sort_by(|x, y| x.0.total_cmp(&y.0));
        for pair in events.windows(2) {
            let shares = [pair[0].1, pair[0].2].iter().any(|s| *s == pair[1].1 || *s == pair[1].2);
            if shares && pair[1].0 - pair[0].0 < TOL {
                return Err(NotGeneric);
            }
        }
        for (t, a, b) in events {
            let (left, right) = if rank[a] < rank[b] { (a, b) } else { (b, a) };
            if rank[right] != rank[left] + 1 {
                return Err(NotGeneric);
            }
            let at = |s: usize| frame(seg[s].0 + (seg[s].1 - seg[s].0) * t).1;
            let dy = at(left) - at(right);
            if dy.abs() < TOL {
                return Err(NotGeneric);
            }
            // counterclockwise exchange: the strand moving right passes below
            let gen = rank[left] as i32 + 1;
            letters.push(if dy < 0.0 { gen } else { -gen });
            rank.swap(left, right);
        }
    }
    Ok(letters)
}

/// Reads the braid of a loop off a sweep of real parts, seeded with `0`.
pub fn loop_to_braid(l: &ConfigLoop) -> Result<BraidWord> {
    loop_to_braid_seeded(l, 0)
}

/// Reads the braid of a loop: whenever the strands of adjacent real rank
/// `i`, `i+1` exchange, emit `σ_i` if the rightward-moving strand passes
/// below, `σ_i⁻¹` if above.
///
/// The sweep direction is rotated by a seeded angle of size about
/// [`DELTA_PERTURB`] so that exchanges do not land on frame boundaries; up to
/// [`PERTURB_BUDGET`] angles are tried.
pub fn loop_to_braid_seeded(l: &ConfigLoop, seed: u64) -> Result<BraidWord> {
    let n = l.strands();
    let segments = strand_segments(l)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..PERTURB_BUDGET {
        let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
        let phi = sign * DELTA_PERTURB * (1.0 + rng.gen::<f64>());
        log::debug!("loop_to_braid: seed {seed}, attempt {attempt}, sweep angle {phi:e}");
        if let Ok(letters) = sweep(&segments, n, phi) {
            return BraidWord::new(n, letters);
        }
    }
    Err(Error::NonGeneric { attempts: PERTURB_BUDGET })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::braids_equal;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() <= 1e-12 * (1.0 + b.norm())
    }

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn root_polynomial_examples() {
        let p = Configuration::from_reals(&[1.0, -1.0]).unwrap().root_polynomial();
        assert_eq!(p, vec![c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let p = Configuration::new(vec![]).unwrap().root_polynomial();
        assert_eq!(p, vec![c(1.0, 0.0)]);
        let p = Configuration::from_reals(&[0.0, 1.0, 2.0]).unwrap().root_polynomial();
        assert_eq!(p, vec![c(0.0, 0.0), c(2.0, 0.0), c(-3.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn root_polynomial_vanishes_on_points() {
        let f = Configuration::new(vec![c(0.3, -1.2), c(2.0, 0.5), c(-0.7, 0.1)]).unwrap();
        let p = f.root_polynomial();
        for &rho in f.points() {
            let val = p.iter().rev().fold(c(0.0, 0.0), |acc, &k| acc * rho + k);
            assert!(val.norm() < 1e-12);
        }
    }

    #[test]
    fn discriminant_examples() {
        let d = Configuration::from_reals(&[0.0, 1.0]).unwrap().discriminant();
        assert_eq!(d, c(1.0, 0.0));
        let d = Configuration::new(vec![c(0.4, 2.0)]).unwrap().discriminant();
        assert_eq!(d, c(1.0, 0.0));
        let d = Configuration::from_reals(&[0.0, 2.0]).unwrap().discriminant();
        assert_eq!(d, c(4.0, 0.0));
    }

    #[test]
    fn discriminant_is_exactly_order_invariant() {
        let pts = vec![c(0.3, -1.2), c(2.0, 0.5), c(-0.7, 0.1), c(1.1, 1.1)];
        let d = Configuration::new(pts.clone()).unwrap().discriminant();
        let mut rev = pts;
        rev.reverse();
        assert_eq!(Configuration::new(rev).unwrap().discriminant(), d);
    }

    #[test]
    fn degenerate_configurations_rejected() {
        let err = Configuration::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1e-9)]).unwrap_err();
        assert_eq!(err, Error::Degenerate { i: 0, j: 2, tol: EPS_SEP });
        assert!(err.is_domain());
    }

    #[test]
    fn anomaly_examples() {
        let a = Configuration::from_reals(&[0.0, 1.0]).unwrap().anomaly();
        assert_eq!(a.delta(), c(0.0, 0.0));
        let a = Configuration::new(vec![c(0.0, 0.0), c(0.0, 1.0)]).unwrap().anomaly();
        assert!((a.delta().re - 0.5).abs() < 1e-15);
        let f = Configuration::from_reals(&[0.0, 1.0]).unwrap();
        let scaled = f.scale(c(0.0, 1.0)).unwrap().anomaly();
        assert!((scaled.delta().re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn anomaly_exponentiates_to_discriminant() {
        let f = Configuration::new(vec![c(0.3, -1.2), c(2.0, 0.5), c(-0.7, 0.1)]).unwrap();
        let a = f.anomaly();
        assert!(close(e(a.delta()), f.discriminant()));
        assert!((0.0..1.0).contains(&a.delta().re));
    }

    #[test]
    fn covering_action_examples() {
        let f = Configuration::new(vec![c(0.3, -1.2), c(2.0, 0.5)]).unwrap();
        let a = f.anomaly();
        assert_eq!(covering_action(0, &a), a);
        let moved = covering_action(1, &a);
        assert_eq!(moved.delta() - a.delta(), c(2.0, 0.0));
        assert_eq!(moved.config(), a.config());
        assert!((moved.normalized_delta() - a.normalized_delta()).norm() < 1e-12);
        let single = Configuration::new(vec![c(5.0, 0.0)]).unwrap().anomaly();
        assert_eq!(covering_action(7, &single), single);
    }

    #[test]
    fn complex_action_tracks_discriminant() {
        let f = Configuration::new(vec![c(0.3, -1.2), c(2.0, 0.5), c(-0.7, 0.1)]).unwrap();
        let moved = f.anomaly().act(c(0.13, -0.05)).unwrap();
        let expected = moved.config().discriminant();
        assert!((e(moved.delta()) - expected).norm() < 1e-9 * expected.norm());
    }

    #[test]
    fn juxtapose_places_second_block_to_the_right() {
        let f = Configuration::from_reals(&[0.0, 1.0]).unwrap();
        let g = Configuration::from_reals(&[-3.0, 2.0]).unwrap();
        let fg = f.juxtapose(&g);
        assert_eq!(fg.points().iter().map(|z| z.re).collect::<Vec<_>>(), vec![0.0, 1.0, 2.0, 7.0]);
    }

    #[test]
    fn realize_single_generator() {
        let l = braid_word_to_loop(&w(2, &[1]), 8).unwrap();
        assert_eq!(l.frames().len(), 8);
        for (k, frame) in l.frames().iter().enumerate() {
            let turn = Complex64::from_polar(0.5, PI * k as f64 / 8.0);
            assert!(close(frame.points()[0], c(1.5, 0.0) - turn));
            assert!(close(frame.points()[1], c(1.5, 0.0) + turn));
        }
        assert!(braid_word_to_loop(&w(2, &[1]), 7).is_err());
    }

    #[test]
    fn winding_examples() {
        let l = braid_word_to_loop(&w(2, &[1]), 8).unwrap();
        assert_eq!(loop_discriminant_winding(&l).unwrap(), 1);
        let constant = braid_word_to_loop(&w(3, &[]), 32).unwrap();
        assert_eq!(constant.frames().len(), 1);
        assert_eq!(loop_discriminant_winding(&constant).unwrap(), 0);
        let l = braid_word_to_loop(&w(3, &[1, 2, 1]), 32).unwrap();
        assert_eq!(loop_discriminant_winding(&l).unwrap(), 3);
        let l = braid_word_to_loop(&w(2, &[1, -1]), 16).unwrap();
        assert_eq!(loop_discriminant_winding(&l).unwrap(), 0);
        let l = braid_word_to_loop(&w(4, &[-3, -1, 2]), 8).unwrap();
        assert_eq!(loop_discriminant_winding(&l).unwrap(), -1);
    }

    #[test]
    fn coarse_loops_are_refused() {
        // a half turn in two samples
        let frames = vec![
            Configuration::from_reals(&[1.0, 2.0]).unwrap(),
            Configuration::new(vec![c(1.5, -0.5), c(1.5, 0.5)]).unwrap(),
        ];
        let err = loop_discriminant_winding(&ConfigLoop::new(frames).unwrap()).unwrap_err();
        assert!(matches!(err, Error::ResolutionTooCoarse { .. }));
        assert!(err.is_domain());
    }

    #[test]
    fn extraction_examples() {
        let l = braid_word_to_loop(&w(2, &[1]), 32).unwrap();
        assert_eq!(loop_to_braid(&l).unwrap(), w(2, &[1]));
        let constant = ConfigLoop::constant(Configuration::standard(4));
        assert_eq!(loop_to_braid(&constant).unwrap(), w(4, &[]));
        let u = w(4, &[1, -3, 2, 2, -1, 3]);
        let back = loop_to_braid(&braid_word_to_loop(&u, 32).unwrap()).unwrap();
        assert!(braids_equal(&back, &u).unwrap());
    }

    #[test]
    fn extraction_handles_vertical_alignments() {
        // the two points share a real part at the middle frame
        let frames = (0..16)
            .map(|k| {
                let turn = Complex64::from_polar(0.5, PI * k as f64 / 16.0);
                Configuration::new(vec![c(0.0, 0.0) - turn, turn]).unwrap()
            })
            .collect();
        let l = ConfigLoop::new(frames).unwrap();
        assert_eq!(loop_to_braid(&l).unwrap(), w(2, &[1]));
    }

    #[test]
    fn loop_text_round_trip() {
        let l = braid_word_to_loop(&w(3, &[1, -2]), 8).unwrap();
        let text = l.to_string();
        assert!(text.starts_with("n=3 frames=16\n\n"));
        let back: ConfigLoop = text.parse().unwrap();
        assert_eq!(back, l);
        assert!("n=2 frames=2\n\n0 0\n1 0".parse::<ConfigLoop>().is_err());
        assert!("frames=1\n\n0 0".parse::<ConfigLoop>().is_err());
    }

    #[test]
    fn configuration_text_round_trip() {
        let f: Configuration = "# two points\n0 0\n1.5 -2\n".parse().unwrap();
        assert_eq!(f.points(), &[c(0.0, 0.0), c(1.5, -2.0)]);
        assert_eq!(f.to_string().parse::<Configuration>().unwrap(), f);
        assert!("0 0 0".parse::<Configuration>().is_err());
        assert!("0".parse::<Configuration>().is_err());
        assert!(matches!("0 0\n0 0".parse::<Configuration>(), Err(Error::Degenerate { .. })));
    }
}
