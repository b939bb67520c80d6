use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{Flavor, Mat2, C64, EXACT_TOL, ONE};
use crate::minkowski::GroupElement;

/// One of the four two-component basis spinors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Spinor {
    /// Spin up, undotted.
    U,
    /// Spin down, undotted.
    V,
    UDot,
    VDot,
}

impl Spinor {
    pub const ALL: [Spinor; 4] = [Spinor::U, Spinor::V, Spinor::UDot, Spinor::VDot];

    pub fn from_parts(flavor: Flavor, index: usize) -> Self {
        match (flavor, index) {
            (Flavor::Undotted, 0) => Spinor::U,
            (Flavor::Undotted, 1) => Spinor::V,
            (Flavor::Dotted, 0) => Spinor::UDot,
            (Flavor::Dotted, 1) => Spinor::VDot,
            _ => panic!("spinor index must be 0 or 1, got {index}"),
        }
    }

    pub fn flavor(self) -> Flavor {
        match self {
            Spinor::U | Spinor::V => Flavor::Undotted,
            Spinor::UDot | Spinor::VDot => Flavor::Dotted,
        }
    }

    /// 0 for spin up, 1 for spin down.
    pub fn index(self) -> usize {
        match self {
            Spinor::U | Spinor::UDot => 0,
            Spinor::V | Spinor::VDot => 1,
        }
    }

    /// Dot conjugation: `u ↔ u̇`, `v ↔ v̇`.
    pub fn dot(self) -> Self {
        match self {
            Spinor::U => Spinor::UDot,
            Spinor::V => Spinor::VDot,
            Spinor::UDot => Spinor::U,
            Spinor::VDot => Spinor::V,
        }
    }

    /// The two-term image `M · self` for the matrix `m` of this spinor's flavor.
    fn image(self, m: &Mat2) -> [(Spinor, C64); 2] {
        let (f, j) = (self.flavor(), self.index());
        [
            (Spinor::from_parts(f, 0), m.get(0, j)),
            (Spinor::from_parts(f, 1), m.get(1, j)),
        ]
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spinor::U => "u",
            Spinor::V => "v",
            Spinor::UDot => "u\u{307}",
            Spinor::VDot => "v\u{307}",
        })
    }
}

/// Parses an ordered spinor product such as `"uu"`, `"u vd"`, `"u v dot"` or
/// `"vdvd vd vd"`.
///
/// Each factor is `u` or `v`, optionally followed (after optional whitespace)
/// by a dot marker: `d`, `dot` or a combining dot (U+0307).
pub fn parse_product(input: &str) -> Result<Vec<Spinor>> {
    let err = |reason: String| Error::Parse {
        input: input.to_string(),
        reason,
    };
    let chars: Vec<char> = input.chars().collect();
    let mut pos = 0;
    let mut out = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        let Some(&ch) = chars.get(pos) else { break };
        let base = match ch {
            'u' | 'U' => Spinor::U,
            'v' | 'V' => Spinor::V,
            other => return Err(err(format!("unexpected {other:?} at position {pos}"))),
        };
        pos += 1;
        let mut look = pos;
        skip_ws(&mut look);
        let dotted = match chars.get(look) {
            Some('\u{307}') => {
                pos = look + 1;
                true
            }
            Some('d') => {
                let word: String = chars[look..].iter().take(3).collect();
                pos = if word == "dot" { look + 3 } else { look + 1 };
                true
            }
            _ => false,
        };
        out.push(if dotted { base.dot() } else { base });
    }
    if out.is_empty() {
        return Err(Error::EmptyState);
    }
    Ok(out)
}

/// A formal linear combination of ordered `rank`-fold spinor products.
///
/// Coefficients that are exactly zero are not stored.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiSpinorState {
    rank: usize,
    coeffs: BTreeMap<Vec<Spinor>, C64>,
}

/// A single product with coefficient one.
pub fn basis_state(labels: &[Spinor]) -> Result<MultiSpinorState> {
    if labels.is_empty() {
        return Err(Error::EmptyState);
    }
    Ok(MultiSpinorState::term(ONE, labels))
}

impl MultiSpinorState {
    pub fn zero(rank: usize) -> Self {
        assert!(rank > 0, "rank must be positive");
        Self {
            rank,
            coeffs: BTreeMap::new(),
        }
    }

    /// `coef · labels`. Panics on an empty product.
    pub fn term(coef: C64, labels: &[Spinor]) -> Self {
        let mut s = Self::zero(labels.len());
        s.accumulate(labels.to_vec(), coef);
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coefficient(&self, labels: &[Spinor]) -> C64 {
        self.coeffs.get(labels).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Spinor], C64)> {
        self.coeffs.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `sqrt(Σ|c|²)`.
    pub fn norm(&self) -> f64 {
        self.coeffs.values().fold(0.0, |acc, z| acc + z.norm_sqr()).sqrt()
    }

    /// Largest coefficient difference. Panics on rank mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.clone() - other.clone())
            .coeffs
            .values()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.rank == other.rank && self.max_abs_diff(other) <= tol
    }

    /// `Σ conj(a_k) b_k` over products.
    pub fn inner(&self, other: &Self) -> C64 {
        self.coeffs
            .iter()
            .filter_map(|(k, a)| other.coeffs.get(k).map(|b| a.conj() * b))
            .sum()
    }

    fn accumulate(&mut self, labels: Vec<Spinor>, coef: C64) {
        debug_assert_eq!(labels.len(), self.rank);
        if coef == C64::default() {
            return;
        }
        match self.coeffs.entry(labels) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == C64::default() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coef);
            }
        }
    }

    fn check_rank(&self, other: &Self) {
        assert_eq!(
            self.rank, other.rank,
            "cannot combine spinor products of rank {} and {}",
            self.rank, other.rank
        );
    }

    /// Each factor transformed independently by the matrix of its flavor.
    pub fn map_factors(&self, undotted: &Mat2, dotted: &Mat2) -> Self {
        let mut out = Self::zero(self.rank);
        for (labels, &coef) in &self.coeffs {
            let mut partial: Vec<(Vec<Spinor>, C64)> = vec![(Vec::with_capacity(self.rank), coef)];
            for s in labels {
                let m = match s.flavor() {
                    Flavor::Undotted => undotted,
                    Flavor::Dotted => dotted,
                };
                let image = s.image(m);
                partial = partial
                    .into_iter()
                    .flat_map(|(prefix, c)| {
                        image.iter().filter(|(_, w)| *w != C64::default()).map(move |&(t, w)| {
                            let mut p = prefix.clone();
                            p.push(t);
                            (p, c * w)
                        })
                    })
                    .collect();
            }
            for (l, c) in partial {
                out.accumulate(l, c);
            }
        }
        out
    }

    /// Derivation action of a generator pair: the sum over positions of the
    /// state with that single factor replaced by its image.
    pub fn derive(&self, undotted: &Mat2, dotted: &Mat2) -> Self {
        let mut out = Self::zero(self.rank);
        for (labels, &coef) in &self.coeffs {
            for (pos, s) in labels.iter().enumerate() {
                let m = match s.flavor() {
                    Flavor::Undotted => undotted,
                    Flavor::Dotted => dotted,
                };
                for (t, w) in s.image(m) {
                    let mut l = labels.clone();
                    l[pos] = t;
                    out.accumulate(l, coef * w);
                }
            }
        }
        out
    }

    pub fn dot_conjugate(&self) -> Self {
        let mut out = Self::zero(self.rank);
        for (labels, &coef) in &self.coeffs {
            out.accumulate(labels.iter().map(|s| s.dot()).collect(), coef);
        }
        out
    }
}

/// `g` acting on every tensor factor: undotted factors by `g.undotted`,
/// dotted factors by `g.dotted`.
pub fn apply_element(g: &GroupElement, s: &MultiSpinorState) -> MultiSpinorState {
    s.map_factors(g.undotted(), g.dotted())
}

/// Swaps `u ↔ u̇` and `v ↔ v̇` in every factor.
pub fn dot_conjugate(s: &MultiSpinorState) -> MultiSpinorState {
    s.dot_conjugate()
}

/// Equal rank and every coefficient within `EXACT_TOL`.
impl PartialEq for MultiSpinorState {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other, EXACT_TOL)
    }
}

impl FromStr for MultiSpinorState {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        basis_state(&parse_product(s)?)
    }
}

impl Add for MultiSpinorState {
    type Output = MultiSpinorState;
    fn add(mut self, rhs: Self) -> Self {
        self.check_rank(&rhs);
        for (k, v) in rhs.coeffs {
            self.accumulate(k, v);
        }
        self
    }
}

impl Sub for MultiSpinorState {
    type Output = MultiSpinorState;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for MultiSpinorState {
    type Output = MultiSpinorState;
    fn neg(self) -> Self {
        self * -ONE
    }
}

impl Mul<C64> for MultiSpinorState {
    type Output = MultiSpinorState;
    fn mul(mut self, rhs: C64) -> Self {
        if rhs == C64::default() {
            self.coeffs.clear();
        } else {
            self.coeffs.values_mut().for_each(|v| *v *= rhs);
        }
        self
    }
}

impl Mul<MultiSpinorState> for C64 {
    type Output = MultiSpinorState;
    fn mul(self, rhs: MultiSpinorState) -> MultiSpinorState {
        rhs * self
    }
}

impl Mul<f64> for MultiSpinorState {
    type Output = MultiSpinorState;
    fn mul(self, rhs: f64) -> Self {
        self * C64::new(rhs, 0.0)
    }
}

impl Mul<MultiSpinorState> for f64 {
    type Output = MultiSpinorState;
    fn mul(self, rhs: MultiSpinorState) -> MultiSpinorState {
        rhs * self
    }
}

fn fmt_coef(z: C64) -> String {
    match (z.re, z.im) {
        (r, 0.0) => format!("{r}"),
        (0.0, i) => format!("{i}i"),
        (r, i) if i < 0.0 => format!("({r}-{}i)", -i),
        (r, i) => format!("({r}+{i}i)"),
    }
}

impl fmt::Display for MultiSpinorState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (labels, &coef)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if coef != ONE {
                write!(f, "{}·", fmt_coef(coef))?;
            }
            for s in labels {
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}
