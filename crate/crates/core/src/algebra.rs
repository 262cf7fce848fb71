//! The reduced free algebra `A[Y]` on `y_1, …, y_n`: the tensor algebra
//! modulo every monomial in which a letter repeats. It is a free module of
//! rank `Σ_k k!·C(n,k)` on the square-free monomials, graded by degree ≤ n,
//! with exact unbounded integer coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lyndon::Letter;
use crate::{Error, Result};

/// A square-free monomial `y_{i1}···y_{ik}` (empty = the unit). Ordered by
/// degree first, then dictionary order — the order used for triangular
/// peeling.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<Letter>);

impl Monomial {
    /// The empty monomial (the unit of `A`).
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    /// Build from letters; rejects repetition.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut seen = [false; 256];
        for &l in &letters {
            if l == 0 {
                return Err(Error::InvalidInput("letter indices are 1-based".into()));
            }
            if std::mem::replace(&mut seen[l as usize], true) {
                return Err(Error::InvalidInput(format!(
                    "repeated letter {l} in monomial"
                )));
            }
        }
        Ok(Monomial(letters))
    }

    pub(crate) fn from_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(Monomial::new(letters.clone()).is_ok());
        Monomial(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.0.contains(&letter)
    }

    /// Concatenation in `A`: `None` when a letter would repeat.
    pub fn concat(&self, other: &Monomial) -> Option<Monomial> {
        if self.0.iter().any(|l| other.0.contains(l)) {
            return None;
        }
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Some(Monomial(letters))
    }

    fn fits_rank(&self, rank: usize) -> bool {
        self.0.iter().all(|&l| 1 <= l && (l as usize) <= rank)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<String> = self.0.iter().map(|l| format!("y{l}")).collect();
        write!(f, "{}", names.join(" "))
    }
}

/// An element of `A[Y]`: a finite map from square-free monomials to nonzero
/// `BigInt` coefficients. Values are immutable; all operations are pure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedPoly {
    rank: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl ReducedPoly {
    pub fn zero(rank: usize) -> Self {
        ReducedPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, BigInt::one())
    }

    pub fn constant(rank: usize, c: BigInt) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(Monomial::unit(), c);
        p
    }

    /// The generator `y_i`.
    pub fn gen(rank: usize, i: Letter) -> Result<Self> {
        Self::monomial(rank, &[i])
    }

    /// The monomial `y_{i1}···y_{ik}` with coefficient 1.
    pub fn monomial(rank: usize, letters: &[Letter]) -> Result<Self> {
        let m = Monomial::new(letters.to_vec())?;
        if !m.fits_rank(rank) {
            return Err(Error::InvalidInput(format!(
                "letter out of range 1..={rank} in {letters:?}"
            )));
        }
        let mut p = Self::zero(rank);
        p.add_term(m, BigInt::one());
        Ok(p)
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Self::zero(rank);
        for (m, c) in terms {
            if !m.fits_rank(rank) {
                return Err(Error::InvalidInput(format!(
                    "monomial {m} exceeds rank {rank}"
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Re-house the polynomial at a different rank (letters must fit).
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        for m in self.terms.keys() {
            if !m.fits_rank(rank) {
                return Err(Error::InvalidInput(format!(
                    "monomial {m} exceeds rank {rank}"
                )));
            }
        }
        Ok(ReducedPoly { rank, terms: self.terms.clone() })
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.fits_rank(self.rank), "monomial {m} out of rank {}", self.rank);
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of the monomial with the given letters.
    pub fn coeff_of(&self, letters: &[Letter]) -> Result<BigInt> {
        Ok(self.coeff(&Monomial::new(letters.to_vec())?))
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::unit())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Least degree carrying a nonzero term; `None` (= +∞) for 0.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    /// Largest degree carrying a nonzero term; `None` for 0.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// The homogeneous degree-`d` slice.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        ReducedPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Ring homomorphism killing every monomial that contains a letter from
    /// `kill`.
    pub fn project(&self, kill: &[Letter]) -> Self {
        ReducedPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !kill.iter().any(|&l| m.contains(l)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Letters occurring in some monomial with nonzero coefficient.
    pub fn letters_present(&self) -> BTreeSet<Letter> {
        self.terms
            .keys()
            .flat_map(|m| m.letters().iter().copied())
            .collect()
    }

    /// Checked product (the operators panic on rank mismatch instead).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(self * other)
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        ReducedPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Exact inverse of a unit with constant term 1: with `a := p − 1`
    /// nilpotent, returns `Σ_{k=0..n} (−a)^k`.
    pub fn unit_inverse(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::NotAUnit);
        }
        let minus_a = &Self::one(self.rank) - self;
        let mut sum = Self::one(self.rank);
        let mut power = Self::one(self.rank);
        for _ in 1..=self.rank {
            power = &power * &minus_a;
            if power.is_zero() {
                break;
            }
            sum = &sum + &power;
        }
        debug_assert!((&sum * self).is_one());
        Ok(sum)
    }

    /// Exact integer power of a unit with constant term 1, any sign of `e`:
    /// with `a := p − 1` nilpotent, `p^e = Σ_{k=0..n} C(e,k)·a^k`.
    pub fn unit_pow(&self, e: &BigInt) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::NotAUnit);
        }
        let a = self - &Self::one(self.rank);
        let mut sum = Self::one(self.rank);
        let mut power = Self::one(self.rank);
        let mut binom = BigInt::one();
        for k in 1..=self.rank {
            power = &power * &a;
            if power.is_zero() {
                break;
            }
            // C(e,k) = e(e−1)…(e−k+1)/k!, exact at every step
            binom = binom * (e - BigInt::from(k as i64 - 1)) / BigInt::from(k as i64);
            sum = &sum + &power.scalar_mul(&binom);
        }
        Ok(sum)
    }
}

fn assert_same_rank(a: &ReducedPoly, b: &ReducedPoly) {
    assert_eq!(
        a.rank, b.rank,
        "rank mismatch in algebra operation: {} vs {}",
        a.rank, b.rank
    );
}

impl std::ops::Add for &ReducedPoly {
    type Output = ReducedPoly;
    fn add(self, rhs: &ReducedPoly) -> ReducedPoly {
        assert_same_rank(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &ReducedPoly {
    type Output = ReducedPoly;
    fn sub(self, rhs: &ReducedPoly) -> ReducedPoly {
        assert_same_rank(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &ReducedPoly {
    type Output = ReducedPoly;
    fn neg(self) -> ReducedPoly {
        ReducedPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Mul for &ReducedPoly {
    type Output = ReducedPoly;
    fn mul(self, rhs: &ReducedPoly) -> ReducedPoly {
        assert_same_rank(self, rhs);
        let mut out = ReducedPoly::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                if let Some(m) = m1.concat(m2) {
                    out.add_term(m, c1 * c2);
                }
            }
        }
        out
    }
}

impl fmt::Display for ReducedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} {m}")?;
            }
        }
        Ok(())
    }
}

/// All square-free monomials of the given degree over `{1..rank}`, ascending.
pub fn square_free_monomials(rank: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current: Vec<Letter> = Vec::with_capacity(degree);
    fn rec(rank: usize, degree: usize, current: &mut Vec<Letter>, out: &mut Vec<Monomial>) {
        if current.len() == degree {
            out.push(Monomial::from_unchecked(current.clone()));
            return;
        }
        for l in 1..=rank as Letter {
            if !current.contains(&l) {
                current.push(l);
                rec(rank, degree, current, out);
                current.pop();
            }
        }
    }
    if degree <= rank {
        rec(rank, degree, &mut current, &mut out);
    }
    out.sort();
    out
}

/// Module rank of `A[n]`: `Σ_{k=0..n} k!·C(n,k)`.
pub fn module_rank(n: usize) -> usize {
    let factorial = |m: usize| (1..=m).product::<usize>();
    let choose = |n: usize, k: usize| factorial(n) / (factorial(k) * factorial(n - k));
    (0..=n).map(|k| factorial(k) * choose(n, k)).sum()
}
