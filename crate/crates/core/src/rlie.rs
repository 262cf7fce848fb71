//! The reduced free Lie ring inside `A[Y]`: the Lie subring generated by the
//! `y_i`, with the square-free Lyndon monomials as a free ℤ-basis.
//!
//! Every element is stored by its associative expansion together with its
//! Lyndon coordinates. Coordinates are read off by triangular peeling: the
//! expansion of a Lyndon word `w` is `w` plus strictly greater words of the
//! same degree, so repeatedly subtracting the expansion of the smallest
//! remaining monomial either terminates at zero (the element is Lie) or gets
//! stuck on a non-Lyndon leading monomial (it is not).
//!
//! Tangential derivations — those sending each `y_i` to `[y_i, t_i]` — close
//! under the commutator, with the tangent of `[d, d′]` at `i` given by
//! `[t_i, t′_i] + d(t′_i) − d′(t_i)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::ReducedPoly;
use crate::lyndon::{self, Letter, Word};
use crate::{Error, Result};

/// An element of the reduced free Lie ring: an associative expansion that
/// peels to zero, plus its (cached) Lyndon coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElement {
    value: ReducedPoly,
    coords: BTreeMap<Word, BigInt>,
}

impl LieElement {
    /// Certify an associative expansion as a Lie element.
    pub fn new(value: ReducedPoly) -> Result<Self> {
        let coords = to_lyndon_coordinates(&value)?;
        Ok(LieElement { value, coords })
    }

    pub fn zero(rank: usize) -> Self {
        LieElement { value: ReducedPoly::zero(rank), coords: BTreeMap::new() }
    }

    /// The generator `y_i` as a Lie element.
    pub fn gen(rank: usize, i: Letter) -> Result<Self> {
        Self::new(ReducedPoly::gen(rank, i)?)
    }

    /// Rebuild `Σ c_w · P_w` from coordinates on square-free Lyndon words.
    pub fn from_coordinates<I>(rank: usize, coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, BigInt)>,
    {
        let mut value = ReducedPoly::zero(rank);
        let mut kept = BTreeMap::new();
        for (w, c) in coords {
            if c.is_zero() {
                continue;
            }
            if w.iter().collect::<std::collections::BTreeSet<_>>().len() != w.len() {
                return Err(Error::InvalidInput(format!(
                    "repeated letter in Lyndon coordinate word {w:?}"
                )));
            }
            if !lyndon::is_lyndon(&w)? {
                return Err(Error::InvalidInput(format!("{w:?} is not a Lyndon word")));
            }
            let basis = expansion_poly(rank, &w)?;
            value = &value + &basis.scalar_mul(&c);
            if kept.insert(w.clone(), c).is_some() {
                return Err(Error::InvalidInput(format!("duplicate coordinate word {w:?}")));
            }
        }
        debug_assert_eq!(to_lyndon_coordinates(&value).as_ref(), Ok(&kept));
        Ok(LieElement { value, coords: kept })
    }

    pub fn rank(&self) -> usize {
        self.value.rank()
    }

    pub fn as_poly(&self) -> &ReducedPoly {
        &self.value
    }

    pub fn into_poly(self) -> ReducedPoly {
        self.value
    }

    /// Coordinates on the square-free Lyndon basis (zero entries absent).
    pub fn coordinates(&self) -> &BTreeMap<Word, BigInt> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_rank(self, other)?;
        Self::new(&self.value + &other.value)
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        let value = self.value.scalar_mul(c);
        let coords = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.coords.iter().map(|(w, v)| (w.clone(), v * c)).collect()
        };
        LieElement { value, coords }
    }

    /// `[self, other] = self·other − other·self`; closed on Lie elements.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        same_rank(self, other)?;
        let prod = &(&self.value * &other.value) - &(&other.value * &self.value);
        Self::new(prod).map_err(|_| {
            Error::InvariantViolation("bracket of Lie elements failed to peel".into())
        })
    }

    /// True iff every coordinate lies on a word containing `i` — membership
    /// in the Lie ideal generated by `y_i`.
    pub fn in_ideal(&self, i: Letter) -> bool {
        self.coords.keys().all(|w| w.contains(&i))
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

fn same_rank(a: &LieElement, b: &LieElement) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { left: a.rank(), right: b.rank() });
    }
    Ok(())
}

/// Expansion `P_w` of the standard bracketing of a Lyndon word `w`.
pub fn lyndon_expansion(rank: usize, w: &[Letter]) -> Result<LieElement> {
    if !lyndon::is_lyndon(w)? {
        return Err(Error::InvalidInput(format!("{w:?} is not a Lyndon word")));
    }
    let value = expansion_poly(rank, w)?;
    // For square-free w this peels to {w: 1}; with repeats it can still be a
    // valid Lie element (possibly zero), so certify by peeling either way.
    LieElement::new(value)
}

fn expansion_poly(rank: usize, w: &[Letter]) -> Result<ReducedPoly> {
    if w.len() == 1 {
        return ReducedPoly::gen(rank, w[0]);
    }
    let (u, v) = lyndon::standard_factorization(w)?;
    let pu = expansion_poly(rank, &u)?;
    let pv = expansion_poly(rank, &v)?;
    Ok(&(&pu * &pv) - &(&pv * &pu))
}

/// Triangular peeling: express `p` over the expansions of square-free Lyndon
/// words, or report why it is not a Lie element.
pub fn to_lyndon_coordinates(p: &ReducedPoly) -> Result<BTreeMap<Word, BigInt>> {
    let rank = p.rank();
    let mut rem = p.clone();
    let mut coords = BTreeMap::new();
    while !rem.is_zero() {
        let (m, c) = rem.iter().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        if m.degree() == 0 {
            return Err(Error::NotLie("nonzero constant term".into()));
        }
        let w: Word = m.letters().to_vec();
        if !lyndon::is_lyndon(&w)? {
            return Err(Error::NotLie(format!(
                "leading monomial {m} is not a Lyndon word"
            )));
        }
        let basis = expansion_poly(rank, &w)?;
        rem = &rem - &basis.scalar_mul(&c);
        debug_assert!(rem.coeff(&m).is_zero());
        coords.insert(w, c);
    }
    Ok(coords)
}

/// All sequences of `k` distinct indices from `1..=n` whose maximal index
/// comes last, in dictionary order. Reading each sequence as the iterated
/// bracket `[y_{i1}, [y_{i2}, [… ]]]` gives an alternative basis of the
/// degree-`k` part.
pub fn linear_basis(n: usize, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut current: Vec<Letter> = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, current: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if current.len() == k {
            if current[..k - 1].iter().all(|l| l < &current[k - 1]) {
                out.push(current.clone());
            }
            return;
        }
        for l in 1..=n as Letter {
            if !current.contains(&l) {
                current.push(l);
                rec(n, k, current, out);
                current.pop();
            }
        }
    }
    rec(n, k, &mut current, &mut out);
    out.sort();
    out
}

/// The right-nested iterated bracket `[y_{i1}, [y_{i2}, [… [y_{i_{s−1}},
/// y_{i_s}] …]]]` of a sequence of letters.
pub fn iterated_bracket(rank: usize, seq: &[Letter]) -> Result<LieElement> {
    if seq.is_empty() {
        return Err(Error::InvalidInput("empty bracket sequence".into()));
    }
    let mut acc = LieElement::gen(rank, seq[seq.len() - 1])?;
    for &l in seq[..seq.len() - 1].iter().rev() {
        acc = LieElement::gen(rank, l)?.bracket(&acc)?;
    }
    Ok(acc)
}

/// A derivation of `A` sending each `y_i` to `[y_i, t_i]`. Tangents are kept
/// canonical: no coordinate on a word containing its own index (the ambiguity
/// is exactly the ideal generated by `y_i`, which acts by zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TangentialDerivation {
    tangents: Vec<LieElement>,
}

impl TangentialDerivation {
    /// Canonicalizes each tangent by dropping coordinates on words that
    /// contain its own index.
    pub fn new(tangents: Vec<LieElement>) -> Result<Self> {
        let rank = tangents.len();
        let canonical: Vec<LieElement> = tangents
            .iter()
            .enumerate()
            .map(|(idx, t)| {
                if t.rank() != rank {
                    return Err(Error::RankMismatch { left: rank, right: t.rank() });
                }
                canonicalize_tangent(t, (idx + 1) as Letter)
            })
            .collect::<Result<_>>()?;
        Ok(TangentialDerivation { tangents: canonical })
    }

    pub fn zero(rank: usize) -> Self {
        TangentialDerivation { tangents: vec![LieElement::zero(rank); rank] }
    }

    /// The elementary derivation with `t_i = y_j` and all other tangents 0.
    pub fn elementary(rank: usize, i: Letter, j: Letter) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidIndex(format!("elementary derivation needs i ≠ j, got {i}")));
        }
        let mut tangents = vec![LieElement::zero(rank); rank];
        if i == 0 || i as usize > rank {
            return Err(Error::InvalidIndex(format!("strand {i} out of range 1..={rank}")));
        }
        tangents[i as usize - 1] = LieElement::gen(rank, j)?;
        Self::new(tangents)
    }

    pub fn rank(&self) -> usize {
        self.tangents.len()
    }

    /// The canonical tangent at strand `i` (1-based).
    pub fn tangent(&self, i: Letter) -> &LieElement {
        &self.tangents[i as usize - 1]
    }

    pub fn tangents(&self) -> &[LieElement] {
        &self.tangents
    }

    pub fn is_zero(&self) -> bool {
        self.tangents.iter().all(LieElement::is_zero)
    }

    /// Leibniz extension to all of `A`: each letter of each monomial is
    /// replaced, one at a time, by its image `[y_i, t_i]`.
    pub fn apply(&self, p: &ReducedPoly) -> Result<ReducedPoly> {
        let rank = self.rank();
        if p.rank() != rank {
            return Err(Error::RankMismatch { left: rank, right: p.rank() });
        }
        let images: Vec<ReducedPoly> = (1..=rank as Letter)
            .map(|i| {
                let yi = ReducedPoly::gen(rank, i).unwrap();
                let t = self.tangent(i).as_poly();
                &(&yi * t) - &(t * &yi)
            })
            .collect();
        let mut out = ReducedPoly::zero(rank);
        for (m, c) in p.iter() {
            let letters = m.letters();
            for j in 0..letters.len() {
                let prefix = ReducedPoly::monomial(rank, &letters[..j]).unwrap();
                let suffix = ReducedPoly::monomial(rank, &letters[j + 1..]).unwrap();
                let piece = &(&prefix * &images[letters[j] as usize - 1]) * &suffix;
                out = &out + &piece.scalar_mul(c);
            }
        }
        Ok(out)
    }

    /// Commutator of derivations, which is again tangential: the tangent at
    /// `i` is `[t_i, t′_i] + self(t′_i) − other(t_i)`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        let rank = self.rank();
        if other.rank() != rank {
            return Err(Error::RankMismatch { left: rank, right: other.rank() });
        }
        let mut tangents = Vec::with_capacity(rank);
        for i in 1..=rank as Letter {
            let t = self.tangent(i);
            let t2 = other.tangent(i);
            let mut value = t.bracket(t2)?.into_poly();
            value = &value + &self.apply(t2.as_poly())?;
            value = &value - &other.apply(t.as_poly())?;
            let lie = LieElement::new(value).map_err(|_| {
                Error::InvariantViolation("derivation bracket tangent failed to peel".into())
            })?;
            tangents.push(lie);
        }
        Self::new(tangents)
    }
}

impl fmt::Display for TangentialDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, t) in self.tangents.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "t{} = {}", idx + 1, t)?;
            first = false;
        }
        Ok(())
    }
}

fn canonicalize_tangent(t: &LieElement, i: Letter) -> Result<LieElement> {
    if t.coordinates().keys().all(|w| !w.contains(&i)) {
        return Ok(t.clone());
    }
    let kept: Vec<(Word, BigInt)> = t
        .coordinates()
        .iter()
        .filter(|(w, _)| !w.contains(&i))
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    LieElement::from_coordinates(t.rank(), kept)
}
