//! The reduced free group `RF_n`: the quotient of the free group on
//! `x_1, …, x_n` in which every generator commutes with all of its own
//! conjugates.
//!
//! Elements are modeled through the expansion `μ: x_i ↦ 1 + y_i` into the
//! units of the reduced free algebra. The expansion is injective, so equality
//! of expansions decides the word problem; a group word is kept alongside
//! purely as a displayable witness. The inverse direction is `from_expansion`,
//! which collects a unit of the algebra into a canonical product of Lyndon
//! commutators — or proves it is not the expansion of any group element.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::algebra::ReducedPoly;
use crate::lyndon::{self, Letter, Word};
use crate::rlie;
use crate::{Error, Result};

/// A word in the generators: a sequence of (index, sign) pairs, sign ±1.
/// Not freely reduced — it is a witness, not a canonical form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupWord(Vec<(Letter, i8)>);

impl GroupWord {
    pub fn new(letters: Vec<(Letter, i8)>) -> Result<Self> {
        for &(l, s) in &letters {
            if l == 0 {
                return Err(Error::InvalidInput("letter indices are 1-based".into()));
            }
            if s != 1 && s != -1 {
                return Err(Error::InvalidInput(format!("sign must be ±1, got {s}")));
            }
        }
        Ok(GroupWord(letters))
    }

    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    pub fn gen(i: Letter) -> Self {
        GroupWord(vec![(i, 1)])
    }

    pub fn letters(&self) -> &[(Letter, i8)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        GroupWord(letters)
    }

    pub fn inverse(&self) -> Self {
        GroupWord(self.0.iter().rev().map(|&(l, s)| (l, -s)).collect())
    }

    pub fn repeat(&self, times: usize) -> Self {
        let mut letters = Vec::with_capacity(self.0.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.0);
        }
        GroupWord(letters)
    }
}

impl fmt::Display for GroupWord {
    /// Lowercase `x3` for a generator, uppercase `X3` for its inverse;
    /// the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<String> = self
            .0
            .iter()
            .map(|&(l, s)| if s > 0 { format!("x{l}") } else { format!("X{l}") })
            .collect();
        write!(f, "{}", names.join(" "))
    }
}

/// An element of `RF_n`: a word witness plus its expansion. Two elements are
/// equal exactly when their expansions are — the witness does not participate.
#[derive(Clone, Eq, Debug)]
pub struct RFElement {
    word: GroupWord,
    expansion: ReducedPoly,
}

impl PartialEq for RFElement {
    fn eq(&self, other: &Self) -> bool {
        self.expansion == other.expansion
    }
}

impl RFElement {
    pub fn identity(rank: usize) -> Self {
        RFElement { word: GroupWord::empty(), expansion: ReducedPoly::one(rank) }
    }

    /// The generator `x_i`.
    pub fn gen(rank: usize, i: Letter) -> Result<Self> {
        magnus_expand(&GroupWord::gen(i), rank)
    }

    pub fn rank(&self) -> usize {
        self.expansion.rank()
    }

    pub fn word(&self) -> &GroupWord {
        &self.word
    }

    pub fn expansion(&self) -> &ReducedPoly {
        &self.expansion
    }

    pub fn is_identity(&self) -> bool {
        self.expansion.is_one()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_rank(other)?;
        Ok(RFElement {
            word: self.word.concat(&other.word),
            expansion: &self.expansion * &other.expansion,
        })
    }

    pub fn inv(&self) -> Self {
        RFElement {
            word: self.word.inverse(),
            expansion: self.expansion.unit_inverse().unwrap(),
        }
    }

    /// `self^other = other⁻¹ · self · other`.
    pub fn conj(&self, other: &Self) -> Result<Self> {
        other.inv().mul(self)?.mul(other)
    }

    /// `[self, other] = self · other · self⁻¹ · other⁻¹`.
    pub fn comm(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.mul(&self.inv())?.mul(&other.inv())
    }

    /// Integer power, any sign and size of `e` the witness can afford.
    pub fn pow(&self, e: &BigInt) -> Result<Self> {
        let expansion = self.expansion.unit_pow(e)?;
        let times = e.magnitude().to_usize().ok_or_else(|| {
            Error::InvalidInput(format!("exponent {e} too large to build a word witness"))
        })?;
        let base = if e.is_negative() { self.word.inverse() } else { self.word.clone() };
        Ok(RFElement { word: base.repeat(times), expansion })
    }

    /// Largest `d` with `self` in the `d`-th lower central subgroup: the
    /// valuation of `expansion − 1`. `None` (= ∞) exactly for the identity.
    pub fn lcs_degree(&self) -> Option<usize> {
        (&self.expansion - &ReducedPoly::one(self.rank())).valuation()
    }

    /// Kill the given strands: letters leave the word, monomials containing
    /// them leave the expansion. The two agree because killing is a
    /// homomorphism on both sides.
    pub fn project_strands(&self, kill: &[Letter]) -> Self {
        let word = GroupWord(
            self.word
                .0
                .iter()
                .filter(|(l, _)| !kill.contains(l))
                .copied()
                .collect(),
        );
        let expansion = self.expansion.project(kill);
        debug_assert_eq!(
            magnus_expand(&word, self.rank()).map(|g| g.expansion),
            Ok(expansion.clone())
        );
        RFElement { word, expansion }
    }

    /// Membership in the normal closure of `x_i`, which is also the
    /// centralizer of `x_i`: true iff killing strand `i` kills the element.
    pub fn in_normal_closure(&self, i: Letter) -> bool {
        self.expansion.project(&[i]).is_one()
    }

    /// The center is the `n`-th lower central subgroup.
    pub fn is_central(&self) -> bool {
        match self.lcs_degree() {
            None => true,
            Some(d) => d >= self.rank(),
        }
    }

    fn same_rank(&self, other: &Self) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(())
    }
}

impl fmt::Display for RFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

/// Expand a word: the ordered product of `(1 + y_i)^{±1}`.
pub fn magnus_expand(word: &GroupWord, rank: usize) -> Result<RFElement> {
    let mut expansion = ReducedPoly::one(rank);
    for &(l, s) in word.letters() {
        if l as usize > rank {
            return Err(Error::InvalidInput(format!(
                "letter {l} out of range 1..={rank}"
            )));
        }
        let factor = if s > 0 {
            &ReducedPoly::one(rank) + &ReducedPoly::gen(rank, l)?
        } else {
            &ReducedPoly::one(rank) - &ReducedPoly::gen(rank, l)?
        };
        expansion = &expansion * &factor;
    }
    Ok(RFElement { word: word.clone(), expansion })
}

/// The group-commutator realization of a Lyndon word: a leaf is a generator,
/// a node `(u, v)` is the commutator of the realizations of `u` and `v`. Its
/// expansion is `1 + P_w +` terms of higher degree.
pub fn lyndon_word_element(rank: usize, w: &[Letter]) -> Result<RFElement> {
    if w.len() == 1 {
        return RFElement::gen(rank, w[0]);
    }
    if !lyndon::is_lyndon(w)? {
        return Err(Error::InvalidInput(format!("{w:?} is not a Lyndon word")));
    }
    let (u, v) = lyndon::standard_factorization(w)?;
    let gu = lyndon_word_element(rank, &u)?;
    let gv = lyndon_word_element(rank, &v)?;
    gu.comm(&gv)
}

/// One degree level of a collection: the Lyndon words of that degree and the
/// integer exponents they carry.
pub type CollectionLevel = Vec<(Word, BigInt)>;

/// Collect a unit of the algebra into the canonical ordered product
/// `∏_d ∏_w P_w^{e_{d,w}}` of Lyndon commutators, degree by degree, smallest
/// word first. Succeeds exactly on the image of the expansion map; the
/// returned element's expansion reproduces the input bit for bit.
pub fn from_expansion(expansion: &ReducedPoly) -> Result<(RFElement, Vec<CollectionLevel>)> {
    let rank = expansion.rank();
    if !expansion.constant_term().is_one() {
        return Err(Error::InvalidInput(
            "expansion must have constant term 1".into(),
        ));
    }
    let mut acc = RFElement::identity(rank);
    let mut levels = Vec::new();
    loop {
        let residual = &acc.expansion.unit_inverse().unwrap() * expansion;
        let defect = &residual - &ReducedPoly::one(rank);
        let d = match defect.valuation() {
            None => break,
            Some(d) => d,
        };
        let slice = defect.homogeneous_part(d);
        let coords = rlie::to_lyndon_coordinates(&slice).map_err(|e| {
            Error::InvalidInput(format!(
                "not the expansion of a group element: degree-{d} obstruction ({e})"
            ))
        })?;
        let mut level = Vec::new();
        for (w, c) in coords {
            let p = lyndon_word_element(rank, &w)?;
            acc = acc.mul(&p.pow(&c)?)?;
            level.push((w, c));
        }
        levels.push(level);
    }
    debug_assert_eq!(&acc.expansion, expansion);
    Ok((acc, levels))
}
