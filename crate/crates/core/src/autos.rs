//! Basis-conjugating automorphisms of the reduced free group — the welded
//! braid group up to link-homotopy.
//!
//! An automorphism sends each generator to a conjugate of a generator:
//! `x_i ↦ x_{π(i)}^{w_i}`. The conjugator `w_i` only matters modulo the
//! normal closure of `x_{π(i)}`, so what is stored is the canonical class
//! `C_i`: the expansion of `w_i` with every monomial containing `y_{π(i)}`
//! removed. Pairs `(π, C_1..C_n)` compose, invert, and compare exactly.
//!
//! All heavy lifting runs through the induced ring endomorphism `Φ` of the
//! reduced free algebra, `y_j ↦ C_j⁻¹ · y_{π(j)} · C_j`, which is linear on a
//! finite free ℤ-module and triangular by degree — composition is a module
//! map, inversion is back-substitution, and the combing normal form is
//! repeated peeling of the top strand.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::ReducedPoly;
use crate::lyndon::{self, Letter, Word};
use crate::rfree::{self, GroupWord, RFElement};
use crate::rlie::{self, LieElement, TangentialDerivation};
use crate::{Error, Result};

/// An automorphism `x_i ↦ x_{π(i)}^{w_i}` stored as the permutation `π` and
/// the canonical conjugator classes `C_i`. Equality is component-wise and
/// decides equality of automorphisms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeldedAuto {
    perm: Vec<Letter>,
    conj: Vec<ReducedPoly>,
}

impl WeldedAuto {
    pub fn identity(rank: usize) -> Self {
        WeldedAuto {
            perm: (1..=rank as Letter).collect(),
            conj: vec![ReducedPoly::one(rank); rank],
        }
    }

    /// Validated constructor: `perm` must be a permutation of `1..=n`, and
    /// each conjugator must be a unit expansion of a group element. The
    /// conjugators are canonicalized (projected off their target strand).
    pub fn new(perm: Vec<Letter>, conj: Vec<ReducedPoly>) -> Result<Self> {
        let rank = perm.len();
        validate_perm(&perm)?;
        if conj.len() != rank {
            return Err(Error::InvalidInput(format!(
                "expected {rank} conjugators, got {}",
                conj.len()
            )));
        }
        let canonical = perm
            .iter()
            .zip(conj)
            .map(|(&target, c)| {
                if c.rank() != rank {
                    return Err(Error::RankMismatch { left: rank, right: c.rank() });
                }
                if !c.constant_term().is_one() {
                    return Err(Error::InvalidInput(
                        "conjugator must have constant term 1".into(),
                    ));
                }
                let canonical = c.project(&[target]);
                rfree::from_expansion(&canonical)?;
                Ok(canonical)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeldedAuto { perm, conj: canonical })
    }

    /// The pure automorphism conjugating only `x_i`, by the element with the
    /// given expansion.
    pub fn conjugation(rank: usize, i: Letter, expansion: &ReducedPoly) -> Result<Self> {
        check_strand(i, rank)?;
        let mut conj = vec![ReducedPoly::one(rank); rank];
        conj[i as usize - 1] = expansion.clone();
        Self::new((1..=rank as Letter).collect(), conj)
    }

    fn from_parts(perm: Vec<Letter>, conj: Vec<ReducedPoly>) -> Self {
        debug_assert!(validate_perm(&perm).is_ok());
        debug_assert_eq!(perm.len(), conj.len());
        debug_assert!(perm
            .iter()
            .zip(&conj)
            .all(|(&t, c)| c.constant_term().is_one()
                && !c.letters_present().contains(&t)));
        WeldedAuto { perm, conj }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[Letter] {
        &self.perm
    }

    /// Image strand of `i`: the `π(i)` in `x_i ↦ x_{π(i)}^{w_i}`.
    pub fn perm_of(&self, i: Letter) -> Letter {
        self.perm[i as usize - 1]
    }

    /// The canonical conjugator class of strand `i`.
    pub fn conjugator(&self, i: Letter) -> &ReducedPoly {
        &self.conj[i as usize - 1]
    }

    pub fn is_pure(&self) -> bool {
        self.perm.iter().enumerate().all(|(idx, &p)| p as usize == idx + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.is_pure() && self.conj.iter().all(ReducedPoly::is_one)
    }

    /// `self ∘ other`: apply `other` first. The conjugator of strand `i` is
    /// `C^self_{π_other(i)} · Φ_self(C^other_i)`, projected off the image
    /// strand.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let rank = self.rank();
        if other.rank() != rank {
            return Err(Error::RankMismatch { left: rank, right: other.rank() });
        }
        let images = phi_letter_images(self);
        let perm: Vec<Letter> = (0..rank)
            .map(|i| self.perm[other.perm[i] as usize - 1])
            .collect();
        let conj: Vec<ReducedPoly> = (0..rank)
            .map(|i| {
                let mid = other.perm[i] as usize;
                let e = &self.conj[mid - 1] * &phi_apply(&images, &other.conj[i]);
                e.project(&[perm[i]])
            })
            .collect();
        Ok(Self::from_parts(perm, conj))
    }

    /// Exact inverse. For each strand the defining equation `Φ_self(E) =
    /// (C_{π⁻¹(j)})⁻¹` is solved by degree-wise back-substitution — `Φ` is
    /// triangular with a permutation of the monomials on the diagonal — and
    /// the solution is projected to its canonical class. The result is
    /// checked by composing back to the identity.
    pub fn inverse(&self) -> Result<Self> {
        let rank = self.rank();
        let images = phi_letter_images(self);
        let mut inv_perm = vec![0 as Letter; rank];
        for (idx, &p) in self.perm.iter().enumerate() {
            inv_perm[p as usize - 1] = (idx + 1) as Letter;
        }
        let conj: Vec<ReducedPoly> = (1..=rank)
            .map(|j| {
                let source = inv_perm[j - 1];
                let target = self.conj[source as usize - 1].unit_inverse().unwrap();
                let e = phi_solve(&images, &self.perm, &target);
                e.project(&[source])
            })
            .collect();
        let candidate = Self::from_parts(inv_perm, conj);
        let check = self.compose(&candidate)?;
        if !check.is_identity() {
            return Err(Error::InvariantViolation(
                "inverse candidate does not compose to the identity".into(),
            ));
        }
        Ok(candidate)
    }

    /// Apply to a group element: each letter `x_i^{±1}` of the witness word
    /// is rewritten to `(x_{π(i)}^{w_i})^{±1}` with a fixed conjugator
    /// witness per strand. The expansion of the result equals `Φ` applied to
    /// the expansion of the input.
    pub fn act(&self, g: &RFElement) -> Result<RFElement> {
        let rank = self.rank();
        if g.rank() != rank {
            return Err(Error::RankMismatch { left: rank, right: g.rank() });
        }
        let mut witnesses: Vec<Option<GroupWord>> = vec![None; rank];
        let mut letters: Vec<(Letter, i8)> = Vec::new();
        for &(l, s) in g.word().letters() {
            let idx = l as usize - 1;
            if witnesses[idx].is_none() {
                let (elem, _) = rfree::from_expansion(&self.conj[idx]).map_err(|e| {
                    Error::InvariantViolation(format!("stored conjugator is invalid: {e}"))
                })?;
                witnesses[idx] = Some(elem.word().clone());
            }
            let w = witnesses[idx].as_ref().unwrap();
            let winv = w.inverse();
            letters.extend_from_slice(winv.letters());
            letters.push((self.perm[idx], s));
            letters.extend_from_slice(w.letters());
        }
        rfree::magnus_expand(&GroupWord::new(letters)?, rank)
    }

    /// True iff the product `x_1 x_2 ⋯ x_n` is fixed.
    pub fn fixes_boundary(&self) -> bool {
        let rank = self.rank();
        let boundary = GroupWord::new((1..=rank as Letter).map(|l| (l, 1)).collect()).unwrap();
        let g = rfree::magnus_expand(&boundary, rank).unwrap();
        self.act(&g).map(|h| h == g).unwrap_or(false)
    }

    /// Least degree in which some conjugator differs from 1; `None` (= ∞)
    /// exactly for the identity. For pure automorphisms this grades the
    /// filtration by how deep in the lower central series the action moves
    /// group elements.
    pub fn andreadakis_degree(&self) -> Result<Option<usize>> {
        self.require_pure()?;
        Ok(self
            .conj
            .iter()
            .filter_map(|c| (c - &ReducedPoly::one(self.rank())).valuation())
            .min())
    }

    /// The coefficient of `y_{i1}⋯y_{id}` in the canonical conjugator of the
    /// chosen strand — a link-homotopy invariant of the braid.
    pub fn milnor(&self, idx: &MilnorIndex) -> Result<BigInt> {
        self.require_pure()?;
        let rank = self.rank();
        check_strand(idx.strand, rank)?;
        for &l in &idx.sequence {
            if l == 0 || l as usize > rank {
                return Err(Error::InvalidIndex(format!(
                    "index {l} out of range 1..={rank}"
                )));
            }
        }
        self.conj[idx.strand as usize - 1]
            .coeff_of(&idx.sequence)
            .map_err(|_| Error::InvalidIndex("repeated index in sequence".into()))
    }

    /// The lowest-degree data of a pure automorphism: its degree `d` and the
    /// tangential derivation whose tangent at `i` is the degree-`d` slice of
    /// `C_i − 1`. `None` for the identity.
    pub fn johnson(&self) -> Result<Option<(usize, TangentialDerivation)>> {
        self.require_pure()?;
        let rank = self.rank();
        let d = match self.andreadakis_degree()? {
            None => return Ok(None),
            Some(d) => d,
        };
        let tangents = self
            .conj
            .iter()
            .map(|c| {
                let slice = (c - &ReducedPoly::one(rank)).homogeneous_part(d);
                LieElement::new(slice).map_err(|e| {
                    Error::InvariantViolation(format!(
                        "lowest-degree slice of a conjugator is not Lie: {e}"
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Some((d, TangentialDerivation::new(tangents)?)))
    }

    /// Combing normal form of a pure automorphism: peel strands from the top
    /// down. At level `m` the part acting trivially on the first `m−1`
    /// strands is split off, its residual conjugator of `x_m` is recorded,
    /// and what remains of it — an automorphism fixing `x_m` and conjugating
    /// each `x_i` (i < m) by an element of the normal closure of `x_m` — is
    /// written in exponent coordinates on Lyndon words containing `m`.
    pub fn comb(&self) -> Result<NormalForm> {
        self.require_pure()?;
        let rank = self.rank();
        let mut current = self.clone();
        let mut levels = Vec::new();
        for m in (2..=rank).rev() {
            let ml = m as Letter;
            let reduced = current.project_strand(ml);
            let k = current.compose(&reduced.inverse()?)?;
            for i in 1..=rank {
                if i != m && !k.conj[i - 1].project(&[ml]).is_one() {
                    return Err(Error::InvariantViolation(format!(
                        "level {m}: splitting did not land in the kernel at strand {i}"
                    )));
                }
            }
            let residual = k.conj[m - 1].clone();
            if residual.letters_present().iter().any(|&l| l >= ml) {
                return Err(Error::InvariantViolation(format!(
                    "level {m}: residual escapes the lower strands"
                )));
            }
            let t = Self::conjugation(rank, ml, &residual)?;
            let kp = k.compose(&t.inverse()?)?;
            if !kp.conj[m - 1].is_one() {
                return Err(Error::InvariantViolation(format!(
                    "level {m}: residual removal did not fix the strand"
                )));
            }
            let mut coords = Vec::new();
            for i in 1..ml {
                let ambient: Vec<Letter> = (1..=ml).filter(|&l| l != i).collect();
                let vector = abelian_coordinates(&kp.conj[i as usize - 1], &ambient, ml)
                    .map_err(|e| {
                        Error::InvariantViolation(format!(
                            "level {m}, strand {i}: kernel coordinates failed: {e}"
                        ))
                    })?;
                coords.push((i, vector));
            }
            levels.push(CombLevel { m: ml, residual, coords });
            current = reduced;
        }
        if !current.is_identity() {
            return Err(Error::InvariantViolation(
                "combing left a nontrivial bottom level".into(),
            ));
        }
        Ok(NormalForm { rank, levels })
    }

    /// Kill strand `m`: project every conjugator and make strand `m` trivial.
    fn project_strand(&self, m: Letter) -> Self {
        let rank = self.rank();
        let conj = self
            .conj
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                if idx + 1 == m as usize {
                    ReducedPoly::one(rank)
                } else {
                    c.project(&[m])
                }
            })
            .collect();
        Self::from_parts(self.perm.clone(), conj)
    }

    fn require_pure(&self) -> Result<()> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(())
    }
}

impl fmt::Display for WeldedAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rank() {
            if i > 1 {
                writeln!(f)?;
            }
            let c = &self.conj[i - 1];
            if c.is_one() {
                write!(f, "x{i} -> x{}", self.perm[i - 1])?;
            } else {
                write!(f, "x{i} -> x{} ^ ({c})", self.perm[i - 1])?;
            }
        }
        Ok(())
    }
}

fn validate_perm(perm: &[Letter]) -> Result<()> {
    let rank = perm.len();
    let mut seen = vec![false; rank];
    for &p in perm {
        if p == 0 || p as usize > rank || std::mem::replace(&mut seen[p as usize - 1], true) {
            return Err(Error::InvalidInput(format!(
                "{perm:?} is not a permutation of 1..={rank}"
            )));
        }
    }
    Ok(())
}

fn check_strand(i: Letter, rank: usize) -> Result<()> {
    if i == 0 || i as usize > rank {
        return Err(Error::InvalidInput(format!(
            "strand {i} out of range 1..={rank}"
        )));
    }
    Ok(())
}

/// Images `Φ(y_j) = C_j⁻¹ · y_{π(j)} · C_j` of the generators under the
/// induced ring endomorphism.
fn phi_letter_images(a: &WeldedAuto) -> Vec<ReducedPoly> {
    let rank = a.rank();
    (0..rank)
        .map(|j| {
            let c = &a.conj[j];
            let y = ReducedPoly::gen(rank, a.perm[j]).unwrap();
            if c.is_one() {
                y
            } else {
                &(&c.unit_inverse().unwrap() * &y) * c
            }
        })
        .collect()
}

/// Apply the multiplicative extension of the letter images to a polynomial.
fn phi_apply(images: &[ReducedPoly], p: &ReducedPoly) -> ReducedPoly {
    let rank = p.rank();
    let mut out = ReducedPoly::zero(rank);
    for (m, c) in p.iter() {
        let mut acc = ReducedPoly::constant(rank, c.clone());
        for &l in m.letters() {
            acc = &acc * &images[l as usize - 1];
            if acc.is_zero() {
                break;
            }
        }
        out = &out + &acc;
    }
    out
}

/// Solve `Φ(E) = t` exactly. `Φ` sends a monomial to its letter-permuted
/// image plus strictly higher-degree terms, so sweeping degrees from the
/// bottom and inverting the permutation part at each step terminates with a
/// zero residual after at most `rank + 1` rounds.
fn phi_solve(images: &[ReducedPoly], perm: &[Letter], t: &ReducedPoly) -> ReducedPoly {
    let rank = perm.len();
    let mut inv_perm = vec![0 as Letter; rank];
    for (idx, &p) in perm.iter().enumerate() {
        inv_perm[p as usize - 1] = (idx + 1) as Letter;
    }
    let mut solution = ReducedPoly::zero(rank);
    let mut residual = t.clone();
    for d in 0..=rank {
        let slice = residual.homogeneous_part(d);
        if slice.is_zero() {
            continue;
        }
        let preimage = permute_letters(&slice, &inv_perm);
        solution = &solution + &preimage;
        residual = &residual - &phi_apply(images, &preimage);
    }
    debug_assert!(residual.is_zero());
    solution
}

fn permute_letters(p: &ReducedPoly, table: &[Letter]) -> ReducedPoly {
    ReducedPoly::from_terms(
        p.rank(),
        p.iter().map(|(m, c)| {
            let letters: Vec<Letter> =
                m.letters().iter().map(|&l| table[l as usize - 1]).collect();
            (crate::algebra::Monomial::new(letters).unwrap(), c.clone())
        }),
    )
    .unwrap()
}

/// `x_i ↦ x_i^{x_j}`, everything else fixed.
pub fn chi(i: Letter, j: Letter, n: usize) -> Result<WeldedAuto> {
    if i == j {
        return Err(Error::InvalidInput("chi requires two distinct strands".into()));
    }
    check_strand(i, n)?;
    check_strand(j, n)?;
    let mut conj = vec![ReducedPoly::one(n); n];
    conj[i as usize - 1] = &ReducedPoly::one(n) + &ReducedPoly::gen(n, j)?;
    Ok(WeldedAuto::from_parts((1..=n as Letter).collect(), conj))
}

/// The braid generator crossing strands `i` and `i+1`:
/// `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`.
pub fn sigma(i: Letter, n: usize) -> Result<WeldedAuto> {
    check_adjacent(i, n)?;
    let mut perm: Vec<Letter> = (1..=n as Letter).collect();
    perm.swap(i as usize - 1, i as usize);
    let mut conj = vec![ReducedPoly::one(n); n];
    conj[i as usize - 1] = &ReducedPoly::one(n) - &ReducedPoly::gen(n, i)?;
    Ok(WeldedAuto::from_parts(perm, conj))
}

/// The wild (permutation) generator: swap strands `i` and `i+1` with trivial
/// conjugators.
pub fn rho(i: Letter, n: usize) -> Result<WeldedAuto> {
    check_adjacent(i, n)?;
    let mut perm: Vec<Letter> = (1..=n as Letter).collect();
    perm.swap(i as usize - 1, i as usize);
    Ok(WeldedAuto::from_parts(perm, vec![ReducedPoly::one(n); n]))
}

fn check_adjacent(i: Letter, n: usize) -> Result<()> {
    if i == 0 || (i as usize) >= n {
        return Err(Error::InvalidInput(format!(
            "adjacent transposition index {i} out of range 1..{n}"
        )));
    }
    Ok(())
}

/// The pure braid generator linking strands `i < j`, written as the usual
/// conjugate of a double crossing:
/// `σ_{j−1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j−1}⁻¹`.
/// Purity and boundary preservation are asserted on the result.
pub fn artin(i: Letter, j: Letter, n: usize) -> Result<WeldedAuto> {
    if i >= j {
        return Err(Error::InvalidInput(format!(
            "artin generator requires i < j, got ({i}, {j})"
        )));
    }
    check_strand(j, n)?;
    let mut acc = WeldedAuto::identity(n);
    for k in (i + 1..j).rev() {
        acc = acc.compose(&sigma(k, n)?)?;
    }
    let si = sigma(i, n)?;
    acc = acc.compose(&si)?.compose(&si)?;
    for k in i + 1..j {
        acc = acc.compose(&sigma(k, n)?.inverse()?)?;
    }
    if !acc.is_pure() {
        return Err(Error::InvariantViolation("artin generator is not pure".into()));
    }
    if !acc.fixes_boundary() {
        return Err(Error::InvariantViolation(
            "artin generator moves the boundary element".into(),
        ));
    }
    Ok(acc)
}

/// A Milnor invariant's address: the strand whose conjugator is read, and the
/// sequence of strands selecting a coefficient. The sequence must be
/// repetition-free and avoid the strand itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MilnorIndex {
    strand: Letter,
    sequence: Vec<Letter>,
}

impl MilnorIndex {
    pub fn new(strand: Letter, sequence: Vec<Letter>) -> Result<Self> {
        if strand == 0 {
            return Err(Error::InvalidIndex("strand indices are 1-based".into()));
        }
        let mut seen = [false; 256];
        for &l in &sequence {
            if l == 0 {
                return Err(Error::InvalidIndex("indices are 1-based".into()));
            }
            if l == strand {
                return Err(Error::InvalidIndex(format!(
                    "sequence may not contain the strand {strand} itself"
                )));
            }
            if std::mem::replace(&mut seen[l as usize], true) {
                return Err(Error::InvalidIndex(format!("repeated index {l}")));
            }
        }
        Ok(MilnorIndex { strand, sequence })
    }

    pub fn strand(&self) -> Letter {
        self.strand
    }

    pub fn sequence(&self) -> &[Letter] {
        &self.sequence
    }
}

/// Exponent coordinates of an element of the normal closure of `x_target`
/// inside the reduced free group on `ambient`: the unique exponents on
/// square-free Lyndon words containing `target`, extracted degree by degree.
pub fn abelian_coordinates(
    u: &ReducedPoly,
    ambient: &[Letter],
    target: Letter,
) -> Result<BTreeMap<Word, BigInt>> {
    let rank = u.rank();
    if !ambient.contains(&target) {
        return Err(Error::InvalidInput(format!(
            "target {target} is not in the ambient alphabet {ambient:?}"
        )));
    }
    let support = u.letters_present();
    if let Some(&stray) = support.iter().find(|l| !ambient.contains(l)) {
        return Err(Error::SupportError(format!(
            "letter {stray} lies outside the ambient alphabet {ambient:?}"
        )));
    }
    if !u.constant_term().is_one() {
        return Err(Error::InvalidInput("expansion must have constant term 1".into()));
    }
    if !u.project(&[target]).is_one() {
        return Err(Error::NotInClosure);
    }
    let mut coords = BTreeMap::new();
    let mut rem = u.clone();
    loop {
        let defect = &rem - &ReducedPoly::one(rank);
        let d = match defect.valuation() {
            None => break,
            Some(d) => d,
        };
        let slice = defect.homogeneous_part(d);
        let level = rlie::to_lyndon_coordinates(&slice)?;
        let mut divisor = RFElement::identity(rank);
        for (w, e) in level {
            if !w.contains(&target) {
                return Err(Error::SupportError(format!(
                    "degree-{d} coordinate on {w:?} does not involve the target {target}"
                )));
            }
            let p = rfree::lyndon_word_element(rank, &w)?;
            divisor = divisor.mul(&p.pow(&e)?)?;
            coords.insert(w, e);
        }
        rem = &divisor.expansion().unit_inverse().unwrap() * &rem;
    }
    Ok(coords)
}

/// One level of a combing normal form: the strand `m` being peeled, the
/// residual conjugator of `x_m` (an expansion over strands below `m`), and
/// for each lower strand the exponent vector of its kernel conjugator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CombLevel {
    pub m: Letter,
    pub residual: ReducedPoly,
    pub coords: Vec<(Letter, BTreeMap<Word, BigInt>)>,
}

/// The combing normal form: levels for `m = n` down to `2`. Two pure
/// automorphisms are equal exactly when their normal forms are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    rank: usize,
    levels: Vec<CombLevel>,
}

impl NormalForm {
    /// Shape-validated constructor: levels must run `n, n−1, …, 2` and each
    /// level must list strands `1..m` in order. Content (Lyndon words,
    /// residual expansions) is validated by `uncomb`.
    pub fn new(rank: usize, levels: Vec<CombLevel>) -> Result<Self> {
        if levels.len() + 1 != rank.max(1) {
            return Err(Error::InvalidInput(format!(
                "expected {} levels for rank {rank}, got {}",
                rank.saturating_sub(1),
                levels.len()
            )));
        }
        for (idx, level) in levels.iter().enumerate() {
            let expect_m = rank - idx;
            if level.m as usize != expect_m {
                return Err(Error::InvalidInput(format!(
                    "level {idx} should cover strand {expect_m}, found {}",
                    level.m
                )));
            }
            let strands: Vec<Letter> = level.coords.iter().map(|(i, _)| *i).collect();
            let expected: Vec<Letter> = (1..level.m).collect();
            if strands != expected {
                return Err(Error::InvalidInput(format!(
                    "level {} must list strands {expected:?} in order, found {strands:?}",
                    level.m
                )));
            }
        }
        Ok(NormalForm { rank, levels })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn levels(&self) -> &[CombLevel] {
        &self.levels
    }

    pub fn is_trivial(&self) -> bool {
        self.levels
            .iter()
            .all(|l| l.residual.is_one() && l.coords.iter().all(|(_, v)| v.is_empty()))
    }
}

/// Rebuild the automorphism from its normal form, bottom level first. At each
/// level the residual conjugation of `x_m` is applied, then the kernel
/// conjugators rebuilt from their exponent vectors; the factors at one level
/// commute, so the order among strands is immaterial.
pub fn uncomb(nf: &NormalForm) -> Result<WeldedAuto> {
    let rank = nf.rank;
    let mut current = WeldedAuto::identity(rank);
    for level in nf.levels.iter().rev() {
        let m = level.m;
        if !level.residual.constant_term().is_one() {
            return Err(Error::InvalidInput(format!(
                "level {m}: residual must have constant term 1"
            )));
        }
        if level.residual.letters_present().iter().any(|&l| l >= m) {
            return Err(Error::InvalidInput(format!(
                "level {m}: residual must only involve strands below {m}"
            )));
        }
        let t = WeldedAuto::conjugation(rank, m, &level.residual)?;
        let mut acc = t.compose(&current)?;
        for (i, vector) in &level.coords {
            let mut u = RFElement::identity(rank);
            for (w, e) in vector {
                if !lyndon::is_lyndon(w)? || !w.contains(&m) || w.contains(i) {
                    return Err(Error::InvalidInput(format!(
                        "level {m}, strand {i}: bad coordinate word {w:?}"
                    )));
                }
                if w.iter().any(|&l| l > m) {
                    return Err(Error::InvalidInput(format!(
                        "level {m}, strand {i}: coordinate word {w:?} escapes the level"
                    )));
                }
                u = u.mul(&rfree::lyndon_word_element(rank, w)?.pow(e)?)?;
            }
            let c = WeldedAuto::conjugation(rank, *i, u.expansion())?;
            acc = c.compose(&acc)?;
        }
        current = acc;
    }
    Ok(current)
}
