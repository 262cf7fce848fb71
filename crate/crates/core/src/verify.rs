//! Self-checking harness: recomputes the rank formulas, relation families,
//! and graded structure of the basis-conjugating automorphism groups from
//! scratch, using exact integer linear algebra, and reports what it finds.
//!
//! Every check is a pure function returning a [`CheckReport`]; a failed
//! report always carries a concrete witness. The mutation checks evaluate a
//! deliberately wrong relation and pass exactly when the violation is
//! detected, so a passing suite certifies both the positive families and the
//! harness's power to refute.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{self, ReducedPoly};
use crate::autos::{artin, chi, WeldedAuto};
use crate::lyndon::Letter;
use crate::rfree::{self, RFElement};
use crate::rlie::{self, TangentialDerivation};

/// Outcome of one check: a stable name, the parameters it ran with, whether
/// it passed, and either the computed-vs-expected values or a counterexample.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub name: String,
    pub parameters: String,
    pub passed: bool,
    pub details: String,
}

impl CheckReport {
    fn new(name: &str, parameters: String, passed: bool, details: String) -> Self {
        CheckReport { name: name.to_string(), parameters, passed, details }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} ({}): {}",
            if self.passed { "ok" } else { "FAIL" },
            self.name,
            self.parameters,
            self.details
        )
    }
}

/// Which generating family a graded check runs over: the conjugation
/// generators `chi(i,j)`, or the braid generators `artin(i,j)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Chi,
    Artin,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Chi => write!(f, "chi"),
            Family::Artin => write!(f, "artin"),
        }
    }
}

/// A rectangular matrix of unbounded integers.
#[derive(Clone, Debug)]
pub struct IntMatrix {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(cols: usize) -> Self {
        IntMatrix { cols, rows: Vec::new() }
    }

    pub fn push_row(&mut self, row: Vec<BigInt>) {
        assert_eq!(row.len(), self.cols, "ragged row");
        self.rows.push(row);
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

/// Rank over the rationals, by fraction-free elimination: each incoming row
/// is reduced against the pivots by exact cross-multiplication, stripping the
/// content after every step so entries stay small. No divisions, no torsion
/// analysis — the modules measured here are free, so rational rank is the
/// whole story.
pub fn integer_matrix_rank(m: &IntMatrix) -> usize {
    let cols = m.cols;
    let mut pivot_at: Vec<Option<Vec<BigInt>>> = vec![None; cols];
    let mut rank = 0;
    for row in &m.rows {
        if rank == cols {
            break;
        }
        let mut r = row.clone();
        loop {
            let lead = match r.iter().position(|v| !v.is_zero()) {
                None => break,
                Some(p) => p,
            };
            match &pivot_at[lead] {
                Some(p) => {
                    let a = p[lead].clone();
                    let b = r[lead].clone();
                    for (rj, pj) in r.iter_mut().zip(p) {
                        *rj = &*rj * &a - pj * &b;
                    }
                    strip_content(&mut r);
                }
                None => {
                    strip_content(&mut r);
                    pivot_at[lead] = Some(r);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn strip_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v = &*v / &g;
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn commutes(a: &WeldedAuto, b: &WeldedAuto) -> bool {
    a.compose(b).unwrap() == b.compose(a).unwrap()
}

fn group_comm(a: &WeldedAuto, b: &WeldedAuto) -> WeldedAuto {
    a.compose(b)
        .unwrap()
        .compose(&a.inverse().unwrap())
        .unwrap()
        .compose(&b.inverse().unwrap())
        .unwrap()
}

/// All positive words of length 1..=max_len over `gens`, as `(product,
/// inverse, description)`, built incrementally so each word costs two
/// compositions.
fn positive_words(
    gens: &[(String, WeldedAuto, WeldedAuto)],
    max_len: usize,
) -> Vec<(WeldedAuto, WeldedAuto, String)> {
    let n = match gens.first() {
        None => return Vec::new(),
        Some((_, g, _)) => g.rank(),
    };
    let mut out = Vec::new();
    let mut frontier = vec![(
        WeldedAuto::identity(n),
        WeldedAuto::identity(n),
        String::new(),
    )];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, winv, label) in &frontier {
            for (name, g, ginv) in gens {
                let nw = w.compose(g).unwrap();
                let ninv = ginv.compose(winv).unwrap();
                let nlabel = if label.is_empty() {
                    name.clone()
                } else {
                    format!("{label} {name}")
                };
                next.push((nw, ninv, nlabel));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn chi_gen(i: Letter, j: Letter, n: usize) -> (String, WeldedAuto, WeldedAuto) {
    let g = chi(i, j, n).unwrap();
    let ginv = g.inverse().unwrap();
    (format!("chi({i},{j})"), g, ginv)
}

/// The commutation relations among the `chi(i,j)`:
/// `[chi(i,k) chi(j,k), chi(i,j)] = 1`, `[chi(i,k), chi(j,k)] = 1` for
/// pairwise distinct indices, and `[chi(i,j), chi(k,l)] = 1` for disjoint
/// pairs.
pub fn check_mccool(n: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut total = 0usize;
    let nl = n as Letter;
    for i in 1..=nl {
        for j in 1..=nl {
            for k in 1..=nl {
                if i == j || i == k || j == k {
                    continue;
                }
                total += 2;
                let cik = chi(i, k, n).unwrap();
                let cjk = chi(j, k, n).unwrap();
                let cij = chi(i, j, n).unwrap();
                if !commutes(&cik.compose(&cjk).unwrap(), &cij) {
                    failures.push(format!("[chi({i},{k})chi({j},{k}), chi({i},{j})] != 1"));
                }
                if !commutes(&cik, &cjk) {
                    failures.push(format!("[chi({i},{k}), chi({j},{k})] != 1"));
                }
                for l in 1..=nl {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    total += 1;
                    if !commutes(&cij, &chi(k, l, n).unwrap()) {
                        failures.push(format!("[chi({i},{j}), chi({k},{l})] != 1"));
                    }
                }
            }
        }
    }
    report("mccool", format!("n={n}"), total, failures)
}

/// The deliberately wrong relation `[chi(1,2), chi(1,3)] = 1` must be
/// refuted; the report passes when a witness is produced.
pub fn check_mccool_mutation(n: usize) -> CheckReport {
    let a = chi(1, 2, n).unwrap();
    let b = chi(1, 3, n).unwrap();
    let refuted = !commutes(&a, &b);
    CheckReport::new(
        "mccool_mutation",
        format!("n={n}"),
        refuted,
        if refuted {
            "the false relation [chi(1,2), chi(1,3)] = 1 was refuted: \
             the compositions in the two orders differ on strand 1"
                .to_string()
        } else {
            "MISSED: [chi(1,2), chi(1,3)] = 1 was not refuted".to_string()
        },
    )
}

/// The three conjugation-relation families, with `[a, w, b]` meaning
/// `[[a, w], b]` and `w` ranging over positive words in the `chi(m,k)`:
/// for every `m <= n` and `i, j < m` (`i != j`),
/// `[chi(m,i), w, chi(m,i)] = 1` and `[chi(i,m), w, chi(j,m)] = 1` with
/// `k < m` arbitrary, and `[chi(i,m), w, chi(m,i)] = 1` with `k != i`.
pub fn check_homotopy_relations(n: usize, max_w_len: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut total = 0usize;
    for m in 2..=n as Letter {
        let all_gens: Vec<_> = (1..m).map(|k| chi_gen(m, k, n)).collect();
        let heads: Vec<_> = (1..m)
            .map(|i| {
                let cmi = chi(m, i, n).unwrap();
                let cmi_inv = cmi.inverse().unwrap();
                let cim = chi(i, m, n).unwrap();
                let cim_inv = cim.inverse().unwrap();
                (cmi, cmi_inv, cim, cim_inv)
            })
            .collect();
        let mut words = positive_words(&all_gens, max_w_len);
        words.push((
            WeldedAuto::identity(n),
            WeldedAuto::identity(n),
            "1".to_string(),
        ));
        for (w, winv, label) in &words {
            for i in 1..m {
                let (cmi, cmi_inv, cim, cim_inv) = &heads[i as usize - 1];
                let inner = w
                    .compose(cmi_inv)
                    .unwrap()
                    .compose(winv)
                    .unwrap()
                    .compose(cmi)
                    .unwrap();
                total += 1;
                if !commutes(&inner, cmi) {
                    failures.push(format!("[chi({m},{i}), {label}, chi({m},{i})] != 1"));
                }
                let inner2 = cim
                    .compose(w)
                    .unwrap()
                    .compose(cim_inv)
                    .unwrap()
                    .compose(winv)
                    .unwrap();
                for j in 1..m {
                    if j == i {
                        continue;
                    }
                    total += 1;
                    if !commutes(&inner2, &heads[j as usize - 1].2) {
                        failures.push(format!("[chi({i},{m}), {label}, chi({j},{m})] != 1"));
                    }
                }
            }
        }
        for i in 1..m {
            let restricted: Vec<_> = (1..m)
                .filter(|&k| k != i)
                .map(|k| chi_gen(m, k, n))
                .collect();
            let mut words = positive_words(&restricted, max_w_len);
            words.push((
                WeldedAuto::identity(n),
                WeldedAuto::identity(n),
                "1".to_string(),
            ));
            let (cmi, _, cim, cim_inv) = &heads[i as usize - 1];
            for (w, winv, label) in &words {
                total += 1;
                let inner = cim
                    .compose(w)
                    .unwrap()
                    .compose(cim_inv)
                    .unwrap()
                    .compose(winv)
                    .unwrap();
                if !commutes(&inner, cmi) {
                    failures.push(format!("[chi({i},{m}), {label}, chi({m},{i})] != 1"));
                }
            }
        }
    }
    report(
        "homotopy_relations",
        format!("n={n}, max_w_len={max_w_len}"),
        total,
        failures,
    )
}

/// The second family with the head transposed — `[chi(m,i), w, chi(j,m)]`
/// in place of `[chi(i,m), w, chi(j,m)]` — is false: the instance
/// `[chi(4,1), chi(4,2), chi(3,4)] = 1` must be refuted. Requires `n >= 4`.
pub fn check_homotopy_mutation(n: usize) -> CheckReport {
    let head = chi(4, 1, n).unwrap();
    let w = chi(4, 2, n).unwrap();
    let tail = chi(3, 4, n).unwrap();
    let inner = group_comm(&head, &w);
    let refuted = !commutes(&inner, &tail);
    CheckReport::new(
        "homotopy_mutation",
        format!("n={n}"),
        refuted,
        if refuted {
            let witness = group_comm(&inner, &tail);
            format!(
                "the false relation [chi(4,1), chi(4,2), chi(3,4)] = 1 (second \
                 family with transposed head) was refuted: the triple commutator \
                 conjugates strand 3 by {}",
                witness.conjugator(3)
            )
        } else {
            "MISSED: [chi(4,1), chi(4,2), chi(3,4)] = 1 was not refuted".to_string()
        },
    )
}

/// The braid-quotient relations: each `artin(j,k)` commutes with its
/// conjugates by positive words in the `artin(i,k)`, `i < k`.
pub fn check_goldsmith(n: usize, max_w_len: usize) -> CheckReport {
    let mut failures = Vec::new();
    let mut total = 0usize;
    for k in 2..=n as Letter {
        let gens: Vec<_> = (1..k)
            .map(|i| {
                let g = artin(i, k, n).unwrap();
                let ginv = g.inverse().unwrap();
                (format!("artin({i},{k})"), g, ginv)
            })
            .collect();
        let words = positive_words(&gens, max_w_len);
        for j in 1..k {
            let a = &gens[j as usize - 1].1;
            for (w, winv, label) in &words {
                total += 1;
                let conj = winv.compose(a).unwrap().compose(w).unwrap();
                if !commutes(a, &conj) {
                    failures.push(format!(
                        "[artin({j},{k}), artin({j},{k})^({label})] != 1"
                    ));
                }
            }
        }
    }
    report(
        "goldsmith",
        format!("n={n}, max_w_len={max_w_len}"),
        total,
        failures,
    )
}

/// Braid generators at different levels need not commute:
/// `[artin(1,3), artin(2,3)] = 1` must be refuted.
pub fn check_goldsmith_mutation(n: usize) -> CheckReport {
    let a = artin(1, 3, n).unwrap();
    let b = artin(2, 3, n).unwrap();
    let refuted = !commutes(&a, &b);
    CheckReport::new(
        "goldsmith_mutation",
        format!("n={n}"),
        refuted,
        if refuted {
            "the false relation [artin(1,3), artin(2,3)] = 1 was refuted".to_string()
        } else {
            "MISSED: [artin(1,3), artin(2,3)] = 1 was not refuted".to_string()
        },
    )
}

/// Index of every degree-`k` square-free monomial, for building coefficient
/// rows.
fn monomial_index(n: usize, k: usize) -> Vec<algebra::Monomial> {
    algebra::square_free_monomials(n, k)
}

fn poly_row(p: &ReducedPoly, index: &[algebra::Monomial]) -> Vec<BigInt> {
    index.iter().map(|m| p.coeff(m)).collect()
}

/// All left-normed brackets `[y_{a1}, ..., y_{ak}]` over distinct letters,
/// expanded in the algebra.
fn left_normed_brackets(n: usize, k: usize) -> Vec<ReducedPoly> {
    let mut out = Vec::new();
    let mut tuple = Vec::new();
    build_tuples(n, k, &mut tuple, &mut out);
    out
}

fn build_tuples(n: usize, k: usize, tuple: &mut Vec<Letter>, out: &mut Vec<ReducedPoly>) {
    if tuple.len() == k {
        let mut acc = ReducedPoly::gen(n, tuple[0]).unwrap();
        for &l in &tuple[1..] {
            let y = ReducedPoly::gen(n, l).unwrap();
            acc = &(&acc * &y) - &(&y * &acc);
        }
        out.push(acc);
        return;
    }
    for l in 1..=n as Letter {
        if !tuple.contains(&l) {
            tuple.push(l);
            build_tuples(n, k, tuple, out);
            tuple.pop();
        }
    }
}

fn square_free_lyndon_words(n: usize, k: usize) -> Vec<crate::lyndon::Word> {
    crate::lyndon::enumerate_lyndon(n, k, true)
}

/// Rank of the degree-`k` part of the reduced free Lie ring on `n` letters:
/// the span of all left-normed distinct-letter brackets is computed by exact
/// elimination and compared with `(k−1)!·C(n,k)`; each bracket must peel to
/// Lyndon coordinates (spanning), and the Lyndon family itself must be
/// independent.
pub fn rank_rlie(n: usize, k: usize) -> CheckReport {
    let expected = if k >= 1 && k <= n {
        factorial(k - 1) * binomial(n, k)
    } else {
        0
    };
    let index = monomial_index(n, k);
    let brackets = left_normed_brackets(n, k);
    let mut m = IntMatrix::new(index.len().max(1));
    let mut peel_failures = 0usize;
    for b in &brackets {
        if rlie::to_lyndon_coordinates(b).is_err() {
            peel_failures += 1;
        }
        m.push_row(poly_row(b, &index));
    }
    let rank = integer_matrix_rank(&m);
    let mut lyndon_matrix = IntMatrix::new(index.len().max(1));
    let basis = square_free_lyndon_words(n, k);
    for w in &basis {
        let p = rlie::lyndon_expansion(n, w).unwrap();
        lyndon_matrix.push_row(poly_row(p.as_poly(), &index));
    }
    let lyndon_rank = integer_matrix_rank(&lyndon_matrix);
    let passed = rank == expected && lyndon_rank == basis.len() && peel_failures == 0
        && basis.len() == expected;
    CheckReport::new(
        "rank_rlie",
        format!("n={n}, k={k}"),
        passed,
        format!(
            "bracket span rank {rank}, expected {expected}; {} Lyndon words \
             independent of rank {lyndon_rank}; {} of {} brackets peel cleanly",
            basis.len(),
            brackets.len() - peel_failures,
            brackets.len()
        ),
    )
}

/// Left-normed `depth`-fold commutators of the given generator set, one
/// level at a time (level 1 is the generators themselves).
fn commutator_levels(gens: &[WeldedAuto], depth: usize) -> Vec<Vec<WeldedAuto>> {
    let mut levels = vec![gens.to_vec()];
    for _ in 1..depth {
        let prev = levels.last().unwrap();
        let mut next = Vec::with_capacity(prev.len() * gens.len());
        for a in prev {
            let ainv = a.inverse().unwrap();
            for g in gens {
                let c = a
                    .compose(g)
                    .unwrap()
                    .compose(&ainv)
                    .unwrap()
                    .compose(&g.inverse().unwrap())
                    .unwrap();
                next.push(c);
            }
        }
        levels.push(next);
    }
    levels
}

fn family_generators(family: Family, n: usize) -> Vec<WeldedAuto> {
    let nl = n as Letter;
    match family {
        Family::Chi => {
            let mut gens = Vec::new();
            for i in 1..=nl {
                for j in 1..=nl {
                    if i != j {
                        gens.push(chi(i, j, n).unwrap());
                    }
                }
            }
            gens
        }
        Family::Artin => {
            let mut gens = Vec::new();
            for i in 1..=nl {
                for j in i + 1..=nl {
                    gens.push(artin(i, j, n).unwrap());
                }
            }
            gens
        }
    }
}

/// Concatenated coefficient row of the degree-`k` slices of all conjugators
/// — the lowest-degree data of a pure automorphism of that degree.
fn johnson_row(a: &WeldedAuto, k: usize, index: &[algebra::Monomial]) -> Vec<BigInt> {
    let n = a.rank();
    let one = ReducedPoly::one(n);
    let mut row = Vec::with_capacity(n * index.len());
    for i in 1..=n as Letter {
        let slice = (a.conjugator(i) - &one).homogeneous_part(k);
        row.extend(poly_row(&slice, index));
    }
    row
}

/// Rank of the degree-`k` Johnson images of all left-normed `k`-fold
/// commutators of the family's generators; `Ok` only when every commutator
/// has degree at least `k`.
fn johnson_span_rank(family: Family, n: usize, k: usize) -> (usize, usize, Vec<String>) {
    let gens = family_generators(family, n);
    let levels = commutator_levels(&gens, k);
    let index = monomial_index(n, k);
    let mut m = IntMatrix::new((n * index.len()).max(1));
    let mut degree_failures = Vec::new();
    let mut rows = 0usize;
    for a in levels.last().unwrap() {
        match a.andreadakis_degree().unwrap() {
            None => {}
            Some(d) if d < k => {
                degree_failures.push(format!(
                    "a {k}-fold commutator has degree {d} < {k}"
                ));
            }
            Some(d) if d == k => {
                m.push_row(johnson_row(a, k, &index));
                rows += 1;
            }
            Some(_) => {}
        }
    }
    (integer_matrix_rank(&m), rows, degree_failures)
}

/// Rank of the degree-`k` tangential derivations: computed as `n` times the
/// bracket-span rank of the reduced free Lie ring on `n−1` letters in degree
/// `k`, cross-checked against the Johnson images of `k`-fold commutators of
/// the `chi` generators, and compared with `n·(k−1)!·C(n−1,k)`.
pub fn rank_der_tau(n: usize, k: usize) -> CheckReport {
    let expected = if k >= 1 && k < n {
        n * factorial(k - 1) * binomial(n - 1, k)
    } else {
        0
    };
    let index = monomial_index(n - 1, k);
    let mut m = IntMatrix::new(index.len().max(1));
    for b in left_normed_brackets(n - 1, k) {
        m.push_row(poly_row(&b, &index));
    }
    let computed = n * integer_matrix_rank(&m);
    let (johnson, rows, degree_failures) = johnson_span_rank(Family::Chi, n, k);
    let passed = computed == expected && johnson == expected && degree_failures.is_empty();
    CheckReport::new(
        "rank_der_tau",
        format!("n={n}, k={k}"),
        passed,
        format!(
            "n × (Lie rank on {} letters) = {computed}; Johnson span of {rows} \
             commutator images = {johnson}; expected {expected}{}",
            n - 1,
            if degree_failures.is_empty() {
                String::new()
            } else {
                format!("; {}", degree_failures.join("; "))
            }
        ),
    )
}

/// Hirsch rank (sum of graded ranks) of the chosen family's group, computed
/// from the exact degree-wise Lie ranks and compared with the closed
/// formula: `Σ_{k=1}^{n−1} n!/((n−k−1)!·k)` for the conjugation family, and
/// `Σ_{k=1}^{n−1} (k−1)!·C(n,k+1)` for the braid family (equivalently the
/// telescoping sum of reduced-free-group Hirsch ranks).
pub fn hirsch(n: usize, family: Family) -> CheckReport {
    let lie_rank = |letters: usize, k: usize| -> usize {
        let index = monomial_index(letters, k);
        let mut m = IntMatrix::new(index.len().max(1));
        for b in left_normed_brackets(letters, k) {
            m.push_row(poly_row(&b, &index));
        }
        integer_matrix_rank(&m)
    };
    let (computed, formula, breakdown) = match family {
        Family::Chi => {
            let mut total = 0usize;
            let mut parts = Vec::new();
            for k in 1..n {
                let g = n * lie_rank(n - 1, k);
                parts.push(format!("deg {k}: {g}"));
                total += g;
            }
            let formula: usize = (1..n)
                .map(|k| factorial(n) / (factorial(n - k - 1) * k))
                .sum();
            (total, formula, parts.join(", "))
        }
        Family::Artin => {
            let mut total = 1usize;
            let mut parts = vec!["level 2: 1".to_string()];
            for m in 2..n {
                let h: usize = (1..=m).map(|k| lie_rank(m, k)).sum();
                parts.push(format!("free part on {m} strands: {h}"));
                total += h;
            }
            let formula: usize = (1..n)
                .map(|k| factorial(k - 1) * binomial(n, k + 1))
                .sum();
            (total, formula, parts.join(", "))
        }
    };
    CheckReport::new(
        "hirsch",
        format!("n={n}, family={family}"),
        computed == formula,
        format!("graded sum {computed} vs closed formula {formula} ({breakdown})"),
    )
}

/// The center of the reduced free group: the `(n−1)!` degree-`n` Lyndon
/// monomials, realized as group commutator words, must commute with every
/// generator, and their expansions must be linearly independent.
pub fn center_check(n: usize) -> CheckReport {
    let basis = square_free_lyndon_words(n, n);
    let expected = factorial(n - 1);
    let mut failures = Vec::new();
    let index = monomial_index(n, n);
    let mut m = IntMatrix::new(index.len().max(1));
    for w in &basis {
        let g = rfree::lyndon_word_element(n, w).unwrap();
        for i in 1..=n as Letter {
            let xi = RFElement::gen(n, i).unwrap();
            if g.mul(&xi).unwrap() != xi.mul(&g).unwrap() {
                failures.push(format!("{w:?} does not commute with x{i}"));
            }
        }
        if !g.is_central() {
            failures.push(format!("{w:?} fails the filtration test for centrality"));
        }
        let defect = g.expansion() - &ReducedPoly::one(n);
        m.push_row(poly_row(&defect.homogeneous_part(n), &index));
    }
    let rank = integer_matrix_rank(&m);
    let passed = failures.is_empty() && rank == expected && basis.len() == expected;
    CheckReport::new(
        "center",
        format!("n={n}"),
        passed,
        if failures.is_empty() {
            format!(
                "{} central elements, independent of rank {rank}, expected {expected}",
                basis.len()
            )
        } else {
            failures.join("; ")
        },
    )
}

/// Graded Andreadakis comparison in degree `k`: every `k`-fold commutator of
/// the family's generators moves the filtration by at least `k`, and the
/// degree-`k` Johnson images span the full module of that degree —
/// `n·(k−1)!·C(n−1,k)` for the conjugation family, `(k−1)!·C(n,k+1)` for the
/// braid family.
pub fn graded_andreadakis_check(n: usize, k: usize, family: Family) -> CheckReport {
    let expected = match family {
        Family::Chi => n * factorial(k - 1) * binomial(n - 1, k),
        Family::Artin => factorial(k - 1) * binomial(n, k + 1),
    };
    let (rank, rows, degree_failures) = johnson_span_rank(family, n, k);
    let passed = degree_failures.is_empty() && rank == expected;
    CheckReport::new(
        "graded_andreadakis",
        format!("n={n}, k={k}, family={family}"),
        passed,
        format!(
            "Johnson images of {rows} degree-{k} commutators span rank {rank}, \
             expected {expected}{}",
            if degree_failures.is_empty() {
                String::new()
            } else {
                format!("; {}", degree_failures.join("; "))
            }
        ),
    )
}

fn elementary(n: usize, i: Letter, j: Letter) -> TangentialDerivation {
    TangentialDerivation::elementary(n, i, j).unwrap()
}

fn der_add(a: &TangentialDerivation, b: &TangentialDerivation) -> TangentialDerivation {
    let tangents = (1..=a.rank() as Letter)
        .map(|i| a.tangent(i).add(b.tangent(i)).unwrap())
        .collect();
    TangentialDerivation::new(tangents).unwrap()
}

/// Left-normed multilinear brackets `[d_{m,k1}, d_{m,k2}, ...]` over the
/// given letters, of each length in `1..=max_len`.
fn linear_monomials(
    n: usize,
    m: Letter,
    allowed: &[Letter],
    max_len: usize,
) -> Vec<(TangentialDerivation, String)> {
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<Letter>, TangentialDerivation)> = allowed
        .iter()
        .map(|&k| (vec![k], elementary(n, m, k)))
        .collect();
    for (ks, d) in &stack {
        out.push((d.clone(), format!("d({m};{ks:?})")));
    }
    for _ in 1..max_len {
        let mut next = Vec::new();
        for (ks, d) in &stack {
            for &k in allowed {
                if ks.contains(&k) {
                    continue;
                }
                let nd = d.bracket(&elementary(n, m, k)).unwrap();
                let mut nks = ks.clone();
                nks.push(k);
                out.push((nd.clone(), format!("d({m};{nks:?})")));
                next.push((nks, nd));
            }
        }
        stack = next;
    }
    out
}

/// Relations of the graded Lie rings, checked on actual tangential
/// derivations. For the conjugation family: the linearized commutation
/// relations `[d_ik + d_jk, d_ij] = 0`, `[d_ik, d_jk] = 0`, disjoint
/// commutation, and — for each `m`, with `t` running over multilinear
/// brackets in the `d_mk` (`k < m`) — `[[d_mi,t],d_mi]`, `[[d_im,t],d_jm]`,
/// `[[d_im,t],d_mi]` (the last with `k != i`), together with the same
/// families in the nested shape `[d_im,[d_mi,t]]`, `[d_im,[d_jm,t]]`. For
/// the braid family: `t_ij := ` Johnson image of `artin(i,j)` satisfies
/// `[t_ij, t_ik + t_kj] = 0`, disjoint commutation, and brackets of the
/// `t_im` with a repeated generator vanish.
pub fn check_lie_presentations(n: usize) -> CheckReport {
    let nl = n as Letter;
    let mut failures = Vec::new();
    let mut total = 0usize;

    for i in 1..=nl {
        for j in 1..=nl {
            for k in 1..=nl {
                if i == j || i == k || j == k {
                    continue;
                }
                total += 2;
                let sum = der_add(&elementary(n, i, k), &elementary(n, j, k));
                if !sum.bracket(&elementary(n, i, j)).unwrap().is_zero() {
                    failures.push(format!("[d({i},{k}) + d({j},{k}), d({i},{j})] != 0"));
                }
                if !elementary(n, i, k)
                    .bracket(&elementary(n, j, k))
                    .unwrap()
                    .is_zero()
                {
                    failures.push(format!("[d({i},{k}), d({j},{k})] != 0"));
                }
                for l in 1..=nl {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    total += 1;
                    if !elementary(n, i, j)
                        .bracket(&elementary(n, k, l))
                        .unwrap()
                        .is_zero()
                    {
                        failures.push(format!("[d({i},{j}), d({k},{l})] != 0"));
                    }
                }
            }
        }
    }

    for m in 2..=nl {
        let all: Vec<Letter> = (1..m).collect();
        let ts = linear_monomials(n, m, &all, m as usize);
        for (t, label) in &ts {
            for i in 1..m {
                let dmi = elementary(n, m, i);
                let dim = elementary(n, i, m);
                total += 2;
                if !dmi.bracket(t).unwrap().bracket(&dmi).unwrap().is_zero() {
                    failures.push(format!("[[d({m},{i}), {label}], d({m},{i})] != 0"));
                }
                if !dim.bracket(&dmi.bracket(t).unwrap()).unwrap().is_zero() {
                    failures.push(format!("[d({i},{m}), [d({m},{i}), {label}]] != 0"));
                }
                for j in 1..m {
                    if j == i {
                        continue;
                    }
                    let djm = elementary(n, j, m);
                    total += 2;
                    if !dim.bracket(t).unwrap().bracket(&djm).unwrap().is_zero() {
                        failures.push(format!("[[d({i},{m}), {label}], d({j},{m})] != 0"));
                    }
                    if !dim.bracket(&djm.bracket(t).unwrap()).unwrap().is_zero() {
                        failures.push(format!("[d({i},{m}), [d({j},{m}), {label}]] != 0"));
                    }
                }
            }
        }
        for i in 1..m {
            let restricted: Vec<Letter> = (1..m).filter(|&k| k != i).collect();
            let dim = elementary(n, i, m);
            let dmi = elementary(n, m, i);
            for (t, label) in &linear_monomials(n, m, &restricted, m as usize) {
                total += 1;
                if !dim.bracket(t).unwrap().bracket(&dmi).unwrap().is_zero() {
                    failures.push(format!("[[d({i},{m}), {label}], d({m},{i})] != 0"));
                }
            }
        }
    }

    let t_of = |i: Letter, j: Letter| -> TangentialDerivation {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        artin(lo, hi, n).unwrap().johnson().unwrap().unwrap().1
    };
    for i in 1..=nl {
        for j in 1..=nl {
            if i == j {
                continue;
            }
            for k in 1..=nl {
                if k == i || k == j {
                    continue;
                }
                total += 1;
                let sum = der_add(&t_of(i, k), &t_of(k, j));
                if !t_of(i, j).bracket(&sum).unwrap().is_zero() {
                    failures.push(format!("[t({i},{j}), t({i},{k}) + t({k},{j})] != 0"));
                }
                for l in 1..=nl {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    total += 1;
                    if !t_of(i, j).bracket(&t_of(k, l)).unwrap().is_zero() {
                        failures.push(format!("[t({i},{j}), t({k},{l})] != 0"));
                    }
                }
            }
        }
    }
    for m in 2..=nl {
        for a in 1..m {
            for b in 1..m {
                for c in 1..m {
                    if !(a == b || a == c || b == c) {
                        continue;
                    }
                    total += 1;
                    let mono = t_of(a, m)
                        .bracket(&t_of(b, m))
                        .unwrap()
                        .bracket(&t_of(c, m))
                        .unwrap();
                    if !mono.is_zero() {
                        failures.push(format!(
                            "[[t({a},{m}), t({b},{m})], t({c},{m})] != 0 (repeated strand)"
                        ));
                    }
                }
            }
        }
    }

    report("lie_presentations", format!("n={n}"), total, failures)
}

/// The perturbed relation `[d(1,2), d(1,3)] = 0` must be refuted: the
/// bracket has tangent `[y2, y3]` on strand 1.
pub fn check_lie_mutation(n: usize) -> CheckReport {
    let b = elementary(n, 1, 2).bracket(&elementary(n, 1, 3)).unwrap();
    let refuted = !b.is_zero();
    CheckReport::new(
        "lie_mutation",
        format!("n={n}"),
        refuted,
        if refuted {
            format!(
                "the false relation [d(1,2), d(1,3)] = 0 was refuted: strand-1 \
                 tangent is {}",
                b.tangent(1)
            )
        } else {
            "MISSED: [d(1,2), d(1,3)] = 0 was not refuted".to_string()
        },
    )
}

/// Random pure automorphisms survive a round trip through the combing normal
/// form, and normal-form equality agrees with automorphism equality.
pub fn check_comb_roundtrip(n: usize, count: usize, max_len: usize, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut previous: Option<(WeldedAuto, crate::autos::NormalForm)> = None;
    for t in 0..count {
        let mut word = Vec::new();
        let mut a = WeldedAuto::identity(n);
        for _ in 0..rng.gen_range(1..=max_len) {
            let i = rng.gen_range(1..=n as Letter);
            let mut j = rng.gen_range(1..=n as Letter);
            while j == i {
                j = rng.gen_range(1..=n as Letter);
            }
            let invert = rng.gen_bool(0.3);
            word.push(format!("chi({i},{j}){}", if invert { "^-1" } else { "" }));
            let g = chi(i, j, n).unwrap();
            let g = if invert { g.inverse().unwrap() } else { g };
            a = a.compose(&g).unwrap();
        }
        let nf = match a.comb() {
            Ok(nf) => nf,
            Err(e) => {
                failures.push(format!("comb failed on {}: {e}", word.join(" ")));
                continue;
            }
        };
        match crate::autos::uncomb(&nf) {
            Ok(b) if b == a => {}
            Ok(_) => failures.push(format!("round trip changed {}", word.join(" "))),
            Err(e) => failures.push(format!("uncomb failed on {}: {e}", word.join(" "))),
        }
        if let Some((pa, pnf)) = &previous {
            if (&a == pa) != (&nf == pnf) {
                failures.push(format!(
                    "normal-form equality disagrees with automorphism equality at sample {t}"
                ));
            }
        }
        previous = Some((a, nf));
    }
    report(
        "comb_roundtrip",
        format!("n={n}, count={count}, max_len={max_len}, seed={seed}"),
        count,
        failures,
    )
}

fn report(name: &str, parameters: String, total: usize, failures: Vec<String>) -> CheckReport {
    let passed = failures.is_empty();
    let details = if passed {
        format!("checked {total} instances, all hold")
    } else {
        let shown: Vec<_> = failures.iter().take(3).cloned().collect();
        format!(
            "{} of {total} instances failed; e.g. {}",
            failures.len(),
            shown.join("; ")
        )
    };
    CheckReport::new(name, parameters, passed, details)
}

/// The desk-scale suite: rank tables, Hirsch ranks, centers, the three
/// presentation families with their mutation controls, graded Andreadakis
/// comparisons, Lie presentations, and a seeded combing round-trip.
pub fn run_all(seed: u64) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for n in 2..=5 {
        for k in 1..=n {
            reports.push(rank_rlie(n, k));
        }
    }
    for n in 2..=4 {
        for k in 1..n {
            reports.push(rank_der_tau(n, k));
        }
    }
    for n in 2..=5 {
        reports.push(hirsch(n, Family::Chi));
        reports.push(hirsch(n, Family::Artin));
    }
    for n in 2..=4 {
        reports.push(center_check(n));
    }
    for n in 3..=5 {
        reports.push(check_mccool(n));
    }
    reports.push(check_mccool_mutation(3));
    for n in 3..=5 {
        reports.push(check_homotopy_relations(n, 3));
    }
    reports.push(check_homotopy_mutation(4));
    for n in 3..=5 {
        reports.push(check_goldsmith(n, 3));
    }
    reports.push(check_goldsmith_mutation(3));
    for n in 3..=4 {
        for k in 1..n {
            reports.push(graded_andreadakis_check(n, k, Family::Chi));
            reports.push(graded_andreadakis_check(n, k, Family::Artin));
        }
    }
    for n in 3..=4 {
        reports.push(check_lie_presentations(n));
    }
    reports.push(check_lie_mutation(3));
    reports.push(check_comb_roundtrip(4, 25, 8, seed));
    reports
}
