//! Lyndon words over the alphabet `{1, …, n}` with integer order: predicates,
//! the standard factorization, Duval's factorization into non-increasing
//! Lyndon factors, enumeration, and standard bracketing trees.

use crate::{Error, Result};

/// Generator index, 1-based.
pub type Letter = u8;

/// A word over the alphabet of generator indices. Comparison is dictionary
/// order with a proper prefix smaller than its extensions (`Vec`'s `Ord`).
pub type Word = Vec<Letter>;

/// Is `w` strictly smaller than every nonempty proper suffix of itself?
pub fn is_lyndon(w: &[Letter]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::InvalidInput("empty word".into()));
    }
    Ok((1..w.len()).all(|i| w < &w[i..]))
}

/// Split `w` (length ≥ 2) as `(u, v)` where `v` is the smallest proper
/// suffix. When `w` is Lyndon both halves are Lyndon again.
pub fn standard_factorization(w: &[Letter]) -> Result<(Word, Word)> {
    if w.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "standard factorization needs length >= 2, got {}",
            w.len()
        )));
    }
    let split = (1..w.len())
        .min_by(|&a, &b| w[a..].cmp(&w[b..]))
        .expect("length >= 2");
    Ok((w[..split].to_vec(), w[split..].to_vec()))
}

/// Duval's linear scan: the unique factorization of `w` into a non-increasing
/// sequence of Lyndon words.
pub fn lyndon_factorization(w: &[Letter]) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::InvalidInput("empty word".into()));
    }
    let n = w.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            factors.push(w[i..i + period].to_vec());
            i += period;
        }
    }
    Ok(factors)
}

/// All Lyndon words of length exactly `k` over `{1..n}`, in ascending
/// dictionary order; `square_free` restricts to pairwise-distinct letters
/// (count `(k-1)! * C(n,k)`).
pub fn enumerate_lyndon(n: usize, k: usize, square_free: bool) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || k == 0 || n > Letter::MAX as usize {
        return out;
    }
    if square_free && k > n {
        return out;
    }
    // Duval's generation: visits every Lyndon word of length <= k in
    // ascending order.
    let mut w: Word = vec![1];
    loop {
        if w.len() == k && (!square_free || all_distinct(&w)) {
            out.push(w.clone());
        }
        let len = w.len();
        let mut next: Word = (0..k).map(|idx| w[idx % len]).collect();
        while next.last().copied() == Some(n as Letter) {
            next.pop();
        }
        match next.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
        w = next;
    }
    out
}

fn all_distinct(w: &[Letter]) -> bool {
    let mut seen = [false; 256];
    w.iter().all(|&l| !std::mem::replace(&mut seen[l as usize], true))
}

/// Bracketing tree of a Lyndon word: leaves are letters, nodes split at the
/// smallest proper suffix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LyndonTree {
    Leaf(Letter),
    Node(Box<LyndonTree>, Box<LyndonTree>),
}

impl LyndonTree {
    /// The word read off the leaves, left to right.
    pub fn frontier(&self) -> Word {
        match self {
            LyndonTree::Leaf(l) => vec![*l],
            LyndonTree::Node(left, right) => {
                let mut w = left.frontier();
                w.extend(right.frontier());
                w
            }
        }
    }
}

/// Recursive standard factorization of a Lyndon word as a [`LyndonTree`].
pub fn bracketing(w: &[Letter]) -> Result<LyndonTree> {
    if !is_lyndon(w)? {
        return Err(Error::InvalidInput(format!("not a Lyndon word: {w:?}")));
    }
    if w.len() == 1 {
        return Ok(LyndonTree::Leaf(w[0]));
    }
    let (u, v) = standard_factorization(w)?;
    Ok(LyndonTree::Node(
        Box::new(bracketing(&u)?),
        Box::new(bracketing(&v)?),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyndon_predicate_small_cases() {
        assert!(is_lyndon(&[1, 2]).unwrap());
        assert!(!is_lyndon(&[2, 1]).unwrap());
        assert!(!is_lyndon(&[1, 1]).unwrap());
        assert!(is_lyndon(&[1]).unwrap());
        assert!(is_lyndon(&[1, 1, 2]).unwrap());
        assert!(is_lyndon(&[1, 3, 2]).unwrap());
        assert!(is_lyndon(&[]).is_err());
    }

    // Independent characterization: a word is Lyndon iff it is strictly
    // smaller than every nontrivial rotation of itself.
    fn is_lyndon_rotation_oracle(w: &[Letter]) -> bool {
        (1..w.len()).all(|i| {
            let mut rot = w[i..].to_vec();
            rot.extend_from_slice(&w[..i]);
            w < rot.as_slice()
        })
    }

    fn words(alphabet: Letter, len: usize) -> Vec<Word> {
        let mut out: Vec<Word> = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=alphabet).map(move |l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn lyndon_predicate_matches_rotation_oracle() {
        for len in 1..=7 {
            for w in words(3, len) {
                assert_eq!(
                    is_lyndon(&w).unwrap(),
                    is_lyndon_rotation_oracle(&w),
                    "disagreement on {w:?}"
                );
            }
        }
    }

    #[test]
    fn standard_factorization_examples() {
        assert_eq!(
            standard_factorization(&[1, 2]).unwrap(),
            (vec![1], vec![2])
        );
        assert_eq!(
            standard_factorization(&[1, 1, 2, 1, 2]).unwrap(),
            (vec![1, 1, 2], vec![1, 2])
        );
        assert_eq!(
            standard_factorization(&[1, 1, 2]).unwrap(),
            (vec![1], vec![1, 2])
        );
        assert!(standard_factorization(&[1]).is_err());
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(
            lyndon_factorization(&[2, 1, 2]).unwrap(),
            vec![vec![2], vec![1, 2]]
        );
        assert_eq!(lyndon_factorization(&[1, 2, 3]).unwrap(), vec![vec![1, 2, 3]]);
        assert_eq!(
            lyndon_factorization(&[3, 2, 1]).unwrap(),
            vec![vec![3], vec![2], vec![1]]
        );
        assert!(lyndon_factorization(&[]).is_err());
    }

    // Brute-force oracle: enumerate every factorization into non-increasing
    // Lyndon factors. There must be exactly one, and Duval must find it.
    fn all_nonincreasing_factorizations(w: &[Letter], bound: Option<&[Letter]>) -> Vec<Vec<Word>> {
        if w.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for cut in 1..=w.len() {
            let head = &w[..cut];
            if !is_lyndon_rotation_oracle(head) {
                continue;
            }
            if let Some(b) = bound {
                if head > b {
                    continue;
                }
            }
            for mut tail in all_nonincreasing_factorizations(&w[cut..], Some(head)) {
                let mut f = vec![head.to_vec()];
                f.append(&mut tail);
                out.push(f);
            }
        }
        out
    }

    #[test]
    fn duval_matches_exhaustive_factorization_oracle() {
        for len in 1..=6 {
            for w in words(3, len) {
                let all = all_nonincreasing_factorizations(&w, None);
                assert_eq!(all.len(), 1, "factorization of {w:?} is not unique: {all:?}");
                assert_eq!(lyndon_factorization(&w).unwrap(), all[0], "on {w:?}");
            }
        }
    }

    #[test]
    fn factorization_is_nonincreasing_and_concatenates() {
        for len in 1..=7 {
            for w in words(3, len) {
                let f = lyndon_factorization(&w).unwrap();
                let glued: Word = f.iter().flatten().copied().collect();
                assert_eq!(glued, w);
                for pair in f.windows(2) {
                    assert!(pair[0] >= pair[1], "increasing factors on {w:?}: {f:?}");
                }
                for factor in &f {
                    assert!(is_lyndon(factor).unwrap());
                }
            }
        }
    }

    #[test]
    fn product_of_lyndon_words_is_lyndon_iff_increasing() {
        for total in 2..=6 {
            for ulen in 1..total {
                for u in words(3, ulen) {
                    if !is_lyndon(&u).unwrap() {
                        continue;
                    }
                    for v in words(3, total - ulen) {
                        if !is_lyndon(&v).unwrap() {
                            continue;
                        }
                        let mut uv = u.clone();
                        uv.extend_from_slice(&v);
                        assert_eq!(
                            is_lyndon(&uv).unwrap(),
                            u < v,
                            "u={u:?} v={v:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_examples_and_counts() {
        assert_eq!(
            enumerate_lyndon(3, 3, true),
            vec![vec![1, 2, 3], vec![1, 3, 2]]
        );
        assert_eq!(enumerate_lyndon(2, 2, false), vec![vec![1, 2]]);
        assert_eq!(
            enumerate_lyndon(3, 1, true),
            vec![vec![1], vec![2], vec![3]]
        );
        assert!(enumerate_lyndon(2, 3, true).is_empty());

        fn factorial(m: usize) -> usize {
            (1..=m).product()
        }
        fn choose(n: usize, k: usize) -> usize {
            factorial(n) / (factorial(k) * factorial(n - k))
        }
        for n in 1..=6 {
            for k in 1..=n {
                let got = enumerate_lyndon(n, k, true);
                assert_eq!(got.len(), factorial(k - 1) * choose(n, k), "n={n} k={k}");
                assert!(got.windows(2).all(|p| p[0] < p[1]), "unsorted for n={n} k={k}");
                for w in &got {
                    assert!(is_lyndon(w).unwrap());
                    assert!(all_distinct(w));
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_filtering_all_words() {
        for n in 1..=3 {
            for k in 1..=5 {
                let expected: Vec<Word> = words(n as Letter, k)
                    .into_iter()
                    .filter(|w| is_lyndon_rotation_oracle(w))
                    .collect();
                assert_eq!(enumerate_lyndon(n, k, false), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn bracketing_examples() {
        use LyndonTree::*;
        assert_eq!(
            bracketing(&[1, 2]).unwrap(),
            Node(Box::new(Leaf(1)), Box::new(Leaf(2)))
        );
        assert_eq!(
            bracketing(&[1, 2, 3]).unwrap(),
            Node(
                Box::new(Leaf(1)),
                Box::new(Node(Box::new(Leaf(2)), Box::new(Leaf(3))))
            )
        );
        assert_eq!(
            bracketing(&[1, 3, 2]).unwrap(),
            Node(
                Box::new(Node(Box::new(Leaf(1)), Box::new(Leaf(3)))),
                Box::new(Leaf(2))
            )
        );
        assert!(bracketing(&[2, 1]).is_err());
    }

    #[test]
    fn bracketing_frontier_roundtrip() {
        for k in 1..=6 {
            for w in enumerate_lyndon(3, k, false) {
                assert_eq!(bracketing(&w).unwrap().frontier(), w);
            }
        }
    }
}
