//! The token grammar: whitespace-separated generator tokens, evaluated
//! left-to-right as a product. Lowercase is the generator, uppercase its
//! inverse; `r` has no uppercase form because it is an involution.
//!
//! `x<i>`            letter of the reduced free group
//! `c<i>.<j>`        conjugating generator: x_i ↦ x_j⁻¹ x_i x_j
//! `s<i>`            braid generator crossing strands i, i+1
//! `r<i>`            strand swap i ↔ i+1
//! `a<i>.<j>`        braid of strands i < j

use loopbraid::autos::{artin, chi, rho, sigma};
use loopbraid::{Letter, RFElement, WeldedAuto};
use num_bigint::BigInt;

#[derive(Debug)]
pub struct ParseFailure(pub String);

fn fail<T>(msg: impl Into<String>) -> Result<T, ParseFailure> {
    Err(ParseFailure(msg.into()))
}

fn split_indices(tok: &str) -> Result<(Letter, Option<Letter>), ParseFailure> {
    let body = &tok[1..];
    if body.is_empty() {
        return fail(format!("token `{tok}` is missing its index"));
    }
    let parse_one = |s: &str| -> Result<Letter, ParseFailure> {
        match s.parse::<Letter>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => fail(format!("token `{tok}` has a malformed index `{s}`")),
        }
    };
    match body.split_once('.') {
        None => Ok((parse_one(body)?, None)),
        Some((a, b)) => Ok((parse_one(a)?, Some(parse_one(b)?))),
    }
}

fn single_index(tok: &str) -> Result<Letter, ParseFailure> {
    match split_indices(tok)? {
        (i, None) => Ok(i),
        _ => fail(format!("token `{tok}` takes one index, not two")),
    }
}

fn pair_index(tok: &str) -> Result<(Letter, Letter), ParseFailure> {
    match split_indices(tok)? {
        (i, Some(j)) => Ok((i, j)),
        _ => fail(format!("token `{tok}` needs two indices as <i>.<j>")),
    }
}

/// A word in the reduced free group: `x`/`X` tokens only.
pub fn parse_group_word(input: &str, n: usize) -> Result<RFElement, ParseFailure> {
    let mut acc = RFElement::identity(n);
    let minus_one = BigInt::from(-1);
    for tok in input.split_whitespace() {
        let rest = match tok.chars().next() {
            Some('x') => RFElement::gen(n, single_index(tok)?),
            Some('X') => {
                RFElement::gen(n, single_index(tok)?).and_then(|g| g.pow(&minus_one))
            }
            _ => return fail(format!(
                "token `{tok}`: group words use x<i> / X<i> only"
            )),
        };
        match rest {
            Ok(g) => acc = acc.mul(&g).map_err(|e| ParseFailure(e.to_string()))?,
            Err(e) => return fail(format!("token `{tok}`: {e}")),
        }
    }
    Ok(acc)
}

/// A word in the automorphism group: `c`/`s`/`r`/`a` tokens and their
/// uppercase inverses.
pub fn parse_auto_word(input: &str, n: usize) -> Result<WeldedAuto, ParseFailure> {
    let mut acc = WeldedAuto::identity(n);
    for tok in input.split_whitespace() {
        let (gen, invert) = match tok.chars().next() {
            Some('c') => {
                let (i, j) = pair_index(tok)?;
                (chi(i, j, n), false)
            }
            Some('C') => {
                let (i, j) = pair_index(tok)?;
                (chi(i, j, n), true)
            }
            Some('s') => (sigma(single_index(tok)?, n), false),
            Some('S') => (sigma(single_index(tok)?, n), true),
            Some('r') => (rho(single_index(tok)?, n), false),
            Some('R') => {
                return fail(format!(
                    "token `{tok}`: `r<i>` is its own inverse; there is no R"
                ))
            }
            Some('a') => {
                let (i, j) = pair_index(tok)?;
                (artin(i, j, n), false)
            }
            Some('A') => {
                let (i, j) = pair_index(tok)?;
                (artin(i, j, n), true)
            }
            Some('x') | Some('X') => {
                return fail(format!(
                    "token `{tok}`: x letters form group words, not automorphisms"
                ))
            }
            _ => return fail(format!("unrecognized token `{tok}`")),
        };
        let gen = gen.map_err(|e| ParseFailure(format!("token `{tok}`: {e}")))?;
        let gen = if invert {
            gen.inverse().map_err(|e| ParseFailure(e.to_string()))?
        } else {
            gen
        };
        acc = acc.compose(&gen).map_err(|e| ParseFailure(e.to_string()))?;
    }
    Ok(acc)
}

/// A comma-separated index list like `2,3`.
pub fn parse_index_list(input: &str) -> Result<Vec<Letter>, ParseFailure> {
    input
        .split(',')
        .map(|s| {
            let t = s.trim();
            match t.parse::<Letter>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => fail(format!("malformed index `{t}` in `{input}`")),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_words_parse() {
        let w = parse_group_word("x1 x2 X1 X2", 2).unwrap();
        let commutator = RFElement::gen(2, 1)
            .unwrap()
            .comm(&RFElement::gen(2, 2).unwrap())
            .unwrap();
        assert_eq!(w, commutator);
        assert!(parse_group_word("x1 c1.2", 2).is_err());
        assert!(parse_group_word("x0", 2).is_err());
        assert!(parse_group_word("x3", 2).is_err());
    }

    #[test]
    fn auto_words_parse() {
        let w = parse_auto_word("c1.2 C1.2", 3).unwrap();
        assert!(w.is_identity());
        let braid = parse_auto_word("s1 s1", 2).unwrap();
        assert_eq!(braid, parse_auto_word("a1.2", 2).unwrap());
        assert!(parse_auto_word("r1 r1", 3).unwrap().is_identity());
        assert!(parse_auto_word("R1", 3).is_err());
        assert!(parse_auto_word("x1", 3).is_err());
        assert!(parse_auto_word("c1", 3).is_err());
        assert!(parse_auto_word("s1.2", 3).is_err());
        assert!(parse_auto_word("c1.1", 3).is_err());
    }

    #[test]
    fn index_lists_parse() {
        assert_eq!(parse_index_list("2,3").unwrap(), vec![2, 3]);
        assert!(parse_index_list("2,,3").is_err());
        assert!(parse_index_list("a").is_err());
    }
}
