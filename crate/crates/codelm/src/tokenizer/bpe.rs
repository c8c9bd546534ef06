//! Byte-pair-encoding trainer and encoder.
//!
//! Training greedily merges the most frequent adjacent symbol pair until
//! the vocabulary budget is reached or no pair occurs twice. Frequency ties
//! break lexicographically on the pair's display strings, so training is a
//! pure function of the corpus. The base inventory (specials plus every
//! distinct corpus symbol) is the floor: merges stop at the budget but the
//! alphabet is never truncated, since dropping characters would break
//! lossless decoding.

use super::{split_pieces, Token, VocabKind, Vocabulary};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

/// Symbol sequence for one unique piece, with its corpus frequency.
struct PieceEntry {
    syms: Vec<u32>,
    count: u64,
}

pub fn train(
    corpus: impl IntoIterator<Item = impl AsRef<str>>,
    vocab_budget: usize,
) -> Result<Vocabulary> {
    // Histogram of unique pieces. BTreeMap keeps downstream ordering (piece
    // ids, alphabet) independent of hash iteration order.
    let mut piece_counts: BTreeMap<(bool, String), u64> = BTreeMap::new();
    let mut saw_text = false;
    for text in corpus {
        saw_text = true;
        for p in split_pieces(text.as_ref()) {
            *piece_counts
                .entry((p.word_initial, p.text.to_string()))
                .or_insert(0) += 1;
        }
    }
    if !saw_text {
        return Err(Error::Data(
            "cannot train a vocabulary on an empty corpus".into(),
        ));
    }

    // Alphabet: every (word-initial?, char) symbol that occurs.
    let mut alphabet: BTreeSet<(bool, char)> = BTreeSet::new();
    for (initial, text) in piece_counts.keys() {
        for (i, c) in text.chars().enumerate() {
            alphabet.insert((*initial && i == 0, c));
        }
    }

    let mut tokens = vec![Token::Pad, Token::Unk];
    tokens.extend(
        alphabet
            .iter()
            .map(|&(initial, c)| Token::piece(initial, c.to_string())),
    );
    let mut displays: Vec<String> = tokens.iter().map(|t| t.to_string()).collect();
    let sym_ids: HashMap<(bool, char), u32> = alphabet
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, (i + 2) as u32))
        .collect();

    let mut pieces: Vec<PieceEntry> = piece_counts
        .into_iter()
        .map(|((initial, text), count)| {
            let syms = text
                .chars()
                .enumerate()
                .map(|(i, c)| sym_ids[&(initial && i == 0, c)])
                .collect();
            PieceEntry { syms, count }
        })
        .collect();

    // Pair occurrence counts and an index of which pieces hold each pair.
    let mut pair_counts: HashMap<(u32, u32), u64> = HashMap::new();
    let mut pair_pieces: HashMap<(u32, u32), HashSet<usize>> = HashMap::new();
    for (pi, entry) in pieces.iter().enumerate() {
        for w in entry.syms.windows(2) {
            let pair = (w[0], w[1]);
            *pair_counts.entry(pair).or_insert(0) += entry.count;
            pair_pieces.entry(pair).or_default().insert(pi);
        }
    }

    let mut merges: Vec<(Token, Token)> = Vec::new();
    while tokens.len() < vocab_budget {
        // Most frequent pair; ties break on ascending display strings. The
        // scan order over the hash map does not affect the winner.
        let mut best: Option<((u32, u32), u64)> = None;
        for (&pair, &count) in &pair_counts {
            if count < 2 {
                continue;
            }
            best = match best {
                None => Some((pair, count)),
                Some((bp, bc)) => {
                    let better = count > bc
                        || (count == bc
                            && (&displays[pair.0 as usize], &displays[pair.1 as usize])
                                < (&displays[bp.0 as usize], &displays[bp.1 as usize]));
                    if better {
                        Some((pair, count))
                    } else {
                        Some((bp, bc))
                    }
                }
            };
        }
        let Some((pair, _)) = best else {
            break; // no pair repeats
        };

        let (a, b) = pair;
        let merged = match (&tokens[a as usize], &tokens[b as usize]) {
            (
                Token::Piece {
                    word_initial,
                    text: ta,
                },
                Token::Piece { text: tb, .. },
            ) => Token::piece(*word_initial, format!("{ta}{tb}")),
            _ => unreachable!("specials never occur inside pieces"),
        };
        let merged_id = tokens.len() as u32;
        merges.push((tokens[a as usize].clone(), tokens[b as usize].clone()));
        displays.push(merged.to_string());
        tokens.push(merged);

        // Rewrite affected pieces, recounting their pairs wholesale. Sorted
        // order keeps the count arithmetic identical run to run.
        let mut affected: Vec<usize> = pair_pieces.remove(&pair).unwrap().into_iter().collect();
        affected.sort_unstable();
        for pi in affected {
            let entry = &mut pieces[pi];
            for w in entry.syms.windows(2) {
                let old = (w[0], w[1]);
                if let Some(c) = pair_counts.get_mut(&old) {
                    *c -= entry.count;
                    if *c == 0 {
                        pair_counts.remove(&old);
                    }
                }
                if let Some(set) = pair_pieces.get_mut(&old) {
                    set.remove(&pi);
                    if set.is_empty() {
                        pair_pieces.remove(&old);
                    }
                }
            }
            entry.syms = merge_occurrences(&entry.syms, pair, merged_id);
            for w in entry.syms.windows(2) {
                let new = (w[0], w[1]);
                *pair_counts.entry(new).or_insert(0) += entry.count;
                pair_pieces.entry(new).or_default().insert(pi);
            }
        }
    }

    Vocabulary::from_tokens(VocabKind::Subword, tokens, merges)
}

/// Replace non-overlapping occurrences of `pair`, scanning left to right.
fn merge_occurrences(syms: &[u32], pair: (u32, u32), merged: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(syms.len());
    let mut i = 0;
    while i < syms.len() {
        if i + 1 < syms.len() && syms[i] == pair.0 && syms[i + 1] == pair.1 {
            out.push(merged);
            i += 2;
        } else {
            out.push(syms[i]);
            i += 1;
        }
    }
    out
}

/// Encode one pre-split piece by applying merges in training order: the
/// lowest-rank applicable merge is applied to all its occurrences, repeated
/// until none applies. Symbols outside the alphabet become `<unk>`.
pub(super) fn encode_piece(vocab: &Vocabulary, piece: super::Piece<'_>) -> Vec<u32> {
    let mut syms: Vec<u32> = piece
        .text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            vocab
                .id_of(&Token::piece(piece.word_initial && i == 0, c.to_string()))
                .unwrap_or(super::UNK_ID)
        })
        .collect();
    loop {
        let mut best: Option<(u32, (u32, u32), u32)> = None;
        for w in syms.windows(2) {
            if let Some(&(rank, merged)) = vocab.merge_ranks.get(&(w[0], w[1])) {
                if best.is_none_or(|(r, _, _)| rank < r) {
                    best = Some((rank, (w[0], w[1]), merged));
                }
            }
        }
        let Some((_, pair, merged)) = best else {
            return syms;
        };
        syms = merge_occurrences(&syms, pair, merged);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_pair_merges_once_at_minimal_budget() {
        // alphabet of "abababab": word-initial a, plain a, plain b
        let v = Vocabulary::train_bpe(["abababab"], 2 + 3 + 1).unwrap();
        assert_eq!(v.size(), 6);
        assert_eq!(
            v.merges(),
            &[(Token::piece(false, "a"), Token::piece(false, "b"))]
        );
        // the merged token exists and is used when encoding
        let ids = v.encode("abababab").ids;
        let texts: Vec<String> = ids
            .iter()
            .map(|&i| v.token(i).unwrap().to_string())
            .collect();
        assert_eq!(texts, vec!["\u{2581}a", "b", "ab", "ab", "ab"]);
    }

    #[test]
    fn budget_at_alphabet_floor_means_zero_merges() {
        let v = Vocabulary::train_bpe(["abababab"], 5).unwrap();
        assert_eq!(v.size(), 5);
        assert!(v.merges().is_empty());
        // still lossless: falls back to per-character symbols
        let ids = v.encode("abab").ids;
        assert_eq!(v.decode(&ids).unwrap(), "abab");
    }

    #[test]
    fn training_is_deterministic() {
        let corpus = ["def f(x):\n    return x + 1\n", "def g(y):\n    return y\n"];
        let a = Vocabulary::train_bpe(corpus, 40).unwrap();
        let b = Vocabulary::train_bpe(corpus, 40).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn subword_roundtrip_is_lossless() {
        let texts = [
            "def add(a, b):\n    return a + b\n",
            "print(add(2, 3))\n",
            "x = \"mixed → unicode\"\n",
        ];
        let v = Vocabulary::train_bpe(texts, 120).unwrap();
        for t in texts {
            let ids = v.encode(t).ids;
            assert_eq!(v.decode(&ids).unwrap(), t, "text {t:?}");
        }
    }

    #[test]
    fn subword_stream_never_longer_than_char_stream() {
        let texts = ["for i in range(10):\n    print(i)\n"];
        let sub = Vocabulary::train_bpe(texts, 200).unwrap();
        let chars = Vocabulary::build_char(texts).unwrap();
        for t in texts {
            assert!(sub.encode(t).len() <= chars.encode(t).len());
        }
    }

    #[test]
    fn whitespace_runs_can_merge_into_indent_tokens() {
        let text = "a\n    b\n    c\n    d\n";
        let v = Vocabulary::train_bpe([text], 64).unwrap();
        let has_indent = (0..v.size() as u32).any(|i| {
            matches!(v.token(i), Some(Token::Piece { text, .. }) if text == "\n    ")
        });
        assert!(has_indent, "expected the four-space indent to merge");
    }

    #[test]
    fn empty_corpus_is_an_error() {
        let texts: [&str; 0] = [];
        assert!(matches!(
            Vocabulary::train_bpe(texts, 100),
            Err(Error::Data(_))
        ));
    }
}
