//! Character-level and byte-pair-encoding tokenization with lossless
//! round-trips.
//!
//! Both schemes tokenize Unicode scalar values, never raw bytes. For BPE,
//! text is pre-split into pieces — maximal runs of whitespace, of word
//! characters (alphanumeric plus `_`), or of other punctuation — and merges
//! never cross piece boundaries. The first piece symbol after whitespace
//! carries a word-initial flag, so `if` the keyword and the `if` inside
//! `elif` are distinct symbols. Whitespace runs are ordinary pieces whose
//! symbols may merge too, which is what makes decoding exact: every token
//! either reproduces its text or, for word-initial tokens, its text minus
//! the marker.

pub mod bpe;

use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::path::Path;

/// Marker prefix shown on word-initial tokens in display and vocab files.
pub const BOUNDARY_MARKER: char = '\u{2581}';
/// Replacement character emitted when decoding `<unk>`.
pub const REPLACEMENT: char = '\u{FFFD}';

pub const PAD_ID: u32 = 0;
pub const UNK_ID: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VocabKind {
    Character,
    Subword,
}

/// A vocabulary entry. Specials are distinct from any learnable piece, so a
/// corpus that happens to contain the text `<unk>` cannot collide with them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Token {
    Pad,
    Unk,
    Piece { word_initial: bool, text: String },
}

impl Token {
    pub fn piece(word_initial: bool, text: impl Into<String>) -> Self {
        Token::Piece {
            word_initial,
            text: text.into(),
        }
    }

    /// Text contributed to decoded output.
    fn decoded(&self) -> &str {
        match self {
            Token::Pad => "",
            Token::Unk => "\u{FFFD}",
            Token::Piece { text, .. } => text,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Pad => f.write_str("<pad>"),
            Token::Unk => f.write_str("<unk>"),
            Token::Piece { word_initial, text } => {
                if *word_initial {
                    write!(f, "{BOUNDARY_MARKER}{text}")
                } else {
                    f.write_str(text)
                }
            }
        }
    }
}

/// An immutable token inventory with dense ids `0..size`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vocabulary {
    kind: VocabKind,
    tokens: Vec<Token>,
    ids: HashMap<Token, u32>,
    /// BPE merge rules in training order (subword kind only).
    merges: Vec<(Token, Token)>,
    /// Pair of ids -> (merge rank, merged id), derived from `merges`.
    merge_ranks: HashMap<(u32, u32), (u32, u32)>,
}

/// Encoded text plus the offsets where source files begin.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenStream {
    pub ids: Vec<u32>,
    pub source_boundaries: Vec<usize>,
}

impl TokenStream {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Append another file's ids, recording its start offset.
    pub fn push_source(&mut self, ids: &[u32]) {
        self.source_boundaries.push(self.ids.len());
        self.ids.extend_from_slice(ids);
    }
}

/// Character class used for piece splitting.
#[derive(PartialEq, Eq, Clone, Copy)]
enum Class {
    Whitespace,
    Word,
    Punct,
}

fn class_of(c: char) -> Class {
    if c.is_whitespace() {
        Class::Whitespace
    } else if c.is_alphanumeric() || c == '_' {
        Class::Word
    } else {
        Class::Punct
    }
}

/// A piece of pre-split text: `word_initial` marks a non-whitespace piece
/// preceded by whitespace (or the start of text).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Piece<'a> {
    pub word_initial: bool,
    pub text: &'a str,
}

/// Split text into maximal same-class runs.
pub(crate) fn split_pieces(text: &str) -> Vec<Piece<'_>> {
    let mut pieces = Vec::new();
    let mut start = 0;
    let mut cur: Option<Class> = None;
    let mut after_ws = true;
    for (i, c) in text.char_indices() {
        let cls = class_of(c);
        if cur != Some(cls) {
            if let Some(prev) = cur {
                pieces.push(Piece {
                    word_initial: after_ws && prev != Class::Whitespace,
                    text: &text[start..i],
                });
                after_ws = prev == Class::Whitespace;
            }
            cur = Some(cls);
            start = i;
        }
    }
    if let Some(prev) = cur {
        pieces.push(Piece {
            word_initial: after_ws && prev != Class::Whitespace,
            text: &text[start..],
        });
    }
    pieces
}

impl Vocabulary {
    pub(crate) fn from_tokens(
        kind: VocabKind,
        tokens: Vec<Token>,
        merges: Vec<(Token, Token)>,
    ) -> Result<Self> {
        let mut ids = HashMap::with_capacity(tokens.len());
        for (i, t) in tokens.iter().enumerate() {
            if ids.insert(t.clone(), i as u32).is_some() {
                return Err(Error::Data(format!("duplicate vocabulary token {t}")));
            }
        }
        // Resolving every merge against the inventory also validates loaded
        // files: each rule's operands and its product must all be tokens.
        let mut merge_ranks = HashMap::with_capacity(merges.len());
        for (rank, (a, b)) in merges.iter().enumerate() {
            let merged = match (a, b) {
                (
                    Token::Piece {
                        word_initial,
                        text: ta,
                    },
                    Token::Piece { text: tb, .. },
                ) => Token::piece(*word_initial, format!("{ta}{tb}")),
                _ => {
                    return Err(Error::Data(format!(
                        "merge rule ({a}, {b}) involves a special token"
                    )))
                }
            };
            let resolve = |t: &Token| {
                ids.get(t)
                    .copied()
                    .ok_or_else(|| Error::Data(format!("merge rule references unknown token {t}")))
            };
            let key = (resolve(a)?, resolve(b)?);
            merge_ranks
                .entry(key)
                .or_insert((rank as u32, resolve(&merged)?));
        }
        Ok(Self {
            kind,
            tokens,
            ids,
            merges,
            merge_ranks,
        })
    }

    pub fn kind(&self) -> VocabKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.tokens.len()
    }

    pub fn token(&self, id: u32) -> Option<&Token> {
        self.tokens.get(id as usize)
    }

    pub fn id_of(&self, token: &Token) -> Option<u32> {
        self.ids.get(token).copied()
    }

    pub fn merges(&self) -> &[(Token, Token)] {
        &self.merges
    }

    /// One token per distinct character in the corpus, sorted by code point.
    pub fn build_char(corpus: impl IntoIterator<Item = impl AsRef<str>>) -> Result<Self> {
        let mut chars = std::collections::BTreeSet::new();
        let mut saw_text = false;
        for text in corpus {
            saw_text = true;
            chars.extend(text.as_ref().chars());
        }
        if !saw_text {
            return Err(Error::Data("cannot build a vocabulary from an empty corpus".into()));
        }
        let mut tokens = vec![Token::Pad, Token::Unk];
        tokens.extend(chars.into_iter().map(|c| Token::piece(false, c.to_string())));
        Self::from_tokens(VocabKind::Character, tokens, Vec::new())
    }

    /// Greedy pair-merge training; see [`bpe::train`].
    pub fn train_bpe(
        corpus: impl IntoIterator<Item = impl AsRef<str>>,
        vocab_budget: usize,
    ) -> Result<Self> {
        bpe::train(corpus, vocab_budget)
    }

    pub fn encode(&self, text: &str) -> TokenStream {
        let ids = match self.kind {
            VocabKind::Character => text
                .chars()
                .map(|c| {
                    self.ids
                        .get(&Token::piece(false, c.to_string()))
                        .copied()
                        .unwrap_or(UNK_ID)
                })
                .collect(),
            VocabKind::Subword => {
                let mut ids = Vec::new();
                let mut cache: HashMap<Piece<'_>, Vec<u32>> = HashMap::new();
                for piece in split_pieces(text) {
                    let piece_ids = cache
                        .entry(piece)
                        .or_insert_with(|| bpe::encode_piece(self, piece));
                    ids.extend_from_slice(piece_ids);
                }
                ids
            }
        };
        TokenStream {
            ids,
            source_boundaries: vec![0],
        }
    }

    /// Exact inverse of [`encode`](Self::encode) on in-vocabulary text.
    pub fn decode(&self, ids: &[u32]) -> Result<String> {
        let mut out = String::new();
        for &id in ids {
            let token = self.token(id).ok_or_else(|| {
                Error::Data(format!("token id {id} out of range for vocabulary of {}", self.size()))
            })?;
            out.push_str(token.decoded());
        }
        Ok(out)
    }

    // ---- serialization ------------------------------------------------------

    /// Write as UTF-8 text: a kind line, one `id<TAB>token` line per token,
    /// then a merge section for subword vocabularies.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut out = String::new();
        let kind = match self.kind {
            VocabKind::Character => "character",
            VocabKind::Subword => "subword",
        };
        out.push_str(&format!("kind\t{kind}\n"));
        for (i, t) in self.tokens.iter().enumerate() {
            out.push_str(&format!("{i}\t{}\n", escape_token(t)));
        }
        if self.kind == VocabKind::Subword {
            out.push_str("merges\n");
            for (a, b) in &self.merges {
                out.push_str(&format!("{}\t{}\n", escape_token(a), escape_token(b)));
            }
        }
        std::fs::write(path, out)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut lines = text.lines();
        let kind = match lines.next() {
            Some("kind\tcharacter") => VocabKind::Character,
            Some("kind\tsubword") => VocabKind::Subword,
            other => {
                return Err(Error::Data(format!(
                    "vocabulary file must start with a kind line, got {other:?}"
                )))
            }
        };
        let mut tokens = Vec::new();
        let mut merges = Vec::new();
        let mut in_merges = false;
        for line in lines {
            if line == "merges" {
                in_merges = true;
                continue;
            }
            if in_merges {
                let (a, b) = line.split_once('\t').ok_or_else(|| {
                    Error::Data(format!("malformed merge line {line:?}"))
                })?;
                merges.push((unescape_token(a)?, unescape_token(b)?));
            } else {
                let (id, body) = line.split_once('\t').ok_or_else(|| {
                    Error::Data(format!("malformed vocabulary line {line:?}"))
                })?;
                let id: usize = id
                    .parse()
                    .map_err(|_| Error::Data(format!("bad token id {id:?}")))?;
                if id != tokens.len() {
                    return Err(Error::Data(format!(
                        "vocabulary ids must be dense, expected {} got {id}",
                        tokens.len()
                    )));
                }
                tokens.push(unescape_token(body)?);
            }
        }
        Self::from_tokens(kind, tokens, merges)
    }
}

/// Escape a token for the vocabulary file. The marker prefix stays literal;
/// every other metacharacter in the text is escaped, so the leading marker
/// and the special names are unambiguous on read-back.
fn escape_token(t: &Token) -> String {
    match t {
        Token::Pad => "<pad>".into(),
        Token::Unk => "<unk>".into(),
        Token::Piece { word_initial, text } => {
            let mut out = String::new();
            if *word_initial {
                out.push(BOUNDARY_MARKER);
            }
            for c in text.chars() {
                match c {
                    '\t' => out.push_str("\\t"),
                    '\n' => out.push_str("\\n"),
                    '\r' => out.push_str("\\r"),
                    '\\' => out.push_str("\\\\"),
                    BOUNDARY_MARKER => out.push_str("\\u2581"),
                    '<' => out.push_str("\\u003c"),
                    c => out.push(c),
                }
            }
            out
        }
    }
}

fn unescape_token(body: &str) -> Result<Token> {
    if body == "<pad>" {
        return Ok(Token::Pad);
    }
    if body == "<unk>" {
        return Ok(Token::Unk);
    }
    let (word_initial, rest) = match body.strip_prefix(BOUNDARY_MARKER) {
        Some(r) => (true, r),
        None => (false, body),
    };
    let mut text = String::new();
    let mut chars = rest.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            text.push(c);
            continue;
        }
        match chars.next() {
            Some('t') => text.push('\t'),
            Some('n') => text.push('\n'),
            Some('r') => text.push('\r'),
            Some('\\') => text.push('\\'),
            Some('u') => {
                let hex: String = chars.by_ref().take(4).collect();
                let cp = u32::from_str_radix(&hex, 16)
                    .map_err(|_| Error::Data(format!("bad escape \\u{hex} in {body:?}")))?;
                text.push(char::from_u32(cp).ok_or_else(|| {
                    Error::Data(format!("escape \\u{hex} is not a scalar value"))
                })?);
            }
            other => {
                return Err(Error::Data(format!("bad escape \\{other:?} in {body:?}")));
            }
        }
    }
    Ok(Token::piece(word_initial, text))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn char_vocab_is_sorted_and_deduped() {
        let v = Vocabulary::build_char(["aab"]).unwrap();
        assert_eq!(v.size(), 4); // pad, unk, a, b
        assert_eq!(v.token(2), Some(&Token::piece(false, "a")));
        assert_eq!(v.token(3), Some(&Token::piece(false, "b")));
        let again = Vocabulary::build_char(["aab"]).unwrap();
        assert_eq!(v, again);
    }

    #[test]
    fn char_vocab_rejects_empty_corpus() {
        let texts: [&str; 0] = [];
        assert!(matches!(
            Vocabulary::build_char(texts),
            Err(Error::Data(_))
        ));
    }

    #[test]
    fn unknown_characters_encode_to_unk() {
        let v = Vocabulary::build_char(["ab"]).unwrap();
        let stream = v.encode("abz");
        assert_eq!(stream.ids[2], UNK_ID);
        assert_eq!(v.decode(&stream.ids).unwrap(), format!("ab{REPLACEMENT}"));
    }

    #[test]
    fn char_roundtrip_with_unicode() {
        let text = "fn main() {\n\tprintln!(\"héllo → api\");\n}\n";
        let v = Vocabulary::build_char([text]).unwrap();
        let stream = v.encode(text);
        assert_eq!(stream.ids.len(), text.chars().count());
        assert_eq!(v.decode(&stream.ids).unwrap(), text);
    }

    #[test]
    fn empty_text_encodes_to_empty_stream() {
        let v = Vocabulary::build_char(["ab"]).unwrap();
        assert!(v.encode("").ids.is_empty());
        assert_eq!(v.decode(&[]).unwrap(), "");
    }

    #[test]
    fn decode_rejects_out_of_range_ids() {
        let v = Vocabulary::build_char(["ab"]).unwrap();
        assert!(matches!(v.decode(&[99]), Err(Error::Data(_))));
    }

    #[test]
    fn pieces_split_on_class_boundaries() {
        let pieces = split_pieces("print(x + 3)");
        let texts: Vec<&str> = pieces.iter().map(|p| p.text).collect();
        assert_eq!(texts, vec!["print", "(", "x", " ", "+", " ", "3", ")"]);
        let initials: Vec<bool> = pieces.iter().map(|p| p.word_initial).collect();
        assert_eq!(
            initials,
            vec![true, false, false, false, true, false, true, false]
        );
    }

    #[test]
    fn pieces_treat_underscore_as_word_char() {
        let pieces = split_pieces("my_var=1");
        let texts: Vec<&str> = pieces.iter().map(|p| p.text).collect();
        assert_eq!(texts, vec!["my_var", "=", "1"]);
    }

    #[test]
    fn pieces_keep_whitespace_runs_whole() {
        let pieces = split_pieces("a\n    b");
        let texts: Vec<&str> = pieces.iter().map(|p| p.text).collect();
        assert_eq!(texts, vec!["a", "\n    ", "b"]);
        assert!(pieces[2].word_initial);
    }

    #[test]
    fn vocab_file_roundtrip_with_awkward_tokens() {
        let tokens = vec![
            Token::Pad,
            Token::Unk,
            Token::piece(false, "\t"),
            Token::piece(false, "\n    "),
            Token::piece(true, "i"),
            Token::piece(false, "f"),
            Token::piece(true, "if"),
            Token::piece(false, "\u{2581}"),
            Token::piece(false, "<pad>"),
            Token::piece(true, "a\\b"),
        ];
        let merges = vec![(Token::piece(true, "i"), Token::piece(false, "f"))];
        let v = Vocabulary::from_tokens(VocabKind::Subword, tokens, merges).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("vocab.tsv");
        v.save(&path).unwrap();
        let loaded = Vocabulary::load(&path).unwrap();
        assert_eq!(v, loaded);
    }

    #[test]
    fn token_stream_tracks_source_boundaries() {
        let mut s = TokenStream::default();
        s.push_source(&[1, 2, 3]);
        s.push_source(&[4, 5]);
        assert_eq!(s.source_boundaries, vec![0, 3]);
        assert_eq!(s.len(), 5);
    }

    proptest! {
        #[test]
        fn char_roundtrip_is_lossless(text in "\\PC{0,80}") {
            let v = Vocabulary::build_char([text.as_str()]).unwrap();
            let stream = v.encode(&text);
            prop_assert_eq!(v.decode(&stream.ids).unwrap(), text);
        }

        #[test]
        fn piece_split_concatenation_is_identity(text in "[ a-z(){}=+\\n\\t]{0,60}") {
            let joined: String = split_pieces(&text).iter().map(|p| p.text).collect();
            prop_assert_eq!(joined, text);
        }

        #[test]
        fn token_escape_roundtrips(word_initial in any::<bool>(), text in "\\PC{1,12}") {
            let t = Token::piece(word_initial, text);
            let back = unescape_token(&escape_token(&t)).unwrap();
            prop_assert_eq!(t, back);
        }
    }
}
