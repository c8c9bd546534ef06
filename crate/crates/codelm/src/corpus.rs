//! Corpus ingestion, deterministic splitting, line-overlap deduplication,
//! and contiguous segment streaming.
//!
//! The corpus is a directory of source files. Splitting collapses exact
//! duplicates first, shuffles with a seeded generator, and partitions by
//! file count. Deduplication then removes validation and test files whose
//! trimmed non-blank lines overlap the train set above a threshold; the
//! train set itself is never touched. For training, files are concatenated
//! into one token stream that is cut into `batch_size` contiguous streams,
//! so consecutive batches present consecutive segments of each stream and
//! recurrent memory stays meaningful across batch boundaries.

use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

pub const DEFAULT_DEDUP_THRESHOLD: f64 = 0.25;
pub const DEFAULT_SOURCE_EXTENSION: &str = "py";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    pub path: PathBuf,
    pub text: String,
}

impl SourceFile {
    pub fn new(path: impl Into<PathBuf>, text: impl Into<String>) -> Self {
        Self {
            path: path.into(),
            text: text.into(),
        }
    }

    /// Lines without their terminators. Joining with `\n` and restoring the
    /// trailing newline per [`has_trailing_newline`](Self::has_trailing_newline)
    /// reproduces `text` exactly.
    pub fn lines(&self) -> Vec<&str> {
        let mut lines: Vec<&str> = self.text.split('\n').collect();
        if self.has_trailing_newline() {
            lines.pop();
        }
        lines
    }

    pub fn has_trailing_newline(&self) -> bool {
        self.text.ends_with('\n')
    }

    pub fn content_hash(&self) -> [u8; 32] {
        Sha256::digest(self.text.as_bytes()).into()
    }

    pub fn content_hash_hex(&self) -> String {
        self.content_hash()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitName {
    Train,
    Validation,
    Test,
}

impl fmt::Display for SplitName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitName::Train => "train",
            SplitName::Validation => "validation",
            SplitName::Test => "test",
        })
    }
}

impl SplitName {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "train" => Ok(SplitName::Train),
            "validation" => Ok(SplitName::Validation),
            "test" => Ok(SplitName::Test),
            other => Err(Error::Data(format!("unknown split name {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DatasetSplit {
    pub train: Vec<SourceFile>,
    pub validation: Vec<SourceFile>,
    pub test: Vec<SourceFile>,
    pub seed: u64,
    pub threshold: f64,
}

/// One manifest row: where a file landed and whether dedup kept it.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifestRecord {
    pub split: SplitName,
    pub path: PathBuf,
    pub hash: String,
    /// Overlap against the train line index; `None` for train files.
    pub ratio: Option<f64>,
    pub kept: bool,
}

/// Read every file with the given extension under `root`, sorted by path.
pub fn ingest(root: impl AsRef<Path>, extension: &str) -> Result<Vec<SourceFile>> {
    let mut files = Vec::new();
    for entry in walkdir::WalkDir::new(root.as_ref()).sort_by_file_name() {
        let entry = entry.map_err(|e| Error::Data(format!("walking corpus: {e}")))?;
        if !entry.file_type().is_file() {
            continue;
        }
        let path = entry.path();
        if path.extension().and_then(|e| e.to_str()) != Some(extension) {
            continue;
        }
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::Data(format!("reading {}: {e}", path.display()))
        })?;
        files.push(SourceFile::new(path, text));
    }
    files.sort_by(|a, b| a.path.cmp(&b.path));
    Ok(files)
}

/// Collapse exact duplicates, shuffle with the seed, and partition by count.
pub fn split_corpus(
    files: Vec<SourceFile>,
    ratios: (f64, f64, f64),
    seed: u64,
) -> Result<DatasetSplit> {
    let (r_train, r_val, r_test) = ratios;
    if (r_train + r_val + r_test - 1.0).abs() > 1e-9 || r_train < 0.0 || r_val < 0.0 || r_test < 0.0
    {
        return Err(Error::Config(format!(
            "split ratios must be non-negative and sum to 1, got {ratios:?}"
        )));
    }
    if files.len() < 10 {
        return Err(Error::Data(format!(
            "need at least 10 corpus files to split, got {}",
            files.len()
        )));
    }

    // Exact duplicates collapse before partitioning, keeping the first path
    // in sorted order, so a duplicated file lands in exactly one split.
    let mut sorted = files;
    sorted.sort_by(|a, b| a.path.cmp(&b.path));
    let mut by_hash: BTreeMap<[u8; 32], SourceFile> = BTreeMap::new();
    for f in sorted {
        by_hash.entry(f.content_hash()).or_insert(f);
    }
    let mut unique: Vec<SourceFile> = by_hash.into_values().collect();
    unique.sort_by(|a, b| a.path.cmp(&b.path));
    if unique.len() < 10 {
        return Err(Error::Data(format!(
            "need at least 10 distinct corpus files to split, got {} after collapsing duplicates",
            unique.len()
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    unique.shuffle(&mut rng);

    let n = unique.len();
    let n_train = ((n as f64) * r_train).round() as usize;
    let n_val = (((n as f64) * r_val).round() as usize).min(n - n_train.min(n));
    let n_train = n_train.min(n);
    let mut rest = unique.split_off(n_train);
    let test = rest.split_off(n_val.min(rest.len()));
    Ok(DatasetSplit {
        train: unique,
        validation: rest,
        test,
        seed,
        threshold: DEFAULT_DEDUP_THRESHOLD,
    })
}

/// Membership index over the train set's trimmed non-blank lines.
#[derive(Debug, Default)]
pub struct LineIndex {
    lines: HashSet<String>,
}

impl LineIndex {
    pub fn build(train: &[SourceFile]) -> Self {
        let mut lines = HashSet::new();
        for file in train {
            for line in file.lines() {
                let trimmed = line.trim();
                if !trimmed.is_empty() {
                    lines.insert(trimmed.to_string());
                }
            }
        }
        Self { lines }
    }

    pub fn contains(&self, line: &str) -> bool {
        self.lines.contains(line.trim())
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

/// Fraction of the candidate's non-blank lines (trimmed) that occur anywhere
/// in the train index. Each occurrence counts, not each distinct line. A file
/// with no non-blank lines has ratio 0.
pub fn line_overlap_ratio(candidate: &SourceFile, index: &LineIndex) -> f64 {
    let mut total = 0u64;
    let mut shared = 0u64;
    for line in candidate.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        total += 1;
        if index.contains(trimmed) {
            shared += 1;
        }
    }
    if total == 0 {
        0.0
    } else {
        shared as f64 / total as f64
    }
}

/// Drop validation/test files whose overlap ratio strictly exceeds the
/// split's threshold. Train files are never removed. Returns the filtered
/// split and a full manifest covering every file, removed ones included.
pub fn dedup_filter(split: DatasetSplit) -> (DatasetSplit, Vec<ManifestRecord>) {
    let index = LineIndex::build(&split.train);
    let threshold = split.threshold;
    let mut records = Vec::new();
    for f in &split.train {
        records.push(ManifestRecord {
            split: SplitName::Train,
            path: f.path.clone(),
            hash: f.content_hash_hex(),
            ratio: None,
            kept: true,
        });
    }
    let mut filter = |files: Vec<SourceFile>, name: SplitName| -> Vec<SourceFile> {
        let mut kept = Vec::with_capacity(files.len());
        for f in files {
            let ratio = line_overlap_ratio(&f, &index);
            let keep = ratio <= threshold;
            records.push(ManifestRecord {
                split: name,
                path: f.path.clone(),
                hash: f.content_hash_hex(),
                ratio: Some(ratio),
                kept: keep,
            });
            if keep {
                kept.push(f);
            }
        }
        kept
    };
    let validation = filter(split.validation, SplitName::Validation);
    let test = filter(split.test, SplitName::Test);
    (
        DatasetSplit {
            train: split.train,
            validation,
            test,
            seed: split.seed,
            threshold,
        },
        records,
    )
}

/// Write the manifest as TSV: split, path, content hash, overlap ratio
/// (`-` for train), kept/removed.
pub fn write_manifest(path: impl AsRef<Path>, records: &[ManifestRecord]) -> Result<()> {
    let mut out = String::new();
    for r in records {
        let ratio = match r.ratio {
            Some(v) => format!("{v:.4}"),
            None => "-".to_string(),
        };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.split,
            r.path.display(),
            r.hash,
            ratio,
            if r.kept { "kept" } else { "removed" }
        ));
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Parse a manifest written by [`write_manifest`].
pub fn read_manifest(path: impl AsRef<Path>) -> Result<Vec<ManifestRecord>> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Data(format!("cannot read manifest {}: {e}", path.as_ref().display())))?;
    let mut records = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(Error::Data(format!(
                "manifest line {} has {} fields, expected 5",
                lineno + 1,
                fields.len()
            )));
        }
        let ratio = match fields[3] {
            "-" => None,
            v => Some(v.parse::<f64>().map_err(|_| {
                Error::Data(format!("manifest line {}: bad ratio {v:?}", lineno + 1))
            })?),
        };
        let kept = match fields[4] {
            "kept" => true,
            "removed" => false,
            other => {
                return Err(Error::Data(format!(
                    "manifest line {}: bad status {other:?}",
                    lineno + 1
                )))
            }
        };
        records.push(ManifestRecord {
            split: SplitName::parse(fields[0])?,
            path: PathBuf::from(fields[1]),
            hash: fields[2].to_string(),
            ratio,
            kept,
        });
    }
    Ok(records)
}

/// Concatenate files in path order with a newline separator. This is the
/// text a split contributes to tokenization; memory is allowed to flow
/// across the file boundaries inside it.
pub fn joined_text(files: &[SourceFile]) -> String {
    let mut ordered: Vec<&SourceFile> = files.iter().collect();
    ordered.sort_by(|a, b| a.path.cmp(&b.path));
    let mut out = String::new();
    for (i, f) in ordered.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&f.text);
    }
    out
}

/// One training step's worth of data: `batch_size` rows of `seq_len` input
/// ids with their shifted-by-one targets, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentBatch {
    pub inputs: Vec<u32>,
    pub targets: Vec<u32>,
    pub batch_size: usize,
    pub seq_len: usize,
    /// Which contiguous stream each row belongs to (row b is stream b).
    pub stream_id: Vec<usize>,
    /// True for rows presenting the first segment of their stream.
    pub is_stream_start: Vec<bool>,
}

/// A token stream cut into `batch_size` equal contiguous streams. Batch `i`
/// holds segment `i` of every stream, so batch `i+1` continues exactly where
/// batch `i` left off and recurrent memory carries over.
#[derive(Debug, Clone)]
pub struct SegmentStream {
    ids: Vec<u32>,
    batch_size: usize,
    seq_len: usize,
    /// Tokens per stream after cutting (floor division of the total).
    stream_len: usize,
    num_batches: usize,
}

impl SegmentStream {
    pub fn new(ids: &[u32], seq_len: usize, batch_size: usize) -> Result<Self> {
        if seq_len == 0 || batch_size == 0 {
            return Err(Error::Config(
                "seq_len and batch_size must be positive".into(),
            ));
        }
        if ids.len() < batch_size * (seq_len + 1) {
            return Err(Error::Data(format!(
                "token stream of {} is too short for batch {batch_size} x (seq {seq_len} + 1)",
                ids.len()
            )));
        }
        let stream_len = ids.len() / batch_size;
        // One lookahead token per stream feeds the final target; the ragged
        // tail beyond the last full segment is dropped.
        let num_batches = (stream_len - 1) / seq_len;
        Ok(Self {
            ids: ids.to_vec(),
            batch_size,
            seq_len,
            stream_len,
            num_batches,
        })
    }

    pub fn num_batches(&self) -> usize {
        self.num_batches
    }

    pub fn batch_size(&self) -> usize {
        self.batch_size
    }

    pub fn seq_len(&self) -> usize {
        self.seq_len
    }

    /// Total target tokens per epoch, for loss normalization.
    pub fn tokens_per_epoch(&self) -> usize {
        self.num_batches * self.batch_size * self.seq_len
    }

    pub fn batch(&self, index: usize) -> SegmentBatch {
        assert!(index < self.num_batches, "batch index out of range");
        let mut inputs = Vec::with_capacity(self.batch_size * self.seq_len);
        let mut targets = Vec::with_capacity(self.batch_size * self.seq_len);
        for b in 0..self.batch_size {
            let base = b * self.stream_len + index * self.seq_len;
            inputs.extend_from_slice(&self.ids[base..base + self.seq_len]);
            targets.extend_from_slice(&self.ids[base + 1..base + self.seq_len + 1]);
        }
        SegmentBatch {
            inputs,
            targets,
            batch_size: self.batch_size,
            seq_len: self.seq_len,
            stream_id: (0..self.batch_size).collect(),
            is_stream_start: vec![index == 0; self.batch_size],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn file(path: &str, text: &str) -> SourceFile {
        SourceFile::new(path, text)
    }

    fn synthetic_corpus(n: usize) -> Vec<SourceFile> {
        (0..n)
            .map(|i| file(&format!("src/f{i:03}.py"), &format!("x = {i}\n")))
            .collect()
    }

    #[test]
    fn lines_roundtrip_with_trailing_newline_flag() {
        for text in ["a\nb\n", "a\nb", "", "\n", "a\n\nb\n"] {
            let f = file("t.py", text);
            let mut joined = f.lines().join("\n");
            if f.has_trailing_newline() {
                joined.push('\n');
            }
            assert_eq!(joined, text, "text {text:?}");
        }
    }

    #[test]
    fn hundred_files_split_eighty_ten_ten() {
        let split = split_corpus(synthetic_corpus(100), (0.8, 0.1, 0.1), 7).unwrap();
        assert_eq!(split.train.len(), 80);
        assert_eq!(split.validation.len(), 10);
        assert_eq!(split.test.len(), 10);
    }

    #[test]
    fn same_seed_gives_identical_split() {
        let a = split_corpus(synthetic_corpus(40), (0.8, 0.1, 0.1), 11).unwrap();
        let b = split_corpus(synthetic_corpus(40), (0.8, 0.1, 0.1), 11).unwrap();
        assert_eq!(a.train, b.train);
        assert_eq!(a.validation, b.validation);
        assert_eq!(a.test, b.test);
        let c = split_corpus(synthetic_corpus(40), (0.8, 0.1, 0.1), 12).unwrap();
        assert_ne!(a.train, c.train);
    }

    #[test]
    fn byte_identical_files_collapse_to_one() {
        let mut files = synthetic_corpus(12);
        files.push(file("src/copy.py", "x = 3\n")); // duplicates f003
        let split = split_corpus(files, (0.8, 0.1, 0.1), 5).unwrap();
        let all: Vec<&SourceFile> = split
            .train
            .iter()
            .chain(&split.validation)
            .chain(&split.test)
            .collect();
        assert_eq!(all.len(), 12);
        let hits = all
            .iter()
            .filter(|f| f.text == "x = 3\n")
            .count();
        assert_eq!(hits, 1);
        // first path in sorted order is the survivor ("copy" < "f003")
        assert!(all.iter().any(|f| f.path.ends_with("copy.py")));
        assert!(!all.iter().any(|f| f.path.ends_with("f003.py")));
    }

    #[test]
    fn too_few_files_is_an_error() {
        assert!(matches!(
            split_corpus(synthetic_corpus(9), (0.8, 0.1, 0.1), 0),
            Err(Error::Data(_))
        ));
        // ten files that collapse to fewer also fail
        let mut files = synthetic_corpus(9);
        files.push(file("src/dup.py", "x = 0\n"));
        assert!(matches!(
            split_corpus(files, (0.8, 0.1, 0.1), 0),
            Err(Error::Data(_))
        ));
    }

    #[test]
    fn bad_ratios_are_an_error() {
        assert!(matches!(
            split_corpus(synthetic_corpus(20), (0.8, 0.1, 0.2), 0),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn overlap_ratio_counts_trimmed_nonblank_lines() {
        let train = [file("a.py", "x = 1\ny = 2\nz = 3\n")];
        let index = LineIndex::build(&train);
        // no shared lines
        assert_eq!(
            line_overlap_ratio(&file("b.py", "p = 9\nq = 8\n"), &index),
            0.0
        );
        // identical file
        assert_eq!(
            line_overlap_ratio(&file("c.py", "x = 1\ny = 2\nz = 3\n"), &index),
            1.0
        );
        // 10 non-blank lines, 3 present: ratio 0.3; indentation is trimmed
        // away and blank lines are not counted
        let text = "  x = 1\ny = 2\n\nz = 3\na4\na5\na6\na7\na8\na9\na10\n";
        assert_eq!(line_overlap_ratio(&file("d.py", text), &index), 0.3);
        // blank-only file
        assert_eq!(line_overlap_ratio(&file("e.py", "\n  \n"), &index), 0.0);
    }

    #[test]
    fn dedup_removes_above_threshold_only() {
        let train = vec![file("t0.py", "a = 1\nb = 2\nc = 3\nd = 4\n")];
        // 0.30: 3 of 10 lines shared -> removed; 0.20: 1 of 5 -> kept;
        // 0.25 exactly: 1 of 4 -> kept (strict inequality)
        let v30 = file("v30.py", "a = 1\nb = 2\nc = 3\nn0\nn1\nn2\nn3\nn4\nn5\nn6\n");
        let v20 = file("v20.py", "a = 1\nm0\nm1\nm2\nm3\n");
        let v25 = file("v25.py", "a = 1\nk0\nk1\nk2\n");
        let split = DatasetSplit {
            train,
            validation: vec![v30.clone(), v20.clone()],
            test: vec![v25.clone()],
            seed: 0,
            threshold: 0.25,
        };
        let (filtered, records) = dedup_filter(split);
        assert_eq!(filtered.validation, vec![v20]);
        assert_eq!(filtered.test, vec![v25]);
        assert_eq!(filtered.train.len(), 1);
        let rec = |p: &str| records.iter().find(|r| r.path.ends_with(p)).unwrap();
        assert!(!rec("v30.py").kept);
        assert_eq!(rec("v30.py").ratio, Some(0.3));
        assert!(rec("v20.py").kept);
        assert!(rec("v25.py").kept);
        assert_eq!(rec("v25.py").ratio, Some(0.25));
        assert!(rec("t0.py").kept);
        assert_eq!(rec("t0.py").ratio, None);
        // post-filter, every surviving file is at or under the threshold
        let index = LineIndex::build(&filtered.train);
        for f in filtered.validation.iter().chain(&filtered.test) {
            assert!(line_overlap_ratio(f, &index) <= filtered.threshold);
        }
    }

    #[test]
    fn manifest_is_one_tab_separated_row_per_file() {
        let records = vec![
            ManifestRecord {
                split: SplitName::Train,
                path: "a.py".into(),
                hash: "00ff".into(),
                ratio: None,
                kept: true,
            },
            ManifestRecord {
                split: SplitName::Validation,
                path: "b.py".into(),
                hash: "ab12".into(),
                ratio: Some(0.3),
                kept: false,
            },
        ];
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("manifest.tsv");
        write_manifest(&path, &records).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(
            text,
            "train\ta.py\t00ff\t-\tkept\nvalidation\tb.py\tab12\t0.3000\tremoved\n"
        );
        let back = read_manifest(&path).unwrap();
        assert_eq!(
            back,
            vec![
                ManifestRecord {
                    split: SplitName::Train,
                    path: "a.py".into(),
                    hash: "00ff".into(),
                    ratio: None,
                    kept: true,
                },
                ManifestRecord {
                    split: SplitName::Validation,
                    path: "b.py".into(),
                    hash: "ab12".into(),
                    ratio: Some(0.3),
                    kept: false,
                },
            ]
        );
    }

    #[test]
    fn malformed_manifest_lines_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("manifest.tsv");
        for bad in [
            "train\ta.py\t00ff\t-",
            "weird\ta.py\t00ff\t-\tkept",
            "train\ta.py\t00ff\tnope\tkept",
            "train\ta.py\t00ff\t-\tmaybe",
        ] {
            std::fs::write(&path, format!("{bad}\n")).unwrap();
            assert!(read_manifest(&path).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn ingest_filters_by_extension_and_sorts() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::create_dir(dir.path().join("sub")).unwrap();
        std::fs::write(dir.path().join("b.py"), "b\n").unwrap();
        std::fs::write(dir.path().join("a.py"), "a\n").unwrap();
        std::fs::write(dir.path().join("notes.txt"), "skip\n").unwrap();
        std::fs::write(dir.path().join("sub/c.py"), "c\n").unwrap();
        let files = ingest(dir.path(), "py").unwrap();
        let names: Vec<String> = files
            .iter()
            .map(|f| f.path.file_name().unwrap().to_string_lossy().into_owned())
            .collect();
        assert_eq!(names, vec!["a.py", "b.py", "c.py"]);
    }

    #[test]
    fn joined_text_orders_by_path_with_newline_separator() {
        let files = vec![file("z.py", "last\n"), file("a.py", "first\n")];
        assert_eq!(joined_text(&files), "first\n\nlast\n");
    }

    #[test]
    fn thousand_tokens_batch_two_seq_hundred_gives_four_batches() {
        let ids: Vec<u32> = (0..1000).collect();
        let s = SegmentStream::new(&ids, 100, 2).unwrap();
        assert_eq!(s.num_batches(), 4);
        // row 0 follows stream 0 (tokens 0..500), row 1 stream 1 (500..1000)
        let b0 = s.batch(0);
        assert_eq!(b0.inputs[0], 0);
        assert_eq!(b0.inputs[100], 500);
        assert_eq!(b0.stream_id, vec![0, 1]);
        assert_eq!(b0.is_stream_start, vec![true, true]);
        let b1 = s.batch(1);
        assert_eq!(b1.inputs[0], 100);
        assert!(!b1.is_stream_start[0]);
    }

    #[test]
    fn single_stream_of_512_yields_one_256_segment() {
        let ids: Vec<u32> = (0..512).collect();
        let s = SegmentStream::new(&ids, 256, 1).unwrap();
        assert_eq!(s.num_batches(), 1);
        let b = s.batch(0);
        assert_eq!(b.inputs.len(), 256);
        assert_eq!(b.targets[255], 256);
    }

    #[test]
    fn targets_are_inputs_shifted_by_one_across_batches() {
        let ids: Vec<u32> = (0..1000).collect();
        let s = SegmentStream::new(&ids, 100, 2).unwrap();
        for i in 0..s.num_batches() {
            let b = s.batch(i);
            for row in 0..2 {
                for t in 0..99 {
                    assert_eq!(b.targets[row * 100 + t], b.inputs[row * 100 + t + 1]);
                }
            }
            if i + 1 < s.num_batches() {
                let next = s.batch(i + 1);
                for row in 0..2 {
                    // final target is the next segment's first input
                    assert_eq!(b.targets[row * 100 + 99], next.inputs[row * 100]);
                }
            }
        }
    }

    #[test]
    fn concatenated_inputs_reproduce_each_stream_prefix() {
        let ids: Vec<u32> = (0..1000).collect();
        let s = SegmentStream::new(&ids, 100, 2).unwrap();
        for stream in 0..2 {
            let mut got = Vec::new();
            for i in 0..s.num_batches() {
                let b = s.batch(i);
                got.extend_from_slice(&b.inputs[stream * 100..(stream + 1) * 100]);
            }
            let start = stream * 500;
            assert_eq!(got, ids[start..start + 400]);
        }
    }

    #[test]
    fn short_stream_is_an_error() {
        let ids: Vec<u32> = (0..513).collect();
        assert!(SegmentStream::new(&ids, 256, 2).is_err());
        assert!(SegmentStream::new(&ids, 256, 1).is_ok());
    }

    proptest! {
        #[test]
        fn split_is_a_partition_of_unique_files(n in 10usize..60, seed in 0u64..1000) {
            let files = synthetic_corpus(n);
            let split = split_corpus(files.clone(), (0.8, 0.1, 0.1), seed).unwrap();
            let mut seen: Vec<&PathBuf> = split
                .train
                .iter()
                .chain(&split.validation)
                .chain(&split.test)
                .map(|f| &f.path)
                .collect();
            prop_assert_eq!(seen.len(), n);
            seen.sort();
            seen.dedup();
            prop_assert_eq!(seen.len(), n);
        }

        #[test]
        fn stream_counts_match_floor_arithmetic(
            len in 32usize..600,
            seq in 1usize..24,
            batch in 1usize..5,
        ) {
            let ids: Vec<u32> = (0..len as u32).collect();
            match SegmentStream::new(&ids, seq, batch) {
                Ok(s) => {
                    prop_assert!(len >= batch * (seq + 1));
                    prop_assert_eq!(s.num_batches(), (len / batch - 1) / seq);
                    prop_assert!(s.num_batches() >= 1);
                }
                Err(_) => prop_assert!(len < batch * (seq + 1)),
            }
        }
    }
}
