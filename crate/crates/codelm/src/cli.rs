//! Command-line interface.
//!
//! Six subcommands cover the pipeline: `ingest` (split + dedup manifest),
//! `tokenize` (vocabulary file), `train` (checkpoints + metrics CSV),
//! `eval` (score the test split), `bench` (normalized per-iteration
//! timing), `sample` (generate text). Settings resolve in three layers:
//! built-in defaults, then a `--config` file of `key = value` lines, then
//! explicit flags. Process exit codes: 0 success, 1 usage or bad
//! configuration, 2 unusable data, 3 numeric failure.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::corpus::{self, SegmentStream, SourceFile, SplitName};
use crate::eval;
use crate::model::{Arch, MemoryState, Model, ModelConfig};
use crate::tensor::tape::Tape;
use crate::tokenizer::{TokenStream, VocabKind, Vocabulary, UNK_ID};
use crate::train::{checkpoint, MetricsWriter, TrainOptions, TrainSchedule, Trainer};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "codelm",
    version,
    about = "Train and evaluate next-token models over source code"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan the corpus directory, split 80/10/10, drop near-duplicate
    /// validation/test files, and write the manifest.
    Ingest(CommonArgs),
    /// Build a character or subword vocabulary from the train split.
    Tokenize(CommonArgs),
    /// Train a model over the manifest's train split.
    Train(CommonArgs),
    /// Score the test split with the best checkpoint.
    Eval(CommonArgs),
    /// Compare per-iteration training time across architectures.
    Bench(CommonArgs),
    /// Generate text from the best checkpoint.
    Sample(SampleArgs),
}

/// Flags shared by every subcommand. Each one overrides the matching
/// config-file key; unset flags fall back to the file, then to defaults.
#[derive(Args, Default)]
struct CommonArgs {
    /// Config file of `key = value` lines (`#` starts a comment).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Architecture: txl, lstm, or gru.
    #[arg(long)]
    arch: Option<String>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    hidden: Option<usize>,
    #[arg(long)]
    heads: Option<usize>,
    /// Feed-forward inner width; defaults to 4x hidden.
    #[arg(long)]
    ffd_inner: Option<usize>,
    #[arg(long)]
    seq_len: Option<usize>,
    #[arg(long)]
    mem_len: Option<usize>,
    /// Vocabulary kind: char or bpe.
    #[arg(long)]
    vocab: Option<String>,
    /// Subword vocabulary budget (ignored for char).
    #[arg(long)]
    vocab_size: Option<usize>,
    #[arg(long)]
    epochs: Option<usize>,
    #[arg(long)]
    iters_per_epoch: Option<usize>,
    #[arg(long)]
    lr_peak: Option<f64>,
    #[arg(long)]
    lr_floor: Option<f64>,
    /// Linear warmup length in iterations.
    #[arg(long)]
    warmup: Option<usize>,
    /// Global gradient-norm ceiling.
    #[arg(long)]
    clip: Option<f64>,
    #[arg(long)]
    dropout: Option<f64>,
    #[arg(long)]
    batch: Option<usize>,
    /// Directory of source files to ingest.
    #[arg(long)]
    corpus_dir: Option<PathBuf>,
    /// Where manifests, vocabularies, checkpoints, and metrics land.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Line-overlap ratio above which validation/test files are dropped.
    #[arg(long)]
    threshold: Option<f64>,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Text the generation is conditioned on.
    #[arg(long)]
    prompt: String,
    /// Number of tokens to generate after the prompt.
    #[arg(long, default_value_t = 64)]
    length: usize,
    /// Softmax temperature; 0 picks the argmax at every step.
    #[arg(long, default_value_t = 1.0)]
    temperature: f64,
}

/// Fully resolved settings for one command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub arch: Arch,
    pub depth: usize,
    pub hidden: usize,
    pub heads: usize,
    /// `None` resolves to `4 * hidden` when the model is built.
    pub ffd_inner: Option<usize>,
    pub seq_len: usize,
    pub mem_len: usize,
    pub vocab: VocabKind,
    pub vocab_size: usize,
    pub epochs: usize,
    pub iters_per_epoch: usize,
    pub lr_peak: f64,
    pub lr_floor: f64,
    pub warmup: usize,
    pub clip: f64,
    pub dropout: f64,
    pub batch: usize,
    pub corpus_dir: PathBuf,
    pub out_dir: PathBuf,
    pub threshold: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            arch: Arch::Txl,
            depth: 4,
            hidden: 512,
            heads: 8,
            ffd_inner: None,
            seq_len: 256,
            mem_len: 256,
            vocab: VocabKind::Character,
            vocab_size: 1000,
            epochs: 50,
            iters_per_epoch: 512,
            lr_peak: 5e-4,
            lr_floor: 1e-6,
            warmup: 5120,
            clip: 0.1,
            dropout: 0.1,
            batch: 16,
            corpus_dir: PathBuf::from("data/corpus"),
            out_dir: PathBuf::from("out"),
            threshold: 0.25,
        }
    }
}

fn parse_vocab_kind(s: &str) -> Result<VocabKind> {
    match s {
        "char" => Ok(VocabKind::Character),
        "bpe" => Ok(VocabKind::Subword),
        other => Err(Error::Config(format!(
            "vocab must be 'char' or 'bpe', got {other:?}"
        ))),
    }
}

impl RunConfig {
    /// Apply one `key = value` setting from a config file.
    fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<N: std::str::FromStr>(key: &str, v: &str) -> Result<N> {
            v.parse()
                .map_err(|_| Error::Config(format!("bad value {v:?} for config key {key:?}")))
        }
        match key {
            "seed" => self.seed = num(key, value)?,
            "arch" => self.arch = Arch::parse(value)?,
            "depth" => self.depth = num(key, value)?,
            "hidden" => self.hidden = num(key, value)?,
            "heads" => self.heads = num(key, value)?,
            "ffd_inner" => self.ffd_inner = Some(num(key, value)?),
            "seq_len" => self.seq_len = num(key, value)?,
            "mem_len" => self.mem_len = num(key, value)?,
            "vocab" => self.vocab = parse_vocab_kind(value)?,
            "vocab_size" => self.vocab_size = num(key, value)?,
            "epochs" => self.epochs = num(key, value)?,
            "iters_per_epoch" => self.iters_per_epoch = num(key, value)?,
            "lr_peak" => self.lr_peak = num(key, value)?,
            "lr_floor" => self.lr_floor = num(key, value)?,
            "warmup" => self.warmup = num(key, value)?,
            "clip" => self.clip = num(key, value)?,
            "dropout" => self.dropout = num(key, value)?,
            "batch" => self.batch = num(key, value)?,
            "corpus_dir" => self.corpus_dir = PathBuf::from(value),
            "out_dir" => self.out_dir = PathBuf::from(value),
            "threshold" => self.threshold = num(key, value)?,
            other => return Err(Error::Config(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read config {}: {e}", path.display())))?;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("config line is not key = value: {line:?}")))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    fn apply_flags(&mut self, a: &CommonArgs) -> Result<()> {
        if let Some(v) = a.seed {
            self.seed = v;
        }
        if let Some(v) = &a.arch {
            self.arch = Arch::parse(v)?;
        }
        if let Some(v) = a.depth {
            self.depth = v;
        }
        if let Some(v) = a.hidden {
            self.hidden = v;
        }
        if let Some(v) = a.heads {
            self.heads = v;
        }
        if let Some(v) = a.ffd_inner {
            self.ffd_inner = Some(v);
        }
        if let Some(v) = a.seq_len {
            self.seq_len = v;
        }
        if let Some(v) = a.mem_len {
            self.mem_len = v;
        }
        if let Some(v) = &a.vocab {
            self.vocab = parse_vocab_kind(v)?;
        }
        if let Some(v) = a.vocab_size {
            self.vocab_size = v;
        }
        if let Some(v) = a.epochs {
            self.epochs = v;
        }
        if let Some(v) = a.iters_per_epoch {
            self.iters_per_epoch = v;
        }
        if let Some(v) = a.lr_peak {
            self.lr_peak = v;
        }
        if let Some(v) = a.lr_floor {
            self.lr_floor = v;
        }
        if let Some(v) = a.warmup {
            self.warmup = v;
        }
        if let Some(v) = a.clip {
            self.clip = v;
        }
        if let Some(v) = a.dropout {
            self.dropout = v;
        }
        if let Some(v) = a.batch {
            self.batch = v;
        }
        if let Some(v) = &a.corpus_dir {
            self.corpus_dir = v.clone();
        }
        if let Some(v) = &a.out_dir {
            self.out_dir = v.clone();
        }
        if let Some(v) = a.threshold {
            self.threshold = v;
        }
        Ok(())
    }

    /// Every setting as strings, in a fixed order; echoed into the metrics
    /// header so a run can be reconstructed from its outputs.
    pub fn pairs(&self) -> Vec<(String, String)> {
        let kv = |k: &str, v: String| (k.to_string(), v);
        vec![
            kv("seed", self.seed.to_string()),
            kv("arch", self.arch.name().to_string()),
            kv("depth", self.depth.to_string()),
            kv("hidden", self.hidden.to_string()),
            kv("heads", self.heads.to_string()),
            kv("ffd_inner", self.resolved_ffd_inner().to_string()),
            kv("seq_len", self.seq_len.to_string()),
            kv("mem_len", self.mem_len.to_string()),
            kv(
                "vocab",
                match self.vocab {
                    VocabKind::Character => "char".to_string(),
                    VocabKind::Subword => "bpe".to_string(),
                },
            ),
            kv("vocab_size", self.vocab_size.to_string()),
            kv("epochs", self.epochs.to_string()),
            kv("iters_per_epoch", self.iters_per_epoch.to_string()),
            kv("lr_peak", self.lr_peak.to_string()),
            kv("lr_floor", self.lr_floor.to_string()),
            kv("warmup", self.warmup.to_string()),
            kv("clip", self.clip.to_string()),
            kv("dropout", self.dropout.to_string()),
            kv("batch", self.batch.to_string()),
            kv("corpus_dir", self.corpus_dir.display().to_string()),
            kv("out_dir", self.out_dir.display().to_string()),
            kv("threshold", self.threshold.to_string()),
        ]
    }

    pub fn resolved_ffd_inner(&self) -> usize {
        self.ffd_inner.unwrap_or(4 * self.hidden)
    }

    fn manifest_path(&self) -> PathBuf {
        self.out_dir.join("manifest.tsv")
    }

    fn vocab_path(&self) -> PathBuf {
        self.out_dir.join("vocab.txt")
    }

    fn metrics_path(&self) -> PathBuf {
        self.out_dir.join("metrics.csv")
    }

    fn checkpoint_dir(&self) -> PathBuf {
        self.out_dir.join("checkpoints")
    }
}

fn resolve(common: &CommonArgs) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &common.config {
        cfg.apply_file(path)?;
    }
    cfg.apply_flags(common)?;
    Ok(cfg)
}

/// Entry point for the `codelm` binary.
pub fn run() -> Result<()> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return Ok(());
            }
            eprint!("{e}");
            return Err(Error::Config("invalid command line".into()));
        }
    };
    match &cli.command {
        Command::Ingest(a) => cmd_ingest(&resolve(a)?),
        Command::Tokenize(a) => cmd_tokenize(&resolve(a)?),
        Command::Train(a) => cmd_train(&resolve(a)?),
        Command::Eval(a) => cmd_eval(&resolve(a)?).map(|_| ()),
        Command::Bench(a) => cmd_bench(&resolve(a)?),
        Command::Sample(a) => {
            let cfg = resolve(&a.common)?;
            let text = generate_text(&cfg, &a.prompt, a.length, a.temperature)?;
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_ingest(cfg: &RunConfig) -> Result<()> {
    let files = corpus::ingest(&cfg.corpus_dir, corpus::DEFAULT_SOURCE_EXTENSION)?;
    let mut split = corpus::split_corpus(files, (0.8, 0.1, 0.1), cfg.seed)?;
    split.threshold = cfg.threshold;
    let (filtered, records) = corpus::dedup_filter(split);
    fs::create_dir_all(&cfg.out_dir)?;
    corpus::write_manifest(cfg.manifest_path(), &records)?;
    let removed = records.iter().filter(|r| !r.kept).count();
    println!(
        "ingested {} files: {} train, {} validation, {} test; {} dropped for overlap > {}",
        records.len(),
        filtered.train.len(),
        filtered.validation.len(),
        filtered.test.len(),
        removed,
        cfg.threshold,
    );
    println!("manifest: {}", cfg.manifest_path().display());
    Ok(())
}

struct SplitFiles {
    train: Vec<SourceFile>,
    validation: Vec<SourceFile>,
    test: Vec<SourceFile>,
}

/// Load the kept files named by the manifest, verifying content hashes so
/// a corpus edited after `ingest` is caught instead of silently retrained.
fn load_split(cfg: &RunConfig) -> Result<SplitFiles> {
    let records = corpus::read_manifest(cfg.manifest_path())?;
    let mut out = SplitFiles {
        train: Vec::new(),
        validation: Vec::new(),
        test: Vec::new(),
    };
    for r in records.into_iter().filter(|r| r.kept) {
        let text = fs::read_to_string(&r.path).map_err(|e| {
            Error::Data(format!("manifest names {}: {e}", r.path.display()))
        })?;
        let file = SourceFile::new(r.path.clone(), text);
        if file.content_hash_hex() != r.hash {
            return Err(Error::Data(format!(
                "{} changed since ingest (hash mismatch); re-run ingest",
                r.path.display()
            )));
        }
        match r.split {
            SplitName::Train => out.train.push(file),
            SplitName::Validation => out.validation.push(file),
            SplitName::Test => out.test.push(file),
        }
    }
    if out.train.is_empty() {
        return Err(Error::Data("manifest has no kept train files".into()));
    }
    Ok(out)
}

fn cmd_tokenize(cfg: &RunConfig) -> Result<()> {
    let splits = load_split(cfg)?;
    let texts = splits.train.iter().map(|f| f.text.as_str());
    let vocab = match cfg.vocab {
        VocabKind::Character => Vocabulary::build_char(texts)?,
        VocabKind::Subword => Vocabulary::train_bpe(texts, cfg.vocab_size)?,
    };
    vocab.save(cfg.vocab_path())?;
    println!(
        "built {} vocabulary of {} tokens from {} train files -> {}",
        match cfg.vocab {
            VocabKind::Character => "character",
            VocabKind::Subword => "subword",
        },
        vocab.size(),
        splits.train.len(),
        cfg.vocab_path().display(),
    );
    Ok(())
}

/// Encode files in manifest order, one source boundary per file.
fn encode_files(vocab: &Vocabulary, files: &[SourceFile]) -> TokenStream {
    let mut stream = TokenStream::default();
    for f in files {
        stream.push_source(&vocab.encode(&f.text).ids);
    }
    stream
}

fn model_config(cfg: &RunConfig, vocab_size: usize) -> ModelConfig {
    let mut mc = match cfg.arch {
        Arch::Txl => ModelConfig::txl(vocab_size),
        Arch::Lstm => ModelConfig::lstm(vocab_size),
        Arch::Gru => ModelConfig::gru(vocab_size),
    };
    mc.depth = cfg.depth;
    mc.hidden = cfg.hidden;
    mc.seq_len = cfg.seq_len;
    mc.dropout = cfg.dropout;
    if cfg.arch == Arch::Txl {
        mc.heads = cfg.heads;
        mc.mem_len = cfg.mem_len;
        mc.ffd_inner = cfg.resolved_ffd_inner();
    }
    mc
}

fn file_hash_hex(path: &Path) -> Result<String> {
    let bytes = fs::read(path)
        .map_err(|e| Error::Data(format!("cannot read {}: {e}", path.display())))?;
    let digest = Sha256::digest(&bytes);
    Ok(digest.iter().map(|b| format!("{b:02x}")).collect())
}

fn schedule_from(cfg: &RunConfig) -> TrainSchedule {
    TrainSchedule {
        lr_floor: cfg.lr_floor,
        lr_peak: cfg.lr_peak,
        warmup_iters: cfg.warmup,
        total_iters: cfg.epochs * cfg.iters_per_epoch,
        epoch_iters: cfg.iters_per_epoch,
    }
}

fn cmd_train(cfg: &RunConfig) -> Result<()> {
    let splits = load_split(cfg)?;
    let vocab = Vocabulary::load(cfg.vocab_path())?;
    let vocab_hash = file_hash_hex(&cfg.vocab_path())?;

    let train_ids = encode_files(&vocab, &splits.train);
    let val_ids = encode_files(&vocab, &splits.validation);
    let train_stream = SegmentStream::new(&train_ids.ids, cfg.seq_len, cfg.batch)?;
    let val_stream = if val_ids.is_empty() {
        None
    } else {
        Some(SegmentStream::new(&val_ids.ids, cfg.seq_len, cfg.batch)?)
    };

    let model = Model::<f32>::new(model_config(cfg, vocab.size()), cfg.seed)?;
    println!(
        "{} with {} parameters; {} train tokens, {} per epoch",
        eval::model_id(&model),
        model.count_parameters(),
        train_ids.len(),
        train_stream.tokens_per_epoch(),
    );

    let options = TrainOptions {
        schedule: schedule_from(cfg),
        clip_norm: cfg.clip,
        seed: cfg.seed,
        vocab_hash,
        checkpoint_dir: Some(cfg.checkpoint_dir()),
    };
    let mut trainer = Trainer::new(model, train_stream, val_stream, options)?;
    trainer.attach_metrics(MetricsWriter::create(cfg.metrics_path(), &cfg.pairs())?);

    for epoch in 0..cfg.epochs {
        let records = trainer.run(cfg.iters_per_epoch)?;
        let mean: f64 = records.iter().map(|r| r.loss).sum::<f64>() / records.len().max(1) as f64;
        let last = records.last().expect("epoch has iterations");
        println!(
            "epoch {:>3}: train loss {:.4} ({:.4} bpc), lr {:.3e}, grad norm {:.3}",
            epoch,
            mean,
            eval::bpc(mean)?,
            last.lr,
            last.grad_norm,
        );
    }
    if trainer.best_validation_loss().is_finite() {
        println!(
            "best validation loss {:.4} ({:.4} bpc); checkpoints in {}",
            trainer.best_validation_loss(),
            eval::bpc(trainer.best_validation_loss())?,
            cfg.checkpoint_dir().display(),
        );
    }
    println!("metrics: {}", cfg.metrics_path().display());
    Ok(())
}

/// Best checkpoint if validation ever ran, otherwise the latest.
fn find_checkpoint(cfg: &RunConfig) -> Result<PathBuf> {
    let best = cfg.checkpoint_dir().join("best.cxlm");
    if best.is_file() {
        return Ok(best);
    }
    let latest = cfg.checkpoint_dir().join("latest.cxlm");
    if latest.is_file() {
        return Ok(latest);
    }
    Err(Error::Data(format!(
        "no checkpoint under {}; run train first",
        cfg.checkpoint_dir().display()
    )))
}

fn load_checkpoint_model(cfg: &RunConfig) -> Result<(Model<f32>, Vocabulary)> {
    let path = find_checkpoint(cfg)?;
    let (model, stored_hash) = checkpoint::load_model::<f32>(&path)?;
    let vocab = Vocabulary::load(cfg.vocab_path())?;
    let vocab_hash = file_hash_hex(&cfg.vocab_path())?;
    if stored_hash != vocab_hash {
        return Err(Error::Data(format!(
            "checkpoint {} was trained with a different vocabulary than {}",
            path.display(),
            cfg.vocab_path().display(),
        )));
    }
    Ok((model, vocab))
}

fn cmd_eval(cfg: &RunConfig) -> Result<eval::EvalReport> {
    let (model, vocab) = load_checkpoint_model(cfg)?;
    let splits = load_split(cfg)?;
    let test_ids = encode_files(&vocab, &splits.test);
    let stream = SegmentStream::new(&test_ids.ids, model.config().seq_len, cfg.batch)?;
    let report = eval::evaluate(&model, &stream)?;
    println!("{report}");
    Ok(report)
}

/// The comparison set `bench` times: the attention model at the configured
/// depth and at double depth, plus both recurrent baselines.
fn bench_variants(cfg: &RunConfig, vocab_size: usize) -> Vec<(String, ModelConfig)> {
    let with_arch = |arch: Arch, depth: usize| {
        let mut c = cfg.clone();
        c.arch = arch;
        c.depth = depth;
        let mc = model_config(&c, vocab_size);
        (format!("{}-{}", arch.name(), depth), mc)
    };
    vec![
        with_arch(Arch::Txl, cfg.depth),
        with_arch(Arch::Gru, cfg.depth),
        with_arch(Arch::Lstm, cfg.depth),
        with_arch(Arch::Txl, cfg.depth * 2),
    ]
}

fn cmd_bench(cfg: &RunConfig) -> Result<()> {
    let splits = load_split(cfg)?;
    let vocab = Vocabulary::load(cfg.vocab_path())?;
    let train_ids = encode_files(&vocab, &splits.train);

    let mut entries = Vec::new();
    for (name, mc) in bench_variants(cfg, vocab.size()) {
        let model = Model::<f32>::new(mc, cfg.seed)?;
        let stream = SegmentStream::new(&train_ids.ids, cfg.seq_len, cfg.batch)?;
        let options = TrainOptions {
            schedule: schedule_from(cfg),
            clip_norm: cfg.clip,
            seed: cfg.seed,
            ..TrainOptions::default()
        };
        entries.push((name, Trainer::new(model, stream, None, options)?));
    }
    let results = eval::benchmark(&mut entries, 10, 30)?;
    println!("{:<10} {:>12} {:>12}", "model", "s/iter", "normalized");
    for r in &results {
        println!("{:<10} {:>12.4} {:>11.2}x", r.model, r.median_seconds, r.normalized);
    }
    Ok(())
}

/// Draw from `softmax(logits / temperature)`; temperature 0 is argmax.
fn choose_token(logits: &[f32], temperature: f64, rng: &mut ChaCha8Rng) -> u32 {
    if temperature == 0.0 {
        let mut best = 0usize;
        for (i, &v) in logits.iter().enumerate() {
            if v > logits[best] {
                best = i;
            }
        }
        return best as u32;
    }
    let scaled: Vec<f64> = logits.iter().map(|&v| v as f64 / temperature).collect();
    let max = scaled.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let weights: Vec<f64> = scaled.iter().map(|&v| (v - max).exp()).collect();
    let total: f64 = weights.iter().sum();
    let mut u = rng.gen::<f64>() * total;
    for (i, &w) in weights.iter().enumerate() {
        u -= w;
        if u <= 0.0 {
            return i as u32;
        }
    }
    (weights.len() - 1) as u32
}

/// Prompt + `length` generated ids, threading memory one token at a time.
fn generate_ids(
    model: &Model<f32>,
    vocab: &Vocabulary,
    prompt: &str,
    length: usize,
    temperature: f64,
    seed: u64,
) -> Result<Vec<u32>> {
    if !(temperature >= 0.0 && temperature.is_finite()) {
        return Err(Error::Config(format!(
            "temperature must be finite and non-negative, got {temperature}"
        )));
    }
    let mut ids = vocab.encode(prompt).ids;
    if ids.is_empty() {
        eprintln!("warning: empty prompt; starting from <unk>");
        ids.push(UNK_ID);
    } else if ids.iter().all(|&i| i == UNK_ID) {
        eprintln!("warning: prompt contains no known tokens; conditioning on <unk>");
    }
    if length == 0 {
        return Ok(ids);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut memory = MemoryState::initial(model.config(), 1);
    // No dropout at temperature-time, so this rng is never consulted.
    let mut dropout_rng = ChaCha8Rng::seed_from_u64(0);
    let feed = |token: u32, memory: &MemoryState<f32>, dropout_rng: &mut ChaCha8Rng| {
        let mut tape = Tape::new();
        let out = model.step(&mut tape, &[token], None, 1, memory, false, dropout_rng)?;
        let logits = tape.value(out.logits).data().to_vec();
        Ok::<_, Error>((logits, out.memory))
    };
    for &token in &ids[..ids.len() - 1] {
        let (_, next_memory) = feed(token, &memory, &mut dropout_rng)?;
        memory = next_memory;
    }
    let mut current = *ids.last().expect("ids is non-empty");
    for _ in 0..length {
        let (logits, next_memory) = feed(current, &memory, &mut dropout_rng)?;
        memory = next_memory;
        current = choose_token(&logits, temperature, &mut rng);
        ids.push(current);
    }
    Ok(ids)
}

fn generate_text(cfg: &RunConfig, prompt: &str, length: usize, temperature: f64) -> Result<String> {
    let (model, vocab) = load_checkpoint_model(cfg)?;
    let ids = generate_ids(&model, &vocab, prompt, length, temperature, cfg.seed)?;
    vocab.decode(&ids)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_file_sets_values_and_flags_override() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.conf");
        fs::write(
            &path,
            "# a comment\nhidden = 64\nbatch = 4   # trailing comment\narch = gru\n\n",
        )
        .unwrap();
        let args = CommonArgs {
            config: Some(path),
            hidden: Some(32),
            ..CommonArgs::default()
        };
        let cfg = resolve(&args).unwrap();
        assert_eq!(cfg.hidden, 32, "flag wins over file");
        assert_eq!(cfg.batch, 4, "file wins over default");
        assert_eq!(cfg.arch, Arch::Gru);
        assert_eq!(cfg.seed, 0, "default survives");
    }

    #[test]
    fn unknown_config_key_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.conf");
        fs::write(&path, "hiden = 64\n").unwrap();
        let args = CommonArgs {
            config: Some(path),
            ..CommonArgs::default()
        };
        let err = resolve(&args).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        assert!(err.to_string().contains("hiden"));
    }

    #[test]
    fn malformed_config_values_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        for bad in ["hidden = many\n", "just words\n", "vocab = word\n"] {
            let path = dir.path().join("run.conf");
            fs::write(&path, bad).unwrap();
            let args = CommonArgs {
                config: Some(path),
                ..CommonArgs::default()
            };
            assert!(resolve(&args).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn resolved_pairs_round_trip_through_a_config_file() {
        let mut cfg = RunConfig {
            hidden: 48,
            dropout: 0.05,
            arch: Arch::Lstm,
            vocab: VocabKind::Subword,
            ..RunConfig::default()
        };
        cfg.ffd_inner = Some(cfg.resolved_ffd_inner());
        let mut rebuilt = RunConfig::default();
        for (k, v) in cfg.pairs() {
            rebuilt.set(&k, &v).unwrap();
        }
        assert_eq!(rebuilt, cfg);
    }

    #[test]
    fn unknown_flags_fail_parsing() {
        assert!(Cli::try_parse_from(["codelm", "train", "--no-such-flag"]).is_err());
        assert!(Cli::try_parse_from(["codelm", "frobnicate"]).is_err());
        assert!(Cli::try_parse_from(["codelm", "train", "--hidden", "64"]).is_ok());
    }

    fn write_tiny_corpus(dir: &Path) {
        // Every line mentions the file index so no two files share a line
        // and the overlap filter keeps all of them.
        for i in 0..12 {
            let text = format!(
                "def fn{i}(x{i}):\n    y{i} = x{i} + {i}\n    if y{i} == {i}:\n        return y{i} * {i}\n    return y{i}\n\nprint(fn{i}({i}))\n"
            );
            fs::write(dir.join(format!("file{i:02}.py")), text).unwrap();
        }
    }

    fn tiny_run_config(root: &Path) -> RunConfig {
        RunConfig {
            seed: 1,
            depth: 1,
            hidden: 8,
            heads: 2,
            seq_len: 8,
            mem_len: 8,
            epochs: 1,
            iters_per_epoch: 4,
            warmup: 2,
            dropout: 0.0,
            batch: 1,
            corpus_dir: root.join("corpus"),
            out_dir: root.join("out"),
            ..RunConfig::default()
        }
    }

    #[test]
    fn pipeline_smoke_ingest_tokenize_train_eval_sample() {
        let dir = tempfile::tempdir().unwrap();
        fs::create_dir(dir.path().join("corpus")).unwrap();
        write_tiny_corpus(&dir.path().join("corpus"));
        let cfg = tiny_run_config(dir.path());

        cmd_ingest(&cfg).unwrap();
        assert!(cfg.manifest_path().is_file());

        cmd_tokenize(&cfg).unwrap();
        assert!(cfg.vocab_path().is_file());

        cmd_train(&cfg).unwrap();
        assert!(cfg.metrics_path().is_file());
        assert!(cfg.checkpoint_dir().join("latest.cxlm").is_file());
        assert!(cfg.checkpoint_dir().join("best.cxlm").is_file());
        let metrics = fs::read_to_string(cfg.metrics_path()).unwrap();
        assert!(metrics.starts_with("# seed = 1\n"));
        assert!(metrics.contains(crate::train::METRICS_HEADER));
        assert!(metrics.contains(",validation,"));

        let report = cmd_eval(&cfg).unwrap();
        assert!(report.loss.is_finite());
        assert!(report.token_count > 0);

        // Argmax sampling is deterministic; sampled output has exactly
        // prompt + length tokens; zero length echoes the prompt.
        let a = generate_text(&cfg, "def fn", 5, 0.0).unwrap();
        let b = generate_text(&cfg, "def fn", 5, 0.0).unwrap();
        assert_eq!(a, b);
        let (model, vocab) = load_checkpoint_model(&cfg).unwrap();
        let prompt_len = vocab.encode("def fn").ids.len();
        let ids = generate_ids(&model, &vocab, "def fn", 5, 0.8, 7).unwrap();
        assert_eq!(ids.len(), prompt_len + 5);
        let echoed = generate_ids(&model, &vocab, "def fn", 0, 1.0, 7).unwrap();
        assert_eq!(vocab.decode(&echoed).unwrap(), "def fn");
    }

    #[test]
    fn train_without_ingest_is_a_data_error() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = tiny_run_config(dir.path());
        let err = cmd_train(&cfg).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn eval_catches_vocabulary_swap() {
        let dir = tempfile::tempdir().unwrap();
        fs::create_dir(dir.path().join("corpus")).unwrap();
        write_tiny_corpus(&dir.path().join("corpus"));
        let cfg = tiny_run_config(dir.path());
        cmd_ingest(&cfg).unwrap();
        cmd_tokenize(&cfg).unwrap();
        cmd_train(&cfg).unwrap();
        // Rebuild the vocabulary with different contents.
        let vocab = Vocabulary::build_char(["completely different text 0123"]).unwrap();
        vocab.save(cfg.vocab_path()).unwrap();
        let err = cmd_eval(&cfg).unwrap_err();
        assert!(err.to_string().contains("different vocabulary"));
    }

    #[test]
    fn tampered_corpus_fails_the_manifest_hash_check() {
        let dir = tempfile::tempdir().unwrap();
        fs::create_dir(dir.path().join("corpus")).unwrap();
        write_tiny_corpus(&dir.path().join("corpus"));
        let cfg = tiny_run_config(dir.path());
        cmd_ingest(&cfg).unwrap();
        fs::write(cfg.corpus_dir.join("file00.py"), "edited\n").unwrap();
        let err = cmd_tokenize(&cfg).unwrap_err();
        assert!(err.to_string().contains("hash mismatch"));
    }

    #[test]
    fn bench_needs_prepared_data() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = tiny_run_config(dir.path());
        assert!(cmd_bench(&cfg).is_err());
    }

    #[test]
    fn argmax_choice_is_first_maximum() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(choose_token(&[0.1, 3.0, 3.0, -1.0], 0.0, &mut rng), 1);
    }

    #[test]
    fn sampled_choice_lands_in_range_and_respects_weights() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let logits = [0.0f32, 10.0, 0.0];
        let mut hits = [0usize; 3];
        for _ in 0..200 {
            hits[choose_token(&logits, 1.0, &mut rng) as usize] += 1;
        }
        assert!(hits[1] > 190, "distribution {hits:?}");
    }

    #[test]
    fn negative_temperature_is_rejected() {
        let vocab = Vocabulary::build_char(["abc"]).unwrap();
        let mut mc = ModelConfig::txl(vocab.size());
        mc.depth = 1;
        mc.hidden = 8;
        mc.heads = 2;
        mc.ffd_inner = 16;
        mc.seq_len = 4;
        mc.mem_len = 4;
        let model = Model::<f32>::new(mc, 0).unwrap();
        assert!(generate_ids(&model, &vocab, "a", 3, -1.0, 0).is_err());
    }
}
