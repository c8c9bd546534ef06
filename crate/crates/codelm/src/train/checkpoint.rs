//! Binary checkpoint format.
//!
//! Layout: magic `CXLM`, a little-endian `u32` format version, one
//! length-prefixed UTF-8 metadata block of `key = value` lines, then named
//! raw arrays (name, dims, payload of little-endian scalars) in manifest
//! order: parameters, first moments, second moments, recurrent memory.
//!
//! The snapshot deliberately includes the recurrent memory and the dropout
//! rng state. Parameters and optimizer moments alone would resume training
//! at the right loss to several decimals, but not bit-for-bit mid-epoch;
//! with them, the continuation is indistinguishable from an uninterrupted
//! run. Writes go to a sibling temp file first and are renamed into place,
//! so a crash can leave stale files but never half-written ones.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rand_chacha::ChaCha8Rng;

use crate::model::{MemoryState, Model, ModelConfig, PosEncoding};
use crate::tensor::{Parameter, Scalar, Tensor};
use crate::train::{AdamState, TrainSchedule};
use crate::{Error, Result};

pub const MAGIC: &[u8; 4] = b"CXLM";
pub const VERSION: u32 = 1;

/// Serialized dropout-rng position: ChaCha8 is fully described by its seed,
/// stream, and word position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngState {
    pub seed: [u8; 32],
    pub word_pos: u128,
    pub stream: u64,
}

impl RngState {
    pub fn capture(rng: &ChaCha8Rng) -> Self {
        RngState {
            seed: rng.get_seed(),
            word_pos: rng.get_word_pos(),
            stream: rng.get_stream(),
        }
    }

    pub fn restore(&self) -> ChaCha8Rng {
        let mut rng = <ChaCha8Rng as rand::SeedableRng>::from_seed(self.seed);
        rng.set_stream(self.stream);
        rng.set_word_pos(self.word_pos);
        rng
    }
}

/// Everything a [`super::Trainer`] needs to continue a run.
#[derive(Debug)]
pub struct Checkpoint<T> {
    pub config: ModelConfig,
    pub params: Vec<Parameter<T>>,
    pub adam: AdamState<T>,
    pub iteration: u64,
    pub best_val: f64,
    pub schedule: TrainSchedule,
    pub clip_norm: f64,
    pub seed: u64,
    pub vocab_hash: String,
    pub rng: RngState,
    pub memory: MemoryState<T>,
    /// Batch size of the stream this run was cut into; memory shapes and
    /// the derived stream position only make sense with the same value.
    pub batch: usize,
}

fn metadata_string<T: Scalar>(cp: &Checkpoint<T>) -> String {
    let c = &cp.config;
    let s = &cp.schedule;
    let mut out = String::new();
    let mut kv = |k: &str, v: String| {
        out.push_str(k);
        out.push_str(" = ");
        out.push_str(&v);
        out.push('\n');
    };
    kv("dtype", T::DTYPE.into());
    kv("arch", c.arch.name().into());
    kv("depth", c.depth.to_string());
    kv("hidden", c.hidden.to_string());
    kv("heads", c.heads.to_string());
    kv("ffd_inner", c.ffd_inner.to_string());
    kv("vocab_size", c.vocab_size.to_string());
    kv("seq_len", c.seq_len.to_string());
    kv("mem_len", c.mem_len.to_string());
    kv("dropout", c.dropout.to_string());
    kv("pos_encoding", c.pos_encoding.name().into());
    kv("iteration", cp.iteration.to_string());
    kv("best_val", cp.best_val.to_string());
    kv("batch", cp.batch.to_string());
    kv("adam_t", cp.adam.t.to_string());
    kv("adam_beta1", cp.adam.beta1.to_string());
    kv("adam_beta2", cp.adam.beta2.to_string());
    kv("adam_eps", cp.adam.eps.to_string());
    kv("lr_floor", s.lr_floor.to_string());
    kv("lr_peak", s.lr_peak.to_string());
    kv("warmup_iters", s.warmup_iters.to_string());
    kv("total_iters", s.total_iters.to_string());
    kv("epoch_iters", s.epoch_iters.to_string());
    kv("clip_norm", cp.clip_norm.to_string());
    kv("seed", cp.seed.to_string());
    kv("vocab_hash", cp.vocab_hash.clone());
    kv("rng_seed", hex(&cp.rng.seed));
    kv("rng_word_pos", cp.rng.word_pos.to_string());
    kv("rng_stream", cp.rng.stream.to_string());
    out
}

const METADATA_KEYS: &[&str] = &[
    "dtype",
    "arch",
    "depth",
    "hidden",
    "heads",
    "ffd_inner",
    "vocab_size",
    "seq_len",
    "mem_len",
    "dropout",
    "pos_encoding",
    "iteration",
    "best_val",
    "batch",
    "adam_t",
    "adam_beta1",
    "adam_beta2",
    "adam_eps",
    "lr_floor",
    "lr_peak",
    "warmup_iters",
    "total_iters",
    "epoch_iters",
    "clip_norm",
    "seed",
    "vocab_hash",
    "rng_seed",
    "rng_word_pos",
    "rng_stream",
];

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn unhex32(s: &str) -> Result<[u8; 32]> {
    if s.len() != 64 || !s.is_char_boundary(2) {
        return Err(Error::Data("rng seed must be 64 hex digits".into()));
    }
    let mut out = [0u8; 32];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = u8::from_str_radix(&s[2 * i..2 * i + 2], 16)
            .map_err(|_| Error::Data("rng seed must be 64 hex digits".into()))?;
    }
    Ok(out)
}

fn push_array<T: Scalar>(buf: &mut Vec<u8>, name: &str, shape: &[usize], data: &[T]) {
    buf.extend_from_slice(&(name.len() as u32).to_le_bytes());
    buf.extend_from_slice(name.as_bytes());
    buf.extend_from_slice(&(shape.len() as u32).to_le_bytes());
    for &d in shape {
        buf.extend_from_slice(&(d as u64).to_le_bytes());
    }
    buf.extend_from_slice(&((data.len() * T::BYTES) as u64).to_le_bytes());
    for &v in data {
        v.write_le(buf);
    }
}

/// Serializes and atomically replaces `path`.
pub fn save<T: Scalar>(path: impl AsRef<Path>, cp: &Checkpoint<T>) -> Result<()> {
    let path = path.as_ref();
    let meta = metadata_string(cp);
    let n_arrays = 3 * cp.params.len() + cp.memory.layers.len() + cp.memory.cell.len();

    let mut buf = Vec::new();
    buf.extend_from_slice(MAGIC);
    buf.extend_from_slice(&VERSION.to_le_bytes());
    buf.extend_from_slice(&(meta.len() as u32).to_le_bytes());
    buf.extend_from_slice(meta.as_bytes());
    buf.extend_from_slice(&(n_arrays as u32).to_le_bytes());
    for p in &cp.params {
        push_array(&mut buf, p.name(), p.value().shape(), p.value().data());
    }
    for (p, m) in cp.params.iter().zip(&cp.adam.m) {
        push_array(&mut buf, &format!("adam.m.{}", p.name()), p.value().shape(), m);
    }
    for (p, v) in cp.params.iter().zip(&cp.adam.v) {
        push_array(&mut buf, &format!("adam.v.{}", p.name()), p.value().shape(), v);
    }
    for (l, t) in cp.memory.layers.iter().enumerate() {
        push_array(&mut buf, &format!("memory.layer{l}"), t.shape(), t.data());
    }
    for (l, t) in cp.memory.cell.iter().enumerate() {
        push_array(&mut buf, &format!("memory.cell{l}"), t.shape(), t.data());
    }

    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    let tmp = tmp_path(path);
    fs::write(&tmp, &buf)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn tmp_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_os_string();
    name.push(".tmp");
    PathBuf::from(name)
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.pos + n > self.bytes.len() {
            return Err(Error::Data("truncated checkpoint".into()));
        }
        let slice = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(slice)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn done(&self) -> bool {
        self.pos == self.bytes.len()
    }
}

struct NamedArray<T> {
    name: String,
    tensor: Tensor<T>,
}

fn read_array<T: Scalar>(r: &mut Reader) -> Result<NamedArray<T>> {
    let name_len = r.u32()? as usize;
    if name_len > 4096 {
        return Err(Error::Data("implausible array name length".into()));
    }
    let name = std::str::from_utf8(r.take(name_len)?)
        .map_err(|_| Error::Data("array name is not UTF-8".into()))?
        .to_string();
    let ndim = r.u32()? as usize;
    if ndim > 8 {
        return Err(Error::Data(format!("array {name} has {ndim} dimensions")));
    }
    let mut shape = Vec::with_capacity(ndim);
    for _ in 0..ndim {
        shape.push(r.u64()? as usize);
    }
    let numel: usize = shape.iter().product();
    let payload = r.u64()? as usize;
    if payload != numel * T::BYTES {
        return Err(Error::Data(format!(
            "array {name}: payload {payload} bytes does not match shape {shape:?}"
        )));
    }
    let raw = r.take(payload)?;
    let data: Vec<T> = raw.chunks_exact(T::BYTES).map(T::read_le).collect();
    Ok(NamedArray {
        name,
        tensor: Tensor::new(shape, data)?,
    })
}

fn parse_metadata(meta: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for line in meta.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Data(format!("malformed metadata line {line:?}")))?;
        let key = key.trim().to_string();
        if !METADATA_KEYS.contains(&key.as_str()) {
            return Err(Error::Data(format!("unknown checkpoint key {key:?}")));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

fn req<'m>(map: &'m BTreeMap<String, String>, key: &str) -> Result<&'m str> {
    map.get(key)
        .map(String::as_str)
        .ok_or_else(|| Error::Data(format!("checkpoint metadata is missing {key:?}")))
}

fn num<N: std::str::FromStr>(map: &BTreeMap<String, String>, key: &str) -> Result<N> {
    req(map, key)?
        .parse()
        .map_err(|_| Error::Data(format!("checkpoint key {key:?} has a malformed value")))
}

/// Parses and validates a checkpoint written by [`save`] with element type
/// `T`; a dtype mismatch is an error, not a silent cast.
pub fn load<T: Scalar>(path: impl AsRef<Path>) -> Result<Checkpoint<T>> {
    let bytes = fs::read(path.as_ref())?;
    let mut r = Reader { bytes: &bytes, pos: 0 };
    if r.take(4)? != MAGIC {
        return Err(Error::Data("not a checkpoint file (bad magic)".into()));
    }
    let version = r.u32()?;
    if version != VERSION {
        return Err(Error::Data(format!(
            "unsupported checkpoint version {version}, expected {VERSION}"
        )));
    }
    let meta_len = r.u32()? as usize;
    let meta = std::str::from_utf8(r.take(meta_len)?)
        .map_err(|_| Error::Data("checkpoint metadata is not UTF-8".into()))?;
    let map = parse_metadata(meta)?;

    let dtype = req(&map, "dtype")?;
    if dtype != T::DTYPE {
        return Err(Error::Data(format!(
            "checkpoint holds {dtype} data, expected {}",
            T::DTYPE
        )));
    }
    let config = ModelConfig {
        arch: crate::model::Arch::parse(req(&map, "arch")?)?,
        depth: num(&map, "depth")?,
        hidden: num(&map, "hidden")?,
        heads: num(&map, "heads")?,
        ffd_inner: num(&map, "ffd_inner")?,
        vocab_size: num(&map, "vocab_size")?,
        seq_len: num(&map, "seq_len")?,
        mem_len: num(&map, "mem_len")?,
        dropout: num(&map, "dropout")?,
        pos_encoding: PosEncoding::parse(req(&map, "pos_encoding")?)?,
    };
    config.validate()?;
    let schedule = TrainSchedule {
        lr_floor: num(&map, "lr_floor")?,
        lr_peak: num(&map, "lr_peak")?,
        warmup_iters: num(&map, "warmup_iters")?,
        total_iters: num(&map, "total_iters")?,
        epoch_iters: num(&map, "epoch_iters")?,
    };
    let rng = RngState {
        seed: unhex32(req(&map, "rng_seed")?)?,
        word_pos: num(&map, "rng_word_pos")?,
        stream: num(&map, "rng_stream")?,
    };

    let n_arrays = r.u32()? as usize;
    let mut params: Vec<Parameter<T>> = Vec::new();
    let mut moments: BTreeMap<String, Tensor<T>> = BTreeMap::new();
    let mut mem_layers: BTreeMap<usize, Tensor<T>> = BTreeMap::new();
    let mut mem_cells: BTreeMap<usize, Tensor<T>> = BTreeMap::new();
    for _ in 0..n_arrays {
        let arr = read_array::<T>(&mut r)?;
        if let Some(rest) = arr.name.strip_prefix("memory.layer") {
            let idx: usize = rest
                .parse()
                .map_err(|_| Error::Data(format!("bad memory array name {:?}", arr.name)))?;
            mem_layers.insert(idx, arr.tensor);
        } else if let Some(rest) = arr.name.strip_prefix("memory.cell") {
            let idx: usize = rest
                .parse()
                .map_err(|_| Error::Data(format!("bad memory array name {:?}", arr.name)))?;
            mem_cells.insert(idx, arr.tensor);
        } else if arr.name.starts_with("adam.") {
            moments.insert(arr.name, arr.tensor);
        } else {
            params.push(Parameter::new(arr.name, arr.tensor));
        }
    }
    if !r.done() {
        return Err(Error::Data("trailing bytes after checkpoint arrays".into()));
    }

    let mut m = Vec::with_capacity(params.len());
    let mut v = Vec::with_capacity(params.len());
    for p in &params {
        for (target, prefix) in [(&mut m, "adam.m."), (&mut v, "adam.v.")] {
            let key = format!("{prefix}{}", p.name());
            let tensor = moments
                .remove(&key)
                .ok_or_else(|| Error::Data(format!("checkpoint is missing {key}")))?;
            if tensor.shape() != p.value().shape() {
                return Err(Error::Data(format!(
                    "{key} shape {:?} does not match parameter {:?}",
                    tensor.shape(),
                    p.value().shape()
                )));
            }
            target.push(tensor.into_data());
        }
    }
    if let Some(stray) = moments.keys().next() {
        return Err(Error::Data(format!(
            "optimizer array {stray} matches no parameter"
        )));
    }
    let collect_indexed = |map: BTreeMap<usize, Tensor<T>>, what: &str| -> Result<Vec<Tensor<T>>> {
        let n = map.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            match map.get(&i) {
                Some(t) => out.push(t.clone()),
                None => return Err(Error::Data(format!("memory {what} indices have a gap"))),
            }
        }
        Ok(out)
    };
    let memory = MemoryState {
        layers: collect_indexed(mem_layers, "layer")?,
        cell: collect_indexed(mem_cells, "cell")?,
    };

    Ok(Checkpoint {
        adam: AdamState {
            beta1: num(&map, "adam_beta1")?,
            beta2: num(&map, "adam_beta2")?,
            eps: num(&map, "adam_eps")?,
            t: num(&map, "adam_t")?,
            m,
            v,
        },
        config,
        params,
        iteration: num(&map, "iteration")?,
        best_val: num(&map, "best_val")?,
        schedule,
        clip_norm: num(&map, "clip_norm")?,
        seed: num(&map, "seed")?,
        vocab_hash: req(&map, "vocab_hash")?.to_string(),
        rng,
        memory,
        batch: num(&map, "batch")?,
    })
}

/// Convenience for inference-only consumers: just the model.
pub fn load_model<T: Scalar>(path: impl AsRef<Path>) -> Result<(Model<T>, String)> {
    let cp = load::<T>(path)?;
    let hash = cp.vocab_hash.clone();
    Ok((Model::from_params(cp.config, cp.params)?, hash))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{RngCore, SeedableRng};

    fn sample_checkpoint(seed: u64) -> Checkpoint<f32> {
        let mut cfg = ModelConfig::txl(13);
        cfg.depth = 2;
        cfg.hidden = 8;
        cfg.heads = 2;
        cfg.ffd_inner = 16;
        cfg.seq_len = 4;
        cfg.mem_len = 4;
        let model = Model::<f32>::new(cfg.clone(), seed).unwrap();
        let mut adam = AdamState::new(model.params());
        adam.t = 17;
        for m in adam.m.iter_mut().chain(adam.v.iter_mut()) {
            for (i, x) in m.iter_mut().enumerate() {
                *x = (i as f32 * 0.01).sin();
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
        rng.next_u64();
        rng.next_u64();
        rng.next_u32();
        let memory = MemoryState {
            layers: vec![Tensor::full(&[8, 8], 0.25f32), Tensor::full(&[8, 8], -1.5)],
            cell: Vec::new(),
        };
        Checkpoint {
            params: model
                .params()
                .iter()
                .map(|p| Parameter::new(p.name().to_string(), p.value().clone()))
                .collect(),
            config: cfg,
            adam,
            iteration: 707,
            best_val: 1.234567890123,
            schedule: TrainSchedule::default(),
            clip_norm: 0.1,
            seed: 99,
            vocab_hash: "deadbeef".into(),
            rng: RngState::capture(&rng),
            memory,
            batch: 2,
        }
    }

    #[test]
    fn roundtrip_is_bitwise() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.cxlm");
        let cp = sample_checkpoint(5);
        save(&path, &cp).unwrap();
        let back = load::<f32>(&path).unwrap();

        assert_eq!(back.config, cp.config);
        assert_eq!(back.iteration, 707);
        assert_eq!(back.best_val.to_bits(), cp.best_val.to_bits());
        assert_eq!(back.schedule, cp.schedule);
        assert_eq!(back.vocab_hash, "deadbeef");
        assert_eq!(back.batch, 2);
        assert_eq!(back.adam.t, 17);
        for (a, b) in back.params.iter().zip(&cp.params) {
            assert_eq!(a.name(), b.name());
            assert_eq!(a.value().shape(), b.value().shape());
            let bits = |t: &Tensor<f32>| t.data().iter().map(|x| x.to_bits()).collect::<Vec<_>>();
            assert_eq!(bits(a.value()), bits(b.value()));
        }
        assert_eq!(back.adam.m, cp.adam.m);
        assert_eq!(back.adam.v, cp.adam.v);
        assert_eq!(back.memory.layers, cp.memory.layers);

        // The restored rng continues exactly where the captured one would.
        let mut original = cp.rng.restore();
        let mut restored = back.rng.restore();
        for _ in 0..16 {
            assert_eq!(original.next_u64(), restored.next_u64());
        }
        assert!(!dir.path().join("a.cxlm.tmp").exists());
    }

    #[test]
    fn dtype_mismatch_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.cxlm");
        save(&path, &sample_checkpoint(1)).unwrap();
        let err = load::<f64>(&path).unwrap_err().to_string();
        assert!(err.contains("f32"), "got {err}");
    }

    #[test]
    fn corrupt_magic_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.cxlm");
        save(&path, &sample_checkpoint(2)).unwrap();
        let mut bytes = fs::read(&path).unwrap();
        bytes[0] = b'X';
        fs::write(&path, &bytes).unwrap();
        assert!(load::<f32>(&path).is_err());
    }

    #[test]
    fn future_version_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.cxlm");
        save(&path, &sample_checkpoint(3)).unwrap();
        let mut bytes = fs::read(&path).unwrap();
        bytes[4] = 2;
        fs::write(&path, &bytes).unwrap();
        let err = load::<f32>(&path).unwrap_err().to_string();
        assert!(err.contains("version"), "got {err}");
    }

    #[test]
    fn truncated_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.cxlm");
        save(&path, &sample_checkpoint(4)).unwrap();
        let bytes = fs::read(&path).unwrap();
        for keep in [3usize, 7, 40, bytes.len() - 9] {
            fs::write(&path, &bytes[..keep]).unwrap();
            assert!(load::<f32>(&path).is_err(), "kept {keep} bytes");
        }
    }

    #[test]
    fn unknown_metadata_key_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.cxlm");
        save(&path, &sample_checkpoint(6)).unwrap();
        let mut bytes = fs::read(&path).unwrap();
        let needle = b"adam_t ";
        let at = bytes
            .windows(needle.len())
            .position(|w| w == needle)
            .unwrap();
        bytes[at..at + 6].copy_from_slice(b"adam_x");
        fs::write(&path, &bytes).unwrap();
        let err = load::<f32>(&path).unwrap_err().to_string();
        assert!(err.contains("adam_x") || err.contains("adam_t"), "got {err}");
    }

    #[test]
    fn lstm_cell_state_roundtrips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.cxlm");
        let mut cp = sample_checkpoint(7);
        cp.config = {
            let mut c = ModelConfig::lstm(13);
            c.depth = 2;
            c.hidden = 8;
            c.seq_len = 4;
            c
        };
        let model = Model::<f32>::new(cp.config.clone(), 7).unwrap();
        cp.params = model
            .params()
            .iter()
            .map(|p| Parameter::new(p.name().to_string(), p.value().clone()))
            .collect();
        cp.adam = AdamState::new(model.params());
        cp.memory = MemoryState {
            layers: vec![Tensor::full(&[2, 8], 0.5f32); 2],
            cell: vec![Tensor::full(&[2, 8], -0.5f32); 2],
        };
        save(&path, &cp).unwrap();
        let back = load::<f32>(&path).unwrap();
        assert_eq!(back.memory.cell, cp.memory.cell);
        assert_eq!(back.memory.layers, cp.memory.layers);
    }
}
