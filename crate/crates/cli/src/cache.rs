//! On-disk cache of representation series.
//!
//! Each tuple owns `<key>.bin` (order as u64, then the i64 coefficients, all
//! little endian) and `<key>.sha256` holding the hex digest of the `.bin`
//! bytes. An entry whose digest does not match is ignored and rewritten.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use sha2::{Digest, Sha256};
use univsum::{rep_series, Series, TernaryTuple};

pub struct SeriesCache {
    dir: PathBuf,
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn encode(s: &Series) -> Vec<u8> {
    let mut bytes = Vec::with_capacity(8 * (s.coeffs().len() + 1));
    bytes.extend_from_slice(&(s.order() as u64).to_le_bytes());
    for c in s.coeffs() {
        bytes.extend_from_slice(&c.to_le_bytes());
    }
    bytes
}

fn decode(bytes: &[u8]) -> Option<Series> {
    let (head, body) = bytes.split_at_checked(8)?;
    let order = u64::from_le_bytes(head.try_into().ok()?) as usize;
    if body.len() != 8 * (order + 1) {
        return None;
    }
    let coeffs = body
        .chunks_exact(8)
        .map(|c| i64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    Series::from_coeffs(coeffs).ok()
}

impl SeriesCache {
    pub fn open(dir: &Path) -> anyhow::Result<Self> {
        fs::create_dir_all(dir).with_context(|| format!("creating cache dir {}", dir.display()))?;
        Ok(SeriesCache {
            dir: dir.to_path_buf(),
        })
    }

    /// Keyed by the standard form, so sign and order variants share an entry.
    fn paths(&self, t: &TernaryTuple) -> (PathBuf, PathBuf) {
        let key = &digest(t.standard().to_string().as_bytes())[..16];
        (
            self.dir.join(format!("{key}.bin")),
            self.dir.join(format!("{key}.sha256")),
        )
    }

    /// A verified entry of order at least `order`, truncated to `order`.
    pub fn load(&self, t: &TernaryTuple, order: usize) -> Option<Series> {
        let (bin, sum) = self.paths(t);
        let bytes = fs::read(bin).ok()?;
        let stored = fs::read_to_string(sum).ok()?;
        if stored.trim() != digest(&bytes) {
            return None;
        }
        let s = decode(&bytes)?;
        (s.order() >= order)
            .then(|| s.truncate(order).ok())
            .flatten()
    }

    pub fn store(&self, t: &TernaryTuple, s: &Series) -> anyhow::Result<()> {
        let (bin, sum) = self.paths(t);
        let bytes = encode(s);
        fs::write(&bin, &bytes)?;
        fs::write(&sum, digest(&bytes))?;
        Ok(())
    }

    pub fn rep_series(&self, t: &TernaryTuple, order: usize) -> anyhow::Result<Series> {
        if let Some(s) = self.load(t, order) {
            return Ok(s);
        }
        let s = rep_series::<i64>(t, order)?;
        self.store(t, &s)?;
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_tamper() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SeriesCache::open(dir.path()).unwrap();
        let t = TernaryTuple::from_array([3, 1, 5, 3, 2, 0]).unwrap();
        let fresh = rep_series::<i64>(&t, 300).unwrap();
        assert!(cache.load(&t, 300).is_none());
        assert_eq!(cache.rep_series(&t, 300).unwrap(), fresh);
        assert_eq!(cache.load(&t, 300).unwrap(), fresh);
        assert_eq!(cache.load(&t, 100).unwrap(), fresh.truncate(100).unwrap());
        assert!(cache.load(&t, 301).is_none());

        let (bin, _) = cache.paths(&t);
        let mut bytes = fs::read(&bin).unwrap();
        bytes[20] ^= 1;
        fs::write(&bin, bytes).unwrap();
        assert!(cache.load(&t, 300).is_none());
        assert_eq!(cache.rep_series(&t, 300).unwrap(), fresh);
    }
}
