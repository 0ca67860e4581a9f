//! Result cache for Betti computations, keyed by a content hash of the
//! canonical generator matrix, the method, and the artifact version.
//! Writes are atomic (write-temp-then-rename).

use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::json::CodeJson;

pub const CACHE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Hex digest identifying a computation.
pub fn cache_key(code: &CodeJson, method: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(CACHE_VERSION.as_bytes());
    hasher.update(b"|");
    hasher.update(method.as_bytes());
    hasher.update(b"|");
    hasher.update(serde_json::to_string(code).expect("serializable").as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{:02x}", b)).collect()
}

pub fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{}.json", key))
}

pub fn read(dir: &Path, key: &str) -> Option<Vec<u8>> {
    std::fs::read(cache_path(dir, key)).ok()
}

pub fn write(dir: &Path, key: &str, bytes: &[u8]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(cache_path(dir, key))
        .map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::simplex;

    #[test]
    fn round_trip_and_key_stability() {
        let dir = tempfile::tempdir().unwrap();
        let code = CodeJson::of(&simplex(2, 3).unwrap());
        let key = cache_key(&code, "hochster");
        assert_eq!(key, cache_key(&code, "hochster"));
        assert_ne!(key, cache_key(&code, "shifts+bs_solve"));
        assert!(read(dir.path(), &key).is_none());
        write(dir.path(), &key, b"{\"x\":1}").unwrap();
        assert_eq!(read(dir.path(), &key).unwrap(), b"{\"x\":1}");
    }
}
