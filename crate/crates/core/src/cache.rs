//! Optional on-disk persistence of the engine's memo table.
//!
//! The file starts with the magic bytes `EQKLCACHE` and a little-endian `u32`
//! format version. Files with another version are ignored.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use crate::engine::{canonical_group, CacheEntry, CacheKey, Engine};
use crate::error::{Error, Result};
use crate::group::MultiPartition;
use crate::partition::Partition;
use crate::rep::{GradedVirtualRep, VirtualRep};

pub const CACHE_ENV: &str = "EQUIKL_CACHE_DIR";
const MAGIC: &[u8; 9] = b"EQKLCACHE";
const VERSION: u32 = 1;
const FILE_NAME: &str = "equikl-cache.bin";

pub fn cache_file(dir: &Path) -> PathBuf {
    dir.join(FILE_NAME)
}

/// The cache directory named by the environment, if any.
pub fn env_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

fn put_u32(out: &mut Vec<u8>, v: u32) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_poly(out: &mut Vec<u8>, p: &GradedVirtualRep) {
    put_u32(out, p.coeffs().len() as u32);
    for (&d, r) in p.coeffs() {
        put_u32(out, d as u32);
        put_u32(out, r.terms().len() as u32);
        for (mp, &c) in r.terms() {
            out.extend_from_slice(&c.to_le_bytes());
            for part in mp.parts() {
                put_u32(out, part.len() as u32);
                for &x in part.parts() {
                    put_u32(out, x as u32);
                }
            }
        }
    }
}

fn encode(entries: &[(CacheKey, CacheEntry)]) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    put_u32(&mut out, VERSION);
    out.extend_from_slice(&(entries.len() as u64).to_le_bytes());
    for (key, entry) in entries {
        put_u32(&mut out, key.sizes.len() as u32);
        for &s in &key.sizes {
            put_u32(&mut out, s as u32);
        }
        put_u32(&mut out, key.bases.len() as u32);
        for &b in &key.bases {
            out.extend_from_slice(&b.to_le_bytes());
        }
        put_poly(&mut out, &entry.p);
        put_poly(&mut out, &entry.z);
    }
    out
}

struct Reader<'a>(&'a [u8]);

impl Reader<'_> {
    fn take<const N: usize>(&mut self) -> io::Result<[u8; N]> {
        let mut buf = [0u8; N];
        self.0.read_exact(&mut buf)?;
        Ok(buf)
    }

    fn u32(&mut self) -> io::Result<u32> {
        Ok(u32::from_le_bytes(self.take()?))
    }

    fn u64(&mut self) -> io::Result<u64> {
        Ok(u64::from_le_bytes(self.take()?))
    }

    fn i64(&mut self) -> io::Result<i64> {
        Ok(i64::from_le_bytes(self.take()?))
    }
}

fn corrupt(what: &str) -> Error {
    Error::Invalid(format!("corrupt cache file: {what}"))
}

fn get_poly(r: &mut Reader, sizes: &[usize]) -> Result<GradedVirtualRep> {
    let group = canonical_group(sizes);
    let mut out = GradedVirtualRep::zero(group.clone());
    for _ in 0..r.u32()? {
        let d = r.u32()? as usize;
        let mut terms = Vec::new();
        for _ in 0..r.u32()? {
            let c = r.i64()?;
            let mut parts = Vec::with_capacity(sizes.len());
            for _ in 0..sizes.len() {
                let len = r.u32()? as usize;
                let raw: Vec<usize> = (0..len).map(|_| r.u32().map(|x| x as usize)).collect::<io::Result<_>>()?;
                parts.push(Partition::new(raw).map_err(|_| corrupt("bad partition"))?);
            }
            terms.push((MultiPartition(parts), c));
        }
        let rep = VirtualRep::from_terms(group.clone(), terms).map_err(|_| corrupt("term shape"))?;
        out = out.add(&GradedVirtualRep::monomial(rep, d))?;
    }
    Ok(out)
}

fn decode(bytes: &[u8]) -> Result<Option<Vec<(CacheKey, CacheEntry)>>> {
    let mut r = Reader(bytes);
    let magic: [u8; 9] = r.take().map_err(|_| corrupt("truncated header"))?;
    if &magic != MAGIC {
        return Err(corrupt("bad magic"));
    }
    if r.u32()? != VERSION {
        return Ok(None);
    }
    let n = r.u64()?;
    let mut out = Vec::new();
    for _ in 0..n {
        let sizes: Vec<usize> = (0..r.u32()?).map(|_| r.u32().map(|x| x as usize)).collect::<io::Result<_>>()?;
        let bases: Vec<u64> = (0..r.u32()?).map(|_| r.u64()).collect::<io::Result<_>>()?;
        let p = get_poly(&mut r, &sizes)?;
        let z = get_poly(&mut r, &sizes)?;
        out.push((CacheKey { sizes, bases }, CacheEntry { p, z }));
    }
    if !r.0.is_empty() {
        return Err(corrupt("trailing bytes"));
    }
    Ok(Some(out))
}

/// Loads the cache file in `dir` into `engine`, returning the number of
/// entries read. A missing file or an older format version loads nothing.
pub fn load(engine: &Engine, dir: &Path) -> Result<usize> {
    let path = cache_file(dir);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e.into()),
    };
    match decode(&bytes)? {
        Some(entries) => {
            let n = entries.len();
            engine.preload(entries);
            Ok(n)
        }
        None => Ok(0),
    }
}

/// Writes the whole memo table of `engine` to `dir`, atomically replacing any old file.
pub fn save(engine: &Engine, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let bytes = encode(&engine.snapshot());
    let tmp = dir.join(format!("{FILE_NAME}.tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(&bytes)?;
    f.sync_all()?;
    fs::rename(&tmp, cache_file(dir))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::EquivariantMatroid;
    use crate::matroid::Matroid;

    #[test]
    fn round_trip() {
        let engine = Engine::new();
        let m = Matroid::glued_cycles(&[1, 2, 3], &[3, 4, 5, 6], 3).unwrap();
        let em = EquivariantMatroid::new(m, "{1,2}|{3}|{4,5,6}".parse().unwrap()).unwrap();
        let before = engine.kl_z(&em).unwrap();
        let dir = std::env::temp_dir().join(format!("equikl-cache-test-{}", std::process::id()));
        save(&engine, &dir).unwrap();
        let fresh = Engine::new();
        assert_eq!(load(&fresh, &dir).unwrap(), engine.cache_len());
        assert_eq!(fresh.cache_len(), engine.cache_len());
        assert_eq!(fresh.kl_z(&em).unwrap(), before);
        let bytes = fs::read(cache_file(&dir)).unwrap();
        assert_eq!(encode(&fresh.snapshot()), bytes);
        fs::write(cache_file(&dir), b"garbage").unwrap();
        assert!(load(&Engine::new(), &dir).is_err());
        fs::remove_dir_all(&dir).unwrap();
        assert_eq!(load(&Engine::new(), &dir).unwrap(), 0);
    }
}
