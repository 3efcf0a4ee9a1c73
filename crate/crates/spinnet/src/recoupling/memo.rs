use std::collections::HashMap;
use std::io::{self, Read, Write};
use std::path::Path;
use std::sync::{OnceLock, RwLock};

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;

use crate::exactnum::RadicalRational;
use crate::wigner::{six_j, six_j_canonical};

const MAGIC: &[u8; 8] = b"SPNT6JMM";
const VERSION: u32 = 1;

/// Memo table of 6j values keyed by the canonical symmetric argument order.
#[derive(Debug, Default)]
pub struct SixJMemo {
    table: RwLock<HashMap<[u32; 6], RadicalRational>>,
}

impl SixJMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static SixJMemo {
        static MEMO: OnceLock<SixJMemo> = OnceLock::new();
        MEMO.get_or_init(SixJMemo::new)
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.table.write().unwrap().clear();
    }

    pub fn get(&self, t: [u32; 6]) -> RadicalRational {
        let key = six_j_canonical(t);
        if let Some(v) = self.table.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = six_j(key);
        self.table.write().unwrap().insert(key, v.clone());
        v
    }

    /// Writes the table: an 8-byte magic, a `u32` version, an entry count,
    /// then per entry six `u32` keys and the length-prefixed terms.
    pub fn save_to(&self, w: &mut impl Write) -> io::Result<()> {
        let table = self.table.read().unwrap();
        let mut keys: Vec<&[u32; 6]> = table.keys().collect();
        keys.sort();
        w.write_all(MAGIC)?;
        w.write_u32::<LittleEndian>(VERSION)?;
        w.write_u64::<LittleEndian>(keys.len() as u64)?;
        for k in keys {
            for &x in k {
                w.write_u32::<LittleEndian>(x)?;
            }
            let v = &table[k];
            w.write_u32::<LittleEndian>(v.len() as u32)?;
            for (r, q) in v.terms() {
                write_bytes(w, &r.to_bytes_le())?;
                let (sign, num) = q.numer().to_bytes_le();
                w.write_u8(u8::from(sign == Sign::Minus))?;
                write_bytes(w, &num)?;
                write_bytes(w, &q.denom().magnitude().to_bytes_le())?;
            }
        }
        Ok(())
    }

    /// Merges entries from a stream written by [`save_to`](Self::save_to).
    pub fn load_from(&self, r: &mut impl Read) -> io::Result<usize> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(io::Error::new(io::ErrorKind::InvalidData, "not a 6j memo file"));
        }
        let version = r.read_u32::<LittleEndian>()?;
        if version != VERSION {
            return Err(io::Error::new(io::ErrorKind::InvalidData, format!("unsupported memo version {version}")));
        }
        let n = r.read_u64::<LittleEndian>()?;
        let mut entries = Vec::with_capacity(n.min(1 << 20) as usize);
        for _ in 0..n {
            let mut key = [0u32; 6];
            for x in &mut key {
                *x = r.read_u32::<LittleEndian>()?;
            }
            let terms = r.read_u32::<LittleEndian>()?;
            let mut v = RadicalRational::zero();
            for _ in 0..terms {
                let rad = BigUint::from_bytes_le(&read_bytes(r)?);
                let neg = r.read_u8()? == 1;
                let num = BigUint::from_bytes_le(&read_bytes(r)?);
                let den = BigUint::from_bytes_le(&read_bytes(r)?);
                let num = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, num);
                let q = BigRational::new(num, den.into());
                v += RadicalRational::from_term_unchecked(q, rad);
            }
            entries.push((key, v));
        }
        let count = entries.len();
        self.table.write().unwrap().extend(entries);
        Ok(count)
    }

    pub fn save(&self, path: &Path) -> io::Result<()> {
        let mut f = io::BufWriter::new(std::fs::File::create(path)?);
        self.save_to(&mut f)?;
        f.flush()
    }

    pub fn load(&self, path: &Path) -> io::Result<usize> {
        let mut f = io::BufReader::new(std::fs::File::open(path)?);
        self.load_from(&mut f)
    }
}

fn write_bytes(w: &mut impl Write, b: &[u8]) -> io::Result<()> {
    w.write_u32::<LittleEndian>(b.len() as u32)?;
    w.write_all(b)
}

fn read_bytes(r: &mut impl Read) -> io::Result<Vec<u8>> {
    let n = r.read_u32::<LittleEndian>()? as usize;
    let mut b = vec![0u8; n];
    r.read_exact(&mut b)?;
    Ok(b)
}

/// 6j through the process-wide memo.
pub fn cached_six_j(t: [u32; 6]) -> RadicalRational {
    SixJMemo::global().get(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let m = SixJMemo::new();
        for t in [[2, 2, 2, 2, 2, 2], [1, 1, 2, 1, 1, 2], [3, 2, 1, 2, 3, 4], [8, 6, 4, 6, 8, 4]] {
            m.get(t);
        }
        let mut buf = Vec::new();
        m.save_to(&mut buf).unwrap();
        let back = SixJMemo::new();
        assert_eq!(back.load_from(&mut buf.as_slice()).unwrap(), 4);
        for t in [[2, 2, 2, 2, 2, 2], [3, 2, 1, 2, 3, 4], [8, 6, 4, 6, 8, 4]] {
            assert_eq!(back.get(t), six_j(t));
        }
        assert_eq!(back.len(), 4);
    }

    #[test]
    fn rejects_foreign_file() {
        let m = SixJMemo::new();
        assert!(m.load_from(&mut &b"NOTAMEMO\x01\x00\x00\x00"[..]).is_err());
    }
}
