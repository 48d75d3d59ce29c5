//! Binary cycle file format `GCYC`.
//!
//! Layout:
//!
//! ```text
//! magic    4 bytes  "GCYC"
//! version  u8
//! modlen   u8       byte length of the modulus
//! modulus  modlen bytes, big-endian
//! phi      u64 LE   number of gaps
//! checksum u32 LE   CRC-32 (IEEE) of the payload
//! payload  one LEB128 varint per gap, storing gap/2
//! ```
//!
//! Gaps are even for every modulus the crate constructs (all moduli are
//! even), so halving before the varint saves a bit per gap. Writing streams
//! the payload and patches the checksum afterwards, so the target must be
//! seekable.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::Path;

use crate::cycle::GapCycle;
use crate::{Error, Result};

pub const MAGIC: [u8; 4] = *b"GCYC";
pub const VERSION: u8 = 1;

/// CRC-32 (IEEE 802.3, reflected) with a lazily built table.
pub struct Crc32 {
    table: [u32; 256],
    state: u32,
}

impl Default for Crc32 {
    fn default() -> Self {
        Self::new()
    }
}

impl Crc32 {
    pub fn new() -> Self {
        let mut table = [0u32; 256];
        for (i, slot) in table.iter_mut().enumerate() {
            let mut c = i as u32;
            for _ in 0..8 {
                c = if c & 1 != 0 { 0xEDB8_8320 ^ (c >> 1) } else { c >> 1 };
            }
            *slot = c;
        }
        Crc32 {
            table,
            state: 0xFFFF_FFFF,
        }
    }

    pub fn update(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.state = self.table[((self.state ^ u32::from(b)) & 0xFF) as usize]
                ^ (self.state >> 8);
        }
    }

    pub fn finish(&self) -> u32 {
        self.state ^ 0xFFFF_FFFF
    }
}

/// LEB128 encoding of `v` into `buf`; returns the byte count.
pub fn write_varint(buf: &mut Vec<u8>, mut v: u64) -> usize {
    let start = buf.len();
    loop {
        let byte = (v & 0x7F) as u8;
        v >>= 7;
        if v == 0 {
            buf.push(byte);
            break;
        }
        buf.push(byte | 0x80);
    }
    buf.len() - start
}

/// Reads one LEB128 varint.
pub fn read_varint<R: Read>(r: &mut R) -> Result<u64> {
    let mut v = 0u64;
    let mut shift = 0u32;
    loop {
        let mut byte = [0u8; 1];
        r.read_exact(&mut byte)?;
        let b = byte[0];
        if shift >= 63 && b > 1 {
            return Err(Error::Format("varint exceeds u64".into()));
        }
        v |= u64::from(b & 0x7F) << shift;
        if b & 0x80 == 0 {
            return Ok(v);
        }
        shift += 7;
        if shift > 63 {
            return Err(Error::Format("varint runs past 10 bytes".into()));
        }
    }
}

/// Bookkeeping returned by the writers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FileInfo {
    pub bytes_written: u64,
    pub checksum: u32,
    pub gaps: u64,
}

fn header_bytes(modulus: u64, phi: u64, checksum: u32) -> Vec<u8> {
    let mod_be = modulus.to_be_bytes();
    let skip = mod_be.iter().take_while(|&&b| b == 0).count().min(7);
    let mod_trim = &mod_be[skip..];
    let mut out = Vec::with_capacity(4 + 1 + 1 + mod_trim.len() + 8 + 4);
    out.extend_from_slice(&MAGIC);
    out.push(VERSION);
    out.push(mod_trim.len() as u8);
    out.extend_from_slice(mod_trim);
    out.extend_from_slice(&phi.to_le_bytes());
    out.extend_from_slice(&checksum.to_le_bytes());
    out
}

/// Writes a materialized cycle.
pub fn write_cycle_file(path: &Path, cycle: &GapCycle) -> Result<FileInfo> {
    let file = File::create(path)?;
    let mut sink = BufWriter::new(file);
    write_cycle_gaps(
        &mut sink,
        cycle.modulus(),
        cycle.len(),
        cycle.gaps().iter().copied(),
    )
}

/// Streams the gaps of `G(qN)` into a file directly from the base cycle,
/// without materializing the extension.
pub fn write_extended_cycle_file(path: &Path, base: &GapCycle, q: u64) -> Result<FileInfo> {
    let new_modulus = base
        .modulus()
        .checked_mul(q)
        .ok_or_else(|| Error::Overflow(format!("{} * {q} exceeds u64", base.modulus())))?;
    let new_len = if base.modulus() % q == 0 {
        base.len() * q
    } else {
        base.len() * (q - 1)
    };
    let file = File::create(path)?;
    let mut sink = BufWriter::new(file);

    // placeholder header, patched after the payload checksum is known
    let header = header_bytes(new_modulus, new_len, 0);
    sink.write_all(&header)?;
    let mut crc = Crc32::new();
    let mut buf = Vec::with_capacity(10);
    let mut written = header.len() as u64;
    let mut count = 0u64;
    base.stream_extend_by(q, |gap| {
        buf.clear();
        write_varint(&mut buf, u64::from(gap) / 2);
        crc.update(&buf);
        sink.write_all(&buf)?;
        written += buf.len() as u64;
        count += 1;
        Ok(())
    })?;
    let checksum = crc.finish();
    let mut file = sink.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    file.seek(SeekFrom::Start(header.len() as u64 - 4))?;
    file.write_all(&checksum.to_le_bytes())?;
    file.sync_all()?;
    Ok(FileInfo {
        bytes_written: written,
        checksum,
        gaps: count,
    })
}

fn write_cycle_gaps<W: Write + Seek>(
    sink: &mut W,
    modulus: u64,
    phi: u64,
    gaps: impl Iterator<Item = u32>,
) -> Result<FileInfo> {
    let header = header_bytes(modulus, phi, 0);
    sink.write_all(&header)?;
    let mut crc = Crc32::new();
    let mut buf = Vec::with_capacity(10);
    let mut written = header.len() as u64;
    let mut count = 0u64;
    for gap in gaps {
        if gap % 2 != 0 {
            return Err(Error::Format(format!(
                "gap {gap} is odd; the format stores gap/2"
            )));
        }
        buf.clear();
        write_varint(&mut buf, u64::from(gap) / 2);
        crc.update(&buf);
        sink.write_all(&buf)?;
        written += buf.len() as u64;
        count += 1;
    }
    if count != phi {
        return Err(Error::Format(format!(
            "wrote {count} gaps, header promised {phi}"
        )));
    }
    let checksum = crc.finish();
    sink.seek(SeekFrom::Start(header.len() as u64 - 4))?;
    sink.write_all(&checksum.to_le_bytes())?;
    sink.flush()?;
    Ok(FileInfo {
        bytes_written: written,
        checksum,
        gaps: count,
    })
}

/// Reads and fully validates a cycle file (checksum, count, sum, and the
/// cycle invariants).
pub fn read_cycle_file(path: &Path) -> Result<GapCycle> {
    let file = File::open(path)?;
    let mut src = BufReader::new(file);
    let mut magic = [0u8; 4];
    src.read_exact(&mut magic)?;
    if magic != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let mut small = [0u8; 1];
    src.read_exact(&mut small)?;
    if small[0] != VERSION {
        return Err(Error::Format(format!("unsupported version {}", small[0])));
    }
    src.read_exact(&mut small)?;
    let modlen = small[0] as usize;
    if modlen == 0 || modlen > 8 {
        return Err(Error::Format(format!("modulus length {modlen} unsupported")));
    }
    let mut modbytes = vec![0u8; modlen];
    src.read_exact(&mut modbytes)?;
    let mut modulus = 0u64;
    for b in modbytes {
        modulus = modulus << 8 | u64::from(b);
    }
    let mut phi_bytes = [0u8; 8];
    src.read_exact(&mut phi_bytes)?;
    let phi = u64::from_le_bytes(phi_bytes);
    let mut ck_bytes = [0u8; 4];
    src.read_exact(&mut ck_bytes)?;
    let expect_checksum = u32::from_le_bytes(ck_bytes);

    let phi_usize: usize = phi
        .try_into()
        .map_err(|_| Error::Resource(format!("{phi} gaps exceed addressable memory")))?;
    let mut gaps = Vec::with_capacity(phi_usize);
    let mut crc = Crc32::new();
    let mut buf = Vec::with_capacity(10);
    for _ in 0..phi {
        buf.clear();
        let half = read_varint_crc(&mut src, &mut buf, &mut crc)?;
        let gap = half
            .checked_mul(2)
            .and_then(|g| u32::try_from(g).ok())
            .ok_or_else(|| Error::Format(format!("gap {half}*2 exceeds u32")))?;
        gaps.push(gap);
    }
    if crc.finish() != expect_checksum {
        return Err(Error::Format("checksum mismatch".into()));
    }
    GapCycle::from_parts(modulus, gaps)
}

fn read_varint_crc<R: Read>(r: &mut R, buf: &mut Vec<u8>, crc: &mut Crc32) -> Result<u64> {
    let mut v = 0u64;
    let mut shift = 0u32;
    loop {
        let mut byte = [0u8; 1];
        r.read_exact(&mut byte)?;
        buf.push(byte[0]);
        let b = byte[0];
        v |= u64::from(b & 0x7F) << shift;
        if b & 0x80 == 0 {
            crc.update(buf);
            return Ok(v);
        }
        shift += 7;
        if shift > 63 {
            return Err(Error::Format("varint runs past 10 bytes".into()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn varint_roundtrip() {
        let mut buf = Vec::new();
        for v in [0u64, 1, 127, 128, 300, u32::MAX as u64, u64::MAX] {
            buf.clear();
            write_varint(&mut buf, v);
            let mut cursor = std::io::Cursor::new(&buf);
            assert_eq!(read_varint(&mut cursor).unwrap(), v);
        }
    }

    #[test]
    fn crc_known_value() {
        let mut crc = Crc32::new();
        crc.update(b"123456789");
        assert_eq!(crc.finish(), 0xCBF4_3926);
    }

    #[test]
    fn file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g13.gcyc");
        let cycle = GapCycle::primorial(13).unwrap();
        let info = write_cycle_file(&path, &cycle).unwrap();
        assert_eq!(info.gaps, 5760);
        let back = read_cycle_file(&path).unwrap();
        assert_eq!(back, cycle);
    }

    #[test]
    fn streamed_write_equals_materialized_write() {
        let dir = tempfile::tempdir().unwrap();
        let base = GapCycle::primorial(11).unwrap();
        let q = base.next_prime().unwrap();
        let streamed = dir.path().join("streamed.gcyc");
        write_extended_cycle_file(&streamed, &base, q).unwrap();
        let materialized = dir.path().join("materialized.gcyc");
        write_cycle_file(&materialized, &base.extend_by_prime(q).unwrap()).unwrap();
        assert_eq!(
            std::fs::read(&streamed).unwrap(),
            std::fs::read(&materialized).unwrap()
        );
    }

    #[test]
    fn corruption_detected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g7.gcyc");
        write_cycle_file(&path, &GapCycle::primorial(7).unwrap()).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        let last = bytes.len() - 1;
        bytes[last] ^= 0x01;
        std::fs::write(&path, &bytes).unwrap();
        assert!(read_cycle_file(&path).is_err());
    }
}
