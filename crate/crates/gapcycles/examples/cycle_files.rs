//! Write and read cycles in the binary GCYC format: varint-packed half
//! gaps behind a checksummed header, with a streamed writer for extensions
//! too large to materialize.
//!
//! ```bash
//! cargo run --example cycle_files
//! ```

use gapcycles::cycle::GapCycle;
use gapcycles::format::{read_cycle_file, write_cycle_file, write_extended_cycle_file};

fn main() -> Result<(), gapcycles::Error> {
    let dir = std::env::temp_dir().join("gapcycles_files_example");
    std::fs::create_dir_all(&dir)?;

    let g13 = GapCycle::primorial(13)?;
    let path = dir.join("g13.gcyc");
    let info = write_cycle_file(&path, &g13)?;
    println!(
        "wrote {}: {} gaps in {} bytes (~{:.2} bytes/gap), crc32 {:08x}",
        path.display(),
        info.gaps,
        info.bytes_written,
        info.bytes_written as f64 / info.gaps as f64,
        info.checksum
    );
    let back = read_cycle_file(&path)?;
    assert_eq!(back, g13);
    println!("read back and validated (checksum, count, sum, symmetry)");

    // stream G(17#) straight to disk from G(13#)
    let streamed = dir.join("g17.gcyc");
    let info = write_extended_cycle_file(&streamed, &g13, 17)?;
    println!(
        "streamed G(17#) to {}: {} gaps in {} bytes",
        streamed.display(),
        info.gaps,
        info.bytes_written
    );
    let g17 = read_cycle_file(&streamed)?;
    assert_eq!(g17.len(), 92_160);
    assert_eq!(g17, g13.extend_by_prime(17)?);
    println!("streamed file equals the materialized extension");
    Ok(())
}
