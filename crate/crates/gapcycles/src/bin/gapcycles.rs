//! Command-line surface over the gapcycles library.
//!
//! Subcommands: `build`, `census`, `model (evolve|ajk|crossover)`,
//! `asymptote`, `polignac (asymptote|verify)`, `survivors`, `verify`.
//! Results go to stdout or `--out`; every run also emits a manifest
//! (configuration, version, output checksums) to `<out>.manifest.json` or
//! stderr. Exit code 0 only when every requested check passes.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gapcycles::census::{
    self, driving_term_census_streamed, driving_term_census_with_workers, format_decimal,
    ratio_vector,
};
use gapcycles::cycle::GapCycle;
use gapcycles::dynamics::{self, AccumulationOrder, AjkRun};
use gapcycles::format::{write_cycle_file, write_extended_cycle_file, Crc32};
use gapcycles::{bridge, polignac, selfcheck, sieve};

#[derive(Parser)]
#[command(
    name = "gapcycles",
    version,
    about = "Cycles of gaps in Eratosthenes sieve: exact construction, censuses, population dynamics, and asymptotic gap ratios"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads (defaults to GAPCYCLES_THREADS or the available
    /// parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Memory budget for materialized cycles, e.g. 512M or 4G.
    #[arg(long, global = true, value_parser = parse_bytes, default_value = "4G")]
    max_memory: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Construct G(p#) and write it as a binary cycle file or text stream.
    Build(BuildArgs),
    /// Census of gaps and driving terms n_{g,j}.
    Census(CensusArgs),
    /// The population model: evolve ratio vectors, eigenvalue products,
    /// and the primorial crossover.
    Model {
        #[command(subcommand)]
        command: ModelCommand,
    },
    /// Asymptotic gap ratios from the census of one cycle.
    Asymptote(AsymptoteArgs),
    /// Ratios for arbitrary even gaps from the radical closed forms.
    Polignac {
        #[command(subcommand)]
        command: PolignacCommand,
    },
    /// Survivor gaps: the prefix of a cycle that is already prime gaps.
    Survivors(SurvivorsArgs),
    /// Run the cross-module invariant suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Sieve stage: builds G(p#).
    #[arg(long)]
    p: u64,
    /// Output file; `-` streams gap values as text to stdout.
    #[arg(long)]
    out: Option<String>,
    /// Stream the final extension instead of materializing it.
    #[arg(long)]
    stream: bool,
}

#[derive(Args)]
struct CensusArgs {
    /// Sieve stage: censuses G(p#).
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 32)]
    gmax: u64,
    #[arg(long, default_value_t = 9)]
    jmax: usize,
    /// Read the cycle from a GCYC file instead of constructing it.
    #[arg(long)]
    cycle: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Acknowledge an hours-scale run (required above 10^8 gaps).
    #[arg(long)]
    long_run: bool,
}

#[derive(Subcommand)]
enum ModelCommand {
    /// Evolve the ratio vector of a gap from p0 to pk, exactly.
    Evolve(EvolveArgs),
    /// Eigenvalue products a_j^k over the primes in (p0, pk].
    Ajk(AjkArgs),
    /// Estimate the a_2^k threshold where the gap 30 overtakes the gap 6.
    Crossover(CrossoverArgs),
}

#[derive(Args)]
struct EvolveArgs {
    /// Even gap to track.
    #[arg(long)]
    g: u64,
    #[arg(long)]
    p0: u64,
    #[arg(long, value_parser = parse_magnitude)]
    pk: u64,
    /// Arithmetic mode; only the exact mode is defined for full vectors.
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AjkArgs {
    #[arg(long, default_value_t = 13)]
    p0: u64,
    #[arg(long, value_parser = parse_magnitude)]
    pk: u64,
    #[arg(long, default_value_t = 9)]
    j: usize,
    /// Directory for resumable checkpoints (written every 10^9 of range).
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Resume from an existing checkpoint in the checkpoint directory.
    #[arg(long)]
    resume: bool,
    /// Fold primes in descending order (cross-check; desk scale only).
    #[arg(long)]
    descending: bool,
    /// Acknowledge an hours-scale run (required for pk above 10^9).
    #[arg(long)]
    long_run: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CrossoverArgs {
    /// Stage whose census supplies the initial conditions.
    #[arg(long, default_value_t = 13)]
    p0: u64,
    /// Prime bound for the correction-factor products.
    #[arg(long, value_parser = parse_magnitude, default_value = "10000000")]
    correction_limit: u64,
    /// Injected eigenvalue products a_2^k,a_3^k,... for reporting the
    /// evolved first coordinates at a fixed stage.
    #[arg(long, value_delimiter = ',')]
    ajk: Option<Vec<f64>>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AsymptoteArgs {
    /// Stage whose census supplies the initial ratios.
    #[arg(long)]
    from_cycle: u64,
    /// Even-gap range, e.g. `2..32`.
    #[arg(long, value_parser = parse_range, default_value = "2..32")]
    g: (u64, u64),
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum PolignacCommand {
    /// Closed-form asymptotic ratios for a range of even gaps.
    Asymptote(PolignacAsymptoteArgs),
    /// Cross-check the closed forms against a real census.
    Verify(PolignacVerifyArgs),
}

#[derive(Args)]
struct PolignacAsymptoteArgs {
    /// Even-gap range, e.g. `2..200`.
    #[arg(long, value_parser = parse_range, default_value = "2..200")]
    g: (u64, u64),
    /// Also print the predicted ratio sum at this stage.
    #[arg(long)]
    at: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PolignacVerifyArgs {
    /// Stage to census for the cross-checks.
    #[arg(long, default_value_t = 13)]
    p: u64,
}

#[derive(Args)]
struct SurvivorsArgs {
    #[arg(long)]
    p: u64,
    /// Append the stage-by-stage closure trace.
    #[arg(long)]
    annotate: bool,
    /// Trace closures through this prime (default: past the square root of
    /// the cycle span).
    #[arg(long)]
    trace_to: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 13)]
    p_max: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

fn parse_bytes(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let (num, mult) = match s.chars().last() {
        Some('K') | Some('k') => (&s[..s.len() - 1], 1u64 << 10),
        Some('M') | Some('m') => (&s[..s.len() - 1], 1u64 << 20),
        Some('G') | Some('g') => (&s[..s.len() - 1], 1u64 << 30),
        _ => (s, 1),
    };
    num.parse::<u64>()
        .map(|v| v * mult)
        .map_err(|e| format!("bad byte count {s:?}: {e}"))
}

fn parse_magnitude(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let f: f64 = s.parse().map_err(|e| format!("bad number {s:?}: {e}"))?;
    if !f.is_finite() || f < 0.0 || f > 1.8e19 {
        return Err(format!("{s:?} out of range"));
    }
    Ok(f.round() as u64)
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    if let Some((a, b)) = s.split_once("..") {
        let lo = a.parse::<u64>().map_err(|e| e.to_string())?;
        let hi = b.parse::<u64>().map_err(|e| e.to_string())?;
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok((lo, hi))
    } else {
        let v = s.parse::<u64>().map_err(|e| e.to_string())?;
        Ok((v, v))
    }
}

#[derive(serde::Serialize)]
struct ManifestOutput {
    target: String,
    bytes: u64,
    crc32: String,
}

#[derive(serde::Serialize)]
struct Manifest {
    tool: String,
    version: String,
    command: Vec<String>,
    workers: usize,
    elapsed_ms: u128,
    outputs: Vec<ManifestOutput>,
}

struct Run {
    started: Instant,
    workers: usize,
    outputs: Vec<ManifestOutput>,
}

impl Run {
    fn new(workers: usize) -> Self {
        Run {
            started: Instant::now(),
            workers,
            outputs: Vec::new(),
        }
    }

    /// Writes `content` to the file or stdout and records checksum + size.
    fn emit(&mut self, out: Option<&Path>, content: &str) -> std::io::Result<()> {
        let mut crc = Crc32::new();
        crc.update(content.as_bytes());
        let target = match out {
            Some(path) => {
                std::fs::write(path, content)?;
                path.display().to_string()
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(content.as_bytes())?;
                stdout.flush()?;
                "stdout".to_string()
            }
        };
        self.outputs.push(ManifestOutput {
            target,
            bytes: content.len() as u64,
            crc32: format!("{:08x}", crc.finish()),
        });
        Ok(())
    }

    fn record(&mut self, target: String, bytes: u64, crc32: u32) {
        self.outputs.push(ManifestOutput {
            target,
            bytes,
            crc32: format!("{crc32:08x}"),
        });
    }

    /// Writes the manifest next to the primary output, or to stderr.
    fn finish(self, primary_out: Option<&Path>) {
        let manifest = Manifest {
            tool: "gapcycles".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: std::env::args().collect(),
            workers: self.workers,
            elapsed_ms: self.started.elapsed().as_millis(),
            outputs: self.outputs,
        };
        let text = serde_json::to_string(&manifest).expect("manifest json");
        match primary_out {
            Some(path) => {
                let mpath = manifest_path(path);
                if std::fs::write(&mpath, format!("{text}\n")).is_err() {
                    eprintln!("{text}");
                }
            }
            None => eprintln!("{text}"),
        }
    }
}

fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    out.with_file_name(name)
}

fn default_workers(cli: &Cli) -> usize {
    cli.workers
        .or_else(|| {
            std::env::var("GAPCYCLES_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .max(1)
}

/// phi(p#) and p#, by walking the primes up to p.
fn primorial_shape(p: u64) -> Result<(u64, u64), gapcycles::Error> {
    if !sieve::is_prime(p) {
        return Err(gapcycles::Error::NotPrime(p));
    }
    let mut phi = 1u64;
    let mut modulus = 1u64;
    let mut q = 2u64;
    while q <= p {
        phi = phi
            .checked_mul(q - 1)
            .ok_or_else(|| gapcycles::Error::Overflow(format!("phi({p}#) exceeds u64")))?;
        modulus = modulus
            .checked_mul(q)
            .ok_or_else(|| gapcycles::Error::Overflow(format!("{p}# exceeds u64")))?;
        q = sieve::next_prime_after(q);
    }
    Ok((phi, modulus))
}

fn build_primorial(p: u64, workers: usize) -> Result<GapCycle, gapcycles::Error> {
    let mut cycle = GapCycle::seed();
    while let Ok(q) = cycle.next_prime() {
        if q > p {
            break;
        }
        cycle = cycle.extend_by_prime_with_workers(q, workers)?;
    }
    if cycle.sieve_stage() != Some(p) {
        return Err(gapcycles::Error::NotPrime(p));
    }
    Ok(cycle)
}

fn main() {
    let cli = Cli::parse();
    let workers = default_workers(&cli);
    let max_memory = cli.max_memory;
    let code = match dispatch(cli, workers, max_memory) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli, workers: usize, max_memory: u64) -> Result<i32, gapcycles::Error> {
    match cli.command {
        Command::Build(args) => cmd_build(args, workers, max_memory),
        Command::Census(args) => cmd_census(args, workers, max_memory),
        Command::Model { command } => match command {
            ModelCommand::Evolve(args) => cmd_evolve(args, workers),
            ModelCommand::Ajk(args) => cmd_ajk(args, workers),
            ModelCommand::Crossover(args) => cmd_crossover(args, workers),
        },
        Command::Asymptote(args) => cmd_asymptote(args, workers),
        Command::Polignac { command } => match command {
            PolignacCommand::Asymptote(args) => cmd_polignac_asymptote(args, workers),
            PolignacCommand::Verify(args) => cmd_polignac_verify(args, workers),
        },
        Command::Survivors(args) => cmd_survivors(args, workers),
        Command::Verify(args) => cmd_verify(args, workers),
    }
}

fn cmd_build(args: BuildArgs, workers: usize, max_memory: u64) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    let (phi, modulus) = primorial_shape(args.p)?;
    let bytes_needed = phi.saturating_mul(4);
    let to_stdout = args.out.as_deref() == Some("-");
    let out_path = match &args.out {
        Some(s) if s != "-" => Some(PathBuf::from(s)),
        _ => None,
    };

    if bytes_needed > max_memory && !args.stream {
        return Err(gapcycles::Error::Resource(format!(
            "G({}#) holds {phi} gaps (~{bytes_needed} bytes), over the {max_memory}-byte budget; pass --stream",
            args.p
        )));
    }

    if args.stream && (to_stdout || out_path.is_some()) {
        // build the previous stage, stream the last extension
        let prev = previous_prime(args.p);
        let base = build_primorial(prev, workers)?;
        let q = args.p;
        if to_stdout {
            let stdout = std::io::stdout();
            let mut sink = std::io::BufWriter::new(stdout.lock());
            let mut crc = Crc32::new();
            let mut bytes = 0u64;
            let summary = base.stream_extend_by(q, |gap| {
                let line = format!("{gap}\n");
                crc.update(line.as_bytes());
                bytes += line.len() as u64;
                sink.write_all(line.as_bytes())?;
                Ok(())
            })?;
            sink.flush()?;
            run.record("stdout".into(), bytes, crc.finish());
            eprintln!(
                "G({}#): {} gaps, sum {}, max gap {}",
                args.p, summary.emitted, summary.sum, summary.max_gap
            );
            run.finish(None);
            return Ok(0);
        }
        let path = out_path.expect("checked");
        let info = write_extended_cycle_file(&path, &base, q)?;
        run.record(path.display().to_string(), info.bytes_written, info.checksum);
        println!(
            "G({}#): {} gaps summing to {modulus}, written to {}",
            args.p,
            info.gaps,
            path.display()
        );
        run.finish(Some(&path));
        return Ok(0);
    }

    let cycle = build_primorial(args.p, workers)?;
    match out_path {
        Some(path) => {
            let info = write_cycle_file(&path, &cycle)?;
            run.record(path.display().to_string(), info.bytes_written, info.checksum);
            println!(
                "G({}#): {} gaps summing to {}, written to {}",
                args.p,
                cycle.len(),
                cycle.modulus(),
                path.display()
            );
            run.finish(Some(&path));
        }
        None => {
            let summary = format!(
                "G({}#): {} gaps summing to {}\n",
                args.p,
                cycle.len(),
                cycle.modulus()
            );
            run.emit(None, &summary)?;
            run.finish(None);
        }
    }
    Ok(0)
}

fn previous_prime(p: u64) -> u64 {
    let mut prev = 2u64;
    let mut q = 3u64;
    while q < p {
        prev = q;
        q = sieve::next_prime_after(q);
    }
    if p == 2 {
        2
    } else {
        prev
    }
}

fn cmd_census(args: CensusArgs, workers: usize, max_memory: u64) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    let table = if let Some(path) = &args.cycle {
        let cycle = gapcycles::format::read_cycle_file(path)?;
        driving_term_census_with_workers(&cycle, args.gmax, args.jmax, workers)?
    } else {
        let (phi, _) = primorial_shape(args.p)?;
        if phi > 100_000_000 && !args.long_run {
            return Err(gapcycles::Error::Resource(format!(
                "census of G({}#) covers {phi} gaps; pass --long-run to acknowledge",
                args.p
            )));
        }
        if phi.saturating_mul(4) > max_memory {
            // stream the final extension through the census
            let prev = previous_prime(args.p);
            let base = build_primorial(prev, workers)?;
            driving_term_census_streamed(&base, args.p, args.gmax, args.jmax)?
        } else {
            let cycle = build_primorial(args.p, workers)?;
            driving_term_census_with_workers(&cycle, args.gmax, args.jmax, workers)?
        }
    };
    let content = match args.format {
        Format::Json => table.to_json(),
        _ => table.to_csv(),
    };
    run.emit(args.out.as_deref(), &content)?;
    run.finish(args.out.as_deref());
    Ok(0)
}

fn cmd_evolve(args: EvolveArgs, workers: usize) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    if args.mode == Mode::Float {
        return Err(gapcycles::Error::InvalidInput(
            "full-vector evolution is exact only; float mode applies to `model ajk`".into(),
        ));
    }
    let cycle = build_primorial(args.p0, workers)?;
    let p1 = sieve::next_prime_after(args.p0);
    if args.g >= 2 * p1 {
        return Err(gapcycles::Error::InvalidInput(format!(
            "gap {} needs g < 2*{p1}; census a later stage",
            args.g
        )));
    }
    let j_cap = (args.g / 2).max(1) as usize;
    let table = driving_term_census_with_workers(&cycle, args.g, j_cap.min(cycle.len() as usize), workers)?;
    let mut j_max = 1;
    for j in 1..=table.j_max() {
        if !num_traits::Zero::is_zero(&table.count(args.g, j)) {
            j_max = j;
        }
    }
    let w0 = ratio_vector(&table, args.g, j_max)?;
    let wk = dynamics::iterate_model(&w0, args.p0, args.pk)?;
    let content = match args.format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = wk
                .entries
                .iter()
                .enumerate()
                .map(|(i, w)| {
                    serde_json::json!({
                        "j": i + 1,
                        "num": w.numer().to_string(),
                        "den": w.denom().to_string(),
                        "decimal": format_decimal(w, 12),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "g": args.g, "p0": args.p0, "pk": args.pk, "w": entries,
            }))
            .expect("json")
        }
        _ => {
            let mut s = String::from("j,w_num,w_den,w_dec\n");
            for (i, w) in wk.entries.iter().enumerate() {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    i + 1,
                    w.numer(),
                    w.denom(),
                    format_decimal(w, 12)
                ));
            }
            s
        }
    };
    run.emit(args.out.as_deref(), &content)?;
    run.finish(args.out.as_deref());
    Ok(0)
}

fn cmd_ajk(args: AjkArgs, workers: usize) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    if args.pk > 1_000_000_000 && !args.long_run {
        return Err(gapcycles::Error::Resource(format!(
            "pk = {} is an hours-scale run; pass --long-run (and ideally --checkpoint DIR)",
            args.pk
        )));
    }
    let products = if let Some(dir) = &args.checkpoint {
        let mut state = if args.resume {
            AjkRun::resume_or_new(dir, args.p0, args.j)?
        } else {
            AjkRun::new(args.p0, args.j)?
        };
        state.advance_to(args.pk, Some(dir))?;
        state.save(dir)?;
        state.products()
    } else if args.descending {
        dynamics::eigenvalue_products_float(args.p0, args.pk, args.j, AccumulationOrder::Descending)?
    } else if workers > 1 {
        dynamics::eigenvalue_products_float_partitioned(args.p0, args.pk, args.j, workers)?
    } else {
        dynamics::eigenvalue_products_float(args.p0, args.pk, args.j, AccumulationOrder::Ascending)?
    };
    let mut content = String::from("j,a_jk\n");
    for j in 2..=args.j {
        content.push_str(&format!("{j},{:.14e}\n", products.value_f64(j)));
    }
    content.push_str(&format!(
        "# primes_used,{}\n# last_range_end,{}\n",
        products.primes_used, args.pk
    ));
    run.emit(args.out.as_deref(), &content)?;
    run.finish(args.out.as_deref());
    Ok(0)
}

fn cmd_crossover(args: CrossoverArgs, workers: usize) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    let cycle = build_primorial(args.p0, workers)?;
    let table = driving_term_census_with_workers(&cycle, 30, 15.min(cycle.len() as usize), workers)?;
    let trim = |g: u64| -> usize {
        let mut j_max = 1;
        for j in 1..=table.j_max() {
            if !num_traits::Zero::is_zero(&table.count(g, j)) {
                j_max = j;
            }
        }
        j_max
    };
    let w6 = ratio_vector(&table, 6, trim(6).max(trim(30)))?;
    let w30 = ratio_vector(&table, 30, trim(30).max(trim(6)))?;
    let corrections =
        dynamics::ajk_correction_factors(args.p0, args.correction_limit, w30.dim())?;
    let estimate = dynamics::estimate_primorial_crossover(&w6, &w30, Some(&corrections))?;
    let mut content = String::new();
    content.push_str(&format!(
        "threshold_a2k_geometric,{}\n",
        estimate
            .threshold
            .map(|t| format!("{t:.6}"))
            .unwrap_or_else(|| "none".into())
    ));
    content.push_str(&format!(
        "threshold_a2k_corrected,{}\n",
        estimate
            .threshold_corrected
            .map(|t| format!("{t:.6}"))
            .unwrap_or_else(|| "none".into())
    ));
    if let Some(ajk) = &args.ajk {
        let w6_1 = dynamics::evolve_first_coordinate(&w6, ajk);
        let w30_1 = dynamics::evolve_first_coordinate(&w30, ajk);
        content.push_str(&format!("w6_first,{w6_1:.6}\nw30_first,{w30_1:.6}\n"));
    }
    run.emit(args.out.as_deref(), &content)?;
    run.finish(args.out.as_deref());
    Ok(0)
}

fn cmd_asymptote(args: AsymptoteArgs, workers: usize) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    let cycle = build_primorial(args.from_cycle, workers)?;
    let p1 = sieve::next_prime_after(args.from_cycle);
    let (lo, hi) = args.g;
    if hi >= 2 * p1 {
        return Err(gapcycles::Error::InvalidInput(format!(
            "asymptotes from G({}#) are valid for g < {}; narrow --g or census a later stage",
            args.from_cycle,
            2 * p1
        )));
    }
    let j_cap = ((hi / 2).max(1) as usize).min(cycle.len() as usize);
    let table = driving_term_census_with_workers(&cycle, hi, j_cap, workers)?;
    let mut rows = Vec::new();
    let mut g = lo.max(2);
    if g % 2 == 1 {
        g += 1;
    }
    while g <= hi {
        let w = ratio_vector(&table, g, table.j_max())?;
        let sum = w.sum();
        rows.push((g, sum));
        g += 2;
    }
    let content = match args.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|(g, sum)| {
                    serde_json::json!({
                        "g": g,
                        "w_inf": {"num": sum.numer().to_string(), "den": sum.denom().to_string()},
                        "decimal": format_decimal(sum, 12),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("json")
        }
        _ => {
            let mut s = String::from("g,w_inf_num,w_inf_den,w_inf_dec\n");
            for (g, sum) in &rows {
                s.push_str(&format!(
                    "{g},{},{},{}\n",
                    sum.numer(),
                    sum.denom(),
                    format_decimal(sum, 12)
                ));
            }
            s
        }
    };
    run.emit(args.out.as_deref(), &content)?;
    run.finish(args.out.as_deref());
    Ok(0)
}

fn cmd_polignac_asymptote(
    args: PolignacAsymptoteArgs,
    workers: usize,
) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    let (lo, hi) = args.g;
    let mut content = String::new();
    match args.format {
        Format::Json => {
            let mut rows = Vec::new();
            let mut g = lo.max(2);
            if g % 2 == 1 {
                g += 1;
            }
            while g <= hi {
                let ratio = polignac::hl_asymptotic_ratio(g)?;
                let mut row = serde_json::json!({
                    "g": g,
                    "asymptote": {"num": ratio.numer().to_string(), "den": ratio.denom().to_string()},
                    "decimal": format_decimal(&ratio, 12),
                });
                if let Some(p) = args.at {
                    let at = polignac::ratio_sum_at(g, p)?;
                    row["sum_at_stage"] = serde_json::json!({
                        "num": at.numer().to_string(), "den": at.denom().to_string(),
                    });
                }
                rows.push(row);
                g += 2;
            }
            content = serde_json::to_string_pretty(&rows).expect("json");
        }
        _ => {
            if args.at.is_some() {
                content.push_str("g,sum_at_num,sum_at_den,sum_at_dec,asym_num,asym_den,asym_dec\n");
            } else {
                content.push_str("g,asym_num,asym_den,asym_dec\n");
            }
            let mut g = lo.max(2);
            if g % 2 == 1 {
                g += 1;
            }
            while g <= hi {
                let ratio = polignac::hl_asymptotic_ratio(g)?;
                if let Some(p) = args.at {
                    let at = polignac::ratio_sum_at(g, p)?;
                    content.push_str(&format!(
                        "{g},{},{},{},{},{},{}\n",
                        at.numer(),
                        at.denom(),
                        format_decimal(&at, 12),
                        ratio.numer(),
                        ratio.denom(),
                        format_decimal(&ratio, 12)
                    ));
                } else {
                    content.push_str(&format!(
                        "{g},{},{},{}\n",
                        ratio.numer(),
                        ratio.denom(),
                        format_decimal(&ratio, 12)
                    ));
                }
                g += 2;
            }
        }
    }
    run.emit(args.out.as_deref(), &content)?;
    run.finish(args.out.as_deref());
    Ok(0)
}

fn cmd_polignac_verify(args: PolignacVerifyArgs, workers: usize) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    let cycle = build_primorial(args.p, workers)?;
    let two = census::Constellation::new(vec![2])?;
    let n2 = census::count_constellation(&cycle, &two);
    let mut lines = Vec::new();
    let mut failures = 0u64;

    // closed-form totals in G(qbar#) for small radicals
    for g in (2..=50u64).step_by(2) {
        let rad = polignac::radical(g)?;
        if rad.qbar > args.p.min(13) {
            continue;
        }
        let stage = GapCycle::primorial(rad.qbar)?;
        let censused = census::total_driving_terms(&stage, g);
        let formula = polignac::driving_term_total(g)?;
        let ok = formula.total == num_bigint::BigUint::from(censused);
        if !ok {
            failures += 1;
        }
        lines.push(format!(
            "driving_total g={g} qbar={} formula={} census={censused} {}{}",
            rad.qbar,
            formula.total,
            if ok { "ok" } else { "MISMATCH" },
            if formula.degenerate_power_of_two {
                " (power-of-two radical)"
            } else {
                ""
            }
        ));
    }

    // predicted ratio sums against the census of G(p#)
    for g in (2..=120u64).step_by(2) {
        let predicted = polignac::ratio_sum_at(g, args.p)?;
        let censused = census::total_driving_terms(&cycle, g);
        let lhs = predicted * num_rational::BigRational::from_integer(n2.clone().into());
        let rhs = num_rational::BigRational::from_integer(num_bigint::BigUint::from(censused).into());
        let ok = lhs == rhs;
        if !ok {
            failures += 1;
        }
        lines.push(format!(
            "ratio_sum g={g} at {}# census={censused} {}",
            args.p,
            if ok { "ok" } else { "MISMATCH" }
        ));
    }

    lines.push(format!(
        "{} checks, {failures} failures",
        lines.len()
    ));
    let content = lines.join("\n") + "\n";
    run.emit(None, &content)?;
    run.finish(None);
    Ok(if failures == 0 { 0 } else { 1 })
}

fn cmd_survivors(args: SurvivorsArgs, workers: usize) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    let cycle = build_primorial(args.p, workers)?;
    let report = bridge::survivors(&cycle)?;
    let trace = if args.annotate {
        let default_to = ((cycle.modulus() + 1) as f64).sqrt().ceil() as u64 + 1;
        Some(bridge::closure_trace(
            &cycle,
            args.trace_to.unwrap_or(default_to),
        )?)
    } else {
        None
    };
    let content = match args.format {
        Format::Json => {
            let mut v = serde_json::json!({
                "stage": report.stage,
                "next_prime": report.next_prime,
                "gaps": report.gaps,
                "matched": report.matched,
                "end_value": report.end_value,
            });
            if let Some(t) = &trace {
                let stages: Vec<serde_json::Value> = t
                    .stages
                    .iter()
                    .map(|s| {
                        serde_json::json!({
                            "prime": s.prime,
                            "gaps": s.gaps,
                            "settled": s.settled,
                            "closures": s.closures,
                        })
                    })
                    .collect();
                v["trace"] = serde_json::json!({
                    "stages": stages,
                    "final_gaps": t.final_gaps,
                });
            }
            serde_json::to_string_pretty(&v).expect("json")
        }
        _ => {
            let mut s = format!(
                "G({}#): next prime {}, survivors cover ({}, {})\n",
                report.stage,
                report.next_prime,
                report.next_prime,
                report.next_prime * report.next_prime
            );
            let gaps: Vec<String> = report.gaps.iter().map(|g| g.to_string()).collect();
            s.push_str(&gaps.join(","));
            s.push('\n');
            s.push_str(&format!(
                "all matched against prime-gap oracle: {}\n",
                report.all_matched()
            ));
            if let Some(t) = &trace {
                s.push_str(&t.render());
            }
            s
        }
    };
    run.emit(args.out.as_deref(), &content)?;
    run.finish(args.out.as_deref());
    Ok(if report.all_matched() { 0 } else { 1 })
}

fn cmd_verify(args: VerifyArgs, workers: usize) -> Result<i32, gapcycles::Error> {
    let mut run = Run::new(workers);
    let outcomes = selfcheck::run(args.p_max)?;
    let mut content = String::new();
    let mut failures = 0;
    for outcome in &outcomes {
        content.push_str(&format!(
            "{} {} — {}\n",
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.name,
            outcome.detail
        ));
        if !outcome.passed {
            failures += 1;
        }
    }
    content.push_str(&format!("{} checks, {failures} failures\n", outcomes.len()));
    run.emit(None, &content)?;
    run.finish(None);
    Ok(if failures == 0 { 0 } else { 1 })
}
