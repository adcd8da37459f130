use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lefschetz::core::braid::search_convention;
use lefschetz::core::cover::{proof_script, run_script};
use lefschetz::core::factorization::{build_pencil_word, cap_boundary};
use lefschetz::core::invariants::{
    calibrate, classify, degree_double, family_params, InvariantRecord,
};
use lefschetz::core::{PencilSpec, SpecCase};
use lefschetz::formats::{
    canonical_json_pretty, write_audit_line, write_factorization, write_invariants_csv,
};
use lefschetz::grid::{audit_row, grid_specs, parse_grid, run_grid, Jobs};
use lefschetz::script::MoveScript;
use lefschetz::verify::{self, VerifyTarget};
use lefschetz::{EngineConfig, Error, Result};

#[derive(Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Hyperelliptic Lefschetz pencils: factorizations, identities, invariants"
)]
struct Cli {
    /// Engine configuration overriding the shipped one.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker count for grid commands, or `auto` (reads LEFSCHETZ_JOBS).
    #[arg(long, global = true, default_value = "1")]
    jobs: Jobs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SpecArgs {
    #[arg(long)]
    g: u32,
    #[arg(long)]
    h: u32,
    #[arg(long)]
    i: u32,
}

impl SpecArgs {
    fn spec(self) -> Result<PencilSpec> {
        Ok(PencilSpec::new(self.g, self.h, self.i)?)
    }
}

#[derive(Args)]
struct Selection {
    #[arg(long, requires_all = ["h", "i"], conflicts_with = "grid")]
    g: Option<u32>,
    #[arg(long)]
    h: Option<u32>,
    #[arg(long)]
    i: Option<u32>,
    /// Every valid pencil in a range, e.g. `h<g<=12`.
    #[arg(long)]
    grid: Option<String>,
}

impl Selection {
    fn specs(&self) -> Result<(Vec<PencilSpec>, bool)> {
        match (&self.grid, self.g, self.h, self.i) {
            (Some(grid), ..) => Ok((grid_specs(parse_grid(grid)?), true)),
            (None, Some(g), Some(h), Some(i)) => Ok((vec![PencilSpec::new(g, h, i)?], false)),
            _ => Err(Error::Usage("give --g --h --i or --grid".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    #[value(name = "thm31")]
    BlockPass,
    #[value(name = "eq1")]
    Pencil,
    Reversing,
    Unchain,
    #[value(name = "lemma21-sp")]
    SplitSp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Write the monodromy factorization of a pencil as JSON.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        /// Cap the boundary components (closed genus-g surface).
        #[arg(long)]
        capped: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an identity and write a certificate.
    Verify {
        target: Target,
        #[arg(long)]
        g: Option<u32>,
        #[arg(long)]
        h: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        /// Embed both normal forms.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariant records as JSON or CSV.
    Invariants {
        #[command(flatten)]
        select: Selection,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Run the word/closed-form/classification/Rokhlin cross-checks.
        #[arg(long)]
        audit: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the diffeomorphism type.
    Classify {
        #[command(flatten)]
        select: Selection,
    },
    /// Replay the branched-cover script, streaming the audit log as JSON lines.
    Cover {
        #[command(flatten)]
        spec: SpecArgs,
        /// Replay this TOML move list instead of the built-in script.
        #[arg(long)]
        script: Option<PathBuf>,
        /// Print the built-in script as TOML and exit.
        #[arg(long)]
        print_script: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterate degree doubling, or list base points along a family.
    Doubling {
        #[arg(long)]
        g: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long, default_value = "1")]
        iterate: u32,
        /// List the family on `Z_h(q) #_f H_h(r)` instead.
        #[arg(long, requires_all = ["h", "q"])]
        family: bool,
        #[arg(long)]
        h: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, default_value = "0")]
        r: u32,
        #[arg(long, default_value = "50")]
        p_max: u32,
    },
    /// Re-derive the configuration and run quick checks of every engine.
    Selftest,
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::Usage(format!("missing --{flag}")))
}

fn gen(spec: SpecArgs, capped: bool, out: Option<&Path>) -> Result<ExitCode> {
    let spec = spec.spec()?;
    let mut f = build_pencil_word(spec.g, spec.h, spec.i)?;
    if capped {
        f = cap_boundary(&f)?;
    }
    let summary = format!("letters: {}, base points: {}", f.len(), spec.base_points());
    emit(out, &write_factorization(&f)?)?;
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    cfg: &EngineConfig,
    target: Target,
    g: Option<u32>,
    h: Option<u32>,
    i: Option<u32>,
    m: Option<u32>,
    n: Option<u32>,
    full: bool,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let t = match target {
        Target::BlockPass => VerifyTarget::BlockPassRelation {
            g: need(g, "g")?,
            h: need(h, "h")?,
        },
        Target::Pencil => VerifyTarget::PencilProjection {
            g: need(g, "g")?,
            h: need(h, "h")?,
            i: need(i, "i")?,
        },
        Target::Reversing => VerifyTarget::Reversing { m: need(m, "m")? },
        Target::Unchain => VerifyTarget::Unchain {
            g: need(g, "g")?,
            h: need(h, "h")?,
        },
        Target::SplitSp => VerifyTarget::SplitSp {
            h: need(h, "h")?,
            n: need(n, "n")?,
        },
    };
    let cert = verify::run(t, cfg, full)?;
    emit(out, &canonical_json_pretty(&cert)?)?;
    eprintln!("{}: verified={}", cert.claim, cert.verified);
    Ok(if cert.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn invariants_cmd(
    jobs: usize,
    select: &Selection,
    format: Option<Format>,
    audit: bool,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let (specs, is_grid) = select.specs()?;
    let records: Vec<InvariantRecord> = specs.iter().map(InvariantRecord::new).collect();
    let format = format.unwrap_or(if is_grid { Format::Csv } else { Format::Json });
    let text = match format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_invariants_csv(&mut buf, &records)?;
            String::from_utf8(buf).expect("CSV output is UTF-8")
        }
        Format::Json if is_grid => canonical_json_pretty(&records)?,
        Format::Json => canonical_json_pretty(&records[0])?,
    };
    emit(out, &text)?;
    if !audit {
        return Ok(ExitCode::SUCCESS);
    }
    let audits = run_grid(&specs, jobs, audit_row)?;
    let mut failed = 0usize;
    for a in audits {
        let a = a?;
        if !a.ok() {
            failed += 1;
            eprintln!("audit failed: {}", serde_json::to_string(&a)?);
        }
    }
    eprintln!("audit: {} rows, {failed} failed", specs.len());
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn classify_cmd(select: &Selection) -> Result<ExitCode> {
    let (specs, is_grid) = select.specs()?;
    let mut stdout = io::stdout().lock();
    for s in &specs {
        let c = classify(s);
        if is_grid {
            writeln!(stdout, "{} {} {}\t{}", s.g, s.h, s.i, c.canonical)?;
            continue;
        }
        writeln!(stdout, "{}", c.canonical)?;
        if c.raw != c.canonical {
            writeln!(stdout, "fiber sum: {}", c.raw)?;
        }
        match c.case {
            SpecCase::Generic => {}
            SpecCase::LastWithRemainder => writeln!(stdout, "case: i = 2p−1 with r ≠ 0")?,
            SpecCase::LastExact => writeln!(stdout, "case: i = 2p−1 with r = 0")?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cover_cmd(
    spec: SpecArgs,
    script: Option<&Path>,
    print_script: bool,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let spec = spec.spec()?;
    if print_script {
        let s = MoveScript {
            moves: proof_script(&spec),
        };
        emit(out, &s.to_toml()?)?;
        return Ok(ExitCode::SUCCESS);
    }
    let moves = match script {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
            MoveScript::parse(&text)?.moves
        }
        None => proof_script(&spec),
    };
    let replay = run_script(&spec, &moves);
    let mut sink: Box<dyn Write> = match out {
        Some(p) => Box::new(io::BufWriter::new(
            std::fs::File::create(p).map_err(|e| Error::io(p, e))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    for rec in &replay.records {
        write_audit_line(&mut sink, rec)?;
    }
    sink.flush()?;
    match &replay.failure {
        None => {
            let c = classify(&spec);
            if c.raw == c.canonical {
                eprintln!("all audits pass, endpoint {}", c.raw);
            } else {
                eprintln!("all audits pass, endpoint {} = {}", c.raw, c.canonical);
            }
            Ok(ExitCode::SUCCESS)
        }
        Some(e) => {
            match e.step() {
                Some(step) => eprintln!("audit failed at step {step}: {e}"),
                None => eprintln!("audit failed: {e}"),
            }
            Ok(ExitCode::from(1))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn doubling_cmd(
    g: Option<u64>,
    b: Option<u64>,
    iterate: u32,
    family: bool,
    h: Option<u32>,
    q: Option<u32>,
    r: u32,
    p_max: u32,
) -> Result<ExitCode> {
    let mut stdout = io::stdout().lock();
    if family {
        let (h, q) = (need(h, "h")?, need(q, "q")?);
        let mut hit = None;
        for m in family_params(h, q, r)?.take_while(|m| m.p <= p_max) {
            let bp = m.spec(h).base_points();
            writeln!(
                stdout,
                "p={} g={} i={} base_points={} divisible_by_4={}",
                m.p,
                m.g,
                m.i,
                bp,
                bp % 4 == 0
            )?;
            if bp % 4 == 0 && hit.is_none() {
                hit = Some(m.p);
            }
        }
        match hit {
            None => writeln!(stdout, "base points never ≡ 0 mod 4 for p ≤ {p_max}")?,
            Some(p) => writeln!(stdout, "base points ≡ 0 mod 4 at p = {p}")?,
        }
        return Ok(ExitCode::SUCCESS);
    }
    let (mut g, mut b) = (need(g, "g")?, need(b, "b")?);
    for _ in 0..iterate {
        (g, b) = degree_double(g, b)?;
        writeln!(stdout, "({g}, {b}) divisible_by_4={}", b % 4 == 0)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn check(label: &str, ok: bool, failures: &mut usize) {
    println!("{} {label}", if ok { "ok  " } else { "FAIL" });
    if !ok {
        *failures += 1;
    }
}

fn selftest(cfg: &EngineConfig, jobs: usize) -> Result<ExitCode> {
    let mut failures = 0;
    let search = search_convention();
    check(
        "block-pass convention re-derived and matches configuration",
        search.survivors_agree && search.survivors.contains(&cfg.block_pass),
        &mut failures,
    );
    let cal = calibrate()?;
    check(
        "Meyer calibration re-derived and matches configuration",
        cal.chosen == Some(cfg.meyer_convention()),
        &mut failures,
    );
    for g in 2..=4 {
        for h in 1..g {
            let c = verify::run(VerifyTarget::BlockPassRelation { g, h }, cfg, false)?;
            check(&c.claim, c.verified, &mut failures);
        }
    }
    for m in 2..=7 {
        let c = verify::run(VerifyTarget::Reversing { m }, cfg, false)?;
        check(&c.claim, c.verified, &mut failures);
    }
    let specs = grid_specs(5);
    let eq1 = run_grid(&specs, jobs, |s| {
        verify::run(
            VerifyTarget::PencilProjection {
                g: s.g,
                h: s.h,
                i: s.i,
            },
            cfg,
            false,
        )
        .map(|c| c.verified)
    })?;
    check(
        "capped pencil words project to Δ² for g ≤ 5",
        eq1.into_iter().all(|r| matches!(r, Ok(true))),
        &mut failures,
    );
    let covers = run_grid(&specs, jobs, |s| run_script(s, &proof_script(s)).passed())?;
    check(
        "cover replays pass for g ≤ 5",
        covers.iter().all(|&ok| ok),
        &mut failures,
    );
    let audits = run_grid(&grid_specs(8), jobs, audit_row)?;
    check(
        "invariant cross-checks for g ≤ 8",
        audits
            .into_iter()
            .all(|a| a.map(|a| a.ok()).unwrap_or(false)),
        &mut failures,
    );
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = EngineConfig::load(cli.config.as_deref())?;
    let jobs = cli.jobs.resolve();
    match cli.command {
        Command::Gen { spec, capped, out } => gen(spec, capped, out.as_deref()),
        Command::Verify {
            target,
            g,
            h,
            i,
            m,
            n,
            full,
            out,
        } => verify_cmd(&cfg, target, g, h, i, m, n, full, out.as_deref()),
        Command::Invariants {
            select,
            format,
            audit,
            out,
        } => invariants_cmd(jobs, &select, format, audit, out.as_deref()),
        Command::Classify { select } => classify_cmd(&select),
        Command::Cover {
            spec,
            script,
            print_script,
            out,
        } => cover_cmd(spec, script.as_deref(), print_script, out.as_deref()),
        Command::Doubling {
            g,
            b,
            iterate,
            family,
            h,
            q,
            r,
            p_max,
        } => doubling_cmd(g, b, iterate, family, h, q, r, p_max),
        Command::Selftest => selftest(&cfg, jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        // Reader went away (e.g. `| head`); nothing left to report.
        Err(Error::Stdout(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
