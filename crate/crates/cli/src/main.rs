//! Command-line front end: build factory spikes, import/export matroids in
//! the `matroid v1` text format, transform them, check properties, recognize
//! spikes, and run the structural verification suite.
//!
//! Exit codes are uniform across verbs: 0 for success or a positive answer,
//! 1 for a semantically negative answer (property fails, no spike, a failed
//! check), 2 for usage, parse, or hypothesis errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use spikes_core::{
    all_spike_partitions, build_spike_with_cap, has_property, lift_step, quotient_step,
    recognize_spike, text, tip_extension, untip, verify_coechidna_implication,
    verify_spike_structure, CheckStatus, Matroid, SpikeCertificate, SubsetMask, WitnessKind,
    DEFAULT_CAP, MAX_CAP,
};

#[derive(Parser)]
#[command(
    name = "spikes",
    version,
    about = "Exact matroid computations around (s,t)-spikes",
    after_help = "Exit codes: 0 success/holds, 1 semantic negative, 2 usage/parse/hypothesis error."
)]
struct Cli {
    /// Override the ground-set size cap (default 22, hard ceiling 28).
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,

    /// Write the built-in instance files into DIR and exit.
    #[arg(long, value_name = "DIR")]
    seed_corpus: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Build an (s,t)-spike of order m; writes OUT.mtx, OUT.cert, OUT.trace.
    Build {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Order (number of arms); needs m >= s + t.
        #[arg(long)]
        m: usize,
        #[arg(short, long, value_name = "PREFIX")]
        out: PathBuf,
    },
    /// Check the (s,u,t,v)-property of a matroid file.
    Check {
        path: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        v: usize,
    },
    /// Search for an (s,t)-spike certificate.
    Recognize {
        path: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Verify a certificate against a matroid, one check per line.
    Verify { path: PathBuf, cert: PathBuf },
    /// Apply a transformation; writes OUT.mtx (and OUT.cert when the
    /// operation carries the certificate along).
    Transform {
        path: PathBuf,
        #[arg(long, value_enum)]
        op: Op,
        /// Elements for delete/contract, comma separated (e.g. 0,3,5).
        #[arg(long, value_name = "LIST")]
        elements: Option<String>,
        /// Certificate file (required for quotient, lift, untip, tip).
        #[arg(long, value_name = "PATH")]
        cert: Option<PathBuf>,
        #[arg(short, long, value_name = "PREFIX")]
        out: PathBuf,
    },
    /// Brute-force enumeration of every (s,t)-spike certificate (n <= 12).
    Oracle {
        path: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Dual,
    Delete,
    Contract,
    Quotient,
    Lift,
    Untip,
    Tip,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let cap = match cli.cap {
        None => DEFAULT_CAP,
        Some(c) if (1..=MAX_CAP).contains(&c) => c,
        Some(c) => return Err(format!("--cap {c} out of range 1..={MAX_CAP}")),
    };

    if let Some(dir) = cli.seed_corpus {
        if cli.command.is_some() {
            return Err("--seed-corpus runs on its own, without a subcommand".into());
        }
        return seed_corpus(&dir);
    }

    let Some(command) = cli.command else {
        return Err("missing subcommand; see --help".into());
    };

    match command {
        Command::Build { s, t, m, out } => cmd_build(s, t, m, &out, cap),
        Command::Check { path, s, u, t, v } => cmd_check(&path, s, u, t, v, cap),
        Command::Recognize { path, s, t } => cmd_recognize(&path, s, t, cap),
        Command::Verify { path, cert } => cmd_verify(&path, &cert, cap),
        Command::Transform {
            path,
            op,
            elements,
            cert,
            out,
        } => cmd_transform(&path, op, elements.as_deref(), cert.as_deref(), &out, cap),
        Command::Oracle { path, s, t } => cmd_oracle(&path, s, t, cap),
    }
}

fn seed_corpus(dir: &Path) -> Result<u8, String> {
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    for (name, m) in spikes_core::corpus::seed_entries() {
        let path = dir.join(format!("{name}.mtx"));
        fs::write(&path, text::render_matroid(&m))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn load_matroid(path: &Path, cap: usize) -> Result<Matroid, String> {
    let raw = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text::parse_matroid_with_cap(&raw, cap).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_certificate(path: &Path) -> Result<SpikeCertificate, String> {
    let raw = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    SpikeCertificate::parse(&raw).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn indices_csv(mask: SubsetMask) -> String {
    let words: Vec<String> = mask.iter().map(|i| i.to_string()).collect();
    words.join(",")
}

fn cmd_build(s: usize, t: usize, m: usize, out: &Path, cap: usize) -> Result<u8, String> {
    let (matroid, cert, trace) = build_spike_with_cap(s, t, m, cap).map_err(|e| e.to_string())?;
    write_file(&out.with_extension("mtx"), &text::render_matroid(&matroid))?;
    write_file(&out.with_extension("cert"), &cert.to_text())?;
    write_file(&out.with_extension("trace"), &trace.render())?;
    println!(
        "built ({s},{t})-spike of order {m}: {} elements, rank {}",
        matroid.n(),
        matroid.full_rank()
    );
    Ok(0)
}

fn cmd_check(path: &Path, s: usize, u: usize, t: usize, v: usize, cap: usize) -> Result<u8, String> {
    let m = load_matroid(path, cap)?;
    let report = has_property(&m, s, u, t, v).map_err(|e| e.to_string())?;
    if report.holds {
        println!("property=holds");
        Ok(0)
    } else {
        let kind = match report.missing_kind {
            Some(WitnessKind::Cocircuit) => "cocircuit",
            _ => "circuit",
        };
        println!(
            "property=fails kind={kind} witness={}",
            indices_csv(report.failing_subset.unwrap_or_default())
        );
        Ok(1)
    }
}

fn cmd_recognize(path: &Path, s: usize, t: usize, cap: usize) -> Result<u8, String> {
    check_positive(s, t)?;
    let m = load_matroid(path, cap)?;
    match recognize_spike(&m, s, t) {
        Some(cert) => {
            print!("{}", cert.to_text());
            Ok(0)
        }
        None => {
            println!("spike=none");
            Ok(1)
        }
    }
}

fn cmd_verify(path: &Path, cert_path: &Path, cap: usize) -> Result<u8, String> {
    let m = load_matroid(path, cap)?;
    let cert = load_certificate(cert_path)?;
    let report = verify_spike_structure(&m, &cert).map_err(|e| e.to_string())?;
    print!("{}", report.render());
    let cert_ok = report
        .checks()
        .iter()
        .any(|c| c.name == "certificate" && c.status == CheckStatus::Pass);
    let mut failed = !report.passed();

    let (s, t) = (cert.s(), cert.t());
    let property = if cert_ok {
        Some(has_property(&m, s, 2 * s, t, 2 * t).map_err(|e| e.to_string())?)
    } else {
        None
    };
    match &property {
        Some(p) if p.holds => println!("check=property status=pass witness=-"),
        Some(p) => {
            failed = true;
            println!(
                "check=property status=fail witness={}",
                p.failing_subset.map_or("-".into(), |w| w.0.to_string())
            );
        }
        None => println!("check=property status=na witness=-"),
    }

    let implication_applies = cert_ok
        && property.as_ref().is_some_and(|p| p.holds)
        && cert.order() >= s + 2 * t - 1;
    if implication_applies {
        let ok = verify_coechidna_implication(&m, cert.partition(), s, t)
            .map_err(|e| e.to_string())?;
        if ok {
            println!("check=coechidna-implication status=pass witness=-");
        } else {
            failed = true;
            println!("check=coechidna-implication status=fail witness=-");
        }
    } else {
        println!("check=coechidna-implication status=na witness=-");
    }

    Ok(if failed { 1 } else { 0 })
}

fn parse_elements(list: Option<&str>, m: &Matroid) -> Result<SubsetMask, String> {
    let Some(list) = list else {
        return Err("this operation needs --elements".into());
    };
    let mut mask = SubsetMask::EMPTY;
    for word in list.split(',') {
        let i: usize = word
            .trim()
            .parse()
            .map_err(|_| format!("bad element index '{word}'"))?;
        if i >= m.n() {
            return Err(format!("element {i} out of range for n = {}", m.n()));
        }
        mask = mask.with(i);
    }
    Ok(mask)
}

fn cmd_transform(
    path: &Path,
    op: Op,
    elements: Option<&str>,
    cert_path: Option<&Path>,
    out: &Path,
    cap: usize,
) -> Result<u8, String> {
    let m = load_matroid(path, cap)?;
    let cert = match cert_path {
        Some(p) => Some(load_certificate(p)?),
        None => None,
    };
    let need_cert = || cert.clone().ok_or_else(|| "this operation needs --cert".to_string());

    let (result, out_cert) = match op {
        Op::Dual => (m.dual(), cert.map(|c| c.dual())),
        Op::Delete => {
            let gone = parse_elements(elements, &m)?;
            (m.delete(gone).0, None)
        }
        Op::Contract => {
            let gone = parse_elements(elements, &m)?;
            (m.contract(gone).0, None)
        }
        Op::Quotient => {
            let (q, c) = quotient_step(&m, &need_cert()?, None).map_err(|e| e.to_string())?;
            (q, Some(c))
        }
        Op::Lift => {
            let (l, c) = lift_step(&m, &need_cert()?).map_err(|e| e.to_string())?;
            (l, Some(c))
        }
        Op::Untip => {
            let (u, c) = untip(&m, &need_cert()?).map_err(|e| e.to_string())?;
            (u, Some(c))
        }
        Op::Tip => {
            // the tip invalidates the arm cover, so only the matroid is written
            (tip_extension(&m, &need_cert()?).map_err(|e| e.to_string())?, None)
        }
    };

    write_file(&out.with_extension("mtx"), &text::render_matroid(&result))?;
    if let Some(c) = out_cert {
        write_file(&out.with_extension("cert"), &c.to_text())?;
    }
    println!(
        "wrote {} ({} elements, rank {})",
        out.with_extension("mtx").display(),
        result.n(),
        result.full_rank()
    );
    Ok(0)
}

fn cmd_oracle(path: &Path, s: usize, t: usize, cap: usize) -> Result<u8, String> {
    check_positive(s, t)?;
    let m = load_matroid(path, cap)?;
    if m.n() > 12 {
        return Err(format!(
            "oracle enumeration is factorial; n = {} exceeds the guard of 12",
            m.n()
        ));
    }
    let all = all_spike_partitions(&m, s, t);
    if all.is_empty() {
        println!("spike=none");
        return Ok(1);
    }
    for cert in all {
        print!("{}", cert.to_text());
    }
    Ok(0)
}

fn check_positive(s: usize, t: usize) -> Result<(), String> {
    if s < 1 || t < 1 {
        return Err("s and t must be positive".into());
    }
    Ok(())
}
