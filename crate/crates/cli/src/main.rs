use std::process::ExitCode;

use charsheaf_cli::commands::{self, CommandOutput};
use charsheaf_cli::convert::{parse_partition, parse_zeta};
use charsheaf_cli::envelope::{RunConfig, TableEnvelope};
use charsheaf_cli::verify;
use clap::{Parser, Subcommand};

/// Exact combinatorics of character sheaves and almost characters for
/// the finite special linear groups.
#[derive(Parser)]
#[command(name = "charsheaf", version, about)]
struct Cli {
    /// Output format: json (envelope) or csv (flat tables only).
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Fourth root of unity for non-principal blocks: symbolic (kept as
    /// a separate factor, treated as 1 in assembled values), 1, -1, i, -i.
    #[arg(long, global = true, default_value = "symbolic")]
    zeta: String,
    /// Sign convention for assembled scalars.
    #[arg(long, global = true, default_value_t = 1)]
    sign: i8,
    /// Cap on brute-force group orders.
    #[arg(long, global = true, default_value_t = charsheaf::DEFAULT_GROUP_ORDER_CAP)]
    cap: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Brute-force oracle over tiny matrix groups.
    Oracle {
        #[command(subcommand)]
        sub: OracleCmd,
    },
    /// Weighted Dynkin diagram, Lagrangian root subset, dimensions.
    Orbits {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        mu: String,
    },
    /// Springer block table with exponents.
    Springer {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Kostka-Foulkes polynomials and block inner products.
    Green {
        #[command(subcommand)]
        sub: GreenCmd,
    },
    /// Gelfand-Graev inner products against the X-basis.
    Gggr {
        #[command(subcommand)]
        sub: GggrCmd,
    },
    /// Semisimple classes of the dual group and parameter counts.
    Lseries {
        #[command(subcommand)]
        sub: LseriesCmd,
    },
    /// Almost-character transform matrices.
    Almost {
        #[command(subcommand)]
        sub: AlmostCmd,
    },
    /// Character-sheaf census and scalar records.
    Sheaves {
        #[command(subcommand)]
        sub: SheavesCmd,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Full conjugacy census of SL_n(F_q).
    Classes {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
    },
}

#[derive(Subcommand)]
enum GreenCmd {
    Kostka {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    Omega {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: u32,
        /// Orbit partition of the first label (parts divisible by d).
        #[arg(long)]
        iota: String,
        /// Orbit partition of the second label.
        #[arg(long)]
        iota2: String,
    },
}

#[derive(Subcommand)]
enum GggrCmd {
    Inner {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
        /// Orbit of the Gelfand-Graev character.
        #[arg(long)]
        mu: String,
        /// Twist class in the coinvariants.
        #[arg(long, default_value_t = 0)]
        c: u32,
        /// Twist of the opposed nilpotent (from `oracle`, or 0).
        #[arg(long, default_value_t = 0)]
        c0: u32,
        /// Use the regular-nilpotent closed form.
        #[arg(long)]
        regular: bool,
        /// Restrict to one X-basis label (orbit partition).
        #[arg(long)]
        iota: Option<String>,
    },
}

#[derive(Subcommand)]
enum LseriesCmd {
    Classes {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
    },
    IrrCount {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
    },
}

#[derive(Subcommand)]
enum AlmostCmd {
    Matrix {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        q: u32,
        /// Optional orbit: builds the context from the Z^1_M-quotient.
        #[arg(long)]
        mu: Option<String>,
    },
}

#[derive(Subcommand)]
enum SheavesCmd {
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        p: u32,
    },
    Scalar {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: u32,
        /// Base partition of the repeated factor E_2 (a partition of n/t).
        #[arg(long)]
        e2: String,
        #[arg(long, default_value_t = 0)]
        twist: u32,
        /// Index of the order-d central character.
        #[arg(long, default_value_t = 1)]
        eps: u32,
        #[arg(long, default_value_t = 0)]
        c0: u32,
    },
}

fn exit_code_for(err: &charsheaf::Error) -> u8 {
    match err {
        charsheaf::Error::CapExceeded { .. } => 3,
        charsheaf::Error::UniquenessViolation => 4,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<(String, CommandOutput), (u8, String)> {
    let zeta = parse_zeta(&cli.zeta).map_err(|e| (2u8, e))?;
    let bad_part = |e: String| (2u8, e);
    let lib = |e: charsheaf::Error| (exit_code_for(&e), format!("{e}"));
    match &cli.cmd {
        Cmd::Oracle { sub: OracleCmd::Classes { n, q } } => {
            let out = commands::oracle_classes(*n, *q, cli.cap).map_err(lib)?;
            Ok(("oracle classes".into(), out))
        }
        Cmd::Orbits { n, mu } => {
            let mu = parse_partition(mu).map_err(bad_part)?;
            let out = commands::orbits_cmd(*n, &mu).map_err(lib)?;
            Ok(("orbits".into(), out))
        }
        Cmd::Springer { n, p, d } => {
            let out = commands::springer_cmd(*n, *p, *d).map_err(lib)?;
            Ok(("springer".into(), out))
        }
        Cmd::Green { sub } => match sub {
            GreenCmd::Kostka { lambda, mu } => {
                let l = parse_partition(lambda).map_err(bad_part)?;
                let m = parse_partition(mu).map_err(bad_part)?;
                let out = commands::green_kostka(&l, &m).map_err(lib)?;
                Ok(("green kostka".into(), out))
            }
            GreenCmd::Omega { n, p, d, iota, iota2 } => {
                let i1 = parse_partition(iota).map_err(bad_part)?;
                let i2 = parse_partition(iota2).map_err(bad_part)?;
                let out = commands::green_omega(*n, *p, *d, &i1, &i2).map_err(lib)?;
                Ok(("green omega".into(), out))
            }
        },
        Cmd::Gggr { sub } => match sub {
            GggrCmd::Inner { n, p, q, d, mu, c, c0, regular, iota } => {
                let mu = parse_partition(mu).map_err(bad_part)?;
                let iota = match iota {
                    None => None,
                    Some(s) => Some(parse_partition(s).map_err(bad_part)?),
                };
                let out = commands::gggr_inner(
                    *n, *p, *d, &mu, *c, *c0, *regular, iota.as_ref(), &zeta, *q as u64,
                )
                .map_err(lib)?;
                Ok(("gggr inner".into(), out))
            }
        },
        Cmd::Lseries { sub } => match sub {
            LseriesCmd::Classes { n, q } => {
                let out = commands::lseries_classes(*n, *q).map_err(lib)?;
                Ok(("lseries classes".into(), out))
            }
            LseriesCmd::IrrCount { n, q } => {
                let out = commands::lseries_irr_count(*n, *q).map_err(lib)?;
                Ok(("lseries irr-count".into(), out))
            }
        },
        Cmd::Almost { sub: AlmostCmd::Matrix { t, q, mu } } => {
            let mu = match mu {
                None => None,
                Some(s) => Some(parse_partition(s).map_err(bad_part)?),
            };
            let out = commands::almost_matrix(*t, *q, mu.as_ref()).map_err(lib)?;
            Ok(("almost matrix".into(), out))
        }
        Cmd::Sheaves { sub } => match sub {
            SheavesCmd::Census { n, q, p } => {
                let out = commands::sheaves_census(*n, *q, *p).map_err(lib)?;
                Ok(("sheaves census".into(), out))
            }
            SheavesCmd::Scalar { n, t, d, q, e2, twist, eps, c0 } => {
                let e2 = parse_partition(e2).map_err(bad_part)?;
                let out = commands::sheaves_scalar(
                    *n, *t, *d, *q, &e2, *twist, *eps, *c0, &zeta, cli.sign,
                )
                .map_err(lib)?;
                Ok(("sheaves scalar".into(), out))
            }
        },
        Cmd::Verify { suite } => {
            let report = verify::run_suite(suite)
                .ok_or_else(|| (2u8, format!("unknown suite '{suite}'")))?;
            let pass = report.pass;
            let payload = serde_json::to_value(&report).unwrap();
            let out = CommandOutput { payload, csv: None };
            if !pass {
                // still emit the report, then fail below
                return Ok((format!("verify --suite {suite} [FAILED]"), out));
            }
            Ok((format!("verify --suite {suite}"), out))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        n: None,
        q: None,
        p: None,
        group_order_cap: cli.cap,
        zeta: cli.zeta.clone(),
        sign: cli.sign,
        format: cli.format.clone(),
        deterministic: true,
    };
    let format = cli.format.clone();
    match run(cli) {
        Ok((command, out)) => {
            let failed = command.ends_with("[FAILED]");
            if format == "csv" {
                match &out.csv {
                    Some(rows) => print!("{}", commands::render_csv(rows)),
                    None => {
                        eprintln!("no CSV mirror for this payload; use --format json");
                        return ExitCode::from(2);
                    }
                }
            } else {
                let env = TableEnvelope::new(&command, config, out.payload);
                println!("{}", env.emit());
            }
            if failed {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
