//! Command-line front end for the `korbit` library.

pub mod document;

use clap::{Args, Parser, Subcommand, ValueEnum};
use korbit::graph::GraphContext;
use korbit::richardson::{richardson_candidates, u_listing, v_listing, Composition};
use korbit::singularity::classify;
use korbit::verify::{all_passed, verify};
use korbit::{compare, enumerate, is_grassmannian, rank_info, Comparison, Error, Family, FamilyTag, Param};
use serde_json::json;

use crate::document::{Edges, PosetDocument};

pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCOMPARABLE: i32 = 3;
pub const EXIT_INVALID_PARAM: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "korbit", version, about = "Orbits of symmetric subgroups on classical flag varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum FamilyName {
    AI,
    AII,
    AIII,
    CI,
    CII,
    BDI,
    DIII,
}

impl From<FamilyName> for FamilyTag {
    fn from(f: FamilyName) -> FamilyTag {
        match f {
            FamilyName::AI => FamilyTag::AI,
            FamilyName::AII => FamilyTag::AII,
            FamilyName::AIII => FamilyTag::AIII,
            FamilyName::CI => FamilyTag::CI,
            FamilyName::CII => FamilyTag::CII,
            FamilyName::BDI => FamilyTag::BDI,
            FamilyName::DIII => FamilyTag::DIII,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every orbit parameter of a family.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rank and dimension of one orbit.
    Rank {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        param: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare two orbits in the closure order.
    Compare {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
        param: Vec<String>,
    },
    /// Hasse diagram of the closure order.
    Hasse {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, num_args = 2, value_names = ["LOW", "HIGH"], allow_hyphen_values = true)]
        interval: Option<Vec<String>>,
    },
    /// Bruhat graph together with the Hasse covers.
    Graph {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, num_args = 2, value_names = ["LOW", "HIGH"], allow_hyphen_values = true)]
        interval: Option<Vec<String>>,
    },
    /// Smoothness verdict of an orbit closure.
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        param: String,
    },
    /// Richardson permutations of a 1212-avoiding clan.
    Richardson {
        #[arg(long, allow_hyphen_values = true)]
        param: String,
    },
    /// Run every cross-check suite up to a size bound.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long, alias = "max-n")]
        max_size: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Output of a command and the exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Outcome {
        Outcome { code, stdout: String::new(), stderr }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidFamily(_) | Error::InvalidGenerator(_) => EXIT_USAGE,
        Error::NotComparable => EXIT_INCOMPARABLE,
        Error::InternalInvariant(_) | Error::GrassmannianViolation { .. } => EXIT_VERIFY,
        _ => EXIT_INVALID_PARAM,
    }
}

fn family_of(a: &FamilyArgs) -> korbit::Result<Family> {
    Family::new(a.family.into(), a.n, a.m, a.p, a.q)
}

/// Like [`family_of`], but missing sizes are read off `param`.
fn family_for(a: &FamilyArgs, param: &str) -> korbit::Result<Family> {
    if a.n.is_some() || a.m.is_some() || a.p.is_some() || a.q.is_some() {
        return family_of(a);
    }
    let tag: FamilyTag = a.family.into();
    let f = match tag {
        FamilyTag::AI | FamilyTag::AII => Family::new(tag, Some(param.parse::<korbit::Perm>()?.len()), None, None, None),
        _ => {
            let c: korbit::Clan = param.parse()?;
            let (p, q) = c.signature();
            match tag {
                FamilyTag::CII => Family::new(tag, None, None, Some(p / 2), Some(q / 2)),
                FamilyTag::CI | FamilyTag::DIII => Family::new(tag, Some(c.len() / 2), Some(c.len() / 2), None, None),
                _ => Family::new(tag, None, None, Some(p), Some(q)),
            }
        }
    };
    f.map_err(|e| match e {
        Error::InvalidFamily(msg) => Error::FamilyMismatch(msg),
        other => other,
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

pub fn run(cli: Cli) -> Outcome {
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    }
}

fn execute(cmd: Command) -> korbit::Result<Outcome> {
    match cmd {
        Command::Enumerate { family, format } => {
            let f = family_of(&family)?;
            let params: Vec<String> = enumerate(&f).iter().map(Param::to_string).collect();
            Ok(match format {
                Format::Json => Outcome::ok(to_json(&json!({ "family": f, "count": params.len(), "params": params }))),
                _ => Outcome {
                    code: 0,
                    stdout: params.iter().map(|p| format!("{p}\n")).collect(),
                    stderr: format!("{f}: {} orbits\n", params.len()),
                },
            })
        }
        Command::Rank { family, param, format } => {
            let f = family_for(&family, &param)?;
            let x = f.parse_param(&param)?;
            let info = rank_info(&x, &f)?;
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&info),
                _ => format!("rank={} dim={} closed_dim={}\n", info.rank, info.dim, info.closed_dim),
            }))
        }
        Command::Compare { family, param } => {
            let f = family_for(&family, &param[0])?;
            let x = f.parse_param(&param[0])?;
            let y = f.parse_param(&param[1])?;
            let word = match compare(&x, &y, &f)? {
                Comparison::Less => "less",
                Comparison::Equal => "equal",
                Comparison::Greater => "greater",
                Comparison::Incomparable => "incomparable",
            };
            Ok(Outcome::ok(format!("{word}\n")))
        }
        Command::Hasse { family, format, interval } => poset_command(&family, format, interval, Edges::Hasse),
        Command::Graph { family, format, interval } => poset_command(&family, format, interval, Edges::All),
        Command::Classify { family, param } => {
            let f = family_for(&family, &param)?;
            let x = f.parse_param(&param)?;
            Ok(Outcome::ok(to_json(&classify(&x, &f)?)))
        }
        Command::Richardson { param } => {
            let c: korbit::Clan = param.parse()?;
            let pair = richardson_candidates(&c, Composition::Functional)?;
            let (gu, gv) = (is_grassmannian(&pair.u, pair.p), is_grassmannian(&pair.v, pair.p));
            let body = to_json(&json!({
                "clan": c.to_string(),
                "p": pair.p,
                "v_c": v_listing(&c).to_string(),
                "u_c": u_listing(&c).to_string(),
                "u": pair.u.to_string(),
                "v": pair.v.to_string(),
                "u_grassmannian": gu,
                "v_grassmannian": gv,
            }));
            if gu && gv {
                Ok(Outcome::ok(body))
            } else {
                let which = if gu { "v" } else { "u" };
                let perm = if gu { &pair.v } else { &pair.u };
                Ok(Outcome {
                    code: EXIT_VERIFY,
                    stdout: body,
                    stderr: format!("error: {}\n", Error::GrassmannianViolation { which, perm: perm.to_string(), p: pair.p }),
                })
            }
        }
        Command::Verify { family, max_size, format } => {
            let reports = verify(family.into(), max_size)?;
            let ok = all_passed(&reports);
            let stdout = match format {
                Format::Json => to_json(&reports),
                _ => reports
                    .iter()
                    .map(|r| {
                        let status = if r.passed {
                            "pass"
                        } else if r.gating {
                            "FAIL"
                        } else {
                            "info"
                        };
                        let mut line = format!("{status} {} {} checked={} failures={}\n", r.family, r.suite, r.checked, r.failures);
                        if let Some(ce) = &r.counterexample {
                            line += &format!("  counterexample: {ce}\n");
                        }
                        for n in &r.notes {
                            line += &format!("  {n}\n");
                        }
                        line
                    })
                    .collect(),
            };
            Ok(Outcome { code: if ok { 0 } else { EXIT_VERIFY }, stdout, stderr: String::new() })
        }
    }
}

fn poset_command(family: &FamilyArgs, format: Format, interval: Option<Vec<String>>, edges: Edges) -> korbit::Result<Outcome> {
    let f = match &interval {
        Some(ends) => family_for(family, &ends[0])?,
        None => family_of(family)?,
    };
    let ctx = GraphContext::new(&f)?;
    let keep: Vec<usize> = match interval {
        None => (0..ctx.poset.len()).collect(),
        Some(ends) => {
            let lo = f.parse_param(&ends[0])?;
            let hi = f.parse_param(&ends[1])?;
            let find = |x: &Param| ctx.poset.index_of(x).ok_or_else(|| Error::FamilyMismatch(format!("{x} in {f}")));
            let (a, b) = (find(&lo)?, find(&hi)?);
            if !ctx.poset.leq(a, b) {
                return Err(Error::NotComparable);
            }
            ctx.poset.interval(a, b)
        }
    };
    let doc = PosetDocument::build(&ctx, &keep, edges)?;
    Ok(Outcome::ok(match format {
        Format::Json => to_json(&doc),
        Format::Dot => doc.to_dot(),
        Format::Text => doc.to_text(),
    }))
}
