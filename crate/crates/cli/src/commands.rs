use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hessberg_core::catalog::{self, build_catalog};
use hessberg_core::hessenberg::enumerate_all;
use hessberg_core::nilpotent::{connect_chain, fixed_points};
use hessberg_core::notation::{format_hess, format_root_symbolic, parse_hess, parse_levi, parse_nilpotent, parse_word, HessSpec};
use hessberg_core::report::{hess_to_json, BettiReport, ChainReport};
use hessberg_core::semisimple::{betti_numbers, disconnection_witness, is_connected_by_criterion};
use hessberg_core::weyl::{enumerate_weyl, DEFAULT_ELEMENT_CAP};
use hessberg_core::{CartanDatum, Error, HessenbergSpace, LeviDatum, RootSystem, WeylGroup};

use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "hessberg", version, about = "Betti numbers and connectedness of Hessenberg varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Cartan type, e.g. A3 or G2.
    #[arg(long = "type", value_name = "TYPE")]
    pub cartan: CartanDatum,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Allow Weyl groups with more than 60000 elements.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct SemisimpleArgs {
    #[command(flatten)]
    pub common: Common,
    /// Levi subset as 1-based simple indices, empty for the torus.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub levi: String,
    /// `neg=<roots>`, `h=<values>` or `all`.
    #[arg(long, allow_hyphen_values = true)]
    pub hess: String,
}

#[derive(Debug, Args)]
pub struct NilpotentArgs {
    #[command(flatten)]
    pub common: Common,
    /// Support of the nilpotent element, comma-separated roots.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub nilpotent: String,
    #[arg(long, allow_hyphen_values = true)]
    pub hess: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, positive roots, highest root and Weyl group order.
    Describe(Common),
    /// List every Hessenberg space.
    HessenbergEnumerate(Common),
    /// Cell dimensions and Betti numbers of B(S, H).
    Betti {
        #[command(flatten)]
        args: SemisimpleArgs,
        /// Also write the JSON report to this file.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Connectedness by Betti numbers and by the negative-simple-root criterion.
    Connected(SemisimpleArgs),
    /// A point cell certifying disconnection.
    Witness(SemisimpleArgs),
    /// Torus-fixed points of B(N, H).
    FixedPoints(NilpotentArgs),
    /// Rational-curve descent chain from a fixed point to the identity.
    Chain {
        #[command(flatten)]
        args: NilpotentArgs,
        /// Starting Weyl element, e.g. "s1 s2" or "e".
        #[arg(long, default_value = "e")]
        start: String,
    },
    /// All (Levi, Hessenberg space) pairs with both connectedness verdicts.
    Catalog {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all", allow_hyphen_values = true)]
        hess: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the exhaustive property suite over every type up to a rank.
    ValidateAll {
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Violation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Violation(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Violation(m) => write!(f, "property violation: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_violation() {
            CliError::Violation(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("i/o: {e}"))
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

type CliResult<T = ()> = Result<T, CliError>;

pub fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Describe(c) => describe(&c),
        Command::HessenbergEnumerate(c) => hessenberg_enumerate(&c),
        Command::Betti { args, json } => betti(&args, json),
        Command::Connected(args) => connected(&args),
        Command::Witness(args) => witness(&args),
        Command::FixedPoints(args) => fixed(&args),
        Command::Chain { args, start } => chain(&args, &start),
        Command::Catalog { common, hess, jobs } => run_catalog(&common, &hess, jobs),
        Command::ValidateAll { max_rank, jobs } => {
            let mut stdout = std::io::stdout().lock();
            let ok = verify::validate_all(max_rank, jobs, &mut stdout)?;
            if ok {
                Ok(())
            } else {
                Err(CliError::Violation("validate-all reported failures".into()))
            }
        }
    }
}

fn root_system(c: &Common) -> CliResult<RootSystem> {
    Ok(RootSystem::new(c.cartan.clone())?)
}

fn weyl_group(c: &Common) -> CliResult<WeylGroup> {
    let rs = root_system(c)?;
    let cap = if c.force { usize::MAX } else { DEFAULT_ELEMENT_CAP };
    enumerate_weyl(rs, cap).map_err(|e| match e {
        Error::ElementCap { .. } => CliError::Input(format!("{e}; pass --force to enumerate anyway")),
        e => e.into(),
    })
}

fn emit(c: &Common, bytes: &[u8]) -> CliResult {
    match &c.out {
        Some(path) => fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

fn json_bytes<T: serde::Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("serializable");
    out.push(b'\n');
    out
}

fn describe(c: &Common) -> CliResult {
    let rs = root_system(c)?;
    let order = rs.cartan().weyl_order();
    if c.format == Some(Format::Json) {
        let value = serde_json::json!({
            "cartan": rs.cartan().to_string(),
            "matrix": rs.cartan().matrix(),
            "positive_roots": rs.positive_roots(),
            "highest_root": rs.highest_root(),
            "weyl_order": order.to_string(),
        });
        return emit(c, &json_bytes(&value));
    }
    let mut s = String::new();
    s += &format!("type {}\ncartan matrix:\n", rs.cartan());
    for row in rs.cartan().matrix() {
        s += &format!("  {}\n", row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "));
    }
    s += &format!("positive roots: {}\n", rs.num_positive());
    for r in rs.positive_roots() {
        s += &format!("  {r}  {}\n", format_root_symbolic(r));
    }
    s += &format!("highest root: {}\nweyl group order: {order}\n", rs.highest_root());
    emit(c, s.as_bytes())
}

fn hessenberg_enumerate(c: &Common) -> CliResult {
    let rs = root_system(c)?;
    let spaces = enumerate_all(&rs)?;
    let bytes = match c.format.unwrap_or(Format::Text) {
        Format::Json => {
            let v: Vec<_> = spaces.iter().map(|h| hess_to_json(&rs, h)).collect();
            json_bytes(&v)
        }
        Format::Csv => {
            let mut s = String::from("size,neg\n");
            for h in &spaces {
                s += &format!("{},{}\n", h.neg_roots().len(), csv_field(&format_hess(&rs, h)));
            }
            s.into_bytes()
        }
        Format::Text => {
            let mut s = String::new();
            for h in &spaces {
                s += &format!("{}\n", format_hess(&rs, h));
            }
            s.into_bytes()
        }
    };
    emit(c, &bytes)
}

fn semisimple_inputs(args: &SemisimpleArgs) -> CliResult<(WeylGroup, LeviDatum, Vec<HessenbergSpace>)> {
    let g = weyl_group(&args.common)?;
    let rs = g.root_system();
    let levi = parse_levi(rs, &args.levi)?;
    let spaces = parse_hess(rs, &args.hess)?.spaces(rs)?;
    Ok((g, levi, spaces))
}

fn betti(args: &SemisimpleArgs, json_path: Option<PathBuf>) -> CliResult {
    let (g, levi, spaces) = semisimple_inputs(args)?;
    let rs = g.root_system();
    let mut reports = Vec::new();
    for h in &spaces {
        let table = betti_numbers(&g, &levi, h);
        let witness = if is_connected_by_criterion(rs, &levi, h) {
            None
        } else {
            Some(disconnection_witness(rs, &levi, h)?)
        };
        reports.push(BettiReport::new(rs, &levi, h, &table, witness.as_ref()));
    }
    let json = if reports.len() == 1 { json_bytes(&reports[0]) } else { json_bytes(&reports) };
    if let Some(path) = json_path {
        fs::write(path, &json)?;
    }
    let bytes = match args.common.format.unwrap_or(Format::Text) {
        Format::Json => json,
        Format::Csv => {
            let mut s = String::from("hess,w,y,v,dim\n");
            for (h, r) in spaces.iter().zip(&reports) {
                for cell in &r.cells {
                    s += &format!("{},{},{},{},{}\n", csv_field(&format_hess(rs, h)), cell.w, cell.y, cell.v, cell.dim);
                }
            }
            s.into_bytes()
        }
        Format::Text => {
            let mut s = String::new();
            for (h, r) in spaces.iter().zip(&reports) {
                s += &format!("{} levi=[{}] hess={}\n", r.cartan, args.levi.trim(), format_hess(rs, h));
                for cell in &r.cells {
                    s += &format!("  w={:<12} y={:<10} v={:<12} dim={}\n", cell.w, cell.y, cell.v, cell.dim);
                }
                s += &format!("betti: {:?}\npoincare: {}\nconnected: {}\n", r.betti, r.poincare, r.connected);
            }
            s.into_bytes()
        }
    };
    emit(&args.common, &bytes)
}

fn connected(args: &SemisimpleArgs) -> CliResult {
    let (g, levi, spaces) = semisimple_inputs(args)?;
    let rs = g.root_system();
    let mut out = String::new();
    let mut disagreements = 0;
    let mut json = Vec::new();
    for h in &spaces {
        let table = betti_numbers(&g, &levi, h);
        let by_betti = table.n0() == 1;
        let by_criterion = is_connected_by_criterion(rs, &levi, h);
        let witness = if by_criterion { None } else { Some(disconnection_witness(rs, &levi, h)?) };
        if spaces.len() > 1 {
            out += &format!("{}: ", format_hess(rs, h));
        }
        out += &format!(
            "{} (criterion: {}, betti n0={})\n",
            if by_betti { "connected" } else { "disconnected" },
            if by_criterion { "yes" } else { "no" },
            table.n0()
        );
        if let Some(w) = &witness {
            out += &format!("  witness: alpha={} v={}\n", format_root_symbolic(rs.root(rs.simple_id(w.alpha))), w.v);
        }
        if by_betti != by_criterion {
            disagreements += 1;
        }
        json.push(serde_json::json!({
            "hess_neg": hess_to_json(rs, h),
            "connected_by_betti": by_betti,
            "connected_by_criterion": by_criterion,
            "n0": table.n0(),
            "witness": witness.map(|w| hessberg_core::report::WitnessJson::new(rs, &w)),
        }));
    }
    let bytes = match args.common.format.unwrap_or(Format::Text) {
        Format::Json if json.len() == 1 => json_bytes(&json[0]),
        Format::Json => json_bytes(&json),
        _ => out.into_bytes(),
    };
    emit(&args.common, &bytes)?;
    if disagreements > 0 {
        return Err(CliError::Violation(format!("{disagreements} Betti/criterion disagreement(s)")));
    }
    Ok(())
}

fn witness(args: &SemisimpleArgs) -> CliResult {
    let (g, levi, spaces) = semisimple_inputs(args)?;
    let rs = g.root_system();
    let mut text = String::new();
    let mut json = Vec::new();
    for h in &spaces {
        let w = match disconnection_witness(rs, &levi, h) {
            Ok(w) => w,
            Err(e @ (Error::NoWitness | Error::CentralLevi)) if spaces.len() > 1 => {
                text += &format!("{}: {e}\n", format_hess(rs, h));
                json.push(serde_json::Value::Null);
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        if !hessberg_core::semisimple::witness_is_sound(rs, &levi, h, &w) {
            return Err(CliError::Violation(format!("witness {} is unsound", w.v)));
        }
        if spaces.len() > 1 {
            text += &format!("{}: ", format_hess(rs, h));
        }
        text += &format!("alpha={} v={}\n", format_root_symbolic(rs.root(rs.simple_id(w.alpha))), w.v);
        json.push(serde_json::to_value(hessberg_core::report::WitnessJson::new(rs, &w)).expect("serializable"));
    }
    let bytes = match args.common.format.unwrap_or(Format::Text) {
        Format::Json if json.len() == 1 => json_bytes(&json[0]),
        Format::Json => json_bytes(&json),
        _ => text.into_bytes(),
    };
    emit(&args.common, &bytes)
}

fn single_space(rs: &RootSystem, s: &str) -> CliResult<HessenbergSpace> {
    match parse_hess(rs, s)? {
        HessSpec::One(h) => Ok(h),
        HessSpec::All => Err(CliError::Input("this command needs a single Hessenberg space".into())),
    }
}

fn fixed(args: &NilpotentArgs) -> CliResult {
    let g = weyl_group(&args.common)?;
    let rs = g.root_system();
    let n = parse_nilpotent(rs, &args.nilpotent)?;
    let h = single_space(rs, &args.hess)?;
    let points: Vec<String> = fixed_points(&g, &n, &h).iter().map(|w| w.to_string()).collect();
    let bytes = match args.common.format.unwrap_or(Format::Text) {
        Format::Json => json_bytes(&points),
        _ => points.iter().map(|p| format!("{p}\n")).collect::<String>().into_bytes(),
    };
    emit(&args.common, &bytes)
}

fn chain(args: &NilpotentArgs, start: &str) -> CliResult {
    let rs = root_system(&args.common)?;
    let n = parse_nilpotent(&rs, &args.nilpotent)?;
    let h = single_space(&rs, &args.hess)?;
    let w = parse_word(&rs, start)?;
    let chain = connect_chain(&rs, &w, &n, &h)?;
    let report = ChainReport::new(&rs, &chain);
    let bytes = match args.common.format.unwrap_or(Format::Json) {
        Format::Text => format!("{chain}\n").into_bytes(),
        _ => json_bytes(&report),
    };
    emit(&args.common, &bytes)
}

fn run_catalog(c: &Common, hess: &str, jobs: usize) -> CliResult {
    let g = weyl_group(c)?;
    let rs = g.root_system();
    let spaces = parse_hess(rs, hess)?.spaces(rs)?;
    let rows = build_catalog(&g, &spaces, jobs)?;
    let bytes = match c.format.unwrap_or(Format::Csv) {
        Format::Json => catalog::to_json(&rows)?,
        Format::Csv => catalog::to_csv(&rows)?,
        Format::Text => {
            let bad = rows.iter().filter(|r| !r.agree).count();
            format!("{} rows, {} disagreement(s), digest {}\n", rows.len(), bad, catalog::digest(&rows)?).into_bytes()
        }
    };
    emit(c, &bytes)?;
    let bad = rows.iter().filter(|r| !r.agree).count();
    if bad > 0 {
        return Err(CliError::Violation(format!("{bad} catalog row(s) disagree")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn core_errors_map_to_exit_codes() {
        assert_eq!(CliError::from(Error::Internal("x".into())).exit_code(), 2);
        assert_eq!(CliError::from(Error::NoSimpleRoot).exit_code(), 2);
        assert_eq!(CliError::from(Error::NoWitness).exit_code(), 1);
        assert_eq!(CliError::from(Error::RankGuard { rank: 5, limit: 4 }).exit_code(), 1);
    }
}
