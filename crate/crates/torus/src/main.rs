//! Command-line interface: gcd schemes, parametric elementary divisors,
//! torus structure tables, and numeric verification.

use clap::{Parser, Subcommand};
use num_traits::One;
use std::path::PathBuf;
use std::process::ExitCode;
use torus::gcdscheme::{build_scheme, gcd_family, shrink_via_unimodular, GcdScheme};
use torus::oracle::{
    check_random_corpus, check_scheme, Report,
};
use torus::parammatrix::{param_elementary_divisors, DivisorScheme, PolyMatrix};
use torus::poly::{format_poly, format_rat_poly, parse_poly, Catalog, IntPoly};
use torus::rootdata::{GroupType, RootDatum};
use torus::tables::{render, torus_row, torus_table, Format, TorusTable};
use torus::{Error, Result};

#[derive(Parser)]
#[command(name = "torus", version, about = "Residue-class gcds of polynomial values and maximal-torus structure tables")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Residue-class gcd scheme of two integer polynomials (or a family).
    Gcd {
        /// First polynomial, e.g. "X-1"
        #[arg(long)]
        f: Option<String>,
        /// Second polynomial, e.g. "X+1"
        #[arg(long)]
        g: Option<String>,
        /// A family of polynomials (contents only, no witnesses)
        #[arg(long, num_args = 1.., conflicts_with_all = ["f", "g"])]
        many: Vec<String>,
        /// Try unimodular combinations to shrink the modulus
        #[arg(long)]
        shrink: Option<u32>,
        /// Self-check the scheme by brute force over -window..=window
        #[arg(long)]
        window: Option<i64>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Parametric elementary divisors of a polynomial matrix.
    Snf {
        /// Matrix file: `size r` then r rows of r polynomial entries
        #[arg(long)]
        matrix: PathBuf,
        /// `twisted:2` or `twisted:3` to factor over a Suzuki/Ree catalog
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Torus structure table of an exceptional group type.
    Tori {
        /// G2, 3D4, F4, E6, 2E6, E7, E8, 2B2, 2G2, 2F4
        #[arg(long = "type")]
        group: String,
        /// Structure of T/Z for the simply-connected E6, 2E6, E7
        #[arg(long)]
        quotient_center: bool,
        /// Single class by name
        #[arg(long)]
        class: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
        /// Skip the uniform cyclic-description search
        #[arg(long)]
        no_uniform: bool,
        /// Print the torus matrix of --class in the snf input format instead
        #[arg(long, requires = "class")]
        emit_matrix: bool,
    },
    /// Numeric verification sweeps; exit code 0 only if everything matches.
    Verify {
        /// `gcd` for the random-pair corpus, omit for table sweeps
        target: Option<String>,
        /// Group type or `all`
        #[arg(long = "type")]
        group: Option<String>,
        /// Admissible values sampled per residue class
        #[arg(long, default_value_t = 2)]
        samples: usize,
        /// Ignore sample values above this bound
        #[arg(long)]
        qmax: Option<u64>,
        /// Number of random pairs (gcd target)
        #[arg(long, default_value_t = 100)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 300)]
        window: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Gcd { f, g, many, shrink, window, format } => cmd_gcd(f, g, many, shrink, window, &format),
        Cmd::Snf { matrix, catalog, format } => cmd_snf(&matrix, catalog.as_deref(), &format),
        Cmd::Tori { group, quotient_center, class, format, no_uniform, emit_matrix } => {
            cmd_tori(&group, quotient_center, class.as_deref(), &format, no_uniform, emit_matrix)
        }
        Cmd::Verify { target, group, samples, qmax, random, seed, window } => {
            cmd_verify(target.as_deref(), group.as_deref(), samples, qmax, random, seed, window)
        }
    }
}

fn parse_int_poly(s: &str) -> Result<(IntPoly, char)> {
    let (p, var) = parse_poly(s)?;
    let ip = p
        .to_int()
        .ok_or_else(|| Error::Parse(format!("`{s}` has non-integer coefficients")))?;
    Ok((ip, var.unwrap_or('X')))
}

fn cmd_gcd(
    f: Option<String>,
    g: Option<String>,
    many: Vec<String>,
    shrink: Option<u32>,
    window: Option<i64>,
    format: &str,
) -> Result<bool> {
    if !many.is_empty() {
        let mut polys = Vec::new();
        let mut var = 'X';
        for s in &many {
            let (p, v) = parse_int_poly(s)?;
            var = v;
            polys.push(p);
        }
        let scheme = gcd_family(&polys)?;
        match format {
            "json" => println!(
                "{}",
                serde_json::json!({
                    "modulus": scheme.modulus,
                    "primitive": format_poly(&scheme.primitive, var),
                    "contents": scheme.contents,
                })
            ),
            _ => {
                println!("family of {} polynomials", polys.len());
                println!("m = {}", scheme.modulus);
                println!("h = {}", format_poly(&scheme.primitive, var));
                for (i, c) in scheme.contents.iter().enumerate() {
                    println!("  z = {i} mod {}: gcd = {c}·|h(z)|", scheme.modulus);
                }
            }
        }
        return Ok(true);
    }
    let (fs, gs) = match (f, g) {
        (Some(fs), Some(gs)) => (fs, gs),
        _ => return Err(Error::Parse("gcd needs --f and --g, or --many".into())),
    };
    let (fp, var) = parse_int_poly(&fs)?;
    let (gp, _) = parse_int_poly(&gs)?;
    let scheme = match shrink {
        Some(tries) => shrink_via_unimodular(&fp, &gp, tries)?,
        None => build_scheme(&fp, &gp)?,
    };
    match format {
        "json" => println!("{}", scheme_json(&scheme, var)),
        _ => print_scheme(&scheme, var),
    }
    if let Some(w) = window {
        let rep = check_scheme(&fp, &gp, &scheme, w);
        print_report("gcd self-check", &rep);
        return Ok(rep.is_ok());
    }
    Ok(true)
}

fn scheme_json(s: &GcdScheme, var: char) -> String {
    let cases: Vec<_> = s
        .cases
        .iter()
        .map(|c| {
            serde_json::json!({
                "content": c.content.to_string(),
                "a": format_rat_poly(&c.a, var),
                "b": format_rat_poly(&c.b, var),
            })
        })
        .collect();
    serde_json::json!({
        "modulus": s.modulus,
        "primitive": format_poly(&s.primitive, var),
        "cases": cases,
    })
    .to_string()
}

fn print_scheme(s: &GcdScheme, var: char) {
    println!("m = {}", s.modulus);
    println!("h = {}", format_poly(&s.primitive, var));
    // group residues with identical case data
    let mut groups: Vec<(Vec<u64>, usize)> = Vec::new();
    for i in 0..s.modulus {
        let case = &s.cases[i as usize];
        if let Some((rs, j)) = groups.iter_mut().find(|(_, j)| &s.cases[*j] == case) {
            rs.push(i);
            let _ = j;
        } else {
            groups.push((vec![i], i as usize));
        }
    }
    for (residues, idx) in groups {
        let case = &s.cases[idx];
        let rs = residues.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",");
        println!("z = {rs} mod {}:", s.modulus);
        println!("  gcd = {}·|h(z)|", case.content);
        println!("  a = {}", format_rat_poly(&case.a, var));
        println!("  b = {}", format_rat_poly(&case.b, var));
    }
}

fn parse_matrix_file(path: &PathBuf) -> Result<(PolyMatrix, char)> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let head = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let size: usize = head
        .trim()
        .strip_prefix("size")
        .ok_or_else(|| Error::Parse("first line must be `size r`".into()))?
        .trim()
        .parse()
        .map_err(|_| Error::Parse("bad size".into()))?;
    let mut entries = Vec::with_capacity(size * size);
    let mut var = 'q';
    for _ in 0..size {
        let line = lines.next().ok_or_else(|| Error::Parse("missing matrix row".into()))?;
        let cells: Vec<&str> = line.split_whitespace().collect();
        if cells.len() != size {
            return Err(Error::Parse(format!("row has {} entries, want {size}", cells.len())));
        }
        for cell in cells {
            let (p, v) = parse_int_poly(cell)?;
            var = v;
            entries.push(p);
        }
    }
    Ok((PolyMatrix::new(size, entries)?, var))
}

fn cmd_snf(path: &PathBuf, catalog: Option<&str>, format: &str) -> Result<bool> {
    let (m, var) = parse_matrix_file(path)?;
    let catalog = match catalog {
        None => Catalog::untwisted(),
        Some(spec) => {
            let p = spec
                .strip_prefix("twisted:")
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad catalog spec `{spec}`")))?;
            Catalog::twisted(p)?
        }
    };
    let scheme = param_elementary_divisors(&m, &catalog)?;
    print_divisor_scheme(&scheme, var, format);
    Ok(true)
}

fn print_divisor_scheme(s: &DivisorScheme, var: char, format: &str) {
    if format == "json" {
        let cases: Vec<_> = (0..s.modulus)
            .map(|r| {
                let divs: Vec<_> = s.cases[r as usize]
                    .iter()
                    .filter(|d| !d.is_trivial())
                    .map(|d| {
                        serde_json::json!({
                            "content": d.content.to_string(),
                            "factors": d.factors,
                            "residual": d.residual.as_ref().map(|p| format_poly(p, var)),
                        })
                    })
                    .collect();
                serde_json::json!({"residue": r, "divisors": divs})
            })
            .collect();
        println!(
            "{}",
            serde_json::json!({"modulus": s.modulus, "det": format_poly(&s.det, var), "cases": cases})
        );
        return;
    }
    println!("modulus = {}", s.modulus);
    println!("det = {}", format_poly(&s.det, var));
    for r in 0..s.modulus {
        let divs: Vec<String> = s.cases[r as usize]
            .iter()
            .filter(|d| !d.is_trivial())
            .map(|d| {
                let facs: String = d.factors.concat();
                let mut out = if d.content.is_one() && !facs.is_empty() {
                    facs
                } else if facs.is_empty() {
                    d.content.to_string()
                } else {
                    format!("{} {}", d.content, facs)
                };
                if let Some(res) = &d.residual {
                    out.push_str(&format!("[{}]", format_poly(res, var)));
                }
                out
            })
            .collect();
        if s.modulus == 1 {
            println!("divisors: {}", divs.join(","));
        } else {
            println!("q = {r} mod {}: {}", s.modulus, divs.join(","));
        }
    }
}

fn cmd_tori(
    group: &str,
    quotient: bool,
    class: Option<&str>,
    format: &str,
    no_uniform: bool,
    emit_matrix: bool,
) -> Result<bool> {
    let group = GroupType::parse(group)?;
    let fmt = Format::parse(format)?;
    let with_uniform = !no_uniform;
    if emit_matrix {
        let name = class.expect("clap requires class");
        let datum = RootDatum::new(group);
        let rep = torus::rootdata::find_class(group, name)?;
        let m = datum.torus_matrix(&rep.word)?;
        let var = if group.twist_prime().is_some() { 'r' } else { 'q' };
        println!("size {}", m.size());
        for i in 0..m.size() {
            let row: Vec<String> = (0..m.size()).map(|j| format_poly(m.at(i, j), var)).collect();
            println!("{}", row.join(" "));
        }
        return Ok(true);
    }
    let table = match class {
        Some(name) => TorusTable {
            group,
            quotient,
            rows: vec![torus_row(group, name, quotient, with_uniform)?],
        },
        None => torus_table(group, quotient, with_uniform)?,
    };
    print!("{}", render(&table, fmt, with_uniform));
    Ok(true)
}

fn print_report(label: &str, rep: &Report) {
    let status = if rep.is_ok() { "ok" } else { "FAILED" };
    println!("{label}: {status} ({} checks)", rep.checks);
    for v in &rep.violations {
        println!("  violation: {v}");
    }
    for s in &rep.skipped {
        println!("  skipped: {s}");
    }
}

fn cmd_verify(
    target: Option<&str>,
    group: Option<&str>,
    samples: usize,
    qmax: Option<u64>,
    random: usize,
    seed: u64,
    window: i64,
) -> Result<bool> {
    if target == Some("gcd") {
        let rep = check_random_corpus(random, seed, window);
        print_report(&format!("gcd corpus ({random} pairs, seed {seed})"), &rep);
        return Ok(rep.is_ok());
    }
    if let Some(t) = target {
        return Err(Error::Parse(format!("unknown verify target `{t}`")));
    }
    let groups: Vec<GroupType> = match group {
        None | Some("all") => GroupType::all().to_vec(),
        Some(g) => vec![GroupType::parse(g)?],
    };
    let mut all_ok = true;
    for g in groups {
        let rep = verify_group(g, samples, qmax)?;
        print_report(&format!("{} sweep", g.label()), &rep);
        all_ok &= rep.is_ok();
    }
    Ok(all_ok)
}

fn verify_group(group: GroupType, samples: usize, qmax: Option<u64>) -> Result<Report> {
    let mut rep = torus::tables::sweep_numeric(group, samples, qmax)?;
    if group.center_quotient().is_some() {
        rep.merge(torus::tables::sweep_quotient(group, samples, qmax)?);
    }
    Ok(rep)
}

