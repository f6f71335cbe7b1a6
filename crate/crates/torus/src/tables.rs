//! Torus structure tables: generation, uniform cyclic descriptions, and
//! rendering in text, LaTeX and JSON.

use crate::oracle::{
    admissible_values, check_quotient, check_torus_against, realizable_residues, samples_in_class,
    Report,
};
use crate::parammatrix::{
    param_elementary_divisors, quotient_divisor_scheme, snf_rectangular, Divisor, DivisorScheme,
};
use crate::poly::{factor_order_key, format_poly, Catalog};
use crate::rootdata::{class_data, ClassRep, GroupType, RootDatum};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// One congruence case of a table row: residues mod the row modulus and the
/// nontrivial elementary divisors on that class.
#[derive(Clone, Debug)]
pub struct RowCase {
    pub residues: Vec<u64>,
    pub divisors: Vec<Divisor>,
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub class: ClassRep,
    /// Modulus of the merged, admissible-residue presentation.
    pub modulus: u64,
    pub cases: Vec<RowCase>,
    pub uniform: Option<Vec<Vec<String>>>,
    pub scheme: DivisorScheme,
}

#[derive(Clone, Debug)]
pub struct TorusTable {
    pub group: GroupType,
    pub quotient: bool,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

fn catalog_for(group: GroupType) -> Result<Catalog> {
    match group.twist_prime() {
        Some(p) => Catalog::twisted(p),
        None => Ok(Catalog::untwisted()),
    }
}

/// Generate the full table for a group type; `quotient` restricts to the
/// center-quotient structure (types E6, 2E6, E7 only).
pub fn torus_table(group: GroupType, quotient: bool, with_uniform: bool) -> Result<TorusTable> {
    if quotient && group.center_quotient().is_none() {
        return Err(Error::NoCenterQuotient);
    }
    let datum = RootDatum::new(group);
    let catalog = catalog_for(group)?;
    let mut rows = Vec::new();
    for class in class_data(group) {
        rows.push(build_row(&datum, &catalog, class, quotient, with_uniform)?);
    }
    Ok(TorusTable { group, quotient, rows })
}

/// Generate a single row by class name.
pub fn torus_row(
    group: GroupType,
    class_name: &str,
    quotient: bool,
    with_uniform: bool,
) -> Result<TableRow> {
    if quotient && group.center_quotient().is_none() {
        return Err(Error::NoCenterQuotient);
    }
    let datum = RootDatum::new(group);
    let catalog = catalog_for(group)?;
    let class = crate::rootdata::find_class(group, class_name)?;
    build_row(&datum, &catalog, class, quotient, with_uniform)
}

fn build_row(
    datum: &RootDatum,
    catalog: &Catalog,
    class: ClassRep,
    quotient: bool,
    with_uniform: bool,
) -> Result<TableRow> {
    let group = datum.group;
    let mq = datum.torus_matrix(&class.word)?;
    let scheme = if quotient {
        let (q0, _z) = group.center_quotient().ok_or(Error::NoCenterQuotient)?;
        quotient_divisor_scheme(&mq, datum.cartan_matrix(), q0, catalog)?.0
    } else {
        param_elementary_divisors(&mq, catalog)?
    };
    let admissible = realizable_residues(group, scheme.modulus, quotient)?;
    let (modulus, merged) = scheme.restricted_cases(&admissible);
    let cases: Vec<RowCase> = merged
        .into_iter()
        .map(|(residues, divisors)| RowCase {
            residues,
            divisors: divisors.into_iter().filter(|d| !d.is_trivial()).collect(),
        })
        .collect();
    let uniform = if with_uniform && !quotient && modulus > 1 {
        uniform_description(group, modulus, &cases, catalog)?
    } else {
        None
    };
    Ok(TableRow { class, modulus, cases, uniform, scheme })
}

// ---------------------------------------------------------------------------
// Uniform descriptions
// ---------------------------------------------------------------------------

/// Search for a list of cyclic orders (content-free products of catalog
/// factors) whose diagonal matrix has the scheme's divisors as Smith form for
/// every congruence case, verified on sampled admissible values. Returns the
/// first hit for the smallest number of parts under a deterministic order;
/// when several decompositions verify, a part containing the split factor
/// `Phi_1` prefers larger companions.
pub fn uniform_description(
    group: GroupType,
    modulus: u64,
    cases: &[RowCase],
    catalog: &Catalog,
) -> Result<Option<Vec<Vec<String>>>> {
    let Some(first) = cases.first() else {
        return Ok(None);
    };
    if cases.iter().any(|c| c.divisors.iter().any(|d| d.residual.is_some())) {
        return Ok(None);
    }
    let mut total: Vec<String> = Vec::new();
    for d in &first.divisors {
        total.extend(d.factors.iter().cloned());
    }
    total.sort_by_key(|n| factor_order_key(n));
    let rank = RootDatum::new(group).rank;
    let mut partitions = multiset_partitions(&total, rank);
    partitions.sort_by(|a, b| {
        (a.len(), partition_key(a)).cmp(&(b.len(), partition_key(b)))
    });
    'cand: for parts in &partitions {
        for case in cases {
            let samples = samples_in_class(group, false, modulus, &case.residues, 4)?;
            for q0 in samples {
                let q = BigInt::from(q0);
                let mut diag: Vec<BigInt> = Vec::new();
                for part in parts {
                    let mut v = BigInt::one();
                    for name in part {
                        let p = catalog
                            .get(name)
                            .ok_or_else(|| Error::Internal(format!("factor {name}")))?;
                        v *= p.eval(&q);
                    }
                    diag.push(v.abs());
                }
                let n = diag.len();
                let mat: Vec<Vec<BigInt>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| if i == j { diag[i].clone() } else { BigInt::from(0) })
                            .collect()
                    })
                    .collect();
                let (snf, _, _) = snf_rectangular(&mat);
                let mut got: Vec<BigInt> = snf.into_iter().filter(|d| !d.is_one()).collect();
                got.sort();
                let mut predicted: Vec<BigInt> = Vec::new();
                for d in &case.divisors {
                    let v = d.eval(&q);
                    if !v.is_integer() {
                        continue 'cand;
                    }
                    let v = v.to_integer();
                    if !v.is_one() {
                        predicted.push(v);
                    }
                }
                predicted.sort();
                if got != predicted {
                    continue 'cand;
                }
            }
        }
        let mut found = parts.clone();
        found.sort_by_key(|p| {
            (p.len(), p.iter().map(|n| factor_order_key(n)).collect::<Vec<_>>())
        });
        return Ok(Some(found));
    }
    Ok(None)
}

fn partition_key(parts: &[Vec<String>]) -> Vec<Vec<(i64, i64)>> {
    let mut keys: Vec<Vec<(i64, i64)>> = parts.iter().map(|p| part_key(p)).collect();
    keys.sort();
    keys
}

fn part_key(part: &[String]) -> Vec<(i64, i64)> {
    let mut ks: Vec<(u32, u8)> = part.iter().map(|n| factor_order_key(n)).collect();
    ks.sort_unstable();
    if ks.first() == Some(&(1, 0)) {
        // a part led by Phi_1 prefers larger companions
        std::iter::once((1i64, 0i64))
            .chain(ks[1..].iter().map(|&(n, p)| (-(n as i64), -(p as i64))))
            .collect()
    } else {
        ks.iter().map(|&(n, p)| (n as i64, p as i64)).collect()
    }
}

/// All partitions of a factor multiset into at most `maxk` parts, each
/// partition in a canonical (sorted) form.
fn multiset_partitions(items: &[String], maxk: usize) -> Vec<Vec<Vec<String>>> {
    let mut results: BTreeSet<Vec<Vec<String>>> = BTreeSet::new();
    let mut parts: Vec<Vec<String>> = Vec::new();
    rec_partition(items, 0, maxk, &mut parts, &mut results);
    results.into_iter().collect()
}

fn rec_partition(
    items: &[String],
    idx: usize,
    maxk: usize,
    parts: &mut Vec<Vec<String>>,
    results: &mut BTreeSet<Vec<Vec<String>>>,
) {
    if parts.len() > maxk {
        return;
    }
    if idx == items.len() {
        let mut canon: Vec<Vec<String>> = parts
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.sort_by_key(|n| factor_order_key(n));
                q
            })
            .collect();
        canon.sort();
        results.insert(canon);
        return;
    }
    let item = &items[idx];
    let mut seen: BTreeSet<Vec<String>> = BTreeSet::new();
    for i in 0..parts.len() {
        if !seen.insert(parts[i].clone()) {
            continue;
        }
        parts[i].push(item.clone());
        rec_partition(items, idx + 1, maxk, parts, results);
        parts[i].pop();
    }
    parts.push(vec![item.clone()]);
    rec_partition(items, idx + 1, maxk, parts, results);
    parts.pop();
}

// ---------------------------------------------------------------------------
// Verification sweeps
// ---------------------------------------------------------------------------

/// Numeric Smith-form sweep over every class of a type: up to `samples`
/// admissible values per residue class of each row's scheme, optionally
/// capped at `qmax`. Residue classes with no admissible value are reported
/// as skipped.
pub fn sweep_numeric(group: GroupType, samples: usize, qmax: Option<u64>) -> Result<Report> {
    let datum = RootDatum::new(group);
    let table = torus_table(group, false, false)?;
    let mut rep = Report::default();
    for row in &table.rows {
        let m = row.scheme.modulus;
        for res in 0..m {
            let mut qs = samples_in_class(group, false, m, &[res], samples)?;
            if let Some(cap) = qmax {
                qs.retain(|&q| q <= cap);
            }
            if qs.is_empty() {
                rep.skipped.push(format!(
                    "{} {}: no admissible value = {res} mod {m}",
                    group.label(),
                    row.class.name
                ));
                continue;
            }
            for q0 in qs {
                rep.merge(check_torus_against(&datum, &row.class, &row.scheme, q0));
            }
        }
    }
    Ok(rep)
}

/// Quotient-structure sweep: the independent adjoined-generator oracle at up
/// to `samples` admissible values per class.
pub fn sweep_quotient(group: GroupType, samples: usize, qmax: Option<u64>) -> Result<Report> {
    let (q0res, z) = group.center_quotient().ok_or(Error::NoCenterQuotient)?;
    let mut rep = Report::default();
    for class in class_data(group) {
        let mut taken = 0usize;
        for &q in admissible_values(group).iter() {
            if q % z != q0res || qmax.is_some_and(|cap| q > cap) {
                continue;
            }
            rep.merge(check_quotient(group, &class, q)?);
            taken += 1;
            if taken >= samples {
                break;
            }
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn format_content(c: &BigRational) -> String {
    c.to_string()
}

fn format_divisor(d: &Divisor, latex: bool) -> String {
    let mut factors = String::new();
    for name in &d.factors {
        if latex {
            for (n, primes) in split_name(name) {
                let ticks = "'".repeat(primes as usize);
                let _ = write!(factors, "\\Phi{ticks}_{{{n}}}");
            }
        } else {
            factors.push_str(name);
        }
    }
    if let Some(r) = &d.residual {
        let var = 'q';
        let _ = write!(factors, "[{}]", format_poly(r, var));
    }
    if d.content.is_one() {
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors
        }
    } else if factors.is_empty() {
        format_content(&d.content)
    } else {
        format!("{} {}", format_content(&d.content), factors)
    }
}

/// Split a (possibly product) factor name into `(index, prime-count)` pieces,
/// e.g. `Phi_1Phi_2` into `[(1,0), (2,0)]`.
fn split_name(name: &str) -> Vec<(u32, u8)> {
    let mut out = Vec::new();
    for piece in name.split("Phi").filter(|s| !s.is_empty()) {
        let primes = piece.chars().take_while(|&c| c == '\'').count() as u8;
        let digits: String = piece[primes as usize..]
            .trim_start_matches('_')
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .collect();
        if let Ok(n) = digits.parse() {
            out.push((n, primes));
        }
    }
    out
}

fn format_case_list(row: &TableRow, latex: bool) -> String {
    if row.cases.len() == 1 && row.modulus == 1 {
        return row.cases[0]
            .divisors
            .iter()
            .map(|d| format_divisor(d, latex))
            .collect::<Vec<_>>()
            .join(",");
    }
    row.cases
        .iter()
        .map(|case| {
            let rs = case
                .residues
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let divs = case
                .divisors
                .iter()
                .map(|d| format_divisor(d, latex))
                .collect::<Vec<_>>()
                .join(",");
            format!("[q = {rs} mod {}] {divs}", row.modulus)
        })
        .collect::<Vec<_>>()
        .join(" ; ")
}

/// Plain-text rendering; one line per class, tab separated, matching the
/// golden fixtures after whitespace normalization.
pub fn render_text(table: &TorusTable, with_uniform: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type: {}", table.group.label());
    let _ = writeln!(out, "quotient: {}", if table.quotient { "center" } else { "none" });
    let _ = writeln!(out, "class\tword\tdivisors");
    for row in &table.rows {
        let mut line = format!(
            "{}\t{}\t{}",
            row.class.name,
            row.class.word_string(),
            format_case_list(row, false)
        );
        if with_uniform {
            if let Some(u) = &row.uniform {
                let parts = u.iter().map(|p| p.concat()).collect::<Vec<_>>().join(",");
                let _ = write!(line, "\tuniform: {parts}");
            }
        }
        let _ = writeln!(out, "{line}");
    }
    out
}

pub fn render_latex(table: &TorusTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "\\begin{{array}}{{lll}}");
    let _ = writeln!(
        out,
        "\\textrm{{class}}&\\textrm{{representative}}&\\textrm{{elementary divisors}}\\\\"
    );
    let _ = writeln!(out, "\\hline");
    for row in &table.rows {
        let name = row.class.name.replace("~A", "\\tilde{A}");
        let word = row.class.word_string();
        if row.cases.len() == 1 {
            let divs = row.cases[0]
                .divisors
                .iter()
                .map(|d| format_divisor(d, true))
                .collect::<Vec<_>>()
                .join(",");
            let _ = writeln!(out, "{name} & {word} & {divs}\\\\");
        } else {
            let _ = writeln!(out, "{name} & {word} & \\left\\{{\\begin{{array}}{{ll}}");
            for case in &row.cases {
                let rs = case
                    .residues
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let divs = case
                    .divisors
                    .iter()
                    .map(|d| format_divisor(d, true))
                    .collect::<Vec<_>>()
                    .join(",");
                let _ = writeln!(
                    out,
                    "{divs} & \\textrm{{ if }} q \\equiv {rs} \\textrm{{ mod }} {}\\\\",
                    row.modulus
                );
            }
            let _ = writeln!(out, "\\end{{array}}\\right.\\\\");
        }
        if let Some(u) = &row.uniform {
            let parts = u
                .iter()
                .map(|p| {
                    p.iter()
                        .map(|n| {
                            split_name(n)
                                .iter()
                                .map(|(nn, pp)| {
                                    format!("\\Phi{}_{{{nn}}}", "'".repeat(*pp as usize))
                                })
                                .collect::<String>()
                        })
                        .collect::<String>()
                })
                .collect::<Vec<_>>()
                .join(",");
            let _ = writeln!(out, " & & \\textrm{{uniform: }}{parts}\\\\");
        }
    }
    let _ = writeln!(out, "\\end{{array}}");
    out
}

// ---------------------------------------------------------------------------
// Machine format
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonDivisor {
    pub content: String,
    pub factors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonCase {
    pub residues: Vec<u64>,
    pub divisors: Vec<JsonDivisor>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonRow {
    pub class: String,
    pub word: String,
    pub modulus: u64,
    pub cases: Vec<JsonCase>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uniform: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonTable {
    #[serde(rename = "type")]
    pub group: String,
    pub quotient: String,
    pub rows: Vec<JsonRow>,
}

pub fn to_json(table: &TorusTable) -> JsonTable {
    JsonTable {
        group: table.group.label().to_string(),
        quotient: if table.quotient { "center".into() } else { "none".into() },
        rows: table
            .rows
            .iter()
            .map(|row| JsonRow {
                class: row.class.name.clone(),
                word: row.class.word_string(),
                modulus: row.modulus,
                cases: row
                    .cases
                    .iter()
                    .map(|c| JsonCase {
                        residues: c.residues.clone(),
                        divisors: c
                            .divisors
                            .iter()
                            .map(|d| JsonDivisor {
                                content: d.content.to_string(),
                                factors: d.factors.clone(),
                                residual: d.residual.as_ref().map(|r| format_poly(r, 'q')),
                            })
                            .collect(),
                    })
                    .collect(),
                uniform: row.uniform.clone(),
            })
            .collect(),
    }
}

pub fn render_json(table: &TorusTable) -> String {
    serde_json::to_string_pretty(&to_json(table)).expect("json serialization")
}

pub fn parse_json(s: &str) -> Result<JsonTable> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn render(table: &TorusTable, format: Format, with_uniform: bool) -> String {
    match format {
        Format::Text => render_text(table, with_uniform),
        Format::Latex => render_latex(table),
        Format::Json => render_json(table),
    }
}
