//! Command-line surface: decompositions, Dixon character tables, and the
//! runnable verification suites, with exact text/JSON output.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use orbiweil::cwcore::{
    decompose, CoverSpec, Decomposition, DecompositionEntry, GenusCertificate, OrbifoldCurve,
    RamPoint, RepInput,
};
use orbiweil::error::Error;
use orbiweil::exactmath::{
    cache_preload, cache_snapshot, cyclotomic_polynomial, divisors, phi, BigInt, CyclotomicNumber,
    Rat,
};
use orbiweil::groupcore::{
    character_table_dixon, verify_orthogonality, CharacterTable, EigenvalueProfile, FiniteGroup,
};
use orbiweil::{fermat, fixtures, psl2fp};

const TOOL: &str = concat!("orbiweil ", env!("CARGO_PKG_VERSION"));

#[derive(Parser)]
#[command(name = "orbiweil", version, about = "Exact canonical-representation decompositions")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decomposition for the principal congruence cover of level p
    ModularLevel {
        /// Prime level, p >= 5
        #[arg(long)]
        p: u64,
    },
    /// Decomposition for the degree-N Fermat curve
    Fermat {
        /// Exponent N >= 3
        #[arg(long)]
        exponent: u64,
    },
    /// Decomposition for a cover described by a JSON document
    General {
        /// Path to the cover description
        #[arg(long)]
        spec: PathBuf,
    },
    /// Character tables from the Dixon oracle
    Table {
        #[command(subcommand)]
        target: TableTarget,
        /// Refuse groups larger than this
        #[arg(long, default_value_t = 2000)]
        max_group_order: u64,
    },
    /// Run verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Skip oracle groups larger than this
        #[arg(long, default_value_t = 2000)]
        max_group_order: u64,
    },
}

#[derive(Subcommand)]
enum TableTarget {
    /// PSL2(F_p) generated by the images of S and T
    Psl2fp {
        #[arg(long)]
        p: u64,
    },
    /// (Z/N)^2 semidirect S3, the Fermat deck group
    Fermat {
        #[arg(long)]
        exponent: u64,
    },
    /// Projectivized SL2(Z/8), order 192
    Gamma8,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Exactmath,
    Groups,
    Psl2fp,
    Fermat,
    Fixtures,
    All,
}

struct Failure {
    code: u8,
    message: String,
    /// Rendered report to print before exiting, for failing verify runs.
    stdout: Option<String>,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
        stdout: None,
    }
}

fn internal(message: impl Into<String>) -> Failure {
    Failure {
        code: 3,
        message: message.into(),
        stdout: None,
    }
}

/// Input-shaped library errors become usage errors; anything else means the
/// tool itself is inconsistent.
fn classify(e: Error) -> Failure {
    match e {
        Error::NotPrime(_) | Error::OutOfRange(_) => usage(e.to_string()),
        other => internal(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = CacheGuard::load();
    let outcome = run(&cli);
    cache.save();
    match outcome {
        Ok(rendered) => {
            print!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Some(rendered) = &failure.stdout {
                print!("{rendered}");
            }
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::ModularLevel { p } => cmd_modular_level(*p, cli.format),
        Command::Fermat { exponent } => cmd_fermat(*exponent, cli.format),
        Command::General { spec } => cmd_general(spec, cli.format),
        Command::Table {
            target,
            max_group_order,
        } => cmd_table(target, *max_group_order, cli.format),
        Command::Verify {
            suite,
            max_group_order,
        } => cmd_verify(*suite, *max_group_order, cli.format),
    }
}

#[derive(Serialize)]
struct DecompositionDocument {
    tool: &'static str,
    command: serde_json::Value,
    entries: Vec<DecompositionEntry>,
    total_dimension: u64,
    genus_certificate: Option<GenusCertificate>,
}

/// Nonzero multiplicities first, otherwise the library order.
fn nonzero_first(dec: &Decomposition) -> Vec<DecompositionEntry> {
    let mut out: Vec<DecompositionEntry> = dec
        .entries
        .iter()
        .filter(|e| e.multiplicity > 0)
        .cloned()
        .collect();
    out.extend(dec.entries.iter().filter(|e| e.multiplicity == 0).cloned());
    out
}

fn render_decomposition(
    command: serde_json::Value,
    echo: &str,
    dec: &Decomposition,
    format: Format,
) -> Result<String, Failure> {
    let doc = DecompositionDocument {
        tool: TOOL,
        command,
        entries: nonzero_first(dec),
        total_dimension: dec.total_dimension(),
        genus_certificate: dec.genus_certificate.clone(),
    };
    match format {
        Format::Json => to_json(&doc),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}", doc.tool);
            let _ = writeln!(s, "command: {echo}");
            for e in &doc.entries {
                let _ = writeln!(s, "  {} dim={} mult={}", e.rep_id, e.dim, e.multiplicity);
            }
            let _ = writeln!(s, "total dimension: {}", doc.total_dimension);
            match &doc.genus_certificate {
                Some(c) => {
                    let _ = writeln!(s, "genus certificate: expected={} total={}", c.expected, c.total);
                }
                None => {
                    let _ = writeln!(s, "genus certificate: none");
                }
            }
            Ok(s)
        }
    }
}

fn to_json<T: Serialize>(doc: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(doc)
        .map_err(|e| internal(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn cmd_modular_level(p: u64, format: Format) -> Result<String, Failure> {
    let closed = psl2fp::multiplicities_closed_form(p).map_err(classify)?;
    let direct = psl2fp::multiplicities_direct(p).map_err(classify)?;
    if closed != direct {
        return Err(internal(format!(
            "closed form and direct evaluation disagree at p = {p}"
        )));
    }
    render_decomposition(
        json!({"name": "modular-level", "p": p}),
        &format!("modular-level p={p}"),
        &closed,
        format,
    )
}

fn cmd_fermat(n: u64, format: Format) -> Result<String, Failure> {
    if n < 3 {
        return Err(usage(format!(
            "exponent must be at least 3 (the curve has genus 0 below that), got {n}"
        )));
    }
    let closed = fermat::multiplicities_closed_form(n).map_err(classify)?;
    let direct = fermat::multiplicities_direct(n).map_err(classify)?;
    if closed != direct {
        return Err(internal(format!(
            "closed form and direct evaluation disagree at N = {n}"
        )));
    }
    render_decomposition(
        json!({"name": "fermat", "exponent": n}),
        &format!("fermat exponent={n}"),
        &closed,
        format,
    )
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverSpecDocument {
    base: BaseDoc,
    #[serde(default)]
    ramification: Vec<RamDoc>,
    reps: Vec<RepDoc>,
    #[serde(default)]
    group_order: u64,
    #[serde(default)]
    expected_genus: Option<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BaseDoc {
    genus: u64,
    #[serde(default)]
    orbifold_orders: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RamDoc {
    degree: u64,
    #[serde(default)]
    label: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepDoc {
    id: String,
    dim: u64,
    #[serde(default)]
    is_trivial: bool,
    /// Eigenvalue counts at each branch point, length = that point's degree.
    #[serde(default)]
    ram_profiles: Vec<Vec<u64>>,
    /// Eigenvalue counts at each orbifold monodromy, length = that order.
    #[serde(default)]
    orb_profiles: Vec<Vec<u64>>,
}

fn build_profile(order: u64, counts: &[u64], dim: u64, what: &str) -> Result<EigenvalueProfile, Failure> {
    if counts.len() as u64 != order {
        return Err(usage(format!(
            "{what}: {} counts for order {order}",
            counts.len()
        )));
    }
    let p = EigenvalueProfile::new(order, counts.to_vec()).map_err(|e| usage(e.to_string()))?;
    if p.dim() != dim {
        return Err(usage(format!(
            "{what}: counts sum to {}, dimension is {dim}",
            p.dim()
        )));
    }
    Ok(p)
}

fn parse_cover_document(doc: &CoverSpecDocument) -> Result<(CoverSpec, Vec<RepInput>), Failure> {
    let cover = CoverSpec {
        base: OrbifoldCurve {
            genus: doc.base.genus,
            orbifold_orders: doc.base.orbifold_orders.clone(),
        },
        ramification: doc
            .ramification
            .iter()
            .enumerate()
            .map(|(j, r)| RamPoint {
                degree: r.degree,
                label: r.label.clone().unwrap_or_else(|| format!("P{j}")),
            })
            .collect(),
        orbifold_monodromies: (0..doc.base.orbifold_orders.len())
            .map(|i| format!("g{i}"))
            .collect(),
        group_order: doc.group_order,
    };
    let mut seen = BTreeSet::new();
    let mut reps = Vec::with_capacity(doc.reps.len());
    for rep in &doc.reps {
        if !seen.insert(rep.id.clone()) {
            return Err(usage(format!("duplicate representation id {:?}", rep.id)));
        }
        if rep.ram_profiles.len() != cover.ramification.len() {
            return Err(usage(format!(
                "representation {:?} carries {} branch profiles for {} branch points",
                rep.id,
                rep.ram_profiles.len(),
                cover.ramification.len()
            )));
        }
        if rep.orb_profiles.len() != cover.base.orbifold_orders.len() {
            return Err(usage(format!(
                "representation {:?} carries {} orbifold profiles for {} orbifold points",
                rep.id,
                rep.orb_profiles.len(),
                cover.base.orbifold_orders.len()
            )));
        }
        let mut ram_profiles = Vec::with_capacity(rep.ram_profiles.len());
        for (j, counts) in rep.ram_profiles.iter().enumerate() {
            ram_profiles.push(build_profile(
                cover.ramification[j].degree,
                counts,
                rep.dim,
                &format!("representation {:?}, branch point {j}", rep.id),
            )?);
        }
        let mut orb_profiles = Vec::with_capacity(rep.orb_profiles.len());
        for (i, counts) in rep.orb_profiles.iter().enumerate() {
            orb_profiles.push(build_profile(
                cover.base.orbifold_orders[i],
                counts,
                rep.dim,
                &format!("representation {:?}, orbifold point {i}", rep.id),
            )?);
        }
        if rep.is_trivial {
            let plain = ram_profiles.iter().all(|p| p.count(0) == p.dim())
                && orb_profiles.iter().all(|p| p.count(0) == p.dim());
            if rep.dim != 1 || !plain {
                return Err(usage(format!(
                    "representation {:?} is marked trivial but its data is not",
                    rep.id
                )));
            }
        }
        reps.push(RepInput {
            id: rep.id.clone(),
            dim: rep.dim,
            is_trivial: rep.is_trivial,
            ram_profiles,
            orb_profiles,
        });
    }
    Ok((cover, reps))
}

fn cmd_general(path: &PathBuf, format: Format) -> Result<String, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let doc: CoverSpecDocument = serde_json::from_str(&text)
        .map_err(|e| usage(format!("malformed cover document {}: {e}", path.display())))?;
    let (cover, reps) = parse_cover_document(&doc)?;
    let dec = decompose(&cover, &reps, doc.expected_genus).map_err(|e| match e {
        Error::GenusMismatch { expected, total } => Failure {
            code: 1,
            message: format!(
                "genus certificate fails: expected {expected}, decomposition fills {total}"
            ),
            stdout: None,
        },
        other => usage(other.to_string()),
    })?;
    render_decomposition(
        json!({"name": "general", "spec": path.display().to_string()}),
        &format!("general spec={}", path.display()),
        &dec,
        format,
    )
}

#[derive(Serialize)]
struct TableDocument {
    tool: &'static str,
    command: serde_json::Value,
    group_order: u64,
    exponent: u64,
    classes: Vec<ClassDoc>,
    rows: Vec<RowDoc>,
}

#[derive(Serialize)]
struct ClassDoc {
    index: usize,
    size: u64,
    rep_order: u64,
}

#[derive(Serialize)]
struct RowDoc {
    dim: u64,
    values: Vec<CyclotomicNumber>,
}

fn cmd_table(target: &TableTarget, cap: u64, format: Format) -> Result<String, Failure> {
    let (command, echo, group) = match target {
        TableTarget::Psl2fp { p } => (
            json!({"name": "table", "family": "psl2fp", "p": p}),
            format!("table psl2fp p={p}"),
            psl2fp::psl2fp_group(*p).map_err(classify)?,
        ),
        TableTarget::Fermat { exponent } => (
            json!({"name": "table", "family": "fermat", "exponent": exponent}),
            format!("table fermat exponent={exponent}"),
            fermat::fermat_group(*exponent).map_err(classify)?,
        ),
        TableTarget::Gamma8 => (
            json!({"name": "table", "family": "gamma8"}),
            "table gamma8".to_string(),
            fixtures::gamma8_group().map_err(classify)?,
        ),
    };
    if group.order() as u64 > cap {
        return Err(usage(format!(
            "group order {} exceeds --max-group-order {cap}",
            group.order()
        )));
    }
    let table = character_table_dixon(&group).map_err(|e| internal(e.to_string()))?;
    let orth = verify_orthogonality(&table).map_err(|e| internal(e.to_string()))?;
    if !orth.pass {
        return Err(internal(format!(
            "character table fails orthogonality: {}",
            orth.failures.join("; ")
        )));
    }
    let doc = TableDocument {
        tool: TOOL,
        command,
        group_order: table.group_order,
        exponent: table.exponent,
        classes: table
            .classes
            .iter()
            .enumerate()
            .map(|(index, c)| ClassDoc {
                index,
                size: c.size,
                rep_order: c.rep_order,
            })
            .collect(),
        rows: (0..table.values.len())
            .map(|i| RowDoc {
                dim: table.dim(i),
                values: table.values[i].clone(),
            })
            .collect(),
    };
    match format {
        Format::Json => to_json(&doc),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}", doc.tool);
            let _ = writeln!(s, "command: {echo}");
            let _ = writeln!(s, "group order: {}", doc.group_order);
            let _ = writeln!(s, "exponent: {}", doc.exponent);
            for c in &doc.classes {
                let _ = writeln!(
                    s,
                    "class {}: size={} rep-order={}",
                    c.index, c.size, c.rep_order
                );
            }
            for (i, row) in doc.rows.iter().enumerate() {
                let values: Vec<String> = row.values.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "row {i}: dim={} values [{}]", row.dim, values.join(", "));
            }
            Ok(s)
        }
    }
}

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn check(name: &str, f: impl FnOnce() -> orbiweil::error::Result<String>) -> Check {
    match f() {
        Ok(detail) => Check {
            name: name.into(),
            pass: true,
            detail,
        },
        Err(e) => Check {
            name: name.into(),
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn primes_to(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    'next: for n in 2..=limit {
        for d in 2..n {
            if d * d > n {
                break;
            }
            if n % d == 0 {
                continue 'next;
            }
        }
        out.push(n);
    }
    out
}

fn dixon_invariants(group: &FiniteGroup) -> orbiweil::error::Result<CharacterTable> {
    let table = character_table_dixon(group)?;
    let orth = verify_orthogonality(&table)?;
    if !orth.pass {
        return Err(Error::Inconsistent(format!(
            "orthogonality fails: {}",
            orth.failures.join("; ")
        )));
    }
    let dim_sum: u64 = (0..table.values.len()).map(|i| table.dim(i) * table.dim(i)).sum();
    if dim_sum != table.group_order {
        return Err(Error::Inconsistent(format!(
            "dimension squares sum to {dim_sum}, group order is {}",
            table.group_order
        )));
    }
    Ok(table)
}

fn exactmath_checks(checks: &mut Vec<Check>) {
    checks.push(check("cyclotomic polynomial degree sums", || {
        for n in 1..=200u64 {
            let mut sum = 0;
            for d in divisors(n) {
                let p = cyclotomic_polynomial(d)?;
                if p.len() as u64 - 1 != phi(d) {
                    return Err(Error::Inconsistent(format!("deg Phi_{d} is not phi({d})")));
                }
                sum += p.len() as u64 - 1;
            }
            if sum != n {
                return Err(Error::Inconsistent(format!(
                    "degree sum over divisors of {n} is {sum}"
                )));
            }
        }
        Ok("n <= 200".into())
    }));
    checks.push(check("cyclotomic polynomials vanish at primitive roots", || {
        for n in 1..=60u64 {
            let p = cyclotomic_polynomial(n)?;
            let z = CyclotomicNumber::root_of_unity(n, 1)?;
            let mut acc = CyclotomicNumber::zero();
            for c in p.iter().rev() {
                acc = acc.checked_mul(&z)?;
                acc = acc.checked_add(&CyclotomicNumber::from_rational(Rat::from(c.clone())))?;
            }
            if !acc.is_zero() {
                return Err(Error::Inconsistent(format!("Phi_{n} does not vanish")));
            }
        }
        Ok("n <= 60".into())
    }));
    checks.push(check("gauss sums square to the signed prime", || {
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let g = psl2fp::gauss_sum(p)?;
            let sign = psl2fp::legendre(-1, p);
            let expected = CyclotomicNumber::from_integer(sign * p as i64);
            if g.checked_mul(&g)? != expected {
                return Err(Error::Inconsistent(format!("gauss sum square at p = {p}")));
            }
        }
        Ok("p <= 23".into())
    }));
    checks.push(check("roots of unity have exact multiplicative order", || {
        for n in 1..=24u64 {
            for k in 0..n {
                let z = CyclotomicNumber::root_of_unity(n, k as i64)?;
                let expected = n / num::integer::gcd(n, k);
                if z.root_of_unity_order() != Some(expected) {
                    return Err(Error::Inconsistent(format!(
                        "order of zeta_{n}^{k} is not {expected}"
                    )));
                }
            }
        }
        Ok("n <= 24".into())
    }));
}

fn corpus_groups(cap: u64) -> orbiweil::error::Result<Vec<(String, FiniteGroup)>> {
    let mut out = Vec::new();
    for p in [5u64, 7, 11, 13] {
        if p * (p * p - 1) / 2 <= cap {
            out.push((format!("psl2fp p={p}"), psl2fp::psl2fp_group(p)?));
        }
    }
    if 192 <= cap {
        out.push(("gamma8".into(), fixtures::gamma8_group()?));
    }
    for n in 3..=8u64 {
        if 6 * n * n <= cap {
            out.push((format!("fermat N={n}"), fermat::fermat_group(n)?));
        }
    }
    Ok(out)
}

fn groups_checks(checks: &mut Vec<Check>, cap: u64) {
    let groups = match corpus_groups(cap) {
        Ok(g) => g,
        Err(e) => {
            checks.push(Check {
                name: "corpus group generation".into(),
                pass: false,
                detail: e.to_string(),
            });
            return;
        }
    };
    if groups.is_empty() {
        checks.push(Check {
            name: "dixon tables of the corpus groups".into(),
            pass: true,
            detail: format!("skipped: every corpus group exceeds order {cap}"),
        });
        return;
    }
    for (label, group) in groups {
        checks.push(check(&format!("dixon table of {label}"), || {
            let table = dixon_invariants(&group)?;
            Ok(format!(
                "order {}, {} classes",
                table.group_order,
                table.num_classes()
            ))
        }));
    }
}

fn psl2fp_checks(checks: &mut Vec<Check>, cap: u64) {
    checks.push(check("modular closed form equals direct evaluation", || {
        for p in primes_to(47).into_iter().filter(|&p| p >= 5) {
            if psl2fp::multiplicities_closed_form(p)? != psl2fp::multiplicities_direct(p)? {
                return Err(Error::Inconsistent(format!("disagreement at p = {p}")));
            }
        }
        Ok("5 <= p <= 47".into())
    }));
    checks.push(check("modular dixon cross-check", || {
        let ps: Vec<u64> = [5u64, 7, 11, 13]
            .into_iter()
            .filter(|&p| p * (p * p - 1) / 2 <= cap)
            .collect();
        for &p in &ps {
            psl2fp::dixon_cross_check(p)?;
        }
        if ps.is_empty() {
            Ok(format!("skipped: every group exceeds order {cap}"))
        } else {
            Ok(format!(
                "p in {{{}}}",
                ps.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
            ))
        }
    }));
    checks.push(check("class numbers match the reduced-forms oracle", || {
        for p in primes_to(163).into_iter().filter(|&p| p % 4 == 3 && p >= 7) {
            let closed = psl2fp::class_number(p)?;
            let oracle = psl2fp::class_number_forms_oracle(p)?;
            if closed != oracle {
                return Err(Error::Inconsistent(format!(
                    "h({p}) = {closed} by the sum, {oracle} by forms"
                )));
            }
        }
        Ok("p = 3 mod 4, p <= 163".into())
    }));
}

fn fermat_checks(checks: &mut Vec<Check>, cap: u64) {
    checks.push(check("fermat closed form equals direct evaluation", || {
        for n in 3..=12u64 {
            if fermat::multiplicities_closed_form(n)? != fermat::multiplicities_direct(n)? {
                return Err(Error::Inconsistent(format!("disagreement at N = {n}")));
            }
        }
        Ok("3 <= N <= 12".into())
    }));
    checks.push(check("induction oracle reproduces the representation table", || {
        for n in 3..=8u64 {
            fermat::oracle_matches_rep_table(n)?;
        }
        Ok("3 <= N <= 8".into())
    }));
    checks.push(check("fermat dixon cross-check", || {
        let ns: Vec<u64> = (3..=8u64).filter(|&n| 6 * n * n <= cap).collect();
        for &n in &ns {
            fermat::dixon_cross_check(n)?;
        }
        if ns.is_empty() {
            Ok(format!("skipped: every group exceeds order {cap}"))
        } else {
            Ok(format!(
                "N in {{{}}}",
                ns.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
            ))
        }
    }));
}

fn fixtures_checks(checks: &mut Vec<Check>, cap: u64) {
    checks.push(check("stored matrix models verify", || {
        let reports = fixtures::verify_all()?;
        let failing: Vec<String> = reports
            .iter()
            .filter(|(_, r)| !r.pass)
            .map(|(name, r)| format!("{name}: {}", r.failures.join("; ")))
            .collect();
        if !failing.is_empty() {
            return Err(Error::Inconsistent(failing.join(" / ")));
        }
        Ok(format!("{} models", reports.len()))
    }));
    checks.push(check("level-8 cover splits as 2 + 3", || {
        if 192 > cap {
            return Ok(format!("skipped: group order 192 exceeds {cap}"));
        }
        let summands = fixtures::gamma8_canonical_summands()?;
        let dims: Vec<u64> = summands.iter().map(|r| r.dim).collect();
        if dims != [2, 3] {
            return Err(Error::Inconsistent(format!(
                "constituent dimensions {dims:?}"
            )));
        }
        Ok("dims [2, 3], total 5".into())
    }));
}

#[derive(Serialize)]
struct VerifyDocument {
    tool: &'static str,
    command: serde_json::Value,
    checks: Vec<CheckDoc>,
    pass: bool,
}

#[derive(Serialize)]
struct CheckDoc {
    name: String,
    pass: bool,
    detail: String,
}

fn cmd_verify(suite: Suite, cap: u64, format: Format) -> Result<String, Failure> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Exactmath | Suite::All) {
        exactmath_checks(&mut checks);
    }
    if matches!(suite, Suite::Groups | Suite::All) {
        groups_checks(&mut checks, cap);
    }
    if matches!(suite, Suite::Psl2fp | Suite::All) {
        psl2fp_checks(&mut checks, cap);
    }
    if matches!(suite, Suite::Fermat | Suite::All) {
        fermat_checks(&mut checks, cap);
    }
    if matches!(suite, Suite::Fixtures | Suite::All) {
        fixtures_checks(&mut checks, cap);
    }
    let pass = checks.iter().all(|c| c.pass);
    let suite_name = match suite {
        Suite::Exactmath => "exactmath",
        Suite::Groups => "groups",
        Suite::Psl2fp => "psl2fp",
        Suite::Fermat => "fermat",
        Suite::Fixtures => "fixtures",
        Suite::All => "all",
    };
    let doc = VerifyDocument {
        tool: TOOL,
        command: json!({"name": "verify", "suite": suite_name, "max_group_order": cap}),
        checks: checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name.clone(),
                pass: c.pass,
                detail: c.detail.clone(),
            })
            .collect(),
        pass,
    };
    let rendered = match format {
        Format::Json => to_json(&doc)?,
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}", doc.tool);
            let _ = writeln!(
                s,
                "command: verify suite={suite_name} max-group-order={cap}"
            );
            for c in &doc.checks {
                let mark = if c.pass { "ok  " } else { "FAIL" };
                let _ = writeln!(s, "{mark} {}: {}", c.name, c.detail);
            }
            let _ = writeln!(s, "result: {}", if pass { "pass" } else { "fail" });
            s
        }
    };
    if pass {
        Ok(rendered)
    } else {
        let failing: Vec<String> = checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.clone())
            .collect();
        Err(Failure {
            code: 1,
            message: format!("verification failed: {}", failing.join(", ")),
            stdout: Some(rendered),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CacheDoc {
    entries: Vec<(u64, Vec<String>)>,
}

/// Optional persistence of the cyclotomic polynomial cache, keyed off
/// CW_CACHE_DIR. Entries are revalidated on load, so a stale or corrupt
/// file degrades to a cold cache.
struct CacheGuard {
    path: Option<PathBuf>,
}

impl CacheGuard {
    fn load() -> Self {
        let Some(dir) = std::env::var_os("CW_CACHE_DIR") else {
            return CacheGuard { path: None };
        };
        let path = PathBuf::from(dir).join("cyclotomic.json");
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(doc) = serde_json::from_str::<CacheDoc>(&text) {
                let entries: Vec<(u64, Vec<BigInt>)> = doc
                    .entries
                    .into_iter()
                    .map(|(n, coeffs)| {
                        (n, coeffs.iter().filter_map(|c| c.parse().ok()).collect())
                    })
                    .collect();
                cache_preload(entries);
            }
        }
        CacheGuard { path: Some(path) }
    }

    fn save(&self) {
        let Some(path) = &self.path else {
            return;
        };
        if let Some(dir) = path.parent() {
            let _ = fs::create_dir_all(dir);
        }
        let doc = CacheDoc {
            entries: cache_snapshot()
                .into_iter()
                .map(|(n, coeffs)| (n, coeffs.iter().map(BigInt::to_string).collect()))
                .collect(),
        };
        if let Ok(text) = serde_json::to_string(&doc) {
            let _ = fs::write(path, text);
        }
    }
}
