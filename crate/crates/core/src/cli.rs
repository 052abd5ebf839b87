//! Command-line front end. Every command writes to the given sink and
//! returns the process exit code.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::clan::{enumerate_symmetric_clans, Clan};
use crate::coset::{CosetDescriptor, CosetSign};
use crate::error::{Error, Result};
use crate::graph::{k_orbit_graph, l_orbit_graph};
use crate::oracle::SchubertOracle;
use crate::richardson::{
    classify_pair, expand_richardson_class, expansion_degree, structure_constant_for_word,
};
use crate::tables::{check_table, generate_table, render_table, ExampleTable};
use crate::verify::{verify, VerifyConfig};
use crate::weyl::{LieType, SignedPermutation, Word};

#[derive(Debug, Parser)]
#[command(name = "schubert-bd", version, about = "Structure constants for L-stable Richardson classes in types B and D")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    K,
    L,
}

#[derive(Debug, Args)]
pub struct Group {
    /// B or D.
    #[arg(long = "type", value_name = "TYPE")]
    pub lie_type: LieType,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Args)]
pub struct Pair {
    /// Maximal coset representative, e.g. "-2,-3,-4,1".
    #[arg(long, allow_hyphen_values = true)]
    pub u: String,
    /// Minimal coset representative.
    #[arg(long, allow_hyphen_values = true)]
    pub v: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One constant c_{w0 u, v}^w with its rule trace.
    Constant {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        pair: Pair,
        /// w in one-line notation; its canonical reduced word is used.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "w_word", required_unless_present = "w_word")]
        w: Option<String>,
        /// w as an explicit reduced word, used verbatim.
        #[arg(long)]
        w_word: Option<String>,
        /// Also compute the divided-difference value.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Every w of the expansion degree with acted clan and coefficient.
    Expand {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// The B4 (1) or D4 (2) worked expansion.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        example: u8,
        /// Compare with the shipped golden copy; exit 1 on any difference.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Compare the clan rule with the oracle over all v-positive pairs.
    Verify {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Symmetric clans with their class and connectedness.
    Clans {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Weak-order graph on clans (K) or its split lift (L).
    Graph {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_enum, default_value = "k", ignore_case = true)]
        level: Level,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
}

fn record(group: &Group, command: &str, inputs: Value, result: Value) -> String {
    json!({
        "type": group.lie_type.to_string(),
        "rank": group.rank,
        "command": command,
        "inputs": inputs,
        "result": result,
    })
    .to_string()
}

fn parse_element(text: &str, group: &Group) -> Result<SignedPermutation> {
    SignedPermutation::parse(text, group.lie_type, group.rank)
}

fn parse_pair(pair: &Pair, group: &Group) -> Result<(SignedPermutation, SignedPermutation)> {
    Ok((parse_element(&pair.u, group)?, parse_element(&pair.v, group)?))
}

/// Suggests the equivalent v-positive pair when `v` is negative.
fn duality_hint(u: &SignedPermutation, v: &SignedPermutation) -> Option<String> {
    if CosetDescriptor::of(v).sign != CosetSign::Negative {
        return None;
    }
    let w0 = SignedPermutation::longest_element(u.rank(), u.lie_type());
    let (du, dv) = (w0.multiply(v).ok()?, w0.multiply(u).ok()?);
    classify_pair(&du, &dv).ok()?;
    Some(format!(
        "hint: the same product is computed by --u \"{du}\" --v \"{dv}\" (agreement with the oracle is checked only experimentally)"
    ))
}

/// Runs a parsed command.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(Error::Output(ref m)) if m == BROKEN_PIPE => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

const BROKEN_PIPE: &str = "broken pipe";

fn io(e: std::io::Error) -> Error {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        return Error::Output(BROKEN_PIPE.into());
    }
    Error::Output(e.to_string())
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Constant {
            group,
            pair,
            w,
            w_word,
            oracle,
            format,
        } => cmd_constant(&group, &pair, w.as_deref(), w_word.as_deref(), oracle, format, out, err),
        Command::Expand {
            group,
            pair,
            oracle,
            format,
        } => cmd_expand(&group, &pair, oracle, format, out, err),
        Command::Table { example, check, format } => cmd_table(example, check, format, out),
        Command::Verify {
            group,
            max_degree,
            format,
        } => cmd_verify(&group, max_degree, format, out),
        Command::Clans { group, format } => cmd_clans(&group, format, out),
        Command::Graph { group, level, format } => cmd_graph(&group, level, format, out),
    }
}

fn with_hint<T>(r: Result<T>, u: &SignedPermutation, v: &SignedPermutation, err: &mut dyn Write) -> Result<T> {
    if r.is_err() {
        if let Some(h) = duality_hint(u, v) {
            let _ = writeln!(err, "{h}");
        }
    }
    r
}

#[allow(clippy::too_many_arguments)]
fn cmd_constant(
    group: &Group,
    pair: &Pair,
    w: Option<&str>,
    w_word: Option<&str>,
    oracle: bool,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    group.lie_type.check_rank(group.rank)?;
    let (u, v) = parse_pair(pair, group)?;
    let word = match (w, w_word) {
        (_, Some(text)) => Word::parse(text, group.rank)?,
        (Some(text), None) => parse_element(text, group)?.reduced_word(),
        (None, None) => return Err(Error::Parse(String::new(), "one of --w or --w-word is required".into())),
    };
    let w_elem = SignedPermutation::from_word(&word, group.rank, group.lie_type)?;
    let result = with_hint(structure_constant_for_word(&u, &v, &word), &u, &v, err)?;
    let truth = if oracle {
        let o = SchubertOracle::shared(group.rank, group.lie_type)?;
        let w0 = SignedPermutation::longest_element(group.rank, group.lie_type);
        Some(if result.length_mismatch {
            0
        } else {
            o.constant(&w0.multiply(&u)?, &v, &w_elem)?
        })
    } else {
        None
    };
    let verdict = truth.map(|t| if t == u64::from(result.value) { "AGREE" } else { "DISAGREE" });
    let degree = expansion_degree(&u, &v)?;
    if result.length_mismatch {
        let _ = writeln!(
            err,
            "warning: l(w) = {} but l(w0 u) + l(v) = {degree}; constant is 0 by convention",
            word.len()
        );
    }
    match format {
        Format::Json => {
            let trace: Vec<Value> = result
                .action
                .trace
                .iter()
                .map(|s| json!({"letter": s.letter, "rule": s.rule.to_string(), "clan": s.clan_after.to_string()}))
                .collect();
            let line = record(
                group,
                "constant",
                json!({"u": u.to_string(), "v": v.to_string(), "w": w_elem.to_string(), "word": word.to_string()}),
                json!({
                    "constant": result.value,
                    "start": result.start.to_string(),
                    "clan": result.action.result.to_string(),
                    "rule7_fired": result.action.rule7_fired,
                    "rule7_count": result.action.rule7_count,
                    "length_mismatch": result.length_mismatch,
                    "trace": trace,
                    "oracle": truth,
                    "verdict": verdict,
                }),
            );
            writeln!(out, "{line}").map_err(io)?;
        }
        _ => {
            let mut s = String::new();
            s += &format!("type      {}{}\n", group.lie_type, group.rank);
            s += &format!("u         {u}\nv         {v}\nw         {w_elem}\nword      {word}\n");
            s += &format!("start     {}\n", result.start);
            for step in &result.action.trace {
                s += &format!("  s{:<3} {:<6} {}\n", step.letter, step.rule, step.clan_after);
            }
            s += &format!("clan      {}\n", result.action.result);
            if result.length_mismatch {
                s += "warning   length mismatch\n";
            }
            s += &format!("constant  {}\n", result.value);
            if let (Some(t), Some(v)) = (truth, verdict) {
                s += &format!("oracle    {t} {v}\n");
            }
            out.write_all(s.as_bytes()).map_err(io)?;
        }
    }
    Ok(0)
}

fn cmd_expand(group: &Group, pair: &Pair, oracle: bool, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    group.lie_type.check_rank(group.rank)?;
    let (u, v) = parse_pair(pair, group)?;
    let ex = with_hint(expand_richardson_class(&u, &v), &u, &v, err)?;
    let truth = if oracle {
        let w0 = SignedPermutation::longest_element(group.rank, group.lie_type);
        Some(SchubertOracle::shared(group.rank, group.lie_type)?.expansion(&w0.multiply(&u)?, &v)?)
    } else {
        None
    };
    let mut disagreements = 0;
    for row in &ex.rows {
        let t = truth.as_ref().map(|m| m.get(&row.w).copied().unwrap_or(0));
        if t.is_some_and(|t| t != u64::from(row.coefficient)) {
            disagreements += 1;
        }
        match format {
            Format::Json => {
                let line = record(
                    group,
                    "expand",
                    json!({"u": u.to_string(), "v": v.to_string()}),
                    json!({"w": row.w.to_string(), "word": row.word.to_string(), "clan": row.clan.to_string(),
                           "coefficient": row.coefficient, "oracle": t}),
                );
                writeln!(out, "{line}").map_err(io)?;
            }
            _ => {
                let suffix = t.map(|t| format!("\t{t}")).unwrap_or_default();
                writeln!(out, "{}\t{}\t{}\t{}{suffix}", row.word, row.w, row.clan, row.coefficient).map_err(io)?;
            }
        }
    }
    if format != Format::Json {
        writeln!(out, "# degree {} start {} rows {}", ex.degree, ex.start, ex.rows.len()).map_err(io)?;
        if truth.is_some() {
            writeln!(out, "# oracle {}", if disagreements == 0 { "AGREE" } else { "DISAGREE" }).map_err(io)?;
        }
    }
    Ok(0)
}

fn cmd_table(example: u8, check: bool, format: Format, out: &mut dyn Write) -> Result<i32> {
    let table = ExampleTable::from_number(example)?;
    if check {
        let diffs = check_table(table)?;
        for (line, golden, generated) in &diffs {
            writeln!(out, "line {line}\n  golden:    {golden}\n  generated: {generated}").map_err(io)?;
        }
        let rows = table.golden().lines().count();
        writeln!(
            out,
            "table {example}: {} of {rows} rows match",
            rows.saturating_sub(diffs.len())
        )
        .map_err(io)?;
        return Ok(if diffs.is_empty() { 0 } else { 1 });
    }
    let rows = generate_table(table)?;
    match format {
        Format::Json => {
            let group = Group {
                lie_type: table.lie_type(),
                rank: 4,
            };
            let (u, v) = table.pair();
            for r in &rows {
                let line = record(
                    &group,
                    "table",
                    json!({"example": example, "u": u.to_string(), "v": v.to_string()}),
                    json!({"word": r.word.to_string(), "clan": r.clan, "constant": r.constant}),
                );
                writeln!(out, "{line}").map_err(io)?;
            }
        }
        _ => out.write_all(render_table(&rows).as_bytes()).map_err(io)?,
    }
    Ok(0)
}

fn cmd_verify(group: &Group, max_degree: Option<usize>, format: Format, out: &mut dyn Write) -> Result<i32> {
    let report = verify(VerifyConfig {
        lie_type: group.lie_type,
        rank: group.rank,
        max_degree,
    })?;
    match format {
        Format::Json => {
            let line = record(
                group,
                "verify",
                json!({"max_degree": max_degree}),
                serde_json::to_value(&report).expect("report serializes"),
            );
            writeln!(out, "{line}").map_err(io)?;
        }
        _ => {
            let mut s = format!("{}{} {}\n", group.lie_type, group.rank, report.coverage());
            s += &format!("pairs checked      {}\n", report.pairs_checked);
            s += &format!("constants checked  {}\n", report.constants_checked);
            for (c, k) in &report.coefficient_counts {
                s += &format!("  coefficient {c}: {k}\n");
            }
            s += &format!("mismatches         {}\n", report.mismatches.len());
            for m in &report.mismatches {
                s += &format!("  u={} v={} w={} rule={} oracle={}\n", m.u, m.v, m.w, m.conjectured, m.oracle);
            }
            out.write_all(s.as_bytes()).map_err(io)?;
        }
    }
    Ok(if report.is_clean() { 0 } else { 1 })
}

fn cmd_clans(group: &Group, format: Format, out: &mut dyn Write) -> Result<i32> {
    group.lie_type.check_rank(group.rank)?;
    for c in enumerate_symmetric_clans(group.rank, group.lie_type) {
        let class = describe_class(&c);
        match format {
            Format::Json => {
                let line = record(
                    group,
                    "clans",
                    json!({}),
                    json!({"clan": c.to_string(), "class": class, "disconnected": c.is_disconnected()}),
                );
                writeln!(out, "{line}").map_err(io)?;
            }
            _ => writeln!(out, "{c}\t{class}\t{}", c.is_disconnected()).map_err(io)?,
        }
    }
    Ok(0)
}

fn describe_class(c: &Clan) -> String {
    match c.classify_symmetric() {
        Ok(class) => format!("{class:?}"),
        Err(_) => "unclassified".into(),
    }
}

fn cmd_graph(group: &Group, level: Level, format: Format, out: &mut dyn Write) -> Result<i32> {
    let text = match (level, format) {
        (Level::K, Format::Dot) => k_orbit_graph(group.rank, group.lie_type)?.to_dot(),
        (Level::K, Format::Table) => k_orbit_graph(group.rank, group.lie_type)?.to_text(),
        (Level::L, Format::Dot) => l_orbit_graph(group.rank, group.lie_type)?.to_dot(),
        (Level::L, Format::Table) => l_orbit_graph(group.rank, group.lie_type)?.to_text(),
        (Level::K, Format::Json) => {
            let g = k_orbit_graph(group.rank, group.lie_type)?;
            let edges: Vec<Value> = g
                .graph
                .edge_indices()
                .map(|e| {
                    let (s, t) = g.graph.edge_endpoints(e).unwrap();
                    json!({"source": g.graph[s].to_string(), "target": g.graph[t].to_string(), "label": g.graph[e]})
                })
                .collect();
            record(group, "graph", json!({"level": "K"}), json!({"nodes": g.graph.node_count(), "edges": edges})) + "\n"
        }
        (Level::L, Format::Json) => {
            let g = l_orbit_graph(group.rank, group.lie_type)?;
            let edges: Vec<Value> = g
                .graph
                .edge_indices()
                .map(|e| {
                    let (s, t) = g.graph.edge_endpoints(e).unwrap();
                    json!({"source": g.graph[s].to_string(), "target": g.graph[t].to_string(),
                           "label": g.graph[e].label, "style": format!("{:?}", g.graph[e].style)})
                })
                .collect();
            record(
                group,
                "graph",
                json!({"level": "L"}),
                json!({"nodes": g.graph.node_count(), "edges": edges, "note": crate::graph::HALF_LABEL_NOTE}),
            ) + "\n"
        }
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(0)
}
