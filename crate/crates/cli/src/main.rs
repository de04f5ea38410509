use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use linedigraph::cayley::{cayley_dihedral, verify_cycle_example};
use linedigraph::factorization::one_factorization;
use linedigraph::line::{
    debruijn_with_limit, is_line_digraph_forbidden, is_line_digraph_matrix,
    iterated_line_digraph_with_limit, recover_partitions, DEFAULT_FORBIDDEN_LIMIT,
    DEFAULT_SIZE_LIMIT,
};
use linedigraph::report::{Report, Status};
use linedigraph::spectral::{
    char_poly, digraph_char_poly, line_charpoly_sides, permanent_positivity_check, IntPoly,
    DEBRUIJN_SPECTRUM_LIMIT,
};
use linedigraph::verify::{verify_digraph, verify_random};
use linedigraph::walk::{build_walk, distribution, step, CoinKind, WalkState, SUPPORT_TOL};
use linedigraph::{ArcLabeledDigraph, Digraph, Error};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "linedigraph",
    version,
    about = "Line digraph constructions and checks"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for `verify --random`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Vertex bound for iterated constructions.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_LIMIT)]
    max_size: usize,
    /// Threshold for nonzero complex entries.
    #[arg(long, global = true, default_value_t = SUPPORT_TOL)]
    tol: f64,
    /// Coin for `walk`.
    #[arg(long, global = true, default_value = "hadamard")]
    coin: CoinKind,
    /// Number of walk steps.
    #[arg(long, global = true, default_value_t = 10)]
    steps: usize,
    /// Read the edge list from a file instead of standard input.
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Line digraph with arc labels.
    Line,
    /// k-th iterated line digraph.
    Iterate { k: usize },
    /// Line-digraph recognition by both criteria.
    Recognize,
    /// 1-factorization of a regular digraph.
    Factorize,
    /// Coined quantum walk: per-step vertex distribution, or the operator with --json.
    Walk {
        /// Basis index of the initial state.
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
    /// Characteristic polynomial and the line digraph identity.
    Spectrum,
    /// Permanent of the line digraph adjacency.
    Permanent,
    /// Every applicable property check.
    Verify {
        /// Check N seeded random digraphs instead of reading input.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
    },
    /// de Bruijn digraph B(d,k).
    Debruijn {
        d: usize,
        k: usize,
        #[arg(long)]
        spectrum: bool,
    },
    /// Bidirected odd cycle versus the dihedral prism.
    CayleyDemo { n: usize },
}

struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn read_digraph(cli: &Cli) -> Result<Digraph, Error> {
    let mut text = String::new();
    match &cli.input {
        Some(path) => {
            text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {e}", path.display()),
            })?
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse {
                    line: 0,
                    msg: e.to_string(),
                })?;
        }
    }
    text.parse()
}

fn digraph_json(d: &Digraph) -> Value {
    json!({ "n": d.vertex_count(), "arcs": d.arcs() })
}

fn labeled_json(l: &ArcLabeledDigraph) -> Value {
    json!({ "n": l.graph.vertex_count(), "arcs": l.graph.arcs(), "labels": l.walks, "base_n": l.base_n })
}

fn report_json(r: &Report) -> Value {
    let assertions: Vec<Value> = r
        .assertions
        .iter()
        .map(|a| {
            let (status, reason) = match &a.status {
                Status::Pass => ("pass", None),
                Status::Fail => ("fail", None),
                Status::Skipped(why) => ("skipped", Some(why.clone())),
            };
            json!({ "id": a.id, "anchor": a.anchor, "status": status, "reason": reason, "detail": a.detail })
        })
        .collect();
    let digest = r
        .digest
        .as_ref()
        .map(|d| json!({ "n": d.n, "m": d.m, "regularity": d.regularity }));
    json!({ "command": r.command, "digest": digest, "assertions": assertions, "exit_status": r.exit_status() })
}

fn poly_json(p: &IntPoly) -> Value {
    json!({
        "coefficients": p.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "factored": p.to_factored_string(),
    })
}

fn render(cli: &Cli, value: Value, text: String) -> String {
    if cli.json {
        format!("{value:#}\n")
    } else {
        text
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Line => {
            let l = iterated_line_digraph_with_limit(&read_digraph(cli)?, 1, cli.max_size)?;
            Ok(Output::ok(render(
                cli,
                labeled_json(&l),
                l.to_labeled_edge_list(),
            )))
        }
        Command::Iterate { k } => {
            let l = iterated_line_digraph_with_limit(&read_digraph(cli)?, *k, cli.max_size)?;
            Ok(Output::ok(render(
                cli,
                labeled_json(&l),
                l.to_labeled_edge_list(),
            )))
        }
        Command::Recognize => recognize(cli, &read_digraph(cli)?),
        Command::Factorize => {
            let d = read_digraph(cli)?;
            let fac = one_factorization(&d)?;
            let factors: Vec<&[usize]> = fac.factors().iter().map(|f| f.successors()).collect();
            let value = json!({ "k": fac.k(), "n": fac.host_n(), "factors": factors });
            Ok(Output::ok(render(cli, value, fac.to_text())))
        }
        Command::Walk { start } => walk(cli, &read_digraph(cli)?, *start),
        Command::Spectrum => spectrum(cli, &read_digraph(cli)?),
        Command::Permanent => {
            let d = read_digraph(cli)?;
            let c = permanent_positivity_check(&d)?;
            let value = json!({
                "permanent": c.permanent.to_string(),
                "positive": c.positive(),
                "components_eulerian": c.components_eulerian,
                "agrees": c.agrees(),
            });
            let text = format!(
                "permanent: {}\npositive: {}\ncomponents eulerian: {}\n",
                c.permanent,
                c.positive(),
                c.components_eulerian
            );
            Ok(Output {
                text: render(cli, value, text),
                code: if c.agrees() { 0 } else { 1 },
            })
        }
        Command::Verify {
            random: Some(count),
        } => {
            let runs = verify_random(*count, cli.seed)?;
            let mut text = String::new();
            let mut values = Vec::new();
            let mut code = 0;
            for (i, (d, r)) in runs.iter().enumerate() {
                let _ = writeln!(text, "## instance {i}\n{}{r}", d.to_edge_list());
                values.push(
                    json!({ "instance": i, "digraph": digraph_json(d), "report": report_json(r) }),
                );
                code = code.max(r.exit_status());
            }
            Ok(Output {
                text: render(cli, Value::Array(values), text),
                code: code as u8,
            })
        }
        Command::Verify { random: None } => {
            let r = verify_digraph(&read_digraph(cli)?)?;
            Ok(Output {
                text: render(cli, report_json(&r), r.to_string()),
                code: r.exit_status() as u8,
            })
        }
        Command::Debruijn { d, k, spectrum } => {
            let b = debruijn_with_limit(*d, *k, cli.max_size)?;
            let mut text = b.to_labeled_edge_list();
            let mut value = labeled_json(&b);
            if *spectrum {
                let size = b.graph.vertex_count();
                if size > DEBRUIJN_SPECTRUM_LIMIT {
                    return Err(Error::SizeLimitExceeded {
                        size,
                        limit: DEBRUIJN_SPECTRUM_LIMIT,
                    });
                }
                let p = char_poly(&b.graph.adjacency())?;
                let _ = writeln!(text, "charpoly: {}", p.to_factored_string());
                value["charpoly"] = poly_json(&p);
            }
            Ok(Output::ok(render(cli, value, text)))
        }
        Command::CayleyDemo { n } => {
            let r = verify_cycle_example(*n)?;
            let prism = cayley_dihedral(*n)?;
            let text = format!("{r}{}", prism.graph.to_edge_list());
            let value = json!({ "report": report_json(&r), "prism": digraph_json(&prism.graph) });
            Ok(Output {
                text: render(cli, value, text),
                code: r.exit_status() as u8,
            })
        }
    }
}

fn recognize(cli: &Cli, d: &Digraph) -> Result<Output, Error> {
    let by_matrix = is_line_digraph_matrix(d)?;
    let by_forbidden = if d.vertex_count() <= DEFAULT_FORBIDDEN_LIMIT {
        Some(is_line_digraph_forbidden(d)?)
    } else {
        None
    };
    let mut text = format!("matrix criterion: {by_matrix}\n");
    match by_forbidden {
        Some(b) => {
            let _ = writeln!(text, "forbidden subdigraphs: {b}");
        }
        None => text.push_str("forbidden subdigraphs: skipped: too large\n"),
    }
    let mut value = json!({ "matrix": by_matrix, "forbidden": by_forbidden });
    if by_matrix {
        let p = recover_partitions(d)?;
        for (i, (a, b)) in p.a.iter().zip(&p.b).enumerate() {
            let _ = writeln!(text, "class {i}: A = {a:?} B = {b:?}");
        }
        value["partitions"] = json!({ "a": p.a, "b": p.b });
    }
    let agree = by_forbidden.is_none_or(|b| b == by_matrix);
    Ok(Output {
        text: render(cli, value, text),
        code: if agree { 0 } else { 1 },
    })
}

fn walk(cli: &Cli, d: &Digraph, start: usize) -> Result<Output, Error> {
    let k = d.regularity().ok_or(Error::NotRegular)?;
    let w = build_walk(d, &cli.coin.build(k)?)?;
    if cli.json {
        let mut entries = Vec::new();
        for i in 0..w.dim() {
            for j in 0..w.dim() {
                let z = w.u.get(i, j);
                if z.norm() > cli.tol {
                    entries.push(json!([i, j, z.re, z.im]));
                }
            }
        }
        let value = json!({
            "dim": w.dim(),
            "k": w.k,
            "n": w.n,
            "coin": cli.coin.name(),
            "factors": w.factorization.factors().iter().map(|f| f.successors()).collect::<Vec<_>>(),
            "nonzero": entries,
        });
        return Ok(Output::ok(format!("{value:#}\n")));
    }
    let mut state = WalkState::basis(w.dim(), start)?;
    let mut text = String::from("t,v,prob\n");
    for t in 0..=cli.steps {
        if t > 0 {
            state = step(&w, &state)?;
        }
        for (v, p) in distribution(&w, &state).iter().enumerate() {
            let _ = writeln!(text, "{t},{v},{p:.12}");
        }
    }
    Ok(Output::ok(text))
}

fn spectrum(cli: &Cli, d: &Digraph) -> Result<Output, Error> {
    let p = digraph_char_poly(d);
    let mut text = format!(
        "charpoly: {}\ncoefficients: {}\n",
        p.to_factored_string(),
        p.to_coefficient_list()
    );
    let mut value = json!({ "charpoly": poly_json(&p) });
    let mut code = 0;
    if d.arc_count() >= d.vertex_count() {
        let (lhs, rhs) = line_charpoly_sides(d)?;
        let _ = writeln!(
            text,
            "line charpoly: {}\nidentity holds: {}",
            lhs.to_factored_string(),
            lhs == rhs
        );
        value["line_charpoly"] = poly_json(&lhs);
        value["identity_holds"] = json!(lhs == rhs);
        if lhs != rhs {
            code = 1;
        }
    } else {
        text.push_str("line charpoly: skipped: ExponentNegative\n");
    }
    Ok(Output {
        text: render(cli, value, text),
        code,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
