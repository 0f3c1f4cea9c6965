//! The `minorsat` command line.
//!
//! Exit codes: 0 success or claim verified, 1 claim refuted, 2 usage error,
//! 3 search budget exhausted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use crate::certificates::{sat_value, verify_saturation_by_certs, SatValue};
use crate::constructions::{
    block_density, star_saturated, thm22_core, thm22_density, thm22_family, ChainFamily, Thm22Params,
};
use crate::graph::{
    complete, complete_bipartite, cycle, generalized_petersen, gp_dihedral_group, nonedge_orbits, parse_edge_list,
    path, wagner, write_edge_list, Graph, GraphError,
};
use crate::minor::{find_minor, spanning_edge_bound, spanning_edge_requirement, MinorOutcome, SearchBudget};
use crate::saturation::{
    exact_sat, is_saturated, is_saturated_symmetric, CensusError, CensusLimits, SaturationCheck, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "minorsat", version, about = "Graph-minor containment and minor-saturation")]
struct Cli {
    /// Print witnesses, models and certificates.
    #[arg(short, long, global = true)]
    verbose: bool,
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a graph as an edge list.
    Gen {
        /// complete, complete-bipartite, path, cycle, wagner, gp, thm22, star,
        /// gp-chain, wagner-chain
        name: String,
        /// Numeric parameters of the family.
        params: Vec<usize>,
        /// thm22 only: target connectivity, glue `--copies` blocks.
        #[arg(long)]
        kappa: Option<usize>,
        #[arg(long, default_value_t = 1)]
        copies: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a minor model of TARGET in HOST.
    Minor {
        #[arg(long)]
        host: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide whether GRAPH is M(TARGET)-saturated.
    Saturated {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Group::None)]
        group: Group,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check the bundled GP(8,3), GP(13,5), GP(19,7) saturation certificates.
    VerifyPaper {
        #[arg(long, value_parser = clap::value_parser!(u64).range(6..=8))]
        r: u64,
        /// Decide saturation by orbit-reduced search instead.
        #[arg(long)]
        blind: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exact sat(n, M(target)) by enumerating all graphs on n vertices.
    SatExact {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: String,
        /// Enumerate vertex pairs in reverse order.
        #[arg(long)]
        reverse: bool,
        /// Skip labelings whose degrees are not non-increasing.
        #[arg(long)]
        degree_filter: bool,
        /// Also count saturated labeled graphs with sat edges.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exact edge density of a construction.
    Density {
        #[arg(long, num_args = 2, value_names = ["S", "D"], conflicts_with_all = ["block", "shared"])]
        thm22: Option<Vec<usize>>,
        #[arg(long, requires = "shared")]
        block: Option<String>,
        #[arg(long, requires = "block")]
        shared: Option<usize>,
    },
    /// Glue copies of a saturated block along a shared edge.
    Chain {
        #[arg(long)]
        family: String,
        #[arg(long)]
        copies: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    /// Rotations and reflections of a GP(n, k) graph.
    Dihedral,
    None,
}

/// A user-facing failure with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one invocation. Reports go to `out`, errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> Outcome {
    let v = cli.verbose;
    match &cli.command {
        Command::Gen {
            name,
            params,
            kappa,
            copies,
            out: file,
        } => cmd_gen(name, params, *kappa, *copies, file.as_deref(), out),
        Command::Minor { host, target, budget } => cmd_minor(host, target, budget_of(*budget), out),
        Command::Saturated {
            graph,
            target,
            group,
            budget,
        } => cmd_saturated(graph, target, *group, budget_of(*budget), v, out),
        Command::VerifyPaper { r, blind, budget } => cmd_verify_paper(*r as usize, *blind, budget_of(*budget), v, out),
        Command::SatExact {
            n,
            target,
            reverse,
            degree_filter,
            count,
            budget,
        } => {
            let limits = CensusLimits {
                budget: budget_of(*budget),
                degree_filter: *degree_filter,
                reverse_order: *reverse,
                count: *count,
                ..CensusLimits::default()
            };
            cmd_sat_exact(*n, target, &limits, out)
        }
        Command::Density { thm22, block, shared } => cmd_density(thm22.as_deref(), block.as_deref(), *shared, out),
        Command::Chain {
            family,
            copies,
            out: file,
        } => cmd_chain(family, *copies, file.as_deref(), out),
    }
}

fn budget_of(nodes: Option<u64>) -> SearchBudget {
    nodes.map(SearchBudget::nodes).unwrap_or_default()
}

fn emit(text: &str, file: Option<&Path>, out: &mut Vec<u8>) -> Outcome {
    match file {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?,
        None => out.extend_from_slice(text.as_bytes()),
    }
    Ok(EXIT_OK)
}

/// Built-in names (`K4`, `K3,3`, `P5`, `C5`, `GP(8,3)`, `wagner`) or an
/// edge-list file.
pub fn load_graph(spec: &str) -> Result<Graph, GraphError> {
    if let Some(g) = builtin_graph(spec)? {
        return Ok(g);
    }
    let text = fs::read_to_string(spec).map_err(|e| {
        GraphError::InvalidParameter(format!("{spec:?} is neither a built-in graph nor a readable file: {e}"))
    })?;
    parse_edge_list(&text)
}

fn builtin_graph(spec: &str) -> Result<Option<Graph>, GraphError> {
    let s = spec.trim();
    if s.eq_ignore_ascii_case("wagner") {
        return Ok(Some(wagner()));
    }
    let num = |t: &str| t.trim().parse::<usize>().ok();
    if let Some(inner) = s.strip_prefix("GP(").and_then(|t| t.strip_suffix(')')) {
        if let Some((a, b)) = inner.split_once(',') {
            if let (Some(n), Some(k)) = (num(a), num(b)) {
                return generalized_petersen(n, k).map(Some);
            }
        }
        return Ok(None);
    }
    let Some(first) = s.chars().next() else {
        return Ok(None);
    };
    let rest = &s[1..];
    Ok(match first {
        'K' => match rest.split_once(',') {
            Some((a, b)) => match (num(a), num(b)) {
                (Some(a), Some(b)) => Some(complete_bipartite(a, b)?),
                _ => None,
            },
            None => match num(rest) {
                Some(r) => Some(complete(r)?),
                None => None,
            },
        },
        'P' => match num(rest) {
            Some(r) => Some(path(r)?),
            None => None,
        },
        'C' => match num(rest) {
            Some(r) => Some(cycle(r)?),
            None => None,
        },
        _ => None,
    })
}

fn load(spec: &str) -> Result<Graph, Failure> {
    load_graph(spec).map_err(|e| usage(e.to_string()))
}

fn params_exact<const N: usize>(name: &str, params: &[usize], what: &str) -> Result<[usize; N], Failure> {
    params
        .try_into()
        .map_err(|_| usage(format!("gen {name} takes {N} parameter(s): {what}")))
}

fn cmd_gen(
    name: &str,
    params: &[usize],
    kappa: Option<usize>,
    copies: usize,
    file: Option<&Path>,
    out: &mut Vec<u8>,
) -> Outcome {
    let joined: Vec<String> = params.iter().map(ToString::to_string).collect();
    let mut header = format!("# minorsat gen {name} {}", joined.join(" "));
    let g = match name {
        "complete" => complete(params_exact::<1>(name, params, "r")?[0])?,
        "complete-bipartite" => {
            let [a, b] = params_exact(name, params, "a b")?;
            complete_bipartite(a, b)?
        }
        "path" => path(params_exact::<1>(name, params, "r")?[0])?,
        "cycle" => cycle(params_exact::<1>(name, params, "r")?[0])?,
        "wagner" => {
            params_exact::<0>(name, params, "none")?;
            wagner()
        }
        "gp" => {
            let [n, k] = params_exact(name, params, "n k")?;
            header += "\n# vertices: x_i -> i, y_i -> n + i";
            generalized_petersen(n, k)?
        }
        "thm22" => {
            let [s, d] = params_exact(name, params, "s d")?;
            match kappa {
                None => {
                    let (g, omitted) = thm22_core(s, d)?;
                    header += &format!("\n# omitted subset: {omitted:?}");
                    g
                }
                Some(kappa) => {
                    header += &format!(" --kappa {kappa} --copies {copies}");
                    thm22_family(&Thm22Params { s, d, kappa, copies })?
                }
            }
        }
        "star" => {
            let [r, len] = params_exact(name, params, "r path_len")?;
            star_saturated(r, len)?
        }
        "gp-chain" | "wagner-chain" => {
            let family = if name == "wagner-chain" {
                params_exact::<1>(name, params, "copies")?;
                ChainFamily::Wagner
            } else {
                let [r, _] = params_exact(name, params, "r copies")?;
                match r {
                    6 => ChainFamily::Gp6,
                    7 => ChainFamily::Gp7,
                    8 => ChainFamily::Gp8,
                    _ => return Err(usage("gen gp-chain: r must be 6, 7 or 8")),
                }
            };
            family.chain(*params.last().unwrap())?
        }
        _ => return Err(usage(format!("unknown family {name:?}"))),
    };
    let text = format!("{header}\n{}", write_edge_list(&g));
    emit(&text, file, out)
}

fn cmd_minor(host: &str, target: &str, budget: SearchBudget, out: &mut Vec<u8>) -> Outcome {
    let (h, t) = (load(host)?, load(target)?);
    let r = find_minor(&h, &t, budget);
    let _ = writeln!(out, "{r}");
    let _ = writeln!(out, "nodes: {}", r.nodes);
    Ok(match r.outcome {
        MinorOutcome::Model(_) => EXIT_OK,
        MinorOutcome::NoMinor(_) => EXIT_REFUTED,
        MinorOutcome::BudgetExhausted => EXIT_BUDGET,
    })
}

fn verdict_code(c: &SaturationCheck) -> i32 {
    match c.verdict {
        Verdict::Saturated { .. } => EXIT_OK,
        Verdict::HasMinor(_) | Verdict::MissingEdge(_) => EXIT_REFUTED,
        Verdict::Inconclusive { .. } => EXIT_BUDGET,
    }
}

fn dihedral_for(g: &Graph) -> Result<Vec<crate::graph::VertexPermutation>, Failure> {
    if g.n() < 6 || g.n() % 2 == 1 {
        return Err(usage("--group dihedral needs a GP(n,k) graph on 2n vertices"));
    }
    Ok(gp_dihedral_group(g.n() / 2))
}

fn cmd_saturated(
    graph: &str,
    target: &str,
    group: Group,
    budget: SearchBudget,
    verbose: bool,
    out: &mut Vec<u8>,
) -> Outcome {
    let (g, t) = (load(graph)?, load(target)?);
    let check = match group {
        Group::None => is_saturated(&g, &t, budget),
        Group::Dihedral => is_saturated_symmetric(&g, &t, &dihedral_for(&g)?, budget)
            .map_err(|e| usage(format!("{e}; is the graph a GP(n,k)?")))?,
    };
    let _ = write!(out, "{}", check.render(verbose));
    Ok(verdict_code(&check))
}

fn cmd_verify_paper(r: usize, blind: bool, budget: SearchBudget, verbose: bool, out: &mut Vec<u8>) -> Outcome {
    let report = verify_saturation_by_certs(r).ok_or_else(|| usage("r must be 6, 7 or 8"))?;
    if !blind {
        let _ = write!(out, "{}", report.render(verbose));
        return Ok(match sat_value(&report) {
            Some(s) => {
                let _ = writeln!(out, "{s}");
                EXIT_OK
            }
            None => EXIT_REFUTED,
        });
    }

    let g = generalized_petersen(report.n, report.k)?;
    let target = complete(r)?;
    let group = gp_dihedral_group(report.n);
    let check = is_saturated_symmetric(&g, &target, &group, budget).map_err(|e| usage(e.to_string()))?;
    let _ = writeln!(out, "graph: GP({},{}) target: K{r}", report.n, report.k);
    let _ = write!(out, "{}", check.render(verbose));
    let code = verdict_code(&check);
    if let Verdict::Saturated { witnesses } = &check.verdict {
        // The certificate bundle covers the same orbit representatives.
        let reps: Vec<_> = nonedge_orbits(&g, &group)?
            .into_iter()
            .map(|o| o.representative)
            .collect();
        let certified: Vec<_> = report.coverage.iter().map(|c| c.entry.canonical).collect();
        let agree = witnesses
            .iter()
            .filter(|(e, _)| reps.contains(e) && certified.contains(e))
            .count();
        let _ = writeln!(out, "orbits agreeing with certificates: {agree}/{}", reps.len());
        let s = SatValue {
            n: g.n(),
            r,
            lower: (3 * g.n()).div_ceil(2),
            upper: g.m(),
        };
        let _ = writeln!(out, "{s}");
    }
    Ok(code)
}

fn cmd_sat_exact(n: usize, target: &str, limits: &CensusLimits, out: &mut Vec<u8>) -> Outcome {
    let t = load(target)?;
    let res = match exact_sat(n, &t, limits) {
        Ok(r) => r,
        Err(e @ CensusError::Inconclusive(_)) => {
            return Err(Failure {
                code: EXIT_BUDGET,
                msg: e.to_string(),
            })
        }
        Err(e @ CensusError::NoneFound(_)) => {
            return Err(Failure {
                code: EXIT_REFUTED,
                msg: e.to_string(),
            })
        }
        Err(e) => return Err(usage(e.to_string())),
    };
    let _ = writeln!(out, "n: {n}");
    let _ = writeln!(out, "target: {target}");
    let _ = writeln!(out, "sat = {}", res.sat);
    let edges: Vec<String> = res.witness.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    let _ = writeln!(out, "witness: {}", edges.join(" "));
    if let Some(c) = res.saturated_count {
        let _ = writeln!(out, "saturated labeled graphs: {c}");
    }
    let _ = writeln!(out, "graphs checked: {}", res.graphs_checked);
    Ok(EXIT_OK)
}

fn ratio(r: Ratio<i64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn cmd_density(thm22: Option<&[usize]>, block: Option<&str>, shared: Option<usize>, out: &mut Vec<u8>) -> Outcome {
    let d = match (thm22, block, shared) {
        (Some([s, d]), None, None) => thm22_density(*s, *d)?,
        (None, Some(b), Some(k)) => block_density(&load(b)?, k)?,
        _ => return Err(usage("give either --thm22 S D or --block FILE --shared K")),
    };
    let _ = writeln!(out, "density: {}", ratio(d));
    Ok(EXIT_OK)
}

fn cmd_chain(family: &str, copies: usize, file: Option<&Path>, out: &mut Vec<u8>) -> Outcome {
    let fam: ChainFamily = family.parse()?;
    let g = fam.chain(copies)?;
    let target = complete(fam.target_order())?;
    let required = spanning_edge_requirement(g.n(), &target);
    let bound = if spanning_edge_bound(&g, &target) {
        format!("{} < {required}, K{}-minor-free", g.m(), fam.target_order())
    } else {
        format!("{} >= {required}, not decided", g.m())
    };
    let summary = format!(
        "# chain {fam} copies={copies}\n# n: {} m: {}\n# density per block: {}\n# counting bound: {bound}\n",
        g.n(),
        g.m(),
        ratio(fam.density())
    );
    match file {
        Some(_) => {
            emit(&write_edge_list(&g), file, out)?;
            out.extend_from_slice(summary.as_bytes());
        }
        None => {
            out.extend_from_slice(summary.as_bytes());
            out.extend_from_slice(write_edge_list(&g).as_bytes());
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["minorsat"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn builtin_names() {
        assert_eq!(load_graph("K4").unwrap(), complete(4).unwrap());
        assert_eq!(load_graph("K3,3").unwrap().m(), 9);
        assert_eq!(load_graph("K1,4").unwrap().max_degree(), 4);
        assert_eq!(load_graph("P5").unwrap().m(), 4);
        assert_eq!(load_graph("C5").unwrap().m(), 5);
        assert_eq!(load_graph("GP(8,3)").unwrap().m(), 24);
        assert_eq!(load_graph("wagner").unwrap().m(), 12);
        assert!(load_graph("no-such-file").is_err());
        assert!(load_graph("GP(8,4)").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify-paper", "--r", "9"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen", "gp", "8"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["density"]).0, EXIT_USAGE);
        let (code, _, err) = run_str(&["minor", "--host", "K9,", "--target", "K3"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.starts_with("error: "));
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn ratio_always_has_denominator() {
        assert_eq!(ratio(Ratio::from_integer(2)), "2/1");
        assert_eq!(ratio(Ratio::new(27, 12)), "9/4");
    }
}
