//! Command-line interface.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use freejord_core::combinat::{partitions, Partition};
use freejord_core::kernel::{is_prime, DEFAULT_PRIMES};
use freejord_core::operad::{multidegree_dim, GeneratingSet, NaiveQuotient, JORD_MODULE_BOUND, NAIVE_BOUND};
use freejord_core::series::{check_sequence, predict_dims};
use freejord_core::special::{b_dim_two_gen, jordan_span_dim, reversible_dim, JORDAN_SPAN_BOUND};
use freejord_core::symfunc::{dims_from_character, km_prediction, schur_decompose};
use freejord_core::tkk::{b_inner_map, ce_homology, sl2_decompose, tag, truncated_free_jordan, AlgebraFD};
use serde_json::json;

use crate::cache::Cache;
use crate::compute::operad_blocks;
use crate::format::{algebra_to_json, parse_algebra};
use crate::report::{Cell, OutputFormat, Table};
use crate::verify::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(name = "freejord", version, about = "Dimensions, modules and homology of free Jordan algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Cache directory (default: $FREEJORD_CACHE_DIR, else no cache).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions predicted by the residue condition.
    PredictDims {
        #[arg(long, default_value_t = 2)]
        generators: u32,
        #[arg(long, default_value_t = 19)]
        max_degree: usize,
    },
    /// Predicted S_n-modules for the free algebra and for B.
    PredictModules {
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Multiplicities in Jord(n) by the rank method.
    Operad {
        #[arg(long)]
        degree: usize,
        /// Restrict to one partition, e.g. `3,2,1` or `2^2,1`.
        #[arg(long)]
        lambda: Option<String>,
        /// Primes for the modular ranks (at least two).
        #[arg(long = "prime")]
        primes: Vec<u64>,
        /// Also compute the naive quotient and compare.
        #[arg(long)]
        oracle: bool,
        /// Allow degrees above the default bound.
        #[arg(long)]
        long_running: bool,
    },
    /// Dimension of one multidegree component.
    Multidegree {
        #[arg(long, value_delimiter = ',')]
        delta: Vec<usize>,
    },
    /// The two-generator table: reversible elements, spans, B, predictions.
    TwoGen {
        #[arg(long, default_value_t = 20)]
        max_degree: usize,
    },
    /// TAG of a Jordan algebra and its homology.
    Tag {
        /// Structure-constant JSON file.
        #[arg(long, conflicts_with = "free")]
        input: Option<PathBuf>,
        /// Truncated free Jordan algebra `G,N`.
        #[arg(long, value_delimiter = ',')]
        free: Vec<usize>,
        /// Generator parities for `--free`, e.g. `1` for one odd generator.
        #[arg(long, value_delimiter = ',')]
        parities: Vec<u8>,
        /// Homology up to this degree.
        #[arg(long)]
        homology: Option<usize>,
        /// Decompose homology into sl2 highest weights.
        #[arg(long)]
        sl2: bool,
        /// Write the Lie algebra's structure constants here.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Reproduce published values.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

/// Bad arguments discovered after parsing; exit status 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Exit status for an error: 2 for bad input, 3 for refused sizes, 1 otherwise.
pub fn exit_code(e: &anyhow::Error) -> i32 {
    if e.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    match e.downcast_ref::<freejord_core::Error>() {
        Some(freejord_core::Error::Input(_)) => 2,
        Some(freejord_core::Error::Infeasible(_)) => 3,
        _ => 1,
    }
}

/// Output of one command and whether every requested check passed.
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let format = if cli.global.json {
        OutputFormat::Json
    } else if cli.global.csv {
        OutputFormat::Csv
    } else {
        OutputFormat::Text
    };
    if let Some(t) = cli.global.threads {
        if t == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        // a second initialisation in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let cache = Cache::from_env(cli.global.cache_dir.as_deref());
    let table = |t: Table| Ok(Outcome { text: t.render(format), success: true });
    match cli.command {
        Command::PredictDims { generators, max_degree } => {
            if generators == 0 || max_degree == 0 {
                return Err(usage("generators and degree must be at least 1"));
            }
            let d = predict_dims(generators, max_degree)?;
            let mut t = Table::new(&["n", "predicted"]);
            for (n, x) in d.dims.iter().enumerate() {
                t.push(vec![(n + 1).into(), x.into()]);
            }
            if generators == 2 {
                let actual: Vec<u64> = (1..=max_degree).map(reversible_dim).collect();
                let res = check_sequence(2, &freejord_core::series::DimSequence::from_u64(2, &actual))?;
                t.columns.extend(["actual".into(), "residue".into()]);
                for (row, (a, r)) in t.rows.iter_mut().zip(actual.iter().zip(&res.residues)) {
                    row.push((*a).into());
                    row.push(r.into());
                }
            }
            table(t)
        }
        Command::PredictModules { max_degree } => {
            if max_degree == 0 {
                return Err(usage("degree must be at least 1"));
            }
            let km = km_prediction(max_degree, max_degree)?;
            let mut t = Table::new(&["n", "lambda", "jord", "b"]);
            for n in 1..=max_degree {
                let a = schur_decompose(&km.a, n)?;
                let b = schur_decompose(&km.b, n)?;
                for lam in partitions(n) {
                    let (x, y) = (a.get(&lam), b.get(&lam));
                    if x.sign() != num_bigint::Sign::NoSign || y.sign() != num_bigint::Sign::NoSign {
                        t.push(vec![n.into(), lam.to_string().into(), x.into(), y.into()]);
                    }
                }
            }
            table(t)
        }
        Command::Operad { degree, lambda, primes, oracle, long_running } => {
            if degree == 0 {
                return Err(usage("degree must be at least 1"));
            }
            let primes = if primes.is_empty() { DEFAULT_PRIMES[..2].to_vec() } else { primes };
            if primes.len() < 2 || primes.iter().any(|&p| p < 3 || !is_prime(p)) {
                return Err(usage("give at least two odd primes"));
            }
            if degree > JORD_MODULE_BOUND && !long_running {
                return Err(freejord_core::Error::Infeasible(format!(
                    "degree {degree} is above {JORD_MODULE_BOUND}; pass --long-running (degree 8 takes seconds, 9 about an hour)"
                ))
                .into());
            }
            let lams = match lambda {
                Some(s) => {
                    let lam: Partition = s.parse().map_err(|e| usage(format!("{e}")))?;
                    if lam.size() != degree {
                        return Err(usage(format!("{lam} is not a partition of {degree}")));
                    }
                    vec![lam]
                }
                None => partitions(degree),
            };
            let set = if degree >= 8 { GeneratingSet::Shapes } else { GeneratingSet::Substitutions };
            let blocks = operad_blocks(degree, &lams, set, &primes, &cache)?;
            let naive = if oracle {
                if degree > NAIVE_BOUND {
                    return Err(freejord_core::Error::Infeasible(format!("the naive quotient stops at degree {NAIVE_BOUND}")).into());
                }
                Some(NaiveQuotient::new(degree)?.module())
            } else {
                None
            };
            let mut t = Table::new(&["n", "lambda", "f_n", "j_n", "d_lambda", "rank", "multiplicity"]);
            if naive.is_some() {
                t.columns.push("oracle".into());
            }
            let mut success = true;
            for (lam, b) in lams.iter().zip(&blocks) {
                let mut row: Vec<Cell> = vec![
                    b.n.into(),
                    b.lambda.as_str().into(),
                    b.f_n.into(),
                    b.j_n.into(),
                    b.d_lambda.into(),
                    b.rank.into(),
                    b.multiplicity.into(),
                ];
                if let Some(m) = &naive {
                    success &= m.get(lam) == b.multiplicity;
                    row.push(m.get(lam).into());
                }
                t.push(row);
            }
            Ok(Outcome { text: t.render(format), success })
        }
        Command::Multidegree { delta } => {
            if delta.is_empty() || delta.iter().all(|&x| x == 0) {
                return Err(usage("give a composition, e.g. --delta 9,1,1"));
            }
            let key = json!({"delta": delta});
            let d: u64 = cache.get_or("multidegree", &key, || multidegree_dim(&delta))?;
            let mut t = Table::new(&["delta", "dim"]);
            t.push(vec![delta.iter().map(ToString::to_string).collect::<Vec<_>>().join(",").into(), d.into()]);
            table(t)
        }
        Command::TwoGen { max_degree } => {
            if max_degree == 0 || max_degree > 60 {
                return Err(usage("degree must be in 1..=60"));
            }
            let km = km_prediction(2, max_degree)?;
            let pa = dims_from_character(&km.a, 2)?;
            let pb = dims_from_character(&km.b, 2)?;
            let mut t = Table::new(&["n", "reversible_dim", "jordan_span_dim", "b_dim", "predicted_a", "predicted_b", "a_match", "b_match"]);
            for n in 1..=max_degree {
                let span = if n <= JORDAN_SPAN_BOUND.min(12) { Some(jordan_span_dim(n)?) } else { None };
                let (rev, b) = (reversible_dim(n), b_dim_two_gen(n));
                let (a_n, b_n) = (pa.get(n), pb.get(n));
                t.push(vec![
                    n.into(),
                    rev.into(),
                    span.into(),
                    b.into(),
                    a_n.into(),
                    b_n.into(),
                    (*a_n == rev.into()).into(),
                    (*b_n == b.into()).into(),
                ]);
            }
            table(t)
        }
        Command::Tag { input, free, parities, homology, sl2, dump } => {
            let j = load_jordan(input, &free, &parities)?;
            tag_report(&j, homology, sl2, dump, format)
        }
        Command::Verify { suite, max_degree } => {
            let report = run_suite(suite, max_degree, &cache);
            let text = match format {
                OutputFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
                f => report.table().render(f),
            };
            Ok(Outcome { text, success: report.all_pass() })
        }
    }
}

fn load_jordan(input: Option<PathBuf>, free: &[usize], parities: &[u8]) -> Result<AlgebraFD> {
    match (input, free) {
        (Some(path), []) => {
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            parse_algebra(&text).map_err(|e| usage(format!("{}: {e:#}", path.display())))
        }
        (None, [g, n]) => {
            let parities = if parities.is_empty() { vec![0; *g] } else { parities.to_vec() };
            Ok(truncated_free_jordan(*g, *n, &parities)?)
        }
        _ => bail!(usage("give --input FILE or --free G,N")),
    }
}

fn tag_report(j: &AlgebraFD, homology: Option<usize>, sl2: bool, dump: Option<PathBuf>, format: OutputFormat) -> Result<Outcome> {
    let t = tag(j)?;
    let inner = b_inner_map(j, &t.b)?;
    if let Some(path) = dump {
        std::fs::write(&path, serde_json::to_string_pretty(&algebra_to_json(&t.algebra))?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let mut table = Table::new(&["quantity", "value"]);
    table.push(vec!["dim J".into(), j.dim().into()]);
    table.push(vec!["dim B(J)".into(), t.b.dim().into()]);
    table.push(vec!["dim Inner(J)".into(), inner.dim_inner.into()]);
    table.push(vec!["dim TAG(J)".into(), t.algebra.dim().into()]);
    if let Some(g) = t.b.graded_dims() {
        let s: Vec<String> = g.iter().map(|(d, k)| format!("{d}:{k}")).collect();
        table.push(vec!["B(J) by degree".into(), s.join(" ").into()]);
    }
    if let Some(k) = homology {
        let h = ce_homology(&t.algebra, k)?;
        let weights = if sl2 { Some(sl2_decompose(&h)?) } else { None };
        for (p, d) in h.dims.iter().enumerate() {
            table.push(vec![format!("H_{p}").into(), (*d).into()]);
            if let Some(w) = &weights {
                let s: Vec<String> = w[p].iter().map(|(hw, m)| if *m == 1 { format!("L({hw})") } else { format!("{m}L({hw})") }).collect();
                table.push(vec![format!("H_{p} as sl2-module").into(), s.join(" + ").into()]);
            }
        }
    }
    Ok(Outcome { text: table.render(format), success: true })
}
