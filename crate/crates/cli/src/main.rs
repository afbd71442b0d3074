//! `schub`: command-line access to every library operation.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 failed verification, 2 input error, 3 internal inconsistency.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schubert::cauchy::{
    insert, insert_support_bound, inverse_insert, verify_cauchy, verify_duality, BoundedBiword,
    InsertionResult,
};
use schubert::chains::{
    dual_schubert, dual_schubert_labeled, enumerate_chains, enumerate_labeled_chains,
    increasing_chains, verify_chain_symmetry, verify_increasing, verify_label_permutation,
    TotalOrder,
};
use schubert::schubert::{
    lr_coefficient, monk_expand, monk_match, monk_support_bound, schubert, schubert_oracle,
};
use schubert::{Error, Permutation};

#[derive(Parser)]
#[command(
    name = "schub",
    version,
    about = "Exact Schubert calculus: Schubert and dual Schubert polynomials, \
             Bruhat chains, Monk expansion, insertion, and identity verification"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
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
    /// Inspect a permutation: window, length, reduced words; with --perm2,
    /// also the composition perm ∘ perm2
    Perm {
        /// One-line window, e.g. 3,1,2
        #[arg(long)]
        perm: String,
        #[arg(long)]
        perm2: Option<String>,
    },
    /// Schubert polynomial (BJS formula; --oracle for the divided-difference route)
    Schubert {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Dual Schubert polynomial D_{u,w} (u defaults to the identity)
    Dual {
        /// The upper permutation w
        #[arg(long)]
        perm: String,
        /// The lower permutation u
        #[arg(long)]
        perm2: Option<String>,
        #[arg(long)]
        support: Option<usize>,
        /// Use the labeled-chain formula instead of the chain-weight sum
        #[arg(long)]
        labeled: bool,
        /// Project onto the first n variables before printing
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Enumerate chains from u to w: all chains, chains with given labels,
    /// or order-increasing labeled chains
    Chains {
        /// The upper permutation w
        #[arg(long)]
        perm: String,
        /// The lower permutation u (defaults to the identity)
        #[arg(long)]
        perm2: Option<String>,
        /// Fixed label vector, e.g. 1,2
        #[arg(long, conflicts_with = "order")]
        labels: Option<String>,
        /// Order prefix for increasing chains, e.g. 2,1 (empty = usual order)
        #[arg(long, num_args = 0..=1, default_missing_value = "")]
        order: Option<String>,
        #[arg(long)]
        support: Option<usize>,
    },
    /// Monk expansion of S_{s_k} · S_v; --certificate adds the bijection
    Monk {
        #[arg(long)]
        k: usize,
        /// The permutation v
        #[arg(long)]
        perm: String,
        #[arg(long)]
        support: Option<usize>,
        #[arg(long)]
        certificate: bool,
    },
    /// Insert a bounded biword (or invert an insertion result from stdin)
    Insert {
        /// Top row i_1,...,i_n
        #[arg(long, requires = "labels", conflicts_with = "inverse")]
        top: Option<String>,
        /// Label row d_1,...,d_n
        #[arg(long, requires = "top")]
        labels: Option<String>,
        #[arg(long)]
        support: Option<usize>,
        /// Read an insertion-result JSON object from stdin and recover the biword
        #[arg(long)]
        inverse: bool,
    },
    /// Littlewood-Richardson coefficient c^w_{u,v}
    Lr {
        /// u
        #[arg(long)]
        perm: String,
        /// v
        #[arg(long)]
        perm2: String,
        /// w
        #[arg(long)]
        perm3: String,
    },
    /// Run an identity verification; exits 1 when the check fails
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// ⟨S_u, D_w⟩ = δ_uw over all of S_n
    Duality {
        #[arg(long)]
        n: usize,
    },
    /// Degree-p component of the Cauchy kernel in m variables
    Cauchy {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: usize,
    },
    /// Labeled chain-count identity |C_d(u,w)| = Σ_v c^w_uv |C_d(1,v)|
    ChainSymmetry {
        /// u
        #[arg(long)]
        perm: String,
        /// w
        #[arg(long)]
        perm3: String,
        #[arg(long)]
        labels: String,
        #[arg(long)]
        support: Option<usize>,
    },
    /// |C_d(u,w)| is invariant under permuting d
    LabelPermutation {
        /// u
        #[arg(long)]
        perm: String,
        /// w
        #[arg(long)]
        perm3: String,
        #[arg(long)]
        labels: String,
        #[arg(long)]
        support: Option<usize>,
    },
    /// Increasing-chain identities for a total order (prefix list; empty = usual)
    Increasing {
        /// u
        #[arg(long)]
        perm: String,
        /// w
        #[arg(long)]
        perm3: String,
        #[arg(long, num_args = 0..=1, default_missing_value = "")]
        order: Option<String>,
        #[arg(long)]
        support: Option<usize>,
    },
}

/// One command's result: text rendering, JSON body, and the verification
/// outcome when the command is a verify.
struct Output {
    text: String,
    json: Value,
    pass: Option<bool>,
}

impl Output {
    fn plain(text: String, json: Value) -> Self {
        Output { text, json, pass: None }
    }
}

fn parse_perm(s: &str) -> Result<Permutation, Error> {
    s.parse()
}

fn parse_list(s: &str) -> Result<Vec<usize>, Error> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad list entry {part:?}")))
        })
        .collect()
}

fn parse_order(s: Option<&str>) -> Result<TotalOrder, Error> {
    match s {
        None => Ok(TotalOrder::natural()),
        Some(s) => TotalOrder::with_prefix(parse_list(s)?),
    }
}

fn biword_text(top: &[usize], bottom: &[usize]) -> String {
    if top.is_empty() {
        return "-".to_string();
    }
    let t: Vec<String> = top.iter().map(|v| v.to_string()).collect();
    let b: Vec<String> = bottom.iter().map(|v| v.to_string()).collect();
    format!("{};{}", t.join(","), b.join(","))
}

fn interval_support(u: &Permutation, w: &Permutation, requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| u.support().max(w.support()).max(1))
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report serialization")
}

fn run(cli: Cli) -> Result<Output, Error> {
    match cli.command {
        Command::Perm { perm, perm2 } => {
            let p = parse_perm(&perm)?;
            let words = p.reduced_words();
            let mut text = format!("window: {p}\nlength: {}\n", p.length());
            for word in &words {
                let w: Vec<String> = word.iter().map(|a| a.to_string()).collect();
                text.push_str(&format!("reduced_word: {}\n", w.join(",")));
            }
            let mut body = json!({
                "window": to_json(&p),
                "length": p.length(),
                "reduced_words": words,
            });
            if let Some(q) = perm2 {
                let q = parse_perm(&q)?;
                let composed = p.compose(&q);
                text.push_str(&format!("compose: {composed}\n"));
                body["compose"] = to_json(&composed);
            }
            Ok(Output::plain(text, body))
        }
        Command::Schubert { perm, oracle } => {
            let w = parse_perm(&perm)?;
            let poly = if oracle { schubert_oracle(&w) } else { schubert(&w) };
            Ok(Output::plain(
                format!("{poly}\n"),
                json!({ "polynomial": poly.to_string() }),
            ))
        }
        Command::Dual { perm, perm2, support, labeled, nvars } => {
            let w = parse_perm(&perm)?;
            let u = perm2.as_deref().map(parse_perm).transpose()?.unwrap_or_default_identity();
            let n = interval_support(&u, &w, support);
            let mut poly = if labeled {
                dual_schubert_labeled(&u, &w, n)?
            } else {
                dual_schubert(&u, &w, n)?
            };
            if let Some(m) = nvars {
                poly = poly.project(m);
            }
            Ok(Output::plain(
                format!("{poly}\n"),
                json!({ "polynomial": poly.to_string(), "support": n }),
            ))
        }
        Command::Chains { perm, perm2, labels, order, support } => {
            let w = parse_perm(&perm)?;
            let u = perm2.as_deref().map(parse_perm).transpose()?.unwrap_or_default_identity();
            let n = interval_support(&u, &w, support);
            if let Some(labels) = labels {
                let d = parse_list(&labels)?;
                let chains = enumerate_labeled_chains(&u, &w, &d, n)?;
                let text = labeled_chains_text(&chains);
                return Ok(Output::plain(
                    text,
                    json!({ "chains": chains, "count": chains_len(&chains), "support": n }),
                ));
            }
            if let Some(order) = order {
                let o = parse_order(Some(&order))?;
                let chains = increasing_chains(&u, &w, &o, n)?;
                let text = labeled_chains_text(&chains);
                return Ok(Output::plain(
                    text,
                    json!({ "chains": chains, "count": chains_len(&chains), "support": n }),
                ));
            }
            let chains = enumerate_chains(&u, &w, n)?;
            let mut text = String::new();
            for c in &chains {
                let mut line = c.start().to_string();
                for e in c.edges() {
                    line.push_str(&format!(" -> {}", e.target()));
                }
                text.push_str(&line);
                text.push('\n');
            }
            Ok(Output::plain(
                text,
                json!({ "chains": chains, "count": chains.len(), "support": n }),
            ))
        }
        Command::Monk { k, perm, support, certificate } => {
            let v = parse_perm(&perm)?;
            let n = support.unwrap_or_else(|| monk_support_bound(&v, k));
            let targets = monk_expand(k, &v, n)?;
            let mut text = String::new();
            for t in &targets {
                text.push_str(&format!("{t}\n"));
            }
            let mut body = json!({ "targets": targets, "support": n });
            if certificate {
                let cert = monk_match(k, &v, n)?;
                for p in &cert.pairs {
                    text.push_str(&format!(
                        "j={} from={} target={} to={}\n",
                        p.j,
                        biword_text(p.from.top(), p.from.bottom()),
                        p.target,
                        biword_text(p.to.top(), p.to.bottom()),
                    ));
                }
                body["certificate"] = to_json(&cert);
            }
            Ok(Output::plain(text, body))
        }
        Command::Insert { top, labels, support, inverse } => {
            if inverse {
                let mut input = String::new();
                std::io::stdin()
                    .read_to_string(&mut input)
                    .map_err(|e| Error::Input(format!("reading stdin: {e}")))?;
                // accept the bare insertion object or this tool's own envelope
                let mut value: Value = serde_json::from_str(&input)
                    .map_err(|e| Error::Parse(format!("insertion result JSON: {e}")))?;
                if let Some(inner) = value.get_mut("insertion") {
                    value = inner.take();
                }
                let result: InsertionResult = serde_json::from_value(value)
                    .map_err(|e| Error::Parse(format!("insertion result JSON: {e}")))?;
                let n = support.unwrap_or_else(|| {
                    result.target().support().max(chain_max_label(&result)) + 1
                });
                let b = inverse_insert(&result, n)?;
                return Ok(Output::plain(
                    format!("{}\n", biword_text(b.top(), b.labels())),
                    json!({ "biword": b, "support": n }),
                ));
            }
            let top = top.as_deref().map(parse_list).transpose()?.unwrap_or_default();
            let labels = labels.as_deref().map(parse_list).transpose()?.unwrap_or_default();
            let b = BoundedBiword::new(top, labels)?;
            let n = support.unwrap_or_else(|| insert_support_bound(&b));
            let r = insert(&b, n)?;
            let mut text = format!(
                "target: {}\nrecord: {}\n",
                r.target(),
                biword_text(r.record().top(), r.record().bottom())
            );
            let steps: Vec<String> = r
                .chain()
                .steps()
                .iter()
                .map(|s| {
                    format!(
                        "{}:({},{})",
                        s.label(),
                        s.edge().transposition().a,
                        s.edge().transposition().b
                    )
                })
                .collect();
            text.push_str(&format!("chain: {}\n", steps.join(" ")));
            Ok(Output::plain(text, json!({ "insertion": r, "support": n })))
        }
        Command::Lr { perm, perm2, perm3 } => {
            let u = parse_perm(&perm)?;
            let v = parse_perm(&perm2)?;
            let w = parse_perm(&perm3)?;
            let c = lr_coefficient(&u, &v, &w)?;
            Ok(Output::plain(format!("{c}\n"), json!({ "coefficient": c })))
        }
        Command::Verify { check } => run_verify(check),
    }
}

fn run_verify(check: VerifyCommand) -> Result<Output, Error> {
    match check {
        VerifyCommand::Duality { n } => {
            let report = verify_duality(n)?;
            let text = format!(
                "{}\nn: {}\npairs: {}\nfailures: {}\n",
                pass_line(report.pass),
                report.n,
                report.pairs,
                report.failures.len()
            );
            Ok(Output { text, json: to_json(&report), pass: Some(report.pass) })
        }
        VerifyCommand::Cauchy { m, p } => {
            let report = verify_cauchy(m, p)?;
            let text = format!(
                "{}\nm: {}\np: {}\nsupport: {}\nlhs: {}\nrhs: {}\n",
                pass_line(report.pass),
                report.m,
                report.p,
                report.support,
                report.lhs,
                report.rhs
            );
            Ok(Output { text, json: to_json(&report), pass: Some(report.pass) })
        }
        VerifyCommand::ChainSymmetry { perm, perm3, labels, support } => {
            let u = parse_perm(&perm)?;
            let w = parse_perm(&perm3)?;
            let d = parse_list(&labels)?;
            let n = interval_support(&u, &w, support);
            let report = verify_chain_symmetry(&u, &w, &d, n)?;
            let text = format!(
                "{}\nlhs: {}\nrhs: {}\nall_labelings: {} = {}\n",
                pass_line(report.pass),
                report.lhs,
                report.rhs,
                report.all_labelings_lhs,
                report.all_labelings_rhs
            );
            Ok(Output { text, json: to_json(&report), pass: Some(report.pass) })
        }
        VerifyCommand::LabelPermutation { perm, perm3, labels, support } => {
            let u = parse_perm(&perm)?;
            let w = parse_perm(&perm3)?;
            let d = parse_list(&labels)?;
            let n = interval_support(&u, &w, support);
            let report = verify_label_permutation(&u, &w, &d, n)?;
            let mut text = pass_line(report.pass).to_string();
            text.push('\n');
            for c in &report.counts {
                let labels: Vec<String> = c.labels.iter().map(|v| v.to_string()).collect();
                text.push_str(&format!("d=({}) chains={}\n", labels.join(","), c.chains));
            }
            Ok(Output { text, json: to_json(&report), pass: Some(report.pass) })
        }
        VerifyCommand::Increasing { perm, perm3, order, support } => {
            let u = parse_perm(&perm)?;
            let w = parse_perm(&perm3)?;
            let o = parse_order(order.as_deref())?;
            let n = interval_support(&u, &w, support);
            let report = verify_increasing(&u, &w, &o, n)?;
            let text = format!(
                "{}\ndual: {}\nchain_sum: {}\nlr_sum: {}\nbar_dual: {}\nbar_lr_sum: {}\n",
                pass_line(report.pass),
                report.dual,
                report.chain_sum,
                report.lr_sum,
                report.bar_dual,
                report.bar_lr_sum
            );
            Ok(Output { text, json: to_json(&report), pass: Some(report.pass) })
        }
    }
}

fn pass_line(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn labeled_chains_text(chains: &[schubert::chains::LabeledChain]) -> String {
    let mut text = String::new();
    for c in chains {
        let mut line = c.start().to_string();
        for s in c.steps() {
            line.push_str(&format!(" ->({}) {}", s.label(), s.edge().target()));
        }
        text.push_str(&line);
        text.push('\n');
    }
    text
}

fn chains_len(chains: &[schubert::chains::LabeledChain]) -> usize {
    chains.len()
}

fn chain_max_label(r: &InsertionResult) -> usize {
    r.chain().labels().into_iter().max().unwrap_or(0)
}

/// `Option<Result<Permutation>>` helpers read better at call sites.
trait OrIdentity {
    fn unwrap_or_default_identity(self) -> Permutation;
}

impl OrIdentity for Option<Permutation> {
    fn unwrap_or_default_identity(self) -> Permutation {
        self.unwrap_or_else(Permutation::identity)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(output) => {
            match format {
                Format::Text => print!("{}", output.text),
                Format::Json => {
                    let mut value = output.json;
                    if let Value::Object(map) = &mut value {
                        map.insert("schema".to_string(), json!(1));
                    }
                    println!("{value}");
                }
            }
            match output.pass {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
