mod parse;
mod tables;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use serde_json::json;

use shimura::hodgealg::{period_domain_membership, FilteredSpace, HodgeStructure};
use shimura::modcurve::{
    gamma_n_index, gl2_component_count, in_gamma_n, is_level_structure, weil_pairing, IntMatrix2, TorsionPoint,
};
use shimura::rootsys::{weights_of_irrep, RootSystem, RootSystemType};
use shimura::symclass::{hodge_type_decision, SpecialPair};

use parse::{parse_factor, parse_hodge, parse_labels, parse_type_token, UsageError};

#[derive(Parser)]
#[command(name = "shimura", version, about = "Root data, symplectic nodes and Hodge structures for Shimura varieties")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Cartan matrix, positive roots and highest root.
    Roots { r#type: String },
    /// Fundamental weights, or the weights of an irreducible representation.
    Weights {
        r#type: String,
        /// Dynkin labels of a dominant highest weight, e.g. `1,0,1`.
        #[arg(long)]
        irrep: Option<String>,
    },
    /// Nodes with coefficient 1 in the highest root.
    SpecialNodes { r#type: String },
    /// The opposition involution `−w₀` on the nodes.
    Opposition { r#type: String },
    /// Fundamental weights giving symplectic representations for a special node.
    Symplectic {
        r#type: String,
        #[arg(long)]
        node: usize,
    },
    /// Decide whether a product of almost-simple factors is of Hodge type.
    HodgeType {
        /// `TYPE:FLAVORS[:ISOGENY]`, e.g. `D5:nc1,c:sc`; repeat for products.
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
    },
    /// Operations on Hodge numbers.
    Hodge {
        #[command(subcommand)]
        op: HodgeOp,
    },
    /// Check a filtered space (JSON file) against the period domain.
    PeriodCheck { file: PathBuf },
    /// Congruence subgroups and level structures on elliptic curves.
    Modcurve {
        #[command(subcommand)]
        op: ModOp,
    },
    /// Recompute the special-node (2) or symplectic-weight (10) table.
    Tables {
        #[arg(long)]
        section: u8,
    },
}

#[derive(Subcommand)]
enum HodgeOp {
    /// Hodge numbers with weight, level and SV1.
    Show {
        #[arg(allow_hyphen_values = true)]
        hs: String,
    },
    Dual {
        #[arg(allow_hyphen_values = true)]
        hs: String,
    },
    Tensor {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Sum {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// The Tate structure `Q(m)`.
    Tate {
        #[arg(allow_hyphen_values = true)]
        m: i32,
    },
    /// Dimensions of the Hodge filtration on each weight.
    Filtration {
        #[arg(allow_hyphen_values = true)]
        hs: String,
    },
}

#[derive(Subcommand)]
enum ModOp {
    /// `[SL_2(Z) : Γ(N)]`
    Index { level: u64 },
    /// Connected components at full level `N`.
    Components { level: u64 },
    /// Weil pairing exponent of `(x1, y1)` and `(x2, y2)` in `(Z/N)²`.
    Pairing {
        level: u64,
        #[arg(allow_hyphen_values = true, num_args = 4)]
        coords: Vec<i64>,
    },
    /// Whether `[[a, b], [c, d]]` lies in `Γ(N)`.
    InGamma {
        level: u64,
        #[arg(allow_hyphen_values = true, num_args = 4)]
        entries: Vec<i64>,
    },
}

enum Failure {
    Usage(UsageError),
    Domain(anyhow::Error),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(e)
    }
}

fn domain<E: std::error::Error + Send + Sync + 'static>(e: E) -> Failure {
    Failure::Domain(e.into())
}

fn load_type(token: &str) -> Result<RootSystem, Failure> {
    let ty: RootSystemType = parse_type_token(token)?.map_err(domain)?;
    if let Some(w) = ty.alias_warning() {
        eprintln!("warning: {w}");
    }
    Ok(RootSystem::build(ty))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn hodge_value(h: &HodgeStructure) -> serde_json::Value {
    let mut v = serde_json::to_value(h).expect("serializable");
    v["dim"] = json!(h.dim());
    v["level"] = json!(h.level().ok());
    v["sv1"] = json!(h.sv1_check());
    v["weil_square_sign"] = json!(h.weil_square_sign());
    v
}

fn print_hodge(h: &HodgeStructure, as_json: bool) {
    if as_json {
        print_json(&hodge_value(h));
        return;
    }
    println!("{h}");
    println!("dimension: {}", h.dim());
    let weights: Vec<String> = h.weight_dims().iter().map(|(m, d)| format!("{m} (dim {d})")).collect();
    println!("weights: {}", if weights.is_empty() { "none".into() } else { weights.join(", ") });
    match h.level() {
        Ok(l) => println!("level: {l}"),
        Err(_) => println!("level: undefined"),
    }
    println!("SV1: {}", if h.sv1_check() { "yes" } else { "no" });
}

fn run(cli: Cli) -> Result<(), Failure> {
    let as_json = cli.json;
    match cli.verb {
        Verb::Roots { r#type } => {
            let rs = load_type(&r#type)?;
            if as_json {
                let mut v = serde_json::to_value(&rs).expect("serializable");
                v["positive_roots"] = json!(rs.positive_roots().iter().map(|r| r.to_strings()).collect::<Vec<_>>());
                print_json(&v);
            } else {
                println!("{} (rank {})", rs.root_type(), rs.rank());
                println!("cartan matrix:");
                for row in rs.cartan() {
                    println!("  {}", row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "));
                }
                println!("positive roots ({}):", rs.positive_roots().len());
                for r in rs.positive_roots() {
                    println!("  {r}");
                }
                println!("highest root: {}", rs.highest_root());
            }
        }
        Verb::Weights { r#type, irrep } => {
            let rs = load_type(&r#type)?;
            match irrep {
                None => {
                    let ws = rs.fundamental_weights();
                    if as_json {
                        print_json(&json!({ "fundamental_weights": ws.iter().map(|w| w.to_strings()).collect::<Vec<_>>() }));
                    } else {
                        for (k, w) in ws.iter().enumerate() {
                            println!("ϖ{} = {w}", k + 1);
                        }
                    }
                }
                Some(labels) => {
                    let labels = parse_labels(&labels, rs.rank())?;
                    let top = rs.from_dynkin_labels(&labels).map_err(domain)?;
                    let ws = weights_of_irrep(&rs, &top).map_err(domain)?;
                    let dim: u64 = ws.iter().map(|w| w.multiplicity).sum();
                    if as_json {
                        let entries: Vec<_> = ws
                            .iter()
                            .map(|w| json!({ "weight": w.weight.to_strings(), "multiplicity": w.multiplicity }))
                            .collect();
                        print_json(&json!({ "dimension": dim, "weights": entries }));
                    } else {
                        println!("dimension {dim}, {} distinct weights", ws.len());
                        for w in &ws {
                            println!("  {} x{}", w.weight, w.multiplicity);
                        }
                    }
                }
            }
        }
        Verb::SpecialNodes { r#type } => {
            let rs = load_type(&r#type)?;
            let nodes = rs.special_nodes();
            if as_json {
                print_json(&json!({ "special_nodes": nodes, "connection_index": rs.connection_index() }));
            } else {
                let list: Vec<String> = nodes.iter().map(ToString::to_string).collect();
                println!("special nodes: {}", if list.is_empty() { "none".into() } else { list.join(" ") });
                println!("connection index: {}", rs.connection_index());
            }
        }
        Verb::Opposition { r#type } => {
            let rs = load_type(&r#type)?;
            let tau = rs.opposition_involution();
            if as_json {
                print_json(&json!({ "images": tau.images() }));
            } else {
                println!("{tau}");
            }
        }
        Verb::Symplectic { r#type, node } => {
            let rs = load_type(&r#type)?;
            let ty = rs.root_type();
            let verdict = SpecialPair::new(rs, node).map_err(domain)?.symplectic_nodes();
            if as_json {
                print_json(&serde_json::to_value(&verdict).expect("serializable"));
            } else {
                let ws: Vec<String> = verdict.nodes.iter().map(|i| format!("ϖ{i}")).collect();
                println!("{ty}, s={node}: {}", if ws.is_empty() { "no symplectic weights".into() } else { ws.join(" ") });
                println!(
                    "faithful: {} (index {} in P/Q)",
                    if verdict.faithful { "yes" } else { "no" },
                    verdict.kernel_index
                );
            }
        }
        Verb::HodgeType { factors } => {
            let parsed = factors.iter().map(|f| parse_factor(f)).collect::<Result<Vec<_>, _>>()?;
            let inputs = parsed.into_iter().collect::<Result<Vec<_>, _>>().map_err(domain)?;
            let verdict = hodge_type_decision(&inputs);
            if as_json {
                print_json(&serde_json::to_value(&verdict).expect("serializable"));
            } else {
                println!("{verdict:?}");
            }
        }
        Verb::Hodge { op } => match op {
            HodgeOp::Show { hs } => print_hodge(&parse_hodge(&hs)?.map_err(domain)?, as_json),
            HodgeOp::Dual { hs } => print_hodge(&parse_hodge(&hs)?.map_err(domain)?.dual(), as_json),
            HodgeOp::Tensor { a, b } => {
                let (a, b) = (parse_hodge(&a)?.map_err(domain)?, parse_hodge(&b)?.map_err(domain)?);
                print_hodge(&a.tensor(&b), as_json);
            }
            HodgeOp::Sum { a, b } => {
                let (a, b) = (parse_hodge(&a)?.map_err(domain)?, parse_hodge(&b)?.map_err(domain)?);
                print_hodge(&a.direct_sum(&b), as_json);
            }
            HodgeOp::Tate { m } => print_hodge(&HodgeStructure::tate(m), as_json),
            HodgeOp::Filtration { hs } => {
                let h = parse_hodge(&hs)?.map_err(domain)?;
                let fp = h.to_filtration();
                let mut rows = Vec::new();
                for (&m, wf) in fp.weights() {
                    let ps: Vec<i32> = h.support().filter(|(p, q)| p + q == m).map(|(p, _)| p).collect();
                    let (lo, hi) = (ps.iter().min().unwrap() - 1, ps.iter().max().unwrap() + 1);
                    rows.push((m, wf.dim(), (lo..=hi).map(|p| (p, wf.dim_f(p))).collect::<Vec<_>>()));
                }
                if as_json {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(m, d, fs)| {
                            json!({ "weight": m, "dim": d, "filtration": fs.iter().map(|(p, f)| json!({"p": p, "dim": f})).collect::<Vec<_>>() })
                        })
                        .collect();
                    print_json(&json!({ "weights": v }));
                } else {
                    for (m, d, fs) in rows {
                        let steps: Vec<String> = fs.iter().map(|(p, f)| format!("F^{p}: {f}")).collect();
                        println!("weight {m} (dim {d}): {}", steps.join(", "));
                    }
                }
            }
        },
        Verb::PeriodCheck { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let space: FilteredSpace =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", file.display()))?;
            let verdict = period_domain_membership(&space);
            if as_json {
                print_json(&json!({ "verdict": verdict }));
            } else {
                println!("{verdict:?}");
            }
        }
        Verb::Modcurve { op } => {
            let value = match op {
                ModOp::Index { level } => json!({ "level": level, "index": gamma_n_index(level).map_err(domain)? }),
                ModOp::Components { level } => {
                    json!({ "level": level, "components": gl2_component_count(level).map_err(domain)? })
                }
                ModOp::Pairing { level, coords } => {
                    if level == 0 {
                        return Err(anyhow!("level must be positive").into());
                    }
                    let p = TorsionPoint::new(coords[0], coords[1], level);
                    let q = TorsionPoint::new(coords[2], coords[3], level);
                    json!({
                        "level": level,
                        "pairing": weil_pairing(&p, &q).map_err(domain)?,
                        "level_structure": is_level_structure(&p, &q).map_err(domain)?,
                    })
                }
                ModOp::InGamma { level, entries } => {
                    let g = IntMatrix2::new(entries[0], entries[1], entries[2], entries[3]);
                    json!({ "level": level, "in_gamma": in_gamma_n(&g, level).map_err(domain)? })
                }
            };
            if as_json {
                print_json(&value);
            } else {
                let obj = value.as_object().expect("object");
                let parts: Vec<String> = obj.iter().map(|(k, v)| format!("{k}: {v}")).collect();
                println!("{}", parts.join(", "));
            }
        }
        Verb::Tables { section } => match tables::emit_tables(section) {
            Some(text) => print!("{text}"),
            None => {
                return Err(UsageError::new("--section", format!("unknown section {section} (expected 2 or 10)")).into())
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => Cli::command().error(ErrorKind::ValueValidation, e.to_string()).exit(),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

