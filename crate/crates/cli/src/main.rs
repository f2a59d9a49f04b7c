//! Command-line front end: verification suites, generator actions on the
//! supported modules, basis dumps, and superalgebra products, all over
//! exact rational-function arithmetic.
//!
//! Exit codes: 0 = pass, 1 = verification failure, 2 = usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use queerq::coeff::RatScalar;
use queerq::diffops::{verify_gen_op_matches_closed, verify_opecom, ApolyRep};
use queerq::matidx::{enumerate, SuperMatrix};
use queerq::qpoly::{parse_index, QPolyElement};
use queerq::report::SuiteReport;
use queerq::schur::{build_witness_family, gen_matrix, schur_verify, witness_rank, SchurElement};
use queerq::tensormod::{TensorElement, TensorRep};
use queerq::uword::{parse_symbol, GenKind, Representation};
use queerq::verify::{
    kbar_row_annihilation, relations_on_apoly, relations_on_tensor, specialization_sanity,
    tensor_oracle_equivalence, vmod_generator_dictionary, vmod_triangularity,
    vmod_truncation_equivariance,
};
use queerq::vmod::{VElement, VRep};

#[derive(Parser)]
#[command(
    name = "queerq",
    about = "Exact computations in the quantum queer supergroup and its Schur superalgebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Space {
    Apoly,
    Tensor,
    Vmod,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining relations on a module, basis vector by basis
    /// vector.
    Relcheck {
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Maximum degree of polynomial basis monomials (apoly).
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
        /// Tensor degree (tensor space only).
        #[arg(long)]
        r: Option<u32>,
    },
    /// Check the differential-operator commutation identities.
    Opecom {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
    },
    /// Compare the closed tensor action with the comultiplication oracle.
    Oracle {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: u32,
    },
    /// Series-module verification: truncation equivariance, triangularity
    /// of monomial images, and the generator dictionary.
    VmodVerify {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        maxdeg: u32,
        /// Exponent vectors are sampled from {-jrange..jrange}^n.
        #[arg(long, default_value_t = 1)]
        jrange: i64,
    },
    /// Full invariant suite for the Schur superalgebra at (n, r).
    SchurVerify {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dimension of the Schur superalgebra, computed as the rank of the
    /// witness family.
    SchurDim {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: u32,
    },
    /// Dump the generator matrices as JSON files into a directory.
    SchurGens {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Multiply two basis elements psi_A psi_B; inputs are matrix JSON
    /// files, the output is the expansion of the product over the divided
    /// basis.
    #[command(alias = "schur-mult")]
    Mult {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: u32,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Apply a generator to an element of a module.
    Act {
        /// Generator symbol, e.g. E1, F2^(2), Kb1, K1^-1.
        #[arg(long)]
        gen: String,
        #[arg(long, value_enum)]
        space: Space,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Expected tensor degree; checked against the basis matrix.
        #[arg(long)]
        r: Option<u32>,
        /// Basis matrix JSON (tensor space).
        #[arg(long)]
        basis: Option<PathBuf>,
        /// Element JSON (vmod) or monomial text like "X1^2*Xb1" (apoly).
        #[arg(long)]
        elem: Option<String>,
    },
    /// List the degree-r basis matrices as JSON, one per line.
    DumpBasis {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        r: u32,
        /// Restrict to matrices with zero even diagonal.
        #[arg(long, default_value_t = false)]
        primed: bool,
    },
    /// Apply a generator to a series element (JSON file or "O0" for the
    /// cyclic vector).
    VmodAct {
        #[arg(long)]
        gen: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        elem: String,
    },
    /// Leading term of a series element.
    VmodLead {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        elem: String,
    },
    /// Truncate a series element into the tensor module.
    VmodTruncate {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        elem: String,
        #[arg(long)]
        rmax: u32,
    },
}

fn read_matrix(path: &Path) -> Result<SuperMatrix> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let m: SuperMatrix = serde_json::from_str(&text)
        .with_context(|| format!("parsing matrix from {}", path.display()))?;
    Ok(m)
}

fn read_velement(n: usize, spec: &str) -> Result<VElement> {
    if spec == "O0" {
        return Ok(VElement::cyclic(n));
    }
    let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
    let v: VElement = serde_json::from_str(&text)
        .with_context(|| format!("parsing series element from {spec}"))?;
    if v.n() != n {
        bail!("element rank {} does not match --n {n}", v.n());
    }
    Ok(v)
}

fn finish(suites: Vec<SuiteReport>) -> Result<bool> {
    let mut all = true;
    for s in suites {
        print!("{s}");
        all &= s.passed();
    }
    println!("overall: {}", if all { "PASS" } else { "FAIL" });
    Ok(all)
}

/// Supported parameter ranges; outside them the exact arithmetic still
/// works but run times stop being interactive.
fn check_ranges(n: usize, r: Option<u32>, maxdeg: Option<u32>) -> Result<()> {
    if n == 0 || n > 4 {
        bail!("n must be between 1 and 4");
    }
    if let Some(r) = r {
        if r > 6 {
            bail!("r must be at most 6");
        }
    }
    if let Some(d) = maxdeg {
        if d > 8 {
            bail!("maxdeg must be at most 8");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match &cli.command {
        Command::Relcheck { n, maxdeg, r, .. } => check_ranges(*n, *r, Some(*maxdeg))?,
        Command::Opecom { n, maxdeg } => check_ranges(*n, None, Some(*maxdeg))?,
        Command::Oracle { n, r } | Command::SchurDim { n, r } => check_ranges(*n, Some(*r), None)?,
        Command::VmodVerify { n, maxdeg, .. } => check_ranges(*n, None, Some(*maxdeg))?,
        Command::SchurVerify { n, r, .. }
        | Command::SchurGens { n, r, .. }
        | Command::Mult { n, r, .. }
        | Command::DumpBasis { n, r, .. } => check_ranges(*n, Some(*r), None)?,
        Command::Act { n, r, .. } => check_ranges(*n, *r, None)?,
        Command::VmodAct { n, .. } | Command::VmodLead { n, .. } => check_ranges(*n, None, None)?,
        Command::VmodTruncate { n, rmax, .. } => check_ranges(*n, Some(*rmax), None)?,
    }
    match cli.command {
        Command::Relcheck {
            space,
            n,
            maxdeg,
            r,
        } => match space {
            Space::Apoly => finish(vec![relations_on_apoly(n, maxdeg)]),
            Space::Tensor => {
                let r = r.ok_or_else(|| anyhow!("--r is required for the tensor space"))?;
                finish(vec![relations_on_tensor(n, r)])
            }
            Space::Vmod => bail!("relations are checked on apoly or tensor"),
        },
        Command::Opecom { n, maxdeg } => finish(vec![
            verify_opecom(n, maxdeg),
            verify_gen_op_matches_closed(n, maxdeg),
        ]),
        Command::Oracle { n, r } => finish(vec![tensor_oracle_equivalence(n, r)]),
        Command::VmodVerify { n, maxdeg, jrange } => finish(vec![
            vmod_truncation_equivariance(n, maxdeg, jrange, maxdeg + 2),
            vmod_triangularity(n, maxdeg),
            vmod_generator_dictionary(n),
        ]),
        Command::SchurVerify { n, r, seed } => finish(vec![
            schur_verify(n, r, seed),
            kbar_row_annihilation(n, r),
            specialization_sanity(n, r),
        ]),
        Command::SchurDim { n, r } => {
            let fam =
                build_witness_family(n, r).map_err(|e| anyhow!("witness family failed: {e}"))?;
            let rank = witness_rank(&fam);
            println!("{rank}");
            Ok(rank == enumerate(n, r, false).len())
        }
        Command::SchurGens { n, r, out } => {
            std::fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            let mut gens: Vec<(String, GenKind, usize)> =
                (1..=n).map(|i| (format!("k{i}"), GenKind::K, i)).collect();
            for h in 1..n {
                gens.push((format!("e{h}"), GenKind::E, h));
                gens.push((format!("f{h}"), GenKind::F, h));
            }
            gens.push(("kb1".into(), GenKind::KBar, 1));
            for (name, kind, index) in gens {
                let m = gen_matrix(kind, index, n, r);
                let json = serde_json::json!({
                    "n": n,
                    "r": r,
                    "generator": name,
                    "basis": m.basis,
                    "columns": m.cols.iter().map(|col| {
                        col.iter().map(|(row, c)| {
                            serde_json::json!({"row": row, "coeff": c.to_string()})
                        }).collect::<Vec<_>>()
                    }).collect::<Vec<_>>(),
                });
                let path = out.join(format!("{name}.json"));
                std::fs::write(&path, serde_json::to_string_pretty(&json)?)
                    .with_context(|| format!("writing {}", path.display()))?;
                println!("wrote {}", path.display());
            }
            Ok(true)
        }
        Command::Mult { n, r, a, b } => {
            let fam =
                build_witness_family(n, r).map_err(|e| anyhow!("witness family failed: {e}"))?;
            let ma = read_matrix(&a)?;
            let mb = read_matrix(&b)?;
            let pa = SchurElement::psi(&fam, &ma).map_err(|e| anyhow!("{e}"))?;
            let pb = SchurElement::psi(&fam, &mb).map_err(|e| anyhow!("{e}"))?;
            let prod = pa.multiply(&pb).map_err(|e| anyhow!("{e}"))?;
            println!("{}", serde_json::to_string_pretty(&prod.canonical)?);
            Ok(true)
        }
        Command::Act {
            gen,
            space,
            n,
            r,
            basis,
            elem,
        } => {
            let g = parse_symbol(&gen).map_err(|e| anyhow!("{e}"))?;
            match space {
                Space::Tensor => {
                    let path = basis
                        .ok_or_else(|| anyhow!("--basis FILE is required for the tensor space"))?;
                    let a = read_matrix(&path)?;
                    if a.n() != n {
                        bail!("matrix rank {} does not match --n {n}", a.n());
                    }
                    if let Some(r) = r {
                        if a.degree() != r {
                            bail!("matrix degree {} does not match --r {r}", a.degree());
                        }
                    }
                    let rep = TensorRep { n };
                    let x = TensorElement::basis(a, RatScalar::one());
                    let y = rep.apply_symbol(&g, &x);
                    println!("{}", serde_json::to_string_pretty(&y)?);
                }
                Space::Vmod => {
                    let spec = elem.ok_or_else(|| anyhow!("--elem is required for vmod"))?;
                    let x = read_velement(n, &spec)?;
                    let rep = VRep { n };
                    let y = rep.apply_symbol(&g, &x);
                    println!("{}", serde_json::to_string_pretty(&y)?);
                    eprintln!("{y}");
                }
                Space::Apoly => {
                    let spec = elem.ok_or_else(|| anyhow!("--elem is required for apoly"))?;
                    let idx = parse_index(n, &spec).map_err(|e| anyhow!("{e}"))?;
                    let rep = ApolyRep { n };
                    let x = QPolyElement::monomial(idx, RatScalar::one());
                    let y = rep.apply_symbol(&g, &x);
                    println!("{y}");
                }
            }
            Ok(true)
        }
        Command::DumpBasis { n, r, primed } => {
            for a in enumerate(n, r, primed) {
                println!("{}", serde_json::to_string(&a)?);
            }
            Ok(true)
        }
        Command::VmodAct { gen, n, elem } => {
            let g = parse_symbol(&gen).map_err(|e| anyhow!("{e}"))?;
            let x = read_velement(n, &elem)?;
            let rep = VRep { n };
            let y = rep.apply_symbol(&g, &x);
            println!("{}", serde_json::to_string_pretty(&y)?);
            eprintln!("{y}");
            Ok(true)
        }
        Command::VmodLead { n, elem } => {
            let x = read_velement(n, &elem)?;
            let (a, j, c) = x.leading_term().map_err(|e| anyhow!("{e}"))?;
            println!(
                "{}",
                serde_json::json!({
                    "matrix": a,
                    "j": j,
                    "coeff": c.to_string(),
                })
            );
            Ok(true)
        }
        Command::VmodTruncate { n, elem, rmax } => {
            let x = read_velement(n, &elem)?;
            let t = x.truncate(rmax);
            println!("{}", serde_json::to_string_pretty(&t)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
