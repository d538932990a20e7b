//! `pba`: Poisson brackets on `Q[x, y, z]` from the command line.
//!
//! Exit status: 0 on success or a true answer, 1 on a false answer or a
//! corpus mismatch, 2 on usage, parse or precondition errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pba_core::cm_exact::{cm_certificate, Certificate};
use pba_core::corpus::{self, CorpusEntry};
use pba_core::parser::{parse, render_rational};
use pba_core::poisson::{bracket, poisson_witness, PoissonTriple, PolyVec};
use pba_core::report::point_strings;
use pba_core::spectrum::{spectrum_report, PencilParameter, PointKind, SpectrumReport};
use pba_core::Error;

#[derive(Parser)]
#[command(name = "pba", version, about = "Poisson brackets on Q[x,y,z]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test F . curl F = 0 for the triple ({y,z}, {z,x}, {x,y}) = (f, g, h).
    CheckJacobi(TripleArgs),
    /// Evaluate {lhs, rhs} for the bracket of (f, g, h).
    Bracket {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Poisson spectrum of the bracket t grad s - s grad t.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Comma-separated pencil parameters, e.g. "1:0,1:-2,0:1".
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
        /// Total-degree bound for the factor search.
        #[arg(long, default_value_t = 2)]
        max_deg: u32,
        #[arg(long)]
        json: bool,
    },
    /// Write the triple as b grad d modulo degree W + 1 near some point.
    Lift {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value_t = 4)]
        search_box: u32,
    },
    /// Regression corpus.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Run every entry and compare with its expectations.
    Run {
        /// Corpus JSON file; the bundled corpus when omitted.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct TripleArgs {
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    #[arg(long, allow_hyphen_values = true)]
    h: String,
}

impl TripleArgs {
    fn parse(&self) -> Result<PolyVec, Error> {
        Ok(PolyVec::new(parse(&self.f)?, parse(&self.g)?, parse(&self.h)?))
    }
}

const FALSE: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::CheckJacobi(args) => {
            let f = args.parse()?;
            match poisson_witness(&f) {
                None => {
                    println!("Poisson triple");
                    Ok(0)
                }
                Some(w) => {
                    println!("not a Poisson triple");
                    println!("witness F.curl F = {w}");
                    Ok(FALSE)
                }
            }
        }
        Command::Bracket { triple, lhs, rhs } => {
            let f = PoissonTriple::unverified(triple.parse()?);
            println!("{}", bracket(&f, &parse(&lhs)?, &parse(&rhs)?));
            Ok(0)
        }
        Command::Spectrum { s, t, params, max_deg, json } => {
            let s = parse(&s)?;
            let t = parse(&t)?;
            let params = params
                .split(',')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .map(str::parse)
                .collect::<Result<Vec<PencilParameter>, _>>()?;
            let report = spectrum_report(&s, &t, &params, max_deg)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print_report(&report);
            }
            Ok(0)
        }
        Command::Lift { triple, weight, search_box } => {
            let vec = triple.parse()?;
            let f = match PoissonTriple::verify(vec.clone()) {
                Ok(f) => f,
                Err(Error::NotPoissonTriple(w)) => {
                    println!("not a Poisson triple");
                    println!("witness F.curl F = {w}");
                    return Ok(FALSE);
                }
                Err(e) => return Err(e),
            };
            match cm_certificate(&f, weight, search_box) {
                Ok(cert) => {
                    print_certificate(&cert, &vec);
                    Ok(if cert.verify(&vec) { 0 } else { FALSE })
                }
                Err(e @ Error::NoPointFound(_)) => {
                    println!("{e}");
                    Ok(FALSE)
                }
                Err(e) => Err(e),
            }
        }
        Command::Corpus(CorpusCommand::Run { file, json }) => {
            let entries: Vec<CorpusEntry> = match file {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
                    corpus::load(&text)?
                }
                None => corpus::bundled(),
            };
            let outcomes = corpus::run_all(&entries);
            if json {
                let doc = serde_json::json!({ "schema": pba_core::report::SCHEMA, "entries": outcomes });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                for o in &outcomes {
                    println!("{} {}", if o.passed { "PASS" } else { "FAIL" }, o.name);
                    for d in &o.diffs {
                        println!("    {d}");
                    }
                }
                let passed = outcomes.iter().filter(|o| o.passed).count();
                println!("{passed}/{} entries passed", outcomes.len());
            }
            Ok(if outcomes.iter().all(|o| o.passed) { 0 } else { FALSE })
        }
    }
}

fn show_point(p: &pba_core::Point) -> String {
    format!("({})", point_strings(p).join(", "))
}

fn print_report(r: &SpectrumReport) {
    let rn = &r.residually_null;
    println!("bracket ({{y,z}}, {{z,x}}, {{x,y}}) = {}", r.triple.vec);
    println!("zero ideal: Poisson prime, not primitive");
    println!("residually null ideal I (grlex basis):");
    for g in rn.ideal.basis() {
        println!("    {g}");
    }
    println!("dim A/I = {}", rn.dimension);
    match rn.dimension {
        -1 => println!("no residually null Poisson primes"),
        0 => {
            println!("Poisson maximal points (all primitive):");
            for c in &rn.points {
                let kind = match &c.kind {
                    PointKind::CommonZero => "common zero of s and t".to_string(),
                    PointKind::SingularPoint(p) => format!("singular point of the member at {p}"),
                    PointKind::NotPoisson => "not Poisson".to_string(),
                };
                println!("    {}  {kind}", show_point(&c.point));
            }
            if !rn.points_complete {
                println!("    irrational points remain, eliminants:");
                for e in &rn.eliminants {
                    let fixed: Vec<String> =
                        e.fixed.iter().map(|(v, c)| format!("{} = {}", v.name(), render_rational(c))).collect();
                    println!("        {} [{}]", e.polynomial, fixed.join(", "));
                }
            }
        }
        _ => {
            println!("Poisson maximal ideals: the points of V(I), not enumerated");
            println!("every prime containing I is Poisson; the non-maximal ones are not primitive");
        }
    }
    println!("generic pencil member: lambda*({}) - mu*({})", r.s, r.t);
    for h in &r.height_one {
        println!("pencil {}: {}", h.parameter, h.member);
        for p in &h.primes {
            println!(
                "    ({})A  multiplicity {}  {}{}",
                p.generator,
                p.multiplicity,
                if p.primitive { "primitive" } else { "not primitive" },
                if p.absolutely_irreducible_certified { "" } else { "  (absolute irreducibility not certified)" }
            );
        }
        for (q, m) in &h.unresolved {
            println!("    unresolved cofactor {q} (multiplicity {m}) at bound {}", r.max_deg);
        }
    }
    println!(
        "flags: factorization_complete={} finitely_many_poisson_maximal={}",
        r.flags.factorization_complete, r.flags.finitely_many_poisson_maximal
    );
}

fn print_certificate(cert: &Certificate, f: &PolyVec) {
    match cert {
        Certificate::Direct { b, d } => {
            println!("direct certificate: (b, d) = ({b}, {d})");
        }
        Certificate::Lift { point, cycles, triple, lift } => {
            println!("point: {}", show_point(point));
            println!("variable cycles: {cycles}");
            println!("triple at the point: {triple}");
            println!("b = {}", lift.b);
            println!("d = {}", lift.d);
            let c = &lift.conventions;
            println!(
                "conventions: d_000 = {}, d_100 = {}, d_(w+1)00 = {} for 1 <= w <= {}",
                render_rational(&c.d_000),
                render_rational(&c.d_100),
                render_rational(&c.d_pure_x),
                lift.weight
            );
        }
    }
    match (cert.verify(f), cert) {
        (true, Certificate::Direct { .. }) => println!("verified: b grad d = F"),
        (true, Certificate::Lift { lift, .. }) => {
            println!("verified: b grad d = F through degree {}", lift.weight)
        }
        (false, _) => println!("verification FAILED"),
    }
}
