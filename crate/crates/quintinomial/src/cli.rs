//! Command-line surface: single-pair classification, grid search, family
//! walks, squarefree-density reports, Pell tables, and the verification
//! suite.
//!
//! Conventions shared by every subcommand:
//! * the seed and factoring budget are echoed into the output header, so a
//!   report is reproducible from its own first line;
//! * `--json` swaps the text rendering for serde output — one JSON object,
//!   except `search`/`family` which stream one record per line after a
//!   header object;
//! * exit codes: 0 success, 1 usage or math error, 2 a verdict was left
//!   `Undecided` by the factoring budget.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::dedekind::{is_monogenic, MonogenicStatus, MonogenicityVerdict};
use crate::density::{density_report, DensityReport, FactoredPoly};
use crate::error::Error;
use crate::galois::{
    frobenius_fingerprint, octic_wreath, quartic_galois, FrobeniusReport, GaloisClass,
    GaloisLabel,
};
use crate::lucas::{ab_from_pell, lucas, pell_solution};
use crate::poly::{discriminant, IntPoly};
use crate::quin::{
    build, disc_formula, irreducible, Irreducibility, QuinInvariants, QuinParams,
    MAX_IRREDUCIBILITY_N,
};
use crate::search::{family_records, grid_classify, ResidueFilter, SearchRecord};
use crate::verify;
use crate::Result;

/// Exact arithmetic for the reciprocal quintinomials
/// `x^(2^n) + A x^(3·2^(n-2)) + B x^(2^(n-1)) + A x^(2^(n-2)) + 1`.
#[derive(Debug, Parser)]
#[command(name = "quintinomial", version, allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// RNG seed; echoed into every output header.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Factoring effort before an integer is surrendered and the verdict
    /// marked Undecided.
    #[arg(long, global = true, default_value_t = 1 << 22)]
    budget: u64,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for grid work (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Prime bound for the mod-p factor-pattern sample attached to
    /// quartic classifications.
    #[arg(long = "prime-bound", global = true, default_value_t = 500)]
    prime_bound: u64,

    /// Euler-product truncation for density reports.
    #[arg(long = "trunc-L", global = true, default_value_t = 100)]
    trunc_l: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify one polynomial: invariants, discriminant, irreducibility,
    /// monogenicity, Galois class.
    #[command(allow_negative_numbers = true)]
    Classify { n: u32, a: i64, b: i64 },

    /// Classify every admissible pair in an inclusive coefficient box.
    #[command(allow_negative_numbers = true)]
    Search {
        n: u32,
        #[arg(long, default_value_t = -101)]
        a_min: i64,
        #[arg(long, default_value_t = 101)]
        a_max: i64,
        #[arg(long, default_value_t = -101)]
        b_min: i64,
        #[arg(long, default_value_t = 101)]
        b_max: i64,
        /// Residue classes of (A, B) mod 4 to keep.
        #[arg(long, value_enum, default_value_t = FilterArg::Mod411)]
        filter: FilterArg,
    },

    /// Walk B = 8t+1 upward with A = 8k+1 fixed, keeping the members whose
    /// invariant product is squarefree.
    #[command(allow_negative_numbers = true)]
    Family {
        k: i64,
        /// How many members to collect.
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Walk every integer t instead of primes only.
        #[arg(long)]
        all_t: bool,
    },

    /// Squarefree-density report for a factored polynomial: obstruction
    /// scan, truncated density constant, optional value count.
    Density {
        /// Factors as ascending coefficient lists, '|'-separated; e.g.
        /// "-1,4|5,12|5,-8,16" is (4t-1)(12t+5)(16t^2-8t+5).
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
        /// Also count squarefree values at prime arguments up to X.
        #[arg(long = "X")]
        x: Option<u64>,
    },

    /// Pell solutions (odd-indexed Lucas/Fibonacci pairs) and the
    /// coefficient pairs they induce.
    Pell {
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: i64,
    },

    /// Run the twelve-point verification suite and print the scoreboard.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    /// A = B = 1 (mod 4).
    #[value(name = "mod4-11")]
    Mod411,
    /// Odd pairs other than (1,1) mod 4.
    #[value(name = "mod4-odd-mixed")]
    Mod4OddMixed,
    /// Every nonzero pair.
    #[value(name = "none")]
    None,
}

impl From<FilterArg> for ResidueFilter {
    fn from(f: FilterArg) -> ResidueFilter {
        match f {
            FilterArg::Mod411 => ResidueFilter::Mod4Both1,
            FilterArg::Mod4OddMixed => ResidueFilter::Mod4OddNotBoth1,
            FilterArg::None => ResidueFilter::All,
        }
    }
}

/// Everything `classify` reports for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub seed: u64,
    pub budget: u64,
    pub params: QuinParams,
    pub polynomial: IntPoly,
    pub invariants: QuinInvariants,
    #[serde(with = "crate::arith::big_decimal")]
    pub disc: BigInt,
    /// Subresultant cross-check of the closed formula, attached for n <= 3
    /// where the degree keeps it cheap.
    #[serde(with = "crate::arith::big_decimal_opt")]
    pub disc_subresultant: Option<BigInt>,
    /// None when n exceeds the decidable cap.
    pub irreducibility: Option<Irreducibility>,
    pub verdict: MonogenicityVerdict,
    pub galois: GaloisClass,
    /// Factor-degree statistics mod primes up to the prime bound, attached
    /// to irreducible quartics.
    pub frobenius: Option<FrobeniusReport>,
}

/// Builds the full classification report for one parameter pair.
pub fn classify_report(
    params: &QuinParams,
    seed: u64,
    budget: u64,
    prime_bound: u64,
) -> Result<ClassifyReport> {
    let polynomial = build(params)?;
    let disc = disc_formula(params)?;
    let disc_subresultant = if params.n <= 3 {
        Some(discriminant(&polynomial)?)
    } else {
        None
    };
    let irreducibility = if params.n <= MAX_IRREDUCIBILITY_N {
        Some(irreducible(params)?)
    } else {
        None
    };
    let verdict = is_monogenic(params, seed, budget)?;
    let galois = match params.n {
        2 => quartic_galois(params.a, params.b)?,
        3 => octic_wreath(params.a, params.b)?,
        _ => GaloisClass {
            label: GaloisLabel::OutOfScope,
            evidence: vec![],
        },
    };
    let frobenius = if params.n == 2
        && matches!(irreducibility, Some(Irreducibility::Irreducible))
    {
        Some(frobenius_fingerprint(params.a, params.b, prime_bound, seed)?)
    } else {
        None
    };
    Ok(ClassifyReport {
        seed,
        budget,
        params: *params,
        polynomial,
        invariants: params.invariants(),
        disc,
        disc_subresultant,
        irreducibility,
        verdict,
        galois,
        frobenius,
    })
}

fn classify_text(r: &ClassifyReport) -> String {
    let mut out = format!("# seed={} budget={}\n", r.seed, r.budget);
    out += &format!(
        "F[{},{},{}] = {}\n",
        r.params.n, r.params.a, r.params.b, r.polynomial
    );
    let v = &r.invariants;
    out += &format!(
        "W1={} W2={} W3={}  P={} Q={} R={}\n",
        v.w1, v.w2, v.w3, v.p, v.q, v.r
    );
    out += &format!("disc = {}\n", r.disc);
    if let Some(d) = &r.disc_subresultant {
        out += &format!(
            "disc (subresultant) = {d}{}\n",
            if *d == r.disc { "" } else { "  ** MISMATCH **" }
        );
    }
    match &r.irreducibility {
        None => out += "irreducible: undecided (degree above the cap)\n",
        Some(Irreducibility::Irreducible) => out += "irreducible: yes\n",
        Some(Irreducibility::Reducible(cert)) => {
            out += &format!("irreducible: no — {:?}\n", cert.kind);
            out += &format!("  factor: {}\n", cert.factors.0);
            out += &format!("  factor: {}\n", cert.factors.1);
        }
    }
    out += &format!("monogenicity: {:?}", r.verdict.status);
    if !r.verdict.obstruction_primes.is_empty() {
        out += &format!(", index divisible at {:?}", r.verdict.obstruction_primes);
    }
    if !r.verdict.reason.is_empty() {
        out += &format!(" ({})", r.verdict.reason);
    }
    out += &format!("; checked primes {:?}\n", r.verdict.checked_primes);
    out += &format!("galois: {:?}\n", r.galois.label);
    for c in &r.galois.evidence {
        out += &format!(
            "  {} = {}: {}\n",
            c.expr,
            c.value,
            if c.is_square { "square" } else { "not a square" }
        );
    }
    if let Some(fr) = &r.frobenius {
        out += &format!("frobenius: {} primes sampled", fr.scanned);
        match fr.d4_witness {
            Some(q) => out += &format!(", first [1,1,2] pattern at q={q}\n"),
            None => out += ", no [1,1,2] pattern\n",
        }
        for (pattern, count) in &fr.patterns {
            out += &format!("  {pattern:?} x{count}\n");
        }
    }
    out
}

/// First line of every JSON-lines stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamHeader {
    pub seed: u64,
    pub budget: u64,
}

fn emit_records(records: &[SearchRecord], seed: u64, budget: u64, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string(&StreamHeader { seed, budget })?);
        for r in records {
            println!("{}", serde_json::to_string(r)?);
        }
    } else {
        println!("# seed={seed} budget={budget}");
        println!("{}", SearchRecord::csv_header());
        for r in records {
            println!("{}", r.csv_row());
        }
    }
    Ok(())
}

/// Density output with the reproducibility header folded in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityOutput {
    pub seed: u64,
    pub budget: u64,
    pub trunc: u64,
    pub report: DensityReport,
}

fn parse_factors(spec: &str) -> Result<FactoredPoly> {
    // Tolerate the typographic minus so factor lists can be pasted.
    let spec = spec.replace('\u{2212}', "-");
    let mut factors = Vec::new();
    for part in spec.split('|') {
        let coeffs = part
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidInput(format!("bad coefficient {c:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        factors.push(IntPoly::from_i64(&coeffs));
    }
    FactoredPoly::new(factors)
}

fn density_text(out: &DensityOutput) -> String {
    let r = &out.report;
    let mut s = format!("# seed={} budget={}\n", out.seed, out.budget);
    s += "G = ";
    for f in &r.factors {
        s += &format!("({f})");
    }
    s += &format!("\ndegree = {}\n", r.degree);
    s += &format!(
        "obstruction scan: candidates {:?}, survivors {:?}, obstructed {:?}\n",
        r.scan.candidates, r.scan.survivors, r.scan.obstructed
    );
    s += &format!(
        "C_G truncated at L={}: {} = {}/{}{}\n",
        out.trunc,
        r.cg.decimal,
        r.cg.numerator,
        r.cg.denominator,
        if r.cg.vanishes { "  (vanishes)" } else { "" }
    );
    if let Some(ng) = &r.ng {
        s += &format!(
            "N_G({}): {} squarefree, {} not, {} undecided over {} prime arguments\n",
            ng.x, ng.squarefree, ng.not_squarefree, ng.undecided, ng.primes_tested
        );
    }
    s
}

/// One row of the Pell table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellRow {
    pub n: i64,
    /// X = L(2n-1).
    #[serde(with = "crate::arith::big_decimal")]
    pub x: BigInt,
    /// Y = F(2n-1).
    #[serde(with = "crate::arith::big_decimal")]
    pub y: BigInt,
    /// A = ±X where the residue class admits a pair.
    #[serde(with = "crate::arith::big_decimal_opt")]
    pub a: Option<BigInt>,
    /// B = 5Y - 4 alongside A.
    #[serde(with = "crate::arith::big_decimal_opt")]
    pub b: Option<BigInt>,
    /// The invariant the Lucas square identity pins at this index, e.g.
    /// "W2 = 121 = L(5)^2".
    pub square: Option<String>,
}

/// The full Pell table with its reproducibility header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellTable {
    pub seed: u64,
    pub budget: u64,
    pub rows: Vec<PellRow>,
}

/// Builds the table for 1 ≤ n ≤ max_n.
pub fn pell_table(max_n: i64, seed: u64, budget: u64) -> Result<PellTable> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let (x, y) = pell_solution(n)?;
        let pair = ab_from_pell(n)?;
        let square = match (n.rem_euclid(6), &pair) {
            (1, Some((a, b))) => {
                let w1 = b + BigInt::from(2) - BigInt::from(2) * a;
                Some(format!("W1 = {w1} = L({})^2", n - 2))
            }
            (4, Some((a, b))) => {
                let w2 = b + BigInt::from(2) + BigInt::from(2) * a;
                Some(format!("W2 = {w2} = L({})^2", n + 1))
            }
            _ => None,
        };
        // The label is only attached when the square identity really holds.
        if let Some(label) = &square {
            let idx = if n.rem_euclid(6) == 1 { n - 2 } else { n + 1 };
            let l = lucas(idx)?;
            let claimed = label
                .split(" = ")
                .nth(1)
                .and_then(|v| v.parse::<BigInt>().ok());
            if claimed != Some(&l * &l) {
                return Err(Error::InvalidInput(format!(
                    "square identity failed at n={n}"
                )));
            }
        }
        let (a, b) = match pair {
            Some((a, b)) => (Some(a), Some(b)),
            None => (None, None),
        };
        rows.push(PellRow { n, x, y, a, b, square });
    }
    Ok(PellTable { seed, budget, rows })
}

fn pell_text(table: &PellTable) -> String {
    let mut s = format!("# seed={} budget={}\n", table.seed, table.budget);
    s += "n\tX=L(2n-1)\tY=F(2n-1)\tA\tB\tsquare invariant\n";
    for r in &table.rows {
        let dash = || "-".to_string();
        s += &format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.n,
            r.x,
            r.y,
            r.a.as_ref().map(|v| v.to_string()).unwrap_or_else(dash),
            r.b.as_ref().map(|v| v.to_string()).unwrap_or_else(dash),
            r.square.clone().unwrap_or_else(dash)
        );
    }
    s
}

/// The verification scoreboard without wall-clock noise, so JSON output is
/// byte-identical across runs with the same seed and flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub budget: u64,
    pub all_passed: bool,
    pub criteria: Vec<CriterionSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionSummary {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub details: String,
    pub limit_ms: u64,
}

impl From<&verify::Scoreboard> for VerifySummary {
    fn from(board: &verify::Scoreboard) -> Self {
        VerifySummary {
            seed: board.seed,
            budget: board.budget,
            all_passed: board.all_passed(),
            criteria: board
                .reports
                .iter()
                .map(|r| CriterionSummary {
                    id: r.id,
                    name: r.name.clone(),
                    passed: r.passed,
                    details: r.details.clone(),
                    limit_ms: r.limit_ms,
                })
                .collect(),
        }
    }
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version land here too; only real usage errors are
            // failures, and those must exit 1 (2 is reserved for budget
            // exhaustion).
            let failed = e.use_stderr();
            let _ = e.print();
            return if failed { 1 } else { 0 };
        }
    };
    if let Some(jobs) = cli.jobs {
        // Later calls cannot resize the pool, which is fine for a process
        // that reads its flags exactly once.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let (seed, budget) = (cli.seed, cli.budget);
    match &cli.command {
        Command::Classify { n, a, b } => {
            let params = QuinParams::new(*n, *a, *b)?;
            let report = classify_report(&params, seed, budget, cli.prime_bound)?;
            if cli.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                print!("{}", classify_text(&report));
            }
            Ok(if report.verdict.status == MonogenicStatus::Undecided {
                2
            } else {
                0
            })
        }
        Command::Search {
            n,
            a_min,
            a_max,
            b_min,
            b_max,
            filter,
        } => {
            let records = grid_classify(
                *n,
                (*a_min, *a_max),
                (*b_min, *b_max),
                (*filter).into(),
                seed,
                budget,
            )?;
            emit_records(&records, seed, budget, cli.json)?;
            Ok(0)
        }
        Command::Family { k, count, all_t } => {
            let records = family_records(*k, *count, !all_t, seed, budget)?;
            emit_records(&records, seed, budget, cli.json)?;
            Ok(0)
        }
        Command::Density { factors, x } => {
            let g = parse_factors(factors)?;
            let report = density_report(&g, cli.trunc_l, *x, budget)?;
            let undecided = report.ng.map_or(0, |ng| ng.undecided);
            let out = DensityOutput {
                seed,
                budget,
                trunc: cli.trunc_l,
                report,
            };
            if cli.json {
                println!("{}", serde_json::to_string(&out)?);
            } else {
                print!("{}", density_text(&out));
            }
            Ok(if undecided > 0 { 2 } else { 0 })
        }
        Command::Pell { max_n } => {
            let table = pell_table(*max_n, seed, budget)?;
            if cli.json {
                println!("{}", serde_json::to_string(&table)?);
            } else {
                print!("{}", pell_text(&table));
            }
            Ok(0)
        }
        Command::Verify => {
            let board = verify::run_all(seed, budget)?;
            if cli.json {
                println!("{}", serde_json::to_string(&VerifySummary::from(&board))?);
            } else {
                println!("# seed={seed} budget={budget}");
                print!("{}", board.render());
            }
            Ok(if board.all_passed() { 0 } else { 1 })
        }
    }
}
