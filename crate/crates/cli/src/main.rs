//! `germring`: semigroup rings, toric ideals, presentations and independence
//! certificates for families of meromorphic germs.

mod golden;
mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use germring::exactalg::{GaussianRational, Poly, RatFunc};
use germring::germ::{order_vector, parse_germ, GermFamily};
use germring::grobner::{parse_mpoly, IdealBasis};
use germring::presentations::{
    algebraic_independence, augmented_independence, bar, defining_ideal, linear_independence, relation_lattice,
    sbarhol_from_ideal, shol_from_ideal, transformed_independence, wronskian_over_c, Exactness, Presentation,
    DEFAULT_GEN_CAP,
};
use germring::semigroup::{classify, hilbert_basis, hilbert_basis_tilde, laurent_generators, support_census};
use germring::sweep::{run_sweep, SweepKind};
use germring::toric::{
    check_thm22, check_thm23, generator_names, monomial_map, thm24_presentation, toric_ideal, x_names, xy_names,
};
use germring::semigroup::Variant;
use germring::{CancelToken, Error};

use render::vector;

#[derive(Parser)]
#[command(name = "germring", version, about = "Exact computations with rings generated by meromorphic germs")]
struct Cli {
    /// Print a JSON envelope `{status, payload}` instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct FamilyArgs {
    /// A germ expression such as `exp(-z)/z^2`; repeat once per member.
    #[arg(short = 'e', long = "expr", value_name = "EXPR", allow_hyphen_values = true)]
    exprs: Vec<String>,
    /// Family JSON file.
    #[arg(short = 'f', long = "family", value_name = "FILE", conflicts_with = "exprs")]
    family: Option<PathBuf>,
    /// Abstract family known only through its orders, e.g. `1,-2,0`.
    #[arg(
        long,
        value_name = "ORDERS",
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with_all = ["exprs", "family"]
    )]
    ell: Option<Vec<i64>>,
    /// Base point z0, overriding the family's (default 0).
    #[arg(long, value_name = "Z0", allow_hyphen_values = true)]
    at: Option<String>,
}

#[derive(Args, Clone, Debug)]
struct UserIdeal {
    /// File of polynomials in x1..xr, one per line (`#` starts a comment),
    /// used as the ideal of relations instead of computing it.
    #[arg(long = "p", visible_alias = "relations-file", value_name = "FILE")]
    p: Option<PathBuf>,
    /// Take the supplied relations as exact rather than a lower bound.
    #[arg(long, requires = "p")]
    assert_exact: bool,
}

#[derive(Args, Clone, Debug)]
#[group(multiple = false)]
struct Ring {
    /// S = F[f1, ..., fr] (the default).
    #[arg(long)]
    s: bool,
    /// S with every fj inverted.
    #[arg(long)]
    sbar: bool,
    /// Germs in S holomorphic at the base point.
    #[arg(long)]
    shol: bool,
    /// Germs in the inverted ring holomorphic at the base point.
    #[arg(long)]
    sbarhol: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Orders of the members at the base point.
    Ord(FamilyArgs),
    /// Sign case of the order vector and its sorting permutation.
    Classify(FamilyArgs),
    /// Minimal monomial generators of F[H] (F[H~] with --tilde) and of F[H-bar].
    Semigroup {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        tilde: bool,
    },
    /// Support census L_t against the thresholds N_t.
    Census(FamilyArgs),
    /// Toric ideal of the minimal monomial generators.
    Toric {
        #[command(flatten)]
        fam: FamilyArgs,
        #[arg(long)]
        tilde: bool,
    },
    /// The five equivalent conditions for case III, each computed separately.
    CheckThm22(FamilyArgs),
    /// Polynomial-ring criterion via the support census.
    CheckThm23(FamilyArgs),
    /// Closed-form generators and relations for orders (1^p, (-1)^(q-p), 0^(r-q)).
    Thm24 { p: usize, q: usize, r: usize },
    /// Multiplicative relation lattice and the defining ideal of S.
    Relations {
        #[command(flatten)]
        fam: FamilyArgs,
        #[command(flatten)]
        user: UserIdeal,
    },
    /// Presentation of S, S-bar, S^hol or S-bar^hol.
    Present {
        #[command(flatten)]
        fam: FamilyArgs,
        #[command(flatten)]
        ring: Ring,
        #[command(flatten)]
        user: UserIdeal,
        /// Refuse an H~ basis with more generators than this.
        #[arg(long, default_value_t = DEFAULT_GEN_CAP)]
        gen_cap: usize,
    },
    /// Independence certificates for exponentials e^P.
    Indep {
        /// Exponent polynomial P of a member e^P; repeatable. Without it the
        /// exponent parts of the family members are used.
        #[arg(long = "poly", value_name = "P", allow_hyphen_values = true)]
        polys: Vec<String>,
        #[command(flatten)]
        fam: FamilyArgs,
        /// Matrix over Q(i)(z) mixing the exponentials: rows split by `;`,
        /// entries by `,`, e.g. `1,1;0,z`.
        #[arg(long, value_name = "MATRIX", allow_hyphen_values = true)]
        g: Option<String>,
        /// Rational function prepended to the exponentials (needs --a).
        #[arg(long, value_name = "R", requires = "a", allow_hyphen_values = true)]
        phi: Option<String>,
        /// Constant matrix of size r+1 applied to (phi, e^P1, ...).
        #[arg(long = "a", value_name = "MATRIX", requires = "phi", allow_hyphen_values = true)]
        a: Option<String>,
        /// Also compute the Wronskian of the family over C.
        #[arg(long)]
        wronskian: bool,
    },
    /// Replay a worked example and compare every stage with its golden.
    Example {
        /// `3.6.1` or `3.6.2`.
        name: String,
        /// Compare against this golden file instead of the built-in one.
        #[arg(long, value_name = "FILE", hide = true)]
        golden: Option<PathBuf>,
    },
    /// Seeded randomized property sweep.
    Sweep {
        /// thm22, thm23, hilbert-oracle or toric-oracle.
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

/// A successful result: the JSON payload and its text rendering.
pub struct Outcome {
    pub payload: Value,
    pub text: String,
}

pub enum Failure {
    Usage(String),
    Lib(Error),
    /// A property or golden comparison failed; the outcome is still shown.
    Violation { code: &'static str, message: String, outcome: Outcome },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Run = Result<Outcome, Failure>;

impl Failure {
    fn code(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "UsageError",
            Failure::Lib(e) => e.code(),
            Failure::Violation { code, .. } => code,
        }
    }

    fn exit(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Violation { .. } => 5,
            Failure::Lib(e) => match e {
                Error::SyntaxError { .. }
                | Error::NotNormalForm(_)
                | Error::ZeroGerm
                | Error::DivisionByZero
                | Error::NonPolynomialExponent(_) => 3,
                Error::SizeGuard { .. } | Error::NonRationalConstant(_) => 4,
                Error::Cancelled => 130,
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
            Failure::Violation { message, .. } => message.clone(),
        }
    }
}

/// Writes a line to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let token = CancelToken::new();
    let on_interrupt = token.clone();
    // a second handler cannot be installed, which only matters in tests
    let _ = ctrlc::set_handler(move || on_interrupt.cancel());

    match run(cli.command, &token) {
        Ok(out) => {
            if cli.json {
                emit(&pretty(&json!({ "status": "ok", "payload": out.payload })));
            } else {
                emit(&out.text);
            }
            ExitCode::SUCCESS
        }
        Err(fail) => {
            let code = fail.exit();
            let payload = match &fail {
                Failure::Violation { outcome, .. } => Some(outcome),
                _ => None,
            };
            if cli.json {
                let mut env = json!({ "status": "error", "error": { "code": fail.code(), "message": fail.message() } });
                if let Some(out) = payload {
                    env["payload"] = out.payload.clone();
                }
                emit(&pretty(&env));
            } else {
                if let Some(out) = payload {
                    emit(&out.text);
                }
                eprintln!("error[{}]: {}", fail.code(), fail.message());
            }
            ExitCode::from(code)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

impl FamilyArgs {
    fn given(&self) -> bool {
        !self.exprs.is_empty() || self.family.is_some() || self.ell.is_some()
    }

    fn load(&self) -> Result<GermFamily, Failure> {
        let mut fam = if let Some(path) = &self.family {
            GermFamily::from_json(&read(path)?)?
        } else if let Some(ell) = &self.ell {
            if ell.is_empty() {
                return Err(Failure::Usage("--ell needs at least one order".into()));
            }
            GermFamily::from_orders(ell)
        } else if !self.exprs.is_empty() {
            GermFamily::parse_exprs(&self.exprs)?
        } else {
            return Err(Failure::Usage("give the family with -e, -f or --ell".into()));
        };
        if let Some(z0) = &self.at {
            fam.base_point = z0
                .parse::<GaussianRational>()
                .map_err(|_| Error::SyntaxError { pos: 0, msg: format!("bad base point `{z0}`") })?;
        }
        Ok(fam)
    }
}

fn family_json(fam: &GermFamily) -> Value {
    serde_json::from_str(&fam.to_file().to_json()).expect("family JSON parses")
}

fn run(cmd: Command, token: &CancelToken) -> Run {
    match cmd {
        Command::Ord(fam) => ord(&fam),
        Command::Classify(fam) => with_family(&fam, classify_cmd),
        Command::Semigroup { fam, tilde } => with_family(&fam, |ell| semigroup(ell, tilde)),
        Command::Census(fam) => with_family(&fam, census),
        Command::Toric { fam, tilde } => with_family(&fam, |ell| toric(ell, tilde, token)),
        Command::CheckThm22(fam) => with_family(&fam, |ell| thm22(ell, token)),
        Command::CheckThm23(fam) => with_family(&fam, |ell| thm23(ell, token)),
        Command::Thm24 { p, q, r } => thm24(p, q, r),
        Command::Relations { fam, user } => relations(&fam, &user, token),
        Command::Present { fam, ring, user, gen_cap } => present(&fam, &ring, &user, gen_cap, token),
        Command::Indep { polys, fam, g, phi, a, wronskian } => {
            indep(&polys, &fam, g.as_deref(), phi.as_deref().zip(a.as_deref()), wronskian)
        }
        Command::Example { name, golden } => golden::example(&name, golden.as_deref(), token),
        Command::Sweep { kind, seed, count } => sweep(&kind, seed, count, token),
    }
}

/// Runs a command on the order vector and echoes the family in the payload.
fn with_family(fam: &FamilyArgs, f: impl FnOnce(&[i64]) -> Run) -> Run {
    let fam = fam.load()?;
    let mut out = f(&order_vector(&fam))?;
    out.payload["family"] = family_json(&fam);
    Ok(out)
}

fn ord(fam: &FamilyArgs) -> Run {
    let fam = fam.load()?;
    let ell = order_vector(&fam);
    let text = ell.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    Ok(Outcome {
        payload: json!({ "family": family_json(&fam), "basePoint": fam.base_point.to_string(), "orders": ell }),
        text,
    })
}

fn classify_cmd(ell: &[i64]) -> Run {
    let c = classify(ell);
    // 1-based, matching the variable names x1..xr
    let perm: Vec<usize> = c.permutation.iter().map(|k| k + 1).collect();
    let text = format!(
        "case {}\np = {}, q = {}\nsorted order: {}\npermutation: {}",
        c.case,
        c.p,
        c.q,
        vector(&c.sorted_ell(ell)),
        perm.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    );
    Ok(Outcome {
        payload: json!({ "ell": ell, "case": c.case.to_string(), "p": c.p, "q": c.q, "permutation": perm }),
        text,
    })
}

fn semigroup(ell: &[i64], tilde: bool) -> Run {
    let r = ell.len();
    let (basis, names) = if tilde { (hilbert_basis_tilde(ell), xy_names(r)) } else { (hilbert_basis(ell), x_names(r)) };
    let monos = render::monomials(&basis, &names);
    let mut text = format!("{} generators: {}", if tilde { "F[H~]" } else { "F[H]" }, monos.join(", "));
    let mut payload = json!({
        "ell": ell,
        "variant": if tilde { "Tilde" } else { "N" },
        "generators": basis.generators,
        "monomials": monos,
    });
    if !tilde {
        let lg = laurent_generators(ell);
        let units: Vec<String> = lg.units.iter().map(|u| laurent_monomial(u, &names)).collect();
        text += &format!("\nF[H-bar] units: {}", if units.is_empty() { "none".into() } else { units.join(", ") });
        if let Some(g) = &lg.monoid_gen {
            text += &format!("\nF[H-bar] monoid generator: {}", laurent_monomial(g, &names));
        }
        payload["laurent"] = json!({ "units": lg.units, "monoidGen": lg.monoid_gen });
    }
    Ok(Outcome { payload, text })
}

/// `x^a` with negative exponents allowed, e.g. `x1^2*x2^-1`.
fn laurent_monomial(a: &[i64], names: &[String]) -> String {
    let parts: Vec<String> = a
        .iter()
        .zip(names)
        .filter(|(&e, _)| e != 0)
        .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn census(ell: &[i64]) -> Run {
    let c = support_census(ell)?;
    let mut text = String::from("t  L_t  N_t");
    for (t, (l, n)) in c.l.iter().zip(&c.n).enumerate() {
        text += &format!("\n{}  {l}  {n}", t + 1);
    }
    match c.witness() {
        Some(t) => text += &format!("\nL_t >= N_t first at t = {t}"),
        None => text += "\nL_t < N_t for every t",
    }
    Ok(Outcome { payload: json!({ "ell": ell, "L": c.l, "N": c.n, "witnessT": c.witness() }), text })
}

fn toric(ell: &[i64], tilde: bool, token: &CancelToken) -> Run {
    let map = monomial_map(ell, if tilde { Variant::Tilde } else { Variant::N });
    let t = toric_ideal(&map, token)?;
    let names = generator_names(&map.generators.generators);
    let monos = render::monomials(&map.generators, &map.target_vars);
    let gens_text: Vec<String> = names.iter().zip(&monos).map(|(n, m)| format!("{n} = {m}")).collect();
    let text = format!("generators: {}\nrelations: {}", gens_text.join(", "), t.ideal);
    Ok(Outcome {
        payload: json!({
            "ell": ell,
            "variant": if tilde { "Tilde" } else { "N" },
            "generators": map.generators.generators,
            "names": names,
            "monomials": monos,
            "relations": render::ideal(&t.ideal),
        }),
        text,
    })
}

fn thm22(ell: &[i64], token: &CancelToken) -> Run {
    let rep = check_thm22(ell, token)?;
    let labels = [
        "toric ideal is zero",
        "r minimal generators",
        "one positive order dividing every negative one",
        "generators x1, x1^mj xj, xk",
        "units of F[H-bar] as in the formula",
    ];
    let mut text = format!("case {}", rep.case.case);
    for (k, (c, l)) in rep.conditions.iter().zip(labels).enumerate() {
        text += &format!("\n({}) {:5} {l}", k + 1, c);
    }
    text += &format!("\nconditions agree: {}", rep.agree());
    let multipliers = rep.multipliers.as_ref().map(|m| m.iter().map(|(j, m)| json!({ "index": j + 1, "m": m })).collect::<Vec<_>>());
    Ok(Outcome {
        payload: json!({
            "ell": ell,
            "case": rep.case.case.to_string(),
            "conditions": rep.conditions,
            "agree": rep.agree(),
            "generators": rep.generators.generators,
            "relations": render::ideal(&rep.toric.ideal),
            "multipliers": multipliers,
        }),
        text,
    })
}

fn thm23(ell: &[i64], token: &CancelToken) -> Run {
    let rep = check_thm23(ell, token)?;
    let text = format!(
        "case {}\nF[H] is a polynomial ring: {}\ntoric ideal zero and some L_t >= N_t: {}\nL = {:?}\nN = {:?}\nconditions agree: {}",
        rep.case.case,
        rep.polynomial_ring,
        rep.census_condition,
        rep.census.l,
        rep.census.n,
        rep.agree()
    );
    Ok(Outcome {
        payload: json!({
            "ell": ell,
            "case": rep.case.case.to_string(),
            "polynomialRing": rep.polynomial_ring,
            "censusCondition": rep.census_condition,
            "toricZero": rep.toric_zero,
            "L": rep.census.l,
            "N": rep.census.n,
            "witnessT": rep.witness_t,
            "agree": rep.agree(),
        }),
        text,
    })
}

fn thm24(p: usize, q: usize, r: usize) -> Run {
    let t = thm24_presentation(p, q, r)?;
    let names = x_names(r);
    let monos = render::monomials(&t.generators, &names);
    let tn = &t.relations.vars;
    let gens_text: Vec<String> = tn.iter().zip(&monos).map(|(n, m)| format!("{n} = {m}")).collect();
    let text = format!("ell = {}\ngenerators: {}\nrelations: {}", vector(&t.ell), gens_text.join(", "), t.relations);
    Ok(Outcome {
        payload: json!({
            "p": p, "q": q, "r": r,
            "ell": t.ell,
            "generators": t.generators.generators,
            "names": tn,
            "monomials": monos,
            "units": t.laurent.units,
            "monoidPart": t.monoid_part,
            "relations": render::ideal(&t.relations),
        }),
        text,
    })
}

fn read_user_ideal(path: &Path, r: usize, exact: bool) -> Result<Presentation, Failure> {
    let vars = x_names(r);
    let gens = read(path)?
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| parse_mpoly(l, &vars))
        .collect::<Result<Vec<_>, _>>()?;
    let exactness = if exact { Exactness::Exact } else { Exactness::LowerBound };
    Ok(Presentation { relations: IdealBasis::new(vars, gens), exactness })
}

/// The ideal of relations of S: supplied by the user or computed.
fn ideal_of(fam: &GermFamily, user: &UserIdeal, token: &CancelToken) -> Result<Presentation, Failure> {
    match &user.p {
        Some(path) => read_user_ideal(path, fam.len(), user.assert_exact),
        None => Ok(defining_ideal(fam, token)?),
    }
}

fn relations(fam: &FamilyArgs, user: &UserIdeal, token: &CancelToken) -> Run {
    let fam = fam.load()?;
    let lattice = match (relation_lattice(&fam), &user.p) {
        (Ok(l), _) => Some(l),
        // an abstract member has no lattice, but a supplied ideal still stands
        (Err(Error::AbstractMember { .. }), Some(_)) => None,
        (Err(e), _) => return Err(e.into()),
    };
    let ideal = ideal_of(&fam, user, token);
    let mut text = String::new();
    let mut payload = json!({ "family": family_json(&fam), "ell": order_vector(&fam) });
    if let Some(l) = &lattice {
        if l.is_trivial() {
            text += "relation lattice: 0\n";
        }
        for (a, c) in l.basis.iter().zip(&l.constants) {
            text += &format!("relation {}: f^a = {c}\n", vector(a));
        }
        let constants: Vec<Value> = l.constants.iter().map(|c| json!({ "lc": c.lc.to_string(), "kappa": c.kappa.to_string() })).collect();
        payload["lattice"] = json!({ "basis": l.basis, "constants": constants, "expRank": l.exp_rank });
    }
    match ideal {
        Ok(p) => {
            text += &format!("ideal: {}\nexactness: {}", p.relations, p.exactness);
            payload["ideal"] = render::ideal(&p.relations);
            payload["exactness"] = json!(p.exactness.to_string());
        }
        // the lattice is still reported when the ideal has no exact form
        Err(Failure::Lib(e @ Error::NonRationalConstant(_))) => {
            text += &format!("ideal: not available ({}: {e})", e.code());
            payload["ideal"] = Value::Null;
            payload["idealError"] = json!({ "code": e.code(), "message": e.to_string() });
        }
        Err(f) => return Err(f),
    }
    Ok(Outcome { payload, text })
}

fn present(fam: &FamilyArgs, ring: &Ring, user: &UserIdeal, gen_cap: usize, token: &CancelToken) -> Run {
    let fam = fam.load()?;
    let ell = order_vector(&fam);
    let p = ideal_of(&fam, user, token)?;
    let (name, pres) = if ring.sbar {
        ("Sbar", bar(&p))
    } else if ring.shol {
        ("Shol", shol_from_ideal(&ell, &p, token)?)
    } else if ring.sbarhol {
        ("Sbarhol", sbarhol_from_ideal(&ell, &p, gen_cap, token)?)
    } else {
        ("S", p)
    };
    let text = format!(
        "{name} = Q(i)[{}] / {}\nexactness: {}",
        pres.ring().join(", "),
        pres.relations,
        pres.exactness
    );
    Ok(Outcome {
        payload: json!({
            "family": family_json(&fam),
            "ell": ell,
            "ring": name,
            "variables": pres.ring(),
            "relations": render::ideal(&pres.relations),
            "exactness": pres.exactness.to_string(),
        }),
        text,
    })
}

/// A rational function in `z`; `0` is allowed.
fn parse_ratfunc(text: &str) -> Result<RatFunc, Failure> {
    match parse_germ(text) {
        Ok(g) if g.exp.is_zero() => Ok(g.rat),
        Ok(_) => Err(Error::NotNormalForm(format!("`{text}` is not a rational function")).into()),
        Err(Error::ZeroGerm) => Ok(RatFunc::zero()),
        Err(e) => Err(e.into()),
    }
}

fn parse_poly(text: &str) -> Result<Poly, Failure> {
    let r = parse_ratfunc(text)?;
    if !r.is_polynomial() {
        return Err(Error::NotNormalForm(format!("`{text}` is not a polynomial")).into());
    }
    let lc = r.den().leading_coeff();
    Ok(r.num().scale(&lc.inv()))
}

fn parse_matrix(text: &str) -> Result<Vec<Vec<RatFunc>>, Failure> {
    text.split(';').map(|row| row.split(',').map(parse_ratfunc).collect()).collect()
}

fn indep(polys: &[String], fam: &FamilyArgs, g: Option<&str>, aug: Option<(&str, &str)>, wronskian: bool) -> Run {
    let family = if fam.given() { Some(fam.load()?) } else { None };
    let polys: Vec<Poly> = if !polys.is_empty() {
        polys.iter().map(|p| parse_poly(p)).collect::<Result<_, _>>()?
    } else if let Some(f) = &family {
        f.germs()?.iter().map(|g| g.exp.clone()).collect()
    } else {
        return Err(Failure::Usage("give exponents with --poly or a family with -e, -f".into()));
    };
    let mut certs = Vec::new();
    if let Some(g) = g {
        certs.push(("transformed", transformed_independence(&parse_matrix(g)?, &polys)?));
    }
    if let Some((phi, a)) = aug {
        let a = parse_matrix(a)?
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| x.as_constant().ok_or_else(|| Error::NotNormalForm("entries of --a must be constants".into())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        certs.push(("augmented", augmented_independence(&parse_ratfunc(phi)?, &polys, &a)?));
    }
    if certs.is_empty() {
        certs.push(("linear", linear_independence(&polys)));
        certs.push(("algebraic", algebraic_independence(&polys)));
    }
    let mut text: Vec<String> = certs.iter().map(|(k, c)| render::certificate_text(k, c)).collect();
    let mut payload = json!({
        "polys": polys.iter().map(Poly::to_string).collect::<Vec<_>>(),
        "certificates": certs.iter().map(|(k, c)| render::certificate(k, c)).collect::<Vec<_>>(),
    });
    if wronskian {
        let Some(f) = &family else {
            return Err(Failure::Usage("--wronskian needs a family (-e or -f)".into()));
        };
        let w = wronskian_over_c(f)?;
        text.push(format!(
            "wronskian: exp({}) * ({})\n  nonzero: {}",
            w.exp_part, w.rat_part, w.nonzero
        ));
        payload["wronskian"] = json!({ "nonzero": w.nonzero, "ratPart": w.rat_part.to_string(), "expPart": w.exp_part.to_string() });
    }
    Ok(Outcome { payload, text: text.join("\n") })
}

fn sweep(kind: &str, seed: u64, count: usize, token: &CancelToken) -> Run {
    let kind: SweepKind = kind.parse().map_err(Failure::Usage)?;
    if count == 0 {
        return Err(Failure::Usage("--count must be at least 1".into()));
    }
    let rep = run_sweep(kind, seed, count, token)?;
    let cx: Vec<Value> = rep.counterexamples.iter().map(|c| json!({ "ell": c.ell, "detail": c.detail })).collect();
    let mut text = format!(
        "{kind} seed {seed}: {} instances, {} checks, {} counterexamples",
        rep.tested,
        rep.checks,
        rep.counterexamples.len()
    );
    for c in &rep.counterexamples {
        text += &format!("\n  ell = {}: {}", vector(&c.ell), c.detail);
    }
    let outcome = Outcome {
        payload: json!({
            "kind": kind.name(),
            "seed": seed,
            "tested": rep.tested,
            "checks": rep.checks,
            "counterexamples": cx,
            "passed": rep.passed(),
        }),
        text,
    };
    if rep.passed() {
        Ok(outcome)
    } else {
        let message = format!("{} counterexamples; first ell = {}", rep.counterexamples.len(), vector(&rep.counterexamples[0].ell));
        Err(Failure::Violation { code: "PropertyViolation", message, outcome })
    }
}
