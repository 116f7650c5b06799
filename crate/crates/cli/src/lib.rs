//! Batch front-end: loads a session file and runs one compute or verify
//! command against it.

pub mod session;

use std::fmt;

use chernclass::charclasses::{chern_fulton, csm, csm_constructible, milnor};
use chernclass::segre::segre_class;
use chernclass::verifier::{
    euler_surface_identity, jacobian_splayed_test, verify_bertini, verify_complement, verify_constructible_product,
    verify_csm_product, verify_fulton_product, verify_segre_multiplicativity, verify_segre_relation, Outcome,
    SplayedTest, VerificationReport, VerifyConfig,
};
use chernclass::{Class, Error, HomogeneousIdeal, PrimeField, SparsePolynomial};
use serde_json::{json, Value};

pub use session::{parse_session, parse_session_str, Overrides, Session, SessionError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Rendered output and the process exit code it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandError {
    Usage(String),
    Compute(Error),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Compute(Error::Degenerate { .. }) => EXIT_INCONCLUSIVE,
            _ => EXIT_INPUT,
        }
    }
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Usage(m) => write!(f, "{m}"),
            CommandError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CommandError {}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Compute(e)
    }
}

type CmdResult<T> = std::result::Result<T, CommandError>;

pub const COMMANDS: &str = "segre, csm, cfulton, milnor, euler, verify";

pub const IDENTITIES: &[(&str, &str)] = &[
    ("csm-product", "X Y"),
    ("constructible-product", "PHI PSI"),
    ("fulton-product", "X Y"),
    ("segre-relation", "D1 Z1 D2 Z2"),
    ("segre-multiplicativity", "X Y"),
    ("bertini", "E Y"),
    ("complement", "F1 F2"),
    ("jacobian-splayed", "F1 F2"),
    ("euler", "F G"),
];

pub struct Runner<'a> {
    pub session: &'a Session,
    pub max_gens: usize,
    pub format: Format,
}

impl<'a> Runner<'a> {
    fn cfg(&self) -> VerifyConfig {
        VerifyConfig {
            seed: self.session.seed,
            trials: self.session.trials,
            max_gens: self.max_gens,
        }
    }

    fn ideal(&self, name: &str) -> CmdResult<&'a HomogeneousIdeal> {
        self.session
            .ideal(name)
            .ok_or_else(|| CommandError::Usage(format!("unknown ideal '{name}'")))
    }

    fn hypersurface(&self, name: &str) -> CmdResult<&'a SparsePolynomial> {
        self.ideal(name)?;
        self.session
            .hypersurface(name)
            .ok_or_else(|| CommandError::Usage(format!("'{name}' must have exactly one generator")))
    }

    fn prime_source(&self) -> &'static str {
        if self.session.prime_was_auto {
            "auto"
        } else {
            "explicit"
        }
    }

    fn provenance(&self) -> String {
        format!(
            "prime: {} ({}), seed: {}, trials: {}",
            self.session.field.modulus(),
            self.prime_source(),
            self.session.seed,
            self.session.trials
        )
    }

    /// Dispatches `command args…`.
    pub fn run(&self, command: &str, args: &[String]) -> CmdResult<Output> {
        match command {
            "segre" | "csm" | "cfulton" | "milnor" => {
                let [name] = args else {
                    return Err(CommandError::Usage(format!("usage: {command} NAME")));
                };
                self.compute(command, name)
            }
            "euler" => match args {
                [name] => self.euler_char(name),
                [f, g] => self.reports(vec![euler_surface_identity(
                    self.hypersurface(f)?,
                    self.hypersurface(g)?,
                    &self.cfg(),
                )?]),
                _ => Err(CommandError::Usage("usage: euler X | euler F G".into())),
            },
            "verify" => {
                let Some((identity, rest)) = args.split_first() else {
                    return Err(CommandError::Usage(identity_usage()));
                };
                self.verify(identity, rest)
            }
            other => Err(CommandError::Usage(format!("unknown command '{other}' (expected one of {COMMANDS})"))),
        }
    }

    /// The class of `name` in every trial field; the first trial's class is
    /// reported and any disagreement makes the result inconclusive.
    fn compute(&self, command: &str, name: &str) -> CmdResult<Output> {
        let cfg = self.cfg();
        let fields = cfg.trial_fields(self.session.field);
        let mut classes = Vec::with_capacity(fields.len());
        for &(field, seed) in &fields {
            classes.push(self.compute_in(command, name, field, seed)?);
        }
        let class = classes[0].clone();
        let inconclusive = classes.iter().any(|c| *c != class);
        let code = if inconclusive { EXIT_INCONCLUSIVE } else { EXIT_PASS };
        let text = match self.format {
            Format::Text => {
                let mut s = format!("{command}({name}) = {class}\n{}\n", self.provenance());
                if inconclusive {
                    s.push_str("result: inconclusive\n");
                    for (k, c) in classes.iter().enumerate().skip(1) {
                        s.push_str(&format!("note: trial {k} (p = {}) gave {c}\n", fields[k].0.modulus()));
                    }
                }
                s
            }
            Format::Json => {
                let v = json!({
                    "format_version": session::FORMAT_VERSION,
                    "command": command,
                    "target": name,
                    "class": class.to_json(),
                    "prime": self.session.field.modulus(),
                    "prime_source": self.prime_source(),
                    "seed": self.session.seed,
                    "trials": fields.len(),
                    "inconclusive": inconclusive,
                });
                json_line(&v)
            }
        };
        Ok(Output { text, code })
    }

    fn compute_in(&self, command: &str, name: &str, field: PrimeField, seed: u64) -> CmdResult<Class> {
        if command == "csm" {
            if let Some(phi) = self.session.function(name) {
                return Ok(csm_constructible(&phi.to_field(field)?, seed)?);
            }
        }
        let ideal = self.ideal(name)?.to_field(field)?;
        Ok(match command {
            "segre" => segre_class(&ideal, seed)?,
            "csm" => csm(&ideal, seed, self.max_gens)?,
            "cfulton" => chern_fulton(&ideal, seed)?,
            "milnor" => milnor(&ideal, seed, self.max_gens)?,
            _ => unreachable!("dispatched above"),
        })
    }

    fn euler_char(&self, name: &str) -> CmdResult<Output> {
        let cfg = self.cfg();
        let fields = cfg.trial_fields(self.session.field);
        let mut values = Vec::with_capacity(fields.len());
        for &(field, seed) in &fields {
            values.push(self.compute_in("csm", name, field, seed)?.euler_char());
        }
        let chi = values[0].clone();
        let inconclusive = values.iter().any(|v| *v != chi);
        let code = if inconclusive { EXIT_INCONCLUSIVE } else { EXIT_PASS };
        let text = match self.format {
            Format::Text => {
                let mut s = format!("euler({name}) = {chi}\n{}\n", self.provenance());
                if inconclusive {
                    s.push_str("result: inconclusive\n");
                }
                s
            }
            Format::Json => json_line(&json!({
                "format_version": session::FORMAT_VERSION,
                "command": "euler",
                "target": name,
                "euler_characteristic": chi.to_string().parse::<serde_json::Number>().expect("integer"),
                "prime": self.session.field.modulus(),
                "prime_source": self.prime_source(),
                "seed": self.session.seed,
                "trials": fields.len(),
                "inconclusive": inconclusive,
            })),
        };
        Ok(Output { text, code })
    }

    fn verify(&self, identity: &str, args: &[String]) -> CmdResult<Output> {
        let cfg = self.cfg();
        let arity = IDENTITIES
            .iter()
            .find(|(id, _)| *id == identity)
            .map(|(_, a)| a.split_whitespace().count())
            .ok_or_else(|| CommandError::Usage(identity_usage()))?;
        if args.len() != arity {
            return Err(CommandError::Usage(identity_usage()));
        }
        let a = |i: usize| args[i].as_str();
        let reports = match identity {
            "csm-product" => vec![verify_csm_product(self.ideal(a(0))?, self.ideal(a(1))?, &cfg)?],
            "fulton-product" => vec![verify_fulton_product(self.ideal(a(0))?, self.ideal(a(1))?, &cfg)?],
            "segre-multiplicativity" => {
                vec![verify_segre_multiplicativity(self.ideal(a(0))?, self.ideal(a(1))?, &cfg)?]
            }
            "constructible-product" => {
                let phi = self.function(a(0))?;
                let psi = self.function(a(1))?;
                vec![verify_constructible_product(phi, psi, &cfg)?]
            }
            "segre-relation" => vec![verify_segre_relation(
                self.hypersurface(a(0))?,
                self.ideal(a(1))?,
                self.hypersurface(a(2))?,
                self.ideal(a(3))?,
                &cfg,
            )?],
            "bertini" => {
                let e: u32 = a(0)
                    .parse()
                    .ok()
                    .filter(|&e| e >= 1)
                    .ok_or_else(|| CommandError::Usage(format!("bertini degree must be a positive integer, got '{}'", a(0))))?;
                verify_bertini(e, self.ideal(a(1))?, &cfg)?
            }
            "complement" => vec![verify_complement(self.hypersurface(a(0))?, self.hypersurface(a(1))?, &cfg)?],
            "euler" => vec![euler_surface_identity(self.hypersurface(a(0))?, self.hypersurface(a(1))?, &cfg)?],
            "jacobian-splayed" => {
                let t = jacobian_splayed_test(self.hypersurface(a(0))?, self.hypersurface(a(1))?)?;
                return Ok(self.splayed_output(&t));
            }
            _ => unreachable!("identity validated above"),
        };
        self.reports(reports)
    }

    fn function(&self, name: &str) -> CmdResult<&'a chernclass::charclasses::ConstructibleFunction> {
        self.session
            .function(name)
            .ok_or_else(|| CommandError::Usage(format!("unknown function '{name}'")))
    }

    fn reports(&self, reports: Vec<VerificationReport>) -> CmdResult<Output> {
        let code = reports
            .iter()
            .map(|r| match r.outcome() {
                Outcome::Pass => EXIT_PASS,
                Outcome::Fail => EXIT_FAIL,
                Outcome::Inconclusive => EXIT_INCONCLUSIVE,
            })
            .max()
            .unwrap_or(EXIT_PASS);
        let text = match self.format {
            Format::Text => {
                let blocks: Vec<String> = reports
                    .iter()
                    .map(|r| format!("{r}\nprime source: {}\n", self.prime_source()))
                    .collect();
                blocks.join("\n")
            }
            Format::Json => {
                let mut values: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
                for v in &mut values {
                    v["prime_source"] = json!(self.prime_source());
                }
                if values.len() == 1 {
                    json_line(&values[0])
                } else {
                    json_line(&Value::Array(values))
                }
            }
        };
        Ok(Output { text, code })
    }

    fn splayed_output(&self, t: &SplayedTest) -> Output {
        let code = if t.equal { EXIT_PASS } else { EXIT_FAIL };
        let render = |b: &chernclass::groebner::GroebnerBasis| -> Vec<String> { b.gens().iter().map(|g| g.to_string()).collect() };
        let text = match self.format {
            Format::Text => format!(
                "identity: jacobian-splayed\nresult: {}\nsaturated J(F1*F2): ({})\nsaturated F1*J(F2) + F2*J(F1): ({})\nprime: {} ({})\nnote: {}\n",
                if t.equal { "equal" } else { "unequal" },
                render(&t.jacobian).join(", "),
                render(&t.leibniz).join(", "),
                self.session.field.modulus(),
                self.prime_source(),
                SplayedTest::NOTE
            ),
            Format::Json => json_line(&json!({
                "format_version": session::FORMAT_VERSION,
                "identity": "jacobian-splayed",
                "equal": t.equal,
                "jacobian": render(&t.jacobian),
                "leibniz": render(&t.leibniz),
                "prime": self.session.field.modulus(),
                "prime_source": self.prime_source(),
                "notes": [SplayedTest::NOTE],
            })),
        };
        Output { text, code }
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn identity_usage() -> String {
    let list: Vec<String> = IDENTITIES.iter().map(|(id, a)| format!("  verify {id} {a}")).collect();
    format!("expected one of:\n{}", list.join("\n"))
}
