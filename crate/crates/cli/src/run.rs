//! Command dispatch: input loading, analyses and report assembly.

use std::path::Path;

use bondkit::bonds::{BondAnalysis, Settings};
use bondkit::classify::goldberg_verdict;
use bondkit::curve::ConfigCurve;
use bondkit::diagram::build_diagram;
use bondkit::fixtures::fixture;
use bondkit::linkage::Linkage;
use bondkit::motion::closure_check;
use bondkit::{rat, Error, Rational};
use serde_json::Value;

use crate::output::{emit, error_line};
use crate::{Args, Command, Format};

/// Parameter values at which closure is checked pointwise.
fn closure_samples() -> Vec<Rational> {
    vec![rat(-1, 1), rat(0, 1), rat(1, 3), rat(2, 1)]
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() || matches!(e, Error::Precondition(_)) { 2 } else { 1 };
        Self { code, message: e.to_string() }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

struct Loaded {
    name: Option<String>,
    linkage: Linkage,
    curve: Option<ConfigCurve>,
    /// Why the curve is unavailable for a built-in fixture.
    unsupported: Option<String>,
}

impl Loaded {
    fn curve(&self) -> Outcome<&ConfigCurve> {
        match (&self.curve, &self.unsupported) {
            (Some(c), _) => Ok(c),
            (None, Some(reason)) => Err(Error::UnsupportedConfiguration(format!("bonds are not computed: {reason}")).into()),
            (None, None) => Err(Failure::input("this command needs a configuration curve file")),
        }
    }
}

fn read(path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: bondkit::Result<T>) -> Outcome<T> {
    r.map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn load(args: &Args) -> Outcome<Loaded> {
    if let Some(name) = &args.fixture {
        let f = fixture(name).ok_or_else(|| Failure::input(format!("unknown fixture {name}")))?;
        let linkage = f.linkage()?;
        let curve = f.curve().transpose()?;
        let unsupported = curve.is_none().then(|| {
            f.expected()["reason"].as_str().unwrap_or("no configuration curve available").to_string()
        });
        return Ok(Loaded { name: Some(f.name.to_string()), linkage, curve, unsupported });
    }
    let lpath = args.linkage.as_deref().expect("clap requires a linkage path");
    let linkage = with_path(lpath, Linkage::from_json(&read(lpath)?))?;
    let curve = match &args.curve {
        Some(p) => Some(with_path(p, ConfigCurve::from_json(&read(p)?))?),
        None => None,
    };
    Ok(Loaded { name: linkage.name.clone(), linkage, curve, unsupported: None })
}

fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn settings(args: &Args) -> Outcome<Settings> {
    if args.order == 0 {
        return Err(Failure::input("--order must be at least 1"));
    }
    if args.precision < 64 {
        return Err(Failure::input("--precision must be at least 64 bits"));
    }
    Ok(Settings { order: args.order, precision: args.precision })
}

fn format_for(cmd: &Command, args: &Args) -> Outcome<Format> {
    let default = if matches!(cmd, Command::Diagram(_)) { Format::Dot } else { Format::Text };
    let f = args.format.unwrap_or(default);
    if f == Format::Dot && !matches!(cmd, Command::Diagram(_)) {
        return Err(Failure::input("--format dot is only available for the diagram command"));
    }
    Ok(f)
}

/// A finished report and whether the analysis it describes succeeded.
struct Report {
    body: String,
    text: bool,
    failure: Option<Failure>,
}

fn verify(l: &Loaded, s: Settings) -> Outcome<(Value, String, bool)> {
    let r = closure_check(&l.linkage, l.curve()?, &closure_samples(), s.order, s.precision)?;
    Ok((r.to_json_value(l.name.as_deref()), r.to_text(), r.ok()))
}

fn analysis(l: &Loaded, s: Settings) -> Outcome<BondAnalysis> {
    let c = l.curve()?;
    let r = closure_check(&l.linkage, c, &[], s.order, s.precision)?;
    r.require()?;
    Ok(BondAnalysis::run(&l.linkage, c, s)?)
}

fn execute(cmd: &Command, args: &Args) -> Outcome<Report> {
    let fmt = format_for(cmd, args)?;
    let s = settings(args)?;
    let l = load(args)?;
    let name = l.name.as_deref();
    let non_canonical = l.linkage.non_canonical_joints();
    if !non_canonical.is_empty() {
        eprintln!("bondkit: note: joints {non_canonical:?} are not canonically signed; coordinates are kept as given");
    }
    let text = fmt == Format::Text;
    let body = match cmd {
        Command::Verify(_) => {
            let (v, t, ok) = verify(&l, s)?;
            let body = if text { t } else { json(&v) };
            let failure = (!ok).then(|| Failure { code: 1, message: "closure condition violated".into() });
            return Ok(Report { body, text, failure });
        }
        Command::Bonds(_) => {
            let a = analysis(&l, s)?;
            if text { a.to_text() } else { json(&to_value(&a.report(name))) }
        }
        Command::Distances(_) => {
            let a = analysis(&l, s)?;
            if text { a.aggregate_text() } else { json(&a.aggregate_json(name)) }
        }
        Command::Diagram(_) => {
            let d = build_diagram(&analysis(&l, s)?).with_name(name);
            match fmt {
                Format::Dot => d.to_dot(),
                Format::Json => json(&d.to_json_value()),
                Format::Text => d.to_text(),
            }
        }
        Command::Classify(_) => {
            let r = goldberg_verdict(&l.linkage, l.curve()?, s)?;
            if text { r.to_text() } else { json(&to_value(&r)) }
        }
        Command::All(_) => return all(&l, s, text),
    };
    Ok(Report { body, text, failure: None })
}

fn all(l: &Loaded, s: Settings, text: bool) -> Outcome<Report> {
    let name = l.name.as_deref();
    let (v, t, ok) = verify(l, s)?;
    let mut doc = serde_json::Map::new();
    let mut out = format!("== verify ==\n{t}");
    doc.insert("verify".into(), v);
    let finish = |doc: serde_json::Map<String, Value>, out: String, failure: Option<Failure>| Report {
        body: if text { out } else { json(&Value::Object(doc)) },
        text,
        failure,
    };
    if !ok {
        return Ok(finish(doc, out, Some(Failure { code: 1, message: "closure condition violated".into() })));
    }
    let a = BondAnalysis::run(&l.linkage, l.curve()?, s)?;
    doc.insert("bonds".into(), to_value(&a.report(name)));
    out += &format!("== bonds ==\n{}", a.to_text());
    doc.insert("distances".into(), a.aggregate_json(name));
    out += &format!("== distances ==\n{}", a.aggregate_text());
    let d = build_diagram(&a).with_name(name);
    doc.insert("diagram".into(), d.to_json_value());
    out += &format!("== diagram ==\n{}", d.to_text());
    if l.linkage.n() == 5 {
        let r = goldberg_verdict(&l.linkage, l.curve()?, s)?;
        doc.insert("classify".into(), to_value(&r));
        out += &format!("== classify ==\n{}", r.to_text());
    }
    Ok(finish(doc, out, None))
}

fn args_of(cmd: &Command) -> &Args {
    match cmd {
        Command::Verify(a)
        | Command::Bonds(a)
        | Command::Distances(a)
        | Command::Diagram(a)
        | Command::Classify(a)
        | Command::All(a) => a,
    }
}

/// Runs one command and returns the process exit status.
pub fn main(cmd: Command) -> u8 {
    let args = args_of(&cmd);
    let report = match execute(&cmd, args) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("{}", error_line(&f.message));
            return f.code;
        }
    };
    if let Err(e) = emit(&report.body, report.text, args.out.as_deref()) {
        eprintln!("{}", error_line(&format!("cannot write output: {e}")));
        return 2;
    }
    match report.failure {
        Some(f) => {
            eprintln!("{}", error_line(&f.message));
            f.code
        }
        None => 0,
    }
}
