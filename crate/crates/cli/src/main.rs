use clap::{Args, Parser, Subcommand, ValueEnum};
use conncat::analysis::{self, AnalysisOptions, AnalysisReport, Extras, Input, Subject, SuiteCheck, CHECKS};
use conncat::catalog::{self, CatalogObject};
use conncat::category::to_category_text;
use conncat::cones::DEFAULT_CONE_CAP;
use conncat::semigroup::{to_cayley_text, to_generators_text, GreensData};
use conncat::{Error, Exec};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

// Output goes through these so a closed pipe ends the program quietly.
macro_rules! emit {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! emitln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

const EXIT_INVARIANT: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "conncat", version, about = "Semigroups, normal categories and connected categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Caps {
    /// Maximum number of cone candidates examined.
    #[arg(long = "cap-cones", default_value_t = DEFAULT_CONE_CAP)]
    cap_cones: usize,
    /// Maximum semigroup order.
    #[arg(long = "cap-size", default_value_t = analysis::DEFAULT_SIZE_CAP)]
    cap_size: usize,
    /// Run the data-parallel loops sequentially.
    #[arg(long)]
    sequential: bool,
    /// Reserved; every computation is deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

impl Caps {
    fn options(&self) -> AnalysisOptions {
        let exec = if self.sequential { Exec::Sequential } else { Exec::Parallel };
        AnalysisOptions { cone_cap: self.cap_cones, size_cap: self.cap_size, exec }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the analysis pipeline on a file or `catalog:NAME`.
    Analyze {
        input: String,
        /// Require a named property; exit 1 when it fails.
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Leave timing out of the report.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Draw the egg-box diagram of a semigroup.
    Eggbox {
        input: String,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Text)]
        format: DiagramFormat,
        #[arg(long = "cap-size", default_value_t = analysis::DEFAULT_SIZE_CAP)]
        cap_size: usize,
    },
    /// List, build or verify catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the invariant checks over the catalog and any fixtures.
    VerifySuite {
        #[arg(default_value = "all")]
        scope: String,
        /// Extra input standing in for, or added to, the catalog.
        #[arg(long = "fixture", value_name = "NAME=PATH")]
        fixtures: Vec<String>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Convert a semigroup between the Cayley table and generator formats.
    Convert {
        input: String,
        #[arg(long, value_enum, default_value_t = SemigroupFormat::Cayley)]
        to: SemigroupFormat,
        #[arg(long = "cap-size", default_value_t = analysis::DEFAULT_SIZE_CAP)]
        cap_size: usize,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print the default entry names with descriptions.
    List,
    /// Print an entry in its text format.
    Build { name: String },
    /// Check entries against their expected properties.
    Verify { names: Vec<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramFormat {
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemigroupFormat {
    Cayley,
    Generators,
}

/// A failure mapped to an exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } | Error::SearchSpaceTooLarge(_) => EXIT_CAP,
            Error::Parse { .. }
            | Error::InvalidInput(_)
            | Error::IndexOutOfRange { .. }
            | Error::NonAssociative { .. }
            | Error::InvalidCategory(_)
            | Error::NotDownClosed(..) => EXIT_INPUT,
            _ => EXIT_INVARIANT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

/// A resolved input with its identity.
struct Loaded {
    source: String,
    sha256: String,
    input: Input,
}

fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn catalog_text(object: &CatalogObject) -> String {
    match object {
        CatalogObject::Semigroup(s) => to_cayley_text(s),
        CatalogObject::Category(sc) => to_category_text(&sc.category),
    }
}

fn load(spec: &str, base: Option<&Path>, size_cap: usize) -> Result<Loaded, Failure> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        let entry = catalog::build(name)?;
        let text = catalog_text(&entry.object);
        let input = match entry.object {
            CatalogObject::Semigroup(s) => {
                if s.size() > size_cap {
                    return Err(Error::CapExceeded { what: "semigroup order".into(), value: s.size(), cap: size_cap }.into());
                }
                Input::Semigroup(s)
            }
            CatalogObject::Category(sc) => Input::Category(sc.category),
        };
        return Ok(Loaded { source: spec.to_string(), sha256: sha256(text.as_bytes()), input });
    }
    let path = match base {
        Some(dir) if Path::new(spec).is_relative() => dir.join(spec),
        _ => PathBuf::from(spec),
    };
    let text = std::fs::read_to_string(&path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let input = analysis::parse_input(&text, size_cap).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })?;
    Ok(Loaded { source: spec.to_string(), sha256: sha256(text.as_bytes()), input })
}

fn load_semigroup(spec: &str, base: Option<&Path>, size_cap: usize) -> Result<conncat::semigroup::FiniteSemigroup, Failure> {
    match load(spec, base, size_cap)?.input {
        Input::Semigroup(s) => Ok(s),
        _ => Err(input_error(format!("{spec}: expected a semigroup"))),
    }
}

/// The subject and extras of an input, following a script to its source.
fn resolve(loaded: &Loaded, path: &str, size_cap: usize) -> Result<(Subject, Extras), Failure> {
    match &loaded.input {
        Input::Semigroup(s) => Ok((Subject::Semigroup(s.clone()), Extras::default())),
        Input::Category(c) => Ok((Subject::Category(c.clone()), Extras::default())),
        Input::Script(script) => {
            let base = Path::new(path).parent();
            let source = load(&script.source, base, size_cap)?;
            let subject = match source.input {
                Input::Semigroup(s) => Subject::Semigroup(s),
                Input::Category(c) => Subject::Category(c),
                Input::Script(_) => return Err(input_error("a script source cannot be another script")),
            };
            let mut extras = Extras { downset: script.downset.clone(), hom: None };
            if let Some(target) = &script.target {
                let Subject::Semigroup(s) = &subject else {
                    return Err(input_error("`target` needs a semigroup source"));
                };
                let t = load_semigroup(target, base, size_cap)?;
                extras.hom = Some((t, script.hom_map(s.size())?));
            }
            if extras.downset.is_some() && matches!(subject, Subject::Semigroup(_)) {
                return Err(input_error("`downset` needs a category source"));
            }
            Ok((subject, extras))
        }
    }
}

#[derive(Serialize)]
struct InputIdentity<'a> {
    source: &'a str,
    sha256: &'a str,
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    schema: u32,
    input: InputIdentity<'a>,
    checks: Vec<CheckOutcome>,
    report: &'a AnalysisReport,
}

#[derive(Serialize)]
struct CheckOutcome {
    name: String,
    passed: bool,
}

fn stage_line<T>(name: &str, stage: &analysis::Stage<T>, done: impl Fn(&T) -> String) -> String {
    match stage {
        analysis::Stage::Done { value } => format!("{name}: {}", done(value)),
        analysis::Stage::Skipped { reason } => format!("{name}: skipped ({reason})"),
        analysis::Stage::Failed { error, .. } => format!("{name}: FAILED ({error})"),
    }
}

fn report_text(source: &str, r: &AnalysisReport, checks: &[CheckOutcome]) -> String {
    let mut out = vec![format!("input: {source} ({})", r.kind)];
    if let Some(s) = &r.semigroup {
        let f = &s.flags;
        out.push(format!(
            "order {}, classes L={} R={} H={} D={}, {} idempotents",
            s.order,
            s.classes.l,
            s.classes.r,
            s.classes.h,
            s.classes.d,
            s.idempotents.len()
        ));
        let named = [
            ("regular", f.regular),
            ("left reductive", f.left_reductive),
            ("right reductive", f.right_reductive),
            ("L-unipotent", f.l_unipotent),
            ("inverse", f.inverse),
            ("band", f.band),
            ("monoid", f.monoid),
        ];
        let flags: Vec<String> = named.iter().map(|(n, v)| format!("{}{n}", if *v { "" } else { "not " })).collect();
        out.push(flags.join(", "));
        out.push(s.eggbox.to_text().trim_end().to_string());
    }
    if let Some(c) = &r.category {
        let failed: Vec<&str> = c.axioms.failures().map(|a| a.name.as_str()).collect();
        out.push(format!(
            "category: {} objects, {} morphisms, {}",
            c.objects.len(),
            c.morphisms,
            if failed.is_empty() { "normal".to_string() } else { format!("fails {}", failed.join(", ")) }
        ));
    }
    out.push(stage_line("cones", &r.cones, |c| format!("{} cones, {} R-classes", c.order, c.r_classes)));
    out.push(stage_line("connection", &r.connection, |c| {
        format!(
            "down-set {:?}, order {}, {}supported{}",
            c.downset,
            c.order,
            if c.supported { "" } else { "not " },
            match c.self_supported {
                Some(true) => ", self-supported",
                Some(false) => ", not self-supported",
                None => "",
            }
        )
    }));
    out.push(stage_line("roundtrip semigroup", &r.roundtrip_semigroup, |i| format!("isomorphism {:?}", i.map)));
    out.push(stage_line("roundtrip category", &r.roundtrip_category, |m| {
        format!("isomorphism on {} objects, {} morphisms", m.functor.objects.len(), m.functor.morphisms.len())
    }));
    if let Some(h) = &r.homomorphism {
        out.push(stage_line("homomorphism", h, |h| format!("{}natural", if h.natural { "" } else { "not " })));
    }
    for c in checks {
        out.push(format!("check {}: {}", c.name, if c.passed { "pass" } else { "FAIL" }));
    }
    if let Some(t) = &r.timing_ms {
        let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v:.1}ms")).collect();
        out.push(format!("timing: {}", parts.join(", ")));
    }
    out.join("\n") + "\n"
}

fn analyze(input: &str, checks: &[String], json: bool, no_timing: bool, caps: &Caps) -> Result<u8, Failure> {
    for c in checks {
        if !CHECKS.contains(&c.as_str()) {
            return Err(input_error(format!("unknown check `{c}`; expected one of {}", CHECKS.join(", "))));
        }
    }
    let opts = caps.options();
    let loaded = load(input, None, opts.size_cap)?;
    let (subject, extras) = resolve(&loaded, input, opts.size_cap)?;
    let report = analysis::analyze(&subject, &extras, &opts, !no_timing)?;
    let outcomes: Vec<CheckOutcome> =
        checks.iter().map(|c| CheckOutcome { name: c.clone(), passed: report.check(c) == Some(true) }).collect();
    if json {
        let doc = ReportDocument {
            schema: 1,
            input: InputIdentity { source: &loaded.source, sha256: &loaded.sha256 },
            checks: outcomes,
            report: &report,
        };
        emitln!("{}", serde_json::to_string_pretty(&doc).expect("report serializes"));
        return Ok(exit_for(&report, &doc.checks));
    }
    emit!("{}", report_text(&loaded.source, &report, &outcomes));
    Ok(exit_for(&report, &outcomes))
}

fn exit_for(report: &AnalysisReport, checks: &[CheckOutcome]) -> u8 {
    if report.invariant_failed() || checks.iter().any(|c| !c.passed) {
        EXIT_INVARIANT
    } else if report.cap_exceeded() {
        EXIT_CAP
    } else {
        0
    }
}

fn eggbox(input: &str, format: DiagramFormat, cap_size: usize) -> Result<u8, Failure> {
    let s = load_semigroup(input, None, cap_size)?;
    let e = analysis::eggbox(&s, &GreensData::compute(&s));
    match format {
        DiagramFormat::Text => emit!("{}", e.to_text()),
        DiagramFormat::Dot => emit!("{}", e.to_dot()),
    }
    Ok(0)
}

fn catalog_cmd(action: &CatalogAction) -> Result<u8, Failure> {
    match action {
        CatalogAction::List => {
            for name in catalog::names() {
                let entry = catalog::build(&name)?;
                let kind = if entry.semigroup().is_some() { "semigroup" } else { "category" };
                emitln!("{name:<6} {kind:<9} {}", entry.description);
            }
            Ok(0)
        }
        CatalogAction::Build { name } => {
            emit!("{}", catalog_text(&catalog::build(name)?.object));
            Ok(0)
        }
        CatalogAction::Verify { names } => {
            let names = if names.is_empty() { catalog::names() } else { names.clone() };
            let mut failed = false;
            for name in names {
                for c in catalog::verify_entry(&catalog::build(&name)?) {
                    failed |= !c.passed;
                    let status = if c.passed { "ok" } else { "FAIL" };
                    emitln!("{status:<4} {name} {} expected {} got {}", c.property, c.expected, c.actual);
                }
            }
            Ok(if failed { EXIT_INVARIANT } else { 0 })
        }
    }
}

fn verify_suite(scope: &str, fixtures: &[String], json: bool, caps: &Caps) -> Result<u8, Failure> {
    let opts = caps.options();
    let mut subjects = Vec::new();
    let mut load_failures = Vec::new();
    for f in fixtures {
        let (name, path) = f.split_once('=').ok_or_else(|| input_error(format!("fixture `{f}` is not NAME=PATH")))?;
        match load(path, None, opts.size_cap) {
            Ok(loaded) => match loaded.input {
                Input::Semigroup(s) => subjects.push((name.to_string(), Subject::Semigroup(s))),
                Input::Category(c) => subjects.push((name.to_string(), Subject::Category(c))),
                Input::Script(_) => return Err(input_error(format!("fixture `{name}` is a script"))),
            },
            // A fixture whose table is not associative fails that invariant
            // instead of aborting the suite.
            Err(_) if is_non_associative(path, opts.size_cap) => load_failures.push(SuiteCheck {
                scope: "semigroup-core",
                subject: name.to_string(),
                name: "associative",
                passed: false,
                detail: Some(non_associative_detail(path, opts.size_cap)),
            }),
            Err(e) => return Err(e),
        }
    }
    let mut checks = load_failures;
    checks.extend(analysis::verify_suite(scope, &subjects, opts.cone_cap, opts.exec).map_err(|e| input_error(e.to_string()))?);
    let failures: Vec<&SuiteCheck> = checks.iter().filter(|c| !c.passed).collect();
    if json {
        #[derive(Serialize)]
        struct SuiteDocument<'a> {
            schema: u32,
            scope: &'a str,
            checks: usize,
            failures: &'a [&'a SuiteCheck],
        }
        let doc = SuiteDocument { schema: 1, scope, checks: checks.len(), failures: &failures };
        emitln!("{}", serde_json::to_string_pretty(&doc).expect("suite serializes"));
    } else {
        for c in &failures {
            emitln!(
                "FAIL {}/{} {}: {}",
                c.scope,
                c.name,
                c.subject,
                c.detail.as_deref().unwrap_or("")
            );
        }
        emitln!("{} checks, {} failed", checks.len(), failures.len());
    }
    Ok(if failures.is_empty() { 0 } else { EXIT_INVARIANT })
}

fn parse_error(path: &str, size_cap: usize) -> Option<Error> {
    let text = std::fs::read_to_string(path).ok()?;
    analysis::parse_input(&text, size_cap).err()
}

fn is_non_associative(path: &str, size_cap: usize) -> bool {
    matches!(parse_error(path, size_cap), Some(Error::NonAssociative { .. }))
}

fn non_associative_detail(path: &str, size_cap: usize) -> String {
    parse_error(path, size_cap).map(|e| e.to_string()).unwrap_or_default()
}

fn convert(input: &str, to: SemigroupFormat, cap_size: usize) -> Result<u8, Failure> {
    let s = load_semigroup(input, None, cap_size)?;
    match to {
        SemigroupFormat::Cayley => emit!("{}", to_cayley_text(&s)),
        SemigroupFormat::Generators => emit!("{}", to_generators_text(&s)?),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { input, checks, json, no_timing, caps } => analyze(input, checks, *json, *no_timing, caps),
        Command::Eggbox { input, format, cap_size } => eggbox(input, *format, *cap_size),
        Command::Catalog { action } => catalog_cmd(action),
        Command::VerifySuite { scope, fixtures, json, caps } => verify_suite(scope, fixtures, *json, caps),
        Command::Convert { input, to, cap_size } => convert(input, *to, *cap_size),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
