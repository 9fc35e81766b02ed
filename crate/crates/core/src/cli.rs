//! Command-line front end.
//!
//! Every command prints JSON by default; `--pretty` (or `--format text`)
//! switches to human-readable tables and `lewis --dot` (or `--format dot`)
//! to Graphviz; `demo` prints text unless `--format json` is given. Exit
//! status is 0 on success, 1 when a verification fails and 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::burnside::{idempotent_gluck, idempotents, tables, BurnsideElement};
use crate::classify::{classify_iso, comparison_map, diagonal_check, free_functor, split};
use crate::error::{Error, Result};
use crate::grp::{builtin, FiniteGroup, GroupSpec, SubgroupId, SubgroupLattice, DEFAULT_CAP};
use crate::mackey::io::{from_json, to_json, GroupRef, MackeyJson};
use crate::mackey::{
    burnside_mackey, check_axioms, coconstant, constant, fp_functor, fq_functor, lewis_dot, zero, MackeyFunctor,
};
use crate::monoidal::{box_product, green_check, green_from_json, green_to_json, GreenJson, GreenStructure};
use crate::qlin::{QMatrix, WModule, Q};

#[derive(Parser, Debug)]
#[command(name = "mackey", version, about = "Rational Mackey functors for finite groups")]
struct Cli {
    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Registry directory; defaults to $MACKEY_WORKSPACE, then `.mackey`.
    #[arg(long, global = true, value_name = "DIR")]
    workspace: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect groups.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Rational Burnside rings.
    Burnside {
        #[command(subcommand)]
        cmd: BurnsideCmd,
    },
    /// Build, check and decompose Mackey functors.
    Mackey {
        #[command(subcommand)]
        cmd: MackeyCmd,
    },
    /// Regenerate the worked examples.
    Demo {
        #[arg(value_enum)]
        which: Demo,
        /// Prime for the `cp3` example.
        #[arg(long, default_value_t = 2)]
        p: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// Order, generators and subgroup counts.
    Info { group: String },
    /// Conjugacy classes of subgroups with normalizers and Weyl groups.
    Subgroups { group: String },
    /// Register a group spec file under a name in the workspace.
    Add {
        file: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum BurnsideCmd {
    /// Table of marks.
    Table {
        group: String,
        /// Subgroup whose Burnside ring is used; defaults to the whole group.
        #[arg(long)]
        ambient: Option<String>,
    },
    /// Primitive idempotents.
    Idempotents {
        group: String,
        #[arg(long)]
        ambient: Option<String>,
    },
    /// Restriction of an idempotent of the whole group to a subgroup.
    Restrict {
        group: String,
        /// Support of the idempotent.
        #[arg(long)]
        idempotent: String,
        /// Subgroup to restrict to.
        #[arg(long)]
        to: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Burnside,
    Constant,
    Coconstant,
    Zero,
    /// `F_H(V)`; needs `--subgroup`.
    Free,
    /// Fixed points of a `Q[G]`-module.
    Fp,
    /// Coinvariants of a `Q[G]`-module.
    Fq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModuleKind {
    Trivial,
    Regular,
}

#[derive(Subcommand, Debug)]
enum MackeyCmd {
    /// Build a functor and print it as JSON.
    New {
        #[arg(value_enum)]
        kind: Kind,
        group: String,
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long, value_enum, default_value = "trivial")]
        module: ModuleKind,
        /// Dimension of a trivial module or constant functor.
        #[arg(long, default_value_t = 1)]
        dim: usize,
        /// Also store the functor in the workspace under NAME.
        #[arg(long, value_name = "NAME")]
        save: Option<String>,
        /// With `burnside`, also write its multiplication to FILE.
        #[arg(long, value_name = "FILE")]
        green_out: Option<PathBuf>,
    },
    /// Verify the Mackey functor axioms.
    Check { functor: String },
    /// Weyl-group modules `V_H` per conjugacy class.
    Split { functor: String },
    /// The isomorphism with the assembled sum of free functors.
    Classify {
        functor: String,
        /// Print levelwise determinants.
        #[arg(long)]
        certify: bool,
    },
    /// Box product of two functors.
    Box {
        left: String,
        right: String,
        #[arg(long, value_name = "NAME")]
        save: Option<String>,
    },
    /// Verify a Green functor structure.
    GreenCheck { functor: String, mult: PathBuf },
    /// Lewis diagram.
    Lewis {
        functor: String,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Demo {
    C6,
    S4,
    Cp3,
}

/// What a command produced; the caller picks the rendering.
struct Output {
    json: Value,
    text: String,
    dot: Option<String>,
    ok: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, dot: None, ok: true }
    }
}

enum Failure {
    Usage(String),
    Input(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Runs the command line `args` (program name first) against the process
/// stdout and stderr and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli).and_then(|o| emit(&cli, &o, out).map(|()| o.ok)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {}", describe(&e));
            match e {
                Error::Verification(_) => 1,
                _ => 2,
            }
        }
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::Json(inner) => format!("malformed JSON: {inner}"),
        Error::CapExceeded { .. } => format!("{e} (raise it with --cap)"),
        other => other.to_string(),
    }
}

fn emit(cli: &Cli, o: &Output, out: &mut dyn Write) -> CliResult<()> {
    let wants_dot = cli.format == Some(Format::Dot) || matches!(cli.command, Command::Mackey { cmd: MackeyCmd::Lewis { dot: true, .. } });
    let body = if wants_dot {
        match &o.dot {
            Some(d) => d.clone(),
            None => return Err(Failure::Usage("DOT output is only available for `mackey lewis`".into())),
        }
    } else if cli.pretty
        || cli.format == Some(Format::Text)
        || (cli.format.is_none() && matches!(cli.command, Command::Demo { .. }))
    {
        o.text.clone()
    } else {
        let mut s = serde_json::to_string_pretty(&o.json).map_err(Error::from)?;
        s.push('\n');
        s
    };
    match &cli.out {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure::Input(e.into())),
        None => out.write_all(body.as_bytes()).map_err(|e| Failure::Input(e.into())),
    }
}

struct Workspace {
    root: PathBuf,
    cap: usize,
}

impl Workspace {
    fn new(cli: &Cli) -> Self {
        let root = cli
            .workspace
            .clone()
            .or_else(|| std::env::var_os("MACKEY_WORKSPACE").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(".mackey"));
        Workspace { root, cap: cli.cap }
    }

    fn registered_group(&self, name: &str) -> Option<GroupSpec> {
        let path = self.root.join("groups").join(format!("{name}.json"));
        let text = std::fs::read_to_string(path).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Registered name, then built-in name, then spec file.
    fn group(&self, arg: &str) -> Result<FiniteGroup> {
        if self.registered_group(arg).is_some() || builtin::by_name(arg).is_some() {
            return GroupRef::Name(arg.to_string()).resolve(self.cap, |n| self.registered_group(n));
        }
        let path = Path::new(arg);
        if path.is_file() {
            let spec: GroupSpec = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            return FiniteGroup::load(&spec, self.cap);
        }
        Err(Error::UnknownName(format!("group {arg}")))
    }

    fn lattice(&self, arg: &str) -> Result<Arc<SubgroupLattice>> {
        Ok(SubgroupLattice::new(self.group(arg)?))
    }

    /// File path, then registered functor name.
    fn functor_json(&self, arg: &str) -> Result<MackeyJson> {
        let path = Path::new(arg);
        let path = if path.is_file() {
            path.to_path_buf()
        } else {
            let p = self.root.join("functors").join(format!("{arg}.json"));
            if !p.is_file() {
                return Err(Error::UnknownName(format!("functor {arg}")));
            }
            p
        };
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    fn functor(&self, arg: &str) -> Result<Arc<MackeyFunctor>> {
        let json = self.functor_json(arg)?;
        let g = json.group.resolve(self.cap, |n| self.registered_group(n))?;
        let lat = SubgroupLattice::new(g);
        Ok(Arc::new(from_json(&json, &lat)?))
    }

    fn functor_over(&self, arg: &str, lat: &Arc<SubgroupLattice>) -> Result<Arc<MackeyFunctor>> {
        let json = self.functor_json(arg)?;
        let g = json.group.resolve(self.cap, |n| self.registered_group(n))?;
        if g.spec() != lat.group().spec() {
            return Err(Error::GroupMismatch);
        }
        Ok(Arc::new(from_json(&json, lat)?))
    }

    fn save(&self, dir: &str, name: &str, value: &impl serde::Serialize) -> Result<PathBuf> {
        let d = self.root.join(dir);
        std::fs::create_dir_all(&d)?;
        let path = d.join(format!("{name}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(value)? + "\n")?;
        Ok(path)
    }
}

fn execute(cli: &Cli) -> CliResult<Output> {
    let ws = Workspace::new(cli);
    match &cli.command {
        Command::Group { cmd } => group_cmd(&ws, cmd),
        Command::Burnside { cmd } => burnside_cmd(&ws, cmd),
        Command::Mackey { cmd } => mackey_cmd(&ws, cmd),
        Command::Demo { which, p } => {
            let text = match which {
                Demo::C6 => demo_c6()?,
                Demo::S4 => demo_s4()?,
                Demo::Cp3 => demo_cp3(*p, cli.cap)?,
            };
            let lines: Vec<&str> = text.lines().collect();
            Ok(Output::new(json!({ "demo": format!("{which:?}").to_lowercase(), "lines": lines }), text))
        }
    }
}

fn group_cmd(ws: &Workspace, cmd: &GroupCmd) -> CliResult<Output> {
    match cmd {
        GroupCmd::Info { group } => {
            let lat = ws.lattice(group)?;
            let g = lat.group();
            let gens: Vec<&str> = g.generators().iter().map(|&s| g.label(s)).collect();
            let json = json!({
                "name": g.name(),
                "order": g.order(),
                "abelian": g.is_abelian(),
                "generators": gens,
                "subgroups": lat.len(),
                "classes": lat.classes().len(),
            });
            let text = format!(
                "{}: order {}{}\ngenerators: {}\nsubgroups: {} in {} conjugacy classes\n",
                g.name(),
                g.order(),
                if g.is_abelian() { ", abelian" } else { "" },
                gens.join(", "),
                lat.len(),
                lat.classes().len()
            );
            Ok(Output::new(json, text))
        }
        GroupCmd::Subgroups { group } => {
            let lat = ws.lattice(group)?;
            let mut rows = Vec::new();
            let mut text = format!("{:<28} {:>5} {:>5} {:>6}  normalizer\n", "class", "order", "size", "|W|");
            for (c, members) in lat.classes().iter().enumerate() {
                let h = lat.class_rep(c);
                let n = lat.normalizer(h);
                rows.push(json!({
                    "name": lat.name(h),
                    "order": lat.order_of(h),
                    "class_size": members.len(),
                    "normalizer": lat.name(n),
                    "weyl_order": lat.weyl(h).order(),
                    "members": members.iter().map(|&k| lat.name(k)).collect::<Vec<_>>(),
                }));
                writeln!(
                    text,
                    "{:<28} {:>5} {:>5} {:>6}  {}",
                    lat.name(h),
                    lat.order_of(h),
                    members.len(),
                    lat.weyl(h).order(),
                    lat.name(n)
                )
                .unwrap();
            }
            Ok(Output::new(Value::Array(rows), text))
        }
        GroupCmd::Add { file, name } => {
            let spec: GroupSpec = serde_json::from_str(&std::fs::read_to_string(file).map_err(Error::from)?)
                .map_err(Error::from)?;
            let g = FiniteGroup::load(&spec, ws.cap)?;
            let name = name.clone().unwrap_or_else(|| g.name().to_string());
            let path = ws.save("groups", &name, &spec)?;
            let text = format!("registered {} (order {}) at {}\n", name, g.order(), path.display());
            Ok(Output::new(json!({ "name": name, "order": g.order(), "path": path }), text))
        }
    }
}

fn subgroup(lat: &SubgroupLattice, name: &Option<String>) -> Result<SubgroupId> {
    match name {
        Some(n) => lat.find_or_err(n),
        None => Ok(lat.whole()),
    }
}

fn element_text(e: &BurnsideElement) -> String {
    e.to_string()
}

fn burnside_cmd(ws: &Workspace, cmd: &BurnsideCmd) -> CliResult<Output> {
    match cmd {
        BurnsideCmd::Table { group, ambient } => {
            let lat = ws.lattice(group)?;
            let a = subgroup(&lat, ambient)?;
            let t = tables(&lat, a);
            let names: Vec<&str> = (0..t.len()).map(|i| lat.name(t.rep(i))).collect();
            let width = names.iter().map(|n| n.len()).max().unwrap_or(1).max(4);
            let label = width + lat.name(a).len() + 1;
            let mut text = format!("{:>label$} |", "");
            for n in &names {
                write!(text, " {n:>width$}").unwrap();
            }
            text.push('\n');
            for (i, n) in names.iter().enumerate() {
                write!(text, "{:>label$} |", format!("{}/{}", lat.name(a), n)).unwrap();
                for j in 0..t.len() {
                    write!(text, " {:>width$}", t.marks[(i, j)].to_string()).unwrap();
                }
                text.push('\n');
            }
            let json = json!({ "ambient": lat.name(a), "classes": names, "marks": t.marks.to_rows() });
            Ok(Output::new(json, text))
        }
        BurnsideCmd::Idempotents { group, ambient } => {
            let lat = ws.lattice(group)?;
            let a = subgroup(&lat, ambient)?;
            let t = tables(&lat, a);
            let mut json = serde_json::Map::new();
            let mut text = String::new();
            for (i, e) in idempotents(&lat, a).iter().enumerate() {
                let name = lat.name(t.rep(i));
                json.insert(name.to_string(), serde_json::to_value(e.to_json()).map_err(Error::from)?);
                writeln!(text, "e_{name} = {}", element_text(e)).unwrap();
            }
            Ok(Output::new(Value::Object(json), text))
        }
        BurnsideCmd::Restrict { group, idempotent, to } => {
            let lat = ws.lattice(group)?;
            let h = lat.find_or_err(idempotent)?;
            let a = lat.find_or_err(to)?;
            let e = idempotent_gluck(&lat, lat.whole(), h)?;
            let r = e.restrict(a)?;
            let t = tables(&lat, a);
            let marks = r.marks();
            let support: Vec<&str> =
                (0..t.len()).filter(|&j| !marks[j].is_zero()).map(|j| lat.name(t.rep(j))).collect();
            let sum = if support.is_empty() {
                "0".to_string()
            } else {
                support.iter().map(|n| format!("e_{n}")).collect::<Vec<_>>().join(" + ")
            };
            let text = format!(
                "R^{g}_{a} e_{h} = {}\n            = {sum}\n",
                element_text(&r),
                g = lat.name(lat.whole()),
                a = lat.name(a),
                h = lat.name(h)
            );
            let json = json!({ "element": r.to_json(), "idempotents": support });
            Ok(Output::new(json, text))
        }
    }
}

fn module_over(group: &Arc<FiniteGroup>, kind: ModuleKind, dim: usize) -> WModule {
    match kind {
        ModuleKind::Trivial => WModule::trivial(group.clone(), dim),
        ModuleKind::Regular => WModule::regular(group.clone()),
    }
}

fn mackey_cmd(ws: &Workspace, cmd: &MackeyCmd) -> CliResult<Output> {
    match cmd {
        MackeyCmd::New { kind, group, subgroup: sub, module, dim, save, green_out } => {
            let lat = ws.lattice(group)?;
            let g = lat.group().clone();
            let m = match kind {
                Kind::Burnside => burnside_mackey(&lat),
                Kind::Constant => constant(&lat, *dim),
                Kind::Coconstant => coconstant(&lat, *dim),
                Kind::Zero => zero(&lat),
                Kind::Free => {
                    let name = sub.as_ref().ok_or_else(|| Failure::Usage("`free` needs --subgroup".into()))?;
                    let h = lat.find_or_err(name)?;
                    free_functor(&lat, h, &module_over(&lat.weyl(h).group, *module, *dim))?
                }
                Kind::Fp => fp_functor(&lat, &module_over(&g, *module, *dim))?,
                Kind::Fq => fq_functor(&lat, &module_over(&g, *module, *dim))?,
            };
            if let Some(path) = green_out {
                if *kind != Kind::Burnside {
                    return Err(Failure::Usage("--green-out is only available for `burnside`".into()));
                }
                let s = serde_json::to_string_pretty(&green_to_json(&GreenStructure::burnside(&lat))).map_err(Error::from)?;
                std::fs::write(path, s + "\n").map_err(Error::from)?;
            }
            let json = to_json(&m);
            if let Some(name) = save {
                ws.save("functors", name, &json)?;
            }
            let text = format!("{m:?}\n");
            Ok(Output::new(serde_json::to_value(&json).map_err(Error::from)?, text))
        }
        MackeyCmd::Check { functor } => {
            let m = ws.functor(functor)?;
            let report = check_axioms(&m);
            let text = format!("{report}\n");
            let mut o = Output::new(
                json!({
                    "passed": report.passed(),
                    "violated": report.violated(),
                    "violations": report.violations,
                }),
                text,
            );
            o.ok = report.passed();
            Ok(o)
        }
        MackeyCmd::Split { functor } => {
            let m = ws.functor(functor)?;
            let s = split(&m)?;
            let lat = m.lattice();
            let mut parts = Vec::new();
            let mut text = String::new();
            for p in &s.parts {
                let w = p.module.group();
                let actions: serde_json::Map<String, Value> = w
                    .generators()
                    .iter()
                    .zip(p.module.generator_matrices())
                    .map(|(&x, a)| (w.label(x).to_string(), json!(a.to_rows())))
                    .collect();
                writeln!(text, "{}: dim {}, W of order {}", lat.name(p.subgroup), p.module.dim(), w.order()).unwrap();
                for (&x, a) in w.generators().iter().zip(p.module.generator_matrices()) {
                    if p.module.dim() > 0 {
                        writeln!(text, "  {} acts by\n{}", w.label(x), indent(&a.to_string(), 4)).unwrap();
                    }
                }
                parts.push(json!({
                    "subgroup": lat.name(p.subgroup),
                    "weyl_order": w.order(),
                    "dim": p.module.dim(),
                    "action": actions,
                }));
            }
            Ok(Output::new(Value::Array(parts), text))
        }
        MackeyCmd::Classify { functor, certify } => {
            let m = ws.functor(functor)?;
            let c = classify_iso(&m)?;
            let lat = m.lattice();
            let classes: Vec<Value> = c
                .split
                .parts
                .iter()
                .map(|p| json!({ "subgroup": lat.name(p.subgroup), "dim": p.module.dim() }))
                .collect();
            let mut text = String::from("M = ");
            let summands: Vec<String> = c
                .split
                .parts
                .iter()
                .filter(|p| p.module.dim() > 0)
                .map(|p| format!("F_{}(V^{})", lat.name(p.subgroup), p.module.dim()))
                .collect();
            text.push_str(if summands.is_empty() { "0" } else { "" });
            text.push_str(&summands.join(" + "));
            text.push('\n');
            let mut json = json!({ "classes": classes, "isomorphism": true });
            if *certify {
                let dets: serde_json::Map<String, Value> = lat
                    .ids()
                    .map(|k| (lat.name(k).to_string(), json!(c.determinants[k])))
                    .collect();
                for k in lat.ids() {
                    writeln!(text, "  det at {} = {}", lat.name(k), c.determinants[k]).unwrap();
                }
                json["determinants"] = Value::Object(dets);
            }
            Ok(Output::new(json, text))
        }
        MackeyCmd::Box { left, right, save } => {
            let m = ws.functor(left)?;
            let n = ws.functor_over(right, m.lattice())?;
            let b = box_product(&m, &n)?;
            let json = to_json(&b.functor);
            if let Some(name) = save {
                ws.save("functors", name, &json)?;
            }
            let text = format!("{:?}\n", b.functor);
            Ok(Output::new(serde_json::to_value(&json).map_err(Error::from)?, text))
        }
        MackeyCmd::GreenCheck { functor, mult } => {
            let m = ws.functor(functor)?;
            let gj: GreenJson = serde_json::from_str(&std::fs::read_to_string(mult).map_err(Error::from)?)
                .map_err(Error::from)?;
            let s = green_from_json(m, &gj)?;
            let report = green_check(&s);
            let mut text = if report.passed() { "all Green functor identities hold\n".to_string() } else { String::new() };
            for (law, detail) in &report.violations {
                writeln!(text, "{law:?}: {detail}").unwrap();
            }
            let mut o = Output::new(
                json!({ "passed": report.passed(), "violated": report.violated(), "violations": report.violations }),
                text,
            );
            o.ok = report.passed();
            Ok(o)
        }
        MackeyCmd::Lewis { functor, .. } => {
            let m = ws.functor(functor)?;
            let lat = m.lattice();
            let dot = lewis_dot(&m, lat.group().name());
            let nodes: Vec<Value> = lat
                .class_reps()
                .iter()
                .map(|&h| json!({ "subgroup": lat.name(h), "dim": m.dim(h), "weyl_order": lat.weyl(h).order() }))
                .collect();
            let mut text = String::new();
            for &h in lat.class_reps().iter().rev() {
                writeln!(text, "{:<24} dim {:>3}   |W| = {}", lat.name(h), m.dim(h), lat.weyl(h).order()).unwrap();
            }
            let mut o = Output::new(json!({ "nodes": nodes }), text);
            o.dot = Some(dot);
            Ok(o)
        }
    }
}

fn indent(s: &str, n: usize) -> String {
    let pad = " ".repeat(n);
    s.lines().map(|l| format!("{pad}{l}")).collect::<Vec<_>>().join("\n")
}

fn demo_c6() -> Result<String> {
    let lat = SubgroupLattice::new(builtin::cyclic(6));
    let g = lat.whole();
    let name = |k: SubgroupId| lat.name(k).to_string();
    let find = |n: &str| lat.find_or_err(n);
    let (c1, c2, c3) = (find("C1")?, find("C2")?, find("C3")?);
    let mut out = String::new();
    writeln!(out, "Rational Burnside ring of C6").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "Products").unwrap();
    let basis = |k| BurnsideElement::basis(&lat, g, k);
    for (a, b) in [(c1, c1), (c1, c3), (c1, c2), (c3, c3), (c2, c3), (c2, c2)] {
        let p = basis(a)?.mul(&basis(b)?)?;
        writeln!(out, "  [C6/{}] x [C6/{}] = {}", name(a), name(b), p).unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "Idempotents").unwrap();
    let es = idempotents(&lat, g);
    let t = tables(&lat, g);
    for (i, e) in es.iter().enumerate() {
        writeln!(out, "  e_{}^C6 = {}", name(t.rep(i)), e).unwrap();
    }
    let total = es.iter().try_fold(BurnsideElement::zero(&lat, g), |acc, e| acc.add(e))?;
    writeln!(out, "  sum = {total}").unwrap();
    for h in [c3, c2] {
        writeln!(out).unwrap();
        writeln!(out, "Idempotents of A(C6/{})", name(h)).unwrap();
        let th = tables(&lat, h);
        for (i, e) in idempotents(&lat, h).iter().enumerate() {
            writeln!(out, "  e_{}^{} = {}", name(th.rep(i)), name(h), e).unwrap();
        }
    }
    writeln!(out).unwrap();
    writeln!(out, "Burnside Mackey functor").unwrap();
    let a = Arc::new(burnside_mackey(&lat));
    for h in lat.class_reps().into_iter().rev() {
        writeln!(out, "  A(C6/{}) has dimension {}", name(h), a.dim(h)).unwrap();
    }
    let c = classify_iso(&a)?;
    let parts: Vec<String> = c
        .split
        .parts
        .iter()
        .rev()
        .map(|p| format!("F_{}(Q^{})", name(p.subgroup), p.module.dim()))
        .collect();
    writeln!(out, "  A = {}", parts.join(" + ")).unwrap();
    writeln!(out, "  levelwise determinants: {}", join_q(&c.determinants)).unwrap();
    Ok(out)
}

fn join_q(qs: &[Q]) -> String {
    qs.iter().map(Q::to_string).collect::<Vec<_>>().join(", ")
}

fn coset_set(lat: &SubgroupLattice, cosets: &[usize], k: SubgroupId) -> String {
    let g = lat.group();
    let k_name = "K";
    let items: Vec<String> = cosets
        .iter()
        .map(|&x| if x == g.identity() { k_name.to_string() } else { format!("{}{}", g.label(x), k_name) })
        .collect();
    let _ = k;
    format!("{{{}}}", items.join(", "))
}

fn demo_s4() -> Result<String> {
    let g = builtin::symmetric(4);
    let t12 = g.find_label("(1 2)").ok_or_else(|| Error::UnknownName("(1 2)".into()))?;
    let t34 = g.find_label("(3 4)").ok_or_else(|| Error::UnknownName("(3 4)".into()))?;
    let lat = SubgroupLattice::new(g);
    let k = lat.generated(&[t12]);
    let h = lat.generated(&[t12, t34]);
    let mut out = String::new();
    writeln!(out, "G = S4, K = {}, H = {}", lat.name(k), lat.name(h)).unwrap();
    writeln!(out).unwrap();
    let n = lat.normalizer(k);
    writeln!(out, "N_G K = {}{}", lat.name(n), if n == h { " = H" } else { "" }).unwrap();
    writeln!(out, "|W_G K| = {}, |W_H K| = {}", lat.weyl(k).order(), lat.weyl_in(h, k).order()).unwrap();
    writeln!(out, "(G/K)^K = {}", coset_set(&lat, &lat.fixed_cosets(k, k), k)).unwrap();
    writeln!(out, "(G/H)^K = {}", coset_set(&lat, &lat.fixed_cosets(h, k), h).replace('K', "H")).unwrap();
    writeln!(out).unwrap();
    let w = lat.weyl(k).group.clone();
    let f = free_functor(&lat, k, &WModule::regular(w))?;
    writeln!(out, "M = F_K(Q[W_G K])").unwrap();
    writeln!(out, "  dim M(G/H) = {}, dim M(G/K) = {}", f.dim(h), f.dim(k)).unwrap();
    let ir = f.ind(k, h) * f.res(h, k);
    writeln!(out, "  rank of I_K^H R_K^H on M(G/H) = {}", ir.rank()).unwrap();
    let d = diagonal_check(&f, k, h)?;
    writeln!(out, "  dim e_K^H M(G/H) = {}", d.left_dim).unwrap();
    writeln!(out, "  dim (e_K^K M(G/K))^(W_H K) = {}", d.right_dim).unwrap();
    writeln!(out, "  map induced by R_K^H: {}", matrix_inline(&d.matrix)).unwrap();
    writeln!(out, "  isomorphism: {}", if d.isomorphism { "yes" } else { "no" }).unwrap();
    if !d.isomorphism {
        return Err(Error::Verification("the restriction-induced map is not an isomorphism".into()));
    }
    Ok(out)
}

fn matrix_inline(m: &QMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(Q::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn demo_cp3(p: usize, cap: usize) -> Result<String> {
    if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let order = p * p * p;
    if order > cap {
        return Err(Error::CapExceeded { order, cap });
    }
    let lat = SubgroupLattice::new(builtin::cyclic(order));
    let m = Arc::new(burnside_mackey(&lat));
    // the chain C1 < C_p < C_p² < C_p³ in lattice order
    let chain: Vec<SubgroupId> = lat.ids().collect();
    let mut out = String::new();
    let top = lat.name(lat.whole()).to_string();
    writeln!(out, "G = {top}, M = A_Q").unwrap();
    writeln!(out).unwrap();
    let split = split(&m)?;
    for (i, part) in split.parts.iter().enumerate() {
        writeln!(
            out,
            "V_{i} = e_{s} M({top}/{s}): dim {}, acted on by W = {top}/{s} of order {}",
            part.module.dim(),
            part.module.group().order(),
            s = lat.name(part.subgroup)
        )
        .unwrap();
    }
    writeln!(out).unwrap();
    for (j, &h) in chain.iter().enumerate().rev() {
        let mut terms = Vec::new();
        let mut dims = Vec::new();
        for (i, &k) in chain.iter().enumerate().take(j + 1).rev() {
            let d = diagonal_check(&m, k, h)?;
            if !d.isomorphism {
                return Err(Error::Verification(format!("diagonal map at {} > {}", lat.name(h), lat.name(k))));
            }
            terms.push(if i == j { format!("V_{i}") } else { format!("V_{i}^({}/{})", lat.name(h), lat.name(k)) });
            dims.push(d.right_dim.to_string());
        }
        writeln!(
            out,
            "M({top}/{}) = {}   dim {} = {}",
            lat.name(h),
            terms.join(" + "),
            m.dim(h),
            dims.join(" + ")
        )
        .unwrap();
    }
    writeln!(out).unwrap();
    let c = classify_iso(&m)?;
    let summands: Vec<String> =
        split.parts.iter().map(|q| format!("F_{}(V_{})", lat.name(q.subgroup), lat.class_of(q.subgroup))).collect();
    writeln!(out, "M = {}", summands.join(" + ")).unwrap();
    writeln!(out, "levelwise determinants: {}", join_q(&c.determinants)).unwrap();
    for &h in &chain {
        let kappa = comparison_map(&m, h)?;
        writeln!(out, "  rank of the {} comparison map per level: {:?}", lat.name(h), kappa.ranks()).unwrap();
    }
    Ok(out)
}
