use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use symmetry_atlas::atomic::{
    address_to_z, block_of, build_table, family_report, ground_configuration, rare_gas_sequence, render, z_to_address,
};
use symmetry_atlas::hadron::{
    classify_multiplet, color_wavefunction, compose, eka_predict, format_wavefunction, gluon_count, parse_members,
    Prediction,
};
use symmetry_atlas::ratio;
use symmetry_atlas::repcore::{
    complete_set_size, racah_missing_labels, so42_h_truncated, so4_branch, su3_dim, su3_isospin_multiplets,
    GroupProfile,
};
use symmetry_atlas::{
    Address, FillingRule, HadronComposition, HalfInt, Layout, MultipletMember, QuarkTable, Registry, So4Irrep, Su3Irrep,
};

use crate::{Cli, Command, HadronCommand, Output, RepCommand, SmCommand};

pub enum CliError {
    /// Bad argument values that the parser could not catch.
    Usage(String),
    Domain(Box<dyn std::error::Error>),
}

impl<E: std::error::Error + 'static> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Domain(Box::new(e))
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

struct Data<'a> {
    dir: Option<&'a Path>,
}

impl Data<'_> {
    fn registry(&self) -> Result<Registry> {
        Ok(match self.dir {
            Some(dir) => Registry::from_dir(dir)?,
            None => Registry::bundled(),
        })
    }

    fn quarks(&self) -> Result<QuarkTable> {
        Ok(match self.dir {
            Some(dir) => QuarkTable::from_dir(dir)?,
            None => QuarkTable::bundled(),
        })
    }
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let data = Data { dir: cli.data_dir.as_deref() };
    match &cli.command {
        Command::Table { layout, zmax } => table(&data, layout, *zmax),
        Command::Config { z, rule } => config(*z, rule),
        Command::Address(args) => match (&args.z, &args.nljm) {
            (Some(z), _) => address(z_to_address(*z)?),
            (None, Some(v)) => {
                let [n, l, two_j, two_mj] = v[..] else { return Err(usage("--nljm takes four values")) };
                if n < 1 || l < 0 {
                    return Err(usage("n must be positive and l non-negative"));
                }
                address(Address::from_twice(n as u32, l as u32, two_j, two_mj)?)
            }
            (None, None) => Err(usage("pass --z or --nljm")),
        },
        Command::Element { z } => element(&data, *z),
        Command::Family { z } => family(&data, *z),
        Command::Raregases => Ok(raregases()),
        Command::Rep(cmd) => rep(cmd),
        Command::Hadron(cmd) => hadron(&data, cmd),
        Command::Sm(SmCommand::Census) => census(&data),
        Command::Sm(SmCommand::Partner { name }) => partner(&data, name),
        Command::History { year } => history(&data, *year),
    }
}

fn table(data: &Data, layout: &str, zmax: u32) -> Result<Output> {
    let layout: Layout = layout.parse().map_err(|_| {
        usage(format!("unknown layout {layout:?}; expected one of madelung, so42, scerri, conventional18"))
    })?;
    let grid = build_table(layout, zmax)?;
    let registry = data.registry()?;
    let json: Value = serde_json::to_value(render::document(&grid, Some(&registry)))?;
    Ok(Output { text: render::to_text(&grid, Some(&registry)), csv: render::to_csv(&grid, Some(&registry)), json })
}

fn config(z: u32, rule: &str) -> Result<Output> {
    let rule: FillingRule =
        rule.parse().map_err(|_| usage(format!("unknown rule {rule:?}; expected madelung, enl or en")))?;
    let c = ground_configuration(z, rule)?;
    let rows: Vec<Vec<String>> = c
        .entries
        .iter()
        .map(|e| vec![e.shell.to_string(), e.shell.n().to_string(), e.shell.l().to_string(), e.occupancy.to_string()])
        .collect();
    let entries: Vec<Value> = c
        .entries
        .iter()
        .map(|e| json!({"shell": e.shell.to_string(), "n": e.shell.n(), "l": e.shell.l(), "occupancy": e.occupancy}))
        .collect();
    Ok(Output::new(
        format!("Z={z} ({rule}): {c}"),
        &["shell", "n", "l", "occupancy"],
        &rows,
        json!({"Z": z, "rule": rule.to_string(), "configuration": c.to_string(), "entries": entries}),
    ))
}

fn address(a: Address) -> Result<Output> {
    let z = address_to_z(a)?;
    let pos = block_of(z)?;
    let (two_j, two_mj) = (a.j.twice(), a.mj.twice());
    let text = format!(
        "Z={z} n={} l={} 2j={two_j} 2mj={two_mj} block={} subblock={} position={}/{}",
        a.n, a.l, pos.shell, pos.subblock, pos.position, pos.length
    );
    let row = vec![
        z.to_string(),
        a.n.to_string(),
        a.l.to_string(),
        two_j.to_string(),
        two_mj.to_string(),
        pos.shell.to_string(),
        pos.subblock.to_string(),
        pos.position.to_string(),
        pos.length.to_string(),
    ];
    Ok(Output::new(
        text,
        &["Z", "n", "l", "two_j", "two_mj", "block", "subblock", "position", "length"],
        &[row],
        json!({
            "Z": z, "n": a.n, "l": a.l, "two_j": two_j, "two_mj": two_mj,
            "block": pos.shell.to_string(), "subblock": pos.subblock.as_str(),
            "position": pos.position, "length": pos.length,
        }),
    ))
}

fn element(data: &Data, z: u32) -> Result<Output> {
    let registry = data.registry()?;
    let e = registry.element(z)?;
    let year = e.discovery_year.map(|y| y.to_string()).unwrap_or_default();
    let status = serde_json::to_value(e.status)?.as_str().unwrap_or_default().to_string();
    let mut text = format!("{} {} {}", e.z, e.symbol, e.name);
    if !year.is_empty() {
        let _ = write!(text, ", discovered {year}");
    }
    let _ = write!(text, " ({status})");
    Ok(Output::new(
        text,
        &["Z", "symbol", "name", "discovery_year", "status"],
        &[vec![e.z.to_string(), e.symbol.clone(), e.name.clone(), year, status]],
        serde_json::to_value(e)?,
    ))
}

fn family(data: &Data, z: u32) -> Result<Output> {
    let registry = data.registry()?;
    let r = family_report(z, Some(&registry))?;
    let series = r.series.map(|s| serde_json::to_value(s).map(|v| v.as_str().unwrap_or_default().to_string()));
    let series = series.transpose()?.unwrap_or_default();
    let mut text = String::new();
    let _ = writeln!(text, "Z: {}", r.z);
    if let Some(symbol) = &r.symbol {
        let _ = writeln!(text, "symbol: {symbol}");
    }
    let _ = writeln!(
        text,
        "address: n={} l={} 2j={} 2mj={}",
        r.address.n,
        r.address.l,
        r.address.j.twice(),
        r.address.mj.twice()
    );
    let _ = writeln!(text, "block: {} {} {} of {}", r.shell, r.subblock, r.position, r.subblock_length);
    let _ = writeln!(text, "family: {}", r.family);
    if !series.is_empty() {
        let _ = writeln!(text, "series: {}", series.replace('_', " "));
    }
    let _ = writeln!(text, "homologue: {}", if r.has_homologue { "yes" } else { "none" });
    for note in &r.notes {
        let _ = writeln!(text, "note: {note}");
    }
    let row = vec![
        r.z.to_string(),
        r.symbol.clone().unwrap_or_default(),
        r.shell.to_string(),
        r.subblock.to_string(),
        r.position.to_string(),
        r.subblock_length.to_string(),
        r.family.clone(),
        series,
        r.has_homologue.to_string(),
        r.notes.join("; "),
    ];
    Ok(Output::new(
        text,
        &["Z", "symbol", "block", "subblock", "position", "length", "family", "series", "has_homologue", "notes"],
        &[row],
        serde_json::to_value(&r)?,
    ))
}

fn raregases() -> Output {
    let zs = rare_gas_sequence();
    let deltas: Vec<Option<u32>> = std::iter::once(None).chain(zs.windows(2).map(|w| Some(w[1] - w[0]))).collect();
    let text = format!(
        "Z: {}\ndelta Z: {}",
        zs.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
        deltas.iter().flatten().map(u32::to_string).collect::<Vec<_>>().join(" ")
    );
    let rows: Vec<Vec<String>> = zs
        .iter()
        .zip(&deltas)
        .map(|(z, d)| vec![z.to_string(), d.map(|d| d.to_string()).unwrap_or_default()])
        .collect();
    let json = json!({"Z": zs, "delta": deltas.iter().flatten().collect::<Vec<_>>()});
    Output::new(text, &["Z", "delta"], &rows, json)
}

fn rep(cmd: &RepCommand) -> Result<Output> {
    Ok(match *cmd {
        RepCommand::Su3Dim { p, q } => {
            let d = su3_dim(p, q);
            Output::new(
                d.to_string(),
                &["p", "q", "dim"],
                &[vec![p.to_string(), q.to_string(), d.to_string()]],
                json!({"p": p, "q": q, "dim": d}),
            )
        }
        RepCommand::Su3Content { p, q } => su3_content(Su3Irrep::new(p, q)),
        RepCommand::So4Branch { twice_j } => {
            let rep = So4Irrep::diagonal(twice_j);
            let content = so4_branch(rep)?;
            let j = HalfInt::from_twice(twice_j as i32);
            let parts: Vec<String> = content.iter().map(|l| format!("({})", l.l)).collect();
            let rows: Vec<Vec<String>> = content.iter().map(|l| vec![l.l.to_string(), l.dim().to_string()]).collect();
            let items: Vec<Value> = content.iter().map(|l| json!({"l": l.l, "dim": l.dim()})).collect();
            Output::new(
                format!("({j},{j}) = {}", parts.join(" + ")),
                &["l", "dim"],
                &rows,
                json!({"j": j.to_string(), "dim": rep.dim(), "content": items}),
            )
        }
        RepCommand::So42H { nmax } => {
            let reps = so42_h_truncated(nmax)?;
            let total: u64 = reps.iter().map(|r| r.dim()).sum();
            let parts: Vec<String> = reps.iter().map(|r| format!("({},{})", r.j1(), r.j2())).collect();
            let rows: Vec<Vec<String>> = reps
                .iter()
                .enumerate()
                .map(|(i, r)| vec![(i + 1).to_string(), r.j1().to_string(), r.dim().to_string()])
                .collect();
            let items: Vec<Value> = reps
                .iter()
                .enumerate()
                .map(|(i, r)| json!({"n": i + 1, "j": r.j1().to_string(), "dim": r.dim()}))
                .collect();
            Output::new(
                format!("h({nmax}) = {}\ndim = {total}", parts.join(" + ")),
                &["n", "j", "dim"],
                &rows,
                json!({"nmax": nmax, "dim": total, "content": items}),
            )
        }
        RepCommand::Racah { order, rank, casimirs } => {
            let g = GroupProfile::new("custom", order, rank, casimirs)?;
            let missing = racah_missing_labels(&g)?;
            let complete = complete_set_size(&g)?;
            Output::new(
                format!("missing labels: {missing}\ncomplete set: {rank} + {casimirs} + {missing} = {complete}"),
                &["order", "rank", "casimirs", "missing_labels", "complete_set"],
                &[vec![
                    order.to_string(),
                    rank.to_string(),
                    casimirs.to_string(),
                    missing.to_string(),
                    complete.to_string(),
                ]],
                json!({"order": order, "rank": rank, "casimirs": casimirs, "missing_labels": missing, "complete_set": complete}),
            )
        }
    })
}

fn su3_content(rep: Su3Irrep) -> Output {
    let multiplets = su3_isospin_multiplets(rep);
    let mut counts: BTreeMap<HalfInt, u32> = BTreeMap::new();
    for m in &multiplets {
        *counts.entry(m.isospin.j()).or_default() += 1;
    }
    let parts: Vec<String> =
        counts.iter().map(|(j, &k)| if k == 1 { format!("({j})") } else { format!("{k} ({j})") }).collect();
    let rows: Vec<Vec<String>> = multiplets
        .iter()
        .map(|m| vec![m.isospin.j().to_string(), ratio::format(m.hypercharge()), m.isospin.dim().to_string()])
        .collect();
    let items: Vec<Value> = multiplets
        .iter()
        .map(|m| json!({"I": m.isospin.j().to_string(), "Y": ratio::format(m.hypercharge()), "dim": m.isospin.dim()}))
        .collect();
    Output::new(
        format!("{} = {}", rep.name(), parts.join(" + ")),
        &["I", "Y", "dim"],
        &rows,
        json!({"p": rep.p, "q": rep.q, "name": rep.name(), "dim": rep.dim(), "content": items}),
    )
}

fn parse_composition(data: &Data, flavors: &[String]) -> Result<HadronComposition> {
    let table = data.quarks()?;
    Ok(HadronComposition::new(table.parse_flavors(&flavors.join(" "))?)?)
}

fn read_members(path: &Path) -> Result<Vec<MultipletMember>> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Domain(format!("{}: {e}", path.display()).into()))?;
    Ok(parse_members(&text)?)
}

fn mass(m: f64) -> Value {
    json!((m * 10.0).round() / 10.0)
}

fn hadron(data: &Data, cmd: &HadronCommand) -> Result<Output> {
    match cmd {
        HadronCommand::Compose { flavors } => {
            let c = parse_composition(data, flavors)?;
            let n = compose(&c);
            let fields = [
                ratio::format(n.baryon_number),
                ratio::format(n.charge),
                ratio::format(n.hypercharge),
                n.isospin_z.to_string(),
                n.strangeness.to_string(),
            ];
            let text = format!("{c}: B={} Q={} Y={} I3={} S={}", fields[0], fields[1], fields[2], fields[3], fields[4]);
            let mut row = vec![c.to_string()];
            row.extend(fields.iter().cloned());
            let shape = serde_json::to_value(c.shape())?;
            let mut json = json!({"constituents": c.to_string(), "shape": shape});
            if let (Value::Object(obj), Value::Object(numbers)) = (&mut json, serde_json::to_value(n)?) {
                obj.extend(numbers);
            }
            Ok(Output::new(text, &["constituents", "B", "Q", "Y", "I3", "S"], &[row], json))
        }
        HadronCommand::Color { flavors } => {
            let c = parse_composition(data, flavors)?;
            let terms = color_wavefunction(&c);
            let rows: Vec<Vec<String>> = terms.iter().map(|t| vec![t.coefficient.to_string(), t.to_string()]).collect();
            let items: Vec<Value> = terms
                .iter()
                .map(|t| json!({"coefficient": t.coefficient, "factors": t.factors.iter().map(ToString::to_string).collect::<Vec<_>>()}))
                .collect();
            Ok(Output::new(
                format_wavefunction(&terms),
                &["coefficient", "factors"],
                &rows,
                json!({"constituents": c.to_string(), "terms": items}),
            ))
        }
        HadronCommand::Classify { file } => {
            let members = read_members(file)?;
            let c = classify_multiplet(&members)?;
            let names: Vec<&str> = c.matches.iter().map(|m| m.name.as_str()).collect();
            let mut text = format!(
                "spin {} parity {} B={}\nSU(2) multiplet sizes: {}\nmatches: {}\n",
                c.spin,
                if c.parity > 0 { "+" } else { "-" },
                c.baryon_number,
                c.sizes.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
                names.join(", ")
            );
            for g in &c.multiplets {
                let _ = writeln!(
                    text,
                    "  I={} Y={} S={}: {}",
                    g.isospin,
                    ratio::format(g.hypercharge),
                    g.strangeness,
                    g.members.join(" ")
                );
            }
            let rows: Vec<Vec<String>> = c
                .multiplets
                .iter()
                .map(|g| {
                    vec![
                        g.isospin.to_string(),
                        ratio::format(g.hypercharge),
                        g.strangeness.to_string(),
                        g.members.join(" "),
                    ]
                })
                .collect();
            Ok(Output::new(text, &["I", "Y", "S", "members"], &rows, serde_json::to_value(&c)?))
        }
        HadronCommand::Predict { file, irrep } => {
            let members = read_members(file)?;
            let p = match irrep {
                Some(spec) => eka_predict(parse_irrep(spec)?, &members)?,
                None => infer_prediction(&members)?,
            };
            Ok(prediction_output(&p))
        }
        HadronCommand::Gluons { n } => {
            if *n == 0 {
                return Err(usage("the number of colours must be at least 1"));
            }
            let g = gluon_count(*n);
            Ok(Output::new(
                g.to_string(),
                &["colors", "gluons"],
                &[vec![n.to_string(), g.to_string()]],
                json!({"colors": n, "gluons": g}),
            ))
        }
    }
}

fn parse_irrep(spec: &str) -> Result<Su3Irrep> {
    let bad = || usage(format!("irrep must be written p,q (got {spec:?})"));
    let (p, q) = spec.split_once(',').ok_or_else(bad)?;
    Ok(Su3Irrep::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

/// Tries every small irrep one member larger than the input.
fn infer_prediction(members: &[MultipletMember]) -> Result<Prediction> {
    let candidates = [
        Su3Irrep::SINGLET,
        Su3Irrep::TRIPLET,
        Su3Irrep::ANTITRIPLET,
        Su3Irrep::OCTET,
        Su3Irrep::DECUPLET,
        Su3Irrep::ANTIDECUPLET,
    ];
    let fits: Vec<Prediction> = candidates
        .iter()
        .filter(|r| r.dim() == members.len() as u64 + 1)
        .filter_map(|&r| eka_predict(r, members).ok())
        .collect();
    match fits.len() {
        1 => Ok(fits.into_iter().next().expect("one fit")),
        0 => Err(CliError::Domain(
            format!("{} members leave no single hole in 1, 3, 3*, 8, 10 or 10*; pass --irrep p,q", members.len())
                .into(),
        )),
        _ => Err(usage("several irreps fit; pass --irrep p,q")),
    }
}

fn prediction_output(p: &Prediction) -> Output {
    let fields = [
        p.isospin_z.to_string(),
        ratio::format(p.hypercharge),
        ratio::format(p.charge),
        p.strangeness.to_string(),
        p.spin.to_string(),
        p.parity.to_string(),
    ];
    let mass_text = p.mass.map(|m| format!("{m:.1}"));
    let mut text = format!(
        "missing member of {} {}: I3={} Y={} Q={} S={} spin {} parity {}\n",
        p.irrep.name(),
        p.irrep,
        fields[0],
        fields[1],
        fields[2],
        fields[3],
        fields[4],
        if p.parity > 0 { "+" } else { "-" }
    );
    match (&mass_text, &p.fit) {
        (Some(m), Some(fit)) => {
            let _ = writeln!(text, "mass: {m} MeV/c^2 (linear fit m = {:.1} {:+.1} Y)", fit.intercept, fit.slope);
        }
        _ => text.push_str("mass: not predicted (needs masses on at least two hypercharge layers)\n"),
    }
    let mut row: Vec<String> = vec![p.irrep.name()];
    row.extend(fields.iter().cloned());
    row.push(mass_text.unwrap_or_default());
    let fit = p.fit.as_ref().map(|f| {
        let layers: Vec<Value> = f.layers.iter().map(|(y, m)| json!({"Y": y, "mean_mass": mass(*m)})).collect();
        json!({"intercept": mass(f.intercept), "slope": mass(f.slope), "layers": layers})
    });
    let json = json!({
        "irrep": {"p": p.irrep.p, "q": p.irrep.q, "name": p.irrep.name()},
        "I3": fields[0], "Y": fields[1], "Q": fields[2], "S": p.strangeness,
        "spin": fields[4], "parity": p.parity,
        "mass": p.mass.map(mass),
        "fit": fit,
    });
    Output::new(text, &["irrep", "I3", "Y", "Q", "S", "spin", "parity", "mass"], &[row], json)
}

fn census(data: &Data) -> Result<Output> {
    let c = data.registry()?.standard_model_census();
    Ok(Output::new(
        format!(
            "fermions: {}\nmediators (standard model): {}\nmediators (with graviton): {}\nhiggs: {}",
            c.fermions, c.sm_mediators, c.all_mediators, c.higgs
        ),
        &["fermions", "sm_mediators", "all_mediators", "higgs"],
        &[vec![c.fermions.to_string(), c.sm_mediators.to_string(), c.all_mediators.to_string(), c.higgs.to_string()]],
        serde_json::to_value(c)?,
    ))
}

fn partner(data: &Data, name: &str) -> Result<Output> {
    let registry = data.registry()?;
    let s = registry.superpartner(name)?;
    Ok(Output::new(
        format!("{} (spin {}) <-> {} (spin {})", s.particle, s.particle_spin, s.partner, s.partner_spin),
        &["particle", "partner", "two_spin_particle", "two_spin_partner"],
        &[vec![
            s.particle.clone(),
            s.partner.clone(),
            s.particle_spin.twice().to_string(),
            s.partner_spin.twice().to_string(),
        ]],
        serde_json::to_value(s)?,
    ))
}

fn history(data: &Data, year: i32) -> Result<Output> {
    let registry = data.registry()?;
    let count = registry.elements_known(year)?;
    let representative =
        registry.element_counts().iter().find(|c| c.year == year).and_then(|c| c.representative.clone());
    let mut text = format!("{year}: {count} elements known");
    if let Some(who) = &representative {
        let _ = write!(text, " ({who})");
    }
    Ok(Output::new(
        text,
        &["year", "count", "representative"],
        &[vec![year.to_string(), count.to_string(), representative.clone().unwrap_or_default()]],
        json!({"year": year, "count": count, "representative": representative}),
    ))
}
