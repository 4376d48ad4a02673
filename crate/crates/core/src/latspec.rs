//! The LATSPEC text format.
//!
//! ```text
//! #LATSPEC 1
//! lattice
//! elements a b c
//! leq a b
//! mul a b c
//! end
//! module
//! elements X Y
//! leq X Y
//! act a X Y
//! end
//! expansion d on module
//! map X Y
//! end
//! ```
//!
//! A document without a `module` block describes `L` as a module over
//! itself. Parsed documents are kept in canonical form, so emitting and
//! re-parsing gives back an equal document.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::expansion::{ExpansionError, ExpansionL, ExpansionM, Label};
use crate::lattice::{Elem, Lattice, LatticeError, MulLattice};
use crate::module::{InstanceBundle, InstanceError, LatticeModule};

pub const HEADER: &str = "#LATSPEC 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatSpecError {
    #[error("line {line}: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("line {line}: unknown element `{name}`")]
    UnknownElement { name: String, line: usize },
    #[error("line {line}: conflicting fact")]
    ConflictingFact { line: usize },
    #[error("lattice: {0}")]
    Lattice(#[from] LatticeError),
    #[error("{0}")]
    Instance(#[from] InstanceError),
    #[error("{side} table has no entry for {what}")]
    Incomplete { side: Side, what: String },
    #[error("expansion `{name}`: {source}")]
    Expansion {
        name: String,
        source: ExpansionError,
    },
}

/// Which of the two lattices a fact, expansion or drawing refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Lattice,
    Module,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lattice => "lattice",
            Side::Module => "module",
        })
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "l" | "lattice" => Ok(Side::Lattice),
            "m" | "module" => Ok(Side::Module),
            _ => Err(format!("expected `l` or `m`, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LatticeSection {
    pub elements: BTreeSet<String>,
    pub leq: BTreeSet<(String, String)>,
    /// Products keyed by the lexicographically ordered pair.
    pub mul: BTreeMap<(String, String), String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModuleSection {
    pub elements: BTreeSet<String>,
    pub leq: BTreeSet<(String, String)>,
    pub act: BTreeMap<(String, String), String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionSection {
    pub side: Side,
    pub map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LatSpecDocument {
    pub lattice: LatticeSection,
    pub module: Option<ModuleSection>,
    pub expansions: BTreeMap<String, ExpansionSection>,
}

enum Block {
    Lattice,
    Module,
    Expansion(String),
}

/// Names used by a fact, checked once every block has been read.
struct NameUse {
    name: String,
    side: Side,
    line: usize,
}

pub fn parse_latspec(text: &str) -> Result<LatSpecDocument, LatSpecError> {
    let syntax = |line: usize, message: &str| LatSpecError::SyntaxError {
        line,
        message: message.to_string(),
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    match lines.next() {
        Some((_, HEADER)) => {}
        _ => return Err(syntax(1, "missing `#LATSPEC 1` header")),
    }

    let mut doc = LatSpecDocument::default();
    let mut seen_lattice = false;
    let mut block: Option<(Block, usize)> = None;
    let mut uses: Vec<NameUse> = Vec::new();
    let mut last_line = 1;

    for (no, line) in lines {
        last_line = no;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let Some((current, _)) = &block else {
            block = Some((open_block(&words, no, &mut doc, &mut seen_lattice)?, no));
            continue;
        };
        if words == ["end"] {
            block = None;
            continue;
        }
        let mut use_name = |name: &str, side: Side| {
            uses.push(NameUse {
                name: name.to_string(),
                side,
                line: no,
            })
        };
        match (current, words.as_slice()) {
            (Block::Lattice, ["elements", names @ ..]) => {
                doc.lattice
                    .elements
                    .extend(names.iter().map(|s| s.to_string()));
            }
            (Block::Lattice, ["leq", a, b]) => {
                use_name(a, Side::Lattice);
                use_name(b, Side::Lattice);
                doc.lattice.leq.insert((a.to_string(), b.to_string()));
            }
            (Block::Lattice, ["mul", a, b, c]) => {
                for x in [a, b, c] {
                    use_name(x, Side::Lattice);
                }
                let key = if a <= b { (a, b) } else { (b, a) };
                insert_fact(
                    &mut doc.lattice.mul,
                    (key.0.to_string(), key.1.to_string()),
                    c,
                    no,
                )?;
            }
            (Block::Module, ["elements", names @ ..]) => {
                let module = doc.module.get_or_insert_with(ModuleSection::default);
                module.elements.extend(names.iter().map(|s| s.to_string()));
            }
            (Block::Module, ["leq", a, b]) => {
                use_name(a, Side::Module);
                use_name(b, Side::Module);
                let module = doc.module.get_or_insert_with(ModuleSection::default);
                module.leq.insert((a.to_string(), b.to_string()));
            }
            (Block::Module, ["act", a, x, y]) => {
                use_name(a, Side::Lattice);
                use_name(x, Side::Module);
                use_name(y, Side::Module);
                let module = doc.module.get_or_insert_with(ModuleSection::default);
                insert_fact(&mut module.act, (a.to_string(), x.to_string()), y, no)?;
            }
            (Block::Expansion(name), ["map", a, b]) => {
                let section = doc.expansions.get_mut(name).expect("opened with the block");
                use_name(a, section.side);
                use_name(b, section.side);
                insert_fact(&mut section.map, a.to_string(), b, no)?;
            }
            _ => return Err(syntax(no, &format!("unexpected `{line}`"))),
        }
    }
    if let Some((_, opened)) = block {
        return Err(syntax(
            last_line,
            &format!("block opened on line {opened} has no `end`"),
        ));
    }
    if !seen_lattice {
        return Err(syntax(last_line, "no `lattice` block"));
    }

    for u in uses {
        let known = match u.side {
            Side::Lattice => doc.lattice.elements.contains(&u.name),
            // Without a module block the carrier is the lattice itself.
            Side::Module => match &doc.module {
                Some(m) => m.elements.contains(&u.name),
                None => doc.lattice.elements.contains(&u.name),
            },
        };
        if !known {
            return Err(LatSpecError::UnknownElement {
                name: u.name,
                line: u.line,
            });
        }
    }
    Ok(doc)
}

fn open_block(
    words: &[&str],
    no: usize,
    doc: &mut LatSpecDocument,
    seen_lattice: &mut bool,
) -> Result<Block, LatSpecError> {
    let syntax = |message: String| LatSpecError::SyntaxError { line: no, message };
    match words {
        ["lattice"] if !*seen_lattice => {
            *seen_lattice = true;
            Ok(Block::Lattice)
        }
        ["module"] if doc.module.is_none() => {
            doc.module = Some(ModuleSection::default());
            Ok(Block::Module)
        }
        ["expansion", name, "on", side] => {
            let side: Side = side.parse().map_err(syntax)?;
            if doc.expansions.contains_key(*name) {
                return Err(LatSpecError::ConflictingFact { line: no });
            }
            doc.expansions.insert(
                name.to_string(),
                ExpansionSection {
                    side,
                    map: BTreeMap::new(),
                },
            );
            Ok(Block::Expansion(name.to_string()))
        }
        ["lattice"] | ["module"] => Err(syntax(format!("duplicate `{}` block", words[0]))),
        _ => Err(syntax(format!(
            "expected a block header, got `{}`",
            words.join(" ")
        ))),
    }
}

fn insert_fact<K: Ord>(
    map: &mut BTreeMap<K, String>,
    key: K,
    value: &str,
    line: usize,
) -> Result<(), LatSpecError> {
    match map.get(&key) {
        Some(old) if old != value => Err(LatSpecError::ConflictingFact { line }),
        _ => {
            map.insert(key, value.to_string());
            Ok(())
        }
    }
}

pub fn emit_latspec(doc: &LatSpecDocument) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(HEADER.to_string());
    line("lattice".into());
    let join = |names: &BTreeSet<String>| names.iter().cloned().collect::<Vec<_>>().join(" ");
    line(format!("elements {}", join(&doc.lattice.elements)));
    for (a, b) in &doc.lattice.leq {
        line(format!("leq {a} {b}"));
    }
    for ((a, b), c) in &doc.lattice.mul {
        line(format!("mul {a} {b} {c}"));
    }
    line("end".into());
    if let Some(m) = &doc.module {
        line("module".into());
        line(format!("elements {}", join(&m.elements)));
        for (a, b) in &m.leq {
            line(format!("leq {a} {b}"));
        }
        for ((a, x), y) in &m.act {
            line(format!("act {a} {x} {y}"));
        }
        line("end".into());
    }
    for (name, e) in &doc.expansions {
        line(format!("expansion {name} on {}", e.side));
        for (a, b) in &e.map {
            line(format!("map {a} {b}"));
        }
        line("end".into());
    }
    out
}

/// An instance and the expansions declared alongside it.
#[derive(Debug, Clone)]
pub struct LoadedInstance {
    pub bundle: InstanceBundle,
    pub expansions_m: Vec<ExpansionM>,
    pub expansions_l: Vec<ExpansionL>,
}

impl LatSpecDocument {
    /// Builds and validates the instance.
    pub fn to_instance(&self, name: &str) -> Result<LoadedInstance, LatSpecError> {
        let l_names: Vec<&String> = self.lattice.elements.iter().collect();
        let l_pairs: Vec<(&String, &String)> =
            self.lattice.leq.iter().map(|(a, b)| (a, b)).collect();
        let base = Lattice::build(&l_names, &l_pairs)?;
        let mut products = vec![None; base.len() * base.len()];
        for ((a, b), c) in &self.lattice.mul {
            let (a, b, c) = (lookup(&base, a), lookup(&base, b), lookup(&base, c));
            products[a.index() * base.len() + b.index()] = Some(c);
            products[b.index() * base.len() + a.index()] = Some(c);
        }
        for a in base.elements() {
            for b in base.elements() {
                if products[a.index() * base.len() + b.index()].is_none() {
                    return Err(LatSpecError::Incomplete {
                        side: Side::Lattice,
                        what: format!("mul {} {}", base.name(a), base.name(b)),
                    });
                }
            }
        }
        let n = base.len();
        let scalars = MulLattice::from_fn(base, |a, b| {
            products[a.index() * n + b.index()].expect("checked above")
        });

        let module = match &self.module {
            None => LatticeModule::over_itself(scalars),
            Some(section) => {
                let names: Vec<&String> = section.elements.iter().collect();
                let pairs: Vec<(&String, &String)> =
                    section.leq.iter().map(|(a, b)| (a, b)).collect();
                let carrier = Lattice::build(&names, &pairs)?;
                let l = scalars.lattice();
                let mut action = vec![None; l.len() * carrier.len()];
                for ((a, x), y) in &section.act {
                    let (a, x, y) = (lookup(l, a), lookup(&carrier, x), lookup(&carrier, y));
                    action[a.index() * carrier.len() + x.index()] = Some(y);
                }
                for a in l.elements() {
                    for x in carrier.elements() {
                        if action[a.index() * carrier.len() + x.index()].is_none() {
                            return Err(LatSpecError::Incomplete {
                                side: Side::Module,
                                what: format!("act {} {}", l.name(a), carrier.name(x)),
                            });
                        }
                    }
                }
                let k = carrier.len();
                LatticeModule::from_fn(scalars, carrier, |a, x| {
                    action[a.index() * k + x.index()].expect("checked above")
                })
            }
        };
        let bundle = InstanceBundle::new(name, module)?;

        let mut expansions_m = Vec::new();
        let mut expansions_l = Vec::new();
        for (ename, section) in &self.expansions {
            let label = Label::Custom(ename.clone());
            let wrap = |source| LatSpecError::Expansion {
                name: ename.clone(),
                source,
            };
            let lat = match section.side {
                Side::Lattice => bundle.module().scalars().lattice(),
                Side::Module => bundle.module().carrier(),
            };
            let mut table = Vec::with_capacity(lat.len());
            for x in lat.elements() {
                let image =
                    section
                        .map
                        .get(lat.name(x))
                        .ok_or_else(|| LatSpecError::Incomplete {
                            side: section.side,
                            what: format!("map {} in expansion `{ename}`", lat.name(x)),
                        })?;
                table.push(lookup(lat, image));
            }
            match section.side {
                Side::Lattice => expansions_l.push(
                    ExpansionL::from_table(bundle.module().scalars(), label, table)
                        .map_err(wrap)?,
                ),
                Side::Module => expansions_m
                    .push(ExpansionM::from_table(bundle.module(), label, table).map_err(wrap)?),
            }
        }
        Ok(LoadedInstance {
            bundle,
            expansions_m,
            expansions_l,
        })
    }

    /// The document describing an instance: cover relations, full tables,
    /// and no module block when `M` is `L` acting on itself.
    pub fn from_instance(bundle: &InstanceBundle) -> Self {
        let m = bundle.module();
        let s = m.scalars();
        let l = s.lattice();
        let c = m.carrier();
        let covers = |lat: &Lattice| -> BTreeSet<(String, String)> {
            lat.covers()
                .into_iter()
                .map(|(a, b)| (lat.name(a).to_string(), lat.name(b).to_string()))
                .collect()
        };
        let names = |lat: &Lattice| -> BTreeSet<String> {
            lat.names().iter().map(|s| s.to_string()).collect()
        };
        let mut mul = BTreeMap::new();
        for a in l.elements() {
            for b in l.elements().filter(|&b| l.name(a) <= l.name(b)) {
                mul.insert(
                    (l.name(a).to_string(), l.name(b).to_string()),
                    l.name(s.mul(a, b)).to_string(),
                );
            }
        }
        let lattice = LatticeSection {
            elements: names(l),
            leq: covers(l),
            mul,
        };
        let module = if is_over_itself(m) {
            None
        } else {
            let mut act = BTreeMap::new();
            for a in l.elements() {
                for x in c.elements() {
                    act.insert(
                        (l.name(a).to_string(), c.name(x).to_string()),
                        c.name(m.act(a, x)).to_string(),
                    );
                }
            }
            Some(ModuleSection {
                elements: names(c),
                leq: covers(c),
                act,
            })
        };
        LatSpecDocument {
            lattice,
            module,
            expansions: BTreeMap::new(),
        }
    }

    /// Adds an expansion section for the given table.
    pub fn add_expansion(&mut self, name: &str, side: Side, lat: &Lattice, table: &[Elem]) {
        let map = lat
            .elements()
            .map(|x| {
                (
                    lat.name(x).to_string(),
                    lat.name(table[x.index()]).to_string(),
                )
            })
            .collect();
        self.expansions
            .insert(name.to_string(), ExpansionSection { side, map });
    }
}

fn lookup(lat: &Lattice, name: &str) -> Elem {
    lat.elem(name).expect("names were checked while parsing")
}

fn is_over_itself(m: &LatticeModule) -> bool {
    let (l, c) = (m.scalars().lattice(), m.carrier());
    l.names() == c.names()
        && l.elements()
            .all(|a| c.elements().all(|b| l.leq(a, b) == c.leq(a, b)))
        && l.elements()
            .all(|a| c.elements().all(|x| m.act(a, x) == m.scalars().mul(a, x)))
}
