//! The operad definition file: a JSON document
//!
//! ```json
//! {
//!   "group": "symmetric",
//!   "levels": { "0": ["c0"], "1": ["c1"], "2": ["c2"] },
//!   "action": { "2": [["c2"]] },
//!   "unit": "c1",
//!   "compose": [ { "n": 2, "ks": [1, 1], "args": ["c2", "c1", "c1"], "result": "c2" } ],
//!   "complete": false
//! }
//! ```
//!
//! `levels` must list every arity from 0 to the largest one. `action[n][i]`
//! is the image of each label of arity `n` under the `i`-th adjacent
//! transposition; the trivial group has no tables. Every composite within the
//! largest arity must appear in `compose`. With `complete`, arities above the
//! largest are empty rather than unknown.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use actop_core::action_operad::{ActionOperad, Symmetric, Trivial};
use actop_core::g_operad::{ComposeSpec, FiniteGCollection, FiniteGOperad, OperadSpec};
use serde::Deserialize;
use serde_json::value::RawValue;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileError {
    pub file: String,
    pub line: Option<usize>,
    pub location: String,
    pub message: String,
    pub context: Option<String>,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "{}:{l}: ", self.file)?,
            None => write!(f, "{}: ", self.file)?,
        }
        if !self.location.is_empty() {
            write!(f, "{}: ", self.location)?;
        }
        write!(f, "{}", self.message)?;
        if let (Some(l), Some(c)) = (self.line, &self.context) {
            write!(f, "\n{l:>5} | {c}")?;
        }
        Ok(())
    }
}

impl std::error::Error for FileError {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile<'a> {
    group: String,
    #[serde(borrow)]
    levels: BTreeMap<String, &'a RawValue>,
    #[serde(borrow, default)]
    action: BTreeMap<String, &'a RawValue>,
    #[serde(default)]
    unit: Option<String>,
    #[serde(borrow, default)]
    compose: Vec<&'a RawValue>,
    #[serde(default)]
    complete: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCompose {
    n: usize,
    ks: Vec<usize>,
    args: Vec<String>,
    result: String,
}

/// A loaded operad over one of the groups a file may name.
#[derive(Clone)]
pub enum LoadedOperad {
    Trivial(FiniteGOperad<Trivial>),
    Symmetric(FiniteGOperad<Symmetric>),
}

/// A loaded collection, for the composition product.
#[derive(Clone)]
pub enum LoadedCollection {
    Trivial(FiniteGCollection<Trivial>),
    Symmetric(FiniteGCollection<Symmetric>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum GroupName {
    Trivial,
    Symmetric,
}

/// Parsed file contents plus the line each piece starts on.
struct Located {
    group: GroupName,
    spec: OperadSpec,
    level_lines: Vec<usize>,
    action_lines: BTreeMap<usize, usize>,
    compose_lines: Vec<usize>,
    unit_line: Option<usize>,
}

struct Source<'a> {
    name: &'a str,
    text: &'a str,
}

impl<'a> Source<'a> {
    fn line_of(&self, raw: &RawValue) -> usize {
        let offset = raw.get().as_ptr() as usize - self.text.as_ptr() as usize;
        self.text[..offset].matches('\n').count() + 1
    }

    fn line_text(&self, line: usize) -> Option<String> {
        self.text.lines().nth(line - 1).map(|l| l.trim_end().to_string())
    }

    fn error(&self, line: Option<usize>, location: impl Into<String>, message: impl Into<String>) -> FileError {
        FileError {
            file: self.name.to_string(),
            line,
            location: location.into(),
            message: message.into(),
            context: line.and_then(|l| self.line_text(l)),
        }
    }

    fn parse<T: Deserialize<'a>>(&self, raw: &'a RawValue, location: &str) -> Result<T, FileError> {
        serde_json::from_str(raw.get()).map_err(|e| {
            let line = self.line_of(raw) + e.line().saturating_sub(1);
            self.error(Some(line), location, strip_position(&e))
        })
    }
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

fn arity_key(src: &Source, key: &str, raw: &RawValue, field: &str) -> Result<usize, FileError> {
    key.parse().map_err(|_| {
        src.error(Some(src.line_of(raw)), format!("{field}[{key:?}]"), "arity keys must be nonnegative integers")
    })
}

fn locate(src: &Source) -> Result<Located, FileError> {
    let raw: RawFile = serde_json::from_str(src.text).map_err(|e| {
        let line = (e.line() > 0).then_some(e.line());
        src.error(line, "", strip_position(&e))
    })?;
    let group = match raw.group.as_str() {
        "trivial" => GroupName::Trivial,
        "symmetric" => GroupName::Symmetric,
        other => {
            return Err(src.error(
                None,
                "group",
                format!("unknown group {other:?}; expected \"trivial\" or \"symmetric\""),
            ))
        }
    };

    let mut levels = BTreeMap::new();
    for (key, value) in &raw.levels {
        let n = arity_key(src, key, value, "levels")?;
        let labels: Vec<String> = src.parse(value, &format!("levels[{n}]"))?;
        levels.insert(n, (labels, src.line_of(value)));
    }
    let max = match levels.keys().next_back() {
        Some(&m) => m,
        None => return Err(src.error(None, "levels", "no arities given")),
    };
    if let Some(missing) = (0..=max).find(|n| !levels.contains_key(n)) {
        return Err(src.error(None, "levels", format!("arity {missing} is missing (arities 0 to {max} must all be listed)")));
    }
    let (labels, level_lines): (Vec<_>, Vec<_>) = levels.into_values().unzip();

    let mut action = vec![Vec::new(); max + 1];
    let mut action_lines = BTreeMap::new();
    for (key, value) in &raw.action {
        let n = arity_key(src, key, value, "action")?;
        if n > max {
            return Err(src.error(Some(src.line_of(value)), format!("action[{n}]"), format!("arity {n} has no level")));
        }
        action[n] = src.parse(value, &format!("action[{n}]"))?;
        action_lines.insert(n, src.line_of(value));
    }

    let mut compose = Vec::with_capacity(raw.compose.len());
    let mut compose_lines = Vec::with_capacity(raw.compose.len());
    for (i, value) in raw.compose.iter().enumerate() {
        let rec: RawCompose = src.parse(value, &format!("compose[{i}]"))?;
        compose.push(ComposeSpec { n: rec.n, ks: rec.ks, args: rec.args, result: rec.result });
        compose_lines.push(src.line_of(value));
    }

    let unit_line = raw.unit.as_ref().and_then(|_| {
        src.text.lines().position(|l| l.trim_start().starts_with("\"unit\"")).map(|i| i + 1)
    });
    Ok(Located {
        group,
        spec: OperadSpec { levels: labels, action, unit: raw.unit, compose, complete: raw.complete },
        level_lines,
        action_lines,
        compose_lines,
        unit_line,
    })
}

/// Extracts the leading `field[i]` location from a core error message and
/// finds the line it refers to.
fn place(src: &Source, loc: &Located, message: String) -> FileError {
    let index_after = |key: &str| -> Option<(usize, usize)> {
        let start = message.find(key)?;
        let rest = &message[start + key.len()..];
        let end = rest.find(']')?;
        Some((start, rest[..end].parse().ok()?))
    };
    let mut found: Option<(usize, usize, String)> = None;
    for key in ["compose[", "action[", "levels["] {
        if let Some((at, i)) = index_after(key) {
            let line = match key {
                "compose[" => loc.compose_lines.get(i).copied(),
                "action[" => loc.action_lines.get(&i).copied(),
                _ => loc.level_lines.get(i).copied(),
            };
            if let Some(line) = line {
                if found.as_ref().map_or(true, |f| at < f.0) {
                    found = Some((at, line, format!("{}{i}]", key)));
                }
            }
        }
    }
    if found.is_none() {
        // collection validation names the level rather than the field
        let level = message.strip_prefix("level ").and_then(|r| r.split(|c: char| !c.is_ascii_digit()).next()?.parse().ok());
        if let Some(n) = level {
            return src.error(loc.action_lines.get(&n).copied(), format!("action[{n}]"), message);
        }
    }
    match found {
        Some((_, line, location)) => {
            let message = strip_location(&message, &location);
            src.error(Some(line), location, message)
        }
        None if message.starts_with("unit") => src.error(loc.unit_line, "unit", strip_location(&message, "unit")),
        None => src.error(None, "", message),
    }
}

fn strip_location(message: &str, location: &str) -> String {
    message
        .strip_prefix(location)
        .map(|rest| rest.trim_start_matches(|c| c == ':' || c == ' '))
        .filter(|rest| !rest.is_empty())
        .unwrap_or(message)
        .to_string()
}

fn build<A: ActionOperad>(src: &Source, loc: &Located, group: A) -> Result<FiniteGOperad<A>, FileError> {
    loc.spec.operad(group).map_err(|e| place(src, loc, e.to_string()))
}

fn build_collection<A: ActionOperad>(src: &Source, loc: &Located, group: A) -> Result<FiniteGCollection<A>, FileError> {
    loc.spec.collection(group).map_err(|e| place(src, loc, e.to_string()))
}

/// Parses an operad file; `name` is used in diagnostics.
pub fn parse_operad(name: &str, text: &str) -> Result<LoadedOperad, FileError> {
    let src = Source { name, text };
    let loc = locate(&src)?;
    Ok(match loc.group {
        GroupName::Trivial => LoadedOperad::Trivial(build(&src, &loc, Trivial)?),
        GroupName::Symmetric => LoadedOperad::Symmetric(build(&src, &loc, Symmetric)?),
    })
}

/// Parses only the collection part of a file (`unit` and `compose` are
/// ignored).
pub fn parse_collection(name: &str, text: &str) -> Result<LoadedCollection, FileError> {
    let src = Source { name, text };
    let loc = locate(&src)?;
    Ok(match loc.group {
        GroupName::Trivial => LoadedCollection::Trivial(build_collection(&src, &loc, Trivial)?),
        GroupName::Symmetric => LoadedCollection::Symmetric(build_collection(&src, &loc, Symmetric)?),
    })
}

fn read(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|e| FileError {
        file: path.display().to_string(),
        line: None,
        location: String::new(),
        message: e.to_string(),
        context: None,
    })
}

pub fn load_operad(path: &Path) -> Result<LoadedOperad, FileError> {
    parse_operad(&path.display().to_string(), &read(path)?)
}

pub fn load_collection(path: &Path) -> Result<LoadedCollection, FileError> {
    parse_collection(&path.display().to_string(), &read(path)?)
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn json_list(items: &[String]) -> String {
    let parts: Vec<String> = items.iter().map(|s| json_str(s)).collect();
    format!("[{}]", parts.join(", "))
}

/// Writes an operad in the file format, one composition record per line.
pub fn to_json<A: ActionOperad>(p: &FiniteGOperad<A>) -> String {
    let spec = OperadSpec::from_operad(p);
    let group = match p.group().name() {
        "trivial" => "trivial",
        _ => "symmetric",
    };
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"group\": {},\n", json_str(group)));
    out.push_str("  \"levels\": {\n");
    let levels: Vec<String> =
        spec.levels.iter().enumerate().map(|(n, ls)| format!("    \"{n}\": {}", json_list(ls))).collect();
    out.push_str(&levels.join(",\n"));
    out.push_str("\n  },\n  \"action\": {");
    let action: Vec<String> = spec
        .action
        .iter()
        .enumerate()
        .filter(|(_, tables)| !tables.is_empty())
        .map(|(n, tables)| {
            let ts: Vec<String> = tables.iter().map(|t| json_list(t)).collect();
            format!("    \"{n}\": [{}]", ts.join(", "))
        })
        .collect();
    if action.is_empty() {
        out.push_str("},\n");
    } else {
        out.push('\n');
        out.push_str(&action.join(",\n"));
        out.push_str("\n  },\n");
    }
    if let Some(u) = &spec.unit {
        out.push_str(&format!("  \"unit\": {},\n", json_str(u)));
    }
    out.push_str("  \"compose\": [");
    let records: Vec<String> = spec
        .compose
        .iter()
        .map(|c| {
            let ks: Vec<String> = c.ks.iter().map(|k| k.to_string()).collect();
            format!(
                "    {{\"n\": {}, \"ks\": [{}], \"args\": {}, \"result\": {}}}",
                c.n,
                ks.join(", "),
                json_list(&c.args),
                json_str(&c.result)
            )
        })
        .collect();
    if records.is_empty() {
        out.push_str("],\n");
    } else {
        out.push('\n');
        out.push_str(&records.join(",\n"));
        out.push_str("\n  ],\n");
    }
    out.push_str(&format!("  \"complete\": {}\n}}\n", spec.complete));
    out
}
