//! Parsers for the family and graph mini-language.
//!
//! Family specs name an arrangement family with keyword arguments:
//! `braid`, `eq1:a=2,3`, `eq1z:a=2,3`, `diff:a=1,3`, `affine:a=2;b=1`,
//! `ratio:a=2;b=3`, `catalan`, `extcatalan:a=2`, `shi`.
//!
//! Graph specs name concrete graphs, joined into disjoint unions with `+`:
//! `G:a=2,3;k=22`, `F:a=1,3;k=14`, `Fa:a=2;b=1;k=20`, `Gr:a=2;b=3;k=22`,
//! each optionally wrapped as `bar(...)` to pendant a vertex on every
//! vertex. Keys take comma-separated integers; key blocks join with `;`.

use arrange_core::arrangement::ArrangementFamily;
use arrange_core::graphcount::{
    add_pendants, build_F, build_F_affine, build_G, build_G_ratio, Graph, GraphError,
};

/// One `+`-separated term of a graph spec.
#[derive(Debug, Clone)]
pub struct GraphAtom {
    kind: GraphKind,
    a: Vec<i64>,
    b: Vec<i64>,
    k: u64,
    pendant: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GraphKind {
    Multiplicative,
    Difference,
    Affine,
    Ratio,
}

impl GraphAtom {
    pub fn build(&self) -> Result<Graph, GraphError> {
        let base = match self.kind {
            GraphKind::Multiplicative => build_G(&self.a, self.k)?,
            GraphKind::Difference => build_F(&self.a, self.k)?,
            GraphKind::Affine => build_F_affine(&self.a, &self.b, self.k)?,
            GraphKind::Ratio => build_G_ratio(&self.a, &self.b, self.k)?,
        };
        Ok(if self.pendant {
            add_pendants(&base)
        } else {
            base
        })
    }
}

/// Split `key=v1,v2;key=v1` blocks into (key, values) pairs.
fn key_values(args: &str) -> Result<Vec<(String, Vec<i64>)>, String> {
    let mut out = Vec::new();
    for block in args.split(';') {
        let block = block.trim();
        let (key, list) = block
            .split_once('=')
            .ok_or_else(|| format!("expected key=values, got `{block}`"))?;
        let values = int_list(list)?;
        out.push((key.trim().to_string(), values));
    }
    Ok(out)
}

pub fn int_list(list: &str) -> Result<Vec<i64>, String> {
    list.split(',')
        .map(|v| {
            v.trim()
                .parse::<i64>()
                .map_err(|_| format!("`{}` is not an integer", v.trim()))
        })
        .collect()
}

/// Comma-separated partition groups separated by `;`. Empty input parses to
/// no groups at all.
pub fn partition_groups(list: &str) -> Result<Vec<Vec<i64>>, String> {
    let trimmed = list.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed.split(';').map(int_list).collect()
}

fn take_key(
    pairs: &mut Vec<(String, Vec<i64>)>,
    key: &str,
    spec: &str,
) -> Result<Vec<i64>, String> {
    let pos = pairs
        .iter()
        .position(|(k, _)| k == key)
        .ok_or_else(|| format!("`{spec}` is missing `{key}=`"))?;
    Ok(pairs.remove(pos).1)
}

fn reject_leftovers(pairs: &[(String, Vec<i64>)], spec: &str) -> Result<(), String> {
    if let Some((key, _)) = pairs.first() {
        return Err(format!("`{spec}` has an unknown key `{key}`"));
    }
    Ok(())
}

fn single_value(values: Vec<i64>, key: &str, spec: &str) -> Result<i64, String> {
    if values.len() != 1 {
        return Err(format!("`{spec}` needs exactly one value for `{key}=`"));
    }
    Ok(values[0])
}

pub fn parse_family(spec: &str) -> Result<ArrangementFamily, String> {
    let spec = spec.trim();
    let (name, args) = match spec.split_once(':') {
        Some((name, args)) => (name.trim(), Some(args)),
        None => (spec, None),
    };
    let mut pairs = match args {
        Some(args) => key_values(args)?,
        None => Vec::new(),
    };
    let family = match name {
        "braid" => ArrangementFamily::Braid,
        "eq1" => ArrangementFamily::Eq1 {
            a: take_key(&mut pairs, "a", spec)?,
        },
        "eq1z" => ArrangementFamily::Eq1MinusZero {
            a: take_key(&mut pairs, "a", spec)?,
        },
        "diff" => ArrangementFamily::Difference {
            a: take_key(&mut pairs, "a", spec)?,
        },
        "affine" => ArrangementFamily::AffineMult {
            a: take_key(&mut pairs, "a", spec)?,
            b: take_key(&mut pairs, "b", spec)?,
        },
        "ratio" => ArrangementFamily::Ratio {
            a: take_key(&mut pairs, "a", spec)?,
            b: take_key(&mut pairs, "b", spec)?,
        },
        "catalan" => ArrangementFamily::Catalan,
        "extcatalan" => ArrangementFamily::ExtendedCatalan {
            a_max: single_value(take_key(&mut pairs, "a", spec)?, "a", spec)?,
        },
        "shi" => ArrangementFamily::Shi,
        other => return Err(format!("unknown family `{other}`")),
    };
    reject_leftovers(&pairs, spec)?;
    Ok(family)
}

pub fn parse_graph(spec: &str) -> Result<Vec<GraphAtom>, String> {
    let atoms: Vec<GraphAtom> = spec
        .split('+')
        .map(parse_atom)
        .collect::<Result<_, _>>()?;
    if atoms.is_empty() {
        return Err("empty graph spec".to_string());
    }
    Ok(atoms)
}

fn parse_atom(atom: &str) -> Result<GraphAtom, String> {
    let atom = atom.trim();
    let (inner, pendant) = match atom.strip_prefix("bar(") {
        Some(rest) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| format!("`{atom}` is missing the closing `)`"))?;
            (inner.trim(), true)
        }
        None => (atom, false),
    };
    let (name, args) = inner
        .split_once(':')
        .ok_or_else(|| format!("`{inner}` is not of the form kind:key=values"))?;
    let kind = match name.trim() {
        "G" => GraphKind::Multiplicative,
        "F" => GraphKind::Difference,
        "Fa" => GraphKind::Affine,
        "Gr" => GraphKind::Ratio,
        other => return Err(format!("unknown graph kind `{other}`")),
    };
    let mut pairs = key_values(args)?;
    let a = take_key(&mut pairs, "a", inner)?;
    let b = match kind {
        GraphKind::Affine | GraphKind::Ratio => take_key(&mut pairs, "b", inner)?,
        _ => Vec::new(),
    };
    let k = single_value(take_key(&mut pairs, "k", inner)?, "k", inner)?;
    if k < 1 {
        return Err(format!("`{inner}` needs k >= 1"));
    }
    reject_leftovers(&pairs, inner)?;
    Ok(GraphAtom {
        kind,
        a,
        b,
        k: k as u64,
        pendant,
    })
}
