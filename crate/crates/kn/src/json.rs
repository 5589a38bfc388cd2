//! JSON forms of the core types.
//!
//! Rationals are strings `"p/q"` (or `"p"`), polynomials are term lists
//! `[[exponents], "p/q"]` over the family's parameter order, and an affine
//! coefficient `a·n + b·m + d` is `[a, b, d]`. A family looks like
//!
//! ```json
//! {"family": "witt", "params": [], "domain": "all",
//!  "rule": {"odd-odd": [[0, [[[[], "-1"]], [[[], "1"]], []]]], ...}}
//! ```
//!
//! Objects go through `serde_json::Map`, which keeps keys sorted, so equal
//! values always print to the same bytes.

use std::collections::BTreeMap;

use kn_core::cohomology::{Cochain, Mode, Table, UnaryRule};
use kn_core::family::{DiagonalTerm, ExceptionalRow, ParityClass};
use kn_core::poly::Monomial;
use kn_core::{rational, Affine, BasisDomain, BasisIndex, BracketRule, CentralRule, FamilySpec, LieElement, ParamPoly, Rational, ShiftTerm};
use serde_json::{json, Map, Value};

use crate::error::{Result, ToolkitError};

fn schema(msg: impl Into<String>) -> ToolkitError {
    ToolkitError::Schema(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| schema(format!("missing field `{key}`")))
}

fn array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| schema(format!("expected an array, got {v}")))
}

fn int(v: &Value) -> Result<i64> {
    v.as_i64().ok_or_else(|| schema(format!("expected an integer, got {v}")))
}

pub fn rational_to(r: &Rational) -> Value {
    Value::String(rational::format(r))
}

pub fn rational_from(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Ok(rational::parse(s)?),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().unwrap())),
        _ => Err(schema(format!("expected a rational string, got {v}"))),
    }
}

pub fn poly_to(p: &ParamPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, c)| json!([m.exponents(), rational::format(c)]))
            .collect(),
    )
}

pub fn poly_from(v: &Value) -> Result<ParamPoly> {
    if let Value::String(_) | Value::Number(_) = v {
        return Ok(ParamPoly::constant(rational_from(v)?));
    }
    let mut terms = Vec::new();
    for t in array(v)? {
        let pair = array(t)?;
        if pair.len() != 2 {
            return Err(schema("a polynomial term is [exponents, coefficient]"));
        }
        let exps = array(&pair[0])?
            .iter()
            .map(|e| e.as_u64().map(|e| e as u32).ok_or_else(|| schema("exponents are nonnegative integers")))
            .collect::<Result<Vec<u32>>>()?;
        terms.push((Monomial::new(exps), rational_from(&pair[1])?));
    }
    Ok(ParamPoly::from_terms(terms))
}

/// `[[index, poly], ...]` with index an integer or `"c"`.
pub fn element_to(x: &LieElement) -> Value {
    Value::Array(
        x.iter()
            .map(|(i, c)| match i {
                BasisIndex::Vector(n) => json!([n, poly_to(c)]),
                BasisIndex::Central => json!(["c", poly_to(c)]),
            })
            .collect(),
    )
}

pub fn element_from(v: &Value) -> Result<LieElement> {
    let mut terms = Vec::new();
    for t in array(v)? {
        let pair = array(t)?;
        if pair.len() != 2 {
            return Err(schema("an element term is [index, coefficient]"));
        }
        let index = match &pair[0] {
            Value::String(s) if s == "c" => BasisIndex::Central,
            other => BasisIndex::Vector(int(other)?),
        };
        terms.push((index, poly_from(&pair[1])?));
    }
    Ok(LieElement::from_terms(terms))
}

fn terms_to(terms: &[ShiftTerm]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|t| json!([t.shift, [poly_to(&t.coeff.n), poly_to(&t.coeff.m), poly_to(&t.coeff.constant)]]))
            .collect(),
    )
}

fn terms_from(v: &Value) -> Result<Vec<ShiftTerm>> {
    array(v)?
        .iter()
        .map(|t| {
            let pair = array(t)?;
            let abc = array(pair.get(1).ok_or_else(|| schema("a shift term is [shift, [a, b, d]]"))?)?;
            if abc.len() != 3 {
                return Err(schema("an affine coefficient is [a, b, d]"));
            }
            Ok(ShiftTerm::new(
                int(&pair[0])?,
                Affine::new(poly_from(&abc[0])?, poly_from(&abc[1])?, poly_from(&abc[2])?),
            ))
        })
        .collect()
}

pub fn rule_to(rule: &BracketRule) -> Value {
    let mut map = Map::new();
    for class in ParityClass::ALL {
        map.insert(class.key().into(), terms_to(rule.class(class)));
    }
    if !rule.exceptional.is_empty() {
        let rows = rule
            .exceptional
            .iter()
            .map(|r| json!({"index": r.index, "terms": terms_to(&r.terms)}))
            .collect();
        map.insert("exceptional".into(), Value::Array(rows));
    }
    Value::Object(map)
}

pub fn rule_from(v: &Value) -> Result<BracketRule> {
    let mut rule = BracketRule::default();
    for class in ParityClass::ALL {
        if let Some(t) = v.get(class.key()) {
            *rule.class_mut(class) = terms_from(t)?;
        }
    }
    if let Some(rows) = v.get("exceptional") {
        for r in array(rows)? {
            rule.exceptional.push(ExceptionalRow {
                index: int(field(r, "index")?)?,
                terms: terms_from(field(r, "terms")?)?,
            });
        }
    }
    Ok(rule)
}

pub fn central_to(c: &CentralRule) -> Value {
    match c {
        CentralRule::Diagonal(terms) => json!({
            "diagonal": terms
                .iter()
                .map(|t| json!({"total": t.total, "coeffs": t.coeffs.iter().map(poly_to).collect::<Vec<_>>()}))
                .collect::<Vec<_>>()
        }),
        CentralRule::Table { entries, lo, hi } => json!({
            "table": {
                "lo": lo,
                "hi": hi,
                "entries": entries.iter().map(|((n, m), v)| json!([n, m, poly_to(v)])).collect::<Vec<_>>(),
            }
        }),
    }
}

pub fn central_from(v: &Value) -> Result<CentralRule> {
    if let Some(d) = v.get("diagonal") {
        let terms = array(d)?
            .iter()
            .map(|t| {
                Ok(DiagonalTerm {
                    total: int(field(t, "total")?)?,
                    coeffs: array(field(t, "coeffs")?)?.iter().map(poly_from).collect::<Result<_>>()?,
                })
            })
            .collect::<Result<_>>()?;
        return Ok(CentralRule::Diagonal(terms));
    }
    let t = field(v, "table")?;
    let mut entries = BTreeMap::new();
    for e in array(field(t, "entries")?)? {
        let e = array(e)?;
        if e.len() != 3 {
            return Err(schema("a table entry is [n, m, value]"));
        }
        entries.insert((int(&e[0])?, int(&e[1])?), poly_from(&e[2])?);
    }
    Ok(CentralRule::Table {
        entries,
        lo: int(field(t, "lo")?)?,
        hi: int(field(t, "hi")?)?,
    })
}

pub fn family_to(f: &FamilySpec) -> Value {
    let mut map = Map::new();
    map.insert("family".into(), json!(f.name));
    map.insert("params".into(), json!(f.params));
    map.insert(
        "domain".into(),
        match f.domain {
            BasisDomain::All => json!("all"),
            BasisDomain::AtLeast(b) => json!({"at_least": b}),
        },
    );
    map.insert("rule".into(), rule_to(&f.rule));
    if let Some(c) = &f.central {
        map.insert("central".into(), central_to(c));
    }
    Value::Object(map)
}

pub fn family_from(v: &Value) -> Result<FamilySpec> {
    let name = field(v, "family")?.as_str().ok_or_else(|| schema("`family` is a string"))?;
    let params: Vec<String> = array(field(v, "params")?)?
        .iter()
        .map(|p| p.as_str().map(String::from).ok_or_else(|| schema("parameter names are strings")))
        .collect::<Result<_>>()?;
    let domain = match v.get("domain") {
        None => BasisDomain::All,
        Some(Value::String(s)) if s == "all" => BasisDomain::All,
        Some(d) => BasisDomain::AtLeast(int(field(d, "at_least")?)?),
    };
    let names: Vec<&str> = params.iter().map(String::as_str).collect();
    let mut f = FamilySpec::new(name, &names, domain, rule_from(field(v, "rule")?)?);
    if let Some(c) = v.get("central") {
        f = f.with_central(central_from(c)?);
    }
    Ok(f)
}

fn mode_to(m: Mode) -> Value {
    json!(match m {
        Mode::Trivial => "trivial",
        Mode::Adjoint => "adjoint",
    })
}

fn mode_from(v: &Value) -> Result<Mode> {
    match v.as_str() {
        Some("trivial") => Ok(Mode::Trivial),
        Some("adjoint") => Ok(Mode::Adjoint),
        _ => Err(schema(format!("mode is \"trivial\" or \"adjoint\", got {v}"))),
    }
}

/// `{"arity", "mode", "weight"?, "table": {<kind>: ...}}`.
pub fn cochain_to(c: &Cochain) -> Value {
    let table = match &c.table {
        Table::Binary(rule) => json!({"binary": rule_to(rule)}),
        Table::Unary(u) => json!({"unary": {
            "odd": terms_to(&u.odd),
            "even": terms_to(&u.even),
            "pinned": u.pinned.iter().map(|(n, x)| json!([n, element_to(x)])).collect::<Vec<_>>(),
        }}),
        Table::Explicit(map) => json!({
            "explicit": map.iter().map(|(k, x)| json!([k, element_to(x)])).collect::<Vec<_>>()
        }),
        Table::Differential { algebra, source } => json!({
            "differential": {"algebra": family_to(algebra), "source": cochain_to(source)}
        }),
        Table::Combination(terms) => json!({
            "combination": terms.iter().map(|(r, c)| json!([rational_to(r), cochain_to(c)])).collect::<Vec<_>>()
        }),
    };
    let mut map = Map::new();
    map.insert("arity".into(), json!(c.arity));
    map.insert("mode".into(), mode_to(c.mode));
    if let Ok(Some(w)) = c.weight() {
        map.insert("weight".into(), json!(w));
    }
    map.insert("table".into(), table);
    Value::Object(map)
}

pub fn cochain_from(v: &Value) -> Result<Cochain> {
    let arity = int(field(v, "arity")?)? as usize;
    let mode = mode_from(field(v, "mode")?)?;
    let t = field(v, "table")?;
    let table = if let Some(r) = t.get("binary") {
        Table::Binary(rule_from(r)?)
    } else if let Some(u) = t.get("unary") {
        let mut pinned = BTreeMap::new();
        if let Some(p) = u.get("pinned") {
            for e in array(p)? {
                let e = array(e)?;
                if e.len() != 2 {
                    return Err(schema("a pinned value is [n, element]"));
                }
                pinned.insert(int(&e[0])?, element_from(&e[1])?);
            }
        }
        Table::Unary(UnaryRule {
            odd: terms_from(field(u, "odd")?)?,
            even: terms_from(field(u, "even")?)?,
            pinned,
        })
    } else if let Some(e) = t.get("explicit") {
        let entries = array(e)?
            .iter()
            .map(|row| {
                let row = array(row)?;
                if row.len() != 2 {
                    return Err(schema("an explicit entry is [[args], element]"));
                }
                let args = array(&row[0])?.iter().map(int).collect::<Result<Vec<i64>>>()?;
                Ok((args, element_from(&row[1])?))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Cochain::explicit(arity, mode, entries));
    } else if let Some(d) = t.get("differential") {
        Table::Differential {
            algebra: Box::new(family_from(field(d, "algebra")?)?),
            source: Box::new(cochain_from(field(d, "source")?)?),
        }
    } else if let Some(c) = t.get("combination") {
        let terms = array(c)?
            .iter()
            .map(|row| {
                let row = array(row)?;
                if row.len() != 2 {
                    return Err(schema("a combination term is [scalar, cochain]"));
                }
                Ok((rational_from(&row[0])?, cochain_from(&row[1])?))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Cochain::combination(terms)?);
    } else {
        return Err(schema("unknown cochain table kind"));
    };
    Ok(Cochain { arity, mode, table })
}

#[cfg(test)]
mod tests {
    use super::*;
    use kn_core::catalog;
    use kn_core::cohomology::named;

    #[test]
    fn families_round_trip() {
        for name in ["witt", "virasoro", "elliptic", "ds:-1/2", "ds:inf", "three-point", "nodal", "w1", "l1", "formal3"] {
            let f = catalog::lookup(name).unwrap();
            let back = family_from(&family_to(&f)).unwrap();
            assert_eq!(back, f, "{name}");
        }
    }

    #[test]
    fn cochains_round_trip() {
        for c in [named::omega_first(), named::phi_second(), named::l1_phi(), named::beta(3).unwrap(), Cochain::dual(4)] {
            assert_eq!(cochain_from(&cochain_to(&c)).unwrap(), c);
        }
    }

    #[test]
    fn rationals_are_strings() {
        assert_eq!(rational_to(&rational::rat(-3, 6)), json!("-1/2"));
        assert_eq!(rational_from(&json!("4/8")).unwrap(), rational::rat(1, 2));
        assert!(poly_from(&json!([[[1], "x"]])).is_err());
    }
}
