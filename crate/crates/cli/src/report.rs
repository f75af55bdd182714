// SPDX-License-Identifier: Apache-2.0

//! One function per command: each returns the JSON payload and its text rendering.

use std::fmt::Write;

use num_bigint::BigInt;
use qfi_core::class_number::{class_number_one, Evidence};
use qfi_core::forms::{represents_definite, represents_indefinite, Method};
use qfi_core::ideal::Generator;
use qfi_core::{
    classify_h1, scan_h1, split_type, BinaryForm, Error, H1Certificate, QuadraticField, Result, SplitPrimeIdeal,
    SplittingType,
};
use serde_json::{json, Value};

type Report = (Value, String);

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn field_json(field: QuadraticField) -> Value {
    json!({ "radicand": field.radicand(), "delta": field.delta(), "display": field.to_string() })
}

pub fn split(d: i64, q: &BigInt) -> Result<Report> {
    let field = QuadraticField::new(d)?;
    let mut text = format!("{field}, q = {q}: ");
    let result = match split_type(field, q)? {
        SplittingType::Split(_) => {
            let ideal = SplitPrimeIdeal::canonical(field, q)?;
            let form = ideal.associated_form();
            writeln!(text, "split").unwrap();
            writeln!(text, "ideal: {ideal}").unwrap();
            writeln!(text, "n = {}", ideal.n()).unwrap();
            writeln!(text, "l = {}", ideal.l()).unwrap();
            writeln!(text, "f_P = {form}").unwrap();
            json!({
                "field": field_json(field),
                "q": q.to_string(),
                "splitting": "split",
                "n": ideal.n().to_string(),
                "l": ideal.l().to_string(),
                "form": to_value(&form),
            })
        }
        kind => {
            let name = if kind == SplittingType::Inert { "inert" } else { "ramified" };
            writeln!(text, "{name}").unwrap();
            json!({ "field": field_json(field), "q": q.to_string(), "splitting": name })
        }
    };
    Ok((result, text))
}

fn generator_json(g: &Generator) -> Value {
    json!({
        "element": g.element.to_string(),
        "u": g.element.u().to_string(),
        "v": g.element.v().to_string(),
        "norm": g.norm.to_string(),
        "coordinates": {
            "a": g.coords.a.to_string(),
            "b": g.coords.b.to_string(),
            "c": g.coords.c.to_string(),
            "d": g.coords.d.to_string(),
        },
    })
}

pub fn principal(d: i64, q: &BigInt, emit_derivation: bool) -> Result<Report> {
    let field = QuadraticField::new(d)?;
    let ideal = SplitPrimeIdeal::canonical(field, q)?;
    let form = ideal.associated_form();
    let method = Method::for_form(&form)?;
    let outcome = ideal.is_principal()?;
    let mut text = String::new();
    writeln!(text, "ideal {ideal} in {field}").unwrap();
    writeln!(text, "f_P = {form}").unwrap();
    writeln!(text, "method: {method}").unwrap();
    writeln!(text, "verdict: {}", if outcome.verdict { "principal" } else { "not principal" }).unwrap();

    let mut result = json!({
        "field": field_json(field),
        "ideal": ideal.to_string(),
        "q": q.to_string(),
        "n": ideal.n().to_string(),
        "l": ideal.l().to_string(),
        "form": to_value(&form),
        "method": to_value(&method),
        "verdict": outcome.verdict,
        "sign": outcome.sign,
        "representation": to_value(&outcome.representation),
        "generator": outcome.generator.as_ref().map(generator_json),
    });
    if let (Some(rep), Some(sign), Some(g)) = (&outcome.representation, outcome.sign, &outcome.generator) {
        writeln!(text, "representation: {rep} (sign {sign:+})").unwrap();
        let c = &g.coords;
        writeln!(text, "coordinates: c = {}, d = {}, a = {}, b = {}", c.c, c.d, c.a, c.b).unwrap();
        writeln!(text, "generator: {}", g.element).unwrap();
        writeln!(text, "norm: {} (verified)", g.norm).unwrap();
        if emit_derivation {
            let dv = ideal.derivation(rep, sign, &g.coords)?;
            writeln!(text, "w = {}\nz = {}\nr = {}\ns = {}", dv.w, dv.z, dv.r, dv.s).unwrap();
            result["derivation"] =
                json!({ "w": dv.w.to_string(), "z": dv.z.to_string(), "r": dv.r.to_string(), "s": dv.s.to_string() });
        }
    } else if emit_derivation {
        result["derivation"] = Value::Null;
    }
    Ok((result, text))
}

pub fn represents(form: &str, target: &BigInt, all_signs: bool) -> Result<Report> {
    let f: BinaryForm = form.parse()?;
    let method = Method::for_form(&f)?;
    if target == &BigInt::ZERO {
        return Err(Error::Domain("target must be nonzero".into()));
    }
    let mut targets = vec![target.clone()];
    if all_signs {
        targets.push(-target);
    }
    let mut text = format!("f = {f}\nmethod: {method}\n");
    let mut results = Vec::new();
    for m in &targets {
        let found = match method {
            Method::DefiniteEnumeration if m.sign() == num_bigint::Sign::Minus => None,
            Method::DefiniteEnumeration => represents_definite(&f, m)?,
            Method::IndefiniteWindow => represents_indefinite(&f, m)?,
        };
        match &found {
            Some(rep) => writeln!(text, "{rep}").unwrap(),
            None => writeln!(text, "target {m}: none").unwrap(),
        }
        results.push(json!({ "target": m.to_string(), "representation": to_value(&found) }));
    }
    Ok((json!({ "form": to_value(&f), "method": to_value(&method), "results": results }), text))
}

fn describe(e: &Evidence) -> String {
    match e {
        Evidence::RabinowitschTable { rows } => match (rows.first(), rows.last()) {
            (Some(first), Some(last)) => {
                format!("X^2 - X + c is prime for all {} values, {} .. {}", rows.len(), first.value, last.value)
            }
            _ => "X^2 - X + c has an empty range".to_string(),
        },
        Evidence::RabinowitschComposite { x, value, factor } => {
            format!("X^2 - X + c at X = {x} is {value} = {factor} * {}", value / factor)
        }
        Evidence::NonPrincipalIdeal { q, n, form } => {
            format!("({q}, {n}+√D) is not principal: {form} does not represent ±δ²")
        }
        Evidence::SpecialDiscriminant { discriminant } => format!("field discriminant {discriminant}"),
        Evidence::NotOneMod4 => "D ≢ 1 (mod 4) with |D| > 2".to_string(),
        Evidence::CompositeAbsD { factor } => format!("|D| is composite, divisible by {factor}"),
    }
}

fn h1_text(cert: &H1Certificate, full: bool) -> String {
    let mut text = format!(
        "D = {}: {}\nevidence: {}\n",
        cert.radicand,
        if cert.verdict { "class number one" } else { "class number greater than one" },
        describe(&cert.evidence)
    );
    if let Some(extra) = &cert.corroboration {
        writeln!(text, "corroboration: {}", describe(extra)).unwrap();
    }
    if full {
        if let Evidence::RabinowitschTable { rows } = &cert.evidence {
            for row in rows {
                writeln!(text, "{:>6} {:>12} {}", row.x, row.value, if row.prime { "prime" } else { "composite" })
                    .unwrap();
            }
        }
        writeln!(text, "certificate validated").unwrap();
    }
    text
}

pub fn h1(d: i64, full: bool) -> Result<Report> {
    let cert = classify_h1(d)?;
    cert.validate()?;
    let mut result = to_value(&cert);
    if full {
        result["validated"] = Value::Bool(true);
    }
    Ok((result, h1_text(&cert, full)))
}

pub fn scan(min: u64, max: u64, jobs: Option<usize>) -> Result<Report> {
    let work = || -> Result<Vec<H1Certificate>> {
        let certs = scan_h1(min, max)?;
        for cert in &certs {
            cert.validate()?;
        }
        Ok(certs)
    };
    let certs = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Domain(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    let ones = class_number_one(&certs);
    let list: Vec<String> = ones.iter().map(i64::to_string).collect();
    let text = format!(
        "scanned {} squarefree D with {min} ≤ |D| ≤ {max}, all certificates validated\nclass number one: {}\n",
        certs.len(),
        if list.is_empty() { "none".to_string() } else { list.join(" ") }
    );
    let result = json!({
        "scanned": certs.len(),
        "class_number_one": ones,
        "certificates": to_value(&certs),
    });
    Ok((result, text))
}
