//! FCIDUMP reader.
//!
//! Header: a Fortran namelist (`&FCI NORB=..,NELEC=..,MS2=.., &END`), possibly
//! spread over several lines; the `&FCI` / `&END` markers are optional.
//! Body: `value i j k l` with 1-based orbital indices.

use std::collections::HashMap;

use super::integrals::MolecularIntegrals;
use crate::error::{Error, Result};

pub fn parse_fcidump(text: &str) -> Result<MolecularIntegrals> {
    let mut header = String::new();
    let mut header_done = false;
    let mut body_start = 0;
    let lines: Vec<&str> = text.lines().collect();

    for (idx, raw) in lines.iter().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if looks_like_data(line) {
            body_start = idx;
            header_done = true;
            break;
        }
        header.push_str(line);
        header.push(',');
        let upper = line.to_ascii_uppercase();
        if upper.contains("&END") || upper == "/" || upper.ends_with('/') {
            body_start = idx + 1;
            header_done = true;
            break;
        }
    }
    if !header_done {
        body_start = lines.len();
    }

    let fields = parse_namelist(&header, header_line_of(&lines, body_start))?;
    let get = |key: &str| -> Result<i64> {
        let v = fields
            .get(key)
            .ok_or_else(|| Error::parse(1, format!("header is missing {key}")))?;
        v.first()
            .copied()
            .ok_or_else(|| Error::parse(1, format!("{key} has no value")))
    };
    let norb = get("NORB")?;
    let nelec = get("NELEC")?;
    let ms2 = fields.get("MS2").and_then(|v| v.first().copied()).unwrap_or(0);
    if norb <= 0 || nelec < 0 {
        return Err(Error::parse(1, format!("invalid NORB={norb} / NELEC={nelec}")));
    }
    let n = norb as usize;

    let mut core = 0.0;
    let mut one = vec![0.0; n * n];
    let mut two = vec![0.0; n.pow(4)];

    for (idx, raw) in lines.iter().enumerate().skip(body_start) {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let value = parse_value(tokens.next().unwrap_or(""))
            .ok_or_else(|| Error::parse(lineno, format!("invalid value in '{line}'")))?;
        let mut index = [0usize; 4];
        for slot in index.iter_mut() {
            let tok = tokens
                .next()
                .ok_or_else(|| Error::parse(lineno, "expected four orbital indices"))?;
            let i: i64 = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("invalid index '{tok}'")))?;
            if i < 0 || i > norb {
                return Err(Error::Index {
                    line: lineno,
                    index: i,
                    norb: n,
                });
            }
            *slot = i as usize;
        }
        if tokens.next().is_some() {
            return Err(Error::parse(lineno, "trailing tokens"));
        }
        match index {
            [0, 0, 0, 0] => core = value,
            [i, j, 0, 0] if i > 0 && j > 0 => {
                let (i, j) = (i - 1, j - 1);
                one[i * n + j] = value;
                one[j * n + i] = value;
            }
            [_, 0, 0, 0] => {} // orbital energies
            [i, j, k, l] if i > 0 && j > 0 && k > 0 && l > 0 => {
                let (i, j, k, l) = (i - 1, j - 1, k - 1, l - 1);
                let idx4 = |a: usize, b: usize, c: usize, d: usize| ((a * n + b) * n + c) * n + d;
                for (a, b, c, d) in [
                    (i, j, k, l),
                    (j, i, k, l),
                    (i, j, l, k),
                    (j, i, l, k),
                    (k, l, i, j),
                    (l, k, i, j),
                    (k, l, j, i),
                    (l, k, j, i),
                ] {
                    two[idx4(a, b, c, d)] = value;
                }
            }
            _ => {
                return Err(Error::parse(
                    lineno,
                    format!("unrecognised index pattern in '{line}'"),
                ))
            }
        }
    }

    MolecularIntegrals::new(n, nelec as usize, ms2 as i32, core, one, two)
}

fn header_line_of(lines: &[&str], body_start: usize) -> usize {
    body_start.min(lines.len()).max(1)
}

fn looks_like_data(line: &str) -> bool {
    let mut tokens = line.split_whitespace();
    match tokens.next() {
        Some(first) if parse_value(first).is_some() => tokens.count() >= 1,
        _ => false,
    }
}

fn parse_value(token: &str) -> Option<f64> {
    token.replace(['D', 'd'], "E").parse::<f64>().ok()
}

/// `KEY=v1,v2,...` pairs; values that are not integers are skipped.
fn parse_namelist(header: &str, last_line: usize) -> Result<HashMap<String, Vec<i64>>> {
    let cleaned = header
        .replace("&FCI", " ")
        .replace("&fci", " ")
        .replace("&END", " ")
        .replace("&end", " ")
        .replace('/', " ");
    let mut fields: HashMap<String, Vec<i64>> = HashMap::new();
    let mut current: Option<String> = None;
    for piece in cleaned.split([',', ' ', '\t']) {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        if let Some((key, value)) = piece.split_once('=') {
            let key = key.trim().to_ascii_uppercase();
            if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::parse(last_line, format!("malformed header entry '{piece}'")));
            }
            let entry = fields.entry(key.clone()).or_default();
            let value = value.trim();
            if !value.is_empty() {
                match value.parse::<i64>() {
                    Ok(v) => entry.push(v),
                    Err(_) if is_integer_field(&key) => {
                        return Err(Error::parse(
                            last_line,
                            format!("non-integer value '{value}' for {key}"),
                        ))
                    }
                    Err(_) => {}
                }
            }
            current = Some(key);
        } else if let Some(key) = &current {
            match piece.parse::<i64>() {
                Ok(v) => fields.entry(key.clone()).or_default().push(v),
                Err(_) => {
                    return Err(Error::parse(last_line, format!("malformed header token '{piece}'")))
                }
            }
        } else {
            return Err(Error::parse(last_line, format!("malformed header token '{piece}'")));
        }
    }
    Ok(fields)
}

fn is_integer_field(key: &str) -> bool {
    matches!(key, "NORB" | "NELEC" | "MS2" | "ISYM" | "ORBSYM")
}
