//! Matroid constructor strings and block syntax.

use std::collections::BTreeSet;

use equikl::matroid::MatroidJson;
use equikl::{Error, Label, Matroid, Result, YoungGroup};

fn numbers(family: &str, body: &str, count: usize) -> Result<Vec<usize>> {
    let out = body
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad number {t:?} in {family}:{body}"))))
        .collect::<Result<Vec<_>>>()?;
    if out.len() != count {
        return Err(Error::Parse(format!("{family} takes {count} numbers, got {}", out.len())));
    }
    Ok(out)
}

fn labels(n: usize) -> Vec<Label> {
    (1..=n as Label).collect()
}

/// `uniform:k,n`, `cycle:n`, `glued:a,b`, `lambda:r,k,h,n`, `pi:r,k,h,n`,
/// `boolean:n`, or a path to a matroid JSON file. Λ and Π use `F = {1..h}`.
pub fn parse_matroid(spec: &str) -> Result<Matroid> {
    let Some((family, body)) = spec.split_once(':') else {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| Error::Io(format!("{spec} is neither a constructor nor a readable file: {e}")))?;
        let json: MatroidJson = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        return Matroid::from_json(&json);
    };
    match family {
        "uniform" => {
            let v = numbers(family, body, 2)?;
            Matroid::uniform(v[0], &labels(v[1]))
        }
        "cycle" => Matroid::cycle(&labels(numbers(family, body, 1)?[0])),
        "boolean" => Matroid::boolean(&labels(numbers(family, body, 1)?[0])),
        "glued" => {
            let v = numbers(family, body, 2)?;
            let (a, b) = (v[0] as Label, v[1] as Label);
            if a < 2 || b < 2 {
                return Err(Error::Invalid("glued cycles need a, b >= 2".into()));
            }
            Matroid::glued_cycles(&(1..=a).collect::<Vec<_>>(), &(a..a + b).collect::<Vec<_>>(), a)
        }
        "lambda" | "pi" => {
            let v = numbers(family, body, 4)?;
            let (r, k, h, n) = (v[0], v[1], v[2], v[3]);
            if h > n {
                return Err(Error::Invalid(format!("h = {h} exceeds n = {n}")));
            }
            if family == "lambda" {
                Matroid::lambda(r, k, &labels(h), &labels(n))
            } else {
                Matroid::pi(r, k, &labels(h), &labels(n))
            }
        }
        _ => Err(Error::Parse(format!("unknown matroid family {family:?}"))),
    }
}

/// Parses `{..}|{..}` blocks on `ground`; elements not listed become fixed points.
pub fn parse_blocks(blocks: Option<&str>, ground: &[Label]) -> Result<YoungGroup> {
    let Some(text) = blocks else {
        return Ok(YoungGroup::trivial(ground));
    };
    let listed: YoungGroup = text.parse()?;
    let all: BTreeSet<Label> = ground.iter().copied().collect();
    if let Some(x) = listed.ground().into_iter().find(|x| !all.contains(x)) {
        return Err(Error::GroupMismatch(format!("label {x} is not in the ground set")));
    }
    let mut out: Vec<Vec<Label>> = listed.blocks().to_vec();
    let seen: BTreeSet<Label> = listed.ground().into_iter().collect();
    out.extend(ground.iter().filter(|x| !seen.contains(x)).map(|&x| vec![x]));
    YoungGroup::new(out)
}
