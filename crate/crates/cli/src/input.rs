use std::io::Read;
use std::path::Path;

use covg_core::com::ComJson;
use covg_core::equivariant::{braid_symmetric_group, GroupSpec};
use covg_core::matroidal::TotalOrder;
use covg_core::realize::{braid_com, fixture, Arrangement};
use covg_core::{Com, GroundSet};

use crate::error::{CliError, Result};
use crate::report::InputRecord;

fn read_bytes(path: &str) -> Result<Vec<u8>> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(io)?;
        Ok(buf)
    } else {
        std::fs::read(Path::new(path)).map_err(io)
    }
}

fn utf8(path: &str, bytes: Vec<u8>) -> Result<String> {
    String::from_utf8(bytes).map_err(|_| CliError::Usage(format!("{path}: not UTF-8")))
}

fn shortcut(spec: &str) -> Result<Option<Com>> {
    if let Some(n) = spec.strip_prefix("braid:") {
        let n = n
            .parse()
            .map_err(|_| CliError::Usage(format!("bad braid size in {spec:?}")))?;
        return Ok(Some(braid_com(n)?));
    }
    if let Some(name) = spec.strip_prefix("fixture:") {
        return Ok(Some(fixture(name)?));
    }
    Ok(None)
}

/// A validated COM from a path, stdin, or shortcut.
pub fn load_com(spec: &str) -> Result<(Com, InputRecord)> {
    if let Some(m) = shortcut(spec)? {
        let rec = InputRecord::new(spec, m.to_json().as_bytes());
        return Ok((m, rec));
    }
    let bytes = read_bytes(spec)?;
    let rec = InputRecord::new(spec, &bytes);
    Ok((Com::from_json(&utf8(spec, bytes)?)?, rec))
}

/// A family of covectors without the axiom check, for `check`.
pub fn load_unchecked(spec: &str) -> Result<(Com, InputRecord)> {
    if let Some(m) = shortcut(spec)? {
        let rec = InputRecord::new(spec, m.to_json().as_bytes());
        return Ok((m, rec));
    }
    let bytes = read_bytes(spec)?;
    let rec = InputRecord::new(spec, &bytes);
    let j: ComJson = serde_json::from_str(&utf8(spec, bytes)?).map_err(covg_core::Error::from)?;
    let ground = GroundSet::new(j.ground)?;
    let covectors = j
        .covectors
        .iter()
        .map(|s| s.parse())
        .collect::<covg_core::Result<Vec<_>>>()?;
    Ok((Com::new_unchecked(ground, covectors)?, rec))
}

pub fn load_arrangement(path: &Path) -> Result<(Arrangement, InputRecord)> {
    let p = path.display().to_string();
    let bytes = read_bytes(&p)?;
    let rec = InputRecord::new(p.clone(), &bytes);
    Ok((Arrangement::from_json(&utf8(&p, bytes)?)?, rec))
}

/// A group from JSON, or `sym:N` for the symmetric group on braid:N.
pub fn load_group(spec: &str, ground: &GroundSet) -> Result<(GroupSpec, InputRecord)> {
    if let Some(n) = spec.strip_prefix("sym:") {
        let n = n
            .parse()
            .map_err(|_| CliError::Usage(format!("bad group size in {spec:?}")))?;
        let g = braid_symmetric_group(n)?;
        if g.degree() != ground.len() {
            return Err(CliError::Usage(format!(
                "{spec} acts on {} elements, the COM has {}",
                g.degree(),
                ground.len()
            )));
        }
        let rec = InputRecord::new(spec, g.to_json(ground).as_bytes());
        return Ok((g, rec));
    }
    let bytes = read_bytes(spec)?;
    let rec = InputRecord::new(spec, &bytes);
    Ok((GroupSpec::from_json(&utf8(spec, bytes)?, ground)?, rec))
}

/// `--order a,b,c`, or the ground order.
pub fn parse_order(ground: &GroundSet, order: Option<&str>) -> Result<TotalOrder> {
    match order {
        None => Ok(TotalOrder::natural(ground.len())),
        Some(s) => {
            let labels: Vec<&str> = s.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
            Ok(TotalOrder::from_labels(ground, &labels)?)
        }
    }
}
