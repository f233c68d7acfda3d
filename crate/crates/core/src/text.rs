//! The `matroid v1` interchange format.
//!
//! ```text
//! matroid v1
//! n 6
//! rank 3
//! circuits
//! 0 1 3
//! 0 2 4
//! end
//! ```
//!
//! Line 1 is the literal header, line 2 the element count, then an optional
//! `rank` line (cross-checked against the reconstruction), the `circuits`
//! keyword, one circuit per line as strictly increasing 0-based indices, and
//! a final `end`. Writers sort circuits by (size, lexicographic index
//! sequence). Readers reject duplicate or comparable circuits.

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::{Matroid, DEFAULT_CAP};

pub fn render_matroid(m: &Matroid) -> String {
    let mut sorted: Vec<Vec<usize>> = m.circuits().iter().map(|c| c.indices()).collect();
    sorted.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let mut out = String::new();
    out.push_str("matroid v1\n");
    out.push_str(&format!("n {}\n", m.n()));
    out.push_str(&format!("rank {}\n", m.full_rank()));
    out.push_str("circuits\n");
    for c in sorted {
        let words: Vec<String> = c.iter().map(|i| i.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    parse_matroid_with_cap(text, DEFAULT_CAP)
}

pub fn parse_matroid_with_cap(text: &str, cap: usize) -> Result<Matroid> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, msg: &str| Error::Parse {
        line,
        msg: msg.to_string(),
    };

    let (line, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    if header != "matroid v1" {
        return Err(err(line, "expected header 'matroid v1'"));
    }

    let (line, nline) = lines.next().ok_or_else(|| err(line, "missing 'n <int>'"))?;
    let n: usize = match nline.strip_prefix("n ") {
        Some(rest) => rest
            .trim()
            .parse()
            .map_err(|_| err(line, "bad element count"))?,
        None => return Err(err(line, "expected 'n <int>'")),
    };

    let (line, next) = lines
        .next()
        .ok_or_else(|| err(line, "missing 'circuits' section"))?;
    let mut declared_rank = None;
    let circuits_line;
    if let Some(rest) = next.strip_prefix("rank ") {
        declared_rank = Some((
            line,
            rest.trim()
                .parse::<usize>()
                .map_err(|_| err(line, "bad rank"))?,
        ));
        let (line2, kw) = lines
            .next()
            .ok_or_else(|| err(line, "missing 'circuits' section"))?;
        if kw != "circuits" {
            return Err(err(line2, "expected 'circuits'"));
        }
        circuits_line = line2;
    } else if next == "circuits" {
        circuits_line = line;
    } else {
        return Err(err(line, "expected 'rank <int>' or 'circuits'"));
    }

    let mut circuits = Vec::new();
    let mut saw_end = false;
    let mut last_line = circuits_line;
    for (line, l) in lines.by_ref() {
        last_line = line;
        if l == "end" {
            saw_end = true;
            break;
        }
        let mut indices = Vec::new();
        for word in l.split(' ') {
            let i: usize = word
                .parse()
                .map_err(|_| err(line, "circuit lines must be integers separated by single spaces"))?;
            if i >= n {
                return Err(err(line, "element index out of range"));
            }
            if let Some(&prev) = indices.last() {
                if i <= prev {
                    return Err(err(line, "indices must be strictly increasing"));
                }
            }
            indices.push(i);
        }
        let mask = SubsetMask::from_indices(indices.iter().copied());
        for &earlier in &circuits {
            let e: SubsetMask = earlier;
            if e.is_subset_of(mask) || mask.is_subset_of(e) {
                return Err(err(line, "duplicate or comparable circuits"));
            }
        }
        circuits.push(mask);
    }
    if !saw_end {
        return Err(err(last_line, "missing final 'end'"));
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, "content after 'end'"));
    }

    let m = Matroid::from_circuits_with_cap(n, &circuits, cap).map_err(|e| match e {
        Error::InvalidCircuits { reason, witness } => Error::Parse {
            line: circuits_line,
            msg: format!("invalid circuit family: {reason} (witness {witness:?})"),
        },
        other => other,
    })?;
    if let Some((rank_line, r)) = declared_rank {
        if r != m.full_rank() {
            return Err(err(
                rank_line,
                &format!("declared rank {r} but circuits give rank {}", m.full_rank()),
            ));
        }
    }
    Ok(m)
}
