//! On-disk text formats.
//!
//! Tournament file (`.tour`): UTF-8 text, one tournament per line as
//! `<n> <bits>` where `<bits>` is a '0'/'1' string of length `n(n-1)/2` in
//! row-major pair order. Blank lines and lines starting with `#` are
//! ignored. A decycling sequence file starts with `k <k_cap>` followed by
//! one step per line as space-separated vertex indices.

use crate::error::{Error, Result};
use crate::tournament::{pair_count, DecyclingSequence, InversionStep, Tournament};

/// One tournament as a `.tour` line.
pub fn serialize_tournament(t: &Tournament) -> String {
    if t.n() == 1 {
        return "1".to_string();
    }
    format!("{} {}", t.n(), t.bit_string())
}

/// Several tournaments, one per line, trailing newline included.
pub fn serialize_tournaments<'a>(ts: impl IntoIterator<Item = &'a Tournament>) -> String {
    let mut out = String::new();
    for t in ts {
        out.push_str(&serialize_tournament(t));
        out.push('\n');
    }
    out
}

fn parse_tournament_line(lineno: usize, line: &str) -> Result<Tournament> {
    let mut parts = line.split_whitespace();
    let n: usize = parts
        .next()
        .ok_or_else(|| Error::format(lineno, "empty record"))?
        .parse()
        .map_err(|_| Error::format(lineno, "vertex count is not a number"))?;
    if n == 0 {
        return Err(Error::format(lineno, "vertex count must be positive"));
    }
    let bits_str = parts.next().unwrap_or("");
    if parts.next().is_some() {
        return Err(Error::format(lineno, "trailing tokens after bit string"));
    }
    if bits_str.len() != pair_count(n) {
        return Err(Error::format(
            lineno,
            format!(
                "expected {} bits for n={}, got {}",
                pair_count(n),
                n,
                bits_str.len()
            ),
        ));
    }
    let mut bits = Vec::with_capacity(bits_str.len());
    for c in bits_str.chars() {
        match c {
            '0' => bits.push(false),
            '1' => bits.push(true),
            other => {
                return Err(Error::format(lineno, format!("invalid bit character '{other}'")))
            }
        }
    }
    Tournament::from_bits(n, &bits).map_err(|e| match e {
        Error::Format { msg, .. } => Error::format(lineno, msg),
        other => other,
    })
}

/// Parses a `.tour` document; errors carry the offending 1-based line number.
pub fn parse_tournaments(text: &str) -> Result<Vec<Tournament>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_tournament_line(idx + 1, line)?);
    }
    Ok(out)
}

/// Parses a document that must contain exactly one tournament.
pub fn parse_single_tournament(text: &str) -> Result<Tournament> {
    let ts = parse_tournaments(text)?;
    match ts.len() {
        1 => Ok(ts.into_iter().next().expect("one element")),
        k => Err(Error::input(format!("expected exactly one tournament, found {k}"))),
    }
}

/// Decycling sequence file: `k <k_cap>` header, then one step per line.
pub fn serialize_sequence(s: &DecyclingSequence) -> String {
    let mut out = format!("k {}\n", s.k_cap);
    for step in &s.steps {
        let verts: Vec<String> = step.verts().iter().map(|v| v.to_string()).collect();
        out.push_str(&verts.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_sequence(text: &str) -> Result<DecyclingSequence> {
    let mut k_cap: Option<usize> = None;
    let mut steps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if k_cap.is_none() {
            let rest = line
                .strip_prefix('k')
                .ok_or_else(|| Error::format(lineno, "expected header `k <k_cap>`"))?;
            k_cap = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| Error::format(lineno, "bad k_cap in header"))?,
            );
            continue;
        }
        let verts: Result<Vec<usize>> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::format(lineno, format!("bad vertex index '{tok}'")))
            })
            .collect();
        let step = InversionStep::new(verts?)
            .map_err(|e| Error::format(lineno, e.to_string()))?;
        steps.push(step);
    }
    let k_cap = k_cap.ok_or_else(|| Error::format(0, "missing `k <k_cap>` header"))?;
    DecyclingSequence::new(k_cap, steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_line() {
        let bits = [true, false, true];
        let t = Tournament::from_bits(3, &bits).unwrap();
        assert_eq!(serialize_tournament(&t), "3 101");
        assert_eq!(parse_tournaments("3 101").unwrap(), vec![t]);
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let text = "# db\n\n3 110\n   \n2 1\n";
        let ts = parse_tournaments(text).unwrap();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[1].n(), 2);
    }

    #[test]
    fn length_mismatch_reports_line() {
        let err = parse_tournaments("3 110\n4 0101\n").unwrap_err();
        match err {
            Error::Format { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn single_vertex_round_trip() {
        let t = Tournament::random(1, 0);
        let line = serialize_tournament(&t);
        assert_eq!(parse_tournaments(&line).unwrap()[0], t);
    }

    #[test]
    fn round_trip_seeded() {
        for seed in 0..1000 {
            let n = 1 + (seed as usize % 12);
            let t = Tournament::random(n, seed);
            let text = serialize_tournament(&t);
            assert_eq!(parse_tournaments(&text).unwrap(), vec![t]);
        }
    }

    #[test]
    fn sequence_round_trip() {
        let steps = vec![
            InversionStep::new(vec![0, 1, 2]).unwrap(),
            InversionStep::new(vec![3, 5]).unwrap(),
        ];
        let s = DecyclingSequence::new(3, steps).unwrap();
        let text = serialize_sequence(&s);
        assert_eq!(text, "k 3\n0 1 2\n3 5\n");
        assert_eq!(parse_sequence(&text).unwrap(), s);
    }

    #[test]
    fn sequence_rejects_oversized_step() {
        let text = "k 2\n0 1 2\n";
        assert!(parse_sequence(text).is_err());
    }
}
