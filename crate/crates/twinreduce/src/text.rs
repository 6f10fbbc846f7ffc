//! Line-oriented text formats: edge lists, partitions, reduction traces and
//! generator files.

use std::fmt::Write;

use twinreduce_core::{Graph, MergeStep, Partition, Permutation, ReductionTrace, TwinKind};

use crate::FormatError;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_index(token: &str, line: usize) -> Result<usize, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::line(line, format!("unparsable token {token:?}")))
}

/// `n <count>` followed by one `u v` line per edge. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| FormatError::line(1, "missing \"n <count>\" header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => parse_index(count, line)?,
        _ => return Err(FormatError::line(line, "expected \"n <count>\"")),
    };
    let mut g = Graph::empty(n);
    for (line, content) in lines {
        let (u, v) = match content.split_whitespace().collect::<Vec<_>>().as_slice() {
            [u, v] => (parse_index(u, line)?, parse_index(v, line)?),
            _ => return Err(FormatError::line(line, "expected \"u v\"")),
        };
        if u >= n || v >= n {
            return Err(FormatError::line(
                line,
                format!("vertex {} out of range 0..{n}", u.max(v)),
            ));
        }
        if u == v {
            return Err(FormatError::line(line, format!("self-loop at vertex {u}")));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// One part per line, space-separated vertex indices, over `0..n`.
pub fn parse_partition(text: &str, n: usize) -> Result<Partition, FormatError> {
    let mut parts = Vec::new();
    for (line, content) in content_lines(text) {
        let part = content
            .split_whitespace()
            .map(|t| parse_index(t, line))
            .collect::<Result<Vec<_>, _>>()?;
        parts.push(part);
    }
    Ok(Partition::from_parts(n, parts)?)
}

pub fn write_partition(p: &Partition) -> String {
    p.to_string()
}

/// `step <i> merge <minA> <minB> kind <open|closed>` per merge, then the
/// final partition.
pub fn write_trace(trace: &ReductionTrace) -> String {
    let mut out = String::new();
    for step in &trace.steps {
        writeln!(
            out,
            "step {} merge {} {} kind {}",
            step.index, step.part_a, step.part_b, step.kind
        )
        .unwrap();
    }
    out.push_str(&trace.partition.to_string());
    out
}

pub(crate) fn parse_kind(token: &str) -> Option<TwinKind> {
    match token {
        "open" => Some(TwinKind::Open),
        "closed" => Some(TwinKind::Closed),
        _ => None,
    }
}

/// Inverse of [`write_trace`]; the vertex count is that of the partition.
/// Lines starting with `#` are ignored.
pub fn parse_trace(text: &str) -> Result<ReductionTrace, FormatError> {
    let mut steps = Vec::new();
    let mut partition_lines = String::new();
    let mut n = 0;
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "step" {
            if !partition_lines.is_empty() {
                return Err(FormatError::line(line, "step after the partition"));
            }
            let step = match tokens.as_slice() {
                [_, index, "merge", a, b, "kind", kind] => MergeStep {
                    index: parse_index(index, line)?,
                    part_a: parse_index(a, line)?,
                    part_b: parse_index(b, line)?,
                    kind: parse_kind(kind).ok_or_else(|| FormatError::line(line, "kind must be open or closed"))?,
                },
                _ => return Err(FormatError::line(line, "malformed step record")),
            };
            steps.push(step);
        } else {
            n += tokens.len();
            partition_lines.push_str(content);
            partition_lines.push('\n');
        }
    }
    let partition = if n == 0 {
        Partition::from_labels::<usize>(&[])
    } else {
        parse_partition(&partition_lines, n)?
    };
    Ok(ReductionTrace { n, steps, partition })
}

/// Generator file: one permutation per line in disjoint-cycle notation over
/// 0-based points, `#` comments, and an optional `degree <m>` line. Without
/// it the degree is one more than the largest point mentioned.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>, FormatError> {
    let mut degree = None;
    let mut cycle_lines = Vec::new();
    for (line, content) in content_lines(text) {
        if let Some(rest) = content.strip_prefix("degree") {
            degree = Some(parse_index(rest.trim(), line)?);
            continue;
        }
        cycle_lines.push((line, parse_cycles(content, line)?));
    }
    let max_point = cycle_lines.iter().flat_map(|(_, c)| c.iter().flatten()).copied().max();
    let degree = match (degree, max_point) {
        (Some(d), Some(max)) if max >= d => {
            return Err(FormatError::Invalid(format!("point {max} exceeds declared degree {d}")))
        }
        (Some(d), _) => d,
        (None, Some(max)) => max + 1,
        (None, None) => 0,
    };
    cycle_lines
        .into_iter()
        .map(|(line, cycles)| {
            Permutation::from_cycles(degree, &cycles).map_err(|e| FormatError::line(line, e.to_string()))
        })
        .collect()
}

fn parse_cycles(content: &str, line: usize) -> Result<Vec<Vec<usize>>, FormatError> {
    let mut cycles = Vec::new();
    let mut rest = content;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| FormatError::line(line, "expected '('"))?;
        let close = open
            .find(')')
            .ok_or_else(|| FormatError::line(line, "unclosed cycle"))?;
        let cycle = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| parse_index(t, line))
            .collect::<Result<Vec<_>, _>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

pub fn write_generators(generators: &[Permutation]) -> String {
    let mut out = String::new();
    if let Some(first) = generators.first() {
        writeln!(out, "degree {}", first.degree()).unwrap();
    }
    for p in generators {
        writeln!(out, "{p}").unwrap();
    }
    out
}
