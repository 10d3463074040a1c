//! Free-format MPS reading and writing.
//!
//! The parser accepts the sections `NAME`, `OBJSENSE`, `ROWS`, `COLUMNS`
//! (with `'MARKER'` / `'INTORG'` / `'INTEND'` integrality toggles), `RHS`,
//! `RANGES`, `BOUNDS` and `ENDATA`. Section headers start in column one;
//! data lines are indented. Fields are whitespace-separated. Comment
//! lines start with `*`.
//!
//! Conventions:
//! * The first `N` row is the objective; additional `N` rows are ignored
//!   with a warning.
//! * Absent RHS entries are zero. Default bounds are `[0, +inf)` for
//!   continuous and integer variables and `[0, 1]` for binaries (`BV`).
//! * `RANGES` entries are expanded into an extra inequality row appended
//!   after the declared rows, so the parsed instance has no ranged rows.
//! * `OBJSENSE MAX` selects maximization; the writer emits the section
//!   only in that case.
//! * The writer prints numbers with 17 significant digits
//!   (`{:.16e}`), one coefficient per line, single-space separators, so
//!   write -> parse -> write is byte-identical and value-exact.
//! * Implied-integer variables are written inside integrality markers
//!   like plain integers; MPS has no portable encoding for them, so they
//!   parse back as `Integer`.

use std::collections::HashMap;

use thiserror::Error;

use crate::instance::{CsrMatrix, InstanceError, MilpInstance, ObjSense, RowSense, VarType};

#[derive(Debug, Error)]
pub enum MpsError {
    #[error("malformed MPS section: {0}")]
    MalformedSection(String),
    #[error("reference to undeclared row or column: {0}")]
    UnknownRowOrColumn(String),
    #[error("MPS file declares no variables or no constraints")]
    EmptyProblem,
    #[error("parsed instance violates invariants: {0}")]
    Invalid(#[from] InstanceError),
}

fn malformed(msg: impl Into<String>) -> MpsError {
    MpsError::MalformedSection(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Name,
    ObjSense,
    Rows,
    Columns,
    Rhs,
    Ranges,
    Bounds,
    Done,
}

#[derive(Debug, Clone, Copy)]
enum RowRef {
    Objective,
    Constraint(usize),
    IgnoredFree,
}

/// Parses free-format MPS text, discarding warnings.
pub fn parse_mps(input: &[u8]) -> Result<MilpInstance, MpsError> {
    parse_mps_with_warnings(input).map(|(inst, _)| inst)
}

/// Parses free-format MPS text, reporting non-fatal irregularities
/// (ignored free rows, objective-row RHS entries) as warning strings.
pub fn parse_mps_with_warnings(input: &[u8]) -> Result<(MilpInstance, Vec<String>), MpsError> {
    let text = std::str::from_utf8(input)
        .map_err(|_| malformed("input is not valid UTF-8"))?;

    let mut warnings = Vec::new();
    let mut section = Section::None;
    let mut name = String::new();
    let mut objective_sense = ObjSense::Minimize;

    let mut row_refs: HashMap<String, RowRef> = HashMap::new();
    let mut obj_row_seen = false;
    let mut senses: Vec<RowSense> = Vec::new();
    let mut row_order: Vec<String> = Vec::new();

    let mut col_index: HashMap<String, usize> = HashMap::new();
    let mut c: Vec<f64> = Vec::new();
    let mut l: Vec<f64> = Vec::new();
    let mut u: Vec<f64> = Vec::new();
    let mut integrality: Vec<VarType> = Vec::new();
    let mut triplets: Vec<(usize, usize, f64)> = Vec::new();
    let mut b: Vec<f64> = Vec::new();
    let mut ranges: Vec<(usize, f64)> = Vec::new();
    let mut in_integer_block = false;

    let parse_value = |tok: &str| -> Result<f64, MpsError> {
        tok.parse::<f64>()
            .map_err(|_| malformed(format!("bad numeric field '{tok}'")))
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line_id = lineno + 1;
        if raw.trim().is_empty() || raw.trim_start().starts_with('*') {
            continue;
        }
        if section == Section::Done {
            return Err(malformed(format!(
                "content after ENDATA at line {line_id}"
            )));
        }
        let is_header = !raw.starts_with(char::is_whitespace);
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if is_header {
            let (head, rest) = (tokens[0], &tokens[1..]);
            section = match head {
                "NAME" => {
                    if let Some(n) = rest.first() {
                        name = (*n).to_string();
                    }
                    Section::Name
                }
                "OBJSENSE" => {
                    if let Some(v) = rest.first() {
                        objective_sense = parse_objsense(v, line_id)?;
                    }
                    Section::ObjSense
                }
                "ROWS" => Section::Rows,
                "COLUMNS" => Section::Columns,
                "RHS" => Section::Rhs,
                "RANGES" => Section::Ranges,
                "BOUNDS" => Section::Bounds,
                "ENDATA" => Section::Done,
                other => {
                    return Err(malformed(format!(
                        "unknown section '{other}' at line {line_id}"
                    )))
                }
            };
            continue;
        }

        match section {
            Section::None | Section::Name | Section::Done => {
                return Err(malformed(format!(
                    "data line outside any section at line {line_id}"
                )));
            }
            Section::ObjSense => {
                if tokens.len() != 1 {
                    return Err(malformed(format!(
                        "OBJSENSE expects a single token at line {line_id}"
                    )));
                }
                objective_sense = parse_objsense(tokens[0], line_id)?;
            }
            Section::Rows => {
                if tokens.len() != 2 {
                    return Err(malformed(format!(
                        "ROWS line needs 2 fields at line {line_id}"
                    )));
                }
                let (kind, row_name) = (tokens[0], tokens[1]);
                if row_refs.contains_key(row_name) {
                    return Err(malformed(format!(
                        "duplicate row '{row_name}' at line {line_id}"
                    )));
                }
                let r = match kind {
                    "N" | "n" => {
                        if obj_row_seen {
                            warnings.push(format!(
                                "ignoring extra free row '{row_name}' (line {line_id})"
                            ));
                            RowRef::IgnoredFree
                        } else {
                            obj_row_seen = true;
                            RowRef::Objective
                        }
                    }
                    "L" | "l" => RowRef::Constraint(push_row(&mut senses, RowSense::Le)),
                    "G" | "g" => RowRef::Constraint(push_row(&mut senses, RowSense::Ge)),
                    "E" | "e" => RowRef::Constraint(push_row(&mut senses, RowSense::Eq)),
                    other => {
                        return Err(malformed(format!(
                            "unknown row type '{other}' at line {line_id}"
                        )))
                    }
                };
                if let RowRef::Constraint(_) = r {
                    row_order.push(row_name.to_string());
                }
                row_refs.insert(row_name.to_string(), r);
            }
            Section::Columns => {
                if is_marker_line(&tokens) {
                    match marker_kind(&tokens) {
                        Some(true) => in_integer_block = true,
                        Some(false) => in_integer_block = false,
                        None => {
                            return Err(malformed(format!(
                                "marker line without INTORG/INTEND at line {line_id}"
                            )))
                        }
                    }
                    continue;
                }
                if tokens.len() != 3 && tokens.len() != 5 {
                    return Err(malformed(format!(
                        "COLUMNS line needs 3 or 5 fields at line {line_id}"
                    )));
                }
                let col_name = tokens[0];
                let j = *col_index.entry(col_name.to_string()).or_insert_with(|| {
                    c.push(0.0);
                    l.push(0.0);
                    u.push(f64::INFINITY);
                    integrality.push(if in_integer_block {
                        VarType::Integer
                    } else {
                        VarType::Continuous
                    });
                    c.len() - 1
                });
                for pair in tokens[1..].chunks(2) {
                    let row_name = pair[0];
                    let value = parse_value(pair[1])?;
                    match row_refs.get(row_name) {
                        Some(RowRef::Objective) => c[j] += value,
                        Some(RowRef::Constraint(i)) => {
                            if value != 0.0 {
                                triplets.push((*i, j, value));
                            }
                        }
                        Some(RowRef::IgnoredFree) => {}
                        None => {
                            return Err(MpsError::UnknownRowOrColumn(format!(
                                "row '{row_name}' at line {line_id}"
                            )))
                        }
                    }
                }
            }
            Section::Rhs => {
                if tokens.len() != 3 && tokens.len() != 5 {
                    return Err(malformed(format!(
                        "RHS line needs 3 or 5 fields at line {line_id}"
                    )));
                }
                b.resize(senses.len(), 0.0);
                for pair in tokens[1..].chunks(2) {
                    let row_name = pair[0];
                    let value = parse_value(pair[1])?;
                    match row_refs.get(row_name) {
                        Some(RowRef::Objective) => warnings.push(format!(
                            "ignoring RHS entry on objective row (line {line_id})"
                        )),
                        Some(RowRef::Constraint(i)) => b[*i] = value,
                        Some(RowRef::IgnoredFree) => {}
                        None => {
                            return Err(MpsError::UnknownRowOrColumn(format!(
                                "row '{row_name}' at line {line_id}"
                            )))
                        }
                    }
                }
            }
            Section::Ranges => {
                if tokens.len() != 3 && tokens.len() != 5 {
                    return Err(malformed(format!(
                        "RANGES line needs 3 or 5 fields at line {line_id}"
                    )));
                }
                for pair in tokens[1..].chunks(2) {
                    let row_name = pair[0];
                    let value = parse_value(pair[1])?;
                    match row_refs.get(row_name) {
                        Some(RowRef::Constraint(i)) => ranges.push((*i, value)),
                        Some(RowRef::Objective) | Some(RowRef::IgnoredFree) => {
                            return Err(malformed(format!(
                                "RANGES entry on non-constraint row at line {line_id}"
                            )))
                        }
                        None => {
                            return Err(MpsError::UnknownRowOrColumn(format!(
                                "row '{row_name}' at line {line_id}"
                            )))
                        }
                    }
                }
            }
            Section::Bounds => {
                let kind = tokens[0].to_ascii_uppercase();
                let needs_value = matches!(kind.as_str(), "UP" | "LO" | "FX" | "UI" | "LI");
                let min_len = if needs_value { 4 } else { 3 };
                if tokens.len() < min_len || tokens.len() > 4 {
                    return Err(malformed(format!(
                        "BOUNDS line needs {min_len} fields at line {line_id}"
                    )));
                }
                let col_name = tokens[2];
                let j = *col_index.get(col_name).ok_or_else(|| {
                    MpsError::UnknownRowOrColumn(format!(
                        "column '{col_name}' at line {line_id}"
                    ))
                })?;
                match kind.as_str() {
                    "UP" => u[j] = parse_value(tokens[3])?,
                    "LO" => l[j] = parse_value(tokens[3])?,
                    "FX" => {
                        let v = parse_value(tokens[3])?;
                        l[j] = v;
                        u[j] = v;
                    }
                    "FR" => {
                        l[j] = f64::NEG_INFINITY;
                        u[j] = f64::INFINITY;
                    }
                    "MI" => l[j] = f64::NEG_INFINITY,
                    "PL" => u[j] = f64::INFINITY,
                    "BV" => {
                        integrality[j] = VarType::Binary;
                        l[j] = 0.0;
                        u[j] = 1.0;
                    }
                    "UI" => {
                        integrality[j] = VarType::Integer;
                        u[j] = parse_value(tokens[3])?;
                    }
                    "LI" => {
                        integrality[j] = VarType::Integer;
                        l[j] = parse_value(tokens[3])?;
                    }
                    other => {
                        return Err(malformed(format!(
                            "unknown bound type '{other}' at line {line_id}"
                        )))
                    }
                }
            }
        }
    }

    if section != Section::Done {
        return Err(malformed("missing ENDATA"));
    }
    if !obj_row_seen {
        return Err(malformed("no objective (N) row declared"));
    }
    if c.is_empty() || senses.is_empty() {
        return Err(MpsError::EmptyProblem);
    }
    b.resize(senses.len(), 0.0);

    // expand ranged rows into an extra appended inequality
    for (i, r) in ranges {
        let (lo, hi) = match senses[i] {
            RowSense::Le => (b[i] - r.abs(), b[i]),
            RowSense::Ge => (b[i], b[i] + r.abs()),
            RowSense::Eq => {
                if r >= 0.0 {
                    (b[i], b[i] + r)
                } else {
                    (b[i] + r, b[i])
                }
            }
        };
        let entries: Vec<(usize, usize, f64)> = triplets
            .iter()
            .filter(|(row, _, _)| *row == i)
            .map(|&(_, col, v)| (senses.len(), col, v))
            .collect();
        senses[i] = RowSense::Ge;
        b[i] = lo;
        senses.push(RowSense::Le);
        b.push(hi);
        triplets.extend(entries);
    }

    let n = c.len();
    let m = senses.len();
    let rows = CsrMatrix::from_triplets(m, n, triplets);
    let inst = MilpInstance {
        name,
        objective_sense,
        c,
        rows,
        senses,
        b,
        l,
        u,
        integrality,
    };
    inst.validate()?;
    Ok((inst, warnings))
}

fn parse_objsense(tok: &str, line_id: usize) -> Result<ObjSense, MpsError> {
    match tok.to_ascii_uppercase().as_str() {
        "MIN" | "MINIMIZE" => Ok(ObjSense::Minimize),
        "MAX" | "MAXIMIZE" => Ok(ObjSense::Maximize),
        other => Err(malformed(format!(
            "bad OBJSENSE '{other}' at line {line_id}"
        ))),
    }
}

fn push_row(senses: &mut Vec<RowSense>, s: RowSense) -> usize {
    senses.push(s);
    senses.len() - 1
}

fn is_marker_line(tokens: &[&str]) -> bool {
    tokens.iter().any(|t| t.trim_matches('\'') == "MARKER") && tokens.len() >= 3
}

fn marker_kind(tokens: &[&str]) -> Option<bool> {
    for t in tokens {
        match t.trim_matches('\'') {
            "INTORG" => return Some(true),
            "INTEND" => return Some(false),
            _ => {}
        }
    }
    None
}

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

/// Serializes an instance to canonical free-format MPS. Total on valid
/// instances; row and column names are generated as `c{i}` / `x{j}`.
pub fn write_mps(inst: &MilpInstance) -> Vec<u8> {
    let n = inst.n_vars();
    let m = inst.n_cons();
    let mut out = String::new();
    let file_name = if inst.name.is_empty() {
        "UNNAMED".to_string()
    } else {
        inst.name.replace(char::is_whitespace, "_")
    };
    out.push_str(&format!("NAME {file_name}\n"));
    if inst.objective_sense == ObjSense::Maximize {
        out.push_str("OBJSENSE\n MAX\n");
    }
    out.push_str("ROWS\n N obj\n");
    for i in 0..m {
        let kind = match inst.senses[i] {
            RowSense::Le => "L",
            RowSense::Ge => "G",
            RowSense::Eq => "E",
        };
        out.push_str(&format!(" {kind} c{i}\n"));
    }

    // column-major view of the row-major matrix
    let mut col_entries: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for i in 0..m {
        let (cols, vals) = inst.rows.row(i);
        for (&j, &v) in cols.iter().zip(vals) {
            col_entries[j].push((i, v));
        }
    }

    out.push_str("COLUMNS\n");
    let mut in_int = false;
    for j in 0..n {
        let integral = inst.integrality[j].is_integral();
        if integral && !in_int {
            out.push_str(" MARKER 'MARKER' 'INTORG'\n");
            in_int = true;
        } else if !integral && in_int {
            out.push_str(" MARKER 'MARKER' 'INTEND'\n");
            in_int = false;
        }
        if inst.c[j] != 0.0 || col_entries[j].is_empty() {
            out.push_str(&format!(" x{j} obj {}\n", fmt(inst.c[j])));
        }
        for &(i, v) in &col_entries[j] {
            out.push_str(&format!(" x{j} c{i} {}\n", fmt(v)));
        }
    }
    if in_int {
        out.push_str(" MARKER 'MARKER' 'INTEND'\n");
    }

    out.push_str("RHS\n");
    for i in 0..m {
        if inst.b[i] != 0.0 {
            out.push_str(&format!(" RHS c{i} {}\n", fmt(inst.b[i])));
        }
    }

    let mut bound_lines = String::new();
    for j in 0..n {
        let (lo, hi) = (inst.l[j], inst.u[j]);
        match inst.integrality[j] {
            VarType::Binary => bound_lines.push_str(&format!(" BV BND x{j}\n")),
            _ => {
                if lo == f64::NEG_INFINITY && hi == f64::INFINITY {
                    bound_lines.push_str(&format!(" FR BND x{j}\n"));
                } else if lo == hi {
                    bound_lines.push_str(&format!(" FX BND x{j} {}\n", fmt(lo)));
                } else {
                    if lo == f64::NEG_INFINITY {
                        bound_lines.push_str(&format!(" MI BND x{j}\n"));
                    } else if lo != 0.0 {
                        bound_lines.push_str(&format!(" LO BND x{j} {}\n", fmt(lo)));
                    }
                    if hi != f64::INFINITY {
                        bound_lines.push_str(&format!(" UP BND x{j} {}\n", fmt(hi)));
                    }
                }
            }
        }
    }
    if !bound_lines.is_empty() {
        out.push_str("BOUNDS\n");
        out.push_str(&bound_lines);
    }
    out.push_str("ENDATA\n");
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;

    const COVER2: &str = "\
NAME tiny
ROWS
 N obj
 G cover
COLUMNS
 MARKER 'MARKER' 'INTORG'
 x obj 1.0 cover 1.0
 y obj 1.0 cover 1.0
 MARKER 'MARKER' 'INTEND'
RHS
 RHS cover 1.0
BOUNDS
 BV BND x
 BV BND y
ENDATA
";

    #[test]
    fn parses_minimal_cover() {
        let inst = parse_mps(COVER2.as_bytes()).unwrap();
        assert_eq!(inst.n_vars(), 2);
        assert_eq!(inst.n_cons(), 1);
        assert_eq!(inst.senses, vec![RowSense::Ge]);
        assert_eq!(inst.integrality, vec![VarType::Binary, VarType::Binary]);
        assert_eq!(inst.b, vec![1.0]);
        assert_eq!(inst.objective_sense, ObjSense::Minimize);
    }

    #[test]
    fn writer_emits_one_ge_row_and_two_columns() {
        let inst = parse_mps(COVER2.as_bytes()).unwrap();
        let text = String::from_utf8(write_mps(&inst)).unwrap();
        assert_eq!(text.matches(" G ").count(), 1);
        assert!(text.contains(" x0 "));
        assert!(text.contains(" x1 "));
        assert!(text.contains("BV BND x0"));
    }

    #[test]
    fn missing_endata_is_malformed() {
        let truncated = COVER2.replace("ENDATA\n", "");
        assert!(matches!(
            parse_mps(truncated.as_bytes()),
            Err(MpsError::MalformedSection(_))
        ));
    }

    #[test]
    fn content_after_endata_is_malformed() {
        let mut text = COVER2.to_string();
        text.push_str("EXTRA\n");
        assert!(matches!(
            parse_mps(text.as_bytes()),
            Err(MpsError::MalformedSection(_))
        ));
    }

    #[test]
    fn unknown_row_reference_fails() {
        let text = COVER2.replace(" x obj 1.0 cover 1.0", " x obj 1.0 nosuch 1.0");
        assert!(matches!(
            parse_mps(text.as_bytes()),
            Err(MpsError::UnknownRowOrColumn(_))
        ));
    }

    #[test]
    fn infinite_upper_bound_omits_up_entry() {
        let mut inst = parse_mps(COVER2.as_bytes()).unwrap();
        inst.integrality[1] = VarType::Continuous;
        inst.u[1] = f64::INFINITY;
        let text = String::from_utf8(write_mps(&inst)).unwrap();
        assert!(!text.contains("UP BND x1"));
        assert!(!text.contains("PL BND x1"));
    }

    #[test]
    fn objsense_max_round_trips() {
        let mut inst = parse_mps(COVER2.as_bytes()).unwrap();
        inst.objective_sense = ObjSense::Maximize;
        let bytes = write_mps(&inst);
        let back = parse_mps(&bytes).unwrap();
        assert_eq!(back.objective_sense, ObjSense::Maximize);
    }

    #[test]
    fn ranges_expand_to_two_rows() {
        let text = "\
NAME r
ROWS
 N obj
 L cap
COLUMNS
 x obj 1.0 cap 2.0
RHS
 RHS cap 10.0
RANGES
 RNG cap 4.0
ENDATA
";
        let inst = parse_mps(text.as_bytes()).unwrap();
        assert_eq!(inst.n_cons(), 2);
        assert_eq!(inst.senses, vec![RowSense::Ge, RowSense::Le]);
        assert_eq!(inst.b, vec![6.0, 10.0]);
        assert_eq!(inst.rows.row(1), (&[0usize][..], &[2.0][..]));
    }

    #[test]
    fn extra_free_rows_ignored_with_warning() {
        let text = "\
NAME f
ROWS
 N obj
 N extra
 G g0
COLUMNS
 x obj 1.0 g0 1.0
 x extra 3.0
RHS
 RHS g0 1.0
ENDATA
";
        let (inst, warnings) = parse_mps_with_warnings(text.as_bytes()).unwrap();
        assert_eq!(inst.n_cons(), 1);
        assert_eq!(inst.c, vec![1.0]);
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn double_round_trip_is_byte_identical() {
        let inst = parse_mps(COVER2.as_bytes()).unwrap();
        let once = write_mps(&inst);
        let twice = write_mps(&parse_mps(&once).unwrap());
        assert_eq!(once, twice);
    }
}
