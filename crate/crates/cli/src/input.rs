use std::path::Path;

use flatcert::quadfam::{sampled_points, standard_points};
use flatcert::{BiPolynomial, ChartPoint, Error, Ideal, Result, SymmetricMatrixQ, VariableUniverse};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

/// Largest `k` among variables `x{k}` / `y{k}` mentioned in `text`.
fn max_coordinate_index(text: &str) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut best = None;
    let mut i = 0;
    while i < bytes.len() {
        let starts_word = i == 0 || !(bytes[i - 1].is_ascii_alphanumeric() || bytes[i - 1] == b'_');
        if starts_word && (bytes[i] == b'x' || bytes[i] == b'y') {
            let mut j = i + 1;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            let ends_word = j == bytes.len() || !(bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_');
            if j > i + 1 && ends_word {
                if let Ok(k) = text[i + 1..j].parse::<usize>() {
                    best = best.max(Some(k));
                }
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

/// One generator per line; `#` starts a comment; a line `n = K` fixes the
/// ambient `P^K x P^K`. Without a directive or override, `n` is read off the
/// largest variable index.
pub fn parse_ideal_text(text: &str, n_override: Option<usize>) -> Result<Ideal> {
    let mut directive = None;
    let mut lines = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((lhs, rhs)) = line.split_once('=') {
            if lhs.trim() == "n" {
                let k = rhs
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad directive `{line}`")))?;
                directive = Some(k);
                continue;
            }
        }
        lines.push(line);
    }
    let n = n_override
        .or(directive)
        .or_else(|| max_coordinate_index(&lines.join(" ")).map(|k| k.saturating_sub(1).max(1)))
        .ok_or_else(|| Error::InvalidInput("cannot determine n; add a line `n = K`".into()))?;
    let universe = VariableUniverse::with_params(n, Vec::<String>::new())?;
    let gens = lines.iter().map(|l| BiPolynomial::parse(&universe, l)).collect::<Result<Vec<_>>>()?;
    let ideal = Ideal::new(&universe, gens)?;
    ideal.check_bihomogeneous()?;
    Ok(ideal)
}

pub fn parse_ideal_file(path: &Path, n_override: Option<usize>) -> Result<Ideal> {
    parse_ideal_text(&read(path)?, n_override)
}

/// `standard`, `sampled:K`, or a path to a JSON file with one point or an
/// array of points.
pub fn resolve_points(spec: &str, n: usize, seed: u64) -> Result<Vec<ChartPoint>> {
    if spec == "standard" {
        return Ok(standard_points(n, seed));
    }
    if let Some(k) = spec.strip_prefix("sampled:") {
        let k: usize = k.parse().map_err(|_| Error::InvalidInput(format!("bad point count in `{spec}`")))?;
        let mut pts = standard_points(n, seed)[..2].to_vec();
        pts.extend(sampled_points(n, k, k, seed));
        return Ok(pts);
    }
    let pts = ChartPoint::parse_points(&read(Path::new(spec))?)?;
    if let Some(p) = pts.iter().find(|p| p.n() != n) {
        return Err(Error::InvalidChartPoint(format!("point has n = {}, expected {n}", p.n())));
    }
    Ok(pts)
}

/// Rows separated by `;`, entries by `,`; entries are rationals `p` or `p/q`.
pub fn parse_matrix(text: &str) -> Result<SymmetricMatrixQ> {
    let rows = text
        .split(';')
        .map(|row| row.split(',').map(flatcert::polyring::parse_rational).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    SymmetricMatrixQ::new(rows)
}
