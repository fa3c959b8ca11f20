//! Reading command inputs: whole files or standard input, single CSV
//! columns, and the first table of a report.

use std::io::Read;
use std::path::Path;

use crate::error::CliError;

/// Reads `path`, or standard input when it is `-`.
pub fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    let result = if path.as_os_str() == "-" {
        std::io::stdin().lock().read_to_end(&mut buf).map(|_| ())
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_end(&mut buf).map(|_| ()))
    };
    result.map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(buf)
}

pub fn utf8<'a>(bytes: &'a [u8], path: &Path) -> Result<&'a str, CliError> {
    std::str::from_utf8(bytes)
        .map_err(|e| CliError::usage(format!("{} is not UTF-8: {e}", path.display())))
}

/// A CSV column given by header name or 0-based index. Names take
/// precedence when a header row is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSelector(pub String);

impl ColumnSelector {
    pub fn resolve(&self, header: Option<&csv::StringRecord>) -> Result<usize, CliError> {
        if let Some(h) = header {
            if let Some(i) = h.iter().position(|c| c == self.0) {
                return Ok(i);
            }
        }
        self.0.parse::<usize>().map_err(|_| {
            CliError::usage(match header {
                Some(h) => format!(
                    "no column named {:?} (columns: {})",
                    self.0,
                    h.iter().collect::<Vec<_>>().join(", ")
                ),
                None => format!("column {:?} is not an index and there is no header", self.0),
            })
        })
    }
}

/// Candidate numeric fields of one input.
///
/// Without a column every non-blank line that does not start with `#` is
/// one field. With a column the input is read as CSV and the selected field
/// of each record is taken; records too short to have it yield an empty
/// field, which later counts as unparseable.
pub fn numeric_fields(
    bytes: &[u8],
    column: Option<&ColumnSelector>,
    has_header: bool,
    path: &Path,
) -> Result<Vec<String>, CliError> {
    let Some(column) = column else {
        let text = utf8(bytes, path)?;
        return Ok(text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_owned)
            .collect());
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(has_header)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let header = if has_header {
        Some(reader.headers()?.clone())
    } else {
        None
    };
    let index = column.resolve(header.as_ref())?;
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record?;
        out.push(record.get(index).unwrap_or("").to_owned());
    }
    Ok(out)
}

/// `(x, y)` pairs from the first table of a CSV document.
///
/// Leading blank and `#` lines are skipped; the table ends at the next
/// blank or `#` line. The first row is a header unless both selected
/// fields parse as numbers. Columns default to the first and second.
pub fn read_xy_table(
    bytes: &[u8],
    x: Option<&ColumnSelector>,
    y: Option<&ColumnSelector>,
    path: &Path,
) -> Result<Vec<(f64, f64)>, CliError> {
    let text = utf8(bytes, path)?;
    let is_break = |l: &str| l.trim().is_empty() || l.starts_with('#');
    let body: Vec<&str> = text
        .lines()
        .skip_while(|l| is_break(l))
        .take_while(|l| !is_break(l))
        .collect();
    if body.is_empty() {
        return Err(CliError::usage(format!(
            "{}: no table found",
            path.display()
        )));
    }
    let joined = body.join("\n");
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(joined.as_bytes());
    let mut records = reader.records();
    let first = records.next().transpose()?.unwrap_or_default();

    let default_x = ColumnSelector("0".into());
    let default_y = ColumnSelector("1".into());
    let (xs, ys) = (x.unwrap_or(&default_x), y.unwrap_or(&default_y));
    let numeric_index = |s: &ColumnSelector| s.0.parse::<usize>().ok();
    let first_is_data = match (numeric_index(xs), numeric_index(ys)) {
        (Some(i), Some(j)) => parse_pair(&first, i, j).is_some(),
        _ => false,
    };
    let (header, mut rows) = if first_is_data {
        (None, vec![first])
    } else {
        (Some(first), Vec::new())
    };
    let (i, j) = (xs.resolve(header.as_ref())?, ys.resolve(header.as_ref())?);
    for r in records {
        rows.push(r?);
    }
    let data_start = if first_is_data { 1 } else { 2 };
    rows.iter()
        .enumerate()
        .map(|(k, r)| {
            parse_pair(r, i, j).ok_or_else(|| {
                CliError::usage(format!(
                    "{}: table row {} has no numeric values in columns {i} and {j}",
                    path.display(),
                    k + data_start
                ))
            })
        })
        .collect()
}

fn parse_pair(r: &csv::StringRecord, i: usize, j: usize) -> Option<(f64, f64)> {
    let x = r.get(i)?.parse::<f64>().ok()?;
    let y = r.get(j)?.parse::<f64>().ok()?;
    Some((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> &'static Path {
        Path::new("test")
    }

    #[test]
    fn plain_lines() {
        let f = numeric_fields(b"1\n\n # no\n2.5\n# skip\nabc\n", None, false, p()).unwrap();
        assert_eq!(f, vec!["1", "2.5", "abc"]);
    }

    #[test]
    fn csv_column_by_name_and_index() {
        let data = b"id,amount\n1,10\n2,\n3\n4,7e3\n";
        let sel = ColumnSelector("amount".into());
        let f = numeric_fields(data, Some(&sel), true, p()).unwrap();
        assert_eq!(f, vec!["10", "", "", "7e3"]);
        let sel = ColumnSelector("0".into());
        let f = numeric_fields(data, Some(&sel), false, p()).unwrap();
        assert_eq!(f, vec!["id", "1", "2", "3", "4"]);
        assert!(numeric_fields(data, Some(&ColumnSelector("nope".into())), true, p()).is_err());
    }

    #[test]
    fn first_table_with_header() {
        let doc = "# table: ranks\nrank,frequency\n1,0.5\n2,0.25\n\n# table: other\nq,v\n9,9\n";
        let pts = read_xy_table(doc.as_bytes(), None, None, p()).unwrap();
        assert_eq!(pts, vec![(1.0, 0.5), (2.0, 0.25)]);
        let y = ColumnSelector("rank".into());
        let x = ColumnSelector("frequency".into());
        let pts = read_xy_table(doc.as_bytes(), Some(&x), Some(&y), p()).unwrap();
        assert_eq!(pts, vec![(0.5, 1.0), (0.25, 2.0)]);
    }

    #[test]
    fn headerless_table_and_bad_rows() {
        let pts = read_xy_table(b"1,2\n3,4\n", None, None, p()).unwrap();
        assert_eq!(pts, vec![(1.0, 2.0), (3.0, 4.0)]);
        assert!(read_xy_table(b"x,y\n1,2\n3,z\n", None, None, p()).is_err());
        assert!(read_xy_table(b"# only comments\n", None, None, p()).is_err());
    }
}
