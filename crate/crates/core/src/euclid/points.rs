use super::EuclidError;

/// Finite points in `R^d`; the row index is the element id.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    dim: usize,
    coords: Vec<f64>,
}

impl PointSet {
    pub fn new(dim: usize, rows: impl IntoIterator<Item = Vec<f64>>) -> Result<Self, EuclidError> {
        if dim == 0 {
            return Err(EuclidError::ZeroDimension);
        }
        let mut coords = Vec::new();
        for (index, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(EuclidError::DimensionMismatch {
                    index,
                    expected: dim,
                    got: row.len(),
                });
            }
            if row.iter().any(|x| !x.is_finite()) {
                return Err(EuclidError::NonFinite { index });
            }
            coords.extend(row);
        }
        Ok(PointSet { dim, coords })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }
}

/// Writes the dimension on the first line, then one comma-separated point per
/// line, with a trailing `1`/`0` label column when labels are given.
pub fn write_points_csv(points: &PointSet, labels: Option<&[bool]>) -> String {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    w.write_record([points.dim().to_string()]).unwrap();
    for (i, p) in points.iter().enumerate() {
        let mut rec: Vec<String> = p.iter().map(|x| format!("{x:?}")).collect();
        if let Some(l) = labels {
            rec.push(if l[i] { "1" } else { "0" }.to_string());
        }
        w.write_record(&rec).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// Reads the format of [`write_points_csv`]. Rows with `d + 1` fields carry a
/// label; either every row is labeled or none is.
pub fn read_points_csv(text: &str) -> Result<(PointSet, Option<Vec<bool>>), EuclidError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = r.records();
    let parse_err = |line: usize, message: String| EuclidError::Parse { line, message };
    let line_of = |rec: &csv::StringRecord| rec.position().map_or(0, |p| p.line() as usize);

    let header = records
        .next()
        .ok_or_else(|| parse_err(1, "missing dimension line".into()))?
        .map_err(|e| parse_err(1, e.to_string()))?;
    let dim: usize = match header.len() {
        1 => header[0]
            .parse()
            .map_err(|_| parse_err(line_of(&header), format!("bad dimension {:?}", &header[0])))?,
        _ => return Err(parse_err(line_of(&header), "first line must hold only the dimension".into())),
    };
    if dim == 0 {
        return Err(EuclidError::ZeroDimension);
    }

    let mut rows = Vec::new();
    let mut labels = Vec::new();
    let mut labeled = None;
    for rec in records {
        let rec = rec.map_err(|e| parse_err(e.position().map_or(0, |p| p.line() as usize), e.to_string()))?;
        let line = line_of(&rec);
        let has_label = match rec.len() {
            n if n == dim => false,
            n if n == dim + 1 => true,
            n => return Err(parse_err(line, format!("expected {dim} or {} fields, got {n}", dim + 1))),
        };
        if *labeled.get_or_insert(has_label) != has_label {
            return Err(parse_err(line, "label column present on some rows only".into()));
        }
        let row = rec
            .iter()
            .take(dim)
            .map(|f| f.parse::<f64>().map_err(|_| parse_err(line, format!("bad coordinate {f:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.iter().any(|x| !x.is_finite()) {
            return Err(parse_err(line, "non-finite coordinate".into()));
        }
        rows.push(row);
        if has_label {
            labels.push(match &rec[dim] {
                "1" => true,
                "0" => false,
                other => return Err(parse_err(line, format!("label must be 0 or 1, got {other:?}"))),
            });
        }
    }
    let points = PointSet::new(dim, rows)?;
    Ok((points, labeled.unwrap_or(false).then_some(labels)))
}
