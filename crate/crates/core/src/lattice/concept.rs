use super::{FiniteLattice, LatticeError};
use crate::closure::ElementSet;

/// Binary object × attribute incidence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    /// attribute set of each object
    rows: Vec<ElementSet>,
}

impl FormalContext {
    pub fn new(objects: Vec<String>, attributes: Vec<String>, incidence: &[Vec<bool>]) -> Result<Self, LatticeError> {
        if objects.is_empty() || attributes.is_empty() {
            return Err(LatticeError::Empty);
        }
        if incidence.len() != objects.len() {
            return Err(LatticeError::Parse {
                line: 0,
                message: format!("{} rows for {} objects", incidence.len(), objects.len()),
            });
        }
        let m = attributes.len();
        let mut rows = Vec::with_capacity(objects.len());
        for (i, r) in incidence.iter().enumerate() {
            if r.len() != m {
                return Err(LatticeError::Parse {
                    line: i + 1,
                    message: format!("row of {:?} has {} entries, expected {m}", objects[i], r.len()),
                });
            }
            rows.push(ElementSet::from_ids(m, (0..m).filter(|&j| r[j])));
        }
        Ok(FormalContext { objects, attributes, rows })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn incidence(&self, object: usize, attribute: usize) -> bool {
        self.rows[object].contains(attribute)
    }

    /// Objects having every attribute in `attrs`.
    pub fn extent_of(&self, attrs: &ElementSet) -> ElementSet {
        ElementSet::from_ids(self.objects.len(), (0..self.objects.len()).filter(|&o| attrs.is_subset(&self.rows[o])))
    }

    /// Attributes shared by every object in `objs`.
    pub fn intent_of(&self, objs: &ElementSet) -> ElementSet {
        objs.iter()
            .fold(ElementSet::full(self.attributes.len()), |acc, o| acc.intersection(&self.rows[o]))
    }

    /// Demo table: four shapes and four properties.
    pub fn shapes() -> Self {
        let t = true;
        let f = false;
        FormalContext::new(
            ["o1", "o2", "o3", "o4"].map(String::from).to_vec(),
            ["a1", "a2", "a3", "a4"].map(String::from).to_vec(),
            &[vec![t, f, f, t], vec![t, f, t, f], vec![f, t, t, f], vec![f, t, t, t]],
        )
        .unwrap()
    }

    /// CSV with a header row of attribute names (first cell ignored) and one
    /// row per object: its name, then `0`/`1` entries.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["object".to_string()];
        header.extend(self.attributes.iter().cloned());
        w.write_record(&header).unwrap();
        for (o, name) in self.objects.iter().enumerate() {
            let mut rec = vec![name.clone()];
            rec.extend((0..self.attributes.len()).map(|a| if self.incidence(o, a) { "1" } else { "0" }.to_string()));
            w.write_record(&rec).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

pub fn read_context_csv(text: &str) -> Result<FormalContext, LatticeError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let err = |line: u64, message: String| LatticeError::Parse { line: line as usize, message };
    let mut records = r.records();
    let header = records
        .next()
        .ok_or_else(|| err(1, "missing header row".into()))?
        .map_err(|e| err(e.position().map_or(0, |p| p.line()), e.to_string()))?;
    let attributes: Vec<String> = header.iter().skip(1).map(String::from).collect();
    let mut objects = Vec::new();
    let mut incidence = Vec::new();
    for rec in records {
        let rec = rec.map_err(|e| err(e.position().map_or(0, |p| p.line()), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        objects.push(rec.get(0).unwrap_or_default().to_string());
        let row = rec
            .iter()
            .skip(1)
            .map(|v| match v {
                "1" => Ok(true),
                "0" => Ok(false),
                other => Err(err(line, format!("entry must be 0 or 1, got {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        incidence.push(row);
    }
    FormalContext::new(objects, attributes, &incidence)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Concept {
    pub extent: ElementSet,
    pub intent: ElementSet,
}

/// Concepts of a context, ordered by extent inclusion.
#[derive(Debug, Clone)]
pub struct ConceptLattice {
    pub context: FormalContext,
    pub concepts: Vec<Concept>,
    pub lattice: FiniteLattice,
}

fn names(all: &[String], s: &ElementSet) -> String {
    if s.is_empty() {
        "∅".to_string()
    } else {
        s.iter().map(|i| all[i].as_str()).collect()
    }
}

impl ConceptLattice {
    /// `(extent,intent)` with names run together, e.g. `(o1o4,a4)`.
    pub fn concept_label(&self, c: usize) -> String {
        let k = &self.concepts[c];
        format!("({},{})", names(self.context.objects(), &k.extent), names(self.context.attributes(), &k.intent))
    }

    /// Index of the concept with exactly this extent.
    pub fn by_extent(&self, extent: &ElementSet) -> Option<usize> {
        self.concepts.iter().position(|c| c.extent == *extent)
    }

    /// Smallest concept whose extent contains the named objects.
    pub fn generated_by_objects(&self, names: &[&str]) -> Result<usize, LatticeError> {
        let objs = self.context.objects();
        let ids = names
            .iter()
            .map(|n| objs.iter().position(|o| o == n).ok_or_else(|| LatticeError::UnknownLabel(n.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let set = ElementSet::from_ids(objs.len(), ids);
        let extent = self.context.extent_of(&self.context.intent_of(&set));
        Ok(self.by_extent(&extent).expect("closed extents are concepts"))
    }
}

/// All formal concepts, enumerated as closed attribute sets in lectic order
/// (NextClosure), then indexed by extent size and extent.
pub fn concept_lattice(ctx: &FormalContext) -> Result<ConceptLattice, LatticeError> {
    let m = ctx.attributes().len();
    let close = |a: &ElementSet| ctx.intent_of(&ctx.extent_of(a));
    let mut intents = Vec::new();
    let mut cur = close(&ElementSet::empty(m));
    'next: loop {
        intents.push(cur.clone());
        for i in (0..m).rev() {
            if cur.contains(i) {
                continue;
            }
            let mut prefix = ElementSet::from_ids(m, cur.iter().filter(|&x| x < i));
            prefix.insert(i);
            let cand = close(&prefix);
            if cand.difference(&cur).iter().all(|x| x >= i) {
                cur = cand;
                continue 'next;
            }
        }
        break;
    }
    let mut concepts: Vec<Concept> = intents
        .into_iter()
        .map(|intent| Concept { extent: ctx.extent_of(&intent), intent })
        .collect();
    concepts.sort_by_key(|c| (c.extent.len(), c.extent.to_vec()));
    let labels = concepts
        .iter()
        .map(|c| format!("({},{})", names(ctx.objects(), &c.extent), names(ctx.attributes(), &c.intent)))
        .collect();
    let lattice = FiniteLattice::from_order(concepts.len(), |a, b| concepts[a].extent.is_subset(&concepts[b].extent), Some(labels))?;
    Ok(ConceptLattice {
        context: ctx.clone(),
        concepts,
        lattice,
    })
}
