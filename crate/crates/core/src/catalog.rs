use std::path::Path;

use crate::surface::{SurfaceError, SurfaceForm};

const BUNDLED: &str = include_str!("../data/catalog.txt");

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("catalog line {line}: expected `NAME = EXPR`")]
    Syntax { line: usize },
    #[error("unknown surface name `{0}`")]
    Unknown(String),
    #[error("`{0}` needs a degree, e.g. `{0}:5`")]
    MissingDegree(String),
    #[error("invalid degree in `{0}`")]
    BadDegree(String),
    #[error("surface `{name}`: {source}")]
    Surface { name: String, source: SurfaceError },
    #[error("reading catalog: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Base name; parameterized entries have `parametric` set and are
    /// addressed as `name:d`.
    pub name: String,
    pub parametric: bool,
    pub template: String,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn bundled() -> Catalog {
        Catalog::from_text(BUNDLED).expect("bundled catalog is well-formed")
    }

    pub fn load(path: &Path) -> Result<Catalog, CatalogError> {
        Catalog::from_text(&std::fs::read_to_string(path)?)
    }

    pub fn from_text(text: &str) -> Result<Catalog, CatalogError> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, expr) = line.split_once('=').ok_or(CatalogError::Syntax { line: i + 1 })?;
            let name = name.trim();
            let (name, parametric) = match name.strip_suffix(":d") {
                Some(base) => (base, true),
                None => (name, false),
            };
            if name.is_empty() || expr.trim().is_empty() {
                return Err(CatalogError::Syntax { line: i + 1 });
            }
            entries.push(CatalogEntry {
                name: name.to_string(),
                parametric,
                template: expr.trim().to_string(),
            });
        }
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Expression text for `name` or `name:d`.
    pub fn expression(&self, name: &str) -> Result<String, CatalogError> {
        let (base, degree) = match name.split_once(':') {
            Some((b, d)) => (b, Some(d)),
            None => (name, None),
        };
        let entry = self
            .entries
            .iter()
            .find(|e| e.name == base)
            .ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
        match (entry.parametric, degree) {
            (false, None) => Ok(entry.template.clone()),
            (false, Some(_)) => Err(CatalogError::Unknown(name.to_string())),
            (true, None) => Err(CatalogError::MissingDegree(base.to_string())),
            (true, Some(d)) => {
                let d: u32 = d.parse().map_err(|_| CatalogError::BadDegree(name.to_string()))?;
                if d < 3 {
                    return Err(CatalogError::BadDegree(name.to_string()));
                }
                Ok(entry
                    .template
                    .replace("{d-1}", &(d - 1).to_string())
                    .replace("{d}", &d.to_string()))
            }
        }
    }

    pub fn surface(&self, name: &str) -> Result<SurfaceForm, CatalogError> {
        SurfaceForm::parse(&self.expression(name)?).map_err(|source| CatalogError::Surface {
            name: name.to_string(),
            source,
        })
    }

    /// Names with parameterized entries instantiated at `d`.
    pub fn names_at(&self, d: u32) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| if e.parametric { format!("{}:{d}", e.name) } else { e.name.clone() })
            .collect()
    }
}
