use std::path::Path;

use serde::{Deserialize, Serialize};
use unified_core::links::{catalog, FramedLink};

/// On-disk link format: `{"strands": s, "word": [..], "framings": [..], "name": ".."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkFile {
    pub strands: usize,
    pub word: Vec<i32>,
    pub framings: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl From<&FramedLink> for LinkFile {
    fn from(l: &FramedLink) -> Self {
        Self { strands: l.strands(), word: l.word().to_vec(), framings: l.framings().to_vec(), name: l.name().map(Into::into) }
    }
}

impl TryFrom<LinkFile> for FramedLink {
    type Error = unified_core::Error;

    fn try_from(f: LinkFile) -> Result<Self, Self::Error> {
        if f.strands == 0 && f.word.is_empty() {
            let l = FramedLink::empty();
            return Ok(match f.name {
                Some(n) => l.with_name(n),
                None => l,
            });
        }
        let l = FramedLink::new(f.strands, f.word, f.framings)?;
        Ok(match f.name {
            Some(n) => l.with_name(n),
            None => l,
        })
    }
}

/// A catalog name such as `trefoil_left(-1)`, or a path to a JSON link file.
pub fn load_link(spec: &str) -> Result<FramedLink, String> {
    if spec.ends_with(".json") || Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?;
        let f: LinkFile = serde_json::from_str(&text).map_err(|e| format!("{spec}: {e}"))?;
        return FramedLink::try_from(f).map_err(|e| format!("{spec}: {e}"));
    }
    catalog(spec).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_links_round_trip() {
        for name in ["poincare", "hopf(2,-3)", "figure8(1)", "lens(5)", "s3"] {
            let l = catalog(name).unwrap();
            let json = serde_json::to_string(&LinkFile::from(&l)).unwrap();
            let back: LinkFile = serde_json::from_str(&json).unwrap();
            assert_eq!(FramedLink::try_from(back).unwrap(), l, "{json}");
        }
    }

    #[test]
    fn reads_files() {
        let path = std::env::temp_dir().join(format!("unified-link-{}.json", std::process::id()));
        std::fs::write(&path, r#"{"strands": 2, "word": [1, 1], "framings": [0, 0], "name": "hopf"}"#).unwrap();
        let l = load_link(path.to_str().unwrap()).unwrap();
        std::fs::remove_file(&path).unwrap();
        assert_eq!(l.num_components(), 2);
        assert_eq!(l.name(), Some("hopf"));
        assert!(load_link("no_such_link").is_err());
    }
}
