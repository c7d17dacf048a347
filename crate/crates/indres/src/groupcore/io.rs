use std::path::Path;

use serde::{Deserialize, Serialize};

use super::chain::PermGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// `{"degree": n, "generators": [[images...], ...]}` with 1-based images.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<u64>>,
    /// Optional order the loader asserts, for fixtures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

impl GroupFile {
    pub fn from_group(g: &PermGroup) -> Self {
        GroupFile {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.images_1based()).collect(),
            order: None,
        }
    }

    pub fn to_group(&self) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|imgs| {
                if imgs.len() != self.degree {
                    return Err(Error::Format(format!(
                        "generator has {} images, degree is {}",
                        imgs.len(),
                        self.degree
                    )));
                }
                Permutation::from_images_1based(imgs)
            })
            .collect::<Result<Vec<_>>>()?;
        let g = PermGroup::new(self.degree, gens)?;
        if let Some(o) = &self.order {
            if g.order().to_string() != *o {
                return Err(Error::Consistency(format!(
                    "group file states order {o}, generators give {}",
                    g.order()
                )));
            }
        }
        Ok(g)
    }
}

pub fn parse_group(text: &str) -> Result<PermGroup> {
    let f: GroupFile = serde_json::from_str(text).map_err(|e| Error::Format(format!("group file: {e}")))?;
    f.to_group()
}

pub fn load_group(path: impl AsRef<Path>) -> Result<PermGroup> {
    parse_group(&std::fs::read_to_string(path)?)
}

pub fn save_group(g: &PermGroup, path: impl AsRef<Path>) -> Result<()> {
    let mut f = GroupFile::from_group(g);
    f.order = Some(g.order().to_string());
    std::fs::write(path, serde_json::to_string_pretty(&f)? + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reject() {
        let g = parse_group(r#"{"degree":4,"generators":[[2,1,3,4],[2,3,4,1]]}"#).unwrap();
        assert_eq!(g.order_u64().unwrap(), 24);
        assert!(parse_group(r#"{"degree":3,"generators":[[1,1,3]]}"#).is_err());
        assert!(parse_group(r#"{"degree":3,"generators":[[1,2]]}"#).is_err());
        assert!(parse_group("not json").is_err());
        let f = GroupFile::from_group(&g);
        assert_eq!(f.to_group().unwrap().order(), g.order());
    }
}
