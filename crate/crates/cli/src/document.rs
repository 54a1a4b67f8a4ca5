//! Poset input documents: JSON `{"n": 4, "name": "K22", "relations": [[1,3],...]}`
//! or the one-line form `4: 1<3 1<4 2<3 2<4` (chains like `1<2<3` allowed).

use poset_cone::poset::Poset;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub relations: Vec<[u32; 2]>,
}

impl PosetDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            serde_json::from_str(trimmed).map_err(|e| CliError::Input(format!("malformed JSON poset: {e}")))
        } else {
            parse_dsl(trimmed)
        }
    }

    pub fn to_poset(&self) -> Result<Poset, CliError> {
        let pairs: Vec<(u32, u32)> = self.relations.iter().map(|&[i, j]| (i, j)).collect();
        Poset::from_relations(self.n, &pairs).map_err(|e| CliError::Input(e.to_string()))
    }

    /// Document listing the cover relations of `p`.
    pub fn from_poset(p: &Poset, name: Option<String>) -> Self {
        Self { n: p.n(), name, relations: p.covers().into_iter().map(|(i, j)| [i, j]).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }
}

fn parse_dsl(text: &str) -> Result<PosetDocument, CliError> {
    let (head, body) = text
        .split_once(':')
        .ok_or_else(|| CliError::Input(format!("expected `n: i<j ...`, got {text:?}")))?;
    let n = head
        .trim()
        .parse::<usize>()
        .map_err(|_| CliError::Input(format!("bad element count {:?}", head.trim())))?;
    let mut relations = Vec::new();
    for token in body.split_whitespace() {
        let labels = token
            .split('<')
            .map(|s| s.parse::<u32>().map_err(|_| CliError::Input(format!("bad relation {token:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if labels.len() < 2 {
            return Err(CliError::Input(format!("bad relation {token:?}")));
        }
        relations.extend(labels.windows(2).map(|w| [w[0], w[1]]));
    }
    Ok(PosetDocument { n, name: None, relations })
}
