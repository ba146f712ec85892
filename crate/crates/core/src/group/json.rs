use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Exchange format for groups given by a full Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub identity: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson {
            order: g.order(),
            identity: g.identity(),
            labels: g.labels(),
            table: g.table(),
        }
    }

    /// Validates the table and the declared order and identity.
    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::LengthMismatch { expected: self.order, got: self.table.len() });
        }
        let labels = (!self.labels.is_empty()).then_some(self.labels);
        let g = FiniteGroup::from_table(self.table, labels)?;
        if g.identity() != self.identity {
            return Err(Error::InvalidTable(format!(
                "declared identity {} but the table's identity is {}",
                self.identity,
                g.identity()
            )));
        }
        Ok(g)
    }

    pub fn to_string_pretty(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn parse(text: &str) -> Result<FiniteGroup> {
        serde_json::from_str::<GroupJson>(text)?.into_group()
    }
}
