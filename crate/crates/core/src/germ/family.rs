//! JSON form of a family:
//! `{"basePoint": "0", "members": [{"expr": "z"}, {"abstract": {"order": 1, "label": "sin z"}}]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;

use super::{parse_germ, AbstractGerm, GermFamily, Member};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FamilyFile {
    #[serde(default = "default_base_point")]
    pub base_point: String,
    pub members: Vec<MemberFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub enum MemberFile {
    Expr(String),
    Abstract { order: i64, label: String },
}

fn default_base_point() -> String {
    "0".to_string()
}

impl FamilyFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::SyntaxError {
            pos: e.column(),
            msg: format!("family JSON, line {}: {e}", e.line()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family serializes")
    }

    pub fn into_family(self) -> Result<GermFamily> {
        let base_point: GaussianRational = self.base_point.parse().map_err(|_| {
            Error::SyntaxError { pos: 0, msg: format!("bad base point `{}`", self.base_point) }
        })?;
        if self.members.is_empty() {
            return Err(Error::DimensionTooSmall { min: 1, got: 0 });
        }
        let members = self
            .members
            .into_iter()
            .map(|m| match m {
                MemberFile::Expr(e) => parse_germ(&e).map(Member::Germ),
                MemberFile::Abstract { order, label } => {
                    Ok(Member::Abstract(AbstractGerm { order, label }))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GermFamily::new(members, base_point))
    }
}

impl GermFamily {
    pub fn from_json(text: &str) -> Result<Self> {
        FamilyFile::from_json(text)?.into_family()
    }

    pub fn to_file(&self) -> FamilyFile {
        FamilyFile {
            base_point: self.base_point.to_string(),
            members: self
                .members
                .iter()
                .map(|m| match m {
                    Member::Germ(g) => MemberFile::Expr(g.to_string()),
                    Member::Abstract(a) => {
                        MemberFile::Abstract { order: a.order, label: a.label.clone() }
                    }
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::order_vector;

    #[test]
    fn reads_both_member_kinds() {
        let text = r#"{"basePoint": "0", "members": [
            {"expr": "z"}, {"abstract": {"order": 1, "label": "sin z"}},
            {"expr": "exp(z)/z"}, {"expr": "exp(-z)/z"}]}"#;
        let fam = GermFamily::from_json(text).unwrap();
        assert_eq!(order_vector(&fam), vec![1, 1, -1, -1]);
        let again = GermFamily::from_json(&fam.to_file().to_json()).unwrap();
        assert_eq!(again, fam);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(GermFamily::from_json(r#"{"members": []}"#).is_err());
        assert!(GermFamily::from_json(r#"{"members": [{"poly": "z"}]}"#).is_err());
        assert!(GermFamily::from_json(r#"{"basePoint": "q", "members": [{"expr": "z"}]}"#).is_err());
        assert_eq!(
            GermFamily::from_json(r#"{"members": [{"expr": "z-z"}]}"#),
            Err(Error::ZeroGerm)
        );
    }
}
