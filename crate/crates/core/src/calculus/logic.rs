use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::schema::schema;
use crate::semantics::{FrameCondition, FrameKind};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    /// Formulas over `□` and `▷`.
    Binary,
    /// Formulas over `□` and `I`.
    Unary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    MP,
    Nec,
    R1,
    R2,
    #[serde(rename = "uR")]
    UR,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::MP => "MP",
            Rule::Nec => "Nec",
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::UR => "uR",
        })
    }
}

/// A registered logic: a base system plus extension schemata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Logic {
    pub id: String,
    pub language: Language,
    /// Every axiom schema, base first. Tautologies are implicit.
    pub axioms: Vec<String>,
    /// The schemata added to the base system.
    pub extensions: Vec<String>,
    pub rules: Vec<Rule>,
    /// The frame class the logic is complete for. Unary logics inherit the
    /// class of their `partner`.
    pub frame_class: Option<FrameKind>,
    pub conditions: Vec<FrameCondition>,
    /// For binary logics: the corresponding unary logic.
    pub counterpart: Option<String>,
    /// For unary logics: a binary logic proving the same unary formulas.
    pub partner: Option<String>,
    /// Listed among the corresponding pairs rather than added for the proof
    /// corpus.
    pub in_table: bool,
}

impl Logic {
    pub fn has_axiom(&self, name: &str) -> bool {
        self.axioms.iter().any(|a| a.eq_ignore_ascii_case(name))
    }

    pub fn has_rule(&self, r: Rule) -> bool {
        self.rules.contains(&r)
    }

    /// Extension schemata together with those known to be derivable from
    /// them over the base system.
    pub fn derivable_extensions(&self) -> BTreeSet<String> {
        let mut out: BTreeSet<String> = self.extensions.iter().cloned().collect();
        loop {
            let before = out.len();
            let implied: Vec<&str> = out
                .iter()
                .flat_map(|e| match e.as_str() {
                    "J2+" => vec!["J2", "J4+"],
                    "J2" | "J4+" => vec!["J4"],
                    _ => vec![],
                })
                .collect();
            let implied: Vec<String> = implied.into_iter().map(str::to_string).collect();
            out.extend(implied);
            if out.len() == before {
                return out;
            }
        }
    }

    /// Axiom names together with the schemata known to follow from them.
    pub fn derivable_schemata(&self) -> BTreeSet<String> {
        const STEPS: [(&[&str], &str); 9] = [
            (&["J2+"], "J2"),
            (&["J2+"], "J4+"),
            (&["J2"], "J4"),
            (&["J4+"], "J4"),
            (&["uJ1", "I3"], "uJ15"),
            (&["uJ15"], "uJ1"),
            (&["uJ15"], "I1"),
            (&["I1", "I2"], "uJ15"),
            (&["I2"], "I4"),
        ];
        let mut out: BTreeSet<String> = self.axioms.iter().cloned().collect();
        loop {
            let before = out.len();
            for (premises, conclusion) in STEPS {
                if premises.iter().all(|p| out.contains(*p)) {
                    out.insert(conclusion.to_string());
                }
            }
            if out.len() == before {
                return out;
            }
        }
    }

    /// `self` is included in `other` judging by derivable axiom sets and
    /// rules.
    pub fn included_in(&self, other: &Logic) -> bool {
        self.language == other.language
            && self.rules.iter().all(|r| other.rules.contains(r))
            && self.derivable_extensions().is_subset(&other.derivable_extensions())
            && self.axioms.iter().all(|a| other.has_axiom(a) || self.extensions.contains(a))
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

const VELTMAN: [(&[&str], &str); 12] = [
    (&[], "il-"),
    (&["J5"], "il-"),
    (&["J1"], "il-(uJ1)"),
    (&["J4+"], "il-(I2)"),
    (&["J4+", "J5"], "il-(I2)"),
    (&["J2+"], "il-(I2)"),
    (&["J1", "J5"], "il-(uJ15)"),
    (&["J1", "J4+"], "il-(uJ1,I2)"),
    (&["J1", "J2+"], "il-(uJ1,I2)"),
    (&["J1", "J4+", "J5"], "il-(uJ15,I2)"),
    (&["J2+", "J5"], "il-(I2,I3)"),
    (&["J1", "J2+", "J5"], "il-(uJ1,I2,I3)"),
];

const VERBRUGGE: [(&[&str], &str); 8] = [
    (&["J4"], "il-(I4)"),
    (&["J4", "J5"], "il-(I4)"),
    (&["J2"], "il-(I4)"),
    (&["J1", "J4"], "il-(uJ1,I4)"),
    (&["J1", "J4", "J5"], "il-(uJ15,I4)"),
    (&["J2", "J5"], "il-(uJ25,I4)"),
    (&["J2", "J4+"], "il-(I2)"),
    (&["J2", "J4+", "J5"], "il-(I2,uJ25)"),
];

/// Unary logics needed by the proof corpus beyond the corresponding pairs.
const AUXILIARY_UNARY: [&[&str]; 2] = [&["uJ1", "I3"], &["I1", "I2"]];

fn binary_id(ext: &[&str]) -> String {
    match ext {
        ["J1", "J2+"] => "CL".into(),
        ["J1", "J2+", "J5"] => "IL".into(),
        [] => "IL-".into(),
        _ => format!("IL-({})", ext.join(",")),
    }
}

fn unary_id(ext: &[&str]) -> String {
    if ext.is_empty() {
        "il-".into()
    } else {
        format!("il-({})", ext.join(","))
    }
}

fn condition_for(kind: FrameKind, axiom: &str) -> FrameCondition {
    match (kind, axiom) {
        (FrameKind::Veltman, "J1") => FrameCondition::FcJ1,
        (FrameKind::Veltman, "J2+") => FrameCondition::FcJ2Plus,
        (FrameKind::Veltman, "J4+") => FrameCondition::FcJ4Plus,
        (FrameKind::Veltman, "J5") => FrameCondition::FcJ5,
        (FrameKind::Verbrugge, "J1") => FrameCondition::GfcJ1,
        (FrameKind::Verbrugge, "J2") => FrameCondition::GfcJ2,
        (FrameKind::Verbrugge, "J4") => FrameCondition::GfcJ4,
        (FrameKind::Verbrugge, "J4+") => FrameCondition::GfcJ4Plus,
        (FrameKind::Verbrugge, "J5") => FrameCondition::GfcJ5,
        _ => unreachable!("no frame condition for {axiom} on {kind} frames"),
    }
}

fn build_registry() -> Vec<Logic> {
    let mut out = Vec::new();
    for (kind, table) in [(FrameKind::Veltman, &VELTMAN[..]), (FrameKind::Verbrugge, &VERBRUGGE[..])] {
        for (ext, unary) in table {
            let mut axioms: Vec<String> = ["G2", "G3", "J3", "J6"].map(String::from).to_vec();
            axioms.extend(ext.iter().map(|e| e.to_string()));
            out.push(Logic {
                id: binary_id(ext),
                language: Language::Binary,
                axioms,
                extensions: ext.iter().map(|e| e.to_string()).collect(),
                rules: vec![Rule::MP, Rule::Nec, Rule::R1, Rule::R2],
                frame_class: Some(kind),
                conditions: ext.iter().map(|e| condition_for(kind, e)).collect(),
                counterpart: Some(unary.to_string()),
                partner: None,
                in_table: true,
            });
        }
    }
    let binaries = out.clone();
    let mut unary_exts: Vec<(Vec<&str>, bool)> = Vec::new();
    for (_, u) in VELTMAN.iter().chain(VERBRUGGE.iter()) {
        let ext = parse_extensions(u);
        if !unary_exts.iter().any(|(e, _)| *e == ext) {
            unary_exts.push((ext, true));
        }
    }
    for ext in AUXILIARY_UNARY {
        unary_exts.push((ext.to_vec(), false));
    }
    for (ext, in_table) in unary_exts {
        let id = unary_id(&ext);
        let partner = binaries.iter().find(|b| b.counterpart.as_deref() == Some(id.as_str()));
        let mut axioms: Vec<String> = ["G2", "G3", "uJ6"].map(String::from).to_vec();
        axioms.extend(ext.iter().map(|e| e.to_string()));
        out.push(Logic {
            id,
            language: Language::Unary,
            axioms,
            extensions: ext.iter().map(|e| e.to_string()).collect(),
            rules: vec![Rule::MP, Rule::Nec, Rule::UR],
            frame_class: partner.and_then(|p| p.frame_class),
            conditions: partner.map(|p| p.conditions.clone()).unwrap_or_default(),
            counterpart: None,
            partner: partner.map(|p| p.id.clone()),
            in_table,
        });
    }
    // de Rijke's system, equivalent to il-(uJ1,I2,I3)
    let il_partner = binaries.iter().find(|b| b.id == "IL").expect("IL registered");
    out.push(Logic {
        id: "il".into(),
        language: Language::Unary,
        axioms: ["G2", "G3", "I1", "I2", "I3", "I4"].map(String::from).to_vec(),
        extensions: Vec::new(),
        rules: vec![Rule::MP, Rule::Nec],
        frame_class: il_partner.frame_class,
        conditions: il_partner.conditions.clone(),
        counterpart: None,
        partner: Some("IL".into()),
        in_table: false,
    });
    out
}

fn parse_extensions(id: &str) -> Vec<&str> {
    id.split(|c: char| "(),-".contains(c) || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .skip(1)
        .collect()
}

/// All registered logics: twenty binary logics, the unary logics they
/// correspond to, two auxiliary unary logics and de Rijke's `il`.
pub fn registry() -> &'static [Logic] {
    static CELL: OnceLock<Vec<Logic>> = OnceLock::new();
    CELL.get_or_init(build_registry)
}

/// Resolves spellings such as `IL-(J1,J5)`, `IL-J1-J5`, `il-uJ15`, `CL`.
/// Extension order and case of schema names do not matter.
pub fn logic(id: &str) -> Result<&'static Logic, Error> {
    let text = id.trim();
    if let Some(l) = registry().iter().find(|l| l.id == text) {
        return Ok(l);
    }
    let unknown = || Error::UnknownLogic(id.to_string());
    let language = if text.starts_with("IL-") {
        Language::Binary
    } else if text.starts_with("il-") {
        Language::Unary
    } else {
        return Err(unknown());
    };
    let mut wanted = BTreeSet::new();
    for tok in parse_extensions(text) {
        wanted.insert(schema(tok).map_err(|_| unknown())?.name.to_string());
    }
    registry()
        .iter()
        .filter(|l| l.id != "il")
        .find(|l| l.language == language && l.extensions.iter().cloned().collect::<BTreeSet<_>>() == wanted)
        .ok_or_else(unknown)
}

/// The unary logic corresponding to a binary one.
pub fn logic_counterpart(l: &Logic) -> Result<&'static Logic, Error> {
    let id = l.counterpart.as_deref().ok_or_else(|| Error::NoCounterpart(l.id.clone()))?;
    logic(id)
}

/// The binary logic whose frame class stands in for a unary logic.
pub fn semantic_partner(l: &Logic) -> Result<&'static Logic, Error> {
    match l.language {
        Language::Binary => logic(&l.id),
        Language::Unary => logic(l.partner.as_deref().ok_or_else(|| Error::NoCounterpart(l.id.clone()))?),
    }
}

/// The registry as pretty-printed JSON.
pub fn registry_json() -> String {
    serde_json::to_string_pretty(registry()).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let r = registry();
        assert_eq!(r.iter().filter(|l| l.language == Language::Binary).count(), 20);
        let table_unary = r.iter().filter(|l| l.language == Language::Unary && l.in_table).count();
        assert_eq!(table_unary, 13);
        let ids: BTreeSet<&str> = r.iter().map(|l| l.id.as_str()).collect();
        assert_eq!(ids.len(), r.len());
    }

    #[test]
    fn lookup_spellings() {
        assert_eq!(logic("IL-(J1,J5)").unwrap().id, "IL-(J1,J5)");
        assert_eq!(logic("IL-(J5, J1)").unwrap().id, "IL-(J1,J5)");
        assert_eq!(logic("il-uJ15").unwrap().id, "il-(uJ15)");
        assert_eq!(logic("IL-(J1,J2+)").unwrap().id, "CL");
        assert_eq!(logic("IL").unwrap().id, "IL");
        assert_eq!(logic("il").unwrap().rules, vec![Rule::MP, Rule::Nec]);
        assert_eq!(logic("il-").unwrap().axioms, vec!["G2", "G3", "uJ6"]);
        assert!(logic("IL-(J9)").is_err());
        assert!(logic("KL").is_err());
    }

    #[test]
    fn counterparts() {
        let c = |b: &str| logic_counterpart(logic(b).unwrap()).unwrap().id.clone();
        assert_eq!(c("IL-(J5)"), "il-");
        assert_eq!(c("IL-(J2,J4+)"), "il-(I2)");
        assert_eq!(c("CL"), "il-(uJ1,I2)");
        assert_eq!(c("IL"), "il-(uJ1,I2,I3)");
        assert!(logic_counterpart(logic("il-").unwrap()).is_err());
        assert_eq!(semantic_partner(logic("il-(uJ15)").unwrap()).unwrap().id, "IL-(J1,J5)");
        assert_eq!(semantic_partner(logic("il-(I4)").unwrap()).unwrap().id, "IL-(J4)");
    }

    #[test]
    fn figure_edges_are_inclusions() {
        let edges = [
            ("IL-", "IL-(J5)"),
            ("IL-", "IL-(J1)"),
            ("IL-", "IL-(J4+)"),
            ("IL-(J5)", "IL-(J1,J5)"),
            ("IL-(J5)", "IL-(J4+,J5)"),
            ("IL-(J1)", "IL-(J1,J5)"),
            ("IL-(J1)", "IL-(J1,J4+)"),
            ("IL-(J4+)", "IL-(J4+,J5)"),
            ("IL-(J4+)", "IL-(J1,J4+)"),
            ("IL-(J4+)", "IL-(J2+)"),
            ("IL-(J1,J5)", "IL-(J1,J4+,J5)"),
            ("IL-(J4+,J5)", "IL-(J1,J4+,J5)"),
            ("IL-(J4+,J5)", "IL-(J2+,J5)"),
            ("IL-(J1,J4+)", "IL-(J1,J4+,J5)"),
            ("IL-(J1,J4+)", "CL"),
            ("IL-(J2+)", "IL-(J2+,J5)"),
            ("IL-(J2+)", "CL"),
            ("IL-(J1,J4+,J5)", "IL"),
            ("IL-(J2+,J5)", "IL"),
            ("CL", "IL"),
            ("IL-(J4)", "IL-(J1,J4)"),
            ("IL-(J4)", "IL-(J4,J5)"),
            ("IL-(J4)", "IL-(J2)"),
            ("IL-(J1,J4)", "IL-(J1,J4,J5)"),
            ("IL-(J4,J5)", "IL-(J1,J4,J5)"),
            ("IL-(J4,J5)", "IL-(J2,J5)"),
            ("IL-(J2)", "IL-(J2,J5)"),
            ("IL-(J2)", "IL-(J2,J4+)"),
            ("IL-(J2,J5)", "IL-(J2,J4+,J5)"),
            ("IL-(J2,J4+)", "IL-(J2,J4+,J5)"),
        ];
        for (lo, hi) in edges {
            let (a, b) = (logic(lo).unwrap(), logic(hi).unwrap());
            assert!(a.included_in(b), "{lo} <= {hi}");
            assert!(!b.included_in(a), "{hi} not <= {lo}");
        }
    }
}
