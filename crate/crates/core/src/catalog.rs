//! Cognitive-operation catalogs and sequence constraints.
//!
//! A catalog is the ordered set of cognitive operations available to a
//! prompting strategy for one problem domain. The general catalog has eight
//! operations; domain-specialized catalogs rename (and sometimes extend)
//! them. Catalogs are compiled-in constants; extra domains can be loaded
//! from a catalog file (see [`load_catalog_file`]).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown domain: {0:?}")]
    UnknownDomain(String),
    #[error("no operation named {0:?} in the {1} catalog")]
    NotFound(String, DomainId),
    #[error("invalid catalog: {0}")]
    InvalidCatalog(String),
    #[error("catalog file {path}, line {line}: {reason}")]
    FileFormat {
        path: String,
        line: usize,
        reason: String,
    },
    #[error("failed to read catalog file: {0}")]
    Io(#[from] std::io::Error),
}

/// Problem domain a catalog specializes the operations for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainId {
    General,
    Math,
    Commonsense,
    Creative,
    DecisionMaking,
    ScientificInquiry,
    StrategicPlanning,
    Ethical,
    Logical,
    /// A domain defined by a user-supplied catalog file, never by name parsing.
    Custom(String),
}

impl DomainId {
    pub const KNOWN: [DomainId; 9] = [
        DomainId::General,
        DomainId::Math,
        DomainId::Commonsense,
        DomainId::Creative,
        DomainId::DecisionMaking,
        DomainId::ScientificInquiry,
        DomainId::StrategicPlanning,
        DomainId::Ethical,
        DomainId::Logical,
    ];

    pub fn as_str(&self) -> &str {
        match self {
            DomainId::General => "general",
            DomainId::Math => "math",
            DomainId::Commonsense => "commonsense",
            DomainId::Creative => "creative",
            DomainId::DecisionMaking => "decision_making",
            DomainId::ScientificInquiry => "scientific_inquiry",
            DomainId::StrategicPlanning => "strategic_planning",
            DomainId::Ethical => "ethical",
            DomainId::Logical => "logical",
            DomainId::Custom(name) => name,
        }
    }
}

impl fmt::Display for DomainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DomainId {
    type Err = CatalogError;

    /// Only the nine built-in domain names parse; anything else is rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DomainId::KNOWN
            .iter()
            .find(|d| d.as_str() == s)
            .cloned()
            .ok_or_else(|| CatalogError::UnknownDomain(s.to_string()))
    }
}

impl Serialize for DomainId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for DomainId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        // Permissive on purpose: run logs may reference custom domains.
        let s = String::deserialize(d)?;
        Ok(s.parse().unwrap_or(DomainId::Custom(s)))
    }
}

/// One cognitive operation: a named problem-solving step rendered as prompt
/// text. The description is opaque — nothing here models what the step does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CognitiveOperation {
    pub id: String,
    pub canonical_name: String,
    pub abbreviation: String,
    pub description: String,
    /// For specialized catalogs whose rows correspond positionally to a
    /// general operation; `None` for extra rows (e.g. math has nine).
    pub general_parent: Option<String>,
}

/// Ordered, immutable set of operations for one domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationCatalog {
    domain: DomainId,
    operations: Vec<CognitiveOperation>,
}

impl OperationCatalog {
    /// Builds a catalog, checking id and abbreviation uniqueness and
    /// non-empty descriptions.
    pub fn new(
        domain: DomainId,
        operations: Vec<CognitiveOperation>,
    ) -> Result<Self, CatalogError> {
        if operations.is_empty() {
            return Err(CatalogError::InvalidCatalog(format!(
                "{domain} catalog has no operations"
            )));
        }
        let mut ids = BTreeSet::new();
        let mut abbrevs = BTreeSet::new();
        for op in &operations {
            if op.id.is_empty() || op.canonical_name.is_empty() {
                return Err(CatalogError::InvalidCatalog(format!(
                    "{domain} catalog has an operation with an empty id or name"
                )));
            }
            if op.description.is_empty() {
                return Err(CatalogError::InvalidCatalog(format!(
                    "operation {} has an empty description",
                    op.id
                )));
            }
            if !ids.insert(op.id.clone()) {
                return Err(CatalogError::InvalidCatalog(format!(
                    "duplicate operation id {} in {domain} catalog",
                    op.id
                )));
            }
            if !abbrevs.insert(op.abbreviation.clone()) {
                return Err(CatalogError::InvalidCatalog(format!(
                    "duplicate abbreviation {} in {domain} catalog",
                    op.abbreviation
                )));
            }
        }
        Ok(OperationCatalog { domain, operations })
    }

    pub fn domain(&self) -> &DomainId {
        &self.domain
    }

    pub fn operations(&self) -> &[CognitiveOperation] {
        &self.operations
    }

    pub fn len(&self) -> usize {
        self.operations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operations.is_empty()
    }

    pub fn contains(&self, op_id: &str) -> bool {
        self.operations.iter().any(|op| op.id == op_id)
    }

    pub fn get(&self, op_id: &str) -> Option<&CognitiveOperation> {
        self.operations.iter().find(|op| op.id == op_id)
    }

    /// Position of an operation in catalog order.
    pub fn index_of(&self, op_id: &str) -> Option<usize> {
        self.operations.iter().position(|op| op.id == op_id)
    }

    /// Case-insensitive match on the canonical display name.
    pub fn find_by_name(&self, name: &str) -> Option<&CognitiveOperation> {
        self.operations
            .iter()
            .find(|op| op.canonical_name.eq_ignore_ascii_case(name))
    }
}

/// Resolves an operation by id, canonical name (case-insensitive) or
/// abbreviation, after stripping surrounding markup and whitespace.
pub fn lookup<'a>(
    catalog: &'a OperationCatalog,
    name: &str,
) -> Result<&'a CognitiveOperation, CatalogError> {
    let needle = strip_surrounding_markup(name);
    catalog
        .operations
        .iter()
        .find(|op| {
            op.id == needle
                || op.canonical_name.eq_ignore_ascii_case(needle)
                || op.abbreviation.eq_ignore_ascii_case(needle)
        })
        .ok_or_else(|| CatalogError::NotFound(name.to_string(), catalog.domain.clone()))
}

/// Trims whitespace plus markup punctuation (`*`, `_`, `#`, backticks,
/// quotes, sentence punctuation) from both ends.
pub(crate) fn strip_surrounding_markup(s: &str) -> &str {
    let junk: &[char] = &['*', '_', '#', '`', '"', '\'', ':', '.', ',', '!', '?'];
    s.trim().trim_matches(junk).trim()
}

/// An ordered list of operation ids, prescribed or observed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OperationSequence(pub Vec<String>);

impl OperationSequence {
    pub fn from_ids<I, S>(ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        OperationSequence(ids.into_iter().map(Into::into).collect())
    }

    pub fn ids(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for OperationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(","))
    }
}

/// Constraints on an operation sequence: fixed length `k`, fixed endpoints,
/// an upper length cap, and whether an operation may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SequenceConstraints {
    pub length_k: Option<usize>,
    pub first_op: Option<String>,
    pub last_op: Option<String>,
    pub max_length: Option<usize>,
    pub allow_repetition: bool,
}

impl SequenceConstraints {
    /// The canonical form: `|S| = k`, starting with goal clarification and
    /// ending with integration, no repeats.
    pub fn fixed_length(k: usize, first_op: &str, last_op: &str) -> Self {
        SequenceConstraints {
            length_k: Some(k),
            first_op: Some(first_op.to_string()),
            last_op: Some(last_op.to_string()),
            max_length: None,
            allow_repetition: false,
        }
    }

    /// Checks internal consistency and that named endpoints exist in the
    /// catalog. Violations of a *sequence* against constraints are reported
    /// by [`validate_sequence`], not here.
    pub fn check_well_formed(&self, catalog: &OperationCatalog) -> Result<(), CatalogError> {
        if let (Some(k), Some(max)) = (self.length_k, self.max_length) {
            if k > max {
                return Err(CatalogError::InvalidCatalog(format!(
                    "length_k {k} exceeds max_length {max}"
                )));
            }
        }
        if let Some(zero) = [self.length_k, self.max_length].iter().flatten().find(|&&v| v == 0) {
            let _ = zero;
            return Err(CatalogError::InvalidCatalog(
                "length constraints must be positive".to_string(),
            ));
        }
        for op in [&self.first_op, &self.last_op].into_iter().flatten() {
            if !catalog.contains(op) {
                return Err(CatalogError::NotFound(op.clone(), catalog.domain.clone()));
            }
        }
        Ok(())
    }
}

/// One way a sequence fails its constraints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstraintViolation {
    Length { expected: usize, actual: usize },
    FirstOp { expected: String, actual: Option<String> },
    LastOp { expected: String, actual: Option<String> },
    MaxLength { max: usize, actual: usize },
    Repetition { op_id: String },
    UnknownOp { op_id: String },
}

/// Violations found by [`validate_sequence`]; empty means valid.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<ConstraintViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks a sequence against a catalog and constraints. Violations are data,
/// not errors: every failed check appears in the report.
pub fn validate_sequence(
    catalog: &OperationCatalog,
    seq: &OperationSequence,
    c: &SequenceConstraints,
) -> ValidationReport {
    let mut violations = Vec::new();
    let mut seen_unknown = BTreeSet::new();
    for id in seq.ids() {
        if !catalog.contains(id) && seen_unknown.insert(id.clone()) {
            violations.push(ConstraintViolation::UnknownOp { op_id: id.clone() });
        }
    }
    if let Some(k) = c.length_k {
        if seq.len() != k {
            violations.push(ConstraintViolation::Length {
                expected: k,
                actual: seq.len(),
            });
        }
    }
    if let Some(expected) = &c.first_op {
        let actual = seq.ids().first();
        if actual.map(String::as_str) != Some(expected.as_str()) {
            violations.push(ConstraintViolation::FirstOp {
                expected: expected.clone(),
                actual: actual.cloned(),
            });
        }
    }
    if let Some(expected) = &c.last_op {
        let actual = seq.ids().last();
        if actual.map(String::as_str) != Some(expected.as_str()) {
            violations.push(ConstraintViolation::LastOp {
                expected: expected.clone(),
                actual: actual.cloned(),
            });
        }
    }
    if let Some(max) = c.max_length {
        if seq.len() > max {
            violations.push(ConstraintViolation::MaxLength {
                max,
                actual: seq.len(),
            });
        }
    }
    if !c.allow_repetition {
        let mut seen = BTreeSet::new();
        let mut reported = BTreeSet::new();
        for id in seq.ids() {
            if !seen.insert(id.clone()) && reported.insert(id.clone()) {
                violations.push(ConstraintViolation::Repetition { op_id: id.clone() });
            }
        }
    }
    ValidationReport { violations }
}

// --- Built-in catalog tables ---
//
// Row layout: (id, canonical name, abbreviation or "" to derive, description,
// general parent id or "").

type Row = (
    &'static str,
    &'static str,
    &'static str,
    &'static str,
    &'static str,
);

const GENERAL_ROWS: &[Row] = &[
    (
        "goal_clarification",
        "Goal Clarification",
        "GC",
        "Define the objective clearly.",
        "",
    ),
    (
        "decomposition",
        "Decomposition",
        "DC",
        "Break down the problem into manageable parts.",
        "",
    ),
    (
        "filtering",
        "Filtering",
        "FI",
        "Focus on the most relevant information.",
        "",
    ),
    (
        "reorganization",
        "Reorganization",
        "RE",
        "Arrange the information to reveal patterns or structure.",
        "",
    ),
    (
        "pattern_recognition",
        "Pattern Recognition",
        "PR",
        "Identify recurring patterns or relationships.",
        "",
    ),
    (
        "abstraction",
        "Abstraction",
        "AB",
        "Extract fundamental principles from the patterns.",
        "",
    ),
    (
        "generalization",
        "Generalization",
        "GN",
        "Apply the abstracted principles to the larger problem.",
        "",
    ),
    (
        "integration",
        "Integration",
        "IN",
        "Synthesize the components into a cohesive solution.",
        "",
    ),
];

const COMMONSENSE_ROWS: &[Row] = &[
    (
        "goal_clarification",
        "Goal Clarification",
        "GC",
        "Define the objective or the intended commonsense outcome clearly.",
        "goal_clarification",
    ),
    (
        "decomposition",
        "Decomposition",
        "DC",
        "Break down the problem into its key components and relevant factors.",
        "decomposition",
    ),
    (
        "filtering",
        "Filtering",
        "FI",
        "Focus on the most important commonsense aspects and discard irrelevant information.",
        "filtering",
    ),
    (
        "reorganization",
        "Reorganization",
        "RE",
        "Rearrange the facts and perspectives to better understand potential conflicts or ambiguities.",
        "reorganization",
    ),
    (
        "pattern_recognition",
        "Pattern Recognition",
        "PR",
        "Identify similarities with other commonsense scenarios or precedents.",
        "pattern_recognition",
    ),
    (
        "abstraction",
        "Abstraction",
        "AB",
        "Extract broader commonsense principles that can be applied to this situation.",
        "abstraction",
    ),
    (
        "reasoning",
        "Reasoning",
        "RS",
        "Reflect on the logical consistency of the solution and ensure it aligns with common sense.",
        "",
    ),
    (
        "generalization",
        "Generalization",
        "GN",
        "Apply the commonsense principles to the current and potentially future similar scenarios.",
        "generalization",
    ),
    (
        "integration",
        "Integration",
        "IN",
        "Synthesize all perspectives and principles into a final commonsense decision.",
        "integration",
    ),
];

const MATH_ROWS: &[Row] = &[
    (
        "restate_problem",
        "Restate the Problem in Your Own Words",
        "",
        "Express the problem in your own words to ensure clarity.",
        "",
    ),
    (
        "list_given_information",
        "List the Given Information",
        "",
        "Identify the known values and relationships.",
        "",
    ),
    (
        "identify_unknowns",
        "Identify What You Need to Find",
        "",
        "State the unknowns the problem asks for.",
        "",
    ),
    (
        "assign_variables",
        "Assign Variables to the Unknowns",
        "",
        "Introduce a variable for each unknown quantity.",
        "",
    ),
    (
        "define_variables",
        "Define Each Variable Clearly",
        "",
        "State precisely what each variable represents.",
        "",
    ),
    (
        "set_up_equations",
        "Set Up Equations Based on the Problem",
        "",
        "Translate the problem's relationships into equations.",
        "",
    ),
    (
        "solve_equations",
        "Solve the Equations Step by Step",
        "",
        "Work through the equations one step at a time.",
        "",
    ),
    (
        "verify_solution",
        "Verify Your Solution with the Given Information",
        "",
        "Check the solution against the given information.",
        "",
    ),
    (
        "state_final_answer",
        "Provide a Clear and Direct Answer",
        "",
        "State the final answer clearly and directly.",
        "",
    ),
];

const CREATIVE_ROWS: &[Row] = &[
    (
        "clarify_creative_challenge",
        "Clarify the Creative Challenge",
        "",
        "Define the creative challenge clearly.",
        "goal_clarification",
    ),
    (
        "break_challenge_into_parts",
        "Break the Challenge into Parts",
        "",
        "Split the challenge into workable parts.",
        "decomposition",
    ),
    (
        "focus_on_key_constraints",
        "Focus on Key Constraints",
        "",
        "Concentrate on the constraints that matter most.",
        "filtering",
    ),
    (
        "explore_new_perspectives",
        "Explore New Perspectives",
        "",
        "Look at the challenge from unfamiliar angles.",
        "reorganization",
    ),
    (
        "identify_creative_patterns",
        "Identify Creative Patterns",
        "",
        "Spot patterns from comparable creative work.",
        "pattern_recognition",
    ),
    (
        "develop_broad_concepts",
        "Develop Broad Concepts",
        "",
        "Form broad concepts from the patterns found.",
        "abstraction",
    ),
    (
        "test_and_refine_ideas",
        "Test and Refine Ideas",
        "",
        "Try the ideas out and refine what works.",
        "generalization",
    ),
    (
        "synthesize_novel_solutions",
        "Synthesize Novel Solutions",
        "",
        "Combine the refined ideas into a novel solution.",
        "integration",
    ),
];

const DECISION_MAKING_ROWS: &[Row] = &[
    (
        "define_decision_objective",
        "Define the Decision Objective",
        "",
        "State what the decision must achieve.",
        "goal_clarification",
    ),
    (
        "break_decision_into_factors",
        "Break Decision into Factors",
        "",
        "Separate the decision into its contributing factors.",
        "decomposition",
    ),
    (
        "focus_on_critical_information",
        "Focus on Critical Information",
        "",
        "Keep only the information critical to the choice.",
        "filtering",
    ),
    (
        "arrange_alternatives",
        "Arrange Alternatives",
        "",
        "Lay out the alternatives for comparison.",
        "reorganization",
    ),
    (
        "identify_patterns_in_choices",
        "Identify Patterns in Choices",
        "",
        "Find patterns across the candidate choices.",
        "pattern_recognition",
    ),
    (
        "extract_general_principles",
        "Extract General Principles",
        "",
        "Draw general principles from the patterns.",
        "abstraction",
    ),
    (
        "test_against_criteria",
        "Test Against Criteria",
        "",
        "Check each alternative against the decision criteria.",
        "generalization",
    ),
    (
        "make_final_decision",
        "Make a Final Decision",
        "",
        "Commit to the alternative that best meets the objective.",
        "integration",
    ),
];

const SCIENTIFIC_INQUIRY_ROWS: &[Row] = &[
    (
        "formulate_research_question",
        "Formulate the Research Question",
        "",
        "State the research question precisely.",
        "goal_clarification",
    ),
    (
        "break_research_into_subquestions",
        "Break Research into Sub-Questions",
        "",
        "Divide the question into testable sub-questions.",
        "decomposition",
    ),
    (
        "identify_key_variables",
        "Identify Key Variables",
        "",
        "Pick out the variables that drive the phenomenon.",
        "filtering",
    ),
    (
        "plan_experiment",
        "Plan the Experiment",
        "",
        "Arrange an experiment that isolates the variables.",
        "reorganization",
    ),
    (
        "look_for_patterns_in_data",
        "Look for Patterns in Data",
        "",
        "Search the data for regularities.",
        "pattern_recognition",
    ),
    (
        "develop_theoretical_insights",
        "Develop Theoretical Insights",
        "",
        "Turn the regularities into theoretical insight.",
        "abstraction",
    ),
    (
        "apply_findings_broadly",
        "Apply Findings Broadly",
        "",
        "Extend the findings beyond the studied case.",
        "generalization",
    ),
    (
        "form_conclusions",
        "Form Conclusions",
        "",
        "Draw conclusions that answer the research question.",
        "integration",
    ),
];

const STRATEGIC_PLANNING_ROWS: &[Row] = &[
    (
        "define_strategic_objective",
        "Define the Strategic Objective",
        "",
        "State the strategic objective clearly.",
        "goal_clarification",
    ),
    (
        "break_strategy_into_steps",
        "Break Strategy into Steps",
        "",
        "Split the strategy into actionable steps.",
        "decomposition",
    ),
    (
        "prioritize_focus_areas",
        "Prioritize Focus Areas",
        "",
        "Rank the areas that deserve attention first.",
        "filtering",
    ),
    (
        "arrange_steps_logically",
        "Arrange Steps Logically",
        "",
        "Order the steps so each enables the next.",
        "reorganization",
    ),
    (
        "identify_strategic_trends",
        "Identify Strategic Trends",
        "",
        "Recognize trends that shape the strategy.",
        "pattern_recognition",
    ),
    (
        "formulate_high_level_plans",
        "Formulate High-Level Plans",
        "",
        "Condense the trends into high-level plans.",
        "abstraction",
    ),
    (
        "test_strategies_against_scenarios",
        "Test Strategies Against Scenarios",
        "",
        "Stress the plans against plausible scenarios.",
        "generalization",
    ),
    (
        "develop_cohesive_plan",
        "Develop a Cohesive Plan",
        "",
        "Assemble the steps into one cohesive plan.",
        "integration",
    ),
];

const ETHICAL_ROWS: &[Row] = &[
    (
        "clarify_ethical_dilemma",
        "Clarify the Ethical Dilemma",
        "",
        "State the ethical dilemma plainly.",
        "goal_clarification",
    ),
    (
        "break_dilemma_into_components",
        "Break Dilemma into Components",
        "",
        "Separate the dilemma into its moral components.",
        "decomposition",
    ),
    (
        "focus_on_pressing_issues",
        "Focus on Pressing Issues",
        "",
        "Attend to the most pressing issues first.",
        "filtering",
    ),
    (
        "consider_different_perspectives",
        "Consider Different Perspectives",
        "",
        "Weigh the perspectives of everyone affected.",
        "reorganization",
    ),
    (
        "identify_similar_cases",
        "Identify Similar Cases",
        "",
        "Recall cases that resemble this dilemma.",
        "pattern_recognition",
    ),
    (
        "develop_ethical_principles",
        "Develop Ethical Principles",
        "",
        "Derive principles that cover such cases.",
        "abstraction",
    ),
    (
        "evaluate_solutions_against_principles",
        "Evaluate Solutions Against Principles",
        "",
        "Judge each candidate solution by those principles.",
        "generalization",
    ),
    (
        "make_final_ethical_judgment",
        "Make a Final Ethical Judgment",
        "",
        "Deliver a final, defensible judgment.",
        "integration",
    ),
];

const LOGICAL_ROWS: &[Row] = &[
    (
        "restate_logical_problem",
        "Restate the Logical Problem Clearly",
        "",
        "Restate the logical problem without ambiguity.",
        "",
    ),
    (
        "break_problem_into_clues",
        "Break Problem into Key Logical Clues",
        "",
        "Separate the problem into its key clues.",
        "",
    ),
    (
        "focus_on_critical_clues",
        "Focus on the Most Critical Clues",
        "",
        "Work from the clues that constrain the most.",
        "",
    ),
    (
        "organize_information_logically",
        "Organize Information Logically",
        "",
        "Arrange the clues into a logical structure.",
        "",
    ),
    (
        "identify_logical_deductions",
        "Identify Logical Deductions",
        "",
        "Derive what follows necessarily from the clues.",
        "",
    ),
    (
        "generalize_rules_or_inferences",
        "Generalize Rules or Inferences",
        "",
        "Generalize the deductions into rules.",
        "",
    ),
    (
        "test_inferences_against_clues",
        "Test Inferences Against Remaining Clues",
        "",
        "Check the rules against the clues not yet used.",
        "",
    ),
    (
        "synthesize_complete_solution",
        "Synthesize a Complete Solution",
        "",
        "Combine the deductions into a complete solution.",
        "",
    ),
    (
        "provide_final_answer",
        "Provide the Final Answer",
        "",
        "State the final answer.",
        "",
    ),
];

/// Derives a two-letter code from a canonical name: initials of the first
/// two capitalized words (or the first two letters of a single word),
/// advancing through later initials and then numeric suffixes on collision.
fn derive_abbreviation(name: &str, taken: &BTreeSet<String>) -> String {
    let initials: Vec<char> = name
        .split_whitespace()
        .filter_map(|w| w.chars().next().filter(|c| c.is_ascii_uppercase()))
        .collect();
    let mut candidates = Vec::new();
    if initials.len() >= 2 {
        for second in &initials[1..] {
            candidates.push(format!("{}{}", initials[0], second));
        }
    } else {
        let word = name
            .split_whitespace()
            .next()
            .unwrap_or(name)
            .to_ascii_uppercase();
        candidates.push(word.chars().take(2).collect());
    }
    for c in &candidates {
        if !taken.contains(c) {
            return c.clone();
        }
    }
    let base = candidates[0].clone();
    (2..)
        .map(|n| format!("{base}{n}"))
        .find(|c| !taken.contains(c))
        .unwrap()
}

fn build_catalog(domain: DomainId, rows: &[Row]) -> OperationCatalog {
    let mut taken: BTreeSet<String> = rows
        .iter()
        .filter(|r| !r.2.is_empty())
        .map(|r| r.2.to_string())
        .collect();
    let operations = rows
        .iter()
        .map(|&(id, name, abbrev, description, parent)| {
            let abbreviation = if abbrev.is_empty() {
                let derived = derive_abbreviation(name, &taken);
                taken.insert(derived.clone());
                derived
            } else {
                abbrev.to_string()
            };
            CognitiveOperation {
                id: id.to_string(),
                canonical_name: name.to_string(),
                abbreviation,
                description: description.to_string(),
                general_parent: (!parent.is_empty()).then(|| parent.to_string()),
            }
        })
        .collect();
    OperationCatalog::new(domain, operations).expect("built-in catalog is well formed")
}

static CATALOGS: Lazy<BTreeMap<DomainId, OperationCatalog>> = Lazy::new(|| {
    let mut m = BTreeMap::new();
    m.insert(DomainId::General, build_catalog(DomainId::General, GENERAL_ROWS));
    m.insert(DomainId::Math, build_catalog(DomainId::Math, MATH_ROWS));
    m.insert(
        DomainId::Commonsense,
        build_catalog(DomainId::Commonsense, COMMONSENSE_ROWS),
    );
    m.insert(DomainId::Creative, build_catalog(DomainId::Creative, CREATIVE_ROWS));
    m.insert(
        DomainId::DecisionMaking,
        build_catalog(DomainId::DecisionMaking, DECISION_MAKING_ROWS),
    );
    m.insert(
        DomainId::ScientificInquiry,
        build_catalog(DomainId::ScientificInquiry, SCIENTIFIC_INQUIRY_ROWS),
    );
    m.insert(
        DomainId::StrategicPlanning,
        build_catalog(DomainId::StrategicPlanning, STRATEGIC_PLANNING_ROWS),
    );
    m.insert(DomainId::Ethical, build_catalog(DomainId::Ethical, ETHICAL_ROWS));
    m.insert(DomainId::Logical, build_catalog(DomainId::Logical, LOGICAL_ROWS));
    m
});

/// The eight-operation general catalog, from goal clarification to
/// integration.
pub fn general_catalog() -> &'static OperationCatalog {
    &CATALOGS[&DomainId::General]
}

/// The catalog specialized for a built-in domain.
pub fn domain_catalog(domain: &DomainId) -> Result<&'static OperationCatalog, CatalogError> {
    CATALOGS
        .get(domain)
        .ok_or_else(|| CatalogError::UnknownDomain(domain.to_string()))
}

/// Built-in catalogs plus any loaded from catalog files. Custom domains
/// shadow built-ins of the same name.
#[derive(Debug, Clone, Default)]
pub struct CatalogRegistry {
    custom: BTreeMap<DomainId, OperationCatalog>,
}

impl CatalogRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, catalog: OperationCatalog) {
        self.custom.insert(catalog.domain.clone(), catalog);
    }

    pub fn load_file(&mut self, path: impl AsRef<Path>) -> Result<usize, CatalogError> {
        let loaded = load_catalog_file(path)?;
        let n = loaded.len();
        for c in loaded {
            self.add(c);
        }
        Ok(n)
    }

    pub fn resolve(&self, domain: &DomainId) -> Result<&OperationCatalog, CatalogError> {
        if let Some(c) = self.custom.get(domain) {
            return Ok(c);
        }
        domain_catalog(domain)
    }
}

/// Loads catalogs from a tab-separated file. Each data line is
/// `domain<TAB>position<TAB>id<TAB>canonical_name<TAB>abbreviation<TAB>description`;
/// positions are 1-based and contiguous per domain; an abbreviation of `-`
/// is derived from the name. Blank lines and `#` comments are skipped.
pub fn load_catalog_file(path: impl AsRef<Path>) -> Result<Vec<OperationCatalog>, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let path_str = path.display().to_string();
    let mut rows: BTreeMap<String, Vec<(usize, usize, Vec<String>)>> = BTreeMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<String> = line.split('\t').map(|f| f.trim().to_string()).collect();
        if fields.len() != 6 {
            return Err(CatalogError::FileFormat {
                path: path_str,
                line: line_no,
                reason: format!("expected 6 tab-separated fields, found {}", fields.len()),
            });
        }
        let position: usize = fields[1].parse().map_err(|_| CatalogError::FileFormat {
            path: path_str.clone(),
            line: line_no,
            reason: format!("position {:?} is not a positive integer", fields[1]),
        })?;
        if position == 0 {
            return Err(CatalogError::FileFormat {
                path: path_str,
                line: line_no,
                reason: "positions are 1-based".to_string(),
            });
        }
        rows.entry(fields[0].clone())
            .or_default()
            .push((position, line_no, fields));
    }
    let mut catalogs = Vec::new();
    for (domain_name, mut domain_rows) in rows {
        domain_rows.sort_by_key(|(pos, _, _)| *pos);
        let mut taken: BTreeSet<String> = domain_rows
            .iter()
            .filter(|(_, _, f)| f[4] != "-" && !f[4].is_empty())
            .map(|(_, _, f)| f[4].clone())
            .collect();
        let mut operations = Vec::new();
        for (expected, (position, line_no, fields)) in domain_rows.into_iter().enumerate() {
            if position != expected + 1 {
                return Err(CatalogError::FileFormat {
                    path: path_str.clone(),
                    line: line_no,
                    reason: format!(
                        "positions for domain {domain_name:?} must be contiguous from 1; \
                         expected {}, found {position}",
                        expected + 1
                    ),
                });
            }
            let abbreviation = if fields[4] == "-" || fields[4].is_empty() {
                let derived = derive_abbreviation(&fields[3], &taken);
                taken.insert(derived.clone());
                derived
            } else {
                fields[4].clone()
            };
            operations.push(CognitiveOperation {
                id: fields[2].clone(),
                canonical_name: fields[3].clone(),
                abbreviation,
                description: fields[5].clone(),
                general_parent: None,
            });
        }
        let domain = domain_name
            .parse()
            .unwrap_or(DomainId::Custom(domain_name));
        catalogs.push(OperationCatalog::new(domain, operations)?);
    }
    Ok(catalogs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_catalog_has_eight_ops_in_order() {
        let cat = general_catalog();
        assert_eq!(cat.len(), 8);
        assert_eq!(cat.operations()[0].id, "goal_clarification");
        assert_eq!(cat.operations()[7].id, "integration");
        let ids: Vec<&str> = cat.operations().iter().map(|o| o.id.as_str()).collect();
        assert_eq!(
            ids,
            [
                "goal_clarification",
                "decomposition",
                "filtering",
                "reorganization",
                "pattern_recognition",
                "abstraction",
                "generalization",
                "integration"
            ]
        );
    }

    #[test]
    fn general_abbreviations_match_figure_codes() {
        let abbrevs: BTreeSet<&str> = general_catalog()
            .operations()
            .iter()
            .map(|o| o.abbreviation.as_str())
            .collect();
        let expected: BTreeSet<&str> =
            ["GC", "DC", "FI", "RE", "PR", "AB", "GN", "IN"].into_iter().collect();
        assert_eq!(abbrevs, expected);
    }

    #[test]
    fn general_catalog_is_a_pure_constant() {
        assert_eq!(general_catalog(), general_catalog());
    }

    #[test]
    fn commonsense_has_reasoning_between_abstraction_and_generalization() {
        let cat = domain_catalog(&DomainId::Commonsense).unwrap();
        assert_eq!(cat.len(), 9);
        let idx = cat.index_of("reasoning").unwrap();
        assert_eq!(cat.index_of("abstraction").unwrap(), idx - 1);
        assert_eq!(cat.index_of("generalization").unwrap(), idx + 1);
        let reasoning = cat.get("reasoning").unwrap();
        assert!(reasoning.description.starts_with("Reflect on the logical consistency"));
        assert_eq!(reasoning.abbreviation, "RS");
    }

    #[test]
    fn math_catalog_has_nine_rows_starting_with_restate() {
        let cat = domain_catalog(&DomainId::Math).unwrap();
        assert_eq!(cat.len(), 9);
        assert_eq!(
            cat.operations()[0].canonical_name,
            "Restate the Problem in Your Own Words"
        );
    }

    #[test]
    fn general_domain_equals_general_catalog() {
        assert_eq!(domain_catalog(&DomainId::General).unwrap(), general_catalog());
    }

    #[test]
    fn every_domain_has_unique_ids_and_abbreviations() {
        for domain in DomainId::KNOWN {
            let cat = domain_catalog(&domain).unwrap();
            let ids: BTreeSet<_> = cat.operations().iter().map(|o| &o.id).collect();
            let abbrevs: BTreeSet<_> = cat.operations().iter().map(|o| &o.abbreviation).collect();
            assert_eq!(ids.len(), cat.len(), "{domain} ids not unique");
            assert_eq!(abbrevs.len(), cat.len(), "{domain} abbreviations not unique");
        }
    }

    #[test]
    fn eight_row_domains_map_onto_general_parents() {
        for domain in [
            DomainId::Creative,
            DomainId::DecisionMaking,
            DomainId::ScientificInquiry,
            DomainId::StrategicPlanning,
            DomainId::Ethical,
        ] {
            let cat = domain_catalog(&domain).unwrap();
            assert_eq!(cat.len(), 8, "{domain}");
            let general = general_catalog();
            for (i, op) in cat.operations().iter().enumerate() {
                assert_eq!(
                    op.general_parent.as_deref(),
                    Some(general.operations()[i].id.as_str()),
                    "{domain} row {i}"
                );
            }
        }
    }

    #[test]
    fn lookup_round_trips_every_op_in_every_catalog() {
        for domain in DomainId::KNOWN {
            let cat = domain_catalog(&domain).unwrap();
            for op in cat.operations() {
                assert_eq!(lookup(cat, &op.canonical_name).unwrap().id, op.id);
                assert_eq!(lookup(cat, &op.abbreviation).unwrap().id, op.id);
                assert_eq!(lookup(cat, &op.id).unwrap().id, op.id);
            }
        }
    }

    #[test]
    fn lookup_examples() {
        let cat = general_catalog();
        assert_eq!(lookup(cat, "Goal Clarification").unwrap().id, "goal_clarification");
        assert_eq!(lookup(cat, "GC").unwrap().id, "goal_clarification");
        assert_eq!(lookup(cat, "gc").unwrap().id, "goal_clarification");
        assert_eq!(lookup(cat, "**Filtering:**").unwrap().id, "filtering");
        assert!(matches!(
            lookup(cat, "Reasoning"),
            Err(CatalogError::NotFound(_, _))
        ));
    }

    #[test]
    fn domain_parse_rejects_unknown_names() {
        assert!("math".parse::<DomainId>().is_ok());
        assert!("decision_making".parse::<DomainId>().is_ok());
        assert!(matches!(
            "poetry".parse::<DomainId>(),
            Err(CatalogError::UnknownDomain(_))
        ));
    }

    #[test]
    fn validate_sequence_examples() {
        let cat = general_catalog();
        let c = SequenceConstraints::fixed_length(3, "goal_clarification", "integration");

        let ok = OperationSequence::from_ids(["goal_clarification", "decomposition", "integration"]);
        assert!(validate_sequence(cat, &ok, &c).is_valid());

        let missing_first = OperationSequence::from_ids(["decomposition", "integration"]);
        let report = validate_sequence(
            cat,
            &missing_first,
            &SequenceConstraints {
                first_op: Some("goal_clarification".into()),
                ..Default::default()
            },
        );
        assert_eq!(report.violations.len(), 1);
        assert!(matches!(report.violations[0], ConstraintViolation::FirstOp { .. }));

        let repeated = OperationSequence::from_ids([
            "goal_clarification",
            "decomposition",
            "decomposition",
            "integration",
        ]);
        let report = validate_sequence(cat, &repeated, &SequenceConstraints::default());
        assert_eq!(
            report.violations,
            vec![ConstraintViolation::Repetition { op_id: "decomposition".into() }]
        );
    }

    #[test]
    fn validate_sequence_flags_unknown_ops_and_lengths() {
        let cat = general_catalog();
        let seq = OperationSequence::from_ids(["goal_clarification", "nonsense"]);
        let report = validate_sequence(
            cat,
            &seq,
            &SequenceConstraints {
                length_k: Some(3),
                max_length: Some(1),
                ..Default::default()
            },
        );
        let kinds: Vec<_> = report
            .violations
            .iter()
            .map(|v| match v {
                ConstraintViolation::UnknownOp { .. } => "unknown",
                ConstraintViolation::Length { .. } => "length",
                ConstraintViolation::MaxLength { .. } => "max",
                _ => "other",
            })
            .collect();
        assert_eq!(kinds, ["unknown", "length", "max"]);
    }

    #[test]
    fn constraints_well_formedness() {
        let cat = general_catalog();
        let bad = SequenceConstraints {
            length_k: Some(5),
            max_length: Some(3),
            ..Default::default()
        };
        assert!(bad.check_well_formed(cat).is_err());
        let unknown_endpoint = SequenceConstraints {
            first_op: Some("reasoning".into()),
            ..Default::default()
        };
        assert!(unknown_endpoint.check_well_formed(cat).is_err());
        assert!(SequenceConstraints::fixed_length(5, "goal_clarification", "integration")
            .check_well_formed(cat)
            .is_ok());
    }

    #[test]
    fn derived_abbreviations_avoid_collisions() {
        let mut taken = BTreeSet::new();
        taken.insert("LG".to_string());
        assert_eq!(derive_abbreviation("List the Given Information", &taken), "LI");
        taken.insert("LI".to_string());
        assert_eq!(derive_abbreviation("List the Given Information", &taken), "LG2");
    }

    #[test]
    fn catalog_file_round_trip_and_errors() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalogs.tsv");
        std::fs::write(
            &path,
            "# custom domain\n\
             poetry\t2\tsecond\tSecond Step\t-\tDo the second thing.\n\
             poetry\t1\tfirst\tFirst Step\tFS\tDo the first thing.\n",
        )
        .unwrap();
        let catalogs = load_catalog_file(&path).unwrap();
        assert_eq!(catalogs.len(), 1);
        let cat = &catalogs[0];
        assert_eq!(*cat.domain(), DomainId::Custom("poetry".into()));
        assert_eq!(cat.operations()[0].id, "first");
        assert_eq!(cat.operations()[1].id, "second");
        assert_eq!(cat.operations()[1].abbreviation, "SS");

        let bad = dir.path().join("bad.tsv");
        std::fs::write(&bad, "poetry\t1\tonly\tOnly Step\tOS\n").unwrap();
        assert!(matches!(
            load_catalog_file(&bad),
            Err(CatalogError::FileFormat { line: 1, .. })
        ));

        let gap = dir.path().join("gap.tsv");
        std::fs::write(&gap, "poetry\t2\tsecond\tSecond Step\tSS\tDo it.\n").unwrap();
        assert!(matches!(load_catalog_file(&gap), Err(CatalogError::FileFormat { .. })));
    }

    #[test]
    fn registry_shadows_builtins_and_falls_back() {
        let mut reg = CatalogRegistry::new();
        assert_eq!(reg.resolve(&DomainId::Math).unwrap().len(), 9);
        let replacement = OperationCatalog::new(
            DomainId::Math,
            vec![CognitiveOperation {
                id: "solo".into(),
                canonical_name: "Solo".into(),
                abbreviation: "SO".into(),
                description: "Only op.".into(),
                general_parent: None,
            }],
        )
        .unwrap();
        reg.add(replacement);
        assert_eq!(reg.resolve(&DomainId::Math).unwrap().len(), 1);
        assert!(reg.resolve(&DomainId::Custom("poetry".into())).is_err());
    }
}
