use std::fmt;

use bbcells::graded::AlgebraError;
use bbcells::hilb::HilbError;
use bbcells::io::IoError;
use bbcells::parse::ParseError;
use bbcells::poly::WeightingError;
use bbcells::truncation::TruncationError;
use bbcells::MonoidError;
use serde::Serialize;

/// Where in the input a failure was detected. Empty fields are omitted.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Location {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

impl Location {
    fn is_empty(&self) -> bool {
        self.file.is_none() && self.field.is_none() && self.index.is_none() && self.offset.is_none() && self.line.is_none()
    }
}

/// A domain error as reported to the user: stable code, message and location.
#[derive(Debug, Serialize)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub location: Option<Box<Location>>,
}

impl CliError {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
            location: None,
        }
    }

    pub fn location_mut(&mut self) -> &mut Location {
        self.location.get_or_insert_with(Default::default)
    }

    pub fn in_file(mut self, path: &str) -> Self {
        self.location_mut().file = Some(path.to_string());
        self
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)?;
        let Some(loc) = self.location.as_deref().filter(|l| !l.is_empty()) else {
            return Ok(());
        };
        let mut parts = vec![];
        if let Some(file) = &loc.file {
            parts.push(file.clone());
        }
        match (&loc.field, loc.index) {
            (Some(field), Some(i)) => parts.push(format!("{field}[{i}]")),
            (Some(field), None) => parts.push(field.clone()),
            _ => {}
        }
        if let Some(o) = loc.offset {
            parts.push(format!("byte {o}"));
        }
        if let (Some(l), Some(c)) = (loc.line, loc.column) {
            parts.push(format!("line {l}, column {c}"));
        }
        write!(f, " (at {})", parts.join(", "))
    }
}

fn parse_code(e: &ParseError) -> &'static str {
    match e {
        ParseError::Syntax { .. } => "syntax_error",
        ParseError::UnknownVariable { .. } => "unknown_variable",
        ParseError::ExponentOverflow { .. } => "exponent_overflow",
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        let mut err = CliError::new(parse_code(&e), e.to_string());
        err.location_mut().offset = Some(e.offset());
        err
    }
}

impl From<MonoidError> for CliError {
    fn from(e: MonoidError) -> Self {
        let code = match e {
            MonoidError::ZeroRank => "zero_rank",
            MonoidError::EmptyGenerators => "empty_generators",
            MonoidError::DimensionMismatch { .. } => "dimension_mismatch",
            MonoidError::MonoidHasUnits => "monoid_has_units",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<WeightingError> for CliError {
    fn from(e: WeightingError) -> Self {
        let code = match e {
            WeightingError::InvalidName(_) => "invalid_variable_name",
            WeightingError::DuplicateName(_) => "duplicate_variable",
            WeightingError::WeightRank { .. } => "weight_rank",
            WeightingError::ZeroRank => "zero_rank",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        let (code, index) = match &e {
            AlgebraError::Monoid(m) => return m.clone().into(),
            AlgebraError::Inhomogeneous { relation, .. } => ("inhomogeneous_relation", Some(*relation)),
            AlgebraError::RelationArity { relation, .. } => ("relation_arity", Some(*relation)),
            AlgebraError::RankMismatch { .. } => ("rank_mismatch", None),
            AlgebraError::NotMinimalPresentation { relation } => ("not_minimal_presentation", Some(*relation)),
        };
        let mut err = CliError::new(code, e.to_string());
        if index.is_some() {
            err.location_mut().field = Some("relations".into());
            err.location_mut().index = index;
        }
        err
    }
}

impl From<TruncationError> for CliError {
    fn from(e: TruncationError) -> Self {
        let code = match &e {
            TruncationError::Monoid(m) => return m.clone().into(),
            TruncationError::RankMismatch { .. } => "rank_mismatch",
            TruncationError::WeightOutsideMonoid { .. } => "weight_outside_monoid",
            TruncationError::InfiniteComponent { .. } => "infinite_component",
            TruncationError::GeneratorArity { .. } => "generator_arity",
            TruncationError::WeightRank { .. } => "weight_rank",
            TruncationError::DegreeOverflow(_) => "degree_overflow",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<HilbError> for CliError {
    fn from(e: HilbError) -> Self {
        let code = match e {
            HilbError::InvalidPartition(_) => "invalid_partition",
            HilbError::ZeroWeight => "zero_weight",
            HilbError::NonGenericWeight { .. } => "non_generic_weight",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Json(j) => {
                let mut err = CliError::new("invalid_json", j.to_string());
                err.location_mut().line = Some(j.line());
                err.location_mut().column = Some(j.column());
                err
            }
            IoError::Parse { field, index, source } => {
                let mut err: CliError = source.into();
                err.location_mut().field = Some(field.into());
                err.location_mut().index = Some(index);
                err
            }
            IoError::NotAMonomial { index } => {
                let mut err = CliError::new("not_a_monomial", format!("monomial_generators[{index}] is not a single monomial"));
                err.location_mut().field = Some("monomial_generators".into());
                err.location_mut().index = Some(index);
                err
            }
            IoError::Weighting(e) => e.into(),
            IoError::Monoid(e) => e.into(),
            IoError::Algebra(e) => e.into(),
            IoError::Truncation(e) => e.into(),
        }
    }
}
