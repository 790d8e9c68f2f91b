//! Error document shared by every command: a stable machine-readable code,
//! a human message, and the process exit status.

use orbitwist_core::bundle::BundleError;
use orbitwist_core::curve::CurveError;
use orbitwist_core::group::GroupError;
use orbitwist_core::gw::GwError;
use orbitwist_core::homcount::HomcountError;

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub exit: i32,
}

impl CliError {
    pub fn new(code: &str, exit: i32, message: impl Into<String>) -> CliError {
        CliError { code: code.into(), message: message.into(), exit }
    }

    pub fn io(path: &str, err: impl std::fmt::Display) -> CliError {
        CliError::new("parse/io", EXIT_PARSE, format!("{path}: {err}"))
    }

    pub fn json(path: &str, err: impl std::fmt::Display) -> CliError {
        CliError::new("parse/json", EXIT_PARSE, format!("{path}: {err}"))
    }

    pub fn flag(message: impl Into<String>) -> CliError {
        CliError::new("parse/flag", EXIT_PARSE, message)
    }

    pub fn schema(kind: &str, message: impl std::fmt::Display) -> CliError {
        CliError::new(&format!("schema/{kind}"), EXIT_PARSE, message.to_string())
    }

    pub fn domain(kind: &str, message: impl std::fmt::Display) -> CliError {
        CliError::new(&format!("domain/{kind}"), EXIT_DOMAIN, message.to_string())
    }

    pub fn from_group(err: GroupError) -> CliError {
        match err {
            GroupError::OrderCapExceeded { .. } => {
                CliError::new("budget/order-cap", EXIT_BUDGET, err.to_string())
            }
            _ => CliError::schema("group", err),
        }
    }

    pub fn from_curve(err: CurveError) -> CliError {
        CliError::schema("curve", err)
    }

    pub fn from_bundle_schema(err: BundleError) -> CliError {
        CliError::schema("bundle", err)
    }

    pub fn from_bundle_domain(err: BundleError) -> CliError {
        match err {
            BundleError::PointMismatch(_) => CliError::domain("mismatch", err),
            _ => CliError::domain("rep", err),
        }
    }

    pub fn from_homcount(err: HomcountError) -> CliError {
        match err {
            HomcountError::BudgetExceeded { .. } => {
                CliError::new("budget/steps", EXIT_BUDGET, err.to_string())
            }
            HomcountError::CapExceeded { .. } => {
                CliError::new("budget/enumeration", EXIT_BUDGET, err.to_string())
            }
            HomcountError::CountOverflow => CliError::domain("overflow", err),
            HomcountError::NonIntegralResult { .. } => CliError::domain("frobenius", err),
            HomcountError::MissingCharacterTable | HomcountError::UnsupportedConstraint => {
                CliError::domain("constraint", err)
            }
            HomcountError::BadCharacterTable(_) => CliError::schema("chars", err),
        }
    }

    pub fn from_gw(err: GwError) -> CliError {
        match err {
            GwError::ArityMismatch(_) => CliError::domain("arity", err),
            GwError::UnknownClass(_) => CliError::domain("classes", err),
            GwError::InvalidInput(_) => CliError::domain("input", err),
            GwError::Count(inner) => CliError::from_homcount(inner),
        }
    }
}
