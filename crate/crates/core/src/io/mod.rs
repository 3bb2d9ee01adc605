//! Input documents, report rendering and the built-in catalog.

pub mod catalog;
pub mod format;
pub mod report;

pub use catalog::{catalog, CatalogEntry, CatalogRun, Expectation};
pub use format::{parse, serialize_datum, InputDocument, ParseError};
pub use report::{serialize_report, ReportDocument, ReportFormat};
