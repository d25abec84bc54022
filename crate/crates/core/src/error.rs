use thiserror::Error;

use crate::polygon::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon order must be at least 3, got {0}")]
    OrderTooSmall(usize),

    #[error("no magic {0}-gon exists (odd n)")]
    OddOrder(usize),

    #[error("{0}")]
    Domain(String),

    #[error("labeling is incomplete; missing nodes: {}", format_nodes(.missing))]
    Incomplete { missing: Vec<NodeId> },

    #[error("{mode} search for n = {n} exceeds the configured cap of {cap}; {hint}")]
    CapExceeded {
        mode: &'static str,
        n: usize,
        cap: usize,
        hint: &'static str,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

fn format_nodes(nodes: &[NodeId]) -> String {
    nodes
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
