//! Identifiers shared by the Y enumerators and the endoscopic registry.

pub fn principal() -> String {
    "principal".to_string()
}

pub fn torus(k: u32) -> String {
    format!("torus#{k}")
}

/// A datum attached to the node index `m`, with a variant index for the
/// choice of extension or action.
pub fn orbit(tag: &str, m: u64, variant: u32) -> String {
    format!("{tag}:m={m}#{variant}")
}

/// A datum of an exceptional group, named by the nodes of its orbit.
pub fn nodes(tag: &str, nodes: &str, variant: u32) -> String {
    format!("{tag}:{nodes}#{variant}")
}
