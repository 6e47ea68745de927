//! Depth of the functions attached to a vertex and a parabolic subset.

use num_rational::Ratio;
use std::collections::BTreeMap;

use crate::diagrams::AffineDiagram;
use crate::error::DepthError;

pub type Rational = Ratio<u64>;

#[derive(Debug, Clone)]
pub struct DepthQuery {
    pub diagram: AffineDiagram,
    pub vertex: String,
    pub parabolic: Vec<String>,
}

impl DepthQuery {
    pub fn new<S: AsRef<str>>(diagram: AffineDiagram, vertex: &str, parabolic: &[S]) -> Self {
        DepthQuery {
            diagram,
            vertex: vertex.to_string(),
            parabolic: parabolic.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    /// Indices of parabolic ∪ {vertex}, deduplicated.
    fn support(&self) -> Result<Vec<usize>, DepthError> {
        let v = self.diagram.index_of(&self.vertex)?;
        let mut idx = self.diagram.indices_of(&self.parabolic)?;
        if idx.contains(&v) {
            return Err(DepthError::VertexInParabolic(self.vertex.clone()));
        }
        idx.push(v);
        idx.sort_unstable();
        idx.dedup();
        Ok(idx)
    }
}

/// r = 1 / Σ d(α) over parabolic ∪ {vertex}.
pub fn depth_r(qr: &DepthQuery) -> Result<Rational, DepthError> {
    let sum: u64 = qr.support()?.iter().map(|&i| qr.diagram.mark(i)).sum();
    Ok(Rational::new(1, sum))
}

/// Values α(x) of the affine roots at the point x: r on the support, 0
/// elsewhere.
pub fn depth_point(qr: &DepthQuery) -> Result<BTreeMap<String, Rational>, DepthError> {
    let r = depth_r(qr)?;
    let support = qr.support()?;
    Ok(qr
        .diagram
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), if support.contains(&i) { r } else { Rational::from_integer(0) }))
        .collect())
}

/// Formats a rational as "p/q".
pub fn fmt_rational(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
