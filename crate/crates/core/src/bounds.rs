/// Degree and word-length bounds for enumeration and identity checks.
///
/// Every enumeration and every exhaustive check respects both bounds, and
/// every report states the region that was actually verified. Truncation is
/// never silent: operations that would lose a nonzero term past a bound fail
/// with `Error::TruncationOverflow` instead of dropping it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationBounds {
    pub max_degree: u32,
    pub max_length: u32,
}

impl TruncationBounds {
    pub fn new(max_degree: u32, max_length: u32) -> Self {
        Self {
            max_degree,
            max_length,
        }
    }
}

impl std::fmt::Display for TruncationBounds {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "degree<={}, length<={}",
            self.max_degree, self.max_length
        )
    }
}
