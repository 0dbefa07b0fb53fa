use std::fmt;

/// Multi-index `(k_1, ..., k_n)`; also the exponent of the spectral
/// parameters `λ_1^{k_1} ... λ_n^{k_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceIndex(Vec<u32>);

impl TraceIndex {
    pub fn new(k: Vec<u32>) -> Self {
        TraceIndex(k)
    }

    pub fn zero(n: usize) -> Self {
        TraceIndex(vec![0; n])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&v| v as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &TraceIndex) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Positions with a non-zero entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }
}

impl From<Vec<u32>> for TraceIndex {
    fn from(v: Vec<u32>) -> Self {
        TraceIndex(v)
    }
}

impl fmt::Display for TraceIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The box `{ v : 0 <= v <= bound }` with a dense row-major layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexBox {
    bound: TraceIndex,
    strides: Vec<usize>,
    size: usize,
}

impl IndexBox {
    pub fn new(bound: TraceIndex) -> Self {
        let n = bound.len();
        let mut strides = vec![0; n];
        let mut size = 1usize;
        for i in (0..n).rev() {
            strides[i] = size;
            size = size.saturating_mul(bound.0[i] as usize + 1);
        }
        IndexBox { bound, strides, size }
    }

    /// Number of cells, `Π (bound_i + 1)`; saturates instead of overflowing.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bound(&self) -> &TraceIndex {
        &self.bound
    }

    pub fn offset(&self, k: &[u32]) -> Option<usize> {
        if k.len() != self.bound.len() || k.iter().zip(&self.bound.0).any(|(a, b)| a > b) {
            return None;
        }
        Some(k.iter().zip(&self.strides).map(|(&a, s)| a as usize * s).sum())
    }

    pub fn index_at(&self, mut offset: usize) -> TraceIndex {
        let k = self
            .strides
            .iter()
            .map(|s| {
                let v = offset / s;
                offset %= s;
                v as u32
            })
            .collect();
        TraceIndex(k)
    }

    /// All cells in row-major order.
    pub fn indices(&self) -> impl Iterator<Item = TraceIndex> + '_ {
        (0..self.size).map(|o| self.index_at(o))
    }

    /// All cells ordered by total degree, ties broken lexicographically.
    pub fn graded_indices(&self) -> Vec<TraceIndex> {
        let mut all: Vec<TraceIndex> = self.indices().collect();
        all.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
        all
    }
}
