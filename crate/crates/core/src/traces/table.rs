use super::index::{IndexBox, TraceIndex};
use crate::algebra::Coefficient;
use crate::error::{Error, Result};

/// Dense map from every index `0 <= v <= bound` to a coefficient.
///
/// Used both for traces `T_v` and for the multi-Schur values `P_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceTable {
    layout: IndexBox,
    values: Vec<Coefficient>,
}

impl TraceTable {
    pub fn from_fn(bound: TraceIndex, mut f: impl FnMut(&TraceIndex) -> Coefficient) -> Self {
        let layout = IndexBox::new(bound);
        let values = layout.indices().map(|k| f(&k)).collect();
        TraceTable { layout, values }
    }

    pub(crate) fn from_values(layout: IndexBox, values: Vec<Coefficient>) -> Self {
        assert_eq!(layout.size(), values.len());
        TraceTable { layout, values }
    }

    pub fn bound(&self) -> &TraceIndex {
        self.layout.bound()
    }

    pub fn layout(&self) -> &IndexBox {
        &self.layout
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, k: &[u32]) -> Option<&Coefficient> {
        self.layout.offset(k).map(|o| &self.values[o])
    }

    pub fn try_get(&self, k: &[u32]) -> Result<&Coefficient> {
        self.get(k).ok_or_else(|| Error::MissingEntry(k.to_vec()))
    }

    /// Entries in row-major index order.
    pub fn iter(&self) -> impl Iterator<Item = (TraceIndex, &Coefficient)> + '_ {
        self.layout.indices().zip(self.values.iter())
    }

    pub fn nonzero(&self) -> Vec<(TraceIndex, &Coefficient)> {
        self.iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}
