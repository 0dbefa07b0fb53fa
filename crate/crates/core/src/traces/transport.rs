use crate::error::{Error, Result};

/// Square non-negative integer matrix with prescribed row and column sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransportationMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl TransportationMatrix {
    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        TransportationMatrix { n, entries: rows.concat() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.n).map(|i| self.row(i).iter().map(|&v| v as u64).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j) as u64).sum())
            .collect()
    }
}

/// Every square matrix with the given margins, each exactly once.
///
/// Cells are filled row-major; the last cell of each row and the last row
/// are forced by the margins.
pub fn enumerate_transportation(
    row_sums: &[u64],
    col_sums: &[u64],
) -> Result<Vec<TransportationMatrix>> {
    let rows: u64 = row_sums.iter().sum();
    let cols: u64 = col_sums.iter().sum();
    if row_sums.len() != col_sums.len() || rows != cols {
        return Err(Error::MarginMismatch { rows, cols });
    }
    let n = row_sums.len();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut entries = vec![0u32; n * n];
    let mut col_left: Vec<u64> = col_sums.to_vec();
    fill(0, row_sums[0], n, row_sums, &mut col_left, &mut entries, &mut out);
    Ok(out)
}

fn fill(
    cell: usize,
    row_left: u64,
    n: usize,
    row_sums: &[u64],
    col_left: &mut [u64],
    entries: &mut [u32],
    out: &mut Vec<TransportationMatrix>,
) {
    let (i, j) = (cell / n, cell % n);
    if j == n - 1 {
        // Last cell in the row takes whatever is left.
        if row_left > col_left[j] {
            return;
        }
        entries[cell] = row_left as u32;
        col_left[j] -= row_left;
        if i == n - 1 {
            if col_left.iter().all(|&c| c == 0) {
                out.push(TransportationMatrix { n, entries: entries.to_vec() });
            }
        } else {
            fill(cell + 1, row_sums[i + 1], n, row_sums, col_left, entries, out);
        }
        col_left[j] += row_left;
        return;
    }
    for v in 0..=row_left.min(col_left[j]) {
        entries[cell] = v as u32;
        col_left[j] -= v;
        fill(cell + 1, row_left - v, n, row_sums, col_left, entries, out);
        col_left[j] += v;
    }
}
