//! Littlewood–Richardson coefficients by enumerating LR tableaux.

use crate::partition::Partition;

/// `c^ν_{λμ}`: the number of semistandard skew tableaux of shape `ν/λ` and
/// content `μ` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    // Reading order: rows top to bottom, each row right to left.
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut search = Search {
        lambda,
        nu,
        content: mu.parts(),
        cells: &cells,
        filling: vec![vec![0; nu.first()]; nu.len()],
        counts: vec![0; mu.len() + 1],
    };
    search.count(0)
}

struct Search<'a> {
    lambda: &'a Partition,
    nu: &'a Partition,
    content: &'a [usize],
    cells: &'a [(usize, usize)],
    filling: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl Search<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        // Rows weakly increase, so the right neighbour bounds from above.
        let upper = if c + 1 < self.nu.part(r) {
            self.filling[r][c + 1]
        } else {
            self.content.len()
        };
        // Columns strictly increase, so the cell above bounds from below.
        let lower = if r > 0 && c >= self.lambda.part(r - 1) {
            self.filling[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lower..=upper {
            if self.counts[v] >= self.content[v - 1] {
                continue;
            }
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.filling[r][c] = v;
            total += self.count(idx + 1);
            self.counts[v] -= 1;
        }
        self.filling[r][c] = 0;
        total
    }
}
