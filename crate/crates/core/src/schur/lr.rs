//! Littlewood–Richardson coefficients by enumeration of LR tableaux.
//!
//! A tableau of shape λ/μ and content ν is built letter by letter: the boxes
//! holding letter `i` form a horizontal strip added to the current shape, and
//! the reverse reading word (right to left, top to bottom) stays a lattice
//! word. Each accepted sequence of strips is one LR tableau.

use std::collections::BTreeMap;

use super::partition::Partition;

/// `c^λ_{μν}` for every λ with at most `max_rows` rows.
pub fn lr_coefficients(mu: &Partition, nu: &Partition, max_rows: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if max_rows == 0 || mu.len() > max_rows || nu.len() > max_rows {
        return out;
    }
    let shape: Vec<u32> = (0..max_rows).map(|i| mu.part(i)).collect();
    let mut search = Search {
        content: nu.parts(),
        out: &mut out,
    };
    search.letter(0, &shape, &vec![0; max_rows]);
    out
}

struct Search<'a> {
    content: &'a [u32],
    out: &'a mut BTreeMap<Partition, u64>,
}

impl Search<'_> {
    /// Places all copies of `letter`; `prev` counts the previous letter per row.
    fn letter(&mut self, letter: usize, shape: &[u32], prev: &[u32]) {
        if letter == self.content.len() {
            *self.out.entry(Partition::from_sorted(shape.to_vec())).or_default() += 1;
            return;
        }
        let mut strip = vec![0u32; shape.len()];
        self.strip(letter, shape, prev, 0, self.content[letter], 0, &mut strip);
    }

    /// Distributes `remaining` boxes of `letter` over rows `row..`.
    /// `slack` is (#letter-1 above) - (#letter above), the lattice budget.
    #[allow(clippy::too_many_arguments)]
    fn strip(
        &mut self,
        letter: usize,
        shape: &[u32],
        prev: &[u32],
        row: usize,
        remaining: u32,
        slack: u32,
        strip: &mut Vec<u32>,
    ) {
        if remaining == 0 {
            let next: Vec<u32> = shape.iter().zip(strip.iter()).map(|(s, a)| s + a).collect();
            let counts = strip.clone();
            self.letter(letter + 1, &next, &counts);
            return;
        }
        if row == shape.len() {
            return;
        }
        // Horizontal strip: the row may not grow past the old row above it.
        let room = if row == 0 {
            remaining
        } else {
            shape[row - 1] - shape[row]
        };
        let lattice = if letter == 0 { remaining } else { slack };
        let max_here = room.min(lattice).min(remaining);
        for add in (0..=max_here).rev() {
            strip[row] = add;
            let next_slack = if letter == 0 { 0 } else { slack - add + prev[row] };
            self.strip(letter, shape, prev, row + 1, remaining - add, next_slack, strip);
        }
        strip[row] = 0;
    }
}
