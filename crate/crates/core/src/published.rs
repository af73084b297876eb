//! Census tables as printed, misprints included. Row `g` lists counts for
//! multiplicities `2..=g+1` followed by the printed row total.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedRow {
    pub g: u64,
    /// Counts for `m = 2, 3, ...`.
    pub counts: &'static [u64],
    pub total: u64,
}

impl PublishedRow {
    pub fn count(&self, m: u64) -> Option<u64> {
        m.checked_sub(2).and_then(|i| self.counts.get(i as usize)).copied()
    }

    pub fn cell_sum(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Numerical semigroups by genus and multiplicity, `g = 2..=15`.
pub const ALL_BY_GENUS: &[PublishedRow] = &[
    PublishedRow { g: 2, counts: &[1, 1], total: 2 },
    PublishedRow { g: 3, counts: &[1, 2, 1], total: 4 },
    PublishedRow { g: 4, counts: &[1, 2, 3, 1], total: 7 },
    PublishedRow { g: 5, counts: &[1, 2, 4, 4, 1], total: 12 },
    PublishedRow { g: 6, counts: &[1, 3, 6, 7, 5, 1], total: 33 },
    PublishedRow { g: 7, counts: &[1, 3, 7, 10, 11, 6, 1], total: 39 },
    PublishedRow { g: 8, counts: &[1, 3, 9, 13, 17, 16, 7, 1], total: 67 },
    PublishedRow { g: 9, counts: &[1, 4, 11, 16, 27, 28, 22, 8, 1], total: 118 },
    PublishedRow { g: 10, counts: &[1, 4, 13, 22, 37, 44, 44, 29, 9, 1], total: 204 },
    PublishedRow { g: 11, counts: &[1, 4, 15, 24, 49, 64, 72, 66, 37, 10, 1], total: 343 },
    PublishedRow { g: 12, counts: &[1, 5, 18, 32, 66, 85, 116, 116, 95, 46, 11, 1], total: 592 },
    PublishedRow { g: 13, counts: &[1, 5, 20, 35, 85, 112, 172, 188, 182, 132, 56, 12, 1], total: 1001 },
    PublishedRow { g: 14, counts: &[1, 5, 23, 43, 106, 148, 239, 288, 304, 277, 178, 67, 13, 1], total: 1693 },
    PublishedRow { g: 15, counts: &[1, 6, 26, 51, 133, 191, 325, 409, 492, 486, 409, 234, 79, 14, 1], total: 2857 },
];

/// MED semigroups by genus and multiplicity, `g = 1..=15`.
pub const MED_BY_GENUS: &[PublishedRow] = &[
    PublishedRow { g: 1, counts: &[1], total: 1 },
    PublishedRow { g: 2, counts: &[1, 1], total: 2 },
    PublishedRow { g: 3, counts: &[1, 1, 1], total: 3 },
    PublishedRow { g: 4, counts: &[1, 1, 1, 1], total: 4 },
    PublishedRow { g: 5, counts: &[1, 2, 2, 1, 1], total: 7 },
    PublishedRow { g: 6, counts: &[1, 2, 3, 2, 1, 1], total: 10 },
    PublishedRow { g: 7, counts: &[1, 2, 4, 2, 2, 1, 1], total: 13 },
    PublishedRow { g: 8, counts: &[1, 3, 5, 4, 4, 2, 1, 1], total: 21 },
    PublishedRow { g: 9, counts: &[1, 3, 7, 5, 6, 4, 2, 1, 1], total: 30 },
    PublishedRow { g: 10, counts: &[1, 3, 8, 8, 9, 4, 4, 2, 1, 1], total: 41 },
    PublishedRow { g: 11, counts: &[1, 4, 10, 10, 14, 7, 7, 4, 2, 1, 1], total: 61 },
    PublishedRow { g: 12, counts: &[1, 4, 12, 13, 19, 12, 10, 7, 4, 2, 1, 1], total: 86 },
    PublishedRow { g: 13, counts: &[1, 4, 14, 16, 25, 18, 17, 9, 7, 4, 2, 1, 1], total: 119 },
    PublishedRow { g: 14, counts: &[1, 5, 16, 22, 35, 25, 26, 16, 12, 7, 4, 2, 1, 1], total: 173 },
    PublishedRow { g: 15, counts: &[1, 5, 19, 24, 45, 37, 39, 24, 47, 27, 15, 4, 2, 1, 1], total: 291 },
];

pub fn row(table: &'static [PublishedRow], g: u64) -> Option<&'static PublishedRow> {
    table.iter().find(|r| r.g == g)
}
