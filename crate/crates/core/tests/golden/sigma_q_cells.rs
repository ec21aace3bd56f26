// One entry per cell of the sigma_Q tables.
// (type, node, check_phase, const_phase, base_phase, base_q6, k, root)
pub type Cell = (&'static str, usize, bool, i64, i64, i64, i64, &'static [i64]);

pub const CELLS: &[Cell] = &[
    ("A4-1", 1, true, 0, 12, 6, -6, &[0, 0, 0, 1]),
    ("A4-1", 1, true, 0, 12, 6, -4, &[0, 0, 1, 0]),
    ("A4-1", 1, true, 0, 12, 6, -2, &[0, 1, 0, 0]),
    ("A4-1", 1, true, 0, 12, 6, 0, &[1, 0, 0, 0]),
    ("A4-1", 2, true, 0, 12, 6, -5, &[0, 0, 1, 1]),
    ("A4-1", 2, true, 0, 12, 6, -3, &[0, 1, 1, 0]),
    ("A4-1", 2, true, 0, 12, 6, -1, &[1, 1, 0, 0]),
    ("A4-1", 3, true, 0, 12, 6, -4, &[0, 1, 1, 1]),
    ("A4-1", 3, true, 0, 12, 6, -2, &[1, 1, 1, 0]),
    ("A4-1", 4, true, 0, 12, 6, -3, &[1, 1, 1, 1]),
    ("B3-1", 1, true, 0, 0, 3, -5, &[0, 0, 1, 1, 1]),
    ("B3-1", 1, true, 0, 0, 3, -3, &[1, 1, 1, 1, 0]),
    ("B3-1", 1, true, 0, 0, 3, -1, &[0, 1, 0, 0, 0]),
    ("B3-1", 1, true, 0, 0, 3, 1, &[0, 0, 0, 0, 1]),
    ("B3-1", 1, true, 0, 0, 3, 3, &[1, 0, 0, 0, 0]),
    ("B3-1", 2, true, 12, 0, 3, -7, &[0, 0, 1, 1, 0]),
    ("B3-1", 2, true, 12, 0, 3, -5, &[0, 1, 1, 1, 0]),
    ("B3-1", 2, true, 12, 0, 3, -3, &[0, 1, 1, 1, 1]),
    ("B3-1", 2, true, 12, 0, 3, -1, &[1, 1, 1, 1, 1]),
    ("B3-1", 2, true, 12, 0, 3, 1, &[1, 1, 0, 0, 0]),
    ("B3-1", 3, true, 0, 0, 3, -8, &[0, 0, 1, 0, 0]),
    ("B3-1", 3, true, 0, 0, 3, -6, &[0, 0, 0, 1, 0]),
    ("B3-1", 3, true, 0, 0, 3, -4, &[0, 1, 1, 0, 0]),
    ("B3-1", 3, true, 0, 0, 3, -2, &[0, 0, 0, 1, 1]),
    ("B3-1", 3, true, 0, 0, 3, 0, &[1, 1, 1, 0, 0]),
    ("C4-1", 1, true, 0, 12, 3, -8, &[1, 1, 1, 0, 1]),
    ("C4-1", 1, true, 0, 12, 3, -6, &[0, 0, 0, 1, 0]),
    ("C4-1", 1, true, 0, 12, 3, -4, &[0, 0, 1, 0, 0]),
    ("C4-1", 1, true, 0, 12, 3, -2, &[0, 1, 0, 0, 0]),
    ("C4-1", 1, true, 0, 12, 3, 0, &[1, 0, 0, 0, 0]),
    ("C4-1", 2, true, 0, 12, 3, -9, &[0, 1, 1, 0, 1]),
    ("C4-1", 2, true, 0, 12, 3, -7, &[1, 1, 1, 1, 1]),
    ("C4-1", 2, true, 0, 12, 3, -5, &[0, 0, 1, 1, 0]),
    ("C4-1", 2, true, 0, 12, 3, -3, &[0, 1, 1, 0, 0]),
    ("C4-1", 2, true, 0, 12, 3, -1, &[1, 1, 0, 0, 0]),
    ("C4-1", 3, true, 0, 12, 3, -10, &[0, 0, 1, 0, 1]),
    ("C4-1", 3, true, 0, 12, 3, -8, &[0, 1, 1, 1, 1]),
    ("C4-1", 3, true, 0, 12, 3, -6, &[1, 1, 2, 1, 1]),
    ("C4-1", 3, true, 0, 12, 3, -4, &[0, 1, 1, 1, 0]),
    ("C4-1", 3, true, 0, 12, 3, -2, &[1, 1, 1, 0, 0]),
    ("C4-1", 4, true, 0, 12, 3, -11, &[0, 0, 0, 0, 1]),
    ("C4-1", 4, true, 0, 12, 3, -9, &[0, 0, 1, 1, 1]),
    ("C4-1", 4, true, 0, 12, 3, -7, &[0, 1, 2, 1, 1]),
    ("C4-1", 4, true, 0, 12, 3, -5, &[1, 2, 2, 1, 1]),
    ("C4-1", 4, true, 0, 12, 3, -3, &[1, 1, 1, 1, 0]),
    ("D5-1", 1, true, 0, 12, 6, -6, &[1, 1, 1, 1, 1]),
    ("D5-1", 1, true, 0, 12, 6, -4, &[0, 0, 1, 0, 0]),
    ("D5-1", 1, true, 0, 12, 6, -2, &[0, 1, 0, 0, 0]),
    ("D5-1", 1, true, 0, 12, 6, 0, &[1, 0, 0, 0, 0]),
    ("D5-1", 2, true, 0, 12, 6, -7, &[0, 1, 1, 1, 1]),
    ("D5-1", 2, true, 0, 12, 6, -5, &[1, 1, 2, 1, 1]),
    ("D5-1", 2, true, 0, 12, 6, -3, &[0, 1, 1, 0, 0]),
    ("D5-1", 2, true, 0, 12, 6, -1, &[1, 1, 0, 0, 0]),
    ("D5-1", 3, true, 0, 12, 6, -8, &[0, 0, 1, 1, 1]),
    ("D5-1", 3, true, 0, 12, 6, -6, &[0, 1, 2, 1, 1]),
    ("D5-1", 3, true, 0, 12, 6, -4, &[1, 2, 2, 1, 1]),
    ("D5-1", 3, true, 0, 12, 6, -2, &[1, 1, 1, 0, 0]),
    ("D5-1", 4, true, 0, 12, 6, -9, &[0, 0, 0, 0, 1]),
    ("D5-1", 4, true, 0, 12, 6, -7, &[0, 0, 1, 1, 0]),
    ("D5-1", 4, true, 0, 12, 6, -5, &[0, 1, 1, 0, 1]),
    ("D5-1", 4, true, 0, 12, 6, -3, &[1, 1, 1, 1, 0]),
    ("D5-1", 5, true, 0, 12, 6, -9, &[0, 0, 0, 1, 0]),
    ("D5-1", 5, true, 0, 12, 6, -7, &[0, 0, 1, 0, 1]),
    ("D5-1", 5, true, 0, 12, 6, -5, &[0, 1, 1, 1, 0]),
    ("D5-1", 5, true, 0, 12, 6, -3, &[1, 1, 1, 0, 1]),
    ("A4-2", 1, true, 0, 12, 6, -6, &[0, 0, 0, 1]),
    ("A4-2", 1, true, 0, 12, 6, -4, &[0, 0, 1, 0]),
    ("A4-2", 1, true, 0, 12, 6, -2, &[0, 1, 0, 0]),
    ("A4-2", 1, true, 0, 12, 6, 0, &[1, 0, 0, 0]),
    ("A4-2", 2, true, 0, 12, 6, -5, &[0, 0, 1, 1]),
    ("A4-2", 2, true, 0, 12, 6, -3, &[0, 1, 1, 0]),
    ("A4-2", 2, true, 0, 12, 6, -1, &[1, 1, 0, 0]),
    ("A4-2", 2, false, 0, 12, 6, -4, &[0, 1, 1, 1]),
    ("A4-2", 2, false, 0, 12, 6, -2, &[1, 1, 1, 0]),
    ("A4-2", 1, false, 0, 12, 6, -3, &[1, 1, 1, 1]),
    ("A5-2", 1, true, 0, 12, 6, -8, &[0, 0, 0, 0, 1]),
    ("A5-2", 1, true, 0, 12, 6, -6, &[0, 0, 0, 1, 0]),
    ("A5-2", 1, true, 0, 12, 6, -4, &[0, 0, 1, 0, 0]),
    ("A5-2", 1, true, 0, 12, 6, -2, &[0, 1, 0, 0, 0]),
    ("A5-2", 1, true, 0, 12, 6, 0, &[1, 0, 0, 0, 0]),
    ("A5-2", 2, true, 0, 12, 6, -7, &[0, 0, 0, 1, 1]),
    ("A5-2", 2, true, 0, 12, 6, -5, &[0, 0, 1, 1, 0]),
    ("A5-2", 2, true, 0, 12, 6, -3, &[0, 1, 1, 0, 0]),
    ("A5-2", 2, true, 0, 12, 6, -1, &[1, 1, 0, 0, 0]),
    ("A5-2", 3, true, 0, 12, 6, -6, &[0, 0, 1, 1, 1]),
    ("A5-2", 3, true, 0, 12, 6, -4, &[0, 1, 1, 1, 0]),
    ("A5-2", 3, true, 0, 12, 6, -2, &[1, 1, 1, 0, 0]),
    ("A5-2", 2, true, 12, 12, 6, -5, &[0, 1, 1, 1, 1]),
    ("A5-2", 2, true, 12, 12, 6, -3, &[1, 1, 1, 1, 0]),
    ("A5-2", 1, true, 12, 12, 6, -4, &[1, 1, 1, 1, 1]),
    ("D5-2", 1, true, 0, 12, 6, -6, &[1, 1, 1, 1, 1]),
    ("D5-2", 1, true, 0, 12, 6, -4, &[0, 0, 1, 0, 0]),
    ("D5-2", 1, true, 0, 12, 6, -2, &[0, 1, 0, 0, 0]),
    ("D5-2", 1, true, 0, 12, 6, 0, &[1, 0, 0, 0, 0]),
    ("D5-2", 2, true, 18, 12, 6, -7, &[0, 1, 1, 1, 1]),
    ("D5-2", 2, true, 18, 12, 6, -5, &[1, 1, 2, 1, 1]),
    ("D5-2", 2, true, 18, 12, 6, -3, &[0, 1, 1, 0, 0]),
    ("D5-2", 2, true, 18, 12, 6, -1, &[1, 1, 0, 0, 0]),
    ("D5-2", 3, true, 12, 12, 6, -8, &[0, 0, 1, 1, 1]),
    ("D5-2", 3, true, 12, 12, 6, -6, &[0, 1, 2, 1, 1]),
    ("D5-2", 3, true, 12, 12, 6, -4, &[1, 2, 2, 1, 1]),
    ("D5-2", 3, true, 12, 12, 6, -2, &[1, 1, 1, 0, 0]),
    ("D5-2", 4, true, 0, 12, 6, -9, &[0, 0, 0, 0, 1]),
    ("D5-2", 4, true, 0, 12, 6, -7, &[0, 0, 1, 1, 0]),
    ("D5-2", 4, true, 0, 12, 6, -5, &[0, 1, 1, 0, 1]),
    ("D5-2", 4, true, 0, 12, 6, -3, &[1, 1, 1, 1, 0]),
    ("D5-2", 4, true, 12, 12, 6, -9, &[0, 0, 0, 1, 0]),
    ("D5-2", 4, true, 12, 12, 6, -7, &[0, 0, 1, 0, 1]),
    ("D5-2", 4, true, 12, 12, 6, -5, &[0, 1, 1, 1, 0]),
    ("D5-2", 4, true, 12, 12, 6, -3, &[1, 1, 1, 0, 1]),
    ("E6-1", 1, true, 0, 12, 6, -14, &[0, 0, 0, 0, 0, 1]),
    ("E6-1", 1, true, 0, 12, 6, -12, &[0, 0, 0, 0, 1, 0]),
    ("E6-1", 1, true, 0, 12, 6, -10, &[0, 0, 0, 1, 0, 0]),
    ("E6-1", 1, true, 0, 12, 6, -8, &[0, 1, 1, 1, 1, 1]),
    ("E6-1", 1, true, 0, 12, 6, -6, &[1, 0, 1, 1, 1, 0]),
    ("E6-1", 1, true, 0, 12, 6, -4, &[0, 1, 0, 1, 0, 0]),
    ("E6-1", 1, true, 0, 12, 6, -2, &[0, 0, 1, 0, 0, 0]),
    ("E6-1", 1, true, 0, 12, 6, 0, &[1, 0, 0, 0, 0, 0]),
    ("E6-1", 3, true, 0, 12, 6, -13, &[0, 0, 0, 0, 1, 1]),
    ("E6-1", 3, true, 0, 12, 6, -11, &[0, 0, 0, 1, 1, 0]),
    ("E6-1", 3, true, 0, 12, 6, -9, &[0, 1, 1, 2, 1, 1]),
    ("E6-1", 3, true, 0, 12, 6, -7, &[1, 1, 2, 2, 2, 1]),
    ("E6-1", 3, true, 0, 12, 6, -5, &[1, 1, 1, 2, 1, 0]),
    ("E6-1", 3, true, 0, 12, 6, -3, &[0, 1, 1, 1, 0, 0]),
    ("E6-1", 3, true, 0, 12, 6, -1, &[1, 0, 1, 0, 0, 0]),
    ("E6-1", 4, true, 0, 12, 6, -12, &[0, 0, 0, 1, 1, 1]),
    ("E6-1", 4, true, 0, 12, 6, -10, &[0, 1, 1, 2, 2, 1]),
    ("E6-1", 4, true, 0, 12, 6, -8, &[1, 1, 2, 3, 2, 1]),
    ("E6-1", 4, true, 0, 12, 6, -6, &[1, 2, 2, 3, 2, 1]),
    ("E6-1", 4, true, 0, 12, 6, -4, &[1, 1, 2, 2, 1, 0]),
    ("E6-1", 4, true, 0, 12, 6, -2, &[1, 1, 1, 1, 0, 0]),
    ("E6-1", 2, true, 0, 12, 6, -11, &[0, 1, 0, 1, 1, 1]),
    ("E6-1", 2, true, 0, 12, 6, -9, &[0, 0, 1, 1, 1, 0]),
    ("E6-1", 2, true, 0, 12, 6, -7, &[1, 1, 1, 2, 1, 1]),
    ("E6-1", 2, true, 0, 12, 6, -5, &[0, 1, 1, 1, 1, 0]),
    ("E6-1", 2, true, 0, 12, 6, -3, &[1, 0, 1, 1, 0, 0]),
    ("E6-1", 2, true, 0, 12, 6, -1, &[0, 1, 0, 0, 0, 0]),
    ("E6-1", 5, true, 0, 12, 6, -11, &[0, 0, 1, 1, 1, 1]),
    ("E6-1", 5, true, 0, 12, 6, -9, &[1, 1, 1, 2, 2, 1]),
    ("E6-1", 5, true, 0, 12, 6, -7, &[0, 1, 1, 2, 1, 0]),
    ("E6-1", 5, true, 0, 12, 6, -5, &[1, 1, 2, 2, 1, 1]),
    ("E6-1", 5, true, 0, 12, 6, -3, &[1, 1, 1, 1, 1, 0]),
    ("E6-1", 6, true, 0, 12, 6, -10, &[1, 0, 1, 1, 1, 1]),
    ("E6-1", 6, true, 0, 12, 6, -8, &[0, 1, 0, 1, 1, 0]),
    ("E6-1", 6, true, 0, 12, 6, -6, &[0, 0, 1, 1, 0, 0]),
    ("E6-1", 6, true, 0, 12, 6, -4, &[1, 1, 1, 1, 1, 1]),
    ("E7-1", 1, true, 0, 12, 6, -16, &[1, 0, 1, 1, 1, 1, 1]),
    ("E7-1", 1, true, 0, 12, 6, -14, &[0, 1, 0, 1, 1, 1, 0]),
    ("E7-1", 1, true, 0, 12, 6, -12, &[0, 0, 1, 1, 1, 0, 0]),
    ("E7-1", 1, true, 0, 12, 6, -10, &[1, 1, 1, 2, 1, 1, 1]),
    ("E7-1", 1, true, 0, 12, 6, -8, &[0, 1, 1, 1, 1, 1, 0]),
    ("E7-1", 1, true, 0, 12, 6, -6, &[1, 0, 1, 1, 1, 0, 0]),
    ("E7-1", 1, true, 0, 12, 6, -4, &[0, 1, 0, 1, 0, 0, 0]),
    ("E7-1", 1, true, 0, 12, 6, -2, &[0, 0, 1, 0, 0, 0, 0]),
    ("E7-1", 1, true, 0, 12, 6, 0, &[1, 0, 0, 0, 0, 0, 0]),
    ("E7-1", 3, true, 0, 12, 6, -17, &[0, 0, 1, 1, 1, 1, 1]),
    ("E7-1", 3, true, 0, 12, 6, -15, &[1, 1, 1, 2, 2, 2, 1]),
    ("E7-1", 3, true, 0, 12, 6, -13, &[0, 1, 1, 2, 2, 1, 0]),
    ("E7-1", 3, true, 0, 12, 6, -11, &[1, 1, 2, 3, 2, 1, 1]),
    ("E7-1", 3, true, 0, 12, 6, -9, &[1, 2, 2, 3, 2, 2, 1]),
    ("E7-1", 3, true, 0, 12, 6, -7, &[1, 1, 2, 2, 2, 1, 0]),
    ("E7-1", 3, true, 0, 12, 6, -5, &[1, 1, 1, 2, 1, 0, 0]),
    ("E7-1", 3, true, 0, 12, 6, -3, &[0, 1, 1, 1, 0, 0, 0]),
    ("E7-1", 3, true, 0, 12, 6, -1, &[1, 0, 1, 0, 0, 0, 0]),
    ("E7-1", 4, true, 0, 12, 6, -18, &[0, 0, 0, 1, 1, 1, 1]),
    ("E7-1", 4, true, 0, 12, 6, -16, &[0, 1, 1, 2, 2, 2, 1]),
    ("E7-1", 4, true, 0, 12, 6, -14, &[1, 1, 2, 3, 3, 2, 1]),
    ("E7-1", 4, true, 0, 12, 6, -12, &[1, 2, 2, 4, 3, 2, 1]),
    ("E7-1", 4, true, 0, 12, 6, -10, &[1, 2, 3, 4, 3, 2, 1]),
    ("E7-1", 4, true, 0, 12, 6, -8, &[2, 2, 3, 4, 3, 2, 1]),
    ("E7-1", 4, true, 0, 12, 6, -6, &[1, 2, 2, 3, 2, 1, 0]),
    ("E7-1", 4, true, 0, 12, 6, -4, &[1, 1, 2, 2, 1, 0, 0]),
    ("E7-1", 4, true, 0, 12, 6, -2, &[1, 1, 1, 1, 0, 0, 0]),
    ("E7-1", 2, true, 0, 12, 6, -17, &[0, 1, 0, 1, 1, 1, 1]),
    ("E7-1", 2, true, 0, 12, 6, -15, &[0, 0, 1, 1, 1, 1, 0]),
    ("E7-1", 2, true, 0, 12, 6, -13, &[1, 1, 1, 2, 2, 1, 1]),
    ("E7-1", 2, true, 0, 12, 6, -11, &[0, 1, 1, 2, 1, 1, 0]),
    ("E7-1", 2, true, 0, 12, 6, -9, &[1, 1, 2, 2, 2, 1, 1]),
    ("E7-1", 2, true, 0, 12, 6, -7, &[1, 1, 1, 2, 1, 1, 0]),
    ("E7-1", 2, true, 0, 12, 6, -5, &[0, 1, 1, 1, 1, 0, 0]),
    ("E7-1", 2, true, 0, 12, 6, -3, &[1, 0, 1, 1, 0, 0, 0]),
    ("E7-1", 2, true, 0, 12, 6, -1, &[0, 1, 0, 0, 0, 0, 0]),
    ("E7-1", 5, true, 0, 12, 6, -19, &[0, 0, 0, 0, 1, 1, 1]),
    ("E7-1", 5, true, 0, 12, 6, -17, &[0, 0, 0, 1, 1, 1, 0]),
    ("E7-1", 5, true, 0, 12, 6, -15, &[0, 1, 1, 2, 2, 1, 1]),
    ("E7-1", 5, true, 0, 12, 6, -13, &[1, 1, 2, 3, 2, 2, 1]),
    ("E7-1", 5, true, 0, 12, 6, -11, &[1, 2, 2, 3, 3, 2, 1]),
    ("E7-1", 5, true, 0, 12, 6, -9, &[1, 1, 2, 3, 2, 1, 0]),
    ("E7-1", 5, true, 0, 12, 6, -7, &[1, 2, 2, 3, 2, 1, 1]),
    ("E7-1", 5, true, 0, 12, 6, -5, &[1, 1, 2, 2, 1, 1, 0]),
    ("E7-1", 5, true, 0, 12, 6, -3, &[1, 1, 1, 1, 1, 0, 0]),
    ("E7-1", 6, true, 0, 12, 6, -20, &[0, 0, 0, 0, 0, 1, 1]),
    ("E7-1", 6, true, 0, 12, 6, -18, &[0, 0, 0, 0, 1, 1, 0]),
    ("E7-1", 6, true, 0, 12, 6, -16, &[0, 0, 0, 1, 1, 0, 0]),
    ("E7-1", 6, true, 0, 12, 6, -14, &[0, 1, 1, 2, 1, 1, 1]),
    ("E7-1", 6, true, 0, 12, 6, -12, &[1, 1, 2, 2, 2, 2, 1]),
    ("E7-1", 6, true, 0, 12, 6, -10, &[1, 1, 1, 2, 2, 1, 0]),
    ("E7-1", 6, true, 0, 12, 6, -8, &[0, 1, 1, 2, 1, 0, 0]),
    ("E7-1", 6, true, 0, 12, 6, -6, &[1, 1, 2, 2, 1, 1, 1]),
    ("E7-1", 6, true, 0, 12, 6, -4, &[1, 1, 1, 1, 1, 1, 0]),
    ("E7-1", 7, true, 0, 12, 6, -21, &[0, 0, 0, 0, 0, 0, 1]),
    ("E7-1", 7, true, 0, 12, 6, -19, &[0, 0, 0, 0, 0, 1, 0]),
    ("E7-1", 7, true, 0, 12, 6, -17, &[0, 0, 0, 0, 1, 0, 0]),
    ("E7-1", 7, true, 0, 12, 6, -15, &[0, 0, 0, 1, 0, 0, 0]),
    ("E7-1", 7, true, 0, 12, 6, -13, &[0, 1, 1, 1, 1, 1, 1]),
    ("E7-1", 7, true, 0, 12, 6, -11, &[1, 0, 1, 1, 1, 1, 0]),
    ("E7-1", 7, true, 0, 12, 6, -9, &[0, 1, 0, 1, 1, 0, 0]),
    ("E7-1", 7, true, 0, 12, 6, -7, &[0, 0, 1, 1, 0, 0, 0]),
    ("E7-1", 7, true, 0, 12, 6, -5, &[1, 1, 1, 1, 1, 1, 1]),
    ("E8-1", 1, true, 0, 12, 6, -28, &[1, 0, 1, 1, 1, 1, 1, 1]),
    ("E8-1", 1, true, 0, 12, 6, -26, &[0, 1, 0, 1, 1, 1, 1, 0]),
    ("E8-1", 1, true, 0, 12, 6, -24, &[0, 0, 1, 1, 1, 1, 0, 0]),
    ("E8-1", 1, true, 0, 12, 6, -22, &[1, 1, 1, 2, 2, 1, 1, 1]),
    ("E8-1", 1, true, 0, 12, 6, -20, &[0, 1, 1, 2, 1, 1, 1, 0]),
    ("E8-1", 1, true, 0, 12, 6, -18, &[1, 1, 2, 2, 2, 2, 1, 1]),
    ("E8-1", 1, true, 0, 12, 6, -16, &[1, 1, 1, 2, 2, 1, 1, 0]),
    ("E8-1", 1, true, 0, 12, 6, -14, &[0, 1, 1, 2, 1, 1, 0, 0]),
    ("E8-1", 1, true, 0, 12, 6, -12, &[1, 1, 2, 2, 2, 1, 1, 1]),
    ("E8-1", 1, true, 0, 12, 6, -10, &[1, 1, 1, 2, 1, 1, 1, 0]),
    ("E8-1", 1, true, 0, 12, 6, -8, &[0, 1, 1, 1, 1, 1, 0, 0]),
    ("E8-1", 1, true, 0, 12, 6, -6, &[1, 0, 1, 1, 1, 0, 0, 0]),
    ("E8-1", 1, true, 0, 12, 6, -4, &[0, 1, 0, 1, 0, 0, 0, 0]),
    ("E8-1", 1, true, 0, 12, 6, -2, &[0, 0, 1, 0, 0, 0, 0, 0]),
    ("E8-1", 1, true, 0, 12, 6, 0, &[1, 0, 0, 0, 0, 0, 0, 0]),
    ("E8-1", 3, true, 0, 12, 6, -29, &[0, 0, 1, 1, 1, 1, 1, 1]),
    ("E8-1", 3, true, 0, 12, 6, -27, &[1, 1, 1, 2, 2, 2, 2, 1]),
    ("E8-1", 3, true, 0, 12, 6, -25, &[0, 1, 1, 2, 2, 2, 1, 0]),
    ("E8-1", 3, true, 0, 12, 6, -23, &[1, 1, 2, 3, 3, 2, 1, 1]),
    ("E8-1", 3, true, 0, 12, 6, -21, &[1, 2, 2, 4, 3, 2, 2, 1]),
    ("E8-1", 3, true, 0, 12, 6, -19, &[1, 2, 3, 4, 3, 3, 2, 1]),
    ("E8-1", 3, true, 0, 12, 6, -17, &[2, 2, 3, 4, 4, 3, 2, 1]),
    ("E8-1", 3, true, 0, 12, 6, -15, &[1, 2, 2, 4, 3, 2, 1, 0]),
    ("E8-1", 3, true, 0, 12, 6, -13, &[1, 2, 3, 4, 3, 2, 1, 1]),
    ("E8-1", 3, true, 0, 12, 6, -11, &[2, 2, 3, 4, 3, 2, 2, 1]),
    ("E8-1", 3, true, 0, 12, 6, -9, &[1, 2, 2, 3, 2, 2, 1, 0]),
    ("E8-1", 3, true, 0, 12, 6, -7, &[1, 1, 2, 2, 2, 1, 0, 0]),
    ("E8-1", 3, true, 0, 12, 6, -5, &[1, 1, 1, 2, 1, 0, 0, 0]),
    ("E8-1", 3, true, 0, 12, 6, -3, &[0, 1, 1, 1, 0, 0, 0, 0]),
    ("E8-1", 3, true, 0, 12, 6, -1, &[1, 0, 1, 0, 0, 0, 0, 0]),
    ("E8-1", 4, true, 0, 12, 6, -30, &[0, 0, 0, 1, 1, 1, 1, 1]),
    ("E8-1", 4, true, 0, 12, 6, -28, &[0, 1, 1, 2, 2, 2, 2, 1]),
    ("E8-1", 4, true, 0, 12, 6, -26, &[1, 1, 2, 3, 3, 3, 2, 1]),
    ("E8-1", 4, true, 0, 12, 6, -24, &[1, 2, 2, 4, 4, 3, 2, 1]),
    ("E8-1", 4, true, 0, 12, 6, -22, &[1, 2, 3, 5, 4, 3, 2, 1]),
    ("E8-1", 4, true, 0, 12, 6, -20, &[2, 3, 4, 6, 5, 4, 3, 2]),
    ("E8-1", 4, true, 0, 12, 6, -18, &[2, 3, 4, 6, 5, 4, 3, 1]),
    ("E8-1", 4, true, 0, 12, 6, -16, &[2, 3, 4, 6, 5, 4, 2, 1]),
    ("E8-1", 4, true, 0, 12, 6, -14, &[2, 3, 4, 6, 5, 3, 2, 1]),
    ("E8-1", 4, true, 0, 12, 6, -12, &[2, 3, 4, 6, 4, 3, 2, 1]),
    ("E8-1", 4, true, 0, 12, 6, -10, &[2, 3, 4, 5, 4, 3, 2, 1]),
    ("E8-1", 4, true, 0, 12, 6, -8, &[2, 2, 3, 4, 3, 2, 1, 0]),
    ("E8-1", 4, true, 0, 12, 6, -6, &[1, 2, 2, 3, 2, 1, 0, 0]),
    ("E8-1", 4, true, 0, 12, 6, -4, &[1, 1, 2, 2, 1, 0, 0, 0]),
    ("E8-1", 4, true, 0, 12, 6, -2, &[1, 1, 1, 1, 0, 0, 0, 0]),
    ("E8-1", 2, true, 0, 12, 6, -29, &[0, 1, 0, 1, 1, 1, 1, 1]),
    ("E8-1", 2, true, 0, 12, 6, -27, &[0, 0, 1, 1, 1, 1, 1, 0]),
    ("E8-1", 2, true, 0, 12, 6, -25, &[1, 1, 1, 2, 2, 2, 1, 1]),
    ("E8-1", 2, true, 0, 12, 6, -23, &[0, 1, 1, 2, 2, 1, 1, 0]),
    ("E8-1", 2, true, 0, 12, 6, -21, &[1, 1, 2, 3, 2, 2, 1, 1]),
    ("E8-1", 2, true, 0, 12, 6, -19, &[1, 2, 2, 3, 3, 2, 2, 1]),
    ("E8-1", 2, true, 0, 12, 6, -17, &[1, 1, 2, 3, 2, 2, 1, 0]),
    ("E8-1", 2, true, 0, 12, 6, -15, &[1, 2, 2, 3, 3, 2, 1, 1]),
    ("E8-1", 2, true, 0, 12, 6, -13, &[1, 1, 2, 3, 2, 1, 1, 0]),
    ("E8-1", 2, true, 0, 12, 6, -11, &[1, 2, 2, 3, 2, 2, 1, 1]),
    ("E8-1", 2, true, 0, 12, 6, -9, &[1, 1, 2, 2, 2, 1, 1, 0]),
    ("E8-1", 2, true, 0, 12, 6, -7, &[1, 1, 1, 2, 1, 1, 0, 0]),
    ("E8-1", 2, true, 0, 12, 6, -5, &[0, 1, 1, 1, 1, 0, 0, 0]),
    ("E8-1", 2, true, 0, 12, 6, -3, &[1, 0, 1, 1, 0, 0, 0, 0]),
    ("E8-1", 2, true, 0, 12, 6, -1, &[0, 1, 0, 0, 0, 0, 0, 0]),
    ("E8-1", 5, true, 0, 12, 6, -31, &[0, 0, 0, 0, 1, 1, 1, 1]),
    ("E8-1", 5, true, 0, 12, 6, -29, &[0, 0, 0, 1, 1, 1, 1, 0]),
    ("E8-1", 5, true, 0, 12, 6, -27, &[0, 1, 1, 2, 2, 2, 1, 1]),
    ("E8-1", 5, true, 0, 12, 6, -25, &[1, 1, 2, 3, 3, 2, 2, 1]),
    ("E8-1", 5, true, 0, 12, 6, -23, &[1, 2, 2, 4, 3, 3, 2, 1]),
    ("E8-1", 5, true, 0, 12, 6, -21, &[1, 2, 3, 4, 4, 3, 2, 1]),
    ("E8-1", 5, true, 0, 12, 6, -19, &[2, 2, 3, 5, 4, 3, 2, 1]),
    ("E8-1", 5, true, 0, 12, 6, -17, &[1, 3, 3, 5, 4, 3, 2, 1]),
    ("E8-1", 5, true, 0, 12, 6, -15, &[2, 2, 4, 5, 4, 3, 2, 1]),
    ("E8-1", 5, true, 0, 12, 6, -13, &[2, 3, 3, 5, 4, 3, 2, 1]),
    ("E8-1", 5, true, 0, 12, 6, -11, &[1, 2, 3, 4, 3, 2, 1, 0]),
    ("E8-1", 5, true, 0, 12, 6, -9, &[2, 2, 3, 4, 3, 2, 1, 1]),
    ("E8-1", 5, true, 0, 12, 6, -7, &[1, 2, 2, 3, 2, 1, 1, 0]),
    ("E8-1", 5, true, 0, 12, 6, -5, &[1, 1, 2, 2, 1, 1, 0, 0]),
    ("E8-1", 5, true, 0, 12, 6, -3, &[1, 1, 1, 1, 1, 0, 0, 0]),
    ("E8-1", 6, true, 0, 12, 6, -32, &[0, 0, 0, 0, 0, 1, 1, 1]),
    ("E8-1", 6, true, 0, 12, 6, -30, &[0, 0, 0, 0, 1, 1, 1, 0]),
    ("E8-1", 6, true, 0, 12, 6, -28, &[0, 0, 0, 1, 1, 1, 0, 0]),
    ("E8-1", 6, true, 0, 12, 6, -26, &[0, 1, 1, 2, 2, 1, 1, 1]),
    ("E8-1", 6, true, 0, 12, 6, -24, &[1, 1, 2, 3, 2, 2, 2, 1]),
    ("E8-1", 6, true, 0, 12, 6, -22, &[1, 2, 2, 3, 3, 3, 2, 1]),
    ("E8-1", 6, true, 0, 12, 6, -20, &[1, 1, 2, 3, 3, 2, 1, 0]),
    ("E8-1", 6, true, 0, 12, 6, -18, &[1, 2, 2, 4, 3, 2, 1, 1]),
    ("E8-1", 6, true, 0, 12, 6, -16, &[1, 2, 3, 4, 3, 2, 2, 1]),
    ("E8-1", 6, true, 0, 12, 6, -14, &[2, 2, 3, 4, 3, 3, 2, 1]),
    ("E8-1", 6, true, 0, 12, 6, -12, &[1, 2, 2, 3, 3, 2, 1, 0]),
    ("E8-1", 6, true, 0, 12, 6, -10, &[1, 1, 2, 3, 2, 1, 0, 0]),
    ("E8-1", 6, true, 0, 12, 6, -8, &[1, 2, 2, 3, 2, 1, 1, 1]),
    ("E8-1", 6, true, 0, 12, 6, -6, &[1, 1, 2, 2, 1, 1, 1, 0]),
    ("E8-1", 6, true, 0, 12, 6, -4, &[1, 1, 1, 1, 1, 1, 0, 0]),
    ("E8-1", 7, true, 0, 12, 6, -33, &[0, 0, 0, 0, 0, 0, 1, 1]),
    ("E8-1", 7, true, 0, 12, 6, -31, &[0, 0, 0, 0, 0, 1, 1, 0]),
    ("E8-1", 7, true, 0, 12, 6, -29, &[0, 0, 0, 0, 1, 1, 0, 0]),
    ("E8-1", 7, true, 0, 12, 6, -27, &[0, 0, 0, 1, 1, 0, 0, 0]),
    ("E8-1", 7, true, 0, 12, 6, -25, &[0, 1, 1, 2, 1, 1, 1, 1]),
    ("E8-1", 7, true, 0, 12, 6, -23, &[1, 1, 2, 2, 2, 2, 2, 1]),
    ("E8-1", 7, true, 0, 12, 6, -21, &[1, 1, 1, 2, 2, 2, 1, 0]),
    ("E8-1", 7, true, 0, 12, 6, -19, &[0, 1, 1, 2, 2, 1, 0, 0]),
    ("E8-1", 7, true, 0, 12, 6, -17, &[1, 1, 2, 3, 2, 1, 1, 1]),
    ("E8-1", 7, true, 0, 12, 6, -15, &[1, 2, 2, 3, 2, 2, 2, 1]),
    ("E8-1", 7, true, 0, 12, 6, -13, &[1, 1, 2, 2, 2, 2, 1, 0]),
    ("E8-1", 7, true, 0, 12, 6, -11, &[1, 1, 1, 2, 2, 1, 0, 0]),
    ("E8-1", 7, true, 0, 12, 6, -9, &[0, 1, 1, 2, 1, 0, 0, 0]),
    ("E8-1", 7, true, 0, 12, 6, -7, &[1, 1, 2, 2, 1, 1, 1, 1]),
    ("E8-1", 7, true, 0, 12, 6, -5, &[1, 1, 1, 1, 1, 1, 1, 0]),
    ("E8-1", 8, true, 0, 12, 6, -34, &[0, 0, 0, 0, 0, 0, 0, 1]),
    ("E8-1", 8, true, 0, 12, 6, -32, &[0, 0, 0, 0, 0, 0, 1, 0]),
    ("E8-1", 8, true, 0, 12, 6, -30, &[0, 0, 0, 0, 0, 1, 0, 0]),
    ("E8-1", 8, true, 0, 12, 6, -28, &[0, 0, 0, 0, 1, 0, 0, 0]),
    ("E8-1", 8, true, 0, 12, 6, -26, &[0, 0, 0, 1, 0, 0, 0, 0]),
    ("E8-1", 8, true, 0, 12, 6, -24, &[0, 1, 1, 1, 1, 1, 1, 1]),
    ("E8-1", 8, true, 0, 12, 6, -22, &[1, 0, 1, 1, 1, 1, 1, 0]),
    ("E8-1", 8, true, 0, 12, 6, -20, &[0, 1, 0, 1, 1, 1, 0, 0]),
    ("E8-1", 8, true, 0, 12, 6, -18, &[0, 0, 1, 1, 1, 0, 0, 0]),
    ("E8-1", 8, true, 0, 12, 6, -16, &[1, 1, 1, 2, 1, 1, 1, 1]),
    ("E8-1", 8, true, 0, 12, 6, -14, &[0, 1, 1, 1, 1, 1, 1, 0]),
    ("E8-1", 8, true, 0, 12, 6, -12, &[1, 0, 1, 1, 1, 1, 0, 0]),
    ("E8-1", 8, true, 0, 12, 6, -10, &[0, 1, 0, 1, 1, 0, 0, 0]),
    ("E8-1", 8, true, 0, 12, 6, -8, &[0, 0, 1, 1, 0, 0, 0, 0]),
    ("E8-1", 8, true, 0, 12, 6, -6, &[1, 1, 1, 1, 1, 1, 1, 1]),
    ("F4-1", 1, true, 12, 0, 3, -16, &[0, 0, 0, 1, 1, 1]),
    ("F4-1", 1, true, 12, 0, 3, -14, &[1, 1, 1, 2, 1, 0]),
    ("F4-1", 1, true, 12, 0, 3, -12, &[0, 1, 1, 1, 1, 0]),
    ("F4-1", 1, true, 12, 0, 3, -10, &[0, 0, 1, 1, 1, 1]),
    ("F4-1", 1, true, 12, 0, 3, -8, &[1, 1, 1, 2, 1, 1]),
    ("F4-1", 1, true, 12, 0, 3, -6, &[1, 1, 1, 1, 1, 0]),
    ("F4-1", 1, true, 12, 0, 3, -4, &[0, 0, 1, 0, 0, 0]),
    ("F4-1", 1, true, 12, 0, 3, -2, &[0, 0, 0, 0, 0, 1]),
    ("F4-1", 1, true, 12, 0, 3, 0, &[1, 0, 0, 0, 0, 0]),
    ("F4-1", 2, true, 0, 0, 3, -18, &[0, 0, 0, 1, 1, 0]),
    ("F4-1", 2, true, 0, 0, 3, -16, &[0, 1, 1, 2, 1, 0]),
    ("F4-1", 2, true, 0, 0, 3, -14, &[0, 1, 1, 2, 2, 1]),
    ("F4-1", 2, true, 0, 0, 3, -12, &[1, 1, 2, 3, 2, 1]),
    ("F4-1", 2, true, 0, 0, 3, -10, &[1, 2, 2, 3, 2, 1]),
    ("F4-1", 2, true, 0, 0, 3, -8, &[1, 1, 2, 2, 2, 1]),
    ("F4-1", 2, true, 0, 0, 3, -6, &[1, 1, 2, 2, 1, 1]),
    ("F4-1", 2, true, 0, 0, 3, -4, &[1, 1, 1, 1, 1, 1]),
    ("F4-1", 2, true, 0, 0, 3, -2, &[1, 0, 1, 0, 0, 0]),
    ("F4-1", 3, true, 12, 0, 3, -19, &[0, 0, 0, 1, 0, 0]),
    ("F4-1", 3, true, 12, 0, 3, -17, &[0, 1, 0, 1, 1, 0]),
    ("F4-1", 3, true, 12, 0, 3, -15, &[0, 0, 1, 1, 1, 0]),
    ("F4-1", 3, true, 12, 0, 3, -13, &[0, 1, 1, 2, 1, 1]),
    ("F4-1", 3, true, 12, 0, 3, -11, &[1, 1, 1, 2, 2, 1]),
    ("F4-1", 3, true, 12, 0, 3, -9, &[1, 1, 2, 2, 1, 0]),
    ("F4-1", 3, true, 12, 0, 3, -7, &[0, 1, 1, 1, 1, 1]),
    ("F4-1", 3, true, 12, 0, 3, -5, &[1, 0, 1, 1, 1, 1]),
    ("F4-1", 3, true, 12, 0, 3, -3, &[1, 1, 1, 1, 0, 0]),
    ("F4-1", 4, true, 0, 0, 3, -18, &[0, 1, 0, 1, 0, 0]),
    ("F4-1", 4, true, 0, 0, 3, -16, &[0, 0, 0, 0, 1, 0]),
    ("F4-1", 4, true, 0, 0, 3, -14, &[0, 0, 1, 1, 0, 0]),
    ("F4-1", 4, true, 0, 0, 3, -12, &[0, 1, 0, 1, 1, 1]),
    ("F4-1", 4, true, 0, 0, 3, -10, &[1, 0, 1, 1, 1, 0]),
    ("F4-1", 4, true, 0, 0, 3, -8, &[0, 1, 1, 1, 0, 0]),
    ("F4-1", 4, true, 0, 0, 3, -6, &[0, 0, 0, 0, 1, 1]),
    ("F4-1", 4, true, 0, 0, 3, -4, &[1, 0, 1, 1, 0, 0]),
    ("F4-1", 4, true, 0, 0, 3, -2, &[0, 1, 0, 0, 0, 0]),
    ("G2-1", 1, true, 0, 12, 2, -11, &[0, 0, 0, 1]),
    ("G2-1", 1, true, 0, 12, 2, -9, &[0, 1, 1, 1]),
    ("G2-1", 1, true, 0, 12, 2, -7, &[1, 1, 1, 1]),
    ("G2-1", 1, true, 0, 12, 2, -5, &[1, 2, 1, 1]),
    ("G2-1", 1, true, 0, 12, 2, -3, &[1, 1, 1, 0]),
    ("G2-1", 1, true, 0, 12, 2, -1, &[1, 1, 0, 0]),
    ("G2-1", 2, true, 0, 12, 2, -10, &[0, 1, 0, 1]),
    ("G2-1", 2, true, 0, 12, 2, -8, &[0, 0, 1, 0]),
    ("G2-1", 2, true, 0, 12, 2, -6, &[1, 1, 0, 1]),
    ("G2-1", 2, true, 0, 12, 2, -4, &[0, 1, 1, 0]),
    ("G2-1", 2, true, 0, 12, 2, -2, &[1, 0, 0, 0]),
    ("G2-1", 2, true, 0, 12, 2, 0, &[0, 1, 0, 0]),
    ("E6-2", 1, true, 0, 12, 6, -14, &[0, 0, 0, 0, 0, 1]),
    ("E6-2", 1, true, 0, 12, 6, -12, &[0, 0, 0, 0, 1, 0]),
    ("E6-2", 1, true, 0, 12, 6, -10, &[0, 0, 0, 1, 0, 0]),
    ("E6-2", 1, true, 0, 12, 6, -8, &[0, 1, 1, 1, 1, 1]),
    ("E6-2", 1, true, 0, 12, 6, -6, &[1, 0, 1, 1, 1, 0]),
    ("E6-2", 1, true, 0, 12, 6, -4, &[0, 1, 0, 1, 0, 0]),
    ("E6-2", 1, true, 0, 12, 6, -2, &[0, 0, 1, 0, 0, 0]),
    ("E6-2", 1, true, 0, 12, 6, 0, &[1, 0, 0, 0, 0, 0]),
    ("E6-2", 2, true, 0, 12, 6, -13, &[0, 0, 0, 0, 1, 1]),
    ("E6-2", 2, true, 0, 12, 6, -11, &[0, 0, 0, 1, 1, 0]),
    ("E6-2", 2, true, 0, 12, 6, -9, &[0, 1, 1, 2, 1, 1]),
    ("E6-2", 2, true, 0, 12, 6, -7, &[1, 1, 2, 2, 2, 1]),
    ("E6-2", 2, true, 0, 12, 6, -5, &[1, 1, 1, 2, 1, 0]),
    ("E6-2", 2, true, 0, 12, 6, -3, &[0, 1, 1, 1, 0, 0]),
    ("E6-2", 2, true, 0, 12, 6, -1, &[1, 0, 1, 0, 0, 0]),
    ("E6-2", 3, true, 6, 12, 6, -12, &[0, 0, 0, 1, 1, 1]),
    ("E6-2", 3, true, 6, 12, 6, -10, &[0, 1, 1, 2, 2, 1]),
    ("E6-2", 3, true, 6, 12, 6, -8, &[1, 1, 2, 3, 2, 1]),
    ("E6-2", 3, true, 6, 12, 6, -6, &[1, 2, 2, 3, 2, 1]),
    ("E6-2", 3, true, 6, 12, 6, -4, &[1, 1, 2, 2, 1, 0]),
    ("E6-2", 3, true, 6, 12, 6, -2, &[1, 1, 1, 1, 0, 0]),
    ("E6-2", 4, true, 6, 12, 6, -11, &[0, 1, 0, 1, 1, 1]),
    ("E6-2", 4, true, 6, 12, 6, -9, &[0, 0, 1, 1, 1, 0]),
    ("E6-2", 4, true, 6, 12, 6, -7, &[1, 1, 1, 2, 1, 1]),
    ("E6-2", 4, true, 6, 12, 6, -5, &[0, 1, 1, 1, 1, 0]),
    ("E6-2", 4, true, 6, 12, 6, -3, &[1, 0, 1, 1, 0, 0]),
    ("E6-2", 4, true, 6, 12, 6, -1, &[0, 1, 0, 0, 0, 0]),
    ("E6-2", 2, true, 12, 12, 6, -11, &[0, 0, 1, 1, 1, 1]),
    ("E6-2", 2, true, 12, 12, 6, -9, &[1, 1, 1, 2, 2, 1]),
    ("E6-2", 2, true, 12, 12, 6, -7, &[0, 1, 1, 2, 1, 0]),
    ("E6-2", 2, true, 12, 12, 6, -5, &[1, 1, 2, 2, 1, 1]),
    ("E6-2", 2, true, 12, 12, 6, -3, &[1, 1, 1, 1, 1, 0]),
    ("E6-2", 1, true, 12, 12, 6, -10, &[1, 0, 1, 1, 1, 1]),
    ("E6-2", 1, true, 12, 12, 6, -8, &[0, 1, 0, 1, 1, 0]),
    ("E6-2", 1, true, 12, 12, 6, -6, &[0, 0, 1, 1, 0, 0]),
    ("E6-2", 1, true, 12, 12, 6, -4, &[1, 1, 1, 1, 1, 1]),
    ("D4-3", 1, true, 0, 0, 6, -4, &[1, 1, 1, 1]),
    ("D4-3", 1, true, 0, 0, 6, -2, &[0, 1, 0, 0]),
    ("D4-3", 1, true, 0, 0, 6, 0, &[1, 0, 0, 0]),
    ("D4-3", 2, true, 12, 0, 6, -5, &[0, 1, 1, 1]),
    ("D4-3", 2, true, 12, 0, 6, -3, &[1, 2, 1, 1]),
    ("D4-3", 2, true, 12, 0, 6, -1, &[1, 1, 0, 0]),
    ("D4-3", 1, true, 8, 0, 6, -6, &[0, 0, 1, 0]),
    ("D4-3", 1, true, 8, 0, 6, -4, &[0, 1, 0, 1]),
    ("D4-3", 1, true, 8, 0, 6, -2, &[1, 1, 1, 0]),
    ("D4-3", 1, true, 16, 0, 6, -6, &[0, 0, 0, 1]),
    ("D4-3", 1, true, 16, 0, 6, -4, &[0, 1, 1, 0]),
    ("D4-3", 1, true, 16, 0, 6, -2, &[1, 1, 0, 1]),
];
