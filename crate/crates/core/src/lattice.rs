//! Integer lattices: Smith normal form and finite quotient orders.

/// Invariant factors `d_1 | d_2 | … | d_r` (all positive) of an integer
/// matrix, `r` its rank.
pub fn smith_invariants(matrix: &[Vec<i64>]) -> Vec<i64> {
    let mut m: Vec<Vec<i64>> = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry of the trailing block.
        let Some((pr, pc)) = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| m[r][c] != 0)
            .min_by_key(|&(r, c)| m[r][c].abs())
        else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let f = m[r][t] / m[t][t];
            if f != 0 {
                for c in t..cols {
                    m[r][c] -= f * m[t][c];
                }
            }
            clean &= m[r][t] == 0;
        }
        for c in t + 1..cols {
            let f = m[t][c] / m[t][t];
            if f != 0 {
                for r in t..rows {
                    m[r][c] -= f * m[r][t];
                }
            }
            clean &= m[t][c] == 0;
        }
        if !clean {
            continue;
        }
        // The pivot must divide the rest of the block; otherwise fold an
        // offending row into row t and go again.
        let pivot = m[t][t];
        if let Some(r) = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| m[r][c] % pivot != 0)) {
            for c in t..cols {
                m[t][c] += m[r][c];
            }
            continue;
        }
        diag.push(pivot.abs());
        t += 1;
    }
    diag
}

/// Order of `Zⁿ / L` where `L` is spanned by the columns of `generators`
/// (each of length `n`), or `None` when `L` has infinite index.
pub fn quotient_order(n: usize, generators: &[Vec<i64>]) -> Option<u64> {
    if n == 0 {
        return Some(1);
    }
    let rows: Vec<Vec<i64>> = (0..n).map(|r| generators.iter().map(|g| g[r]).collect()).collect();
    let inv = smith_invariants(&rows);
    (inv.len() == n).then(|| inv.iter().map(|&d| d as u64).product())
}
