//! Enumeration of strictly increasing index subsets and the fixed-index
//! minor-sum families used by every determinantal representation.

/// All strictly increasing k-subsets of {0, .., n-1} in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for t in i + 1..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// The k-subsets of {0, .., n-1} that contain `fixed`.
pub fn subsets_containing(n: usize, k: usize, fixed: usize) -> Vec<Vec<usize>> {
    subsets(n, k)
        .into_iter()
        .filter(|s| s.contains(&fixed))
        .collect()
}
