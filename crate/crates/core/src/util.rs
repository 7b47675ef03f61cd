//! Small combinatorial helpers shared across modules.

/// All permutations of `0..n` in lexicographic order, each given as the
/// image list `perm[i] = sigma(i)`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn extend(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                extend(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    extend(n, &mut current, &mut used, &mut out);
    out
}

/// Inverse of a permutation given as an image list.
pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v] = i;
    }
    inv
}
