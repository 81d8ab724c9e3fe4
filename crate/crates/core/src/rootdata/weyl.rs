use serde::Serialize;

/// A signed permutation of the ambient ε/δ coordinates: `(w x)[perm[a]] = sign[a] * x[a]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i64>,
}

impl WeylElement {
    pub fn identity(n: usize) -> WeylElement {
        WeylElement {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// Rejects anything that is not a bijection with ±1 signs.
    pub fn new(perm: Vec<usize>, signs: Vec<i64>) -> Option<WeylElement> {
        let n = perm.len();
        if signs.len() != n || signs.iter().any(|s| s.abs() != 1) {
            return None;
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        Some(WeylElement { perm, signs })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i64] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    /// Acts on any coordinate vector whose entries can be negated.
    pub fn apply<T: Copy>(&self, x: &[T], neg: impl Fn(T) -> T) -> Vec<T> {
        assert_eq!(x.len(), self.perm.len());
        let mut out = x.to_vec();
        for (a, &target) in self.perm.iter().enumerate() {
            out[target] = if self.signs[a] == 1 { x[a] } else { neg(x[a]) };
        }
        out
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        self.apply(x, |v| -v)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// `S_m × S_n` acting on the ε block `0..m` and the δ block `m..m+n`.
pub(crate) fn symmetric_pair(m: usize, n: usize) -> Vec<WeylElement> {
    let mut out = Vec::new();
    for pe in permutations(m) {
        for pd in permutations(n) {
            let mut perm = pe.clone();
            perm.extend(pd.iter().map(|&j| j + m));
            out.push(WeylElement {
                perm,
                signs: vec![1; m + n],
            });
        }
    }
    out
}

/// Hyperoctahedral group on the δ block `1..=n`, fixing the ε coordinate 0.
pub(crate) fn hyperoctahedral(n: usize) -> Vec<WeylElement> {
    let mut out = Vec::new();
    for pd in permutations(n) {
        for mask in 0..(1u32 << n) {
            let mut perm = vec![0];
            perm.extend(pd.iter().map(|&j| j + 1));
            let mut signs = vec![1];
            signs.extend((0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }));
            out.push(WeylElement { perm, signs });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(symmetric_pair(2, 2).len(), 4);
        assert_eq!(hyperoctahedral(2).len(), 8);
        assert!(symmetric_pair(2, 1)[0].is_identity());
    }

    #[test]
    fn validation() {
        assert!(WeylElement::new(vec![1, 0], vec![1, 1]).is_some());
        assert!(WeylElement::new(vec![1, 1], vec![1, 1]).is_none());
        assert!(WeylElement::new(vec![1, 0], vec![1, 2]).is_none());
    }
}
