use smallvec::SmallVec;

use crate::graded::GradedBasis;

pub(crate) type Positions = SmallVec<[usize; 8]>;

/// Calls `f(chosen, rest, negative)` for every way of choosing `k` of the
/// positions `0..n` (chosen kept in increasing order, rest likewise). The flag
/// is the Koszul sign of moving the chosen letters of `letters` in front of the
/// rest.
pub(crate) fn for_each_unshuffle<F>(basis: &GradedBasis, letters: &[u16], k: usize, mut f: F)
where
    F: FnMut(&[usize], &[usize], bool),
{
    let n = letters.len();
    if k > n {
        return;
    }
    let mut chosen: Positions = (0..k).collect();
    loop {
        let mut rest: Positions = SmallVec::new();
        let mut c = 0;
        for p in 0..n {
            if c < k && chosen[c] == p {
                c += 1;
            } else {
                rest.push(p);
            }
        }
        let mut negative = false;
        for &r in &rest {
            if !basis.is_odd(letters[r]) {
                continue;
            }
            for &s in chosen.iter() {
                if s > r && basis.is_odd(letters[s]) {
                    negative = !negative;
                }
            }
        }
        f(&chosen, &rest, negative);

        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if chosen[i] < n - k + i {
                chosen[i] += 1;
                for j in i + 1..k {
                    chosen[j] = chosen[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Parity;

    #[test]
    fn counts_binomial() {
        let b = GradedBasis::numbered("x", 5, Parity::Odd);
        let letters = [0, 1, 2, 3, 4];
        for k in 0..=5 {
            let mut count = 0;
            for_each_unshuffle(&b, &letters, k, |_, _, _| count += 1);
            let expected = (0..k).fold(1usize, |acc, i| acc * (5 - i) / (i + 1));
            assert_eq!(count, expected);
        }
    }

    #[test]
    fn signs_of_single_moves() {
        let b = GradedBasis::numbered("x", 3, Parity::Odd);
        let mut seen = vec![];
        for_each_unshuffle(&b, &[0, 1, 2], 1, |c, _, neg| seen.push((c[0], neg)));
        assert_eq!(seen, vec![(0, false), (1, true), (2, false)]);
    }
}
