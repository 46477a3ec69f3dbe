//! Reference computations for tests. Nothing here depends on `slope-calc-core`;
//! every routine is a direct, slow transcription of a textbook construction.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Seifert matrix of the surface Seifert's algorithm builds on a braid closure.
///
/// One disk per strand, one half-twisted band per letter. Homology is
/// generated by loops through consecutive bands of the same generator; the
/// loop starting at band `i` runs to the next band `h[i]` with `|x[h[i]]| = |x[i]|`.
/// Entries are the linking numbers `lk(a, b^+)`.
pub fn seifert_matrix(letters: &[i64]) -> Vec<Vec<i64>> {
    let len = letters.len();
    let next: Vec<Option<usize>> = (0..len)
        .map(|i| (i + 1..len).find(|&j| letters[j].abs() == letters[i].abs()))
        .collect();
    let loops: Vec<usize> = (0..len).filter(|&i| next[i].is_some()).collect();
    let pos = |band: usize| loops.iter().position(|&l| l == band);
    let dim = loops.len();
    let mut v = vec![vec![0i64; dim]; dim];
    for (a, &i) in loops.iter().enumerate() {
        let hi = next[i].unwrap();
        v[a][a] = -(letters[i] + letters[hi]).signum();
        for &j in &loops {
            if j <= i {
                continue;
            }
            let b = pos(j).unwrap();
            let hj = next[j].unwrap();
            if hi > hj || hi < j {
                // nested or disjoint spans
                continue;
            }
            if hi == j {
                // consecutive loops sharing band j
                if letters[j] > 0 {
                    v[b][a] = 1;
                } else {
                    v[a][b] = -1;
                }
                continue;
            }
            // interleaved spans i < j < hi < hj
            let (ci, cj) = (letters[i].abs(), letters[j].abs());
            if ci - cj == 1 {
                v[b][a] = -1;
            } else if cj - ci == 1 {
                v[a][b] = 1;
            } else {
                assert!((ci - cj).abs() > 1, "interleaving loops in one column");
            }
        }
    }
    v
}

/// Integer determinant by Bareiss elimination.
pub fn det_i128(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                assert_eq!(num % prev, 0);
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Coefficients (ascending) of the polynomial through `(xs[i], ys[i])`, by Lagrange interpolation.
pub fn interpolate(xs: &[i128], ys: &[i128]) -> Vec<Ratio<i128>> {
    let n = xs.len();
    let mut coeffs = vec![Ratio::<i128>::zero(); n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut basis = vec![Ratio::<i128>::one()];
        let mut denom = Ratio::<i128>::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![Ratio::<i128>::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += *c;
                next[k] -= *c * Ratio::from_integer(xs[j]);
            }
            basis = next;
            denom *= Ratio::from_integer(xs[i] - xs[j]);
        }
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += *c * Ratio::from_integer(ys[i]) / denom;
        }
    }
    coeffs
}

/// Strips zero ends and fixes the sign of the leading coefficient.
pub fn normalize(coeffs: &[i128]) -> Vec<i128> {
    let start = coeffs.iter().position(|c| *c != 0);
    let end = coeffs.iter().rposition(|c| *c != 0);
    let (Some(s), Some(e)) = (start, end) else {
        return Vec::new();
    };
    let mut out = coeffs[s..=e].to_vec();
    if out.last().unwrap().is_negative() {
        for c in &mut out {
            *c = -*c;
        }
    }
    out
}

/// Alexander polynomial of a braid closure as `det(V - t V^T)` from the
/// Seifert matrix, normalized to lowest exponent 0 and positive leading coefficient.
pub fn alexander_via_seifert(letters: &[i64]) -> Vec<i128> {
    let v = seifert_matrix(letters);
    let d = v.len();
    let xs: Vec<i128> = (0..=d as i128).collect();
    let ys: Vec<i128> = xs
        .iter()
        .map(|&t| {
            let m = (0..d)
                .map(|i| (0..d).map(|j| v[i][j] as i128 - t * v[j][i] as i128).collect())
                .collect();
            det_i128(m)
        })
        .collect();
    let coeffs: Vec<i128> = interpolate(&xs, &ys)
        .into_iter()
        .map(|c| {
            assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    normalize(&coeffs)
}

/// Whether the braid closure is connected, tracking each strand by hand.
pub fn closure_is_knot(strands: usize, letters: &[i64]) -> bool {
    // follow strand 0 through repeated passes of the braid
    let pass = |start: usize| {
        let mut p = start;
        for &l in letters {
            let k = l.unsigned_abs() as usize - 1;
            if p == k {
                p = k + 1;
            } else if p == k + 1 {
                p = k;
            }
        }
        p
    };
    let mut visited = vec![false; strands];
    let mut p = 0;
    while !visited[p] {
        visited[p] = true;
        p = pass(p);
    }
    visited.into_iter().all(|v| v)
}

/// Every word of length `<= max_len` in letters `±1..±(strands-1)`.
pub fn all_braid_words(strands: usize, max_len: usize) -> Vec<Vec<i64>> {
    let alphabet: Vec<i64> = (1..strands as i64).flat_map(|g| [g, -g]).collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        if alphabet.is_empty() {
            break;
        }
        let next: Vec<Vec<i64>> = layer
            .iter()
            .flat_map(|w: &Vec<i64>| {
                alphabet.iter().map(move |&a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Genus of the `(p, q)` torus knot.
pub fn torus_knot_genus(p: i64, q: i64) -> i64 {
    (p - 1) * (q - 1) / 2
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Primitive integer pairs with `max(|x|, |y|) <= n`, one per `±` pair,
/// as plain tuples (no canonical ordering).
pub fn primitive_pairs(n: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for x in -n..=n {
        for y in -n..=n {
            if gcd(x, y) != 1 {
                continue;
            }
            if out.contains(&(-x, -y)) {
                continue;
            }
            out.push((x, y));
        }
    }
    out
}
