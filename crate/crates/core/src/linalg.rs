//! Small exact integer linear algebra on square matrices.

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant<const N: usize>(m: &[[i64; N]; N]) -> i128 {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..N {
        if a[k][k] == 0 {
            match (k + 1..N).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..N {
            for j in k + 1..N {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[N - 1][N - 1]
}

/// Coefficients `c_0, …, c_N` of `det(x·I − m)` (so `c_N = 1`), by Faddeev–LeVerrier.
pub fn characteristic_polynomial<const N: usize>(m: &[[i64; N]; N]) -> Vec<i128> {
    let a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut coeffs = vec![0i128; N + 1];
    coeffs[N] = 1;
    let mut mk = vec![vec![0i128; N]; N];
    for k in 1..=N {
        // M_k = A·M_{k-1} + c_{N-k+1}·I
        let mut next = vec![vec![0i128; N]; N];
        for i in 0..N {
            for j in 0..N {
                next[i][j] = (0..N).map(|l| a[i][l] * mk[l][j]).sum::<i128>();
            }
            next[i][i] += coeffs[N - k + 1];
        }
        mk = next;
        let trace: i128 = (0..N).map(|i| (0..N).map(|l| a[i][l] * mk[l][i]).sum::<i128>()).sum();
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[N - k] = -trace / k as i128;
    }
    coeffs
}

fn sign_changes(seq: impl Iterator<Item = i128>) -> usize {
    let mut last = 0i128;
    let mut changes = 0;
    for c in seq.filter(|&c| c != 0) {
        if last != 0 && (c > 0) != (last > 0) {
            changes += 1;
        }
        last = c;
    }
    changes
}

/// `(positive, negative)` eigenvalue counts of a symmetric integer matrix.
///
/// The characteristic polynomial of a symmetric matrix has only real roots, so
/// Descartes' rule of signs counts its positive and negative roots exactly.
pub fn signature<const N: usize>(m: &[[i64; N]; N]) -> (usize, usize) {
    let p = characteristic_polynomial(m);
    let pos = sign_changes(p.iter().copied());
    let neg = sign_changes(p.iter().enumerate().map(|(i, &c)| if i % 2 == 1 { -c } else { c }));
    (pos, neg)
}
