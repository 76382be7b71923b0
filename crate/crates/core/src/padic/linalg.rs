//! Dense linear algebra over a valued ring, pivoting on minimal valuation.

use crate::error::{Error, Result};
use crate::padic::ring::Valued;
use crate::padic::valuation::Valuation;

fn pivot_row<R: Valued>(ring: &R, m: &[Vec<R::El>], col: usize) -> Result<Option<usize>> {
    let mut best: Option<(usize, Valuation)> = None;
    for (r, row) in m.iter().enumerate().skip(col) {
        let v = ring.valuation(&row[col])?;
        let better = match (&best, v) {
            (_, Valuation::Bottom { .. }) => false,
            (None, _) => true,
            (Some((_, Valuation::Finite(b))), Valuation::Finite(x)) => x < *b,
            (Some(_), _) => false,
        };
        if better {
            best = Some((r, v));
        }
    }
    Ok(best.map(|(r, _)| r))
}

/// Determinant of a square matrix. If a column has no determined pivot the
/// result is the running product times that precision-zero entry.
pub fn det<R: Valued>(ring: &R, mut m: Vec<Vec<R::El>>) -> Result<R::El> {
    let n = m.len();
    let mut acc = ring.one();
    for col in 0..n {
        let Some(pr) = pivot_row(ring, &m, col)? else {
            return Ok(ring.mul(&acc, &m[col][col]));
        };
        if pr != col {
            m.swap(pr, col);
            acc = ring.neg(&acc);
        }
        let piv = m[col][col].clone();
        acc = ring.mul(&acc, &piv);
        let inv = ring.inverse(&piv)?;
        for r in col + 1..n {
            let factor = ring.mul(&m[r][col], &inv);
            for c in col + 1..n {
                let t = ring.mul(&factor, &m[col][c]);
                m[r][c] = ring.sub(&m[r][c], &t);
            }
        }
    }
    Ok(acc)
}

/// Solves `m x = b`.
pub fn solve<R: Valued>(ring: &R, mut m: Vec<Vec<R::El>>, mut b: Vec<R::El>) -> Result<Vec<R::El>> {
    let n = m.len();
    for col in 0..n {
        let pr = pivot_row(ring, &m, col)?
            .ok_or_else(|| Error::precision(format!("singular system at column {col}")))?;
        m.swap(pr, col);
        b.swap(pr, col);
        let inv = ring.inverse(&m[col][col])?;
        for r in col + 1..n {
            let factor = ring.mul(&m[r][col], &inv);
            for c in col + 1..n {
                let t = ring.mul(&factor, &m[col][c]);
                m[r][c] = ring.sub(&m[r][c], &t);
            }
            let t = ring.mul(&factor, &b[col]);
            b[r] = ring.sub(&b[r], &t);
        }
    }
    let mut x = vec![ring.zero(); n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..n {
            acc = ring.sub(&acc, &ring.mul(&m[r][c], &x[c]));
        }
        x[r] = ring.mul(&acc, &ring.inverse(&m[r][r])?);
    }
    Ok(x)
}

/// Inverse by Gauss-Jordan elimination.
pub fn inverse<R: Valued>(ring: &R, mut m: Vec<Vec<R::El>>) -> Result<Vec<Vec<R::El>>> {
    let n = m.len();
    for (i, row) in m.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { ring.one() } else { ring.zero() }));
    }
    for col in 0..n {
        let pr = pivot_row(ring, &m, col)?
            .ok_or_else(|| Error::precision(format!("singular matrix at column {col}")))?;
        m.swap(pr, col);
        let inv = ring.inverse(&m[col][col])?;
        let pivot_row: Vec<R::El> = m[col].iter().map(|x| ring.mul(x, &inv)).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col {
                continue;
            }
            let factor = row[col].clone();
            for c in col..2 * n {
                let t = ring.mul(&factor, &pivot_row[c]);
                row[c] = ring.sub(&row[c], &t);
            }
        }
        m[col] = pivot_row;
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::{EisensteinRing, Ring};

    #[test]
    fn det_and_solve_over_q2() {
        let r = EisensteinRing::rational(2, 30).unwrap();
        let e = |n: i64| r.from_int(n);
        let m = vec![vec![e(2), e(1)], vec![e(4), e(3)]];
        let d = det(&*r, m.clone()).unwrap();
        assert!(r.sub(&d, &e(2)).is_bottom());
        let x = solve(&*r, m, vec![e(1), e(1)]).unwrap();
        // 2x + y = 1, 4x + 3y = 1  =>  x = 1, y = -1
        assert!(r.sub(&x[0], &e(1)).is_bottom());
        assert!(r.sub(&x[1], &e(-1)).is_bottom());
        let inv = inverse(&*r, vec![vec![e(2), e(1)], vec![e(4), e(3)]]).unwrap();
        // (1/2) [[3, -1], [-4, 2]]
        let half = r.inverse(&e(2)).unwrap();
        assert!(r.sub(&inv[0][0], &r.mul_int(&half, 3)).is_bottom());
        assert!(r.sub(&inv[1][0], &e(-2)).is_bottom());
    }
}
