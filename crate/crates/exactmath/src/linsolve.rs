use crate::field::Field;

/// Solves `A·y = b` by Gauss-Jordan elimination; free unknowns are set to
/// zero. Returns `None` when the system is inconsistent.
pub fn solve_linear<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Option<Vec<F>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].inv().expect("pivot nonzero");
        for j in col..cols {
            a[row][j] = a[row][j].clone() * &inv;
        }
        b[row] = b[row].clone() * &inv;
        for i in 0..rows {
            if i == row || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in col..cols {
                let t = f.clone() * &a[row][j];
                a[i][j] = a[i][j].clone() - &t;
            }
            let t = f * &b[row];
            b[i] = b[i].clone() - &t;
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if b[row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut y = vec![F::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        y[c] = b[i].clone();
    }
    Some(y)
}
