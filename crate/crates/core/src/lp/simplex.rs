//! Dense tableau simplex over exact rationals with Bland's rule.
//!
//! Solves `max c·x  s.t.  A x ≤ b, x ≥ 0` for `b ≥ 0`, so the slack basis is
//! feasible from the start and no first phase is needed. The optimal tableau
//! also yields the dual `min b·y  s.t.  Aᵀ y ≥ c, y ≥ 0` from the reduced
//! costs of the slack columns.

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("right-hand side entry {0} is negative")]
    NegativeRhs(usize),
    #[error("objective is unbounded along column {0}")]
    Unbounded(usize),
    #[error("constraint row {row} has {found} entries, expected {expected}")]
    Shape { row: usize, found: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpOptimum {
    pub primal: Vec<Rational>,
    pub dual: Vec<Rational>,
    pub value: Rational,
    pub pivots: usize,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    objective: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        if p != 1 {
            let inv = p.recip();
            for x in self.rows[row].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = self.rows[row].clone();
        let nonzero: Vec<usize> = (0..self.width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for &j in &nonzero {
                r[j] -= &factor * &pivot_row[j];
            }
        }
        if !self.objective[col].is_zero() {
            let factor = self.objective[col].clone();
            for &j in &nonzero {
                self.objective[j] -= &factor * &pivot_row[j];
            }
        }
        self.basis[row] = col;
    }
}

pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Result<LpOptimum, LpError> {
    let m = a.len();
    let n = c.len();
    for (row, r) in a.iter().enumerate() {
        if r.len() != n {
            return Err(LpError::Shape {
                row,
                found: r.len(),
                expected: n,
            });
        }
    }
    if let Some(i) = b.iter().position(Rational::is_negative) {
        return Err(LpError::NegativeRhs(i));
    }
    let width = n + m + 1;
    let rhs = n + m;
    let rows = (0..m)
        .map(|i| {
            let mut r = Vec::with_capacity(width);
            r.extend(a[i].iter().cloned());
            r.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut objective: Vec<Rational> = c.iter().map(|x| -x).collect();
    objective.resize(width, Rational::zero());
    let mut t = Tableau {
        rows,
        objective,
        basis: (n..n + m).collect(),
        width,
    };

    let mut pivots = 0;
    // Bland: lowest-index improving column, ties in the ratio test broken by
    // lowest basic variable index.
    while let Some(col) = (0..rhs).find(|&j| t.objective[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            let coef = &t.rows[i][col];
            if !coef.is_positive() {
                continue;
            }
            let ratio = &t.rows[i][rhs] / coef;
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && t.basis[i] < t.basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (row, _) = leave.ok_or(LpError::Unbounded(col))?;
        t.pivot(row, col);
        pivots += 1;
    }

    let mut primal = vec![Rational::zero(); n];
    for (i, &var) in t.basis.iter().enumerate() {
        if var < n {
            primal[var] = t.rows[i][rhs].clone();
        }
    }
    let dual = (0..m).map(|i| t.objective[n + i].clone()).collect();
    Ok(LpOptimum {
        primal,
        dual,
        value: t.objective[rhs].clone(),
        pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> Rational {
        Rational::from_integer(x)
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let a = vec![vec![r(1), r(0)], vec![r(0), r(2)], vec![r(3), r(2)]];
        let b = vec![r(4), r(12), r(18)];
        let c = vec![r(3), r(5)];
        let opt = maximize(&a, &b, &c).unwrap();
        assert_eq!(opt.primal, vec![r(2), r(6)]);
        assert_eq!(opt.value, r(36));
        // dual value equals primal value
        let dual_value: Rational = opt.dual.iter().zip(&b).map(|(y, bi)| y * bi).sum();
        assert_eq!(dual_value, r(36));
        assert_eq!(opt.dual, vec![r(0), Rational::new(3, 2), r(1)]);
    }

    #[test]
    fn detects_unbounded() {
        let a = vec![vec![r(1), r(-1)]];
        assert_eq!(maximize(&a, &[r(1)], &[r(0), r(1)]), Err(LpError::Unbounded(1)));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example cycles under the largest-coefficient rule.
        let q = |n, d| Rational::new(n, d);
        let a = vec![
            vec![q(1, 4), r(-60), q(-1, 25), r(9)],
            vec![q(1, 2), r(-90), q(-1, 50), r(3)],
            vec![r(0), r(0), r(1), r(0)],
        ];
        let b = vec![r(0), r(0), r(1)];
        let c = vec![q(3, 4), r(-150), q(1, 50), r(-6)];
        let opt = maximize(&a, &b, &c).unwrap();
        assert_eq!(opt.value, q(1, 20));
    }
}
