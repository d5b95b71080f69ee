//! Derivatives with respect to coordinate columns.
//!
//! Coordinates of an `dim x columns` matrix are indeterminates numbered
//! column by column, followed by one extra reference column.

use super::{Jet, RatFunc, Scalar};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoordLayout {
    pub dim: usize,
    pub columns: usize,
}

impl CoordLayout {
    pub fn new(dim: usize, columns: usize) -> Self {
        CoordLayout { dim, columns }
    }

    pub fn var(&self, row: usize, col: usize) -> usize {
        debug_assert!(row < self.dim && col < self.columns);
        col * self.dim + row
    }

    pub fn reference_var(&self, row: usize) -> usize {
        self.columns * self.dim + row
    }

    /// Number of indeterminates including the reference column.
    pub fn width(&self) -> usize {
        (self.columns + 1) * self.dim
    }
}

/// Vary column `column` in the direction of the sum of the columns listed
/// in `toward`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMove {
    pub column: usize,
    pub toward: Vec<usize>,
}

impl ColumnMove {
    pub fn new(column: usize, toward: Vec<usize>) -> Self {
        ColumnMove { column, toward }
    }
}

fn check_moves(layout: &CoordLayout, moves: &[ColumnMove]) -> Result<()> {
    let mut seen = vec![false; layout.columns];
    for m in moves {
        if m.column >= layout.columns || m.toward.iter().any(|&c| c >= layout.columns) {
            return Err(Error::Domain(format!("column move {m:?} outside {} columns", layout.columns)));
        }
        if std::mem::replace(&mut seen[m.column], true) {
            return Err(Error::Domain(format!("column {} varied twice", m.column)));
        }
    }
    // a direction that depends on another varied column would not commute
    for m in moves {
        for other in moves {
            if other.column != m.column && m.toward.contains(&other.column) {
                return Err(Error::Domain(format!("direction of column {} depends on varied column {}", m.column, other.column)));
            }
        }
    }
    Ok(())
}

/// Compose the first-order operators `sum_r w_r d/dV[r, column]`, where
/// `w` is the sum of the `toward` columns, over all moves.
pub fn directional_derivative<F: Scalar>(f: &RatFunc<F>, layout: &CoordLayout, moves: &[ColumnMove]) -> Result<RatFunc<F>> {
    check_moves(layout, moves)?;
    let mut acc = f.clone();
    for m in moves {
        let mut next = RatFunc::zero();
        for row in 0..layout.dim {
            let d = acc.partial_derivative(layout.var(row, m.column));
            if d.is_zero() {
                continue;
            }
            let w = m.toward.iter().fold(RatFunc::zero(), |s, &c| s + RatFunc::var(layout.var(row, c)));
            next = next + d * w;
        }
        acc = next;
    }
    Ok(acc)
}

/// Coordinates at `point` with each varied column perturbed along its own
/// nilpotent. Evaluating a function on these jets and reading
/// [`full_mask`] gives the composed directional derivative at `point`.
pub fn jet_point<F: Scalar>(layout: &CoordLayout, point: &[F], moves: &[ColumnMove]) -> Result<Vec<Jet<F>>> {
    check_moves(layout, moves)?;
    if point.len() < layout.columns * layout.dim {
        return Err(Error::Dimension(format!("point has {} values, layout needs {}", point.len(), layout.columns * layout.dim)));
    }
    let mut out: Vec<Jet<F>> = point.iter().cloned().map(Jet::constant).collect();
    for (k, m) in moves.iter().enumerate() {
        for row in 0..layout.dim {
            let w = m.toward.iter().fold(F::zero(), |s, &c| s + point[layout.var(row, c)].clone());
            let v = layout.var(row, m.column);
            out[v] = Jet::perturbed(point[v].clone(), w, k);
        }
    }
    Ok(out)
}

/// Mask of the top coefficient for `moves.len()` nilpotents.
pub fn full_mask(moves: usize) -> usize {
    (1 << moves) - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{specialize_ratfunc, Mersenne61};

    type R = RatFunc<Mersenne61>;

    fn det2(l: &CoordLayout, a: usize, b: usize) -> R {
        let v = |r, c| R::var(l.var(r, c));
        v(0, a) * v(1, b) - v(1, a) * v(0, b)
    }

    #[test]
    fn determinant_is_multilinear() {
        // moving column a toward a scales det(V_a, V_b) by one: d = det
        let l = CoordLayout::new(2, 3);
        let f = det2(&l, 0, 1);
        let d = directional_derivative(&f, &l, &[ColumnMove::new(0, vec![0])]).unwrap();
        assert_eq!(d, f);
        // moving a toward b yields det(V_b, V_b) = 0
        let d = directional_derivative(&f, &l, &[ColumnMove::new(0, vec![1])]).unwrap();
        assert!(d.is_zero());
        // moving a toward c yields det(V_c, V_b)
        let d = directional_derivative(&f, &l, &[ColumnMove::new(0, vec![2])]).unwrap();
        assert_eq!(d, det2(&l, 2, 1));
    }

    #[test]
    fn jets_agree_with_symbolic() {
        let l = CoordLayout::new(2, 4);
        let f = det2(&l, 0, 1) * det2(&l, 2, 3).try_inv().unwrap() * det2(&l, 0, 3);
        let moves = [ColumnMove::new(0, vec![1, 0]), ColumnMove::new(3, vec![2, 3])];
        let sym = directional_derivative(&f, &l, &moves).unwrap();
        let point: Vec<Mersenne61> = (0..l.width()).map(|i| Mersenne61::new(3 + 7 * i as u64 * i as u64)).collect();
        let expected = specialize_ratfunc(&sym, &point).unwrap();
        let jets = jet_point(&l, &point, &moves).unwrap();
        let val = specialize_ratfunc(&f, &jets).unwrap();
        assert_eq!(val.coeff(full_mask(2)), expected);
    }

    #[test]
    fn rejects_repeated_or_dependent_columns() {
        let l = CoordLayout::new(2, 3);
        let f = det2(&l, 0, 1);
        assert!(directional_derivative(&f, &l, &[ColumnMove::new(0, vec![1]), ColumnMove::new(0, vec![2])]).is_err());
        assert!(directional_derivative(&f, &l, &[ColumnMove::new(0, vec![1]), ColumnMove::new(1, vec![2])]).is_err());
        assert!(directional_derivative(&f, &l, &[ColumnMove::new(5, vec![1])]).is_err());
    }
}
