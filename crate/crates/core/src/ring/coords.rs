use serde::{Deserialize, Serialize};

use crate::arith::{random_point, CoordLayout, FiniteField, Matrix, RatFunc, Scalar};
use crate::simplicial::{Face, SimplicialComplex};
use crate::{Error, Result};

/// How the coordinates were produced; recorded in certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum CoordMode {
    Generic { seed: u64, attempt: usize },
    Symbolic,
    MomentCurve { params: Vec<i64> },
    Explicit,
}

/// A `d x n` coordinate matrix (one column per vertex) together with one
/// extra reference column used for volume elements.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordMatrix<S> {
    layout: CoordLayout,
    values: Vec<S>,
    mode: CoordMode,
}

impl<S: Scalar> CoordMatrix<S> {
    /// `values` holds the columns one after another followed by the
    /// reference column.
    pub fn from_flat(dim: usize, columns: usize, values: Vec<S>, mode: CoordMode) -> Result<Self> {
        let layout = CoordLayout::new(dim, columns);
        if values.len() != layout.width() {
            return Err(Error::Dimension(format!("{} coordinate values for a {dim}x{columns} matrix with reference column", values.len())));
        }
        Ok(CoordMatrix { layout, values, mode })
    }

    /// Row-major `d x n` matrix plus reference column.
    pub fn explicit(rows: Vec<Vec<S>>, reference: Vec<S>) -> Result<Self> {
        let dim = rows.len();
        let columns = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != columns) {
            return Err(Error::Dimension("ragged coordinate matrix".into()));
        }
        if reference.len() != dim {
            return Err(Error::Dimension("reference column length differs from row count".into()));
        }
        let mut values = Vec::with_capacity((columns + 1) * dim);
        for c in 0..columns {
            values.extend(rows.iter().map(|r| r[c].clone()));
        }
        values.extend(reference);
        CoordMatrix::from_flat(dim, columns, values, CoordMode::Explicit)
    }

    /// Columns at the moment curve `(t, t^2, ..., t^d)`.
    pub fn moment_curve(dim: usize, params: &[i64], reference: Vec<S>) -> Result<Self> {
        let ts: Vec<S> = params.iter().map(|&t| S::from_i64(t)).collect();
        for i in 0..ts.len() {
            for j in 0..i {
                if ts[i] == ts[j] {
                    return Err(Error::Domain(format!("moment-curve parameters {} and {} coincide in the field", params[j], params[i])));
                }
            }
        }
        let mut values = Vec::with_capacity((ts.len() + 1) * dim);
        for t in &ts {
            let mut p = t.clone();
            for _ in 0..dim {
                values.push(p.clone());
                p = p * t.clone();
            }
        }
        if reference.len() != dim {
            return Err(Error::Dimension("reference column length differs from dimension".into()));
        }
        values.extend(reference);
        CoordMatrix::from_flat(dim, ts.len(), values, CoordMode::MomentCurve { params: params.to_vec() })
    }

    pub fn dim(&self) -> usize {
        self.layout.dim
    }

    pub fn columns(&self) -> usize {
        self.layout.columns
    }

    pub fn layout(&self) -> CoordLayout {
        self.layout
    }

    pub fn mode(&self) -> &CoordMode {
        &self.mode
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.values[self.layout.var(row, col)]
    }

    pub fn column(&self, col: usize) -> &[S] {
        let d = self.dim();
        &self.values[col * d..(col + 1) * d]
    }

    pub fn reference(&self) -> &[S] {
        let d = self.dim();
        &self.values[self.columns() * d..]
    }

    /// Every vertex of `c` needs a nonzero column, and the matrix needs one
    /// row per parameter.
    pub fn check_for(&self, c: &SimplicialComplex) -> Result<()> {
        if self.columns() != c.universe() {
            return Err(Error::Dimension(format!("{} coordinate columns for {} vertices", self.columns(), c.universe())));
        }
        if self.dim() != c.top_size() {
            return Err(Error::Dimension(format!("{} coordinate rows for a complex with d = {}", self.dim(), c.top_size())));
        }
        for v in c.vertex_set().vertices() {
            if self.column(v).iter().all(Scalar::is_zero) {
                return Err(Error::DegenerateLsop(format!("vertex {} has a zero coordinate column", c.label(v))));
            }
        }
        Ok(())
    }

    /// Determinant of the columns of `face` in increasing vertex order.
    pub fn minor(&self, face: Face) -> Result<S> {
        if face.len() != self.dim() {
            return Err(Error::Dimension(format!("minor of {} columns in dimension {}", face.len(), self.dim())));
        }
        let cols: Vec<Vec<S>> = face.vertices().map(|v| self.column(v).to_vec()).collect();
        Ok(S::determinant(&Matrix::from_columns(self.dim(), &cols)))
    }

    /// Determinant of the columns of `face` with vertex `i` replaced by the
    /// reference column.
    pub fn volume_element(&self, face: Face, i: usize) -> Result<S> {
        if face.len() != self.dim() || !face.contains(i) {
            return Err(Error::Domain(format!("volume element of {face:?} minus {i}")));
        }
        let cols: Vec<Vec<S>> = face.vertices().map(|v| if v == i { self.reference().to_vec() } else { self.column(v).to_vec() }).collect();
        Ok(S::determinant(&Matrix::from_columns(self.dim(), &cols)))
    }

    /// Coordinates of the suspension in one more dimension: base vertex `v`
    /// at `(V_v, heights[v])`, north at `+e` and south at `-e`, where `e` is
    /// the new unit vector. The reference column gets `reference_height`.
    pub fn suspension_lift(&self, heights: &[S], reference_height: S) -> Result<CoordMatrix<S>> {
        if heights.len() != self.columns() {
            return Err(Error::Dimension("one height per vertex required".into()));
        }
        let d = self.dim();
        let mut values = Vec::with_capacity((self.columns() + 3) * (d + 1));
        for (v, h) in heights.iter().enumerate() {
            values.extend(self.column(v).iter().cloned());
            values.push(h.clone());
        }
        values.extend(std::iter::repeat_with(S::zero).take(d));
        values.push(S::one());
        values.extend(std::iter::repeat_with(S::zero).take(d));
        values.push(-S::one());
        values.extend(self.reference().iter().cloned());
        values.push(reference_height);
        CoordMatrix::from_flat(d + 1, self.columns() + 2, values, self.mode.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CoordMatrix<T> {
        CoordMatrix { layout: self.layout, values: self.values.iter().map(f).collect(), mode: self.mode.clone() }
    }
}

/// Uniformly random coordinates, reproducible from `(seed, attempt)`.
pub fn generic_coords<F: FiniteField>(dim: usize, columns: usize, seed: u64, attempt: usize) -> CoordMatrix<F> {
    let layout = CoordLayout::new(dim, columns);
    let values = random_point(layout.width(), seed, attempt);
    CoordMatrix { layout, values, mode: CoordMode::Generic { seed, attempt } }
}

/// Independent indeterminates; entry `(r, c)` is variable `c * dim + r`.
pub fn symbolic_coords<F: Scalar>(dim: usize, columns: usize) -> CoordMatrix<RatFunc<F>> {
    let layout = CoordLayout::new(dim, columns);
    let values = (0..layout.width()).map(RatFunc::var).collect();
    CoordMatrix { layout, values, mode: CoordMode::Symbolic }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{specialize_ratfunc, Mersenne31, Mersenne61, F5};
    use crate::simplicial::named;

    #[test]
    fn symbolic_minor_specializes_to_numeric_minor() {
        let sym = symbolic_coords::<Mersenne31>(3, 4);
        let point: Vec<Mersenne31> = random_point(sym.layout().width(), 11, 0);
        let num = CoordMatrix::from_flat(3, 4, point.clone(), CoordMode::Explicit).unwrap();
        let f = Face::from_vertices([0, 2, 3]);
        let s = specialize_ratfunc(&sym.minor(f).unwrap(), &point).unwrap();
        assert_eq!(s, num.minor(f).unwrap());
        let e = specialize_ratfunc(&sym.volume_element(f, 2).unwrap(), &point).unwrap();
        assert_eq!(e, num.volume_element(f, 2).unwrap());
    }

    #[test]
    fn moment_curve_rejects_repeats() {
        let m = CoordMatrix::<Mersenne61>::moment_curve(2, &[1, 2, 3], vec![Mersenne61::new(5), Mersenne61::new(9)]).unwrap();
        assert_eq!(m.column(1), &[Mersenne61::new(2), Mersenne61::new(4)]);
        assert!(CoordMatrix::<Mersenne61>::moment_curve(2, &[1, 2, 2], vec![Mersenne61::one(); 2]).is_err());
        // 1 and 6 coincide mod 5
        assert!(CoordMatrix::<F5>::moment_curve(2, &[1, 6], vec![F5::one(); 2]).is_err());
    }

    #[test]
    fn zero_column_is_degenerate() {
        let tri = named::boundary_simplex(2);
        let m =
            CoordMatrix::explicit(vec![vec![F5::one(), F5::zero(), F5::one()], vec![F5::zero(), F5::zero(), F5::one()]], vec![F5::one(), F5::new(2)])
                .unwrap();
        assert!(matches!(m.check_for(&tri), Err(Error::DegenerateLsop(_))));
    }

    #[test]
    fn suspension_lift_shape() {
        let m = generic_coords::<Mersenne61>(2, 3, 1, 0);
        let h: Vec<Mersenne61> = vec![Mersenne61::new(1), Mersenne61::new(2), Mersenne61::new(3)];
        let l = m.suspension_lift(&h, Mersenne61::new(4)).unwrap();
        assert_eq!((l.dim(), l.columns()), (3, 5));
        assert_eq!(l.column(3), &[Mersenne61::zero(), Mersenne61::zero(), Mersenne61::one()]);
        assert_eq!(l.column(1)[2], Mersenne61::new(2));
    }
}
