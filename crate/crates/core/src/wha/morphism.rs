//! Algebra maps between presented algebras.

use crate::exactlin::Matrix;
use crate::report::{tuples, AxiomReport, Check, Witness};

use super::presentation::AlgebraPresentation;

/// Checks that the matrix `f` (columns are images of basis vectors) is a
/// unital algebra map `src → dst`, and records whether it is bijective.
pub fn verify_algebra_map(src: &AlgebraPresentation, dst: &AlgebraPresentation, f: &Matrix) -> AxiomReport {
    let mut report = AxiomReport::new();
    if f.rows() != dst.dim() || f.cols() != src.dim() {
        report.push(Check::fail("map_shape", Witness::at(vec![f.rows(), f.cols()])));
        return report;
    }
    let n = src.dim();
    report.push(Check::exhaustive("map_multiplicative", tuples(&[n, n]), |t| {
        let lhs = f.mul_vec(src.basis_product(t[0], t[1]));
        let rhs = dst.mul(&f.column(t[0]), &f.column(t[1]));
        (lhs, rhs)
    }));
    report.push(Check::exhaustive("map_unital", tuples(&[1]), |_| {
        (f.mul_vec(src.unit()), dst.unit().to_vec())
    }));
    report.push(Check::from_bool("map_bijective", f.is_square() && f.inverse().is_some(), || {
        Witness::at(vec![f.rows(), f.cols(), f.rank()])
    }));
    report
}
