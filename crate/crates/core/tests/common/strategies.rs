use proptest::prelude::*;
use quasiherm::{Complex64, ComplexMatrix};

pub fn complex_matrix(
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = ComplexMatrix> {
    sizes.prop_flat_map(|n| {
        prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n * n).prop_map(move |v| {
            let entries = v
                .into_iter()
                .map(|(re, im)| Complex64::new(re, im))
                .collect();
            ComplexMatrix::from_row_major(n, n, entries).unwrap()
        })
    })
}

pub fn hermitian_matrix(
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = ComplexMatrix> {
    complex_matrix(sizes).prop_map(|m| m.hermitian_part())
}
