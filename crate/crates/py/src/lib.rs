use pyo3::prelude::*;

#[pyfunction]
fn q_function(x: f64) -> f64 {
    ofdm_im_core::analysis::q_function(x)
}

#[pymodule]
fn ofdm_im(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(q_function, m)?)?;
    Ok(())
}
