//! Line-graph-cospectral pair separated only by the correction factor:
//! det(I - wT) = det(I - (w/2) L) C(w) on two 12-vertex graphs with equal
//! spectra of A and L.

use ihara_sectors::linalg::FractionText;
use ihara_sectors::lookup;
use ihara_sectors::zeta::{factorize, resolution_compare};

fn main() {
    let g = lookup("holyG").unwrap().graph;
    let h = lookup("holyH").unwrap().graph;
    let fg = factorize(&g, 8);
    let fh = factorize(&h, 8);
    println!("line factors equal: {}", fg.line_factor == fh.line_factor);
    println!("factorizations exact: {} {}", fg.is_exact(), fh.is_exact());
    for k in 0..=8 {
        println!(
            "k = {k}: [w^k] det {:>6} {:>6}   c_k {:>14} {:>14}",
            fg.hashimoto_det.coeff(k).to_string(),
            fh.hashimoto_det.coeff(k).to_string(),
            fg.correction_series.coeff(k).to_fraction(),
            fh.correction_series.coeff(k).to_fraction(),
        );
    }
    let d = resolution_compare(&g, &h, 8);
    println!(
        "first divergence: det at {:?}, correction at {:?}, gap {}",
        d.det_first_diff_order,
        d.correction_first_diff_order,
        d.det_gap.map(|r| r.to_fraction()).unwrap_or_default()
    );
}
