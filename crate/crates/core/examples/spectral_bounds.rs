//! Numerical-range bounds on Spec(T) compared with the Perron bound.

use ihara_sectors::spectral::{check_bounds, hashimoto_spectrum, DEFAULT_SLACK};
use ihara_sectors::{lookup, Graph};

fn main() {
    let graphs = [
        ("K_{1,5}", Graph::star(5)),
        ("C6", Graph::cycle(6)),
        ("Petersen", Graph::petersen()),
        ("holyG", lookup("holyG").unwrap().graph),
    ];
    for (name, g) in graphs {
        let r = check_bounds(&g, DEFAULT_SLACK).unwrap();
        println!("{name}: Re in [{:.4}, {:.4}] within [{:.4}, {:.4}]", r.re_min, r.re_max, -r.rho_s / 2.0, r.rho_l / 2.0);
        println!("    |Im| <= {:.4} (bound {:.4}),  rho(T) = {:.4} (Perron {})", r.im_max, r.sigma_max_m / 2.0, r.rho_t, r.d_max - 1);
        assert!(r.ok(), "{:?}", r.violations);
    }
    let s = hashimoto_spectrum(&lookup("holyG").unwrap().graph, 1e-8).unwrap();
    println!("holyG: {} eigenvalues, worst residual {:.2e}", s.len(), s.max_residual);
}
