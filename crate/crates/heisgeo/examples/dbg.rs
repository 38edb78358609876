fn main() {
    let sph = heisgeo::surface::Surface::cc_sphere();
    let start = heisgeo::surface::sphere_profile_point(std::f64::consts::PI / 2.0, 0.3);
    println!("start g = {:e}", sph.g(start));
    let curve = heisgeo::curvature::horizontal_curve(&sph, start, (-0.05, 0.05), 1e-3).unwrap();
    let mut worst = 0.0f64;
    let mut worst_tau = 0.0;
    for &(tau, q) in &curve.samples {
        let g = sph.g(q).abs();
        if g > worst { worst = g; worst_tau = tau; }
    }
    println!("worst |g| = {:e} at tau = {}", worst, worst_tau);
    for &(tau, q) in curve.samples.iter().step_by(20) {
        println!("tau={:+.3} rho={:.6} t={:.6} g={:+.3e}", tau, q.z_norm(), q.t, sph.g(q));
    }
}
