// temporary probe
use prefstat::geom::Point;
use prefstat::mesh::{build_mesh, DomainPolygon, MeshParams};
use prefstat::spde::{fem_matrices, matern_precision, MaternParams};

fn main() {
    for (me, band) in [(0.9, true), (0.75, true), (0.6, true), (0.75, false)] {
        let domain = DomainPolygon::rectangle(Point::new(0.0, 0.0), Point::new(10.0, 10.0));
        let mesh = build_mesh(&domain, &MeshParams { min_edge: 0.4*me, max_edge: me, min_angle_deg: 25.0, exterior_band: band }).unwrap();
        let fem = fem_matrices(&mesh).unwrap();
        let n = fem.n();
        let q = matern_precision(&fem, &MaternParams::new(2.0, 1.0).unwrap()).unwrap();
        let dense = nalgebra::DMatrix::from_fn(n, n, |i, j| *q.get(i, j).unwrap_or(&0.0));
        let cov = dense.try_inverse().unwrap();
        for w in [2.0, 3.0] {
            let interior: Vec<usize> = (0..n).filter(|&v| { let p = mesh.vertices()[v]; p.x > w && p.x < 10.0-w && p.y > w && p.y < 10.0-w }).collect();
            let sds: Vec<f64> = interior.iter().map(|&v| cov[(v,v)].sqrt()).collect();
            let mn = sds.iter().cloned().fold(f64::INFINITY, f64::min);
            let mx = sds.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let mean = sds.iter().sum::<f64>()/sds.len() as f64;
            println!("edge {me} band {band} n {n} window {w}: sd min {mn:.4} mean {mean:.4} max {mx:.4}");
        }
    }
}
