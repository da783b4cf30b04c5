use restriction_lab::experiments::*;
use restriction_lab::exponents::*;
use std::time::Instant;
fn main() {
    let which = std::env::args().nth(1).unwrap_or_default();
    let t = Instant::now();
    let show = |r: &ScanResult| {
        for s in &r.samples { println!("{:e} {:e} {:e} {:e}", s.param, s.lhs, s.rhs, s.ratio); }
        println!("fit {:?} pred {:?}", r.fitted, r.predicted.as_ref().map(|p| p.slope_f64()));
    };
    match which.as_str() {
        "l2" => { let s = |x: &str| x.parse::<ExtScalar>().unwrap(); show(&l2_endpoint_scan(&s("5/18"), &s("5/18"), &s("3"), 0.25, &[3,4,5,6,7]).unwrap());
                  show(&l2_endpoint_scan(&s("1/3"), &s("1/3"), &s("2"), 0.25, &[3,4,5,6,7]).unwrap()); }
        "dual" => { show(&dual_scan(&WeightKind::Separable(SeparableParams::parse("3/5","1/8","4","2").unwrap()), &[3,4,5,6,7]).unwrap());
                    show(&dual_scan(&WeightKind::Radial(RadialParams::parse("14/15","3","5/4").unwrap()), &[3,4,5,6]).unwrap()); }
        "pitt" => { let s = |x: &str| x.parse::<ExtScalar>().unwrap(); let sc: Vec<f64> = (-6..=6).map(|k| 2f64.powi(k)).collect();
                    let r = pitt_sweep(&s("1/2"), &s("2"), &s("2"), &sc).unwrap(); for x in &r.samples { println!("{:?}", x); } println!("max {} min {}", r.max_ratio, r.min_ratio); }
        _ => { for (a,b,r,q) in [("0","0","2","6"),("1/3","1/3","2","2"),("1","1","2","2")] {
                   show(&knapp_scan(&WeightKind::Separable(SeparableParams::parse(a,b,r,q).unwrap()), &[2,3,4,5]).unwrap()); println!("{:?}", t.elapsed()); }
               show(&knapp_scan(&WeightKind::Radial(RadialParams::parse("1/2","2","2").unwrap()), &[2,3,4,5]).unwrap()); }
    }
    println!("{:?}", t.elapsed());
}
