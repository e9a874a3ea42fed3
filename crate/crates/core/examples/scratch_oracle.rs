use lowcohom::numslice::{expr::build_from_str, generic_cohom, OracleConfig};
use std::time::Instant;

fn main() {
    let cfg = OracleConfig::default();
    let cases = [
        ("tensorR(so(4),g2)", 8i64),
        ("tensorR(so(4),spin(7))", 5),
        ("tensorR(realify(su(2)),spin(7))", 8),
        ("tensorR(realify(u(2)),spin(7))", 7),
        ("tensorR(so(5),realify(u(2)))", 6),
        ("tensorR(so(8),realify(u(2)))", 6),
        ("tensorR(so(8),realify(su(2)))", 7),
        ("tensorR(so(3),tensorH(sp(1),sp(2)))", 8),
        ("tensorR(so(3),tensorH(sp(1),sp(3)))", 9),
        ("tensorH(sp(1),symk(su(2),5))", 6),
        ("tensorH(sp(1),spin(11))", 6),
        ("tensorC(u1(1),spin(11))", 8),
        ("tensorC(u1(1),spin(12))", 6),
        ("realify(traceless(alt3(sp(3))))", 7),
        ("realify(tensorC(u1(1),traceless(alt3(sp(3)))))", 6),
        ("spin(14)", 37),
        ("spin(16)", 8),
        ("tensorR(tensorH(sp(1),sp(8)),tensorH(sp(1),sp(8)))", -999),
    ];
    for (expr, expected) in cases {
        let t0 = Instant::now();
        match build_from_str(expr) {
            Ok(rep) => {
                let built = t0.elapsed();
                let t1 = Instant::now();
                let rep_report = generic_cohom(&rep, &cfg);
                println!(
                    "{expr}: dim={} gens={} c={} h={} (expected {expected}) build={:?} oracle={:?}",
                    rep.space_dim, rep.gens.len(), rep_report.cohom, rep_report.isotropy_dim,
                    built, t1.elapsed()
                );
            }
            Err(e) => println!("{expr}: BUILD ERROR {e}"),
        }
    }
}
