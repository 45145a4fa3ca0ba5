// Scratch: p^2_{1,2}(U7) must equal sum over v'=2..p of closed U2 p^2_{1,v'}.
use bentschemes_core::closed_forms::params::closed_intersection_krein;
use bentschemes_core::closed_forms::tables::TableParams;
use bentschemes_core::partition::Family;

fn main() {
    for (p, n) in [(5u64, 4usize), (5, 6), (7, 4), (7, 6), (13, 4)] {
        let r = n / 2 + 1;
        let params = TableParams { p, n, r, h: 2, t: 2 };
        let u2 = closed_intersection_krein(Family::Uk(2), &params).unwrap();
        // U7 cell 2 = union of U2 cells 2..=p; representative w stays in a c-cell.
        let mut total = num_bigint::BigInt::from(0);
        for v in 2..=(p as usize) {
            total += &u2.p_num[2][1][v];
        }
        // candidate polynomials evaluated at (p, n)
        let pp = |e: i64| num_bigint::BigInt::from(p).pow(e as u32);
        let paper = pp(n as i64 / 2 - 2)
            * (pp(n as i64 / 2 + 1) - pp(n as i64 / 2) - 2 * (p * p) as i64 + (3 * p) as i64 + 2);
        let fixed = pp(n as i64 / 2 - 2)
            * (pp(n as i64 / 2 + 1) - pp(n as i64 / 2) - 2 * (p * p) as i64 + (3 * p) as i64 - 2);
        println!("p={p} n={n}: fusion={total} paper={paper} candidate={fixed}");
    }
}
