use std::time::Instant;
use wheelworks::config::Caps;
use wheelworks::loopmodel::stationary_hamiltonian;
use wheelworks::fpl::asm_count;
use num::traits::Zero;
use num::rational::BigRational;
use num::bigint::BigInt;

fn main() {
    let mut caps = Caps::default();
    caps.hamiltonian_n_max = 12;
    for n in [6usize, 7, 8, 9, 10] {
        let t0 = Instant::now();
        let sv = stationary_hamiltonian(n, &caps).unwrap();
        let dt = t0.elapsed();
        let sum = sv.sum();
        let expect = BigRational::from_integer(BigInt::from(asm_count(n)));
        assert_eq!(sum, expect);
        assert!(!sv.values.values().any(|v| v.is_zero()));
        println!("n={n}: dim={} solved in {:.2?}, sum ok", sv.values.len(), dt);
    }
}
