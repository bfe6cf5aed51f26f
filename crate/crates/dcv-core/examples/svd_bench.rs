use ndarray::Array2;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for &(n, p) in &[(36usize, 30usize), (144, 90), (576, 270), (36, 270), (159, 90)] {
        let x = Array2::from_shape_fn((n, p), |_| rng.random::<f64>() - 0.5);
        let t0 = Instant::now();
        let reps = if n * p > 50_000 { 5 } else { 50 };
        let mut acc = 0.0;
        for _ in 0..reps {
            let es = dcv_core::spectra::gram_eigen(&x.view()).unwrap();
            acc += es.values()[0];
        }
        let dt = t0.elapsed().as_secs_f64() / reps as f64;
        println!("({n:4},{p:4}): {:8.2} ms per gram_eigen  (acc {acc:.3})", dt * 1e3);
    }
}
