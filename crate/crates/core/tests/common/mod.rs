#![allow(dead_code)]

use qappell::{AscParams, QParam, QPoly, QuasiParams, Rational};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn poly_i(cs: &[i64]) -> QPoly {
    QPoly::from_coeffs(cs.iter().map(|&c| Rational::from(c)).collect())
}

pub fn rand_rational(rng: &mut impl Rng) -> Rational {
    r(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn rand_nonzero(rng: &mut impl Rng) -> Rational {
    loop {
        let n = rng.gen_range(-6i64..=6);
        if n != 0 {
            return r(n, rng.gen_range(1..=4));
        }
    }
}

/// Draws a base with |q| not in {0, 1}; the reduced value can only land on
/// 0 or +-1 when |numerator| equals |denominator|, which is rejected.
pub fn rand_q(rng: &mut impl Rng) -> QParam {
    loop {
        let n = rng.gen_range(-6i64..=6);
        let d = rng.gen_range(1i64..=4);
        if n != 0 && n != d && n != -d {
            return QParam::new(r(n, d)).unwrap();
        }
    }
}

pub fn rand_poly(rng: &mut impl Rng, max_degree: usize) -> QPoly {
    let len = rng.gen_range(0..=max_degree + 1);
    QPoly::from_coeffs((0..len).map(|_| rand_rational(rng)).collect())
}

pub fn asc_tuples(seed: u64, count: usize) -> Vec<AscParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| AscParams::new(rand_nonzero(&mut rng), rand_q(&mut rng)).unwrap())
        .collect()
}

pub fn quasi_tuples(seed: u64, count: usize) -> Vec<QuasiParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let alpha = rand_nonzero(&mut rng);
            let beta = rand_nonzero(&mut rng);
            let lambda = rand_nonzero(&mut rng);
            let q = rand_q(&mut rng);
            // The tail weight of the extended recurrence vanishes exactly
            // when lambda equals q / (alpha (1 - q)) or q / (beta (1 - q));
            // those tuples degenerate to a plain three-term recurrence and
            // are exercised separately via the orthogonal families, so
            // resample them here.
            let one_minus_q = Rational::one() - q.value();
            if lambda == q.value() / (&alpha * &one_minus_q)
                || lambda == q.value() / (&beta * &one_minus_q)
            {
                continue;
            }
            return QuasiParams::new(alpha, beta, lambda, q).unwrap();
        })
        .collect()
}

/// Coordinates of `p` in the graded basis `members[0..]`, found by repeated
/// leading-term elimination. Panics when the basis cannot express `p`, which
/// for a degree-graded basis never happens as long as it extends far enough.
pub fn expand_in_basis(p: &QPoly, members: &[QPoly]) -> Vec<Rational> {
    let mut coords = vec![Rational::zero(); members.len()];
    let mut rem = p.clone();
    while let Some(d) = rem.degree() {
        assert!(d < members.len(), "basis too short for degree {d}");
        let member = &members[d];
        assert_eq!(member.degree(), Some(d), "basis is not degree-graded");
        let t = rem.leading().unwrap() / member.leading().unwrap();
        rem = rem - member.scale(&t);
        coords[d] = t;
    }
    coords
}
