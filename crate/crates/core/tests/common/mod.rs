//! Random germs and expressions shared by the integration tests.

#![allow(dead_code)]

use germring::exactalg::{GaussianRational, Poly, RatFunc};
use germring::germ::ExpPolyGerm;
use rand::{Rng, RngCore};

pub fn gaussian(rng: &mut impl RngCore, bound: i64) -> GaussianRational {
    let re = GaussianRational::from_frac(rng.random_range(-bound..=bound), rng.random_range(1..=3));
    let im = GaussianRational::from_int(rng.random_range(-1..=1)) * GaussianRational::i();
    re + im
}

pub fn poly(rng: &mut impl RngCore, max_degree: usize) -> Poly {
    let d = rng.random_range(0..=max_degree);
    Poly::from_coeffs((0..=d).map(|_| gaussian(rng, 4)).collect())
}

/// A polynomial that does not vanish at `z0`.
pub fn unit_at(rng: &mut impl RngCore, z0: &GaussianRational) -> Poly {
    let p = poly(rng, 3);
    let v = p.eval(z0);
    if v == GaussianRational::from_int(0) {
        &p + &Poly::one()
    } else {
        p
    }
}

/// `(z − z0)^k·u(z)/v(z)·e^{P}` with `u(z0), v(z0) ≠ 0`, so its order at
/// `z0` is `k` by construction.
pub fn germ_with_order(rng: &mut impl RngCore, z0: &GaussianRational, k: i64) -> ExpPolyGerm {
    let u = unit_at(rng, z0);
    let v = unit_at(rng, z0);
    let rat = RatFunc::from_poly(Poly::linear_root(z0)).powi(k) * RatFunc::new(u, v);
    ExpPolyGerm::new(rat, poly(rng, 3))
}

pub fn base_point(rng: &mut impl RngCore) -> GaussianRational {
    match rng.random_range(0..3) {
        0 => GaussianRational::from_int(0),
        1 => GaussianRational::from_int(rng.random_range(-2..=2)),
        _ => gaussian(rng, 2),
    }
}

fn constant_text(rng: &mut impl RngCore) -> String {
    match rng.random_range(0..4) {
        0 => format!("{}", rng.random_range(1..=9)),
        1 => format!("{}/{}", rng.random_range(1..=9), rng.random_range(2..=5)),
        2 => "i".to_string(),
        _ => format!("{}i", rng.random_range(1..=4)),
    }
}

/// A polynomial in `z` as text, for use inside `exp( )`.
fn poly_text(rng: &mut impl RngCore) -> String {
    let terms = rng.random_range(1..=3);
    let mut out = String::new();
    for t in 0..terms {
        if t > 0 {
            out += if rng.random_bool(0.5) { " + " } else { " - " };
        }
        match rng.random_range(0..3) {
            0 => out += &constant_text(rng),
            1 => out += &format!("{}*z", constant_text(rng)),
            _ => out += &format!("z^{}", rng.random_range(1..=3)),
        }
    }
    out
}

fn factor_text(rng: &mut impl RngCore, depth: u32) -> String {
    let base = match rng.random_range(0..if depth == 0 { 3 } else { 5 }) {
        0 => "z".to_string(),
        1 => constant_text(rng),
        2 => format!("(z - {})", constant_text(rng)),
        3 => format!("exp({})", poly_text(rng)),
        _ => format!("({})", expr_text(rng, depth - 1)),
    };
    if rng.random_bool(0.3) {
        format!("{base}^{}", rng.random_range(-3..=3))
    } else {
        base
    }
}

/// Products and quotients of factors, with rational-only sums nested inside.
pub fn expr_text(rng: &mut impl RngCore, depth: u32) -> String {
    let mut out = factor_text(rng, depth);
    for _ in 0..rng.random_range(0..3) {
        out += if rng.random_bool(0.7) { "*" } else { "/" };
        out += &factor_text(rng, depth);
    }
    if depth > 0 && rng.random_bool(0.3) {
        // a sum of two rational terms times the rest
        out = format!("({} + {})*{out}", constant_text(rng), "z");
    }
    if rng.random_bool(0.2) {
        out = format!("-{out}");
    }
    out
}
