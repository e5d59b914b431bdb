//! Multiplicative relations of a germ family, the defining ideal `𝔭` of
//! `S = F[f₁, …, f_r]`, and presentations of `S`, `S̄`, `S^hol`, `S̄^hol`.

mod certificates;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::exactalg::{factor_refine, zkernel, GaussianRational, IntMatrix, Poly, Rational};
use crate::germ::{germ_monomial, order_vector, GermFamily};
use crate::grobner::{eliminate, saturate, IdealBasis, MPoly, Monomial};
use crate::semigroup::{hilbert_basis, hilbert_basis_tilde, HilbertBasis};
use crate::toric::{generator_names, x_names, xy_names};

pub use certificates::{
    algebraic_independence, augmented_independence, linear_independence, transformed_independence,
    wronskian_over_c, Field, Hypothesis, IndependenceCertificate, Verdict, Witness, Wronskian,
};

/// Cap on the `H̃` Hilbert basis used by [`present_sbarhol`].
pub const DEFAULT_GEN_CAP: usize = 5000;

/// `f^a = lc·e^κ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationConstant {
    pub lc: GaussianRational,
    pub kappa: GaussianRational,
}

impl RelationConstant {
    pub fn is_rational(&self) -> bool {
        self.kappa.is_zero()
    }
}

impl fmt::Display for RelationConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kappa.is_zero() {
            write!(f, "{}", self.lc)
        } else {
            write!(f, "{}*exp({})", self.lc.to_expr_string(), self.kappa.to_expr_string())
        }
    }
}

/// `{a ∈ ℤ^r : f^a is a nonzero constant}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationLattice {
    pub basis: Vec<Vec<i64>>,
    pub constants: Vec<RelationConstant>,
    /// Rank of `{a : P_a constant}`, which contains the lattice.
    pub exp_rank: usize,
}

impl RelationLattice {
    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exactness {
    Exact,
    /// The ideal is contained in the true one; further relations may exist.
    LowerBound,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::Exact => "Exact",
            Exactness::LowerBound => "LowerBound",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub relations: IdealBasis,
    pub exactness: Exactness,
}

impl Presentation {
    pub fn ring(&self) -> &[String] {
        &self.relations.vars
    }
}

/// Integer rows spanning the same `ℤ`-kernel as a row of `ℚ(i)` entries:
/// real and imaginary parts, denominators cleared.
fn integer_rows(row: &[GaussianRational]) -> Vec<Vec<BigInt>> {
    let part = |f: fn(&GaussianRational) -> &Rational| -> Option<Vec<BigInt>> {
        let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(f(c).denom()));
        let v: Vec<BigInt> = row.iter().map(|c| (f(c) * Rational::from(l.clone())).to_integer()).collect();
        v.iter().any(|x| !x.is_zero()).then_some(v)
    };
    [part(|c| &c.re), part(|c| &c.im)].into_iter().flatten().collect()
}

fn exp_rows(exps: &[&Poly]) -> Vec<Vec<BigInt>> {
    let top = exps.iter().map(|p| p.degree_or_zero()).max().unwrap_or(0);
    (1..=top)
        .flat_map(|d| integer_rows(&exps.iter().map(|p| p.coeff(d)).collect::<Vec<_>>()))
        .collect()
}

fn kernel_i64(cols: usize, rows: Vec<Vec<BigInt>>) -> Vec<Vec<i64>> {
    zkernel(&IntMatrix::from_rows(cols, rows))
        .into_iter()
        .map(|v| v.iter().map(|x| x.to_i64().expect("kernel entry fits in i64")).collect())
        .collect()
}

pub fn relation_lattice(fam: &GermFamily) -> Result<RelationLattice> {
    let germs = fam.germs()?;
    let r = germs.len();
    let exps: Vec<&Poly> = germs.iter().map(|g| &g.exp).collect();

    let mut polys = Vec::new();
    for g in &germs {
        polys.push(g.rat.num().clone());
        polys.push(g.rat.den().clone());
    }
    let refinement = factor_refine(&polys)?;
    let mut rows: Vec<Vec<BigInt>> = (0..refinement.base.len())
        .map(|k| {
            (0..r)
                .map(|j| {
                    BigInt::from(refinement.exps[2 * j][k]) - BigInt::from(refinement.exps[2 * j + 1][k])
                })
                .collect()
        })
        .collect();
    let p_rows = exp_rows(&exps);
    let exp_rank = kernel_i64(r, p_rows.clone()).len();
    rows.extend(p_rows);

    let basis = kernel_i64(r, rows);
    let constants = basis
        .iter()
        .map(|a| {
            let g = germ_monomial(fam, a)?;
            debug_assert!(g.is_constant(), "lattice vector gives a nonconstant monomial");
            Ok(RelationConstant {
                lc: g.rat.as_constant().expect("constant rational part"),
                kappa: g.exp.constant_term(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RelationLattice { basis, constants, exp_rank })
}

fn split(a: &[i64]) -> (Monomial, Monomial) {
    let pos = a.iter().map(|&x| x.max(0) as u32).collect();
    let neg = a.iter().map(|&x| (-x).max(0) as u32).collect();
    (pos, neg)
}

/// `𝔭`: binomials `x^{a⁺} − lc·x^{a⁻}` of the lattice basis, saturated at
/// `x₁⋯x_r`, as a reduced Gröbner basis.
///
/// Exact when `{a : P_a constant}` exceeds the lattice by rank at most one.
/// Then the monomials `f^a` fall into classes by `P_a` modulo constants,
/// distinct classes are linearly independent over `ℂ(z)`, and inside a class
/// the rational parts are powers of a single rational function up to
/// constants, so every relation is a lattice binomial. Otherwise
/// rational functions such as `z`, `z + 1` may satisfy linear relations the
/// lattice does not see.
pub fn defining_ideal(fam: &GermFamily, token: &CancelToken) -> Result<Presentation> {
    let lattice = relation_lattice(fam)?;
    if let Some(c) = lattice.constants.iter().find(|c| !c.is_rational()) {
        return Err(Error::NonRationalConstant(c.to_string()));
    }
    let r = fam.len();
    let vars = x_names(r);
    let gens: Vec<MPoly> = lattice
        .basis
        .iter()
        .zip(&lattice.constants)
        .map(|(a, c)| {
            let (pos, neg) = split(a);
            MPoly::binomial(pos, c.lc.clone(), neg)
        })
        .collect();
    let relations = if gens.is_empty() {
        IdealBasis::zero(vars)
    } else {
        saturate(&IdealBasis::new(vars, gens), &vec![1; r], token)?.reduced(token)?
    };
    let exactness = if lattice.exp_rank <= lattice.basis.len() + 1 {
        Exactness::Exact
    } else {
        Exactness::LowerBound
    };
    Ok(Presentation { relations, exactness })
}

/// `S ≅ F[x₁, …, x_r]/𝔭`.
pub fn present_s(fam: &GermFamily, token: &CancelToken) -> Result<Presentation> {
    defining_ideal(fam, token)
}

/// `𝔭̄ = 𝔭 + (x₁y₁ − 1, …, x_ry_r − 1)` in `F[x, y]`.
pub fn present_sbar(fam: &GermFamily, token: &CancelToken) -> Result<Presentation> {
    Ok(bar(&defining_ideal(fam, token)?))
}

/// `𝔭̄` from a presentation of `S` in `x₁, …, x_r`.
pub fn bar(p: &Presentation) -> Presentation {
    let r = p.relations.nvars();
    let lift: Vec<Option<usize>> = (0..r).map(Some).collect();
    let mut gens: Vec<MPoly> = p.relations.gens.iter().map(|g| g.remap(2 * r, &lift)).collect();
    for j in 0..r {
        let mut m = vec![0u32; 2 * r];
        m[j] = 1;
        m[r + j] = 1;
        gens.push(MPoly::binomial(m, GaussianRational::one(), vec![0; 2 * r]));
    }
    Presentation { relations: IdealBasis::new(xy_names(r), gens), exactness: p.exactness }
}

/// `S^hol ≅ F[t₁, …, t_m]/Φ⁻¹(𝔭 ∩ F[H])`.
pub fn present_shol(fam: &GermFamily, token: &CancelToken) -> Result<Presentation> {
    let p = defining_ideal(fam, token)?;
    shol_from_ideal(&order_vector(fam), &p, token)
}

/// `S^hol` for a family known through `ℓ` and a supplied `𝔭` (in `x₁, …, x_r`).
pub fn shol_from_ideal(ell: &[i64], p: &Presentation, token: &CancelToken) -> Result<Presentation> {
    if p.relations.nvars() != ell.len() {
        return Err(Error::DimensionMismatch { expected: ell.len(), got: p.relations.nvars() });
    }
    pull_back(&hilbert_basis(ell), p, token)
}

/// `S̄^hol ≅ F[t₁, …, t_s]/Φ̃⁻¹(𝔭̄ ∩ F[H̃])`.
pub fn present_sbarhol(fam: &GermFamily, gen_cap: usize, token: &CancelToken) -> Result<Presentation> {
    let p = defining_ideal(fam, token)?;
    sbarhol_from_ideal(&order_vector(fam), &p, gen_cap, token)
}

pub fn sbarhol_from_ideal(
    ell: &[i64],
    p: &Presentation,
    gen_cap: usize,
    token: &CancelToken,
) -> Result<Presentation> {
    if p.relations.nvars() != ell.len() {
        return Err(Error::DimensionMismatch { expected: ell.len(), got: p.relations.nvars() });
    }
    let gens = hilbert_basis_tilde(ell);
    if gens.len() > gen_cap {
        return Err(Error::SizeGuard { cap: gen_cap });
    }
    pull_back(&gens, &bar(p), token)
}

/// `(𝔮 + (t_j − x^{v_j})) ∩ F[t]` for an ideal `𝔮` in the `x` variables.
fn pull_back(gens: &HilbertBasis, q: &Presentation, token: &CancelToken) -> Result<Presentation> {
    let n = q.relations.nvars();
    let m = gens.len();
    let names = generator_names(&gens.generators);
    let lift: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut joint: Vec<MPoly> = q.relations.gens.iter().map(|g| g.remap(n + m, &lift)).collect();
    for (j, v) in gens.generators.iter().enumerate() {
        let mut t = vec![0u32; n + m];
        t[n + j] = 1;
        let mut x: Monomial = v.iter().map(|&c| c as u32).collect();
        x.resize(n + m, 0);
        joint.push(MPoly::binomial(t, GaussianRational::one(), x));
    }
    let mut vars = q.relations.vars.clone();
    vars.extend(names);
    let drop: Vec<usize> = (0..n).collect();
    let relations = eliminate(&IdealBasis::new(vars, joint), &drop, token)?.reduced(token)?;
    Ok(Presentation { relations, exactness: q.exactness })
}
