use std::sync::Arc;
use std::time::Instant;

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;

use kac_core::algebra::{Family, LieSuperalgebra, Parity};
use kac_core::analysis::{
    find_isomorphism, find_isomorphism_up_to_parity, hom_space, is_indecomposable, is_simple,
    oracle_submodules, simple_top_of_kac, socle_of_kac, OracleConfig, SimpleTop, Verdict,
};
use kac_core::induction::{
    coinduced_module, dagger_iso, kac_module, opposite_kac_module, wedge_layer, Convention, Side,
};
use kac_core::linalg::{format_rational, q, sign, Rational};
use kac_core::module::{lambda_max_module, one_dim, simple_g0_module, FinDimModule, TopWedge};
use kac_core::roots::{
    atypicality_product, dominant_grid, format_weight, is_typical, two_rho_one, Weight,
};
use kac_core::uea::{central_scalar, multiply, omega, UEAElement};
use kac_core::{Error, Result};

use crate::config::{Settings, Suite};
use crate::report::{Instance, Report};

/// Why a suite could not be started.
#[derive(Debug)]
pub struct SuiteRefused(pub String);

fn verdict_name(v: Verdict) -> String {
    match v {
        Verdict::AbsolutelySimple => "absolutely-simple",
        Verdict::NotSimple => "not-simple",
        Verdict::Inconclusive => "inconclusive",
    }
    .into()
}

fn simple(g: &Arc<LieSuperalgebra>, lambda: &Weight) -> Result<FinDimModule> {
    simple_g0_module(g, lambda, Parity::Even)
}

/// Per-weight result before timing and formatting.
struct Outcome {
    typical: Option<bool>,
    omega_scalar: Option<Rational>,
    simple_oracle: Option<Verdict>,
    agree: bool,
    witnesses: Vec<String>,
}

impl Outcome {
    fn new(agree: bool) -> Self {
        Self {
            typical: None,
            omega_scalar: None,
            simple_oracle: None,
            agree,
            witnesses: Vec::new(),
        }
    }
}

fn timed<F: FnOnce() -> Result<Outcome>>(weight: Option<String>, run: F) -> Instance {
    let start = Instant::now();
    let result = run();
    let ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(o) => Instance {
            weight,
            typical: o.typical,
            omega_scalar: o.omega_scalar.as_ref().map(format_rational),
            simple_oracle: o.simple_oracle.map(verdict_name),
            agree: o.agree,
            witnesses: o.witnesses,
            ms,
            skipped: None,
        },
        Err(e) => Instance {
            weight,
            agree: false,
            witnesses: vec![format!("error: {e}")],
            ms,
            ..Default::default()
        },
    }
}

fn needs_form(g: &LieSuperalgebra, suite: Suite) -> std::result::Result<(), SuiteRefused> {
    if matches!(g.family(), Family::P | Family::PPrime) {
        return Err(SuiteRefused(format!(
            "suite {suite} needs an invariant form, which {} lacks",
            g.spec()
        )));
    }
    Ok(())
}

/// Largest module dimension a suite builds on the grid.
fn check_dimensions(
    g: &LieSuperalgebra,
    grid: &[Weight],
    max_dim: usize,
) -> std::result::Result<(), SuiteRefused> {
    let free = g
        .indices_of_degree(-1)
        .len()
        .max(g.indices_of_degree(1).len()) as u32;
    let factor = 2usize.checked_pow(free).unwrap_or(usize::MAX);
    for lambda in grid {
        let dim = kac_core::module::weyl_dimension(g, lambda)
            .map_err(|e| SuiteRefused(format!("cannot size V({lambda}): {e}")))?;
        let dim: usize = kac_core::linalg::as_i64(&dim).unwrap_or(i64::MAX) as usize;
        let total = dim.saturating_mul(factor);
        if total > max_dim {
            return Err(SuiteRefused(format!(
                "refusing {}: a module of dimension {total} at weight {} exceeds max-dim {max_dim}",
                g.spec(),
                format_weight(g, lambda)
            )));
        }
    }
    Ok(())
}

pub fn run_suite(
    suite: Suite,
    g: &Arc<LieSuperalgebra>,
    settings: &Settings,
) -> std::result::Result<Report, SuiteRefused> {
    let oracle = OracleConfig::with_seed(settings.seed);
    let grid = dominant_grid(g, settings.grid.lo, settings.grid.hi)
        .map_err(|e| SuiteRefused(e.to_string()))?;
    let grid_text = Some(settings.grid.to_string());
    if !matches!(suite, Suite::Structure | Suite::Omega) {
        check_dimensions(g, &grid, settings.max_dim)?;
    }
    let label = |w: &Weight| Some(format_weight(g, w));
    let per_weight = |f: &(dyn Fn(&Weight) -> Result<Outcome> + Sync)| -> Vec<Instance> {
        grid.par_iter().map(|w| timed(label(w), || f(w))).collect()
    };
    let instances = match suite {
        Suite::Structure => vec![timed(None, || {
            let r = g.check_structure();
            let mut o = Outcome::new(r.is_clean());
            o.witnesses = vec![
                format!("triples {}", r.triples_checked),
                format!("jacobi failures {}", r.jacobi_failures),
                format!("grading failures {}", r.grading_failures),
                format!("odd square failures {}", r.odd_square_failures),
                format!("operator failures {}", r.operator_failures),
            ];
            Ok(o)
        })],
        Suite::Omega => {
            needs_form(g, suite)?;
            let mut out = Vec::new();
            if g.family() == Family::Gl && g.spec().n == 1 {
                out.push(timed(None, || omega_formula_instance(g)));
            }
            out.extend(per_weight(&|lambda| {
                let v = simple(g, lambda)?;
                let z = omega(g)?;
                let scalar = central_scalar(&z, &v)?;
                let typical = is_typical(g, lambda)?;
                let mut o = Outcome::new(scalar.is_zero() != typical);
                o.typical = Some(typical);
                o.omega_scalar = Some(scalar);
                Ok(o)
            }));
            out
        }
        Suite::Simplicity => {
            needs_form(g, suite)?;
            per_weight(&|lambda| {
                let v = simple(g, lambda)?;
                let scalar = central_scalar(&*omega(g)?, &v)?;
                let typical = is_typical(g, lambda)?;
                let cert = is_simple(&kac_module(g, &v)?, &oracle);
                let simple = cert.verdict == Verdict::AbsolutelySimple;
                let mut o = Outcome::new(
                    cert.verdict != Verdict::Inconclusive
                        && typical == !scalar.is_zero()
                        && typical == simple,
                );
                o.typical = Some(typical);
                o.omega_scalar = Some(scalar);
                o.simple_oracle = Some(cert.verdict);
                o.witnesses.extend(cert.witness.map(|w| w.to_string()));
                Ok(o)
            })
        }
        Suite::ZeroLocus => {
            needs_form(g, suite)?;
            let mut out = per_weight(&|lambda| {
                let scalar = central_scalar(&*omega(g)?, &simple(g, lambda)?)?;
                let product = atypicality_product(g, lambda)?;
                let mut o = Outcome::new(scalar.is_zero() == product.is_zero());
                o.typical = Some(!product.is_zero());
                o.witnesses
                    .push(format!("product {}", format_rational(&product)));
                if !product.is_zero() {
                    o.witnesses
                        .push(format!("ratio {}", format_rational(&(&scalar / &product))));
                }
                o.omega_scalar = Some(scalar);
                Ok(o)
            });
            // the ratio must be one constant across the grid
            let ratios: Vec<String> = out
                .iter()
                .flat_map(|i| {
                    i.witnesses
                        .iter()
                        .filter(|w| w.starts_with("ratio "))
                        .cloned()
                })
                .collect();
            if let Some(first) = ratios.first().cloned() {
                for i in &mut out {
                    if i.witnesses
                        .iter()
                        .any(|w| w.starts_with("ratio ") && *w != first)
                    {
                        i.agree = false;
                    }
                }
            }
            out
        }
        Suite::Socle => per_weight(&|lambda| {
            let v = simple(g, lambda)?;
            let s = socle_of_kac(g, &v, &oracle)?;
            let layer = wedge_layer(g, v.dim(), Side::NonNegative, g.indices_of_degree(-1).len());
            let subs = oracle_submodules(&s.kac, &oracle);
            let contained = subs.iter().all(|sub| sub.contains_subspace(&s.socle));
            let mut o = Outcome::new(
                s.bottom == layer && s.certificate.is_absolutely_simple() && contained,
            );
            o.typical = is_typical(g, lambda).ok();
            o.simple_oracle = Some(s.certificate.verdict);
            o.witnesses = vec![
                format!("socle dim {} of {}", s.socle.dim(), s.kac.dim()),
                format!("{} oracle submodules", subs.len()),
            ];
            Ok(o)
        }),
        Suite::Homspace => {
            let top =
                lambda_max_module(g, TopWedge::Plus).map_err(|e| SuiteRefused(e.to_string()))?;
            let modules: Vec<FinDimModule> = grid
                .iter()
                .map(|l| simple(g, l))
                .try_collect()
                .map_err(|e: Error| SuiteRefused(e.to_string()))?;
            let mut targets = Vec::new();
            for (w, lambda) in modules.iter().zip(&grid) {
                for shift in [false, true] {
                    let w = if shift { w.parity_shift() } else { w.clone() };
                    let name = format!(
                        "{}{}",
                        if shift { "Π" } else { "" },
                        format_weight(g, lambda)
                    );
                    let k = opposite_kac_module(g, &w).map_err(|e| SuiteRefused(e.to_string()))?;
                    let twisted = top.tensor(&w).map_err(|e| SuiteRefused(e.to_string()))?;
                    targets.push((name, k, twisted));
                }
            }
            grid.par_iter()
                .zip(modules.par_iter())
                .map(|(lambda, v)| {
                    timed(label(lambda), || {
                        let kac = kac_module(g, v)?;
                        let mut o = Outcome::new(true);
                        for (name, k, twisted) in &targets {
                            let expected =
                                usize::from(find_isomorphism(v, twisted, &oracle)?.is_some());
                            let dim = hom_space(&kac, k)?.len();
                            if dim != expected {
                                o.agree = false;
                                o.witnesses
                                    .push(format!("K′({name}): dim {dim}, expected {expected}"));
                            } else if dim > 0 {
                                o.witnesses.push(format!("K′({name}): dim {dim}"));
                            }
                        }
                        Ok(o)
                    })
                })
                .collect()
        }
        Suite::CoindIso => per_weight(&|lambda| {
            let v = simple(g, lambda)?;
            let mut o = Outcome::new(true);
            for (side, which) in [
                (Side::NonNegative, TopWedge::Minus),
                (Side::NonPositive, TopWedge::Plus),
            ] {
                let w = lambda_max_module(g, which)?.tensor(&v)?;
                let sup = coinduced_module(g, &w, side, Convention::Super)?;
                let usual = coinduced_module(g, &w, side, Convention::Usual)?;
                dagger_iso(&sup, &usual, side)?;
                let induced = match side {
                    Side::NonNegative => kac_module(g, &v)?,
                    Side::NonPositive => opposite_kac_module(g, &v)?,
                };
                match find_isomorphism_up_to_parity(&sup, &induced, &oracle)? {
                    Some((_, twist)) => o.witnesses.push(format!(
                        "{side:?}: isomorphic{}",
                        if twist.is_odd() {
                            " after a parity shift"
                        } else {
                            ""
                        }
                    )),
                    None => {
                        o.agree = false;
                        o.witnesses.push(format!("{side:?}: no isomorphism"));
                    }
                }
            }
            Ok(o)
        }),
        Suite::TopBijection => {
            let tops: Vec<Result<SimpleTop>> = grid
                .par_iter()
                .map(|l| simple(g, l).and_then(|v| simple_top_of_kac(g, &v, &oracle)))
                .collect();
            grid.par_iter()
                .enumerate()
                .map(|(i, lambda)| {
                    timed(label(lambda), || {
                        let t = tops[i].as_ref().map_err(Clone::clone)?;
                        let mut o =
                            Outcome::new(hom_space(&t.top, &t.top.parity_shift())?.is_empty());
                        o.simple_oracle = Some(t.certificate.verdict);
                        o.typical = is_typical(g, lambda).ok();
                        o.witnesses.push(format!(
                            "dim L {} maximal {}",
                            t.top.dim(),
                            t.maximal.dim()
                        ));
                        for (j, other) in tops.iter().enumerate() {
                            if let (true, Ok(other)) = (i != j, other) {
                                if !hom_space(&t.top, &other.top)?.is_empty() {
                                    o.agree = false;
                                    o.witnesses
                                        .push(format!("L ≅ L({})", format_weight(g, &grid[j])));
                                }
                            }
                        }
                        Ok(o)
                    })
                })
                .collect()
        }
        Suite::OppoKac => {
            needs_form(g, suite)?;
            let two_rho = two_rho_one(g).map_err(|e| SuiteRefused(e.to_string()))?;
            let shift = one_dim(g, &two_rho).map_err(|e| SuiteRefused(e.to_string()))?;
            per_weight(&|lambda| {
                let v = simple(g, lambda)?;
                let opposite = opposite_kac_module(g, &v)?;
                let kac = kac_module(g, &v.tensor(&shift)?)?;
                let typical = is_typical(g, &(lambda + &two_rho))?;
                let verdict = is_simple(&opposite, &oracle).verdict;
                let mut o = Outcome::new(true);
                o.typical = Some(typical);
                o.simple_oracle = Some(verdict);
                if typical {
                    match find_isomorphism_up_to_parity(&opposite, &kac, &oracle)? {
                        Some((_, twist)) => o.witnesses.push(format!("isomorphic, twist {twist}")),
                        None => {
                            o.agree = false;
                            o.witnesses.push("no isomorphism".into());
                        }
                    }
                    o.agree &= verdict == Verdict::AbsolutelySimple;
                } else {
                    o.agree = verdict == Verdict::NotSimple
                        && is_simple(&kac, &oracle).verdict == Verdict::NotSimple;
                }
                Ok(o)
            })
        }
        Suite::PnIndecomposable => {
            if !matches!(g.family(), Family::P | Family::PPrime) {
                return Err(SuiteRefused(format!(
                    "suite {suite} is about p(n), not {}",
                    g.spec()
                )));
            }
            per_weight(&|lambda| {
                let k = opposite_kac_module(g, &simple(g, lambda)?)?;
                let cert = is_indecomposable(&k, &oracle)?;
                let verdict = is_simple(&k, &oracle).verdict;
                let mut o = Outcome::new(cert.indecomposable && verdict == Verdict::NotSimple);
                o.simple_oracle = Some(verdict);
                o.witnesses = vec![
                    format!("dim K′ {}", k.dim()),
                    format!("dim End {}", cert.endomorphism_dim),
                    format!("indecomposable {}", cert.indecomposable),
                ];
                Ok(o)
            })
        }
        Suite::Restriction => {
            let sub = g
                .derived_subalgebra()
                .map_err(|e| SuiteRefused(e.to_string()))?;
            per_weight(&|lambda| {
                let t = simple_top_of_kac(g, &simple(g, lambda)?, &oracle)?;
                let restricted = t.top.restrict(&sub)?;
                let verdict = is_simple(&restricted, &oracle).verdict;
                let mut o = Outcome::new(verdict == Verdict::AbsolutelySimple);
                o.typical = is_typical(g, lambda).ok();
                o.simple_oracle = Some(verdict);
                o.witnesses
                    .push(format!("dim L {} over {}", t.top.dim(), sub.spec()));
                Ok(o)
            })
        }
    };
    Ok(Report::new(
        suite.to_string(),
        g.spec().to_string(),
        settings.seed,
        grid_text,
        instances,
    ))
}

/// `Σ_σ (−1)^σ X_{m,σ(m)}···X_{1,σ(1)}` with `X_ij = [e_{i,m+1}, e_{m+1,j}] + δ_ij (m − i)`.
pub fn explicit_omega_gl_m1(g: &LieSuperalgebra) -> Result<UEAElement> {
    let m = g.spec().m;
    let unit = |i: usize, j: usize| {
        g.index_of(&format!("e_{{{i},{j}}}"))
            .ok_or_else(|| Error::InvalidParams(format!("no e_{{{i},{j}}}")))
    };
    let mut xs = vec![vec![UEAElement::zero(); m + 1]; m + 1];
    for i in 1..=m {
        for j in 1..=m {
            let mut x = UEAElement::zero();
            for (&k, c) in g.bracket_basis(unit(i, m + 1)?, unit(m + 1, j)?).iter() {
                x.add_scaled(&UEAElement::generator(k), c);
            }
            if i == j {
                x.add_scaled(&UEAElement::one(), &q((m - i) as i64));
            }
            xs[i][j] = x;
        }
    }
    let mut total = UEAElement::zero();
    for perm in (1..=m).permutations(m) {
        let inversions = perm
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count();
        let mut product = UEAElement::one();
        for i in (1..=m).rev() {
            product = multiply(g, &product, &xs[i][perm[i - 1]]);
        }
        total.add_scaled(&product, &sign(inversions));
    }
    Ok(total)
}

fn omega_formula_instance(g: &LieSuperalgebra) -> Result<Outcome> {
    let m = g.spec().m;
    let computed = omega(g)?;
    let explicit = explicit_omega_gl_m1(g)?.scaled(&sign(m * (m - 1) / 2));
    let mut o = Outcome::new(*computed == explicit);
    o.witnesses.push(format!("{} PBW terms", computed.len()));
    Ok(o)
}
