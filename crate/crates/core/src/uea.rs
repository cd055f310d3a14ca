//! PBW arithmetic in the universal enveloping algebra.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::algebra::{format_terms, AlgebraSpec, Family, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::linalg::{qf, RatMatrix, Rational};
use crate::module::FinDimModule;

/// Nondecreasing list of basis indices; odd indices appear at most once.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBWMonomial(pub Vec<usize>);

impl PBWMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    /// Exponent of each basis element, indexed like the algebra basis.
    pub fn exponents(&self, dim: usize) -> Vec<usize> {
        let mut out = vec![0; dim];
        for &i in &self.0 {
            out[i] += 1;
        }
        out
    }

    pub fn format(&self, g: &LieSuperalgebra) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < self.0.len() {
            let i = self.0[k];
            let run = self.0[k..].iter().take_while(|&&j| j == i).count();
            let label = g.label(i);
            parts.push(if run == 1 {
                label.to_string()
            } else {
                format!("{label}^{run}")
            });
            k += run;
        }
        parts.join("*")
    }
}

/// Linear combination of PBW monomials in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UEAElement {
    terms: BTreeMap<PBWMonomial, Rational>,
}

impl UEAElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(PBWMonomial::one(), Rational::one())
    }

    pub fn generator(i: usize) -> Self {
        Self::monomial(PBWMonomial(vec![i]), Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::monomial(PBWMonomial::one(), c)
    }

    fn monomial(m: PBWMonomial, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &c);
        out
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UEAElement, c: &Rational) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), &(x * c));
        }
    }

    pub fn add(&self, other: &UEAElement) -> UEAElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &UEAElement) -> UEAElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scaled(&self, c: &Rational) -> UEAElement {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PBWMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PBWMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Keep only the monomials satisfying `keep`.
    pub fn filter<F: Fn(&PBWMonomial) -> bool>(&self, keep: F) -> UEAElement {
        UEAElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Part built from `g₀` generators only.
    pub fn even_part(&self, g: &LieSuperalgebra) -> UEAElement {
        self.filter(|m| m.0.iter().all(|&i| g.zdegree(i) == 0))
    }

    pub fn lies_in_u0(&self, g: &LieSuperalgebra) -> bool {
        self.terms
            .keys()
            .all(|m| m.0.iter().all(|&i| g.zdegree(i) == 0))
    }

    /// Text form ordered by degree, then lexicographically.
    pub fn format(&self, g: &LieSuperalgebra) -> String {
        let mut ordered: Vec<(&PBWMonomial, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| (a.0.degree(), a.0).cmp(&(b.0.degree(), b.0)));
        format_terms(ordered.into_iter().map(|(m, c)| (m.format(g), c.clone())))
    }

    /// Matrix of the action on a module whose action covers every factor.
    pub fn action_matrix(&self, module: &FinDimModule) -> Result<RatMatrix> {
        let n = module.dim();
        let mut out = RatMatrix::zeros(n, n);
        for (m, c) in &self.terms {
            let mut acc = RatMatrix::identity(n);
            for &i in &m.0 {
                acc = acc.mul(module.action(i)?);
            }
            out.add_scaled_assign(&acc, c);
        }
        Ok(out)
    }
}

/// Straightening with a memo table of `monomial * generator` products.
pub struct Straightener<'a> {
    g: &'a LieSuperalgebra,
    memo: HashMap<(PBWMonomial, usize), UEAElement>,
}

impl<'a> Straightener<'a> {
    pub fn new(g: &'a LieSuperalgebra) -> Self {
        Self {
            g,
            memo: HashMap::new(),
        }
    }

    /// Canonical form of `m * x` for a canonical monomial `m` and generator `x`.
    pub fn monomial_times_generator(&mut self, m: &PBWMonomial, x: usize) -> UEAElement {
        let key = (m.clone(), x);
        if let Some(found) = self.memo.get(&key) {
            return found.clone();
        }
        let result = self.compute(m, x);
        self.memo.insert(key, result.clone());
        result
    }

    fn compute(&mut self, m: &PBWMonomial, x: usize) -> UEAElement {
        let Some((&y, rest)) = m.0.split_last() else {
            return UEAElement::generator(x);
        };
        let prefix = PBWMonomial(rest.to_vec());
        let x_odd = self.g.parity(x).is_odd();
        if y < x || (y == x && !x_odd) {
            let mut word = m.0.clone();
            word.push(x);
            return UEAElement::monomial(PBWMonomial(word), Rational::one());
        }
        let mut out = UEAElement::zero();
        if y == x {
            // x x = ½[x, x] for odd x
            for (&t, c) in self.g.bracket_basis(x, x).clone().iter() {
                let part = self.monomial_times_generator(&prefix, t);
                out.add_scaled(&part, &(c * qf(1, 2)));
            }
            return out;
        }
        // y x = ±x y + [y, x]
        let sign = if x_odd && self.g.parity(y).is_odd() {
            -Rational::one()
        } else {
            Rational::one()
        };
        let moved = self.monomial_times_generator(&prefix, x);
        for (n, c) in moved.terms.clone() {
            let part = self.monomial_times_generator(&n, y);
            out.add_scaled(&part, &(c * &sign));
        }
        for (&t, c) in self.g.bracket_basis(y, x).clone().iter() {
            let part = self.monomial_times_generator(&prefix, t);
            out.add_scaled(&part, c);
        }
        out
    }

    pub fn multiply(&mut self, a: &UEAElement, b: &UEAElement) -> UEAElement {
        let mut out = UEAElement::zero();
        for (mb, cb) in &b.terms {
            let mut partial = a.clone();
            for &x in &mb.0 {
                let mut next = UEAElement::zero();
                for (m, c) in &partial.terms {
                    let step = self.monomial_times_generator(m, x);
                    next.add_scaled(&step, c);
                }
                partial = next;
            }
            out.add_scaled(&partial, cb);
        }
        out
    }

    /// Canonical form of an arbitrary word of generators.
    pub fn word(&mut self, letters: &[usize]) -> UEAElement {
        let mut out = UEAElement::one();
        for &x in letters {
            out = self.multiply(&out, &UEAElement::generator(x));
        }
        out
    }
}

pub fn multiply(g: &LieSuperalgebra, a: &UEAElement, b: &UEAElement) -> UEAElement {
    Straightener::new(g).multiply(a, b)
}

fn require_omega_family(g: &LieSuperalgebra) -> Result<()> {
    match g.family() {
        Family::P | Family::PPrime => Err(Error::Unsupported(format!("omega for {}", g.spec()))),
        _ => Ok(()),
    }
}

/// `X⁺X⁻` with `X±` the ordered products of the `g±1` basis.
pub fn top_wedge_product(g: &LieSuperalgebra) -> UEAElement {
    let mut word = g.indices_of_degree(1);
    word.extend(g.indices_of_degree(-1));
    Straightener::new(g).word(&word)
}

/// The `U(g₀)` component of `X⁺X⁻`; cached per algebra.
pub fn omega(g: &LieSuperalgebra) -> Result<Arc<UEAElement>> {
    require_omega_family(g)?;
    static CACHE: OnceLock<Mutex<HashMap<AlgebraSpec, Arc<UEAElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(found) = cache.lock().expect("omega cache poisoned").get(&g.spec()) {
        return Ok(found.clone());
    }
    let value = Arc::new(top_wedge_product(g).even_part(g));
    cache
        .lock()
        .expect("omega cache poisoned")
        .insert(g.spec(), value.clone());
    Ok(value)
}

/// Scalar by which `z` acts on `module`, checked on every basis vector.
pub fn central_scalar(z: &UEAElement, module: &FinDimModule) -> Result<Rational> {
    let matrix = z.action_matrix(module)?;
    if module.dim() == 0 {
        return Ok(Rational::zero());
    }
    matrix
        .scalar_value()
        .ok_or_else(|| Error::NotScalar("element does not act as a scalar".into()))
}
