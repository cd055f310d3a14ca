//! Brute-force oracles: simplicity, Hom spaces, socles, simple tops and indecomposability.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::induction::{invariants, kac_module, opposite_kac_module};
use crate::linalg::{
    charpoly, kernel, q, EchelonBasis, Irreducibility, Poly, RatMatrix, Rational, SparseVec,
    Subspace,
};
use crate::module::{invariant_closure, lambda_max_module, FinDimModule, TopWedge};

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// Bounds and seed for the randomized parts of the oracles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub seed: u64,
    pub random_vectors: usize,
    pub random_endomorphisms: usize,
    /// Largest module dimension for which the generated matrix algebra is spanned explicitly.
    pub burnside_max_dim: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            random_vectors: 8,
            random_endomorphisms: 8,
            burnside_max_dim: 24,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    AbsolutelySimple,
    NotSimple,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// A vector whose cyclic closure is a proper nonzero submodule of the given dimension.
    Submodule { generator: SparseVec, dim: usize },
    /// A vector spanning the kernel of an algebra element that spins up to `M` and to `M*`.
    Norton { index: usize },
    /// Dimension of the matrix algebra generated by the action.
    AlgebraDimension(usize),
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Submodule { dim, .. } => write!(f, "submodule of dim {dim}"),
            Witness::Norton { index } => write!(f, "norton vector e_{index}"),
            Witness::AlgebraDimension(d) => write!(f, "algebra of dim {d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimplicityCertificate {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl SimplicityCertificate {
    pub fn is_absolutely_simple(&self) -> bool {
        self.verdict == Verdict::AbsolutelySimple
    }

    /// The proper submodule generated by the witness vector, if any.
    pub fn submodule(&self, m: &FinDimModule) -> Option<Subspace> {
        match &self.witness {
            Some(Witness::Submodule { generator, .. }) => Some(cyclic_closure(m, generator)),
            _ => None,
        }
    }

    fn not_simple(m: &FinDimModule, generator: SparseVec) -> Self {
        let dim = cyclic_closure(m, &generator).dim();
        Self {
            verdict: Verdict::NotSimple,
            witness: Some(Witness::Submodule { generator, dim }),
        }
    }
}

/// Smallest submodule containing `v`.
pub fn cyclic_closure(m: &FinDimModule, v: &SparseVec) -> Subspace {
    invariant_closure(&m.action_matrices(), std::slice::from_ref(v), m.dim())
}

fn transposes(m: &FinDimModule) -> Vec<RatMatrix> {
    m.action_matrices()
        .into_iter()
        .map(RatMatrix::transpose)
        .collect()
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> SparseVec {
    (0..dim)
        .map(|i| (i, q(rng.gen_range(-5..=5))))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Basis indices grouped by their joint Cartan eigenvalues, if the Cartan part acts diagonally.
fn weight_classes(m: &FinDimModule) -> Option<Vec<Vec<usize>>> {
    let mut classes: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for k in 0..m.dim() {
        classes.entry(m.cartan_signature(k)?).or_default().push(k);
    }
    Some(classes.into_values().collect())
}

/// A nonzero vector of `M` killed by every functional in the given dual subspace.
fn annihilated_vector(dual: &Subspace, dim: usize) -> Option<SparseVec> {
    let rows = RatMatrix::from_rows(dim, dual.basis());
    kernel(&rows).basis().first().cloned()
}

/// Decides absolute simplicity.
///
/// A weight of multiplicity one gives an algebra element with one-dimensional
/// kernel, and Norton's test on that kernel is conclusive. Otherwise cyclic
/// closures of coordinate and random vectors look for a proper submodule, and
/// small modules fall back to spanning the generated matrix algebra.
pub fn is_simple(m: &FinDimModule, config: &OracleConfig) -> SimplicityCertificate {
    let n = m.dim();
    if n == 0 {
        return SimplicityCertificate {
            verdict: Verdict::Inconclusive,
            witness: None,
        };
    }
    if n == 1 {
        return SimplicityCertificate {
            verdict: Verdict::AbsolutelySimple,
            witness: Some(Witness::AlgebraDimension(1)),
        };
    }
    let dual_actions = transposes(m);
    let dual_refs: Vec<&RatMatrix> = dual_actions.iter().collect();
    if let Some(classes) = weight_classes(m) {
        for class in &classes {
            let v = SparseVec::unit(class[0]);
            let closure = cyclic_closure(m, &v);
            if !closure.is_full() {
                return SimplicityCertificate::not_simple(m, v);
            }
            if class.len() == 1 {
                let dual = invariant_closure(&dual_refs, &[v], n);
                if dual.is_full() {
                    return SimplicityCertificate {
                        verdict: Verdict::AbsolutelySimple,
                        witness: Some(Witness::Norton { index: class[0] }),
                    };
                }
                let u = annihilated_vector(&dual, n).expect("proper dual closure");
                return SimplicityCertificate::not_simple(m, u);
            }
        }
    }
    for k in 0..n {
        let v = SparseVec::unit(k);
        if !cyclic_closure(m, &v).is_full() {
            return SimplicityCertificate::not_simple(m, v);
        }
        let dual = invariant_closure(&dual_refs, &[v], n);
        if !dual.is_full() {
            let u = annihilated_vector(&dual, n).expect("proper dual closure");
            return SimplicityCertificate::not_simple(m, u);
        }
    }
    let mut rng = config.rng();
    for _ in 0..config.random_vectors {
        let v = random_vector(&mut rng, n);
        if !v.is_zero() && !cyclic_closure(m, &v).is_full() {
            return SimplicityCertificate::not_simple(m, v);
        }
    }
    if n <= config.burnside_max_dim {
        let d = generated_algebra_dim(&m.action_matrices(), n);
        let verdict = if d == n * n {
            Verdict::AbsolutelySimple
        } else {
            Verdict::Inconclusive
        };
        return SimplicityCertificate {
            verdict,
            witness: Some(Witness::AlgebraDimension(d)),
        };
    }
    SimplicityCertificate {
        verdict: Verdict::Inconclusive,
        witness: None,
    }
}

/// Dimension of the unital algebra generated by `matrices`.
pub fn generated_algebra_dim(matrices: &[&RatMatrix], n: usize) -> usize {
    let mut span = EchelonBasis::new(n * n);
    let identity = RatMatrix::identity(n);
    span.insert(identity.flatten());
    let mut queue = vec![identity];
    while let Some(a) = queue.pop() {
        if span.is_full() {
            break;
        }
        for x in matrices {
            let product = x.mul(&a);
            if span.insert(product.flatten()) {
                queue.push(product);
            }
        }
    }
    span.dim()
}

/// An even `g`-homomorphism between two modules.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    pub matrix: RatMatrix,
}

impl ModuleMap {
    pub fn new(source: &FinDimModule, target: &FinDimModule, matrix: RatMatrix) -> Self {
        debug_assert_eq!(
            (matrix.nrows(), matrix.ncols()),
            (target.dim(), source.dim())
        );
        Self { matrix }
    }

    /// Checks evenness and `f·x = x·f` for every acting basis element.
    pub fn verify(&self, source: &FinDimModule, target: &FinDimModule) -> Result<()> {
        source.same_algebra(target)?;
        if (self.matrix.nrows(), self.matrix.ncols()) != (target.dim(), source.dim()) {
            return Err(Error::DimensionMismatch(
                "map shape does not match the modules".into(),
            ));
        }
        for (r, c, _) in self.matrix.triplets() {
            if target.parity(r) != source.parity(c) {
                return Err(Error::Violation(format!("map is not even at ({r}, {c})")));
            }
        }
        for i in source.acting_indices() {
            let lhs = self.matrix.mul(source.action(i)?);
            let rhs = target.action(i)?.mul(&self.matrix);
            if lhs != rhs {
                return Err(Error::Violation(format!(
                    "map does not commute with {}",
                    source.algebra().label(i)
                )));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(
            self.matrix.nrows(),
            self.matrix
                .columns()
                .iter()
                .filter(|c| !c.is_zero())
                .cloned(),
        )
    }

    pub fn kernel(&self) -> Subspace {
        kernel(&self.matrix)
    }
}

/// Whether two basis vectors may be matched by an even map of modules.
fn compatible(m: &FinDimModule, n: &FinDimModule, r: usize, c: usize) -> bool {
    if n.parity(r) != m.parity(c) {
        return false;
    }
    match (m.cartan_signature(c), n.cartan_signature(r)) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    }
}

/// Basis of the space of even homomorphisms `M → N`.
pub fn hom_space(m: &FinDimModule, n: &FinDimModule) -> Result<Vec<ModuleMap>> {
    m.same_algebra(n)?;
    if m.scope() != n.scope() {
        return Err(Error::AlgebraMismatch(
            "modules over g and over g₀ cannot be compared".into(),
        ));
    }
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    let mut unknown_index: HashMap<(usize, usize), usize> = HashMap::new();
    for r in 0..n.dim() {
        for c in 0..m.dim() {
            if compatible(m, n, r, c) {
                unknown_index.insert((r, c), unknowns.len());
                unknowns.push((r, c));
            }
        }
    }
    if unknowns.is_empty() {
        return Ok(Vec::new());
    }
    let mut equations: Vec<SparseVec> = Vec::new();
    for i in m.acting_indices() {
        let am = m.action(i)?;
        let an = n.action(i)?;
        let am_rows = am.rows();
        // (f·A_M − A_N·f)[r, c] = 0
        let mut eq: HashMap<(usize, usize), SparseVec> = HashMap::new();
        for (u, &(a, b)) in unknowns.iter().enumerate() {
            for (&c, val) in am_rows[b].iter() {
                eq.entry((a, c)).or_default().add_at(u, val);
            }
            for (&r, val) in an.column(a) {
                eq.entry((r, b)).or_default().add_at(u, &-val);
            }
        }
        equations.extend(eq.into_values().filter(|v| !v.is_zero()));
    }
    let system = RatMatrix::from_rows(unknowns.len(), &equations);
    let solutions = kernel(&system);
    let maps = solutions
        .basis()
        .iter()
        .map(|sol| {
            let matrix = RatMatrix::from_triplets(
                n.dim(),
                m.dim(),
                sol.iter()
                    .map(|(&u, c)| (unknowns[u].0, unknowns[u].1, c.clone())),
            );
            ModuleMap::new(m, n, matrix)
        })
        .collect::<Vec<_>>();
    debug_assert!(maps.iter().all(|f| f.verify(m, n).is_ok()));
    Ok(maps)
}

/// An invertible even homomorphism `M → N`, if one exists.
pub fn find_isomorphism(
    m: &FinDimModule,
    n: &FinDimModule,
    config: &OracleConfig,
) -> Result<Option<ModuleMap>> {
    if m.dim() != n.dim() {
        return Ok(None);
    }
    let basis = hom_space(m, n)?;
    if let Some(f) = basis.iter().find(|f| f.is_invertible()) {
        return Ok(Some(f.clone()));
    }
    if basis.len() < 2 {
        return Ok(None);
    }
    let mut rng = config.rng();
    for _ in 0..config.random_endomorphisms {
        let mut matrix = RatMatrix::zeros(n.dim(), m.dim());
        for f in &basis {
            matrix.add_scaled_assign(&f.matrix, &q(rng.gen_range(-7..=7)));
        }
        if matrix.is_invertible() {
            return Ok(Some(ModuleMap::new(m, n, matrix)));
        }
    }
    Ok(None)
}

/// An isomorphism `M → N` or `M → ΠN`, with the parity of the twist used.
pub fn find_isomorphism_up_to_parity(
    m: &FinDimModule,
    n: &FinDimModule,
    config: &OracleConfig,
) -> Result<Option<(ModuleMap, Parity)>> {
    if let Some(f) = find_isomorphism(m, n, config)? {
        return Ok(Some((f, Parity::Even)));
    }
    Ok(find_isomorphism(m, &n.parity_shift(), config)?.map(|f| (f, Parity::Odd)))
}

/// Nonzero proper submodules met by cyclic closures of coordinate and random vectors.
pub fn oracle_submodules(m: &FinDimModule, config: &OracleConfig) -> Vec<Subspace> {
    let mut found: Vec<Subspace> = Vec::new();
    let mut rng = config.rng();
    let seeds = (0..m.dim())
        .map(SparseVec::unit)
        .chain((0..config.random_vectors).map(|_| random_vector(&mut rng, m.dim())));
    for v in seeds {
        if v.is_zero() {
            continue;
        }
        let s = cyclic_closure(m, &v);
        if !s.is_full() && !found.contains(&s) {
            found.push(s);
        }
    }
    found
}

#[derive(Clone, Debug)]
pub struct KacSocle {
    pub kac: FinDimModule,
    /// `Λ^max(g₋₁) ⊗ V`, the `g₋₁`-invariants of `K(V)`.
    pub bottom: Subspace,
    pub socle: Subspace,
    pub module: FinDimModule,
    pub certificate: SimplicityCertificate,
}

/// The socle of `K(V)` as the submodule generated by its bottom layer.
pub fn socle_of_kac(
    g: &Arc<LieSuperalgebra>,
    v: &FinDimModule,
    config: &OracleConfig,
) -> Result<KacSocle> {
    let kac = kac_module(g, v)?;
    let (bottom, _) = invariants(&kac, -1)?;
    let socle = invariant_closure(&kac.action_matrices(), bottom.basis(), kac.dim());
    let module = kac.submodule(&socle)?;
    let certificate = is_simple(&module, config);
    match certificate.verdict {
        Verdict::AbsolutelySimple => Ok(KacSocle {
            kac,
            bottom,
            socle,
            module,
            certificate,
        }),
        Verdict::NotSimple => Err(Error::Violation(format!(
            "the socle of K(V) over {} is not simple",
            g.spec()
        ))),
        Verdict::Inconclusive => Err(Error::Inconclusive("simplicity of the socle".into())),
    }
}

#[derive(Clone, Debug)]
pub struct SimpleTop {
    pub kac: FinDimModule,
    /// `K′(Λ^max(g₁*) ⊗ V)`, possibly parity shifted.
    pub target: FinDimModule,
    pub twist: Parity,
    pub map: ModuleMap,
    pub maximal: Subspace,
    /// `L(V)` as the image of `K(V)` in the target.
    pub top: FinDimModule,
    pub certificate: SimplicityCertificate,
}

/// `L(V)` via the unique map `K(V) → K′(Λ^max(g₁*) ⊗ V)`.
pub fn simple_top_of_kac(
    g: &Arc<LieSuperalgebra>,
    v: &FinDimModule,
    config: &OracleConfig,
) -> Result<SimpleTop> {
    let kac = kac_module(g, v)?;
    let twisted = lambda_max_module(g, TopWedge::DualPlus)?.tensor(v)?;
    let mut chosen = None;
    for twist in [Parity::Even, Parity::Odd] {
        let w = if twist.is_odd() {
            twisted.parity_shift()
        } else {
            twisted.clone()
        };
        let target = opposite_kac_module(g, &w)?;
        let homs = hom_space(&kac, &target)?;
        match homs.len() {
            0 => continue,
            1 => {
                chosen = Some((target, twist, homs.into_iter().next().expect("one map")));
                break;
            }
            d => {
                return Err(Error::Violation(format!(
                    "Hom(K(V), K′(Λ^max(g₁*) ⊗ V)) has dimension {d}"
                )))
            }
        }
    }
    let (target, twist, map) = chosen.ok_or_else(|| {
        Error::Violation("Hom(K(V), K′(Λ^max(g₁*) ⊗ V)) is zero for both parities".into())
    })?;
    let maximal = map.kernel();
    let image = map.image();
    let top = target.submodule(&image)?;
    let certificate = is_simple(&top, config);
    match certificate.verdict {
        Verdict::AbsolutelySimple => Ok(SimpleTop {
            kac,
            target,
            twist,
            map,
            maximal,
            top,
            certificate,
        }),
        Verdict::NotSimple => Err(Error::Violation("the image of K(V) is not simple".into())),
        Verdict::Inconclusive => Err(Error::Inconclusive("simplicity of L(V)".into())),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndecomposabilityCertificate {
    pub indecomposable: bool,
    pub endomorphism_dim: usize,
    /// Dimension of `End(M)` modulo its radical; `1` proves locality.
    pub semisimple_quotient_dim: usize,
    /// A nontrivial idempotent endomorphism when decomposable.
    pub idempotent: Option<RatMatrix>,
}

/// Projection onto the generalized kernel of `a(f)` along that of `b(f)`, for coprime `a·b`.
fn fitting_idempotent(f: &RatMatrix, a: &Poly, b: &Poly) -> Option<RatMatrix> {
    let n = f.nrows();
    let eval = |p: &Poly| {
        let mut acc = RatMatrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(f).add(&RatMatrix::scalar(n, c));
        }
        acc
    };
    let ka = kernel(&eval(a).pow(n));
    let kb = kernel(&eval(b).pow(n));
    if ka.dim() + kb.dim() != n || ka.is_zero() || kb.is_zero() {
        return None;
    }
    let change = RatMatrix::from_columns(n, ka.basis().iter().chain(kb.basis()).cloned().collect());
    let mut diag = RatMatrix::zeros(n, n);
    for i in 0..ka.dim() {
        diag.set(i, i, Rational::one());
    }
    Some(change.mul(&diag).mul(&change.inverse().ok()?))
}

/// A splitting `p = a·b` into coprime factors of positive degree, if one is visible.
fn coprime_split(p: &Poly) -> Option<(Poly, Poly)> {
    let sq = p.squarefree_part().monic();
    if sq.degree() == 0 {
        return None;
    }
    let power = p.degree() / sq.degree();
    let mut acc = Poly::one();
    for _ in 0..power {
        acc = acc.mul(&sq);
    }
    if acc == p.monic() {
        // p is a power of its squarefree part; split that part if it factors
        let root = sq.rational_roots().and_then(|r| r.into_iter().next())?;
        if sq.degree() == 1 {
            return None;
        }
        let lin = Poly::linear(&root);
        let mut a = Poly::one();
        let mut rest = p.monic();
        loop {
            let (quot, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            a = a.mul(&lin);
            rest = quot;
        }
        return Some((a, rest));
    }
    // unequal multiplicities: separate by the gcd with the derivative
    let g = p.gcd(&p.derivative()).monic();
    let mut a = Poly::one();
    let mut rest = p.monic();
    let common = sq.gcd(&g).monic();
    loop {
        let d = rest.gcd(&common).monic();
        if d.degree() == 0 {
            break;
        }
        a = a.mul(&d);
        rest = rest.div_rem(&d).0;
    }
    if a.degree() == 0 || rest.degree() == 0 {
        return None;
    }
    Some((a, rest))
}

/// Whether `End(M)` is local.
pub fn is_indecomposable(
    m: &FinDimModule,
    config: &OracleConfig,
) -> Result<IndecomposabilityCertificate> {
    let basis: Vec<RatMatrix> = hom_space(m, m)?.into_iter().map(|f| f.matrix).collect();
    let e = basis.len();
    // the radical is the kernel of the trace form in characteristic zero
    let gram = RatMatrix::from_dense(
        &(0..e)
            .map(|i| {
                (0..e)
                    .map(|j| basis[i].mul(&basis[j]).trace())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    );
    let quotient_dim = gram.rank();
    if quotient_dim == 1 {
        return Ok(IndecomposabilityCertificate {
            indecomposable: true,
            endomorphism_dim: e,
            semisimple_quotient_dim: 1,
            idempotent: None,
        });
    }
    let mut rng = config.rng();
    let candidates = basis
        .iter()
        .cloned()
        .chain((0..config.random_endomorphisms).map(|_| {
            let mut acc = RatMatrix::zeros(m.dim(), m.dim());
            for b in &basis {
                acc.add_scaled_assign(b, &q(rng.gen_range(-7..=7)));
            }
            acc
        }));
    let mut undecided = false;
    for f in candidates {
        let p = charpoly(&f);
        if let Some((a, b)) = coprime_split(&p) {
            if let Some(idem) = fitting_idempotent(&f, &a, &b) {
                return Ok(IndecomposabilityCertificate {
                    indecomposable: false,
                    endomorphism_dim: e,
                    semisimple_quotient_dim: quotient_dim,
                    idempotent: Some(idem),
                });
            }
        }
        if p.squarefree_part().monic().irreducibility() != Irreducibility::Irreducible {
            undecided = true;
        }
    }
    if undecided {
        return Err(Error::Inconclusive(
            "could not factor a characteristic polynomial of End(M)".into(),
        ));
    }
    Ok(IndecomposabilityCertificate {
        indecomposable: true,
        endomorphism_dim: e,
        semisimple_quotient_dim: quotient_dim,
        idempotent: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use crate::module::{one_dim, simple_g0_module, trivial, Scope};
    use crate::roots::{parse_weight, Weight};

    fn simple(g: &Arc<LieSuperalgebra>, weight: &str) -> FinDimModule {
        simple_g0_module(g, &parse_weight(g, weight).unwrap(), Parity::Even).unwrap()
    }

    #[test]
    fn gl11_kac_modules() {
        let g = parse_algebra("gl(1|1)").unwrap();
        let cfg = OracleConfig::default();
        let typical = kac_module(&g, &simple(&g, "1|0")).unwrap();
        assert!(is_simple(&typical, &cfg).is_absolutely_simple());
        assert_eq!(generated_algebra_dim(&typical.action_matrices(), 2), 4);

        let atypical = kac_module(&g, &simple(&g, "0|0")).unwrap();
        let cert = is_simple(&atypical, &cfg);
        assert_eq!(cert.verdict, Verdict::NotSimple);
        let sub = cert.submodule(&atypical).unwrap();
        assert_eq!(sub.dim(), 1);
        // the lowest vector y ⊗ 1 spans the submodule
        assert_eq!(cyclic_closure(&atypical, &SparseVec::unit(1)), sub);
        assert!(cyclic_closure(&atypical, &SparseVec::new()).is_zero());
    }

    #[test]
    fn one_dimensional_modules_are_simple() {
        let g = parse_algebra("gl(2|1)").unwrap();
        let m = one_dim(&g, &Weight::from_ints(&[1, 1, 3])).unwrap();
        assert!(is_simple(&m, &OracleConfig::default()).is_absolutely_simple());
    }

    #[test]
    fn schur_and_sums() {
        let g = parse_algebra("gl(2|1)").unwrap();
        let cfg = OracleConfig::default();
        let v = simple(&g, "1,0|1");
        let k = kac_module(&g, &v).unwrap();
        assert!(is_simple(&k, &cfg).is_absolutely_simple());
        assert_eq!(hom_space(&k, &k).unwrap().len(), 1);
        let doubled = k.direct_sum(&k).unwrap();
        assert_eq!(is_simple(&doubled, &cfg).verdict, Verdict::NotSimple);
        let cert = is_indecomposable(&doubled, &cfg).unwrap();
        assert!(!cert.indecomposable);
        let e = cert.idempotent.unwrap();
        assert_eq!(e.mul(&e), e);
        ModuleMap::new(&doubled, &doubled, e)
            .verify(&doubled, &doubled)
            .unwrap();
        assert!(is_indecomposable(&k, &cfg).unwrap().indecomposable);
        assert!(hom_space(&k, &k.parity_shift()).unwrap().is_empty());
    }

    #[test]
    fn kac_to_opposite_kac() {
        let g = parse_algebra("gl(1|1)").unwrap();
        let top = lambda_max_module(&g, TopWedge::Plus).unwrap();
        for (a, b) in [(0, 0), (1, 0), (2, -1)] {
            let w = one_dim(&g, &Weight::from_ints(&[a, b])).unwrap();
            let v = top.tensor(&w).unwrap();
            let k = kac_module(&g, &v).unwrap();
            assert_eq!(
                hom_space(&k, &opposite_kac_module(&g, &w).unwrap())
                    .unwrap()
                    .len(),
                1
            );
            let other = one_dim(&g, &Weight::from_ints(&[a + 1, b])).unwrap();
            assert!(hom_space(&k, &opposite_kac_module(&g, &other).unwrap())
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn socles() {
        let g = parse_algebra("gl(1|1)").unwrap();
        let cfg = OracleConfig::default();
        let s = socle_of_kac(&g, &simple(&g, "1|0"), &cfg).unwrap();
        assert!(s.socle.is_full());
        let s = socle_of_kac(&g, &simple(&g, "0|0"), &cfg).unwrap();
        assert_eq!(s.socle.dim(), 1);
        assert_eq!(s.module.weights().unwrap(), [Weight::from_ints(&[-1, 1])]);
    }

    #[test]
    fn simple_tops() {
        let cfg = OracleConfig::default();
        let g = parse_algebra("gl(1|1)").unwrap();
        assert_eq!(
            simple_top_of_kac(&g, &simple(&g, "1|0"), &cfg)
                .unwrap()
                .top
                .dim(),
            2
        );
        assert_eq!(
            simple_top_of_kac(&g, &simple(&g, "0|0"), &cfg)
                .unwrap()
                .top
                .dim(),
            1
        );
        let g = parse_algebra("gl(2|1)").unwrap();
        let t = simple_top_of_kac(&g, &simple(&g, "0,0|0"), &cfg).unwrap();
        assert_eq!((t.top.dim(), t.maximal.dim()), (1, 3));
    }

    #[test]
    fn opposite_kac_of_pn_is_indecomposable() {
        let cfg = OracleConfig::default();
        let g = parse_algebra("p(2)").unwrap();
        let k = opposite_kac_module(&g, &trivial(&g, Scope::Even)).unwrap();
        assert_eq!(k.dim(), 8);
        assert_eq!(is_simple(&k, &cfg).verdict, Verdict::NotSimple);
        assert!(is_indecomposable(&k, &cfg).unwrap().indecomposable);
    }
}
