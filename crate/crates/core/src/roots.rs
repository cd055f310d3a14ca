//! Roots, the Weyl vector, the invariant form and weight predicates.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Family, LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, q, qf, Rational, SparseVec};

/// Coordinates in the `ε`-basis of `h*`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![Rational::zero(); len])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| q(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn scaled(&self, factor: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * factor).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Positive when the first nonzero coordinate is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.0
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_positive())
    }

    /// Text form with a bar between blocks, e.g. `2,0|-1`.
    pub fn format_blocks(&self, blocks: &[usize]) -> String {
        let mut parts = Vec::new();
        let mut start = 0;
        for &b in blocks {
            let end = (start + b).min(self.len());
            parts.push(self.0[start..end].iter().map(format_rational).join(","));
            start = end;
        }
        parts.join("|")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(format_rational).join(", "))
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(format_rational))
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        items
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
            .map_err(serde::de::Error::custom)
    }
}

/// Parse the block text form; the block structure must match the algebra.
pub fn parse_weight(g: &LieSuperalgebra, text: &str) -> Result<Weight> {
    let blocks = g.weight_blocks();
    let parts: Vec<&str> = text.trim().split('|').collect();
    if parts.len() == 1 && blocks.len() > 1 {
        // a flat comma list is accepted when it has the right length
        let coords = parts[0]
            .split(',')
            .map(|e| parse_rational(e.trim()))
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != g.rank() {
            return Err(Error::Parse(format!(
                "weight {text:?} needs {} entries for {}",
                g.rank(),
                g.spec()
            )));
        }
        return Ok(Weight(coords));
    }
    if parts.len() != blocks.len() {
        return Err(Error::Parse(format!(
            "weight {text:?} needs {} block(s) for {}",
            blocks.len(),
            g.spec()
        )));
    }
    let mut coords = Vec::new();
    for (part, &size) in parts.iter().zip(blocks) {
        let entries: Vec<&str> = part.split(',').map(str::trim).collect();
        if entries.len() != size || entries.iter().any(|e| e.is_empty()) {
            return Err(Error::Parse(format!(
                "block {part:?} of {text:?} needs {size} entries"
            )));
        }
        for e in entries {
            coords.push(parse_rational(e)?);
        }
    }
    Ok(Weight(coords))
}

pub fn format_weight(g: &LieSuperalgebra, w: &Weight) -> String {
    w.format_blocks(g.weight_blocks())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub weight: Weight,
    pub parity: Parity,
    pub positive: bool,
    pub space_index: usize,
}

#[derive(Clone, Debug)]
pub struct RootData {
    pub roots: Vec<Root>,
    pub rho: Weight,
    pub rho1_doubled: Weight,
    pub form_signs: Option<Vec<i8>>,
}

impl RootData {
    pub fn positive(&self, parity: Parity) -> impl Iterator<Item = &Root> {
        self.roots
            .iter()
            .filter(move |r| r.positive && r.parity == parity)
    }

    /// Distinct root weights of the given parity.
    pub fn distinct(&self, parity: Parity) -> Vec<Weight> {
        self.roots
            .iter()
            .filter(|r| r.parity == parity)
            .map(|r| r.weight.clone())
            .sorted()
            .dedup()
            .collect()
    }

    /// Positive even roots that are not sums of two positive even roots.
    pub fn simple_even(&self) -> Vec<Weight> {
        let positive: Vec<Weight> = self
            .positive(Parity::Even)
            .map(|r| r.weight.clone())
            .sorted()
            .dedup()
            .collect();
        positive
            .iter()
            .filter(|a| {
                !positive
                    .iter()
                    .any(|b| positive.iter().any(|c| &(b + c) == *a))
            })
            .cloned()
            .collect()
    }
}

/// Weight of basis element `i` read off from the frame of diagonal matrices.
pub fn weight_of_basis(g: &LieSuperalgebra, i: usize) -> Result<Weight> {
    let x = &g.element(i).matrix;
    let mut coords = Vec::with_capacity(g.rank());
    for diag in g.frame() {
        let mut value: Option<Rational> = None;
        for (r, c, _) in x.triplets() {
            let eigen = &diag[r] - &diag[c];
            match &value {
                None => value = Some(eigen),
                Some(v) if *v == eigen => {}
                Some(_) => {
                    return Err(Error::NotDiagonalizable(format!(
                        "{} is not a root vector",
                        g.label(i)
                    )))
                }
            }
        }
        coords.push(value.unwrap_or_else(Rational::zero));
    }
    Ok(Weight(coords))
}

pub fn root_data(g: &LieSuperalgebra) -> Result<RootData> {
    let rank = g.rank();
    for &h in g.cartan_indices() {
        for j in 0..g.dim() {
            let image = g.bracket_basis(h, j);
            if image.indices().any(|t| t != j) {
                return Err(Error::NotDiagonalizable(format!(
                    "ad({}) on {}",
                    g.label(h),
                    g.label(j)
                )));
            }
        }
    }
    let mut roots = Vec::new();
    for b in g.basis() {
        if g.cartan_indices().contains(&b.index) {
            continue;
        }
        let weight = weight_of_basis(g, b.index)?;
        if weight.is_zero() {
            return Err(Error::Validation(format!(
                "{} has zero weight but is not Cartan",
                b.label
            )));
        }
        let positive = weight.is_lex_positive();
        roots.push(Root {
            weight,
            parity: b.parity,
            positive,
            space_index: b.index,
        });
    }
    let mut rho = Weight::zero(rank);
    let mut rho1_doubled = Weight::zero(rank);
    let half = qf(1, 2);
    for r in roots.iter().filter(|r| r.positive) {
        match r.parity {
            Parity::Even => rho = &rho + &r.weight.scaled(&half),
            Parity::Odd => {
                rho = &rho - &r.weight.scaled(&half);
                rho1_doubled = &rho1_doubled + &r.weight;
            }
        }
    }
    Ok(RootData {
        roots,
        rho,
        rho1_doubled,
        form_signs: g.form_signs().map(<[i8]>::to_vec),
    })
}

fn require_form(g: &LieSuperalgebra) -> Result<&[i8]> {
    match g.family() {
        Family::P | Family::PPrime => Err(Error::Unsupported(format!(
            "no invariant form on {}",
            g.spec()
        ))),
        _ => g
            .form_signs()
            .ok_or_else(|| Error::Unsupported(format!("no invariant form on {}", g.spec()))),
    }
}

pub fn weyl_vector(g: &LieSuperalgebra) -> Result<Weight> {
    require_form(g)?;
    Ok(root_data(g)?.rho)
}

pub fn two_rho_one(g: &LieSuperalgebra) -> Result<Weight> {
    require_form(g)?;
    Ok(root_data(g)?.rho1_doubled)
}

fn signed_form(signs: &[i8], mu: &Weight, nu: &Weight) -> Result<Rational> {
    if mu.len() != signs.len() || nu.len() != signs.len() {
        return Err(Error::DimensionMismatch(format!(
            "weights of length {} and {} for a form of rank {}",
            mu.len(),
            nu.len(),
            signs.len()
        )));
    }
    let mut acc = Rational::zero();
    for ((s, a), b) in signs.iter().zip(&mu.0).zip(&nu.0) {
        acc += a * b * q(*s as i64);
    }
    Ok(acc)
}

pub fn bilinear_form(g: &LieSuperalgebra, mu: &Weight, nu: &Weight) -> Result<Rational> {
    signed_form(require_form(g)?, mu, nu)
}

pub fn is_typical(g: &LieSuperalgebra, lambda: &Weight) -> Result<bool> {
    let data = root_data(g)?;
    let shifted = lambda_plus_rho(g, &data, lambda)?;
    for r in data.positive(Parity::Odd) {
        if bilinear_form(g, &shifted, &r.weight)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Π_{α ∈ Φ₁⁺} (λ+ρ, α)`.
pub fn atypicality_product(g: &LieSuperalgebra, lambda: &Weight) -> Result<Rational> {
    let data = root_data(g)?;
    let shifted = lambda_plus_rho(g, &data, lambda)?;
    let mut acc = Rational::one();
    for r in data.positive(Parity::Odd) {
        acc *= bilinear_form(g, &shifted, &r.weight)?;
    }
    Ok(acc)
}

fn lambda_plus_rho(g: &LieSuperalgebra, data: &RootData, lambda: &Weight) -> Result<Weight> {
    require_form(g)?;
    if lambda.len() != g.rank() {
        return Err(Error::DimensionMismatch(format!(
            "weight of length {} for rank {}",
            lambda.len(),
            g.rank()
        )));
    }
    Ok(lambda + &data.rho)
}

/// Signs of a form that is positive definite up to sign on each even block.
fn even_signs(g: &LieSuperalgebra) -> Vec<i8> {
    g.form_signs()
        .map_or_else(|| vec![1; g.rank()], <[i8]>::to_vec)
}

/// `2(λ, α)/(α, α)` for an even root `α`.
pub fn coroot_pairing(g: &LieSuperalgebra, lambda: &Weight, alpha: &Weight) -> Result<Rational> {
    let signs = even_signs(g);
    let norm = signed_form(&signs, alpha, alpha)?;
    if norm.is_zero() {
        return Err(Error::Validation(format!("isotropic even root {alpha}")));
    }
    Ok(q(2) * signed_form(&signs, lambda, alpha)? / norm)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPredicates {
    pub integral: bool,
    pub dominant: bool,
    pub regular: bool,
}

pub fn weight_predicates(g: &LieSuperalgebra, lambda: &Weight) -> Result<WeightPredicates> {
    let data = root_data(g)?;
    let shifted = lambda_plus_rho(g, &data, lambda)?;
    let mut integral = true;
    for alpha in data.distinct(Parity::Even) {
        integral &= coroot_pairing(g, lambda, &alpha)?.is_integer();
    }
    let mut dominant = true;
    for r in data.positive(Parity::Even) {
        let c = coroot_pairing(g, &shifted, &r.weight)?;
        dominant &= !(c.is_integer() && c.is_negative());
    }
    let mut regular = true;
    for alpha in data.simple_even() {
        regular &= !bilinear_form(g, &shifted, &alpha)?.is_zero();
    }
    Ok(WeightPredicates {
        integral,
        dominant,
        regular,
    })
}

/// Dominant integral for the even part: `⟨λ, α^∨⟩ ∈ ℤ_{≥0}` for positive even `α`.
pub fn is_even_dominant_integral(g: &LieSuperalgebra, lambda: &Weight) -> Result<bool> {
    if lambda.len() != g.rank() {
        return Err(Error::DimensionMismatch(format!(
            "weight of length {} for rank {}",
            lambda.len(),
            g.rank()
        )));
    }
    let data = root_data(g)?;
    for r in data.positive(Parity::Even) {
        let c = coroot_pairing(g, lambda, &r.weight)?;
        if !c.is_integer() || c.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Element of the even Weyl group acting as a signed permutation of coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            perm: (0..rank).collect(),
            signs: vec![1; rank],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &p)| k == p) && self.signs.iter().all(|&s| s == 1)
    }

    pub fn apply(&self, mu: &Weight) -> Weight {
        let mut out = vec![Rational::zero(); mu.len()];
        for (k, x) in mu.0.iter().enumerate() {
            out[self.perm[k]] = x * q(self.signs[k] as i64);
        }
        Weight(out)
    }
}

/// The even Weyl group as signed block permutations.
pub fn weyl_group(g: &LieSuperalgebra) -> Vec<WeylElement> {
    let rank = g.rank();
    let signed_block = g.family() == Family::Osp2;
    let mut factors: Vec<Vec<(Vec<usize>, Vec<i8>)>> = Vec::new();
    let mut start = 0;
    for (b, &size) in g.weight_blocks().iter().enumerate() {
        let mut options = Vec::new();
        for perm in (start..start + size).permutations(size) {
            if signed_block && b == 1 {
                for mask in 0..(1usize << size) {
                    let signs = (0..size)
                        .map(|k| if mask >> k & 1 == 1 { -1 } else { 1 })
                        .collect();
                    options.push((perm.clone(), signs));
                }
            } else {
                options.push((perm, vec![1; size]));
            }
        }
        factors.push(options);
        start += size;
    }
    factors
        .into_iter()
        .multi_cartesian_product()
        .map(|parts| {
            let mut perm = Vec::with_capacity(rank);
            let mut signs = Vec::with_capacity(rank);
            for (p, s) in parts {
                perm.extend(p);
                signs.extend(s);
            }
            WeylElement { perm, signs }
        })
        .collect()
}

/// `w·λ = w(λ+ρ) − ρ`.
pub fn dot_action(g: &LieSuperalgebra, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    let rho = weyl_vector(g)?;
    Ok(&w.apply(&(lambda + &rho)) - &rho)
}

/// Integer weights with coordinates in `lo..=hi` that are dominant integral for the even part.
pub fn dominant_grid(g: &LieSuperalgebra, lo: i64, hi: i64) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for coords in (0..g.rank()).map(|_| lo..=hi).multi_cartesian_product() {
        let w = Weight::from_ints(&coords);
        if is_even_dominant_integral(g, &w)? {
            out.push(w);
        }
    }
    if g.rank() == 0 {
        out.push(Weight::zero(0));
    }
    Ok(out)
}

/// Weight of a combination of root vectors of equal weight, if it is one.
pub fn weight_of_element(g: &LieSuperalgebra, x: &SparseVec) -> Result<Option<Weight>> {
    let mut found: Option<Weight> = None;
    for i in x.indices() {
        let w = if g.cartan_indices().contains(&i) {
            Weight::zero(g.rank())
        } else {
            weight_of_basis(g, i)?
        };
        match &found {
            None => found = Some(w),
            Some(v) if *v == w => {}
            Some(_) => return Ok(None),
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;
    use proptest::prelude::*;

    fn w(text: &str, g: &LieSuperalgebra) -> Weight {
        parse_weight(g, text).unwrap()
    }

    #[test]
    fn gl11_roots() {
        let g = parse_algebra("gl(1|1)").unwrap();
        let data = root_data(&g).unwrap();
        assert!(data.distinct(Parity::Even).is_empty());
        assert_eq!(
            data.distinct(Parity::Odd),
            vec![Weight::from_ints(&[-1, 1]), Weight::from_ints(&[1, -1])]
        );
        assert_eq!(weyl_vector(&g).unwrap(), Weight(vec![qf(-1, 2), qf(1, 2)]));
        assert_eq!(two_rho_one(&g).unwrap(), Weight::from_ints(&[1, -1]));
    }

    #[test]
    fn gl21_roots() {
        let g = parse_algebra("gl(2|1)").unwrap();
        let data = root_data(&g).unwrap();
        assert_eq!(data.positive(Parity::Even).count(), 1);
        let odd: Vec<Weight> = data
            .positive(Parity::Odd)
            .map(|r| r.weight.clone())
            .sorted()
            .collect();
        assert_eq!(
            odd,
            vec![
                Weight::from_ints(&[0, 1, -1]),
                Weight::from_ints(&[1, 0, -1])
            ]
        );
        assert_eq!(weyl_vector(&g).unwrap(), Weight::from_ints(&[0, -1, 1]));
        assert_eq!(two_rho_one(&g).unwrap(), Weight::from_ints(&[1, 1, -2]));
    }

    #[test]
    fn two_rho_one_of_gl() {
        for (m, n) in [(1, 2), (2, 2), (3, 1), (2, 3)] {
            let g = parse_algebra(&format!("gl({m}|{n})")).unwrap();
            let mut expected = vec![n as i64; m];
            expected.extend(vec![-(m as i64); n]);
            assert_eq!(two_rho_one(&g).unwrap(), Weight::from_ints(&expected));
            assert_eq!(root_data(&g).unwrap().positive(Parity::Odd).count(), m * n);
        }
    }

    #[test]
    fn rho_is_orthogonal_to_distinguished_simple_odd_root() {
        let g = parse_algebra("gl(2|2)").unwrap();
        let rho = weyl_vector(&g).unwrap();
        // distinguished simple odd root ε₂ − ε₃
        assert!(bilinear_form(&g, &rho, &Weight::from_ints(&[0, 1, -1, 0]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn p2_has_symmetric_square_root() {
        let g = parse_algebra("p(2)").unwrap();
        let data = root_data(&g).unwrap();
        assert!(data
            .distinct(Parity::Odd)
            .contains(&Weight::from_ints(&[2, 0])));
        assert!(weyl_vector(&g).is_err());
        assert!(is_typical(&g, &Weight::from_ints(&[0, 0])).is_err());
    }

    #[test]
    fn form_examples() {
        let g = parse_algebra("gl(1|1)").unwrap();
        let alpha = Weight::from_ints(&[1, -1]);
        assert_eq!(bilinear_form(&g, &alpha, &alpha).unwrap(), q(0));
        assert_eq!(
            bilinear_form(&g, &Weight::from_ints(&[3, 5]), &alpha).unwrap(),
            q(8)
        );
        let g2 = parse_algebra("gl(2|1)").unwrap();
        let beta = Weight::from_ints(&[1, -1, 0]);
        assert_eq!(bilinear_form(&g2, &beta, &beta).unwrap(), q(2));
        assert!(bilinear_form(&g2, &beta, &alpha).is_err());
    }

    #[test]
    fn typicality_examples() {
        let g = parse_algebra("gl(1|1)").unwrap();
        assert!(is_typical(&g, &w("1|0", &g)).unwrap());
        assert!(!is_typical(&g, &w("0|0", &g)).unwrap());
        let g2 = parse_algebra("gl(2|1)").unwrap();
        assert!(!is_typical(&g2, &w("0,0|0", &g2)).unwrap());
    }

    #[test]
    fn predicate_examples() {
        let g = parse_algebra("gl(2|1)").unwrap();
        let p = weight_predicates(&g, &w("1,0|0", &g)).unwrap();
        assert_eq!(
            p,
            WeightPredicates {
                integral: true,
                dominant: true,
                regular: true
            }
        );
        assert!(!weight_predicates(&g, &w("-1,0|0", &g)).unwrap().regular);
        assert!(!weight_predicates(&g, &w("1/2,0|0", &g)).unwrap().integral);
    }

    #[test]
    fn osp_roots_and_predicates() {
        let g = parse_algebra("osp(2|4)").unwrap();
        let data = root_data(&g).unwrap();
        assert_eq!(data.positive(Parity::Odd).count(), 4);
        assert_eq!(data.positive(Parity::Even).count(), 4);
        assert_eq!(two_rho_one(&g).unwrap(), Weight::from_ints(&[4, 0, 0]));
        assert!(is_even_dominant_integral(&g, &w("3|2,1", &g)).unwrap());
        assert!(!is_even_dominant_integral(&g, &w("3|1,2", &g)).unwrap());
        assert!(!is_even_dominant_integral(&g, &w("0|0,-1", &g)).unwrap());
    }

    #[test]
    fn weight_text_format() {
        let g = parse_algebra("gl(2|1)").unwrap();
        let x = w("2, 0 | -1", &g);
        assert_eq!(format_weight(&g, &x), "2,0|-1");
        assert!(parse_weight(&g, "2,0").is_err());
        assert_eq!(parse_weight(&g, "2,0,-1").unwrap(), x);
        assert!(parse_weight(&g, "2|0|1").is_err());
        let p = parse_algebra("p(3)").unwrap();
        assert_eq!(format_weight(&p, &w("1,0,-1/2", &p)), "1,0,-1/2");
    }

    #[test]
    fn weyl_group_orders() {
        assert_eq!(weyl_group(&parse_algebra("gl(2|2)").unwrap()).len(), 4);
        assert_eq!(weyl_group(&parse_algebra("gl(3|1)").unwrap()).len(), 6);
        assert_eq!(weyl_group(&parse_algebra("osp(2|4)").unwrap()).len(), 8);
    }

    #[test]
    fn regular_dominant_orbit_has_unique_dominant_member() {
        let g = parse_algebra("gl(3|1)").unwrap();
        let lambda = w("2,1,-1|0", &g);
        assert!(weight_predicates(&g, &lambda).unwrap().regular);
        for x in weyl_group(&g) {
            let image = dot_action(&g, &x, &lambda).unwrap();
            let dominant = weight_predicates(&g, &image).unwrap().dominant;
            assert_eq!(dominant, x.is_identity(), "{image}");
        }
    }

    fn small_weight(len: usize) -> impl Strategy<Value = Weight> {
        proptest::collection::vec(-4i64..=4, len).prop_map(|v| Weight::from_ints(&v))
    }

    proptest! {
        #[test]
        fn form_is_weyl_invariant(mu in small_weight(5), nu in small_weight(5)) {
            for text in ["gl(3|2)", "osp(2|8)"] {
                let g = parse_algebra(text).unwrap();
                let (mu, nu) = (Weight(mu.0[..g.rank()].to_vec()), Weight(nu.0[..g.rank()].to_vec()));
                let base = bilinear_form(&g, &mu, &nu).unwrap();
                for x in weyl_group(&g) {
                    prop_assert_eq!(bilinear_form(&g, &x.apply(&mu), &x.apply(&nu)).unwrap(), base.clone());
                }
            }
        }

        #[test]
        fn typicality_is_dot_invariant(lambda in small_weight(4)) {
            for text in ["gl(2|2)", "gl(3|1)", "osp(2|4)"] {
                let g = parse_algebra(text).unwrap();
                let lambda = Weight(lambda.0[..g.rank()].to_vec());
                let base = is_typical(&g, &lambda).unwrap();
                for x in weyl_group(&g) {
                    prop_assert_eq!(is_typical(&g, &dot_action(&g, &x, &lambda).unwrap()).unwrap(), base);
                }
            }
        }
    }

    #[test]
    fn root_count_matches_dimension() {
        for text in ["gl(2|3)", "gl(1|4)", "osp(2|6)"] {
            let g = parse_algebra(text).unwrap();
            let data = root_data(&g).unwrap();
            assert_eq!(data.roots.len() + g.rank(), g.dim(), "{text}");
            let mut all: Vec<Weight> = data.roots.iter().map(|r| r.weight.clone()).collect();
            let total = all.len();
            all.sort();
            all.dedup();
            assert_eq!(
                all.len(),
                total,
                "root spaces of {text} are one-dimensional"
            );
            for r in &data.roots {
                assert!(data
                    .roots
                    .iter()
                    .any(|s| s.weight == -&r.weight && s.positive != r.positive));
            }
        }
    }
}
