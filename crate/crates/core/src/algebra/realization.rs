//! Explicit matrix realizations of the supported families.

use crate::linalg::{q, RatMatrix, Rational};

use super::spec::{AlgebraSpec, Family};

pub(crate) struct RawElement {
    pub label: String,
    pub zdegree: i8,
    pub matrix: RatMatrix,
}

pub(crate) struct RawRealization {
    /// Coordinates `>= odd_from` of the defining space are odd.
    pub odd_from: usize,
    pub elements: Vec<RawElement>,
    /// Diagonal matrices whose ad-eigenvalues give weight coordinates.
    pub frame: Vec<Vec<Rational>>,
    pub form_signs: Option<Vec<i8>>,
    pub weight_blocks: Vec<usize>,
    /// Diagonal of the grading element `d`.
    pub grading: Vec<Rational>,
}

fn unit(size: usize, i: usize, j: usize) -> RatMatrix {
    RatMatrix::from_triplets(size, size, [(i, j, q(1))])
}

fn combo(size: usize, terms: &[(usize, usize, i64)]) -> RatMatrix {
    RatMatrix::from_triplets(size, size, terms.iter().map(|&(i, j, c)| (i, j, q(c))))
}

fn diag_indicator(size: usize, entries: &[(usize, i64)]) -> Vec<Rational> {
    let mut out = vec![q(0); size];
    for &(i, c) in entries {
        out[i] += q(c);
    }
    out
}

fn leading_entry(m: &RatMatrix) -> (usize, usize) {
    m.triplets()
        .into_iter()
        .map(|(i, j, _)| (i, j))
        .min()
        .unwrap_or((0, 0))
}

/// Sort by `Z`-degree, then by the row-major position of the first nonzero entry.
fn order(elements: &mut [RawElement]) {
    elements.sort_by_key(|e| (e.zdegree, leading_entry(&e.matrix)));
}

pub(crate) fn realize(spec: AlgebraSpec) -> RawRealization {
    let mut raw = match spec.family {
        Family::Gl => general_linear(spec.m, spec.n, false),
        Family::Sl | Family::SlNnModCenter => general_linear(spec.m, spec.n, true),
        Family::Osp2 => orthosymplectic(spec.n),
        Family::P => periplectic(spec.n, false),
        Family::PPrime => periplectic(spec.n, true),
    };
    order(&mut raw.elements);
    raw
}

fn general_linear(m: usize, n: usize, traceless: bool) -> RawRealization {
    let size = m + n;
    let block = |i: usize| usize::from(i >= m);
    let mut elements = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if i == j && traceless {
                continue;
            }
            let zdegree = block(j) as i8 - block(i) as i8;
            elements.push(RawElement {
                label: format!("e_{{{},{}}}", i + 1, j + 1),
                zdegree,
                matrix: unit(size, i, j),
            });
        }
    }
    if traceless {
        for k in 0..size - 1 {
            let (sign, op) = if k + 1 == m { (1, '+') } else { (-1, '-') };
            elements.push(RawElement {
                label: format!("e_{{{},{}}}{op}e_{{{},{}}}", k + 1, k + 1, k + 2, k + 2),
                zdegree: 0,
                matrix: combo(size, &[(k, k, 1), (k + 1, k + 1, sign)]),
            });
        }
    }
    RawRealization {
        odd_from: m,
        elements,
        frame: (0..size).map(|k| diag_indicator(size, &[(k, 1)])).collect(),
        form_signs: Some((0..size).map(|k| if k < m { 1 } else { -1 }).collect()),
        weight_blocks: vec![m, n],
        grading: (0..size).map(|k| q(block(k) as i64)).collect(),
    }
}

/// `osp(2|2n)` on `C^{2|2n}` with even coordinates `0, 1` and the symplectic
/// coordinates split as `2..2+n` and `2+n..2+2n`.
fn orthosymplectic(n: usize) -> RawRealization {
    let size = 2 + 2 * n;
    let a = |i: usize| 2 + i;
    let b = |i: usize| 2 + n + i;
    let mut elements = vec![RawElement {
        label: "e_{1,1}-e_{2,2}".into(),
        zdegree: 0,
        matrix: combo(size, &[(0, 0, 1), (1, 1, -1)]),
    }];
    for i in 0..n {
        for j in 0..n {
            elements.push(RawElement {
                label: format!("A_{{{},{}}}", i + 1, j + 1),
                zdegree: 0,
                matrix: combo(size, &[(a(i), a(j), 1), (b(j), b(i), -1)]),
            });
        }
        for j in i..n {
            let (bm, cm) = if i == j {
                (unit(size, a(i), b(i)), unit(size, b(i), a(i)))
            } else {
                (
                    combo(size, &[(a(i), b(j), 1), (a(j), b(i), 1)]),
                    combo(size, &[(b(i), a(j), 1), (b(j), a(i), 1)]),
                )
            };
            elements.push(RawElement {
                label: format!("B_{{{},{}}}", i + 1, j + 1),
                zdegree: 0,
                matrix: bm,
            });
            elements.push(RawElement {
                label: format!("C_{{{},{}}}", i + 1, j + 1),
                zdegree: 0,
                matrix: cm,
            });
        }
        elements.push(RawElement {
            label: format!("X_{}", i + 1),
            zdegree: 1,
            matrix: combo(size, &[(0, a(i), 1), (b(i), 1, 1)]),
        });
        elements.push(RawElement {
            label: format!("Y_{}", i + 1),
            zdegree: 1,
            matrix: combo(size, &[(0, b(i), 1), (a(i), 1, -1)]),
        });
        elements.push(RawElement {
            label: format!("V_{}", i + 1),
            zdegree: -1,
            matrix: combo(size, &[(1, a(i), 1), (b(i), 0, 1)]),
        });
        elements.push(RawElement {
            label: format!("U_{}", i + 1),
            zdegree: -1,
            matrix: combo(size, &[(1, b(i), 1), (a(i), 0, -1)]),
        });
    }
    let mut frame = vec![diag_indicator(size, &[(0, 1), (1, -1)])];
    frame.extend((0..n).map(|i| diag_indicator(size, &[(a(i), 1), (b(i), -1)])));
    let mut form_signs = vec![1];
    form_signs.extend(std::iter::repeat(-1).take(n));
    RawRealization {
        odd_from: 2,
        elements,
        frame,
        form_signs: Some(form_signs),
        weight_blocks: vec![1, n],
        grading: diag_indicator(size, &[(0, 1), (1, -1)]),
    }
}

fn periplectic(n: usize, derived: bool) -> RawRealization {
    let size = 2 * n;
    let mut elements = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if derived && i == j {
                continue;
            }
            elements.push(RawElement {
                label: format!(
                    "e_{{{},{}}}-e_{{{},{}}}",
                    i + 1,
                    j + 1,
                    n + j + 1,
                    n + i + 1
                ),
                zdegree: 0,
                matrix: combo(size, &[(i, j, 1), (n + j, n + i, -1)]),
            });
        }
    }
    if derived {
        for k in 0..n - 1 {
            elements.push(RawElement {
                label: format!(
                    "e_{{{a},{a}}}-e_{{{b},{b}}}-e_{{{c},{c}}}+e_{{{d},{d}}}",
                    a = k + 1,
                    b = n + k + 1,
                    c = k + 2,
                    d = n + k + 2
                ),
                zdegree: 0,
                matrix: combo(
                    size,
                    &[
                        (k, k, 1),
                        (n + k, n + k, -1),
                        (k + 1, k + 1, -1),
                        (n + k + 1, n + k + 1, 1),
                    ],
                ),
            });
        }
    }
    for i in 0..n {
        for j in i..n {
            let (label, matrix) = if i == j {
                (
                    format!("e_{{{},{}}}", i + 1, n + i + 1),
                    unit(size, i, n + i),
                )
            } else {
                (
                    format!(
                        "e_{{{},{}}}+e_{{{},{}}}",
                        i + 1,
                        n + j + 1,
                        j + 1,
                        n + i + 1
                    ),
                    combo(size, &[(i, n + j, 1), (j, n + i, 1)]),
                )
            };
            elements.push(RawElement {
                label,
                zdegree: 1,
                matrix,
            });
        }
        for j in i + 1..n {
            elements.push(RawElement {
                label: format!(
                    "e_{{{},{}}}-e_{{{},{}}}",
                    n + i + 1,
                    j + 1,
                    n + j + 1,
                    i + 1
                ),
                zdegree: -1,
                matrix: combo(size, &[(n + i, j, 1), (n + j, i, -1)]),
            });
        }
    }
    RawRealization {
        odd_from: n,
        elements,
        frame: (0..n)
            .map(|k| diag_indicator(size, &[(k, 1), (n + k, -1)]))
            .collect(),
        form_signs: None,
        weight_blocks: vec![n],
        grading: (0..size)
            .map(|k| if k < n { q(1) } else { q(-1) })
            .collect(),
    }
}
