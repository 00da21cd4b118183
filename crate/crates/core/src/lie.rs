//! Simple Lie algebras given by explicit structure constants.
//!
//! Basis order is Chevalley-style: positive root vectors by height, then the
//! coroot basis of the Cartan subalgebra, then negative root vectors by height.
//! The invariant form is the trace form of the defining representation.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{int, QMatrix, Rat};

/// Coordinates of an element of `g` in the fixed basis.
pub type ElementVector = Vec<Rat>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
}

/// Role of a basis element. Root vectors carry their matrix position `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    PositiveRoot { i: usize, j: usize },
    Coroot(usize),
    NegativeRoot { i: usize, j: usize },
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    series: Series,
    rank: usize,
    dim: usize,
    borel_dim: usize,
    degrees: Vec<usize>,
    labels: Vec<String>,
    kinds: Vec<BasisKind>,
    matrices: Vec<QMatrix>,
    structure: Vec<Vec<Vec<(usize, Rat)>>>,
    form: QMatrix,
    form_inv: QMatrix,
}

/// One positive root: the index of its root vector and its values on the coroot basis.
#[derive(Clone, Debug)]
pub struct PositiveRoot {
    pub vector: usize,
    pub on_coroots: Vec<Rat>,
}

fn unit_matrix(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m.set(i, j, Rat::one());
    m
}

fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let ab = a.mul(b).expect("square");
    let ba = b.mul(a).expect("square");
    let n = a.rows();
    let mut c = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            c.set(i, j, ab.get(i, j) - ba.get(i, j));
        }
    }
    c
}

fn trace_of_product(a: &QMatrix, b: &QMatrix) -> Rat {
    let n = a.rows();
    let mut t = Rat::zero();
    for i in 0..n {
        for k in 0..n {
            let x = a.get(i, k);
            if !x.is_zero() {
                t += x * b.get(k, i);
            }
        }
    }
    t
}

type BasisTable = (Vec<String>, Vec<BasisKind>, Vec<QMatrix>, Vec<usize>);

fn type_a_basis(rank: usize) -> BasisTable {
    let n = rank + 1;
    let (mut labels, mut kinds, mut mats) = (Vec::new(), Vec::new(), Vec::new());
    let root_label = |p: char, i: usize, j: usize| {
        if rank == 1 { p.to_string() } else { format!("{p}{}{}", i + 1, j + 1) }
    };
    for h in 1..n {
        for i in 0..n - h {
            labels.push(root_label('e', i, i + h));
            kinds.push(BasisKind::PositiveRoot { i, j: i + h });
            mats.push(unit_matrix(n, i, i + h));
        }
    }
    for k in 0..rank {
        labels.push(if rank == 1 { "h".to_string() } else { format!("h{}", k + 1) });
        kinds.push(BasisKind::Coroot(k));
        let mut m = unit_matrix(n, k, k);
        m.set(k + 1, k + 1, -Rat::one());
        mats.push(m);
    }
    for h in 1..n {
        for i in 0..n - h {
            labels.push(root_label('f', i + h, i));
            kinds.push(BasisKind::NegativeRoot { i: i + h, j: i });
            mats.push(unit_matrix(n, i + h, i));
        }
    }
    (labels, kinds, mats, (2..=rank + 1).collect())
}

/// Constructs a simple Lie algebra from its series and rank.
///
/// Only type A of rank at most 4 is available; every axiom is verified before returning.
pub fn build_simple(series: Series, rank: usize) -> Result<LieAlgebra> {
    if rank == 0 {
        return Err(Error::Contract("rank must be at least 1".into()));
    }
    let (labels, kinds, matrices, degrees) = match series {
        Series::A if rank <= 4 => type_a_basis(rank),
        _ => {
            return Err(Error::Capability(format!("{series:?}{rank} is not available")));
        }
    };
    let dim = matrices.len();
    let form = {
        let mut f = QMatrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                f.set(i, j, trace_of_product(&matrices[i], &matrices[j]));
            }
        }
        f
    };
    let form_inv = form
        .inverse()
        .ok_or_else(|| Error::Structural("trace form is degenerate".into()))?;
    let mut alg = LieAlgebra {
        series,
        rank,
        dim,
        borel_dim: degrees.iter().sum(),
        degrees,
        labels,
        kinds,
        matrices,
        structure: Vec::new(),
        form,
        form_inv,
    };
    let mut structure = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let c = commutator(&alg.matrices[i], &alg.matrices[j]);
            structure[i][j] = alg
                .decompose(&c)
                .ok_or_else(|| Error::Structural("commutator leaves the algebra".into()))?
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
        }
    }
    alg.structure = structure;
    alg.verify_axioms()?;
    Ok(alg)
}

impl LieAlgebra {
    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn borel_dim(&self) -> usize {
        self.borel_dim
    }

    /// `n = b_g - rank`.
    pub fn n_value(&self) -> usize {
        self.borel_dim - self.rank
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn kind(&self, i: usize) -> BasisKind {
        self.kinds[i]
    }

    pub fn name(&self) -> String {
        format!("{:?}{}", self.series, self.rank)
    }

    pub fn form(&self) -> &QMatrix {
        &self.form
    }

    pub fn form_inverse(&self) -> &QMatrix {
        &self.form_inv
    }

    /// Nonzero structure constants of `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.structure[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> ElementVector {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = Rat::one();
        v
    }

    /// Basis index of a label such as `"e"` or `"h2"`.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Element with the given label coefficients.
    pub fn element(&self, parts: &[(&str, i64)]) -> ElementVector {
        let mut v = vec![Rat::zero(); self.dim];
        for (l, c) in parts {
            let i = self.index_of(l).unwrap_or_else(|| panic!("unknown basis label {l}"));
            v[i] += int(*c);
        }
        v
    }

    pub fn cartan_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| matches!(self.kinds[i], BasisKind::Coroot(_))).collect()
    }

    pub fn negative_indices(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|&i| matches!(self.kinds[i], BasisKind::NegativeRoot { .. }))
            .collect()
    }

    pub fn positive_indices(&self) -> Vec<usize> {
        (0..self.dim)
            .filter(|&i| matches!(self.kinds[i], BasisKind::PositiveRoot { .. }))
            .collect()
    }

    /// Positive roots as linear forms on the coroot coordinates of `h`.
    pub fn positive_roots(&self) -> Vec<PositiveRoot> {
        let mut out = Vec::new();
        for (v, kind) in self.kinds.iter().enumerate() {
            if let BasisKind::PositiveRoot { i, j } = *kind {
                // diag_s(H) = c_s - c_{s-1}; alpha_{ij}(H) = diag_i - diag_j.
                let mut lf = vec![Rat::zero(); self.rank];
                let mut add = |s: usize, sign: i64| {
                    if s < self.rank {
                        lf[s] += int(sign);
                    }
                    if s >= 1 && s - 1 < self.rank {
                        lf[s - 1] -= int(sign);
                    }
                };
                add(i, 1);
                add(j, -1);
                out.push(PositiveRoot { vector: v, on_coroots: lf });
            }
        }
        out
    }

    /// Matrix of an element in the defining representation.
    pub fn to_matrix(&self, x: &[Rat]) -> QMatrix {
        let n = self.matrices[0].rows();
        let mut m = QMatrix::zeros(n, n);
        for (c, b) in x.iter().zip(&self.matrices) {
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let v = b.get(i, j);
                    if !v.is_zero() {
                        let nv = m.get(i, j) + c * v;
                        m.set(i, j, nv);
                    }
                }
            }
        }
        m
    }

    /// Coordinates of a traceless matrix, or `None` if it is not in the algebra.
    pub fn decompose(&self, m: &QMatrix) -> Option<ElementVector> {
        let n = m.rows();
        let mut x = vec![Rat::zero(); self.dim];
        let mut running = Rat::zero();
        for (idx, kind) in self.kinds.iter().enumerate() {
            match *kind {
                BasisKind::PositiveRoot { i, j } | BasisKind::NegativeRoot { i, j } => {
                    x[idx] = m.get(i, j).clone();
                }
                BasisKind::Coroot(k) => {
                    running += m.get(k, k);
                    x[idx] = running.clone();
                }
            }
        }
        let back = self.to_matrix(&x);
        (0..n).all(|i| (0..n).all(|j| back.get(i, j) == m.get(i, j))).then_some(x)
    }

    fn check_len(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::Structural(format!(
                "element of length {} in a {}-dimensional algebra",
                v.len(),
                self.dim
            )));
        }
        Ok(())
    }

    pub fn bracket(&self, u: &[Rat], v: &[Rat]) -> Result<ElementVector> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.commutator(u, v))
    }

    /// Bracket without the length check; panics on mismatched lengths.
    pub fn commutator(&self, u: &[Rat], v: &[Rat]) -> ElementVector {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let c = ui * vj;
                for (k, s) in &self.structure[i][j] {
                    out[*k] += &c * s;
                }
            }
        }
        out
    }

    /// The invariant form `<u, v>`.
    pub fn pair(&self, u: &[Rat], v: &[Rat]) -> Rat {
        let fv = self.form.mul_vec(v);
        crate::exact::rat::dot(u, &fv)
    }

    /// Matrix of `ad x`; column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Rat]) -> QMatrix {
        let cols: Vec<ElementVector> = (0..self.dim).map(|j| self.commutator(x, &self.basis_vector(j))).collect();
        QMatrix::from_cols(&cols, self.dim).expect("square")
    }

    /// A basis of the centralizer `g^x`.
    pub fn centralizer(&self, x: &[Rat]) -> Vec<ElementVector> {
        let rk = self.ad_matrix(x).rank_kernel();
        rk.kernel
    }

    pub fn is_regular(&self, x: &[Rat]) -> bool {
        self.ad_matrix(x).rank() == self.dim - self.rank
    }

    /// Deterministic pseudo-random element with coordinates of height at most `height_bound`.
    pub fn sample_rational(&self, seed: u64, height_bound: u64) -> ElementVector {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.sample_with(&mut rng, height_bound)
    }

    pub fn sample_with(&self, rng: &mut impl Rng, height_bound: u64) -> ElementVector {
        (0..self.dim).map(|_| sample_coordinate(rng, height_bound)).collect()
    }

    /// Random element of the Borel subalgebra (negative root coordinates zero).
    pub fn sample_borel_with(&self, rng: &mut impl Rng, height_bound: u64) -> ElementVector {
        let mut v = self.sample_with(rng, height_bound);
        for i in self.negative_indices() {
            v[i] = Rat::zero();
        }
        v
    }

    /// `exp(t ad v)` for `ad v` nilpotent; `None` if the series does not terminate.
    pub fn exp_ad(&self, v: &[Rat], t: &Rat) -> Option<QMatrix> {
        let mut a = self.ad_matrix(v);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let s = a.get(i, j) * t;
                a.set(i, j, s);
            }
        }
        let mut total = QMatrix::identity(self.dim);
        let mut term = QMatrix::identity(self.dim);
        for k in 1..=self.dim + 1 {
            term = term.mul(&a).ok()?;
            if term.is_zero() {
                return Some(total);
            }
            let inv_k = Rat::one() / int(k as i64);
            let mut scaled = QMatrix::zeros(self.dim, self.dim);
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let s = term.get(i, j) * &inv_k;
                    scaled.set(i, j, s);
                }
            }
            term = scaled;
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let s = total.get(i, j) + term.get(i, j);
                    total.set(i, j, s);
                }
            }
        }
        None
    }

    /// Antisymmetry, Jacobi, invariance and nondegeneracy of the form, and the
    /// dimension identities.
    pub fn verify_axioms(&self) -> Result<()> {
        let d = self.dim;
        let basis: Vec<ElementVector> = (0..d).map(|i| self.basis_vector(i)).collect();
        let brackets: Vec<Vec<ElementVector>> = (0..d)
            .map(|i| (0..d).map(|j| self.commutator(&basis[i], &basis[j])).collect())
            .collect();
        for i in 0..d {
            for j in 0..d {
                let s: Vec<Rat> = brackets[i][j].iter().zip(&brackets[j][i]).map(|(a, b)| a + b).collect();
                if !crate::exact::rat::is_zero_vec(&s) {
                    return Err(Error::Structural(format!("antisymmetry fails at ({i},{j})")));
                }
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let a = self.commutator(&basis[i], &brackets[j][k]);
                    let b = self.commutator(&basis[j], &brackets[k][i]);
                    let c = self.commutator(&basis[k], &brackets[i][j]);
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return Err(Error::Structural(format!("Jacobi fails at ({i},{j},{k})")));
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                if self.form.get(i, j) != self.form.get(j, i) {
                    return Err(Error::Structural("form is not symmetric".into()));
                }
                for k in 0..d {
                    let lhs = self.pair(&brackets[i][j], &basis[k]);
                    let rhs = self.pair(&basis[i], &brackets[j][k]);
                    if lhs != rhs {
                        return Err(Error::Structural(format!("form not invariant at ({i},{j},{k})")));
                    }
                }
            }
        }
        if self.form.rank() != d {
            return Err(Error::Structural("form is degenerate".into()));
        }
        if d != 2 * self.borel_dim - self.rank {
            return Err(Error::Structural("dim g != 2 b_g - rank".into()));
        }
        Ok(())
    }
}

fn sample_coordinate(rng: &mut impl Rng, height_bound: u64) -> Rat {
    let h = height_bound.max(1) as i64;
    let num = rng.gen_range(-h..=h);
    let den = rng.gen_range(1..=h);
    Rat::new(num.into(), den.into())
}
