//! Lie superalgebras given by structure constants, their finite-dimensional
//! modules, and degree-one Chevalley–Eilenberg cohomology.
//!
//! Sign conventions: the bracket is the supercommutator
//! `[x, y] = xy - (-1)^{|x||y|} yx`, and a module is a super vector space
//! `V = V_0 ⊕ V_1` with an even map `ρ` satisfying
//! `ρ([x, y]) = ρ(x)ρ(y) - (-1)^{|x||y|} ρ(y)ρ(x)`.
//!
//! For modules `L1`, `L2` the internal Hom `M = Hom(L1, L2)` carries
//! `(x·f) = ρ2(x) f - (-1)^{|x||f|} f ρ1(x)`. The cochains used are the even
//! ones (`c(x)` has the parity of `x`, `c(x, y)` that of `|x| + |y|`):
//!
//! ```text
//! d0(m)(x)    = x·m
//! d1(c)(x, y) = x·c(y) - (-1)^{|x||y|} y·c(x) - c([x, y])
//! ```
//!
//! and `Ext¹(L1, L2)` in the category with even morphisms is
//! `ker d1 / im d0`. Only degrees 0 to 2 are needed for this.

use num_traits::{One, Zero};

use crate::linalg::{rat, zero_vec, Matrix, Rational};

#[derive(Clone, Debug)]
pub struct SuperLieAlgebra {
    names: Vec<String>,
    parity: Vec<u8>,
    /// `structure[i][j]` = coordinates of `[x_i, x_j]`.
    structure: Vec<Vec<Vec<Rational>>>,
}

fn sign(p: u8) -> Rational {
    if p.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `xy - (-1)^{px·py} yx`.
pub fn supercommutator(x: &Matrix, y: &Matrix, px: u8, py: u8) -> Matrix {
    let xy = x * y;
    let yx = y * x;
    &xy - &yx.scale(&sign(px * py))
}

impl SuperLieAlgebra {
    /// Builds the algebra spanned by the given homogeneous matrices, reading
    /// brackets off their supercommutators. Returns `None` when the span is
    /// not closed under the bracket or the matrices are dependent.
    pub fn from_matrices(names: Vec<String>, parity: Vec<u8>, matrices: &[Matrix]) -> Option<Self> {
        let flat: Vec<Vec<Rational>> = matrices.iter().map(|m| m.entries().to_vec()).collect();
        let rows = flat.first().map_or(0, Vec::len);
        let coords = Matrix::from_columns(rows, &flat);
        if coords.rank() != matrices.len() {
            return None;
        }
        let mut structure = Vec::with_capacity(matrices.len());
        for (i, x) in matrices.iter().enumerate() {
            let mut row = Vec::with_capacity(matrices.len());
            for (j, y) in matrices.iter().enumerate() {
                let z = supercommutator(x, y, parity[i], parity[j]);
                row.push(coords.solve(z.entries())?);
            }
            structure.push(row);
        }
        Some(SuperLieAlgebra {
            names,
            parity,
            structure,
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.structure[i][j]
    }

    /// Bracket of arbitrary (not necessarily homogeneous) elements.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, s) in out.iter_mut().zip(&self.structure[i][j]) {
                    *o += &ab * s;
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = zero_vec(self.dim());
        v[i] = Rational::one();
        v
    }

    /// Basis pairs violating `[x, y] = -(-1)^{|x||y|} [y, x]`.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let s = -sign(self.parity[i] * self.parity[j]);
                let ok = self.structure[i][j]
                    .iter()
                    .zip(&self.structure[j][i])
                    .all(|(a, b)| *a == &s * b);
                if !ok {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// Basis triples violating
    /// `[x, [y, z]] = [[x, y], z] + (-1)^{|x||y|} [y, [x, z]]`.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 0..self.dim() {
            let x = self.unit(i);
            for j in 0..self.dim() {
                let y = self.unit(j);
                let s = sign(self.parity[i] * self.parity[j]);
                for k in 0..self.dim() {
                    let z = self.unit(k);
                    let lhs = self.bracket(&x, &self.bracket(&y, &z));
                    let r1 = self.bracket(&self.bracket(&x, &y), &z);
                    let r2 = self.bracket(&y, &self.bracket(&x, &z));
                    let ok = lhs
                        .iter()
                        .zip(r1.iter().zip(&r2))
                        .all(|(l, (a, b))| *l == a + &s * b);
                    if !ok {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }
}

/// The queer Lie superalgebra `q(2)` inside `gl(2|2)`: supermatrices
/// `[[A, B], [B, A]]`. The even unit `e_ij` has `A = E_ij, B = 0`, the odd
/// unit `ē_ij` has `A = 0, B = E_ij`. Basis order: `e11 e12 e21 e22`, then
/// `ē11 ē12 ē21 ē22`.
pub fn build_q2() -> SuperLieAlgebra {
    let (names, parity, mats) = q2_matrices();
    SuperLieAlgebra::from_matrices(names, parity, &mats).expect("q(2) is closed under the bracket")
}

/// Names, parities and `4 × 4` realisations of the `q(2)` basis.
pub fn q2_matrices() -> (Vec<String>, Vec<u8>, Vec<Matrix>) {
    let mut names = Vec::new();
    let mut parity = Vec::new();
    let mut mats = Vec::new();
    for odd in [false, true] {
        for i in 0..2 {
            for j in 0..2 {
                let mut m = Matrix::zeros(4, 4);
                let (r, c) = if odd { (i, j + 2) } else { (i, j) };
                m[(r, c)] = Rational::one();
                m[(r + 2, (c + 2) % 4)] = Rational::one();
                let bar = if odd { "ē" } else { "e" };
                names.push(format!("{bar}{}{}", i + 1, j + 1));
                parity.push(odd as u8);
                mats.push(m);
            }
        }
    }
    (names, parity, mats)
}

/// A finite-dimensional module: basis vectors `0..even` are even, the rest
/// odd; `action[i]` is the matrix of the `i`-th basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperModule {
    pub even: usize,
    pub odd: usize,
    pub action: Vec<Matrix>,
}

impl SuperModule {
    /// The trivial module `L(0)` (even) or its parity shift `ΠL(0)` (odd).
    pub fn trivial(g: &SuperLieAlgebra, odd: bool) -> Self {
        let (e, o) = if odd { (0, 1) } else { (1, 0) };
        SuperModule {
            even: e,
            odd: o,
            action: vec![Matrix::zeros(1, 1); g.dim()],
        }
    }

    pub fn dim(&self) -> usize {
        self.even + self.odd
    }

    pub fn vector_parity(&self, k: usize) -> u8 {
        (k >= self.even) as u8
    }

    /// Parity shift: the odd part becomes even. Odd elements act with an
    /// extra sign so that the bracket rule survives the shift.
    pub fn parity_shift(&self, g: &SuperLieAlgebra) -> Self {
        let n = self.dim();
        let perm: Vec<usize> = (self.even..n).chain(0..self.even).collect();
        let action = self
            .action
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let mut out = Matrix::zeros(n, n);
                for (r, &pr) in perm.iter().enumerate() {
                    for (c, &pc) in perm.iter().enumerate() {
                        out[(r, c)] = &m[(pr, pc)] * sign(g.parity(i));
                    }
                }
                out
            })
            .collect();
        SuperModule {
            even: self.odd,
            odd: self.even,
            action,
        }
    }

    /// Checks shapes, that each `ρ(x_i)` has the parity of `x_i`, and the
    /// bracket rule on all basis pairs.
    pub fn is_module(&self, g: &SuperLieAlgebra) -> bool {
        let n = self.dim();
        if self.action.len() != g.dim() || self.action.iter().any(|m| m.shape() != (n, n)) {
            return false;
        }
        for (i, m) in self.action.iter().enumerate() {
            for r in 0..n {
                for c in 0..n {
                    let p = self.vector_parity(r) + self.vector_parity(c) + g.parity(i);
                    if p % 2 == 1 && !m[(r, c)].is_zero() {
                        return false;
                    }
                }
            }
        }
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let lhs = self.act(g.basis_bracket(i, j));
                let rhs = supercommutator(&self.action[i], &self.action[j], g.parity(i), g.parity(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// `ρ(x)` for an arbitrary element `x`.
    pub fn act(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (c, m) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }
}

/// `g` acting on itself by the bracket.
pub fn adjoint_module(g: &SuperLieAlgebra) -> SuperModule {
    let order: Vec<usize> = (0..g.dim())
        .filter(|&i| g.parity(i) == 0)
        .chain((0..g.dim()).filter(|&i| g.parity(i) == 1))
        .collect();
    let even = order.iter().filter(|&&i| g.parity(i) == 0).count();
    let n = g.dim();
    let action = (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(n, n);
            for (c, &j) in order.iter().enumerate() {
                let b = g.basis_bracket(i, j);
                for (r, &k) in order.iter().enumerate() {
                    m[(r, c)] = b[k].clone();
                }
            }
            m
        })
        .collect();
    SuperModule {
        even,
        odd: n - even,
        action,
    }
}

/// Internal Hom as a list of basis maps `E_{ab}` (`a` in `L2`, `b` in `L1`)
/// with their parities, plus the action of each `x_i` in those coordinates.
struct HomModule {
    parity: Vec<u8>,
    /// `action[i]` acts on coordinates of `M`.
    action: Vec<Matrix>,
}

fn hom_module(g: &SuperLieAlgebra, l1: &SuperModule, l2: &SuperModule) -> HomModule {
    let (n1, n2) = (l1.dim(), l2.dim());
    let index = |a: usize, b: usize| a * n1 + b;
    let mut parity = vec![0u8; n1 * n2];
    for a in 0..n2 {
        for b in 0..n1 {
            parity[index(a, b)] = (l2.vector_parity(a) + l1.vector_parity(b)) % 2;
        }
    }
    let action = (0..g.dim())
        .map(|i| {
            let px = g.parity(i);
            let mut m = Matrix::zeros(n1 * n2, n1 * n2);
            for a in 0..n2 {
                for b in 0..n1 {
                    let col = index(a, b);
                    let s = sign(px * parity[col]);
                    // ρ2(x) E_ab = Σ_r ρ2(x)[r,a] E_rb
                    for r in 0..n2 {
                        m[(index(r, b), col)] += &l2.action[i][(r, a)];
                    }
                    // E_ab ρ1(x) = Σ_c ρ1(x)[b,c] E_ac
                    for c in 0..n1 {
                        m[(index(a, c), col)] -= &s * &l1.action[i][(b, c)];
                    }
                }
            }
            m
        })
        .collect();
    HomModule { parity, action }
}

/// `dim Ext¹(L1, L2)` for even morphisms, via the cochains described in the
/// module docs.
pub fn ext1_super(g: &SuperLieAlgebra, l1: &SuperModule, l2: &SuperModule) -> usize {
    let hom = hom_module(g, l1, l2);
    let m_dim = hom.parity.len();
    let of_parity = |p: u8| -> Vec<usize> { (0..m_dim).filter(|&k| hom.parity[k] == p % 2).collect() };

    // C^0: even elements of M.
    let c0 = of_parity(0);
    // C^1 unknowns: (x_i, k) with |k| = |x_i|.
    let c1: Vec<(usize, usize)> = (0..g.dim())
        .flat_map(|i| of_parity(g.parity(i)).into_iter().map(move |k| (i, k)))
        .collect();
    let c1_pos = |i: usize, k: usize| c1.iter().position(|&e| e == (i, k));

    // d0: C^0 -> C^1, as a matrix in the c1 coordinates.
    let mut d0 = Matrix::zeros(c1.len(), c0.len());
    for (col, &m) in c0.iter().enumerate() {
        for i in 0..g.dim() {
            for k in 0..m_dim {
                let v = &hom.action[i][(k, m)];
                if !v.is_zero() {
                    let row = c1_pos(i, k).expect("x·m has the parity of x");
                    d0[(row, col)] = v.clone();
                }
            }
        }
    }

    // d1: C^1 -> maps g × g -> M, rows indexed by (i, j, k).
    let n = g.dim();
    let row_of = |i: usize, j: usize, k: usize| (i * n + j) * m_dim + k;
    let mut d1 = Matrix::zeros(n * n * m_dim, c1.len());
    for (col, &(l, m)) in c1.iter().enumerate() {
        // c = delta at (x_l ↦ basis m of M)
        for i in 0..n {
            for j in 0..n {
                let s = sign(g.parity(i) * g.parity(j));
                for k in 0..m_dim {
                    let mut v = rat(0);
                    if j == l {
                        v += &hom.action[i][(k, m)];
                    }
                    if i == l {
                        v -= &s * &hom.action[j][(k, m)];
                    }
                    if k == m {
                        v -= &g.basis_bracket(i, j)[l];
                    }
                    if !v.is_zero() {
                        d1[(row_of(i, j, k), col)] = v;
                    }
                }
            }
        }
    }
    let cocycles = c1.len() - d1.rank();
    cocycles - d0.rank()
}
