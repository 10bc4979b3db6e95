use std::fmt;

/// An element of W(B2), the symmetry group of the square, stored as a signed
/// permutation matrix `m` acting on row vectors: `x -> x m`.
///
/// The same matrix acts on the value space spanned by `t1, t2`, so for
/// `f = f1 t1 + f2 t2` the action `(w f)(x) = f(x w) w^{-1}` becomes the
/// substitution `x -> x m, t -> t m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    m: [[i8; 2]; 2],
}

impl GroupElement {
    pub const fn from_matrix(m: [[i8; 2]; 2]) -> Self {
        Self { m }
    }

    pub const fn identity() -> Self {
        Self::from_matrix([[1, 0], [0, 1]])
    }

    /// Reflection in the root `e1`: `x1 -> -x1`.
    pub const fn sigma1() -> Self {
        Self::from_matrix([[-1, 0], [0, 1]])
    }

    /// Reflection in the root `e2`: `x2 -> -x2`.
    pub const fn sigma2() -> Self {
        Self::from_matrix([[1, 0], [0, -1]])
    }

    /// Reflection in the root `e1 - e2`: `(x1, x2) -> (x2, x1)`.
    pub const fn sigma12_plus() -> Self {
        Self::from_matrix([[0, 1], [1, 0]])
    }

    /// Reflection in the root `e1 + e2`: `(x1, x2) -> (-x2, -x1)`.
    pub const fn sigma12_minus() -> Self {
        Self::from_matrix([[0, -1], [-1, 0]])
    }

    /// All eight elements, identity first.
    pub fn all() -> Vec<Self> {
        let mut elems = vec![Self::identity()];
        let gens = [Self::sigma1(), Self::sigma12_plus()];
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let h = elems[i].compose(&g);
                if !elems.contains(&h) {
                    elems.push(h);
                }
            }
            i += 1;
        }
        elems
    }

    pub fn reflections() -> [Self; 4] {
        [
            Self::sigma1(),
            Self::sigma2(),
            Self::sigma12_plus(),
            Self::sigma12_minus(),
        ]
    }

    pub fn matrix(&self) -> [[i8; 2]; 2] {
        self.m
    }

    /// Matrix product `self * other`, i.e. apply `self` then `other` to a row vector.
    pub fn compose(&self, other: &Self) -> Self {
        let mut m = [[0i8; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.m[i][0] * other.m[0][j] + self.m[i][1] * other.m[1][j];
            }
        }
        Self { m }
    }

    pub fn det(&self) -> i8 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn is_reflection(&self) -> bool {
        self.det() == -1
    }

    /// Image of coordinate `j` (0-based) under `x -> x m` as `(sign, index)`.
    fn image(&self, j: usize) -> (i8, usize) {
        if self.m[0][j] != 0 {
            (self.m[0][j], 0)
        } else {
            (self.m[1][j], 1)
        }
    }

    /// `x1^a x2^b` evaluated at `x m`, returned as a monomial exponent and sign.
    pub fn map_monomial(&self, a: u32, b: u32) -> ((u32, u32), i8) {
        let (s1, i1) = self.image(0);
        let (s2, i2) = self.image(1);
        let mut e = [0u32; 2];
        e[i1] += a;
        e[i2] += b;
        let mut sign = 1i8;
        if s1 < 0 && a % 2 == 1 {
            sign = -sign;
        }
        if s2 < 0 && b % 2 == 1 {
            sign = -sign;
        }
        ((e[0], e[1]), sign)
    }

    /// Components of `f` after `t -> t m`: new `f_i = sum_j m[i][j] f_j`.
    pub(crate) fn t_coefficients(&self) -> [[i8; 2]; 2] {
        self.m
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.m {
            [[1, 0], [0, 1]] => "id",
            [[-1, 0], [0, 1]] => "sigma1",
            [[1, 0], [0, -1]] => "sigma2",
            [[0, 1], [1, 0]] => "sigma12+",
            [[0, -1], [-1, 0]] => "sigma12-",
            [[-1, 0], [0, -1]] => "-id",
            [[0, 1], [-1, 0]] => "rot+",
            [[0, -1], [1, 0]] => "rot-",
            _ => "?",
        };
        write!(f, "{name}")
    }
}
