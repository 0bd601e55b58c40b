/// Dimensions of a polynomial ring with variables `x1..xk, y1..yn`.
///
/// The x-block occupies variable indices `0..num_x`, the y-block
/// `num_x..num_x+num_y`. Subrings (x-only, y-only) are just rings with one
/// block empty; embeddings between rings are explicit exponent remaps on the
/// polynomial side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyRing {
    num_x: usize,
    num_y: usize,
}

impl PolyRing {
    pub fn new(num_x: usize, num_y: usize) -> Self {
        PolyRing { num_x, num_y }
    }

    /// The ambient bigraded ring T = K[x1..xk, y1..yn].
    pub fn bigraded(num_x: usize, num_y: usize) -> Self {
        Self::new(num_x, num_y)
    }

    /// x-only subring view.
    pub fn x_only(num_x: usize) -> Self {
        Self::new(num_x, 0)
    }

    /// y-only subring view.
    pub fn y_only(num_y: usize) -> Self {
        Self::new(0, num_y)
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    pub fn num_y(&self) -> usize {
        self.num_y
    }

    pub fn num_vars(&self) -> usize {
        self.num_x + self.num_y
    }

    pub fn is_x_var(&self, idx: usize) -> bool {
        idx < self.num_x
    }

    /// Variable index of `x_{i+1}`.
    pub fn x_var(&self, i: usize) -> usize {
        assert!(i < self.num_x, "x index out of range");
        i
    }

    /// Variable index of `y_{j+1}`.
    pub fn y_var(&self, j: usize) -> usize {
        assert!(j < self.num_y, "y index out of range");
        self.num_x + j
    }

    pub fn x_vars(&self) -> impl Iterator<Item = usize> {
        0..self.num_x
    }

    pub fn y_vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.num_x..self.num_vars()
    }

    pub fn var_name(&self, idx: usize) -> String {
        assert!(idx < self.num_vars(), "variable index out of range");
        if idx < self.num_x {
            format!("x{}", idx + 1)
        } else {
            format!("y{}", idx - self.num_x + 1)
        }
    }

    /// Parse a variable name (`x3`, `y12`) back to its index.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        let (block, rest) = name.split_at(1);
        let pos: usize = rest.parse().ok()?;
        if pos == 0 {
            return None;
        }
        match block {
            "x" if pos <= self.num_x => Some(pos - 1),
            "y" if pos <= self.num_y => Some(self.num_x + pos - 1),
            _ => None,
        }
    }
}
