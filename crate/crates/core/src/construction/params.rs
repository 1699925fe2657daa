use thiserror::Error;

/// Largest vertex count the sampler will materialize.
pub const MAX_SAMPLE_VERTICES: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParamError {
    #[error("girth target r = {0} must be at least 4")]
    GirthTooSmall(usize),
    #[error("need at least 2 layers, got {0}")]
    TooFewLayers(usize),
    #[error("layers need at least 2 vertices, got {0}")]
    LayerTooSmall(usize),
    #[error("edge scale must be positive and finite, got {0}")]
    BadScale(f64),
    #[error("n = {n} is below 2^(10r) = 2^{exp}")]
    BelowThreshold { n: u128, exp: usize },
    #[error("edge probability between layers {i} and {j} exceeds 1")]
    ProbabilityAboveOne { i: usize, j: usize },
    #[error("{0} vertices exceed the sampling limit")]
    TooLarge(u128),
}

/// Which parameter regime the layered graph is drawn from.
#[derive(Clone, Debug, PartialEq)]
pub enum Mode {
    /// `N = 3n`, `k = floor(log2 N / 10r)`, `m = floor(N / k)`; requires
    /// `n >= 2^(10r)`.
    PaperExact { n: u128 },
    /// Explicit layer count and size; edge probabilities are
    /// `min(1, scale * 2^(j-i) / m)`.
    DeskScale {
        layers: usize,
        layer_size: usize,
        scale: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionParams {
    pub mode: Mode,
    pub r: usize,
    pub seed: u64,
    pub target_n: Option<usize>,
}

impl ConstructionParams {
    pub fn desk(layers: usize, layer_size: usize, r: usize, seed: u64) -> Self {
        ConstructionParams {
            mode: Mode::DeskScale {
                layers,
                layer_size,
                scale: 1.0,
            },
            r,
            seed,
            target_n: None,
        }
    }

    pub fn with_scale(mut self, c: f64) -> Self {
        if let Mode::DeskScale { scale, .. } = &mut self.mode {
            *scale = c;
        }
        self
    }

    pub fn with_target(mut self, target: Option<usize>) -> Self {
        self.target_n = target;
        self
    }

    pub fn exact(n: u128, r: usize, seed: u64) -> Self {
        ConstructionParams {
            mode: Mode::PaperExact { n },
            r,
            seed,
            target_n: None,
        }
    }

    /// Resolves and validates the layer structure.
    pub fn layout(&self) -> Result<Layout, ParamError> {
        if self.r < 4 {
            return Err(ParamError::GirthTooSmall(self.r));
        }
        let layout = match self.mode {
            Mode::PaperExact { n } => {
                let (k, m) = exact_layout(n, self.r)?;
                let m = usize::try_from(m).map_err(|_| ParamError::TooLarge(m))?;
                let layout = Layout { k, m, scale: 1.0 };
                if let Some((i, j)) = layout.capped_pair() {
                    return Err(ParamError::ProbabilityAboveOne { i, j });
                }
                layout
            }
            Mode::DeskScale {
                layers,
                layer_size,
                scale,
            } => {
                if !(scale.is_finite() && scale > 0.0) {
                    return Err(ParamError::BadScale(scale));
                }
                Layout {
                    k: layers,
                    m: layer_size,
                    scale,
                }
            }
        };
        if layout.k < 2 {
            return Err(ParamError::TooFewLayers(layout.k));
        }
        if layout.m < 2 {
            return Err(ParamError::LayerTooSmall(layout.m));
        }
        Ok(layout)
    }
}

/// Integer form of the large-`n` parameters: `k = floor(log2(3n) / 10r)` and
/// `m = floor(3n / k)`. Since `10r` is an integer,
/// `floor(log2 N / 10r) = floor(floor(log2 N) / 10r)`.
pub fn exact_layout(n: u128, r: usize) -> Result<(usize, u128), ParamError> {
    let exp = 10 * r;
    if exp >= 127 || n < 1u128 << exp {
        return Err(ParamError::BelowThreshold { n, exp });
    }
    let big_n = n.checked_mul(3).ok_or(ParamError::TooLarge(n))?;
    let log2_floor = (127 - big_n.leading_zeros()) as usize;
    let k = log2_floor / exp;
    if k < 2 {
        return Err(ParamError::TooFewLayers(k));
    }
    Ok((k, big_n / k as u128))
}

/// Edge scale `c` giving mean degree `degree` before capping. The uncapped
/// mean degree is `2 c S / k` with `S = sum_{g=1}^{k-1} (k - g) 2^g`.
pub fn edge_scale_for_degree(k: usize, degree: f64) -> f64 {
    let s: f64 = (1..k).map(|g| (k - g) as f64 * 2f64.powi(g as i32)).sum();
    degree * k as f64 / (2.0 * s)
}

/// Resolved layer structure: `k` layers of `m` consecutive labels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Layout {
    pub k: usize,
    pub m: usize,
    pub scale: f64,
}

impl Layout {
    pub fn vertex_count(&self) -> usize {
        self.k * self.m
    }

    /// Edge probability between layers `i < j` (1-based), capped at one.
    pub fn probability(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < j);
        let raw = self.scale * 2f64.powi((j - i) as i32) / self.m as f64;
        raw.min(1.0)
    }

    fn raw_exceeds_one(&self, i: usize, j: usize) -> bool {
        self.scale * 2f64.powi((j - i) as i32) > self.m as f64
    }

    /// First layer pair whose uncapped probability exceeds one.
    pub fn capped_pair(&self) -> Option<(usize, usize)> {
        // The largest gap has the largest probability.
        (self.k >= 2 && self.raw_exceeds_one(1, self.k))
            .then(|| {
                (1..self.k)
                    .flat_map(|i| (i + 1..=self.k).map(move |j| (i, j)))
                    .find(|&(i, j)| self.raw_exceeds_one(i, j))
            })
            .flatten()
    }

    /// Labels of layer `i` (1-based).
    pub fn layer(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        (i - 1) * self.m + 1..=i * self.m
    }

    pub fn layer_of(&self, v: usize) -> usize {
        (v - 1) / self.m + 1
    }
}
