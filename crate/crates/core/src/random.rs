//! Seeded generation of test elements.
//!
//! The generator is ChaCha20 keyed with the 64-bit seed in little-endian
//! order followed by 24 zero bytes; independent streams are selected with
//! the ChaCha stream id. A uniform draw in `[-1, 1)` takes the top 53 bits
//! of the next 64-bit output `u` and returns `2·(u >> 11)·2⁻⁵³ − 1`, so any
//! ChaCha20 implementation reproduces the same values.

use num_complex::Complex64;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::division::{Bioctonion, Octonion};
use crate::error::{Error, Result};
use crate::jordan::{Ground, HermitianElement};
use crate::matrix_model::GaugeConfiguration;
use crate::projective::{point_from_vector, ProjectivePoint, DEFAULT_TOLERANCE};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 42;

pub struct SeededRng(ChaCha20Rng);

impl SeededRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        let mut rng = ChaCha20Rng::from_seed(key);
        rng.set_stream(stream);
        SeededRng(rng)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[-1, 1)`.
    pub fn uniform(&mut self) -> f64 {
        let u = (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        2.0 * u - 1.0
    }

    /// Uniform index in `0..n` (rejection sampling, unbiased).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    pub fn octonion(&mut self) -> Octonion {
        Octonion(std::array::from_fn(|_| self.uniform()))
    }

    /// Entry of the ground algebra with uniform coordinates on its support.
    pub fn ground_entry(&mut self, ground: Ground) -> Bioctonion {
        let mut re = [0.0; 8];
        for c in re.iter_mut().take(ground.units()) {
            *c = self.uniform();
        }
        let im = if ground.has_complex_coefficients() {
            self.octonion()
        } else {
            Octonion::ZERO
        };
        Bioctonion::new(Octonion(re), im)
    }

    /// Hermitian element with independent uniform `[-1, 1)` components.
    /// Diagonals are complex over `C⊗O` unless `real_diagonal` is set.
    pub fn element(
        &mut self,
        ground: Ground,
        n: usize,
        real_diagonal: bool,
    ) -> Result<HermitianElement> {
        let diag = (0..n)
            .map(|_| {
                let re = self.uniform();
                let im = if ground.has_complex_coefficients() && !real_diagonal {
                    self.uniform()
                } else {
                    0.0
                };
                Complex64::new(re, im)
            })
            .collect();
        let upper = (0..n * (n - 1) / 2)
            .map(|_| self.ground_entry(ground))
            .collect();
        HermitianElement::new(ground, diag, upper)
    }

    /// A uniformly drawn unit imaginary octonion orthogonal to `avoid`.
    fn unit_imaginary_orthogonal(&mut self, avoid: &[Octonion]) -> Octonion {
        loop {
            let mut x = self.octonion();
            x.0[0] = 0.0;
            for a in avoid {
                x = x - a.scale(x.dot(a));
            }
            let n = x.norm();
            if n > 1e-3 {
                return x.scale(1.0 / n);
            }
        }
    }

    /// Random automorphism of the octonions, fixed by the images of the
    /// generators `e1, e2, e4`: unit imaginaries `u`, `v ⊥ u`, and
    /// `w ⊥ {u, v, uv}`. Returns the images of all eight basis elements.
    pub fn octonion_automorphism(&mut self) -> [Octonion; 8] {
        let u = self.unit_imaginary_orthogonal(&[]);
        let v = self.unit_imaginary_orthogonal(&[u]);
        let uv = u * v;
        let w = self.unit_imaginary_orthogonal(&[u, v, uv]);
        [Octonion::ONE, u, v, uv, w, u * w, v * w, uv * w]
    }

    /// Homogeneous coordinates of a point: uniform ground entries, drawn in
    /// the quaternions and moved by a random automorphism for octonionic
    /// planes so that the components associate.
    pub fn point_vector(&mut self, ground: Ground, len: usize) -> Result<Vec<Bioctonion>> {
        match ground {
            Ground::Real | Ground::Complex | Ground::Quaternion => {
                Ok((0..len).map(|_| self.ground_entry(ground)).collect())
            }
            Ground::Octonion => {
                let v: Vec<Bioctonion> = (0..len)
                    .map(|_| self.ground_entry(Ground::Quaternion))
                    .collect();
                let images = self.octonion_automorphism();
                Ok(v.iter().map(|x| apply_map(&images, &x.re).into()).collect())
            }
            Ground::Bioctonion => Err(Error::UnsupportedGround {
                op: "random projective point",
                ground,
            }),
        }
    }

    /// Random point of `KP^{n-1}` inside `h_n(K)`.
    pub fn point(&mut self, ground: Ground, n: usize) -> Result<ProjectivePoint> {
        loop {
            let v = self.point_vector(ground, n)?;
            match point_from_vector(ground, &v, DEFAULT_TOLERANCE) {
                Err(Error::ZeroVector) => continue,
                other => return other,
            }
        }
    }

    pub fn configuration(
        &mut self,
        ground: Ground,
        dim: usize,
        real_diagonal: bool,
    ) -> Result<GaugeConfiguration> {
        let elements = (0..dim)
            .map(|_| self.element(ground, 3, real_diagonal))
            .collect::<Result<_>>()?;
        GaugeConfiguration::new(1.0, elements)
    }
}

/// Image of `x` under the linear map sending `e_k` to `images[k]`.
pub fn apply_map(images: &[Octonion; 8], x: &Octonion) -> Octonion {
    images
        .iter()
        .zip(x.coeffs())
        .fold(Octonion::ZERO, |acc, (img, &c)| acc + img.scale(c))
}
