//! Minimization of a function of a projective qubit measurement.
//!
//! A rank-one projective measurement on a qubit is fixed by a Bloch direction
//! `n̂(θ, φ)`; `n̂` and `-n̂` give the same pair of projectors. The search is a
//! coarse (θ, φ) grid followed by Nelder-Mead started at the best grid point.
//! The simplex lives in tangent coordinates around that point, so the
//! refinement behaves the same at the poles as anywhere else.

use std::cell::RefCell;
use std::f64::consts::PI;
use std::rc::Rc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qstate::CMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    /// Grid points in θ over `[0, π]` (endpoints included) and in φ over `[0, 2π)`.
    pub coarse_grid: (usize, usize),
    /// Target absolute accuracy of the refined objective value.
    pub refine_tolerance: f64,
    pub max_refine_iters: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self { coarse_grid: (60, 120), refine_tolerance: 1e-6, max_refine_iters: 2000 }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        let (nt, np) = self.coarse_grid;
        if nt < 8 || np < 8 {
            return Err(Error::InvalidConfig(format!("grid {nt}x{np} is below the 8x8 minimum")));
        }
        if !(self.refine_tolerance > 0.0) || !self.refine_tolerance.is_finite() {
            return Err(Error::InvalidConfig(format!("refine tolerance {} must be positive", self.refine_tolerance)));
        }
        if self.max_refine_iters == 0 {
            return Err(Error::InvalidConfig("max_refine_iters must be positive".into()));
        }
        Ok(())
    }

    /// Same settings with each grid dimension multiplied by `factor`.
    pub fn finer(&self, factor: usize) -> Self {
        Self { coarse_grid: (self.coarse_grid.0 * factor, self.coarse_grid.1 * factor), ..*self }
    }
}

/// Measurement direction `n̂(θ, φ)`; projectors `(I ± n̂·σ)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementSetting {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementSetting {
    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    pub fn from_direction(n: [f64; 3]) -> Self {
        let theta = n[2].clamp(-1.0, 1.0).acos();
        let mut phi = n[1].atan2(n[0]);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    pub fn direction(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// `[Π₊, Π₋]`
    pub fn projectors(&self) -> [CMatrix; 2] {
        let [x, y, z] = self.direction();
        let make = |sign: f64| {
            CMatrix::from_row_major(vec![
                Complex64::new(0.5 * (1.0 + sign * z), 0.0),
                Complex64::new(0.5 * sign * x, -0.5 * sign * y),
                Complex64::new(0.5 * sign * x, 0.5 * sign * y),
                Complex64::new(0.5 * (1.0 - sign * z), 0.0),
            ])
        };
        [make(1.0), make(-1.0)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereMinimum {
    pub value: f64,
    pub setting: MeasurementSetting,
    /// Best value on the coarse grid alone.
    pub grid_value: f64,
    pub iterations: usize,
}

type GridPoints = Rc<Vec<[f64; 3]>>;

thread_local! {
    static GRID_CACHE: RefCell<Option<((usize, usize), GridPoints)>> = const { RefCell::new(None) };
}

/// Grid directions, dropping points whose antipode is already present.
fn grid_points(dims: (usize, usize)) -> GridPoints {
    GRID_CACHE.with(|cache| {
        if let Some((d, pts)) = cache.borrow().as_ref() {
            if *d == dims {
                return pts.clone();
            }
        }
        let (nt, np) = dims;
        let symmetric = np % 2 == 0;
        let mut pts = Vec::with_capacity(nt * np / 2 + 2);
        for i in 0..nt {
            // θ_i and π - θ_i are both grid values; with even np so are φ and φ + π.
            if symmetric && 2 * i > nt - 1 {
                break;
            }
            let theta = PI * i as f64 / (nt - 1) as f64;
            let pole = i == 0 || i == nt - 1;
            for j in 0..np {
                if pole && j > 0 {
                    break;
                }
                let phi = 2.0 * PI * j as f64 / np as f64;
                pts.push(MeasurementSetting::new(theta, phi).direction());
            }
        }
        let pts = Rc::new(pts);
        *cache.borrow_mut() = Some((dims, pts.clone()));
        pts
    })
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / norm, v[1] / norm, v[2] / norm]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Orthonormal tangent basis at unit vector `n`.
fn tangent_basis(n: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let helper = if n[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let e1 = normalize(cross(n, helper));
    let e2 = cross(n, e1);
    (e1, e2)
}

/// Minimizes each of the `K` components of `f` over measurement directions.
///
/// The components share one grid scan; each then gets its own refinement.
pub fn minimize_on_sphere<const K: usize>(
    f: impl Fn([f64; 3]) -> [f64; K],
    cfg: &OptimizerConfig,
) -> Result<[SphereMinimum; K]> {
    minimize_on_sphere_with_screen(&f, &f, cfg)
}

/// Like [`minimize_on_sphere`], but ranks the grid points with `screen`, a
/// cheaper approximation of `f`. The chosen grid points and the refinement
/// use `f` itself.
pub fn minimize_on_sphere_with_screen<const K: usize>(
    screen: impl Fn([f64; 3]) -> [f64; K],
    f: impl Fn([f64; 3]) -> [f64; K],
    cfg: &OptimizerConfig,
) -> Result<[SphereMinimum; K]> {
    cfg.validate()?;
    let pts = grid_points(cfg.coarse_grid);
    let mut best_screen = [f64::INFINITY; K];
    let mut best_dir = [[0.0, 0.0, 1.0]; K];
    for &p in pts.iter() {
        let vals = screen(p);
        for k in 0..K {
            if vals[k] < best_screen[k] {
                best_screen[k] = vals[k];
                best_dir[k] = p;
            }
        }
    }
    let mut best_val = [0.0; K];
    for k in 0..K {
        best_val[k] = f(best_dir[k])[k];
    }

    let step = PI / (cfg.coarse_grid.0 - 1) as f64;
    let mut out = [SphereMinimum {
        value: f64::NAN,
        setting: MeasurementSetting::new(0.0, 0.0),
        grid_value: f64::NAN,
        iterations: 0,
    }; K];
    for k in 0..K {
        let start = best_dir[k];
        let (e1, e2) = tangent_basis(start);
        let to_dir = |u: [f64; 2]| {
            normalize([
                start[0] + u[0] * e1[0] + u[1] * e2[0],
                start[1] + u[0] * e1[1] + u[1] * e2[1],
                start[2] + u[0] * e1[2] + u[1] * e2[2],
            ])
        };
        let (u, value, iterations) = nelder_mead_2d(
            |u| f(to_dir(u))[k],
            best_val[k],
            step,
            cfg.refine_tolerance,
            cfg.max_refine_iters,
        )?;
        let (dir, value) = if value < best_val[k] { (to_dir(u), value) } else { (start, best_val[k]) };
        out[k] = SphereMinimum {
            value,
            setting: MeasurementSetting::from_direction(dir),
            grid_value: best_val[k],
            iterations,
        };
    }
    Ok(out)
}

/// Nelder-Mead on the plane from the origin with initial step `h`.
///
/// A run stops once the vertex values agree to `tol / SPREAD_DIVISOR`, which
/// near a quadratic minimum leaves the best vertex well within `tol` of it.
/// Agreement alone can come from a symmetric simplex straddling the minimum,
/// so the search then restarts from the best vertex with a rotated simplex
/// and stops once a restart improves by no more than `tol`.
fn nelder_mead_2d(
    f: impl Fn([f64; 2]) -> f64,
    f0: f64,
    h: f64,
    tol: f64,
    max_iters: usize,
) -> Result<([f64; 2], f64, usize)> {
    const RESTART_ANGLE: f64 = 0.6;
    const SPREAD_DIVISOR: f64 = 100.0;
    let mut best = ([0.0, 0.0], f0);
    let mut step = h;
    let mut used = 0;
    for restart in 0.. {
        let angle = RESTART_ANGLE * restart as f64;
        let (x, fx, iters, diameter) = nelder_mead_run(&f, best, step, angle, tol / SPREAD_DIVISOR, max_iters - used)?;
        used += iters;
        let improvement = best.1 - fx;
        best = (x, fx);
        if restart > 0 && improvement <= tol {
            break;
        }
        step = diameter.max(tol.sqrt() / 10.0);
    }
    Ok((best.0, best.1, used))
}

/// One Nelder-Mead run; returns the best vertex, iterations used and final diameter.
fn nelder_mead_run(
    f: &impl Fn([f64; 2]) -> f64,
    start: ([f64; 2], f64),
    h: f64,
    angle: f64,
    tol: f64,
    max_iters: usize,
) -> Result<([f64; 2], f64, usize, f64)> {
    const REFLECT: f64 = 1.0;
    const EXPAND: f64 = 2.0;
    const CONTRACT: f64 = 0.5;
    const SHRINK: f64 = 0.5;

    let (x0, (c, s)) = (start.0, angle.sin_cos());
    let vertex = |u: [f64; 2]| {
        let p = [x0[0] + h * (s * u[0] - c * u[1]), x0[1] + h * (c * u[0] + s * u[1])];
        (p, f(p))
    };
    let mut simplex = [start, vertex([1.0, 0.0]), vertex([0.0, 1.0])];

    let lerp = |a: [f64; 2], b: [f64; 2], t: f64| [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];

    for iter in 0..=max_iters {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let spread = simplex[2].1 - simplex[0].1;
        let diameter = simplex[1..]
            .iter()
            .map(|(x, _)| ((x[0] - simplex[0].0[0]).powi(2) + (x[1] - simplex[0].0[1]).powi(2)).sqrt())
            .fold(0.0, f64::max);
        if spread <= tol || diameter < 1e-12 {
            return Ok((simplex[0].0, simplex[0].1, iter, diameter));
        }
        if iter == max_iters {
            break;
        }

        let centroid = [(simplex[0].0[0] + simplex[1].0[0]) / 2.0, (simplex[0].0[1] + simplex[1].0[1]) / 2.0];
        let worst = simplex[2];
        let reflected = lerp(centroid, worst.0, -REFLECT);
        let fr = f(reflected);

        if fr < simplex[0].1 {
            let expanded = lerp(centroid, worst.0, -EXPAND);
            let fe = f(expanded);
            simplex[2] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < simplex[1].1 {
            simplex[2] = (reflected, fr);
        } else {
            let (contracted, fc) = if fr < worst.1 {
                let c = lerp(centroid, reflected, CONTRACT);
                (c, f(c))
            } else {
                let c = lerp(centroid, worst.0, CONTRACT);
                (c, f(c))
            };
            if fc < worst.1.min(fr) {
                simplex[2] = (contracted, fc);
            } else {
                let best = simplex[0].0;
                for v in simplex[1..].iter_mut() {
                    v.0 = lerp(best, v.0, SHRINK);
                    v.1 = f(v.0);
                }
            }
        }
    }
    Err(Error::OptimizerDiverged { iters: max_iters })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projectors_are_complete_orthogonal_rank_one() {
        for &(t, p) in &[(0.0, 0.0), (0.3, 1.2), (PI / 2.0, 4.0), (PI, 0.0)] {
            let [pp, pm] = MeasurementSetting::new(t, p).projectors();
            assert!((&pp + &pm).max_abs_diff(&CMatrix::identity(2)) < 1e-15);
            assert!((&pp * &pm).max_abs() < 1e-15);
            assert!((&pp * &pp).max_abs_diff(&pp) < 1e-15);
            assert!((pp.trace().re - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn grid_drops_only_antipodal_duplicates() {
        let pts = grid_points((60, 120));
        // 29 interior rows of 120 plus the pole.
        assert_eq!(pts.len(), 1 + 29 * 120);
        // every full-grid point or its antipode is present
        for i in 0..60 {
            for j in 0..120 {
                let d = MeasurementSetting::new(PI * i as f64 / 59.0, 2.0 * PI * j as f64 / 120.0).direction();
                let hit = pts.iter().any(|q| {
                    let dot = d[0] * q[0] + d[1] * q[1] + d[2] * q[2];
                    (dot.abs() - 1.0).abs() < 1e-12
                });
                assert!(hit, "missing grid point {i},{j}");
            }
        }
    }

    #[test]
    fn finds_off_grid_minimum() {
        let target = normalize([0.3, -0.7, 0.2]);
        let cfg = OptimizerConfig { refine_tolerance: 1e-12, ..Default::default() };
        // Squared dot product is antipodally symmetric like a measurement objective.
        let [m] = minimize_on_sphere(
            |n| {
                let d = n[0] * target[0] + n[1] * target[1] + n[2] * target[2];
                [1.0 - d * d]
            },
            &cfg,
        )
        .unwrap();
        assert!(m.value < 1e-10, "value {}", m.value);
        assert!(m.value <= m.grid_value);
        let d = m.setting.direction();
        let dot = d[0] * target[0] + d[1] * target[1] + d[2] * target[2];
        assert!((dot.abs() - 1.0).abs() < 1e-5);
    }

    #[test]
    fn refines_at_the_pole() {
        let cfg = OptimizerConfig { refine_tolerance: 1e-14, ..Default::default() };
        let [m] = minimize_on_sphere(|n| [n[0] * n[0] + 2.0 * n[1] * n[1]], &cfg).unwrap();
        assert!(m.value < 1e-12);
        assert!(m.setting.theta < 1e-5 || (PI - m.setting.theta) < 1e-5);
    }

    #[test]
    fn flat_start_between_grid_rows_still_refines() {
        // Minimum on the equator, which the 60-row grid straddles; no φ dependence.
        let [m] = minimize_on_sphere(|n| [0.3 * n[2] * n[2]], &OptimizerConfig::default()).unwrap();
        assert!(m.value < 1e-6, "value {}", m.value);
        assert!(m.grid_value > 1e-4);
    }

    #[test]
    fn config_validation() {
        assert!(OptimizerConfig::default().validate().is_ok());
        let bad = OptimizerConfig { coarse_grid: (4, 120), ..Default::default() };
        assert!(matches!(bad.validate(), Err(Error::InvalidConfig(_))));
        let bad = OptimizerConfig { refine_tolerance: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
        assert_eq!(OptimizerConfig::default().finer(4).coarse_grid, (240, 480));
    }

    #[test]
    fn divergence_is_reported() {
        let cfg = OptimizerConfig { max_refine_iters: 1, refine_tolerance: 1e-300, ..Default::default() };
        let err = minimize_on_sphere(|n| [(3.0 * n[0]).sin() + n[2] * 0.1], &cfg).unwrap_err();
        assert_eq!(err, Error::OptimizerDiverged { iters: 1 });
    }
}
