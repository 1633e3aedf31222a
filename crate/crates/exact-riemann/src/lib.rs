//! Exact solver for the Riemann problem of the 1D Euler equations with an
//! ideal gas law, following the classical two-wave iteration (see Toro,
//! "Riemann Solvers and Numerical Methods for Fluid Dynamics").
//!
//! This crate is self-contained reference code used as an independent
//! oracle by solver test suites. It favors clarity over speed.

/// Primitive gas state on one side of the discontinuity.
#[derive(Debug, Clone, Copy)]
pub struct State {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

impl State {
    pub fn new(rho: f64, u: f64, p: f64) -> Self {
        Self { rho, u, p }
    }

    pub fn sound_speed(&self, gamma: f64) -> f64 {
        (gamma * self.p / self.rho).sqrt()
    }
}

/// Star-region solution of a Riemann problem.
#[derive(Debug, Clone, Copy)]
pub struct StarState {
    pub p: f64,
    pub u: f64,
    /// Density left of the contact.
    pub rho_l: f64,
    /// Density right of the contact.
    pub rho_r: f64,
}

/// Full solution, able to sample the self-similar profile.
#[derive(Debug, Clone, Copy)]
pub struct Solution {
    pub left: State,
    pub right: State,
    pub star: StarState,
    pub gamma: f64,
}

/// Pressure function f_K(p) and its derivative for one side.
fn pressure_fn(p: f64, s: &State, gamma: f64) -> (f64, f64) {
    let a = s.sound_speed(gamma);
    if p > s.p {
        // Shock branch.
        let ak = 2.0 / ((gamma + 1.0) * s.rho);
        let bk = (gamma - 1.0) / (gamma + 1.0) * s.p;
        let root = (ak / (p + bk)).sqrt();
        let f = (p - s.p) * root;
        let df = root * (1.0 - (p - s.p) / (2.0 * (p + bk)));
        (f, df)
    } else {
        // Rarefaction branch.
        let pr = p / s.p;
        let f = 2.0 * a / (gamma - 1.0) * (pr.powf((gamma - 1.0) / (2.0 * gamma)) - 1.0);
        let df = 1.0 / (s.rho * a) * pr.powf(-(gamma + 1.0) / (2.0 * gamma));
        (f, df)
    }
}

/// Solve for the star-region pressure and velocity.
///
/// Panics if the data produce vacuum (pressure positivity condition
/// violated); oracle inputs are expected to be admissible.
pub fn solve(left: State, right: State, gamma: f64) -> Solution {
    let al = left.sound_speed(gamma);
    let ar = right.sound_speed(gamma);
    let du = right.u - left.u;
    // Vacuum generation check: 2a/(gamma-1) on both sides must exceed du.
    assert!(
        2.0 * (al + ar) / (gamma - 1.0) > du,
        "vacuum-generating Riemann data"
    );

    // Initial guess: linearized (PVRS) estimate, floored.
    let p_pv = 0.5 * (left.p + right.p)
        - 0.125 * du * (left.rho + right.rho) * (al + ar);
    let mut p = p_pv.max(1e-8 * 0.5 * (left.p + right.p)).max(1e-300);

    // Newton iteration with positivity safeguard.
    for _ in 0..100 {
        let (fl, dfl) = pressure_fn(p, &left, gamma);
        let (fr, dfr) = pressure_fn(p, &right, gamma);
        let g = fl + fr + du;
        let dg = dfl + dfr;
        let mut step = g / dg;
        // Keep the iterate positive.
        while p - step <= 0.0 {
            step *= 0.5;
        }
        let p_new = p - step;
        let change = 2.0 * (p_new - p).abs() / (p_new + p);
        p = p_new;
        if change < 1e-15 {
            break;
        }
    }

    let (fl, _) = pressure_fn(p, &left, gamma);
    let (fr, _) = pressure_fn(p, &right, gamma);
    let u = 0.5 * (left.u + right.u) + 0.5 * (fr - fl);

    let g6 = (gamma - 1.0) / (gamma + 1.0);
    let rho_l = if p > left.p {
        left.rho * ((p / left.p + g6) / (g6 * p / left.p + 1.0))
    } else {
        left.rho * (p / left.p).powf(1.0 / gamma)
    };
    let rho_r = if p > right.p {
        right.rho * ((p / right.p + g6) / (g6 * p / right.p + 1.0))
    } else {
        right.rho * (p / right.p).powf(1.0 / gamma)
    };

    Solution {
        left,
        right,
        star: StarState { p, u, rho_l, rho_r },
        gamma,
    }
}

impl Solution {
    /// Sample the self-similar solution at speed `xi = x/t`.
    pub fn sample(&self, xi: f64) -> State {
        let g = self.gamma;
        let s = &self.star;
        if xi <= s.u {
            // Left of contact.
            let k = &self.left;
            let ak = k.sound_speed(g);
            if s.p > k.p {
                // Left shock.
                let sl = k.u - ak * ((g + 1.0) / (2.0 * g) * s.p / k.p + (g - 1.0) / (2.0 * g)).sqrt();
                if xi <= sl {
                    *k
                } else {
                    State::new(s.rho_l, s.u, s.p)
                }
            } else {
                // Left rarefaction.
                let head = k.u - ak;
                let a_star = ak * (s.p / k.p).powf((g - 1.0) / (2.0 * g));
                let tail = s.u - a_star;
                if xi <= head {
                    *k
                } else if xi >= tail {
                    State::new(s.rho_l, s.u, s.p)
                } else {
                    let c = 2.0 / (g + 1.0) + (g - 1.0) / ((g + 1.0) * ak) * (k.u - xi);
                    State::new(
                        k.rho * c.powf(2.0 / (g - 1.0)),
                        2.0 / (g + 1.0) * (ak + (g - 1.0) / 2.0 * k.u + xi),
                        k.p * c.powf(2.0 * g / (g - 1.0)),
                    )
                }
            }
        } else {
            // Right of contact.
            let k = &self.right;
            let ak = k.sound_speed(g);
            if s.p > k.p {
                // Right shock.
                let sr = k.u + ak * ((g + 1.0) / (2.0 * g) * s.p / k.p + (g - 1.0) / (2.0 * g)).sqrt();
                if xi >= sr {
                    *k
                } else {
                    State::new(s.rho_r, s.u, s.p)
                }
            } else {
                // Right rarefaction.
                let head = k.u + ak;
                let a_star = ak * (s.p / k.p).powf((g - 1.0) / (2.0 * g));
                let tail = s.u + a_star;
                if xi >= head {
                    *k
                } else if xi <= tail {
                    State::new(s.rho_r, s.u, s.p)
                } else {
                    let c = 2.0 / (g + 1.0) - (g - 1.0) / ((g + 1.0) * ak) * (k.u - xi);
                    State::new(
                        k.rho * c.powf(2.0 / (g - 1.0)),
                        2.0 / (g + 1.0) * (-ak + (g - 1.0) / 2.0 * k.u + xi),
                        k.p * c.powf(2.0 * g / (g - 1.0)),
                    )
                }
            }
        }
    }
}

/// Pressure felt by a moving impermeable wall.
///
/// Constructed by mirroring the state about the wall path: the contact of
/// the symmetric Riemann problem moves with the wall, and the star pressure
/// is the wall pressure.
pub fn wall_pressure(rho: f64, p: f64, u_normal: f64, wall_normal_speed: f64, gamma: f64) -> f64 {
    let left = State::new(rho, u_normal, p);
    let right = State::new(rho, 2.0 * wall_normal_speed - u_normal, p);
    solve(left, right, gamma).star.p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sod_star_state() {
        // Standard Sod tube; reference values from the literature.
        let sol = solve(
            State::new(1.0, 0.0, 1.0),
            State::new(0.125, 0.0, 0.1),
            1.4,
        );
        assert!((sol.star.p - 0.30313).abs() < 1e-4);
        assert!((sol.star.u - 0.92745).abs() < 1e-4);
        assert!((sol.star.rho_l - 0.42632).abs() < 1e-4);
        assert!((sol.star.rho_r - 0.26557).abs() < 1e-4);
    }

    #[test]
    fn symmetric_problem_has_stationary_contact() {
        let sol = solve(
            State::new(1.0, 1.0, 1.0),
            State::new(1.0, -1.0, 1.0),
            1.4,
        );
        assert!(sol.star.u.abs() < 1e-12);
        assert!(sol.star.p > 1.0);
        assert!((sol.star.rho_l - sol.star.rho_r).abs() < 1e-12);
    }

    #[test]
    fn wall_pressure_limits() {
        // Stationary fluid, stationary wall: pressure unchanged.
        let p = wall_pressure(1.0, 1.0, 0.0, 0.0, 1.4);
        assert!((p - 1.0).abs() < 1e-12);
        // Approaching wall compresses, receding wall expands.
        assert!(wall_pressure(1.0, 1.0, -0.5, 0.0, 1.4) > 1.0);
        assert!(wall_pressure(1.0, 1.0, 0.5, 0.0, 1.4) < 1.0);
    }

    #[test]
    fn sampled_profile_is_consistent() {
        let sol = solve(
            State::new(1.0, 0.0, 1.0),
            State::new(0.125, 0.0, 0.1),
            1.4,
        );
        // Far field recovers the initial data.
        let l = sol.sample(-10.0);
        let r = sol.sample(10.0);
        assert_eq!(l.rho, 1.0);
        assert_eq!(r.rho, 0.125);
        // Contact carries a density jump at continuous pressure/velocity.
        let lm = sol.sample(sol.star.u - 1e-9);
        let rp = sol.sample(sol.star.u + 1e-9);
        assert!((lm.p - rp.p).abs() < 1e-8);
        assert!((lm.u - rp.u).abs() < 1e-8);
        assert!((lm.rho - rp.rho).abs() > 0.1);
    }
}
