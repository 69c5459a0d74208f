//! Derivative-free simplex descent (Nelder–Mead) with the adaptive
//! coefficients of Gao & Han, which behave much better than the classic
//! constants once the parameter count grows past a handful.

/// Minimizer configuration. All runs are deterministic.
#[derive(Debug, Clone)]
pub struct NelderMead {
    pub max_iterations: usize,
    /// Stop when the spread of simplex values falls below this.
    pub f_tolerance: f64,
    /// Stop when the simplex collapses below this diameter.
    pub x_tolerance: f64,
    /// Initial simplex step along each coordinate.
    pub initial_step: f64,
}

impl Default for NelderMead {
    fn default() -> Self {
        Self {
            max_iterations: 10_000,
            f_tolerance: 1e-9,
            x_tolerance: 1e-10,
            initial_step: 0.25,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub evaluations: usize,
}

impl NelderMead {
    pub fn minimize<F>(&self, f: F, x0: &[f64]) -> Minimum
    where
        F: Fn(&[f64]) -> f64,
    {
        let n = x0.len();
        assert!(n >= 1, "cannot optimize over zero parameters");
        let nf = n as f64;
        // Gao-Han adaptive coefficients.
        let alpha = 1.0;
        let beta = 1.0 + 2.0 / nf;
        let gamma = 0.75 - 1.0 / (2.0 * nf);
        let delta = 1.0 - 1.0 / nf;

        let mut evals = 0usize;
        let mut eval = |x: &[f64], evals: &mut usize| -> f64 {
            *evals += 1;
            let v = f(x);
            if v.is_nan() {
                f64::INFINITY
            } else {
                v
            }
        };

        // Simplex: x0 plus one step along each coordinate.
        let mut simplex: Vec<(f64, Vec<f64>)> = Vec::with_capacity(n + 1);
        simplex.push((eval(x0, &mut evals), x0.to_vec()));
        for i in 0..n {
            let mut xi = x0.to_vec();
            xi[i] += if xi[i].abs() > 1.0 {
                self.initial_step * xi[i].abs()
            } else {
                self.initial_step
            };
            simplex.push((eval(&xi, &mut evals), xi));
        }
        sort_simplex(&mut simplex);

        let mut iterations = 0usize;
        while iterations < self.max_iterations {
            iterations += 1;

            let spread = simplex[n].0 - simplex[0].0;
            let diameter = simplex
                .iter()
                .skip(1)
                .map(|(_, x)| {
                    x.iter()
                        .zip(&simplex[0].1)
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0, f64::max)
                })
                .fold(0.0, f64::max);
            if spread.abs() <= self.f_tolerance && diameter <= self.x_tolerance.max(1e-12) {
                break;
            }

            let centroid: Vec<f64> = (0..n)
                .map(|j| simplex[..n].iter().map(|(_, x)| x[j]).sum::<f64>() / nf)
                .collect();
            let worst = simplex[n].clone();

            let reflect: Vec<f64> = centroid
                .iter()
                .zip(&worst.1)
                .map(|(c, w)| c + alpha * (c - w))
                .collect();
            let f_reflect = eval(&reflect, &mut evals);

            if f_reflect < simplex[0].0 {
                // Try expanding past the reflection.
                let expand: Vec<f64> = centroid
                    .iter()
                    .zip(&worst.1)
                    .map(|(c, w)| c + beta * (c - w))
                    .collect();
                let f_expand = eval(&expand, &mut evals);
                simplex[n] = if f_expand < f_reflect {
                    (f_expand, expand)
                } else {
                    (f_reflect, reflect)
                };
            } else if f_reflect < simplex[n - 1].0 {
                simplex[n] = (f_reflect, reflect);
            } else {
                // Contract, outside or inside depending on the reflection.
                let (point, towards) = if f_reflect < worst.0 {
                    (reflect.clone(), 1.0)
                } else {
                    (worst.1.clone(), -1.0)
                };
                let contract: Vec<f64> = centroid
                    .iter()
                    .zip(&point)
                    .map(|(c, p)| c + towards * gamma * (p - c))
                    .collect();
                let f_contract = eval(&contract, &mut evals);
                let threshold = if towards > 0.0 { f_reflect } else { worst.0 };
                if f_contract < threshold {
                    simplex[n] = (f_contract, contract);
                } else {
                    // Shrink toward the best vertex.
                    let best = simplex[0].1.clone();
                    for entry in simplex.iter_mut().skip(1) {
                        let x: Vec<f64> = best
                            .iter()
                            .zip(&entry.1)
                            .map(|(b, v)| b + delta * (v - b))
                            .collect();
                        *entry = (eval(&x, &mut evals), x);
                    }
                }
            }
            sort_simplex(&mut simplex);
        }

        Minimum {
            x: simplex[0].1.clone(),
            value: simplex[0].0,
            iterations,
            evaluations: evals,
        }
    }

    /// Minimize, then restart a few times from the found point with a finer
    /// initial simplex. A single simplex tends to stall once the parameter
    /// count gets large; restarting it recovers most of the lost progress.
    pub fn minimize_polished<F>(&self, f: F, x0: &[f64], polish_rounds: usize) -> Minimum
    where
        F: Fn(&[f64]) -> f64,
    {
        let mut best = self.minimize(&f, x0);
        let mut step = self.initial_step;
        for _ in 0..polish_rounds {
            step *= 0.25;
            let again = NelderMead {
                initial_step: step,
                ..self.clone()
            }
            .minimize(&f, &best.x);
            let improved = again.value < best.value;
            best = Minimum {
                x: if improved { again.x } else { best.x },
                value: best.value.min(again.value),
                iterations: best.iterations + again.iterations,
                evaluations: best.evaluations + again.evaluations,
            };
            if !improved {
                break;
            }
        }
        best
    }
}

fn sort_simplex(simplex: &mut [(f64, Vec<f64>)]) {
    simplex.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(std::cmp::Ordering::Equal));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimizes_shifted_quadratic() {
        let nm = NelderMead::default();
        let f = |x: &[f64]| (x[0] - 3.0).powi(2) + (x[1] + 1.5).powi(2) + 2.0;
        let m = nm.minimize(f, &[0.0, 0.0]);
        assert!((m.value - 2.0).abs() < 1e-8);
        assert!((m.x[0] - 3.0).abs() < 1e-4 && (m.x[1] + 1.5).abs() < 1e-4);
    }

    #[test]
    fn minimizes_rosenbrock() {
        let nm = NelderMead {
            max_iterations: 20_000,
            ..Default::default()
        };
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let m = nm.minimize_polished(f, &[-1.2, 1.0], 2);
        assert!(m.value < 1e-8, "rosenbrock value {}", m.value);
    }

    #[test]
    fn handles_nan_objective() {
        let nm = NelderMead::default();
        let f = |x: &[f64]| {
            if x[0] < 0.0 {
                f64::NAN
            } else {
                x[0] * x[0]
            }
        };
        let m = nm.minimize(f, &[1.0]);
        assert!(m.value < 1e-8);
    }

    #[test]
    fn deterministic() {
        let nm = NelderMead::default();
        let f = |x: &[f64]| x.iter().map(|v| v.sin() + v * v * 0.1).sum::<f64>();
        let a = nm.minimize(&f, &[0.3, -0.7, 2.0]);
        let b = nm.minimize(&f, &[0.3, -0.7, 2.0]);
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.x, b.x);
    }
}
