//! Deterministic multi-start driver. Restart seeds derive from the base seed
//! by index, restarts execute independently (in parallel when enabled) and
//! the reduction is order-independent with ties broken by the lowest restart
//! index, so results are identical across thread counts.

use crate::exec;

#[derive(Debug, Clone)]
pub struct RestartOutcome<T> {
    pub index: usize,
    pub value: f64,
    pub payload: T,
}

/// Seed for restart `index` on top of `base`.
pub fn restart_seed(base: u64, index: usize) -> u64 {
    base.wrapping_add(index as u64)
}

/// Run `restarts` independent minimizations and keep the best (lowest value;
/// lowest index on ties).
pub fn best_of_restarts<T, F>(restarts: usize, f: F) -> RestartOutcome<T>
where
    T: Send,
    F: Fn(usize) -> (f64, T) + Sync + Send,
{
    assert!(restarts >= 1);
    let all = exec::map_indexed(restarts, |i| {
        let (value, payload) = f(i);
        RestartOutcome {
            index: i,
            value,
            payload,
        }
    });
    all.into_iter()
        .min_by(|a, b| {
            a.value
                .partial_cmp(&b.value)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.index.cmp(&b.index))
        })
        .expect("at least one restart ran")
}

/// Staged variant for concave objectives: run a small probe batch first and
/// stop early when the probes agree within `agree_tol`. Returns the best
/// outcome and the number of restarts actually executed.
pub fn best_of_restarts_staged<T, F>(
    restarts: usize,
    probe: usize,
    agree_tol: f64,
    f: F,
) -> (RestartOutcome<T>, usize)
where
    T: Send,
    F: Fn(usize) -> (f64, T) + Sync + Send,
{
    let probe = probe.clamp(1, restarts);
    let first = exec::map_indexed(probe, |i| {
        let (value, payload) = f(i);
        RestartOutcome {
            index: i,
            value,
            payload,
        }
    });
    let spread = first
        .iter()
        .map(|r| r.value)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    let agreed = probe >= 2 && (spread.1 - spread.0) <= agree_tol;
    let mut all = first;
    if !agreed && restarts > probe {
        let rest = exec::map_indexed(restarts - probe, |i| {
            let idx = probe + i;
            let (value, payload) = f(idx);
            RestartOutcome {
                index: idx,
                value,
                payload,
            }
        });
        all.extend(rest);
    }
    let used = all.len();
    let best = all
        .into_iter()
        .min_by(|a, b| {
            a.value
                .partial_cmp(&b.value)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.index.cmp(&b.index))
        })
        .expect("at least one restart ran");
    (best, used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::{set_execution, Execution};

    #[test]
    fn best_picks_lowest_value_then_lowest_index() {
        let best = best_of_restarts(5, |i| {
            let v = match i {
                2 | 4 => 1.0,
                _ => 2.0,
            };
            (v, i)
        });
        assert_eq!(best.index, 2);
        assert_eq!(best.value, 1.0);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let run = || {
            best_of_restarts(16, |i| {
                let seed = restart_seed(1000, i);
                let mut rng = crate::matcore::random::rng_from_seed(seed);
                let x: f64 = rand::Rng::random(&mut rng);
                (x, seed)
            })
        };
        set_execution(Execution::Parallel);
        let a = run();
        set_execution(Execution::Sequential);
        let b = run();
        set_execution(Execution::Parallel);
        assert_eq!(a.index, b.index);
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }

    #[test]
    fn staged_stops_early_on_agreement() {
        let (_, used) = best_of_restarts_staged(32, 2, 1e-9, |_| (1.0, ()));
        assert_eq!(used, 2);
        let (_, used) = best_of_restarts_staged(4, 2, 1e-9, |i| (i as f64, ()));
        assert_eq!(used, 4);
    }
}
