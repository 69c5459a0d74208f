//! Process-wide execution policy for the restart/check loops.
//!
//! With the `parallel` feature (default) restarts run on the rayon global
//! pool; `SUMCAP_THREADS` bounds the worker count. Forcing
//! [`Execution::Sequential`] runs the same work single-threaded with
//! bit-identical results, which is what the criterion bench uses to compare
//! the two paths.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

static MODE: AtomicU8 = AtomicU8::new(mode_default());

const fn mode_default() -> u8 {
    if cfg!(feature = "parallel") {
        1
    } else {
        0
    }
}

/// Set the process-wide execution mode. Without the `parallel` feature,
/// `Parallel` silently degrades to sequential execution.
pub fn set_execution(mode: Execution) {
    let v = match mode {
        Execution::Sequential => 0,
        Execution::Parallel => 1,
    };
    MODE.store(v, Ordering::Relaxed);
}

pub fn execution() -> Execution {
    if !cfg!(feature = "parallel") {
        return Execution::Sequential;
    }
    match MODE.load(Ordering::Relaxed) {
        0 => Execution::Sequential,
        _ => Execution::Parallel,
    }
}

/// Apply `SUMCAP_THREADS` to the rayon global pool. Must run before the pool
/// is first used; later calls are ignored by rayon, which is fine for a CLI
/// entry point. `SUMCAP_THREADS=1` switches to sequential execution outright.
pub fn configure_threads_from_env() {
    let Ok(raw) = std::env::var("SUMCAP_THREADS") else {
        return;
    };
    let Ok(n) = raw.trim().parse::<usize>() else {
        return;
    };
    if n <= 1 {
        set_execution(Execution::Sequential);
        return;
    }
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Map `f` over `0..n`, in parallel when the policy allows it. The output
/// order is by index either way, so downstream reductions are deterministic.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if execution() == Execution::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}
