//! Parallel drivers. Work is split into residue classes or contiguous chunks and
//! merged in a fixed order, so output does not depend on the worker count.

use std::thread;

use quadit_core::curves::{self, AffinePoint};
use quadit_core::dynamics::{self, SearchHit};
use quadit_core::systems::{self, N1Witness};
use quadit_core::{QPoly, Rat, Result};

fn in_classes<T: Send>(workers: usize, job: impl Fn(u64, u64) -> Result<Vec<T>> + Sync) -> Result<Vec<T>> {
    let k = workers.max(1) as u64;
    let job = &job;
    let parts: Vec<Result<Vec<T>>> = thread::scope(|s| {
        let handles: Vec<_> = (0..k).map(|r| s.spawn(move || job(k, r))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

pub fn search_m(gamma: &Rat, n: usize, height: u64, workers: usize) -> Result<Vec<SearchHit>> {
    let mut hits = in_classes(workers, |k, r| dynamics::search_m_class(gamma, n, height, k, r))?;
    dynamics::sort_hits(&mut hits);
    Ok(hits)
}

pub fn search_points(rhs: &QPoly, height: u64, workers: usize) -> Result<Vec<AffinePoint>> {
    let mut pts = in_classes(workers, |k, r| curves::search_points_class(rhs, height, k, r))?;
    curves::sort_points(&mut pts);
    Ok(pts)
}

/// Same output as [`systems::n1_enumerate`].
pub fn n1_enumerate(gamma: &Rat, c1_height: u64, workers: usize) -> Result<Vec<N1Witness>> {
    // Validates gamma before spawning anything.
    systems::n1_enumerate(gamma, 0)?;
    let candidates = systems::n1_candidates(c1_height);
    let chunk = candidates.len().div_ceil(workers.max(1)).max(1);
    let parts: Vec<Result<Vec<N1Witness>>> = thread::scope(|s| {
        let handles: Vec<_> = candidates
            .chunks(chunk)
            .map(|cs| {
                s.spawn(move || {
                    let mut out = Vec::new();
                    for c1 in cs {
                        if let Some(w) = systems::n1_check(c1, gamma)? {
                            out.push(w);
                        }
                    }
                    Ok(out)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}
