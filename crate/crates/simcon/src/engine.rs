//! Running the enumeration engine with threads, a wall-clock budget and an
//! optional representative dump.

use std::fmt;
use std::io;
use std::time::Instant;

use rayon::prelude::*;
use simcon_core::enumeration::{ChunkExecutor, Enumerator, Generation, Sequential};
use simcon_core::{EnumerationConfig, EnumerationError, EnumerationReport};

/// Chunk executor backed by a dedicated rayon pool.
pub struct RayonExecutor {
    pool: rayon::ThreadPool,
}

impl RayonExecutor {
    pub fn new(threads: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
        Ok(RayonExecutor { pool })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl ChunkExecutor for RayonExecutor {
    fn map_indexed<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync,
    {
        let f = &f;
        self.pool.install(|| (0..count).into_par_iter().map(f).collect())
    }
}

#[derive(Debug)]
pub enum RunError {
    Engine(EnumerationError),
    Io(io::Error),
    ThreadPool(rayon::ThreadPoolBuildError),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Engine(e) => e.fmt(f),
            RunError::Io(e) => write!(f, "i/o error: {e}"),
            RunError::ThreadPool(e) => write!(f, "cannot start worker threads: {e}"),
        }
    }
}

impl std::error::Error for RunError {}

impl From<EnumerationError> for RunError {
    fn from(e: EnumerationError) -> Self {
        RunError::Engine(e)
    }
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Io(e)
    }
}

/// Runs `config` to completion or budget exhaustion.
///
/// `config.worker_count` threads are used (the calling thread alone when it
/// is 1) and `config.time_budget` is enforced between batches. Every sealed
/// generation, starting with `{ε}`, is passed to `on_generation`.
pub fn run_count<G>(config: EnumerationConfig, mut on_generation: G) -> Result<EnumerationReport, RunError>
where
    G: FnMut(&Generation) -> io::Result<()>,
{
    let start = Instant::now();
    let budget = config.time_budget;
    let threads = config.worker_count;
    let mut engine = Enumerator::new(config)?;
    let mut interrupt = |_: &_| budget.is_some_and(|b| start.elapsed() > b);
    on_generation(engine.current())?;
    if threads > 1 {
        let exec = RayonExecutor::new(threads).map_err(RunError::ThreadPool)?;
        drive(&mut engine, &exec, &mut interrupt, &mut on_generation)?;
    } else {
        drive(&mut engine, &Sequential, &mut interrupt, &mut on_generation)?;
    }
    Ok(engine.report(Some(start.elapsed())))
}

fn drive<E, I, G>(engine: &mut Enumerator, exec: &E, interrupt: &mut I, on_generation: &mut G) -> Result<(), RunError>
where
    E: ChunkExecutor,
    I: FnMut(&simcon_core::enumeration::Progress) -> bool,
    G: FnMut(&Generation) -> io::Result<()>,
{
    while engine.advance(exec, interrupt)?.is_none() {
        on_generation(engine.current())?;
    }
    Ok(())
}

/// [`run_count`] without a dump.
pub fn count(config: EnumerationConfig) -> Result<EnumerationReport, RunError> {
    run_count(config, |_| Ok(()))
}

pub fn available_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
