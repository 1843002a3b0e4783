//! Random scene generation and property suites for the discretization
//! theorems.

mod gen;
mod suites;

pub use gen::{gen_scene, trial_seed, SceneGenSpec};
pub use suites::{run, run_suite, Failure, Suite, SuiteReport};
