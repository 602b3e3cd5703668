//! The two `O(n log n)` baselines built on sorted orders: divide and conquer
//! and plane sweep.

mod divide;
mod sweep;

pub use divide::cpp_dc;
pub use sweep::cpp_ps;
