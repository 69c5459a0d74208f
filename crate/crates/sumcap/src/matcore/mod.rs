//! Dense complex linear algebra, entropies, purification and seeded
//! randomness — the numerical substrate for everything above it.

pub mod entropy;
pub mod matrix;
pub mod random;
pub mod state;

pub use entropy::{
    binary_entropy, entropy_from_eigenvalues, renyi_entropy, renyi_from_eigenvalues,
    shannon_entropy, von_neumann_entropy, RenyiOrder,
};
pub use matrix::{
    basis_matrix, basis_vector, direct_sum_mat, hermitian_spectrum, kron, kron_vec, max_abs_diff,
    partial_trace, CMatrix, CVector,
};
pub use random::{random_density, random_haar_unitary, random_pure};
pub use state::{DensityMatrix, ProbDist, PureState};
