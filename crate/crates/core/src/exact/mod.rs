//! Exact scalars and the combinatorial enumerators used by every route.

mod combinatorics;
mod gaussian;
mod rational;

pub(crate) use combinatorics::factorial_int;
pub use combinatorics::{
    binomial, composition_product_sum, compositions, compositions_all_lengths, convolution_powers,
    factorial, multinomial, partition_multiplicities, rising_factorial, Composition, Compositions,
    PartitionMultiplicity,
};
pub use gaussian::GaussianRational;
pub use rational::Rational;
