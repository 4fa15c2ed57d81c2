#pragma once

#include "decomp.hpp"
#include "labeled_matrix.hpp"

namespace w2b {

/// Decomposition matrix of the conjugate block with its rows reindexed by
/// conjugation: rows are bd's partitions, columns conj's.
LabeledMatrix<long long> conjugate_permuted_d(const BlockData& bd, const BlockData& conj);

/// Alvis-Curtis matrix between a block and its conjugate: the signed
/// inverse of bd's decomposition matrix times conjugate_permuted_d.  Rows
/// bd, columns conj; composing the two directions gives the identity.
LabeledMatrix<long long> ac_matrix(const BlockData& bd, const BlockData& conj);

/// The same matrix predicted entry by entry: e-regular columns are unit at
/// the Mullineux image, e-singular columns follow sign patterns read off
/// the runner labels.
LabeledMatrix<long long> predicted_ac(const BlockData& bd, const BlockData& conj);

}  // namespace w2b
