#pragma once

#include <map>
#include <vector>

#include "block.hpp"
#include "labeled_matrix.hpp"
#include "partition.hpp"

namespace w2b {

/// One term of the sum formula for la: remove a (steps*e)-hook, re-attach a
/// hook of the same size strictly further down the abacus.  tau lies in the
/// same block and strictly dominates la.
struct ArrowTerm {
  Partition tau;
  int sign = 1;   // (-1)^(leg(removed) + leg(attached) + 1)
  int steps = 1;  // hook size / e
};

/// nu_p(n) for p >= 2; nu_0 is identically 0.
long long p_adic_valuation(long long p, long long n);

/// All sum-formula terms for la, independent of the column.
std::vector<ArrowTerm> arrow_terms(const Partition& la, const BlockId& b);

/// J = sum of sign * (1 + nu_p(steps)) * d_column[tau]; partitions missing
/// from d_column count as 0.
long long jantzen_coefficient(const std::vector<ArrowTerm>& terms, long long p,
                              const std::map<Partition, long long>& d_column);

/// Decomposition matrix of a weight-2 block recovered from the sum formula
/// alone: columns filled top to bottom with d = min(J, 1), using only rows
/// already known.  p must be 0 or an odd prime (the reconstruction argument
/// breaks at p = 2).
LabeledMatrix<long long> oracle_decomposition_matrix(const BlockId& b, long long p = 0);

}  // namespace w2b
