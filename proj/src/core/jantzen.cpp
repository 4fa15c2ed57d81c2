#include "jantzen.hpp"

#include "abacus.hpp"
#include "error.hpp"

namespace w2b {

long long p_adic_valuation(long long p, long long n) {
  if (p == 0) return 0;
  require(p >= 2, errc::invalid_argument, "p must be 0 or a prime");
  require(n > 0, errc::invalid_argument, "valuation needs a positive argument");
  long long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<ArrowTerm> arrow_terms(const Partition& la, const BlockId& b) {
  validate_block(b);
  const int e = b.e;
  AbacusDisplay d = display(la, e, default_frame(b));
  std::vector<ArrowTerm> out;
  for (int a : d.beads) {
    for (int i = 1; a - i * e >= 0; ++i) {
      if (d.occupied(a - i * e)) continue;
      require(i <= b.weight, errc::internal, "hook removal exceeds the block weight");
      int leg_removed = d.occupied_between(a - i * e, a);
      AbacusDisplay rho = apply_move(d, a, a - i * e);
      int hi = rho.beads.back() + i * e;
      for (int pos = a + 1; pos <= hi; ++pos) {
        if (rho.occupied(pos) || !rho.occupied(pos - i * e)) continue;
        AbacusDisplay t = apply_move(rho, pos - i * e, pos);
        int leg_attached = t.occupied_between(pos - i * e, pos);
        Partition tau = partition_of(t);
        require(strictly_dominates(tau, la), errc::internal,
                "re-attached partition must dominate the original");
        out.push_back({std::move(tau), (leg_removed + leg_attached) % 2 == 0 ? -1 : 1, i});
      }
    }
  }
  return out;
}

long long jantzen_coefficient(const std::vector<ArrowTerm>& terms, long long p,
                              const std::map<Partition, long long>& d_column) {
  long long j = 0;
  for (const auto& t : terms) {
    auto it = d_column.find(t.tau);
    if (it == d_column.end() || it->second == 0) continue;
    j += t.sign * (1 + p_adic_valuation(p, t.steps)) * it->second;
  }
  return j;
}

LabeledMatrix<long long> oracle_decomposition_matrix(const BlockId& b, long long p) {
  require(p != 2, errc::unsupported, "the reconstruction needs p = 0 or an odd prime");
  auto parts = enumerate_block(b);
  int n = static_cast<int>(parts.size());
  LabeledMatrix<long long> d(parts, parts);
  std::vector<std::map<Partition, long long>> col(n);
  for (int i = 0; i < n; ++i) {
    d.at(i, i) = 1;
    col[i][parts[i]] = 1;
    auto terms = arrow_terms(parts[i], b);
    for (int j = 0; j < i; ++j) {
      long long jc = jantzen_coefficient(terms, p, col[j]);
      require(jc >= 0 && jc <= 2, errc::internal, "sum-formula value out of range");
      if (jc != 0) {
        d.at(i, j) = 1;
        col[j][parts[i]] = 1;
      }
    }
  }
  return d;
}

}  // namespace w2b
