#include "alvis.hpp"

#include "error.hpp"

namespace w2b {

LabeledMatrix<long long> conjugate_permuted_d(const BlockData& bd, const BlockData& conj) {
  require(conj.id == bd.id.conjugate(), errc::invalid_argument,
          "second argument must be the conjugate block");
  int n = static_cast<int>(bd.partitions.size());
  LabeledMatrix<long long> pd(bd.partitions, conj.partitions);
  for (int k = 0; k < n; ++k) {
    int kc = conj.index_of(bd.partitions[k].conjugate());
    for (int j = 0; j < n; ++j) pd.at(k, j) = conj.d.at(kc, j);
  }
  return pd;
}

LabeledMatrix<long long> ac_matrix(const BlockData& bd, const BlockData& conj) {
  return matmul(bd.d_inverse, conjugate_permuted_d(bd, conj));
}

LabeledMatrix<long long> predicted_ac(const BlockData& bd, const BlockData& conj) {
  require(conj.id == bd.id.conjugate(), errc::invalid_argument,
          "second argument must be the conjugate block");
  const int e = bd.id.e;
  const int n = static_cast<int>(bd.partitions.size());
  LabeledMatrix<long long> a(bd.partitions, conj.partitions);
  for (int j = 0; j < n; ++j) {
    if (conj.regular[j]) {
      Partition m = conj.partitions[conj.class_successor[j]].conjugate();
      a.at(bd.index_of(m), j) = 1;
      continue;
    }
    const Weight2Label& ml = conj.labels[j];
    for (int i = 0; i < n; ++i) {
      const Weight2Label& ll = bd.labels[i];
      const int la = ll.a, lb = ll.b, eps = ll.eps;
      const long long sgn = ll.partial % 2 == 0 ? 1 : -1;
      long long val = 0;
      if (ml.a == 0 && ml.b == 1) {
        if (eps == 0)
          val = sgn;
        else if (la == e - 1 && lb < e)
          val = -sgn;
      } else if (ml.a == 0 && ml.b == 0) {
        if (eps == 0)
          val = la == lb ? 0 : sgn;
        else
          val = (la == e - 1 && lb <= e) || lb == la + 1 ? sgn : 2 * sgn;
      } else {
        const int jj = ml.a;  // label [jj, 0], 1 <= jj < e
        bool hit = (lb == e - jj + eps && la >= e - jj && la < e) ||
                   (la == e - jj - eps && lb >= eps && lb < e - jj);
        if (hit) val = (ll.partial + jj + 1) % 2 == 0 ? 1 : -1;
      }
      a.at(i, j) = val;
    }
  }
  return a;
}

}  // namespace w2b
