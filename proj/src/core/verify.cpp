#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "alvis.hpp"
#include "decomp.hpp"
#include "error.hpp"
#include "jantzen.hpp"
#include "pairs.hpp"
#include "serialize.hpp"

namespace w2b {

namespace {

ojson make_witness(const BlockId& b, const std::string& detail,
                   const std::vector<Partition>& ps = {}, const std::string& expected = "",
                   const std::string& actual = "") {
  ojson w;
  w["block"] = json_block_id(b);
  ojson parr = ojson::array();
  for (const auto& la : ps) parr.push_back(json_partition(la));
  w["partitions"] = std::move(parr);
  w["expected"] = expected;
  w["actual"] = actual;
  w["detail"] = detail;
  return w;
}

/// Records assertions into a CheckResult; the witness builder runs only for
/// the first failure, so hot loops can defer all string formatting.
struct Rec {
  CheckResult& r;

  template <class F>
  bool expect(bool ok, F&& witness) {
    ++r.assertions;
    if (!ok && r.passed) {
      r.passed = false;
      r.witness = witness();
    }
    return ok;
  }
};

std::string ll_str(long long x) { return std::to_string(x); }

long long ceil_half(long long x) { return x % 2 == 0 ? x / 2 : (x + 1) / 2; }

bool is_odd(long long x) { return ((x % 2) + 2) % 2 == 1; }

// ---------------------------------------------------------------------------
// block-structure: the combinatorial layer.  Membership, labels, classes.
// ---------------------------------------------------------------------------

void check_block_structure(Rec& rec, const BlockId& id, const SweepConfig&) {
  auto bdp = analyze_block(id);
  const BlockData& bd = *bdp;
  const int e = id.e;
  const int n = static_cast<int>(bd.partitions.size());

  rec.expect(n == e * (e + 3) / 2, [&] {
    return make_witness(id, "block size is e(e+3)/2", {}, ll_str(e * (e + 3) / 2), ll_str(n));
  });
  for (int i = 1; i < n; ++i)
    rec.expect(bd.partitions[i - 1] > bd.partitions[i], [&] {
      return make_witness(id, "members strictly descending lexicographic",
                          {bd.partitions[i - 1], bd.partitions[i]});
    });

  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < n; ++i) {
    const Partition& la = bd.partitions[i];
    const Weight2Label& lab = bd.labels[i];
    auto cw = e_core_and_weight(la, e);
    rec.expect(cw.first == id.core && cw.second == 2, [&] {
      return make_witness(id, "member has the block's core and weight 2", {la},
                          id.core.str() + " w2", cw.first.str() + " w" + ll_str(cw.second));
    });
    rec.expect(block_of(la, e) == id,
               [&] { return make_witness(id, "block_of(member) round-trip", {la}); });
    rec.expect(block_of(la.conjugate(), e) == id.conjugate(), [&] {
      return make_witness(id, "conjugate member lies in the conjugate block", {la});
    });
    rec.expect(partition_of(bd.displays[i]) == la,
               [&] { return make_witness(id, "display/partition round-trip", {la}); });
    rec.expect(bd.displays[i].bead_count() == default_frame(id),
               [&] { return make_witness(id, "display uses the default frame", {la}); });
    rec.expect(is_valid_label(e, lab.a, lab.b), [&] {
      return make_witness(id, "member label is valid", {la}, "", lab.str());
    });
    rec.expect(lab.colour.has_value() == (lab.partial == 0), [&] {
      return make_witness(id, "colour set exactly when the label class is 0", {la});
    });
    rec.expect(lab.partial >= 0 && lab.partial < e, [&] {
      return make_witness(id, "label class lies in 0..e-1", {la}, "", ll_str(lab.partial));
    });
    rec.expect((lab.eps == 1) == (lab.partial != lab.a - lab.b), [&] {
      return make_witness(id, "eps marks the shifted leg difference", {la});
    });
    rec.expect(classify_at(la, id, default_frame(id) + e) == lab, [&] {
      return make_witness(id, "label independent of the display frame", {la});
    });
    rec.expect(bd.regular[i] == is_e_regular(la, e),
               [&] { return make_witness(id, "regular flag matches abacus test", {la}); });
    rec.expect(bd.restricted[i] == is_e_restricted(la, e),
               [&] { return make_witness(id, "restricted flag matches abacus test", {la}); });
    rec.expect(bd.restricted[i] == is_e_regular(la.conjugate(), e), [&] {
      return make_witness(id, "restricted iff conjugate is regular", {la});
    });
    rec.expect(bd.regular[i] == !is_singular_label(e, lab.a, lab.b), [&] {
      return make_witness(id, "singular members carry exactly the singular labels", {la}, "",
                          lab.str());
    });
    rec.expect(bd.sign[i] == (lab.partial % 2 == 0 ? 1 : -1), [&] {
      return make_witness(id, "relative sign is (-1)^class", {la}, "", ll_str(bd.sign[i]));
    });
    rec.expect(bd.sign[i] == relative_sign(la, e), [&] {
      return make_witness(id, "sign matches hook-peeling computation", {la});
    });
    seen.insert({lab.a, lab.b});
  }
  rec.expect(static_cast<int>(seen.size()) == n,
             [&] { return make_witness(id, "labels pairwise distinct"); });
  int nvalid = 0;
  for (int a = 0; a < e; ++a)
    for (int b = 0; b <= a + 1; ++b)
      if (is_valid_label(e, a, b)) {
        ++nvalid;
        rec.expect(seen.count({a, b}) == 1, [&] {
          return make_witness(id, "every valid label occurs", {},
                              "[" + ll_str(a) + "," + ll_str(b) + "]", "absent");
        });
      }
  rec.expect(nvalid == n, [&] {
    return make_witness(id, "valid label count equals block size", {}, ll_str(n),
                        ll_str(nvalid));
  });

  const auto& cls = bd.classes.classes;
  rec.expect(static_cast<int>(cls.size()) == e + 1, [&] {
    return make_witness(id, "e+1 dominance classes", {}, ll_str(e + 1), ll_str(cls.size()));
  });
  std::vector<std::string> want_keys = {"d0b", "d0w"};
  for (int j = 1; j < e; ++j) want_keys.push_back("d" + std::to_string(j));
  for (size_t c = 0; c < cls.size() && c < want_keys.size(); ++c)
    rec.expect(cls[c].first == want_keys[c], [&] {
      return make_witness(id, "class keys", {}, want_keys[c], cls[c].first);
    });
  for (size_t c = 0; c < cls.size(); ++c) {
    const auto& mem = cls[c].second;
    rec.expect(!mem.empty(),
               [&] { return make_witness(id, "class non-empty", {}, cls[c].first, "empty"); });
    for (size_t t = 0; t < mem.size(); ++t) {
      const int idx = mem[t];
      const Weight2Label& lab = bd.labels[idx];
      if (c <= 1) {
        rec.expect(lab.partial == 0 && lab.colour &&
                       *lab.colour == (c == 0 ? Colour::black : Colour::white),
                   [&] {
                     return make_witness(id, "class membership matches class and colour",
                                         {bd.partitions[idx]}, cls[c].first, lab.str());
                   });
      } else {
        rec.expect(lab.partial == static_cast<int>(c) - 1, [&] {
          return make_witness(id, "class membership matches class", {bd.partitions[idx]},
                              cls[c].first, ll_str(lab.partial));
        });
      }
      rec.expect(bd.classes.position[idx] ==
                     std::make_pair(static_cast<int>(c), static_cast<int>(t)),
                 [&] { return make_witness(id, "class position index", {bd.partitions[idx]}); });
      if (t + 1 < mem.size()) {
        rec.expect(strictly_dominates(bd.partitions[idx], bd.partitions[mem[t + 1]]), [&] {
          return make_witness(id, "class members form a dominance chain",
                              {bd.partitions[idx], bd.partitions[mem[t + 1]]});
        });
        rec.expect(idx < mem[t + 1], [&] {
          return make_witness(id, "class dominance order matches lexicographic order",
                              {bd.partitions[idx], bd.partitions[mem[t + 1]]});
        });
        rec.expect(bd.class_successor[idx] == mem[t + 1], [&] {
          return make_witness(id, "class successor links consecutive members",
                              {bd.partitions[idx]});
        });
        rec.expect(bd.regular[idx], [&] {
          return make_witness(id, "non-least class members are regular", {bd.partitions[idx]});
        });
      } else {
        rec.expect(bd.class_successor[idx] == -1, [&] {
          return make_witness(id, "least class member has no successor", {bd.partitions[idx]});
        });
        rec.expect(!bd.regular[idx], [&] {
          return make_witness(id, "least class member is singular", {bd.partitions[idx]});
        });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// oracle-equivalence: closed-formula D against the sum-formula recursion.
// ---------------------------------------------------------------------------

void check_oracle_equivalence(Rec& rec, const BlockId& id, const SweepConfig&) {
  auto bdp = analyze_block(id);
  const BlockData& bd = *bdp;
  const int n = static_cast<int>(bd.partitions.size());
  auto od = oracle_decomposition_matrix(id, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rec.expect(od.at(i, j) == bd.d.at(i, j), [&] {
        return make_witness(id, "closed-formula D equals sum-formula D",
                            {bd.partitions[i], bd.partitions[j]}, ll_str(od.at(i, j)),
                            ll_str(bd.d.at(i, j)));
      });

  std::vector<std::vector<ArrowTerm>> terms(n);
  for (int i = 0; i < n; ++i) terms[i] = arrow_terms(bd.partitions[i], id);
  for (int j = 0; j < n; ++j) {
    std::map<Partition, long long> col;
    for (int i = 0; i < n; ++i) col[bd.partitions[i]] = bd.d.at(i, j);
    for (int i = 0; i < n; ++i) {
      long long J = jantzen_coefficient(terms[i], 0, col);
      rec.expect(J >= 0 && J <= 2, [&] {
        return make_witness(id, "sum-formula coefficients lie in 0..2",
                            {bd.partitions[i], bd.partitions[j]}, "0..2", ll_str(J));
      });
      bool at2 = bd.regular[j] && bd.class_successor[j] == i;
      rec.expect((J == 2) == at2, [&] {
        return make_witness(id, "coefficient 2 exactly at the class successor of a regular column",
                            {bd.partitions[i], bd.partitions[j]}, at2 ? "2" : "0 or 1",
                            ll_str(J));
      });
    }
  }
}

// ---------------------------------------------------------------------------
// ac-closed-form: brute-force product vs the predicted sign pattern.
// ---------------------------------------------------------------------------

void check_ac_closed_form(Rec& rec, const BlockId& id, const SweepConfig&) {
  auto bdp = analyze_block(id);
  auto cjp = analyze_block(id.conjugate());
  auto A = ac_matrix(*bdp, *cjp);
  auto P = predicted_ac(*bdp, *cjp);
  const int n = A.n_rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rec.expect(A.at(i, j) == P.at(i, j), [&] {
        return make_witness(id, "Alvis-Curtis entry matches the label prediction",
                            {A.rows[i], A.cols[j]}, ll_str(P.at(i, j)), ll_str(A.at(i, j)));
      });
      rec.expect(A.at(i, j) >= -2 && A.at(i, j) <= 2, [&] {
        return make_witness(id, "Alvis-Curtis entries lie in -2..2", {A.rows[i], A.cols[j]},
                            "-2..2", ll_str(A.at(i, j)));
      });
    }
}

// ---------------------------------------------------------------------------
// mullineux: class-chain map vs label map, involution, regularity.
// ---------------------------------------------------------------------------

void check_mullineux(Rec& rec, const BlockId& id, const SweepConfig&) {
  auto bdp = analyze_block(id);
  auto cjp = analyze_block(id.conjugate());
  const BlockData& bd = *bdp;
  const BlockData& cj = *cjp;
  const int e = id.e;
  const int n = static_cast<int>(bd.partitions.size());
  for (int i = 0; i < n; ++i) {
    if (!bd.regular[i]) continue;
    const Partition& la = bd.partitions[i];
    Partition m1 = mullineux(bd, la);
    rec.expect(block_of(m1, e) == id.conjugate(), [&] {
      return make_witness(id, "Mullineux image lies in the conjugate block", {la, m1});
    });
    rec.expect(is_e_regular(m1, e),
               [&] { return make_witness(id, "Mullineux image is regular", {la, m1}); });
    rec.expect(mullineux_by_label(bd, cj, la) == m1, [&] {
      return make_witness(id, "label map agrees with the class-chain map", {la},
                          m1.str(), mullineux_by_label(bd, cj, la).str());
    });
    rec.expect(mullineux(cj, m1) == la,
               [&] { return make_witness(id, "Mullineux is an involution", {la, m1}); });
    int cs = bd.class_successor[i];
    rec.expect(cs >= 0 && bd.partitions[cs] == m1.conjugate(), [&] {
      return make_witness(id, "conjugate of the image is the class successor", {la, m1});
    });
    auto mlab = mullineux_label_map(e, bd.labels[i].a, bd.labels[i].b);
    const Weight2Label& got = cj.labels[cj.index_of(m1)];
    rec.expect(got.a == mlab.first && got.b == mlab.second, [&] {
      return make_witness(id, "image label follows the reflection rule", {la, m1},
                          "[" + ll_str(mlab.first) + "," + ll_str(mlab.second) + "]", got.str());
    });
  }
  auto A = ac_matrix(bd, cj);
  for (int j = 0; j < n; ++j) {
    if (!cj.regular[j]) continue;
    const int mi = bd.index_of(mullineux(cj, cj.partitions[j]));
    for (int i = 0; i < n; ++i)
      rec.expect(A.at(i, j) == (i == mi ? 1 : 0), [&] {
        return make_witness(id, "duality column of a regular partition is a unit at its image",
                            {bd.partitions[i], cj.partitions[j]}, i == mi ? "1" : "0",
                            ll_str(A.at(i, j)));
      });
  }
}

// ---------------------------------------------------------------------------
// fock-identities: the polynomial matrices and their exact relations.
// ---------------------------------------------------------------------------

void check_fock_identities(Rec& rec, const BlockId& id, const SweepConfig&) {
  auto bdp = analyze_block(id);
  auto cjp = analyze_block(id.conjugate());
  const BlockData& bd = *bdp;
  const BlockData& cj = *cjp;
  const int n = static_cast<int>(bd.partitions.size());

  rec.expect(is_identity(matmul(bd.d_inverse, bd.d)),
             [&] { return make_witness(id, "E D = I"); });
  rec.expect(is_identity(matmul(bd.d, bd.d_inverse)),
             [&] { return make_witness(id, "D E = I"); });
  rec.expect(bd.cartan == matmul(transpose(bd.d), bd.d),
             [&] { return make_witness(id, "Cartan matrix is D^T D"); });

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && bd.d_inverse.at(i, j) != 0)
        rec.expect(dominates(bd.partitions[j], bd.partitions[i]), [&] {
          return make_witness(id, "nonzero signed-inverse entry forces column to dominate row",
                              {bd.partitions[i], bd.partitions[j]}, "",
                              ll_str(bd.d_inverse.at(i, j)));
        });

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const VPoly& p = bd.dv.at(i, j);
      rec.expect(bd.d.at(i, j) == p.eval(1), [&] {
        return make_witness(id, "D is the v = 1 specialization",
                            {bd.partitions[i], bd.partitions[j]}, p.str(),
                            ll_str(bd.d.at(i, j)));
      });
      rec.expect(p.degree() <= 2, [&] {
        return make_witness(id, "v-decomposition degree at most 2",
                            {bd.partitions[i], bd.partitions[j]}, "", p.str());
      });
      if (i == j)
        rec.expect(p == VPoly(1), [&] {
          return make_witness(id, "diagonal v-entries are 1", {bd.partitions[i]}, "1", p.str());
        });
      else {
        rec.expect(p.coeff(0) == 0, [&] {
          return make_witness(id, "off-diagonal v-entries have no constant term",
                              {bd.partitions[i], bd.partitions[j]}, "", p.str());
        });
        for (int k = 0; k <= p.degree(); ++k)
          rec.expect(p.coeff(k) >= 0, [&] {
            return make_witness(id, "v-entries have non-negative coefficients",
                                {bd.partitions[i], bd.partitions[j]}, "", p.str());
          });
        if (!p.is_zero())
          rec.expect(dominates(bd.partitions[j], bd.partitions[i]), [&] {
            return make_witness(id, "nonzero v-entry forces column to dominate row",
                                {bd.partitions[i], bd.partitions[j]}, "", p.str());
          });
      }
      bool same_sign = bd.sign[i] == bd.sign[j];
      for (int k = 0; k <= p.degree(); ++k)
        if (same_sign ? (k % 2 == 1) : (k % 2 == 0))
          rec.expect(p.coeff(k) == 0, [&] {
            return make_witness(id, "v-entry parity follows the relative signs",
                                {bd.partitions[i], bd.partitions[j]}, "", p.str());
          });
    }

  auto Ev = e_poly_matrix(bd, cj);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const VPoly& p = Ev.at(i, j);
      if (i == j)
        rec.expect(p == VPoly(1), [&] {
          return make_witness(id, "diagonal inverse v-entries are 1", {Ev.rows[i]}, "1",
                              p.str());
        });
      else {
        rec.expect(p.coeff(0) == 0, [&] {
          return make_witness(id, "off-diagonal inverse v-entries lie in v N[v]",
                              {Ev.rows[i], Ev.cols[j]}, "", p.str());
        });
        for (int k = 0; k <= p.degree(); ++k)
          rec.expect(p.coeff(k) >= 0, [&] {
            return make_witness(id, "inverse v-entries have non-negative coefficients",
                                {Ev.rows[i], Ev.cols[j]}, "", p.str());
          });
        if (!p.is_zero())
          rec.expect(dominates(Ev.rows[i], Ev.cols[j]), [&] {
            return make_witness(id, "nonzero inverse v-entry forces row to dominate column",
                                {Ev.rows[i], Ev.cols[j]}, "", p.str());
          });
      }
    }

  // Two-sided polynomial inversion across the conjugate block.
  auto EvC = e_poly_matrix(cj, bd);
  LabeledMatrix<VPoly> M(bd.partitions, bd.partitions);
  for (int i = 0; i < n; ++i) {
    int ic = cj.index_of(bd.partitions[i].conjugate());
    for (int j = 0; j < n; ++j)
      M.at(i, j) =
          EvC.at(ic, cj.index_of(bd.partitions[j].conjugate())).negate_variable();
  }
  rec.expect(is_identity(matmul(M, bd.dv)), [&] {
    return make_witness(id, "conjugate inverse v-matrix is a left inverse of D(v)");
  });
  rec.expect(is_identity(matmul(bd.dv, M)), [&] {
    return make_witness(id, "conjugate inverse v-matrix is a right inverse of D(v)");
  });

  // Bar symmetry through the Mullineux map on regular columns.
  for (int j = 0; j < n; ++j) {
    if (!bd.regular[j]) continue;
    Partition mmu = mullineux(bd, bd.partitions[j]);
    int rj = cj.index_of(mmu);
    for (int i = 0; i < n; ++i) {
      const VPoly& lhs = bd.dv.at(i, j);
      VPoly rhs = cj.dv.at(cj.index_of(bd.partitions[i].conjugate()), rj).reciprocal_shift(2);
      rec.expect(lhs == rhs, [&] {
        return make_witness(id, "degree-2 flip matches the conjugate column at the image",
                            {bd.partitions[i], bd.partitions[j]}, rhs.str(), lhs.str());
      });
    }
  }

  // Derivative at 1 recovers the p = 0 sum-formula coefficients.
  std::vector<std::vector<ArrowTerm>> terms(n);
  for (int i = 0; i < n; ++i) terms[i] = arrow_terms(bd.partitions[i], id);
  for (int j = 0; j < n; ++j) {
    std::map<Partition, long long> col;
    for (int i = 0; i < n; ++i) col[bd.partitions[i]] = bd.d.at(i, j);
    for (int i = 0; i < n; ++i) {
      long long J = jantzen_coefficient(terms[i], 0, col);
      rec.expect(bd.dv.at(i, j).derivative_at_one() == J, [&] {
        return make_witness(id, "derivative at 1 equals the sum-formula coefficient",
                            {bd.partitions[i], bd.partitions[j]}, ll_str(J),
                            ll_str(bd.dv.at(i, j).derivative_at_one()));
      });
    }
  }
}

// ---------------------------------------------------------------------------
// jantzen-cross-p: the recursion is characteristic-independent for odd p.
// ---------------------------------------------------------------------------

void check_jantzen_cross_p(Rec& rec, const BlockId& id, const SweepConfig& cfg) {
  auto bdp = analyze_block(id);
  const BlockData& bd = *bdp;
  const int n = static_cast<int>(bd.partitions.size());
  std::vector<std::vector<ArrowTerm>> terms(n);
  for (int i = 0; i < n; ++i) terms[i] = arrow_terms(bd.partitions[i], id);
  for (long long p : cfg.p_values) {
    if (p == 0) continue;
    auto dp = oracle_decomposition_matrix(id, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        rec.expect(dp.at(i, j) == bd.d.at(i, j), [&] {
          return make_witness(id, "sum-formula D at p = " + ll_str(p) + " equals p = 0",
                              {bd.partitions[i], bd.partitions[j]}, ll_str(bd.d.at(i, j)),
                              ll_str(dp.at(i, j)));
        });
    for (int j = 0; j < n; ++j) {
      std::map<Partition, long long> col;
      for (int i = 0; i < n; ++i) col[bd.partitions[i]] = bd.d.at(i, j);
      for (int i = 0; i < n; ++i)
        rec.expect(jantzen_coefficient(terms[i], p, col) ==
                       jantzen_coefficient(terms[i], 0, col),
                   [&] {
                     return make_witness(id,
                                         "sum-formula coefficient at p = " + ll_str(p) +
                                             " equals p = 0",
                                         {bd.partitions[i], bd.partitions[j]});
                   });
    }
  }
}

// ---------------------------------------------------------------------------
// runner-insertion: both insertion kinds embed D(v) into an (e+1)-block.
// ---------------------------------------------------------------------------

void check_runner_insertion(Rec& rec, const BlockId& id, const SweepConfig&) {
  auto bdp = analyze_block(id);
  const BlockData& bd = *bdp;
  const int e = id.e;
  const int n = static_cast<int>(bd.partitions.size());
  const int base = default_frame(id);
  int rows_full = 0;
  for (const auto& d : bd.displays)
    rows_full = std::max(rows_full, d.beads.back() / e + 1);

  struct Mode {
    InsertKind kind;
    int rows, frame;
  };
  const Mode modes[2] = {{InsertKind::empty_runner, 1, base + e},
                         {InsertKind::full_runner, rows_full, base}};
  for (const Mode& md : modes) {
    for (int slot = 0; slot <= e; ++slot) {
      const RunnerInsertion ins{slot, md.kind, md.rows};
      const bool empty = md.kind == InsertKind::empty_runner;
      std::vector<Partition> img(n);
      for (int i = 0; i < n; ++i) img[i] = insert_runner(bd.partitions[i], e, ins, md.frame);
      BlockId ib = block_of(img[0], e + 1);
      bool ok = rec.expect(ib.weight == 2, [&] {
        return make_witness(id, "insertion image keeps weight 2", {bd.partitions[0], img[0]},
                            "2", ll_str(ib.weight));
      });
      for (int i = 1; i < n && ok; ++i)
        ok = rec.expect(block_of(img[i], e + 1) == ib, [&] {
          return make_witness(id, "all insertion images share one block",
                              {bd.partitions[i], img[i]});
        });
      if (!ok) continue;
      auto ibdp = analyze_block(ib);
      const BlockData& ibd = *ibdp;
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[i] = ibd.index_of(img[i]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          rec.expect(bd.dv.at(i, j) == ibd.dv.at(pos[i], pos[j]), [&] {
            return make_witness(id, "v-decomposition entries survive runner insertion",
                                {bd.partitions[i], bd.partitions[j]},
                                bd.dv.at(i, j).str(), ibd.dv.at(pos[i], pos[j]).str());
          });
      for (int i = 0; i < n; ++i) {
        if (empty)
          rec.expect(ibd.regular[pos[i]], [&] {
            return make_witness(id, "empty insertion images are always regular",
                                {bd.partitions[i], img[i]});
          });
        else
          rec.expect(ibd.regular[pos[i]] == bd.regular[i], [&] {
            return make_witness(id, "full insertion preserves regularity",
                                {bd.partitions[i], img[i]});
          });
      }
      if (!empty)
        for (int i = 0; i < n; ++i) {
          if (!bd.regular[i]) continue;
          int cs = bd.class_successor[i];
          int csh = ibd.class_successor[pos[i]];
          rec.expect(cs >= 0 && csh >= 0 && ibd.partitions[csh] == img[cs], [&] {
            return make_witness(id, "full insertion transports the class successor",
                                {bd.partitions[i], img[i]});
          });
        }
    }
  }
}

// ---------------------------------------------------------------------------
// pair-suite: runner-swap pairs, exceptional triples, transport identities.
// ---------------------------------------------------------------------------

void check_pair_suite(Rec& rec, const BlockId& id, const SweepConfig&) {
  auto bbp = analyze_block(id);
  const BlockData& bb = *bbp;
  const int n = static_cast<int>(bb.partitions.size());
  for (const PairInfo& pr : find_pairs(id)) {
    auto ccp = analyze_block(pr.c);
    const BlockData& cc = *ccp;
    rec.expect(pr.b == id && pr.k >= 1,
               [&] { return make_witness(id, "pair has this block on the large side"); });
    rec.expect(pr.b.core.size() == pr.c.core.size() + pr.k, [&] {
      return make_witness(id, "pair drops the core size by k", {pr.c.core},
                          ll_str(pr.b.core.size() - pr.k), ll_str(pr.c.core.size()));
    });
    std::vector<int> toC(n);
    for (int i = 0; i < n; ++i) toC[i] = cc.index_of(phi(pr, bb.partitions[i]));

    int ai = -1, bi = -1, gi = -1, ati = -1, bti = -1, gti = -1;
    if (pr.k == 1) {
      Exceptional eb = exceptional_b(pr), ec = exceptional_c(pr);
      ai = eb.alpha, bi = eb.beta, gi = eb.gamma;
      ati = ec.alpha, bti = ec.beta, gti = ec.gamma;
    }

    // The bijection: label transport, swap realization, class and eps.
    for (int i = 0; i < n; ++i) {
      const Partition& la = bb.partitions[i];
      Partition sw = phi_swap(pr, la);
      const Partition& fl = cc.partitions[toC[i]];
      if (pr.k >= 2 || (i != ai && i != bi && i != gi))
        rec.expect(sw == fl, [&] {
          return make_witness(id, "bijection realized by the runner swap", {la, fl}, fl.str(),
                              sw.str());
        });
      if (pr.k >= 2 || i != ai) {
        rec.expect(bb.labels[i].partial == cc.labels[toC[i]].partial, [&] {
          return make_witness(id, "bijection preserves the label class", {la, fl});
        });
        rec.expect(bb.labels[i].eps == cc.labels[toC[i]].eps, [&] {
          return make_witness(id, "bijection preserves eps", {la, fl});
        });
      }
    }
    if (pr.k >= 2) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          rec.expect(bb.d.at(i, j) == cc.d.at(toC[i], toC[j]), [&] {
            return make_witness(id, "decomposition numbers transport across the pair",
                                {bb.partitions[i], bb.partitions[j]});
          });
    }

    auto bpd = analyze_block(id.conjugate());
    auto cpd = analyze_block(pr.c.conjugate());
    const BlockData& bp = *bpd;
    const BlockData& cp = *cpd;

    if (pr.k == 1) {
      const Partition &al = bb.partitions[ai], &be = bb.partitions[bi],
                      &ga = bb.partitions[gi];
      const Partition &alt = cc.partitions[ati], &bet = cc.partitions[bti],
                      &gat = cc.partitions[gti];
      rec.expect(toC[ai] == ati && toC[bi] == gti && toC[gi] == bti, [&] {
        return make_witness(id, "bijection crosses the lower exceptional pair",
                            {al, be, ga});
      });
      rec.expect(phi_swap(pr, al) == gat && phi_swap(pr, be) == bet &&
                     phi_swap(pr, ga) == alt,
                 [&] {
                   return make_witness(id, "runner swap reverses the exceptional triple",
                                       {al, be, ga});
                 });
      const int da = bb.labels[ai].partial, db = bb.labels[bi].partial,
                dg = bb.labels[gi].partial;
      const int dat = cc.labels[ati].partial, dbt = cc.labels[bti].partial,
                dgt = cc.labels[gti].partial;
      rec.expect(da == dg && da == db - 1, [&] {
        return make_witness(id, "exceptional classes: outer two one below the middle",
                            {al, be, ga});
      });
      rec.expect(dat == dgt && dat == dbt + 1, [&] {
        return make_witness(id, "partner exceptional classes: outer two one above the middle",
                            {alt, bet, gat});
      });
      rec.expect(da == dat - 1,
                 [&] { return make_witness(id, "top exceptional class rises by one", {al, alt}); });
      rec.expect(bb.labels[ai].eps == 0 && cc.labels[ati].eps == 1, [&] {
        return make_witness(id, "eps flips only at the top exceptional", {al, alt});
      });
      for (int i = 0; i < n; ++i)
        rec.expect(bb.d.at(i, ai) == ((i == ai || i == bi || i == gi) ? 1 : 0), [&] {
          return make_witness(id, "column of the top exceptional is the triple indicator",
                              {bb.partitions[i], al});
        });
      for (int i = 0; i < n; ++i)
        rec.expect(cc.d.at(i, ati) == ((i == ati || i == bti || i == gti) ? 1 : 0), [&] {
          return make_witness(id, "partner column of the top exceptional is its triple indicator",
                              {cc.partitions[i], alt});
        });
      rec.expect(bb.class_successor[ai] == gi, [&] {
        return make_witness(id, "bottom exceptional is the class successor of the top",
                            {al, ga});
      });
      rec.expect(cc.class_successor[ati] == gti, [&] {
        return make_witness(id, "partner bottom exceptional is the class successor of the top",
                            {alt, gat});
      });
      for (int j = 0; j < n; ++j) {
        rec.expect(bb.cartan.at(ai, j) ==
                       bb.d.at(ai, j) + bb.d.at(bi, j) + bb.d.at(gi, j),
                   [&] {
                     return make_witness(id, "Cartan row of the top exceptional sums the triple",
                                         {al, bb.partitions[j]});
                   });
        rec.expect(cc.cartan.at(ati, j) ==
                       cc.d.at(ati, j) + cc.d.at(bti, j) + cc.d.at(gti, j),
                   [&] {
                     return make_witness(
                         id, "partner Cartan row of the top exceptional sums the triple",
                         {alt, cc.partitions[j]});
                   });
      }
      for (int mi = 0; mi < n; ++mi) {
        if (mi == ai || mi == bi || mi == gi) continue;
        for (int lj = 0; lj < n; ++lj)
          rec.expect(bb.d.at(mi, lj) == cc.d.at(toC[mi], toC[lj]), [&] {
            return make_witness(id, "non-exceptional rows of D transport across the pair",
                                {bb.partitions[mi], bb.partitions[lj]});
          });
      }
      for (int lj = 0; lj < n; ++lj) {
        if (lj == ai) continue;
        const int fj = toC[lj];
        const long long s1 = bb.d.at(ai, lj) + cc.d.at(gti, fj);
        const long long s2 = bb.d.at(bi, lj) + cc.d.at(bti, fj);
        const long long s3 = bb.d.at(gi, lj) + cc.d.at(ati, fj);
        rec.expect(s1 == s2 && s2 == s3, [&] {
          return make_witness(id, "crossed exceptional row sums agree", {bb.partitions[lj]},
                              "", ll_str(s1) + "," + ll_str(s2) + "," + ll_str(s3));
        });
        const long long cB = bb.cartan.at(ai, lj), cC = cc.cartan.at(ati, fj);
        rec.expect(cB <= 2 && cC <= 2, [&] {
          return make_witness(id, "exceptional Cartan entries are at most 2",
                              {bb.partitions[lj]}, "<=2",
                              ll_str(cB) + "," + ll_str(cC));
        });
        if (cB != 0)
          rec.expect(s1 == 1 && cB + cC == 3, [&] {
            return make_witness(id,
                                "nonzero exceptional Cartan entries split 3 with row sums 1",
                                {bb.partitions[lj]}, "",
                                ll_str(cB) + "+" + ll_str(cC));
          });
      }
      // Shared columns of consecutive exceptional rows.
      const bool beta_restr = bb.restricted[bi];
      Partition m_beta;
      if (beta_restr) m_beta = mullineux(bp, be.conjugate());
      const bool betat_restr = cc.restricted[bti];
      Partition m_betat;
      if (betat_restr) m_betat = mullineux(cp, bet.conjugate());
      for (int lj = 0; lj < n; ++lj) {
        if (lj == ai) continue;
        const int fj = toC[lj];
        bool bothAB = bb.d.at(ai, lj) != 0 && bb.d.at(bi, lj) != 0;
        rec.expect(bothAB == (beta_restr && bb.partitions[lj] == m_beta), [&] {
          return make_witness(id, "top two exceptional rows share exactly the image column",
                              {bb.partitions[lj]});
        });
        bool bothBC = bb.d.at(bi, lj) != 0 && bb.d.at(gi, lj) != 0;
        rec.expect(bothBC == (lj == bi), [&] {
          return make_witness(id, "bottom two exceptional rows share only the middle column",
                              {bb.partitions[lj]});
        });
        bool bothABt = cc.d.at(ati, fj) != 0 && cc.d.at(bti, fj) != 0;
        rec.expect(bothABt == (betat_restr && cc.partitions[fj] == m_betat), [&] {
          return make_witness(id,
                              "partner top two exceptional rows share exactly the image column",
                              {cc.partitions[fj]});
        });
        bool bothBCt = cc.d.at(bti, fj) != 0 && cc.d.at(gti, fj) != 0;
        rec.expect(bothBCt == (fj == bti), [&] {
          return make_witness(
              id, "partner bottom two exceptional rows share only the middle column",
              {cc.partitions[fj]});
        });
      }
      // Signed-inverse columns at the triple.
      const auto& EB = bb.d_inverse;
      const auto& EC = cc.d_inverse;
      for (int li = 0; li < n; ++li) {
        rec.expect(EB.at(li, ai) + EB.at(li, bi) + EB.at(li, gi) == (li == ai ? 1 : 0), [&] {
          return make_witness(id, "inverse columns over the triple sum to a delta",
                              {bb.partitions[li]});
        });
        rec.expect(EC.at(li, ati) + EC.at(li, bti) + EC.at(li, gti) == (li == ati ? 1 : 0),
                   [&] {
                     return make_witness(id,
                                         "partner inverse columns over the triple sum to a delta",
                                         {cc.partitions[li]});
                   });
      }
      for (int li = 0; li < n; ++li) {
        if (li == ai) continue;
        const int fi = toC[li];
        const long long eA = EB.at(li, ai), eB2 = EB.at(li, bi), eG = EB.at(li, gi);
        const long long eAt = EC.at(fi, ati), eBt = EC.at(fi, bti), eGt = EC.at(fi, gti);
        rec.expect(eA == eAt + eBt && eAt == eA + eB2 && eB2 == eAt + eGt &&
                       eBt == eA + eG && eG == eBt + eGt && eGt == eB2 + eG,
                   [&] {
                     return make_witness(id, "inverse entries satisfy the crossing relations",
                                         {bb.partitions[li]}, "",
                                         ll_str(eA) + "," + ll_str(eB2) + "," + ll_str(eG) +
                                             " / " + ll_str(eAt) + "," + ll_str(eBt) + "," +
                                             ll_str(eGt));
                   });
      }
      rec.expect(EB.at(bi, ai) == -1 && EC.at(bti, ati) == -1 && EB.at(gi, ai) == 0 &&
                     EC.at(gti, ati) == 0 && EB.at(gi, bi) == -1 && EC.at(gti, bti) == -1,
                 [&] {
                   return make_witness(id, "inverse entries on the triple are -1, 0, -1",
                                       {al, be, ga});
                 });
      // The Cartan-one neighbourhood of the top exceptional.
      const int aa = bb.labels[ai].a, ab = bb.labels[ai].b;
      const int e = id.e;
      rec.expect(aa >= 1 && ab >= 1 && ab <= aa, [&] {
        return make_witness(id, "top exceptional label is regular with eps 0", {al}, "",
                            bb.labels[ai].str());
      });
      std::set<int> S;
      S.insert(partition_of_label(bb, aa - 1, ab));
      S.insert(partition_of_label(bb, aa, ab + 1));
      if (aa <= e - 2) S.insert(partition_of_label(bb, aa + 1, ab - 1));
      if (aa == ab && aa <= e - 2) S.insert(partition_of_label(bb, aa + 1, aa + 2));
      std::set<int> got;
      for (int lj = 0; lj < n; ++lj)
        if (bb.cartan.at(ai, lj) == 1) got.insert(lj);
      rec.expect(S == got, [&] {
        std::string want, have;
        for (int x : S) want += bb.partitions[x].str();
        for (int x : got) have += bb.partitions[x].str();
        return make_witness(id, "Cartan-one columns of the top exceptional", {al}, want, have);
      });
      rec.expect(bb.labels[partition_of_label(bb, aa - 1, ab)].eps == 1 &&
                     bb.labels[partition_of_label(bb, aa, ab + 1)].eps == 1,
                 [&] { return make_witness(id, "eps on the two inner neighbours is 1", {al}); });
      if (aa <= e - 2)
        rec.expect(bb.labels[partition_of_label(bb, aa + 1, ab - 1)].eps == 0, [&] {
          return make_witness(id, "eps on the outer neighbour is 0", {al});
        });
      if (aa == ab && aa <= e - 2)
        rec.expect(bb.labels[partition_of_label(bb, aa + 1, aa + 2)].eps == 1, [&] {
          return make_witness(id, "eps on the diagonal neighbour is 1", {al});
        });
    }

    // The conjugate pair and the duality transport of the Alvis-Curtis matrix.
    const PairInfo* pcp = nullptr;
    auto cps = find_pairs(id.conjugate());
    for (const auto& q : cps)
      if (q.c.core == pr.c.core.conjugate()) {
        pcp = &q;
        break;
      }
    if (!rec.expect(pcp != nullptr,
                    [&] { return make_witness(id, "conjugate pair exists", {pr.c.core}); }))
      continue;
    const PairInfo& pc = *pcp;
    rec.expect(pc.k == pr.k, [&] {
      return make_witness(id, "conjugate pair has the same k", {}, ll_str(pr.k),
                          ll_str(pc.k));
    });
    std::vector<int> toCp(n);
    for (int i = 0; i < n; ++i) toCp[i] = cp.index_of(phi(pc, bp.partitions[i]));
    auto A_B = ac_matrix(bb, bp);
    auto A_C = ac_matrix(cc, cp);

    int gpj = -1;
    if (pr.k == 1) {
      const Partition &al = bb.partitions[ai], &ga = bb.partitions[gi];
      const Partition &alt = cc.partitions[ati], &gat = cc.partitions[gti];
      const Partition &be = bb.partitions[bi], &bet = cc.partitions[bti];
      Exceptional ebp = exceptional_b(pc), ecp = exceptional_c(pc);
      rec.expect(bp.partitions[ebp.alpha] == ga.conjugate() &&
                     bp.partitions[ebp.beta] == be.conjugate() &&
                     bp.partitions[ebp.gamma] == al.conjugate(),
                 [&] {
                   return make_witness(id, "conjugate-pair exceptionals are reversed conjugates",
                                       {al, be, ga});
                 });
      rec.expect(cp.partitions[ecp.alpha] == gat.conjugate() &&
                     cp.partitions[ecp.beta] == bet.conjugate() &&
                     cp.partitions[ecp.gamma] == alt.conjugate(),
                 [&] {
                   return make_witness(
                       id, "conjugate-pair partner exceptionals are reversed conjugates",
                       {alt, bet, gat});
                 });
      gpj = bp.index_of(ga.conjugate());
      for (int li = 0; li < n; ++li)
        rec.expect(A_B.at(li, gpj) == (li == ai ? 1 : 0), [&] {
          return make_witness(id,
                              "duality column of the conjugate bottom exceptional is a delta",
                              {bb.partitions[li], ga.conjugate()});
        });
      if (rec.expect(bp.regular[gpj], [&] {
            return make_witness(id, "conjugate bottom exceptional is regular",
                                {ga.conjugate()});
          }))
        rec.expect(mullineux(bp, ga.conjugate()) == al, [&] {
          return make_witness(id, "conjugate bottom exceptional reflects to the top",
                              {ga.conjugate(), al});
        });
    }

    for (int li = 0; li < n; ++li)
      for (int mj = 0; mj < n; ++mj) {
        if (pr.k == 1 && li == ai && mj != gpj) continue;
        rec.expect(A_B.at(li, mj) == A_C.at(toC[li], toCp[mj]), [&] {
          return make_witness(id, "duality matrix transports across the pair",
                              {bb.partitions[li], bp.partitions[mj]},
                              ll_str(A_B.at(li, mj)),
                              ll_str(A_C.at(toC[li], toCp[mj])));
        });
      }

    if (pr.k == 1) {
      std::vector<int> onesB, onesC;
      for (int j = 0; j < n; ++j)
        if (bb.cartan.at(ai, j) == 1) onesB.push_back(j);
      for (int j = 0; j < n; ++j)
        if (cc.cartan.at(ati, j) == 1) onesC.push_back(j);
      const int gptj = cp.index_of(cc.partitions[gti].conjugate());
      for (int mj = 0; mj < n; ++mj) {
        if (mj == gpj) continue;
        const int fmj = toCp[mj];
        const long long aB = A_B.at(ai, mj), aC = A_C.at(ati, fmj);
        long long sB = 0, sC = 0;
        for (int v : onesB) sB += A_B.at(v, mj);
        for (int v : onesC) sC += A_C.at(v, fmj);
        rec.expect(aB == ceil_half(aC - sC) && aC == ceil_half(aB - sB), [&] {
          return make_witness(id, "exceptional duality rows satisfy the halving relation",
                              {bp.partitions[mj]}, "",
                              ll_str(aB) + " vs " + ll_str(ceil_half(aC - sC)) + "; " +
                                  ll_str(aC) + " vs " + ll_str(ceil_half(aB - sB)));
        });
        rec.expect(is_odd(aB - sB) == (bp.cartan.at(gpj, mj) == 1), [&] {
          return make_witness(id, "halving parity matches the conjugate Cartan entry",
                              {bp.partitions[mj]});
        });
        rec.expect(is_odd(aC - sC) == (cp.cartan.at(gptj, fmj) == 1), [&] {
          return make_witness(id, "partner halving parity matches the conjugate Cartan entry",
                              {cp.partitions[fmj]});
        });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// structure-bounds: composition-factor counts, radical constraints,
// Ext-quiver bipartiteness, duality composition and Cartan duality.
// ---------------------------------------------------------------------------

void check_structure_bounds(Rec& rec, const BlockId& id, const SweepConfig&) {
  auto bdp = analyze_block(id);
  auto cjp = analyze_block(id.conjugate());
  const BlockData& bd = *bdp;
  const BlockData& cj = *cjp;
  const int e = id.e;
  const int n = static_cast<int>(bd.partitions.size());

  for (int i = 0; i < n; ++i) {
    const Partition& la = bd.partitions[i];
    const int dl = bd.labels[i].partial;
    auto stats = composition_stats(bd, la);
    long long total = 0;
    for (int q = 0; q < e; ++q) {
      total += stats[q];
      if (q < dl - 1 || q > dl + 1)
        rec.expect(stats[q] == 0, [&] {
          return make_witness(id, "factors concentrate on adjacent classes", {la}, "0",
                              ll_str(stats[q]) + " at class " + ll_str(q));
        });
    }
    if (dl + 1 < e)
      rec.expect(stats[dl + 1] <= 1, [&] {
        return make_witness(id, "at most one factor one class up", {la}, "<=1",
                            ll_str(stats[dl + 1]));
      });
    rec.expect(stats[dl] <= 2, [&] {
      return make_witness(id, "at most two factors in the own class", {la}, "<=2",
                          ll_str(stats[dl]));
    });
    rec.expect((stats[dl] == 2) == bd.restricted[i], [&] {
      return make_witness(id, "two own-class factors exactly for restricted rows", {la},
                          bd.restricted[i] ? "2" : "1", ll_str(stats[dl]));
    });
    if (dl >= 1 && stats[dl - 1] > 1) {
      rec.expect(dl == 1 && stats[dl - 1] == 2, [&] {
        return make_witness(id, "two factors one class down only from class 1", {la}, "",
                            ll_str(stats[dl - 1]) + " at class " + ll_str(dl - 1));
      });
      if (dl == 1 && stats[0] == 2) {
        std::vector<int> zc;
        for (int j = 0; j < n; ++j)
          if (bd.d.at(i, j) != 0 && bd.labels[j].partial == 0) zc.push_back(j);
        rec.expect(zc.size() == 2 && bd.labels[zc[0]].colour != bd.labels[zc[1]].colour, [&] {
          return make_witness(id, "the two class-0 factors have different colours", {la});
        });
      }
    }
    rec.expect(total <= 5, [&] {
      return make_witness(id, "at most five composition factors", {la}, "<=5", ll_str(total));
    });
    if (total == 5)
      rec.expect(bd.restricted[i] && dl == 1, [&] {
        return make_witness(id, "five factors only for restricted rows of class 1", {la});
      });

    std::vector<int> factors;
    for (int j = 0; j < n; ++j) {
      rec.expect(bd.d.at(i, j) == 0 || bd.d.at(i, j) == 1, [&] {
        return make_witness(id, "decomposition numbers are 0 or 1",
                            {la, bd.partitions[j]}, "0 or 1", ll_str(bd.d.at(i, j)));
      });
      if (j != i && bd.d.at(i, j) != 0) factors.push_back(j);
    }
    for (size_t s = 0; s < factors.size(); ++s)
      for (size_t t = s + 1; t < factors.size(); ++t) {
        const Weight2Label &x = bd.labels[factors[s]], &y = bd.labels[factors[t]];
        rec.expect(x.partial != y.partial ||
                       (x.partial == 0 && x.colour != y.colour),
                   [&] {
                     return make_witness(
                         id, "distinct radical factors differ in class or colour",
                         {la, bd.partitions[factors[s]], bd.partitions[factors[t]]});
                   });
      }
  }

  for (const auto& [x, y] : ext_quiver(bd))
    rec.expect(bd.sign[bd.index_of(x)] != bd.sign[bd.index_of(y)], [&] {
      return make_witness(id, "extension edges join opposite signs", {x, y});
    });

  auto A = ac_matrix(bd, cj);
  auto A2 = ac_matrix(cj, bd);
  rec.expect(is_identity(matmul(A, A2)),
             [&] { return make_witness(id, "duality composes to the identity"); });
  rec.expect(is_identity(matmul(A2, A)),
             [&] { return make_witness(id, "reverse duality composes to the identity"); });

  rec.expect(matmul(bd.cartan, bd.d_inverse) == transpose(bd.d),
             [&] { return make_witness(id, "Cartan times inverse equals D transposed"); });
  auto lhs = matmul(bd.cartan, A);
  auto rhs = matmul(transpose(bd.d), conjugate_permuted_d(bd, cj));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rec.expect(lhs.at(i, j) == rhs.at(i, j), [&] {
        return make_witness(id, "Cartan-duality product identity", {lhs.rows[i], lhs.cols[j]},
                            ll_str(rhs.at(i, j)), ll_str(lhs.at(i, j)));
      });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const long long val = lhs.at(i, j);
      if (cj.regular[j]) {
        Partition m = mullineux(cj, cj.partitions[j]);
        rec.expect(val == bd.cartan.at(bd.index_of(m), i), [&] {
          return make_witness(id, "regular-column specialization hits the own Cartan",
                              {lhs.rows[i], lhs.cols[j]},
                              ll_str(bd.cartan.at(bd.index_of(m), i)), ll_str(val));
        });
      }
      if (bd.regular[i]) {
        Partition m = mullineux(bd, bd.partitions[i]);
        rec.expect(val == cj.cartan.at(j, cj.index_of(m)), [&] {
          return make_witness(id, "regular-row specialization hits the conjugate Cartan",
                              {lhs.rows[i], lhs.cols[j]},
                              ll_str(cj.cartan.at(j, cj.index_of(m))), ll_str(val));
        });
      }
    }
}

// ---------------------------------------------------------------------------
// chain-termination: the runner-swap chain reaches a separated core.
// ---------------------------------------------------------------------------

void check_chain_termination(Rec& rec, const BlockId& id, const SweepConfig&) {
  auto chain = chain_to_rouquier(id);
  rec.expect(static_cast<int>(chain.size()) <= 20 * id.e * 2, [&] {
    return make_witness(id, "chain length within the step bound", {},
                        ll_str(20 * id.e * 2), ll_str(chain.size()));
  });
  BlockId cur = id;
  for (const PairInfo& step : chain) {
    rec.expect(step.c == cur, [&] {
      return make_witness(id, "chain steps compose", {step.c.core}, cur.core.str(),
                          step.c.core.str());
    });
    rec.expect(step.k >= 1 && step.b.e == id.e && step.b.weight == 2, [&] {
      return make_witness(id, "chain step is a well-formed pair", {step.b.core});
    });
    rec.expect(step.b.core.size() == step.c.core.size() + step.k, [&] {
      return make_witness(id, "chain step raises the core size by k", {step.b.core});
    });
    bool genuine = false;
    for (const auto& q : find_pairs(step.b))
      if (q.c == step.c) genuine = true;
    rec.expect(genuine, [&] {
      return make_witness(id, "chain step is rediscovered by the pair scan", {step.b.core});
    });
    cur = step.b;
  }
  rec.expect(is_rouquier(cur), [&] {
    return make_witness(id, "chain ends at a separated core", {cur.core});
  });
  if (is_rouquier(id))
    rec.expect(chain.empty(),
               [&] { return make_witness(id, "separated blocks have an empty chain"); });
}

// ---------------------------------------------------------------------------

struct CheckDef {
  const char* name;
  void (*fn)(Rec&, const BlockId&, const SweepConfig&);
};

const std::vector<CheckDef>& check_defs() {
  static const std::vector<CheckDef> defs = {
      {"block-structure", check_block_structure},
      {"oracle-equivalence", check_oracle_equivalence},
      {"ac-closed-form", check_ac_closed_form},
      {"mullineux", check_mullineux},
      {"fock-identities", check_fock_identities},
      {"jantzen-cross-p", check_jantzen_cross_p},
      {"runner-insertion", check_runner_insertion},
      {"pair-suite", check_pair_suite},
      {"structure-bounds", check_structure_bounds},
      {"chain-termination", check_chain_termination},
  };
  return defs;
}

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : check_defs()) v.push_back(d.name);
    return v;
  }();
  return names;
}

void validate_config(const SweepConfig& cfg) {
  require(!cfg.e_range.empty(), errc::invalid_argument, "e_range must not be empty");
  for (int e : cfg.e_range)
    require(e >= 2, errc::invalid_argument, "e must be at least 2");
  require(cfg.max_core_size >= 0, errc::invalid_argument, "max_core_size must be non-negative");
  for (long long p : cfg.p_values) {
    if (p == 2)
      fail(errc::invalid_argument,
           "p = 2 is not supported: the weight-2 closed formulas and the sum-formula "
           "reconstruction require p = 0 or an odd prime");
    require(p == 0 || is_odd_prime(p), errc::invalid_argument,
            "p values must be 0 or odd primes");
  }
  for (const std::string& c : cfg.checks) {
    bool known = false;
    for (const auto& name : all_check_names())
      if (name == c) known = true;
    if (!known) {
      std::string msg = "unknown check '" + c + "'; valid checks:";
      for (const auto& name : all_check_names()) msg += " " + name;
      fail(errc::invalid_argument, msg);
    }
  }
  require(cfg.threads >= 0, errc::invalid_argument, "threads must be non-negative");
}

std::vector<BlockId> sweep_blocks(const SweepConfig& cfg) {
  validate_config(cfg);
  std::vector<BlockId> out;
  for (int e : cfg.e_range)
    for (int m = 0; m <= cfg.max_core_size; ++m)
      for (const Partition& c : partitions_of(m))
        if (is_e_core(c, e)) out.push_back({e, c, 2});
  return out;
}

VerificationReport run_verification(const SweepConfig& cfg) {
  validate_config(cfg);
  const auto t_start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.config = cfg;
  rep.blocks = sweep_blocks(cfg);

  std::vector<CheckDef> sel;
  if (cfg.checks.empty())
    sel = check_defs();
  else {
    std::set<std::string> want(cfg.checks.begin(), cfg.checks.end());
    for (const auto& d : check_defs())
      if (want.count(d.name)) sel.push_back(d);
  }
  const int nb = static_cast<int>(rep.blocks.size());
  const int nc = static_cast<int>(sel.size());
  rep.results.resize(static_cast<size_t>(nb) * nc);

  int threads = cfg.threads;
  if (threads == 0)
    if (const char* env = std::getenv("W2BLOCKS_THREADS")) threads = std::atoi(env);
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, nb));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int bi = next.fetch_add(1);
      if (bi >= nb) return;
      for (int ci = 0; ci < nc; ++ci) {
        CheckResult& r = rep.results[static_cast<size_t>(ci) * nb + bi];
        r.check = sel[ci].name;
        r.block = rep.blocks[bi];
        Rec rec{r};
        const auto t0 = std::chrono::steady_clock::now();
        try {
          sel[ci].fn(rec, rep.blocks[bi], cfg);
        } catch (const std::exception& ex) {
          rec.expect(false, [&] {
            return make_witness(rep.blocks[bi], std::string("exception: ") + ex.what());
          });
        }
        r.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (int ci = 0; ci < nc; ++ci) {
    CheckSummary s;
    s.check = sel[ci].name;
    for (int bi = 0; bi < nb; ++bi) {
      const CheckResult& r = rep.results[static_cast<size_t>(ci) * nb + bi];
      (r.passed ? s.blocks_passed : s.blocks_failed) += 1;
      s.assertions += r.assertions;
      s.wall_ms += r.wall_ms;
      if (!r.passed && s.witness.is_null()) s.witness = r.witness;
    }
    if (s.blocks_failed > 0) rep.all_passed = false;
    rep.summary.push_back(std::move(s));
  }
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
          .count();
  return rep;
}

ojson json_config(const SweepConfig& cfg) {
  ojson j;
  j["e_range"] = cfg.e_range;
  j["max_core_size"] = cfg.max_core_size;
  j["p_values"] = cfg.p_values;
  j["checks"] = cfg.checks.empty() ? all_check_names() : cfg.checks;
  j["threads"] = cfg.threads;
  return j;
}

SweepConfig config_from_json(const ojson& j) {
  require(j.is_object(), errc::invalid_argument, "config must be a JSON object");
  SweepConfig cfg;
  for (const auto& [key, val] : j.items()) {
    if (key == "e_range")
      cfg.e_range = val.get<std::vector<int>>();
    else if (key == "max_core_size")
      cfg.max_core_size = val.get<int>();
    else if (key == "p_values")
      cfg.p_values = val.get<std::vector<long long>>();
    else if (key == "checks")
      cfg.checks = val.get<std::vector<std::string>>();
    else if (key == "threads")
      cfg.threads = val.get<int>();
    else
      fail(errc::invalid_argument, "unknown config key '" + key + "'");
  }
  validate_config(cfg);
  return cfg;
}

namespace {
double round_ms(double x) { return std::round(x * 1000.0) / 1000.0; }
}  // namespace

ojson json_report(const VerificationReport& rep) {
  ojson j;
  j["config"] = json_config(rep.config);
  ojson blocks = ojson::array();
  for (const auto& b : rep.blocks) blocks.push_back(json_block_id(b));
  j["blocks"] = std::move(blocks);
  ojson summary = ojson::array();
  for (const auto& s : rep.summary) {
    ojson row;
    row["check"] = s.check;
    row["blocks_passed"] = s.blocks_passed;
    row["blocks_failed"] = s.blocks_failed;
    row["assertions"] = s.assertions;
    row["wall_ms"] = round_ms(s.wall_ms);
    row["witness"] = s.witness;
    summary.push_back(std::move(row));
  }
  j["summary"] = std::move(summary);
  ojson results = ojson::array();
  for (const auto& r : rep.results) {
    ojson row;
    row["check"] = r.check;
    row["block"] = json_block_id(r.block);
    row["status"] = r.passed ? "pass" : "fail";
    row["witness"] = r.witness;
    results.push_back(std::move(row));
  }
  j["results"] = std::move(results);
  j["all_passed"] = rep.all_passed;
  j["wall_ms"] = round_ms(rep.wall_ms);
  return j;
}

std::string text_report(const VerificationReport& rep) {
  std::ostringstream os;
  os << "sweep: e in {";
  for (size_t i = 0; i < rep.config.e_range.size(); ++i)
    os << (i ? "," : "") << rep.config.e_range[i];
  os << "}, |core| <= " << rep.config.max_core_size << ", p in {";
  for (size_t i = 0; i < rep.config.p_values.size(); ++i)
    os << (i ? "," : "") << rep.config.p_values[i];
  os << "}, blocks: " << rep.blocks.size() << "\n";
  os << "check                 blocks  failed   assertions\n";
  for (const auto& s : rep.summary) {
    os << s.check << std::string(s.check.size() < 22 ? 22 - s.check.size() : 1, ' ');
    std::string bp = std::to_string(s.blocks_passed + s.blocks_failed);
    os << bp << std::string(bp.size() < 8 ? 8 - bp.size() : 1, ' ');
    std::string bf = std::to_string(s.blocks_failed);
    os << bf << std::string(bf.size() < 9 ? 9 - bf.size() : 1, ' ');
    os << s.assertions << "\n";
  }
  for (const auto& s : rep.summary)
    if (!s.witness.is_null())
      os << "first failure (" << s.check << "): " << s.witness.dump() << "\n";
  os << "result: " << (rep.all_passed ? "PASS" : "FAIL") << " ("
     << round_ms(rep.wall_ms) << " ms)\n";
  return os.str();
}

}  // namespace w2b
