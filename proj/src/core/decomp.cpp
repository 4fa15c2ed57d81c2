#include "decomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

#include "error.hpp"

namespace w2b {

int BlockData::index_of(const Partition& la) const {
  auto it = index_.find(la);
  require(it != index_.end(), errc::not_found, la.str() + " is not in the block");
  return it->second;
}

namespace {

std::mutex cache_mutex;
std::map<BlockId, BlockPtr>& cache() {
  static std::map<BlockId, BlockPtr> c;
  return c;
}

std::string class_key(const Weight2Label& lab) {
  if (lab.partial == 0) return *lab.colour == Colour::black ? "d0b" : "d0w";
  return "d" + std::to_string(lab.partial);
}

}  // namespace

BlockPtr analyze_block(const BlockId& b) {
  validate_block(b);
  require(b.weight == 2, errc::unsupported, "block analysis is implemented for weight 2");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache().find(b); it != cache().end()) return it->second;
  }

  auto bd = std::make_shared<BlockData>();
  bd->id = b;
  bd->partitions = enumerate_block(b);
  const int n = static_cast<int>(bd->partitions.size());
  const int frame = default_frame(b);
  const int e = b.e;

  for (int i = 0; i < n; ++i) {
    const Partition& la = bd->partitions[i];
    bd->index_[la] = i;
    bd->displays.push_back(display(la, e, frame));
    bd->labels.push_back(classify_at(la, b, frame));
    bd->sign.push_back(relative_sign(la, e));
    bd->regular.push_back(is_e_regular(la, e));
    bd->restricted.push_back(is_e_restricted(la, e));
  }

  // Classes in the order d0b, d0w, d1, ..., d(e-1); members inherit the
  // descending lexicographic order of the block.
  bd->classes.classes.emplace_back("d0b", std::vector<int>{});
  bd->classes.classes.emplace_back("d0w", std::vector<int>{});
  for (int t = 1; t < e; ++t)
    bd->classes.classes.emplace_back("d" + std::to_string(t), std::vector<int>{});
  std::map<std::string, int> class_index;
  for (int c = 0; c < static_cast<int>(bd->classes.classes.size()); ++c)
    class_index[bd->classes.classes[c].first] = c;
  bd->classes.position.resize(n);
  for (int i = 0; i < n; ++i) {
    int c = class_index.at(class_key(bd->labels[i]));
    auto& members = bd->classes.classes[c].second;
    bd->classes.position[i] = {c, static_cast<int>(members.size())};
    members.push_back(i);
  }

  // Each class is totally ordered by dominance with the unique e-singular
  // member at the bottom; the closed formula below leans on both facts.
  bd->class_successor.assign(n, -1);
  for (const auto& [key, members] : bd->classes.classes) {
    int sz = static_cast<int>(members.size());
    for (int t = 0; t + 1 < sz; ++t)
      require(strictly_dominates(bd->partitions[members[t]], bd->partitions[members[t + 1]]),
              errc::internal, "class members must form a dominance chain");
    for (int t = 0; t < sz; ++t) {
      bool last = t + 1 == sz;
      require(bd->regular[members[t]] == !last, errc::internal,
              "exactly the least class member must be e-singular");
      if (!last) bd->class_successor[members[t]] = members[t + 1];
    }
  }

  bd->dv = LabeledMatrix<VPoly>(bd->partitions, bd->partitions);
  for (int j = 0; j < n; ++j) {
    bd->dv.at(j, j) = VPoly(1);
    const Partition& mu = bd->partitions[j];
    bool mu_regular = bd->regular[j];
    int succ = bd->class_successor[j];
    for (int i = j + 1; i < n; ++i) {
      const Partition& la = bd->partitions[i];
      if (mu_regular && i == succ) {
        bd->dv.at(i, j) = VPoly::v(2);
        continue;
      }
      if (!strictly_dominates(mu, la)) continue;
      if (std::abs(bd->labels[i].partial - bd->labels[j].partial) != 1) continue;
      if (!mu_regular || strictly_dominates(la, bd->partitions[succ]))
        bd->dv.at(i, j) = VPoly::v();
    }
  }

  bd->d = LabeledMatrix<long long>(bd->partitions, bd->partitions);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bd->d.at(i, j) = bd->dv.at(i, j).eval(1);
  bd->d_inverse = invert_unitriangular(bd->d);
  bd->cartan = matmul(transpose(bd->d), bd->d);

  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = cache().emplace(b, bd);
  return it->second;
}

int partition_of_label(const BlockData& bd, int a, int b) {
  for (int i = 0; i < static_cast<int>(bd.labels.size()); ++i)
    if (bd.labels[i].a == a && bd.labels[i].b == b) return i;
  fail(errc::not_found, "no partition in the block carries label [" + std::to_string(a) + "," +
                            std::to_string(b) + "]");
}

Partition mullineux(const BlockData& bd, const Partition& la) {
  int i = bd.index_of(la);
  require(bd.regular[i], errc::invalid_argument, la.str() + " is not e-regular");
  return bd.partitions[bd.class_successor[i]].conjugate();
}

Partition mullineux_by_label(const BlockData& bd, const BlockData& conj, const Partition& la) {
  require(conj.id == bd.id.conjugate(), errc::invalid_argument,
          "second argument must be the conjugate block");
  int i = bd.index_of(la);
  require(bd.regular[i], errc::invalid_argument, la.str() + " is not e-regular");
  auto [a, b] = mullineux_label_map(bd.id.e, bd.labels[i].a, bd.labels[i].b);
  return conj.partitions[partition_of_label(conj, a, b)];
}

LabeledMatrix<VPoly> e_poly_matrix(const BlockData& bd, const BlockData& conj) {
  require(conj.id == bd.id.conjugate(), errc::invalid_argument,
          "second argument must be the conjugate block");
  auto f = invert_unitriangular(conj.dv);
  int n = static_cast<int>(bd.partitions.size());
  std::vector<int> cidx(n);
  for (int i = 0; i < n; ++i) cidx[i] = conj.index_of(bd.partitions[i].conjugate());
  LabeledMatrix<VPoly> ev(bd.partitions, bd.partitions);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ev.at(i, j) = f.at(cidx[i], cidx[j]).negate_variable();
  return ev;
}

std::vector<std::pair<Partition, Partition>> ext_quiver(const BlockData& bd) {
  std::vector<std::pair<Partition, Partition>> edges;
  const VPoly v = VPoly::v();
  int n = static_cast<int>(bd.partitions.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bd.dv.at(j, i) == v || bd.dv.at(i, j) == v)
        edges.emplace_back(bd.partitions[i], bd.partitions[j]);
  return edges;
}

std::vector<std::vector<Partition>> weyl_layers(const BlockData& bd, const Partition& la) {
  int i = bd.index_of(la);
  std::vector<std::vector<Partition>> layers(3);
  for (int j = 0; j < static_cast<int>(bd.partitions.size()); ++j) {
    const VPoly& p = bd.dv.at(i, j);
    if (p.is_zero()) continue;
    layers[p.degree()].push_back(bd.partitions[j]);
  }
  return layers;
}

std::vector<int> composition_stats(const BlockData& bd, const Partition& la) {
  int i = bd.index_of(la);
  std::vector<int> counts(bd.id.e, 0);
  for (int j = 0; j < static_cast<int>(bd.partitions.size()); ++j)
    if (bd.d.at(i, j) != 0) ++counts[bd.labels[j].partial];
  return counts;
}

}  // namespace w2b
