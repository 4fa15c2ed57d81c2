#include "serialize.hpp"

#include <algorithm>
#include <sstream>

namespace w2b {

std::string partition_token(const Partition& la) {
  std::string s;
  for (int i = 0; i < la.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(la.parts()[i]);
  }
  return s;
}

std::string bracket_str(const Partition& la) { return "[" + partition_token(la) + "]"; }

ojson json_partition(const Partition& la) { return ojson(la.parts()); }

ojson json_block_id(const BlockId& b) {
  ojson j;
  j["e"] = b.e;
  j["core"] = json_partition(b.core);
  j["weight"] = b.weight;
  return j;
}

ojson json_display(const AbacusDisplay& d) {
  ojson j;
  j["e"] = d.e;
  j["beads"] = d.beads;
  return j;
}

ojson json_label(const Weight2Label& l) {
  ojson j;
  j["a"] = l.a;
  j["b"] = l.b;
  j["partial"] = l.partial;
  j["eps"] = l.eps;
  if (l.colour) j["colour"] = *l.colour == Colour::black ? "black" : "white";
  return j;
}

ojson json_vpoly(const VPoly& p) {
  std::vector<long long> c;
  for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k));
  if (p.is_zero()) c.clear();
  return ojson(c);
}

ojson json_classes(const BlockData& bd) {
  ojson j;
  for (const auto& [key, members] : bd.classes.classes) {
    ojson arr = ojson::array();
    for (int idx : members) arr.push_back(json_partition(bd.partitions[idx]));
    j[key] = arr;
  }
  return j;
}

namespace {

ojson index_arrays(const std::vector<Partition>& ps) {
  ojson arr = ojson::array();
  for (const auto& la : ps) arr.push_back(json_partition(la));
  return arr;
}

}  // namespace

ojson json_matrix(const LabeledMatrix<long long>& m) {
  ojson j;
  j["rows"] = index_arrays(m.rows);
  j["cols"] = index_arrays(m.cols);
  j["kind"] = "int";
  ojson entries = ojson::array();
  for (int i = 0; i < m.n_rows(); ++i) {
    ojson row = ojson::array();
    for (int k = 0; k < m.n_cols(); ++k) row.push_back(m.at(i, k));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

ojson json_matrix(const LabeledMatrix<VPoly>& m) {
  ojson j;
  j["rows"] = index_arrays(m.rows);
  j["cols"] = index_arrays(m.cols);
  j["kind"] = "vpoly";
  ojson entries = ojson::array();
  for (int i = 0; i < m.n_rows(); ++i) {
    ojson row = ojson::array();
    for (int k = 0; k < m.n_cols(); ++k) row.push_back(json_vpoly(m.at(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

ojson json_ac_matrix(const LabeledMatrix<long long>& m, const BlockId& rows_block,
                     const BlockId& cols_block) {
  ojson j;
  j["rows_block"] = json_block_id(rows_block);
  j["cols_block"] = json_block_id(cols_block);
  ojson body = json_matrix(m);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

ojson json_quiver(const std::vector<Partition>& vertices,
                  const std::vector<std::pair<Partition, Partition>>& edges) {
  ojson j;
  j["vertices"] = index_arrays(vertices);
  ojson es = ojson::array();
  for (const auto& [x, y] : edges) es.push_back(ojson{json_partition(x), json_partition(y)});
  j["edges"] = std::move(es);
  return j;
}

ojson json_layers(const Partition& la, const std::vector<std::vector<Partition>>& layers) {
  ojson j;
  j["partition"] = json_partition(la);
  ojson ls = ojson::array();
  for (const auto& layer : layers) ls.push_back(index_arrays(layer));
  j["layers"] = std::move(ls);
  return j;
}

ojson json_pair(const PairInfo& pr) {
  ojson j;
  j["b"] = json_block_id(pr.b);
  j["c"] = json_block_id(pr.c);
  j["i"] = pr.i;
  j["k"] = pr.k;
  j["frame"] = pr.frame;
  if (pr.k == 1) {
    auto bb = analyze_block(pr.b);
    auto cc = analyze_block(pr.c);
    Exceptional eb = exceptional_b(pr), ec = exceptional_c(pr);
    auto triple = [](const BlockData& bd, const Exceptional& t) {
      return index_arrays(
          {bd.partitions[t.alpha], bd.partitions[t.beta], bd.partitions[t.gamma]});
    };
    j["exceptional"] = ojson{{"b", triple(*bb, eb)}, {"c", triple(*cc, ec)}};
  }
  return j;
}

namespace {

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

template <class T, class Fmt>
std::string csv_matrix_impl(const LabeledMatrix<T>& m, Fmt fmt) {
  std::string out = csv_quote("");
  for (const auto& c : m.cols) out += "," + csv_quote(partition_token(c));
  out += "\n";
  for (int i = 0; i < m.n_rows(); ++i) {
    out += csv_quote(partition_token(m.rows[i]));
    for (int k = 0; k < m.n_cols(); ++k) out += "," + fmt(m.at(i, k));
    out += "\n";
  }
  return out;
}

template <class T, class Fmt>
std::string text_matrix_impl(const LabeledMatrix<T>& m, Fmt fmt) {
  const int nr = m.n_rows(), nc = m.n_cols();
  std::vector<std::string> rlab(nr);
  size_t rw = 0;
  for (int i = 0; i < nr; ++i) {
    rlab[i] = bracket_str(m.rows[i]);
    rw = std::max(rw, rlab[i].size());
  }
  std::vector<std::vector<std::string>> cell(nr, std::vector<std::string>(nc));
  std::vector<size_t> cw(nc);
  for (int k = 0; k < nc; ++k) cw[k] = bracket_str(m.cols[k]).size();
  for (int i = 0; i < nr; ++i)
    for (int k = 0; k < nc; ++k) {
      cell[i][k] = fmt(m.at(i, k));
      cw[k] = std::max(cw[k], cell[i][k].size());
    }
  std::ostringstream os;
  os << std::string(rw, ' ');
  for (int k = 0; k < nc; ++k) {
    std::string h = bracket_str(m.cols[k]);
    os << "  " << std::string(cw[k] - h.size(), ' ') << h;
  }
  os << "\n";
  for (int i = 0; i < nr; ++i) {
    os << rlab[i] << std::string(rw - rlab[i].size(), ' ');
    for (int k = 0; k < nc; ++k)
      os << "  " << std::string(cw[k] - cell[i][k].size(), ' ') << cell[i][k];
    os << "\n";
  }
  return os.str();
}

std::string fmt_int(long long x) { return std::to_string(x); }
std::string fmt_poly(const VPoly& p) { return p.str(); }

}  // namespace

std::string csv_matrix(const LabeledMatrix<long long>& m) { return csv_matrix_impl(m, fmt_int); }
std::string csv_matrix(const LabeledMatrix<VPoly>& m) { return csv_matrix_impl(m, fmt_poly); }
std::string text_matrix(const LabeledMatrix<long long>& m) {
  return text_matrix_impl(m, fmt_int);
}
std::string text_matrix(const LabeledMatrix<VPoly>& m) { return text_matrix_impl(m, fmt_poly); }

std::string dot_quiver(const std::vector<Partition>& vertices,
                       const std::vector<std::pair<Partition, Partition>>& edges) {
  std::string out = "graph ext_quiver {\n";
  for (const auto& v : vertices) out += "  \"" + partition_token(v) + "\";\n";
  for (const auto& [x, y] : edges)
    out += "  \"" + partition_token(x) + "\" -- \"" + partition_token(y) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace w2b
