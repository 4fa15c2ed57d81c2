#include "w2blocks/w2blocks.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "alvis.hpp"
#include "decomp.hpp"
#include "error.hpp"
#include "jantzen.hpp"
#include "pairs.hpp"
#include "serialize.hpp"
#include "verify.hpp"

struct w2b_block {
  w2b::BlockPtr data;
};

namespace {

using namespace w2b;

thread_local std::string g_last_error;

w2b_status status_of(errc c) {
  switch (c) {
    case errc::invalid_argument: return W2B_ERR_INVALID_ARGUMENT;
    case errc::not_found: return W2B_ERR_NOT_FOUND;
    case errc::unsupported: return W2B_ERR_UNSUPPORTED;
    case errc::verification_failure: return W2B_ERR_VERIFICATION;
    case errc::internal: return W2B_ERR_INTERNAL;
  }
  return W2B_ERR_INTERNAL;
}

template <class F>
w2b_status guarded(F&& f) {
  try {
    return f();
  } catch (const error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return W2B_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return W2B_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return W2B_ERR_INTERNAL;
  }
}

void set_out(char** out, const std::string& s) {
  require(out != nullptr, errc::invalid_argument, "output pointer is null");
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  *out = buf;
}

Partition parse_partition(const char* s) {
  require(s != nullptr, errc::invalid_argument, "partition literal is null");
  std::vector<int> parts;
  std::string tok;
  const std::string in(s);
  size_t pos = 0;
  bool any = false;
  while (pos <= in.size()) {
    size_t comma = in.find(',', pos);
    if (comma == std::string::npos) comma = in.size();
    tok = in.substr(pos, comma - pos);
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    if (!tok.empty()) {
      any = true;
      for (char c : tok)
        require(std::isdigit(static_cast<unsigned char>(c)), errc::invalid_argument,
                "bad partition literal '" + in + "': part '" + tok + "' is not a number");
      require(tok.size() <= 9, errc::invalid_argument,
              "bad partition literal '" + in + "': part '" + tok + "' is too large");
      int v = std::atoi(tok.c_str());
      require(v >= 1, errc::invalid_argument,
              "bad partition literal '" + in + "': parts must be positive");
      require(parts.empty() || parts.back() >= v, errc::invalid_argument,
              "bad partition literal '" + in + "': parts must be weakly decreasing");
      parts.push_back(v);
    } else {
      require(!any && comma == in.size(), errc::invalid_argument,
              "bad partition literal '" + in + "': empty part");
    }
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string format_or_text(const char* format) { return format ? format : "text"; }

[[noreturn]] void bad_format(const std::string& fmt, const char* allowed) {
  fail(errc::invalid_argument,
       "unsupported format '" + fmt + "' here (allowed: " + allowed + ")");
}

std::string render_matrix(const LabeledMatrix<long long>& m, const std::string& fmt) {
  if (fmt == "json") return json_matrix(m).dump();
  if (fmt == "csv") return csv_matrix(m);
  if (fmt == "text") return text_matrix(m);
  bad_format(fmt, "json, csv, text");
}

std::string render_matrix(const LabeledMatrix<VPoly>& m, const std::string& fmt) {
  if (fmt == "json") return json_matrix(m).dump();
  if (fmt == "csv") return csv_matrix(m);
  if (fmt == "text") return text_matrix(m);
  bad_format(fmt, "json, csv, text");
}

const BlockData& deref(const w2b_block* b) {
  require(b != nullptr && b->data != nullptr, errc::invalid_argument, "block handle is null");
  return *b->data;
}

int member_index(const BlockData& bd, const char* partition) {
  return bd.index_of(parse_partition(partition));
}

}  // namespace

extern "C" {

const char* w2b_status_name(w2b_status s) {
  switch (s) {
    case W2B_OK: return "ok";
    case W2B_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case W2B_ERR_NOT_FOUND: return "not_found";
    case W2B_ERR_UNSUPPORTED: return "unsupported";
    case W2B_ERR_VERIFICATION: return "verification_failure";
    case W2B_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

const char* w2b_last_error(void) { return g_last_error.c_str(); }

void w2b_string_free(char* s) { std::free(s); }

w2b_status w2b_partition_core(const char* partition, int e, const char* format, char** out) {
  return guarded([&]() -> w2b_status {
    Partition la = parse_partition(partition);
    auto [core, weight] = e_core_and_weight(la, e);
    const std::string fmt = format_or_text(format);
    if (fmt == "json") {
      ojson j;
      j["core"] = json_partition(core);
      j["weight"] = weight;
      set_out(out, j.dump());
    } else if (fmt == "text") {
      set_out(out, bracket_str(core) + " weight " + std::to_string(weight));
    } else {
      bad_format(fmt, "json, text");
    }
    return W2B_OK;
  });
}

w2b_status w2b_partition_weight(const char* partition, int e, int* out_weight) {
  return guarded([&]() -> w2b_status {
    Partition la = parse_partition(partition);
    auto [core, weight] = e_core_and_weight(la, e);
    require(out_weight != nullptr, errc::invalid_argument, "output pointer is null");
    *out_weight = weight;
    return W2B_OK;
  });
}

w2b_status w2b_partition_sign(const char* partition, int e, int* out_sign) {
  return guarded([&]() -> w2b_status {
    int s = relative_sign(parse_partition(partition), e);
    require(out_sign != nullptr, errc::invalid_argument, "output pointer is null");
    *out_sign = s;
    return W2B_OK;
  });
}

w2b_status w2b_partition_conjugate(const char* partition, char** out) {
  return guarded([&]() -> w2b_status {
    set_out(out, bracket_str(parse_partition(partition).conjugate()));
    return W2B_OK;
  });
}

w2b_status w2b_block_open(int e, const char* core, w2b_block** out) {
  return guarded([&]() -> w2b_status {
    require(out != nullptr, errc::invalid_argument, "output pointer is null");
    BlockId id{e, parse_partition(core), 2};
    BlockPtr data = analyze_block(id);
    *out = new w2b_block{std::move(data)};
    return W2B_OK;
  });
}

w2b_status w2b_block_open_of(const char* partition, int e, w2b_block** out) {
  return guarded([&]() -> w2b_status {
    require(out != nullptr, errc::invalid_argument, "output pointer is null");
    BlockPtr data = analyze_block(block_of(parse_partition(partition), e));
    *out = new w2b_block{std::move(data)};
    return W2B_OK;
  });
}

void w2b_block_close(w2b_block* b) { delete b; }

w2b_status w2b_block_info(const w2b_block* b, char** out_json) {
  return guarded([&]() -> w2b_status {
    set_out(out_json, json_block_id(deref(b).id).dump());
    return W2B_OK;
  });
}

w2b_status w2b_block_partitions(const w2b_block* b, const char* format, char** out) {
  return guarded([&]() -> w2b_status {
    const BlockData& bd = deref(b);
    const std::string fmt = format_or_text(format);
    if (fmt == "json") {
      ojson j;
      j["block"] = json_block_id(bd.id);
      ojson arr = ojson::array();
      for (const auto& la : bd.partitions) arr.push_back(json_partition(la));
      j["partitions"] = std::move(arr);
      set_out(out, j.dump());
    } else if (fmt == "text") {
      std::string s;
      for (const auto& la : bd.partitions) s += bracket_str(la) + "\n";
      set_out(out, s);
    } else {
      bad_format(fmt, "json, text");
    }
    return W2B_OK;
  });
}

w2b_status w2b_block_label(const w2b_block* b, const char* partition, char** out_json) {
  return guarded([&]() -> w2b_status {
    const BlockData& bd = deref(b);
    set_out(out_json, json_label(bd.labels[member_index(bd, partition)]).dump());
    return W2B_OK;
  });
}

w2b_status w2b_block_mullineux(const w2b_block* b, const char* partition, char** out) {
  return guarded([&]() -> w2b_status {
    const BlockData& bd = deref(b);
    set_out(out, bracket_str(mullineux(bd, parse_partition(partition))));
    return W2B_OK;
  });
}

w2b_status w2b_block_matrix(const w2b_block* b, const char* kind, long long p,
                            const char* format, char** out) {
  return guarded([&]() -> w2b_status {
    const BlockData& bd = deref(b);
    require(kind != nullptr, errc::invalid_argument, "matrix kind is null");
    const std::string k(kind);
    const std::string fmt = format_or_text(format);
    require(p == -1 || k == "d", errc::invalid_argument,
            "a characteristic only applies to the integer decomposition matrix");
    if (k == "d") {
      if (p == -1) {
        set_out(out, render_matrix(bd.d, fmt));
      } else {
        set_out(out, render_matrix(oracle_decomposition_matrix(bd.id, p), fmt));
      }
    } else if (k == "dv") {
      set_out(out, render_matrix(bd.dv, fmt));
    } else if (k == "inverse") {
      set_out(out, render_matrix(bd.d_inverse, fmt));
    } else if (k == "cartan") {
      set_out(out, render_matrix(bd.cartan, fmt));
    } else if (k == "ac") {
      auto conj = analyze_block(bd.id.conjugate());
      auto m = ac_matrix(bd, *conj);
      if (fmt == "json")
        set_out(out, json_ac_matrix(m, bd.id, conj->id).dump());
      else
        set_out(out, render_matrix(m, fmt));
    } else {
      fail(errc::invalid_argument,
           "unknown matrix kind '" + k + "' (d, dv, inverse, cartan, ac)");
    }
    return W2B_OK;
  });
}

w2b_status w2b_block_ext_quiver(const w2b_block* b, const char* format, char** out) {
  return guarded([&]() -> w2b_status {
    const BlockData& bd = deref(b);
    auto edges = ext_quiver(bd);
    const std::string fmt = format_or_text(format);
    if (fmt == "json") {
      set_out(out, json_quiver(bd.partitions, edges).dump());
    } else if (fmt == "dot") {
      set_out(out, dot_quiver(bd.partitions, edges));
    } else if (fmt == "text") {
      std::string s;
      for (const auto& [x, y] : edges) s += bracket_str(x) + " -- " + bracket_str(y) + "\n";
      set_out(out, s);
    } else {
      bad_format(fmt, "json, text, dot");
    }
    return W2B_OK;
  });
}

w2b_status w2b_block_layers(const w2b_block* b, const char* partition, const char* format,
                            char** out) {
  return guarded([&]() -> w2b_status {
    const BlockData& bd = deref(b);
    Partition la = parse_partition(partition);
    auto layers = weyl_layers(bd, la);
    const std::string fmt = format_or_text(format);
    if (fmt == "json") {
      set_out(out, json_layers(la, layers).dump());
    } else if (fmt == "text") {
      std::string s;
      for (size_t k = 0; k < layers.size(); ++k) {
        s += std::to_string(k) + ":";
        for (const auto& mu : layers[k]) s += " " + bracket_str(mu);
        s += "\n";
      }
      set_out(out, s);
    } else {
      bad_format(fmt, "json, text");
    }
    return W2B_OK;
  });
}

w2b_status w2b_block_richards(const w2b_block* b, const char* format, char** out) {
  return guarded([&]() -> w2b_status {
    const BlockData& bd = deref(b);
    const std::string fmt = format_or_text(format);
    if (fmt == "json") {
      set_out(out, json_classes(bd).dump());
    } else if (fmt == "text") {
      std::string s;
      for (const auto& [key, members] : bd.classes.classes) {
        s += key + ":";
        for (int i : members) s += " " + bracket_str(bd.partitions[i]);
        s += "\n";
      }
      set_out(out, s);
    } else {
      bad_format(fmt, "json, text");
    }
    return W2B_OK;
  });
}

namespace {

std::string text_pair(const PairInfo& pr) {
  std::string s = bracket_str(pr.b.core) + " <- " + bracket_str(pr.c.core) + " (i=" +
                  std::to_string(pr.i) + ", k=" + std::to_string(pr.k) +
                  ", frame=" + std::to_string(pr.frame) + ")";
  if (pr.k == 1) {
    auto bb = analyze_block(pr.b);
    auto cc = analyze_block(pr.c);
    Exceptional eb = exceptional_b(pr), ec = exceptional_c(pr);
    s += "\n  exceptional: " + bracket_str(bb->partitions[eb.alpha]) + " " +
         bracket_str(bb->partitions[eb.beta]) + " " + bracket_str(bb->partitions[eb.gamma]) +
         " <-> " + bracket_str(cc->partitions[ec.alpha]) + " " +
         bracket_str(cc->partitions[ec.beta]) + " " + bracket_str(cc->partitions[ec.gamma]);
  }
  return s + "\n";
}

}  // namespace

w2b_status w2b_block_pairs(const w2b_block* b, const char* format, char** out) {
  return guarded([&]() -> w2b_status {
    const BlockData& bd = deref(b);
    auto pairs = find_pairs(bd.id);
    const std::string fmt = format_or_text(format);
    if (fmt == "json") {
      ojson arr = ojson::array();
      for (const auto& pr : pairs) arr.push_back(json_pair(pr));
      set_out(out, arr.dump());
    } else if (fmt == "text") {
      std::string s;
      for (const auto& pr : pairs) s += text_pair(pr);
      set_out(out, s);
    } else {
      bad_format(fmt, "json, text");
    }
    return W2B_OK;
  });
}

w2b_status w2b_block_chain(const w2b_block* b, const char* format, char** out) {
  return guarded([&]() -> w2b_status {
    const BlockData& bd = deref(b);
    auto chain = chain_to_rouquier(bd.id);
    const std::string fmt = format_or_text(format);
    if (fmt == "json") {
      ojson arr = ojson::array();
      for (const auto& pr : chain) arr.push_back(json_pair(pr));
      set_out(out, arr.dump());
    } else if (fmt == "text") {
      std::string s;
      for (const auto& pr : chain) s += text_pair(pr);
      set_out(out, s);
    } else {
      bad_format(fmt, "json, text");
    }
    return W2B_OK;
  });
}

w2b_status w2b_verify(const char* config_json, const char* format, char** out_report,
                      int* out_all_passed) {
  return guarded([&]() -> w2b_status {
    SweepConfig cfg;
    if (config_json != nullptr && *config_json != '\0') {
      ojson j = ojson::parse(config_json, nullptr, false);
      require(!j.is_discarded(), errc::invalid_argument, "config is not valid JSON");
      cfg = config_from_json(j);
    }
    VerificationReport rep = run_verification(cfg);
    const std::string fmt = format_or_text(format);
    if (fmt == "json")
      set_out(out_report, json_report(rep).dump());
    else if (fmt == "text")
      set_out(out_report, text_report(rep));
    else
      bad_format(fmt, "json, text");
    if (out_all_passed) *out_all_passed = rep.all_passed ? 1 : 0;
    if (!rep.all_passed) {
      g_last_error = "verification failed; see the report for the first counterexample";
      return W2B_ERR_VERIFICATION;
    }
    return W2B_OK;
  });
}

}  // extern "C"
