// Command-line front end.  Everything substantive happens behind the C API;
// this file only routes arguments and bytes.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "w2blocks/w2blocks.h"

namespace {

int report_error(w2b_status st) {
  std::fprintf(stderr, "w2blocks: %s: %s\n", w2b_status_name(st), w2b_last_error());
  return st == W2B_ERR_VERIFICATION ? 1 : 2;
}

/// Emit `text` (normalized to end in a newline) to stdout or --out.
int emit(const std::string& out_path, std::string text) {
  if (!text.empty() && text.back() != '\n') text += '\n';
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    std::fprintf(stderr, "w2blocks: cannot write '%s'\n", out_path.c_str());
    return 2;
  }
  return 0;
}

/// Take ownership of a C-API string result and finish the command.
int finish(const std::string& out_path, w2b_status st, char* result) {
  std::string text = result ? result : "";
  w2b_string_free(result);
  if (st == W2B_OK) return emit(out_path, text);
  // A failed verification still carries its report.
  if (st == W2B_ERR_VERIFICATION && !text.empty()) {
    int rc = emit(out_path, text);
    return rc != 0 ? rc : 1;
  }
  return report_error(st);
}

struct BlockHandle {
  w2b_block* b = nullptr;
  ~BlockHandle() { w2b_block_close(b); }
};

std::string quote_json(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight-2 block computations for general linear groups"};
  app.require_subcommand(1);
  int exit_code = 0;

  // Options shared across leaves (each leaf registers its own copies).
  int e = 2;
  std::string core, partition, format = "text", out_path, config_path;
  long long p = -1;

  auto add_common = [&](CLI::App* cmd, bool with_core) {
    cmd->add_option("--e", e, "quantum characteristic (>= 2)")->capture_default_str();
    if (with_core)
      cmd->add_option("--core", core, "core partition, comma-separated (\"\" = empty)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text", "dot"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  // ---- partition ----
  auto* part_cmd = app.add_subcommand("partition", "invariants of a single partition");
  part_cmd->require_subcommand(1);
  struct PartVerb {
    const char* name;
    const char* help;
    bool needs_core;
  };
  const std::vector<PartVerb> part_verbs = {
      {"core", "e-core and e-weight", false},
      {"weight", "e-weight", false},
      {"sign", "relative sign", false},
      {"conjugate", "conjugate partition", false},
      {"label", "abacus label within its weight-2 block", true},
      {"mullineux", "Mullineux image within its weight-2 block", true},
  };
  for (const auto& verb : part_verbs) {
    auto* cmd = part_cmd->add_subcommand(verb.name, verb.help);
    add_common(cmd, verb.needs_core);
    cmd->add_option("partition", partition, "partition literal, e.g. \"3,1\"")->required();
    std::string name = verb.name;
    bool needs_core = verb.needs_core;
    cmd->callback([&, name, needs_core, cmd] {
      char* result = nullptr;
      w2b_status st = W2B_OK;
      if (name == "core") {
        st = w2b_partition_core(partition.c_str(), e, format.c_str(), &result);
      } else if (name == "weight" || name == "sign") {
        int value = 0;
        st = name == "weight" ? w2b_partition_weight(partition.c_str(), e, &value)
                              : w2b_partition_sign(partition.c_str(), e, &value);
        if (st == W2B_OK) {
          exit_code = emit(out_path, std::to_string(value));
          return;
        }
      } else if (name == "conjugate") {
        st = w2b_partition_conjugate(partition.c_str(), &result);
      } else {
        BlockHandle h;
        st = needs_core && cmd->count("--core")
                 ? w2b_block_open(e, core.c_str(), &h.b)
                 : w2b_block_open_of(partition.c_str(), e, &h.b);
        if (st == W2B_OK)
          st = name == "label" ? w2b_block_label(h.b, partition.c_str(), &result)
                               : w2b_block_mullineux(h.b, partition.c_str(), &result);
      }
      exit_code = finish(out_path, st, result);
    });
  }

  // ---- block ----
  auto* block_cmd = app.add_subcommand("block", "matrices and structure of a weight-2 block");
  block_cmd->require_subcommand(1);
  struct BlockVerb {
    const char* name;
    const char* help;
    const char* kind;  // matrix kind, or "" for non-matrix verbs
  };
  const std::vector<BlockVerb> block_verbs = {
      {"enumerate", "list the block's partitions", ""},
      {"dmatrix", "integer decomposition matrix", "d"},
      {"dmatrix-v", "v-decomposition matrix", "dv"},
      {"inverse", "inverse decomposition matrix", "inverse"},
      {"cartan", "Cartan matrix", "cartan"},
      {"ac", "Alvis-Curtis matrix", "ac"},
      {"ext-quiver", "Ext-quiver of the block", ""},
      {"layers", "radical layers of one Weyl module", ""},
      {"pairs", "[2:k]-pairs below this block", ""},
      {"chain", "shortest pair chain up to a Rouquier block", ""},
  };
  for (const auto& verb : block_verbs) {
    auto* cmd = block_cmd->add_subcommand(verb.name, verb.help);
    add_common(cmd, true);
    std::string name = verb.name;
    std::string kind = verb.kind;
    if (name == "dmatrix")
      cmd->add_option("--p", p,
                      "rebuild via the sum formula in characteristic p (0 = generic)");
    if (name == "layers")
      cmd->add_option("partition", partition, "member of the block")->required();
    cmd->callback([&, name, kind, cmd] {
      BlockHandle h;
      w2b_status st = w2b_block_open(e, core.c_str(), &h.b);
      char* result = nullptr;
      if (st == W2B_OK) {
        if (!kind.empty())
          st = w2b_block_matrix(h.b, kind.c_str(), name == "dmatrix" && cmd->count("--p") ? p : -1,
                                format.c_str(), &result);
        else if (name == "enumerate")
          st = w2b_block_partitions(h.b, format.c_str(), &result);
        else if (name == "ext-quiver")
          st = w2b_block_ext_quiver(h.b, format.c_str(), &result);
        else if (name == "layers")
          st = w2b_block_layers(h.b, partition.c_str(), format.c_str(), &result);
        else if (name == "pairs")
          st = w2b_block_pairs(h.b, format.c_str(), &result);
        else
          st = w2b_block_chain(h.b, format.c_str(), &result);
      }
      exit_code = finish(out_path, st, result);
    });
  }

  // ---- verify ----
  auto* verify_cmd =
      app.add_subcommand("verify", "run the invariant checks over a sweep of blocks");
  std::vector<int> e_range;
  std::vector<long long> p_values;
  std::vector<std::string> checks;
  int max_core = -1, threads = -1;
  auto* o_er = verify_cmd->add_option("--e-range", e_range, "values of e to sweep")
                   ->delimiter(',');
  auto* o_mc = verify_cmd->add_option("--max-core", max_core, "largest core size to sweep");
  auto* o_pv = verify_cmd->add_option("--p-values", p_values, "characteristics (0 or odd primes)")
                   ->delimiter(',');
  auto* o_ck = verify_cmd->add_option("--checks", checks, "subset of checks to run")
                   ->delimiter(',');
  auto* o_th = verify_cmd->add_option("--threads", threads, "worker threads (0 = auto)");
  auto* o_cf = verify_cmd->add_option("--config", config_path, "JSON config file");
  o_cf->excludes(o_er)->excludes(o_mc)->excludes(o_pv)->excludes(o_ck)->excludes(o_th);
  verify_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  verify_cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
  verify_cmd->callback([&] {
    std::string cfg;
    if (!config_path.empty()) {
      std::ifstream f(config_path, std::ios::binary);
      if (!f) {
        std::fprintf(stderr, "w2blocks: cannot read '%s'\n", config_path.c_str());
        exit_code = 2;
        return;
      }
      std::ostringstream ss;
      ss << f.rdbuf();
      cfg = ss.str();
    } else {
      std::vector<std::string> fields;
      auto join_nums = [](const auto& xs) {
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
        return s;
      };
      if (verify_cmd->count("--e-range"))
        fields.push_back("\"e_range\":[" + join_nums(e_range) + "]");
      if (verify_cmd->count("--max-core"))
        fields.push_back("\"max_core_size\":" + std::to_string(max_core));
      if (verify_cmd->count("--p-values"))
        fields.push_back("\"p_values\":[" + join_nums(p_values) + "]");
      if (verify_cmd->count("--checks")) {
        std::string s;
        for (size_t i = 0; i < checks.size(); ++i) s += (i ? "," : "") + quote_json(checks[i]);
        fields.push_back("\"checks\":[" + s + "]");
      }
      if (verify_cmd->count("--threads"))
        fields.push_back("\"threads\":" + std::to_string(threads));
      for (size_t i = 0; i < fields.size(); ++i) cfg += (i ? "," : "{") + fields[i];
      if (!cfg.empty()) cfg += "}";
    }
    char* report = nullptr;
    int all_passed = 0;
    w2b_status st = w2b_verify(cfg.empty() ? nullptr : cfg.c_str(), format.c_str(), &report,
                               &all_passed);
    exit_code = finish(out_path, st, report);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex);
    return rc == 0 ? 0 : 2;
  }
  return exit_code;
}
