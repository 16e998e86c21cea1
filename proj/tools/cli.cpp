// Command-line front end for the softclust shared library. Talks to the
// kernel exclusively through the C API in softclust.h.

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "softclust.h"

namespace {

struct Output {
  char* report = nullptr;
  char* error = nullptr;
  ~Output() {
    sc_string_free(report);
    sc_string_free(error);
  }
};

int finish(sc_status status, const Output& out) {
  if (out.report) std::fputs(out.report, stdout);
  if (out.error) std::fprintf(stderr, "error: %s\n", out.error);
  return static_cast<int>(status);
}

class SpaceHandle {
 public:
  explicit SpaceHandle(sc_space* space) : space_(space) {}
  ~SpaceHandle() { sc_space_free(space_); }
  SpaceHandle(const SpaceHandle&) = delete;
  SpaceHandle& operator=(const SpaceHandle&) = delete;
  sc_space* get() const { return space_; }

 private:
  sc_space* space_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite soft topologies with ideals: cluster operators, law "
               "checking, counterexample search"};
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string file;
  std::string expr;
  std::string set_name;
  std::string kind;
  std::string law;
  std::string laws_csv;
  int cells = 6;
  int exhaustive_cells = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool list_members = false;
  bool count_only = false;
  bool random_mode = false;

  CLI::App* validate = app.add_subcommand("validate", "validate a space file's stanzas");
  validate->add_option("file", file, "space file")->required();

  CLI::App* eval = app.add_subcommand("eval", "evaluate an operator expression");
  eval->add_option("file", file, "space file")->required();
  eval->add_option("--expr", expr, "expression, e.g. 'cl(R1) n ~R2'")->required();

  CLI::App* cluster = app.add_subcommand("cluster-topology",
                                         "construct the space's cluster topology");
  cluster->add_option("file", file, "space file")->required();
  cluster->add_flag("--list", list_members, "list every open");
  cluster->add_flag("--count", count_only, "print only the open count");

  CLI::App* decompose = app.add_subcommand("decompose", "split a named set");
  decompose->add_option("file", file, "space file")->required();
  decompose->add_option("--set", set_name, "set name from the file")->required();
  decompose->add_option("--kind", kind, "crowded | regular | closed")->required();

  CLI::App* check = app.add_subcommand("check", "run the law suite");
  check->add_option("file", file, "space file (single-space scope)");
  check->add_option("--laws", laws_csv, "comma-separated law subset");
  check->add_flag("--random", random_mode, "seeded random spaces instead of a file");
  check->add_option("--cells", cells, "carrier cells for random scope")
      ->capture_default_str();
  check->add_option("--trials", trials, "number of random spaces");
  check->add_option("--seed", seed, "random scope seed");
  check->add_option("--exhaustive", exhaustive_cells,
                    "every enumerated space up to this many cells");

  CLI::App* falsify = app.add_subcommand("falsify", "search one law for a counterexample");
  falsify->add_option("--law", law, "law name, e.g. prop4.9-stated")->required();
  falsify->add_option("--exhaustive", exhaustive_cells,
                      "exhaustive search up to this many cells");
  falsify->add_option("--cells", cells, "carrier cells for random search")
      ->capture_default_str();
  falsify->add_option("--trials", trials, "number of random spaces");
  falsify->add_option("--seed", seed, "random search seed");

  CLI::App* enumerate = app.add_subcommand("enumerate",
                                           "enumerate (topology, ideal) pairs");
  enumerate->add_option("--cells", cells, "cell bound")->required();
  enumerate->add_flag("--list", list_members, "list every space");

  CLI::App* laws_cmd = app.add_subcommand("laws", "list the law registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(SC_ERR_INPUT);
  }

  sc_format format = format_name == "json" ? SC_FORMAT_JSON : SC_FORMAT_TEXT;
  Output out;

  auto load_space = [&](sc_space** space) -> sc_status {
    return sc_space_load(file.c_str(), space, &out.error);
  };

  if (validate->parsed()) {
    sc_space* space = nullptr;
    sc_status status = load_space(&space);
    if (status != SC_OK) return finish(status, out);
    SpaceHandle handle(space);
    status = sc_space_validate(handle.get(), format, &out.report, &out.error);
    return finish(status, out);
  }

  if (eval->parsed()) {
    sc_space* space = nullptr;
    sc_status status = load_space(&space);
    if (status != SC_OK) return finish(status, out);
    SpaceHandle handle(space);
    status = sc_space_eval(handle.get(), expr.c_str(), &out.report, &out.error);
    return finish(status, out);
  }

  if (cluster->parsed()) {
    if (list_members && count_only) {
      std::fprintf(stderr, "error: --list and --count are mutually exclusive\n");
      return static_cast<int>(SC_ERR_INPUT);
    }
    sc_space* space = nullptr;
    sc_status status = load_space(&space);
    if (status != SC_OK) return finish(status, out);
    SpaceHandle handle(space);
    status = sc_cluster_topology(handle.get(), list_members ? 1 : 0, format, &out.report,
                                 &out.error);
    return finish(status, out);
  }

  if (decompose->parsed()) {
    sc_space* space = nullptr;
    sc_status status = load_space(&space);
    if (status != SC_OK) return finish(status, out);
    SpaceHandle handle(space);
    status = sc_decompose(handle.get(), set_name.c_str(), kind.c_str(), format, &out.report,
                          &out.error);
    return finish(status, out);
  }

  if (check->parsed()) {
    int modes = (file.empty() ? 0 : 1) + (random_mode ? 1 : 0) + (exhaustive_cells > 0 ? 1 : 0);
    if (modes != 1) {
      std::fprintf(stderr,
                   "error: check needs exactly one of a file, --random, or --exhaustive\n");
      return static_cast<int>(SC_ERR_INPUT);
    }
    const char* laws = laws_csv.empty() ? nullptr : laws_csv.c_str();
    sc_status status;
    if (!file.empty()) {
      sc_space* space = nullptr;
      status = load_space(&space);
      if (status != SC_OK) return finish(status, out);
      SpaceHandle handle(space);
      status = sc_check_space(handle.get(), laws, format, &out.report, &out.error);
    } else if (random_mode) {
      if (trials <= 0) {
        std::fprintf(stderr, "error: --random needs --trials\n");
        return static_cast<int>(SC_ERR_INPUT);
      }
      status = sc_check_random(cells, trials, seed, laws, format, &out.report, &out.error);
    } else {
      status = sc_check_exhaustive(exhaustive_cells, laws, format, &out.report, &out.error);
    }
    return finish(status, out);
  }

  if (falsify->parsed()) {
    sc_status status;
    if (exhaustive_cells > 0) {
      status = sc_falsify_exhaustive(law.c_str(), exhaustive_cells, format, &out.report,
                                     &out.error);
    } else {
      if (trials <= 0) {
        std::fprintf(stderr, "error: falsify needs --exhaustive or --trials\n");
        return static_cast<int>(SC_ERR_INPUT);
      }
      status = sc_falsify_random(law.c_str(), cells, trials, seed, format, &out.report,
                                 &out.error);
    }
    return finish(status, out);
  }

  if (enumerate->parsed()) {
    sc_status status = sc_enumerate(cells, list_members ? 1 : 0, format, &out.report,
                                    &out.error);
    return finish(status, out);
  }

  if (laws_cmd->parsed()) {
    char* csv = nullptr;
    sc_status status = sc_law_names(&csv);
    if (csv) {
      std::string line(csv);
      sc_string_free(csv);
      for (auto& ch : line) {
        if (ch == ',') ch = '\n';
      }
      std::printf("%s\n", line.c_str());
    }
    return static_cast<int>(status);
  }

  return static_cast<int>(SC_ERR_INPUT);
}
