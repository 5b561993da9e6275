// Command-line front end for the triple-vector-bundle duality engine.
// Links exclusively against the public C API.
#include <array>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "duality/duality.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Owned C string from the API.
struct ApiString {
  char *ptr = nullptr;
  ~ApiString() { dg_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct ElementHandle {
  dg_element *ptr = nullptr;
  ~ElementHandle() { dg_element_free(ptr); }
};

struct GroupHandle {
  dg_group *ptr = nullptr;
  ~GroupHandle() { dg_group_free(ptr); }
};

[[noreturn]] void die_api(dg_status status) {
  long off = dg_last_error_offset();
  std::cerr << "error: " << dg_last_error_message();
  if (status == DG_ERR_PARSE && off >= 0)
    std::cerr << " (offset " << off << ")";
  std::cerr << "\n";
  // Parse and argument problems are usage errors; everything else is a
  // verification-level failure.
  std::exit((status == DG_ERR_PARSE || status == DG_ERR_INVALID_ARGUMENT)
                ? kExitUsage
                : kExitFail);
}

void check(dg_status status) {
  if (status != DG_OK)
    die_api(status);
}

ElementHandle parse_element(const std::string &word) {
  ElementHandle e;
  check(dg_element_parse(word.c_str(), &e.ptr));
  return e;
}

void emit(const std::string &command, bool json, const Json &result,
          const std::string &text) {
  if (json) {
    Json wrapper;
    wrapper["command"] = command;
    wrapper["result"] = result;
    std::cout << wrapper.dump() << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n')
      std::cout << "\n";
  }
}

struct Options {
  std::string format = "text";
  std::string group = "dg3";
  std::vector<int> dims = {2, 2, 2, 2, 2, 2, 2};
  std::uint64_t seed = 0;
  int samples = 100;
  int table = 0;
  std::string check;
  std::string dual;
  std::vector<std::string> words;
  bool json() const { return format == "json"; }
};

int require_dg3(const Options &opt) {
  if (opt.group != "dg3") {
    std::cerr << "error: element commands operate on dg3 only "
                 "(--group dg2 applies to enumerate)\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_parse(const Options &opt) {
  if (int rc = require_dg3(opt))
    return rc;
  ElementHandle e = parse_element(opt.words[0]);
  ApiString json_s, text_s;
  check(dg_element_to_json(e.ptr, &json_s.ptr));
  check(dg_element_to_text(e.ptr, &text_s.ptr));
  emit("parse", opt.json(), Json::parse(json_s.str()), text_s.str());
  return kExitOk;
}

int cmd_eq(const Options &opt) {
  if (int rc = require_dg3(opt))
    return rc;
  ElementHandle a = parse_element(opt.words[0]);
  ElementHandle b = parse_element(opt.words[1]);
  int equal = 0;
  check(dg_element_equal(a.ptr, b.ptr, &equal));
  emit("eq", opt.json(), Json(equal != 0), equal ? "true" : "false");
  return equal ? kExitOk : kExitFail;
}

int cmd_order(const Options &opt) {
  if (int rc = require_dg3(opt))
    return rc;
  ElementHandle e = parse_element(opt.words[0]);
  int order = 0;
  check(dg_element_order(e.ptr, &order));
  emit("order", opt.json(), Json(order), std::to_string(order));
  return kExitOk;
}

int cmd_act(const Options &opt) {
  if (int rc = require_dg3(opt))
    return rc;
  ElementHandle e = parse_element(opt.words[0]);
  ApiString row, cycles, witness;
  check(dg_element_row_text(e.ptr, &row.ptr));
  check(dg_element_perm_cycles(e.ptr, &cycles.ptr));
  check(dg_element_witness(e.ptr, &witness.ptr));
  Json result = {{"witness", witness.str()},
                 {"perm_cycles", cycles.str()},
                 {"row", row.str()}};
  emit("act", opt.json(), result, row.str());
  return kExitOk;
}

int cmd_matrix(const Options &opt) {
  if (int rc = require_dg3(opt))
    return rc;
  ElementHandle e = parse_element(opt.words[0]);
  int m[36];
  check(dg_element_matrix6(e.ptr, m));
  Json rows = Json::array();
  std::string text;
  for (int r = 0; r < 6; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 6; ++c) {
      int v = m[r * 6 + c];
      row.push_back(v);
      text += (v < 0 ? "" : " ");
      text += std::to_string(v);
      text += (c == 5 ? "\n" : " ");
    }
    rows.push_back(row);
  }
  emit("matrix", opt.json(), rows, text);
  return kExitOk;
}

int cmd_pi(const Options &opt) {
  if (int rc = require_dg3(opt))
    return rc;
  ElementHandle e = parse_element(opt.words[0]);
  ApiString cycles;
  check(dg_element_perm_cycles(e.ptr, &cycles.ptr));
  emit("pi", opt.json(), Json(cycles.str()), cycles.str());
  return kExitOk;
}

int cmd_enumerate(const Options &opt) {
  GroupHandle g;
  check(dg_group_enumerate(opt.group.c_str(), &g.ptr));
  ApiString report;
  check(dg_group_report(g.ptr, opt.json() ? 1 : 0, &report.ptr));
  if (opt.json())
    emit("enumerate", true, Json::parse(report.str()), "");
  else
    std::cout << report.str();
  return kExitOk;
}

int cmd_verify(const Options &opt) {
  ApiString report;
  int all_pass = 0;
  check(dg_verify_run(opt.check.empty() ? nullptr : opt.check.c_str(),
                      opt.table, opt.json() ? 1 : 0, &report.ptr, &all_pass));
  if (opt.json())
    emit("verify", true, Json::parse(report.str()), "");
  else
    std::cout << report.str();
  return all_pass ? kExitOk : kExitFail;
}

int cmd_oracle(const Options &opt) {
  int dims[7];
  for (int i = 0; i < 7; ++i)
    dims[i] = opt.dims[(std::size_t)i];
  ApiString report;
  int ok = 0;
  check(dg_oracle_run(dims, opt.seed,
                      opt.dual.empty() ? nullptr : opt.dual.c_str(),
                      opt.samples, opt.json() ? 1 : 0, &report.ptr, &ok));
  if (opt.json())
    emit("oracle", true, Json::parse(report.str()), "");
  else
    std::cout << report.str();
  return ok ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact engine for the triple-vector-bundle duality group "
               "(order 96): word algebra, enumeration, verification, and the "
               "concrete-model oracle."};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--group", opt.group, "Group to operate on")
      ->check(CLI::IsMember({"dg2", "dg3"}))
      ->capture_default_str();

  auto *parse = app.add_subcommand("parse", "Parse a word and print the "
                                            "canonical element");
  parse->add_option("word", opt.words, "Word, e.g. \"(XY)^3\"")
      ->required()
      ->expected(1);

  auto *eq = app.add_subcommand("eq", "Decide whether two words represent "
                                      "the same element");
  eq->add_option("words", opt.words, "Two words")->required()->expected(2);

  auto *order = app.add_subcommand("order", "Order of the element of a word");
  order->add_option("word", opt.words, "Word")->required()->expected(1);

  auto *act = app.add_subcommand("act", "Action row of a word (slot images "
                                        "and rho, table style)");
  act->add_option("word", opt.words, "Word")->required()->expected(1);

  auto *matrix =
      app.add_subcommand("matrix", "Signed 6x6 slot matrix of a word");
  matrix->add_option("word", opt.words, "Word")->required()->expected(1);

  auto *pi = app.add_subcommand("pi", "Index permutation of a word in cycle "
                                      "notation");
  pi->add_option("word", opt.words, "Word")->required()->expected(1);

  app.add_subcommand("enumerate", "Enumerate the group and print its "
                                  "structure report");

  auto *verify = app.add_subcommand(
      "verify", "Run the verification suite (or one named check)");
  verify->add_option("--check", opt.check,
                     "Single check: order, kernel, tables, classes, normal, "
                     "semidirect, split, correction, k4module, dg2, oracle, "
                     "coherence, flip, faithful, properties");
  verify->add_option("--table", opt.table, "Restrict the table check to one "
                                           "table (2..6)")
      ->check(CLI::Range(2, 6));

  auto *oracle = app.add_subcommand(
      "oracle", "Re-derive a random statomorphism's dual from the pairing "
                "and compare with the symbolic dualization");
  oracle->add_option("--dims", opt.dims, "Seven building dimensions")
      ->delimiter(',')
      ->expected(1, 7);
  oracle->add_option("--seed", opt.seed, "Random seed")
      ->capture_default_str();
  oracle->add_option("--samples", opt.samples,
                     "Pairing-invariance samples per axis")
      ->capture_default_str();
  oracle->add_option("--dual", opt.dual, "Axes to dualize along (e.g. X or "
                                         "XYZ; default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (opt.dims.size() != 7) {
    std::cerr << "error: --dims needs exactly 7 integers\n";
    return kExitUsage;
  }
  for (int d : opt.dims) {
    if (d < 0) {
      std::cerr << "error: dimensions must be nonnegative\n";
      return kExitUsage;
    }
  }

  try {
    if (parse->parsed())
      return cmd_parse(opt);
    if (eq->parsed())
      return cmd_eq(opt);
    if (order->parsed())
      return cmd_order(opt);
    if (act->parsed())
      return cmd_act(opt);
    if (matrix->parsed())
      return cmd_matrix(opt);
    if (pi->parsed())
      return cmd_pi(opt);
    if (app.get_subcommand("enumerate")->parsed())
      return cmd_enumerate(opt);
    if (verify->parsed())
      return cmd_verify(opt);
    if (oracle->parsed())
      return cmd_oracle(opt);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  std::cerr << "error: no command\n";
  return kExitUsage;
}
