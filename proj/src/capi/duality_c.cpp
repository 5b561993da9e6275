#include "duality/duality.h"

#include <cstring>
#include <new>
#include <string>

#include "analysis.hpp"
#include "concrete.hpp"
#include "element.hpp"
#include "group.hpp"
#include "report.hpp"
#include "verify.hpp"
#include "word.hpp"

struct dg_element {
  tvb::DualityElement value;
};

struct dg_group {
  std::string name; // "dg2" or "dg3"
  int order;
};

namespace {

thread_local std::string g_error_message;
thread_local long g_error_offset = -1;

void set_error(const std::string &msg, long offset = -1) {
  g_error_message = msg;
  g_error_offset = offset;
}

char *dup_string(const std::string &s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating exceptions to status codes.
template <typename Fn> dg_status guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const tvb::ParseError &e) {
    set_error(e.what(), (long)e.offset());
    return DG_ERR_PARSE;
  } catch (const tvb::PreconditionError &e) {
    set_error(e.what());
    return DG_ERR_PRECONDITION;
  } catch (const std::invalid_argument &e) {
    set_error(e.what());
    return DG_ERR_INVALID_ARGUMENT;
  } catch (const std::overflow_error &e) {
    set_error(e.what());
    return DG_ERR_OVERFLOW;
  } catch (const std::exception &e) {
    set_error(e.what());
    return DG_ERR_INTERNAL;
  }
}

dg_status require(bool ok, const char *what) {
  if (!ok) {
    set_error(what);
    return DG_ERR_INVALID_ARGUMENT;
  }
  return DG_OK;
}

} // namespace

extern "C" {

const char *dg_last_error_message(void) { return g_error_message.c_str(); }

long dg_last_error_offset(void) { return g_error_offset; }

dg_status dg_element_parse(const char *word, dg_element **out) {
  if (dg_status s = require(word && out, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() {
    tvb::DualityElement e = tvb::eval_word(tvb::parse_word(word));
    e.witness = tvb::canonical_witness(e);
    *out = new dg_element{std::move(e)};
    return DG_OK;
  });
}

dg_status dg_element_compose(const dg_element *first, const dg_element *second,
                             dg_element **out) {
  if (dg_status s = require(first && second && out, "null argument");
      s != DG_OK)
    return s;
  return guarded([&]() {
    tvb::DualityElement e = tvb::compose(first->value, second->value);
    e.witness = tvb::canonical_witness(e);
    *out = new dg_element{std::move(e)};
    return DG_OK;
  });
}

dg_status dg_element_invert(const dg_element *e, dg_element **out) {
  if (dg_status s = require(e && out, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() {
    tvb::DualityElement inv = tvb::invert(e->value);
    inv.witness = tvb::canonical_witness(inv);
    *out = new dg_element{std::move(inv)};
    return DG_OK;
  });
}

dg_status dg_element_equal(const dg_element *a, const dg_element *b,
                           int *out_equal) {
  if (dg_status s = require(a && b && out_equal, "null argument"); s != DG_OK)
    return s;
  *out_equal = tvb::equal_elements(a->value, b->value) ? 1 : 0;
  return DG_OK;
}

dg_status dg_element_order(const dg_element *e, int *out_order) {
  if (dg_status s = require(e && out_order, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() {
    *out_order = tvb::element_order(e->value);
    return DG_OK;
  });
}

dg_status dg_element_matrix6(const dg_element *e, int out[36]) {
  if (dg_status s = require(e && out, "null argument"); s != DG_OK)
    return s;
  tvb::Matrix6 m = tvb::matrix6(e->value);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      out[r * 6 + c] = m[r][c];
  return DG_OK;
}

dg_status dg_element_perm(const dg_element *e, int out[4]) {
  if (dg_status s = require(e && out, "null argument"); s != DG_OK)
    return s;
  for (int i = 0; i < 4; ++i)
    out[i] = e->value.perm(i);
  return DG_OK;
}

dg_status dg_element_row_text(const dg_element *e, char **out) {
  if (dg_status s = require(e && out, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() {
    *out = dup_string(tvb::action_row_text(e->value.theta));
    return DG_OK;
  });
}

dg_status dg_element_perm_cycles(const dg_element *e, char **out) {
  if (dg_status s = require(e && out, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() {
    *out = dup_string(e->value.perm.cycles());
    return DG_OK;
  });
}

dg_status dg_element_witness(const dg_element *e, char **out) {
  if (dg_status s = require(e && out, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() {
    *out = dup_string(tvb::format_word_compact(e->value.witness));
    return DG_OK;
  });
}

dg_status dg_element_to_json(const dg_element *e, char **out) {
  if (dg_status s = require(e && out, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() {
    *out = dup_string(tvb::element_to_json(e->value));
    return DG_OK;
  });
}

dg_status dg_element_to_text(const dg_element *e, char **out) {
  if (dg_status s = require(e && out, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() {
    *out = dup_string(tvb::element_to_text(e->value));
    return DG_OK;
  });
}

void dg_element_free(dg_element *e) { delete e; }

dg_status dg_group_enumerate(const char *name, dg_group **out) {
  if (dg_status s = require(name && out, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() -> dg_status {
    std::string n = name;
    if (n == "dg3") {
      *out = new dg_group{n, tvb::dg3().size()};
      return DG_OK;
    }
    if (n == "dg2") {
      *out = new dg_group{n, tvb::enumerate_dg2().size()};
      return DG_OK;
    }
    set_error("unknown group: " + n + " (expected dg2 or dg3)");
    return DG_ERR_INVALID_ARGUMENT;
  });
}

dg_status dg_group_order(const dg_group *g, int *out_order) {
  if (dg_status s = require(g && out_order, "null argument"); s != DG_OK)
    return s;
  *out_order = g->order;
  return DG_OK;
}

dg_status dg_group_report(const dg_group *g, int as_json, char **out) {
  if (dg_status s = require(g && out, "null argument"); s != DG_OK)
    return s;
  return guarded([&]() {
    *out = dup_string(as_json ? tvb::group_report_json(g->name)
                              : tvb::group_report_text(g->name));
    return DG_OK;
  });
}

void dg_group_free(dg_group *g) { delete g; }

dg_status dg_verify_run(const char *check, int table, int as_json,
                        char **out_report, int *out_all_pass) {
  if (dg_status s = require(out_report && out_all_pass, "null argument");
      s != DG_OK)
    return s;
  return guarded([&]() {
    tvb::VerifyReport rep =
        tvb::run_verify(check ? std::string(check) : std::string(), table);
    *out_report = dup_string(as_json ? tvb::verify_report_json(rep)
                                     : tvb::verify_report_text(rep));
    *out_all_pass = rep.all_pass ? 1 : 0;
    return DG_OK;
  });
}

dg_status dg_verify_names(char **out) {
  if (dg_status s = require(out != nullptr, "null argument"); s != DG_OK)
    return s;
  std::string joined;
  for (const std::string &n : tvb::verify_check_names()) {
    joined += n;
    joined += '\n';
  }
  *out = dup_string(joined);
  return DG_OK;
}

dg_status dg_oracle_run(const int dims[7], unsigned long long seed,
                        const char *axes, int samples, int as_json,
                        char **out_report, int *out_ok) {
  if (dg_status s = require(dims && out_report && out_ok, "null argument");
      s != DG_OK)
    return s;
  if (dg_status s = require(samples >= 0, "samples must be nonnegative");
      s != DG_OK)
    return s;
  return guarded([&]() {
    std::array<int, 7> a;
    for (int i = 0; i < 7; ++i)
      a[i] = dims[i];
    tvb::BuildingDims d = tvb::BuildingDims::from_array(a);
    tvb::OracleRun run = tvb::run_oracle(
        d, seed, axes ? std::string(axes) : std::string(), samples);
    *out_report = dup_string(as_json ? run.json : run.text);
    *out_ok = run.ok ? 1 : 0;
    return DG_OK;
  });
}

void dg_string_free(char *s) { delete[] s; }

} // extern "C"
