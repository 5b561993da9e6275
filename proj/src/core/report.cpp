#include "report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "analysis.hpp"
#include "group.hpp"
#include "word.hpp"

namespace tvb {

namespace {

using Json = nlohmann::ordered_json;

std::string display_word(const Word &w) { return format_word_compact(w); }

Json element_json_object(const DualityElement &e) {
  Json j;
  j["perm"] = {e.perm(0), e.perm(1), e.perm(2), e.perm(3)};
  Json slots;
  for (int s = 0; s < kSlotCount; ++s) {
    slots[kSlotNames[s]] = {{"src", kSlotNames[e.theta.slots.src[s]]},
                            {"sign", e.theta.slots.sign[s]}};
  }
  j["slots"] = slots;
  Json coeff;
  for (int q = 0; q < kPairCount; ++q)
    coeff[kPairNames[q]] = e.theta.rho.coeff[q];
  j["rho"] = {{"eps", e.theta.rho.eps}, {"coeff", coeff}};
  j["witness"] = display_word(e.witness);
  return j;
}

} // namespace

std::string element_to_json(const DualityElement &e) {
  return element_json_object(e).dump();
}

std::string element_to_text(const DualityElement &e) {
  std::ostringstream out;
  out << "word: " << display_word(e.witness) << "\n";
  out << "perm: " << e.perm.cycles() << "\n";
  out << "order: " << element_order(e) << "\n";
  out << "action: " << action_row_text(e.theta) << "\n";
  return out.str();
}

namespace {

Json dg3_report_object() {
  const GroupTable &t = dg3();
  Json j;
  j["group"] = "dg3";
  j["order"] = t.size();
  j["generators"] = {"X", "Y", "Z"};

  Json classes = Json::array();
  for (const ConjClass &c : conjugacy_classes(t)) {
    classes.push_back({{"rep", display_word(t.elements[c.rep].witness)},
                       {"size", c.size()},
                       {"order", c.order},
                       {"row", action_row_text(t.elements[c.rep].theta)}});
  }
  j["classes"] = classes;

  Json normals = Json::array();
  for (const SubgroupDescriptor &n : normal_subgroups(t)) {
    Json gens = Json::array();
    for (const Word &w : n.generator_witnesses)
      gens.push_back(display_word(w));
    normals.push_back({{"size", (int)n.members.size()}, {"generators", gens}});
  }
  j["normal_subgroups"] = normals;

  SubgroupDescriptor k = kernel_of_pi(t);
  Json kernel_members = Json::array();
  for (int m : k.members)
    kernel_members.push_back(display_word(t.elements[m].witness));
  j["kernel"] = {{"size", (int)k.members.size()}, {"members", kernel_members}};

  SplitReport sp = is_split_extension(t);
  j["split"] = sp.split;
  j["sections"] = {{"tested", sp.candidates_tested},
                   {"failed", sp.candidates_failed}};

  StructureReport st = semidirect_structure_check(t);
  j["semidirect"] = {{"ok", st.ok},
                     {"normal_order", st.h_size},
                     {"complement_order", st.s_size},
                     {"abc_orders", st.abc_orders}};
  return j;
}

Json dg2_report_object() {
  Dg2Table t = enumerate_dg2();
  Json j;
  j["group"] = "dg2";
  j["order"] = t.size();
  j["generators"] = {"X", "Y"};
  int trivial = 0;
  Json elems = Json::array();
  for (const Dg2Element &e : t.elements) {
    if (e.perm == std::array<int, 3>({0, 1, 2}))
      ++trivial;
    elems.push_back({{"witness", display_word(e.witness)},
                     {"perm", e.perm},
                     {"sign", e.eps}});
  }
  j["kernel_size"] = trivial;
  j["elements"] = elems;
  return j;
}

} // namespace

std::string group_report_json(const std::string &group) {
  if (group == "dg3")
    return dg3_report_object().dump();
  if (group == "dg2")
    return dg2_report_object().dump();
  throw std::invalid_argument("unknown group: " + group);
}

std::string group_report_text(const std::string &group) {
  std::ostringstream out;
  if (group == "dg3") {
    const GroupTable &t = dg3();
    out << "group: dg3\n";
    out << "order: " << t.size() << "\n";
    std::vector<ConjClass> cs = conjugacy_classes(t);
    out << "conjugacy classes (" << cs.size() << "):\n";
    for (const ConjClass &c : cs) {
      std::string rep = display_word(t.elements[c.rep].witness);
      out << "  rep " << rep << std::string(rep.size() < 12 ? 12 - rep.size() : 1, ' ')
          << " size " << (c.size() < 10 ? " " : "") << c.size() << "  order "
          << c.order << "  row: " << action_row_text(t.elements[c.rep].theta)
          << "\n";
    }
    std::vector<SubgroupDescriptor> ns = normal_subgroups(t);
    out << "normal subgroups (" << ns.size() << "):\n";
    for (const SubgroupDescriptor &n : ns) {
      out << "  size " << ((int)n.members.size() < 10 ? " " : "")
          << n.members.size() << "  generators:";
      if (n.generator_witnesses.empty())
        out << " -";
      for (std::size_t i = 0; i < n.generator_witnesses.size(); ++i)
        out << (i ? ", " : " ") << display_word(n.generator_witnesses[i]);
      out << "\n";
    }
    StructureReport st = semidirect_structure_check(t);
    out << "semidirect: " << (st.ok ? "ok" : "FAILED")
        << " -- normal Z4 x Z4 of order " << st.h_size
        << ", complement <X, Y> of order " << st.s_size << "\n";
    SplitReport sp = is_split_extension(t);
    out << "split: " << (sp.split ? "true" : "false") << " ("
        << sp.candidates_failed << "/" << sp.candidates_tested
        << " sections fail)\n";
    SubgroupDescriptor k = kernel_of_pi(t);
    out << "kernel: {";
    for (std::size_t i = 0; i < k.members.size(); ++i)
      out << (i ? ", " : "") << display_word(t.elements[k.members[i]].witness);
    out << "}\n";
    return out.str();
  }
  if (group == "dg2") {
    Dg2Table t = enumerate_dg2();
    out << "group: dg2\n";
    out << "order: " << t.size() << "\n";
    out << "elements:\n";
    for (const Dg2Element &e : t.elements) {
      out << "  " << display_word(e.witness) << "  perm [" << e.perm[0]
          << e.perm[1] << e.perm[2] << "]  sign " << (e.eps > 0 ? "+1" : "-1")
          << "\n";
    }
    int trivial = 0;
    for (const Dg2Element &e : t.elements)
      if (e.perm == std::array<int, 3>({0, 1, 2}))
        ++trivial;
    out << "kernel: " << (trivial == 1 ? "trivial" : "NONTRIVIAL") << "\n";
    return out.str();
  }
  throw std::invalid_argument("unknown group: " + group);
}

std::string tensor_to_json(const Tensor &t) {
  Json j;
  j["shape"] = t.shape();
  Json entries = Json::array();
  for (const Rational &r : t.entries())
    entries.push_back(r.str());
  j["entries"] = entries;
  return j.dump();
}

std::string verify_report_json(const VerifyReport &r) {
  Json j;
  j["all_pass"] = r.all_pass;
  Json checks = Json::array();
  for (const CheckResult &c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"summary", c.summary},
                      {"details", c.details}});
  }
  j["checks"] = checks;
  return j.dump();
}

OracleRun run_oracle(const BuildingDims &dims, std::uint64_t seed,
                     const std::string &axes, int samples) {
  std::string use = axes.empty() ? "XYZ" : axes;
  for (char a : use) {
    if (a != 'X' && a != 'Y' && a != 'Z')
      throw std::invalid_argument("axis must be 'X', 'Y' or 'Z'");
  }
  OracleRun run;
  run.ok = true;
  std::ostringstream text;
  Json j;
  Json dims_json = Json::array();
  for (int v : dims.as_array())
    dims_json.push_back(v);
  j["dims"] = dims_json;
  j["seed"] = seed;
  j["samples"] = samples;
  Json per_axis = Json::array();

  G3Concrete g = random_g3(dims, seed);
  for (char axis : use) {
    bool match = false, pairing = false;
    std::string detail;
    G3Concrete symbolic = dualize_symbolic(g, axis);
    try {
      match = (solve_dual_oracle(g, axis) == symbolic);
    } catch (const std::exception &e) {
      detail = e.what();
    }
    pairing = check_pairing_invariance(g, axis, samples, seed ^ 0x51Dull,
                                       detail.empty() ? &detail : nullptr);
    run.ok = run.ok && match && pairing;
    text << "axis " << axis << ": "
         << (match ? "linear-solve dual matches the symbolic dual"
                   : "MISMATCH between linear-solve and symbolic duals")
         << "; pairing "
         << (pairing ? "invariant on " + std::to_string(samples) + " samples"
                     : "NOT invariant")
         << (detail.empty() || (match && pairing) ? "" : " [" + detail + "]")
         << "\n";
    per_axis.push_back(
        {{"axis", std::string(1, axis)}, {"match", match}, {"pairing", pairing}});
  }
  j["axes"] = per_axis;
  j["ok"] = run.ok;
  text << (run.ok ? "oracle agreement: exact" : "oracle agreement: FAILED")
       << "\n";
  run.text = text.str();
  run.json = j.dump();
  return run;
}

} // namespace tvb
