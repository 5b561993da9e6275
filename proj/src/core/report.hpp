// Serialization and report surface: canonical JSON wire shapes for
// elements, tensors, whole-group structure reports, verification reports,
// and the oracle-comparison runner shared by the C API and the CLI.
#pragma once

#include <cstdint>
#include <string>

#include "concrete.hpp"
#include "element.hpp"
#include "tensor.hpp"
#include "verify.hpp"

namespace tvb {

// {"perm":[...], "slots":{"gamma":{"src":...,"sign":...},...},
//  "rho":{"eps":...,"coeff":{...}}, "witness":"..."}
std::string element_to_json(const DualityElement &e);

// Multi-line human form: word, permutation cycles, order, action row.
std::string element_to_text(const DualityElement &e);

// Whole-group structure report for "dg2" or "dg3"; throws
// std::invalid_argument for any other name.
std::string group_report_json(const std::string &group);
std::string group_report_text(const std::string &group);

// {"shape":[...], "entries":["p/q",...]} in row-major order.
std::string tensor_to_json(const Tensor &t);

std::string verify_report_json(const VerifyReport &r);

// Builds a seeded random statomorphism at the given dimensions, compares
// the pairing-derived linear-solve dual against the symbolic dual on each
// requested axis (axes is a subset of "XYZ"; empty means all three), and
// checks pairing invariance on `samples` compatible pairs per axis.
struct OracleRun {
  bool ok = false;
  std::string text;
  std::string json;
};
OracleRun run_oracle(const BuildingDims &dims, std::uint64_t seed,
                     const std::string &axes, int samples);

} // namespace tvb
