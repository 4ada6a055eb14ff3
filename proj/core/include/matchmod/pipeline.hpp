#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchmod/chars.hpp"
#include "matchmod/fps.hpp"
#include "matchmod/module.hpp"

namespace matchmod {

struct PipelineOptions {
  int precision = 16;
  bool skip_decompose = false;
  std::uint64_t max_elements = kDefaultClosureCap;
};

struct EnumerationRow {
  MuLabel mu;
  int member_count = 0;
  int degree = 0;
  std::uint64_t vertex_order = 0;
  std::string vertex_factors;
  std::vector<std::string> vertex_generators;
};

struct ComponentReport {
  int dimension = 0;
  std::string mu = "?";  // "(4t,2s)" once matched
  std::uint64_t vertex_order = 0;
  std::string vertex_factors;
  std::vector<std::string> vertex_generators;
  std::map<std::string, int> brauer_dims;           // candidate mu -> dim
  std::map<std::string, std::int64_t> character;    // cycle type -> value
  std::vector<std::string> phi_constituents;
  bool matched = false;
};

struct DecompositionReport {
  int n = 0;
  std::vector<ComponentReport> components;
  bool all_matched = false;
  bool trace_route_agrees = true;  // cross-check where |Q| <= 32
};

struct CharacterRow {
  MuLabel mu;
  std::vector<std::string> constituents;
  std::map<std::string, std::int64_t> values;
  std::int64_t dimension = 0;
};

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  std::vector<ComponentReport> components;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

std::vector<EnumerationRow> cmd_enumerate(int n);
DecompositionReport cmd_decompose(int n, const PipelineOptions& opts = {});
std::vector<CharacterRow> cmd_characters(int n, const std::optional<MuLabel>& only = {});
VerificationReport cmd_verify(int n, const PipelineOptions& opts = {});

// Deterministic renderings; wall-clock timings are reported separately
// on stderr so these stay byte-for-byte reproducible.
std::string render_text(const std::vector<EnumerationRow>& rows);
std::string render_text(const DecompositionReport& report);
std::string render_text(const std::vector<CharacterRow>& rows, int n);
std::string render_text(const VerificationReport& report);

std::string render_json(const std::vector<EnumerationRow>& rows, int n);
std::string render_json(const DecompositionReport& report);
std::string render_json(const std::vector<CharacterRow>& rows, int n);
std::string render_json(const VerificationReport& report);

}  // namespace matchmod
