#pragma once

// Machine-readable run reports. The serialized form is a JSON object with one
// top-level key per line (and one check per line), so reports diff cleanly:
//
//   {
//   "operation": "pipeline",
//   "inputs": {"graph":"fnv1a:...","td":"fnv1a:..."},
//   "k": 2,
//   ...
//   "checks": [
//   {"name":"width_out","bound_name":"2k-1","measured":3,"bound":3,"pass":true},
//   ...
//   ],
//   "pass": true
//   }

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coarsetw/checks.hpp"
#include "coarsetw/pipeline.hpp"
#include "coarsetw/simwidth.hpp"

namespace coarsetw {

using Json = nlohmann::ordered_json;

std::string fnv1a_digest(std::string_view bytes);

class Report {
 public:
  explicit Report(std::string operation);

  void add_input(const std::string& name, std::string_view bytes);
  void set(const std::string& key, Json value);
  void add_check(Check c);
  void add_checks(const std::vector<Check>& checks);

  const std::string& operation() const { return operation_; }
  const std::vector<Check>& checks() const { return checks_; }
  const Json& values() const { return values_; }
  bool passed() const { return all_pass(checks_); }

  Json to_json() const;
  void write(std::ostream& out) const;
  std::string to_string() const;

 private:
  std::string operation_;
  Json inputs_ = Json::object();
  Json values_ = Json::object();
  std::vector<Check> checks_;
};

Json check_to_json(const Check& c);

// Fills the measured constants and checks of a pipeline run into `r`.
void describe_pipeline(Report& r, const PipelineReport& p);
void describe_sim_pipeline(Report& r, const SimPipelineReport& p);

}  // namespace coarsetw
