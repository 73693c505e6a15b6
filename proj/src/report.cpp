#include "coarsetw/report.hpp"

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace coarsetw {

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

Report::Report(std::string operation) : operation_(std::move(operation)) {}

void Report::add_input(const std::string& name, std::string_view bytes) { inputs_[name] = fnv1a_digest(bytes); }

void Report::set(const std::string& key, Json value) { values_[key] = std::move(value); }

void Report::add_check(Check c) { checks_.push_back(std::move(c)); }

void Report::add_checks(const std::vector<Check>& checks) {
  checks_.insert(checks_.end(), checks.begin(), checks.end());
}

Json check_to_json(const Check& c) {
  return Json{{"name", c.name}, {"bound_name", c.bound_name}, {"measured", c.measured}, {"bound", c.bound}, {"pass", c.pass}};
}

Json Report::to_json() const {
  Json j = Json::object();
  j["operation"] = operation_;
  j["inputs"] = inputs_;
  for (const auto& [key, value] : values_.items()) j[key] = value;
  Json checks = Json::array();
  for (const auto& c : checks_) checks.push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  j["pass"] = passed();
  return j;
}

void Report::write(std::ostream& out) const {
  const Json j = to_json();
  out << "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : j.items()) {
    out << Json(key).dump() << ": ";
    if (key == "checks") {
      out << "[";
      for (std::size_t c = 0; c < value.size(); ++c) out << (c == 0 ? "\n" : ",\n") << value[c].dump();
      out << (value.empty() ? "]" : "\n]");
    } else {
      out << value.dump();
    }
    out << (++i < j.size() ? ",\n" : "\n");
  }
  out << "}\n";
}

std::string Report::to_string() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

void describe_pipeline(Report& r, const PipelineReport& p) {
  r.set("k", p.k);
  r.set("d", p.d);
  r.set("k_effective", p.k_effective);
  r.set("shape", p.shape == Shape::path ? "path" : "tree");
  r.set("components", p.components);
  r.set("input_order", p.input.order());
  r.set("augmented_edges_added", p.added_edges.size());
  r.set("output_order", p.output.order());
  r.set("width_out", p.width_out);
  r.set("stage_constants", Json{{"augment", p.augment_constant},
                                {"quotient", p.quotient_constant},
                                {"augment_per_component", p.augment_constants},
                                {"quotient_per_component", p.quotient_constants}});
  r.set("composed_constant", p.composed_constant);
  r.set("composed_per_component", p.composed_constants);
  r.set("claimed_bound", p.claimed_bound);
  r.set("partition_diameter", p.partition_diameter);
  r.set("td_domination", p.td_domination ? Json(*p.td_domination) : Json(nullptr));
  r.set("augmented_independence", p.augmented_independence);
  r.set("output_independence", p.output_independence);
  r.set("bounds", Json{{"2k-1", 2 * p.k_effective - 1},
                       {"q(c+2)", p.composition_bound},
                       {"(d+2)*F", p.claimed_bound}});
  r.add_checks(p.checks);
}

void describe_sim_pipeline(Report& r, const SimPipelineReport& p) {
  r.set("sim_width", p.sim_width);
  r.set("centred_k", p.centred_k);
  r.set("td_width", width(p.td));
  r.set("td_domination", p.td_metrics.domination_number());
  r.set("max_partition_diameter", p.max_partition_diameter);
  r.set("bounds_sim", Json{{"6k", p.centred_k}, {"12k-1", 2 * p.centred_k - 1}});
  r.add_checks(p.checks);
  describe_pipeline(r, p.pipeline);
}

}  // namespace coarsetw
