#ifndef CLOPEN_REPORT_HPP
#define CLOPEN_REPORT_HPP

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

namespace clopen {

using json = nlohmann::json;

/// Outcome of one named check on one instance.
///
/// `items` holds the individual statements a suite evaluated; `pass` is
/// their conjunction unless the suite says otherwise. `witness` is null
/// on success and carries the counterexample on failure.
struct Report {
  Report() = default;
  Report(std::string check_name, std::string instance_name)
      : check(std::move(check_name)), instance(std::move(instance_name)) {}

  std::string check;
  std::string instance;
  bool pass = true;
  json witness = nullptr;
  std::map<std::string, bool> items;

  void record(const std::string& item, bool ok) {
    items[item] = ok;
    if (!ok) {
      pass = false;
      if (witness.is_null()) witness = json::object();
      witness["failed"].push_back(item);
    }
  }

  void fail_with(json w) {
    pass = false;
    witness = std::move(w);
  }

  bool item(const std::string& name) const {
    auto it = items.find(name);
    return it != items.end() && it->second;
  }
};

inline json to_json(const Report& r) {
  return json{{"check", r.check},
              {"instance", r.instance},
              {"pass", r.pass},
              {"witness", r.witness}};
}

}  // namespace clopen

#endif  // CLOPEN_REPORT_HPP
