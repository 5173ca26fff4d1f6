#include "braidcat/laws.hpp"

#include <json.hpp>

namespace braidcat {

std::string law_report_text(const std::vector<LawReport>& reports) {
  std::ostringstream os;
  for (const LawReport& r : reports) {
    os << (r.pass() ? "pass" : "FAIL") << " " << r.instance << " " << r.law << " ("
       << r.cases << " cases";
    if (!r.pass()) os << ", " << r.failures.size() << " failures";
    os << ")\n";
    for (const std::string& f : r.failures) os << "  counterexample: " << f << "\n";
  }
  return os.str();
}

std::string law_report_json(const std::vector<LawReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const LawReport& r : reports) {
    nlohmann::ordered_json item;
    item["law"] = r.law;
    item["instance"] = r.instance;
    item["cases"] = r.cases;
    item["pass"] = r.pass();
    item["failures"] = r.failures;
    arr.push_back(std::move(item));
  }
  return arr.dump(2);
}

}  // namespace braidcat
