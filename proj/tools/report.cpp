#include "report.hpp"

#include <ostream>

namespace qinv::cli {

namespace {

struct Counts {
  std::size_t entries = 0, failed = 0, variants = 0, variants_failed = 0;
};

Counts count(const std::vector<Suite>& suites) {
  Counts c;
  for (const Suite& s : suites) {
    c.entries += s.entries.size();
    for (const Entry& e : s.entries) c.failed += e.pass ? 0 : 1;
    c.variants += s.variants.size();
    for (const Entry& e : s.variants) c.variants_failed += e.pass ? 0 : 1;
  }
  return c;
}

nlohmann::ordered_json entry_json(const Entry& e, bool verbose) {
  nlohmann::ordered_json j;
  j["citation"] = e.citation;
  j["instance"] = e.instance;
  if (!e.pass || verbose) j["residual"] = e.residual.empty() ? "0" : e.residual;
  j["pass"] = e.pass;
  return j;
}

}  // namespace

bool Report::pass() const {
  Counts c = count(suites);
  return c.failed == 0 && (!strict_paper || c.variants_failed == 0);
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json out;
  out["config"] = config;
  out["suites"] = nlohmann::ordered_json::array();
  for (const Suite& s : suites) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["entries"] = nlohmann::ordered_json::array();
    for (const Entry& e : s.entries) js["entries"].push_back(entry_json(e, verbose));
    if (!s.variants.empty()) {
      js["variants"] = nlohmann::ordered_json::array();
      for (const Entry& e : s.variants) js["variants"].push_back(entry_json(e, verbose));
    }
    if (!s.notes.empty()) js["notes"] = s.notes;
    out["suites"].push_back(std::move(js));
  }
  Counts c = count(suites);
  out["summary"] = {{"suites", suites.size()},         {"entries", c.entries},
                    {"failed", c.failed},              {"variants", c.variants},
                    {"variants_failed", c.variants_failed}, {"strict_paper", strict_paper},
                    {"pass", pass()}};
  return out;
}

void Report::write_text(std::ostream& os) const {
  auto line = [&](const char* tag, const Entry& e) {
    os << "  " << tag << (e.pass ? "ok  " : "FAIL") << "  " << e.citation;
    if (!e.instance.empty()) os << " | " << e.instance;
    os << '\n';
    if (!e.pass || verbose) os << "        residual: " << (e.residual.empty() ? "0" : e.residual) << '\n';
  };
  os << "config: " << config.dump() << '\n';
  for (const Suite& s : suites) {
    os << "== " << s.name << '\n';
    for (const Entry& e : s.entries) line("", e);
    for (const Entry& e : s.variants) line("variant ", e);
    for (const std::string& n : s.notes) os << "  note: " << n << '\n';
  }
  Counts c = count(suites);
  os << "summary: " << suites.size() << " suites, " << c.entries << " entries, " << c.failed << " failed";
  if (c.variants) os << "; " << c.variants << " printed readings, " << c.variants_failed << " disagree";
  os << (strict_paper ? " (strict)" : "") << " -> " << (pass() ? "PASS" : "FAIL") << '\n';
}

}  // namespace qinv::cli
