#include "bicross/report.hpp"

#include <algorithm>
#include <sstream>

namespace bicross {

std::string status_str(Status s) {
  switch (s) {
    case Status::kPass:
      return "PASS";
    case Status::kFail:
      return "FAIL";
    default:
      return "SKIP";
  }
}

std::string CheckLine::render() const {
  std::string s = "CHECK " + id + " " + status_str(status);
  if (!gens.empty()) s += " gen=" + gens;
  if (!witness.empty()) s += " witness=" + witness;
  if (!note.empty()) s += " note=" + note;
  return s;
}

void Report::pass(std::string id, std::string gens) {
  lines.push_back({std::move(id), Status::kPass, std::move(gens), "", ""});
}

void Report::fail(std::string id, std::string gens, std::string witness) {
  lines.push_back(
      {std::move(id), Status::kFail, std::move(gens), std::move(witness), ""});
}

void Report::skip(std::string id, std::string note) {
  lines.push_back({std::move(id), Status::kSkip, "", "", std::move(note)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (CheckLine l : other.lines) {
    if (!prefix.empty()) l.id = prefix + "." + l.id;
    lines.push_back(std::move(l));
  }
}

bool Report::all_passed() const {
  for (const auto& l : lines)
    if (l.status == Status::kFail) return false;
  return true;
}

int Report::failures() const {
  int n = 0;
  for (const auto& l : lines) n += l.status == Status::kFail;
  return n;
}

void Report::sort() {
  std::stable_sort(lines.begin(), lines.end(),
                   [](const CheckLine& a, const CheckLine& b) {
                     return a.id < b.id;
                   });
}

std::string Report::render() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l.render() << "\n";
  return os.str();
}

}  // namespace bicross
