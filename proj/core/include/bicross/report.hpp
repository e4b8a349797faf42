#ifndef BICROSS_REPORT_HPP
#define BICROSS_REPORT_HPP

#include <string>
#include <vector>

namespace bicross {

enum class Status { kPass, kFail, kSkip };

std::string status_str(Status s);

/// One verified condition. Rendered as
///   CHECK <id> <PASS|FAIL|SKIP> [gen=<names>] [witness=<canonical element>]
struct CheckLine {
  std::string id;
  Status status = Status::kPass;
  std::string gens;     // generators involved, comma separated
  std::string witness;  // canonical rendering of the offending residual
  std::string note;     // free-form remark (skips say why)

  std::string render() const;
};

struct Report {
  std::string title;
  std::vector<CheckLine> lines;

  void pass(std::string id, std::string gens = "");
  void fail(std::string id, std::string gens, std::string witness);
  void skip(std::string id, std::string note);
  void merge(const Report& other, const std::string& prefix = "");

  bool all_passed() const;
  int failures() const;
  /// Deterministic order: sorted by check id (stable).
  void sort();
  std::string render() const;
};

using MorphismReport = Report;
using ActionReport = Report;
using CoactionReport = Report;

}  // namespace bicross

#endif
