#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gqs {

enum class ErrorCode {
  invalid_input,
  infeasible,
  rank_deficient,
  not_stable,
  resonant_spectrum,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct RankReport {
  int numerical_rank = 0;
  std::vector<double> singular_values;
  double threshold = 0.0;
};

class RankError : public Error {
 public:
  RankError(const std::string& what, RankReport report)
      : Error(ErrorCode::rank_deficient, what), report_(std::move(report)) {}

  const RankReport& report() const { return report_; }

 private:
  RankReport report_;
};

}  // namespace gqs
