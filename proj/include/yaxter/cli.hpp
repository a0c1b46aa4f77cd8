#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "yaxter/error.hpp"
#include "yaxter/su2_criticality.hpp"

namespace yaxter::cli {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr double kDefaultHardTolerance = 1e-12;
inline constexpr double kYbeTolerance = 1e-10;
inline constexpr double kAsymptoticTolerance = 1e-5;

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kBadInput = 2, kDomainError = 3, kIoError = 4 };

int exit_code_for(ErrorKind kind);

/// YAXTER_TOL if set, otherwise 1e-12. Throws BadParams on a malformed value.
double hard_tolerance_from_env();

/// Rounds to `digits` significant digits; −0 becomes 0.
double round_sig(double x, int digits = 12);

/// JSON number rounded to 12 significant digits, null for non-finite values.
nlohmann::json number(double x);

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool hard = true;  // report-only checks never affect the exit code
  std::string note;

  bool passed() const { return residual <= tolerance; }
};

struct VerifyParams {
  double phi = 0.0;
  int epsilon = 1;
  double q = 2.0;
  double eta_phase = 0.0;
  double c = 1.0;
  double a = 1.0;
  std::size_t sites = 3;
};

struct VerificationReport {
  std::string family;
  nlohmann::json parameters;
  std::vector<Check> checks;

  bool passed() const;  // all hard checks pass
  nlohmann::json to_json(bool with_timestamp = false) const;
};

/// Families: mtype, sixvertex, tldiag, tlmid, permutation, rational-yang,
/// rational-tl. Throws UnknownFamily or BadParams.
VerificationReport verify_family(const std::string& family, const VerifyParams& params, double hard_tolerance);

/// Header `theta,q,gap,concurrence,berry_plus,energy_split`, one line per
/// record, 12 significant digits.
std::string scan_csv(const std::vector<ScanRecord>& records);

/// Entry point shared by the executable and the tests; args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yaxter::cli
