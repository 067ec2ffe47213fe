#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wschub/error.hpp"
#include "wschub_cli/serialize.hpp"

namespace wschub::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitResourceCap = 3,
  kExitRouteMismatch = 4,
};

/// Parses argv and runs one subcommand. Never throws; every failure maps to
/// an exit code with a message on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// --max-vertices if given, else WSCHUB_MAX_VERTICES, else the library default.
/// Throws DomainError on a malformed environment value.
std::size_t resolve_vertex_cap(std::optional<std::size_t> flag);

/// Throws DomainError unless 0 < d < n, there are n non-negative weights and a >= 1.
void validate_space(const Space& s);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CheckOptions {
  std::uint64_t seed = 1;
  std::size_t cap = 0;
  bool corrupt = false;  // perturb one structure constant (negative control)
};

/// Every verification suite that applies to the space.
std::vector<SuiteResult> run_checks(const Space& s, const CheckOptions& options);

/// Both constant routes on the selected pairs (all pairs when a filter is
/// empty). Throws RouteMismatch listing every differing entry.
struct ConstantsOptions {
  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  std::size_t cap = 0;
  bool corrupt = false;
};

class RouteMismatch : public Error {
 public:
  using Error::Error;
};

/// Nonzero constants only, ordered by (λ, μ, ν) in vertex order.
std::vector<ConstantEntry> compute_constants(const Space& s, const ConstantsOptions& options);

}  // namespace wschub::cli
