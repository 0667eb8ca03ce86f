#pragma once

#include <string>
#include <vector>

#include "aqg/core/report.hpp"
#include "aqg/examples/fixtures.hpp"

namespace aqg {

enum class Backend { exact, floating };

const char* to_string(Backend b);
Backend parse_backend(const std::string& name);

struct SuiteOptions {
  unsigned long long seed = 42;
  Backend backend = Backend::exact;
  double tolerance = kDefaultTolerance;
  std::vector<unsigned> primes{2, 3, 5, 7};
  std::size_t random_elements = 100;
  std::size_t random_schwartz = 50;
};

/// function_algebra and group_algebra of Z2, Z3, Z4, Z2xZ2, S3, then the
/// trivial group and the Sweedler fixture.
std::vector<ExactQuantumGroupPtr> finite_fixtures();

/// axioms, duality, inversion, convolution, plancherel, types, group-like,
/// laurent, padic, oracle.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws PreconditionError for an unknown name.
CheckReport run_suite(const std::string& name, const SuiteOptions& options);

/// Runs the suites in the given order, expanding "all".
CheckReport run_suites(const std::vector<std::string>& names, const SuiteOptions& options);

/// Axiom checks for an arbitrary quantum group, in the chosen backend.
CheckReport axioms_report(const QuantumGroupData<Cyclotomic>& data, const SuiteOptions& options);

// Individual checks, shared with the acceptance runner.
CheckReport inversion_checks(const SuiteOptions& options);
CheckReport lemma_checks(const SuiteOptions& options);
CheckReport convolution_checks(const SuiteOptions& options);
CheckReport plancherel_checks(const SuiteOptions& options);
CheckReport duality_checks(const SuiteOptions& options);
CheckReport type_checks(const SuiteOptions& options);
CheckReport group_like_checks(const SuiteOptions& options);
CheckReport laurent_checks(const SuiteOptions& options);
CheckReport padic_golden_checks(const SuiteOptions& options);
CheckReport padic_convolution_checks(const SuiteOptions& options);
CheckReport padic_plancherel_checks(const SuiteOptions& options);
CheckReport padic_structure_checks(const SuiteOptions& options);
CheckReport padic_group_like_checks(const SuiteOptions& options);
CheckReport riemann_oracle_checks(const SuiteOptions& options);
CheckReport dft_oracle_checks(const SuiteOptions& options);

}  // namespace aqg
