#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normalcone/adic.hpp"

namespace normalcone {

/// a_i = a_J(((f_1..f_{i-1}):f_i)/(f_1..f_{i-1})), left to right, stopping at
/// the first infinite value.
struct FilterRegularCertificate {
  std::vector<Polynomial> sequence;
  std::vector<std::optional<int>> a;  ///< nullopt = infinite
  bool filter_regular = false;
  std::optional<std::size_t> first_failure;  ///< 0-based
};
FilterRegularCertificate certify_filter_regular(const std::vector<Polynomial>& fs, const Ideal& J);

enum class BoundFormula { Main, Regular, Filtration, Hilbert };
std::string to_string(BoundFormula f);

struct BoundCertificate {
  int N = 1;
  BoundFormula formula = BoundFormula::Main;
  std::vector<int> a;             ///< a_1..a_r
  std::vector<int> ar;            ///< ar(f_1..f_i), i = 1..r
  std::optional<int> single_c;    ///< r = 1: max{a_1, ar(f_1) + 1}; r = 2: max{a_1 + a_2, ar..} + 1
  std::optional<int> delta;
  std::optional<int> p;
  std::vector<std::string> warnings;
};

/// max{sum 2^{i-1} a_i, ar(f_1), ..., ar(f_1..f_r)} + 1. Throws
/// PreconditionError when the sequence is not filter-regular.
BoundCertificate bound_main(const std::vector<Polynomial>& fs, const Ideal& J);
/// ar(f_1..f_r) + 1 for a regular sequence (all a_i = 0).
BoundCertificate bound_regular(const std::vector<Polynomial>& fs, const Ideal& J);
/// max{p, ar(I) + 1}; J must be m-primary.
BoundCertificate bound_via_hilbert(const std::vector<Polynomial>& fs, const Ideal& J, int p);

/// Generators mu*g of J^N (g a generator of J^N, mu a monomial) of degree at
/// most degree_cap.
std::vector<Polynomial> perturbation_basis(const Ideal& J, int N, int degree_cap);

/// count trials of r perturbations each; trial 0 is always zero. Trial t
/// draws coefficients in {-2..2} from an RNG stream seeded by (seed, t).
std::vector<std::vector<Polynomial>> sample_perturbation(const Ideal& J, int N, std::size_t r, std::size_t count,
                                                         std::uint64_t seed, std::optional<int> degree_cap = {});
/// The perturbation vector of a single trial (same stream as above).
std::vector<Polynomial> sample_trial(const std::vector<Polynomial>& basis, std::size_t r, std::uint64_t seed,
                                     std::uint64_t trial);

struct PerturbationOptions {
  /// Perturb only this index (0-based); all indices when unset.
  std::optional<std::size_t> single_index;
  std::optional<int> degree_cap;  ///< default N + 3
  int am_window = 2;              ///< r, s <= am_window; negative disables
  std::optional<int> hs_window;   ///< default max(N, ar) + 2
  unsigned threads = 0;           ///< 0: NORMALCONE_THREADS or hardware
};

struct PerturbationReport {
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  int N = 0;
  std::vector<Polynomial> eps;
  /// Outcomes; nullopt means not computed for this instance.
  std::optional<bool> filter_regular_preserved;
  std::optional<bool> initial_ideal_equal;
  std::optional<bool> artin_rees_equal;
  std::optional<bool> hilbert_equal;
  std::optional<bool> graded_lengths_dominated;
  std::optional<bool> am_equal;
  std::vector<std::optional<int>> a_perturbed;
  std::optional<std::string> error;  ///< resource or cap failure
  std::string detail;                ///< first failing check, if any

  bool passed() const;
};

/// Checks the invariance claims for f_i + eps_i on every trial.
std::vector<PerturbationReport> verify_invariance(const std::vector<Polynomial>& fs, const Ideal& J, int N,
                                                  std::size_t trials, std::uint64_t seed,
                                                  const PerturbationOptions& options = {});

/// Checks one explicit perturbation (trial index recorded as given).
PerturbationReport check_perturbation(const std::vector<Polynomial>& fs, const Ideal& J, int N,
                                      const std::vector<Polynomial>& eps, const PerturbationOptions& options = {});

struct DestabilizingWitness {
  std::vector<Polynomial> eps;
  std::size_t index = 0;     ///< 0-based prefix (f_1..f_{index+1}) whose in() changed
  int degree = 0;            ///< first graded degree where they differ
  std::size_t trial = 0;     ///< candidate number (structured candidates first)
  bool structured = false;
};
/// Structured candidates (variable powers and other monomials of J^N, and
/// monomial multiples of colon witnesses), then random trials.
std::optional<DestabilizingWitness> search_destabilizing(const std::vector<Polynomial>& fs, const Ideal& J, int N,
                                                         std::size_t trials, std::uint64_t seed);

struct HilbertIndexEstimate {
  int p_hat = 0;              ///< 1 + highest level with a change; 0 if none
  std::optional<int> changed_level;
  std::optional<int> first_differing_index;
  std::vector<Polynomial> witness;
  std::string status = "lower-bound";
};
/// Searches levels 1..n_window for perturbations changing HS(0..n_window).
HilbertIndexEstimate estimate_hilbert_index(const std::vector<Polynomial>& fs, const Ideal& J, int n_window,
                                            std::size_t trials, std::uint64_t seed);

/// Worker count: NORMALCONE_THREADS if set, else hardware concurrency.
unsigned default_threads();

}  // namespace normalcone
