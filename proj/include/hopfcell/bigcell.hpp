#ifndef HOPFCELL_BIGCELL_HPP
#define HOPFCELL_BIGCELL_HPP

#include "hopfcell/comodule.hpp"
#include "hopfcell/weight.hpp"

#include <optional>

namespace hopfcell {

struct BigCellError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A dense big cell candidate (B, B', Lambda) for H: the two pointed
/// quotients, the weight maps down to kLambda, sections nu/nu' of psi/psi' on
/// group-likes, and optional filtration gradings given as per-generator
/// letter weights.
struct BigCellDatum {
  std::string name;
  HopfPtr H, B, Bp, kLambda;
  HopfMap pi, pip;    // H -> B, H -> B'
  HopfMap psi, psip;  // B -> kLambda, B' -> kLambda
  GroupPresentation lambda;
  std::vector<Word> nu_pos, nu_neg;    // per Lambda generator, words in B
  std::vector<Word> nup_pos, nup_neg;  // words in B'
  std::optional<std::vector<long>> wt_H, wt_B, wt_Bp;
  /// Registered dominant letters with their induction witnesses (products of
  /// these witness any monoid word in the letters).
  std::vector<std::pair<WeightWord, NCPoly>> witness_table;

  bool has_gradings() const { return wt_H && wt_B && wt_Bp; }
};

/// nu(lambda): the group-like of B over lambda (normal form).
NCPoly nu(const BigCellDatum& d, const WeightWord& lambda);
NCPoly nu_prime(const BigCellDatum& d, const WeightWord& lambda);

/// theta = (pi (x) pi') o Delta.
TensorPoly theta(const BigCellDatum& d, const NCPoly& p);

long word_weight(const std::vector<long>& wt, const Word& w);

struct DegreeVerdict {
  long degree = 0;
  long dimension = 0;
  bool filtration_ok = true;
  bool injective = true;
  std::optional<NCPoly> kernel_witness;  // combination killed by q_s o theta
  std::vector<std::string> escapes;      // words whose image leaves W^{<=s}
};

struct GradedInjectivityReport {
  int max_deg = 0;
  int length_cutoff = 0;
  std::vector<DegreeVerdict> verdicts;
  bool injective_up_to_max() const {
    for (const auto& v : verdicts)
      if (!v.filtration_ok || !v.injective) return false;
    return true;
  }
};

/// Checks, for every grade s <= max_deg, that theta maps the degree-s slice
/// (irreducible words of weight s and length <= length_cutoff) into the
/// filtration part <= s, and that the composition with the degree-s
/// projection has full rank.  length_cutoff < 0 means max_deg.
GradedInjectivityReport graded_injectivity(const BigCellDatum& d, int max_deg,
                                           int length_cutoff = -1);

struct InducedSubspace {
  WeightWord weight;
  int cutoff = 0;
  std::vector<NCPoly> basis;
  bool stabilized = false;
  bool definitive_empty = false;  // degree-0 filtration argument applied
};

/// Exact solutions of (pi (x) id) Delta(x) = nu(lambda) (x) x over the span of
/// irreducible words of length <= cutoff.
InducedSubspace induce(const BigCellDatum& d, const WeightWord& lambda, int cutoff);

struct DominanceResult {
  enum class Status { Dominant, NotFoundUpTo, DefinitiveNotDominant };
  Status status = Status::NotFoundUpTo;
  std::optional<NCPoly> witness;  // theta(witness) = nu (x) nu'
  int cutoff = 0;
  std::string note;
};

DominanceResult is_dominant(const BigCellDatum& d, const WeightWord& lambda, int cutoff);

/// L(lambda): the unique simple subcomodule of the induced comodule, built by
/// closing the B'-stable line under the coaction.  Throws BigCellError when
/// the truncation is insufficient or simplicity fails.
Comodule simple_from_induced(const BigCellDatum& d, const WeightWord& lambda, int cutoff);

/// Highest B'-weight of a comodule over d.H, as a weight word (candidates are
/// nu'(mu) for |mu| <= candidate_len; default derives a bound from the matrix
/// entries).
WeightWord highest_weight(const BigCellDatum& d, const Comodule& v, int candidate_len = -1);

struct BigCellReport {
  std::string datum;
  int max_deg = 0;
  bool psi_pi_consistent = false;
  bool sections_ok = false;
  bool theta_injective = false;
  std::optional<GradedInjectivityReport> graded;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool verified() const { return failures.empty(); }
};

/// Axiom (1) psi o pi = psi' o pi' on generators, section checks for nu/nu'
/// on declared group-likes, and injectivity of theta up to max_deg (graded
/// when gradings are registered, brute-force kernel search otherwise).
BigCellReport check_bigcell(const BigCellDatum& d, int max_deg);

/// The kernel of theta intersected with the span of words of length <=
/// max_len (brute force; empty vector = injective on that span).
std::vector<NCPoly> theta_kernel(const BigCellDatum& d, int max_len);

}  // namespace hopfcell

#endif
