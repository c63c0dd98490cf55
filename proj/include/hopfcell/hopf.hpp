#ifndef HOPFCELL_HOPF_HPP
#define HOPFCELL_HOPF_HPP

#include "hopfcell/tensorpoly.hpp"

#include <map>
#include <tuple>

namespace hopfcell {

struct HopfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Verify { Strict, Deferred };

struct GroupPresentation {
  enum class Kind { Free, FreeAbelian };
  Kind kind = Kind::Free;
  std::vector<std::string> gen_names;

  int rank() const { return static_cast<int>(gen_names.size()); }
  static GroupPresentation free_group(std::vector<std::string> names) {
    return {Kind::Free, std::move(names)};
  }
  static GroupPresentation free_abelian(std::vector<std::string> names) {
    return {Kind::FreeAbelian, std::move(names)};
  }
};

/// Presented Hopf algebra: generator tables for the comultiplication, counit
/// and antipode on top of a presented algebra.  Tables are stored expanded
/// with all legs irreducible.
struct PresentedHopf : PresentedAlgebra {
  using DeltaRow = std::vector<std::tuple<Word, Word, Scalar>>;
  std::vector<DeltaRow> delta_gen;
  std::vector<Scalar> epsilon_gen;
  std::vector<NCPoly> antipode_gen;
  std::vector<NCPoly> grouplikes;  // declared and certified, in normal form
};

using HopfPtr = std::shared_ptr<const PresentedHopf>;

/// Builds and (with Verify::Strict) verifies: Delta/epsilon extend to algebra
/// maps and S to an anti-algebra map modulo every rule, and each declared
/// group-like g satisfies Delta(g) = g(x)g, eps(g) = 1.  Throws HopfError
/// naming the failing rule or element.
HopfPtr make_hopf(PresentedAlgebra base, std::vector<PresentedHopf::DeltaRow> delta,
                  std::vector<Scalar> epsilon, std::vector<NCPoly> antipode,
                  std::vector<NCPoly> grouplikes, Verify verify = Verify::Strict);

/// Same, with everything written in the presentation DSL.
struct HopfSpec {
  FieldCtx ctx;
  std::vector<std::string> generators;
  std::vector<std::string> precedence;  // empty = declaration order
  std::vector<std::string> rules;       // oriented, "lhs -> rhs"
  std::vector<std::string> relators;    // unoriented (= 0), auto-oriented in order
  std::map<std::string, std::string> delta;
  std::map<std::string, std::string> epsilon;
  std::map<std::string, std::string> antipode;
  std::vector<std::string> grouplikes;
  std::vector<std::pair<std::string, std::string>> inverse_pairs;
  std::string label = "custom";
  int confluence_degree = 6;  // checked at build; HopfError on failure
};
HopfPtr build_hopf(const HopfSpec& spec, Verify verify = Verify::Strict);

// --- structure maps, extended to arbitrary elements -------------------------

TensorPoly delta(const HopfPtr& h, const NCPoly& p);
Scalar counit(const HopfPtr& h, const NCPoly& p);
NCPoly antipode(const HopfPtr& h, const NCPoly& p);
TriplePoly delta_left(const HopfPtr& h, const TensorPoly& t);   // (Delta (x) id)
TriplePoly delta_right(const HopfPtr& h, const TensorPoly& t);  // (id (x) Delta)
TriplePoly delta2(const HopfPtr& h, const NCPoly& p);

// --- bounded-degree axiom verification --------------------------------------

struct AxiomFailure {
  Word word;
  std::string axiom;
  std::string detail;
};

struct HopfAxiomReport {
  int max_deg = 0;
  long words_checked = 0;
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Verifies coassociativity, the counit laws and both antipode identities on
/// every irreducible word of length <= max_deg, plus the declared group-like
/// certificates.  Failures are reported, never thrown.
HopfAxiomReport check_hopf_axioms(const HopfPtr& h, int max_deg);

// --- Hopf algebra maps -------------------------------------------------------

struct HopfMap {
  HopfPtr source, target;
  std::vector<NCPoly> images;  // per source generator, normalized in target
};

/// Verifies every source rule maps to zero and that the map commutes with
/// Delta and epsilon on generators.  Throws HopfError naming the failure.
HopfMap make_hopf_map(HopfPtr source, HopfPtr target, std::vector<NCPoly> images,
                      Verify verify = Verify::Strict);
HopfMap make_hopf_map(HopfPtr source, HopfPtr target,
                      const std::map<std::string, std::string>& images,
                      Verify verify = Verify::Strict);
HopfMap identity_map(const HopfPtr& h);
HopfMap compose(const HopfMap& outer, const HopfMap& inner);

NCPoly apply_map(const HopfMap& f, const NCPoly& p);
NCPoly apply_map(const HopfMap& f, const Word& w);
/// (f (x) g) applied leg-wise.
TensorPoly apply_map2(const HopfMap& f, const HopfMap& g, const TensorPoly& t);

// --- constructions -----------------------------------------------------------

/// Free product: disjoint union of presentations (clashing names from l get a
/// "_2" suffix).  Irreducible words are the alternating words in the factors'
/// augmentation bases.
HopfPtr free_product(const HopfPtr& h, const HopfPtr& l);

/// Tensor product: union plus cross-commutation rules (letters of l move past
/// letters of h).
HopfPtr tensor_product(const HopfPtr& h, const HopfPtr& l);

/// Group algebra kG.  Generators come in (g, g^-1) pairs; every generator is
/// group-like.  Letter convention: letter 2k is generator k, letter 2k+1 its
/// inverse.
HopfPtr group_algebra(const GroupPresentation& g, const FieldCtx& ctx);

}  // namespace hopfcell

#endif
