#ifndef HOPFCELL_COMODULE_HPP
#define HOPFCELL_COMODULE_HPP

#include "hopfcell/hopf.hpp"
#include "hopfcell/linalg.hpp"

namespace hopfcell {

struct ComoduleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// n x n matrix over H with Delta(x_ij) = sum_k x_ik (x) x_kj and
/// eps(x_ij) = delta_ij; both identities are verified at construction.
class MultMatrix {
 public:
  MultMatrix(HopfPtr host, std::vector<std::vector<NCPoly>> entries);

  const HopfPtr& host() const { return host_; }
  std::size_t dim() const { return entries_.size(); }
  const NCPoly& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const std::vector<std::vector<NCPoly>>& entries() const { return entries_; }

 private:
  HopfPtr host_;
  std::vector<std::vector<NCPoly>> entries_;
};

/// Finite-dimensional right H-comodule with coaction
/// alpha(v_i) = sum_j v_j (x) x_ji.
struct Comodule {
  MultMatrix matrix;
  std::vector<std::string> basis_labels;

  const HopfPtr& host() const { return matrix.host(); }
  std::size_t dim() const { return matrix.dim(); }
};

Comodule make_comodule(HopfPtr host, std::vector<std::vector<NCPoly>> entries,
                       std::vector<std::string> labels = {});
Comodule parse_comodule(HopfPtr host, const std::vector<std::vector<std::string>>& entries);
Comodule trivial_comodule(const HopfPtr& host);

/// True iff the n^2 coefficients are linearly independent (exact rank).
bool is_simple(const Comodule& v);

Comodule tensor(const Comodule& v, const Comodule& w);
Comodule dual(const Comodule& v);
Comodule restrict_comodule(const Comodule& v, const HopfMap& f);

struct StableLine {
  ScalarVec coords;    // in the comodule basis, first nonzero = 1
  NCPoly grouplike;    // in the target of f
  long space_dim = 1;  // dimension of the solution space for this group-like
};

/// All f-stable lines with weights among the candidate group-likes.
std::vector<StableLine> stable_lines(const Comodule& v, const HopfMap& f,
                                     const std::vector<NCPoly>& candidates);

/// Normal forms of products of <= max_len declared group-likes of h,
/// deduplicated; includes 1.
std::vector<NCPoly> grouplike_candidates(const HopfPtr& h, int max_len);

/// The group-like weight of the unique stable line.  Throws ComoduleError when
/// no line is found among the candidates (inconclusive: candidate set too
/// small) or when the line is not unique.
NCPoly highest_weight_grouplike(const Comodule& v, const HopfMap& f,
                                const std::vector<NCPoly>& candidates);

// --------------------------------------------------------------------------
// R(F): the comodule algebra on x_1..x_n, y_1..y_n with relations
//   sum_k x_k y_k = 0   and   sum_{k,l} F_kl y_k x_l = F_n1,
// graded by the free monoid on (alpha, beta), with coaction
//   rho(x_i) = sum_k x_k (x) u_ki,  rho(y_i) = sum_k y_k (x) v_ki.
// --------------------------------------------------------------------------

/// Multidegree: a word over {0 = alpha, 1 = beta}.
using MultiDeg = std::vector<int>;
std::string multideg_str(const MultiDeg& d);

class RFAlgebra {
 public:
  /// host must present H(F) for the same matrix F (the shipped preset uses
  /// n = 2, F = diag(q^-1, q)).  Builds a degree-6-confluent rewrite system
  /// by bounded completion and verifies the coaction kills both relations
  /// and that each rule is multidegree-homogeneous.
  RFAlgebra(HopfPtr host, std::vector<std::vector<Scalar>> f_matrix);

  const AlgebraPtr& algebra() const { return alg_; }
  const HopfPtr& host() const { return host_; }
  int n() const { return n_; }

  MultiDeg multidegree(const Word& w) const;
  /// Irreducible words of the given multidegree, in term order.
  std::vector<Word> component_basis(const MultiDeg& lambda) const;
  /// rho(w) in R(F) (x) H.
  TensorPoly coaction(const Word& w) const;
  TensorPoly coaction(const NCPoly& p) const;
  /// The graded piece R(F)_lambda as a verified comodule.
  Comodule component(const MultiDeg& lambda) const;

  /// Psi: x_i -> u_1i, y_i -> v_ni (verified colinear on generators at
  /// construction for the preset host).
  NCPoly psi(const Word& w) const;
  NCPoly psi(const NCPoly& p) const;

 private:
  HopfPtr host_;
  AlgebraPtr alg_;
  int n_;
  std::vector<std::vector<Scalar>> f_;
  std::vector<TensorPoly> rho_gen_;  // per generator, in R (x) H
  std::vector<NCPoly> psi_gen_;
};

}  // namespace hopfcell

#endif
