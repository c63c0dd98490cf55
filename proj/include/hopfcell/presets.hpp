#ifndef HOPFCELL_PRESETS_HPP
#define HOPFCELL_PRESETS_HPP

#include "hopfcell/bigcell.hpp"

namespace hopfcell {

/// The shipped algebras.  q-presets default to Q(q); passing a cyclotomic
/// context specializes q to a primitive root of unity.  All presets are
/// memoized and verified at first load (confluence to degree 6, Hopf axioms
/// to degree 3); a verification failure is a packaging bug and throws.

HopfPtr preset_slq2(const FieldCtx& ctx = FieldCtx::rational_function());
HopfPtr preset_bq(const FieldCtx& ctx = FieldCtx::rational_function());
HopfPtr preset_bq_prime(const FieldCtx& ctx = FieldCtx::rational_function());
HopfPtr preset_hq(const FieldCtx& ctx = FieldCtx::rational_function());
HopfPtr preset_b_of_q(const FieldCtx& ctx = FieldCtx::rational_function());
HopfPtr preset_bprime_of_q(const FieldCtx& ctx = FieldCtx::rational_function());
HopfPtr preset_sl2j(const FieldCtx& ctx = FieldCtx::rational());
HopfPtr preset_laurent(const std::string& gen = "t",
                       const FieldCtx& ctx = FieldCtx::rational_function());
HopfPtr preset_group(const GroupPresentation& g,
                     const FieldCtx& ctx = FieldCtx::rational_function());
/// SLq2 * k[z, z^-1].
HopfPtr preset_slq2_free_laurent_z(const FieldCtx& ctx = FieldCtx::rational_function());
/// SLq2 (x) SLq2 (host of the deformation example).
HopfPtr preset_slq2_tensor_square(const FieldCtx& ctx = FieldCtx::rational_function());

/// Lookup by CLI name: slq2, bq, bq-prime, hq, b-of-q, bprime-of-q, sl2j,
/// laurent-z, laurent-t, kf2, kz2, slq2-free-kz, slq2-tensor-square.
HopfPtr preset_by_name(const std::string& name,
                       const FieldCtx& ctx = FieldCtx::rational_function());
std::vector<std::string> preset_names();

/// The embedding iota : H(q) -> SLq2 * k[z,z^-1] (construction verifies all
/// H(q) relations map to zero).
HopfMap iota_embedding(const FieldCtx& ctx = FieldCtx::rational_function());

/// Shipped big-cell data with their filtration gradings and registered
/// dominant-letter witnesses.
BigCellDatum slq2_datum(const FieldCtx& ctx = FieldCtx::rational_function());
BigCellDatum hq_datum(const FieldCtx& ctx = FieldCtx::rational_function());
BigCellDatum slq2_tensor_square_datum(const FieldCtx& ctx = FieldCtx::rational_function());
/// A pointed Hopf algebra is its own big cell: H = B = B' = kG.
BigCellDatum group_datum(const GroupPresentation& g,
                         const FieldCtx& ctx = FieldCtx::rational_function());
BigCellDatum datum_by_name(const std::string& name,
                           const FieldCtx& ctx = FieldCtx::rational_function());
std::vector<std::string> datum_names();

/// R(F) over the preset host, F = diag(q^-1, q).
const RFAlgebra& rf_preset(const FieldCtx& ctx = FieldCtx::rational_function());

}  // namespace hopfcell

#endif
