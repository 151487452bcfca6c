#pragma once

#include <optional>

#include "ochar/block_decomp.hpp"
#include "ochar/character.hpp"
#include "ochar/free_flag.hpp"

namespace ochar {

/// Result of applying one of the tensor functors.
struct FunctorResult {
    enum class Kind { SimpleDecomposition, DeltaFlag, NablaFlag, Zero };

    Kind kind;
    std::optional<DecompositionResult> decomposition;
    std::optional<FreePresentation> flag;

    static FunctorResult from_g(DecompositionResult d);
    static FunctorResult delta_flag(FreePresentation fp);
    static FunctorResult nabla_flag(FreePresentation fp);
};

/// G_m n: composition multiplicities of the principal-block projection of
/// the tensor product.
DecompositionResult apply_g(const Character& m, const Character& n);

/// F_m n on a (parabolic) flag presentation n. For each generator weight nu
/// of n and mu in the support of m there is a candidate generator nu - mu
/// with multiplicity eval(m, mu); candidate Levi blocks whose highest weight
/// lies in the dot orbit of 0 survive truncation at 0 and block projection
/// (every orbit weight is <= 0 and string weights only descend). Block
/// multiplicities are counted as string tops:
///   n_h = mult(h) - mult(h + gamma)  (sl2 Levi; plain mult for the Borel),
/// where mult(w) = sum_nu mult(nu) * eval(m, nu - w), a finite sum. A
/// negative count means the candidates do not regroup into Levi strings
/// (m is not an O^p object) and throws RegroupError.
FreePresentation apply_f(const Character& m, const FreePresentation& n);

/// H_m on a dual-Verma-flagged presentation: the Chevalley dual is invisible
/// at character level, so the payload is apply_f on the same data, tagged as
/// a nabla flag.
FunctorResult apply_h(const Character& m, const FreePresentation& n_as_nabla_flag);

/// Multiplicity shadow of the surjection from G_{Delta(0)}: every entry of
/// apply_g(ch Delta(0), m) must dominate the corresponding principal-block
/// multiplicity of m.
bool check_dominance(const Character& m);

}  // namespace ochar
