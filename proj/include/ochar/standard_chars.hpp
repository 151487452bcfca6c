#pragma once

#include <map>
#include <memory>

#include "ochar/character.hpp"
#include "ochar/root_data.hpp"

namespace ochar {

/// Verma character: eval(mu) = kostant(lambda - mu), single ceiling lambda.
Character verma_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda);

/// Dual Verma character; the Chevalley dual preserves characters.
Character nabla_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda);

bool is_levi_dominant(const RootSystem& rs, const ParabolicData& p, const Weight& lambda);

/// Character of the generalised Verma module: the alternating sum
/// sum_{w in W_S} (-1)^{l(w)} ch Delta(w.lambda), wrapped so that any
/// negative evaluation (which would signal a convention bug) throws.
/// Rejects lambda that is not dominant integral for the Levi.
Character parabolic_verma_char(std::shared_ptr<const RootSystem> rs, const ParabolicData& p,
                               const Weight& lambda);

/// Simple highest-weight character via unit-coefficient inclusion-exclusion
/// over the Bruhat interval below lambda's minimal coset representative,
/// relative to the antidominant member of its dot orbit. Valid in rank <= 2,
/// where the relevant Kazhdan-Lusztig polynomials are trivial.
Character simple_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda);

/// Verma-flag multiset of the projective cover P(lambda) in a regular
/// integral block: {y.lambda_a : y >= x} where lambda = x.lambda_a.
/// Rejects singular weights.
std::map<Weight, Int> projective_flag(const RootSystem& rs, const Weight& lambda);

/// Character of P(lambda): sum of the Verma characters in its flag.
Character projective_char(std::shared_ptr<const RootSystem> rs, const Weight& lambda);

}  // namespace ochar
