#pragma once

#include <cstdint>

#include "hasselab/models.hpp"

namespace hasselab {

// The two generators of the invariant ring, normalized so that:
//   n=2: A = -I/3, B = -J/27 with the classical binary quartic I, J
//   n=3: the Weierstrass cubic y^2 z - x^3 - A x z^2 - B z^3 maps to (A, B)
//   n=4: the invariants of the integral resolvent quartic det(x*GQ + y*GQ')
// Denominators are supported at {2, 3}.
struct InvariantPair {
    Rat A, B;
};

struct WeierstrassCurve {
    Int A, B;

    Int disc() const { return Int(-16) * (4 * A * A * A + 27 * B * B); }
    Int height() const;  // max(|A|^3, B^2)
};

struct JacobianResult {
    WeierstrassCurve curve;
    int lambda;  // the minimal scale in {1,2,3,6} clearing denominators
};

InvariantPair invariants(const GenusOneModel& model);

// -16 (4 A^3 + 27 B^2); integer-valued on integral models
Rat discriminant(const GenusOneModel& model);
Int discriminant_int(const GenusOneModel& model);

JacobianResult jacobian(const GenusOneModel& model);  // throws on disc = 0

Int height(const WeierstrassCurve& curve);

// naive point counts over F_p (p <= 199); the oracle pair validating the
// invariant formulas end to end
Int count_points_curve_mod_p(const WeierstrassCurve& curve, const Int& p);
Int count_points_model_mod_p(const GenusOneModel& model, const Int& p);

}  // namespace hasselab
