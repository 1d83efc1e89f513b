#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qladder/check.hpp"
#include "qladder/laurent.hpp"

namespace qladder {

/// Basis vector of the oscillator-fermion module over the extreme vector:
/// a word phi_{a_1}..phi_{a_l} phistar_{b_1}..phistar_{b_m} o_{c_1}.. v0
/// with the a's <= 0 strictly descending, the b's <= -1 strictly
/// descending, and the o-indices negative odd, ascending with repetition
/// (they commute with everything).
struct FockVector {
    std::vector<int> phi;
    std::vector<int> phistar;
    std::vector<int> o;

    auto operator<=>(const FockVector&) const = default;

    long long weight() const;  // eigenvalue of w
    long long charge() const;  // eigenvalue of s
    std::string str() const;   // "phi[-1] phistar[-2] o[-1] v0"
};

/// Finite linear combination of basis vectors.
class FockElement {
public:
    FockElement() = default;
    static FockElement vacuum();
    static FockElement from(const FockVector& v, const mpq_class& c);

    const std::map<FockVector, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class coeff(const FockVector& v) const;

    void add(const FockVector& v, const mpq_class& c);
    FockElement& operator+=(const FockElement& o);
    FockElement& operator-=(const FockElement& o);
    FockElement& operator*=(const mpq_class& c);

    std::string str() const;

private:
    std::map<FockVector, mpq_class> terms_;
};

/// Mode actions. phi_i with i <= 0 creates (alternating insertion sign),
/// with i >= 1 contracts against phistar_{-i}; phistar_i mirrors this with
/// an extra sign for crossing the phi block; o_j (j negative odd) is a
/// central creator. psi_i = sum over negative odd j of o_j phi_{i-j}, a
/// finite sum on any vector.
FockElement apply_phi(int i, const FockElement& v);
FockElement apply_phi_star(int i, const FockElement& v);
FockElement apply_o(int j, const FockElement& v);
FockElement apply_psi(int i, const FockElement& v);

/// Every basis vector of weight <= w_max, in increasing (weight, order).
std::vector<FockVector> fock_basis(int w_max);

/// Character Tr q^w t^s by direct basis enumeration.
LaurentQT fock_character(const Window& w);

/// Canonical anticommutation relations, applied to every basis vector of
/// weight <= w_max, all |i|, |j| <= idx: {phi_i, phi_j} = 0,
/// {phistar_i, phistar_j} = 0, {phi_i, phistar_j} = delta_{i+j}, and o_j
/// central.
CheckReport car_check(int w_max, int idx);

/// The defining relations in modes, applied to every basis vector of
/// weight <= w_max: sum_i phi_i psi_{s-i} = 0 for |s| <= s_abs, plus the
/// alternating sum for odd s. The i-range is finite on each vector; the
/// truncation is re-checked by confirming both boundary terms vanish.
CheckReport mode_relation_check(int s_abs, int w_max);

/// The enumerated character equals the two-factor fermion product times
/// the odd-part boson product, and equals the closed statistical sum.
CheckReport fock_character_check(const Window& w);

}  // namespace qladder
