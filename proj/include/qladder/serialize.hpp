#pragma once

#include <string>
#include <vector>

#include "qladder/chain_complex.hpp"
#include "qladder/lattice.hpp"
#include "qladder/laurent.hpp"
#include "qladder/verify.hpp"

namespace qladder {

enum class OutFormat { text, json, csv };

OutFormat parse_format(const std::string& s);  // throws on unknown name

/// Renderers for the emittable objects. All JSON documents carry
/// {"schema": 1, "kind": ...}; ordering is deterministic (series by (t, q),
/// tables by (weight, particles)), coefficients are decimal strings.
std::string render_series(const LaurentQT& s, OutFormat f);
std::string render_table(const WeightTable& t, OutFormat f);
std::string render_dims(const std::vector<long long>& dims, OutFormat f);
std::string render_cohomology(const CohomologyReport& r, OutFormat f);
std::string render_scalar(const std::string& kind, const mpz_class& v, OutFormat f);
std::string render_verify(const VerifyReport& r, OutFormat f);  // csv = text

}  // namespace qladder
