#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qladder {

enum class Row : unsigned char { X = 0, Y = 1, Z = 2 };

std::string row_name(Row r);

struct Generator {
    Row row;
    int index;
    auto operator<=>(const Generator&) const = default;
};

struct Prod;

/// Canonically ordered word in anticommuting generators: the x-block, then
/// the y-block, then the z-block, indices strictly increasing inside each.
class Monomial {
public:
    Monomial() = default;  // the unit
    explicit Monomial(std::vector<Generator> gens);  // must already be canonical
    static Monomial single(Row r, int index);

    const std::vector<Generator>& gens() const { return gens_; }
    int degree() const { return static_cast<int>(gens_.size()); }
    std::array<int, 3> multidegree() const;
    long long index_sum() const;
    bool contains(Generator g) const;

    /// Concatenate and bring to canonical order, counting transpositions.
    /// sign == 0 means a generator repeated (the product is zero).
    static Prod mul(const Monomial& a, const Monomial& b);

    /// Degree first, then the canonical (row, index) sequence.
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const = default;

    std::string str() const;  // "x[-1] y[1]"; "1" for the unit

private:
    std::vector<Generator> gens_;
};

struct Prod {
    int sign;
    Monomial mono;
};

/// Finite linear combination of monomials with rational coefficients.
class Element {
public:
    Element() = default;
    static Element unit();
    static Element single(Row r, int index);
    static Element from(const Monomial& m, const mpq_class& c);

    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class coeff(const Monomial& m) const;

    void add(const Monomial& m, const mpq_class& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const mpq_class& c);
    Element mul(const Element& o) const;

    /// Homogeneous degree; throws if mixed (used where homogeneity is an
    /// invariant, e.g. differentials and relation rows).
    int degree() const;

    std::string str() const;

private:
    std::map<Monomial, mpq_class> terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(Element a, const mpq_class& c);
Element operator*(const Element& a, const Element& b);

}  // namespace qladder
