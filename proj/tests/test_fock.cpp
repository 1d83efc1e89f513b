#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qladder/fock.hpp"
#include "qladder/qseries.hpp"

using namespace qladder;

TEST_CASE("grades of basis vectors") {
    FockVector v{{0, -2}, {-1}, {-1, -1, -3}};
    CHECK(v.weight() == 0 + 2 + 1 + 1 + 1 + 3);
    CHECK(v.charge() == 2 - 1);
    CHECK(v.str() == "phi[0] phi[-2] phistar[-1] o[-1] o[-1] o[-3] v0");
    CHECK(FockVector{}.weight() == 0);
    CHECK(FockVector{}.charge() == 0);
}

TEST_CASE("mode actions on the extreme vector") {
    FockElement vac = FockElement::vacuum();
    CHECK(apply_phi(1, vac).is_zero());
    CHECK(apply_phi_star(0, vac).is_zero());
    CHECK(apply_phi_star(-1, apply_phi(0, vac)).str() ==
          "-1 phi[0] phistar[-1] v0");
    // contraction: phi_1 phistar_{-1} v0 = v0
    FockElement w = apply_phi(1, apply_phi_star(-1, vac));
    CHECK(w.coeff(FockVector{}) == 1);
    CHECK(w.terms().size() == 1);
}

TEST_CASE("composite modes expand as oscillator-dressed fermions") {
    FockElement vac = FockElement::vacuum();
    CHECK(apply_psi(0, vac).is_zero());
    CHECK(apply_psi(1, vac).is_zero());
    CHECK(apply_psi(-1, vac).str() == "phi[0] o[-1] v0");
    CHECK(apply_psi(-2, vac).str() == "phi[-1] o[-1] v0");
    FockElement p3 = apply_psi(-3, vac);
    CHECK(p3.coeff(FockVector{{-2}, {}, {-1}}) == 1);
    CHECK(p3.coeff(FockVector{{0}, {}, {-3}}) == 1);
    CHECK(p3.terms().size() == 2);
    // psi can also contract: psi_0 on phistar_{-1} v0 reaches the vacuum
    FockElement v = apply_phi_star(-1, vac);
    FockElement p0 = apply_psi(0, v);
    CHECK(p0.coeff(FockVector{{}, {}, {-1}}) == 1);
}

TEST_CASE("basis enumeration matches the character degree by degree") {
    auto basis = fock_basis(6);
    // no duplicates
    for (size_t i = 1; i < basis.size(); ++i) CHECK(!(basis[i] == basis[i - 1]));
    for (const auto& v : basis) CHECK(v.weight() <= 6);
    Window w(6, -4, 4);
    LaurentQT ch = fock_character(w);
    CHECK(ch.coeff(0, 0) == 1);
    CHECK(ch.coeff(1, 0) == 2);   // o_{-1} v0 and phi_0 phistar_{-1} v0
    CHECK(ch.coeff(1, 1) == 2);   // phi_{-1} v0 and phi_0 o_{-1} v0
    CHECK(ch.coeff(1, -1) == 1);  // phistar_{-1} v0
    CHECK(ch.coeff(0, 1) == 1);   // phi_0 v0
    CHECK(ch.coeff(0, -1) == 0);
}

TEST_CASE("canonical anticommutators hold on the module") {
    CheckReport rep = car_check(6, 3);
    for (const auto& f : rep.failures) INFO(f);
    CHECK(rep.ok);
}

TEST_CASE("defining relations hold in modes") {
    CheckReport rep = mode_relation_check(4, 6);
    for (const auto& f : rep.failures) INFO(f);
    CHECK(rep.ok);
}

TEST_CASE("character equals product form and closed sum") {
    CheckReport rep = fock_character_check(Window(10, -3, 3));
    for (const auto& f : rep.failures) INFO(f);
    CHECK(rep.ok);
}
