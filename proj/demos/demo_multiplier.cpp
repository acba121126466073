// Walkthrough: build a Heisenberg superalgebra, compute its multiplier two
// independent ways, construct a cover and check it is a maximal stem
// extension.

#include <iostream>

#include "superlie/families.hpp"
#include "superlie/freepres.hpp"

using namespace superlie;

int main() {
    Rational::Context Q;

    auto H = heisenberg_odd<Rational>(2, Q);
    std::cout << "H(2): sdim " << H.sdim().str() << ", center " << center(H).sdim().str()
              << ", derived " << derived(H).sdim().str() << ", class " << nilpotency_class(H)
              << "\n";

    SuperDim via_h2 = multiplier_sdim(H);
    SuperDim via_hopf = hopf_multiplier(H, std::nullopt, HopfDenominator::RF);
    std::cout << "multiplier via graded H^2:          " << via_h2.str() << "\n";
    std::cout << "multiplier via free presentation:   " << via_hopf.str() << "\n";

    auto cover = cover_heisenberg_odd<Rational>(2, Q);
    std::cout << "cover: total " << cover.total.sdim().str() << ", kernel "
              << cover.kernel.sdim().str() << ", stem " << (is_stem(cover) ? "yes" : "no")
              << ", maximal " << (is_maximal_stem(cover) ? "yes" : "no") << "\n";

    auto F = model_filiform<Rational>(2, 2, Q);
    auto fcover = cover_from_cohomology(F);
    std::cout << "F(2,2): multiplier " << multiplier_sdim(F).str() << ", cover total "
              << fcover.total.sdim().str() << ", maximal stem "
              << (is_maximal_stem(fcover) ? "yes" : "no") << "\n";
    return 0;
}
