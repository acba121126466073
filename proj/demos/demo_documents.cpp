// Walkthrough: serialize an algebra, build a central extension from chosen
// cocycles, then deform it to a stem extension and print the documents.

#include <iostream>

#include "superlie/families.hpp"
#include "superlie/json_io.hpp"

using namespace superlie;

int main() {
    Rational::Context Q;

    auto L = heisenberg_even<Rational>(1, 0, Q); // 3-dim even Heisenberg
    std::cout << render(save_algebra(L));

    // a split central extension by a 1-dim even line: central but not stem
    auto split = split_extension(abelian<Rational>(1, 0, Q), L);
    std::cout << "split extension: central " << (is_central(split) ? "yes" : "no") << ", stem "
              << (is_stem(split) ? "yes" : "no") << "\n";

    // its canonical stem deformation collapses the superfluous line
    auto def = stem_deformation(split, stem_denominator(split));
    std::cout << "deformed: stem " << (is_stem(def) ? "yes" : "no") << ", kernel "
              << def.kernel.sdim().str() << "\n";

    // the full cover, as an extension document
    auto cover = cover_from_cohomology(L);
    std::cout << "cover kernel " << cover.kernel.sdim().str() << ", document:\n"
              << render(save_extension(cover));
    return 0;
}
