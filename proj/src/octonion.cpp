#include "albert/octonion.hpp"

namespace albert {

BasisProduct basis_product(std::size_t i, std::size_t j, Algebra alg) {
    const Octonion p = Octonion::basis(i, alg) * Octonion::basis(j, alg);
    for (std::size_t k = 0; k < 8; ++k) {
        if (p.c[k] > 0.5) return {k, +1};
        if (p.c[k] < -0.5) return {k, -1};
    }
    return {0, 0}; // unreachable: basis products are always +-e_k
}

} // namespace albert
