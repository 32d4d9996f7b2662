#ifndef HZSUMS_SRC_LATTICE_HPP
#define HZSUMS_SRC_LATTICE_HPP

#include <cstdint>

#include "hzsums/series.hpp"

namespace hzs::internal {

enum class Kernel { ZETA, LERCH };

// sum_{j>=0} scale * (+-1)^j * e^(-c j) * (j+1)^m * F(x0 + step*j)
// with F = zeta(s, .) or Phi(z, s, .).
//
// Every sum in the library (direct and transformed sides) is of this form.
// m > 0 requires x0 == step so that (j+1)^m == (alpha_j/step)^m.
struct Lattice {
    double s = 4.0;
    double x0 = 1.0;
    double step = 1.0;
    int m = 0;
    bool alternating = false;
    double c = 0.0;
    double scale = 1.0;
    Kernel kernel = Kernel::ZETA;
    double z = 1.0;
};

struct LatticeSum {
    double value = 0.0;
    std::int64_t terms = 0;
    double bound = 0.0;
};

LatticeSum sum_lattice(const Lattice& lat, double abs_tol, std::int64_t budget);

// Smallest K for which the (approximate) tail half-width is below abs_tol/4;
// returns budget + 1 if none exists within the budget.
std::int64_t estimate_terms(const Lattice& lat, double abs_tol, std::int64_t budget);

// The left-hand-side series of a SumSpec (defined in direct_sums.cpp).
Lattice direct_lattice(const SumSpec& spec);

// The parameter-inverted series of a GENERAL_AB, GENERAL_AB_ALT or
// EXP_WEIGHTED spec (defined in transforms.cpp).
Lattice transformed_lattice(const SumSpec& spec);

// Upper bound on sum_{j>=0} (x + step*j)^(-p), p > 1.
double power_sum_bound(double x, double step, double p);

}  // namespace hzs::internal

#endif
