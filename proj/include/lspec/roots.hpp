#pragma once

#include <cstddef>
#include <vector>

#include "lspec/interval.hpp"
#include "lspec/poly.hpp"

namespace lspec {

/// A box certified to contain exactly one root of the polynomial it was
/// computed for. Real roots get a degenerate imaginary part [0, 0].
struct RootBox {
  ComplexInterval box;
  bool real = false;
};

constexpr int kDefaultMaxWorkingPrecision = 512;

bool is_squarefree(const IntPoly& f);

/// Number of distinct real roots, by Sturm sequence. Throws NotSquarefree.
std::size_t count_real_roots(const IntPoly& f);

/// Certified isolation of all complex roots of a squarefree f. Boxes are
/// pairwise disjoint with width at most 2^-precision. Order: real roots
/// ascending, then each root with positive imaginary part (sorted by real,
/// then imaginary part) followed by its conjugate.
///
/// Approximations come from Aberth iteration; each is certified with the
/// Gerschgorin-type inclusion disks of radius deg(f)*|W_i| (W_i the
/// Weierstrass correction), which must be pairwise disjoint. The working
/// precision doubles on failure up to `max_working_precision`, after which
/// PrecisionExhausted is thrown.
std::vector<RootBox> isolate_complex_roots(const IntPoly& f, int precision,
                                           int max_working_precision = kDefaultMaxWorkingPrecision);

Interval evaluate(const IntPoly& f, const Interval& x);
ComplexInterval evaluate(const IntPoly& f, const ComplexInterval& z);

}  // namespace lspec
