#pragma once

#include <vector>

#include "linfin/core/integer.hpp"

namespace linfin::gf {

// Integer polynomials are coefficient lists, lowest degree first.
using ZPoly = std::vector<Integer>;

// Res(a, b) by the subresultant pseudo-remainder sequence.
Integer resultant(ZPoly a, ZPoly b);

// disc(f) = (-1)^(k(k-1)/2) Res(f, f') / lc(f), deg f = k >= 1.
Integer discriminant(const ZPoly& f);

}  // namespace linfin::gf
