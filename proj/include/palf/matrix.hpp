#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace palf {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;

// coefficients from the constant term up
using Poly = std::vector<BigInt>;

IntMatrix identity(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);  // throws on overflow
IntVector apply(const IntMatrix& a, const IntVector& x);
IntMatrix transpose(const IntMatrix& a);
long long dot(const IntVector& a, const IntVector& b);

std::size_t rank_mod(const IntMatrix& a, std::uint64_t prime);
std::size_t rank_exact(const IntMatrix& a);

// exact characteristic polynomial det(tI - A), monic
Poly charpoly(const IntMatrix& a);
BigInt evaluate(const Poly& f, long long t);
void trim(Poly& f);

}  // namespace palf
