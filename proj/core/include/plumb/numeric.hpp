#ifndef PLUMB_NUMERIC_HPP
#define PLUMB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace plumb {

// All lattice arithmetic is exact. BigInt never overflows; Rational is a
// reduced fraction of BigInts. No floating point is used anywhere in the
// library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

} // namespace plumb

#endif
