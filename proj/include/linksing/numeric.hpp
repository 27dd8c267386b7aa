#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace linksing {

// Exact arithmetic everywhere; no floating point in any invariant path.
// Expression templates are disabled so every operation yields a plain value.
using Int =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

}  // namespace linksing
