#pragma once

#include <boost/multiprecision/float128.hpp>

namespace genbeta {

/// 113-bit binary float used by the reference integrals when rel_tol is
/// below what double can deliver or when the integrand cancels heavily.
using quad = boost::multiprecision::float128;

}  // namespace genbeta
