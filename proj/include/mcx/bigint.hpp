#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mcx {

// Exact unbounded integers. Smith normal form intermediates can exceed any
// fixed word size even on small boundary matrices, so everything arithmetic
// in the homology and counting paths runs on these.
using BigInt = boost::multiprecision::cpp_int;

} // namespace mcx
