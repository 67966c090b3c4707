// Exact rational scalar used throughout the lattice pipeline.  Everything
// upstream of rendering is exact; doubles appear only in the SVG/embedding
// layer.
#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace graphene {

using Rat = boost::rational<long long>;

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string ratToString(const Rat& r);

// Parses "p" or "p/q" (q > 0 after normalisation).  Throws std::invalid_argument
// on malformed input or a zero denominator.
Rat ratFromString(std::string_view text);

inline double toDouble(const Rat& r) { return boost::rational_cast<double>(r); }

} // namespace graphene
