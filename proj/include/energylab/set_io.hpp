#pragma once

#include <iosfwd>
#include <string>

#include "energylab/finite_set.hpp"

namespace energylab {

/// Set file format: UTF-8 text, one element per line, rationals as "p/q" or
/// plain integers. An optional first line "# field=prime p=<p>" selects F_p;
/// the default is characteristic 0. Serialization is canonical (sorted,
/// lowest terms), so parse/serialize round-trips are byte-stable.
std::string serialize_set(const FiniteSet& s);
FiniteSet parse_set(std::istream& in);
FiniteSet parse_set_text(const std::string& text);
FiniteSet load_set_file(const std::string& path);
void save_set_file(const FiniteSet& s, const std::string& path);

}  // namespace energylab
