#pragma once

#include <map>
#include <string>

#include "latgas/model.hpp"

namespace latgas {

// Model definition text format (one directive per line, '#' comments):
//
//   dimension 1
//   radius 2                      # optional; computed from entries if absent
//   rate 1   3 - eta(-1) - eta(2) # polynomial in named occupancies
//   rate -1  2
//   table (0,1) window (1,1) (0,2) : 1 2 2 4    # explicit truth table,
//                                               # pattern bit i = window[i]
//
// Displacements and sites are integers in d=1 or "(x,y)"/"(x,y,z)" tuples.
// Numbers are parsed as exact rationals when syntactically rational
// (integers, finite decimals, quotients like 1/3).
Model parse_model_text(const std::string& text);
Model parse_model_file(const std::string& path);
std::string model_to_text(const Model& m);

// Parses an occupancy polynomial like "3 - eta(-1)*eta(2) + 1/2" exactly.
MonomialFn parse_occupancy_polynomial(const std::string& expr, int d);

// Accepts either a path to a model file or a builtin spec
// "name" / "name:key=value,key=value".
Model load_model(const std::string& spec);

}  // namespace latgas
