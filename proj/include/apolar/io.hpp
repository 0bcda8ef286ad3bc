#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "apolar/form.hpp"
#include "apolar/numeric.hpp"
#include "apolar/powersum.hpp"

namespace apolar::io {

/// Canonical single-line JSON term list:
/// {"space":"V","nvars":2,"degree":2,"terms":[{"exp":[2,0],"coef":"1"},...]}
std::string serialize(const Form& f);
Form parse_form(std::string_view text);

/// "1,-2/3,0"
PointVec parse_point(std::string_view text, PointRole role);
std::string format_point(const PointVec& p);

/// One point per line; blank lines and lines starting with '#' are skipped.
std::vector<PointVec> parse_points(std::string_view text, PointRole role);

/// {"m":4,"entries":[{"H":["1","2/3"],"alpha":"5"},...]}
std::string serialize(const Representation& r);
Representation parse_representation(std::string_view text, PointRole role);

/// Same layout with floating-point H and alpha.
std::string serialize(const numeric::Decomposition& d);
numeric::Decomposition parse_decomposition(std::string_view text);

/// True when the representation file carries floats rather than rational
/// strings.
bool is_numeric_representation(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace apolar::io
