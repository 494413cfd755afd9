#pragma once

#include <string>
#include <vector>

#include "whittaker/fillings.hpp"
#include "whittaker/tokuyama.hpp"

namespace whit {

// Whitespace-separated integers, one row per line; blank lines and '#' comments ignored.
std::vector<std::vector<int>> parse_rows(const std::string& text);
std::string format_rows(const std::vector<std::vector<int>>& rows);

// Rows top first, left justified, lengths weakly decreasing.
Filling parse_filling(const std::string& text);
Tableau parse_tableau(const std::string& text);
GTPattern parse_gt(const std::string& text);
std::string format_filling(const Filling& f);

std::string read_text_file(const std::string& path);

}  // namespace whit
