#include "whittaker/textio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "whittaker/compression.hpp"

namespace whit {

std::vector<std::vector<int>> parse_rows(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty())
        throw std::invalid_argument("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_rows(const std::vector<std::vector<int>>& rows) {
  std::string s;
  for (const auto& r : rows) s += format_sequence(r, " ") + "\n";
  return s;
}

namespace {

void require_young(const std::vector<std::vector<int>>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() > rows[i - 1].size()) throw std::invalid_argument("row lengths must be weakly decreasing");
}

}  // namespace

Filling parse_filling(const std::string& text) {
  auto rows = parse_rows(text);
  require_young(rows);
  return tableau_to_filling(Tableau{rows});
}

Tableau parse_tableau(const std::string& text) {
  auto rows = parse_rows(text);
  require_young(rows);
  return Tableau{rows};
}

GTPattern parse_gt(const std::string& text) {
  GTPattern p{parse_rows(text)};
  if (!is_gt(p)) throw std::invalid_argument("not a Gelfand-Tsetlin pattern");
  return p;
}

std::string format_filling(const Filling& f) { return format_rows(filling_to_tableau(f).rows); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace whit
