#include "cgt/group_io.hpp"

#include <fstream>
#include <sstream>

#include "cgt/error.hpp"

namespace cgt {

namespace {

std::string strip(const std::string& line) {
  std::string out = line;
  auto hash = out.find('#');
  if (hash != std::string::npos) out.erase(hash);
  while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
  std::size_t start = 0;
  while (start < out.size() && std::isspace(static_cast<unsigned char>(out[start]))) ++start;
  return out.substr(start);
}

}  // namespace

PermGroup read_group(std::istream& is) {
  std::string line;
  int lineno = 0;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;

  while (std::getline(is, line)) {
    ++lineno;
    std::string body = strip(line);
    if (body.empty()) continue;
    if (!have_degree) {
      std::stringstream ss(body);
      std::string word;
      ss >> word >> degree;
      if (word != "degree" || !ss || degree == 0)
        throw ParseError("expected 'degree <n>' as the first content line", lineno);
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(parse_cycles(body, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!have_degree) throw ParseError("missing degree line", lineno ? lineno : 1);
  if (gens.empty()) gens.push_back(Perm(degree));
  return PermGroup(degree, std::move(gens));
}

PermGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path);
  return read_group(in);
}

void write_group(std::ostream& os, const PermGroup& g) {
  os << "degree " << g.degree << "\n";
  for (const Perm& s : g.generators) os << print_cycles(s) << "\n";
}

}  // namespace cgt
