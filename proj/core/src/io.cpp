#include "computads/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

namespace computads {

namespace {

struct Line {
  int number;
  std::string text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

/* content lines only: blanks and '#' comments dropped */
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    std::string line = trim(raw);
    if (!line.empty() && line[0] != '#') out.push_back({number, line});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

/* a token usable as a 2-cell label or 3-cell name in this syntax */
void check_token(const std::string& file, int line, const std::string& tok,
                 const char* role) {
  if (tok == "1")
    throw ParseError(file, line, std::string(role) + " '1' is reserved for the empty multiset");
  if (tok.find('*') != std::string::npos || tok.find(':') != std::string::npos ||
      tok.find("->") != std::string::npos)
    throw ParseError(file, line,
                     std::string(role) + " '" + tok + "' uses reserved syntax characters");
}

void check_printable(const std::string& tok, const char* role) {
  bool bad = tok.empty() || tok == "1" || tok.find('*') != std::string::npos ||
             tok.find(':') != std::string::npos ||
             tok.find("->") != std::string::npos;
  for (char c : tok) bad = bad || is_space(c);
  if (bad)
    throw Error(std::string(role) + " '" + tok + "' not printable in file syntax");
}

}  // namespace

Computad parse_computad(std::string_view text, const std::string& filename) {
  std::vector<Line> lines = split_lines(text);
  std::size_t at = 0;
  if (at >= lines.size())
    throw ParseError(filename, 1, "expected 'computad <name>'");
  auto header = tokens_of(lines[at].text);
  if (header.size() != 2 || header[0] != "computad")
    throw ParseError(filename, lines[at].number, "expected 'computad <name>'");
  Label name = header[1];
  ++at;

  if (at >= lines.size())
    throw ParseError(filename, lines[at - 1].number + 1, "expected '2cells ...'");
  auto decl = tokens_of(lines[at].text);
  if (decl.empty() || decl[0] != "2cells")
    throw ParseError(filename, lines[at].number, "expected '2cells ...'");
  std::vector<Label> cells2(decl.begin() + 1, decl.end());
  std::set<Label> seen2;
  for (const Label& a : cells2) {
    check_token(filename, lines[at].number, a, "2-cell label");
    if (!seen2.insert(a).second)
      throw ParseError(filename, lines[at].number, "duplicate 2-cell label " + a);
  }
  ++at;

  std::vector<ThreeCell> cells3;
  std::set<Label> seen3;
  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    auto toks = tokens_of(line.text);
    if (toks.empty() || toks[0] != "3cell")
      throw ParseError(filename, line.number, "expected '3cell <name> : <src> -> <tgt>'");
    std::string rest = trim(line.text.substr(5));
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw ParseError(filename, line.number, "expected ':' after the 3-cell name");
    std::string cell_name = trim(rest.substr(0, colon));
    if (cell_name.empty() || cell_name.find(' ') != std::string::npos)
      throw ParseError(filename, line.number, "expected a single 3-cell name before ':'");
    check_token(filename, line.number, cell_name, "3-cell name");
    if (!seen3.insert(cell_name).second)
      throw ParseError(filename, line.number, "duplicate 3-cell name " + cell_name);
    std::string boundary = rest.substr(colon + 1);
    std::size_t arrow = boundary.find("->");
    if (arrow == std::string::npos)
      throw ParseError(filename, line.number, "expected '->' between source and target");
    try {
      LabelMultiset src = parse_multiset(boundary.substr(0, arrow));
      LabelMultiset tgt = parse_multiset(boundary.substr(arrow + 2));
      cells3.push_back({cell_name, std::move(src), std::move(tgt)});
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(filename, line.number, e.what());
    }
  }
  return Computad(std::move(name), std::move(cells2), std::move(cells3));
}

std::string print_computad(const Computad& x) {
  check_printable(x.name(), "computad name");
  std::string out = "computad " + x.name() + "\n2cells";
  for (const Label& a : x.cells2()) {
    check_printable(a, "2-cell label");
    out += " " + a;
  }
  out += "\n";
  for (const ThreeCell& e : x.cells3()) {
    check_printable(e.name, "3-cell name");
    out += "3cell " + e.name + " : " + print_multiset(e.src) + " -> " +
           print_multiset(e.tgt) + "\n";
  }
  return out;
}

Morphism parse_morphism(std::string_view text,
                        const std::map<Label, Computad>& objects,
                        const std::string& filename) {
  std::vector<Line> lines = split_lines(text);
  std::size_t at = 0;
  if (at >= lines.size())
    throw ParseError(filename, 1, "expected 'morphism <name> : <dom> -> <cod>'");
  auto header = tokens_of(lines[at].text);
  if (header.empty() || header[0] != "morphism")
    throw ParseError(filename, lines[at].number,
                     "expected 'morphism <name> : <dom> -> <cod>'");
  std::string rest = trim(lines[at].text.substr(8));
  std::size_t colon = rest.find(':');
  if (colon == std::string::npos)
    throw ParseError(filename, lines[at].number, "expected ':' after the morphism name");
  std::string name = trim(rest.substr(0, colon));
  if (name.empty() || name.find(' ') != std::string::npos)
    throw ParseError(filename, lines[at].number, "expected a single morphism name before ':'");
  std::string endpoints = rest.substr(colon + 1);
  std::size_t arrow = endpoints.find("->");
  if (arrow == std::string::npos)
    throw ParseError(filename, lines[at].number, "expected '<dom> -> <cod>'");
  Label dom_name = trim(endpoints.substr(0, arrow));
  Label cod_name = trim(endpoints.substr(arrow + 2));
  auto dom_it = objects.find(dom_name);
  if (dom_it == objects.end())
    throw ParseError(filename, lines[at].number, "unknown computad " + dom_name);
  auto cod_it = objects.find(cod_name);
  if (cod_it == objects.end())
    throw ParseError(filename, lines[at].number, "unknown computad " + cod_name);
  ++at;

  Morphism::LabelMap map2, map3;
  for (; at < lines.size(); ++at) {
    const Line& line = lines[at];
    auto toks = tokens_of(line.text);
    if (toks.empty() || (toks[0] != "2" && toks[0] != "3"))
      throw ParseError(filename, line.number, "expected '2 <from> -> <to>' or '3 <from> -> <to>'");
    std::string entry = trim(line.text.substr(1));
    std::size_t a = entry.find("->");
    if (a == std::string::npos)
      throw ParseError(filename, line.number, "expected '->' in map entry");
    Label from = trim(entry.substr(0, a));
    Label to = trim(entry.substr(a + 2));
    if (from.empty() || to.empty() || from.find(' ') != std::string::npos ||
        to.find(' ') != std::string::npos)
      throw ParseError(filename, line.number, "expected single labels around '->'");
    Morphism::LabelMap& table = toks[0] == "2" ? map2 : map3;
    if (!table.emplace(from, to).second)
      throw ParseError(filename, line.number, "duplicate map entry for " + from);
  }
  return Morphism(std::move(name), dom_it->second, cod_it->second,
                  std::move(map2), std::move(map3));
}

std::string print_morphism(const Morphism& f) {
  check_printable(f.name(), "morphism name");
  std::string out =
      "morphism " + f.name() + " : " + f.dom().name() + " -> " + f.cod().name() + "\n";
  for (const auto& [from, to] : f.map2()) out += "2 " + from + " -> " + to + "\n";
  for (const auto& [from, to] : f.map3()) out += "3 " + from + " -> " + to + "\n";
  return out;
}

FileKind sniff_kind(std::string_view text, const std::string& filename) {
  std::vector<Line> lines = split_lines(text);
  if (!lines.empty()) {
    auto toks = tokens_of(lines[0].text);
    if (!toks.empty() && toks[0] == "computad") return FileKind::computad;
    if (!toks.empty() && toks[0] == "morphism") return FileKind::morphism;
  }
  throw ParseError(filename, lines.empty() ? 1 : lines[0].number,
                   "expected a 'computad' or 'morphism' header");
}

}  // namespace computads
