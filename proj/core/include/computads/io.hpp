#pragma once

#include <map>
#include <string>
#include <string_view>

#include "computads/morphism.hpp"

namespace computads {

struct ParseError : Error {
  ParseError(std::string file_, int line_, const std::string& what)
      : Error(file_ + ":" + std::to_string(line_) + ": " + what),
        file(std::move(file_)),
        line(line_) {}
  std::string file;
  int line;
};

/* One object per file:

     computad <name>
     2cells <label> <label> ...
     3cell <name> : <multiset> -> <multiset>

   Blank lines and lines starting with '#' are skipped; spacing is free.
   print_computad emits the canonical form (labels and 3-cells sorted);
   parse(print(X)) == X including the name. */
Computad parse_computad(std::string_view text,
                        const std::string& filename = "<input>");
std::string print_computad(const Computad& x);

/* Morphism files name their endpoints, which the caller must provide:

     morphism <name> : <dom> -> <cod>
     2 <label> -> <label>
     3 <name> -> <name>

   Parsing does not check the morphism laws; run validate_morphism. */
Morphism parse_morphism(std::string_view text,
                        const std::map<Label, Computad>& objects,
                        const std::string& filename = "<input>");
std::string print_morphism(const Morphism& f);

enum class FileKind { computad, morphism };
FileKind sniff_kind(std::string_view text,
                    const std::string& filename = "<input>");

}  // namespace computads
