#ifndef MMLAB_PARSE_HPP
#define MMLAB_PARSE_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mmlab/polynomial.hpp"

namespace mmlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Grammar: sums/differences of products of powers; explicit '*', '^' binds
// tighter than '*', unary minus allowed, integer literals arbitrary size.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

struct TaskDirective {
  std::string kind;   // currently "verify"
  std::string claim;  // theorem1, prop4, prop5, lemma2, lemma3, prop6,
                      // heights, identities, all
  std::map<std::string, std::string> params;
  int line = 0;
};

struct SessionFile {
  RingPtr ring;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;
  std::vector<std::pair<std::string, Polynomial>> polys;
  std::vector<TaskDirective> tasks;

  const std::vector<Polynomial>* find_ideal(const std::string& name) const;
  const Polynomial* find_poly(const std::string& name) const;
};

// One `ring ...;` declaration, then `ideal N = ...;`, `poly N = ...;`,
// `task verify <claim> k=v ...;` in any order. '#' starts a line comment.
SessionFile parse_session(const std::string& text);

std::string render(const Scalar& c);
std::string render(const Monomial& m, const RingPtr& ring);
std::string render(const Polynomial& f);
std::string render_ideal(const std::vector<Polynomial>& gens);
std::string render_session(const SessionFile& s);

}  // namespace mmlab

#endif
