#pragma once

#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace kspec {

/// A term over a signature: either a variable or a symbol applied to
/// arity-many subterms.
struct Term {
  bool is_var = false;
  std::string name;            // variable name or symbol name
  std::vector<Term> children;  // empty for variables and 0-ary symbols

  static Term var(std::string v) {
    Term t;
    t.is_var = true;
    t.name = std::move(v);
    return t;
  }

  static Term app(std::string sym, std::vector<Term> args = {}) {
    Term t;
    t.is_var = false;
    t.name = std::move(sym);
    t.children = std::move(args);
    return t;
  }

  friend bool operator==(const Term&, const Term&) = default;
};

using Assignment = std::map<std::string, std::size_t>;

/// Structural recursion: the value of t in alg under the given variable
/// assignment. Unbound variables and arity mismatches signal malformed input.
inline std::size_t eval_term(const FiniteAlgebra& alg, const Term& t,
                             const Assignment& assignment) {
  if (t.is_var) {
    auto it = assignment.find(t.name);
    if (it == assignment.end())
      throw InputError("eval_term: unbound variable '" + t.name + "'");
    if (it->second >= alg.size)
      throw InputError("eval_term: assignment of '" + t.name +
                       "' out of range");
    return it->second;
  }
  const std::size_t sym = alg.sig.index_of(t.name);
  if (alg.sig.symbols[sym].arity != t.children.size())
    throw InputError("eval_term: arity mismatch for '" + t.name + "': got " +
                     std::to_string(t.children.size()) + " arguments");
  std::vector<std::size_t> args(t.children.size());
  for (std::size_t i = 0; i < t.children.size(); ++i)
    args[i] = eval_term(alg, t.children[i], assignment);
  return alg.apply(sym, args);
}

/// Variables occurring in t, in first-occurrence order.
inline void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.is_var) {
    for (const auto& v : out)
      if (v == t.name) return;
    out.push_back(t.name);
    return;
  }
  for (const auto& c : t.children) collect_variables(c, out);
}

}  // namespace kspec
