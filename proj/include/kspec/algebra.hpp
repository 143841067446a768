#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "budget.hpp"
#include "errors.hpp"

namespace kspec {

/// An operation symbol with its arity.
struct OpSymbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

/// An ordered list of operation symbols. The order is fixed and defines
/// table order everywhere downstream.
struct Signature {
  std::vector<OpSymbol> symbols;

  Signature() = default;
  explicit Signature(std::vector<OpSymbol> syms) : symbols(std::move(syms)) {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (symbols[i].name.empty())
        throw InputError("signature: empty symbol name");
      for (std::size_t j = i + 1; j < symbols.size(); ++j) {
        if (symbols[i].name == symbols[j].name)
          throw InputError("signature: duplicate symbol name '" +
                           symbols[i].name + "'");
      }
    }
  }

  std::size_t size() const { return symbols.size(); }

  bool has_symbol(const std::string& name) const {
    for (const auto& s : symbols)
      if (s.name == name) return true;
    return false;
  }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i].name == name) return i;
    throw InputError("signature: unknown symbol '" + name + "'");
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

namespace detail {

inline std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::size_t(-1) / base))
      throw ResourceError("table size overflow");
    r *= base;
  }
  return r;
}

}  // namespace detail

/// A finite algebra: a universe {0, ..., size-1} together with one total
/// operation table per symbol. Tables are flat, row-major, with the first
/// argument most significant; a 0-ary symbol has a single-entry table.
/// Values are immutable after construction.
struct FiniteAlgebra {
  Signature sig;
  std::size_t size = 1;
  std::vector<std::vector<std::uint32_t>> tables;  // tables[sym][flat index]

  FiniteAlgebra() = default;

  FiniteAlgebra(Signature signature, std::size_t n,
                std::vector<std::vector<std::uint32_t>> tabs)
      : sig(std::move(signature)), size(n), tables(std::move(tabs)) {
    if (size == 0) throw InputError("algebra: empty universes are excluded");
    guard_universe(size, "algebra construction");
    if (tables.size() != sig.size())
      throw InputError("algebra: expected " + std::to_string(sig.size()) +
                       " tables, got " + std::to_string(tables.size()));
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const std::size_t want = detail::pow_size(size, sig.symbols[s].arity);
      if (tables[s].size() != want)
        throw InputError("algebra: table for '" + sig.symbols[s].name +
                         "' has " + std::to_string(tables[s].size()) +
                         " entries, expected " + std::to_string(want));
      for (std::size_t i = 0; i < tables[s].size(); ++i) {
        if (tables[s][i] >= size)
          throw InputError("algebra: entry " + std::to_string(tables[s][i]) +
                           " out of range in table '" + sig.symbols[s].name +
                           "', row " + std::to_string(i));
      }
    }
  }

  /// Flat table index of an argument tuple (first argument most significant).
  std::size_t flat_index(std::span<const std::size_t> args) const {
    std::size_t idx = 0;
    for (std::size_t a : args) idx = idx * size + a;
    return idx;
  }

  std::size_t apply(std::size_t sym, std::span<const std::size_t> args) const {
    return tables[sym][flat_index(args)];
  }

  std::size_t apply(std::size_t sym,
                    std::initializer_list<std::size_t> args) const {
    return apply(sym, std::span<const std::size_t>(args.begin(), args.size()));
  }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;
};

/// The one-element algebra of a signature; every table is constant 0.
/// Stands in for the product indexed by the empty set.
inline FiniteAlgebra trivial_algebra(const Signature& sig) {
  std::vector<std::vector<std::uint32_t>> tables;
  tables.reserve(sig.size());
  for (const auto& sym : sig.symbols) {
    (void)sym;
    tables.push_back({0});
  }
  return FiniteAlgebra(sig, 1, std::move(tables));
}

/// Direct product with componentwise tables. Element index is the
/// mixed-radix encoding of the component tuple: the first factor is the
/// most significant digit, so (a, b) in A x B encodes as a * |B| + b.
inline FiniteAlgebra product(const std::vector<FiniteAlgebra>& algs) {
  if (algs.empty())
    throw InputError("product: empty factor list (use trivial_algebra)");
  const Signature& sig = algs[0].sig;
  for (const auto& a : algs)
    if (!(a.sig == sig)) throw InputError("product: signature mismatch");

  std::size_t n = 1;
  for (const auto& a : algs) {
    if (a.size != 0 && n > budget().max_universe / a.size + 1)
      guard_universe(std::size_t(-1), "product");
    n *= a.size;
  }
  guard_universe(n, "product");

  const std::size_t k = algs.size();
  auto decode = [&](std::size_t idx, std::vector<std::size_t>& out) {
    for (std::size_t i = k; i-- > 0;) {
      out[i] = idx % algs[i].size;
      idx /= algs[i].size;
    }
  };

  std::vector<std::vector<std::uint32_t>> tables(sig.size());
  std::vector<std::size_t> args, comp(k), acc(k);
  std::vector<std::vector<std::size_t>> arg_comps;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const std::size_t arity = sig.symbols[s].arity;
    const std::size_t rows = detail::pow_size(n, arity);
    tables[s].resize(rows);
    args.assign(arity, 0);
    arg_comps.assign(arity, std::vector<std::size_t>(k));
    for (std::size_t row = 0; row < rows; ++row) {
      std::size_t rest = row;
      for (std::size_t j = arity; j-- > 0;) {
        args[j] = rest % n;
        rest /= n;
      }
      for (std::size_t j = 0; j < arity; ++j) decode(args[j], arg_comps[j]);
      std::size_t enc = 0;
      std::vector<std::size_t> one(arity);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < arity; ++j) one[j] = arg_comps[j][i];
        enc = enc * algs[i].size + algs[i].apply(s, one);
      }
      tables[s][row] = static_cast<std::uint32_t>(enc);
    }
  }
  return FiniteAlgebra(sig, n, std::move(tables));
}

}  // namespace kspec
