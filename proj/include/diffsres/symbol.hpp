#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace diffsres {

// Interned variable name. A trailing run of primes denotes a jet: "a2''" is
// the second derivative of the differential indeterminate "a2".
//
// Symbols are ordered by (base, jet order). In monomial orders the symbol that
// sorts first is the greater variable.
//
// Interning is the only mutation and is serialized internally; Symbol values
// are plain pointers to immutable data and may be shared freely across threads.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name);

  static Symbol jet(std::string_view base, unsigned order);

  const std::string& name() const;
  const std::string& base() const;
  unsigned jet_order() const;
  bool valid() const { return data_ != nullptr; }

  // Same base, jet order + 1.
  Symbol next_jet() const;
  // Same base, jet order 0.
  Symbol base_symbol() const;

  friend bool operator==(Symbol a, Symbol b) { return a.data_ == b.data_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b);

  std::size_t hash() const { return std::hash<const void*>{}(data_); }

 // Opaque interned record.
  struct Data;

 private:
  explicit Symbol(const Data* d) : data_(d) {}
  const Data* data_ = nullptr;
};

bool is_identifier(std::string_view base);

}  // namespace diffsres

template <>
struct std::hash<diffsres::Symbol> {
  std::size_t operator()(diffsres::Symbol s) const noexcept { return s.hash(); }
};
