#include "diffsres/symbol.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "diffsres/errors.hpp"

namespace diffsres {

struct Symbol::Data {
  std::string name;
  std::string base;
  unsigned jet = 0;
};

namespace {

struct Registry {
  std::mutex mutex;
  std::unordered_map<std::string, std::unique_ptr<Symbol::Data>> table;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_identifier(std::string_view base) {
  if (base.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(base[0])) || base[0] == '_')) return false;
  for (char c : base) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

Symbol::Symbol(std::string_view name) {
  std::size_t cut = name.size();
  while (cut > 0 && name[cut - 1] == '\'') --cut;
  std::string_view base = name.substr(0, cut);
  if (!is_identifier(base)) {
    throw Error(ErrorCode::SyntaxError, "invalid symbol name '" + std::string(name) + "'");
  }
  *this = jet(base, static_cast<unsigned>(name.size() - cut));
}

Symbol Symbol::jet(std::string_view base, unsigned order) {
  std::string name(base);
  name.append(order, '\'');
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  auto it = r.table.find(name);
  if (it != r.table.end()) return Symbol(it->second.get());
  auto data = std::make_unique<Data>(Data{name, std::string(base), order});
  const Data* raw = data.get();
  r.table.emplace(std::move(name), std::move(data));
  return Symbol(raw);
}

const std::string& Symbol::name() const { return data_->name; }
const std::string& Symbol::base() const { return data_->base; }
unsigned Symbol::jet_order() const { return data_->jet; }

Symbol Symbol::next_jet() const { return jet(data_->base, data_->jet + 1); }
Symbol Symbol::base_symbol() const { return data_->jet == 0 ? *this : jet(data_->base, 0); }

std::strong_ordering operator<=>(Symbol a, Symbol b) {
  if (a.data_ == b.data_) return std::strong_ordering::equal;
  if (!a.data_) return std::strong_ordering::less;
  if (!b.data_) return std::strong_ordering::greater;
  if (auto c = a.data_->base.compare(b.data_->base); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.data_->jet <=> b.data_->jet;
}

}  // namespace diffsres
